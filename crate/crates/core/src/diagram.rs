//! Strand diagrams for elements, as SVG or TikZ.
//!
//! Each summand gets its own panel, read bottom to top: the source level
//! sits at the bottom, and the rightmost generator of the word is drawn
//! first. Level `n` is drawn with `n + 1` strands. χᵢ crosses strands `i`
//! and `i + 1`; ∂ⱼ forks strand `j` into two; ρⱼ is a fork with a dot.

use std::fmt::Write;

use crate::algebra::{Element, GenKind, Generator, Scalar, Word};

/// Horizontal distance between strands.
pub const STRAND_SPACING: f64 = 30.0;
/// Height of one generator row.
pub const ROW_HEIGHT: f64 = 40.0;
const PANEL_GAP: f64 = 40.0;
const MARGIN: f64 = 20.0;
const LABEL_HEIGHT: f64 = 24.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramFormat {
    Svg,
    Tikz,
}

/// A straight segment from `(x0, y0)` to `(x1, y1)`, with `y` growing
/// upwards from the panel's source edge.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Segment {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

#[derive(Clone, Debug, PartialEq)]
struct Panel {
    label: String,
    width: f64,
    height: f64,
    segments: Vec<Segment>,
    dots: Vec<(f64, f64)>,
}

fn x(p: usize) -> f64 {
    p as f64 * STRAND_SPACING
}

fn row(g: &Generator, y: f64) -> (Vec<Segment>, Option<(f64, f64)>) {
    let strands = g.level() + 1;
    let top = y + ROW_HEIGHT;
    let seg = |a: usize, b: usize| Segment {
        x0: x(a),
        y0: y,
        x1: x(b),
        y1: top,
    };
    let j = g.index();
    match g.kind() {
        GenKind::Chi => {
            let segs = (0..strands)
                .map(|p| match p {
                    p if p == j => seg(j, j + 1),
                    p if p == j + 1 => seg(j + 1, j),
                    p => seg(p, p),
                })
                .collect();
            (segs, None)
        }
        GenKind::Del | GenKind::Rho => {
            let mut segs = Vec::with_capacity(strands + 1);
            for p in 0..strands {
                match p.cmp(&j) {
                    std::cmp::Ordering::Less => segs.push(seg(p, p)),
                    std::cmp::Ordering::Equal => {
                        segs.push(seg(j, j));
                        segs.push(seg(j, j + 1));
                    }
                    std::cmp::Ordering::Greater => segs.push(seg(p, p + 1)),
                }
            }
            let dot = (g.kind() == GenKind::Rho).then(|| (x(j), y));
            (segs, dot)
        }
    }
}

fn coefficient_label(c: &Scalar, first: bool) -> String {
    let s = if c.is_one() {
        String::new()
    } else if *c == Scalar::from_int(-1) {
        "-".to_string()
    } else {
        c.to_string()
    };
    if first || s.starts_with('-') {
        s
    } else {
        format!("+{s}")
    }
}

fn panel(w: &Word, label: String) -> Panel {
    let mut segments = Vec::new();
    let mut dots = Vec::new();
    let rows = w.len().max(1);
    if w.is_empty() {
        for p in 0..=w.source() {
            segments.push(Segment {
                x0: x(p),
                y0: 0.0,
                x1: x(p),
                y1: ROW_HEIGHT,
            });
        }
    }
    for (k, g) in w.gens().iter().rev().enumerate() {
        let (s, d) = row(g, k as f64 * ROW_HEIGHT);
        segments.extend(s);
        dots.extend(d);
    }
    Panel {
        label,
        width: x(w.source().max(w.target())),
        height: rows as f64 * ROW_HEIGHT,
        segments,
        dots,
    }
}

fn panels(e: &Element) -> Vec<Panel> {
    if e.is_zero() {
        return vec![Panel {
            label: "0".into(),
            width: 0.0,
            height: ROW_HEIGHT,
            segments: Vec::new(),
            dots: Vec::new(),
        }];
    }
    e.terms()
        .enumerate()
        .map(|(k, (w, c))| panel(w, coefficient_label(c, k == 0)))
        .collect()
}

/// Renders `e` in the requested format.
pub fn render(e: &Element, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Svg => render_svg(e),
        DiagramFormat::Tikz => render_tikz(e),
    }
}

pub fn render_svg(e: &Element) -> String {
    let ps = panels(e);
    let height = ps.iter().map(|p| p.height).fold(0.0, f64::max);
    let width: f64 = ps.iter().map(|p| p.width).sum::<f64>() + PANEL_GAP * (ps.len() - 1) as f64;
    let (w_total, h_total) = (width + 2.0 * MARGIN, height + 2.0 * MARGIN + LABEL_HEIGHT);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w_total}" height="{h_total}" viewBox="0 0 {w_total} {h_total}">"#
    );
    let base = MARGIN + LABEL_HEIGHT + height;
    let mut left = MARGIN;
    for p in &ps {
        let _ = writeln!(out, r#"  <g class="panel">"#);
        if !p.label.is_empty() {
            let _ = writeln!(
                out,
                r#"    <text x="{left}" y="{}" font-family="serif" font-size="14">{}</text>"#,
                MARGIN + 12.0,
                p.label
            );
        }
        for s in &p.segments {
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
                left + s.x0,
                base - s.y0,
                left + s.x1,
                base - s.y1
            );
        }
        for (dx, dy) in &p.dots {
            let _ = writeln!(out, r#"    <circle cx="{}" cy="{}" r="3" fill="black"/>"#, left + dx, base - dy);
        }
        let _ = writeln!(out, "  </g>");
        left += p.width + PANEL_GAP;
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_tikz(e: &Element) -> String {
    // TikZ units: one strand spacing is 1cm.
    let u = |v: f64| v / STRAND_SPACING;
    let ps = panels(e);
    let mut out = String::from("\\begin{tikzpicture}[line width=1pt]\n");
    let mut left = 0.0;
    for p in &ps {
        if !p.label.is_empty() {
            let _ = writeln!(
                out,
                "  \\node[anchor=east] at ({:.3},{:.3}) {{${}$}};",
                u(left) - 0.2,
                u(p.height / 2.0),
                p.label
            );
        }
        for s in &p.segments {
            let _ = writeln!(
                out,
                "  \\draw ({:.3},{:.3}) -- ({:.3},{:.3});",
                u(left + s.x0),
                u(s.y0),
                u(left + s.x1),
                u(s.y1)
            );
        }
        for (dx, dy) in &p.dots {
            let _ = writeln!(out, "  \\fill ({:.3},{:.3}) circle (2pt);", u(left + dx), u(*dy));
        }
        left += p.width + PANEL_GAP;
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;

    fn p(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn fork_has_two_inputs_three_outputs() {
        let ps = panels(&p("d[1,1]"));
        assert_eq!(ps.len(), 1);
        let bottoms: std::collections::BTreeSet<i64> = ps[0].segments.iter().map(|s| s.x0 as i64).collect();
        let tops: std::collections::BTreeSet<i64> = ps[0].segments.iter().map(|s| s.x1 as i64).collect();
        assert_eq!(bottoms.len(), 2);
        assert_eq!(tops.len(), 3);
    }

    #[test]
    fn crossing_swaps_first_two_of_three() {
        let ps = panels(&p("x[2,0]"));
        let segs = &ps[0].segments;
        assert_eq!(segs.len(), 3);
        assert_eq!((segs[0].x0, segs[0].x1), (0.0, STRAND_SPACING));
        assert_eq!((segs[1].x0, segs[1].x1), (STRAND_SPACING, 0.0));
        assert_eq!(segs[2].x0, segs[2].x1);
    }

    #[test]
    fn one_panel_per_summand() {
        let g = p("d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]");
        assert_eq!(panels(&g).len(), 3);
        let svg = render_svg(&g);
        assert_eq!(svg.matches("<g class=\"panel\">").count(), 3);
        let tikz = render_tikz(&g);
        assert!(tikz.starts_with("\\begin{tikzpicture}"));
        assert!(tikz.trim_end().ends_with("\\end{tikzpicture}"));
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(panels(&p("1[2]"))[0].segments.len(), 3);
        assert_eq!(panels(&Element::zero())[0].label, "0");
        assert!(render_svg(&Element::zero()).contains(">0</text>"));
    }
}
