use std::process::ExitCode;

fn main() -> ExitCode {
    prop_rewriter::cli::main()
}
