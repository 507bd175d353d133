use std::process::ExitCode;

fn main() -> ExitCode {
    let result = dupcodes::cli::run(std::env::args_os());
    // reports of commands that ran go to stdout, usage errors to stderr
    if result.status == 0 || result.machine.is_some() {
        print!("{}", result.report);
    } else {
        eprint!("{}", result.report);
    }
    ExitCode::from(result.status as u8)
}
