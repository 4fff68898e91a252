use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = mullineux_cli::run(std::env::args_os());
    if !out.is_empty() {
        if out.ends_with('\n') {
            print!("{out}");
        } else {
            println!("{out}");
        }
    }
    ExitCode::from(code as u8)
}
