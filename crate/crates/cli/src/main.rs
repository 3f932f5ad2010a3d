use std::io::Write;

fn main() {
    let out = covertower_cli::run(std::env::args_os());
    // Nothing sensible to do if the terminal is gone.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.exit_code);
}
