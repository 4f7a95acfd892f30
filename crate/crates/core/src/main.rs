use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = {
        let mut out = stdout.lock();
        let mut err = stderr.lock();
        let code = isr1::cli::run(std::env::args_os(), &mut out, &mut err);
        let _ = out.flush();
        code
    };
    std::process::exit(code);
}
