use std::io::Write;

fn main() {
    let (code, out) = fano_core::cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    let _ = if code == 2 {
        std::io::stderr().lock().write_all(out.as_bytes())
    } else {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush())
    };
    std::process::exit(code);
}
