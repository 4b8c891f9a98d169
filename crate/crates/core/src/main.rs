use std::io::Write;

fn main() {
    let (code, out) = s2s2::cli::run(std::env::args_os());
    let stream = if code == 1 { &mut std::io::stderr() as &mut dyn Write } else { &mut std::io::stdout() };
    let _ = stream.write_all(out.as_bytes());
    std::process::exit(code);
}
