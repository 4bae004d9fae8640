use std::io;

fn main() {
    let out = io::stdout();
    let err = io::stderr();
    let code = laspa_cli::run(std::env::args(), &mut out.lock(), &mut err.lock());
    std::process::exit(code);
}
