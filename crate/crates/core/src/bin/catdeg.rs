use std::io;

fn main() {
    catdeg::cli::configure_threads();
    let code = catdeg::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
