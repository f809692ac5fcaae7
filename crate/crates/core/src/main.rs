fn main() {
    let (code, out) = wldim::cli::run(std::env::args_os());
    if code == wldim::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
