fn main() {
    std::process::exit(linesum::cli::run(std::env::args_os()));
}
