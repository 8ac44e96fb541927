fn main() {
    std::process::exit(altdes::cli::run(std::env::args_os()));
}
