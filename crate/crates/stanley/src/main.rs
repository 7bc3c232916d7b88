fn main() {
    std::process::exit(stanley::cli::run(std::env::args_os()));
}
