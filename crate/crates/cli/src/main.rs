fn main() {
    std::process::exit(rainbow_cli::run(std::env::args_os()));
}
