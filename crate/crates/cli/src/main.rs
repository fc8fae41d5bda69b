fn main() {
    std::process::exit(cuspidal_cli::main_with(std::env::args().collect()));
}
