fn main() {
    std::process::exit(ternions::cli::run_cli(std::env::args_os()));
}
