fn main() {
    std::process::exit(gridreach::cli::run(std::env::args_os()));
}
