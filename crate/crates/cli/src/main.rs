fn main() {
    std::process::exit(dyon_cli::run(std::env::args_os()));
}
