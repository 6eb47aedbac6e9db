fn main() {
    std::process::exit(galenum::cli::run(std::env::args_os()));
}
