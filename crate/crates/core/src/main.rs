fn main() {
    std::process::exit(kummer_brauer::cli::run(std::env::args_os()));
}
