fn main() {
    std::process::exit(binsum::cli::run(std::env::args()));
}
