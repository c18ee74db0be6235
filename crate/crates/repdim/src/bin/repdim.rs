fn main() {
    std::process::exit(repdim::cli::run(std::env::args()));
}
