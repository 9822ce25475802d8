fn main() {
    std::process::exit(su21::verifier::cli(std::env::args_os()));
}
