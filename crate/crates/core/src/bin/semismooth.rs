fn main() {
    std::process::exit(semismooth::cli::main());
}
