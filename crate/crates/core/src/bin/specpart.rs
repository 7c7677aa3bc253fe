fn main() {
    std::process::exit(specpart::cli::main());
}
