fn main() {
    std::process::exit(actlog::cli::main());
}
