fn main() {
    std::process::exit(fincat::cli::main());
}
