fn main() {
    std::process::exit(fincat::cli::main_entry(std::env::args()));
}
