fn main() {
    std::process::exit(qasa::cli::main_entry());
}
