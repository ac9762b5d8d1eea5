fn main() {
    std::process::exit(distvol::cli::main_entry());
}
