fn main() {
    std::process::exit(codezeta::cli::run());
}
