fn main() {
    std::process::exit(qstrata::cli::run());
}
