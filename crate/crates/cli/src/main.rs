fn main() {
    std::process::exit(vecq_cli::run());
}
