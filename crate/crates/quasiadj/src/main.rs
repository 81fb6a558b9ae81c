fn main() {
    std::process::exit(quasiadj::cli::run());
}
