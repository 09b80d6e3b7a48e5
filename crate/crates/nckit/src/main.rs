fn main() {
    std::process::exit(nckit::cli::run());
}
