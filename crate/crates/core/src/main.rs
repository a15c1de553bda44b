fn main() {
    std::process::exit(levisom::cli::run());
}
