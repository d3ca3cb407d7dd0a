fn main() {
    std::process::exit(abelian_ideals::cli::run(std::env::args_os()));
}
