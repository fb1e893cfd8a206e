fn main() {
    std::process::exit(cbo_hull::cli::run(std::env::args_os()));
}
