fn main() {
    std::process::exit(qaovar::cli::run(std::env::args_os()));
}
