fn main() {
    std::process::exit(srcmetrics::cli::run_main());
}
