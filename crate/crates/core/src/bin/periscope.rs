fn main() {
    std::process::exit(periscope::cli::run(std::env::args_os()));
}
