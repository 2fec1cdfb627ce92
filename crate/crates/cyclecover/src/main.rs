fn main() {
    std::process::exit(cyclecover::cli::run(std::env::args_os()));
}
