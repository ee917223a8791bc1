fn main() {
    std::process::exit(p3c::cli::run(std::env::args_os()));
}
