fn main() {
    std::process::exit(permarray::cli::run(std::env::args_os()));
}
