fn main() {
    std::process::exit(quadralab::cli::main_with_args(std::env::args_os()));
}
