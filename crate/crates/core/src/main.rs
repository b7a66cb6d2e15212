fn main() {
    std::process::exit(pedallab::cli::main_with_args(std::env::args_os()));
}
