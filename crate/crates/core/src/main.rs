fn main() {
    std::process::exit(wsc_core::cli::main_with_args(std::env::args_os()));
}
