fn main() {
    sheafcoh::harness::configure_threads();
    std::process::exit(sheafcoh::cli::main_with_args(std::env::args_os()));
}
