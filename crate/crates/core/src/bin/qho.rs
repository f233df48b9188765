fn main() {
    std::process::exit(qho_coherent::cli::run(std::env::args_os()));
}
