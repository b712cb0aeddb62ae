fn main() {
    std::process::exit(hyperroots_cli::main_with(std::env::args_os()));
}
