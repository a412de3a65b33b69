fn main() {
    std::process::exit(edgering::cli::main_exit_code());
}
