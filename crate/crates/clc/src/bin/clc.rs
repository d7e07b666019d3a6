fn main() {
    std::process::exit(clc::cli::main());
}
