fn main() {
    std::process::exit(cubelearn::cli::main());
}
