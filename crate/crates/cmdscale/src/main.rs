fn main() {
    std::process::exit(cmdscale::cli::main());
}
