fn main() {
    std::process::exit(lattice_trig::cli::main_with_args());
}
