fn main() {
    std::process::exit(solvgraph_cli::run());
}
