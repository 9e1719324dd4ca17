fn main() {
    std::process::exit(stefan_mushy::cli::run(std::env::args()));
}
