fn main() {
    std::process::exit(cnn_spread::cli::run());
}
