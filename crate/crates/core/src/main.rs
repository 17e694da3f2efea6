fn main() {
    std::process::exit(zetalab::cli::main_with_args(std::env::args_os()));
}
