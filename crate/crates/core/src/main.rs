fn main() {
    let code = tn_spectrum::cli::run(std::env::args_os());
    std::process::exit(code);
}
