fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let code = hopfkit::cli::run_command(&args, &mut out);
    drop(out);
    std::process::exit(code);
}
