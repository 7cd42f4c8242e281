fn main() {
    let (out, code) = hindman_lab::cli::run(std::env::args_os().skip(1));
    print!("{out}");
    std::process::exit(code);
}
