fn main() {
    let (code, out) = stackc::run_command(std::env::args_os());
    if code == stackc::USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
