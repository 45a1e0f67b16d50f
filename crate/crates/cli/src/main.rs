fn main() {
    std::process::exit(syzcalc::main_with(std::env::args_os()));
}
