fn main() {
    std::process::exit(csl4::run(std::env::args()));
}
