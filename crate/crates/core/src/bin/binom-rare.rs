fn main() -> std::process::ExitCode {
    binom_rare::cli::run()
}
