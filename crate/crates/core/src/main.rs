fn main() -> std::process::ExitCode {
    dfilab::cli::main_entry()
}
