use std::process::ExitCode;

fn main() -> ExitCode {
    exotic_orbits::cli::main()
}
