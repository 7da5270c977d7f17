use std::process::exit;

fn main() {
    exit(curvecert_cli::run_cli(std::env::args_os()));
}
