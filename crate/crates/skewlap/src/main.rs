use std::io::{stderr, stdout};

fn main() {
    let status = skewlap::cli::run(
        std::env::args_os(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    std::process::exit(status);
}
