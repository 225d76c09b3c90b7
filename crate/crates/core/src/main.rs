use clap::Parser;
use z2z4::cli::{run, Command};

fn main() {
    let out = run(&Command::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.status);
}
