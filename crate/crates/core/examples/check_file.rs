//! Runs the full verification on an algebra file.
//!
//!     cargo run --example check_file -- path/to/algebra.json
//!
//! Without an argument the emitted c4 fixture is checked.

use bifrob::cli::{check_source, emit_fixture, InputOptions};
use bifrob::FieldSpec;

fn main() {
    let bytes = match std::env::args().nth(1) {
        Some(path) => std::fs::read(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => emit_fixture("c4", FieldSpec::rationals()).unwrap().into_bytes(),
    };
    let out = check_source(&bytes, &InputOptions::default());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
