//! Radford's formula S^4(x) = a (alpha^-1 -> x <- alpha) a^-1, shown on
//! Sweedler's four-dimensional Hopf algebra where a and alpha are
//! nontrivial.

use bifrob::bifrob::{modularity, radford_check};
use bifrob::cli::format_element;
use bifrob::file::parse;
use bifrob::BiFrobeniusAlgebra;

const SWEEDLER: &str = include_str!("../tests/data/sweedler4.json");

fn main() {
    let input = parse(SWEEDLER).unwrap().load(None).unwrap();
    // no integrals in the file: both are solved for
    let b = BiFrobeniusAlgebra::build(input.algebra, input.coalgebra, None, None).unwrap();
    let basis = b.algebra().basis_names();

    println!("t = {}", format_element(b.integral(), basis));
    println!("a = {}", format_element(b.modular_element(), basis));
    println!("alpha = {:?}", b.modular_function().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let m = modularity(&b);
    println!("unimodular: {}, counimodular: {}", m.unimodular, m.counimodular);

    let s4 = b.antipode().pow(4);
    for j in 0..b.dim() {
        println!("S^4({}) = {}", basis[j], format_element(&s4.image(j), basis));
    }
    for e in &radford_check(&b).entries {
        println!("{:<40} {:?}", e.id, e.outcome);
    }
}
