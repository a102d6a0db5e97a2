//! k[X]/(X^4) with the divided-power coproduct: S = id, yet the algebra is
//! neither semisimple nor cosemisimple.

use bifrob::bifrob::{semisimplicity_report, trace_s2};
use bifrob::{fixtures, FieldSpec};

fn main() {
    let fx = fixtures::b4(FieldSpec::rationals());
    let b = fx.build().expect("b4 is biFrobenius");

    println!("basis: {:?}", b.algebra().basis_names());
    println!("S is the identity: {}", b.antipode().is_identity());
    let tr = trace_s2(&b);
    println!("tr(S^2) = {}, phi((S*id)(t)) = {}", tr.trace, tr.phi_of_convolution);

    let ss = semisimplicity_report(&b);
    println!("eps(t) = {}, phi(1) = {}", ss.eps_t, ss.phi_one);
    println!("semisimple: {}, cosemisimple: {}", ss.semisimple.as_str(), ss.cosemisimple.as_str());
    println!("S * id = id * S = u eps: {}", b.is_sbf());
}
