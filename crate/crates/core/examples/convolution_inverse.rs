//! A three-dimensional biFrobenius algebra where id has a convolution
//! inverse that differs from S.

use bifrob::algcoalg::{convolution_inverse, ConvolutionInverse};
use bifrob::cli::format_element;
use bifrob::{fixtures, FieldSpec, LinearEndo};

fn main() {
    let field = FieldSpec::rationals();
    let ex = fixtures::nonsbf3(field).expect("char 0 is allowed");
    let b = ex.fixture.build().expect("builds");
    let basis = b.algebra().basis_names();

    let id = LinearEndo::identity(field, b.dim());
    let ConvolutionInverse::TwoSided(sigma) = convolution_inverse(b.coalgebra(), b.algebra(), &id) else {
        panic!("id should be convolution invertible here");
    };
    for j in 0..b.dim() {
        println!(
            "{:>2}: S = {:<12} Sigma = {}",
            basis[j],
            format_element(&b.antipode().image(j), basis),
            format_element(&sigma.image(j), basis)
        );
    }
    println!("Sigma == S: {}", &sigma == b.antipode());

    // Over F_3 the same constants still form a biFrobenius algebra, but id
    // is no longer invertible.
    let f3 = FieldSpec::prime(3).unwrap();
    let text = bifrob::cli::emit_fixture("nonsbf3", field).unwrap();
    let input = bifrob::file::parse(&text).unwrap().load(Some(3)).unwrap();
    let id3 = LinearEndo::identity(f3, input.algebra.dim());
    let inv3 = convolution_inverse(&input.coalgebra, &input.algebra, &id3);
    println!("over F_3: invertible = {}", inv3.inverse().is_some());
}
