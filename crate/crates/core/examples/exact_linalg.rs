//! Exact row reduction over Q and F_p.

use bifrob::linalg::{determinant, inverse, kernel_basis, rref, solve};
use bifrob::{FieldSpec, Matrix};

fn matrix(field: FieldSpec, rows: &[&[&str]]) -> Matrix {
    let rows = rows.iter().map(|r| r.iter().map(|s| field.parse(s).unwrap()).collect()).collect();
    Matrix::from_rows(field, rows).unwrap()
}

fn main() {
    let q = FieldSpec::rationals();
    let a = matrix(q, &[&["1", "2", "3"], &["2", "4", "7"], &["1/2", "1", "3/2"]]);
    let (r, pivots) = rref(&a);
    println!("A =\n{a}\nrref(A) =\n{r}\npivots {pivots:?}");
    for v in kernel_basis(&a) {
        println!("kernel vector {:?}", v.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    println!("det A = {}", determinant(&a).unwrap());

    let b = matrix(q, &[&["2", "1"], &["1", "1/3"]]);
    let binv = inverse(&b).unwrap().unwrap();
    println!("B^-1 =\n{binv}");
    let x = solve(&b, &[q.parse("1").unwrap(), q.parse("0").unwrap()]).unwrap().unwrap();
    println!("B x = e1: x = {:?}", x.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    // the same matrix is singular mod 5
    let f5 = FieldSpec::prime(5).unwrap();
    let c = matrix(f5, &[&["2", "1"], &["1", "3"]]);
    println!("over F_5: det = {}, invertible = {}", determinant(&c).unwrap(), inverse(&c).unwrap().is_some());
}
