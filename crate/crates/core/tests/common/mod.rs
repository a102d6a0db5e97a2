#![allow(dead_code)]

pub mod oracle;

use bifrob::file::{AlgebraFile, SparseEntry};
use bifrob::fixtures::{self, Fixture};
use bifrob::{BiFrobeniusAlgebra, FieldSpec, Scalar};
use num_rational::BigRational;

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn s(field: FieldSpec, v: &str) -> Scalar {
    field.parse(v).unwrap()
}

pub fn vs(field: FieldSpec, v: &[&str]) -> Vec<Scalar> {
    v.iter().map(|x| s(field, x)).collect()
}

/// Every registered fixture over the rationals, paired with its build.
pub fn built_q() -> Vec<(Fixture, BiFrobeniusAlgebra)> {
    fixtures::all(q())
        .into_iter()
        .map(|fx| {
            let b = fx.build().unwrap_or_else(|e| panic!("{}: {e}", fx.name()));
            (fx, b)
        })
        .collect()
}

pub const GROUPS: [&str; 5] = ["c2", "c3", "c4", "c2xc2", "s3"];

fn plus_one(v: &str) -> String {
    let x: BigRational = bifrob::field::parse_rational(v).unwrap();
    let y = x + BigRational::from_integer(1.into());
    if y.is_integer() {
        y.numer().to_string()
    } else {
        format!("{}/{}", y.numer(), y.denom())
    }
}

fn bump_sparse(entries: &[SparseEntry], at: (usize, usize, usize)) -> Vec<SparseEntry> {
    let mut out = entries.to_vec();
    match out.iter_mut().find(|e| (e.0, e.1, e.2) == at) {
        Some(e) => e.3 = plus_one(&e.3),
        None => out.push((at.0, at.1, at.2, "1".into())),
    }
    out
}

/// Every file obtained by adding 1 to exactly one structure constant of
/// the product, coproduct, unit or counit. Integral coefficients are left
/// alone: bumping the only nonzero coordinate of `t` or `φ` rescales it.
pub fn single_corruptions(f: &AlgebraFile) -> Vec<(String, AlgebraFile)> {
    let n = f.dim;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut g = f.clone();
                g.mul = bump_sparse(&f.mul, (i, j, k));
                out.push((format!("mul[{i}][{j}][{k}]"), g));
                let mut g = f.clone();
                g.comul = bump_sparse(&f.comul, (i, j, k));
                out.push((format!("comul[{i}][{j}][{k}]"), g));
            }
        }
    }
    for i in 0..n {
        let mut g = f.clone();
        g.unit[i] = plus_one(&g.unit[i]);
        out.push((format!("unit[{i}]"), g));
        let mut g = f.clone();
        g.counit[i] = plus_one(&g.counit[i]);
        out.push((format!("counit[{i}]"), g));
    }
    out
}
