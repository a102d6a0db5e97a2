//! Library results against the brute-force reference in `common::oracle`.

mod common;

use std::path::Path;

use bifrob::algcoalg::{convolution_inverse, ConvolutionInverse};
use bifrob::bifrob::{semisimplicity_verdict, trace_s2, Verdict};
use bifrob::file::{parse, AlgebraFile};
use bifrob::{BiFrobeniusAlgebra, LinearEndo, Scalar};

use common::built_q;
use common::oracle::{self, Raw, Vector, Q};
use num_traits::{One, Zero};

fn rat(v: &[Scalar]) -> Vector {
    v.iter().map(|c| c.as_rational().expect("rational scalar").clone()).collect()
}

fn images(m: &LinearEndo) -> Vec<Vector> {
    (0..m.dim()).map(|j| rat(&m.image(j))).collect()
}

fn raw(b: &BiFrobeniusAlgebra, f: &AlgebraFile) -> Raw {
    let mut r = Raw::from_file(f);
    r.t = rat(b.integral());
    r.phi = rat(&b.cointegral().0);
    r
}

fn unit_counit(r: &Raw) -> Vec<Vector> {
    (0..r.n).map(|j| r.unit.iter().map(|u| u * &r.counit[j]).collect()).collect()
}

fn trace_form_det_nonzero(r: &Raw) -> bool {
    let tr_left = |v: &[Q]| -> Q {
        let img: Vec<Vector> = (0..r.n).map(|j| r.mul(v, &r.e(j))).collect();
        oracle::trace(&img)
    };
    let gram: Vec<Vector> = (0..r.n)
        .map(|i| (0..r.n).map(|j| tr_left(&r.mul(&r.e(i), &r.e(j)))).collect())
        .collect();
    oracle::rank(&gram) == r.n
}

fn files() -> Vec<(String, BiFrobeniusAlgebra, AlgebraFile)> {
    built_q()
        .into_iter()
        .map(|(fx, b)| {
            let f = AlgebraFile::from_fixture(&fx);
            (fx.name().to_string(), b, f)
        })
        .collect()
}

#[test]
fn fixtures_certified_independently() {
    for (name, _, f) in files() {
        Raw::from_file(&f).certify_bf().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn derived_maps_agree() {
    for (name, b, f) in files() {
        let r = raw(&b, &f).normalized().unwrap();
        assert_eq!(images(b.antipode()), r.antipode(), "{name}: S");
        assert_eq!(rat(b.modular_element()), r.modular_element(), "{name}: a");
        assert_eq!(rat(&b.modular_function().0), r.modular_function(), "{name}: alpha");
        let s = r.antipode();
        let s2 = oracle::compose(&s, &s);
        assert_eq!(trace_s2(&b).trace.as_rational().unwrap(), &oracle::trace(&s2), "{name}: tr S^2");
    }
}

#[test]
fn antipode_is_convolution_inverse_exactly_for_sbf() {
    for (name, b, f) in files() {
        let r = raw(&b, &f).normalized().unwrap();
        let s = r.antipode();
        let id: Vec<Vector> = (0..r.n).map(|j| r.e(j)).collect();
        let sbf = r.convolve(&s, &id) == unit_counit(&r) && r.convolve(&id, &s) == unit_counit(&r);
        assert_eq!(b.is_sbf(), sbf, "{name}");
    }
}

#[test]
fn convolution_inverse_is_verified_by_convolving() {
    for (name, b, f) in files() {
        let r = raw(&b, &f);
        let id_endo = LinearEndo::identity(b.field(), b.dim());
        let id: Vec<Vector> = (0..r.n).map(|j| r.e(j)).collect();
        match convolution_inverse(b.coalgebra(), b.algebra(), &id_endo) {
            ConvolutionInverse::TwoSided(g) => {
                let g = images(&g);
                assert_eq!(r.convolve(&g, &id), unit_counit(&r), "{name}");
                assert_eq!(r.convolve(&id, &g), unit_counit(&r), "{name}");
            }
            other => panic!("{name}: id should be invertible on every fixture, got {other:?}"),
        }
    }
}

#[test]
fn semisimplicity_agrees_with_reference_trace_form() {
    for (name, b, f) in files() {
        let r = Raw::from_file(&f);
        let want = if trace_form_det_nonzero(&r) { Verdict::Yes } else { Verdict::No };
        assert_eq!(semisimplicity_verdict(b.algebra()), want, "{name}");
    }
}

#[test]
fn sweedler_values() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/sweedler4.json");
    let f = parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    let input = f.load(None).unwrap();
    let b = BiFrobeniusAlgebra::build(input.algebra, input.coalgebra, None, None).unwrap();

    let mut with_integrals = f.clone();
    with_integrals.integral = Some(b.integral().iter().map(|c| c.to_string()).collect());
    with_integrals.cointegral = Some(b.cointegral().0.iter().map(|c| c.to_string()).collect());
    let (r, s) = Raw::from_file(&with_integrals).certify_bf().unwrap();

    let q = |v: &[i64]| -> Vector { v.iter().map(|&x| Q::from_integer(x.into())).collect() };
    // basis 1, g, x, gx
    assert_eq!(s, vec![q(&[1, 0, 0, 0]), q(&[0, 1, 0, 0]), q(&[0, 0, 0, -1]), q(&[0, 0, 1, 0])]);
    assert_eq!(images(b.antipode()), s);
    assert_eq!(r.modular_element(), q(&[0, 1, 0, 0]));
    assert_eq!(r.modular_function(), q(&[1, -1, 0, 0]));
    assert_eq!(rat(b.modular_element()), r.modular_element());
    let alpha_a = oracle::dot(&r.modular_function(), &r.modular_element());
    assert_eq!(alpha_a, -Q::one());
    // φ(St) = α(a)
    let st = oracle::apply(&s, &r.t);
    assert_eq!(r.phi_of(&st), alpha_a);
    assert!(r.eps(&r.t).is_zero());
}
