//! Identities valid in every biFrobenius algebra, checked exhaustively on
//! basis elements (and basis pairs for two-variable identities).

use crate::algcoalg::{
    self, act_h_on_dual_left, act_h_on_dual_right, pairs, LinearEndo, LinearForm,
};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::report::VerificationReport;

use super::{left_cointegral_space, left_integral_space, BiFrobeniusAlgebra};

fn sc(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `T M Tᵀ`: pushes a two-tensor forward along `T ⊗ T`.
fn push(t: &Matrix, m: &Matrix) -> Matrix {
    t.mul(m).and_then(|x| x.mul(&t.transpose())).expect("square")
}

/// Is `v` a scalar multiple of `span`'s single basis vector?
fn spans(space: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    match space {
        [b] => {
            let Some(p) = b.iter().position(|x| !x.is_zero()) else {
                return false;
            };
            let c = v[p].div(&b[p]);
            !c.is_zero() && b.iter().zip(v).all(|(x, y)| &(x * &c) == y)
        }
        _ => false,
    }
}

/// Everything from the structure theory of biFrobenius algebras: integrals
/// and normalization, the antipode factorization, the five Frobenius-type
/// formulas, modular data, multiplicativity of `a` and `α`, the Nakayama
/// and coNakayama characterizations, and the scalar identities.
pub fn verify_core_identities(b: &BiFrobeniusAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    integrals_and_normalization(b, &mut r);
    antipode_structure(b, &mut r);
    frobenius_formulas(b, &mut r);
    modular_data(b, &mut r);
    nakayama_maps(b, &mut r);
    r
}

fn integrals_and_normalization(b: &BiFrobeniusAlgebra, r: &mut VerificationReport) {
    let n = b.dim();
    let t = b.integral();
    let one = b.one();
    let field = b.field();

    r.check_eq(
        "unit.grouplike",
        vec![],
        algcoalg::is_grouplike(b.coalgebra(), &one),
        true,
    );
    r.scan(
        "counit.algebra_morphism",
        pairs(n).map(|(i, j)| {
            (
                vec![i, j],
                b.eps(&b.mul(&b.e(i), &b.e(j))),
                b.eps(&b.e(i)) * b.eps(&b.e(j)),
            )
        }),
    );
    r.scan(
        "integral.right",
        (0..n).map(|x| (vec![x], b.mul(t, &b.e(x)), sc(&b.eps(&b.e(x)), t))),
    );
    r.scan(
        "cointegral.right",
        (0..n).map(|x| {
            (
                vec![x],
                sc(&b.phi(&b.e(x)), &one),
                b.hit_right(&b.e(x), b.cointegral()),
            )
        }),
    );
    r.check_eq("normalization.phi_of_t", vec![], b.phi(t), field.one());
    r.check_eq(
        "normalization.t_hit_by_phi",
        vec![],
        b.hit_right(t, b.cointegral()),
        one.clone(),
    );
    r.check_eq(
        "normalization.phi_hit_by_t",
        vec![],
        act_h_on_dual_right(b.algebra(), b.cointegral(), t).0,
        b.coalgebra().counit_vector().to_vec(),
    );
}

fn antipode_structure(b: &BiFrobeniusAlgebra, r: &mut VerificationReport) {
    let s = b.antipode();
    let sbar = b.antipode_inverse();
    let id = b.identity();

    let composite = b
        .cofrobenius_map()
        .mul(b.frobenius_map())
        .expect("square");
    r.check_eq(
        "antipode.factorization",
        vec![],
        s.matrix().clone(),
        composite,
    );
    r.check_eq("antipode.right_inverse", vec![], s.compose(sbar), id.clone());
    r.check_eq("antipode.left_inverse", vec![], sbar.compose(s), id);
    r.check_eq("antipode.unit", vec![], b.s(&b.one()), b.one());
    r.check_eq(
        "antipode.counit",
        vec![],
        b.coalgebra().counit_form().compose(s).0,
        b.coalgebra().counit_vector().to_vec(),
    );
    r.require("antipode.algebra_antimorphism", algcoalg::algebra_antimorphism_witness(b.algebra(), s));
    r.require("antipode.coalgebra_antimorphism", algcoalg::coalgebra_antimorphism_witness(b.coalgebra(), s));
}

fn frobenius_formulas(b: &BiFrobeniusAlgebra, r: &mut VerificationReport) {
    let n = b.dim();
    let t = b.integral();
    let a = b.modular_element();
    let a_inv = b.modular_element_inverse();
    let alpha = b.modular_function();
    let alpha_inv = b.modular_function_inverse();
    let sbar2 = b.antipode_inverse().pow(2);

    // x = Σ φ(t₁ x) S̄(t₂)
    r.scan(
        "frobenius.recover_element",
        (0..n).map(|x| {
            let ex = b.e(x);
            let rhs = b.sweedler(t, |t1, t2| sc(&b.phi(&b.mul(t1, &ex)), &b.sbar(t2)));
            (vec![x], ex, rhs)
        }),
    );
    // Σ φ(y₁ x) y₂ = Σ φ(y x₁) S(x₂)
    r.scan(
        "frobenius.exchange",
        pairs(n).map(|(x, y)| {
            let (ex, ey) = (b.e(x), b.e(y));
            let lhs = b.sweedler(&ey, |y1, y2| sc(&b.phi(&b.mul(y1, &ex)), y2));
            let rhs = b.sweedler(&ex, |x1, x2| sc(&b.phi(&b.mul(&ey, x1)), &b.s(x2)));
            (vec![x, y], lhs, rhs)
        }),
    );
    // Σ φ(x y₂) y₁ = Σ φ(x₂ y) S(x₁) a
    r.scan(
        "frobenius.twisted_exchange",
        pairs(n).map(|(x, y)| {
            let (ex, ey) = (b.e(x), b.e(y));
            let lhs = b.sweedler(&ey, |y1, y2| sc(&b.phi(&b.mul(&ex, y2)), y1));
            let rhs = b.sweedler(&ex, |x1, x2| {
                sc(&b.phi(&b.mul(x2, &ey)), &b.mul(&b.s(x1), a))
            });
            (vec![x, y], lhs, rhs)
        }),
    );
    // S(α ⇀ x) a = Σ φ(x t₂) t₁
    r.scan(
        "frobenius.modular_antipode",
        (0..n).map(|x| {
            let ex = b.e(x);
            let lhs = b.mul(&b.s(&b.hit(alpha, &ex)), a);
            let rhs = b.sweedler(t, |t1, t2| sc(&b.phi(&b.mul(&ex, t2)), t1));
            (vec![x], lhs, rhs)
        }),
    );
    // a S̄(x) = Σ φ(t₂ x) t₁
    r.scan(
        "frobenius.modular_inverse_antipode",
        (0..n).map(|x| {
            let ex = b.e(x);
            let lhs = b.mul(a, &b.sbar(&ex));
            let rhs = b.sweedler(t, |t1, t2| sc(&b.phi(&b.mul(t2, &ex)), t1));
            (vec![x], lhs, rhs)
        }),
    );
    // Σ φ(S(t₁) x) t₂ = α(a) S̄²(α⁻¹ ⇀ x) a⁻¹
    let alpha_a = alpha.apply(a);
    r.scan(
        "frobenius.antipode_square",
        (0..n).map(|x| {
            let ex = b.e(x);
            let lhs = b.sweedler(t, |t1, t2| sc(&b.phi(&b.mul(&b.s(t1), &ex)), t2));
            let rhs = sc(&alpha_a, &b.mul(&sbar2.apply(&b.hit(alpha_inv, &ex)), a_inv));
            (vec![x], lhs, rhs)
        }),
    );
    // (c_φ ∘ ₜc)(γ)(x) = γ(S(α ⇀ x) a), γ over the dual basis
    let composite = b
        .frobenius_map()
        .mul(b.cofrobenius_map())
        .expect("square");
    r.scan(
        "frobenius.composite",
        pairs(n).map(|(g, x)| {
            let rhs = b.mul(&b.s(&b.hit(alpha, &b.e(x))), a)[g].clone();
            (vec![g, x], composite.get(x, g).clone(), rhs)
        }),
    );
}

fn modular_data(b: &BiFrobeniusAlgebra, r: &mut VerificationReport) {
    let n = b.dim();
    let field = b.field();
    let t = b.integral();
    let phi = b.cointegral();
    let a = b.modular_element();
    let a_inv = b.modular_element_inverse();
    let alpha = b.modular_function();
    let alpha_inv = b.modular_function_inverse();
    let s_elt = b.left_integral();
    let lambda = b.left_cointegral();
    let one = b.one();
    let eps = b.coalgebra().counit_form();

    r.require("modular.element_grouplike", algcoalg::grouplike_witness(b.coalgebra(), a));
    r.require("modular.function_algebra_morphism", algcoalg::algebra_morphism_witness(b.algebra(), alpha));
    r.check_eq("modular.element_inverse", vec![], b.mul(a, a_inv), one.clone());
    let conv = b.coalgebra().dual_algebra().mul(&alpha.0, &alpha_inv.0);
    r.check_eq("modular.function_inverse", vec![], conv, eps.0.clone());
    r.check_eq("modular.antipode_of_element", vec![], b.s(a), a_inv.to_vec());
    r.check_eq(
        "modular.function_after_antipode",
        vec![],
        alpha.compose(b.antipode()).0,
        alpha_inv.0.clone(),
    );
    r.check_eq(
        "modular.element_hits_cointegral",
        vec![],
        sc(&alpha.apply(a), &act_h_on_dual_left(b.algebra(), a, phi).0),
        lambda.0.clone(),
    );

    // s = S t: left integral, and s x = α⁻¹(x) s
    r.scan(
        "left_integral.left",
        (0..n).map(|x| (vec![x], b.mul(&b.e(x), s_elt), sc(&b.eps(&b.e(x)), s_elt))),
    );
    r.scan(
        "left_integral.right_character",
        (0..n).map(|x| {
            (
                vec![x],
                b.mul(s_elt, &b.e(x)),
                sc(&alpha_inv.apply(&b.e(x)), s_elt),
            )
        }),
    );
    // λ = φ ∘ S: left cointegral, and λ(x) a⁻¹ = Σ λ(x₁) x₂
    r.scan(
        "left_cointegral.left",
        (0..n).map(|x| {
            let ex = b.e(x);
            (vec![x], b.hit(lambda, &ex), sc(&lambda.apply(&ex), &one))
        }),
    );
    r.scan(
        "left_cointegral.right_character",
        (0..n).map(|x| {
            let ex = b.e(x);
            (vec![x], sc(&lambda.apply(&ex), a_inv), b.hit_right(&ex, lambda))
        }),
    );
    r.check_eq(
        "left_integral.matches_solved_space",
        vec![],
        spans(&left_integral_space(b.algebra(), b.coalgebra()), s_elt),
        true,
    );
    let lambda_space: Vec<Vec<Scalar>> = left_cointegral_space(b.algebra(), b.coalgebra())
        .into_iter()
        .map(|f| f.0)
        .collect();
    r.check_eq(
        "left_cointegral.matches_solved_space",
        vec![],
        spans(&lambda_space, &lambda.0),
        true,
    );

    // φ(St) = λ(t) = φ(s) = α(a)
    let alpha_a = alpha.apply(a);
    r.check_eq("scalars.phi_of_antipode_t", vec![], b.phi(&b.s(t)), alpha_a.clone());
    r.check_eq("scalars.lambda_of_t", vec![], lambda.apply(t), alpha_a.clone());
    r.check_eq("scalars.phi_of_s", vec![], b.phi(s_elt), alpha_a.clone());
    r.check_eq(
        "scalars.alpha_of_a_invertible",
        vec![],
        &alpha_a * &alpha_inv.apply(a),
        field.one(),
    );

    // x ↦ a x and x ↦ x a commute with Δ
    let left_a = b.algebra().left_mul_matrix(a);
    let right_a = b.algebra().right_mul_matrix(a);
    r.scan(
        "coalgebra.left_multiplication_by_a",
        (0..n).map(|x| {
            (
                vec![x],
                b.delta(&b.mul(a, &b.e(x))),
                push(&left_a, &b.delta(&b.e(x))),
            )
        }),
    );
    r.scan(
        "coalgebra.right_multiplication_by_a",
        (0..n).map(|x| {
            (
                vec![x],
                b.delta(&b.mul(&b.e(x), a)),
                push(&right_a, &b.delta(&b.e(x))),
            )
        }),
    );
    // x ↦ x ↼ α and x ↦ α ⇀ x are multiplicative
    r.scan(
        "algebra.right_hit_by_alpha",
        pairs(n).map(|(x, y)| {
            let (ex, ey) = (b.e(x), b.e(y));
            (
                vec![x, y],
                b.hit_right(&b.mul(&ex, &ey), alpha),
                b.mul(&b.hit_right(&ex, alpha), &b.hit_right(&ey, alpha)),
            )
        }),
    );
    r.scan(
        "algebra.left_hit_by_alpha",
        pairs(n).map(|(x, y)| {
            let (ex, ey) = (b.e(x), b.e(y));
            (
                vec![x, y],
                b.hit(alpha, &b.mul(&ex, &ey)),
                b.mul(&b.hit(alpha, &ex), &b.hit(alpha, &ey)),
            )
        }),
    );
}

fn nakayama_maps(b: &BiFrobeniusAlgebra, r: &mut VerificationReport) {
    let n = b.dim();
    let t = b.integral();
    let phi = b.cointegral();
    let nak = b.nakayama();
    let cnak = b.conakayama();
    let a = b.modular_element();
    let a_inv = b.modular_element_inverse();
    let alpha = b.modular_function();
    let s2 = b.antipode().pow(2);
    let sbar2 = b.antipode_inverse().pow(2);
    let delta_t = b.delta(t);

    // φ(x y) = φ(y N(x)), and its harpoon form φ ↼ x = N(x) ⇀ φ
    r.scan(
        "nakayama.defining_relation",
        pairs(n).map(|(x, y)| {
            (
                vec![x, y],
                b.phi(&b.mul(&b.e(x), &b.e(y))),
                b.phi(&b.mul(&b.e(y), &nak.image(x))),
            )
        }),
    );
    r.scan(
        "nakayama.harpoon_form",
        (0..n).map(|x| {
            (
                vec![x],
                act_h_on_dual_right(b.algebra(), phi, &b.e(x)).0,
                act_h_on_dual_left(b.algebra(), &nak.image(x), phi).0,
            )
        }),
    );
    // Σ ᶜN(t₂) ⊗ t₁ = Σ t₁ ⊗ t₂, and t ↼ f = (f ∘ ᶜN) ⇀ t
    r.check_eq(
        "conakayama.defining_relation",
        vec![],
        cnak.matrix().mul(&delta_t.transpose()).expect("square"),
        delta_t.clone(),
    );
    r.scan(
        "conakayama.harpoon_form",
        (0..n).map(|i| {
            let f = LinearForm::dual_basis(b.field(), n, i);
            (vec![i], b.hit_right(t, &f), b.hit(&f.compose(cnak), t))
        }),
    );
    r.require("nakayama.algebra_automorphism", algcoalg::algebra_morphism_endo_witness(b.algebra(), nak));
    r.check_eq("nakayama.bijective", vec![], nak.inverse().is_some(), true);
    r.require("conakayama.coalgebra_automorphism", algcoalg::coalgebra_morphism_witness(b.coalgebra(), cnak));
    r.check_eq("conakayama.bijective", vec![], cnak.inverse().is_some(), true);
    // ᶜN(x) = a S̄²(x)
    r.scan(
        "conakayama.formula",
        (0..n).map(|x| (vec![x], cnak.image(x), b.mul(a, &sbar2.image(x)))),
    );
    // N(x) = a⁻¹ S²(α ⇀ x) a
    r.scan(
        "nakayama.formula",
        (0..n).map(|x| {
            let rhs = b.mul(&b.mul(a_inv, &s2.apply(&b.hit(alpha, &b.e(x)))), a);
            (vec![x], nak.image(x), rhs)
        }),
    );
    r.check_eq("nakayama.of_a", vec![], nak.apply(a), sc(&alpha.apply(a), a));
    r.check_eq("conakayama.of_a", vec![], cnak.apply(a), b.mul(a, a));
}

/// `S⁴(x) = a (α⁻¹ ⇀ x ↼ α) a⁻¹` on every basis element; additionally
/// `S⁴ = id` when `a = 1` and `α = ε`.
pub fn radford_check(b: &BiFrobeniusAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = b.dim();
    let s4 = b.antipode().pow(4);
    let a = b.modular_element();
    let a_inv = b.modular_element_inverse();
    let alpha = b.modular_function();
    let alpha_inv = b.modular_function_inverse();
    r.scan(
        "radford.formula",
        (0..n).map(|j| {
            let twisted = b.hit(alpha_inv, &b.hit_right(&b.e(j), alpha));
            (vec![j], s4.image(j), b.mul(&b.mul(a, &twisted), a_inv))
        }),
    );
    let m = super::modularity(b);
    if m.unimodular && m.counimodular {
        r.check_eq(
            "radford.fourth_power_trivial",
            vec![],
            s4,
            LinearEndo::identity(b.field(), n),
        );
    } else {
        r.skip(
            "radford.fourth_power_trivial",
            "requires a = 1 and alpha = epsilon",
        );
    }
    r
}
