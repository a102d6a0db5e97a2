//! Trace formulas, the `S ⋆ id = id ⋆ S = uε` condition, modularity and the
//! collapse of the Nakayama maps when `a = 1` and `α = ε`.

use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::report::VerificationReport;

use super::BiFrobeniusAlgebra;

/// `tr(S²)` next to its two closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceS2 {
    pub trace: Scalar,
    /// `φ((S ⋆ id)(t))`, equal to the trace in every biFrobenius algebra.
    pub phi_of_convolution: Scalar,
    /// `ε(t) φ(1)`, equal to the trace when `S ⋆ id = id ⋆ S = uε`.
    pub eps_t_phi_one: Scalar,
}

pub fn trace_s2(b: &BiFrobeniusAlgebra) -> TraceS2 {
    let s = b.antipode();
    let t = b.integral();
    TraceS2 {
        trace: s.pow(2).trace(),
        phi_of_convolution: b.phi(&b.convolve_at(s, &b.identity(), t)),
        eps_t_phi_one: b.eps(t) * b.phi(&b.one()),
    }
}

/// Traces of the Nakayama maps and of the identity, each beside the value
/// predicted from the integrals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNakayama {
    pub trace_nakayama: Scalar,
    /// `(φ ∘ S̄)((S ⋆ id)(t))`
    pub nakayama_formula: Scalar,
    pub trace_conakayama: Scalar,
    /// `(φ ∘ S̄)((id ⋆ S)(t))`
    pub conakayama_formula: Scalar,
    /// `dim(H) · 1` in the ground field (may vanish in characteristic p).
    pub dimension: Scalar,
    /// `φ((id ⋆ S̄)(t))`
    pub dimension_formula: Scalar,
}

pub fn trace_nakayama(b: &BiFrobeniusAlgebra) -> TraceNakayama {
    let s = b.antipode();
    let sbar = b.antipode_inverse();
    let id = b.identity();
    let t = b.integral();
    let phi_sbar = b.cointegral().compose(sbar);
    TraceNakayama {
        trace_nakayama: b.nakayama().trace(),
        nakayama_formula: phi_sbar.apply(&b.convolve_at(s, &id, t)),
        trace_conakayama: b.conakayama().trace(),
        conakayama_formula: phi_sbar.apply(&b.convolve_at(&id, s, t)),
        dimension: b.field().from_i64(b.dim() as i64),
        dimension_formula: b.phi(&b.convolve_at(&id, sbar, t)),
    }
}

pub fn is_sbf(b: &BiFrobeniusAlgebra) -> bool {
    let id = b.identity();
    let ue = b.unit_counit();
    b.convolve(b.antipode(), &id) == ue && b.convolve(&id, b.antipode()) == ue
}

/// Whether the modular data are trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modularity {
    /// `a = 1`
    pub unimodular: bool,
    /// `α = ε`
    pub counimodular: bool,
}

pub fn modularity(b: &BiFrobeniusAlgebra) -> Modularity {
    Modularity {
        unimodular: b.modular_element() == b.one().as_slice(),
        counimodular: b.modular_function() == &b.coalgebra().counit_form(),
    }
}

/// `tr(S²) = φ((S ⋆ id)(t))` always, `= ε(t) φ(1)` when of type S, and the
/// three Nakayama/identity trace formulas.
pub fn trace_report(b: &BiFrobeniusAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let s2 = trace_s2(b);
    r.check_eq(
        "trace.antipode_square",
        vec![],
        s2.trace.clone(),
        s2.phi_of_convolution.clone(),
    );
    if is_sbf(b) {
        r.check_eq("trace.antipode_square_sbf", vec![], s2.trace, s2.eps_t_phi_one);
    } else {
        r.skip("trace.antipode_square_sbf", "S is not the convolution inverse of id");
    }
    let tn = trace_nakayama(b);
    r.check_eq("trace.conakayama", vec![], tn.trace_conakayama, tn.conakayama_formula);
    r.check_eq("trace.nakayama", vec![], tn.trace_nakayama, tn.nakayama_formula);
    r.check_eq("trace.dimension", vec![], tn.dimension, tn.dimension_formula);
    r
}

/// `Σ (S t₂) t₁` and whether it equals `ε(t) 1`.
pub fn contracted_integral_condition(b: &BiFrobeniusAlgebra) -> (bool, Vec<Scalar>) {
    let value = b.sweedler(b.integral(), |t1, t2| b.mul(&b.s(t2), t1));
    let target: Vec<Scalar> = b.one().iter().map(|u| u * &b.eps(b.integral())).collect();
    (value == target, value)
}

/// The equalities forced by `a = 1` and `α = ε`: `N = ᶜN = S² = S̄²`,
/// `N² = id`, `S t = t`, `φ ∘ S = φ`, the symmetries of `Δ(t)` and the
/// chain of six equal expressions built from `Δ(t)`.
pub fn collapse_report(b: &BiFrobeniusAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let m = modularity(b);
    if !(m.unimodular && m.counimodular) {
        r.skip("collapse", "requires a = 1 and alpha = epsilon");
        return r;
    }
    let s = b.antipode();
    let sbar = b.antipode_inverse();
    let s2 = s.pow(2);
    let nak = b.nakayama();
    let t = b.integral();
    let id = b.identity();

    r.check_eq("collapse.nakayama_is_conakayama", vec![], nak.clone(), b.conakayama().clone());
    r.check_eq("collapse.conakayama_is_antipode_square", vec![], b.conakayama().clone(), s2.clone());
    r.check_eq("collapse.antipode_square_is_inverse_square", vec![], s2, sbar.pow(2));
    r.check_eq("collapse.nakayama_involution", vec![], nak.pow(2), id.clone());
    r.check_eq("collapse.antipode_fixes_t", vec![], b.s(t), t.to_vec());
    r.check_eq(
        "collapse.cointegral_antipode_invariant",
        vec![],
        b.cointegral().compose(s).0,
        b.cointegral().0.clone(),
    );

    // Δ(t) = Σ T_ij e_i ⊗ e_j; swapping factors transposes T.
    let dt = b.delta(t);
    let dt_swapped = dt.transpose();
    let (sm, sbm, nm) = (s.matrix(), sbar.matrix(), nak.matrix());
    let prod = |x: &Matrix, y: &Matrix| x.mul(y).expect("square");
    // Σ S t₂ ⊗ S t₁ = Σ t₁ ⊗ t₂
    r.check_eq(
        "collapse.integral_coproduct_antipode_swap",
        vec![],
        prod(&prod(sm, &dt_swapped), &sm.transpose()),
        dt.clone(),
    );
    // Σ t₂ ⊗ S t₁ = Σ S̄ t₁ ⊗ t₂
    r.check_eq(
        "collapse.integral_coproduct_mixed",
        vec![],
        prod(&dt_swapped, &sm.transpose()),
        prod(sbm, &dt),
    );
    // Σ N t₂ ⊗ t₁ = Σ t₁ ⊗ t₂
    r.check_eq(
        "collapse.integral_coproduct_nakayama",
        vec![],
        prod(nm, &dt_swapped),
        dt.clone(),
    );
    // Σ S t₂ ⊗ t₁ = Σ S̄ t₁ ⊗ t₂
    r.check_eq(
        "collapse.integral_coproduct_antipode_inverse",
        vec![],
        prod(sm, &dt_swapped),
        prod(sbm, &dt),
    );

    let chain = [
        b.convolve_at(&id, sbar, t),
        b.convolve_at(sbar, &id, t),
        b.sweedler(t, |t1, t2| b.mul(&b.s(t2), t1)),
        b.sweedler(t, |t1, t2| b.mul(t2, &b.s(t1))),
        b.sweedler(t, |t1, t2| b.mul(&b.sbar(t1), t2)),
        b.sweedler(t, |t1, t2| b.mul(t1, &b.sbar(t2))),
    ];
    r.scan(
        "collapse.integral_chain",
        (1..chain.len()).map(|k| (vec![0, k], chain[0].clone(), chain[k].clone())),
    );
    r
}
