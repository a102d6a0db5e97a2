//! biFrobenius structures: integrals, the antipode, modular data and the
//! Nakayama maps, plus the identity checks that hold in every such algebra.
//!
//! Conventions (all maps act on coordinate vectors in the common basis):
//!
//! * `t` is a right integral: `t x = ε(x) t`.
//! * `φ` is a right cointegral: `φ(x) 1 = Σ φ(x₁) x₂`, normalized so `φ(t) = 1`.
//! * `S(x) = Σ φ(t₁ x) t₂`, which factors as `ₜc ∘ c_φ` with
//!   `c_φ(x) = x ⇀ φ` and `ₜc(f) = t ↼ f`.
//! * `a = φ ⇀ t` and `α = t ⇀ φ` are the modular element and function.
//! * `s = S t` and `λ = φ ∘ S` are the left integral and cointegral.
//! * `N` satisfies `φ(x y) = φ(y N(x))`; `ᶜN` satisfies
//!   `Σ ᶜN(t₂) ⊗ t₁ = Σ t₁ ⊗ t₂`.

mod identities;
mod semisimple;
mod traces;

use thiserror::Error;

use crate::algcoalg::{
    self, act_dual_on_h_left, act_dual_on_h_right, act_h_on_dual_left, act_h_on_dual_right,
    FinDimAlgebra, FinDimCoalgebra, LinearEndo, LinearForm, StructureError,
};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix};
use crate::report::{VerificationReport, Witness};

pub use identities::{radford_check, verify_core_identities};
pub use semisimple::{
    semisimplicity_report, semisimplicity_verdict, SemisimplicityReport, Verdict,
};
pub use traces::{
    collapse_report, contracted_integral_condition, is_sbf, modularity, trace_nakayama,
    trace_report, trace_s2, Modularity, TraceNakayama, TraceS2,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("algebra and coalgebra live on different spaces: {0}")]
    Mismatch(String),
    #[error("not an associative unital algebra ({check}): {witness}")]
    NotAnAlgebra { check: String, witness: Witness },
    #[error("not a coassociative counital coalgebra ({check}): {witness}")]
    NotACoalgebra { check: String, witness: Witness },
    #[error("unit is not group-like: {0}")]
    UnitNotGrouplike(Witness),
    #[error("counit is not an algebra morphism: {0}")]
    CounitNotMultiplicative(Witness),
    #[error("{kind} not unique: solution space has dimension {dim}")]
    IntegralNotUnique { kind: &'static str, dim: usize },
    #[error("supplied element is not a right integral: {0}")]
    NotRightIntegral(Witness),
    #[error("supplied functional is not a right cointegral: {0}")]
    NotRightCointegral(Witness),
    #[error("normalization impossible: phi(t) = 0")]
    NormalizationImpossible,
    #[error("normalization condition {condition} fails: {witness}")]
    Normalization {
        condition: &'static str,
        witness: Witness,
    },
    #[error("not Frobenius: x -> (x ⇀ phi) is not bijective")]
    NotFrobenius,
    #[error("not coFrobenius: f -> (t ↼ f) is not bijective")]
    NotCoFrobenius,
    #[error("not biFrobenius: S is not an antiautomorphism of {property}: {witness}")]
    NotBiFrobenius {
        property: &'static str,
        witness: Witness,
    },
    #[error("modular {0} is not invertible")]
    ModularNotInvertible(&'static str),
}

impl BuildError {
    /// Short name of the invariant that failed, for exit-code reporting.
    pub fn invariant(&self) -> &'static str {
        match self {
            BuildError::Structure(_) | BuildError::Mismatch(_) => "shape",
            BuildError::NotAnAlgebra { .. } => "algebra axioms",
            BuildError::NotACoalgebra { .. } => "coalgebra axioms",
            BuildError::UnitNotGrouplike(_) => "unit group-like",
            BuildError::CounitNotMultiplicative(_) => "counit multiplicative",
            BuildError::IntegralNotUnique { .. } => "integral not unique",
            BuildError::NotRightIntegral(_) => "right integral",
            BuildError::NotRightCointegral(_) => "right cointegral",
            BuildError::NormalizationImpossible | BuildError::Normalization { .. } => {
                "normalization"
            }
            BuildError::NotFrobenius => "not Frobenius",
            BuildError::NotCoFrobenius => "not coFrobenius",
            BuildError::NotBiFrobenius { .. } => "not biFrobenius",
            BuildError::ModularNotInvertible(_) => "modular data invertible",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            BuildError::NotAnAlgebra { witness, .. }
            | BuildError::NotACoalgebra { witness, .. }
            | BuildError::Normalization { witness, .. }
            | BuildError::NotBiFrobenius { witness, .. } => Some(witness),
            BuildError::UnitNotGrouplike(w)
            | BuildError::CounitNotMultiplicative(w)
            | BuildError::NotRightIntegral(w)
            | BuildError::NotRightCointegral(w) => Some(w),
            _ => None,
        }
    }
}

/// Every check in a fixed order: core identities, Radford's formula, traces,
/// the unimodular collapse and the semisimplicity implications.
pub fn full_report(b: &BiFrobeniusAlgebra) -> VerificationReport {
    let mut r = verify_core_identities(b);
    r.extend(radford_check(b));
    r.extend(trace_report(b));
    r.extend(collapse_report(b));
    r.extend(semisimplicity_report(b).checks);
    r
}

/// Linear system whose kernel is the space of right integrals:
/// row `(x, k)` encodes the `e_k` coordinate of `t e_x - ε(e_x) t`.
fn right_integral_system(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Matrix {
    let n = a.dim();
    let field = a.field();
    let mul = a.structure();
    let eps = c.counit_vector();
    let mut m = Matrix::zeros(field, n * n, n);
    for x in 0..n {
        for k in 0..n {
            for i in 0..n {
                let mut v = mul.get(i, x, k).clone();
                if i == k {
                    v = v - &eps[x];
                }
                m.set(x * n + k, i, v);
            }
        }
    }
    m
}

/// Same for left integrals: `e_x t - ε(e_x) t`.
fn left_integral_system(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Matrix {
    let n = a.dim();
    let mul = a.structure();
    let eps = c.counit_vector();
    let mut m = Matrix::zeros(a.field(), n * n, n);
    for x in 0..n {
        for k in 0..n {
            for i in 0..n {
                let mut v = mul.get(x, i, k).clone();
                if i == k {
                    v = v - &eps[x];
                }
                m.set(x * n + k, i, v);
            }
        }
    }
    m
}

/// Right cointegrals: row `(k, j)` encodes the `e_j` coordinate of
/// `Σ φ(x₁) x₂ - φ(x) 1` at `x = e_k`.
fn right_cointegral_system(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Matrix {
    let n = a.dim();
    let comul = c.structure();
    let unit = a.unit();
    let mut m = Matrix::zeros(a.field(), n * n, n);
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let mut v = comul.get(k, i, j).clone();
                if i == k {
                    v = v - &unit[j];
                }
                m.set(k * n + j, i, v);
            }
        }
    }
    m
}

/// Left cointegrals: `Σ x₁ λ(x₂) - λ(x) 1`.
fn left_cointegral_system(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Matrix {
    let n = a.dim();
    let comul = c.structure();
    let unit = a.unit();
    let mut m = Matrix::zeros(a.field(), n * n, n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut v = comul.get(k, i, j).clone();
                if j == k {
                    v = v - &unit[i];
                }
                m.set(k * n + i, j, v);
            }
        }
    }
    m
}

/// Canonical basis of `{t : t x = ε(x) t for all x}`.
pub fn right_integral_space(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Vec<Vec<Scalar>> {
    linalg::kernel_basis(&right_integral_system(a, c))
}

/// Canonical basis of `{φ : φ(x) 1 = Σ φ(x₁) x₂ for all x}`.
pub fn right_cointegral_space(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Vec<LinearForm> {
    linalg::kernel_basis(&right_cointegral_system(a, c))
        .into_iter()
        .map(LinearForm)
        .collect()
}

pub fn left_integral_space(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Vec<Vec<Scalar>> {
    linalg::kernel_basis(&left_integral_system(a, c))
}

pub fn left_cointegral_space(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Vec<LinearForm> {
    linalg::kernel_basis(&left_cointegral_system(a, c))
        .into_iter()
        .map(LinearForm)
        .collect()
}

/// A validated biFrobenius algebra with all derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFrobeniusAlgebra {
    algebra: FinDimAlgebra,
    coalgebra: FinDimCoalgebra,
    integral: Vec<Scalar>,
    cointegral: LinearForm,
    antipode: LinearEndo,
    antipode_inverse: LinearEndo,
    frobenius: Matrix,
    cofrobenius: Matrix,
    modular_element: Vec<Scalar>,
    modular_element_inverse: Vec<Scalar>,
    modular_function: LinearForm,
    modular_function_inverse: LinearForm,
    left_integral: Vec<Scalar>,
    left_cointegral: LinearForm,
    nakayama: LinearEndo,
    conakayama: LinearEndo,
}

pub fn build_bifrobenius(
    algebra: FinDimAlgebra,
    coalgebra: FinDimCoalgebra,
    integral: Option<Vec<Scalar>>,
    cointegral: Option<LinearForm>,
) -> Result<BiFrobeniusAlgebra, BuildError> {
    BiFrobeniusAlgebra::build(algebra, coalgebra, integral, cointegral)
}

fn single(
    mut space: Vec<Vec<Scalar>>,
    kind: &'static str,
) -> Result<Vec<Scalar>, BuildError> {
    if space.len() == 1 {
        Ok(space.pop().expect("one element"))
    } else {
        Err(BuildError::IntegralNotUnique {
            kind,
            dim: space.len(),
        })
    }
}

impl BiFrobeniusAlgebra {
    /// Validates the input and computes the derived data.
    ///
    /// Missing `integral`/`cointegral` are taken from the canonical kernel
    /// basis, which must then be one-dimensional. The cointegral is rescaled
    /// so that `φ(t) = 1`; the integral is used as given.
    pub fn build(
        algebra: FinDimAlgebra,
        coalgebra: FinDimCoalgebra,
        integral: Option<Vec<Scalar>>,
        cointegral: Option<LinearForm>,
    ) -> Result<Self, BuildError> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(BuildError::Mismatch(format!(
                "algebra has dimension {n}, coalgebra {}",
                coalgebra.dim()
            )));
        }
        if coalgebra.field() != algebra.field() {
            return Err(StructureError::Field(algebra.field(), coalgebra.field()).into());
        }
        for e in algebra.check().entries {
            if let Some(w) = e.witness() {
                return Err(BuildError::NotAnAlgebra {
                    check: e.id.clone(),
                    witness: w.clone(),
                });
            }
        }
        for e in coalgebra.check().entries {
            if let Some(w) = e.witness() {
                return Err(BuildError::NotACoalgebra {
                    check: e.id.clone(),
                    witness: w.clone(),
                });
            }
        }
        if let Some(w) = algcoalg::grouplike_witness(&coalgebra, algebra.unit()) {
            return Err(BuildError::UnitNotGrouplike(w));
        }
        if let Some(w) = algcoalg::algebra_morphism_witness(&algebra, &coalgebra.counit_form()) {
            return Err(BuildError::CounitNotMultiplicative(w));
        }

        let t = match integral {
            Some(t) => {
                if t.len() != n {
                    return Err(BuildError::Mismatch(format!("integral has length {}", t.len())));
                }
                if let Some(w) = right_integral_witness(&algebra, &coalgebra, &t) {
                    return Err(BuildError::NotRightIntegral(w));
                }
                t
            }
            None => single(right_integral_space(&algebra, &coalgebra), "integral")?,
        };
        let phi = match cointegral {
            Some(phi) => {
                if phi.0.len() != n {
                    return Err(BuildError::Mismatch(format!(
                        "cointegral has length {}",
                        phi.0.len()
                    )));
                }
                if let Some(w) = right_cointegral_witness(&algebra, &coalgebra, &phi) {
                    return Err(BuildError::NotRightCointegral(w));
                }
                phi
            }
            None => LinearForm(single(
                right_cointegral_space(&algebra, &coalgebra)
                    .into_iter()
                    .map(|f| f.0)
                    .collect(),
                "cointegral",
            )?),
        };

        let phi_t = phi.apply(&t);
        let Some(scale) = phi_t.inv() else {
            return Err(BuildError::NormalizationImpossible);
        };
        let phi = phi.scale(&scale);

        let t_hits_phi = act_dual_on_h_right(&coalgebra, &t, &phi);
        if t_hits_phi != algebra.unit() {
            return Err(BuildError::Normalization {
                condition: "t ↼ phi = 1",
                witness: Witness {
                    indices: vec![],
                    lhs: t_hits_phi.into(),
                    rhs: algebra.unit().to_vec().into(),
                },
            });
        }
        let phi_hit = act_h_on_dual_right(&algebra, &phi, &t);
        if phi_hit != coalgebra.counit_form() {
            return Err(BuildError::Normalization {
                condition: "phi ↼ t = epsilon",
                witness: Witness {
                    indices: vec![],
                    lhs: phi_hit.0.into(),
                    rhs: coalgebra.counit_vector().to_vec().into(),
                },
            });
        }

        let frobenius = frobenius_matrix(&algebra, &phi);
        let cofrobenius = cofrobenius_matrix(&coalgebra, &t);
        if linalg::rank(&frobenius) < n {
            return Err(BuildError::NotFrobenius);
        }
        if linalg::rank(&cofrobenius) < n {
            return Err(BuildError::NotCoFrobenius);
        }

        let antipode = antipode_from_integrals(&algebra, &coalgebra, &t, &phi);
        let antipode_inverse = antipode
            .inverse()
            .expect("composite of two bijections is bijective");
        if let Some(w) = algcoalg::algebra_antimorphism_witness(&algebra, &antipode) {
            return Err(BuildError::NotBiFrobenius {
                property: "algebras",
                witness: w,
            });
        }
        if let Some(w) = algcoalg::coalgebra_antimorphism_witness(&coalgebra, &antipode) {
            return Err(BuildError::NotBiFrobenius {
                property: "coalgebras",
                witness: w,
            });
        }

        let modular_element = act_dual_on_h_left(&coalgebra, &phi, &t);
        let modular_function = act_h_on_dual_left(&algebra, &t, &phi);
        let modular_element_inverse = algebra
            .invert(&modular_element)
            .ok_or(BuildError::ModularNotInvertible("element"))?;
        let dual = coalgebra.dual_algebra();
        let modular_function_inverse = dual
            .invert(&modular_function.0)
            .map(LinearForm)
            .ok_or(BuildError::ModularNotInvertible("function"))?;

        let left_integral = antipode.apply(&t);
        let left_cointegral = phi.compose(&antipode);

        let gram = gram_matrix(&algebra, &phi);
        let gram_inv = linalg::inverse(&gram)
            .expect("square")
            .expect("Gram matrix of a Frobenius form is invertible");
        let nakayama = LinearEndo(gram_inv.mul(&gram.transpose()).expect("square"));
        let delta_t = coalgebra.comul(&t);
        let delta_t_tr_inv = linalg::inverse(&delta_t.transpose())
            .expect("square")
            .expect("coFrobenius integral has invertible coproduct");
        let conakayama = LinearEndo(delta_t.mul(&delta_t_tr_inv).expect("square"));

        Ok(BiFrobeniusAlgebra {
            algebra,
            coalgebra,
            integral: t,
            cointegral: phi,
            antipode,
            antipode_inverse,
            frobenius,
            cofrobenius,
            modular_element,
            modular_element_inverse,
            modular_function,
            modular_function_inverse,
            left_integral,
            left_cointegral,
            nakayama,
            conakayama,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinDimCoalgebra {
        &self.coalgebra
    }

    /// The right integral `t`.
    pub fn integral(&self) -> &[Scalar] {
        &self.integral
    }

    /// The right cointegral `φ`, normalized so `φ(t) = 1`.
    pub fn cointegral(&self) -> &LinearForm {
        &self.cointegral
    }

    /// `S(x) = Σ φ(t₁ x) t₂`.
    pub fn antipode(&self) -> &LinearEndo {
        &self.antipode
    }

    /// `S̄ = S⁻¹`.
    pub fn antipode_inverse(&self) -> &LinearEndo {
        &self.antipode_inverse
    }

    /// Matrix of `c_φ : H -> H*`, `x ↦ x ⇀ φ`, in the dual basis.
    pub fn frobenius_map(&self) -> &Matrix {
        &self.frobenius
    }

    /// Matrix of `ₜc : H* -> H`, `f ↦ t ↼ f`, from the dual basis.
    pub fn cofrobenius_map(&self) -> &Matrix {
        &self.cofrobenius
    }

    /// `a = φ ⇀ t`.
    pub fn modular_element(&self) -> &[Scalar] {
        &self.modular_element
    }

    pub fn modular_element_inverse(&self) -> &[Scalar] {
        &self.modular_element_inverse
    }

    /// `α = t ⇀ φ`.
    pub fn modular_function(&self) -> &LinearForm {
        &self.modular_function
    }

    /// Inverse of `α` in the convolution algebra `H*`.
    pub fn modular_function_inverse(&self) -> &LinearForm {
        &self.modular_function_inverse
    }

    /// `s = S t`.
    pub fn left_integral(&self) -> &[Scalar] {
        &self.left_integral
    }

    /// `λ = φ ∘ S`.
    pub fn left_cointegral(&self) -> &LinearForm {
        &self.left_cointegral
    }

    pub fn nakayama(&self) -> &LinearEndo {
        &self.nakayama
    }

    pub fn conakayama(&self) -> &LinearEndo {
        &self.conakayama
    }

    /// `S ⋆ id = id ⋆ S = uε`.
    pub fn is_sbf(&self) -> bool {
        traces::is_sbf(self)
    }

    // Shorthands used throughout the identity checks.

    pub(crate) fn e(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(i)
    }

    pub(crate) fn one(&self) -> Vec<Scalar> {
        self.algebra.unit().to_vec()
    }

    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(u, v)
    }

    pub(crate) fn delta(&self, u: &[Scalar]) -> Matrix {
        self.coalgebra.comul(u)
    }

    pub(crate) fn eps(&self, u: &[Scalar]) -> Scalar {
        self.coalgebra.counit(u)
    }

    pub(crate) fn phi(&self, u: &[Scalar]) -> Scalar {
        self.cointegral.apply(u)
    }

    pub(crate) fn s(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(u)
    }

    pub(crate) fn sbar(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inverse.apply(u)
    }

    /// `f ⇀ x`.
    pub(crate) fn hit(&self, f: &LinearForm, x: &[Scalar]) -> Vec<Scalar> {
        act_dual_on_h_left(&self.coalgebra, f, x)
    }

    /// `x ↼ f`.
    pub(crate) fn hit_right(&self, x: &[Scalar], f: &LinearForm) -> Vec<Scalar> {
        act_dual_on_h_right(&self.coalgebra, x, f)
    }

    pub(crate) fn convolve(&self, f: &LinearEndo, g: &LinearEndo) -> LinearEndo {
        algcoalg::convolve(&self.coalgebra, &self.algebra, f, g)
    }

    pub(crate) fn convolve_at(&self, f: &LinearEndo, g: &LinearEndo, x: &[Scalar]) -> Vec<Scalar> {
        algcoalg::convolve_at(&self.coalgebra, &self.algebra, f, g, x)
    }

    pub(crate) fn identity(&self) -> LinearEndo {
        LinearEndo::identity(self.field(), self.dim())
    }

    pub(crate) fn unit_counit(&self) -> LinearEndo {
        algcoalg::unit_counit(&self.coalgebra, &self.algebra)
    }

    /// `Σ Σ_ij c_ij f(e_i, e_j)` over the coefficients of `Δ(u)`.
    pub(crate) fn sweedler<F>(&self, u: &[Scalar], f: F) -> Vec<Scalar>
    where
        F: Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    {
        let d = self.delta(u);
        let mut out = self.algebra.zero_vector();
        for (i, j) in algcoalg::pairs(self.dim()) {
            let c = d.get(i, j);
            if c.is_zero() {
                continue;
            }
            let v = f(&self.e(i), &self.e(j));
            for (o, x) in out.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    /// Rebuilds with `t ↦ c t`, `φ ↦ c⁻¹ φ`.
    pub fn rescaled(&self, c: &Scalar) -> Result<Self, BuildError> {
        let cinv = c.inv().ok_or(BuildError::NormalizationImpossible)?;
        Self::build(
            self.algebra.clone(),
            self.coalgebra.clone(),
            Some(self.integral.iter().map(|x| c * x).collect()),
            Some(self.cointegral.scale(&cinv)),
        )
    }
}

fn right_integral_witness(a: &FinDimAlgebra, c: &FinDimCoalgebra, t: &[Scalar]) -> Option<Witness> {
    crate::report::first_mismatch((0..a.dim()).map(|x| {
        let ex = a.basis_vector(x);
        let eps = c.counit(&ex);
        (
            vec![x],
            a.mul(t, &ex),
            t.iter().map(|v| v * &eps).collect::<Vec<_>>(),
        )
    }))
}

fn right_cointegral_witness(
    a: &FinDimAlgebra,
    c: &FinDimCoalgebra,
    phi: &LinearForm,
) -> Option<Witness> {
    crate::report::first_mismatch((0..a.dim()).map(|x| {
        let ex = a.basis_vector(x);
        let v = phi.apply(&ex);
        (
            vec![x],
            act_dual_on_h_right(c, &ex, phi),
            a.unit().iter().map(|u| u * &v).collect::<Vec<_>>(),
        )
    }))
}

/// `G[i][j] = φ(e_i e_j)`.
pub(crate) fn gram_matrix(a: &FinDimAlgebra, phi: &LinearForm) -> Matrix {
    let n = a.dim();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| phi.apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j))))
                .collect()
        })
        .collect();
    Matrix::from_rows(a.field(), rows).expect("square")
}

/// Column `x` holds the dual-basis coordinates of `e_x ⇀ φ`.
pub(crate) fn frobenius_matrix(a: &FinDimAlgebra, phi: &LinearForm) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|x| act_h_on_dual_left(a, &a.basis_vector(x), phi).0)
        .collect();
    Matrix::from_columns(a.field(), a.dim(), &cols)
}

/// Column `i` holds `t ↼ e_i*`.
pub(crate) fn cofrobenius_matrix(c: &FinDimCoalgebra, t: &[Scalar]) -> Matrix {
    let n = c.dim();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| act_dual_on_h_right(c, t, &LinearForm::dual_basis(c.field(), n, i)))
        .collect();
    Matrix::from_columns(c.field(), n, &cols)
}

/// `S(x) = Σ φ(t₁ x) t₂`, evaluated directly from the coproduct of `t`.
pub(crate) fn antipode_from_integrals(
    a: &FinDimAlgebra,
    c: &FinDimCoalgebra,
    t: &[Scalar],
    phi: &LinearForm,
) -> LinearEndo {
    let n = a.dim();
    let d = c.comul(t);
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|x| {
            let ex = a.basis_vector(x);
            let mut out = a.zero_vector();
            for (i, j) in algcoalg::pairs(n) {
                let coeff = d.get(i, j);
                if coeff.is_zero() {
                    continue;
                }
                let v = coeff * phi.apply(&a.mul(&a.basis_vector(i), &ex));
                out[j] = &out[j] + &v;
            }
            out
        })
        .collect();
    LinearEndo::from_images(a.field(), &images)
}
