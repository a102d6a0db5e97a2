//! Finite-dimensional algebras and coalgebras given by structure constants.
//!
//! Elements of the underlying space `H` are coordinate vectors
//! (`Vec<Scalar>` / `&[Scalar]`) in the fixed basis `e_0..e_{n-1}`.
//! Functionals on `H` are [`LinearForm`]s (values on the basis) and linear
//! maps `H -> H` are [`LinearEndo`]s (column `j` is the image of `e_j`).
//!
//! The four harpoon actions between `H` and `H*`:
//!
//! | function                 | notation | definition            |
//! |--------------------------|----------|-----------------------|
//! | [`act_h_on_dual_left`]   | `x ⇀ f`  | `y ↦ f(y x)`          |
//! | [`act_h_on_dual_right`]  | `f ↼ x`  | `y ↦ f(x y)`          |
//! | [`act_dual_on_h_left`]   | `f ⇀ x`  | `Σ x₁ f(x₂)`          |
//! | [`act_dual_on_h_right`]  | `x ↼ f`  | `Σ f(x₁) x₂`          |

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, dot, LinalgError, Matrix, Tensor3};
use crate::report::{first_mismatch, VerificationReport, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0} vs {1}")]
    Field(FieldSpec, FieldSpec),
}

impl From<LinalgError> for StructureError {
    fn from(e: LinalgError) -> Self {
        StructureError::Dimension(e.to_string())
    }
}

fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

fn scaled(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

fn check_shapes(
    field: FieldSpec,
    basis: &[String],
    tensor: &Tensor3,
    vector: &[Scalar],
) -> Result<(), StructureError> {
    let n = basis.len();
    if tensor.dims() != (n, n, n) {
        return Err(StructureError::Dimension(format!(
            "structure tensor has shape {:?}, expected ({n}, {n}, {n})",
            tensor.dims()
        )));
    }
    if vector.len() != n {
        return Err(StructureError::Dimension(format!(
            "unit/counit has length {}, expected {n}",
            vector.len()
        )));
    }
    if tensor.field() != field {
        return Err(StructureError::Field(field, tensor.field()));
    }
    if let Some(bad) = vector.iter().find(|s| s.field() != field) {
        return Err(StructureError::Field(field, bad.field()));
    }
    Ok(())
}

/// `(H, m, 1)`: `mul[i][j][k]` is the coefficient of `e_k` in `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    basis: Vec<String>,
    mul: Tensor3,
    unit: Vec<Scalar>,
}

impl FinDimAlgebra {
    pub fn new(
        field: FieldSpec,
        basis: Vec<String>,
        mul: Tensor3,
        unit: Vec<Scalar>,
    ) -> Result<Self, StructureError> {
        check_shapes(field, &basis, &mul, &unit)?;
        Ok(FinDimAlgebra {
            field,
            basis,
            mul,
            unit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// Product of two elements.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero_vector();
        for i in (0..n).filter(|&i| !u[i].is_zero()) {
            for j in (0..n).filter(|&j| !v[j].is_zero()) {
                let c = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.mul.get(i, j, k);
                    if !m.is_zero() {
                        *o = &*o + &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        self.mul(&self.mul(u, v), w)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Two-sided inverse of `x`, if it exists.
    pub fn invert(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let y = linalg::solve(&self.left_mul_matrix(x), &self.unit).ok()??;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.mul.get(i, j, k) == self.mul.get(j, i, k))))
    }

    /// Exhaustive associativity and unit scan.
    pub fn check(&self) -> VerificationReport {
        let n = self.dim();
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let mut report = VerificationReport::new();
        report.scan(
            "algebra.associativity",
            triples(n).map(|(i, j, k)| {
                (
                    vec![i, j, k],
                    self.mul(&self.mul(&e[i], &e[j]), &e[k]),
                    self.mul(&e[i], &self.mul(&e[j], &e[k])),
                )
            }),
        );
        report.scan(
            "algebra.unit_left",
            (0..n).map(|i| (vec![i], self.mul(&self.unit, &e[i]), e[i].clone())),
        );
        report.scan(
            "algebra.unit_right",
            (0..n).map(|i| (vec![i], self.mul(&e[i], &self.unit), e[i].clone())),
        );
        report
    }

    /// The coalgebra on `H*` dual to this algebra (transposed structure constants).
    pub fn dual_coalgebra(&self) -> FinDimCoalgebra {
        let n = self.dim();
        let mut comul = Tensor3::zeros(self.field, (n, n, n));
        for ((i, j, k), v) in self.mul.nonzero() {
            comul.set(k, i, j, v.clone());
        }
        FinDimCoalgebra {
            field: self.field,
            basis: dual_names(&self.basis),
            comul,
            counit: self.unit.clone(),
        }
    }
}

/// `(H, Δ, ε)`: `comul[k][i][j]` is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimCoalgebra {
    field: FieldSpec,
    basis: Vec<String>,
    comul: Tensor3,
    counit: Vec<Scalar>,
}

impl FinDimCoalgebra {
    pub fn new(
        field: FieldSpec,
        basis: Vec<String>,
        comul: Tensor3,
        counit: Vec<Scalar>,
    ) -> Result<Self, StructureError> {
        check_shapes(field, &basis, &comul, &counit)?;
        Ok(FinDimCoalgebra {
            field,
            basis,
            comul,
            counit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim(), i)
    }

    /// `Δ(u)` as the `n x n` coefficient matrix of `Σ c_ij e_i ⊗ e_j`.
    pub fn comul(&self, u: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for ((k, i, j), v) in self.comul.nonzero() {
            if !u[k].is_zero() {
                let cur = m.get(i, j) + &(&u[k] * v);
                m.set(i, j, cur);
            }
        }
        m
    }

    pub fn counit(&self, u: &[Scalar]) -> Scalar {
        dot(self.field, &self.counit, u)
    }

    pub fn counit_form(&self) -> LinearForm {
        LinearForm(self.counit.clone())
    }

    /// `Δ²(e_k) = (Δ ⊗ id)Δ(e_k)` as flat coefficients indexed `i*n*n + j*n + l`.
    fn coassoc_sides(&self, k: usize) -> (Vec<Scalar>, Vec<Scalar>) {
        let n = self.dim();
        let mut left = vec![self.field.zero(); n * n * n];
        let mut right = left.clone();
        let d = self.comul(&self.basis_vector(k));
        for a in 0..n {
            for b in 0..n {
                let c = d.get(a, b);
                if c.is_zero() {
                    continue;
                }
                // (Δ ⊗ id): Δ(e_a) ⊗ e_b
                for i in 0..n {
                    for j in 0..n {
                        let s = self.comul.get(a, i, j);
                        if !s.is_zero() {
                            let idx = i * n * n + j * n + b;
                            left[idx] = &left[idx] + &(c * s);
                        }
                    }
                }
                // (id ⊗ Δ): e_a ⊗ Δ(e_b)
                for j in 0..n {
                    for l in 0..n {
                        let s = self.comul.get(b, j, l);
                        if !s.is_zero() {
                            let idx = a * n * n + j * n + l;
                            right[idx] = &right[idx] + &(c * s);
                        }
                    }
                }
            }
        }
        (left, right)
    }

    /// Exhaustive coassociativity and counit scan. Coassociativity witnesses
    /// are `[k, i, j, l]`: the coefficient of `e_i ⊗ e_j ⊗ e_l` in both
    /// iterated coproducts of `e_k`.
    pub fn check(&self) -> VerificationReport {
        let n = self.dim();
        let mut report = VerificationReport::new();
        let mut coassoc = None;
        for k in 0..n {
            let (l, r) = self.coassoc_sides(k);
            if let Some(idx) = (0..l.len()).find(|&idx| l[idx] != r[idx]) {
                coassoc = Some(Witness {
                    indices: vec![k, idx / (n * n), (idx / n) % n, idx % n],
                    lhs: l[idx].clone().into(),
                    rhs: r[idx].clone().into(),
                });
                break;
            }
        }
        match coassoc {
            None => report.pass("coalgebra.coassociativity"),
            Some(w) => report.fail("coalgebra.coassociativity", w),
        }
        let counit = self.counit_form();
        report.scan(
            "coalgebra.counit_left",
            (0..n).map(|k| {
                let e = self.basis_vector(k);
                (vec![k], act_dual_on_h_right(self, &e, &counit), e)
            }),
        );
        report.scan(
            "coalgebra.counit_right",
            (0..n).map(|k| {
                let e = self.basis_vector(k);
                (vec![k], act_dual_on_h_left(self, &counit, &e), e)
            }),
        );
        report
    }

    /// The algebra `H*` with convolution product.
    pub fn dual_algebra(&self) -> FinDimAlgebra {
        dual_algebra(self)
    }
}

fn dual_names(basis: &[String]) -> Vec<String> {
    basis
        .iter()
        .map(|b| match b.strip_suffix('*') {
            Some(inner) => inner.to_string(),
            None => format!("{b}*"),
        })
        .collect()
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// The algebra on `H*`: `mul*[i][j][k] = comul[k][i][j]`, unit `ε`.
pub fn dual_algebra(c: &FinDimCoalgebra) -> FinDimAlgebra {
    let n = c.dim();
    let mut mul = Tensor3::zeros(c.field, (n, n, n));
    for ((k, i, j), v) in c.comul.nonzero() {
        mul.set(i, j, k, v.clone());
    }
    FinDimAlgebra {
        field: c.field,
        basis: dual_names(&c.basis),
        mul,
        unit: c.counit.clone(),
    }
}

pub fn dual_coalgebra(a: &FinDimAlgebra) -> FinDimCoalgebra {
    a.dual_coalgebra()
}

pub fn check_algebra(a: &FinDimAlgebra) -> VerificationReport {
    a.check()
}

pub fn check_coalgebra(c: &FinDimCoalgebra) -> VerificationReport {
    c.check()
}

/// A functional on `H`, stored as its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(pub Vec<Scalar>);

impl LinearForm {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearForm(vec![field.zero(); n])
    }

    /// The dual-basis functional `e_i*`.
    pub fn dual_basis(field: FieldSpec, n: usize, i: usize) -> Self {
        LinearForm(basis_vector(field, n, i))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn apply(&self, u: &[Scalar]) -> Scalar {
        let field = self.0.first().map_or(FieldSpec::rationals(), Scalar::field);
        dot(field, &self.0, u)
    }

    /// `self ∘ t`.
    pub fn compose(&self, t: &LinearEndo) -> LinearForm {
        LinearForm(t.0.vec_mul(&self.0).expect("form and endomorphism sizes agree"))
    }

    pub fn scale(&self, c: &Scalar) -> LinearForm {
        LinearForm(scaled(c, &self.0))
    }
}

pub fn apply_form(f: &LinearForm, u: &[Scalar]) -> Scalar {
    f.apply(u)
}

/// A linear map `H -> H`; column `j` of the matrix is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEndo(pub Matrix);

impl LinearEndo {
    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearEndo(Matrix::identity(field, n))
    }

    pub fn from_images(field: FieldSpec, images: &[Vec<Scalar>]) -> Self {
        LinearEndo(Matrix::from_columns(field, images.len(), images))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.0.mul_vec(u).expect("endomorphism and vector sizes agree")
    }

    pub fn image(&self, j: usize) -> Vec<Scalar> {
        self.0.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearEndo) -> LinearEndo {
        LinearEndo(self.0.mul(&other.0).expect("same dimension"))
    }

    pub fn pow(&self, k: u32) -> LinearEndo {
        let mut acc = LinearEndo::identity(self.0.field(), self.dim());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn inverse(&self) -> Option<LinearEndo> {
        linalg::inverse(&self.0).ok().flatten().map(LinearEndo)
    }

    pub fn trace(&self) -> Scalar {
        linalg::trace(&self.0).expect("square")
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Matrix::identity(self.0.field(), self.dim())
    }
}

impl From<LinearEndo> for crate::report::WitnessValue {
    fn from(t: LinearEndo) -> Self {
        t.0.into()
    }
}

/// `x ⇀ f`, the functional `y ↦ f(y x)`.
pub fn act_h_on_dual_left(a: &FinDimAlgebra, x: &[Scalar], f: &LinearForm) -> LinearForm {
    LinearForm(
        (0..a.dim())
            .map(|y| f.apply(&a.mul(&a.basis_vector(y), x)))
            .collect(),
    )
}

/// `f ↼ x`, the functional `y ↦ f(x y)`.
pub fn act_h_on_dual_right(a: &FinDimAlgebra, f: &LinearForm, x: &[Scalar]) -> LinearForm {
    LinearForm(
        (0..a.dim())
            .map(|y| f.apply(&a.mul(x, &a.basis_vector(y))))
            .collect(),
    )
}

/// `f ⇀ x = Σ x₁ f(x₂)`.
pub fn act_dual_on_h_left(c: &FinDimCoalgebra, f: &LinearForm, x: &[Scalar]) -> Vec<Scalar> {
    c.comul(x).mul_vec(&f.0).expect("sizes agree")
}

/// `x ↼ f = Σ f(x₁) x₂`.
pub fn act_dual_on_h_right(c: &FinDimCoalgebra, x: &[Scalar], f: &LinearForm) -> Vec<Scalar> {
    c.comul(x).vec_mul(&f.0).expect("sizes agree")
}

/// The convolution unit `x ↦ ε(x) 1`.
pub fn unit_counit(c: &FinDimCoalgebra, a: &FinDimAlgebra) -> LinearEndo {
    let images: Vec<Vec<Scalar>> = (0..c.dim()).map(|x| scaled(&c.counit[x], a.unit())).collect();
    LinearEndo::from_images(a.field(), &images)
}

/// Evaluates `Σ F(x₁) G(x₂)` at a single element.
pub fn convolve_at(
    c: &FinDimCoalgebra,
    a: &FinDimAlgebra,
    f: &LinearEndo,
    g: &LinearEndo,
    x: &[Scalar],
) -> Vec<Scalar> {
    let d = c.comul(x);
    let mut out = a.zero_vector();
    for (i, j) in pairs(c.dim()) {
        let coeff = d.get(i, j);
        if !coeff.is_zero() {
            add_scaled(&mut out, coeff, &a.mul(&f.image(i), &g.image(j)));
        }
    }
    out
}

/// `(F ⋆ G)(x) = Σ F(x₁) G(x₂)`.
pub fn convolve(c: &FinDimCoalgebra, a: &FinDimAlgebra, f: &LinearEndo, g: &LinearEndo) -> LinearEndo {
    let images: Vec<Vec<Scalar>> = (0..c.dim())
        .map(|x| convolve_at(c, a, f, g, &c.basis_vector(x)))
        .collect();
    LinearEndo::from_images(a.field(), &images)
}

/// Result of searching for a convolution inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvolutionInverse {
    /// `F ⋆ G = G ⋆ F = uε`.
    TwoSided(LinearEndo),
    /// Only one of the two equations is solvable; never accepted as an inverse.
    OneSidedOnly {
        /// some `G` with `F ⋆ G = uε`
        right: bool,
        /// some `G` with `G ⋆ F = uε`
        left: bool,
    },
    NotInvertible,
}

impl ConvolutionInverse {
    pub fn inverse(&self) -> Option<&LinearEndo> {
        match self {
            ConvolutionInverse::TwoSided(g) => Some(g),
            _ => None,
        }
    }
}

/// Solves the linear system `F ⋆ G = uε`, `G ⋆ F = uε` for the `n²` entries of `G`.
pub fn convolution_inverse(c: &FinDimCoalgebra, a: &FinDimAlgebra, f: &LinearEndo) -> ConvolutionInverse {
    let n = c.dim();
    let field = a.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let deltas: Vec<Matrix> = (0..n).map(|x| c.comul(&e[x])).collect();
    // f_then[i][q] = F(e_i) e_q, then_f[q][j] = e_q F(e_j)
    let f_then: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|i| (0..n).map(|q| a.mul(&f.image(i), &e[q])).collect())
        .collect();
    let then_f: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|q| (0..n).map(|j| a.mul(&e[q], &f.image(j))).collect())
        .collect();

    // unknown G[q][j] sits at column q*n + j; equation (x, k) at row x*n + k
    let mut right = Matrix::zeros(field, n * n, n * n);
    let mut left = Matrix::zeros(field, n * n, n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for x in 0..n {
        for k in 0..n {
            rhs.push(&c.counit[x] * &a.unit()[k]);
        }
        for (i, j) in pairs(n) {
            let coeff = deltas[x].get(i, j);
            if coeff.is_zero() {
                continue;
            }
            for q in 0..n {
                for k in 0..n {
                    // F ⋆ G: coefficient of G[q][j]
                    let v = &f_then[i][q][k];
                    if !v.is_zero() {
                        let row = x * n + k;
                        let col = q * n + j;
                        let cur = right.get(row, col) + &(coeff * v);
                        right.set(row, col, cur);
                    }
                    // G ⋆ F: coefficient of G[q][i]
                    let w = &then_f[q][j][k];
                    if !w.is_zero() {
                        let row = x * n + k;
                        let col = q * n + i;
                        let cur = left.get(row, col) + &(coeff * w);
                        left.set(row, col, cur);
                    }
                }
            }
        }
    }

    let mut stacked_rows = right.row_vecs();
    stacked_rows.extend(left.row_vecs());
    let stacked = Matrix::from_rows(field, stacked_rows).expect("rectangular");
    let stacked_rhs: Vec<Scalar> = rhs.iter().chain(rhs.iter()).cloned().collect();

    let to_endo = |g: Vec<Scalar>| {
        let rows: Vec<Vec<Scalar>> = g.chunks(n).map(<[Scalar]>::to_vec).collect();
        LinearEndo(Matrix::from_rows(field, rows).expect("square"))
    };
    match linalg::solve(&stacked, &stacked_rhs).expect("consistent shapes") {
        Some(g) => ConvolutionInverse::TwoSided(to_endo(g)),
        None => {
            let r = linalg::solve(&right, &rhs).expect("shapes").is_some();
            let l = linalg::solve(&left, &rhs).expect("shapes").is_some();
            if r || l {
                ConvolutionInverse::OneSidedOnly { right: r, left: l }
            } else {
                ConvolutionInverse::NotInvertible
            }
        }
    }
}

/// `Δ(u) = Σ T(u₁) ⊗ T(u₂)` written as a coefficient matrix: `T M Tᵀ`.
fn push_forward(t: &LinearEndo, m: &Matrix) -> Matrix {
    t.0.mul(m)
        .and_then(|x| x.mul(&t.0.transpose()))
        .expect("square")
}

pub fn grouplike_witness(c: &FinDimCoalgebra, g: &[Scalar]) -> Option<Witness> {
    let d = c.comul(g);
    let gg = outer(c.field, g, g);
    if d != gg {
        return Some(Witness {
            indices: vec![],
            lhs: d.into(),
            rhs: gg.into(),
        });
    }
    let eps = c.counit(g);
    (!eps.is_one()).then(|| Witness {
        indices: vec![],
        lhs: eps.into(),
        rhs: c.field.one().into(),
    })
}

pub fn is_grouplike(c: &FinDimCoalgebra, g: &[Scalar]) -> bool {
    grouplike_witness(c, g).is_none()
}

/// `u ⊗ v` as a coefficient matrix.
pub fn outer(field: FieldSpec, u: &[Scalar], v: &[Scalar]) -> Matrix {
    let rows = u
        .iter()
        .map(|a| v.iter().map(|b| a * b).collect())
        .collect();
    Matrix::from_rows(field, rows).expect("rectangular")
}

pub fn algebra_morphism_witness(a: &FinDimAlgebra, f: &LinearForm) -> Option<Witness> {
    let n = a.dim();
    first_mismatch(pairs(n).map(|(i, j)| {
        (
            vec![i, j],
            f.apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j))),
            &f.0[i] * &f.0[j],
        )
    }))
    .or_else(|| {
        let v = f.apply(a.unit());
        (!v.is_one()).then(|| Witness {
            indices: vec![],
            lhs: v.into(),
            rhs: a.field.one().into(),
        })
    })
}

pub fn is_algebra_morphism(a: &FinDimAlgebra, f: &LinearForm) -> bool {
    algebra_morphism_witness(a, f).is_none()
}

fn unit_preserved(a: &FinDimAlgebra, t: &LinearEndo) -> Option<Witness> {
    let img = t.apply(a.unit());
    (img != a.unit).then(|| Witness {
        indices: vec![],
        lhs: img.into(),
        rhs: a.unit.clone().into(),
    })
}

fn counit_preserved(c: &FinDimCoalgebra, t: &LinearEndo) -> Option<Witness> {
    let eps = c.counit_form();
    let lhs = eps.compose(t);
    (lhs != eps).then(|| Witness {
        indices: vec![],
        lhs: lhs.0.into(),
        rhs: eps.0.into(),
    })
}

/// `T(xy) = T(x)T(y)` on basis pairs and `T(1) = 1`.
pub fn algebra_morphism_endo_witness(a: &FinDimAlgebra, t: &LinearEndo) -> Option<Witness> {
    let n = a.dim();
    let imgs: Vec<Vec<Scalar>> = (0..n).map(|i| t.image(i)).collect();
    first_mismatch(pairs(n).map(|(i, j)| {
        (
            vec![i, j],
            t.apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j))),
            a.mul(&imgs[i], &imgs[j]),
        )
    }))
    .or_else(|| unit_preserved(a, t))
}

/// `T(xy) = T(y)T(x)` on basis pairs and `T(1) = 1`.
pub fn algebra_antimorphism_witness(a: &FinDimAlgebra, t: &LinearEndo) -> Option<Witness> {
    let n = a.dim();
    let imgs: Vec<Vec<Scalar>> = (0..n).map(|i| t.image(i)).collect();
    first_mismatch(pairs(n).map(|(i, j)| {
        (
            vec![i, j],
            t.apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j))),
            a.mul(&imgs[j], &imgs[i]),
        )
    }))
    .or_else(|| unit_preserved(a, t))
}

pub fn is_antimorphism_of_algebras(a: &FinDimAlgebra, t: &LinearEndo) -> bool {
    algebra_antimorphism_witness(a, t).is_none()
}

/// `Δ(T x) = Σ T(x₁) ⊗ T(x₂)` on the basis (counit not included).
pub fn comul_morphism_witness(c: &FinDimCoalgebra, t: &LinearEndo) -> Option<Witness> {
    first_mismatch((0..c.dim()).map(|k| {
        (
            vec![k],
            c.comul(&t.image(k)),
            push_forward(t, &c.comul(&c.basis_vector(k))),
        )
    }))
}

pub fn coalgebra_morphism_witness(c: &FinDimCoalgebra, t: &LinearEndo) -> Option<Witness> {
    comul_morphism_witness(c, t).or_else(|| counit_preserved(c, t))
}

/// `Δ(T x) = Σ T(x₂) ⊗ T(x₁)` on the basis and `ε ∘ T = ε`.
pub fn coalgebra_antimorphism_witness(c: &FinDimCoalgebra, t: &LinearEndo) -> Option<Witness> {
    first_mismatch((0..c.dim()).map(|k| {
        (
            vec![k],
            c.comul(&t.image(k)),
            push_forward(t, &c.comul(&c.basis_vector(k)).transpose()),
        )
    }))
    .or_else(|| counit_preserved(c, t))
}

pub fn is_antimorphism_of_coalgebras(c: &FinDimCoalgebra, t: &LinearEndo) -> bool {
    coalgebra_antimorphism_witness(c, t).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    /// Group algebra of C2 with basis (e, g), used as a small Hopf example.
    fn c2() -> (FinDimAlgebra, FinDimCoalgebra) {
        let f = q();
        let mut mul = Tensor3::zeros(f, (2, 2, 2));
        let mut comul = Tensor3::zeros(f, (2, 2, 2));
        for i in 0..2 {
            for j in 0..2 {
                mul.set(i, j, (i + j) % 2, f.one());
            }
            comul.set(i, i, i, f.one());
        }
        let names = vec!["e".to_string(), "g".to_string()];
        (
            FinDimAlgebra::new(f, names.clone(), mul, vec![f.one(), f.zero()]).unwrap(),
            FinDimCoalgebra::new(f, names, comul, vec![f.one(), f.one()]).unwrap(),
        )
    }

    #[test]
    fn group_algebra_axioms_and_antipode() {
        let (a, c) = c2();
        assert!(a.check().all_passed());
        assert!(c.check().all_passed());
        let s = LinearEndo::identity(q(), 2); // g^{-1} = g
        let id = LinearEndo::identity(q(), 2);
        assert_eq!(convolve(&c, &a, &s, &id), unit_counit(&c, &a));
        assert!(is_grouplike(&c, &a.unit().to_vec()));
        assert!(is_antimorphism_of_algebras(&a, &s));
        assert!(is_antimorphism_of_coalgebras(&c, &s));
    }

    #[test]
    fn dual_of_grouplike_coalgebra_is_pointwise() {
        let (_, c) = c2();
        let d = c.dual_algebra();
        for (i, j) in pairs(2) {
            let prod = d.mul(&d.basis_vector(i), &d.basis_vector(j));
            let expected = if i == j { d.basis_vector(i) } else { d.zero_vector() };
            assert_eq!(prod, expected);
        }
        assert_eq!(d.unit(), &[q().one(), q().one()]);
        assert!(d.check().all_passed());
    }

    #[test]
    fn double_dual_is_identity() {
        let (a, c) = c2();
        assert_eq!(dual_algebra(&a.dual_coalgebra()), a);
        assert_eq!(dual_algebra(&c).dual_coalgebra(), c);
    }

    #[test]
    fn counit_actions_are_trivial() {
        let (_, c) = c2();
        let eps = c.counit_form();
        let x = vec![ratio(q(), 2, 3), q().from_i64(-5)];
        assert_eq!(act_dual_on_h_right(&c, &x, &eps), x);
        assert_eq!(act_dual_on_h_left(&c, &eps, &x), x);
    }

    #[test]
    fn unit_counit_is_its_own_inverse() {
        let (a, c) = c2();
        let u = unit_counit(&c, &a);
        assert_eq!(convolution_inverse(&c, &a, &u), ConvolutionInverse::TwoSided(u.clone()));
        let f = LinearEndo(Matrix::from_rows(q(), vec![vec![q().one(), q().one()], vec![q().zero(), q().one()]]).unwrap());
        assert_eq!(convolve(&c, &a, &u, &f), f);
        assert_eq!(convolve(&c, &a, &f, &u), f);
    }

    #[test]
    fn zero_map_is_not_convolution_invertible() {
        let (a, c) = c2();
        let zero = LinearEndo(Matrix::zeros(q(), 2, 2));
        assert_eq!(convolution_inverse(&c, &a, &zero), ConvolutionInverse::NotInvertible);
    }

    #[test]
    fn shape_errors() {
        let f = q();
        let mul = Tensor3::zeros(f, (2, 2, 2));
        assert!(FinDimAlgebra::new(f, vec!["a".into()], mul.clone(), vec![f.one()]).is_err());
        assert!(FinDimAlgebra::new(f, vec!["a".into(), "b".into()], mul, vec![f.one()]).is_err());
    }
}
