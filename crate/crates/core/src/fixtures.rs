//! Built-in examples: the nilpotent algebra `B₄`, a three-dimensional
//! non-SbF algebra with convolution-invertible identity, group algebras
//! from Cayley tables, and duals of all of them.

use thiserror::Error;

use crate::algcoalg::{FinDimAlgebra, FinDimCoalgebra, LinearEndo, LinearForm};
use crate::bifrob::{BiFrobeniusAlgebra, BuildError};
use crate::field::{ratio, FieldSpec, Scalar};
use crate::linalg::Tensor3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("fixture {name} is not available in characteristic {characteristic}")]
    ForbiddenCharacteristic { name: String, characteristic: u64 },
    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("fixture {name} does not build: {source}")]
    Build { name: String, source: BuildError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureDescriptor {
    pub name: String,
    pub field: FieldSpec,
    pub notes: String,
}

/// Input data for [`BiFrobeniusAlgebra::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub descriptor: FixtureDescriptor,
    pub algebra: FinDimAlgebra,
    pub coalgebra: FinDimCoalgebra,
    pub integral: Vec<Scalar>,
    pub cointegral: LinearForm,
}

impl Fixture {
    pub fn name(&self) -> &str {
        &self.descriptor.name
    }

    pub fn field(&self) -> FieldSpec {
        self.descriptor.field
    }

    pub fn build(&self) -> Result<BiFrobeniusAlgebra, BuildError> {
        BiFrobeniusAlgebra::build(
            self.algebra.clone(),
            self.coalgebra.clone(),
            Some(self.integral.clone()),
            Some(self.cointegral.clone()),
        )
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// `𝕜[X]/(X⁴)` with `1` group-like, `x`, `x²` primitive and
/// `Δ(x³) = 1⊗x³ + x⊗x² + x²⊗x + x³⊗1`; `t = x³`, `φ = (x³)*`.
pub fn b4(field: FieldSpec) -> Fixture {
    let n = 4;
    let one = field.one();
    let mut mul = Tensor3::zeros(field, (n, n, n));
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mul.set(i, j, i + j, one.clone());
            }
        }
    }
    let mut comul = Tensor3::zeros(field, (n, n, n));
    comul.set(0, 0, 0, one.clone());
    for k in 1..n {
        if k < 3 {
            comul.set(k, 0, k, one.clone());
            comul.set(k, k, 0, one.clone());
        } else {
            for i in 0..=k {
                comul.set(k, i, k - i, one.clone());
            }
        }
    }
    let basis = names(&["1", "x", "x^2", "x^3"]);
    Fixture {
        descriptor: FixtureDescriptor {
            name: "b4".into(),
            field,
            notes: "k[X]/(X^4), S = id, not of type S".into(),
        },
        algebra: FinDimAlgebra::new(field, basis.clone(), mul, unit_vector(field, n, 0))
            .expect("shapes"),
        coalgebra: FinDimCoalgebra::new(field, basis, comul, unit_vector(field, n, 0))
            .expect("shapes"),
        integral: unit_vector(field, n, 3),
        cointegral: LinearForm(unit_vector(field, n, 3)),
    }
}

/// The three-dimensional example together with its antipode and the
/// convolution inverse of the identity, which differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSbf3 {
    pub fixture: Fixture,
    pub antipode: LinearEndo,
    pub convolution_inverse: LinearEndo,
}

/// Basis `1, x, y` with
/// `x² = ½x + 3/2 y`, `xy = yx = 2 + ½x + ½y`, `y² = 3/2 x + ½y`,
/// `Δx = ½ x⊗x`, `Δy = ½ y⊗y`, `ε(x) = ε(y) = 2`, `t = 1 + x + y`, `φ = 1*`.
///
/// Characteristics 2 and 3 are rejected: the constants need ½, and the
/// convolution inverse of the identity needs ⅓.
pub fn nonsbf3(field: FieldSpec) -> Result<NonSbf3, FixtureError> {
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(FixtureError::ForbiddenCharacteristic {
            name: "nonsbf3".into(),
            characteristic: p,
        });
    }
    let q = |a, b| ratio(field, a, b);
    let n = 3;
    let mut mul = Tensor3::zeros(field, (n, n, n));
    for i in 0..n {
        mul.set(0, i, i, field.one());
        mul.set(i, 0, i, field.one());
    }
    mul.set(1, 1, 1, q(1, 2));
    mul.set(1, 1, 2, q(3, 2));
    for (i, j) in [(1, 2), (2, 1)] {
        mul.set(i, j, 0, q(2, 1));
        mul.set(i, j, 1, q(1, 2));
        mul.set(i, j, 2, q(1, 2));
    }
    mul.set(2, 2, 1, q(3, 2));
    mul.set(2, 2, 2, q(1, 2));

    let mut comul = Tensor3::zeros(field, (n, n, n));
    comul.set(0, 0, 0, field.one());
    comul.set(1, 1, 1, q(1, 2));
    comul.set(2, 2, 2, q(1, 2));
    let counit = vec![field.one(), q(2, 1), q(2, 1)];

    let basis = names(&["1", "x", "y"]);
    let fixture = Fixture {
        descriptor: FixtureDescriptor {
            name: "nonsbf3".into(),
            field,
            notes: "id is convolution invertible but its inverse is not S".into(),
        },
        algebra: FinDimAlgebra::new(field, basis.clone(), mul, unit_vector(field, n, 0))
            .expect("shapes"),
        coalgebra: FinDimCoalgebra::new(field, basis, comul, counit).expect("shapes"),
        integral: vec![field.one(); n],
        cointegral: LinearForm(unit_vector(field, n, 0)),
    };
    let antipode = LinearEndo::from_images(
        field,
        &[
            unit_vector(field, n, 0),
            unit_vector(field, n, 2),
            unit_vector(field, n, 1),
        ],
    );
    let convolution_inverse = LinearEndo::from_images(
        field,
        &[
            unit_vector(field, n, 0),
            vec![q(-2, 3), q(-2, 3), q(2, 1)],
            vec![q(-2, 3), q(2, 1), q(-2, 3)],
        ],
    );
    Ok(NonSbf3 {
        fixture,
        antipode,
        convolution_inverse,
    })
}

/// A finite group given by its multiplication table: `table[g][h]` is the
/// index of `gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Checks closure, associativity, identity and inverses; returns the
    /// index of the identity.
    pub fn validate(&self) -> Result<usize, FixtureError> {
        let n = self.order();
        let bad = |m: String| Err(FixtureError::NotAGroup(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return bad(format!("table is not {n}x{n}"));
        }
        if let Some((g, h)) = pairs(n).find(|&(g, h)| self.table[g][h] >= n) {
            return bad(format!("closure: {g}*{h} = {} out of range", self.table[g][h]));
        }
        let m = |g: usize, h: usize| self.table[g][h];
        for g in 0..n {
            for (h, k) in pairs(n) {
                if m(m(g, h), k) != m(g, m(h, k)) {
                    return bad(format!("associativity fails at ({g}, {h}, {k})"));
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| m(e, g) == g && m(g, e) == g)) else {
            return bad("identity: no two-sided identity element".into());
        };
        if let Some(g) = (0..n).find(|&g| !(0..n).any(|h| m(g, h) == e && m(h, g) == e)) {
            return bad(format!("inverses: element {g} has no inverse"));
        }
        Ok(e)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

pub fn cyclic(n: usize) -> CayleyTable {
    CayleyTable {
        name: format!("c{n}"),
        elements: (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect(),
        table: (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect(),
    }
}

pub fn klein_four() -> CayleyTable {
    CayleyTable {
        name: "c2xc2".into(),
        elements: names(&["e", "a", "b", "ab"]),
        table: (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
    }
}

/// Permutations of `{0, 1, 2}` composed right to left.
pub fn symmetric3() -> CayleyTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let table = perms
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|h| index([g[h[0]], g[h[1]], g[h[2]]]))
                .collect()
        })
        .collect();
    CayleyTable {
        name: "s3".into(),
        elements: names(&["e", "(01)", "(12)", "(02)", "(012)", "(021)"]),
        table,
    }
}

/// `𝕜G` with `Δg = g⊗g`, `ε(g) = 1`, `t = Σ g`, `φ = δ_e`.
pub fn group_algebra(group: &CayleyTable, field: FieldSpec) -> Result<Fixture, FixtureError> {
    let e = group.validate()?;
    let n = group.order();
    let one = field.one();
    let mut mul = Tensor3::zeros(field, (n, n, n));
    let mut comul = Tensor3::zeros(field, (n, n, n));
    for (g, h) in pairs(n) {
        mul.set(g, h, group.table[g][h], one.clone());
    }
    for g in 0..n {
        comul.set(g, g, g, one.clone());
    }
    let basis = group.elements.clone();
    Ok(Fixture {
        descriptor: FixtureDescriptor {
            name: group.name.clone(),
            field,
            notes: format!("group algebra of {} (order {n})", group.name),
        },
        algebra: FinDimAlgebra::new(field, basis.clone(), mul, unit_vector(field, n, e))
            .expect("shapes"),
        coalgebra: FinDimCoalgebra::new(field, basis, comul, vec![one.clone(); n])
            .expect("shapes"),
        integral: vec![one; n],
        cointegral: LinearForm(unit_vector(field, n, e)),
    })
}

/// `H*` with the convolution product, the coproduct dual to `m`, integral
/// `φ` and cointegral evaluation at `t`.
pub fn dual_fixture(b: &BiFrobeniusAlgebra, name: &str) -> Fixture {
    Fixture {
        descriptor: FixtureDescriptor {
            name: format!("dual-{name}"),
            field: b.field(),
            notes: format!("dual of {name}"),
        },
        algebra: b.coalgebra().dual_algebra(),
        coalgebra: b.algebra().dual_coalgebra(),
        integral: b.cointegral().0.clone(),
        cointegral: LinearForm(b.integral().to_vec()),
    }
}

/// Base fixture names; each also exists as `dual-<name>`.
pub const BASE_NAMES: [&str; 7] = ["b4", "nonsbf3", "c2", "c3", "c4", "c2xc2", "s3"];

pub fn names_all() -> Vec<String> {
    BASE_NAMES
        .iter()
        .map(|s| s.to_string())
        .chain(BASE_NAMES.iter().map(|s| format!("dual-{s}")))
        .collect()
}

pub fn group_table(name: &str) -> Option<CayleyTable> {
    match name {
        "c2" => Some(cyclic(2)),
        "c3" => Some(cyclic(3)),
        "c4" => Some(cyclic(4)),
        "c2xc2" => Some(klein_four()),
        "s3" => Some(symmetric3()),
        _ => None,
    }
}

pub fn by_name(name: &str, field: FieldSpec) -> Result<Fixture, FixtureError> {
    if let Some(base) = name.strip_prefix("dual-") {
        let fx = by_name(base, field)?;
        let b = fx.build().map_err(|source| FixtureError::Build {
            name: base.to_string(),
            source,
        })?;
        return Ok(dual_fixture(&b, base));
    }
    match name {
        "b4" => Ok(b4(field)),
        "nonsbf3" => nonsbf3(field).map(|x| x.fixture),
        _ => match group_table(name) {
            Some(g) => group_algebra(&g, field),
            None => Err(FixtureError::Unknown(name.to_string())),
        },
    }
}

/// Every registered fixture over `field`, skipping those unavailable there.
pub fn all(field: FieldSpec) -> Vec<Fixture> {
    names_all()
        .iter()
        .filter_map(|n| by_name(n, field).ok())
        .collect()
}

pub fn catalog(field: FieldSpec) -> Vec<FixtureDescriptor> {
    all(field).into_iter().map(|f| f.descriptor).collect()
}
