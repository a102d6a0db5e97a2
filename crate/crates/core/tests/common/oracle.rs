//! Brute-force reference implementation over plain `BigRational`, sharing
//! no code with the library beyond scalar parsing. Used to certify expected
//! values and to decide whether a structure really is biFrobenius.

use bifrob::file::AlgebraFile;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Vector = Vec<Q>;

#[derive(Clone, Debug)]
pub struct Raw {
    pub n: usize,
    /// `m[i][j][k]`: coefficient of `e_k` in `e_i e_j`
    pub m: Vec<Vec<Vec<Q>>>,
    /// `d[k][i][j]`: coefficient of `e_i ⊗ e_j` in `Δ(e_k)`
    pub d: Vec<Vec<Vec<Q>>>,
    pub unit: Vector,
    pub counit: Vector,
    pub t: Vector,
    pub phi: Vector,
}

pub fn q(s: &str) -> Q {
    bifrob::field::parse_rational(s).unwrap()
}

fn zero(n: usize) -> Vector {
    vec![Q::zero(); n]
}

fn basis(n: usize, i: usize) -> Vector {
    let mut v = zero(n);
    v[i] = Q::one();
    v
}

impl Raw {
    pub fn from_file(f: &AlgebraFile) -> Self {
        assert_eq!(f.characteristic, 0, "oracle works over Q only");
        let n = f.dim;
        let cube = || vec![vec![zero(n); n]; n];
        let mut m = cube();
        let mut d = cube();
        for (i, j, k, v) in &f.mul {
            m[*i][*j][*k] = q(v);
        }
        for (k, i, j, v) in &f.comul {
            d[*k][*i][*j] = q(v);
        }
        let vecq = |v: &[String]| v.iter().map(|s| q(s)).collect::<Vector>();
        Raw {
            n,
            m,
            d,
            unit: vecq(&f.unit),
            counit: vecq(&f.counit),
            t: vecq(f.integral.as_ref().expect("integral")),
            phi: vecq(f.cointegral.as_ref().expect("cointegral")),
        }
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vector {
        let mut out = zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let c = &a[i] * &b[j];
                if c.is_zero() {
                    continue;
                }
                for k in 0..self.n {
                    out[k] += &c * &self.m[i][j][k];
                }
            }
        }
        out
    }

    /// `Δ(v)` as `out[i][j]`.
    pub fn delta(&self, v: &[Q]) -> Vec<Vector> {
        let mut out = vec![zero(self.n); self.n];
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    out[i][j] += &v[k] * &self.d[k][i][j];
                }
            }
        }
        out
    }

    pub fn eps(&self, v: &[Q]) -> Q {
        dot(&self.counit, v)
    }

    pub fn phi_of(&self, v: &[Q]) -> Q {
        dot(&self.phi, v)
    }

    pub fn e(&self, i: usize) -> Vector {
        basis(self.n, i)
    }

    /// `Σ c_ij f(e_i, e_j)` over `Δ(v)`.
    pub fn sweedler(&self, v: &[Q], f: impl Fn(&[Q], &[Q]) -> Vector) -> Vector {
        let dv = self.delta(v);
        let mut out = zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if dv[i][j].is_zero() {
                    continue;
                }
                let w = f(&self.e(i), &self.e(j));
                for k in 0..self.n {
                    out[k] += &dv[i][j] * &w[k];
                }
            }
        }
        out
    }

    /// `φ(t) = 1` after dividing `φ`.
    pub fn normalized(&self) -> Option<Raw> {
        let pt = self.phi_of(&self.t);
        if pt.is_zero() {
            return None;
        }
        let mut r = self.clone();
        r.phi = self.phi.iter().map(|x| x / &pt).collect();
        Some(r)
    }

    /// Images of the basis under `S(x) = Σ φ(t₁ x) t₂`.
    pub fn antipode(&self) -> Vec<Vector> {
        (0..self.n)
            .map(|x| {
                let ex = self.e(x);
                self.sweedler(&self.t, |t1, t2| {
                    let c = self.phi_of(&self.mul(t1, &ex));
                    t2.iter().map(|v| v * &c).collect()
                })
            })
            .collect()
    }

    /// `a = φ ⇀ t = Σ t₁ φ(t₂)`.
    pub fn modular_element(&self) -> Vector {
        self.sweedler(&self.t, |t1, t2| {
            let c = self.phi_of(t2);
            t1.iter().map(|v| v * &c).collect()
        })
    }

    /// `α(y) = φ(y t)`.
    pub fn modular_function(&self) -> Vector {
        (0..self.n).map(|y| self.phi_of(&self.mul(&self.e(y), &self.t))).collect()
    }

    /// `(F ⋆ G)(e_x)` for maps given by basis images.
    pub fn convolve(&self, f: &[Vector], g: &[Vector]) -> Vec<Vector> {
        (0..self.n)
            .map(|x| {
                self.sweedler(&self.e(x), |a, b| self.mul(&apply(f, a), &apply(g, b)))
            })
            .collect()
    }

    /// Checks every biFrobenius axiom directly; returns the normalized data
    /// and the antipode on success.
    pub fn certify_bf(&self) -> Result<(Raw, Vec<Vector>), String> {
        let n = self.n;
        for (i, j, k) in triples(n) {
            let (a, b, c) = (self.e(i), self.e(j), self.e(k));
            if self.mul(&self.mul(&a, &b), &c) != self.mul(&a, &self.mul(&b, &c)) {
                return Err(format!("associativity at {i},{j},{k}"));
            }
        }
        for i in 0..n {
            let ei = self.e(i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return Err(format!("unit at {i}"));
            }
        }
        for k in 0..n {
            // (Δ⊗id)Δ and (id⊗Δ)Δ as n³ arrays
            let dk = self.delta(&self.e(k));
            let mut left = vec![vec![zero(n); n]; n];
            let mut right = vec![vec![zero(n); n]; n];
            for (i, j) in pairs(n) {
                let c = &dk[i][j];
                if c.is_zero() {
                    continue;
                }
                let di = self.delta(&self.e(i));
                let dj = self.delta(&self.e(j));
                for (a, b) in pairs(n) {
                    left[a][b][j] += c * &di[a][b];
                    right[i][a][b] += c * &dj[a][b];
                }
            }
            if left != right {
                return Err(format!("coassociativity at {k}"));
            }
            let cl: Vector = (0..n).map(|j| (0..n).map(|a| &self.counit[a] * &dk[a][j]).sum()).collect();
            let cr: Vector = (0..n).map(|i| (0..n).map(|b| &dk[i][b] * &self.counit[b]).sum()).collect();
            if cl != self.e(k) || cr != self.e(k) {
                return Err(format!("counit at {k}"));
            }
        }
        let du = self.delta(&self.unit);
        for (i, j) in pairs(n) {
            if du[i][j] != &self.unit[i] * &self.unit[j] {
                return Err("unit not grouplike".into());
            }
            if self.eps(&self.mul(&self.e(i), &self.e(j))) != &self.counit[i] * &self.counit[j] {
                return Err("counit not multiplicative".into());
            }
        }
        for x in 0..n {
            let lhs = self.mul(&self.t, &self.e(x));
            let rhs: Vector = self.t.iter().map(|v| v * &self.counit[x]).collect();
            if lhs != rhs {
                return Err(format!("t not a right integral at {x}"));
            }
            let hit = self.sweedler(&self.e(x), |a, b| {
                let c = self.phi_of(a);
                b.iter().map(|v| v * &c).collect()
            });
            let want: Vector = self.unit.iter().map(|v| v * &self.phi[x]).collect();
            if hit != want {
                return Err(format!("phi not a right cointegral at {x}"));
            }
        }
        let r = self.normalized().ok_or("phi(t) = 0")?;
        let s = r.antipode();
        if rank(&s) < n {
            return Err("S not bijective".into());
        }
        for (i, j) in pairs(n) {
            let lhs = apply(&s, &r.mul(&r.e(i), &r.e(j)));
            let rhs = r.mul(&s[j], &s[i]);
            if lhs != rhs {
                return Err(format!("S not an algebra antimorphism at {i},{j}"));
            }
        }
        for k in 0..n {
            let lhs = r.delta(&s[k]);
            let dk = r.delta(&r.e(k));
            let mut rhs = vec![zero(n); n];
            for (i, j) in pairs(n) {
                if dk[i][j].is_zero() {
                    continue;
                }
                for (a, b) in pairs(n) {
                    rhs[a][b] += &dk[i][j] * &s[j][a] * &s[i][b];
                }
            }
            if lhs != rhs {
                return Err(format!("S not a coalgebra antimorphism at {k}"));
            }
        }
        Ok((r, s))
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Linear map given by basis images applied to `v`.
pub fn apply(images: &[Vector], v: &[Q]) -> Vector {
    let n = v.len();
    let mut out = zero(n);
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..n {
            out[k] += c * &images[j][k];
        }
    }
    out
}

pub fn compose(f: &[Vector], g: &[Vector]) -> Vec<Vector> {
    g.iter().map(|v| apply(f, v)).collect()
}

pub fn trace(images: &[Vector]) -> Q {
    (0..images.len()).map(|i| images[i][i].clone()).sum()
}

/// Rank by plain elimination on a copy.
pub fn rank(rows: &[Vector]) -> usize {
    let mut a: Vec<Vector> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| pairs(n).map(move |(j, k)| (i, j, k)))
}
