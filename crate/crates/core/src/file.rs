//! JSON input format.
//!
//! ```json
//! {
//!   "name": "c2",
//!   "characteristic": 0,
//!   "dim": 2,
//!   "basis": ["e", "g"],
//!   "unit": ["1", "0"],
//!   "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
//!   "counit": ["1", "1"],
//!   "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
//!   "integral": ["1", "1"],
//!   "cointegral": ["1", "0"]
//! }
//! ```
//!
//! `mul` entries are `[i, j, k, c]` meaning `e_i e_j` has `c` at `e_k`;
//! `comul` entries are `[k, i, j, c]` meaning `Δ(e_k)` has `c` at `e_i ⊗ e_j`.
//! Omitted entries are zero. `integral` and `cointegral` are optional.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algcoalg::{FinDimAlgebra, FinDimCoalgebra, LinearForm};
use crate::field::{parse_rational, FieldError, FieldSpec, Scalar};
use crate::fixtures::{Fixture, FixtureDescriptor};
use crate::linalg::Tensor3;

pub type SparseEntry = (usize, usize, usize, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub characteristic: u64,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<SparseEntry>,
    pub counit: Vec<String>,
    pub comul: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cointegral: Option<Vec<String>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
    #[error("{context}: {source}")]
    Scalar { context: String, source: FieldError },
    #[error("field override {requested} conflicts with declared characteristic {declared}")]
    OverrideConflict { requested: u64, declared: u64 },
}

fn invalid(context: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Invalid {
        context: context.into(),
        message: message.into(),
    }
}

/// Strict parse: unknown keys, bad indices, duplicate triples, malformed
/// scalars and non-prime characteristics are all rejected.
pub fn parse(text: &str) -> Result<AlgebraFile, FileError> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(|e| FileError::Syntax(e.to_string()))?;
    f.validate()?;
    Ok(f)
}

/// Pretty JSON with `mul`/`comul` entries one per line.
pub fn render(f: &AlgebraFile) -> String {
    let strings = |v: &[String]| serde_json::to_string(v).expect("strings serialize");
    let entries = |v: &[SparseEntry]| {
        if v.is_empty() {
            return "[]".to_string();
        }
        let lines: Vec<String> = v
            .iter()
            .map(|e| format!("    {}", serde_json::to_string(e).expect("tuple serializes")))
            .collect();
        format!("[\n{}\n  ]", lines.join(",\n"))
    };
    let mut out = String::from("{\n");
    out += &format!("  \"name\": {},\n", serde_json::to_string(&f.name).expect("string"));
    out += &format!("  \"characteristic\": {},\n", f.characteristic);
    out += &format!("  \"dim\": {},\n", f.dim);
    out += &format!("  \"basis\": {},\n", strings(&f.basis));
    out += &format!("  \"unit\": {},\n", strings(&f.unit));
    out += &format!("  \"mul\": {},\n", entries(&f.mul));
    out += &format!("  \"counit\": {},\n", strings(&f.counit));
    out += &format!("  \"comul\": {}", entries(&f.comul));
    if let Some(t) = &f.integral {
        out += &format!(",\n  \"integral\": {}", strings(t));
    }
    if let Some(phi) = &f.cointegral {
        out += &format!(",\n  \"cointegral\": {}", strings(phi));
    }
    out += "\n}\n";
    out
}

/// Parsed structures ready for [`crate::BiFrobeniusAlgebra::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedInput {
    pub name: String,
    pub field: FieldSpec,
    pub algebra: FinDimAlgebra,
    pub coalgebra: FinDimCoalgebra,
    pub integral: Option<Vec<Scalar>>,
    pub cointegral: Option<LinearForm>,
}

impl AlgebraFile {
    fn validate(&self) -> Result<(), FileError> {
        let field = FieldSpec::from_characteristic(self.characteristic).map_err(|source| {
            FileError::Scalar {
                context: "characteristic".into(),
                source,
            }
        })?;
        let n = self.dim;
        if n == 0 {
            return Err(invalid("dim", "must be positive"));
        }
        if self.basis.len() != n {
            return Err(invalid(
                "basis",
                format!("has {} labels, dim is {n}", self.basis.len()),
            ));
        }
        let mut labels = BTreeSet::new();
        for (i, b) in self.basis.iter().enumerate() {
            if !labels.insert(b) {
                return Err(invalid(format!("basis[{i}]"), format!("duplicate label {b:?}")));
            }
        }
        self.check_vector("unit", &self.unit, field)?;
        self.check_vector("counit", &self.counit, field)?;
        self.check_entries("mul", &self.mul, field)?;
        self.check_entries("comul", &self.comul, field)?;
        if let Some(t) = &self.integral {
            self.check_vector("integral", t, field)?;
        }
        if let Some(phi) = &self.cointegral {
            self.check_vector("cointegral", phi, field)?;
        }
        Ok(())
    }

    fn check_vector(&self, key: &str, v: &[String], field: FieldSpec) -> Result<(), FileError> {
        if v.len() != self.dim {
            return Err(invalid(key, format!("has {} entries, dim is {}", v.len(), self.dim)));
        }
        for (i, s) in v.iter().enumerate() {
            scalar(field, s, || format!("{key}[{i}]"))?;
        }
        Ok(())
    }

    fn check_entries(&self, key: &str, v: &[SparseEntry], field: FieldSpec) -> Result<(), FileError> {
        let mut seen = BTreeSet::new();
        for (pos, (a, b, c, s)) in v.iter().enumerate() {
            let context = || format!("{key}[{pos}]");
            if let Some(bad) = [a, b, c].into_iter().find(|&&x| x >= self.dim) {
                return Err(invalid(
                    context(),
                    format!("index {bad} out of range for dim {}", self.dim),
                ));
            }
            if !seen.insert((a, b, c)) {
                return Err(invalid(context(), format!("duplicate entry ({a}, {b}, {c})")));
            }
            scalar(field, s, context)?;
        }
        Ok(())
    }

    /// Converts to structure constants, optionally reinterpreting a file
    /// over the rationals in `F_p`.
    pub fn load(&self, field_override: Option<u64>) -> Result<LoadedInput, FileError> {
        self.validate()?;
        let declared = self.characteristic;
        let field = match field_override {
            None => FieldSpec::from_characteristic(declared),
            Some(p) if declared == 0 || declared == p => FieldSpec::from_characteristic(p),
            Some(p) => {
                return Err(FileError::OverrideConflict {
                    requested: p,
                    declared,
                })
            }
        }
        .map_err(|source| FileError::Scalar {
            context: "field override".into(),
            source,
        })?;
        let n = self.dim;
        let vector = |key: &str, v: &[String]| -> Result<Vec<Scalar>, FileError> {
            v.iter()
                .enumerate()
                .map(|(i, s)| scalar(field, s, || format!("{key}[{i}]")))
                .collect()
        };
        let tensor = |key: &str, v: &[SparseEntry]| -> Result<Tensor3, FileError> {
            let mut t = Tensor3::zeros(field, (n, n, n));
            for (pos, (a, b, c, s)) in v.iter().enumerate() {
                t.set(*a, *b, *c, scalar(field, s, || format!("{key}[{pos}]"))?);
            }
            Ok(t)
        };
        let structure = |e: crate::algcoalg::StructureError| invalid("structure", e.to_string());
        let algebra = FinDimAlgebra::new(
            field,
            self.basis.clone(),
            tensor("mul", &self.mul)?,
            vector("unit", &self.unit)?,
        )
        .map_err(structure)?;
        let coalgebra = FinDimCoalgebra::new(
            field,
            self.basis.clone(),
            tensor("comul", &self.comul)?,
            vector("counit", &self.counit)?,
        )
        .map_err(structure)?;
        let integral = self
            .integral
            .as_deref()
            .map(|t| vector("integral", t))
            .transpose()?;
        let cointegral = self
            .cointegral
            .as_deref()
            .map(|phi| vector("cointegral", phi).map(LinearForm))
            .transpose()?;
        Ok(LoadedInput {
            name: self.name.clone(),
            field,
            algebra,
            coalgebra,
            integral,
            cointegral,
        })
    }

    /// Canonical file for a fixture: zero entries omitted, triples sorted.
    pub fn from_fixture(fx: &Fixture) -> Self {
        let entries = |t: &Tensor3| -> Vec<SparseEntry> {
            t.nonzero()
                .map(|((a, b, c), v)| (a, b, c, v.to_string()))
                .collect()
        };
        let strings = |v: &[Scalar]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        AlgebraFile {
            name: fx.descriptor.name.clone(),
            characteristic: fx.descriptor.field.characteristic(),
            dim: fx.algebra.dim(),
            basis: fx.algebra.basis_names().to_vec(),
            unit: strings(fx.algebra.unit()),
            mul: entries(fx.algebra.structure()),
            counit: strings(fx.coalgebra.counit_vector()),
            comul: entries(fx.coalgebra.structure()),
            integral: Some(strings(&fx.integral)),
            cointegral: Some(strings(&fx.cointegral.0)),
        }
    }
}

impl LoadedInput {
    /// A fixture view of the input; missing integrals are left empty.
    pub fn into_fixture(self) -> Option<Fixture> {
        Some(Fixture {
            descriptor: FixtureDescriptor {
                name: self.name,
                field: self.field,
                notes: String::new(),
            },
            algebra: self.algebra,
            coalgebra: self.coalgebra,
            integral: self.integral?,
            cointegral: self.cointegral?,
        })
    }
}

fn scalar(
    field: FieldSpec,
    s: &str,
    context: impl FnOnce() -> String,
) -> Result<Scalar, FileError> {
    parse_rational(s)
        .and_then(|q| field.from_rational(&q))
        .map_err(|source| FileError::Scalar {
            context: context(),
            source,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b4_round_trips() {
        let f = AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::rationals()));
        assert_eq!(parse(&render(&f)).unwrap(), f);
    }

    #[test]
    fn index_out_of_range() {
        let mut f = AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::rationals()));
        f.mul.push((0, 0, 9, "1".into()));
        let err = parse(&render(&f)).unwrap_err();
        assert!(matches!(&err, FileError::Invalid { context, .. } if context.starts_with("mul[")));
        assert!(err.to_string().contains("index 9"));
    }

    #[test]
    fn zero_denominator() {
        let mut f = AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::rationals()));
        f.unit[1] = "1/0".into();
        let err = parse(&render(&f)).unwrap_err();
        assert!(matches!(
            err,
            FileError::Scalar { ref context, source: FieldError::ZeroDenominator(_) } if context == "unit[1]"
        ));
    }

    #[test]
    fn duplicate_triple() {
        let mut f = AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::rationals()));
        let dup = f.comul[0].clone();
        f.comul.push(dup);
        assert!(parse(&render(&f)).unwrap_err().to_string().contains("duplicate"));
    }

    #[test]
    fn rejects_unknown_keys_and_composite_characteristic() {
        let f = AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::rationals()));
        let text = render(&f).replacen("\"dim\"", "\"extra\": 1,\n  \"dim\"", 1);
        assert!(matches!(parse(&text), Err(FileError::Syntax(_))));
        let text = render(&f).replacen("\"characteristic\": 0", "\"characteristic\": 9", 1);
        assert!(parse(&text).unwrap_err().to_string().contains("characteristic"));
    }

    #[test]
    fn field_override() {
        let f = AlgebraFile::from_fixture(&fixtures::nonsbf3(FieldSpec::rationals()).unwrap().fixture);
        let loaded = f.load(Some(7)).unwrap();
        assert_eq!(loaded.field, FieldSpec::prime(7).unwrap());
        assert!(matches!(f.load(Some(2)), Err(FileError::Scalar { .. })));
        let g = AlgebraFile {
            characteristic: 5,
            ..AlgebraFile::from_fixture(&fixtures::b4(FieldSpec::prime(5).unwrap()))
        };
        assert!(matches!(g.load(Some(7)), Err(FileError::OverrideConflict { .. })));
    }
}
