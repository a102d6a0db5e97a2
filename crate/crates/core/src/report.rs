//! Pass/fail ledgers for identity checks.

use std::fmt;

use crate::field::Scalar;
use crate::linalg::Matrix;

/// One side of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Scalar(Scalar),
    Vector(Vec<Scalar>),
    Matrix(Matrix),
    Text(String),
}

impl From<Scalar> for WitnessValue {
    fn from(s: Scalar) -> Self {
        WitnessValue::Scalar(s)
    }
}

impl From<Vec<Scalar>> for WitnessValue {
    fn from(v: Vec<Scalar>) -> Self {
        WitnessValue::Vector(v)
    }
}

impl From<Matrix> for WitnessValue {
    fn from(m: Matrix) -> Self {
        WitnessValue::Matrix(m)
    }
}

impl From<bool> for WitnessValue {
    fn from(v: bool) -> Self {
        WitnessValue::Text(v.to_string())
    }
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Scalar(s) => write!(f, "{s}"),
            WitnessValue::Vector(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            WitnessValue::Matrix(m) => {
                let rows: Vec<String> = (0..m.rows())
                    .map(|i| {
                        let r: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
                        format!("[{}]", r.join(", "))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
            WitnessValue::Text(t) => f.write_str(t),
        }
    }
}

/// Concrete counterexample: the basis indices at which the identity was
/// evaluated and the two sides that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: WitnessValue,
    pub rhs: WitnessValue,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}: lhs = {}, rhs = {}", self.indices, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub id: String,
    pub outcome: Outcome,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Fail(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, id: impl Into<String>, outcome: Outcome) {
        self.entries.push(CheckEntry {
            id: id.into(),
            outcome,
        });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(id, Outcome::Pass);
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.push(id, Outcome::Skipped(reason.into()));
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: Witness) {
        self.push(id, Outcome::Fail(witness));
    }

    /// Records `lhs == rhs` evaluated once.
    pub fn check_eq<T>(&mut self, id: impl Into<String>, indices: Vec<usize>, lhs: T, rhs: T)
    where
        T: PartialEq + Into<WitnessValue>,
    {
        if lhs == rhs {
            self.pass(id);
        } else {
            self.fail(
                id,
                Witness {
                    indices,
                    lhs: lhs.into(),
                    rhs: rhs.into(),
                },
            );
        }
    }

    /// Passes unless a witness was produced.
    pub fn require(&mut self, id: impl Into<String>, witness: Option<Witness>) {
        match witness {
            None => self.pass(id),
            Some(w) => self.fail(id, w),
        }
    }

    /// Records an identity checked over many index tuples; the first failing
    /// tuple (in iteration order) becomes the witness.
    pub fn scan<T, I>(&mut self, id: impl Into<String>, cases: I)
    where
        T: PartialEq + Into<WitnessValue>,
        I: IntoIterator<Item = (Vec<usize>, T, T)>,
    {
        let id = id.into();
        match first_mismatch(cases) {
            None => self.pass(id),
            Some(w) => self.fail(id, w),
        }
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        !self.entries.iter().any(CheckEntry::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.failed())
    }

    pub fn get(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

pub fn first_mismatch<T, I>(cases: I) -> Option<Witness>
where
    T: PartialEq + Into<WitnessValue>,
    I: IntoIterator<Item = (Vec<usize>, T, T)>,
{
    cases
        .into_iter()
        .find(|(_, l, r)| l != r)
        .map(|(indices, lhs, rhs)| Witness {
            indices,
            lhs: lhs.into(),
            rhs: rhs.into(),
        })
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.outcome {
                Outcome::Pass => writeln!(f, "[pass] {}", e.id)?,
                Outcome::Fail(w) => writeln!(f, "[FAIL] {} {}", e.id, w)?,
                Outcome::Skipped(r) => writeln!(f, "[skip] {} ({})", e.id, r)?,
            }
        }
        Ok(())
    }
}
