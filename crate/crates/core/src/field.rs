//! Exact ground fields: the rationals and prime fields `F_p`.
//!
//! A [`Scalar`] is tagged with the field it lives in. Arithmetic between
//! scalars of different fields is a programming error and panics; every
//! container in this crate carries a single [`FieldSpec`] so mixing cannot
//! happen through the public API.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted for prime fields (exclusive).
pub const MAX_PRIME: u64 = 1 << 61;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime below 2^61")]
    BadCharacteristic(u64),
    #[error("malformed scalar {0:?}: expected \"n\" or \"num/den\"")]
    Malformed(String),
    #[error("scalar {0:?} has a zero denominator")]
    ZeroDenominator(String),
    #[error("scalar {value:?} is not defined in characteristic {characteristic}")]
    NotInField { value: String, characteristic: u64 },
}

/// The ground field, identified by its characteristic (0 for the rationals).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p < MAX_PRIME && is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(FieldError::BadCharacteristic(p))
        }
    }

    /// `0` gives the rationals, anything else must be a prime.
    pub fn from_characteristic(c: u64) -> Result<Self, FieldError> {
        if c == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rationals(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Modular {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// Image of an exact rational in this field; fails when the denominator
    /// vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        match self.characteristic {
            0 => Ok(Scalar::Rational(q.clone())),
            p => {
                let m = BigInt::from(p);
                let num = reduce(q.numer(), &m);
                let den = reduce(q.denom(), &m);
                if den == 0 {
                    return Err(FieldError::NotInField {
                        value: rational_string(q),
                        characteristic: p,
                    });
                }
                let den_inv = pow_mod(den, p - 2, p);
                Ok(Scalar::Modular {
                    value: mul_mod(num, den_inv, p),
                    modulus: p,
                })
            }
        }
    }

    /// Parses the wire format: `"n"`, `"-n"` or `"num/den"`.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

/// Parses a scalar string into an exact rational, independent of any field.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let malformed = || FieldError::Malformed(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, signed: bool| {
        let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(malformed());
    }
    let n = BigInt::from_str(num).map_err(|_| malformed())?;
    let d = match den {
        Some(d) => {
            if !digits(d, false) {
                return Err(malformed());
            }
            BigInt::from_str(d).map_err(|_| malformed())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(FieldError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(n, d))
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn reduce(v: &BigInt, m: &BigInt) -> u64 {
    v.mod_floor(m).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// An exact element of a [`FieldSpec`].
///
/// Representations are canonical: rationals are reduced with a positive
/// denominator, residues lie in `0..p`. Derived equality is therefore field
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::rationals(),
            Scalar::Modular { modulus, .. } => FieldSpec {
                characteristic: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self / rhs`; panics on division by zero.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }

    /// The exact rational value, when the field is the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&rational_string(q)),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "arithmetic between scalars of different fields");
    a
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => {
                let p = same_modulus(*p, *q);
                Scalar::Modular {
                    value: (a + b) % p,
                    modulus: p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => {
                let p = same_modulus(*p, *q);
                Scalar::Modular {
                    value: mul_mod(*a, *b, p),
                    modulus: p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Convenience for tests and fixtures: `q(3, 2)` is 3/2 in the given field.
pub fn ratio(field: FieldSpec, num: i64, den: i64) -> Scalar {
    field
        .from_rational(&BigRational::new(num.into(), den.into()))
        .expect("denominator invertible in field")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_canonical() {
        let q = FieldSpec::rationals();
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2/3").unwrap().to_string(), "-2/3");
        assert_eq!(q.parse("-4/2").unwrap().to_string(), "-2");
        assert_eq!(q.parse("0/7").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        let q = FieldSpec::rationals();
        assert!(matches!(q.parse("1/0"), Err(FieldError::ZeroDenominator(_))));
        for bad in ["", "1.5", "a", "1/-2", "--1", "1/", "/2", " 1"] {
            assert!(matches!(q.parse(bad), Err(FieldError::Malformed(_))), "{bad}");
        }
    }

    #[test]
    fn modular_reduction() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse("1/2").unwrap().to_string(), "4");
        assert_eq!(f7.parse("-1").unwrap().to_string(), "6");
        assert!(matches!(
            f7.parse("1/14"),
            Err(FieldError::NotInField { characteristic: 7, .. })
        ));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(f2.parse("1/2").is_err());
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(FieldSpec::from_characteristic(0).unwrap().is_rationals());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        // Mersenne prime just below the bound; arithmetic still fits u128
        let big = FieldSpec::prime((1 << 61) - 1).unwrap();
        let x = big.from_i64(-1);
        assert!((&x * &x).is_one());
        assert!(FieldSpec::prime(MAX_PRIME).is_err());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn field_arithmetic() {
        for field in [FieldSpec::rationals(), FieldSpec::prime(11).unwrap()] {
            let a = ratio(field, 3, 2);
            let b = ratio(field, -5, 3);
            let ainv = a.inv().unwrap();
            assert!((&a * &ainv).is_one());
            assert_eq!(&(&a + &b) - &b, a);
            assert_eq!((&a * &b).div(&b), a);
            assert!(field.zero().inv().is_none());
            assert!((&a + &(-&a)).is_zero());
        }
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::rationals().one() + FieldSpec::prime(5).unwrap().one();
    }
}
