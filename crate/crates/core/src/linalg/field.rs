use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted prime modulus. Residue products must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The field of scalars: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "modulus {p} is not a prime in [2, 2^31]"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Characteristic; zero for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// Builds `num/den`; `None` when the denominator vanishes in this field.
    pub fn fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Residue `value mod p`. Panics over the rationals.
    pub fn residue(&self, value: u64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Residue {
                value: value % p,
                modulus: *p,
            },
            FieldSpec::Rationals => panic!("residue requested over the rationals"),
        }
    }

    /// Parses `"n"` or `"a/b"`, reducing into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::InvalidScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("not an integer or fraction"))?;
        let den: BigInt = den.parse().map_err(|_| bad("not an integer or fraction"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let modulus = BigInt::from(*p);
                let n = num.mod_floor(&modulus).to_u64().expect("reduced residue");
                let d = den.mod_floor(&modulus).to_u64().expect("reduced residue");
                let n = self.residue(n);
                let d = self.residue(d);
                n.div(&d).ok_or_else(|| bad("denominator vanishes modulo p"))
            }
        }
    }

    /// Whether `s` is an element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue { value, modulus }) => p == modulus && value < p,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator, residues
/// in `[0, p)`, so structural equality is field equality. Mixing elements of
/// different fields in arithmetic is a logic error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    /// The residue value; `None` over the rationals.
    pub fn residue_value(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Residue {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Residue {
                value: (a + modulus - b) % modulus,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Residue {
                value: a * b % modulus,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar {
    /// Sign of a rational; residues report `0` or `1`.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(r) if r.is_negative() => -1,
            Scalar::Rational(r) if r.is_zero() => 0,
            Scalar::Residue { value: 0, .. } => 0,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let q = FieldSpec::Rationals;
        let a = q.parse_scalar("6/-4").unwrap();
        assert_eq!(a, q.parse_scalar("-3/2").unwrap());
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(q.parse_scalar("4/2").unwrap().to_string(), "2");
    }

    #[test]
    fn residues_reduce() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.parse_scalar("5").unwrap().to_string(), "2");
        assert_eq!(f3.parse_scalar("-1").unwrap().to_string(), "2");
        // 1/2 = 2 in F_3
        assert_eq!(f3.parse_scalar("1/2").unwrap().to_string(), "2");
        assert!(f3.parse_scalar("1/3").is_err());
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn inverse_mod_p() {
        let f7 = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let s = f7.residue(v);
            assert!((&s * &s.inv().unwrap()).is_one());
        }
        assert!(f7.zero().inv().is_none());
    }

    #[test]
    fn bad_scalar_text() {
        let q = FieldSpec::Rationals;
        assert!(q.parse_scalar("x").is_err());
        assert!(q.parse_scalar("1/0").is_err());
    }
}
