//! Exact scalar arithmetic over prime fields GF(p) and the rationals.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest admissible prime modulus; keeps u32 products overflow-safe in u64.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("mixed field operands: {0} vs {1}")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {text:?}: {reason}")]
    BadScalar { text: String, reason: String },
    #[error("cannot parse field {0:?}: expected a prime below 2^31 or \"rational\"")]
    BadFieldSpec(String),
}

/// Coefficient field: GF(p) for a prime p < 2^31, or arbitrary-precision rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    #[serde(rename = "prime")]
    Prime(u32),
    #[serde(rename = "rational")]
    Rational,
}

impl FieldSpec {
    /// Validates primality and the modulus bound.
    pub fn prime(p: u64) -> Result<FieldSpec, ArithError> {
        if p > MAX_PRIME as u64 || !is_prime(p) {
            return Err(ArithError::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Accepts a decimal prime or the word "rational".
    pub fn parse(text: &str) -> Result<FieldSpec, ArithError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("rational") {
            return Ok(FieldSpec::Rational);
        }
        match t.parse::<u64>() {
            Ok(p) => FieldSpec::prime(p),
            Err(_) => Err(ArithError::BadFieldSpec(text.to_string())),
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Prime { modulus: p, value: 0 },
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Prime { modulus: p, value: 1 % p },
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    /// Embeds a signed integer, reducing mod p for prime fields.
    pub fn integer(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => {
                let m = p as i64;
                let v = n.rem_euclid(m) as u32;
                Scalar::Prime { modulus: p, value: v }
            }
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element in canonical form: prime values lie in [0, p),
/// rationals are fully reduced with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime { modulus: u32, value: u32 },
    Rational(BigRational),
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
            Scalar::Rational(_) => FieldSpec::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { modulus, value } => *value == 1 % *modulus,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ArithError> {
        let (a, b) = (self.spec(), other.spec());
        if a == b {
            Ok(())
        } else {
            Err(ArithError::MixedFields(a, b))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { modulus: p, value: a }, Scalar::Prime { value: b, .. }) => {
                let v = ((*a as u64 + *b as u64) % *p as u64) as u32;
                Scalar::Prime { modulus: *p, value: v }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!("same_field checked"),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { modulus: p, value: a }, Scalar::Prime { value: b, .. }) => {
                let v = ((*a as u64 * *b as u64) % *p as u64) as u32;
                Scalar::Prime { modulus: *p, value: v }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!("same_field checked"),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        self.mul(&other.inverse()?)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Prime { modulus: p, value: a } => {
                let v = if *a == 0 { 0 } else { p - a };
                Scalar::Prime { modulus: *p, value: v }
            }
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }

    pub fn inverse(&self) -> Result<Scalar, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Prime { modulus: p, value: a } => {
                Scalar::Prime { modulus: *p, value: mod_inverse(*a, *p) }
            }
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }

    /// Parses the text form: a decimal integer for prime fields (any sign,
    /// reduced mod p), "a" or "a/b" for rationals.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Scalar, ArithError> {
        let t = text.trim();
        let bad = |reason: &str| ArithError::BadScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        match spec {
            FieldSpec::Prime(p) => {
                let n = BigInt::from_str(t).map_err(|e| bad(&e.to_string()))?;
                let m = BigInt::from(p);
                let v = ((n % &m) + &m) % &m;
                let value: u32 = v.try_into().expect("reduced residue fits u32");
                Ok(Scalar::Prime { modulus: p, value })
            }
            FieldSpec::Rational => {
                let (num, den) = match t.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (t, "1"),
                };
                let n = BigInt::from_str(num.trim()).map_err(|e| bad(&e.to_string()))?;
                let d = BigInt::from_str(den.trim()).map_err(|e| bad(&e.to_string()))?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Renders a rational in the report text form: "a" when integral, else "a/b".
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p, valid since p is prime and a != 0.
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
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

/// Field operations over a fixed element representation. The linear algebra
/// engines are generic over this, so prime fields run on machine words while
/// rationals use arbitrary precision.
pub(crate) trait FieldCtx {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element; callers guard the zero case.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    /// None if the scalar belongs to a different field.
    fn from_scalar(&self, s: &Scalar) -> Option<Self::Elem>;

    /// a - m*b, the elimination kernel step.
    fn fused_sub_mul(&self, a: &Self::Elem, m: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(m, b))
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeCtx {
    pub p: u32,
}

impl FieldCtx for PrimeCtx {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        debug_assert!(*a != 0);
        mod_inverse(*a, self.p)
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar::Prime { modulus: self.p, value: *a }
    }
    fn from_scalar(&self, s: &Scalar) -> Option<u32> {
        match s {
            Scalar::Prime { modulus, value } if *modulus == self.p => Some(*value),
            _ => None,
        }
    }
    fn fused_sub_mul(&self, a: &u32, m: &u32, b: &u32) -> u32 {
        let prod = *m as u64 * *b as u64 % self.p as u64;
        ((*a as u64 + self.p as u64 - prod) % self.p as u64) as u32
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RationalCtx;

impl FieldCtx for RationalCtx {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero());
        a.recip()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
    fn from_scalar(&self, s: &Scalar) -> Option<BigRational> {
        match s {
            Scalar::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }
}

/// Ceiling of a nonnegative rational, as u64.
pub fn ceil_ratio(num: u64, den: u64) -> u64 {
    assert!(den > 0);
    num.div_ceil(den)
}

/// Exact comparison x >= sqrt(y) - 1 for rational y, decided by squaring:
/// x + 1 >= 0 always holds here, so this is (x+1)^2 >= y.
pub fn ge_sqrt_minus_one(x: &BigRational, y: &BigRational) -> bool {
    let shifted = x + BigRational::one();
    debug_assert!(!shifted.is_negative());
    &shifted * &shifted >= *y
}
