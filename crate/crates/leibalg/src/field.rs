//! Exact scalars over prime fields GF(p) and over the rationals.
//!
//! Every value is kept canonical: prime residues lie in `[0, p)`, rationals
//! are reduced fractions with a positive denominator. There is no floating
//! point anywhere in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest supported prime modulus. Residues fit comfortably in a machine word.
pub const MAX_PRIME: u16 = 251;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus {0} exceeds the supported bound {MAX_PRIME}")]
    ModulusTooLarge(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {0} is not invertible modulo {1}")]
    NonInvertibleDenominator(String, u16),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("cannot parse field descriptor {0:?}")]
    ParseDescriptor(String),
}

fn is_prime_u16(n: u16) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    let n = n as u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Field descriptor: a prime field GF(p) with p <= 251, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Gf(u16),
    Rational,
}

impl Field {
    /// Validated constructor for GF(p).
    pub fn gf(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME as u64 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime_u16(p as u16) {
            return Err(FieldError::NonPrimeModulus(p));
        }
        Ok(Field::Gf(p as u16))
    }

    pub fn rational() -> Self {
        Field::Rational
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Gf(_))
    }

    pub fn modulus(&self) -> Option<u16> {
        match self {
            Field::Gf(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Gf(p) => Scalar::Mod { value: 0, modulus: *p },
            Field::Rational => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Gf(p) => Scalar::Mod { value: 1 % p, modulus: *p },
            Field::Rational => Scalar::Rat(Box::new(BigRational::one())),
        }
    }

    /// Canonical image of an integer in this field.
    pub fn element(&self, n: i64) -> Scalar {
        match self {
            Field::Gf(p) => {
                let p64 = *p as i64;
                let v = ((n % p64) + p64) % p64;
                Scalar::Mod { value: v as u16, modulus: *p }
            }
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    /// Canonical image of a fraction. Over GF(p) the denominator must be a unit.
    pub fn element_ratio(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::ZeroDenominator);
        }
        match self {
            Field::Gf(p) => {
                let d = self.element(den);
                if d.is_zero() {
                    return Err(FieldError::NonInvertibleDenominator(den.to_string(), *p));
                }
                Ok(&self.element(num) * &d.inv()?)
            }
            Field::Rational => Ok(Scalar::Rat(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    /// Residue from an enumeration digit. Prime fields only.
    pub(crate) fn residue(&self, digit: u16) -> Scalar {
        match self {
            Field::Gf(p) => {
                debug_assert!(digit < *p);
                Scalar::Mod { value: digit, modulus: *p }
            }
            Field::Rational => unreachable!("enumeration digits require a prime field"),
        }
    }

    /// Parse a coefficient in this field: an integer or a fraction `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let text = text.trim();
        let bad = || FieldError::ParseScalar(text.to_string());
        let (num_s, den_s) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text, None),
        };
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let den: BigInt = match den_s {
            Some(s) => s.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        match self {
            Field::Gf(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u16 {
                    let m = ((x % &pb) + &pb) % &pb;
                    let digits = m.to_u64_digits().1;
                    *digits.first().unwrap_or(&0) as u16
                };
                let n = Scalar::Mod { value: reduce(&num), modulus: *p };
                let d = Scalar::Mod { value: reduce(&den), modulus: *p };
                if d.is_zero() {
                    return Err(FieldError::NonInvertibleDenominator(den.to_string(), *p));
                }
                Ok(&n * &d.inv()?)
            }
            Field::Rational => Ok(Scalar::Rat(Box::new(BigRational::new(num, den)))),
        }
    }

    /// Parse a textual descriptor, `"GF(p)"` or `"Q"`.
    pub fn parse(text: &str) -> Result<Field, FieldError> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(inner) = t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
            let p: u64 = inner
                .trim()
                .parse()
                .map_err(|_| FieldError::ParseDescriptor(text.to_string()))?;
            return Field::gf(p);
        }
        Err(FieldError::ParseDescriptor(text.to_string()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// An exact field element: a residue mod p or an arbitrary-precision rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u16, modulus: u16 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Gf(*modulus),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, modulus } => *value == 1 % modulus,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        match (self, other) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                if p != q {
                    return Err(FieldError::MixedFields);
                }
                Ok(Scalar::Mod { value: ((*a as u32 + *b as u32) % *p as u32) as u16, modulus: *p })
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(Box::new(a.as_ref() + b.as_ref()))),
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        match (self, other) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                if p != q {
                    return Err(FieldError::MixedFields);
                }
                Ok(Scalar::Mod { value: ((*a as u32 * *b as u32) % *p as u32) as u16, modulus: *p })
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(Box::new(a.as_ref() * b.as_ref()))),
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn checked_neg(&self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => {
                Scalar::Mod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
            Scalar::Rat(r) => Scalar::Rat(Box::new(-r.as_ref())),
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        match self {
            Scalar::Mod { value, modulus } => {
                // extended Euclid on small integers
                let (mut r0, mut r1) = (*modulus as i32, *value as i32);
                let (mut t0, mut t1) = (0i32, 1i32);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                debug_assert_eq!(r0, 1);
                let p = *modulus as i32;
                let v = ((t0 % p) + p) % p;
                Ok(Scalar::Mod { value: v as u16, modulus: *modulus })
            }
            Scalar::Rat(r) => Ok(Scalar::Rat(Box::new(r.recip()))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("mixed-field operands")
            }
        }
    };
}
scalar_binop!(Add, add, checked_add);
scalar_binop!(Mul, mul, checked_mul);

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_add(&rhs.checked_neg()).expect("mixed-field operands")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.checked_neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_integer_mod_p() {
        let f = Field::gf(3).unwrap();
        assert_eq!(f.element(7), f.element(1));
        assert_eq!(f.element(-1), f.element(2));
        assert_eq!(f.element(0), f.zero());
    }

    #[test]
    fn normalize_rational_sign_and_gcd() {
        let q = Field::rational();
        let half = q.element_ratio(-2, -4).unwrap();
        assert_eq!(half, q.element_ratio(1, 2).unwrap());
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn normalize_zero_gf2() {
        let f = Field::gf(2).unwrap();
        assert!(f.element(0).is_zero());
        assert_eq!(f.element(4), f.zero());
    }

    #[test]
    fn inverse_in_gf5() {
        let f = Field::gf(5).unwrap();
        assert_eq!(f.element(2).inv().unwrap(), f.element(3));
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn rational_addition() {
        let q = Field::rational();
        let a = q.element_ratio(1, 2).unwrap();
        let b = q.element_ratio(1, 3).unwrap();
        assert_eq!(&a + &b, q.element_ratio(5, 6).unwrap());
    }

    #[test]
    fn gf3_multiplication_wraps() {
        let f = Field::gf(3).unwrap();
        assert_eq!(&f.element(2) * &f.element(2), f.element(1));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Field::gf(3).unwrap().element(1);
        let b = Field::gf(5).unwrap().element(1);
        assert_eq!(a.checked_add(&b), Err(FieldError::MixedFields));
        let r = Field::rational().element(1);
        assert_eq!(a.checked_mul(&r), Err(FieldError::MixedFields));
    }

    #[test]
    fn invalid_moduli_rejected() {
        assert!(matches!(Field::gf(4), Err(FieldError::NonPrimeModulus(4))));
        assert!(matches!(Field::gf(1), Err(FieldError::NonPrimeModulus(1))));
        assert!(matches!(Field::gf(257), Err(FieldError::ModulusTooLarge(257))));
        assert!(Field::gf(251).is_ok());
    }

    #[test]
    fn parse_descriptor_round_trip() {
        for text in ["GF(2)", "GF(251)", "Q"] {
            let f = Field::parse(text).unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!(Field::parse("GF(6)").is_err());
        assert!(Field::parse("R").is_err());
    }

    #[test]
    fn parse_scalar_fraction_under_gf2_rejected() {
        let f = Field::gf(2).unwrap();
        assert!(matches!(
            f.parse_scalar("1/2"),
            Err(FieldError::NonInvertibleDenominator(_, 2))
        ));
        assert_eq!(f.parse_scalar("1/3").unwrap(), f.element(1));
    }

    #[test]
    fn parse_scalar_idempotent_rendering() {
        let q = Field::rational();
        for text in ["0", "-7", "1/2", "-3/4", "22/7"] {
            let s = q.parse_scalar(text).unwrap();
            assert_eq!(q.parse_scalar(&s.to_string()).unwrap(), s);
        }
        let f = Field::gf(7).unwrap();
        for text in ["0", "6", "-1", "3/2"] {
            let s = f.parse_scalar(text).unwrap();
            assert_eq!(f.parse_scalar(&s.to_string()).unwrap(), s);
        }
    }

    fn gf_scalar(p: u64) -> impl Strategy<Value = Scalar> {
        (0..p as i64).prop_map(move |v| Field::gf(p).unwrap().element(v))
    }

    fn rat_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20)
            .prop_map(|(n, d)| Field::rational().element_ratio(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn gf_field_axioms(a in gf_scalar(251), b in gf_scalar(251), c in gf_scalar(251)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rational_field_axioms(a in rat_scalar(), b in rat_scalar(), c in rat_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn normalize_idempotent(n in -1000i64..1000, p in prop::sample::select(vec![2u64, 3, 5, 251])) {
            let f = Field::gf(p).unwrap();
            let once = f.element(n);
            if let Scalar::Mod { value, .. } = once {
                prop_assert_eq!(f.element(value as i64), once);
            }
        }
    }
}
