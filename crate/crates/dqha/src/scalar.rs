//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Every value is a canonical representative (lowest terms over the
//! rationals, residues in `[0, p)` over a prime field), so equality is
//! structural and serialization is bit-exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{DqhaError, Result};

/// Descriptor of the scalar field all structure constants live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ScalarField {
    Rationals,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl ScalarField {
    /// A prime field descriptor; rejects composite moduli.
    pub fn prime(p: u64) -> Result<ScalarField> {
        if is_prime(p) {
            Ok(ScalarField::Prime(p))
        } else {
            Err(DqhaError::ShapeMismatch(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            ScalarField::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            ScalarField::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Prime { p: *p, value: r }
            }
        }
    }

    /// Parse the wire form: `n/d` in lowest terms over the rationals
    /// (denominator omitted when 1), decimal residues over a prime field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            ScalarField::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| DqhaError::ParseError(format!("bad rational {s:?}")))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| DqhaError::ParseError(format!("bad rational {s:?}")))?;
                if d.is_zero() {
                    return Err(DqhaError::ParseError(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            ScalarField::Prime(p) => {
                let neg = s.starts_with('-');
                let digits = if neg { &s[1..] } else { s };
                let v: u64 = digits
                    .parse()
                    .map_err(|_| DqhaError::ParseError(format!("bad residue {s:?}")))?;
                let r = v % p;
                Ok(Scalar::Prime {
                    p: *p,
                    value: if neg && r != 0 { p - r } else { r },
                })
            }
        }
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarField::Rationals => write!(f, "q"),
            ScalarField::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// A single exact field element.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> ScalarField {
        match self {
            Scalar::Rational(_) => ScalarField::Rationals,
            Scalar::Prime { p, .. } => ScalarField::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `NonInvertible` on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(DqhaError::NonInvertible);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: mod_pow(*value, *p - 2, *p),
            },
        })
    }

    pub fn pow(&self, mut n: i64) -> Result<Scalar> {
        let base = if n < 0 {
            n = -n;
            self.inv()?
        } else {
            self.clone()
        };
        let mut acc = base.field().one();
        for _ in 0..n {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn mismatch() -> ! {
    panic!("scalar field mismatch in arithmetic")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) if p == q => {
                Scalar::Prime {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) if p == q => {
                Scalar::Prime {
                    p: *p,
                    value: (*a as u128 * *b as u128 % *p as u128) as u64,
                }
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps the denominator positive; defensive only.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(ScalarField::prime(13).is_ok());
        assert!(ScalarField::prime(12).is_err());
        assert!(ScalarField::prime(1).is_err());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let q = ScalarField::Rationals;
        for s in ["0", "5", "-3", "2/3", "-7/4"] {
            let v = q.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        // normalization to lowest terms
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        let f13 = ScalarField::prime(13).unwrap();
        assert_eq!(f13.parse("-1").unwrap().to_string(), "12");
        assert_eq!(f13.parse("26").unwrap().to_string(), "0");
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(ScalarField::Rationals.zero().inv().is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| {
            Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
        })
    }

    fn arb_f13() -> impl Strategy<Value = Scalar> {
        (0u64..13).prop_map(|v| Scalar::Prime { p: 13, value: v })
    }

    proptest! {
        #[test]
        fn field_axioms_rationals(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn field_axioms_f13(a in arb_f13(), b in arb_f13(), c in arb_f13()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
