//! Exact scalars over the rationals or a prime field F_p.
//!
//! Every value is exact: rationals are arbitrary-precision `BigRational`s in
//! normalized form (reduced, positive denominator), modular values are reduced
//! residues carrying their modulus. There is no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Which field the computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } if is_prime_u64(*p) => Ok(()),
            FieldSpec::Prime { p } => Err(Error::NotPrime(*p)),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime { p } => FieldElement::Modular {
                value: reduce_i64(n, *p),
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from(n.clone())),
            FieldSpec::Prime { p } => FieldElement::Modular {
                value: reduce_bigint(n, *p),
                modulus: *p,
            },
        }
    }

    /// Parses an exact coefficient string: `"3/2"`, `"-1"` over the rationals,
    /// any integer literal (reduced mod p) over F_p.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        match self {
            FieldSpec::Rational => {
                if let Some((num, den)) = s.split_once('/') {
                    let num: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
                    let den: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
                    if den.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    Ok(FieldElement::Rational(BigRational::new(num, den)))
                } else {
                    let n: BigInt = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))?;
                    Ok(FieldElement::Rational(BigRational::from(n)))
                }
            }
            FieldSpec::Prime { p } => {
                let n: BigInt = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer literal {s:?}")))?;
                Ok(FieldElement::Modular {
                    value: reduce_bigint(&n, *p),
                    modulus: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// An exact element of Q or F_p.
///
/// Arithmetic requires both operands from the same field; mixing fields is a
/// programming error and panics, since all public constructors check fields at
/// the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Modular { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<FieldElement> {
        match self {
            FieldElement::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(FieldElement::Rational(r.recip()))
                }
            }
            FieldElement::Modular { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(FieldElement::Modular {
                        value: mod_inverse(*value, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) if p == q => FieldElement::Modular {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("field mismatch in scalar addition"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) if p == q => FieldElement::Modular {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("field mismatch in scalar multiplication"),
        }
    }

    /// Division; panics on division by zero (callers check first).
    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self.mul(&other.inverse().expect("division by zero"))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let m = n.rem_euclid(p as i64);
    m as u64
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    if digits.is_empty() {
        0
    } else {
        digits[0]
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit; p is prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a non-unit");
    t0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow_mod = |mut b: u64, mut e: u64| -> u64 {
        let mut acc = 1u128;
        let mut base = b as u128 % n as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % n as u128;
            }
            base = base * base % n as u128;
            e >>= 1;
        }
        b = acc as u64;
        b
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
