//! Exact scalar domains: arbitrary-precision rationals and prime fields Z_q.
//!
//! Every operation is exact; there is no floating point anywhere in this
//! crate. Rationals are kept in lowest terms with positive denominator and
//! residues as canonical representatives in `[0, q)`, so equality is plain
//! structural comparison.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field: Q or Z_q with q an odd prime.
///
/// Characteristic 2 is rejected at construction; the doubling construction
/// needs 2 to be invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField { q: u64 },
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// A prime field Z_q. Fails unless `q` is an odd prime >= 3.
    pub fn prime(q: u64) -> Result<Self> {
        if q < 3 || q % 2 == 0 || !is_prime_u64(q) {
            return Err(Error::InvalidModulus { q });
        }
        Ok(FieldSpec::PrimeField { q })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { q } => Some(*q),
        }
    }

    fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { q } => write!(f, "Z_{}", q),
        }
    }
}

/// Deterministic Miller-Rabin; the witness set covers the full u64 range.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue(u64),
}

/// An element of the coefficient field named by its [`FieldSpec`].
///
/// Values are immutable; all operations return fresh scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    spec: FieldSpec,
    repr: Repr,
}

impl Scalar {
    pub fn zero(spec: FieldSpec) -> Self {
        Self::from_integer(spec, &BigInt::zero())
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_integer(spec, &BigInt::one())
    }

    /// Embeds an integer into the field (identity on Q, reduction mod q).
    pub fn from_integer(spec: FieldSpec, n: &BigInt) -> Self {
        let repr = match spec {
            FieldSpec::Rationals => Repr::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField { q } => {
                let m = n.mod_floor(&BigInt::from(q));
                Repr::Residue(m.to_u64().expect("canonical residue fits in u64"))
            }
        };
        Scalar { spec, repr }
    }

    pub fn from_i64(spec: FieldSpec, n: i64) -> Self {
        Self::from_integer(spec, &BigInt::from(n))
    }

    /// Wraps an exact rational as an element of Q.
    pub fn rational(r: BigRational) -> Self {
        Scalar {
            spec: FieldSpec::Rationals,
            repr: Repr::Rational(r),
        }
    }

    /// Embeds a rational into the field; fails in Z_q when the denominator
    /// vanishes mod q.
    pub fn from_rational(spec: FieldSpec, r: &BigRational) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => Ok(Self::rational(r.clone())),
            FieldSpec::PrimeField { .. } => {
                let num = Self::from_integer(spec, r.numer());
                let den = Self::from_integer(spec, r.denom());
                num.mul(&den.inv()?)
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue(r) => *r == 1,
        }
    }

    /// The underlying rational, when the field is Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Residue(_) => None,
        }
    }

    /// The canonical residue in `[0, q)`, when the field is Z_q.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Rational(_) => None,
            Repr::Residue(r) => Some(*r),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.spec.check_same(&rhs.spec)?;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                let q = self.spec.modulus().unwrap();
                Repr::Residue(((*a as u128 + *b as u128) % q as u128) as u64)
            }
            _ => unreachable!("spec equality implies matching representations"),
        };
        Ok(Scalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.spec.check_same(&rhs.spec)?;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                Repr::Residue(mul_mod(*a, *b, self.spec.modulus().unwrap()))
            }
            _ => unreachable!("spec equality implies matching representations"),
        };
        Ok(Scalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Residue(a) => {
                let q = self.spec.modulus().unwrap();
                Repr::Residue(if *a == 0 { 0 } else { q - *a })
            }
        };
        Scalar {
            spec: self.spec,
            repr,
        }
    }

    pub fn square(&self) -> Scalar {
        self.mul(self).expect("same field")
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::InversionOfZero { field: self.spec });
        }
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(a.recip()),
            Repr::Residue(a) => {
                let q = self.spec.modulus().unwrap();
                Repr::Residue(pow_mod(*a, q - 2, q))
            }
        };
        Ok(Scalar {
            spec: self.spec,
            repr,
        })
    }

    /// Doubles the scalar; used by traces, where 2 != 0 matters.
    pub fn double(&self) -> Scalar {
        self.add(self).expect("same field")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => write!(f, "{}", r),
            Repr::Residue(r) => write!(f, "{}", r),
        }
    }
}
