//! The quadratic ring Z[alpha] with alpha = (l + sqrt(l^2 + 4)) / 2.
//!
//! Elements are written (a + b*sqrt(D))/2 with D = l^2 + 4, which makes
//! alpha itself exactly representable. Powers of alpha and its conjugate
//! beta evaluate Binet's formula without ever leaving exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element (a + b*sqrt(D))/2 of the ring generated by alpha, D = l^2 + 4.
///
/// Closure of Z[alpha] forces a = l*b (mod 2): every element is
/// u + v*alpha = ((2u + l*v) + v*sqrt(D))/2 for integers u, v. For odd l
/// this is the half-integer condition a = b (mod 2); for even l it says a
/// is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt {
    l: u64,
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    pub fn new(l: u64, a: BigInt, b: BigInt) -> Result<Self> {
        if l < 1 {
            return Err(Error::invalid("quadratic ring parameter l must be >= 1"));
        }
        let lb = BigInt::from(l) * &b;
        if (&a - lb).mod_floor(&BigInt::from(2)) != BigInt::zero() {
            return Err(Error::QuadParity {
                l,
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(QuadInt { l, a, b })
    }

    /// alpha = (l + sqrt(D))/2, the larger root of x^2 - l*x - 1 = 0.
    pub fn alpha(l: u64) -> Result<Self> {
        Self::new(l, BigInt::from(l), BigInt::one())
    }

    /// beta = (l - sqrt(D))/2, the conjugate root.
    pub fn beta(l: u64) -> Result<Self> {
        Self::new(l, BigInt::from(l), -BigInt::one())
    }

    /// The multiplicative identity (2 + 0*sqrt(D))/2.
    pub fn one(l: u64) -> Result<Self> {
        Self::new(l, BigInt::from(2), BigInt::zero())
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// Numerator of the rational part doubled: the `a` in (a + b*sqrt(D))/2.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of sqrt(D) doubled: the `b` in (a + b*sqrt(D))/2.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn conj(&self) -> Self {
        QuadInt {
            l: self.l,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    fn check_same_ring(&self, rhs: &Self) -> Result<()> {
        if self.l == rhs.l {
            Ok(())
        } else {
            Err(Error::QuadRingMismatch {
                left: self.l,
                right: rhs.l,
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_ring(rhs)?;
        Ok(QuadInt {
            l: self.l,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_ring(rhs)?;
        Ok(QuadInt {
            l: self.l,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        })
    }

    /// Exact product:
    /// ((a1 + b1 sqrt(D))/2) ((a2 + b2 sqrt(D))/2)
    ///   = ((a1 a2 + b1 b2 D)/2 + ((a1 b2 + a2 b1)/2) sqrt(D)) / 2.
    /// Both halvings are exact whenever the operands satisfy the closure
    /// invariant.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_ring(rhs)?;
        let d: BigInt = BigInt::from(self.l) * BigInt::from(self.l) + 4;
        let two = BigInt::from(2);
        let a_num = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b_num = &self.a * &rhs.b + &rhs.a * &self.b;
        let (a, ra) = a_num.div_rem(&two);
        let (b, rb) = b_num.div_rem(&two);
        if !ra.is_zero() || !rb.is_zero() {
            return Err(Error::internal(
                "quadratic ring product left the half-integer lattice",
            ));
        }
        Ok(QuadInt { l: self.l, a, b })
    }

    /// Power by repeated squaring; the empty product is 1.
    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut acc = QuadInt::one(self.l)?;
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_times_beta_is_minus_one() {
        // alpha*beta = (l^2 - D)/4 = -1
        for l in 1..=5 {
            let prod = QuadInt::alpha(l)
                .unwrap()
                .mul(&QuadInt::beta(l).unwrap())
                .unwrap();
            assert_eq!(prod, QuadInt::new(l, BigInt::from(-2), BigInt::zero()).unwrap());
        }
    }

    #[test]
    fn alpha_squared_satisfies_minimal_polynomial() {
        // alpha^2 = l*alpha + 1
        for l in 1..=5u64 {
            let alpha = QuadInt::alpha(l).unwrap();
            let lhs = alpha.mul(&alpha).unwrap();
            let l_alpha = QuadInt::new(l, BigInt::from(l * l), BigInt::from(l)).unwrap();
            let rhs = l_alpha.add(&QuadInt::one(l).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        // l = 1: alpha^2 = (3 + sqrt(5))/2
        let a2 = QuadInt::alpha(1).unwrap().pow(2).unwrap();
        assert_eq!(a2, QuadInt::new(1, BigInt::from(3), BigInt::one()).unwrap());
    }

    #[test]
    fn cube_matches_repeated_multiplication() {
        // oracle: alpha^3 by two explicit multiplications
        let alpha = QuadInt::alpha(1).unwrap();
        let expected = alpha.mul(&alpha).unwrap().mul(&alpha).unwrap();
        assert_eq!(alpha.pow(3).unwrap(), expected);
        // cross-check against alpha^n = p_n*alpha + p_{n-1}: p_3 = 2, p_2 = 1
        assert_eq!(expected, QuadInt::new(1, BigInt::from(4), BigInt::from(2)).unwrap());
    }

    #[test]
    fn conjugate_sum_is_l() {
        // alpha + beta = l
        let sum = QuadInt::alpha(2)
            .unwrap()
            .add(&QuadInt::beta(2).unwrap())
            .unwrap();
        assert_eq!(sum, QuadInt::new(2, BigInt::from(4), BigInt::zero()).unwrap());
    }

    #[test]
    fn zeroth_power_is_one() {
        let x = QuadInt::new(3, BigInt::from(5), BigInt::from(1)).unwrap();
        assert_eq!(x.pow(0).unwrap(), QuadInt::one(3).unwrap());
    }

    #[test]
    fn parity_invariant_enforced() {
        // l odd: a and b must share parity
        assert!(QuadInt::new(1, BigInt::from(1), BigInt::from(2)).is_err());
        assert!(QuadInt::new(1, BigInt::from(1), BigInt::from(3)).is_ok());
        // l even: a must be even, b is free (alpha itself has a = 2, b = 1)
        assert!(QuadInt::new(2, BigInt::from(2), BigInt::from(1)).is_ok());
        assert!(QuadInt::new(2, BigInt::from(1), BigInt::from(1)).is_err());
    }

    #[test]
    fn mismatched_rings_rejected() {
        let x = QuadInt::alpha(1).unwrap();
        let y = QuadInt::alpha(2).unwrap();
        assert!(matches!(x.mul(&y), Err(Error::QuadRingMismatch { .. })));
    }
}
