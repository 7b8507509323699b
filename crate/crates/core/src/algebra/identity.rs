//! Structural identity checks: which of the classical algebra laws an
//! A_t satisfies, probed on every basis tuple (in small dimensions) and on
//! seeded pseudo-random elements.
//!
//! The sweeps are deterministic given the seed, and the seed travels with
//! the report so a counterexample can always be replayed.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

use super::{AlgebraSpec, CDElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// x^2 - t(x) x + n(x) 1 = 0
    Quadratic,
    /// (x y) x = x (y x)
    Flexible,
    /// x^2 y = x (x y) and x y^2 = (x y) y
    Alternative,
    /// n(x y) = n(x) n(y)
    Composition,
    /// x y = y x
    Commutative,
    /// (x y) z = x (y z)
    Associative,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 6] = [
        IdentityKind::Quadratic,
        IdentityKind::Flexible,
        IdentityKind::Alternative,
        IdentityKind::Composition,
        IdentityKind::Commutative,
        IdentityKind::Associative,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::Quadratic => "quadratic",
            IdentityKind::Flexible => "flexible",
            IdentityKind::Alternative => "alternative",
            IdentityKind::Composition => "composition",
            IdentityKind::Commutative => "commutative",
            IdentityKind::Associative => "associative",
        }
    }

    fn arity(&self) -> usize {
        match self {
            IdentityKind::Quadratic => 1,
            IdentityKind::Associative => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown identity kind: {s}")))
    }
}

/// Outcome of probing one identity on one algebra.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub seed: u64,
    pub random_samples: usize,
    pub basis_tuples: usize,
    pub passed: bool,
    pub counterexample: Option<Vec<CDElement>>,
}

fn holds(kind: IdentityKind, elems: &[CDElement]) -> Result<bool> {
    match kind {
        IdentityKind::Quadratic => {
            let x = &elems[0];
            let x2 = x.mul(x)?;
            let tx = x.scale(&x.trace())?;
            let nx = CDElement::one(x.spec()).scale(&x.norm())?;
            Ok(x2.sub(&tx)?.add(&nx)?.is_zero())
        }
        IdentityKind::Flexible => {
            let (x, y) = (&elems[0], &elems[1]);
            Ok(x.mul(y)?.mul(x)? == x.mul(&y.mul(x)?)?)
        }
        IdentityKind::Alternative => {
            let (x, y) = (&elems[0], &elems[1]);
            let left = x.mul(x)?.mul(y)? == x.mul(&x.mul(y)?)?;
            let right = x.mul(&y.mul(y)?)? == x.mul(y)?.mul(y)?;
            Ok(left && right)
        }
        IdentityKind::Composition => {
            let (x, y) = (&elems[0], &elems[1]);
            Ok(x.mul(y)?.norm() == x.norm().mul(&y.norm())?)
        }
        IdentityKind::Commutative => {
            let (x, y) = (&elems[0], &elems[1]);
            Ok(x.mul(y)? == y.mul(x)?)
        }
        IdentityKind::Associative => {
            let (x, y, z) = (&elems[0], &elems[1], &elems[2]);
            Ok(x.mul(y)?.mul(z)? == x.mul(&y.mul(z)?)?)
        }
    }
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let numer = rng.gen_range(-9i64..=9);
            let denom = rng.gen_range(1i64..=3);
            Scalar::rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
        }
        FieldSpec::PrimeField { q } => {
            Scalar::from_i64(field, rng.gen_range(0..q) as i64)
        }
    }
}

/// A pseudo-random element with small exact coefficients.
pub(crate) fn random_element(spec: &Arc<AlgebraSpec>, rng: &mut ChaCha8Rng) -> CDElement {
    let coeffs = (0..spec.dim())
        .map(|_| random_scalar(spec.field(), rng))
        .collect();
    CDElement::new(spec, coeffs).expect("generated coefficients are valid")
}

/// Probes `kind` on `spec`: every basis tuple when dim <= 16, then
/// `samples` seeded random tuples. Stops at the first counterexample.
pub fn check_identity(
    spec: &Arc<AlgebraSpec>,
    kind: IdentityKind,
    samples: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if samples < 1 {
        return Err(Error::invalid("identity checks need samples >= 1"));
    }
    let arity = kind.arity();
    let dim = spec.dim();

    let mut basis_tuples = 0usize;
    if dim <= 16 {
        let mut indices = vec![0usize; arity];
        loop {
            let elems: Vec<CDElement> = indices
                .iter()
                .map(|&i| CDElement::basis(spec, i))
                .collect::<Result<_>>()?;
            basis_tuples += 1;
            if !holds(kind, &elems)? {
                return Ok(IdentityReport {
                    kind,
                    seed,
                    random_samples: 0,
                    basis_tuples,
                    passed: false,
                    counterexample: Some(elems),
                });
            }
            // odometer over `arity` digits in base `dim`
            let mut pos = 0;
            loop {
                if pos == arity {
                    break;
                }
                indices[pos] += 1;
                if indices[pos] < dim {
                    break;
                }
                indices[pos] = 0;
                pos += 1;
            }
            if pos == arity {
                break;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 0..samples {
        let elems: Vec<CDElement> = (0..arity).map(|_| random_element(spec, &mut rng)).collect();
        if !holds(kind, &elems)? {
            return Ok(IdentityReport {
                kind,
                seed,
                random_samples: sample + 1,
                basis_tuples,
                passed: false,
                counterexample: Some(elems),
            });
        }
    }
    Ok(IdentityReport {
        kind,
        seed,
        random_samples: samples,
        basis_tuples,
        passed: true,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(t: u32) -> Arc<AlgebraSpec> {
        Arc::new(AlgebraSpec::all_minus_one(FieldSpec::rationals(), t).unwrap())
    }

    #[test]
    fn quadratic_holds_everywhere() {
        for t in 1..=4 {
            let report = check_identity(&algebra(t), IdentityKind::Quadratic, 50, 7).unwrap();
            assert!(report.passed, "t = {t}");
        }
    }

    #[test]
    fn flexible_holds_everywhere() {
        for t in 1..=4 {
            let report = check_identity(&algebra(t), IdentityKind::Flexible, 30, 7).unwrap();
            assert!(report.passed, "t = {t}");
        }
    }

    #[test]
    fn commutativity_breaks_at_two() {
        assert!(check_identity(&algebra(1), IdentityKind::Commutative, 30, 7)
            .unwrap()
            .passed);
        let report = check_identity(&algebra(2), IdentityKind::Commutative, 30, 7).unwrap();
        assert!(!report.passed);
        let cex = report.counterexample.unwrap();
        assert_ne!(cex[0].mul(&cex[1]).unwrap(), cex[1].mul(&cex[0]).unwrap());
    }

    #[test]
    fn associativity_breaks_at_three() {
        assert!(check_identity(&algebra(2), IdentityKind::Associative, 20, 7)
            .unwrap()
            .passed);
        let report = check_identity(&algebra(3), IdentityKind::Associative, 20, 7).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn composition_breaks_at_four() {
        for t in 1..=3 {
            assert!(check_identity(&algebra(t), IdentityKind::Composition, 30, 7)
                .unwrap()
                .passed);
        }
        let report = check_identity(&algebra(4), IdentityKind::Composition, 200, 7).unwrap();
        assert!(!report.passed);
        let cex = report.counterexample.unwrap();
        let (x, y) = (&cex[0], &cex[1]);
        assert_ne!(x.mul(y).unwrap().norm(), x.norm().mul(&y.norm()).unwrap());
    }

    #[test]
    fn alternativity_breaks_at_four() {
        for t in 1..=3 {
            assert!(check_identity(&algebra(t), IdentityKind::Alternative, 30, 7)
                .unwrap()
                .passed);
        }
        let report = check_identity(&algebra(4), IdentityKind::Alternative, 200, 7).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn deterministic_given_seed() {
        let a = check_identity(&algebra(4), IdentityKind::Composition, 100, 99).unwrap();
        let b = check_identity(&algebra(4), IdentityKind::Composition, 100, 99).unwrap();
        assert_eq!(a.counterexample.is_some(), b.counterexample.is_some());
        assert_eq!(a.counterexample.unwrap(), b.counterexample.unwrap());
        assert_eq!(a.random_samples, b.random_samples);
    }

    #[test]
    fn identity_kind_round_trips_names() {
        for kind in IdentityKind::ALL {
            assert_eq!(kind.name().parse::<IdentityKind>().unwrap(), kind);
        }
        assert!("frobnicating".parse::<IdentityKind>().is_err());
    }
}
