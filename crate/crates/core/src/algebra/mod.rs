//! Algebras obtained by the Cayley-Dickson doubling process.
//!
//! `A_t = (gamma_1, ..., gamma_t / K)` has dimension 2^t over K with basis
//! 1 = e_0, e_1, ..., e_{2^t - 1}. Products follow the doubling rule
//!
//! ```text
//! (a_1, a_2)(b_1, b_2) = (a_1 b_1 + gamma conj(b_2) a_2,  a_2 conj(b_1) + b_2 a_1)
//! ```
//!
//! applied with gamma = gamma_t at the outermost level, so the two halves
//! of a coefficient vector are the (a_1, a_2) pair. Operand order matters:
//! these algebras are noncommutative from t = 2 and nonassociative from
//! t = 3, and every sign in the structure constants below is an output of
//! exactly this rule.

mod identity;
mod matrix;
mod table;

pub use identity::{check_identity, IdentityKind, IdentityReport};
pub use matrix::Matrix;
pub use table::StructureTable;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// The defining data of A_t: the base field and the doubling parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    field: FieldSpec,
    gammas: Vec<Scalar>,
}

impl AlgebraSpec {
    /// Every gamma must be a nonzero element of `field`, and t >= 1.
    pub fn new(field: FieldSpec, gammas: Vec<Scalar>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::invalid("the doubling process needs t >= 1"));
        }
        for g in &gammas {
            if g.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: g.field(),
                });
            }
            if g.is_zero() {
                return Err(Error::invalid("gamma parameters must be nonzero"));
            }
        }
        Ok(AlgebraSpec { field, gammas })
    }

    pub fn from_i64_gammas(field: FieldSpec, gammas: &[i64]) -> Result<Self> {
        Self::new(
            field,
            gammas.iter().map(|&g| Scalar::from_i64(field, g)).collect(),
        )
    }

    /// A_t(-1, ..., -1 / K), the default algebra of the norm formulas.
    pub fn all_minus_one(field: FieldSpec, t: u32) -> Result<Self> {
        Self::new(field, vec![Scalar::from_i64(field, -1); t as usize])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gammas(&self) -> &[Scalar] {
        &self.gammas
    }

    pub fn t(&self) -> u32 {
        self.gammas.len() as u32
    }

    pub fn dim(&self) -> usize {
        1 << self.gammas.len()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gammas.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, " / {})", self.field)
    }
}

/// An element of A_t as a coefficient vector over the basis
/// 1, e_1, ..., e_{2^t - 1}; index i is the coefficient of e_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CDElement {
    spec: Arc<AlgebraSpec>,
    coeffs: Vec<Scalar>,
}

// Slice-level kernels. Coefficients sharing the algebra's field is a
// construction invariant, so scalar ops cannot fail here.

fn conj_slice(x: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = conj_slice(&x[..h]);
    out.extend(x[h..].iter().map(Scalar::neg));
    out
}

fn add_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.add(b).expect("coefficients share the field"))
        .collect()
}

fn mul_slices(gammas: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![x[0].mul(&y[0]).expect("coefficients share the field")];
    }
    let h = x.len() / 2;
    let gamma = &gammas[gammas.len() - 1];
    let sub = &gammas[..gammas.len() - 1];
    let (a1, a2) = (&x[..h], &x[h..]);
    let (b1, b2) = (&y[..h], &y[h..]);

    // first half: a1 b1 + gamma (conj(b2) a2)
    let mut first = mul_slices(sub, a1, b1);
    let cross = mul_slices(sub, &conj_slice(b2), a2);
    let scaled: Vec<Scalar> = cross
        .iter()
        .map(|c| gamma.mul(c).expect("coefficients share the field"))
        .collect();
    first = add_slices(&first, &scaled);

    // second half: a2 conj(b1) + b2 a1
    let second = add_slices(
        &mul_slices(sub, a2, &conj_slice(b1)),
        &mul_slices(sub, b2, a1),
    );

    let mut out = first;
    out.extend(second);
    out
}

fn norm_slice(gammas: &[Scalar], x: &[Scalar]) -> Scalar {
    if x.len() == 1 {
        return x[0].square();
    }
    let h = x.len() / 2;
    let gamma = &gammas[gammas.len() - 1];
    let sub = &gammas[..gammas.len() - 1];
    let n1 = norm_slice(sub, &x[..h]);
    let n2 = norm_slice(sub, &x[h..]);
    n1.sub(&gamma.mul(&n2).expect("coefficients share the field"))
        .expect("coefficients share the field")
}

impl CDElement {
    pub fn new(spec: &Arc<AlgebraSpec>, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != spec.dim() {
            return Err(Error::invalid(format!(
                "expected {} coefficients, got {}",
                spec.dim(),
                coeffs.len()
            )));
        }
        for c in &coeffs {
            if c.field() != spec.field() {
                return Err(Error::FieldMismatch {
                    left: spec.field(),
                    right: c.field(),
                });
            }
        }
        Ok(CDElement {
            spec: Arc::clone(spec),
            coeffs,
        })
    }

    pub fn from_i64s(spec: &Arc<AlgebraSpec>, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            spec,
            coeffs
                .iter()
                .map(|&c| Scalar::from_i64(spec.field(), c))
                .collect(),
        )
    }

    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        CDElement {
            spec: Arc::clone(spec),
            coeffs: vec![Scalar::zero(spec.field()); spec.dim()],
        }
    }

    pub fn one(spec: &Arc<AlgebraSpec>) -> Self {
        Self::basis(spec, 0).expect("index 0 is always in range")
    }

    /// The basis element e_i (e_0 = 1).
    pub fn basis(spec: &Arc<AlgebraSpec>, i: usize) -> Result<Self> {
        if i >= spec.dim() {
            return Err(Error::invalid(format!(
                "basis index {i} out of range for dimension {}",
                spec.dim()
            )));
        }
        let mut e = Self::zero(spec);
        e.coeffs[i] = Scalar::one(spec.field());
        Ok(e)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn check_same_algebra(&self, rhs: &Self) -> Result<()> {
        if self.spec == rhs.spec {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_algebra(rhs)?;
        Ok(CDElement {
            spec: Arc::clone(&self.spec),
            coeffs: add_slices(&self.coeffs, &rhs.coeffs),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        CDElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        if s.field() != self.spec.field() {
            return Err(Error::FieldMismatch {
                left: self.spec.field(),
                right: s.field(),
            });
        }
        Ok(CDElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(|c| c.mul(s).expect("same field")).collect(),
        })
    }

    /// The doubling product. Operand order follows the defining rule
    /// exactly; see the module docs.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_algebra(rhs)?;
        Ok(CDElement {
            spec: Arc::clone(&self.spec),
            coeffs: mul_slices(self.spec.gammas(), &self.coeffs, &rhs.coeffs),
        })
    }

    /// Conjugation (a_1, a_2) -> (conj(a_1), -a_2); an involution that
    /// fixes the scalar part and negates every e_i, i >= 1.
    pub fn conj(&self) -> Self {
        CDElement {
            spec: Arc::clone(&self.spec),
            coeffs: conj_slice(&self.coeffs),
        }
    }

    /// t(x) = x + conj(x), reported as the scalar 2 x_0.
    pub fn trace(&self) -> Scalar {
        self.coeffs[0].double()
    }

    /// n(x) by the recursion n(a_1, a_2) = n(a_1) - gamma n(a_2); equals
    /// the scalar part of x conj(x).
    pub fn norm(&self) -> Scalar {
        norm_slice(self.spec.gammas(), &self.coeffs)
    }

    /// x^{-1} = conj(x) / n(x); fails when the norm vanishes.
    pub fn inverse(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::NotInvertible { norm });
        }
        self.conj().scale(&norm.inv()?)
    }

    /// The matrix of y -> x*y in the basis; column j holds x * e_j.
    pub fn left_mul_matrix(&self) -> Matrix {
        let columns: Vec<Vec<Scalar>> = (0..self.spec.dim())
            .map(|j| {
                let e = Self::basis(&self.spec, j).expect("index in range");
                self.mul(&e).expect("same algebra").coeffs
            })
            .collect();
        Matrix::from_columns(self.spec.field(), &columns).expect("columns are well formed")
    }

    /// The matrix of y -> y*x in the basis; column j holds e_j * x.
    pub fn right_mul_matrix(&self) -> Matrix {
        let columns: Vec<Vec<Scalar>> = (0..self.spec.dim())
            .map(|j| {
                let e = Self::basis(&self.spec, j).expect("index in range");
                e.mul(self).expect("same algebra").coeffs
            })
            .collect();
        Matrix::from_columns(self.spec.field(), &columns).expect("columns are well formed")
    }

    /// A nonzero partner annihilated by this element, if one exists.
    ///
    /// Exact elimination on the left and right multiplication operators;
    /// a kernel vector of either is returned as a verified witness. The
    /// zero element is excluded by definition.
    pub fn annihilator(&self) -> Result<Option<Annihilator>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if let Some(v) = self.left_mul_matrix().kernel_vector()? {
            let partner = CDElement::new(&self.spec, v)?;
            if !self.mul(&partner)?.is_zero() {
                return Err(Error::internal("left kernel vector fails to annihilate"));
            }
            return Ok(Some(Annihilator {
                partner,
                side: AnnihilatorSide::Right,
            }));
        }
        if let Some(v) = self.right_mul_matrix().kernel_vector()? {
            let partner = CDElement::new(&self.spec, v)?;
            if !partner.mul(self)?.is_zero() {
                return Err(Error::internal("right kernel vector fails to annihilate"));
            }
            return Ok(Some(Annihilator {
                partner,
                side: AnnihilatorSide::Left,
            }));
        }
        Ok(None)
    }

    /// Whether the element is a (left or right) zero divisor.
    pub fn is_zero_divisor(&self) -> Result<bool> {
        Ok(self.annihilator()?.is_some())
    }
}

/// Where the annihilating partner sits relative to the tested element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilatorSide {
    /// x * partner = 0
    Right,
    /// partner * x = 0
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub partner: CDElement,
    pub side: AnnihilatorSide,
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}
