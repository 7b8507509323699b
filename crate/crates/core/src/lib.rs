//! Exact arithmetic for algebras obtained by the Cayley-Dickson process
//! over Q and prime fields Z_q, the l-number sequences p_n = l p_{n-1} +
//! p_{n-2}, and the l-elements built from them, together with the norm
//! closed forms and invertibility / zero-divisor / idempotent criteria.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision
//! rationals and integers over Q, canonical residues over Z_q. There are
//! no floating-point code paths.

pub mod algebra;
pub mod error;
pub mod lelement;
pub mod quad;
pub mod scalar;
pub mod seq;

pub use algebra::{
    check_identity, AlgebraSpec, Annihilator, AnnihilatorSide, CDElement, IdentityKind,
    IdentityReport, Matrix, StructureTable,
};
pub use error::{Error, Result};
pub use quad::QuadInt;
pub use scalar::{FieldSpec, Scalar};
pub use seq::{m_const, s_const, LSequence};
