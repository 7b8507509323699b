//! Structure constants of the basis: e_i e_j = beta_ij e_k with k and
//! beta_ij uniquely determined, and e_i^2 scalar.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{AlgebraSpec, CDElement};

/// The full basis multiplication table of an algebra, validated to have
/// the single-monomial shape and anticommuting imaginary units.
#[derive(Debug, Clone)]
pub struct StructureTable {
    spec: Arc<AlgebraSpec>,
    // (k, c) at row i, col j means e_i e_j = c e_k
    entries: Vec<(usize, Scalar)>,
}

impl StructureTable {
    pub fn build(spec: &Arc<AlgebraSpec>) -> Result<Self> {
        let dim = spec.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            let ei = CDElement::basis(spec, i)?;
            for j in 0..dim {
                let ej = CDElement::basis(spec, j)?;
                let prod = ei.mul(&ej)?;
                let nonzero: Vec<usize> = (0..dim).filter(|&k| !prod.coeff(k).is_zero()).collect();
                let [k] = nonzero[..] else {
                    return Err(Error::internal(format!(
                        "basis product e_{i} e_{j} is not a monomial"
                    )));
                };
                if i == j && i >= 1 && k != 0 {
                    return Err(Error::internal(format!("e_{i}^2 is not scalar")));
                }
                entries.push((k, prod.coeff(k).clone()));
            }
        }
        let table = StructureTable {
            spec: Arc::clone(spec),
            entries,
        };
        // anticommutation e_i e_j = -e_j e_i for distinct imaginary units
        for i in 1..dim {
            for j in 1..dim {
                if i == j {
                    continue;
                }
                let (k, c) = table.entry(i, j);
                let (k2, c2) = table.entry(j, i);
                if k != k2 || *c != c2.neg() || c.is_zero() {
                    return Err(Error::internal(format!(
                        "anticommutation fails at e_{i}, e_{j}"
                    )));
                }
            }
        }
        Ok(table)
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    /// The (k, beta) with e_i e_j = beta e_k.
    pub fn entry(&self, i: usize, j: usize) -> &(usize, Scalar) {
        &self.entries[i * self.spec.dim() + j]
    }

    /// e_i^2 as a scalar; `build` already validated the shape.
    pub fn square(&self, i: usize) -> &Scalar {
        &self.entry(i, i).1
    }

    fn monomial(&self, k: usize, c: &Scalar) -> String {
        if k == 0 {
            return c.to_string();
        }
        if c.is_one() {
            format!("e{k}")
        } else if c.neg().is_one() {
            format!("-e{k}")
        } else {
            format!("{c}*e{k}")
        }
    }

    /// CSV rows `i,j,k,beta` for the distinct imaginary pairs i != j.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,k,beta\n");
        for i in 1..self.spec.dim() {
            for j in 1..self.spec.dim() {
                if i == j {
                    continue;
                }
                let (k, c) = self.entry(i, j);
                writeln!(out, "{i},{j},{k},{c}").expect("writing to a String");
            }
        }
        out
    }

    /// Human-readable multiplication table over the whole basis.
    pub fn render_text(&self) -> String {
        let dim = self.spec.dim();
        let mut cells = vec![vec![String::new(); dim + 1]; dim + 1];
        cells[0][0] = "*".to_string();
        for i in 0..dim {
            let name = if i == 0 { "1".to_string() } else { format!("e{i}") };
            cells[0][i + 1] = name.clone();
            cells[i + 1][0] = name;
        }
        for i in 0..dim {
            for j in 0..dim {
                let (k, c) = self.entry(i, j);
                cells[i + 1][j + 1] = self.monomial(*k, c);
            }
        }
        let widths: Vec<usize> = (0..=dim)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                write!(out, "{:>width$}", cell, width = widths[j]).expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }
}
