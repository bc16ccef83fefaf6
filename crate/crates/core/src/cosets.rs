//! The coset-representative set Θ for Γ₀(N)\SL₂(Z):
//!
//! Θ = {ST^i : i ∈ A} ∪ {ST^jST^m : j ∈ A, gcd(j, N) > 1, 0 ≤ m ≤ M_j},
//!
//! with A = {−N₁, …, N₂} the symmetric window. Translating the standard
//! triangle by the elements of Θ tiles a connected fundamental domain.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, psi_index, Modulus};
use crate::projline::{row_map, ProjPoint};
use crate::wfunc::{w_table, WTable};
use crate::words::{mobius_cusp, Cusp, GroupWord, Mat2};
use crate::{Error, Result};

/// An element of Θ. Indices are symmetric representatives.
///
/// The derived order (every `I` by increasing i, then every `J` by (j, m)) is
/// the canonical order of Θ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum CosetRep {
    /// ST^i
    I { i: i64 },
    /// ST^j S T^m
    J { j: i64, m: i64 },
}

impl CosetRep {
    pub fn word(&self) -> GroupWord {
        match *self {
            CosetRep::I { i } => GroupWord::new(vec![i]),
            CosetRep::J { j, m } => GroupWord::new(vec![j, m]),
        }
    }

    pub fn matrix(&self) -> Mat2 {
        match *self {
            CosetRep::I { i } => Mat2 { a: 0, b: -1, c: 1, d: i },
            CosetRep::J { j, m } => Mat2 { a: -1, b: -m, c: j, d: m * j - 1 },
        }
    }

    /// The cusp γ·∞ of the translated triangle: 0 for ST^i, −1/j for ST^jST^m.
    pub fn cusp(&self) -> Cusp {
        mobius_cusp(&self.matrix(), Cusp::INFINITY)
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word().fmt(f)
    }
}

/// Θ in canonical order together with its row images.
#[derive(Debug, Clone)]
pub struct CosetTable {
    modulus: Modulus,
    wtable: WTable,
    reps: Vec<CosetRep>,
    rows: Vec<ProjPoint>,
    by_row: HashMap<ProjPoint, usize>,
    by_rep: HashMap<CosetRep, usize>,
}

impl CosetTable {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn w_table(&self) -> &WTable {
        &self.wtable
    }

    pub fn reps(&self) -> &[CosetRep] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Row image R(γ) of the representative at `idx`.
    pub fn row(&self, idx: usize) -> ProjPoint {
        self.rows[idx]
    }

    pub fn index_of(&self, rep: &CosetRep) -> Option<usize> {
        self.by_rep.get(rep).copied()
    }

    pub fn contains(&self, rep: &CosetRep) -> bool {
        self.by_rep.contains_key(rep)
    }

    /// Index of the representative whose row image is `p`.
    pub fn index_of_row(&self, p: &ProjPoint) -> Result<usize> {
        if p.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(p.modulus().get(), self.modulus.get()));
        }
        Ok(self.by_row[p])
    }

    /// The representative of the right coset Γ₀(N)·g.
    pub fn coset_of(&self, g: &Mat2) -> CosetRep {
        self.reps[self.by_row[&row_map(g, self.modulus)]]
    }

    pub fn pr_lookup(&self, p: &ProjPoint) -> Result<CosetRep> {
        Ok(self.reps[self.index_of_row(p)?])
    }
}

/// The preferred representative of a point of P¹(Z/N), by exact lookup.
pub fn pr_lookup(p: &ProjPoint, t: &CosetTable) -> Result<CosetRep> {
    t.pr_lookup(p)
}

pub fn build_theta(n: Modulus) -> Result<CosetTable> {
    build_theta_with(w_table(n))
}

/// Builds Θ from an existing W table and checks bijectivity onto P¹(Z/N).
pub fn build_theta_with(wtable: WTable) -> Result<CosetTable> {
    let n = wtable.modulus();
    let nn = n.get();
    let mut reps: Vec<CosetRep> = n.symmetric_range().map(|i| CosetRep::I { i }).collect();
    for j in n.symmetric_range().filter(|&j| gcd(j, nn) > 1) {
        reps.extend((0..=wtable.m(j)).map(|m| CosetRep::J { j, m }));
    }

    let expected = psi_index(nn);
    if reps.len() as i64 != expected {
        return Err(Error::BijectionFailure {
            n: nn,
            reason: format!("|Θ| = {} but ψ(N) = {expected}", reps.len()),
        });
    }

    let rows: Vec<ProjPoint> = reps.iter().map(|r| row_map(&r.matrix(), n)).collect();
    let mut by_row = HashMap::with_capacity(rows.len());
    for (idx, p) in rows.iter().enumerate() {
        if let Some(prev) = by_row.insert(*p, idx) {
            return Err(Error::BijectionFailure {
                n: nn,
                reason: format!("{} and {} share the row image {p}", reps[prev], reps[idx]),
            });
        }
    }
    let by_rep = reps.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    Ok(CosetTable { modulus: n, wtable, reps, rows, by_row, by_rep })
}
