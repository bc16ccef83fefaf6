//! The projective line P¹(Z/N) and the row map SL₂(Z) → P¹(Z/N).
//!
//! Points are stored in a canonical form: the lexicographically least pair
//! (a, b) ∈ [0, N)² among all unit multiples u·(a, b). That makes points
//! hashable and ordered; equality tests in hot loops use cross-multiplication.

use std::fmt;

use crate::arith::{divisors, gcd, inv_mod, Modulus};
use crate::parallel;
use crate::words::Mat2;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    a: i64,
    b: i64,
    modulus: Modulus,
}

impl ProjPoint {
    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// True on the affine part {(1 : b)}, i.e. when a is a unit.
    pub fn is_affine(&self) -> bool {
        self.a == 1
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.a, self.b)
    }
}

/// Canonical representative of (a : b).
///
/// The least first coordinate over unit multiples is g = gcd(a, N). The units
/// u with u·a ≡ g form one coset u₀·K of K = ker((Z/N)* → (Z/(N/g))*), so the
/// second coordinate is minimized over that coset only, O(g) work per point.
pub fn canonicalize(a: i64, b: i64, n: Modulus) -> Result<ProjPoint> {
    let nn = n.get();
    let (a0, b0) = (n.reduce(a), n.reduce(b));
    let g = gcd(a0, nn);
    if gcd(g, b0) != 1 {
        return Err(Error::NotProjective { a, b, n: nn });
    }
    let cofactor = nn / g;
    let x = inv_mod(a0 / g, cofactor).expect("a/g is a unit mod N/g");
    let u0 = (0..g)
        .map(|k| x + k * cofactor)
        .find(|&t| gcd(t, nn) == 1)
        .expect("units lift along Z/N → Z/(N/g)");
    let base = b0 * u0 % nn;
    let best_b = (0..g)
        .map(|k| 1 + k * cofactor)
        .filter(|&v| gcd(v, nn) == 1)
        .map(|v| base * v % nn)
        .min()
        .expect("1 lies in the kernel");
    Ok(ProjPoint { a: g % nn, b: best_b, modulus: n })
}

/// (a : b) = (c : d) iff ad ≡ bc (mod N).
pub fn proj_eq(p: &ProjPoint, q: &ProjPoint) -> Result<bool> {
    if p.modulus != q.modulus {
        return Err(Error::ModulusMismatch(p.modulus.get(), q.modulus.get()));
    }
    let n = p.modulus.get();
    Ok((p.a * q.b - p.b * q.a).rem_euclid(n) == 0)
}

/// R([[a, b], [c, d]]) = (c : d).
pub fn row_map(g: &Mat2, n: Modulus) -> ProjPoint {
    canonicalize(g.c, g.d, n).expect("the bottom row of a determinant-1 matrix is primitive")
}

/// All of P¹(Z/N), sorted.
///
/// Canonical first coordinates are the divisors g of N (g = N standing for 0).
/// For fixed g the points are the orbits of b under K_g = {v ≡ 1 mod N/g}, and
/// scanning b upward meets each orbit first at its minimum.
pub fn enumerate_p1(n: Modulus) -> Vec<ProjPoint> {
    let nn = n.get();
    let rows = divisors(nn);
    let chunks = parallel::map_slice(&rows, |&g| {
        let cofactor = nn / g;
        let kernel: Vec<i64> = (0..g)
            .map(|k| 1 + k * cofactor)
            .filter(|&v| gcd(v, nn) == 1)
            .collect();
        let mut seen = vec![false; nn as usize];
        let mut out = Vec::new();
        for b in (0..nn).filter(|&b| gcd(g, b) == 1) {
            if seen[b as usize] {
                continue;
            }
            for &v in &kernel {
                seen[(b * v % nn) as usize] = true;
            }
            out.push(ProjPoint { a: g % nn, b, modulus: n });
        }
        out
    });
    let mut all: Vec<ProjPoint> = chunks.into_iter().flatten().collect();
    all.sort();
    all
}
