//! Cusp classes of Γ₀(N) and the widths contributed by the domain.
//!
//! A reduced cusp a/c is classified by χ(a/c) = (d; a·(c/d) mod d″) with
//! d = gcd(c, N); the class has width d̃ = d′/d″. The ST^jST^m triangles of
//! the domain hang at the cusps −1/j with width W_j, and the fibers K_b
//! collect the j = dk landing in one class.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{divisor_profile, divisors, euler_phi, gcd, inv_mod, DivisorProfile, Modulus};
use crate::cosets::{CosetRep, CosetTable};
use crate::wfunc::{cyclic_gaps, w_scan};
use crate::words::Cusp;
use crate::{Error, Result};

/// A point (d; b) of S₀(N) = ⋃_{d|N} (Z/d″)*, with its width d̃.
///
/// When d″ = 1 the unit group is trivial and b is stored as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CuspClass {
    pub d: i64,
    pub b: i64,
    pub width: i64,
}

impl CuspClass {
    fn from_profile(p: &DivisorProfile, b: i64) -> Self {
        CuspClass { d: p.d, b: b.rem_euclid(p.d_double), width: p.d_tilde }
    }
}

/// χ(a/c) = (gcd(c, N); a·c/d mod d″). ∞ = 1/0 falls in the d = N class.
pub fn chi(s: Cusp, n: Modulus) -> CuspClass {
    let d = gcd(s.den(), n.get());
    let p = divisor_profile(d, n).expect("gcd(c, N) divides N");
    CuspClass::from_profile(&p, s.num() * (s.den() / d))
}

/// Σ_{d|N} φ(gcd(d, N/d)).
pub fn cusp_class_count(n: Modulus) -> i64 {
    divisors(n.get())
        .into_iter()
        .map(|d| euler_phi(gcd(d, n.get() / d)))
        .sum()
}

/// Every point of S₀(N), ordered by (d, b).
pub fn all_classes(n: Modulus) -> Vec<CuspClass> {
    divisors(n.get())
        .into_iter()
        .flat_map(|d| {
            let p = divisor_profile(d, n).expect("listed divisor");
            (0..p.d_double)
                .filter(move |&b| gcd(b, p.d_double) == 1)
                .map(move |b| CuspClass::from_profile(&p, b))
        })
        .collect()
}

/// K_b = {k ∈ [1, d′] : gcd(k, d′) = 1, k ≡ b (mod d″)}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFiber {
    pub d: i64,
    pub b: i64,
    pub elements: Vec<i64>,
}

fn checked_profile(d: i64, b: i64, n: Modulus) -> Result<(DivisorProfile, i64)> {
    let bad = Error::BadFiber { d, b, n: n.get() };
    let p = divisor_profile(d, n).map_err(|_| bad.clone())?;
    let b = b.rem_euclid(p.d_double);
    if gcd(b, p.d_double) != 1 {
        return Err(bad);
    }
    Ok((p, b))
}

/// The fiber over (d; b). Any divisor d ≥ 1 is accepted; for d = 1 the fiber
/// is all of (Z/N)*.
pub fn k_fiber(d: i64, b: i64, n: Modulus) -> Result<KFiber> {
    let (p, b) = checked_profile(d, b, n)?;
    let elements = (1..=p.d_prime)
        .filter(|&k| gcd(k, p.d_prime) == 1 && (k - b).rem_euclid(p.d_double) == 0)
        .collect();
    Ok(KFiber { d, b, elements })
}

/// Both sides of d̃ = Σ_{k ∈ K_b} W_{dk}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthSum {
    pub lhs: i64,
    pub rhs: i64,
}

impl WidthSum {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn width_sum_check(d: i64, b: i64, n: Modulus) -> Result<WidthSum> {
    let fiber = k_fiber(d, b, n)?;
    let p = divisor_profile(d, n)?;
    let rhs = fiber.elements.iter().map(|&k| w_scan(d * k, n.get())).sum();
    Ok(WidthSum { lhs: p.d_tilde, rhs })
}

/// One column of the gap table for a fiber: k = b + a·d mod d′, its inverse
/// mod d′, the argument k⁻¹·d, and W there for the moduli d′ and N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AGap {
    pub a: i64,
    pub gap: i64,
    pub k: i64,
    pub k_inv: i64,
    /// k⁻¹·d reduced mod d′.
    pub arg: i64,
    /// W for modulus d′ at k⁻¹·d.
    pub w_reduced: i64,
    /// W for modulus N at k⁻¹·d.
    pub w_full: i64,
}

/// The a with b + a·d a unit mod d′, 0 ≤ a < d̃, in increasing order, and
/// their cyclic gaps Δa (the first wrapping as d̃ + a₁ − a_n).
pub fn delta_a_gaps(d: i64, b: i64, n: Modulus) -> Result<Vec<AGap>> {
    let (p, b) = checked_profile(d, b, n)?;
    let dp = p.d_prime;
    let a_values: Vec<i64> = (0..p.d_tilde).filter(|&a| gcd(b + a * d, dp) == 1).collect();
    let gaps = cyclic_gaps(&a_values, p.d_tilde);
    Ok(a_values
        .iter()
        .zip(gaps)
        .map(|(&a, gap)| {
            let k = (b + a * d).rem_euclid(dp);
            let k_inv = inv_mod(k, dp).expect("k is a unit mod d'");
            AGap {
                a,
                gap,
                k,
                k_inv,
                arg: (k_inv * d).rem_euclid(dp),
                w_reduced: w_scan(k_inv * d, dp),
                w_full: w_scan(k_inv * d, n.get()),
            }
        })
        .collect())
}

/// Cusps produced by one block of the domain: the ST^i block (`j = None`)
/// hanging at 0 with width N, or the ST^jST^m column hanging at −1/j with
/// width W_j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspMember {
    pub j: Option<i64>,
    pub reps: Vec<CosetRep>,
    pub cusp: Cusp,
    pub width: i64,
}

/// Groups the domain's cusps by χ of the actual cusp γ·∞ of each block.
pub fn classify_domain_cusps(n: Modulus, t: &CosetTable) -> BTreeMap<CuspClass, Vec<CuspMember>> {
    classify_with(n, t, |m| m.cusp)
}

/// Same grouping keyed by χ(1/j) instead of χ(−1/j). The two keys differ
/// whenever d″ > 2 (for N = 9, 1/3 and −1/3 are inequivalent), but each
/// grouping is a bijection of column sets onto S₀(N) with matching widths.
pub fn classify_by_reciprocal(n: Modulus, t: &CosetTable) -> BTreeMap<CuspClass, Vec<CuspMember>> {
    classify_with(n, t, |m| match m.j {
        Some(j) => Cusp::new(1, j).expect("1/j is never 0/0"),
        None => m.cusp,
    })
}

fn classify_with(
    n: Modulus,
    t: &CosetTable,
    key: impl Fn(&CuspMember) -> Cusp,
) -> BTreeMap<CuspClass, Vec<CuspMember>> {
    let mut out: BTreeMap<CuspClass, Vec<CuspMember>> = BTreeMap::new();
    for member in domain_members(n, t) {
        out.entry(chi(key(&member), n)).or_default().push(member);
    }
    out
}

fn domain_members(n: Modulus, t: &CosetTable) -> Vec<CuspMember> {
    let mut i_block = Vec::new();
    let mut columns: BTreeMap<i64, Vec<CosetRep>> = BTreeMap::new();
    for rep in t.reps() {
        match *rep {
            CosetRep::I { .. } => i_block.push(*rep),
            CosetRep::J { j, .. } => columns.entry(j).or_default().push(*rep),
        }
    }
    let mut members = vec![CuspMember { j: None, reps: i_block, cusp: Cusp::ZERO, width: n.get() }];
    members.extend(columns.into_iter().map(|(j, reps)| CuspMember {
        j: Some(j),
        cusp: reps[0].cusp(),
        width: t.w_table().w(j),
        reps,
    }));
    members
}
