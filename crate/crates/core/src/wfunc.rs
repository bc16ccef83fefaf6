//! The width function W_j = min{m ≥ 1 : mj − 1 ∈ (Z/N)*} and M_j = W_j − 1.
//!
//! W is computed along two independent routes that are kept side by side:
//! [`w_of`] scans m = 1, 2, … with a gcd test, and [`w_of_crt`] sieves out,
//! for every prime p | N not dividing j, the progression ℓ + pZ≥0 with
//! ℓ ≡ j⁻¹ (mod p). [`w_table`] builds with both and insists they agree.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, inv_mod, prime_divisors, Modulus, ResidueInt};
use crate::parallel;

pub fn w_of(j: ResidueInt) -> i64 {
    w_scan(j.value(), j.modulus().get())
}

/// W for an arbitrary modulus n ≥ 1 (modulo 1 every residue is a unit, so
/// W = 1). Used directly for the reduced moduli d′ = N/d.
pub fn w_scan(j: i64, n: i64) -> i64 {
    debug_assert!(n >= 1);
    let j = j.rem_euclid(n);
    (1..=n)
        .find(|&m| gcd(m * j - 1, n) == 1)
        .expect("m = n always gives a unit")
}

pub fn w_of_crt(j: ResidueInt) -> i64 {
    let n = j.modulus().get();
    w_sieve(j.value(), n, &prime_divisors(n))
}

/// Least positive integer outside every excluded progression ℓ_p + pZ≥0.
///
/// The survivors are the m with gcd(m − x, P) = 1 for a CRT solution x and P
/// the product of the participating primes, so the first one lies within the
/// Jacobsthal bound 2^t (t = number of participating primes). The sieve is
/// sized min(n, 2^t) + 1 accordingly.
fn w_sieve(j: i64, n: i64, primes: &[i64]) -> i64 {
    let excluded: Vec<(i64, i64)> = primes
        .iter()
        .filter(|&&p| j.rem_euclid(p) != 0)
        .map(|&p| (p, inv_mod(j, p).expect("p does not divide j")))
        .collect();
    let bound = if excluded.len() >= 62 { n } else { n.min(1i64 << excluded.len()) };
    let mut struck = vec![false; bound as usize + 1];
    for &(p, l) in &excluded {
        let mut m = l;
        while m <= bound {
            struck[m as usize] = true;
            m += p;
        }
    }
    (1..=bound)
        .find(|&m| !struck[m as usize])
        .expect("Jacobsthal bound guarantees a survivor")
}

/// W_j for every j ∈ {0, …, N−1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTable {
    modulus: Modulus,
    w: Vec<i64>,
}

impl WTable {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// W at any integer, reduced mod N.
    pub fn w(&self, j: i64) -> i64 {
        self.w[self.modulus.reduce(j) as usize]
    }

    pub fn m(&self, j: i64) -> i64 {
        self.w(j) - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.w
    }

    pub fn sum_total(&self) -> i64 {
        self.w.iter().sum()
    }

    pub fn sum_units(&self) -> i64 {
        self.sum_where(|j| self.modulus.is_unit(j))
    }

    pub fn sum_nonunits(&self) -> i64 {
        self.sum_where(|j| !self.modulus.is_unit(j))
    }

    fn sum_where(&self, keep: impl Fn(i64) -> bool) -> i64 {
        self.w
            .iter()
            .enumerate()
            .filter(|&(j, _)| keep(j as i64))
            .map(|(_, &w)| w)
            .sum()
    }
}

/// Builds the table; every entry is computed by both routes.
///
/// # Panics
/// If the scan and the sieve ever disagree.
pub fn w_table(n: Modulus) -> WTable {
    let nn = n.get();
    let primes = prime_divisors(nn);
    let w = parallel::map_range(0, nn - 1, |j| {
        let scanned = w_scan(j, nn);
        let sieved = w_sieve(j, nn, &primes);
        assert_eq!(scanned, sieved, "W_{j} mod {nn}: scan and sieve disagree");
        scanned
    });
    WTable { modulus: n, w }
}

/// A unit u of Z/N, the cyclic gap Δu to the previous unit, and u⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGap {
    pub unit: i64,
    pub gap: i64,
    pub inverse: i64,
}

/// Cyclic gaps of a strictly increasing list inside [0, period): the first
/// gap wraps around as period + first − last.
pub fn cyclic_gaps(sorted: &[i64], period: i64) -> Vec<i64> {
    let Some((&first, &last)) = sorted.first().zip(sorted.last()) else {
        return Vec::new();
    };
    std::iter::once(period + first - last)
        .chain(sorted.windows(2).map(|w| w[1] - w[0]))
        .collect()
}

/// Units u₁ < … < u_φ(N) of Z/N with their gaps; W at u_i⁻¹ equals Δu_i.
pub fn unit_gaps(n: Modulus) -> Vec<UnitGap> {
    let units = n.units();
    let gaps = cyclic_gaps(&units, n.get());
    units
        .iter()
        .zip(gaps)
        .map(|(&u, gap)| UnitGap {
            unit: u,
            gap,
            inverse: inv_mod(u, n.get()).expect("listed units are units"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::psi_index;

    fn m(n: i64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    /// Straight from the definition, with no shared helper code.
    fn w_definition(j: i64, n: i64) -> i64 {
        let mut k = 1;
        loop {
            let x = (k * j - 1).rem_euclid(n);
            if (2..=n).all(|p| !(n % p == 0 && x % p == 0)) {
                return k;
            }
            k += 1;
        }
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_of(m(6).residue(5)), 4);
        assert_eq!(w_of(m(30).residue(13)), 6);
        for n in 2..40 {
            assert_eq!(w_of(m(n).residue(0)), 1);
            assert_eq!(w_of_crt(m(n).residue(0)), 1);
        }
        assert_eq!(w_of_crt(m(6).residue(5)), 4);
        assert_eq!(w_of_crt(m(30).residue(11)), 4);
        assert_eq!(w_of(m(30).residue(-1)), 6);
    }

    #[test]
    fn table_for_12_matches_definition() {
        let t = w_table(m(12));
        for j in 0..12 {
            assert_eq!(t.w(j), w_definition(j, 12), "j = {j}");
        }
        let units: Vec<i64> = [1, 5, 7, 11].iter().map(|&j| t.w(j)).collect();
        assert_eq!(units, vec![2, 4, 2, 4]);
        let rest: Vec<i64> = [0, 2, 3, 4, 6, 8, 9, 10].iter().map(|&j| t.w(j)).collect();
        assert_eq!(rest, vec![1, 1, 2, 2, 1, 1, 2, 2]);
        assert_eq!(t.sum_units(), 12);
        assert_eq!(t.sum_nonunits(), psi_index(12) - 12);
    }

    #[test]
    fn table_for_30() {
        let t = w_table(m(30));
        assert_eq!(t.w(29), 6);
        assert_eq!(t.sum_total(), 72);
    }

    #[test]
    fn unit_gaps_for_30() {
        let g = unit_gaps(m(30));
        let units: Vec<_> = g.iter().map(|x| x.unit).collect();
        let gaps: Vec<_> = g.iter().map(|x| x.gap).collect();
        let invs: Vec<_> = g.iter().map(|x| x.inverse).collect();
        assert_eq!(units, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(gaps, vec![2, 6, 4, 2, 4, 2, 4, 6]);
        assert_eq!(invs, vec![1, 13, 11, 7, 23, 19, 17, 29]);
    }

    #[test]
    fn unit_gaps_for_prime_and_12() {
        let g = unit_gaps(m(13));
        assert_eq!(g[0].gap, 2);
        assert!(g[1..].iter().all(|x| x.gap == 1));
        let g = unit_gaps(m(12));
        assert_eq!(g.iter().map(|x| x.gap).collect::<Vec<_>>(), vec![2, 4, 2, 4]);
    }

    #[test]
    fn identities_small_sweep() {
        for n in 2..=300 {
            let md = m(n);
            let t = w_table(md);
            let psi = psi_index(n);
            assert_eq!(t.sum_total(), psi, "N = {n}");
            assert_eq!(t.sum_units(), n, "N = {n}");
            assert_eq!(t.sum_nonunits(), psi - n, "N = {n}");
            assert!(t.values().iter().all(|&w| 1 <= w && w <= n));
            for ug in unit_gaps(md) {
                assert_eq!(t.w(ug.inverse), ug.gap, "N = {n}, u = {}", ug.unit);
            }
            let gap_sum: i64 = unit_gaps(md).iter().map(|g| g.gap).sum();
            assert_eq!(gap_sum, n);
        }
    }

    #[test]
    fn scan_agrees_with_definition() {
        for n in 2..=60 {
            for j in 0..n {
                assert_eq!(w_scan(j, n), w_definition(j, n));
            }
        }
    }

    #[test]
    fn modulus_one_is_trivial() {
        assert_eq!(w_scan(0, 1), 1);
        assert_eq!(w_scan(5, 1), 1);
    }

    #[test]
    fn cyclic_gaps_edge_cases() {
        assert!(cyclic_gaps(&[], 7).is_empty());
        assert_eq!(cyclic_gaps(&[3], 7), vec![7]);
    }
}
