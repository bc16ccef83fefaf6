//! Integer and modular arithmetic shared by every other module.
//!
//! Everything is carried in `i64`. Moduli are capped at [`MAX_MODULUS`], which
//! keeps all intermediate products (at most quadratic in N) far from overflow.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_MODULUS: i64 = 1 << 20;

/// A level N with 2 ≤ N ≤ [`MAX_MODULUS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Modulus(i64);

impl Modulus {
    pub fn new(n: i64) -> Result<Self> {
        if (2..=MAX_MODULUS).contains(&n) {
            Ok(Modulus(n))
        } else {
            Err(Error::InvalidModulus(n))
        }
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// N₁ = ⌊(N−1)/2⌋, the depth of the symmetric window below zero.
    #[inline]
    pub fn n1(self) -> i64 {
        (self.0 - 1) / 2
    }

    /// N₂ = ⌊N/2⌋, the top of the symmetric window.
    #[inline]
    pub fn n2(self) -> i64 {
        self.0 / 2
    }

    /// The symmetric residue window −N₁..=N₂.
    pub fn symmetric_range(self) -> RangeInclusive<i64> {
        -self.n1()..=self.n2()
    }

    #[inline]
    pub fn reduce(self, x: i64) -> i64 {
        x.rem_euclid(self.0)
    }

    pub fn residue(self, x: i64) -> ResidueInt {
        ResidueInt::new(x, self)
    }

    #[inline]
    pub fn is_unit(self, x: i64) -> bool {
        gcd(x, self.0) == 1
    }

    /// Units of Z/N as integers in increasing order in [0, N).
    pub fn units(self) -> Vec<i64> {
        (0..self.0).filter(|&u| self.is_unit(u)).collect()
    }
}

impl TryFrom<i64> for Modulus {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for i64 {
    fn from(n: Modulus) -> i64 {
        n.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of Z/N, stored by its representative in [0, N).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueInt {
    value: i64,
    modulus: Modulus,
}

impl ResidueInt {
    pub fn new(x: i64, modulus: Modulus) -> Self {
        ResidueInt { value: modulus.reduce(x), modulus }
    }

    #[inline]
    pub fn value(self) -> i64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    /// The symmetric lift x̃ ∈ [−N₁, N₂].
    pub fn sym(self) -> i64 {
        sym_rep(self.value, self.modulus)
    }

    pub fn is_unit(self) -> bool {
        self.modulus.is_unit(self.value)
    }

    pub fn inverse(self) -> Result<Self> {
        mod_inv(self)
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Greatest common divisor, always nonnegative; gcd(0, 0) = 0.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

/// Extended Euclid: returns (g, x, y) with a·x + b·y = g = gcd(a, b).
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Inverse of `a` modulo any `n ≥ 1`, in [0, n). Modulo 1 every residue is
/// the unit 0.
pub fn inv_mod(a: i64, n: i64) -> Option<i64> {
    debug_assert!(n >= 1);
    let (g, x, _) = ext_gcd(a.rem_euclid(n), n);
    (g == 1).then(|| x.rem_euclid(n))
}

pub fn mod_inv(a: ResidueInt) -> Result<ResidueInt> {
    let n = a.modulus.get();
    inv_mod(a.value, n)
        .map(|v| ResidueInt { value: v, modulus: a.modulus })
        .ok_or(Error::NotAUnit { value: a.value, modulus: n })
}

/// The unique x̃ ≡ x (mod n) with −⌊(n−1)/2⌋ ≤ x̃ ≤ ⌊n/2⌋.
pub fn sym_rep(x: i64, n: Modulus) -> i64 {
    let r = n.reduce(x);
    if r > n.n2() {
        r - n.get()
    } else {
        r
    }
}

/// Prime factorization by trial division, primes strictly increasing.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize needs a positive integer, got {n}");
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn prime_divisors(n: i64) -> Vec<i64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn euler_phi(n: i64) -> i64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// N·∏_{p|N}(1 + 1/p), the index of Γ₀(N) in SL₂(Z) and the size of P¹(Z/N).
pub fn psi_index(n: i64) -> i64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p + 1))
}

/// Positive divisors in increasing order.
pub fn divisors(n: i64) -> Vec<i64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The divisor data attached to d | N: d′ = N/d, d″ = gcd(d, d′), d̃ = d′/d″.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorProfile {
    pub d: i64,
    pub d_prime: i64,
    pub d_double: i64,
    pub d_tilde: i64,
}

pub fn divisor_profile(d: i64, n: Modulus) -> Result<DivisorProfile> {
    let nn = n.get();
    if d < 1 || nn % d != 0 {
        return Err(Error::NotADivisor { d, n: nn });
    }
    let d_prime = nn / d;
    let d_double = gcd(d, d_prime);
    Ok(DivisorProfile { d, d_prime, d_double, d_tilde: d_prime / d_double })
}
