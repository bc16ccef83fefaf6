use thiserror::Error;

use crate::arith::MAX_MODULUS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is outside the supported range [2, {MAX_MODULUS}]")]
    InvalidModulus(i64),
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: i64, modulus: i64 },
    #[error("{d} is not a positive divisor of {n}")]
    NotADivisor { d: i64, n: i64 },
    #[error("({a}, {b}) is not a point of P^1(Z/{n}): gcd(a, b, n) > 1")]
    NotProjective { a: i64, b: i64, n: i64 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(i64, i64),
    #[error("matrix [[{a}, {b}], [{c}, {d}]] does not have determinant 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64 },
    #[error("0/0 is not a cusp")]
    InvalidCusp,
    #[error("coset table for N={n} is not a bijection onto P^1(Z/N): {reason}")]
    BijectionFailure { n: i64, reason: String },
    #[error("no fiber for d={d}, b={b} at N={n}: d must divide N and b must be a unit mod gcd(d, N/d)")]
    BadFiber { d: i64, b: i64, n: i64 },
    #[error("boundary pairing failed for N={n}: {reason}")]
    PairingFailure { n: i64, reason: String },
    #[error("glued surface for N={n} is not a closed orientable surface: {reason}")]
    NonOrientableOrOpen { n: i64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
