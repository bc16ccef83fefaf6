//! Words in the generators S, T of SL₂(Z), their matrices, and the Möbius
//! action on cusps.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, Modulus};
use crate::{Error, Result};

/// A 2×2 integer matrix of determinant 1, `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };
    pub const S: Mat2 = Mat2 { a: 0, b: -1, c: 1, d: 0 };
    pub const T: Mat2 = Mat2 { a: 1, b: 1, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        if m.det() == 1 {
            Ok(m)
        } else {
            Err(Error::NotUnimodular { a, b, c, d })
        }
    }

    pub fn t_pow(k: i64) -> Self {
        Mat2 { a: 1, b: k, c: 0, d: 1 }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn inverse(&self) -> Self {
        Mat2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn checked_mul(&self, o: &Mat2) -> Option<Mat2> {
        let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(Mat2 {
            a: dot(self.a, o.a, self.b, o.c)?,
            b: dot(self.a, o.b, self.b, o.d)?,
            c: dot(self.c, o.a, self.d, o.c)?,
            d: dot(self.c, o.b, self.d, o.d)?,
        })
    }

    pub fn in_gamma0(&self, n: Modulus) -> bool {
        self.c.rem_euclid(n.get()) == 0
    }

    /// The representative of ±g with c > 0, or c = 0 and a > 0.
    pub fn sign_normalized(self) -> Self {
        if self.c < 0 || (self.c == 0 && self.a < 0) {
            -self
        } else {
            self
        }
    }

    pub fn eq_up_to_sign(&self, o: &Mat2) -> bool {
        self == o || *self == -*o
    }

    pub fn act_on_cusp(&self, s: Cusp) -> Cusp {
        mobius_cusp(self, s)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    /// # Panics
    /// On i64 overflow of an entry.
    fn mul(self, o: Mat2) -> Mat2 {
        self.checked_mul(&o).expect("matrix entry overflow")
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

pub fn inverse(g: &Mat2) -> Mat2 {
    g.inverse()
}

pub fn in_gamma0(g: &Mat2, n: Modulus) -> bool {
    g.in_gamma0(n)
}

/// The word S T^{e₁} S T^{e₂} ⋯ S T^{e_k}; the empty word is the identity.
///
/// Displays in the notation `ST^3ST`: exponent 1 prints as a bare `T` and
/// exponent 0 drops the `T` altogether.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GroupWord {
    exponents: Vec<i64>,
}

impl GroupWord {
    pub fn new(exponents: Vec<i64>) -> Self {
        GroupWord { exponents }
    }

    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut e = self.exponents.clone();
        e.extend_from_slice(&other.exponents);
        GroupWord { exponents: e }
    }

    pub fn to_matrix(&self) -> Mat2 {
        word_to_matrix(self)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.exponents {
            match e {
                0 => write!(f, "S")?,
                1 => write!(f, "ST")?,
                e => write!(f, "ST^{e}")?,
            }
        }
        Ok(())
    }
}

pub fn word_to_matrix(w: &GroupWord) -> Mat2 {
    w.exponents
        .iter()
        .fold(Mat2::IDENTITY, |acc, &e| acc * Mat2::S * Mat2::t_pow(e))
}

/// A reduced element a/c of P¹(Q) with c ≥ 0; ∞ is stored as 1/0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cusp {
    num: i64,
    den: i64,
}

impl Cusp {
    pub const INFINITY: Cusp = Cusp { num: 1, den: 0 };
    pub const ZERO: Cusp = Cusp { num: 0, den: 1 };

    pub fn new(a: i64, c: i64) -> Result<Self> {
        let g = gcd(a, c);
        if g == 0 {
            return Err(Error::InvalidCusp);
        }
        let (mut a, mut c) = (a / g, c / g);
        if c < 0 || (c == 0 && a < 0) {
            a = -a;
            c = -c;
        }
        Ok(Cusp { num: a, den: c })
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_infinity(self) -> bool {
        self.den == 0
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// g·(p/q) = (ap + bq)/(cp + dq), reduced.
pub fn mobius_cusp(g: &Mat2, s: Cusp) -> Cusp {
    let (p, q) = (s.num as i128, s.den as i128);
    let num = g.a as i128 * p + g.b as i128 * q;
    let den = g.c as i128 * p + g.d as i128 * q;
    let narrow = |x: i128| i64::try_from(x).expect("cusp coordinate overflow");
    Cusp::new(narrow(num), narrow(den)).expect("a unimodular image of a reduced pair is nonzero")
}
