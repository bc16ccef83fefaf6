//! Reference implementations written straight from the definitions, sharing
//! no code with the library.

#![allow(dead_code)]

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn is_unit(x: i64, n: i64) -> bool {
    gcd(x.rem_euclid(n), n) == 1
}

/// Least m ≥ 1 with m·j − 1 a unit mod n.
pub fn w_brute(j: i64, n: i64) -> i64 {
    (1..).find(|&m| is_unit(m * j - 1, n)).unwrap()
}

pub fn primes_of(mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn psi(n: i64) -> i64 {
    primes_of(n).iter().fold(n, |acc, p| acc / p * (p + 1))
}

pub fn phi(n: i64) -> i64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as i64
}

pub fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn cusp_count(n: i64) -> i64 {
    divisors(n).into_iter().map(|d| phi(gcd(d, n / d))).sum()
}

/// (d, a·c/d mod d″) for the reduced cusp a/c, d = gcd(c, N), d″ = gcd(d, N/d).
pub fn chi(a: i64, c: i64, n: i64) -> (i64, i64) {
    let d = gcd(c, n);
    let d2 = gcd(d, n / d);
    (d, (a * (c / d)).rem_euclid(d2))
}

/// Genus of X₀(N) by the classical formula
/// g = 1 + μ/12 − ε₂/4 − ε₃/3 − ε∞/2, with ε₂ and ε₃ counted as roots of
/// x² + 1 and x² + x + 1 modulo N.
pub fn genus_formula(n: i64) -> i64 {
    let mu = psi(n);
    let e2 = (0..n).filter(|x| (x * x + 1) % n == 0).count() as i64;
    let e3 = (0..n).filter(|x| (x * x + x + 1) % n == 0).count() as i64;
    let einf = cusp_count(n);
    let twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * einf;
    assert_eq!(twelve_g % 12, 0, "N = {n}");
    twelve_g / 12
}

/// Integer 2×2 product, rows first.
pub fn mul(x: [[i64; 2]; 2], y: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]
}

/// Evaluates a word like "ST^3ST", "ST^-2S" or "S" (optionally followed by
/// an edge letter, which is ignored) as S·T^{e₁}·S·T^{e₂}···.
pub fn word_matrix(word: &str) -> [[i64; 2]; 2] {
    let s = [[0, -1], [1, 0]];
    let t = |k: i64| [[1, k], [0, 1]];
    let w = word.trim_end_matches(['L', 'R', 'B']);
    let mut acc = [[1, 0], [0, 1]];
    for part in w.split('S').skip(1) {
        acc = mul(acc, s);
        let e = match part {
            "" => 0,
            "T" => 1,
            p => p.strip_prefix("T^").unwrap().parse().unwrap(),
        };
        acc = mul(acc, t(e));
    }
    acc
}

pub fn inverse(g: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [[g[1][1], -g[0][1]], [-g[1][0], g[0][0]]]
}
