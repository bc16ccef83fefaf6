//! Per-level self checks, and sweeps of them over ranges of N.

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd, psi_index, Modulus};
use crate::cosets::{build_theta_with, CosetTable};
use crate::cusps::{all_classes, classify_domain_cusps, cusp_class_count, width_sum_check};
use crate::domain::{boundary_arcs, genus, glue, witness_maps_arcs};
use crate::parallel;
use crate::wfunc::{w_of_crt, w_scan, w_table};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub n: i64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub genus: Option<i64>,
}

impl LevelReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn check(name: &str, r: std::result::Result<(), String>) -> Check {
    Check { name: name.to_string(), passed: r.is_ok(), detail: r.err() }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every check for one level. Later checks are skipped (and reported
/// failed) when Θ itself cannot be built.
pub fn verify_n(n: i64) -> LevelReport {
    let md = match Modulus::new(n) {
        Ok(m) => m,
        Err(e) => {
            return LevelReport { n, checks: vec![check("modulus", Err(e.to_string()))], genus: None };
        }
    };
    let mut checks = Vec::new();
    let wt = w_table(md);

    checks.push(check(
        "w_scan_vs_crt",
        (0..n).try_for_each(|j| {
            let (a, b) = (w_scan(j, n), w_of_crt(md.residue(j)));
            ensure(a == b, || format!("j = {j}: scan gives {a}, sieve gives {b}"))
        }),
    ));
    checks.push(check("w_sums", {
        let psi = psi_index(n);
        ensure(wt.sum_total() == psi && wt.sum_units() == n, || {
            format!("ΣW = {} (ψ = {psi}), Σ over units = {}", wt.sum_total(), wt.sum_units())
        })
    }));

    let table: Result<CosetTable> = build_theta_with(wt);
    let t = match table {
        Ok(t) => {
            checks.push(check("theta_bijection", Ok(())));
            t
        }
        Err(e) => {
            checks.push(check("theta_bijection", Err(e.to_string())));
            return LevelReport { n, checks, genus: None };
        }
    };

    checks.push(check("cusp_widths", cusp_widths(md, &t)));
    checks.push(check("arc_census", {
        let expected = 2
            + euler_phi(n)
            + md.symmetric_range()
                .filter(|&j| gcd(j, n) > 1)
                .map(|j| 2 + t.w_table().m(j))
                .sum::<i64>();
        let got = boundary_arcs(&t).len() as i64;
        ensure(got == expected, || format!("{got} arcs, expected {expected}"))
    }));
    checks.push(check(
        "gluing",
        glue(&t).map_err(|e| e.to_string()).and_then(|pairs| {
            pairs.iter().try_for_each(|p| {
                ensure(witness_maps_arcs(p), || format!("witness {} does not carry {} onto {}", p.witness, p.arc2, p.arc1))
            })
        }),
    ));
    let g = genus(&t);
    let genus_value = g.as_ref().ok().map(|r| r.genus);
    checks.push(check(
        "genus",
        g.map_err(|e| e.to_string()).and_then(|r| {
            let psi = psi_index(n);
            ensure(r.faces == psi && r.edges == 2 * psi, || {
                format!("F = {}, E = {} for ψ = {psi}", r.faces, r.edges)
            })
        }),
    ));
    LevelReport { n, checks, genus: genus_value }
}

fn cusp_widths(n: Modulus, t: &CosetTable) -> std::result::Result<(), String> {
    let classes = classify_domain_cusps(n, t);
    let count = cusp_class_count(n) as usize;
    ensure(classes.len() == count, || format!("{} cusp classes met, expected {count}", classes.len()))?;
    for c in all_classes(n) {
        let members = classes.get(&c).ok_or_else(|| format!("class ({}; {}) not met", c.d, c.b))?;
        let total: i64 = members.iter().map(|m| m.width).sum();
        ensure(total == c.width, || format!("class ({}; {}) has width {total}, expected {}", c.d, c.b, c.width))?;
        let ws = width_sum_check(c.d, c.b, n).map_err(|e| e.to_string())?;
        ensure(ws.holds(), || format!("class ({}; {}): d̃ = {} but ΣW = {}", c.d, c.b, ws.lhs, ws.rhs))?;
    }
    Ok(())
}

/// Reports for lo..=hi in order, computed in parallel when enabled.
pub fn verify_range(lo: i64, hi: i64) -> Vec<LevelReport> {
    parallel::map_range(lo, hi, verify_n)
}

pub fn verify_range_sequential(lo: i64, hi: i64) -> Vec<LevelReport> {
    parallel::map_range_sequential(lo, hi, verify_n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub lo: i64,
    pub hi: i64,
    pub checked: usize,
    pub failed: usize,
    /// Level, check name and detail of the first failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<(i64, String, String)>,
}

pub fn summarize(lo: i64, hi: i64, reports: &[LevelReport]) -> SweepSummary {
    let failed: Vec<&LevelReport> = reports.iter().filter(|r| !r.passed()).collect();
    SweepSummary {
        lo,
        hi,
        checked: reports.len(),
        failed: failed.len(),
        first_failure: failed.first().map(|r| {
            let c = r.first_failure().expect("failed report has a failing check");
            (r.n, c.name.clone(), c.detail.clone().unwrap_or_default())
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels_pass() {
        for n in [2, 12, 30, 36] {
            let r = verify_n(n);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
        assert_eq!(verify_n(12).genus, Some(0));
    }

    #[test]
    fn invalid_level_is_reported() {
        let r = verify_n(1);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "modulus");
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = verify_range(2, 60);
        assert_eq!(a, verify_range_sequential(2, 60));
        let s = summarize(2, 60, &a);
        assert_eq!((s.checked, s.failed), (59, 0));
    }
}
