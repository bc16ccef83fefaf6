use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{arc_census, ArcCase, BoundaryArc, Edge};
use crate::arith::{gcd, inv_mod, sym_rep};
use crate::cosets::{CosetRep, CosetTable};
use crate::geometry::{act, triangle_image, Point};
use crate::projline::canonicalize;
use crate::words::Mat2;
use crate::{Error, Result};

/// L∼R pairs are matched through T (TR = L), B∼B pairs through S (SB = B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GluingKind {
    LR,
    BB,
}

impl GluingKind {
    fn generator(self) -> Mat2 {
        match self {
            GluingKind::LR => Mat2::T,
            GluingKind::BB => Mat2::S,
        }
    }
}

/// Two boundary arcs with arc1 = witness·arc2. For L∼R pairs arc1 is the L arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingPair {
    pub arc1: BoundaryArc,
    pub arc2: BoundaryArc,
    pub kind: GluingKind,
    pub witness: Mat2,
}

impl GluingPair {
    fn new(arc1: BoundaryArc, arc2: BoundaryArc, kind: GluingKind) -> Self {
        let mut p = GluingPair { arc1, arc2, kind, witness: Mat2::IDENTITY };
        p.witness = gluing_witness(&p);
        p
    }

    pub fn is_self_paired(&self) -> bool {
        self.arc1 == self.arc2
    }
}

/// An edge shared by two triangles inside the domain. Same conventions as
/// [`GluingPair`], with γ₁Xγ₂⁻¹ = ±Id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seam {
    pub first: BoundaryArc,
    pub second: BoundaryArc,
    pub kind: GluingKind,
}

/// γ₁·X·γ₂⁻¹ with X = T or S, sign-normalized.
pub fn gluing_witness(p: &GluingPair) -> Mat2 {
    (p.arc1.rep.matrix() * p.kind.generator() * p.arc2.rep.matrix().inverse()).sign_normalized()
}

/// Checks on exact endpoints that the witness carries arc2 onto arc1, with
/// ∞ ↦ ∞ and ζ₃ ↦ ζ₆ for L∼R, and ζ₃ ↔ ζ₆, i ↦ i for B∼B.
pub fn witness_maps_arcs(p: &GluingPair) -> bool {
    let src = triangle_image(&p.arc2.rep.matrix());
    let dst = triangle_image(&p.arc1.rep.matrix());
    let g = &p.witness;
    let moved = |x: Point| act(g, x);
    match p.kind {
        GluingKind::LR => moved(src.cusp) == dst.cusp && moved(src.zeta3) == dst.zeta6,
        GluingKind::BB => {
            moved(src.zeta3) == dst.zeta6 && moved(src.zeta6) == dst.zeta3 && moved(src.mid) == dst.mid
        }
    }
}

/// Edges already identified inside the domain: consecutive ST^i along the
/// strip, consecutive ST^jST^m up each column, and ST^jS·B = ST^j·B.
pub fn interior_seams(t: &CosetTable) -> Vec<Seam> {
    let n = t.modulus();
    let lr = |a: CosetRep, b: CosetRep| Seam {
        first: BoundaryArc::new(a, Edge::L),
        second: BoundaryArc::new(b, Edge::R),
        kind: GluingKind::LR,
    };
    let mut out: Vec<Seam> = (-n.n1()..n.n2())
        .map(|i| lr(CosetRep::I { i }, CosetRep::I { i: i + 1 }))
        .collect();
    for rep in t.reps() {
        if let CosetRep::J { j, m } = *rep {
            if m < t.w_table().m(j) {
                out.push(lr(*rep, CosetRep::J { j, m: m + 1 }));
            }
            if m == 0 {
                out.push(Seam {
                    first: BoundaryArc::new(*rep, Edge::B),
                    second: BoundaryArc::new(CosetRep::I { i: j }, Edge::B),
                    kind: GluingKind::BB,
                });
            }
        }
    }
    out
}

/// The two vertical rays Re z = ±1/2, identified by T.
pub fn ray_pair(_t: &CosetTable) -> GluingPair {
    let rays = CosetRep::J { j: 0, m: 0 };
    GluingPair::new(BoundaryArc::new(rays, Edge::L), BoundaryArc::new(rays, Edge::R), GluingKind::LR)
}

/// Partner of an L or B arc by the explicit formulas.
fn formula_partner(arc: &BoundaryArc, case: ArcCase, t: &CosetTable) -> Result<BoundaryArc> {
    let n = t.modulus();
    let nn = n.get();
    let fail = |why: String| Error::PairingFailure { n: nn, reason: format!("{arc}: {why}") };
    match (case, arc.rep) {
        (ArcCase::StripEnd, CosetRep::I { .. }) => Ok(BoundaryArc::new(CosetRep::I { i: -n.n1() }, Edge::R)),
        (ArcCase::UnitBase, CosetRep::I { i }) => {
            let inv = inv_mod(i, nn).ok_or_else(|| fail("i is not a unit".into()))?;
            Ok(BoundaryArc::new(CosetRep::I { i: sym_rep(-inv, n) }, Edge::B))
        }
        (ArcCase::ColumnLeft, CosetRep::J { j, .. }) => {
            let w = t.w_table().w(j);
            let u = inv_mod(1 - j * w, nn).ok_or_else(|| fail("1 − jW_j is not a unit".into()))?;
            let target = sym_rep(u * n.reduce(j), n);
            Ok(BoundaryArc::new(CosetRep::J { j: target, m: 0 }, Edge::R))
        }
        (ArcCase::ColumnBase, CosetRep::J { j, m }) => {
            let p = canonicalize(j * m - 1, -j, n).map_err(|e| fail(e.to_string()))?;
            match t.pr_lookup(&p)? {
                rep @ CosetRep::J { m: m2, .. } if m2 >= 1 => Ok(BoundaryArc::new(rep, Edge::B)),
                other => Err(fail(format!("preferred representative {other} of {p} is not a column base"))),
            }
        }
        _ => Err(fail(format!("no partner formula for case {case:?}"))),
    }
}

/// Pairs every non-ray boundary arc. L∼R pairs come first in census order of
/// their L arc, then B∼B pairs in census order of their first arc.
pub fn glue(t: &CosetTable) -> Result<Vec<GluingPair>> {
    let nn = t.modulus().get();
    let fail = |why: String| Error::PairingFailure { n: nn, reason: why };
    let census: Vec<(BoundaryArc, ArcCase)> =
        arc_census(t).into_iter().filter(|(_, c)| *c != ArcCase::Ray).collect();
    let position: HashMap<BoundaryArc, usize> = census.iter().enumerate().map(|(i, (a, _))| (*a, i)).collect();
    let mut partner: Vec<Option<usize>> = vec![None; census.len()];

    let mut lr = Vec::new();
    let mut bb = Vec::new();
    for (idx, (arc, case)) in census.iter().enumerate() {
        if arc.edge == Edge::R {
            continue;
        }
        let other = formula_partner(arc, *case, t)?;
        let &o = position
            .get(&other)
            .ok_or_else(|| fail(format!("partner {other} of {arc} is not a boundary arc")))?;
        if census[o].0.edge != if arc.edge == Edge::L { Edge::R } else { Edge::B } {
            return Err(fail(format!("{arc} paired with incompatible edge {other}")));
        }
        for (a, b) in [(idx, o), (o, idx)] {
            match partner[a] {
                None => partner[a] = Some(b),
                Some(prev) if prev == b => {}
                Some(prev) => {
                    return Err(fail(format!(
                        "{} matched to both {} and {}",
                        census[a].0, census[prev].0, census[b].0
                    )))
                }
            }
        }
        if arc.edge == Edge::L {
            lr.push(GluingPair::new(*arc, other, GluingKind::LR));
        } else if idx <= o {
            bb.push(GluingPair::new(*arc, other, GluingKind::BB));
        }
    }
    if let Some(i) = partner.iter().position(Option::is_none) {
        return Err(fail(format!("{} is unmatched", census[i].0)));
    }

    let pairs: Vec<GluingPair> = lr.into_iter().chain(bb).collect();
    for p in &pairs {
        if !p.witness.in_gamma0(t.modulus()) {
            return Err(fail(format!("witness {} for {} ∼ {} is not in Γ₀(N)", p.witness, p.arc1, p.arc2)));
        }
        if p.is_self_paired() && !(p.kind == GluingKind::BB && self_paired_unit_or_column(p, t)) {
            return Err(fail(format!("{} is paired with itself", p.arc1)));
        }
    }
    Ok(pairs)
}

fn self_paired_unit_or_column(p: &GluingPair, t: &CosetTable) -> bool {
    let nn = t.modulus().get();
    match p.arc1.rep {
        CosetRep::I { i } => inv_mod(i, nn).is_some_and(|inv| (-inv - i).rem_euclid(nn) == 0),
        CosetRep::J { j, m } => gcd(j, nn) > 1 && m >= 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Modulus;
    use crate::cosets::build_theta;
    use crate::cusps::chi;
    use crate::projline::{proj_eq, row_map};
    use std::collections::HashSet;

    fn table(n: i64) -> CosetTable {
        build_theta(Modulus::new(n).unwrap()).unwrap()
    }

    fn unordered(p: &GluingPair) -> (String, String) {
        let (a, b) = (p.arc1.to_string(), p.arc2.to_string());
        if a <= b { (a, b) } else { (b, a) }
    }

    #[test]
    fn pairs_for_12() {
        let pairs = glue(&table(12)).unwrap();
        assert_eq!(pairs.len(), 12);
        let got: HashSet<_> = pairs.iter().map(unordered).collect();
        for (a, b) in [
            ("ST^3STB", "ST^-2STB"),
            ("ST^6SL", "ST^6SR"),
            ("ST^5B", "ST^-5B"),
            ("ST^2SL", "ST^-2SR"),
            ("STB", "ST^-1B"),
        ] {
            let key = if a <= b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) };
            assert!(got.contains(&key), "missing {a} ∼ {b}");
        }
    }

    #[test]
    fn self_paired_base_for_5() {
        let pairs = glue(&table(5)).unwrap();
        let p = pairs.iter().find(|p| p.arc1.to_string() == "ST^2B").unwrap();
        assert!(p.is_self_paired());
        assert_eq!(p.witness.trace(), 0);
    }

    #[test]
    fn witness_examples_for_12() {
        let n = Modulus::new(12).unwrap();
        let p = GluingPair::new(
            BoundaryArc::new(CosetRep::I { i: 6 }, Edge::L),
            BoundaryArc::new(CosetRep::I { i: -5 }, Edge::R),
            GluingKind::LR,
        );
        let raw = CosetRep::I { i: 6 }.matrix() * Mat2::T * CosetRep::I { i: -5 }.matrix().inverse();
        assert!(p.witness.eq_up_to_sign(&raw));
        assert!(p.witness.in_gamma0(n));
        assert!(p.witness.c >= 0);
        assert!(witness_maps_arcs(&p));
        let (j, m, j2, m2) = (4, 1, -3, 1);
        assert_eq!(j * j2 + (j * m - 1) * (j2 * m2 - 1), -24);
        let q = GluingPair::new(
            BoundaryArc::new(CosetRep::J { j, m }, Edge::B),
            BoundaryArc::new(CosetRep::J { j: j2, m: m2 }, Edge::B),
            GluingKind::BB,
        );
        assert!(q.witness.in_gamma0(n));
        assert!(witness_maps_arcs(&q));
    }

    #[test]
    fn rays_are_identified_by_t() {
        let p = ray_pair(&table(7));
        assert_eq!(p.witness, Mat2::T);
        assert!(witness_maps_arcs(&p));
    }

    #[test]
    fn interior_seams_are_trivial_gluings() {
        for nn in [2, 5, 12, 30, 36] {
            for s in interior_seams(&table(nn)) {
                let g = s.first.rep.matrix() * s.kind.generator() * s.second.rep.matrix().inverse();
                assert!(g.eq_up_to_sign(&Mat2::IDENTITY), "N = {nn}: {} / {}", s.first, s.second);
            }
        }
    }

    #[test]
    fn soundness_sweep() {
        for nn in 2..=150 {
            let t = table(nn);
            let n = t.modulus();
            let pairs = glue(&t).unwrap();
            let mut seen = HashSet::new();
            for p in &pairs {
                assert!(p.witness.in_gamma0(n));
                assert!(witness_maps_arcs(p), "N = {nn}: {} ∼ {}", p.arc1, p.arc2);
                let x = p.kind.generator();
                let lhs = row_map(&(p.arc1.rep.matrix() * x), n);
                assert!(proj_eq(&lhs, &row_map(&p.arc2.rep.matrix(), n)).unwrap());
                assert!(seen.insert(p.arc1));
                if !p.is_self_paired() {
                    assert!(seen.insert(p.arc2));
                }
                if let (CosetRep::J { j, m }, CosetRep::J { j: j2, m: m2 }, GluingKind::BB) =
                    (p.arc1.rep, p.arc2.rep, p.kind)
                {
                    assert_eq!((j * j2 + (j * m - 1) * (j2 * m2 - 1)).rem_euclid(nn), 0);
                    assert!(gcd(j2, nn) > 1 && m2 >= 1 && m2 <= t.w_table().m(j2));
                }
                if p.kind == GluingKind::LR {
                    assert_eq!(chi(p.arc1.rep.cusp(), n), chi(p.arc2.rep.cusp(), n));
                }
            }
            let non_rays = super::super::boundary_arcs(&t).into_iter().filter(|a| !a.is_ray()).count();
            assert_eq!(seen.len(), non_rays, "N = {nn}");
        }
    }
}
