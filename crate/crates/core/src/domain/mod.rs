//! Boundary of the connected fundamental domain, the side pairing by
//! Γ₀(N), and the genus of the glued surface.
//!
//! Every translated triangle γD̄ has three edges: L (Re z = 1/2), R
//! (Re z = −1/2) and the base B on the unit circle, with TR = L and SB = B.

mod genus;
mod gluing;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::cosets::{CosetRep, CosetTable};

pub use genus::{genus, GenusReport};
pub use gluing::{
    glue, gluing_witness, interior_seams, ray_pair, witness_maps_arcs, GluingKind, GluingPair, Seam,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Edge {
    L,
    R,
    B,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Edge::L => "L",
            Edge::R => "R",
            Edge::B => "B",
        })
    }
}

/// The edge `edge` of the triangle rep·D̄. Displays as e.g. `ST^3STB`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryArc {
    pub rep: CosetRep,
    pub edge: Edge,
}

impl BoundaryArc {
    pub fn new(rep: CosetRep, edge: Edge) -> Self {
        BoundaryArc { rep, edge }
    }

    /// The vertical rays Re z = ±1/2: the degenerate j = 0 arcs.
    pub fn is_ray(&self) -> bool {
        self.rep == CosetRep::J { j: 0, m: 0 } && self.edge != Edge::B
    }
}

impl fmt::Display for BoundaryArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.rep, self.edge)
    }
}

/// Where an arc comes from in the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcCase {
    /// ST^{N₂}L or ST^{−N₁}R, the ends of the ST^i strip.
    StripEnd,
    /// ST^iB for a unit i.
    UnitBase,
    /// ST^jSR, the first triangle of a hanging column.
    ColumnRight,
    /// ST^jST^{M_j}L, the last triangle of a hanging column.
    ColumnLeft,
    /// ST^jST^mB with 1 ≤ m ≤ M_j.
    ColumnBase,
    /// The j = 0 column degenerates to the two vertical rays.
    Ray,
}

impl ArcCase {
    pub fn label(self) -> &'static str {
        match self {
            ArcCase::StripEnd => "1",
            ArcCase::UnitBase => "2",
            ArcCase::ColumnRight => "3a",
            ArcCase::ColumnLeft => "3b",
            ArcCase::ColumnBase => "3c",
            ArcCase::Ray => "ray",
        }
    }
}

/// The boundary arcs with their census case, in census order: the strip
/// ends, the unit bases by i, then each hanging column by j.
pub fn arc_census(t: &CosetTable) -> Vec<(BoundaryArc, ArcCase)> {
    let n = t.modulus();
    let nn = n.get();
    let mut out = vec![
        (BoundaryArc::new(CosetRep::I { i: n.n2() }, Edge::L), ArcCase::StripEnd),
        (BoundaryArc::new(CosetRep::I { i: -n.n1() }, Edge::R), ArcCase::StripEnd),
    ];
    out.extend(
        n.symmetric_range()
            .filter(|&i| n.is_unit(i))
            .map(|i| (BoundaryArc::new(CosetRep::I { i }, Edge::B), ArcCase::UnitBase)),
    );
    for j in n.symmetric_range().filter(|&j| gcd(j, nn) > 1) {
        let top = t.w_table().m(j);
        let (right, left) = if j == 0 {
            (ArcCase::Ray, ArcCase::Ray)
        } else {
            (ArcCase::ColumnRight, ArcCase::ColumnLeft)
        };
        out.push((BoundaryArc::new(CosetRep::J { j, m: 0 }, Edge::R), right));
        out.push((BoundaryArc::new(CosetRep::J { j, m: top }, Edge::L), left));
        out.extend((1..=top).map(|m| (BoundaryArc::new(CosetRep::J { j, m }, Edge::B), ArcCase::ColumnBase)));
    }
    out
}

/// All boundary arcs, rays included (see [`BoundaryArc::is_ray`]).
pub fn boundary_arcs(t: &CosetTable) -> Vec<BoundaryArc> {
    arc_census(t).into_iter().map(|(a, _)| a).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{euler_phi, Modulus};
    use crate::cosets::build_theta;

    fn table(n: i64) -> CosetTable {
        build_theta(Modulus::new(n).unwrap()).unwrap()
    }

    fn names(arcs: &[BoundaryArc]) -> Vec<String> {
        arcs.iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn census_for_12() {
        let arcs = boundary_arcs(&table(12));
        assert_eq!(arcs.len(), 26);
        assert_eq!(arcs.iter().filter(|a| a.is_ray()).count(), 2);
        let listed = [
            "ST^2SR", "ST^3STB", "ST^3STL", "ST^3SR", "ST^4STB", "ST^4STL", "ST^4SR", "ST^5B", "ST^6SL",
            "ST^6L", "ST^-2STL", "ST^-2STB", "ST^-3SR", "ST^-3STL", "ST^-3STB", "ST^-4SR", "ST^-4SL",
            "ST^-5B", "ST^6SR", "ST^-5R",
        ];
        let got = names(&arcs);
        for a in listed {
            assert!(got.contains(&a.to_string()), "missing {a}");
        }
        for extra in ["ST^2SL", "ST^-2SR", "STB", "ST^-1B", "SSR", "SSL"] {
            assert!(got.contains(&extra.to_string()), "missing {extra}");
        }
    }

    #[test]
    fn census_for_2() {
        let got = names(&boundary_arcs(&table(2)));
        assert_eq!(got, vec!["STL", "SR", "STB", "SSR", "SSL"]);
    }

    #[test]
    fn column_six_for_12() {
        let arcs = boundary_arcs(&table(12));
        let six: Vec<_> = arcs.iter().filter(|a| matches!(a.rep, CosetRep::J { j: 6, .. })).collect();
        assert_eq!(names(&six.into_iter().copied().collect::<Vec<_>>()), vec!["ST^6SR", "ST^6SL"]);
    }

    #[test]
    fn census_count_formula() {
        for nn in 2..=300 {
            let t = table(nn);
            let n = t.modulus();
            let expected: i64 = 2
                + euler_phi(nn)
                + n.symmetric_range()
                    .filter(|&j| gcd(j, nn) > 1)
                    .map(|j| 2 + t.w_table().m(j))
                    .sum::<i64>();
            assert_eq!(boundary_arcs(&t).len() as i64, expected, "N = {nn}");
        }
    }
}
