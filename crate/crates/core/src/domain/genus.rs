use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::gluing::{glue, interior_seams, ray_pair, GluingKind};
use super::{BoundaryArc, Edge};
use crate::cosets::CosetTable;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub n: i64,
    pub genus: i64,
    pub faces: i64,
    pub edges: i64,
    pub vertices: i64,
}

impl GenusReport {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices - self.edges + self.faces
    }
}

// Per-triangle slots. Vertices: cusp, ζ₃, ζ₆, i. Edges: L (cusp–ζ₆),
// R (cusp–ζ₃), and the base split at i into B1 (ζ₃–i) and B2 (i–ζ₆).
const CUSP: usize = 0;
const Z3: usize = 1;
const Z6: usize = 2;
const MID: usize = 3;
const EL: usize = 0;
const ER: usize = 1;
const EB1: usize = 2;
const EB2: usize = 3;

struct Complex {
    verts: UnionFind<usize>,
    edges: UnionFind<usize>,
}

impl Complex {
    fn identify(&mut self, t1: usize, t2: usize, kind: GluingKind) {
        let v = |t: usize, k: usize| 4 * t + k;
        let e = v;
        match kind {
            GluingKind::LR => {
                self.edges.union(e(t1, EL), e(t2, ER));
                self.verts.union(v(t1, CUSP), v(t2, CUSP));
                self.verts.union(v(t1, Z6), v(t2, Z3));
            }
            GluingKind::BB => {
                self.edges.union(e(t1, EB1), e(t2, EB2));
                self.edges.union(e(t1, EB2), e(t2, EB1));
                self.verts.union(v(t1, Z3), v(t2, Z6));
                self.verts.union(v(t1, Z6), v(t2, Z3));
                self.verts.union(v(t1, MID), v(t2, MID));
            }
        }
    }
}

fn class_sizes(uf: UnionFind<usize>) -> Vec<usize> {
    let labels = uf.into_labeling();
    let mut sizes = vec![0usize; labels.len()];
    for l in labels {
        sizes[l] += 1;
    }
    sizes.into_iter().filter(|&s| s > 0).collect()
}

/// Genus of Γ₀(N)\H* from the glued triangle complex: χ = V − E + F.
pub fn genus(t: &CosetTable) -> Result<GenusReport> {
    let nn = t.modulus().get();
    let fail = |reason: String| Error::NonOrientableOrOpen { n: nn, reason };
    let faces = t.len();
    let mut cx = Complex { verts: UnionFind::new(4 * faces), edges: UnionFind::new(4 * faces) };
    let tri = |a: &BoundaryArc| t.index_of(&a.rep).ok_or_else(|| fail(format!("{} is not in Θ", a.rep)));

    let mut glue_arcs = |a1: &BoundaryArc, a2: &BoundaryArc, kind: GluingKind| -> Result<()> {
        let expect = match kind {
            GluingKind::LR => (Edge::L, Edge::R),
            GluingKind::BB => (Edge::B, Edge::B),
        };
        if (a1.edge, a2.edge) != expect {
            return Err(fail(format!("{a1} and {a2} cannot be glued as {kind:?}")));
        }
        cx.identify(tri(a1)?, tri(a2)?, kind);
        Ok(())
    };
    for s in interior_seams(t) {
        glue_arcs(&s.first, &s.second, s.kind)?;
    }
    for p in glue(t)?.iter().chain(std::iter::once(&ray_pair(t))) {
        glue_arcs(&p.arc1, &p.arc2, p.kind)?;
    }

    let edge_classes = class_sizes(cx.edges);
    if let Some(bad) = edge_classes.iter().find(|&&s| s != 2) {
        return Err(fail(format!("an edge class has {bad} sides instead of 2")));
    }
    let vertices = class_sizes(cx.verts).len() as i64;
    let edges = edge_classes.len() as i64;
    let faces = faces as i64;
    let chi = vertices - edges + faces;
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(fail(format!("Euler characteristic {chi} is not that of a closed orientable surface")));
    }
    Ok(GenusReport { n: nn, genus: (2 - chi) / 2, faces, edges, vertices })
}
