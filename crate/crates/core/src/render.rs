//! SVG drawing of the connected fundamental domain.
//!
//! Geometry is exact up to serialization: every vertex is computed in Q and
//! only converted to floating point when printed, so arcs shared by two
//! triangles print identical endpoints.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cosets::CosetTable;
use crate::domain::{boundary_arcs, BoundaryArc, Edge, GluingPair};
use crate::geometry::{act, to_f64, triangle_image, Carrier, Geodesic, HPoint, Point, Q, TriangleImage};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    /// Height at which the vertical rays to ∞ are cut.
    pub clip: f64,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width: 900, height: 900, clip: 2.2, labels: true }
    }
}

const RAY_COLOR: &str = "#888888";

/// Stroke color of the k-th side pair.
pub fn pair_color(k: usize) -> String {
    let hue = (k as f64 * 137.508) % 360.0;
    format!("hsl({hue:.3},70%,40%)")
}

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
    clip: f64,
}

impl Frame {
    fn xy(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)
    }

    /// Pixel position of a point; ∞ is replaced by the clip height on `carrier`.
    fn point(&self, p: Point, carrier: &Carrier) -> (f64, f64) {
        match (p, carrier) {
            (Point::At(h), _) => self.xy(to_f64(h.x), h.y()),
            (Point::Infinity, Carrier::Vertical { x }) => self.xy(to_f64(*x), self.clip),
            (Point::Infinity, Carrier::Semicircle { .. }) => unreachable!("semicircles avoid ∞"),
        }
    }

    /// Path command continuing along `g` from `from` to `to`.
    fn segment(&self, g: &Geodesic, from: Point, to: Point) -> String {
        let (fx, _) = self.point(from, &g.carrier);
        let (tx, ty) = self.point(to, &g.carrier);
        match g.carrier {
            Carrier::Vertical { .. } => format!("L {tx:.6} {ty:.6}"),
            Carrier::Semicircle { radius, .. } => {
                let r = to_f64(radius) * self.scale;
                let sweep = u8::from(tx > fx);
                format!("A {r:.6} {r:.6} 0 0 {sweep} {tx:.6} {ty:.6}")
            }
        }
    }

    fn arc_path(&self, g: &Geodesic) -> String {
        let (x, y) = self.point(g.from, &g.carrier);
        format!("M {x:.6} {y:.6} {}", self.segment(g, g.from, g.to))
    }

    /// Closed outline cusp → ζ₆ → ζ₃ → cusp along L, B reversed, R reversed.
    fn outline(&self, tri: &TriangleImage) -> String {
        let (x, y) = self.point(tri.cusp, &tri.l.carrier);
        let mut d = format!("M {x:.6} {y:.6} ");
        d += &self.segment(&tri.l, tri.cusp, tri.zeta6);
        d.push(' ');
        d += &self.segment(&tri.b, tri.zeta6, tri.zeta3);
        d.push(' ');
        d += &self.segment(&tri.r, tri.zeta3, tri.cusp);
        d += " Z";
        d
    }
}

fn edge_of(tri: &TriangleImage, e: Edge) -> &Geodesic {
    match e {
        Edge::L => &tri.l,
        Edge::R => &tri.r,
        Edge::B => &tri.b,
    }
}

/// Where the label of γ goes: γ(2i), inside the translated triangle.
fn label_anchor(tri_g: &crate::words::Mat2) -> Point {
    act(tri_g, Point::At(HPoint { x: Q::from_integer(0), y2: Q::from_integer(4) }))
}

/// Draws every translated triangle, each boundary arc colored by its side
/// pair (`data-pair` holds the pair index), and optionally the word labels.
pub fn render_svg(t: &CosetTable, pairs: &[GluingPair], opts: &RenderOptions) -> String {
    let reps = t.reps();
    let mats: Vec<_> = reps.iter().map(|r| r.matrix()).collect();
    let tris: Vec<TriangleImage> = mats.iter().map(triangle_image).collect();

    let mut xmin = -0.5f64;
    let mut xmax = 0.5f64;
    for tri in &tris {
        for p in [tri.cusp, tri.zeta3, tri.zeta6] {
            if let Point::At(h) = p {
                xmin = xmin.min(to_f64(h.x));
                xmax = xmax.max(to_f64(h.x));
            }
        }
    }
    let pad = 0.05 * (xmax - xmin);
    let (x0, x1) = (xmin - pad, xmax + pad);
    let (y0, y1) = (-0.05 * opts.clip, opts.clip);
    let scale = (opts.width as f64 / (x1 - x0)).min(opts.height as f64 / (y1 - y0));
    let frame = Frame { x0, y1, scale, clip: opts.clip };
    let (w, h) = ((x1 - x0) * scale, (y1 - y0) * scale);
    let (_, axis_y) = frame.xy(0.0, 0.0);

    let pair_of: HashMap<BoundaryArc, usize> =
        pairs.iter().enumerate().flat_map(|(k, p)| [(p.arc1, k), (p.arc2, k)]).collect();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.6}" height="{h:.6}" viewBox="0 0 {w:.6} {h:.6}" data-n="{}">"#,
        t.modulus().get()
    );
    s += "<style>.tri{fill:#eef2fb;stroke:#b0b8c8;stroke-width:0.6}.arc{fill:none;stroke-width:2.2}.label{font-family:sans-serif;font-size:9px;text-anchor:middle;fill:#222}.axis{stroke:#444;stroke-width:0.8}</style>\n";
    let _ = writeln!(s, r#"<defs><clipPath id="plot"><rect x="0" y="0" width="{w:.6}" height="{h:.6}"/></clipPath></defs>"#);
    s += "<g clip-path=\"url(#plot)\">\n";
    let _ = writeln!(s, r#"<line class="axis" x1="0" y1="{axis_y:.6}" x2="{w:.6}" y2="{axis_y:.6}"/>"#);

    s += "<g class=\"triangles\">\n";
    for (rep, tri) in reps.iter().zip(&tris) {
        let _ = writeln!(s, r#"<path class="tri" data-rep="{rep}" d="{}"/>"#, frame.outline(tri));
    }
    s += "</g>\n<g class=\"boundary\">\n";
    for arc in boundary_arcs(t) {
        let idx = t.index_of(&arc.rep).expect("boundary arcs come from Θ");
        let d = frame.arc_path(edge_of(&tris[idx], arc.edge));
        let (pair, color) = match pair_of.get(&arc) {
            _ if arc.is_ray() => ("ray".to_string(), RAY_COLOR.to_string()),
            Some(&k) => (k.to_string(), pair_color(k)),
            None => ("none".to_string(), RAY_COLOR.to_string()),
        };
        let _ = writeln!(s, r#"<path class="arc" data-arc="{arc}" data-pair="{pair}" stroke="{color}" d="{d}"/>"#);
    }
    s += "</g>\n";

    if opts.labels {
        s += "<g class=\"labels\">\n";
        for (rep, g) in reps.iter().zip(&mats) {
            let p = label_anchor(g);
            let (x, y) = match p {
                Point::At(hp) => frame.xy(to_f64(hp.x), hp.y().min(opts.clip * 0.9)),
                Point::Infinity => continue,
            };
            let _ = writeln!(s, r#"<text class="label" x="{x:.6}" y="{y:.6}">{rep}</text>"#);
        }
        s += "</g>\n";
    }
    s += "</g>\n</svg>\n";
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Modulus;
    use crate::cosets::build_theta;
    use crate::domain::glue;
    use petgraph::unionfind::UnionFind;

    fn svg(n: i64, labels: bool) -> String {
        let t = build_theta(Modulus::new(n).unwrap()).unwrap();
        let pairs = glue(&t).unwrap();
        render_svg(&t, &pairs, &RenderOptions { labels, ..RenderOptions::default() })
    }

    #[test]
    fn deterministic_and_labelled() {
        let a = svg(12, true);
        assert_eq!(a, svg(12, true));
        assert_eq!(a.matches("<text class=\"label\"").count(), 24);
        assert_eq!(a.matches("class=\"tri\"").count(), 24);
        assert_eq!(a.matches("class=\"arc\"").count(), 26);
        assert!(a.contains("clipPath"));
        assert!(!svg(12, false).contains("<text"));
    }

    #[test]
    fn paired_arcs_share_a_color() {
        let s = svg(30, true);
        let mut color_of_pair: HashMap<String, String> = HashMap::new();
        for line in s.lines().filter(|l| l.contains("class=\"arc\"")) {
            let attr = |name: &str| {
                let start = line.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
                line[start..start + line[start..].find('"').unwrap()].to_string()
            };
            let (pair, color) = (attr("data-pair"), attr("stroke"));
            assert_ne!(pair, "none");
            if let Some(prev) = color_of_pair.insert(pair.clone(), color.clone()) {
                assert_eq!(prev, color, "pair {pair}");
            }
        }
    }

    /// Triangles sharing an edge exactly; the domain must be connected.
    #[test]
    fn domain_is_connected() {
        for n in [2, 7, 12, 30, 36, 64] {
            let t = build_theta(Modulus::new(n).unwrap()).unwrap();
            let tris: Vec<_> = t.reps().iter().map(|r| triangle_image(&r.matrix())).collect();
            let mut uf = UnionFind::new(tris.len());
            for i in 0..tris.len() {
                for j in i + 1..tris.len() {
                    let shared = [&tris[i].l, &tris[i].r, &tris[i].b]
                        .iter()
                        .any(|e| [&tris[j].l, &tris[j].r, &tris[j].b].iter().any(|f| e.same_set(f)));
                    if shared {
                        uf.union(i, j);
                    }
                }
            }
            let root = uf.find(0);
            assert!((0..tris.len()).all(|i| uf.find(i) == root), "N = {n}");
        }
    }
}
