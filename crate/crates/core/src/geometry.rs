//! Exact points and geodesics of the upper half-plane.
//!
//! Every point the crate ever needs (images of ζ₃, ζ₆, i and of cusps under
//! SL₂(Z)) has a rational real part and a rational *squared* imaginary part,
//! and that shape is preserved by Möbius maps. Geodesics through such points
//! have rational ideal endpoints, hence rational centers and radii.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::words::{Cusp, Mat2};

pub type Q = Ratio<i128>;

fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

/// x + i·√y2 with x, y2 rational and y2 ≥ 0 (y2 = 0 on the real axis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    pub x: Q,
    pub y2: Q,
}

impl HPoint {
    /// e^{2πi/3} = −1/2 + i√3/2, the lower-left corner of the standard triangle.
    pub fn zeta3() -> Self {
        HPoint { x: Q::new(-1, 2), y2: Q::new(3, 4) }
    }

    /// e^{πi/3} = 1/2 + i√3/2, the lower-right corner.
    pub fn zeta6() -> Self {
        HPoint { x: Q::new(1, 2), y2: Q::new(3, 4) }
    }

    pub fn i() -> Self {
        HPoint { x: q(0), y2: q(1) }
    }

    pub fn real(x: Q) -> Self {
        HPoint { x, y2: q(0) }
    }

    pub fn y(&self) -> f64 {
        to_f64(self.y2).sqrt()
    }
}

/// A point of H ∪ P¹(R) restricted to the shapes above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    At(HPoint),
}

impl Point {
    pub fn from_cusp(c: Cusp) -> Self {
        if c.is_infinity() {
            Point::Infinity
        } else {
            Point::At(HPoint::real(Q::new(c.num() as i128, c.den() as i128)))
        }
    }
}

/// Möbius image of a point.
pub fn act(g: &Mat2, p: Point) -> Point {
    let (a, b, c, d) = (q(g.a), q(g.b), q(g.c), q(g.d));
    match p {
        Point::Infinity => {
            if g.c == 0 {
                Point::Infinity
            } else {
                Point::At(HPoint::real(a / c))
            }
        }
        Point::At(HPoint { x, y2 }) => {
            let denom = (c * x + d) * (c * x + d) + c * c * y2;
            if denom == q(0) {
                return Point::Infinity;
            }
            let re = (a * c * (x * x + y2) + (a * d + b * c) * x + b * d) / denom;
            Point::At(HPoint { x: re, y2: y2 / (denom * denom) })
        }
    }
}

/// The full geodesic carrying an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Carrier {
    Vertical { x: Q },
    Semicircle { center: Q, radius: Q },
}

impl Carrier {
    /// The geodesic with the two given ideal endpoints.
    pub fn through_ideal(e1: Point, e2: Point) -> Self {
        match (e1, e2) {
            (Point::Infinity, Point::At(p)) | (Point::At(p), Point::Infinity) => Carrier::Vertical { x: p.x },
            (Point::At(p), Point::At(r)) => {
                let (lo, hi) = if p.x < r.x { (p.x, r.x) } else { (r.x, p.x) };
                Carrier::Semicircle { center: (lo + hi) / q(2), radius: (hi - lo) / q(2) }
            }
            (Point::Infinity, Point::Infinity) => panic!("a geodesic needs two distinct ideal endpoints"),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match (self, p) {
            (Carrier::Vertical { .. }, Point::Infinity) => true,
            (Carrier::Semicircle { .. }, Point::Infinity) => false,
            (Carrier::Vertical { x }, Point::At(h)) => h.x == *x,
            (Carrier::Semicircle { center, radius }, Point::At(h)) => {
                (h.x - center) * (h.x - center) + h.y2 == radius * radius
            }
        }
    }
}

/// A geodesic arc between two points of H̄ (one of them possibly ∞).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Geodesic {
    pub carrier: Carrier,
    pub from: Point,
    pub to: Point,
}

impl Geodesic {
    /// Same arc regardless of orientation.
    pub fn same_set(&self, other: &Geodesic) -> bool {
        self.carrier == other.carrier
            && ((self.from == other.from && self.to == other.to) || (self.from == other.to && self.to == other.from))
    }
}

/// Images under g of the three edges of the closed standard triangle, in the
/// order L (Re z = 1/2), R (Re z = −1/2), B (the unit circle).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleImage {
    pub cusp: Point,
    pub zeta3: Point,
    pub zeta6: Point,
    pub mid: Point,
    pub l: Geodesic,
    pub r: Geodesic,
    pub b: Geodesic,
}

pub fn triangle_image(g: &Mat2) -> TriangleImage {
    let half = Point::At(HPoint::real(Q::new(1, 2)));
    let minus_half = Point::At(HPoint::real(Q::new(-1, 2)));
    let one = Point::At(HPoint::real(q(1)));
    let minus_one = Point::At(HPoint::real(q(-1)));
    let img = |p: Point| act(g, p);

    let cusp = img(Point::Infinity);
    let zeta3 = img(Point::At(HPoint::zeta3()));
    let zeta6 = img(Point::At(HPoint::zeta6()));
    let mid = img(Point::At(HPoint::i()));
    TriangleImage {
        cusp,
        zeta3,
        zeta6,
        mid,
        l: Geodesic { carrier: Carrier::through_ideal(img(half), cusp), from: cusp, to: zeta6 },
        r: Geodesic { carrier: Carrier::through_ideal(img(minus_half), cusp), from: cusp, to: zeta3 },
        b: Geodesic { carrier: Carrier::through_ideal(img(minus_one), img(one)), from: zeta3, to: zeta6 },
    }
}

pub fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

impl Serialize for HPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HPoint", 2)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y2", &self.y2.to_string())?;
        st.end()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "oo"),
            Point::At(h) => write!(f, "{} + i*sqrt({})", h.x, h.y2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::GroupWord;

    #[test]
    fn identity_triangle() {
        let t = triangle_image(&Mat2::IDENTITY);
        assert_eq!(t.cusp, Point::Infinity);
        assert_eq!(t.l.carrier, Carrier::Vertical { x: Q::new(1, 2) });
        assert_eq!(t.r.carrier, Carrier::Vertical { x: Q::new(-1, 2) });
        assert_eq!(t.b.carrier, Carrier::Semicircle { center: q(0), radius: q(1) });
    }

    #[test]
    fn s_fixes_the_base() {
        let id = triangle_image(&Mat2::IDENTITY);
        let s = triangle_image(&Mat2::S);
        assert!(s.b.same_set(&id.b));
        assert_eq!(s.zeta3, id.zeta6);
        assert_eq!(s.mid, id.mid);
    }

    #[test]
    fn t_maps_r_to_l() {
        let id = triangle_image(&Mat2::IDENTITY);
        let t = triangle_image(&Mat2::T);
        assert!(t.r.same_set(&id.l));
    }

    #[test]
    fn hanging_triangles_touch_minus_one_over_j() {
        for j in [-6i64, -3, 2, 5] {
            let t = triangle_image(&GroupWord::new(vec![j, 1]).to_matrix());
            assert_eq!(t.cusp, Point::At(HPoint::real(Q::new(-1, j as i128))));
        }
    }

    #[test]
    fn vertices_lie_on_their_carriers() {
        for e in [vec![3], vec![-2, 1], vec![4, 2], vec![1], vec![0, 0], vec![5, 3, -2]] {
            let t = triangle_image(&GroupWord::new(e).to_matrix());
            for g in [t.l, t.r, t.b] {
                assert!(g.carrier.contains(&g.from) && g.carrier.contains(&g.to));
            }
            assert!(t.b.carrier.contains(&t.mid));
        }
    }
}
