//! Hyperbolic geometry of the unit disk: Möbius maps, geodesic segments
//! and angles.

use std::f64::consts::PI;

use crate::linalg::{Complex, ONE, ZERO};

/// Hyperbolic distance in the unit disk (curvature −1).
pub fn disk_distance(z: Complex, w: Complex) -> f64 {
    let r = (z - w).norm() / (ONE - z * w.conj()).norm();
    2.0 * r.min(1.0).atanh()
}

/// The disk automorphism `z ↦ (z − v)/(1 − v̄ z)` sending `v` to 0.
pub fn mobius_to_origin(v: Complex) -> Mobius {
    Mobius::new(ONE, -v, -v.conj(), ONE)
}

/// The point at hyperbolic distance `dist` from `v` on the geodesic towards
/// `toward`.
pub fn point_along(v: Complex, toward: Complex, dist: f64) -> Complex {
    let t = mobius_to_origin(v);
    let d = t.apply(toward);
    let u = d / d.norm() * (dist / 2.0).tanh();
    t.inverse().apply(u)
}

/// A Möbius transformation `z ↦ (a z + b)/(c z + d)`, used for the action
/// of a geodesic's stabiliser on its disk chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mobius {
    pub m: [[Complex; 2]; 2],
}

impl Mobius {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        Mobius { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn apply(&self, z: Complex) -> Complex {
        let [[a, b], [c, d]] = self.m;
        (a * z + b) / (c * z + d)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = other.m;
        Mobius::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    pub fn inverse(&self) -> Mobius {
        let [[a, b], [c, d]] = self.m;
        Mobius::new(d, -b, -c, a)
    }

    pub fn det(&self) -> Complex {
        let [[a, b], [c, d]] = self.m;
        a * d - b * c
    }

    pub fn trace(&self) -> Complex {
        self.m[0][0] + self.m[1][1]
    }

    /// `|tr|²/|det|`: below 4 elliptic, 4 parabolic, above 4 hyperbolic.
    pub fn trace_invariant(&self) -> f64 {
        self.trace().norm_sqr() / self.det().norm()
    }

    fn norm(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_projective_identity(&self, tol: f64) -> bool {
        let lambda = self.trace() / 2.0;
        let [[a, b], [c, d]] = self.m;
        let off = ((a - lambda).norm_sqr() + b.norm_sqr() + c.norm_sqr() + (d - lambda).norm_sqr()).sqrt();
        off <= tol * self.norm()
    }

    pub fn pow(&self, mut n: u64) -> Mobius {
        let mut result = Mobius::identity();
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                result = result.compose(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base);
            }
        }
        result
    }

    /// Least `n ≤ max_order` with `selfⁿ` scalar, by repeated multiplication.
    pub fn order_by_powering(&self, max_order: u32, tol: f64) -> Option<u32> {
        let mut x = *self;
        let unit = self.det().sqrt();
        for n in 1..=max_order {
            if !x.m.iter().flatten().all(|z| z.is_finite()) {
                return None;
            }
            if x.is_projective_identity(tol) {
                return Some(n);
            }
            x = x.compose(self);
            // Keep the determinant at one to avoid drift in magnitude.
            x = Mobius { m: x.m.map(|r| r.map(|z| z / unit)) };
        }
        None
    }

    /// Order from the rationality of the argument of the eigenvalue ratio,
    /// verified by powering.
    pub fn order_by_eigenvalues(&self, max_order: u32, tol: f64) -> Option<u32> {
        let tr = self.trace();
        let disc = (tr * tr - self.det() * 4.0).sqrt();
        let l1 = (tr + disc) / 2.0;
        let l2 = (tr - disc) / 2.0;
        let ratio = l1 / l2;
        if (ratio.norm() - 1.0).abs() > 1e-7 {
            return None;
        }
        let turns = ratio.arg() / (2.0 * PI);
        let n = crate::isometry::rational_denominator(turns, 3 * max_order as u64)?;
        if n > max_order as u64 {
            return None;
        }
        self.pow(n).is_projective_identity(tol).then_some(n as u32)
    }

    /// Fixed point strictly inside the unit disk, if any.
    pub fn fixed_point_in_disk(&self) -> Option<Complex> {
        let [[a, b], [c, d]] = self.m;
        let scale = self.norm();
        let candidates: Vec<Complex> = if c.norm() <= 1e-14 * scale {
            let den = d - a;
            if den.norm() <= 1e-14 * scale {
                return None;
            }
            vec![b / den]
        } else {
            // c z² + (d − a) z − b = 0
            let p = d - a;
            let disc = (p * p + c * b * 4.0).sqrt();
            vec![(-p + disc) / (c * 2.0), (-p - disc) / (c * 2.0)]
        };
        candidates
            .into_iter()
            .filter(|z| z.is_finite() && z.norm() < 1.0 - 1e-12)
            .min_by(|x, y| x.norm().total_cmp(&y.norm()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SegmentShape {
    /// Arc of the circle with this centre and radius, orthogonal to the
    /// unit circle.
    Circle { center: Complex, radius: f64 },
    /// Segment of a line through the origin.
    Diameter,
}

/// A geodesic segment of the disk between two points (either may lie on
/// the unit circle).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskSegment {
    pub start: Complex,
    pub end: Complex,
    pub shape: SegmentShape,
}

/// Collinearity threshold for treating a segment as part of a diameter.
const DIAMETER_TOL: f64 = 1e-10;

impl DiskSegment {
    pub fn through(start: Complex, end: Complex) -> DiskSegment {
        // Centre c of a circle orthogonal to the unit circle through z
        // satisfies Re(c z̄) = (1 + |z|²)/2.
        let det = start.re * end.im - start.im * end.re;
        if det.abs() <= DIAMETER_TOL {
            return DiskSegment { start, end, shape: SegmentShape::Diameter };
        }
        let kz = (1.0 + start.norm_sqr()) / 2.0;
        let kw = (1.0 + end.norm_sqr()) / 2.0;
        let cx = (kz * end.im - start.im * kw) / det;
        let cy = (start.re * kw - kz * end.re) / det;
        let center = Complex::new(cx, cy);
        let radius = (center.norm_sqr() - 1.0).max(0.0).sqrt();
        DiskSegment { start, end, shape: SegmentShape::Circle { center, radius } }
    }

    /// Unit tangent at `from` pointing along the segment towards `to`.
    fn tangent(&self, from: Complex, to: Complex) -> Complex {
        let t = match self.shape {
            SegmentShape::Diameter => to - from,
            SegmentShape::Circle { center, .. } => {
                let t = (from - center) * Complex::new(0.0, 1.0);
                let chord = to - from;
                if (t.conj() * chord).re >= 0.0 {
                    t
                } else {
                    -t
                }
            }
        };
        t / t.norm()
    }

    pub fn tangent_at_start(&self) -> Complex {
        self.tangent(self.start, self.end)
    }

    pub fn tangent_at_end(&self) -> Complex {
        self.tangent(self.end, self.start)
    }

    /// Signed position of `q` relative to the complete geodesic carrying the
    /// segment: the sign tells the side, the magnitude is a Euclidean
    /// distance-like quantity.
    pub fn side_value(&self, q: Complex) -> f64 {
        match self.shape {
            SegmentShape::Diameter => {
                let d = self.end - self.start;
                (d.conj() * (q - self.start)).im / d.norm()
            }
            SegmentShape::Circle { center, radius } => (q - center).norm() - radius,
        }
    }

    /// Hyperbolic midpoint of the segment (for interior endpoints), or a
    /// point on the segment for ideal endpoints.
    pub fn midpoint(&self) -> Complex {
        let t = mobius_to_origin(self.start);
        let e = t.apply(self.end);
        let r = e.norm();
        let mid = if r >= 1.0 - 1e-12 {
            e * 0.5
        } else {
            let half = 0.5 * 2.0 * r.atanh();
            e / r * (half / 2.0).tanh()
        };
        t.inverse().apply(mid)
    }
}

/// Interior angle at `v` of a polygon with neighbours `prev` and `next`,
/// measured from the disk-arc tangents. `ccw` is the polygon orientation.
pub fn arc_angle(v: Complex, prev: Complex, next: Complex, ccw: bool) -> f64 {
    let tp = DiskSegment::through(v, prev).tangent_at_start();
    let tn = DiskSegment::through(v, next).tangent_at_start();
    let a = if ccw { (tp / tn).arg() } else { (tn / tp).arg() };
    a.rem_euclid(2.0 * PI)
}

/// Klein-model image of a disk point.
pub fn to_klein(z: Complex) -> Complex {
    z * (2.0 / (1.0 + z.norm_sqr()))
}

/// Disk point of a Klein-model point.
pub fn from_klein(k: Complex) -> Complex {
    k / (1.0 + (1.0 - k.norm_sqr()).max(0.0).sqrt())
}
