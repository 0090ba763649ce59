//! Fundamental polygons in the disk chart of the stabilised mirror.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::groups::TriangleGroup;
use crate::linalg::Complex;
use crate::plane::{
    arc_angle, bergman_distance, chart_map, classify_vector, disk_chart, point_along, to_klein, triangle_angle,
    ComplexGeodesic, DiskChart, DiskSegment, PointClass, ProjectivePoint,
};

use super::case::{CaseData, CaseId, VertexSpec};

/// How a vertex was resolved from its specification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexResolution {
    /// `w = n_base ⊠ (word · n_k)` is negative.
    Direct,
    /// `w` is positive; the vertex is `n_base ⊠ w`.
    Reboxed,
    /// `w` is null: an ideal vertex.
    Ideal,
    /// Fixed point of an element on the base geodesic.
    FixedPoint,
}

impl VertexResolution {
    pub fn tag(&self) -> &'static str {
        match self {
            VertexResolution::Direct => "direct",
            VertexResolution::Reboxed => "reboxed",
            VertexResolution::Ideal => "ideal",
            VertexResolution::FixedPoint => "fixed-point",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PolygonVertex {
    pub label: usize,
    pub point: ProjectivePoint,
    /// Disk coordinate in the polygon's chart.
    pub z: Complex,
    pub ideal: bool,
    pub resolution: VertexResolution,
}

#[derive(Clone, Copy, Debug)]
pub struct PolygonSide {
    /// 1-based side label.
    pub label: usize,
    pub start: usize,
    pub end: usize,
    pub segment: DiskSegment,
}

/// Interior angle at a vertex, by two routes.
#[derive(Clone, Copy, Debug)]
pub struct VertexAngle {
    pub label: usize,
    /// From the tangents of the disk arcs.
    pub arc: f64,
    /// From the cosine rule on Bergman distances; `None` at ideal vertices.
    pub cosine: Option<f64>,
}

impl VertexAngle {
    /// Difference of the two routes. The cosine rule only sees angles in
    /// `[0, π]`, so a reflex arc angle is compared through `2π − θ`.
    pub fn discrepancy(&self) -> Option<f64> {
        let folded = if self.arc > PI { 2.0 * PI - self.arc } else { self.arc };
        self.cosine.map(|c| (c - folded).abs())
    }
}

#[derive(Clone, Debug)]
pub struct FuchsianPolygon {
    pub case: Option<CaseId>,
    pub base: ComplexGeodesic,
    pub chart: DiskChart,
    /// Indexed by label.
    pub vertices: Vec<PolygonVertex>,
    /// Vertex labels in boundary order.
    pub boundary: Vec<usize>,
    /// Indexed by label − 1.
    pub sides: Vec<PolygonSide>,
    /// Boundary order runs counter-clockwise in the chart.
    pub ccw: bool,
}

/// Width of the band above the zero threshold in which a vertex's class is
/// considered undecided.
const CLASS_BAND: f64 = 10.0;

fn resolve_lift(g: &TriangleGroup, base: &ComplexGeodesic, label: usize, word: &str, polar: usize) -> Result<(ProjectivePoint, VertexResolution)> {
    let form = g.form();
    let zero = form.tol().zero;
    let image = g.eval(word)?.apply(&g.polar(polar));
    let check = |w: &crate::linalg::Vector3| -> Result<PointClass> {
        let x = form.normalized_norm(w);
        if x.abs() > zero && x.abs() < CLASS_BAND * zero {
            return Err(Error::UnresolvedVertexClass { vertex: label, margin: x });
        }
        classify_vector(w, form)
    };
    let w = form.box_product(&base.polar, &image);
    match check(&w)? {
        PointClass::Negative => Ok((ProjectivePoint::new(w, form)?, VertexResolution::Direct)),
        PointClass::Null => Ok((ProjectivePoint::new(w, form)?, VertexResolution::Ideal)),
        PointClass::Positive => {
            let w2 = form.box_product(&base.polar, &w);
            match check(&w2)? {
                PointClass::Negative => Ok((ProjectivePoint::new(w2, form)?, VertexResolution::Reboxed)),
                class => Err(Error::UnresolvedVertexClass { vertex: label, margin: if class == PointClass::Null { 0.0 } else { 1.0 } }),
            }
        }
    }
}

fn resolve_fixed(g: &TriangleGroup, chart: &DiskChart, word: &str) -> Result<ProjectivePoint> {
    let m = g.eval(word)?.restrict(chart)?;
    let z = m.fixed_point_in_disk().ok_or(Error::NoInteriorFixedPoint)?;
    chart.point(z)
}

/// Build the case's polygon in the default chart of its base geodesic.
pub fn build_polygon(g: &TriangleGroup, case: CaseId) -> Result<FuchsianPolygon> {
    let data = case.family.data();
    let base = ComplexGeodesic::new(g.polar(data.base), g.form())?;
    let chart = disk_chart(&base, g.form())?;
    let mut poly = build_polygon_in_chart(g, &data, &chart)?;
    poly.case = Some(case);
    Ok(poly)
}

/// Build a polygon from explicit case data in a given chart of the base
/// geodesic.
pub fn build_polygon_in_chart(g: &TriangleGroup, data: &CaseData, chart: &DiskChart) -> Result<FuchsianPolygon> {
    let form = g.form();
    let base = chart.geodesic;
    let mut vertices = Vec::with_capacity(data.vertices.len());
    for (label, spec) in data.vertices.iter().enumerate() {
        let (point, resolution) = match spec {
            VertexSpec::Lift { word, polar } => resolve_lift(g, &base, label, word, *polar)?,
            VertexSpec::FixedPoint { word } => (resolve_fixed(g, chart, word)?, VertexResolution::FixedPoint),
        };
        if !base.contains(&point.lift, form) {
            return Err(Error::VertexOffGeodesic { vertex: label });
        }
        let z = chart_map(chart, &point)?;
        vertices.push(PolygonVertex { label, point, z, ideal: point.class == PointClass::Null, resolution });
    }
    let sides = data
        .sides
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| PolygonSide {
            label: i + 1,
            start: a,
            end: b,
            segment: DiskSegment::through(vertices[a].z, vertices[b].z),
        })
        .collect();
    let mut poly =
        FuchsianPolygon { case: None, base, chart: *chart, vertices, boundary: data.boundary.clone(), sides, ccw: true };
    poly.ccw = poly.check_simple()?;
    Ok(poly)
}

fn cross(a: Complex, b: Complex) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Proper or touching intersection of two closed straight segments.
fn segments_meet(p1: Complex, p2: Complex, q1: Complex, q2: Complex, eps: f64) -> bool {
    let d1 = cross(p2 - p1, q1 - p1);
    let d2 = cross(p2 - p1, q2 - p1);
    let d3 = cross(q2 - q1, p1 - q1);
    let d4 = cross(q2 - q1, p2 - q1);
    if ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)) {
        return true;
    }
    let on = |a: Complex, b: Complex, c: Complex, d: f64| {
        d.abs() <= eps
            && c.re >= a.re.min(b.re) - eps
            && c.re <= a.re.max(b.re) + eps
            && c.im >= a.im.min(b.im) - eps
            && c.im <= a.im.max(b.im) + eps
    };
    on(p1, p2, q1, d1) || on(p1, p2, q2, d2) || on(q1, q2, p1, d3) || on(q1, q2, p2, d4)
}

impl FuchsianPolygon {
    pub fn vertex(&self, label: usize) -> &PolygonVertex {
        &self.vertices[label]
    }

    pub fn side(&self, label: usize) -> &PolygonSide {
        &self.sides[label - 1]
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Disk coordinates in boundary order.
    pub fn boundary_points(&self) -> Vec<Complex> {
        self.boundary.iter().map(|&l| self.vertices[l].z).collect()
    }

    /// Klein-model coordinates in boundary order. Geodesic sides are
    /// straight there, so simplicity and containment are planar questions.
    pub fn klein_points(&self) -> Vec<Complex> {
        self.boundary_points().into_iter().map(to_klein).collect()
    }

    /// Neighbours of the vertex at boundary position `i`.
    fn neighbours(&self, i: usize) -> (usize, usize) {
        let n = self.boundary.len();
        (self.boundary[(i + n - 1) % n], self.boundary[(i + 1) % n])
    }

    /// Checks that the sides form one closed simple loop with winding number
    /// ±1 and that every side joins boundary neighbours. Returns the
    /// orientation (true for counter-clockwise).
    fn check_simple(&self) -> Result<bool> {
        let n = self.boundary.len();
        let k = self.klein_points();
        for i in 0..n {
            let (a, b) = (k[i], k[(i + 1) % n]);
            if (a - b).norm() <= 1e-9 {
                return Err(Error::NonSimplePolygon(format!(
                    "x{} and x{} coincide",
                    self.boundary[i],
                    self.boundary[(i + 1) % n]
                )));
            }
            let (u, v) = (self.boundary[i], self.boundary[(i + 1) % n]);
            if !self.sides.iter().any(|s| (s.start, s.end) == (u, v) || (s.start, s.end) == (v, u)) {
                return Err(Error::NonSimplePolygon(format!("no side joins x{u} and x{v}")));
            }
        }
        if self.sides.len() != n {
            return Err(Error::NonSimplePolygon("side count differs from vertex count".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (p1, p2) = (k[i], k[(i + 1) % n]);
                let (q1, q2) = (k[j], k[(j + 1) % n]);
                if adjacent {
                    // Adjacent sides may only share their common endpoint.
                    let (shared, a, b) = if j == i + 1 { (p2, p1, q2) } else { (p1, p2, q1) };
                    let (da, db) = (a - shared, b - shared);
                    if cross(da, db).abs() <= 1e-12 * da.norm() * db.norm() && (da.conj() * db).re > 0.0 {
                        return Err(Error::NonSimplePolygon(format!("sides at x{} fold back", self.boundary[(i + 1) % n])));
                    }
                } else if segments_meet(p1, p2, q1, q2, 1e-12) {
                    return Err(Error::NonSimplePolygon(format!(
                        "side x{}x{} meets side x{}x{}",
                        self.boundary[i],
                        self.boundary[(i + 1) % n],
                        self.boundary[j],
                        self.boundary[(j + 1) % n]
                    )));
                }
            }
        }
        let mut turning = 0.0;
        for i in 0..n {
            let d0 = k[(i + 1) % n] - k[i];
            let d1 = k[(i + 2) % n] - k[(i + 1) % n];
            turning += (d1 / d0).arg();
        }
        let winding = turning / (2.0 * PI);
        if (winding.abs() - 1.0).abs() > 1e-6 {
            return Err(Error::NonSimplePolygon(format!("winding number {winding:.6}")));
        }
        Ok(winding > 0.0)
    }

    /// Whether a Klein-model point lies strictly inside the polygon.
    pub fn contains_klein(&self, q: Complex) -> bool {
        let k = self.klein_points();
        let n = k.len();
        let mut inside = false;
        for i in 0..n {
            let (a, b) = (k[i], k[(i + 1) % n]);
            if (a.im > q.im) != (b.im > q.im) {
                let x = a.re + (q.im - a.im) / (b.im - a.im) * (b.re - a.re);
                if q.re < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// A grid of interior sample points (disk coordinates) from an
    /// `n × n` lattice over the Klein-model bounding box.
    pub fn sample_grid(&self, n: usize) -> Vec<Complex> {
        let k = self.klein_points();
        let (mut lo, mut hi) = (k[0], k[0]);
        for q in &k {
            lo = Complex::new(lo.re.min(q.re), lo.im.min(q.im));
            hi = Complex::new(hi.re.max(q.re), hi.im.max(q.im));
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let s = (i as f64 + 0.5) / n as f64;
                let t = (j as f64 + 0.5) / n as f64;
                let q = Complex::new(lo.re + s * (hi.re - lo.re), lo.im + t * (hi.im - lo.im));
                if q.norm() < 1.0 && self.contains_klein(q) {
                    out.push(crate::plane::from_klein(q));
                }
            }
        }
        out
    }

    /// Interior angles at every vertex, in boundary order.
    pub fn angles(&self) -> Result<Vec<VertexAngle>> {
        let form = &self.chart.form;
        let mut out = Vec::with_capacity(self.boundary.len());
        for (i, &label) in self.boundary.iter().enumerate() {
            let v = &self.vertices[label];
            if v.ideal {
                out.push(VertexAngle { label, arc: 0.0, cosine: None });
                continue;
            }
            let (prev, next) = self.neighbours(i);
            let (zp, zn) = (self.vertices[prev].z, self.vertices[next].z);
            let arc = arc_angle(v.z, zp, zn, self.ccw);
            let a = self.chart.point(point_along(v.z, zp, 1.0))?;
            let b = self.chart.point(point_along(v.z, zn, 1.0))?;
            let da = bergman_distance(&v.point, &a, form)?;
            let db = bergman_distance(&v.point, &b, form)?;
            let dc = bergman_distance(&a, &b, form)?;
            let cosine = triangle_angle(da, db, dc)?;
            out.push(VertexAngle { label, arc, cosine: Some(cosine) });
        }
        Ok(out)
    }

    /// Sign of the polygon's interior relative to the geodesic through a
    /// side, as returned by [`DiskSegment::side_value`].
    pub fn inward_sign(&self, side: usize) -> f64 {
        let s = self.side(side);
        // Orient the side along the boundary traversal.
        let n = self.boundary.len();
        let pos = self.boundary.iter().position(|&l| l == s.start).unwrap_or(0);
        let forward = self.boundary[(pos + 1) % n] == s.end;
        let (from, to) = if forward { (s.segment.start, s.segment.end) } else { (s.segment.end, s.segment.start) };
        let seg = DiskSegment::through(from, to);
        let mid = seg.midpoint();
        let tangent = match seg.shape {
            crate::plane::SegmentShape::Diameter => to - from,
            crate::plane::SegmentShape::Circle { center, .. } => {
                let t = (mid - center) * Complex::new(0.0, 1.0);
                if (t.conj() * (to - from)).re >= 0.0 {
                    t
                } else {
                    -t
                }
            }
        };
        let left = tangent / tangent.norm() * Complex::new(0.0, 1.0);
        let inward = if self.ccw { left } else { -left };
        let probe = mid + inward * 1e-6;
        s.segment.side_value(probe).signum()
    }
}
