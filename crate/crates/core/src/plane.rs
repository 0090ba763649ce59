//! Points, complex geodesics and the unit-disk chart of a complex geodesic.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Complex, HermitianForm, Vector3, ZERO};

mod disk;
pub use disk::{
    arc_angle, disk_distance, from_klein, mobius_to_origin, point_along, to_klein, DiskSegment, Mobius, SegmentShape,
};

/// Sign class of a vector under the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    Negative,
    Null,
    Positive,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PointClass::Negative => "Negative",
            PointClass::Null => "Null",
            PointClass::Positive => "Positive",
        };
        f.write_str(s)
    }
}

/// Classify a nonzero vector by the sign of `⟨z,z⟩`, treating values within
/// the form's zero threshold as null.
pub fn classify_vector(z: &Vector3, form: &HermitianForm) -> Result<PointClass> {
    if z.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let x = form.normalized_norm(z);
    Ok(if x.abs() <= form.tol().zero {
        PointClass::Null
    } else if x < 0.0 {
        PointClass::Negative
    } else {
        PointClass::Positive
    })
}

/// A point of complex projective space, remembered through one lift.
#[derive(Clone, Copy, Debug)]
pub struct ProjectivePoint {
    pub lift: Vector3,
    pub class: PointClass,
}

impl ProjectivePoint {
    pub fn new(lift: Vector3, form: &HermitianForm) -> Result<Self> {
        let class = classify_vector(&lift, form)?;
        Ok(ProjectivePoint { lift, class })
    }

    /// Projective equality: the lifts are proportional.
    pub fn same_as(&self, other: &ProjectivePoint, tol: f64) -> bool {
        self.lift.proportional(&other.lift, tol)
    }
}

/// Bergman distance between two interior points,
/// `cosh²(ρ/2) = ⟨z,w⟩⟨w,z⟩ / (⟨z,z⟩⟨w,w⟩)`.
///
/// Evaluated through the component of `w` orthogonal to `z`, which avoids
/// the cancellation of `cosh² − 1` for nearby points.
pub fn bergman_distance(z: &ProjectivePoint, w: &ProjectivePoint, form: &HermitianForm) -> Result<f64> {
    if z.class != PointClass::Negative || w.class != PointClass::Negative {
        return Err(Error::NotInteriorPoint);
    }
    let zz = form.norm_sq(&z.lift);
    let ww = form.norm_sq(&w.lift);
    let zn = z.lift.scale(Complex::from(1.0 / (-zz).sqrt()));
    let wn = w.lift.scale(Complex::from(1.0 / (-ww).sqrt()));
    // With ⟨zn,zn⟩ = ⟨wn,wn⟩ = −1: sinh²(ρ/2) = ⟨w⊥,w⊥⟩.
    let perp = wn + zn.scale(form.inner(&wn, &zn));
    let s2 = form.norm_sq(&perp).max(0.0);
    Ok(2.0 * s2.sqrt().asinh())
}

/// A complex geodesic, given by a positive polar vector.
#[derive(Clone, Copy, Debug)]
pub struct ComplexGeodesic {
    pub polar: Vector3,
}

impl ComplexGeodesic {
    pub fn new(polar: Vector3, form: &HermitianForm) -> Result<Self> {
        match classify_vector(&polar, form) {
            Ok(PointClass::Positive) => Ok(ComplexGeodesic { polar }),
            Err(Error::ZeroVector) => Err(Error::ZeroVector),
            _ => Err(Error::NonPositivePolar),
        }
    }

    /// Normalized `|⟨z,n⟩|`; zero iff `z` lies on the geodesic.
    pub fn defect(&self, z: &Vector3, form: &HermitianForm) -> f64 {
        form.inner(z, &self.polar).norm() / (form.scale() * z.norm() * self.polar.norm())
    }

    pub fn contains(&self, z: &Vector3, form: &HermitianForm) -> bool {
        self.defect(z, form) <= form.tol().zero
    }
}

/// Mutual position of two distinct complex geodesics.
#[derive(Clone, Copy, Debug)]
pub enum GeodesicRelation {
    Intersecting(ProjectivePoint),
    Asymptotic(ProjectivePoint),
    /// Carries the polar of the common perpendicular.
    Ultraparallel(Vector3),
}

pub fn geodesic_relation(a: &ComplexGeodesic, b: &ComplexGeodesic, form: &HermitianForm) -> Result<GeodesicRelation> {
    if a.polar.proportional(&b.polar, form.tol().algebraic) {
        return Err(Error::SameGeodesic);
    }
    let z = form.box_product(&a.polar, &b.polar);
    let p = ProjectivePoint::new(z, form)?;
    Ok(match p.class {
        PointClass::Negative => GeodesicRelation::Intersecting(p),
        PointClass::Null => GeodesicRelation::Asymptotic(p),
        PointClass::Positive => GeodesicRelation::Ultraparallel(z),
    })
}

/// Identification of a complex geodesic with the unit disk.
///
/// A lift `a·pos + b·neg` of a point on the geodesic has disk coordinate
/// `a/b`.
#[derive(Clone, Copy, Debug)]
pub struct DiskChart {
    pub geodesic: ComplexGeodesic,
    pub basis_neg: Vector3,
    pub basis_pos: Vector3,
    pub form: HermitianForm,
}

fn normalize_signed(v: Vector3, form: &HermitianForm) -> Vector3 {
    let n = form.norm_sq(&v).abs().sqrt();
    v.scale(Complex::from(1.0 / n)).phase_fixed()
}

/// Eigen-decomposition of a 2×2 Hermitian matrix `[[p, q], [q̄, r]]`:
/// returns (λ₊, x₊, λ₋, x₋).
fn hermitian2(p: f64, q: Complex, r: f64) -> (f64, [Complex; 2], f64, [Complex; 2]) {
    let mean = (p + r) / 2.0;
    let rad = (((p - r) / 2.0).powi(2) + q.norm_sqr()).sqrt();
    let vec = |lambda: f64| {
        let a = [q, Complex::from(lambda - p)];
        let b = [Complex::from(lambda - r), q.conj()];
        let na = a[0].norm_sqr() + a[1].norm_sqr();
        let nb = b[0].norm_sqr() + b[1].norm_sqr();
        if na >= nb && na > 0.0 {
            a
        } else if nb > 0.0 {
            b
        } else if p >= r {
            [Complex::from(1.0), ZERO]
        } else {
            [ZERO, Complex::from(1.0)]
        }
    };
    let (lp, lm) = (mean + rad, mean - rad);
    let xp = vec(lp);
    let mut xm = vec(lm);
    if rad == 0.0 {
        xm = [-xp[1].conj(), xp[0].conj()];
    }
    (lp, xp, lm, xm)
}

/// The default chart of a geodesic: the first two standard basis vectors
/// whose projections onto the polar's complement are independent, turned
/// into an orthonormal pair by diagonalizing their Gram matrix, with phases
/// fixed so the first non-negligible component is positive real.
pub fn disk_chart(l: &ComplexGeodesic, form: &HermitianForm) -> Result<DiskChart> {
    let n = l.polar;
    let nn = form.norm_sq(&n);
    if nn <= 0.0 {
        return Err(Error::NonPositivePolar);
    }
    let proj = |k: usize| {
        let e = Vector3::basis(k);
        e - n.scale(form.inner(&e, &n) / nn)
    };
    let candidates: Vec<Vector3> =
        (0..3).filter(|&k| !Vector3::basis(k).proportional(&n, 1e-9)).map(proj).collect();
    let mut pair = None;
    'outer: for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            if !candidates[i].proportional(&candidates[j], 1e-6) {
                pair = Some((candidates[i], candidates[j]));
                break 'outer;
            }
        }
    }
    let (fa, fb) = pair.ok_or(Error::DegenerateForm)?;
    // Gram matrix G_ij = ⟨f_j, f_i⟩.
    let g00 = form.norm_sq(&fa);
    let g11 = form.norm_sq(&fb);
    let g01 = form.inner(&fb, &fa);
    let (lp, xp, lm, xm) = hermitian2(g00, g01, g11);
    let scale = g00.abs().max(g11.abs()).max(g01.norm());
    if lp <= form.tol().zero * scale || lm >= -form.tol().zero * scale {
        return Err(Error::DegenerateForm);
    }
    let pos = normalize_signed(fa.scale(xp[0]) + fb.scale(xp[1]), form);
    let neg = normalize_signed(fa.scale(xm[0]) + fb.scale(xm[1]), form);
    Ok(DiskChart { geodesic: *l, basis_neg: neg, basis_pos: pos, form: *form })
}

impl DiskChart {
    /// A chart centred at a given interior point of the geodesic.
    pub fn centered_at(l: &ComplexGeodesic, center: &ProjectivePoint, form: &HermitianForm) -> Result<DiskChart> {
        if center.class != PointClass::Negative {
            return Err(Error::NotInteriorPoint);
        }
        if !l.contains(&center.lift, form) {
            return Err(Error::NotOnGeodesic { defect: l.defect(&center.lift, form) });
        }
        let neg = normalize_signed(center.lift, form);
        let pos = normalize_signed(form.box_product(&l.polar, &neg), form);
        Ok(DiskChart { geodesic: *l, basis_neg: neg, basis_pos: pos, form: *form })
    }

    /// A chart from explicit basis vectors, validated against the chart
    /// invariants.
    pub fn from_basis(l: &ComplexGeodesic, neg: Vector3, pos: Vector3, form: &HermitianForm) -> Result<DiskChart> {
        let tol = 1e-8;
        let ok = (form.norm_sq(&neg) + 1.0).abs() <= tol
            && (form.norm_sq(&pos) - 1.0).abs() <= tol
            && form.inner(&neg, &pos).norm() <= tol
            && l.contains(&neg, form)
            && l.contains(&pos, form);
        if !ok {
            return Err(Error::DegenerateForm);
        }
        Ok(DiskChart { geodesic: *l, basis_neg: neg, basis_pos: pos, form: *form })
    }

    /// The same chart rotated by `e^{iθ}` in the disk.
    pub fn rotated(&self, theta: f64) -> DiskChart {
        DiskChart { basis_pos: self.basis_pos.scale(crate::linalg::cis(-theta)), ..*self }
    }

    /// Disk coordinates `(a, b)` of a vector: `a = ⟨z,pos⟩`, `b = −⟨z,neg⟩`.
    pub fn coordinates(&self, z: &Vector3) -> (Complex, Complex) {
        (self.form.inner(z, &self.basis_pos), -self.form.inner(z, &self.basis_neg))
    }

    /// Lift of a disk coordinate back to `ℂ³`.
    pub fn lift(&self, w: Complex) -> Vector3 {
        self.basis_pos.scale(w) + self.basis_neg
    }

    /// Lift of a disk coordinate as a projective point.
    pub fn point(&self, w: Complex) -> Result<ProjectivePoint> {
        ProjectivePoint::new(self.lift(w), &self.form)
    }
}

/// Disk coordinate of a point of the geodesic. Null points are clamped to
/// the unit circle.
pub fn chart_map(chart: &DiskChart, z: &ProjectivePoint) -> Result<Complex> {
    let defect = chart.geodesic.defect(&z.lift, &chart.form);
    if defect > chart.form.tol().zero {
        return Err(Error::NotOnGeodesic { defect });
    }
    if z.class == PointClass::Positive {
        return Err(Error::NotInteriorPoint);
    }
    let (a, b) = chart.coordinates(&z.lift);
    let w = a / b;
    if !w.is_finite() {
        return Err(Error::NotInteriorPoint);
    }
    Ok(match z.class {
        PointClass::Null => w / w.norm(),
        _ => w,
    })
}

/// Angle opposite side `c` in a hyperbolic triangle with adjacent sides
/// `a`, `b` (curvature −1).
pub fn triangle_angle(a: f64, b: f64, c: f64) -> Result<f64> {
    if a <= 1e-12 || b <= 1e-12 {
        return Err(Error::DegenerateTriangle);
    }
    let cosine = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
    if !(-1.0 - 1e-9..=1.0 + 1e-9).contains(&cosine) {
        return Err(Error::NotATriangle { cosine });
    }
    Ok(cosine.clamp(-1.0, 1.0).acos())
}
