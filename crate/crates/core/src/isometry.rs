//! Elements of PU(2,1): complex reflections, projective equality,
//! classification, orders and fixed points.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{cis, cube_roots_of_unity, eigen3, Complex, EigenStructure, HermitianForm, Matrix3, Vector3};
use crate::plane::{classify_vector, ComplexGeodesic, DiskChart, Mobius, PointClass, ProjectivePoint};

pub const DEFAULT_MAX_ORDER: u32 = 2000;

/// A unit-determinant matrix preserving a Hermitian form.
#[derive(Clone, Copy, Debug)]
pub struct Isometry {
    matrix: Matrix3,
    form: HermitianForm,
}

impl Isometry {
    /// Wrap a matrix after checking `M̄ᵗHM = H` and `det M = 1`.
    pub fn new(matrix: Matrix3, form: &HermitianForm) -> Result<Self> {
        let iso = Isometry { matrix, form: *form };
        let defect = iso.invariant_defect();
        if defect.is_nan() || defect > form.tol().algebraic {
            return Err(Error::NotAnIsometry { defect });
        }
        Ok(iso)
    }

    /// Wrap a matrix known to be an isometry (products of isometries).
    pub(crate) fn trusted(matrix: Matrix3, form: &HermitianForm) -> Self {
        Isometry { matrix, form: *form }
    }

    pub fn identity(form: &HermitianForm) -> Self {
        Self::trusted(Matrix3::identity(), form)
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    pub fn form(&self) -> &HermitianForm {
        &self.form
    }

    /// Relative violation of the isometry invariants.
    pub fn invariant_defect(&self) -> f64 {
        let h = *self.form.matrix();
        let m = self.matrix;
        let n = m.norm().max(1.0);
        let unitary = (m.adjoint() * h * m - h).norm() / (n * n * self.form.scale());
        let det = (m.det() - 1.0).norm() / (n * n * n);
        unitary.max(det)
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Self::trusted(self.matrix * other.matrix, &self.form)
    }

    /// Inverse through the adjugate (the determinant is one).
    pub fn inverse(&self) -> Isometry {
        let m = self.matrix;
        Self::trusted(m.adjugate().scale(m.det().inv()), &self.form)
    }

    pub fn pow(&self, n: i64) -> Isometry {
        let base = if n < 0 { self.inverse() } else { *self };
        Self::trusted(base.matrix.pow(n.unsigned_abs()), &self.form)
    }

    pub fn apply(&self, v: &Vector3) -> Vector3 {
        self.matrix.mul_vec(v)
    }

    pub fn trace(&self) -> Complex {
        self.matrix.trace()
    }

    pub fn is_projective_identity(&self) -> bool {
        is_projective_identity(&self.matrix, self.form.tol().algebraic)
    }

    /// Whether the element maps the polar of `l` to a multiple of itself.
    pub fn preserves(&self, l: &ComplexGeodesic, tol: f64) -> bool {
        self.apply(&l.polar).proportional(&l.polar, tol)
    }

    /// Action on a preserved geodesic as a Möbius map of its disk chart.
    pub fn restrict(&self, chart: &DiskChart) -> Result<Mobius> {
        if !self.preserves(&chart.geodesic, 1e-8) {
            return Err(Error::DoesNotPreserveGeodesic);
        }
        let (a, c) = chart.coordinates(&self.apply(&chart.basis_pos));
        let (b, d) = chart.coordinates(&self.apply(&chart.basis_neg));
        Ok(Mobius::new(a, b, c, d))
    }
}

/// `X` is a scalar matrix up to relative tolerance.
pub fn is_projective_identity(x: &Matrix3, tol: f64) -> bool {
    x.is_finite() && x.is_scalar(tol)
}

/// The complex reflection of order `p` about the geodesic with polar `n`:
/// `z ↦ e^{−iφ/3} z + (e^{2iφ/3} − e^{−iφ/3}) ⟨z,n⟩/⟨n,n⟩ n`, `φ = 2π/p`.
pub fn complex_reflection(n: &Vector3, p: u32, form: &HermitianForm) -> Result<Isometry> {
    if classify_vector(n, form)? != PointClass::Positive || p < 2 {
        return Err(Error::NonPositivePolar);
    }
    let phi = 2.0 * std::f64::consts::PI / p as f64;
    let a = cis(-phi / 3.0);
    let b = cis(2.0 * phi / 3.0);
    let k = (b - a) / form.norm_sq(n);
    let r = form.covector(n);
    let mut m = Matrix3::scalar(a);
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] += k * n.0[i] * r.0[j];
        }
    }
    Isometry::new(m, form)
}

/// Equality in PU(2,1): `a = λ b` for a cube root of unity `λ`.
pub fn proj_equal(a: &Isometry, b: &Isometry) -> bool {
    proj_equal_with(a, b, a.form.tol().algebraic)
}

pub fn proj_equal_with(a: &Isometry, b: &Isometry, tol: f64) -> bool {
    let scale = a.matrix.norm().max(b.matrix.norm());
    cube_roots_of_unity().iter().any(|&w| (a.matrix - b.matrix.scale(w)).norm() <= tol * scale)
}

/// Reflection sub-flag: fixing a complex geodesic pointwise or a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflectionKind {
    Line,
    Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsometryClass {
    Identity,
    RegularElliptic,
    ComplexReflection(ReflectionKind),
    ElliptoParabolic,
    UnipotentParabolic,
    Loxodromic,
}

impl IsometryClass {
    pub fn tag(&self) -> &'static str {
        match self {
            IsometryClass::Identity => "Identity",
            IsometryClass::RegularElliptic => "RegularElliptic",
            IsometryClass::ComplexReflection(_) => "ComplexReflection",
            IsometryClass::ElliptoParabolic => "ElliptoParabolic",
            IsometryClass::UnipotentParabolic => "UnipotentParabolic",
            IsometryClass::Loxodromic => "Loxodromic",
        }
    }

    pub fn is_parabolic(&self) -> bool {
        matches!(self, IsometryClass::ElliptoParabolic | IsometryClass::UnipotentParabolic)
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsometryClass::ComplexReflection(ReflectionKind::Line) => f.write_str("ComplexReflection(line)"),
            IsometryClass::ComplexReflection(ReflectionKind::Point) => f.write_str("ComplexReflection(point)"),
            c => f.write_str(c.tag()),
        }
    }
}

/// Classification by eigenstructure.
pub fn classify_isometry(m: &Isometry) -> Result<IsometryClass> {
    let tol = m.form.tol();
    if m.is_projective_identity() {
        return Ok(IsometryClass::Identity);
    }
    let eig = eigen3(&m.matrix)?;
    // Eigenvalues are normalized by the cube root of the determinant, which
    // is one up to rounding.
    let on_circle = tol.unit_band * 1e-2;
    let mut borderline = false;
    for p in &eig.pairs {
        let off = (p.value.norm() - 1.0).abs();
        if off >= tol.unit_band {
            return Ok(IsometryClass::Loxodromic);
        }
        if off > on_circle {
            borderline = true;
        }
    }
    if borderline {
        return Err(Error::UnresolvedBorderline("eigenvalue modulus near the unit circle".into()));
    }
    let class_of = |v: &Vector3| classify_vector(v, &m.form);
    match eig.structure {
        EigenStructure::Triple { rank: Some(0), .. } => Ok(IsometryClass::Identity),
        EigenStructure::Triple { rank: Some(_), .. } => Ok(IsometryClass::UnipotentParabolic),
        EigenStructure::Double { rank: Some(1), .. } => match class_of(&eig.pairs[2].vector)? {
            PointClass::Positive => Ok(IsometryClass::ComplexReflection(ReflectionKind::Line)),
            PointClass::Negative => Ok(IsometryClass::ComplexReflection(ReflectionKind::Point)),
            PointClass::Null => Err(Error::UnresolvedBorderline("reflection with a null eigenvector".into())),
        },
        EigenStructure::Double { rank: Some(_), .. } => Ok(IsometryClass::ElliptoParabolic),
        EigenStructure::Distinct => {
            for p in &eig.pairs {
                if class_of(&p.vector)? == PointClass::Negative {
                    return Ok(IsometryClass::RegularElliptic);
                }
            }
            Err(Error::UnresolvedBorderline("elliptic without an interior fixed point".into()))
        }
        _ => Err(Error::UnresolvedBorderline("diagonalizability undecided".into())),
    }
}

/// Least `n ≤ max_order` with `mⁿ` scalar, by repeated multiplication.
pub fn order_by_powering(m: &Isometry, max_order: u32) -> Option<u32> {
    let tol = m.form.tol().algebraic;
    let mut x = m.matrix;
    for n in 1..=max_order {
        if !x.is_finite() || x.norm() > 1e100 {
            return None;
        }
        if is_projective_identity(&x, tol) {
            return Some(n);
        }
        x = x * m.matrix;
    }
    None
}

/// Denominator of a continued-fraction convergent of `x` within 1e-8, if one
/// exists with denominator at most `max_den`.
pub fn rational_denominator(x: f64, max_den: u64) -> Option<u64> {
    let x = x.rem_euclid(1.0);
    let tol = 1e-8;
    if x <= tol || 1.0 - x <= tol {
        return Some(1);
    }
    let (mut h0, mut h1) = (0u64, 1u64);
    let (mut k0, mut k1) = (1u64, 0u64);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if a > 1e12 {
            return None;
        }
        let a = a as u64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            return None;
        }
        if (x - h2 as f64 / k2 as f64).abs() <= tol {
            return Some(k2);
        }
        let frac = y - a as f64;
        if frac <= 0.0 {
            return None;
        }
        y = 1.0 / frac;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order from the rationality of the eigenvalue-ratio arguments (with
/// denominators up to `3·max_order`), verified by binary powering.
pub fn order_by_eigenvalues(m: &Isometry, max_order: u32) -> Option<u32> {
    let tol = m.form.tol();
    let eig = eigen3(&m.matrix).ok()?;
    let values = eig.values();
    if values.iter().any(|v| (v.norm() - 1.0).abs() > tol.unit_band) {
        return None;
    }
    let max_den = 3 * max_order as u64;
    let mut n = 1u64;
    for k in 1..3 {
        let turns = (values[0] / values[k]).arg() / (2.0 * std::f64::consts::PI);
        let d = rational_denominator(turns, max_den)?;
        n = n / gcd(n, d) * d;
        if n > max_order as u64 {
            return None;
        }
    }
    is_projective_identity(&m.matrix.pow(n), tol.algebraic).then_some(n as u32)
}

/// Projective order: the least `n ≤ max_order` with `mⁿ` the identity of
/// PU(2,1), or `None`. Computed by powering; see [`order_by_eigenvalues`]
/// for the independent route.
pub fn projective_order(m: &Isometry, max_order: u32) -> Option<u32> {
    order_by_powering(m, max_order)
}

/// A fixed set of an isometry in projective space.
#[derive(Clone, Copy, Debug)]
pub enum FixedSet {
    /// An eigenvector.
    Point(ProjectivePoint),
    /// A two-dimensional eigenspace, given by its polar (the Hermitian
    /// complement).
    Line { polar: Vector3, polar_class: PointClass },
}

/// Eigenvectors of a non-identity element, plus the eigenline of a complex
/// reflection.
pub fn fixed_points(m: &Isometry) -> Result<Vec<FixedSet>> {
    if m.is_projective_identity() {
        return Err(Error::IdentityElement);
    }
    let eig = eigen3(&m.matrix)?;
    let mut out: Vec<FixedSet> = Vec::new();
    let mut seen: Vec<Vector3> = Vec::new();
    for p in &eig.pairs {
        if seen.iter().any(|v| v.proportional(&p.vector, 1e-8)) {
            continue;
        }
        seen.push(p.vector);
        out.push(FixedSet::Point(ProjectivePoint::new(p.vector, &m.form)?));
    }
    if let EigenStructure::Double { rank: Some(1), .. } = eig.structure {
        let polar = eig.pairs[2].vector;
        out.push(FixedSet::Line { polar, polar_class: classify_vector(&polar, &m.form)? });
    }
    Ok(out)
}
