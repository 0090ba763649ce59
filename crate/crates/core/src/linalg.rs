//! Complex 3-vectors, 3×3 matrices and Hermitian forms.
//!
//! Everything here is a small `Copy` value. Matrices are row-major.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// `e^{iθ}`.
pub fn cis(theta: f64) -> Complex {
    Complex::from_polar(1.0, theta)
}

/// The three cube roots of unity, starting at 1.
pub fn cube_roots_of_unity() -> [Complex; 3] {
    let w = cis(2.0 * std::f64::consts::PI / 3.0);
    [ONE, w, w * w]
}

/// Numerical tolerances shared by every module.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for algebraic identities (matrix equalities).
    pub algebraic: f64,
    /// Absolute tolerance for angles and distances.
    pub angle: f64,
    /// Relative threshold below which a Hermitian value counts as zero.
    pub zero: f64,
    /// Width of the band around the unit circle inside which eigenvalue
    /// moduli are considered undecidable.
    pub unit_band: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { algebraic: 1e-9, angle: 1e-6, zero: 1e-8, unit_band: 1e-7 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector3(pub [Complex; 3]);

impl Vector3 {
    pub const fn new(a: Complex, b: Complex, c: Complex) -> Self {
        Vector3([a, b, c])
    }

    pub fn zero() -> Self {
        Vector3([ZERO; 3])
    }

    /// Standard basis vector `e_k` (0-based).
    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = ONE;
        v
    }

    pub fn from_real(a: f64, b: f64, c: f64) -> Self {
        Vector3([a.into(), b.into(), c.into()])
    }

    pub fn conj(&self) -> Self {
        Vector3(self.0.map(|z| z.conj()))
    }

    /// Bilinear dot product `Σ a_i b_i` (no conjugation).
    pub fn dot(&self, other: &Vector3) -> Complex {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    /// Bilinear cross product.
    pub fn cross(&self, other: &Vector3) -> Vector3 {
        let [a0, a1, a2] = self.0;
        let [b0, b1, b2] = other.0;
        Vector3([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: Complex) -> Vector3 {
        Vector3(self.0.map(|z| z * s))
    }

    pub fn normalized(&self) -> Vector3 {
        self.scale(Complex::from(1.0 / self.norm()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }

    /// Sine of the Euclidean angle between the complex lines spanned by the
    /// two vectors; zero iff the vectors are proportional.
    pub fn projective_distance(&self, other: &Vector3) -> f64 {
        let d = self.norm() * other.norm();
        if d == 0.0 {
            return f64::INFINITY;
        }
        (self.cross(other).norm() / d).min(1.0)
    }

    pub fn proportional(&self, other: &Vector3, tol: f64) -> bool {
        self.projective_distance(other) <= tol
    }

    /// Rescale by a unit phase so the first component that is not negligible
    /// is positive real.
    pub fn phase_fixed(&self) -> Vector3 {
        let n = self.norm();
        for z in self.0 {
            if z.norm() > 1e-12 * n {
                return self.scale(z.conj() / z.norm());
            }
        }
        *self
    }
}

impl Index<usize> for Vector3 {
    type Output = Complex;
    fn index(&self, i: usize) -> &Complex {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector3 {
    fn index_mut(&mut self, i: usize) -> &mut Complex {
        &mut self.0[i]
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, o: Vector3) -> Vector3 {
        Vector3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, o: Vector3) -> Vector3 {
        Vector3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3(self.0.map(|z| -z))
    }
}

impl Mul<Complex> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: Complex) -> Vector3 {
        self.scale(s)
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix3(pub [[Complex; 3]; 3]);

impl Matrix3 {
    pub fn zero() -> Self {
        Matrix3([[ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        Self::scalar(ONE)
    }

    pub fn scalar(s: Complex) -> Self {
        Self::diag(s, s, s)
    }

    pub fn diag(a: Complex, b: Complex, c: Complex) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_rows(rows: [[Complex; 3]; 3]) -> Self {
        Matrix3(rows)
    }

    pub fn from_real_rows(rows: [[f64; 3]; 3]) -> Self {
        Matrix3(rows.map(|r| r.map(Complex::from)))
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(c: [Vector3; 3]) -> Self {
        let mut m = Self::zero();
        for (j, v) in c.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = v.0[i];
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vector3 {
        Vector3(self.0[i])
    }

    pub fn column(&self, j: usize) -> Vector3 {
        Vector3([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = self.transpose();
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z = z.conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sum of the principal 2×2 minors.
    pub fn minor_sum(&self) -> Complex {
        let m = &self.0;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    }

    pub fn adjugate(&self) -> Self {
        let r = [self.row(0), self.row(1), self.row(2)];
        // Columns of the adjugate are cross products of row pairs.
        Matrix3::from_columns([r[1].cross(&r[2]), r[2].cross(&r[0]), r[0].cross(&r[1])])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return None;
        }
        Some(self.adjugate().scale(d.inv()))
    }

    pub fn scale(&self, s: Complex) -> Self {
        Matrix3(self.0.map(|r| r.map(|z| z * s)))
    }

    pub fn mul_vec(&self, v: &Vector3) -> Vector3 {
        Vector3([self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v)])
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }

    /// `self^n` by binary exponentiation; `n` must be non-negative.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = Self::identity();
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                result = result * base;
            }
            n >>= 1;
            if n > 0 {
                base = base * base;
            }
        }
        result
    }

    /// Whether the matrix is a scalar multiple of the identity, relative to its size.
    pub fn is_scalar(&self, tol: f64) -> bool {
        let lambda = self.trace() / 3.0;
        (*self - Self::scalar(lambda)).norm() <= tol * self.norm().max(1.0)
    }
}

impl Index<(usize, usize)> for Matrix3 {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.0[i][j]
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, o: Matrix3) -> Matrix3 {
        let mut m = Matrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j] + self.0[i][2] * o.0[2][j];
            }
        }
        m
    }
}

impl Mul<Vector3> for Matrix3 {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        self.mul_vec(&v)
    }
}

impl Add for Matrix3 {
    type Output = Matrix3;
    fn add(self, o: Matrix3) -> Matrix3 {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] += o.0[i][j];
            }
        }
        m
    }
}

impl Sub for Matrix3 {
    type Output = Matrix3;
    fn sub(self, o: Matrix3) -> Matrix3 {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= o.0[i][j];
            }
        }
        m
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_lorentzian(&self) -> bool {
        self.plus == 2 && self.minus == 1 && self.zero == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.plus, self.minus, self.zero)
    }
}

/// Eigenvalues of a Hermitian matrix, ascending. Uses the trigonometric
/// solution of the (real) characteristic cubic.
pub fn hermitian_eigenvalues(m: &Matrix3) -> [f64; 3] {
    let a = -m.trace().re;
    let b = m.minor_sum().re;
    let c = -m.det().re;
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let mut roots = if p.abs() < 1e-300 {
        let t = (-q).cbrt();
        [t, t, t]
    } else {
        let r = 2.0 * (-p / 3.0).max(0.0).sqrt();
        let arg = if r == 0.0 { 0.0 } else { (3.0 * q / (p * r)).clamp(-1.0, 1.0) };
        let phi = arg.acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [r * phi.cos(), r * (phi - tau).cos(), r * (phi - 2.0 * tau).cos()]
    };
    for x in roots.iter_mut() {
        *x -= shift;
    }
    roots.sort_by(|x, y| x.total_cmp(y));
    roots
}

/// Signature of a Hermitian matrix. Eigenvalues with modulus at most
/// `zero_threshold · max|λ|` count as zero.
pub fn form_signature(m: &Matrix3, tol: &Tolerances) -> Result<Signature> {
    let asymmetry = (*m - m.adjoint()).norm();
    if asymmetry > tol.algebraic * m.norm().max(1.0) {
        return Err(Error::NotHermitian { asymmetry });
    }
    let ev = hermitian_eigenvalues(m);
    let scale = ev.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let mut s = Signature { plus: 0, minus: 0, zero: 0 };
    for x in ev {
        if x.abs() <= tol.zero * scale || scale == 0.0 {
            s.zero += 1;
        } else if x > 0.0 {
            s.plus += 1;
        } else {
            s.minus += 1;
        }
    }
    Ok(s)
}

/// A Hermitian form `⟨z,w⟩ = w̄ᵗ H z` together with the tolerances used
/// by every geometric decision made with it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HermitianForm {
    matrix: Matrix3,
    signature: Signature,
    scale: f64,
    tol: Tolerances,
}

impl HermitianForm {
    pub fn new(matrix: Matrix3) -> Result<Self> {
        Self::with_tolerances(matrix, Tolerances::default())
    }

    pub fn with_tolerances(matrix: Matrix3, tol: Tolerances) -> Result<Self> {
        let signature = form_signature(&matrix, &tol)?;
        let ev = hermitian_eigenvalues(&matrix);
        let scale = ev.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        Ok(HermitianForm { matrix, signature, scale, tol })
    }

    /// The standard Lorentzian form diag(1,1,−1).
    pub fn standard() -> Self {
        Self::new(Matrix3::from_real_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]))
            .expect("diagonal form is Hermitian")
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// Largest eigenvalue modulus.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn tol(&self) -> &Tolerances {
        &self.tol
    }

    pub fn with_tol(&self, tol: Tolerances) -> Self {
        HermitianForm { tol, ..*self }
    }

    /// `⟨z,w⟩ = w̄ᵗ H z`, linear in `z`.
    pub fn inner(&self, z: &Vector3, w: &Vector3) -> Complex {
        self.covector(w).dot(z)
    }

    /// `⟨z,z⟩`, which is real.
    pub fn norm_sq(&self, z: &Vector3) -> f64 {
        self.inner(z, z).re
    }

    /// The row vector `āᵗ H`.
    pub fn covector(&self, a: &Vector3) -> Vector3 {
        let h = &self.matrix.0;
        let mut r = Vector3::zero();
        for (j, x) in r.0.iter_mut().enumerate() {
            *x = a.0[0].conj() * h[0][j] + a.0[1].conj() * h[1][j] + a.0[2].conj() * h[2][j];
        }
        r
    }

    /// Box product `(āᵗH) × (b̄ᵗH)`, orthogonal to both `a` and `b`.
    pub fn box_product(&self, a: &Vector3, b: &Vector3) -> Vector3 {
        self.covector(a).cross(&self.covector(b))
    }

    /// `⟨z,z⟩` divided by `scale · ‖z‖²`, a dimensionless class indicator.
    pub fn normalized_norm(&self, z: &Vector3) -> f64 {
        self.norm_sq(z) / (self.scale * z.norm_sqr())
    }
}

/// Free-function form of [`HermitianForm::inner`].
pub fn herm_inner(z: &Vector3, w: &Vector3, form: &HermitianForm) -> Complex {
    form.inner(z, w)
}

/// Free-function form of [`HermitianForm::box_product`].
pub fn box_product(a: &Vector3, b: &Vector3, form: &HermitianForm) -> Vector3 {
    form.box_product(a, b)
}

mod eigen;
pub use eigen::{eigen3, EigenDecomposition, EigenPair, EigenStructure};

#[cfg(test)]
mod tests {
    use super::*;

    fn standard() -> HermitianForm {
        HermitianForm::standard()
    }

    #[test]
    fn inner_of_timelike_basis_vector() {
        let z = Vector3::basis(2);
        assert_eq!(herm_inner(&z, &z, &standard()), Complex::new(-1.0, 0.0));
    }

    #[test]
    fn inner_with_zero_vanishes() {
        let z = Vector3::new(Complex::new(1.0, 2.0), Complex::new(-3.0, 0.5), ONE);
        assert_eq!(herm_inner(&z, &Vector3::zero(), &standard()), ZERO);
    }

    #[test]
    fn box_of_equal_vectors_is_zero() {
        let a = Vector3::new(Complex::new(1.0, 2.0), Complex::new(-3.0, 0.5), ONE);
        assert_eq!(box_product(&a, &a, &standard()), Vector3::zero());
    }

    #[test]
    fn box_of_first_two_basis_vectors() {
        let v = box_product(&Vector3::basis(0), &Vector3::basis(1), &standard());
        assert_eq!(v, Vector3::basis(2));
    }

    #[test]
    fn signature_of_diagonal_forms() {
        let tol = Tolerances::default();
        let s = form_signature(&standard().matrix, &tol).unwrap();
        assert_eq!(s, Signature { plus: 2, minus: 1, zero: 0 });
        let s = form_signature(&Matrix3::identity(), &tol).unwrap();
        assert_eq!(s, Signature { plus: 3, minus: 0, zero: 0 });
        let s = form_signature(&Matrix3::from_real_rows([[4.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -2.0]]), &tol)
            .unwrap();
        assert_eq!(s, Signature { plus: 1, minus: 1, zero: 1 });
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let m = Matrix3::from_rows([[ONE, I, ZERO], [I, ONE, ZERO], [ZERO, ZERO, ONE]]);
        assert!(matches!(form_signature(&m, &Tolerances::default()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn adjugate_inverse() {
        let m = Matrix3::from_rows([
            [Complex::new(1.0, 1.0), Complex::new(2.0, 0.0), ZERO],
            [ZERO, Complex::new(0.0, 3.0), ONE],
            [Complex::new(1.0, -1.0), ZERO, Complex::new(2.0, 0.5)],
        ]);
        let inv = m.inverse().unwrap();
        assert!((m * inv - Matrix3::identity()).norm() < 1e-14);
    }

    #[test]
    fn power_matches_repeated_product() {
        let m = Matrix3::from_rows([[ZERO, ZERO, ONE], [ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]);
        assert!((m.pow(3) - Matrix3::identity()).norm() < 1e-15);
        assert_eq!(m.pow(0), Matrix3::identity());
        assert_eq!(m.pow(2), m * m);
    }

    #[test]
    fn hermitian_eigenvalues_of_diagonal() {
        let m = Matrix3::from_real_rows([[5.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 2.0]]);
        let ev = hermitian_eigenvalues(&m);
        for (x, y) in ev.iter().zip([-1.0, 2.0, 5.0]) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
