//! Closed-form eigen-decomposition of 3×3 complex matrices.
//!
//! Repeated eigenvalues are located exactly as common roots of the
//! characteristic polynomial and its derivative, so multiplicities are
//! decided without clustering floating-point roots.

use super::{Complex, Matrix3, Vector3};
use crate::error::{Error, Result};

/// Threshold on normalized polynomial values for declaring a repeated root.
const MULTIPLE_ROOT_TOL: f64 = 1e-10;
/// Relative size below which `M − λI` is treated as zero.
const RANK_ZERO_TOL: f64 = 1e-9;
/// Cross-product ratio at or below which rows are parallel.
const RANK_ONE_TOL: f64 = 1e-9;
/// Cross-product ratio at or above which rows are independent.
const RANK_TWO_TOL: f64 = 1e-7;
/// Residual tolerance `‖Mv − λv‖ ≤ tol·‖M‖·‖v‖`.
const RESIDUAL_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub value: Complex,
    pub vector: Vector3,
}

/// Multiplicity pattern of the spectrum. `rank` is the rank of `M − λI`
/// for the repeated eigenvalue, or `None` if it falls inside the tolerance
/// band and cannot be decided.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EigenStructure {
    Distinct,
    Double { value: Complex, rank: Option<usize> },
    Triple { value: Complex, rank: Option<usize> },
}

/// Three eigenpairs. For a double eigenvalue the first two pairs carry it
/// (with the same vector twice if the eigenspace is one-dimensional) and the
/// third carries the simple eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenDecomposition {
    pub pairs: [EigenPair; 3],
    pub structure: EigenStructure,
}

impl EigenDecomposition {
    pub fn values(&self) -> [Complex; 3] {
        self.pairs.map(|p| p.value)
    }
}

fn poly(a: Complex, b: Complex, c: Complex, y: Complex) -> Complex {
    ((y + a) * y + b) * y + c
}

fn dpoly(a: Complex, b: Complex, y: Complex) -> Complex {
    (y * 3.0 + a * 2.0) * y + b
}

enum Roots {
    Distinct([Complex; 3]),
    Double(Complex, Complex),
    Triple(Complex),
}

/// Roots of the monic cubic `y³ + a y² + b y + c` with coefficients of size
/// at most one.
fn cubic_roots(a: Complex, b: Complex, c: Complex) -> Roots {
    let d = a * a - b * 3.0;
    let mu = -a / 3.0;
    if d.norm() <= MULTIPLE_ROOT_TOL && poly(a, b, c, mu).norm() <= MULTIPLE_ROOT_TOL {
        return Roots::Triple(mu);
    }
    let sd = d.sqrt();
    let crit = [(-a + sd) / 3.0, (-a - sd) / 3.0];
    let vals = crit.map(|y| poly(a, b, c, y).norm());
    let k = if vals[0] <= vals[1] { 0 } else { 1 };
    if vals[k] <= MULTIPLE_ROOT_TOL {
        let double = crit[k];
        return Roots::Double(double, -a - double * 2.0);
    }

    let p = b - a * a / 3.0;
    let q = a * a * a * (2.0 / 27.0) - a * b / 3.0 + c;
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let w1 = -q / 2.0 + disc;
    let w2 = -q / 2.0 - disc;
    let w = if w1.norm() >= w2.norm() { w1 } else { w2 };
    let cr = w.cbrt();
    let omega = super::cube_roots_of_unity();
    let mut roots = omega.map(|o| {
        let t = cr * o;
        let t = if t.norm() == 0.0 { t } else { t - p / (t * 3.0) };
        t - a / 3.0
    });
    for y in roots.iter_mut() {
        for _ in 0..3 {
            let dp = dpoly(a, b, *y);
            if dp.norm() == 0.0 {
                break;
            }
            let step = poly(a, b, c, *y) / dp;
            if !step.is_finite() {
                break;
            }
            *y -= step;
        }
    }
    Roots::Distinct(roots)
}

/// Rank of `a` decided with the module tolerances, `None` when undecidable.
fn rank(a: &Matrix3, reference: f64) -> Option<usize> {
    let na = a.norm();
    if na <= RANK_ZERO_TOL * reference.max(1e-300) {
        return Some(0);
    }
    let ratio = max_row_cross(a).norm() / (na * na);
    if ratio <= RANK_ONE_TOL {
        Some(1)
    } else if ratio >= RANK_TWO_TOL {
        Some(2)
    } else {
        None
    }
}

fn max_row_cross(a: &Matrix3) -> Vector3 {
    let r = [a.row(0), a.row(1), a.row(2)];
    [r[0].cross(&r[1]), r[0].cross(&r[2]), r[1].cross(&r[2])]
        .into_iter()
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three candidates")
}

/// Null vector of a rank-2 matrix.
fn null_vector(a: &Matrix3) -> Vector3 {
    max_row_cross(a).normalized()
}

/// Basis of the null space of a rank-1 matrix.
fn null_plane(a: &Matrix3) -> [Vector3; 2] {
    let r = (0..3)
        .map(|i| a.row(i))
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three rows");
    // {v : r·v = 0} is the Hermitian complement of conj(r).
    let s = r.conj();
    let v1 = (0..3)
        .map(|k| s.cross(&Vector3::basis(k)).conj())
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three candidates")
        .normalized();
    let v2 = s.cross(&v1).conj().normalized();
    [v1, v2]
}

fn residual(m: &Matrix3, value: Complex, v: &Vector3) -> f64 {
    (m.mul_vec(v) - v.scale(value)).norm()
}

/// One step of inverse iteration with a slightly shifted eigenvalue; kept
/// only if it lowers the residual.
fn polish(m: &Matrix3, value: Complex, v: Vector3) -> Vector3 {
    let shift = value + Complex::new(1e-10, 1e-10) * m.norm().max(1.0);
    let b = *m - Matrix3::scalar(shift);
    let x = b.adjugate().mul_vec(&v);
    if x.norm() == 0.0 || !x.is_finite() {
        return v;
    }
    let x = x.normalized();
    if residual(m, value, &x) < residual(m, value, &v) {
        x
    } else {
        v
    }
}

/// Eigenvalues and eigenvectors of a 3×3 complex matrix.
pub fn eigen3(m: &Matrix3) -> Result<EigenDecomposition> {
    if !m.is_finite() {
        return Err(Error::ConvergenceFailure { residual: f64::NAN });
    }
    let a = -m.trace();
    let b = m.minor_sum();
    let c = -m.det();
    let s = a.norm().max(b.norm().sqrt()).max(c.norm().cbrt());
    let mnorm = m.norm();

    let (pairs, structure) = if s == 0.0 {
        let e = [0, 1, 2].map(|k| EigenPair { value: Complex::from(0.0), vector: Vector3::basis(k) });
        (e, EigenStructure::Triple { value: Complex::from(0.0), rank: rank(m, 1.0) })
    } else {
        match cubic_roots(a / s, b / (s * s), c / (s * s * s)) {
            Roots::Triple(y) => {
                let value = y * s;
                let am = *m - Matrix3::scalar(value);
                let r = rank(&am, mnorm);
                let vectors = match r {
                    Some(0) => [0, 1, 2].map(Vector3::basis),
                    Some(1) => {
                        let [v1, v2] = null_plane(&am);
                        [v1, v2, v1]
                    }
                    _ => {
                        let v = null_vector(&am);
                        [v, v, v]
                    }
                };
                (vectors.map(|vector| EigenPair { value, vector }), EigenStructure::Triple { value, rank: r })
            }
            Roots::Double(yd, ys) => {
                let value = yd * s;
                let simple = ys * s;
                let am = *m - Matrix3::scalar(value);
                let r = rank(&am, mnorm);
                let [v1, v2] = match r {
                    Some(2) | None => {
                        let v = null_vector(&am);
                        [v, v]
                    }
                    _ => null_plane(&am),
                };
                let vs = polish(m, simple, null_vector(&(*m - Matrix3::scalar(simple))));
                (
                    [
                        EigenPair { value, vector: v1 },
                        EigenPair { value, vector: v2 },
                        EigenPair { value: simple, vector: vs },
                    ],
                    EigenStructure::Double { value, rank: r },
                )
            }
            Roots::Distinct(ys) => {
                let pairs = ys.map(|y| {
                    let value = y * s;
                    let v = null_vector(&(*m - Matrix3::scalar(value)));
                    EigenPair { value, vector: polish(m, value, v) }
                });
                (pairs, EigenStructure::Distinct)
            }
        }
    };

    for p in &pairs {
        if !p.vector.is_finite() || p.vector.norm() == 0.0 {
            return Err(Error::ConvergenceFailure { residual: f64::NAN });
        }
        let res = residual(m, p.value, &p.vector) / p.vector.norm();
        if res > RESIDUAL_TOL * mnorm.max(f64::MIN_POSITIVE) {
            return Err(Error::ConvergenceFailure { residual: res });
        }
    }
    Ok(EigenDecomposition { pairs, structure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cis, ONE, ZERO};

    fn sorted_by_arg(mut v: Vec<Complex>) -> Vec<Complex> {
        v.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
        v
    }

    #[test]
    fn identity_has_triple_one() {
        let e = eigen3(&Matrix3::identity()).unwrap();
        assert!(matches!(e.structure, EigenStructure::Triple { rank: Some(0), .. }));
        for p in e.pairs {
            assert!((p.value - ONE).norm() < 1e-14);
        }
    }

    #[test]
    fn cyclic_permutation_has_cube_roots() {
        let j = Matrix3::from_rows([[ZERO, ZERO, ONE], [ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]);
        let e = eigen3(&j).unwrap();
        assert_eq!(e.structure, EigenStructure::Distinct);
        let got = sorted_by_arg(e.values().to_vec());
        let want = sorted_by_arg(crate::linalg::cube_roots_of_unity().to_vec());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-12, "{g} vs {w}");
        }
    }

    #[test]
    fn diagonal_real() {
        let m = Matrix3::from_real_rows([[2.0, 0.0, 0.0], [0.0, 3.0, 0.0], [0.0, 0.0, 5.0]]);
        let e = eigen3(&m).unwrap();
        for p in e.pairs {
            let k = [2.0, 3.0, 5.0].iter().position(|x| (p.value.re - x).abs() < 1e-12).expect("known value");
            assert!(p.vector.proportional(&Vector3::basis(k), 1e-12));
        }
    }

    #[test]
    fn double_diagonalizable() {
        let u = cis(0.3);
        let m = Matrix3::diag(u, u, cis(-0.6));
        let e = eigen3(&m).unwrap();
        match e.structure {
            EigenStructure::Double { value, rank } => {
                assert!((value - u).norm() < 1e-14);
                assert_eq!(rank, Some(1));
            }
            s => panic!("unexpected {s:?}"),
        }
    }

    #[test]
    fn jordan_block_is_rank_two() {
        let m = Matrix3::from_real_rows([[1.0, 1.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]]);
        let e = eigen3(&m).unwrap();
        assert!(matches!(e.structure, EigenStructure::Double { rank: Some(2), .. }));
        assert!(e.pairs[0].vector.proportional(&Vector3::basis(0), 1e-12));
    }

    #[test]
    fn nilpotent_triple() {
        let m = Matrix3::from_real_rows([[1.0, 1.0, 0.0], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]]);
        let e = eigen3(&m).unwrap();
        assert!(matches!(e.structure, EigenStructure::Triple { rank: Some(2), .. }));
    }
}
