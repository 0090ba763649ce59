use crate::error::{Error, Result};
use crate::isometry::{proj_equal, Isometry};
use crate::linalg::{cis, Complex, HermitianForm, Matrix3, Tolerances, Vector3, ONE, ZERO};
use crate::plane::{ComplexGeodesic, ProjectivePoint};

use super::word::{parse_word, Generator, GroupKind, Word};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GroupParams {
    Sporadic { p: u32, tau: Complex },
    Thompson { p: u32, rho: Complex, sigma: Complex, tau: Complex },
}

impl GroupParams {
    pub fn p(&self) -> u32 {
        match *self {
            GroupParams::Sporadic { p, .. } | GroupParams::Thompson { p, .. } => p,
        }
    }

    pub fn kind(&self) -> GroupKind {
        match self {
            GroupParams::Sporadic { .. } => GroupKind::Sporadic,
            GroupParams::Thompson { .. } => GroupKind::Thompson,
        }
    }
}

/// A complex hyperbolic triangle group generated by three complex
/// reflections of order `p` with polars the standard basis vectors, and for
/// sporadic groups the cyclic permutation J.
#[derive(Clone, Debug)]
pub struct TriangleGroup {
    params: GroupParams,
    form: HermitianForm,
    reflections: [Isometry; 3],
    reflection_inverses: [Isometry; 3],
    j: Option<(Isometry, Isometry)>,
}

/// `u = e^{2πi/(3p)}` and `α = 2 − u³ − ū³`.
fn u_alpha(p: u32) -> (Complex, f64) {
    let u = cis(2.0 * std::f64::consts::PI / (3.0 * p as f64));
    let alpha = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / p as f64).cos();
    (u, alpha)
}

fn lorentzian_form(h: Matrix3, tol: Tolerances) -> Result<HermitianForm> {
    let form = HermitianForm::with_tolerances(h, tol)?;
    let s = form.signature();
    if !s.is_lorentzian() || h.det().re >= 0.0 {
        return Err(Error::WrongSignature { plus: s.plus, minus: s.minus, zero: s.zero });
    }
    Ok(form)
}

/// The sporadic group `S(p, τ)` in the normalization where the polars are
/// the standard basis and `⟨n_{i+1}, n_i⟩ = (ū² − u)τ`.
pub fn sporadic_group(p: u32, tau: Complex) -> Result<TriangleGroup> {
    sporadic_group_with(p, tau, Tolerances::default())
}

pub fn sporadic_group_with(p: u32, tau: Complex, tol: Tolerances) -> Result<TriangleGroup> {
    let (u, alpha) = u_alpha(p);
    let a = Complex::from(alpha);
    let ub = u.conj();
    let beta = (ub * ub - u) * tau;
    let bb = beta.conj();
    let h = Matrix3::from_rows([[a, beta, bb], [bb, a, beta], [beta, bb, a]]);
    let form = lorentzian_form(h, tol)?;
    let r1 = Matrix3::from_rows([[u * u, tau, -u * tau.conj()], [ZERO, ub, ZERO], [ZERO, ZERO, ub]]);
    let j = Matrix3::from_rows([[ZERO, ZERO, ONE], [ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]);
    let j_inv = j.transpose();
    let r2 = j * r1 * j_inv;
    let r3 = j * r2 * j_inv;
    let reflections = [Isometry::new(r1, &form)?, Isometry::new(r2, &form)?, Isometry::new(r3, &form)?];
    let j = Isometry::new(j, &form)?;
    Ok(TriangleGroup::assemble(GroupParams::Sporadic { p, tau }, form, reflections, Some(j)))
}

/// The Thompson group with parameters `(ρ, σ, τ)`.
pub fn thompson_group(p: u32, rho: Complex, sigma: Complex, tau: Complex) -> Result<TriangleGroup> {
    thompson_group_with(p, rho, sigma, tau, Tolerances::default())
}

pub fn thompson_group_with(p: u32, rho: Complex, sigma: Complex, tau: Complex, tol: Tolerances) -> Result<TriangleGroup> {
    let (u, alpha) = u_alpha(p);
    let a = Complex::from(alpha);
    let ub = u.conj();
    let k = ub * ub - u;
    let (b1, b2, b3) = (k * rho, k * sigma, k * tau);
    let h = Matrix3::from_rows([[a, b1, b3.conj()], [b1.conj(), a, b2], [b3, b2.conj(), a]]);
    let form = lorentzian_form(h, tol)?;
    let r1 = Matrix3::from_rows([[u * u, rho, -u * tau.conj()], [ZERO, ub, ZERO], [ZERO, ZERO, ub]]);
    let r2 = Matrix3::from_rows([[ub, ZERO, ZERO], [-u * rho.conj(), u * u, sigma], [ZERO, ZERO, ub]]);
    let r3 = Matrix3::from_rows([[ub, ZERO, ZERO], [ZERO, ub, ZERO], [tau, -u * sigma.conj(), u * u]]);
    let reflections = [Isometry::new(r1, &form)?, Isometry::new(r2, &form)?, Isometry::new(r3, &form)?];
    Ok(TriangleGroup::assemble(GroupParams::Thompson { p, rho, sigma, tau }, form, reflections, None))
}

impl TriangleGroup {
    fn assemble(params: GroupParams, form: HermitianForm, reflections: [Isometry; 3], j: Option<Isometry>) -> Self {
        let reflection_inverses = reflections.map(|r| r.inverse());
        TriangleGroup { params, form, reflections, reflection_inverses, j: j.map(|j| (j, j.inverse())) }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn kind(&self) -> GroupKind {
        self.params.kind()
    }

    pub fn p(&self) -> u32 {
        self.params.p()
    }

    pub fn form(&self) -> &HermitianForm {
        &self.form
    }

    /// Polar vector `n_k` of the mirror of `R_{k+1}` (0-based).
    pub fn polar(&self, k: usize) -> Vector3 {
        Vector3::basis(k)
    }

    /// The mirror of `R_{k+1}` (0-based).
    pub fn mirror(&self, k: usize) -> ComplexGeodesic {
        ComplexGeodesic { polar: self.polar(k) }
    }

    pub fn generator(&self, g: Generator) -> Option<&Isometry> {
        match g.reflection_index() {
            Some(i) => Some(&self.reflections[i]),
            None => self.j.as_ref().map(|(j, _)| j),
        }
    }

    fn letter_matrix(&self, g: Generator, inverted: bool) -> Option<&Matrix3> {
        match (g.reflection_index(), inverted) {
            (Some(i), false) => Some(self.reflections[i].matrix()),
            (Some(i), true) => Some(self.reflection_inverses[i].matrix()),
            (None, false) => self.j.as_ref().map(|(j, _)| j.matrix()),
            (None, true) => self.j.as_ref().map(|(_, ji)| ji.matrix()),
        }
    }

    /// Left-to-right product of the letters' matrices.
    pub fn eval_word(&self, w: &Word) -> Result<Isometry> {
        let mut m = Matrix3::identity();
        for (pos, l) in w.letters.iter().enumerate() {
            let g = self
                .letter_matrix(l.generator, l.inverted)
                .ok_or(Error::MacroUnavailable { pos, token: l.generator.symbol() })?;
            m = m * *g;
        }
        Isometry::new(m, &self.form)
    }

    /// Parse and evaluate.
    pub fn eval(&self, text: &str) -> Result<Isometry> {
        self.eval_word(&parse_word(text, self.kind())?)
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        parse_word(text, self.kind())
    }

    /// `br_n(a, b)`: the alternating products `abab…` and `baba…` with `n`
    /// factors agree in PU(2,1).
    pub fn braid_holds(&self, a: &Word, b: &Word, n: u32) -> Result<bool> {
        let ma = self.eval_word(a)?;
        let mb = self.eval_word(b)?;
        let mut x = Isometry::identity(&self.form);
        let mut y = Isometry::identity(&self.form);
        for i in 0..n {
            let (s, t) = if i % 2 == 0 { (&ma, &mb) } else { (&mb, &ma) };
            x = x.compose(s);
            y = y.compose(t);
        }
        Ok(proj_equal(&x, &y))
    }

    /// Vertices `v_i = n_{i+1} ⊠ n_{i+2}` of the triangle of mirrors.
    pub fn triangle_vertices(&self) -> Result<[ProjectivePoint; 3]> {
        let v = |i: usize| {
            let z = self.form.box_product(&self.polar((i + 1) % 3), &self.polar((i + 2) % 3));
            ProjectivePoint::new(z, &self.form)
        };
        Ok([v(0)?, v(1)?, v(2)?])
    }
}
