use std::fmt;

use crate::error::{Error, Result};
use crate::isometry::{order_by_powering, proj_equal, DEFAULT_MAX_ORDER};

use super::group::TriangleGroup;

/// A relator exponent, possibly depending on `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentFormula {
    Constant(u32),
    /// `|a·p / (b·p + c)|`
    RationalAbs { a: i64, b: i64, c: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExponentValue {
    Finite(u32),
    Infinite,
}

impl ExponentFormula {
    /// Shorthand for the exponent `p`.
    pub const P: ExponentFormula = ExponentFormula::RationalAbs { a: 1, b: 0, c: 1 };

    pub const fn rational(a: i64, b: i64, c: i64) -> Self {
        ExponentFormula::RationalAbs { a, b, c }
    }

    pub fn evaluate(&self, p: u32) -> Result<ExponentValue> {
        match *self {
            ExponentFormula::Constant(n) => Ok(ExponentValue::Finite(n)),
            ExponentFormula::RationalAbs { a, b, c } => {
                let num = (a * p as i64).abs();
                let den = (b * p as i64 + c).abs();
                if den == 0 {
                    return Ok(ExponentValue::Infinite);
                }
                if num % den != 0 || num == 0 {
                    return Err(Error::NonIntegerExponent { p, formula: self.to_string() });
                }
                Ok(ExponentValue::Finite((num / den) as u32))
            }
        }
    }
}

fn linear(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    match k {
        1 => f.write_str("p"),
        -1 => f.write_str("-p"),
        _ => write!(f, "{k}p"),
    }
}

impl fmt::Display for ExponentFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExponentFormula::Constant(n) => write!(f, "{n}"),
            ExponentFormula::RationalAbs { a, b: 0, c: 1 } => linear(f, a),
            ExponentFormula::RationalAbs { a, b, c } => {
                f.write_str("|")?;
                linear(f, a)?;
                f.write_str("/(")?;
                if b == 0 {
                    write!(f, "{c}")?;
                } else {
                    linear(f, b)?;
                    match c {
                        0 => {}
                        c if c > 0 => write!(f, "+{c}")?,
                        c => write!(f, "-{}", -c)?,
                    }
                }
                f.write_str(")|")
            }
        }
    }
}

impl fmt::Display for ExponentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentValue::Finite(n) => write!(f, "{n}"),
            ExponentValue::Infinite => f.write_str("inf"),
        }
    }
}

/// `word^exponent = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relator {
    pub word: String,
    pub exponent: ExponentFormula,
}

/// `br_n(a, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidClause {
    pub a: String,
    pub b: String,
    pub n: u32,
}

/// `lhs = rhs` projectively.
#[derive(Clone, Debug, PartialEq)]
pub struct Equality {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
    pub braids: Vec<BraidClause>,
    pub equalities: Vec<Equality>,
}

impl Presentation {
    pub fn relator(mut self, word: &str, exponent: ExponentFormula) -> Self {
        self.relators.push(Relator { word: word.into(), exponent });
        self
    }

    pub fn braid(mut self, a: &str, b: &str, n: u32) -> Self {
        self.braids.push(BraidClause { a: a.into(), b: b.into(), n });
        self
    }

    pub fn equality(mut self, lhs: &str, rhs: &str) -> Self {
        self.equalities.push(Equality { lhs: lhs.into(), rhs: rhs.into() });
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelatorStatus {
    /// The measured order equals the exponent.
    Holds,
    /// The ambient order differs, but the action on the stabilised geodesic
    /// has exactly the expected order.
    HoldsOnGeodesic,
    /// Infinite exponent and infinite measured order: the relator is dropped.
    Removed,
    Mismatch,
}

impl RelatorStatus {
    pub fn passes(&self) -> bool {
        !matches!(self, RelatorStatus::Mismatch)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            RelatorStatus::Holds => "holds",
            RelatorStatus::HoldsOnGeodesic => "holds-on-geodesic",
            RelatorStatus::Removed => "removed",
            RelatorStatus::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelatorReport {
    pub word: String,
    pub formula: String,
    pub exponent: ExponentValue,
    /// Measured projective order, `None` when none was found up to the bound.
    pub measured_order: Option<u32>,
    pub status: RelatorStatus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidReport {
    pub a: String,
    pub b: String,
    pub n: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EqualityReport {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PresentationReport {
    pub p: u32,
    pub relators: Vec<RelatorReport>,
    pub braids: Vec<BraidReport>,
    pub equalities: Vec<EqualityReport>,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.relators.iter().all(|r| r.status.passes())
            && self.braids.iter().all(|b| b.holds)
            && self.equalities.iter().all(|e| e.holds)
    }
}

/// Compare an exponent with a measured order.
pub fn relator_status(exponent: ExponentValue, measured: Option<u32>) -> RelatorStatus {
    match (exponent, measured) {
        (ExponentValue::Finite(e), Some(o)) if e == o => RelatorStatus::Holds,
        (ExponentValue::Infinite, None) => RelatorStatus::Removed,
        _ => RelatorStatus::Mismatch,
    }
}

/// Check every clause of `pres` in `g`. A relator holds when the projective
/// order of its word is exactly the evaluated exponent.
pub fn verify_presentation(g: &TriangleGroup, pres: &Presentation) -> Result<PresentationReport> {
    verify_presentation_with(g, pres, DEFAULT_MAX_ORDER)
}

pub fn verify_presentation_with(g: &TriangleGroup, pres: &Presentation, max_order: u32) -> Result<PresentationReport> {
    let p = g.p();
    let mut relators = Vec::with_capacity(pres.relators.len());
    for r in &pres.relators {
        let exponent = r.exponent.evaluate(p)?;
        let m = g.eval(&r.word)?;
        let measured_order = order_by_powering(&m, max_order);
        relators.push(RelatorReport {
            word: r.word.clone(),
            formula: r.exponent.to_string(),
            exponent,
            measured_order,
            status: relator_status(exponent, measured_order),
        });
    }
    let mut braids = Vec::with_capacity(pres.braids.len());
    for b in &pres.braids {
        let holds = g.braid_holds(&g.parse(&b.a)?, &g.parse(&b.b)?, b.n)?;
        braids.push(BraidReport { a: b.a.clone(), b: b.b.clone(), n: b.n, holds });
    }
    let mut equalities = Vec::with_capacity(pres.equalities.len());
    for e in &pres.equalities {
        let holds = proj_equal(&g.eval(&e.lhs)?, &g.eval(&e.rhs)?);
        equalities.push(EqualityReport { lhs: e.lhs.clone(), rhs: e.rhs.clone(), holds });
    }
    Ok(PresentationReport { p, relators, braids, equalities })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_evaluation() {
        let f = ExponentFormula::rational(3, 1, -3);
        assert_eq!(f.evaluate(3).unwrap(), ExponentValue::Infinite);
        assert_eq!(f.evaluate(4).unwrap(), ExponentValue::Finite(12));
        assert_eq!(f.evaluate(6).unwrap(), ExponentValue::Finite(6));
        assert!(matches!(f.evaluate(5), Err(Error::NonIntegerExponent { p: 5, .. })));
        assert_eq!(ExponentFormula::rational(10, 3, -10).evaluate(5).unwrap(), ExponentValue::Finite(10));
        assert_eq!(ExponentFormula::P.evaluate(7).unwrap(), ExponentValue::Finite(7));
    }

    #[test]
    fn exponent_display() {
        assert_eq!(ExponentFormula::rational(3, 1, -3).to_string(), "|3p/(p-3)|");
        assert_eq!(ExponentFormula::rational(10, 3, -10).to_string(), "|10p/(3p-10)|");
        assert_eq!(ExponentFormula::P.to_string(), "p");
        assert_eq!(ExponentFormula::rational(2, 0, 1).to_string(), "2p");
        assert_eq!(ExponentFormula::Constant(8).to_string(), "8");
    }
}
