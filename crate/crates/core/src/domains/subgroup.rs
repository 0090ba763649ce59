//! Presentations of the stabilisers generated by the side pairings.

use crate::error::Result;
use crate::groups::{ExponentValue, Presentation, RelatorStatus, TriangleGroup};
use crate::isometry::{order_by_powering, DEFAULT_MAX_ORDER};
use crate::plane::{disk_chart, ComplexGeodesic};

use super::case::{expand_pairing_word, CaseData, CaseId};

const MOBIUS_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupRelatorReport {
    /// Word in the pairing names.
    pub word: String,
    pub formula: String,
    pub exponent: ExponentValue,
    pub ambient_order: Option<u32>,
    pub restricted_order: Option<u32>,
    pub status: RelatorStatus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupReport {
    pub generators: Vec<String>,
    pub relators: Vec<SubgroupRelatorReport>,
}

impl SubgroupReport {
    pub fn pass(&self) -> bool {
        self.relators.iter().all(|r| r.status.passes())
    }

    /// Relators dropped because their exponent is infinite.
    pub fn removed(&self) -> Vec<&str> {
        self.relators.iter().filter(|r| r.status == RelatorStatus::Removed).map(|r| r.word.as_str()).collect()
    }
}

/// The case's stabiliser presentation. Exponents are evaluated at `p` by
/// the caller through [`verify_subgroup_presentation`]; this returns the
/// symbolic form valid at `p`.
pub fn subgroup_presentation(case: CaseId) -> Presentation {
    case.family.subgroup_presentation_formulas(case.p)
}

/// Evaluate each relator's exponent at `p` and measure the relator word's
/// order, in the ambient group and on the base geodesic.
pub fn verify_subgroup_presentation(g: &TriangleGroup, case: CaseId) -> Result<SubgroupReport> {
    verify_subgroup_presentation_with(g, case, DEFAULT_MAX_ORDER)
}

pub fn verify_subgroup_presentation_with(g: &TriangleGroup, case: CaseId, max_order: u32) -> Result<SubgroupReport> {
    verify_subgroup_presentation_data(g, case, &case.family.data(), max_order)
}

/// As [`verify_subgroup_presentation_with`], with explicit pairing words.
pub fn verify_subgroup_presentation_data(g: &TriangleGroup, case: CaseId, data: &CaseData, max_order: u32) -> Result<SubgroupReport> {
    let pres = subgroup_presentation(case);
    let base = ComplexGeodesic::new(g.polar(data.base), g.form())?;
    let chart = disk_chart(&base, g.form())?;
    let mut relators = Vec::with_capacity(pres.relators.len());
    for r in &pres.relators {
        let exponent = r.exponent.evaluate(case.p)?;
        let m = g.eval(&expand_pairing_word(&r.word, &data.pairings)?)?;
        let ambient_order = order_by_powering(&m, max_order);
        let restricted_order = m.restrict(&chart)?.order_by_powering(max_order, MOBIUS_TOL);
        let status = match crate::groups::relator_status(exponent, ambient_order) {
            RelatorStatus::Mismatch if matches!(exponent, ExponentValue::Finite(e) if Some(e) == restricted_order) => {
                RelatorStatus::HoldsOnGeodesic
            }
            s => s,
        };
        relators.push(SubgroupRelatorReport {
            word: r.word.clone(),
            formula: r.exponent.to_string(),
            exponent,
            ambient_order,
            restricted_order,
            status,
        });
    }
    Ok(SubgroupReport { generators: pres.generators.clone(), relators })
}
