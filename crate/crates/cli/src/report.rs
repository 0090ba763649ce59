//! Verification reports in their serialized form.

use cherbolic_core::domains::{
    poincare_verify_with, verify_subgroup_presentation_with, CaseId, CycleReport, FuchsianPolygon, PairingCheck,
    PoincareReport, SubgroupReport, VertexAngle,
};
use cherbolic_core::groups::{verify_presentation_with, ExponentValue, GroupId, PresentationReport, TriangleGroup};
use serde::{Deserialize, Serialize};

use crate::RunConfig;

/// Complex numbers are written as `[re, im]`.
pub type C = [f64; 2];

pub fn c(z: cherbolic_core::linalg::Complex) -> C {
    [z.re, z.im]
}

fn finite(e: ExponentValue) -> Option<u32> {
    match e {
        ExponentValue::Finite(n) => Some(n),
        ExponentValue::Infinite => None,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AmbientClause {
    /// `exponent: null` stands for an infinite exponent.
    Relator { word: String, formula: String, exponent: Option<u32>, measured_order: Option<u32>, status: String, pass: bool },
    Braid { a: String, b: String, n: u32, holds: bool },
    Equality { lhs: String, rhs: String, holds: bool },
}

impl AmbientClause {
    pub fn pass(&self) -> bool {
        match self {
            AmbientClause::Relator { pass, .. } => *pass,
            AmbientClause::Braid { holds, .. } | AmbientClause::Equality { holds, .. } => *holds,
        }
    }
}

fn ambient_clauses(r: &PresentationReport) -> Vec<AmbientClause> {
    let mut out: Vec<AmbientClause> = r
        .relators
        .iter()
        .map(|x| AmbientClause::Relator {
            word: x.word.clone(),
            formula: x.formula.clone(),
            exponent: finite(x.exponent),
            measured_order: x.measured_order,
            status: x.status.tag().into(),
            pass: x.status.passes(),
        })
        .collect();
    out.extend(r.braids.iter().map(|b| AmbientClause::Braid { a: b.a.clone(), b: b.b.clone(), n: b.n, holds: b.holds }));
    out.extend(r.equalities.iter().map(|e| AmbientClause::Equality { lhs: e.lhs.clone(), rhs: e.rhs.clone(), holds: e.holds }));
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexSummary {
    pub label: usize,
    pub z: C,
    pub ideal: bool,
    pub resolution: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonSummary {
    pub vertices: Vec<VertexSummary>,
    pub boundary: Vec<usize>,
    pub ccw: bool,
}

impl PolygonSummary {
    pub fn new(poly: &FuchsianPolygon) -> Self {
        PolygonSummary {
            vertices: poly
                .vertices
                .iter()
                .map(|v| VertexSummary { label: v.label, z: c(v.z), ideal: v.ideal, resolution: v.resolution.tag().into() })
                .collect(),
            boundary: poly.boundary.clone(),
            ccw: poly.ccw,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleSummary {
    pub label: usize,
    pub arc: f64,
    pub cosine: Option<f64>,
    pub discrepancy: Option<f64>,
}

impl From<&VertexAngle> for AngleSummary {
    fn from(a: &VertexAngle) -> Self {
        AngleSummary { label: a.label, arc: a.arc, cosine: a.cosine, discrepancy: a.discrepancy() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingSummary {
    pub name: String,
    pub word: String,
    pub from_side: usize,
    pub to_side: usize,
    pub preserves_base: bool,
    /// `[vertex, image]` pairs.
    pub endpoint_map: Option<Vec<[usize; 2]>>,
    pub disjoint: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

impl From<&PairingCheck> for PairingSummary {
    fn from(p: &PairingCheck) -> Self {
        PairingSummary {
            name: p.name.clone(),
            word: p.word.clone(),
            from_side: p.from_side,
            to_side: p.to_side,
            preserves_base: p.preserves_base,
            endpoint_map: p.endpoint_map.map(|m| m.iter().map(|&(a, b)| [a, b]).collect()),
            disjoint: p.disjoint,
            pass: p.pass(),
            failure: p.failure.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleSummary {
    pub members: Vec<usize>,
    pub word: String,
    pub angle_sum: f64,
    pub ideal: bool,
    pub restricted_order: Option<u32>,
    pub ambient_order: Option<u32>,
    pub class: Option<String>,
    pub trace_invariant: f64,
    pub named: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

impl From<&CycleReport> for CycleSummary {
    fn from(c: &CycleReport) -> Self {
        CycleSummary {
            members: c.members.clone(),
            word: c.word.clone(),
            angle_sum: c.angle_sum,
            ideal: c.ideal,
            restricted_order: c.restricted_order,
            ambient_order: c.ambient_order,
            class: c.class.map(|k| k.to_string()),
            trace_invariant: c.trace_invariant,
            named: c.named,
            pass: c.pass,
            failure: c.failure.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoincareSummary {
    pub pass: bool,
    pub error: Option<String>,
    pub angles_agree: bool,
    pub disjoint: bool,
    pub angles: Vec<AngleSummary>,
    pub pairings: Vec<PairingSummary>,
    pub cycles: Vec<CycleSummary>,
    pub missing_named_cycles: Vec<Vec<usize>>,
}

impl From<&PoincareReport> for PoincareSummary {
    fn from(r: &PoincareReport) -> Self {
        PoincareSummary {
            pass: r.pass(),
            error: r.error.as_ref().map(|e| e.to_string()),
            angles_agree: r.angles_agree(),
            disjoint: r.disjoint(),
            angles: r.angles.iter().map(AngleSummary::from).collect(),
            pairings: r.pairings.iter().map(PairingSummary::from).collect(),
            cycles: r.cycles.iter().map(CycleSummary::from).collect(),
            missing_named_cycles: r.missing_named_cycles.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupRelatorSummary {
    pub word: String,
    pub formula: String,
    pub exponent: Option<u32>,
    pub ambient_order: Option<u32>,
    pub restricted_order: Option<u32>,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub pass: bool,
    pub error: Option<String>,
    pub generators: Vec<String>,
    pub relators: Vec<SubgroupRelatorSummary>,
    /// Relators dropped for an infinite exponent.
    pub removed: Vec<String>,
}

impl SubgroupSummary {
    fn new(r: cherbolic_core::Result<SubgroupReport>) -> Self {
        match r {
            Ok(s) => SubgroupSummary {
                pass: s.pass(),
                error: None,
                generators: s.generators.clone(),
                removed: s.removed().into_iter().map(String::from).collect(),
                relators: s
                    .relators
                    .iter()
                    .map(|x| SubgroupRelatorSummary {
                        word: x.word.clone(),
                        formula: x.formula.clone(),
                        exponent: finite(x.exponent),
                        ambient_order: x.ambient_order,
                        restricted_order: x.restricted_order,
                        status: x.status.tag().into(),
                    })
                    .collect(),
            },
            Err(e) => SubgroupSummary { pass: false, error: Some(e.to_string()), generators: vec![], relators: vec![], removed: vec![] },
        }
    }
}

/// One case's full verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub p: u32,
    pub group: String,
    pub ambient_presentation: Vec<AmbientClause>,
    pub polygon: Option<PolygonSummary>,
    pub poincare: PoincareSummary,
    pub subgroup_presentation: SubgroupSummary,
    pub pass: bool,
    /// Set when the group itself could not be built or the presentation
    /// could not be evaluated.
    pub error: Option<String>,
}

fn ambient(g: &TriangleGroup, case: CaseId, cfg: &RunConfig) -> Result<Vec<AmbientClause>, String> {
    let pres = case.family.group_family().presentation().ok_or("family has no presentation")?;
    verify_presentation_with(g, &pres, cfg.max_order).map(|r| ambient_clauses(&r)).map_err(|e| e.to_string())
}

/// Ambient presentation, Poincaré polygon and subgroup presentation checks
/// for one case.
pub fn verify_case(case: CaseId, cfg: &RunConfig) -> CaseReport {
    let group = GroupId { family: case.family.group_family(), p: case.p }.to_string();
    let g = match case.family.group_family().group_with(case.p, cfg.tol) {
        Ok(g) => g,
        Err(e) => {
            let msg = e.to_string();
            return CaseReport {
                case: case.to_string(),
                p: case.p,
                group,
                ambient_presentation: vec![],
                polygon: None,
                poincare: PoincareSummary {
                    pass: false,
                    error: Some(msg.clone()),
                    angles_agree: false,
                    disjoint: false,
                    angles: vec![],
                    pairings: vec![],
                    cycles: vec![],
                    missing_named_cycles: vec![],
                },
                subgroup_presentation: SubgroupSummary::new(Err(e)),
                pass: false,
                error: Some(msg),
            };
        }
    };
    let (ambient_presentation, error) = match ambient(&g, case, cfg) {
        Ok(a) => (a, None),
        Err(e) => (vec![], Some(e)),
    };
    let poincare = poincare_verify_with(&g, case, cfg.max_order);
    let subgroup = SubgroupSummary::new(verify_subgroup_presentation_with(&g, case, cfg.max_order));
    let poincare_summary = PoincareSummary::from(&poincare);
    let pass = error.is_none()
        && !ambient_presentation.is_empty()
        && ambient_presentation.iter().all(AmbientClause::pass)
        && poincare_summary.pass
        && subgroup.pass;
    CaseReport {
        case: case.to_string(),
        p: case.p,
        group,
        ambient_presentation,
        polygon: poincare.polygon.as_ref().map(PolygonSummary::new),
        poincare: poincare_summary,
        subgroup_presentation: subgroup,
        pass,
        error,
    }
}

/// Verify each case; results come back in input order.
pub fn verify_cases(cases: &[CaseId], cfg: &RunConfig) -> Vec<CaseReport> {
    use rayon::prelude::*;
    cases.par_iter().map(|&c| verify_case(c, cfg)).collect()
}
