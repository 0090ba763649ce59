//! Polygon documents: everything needed to redraw a polygon and to rebuild
//! and re-verify it.

use cherbolic_core::domains::{
    build_polygon_in_chart, poincare_verify_with, verify_polygon_with, CaseData, CaseId, FuchsianPolygon, PoincareReport,
    SidePairing, VertexSpec,
};
use cherbolic_core::linalg::{Complex, Vector3};
use cherbolic_core::plane::{ComplexGeodesic, DiskChart, SegmentShape};
use serde::{Deserialize, Serialize};

use crate::report::{c, CycleSummary, C};
use crate::{CliError, RunConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartBasis {
    pub neg: [C; 3],
    pub pos: [C; 3],
}

fn vec3(v: &Vector3) -> [C; 3] {
    v.0.map(c)
}

fn unvec3(v: &[C; 3]) -> Vector3 {
    Vector3(v.map(|[re, im]| Complex::new(re, im)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexSource {
    Lift { word: String, polar: usize },
    FixedPoint { word: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DocVertex {
    pub label: usize,
    pub z: C,
    pub ideal: bool,
    pub resolution: String,
    pub source: VertexSource,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SideShape {
    Circle { center: C, radius: f64 },
    Diameter,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DocSide {
    pub label: usize,
    pub start: usize,
    pub end: usize,
    pub shape: SideShape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DocPairing {
    pub name: String,
    pub word: String,
    pub from_side: usize,
    pub to_side: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub pass: bool,
    pub pairings: bool,
    pub cycles: bool,
    pub angles_agree: bool,
    pub disjoint: bool,
    pub error: Option<String>,
}

impl From<&PoincareReport> for Verdicts {
    fn from(r: &PoincareReport) -> Self {
        Verdicts {
            pass: r.pass(),
            pairings: !r.pairings.is_empty() && r.pairings.iter().all(|p| p.pass()),
            cycles: !r.cycles.is_empty() && r.cycles.iter().all(|c| c.pass) && r.missing_named_cycles.is_empty(),
            angles_agree: r.angles_agree(),
            disjoint: r.disjoint(),
            error: r.error.as_ref().map(|e| e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub case: String,
    pub p: u32,
    /// Index of the base mirror's polar.
    pub base: usize,
    pub chart: ChartBasis,
    pub vertices: Vec<DocVertex>,
    pub boundary: Vec<usize>,
    pub ccw: bool,
    pub sides: Vec<DocSide>,
    pub pairings: Vec<DocPairing>,
    pub named_cycles: Vec<Vec<usize>>,
    pub cycles: Vec<CycleSummary>,
    pub verdicts: Verdicts,
}

impl PolygonDocument {
    pub fn new(case: CaseId, data: &CaseData, poly: &FuchsianPolygon, report: &PoincareReport) -> Self {
        let vertices = poly
            .vertices
            .iter()
            .zip(&data.vertices)
            .map(|(v, spec)| DocVertex {
                label: v.label,
                z: c(v.z),
                ideal: v.ideal,
                resolution: v.resolution.tag().into(),
                source: match spec {
                    VertexSpec::Lift { word, polar } => VertexSource::Lift { word: word.clone(), polar: *polar },
                    VertexSpec::FixedPoint { word } => VertexSource::FixedPoint { word: word.clone() },
                },
            })
            .collect();
        let sides = poly
            .sides
            .iter()
            .map(|s| DocSide {
                label: s.label,
                start: s.start,
                end: s.end,
                shape: match s.segment.shape {
                    SegmentShape::Circle { center, radius } => SideShape::Circle { center: c(center), radius },
                    SegmentShape::Diameter => SideShape::Diameter,
                },
            })
            .collect();
        PolygonDocument {
            case: case.to_string(),
            p: case.p,
            base: data.base,
            chart: ChartBasis { neg: vec3(&poly.chart.basis_neg), pos: vec3(&poly.chart.basis_pos) },
            vertices,
            boundary: poly.boundary.clone(),
            ccw: poly.ccw,
            sides,
            pairings: data
                .pairings
                .iter()
                .map(|s| DocPairing { name: s.name.clone(), word: s.word.clone(), from_side: s.from_side, to_side: s.to_side })
                .collect(),
            named_cycles: data.named_cycles.clone(),
            cycles: report.cycles.iter().map(CycleSummary::from).collect(),
            verdicts: Verdicts::from(report),
        }
    }

    pub fn case_id(&self) -> Result<CaseId, CliError> {
        Ok(self.case.parse()?)
    }

    /// The polygon data described by the document.
    pub fn case_data(&self) -> CaseData {
        CaseData {
            base: self.base,
            vertices: self
                .vertices
                .iter()
                .map(|v| match &v.source {
                    VertexSource::Lift { word, polar } => VertexSpec::Lift { word: word.clone(), polar: *polar },
                    VertexSource::FixedPoint { word } => VertexSpec::FixedPoint { word: word.clone() },
                })
                .collect(),
            boundary: self.boundary.clone(),
            sides: self.sides.iter().map(|s| (s.start, s.end)).collect(),
            pairings: self
                .pairings
                .iter()
                .map(|s| SidePairing { name: s.name.clone(), word: s.word.clone(), from_side: s.from_side, to_side: s.to_side })
                .collect(),
            named_cycles: self.named_cycles.clone(),
        }
    }

    /// Rebuild the polygon in the stored chart and verify it again.
    pub fn reverify(&self, cfg: &RunConfig) -> Result<PoincareReport, CliError> {
        let case = self.case_id()?;
        let g = case.family.group_family().group_with(case.p, cfg.tol)?;
        let data = self.case_data();
        let base = ComplexGeodesic::new(g.polar(data.base), g.form())?;
        let chart = DiskChart::from_basis(&base, unvec3(&self.chart.neg), unvec3(&self.chart.pos), g.form())?;
        let poly = build_polygon_in_chart(&g, &data, &chart)?;
        Ok(verify_polygon_with(&g, poly, &data, cfg.max_order))
    }
}

/// Build, verify and describe the polygon of a case.
pub fn polygon_document(case: CaseId, cfg: &RunConfig) -> Result<PolygonDocument, CliError> {
    let g = case.family.group_family().group_with(case.p, cfg.tol)?;
    let report = poincare_verify_with(&g, case, cfg.max_order);
    let poly = match (&report.polygon, &report.error) {
        (Some(p), _) => p,
        (None, Some(e)) => return Err(e.clone().into()),
        (None, None) => unreachable!("a report without a polygon carries an error"),
    };
    Ok(PolygonDocument::new(case, &case.family.data(), poly, &report))
}
