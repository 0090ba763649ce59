//! Side pairings, vertex cycles and the checks of the Poincaré polygon
//! theorem.

use std::collections::HashSet;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::groups::TriangleGroup;
use crate::isometry::{classify_isometry, order_by_powering, Isometry, IsometryClass, DEFAULT_MAX_ORDER};
use crate::plane::Mobius;

use super::case::{CaseData, CaseId, SidePairing};
use super::polygon::{build_polygon, build_polygon_in_chart, FuchsianPolygon, VertexAngle};

/// Projective matching tolerance for vertex images.
pub const ENDPOINT_TOL: f64 = 1e-8;
/// `|order · angle sum − 2π|` bound for elliptic cycles.
pub const CYCLE_TOL: f64 = 1e-5;
/// Agreement of the two angle routes.
pub const ANGLE_ROUTE_TOL: f64 = 1e-6;
/// Side of the sample lattice used for the disjointness check.
pub const GRID: usize = 32;
const PRESERVE_TOL: f64 = 1e-8;
const MOBIUS_TOL: f64 = 1e-8;
const PARABOLIC_TRACE_TOL: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct PairingCheck {
    pub name: String,
    pub word: String,
    pub from_side: usize,
    pub to_side: usize,
    /// The element fixes the base polar projectively.
    pub preserves_base: bool,
    /// Images of the from-side endpoints: `(vertex, image vertex)`.
    pub endpoint_map: Option<[(usize, usize); 2]>,
    /// Sample points of the polygon land beyond the target side, for the
    /// element and for its inverse.
    pub disjoint: bool,
    pub failure: Option<String>,
}

impl PairingCheck {
    pub fn pass(&self) -> bool {
        self.preserves_base && self.endpoint_map.is_some() && self.disjoint
    }
}

#[derive(Clone, Debug)]
pub struct CycleReport {
    /// Vertex labels in cycle order.
    pub members: Vec<usize>,
    /// Cycle transformation as a product of pairing names, left to right.
    pub word: String,
    pub angle_sum: f64,
    pub ideal: bool,
    /// Order of the action on the base geodesic.
    pub restricted_order: Option<u32>,
    pub ambient_order: Option<u32>,
    pub class: Option<IsometryClass>,
    /// `|tr|²/det` of the restricted action.
    pub trace_invariant: f64,
    /// Matches a cycle listed for the case.
    pub named: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug)]
pub struct PoincareReport {
    pub case: Option<CaseId>,
    pub polygon: Option<FuchsianPolygon>,
    pub angles: Vec<VertexAngle>,
    pub pairings: Vec<PairingCheck>,
    pub cycles: Vec<CycleReport>,
    pub missing_named_cycles: Vec<Vec<usize>>,
    /// The first error that stopped the verification.
    pub error: Option<Error>,
    /// Bound on the disagreement of the two angle routes.
    pub angle_tol: f64,
}

impl PoincareReport {
    pub fn angles_agree(&self) -> bool {
        self.angles.iter().all(|a| a.discrepancy().is_none_or(|d| d <= self.angle_tol))
    }

    pub fn disjoint(&self) -> bool {
        self.pairings.iter().all(|p| p.disjoint)
    }

    pub fn pass(&self) -> bool {
        self.error.is_none()
            && self.polygon.is_some()
            && !self.pairings.is_empty()
            && self.pairings.iter().all(PairingCheck::pass)
            && !self.cycles.is_empty()
            && self.cycles.iter().all(|c| c.pass)
            && self.missing_named_cycles.is_empty()
            && self.angles_agree()
    }

    fn failed(case: Option<CaseId>, polygon: Option<FuchsianPolygon>, error: Error) -> Self {
        PoincareReport {
            case,
            polygon,
            angles: vec![],
            pairings: vec![],
            cycles: vec![],
            missing_named_cycles: vec![],
            error: Some(error),
            angle_tol: ANGLE_ROUTE_TOL,
        }
    }
}

fn matching_vertex(poly: &FuchsianPolygon, image: &crate::linalg::Vector3) -> Option<usize> {
    poly.boundary.iter().copied().find(|&l| poly.vertices[l].point.lift.proportional(image, ENDPOINT_TOL))
}

/// Whether every sample point is carried strictly beyond the geodesic of
/// side `target`.
fn lands_beyond(poly: &FuchsianPolygon, m: &Mobius, target: usize, samples: &[crate::linalg::Complex]) -> bool {
    let inward = poly.inward_sign(target);
    let seg = poly.side(target).segment;
    samples.iter().all(|&q| seg.side_value(m.apply(q)) * inward < 0.0)
}

/// Check each pairing: it preserves the base geodesic, carries the
/// from-side's endpoints onto the to-side's, and moves the polygon off
/// itself across the to-side (its inverse across the from-side).
pub fn verify_pairings(poly: &FuchsianPolygon, pairings: &[SidePairing], g: &TriangleGroup) -> Result<Vec<PairingCheck>> {
    let samples = poly.sample_grid(GRID);
    let mut out = Vec::with_capacity(pairings.len());
    for s in pairings {
        let m = g.eval(&s.word)?;
        let mut check = PairingCheck {
            name: s.name.clone(),
            word: s.word.clone(),
            from_side: s.from_side,
            to_side: s.to_side,
            preserves_base: m.preserves(&poly.base, PRESERVE_TOL),
            endpoint_map: None,
            disjoint: false,
            failure: None,
        };
        if !check.preserves_base {
            check.failure = Some("does not preserve the base geodesic".into());
            out.push(check);
            continue;
        }
        let from = poly.side(s.from_side);
        let to = poly.side(s.to_side);
        let images = [from.start, from.end].map(|v| matching_vertex(poly, &m.apply(&poly.vertices[v].point.lift)));
        let targets = [to.start, to.end];
        match images {
            [Some(a), Some(b)] if (a, b) == (targets[0], targets[1]) || (a, b) == (targets[1], targets[0]) => {
                check.endpoint_map = Some([(from.start, a), (from.end, b)]);
            }
            _ => {
                let show = |x: Option<usize>| x.map_or("off-polygon".to_string(), |l| format!("x{l}"));
                check.failure = Some(format!(
                    "x{} -> {}, x{} -> {}; expected x{}, x{}",
                    from.start,
                    show(images[0]),
                    from.end,
                    show(images[1]),
                    to.start,
                    to.end
                ));
                out.push(check);
                continue;
            }
        }
        let r = m.restrict(&poly.chart)?;
        check.disjoint = !samples.is_empty()
            && lands_beyond(poly, &r, s.to_side, &samples)
            && lands_beyond(poly, &r.inverse(), s.from_side, &samples);
        if !check.disjoint {
            check.failure = Some("image of the polygon overlaps the polygon".into());
        }
        out.push(check);
    }
    Ok(out)
}

struct SideMove {
    name: String,
    element: Isometry,
    target: usize,
    map: [(usize, usize); 2],
}

/// Follow side pairings around the vertices to find the vertex cycles, and
/// check the angle condition (or, at ideal vertices, parabolicity).
pub fn analyze_cycles(
    poly: &FuchsianPolygon,
    pairings: &[SidePairing],
    checks: &[PairingCheck],
    g: &TriangleGroup,
    named: &[Vec<usize>],
) -> Result<Vec<CycleReport>> {
    analyze_cycles_with(poly, pairings, checks, g, named, DEFAULT_MAX_ORDER)
}

pub fn analyze_cycles_with(
    poly: &FuchsianPolygon,
    pairings: &[SidePairing],
    checks: &[PairingCheck],
    g: &TriangleGroup,
    named: &[Vec<usize>],
    max_order: u32,
) -> Result<Vec<CycleReport>> {
    let mut moves: Vec<Option<SideMove>> = (0..=poly.sides.len()).map(|_| None).collect();
    for (s, c) in pairings.iter().zip(checks) {
        let map = c.endpoint_map.ok_or_else(|| Error::PairingFailed {
            side: s.from_side,
            report: c.failure.clone().unwrap_or_default(),
        })?;
        let m = g.eval(&s.word)?;
        moves[s.from_side] = Some(SideMove { name: s.name.clone(), element: m, target: s.to_side, map });
        moves[s.to_side] = Some(SideMove {
            name: format!("{}'", s.name),
            element: m.inverse(),
            target: s.from_side,
            map: map.map(|(a, b)| (b, a)),
        });
    }
    let angles = poly.angles()?;
    let angle_of = |l: usize| angles.iter().find(|a| a.label == l).map_or(0.0, |a| a.arc);
    let sides_at = |v: usize| -> Vec<usize> {
        poly.sides.iter().filter(|s| s.start == v || s.end == v).map(|s| s.label).collect()
    };
    let limit = 4 * poly.vertices.len();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut cycles = Vec::new();
    for &v0 in &poly.boundary {
        let s0 = *sides_at(v0).first().ok_or(Error::CycleClosureFailure { vertex: v0 })?;
        if seen.contains(&(v0, s0)) {
            continue;
        }
        let (mut v, mut s) = (v0, s0);
        let mut members = Vec::new();
        let mut names = Vec::new();
        let mut t = Isometry::identity(g.form());
        let mut angle_sum = 0.0;
        loop {
            seen.insert((v, s));
            members.push(v);
            angle_sum += angle_of(v);
            let mv = moves[s].as_ref().ok_or(Error::CycleClosureFailure { vertex: v })?;
            t = mv.element.compose(&t);
            names.push(mv.name.clone());
            let next = mv.map.iter().find(|(a, _)| *a == v).map(|&(_, b)| b).ok_or(Error::CycleClosureFailure { vertex: v })?;
            seen.insert((next, mv.target));
            let other = sides_at(next).into_iter().find(|&q| q != mv.target).ok_or(Error::CycleClosureFailure { vertex: next })?;
            v = next;
            s = other;
            if (v, s) == (v0, s0) {
                break;
            }
            if members.len() > limit {
                return Err(Error::CycleClosureFailure { vertex: v0 });
            }
        }
        names.reverse();
        let word = names.join(" ");
        let restricted = t.restrict(&poly.chart)?;
        let restricted_order = restricted.order_by_powering(max_order, MOBIUS_TOL);
        let ambient_order = order_by_powering(&t, max_order);
        let trace_invariant = restricted.trace_invariant();
        let ideal_count = members.iter().filter(|&&l| poly.vertices[l].ideal).count();
        let mut set = members.clone();
        set.sort_unstable();
        set.dedup();
        let is_named = named.iter().any(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c == set
        });
        let mut report = CycleReport {
            members: members.clone(),
            word,
            angle_sum,
            ideal: ideal_count == members.len(),
            restricted_order,
            ambient_order,
            class: None,
            trace_invariant,
            named: is_named,
            pass: false,
            failure: None,
        };
        if ideal_count != 0 && ideal_count != members.len() {
            report.failure = Some("cycle mixes ideal and interior vertices".into());
        } else if report.ideal {
            match classify_isometry(&t) {
                Ok(class) => {
                    report.class = Some(class);
                    let parabolic_on_disk = (trace_invariant - 4.0).abs() <= PARABOLIC_TRACE_TOL;
                    report.pass = class.is_parabolic() && parabolic_on_disk;
                    if !report.pass {
                        report.failure = Some(format!("ideal cycle transformation is {class}"));
                    }
                }
                Err(e) => report.failure = Some(e.to_string()),
            }
        } else {
            report.class = classify_isometry(&t).ok();
            match restricted_order {
                Some(o) if (o as f64 * angle_sum - 2.0 * PI).abs() <= CYCLE_TOL => report.pass = true,
                Some(o) => {
                    report.failure = Some(Error::AngleSumMismatch { angle_sum, order: o }.to_string());
                }
                None => report.failure = Some("cycle transformation has no finite order on the geodesic".into()),
            }
        }
        cycles.push(report);
    }
    Ok(cycles)
}

/// Run every check of the Poincaré polygon theorem for a catalog case.
/// Mathematical failures are recorded in the report, never raised.
pub fn poincare_verify(g: &TriangleGroup, case: CaseId) -> PoincareReport {
    poincare_verify_with(g, case, DEFAULT_MAX_ORDER)
}

pub fn poincare_verify_with(g: &TriangleGroup, case: CaseId, max_order: u32) -> PoincareReport {
    let data = case.family.data();
    match build_polygon(g, case) {
        Ok(poly) => verify_polygon_with(g, poly, &data, max_order),
        Err(e) => PoincareReport::failed(Some(case), None, e),
    }
}

/// As [`poincare_verify`], with explicit case data (used to run modified
/// catalog entries) in the default chart.
pub fn poincare_verify_data(g: &TriangleGroup, data: &CaseData) -> PoincareReport {
    let built = crate::plane::ComplexGeodesic::new(g.polar(data.base), g.form())
        .and_then(|base| crate::plane::disk_chart(&base, g.form()))
        .and_then(|chart| build_polygon_in_chart(g, data, &chart));
    match built {
        Ok(poly) => verify_polygon(g, poly, data),
        Err(e) => PoincareReport::failed(None, None, e),
    }
}

/// Checks on an already built polygon.
pub fn verify_polygon(g: &TriangleGroup, poly: FuchsianPolygon, data: &CaseData) -> PoincareReport {
    verify_polygon_with(g, poly, data, DEFAULT_MAX_ORDER)
}

pub fn verify_polygon_with(g: &TriangleGroup, poly: FuchsianPolygon, data: &CaseData, max_order: u32) -> PoincareReport {
    let case = poly.case;
    let angles = match poly.angles() {
        Ok(a) => a,
        Err(e) => return PoincareReport::failed(case, Some(poly), e),
    };
    let pairings = match verify_pairings(&poly, &data.pairings, g) {
        Ok(p) => p,
        Err(e) => return PoincareReport::failed(case, Some(poly), e),
    };
    let mut report = PoincareReport {
        case,
        polygon: None,
        angles,
        pairings,
        cycles: vec![],
        missing_named_cycles: vec![],
        error: None,
        angle_tol: g.form().tol().angle,
    };
    if let Some((s, c)) = data.pairings.iter().zip(&report.pairings).find(|(_, c)| !c.pass()) {
        report.error = Some(Error::PairingFailed { side: s.from_side, report: c.failure.clone().unwrap_or_default() });
        report.polygon = Some(poly);
        return report;
    }
    match analyze_cycles_with(&poly, &data.pairings, &report.pairings, g, &data.named_cycles, max_order) {
        Ok(cycles) => {
            report.missing_named_cycles = data
                .named_cycles
                .iter()
                .filter(|n| {
                    let mut n = (*n).clone();
                    n.sort_unstable();
                    !cycles.iter().any(|c| {
                        let mut m = c.members.clone();
                        m.sort_unstable();
                        m.dedup();
                        m == n
                    })
                })
                .cloned()
                .collect();
            report.cycles = cycles;
        }
        Err(e) => report.error = Some(e),
    }
    report.polygon = Some(poly);
    report
}
