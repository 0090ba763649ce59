//! Fundamental polygons of the stabilisers of a mirror, their verification
//! by the Poincaré polygon theorem, and the resulting presentations.

mod case;
mod poincare;
mod polygon;
mod subgroup;

pub use case::{expand_pairing_word, CaseData, CaseFamily, CaseId, SidePairing, VertexSpec};
pub use poincare::{
    analyze_cycles, analyze_cycles_with, poincare_verify, poincare_verify_data, poincare_verify_with, verify_pairings, verify_polygon,
    verify_polygon_with,
    CycleReport, PairingCheck, PoincareReport, ANGLE_ROUTE_TOL, CYCLE_TOL, ENDPOINT_TOL, GRID,
};
pub use polygon::{build_polygon, build_polygon_in_chart, FuchsianPolygon, PolygonSide, PolygonVertex, VertexAngle, VertexResolution};
pub use subgroup::{
    subgroup_presentation, verify_subgroup_presentation, verify_subgroup_presentation_data, verify_subgroup_presentation_with, SubgroupRelatorReport,
    SubgroupReport,
};
