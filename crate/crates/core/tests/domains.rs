use std::f64::consts::PI;

use cherbolic_core::domains::*;
use cherbolic_core::groups::{sporadic_group, thompson_group, Family, RelatorStatus, TriangleGroup};
use cherbolic_core::isometry::{proj_equal, IsometryClass};
use cherbolic_core::linalg::Complex;
use cherbolic_core::plane::{disk_chart, ComplexGeodesic, DiskChart};
use cherbolic_core::Error;

fn case(id: &str) -> (CaseId, TriangleGroup) {
    let id: CaseId = id.parse().unwrap();
    let g = id.family.group_family().group(id.p).unwrap();
    (id, g)
}

fn cycle<'a>(r: &'a PoincareReport, members: &[usize]) -> &'a CycleReport {
    let mut want = members.to_vec();
    want.sort();
    r.cycles
        .iter()
        .find(|c| {
            let mut m = c.members.clone();
            m.sort();
            m == want
        })
        .unwrap_or_else(|| panic!("no cycle {members:?}"))
}

fn pairing<'a>(r: &'a PoincareReport, name: &str) -> &'a PairingCheck {
    r.pairings.iter().find(|p| p.name == name).unwrap()
}

#[test]
fn every_case_except_e2_l3_p12_passes() {
    for id in CaseId::all() {
        let g = id.family.group_family().group(id.p).unwrap();
        let r = poincare_verify(&g, id);
        let expected = id.to_string() != "e2_l3:p12";
        assert_eq!(r.pass(), expected, "{id}: {:?}", r.error);
        assert!(r.disjoint(), "{id}");
        assert!(r.angles_agree(), "{id}");
    }
}

#[test]
fn tau1_p3_small_cycle() {
    let (id, g) = case("tau1:p3");
    let r = poincare_verify(&g, id);
    let c = cycle(&r, &[6, 8]);
    assert!((c.angle_sum - 2.0 * PI / 6.0).abs() < 1e-5, "{}", c.angle_sum);
    assert_eq!(c.restricted_order, Some(6));
    assert!(c.pass);
}

#[test]
fn tau1_p3_pairings_g4_g5() {
    let (id, g) = case("tau1:p3");
    let r = poincare_verify(&g, id);
    let g4 = pairing(&r, "g4");
    assert_eq!((g4.from_side, g4.to_side), (6, 9));
    let mut m = g4.endpoint_map.unwrap().to_vec();
    m.sort();
    assert_eq!(m, vec![(5, 9), (6, 8)]);
    let g5 = pairing(&r, "g5");
    assert!(g5.endpoint_map.unwrap().contains(&(4, 0)));
    assert!(g5.pass());
}

#[test]
fn tau1_p3_vertex_classes() {
    let (id, g) = case("tau1:p3");
    let poly = build_polygon(&g, id).unwrap();
    let ideal: Vec<usize> = poly.vertices.iter().filter(|v| v.ideal).map(|v| v.label).collect();
    assert_eq!(ideal, vec![3, 7]);
    for v in &poly.vertices {
        assert_eq!(v.ideal, (v.z.norm() - 1.0).abs() < 1e-6, "x{}", v.label);
    }
}

#[test]
fn tau1_p6_ideal_vertices() {
    let (id, g) = case("tau1:p6");
    let r = poincare_verify(&g, id);
    let poly = r.polygon.as_ref().unwrap();
    for l in [0, 2, 4, 5, 9] {
        assert!(poly.vertex(l).ideal, "x{l}");
        assert!((poly.vertex(l).z.norm() - 1.0).abs() < 1e-6);
    }
    assert_eq!(cycle(&r, &[0, 2, 4]).class, Some(IsometryClass::ElliptoParabolic));
    // g₄⁻¹g₅ has a single eigenvalue: unipotent, not ellipto-parabolic.
    assert_eq!(cycle(&r, &[5, 9]).class, Some(IsometryClass::UnipotentParabolic));
}

#[test]
fn tau2_p3_cycle() {
    let (id, g) = case("tau2:p3");
    let r = poincare_verify(&g, id);
    let c = cycle(&r, &[1, 2, 4]);
    assert_eq!(c.restricted_order, Some(2));
    assert!((c.angle_sum - PI).abs() < 1e-5);
    // g₂ turns L₁ by π about x₀ while having ambient order 2p.
    let x0 = cycle(&r, &[0]);
    assert_eq!((x0.restricted_order, x0.ambient_order), (Some(2), Some(6)));
}

#[test]
fn e2_l3_p4_is_an_octagon() {
    let (id, g) = case("e2_l3:p4");
    let poly = build_polygon(&g, id).unwrap();
    assert_eq!(poly.len(), 8);
    assert!(poly.base.polar.proportional(&g.polar(2), 1e-12));
}

#[test]
fn e2_l3_p12_angle_sum_fails() {
    let (id, g) = case("e2_l3:p12");
    let r = poincare_verify(&g, id);
    let c = cycle(&r, &[2, 4, 6]);
    assert!((c.angle_sum - 1.5 * PI).abs() < 1e-6);
    assert_eq!(c.restricted_order, Some(4));
    assert!(!c.pass);
    assert!(matches!(verify_subgroup_presentation(&g, id), Err(Error::NonIntegerExponent { p: 12, .. })));
}

#[test]
fn subgroup_presentations() {
    for id in CaseId::all() {
        let g = id.family.group_family().group(id.p).unwrap();
        match verify_subgroup_presentation(&g, id) {
            Ok(s) => assert!(s.pass(), "{id}: {s:?}"),
            Err(e) => assert_eq!(id.to_string(), "e2_l3:p12", "{e}"),
        }
    }
    let (id, g) = case("tau1:p3");
    let s = verify_subgroup_presentation(&g, id).unwrap();
    assert!(s.relators.iter().all(|r| matches!(r.status, RelatorStatus::Holds | RelatorStatus::Removed)), "{s:?}");
    let (id, g) = case("tau4:p10");
    let s = verify_subgroup_presentation(&g, id).unwrap();
    let r = s.relators.iter().find(|r| r.word == "g3 g2").unwrap();
    assert_eq!(r.status, RelatorStatus::HoldsOnGeodesic);
    let (id, g) = case("tau2:p6");
    assert!(!verify_subgroup_presentation(&g, id).unwrap().removed().is_empty());
}

#[test]
fn verdicts_do_not_depend_on_the_chart() {
    for id in CaseId::all() {
        let g = id.family.group_family().group(id.p).unwrap();
        let data = id.family.data();
        let reference = poincare_verify(&g, id);
        let base = ComplexGeodesic::new(g.polar(data.base), g.form()).unwrap();
        let default = disk_chart(&base, g.form()).unwrap();
        let poly = reference.polygon.as_ref().unwrap();
        let inner = poly.vertices.iter().find(|v| !v.ideal).unwrap().point;
        let charts = [default.rotated(1.234), DiskChart::centered_at(&base, &inner, g.form()).unwrap().rotated(-0.4)];
        for chart in charts {
            let moved = build_polygon_in_chart(&g, &data, &chart).unwrap();
            for (a, b) in moved.vertices.iter().zip(&poly.vertices) {
                assert_eq!(a.resolution, b.resolution, "{id} x{}", a.label);
            }
            let r = verify_polygon(&g, moved, &data);
            assert_eq!(r.pass(), reference.pass(), "{id}");
            assert_eq!(r.cycles.len(), reference.cycles.len(), "{id}");
            for c in &reference.cycles {
                let d = cycle(&r, &c.members);
                assert!((c.angle_sum - d.angle_sum).abs() < 1e-8, "{id} {:?}", c.members);
                assert_eq!(c.restricted_order, d.restricted_order);
            }
        }
    }
}

/// Pairing words with one letter removed or inverted.
fn corruptions(g: &TriangleGroup, word: &str) -> Vec<String> {
    let w = g.parse(word).unwrap();
    let mut out = Vec::new();
    for i in 0..w.len() {
        out.push(w.without_letter(i).to_string());
        let mut inv = w.clone();
        inv.letters[i] = inv.letters[i].inverse();
        out.push(inv.to_string());
    }
    out
}

/// Whether two elements act identically on the base geodesic.
fn same_on_base(g: &TriangleGroup, data: &CaseData, a: &str, b: &str) -> bool {
    let base = ComplexGeodesic::new(g.polar(data.base), g.form()).unwrap();
    let chart = disk_chart(&base, g.form()).unwrap();
    let (Ok(ma), Ok(mb)) = (g.eval(a), g.eval(b)) else { return false };
    let (Ok(ra), Ok(rb)) = (ma.restrict(&chart), mb.restrict(&chart)) else { return false };
    ra.compose(&rb.inverse()).is_projective_identity(1e-8)
}

#[test]
fn corrupted_pairing_words_fail_unless_equivalent_on_the_base() {
    let mut tried = 0;
    let mut caught = 0;
    for id in CaseId::all() {
        let g = id.family.group_family().group(id.p).unwrap();
        let data = id.family.data();
        for (k, pairing) in data.pairings.iter().enumerate() {
            for bad in corruptions(&g, &pairing.word) {
                let mut d = data.clone();
                d.pairings[k].word = bad.clone();
                tried += 1;
                let sub = verify_subgroup_presentation_data(&g, id, &d, 2000).is_ok_and(|s| s.pass());
                if poincare_verify_data(&g, &d).pass() && sub {
                    assert!(same_on_base(&g, &data, &pairing.word, &bad), "{id} {}: {bad}", pairing.name);
                } else {
                    caught += 1;
                }
            }
        }
    }
    println!("caught {caught} of {tried} corruptions");
    assert!(tried > 500);
    assert!(caught * 10 > tried * 7, "{caught}/{tried}");
}

pub fn perturbed(family: Family, p: u32, delta: f64) -> cherbolic_core::Result<TriangleGroup> {
    let d = Complex::new(delta, 0.0);
    match (family.tau(), family.thompson_params()) {
        (Some(tau), _) => sporadic_group(p, tau + d),
        (None, Some((rho, sigma, tau))) => thompson_group(p, rho, sigma, tau + d),
        _ => unreachable!(),
    }
}

#[test]
fn perturbed_tau_fails() {
    for id in CaseId::all() {
        let Ok(g) = perturbed(id.family.group_family(), id.p, 1e-3) else { continue };
        assert!(!poincare_verify(&g, id).pass(), "{id}");
    }
}

#[test]
fn pairing_words_preserve_the_base() {
    for id in CaseId::all() {
        let g = id.family.group_family().group(id.p).unwrap();
        let data = id.family.data();
        let base = ComplexGeodesic::new(g.polar(data.base), g.form()).unwrap();
        for pr in &data.pairings {
            let m = g.eval(&pr.word).unwrap();
            assert!(m.preserves(&base, 1e-8), "{id} {}", pr.name);
            let back = g.eval(&format!("({})'", pr.word)).unwrap();
            assert!(proj_equal(&m.compose(&back), &cherbolic_core::isometry::Isometry::identity(g.form())));
        }
    }
}
