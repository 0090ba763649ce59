//! One line per acceptance criterion. Criteria listed in `KNOWN_RED` are
//! reported as they measure; the test fails if any verdict changes.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::io::Write;
use std::process::Command;

use cherbolic_core::domains::{
    expand_pairing_word, poincare_verify, poincare_verify_data, verify_subgroup_presentation_data, CaseData, CaseId,
};
use cherbolic_core::groups::{
    sporadic_group, thompson_group, verify_presentation, Family, Generator, GroupKind, Letter, TriangleGroup,
};
use cherbolic_core::isometry::{
    classify_isometry, order_by_eigenvalues, order_by_powering, projective_order, proj_equal_with, IsometryClass,
};
use cherbolic_core::linalg::{Complex, Vector3};
use cherbolic_core::plane::{bergman_distance, disk_chart, disk_distance, ComplexGeodesic};
use rand::{Rng, SeedableRng};

const TOL_WORD: f64 = 1e-9;
const TOL_ANGLE_SUM: f64 = 1e-5;
const TOL_IDEAL: f64 = 1e-6;
const TOL_DISTANCE: f64 = 1e-8;
const TOL_ANGLE_ROUTES: f64 = 1e-6;
const ORDER_BOUND: u32 = 2000;
const PAIRS_PER_CASE: usize = 1000;
const TAU_SHIFT: f64 = 1e-3;

/// Criteria that do not hold as stated; see the decisions ledger.
const KNOWN_RED: [u32; 5] = [1, 4, 6, 7, 9];

const FAMILIES: [Family; 5] = [Family::Tau1, Family::Tau2, Family::Tau4, Family::S2, Family::E2];

fn groups() -> Vec<(Family, u32, TriangleGroup)> {
    FAMILIES.iter().flat_map(|&f| f.lattice_ps().iter().map(move |&p| (f, p, f.group(p).unwrap()))).collect()
}

fn case(id: CaseId) -> (TriangleGroup, CaseData) {
    (id.family.group_family().group(id.p).unwrap(), id.family.data())
}

struct Line {
    n: u32,
    pass: bool,
    text: String,
}

fn line(n: u32, pass: bool, text: String) -> Line {
    Line { n, pass, text }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    if xs.is_empty() {
        "none".into()
    } else {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    }
}

fn criterion_1() -> Line {
    let mut failed = Vec::new();
    let mut clauses = 0;
    for (f, p, g) in groups() {
        let r = verify_presentation(&g, &f.presentation().unwrap()).unwrap();
        clauses += r.relators.len() + r.braids.len() + r.equalities.len();
        let bad: Vec<String> = r
            .relators
            .iter()
            .filter(|x| !x.status.passes())
            .map(|x| x.word.clone())
            .chain(r.braids.iter().filter(|b| !b.holds).map(|b| format!("br{}({},{})", b.n, b.a, b.b)))
            .chain(r.equalities.iter().filter(|e| !e.holds).map(|e| format!("{}={}", e.lhs, e.rhs)))
            .collect();
        if !bad.is_empty() {
            failed.push(format!("{}:p{} [{}]", f.name(), p, bad.join("; ")));
        }
    }
    line(1, failed.is_empty(), format!("ambient presentations, 20 groups, {clauses} clauses, tol {TOL_WORD:e}; failing: {}", list(&failed)))
}

fn criterion_2() -> Line {
    let mut bad = Vec::new();
    let mut checks = 0;
    for (f, p, g) in groups() {
        let expect = match f {
            Family::Tau1 => Some(("1 J", 8)),
            Family::Tau2 => Some(("1 J", 7)),
            Family::Tau4 => Some(("1 J", 5)),
            Family::S2 => Some(("1 2 3", 5)),
            Family::E2 => Some(("1 2 3", 6)),
            _ => None,
        };
        let (w, n) = expect.unwrap();
        checks += 1;
        let got = projective_order(&g.eval(w).unwrap(), ORDER_BOUND);
        if got != Some(n) {
            bad.push(format!("{}:p{} o({w}) = {got:?}, want {n}", f.name(), p));
        }
        if f == Family::E2 {
            checks += 1;
            let q3 = g.eval("(1 2 3)^3").unwrap();
            let class = classify_isometry(&q3).unwrap();
            let order = projective_order(&q3, ORDER_BOUND);
            if !matches!(class, IsometryClass::ComplexReflection(_)) || order != Some(2) {
                bad.push(format!("E2:p{p} Q^3 is {class} of order {order:?}"));
            }
        }
    }
    line(2, bad.is_empty(), format!("special orders, {checks} checks; failing: {}", list(&bad)))
}

fn criterion_3() -> Line {
    let mut bad = Vec::new();
    for (f, p, g) in groups() {
        let det = g.form().matrix().det();
        if !(det.re < 0.0 && det.im.abs() <= 1e-12 * det.norm()) || !g.form().signature().is_lorentzian() {
            bad.push(format!("{}:p{} det {det}", f.name(), p));
        }
    }
    line(3, bad.is_empty(), format!("det(H) < 0 and signature (2,1,0) for 20 groups; failing: {}", list(&bad)))
}

fn criterion_4() -> Line {
    let mut bad = Vec::new();
    for id in CaseId::all() {
        let (g, _) = case(id);
        let r = poincare_verify(&g, id);
        if !r.pass() {
            let why = r
                .error
                .as_ref()
                .map(|e| e.to_string())
                .or_else(|| r.cycles.iter().find(|c| !c.pass).and_then(|c| c.failure.clone()))
                .unwrap_or_default();
            bad.push(format!("{id} ({why})"));
        }
    }
    line(4, bad.is_empty(), format!("Poincaré verification, 24 cases; failing: {}", list(&bad)))
}

fn criterion_5() -> Line {
    let id: CaseId = "tau1:p3".parse().unwrap();
    let (g, _) = case(id);
    let r = poincare_verify(&g, id);
    let c = r.cycles.iter().find(|c| {
        let mut m = c.members.clone();
        m.sort();
        m == [6, 8]
    });
    let (pass, text) = match c {
        Some(c) => {
            let dev = (c.angle_sum - 2.0 * PI / 6.0).abs();
            (
                dev <= TOL_ANGLE_SUM && c.restricted_order == Some(6),
                format!("angle sum - 2π/6 = {dev:.2e} (tol {TOL_ANGLE_SUM:e}), order {:?}", c.restricted_order),
            )
        }
        None => (false, "cycle {x6,x8} not found".into()),
    };
    line(5, pass, format!("tau1 p3 cycle {{x6,x8}}: {text}"))
}

fn criterion_6() -> Line {
    let id: CaseId = "tau1:p6".parse().unwrap();
    let (g, _) = case(id);
    let r = poincare_verify(&g, id);
    let poly = r.polygon.as_ref().unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for x in [0, 5] {
        let v = &poly.vertices[x];
        let off = (v.z.norm() - 1.0).abs();
        let class = r.cycles.iter().find(|c| c.members.contains(&x)).and_then(|c| c.class);
        let ok = v.ideal && off <= TOL_IDEAL && class == Some(IsometryClass::ElliptoParabolic);
        pass &= ok;
        parts.push(format!(
            "x{x}: ideal {}, ||z|-1| {off:.1e}, cycle {}",
            v.ideal,
            class.map_or("none".into(), |c| c.to_string())
        ));
    }
    line(6, pass, format!("tau1 p6 ideal vertices (tol {TOL_IDEAL:e}): {}", parts.join("; ")))
}

/// `(label, family, case for pairing names, lhs, rhs, counted)`.
type Identity = (&'static str, Family, Option<&'static str>, &'static str, &'static str, bool);

const IDENTITIES: [Identity; 9] = [
    ("tau1 (123)^3 = 1J", Family::Tau1, None, "(1 2 3)^3", "1 J", true),
    ("tau2 g2^2 = 1'", Family::Tau2, Some("tau2"), "g2 g2", "1'", true),
    ("tau2 g1 g3 g2 = 1^3 (2 3' 2' 1')^3", Family::Tau2, Some("tau2"), "g1 g3 g2", "1^3 (2 3' 2' 1')^3", true),
    ("tau4 g3 g2 = 1^5 (1' 3')^5", Family::Tau4, Some("tau4"), "g3 g2", "1^5 (1' 3')^5", true),
    ("tau4 g1' g3 = (1 2 3 2')^3", Family::Tau4, Some("tau4"), "g1' g3", "(1 2 3 2')^3", true),
    ("tau4 g1' g3 = (1 2 3' 2)^3 [as listed]", Family::Tau4, Some("tau4"), "g1' g3", "(1 2 3' 2)^3", false),
    ("S2 g2 g3' = 1^3 (2 3' 2' 1')^2", Family::S2, Some("s2"), "g2 g3'", "1^3 (2 3' 2' 1')^2", true),
    ("E2-L3 h2 h4 h3 = 3^6 (3' 1 2' 1')", Family::E2, Some("e2_l3"), "h2 h4 h3", "3^6 (3' 1 2' 1')", true),
    ("E2-L3 h2 h4 h3 = 3^6 (3' 1 2' 1')^3", Family::E2, Some("e2_l3"), "h2 h4 h3", "3^6 (3' 1 2' 1')^3", false),
];

fn identity_holds(f: Family, case: Option<&str>, lhs: &str, rhs: &str) -> Vec<u32> {
    let lhs = match case {
        Some(c) => expand_pairing_word(lhs, &c.parse::<cherbolic_core::domains::CaseFamily>().unwrap().data().pairings).unwrap(),
        None => lhs.to_string(),
    };
    f.lattice_ps()
        .iter()
        .copied()
        .filter(|&p| {
            let g = f.group(p).unwrap();
            !proj_equal_with(&g.eval(&lhs).unwrap(), &g.eval(rhs).unwrap(), TOL_WORD)
        })
        .collect()
}

/// `n₁ ⊠ a·nᵢ ∝ n₁ ⊠ b·nⱼ` when `vertex` is set, `a·nᵢ ∝ b·nⱼ` otherwise.
fn endpoint_holds(f: Family, a: &str, i: usize, b: &str, j: usize, vertex: bool) -> Vec<u32> {
    f.lattice_ps()
        .iter()
        .copied()
        .filter(|&p| {
            let g = f.group(p).unwrap();
            let u = g.eval(a).unwrap().apply(&g.polar(i));
            let v = g.eval(b).unwrap().apply(&g.polar(j));
            let (u, v): (Vector3, Vector3) = if vertex {
                (g.form().box_product(&g.polar(0), &u), g.form().box_product(&g.polar(0), &v))
            } else {
                (u, v)
            };
            !u.proportional(&v, TOL_WORD)
        })
        .collect()
}

fn criterion_7() -> (Line, Vec<String>) {
    let mut pass = true;
    let mut failing = Vec::new();
    let mut info = Vec::new();
    for (label, f, c, lhs, rhs, counted) in IDENTITIES {
        let bad = identity_holds(f, c, lhs, rhs);
        let verdict = if bad.is_empty() { "holds".to_string() } else { format!("fails at p = {}", list(&bad)) };
        if counted {
            pass &= bad.is_empty();
            if !bad.is_empty() {
                failing.push(label);
            }
            info.push(format!("  {label}: {verdict}"));
        } else {
            info.push(format!("  {label} (informational): {verdict}"));
        }
    }
    let endpoints = [
        ("tau1 g4 endpoint, vertex on L1", endpoint_holds(Family::Tau1, "(1 2 3 2')^2 (1 2)^3 2' 1'", 2, "2 3", 1, true)),
        ("E2 h4 endpoint", endpoint_holds(Family::E2, "(2 3 1 3' 2' 3)^2 (2 3)^3 2' 1", 2, "3^4 1' 3'", 1, false)),
    ];
    for (label, bad) in endpoints {
        pass &= bad.is_empty();
        if !bad.is_empty() {
            failing.push(label);
        }
        info.push(format!("  {label}: {}", if bad.is_empty() { "holds".into() } else { format!("fails at p = {}", list(&bad)) }));
    }
    (line(7, pass, format!("word identities, tol {TOL_WORD:e}; failing: {}", list(&failing))), info)
}

fn catalog_words() -> Vec<(Family, u32, String)> {
    let mut out = Vec::new();
    for &f in &FAMILIES {
        let pres = f.presentation().unwrap();
        for &p in f.lattice_ps() {
            for r in &pres.relators {
                out.push((f, p, r.word.clone()));
            }
            for b in &pres.braids {
                out.push((f, p, b.a.clone()));
                out.push((f, p, b.b.clone()));
            }
            for e in &pres.equalities {
                out.push((f, p, e.lhs.clone()));
                out.push((f, p, e.rhs.clone()));
            }
        }
    }
    for id in CaseId::all() {
        let data = id.family.data();
        let f = id.family.group_family();
        for s in &data.pairings {
            out.push((f, id.p, s.word.clone()));
        }
        for r in id.family.subgroup_presentation_formulas(id.p).relators {
            out.push((f, id.p, expand_pairing_word(&r.word, &data.pairings).unwrap()));
        }
    }
    for (_, f, c, lhs, rhs, _) in IDENTITIES {
        for &p in f.lattice_ps() {
            let lhs = match c {
                Some(c) => expand_pairing_word(lhs, &c.parse::<cherbolic_core::domains::CaseFamily>().unwrap().data().pairings).unwrap(),
                None => lhs.to_string(),
            };
            out.push((f, p, lhs));
            out.push((f, p, rhs.to_string()));
        }
    }
    out
}

fn criterion_8() -> Line {
    let words = catalog_words();
    let mut order_bad = Vec::new();
    for (f, p, w) in &words {
        let m = f.group(*p).unwrap().eval(w).unwrap();
        let (a, b) = (order_by_powering(&m, ORDER_BOUND), order_by_eigenvalues(&m, ORDER_BOUND));
        if a != b {
            order_bad.push(format!("{}:p{p} {w}: {a:?} vs {b:?}", f.name()));
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut worst_distance = 0f64;
    let mut angle_worst = 0f64;
    let mut angles = 0;
    for id in CaseId::all() {
        let (g, data) = case(id);
        let base = ComplexGeodesic::new(g.polar(data.base), g.form()).unwrap();
        let chart = disk_chart(&base, g.form()).unwrap();
        let mut sample = || {
            let r = 0.95 * rng.gen::<f64>().sqrt();
            Complex::from_polar(r, rng.gen_range(0.0..2.0 * PI))
        };
        for _ in 0..PAIRS_PER_CASE {
            let (a, b) = (sample(), sample());
            let d = bergman_distance(&chart.point(a).unwrap(), &chart.point(b).unwrap(), g.form()).unwrap();
            worst_distance = worst_distance.max((d - disk_distance(a, b)).abs());
        }
        let r = poincare_verify(&g, id);
        for a in &r.angles {
            if let Some(d) = a.discrepancy() {
                angles += 1;
                angle_worst = angle_worst.max(d);
            }
        }
    }
    let pass = order_bad.is_empty() && worst_distance <= TOL_DISTANCE && angle_worst <= TOL_ANGLE_ROUTES;
    line(
        8,
        pass,
        format!(
            "oracles: orders agree on {}/{} words (bound {ORDER_BOUND}); distance max dev {worst_distance:.1e} over {} pairs (tol {TOL_DISTANCE:e}); angle routes max dev {angle_worst:.1e} over {angles} vertices (tol {TOL_ANGLE_ROUTES:e}){}",
            words.len() - order_bad.len(),
            words.len(),
            24 * PAIRS_PER_CASE,
            if order_bad.is_empty() { String::new() } else { format!("; disagreeing: {}", list(&order_bad)) }
        ),
    )
}

/// Each letter deleted, inverted, or replaced by another generator.
fn corruptions(g: &TriangleGroup, word: &str) -> Vec<String> {
    let w = g.parse(word).unwrap();
    let gens: &[Generator] = match g.kind() {
        GroupKind::Sporadic => &[Generator::R1, Generator::R2, Generator::R3, Generator::J],
        GroupKind::Thompson => &[Generator::R1, Generator::R2, Generator::R3],
    };
    let mut out = Vec::new();
    for i in 0..w.len() {
        out.push(w.without_letter(i).to_string());
        let mut x = w.clone();
        x.letters[i] = x.letters[i].inverse();
        out.push(x.to_string());
        for &gen in gens.iter().filter(|&&gen| gen != w.letters[i].generator) {
            let mut x = w.clone();
            x.letters[i] = Letter { generator: gen, inverted: w.letters[i].inverted };
            out.push(x.to_string());
        }
    }
    out
}

fn same_on_base(g: &TriangleGroup, data: &CaseData, a: &str, b: &str) -> bool {
    let base = ComplexGeodesic::new(g.polar(data.base), g.form()).unwrap();
    let chart = disk_chart(&base, g.form()).unwrap();
    let (Ok(ma), Ok(mb)) = (g.eval(a), g.eval(b)) else { return false };
    let (Ok(ra), Ok(rb)) = (ma.restrict(&chart), mb.restrict(&chart)) else { return false };
    ra.compose(&rb.inverse()).is_projective_identity(1e-8)
}

fn perturbed(f: Family, p: u32) -> cherbolic_core::Result<TriangleGroup> {
    let d = Complex::new(TAU_SHIFT, 0.0);
    match (f.tau(), f.thompson_params()) {
        (Some(tau), _) => sporadic_group(p, tau + d),
        (None, Some((rho, sigma, tau))) => thompson_group(p, rho, sigma, tau + d),
        _ => unreachable!(),
    }
}

fn criterion_9() -> (Line, Vec<String>) {
    let mut tried = 0;
    let mut survivors = Vec::new();
    let mut equivalent = 0;
    for id in CaseId::all() {
        let (g, data) = case(id);
        for (k, pairing) in data.pairings.iter().enumerate() {
            for bad in corruptions(&g, &pairing.word) {
                let mut d = data.clone();
                d.pairings[k].word = bad.clone();
                tried += 1;
                if !poincare_verify_data(&g, &d).pass() {
                    continue;
                }
                if !verify_subgroup_presentation_data(&g, id, &d, ORDER_BOUND).is_ok_and(|s| s.pass()) {
                    continue;
                }
                equivalent += usize::from(same_on_base(&g, &data, &pairing.word, &bad));
                survivors.push(format!("{id} {}: {bad}", pairing.name));
            }
        }
    }
    let mut tau_survivors = Vec::new();
    for (f, p, _) in groups() {
        let Ok(g) = perturbed(f, p) else { continue };
        if verify_presentation(&g, &f.presentation().unwrap()).is_ok_and(|r| r.pass()) {
            tau_survivors.push(format!("{}:p{p} ambient", f.name()));
        }
    }
    for id in CaseId::all() {
        let Ok(g) = perturbed(id.family.group_family(), id.p) else { continue };
        if poincare_verify(&g, id).pass() {
            tau_survivors.push(format!("{id} polygon"));
        }
    }
    let pass = survivors.is_empty() && tau_survivors.is_empty();
    let info = vec![
        format!("  {} of {tried} single-letter corruptions still verify; {equivalent} of them act on the base geodesic exactly as the original", survivors.len()),
        format!("  first survivors: {}", list(&survivors.iter().take(5).collect::<Vec<_>>())),
        format!("  tau + {TAU_SHIFT:e}: verifications still passing: {}", list(&tau_survivors)),
    ];
    (
        line(
            9,
            pass,
            format!("negative controls: {} of {tried} corruptions caught, {} perturbed verifications pass", tried - survivors.len(), tau_survivors.len()),
        ),
        info,
    )
}

fn criterion_10() -> Line {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cherbolic"))
            .args(["verify", "all", "--json"])
            .env_remove("CHERBOLIC_TOL_ALG")
            .output()
            .unwrap()
            .stdout
    };
    let (a, b) = (run(), run());
    line(10, !a.is_empty() && a == b, format!("determinism: two `verify all --json` runs, {} and {} bytes, identical {}", a.len(), b.len(), a == b))
}

#[test]
fn acceptance() {
    let (c7, info7) = criterion_7();
    let (c9, info9) = criterion_9();
    let lines = [
        (criterion_1(), vec![]),
        (criterion_2(), vec![]),
        (criterion_3(), vec![]),
        (criterion_4(), vec![]),
        (criterion_5(), vec![]),
        (criterion_6(), vec![]),
        (c7, info7),
        (criterion_8(), vec![]),
        (c9, info9),
        (criterion_10(), vec![]),
    ];
    // Written past the test harness capture so the table shows in plain
    // `cargo test` output.
    let mut out = std::io::stderr().lock();
    let mut red = BTreeSet::new();
    for (l, info) in &lines {
        let known = if KNOWN_RED.contains(&l.n) && !l.pass { "  [known red]" } else { "" };
        writeln!(out, "criterion {:>2}: {} {}{known}", l.n, if l.pass { "PASS" } else { "FAIL" }, l.text).unwrap();
        for i in info {
            writeln!(out, "{i}").unwrap();
        }
        if !l.pass {
            red.insert(l.n);
        }
    }
    assert_eq!(red, KNOWN_RED.into_iter().collect(), "criterion verdicts changed");
}
