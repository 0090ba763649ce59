//! Catalog of polygon cases: vertex lifts, sides, side pairings, named
//! cycles and subgroup presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::{ExponentFormula as F, Family, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseFamily {
    Tau1,
    Tau2,
    Tau4,
    S2L1,
    E2L1,
    E2L3,
}

impl CaseFamily {
    pub const ALL: [CaseFamily; 6] =
        [CaseFamily::Tau1, CaseFamily::Tau2, CaseFamily::Tau4, CaseFamily::S2L1, CaseFamily::E2L1, CaseFamily::E2L3];

    pub fn name(&self) -> &'static str {
        match self {
            CaseFamily::Tau1 => "tau1",
            CaseFamily::Tau2 => "tau2",
            CaseFamily::Tau4 => "tau4",
            CaseFamily::S2L1 => "s2_l1",
            CaseFamily::E2L1 => "e2_l1",
            CaseFamily::E2L3 => "e2_l3",
        }
    }

    /// The ambient group family.
    pub fn group_family(&self) -> Family {
        match self {
            CaseFamily::Tau1 => Family::Tau1,
            CaseFamily::Tau2 => Family::Tau2,
            CaseFamily::Tau4 => Family::Tau4,
            CaseFamily::S2L1 => Family::S2,
            CaseFamily::E2L1 | CaseFamily::E2L3 => Family::E2,
        }
    }

    pub fn lattice_ps(&self) -> &'static [u32] {
        self.group_family().lattice_ps()
    }

    /// Index of the polar of the stabilised mirror.
    pub fn base(&self) -> usize {
        match self {
            CaseFamily::E2L3 => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for CaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        let alias = match key.as_str() {
            "s2" => "s2_l1",
            other => other,
        };
        CaseFamily::ALL.into_iter().find(|c| c.name() == alias).ok_or_else(|| Error::UnknownId(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub family: CaseFamily,
    pub p: u32,
}

impl CaseId {
    pub fn new(family: CaseFamily, p: u32) -> Result<Self> {
        if !family.lattice_ps().contains(&p) {
            return Err(Error::NonCatalogParameter { family: family.name().into(), p });
        }
        Ok(CaseId { family, p })
    }

    /// All polygon cases in catalog order.
    pub fn all() -> Vec<CaseId> {
        CaseFamily::ALL
            .iter()
            .flat_map(|&family| family.lattice_ps().iter().map(move |&p| CaseId { family, p }))
            .collect()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:p{}", self.family, self.p)
    }
}

impl FromStr for CaseId {
    type Err = Error;

    /// Parses `tau1:p3`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownId(s.into());
        let (family, p) = s.split_once(':').ok_or_else(unknown)?;
        let family: CaseFamily = family.parse()?;
        let p: u32 = p.strip_prefix('p').unwrap_or(p).parse().map_err(|_| unknown())?;
        CaseId::new(family, p)
    }
}

/// How a polygon vertex is obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum VertexSpec {
    /// From `w = n_base ⊠ (word · n_polar)`.
    Lift { word: String, polar: usize },
    /// The fixed point in the disk of the element's action on the base
    /// geodesic.
    FixedPoint { word: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SidePairing {
    pub name: String,
    pub word: String,
    /// 1-based side labels.
    pub from_side: usize,
    pub to_side: usize,
}

/// Static polygon data for one case family. Vertex `j` is `x_j`; side `i`
/// (1-based) joins `sides[i - 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseData {
    pub base: usize,
    pub vertices: Vec<VertexSpec>,
    /// Vertex labels in boundary order.
    pub boundary: Vec<usize>,
    pub sides: Vec<(usize, usize)>,
    pub pairings: Vec<SidePairing>,
    /// Cycles (as vertex sets) that must be among the discovered cycles.
    pub named_cycles: Vec<Vec<usize>>,
}

fn lifts(list: &[(&str, usize)]) -> Vec<VertexSpec> {
    list.iter().map(|&(w, k)| VertexSpec::Lift { word: w.into(), polar: k }).collect()
}

fn lift(word: &str, polar: usize) -> VertexSpec {
    VertexSpec::Lift { word: word.into(), polar }
}

fn fixed(word: &str) -> VertexSpec {
    VertexSpec::FixedPoint { word: word.into() }
}

fn cyclic_sides(n: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|i| ((i - 1) % n, i % n)).collect()
}

fn pairings(list: &[(&str, &str, usize, usize)]) -> Vec<SidePairing> {
    list.iter()
        .map(|&(name, word, from_side, to_side)| SidePairing { name: name.into(), word: word.into(), from_side, to_side })
        .collect()
}

/// Sides of the hexagons with a fixed-point vertex `x₀` inserted between
/// `x₁` and `x₂`.
const X0_HEXAGON_SIDES: [(usize, usize); 6] = [(1, 0), (0, 2), (2, 3), (3, 4), (4, 5), (5, 1)];

impl CaseFamily {
    pub fn data(&self) -> CaseData {
        match self {
            CaseFamily::Tau1 => CaseData {
                base: 0,
                vertices: lifts(&[
                    ("3'2'", 2),
                    ("3'", 1),
                    ("3'231", 2),
                    ("", 2),
                    ("31", 1),
                    ("2'1'", 2),
                    ("2'1'3121", 1),
                    ("", 1),
                    ("2", 2),
                    ("23", 1),
                ]),
                boundary: (0..10).collect(),
                sides: cyclic_sides(10),
                pairings: pairings(&[
                    ("g1", "(1 3' 2 3)^2", 1, 2),
                    ("g2", "(1 3)^3", 3, 4),
                    ("g3", "(1 2)^3", 7, 8),
                    ("g4", "(1 2 3 2')^2 (1 2)^3", 6, 9),
                    ("g5", "(1 2 3 2 3' 2')^3 (1 2 3 2')^2 (1 2)^3", 5, 10),
                ]),
                named_cycles: vec![vec![0, 2, 4], vec![5, 9], vec![6, 8]],
            },
            CaseFamily::Tau2 => CaseData {
                base: 0,
                vertices: vec![fixed("2 3 2' P P"), lift("2", 2), lift("3'", 1), lift("", 2), lift("3 1", 1), lift("", 1)],
                boundary: vec![0, 2, 3, 4, 5, 1],
                sides: X0_HEXAGON_SIDES.to_vec(),
                pairings: pairings(&[("g1", "(1 2)^2", 5, 6), ("g2", "2 3 2' P P", 1, 2), ("g3", "(1 3)^2", 3, 4)]),
                named_cycles: vec![vec![1, 2, 4]],
            },
            CaseFamily::Tau4 => CaseData {
                base: 0,
                vertices: lifts(&[("3'2'", 2), ("3'", 1), ("", 2), ("3 1", 1), ("", 1), ("2", 2)]),
                boundary: (0..6).collect(),
                sides: cyclic_sides(6),
                pairings: pairings(&[
                    ("g1", "1 3' 2' 3 2 3", 6, 1),
                    ("g2", "1 3 1 2 1' 3'", 3, 4),
                    ("g3", "(1 3' 2 3)^3 1 3' 2' 3 2 3", 5, 2),
                ]),
                named_cycles: vec![vec![1, 5], vec![2, 4]],
            },
            CaseFamily::S2L1 => CaseData {
                base: 0,
                vertices: vec![
                    fixed("3' 1' Q' 2 Q Q Q 1 3"),
                    lift("3' 1' 2'", 0),
                    lift("3' 1' 2' 1", 2),
                    lift("3' 1'", 1),
                    lift("3' 1' 2 3", 0),
                    lift("3' 1' 2 3 1 2", 2),
                    lift("3' 1' 3' 2 3 1 2 3 2'", 0),
                    lift("", 2),
                    lift("", 1),
                    lift("2", 2),
                ],
                boundary: (0..10).collect(),
                sides: cyclic_sides(10),
                pairings: pairings(&[
                    ("g1", "(1 3)^3", 7, 8),
                    ("g2", "(1 3' 1' 2 1 3)^3", 3, 4),
                    ("g3", "(1 3' 1' 2 3 1 3' 2' 1 3)^2 (1 3' 1' 2 1 3)^3", 2, 5),
                    ("g4", "(1 2)^2 (1 3)^3", 6, 9),
                    ("g5", "3' 1' Q' 2 Q Q Q 1 3", 10, 1),
                ]),
                named_cycles: vec![vec![2, 4]],
            },
            CaseFamily::E2L1 => CaseData {
                base: 0,
                vertices: vec![fixed("3 Q Q Q 3'"), lift("3 1", 1), lift("2' 1'", 2), lift("", 1), lift("2", 2), lift("", 2)],
                boundary: vec![1, 0, 2, 3, 4, 5],
                sides: X0_HEXAGON_SIDES.to_vec(),
                pairings: pairings(&[("g1", "3 Q Q Q 3'", 1, 2), ("g2", "(1 2)^2", 3, 4), ("g3", "(1 3)^2", 5, 6)]),
                named_cycles: vec![vec![1, 2, 4]],
            },
            CaseFamily::E2L3 => CaseData {
                base: 2,
                vertices: lifts(&[
                    ("", 1),
                    ("2 3", 0),
                    ("1' 3'", 1),
                    ("", 0),
                    ("1", 1),
                    ("2'", 0),
                    ("2' 1", 2),
                    ("2' 3' 2'", 0),
                ]),
                boundary: (0..8).collect(),
                sides: cyclic_sides(8),
                pairings: pairings(&[
                    ("h1", "(2 3)^3", 8, 1),
                    ("h2", "(1 3)^2", 3, 4),
                    ("h3", "(2' 1 2 3)^2", 5, 6),
                    ("h4", "(2 3 1 3' 2' 3)^2 (2 3)^3", 7, 2),
                ]),
                named_cycles: vec![vec![2, 4, 6]],
            },
        }
    }

    /// Presentation of the stabiliser, in the pairing names. Relator words
    /// are products of pairing names with `'` for inverses.
    pub fn subgroup_presentation_formulas(&self, p: u32) -> Presentation {
        let r = F::rational;
        let (names, rels): (&[&str], Vec<(&str, F)>) = match self {
            CaseFamily::Tau1 if p == 6 => (
                &["g1", "g2", "g3", "g4", "g5"],
                vec![("g1", F::Constant(6)), ("g2", F::Constant(2)), ("g3", F::Constant(2)), ("g4 g3'", F::Constant(6))],
            ),
            CaseFamily::Tau1 => (
                &["g1", "g2", "g3", "g4", "g5"],
                vec![
                    ("g1", r(2, 1, -4)),
                    ("g2", r(1, 1, -3)),
                    ("g3", r(1, 1, -3)),
                    ("g5 g2 g1", r(2, 1, -2)),
                    ("g5 g4'", r(2, 1, -6)),
                    ("g4 g3'", r(2, 1, -4)),
                ],
            ),
            CaseFamily::Tau2 => (
                &["g1", "g2", "g3"],
                vec![("g1", r(2, 1, -4)), ("g2", r(2, 0, 1)), ("g3", r(2, 1, -4)), ("g1 g3 g2", r(2, 1, -6))],
            ),
            CaseFamily::Tau4 => (
                &["g1", "g2", "g3"],
                vec![("g1", F::P), ("g2", F::P), ("g3 g2", r(2, 3, -10)), ("g3' g1", r(2, 1, -6))],
            ),
            CaseFamily::S2L1 => (
                &["g1", "g2", "g3", "g4", "g5"],
                vec![
                    ("g1", r(2, 1, -6)),
                    ("g2", r(2, 1, -6)),
                    ("g5", r(2, 0, 1)),
                    ("g2 g3'", r(2, 1, -4)),
                    ("g1 g4'", r(2, 1, -4)),
                ],
            ),
            CaseFamily::E2L1 => (
                &["g1", "g2", "g3"],
                vec![("g1", F::Constant(2)), ("g2", r(2, 1, -4)), ("g3", r(2, 1, -4)), ("g2 g1' g3", r(2, 1, -4))],
            ),
            CaseFamily::E2L3 => (
                &["h1", "h2", "h3", "h4"],
                vec![
                    ("h1", r(2, 1, -6)),
                    ("h2", r(2, 1, -4)),
                    ("h3", r(2, 1, -4)),
                    ("h4 h1'", r(2, 1, -4)),
                    ("h2 h4 h3", r(1, 1, -3)),
                ],
            ),
        };
        let mut pres = Presentation { generators: names.iter().map(|s| s.to_string()).collect(), ..Default::default() };
        for (w, e) in rels {
            pres = pres.relator(w, e);
        }
        pres
    }
}

/// Expand a word in pairing names (`"g5 g4'"`) into an ambient word by
/// substituting each pairing's word.
pub fn expand_pairing_word(word: &str, pairings: &[SidePairing]) -> Result<String> {
    let mut out = Vec::new();
    for token in word.split_whitespace() {
        let (name, inverse) = match token.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (token, false),
        };
        let pairing = pairings.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownId(token.into()))?;
        out.push(format!("({}){}", pairing.word, if inverse { "'" } else { "" }));
    }
    Ok(out.join(" "))
}
