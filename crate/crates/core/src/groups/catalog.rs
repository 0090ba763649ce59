//! Built-in lattice parameters and ambient presentations.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{cis, Complex, Tolerances};

use super::group::{sporadic_group_with, thompson_group_with, TriangleGroup};
use super::presentation::{ExponentFormula as F, Presentation};
use super::word::GroupKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Tau1,
    Tau2,
    Tau3,
    Tau4,
    S2,
    E2,
    /// E₂ with σ exactly as tabulated, `e^{−2πi/3}`.
    E2Literal,
    H1,
    H2,
}

/// Triangle data `(a, b, c; d)` and the order of `123` for Thompson rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThompsonTableRow {
    pub abcd: (u32, u32, u32, u32),
    pub order_123: u32,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Tau1,
        Family::Tau2,
        Family::Tau3,
        Family::Tau4,
        Family::S2,
        Family::E2,
        Family::E2Literal,
        Family::H1,
        Family::H2,
    ];

    pub fn kind(&self) -> GroupKind {
        match self {
            Family::Tau1 | Family::Tau2 | Family::Tau3 | Family::Tau4 => GroupKind::Sporadic,
            _ => GroupKind::Thompson,
        }
    }

    /// Name used in catalog IDs.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Tau1 => "tau1",
            Family::Tau2 => "tau2",
            Family::Tau3 => "tau3",
            Family::Tau4 => "tau4",
            Family::S2 => "S2",
            Family::E2 => "E2",
            Family::E2Literal => "E2-literal",
            Family::H1 => "H1",
            Family::H2 => "H2",
        }
    }

    /// Positive values of `p` giving lattices. H₁ and H₂ are also lattices
    /// at `p = −7` and `p = −5` with conjugated parameters; those are not
    /// built.
    pub fn lattice_ps(&self) -> &'static [u32] {
        match self {
            Family::Tau1 => &[3, 4, 6],
            Family::Tau2 => &[3, 4, 5, 6, 8, 12],
            Family::Tau3 => &[2, 3, 4],
            Family::Tau4 => &[3, 4, 5, 10],
            Family::S2 => &[3, 4, 5],
            Family::E2 | Family::E2Literal => &[3, 4, 6, 12],
            Family::H1 => &[2],
            Family::H2 => &[2, 3, 5, 10],
        }
    }

    /// `τ` for sporadic families.
    pub fn tau(&self) -> Option<Complex> {
        let s5 = 5f64.sqrt();
        match self {
            Family::Tau1 => Some(Complex::new(-1.0, 2f64.sqrt())),
            Family::Tau2 => Some(Complex::new(-0.5, -7f64.sqrt() / 2.0)),
            Family::Tau3 => Some(cis(-PI / 9.0) * (-cis(-2.0 * PI / 3.0) - (1.0 - s5) / 2.0)),
            Family::Tau4 => Some(Complex::new((1.0 + s5) / 2.0, 0.0)),
            _ => None,
        }
    }

    /// `(ρ, σ, τ)` for Thompson families.
    pub fn thompson_params(&self) -> Option<(Complex, Complex, Complex)> {
        let s2 = Complex::new(2f64.sqrt(), 0.0);
        let one = Complex::new(1.0, 0.0);
        match self {
            Family::S2 => Some((one + cis(2.0 * PI / 3.0) * ((1.0 + 5f64.sqrt()) / 2.0), one, one)),
            Family::E2 => Some((s2, cis(PI / 3.0), s2)),
            Family::E2Literal => Some((s2, cis(-2.0 * PI / 3.0), s2)),
            Family::H1 => {
                let s = cis(-4.0 * PI / 7.0);
                Some((Complex::new(-0.5, 7f64.sqrt() / 2.0), s, s))
            }
            Family::H2 => {
                let s = cis(4.0 * PI / 5.0);
                Some((-one - cis(-2.0 * PI / 5.0), s, s))
            }
            _ => None,
        }
    }

    pub fn table_row(&self) -> Option<ThompsonTableRow> {
        let row = |a, b, c, d, o| Some(ThompsonTableRow { abcd: (a, b, c, d), order_123: o });
        match self {
            Family::S2 => row(3, 3, 4, 5, 5),
            Family::E2 | Family::E2Literal => row(3, 4, 4, 4, 6),
            Family::H1 => row(3, 3, 4, 7, 42),
            Family::H2 => row(3, 3, 5, 5, 15),
            _ => None,
        }
    }

    /// Build the group at any `p ≥ 2`, lattice or not.
    pub fn group(&self, p: u32) -> Result<TriangleGroup> {
        self.group_with(p, Tolerances::default())
    }

    pub fn group_with(&self, p: u32, tol: Tolerances) -> Result<TriangleGroup> {
        if p < 2 {
            return Err(Error::NonCatalogParameter { family: self.name().into(), p });
        }
        if let Some(tau) = self.tau() {
            sporadic_group_with(p, tau, tol)
        } else {
            let (rho, sigma, tau) = self.thompson_params().expect("thompson family");
            thompson_group_with(p, rho, sigma, tau, tol)
        }
    }

    /// The ambient presentation, for the families that have one.
    pub fn presentation(&self) -> Option<Presentation> {
        let sporadic = |rj: u32| {
            Presentation {
                generators: ["R1", "R2", "R3", "J"].map(String::from).to_vec(),
                ..Default::default()
            }
            .relator("1", F::P)
            .relator("J", F::Constant(3))
            .relator("1 J", F::Constant(rj))
            .equality("3", "J 2 J'")
            .equality("3", "J' 1 J")
        };
        let thompson = |o123: u32| {
            Presentation { generators: ["R1", "R2", "R3"].map(String::from).to_vec(), ..Default::default() }
                .relator("1", F::P)
                .relator("2", F::P)
                .relator("3", F::P)
                .relator("1 2 3", F::Constant(o123))
        };
        match self {
            Family::Tau1 => Some(
                sporadic(8)
                    .relator("1 2", F::rational(3, 1, -3))
                    .braid("1", "2 3 2 3' 2'", 3)
                    .braid("1", "2", 6)
                    .braid("1", "2 3 2'", 4)
                    .relator("1 2 3 2'", F::rational(4, 1, -4))
                    .braid("1", "3' 2' 3 2 3", 3),
            ),
            Family::Tau2 => Some(
                sporadic(7)
                    .relator("1 2", F::rational(4, 1, -4))
                    .braid("1", "2", 4)
                    .relator("1 2 3 2'", F::rational(6, 1, -6))
                    .braid("1", "2 3 2'", 3),
            ),
            Family::Tau4 => Some(
                sporadic(5)
                    .braid("1", "2", 5)
                    .relator("1 2", F::rational(10, 3, -10))
                    .braid("1", "2 3 2'", 3)
                    .relator("1 2 3 2'", F::rational(6, 1, -6)),
            ),
            Family::S2 => Some(
                thompson(5)
                    .braid("1", "3", 3)
                    .braid("2", "3", 3)
                    .braid("1", "2", 4)
                    .relator("1 2", F::rational(4, 1, -4))
                    .braid("1", "2 3 2'", 5)
                    .relator("1 2 3 2'", F::rational(10, 3, -10)),
            ),
            Family::E2 | Family::E2Literal => Some(
                thompson(6)
                    .braid("2", "3", 3)
                    .braid("3", "1", 4)
                    .relator("1 3", F::rational(4, 1, -4))
                    .braid("1", "2", 4)
                    .relator("1 2", F::rational(4, 1, -4))
                    .braid("1", "2 3 2'", 4)
                    .relator("1 2 3 2'", F::rational(4, 1, -4))
                    .braid("3", "1 2 1'", 6)
                    .relator("3 1 2 1'", F::rational(3, 1, -3)),
            ),
            Family::Tau3 | Family::H1 | Family::H2 => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.into()))
    }
}

/// A catalog entry: a family at one of its lattice values of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub family: Family,
    pub p: u32,
}

impl GroupId {
    pub fn new(family: Family, p: u32) -> Result<Self> {
        if !family.lattice_ps().contains(&p) {
            return Err(Error::NonCatalogParameter { family: family.name().into(), p });
        }
        Ok(GroupId { family, p })
    }

    pub fn group(&self) -> Result<TriangleGroup> {
        self.family.group(self.p)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.family.kind() {
            GroupKind::Sporadic => "sporadic",
            GroupKind::Thompson => "thompson",
        };
        write!(f, "{kind}:{}:p{}", self.family.name(), self.p)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses `sporadic:tau1:p3` or `thompson:S2:p5`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownId(s.into());
        let parts: Vec<&str> = s.split(':').collect();
        let [kind, family, p] = parts[..] else { return Err(unknown()) };
        let family: Family = family.parse().map_err(|_| unknown())?;
        let expected = match family.kind() {
            GroupKind::Sporadic => "sporadic",
            GroupKind::Thompson => "thompson",
        };
        if !kind.eq_ignore_ascii_case(expected) {
            return Err(unknown());
        }
        let p: u32 = p.strip_prefix('p').and_then(|d| d.parse().ok()).ok_or_else(unknown)?;
        GroupId::new(family, p)
    }
}

/// Every catalog entry in catalog order.
pub fn catalog_ids() -> Vec<GroupId> {
    Family::ALL
        .iter()
        .flat_map(|&family| family.lattice_ps().iter().map(move |&p| GroupId { family, p }))
        .collect()
}

/// Look up and build a catalog group by string ID.
pub fn catalog_group(id: &str) -> Result<TriangleGroup> {
    id.parse::<GroupId>()?.group()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in catalog_ids() {
            assert_eq!(id.to_string().parse::<GroupId>().unwrap(), id);
        }
        assert_eq!("thompson:E2:p12".parse::<GroupId>().unwrap(), GroupId { family: Family::E2, p: 12 });
        assert!(matches!("sporadic:tau1:p5".parse::<GroupId>(), Err(Error::NonCatalogParameter { p: 5, .. })));
        assert!(matches!("sporadic:S2:p3".parse::<GroupId>(), Err(Error::UnknownId(_))));
        assert!(matches!("nonsense".parse::<GroupId>(), Err(Error::UnknownId(_))));
    }

    #[test]
    fn ambient_presentations() {
        use crate::groups::{verify_presentation, RelatorStatus};
        for id in catalog_ids() {
            if id.family == Family::E2Literal {
                continue;
            }
            let Some(pres) = id.family.presentation() else { continue };
            let report = verify_presentation(&id.group().unwrap(), &pres).unwrap();
            if id == (GroupId { family: Family::E2, p: 12 }) {
                // (3 1 2 1')^{|3p/(p-3)|} asks for order 4; the element has order 12.
                let bad: Vec<_> = report.relators.iter().filter(|r| !r.status.passes()).collect();
                assert_eq!(bad.len(), 1);
                assert_eq!(bad[0].word, "3 1 2 1'");
                assert_eq!(bad[0].measured_order, Some(12));
                assert!(report.braids.iter().all(|b| b.holds));
            } else {
                assert!(report.pass(), "{id}: {report:?}");
            }
        }
        let t1 = verify_presentation(&Family::Tau1.group(3).unwrap(), &Family::Tau1.presentation().unwrap()).unwrap();
        let r12 = t1.relators.iter().find(|r| r.word == "1 2").unwrap();
        assert_eq!(r12.status, RelatorStatus::Removed);
    }

    #[test]
    fn literal_e2_row_fails_its_presentation() {
        let g = Family::E2Literal.group(4).unwrap();
        let report = crate::groups::verify_presentation(&g, &Family::E2.presentation().unwrap()).unwrap();
        assert!(!report.pass());
        assert!(matches!(Family::E2Literal.group(12), Err(Error::WrongSignature { plus: 1, minus: 2, .. })));
    }

    #[test]
    fn order_of_123_matches_table() {
        for f in [Family::S2, Family::E2] {
            let row = f.table_row().unwrap();
            for &p in f.lattice_ps() {
                let m = f.group(p).unwrap().eval("Q").unwrap();
                assert_eq!(crate::isometry::projective_order(&m, 100), Some(row.order_123), "{f} p={p}");
            }
        }
    }
}
