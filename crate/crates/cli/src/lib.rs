//! Command-line front end: catalog listing, word evaluation, case
//! verification reports, polygon documents and SVG figures.

mod config;
mod document;
mod report;
mod svg;

use std::io::Write;
use std::path::Path;

use cherbolic_core::domains::{CaseFamily, CaseId};
use cherbolic_core::groups::{Family, GroupKind};
use cherbolic_core::isometry::{classify_isometry, order_by_powering};
use serde::{Deserialize, Serialize};

pub use config::{RunConfig, TOL_ALG_ENV};
pub use document::{
    polygon_document, ChartBasis, DocPairing, DocSide, DocVertex, PolygonDocument, SideShape, Verdicts, VertexSource,
};
pub use report::{
    verify_case, verify_cases, AmbientClause, AngleSummary, CaseReport, CycleSummary, PairingSummary, PoincareSummary,
    PolygonSummary, SubgroupRelatorSummary, SubgroupSummary, VertexSummary, C,
};
pub use svg::render_svg;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cherbolic_core::Error),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Variant name, for structured error output.
    pub fn kind(&self) -> String {
        match self {
            CliError::Core(e) => format!("{e:?}").split([' ', '(', '{']).next().unwrap_or("Core").to_string(),
            CliError::InvalidConfig(_) => "InvalidConfig".into(),
            CliError::Io { .. } => "Io".into(),
            CliError::Json(_) => "Json".into(),
        }
    }
}

/// Group families filter for `list`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindFilter {
    All,
    Sporadic,
    Thompson,
}

impl KindFilter {
    fn admits(&self, kind: GroupKind) -> bool {
        match self {
            KindFilter::All => true,
            KindFilter::Sporadic => kind == GroupKind::Sporadic,
            KindFilter::Thompson => kind == GroupKind::Thompson,
        }
    }
}

fn ps(list: &[u32]) -> String {
    list.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Catalog families with their lattice values of `p`, then the polygon
/// cases.
pub fn list_text(filter: KindFilter) -> String {
    let mut out = String::new();
    for (kind, title) in [(GroupKind::Sporadic, "sporadic groups"), (GroupKind::Thompson, "thompson groups")] {
        if !filter.admits(kind) {
            continue;
        }
        out.push_str(title);
        out.push('\n');
        for f in Family::ALL.iter().filter(|f| f.kind() == kind) {
            let note = if f.presentation().is_none() { "  (no presentation)" } else { "" };
            out.push_str(&format!("  {}: p = {}{note}\n", f.name().to_ascii_lowercase(), ps(f.lattice_ps())));
        }
    }
    out.push_str("polygon cases\n");
    for c in CaseFamily::ALL.iter().filter(|c| filter.admits(c.group_family().kind())) {
        out.push_str(&format!("  {}: p = {}\n", c.name(), ps(c.lattice_ps())));
    }
    out
}

/// A group family by name; polygon case names resolve to their ambient
/// family.
pub fn parse_family(name: &str) -> Result<Family, CliError> {
    if let Ok(f) = name.parse::<Family>() {
        return Ok(f);
    }
    Ok(name.parse::<CaseFamily>()?.group_family())
}

pub fn parse_case(family: &str, p: u32) -> Result<CaseId, CliError> {
    Ok(CaseId::new(family.parse()?, p)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordReport {
    pub family: String,
    pub p: u32,
    pub word: String,
    /// Expanded word.
    pub letters: String,
    pub class: String,
    /// `None` when no finite order was found up to the bound.
    pub order: Option<u32>,
    pub max_order: u32,
    pub trace: C,
}

impl WordReport {
    pub fn text(&self) -> String {
        let order = match self.order {
            Some(n) => n.to_string(),
            None => format!("none (no finite order up to {})", self.max_order),
        };
        let [re, im] = self.trace;
        format!(
            "word: {}\nletters: {}\nclass: {}\norder: {order}\ntrace: {re} {} {}i\n",
            self.word,
            if self.letters.is_empty() { "(empty)" } else { &self.letters },
            self.class,
            if im < 0.0 { '-' } else { '+' },
            im.abs()
        )
    }
}

/// Evaluate a word in a catalog family at `p`.
pub fn word_report(family: &str, p: u32, text: &str, cfg: &RunConfig) -> Result<WordReport, CliError> {
    let f = parse_family(family)?;
    let g = f.group_with(p, cfg.tol)?;
    let w = g.parse(text)?;
    let m = g.eval_word(&w)?;
    let class = classify_isometry(&m)?;
    Ok(WordReport {
        family: f.name().into(),
        p,
        word: text.into(),
        letters: w.to_string(),
        class: class.to_string(),
        order: order_by_powering(&m, cfg.max_order),
        max_order: cfg.max_order,
        trace: report::c(m.trace()),
    })
}

/// Serialize with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Write through a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
