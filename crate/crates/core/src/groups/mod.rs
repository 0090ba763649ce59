//! Sporadic and Thompson triangle groups, words, and presentation checks.

mod catalog;
mod group;
mod presentation;
mod word;

pub use catalog::{catalog_group, catalog_ids, Family, GroupId, ThompsonTableRow};
pub use group::{sporadic_group, sporadic_group_with, thompson_group, thompson_group_with, GroupParams, TriangleGroup};
pub use presentation::{
    relator_status, verify_presentation, verify_presentation_with, BraidClause, BraidReport, Equality, EqualityReport,
    ExponentFormula, ExponentValue, Presentation, PresentationReport, Relator, RelatorReport, RelatorStatus,
};
pub use word::{parse_word, Generator, GroupKind, Letter, Word};
