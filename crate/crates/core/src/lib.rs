//! Complex hyperbolic triangle groups and the Fuchsian subgroups that
//! stabilise a complex geodesic.
//!
//! The crate is layered: [`linalg`] provides fixed-size complex linear
//! algebra, [`plane`] the geometry of the complex hyperbolic plane and its
//! complex geodesics, [`isometry`] classification and orders of group
//! elements, [`groups`] the triangle groups with word evaluation and
//! presentation checks, and [`domains`] the fundamental polygons together
//! with Poincaré polygon verification.

pub mod error;
pub mod domains;
pub mod groups;
pub mod isometry;
pub mod linalg;
pub mod plane;

pub use error::{Error, Result};
