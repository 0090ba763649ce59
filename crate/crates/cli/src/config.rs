use std::path::PathBuf;

use cherbolic_core::isometry::DEFAULT_MAX_ORDER;
use cherbolic_core::linalg::Tolerances;

use crate::CliError;

/// Environment variable overriding the algebraic tolerance.
pub const TOL_ALG_ENV: &str = "CHERBOLIC_TOL_ALG";

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub tol: Tolerances,
    pub max_order: u32,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { tol: Tolerances::default(), max_order: DEFAULT_MAX_ORDER, json: None, svg: None }
    }
}

impl RunConfig {
    /// Apply overrides on top of the defaults and validate the result.
    pub fn new(tol_alg: Option<f64>, tol_angle: Option<f64>, max_order: Option<u32>) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(t) = tol_alg {
            cfg.tol.algebraic = t;
        }
        if let Some(t) = tol_angle {
            cfg.tol.angle = t;
        }
        if let Some(m) = max_order {
            cfg.max_order = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let t = &self.tol;
        for (name, v) in [("algebraic", t.algebraic), ("angle", t.angle), ("zero", t.zero), ("unit band", t.unit_band)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::InvalidConfig(format!("{name} tolerance must be positive, got {v}")));
            }
        }
        if self.max_order < 8 {
            return Err(CliError::InvalidConfig(format!("max order must be at least 8, got {}", self.max_order)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_overrides() {
        assert!(RunConfig::new(Some(0.0), None, None).is_err());
        assert!(RunConfig::new(None, Some(-1e-6), None).is_err());
        assert!(RunConfig::new(None, None, Some(7)).is_err());
        let cfg = RunConfig::new(Some(1e-10), Some(1e-7), Some(500)).unwrap();
        assert_eq!((cfg.tol.algebraic, cfg.tol.angle, cfg.max_order), (1e-10, 1e-7, 500));
    }
}
