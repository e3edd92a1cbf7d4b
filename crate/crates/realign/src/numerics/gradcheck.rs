//! Central finite-difference gradient checking.
//!
//! Every analytic gradient in this crate is validated against
//! `(f(x + eps e_k) - f(x - eps e_k)) / (2 eps)`, whose O(eps^2) truncation
//! error makes a 1e-4 relative tolerance meaningful.

use crate::error::{RealignError, Result};

/// Relative errors are measured against `max(|analytic|, |numeric|, REL_FLOOR)`
/// so near-zero coordinates are effectively compared absolutely.
pub const REL_FLOOR: f64 = 1e-3;

/// Outcome of one gradient check.
#[derive(Debug, Clone)]
pub struct GradCheckReport {
    pub name: String,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
    /// Coordinate with the largest relative error.
    pub worst_coordinate: usize,
    pub pass: bool,
}

/// Compare `analytic` against central differences of `loss` at `params`.
///
/// `epsilon` must lie in `[1e-7, 1e-3]`. Returns an error if the loss is
/// non-finite at any probe point.
pub fn grad_check(
    name: &str,
    loss: impl Fn(&[f64]) -> f64,
    params: &[f64],
    analytic: &[f64],
    epsilon: f64,
    tolerance: f64,
) -> Result<GradCheckReport> {
    if !(1e-7..=1e-3).contains(&epsilon) {
        return Err(RealignError::Domain(format!(
            "grad_check epsilon {epsilon} outside [1e-7, 1e-3]"
        )));
    }
    if analytic.len() != params.len() {
        return Err(RealignError::shape(
            "grad_check analytic gradient",
            params.len(),
            analytic.len(),
        ));
    }
    if params.is_empty() {
        return Err(RealignError::EmptyInput("grad_check parameters".into()));
    }

    let mut probe = params.to_vec();
    let mut max_abs = 0.0f64;
    let mut max_rel = 0.0f64;
    let mut worst = 0usize;

    for k in 0..params.len() {
        let original = probe[k];
        probe[k] = original + epsilon;
        let f_plus = loss(&probe);
        probe[k] = original - epsilon;
        let f_minus = loss(&probe);
        probe[k] = original;
        if !f_plus.is_finite() || !f_minus.is_finite() {
            return Err(RealignError::GradCheckProbe { coordinate: k });
        }
        let numeric = (f_plus - f_minus) / (2.0 * epsilon);
        let abs = (analytic[k] - numeric).abs();
        let rel = abs / analytic[k].abs().max(numeric.abs()).max(REL_FLOOR);
        if abs > max_abs {
            max_abs = abs;
        }
        if rel > max_rel {
            max_rel = rel;
            worst = k;
        }
    }

    Ok(GradCheckReport {
        name: name.to_string(),
        max_abs_error: max_abs,
        max_rel_error: max_rel,
        worst_coordinate: worst,
        pass: max_rel <= tolerance,
    })
}
