//! Deterministic dense linear algebra, stable reductions, seeded randomness,
//! and the finite-difference gradient checker. All arithmetic is `f64`.

mod gradcheck;
mod matrix;
mod rng;

pub use gradcheck::{grad_check, GradCheckReport, REL_FLOOR};
pub use matrix::{dot, l2_norm, DenseMatrix};
pub use rng::SeededRng;

use crate::error::{RealignError, Result};

/// `log(sum(exp(v)))` computed by max-shifting; finite for all finite inputs.
pub fn log_sum_exp(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(RealignError::EmptyInput("log_sum_exp".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(RealignError::NonFinite("log_sum_exp input".into()));
    }
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = values.iter().map(|v| (v - max).exp()).sum();
    Ok(max + sum.ln())
}

/// Numerically stable softmax; output is nonnegative and sums to one.
pub fn softmax_row(values: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(RealignError::EmptyInput("softmax_row".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(RealignError::NonFinite("softmax_row input".into()));
    }
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = values.iter().map(|v| (v - max).exp()).collect();
    let total: f64 = exps.iter().sum();
    Ok(exps.into_iter().map(|e| e / total).collect())
}

/// Log-softmax of a logits row.
pub fn log_softmax_row(values: &[f64]) -> Result<Vec<f64>> {
    let lse = log_sum_exp(values)?;
    Ok(values.iter().map(|v| v - lse).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lse_uniform_and_singleton() {
        assert!((log_sum_exp(&[0.0, 0.0]).unwrap() - 2.0f64.ln()).abs() < 1e-12);
        assert_eq!(log_sum_exp(&[5.0]).unwrap(), 5.0);
    }

    #[test]
    fn lse_survives_large_inputs() {
        // shifted direct evaluation: 1000 + ln(e^0 + e^0)
        let expected = 1000.0 + (1.0f64 + 1.0).ln();
        let got = log_sum_exp(&[1000.0, 1000.0]).unwrap();
        assert!((got - expected).abs() < 1e-9);
        // the naive route overflows
        assert!(!(1000.0f64.exp() + 1000.0f64.exp()).is_finite());
    }

    #[test]
    fn lse_rejects_bad_input() {
        assert!(log_sum_exp(&[]).is_err());
        assert!(log_sum_exp(&[1.0, f64::INFINITY]).is_err());
        assert!(log_sum_exp(&[f64::NAN]).is_err());
    }

    #[test]
    fn softmax_symmetry_and_shift() {
        assert_eq!(softmax_row(&[0.0, 0.0]).unwrap(), vec![0.5, 0.5]);
        for c in [-3.0, 0.0, 17.5] {
            let p = softmax_row(&[c, c, c, c]).unwrap();
            for v in p {
                assert!((v - 0.25).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn softmax_two_point_value() {
        // direct evaluation: e^2 / (e^2 + 1)
        let e2 = 2.0f64.exp();
        let p = softmax_row(&[2.0, 0.0]).unwrap();
        assert!((p[0] - e2 / (e2 + 1.0)).abs() < 1e-12);
        assert!((p[0] - 0.880797).abs() < 1e-6);
        assert!((p[1] - 0.119203).abs() < 1e-6);
        assert!(softmax_row(&[]).is_err());
    }

    proptest! {
        #[test]
        fn softmax_sums_to_one(v in proptest::collection::vec(-50.0f64..50.0, 1..16)) {
            let p = softmax_row(&v).unwrap();
            let sum: f64 = p.iter().sum();
            prop_assert!((sum - 1.0).abs() <= 1e-12);
            prop_assert!(p.iter().all(|x| *x >= 0.0));
        }

        #[test]
        fn softmax_shift_invariant(
            v in proptest::collection::vec(-20.0f64..20.0, 1..12),
            c in -100.0f64..100.0,
        ) {
            let p = softmax_row(&v).unwrap();
            let shifted: Vec<f64> = v.iter().map(|x| x + c).collect();
            let q = softmax_row(&shifted).unwrap();
            for (a, b) in p.iter().zip(&q) {
                prop_assert!((a - b).abs() <= 1e-12);
            }
        }

        #[test]
        fn lse_bounds(v in proptest::collection::vec(-100.0f64..100.0, 1..16)) {
            let lse = log_sum_exp(&v).unwrap();
            let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(lse >= max - 1e-12);
            prop_assert!(lse <= max + (v.len() as f64).ln() + 1e-12);
        }
    }
}
