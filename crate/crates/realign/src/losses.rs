//! Training objectives with analytic gradients.
//!
//! Each loss returns its value together with the gradient, so the trainer
//! never re-derives a backward pass. Gradients here are taken with respect to
//! the loss's direct inputs (probabilities, logits, or embedding rows); the
//! trainer chains them through the model bodies.

use crate::error::{RealignError, Result};
use crate::numerics::{log_sum_exp, softmax_row, DenseMatrix};

/// Probabilities are clamped to `[PROB_CLAMP, 1 - PROB_CLAMP]` inside the BCE
/// so the confident-correct limit stays finite.
pub const PROB_CLAMP: f64 = 1e-12;

/// Tolerance for the unit-norm check on contrastive embedding rows.
pub const UNIT_ROW_TOL: f64 = 1e-6;

/// Binary labels for a batch; 0 = real, 1 = fake.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchLabels {
    y: Vec<u8>,
}

impl BatchLabels {
    pub fn new(y: Vec<u8>) -> Result<Self> {
        if y.is_empty() {
            return Err(RealignError::EmptyInput("batch labels".into()));
        }
        if let Some(bad) = y.iter().find(|v| **v > 1) {
            return Err(RealignError::Domain(format!(
                "label {bad} outside {{0, 1}}"
            )));
        }
        Ok(BatchLabels { y })
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.y[i]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.y
    }
}

/// A scalar loss and the gradient with respect to the loss's direct inputs.
#[derive(Debug, Clone)]
pub struct LossValue {
    pub value: f64,
    pub grad: Vec<f64>,
}

/// Mean binary cross-entropy over a batch of predicted probabilities.
///
/// The gradient is with respect to the (unclamped) probabilities; coordinates
/// that hit the clamp are given zero gradient.
pub fn bce_loss(probs: &[f64], labels: &BatchLabels) -> Result<LossValue> {
    if probs.len() != labels.len() {
        return Err(RealignError::shape("bce batch", labels.len(), probs.len()));
    }
    let n = probs.len() as f64;
    let mut value = 0.0;
    let mut grad = vec![0.0; probs.len()];
    for (i, (&p, &y)) in probs.iter().zip(labels.as_slice()).enumerate() {
        if !(0.0..=1.0).contains(&p) {
            return Err(RealignError::Domain(format!(
                "probability {p} outside [0, 1] at index {i}"
            )));
        }
        let pc = p.clamp(PROB_CLAMP, 1.0 - PROB_CLAMP);
        let yf = f64::from(y);
        value -= yf * pc.ln() + (1.0 - yf) * (1.0 - pc).ln();
        if p == pc {
            grad[i] = (pc - yf) / (n * pc * (1.0 - pc));
        }
    }
    Ok(LossValue {
        value: value / n,
        grad,
    })
}

/// Summed next-token cross-entropy for one target sequence.
///
/// `log_probs` is `T x vocab` with each row a normalized log-distribution.
/// The gradient is with respect to the logits that produced the rows,
/// `softmax - onehot` per step, flattened row-major.
pub fn next_token_loss(log_probs: &DenseMatrix, targets: &[usize]) -> Result<LossValue> {
    if targets.len() != log_probs.rows() {
        return Err(RealignError::shape(
            "next_token targets",
            log_probs.rows(),
            targets.len(),
        ));
    }
    if log_probs.rows() == 0 {
        return Err(RealignError::EmptyInput("next_token log_probs".into()));
    }
    let vocab = log_probs.cols();
    let mut value = 0.0;
    let mut grad = vec![0.0; log_probs.len()];
    for (t, &target) in targets.iter().enumerate() {
        let row = log_probs.row(t);
        let lse = log_sum_exp(row)?;
        if lse.abs() > 1e-9 {
            return Err(RealignError::Domain(format!(
                "log-probability row {t} is not normalized (log-sum-exp = {lse:e})"
            )));
        }
        if target >= vocab {
            return Err(RealignError::Domain(format!(
                "target id {target} out of range for vocab {vocab} at step {t}"
            )));
        }
        value -= row[target];
        for (k, &lp) in row.iter().enumerate() {
            grad[t * vocab + k] = lp.exp() - if k == target { 1.0 } else { 0.0 };
        }
    }
    Ok(LossValue { value, grad })
}

/// Value and score-gradient of the symmetric cross-entropy on a square
/// similarity matrix whose diagonal marks the matched pairs.
#[derive(Debug, Clone)]
pub struct ScoreContrastive {
    pub value: f64,
    pub grad_scores: DenseMatrix,
}

/// Symmetric InfoNCE on raw pairwise scores.
pub fn contrastive_from_scores(scores: &DenseMatrix) -> Result<ScoreContrastive> {
    let n = scores.rows();
    if n == 0 {
        return Err(RealignError::EmptyInput("contrastive scores".into()));
    }
    if scores.cols() != n {
        return Err(RealignError::shape("contrastive scores square", n, scores.cols()));
    }
    let nf = n as f64;
    let mut value = 0.0;
    let mut grad = DenseMatrix::zeros(n, n);

    // image -> text: softmax over each row
    for i in 0..n {
        let p = softmax_row(scores.row(i))?;
        value -= 0.5 / nf * p[i].ln();
        for (j, pj) in p.iter().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            grad.set(i, j, grad.get(i, j) + 0.5 / nf * (pj - delta));
        }
    }
    // text -> image: softmax over each column
    for j in 0..n {
        let col: Vec<f64> = (0..n).map(|i| scores.get(i, j)).collect();
        let p = softmax_row(&col)?;
        value -= 0.5 / nf * p[j].ln();
        for (i, pi) in p.iter().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            grad.set(i, j, grad.get(i, j) + 0.5 / nf * (pi - delta));
        }
    }
    Ok(ScoreContrastive {
        value,
        grad_scores: grad,
    })
}

/// Contrastive loss value plus gradients for both embedding matrices.
#[derive(Debug, Clone)]
pub struct ContrastiveValue {
    pub value: f64,
    pub grad_image: DenseMatrix,
    pub grad_text: DenseMatrix,
}

/// Symmetric contrastive loss over paired unit-norm embedding rows.
///
/// Row `i` of `image` is matched with row `i` of `text`; scores are the
/// pairwise dot products scaled by `inv_temp`.
pub fn contrastive_loss(
    image: &DenseMatrix,
    text: &DenseMatrix,
    inv_temp: f64,
) -> Result<ContrastiveValue> {
    if image.rows() == 0 {
        return Err(RealignError::EmptyInput("contrastive batch".into()));
    }
    if image.rows() != text.rows() || image.cols() != text.cols() {
        return Err(RealignError::shape(
            "contrastive embedding shapes",
            image.len(),
            text.len(),
        ));
    }
    for (name, m) in [("image", image), ("text", text)] {
        for i in 0..m.rows() {
            let norm = crate::numerics::l2_norm(m.row(i));
            if (norm - 1.0).abs() > UNIT_ROW_TOL {
                return Err(RealignError::Domain(format!(
                    "{name} embedding row {i} has norm {norm}, expected unit"
                )));
            }
        }
    }
    let mut scores = image.matmul_nt(text)?;
    for v in scores.data_mut() {
        *v *= inv_temp;
    }
    let ScoreContrastive { value, grad_scores } = contrastive_from_scores(&scores)?;
    let mut grad_image = grad_scores.matmul(text)?;
    for v in grad_image.data_mut() {
        *v *= inv_temp;
    }
    let mut grad_text = grad_scores.matmul_tn(image)?;
    for v in grad_text.data_mut() {
        *v *= inv_temp;
    }
    Ok(ContrastiveValue {
        value,
        grad_image,
        grad_text,
    })
}

/// Weighted sum of the alignment and classification objectives.
pub fn joint_loss(contrastive: f64, classification: f64, alpha: f64) -> Result<f64> {
    if !contrastive.is_finite() || !classification.is_finite() {
        return Err(RealignError::NonFinite("joint loss inputs".into()));
    }
    if alpha < 0.0 || !alpha.is_finite() {
        return Err(RealignError::Domain(format!(
            "joint loss weight alpha must be finite and >= 0, got {alpha}"
        )));
    }
    Ok(contrastive + alpha * classification)
}
