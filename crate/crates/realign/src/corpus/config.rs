//! Synthetic corpus configuration.

use super::vocab::MAX_DOMAINS;
use crate::error::{RealignError, Result};

/// Controls the synthetic feature geometry and the reasoning-text grammar.
///
/// The feature vector of every sample is partitioned into four channels:
/// a weak domain-invariant semantic channel, a strong domain-specific
/// artifact channel, a style channel that encodes only the domain, and a
/// pure-noise channel.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    /// Total number of domains; the first `train_domains` are training
    /// domains, the rest are held out for cross-domain evaluation.
    pub domains: usize,
    pub train_domains: usize,
    /// Images per (domain, label) cell.
    pub samples_per_domain_label: usize,

    pub semantic_dim: usize,
    pub artifact_dim: usize,
    pub style_dim: usize,
    pub noise_dim: usize,

    /// Class-signal strength of the shared semantic direction (weak).
    pub mu_semantic: f64,
    /// Class-signal strength of the per-domain artifact direction (strong).
    pub mu_artifact: f64,
    /// Magnitude of the per-domain style offset.
    pub style_strength: f64,
    /// Standard deviation of the i.i.d. Gaussian noise on every coordinate.
    pub noise_sigma: f64,

    /// Probability that a think-span slot emits a label-evidence token.
    pub p_evidence: f64,
    pub think_len_min: usize,
    pub think_len_max: usize,
    /// Probability that the emitted answer token matches the true label.
    pub answer_fidelity: f64,
    /// Reasoning texts generated per image.
    pub texts_per_image: usize,

    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            domains: 3,
            train_domains: 2,
            samples_per_domain_label: 250,
            semantic_dim: 8,
            artifact_dim: 8,
            style_dim: 4,
            noise_dim: 12,
            mu_semantic: 1.0,
            mu_artifact: 2.0,
            style_strength: 1.0,
            noise_sigma: 0.5,
            p_evidence: 0.6,
            think_len_min: 4,
            think_len_max: 8,
            answer_fidelity: 1.0,
            texts_per_image: 2,
            seed: 0,
        }
    }
}

impl CorpusConfig {
    /// Total feature dimension.
    pub fn d_feat(&self) -> usize {
        self.semantic_dim + self.artifact_dim + self.style_dim + self.noise_dim
    }

    pub fn semantic_range(&self) -> std::ops::Range<usize> {
        0..self.semantic_dim
    }

    pub fn artifact_range(&self) -> std::ops::Range<usize> {
        self.semantic_dim..self.semantic_dim + self.artifact_dim
    }

    pub fn style_range(&self) -> std::ops::Range<usize> {
        let start = self.semantic_dim + self.artifact_dim;
        start..start + self.style_dim
    }

    pub fn validate(&self) -> Result<()> {
        if self.domains == 0 || self.domains > MAX_DOMAINS {
            return Err(RealignError::InvalidConfig(format!(
                "domains must be in 1..={MAX_DOMAINS}, got {}",
                self.domains
            )));
        }
        if self.train_domains == 0 || self.train_domains > self.domains {
            return Err(RealignError::InvalidConfig(format!(
                "train_domains must be in 1..={}, got {}",
                self.domains, self.train_domains
            )));
        }
        if self.domains > self.artifact_dim {
            return Err(RealignError::InvalidConfig(format!(
                "cannot build {} mutually orthogonal artifact directions in dimension {}",
                self.domains, self.artifact_dim
            )));
        }
        if self.samples_per_domain_label == 0 {
            return Err(RealignError::InvalidConfig(
                "samples_per_domain_label must be >= 1".into(),
            ));
        }
        if self.semantic_dim == 0 || self.artifact_dim == 0 {
            return Err(RealignError::InvalidConfig(
                "semantic_dim and artifact_dim must be >= 1".into(),
            ));
        }
        if !(self.mu_artifact > self.mu_semantic && self.mu_semantic > 0.0) {
            return Err(RealignError::InvalidConfig(format!(
                "requires mu_artifact > mu_semantic > 0, got {} vs {}",
                self.mu_artifact, self.mu_semantic
            )));
        }
        if self.noise_sigma < 0.0 || !self.noise_sigma.is_finite() {
            return Err(RealignError::InvalidConfig(
                "noise_sigma must be finite and >= 0".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.p_evidence) {
            return Err(RealignError::InvalidConfig(
                "p_evidence must be in [0, 1]".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.answer_fidelity) {
            return Err(RealignError::InvalidConfig(
                "answer_fidelity must be in [0, 1]".into(),
            ));
        }
        if self.think_len_min == 0 || self.think_len_max < self.think_len_min {
            return Err(RealignError::InvalidConfig(
                "need 1 <= think_len_min <= think_len_max".into(),
            ));
        }
        if self.texts_per_image == 0 {
            return Err(RealignError::InvalidConfig(
                "texts_per_image must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        let c = CorpusConfig::default();
        c.validate().unwrap();
        assert_eq!(c.d_feat(), 32);
        assert_eq!(c.artifact_range(), 8..16);
        assert_eq!(c.style_range(), 16..20);
    }

    #[test]
    fn validation_catches_bad_configs() {
        let mut c = CorpusConfig::default();
        c.mu_semantic = 3.0; // violates mu_artifact > mu_semantic
        assert!(c.validate().is_err());

        let mut c = CorpusConfig::default();
        c.domains = 9; // more domains than artifact dimensions
        assert!(c.validate().is_err());

        let mut c = CorpusConfig::default();
        c.samples_per_domain_label = 0;
        assert!(c.validate().is_err());

        let mut c = CorpusConfig::default();
        c.train_domains = 4;
        assert!(c.validate().is_err());
    }
}
