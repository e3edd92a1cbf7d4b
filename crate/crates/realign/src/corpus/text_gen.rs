//! Reasoning-text and caption generation for synthetic samples.

use super::config::CorpusConfig;
use super::generate::SyntheticSample;
use super::parse::{parse_tagged_response, Answer};
use super::vocab::{
    self, Label, TokenId, ANSWER_CLOSE, ANSWER_OPEN, THINK_CLOSE, THINK_OPEN,
};
use crate::numerics::SeededRng;

/// The fixed detection question attached to every generated response.
pub const QUESTION: &str = "Is this image real or AI-generated?";

/// Within non-evidence slots, probability of a domain-flavor token
/// (the rest are filler). Flavor tokens are the only domain signal a text carries.
const P_FLAVOR: f64 = 0.25;

/// A tagged response generated for one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct ReasoningSample {
    pub sample_id: u64,
    pub question: String,
    /// Full tagged token sequence.
    pub response: Vec<TokenId>,
    /// Span between the first think tags of `response`.
    pub think: Vec<TokenId>,
    pub answer: Answer,
    /// Ground-truth label of the underlying sample.
    pub label: Label,
}

fn think_span(
    sample: &SyntheticSample,
    config: &CorpusConfig,
    rng: &mut SeededRng,
    with_evidence: bool,
) -> Vec<TokenId> {
    let len = config.think_len_min + rng.below(config.think_len_max - config.think_len_min + 1);
    let evidence = vocab::evidence_range(sample.label);
    let flavor = vocab::domain_flavor_tokens(sample.domain, config.domains);
    let mut span = Vec::with_capacity(len);
    for _ in 0..len {
        if with_evidence && rng.next_f64() < config.p_evidence {
            span.push(evidence.start + rng.below(evidence.len()));
        } else if rng.next_f64() < P_FLAVOR {
            span.push(flavor[rng.below(flavor.len())]);
        } else {
            span.push(vocab::FILLER.start + rng.below(vocab::FILLER.len()));
        }
    }
    span
}

/// Generate a well-formed tagged reasoning response for a sample.
///
/// The think span mixes label-evidence tokens (rate `p_evidence`) with filler
/// and domain-flavor tokens; the answer matches the label with probability
/// `answer_fidelity`. Distinct rng streams give distinct texts for one image.
pub fn generate_reasoning_text(
    sample: &SyntheticSample,
    config: &CorpusConfig,
    rng: &mut SeededRng,
) -> ReasoningSample {
    let span = think_span(sample, config, rng, true);
    let answer_label = if rng.next_f64() < config.answer_fidelity {
        sample.label
    } else {
        sample.label.flipped()
    };
    let mut response = Vec::with_capacity(span.len() + 5);
    response.push(THINK_OPEN);
    response.extend_from_slice(&span);
    response.push(THINK_CLOSE);
    response.push(ANSWER_OPEN);
    response.push(answer_label.class_token());
    response.push(ANSWER_CLOSE);
    let (think, answer) = parse_tagged_response(&response);
    ReasoningSample {
        sample_id: sample.id,
        question: QUESTION.to_string(),
        response,
        think,
        answer,
        label: sample.label,
    }
}

/// Generate a caption-style token sequence: the same slot grammar with
/// evidence tokens excluded, so captions carry no label signal.
pub fn generate_caption_text(
    sample: &SyntheticSample,
    config: &CorpusConfig,
    rng: &mut SeededRng,
) -> Vec<TokenId> {
    think_span(sample, config, rng, false)
}
