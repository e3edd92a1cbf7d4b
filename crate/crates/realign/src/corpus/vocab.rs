//! Fixed toy vocabulary shared by the corpus engine, the reasoning policy,
//! and the text encoder.
//!
//! Layout: 4 structural tags, 2 class tokens, 5 label-prefix scaffold tokens,
//! then a 64-token word vocabulary split into 8 real-evidence, 8
//! fake-evidence, 32 filler, and 16 domain-flavor tokens.

use crate::error::{RealignError, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::Range;

pub type TokenId = usize;

pub const THINK_OPEN: TokenId = 0;
pub const THINK_CLOSE: TokenId = 1;
pub const ANSWER_OPEN: TokenId = 2;
pub const ANSWER_CLOSE: TokenId = 3;
pub const CLASS_REAL: TokenId = 4;
pub const CLASS_FAKE: TokenId = 5;

pub const REAL_EVIDENCE: Range<TokenId> = 11..19;
pub const FAKE_EVIDENCE: Range<TokenId> = 19..27;
pub const FILLER: Range<TokenId> = 27..59;
pub const FLAVOR: Range<TokenId> = 59..75;

/// Total number of token ids, including tags and scaffold.
pub const VOCAB_SIZE: usize = 75;

/// Maximum number of domains the flavor-token pool can serve.
pub const MAX_DOMAINS: usize = FLAVOR.end - FLAVOR.start;

const NAMES: [&str; VOCAB_SIZE] = [
    "<think>",
    "</think>",
    "<answer>",
    "</answer>",
    "real",
    "fake",
    "this",
    "is",
    "a",
    "image",
    ".",
    // real evidence
    "film-grain",
    "natural-bokeh",
    "lens-glare",
    "motion-blur",
    "sensor-noise",
    "level-horizon",
    "coherent-reflection",
    "skin-texture",
    // fake evidence
    "extra-fingers",
    "warped-text",
    "melted-edges",
    "plastic-sheen",
    "tiling-pattern",
    "impossible-shadow",
    "smeared-detail",
    "halo-artifact",
    // filler
    "the", "and", "of", "with", "near", "under", "over", "around", "shows", "appears", "looks",
    "slightly", "overall", "somewhat", "clearly", "perhaps", "region", "area", "corner", "center",
    "edge", "surface", "object", "scene", "light", "color", "tone", "shape", "line", "spot",
    "patch", "zone",
    // domain flavor
    "studio", "outdoor", "portrait", "landscape", "indoor", "night", "macro", "aerial", "street",
    "underwater", "sports", "wildlife", "archival", "satellite", "medical", "thermal",
];

/// Display name for a token id.
pub fn token_name(id: TokenId) -> &'static str {
    NAMES[id]
}

/// Reverse lookup by display name.
pub fn token_id(name: &str) -> Option<TokenId> {
    NAMES.iter().position(|n| *n == name)
}

pub fn is_tag(id: TokenId) -> bool {
    id <= ANSWER_CLOSE
}

/// Binary class label; 0 = real, 1 = fake.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Real,
    Fake,
}

impl Label {
    pub fn y(self) -> u8 {
        match self {
            Label::Real => 0,
            Label::Fake => 1,
        }
    }

    pub fn from_y(y: u8) -> Result<Self> {
        match y {
            0 => Ok(Label::Real),
            1 => Ok(Label::Fake),
            other => Err(RealignError::Domain(format!("label {other} outside {{0, 1}}"))),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Label::Real => Label::Fake,
            Label::Fake => Label::Real,
        }
    }

    /// Signed class indicator `2y - 1`: -1 for real, +1 for fake.
    pub fn sign(self) -> f64 {
        match self {
            Label::Real => -1.0,
            Label::Fake => 1.0,
        }
    }

    pub fn class_token(self) -> TokenId {
        match self {
            Label::Real => CLASS_REAL,
            Label::Fake => CLASS_FAKE,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::Real => "real",
            Label::Fake => "fake",
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.y())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let y = u8::deserialize(deserializer)?;
        Label::from_y(y).map_err(serde::de::Error::custom)
    }
}

/// Evidence token range for a label; the two ranges are disjoint.
pub fn evidence_range(label: Label) -> Range<TokenId> {
    match label {
        Label::Real => REAL_EVIDENCE,
        Label::Fake => FAKE_EVIDENCE,
    }
}

pub fn is_evidence(id: TokenId) -> bool {
    REAL_EVIDENCE.contains(&id) || FAKE_EVIDENCE.contains(&id)
}

pub fn is_evidence_for(id: TokenId, label: Label) -> bool {
    evidence_range(label).contains(&id)
}

/// Flavor tokens assigned to a domain, round-robin over the flavor pool.
pub fn domain_flavor_tokens(domain: usize, domains: usize) -> Vec<TokenId> {
    assert!(domains >= 1 && domains <= MAX_DOMAINS);
    FLAVOR.filter(|id| (id - FLAVOR.start) % domains == domain).collect()
}

/// Token sequence for the prefix sentence "this is a real/fake image .".
pub fn prefix_tokens(label: Label) -> Vec<TokenId> {
    vec![6, 7, 8, label.class_token(), 9, 10]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_consistent() {
        assert_eq!(NAMES.len(), VOCAB_SIZE);
        assert_eq!(REAL_EVIDENCE.len(), 8);
        assert_eq!(FAKE_EVIDENCE.len(), 8);
        assert_eq!(FILLER.len(), 32);
        assert_eq!(FLAVOR.len(), 16);
        assert_eq!(FLAVOR.end, VOCAB_SIZE);
        // evidence sets are disjoint
        assert!(REAL_EVIDENCE.end <= FAKE_EVIDENCE.start);
    }

    #[test]
    fn names_are_unique() {
        let mut sorted: Vec<&str> = NAMES.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), VOCAB_SIZE);
        assert_eq!(token_id("<think>"), Some(THINK_OPEN));
        assert_eq!(token_id("fake"), Some(CLASS_FAKE));
    }

    #[test]
    fn prefix_matches_label() {
        let p = prefix_tokens(Label::Fake);
        assert_eq!(p[3], CLASS_FAKE);
        let p = prefix_tokens(Label::Real);
        assert_eq!(p[3], CLASS_REAL);
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn flavor_partition_covers_pool() {
        let domains = 3;
        let mut all: Vec<TokenId> = (0..domains)
            .flat_map(|d| domain_flavor_tokens(d, domains))
            .collect();
        all.sort_unstable();
        assert_eq!(all, FLAVOR.collect::<Vec<_>>());
    }

    #[test]
    fn label_serde_roundtrip() {
        let json = serde_json::to_string(&Label::Fake).unwrap();
        assert_eq!(json, "1");
        let back: Label = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Label::Fake);
        assert!(serde_json::from_str::<Label>("3").is_err());
    }
}
