//! Desk-scale study bed for reasoning-aligned AI-generated-image detection.
//!
//! The crate wires together: a synthetic corpus engine with controllable
//! domain shift, a toy tagged-output reasoning policy trained with
//! group-relative policy optimization, contrastive alignment of a
//! LoRA-adapted image encoder against a frozen text encoder, joint
//! classification training, and an evaluation/ablation harness.

pub mod error;
pub mod losses;
pub mod numerics;

pub use error::{RealignError, Result};
