//! Climate transition risk assessment.
//!
//! Expert questionnaires are turned into criteria weights, ranked with a
//! family of multi-criteria decision methods, scored with a Mamdani fuzzy
//! system and placed on a 5×5 likelihood/impact risk matrix.

// Matrix code indexes rows and columns in parallel; iterator rewrites read worse.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod fuzzy;
pub mod mcdm;
pub mod pipeline;
pub mod rank_analysis;
pub mod render;
pub mod risk_model;
pub mod weighting;

pub use error::{Error, Result};
