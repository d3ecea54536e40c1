//! Mamdani fuzzy risk scoring.

pub mod config;
pub mod inference;
pub mod membership;
pub mod rules;
pub mod variable;

pub use config::{default_config, FisConfig};
pub use inference::{
    assess_risk, classify_level, defuzzify_centroid, infer, AggregatedOutput, AssessmentResult,
    RuleActivation,
};
pub use membership::TrapezoidalSet;
pub use rules::{FuzzyRule, RuleBase};
pub use variable::{fuzzify, LinguisticVariable, Term};
