//! Risk registry, questionnaire ingestion, expert aggregation and synthetic
//! questionnaire generation.

pub mod aggregate;
pub mod questionnaire;
pub mod registry;
pub mod synthetic;

pub use aggregate::{
    aggregate_expert_ratings, fuzzy_ratings, majority_rulebase, majority_table, mean_ratings,
    rulebase_from_table, Aggregation, FisInput,
};
pub use questionnaire::{Questionnaire, RuleTable};
pub use registry::{RiskDescriptor, RiskType, CRITERIA, RISKS};
pub use synthetic::{
    fit_distributions, generate_synthetic, total_variation, Categorical, DistributionSpec,
};
