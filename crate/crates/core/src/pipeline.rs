//! End-to-end run: questionnaire → weights → decision matrix → all ranking
//! methods → correlation and consensus → fuzzy assessment → risk matrix.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{assess_risk, default_config, FisConfig, RuleActivation};
use crate::mcdm::{rank_all, rank_fuzzy_topsis, MethodParams, ScoredRanking};
use crate::rank_analysis::{consensus_borda, correlation_matrix, CorrelationMatrix};
use crate::render::{AssessmentRow, RiskMatrixGrid};
use crate::risk_model::registry::{lookup, IMPACT_CRITERION, LIKELIHOOD_CRITERION};
use crate::risk_model::{aggregate_expert_ratings, fuzzy_ratings, Questionnaire, RiskType};
use crate::weighting::{derive_weights_topsis, WeightVector};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PipelineOptions {
    pub params: MethodParams,
    /// Colour the grid from the active FIS instead of the published layout.
    pub recompute_colors: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskAssessment {
    pub code: String,
    pub name: String,
    pub risk_type: RiskType,
    pub likelihood: f64,
    pub impact: f64,
    pub likelihood_term: String,
    pub impact_term: String,
    pub crisp_risk: f64,
    pub level: String,
    pub activation_trace: Vec<RuleActivation>,
}

impl RiskAssessment {
    pub fn row(&self) -> AssessmentRow {
        AssessmentRow {
            code: self.code.clone(),
            likelihood: self.likelihood,
            impact: self.impact,
            likelihood_term: self.likelihood_term.clone(),
            impact_term: self.impact_term.clone(),
            crisp_risk: self.crisp_risk,
            level: self.level.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub experts: usize,
    pub weights: WeightVector,
    /// The ten crisp methods in reporting order, then Fuzzy-TOPSIS.
    pub rankings: Vec<ScoredRanking>,
    /// Borda consensus of the ten crisp methods.
    pub consensus: ScoredRanking,
    pub correlation: CorrelationMatrix,
    pub assessments: Vec<RiskAssessment>,
    pub matrix: RiskMatrixGrid,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn ranking(&self, method: &str) -> Option<&ScoredRanking> {
        self.rankings.iter().find(|r| r.method == method)
    }

    /// Checks that every section covers the same risks.
    pub fn check_consistency(&self) -> Result<()> {
        let codes: Vec<&str> = self.assessments.iter().map(|a| a.code.as_str()).collect();
        for r in self.rankings.iter().chain([&self.consensus]) {
            if r.alternatives.iter().map(String::as_str).ne(codes.iter().copied()) {
                return Err(Error::domain(format!("ranking `{}` covers different risks", r.method)));
            }
        }
        if self.correlation.methods().len() != self.rankings.len() {
            return Err(Error::domain("correlation matrix does not cover every ranking"));
        }
        let mut placed: Vec<&str> = self
            .matrix
            .cells
            .iter()
            .flatten()
            .flat_map(|c| c.codes.iter().map(String::as_str))
            .collect();
        let mut expected = codes.clone();
        placed.sort_unstable();
        expected.sort_unstable();
        if placed != expected {
            return Err(Error::domain("risk matrix does not place every risk exactly once"));
        }
        Ok(())
    }
}

pub fn run_pipeline_on(q: &Questionnaire, cfg: &FisConfig, opts: &PipelineOptions) -> Result<PipelineReport> {
    let weights = derive_weights_topsis(&q.section1())?;
    let agg = aggregate_expert_ratings(q, &weights)?;
    let mut rankings = rank_all(&agg.matrix, &opts.params)?;
    let consensus = consensus_borda(&rankings)?;
    rankings.push(rank_fuzzy_topsis(
        agg.matrix.alternatives(),
        &fuzzy_ratings(q, LIKELIHOOD_CRITERION),
        &fuzzy_ratings(q, IMPACT_CRITERION),
    )?);
    let correlation = correlation_matrix(&rankings)?;

    let mut matrix = if opts.recompute_colors {
        RiskMatrixGrid::recomputed(cfg)?
    } else {
        RiskMatrixGrid::published(cfg)?
    };
    let mut assessments = Vec::with_capacity(agg.fis_inputs.len());
    for input in &agg.fis_inputs {
        let result = assess_risk(input.likelihood, input.impact, cfg)?;
        let (li, ii) = matrix.place(&input.code, input.likelihood, input.impact, cfg)?;
        let descriptor = lookup(&input.code).expect("aggregation uses registry codes");
        assessments.push(RiskAssessment {
            code: input.code.clone(),
            name: descriptor.name.to_string(),
            risk_type: descriptor.risk_type,
            likelihood: input.likelihood,
            impact: input.impact,
            likelihood_term: cfg.likelihood().terms()[li].label.clone(),
            impact_term: cfg.impact().terms()[ii].label.clone(),
            crisp_risk: result.crisp_risk,
            level: result.level,
            activation_trace: result.activation_trace,
        });
    }
    let report = PipelineReport {
        experts: q.n_experts(),
        weights,
        rankings,
        consensus,
        correlation,
        assessments,
        matrix,
    };
    report.check_consistency()?;
    Ok(report)
}

/// Loads the questionnaire (and the FIS config, if given; otherwise the
/// default) and runs the whole pipeline.
pub fn run_pipeline(
    questionnaire_path: &Path,
    config_path: Option<&Path>,
    opts: &PipelineOptions,
) -> Result<PipelineReport> {
    let q = Questionnaire::load(questionnaire_path)?;
    let cfg = match config_path {
        Some(p) => FisConfig::load(p)?,
        None => default_config(),
    };
    run_pipeline_on(&q, &cfg, opts)
}
