//! Multi-criteria ranking methods over a shared [`DecisionMatrix`].
//!
//! | method     | normalization                 | score direction |
//! |------------|-------------------------------|-----------------|
//! | TOPSIS     | vector (Euclidean)            | higher          |
//! | COPRAS     | sum                           | higher          |
//! | BORDA      | per-criterion ordinal ranks   | higher          |
//! | SAW        | min-max                       | higher          |
//! | ELECTRE    | range-scaled discordance      | higher (net)    |
//! | VIKOR      | range-scaled regret           | lower (Q)       |
//! | MARCOS     | ratio to ideal                | higher          |
//! | PROMETHEE  | ordinal (usual criterion)     | higher (flow)   |
//! | WSM        | sum after cost reciprocal     | higher          |
//! | CODAS      | linear ratio to best          | higher          |

mod borda;
mod codas;
mod copras;
mod electre;
mod fuzzy_topsis;
pub mod io;
mod marcos;
mod matrix;
pub mod normalize;
mod promethee;
mod ranking;
mod saw;
mod topsis;
mod vikor;
mod wsm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use borda::{rank_borda, rank_borda_matrix};
pub(crate) use borda::borda_named;
pub use codas::{rank_codas, DEFAULT_TAU};
pub use copras::rank_copras;
pub use electre::{
    outranking_tables, rank_electre1, OutrankingTables, DEFAULT_CONCORDANCE_THRESHOLD,
    DEFAULT_DISCORDANCE_THRESHOLD,
};
pub use fuzzy_topsis::{rank_fuzzy_topsis, vertex_distance, FuzzyRating};
pub use marcos::rank_marcos;
pub use matrix::{Criterion, DecisionMatrix, Orientation, WEIGHT_TOLERANCE};
pub use promethee::{preference_matrix, rank_promethee2};
pub use ranking::{ranks_from_scores, ScoreDirection, ScoredRanking};
pub use saw::rank_saw;
pub use topsis::{rank_topsis, topsis_scores, DEGENERATE_CLOSENESS};
pub use vikor::{rank_vikor, vikor_measures, VikorMeasures, DEFAULT_V};
pub use wsm::rank_wsm;

use crate::error::{Error, Result};

/// The ten crisp ranking methods, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Method {
    Topsis,
    Copras,
    Borda,
    Saw,
    Electre,
    Vikor,
    Marcos,
    Promethee,
    Wsm,
    Codas,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::Topsis,
        Method::Copras,
        Method::Borda,
        Method::Saw,
        Method::Electre,
        Method::Vikor,
        Method::Marcos,
        Method::Promethee,
        Method::Wsm,
        Method::Codas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Topsis => "TOPSIS",
            Method::Copras => "COPRAS",
            Method::Borda => "BORDA",
            Method::Saw => "SAW",
            Method::Electre => "ELECTRE",
            Method::Vikor => "VIKOR",
            Method::Marcos => "MARCOS",
            Method::Promethee => "PROMETHEE",
            Method::Wsm => "WSM",
            Method::Codas => "CODAS",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        Method::ALL
            .into_iter()
            .find(|m| m.name() == upper || (upper == "PROMETHEE2" && *m == Method::Promethee))
            .ok_or_else(|| Error::validation(format!("unknown method `{s}`")))
    }
}

/// Tunable method parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MethodParams {
    pub electre_concordance: f64,
    pub electre_discordance: f64,
    pub vikor_v: f64,
    pub codas_tau: f64,
}

impl Default for MethodParams {
    fn default() -> Self {
        Self {
            electre_concordance: DEFAULT_CONCORDANCE_THRESHOLD,
            electre_discordance: DEFAULT_DISCORDANCE_THRESHOLD,
            vikor_v: DEFAULT_V,
            codas_tau: DEFAULT_TAU,
        }
    }
}

pub fn rank(method: Method, d: &DecisionMatrix, params: &MethodParams) -> Result<ScoredRanking> {
    match method {
        Method::Topsis => rank_topsis(d),
        Method::Copras => rank_copras(d),
        Method::Borda => rank_borda_matrix(d),
        Method::Saw => rank_saw(d),
        Method::Electre => {
            rank_electre1(d, params.electre_concordance, params.electre_discordance)
        }
        Method::Vikor => rank_vikor(d, params.vikor_v),
        Method::Marcos => rank_marcos(d),
        Method::Promethee => rank_promethee2(d),
        Method::Wsm => rank_wsm(d),
        Method::Codas => rank_codas(d, params.codas_tau),
    }
}

/// Runs all ten methods, each on its own thread.
pub fn rank_all(d: &DecisionMatrix, params: &MethodParams) -> Result<Vec<ScoredRanking>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = Method::ALL
            .iter()
            .map(|&m| s.spawn(move || rank(m, d, params)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("ranking thread panicked"))
            .collect()
    })
}
