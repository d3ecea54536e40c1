//! Agreement between method rankings: Kendall's τ-b, the pairwise
//! correlation matrix (with an SVG heatmap), and Borda consensus.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcdm::{borda_named, ScoreDirection, ScoredRanking};

/// Kendall's τ-b between two rank vectors over the same alternatives.
///
/// Ties (equal ranks) are allowed in either vector and are corrected for;
/// with no ties this is plain τ = (C − D) / (m(m−1)/2). If one vector is
/// entirely tied the coefficient is undefined and 0 is returned.
pub fn kendall_tau(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::domain(format!(
            "rank vectors differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(Error::domain("Kendall's tau needs at least two alternatives"));
    }
    let (mut concordant, mut discordant, mut tie_a, mut tie_b) = (0i64, 0i64, 0i64, 0i64);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let da = (a[i] as i64 - a[j] as i64).signum();
            let db = (b[i] as i64 - b[j] as i64).signum();
            match (da, db) {
                (0, 0) => {}
                (0, _) => tie_a += 1,
                (_, 0) => tie_b += 1,
                _ if da == db => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let denom = (((concordant + discordant + tie_a) * (concordant + discordant + tie_b)) as f64).sqrt();
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok(((concordant - discordant) as f64 / denom).clamp(-1.0, 1.0))
}

/// Symmetric matrix of pairwise Kendall τ between methods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    methods: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl CorrelationMatrix {
    /// Checks symmetry (1e-12), unit diagonal and the `[-1, 1]` range.
    pub fn new(methods: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        let k = methods.len();
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::domain("correlation matrix must be square over the methods"));
        }
        for i in 0..k {
            if values[i][i] != 1.0 {
                return Err(Error::domain(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..k {
                let v = values[i][j];
                if !(-1.0..=1.0).contains(&v) {
                    return Err(Error::domain(format!("entry ({i}, {j}) = {v} is outside [-1, 1]")));
                }
                if (v - values[j][i]).abs() > 1e-12 {
                    return Err(Error::domain(format!("entries ({i}, {j}) and ({j}, {i}) differ")));
                }
            }
        }
        Ok(Self { methods, values })
    }

    pub fn methods(&self) -> &[String] {
        &self.methods
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.methods.iter().position(|m| m == a)?;
        let j = self.methods.iter().position(|m| m == b)?;
        Some(self.values[i][j])
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["method".to_string()];
        header.extend(self.methods.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (m, row) in self.methods.iter().zip(&self.values) {
            let mut rec = vec![m.clone()];
            rec.extend(row.iter().map(|v| format!("{v:.6}")));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serializes")
    }
}

pub fn correlation_matrix(rankings: &[ScoredRanking]) -> Result<CorrelationMatrix> {
    if rankings.len() < 2 {
        return Err(Error::domain("a correlation matrix needs at least two rankings"));
    }
    let reference = &rankings[0].alternatives;
    let aligned = rankings
        .iter()
        .map(|r| r.ranks_aligned_to(reference))
        .collect::<Result<Vec<_>>>()?;
    let k = rankings.len();
    let mut values = vec![vec![1.0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let t = kendall_tau(&aligned[i], &aligned[j])?;
            values[i][j] = t;
            values[j][i] = t;
        }
    }
    CorrelationMatrix::new(rankings.iter().map(|r| r.method.clone()).collect(), values)
}

/// Borda count over method rankings, reported as method `CONSENSUS`.
/// Alternatives keep the order of the first ranking.
pub fn consensus_borda(rankings: &[ScoredRanking]) -> Result<ScoredRanking> {
    borda_named("CONSENSUS", rankings)
}

/// Wraps an externally produced rank column (for instance, one typed in
/// from a published table). Ranks are kept verbatim, so repeated ranks are
/// allowed; scores are the ranks themselves, lower being better.
pub fn imported_ranking(
    method: impl Into<String>,
    alternatives: Vec<String>,
    ranks: Vec<usize>,
) -> Result<ScoredRanking> {
    let method = method.into();
    let m = alternatives.len();
    if ranks.len() != m {
        return Err(Error::domain(format!(
            "ranking `{method}` has {} ranks for {m} alternatives",
            ranks.len()
        )));
    }
    if let Some(r) = ranks.iter().find(|r| !(1..=m).contains(*r)) {
        return Err(Error::domain(format!("ranking `{method}`: rank {r} outside 1..={m}")));
    }
    Ok(ScoredRanking {
        method,
        direction: ScoreDirection::LowerIsBetter,
        scores: ranks.iter().map(|&r| r as f64).collect(),
        alternatives,
        ranks,
    })
}

/// How many rankings place each alternative first, in the first ranking's
/// alternative order.
pub fn first_place_counts(rankings: &[ScoredRanking]) -> Result<Vec<(String, usize)>> {
    let Some(first) = rankings.first() else {
        return Ok(Vec::new());
    };
    let reference = &first.alternatives;
    let mut counts = vec![0; reference.len()];
    for r in rankings {
        for (c, rank) in counts.iter_mut().zip(r.ranks_aligned_to(reference)?) {
            if rank == 1 {
                *c += 1;
            }
        }
    }
    Ok(reference.iter().cloned().zip(counts).collect())
}

const CANVAS_W: f64 = 800.0;
const CANVAS_H: f64 = 600.0;

/// Linear diverging scale: blue at −1, white at 0, red at +1.
pub fn heat_color(v: f64) -> String {
    let v = v.clamp(-1.0, 1.0);
    let fade = |t: f64| (255.0 * (1.0 - t)).round() as u8;
    let (r, g, b) = if v >= 0.0 {
        (255, fade(v), fade(v))
    } else {
        (fade(-v), fade(-v), 255)
    };
    format!("#{r:02x}{g:02x}{b:02x}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_heatmap_svg(c: &CorrelationMatrix) -> String {
    let k = c.methods.len().max(1) as f64;
    let (left, top) = (140.0, 40.0);
    let cell = ((CANVAS_W - left - 20.0) / k).min((CANVAS_H - top - 120.0) / k);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_W}" height="{CANVAS_H}" viewBox="0 0 {CANVAS_W} {CANVAS_H}">"#
    )
    .unwrap();
    writeln!(s, r##"<rect x="0" y="0" width="{CANVAS_W}" height="{CANVAS_H}" fill="#ffffff"/>"##).unwrap();
    writeln!(s, r#"<text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">Kendall rank correlation</text>"#, CANVAS_W / 2.0).unwrap();
    for (i, row) in c.values.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let x = left + j as f64 * cell;
            let y = top + i as f64 * cell;
            writeln!(
                s,
                r##"<rect class="cell" x="{x:.2}" y="{y:.2}" width="{cell:.2}" height="{cell:.2}" fill="{}" stroke="#888888"/>"##,
                heat_color(*v)
            )
            .unwrap();
            writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="middle">{v:.2}</text>"#,
                x + cell / 2.0,
                y + cell / 2.0 + 3.0
            )
            .unwrap();
        }
    }
    for (i, m) in c.methods.iter().enumerate() {
        let mid = i as f64 * cell + cell / 2.0;
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            left - 6.0,
            top + mid + 4.0,
            escape(m)
        )
        .unwrap();
        let (x, y) = (left + mid, top + k * cell + 10.0);
        writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="11" text-anchor="end" transform="rotate(-60 {x:.2} {y:.2})">{}</text>"#,
            escape(m)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
