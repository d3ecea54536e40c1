//! Risk matrix grid and its text/SVG renderings, plus the crisp
//! assessment table.
//!
//! Renderers are pure functions of their input: identical grids produce
//! byte-identical output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{assess_risk, FisConfig};

pub const CANVAS_WIDTH: u32 = 800;
pub const CANVAS_HEIGHT: u32 = 600;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Green,
    Yellow,
    Orange,
    Red,
}

impl Severity {
    pub const ALL: [Severity; 4] = [Severity::Green, Severity::Yellow, Severity::Orange, Severity::Red];

    /// Colour for risk-level index 0 (Low) .. 3 (Critical).
    pub fn from_level(level: usize) -> Result<Self> {
        Self::ALL
            .get(level)
            .copied()
            .ok_or_else(|| Error::domain(format!("risk level index {level} has no colour")))
    }

    pub fn level(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Severity::Green => 'G',
            Severity::Yellow => 'Y',
            Severity::Orange => 'O',
            Severity::Red => 'R',
        }
    }

    pub fn hex(self) -> &'static str {
        match self {
            Severity::Green => "#2e7d32",
            Severity::Yellow => "#f9a825",
            Severity::Orange => "#ef6c00",
            Severity::Red => "#c62828",
        }
    }
}

/// The published 5×5 colour layout, top row = most likely, columns from
/// lowest to highest impact.
pub const PUBLISHED_LAYOUT: [&str; 5] = ["GYORR", "GYYOR", "GGYOO", "GGYYO", "GGGYY"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub color: Severity,
    pub codes: Vec<String>,
}

/// Likelihood × impact grid. Rows are stored from least to most likely;
/// renderers put the most likely row on top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiskMatrixGrid {
    pub likelihood_labels: Vec<String>,
    pub impact_labels: Vec<String>,
    /// `cells[likelihood][impact]`.
    pub cells: Vec<Vec<GridCell>>,
}

impl RiskMatrixGrid {
    /// Empty grid coloured with the published layout; needs a 5×5 config.
    pub fn published(cfg: &FisConfig) -> Result<Self> {
        if cfg.likelihood().len() != 5 || cfg.impact().len() != 5 {
            return Err(Error::domain(
                "the published colour layout needs 5 likelihood and 5 impact terms; recompute colours instead",
            ));
        }
        let cells = (0..5)
            .map(|li| {
                PUBLISHED_LAYOUT[4 - li]
                    .chars()
                    .map(|ch| GridCell {
                        color: *Severity::ALL.iter().find(|s| s.letter() == ch).expect("layout letter"),
                        codes: Vec::new(),
                    })
                    .collect()
            })
            .collect();
        Ok(Self::with_cells(cfg, cells))
    }

    /// Empty grid coloured by assessing each cell's prototype input: the
    /// midpoint of the likelihood term's plateau against the midpoint of the
    /// impact term's plateau.
    pub fn recomputed(cfg: &FisConfig) -> Result<Self> {
        let cells = cfg
            .likelihood()
            .terms()
            .iter()
            .map(|lt| {
                cfg.impact()
                    .terms()
                    .iter()
                    .map(|it| {
                        let r = assess_risk(lt.trapezoid.peak(), it.trapezoid.peak(), cfg)?;
                        let level = cfg.risk().index_of(&r.level).expect("level is a risk label");
                        Ok(GridCell {
                            color: Severity::from_level(level)?,
                            codes: Vec::new(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::with_cells(cfg, cells))
    }

    fn with_cells(cfg: &FisConfig, cells: Vec<Vec<GridCell>>) -> Self {
        Self {
            likelihood_labels: cfg.likelihood().labels().map(str::to_string).collect(),
            impact_labels: cfg.impact().labels().map(str::to_string).collect(),
            cells,
        }
    }

    /// Places `code` in the cell of the dominant likelihood and impact terms
    /// of its crisp inputs and returns that cell's `(likelihood, impact)`.
    pub fn place(&mut self, code: &str, likelihood_x: f64, impact_x: f64, cfg: &FisConfig) -> Result<(usize, usize)> {
        let li = cfg.likelihood().argmax_term(likelihood_x)?;
        let ii = cfg.impact().argmax_term(impact_x)?;
        self.cells[li][ii].codes.push(code.to_string());
        Ok((li, ii))
    }

    pub fn cell_of(&self, code: &str) -> Option<(usize, usize)> {
        self.cells.iter().enumerate().find_map(|(li, row)| {
            row.iter()
                .position(|c| c.codes.iter().any(|k| k == code))
                .map(|ii| (li, ii))
        })
    }

    pub fn color(&self, likelihood: usize, impact: usize) -> Severity {
        self.cells[likelihood][impact].color
    }
}

fn cell_text(c: &GridCell) -> String {
    if c.codes.is_empty() {
        c.color.letter().to_string()
    } else {
        format!("{} {}", c.color.letter(), c.codes.join(","))
    }
}

/// Text table, most likely row on top; every column padded to the width of
/// its widest entry.
pub fn render_matrix_ascii(grid: &RiskMatrixGrid) -> String {
    let corner = "Likelihood \\ Impact";
    let label_w = grid
        .likelihood_labels
        .iter()
        .map(|l| l.chars().count())
        .chain([corner.len()])
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = (0..grid.impact_labels.len())
        .map(|ii| {
            grid.cells
                .iter()
                .map(|row| cell_text(&row[ii]).chars().count())
                .chain([grid.impact_labels[ii].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let line = |out: &mut String, first: &str, cols: Vec<String>| {
        let mut s = format!("{first:<label_w$}");
        for (c, w) in cols.iter().zip(&widths) {
            write!(s, " | {c:<w$}").unwrap();
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut out, corner, grid.impact_labels.clone());
    let mut rule = "-".repeat(label_w);
    for w in &widths {
        rule.push_str("-+-");
        rule.push_str(&"-".repeat(*w));
    }
    out.push_str(&rule);
    out.push('\n');
    for (li, row) in grid.cells.iter().enumerate().rev() {
        line(&mut out, &grid.likelihood_labels[li], row.iter().map(cell_text).collect());
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_matrix_svg(grid: &RiskMatrixGrid) -> String {
    let (w, h) = (f64::from(CANVAS_WIDTH), f64::from(CANVAS_HEIGHT));
    let rows = grid.cells.len();
    let cols = grid.impact_labels.len();
    let (left, top, right, bottom) = (150.0, 50.0, 20.0, 70.0);
    let cw = (w - left - right) / cols as f64;
    let ch = (h - top - bottom) / rows as f64;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_WIDTH}" height="{CANVAS_HEIGHT}" viewBox="0 0 {CANVAS_WIDTH} {CANVAS_HEIGHT}">"#
    )
    .unwrap();
    writeln!(s, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();
    writeln!(
        s,
        r#"<text x="{:.2}" y="28" font-family="sans-serif" font-size="18" text-anchor="middle">Risk matrix</text>"#,
        left + (w - left - right) / 2.0
    )
    .unwrap();
    for (k, li) in (0..rows).rev().enumerate() {
        let y = top + k as f64 * ch;
        for ii in 0..cols {
            let cell = &grid.cells[li][ii];
            let x = left + ii as f64 * cw;
            writeln!(
                s,
                r##"<rect class="cell" x="{x:.2}" y="{y:.2}" width="{cw:.2}" height="{ch:.2}" fill="{}" stroke="#ffffff" stroke-width="2"/>"##,
                cell.color.hex()
            )
            .unwrap();
            for (n, code) in cell.codes.iter().enumerate() {
                writeln!(
                    s,
                    r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" fill="#ffffff" text-anchor="middle">{}</text>"##,
                    x + cw / 2.0,
                    y + 18.0 + 14.0 * n as f64,
                    escape(code)
                )
                .unwrap();
            }
        }
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="end">{}</text>"#,
            left - 8.0,
            y + ch / 2.0 + 4.0,
            escape(&grid.likelihood_labels[li])
        )
        .unwrap();
    }
    for (ii, label) in grid.impact_labels.iter().enumerate() {
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            left + ii as f64 * cw + cw / 2.0,
            top + rows as f64 * ch + 20.0,
            escape(label)
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">Impact</text>"#,
        left + (w - left - right) / 2.0,
        h - 15.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="20" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle" transform="rotate(-90 20 {:.2})">Likelihood</text>"#,
        top + (h - top - bottom) / 2.0,
        top + (h - top - bottom) / 2.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

/// One row of the crisp assessment table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentRow {
    pub code: String,
    pub likelihood: f64,
    pub impact: f64,
    pub likelihood_term: String,
    pub impact_term: String,
    pub crisp_risk: f64,
    pub level: String,
}

/// CSV of `rows` ordered by crisp risk, highest first; equal values keep
/// their input order.
pub fn render_assessment_csv(rows: &[AssessmentRow]) -> String {
    let mut sorted: Vec<&AssessmentRow> = rows.iter().collect();
    sorted.sort_by(|a, b| b.crisp_risk.total_cmp(&a.crisp_risk));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "code",
        "likelihood",
        "impact",
        "likelihood_term",
        "impact_term",
        "crisp_risk",
        "level",
    ])
    .expect("in-memory write");
    for r in sorted {
        w.write_record([
            r.code.as_str(),
            &format!("{:.4}", r.likelihood),
            &format!("{:.4}", r.impact),
            &r.likelihood_term,
            &r.impact_term,
            &format!("{:.4}", r.crisp_risk),
            &r.level,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::default_config;
    use crate::fuzzy::rules::STANDARD_RULE_TABLE;

    #[test]
    fn published_layout_matches_rule_table() {
        for (li, row) in STANDARD_RULE_TABLE.iter().enumerate() {
            let letters: String = row.iter().map(|&l| Severity::from_level(l).unwrap().letter()).collect();
            assert_eq!(letters, PUBLISHED_LAYOUT[4 - li]);
        }
    }

    #[test]
    fn recomputed_colours_match_published_for_default_config() {
        let cfg = default_config();
        assert_eq!(RiskMatrixGrid::recomputed(&cfg).unwrap(), RiskMatrixGrid::published(&cfg).unwrap());
    }

    #[test]
    fn empty_grid_ascii_shows_layout() {
        let grid = RiskMatrixGrid::published(&default_config()).unwrap();
        let text = render_matrix_ascii(&grid);
        let letters: Vec<String> = text
            .lines()
            .skip(2)
            .map(|l| l.split('|').skip(1).map(|c| c.trim()).collect())
            .collect();
        assert_eq!(letters, PUBLISHED_LAYOUT);
        assert!(text.starts_with("Likelihood \\ Impact | Low | Low-Medium |"));
    }

    #[test]
    fn placement_and_rendering() {
        let cfg = default_config();
        let mut grid = RiskMatrixGrid::published(&cfg).unwrap();
        assert_eq!(grid.place("RM2", 1.0, 1.0, &cfg).unwrap(), (4, 4));
        assert_eq!(grid.place("Rrep4", 0.2, 0.6853, &cfg).unwrap(), (0, 3));
        assert_eq!(grid.cell_of("RM2"), Some((4, 4)));
        assert_eq!(grid.color(0, 3), Severity::Yellow);
        let text = render_matrix_ascii(&grid);
        let top = text.lines().nth(2).unwrap();
        assert!(top.starts_with("Very likely") && top.ends_with("| R RM2"), "{top}");
        let bottom = text.lines().last().unwrap();
        let cells: Vec<&str> = bottom.split('|').map(str::trim).collect();
        assert_eq!(cells[4], "Y Rrep4", "{bottom}");
        assert_eq!(text, render_matrix_ascii(&grid.clone()));
    }

    #[test]
    fn svg_structure() {
        let grid = RiskMatrixGrid::published(&default_config()).unwrap();
        let svg = render_matrix_svg(&grid);
        assert!(svg.contains(r#"width="800" height="600""#));
        assert_eq!(svg.matches(r#"class="cell""#).count(), 25);
        for s in Severity::ALL {
            assert!(svg.contains(s.hex()));
        }
        assert_eq!(svg, render_matrix_svg(&grid));
    }

    #[test]
    fn assessment_csv_sorted_by_crisp() {
        let row = |code: &str, crisp: f64| AssessmentRow {
            code: code.into(),
            likelihood: 0.5,
            impact: 0.5,
            likelihood_term: "Medium".into(),
            impact_term: "Medium".into(),
            crisp_risk: crisp,
            level: "Medium".into(),
        };
        let csv = render_assessment_csv(&[row("a", 0.3), row("b", 0.8), row("c", 0.3)]);
        let codes: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
        assert_eq!(codes, ["b", "a", "c"]);
    }
}
