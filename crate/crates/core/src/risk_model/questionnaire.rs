//! Expert questionnaire: section 1 rates the importance of the five
//! criteria, sections 2-5 rate every risk on every criterion, section 6
//! assigns a risk level to each of the 25 likelihood/impact term pairs.
//!
//! Both on-disk formats (JSON, and a flat CSV plus a rules CSV) are decoded
//! into the same raw form and validated by one code path, so they accept and
//! reject exactly the same content.

use std::collections::{BTreeMap, HashSet};
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::registry::{lookup, CRITERIA, RISKS};
use crate::error::{Error, Result};
use crate::fuzzy::config::{IMPACT_LABELS, LIKELIHOOD_LABELS, RISK_LABELS};
use crate::weighting::ExpertRatings;

pub const N_RISKS: usize = RISKS.len();
pub const N_CRITERIA: usize = CRITERIA.len();

/// `[likelihood][impact]` → risk-level index (0 = Low .. 3 = Critical).
pub type RuleTable = [[usize; 5]; 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Questionnaire {
    experts: Vec<String>,
    criteria_ratings: Vec<[u8; N_CRITERIA]>,
    risk_ratings: Vec<[[u8; N_CRITERIA]; N_RISKS]>,
    rule_assignments: Vec<RuleTable>,
}

impl Questionnaire {
    pub fn new(
        experts: Vec<String>,
        criteria_ratings: Vec<[u8; N_CRITERIA]>,
        risk_ratings: Vec<[[u8; N_CRITERIA]; N_RISKS]>,
        rule_assignments: Vec<RuleTable>,
    ) -> Result<Self> {
        check_experts(&experts)?;
        let n = experts.len();
        if criteria_ratings.len() != n || risk_ratings.len() != n || rule_assignments.len() != n {
            return Err(Error::validation("every section needs one entry per expert"));
        }
        for (e, expert) in experts.iter().enumerate() {
            for (c, &v) in CRITERIA.iter().zip(&criteria_ratings[e]) {
                check_rating(v as i64, expert, c)?;
            }
            for (risk, row) in RISKS.iter().zip(&risk_ratings[e]) {
                for (c, &v) in CRITERIA.iter().zip(row) {
                    check_rating(v as i64, expert, &format!("{}/{c}", risk.code))?;
                }
            }
            if rule_assignments[e].iter().flatten().any(|&l| l >= RISK_LABELS.len()) {
                return Err(Error::validation(format!("expert {expert}: rule level out of range")));
            }
        }
        Ok(Self {
            experts,
            criteria_ratings,
            risk_ratings,
            rule_assignments,
        })
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    pub fn n_experts(&self) -> usize {
        self.experts.len()
    }

    /// Section 1 importance rating of criterion `c` by expert `e`.
    pub fn criteria_rating(&self, e: usize, c: usize) -> u8 {
        self.criteria_ratings[e][c]
    }

    /// Rating of risk `r` on criterion `c` by expert `e`.
    pub fn risk_rating(&self, e: usize, r: usize, c: usize) -> u8 {
        self.risk_ratings[e][r][c]
    }

    pub fn rule_table(&self, e: usize) -> &RuleTable {
        &self.rule_assignments[e]
    }

    /// Section 1 as weighting input.
    pub fn section1(&self) -> ExpertRatings {
        ExpertRatings::new(
            self.experts.clone(),
            CRITERIA.iter().map(|c| c.to_string()).collect(),
            self.criteria_ratings.iter().map(|r| r.to_vec()).collect(),
        )
        .expect("questionnaire invariants imply valid ratings")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawQuestionnaire = serde_json::from_str(text)?;
        raw.validate()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("questionnaire serializes") + "\n"
    }

    /// Reads the flat ratings CSV and the rules CSV.
    pub fn from_csv<R1: Read, R2: Read>(ratings: R1, rules: R2) -> Result<Self> {
        let mut raw = RawQuestionnaire::default();
        let mut seen = HashSet::new();
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(ratings);
        expect_header(&mut rdr, &["expert", "section", "risk_code", "criterion", "rating"])?;
        for (n, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let line = n + 2;
            let (expert, section, code, criterion, rating) = (&rec[0], &rec[1], &rec[2], &rec[3], &rec[4]);
            raw.note_expert(expert);
            let rating: i64 = rating
                .parse()
                .map_err(|_| Error::validation(format!("line {line}: rating `{rating}` is not an integer")))?;
            if !seen.insert((expert.to_string(), code.to_string(), criterion.to_string())) {
                return Err(Error::validation(format!(
                    "line {line}: duplicate rating for expert {expert}, {}",
                    if code.is_empty() { criterion.to_string() } else { format!("{code}/{criterion}") }
                )));
            }
            match section {
                "1" => {
                    if !code.is_empty() {
                        return Err(Error::validation(format!(
                            "line {line}: section 1 rows must leave risk_code empty"
                        )));
                    }
                    raw.criteria_ratings
                        .entry(expert.to_string())
                        .or_default()
                        .insert(criterion.to_string(), rating);
                }
                "2" | "3" | "4" | "5" => {
                    let expected = lookup(code).map(|r| r.risk_type.section().to_string());
                    if expected.as_deref() != Some(section) && expected.is_some() {
                        return Err(Error::validation(format!(
                            "line {line}: risk {code} belongs to section {}",
                            expected.unwrap_or_default()
                        )));
                    }
                    raw.risk_ratings
                        .entry(expert.to_string())
                        .or_default()
                        .entry(code.to_string())
                        .or_default()
                        .insert(criterion.to_string(), rating);
                }
                other => {
                    return Err(Error::validation(format!(
                        "line {line}: section must be 1-5, got `{other}`"
                    )))
                }
            }
        }
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(rules);
        expect_header(&mut rdr, &["expert", "likelihood_term", "impact_term", "level"])?;
        for rec in rdr.records() {
            let rec = rec?;
            raw.note_expert(&rec[0]);
            raw.rule_assignments.entry(rec[0].to_string()).or_default().push(RawRule {
                likelihood: rec[1].to_string(),
                impact: rec[2].to_string(),
                level: rec[3].to_string(),
            });
        }
        raw.validate()
    }

    /// Writes the ratings CSV and the rules CSV.
    pub fn to_csv(&self) -> (String, String) {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["expert", "section", "risk_code", "criterion", "rating"])
            .expect("in-memory write");
        for (e, expert) in self.experts.iter().enumerate() {
            for (c, name) in CRITERIA.iter().enumerate() {
                w.write_record([expert, "1", "", name, &self.criteria_ratings[e][c].to_string()])
                    .expect("in-memory write");
            }
            for (r, risk) in RISKS.iter().enumerate() {
                for (c, name) in CRITERIA.iter().enumerate() {
                    w.write_record([
                        expert.as_str(),
                        &risk.risk_type.section().to_string(),
                        risk.code,
                        name,
                        &self.risk_ratings[e][r][c].to_string(),
                    ])
                    .expect("in-memory write");
                }
            }
        }
        let ratings = String::from_utf8(w.into_inner().expect("flush")).expect("utf-8");
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["expert", "likelihood_term", "impact_term", "level"])
            .expect("in-memory write");
        for (e, expert) in self.experts.iter().enumerate() {
            for (li, row) in self.rule_assignments[e].iter().enumerate() {
                for (ii, &lvl) in row.iter().enumerate() {
                    w.write_record([expert.as_str(), LIKELIHOOD_LABELS[li], IMPACT_LABELS[ii], RISK_LABELS[lvl]])
                        .expect("in-memory write");
                }
            }
        }
        let rules = String::from_utf8(w.into_inner().expect("flush")).expect("utf-8");
        (ratings, rules)
    }

    /// Loads a `.json` questionnaire, or a `.csv` ratings file whose rules
    /// live next to it in `<stem>.rules.csv`. Content errors are prefixed
    /// with the offending path.
    pub fn load(path: &Path) -> Result<Self> {
        let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        if is_csv {
            let rules_path = rules_path_for(path);
            let ratings = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
            let rules = std::fs::File::open(&rules_path).map_err(|e| Error::io(&rules_path, e))?;
            Self::from_csv(ratings, rules).map_err(|e| e.in_file(path))
        } else {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            Self::from_json(&text).map_err(|e| e.in_file(path))
        }
    }

    fn to_raw(&self) -> RawQuestionnaire {
        let mut raw = RawQuestionnaire {
            experts: self.experts.clone(),
            ..Default::default()
        };
        for (e, expert) in self.experts.iter().enumerate() {
            raw.criteria_ratings.insert(
                expert.clone(),
                CRITERIA
                    .iter()
                    .zip(&self.criteria_ratings[e])
                    .map(|(c, &v)| (c.to_string(), v as i64))
                    .collect(),
            );
            raw.risk_ratings.insert(
                expert.clone(),
                RISKS
                    .iter()
                    .zip(&self.risk_ratings[e])
                    .map(|(risk, row)| {
                        let cells = CRITERIA.iter().zip(row).map(|(c, &v)| (c.to_string(), v as i64)).collect();
                        (risk.code.to_string(), cells)
                    })
                    .collect(),
            );
            let mut rules = Vec::with_capacity(25);
            for (li, row) in self.rule_assignments[e].iter().enumerate() {
                for (ii, &lvl) in row.iter().enumerate() {
                    rules.push(RawRule {
                        likelihood: LIKELIHOOD_LABELS[li].into(),
                        impact: IMPACT_LABELS[ii].into(),
                        level: RISK_LABELS[lvl].into(),
                    });
                }
            }
            raw.rule_assignments.insert(expert.clone(), rules);
        }
        raw
    }
}

/// `answers.csv` → `answers.rules.csv`.
pub fn rules_path_for(ratings: &Path) -> PathBuf {
    let stem = ratings.file_stem().and_then(|s| s.to_str()).unwrap_or("questionnaire");
    ratings.with_file_name(format!("{stem}.rules.csv"))
}

fn expect_header<R: Read>(rdr: &mut csv::Reader<R>, expected: &[&str]) -> Result<()> {
    let header = rdr.headers()?;
    if header.iter().ne(expected.iter().copied()) {
        return Err(Error::validation(format!(
            "CSV header must be `{}`",
            expected.join(",")
        )));
    }
    Ok(())
}

fn check_experts(experts: &[String]) -> Result<()> {
    if experts.is_empty() {
        return Err(Error::validation("questionnaire has no experts"));
    }
    let mut seen = HashSet::new();
    for e in experts {
        if e.is_empty() {
            return Err(Error::validation("expert identifiers must be non-empty"));
        }
        if !seen.insert(e) {
            return Err(Error::validation(format!("duplicate expert `{e}`")));
        }
    }
    Ok(())
}

fn check_rating(v: i64, expert: &str, cell: &str) -> Result<u8> {
    if (1..=5).contains(&v) {
        Ok(v as u8)
    } else {
        Err(Error::validation(format!(
            "expert {expert}: {cell} rating {v} is outside 1..5"
        )))
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuestionnaire {
    experts: Vec<String>,
    criteria_ratings: BTreeMap<String, BTreeMap<String, i64>>,
    risk_ratings: BTreeMap<String, BTreeMap<String, BTreeMap<String, i64>>>,
    rule_assignments: BTreeMap<String, Vec<RawRule>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRule {
    likelihood: String,
    impact: String,
    level: String,
}

impl RawQuestionnaire {
    fn note_expert(&mut self, expert: &str) {
        if !self.experts.iter().any(|e| e == expert) {
            self.experts.push(expert.to_string());
        }
    }

    fn validate(self) -> Result<Questionnaire> {
        check_experts(&self.experts)?;
        let listed: HashSet<&str> = self.experts.iter().map(String::as_str).collect();
        for (section, keys) in [
            ("criteria_ratings", self.criteria_ratings.keys().collect::<Vec<_>>()),
            ("risk_ratings", self.risk_ratings.keys().collect()),
            ("rule_assignments", self.rule_assignments.keys().collect()),
        ] {
            if let Some(k) = keys.into_iter().find(|k| !listed.contains(k.as_str())) {
                return Err(Error::validation(format!("unknown expert `{k}` in {section}")));
            }
        }

        let mut criteria_ratings = Vec::with_capacity(self.experts.len());
        let mut risk_ratings = Vec::with_capacity(self.experts.len());
        let mut rule_assignments = Vec::with_capacity(self.experts.len());
        for expert in &self.experts {
            let s1 = self
                .criteria_ratings
                .get(expert)
                .ok_or_else(|| Error::validation(format!("expert {expert}: missing criteria ratings")))?;
            if let Some(k) = s1.keys().find(|k| !CRITERIA.contains(&k.as_str())) {
                return Err(Error::validation(format!("expert {expert}: unknown criterion `{k}`")));
            }
            let mut row = [0u8; N_CRITERIA];
            for (slot, c) in row.iter_mut().zip(CRITERIA) {
                let v = s1
                    .get(c)
                    .ok_or_else(|| Error::validation(format!("expert {expert}: missing {c}")))?;
                *slot = check_rating(*v, expert, c)?;
            }
            criteria_ratings.push(row);

            let by_risk = self
                .risk_ratings
                .get(expert)
                .ok_or_else(|| Error::validation(format!("expert {expert}: missing risk ratings")))?;
            if let Some(k) = by_risk.keys().find(|k| lookup(k).is_none()) {
                return Err(Error::validation(format!("expert {expert}: unknown risk code `{k}`")));
            }
            let mut table = [[0u8; N_CRITERIA]; N_RISKS];
            for (slots, risk) in table.iter_mut().zip(&RISKS) {
                let cells = by_risk.get(risk.code);
                if let Some(k) = cells.and_then(|m| m.keys().find(|k| !CRITERIA.contains(&k.as_str()))) {
                    return Err(Error::validation(format!(
                        "expert {expert}: unknown criterion `{k}` for {}",
                        risk.code
                    )));
                }
                for (slot, c) in slots.iter_mut().zip(CRITERIA) {
                    let cell = format!("{}/{c}", risk.code);
                    let v = cells
                        .and_then(|m| m.get(c))
                        .ok_or_else(|| Error::validation(format!("expert {expert}: missing {cell}")))?;
                    *slot = check_rating(*v, expert, &cell)?;
                }
            }
            risk_ratings.push(table);

            let rules = self
                .rule_assignments
                .get(expert)
                .ok_or_else(|| Error::validation(format!("expert {expert}: missing rule assignments")))?;
            rule_assignments.push(resolve_rules(expert, rules)?);
        }
        Ok(Questionnaire {
            experts: self.experts,
            criteria_ratings,
            risk_ratings,
            rule_assignments,
        })
    }
}

fn label_index(labels: &[&str], label: &str, what: &str, expert: &str, n: usize) -> Result<usize> {
    labels.iter().position(|l| *l == label).ok_or_else(|| {
        Error::validation(format!(
            "expert {expert}: rule {}: unknown {what} `{label}` (expected one of {})",
            n + 1,
            labels.join(", ")
        ))
    })
}

fn resolve_rules(expert: &str, rules: &[RawRule]) -> Result<RuleTable> {
    let mut table = [[None; 5]; 5];
    for (n, r) in rules.iter().enumerate() {
        let li = label_index(&LIKELIHOOD_LABELS, &r.likelihood, "likelihood term", expert, n)?;
        let ii = label_index(&IMPACT_LABELS, &r.impact, "impact term", expert, n)?;
        let lvl = label_index(&RISK_LABELS, &r.level, "risk level", expert, n)?;
        if table[li][ii].replace(lvl).is_some() {
            return Err(Error::validation(format!(
                "expert {expert}: duplicate rule ({}, {})",
                r.likelihood, r.impact
            )));
        }
    }
    let mut out = [[0; 5]; 5];
    for li in 0..5 {
        for ii in 0..5 {
            out[li][ii] = table[li][ii].ok_or_else(|| {
                Error::validation(format!(
                    "expert {expert}: missing rule ({}, {})",
                    LIKELIHOOD_LABELS[li], IMPACT_LABELS[ii]
                ))
            })?;
        }
    }
    Ok(out)
}
