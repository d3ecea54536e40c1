//! Decision-matrix CSV with a JSON sidecar for orientations and weights.
//!
//! ```text
//! alternative,price,quality
//! A1,250,7
//! A2,200,9
//! ```
//! ```json
//! {"criteria":[{"name":"price","orientation":"cost"},
//!              {"name":"quality","orientation":"benefit"}],
//!  "weights":[0.4,0.6]}
//! ```

use std::io::Read;

use serde::{Deserialize, Serialize};

use super::matrix::{Criterion, DecisionMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSidecar {
    pub criteria: Vec<Criterion>,
    pub weights: Vec<f64>,
}

impl MatrixSidecar {
    pub fn of(d: &DecisionMatrix) -> Self {
        Self {
            criteria: d.criteria().to_vec(),
            weights: d.weights().to_vec(),
        }
    }
}

pub fn read_matrix<R: Read>(csv_input: R, sidecar_json: &str) -> Result<DecisionMatrix> {
    let sidecar: MatrixSidecar = serde_json::from_str(sidecar_json)?;
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(csv_input);
    let header = rdr.headers()?.clone();
    if header.get(0) != Some("alternative") {
        return Err(Error::validation(
            "matrix CSV header must start with `alternative`",
        ));
    }
    let names: Vec<&str> = header.iter().skip(1).collect();
    let declared: Vec<&str> = sidecar.criteria.iter().map(|c| c.name.as_str()).collect();
    if names != declared {
        return Err(Error::validation(format!(
            "matrix CSV criteria {names:?} do not match sidecar {declared:?}"
        )));
    }
    let mut alternatives = Vec::new();
    let mut values = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row_no = line + 2;
        if rec.len() != header.len() {
            return Err(Error::validation(format!(
                "line {row_no}: expected {} fields, found {}",
                header.len(),
                rec.len()
            )));
        }
        alternatives.push(rec[0].to_string());
        let row = rec
            .iter()
            .skip(1)
            .zip(&names)
            .map(|(cell, name)| {
                cell.parse::<f64>().map_err(|_| {
                    Error::validation(format!("line {row_no}, {name}: `{cell}` is not a number"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    DecisionMatrix::new(alternatives, sidecar.criteria, values, sidecar.weights)
}

/// Writes the matrix CSV and returns it with the sidecar JSON.
pub fn write_matrix(d: &DecisionMatrix) -> (String, String) {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["alternative".to_string()];
    header.extend(d.criteria().iter().map(|c| c.name.clone()));
    w.write_record(&header).expect("in-memory write");
    for (a, row) in d.alternatives().iter().zip(d.values()) {
        let mut rec = vec![a.clone()];
        rec.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&rec).expect("in-memory write");
    }
    let csv = String::from_utf8(w.into_inner().expect("flush")).expect("utf-8");
    let sidecar = serde_json::to_string_pretty(&MatrixSidecar::of(d)).expect("sidecar serializes");
    (csv, sidecar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcdm::Orientation;

    const SIDECAR: &str = r#"{"criteria":[{"name":"price","orientation":"cost"},{"name":"quality","orientation":"benefit"}],"weights":[0.4,0.6]}"#;

    #[test]
    fn reads_matrix_with_sidecar() {
        let csv = "alternative,price,quality\nA1,250,7\nA2, 200 ,9\n";
        let d = read_matrix(csv.as_bytes(), SIDECAR).unwrap();
        assert_eq!(d.alternatives(), &["A1", "A2"]);
        assert_eq!(d.values(), &[vec![250.0, 7.0], vec![200.0, 9.0]]);
        assert_eq!(d.criteria()[0].orientation, Orientation::Cost);
        let (csv2, side2) = write_matrix(&d);
        assert_eq!(read_matrix(csv2.as_bytes(), &side2).unwrap(), d);
    }

    #[test]
    fn rejects_mismatches() {
        let wrong_header = "alt,price,quality\nA1,1,2\n";
        assert!(read_matrix(wrong_header.as_bytes(), SIDECAR).is_err());
        let wrong_crit = "alternative,quality,price\nA1,1,2\n";
        assert!(read_matrix(wrong_crit.as_bytes(), SIDECAR).is_err());
        let not_number = "alternative,price,quality\nA1,cheap,2\n";
        let err = read_matrix(not_number.as_bytes(), SIDECAR).unwrap_err().to_string();
        assert!(err.contains("line 2") && err.contains("price"), "{err}");
        let bad_orientation = SIDECAR.replace("\"cost\"", "\"penalty\"");
        assert!(read_matrix("alternative,price,quality\nA1,1,2\n".as_bytes(), &bad_orientation).is_err());
        let extra_key = SIDECAR.replace("\"weights\"", "\"note\":1,\"weights\"");
        assert!(read_matrix("alternative,price,quality\nA1,1,2\n".as_bytes(), &extra_key).is_err());
    }
}
