#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riskfuzz::mcdm::{Criterion, DecisionMatrix};

pub fn ids(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("A{i}")).collect()
}

/// The fixed 4×3 all-benefit instance with weights (0.3, 0.4, 0.3).
pub fn d0() -> DecisionMatrix {
    DecisionMatrix::new(
        ids(4),
        vec![Criterion::benefit("C1"), Criterion::benefit("C2"), Criterion::benefit("C3")],
        vec![
            vec![7.0, 9.0, 9.0],
            vec![8.0, 7.0, 8.0],
            vec![9.0, 6.0, 8.0],
            vec![6.0, 7.0, 8.0],
        ],
        vec![0.3, 0.4, 0.3],
    )
    .unwrap()
}

/// 5×4 instance with a cost criterion first, equal weights.
pub fn d1() -> DecisionMatrix {
    DecisionMatrix::new(
        ids(5),
        vec![
            Criterion::cost("price"),
            Criterion::benefit("storage"),
            Criterion::benefit("camera"),
            Criterion::benefit("looks"),
        ],
        vec![
            vec![250.0, 16.0, 12.0, 5.0],
            vec![200.0, 16.0, 8.0, 3.0],
            vec![300.0, 32.0, 16.0, 4.0],
            vec![275.0, 32.0, 8.0, 4.0],
            vec![225.0, 16.0, 16.0, 2.0],
        ],
        vec![0.25; 4],
    )
    .unwrap()
}

/// Random m×n matrix: values in [1, 10), random orientations, random weights.
pub fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DecisionMatrix {
    let values = (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(1.0..10.0)).collect())
        .collect();
    let criteria = (0..n)
        .map(|j| {
            if rng.gen_bool(0.3) {
                Criterion::cost(format!("C{}", j + 1))
            } else {
                Criterion::benefit(format!("C{}", j + 1))
            }
        })
        .collect();
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let weights = raw.iter().map(|w| w / total).collect();
    DecisionMatrix::new(ids(m), criteria, values, weights).unwrap()
}

/// Random matrix whose row `winner` is strictly better than every other row
/// on every criterion.
pub fn dominance_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize, winner: usize) -> DecisionMatrix {
    let base = random_matrix(rng, m, n);
    let mut values = base.values().to_vec();
    for j in 0..n {
        let benefit = base.is_benefit(j);
        let col: Vec<f64> = values.iter().map(|r| r[j]).collect();
        let best = if benefit {
            col.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + rng.gen_range(0.5..2.0)
        } else {
            col.iter().cloned().fold(f64::INFINITY, f64::min) * rng.gen_range(0.3..0.8)
        };
        values[winner][j] = best;
    }
    DecisionMatrix::new(
        base.alternatives().to_vec(),
        base.criteria().to_vec(),
        values,
        base.weights().to_vec(),
    )
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Asserts a report validates against the shipped JSON schema.
pub fn schema_errors(report: &serde_json::Value) -> Vec<String> {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(data_path("report.schema.json")).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let errors = match compiled.validate(report) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| format!("{}: {}", e.instance_path, e)).collect(),
    };
    errors
}
