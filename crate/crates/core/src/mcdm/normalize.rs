//! Column normalizations shared by the ranking methods.
//!
//! Each returns a fresh alternatives × criteria matrix. Normalizations that
//! divide by a column statistic reject columns where that statistic is zero.

use super::matrix::DecisionMatrix;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<f64>>;

fn criterion_name(d: &DecisionMatrix, j: usize) -> &str {
    &d.criteria()[j].name
}

/// Fails on a column whose entries are all zero.
pub fn ensure_nonzero_columns(d: &DecisionMatrix) -> Result<()> {
    for j in 0..d.n_criteria() {
        if d.column(j).all(|v| v == 0.0) {
            return Err(Error::degenerate(criterion_name(d, j), "has zero norm"));
        }
    }
    Ok(())
}

/// `x / ||column||₂`, orientation left to the caller.
pub fn vector(d: &DecisionMatrix) -> Result<Matrix> {
    ensure_nonzero_columns(d)?;
    let norms: Vec<f64> = (0..d.n_criteria())
        .map(|j| d.column(j).map(|v| v * v).sum::<f64>().sqrt())
        .collect();
    Ok(map_cells(d, |_, j, v| v / norms[j]))
}

/// `x / Σ column`, orientation left to the caller.
pub fn sum(d: &DecisionMatrix) -> Result<Matrix> {
    ensure_nonzero_columns(d)?;
    let totals = column_sums(d, |v| v);
    for (j, t) in totals.iter().enumerate() {
        if *t == 0.0 {
            return Err(Error::degenerate(criterion_name(d, j), "sums to zero"));
        }
    }
    Ok(map_cells(d, |_, j, v| v / totals[j]))
}

/// Sum normalization after replacing cost values by their reciprocals, so
/// every normalized column is benefit-oriented.
pub fn reciprocal_sum(d: &DecisionMatrix) -> Result<Matrix> {
    ensure_nonzero_columns(d)?;
    for j in 0..d.n_criteria() {
        if !d.is_benefit(j) && d.column(j).any(|v| v == 0.0) {
            return Err(Error::degenerate(
                criterion_name(d, j),
                "has a zero value on a cost criterion",
            ));
        }
    }
    let transformed = map_cells(d, |_, j, v| if d.is_benefit(j) { v } else { 1.0 / v });
    let mut totals = vec![0.0; d.n_criteria()];
    for row in &transformed {
        for (t, v) in totals.iter_mut().zip(row) {
            *t += v;
        }
    }
    for (j, t) in totals.iter().enumerate() {
        if *t == 0.0 {
            return Err(Error::degenerate(criterion_name(d, j), "sums to zero"));
        }
    }
    Ok(transformed
        .into_iter()
        .map(|row| row.iter().zip(&totals).map(|(v, t)| v / t).collect())
        .collect())
}

/// Linear min-max scaling onto `[0, 1]` with 1 for the best value; cost
/// criteria are inverted. A constant column maps to 1 everywhere.
pub fn min_max(d: &DecisionMatrix) -> Matrix {
    let (mins, maxs) = column_bounds(d);
    map_cells(d, |_, j, v| {
        let span = maxs[j] - mins[j];
        if span == 0.0 {
            1.0
        } else if d.is_benefit(j) {
            (v - mins[j]) / span
        } else {
            (maxs[j] - v) / span
        }
    })
}

/// Linear scaling against the per-criterion best: `x / max` for benefit,
/// `min / x` for cost.
pub fn linear_to_best(d: &DecisionMatrix) -> Result<Matrix> {
    ensure_nonzero_columns(d)?;
    let (mins, maxs) = column_bounds(d);
    for j in 0..d.n_criteria() {
        let bad = if d.is_benefit(j) {
            maxs[j] == 0.0
        } else {
            d.column(j).any(|v| v == 0.0)
        };
        if bad {
            return Err(Error::degenerate(
                criterion_name(d, j),
                "cannot be scaled against its best value",
            ));
        }
    }
    Ok(map_cells(d, |_, j, v| {
        if d.is_benefit(j) {
            v / maxs[j]
        } else {
            mins[j] / v
        }
    }))
}

pub fn column_bounds(d: &DecisionMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = d.n_criteria();
    let mut mins = vec![f64::INFINITY; n];
    let mut maxs = vec![f64::NEG_INFINITY; n];
    for row in d.values() {
        for j in 0..n {
            mins[j] = mins[j].min(row[j]);
            maxs[j] = maxs[j].max(row[j]);
        }
    }
    (mins, maxs)
}

fn column_sums(d: &DecisionMatrix, f: impl Fn(f64) -> f64) -> Vec<f64> {
    (0..d.n_criteria()).map(|j| d.column(j).map(&f).sum()).collect()
}

fn map_cells(d: &DecisionMatrix, f: impl Fn(usize, usize, f64) -> f64) -> Matrix {
    d.values()
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| f(i, j, v)).collect())
        .collect()
}

/// Multiplies every column by its criterion weight.
pub fn weighted(d: &DecisionMatrix, m: Matrix) -> Matrix {
    m.into_iter()
        .map(|row| row.iter().zip(d.weights()).map(|(v, w)| v * w).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcdm::matrix::Criterion;

    fn dm(values: Vec<Vec<f64>>, crit: Vec<Criterion>) -> DecisionMatrix {
        let n = crit.len();
        let m = values.len();
        DecisionMatrix::new(
            (0..m).map(|i| format!("A{i}")).collect(),
            crit,
            values,
            vec![1.0 / n as f64; n],
        )
        .unwrap()
    }

    #[test]
    fn zero_column_names_criterion() {
        let d = dm(
            vec![vec![1.0, 0.0], vec![2.0, 0.0]],
            vec![Criterion::benefit("quality"), Criterion::benefit("price")],
        );
        let err = vector(&d).unwrap_err().to_string();
        assert!(err.contains("price"), "{err}");
        assert!(sum(&d).is_err());
        assert!(linear_to_best(&d).is_err());
        assert!(reciprocal_sum(&d).is_err());
    }

    #[test]
    fn min_max_handles_cost_and_constant_columns() {
        let d = dm(
            vec![vec![1.0, 10.0, 4.0], vec![3.0, 20.0, 4.0]],
            vec![Criterion::benefit("a"), Criterion::cost("b"), Criterion::benefit("c")],
        );
        let n = min_max(&d);
        assert_eq!(n, vec![vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0]]);
    }

    #[test]
    fn vector_columns_have_unit_norm() {
        let d = dm(vec![vec![3.0], vec![4.0]], vec![Criterion::benefit("a")]);
        let n = vector(&d).unwrap();
        assert!((n[0][0] - 0.6).abs() < 1e-15 && (n[1][0] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn reciprocal_sum_inverts_costs() {
        let d = dm(vec![vec![1.0], vec![3.0]], vec![Criterion::cost("a")]);
        let n = reciprocal_sum(&d).unwrap();
        assert!((n[0][0] - 0.75).abs() < 1e-15 && (n[1][0] - 0.25).abs() < 1e-15);
    }
}
