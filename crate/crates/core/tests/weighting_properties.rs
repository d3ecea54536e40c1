use proptest::prelude::*;
use riskfuzz::weighting::{derive_weights_topsis, ExpertRatings, WEIGHT_FLOOR};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn ratings_strategy() -> impl Strategy<Value = Vec<Vec<u8>>> {
    (1usize..9, 1usize..7).prop_flat_map(|(experts, criteria)| {
        prop::collection::vec(prop::collection::vec(1u8..=5, criteria), experts)
    })
}

fn build(rows: Vec<Vec<u8>>) -> ExpertRatings {
    let n = rows[0].len();
    ExpertRatings::new(names("e", rows.len()), names("c", n), rows).unwrap()
}

fn weights(rows: Vec<Vec<u8>>) -> Vec<f64> {
    derive_weights_topsis(&build(rows)).unwrap().weights
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weights_form_a_distribution(rows in ratings_strategy()) {
        let w = weights(rows);
        prop_assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
        let floor = WEIGHT_FLOOR.min(1.0 / w.len() as f64);
        for v in &w {
            prop_assert!(*v >= floor - 1e-12);
        }
    }

    #[test]
    fn permuting_criteria_permutes_weights(rows in ratings_strategy(), rot in 0usize..7) {
        let n = rows[0].len();
        let rot = rot % n;
        let order: Vec<usize> = (0..n).map(|j| (j + rot) % n).collect();
        let permuted: Vec<Vec<u8>> = rows.iter().map(|r| order.iter().map(|&j| r[j]).collect()).collect();
        let a = weights(rows);
        let b = weights(permuted);
        for (k, &j) in order.iter().enumerate() {
            prop_assert!((b[k] - a[j]).abs() <= 1e-9);
        }
    }

    #[test]
    fn expert_order_is_irrelevant(rows in ratings_strategy()) {
        let mut reversed = rows.clone();
        reversed.reverse();
        let a = weights(rows);
        let b = weights(reversed);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn duplicating_the_whole_panel_keeps_weights(rows in ratings_strategy()) {
        let doubled: Vec<Vec<u8>> = rows.iter().chain(&rows).cloned().collect();
        let a = weights(rows);
        let b = weights(doubled);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn uniform_ratings_give_uniform_weights(v in 1u8..=5, experts in 1usize..9, criteria in 1usize..7) {
        let w = weights(vec![vec![v; criteria]; experts]);
        for x in &w {
            prop_assert!((x - 1.0 / criteria as f64).abs() <= 1e-12);
        }
    }
}

#[test]
#[ignore = "cloning one expert doubles that expert's say among equally weighted experts, so weights move; e.g. [[5,3,1],[1,3,5]] gives (1/3,1/3,1/3) but (0.391,0.333,0.276) with the first expert cloned"]
fn cloning_one_expert_keeps_weights() {
    let rows = vec![vec![5, 3, 1], vec![1, 3, 5]];
    let mut cloned = rows.clone();
    cloned.push(rows[0].clone());
    let a = weights(rows);
    let b = weights(cloned);
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() <= 1e-9, "{a:?} vs {b:?}");
    }
}

#[test]
fn cloning_an_expert_of_a_unanimous_panel_keeps_weights() {
    let rows = vec![vec![4, 2, 5, 1], vec![4, 2, 5, 1]];
    let mut cloned = rows.clone();
    cloned.push(rows[0].clone());
    let a = weights(rows);
    let b = weights(cloned);
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() <= 1e-9);
    }
}
