//! Ranking methods checked against frozen reference values and against the
//! naive reimplementations in `common::oracle`.

mod common;

use common::{d0, d1, ids, oracle, random_matrix, rng};
use riskfuzz::mcdm::{
    outranking_tables, rank, rank_all, rank_fuzzy_topsis, vikor_measures, FuzzyRating, Method,
    MethodParams,
};

const TOL: f64 = 1e-6;

fn assert_close(actual: &[f64], expected: &[f64], what: &str) {
    assert_eq!(actual.len(), expected.len(), "{what}");
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert!((a - e).abs() <= TOL, "{what}[{i}]: {a} vs {e}");
    }
}

fn check(method: Method, d: &riskfuzz::mcdm::DecisionMatrix, scores: &[f64], ranks: &[usize]) {
    let r = rank(method, d, &MethodParams::default()).unwrap();
    assert_close(&r.scores, scores, method.name());
    assert_eq!(r.ranks, ranks, "{method}");
}

#[test]
fn frozen_benefit_instance() {
    let d = d0();
    check(Method::Topsis, &d, &[0.6852459162, 0.441429274, 0.4144918, 0.2481955587], &[1, 2, 3, 4]);
    let sum_scores = [0.2759561129, 0.2492789969, 0.2454858934, 0.2292789969];
    check(Method::Copras, &d, &sum_scores, &[1, 2, 3, 4]);
    check(Method::Wsm, &d, &sum_scores, &[1, 2, 3, 4]);
    check(Method::Saw, &d, &[0.8, 0.3333333333, 0.3, 0.1333333333], &[1, 2, 3, 4]);
    check(Method::Marcos, &d, &[0.7123287671, 0.6444879322, 0.6360078278, 0.5936073059], &[1, 2, 3, 4]);
    check(Method::Promethee, &d, &[0.6, 0.0, -0.2, -0.4], &[1, 2, 3, 4]);
    check(Method::Codas, &d, &[0.544140707, -0.0677179379, -0.0104336068, -0.4659891624], &[1, 3, 2, 4]);
    check(Method::Electre, &d, &[2.0, 1.0, -1.0, -2.0], &[1, 2, 3, 4]);
    check(Method::Vikor, &d, &[0.0, 0.6, 0.875, 0.75], &[1, 2, 4, 3]);
    check(Method::Borda, &d, &[7.0, 6.0, 4.0, 1.0], &[1, 2, 3, 4]);

    let t = outranking_tables(&d, 0.65, 0.35);
    let expected = [
        [false, true, false, true],
        [false, false, true, true],
        [false; 4],
        [false; 4],
    ];
    for (row, exp) in t.outranks.iter().zip(expected) {
        assert_eq!(row.as_slice(), exp.as_slice());
    }
    let v = vikor_measures(&d, 0.5);
    assert_close(&v.s, &[0.2, 0.6666666667, 0.7, 0.8666666667], "VIKOR S");
    assert_close(&v.r, &[0.2, 0.3, 0.4, 0.3], "VIKOR R");
}

#[test]
fn frozen_cost_instance() {
    let d = d1();
    check(Method::Topsis, &d, &[0.5342768572, 0.3083677687, 0.6916322313, 0.5347365845, 0.4010461215], &[3, 5, 1, 2, 4]);
    let sum_scores = [0.2041443808, 0.171946349, 0.2344721692, 0.20484987, 0.1845872309];
    check(Method::Copras, &d, &sum_scores, &[3, 5, 1, 2, 4]);
    check(Method::Wsm, &d, &sum_scores, &[3, 5, 1, 2, 4]);
    check(Method::Saw, &d, &[0.5, 0.3333333333, 0.6666666667, 0.4791666667, 0.4375], &[2, 5, 1, 3, 4]);
    check(Method::Marcos, &d, &[0.6483803146, 0.5527176452, 0.7369568603, 0.6435488666, 0.5928723459], &[2, 5, 1, 3, 4]);
    check(Method::Codas, &d, &[0.1392786773, -0.7610447315, 0.8518807445, 0.0967831297, -0.3268978199], &[2, 5, 1, 3, 4]);
    check(Method::Vikor, &d, &[0.25, 0.5, 0.0, 0.28125, 0.34375], &[2, 5, 1, 3, 4]);
    check(Method::Promethee, &d, &[0.125, -0.1875, 0.1875, -0.0625, -0.0625], &[2, 5, 1, 3, 4]);
    check(Method::Electre, &d, &[0.0, 0.0, 1.0, -1.0, 0.0], &[2, 3, 1, 5, 4]);
    check(Method::Borda, &d, &[10.0, 7.0, 11.0, 6.0, 6.0], &[2, 3, 1, 4, 5]);
}

#[test]
fn frozen_fuzzy_topsis() {
    let f = |a: [f64; 4]| FuzzyRating::new(a[0], a[1], a[2], a[3]).unwrap();
    let lik = [[0.2, 0.3, 0.4, 0.5], [0.6, 0.7, 0.8, 0.9], [0.4, 0.5, 0.5, 0.6]];
    let imp = [[0.7, 0.8, 0.9, 1.0], [0.3, 0.4, 0.5, 0.6], [0.5, 0.6, 0.7, 0.8]];
    let r = rank_fuzzy_topsis(
        &ids(3),
        &lik.map(f),
        &imp.map(f),
    )
    .unwrap();
    assert_close(&r.scores, &[0.17983341921194734, 0.7732192541885681, 0.5207121724433121], "FUZZY-TOPSIS");
    assert_eq!(r.ranks, vec![3, 1, 2]);
    assert_close(&r.scores, &oracle::fuzzy_topsis(&lik, &imp), "FUZZY-TOPSIS oracle");
}

#[test]
fn frozen_instances_agree_with_oracle() {
    for d in [d0(), d1()] {
        for r in rank_all(&d, &MethodParams::default()).unwrap() {
            assert_eq!(r.ranks, oracle::oracle_ranks(&r.method, &d), "{}", r.method);
        }
    }
}

#[test]
fn random_instances_agree_with_oracle() {
    let mut g = rng(0x5eed);
    for case in 0..50 {
        let d = random_matrix(&mut g, 4, 3);
        let raw = oracle::raw(&d);
        let params = MethodParams::default();
        for m in Method::ALL {
            let r = rank(m, &d, &params).unwrap();
            let expected_scores = match m {
                Method::Topsis => oracle::topsis(&raw),
                Method::Copras => oracle::copras(&raw),
                Method::Borda => oracle::borda(&raw),
                Method::Saw => oracle::saw(&raw),
                Method::Electre => oracle::electre(&raw, 0.65, 0.35),
                Method::Vikor => oracle::vikor(&raw, 0.5),
                Method::Marcos => oracle::marcos(&raw),
                Method::Promethee => oracle::promethee(&raw),
                Method::Wsm => oracle::wsm(&raw),
                Method::Codas => oracle::codas(&raw, 0.02),
            };
            assert_close(&r.scores, &expected_scores, &format!("case {case} {m}"));
            assert_eq!(r.ranks, oracle::oracle_ranks(m.name(), &d), "case {case} {m}");
        }
    }
}
