//! Naive reference implementations of every ranking method, written straight
//! from the method definitions with plain loops. They share no code with the
//! library apart from the input type.

#![allow(dead_code, clippy::needless_range_loop)]

use riskfuzz::mcdm::{DecisionMatrix, Orientation};

pub struct Raw {
    pub x: Vec<Vec<f64>>,
    pub w: Vec<f64>,
    pub benefit: Vec<bool>,
}

pub fn raw(d: &DecisionMatrix) -> Raw {
    Raw {
        x: d.values().to_vec(),
        w: d.weights().to_vec(),
        benefit: d
            .criteria()
            .iter()
            .map(|c| c.orientation == Orientation::Benefit)
            .collect(),
    }
}

/// Brute-force ranks: one plus the number of strictly better alternatives
/// plus the number of equal ones earlier in the list.
pub fn brute_ranks(s: &[f64], higher_better: bool) -> Vec<usize> {
    let eq = |a: f64, b: f64| (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()));
    (0..s.len())
        .map(|i| {
            1 + (0..s.len())
                .filter(|&j| {
                    if eq(s[j], s[i]) {
                        j < i
                    } else if higher_better {
                        s[j] > s[i]
                    } else {
                        s[j] < s[i]
                    }
                })
                .count()
        })
        .collect()
}

fn dims(r: &Raw) -> (usize, usize) {
    (r.x.len(), r.w.len())
}

fn col_min(r: &Raw, j: usize) -> f64 {
    let mut v = f64::INFINITY;
    for i in 0..r.x.len() {
        if r.x[i][j] < v {
            v = r.x[i][j];
        }
    }
    v
}

fn col_max(r: &Raw, j: usize) -> f64 {
    let mut v = f64::NEG_INFINITY;
    for i in 0..r.x.len() {
        if r.x[i][j] > v {
            v = r.x[i][j];
        }
    }
    v
}

/// Value with cost criteria negated, so larger is better.
fn better(r: &Raw, i: usize, j: usize) -> f64 {
    if r.benefit[j] {
        r.x[i][j]
    } else {
        -r.x[i][j]
    }
}

pub fn topsis(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut v = vec![vec![0.0; n]; m];
    for j in 0..n {
        let mut ss = 0.0;
        for i in 0..m {
            ss += r.x[i][j] * r.x[i][j];
        }
        for i in 0..m {
            v[i][j] = r.w[j] * r.x[i][j] / ss.sqrt();
        }
    }
    let mut out = vec![0.0; m];
    for i in 0..m {
        let (mut dp, mut dm) = (0.0, 0.0);
        for j in 0..n {
            let mut hi = f64::NEG_INFINITY;
            let mut lo = f64::INFINITY;
            for k in 0..m {
                hi = hi.max(v[k][j]);
                lo = lo.min(v[k][j]);
            }
            let (best, worst) = if r.benefit[j] { (hi, lo) } else { (lo, hi) };
            dp += (v[i][j] - best).powi(2);
            dm += (v[i][j] - worst).powi(2);
        }
        let (dp, dm) = (dp.sqrt(), dm.sqrt());
        out[i] = if dp + dm == 0.0 { 0.5 } else { dm / (dp + dm) };
    }
    out
}

pub fn copras(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut sp = vec![0.0; m];
    let mut sm = vec![0.0; m];
    for j in 0..n {
        let mut tot = 0.0;
        for i in 0..m {
            tot += r.x[i][j];
        }
        for i in 0..m {
            let d = r.w[j] * r.x[i][j] / tot;
            if r.benefit[j] {
                sp[i] += d;
            } else {
                sm[i] += d;
            }
        }
    }
    if r.benefit.iter().all(|b| *b) {
        return sp;
    }
    // Q_i = S+_i + (Σ S-) / (S-_i · Σ 1/S-_k)
    let tot_m: f64 = sm.iter().sum();
    let inv: f64 = sm.iter().map(|s| 1.0 / s).sum();
    (0..m).map(|i| sp[i] + tot_m / (sm[i] * inv)).collect()
}

pub fn saw(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut out = vec![0.0; m];
    for j in 0..n {
        let (lo, hi) = (col_min(r, j), col_max(r, j));
        for i in 0..m {
            let norm = if hi == lo {
                1.0
            } else if r.benefit[j] {
                (r.x[i][j] - lo) / (hi - lo)
            } else {
                (hi - r.x[i][j]) / (hi - lo)
            };
            out[i] += r.w[j] * norm;
        }
    }
    out
}

pub fn wsm(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut out = vec![0.0; m];
    for j in 0..n {
        let t: Vec<f64> = (0..m)
            .map(|i| if r.benefit[j] { r.x[i][j] } else { 1.0 / r.x[i][j] })
            .collect();
        let tot: f64 = t.iter().sum();
        for i in 0..m {
            out[i] += r.w[j] * t[i] / tot;
        }
    }
    out
}

pub fn borda(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut out = vec![0.0; m];
    for j in 0..n {
        let col: Vec<f64> = (0..m).map(|i| better(r, i, j)).collect();
        let ranks = brute_ranks(&col, true);
        for i in 0..m {
            out[i] += (m - ranks[i]) as f64;
        }
    }
    out
}

pub fn electre(r: &Raw, c_thr: f64, d_thr: f64) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut out_rel = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let mut c = 0.0;
            let mut dmax = 0.0_f64;
            for j in 0..n {
                if better(r, a, j) >= better(r, b, j) {
                    c += r.w[j];
                }
                let range = col_max(r, j) - col_min(r, j);
                if range > 0.0 {
                    let deficit = better(r, b, j) - better(r, a, j);
                    if deficit > 0.0 {
                        dmax = dmax.max(deficit / range);
                    }
                }
            }
            out_rel[a][b] = c >= c_thr && dmax <= d_thr;
        }
    }
    (0..m)
        .map(|a| {
            let mut s = 0.0;
            for b in 0..m {
                if out_rel[a][b] {
                    s += 1.0;
                }
                if out_rel[b][a] {
                    s -= 1.0;
                }
            }
            s
        })
        .collect()
}

pub fn vikor(r: &Raw, v: f64) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut s = vec![0.0; m];
    let mut rr = vec![0.0_f64; m];
    for j in 0..n {
        let (lo, hi) = (col_min(r, j), col_max(r, j));
        if hi == lo {
            continue;
        }
        let best = if r.benefit[j] { hi } else { lo };
        for i in 0..m {
            let t = r.w[j] * (best - r.x[i][j]).abs() / (hi - lo);
            s[i] += t;
            rr[i] = rr[i].max(t);
        }
    }
    let span = |xs: &[f64]| {
        let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    };
    let (s_lo, s_hi) = span(&s);
    let (r_lo, r_hi) = span(&rr);
    (0..m)
        .map(|i| {
            let a = if s_hi > s_lo { (s[i] - s_lo) / (s_hi - s_lo) } else { 0.0 };
            let b = if r_hi > r_lo { (rr[i] - r_lo) / (r_hi - r_lo) } else { 0.0 };
            v * a + (1.0 - v) * b
        })
        .collect()
}

pub fn marcos(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let ai: Vec<f64> = (0..n).map(|j| if r.benefit[j] { col_max(r, j) } else { col_min(r, j) }).collect();
    let aai: Vec<f64> = (0..n).map(|j| if r.benefit[j] { col_min(r, j) } else { col_max(r, j) }).collect();
    let s_of = |row: &[f64]| {
        let mut s = 0.0;
        for j in 0..n {
            let nv = if r.benefit[j] { row[j] / ai[j] } else { ai[j] / row[j] };
            s += nv * r.w[j];
        }
        s
    };
    let s_ai = s_of(&ai);
    let s_aai = s_of(&aai);
    (0..m)
        .map(|i| {
            let s = s_of(&r.x[i]);
            let kp = s / s_ai;
            let km = s / s_aai;
            let fkp = km / (kp + km);
            let fkm = kp / (kp + km);
            (kp + km) / (1.0 + (1.0 - fkp) / fkp + (1.0 - fkm) / fkm)
        })
        .collect()
}

pub fn promethee(r: &Raw) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut pi = vec![vec![0.0; m]; m];
    for a in 0..m {
        for b in 0..m {
            for j in 0..n {
                if better(r, a, j) > better(r, b, j) {
                    pi[a][b] += r.w[j];
                }
            }
        }
    }
    (0..m)
        .map(|a| {
            if m < 2 {
                return 0.0;
            }
            let mut f = 0.0;
            for b in 0..m {
                f += pi[a][b] - pi[b][a];
            }
            f / (m - 1) as f64
        })
        .collect()
}

pub fn codas(r: &Raw, tau: f64) -> Vec<f64> {
    let (m, n) = dims(r);
    let mut rn = vec![vec![0.0; n]; m];
    for j in 0..n {
        let (lo, hi) = (col_min(r, j), col_max(r, j));
        for i in 0..m {
            let nv = if r.benefit[j] { r.x[i][j] / hi } else { lo / r.x[i][j] };
            rn[i][j] = r.w[j] * nv;
        }
    }
    let ns: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| rn[i][j]).fold(f64::INFINITY, f64::min))
        .collect();
    let e: Vec<f64> = (0..m)
        .map(|i| (0..n).map(|j| (rn[i][j] - ns[j]).powi(2)).sum::<f64>().sqrt())
        .collect();
    let t: Vec<f64> = (0..m)
        .map(|i| (0..n).map(|j| (rn[i][j] - ns[j]).abs()).sum())
        .collect();
    (0..m)
        .map(|i| {
            let mut h = 0.0;
            for k in 0..m {
                let de = e[i] - e[k];
                h += de;
                if de.abs() >= tau {
                    h += t[i] - t[k];
                }
            }
            h
        })
        .collect()
}

/// Fuzzy-TOPSIS on raw breakpoint tuples.
pub fn fuzzy_topsis(lik: &[[f64; 4]], imp: &[[f64; 4]]) -> Vec<f64> {
    let m = lik.len();
    let mut p = vec![[0.0; 4]; m];
    for i in 0..m {
        for k in 0..4 {
            p[i][k] = lik[i][k] * imp[i][k];
        }
    }
    let mut hi = [f64::NEG_INFINITY; 4];
    let mut lo = [f64::INFINITY; 4];
    for i in 0..m {
        for k in 0..4 {
            hi[k] = hi[k].max(p[i][k]);
            lo[k] = lo[k].min(p[i][k]);
        }
    }
    let dist = |a: &[f64; 4], b: &[f64; 4]| {
        let mut s = 0.0;
        for k in 0..4 {
            s += (a[k] - b[k]).powi(2);
        }
        (s / 4.0).sqrt()
    };
    (0..m)
        .map(|i| {
            let dp = dist(&p[i], &hi);
            let dm = dist(&p[i], &lo);
            if dp + dm == 0.0 {
                0.5
            } else {
                dm / (dp + dm)
            }
        })
        .collect()
}

/// Oracle rank vector for a method by its display name.
pub fn oracle_ranks(method: &str, d: &DecisionMatrix) -> Vec<usize> {
    let r = raw(d);
    match method {
        "TOPSIS" => brute_ranks(&topsis(&r), true),
        "COPRAS" => brute_ranks(&copras(&r), true),
        "BORDA" => brute_ranks(&borda(&r), true),
        "SAW" => brute_ranks(&saw(&r), true),
        "ELECTRE" => brute_ranks(&electre(&r, 0.65, 0.35), true),
        "VIKOR" => brute_ranks(&vikor(&r, 0.5), false),
        "MARCOS" => brute_ranks(&marcos(&r), true),
        "PROMETHEE" => brute_ranks(&promethee(&r), true),
        "WSM" => brute_ranks(&wsm(&r), true),
        "CODAS" => brute_ranks(&codas(&r, 0.02), true),
        other => panic!("no oracle for {other}"),
    }
}
