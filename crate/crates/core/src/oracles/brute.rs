//! Naive recomputation of every quantity the engines report.
//!
//! Everything here works on plain `f64` slices with explicit loops and calls
//! nothing from the engine modules, so agreement between the two is evidence
//! rather than tautology. Indices in instances are 1-based, as in the public
//! API.

use serde::Serialize;

use crate::inequalities::Psi;

/// One input to [`brute_reeval`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    /// `[a_2 - a_1, ..., a_n - a_{n-1}]`
    Differences { a: Vec<f64> },
    /// `[a_{i+1} - 2 a_i + a_{i-1}]` over interior `i`.
    SecondDifferences { a: Vec<f64> },
    /// `[Δa_i / Δt_i]`
    Slopes { a: Vec<f64>, t: Vec<f64> },
    /// `[r_{i+1} - r_i]` for the slopes `r`.
    SlopeGaps { a: Vec<f64>, t: Vec<f64> },
    /// `[index of the first minimum]`
    ArgMin { a: Vec<f64> },
    /// `[value of the polygonal extension at x]`
    Eval { a: Vec<f64>, t: Vec<f64>, x: f64 },
    /// `[⌊q⌋_t, {q}_t]`
    FloorFrac { t: Vec<f64>, q: f64 },
    /// `[Σ p x / Σ p]`
    WeightedMean { x: Vec<f64>, p: Vec<f64> },
    /// `[S(x, y)]` by the pairwise double sum.
    Covariance { x: Vec<f64>, y: Vec<f64>, p: Vec<f64> },
    /// `[1 / (n S(t, t))]` with uniform weights.
    LupasConstant { t: Vec<f64> },
    /// Sorted prefix-sum slacks `Σ_{j<=k} y↓_j - Σ_{j<=k} x↓_j`.
    Majorizes { x: Vec<f64>, y: Vec<f64> },
    /// `[lhs, rhs]` of the Lupas-type inequality.
    Lupas {
        a: Vec<f64>,
        b: Vec<f64>,
        t: Vec<f64>,
        p: Vec<f64>,
    },
    /// `[lhs, rhs]` of the Pečarić inequality.
    Pecaric { a: Vec<f64>, b: Vec<f64> },
    /// `[lower, value, upper]` of the weighted sandwich.
    Hhf {
        a: Vec<f64>,
        t: Vec<f64>,
        p: Vec<f64>,
        psi: Psi<f64>,
    },
    /// `[value, upper]`
    Niezgoda { a: Vec<f64>, p: Vec<f64>, psi: Psi<f64> },
    /// `[lower, value, upper]`
    Cor2 { a: Vec<f64>, p: Vec<f64>, psi: Psi<f64> },
    /// `[lhs, rhs, Σ a_t*(p_i), Σ a_t*(q_i)]`
    Majorization {
        a: Vec<f64>,
        t: Vec<f64>,
        p: Vec<f64>,
        q: Vec<f64>,
    },
    /// `[Σ a_{pidx_i}, Σ a_{qidx_i}]`
    IntegerMajorization {
        a: Vec<f64>,
        pidx: Vec<usize>,
        qidx: Vec<usize>,
    },
    /// Chord gap at each interior index.
    Grv { a: Vec<f64>, t: Vec<f64> },
    /// `[Δ²a_i/Δa_i - Δ²t_i/Δt_i]`
    Grv2 { a: Vec<f64>, t: Vec<f64> },
    /// Raw determinants over all triples in lexicographic order.
    Determinants { a: Vec<f64>, t: Vec<f64> },
    /// Divided differences from anchor `s`.
    AnchorSlopes { a: Vec<f64>, t: Vec<f64>, s: usize },
    /// `[n Δa_n / Δt_n]`
    RateTerms { a: Vec<f64>, t: Vec<f64> },
    /// Partial sums of `n (r_{n+1} - r_n)`.
    RatePartialSums { a: Vec<f64>, t: Vec<f64> },
}

fn map(psi: &Psi<f64>, x: f64) -> f64 {
    match *psi {
        Psi::Identity => x,
        Psi::Exp => x.exp(),
        Psi::Relu(c) => {
            if x > c {
                x
            } else {
                c
            }
        }
        Psi::Square => x * x,
    }
}

fn total(v: &[f64]) -> f64 {
    let mut s = 0.0;
    for x in v {
        s += *x;
    }
    s
}

fn slope_list(a: &[f64], t: &[f64]) -> Vec<f64> {
    let mut r = Vec::new();
    for i in 0..a.len() - 1 {
        r.push((a[i + 1] - a[i]) / (t[i + 1] - t[i]));
    }
    r
}

fn pairwise_cov(x: &[f64], y: &[f64], p: &[f64]) -> f64 {
    let w = total(p);
    let mut s = 0.0;
    for i in 0..x.len() {
        for j in 0..x.len() {
            s += p[i] * p[j] * (x[i] - x[j]) * (y[i] - y[j]);
        }
    }
    s / (2.0 * w * w)
}

/// Largest 1-based `j` with `t_j <= q`, after clamping `q` into `[t_1, t_n]`.
fn scan_floor(t: &[f64], q: f64) -> (usize, f64) {
    let q = q.max(t[0]).min(t[t.len() - 1]);
    let mut j = 1;
    for (i, &ti) in t.iter().enumerate() {
        if ti <= q {
            j = i + 1;
        }
    }
    (j, q)
}

fn scan_eval(a: &[f64], t: &[f64], x: f64) -> f64 {
    let (j, x) = scan_floor(t, x);
    if j == t.len() {
        return a[j - 1];
    }
    let w = (x - t[j - 1]) / (t[j] - t[j - 1]);
    (1.0 - w) * a[j - 1] + w * a[j]
}

fn sorted_desc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    // insertion sort, kept deliberately simple
    for i in 1..out.len() {
        let mut k = i;
        while k > 0 && out[k - 1] < out[k] {
            out.swap(k - 1, k);
            k -= 1;
        }
    }
    out
}

fn sandwich(image: &[f64], t: &[f64], p: &[f64]) -> Vec<f64> {
    let n = t.len();
    let w = total(p);
    let mut centre = 0.0;
    for i in 0..n {
        centre += p[i] * t[i];
    }
    centre /= w;
    let (mut m, centre) = scan_floor(t, centre);
    let gamma = if m == n {
        m = n - 1;
        1.0
    } else {
        (centre - t[m - 1]) / (t[m] - t[m - 1])
    };
    let lambda = (t[n - 1] - centre) / (t[n - 1] - t[0]);
    let mut value = 0.0;
    for i in 0..n {
        value += p[i] * image[i];
    }
    vec![
        (1.0 - gamma) * image[m - 1] + gamma * image[m],
        value / w,
        lambda * image[0] + (1.0 - lambda) * image[n - 1],
    ]
}

/// Recomputes the quantities described by `instance` by direct summation.
pub fn brute_reeval(instance: &Instance) -> Vec<f64> {
    match instance {
        Instance::Differences { a } => (1..a.len()).map(|i| a[i] - a[i - 1]).collect(),
        Instance::SecondDifferences { a } => {
            (1..a.len() - 1).map(|i| a[i + 1] - 2.0 * a[i] + a[i - 1]).collect()
        }
        Instance::Slopes { a, t } => slope_list(a, t),
        Instance::SlopeGaps { a, t } => {
            let r = slope_list(a, t);
            (1..r.len()).map(|i| r[i] - r[i - 1]).collect()
        }
        Instance::ArgMin { a } => {
            let mut best = 0;
            for i in 1..a.len() {
                if a[i] < a[best] {
                    best = i;
                }
            }
            vec![(best + 1) as f64]
        }
        Instance::Eval { a, t, x } => vec![scan_eval(a, t, *x)],
        Instance::FloorFrac { t, q } => {
            let (j, q) = scan_floor(t, *q);
            vec![j as f64, q - t[j - 1]]
        }
        Instance::WeightedMean { x, p } => {
            let mut s = 0.0;
            for i in 0..x.len() {
                s += p[i] * x[i];
            }
            vec![s / total(p)]
        }
        Instance::Covariance { x, y, p } => vec![pairwise_cov(x, y, p)],
        Instance::LupasConstant { t } => {
            let ones = vec![1.0; t.len()];
            vec![1.0 / (t.len() as f64 * pairwise_cov(t, t, &ones))]
        }
        Instance::Majorizes { x, y } => {
            let (xs, ys) = (sorted_desc(x), sorted_desc(y));
            let (mut px, mut py) = (0.0, 0.0);
            let mut out = Vec::new();
            for k in 0..xs.len() {
                px += xs[k];
                py += ys[k];
                out.push(py - px);
            }
            out
        }
        Instance::Lupas { a, b, t, p } => {
            let lhs = pairwise_cov(a, b, p);
            let rhs = pairwise_cov(a, t, p) * pairwise_cov(b, t, p) / pairwise_cov(t, t, p);
            vec![lhs, rhs]
        }
        Instance::Pecaric { a, b } => {
            let n = a.len();
            let t: Vec<f64> = (1..=n).map(|i| i as f64).collect();
            let ones = vec![1.0; n];
            let lhs = pairwise_cov(a, b, &ones);
            let rhs = pairwise_cov(a, &t, &ones) * pairwise_cov(b, &t, &ones) / pairwise_cov(&t, &t, &ones);
            vec![n as f64 * lhs, n as f64 * rhs]
        }
        Instance::Hhf { a, t, p, psi } => {
            let image: Vec<f64> = a.iter().map(|&x| map(psi, x)).collect();
            sandwich(&image, t, p)
        }
        Instance::Niezgoda { a, p, psi } => {
            let n = a.len();
            let (first, last) = (map(psi, a[0]), map(psi, a[n - 1]));
            let (mut value, mut upper) = (0.0, 0.0);
            for i in 0..n {
                let s = i as f64 / (n - 1) as f64;
                value += p[i] * map(psi, a[i]);
                upper += p[i] * ((1.0 - s) * first + s * last);
            }
            vec![value, upper]
        }
        Instance::Cor2 { a, p, psi } => {
            let n = a.len();
            let image: Vec<f64> = a.iter().map(|&x| map(psi, x)).collect();
            let mut centre = 0.0;
            for (i, &w) in p.iter().enumerate() {
                centre += (i + 1) as f64 * w;
            }
            centre /= total(p);
            let mut m = 1;
            while m + 1 < n && ((m + 1) as f64) <= centre {
                m += 1;
            }
            let phi = |u: usize, v: usize| {
                let mut s = 0.0;
                for i in 1..=n {
                    let w = (i as f64 - u as f64) / (v as f64 - u as f64);
                    s += p[i - 1] * (w * image[v - 1] + (1.0 - w) * image[u - 1]);
                }
                s
            };
            let mut value = 0.0;
            for i in 0..n {
                value += p[i] * image[i];
            }
            vec![phi(m, m + 1), value, phi(1, n)]
        }
        Instance::Majorization { a, t, p, q } => {
            let n = t.len();
            let piece = |x: f64| {
                let (j, x) = scan_floor(t, x);
                let slope = if j == n {
                    0.0
                } else {
                    (a[j] - a[j - 1]) / (t[j] - t[j - 1])
                };
                (a[j - 1], (x - t[j - 1]) * slope)
            };
            let (mut lhs, mut rhs, mut sp, mut sq) = (0.0, 0.0, 0.0, 0.0);
            for k in 0..p.len() {
                let (ap, dp) = piece(p[k]);
                let (aq, dq) = piece(q[k]);
                lhs += ap - aq;
                rhs += dq - dp;
                sp += scan_eval(a, t, p[k]);
                sq += scan_eval(a, t, q[k]);
            }
            vec![lhs, rhs, sp, sq]
        }
        Instance::IntegerMajorization { a, pidx, qidx } => {
            let mut sp = 0.0;
            let mut sq = 0.0;
            for k in 0..pidx.len() {
                sp += a[pidx[k] - 1];
                sq += a[qidx[k] - 1];
            }
            vec![sp, sq]
        }
        Instance::Grv { a, t } => (1..a.len() - 1)
            .map(|i| {
                let (l, r) = (t[i] - t[i - 1], t[i + 1] - t[i]);
                (r * a[i - 1] + l * a[i + 1]) / (l + r) - a[i]
            })
            .collect(),
        Instance::Grv2 { a, t } => (0..a.len() - 2)
            .map(|i| {
                let (d0, d1) = (a[i + 1] - a[i], a[i + 2] - a[i + 1]);
                let (e0, e1) = (t[i + 1] - t[i], t[i + 2] - t[i + 1]);
                (d1 - d0) / d0 - (e1 - e0) / e0
            })
            .collect(),
        Instance::Determinants { a, t } => {
            let n = a.len();
            let mut out = Vec::new();
            for l in 0..n {
                for m in l + 1..n {
                    for k in m + 1..n {
                        // cofactor expansion of |t a 1| along the third column
                        let det = (t[m] * a[k] - t[k] * a[m]) - (t[l] * a[k] - t[k] * a[l])
                            + (t[l] * a[m] - t[m] * a[l]);
                        out.push(det);
                    }
                }
            }
            out
        }
        Instance::AnchorSlopes { a, t, s } => {
            let s = s - 1;
            (s + 1..a.len()).map(|i| (a[i] - a[s]) / (t[i] - t[s])).collect()
        }
        Instance::RateTerms { a, t } => slope_list(a, t)
            .iter()
            .enumerate()
            .map(|(k, r)| (k + 1) as f64 * r)
            .collect(),
        Instance::RatePartialSums { a, t } => {
            let r = slope_list(a, t);
            let mut acc = 0.0;
            let mut out = Vec::new();
            for j in 1..r.len() {
                acc += j as f64 * (r[j] - r[j - 1]);
                out.push(acc);
            }
            out
        }
    }
}
