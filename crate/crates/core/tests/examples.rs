//! Fixed regressions. Every value that is derived rather than read off is
//! first recomputed by the brute-force oracle, and only then compared with the
//! engine.

use std::f64::consts::PI;

use relconvex::diagnostics::{
    bounded_monotone_diagnostic, determinant, determinant_all_triples, grv2_check, grv_check,
    psi_preservation_check, rate_diagnostic, slope_from_all_anchors, slope_from_s_check, TripleMode,
};
use relconvex::oracles::{brute_reeval, gen_relative_convex_pair, Instance, Seeded};
use relconvex::*;

const A: [f64; 5] = [4.0, 1.0, 0.0, 2.0, 6.0];
const B: [f64; 5] = [9.0, 4.0, 1.0, 0.0, 1.0];

fn seq(v: &[f64]) -> RealSeq {
    Seq::new(v.to_vec()).unwrap()
}

fn unit(n: usize) -> RealWitness {
    Witness::unit(n).unwrap()
}

fn units(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64).collect()
}

fn tol() -> Tol64 {
    Tolerance::default()
}

fn close(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * (1.0 + x.abs().max(y.abs()))
}

fn assert_all_close(engine: &[f64], oracle: &[f64], rel: f64) {
    assert_eq!(engine.len(), oracle.len());
    for (e, o) in engine.iter().zip(oracle) {
        assert!(close(*e, *o, rel), "engine {engine:?} vs oracle {oracle:?}");
    }
}

// ---- seqcore -------------------------------------------------------------

#[test]
fn forward_differences() {
    assert_eq!(forward_diff(&[1.0, 2.0, 4.0]).unwrap(), vec![1.0, 2.0]);
    assert_eq!(forward_diff(&[7.5, 7.5, 7.5]).unwrap(), vec![0.0, 0.0]);
    let oracle = brute_reeval(&Instance::Differences { a: A.to_vec() });
    assert_eq!(oracle, vec![-3.0, -1.0, 2.0, 4.0]);
    assert_eq!(forward_diff(&A).unwrap(), oracle);
    assert_eq!(forward_diff(&[1.0]), Err(Error::Length { min: 2, got: 1 }));
}

#[test]
fn plain_convexity() {
    let ln = Seq::from_fn(3, 10, |i| (i as f64).ln()).unwrap();
    assert!(!is_convex(&ln, tol()).holds);

    let d = 0.7;
    let r = is_convex(&seq(&[0.0, d, 2.0 * d, 3.0 * d]), tol());
    assert!(r.holds && r.margin.abs() < 1e-15);

    let oracle = brute_reeval(&Instance::SecondDifferences { a: A.to_vec() });
    assert!(oracle.iter().all(|&x| x >= 0.0));
    let r = is_convex(&seq(&A), tol());
    assert!(r.holds);
    let smallest = oracle.iter().copied().fold(f64::INFINITY, f64::min);
    assert!(close(r.margin, smallest / 2.0, 1e-15));
}

#[test]
fn relative_convexity_against_witnesses() {
    let a = Seq::from_fn(3, 100, |i| (i as f64).ln()).unwrap();
    let t = Witness::from_fn(3, 100, |i| (i as f64).ln().ln()).unwrap();
    assert!(is_convex_wrt(&a, &t, tol()).unwrap().holds);

    for v in [A.to_vec(), vec![0.0, 2.0, 1.0, 3.0], (1..9).map(|i| (i as f64).sqrt()).collect()] {
        let s = seq(&v);
        assert_eq!(is_convex_wrt(&s, &unit(v.len()), tol()).unwrap().holds, is_convex(&s, tol()).holds);
    }

    for seed in 0..20u64 {
        let t = oracles::gen_witness(12, Seeded::new(seed)).unwrap();
        let a = t.as_seq().map(|x| x * x).unwrap();
        let gaps = brute_reeval(&Instance::SlopeGaps {
            a: a.to_vec(),
            t: t.to_vec(),
        });
        assert!(gaps.iter().all(|&g| g >= 0.0));
        assert!(is_convex_wrt(&a, &t, tol()).unwrap().holds);
    }
}

#[test]
fn shape_classification() {
    let v: Vec<f64> = (1..=12).map(|n: i32| ((n - 3).abs() as f64).sqrt()).collect();
    let argmin = brute_reeval(&Instance::ArgMin { a: v.clone() });
    assert_eq!(argmin, vec![3.0]);
    let c = classify_shape(&seq(&v), tol());
    assert_eq!(c.variant, Shape::DecThenInc);
    assert_eq!(c.breakpoints.unwrap().0 as f64, argmin[0]);

    let sum: Vec<f64> = (1..=12)
        .map(|n: i32| ((n - 3).abs() as f64).sqrt() + ((n - 9).abs() as f64).sqrt())
        .collect();
    assert_eq!(classify_shape(&seq(&sum), tol()).variant, Shape::NotStrictlyVShaped);
    assert_eq!(classify_shape(&seq(&[0.0, 0.0, 0.0, 1.0, 3.0]), tol()).variant, Shape::ConstThenInc);

    let atan = Seq::from_fn(1, 50, |n| (n as f64).atan()).unwrap();
    assert!(is_relative_convex(&atan, tol()));
    assert!(is_relative_convex(&seq(&[5.0, 3.0, 1.0, 1.0, 2.0, 4.0]), tol()));

    // Δa = (-1, 0, -1): Δa_1/Δt_1 < 0 = Δa_2/Δt_2 > Δa_3/Δt_3 for every
    // increasing t, so the slopes can never be non-decreasing.
    let bad = [3.0, 2.0, 2.0, 1.0];
    let signs: Vec<f64> = brute_reeval(&Instance::Differences { a: bad.to_vec() })
        .iter()
        .map(|d| d.signum() * (d.abs() > 0.0) as i32 as f64)
        .collect();
    assert_eq!(signs, vec![-1.0, 0.0, -1.0]);
    assert!(!is_relative_convex(&seq(&bad), tol()));
}

#[test]
fn recursive_witness() {
    let t = construct_witness(&seq(&[1.0, 2.0, 4.0]), &[1.0, 2.0], 0.0, 1.0, tol()).unwrap();
    assert_eq!(t.to_vec(), vec![0.0, 1.0, 2.0]);
    let t = construct_witness(&seq(&[4.0, 2.0, 1.0]), &[-2.0, -1.0], 0.0, 1.0, tol()).unwrap();
    assert_eq!(t.to_vec(), vec![0.0, 1.0, 2.0]);
    let t = construct_witness(&seq(&[3.0; 3]), &[], -4.0, 1.0, tol()).unwrap();
    assert_eq!(t.to_vec(), vec![-4.0, -3.0, -2.0]);
}

#[test]
fn interval_witness() {
    let a = seq(&[0.0, 1.0, 3.0]);
    let t = construct_witness_on_interval(&a, 0.0, 1.0, tol()).unwrap();
    assert_eq!((t[0], t[2]), (0.0, 1.0));
    // s_1 = 1.5, t_2 = 1 / 1.5
    assert!(close(t[1], 2.0 / 3.0, 1e-15));
    let gaps = brute_reeval(&Instance::SlopeGaps {
        a: a.to_vec(),
        t: t.to_vec(),
    });
    assert!(gaps.iter().all(|&g| g >= 0.0));

    let a = seq(&[3.0, 1.0, 0.0]);
    let t = construct_witness_on_interval(&a, 0.0, 1.0, tol()).unwrap();
    assert_eq!((t[0], t[2]), (0.0, 1.0));
    assert!(is_convex_wrt(&a, &t, tol()).unwrap().holds);

    let t = construct_witness_on_interval(&seq(&[2.0, 0.0, 2.0]), 0.0, 2.0, tol()).unwrap();
    assert_eq!(t.to_vec(), vec![0.0, 1.0, 2.0]);
}

// ---- polyext -------------------------------------------------------------

#[test]
fn extension_slopes_and_values() {
    let ext = Extension::new(&seq(&[0.0, 1.0]), &Witness::new(vec![0.0, 1.0]).unwrap()).unwrap();
    assert_eq!(ext.slopes(), &[1.0]);

    let t = Witness::from_fn(3, 10, |i| (i as f64).ln().ln()).unwrap();
    let a = Seq::from_fn(3, 10, |i| (i as f64).ln()).unwrap();
    let ext = Extension::new(&a, &t).unwrap();
    for (k, &x) in t.iter().enumerate() {
        assert!(close(x.exp(), ext.eval(x).unwrap(), 1e-14));
        assert_eq!(ext.eval(x).unwrap(), a[k]);
    }

    let oracle = brute_reeval(&Instance::Slopes {
        a: A.to_vec(),
        t: units(5),
    });
    assert_eq!(oracle, vec![-3.0, -1.0, 2.0, 4.0]);
    assert_eq!(Extension::new(&seq(&A), &unit(5)).unwrap().slopes(), oracle.as_slice());

    let (a3, t3) = (vec![4.0, 1.0, 0.0], units(3));
    let oracle = brute_reeval(&Instance::Eval {
        a: a3.clone(),
        t: t3.clone(),
        x: 2.5,
    });
    assert_eq!(oracle, vec![0.5]);
    let ext = Extension::new(&seq(&a3), &unit(3)).unwrap();
    assert_eq!(ext.eval(2.5).unwrap(), oracle[0]);
    assert_eq!(ext.eval(1.5).unwrap(), 2.5);
    assert!(matches!(ext.eval(3.5), Err(Error::OutOfDomain { .. })));
}

#[test]
fn generalized_floor() {
    let t = Witness::from_fn(1, 6, |i| (i - 1) as f64).unwrap();
    assert_eq!(floor_wrt(&t, PI, 0.0).unwrap(), 4);
    let oracle = brute_reeval(&Instance::FloorFrac { t: t.to_vec(), q: PI });
    assert_eq!(oracle, vec![4.0, PI - 3.0]);
    assert_eq!(frac_wrt(&t, PI, 0.0).unwrap(), oracle[1]);

    let ln = Witness::from_fn(1, 5, |i| (i as f64).ln()).unwrap();
    assert_eq!(floor_wrt(&ln, 0.25, 0.0).unwrap(), 1);

    let u = unit(6);
    for q in [1.0, 1.5, 2.75, 4.999, 6.0] {
        assert_eq!(floor_wrt(&u, q, 0.0).unwrap(), q.floor() as usize);
    }
    assert_eq!(frac_wrt(&u, 2.75, 0.0).unwrap(), 0.75);
    for &x in u.iter() {
        assert_eq!(frac_wrt(&u, x, 0.0).unwrap(), 0.0);
    }
}

// ---- functionals ---------------------------------------------------------

#[test]
fn weighted_means() {
    let x = [1.0, 2.0, 4.0];
    assert!(close(weighted_mean(&x, &Weights::uniform(3).unwrap()).unwrap(), 7.0 / 3.0, 1e-15));
    assert_eq!(weighted_mean(&x, &Weights::point_mass(3, 3).unwrap()).unwrap(), 4.0);
    let p = vec![1.0, 2.0, 1.0];
    let oracle = brute_reeval(&Instance::WeightedMean { x: x.to_vec(), p: p.clone() });
    assert_eq!(oracle, vec![9.0 / 4.0]);
    assert_eq!(weighted_mean(&x, &Weights::new(p).unwrap()).unwrap(), oracle[0]);
}

#[test]
fn covariances() {
    let p = Weights::new(vec![0.3, 1.0, 2.0]).unwrap();
    assert_eq!(cov_functional(&[2.0; 3], &[1.0, -4.0, 9.0], &p).unwrap(), 0.0);

    let oracle = brute_reeval(&Instance::Covariance {
        x: vec![0.0, 1.0],
        y: vec![0.0, 1.0],
        p: vec![1.0, 1.0],
    });
    assert_eq!(oracle, vec![0.25]);
    let two = Weights::new(vec![1.0, 1.0]).unwrap();
    assert_eq!(cov_functional(&[0.0, 1.0], &[0.0, 1.0], &two).unwrap(), oracle[0]);

    let x = [1.0, 2.0, 3.0];
    let oracle = brute_reeval(&Instance::Covariance {
        x: x.to_vec(),
        y: x.to_vec(),
        p: vec![1.0; 3],
    });
    assert!(close(oracle[0], 2.0 / 3.0, 1e-15));
    let engine = cov_functional(&x, &x, &Weights::uniform(3).unwrap()).unwrap();
    assert!(close(engine, oracle[0], 1e-14));
}

#[test]
fn lupas_constants() {
    for n in 3..=10 {
        let k = lupas_constant(&unit(n)).unwrap();
        let nf = n as f64;
        assert!(close(k, 12.0 / (nf * (nf * nf - 1.0)), 1e-13));
    }
    let t = Witness::new(vec![0.0, 1.0]).unwrap();
    let oracle = brute_reeval(&Instance::LupasConstant { t: t.to_vec() });
    assert_eq!(oracle, vec![2.0]);
    assert_eq!(lupas_constant(&t).unwrap(), oracle[0]);

    let t = Witness::new(vec![-1.0, 0.2, 0.5, 3.0]).unwrap();
    let scaled = t.affine(3.0, -7.0).unwrap();
    assert!(close(lupas_constant(&scaled).unwrap(), lupas_constant(&t).unwrap() / 9.0, 1e-13));
}

#[test]
fn majorization_preorder() {
    let y = [5.0, -1.0, 2.5, 0.5];
    let mean = y.iter().sum::<f64>() / 4.0;
    assert!(majorizes(&[mean; 4], &y, tol()).unwrap());
    let perm = [0.5, 2.5, 5.0, -1.0];
    assert!(majorizes(&perm, &y, tol()).unwrap() && majorizes(&y, &perm, tol()).unwrap());

    let oracle = brute_reeval(&Instance::Majorizes {
        x: vec![1.0, 2.0, 3.0],
        y: vec![0.0, 2.0, 4.0],
    });
    assert_eq!(oracle, vec![1.0, 1.0, 0.0]);
    assert!(majorizes(&[1.0, 2.0, 3.0], &[0.0, 2.0, 4.0], tol()).unwrap());
}

// ---- inequalities --------------------------------------------------------

#[test]
fn lupas_examples() {
    let t = Witness::new(vec![0.0, 0.4, 1.1, 2.0, 3.5]).unwrap();
    let p = Weights::new(vec![1.0, 0.2, 0.0, 3.0, 0.7]).unwrap();
    let r = lupas_check(t.as_seq(), t.as_seq(), &t, &p, tol(), Preconditions::Verify).unwrap();
    assert!(r.holds && r.slack.abs() <= 1e-15);

    let b = t.as_seq().map(|x| (x - 1.0).abs() + x * x).unwrap();
    for (c, d) in [(2.0, -1.0), (-0.5, 3.0), (0.0, 4.0)] {
        let a = t.as_seq().map(|x| c * x + d).unwrap();
        let oracle = brute_reeval(&Instance::Lupas {
            a: a.to_vec(),
            b: b.to_vec(),
            t: t.to_vec(),
            p: p.to_vec(),
        });
        assert!(close(oracle[0], oracle[1], 1e-13));
        let r = lupas_check(&a, &b, &t, &p, tol(), Preconditions::Verify).unwrap();
        assert_all_close(&[r.lhs, r.rhs], &oracle, 1e-12);
        assert!(r.is_equality());
    }

    let oracle = brute_reeval(&Instance::Lupas {
        a: A.to_vec(),
        b: B.to_vec(),
        t: units(5),
        p: vec![1.0; 5],
    });
    assert!(close(oracle[0], 1.4, 1e-14) && close(oracle[1], -2.0, 1e-14));
    let r = lupas_check(&seq(&A), &seq(&B), &unit(5), &Weights::uniform(5).unwrap(), tol(), Preconditions::Verify)
        .unwrap();
    assert!(r.holds);
    assert_all_close(&[r.lhs, r.rhs], &oracle, 1e-12);
}

#[test]
fn pecaric_examples() {
    let arith = seq(&[1.0, 0.5, 0.0, -0.5, -1.0]);
    let r = pecaric_check(&arith, &seq(&B), tol(), Preconditions::Verify).unwrap();
    assert!(r.is_equality());

    for (a, b) in [([3.0, -1.0], [0.5, 2.0]), ([0.0, 7.0], [-2.0, -2.5])] {
        let expected = (a[0] - a[1]) * (b[0] - b[1]) / 2.0;
        let oracle = brute_reeval(&Instance::Pecaric { a: a.to_vec(), b: b.to_vec() });
        assert_all_close(&oracle, &[expected, expected], 1e-14);
        let r = pecaric_check(&seq(&a), &seq(&b), tol(), Preconditions::Verify).unwrap();
        assert_all_close(&[r.lhs, r.rhs], &oracle, 1e-14);
        assert!(r.slack.abs() <= 1e-14);
    }

    let v = [1.0, 0.0, 1.0];
    let oracle = brute_reeval(&Instance::Pecaric { a: v.to_vec(), b: v.to_vec() });
    assert_all_close(&oracle, &[2.0 / 3.0, 0.0], 1e-15);
    let r = pecaric_check(&seq(&v), &seq(&v), tol(), Preconditions::Verify).unwrap();
    assert!(r.holds);
    assert_all_close(&[r.lhs, r.rhs], &oracle, 1e-14);
}

#[test]
fn hhf_examples() {
    let t = Witness::new(vec![-1.0, 0.0, 0.5, 2.0]).unwrap();
    let a = t.as_seq().map(|x: f64| x.exp()).unwrap();
    let r = hhf_bounds(&a, &t, &Weights::point_mass(4, 1).unwrap(), &Psi::Identity, tol(), Preconditions::Verify)
        .unwrap();
    assert_eq!((r.lower, r.value, r.upper), (Some(a[0]), a[0], a[0]));

    let oracle = brute_reeval(&Instance::Hhf {
        a: A.to_vec(),
        t: units(5),
        p: vec![1.0; 5],
        psi: Psi::Identity,
    });
    assert_all_close(&oracle, &[0.0, 2.6, 5.0], 1e-15);
    let r = hhf_bounds(&seq(&A), &unit(5), &Weights::uniform(5).unwrap(), &Psi::Identity, tol(), Preconditions::Verify)
        .unwrap();
    assert_eq!((r.m, r.gamma_t), (Some(3), Some(0.0)));
    assert_all_close(&[r.lower.unwrap(), r.value, r.upper], &oracle, 1e-14);
    assert!(r.holds);

    // arithmetic t and symmetric p, even n
    let a6 = seq(&[5.0, 2.0, 0.5, 0.0, 1.0, 4.0]);
    let p6 = Weights::new(vec![0.2, 1.0, 3.0, 3.0, 1.0, 0.2]).unwrap();
    let r = hhf_bounds(&a6, &unit(6), &p6, &Psi::Identity, tol(), Preconditions::Verify).unwrap();
    let m = 3;
    assert!(close(r.lower.unwrap(), (a6[m - 1] + a6[m]) / 2.0, 1e-15));
    assert!(close(r.upper, (a6[0] + a6[5]) / 2.0, 1e-15));
}

#[test]
fn niezgoda_examples() {
    let r = niezgoda_bound(&seq(&[3.0, -1.0]), &Weights::new(vec![0.4, 2.0]).unwrap(), &Psi::Exp, tol(), Preconditions::Verify)
        .unwrap();
    assert!(r.slack_upper.abs() <= 1e-15);

    for seed in 0..10u64 {
        let a = oracles::gen_convex_on(&unit(7), oracles::ConvexFamily::Hinge, Seeded::new(seed)).unwrap();
        let p = oracles::gen_weights(7, Seeded::new(seed + 100)).unwrap();
        let n = niezgoda_bound(&a, &p, &Psi::Identity, tol(), Preconditions::Verify).unwrap();
        let h = hhf_bounds(&a, &unit(7), &p, &Psi::Identity, tol(), Preconditions::Verify).unwrap();
        let oracle = brute_reeval(&Instance::Niezgoda {
            a: a.to_vec(),
            p: p.to_vec(),
            psi: Psi::Identity,
        });
        assert_all_close(&[n.value, n.upper], &oracle, 1e-12);
        assert!(close(n.upper, h.upper * p.total(), 1e-12));
    }

    let p = vec![1.0, 0.0, 0.0, 0.0, 1.0];
    let oracle = brute_reeval(&Instance::Niezgoda {
        a: A.to_vec(),
        p: p.clone(),
        psi: Psi::Identity,
    });
    assert_eq!(oracle, vec![10.0, 10.0]);
    let r = niezgoda_bound(&seq(&A), &Weights::new(p).unwrap(), &Psi::Identity, tol(), Preconditions::Verify).unwrap();
    assert_eq!((r.value, r.upper), (10.0, 10.0));
    assert!(r.holds && r.lower.is_none());
}

#[test]
fn cor2_examples() {
    let a = seq(&A);
    let sym = Weights::new(vec![0.5, 2.0, 1.0, 2.0, 0.5]).unwrap();
    let r = cor2_bounds(&a, &sym, &Psi::Identity, tol(), Preconditions::Verify).unwrap();
    let total = sym.total();
    // odd n: the mirror index n + 1 - m equals m
    assert!(close(r.lower.unwrap() / total, a[2], 1e-15));
    assert!(close(r.upper / total, (a[0] + a[4]) / 2.0, 1e-15));

    for k in 1..=5 {
        let r = cor2_bounds(&a, &Weights::point_mass(5, k).unwrap(), &Psi::Identity, tol(), Preconditions::Verify)
            .unwrap();
        assert_eq!(r.m, Some(k.min(4)));
        assert!(r.lower.unwrap() <= a[k - 1] + 1e-15 && a[k - 1] <= r.upper + 1e-15);
        if k == 1 {
            assert_eq!((r.upper, r.value), (a[0], a[0]));
        }
    }

    let p = vec![1.0, 2.0, 3.0, 2.0, 1.0];
    let oracle = brute_reeval(&Instance::Cor2 {
        a: A.to_vec(),
        p: p.clone(),
        psi: Psi::Identity,
    });
    assert_all_close(&oracle, &[0.0, 16.0, 45.0], 1e-14);
    let r = cor2_bounds(&a, &Weights::new(p).unwrap(), &Psi::Identity, tol(), Preconditions::Verify).unwrap();
    assert!(r.holds);
    assert_all_close(&[r.lower.unwrap(), r.value, r.upper], &oracle, 1e-14);
}

#[test]
fn majorization_examples() {
    let (a, t) = gen_relative_convex_pair(8, Seeded::new(5)).unwrap();
    let v = oracles::gen_points_in(&t, 6, Seeded::new(6));
    let r = majorization_inequality_check(&a, &t, &v, &v, tol(), Preconditions::Verify).unwrap();
    assert_eq!(r.lhs, r.rhs);

    let pvec = [2.0, 3.0, 4.0];
    let qvec = [1.0, 3.0, 5.0];
    let r = majorization_inequality_check(&seq(&A), &unit(5), &pvec, &qvec, tol(), Preconditions::Verify).unwrap();
    assert_eq!((r.lhs, r.rhs), (3.0 - 10.0, 0.0));

    for seed in 0..50u64 {
        let s = Seeded::new(seed);
        let (a, t) = gen_relative_convex_pair(10, s.derive(10)).unwrap();
        let q = oracles::gen_points_in(&t, 10, s.derive(11));
        let p = oracles::gen_majorized_pair(&q, 5, s.derive(12)).unwrap();
        let oracle = brute_reeval(&Instance::Majorization {
            a: a.to_vec(),
            t: t.to_vec(),
            p: p.clone(),
            q: q.clone(),
        });
        assert!(oracle[2] <= oracle[3] + 1e-9);
        let r = majorization_inequality_check(&a, &t, &p, &q, tol(), Preconditions::Verify).unwrap();
        assert!(r.holds());
        assert_all_close(&[r.lhs, r.rhs, r.sum_p, r.sum_q], &oracle, 1e-12);
    }
}

#[test]
fn integer_majorization_examples() {
    let a = seq(&[1.0, 0.25, 0.0, 1.5]);
    let r = integer_majorization_check(&a, &[2, 2], &[1, 3], tol(), Preconditions::Verify).unwrap();
    assert_eq!((r.lhs, r.rhs), (2.0 * a[1], a[0] + a[2]));
    let r = integer_majorization_check(&a, &[4, 1, 2], &[1, 2, 4], tol(), Preconditions::Verify).unwrap();
    assert_eq!(r.lhs, r.rhs);

    let oracle = brute_reeval(&Instance::IntegerMajorization {
        a: A.to_vec(),
        pidx: vec![2, 3, 4],
        qidx: vec![1, 3, 5],
    });
    assert_eq!(oracle, vec![3.0, 10.0]);
    let r = integer_majorization_check(&seq(&A), &[2, 3, 4], &[1, 3, 5], tol(), Preconditions::Verify).unwrap();
    assert_eq!((r.lhs, r.rhs), (oracle[0], oracle[1]));
    assert!(r.holds());
}

// ---- diagnostics ---------------------------------------------------------

#[test]
fn three_point_forms() {
    for v in [A.to_vec(), vec![0.0, 2.0, 1.0, 3.0], vec![1.0, 1.0, 0.0]] {
        let s = seq(&v);
        assert_eq!(grv_check(&s, &unit(v.len()), tol()).unwrap().holds, is_convex(&s, tol()).holds);
    }
    let t = Witness::new(vec![0.0, 0.3, 1.7, 2.0]).unwrap();
    let r = grv_check(t.as_seq(), &t, tol()).unwrap();
    assert!(r.margin.abs() < 1e-15);

    let a = Seq::from_fn(3, 50, |i| (i as f64).ln()).unwrap();
    let t = Witness::from_fn(3, 50, |i| (i as f64).ln().ln()).unwrap();
    let oracle = brute_reeval(&Instance::Grv {
        a: a.to_vec(),
        t: t.to_vec(),
    });
    assert!(oracle.iter().all(|&x| x >= 0.0));
    let r = grv_check(&a, &t, tol()).unwrap();
    assert!(r.holds);
    assert!(close(r.margin, oracle.iter().copied().fold(f64::INFINITY, f64::min), 1e-12));
}

#[test]
fn ratio_forms() {
    let t = Witness::new(vec![0.0, 0.5, 2.0, 2.5]).unwrap();
    assert_eq!(grv2_check(t.as_seq(), &t, tol()).unwrap().margin, 0.0);

    let sq = Seq::from_fn(1, 8, |i| (i * i) as f64).unwrap();
    let oracle = brute_reeval(&Instance::Grv2 {
        a: sq.to_vec(),
        t: units(8),
    });
    for (k, &x) in oracle.iter().enumerate() {
        let i = (k + 1) as f64;
        assert!(close(x, 2.0 / (2.0 * i + 1.0), 1e-15));
    }
    let r = grv2_check(&sq, &unit(8), tol()).unwrap();
    assert!(r.holds);
    assert!(close(r.margin, oracle[oracle.len() - 1], 1e-15));

    let ln = Seq::from_fn(1, 20, |i| (i as f64).ln()).unwrap();
    assert!(!grv2_check(&ln, &unit(20), tol()).unwrap().holds);
    assert!(!is_convex(&ln, tol()).holds);
}

#[test]
fn determinants() {
    let t = Witness::new(vec![-2.0, -0.5, 1.0, 1.25]).unwrap();
    let affine = t.as_seq().map(|x| -3.0 * x + 0.5).unwrap();
    let oracle = brute_reeval(&Instance::Determinants {
        a: affine.to_vec(),
        t: t.to_vec(),
    });
    assert!(oracle.iter().all(|d| d.abs() < 1e-14));

    let oracle = brute_reeval(&Instance::Determinants {
        a: A.to_vec(),
        t: units(5),
    });
    assert_eq!(oracle.len(), 10);
    assert!(oracle.iter().all(|&d| d >= 0.0));
    let mut k = 0;
    for l in 1..=5 {
        for m in l + 1..=5 {
            for n in m + 1..=5 {
                assert_eq!(determinant(&A, &units(5), l, m, n), oracle[k]);
                k += 1;
            }
        }
    }
    assert!(determinant_all_triples(&seq(&A), &unit(5), tol(), TripleMode::All).unwrap().holds);

    let bad = [0.0, 2.0, 1.0];
    let oracle = brute_reeval(&Instance::Determinants {
        a: bad.to_vec(),
        t: units(3),
    });
    assert_eq!(oracle, vec![-3.0]);
    let r = determinant_all_triples(&seq(&bad), &unit(3), tol(), TripleMode::All).unwrap();
    assert_eq!(r.first_violation, Some(Violation::Triple(1, 2, 3)));
    assert_eq!(determinant(&bad, &units(3), 1, 2, 3), oracle[0]);
}

#[test]
fn anchored_slopes() {
    let t = Witness::new(vec![0.0, 1.0, 1.5, 4.0]).unwrap();
    let r = slope_from_s_check(&t.as_seq().map(|x| 2.0 * x).unwrap(), &t, 2, tol()).unwrap();
    assert!(r.holds && r.margin.abs() < 1e-15);

    let oracle = brute_reeval(&Instance::AnchorSlopes {
        a: A.to_vec(),
        t: units(5),
        s: 1,
    });
    assert_all_close(&oracle, &[-3.0, -2.0, -2.0 / 3.0, 0.5], 1e-15);
    assert!(oracle.windows(2).all(|w| w[0] <= w[1]));
    let r = slope_from_s_check(&seq(&A), &unit(5), 1, tol()).unwrap();
    assert!(r.holds);
    assert!(close(r.margin, 1.0, 1e-15));

    for seed in 0..30u64 {
        let (a, t) = gen_relative_convex_pair(9, Seeded::new(seed)).unwrap();
        assert!(slope_from_all_anchors(&a, &t, tol()).unwrap().holds);
        assert!(is_convex_wrt(&a, &t, tol()).unwrap().holds);
    }
}

#[test]
fn psi_preservation() {
    let (a, t) = gen_relative_convex_pair(10, Seeded::new(2)).unwrap();
    assert!(psi_preservation_check(&a, &t, &Psi::Identity, tol(), Preconditions::Verify).unwrap().holds);

    let a = Seq::from_fn(3, 40, |i| (i as f64).ln()).unwrap();
    let t = Witness::from_fn(3, 40, |i| (i as f64).ln().ln()).unwrap();
    let r = psi_preservation_check(&a, &t, &Psi::Exp, tol(), Preconditions::Verify).unwrap();
    assert!(r.holds);

    for seed in 0..30u64 {
        let (a, t) = gen_relative_convex_pair(11, Seeded::new(seed)).unwrap();
        let mut sorted = a.to_vec();
        sorted.sort_by(f64::total_cmp);
        let median = sorted[sorted.len() / 2];
        let image: Vec<f64> = a.iter().map(|&x| x.max(median)).collect();
        let gaps = brute_reeval(&Instance::SlopeGaps { a: image, t: t.to_vec() });
        assert!(gaps.iter().all(|&g| g >= -1e-9));
        assert!(psi_preservation_check(&a, &t, &Psi::Relu(median), tol(), Preconditions::Verify).unwrap().holds);
    }
}

#[test]
fn bounded_monotone() {
    let a = Seq::from_fn(1, 30, |i| 1.0 / i as f64).unwrap();
    let diffs = brute_reeval(&Instance::Differences { a: a.to_vec() });
    assert!(diffs.iter().all(|&d| d <= 0.0));
    let r = bounded_monotone_diagnostic(&a, &unit(30), 1.0, 1.0, tol(), Preconditions::Verify).unwrap();
    assert!(r.holds);

    let c = seq(&[-2.0; 5]);
    assert!(bounded_monotone_diagnostic(&c, &unit(5), 0.0, 1.0, tol(), Preconditions::Verify).unwrap().holds);

    let n = 25;
    let atan = Seq::from_fn(1, n, |i| (i as f64).atan()).unwrap();
    let s: Vec<f64> = (1..n).map(|k| 1.0 - 1.0 / (k as f64 + 1.0)).collect();
    let t = construct_witness(&atan, &s, 0.0, 1.0, tol()).unwrap();
    assert!(matches!(
        bounded_monotone_diagnostic(&atan, &t, PI / 2.0, 1.0, tol(), Preconditions::Verify),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn rates() {
    let n = 100;
    let a = Seq::from_fn(1, n, |k| -1.0 / k as f64).unwrap();
    let t = unit(n);
    let oracle = brute_reeval(&Instance::RateTerms { a: a.to_vec(), t: t.to_vec() });
    for (k, &x) in oracle.iter().enumerate() {
        assert!(close(x, 1.0 / (k as f64 + 2.0), 1e-13));
    }
    let tail = oracle[74..].iter().copied().fold(0.0, f64::max);
    assert!(tail <= 0.014);
    let r = rate_diagnostic(&a, &t, 1.0, tol(), Preconditions::Skip).unwrap();
    assert_all_close(&r.terms, &oracle, 1e-12);
    assert!(close(r.max_tail, tail, 1e-12));

    let c = seq(&[1.5; 8]);
    let r = rate_diagnostic(&c, &unit(8), 1.0, tol(), Preconditions::Verify).unwrap();
    assert!(r.terms.iter().chain(&r.partial_sums).all(|&x| x == 0.0));

    let b = Seq::from_fn(1, 200, |k| -(1..=k).map(|j| 1.0 / (j * j) as f64).sum::<f64>()).unwrap();
    let t = unit(200);
    let terms = brute_reeval(&Instance::RateTerms { a: b.to_vec(), t: t.to_vec() });
    for (k, &x) in terms.iter().enumerate() {
        let m = (k + 1) as f64;
        assert!(close(x, -m / ((m + 1.0) * (m + 1.0)), 1e-12));
    }
    let sums = brute_reeval(&Instance::RatePartialSums { a: b.to_vec(), t: t.to_vec() });
    let r = rate_diagnostic(&b, &t, 1.0, tol(), Preconditions::Verify).unwrap();
    assert_all_close(&r.terms, &terms, 1e-12);
    assert_all_close(&r.partial_sums, &sums, 1e-12);
    assert!(r.terms.iter().all(|&x| x <= 0.0));
    assert!(r.increments_shrink());
}
