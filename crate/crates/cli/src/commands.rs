use std::fs::File;
use std::io::{self, Write};

use anyhow::{bail, Context, Result};
use relconvex::diagnostics::{
    bounded_monotone_diagnostic, determinant_all_triples, grv2_check, grv_check, rate_diagnostic,
    reference_decay_threshold, slope_from_all_anchors, TripleMode,
};
use relconvex::oracles::{self, Seeded};
use relconvex::*;
use serde_json::{json, Value};

use crate::args::{Command, GlobalOpts};
use crate::input::Inputs;

/// Outcome class of a command, mapped to the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Success,
}

impl Verdict {
    fn from_holds(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Holds | Verdict::Success => 0,
            Verdict::Violated => 1,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Success => "success",
        }
    }
}

struct Outcome {
    verdict: Verdict,
    details: Value,
    parameters: Value,
}

impl Outcome {
    fn new(verdict: Verdict, details: Value, parameters: Value) -> Self {
        Outcome {
            verdict,
            details,
            parameters,
        }
    }
}

fn preconditions(g: &GlobalOpts) -> Preconditions {
    if g.skip_verify {
        Preconditions::Skip
    } else {
        Preconditions::Verify
    }
}

fn to_value<S: serde::Serialize>(x: &S) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Runs `command` and writes its report. Returns the verdict for the exit code.
pub fn run(command: &Command, g: &GlobalOpts) -> Result<Verdict> {
    let tol = Tolerance::new(g.tol_abs, g.tol_rel)?;
    let inputs = Inputs::load(g.input.as_deref())?;
    let mut samples = None;
    let outcome = execute(command, g, tol, &inputs, &mut samples)?;

    let report = json!({
        "command": command.name(),
        "verdict": outcome.verdict.as_str(),
        "margin_or_slacks": outcome.details,
        "parameters": outcome.parameters,
        "tolerance": { "abs": tol.abs, "rel": tol.rel },
        "version": env!("CARGO_PKG_VERSION"),
    });
    let text = serde_json::to_string_pretty(&report)? + "\n";

    match (samples, g.output_path()) {
        (Some(csv), Some(path)) => {
            std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
            io::stdout().write_all(text.as_bytes())?;
        }
        (Some(csv), None) => {
            io::stdout().write_all(&csv)?;
            io::stderr().write_all(text.as_bytes())?;
        }
        (None, Some(path)) => {
            let mut f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            f.write_all(text.as_bytes())?;
        }
        (None, None) => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(outcome.verdict)
}

fn execute(
    command: &Command,
    g: &GlobalOpts,
    tol: Tol64,
    inputs: &Inputs,
    samples: &mut Option<Vec<u8>>,
) -> Result<Outcome> {
    let pre = preconditions(g);
    let psi = g.psi;
    let common = json!({ "skip_verify": g.skip_verify, "psi": psi.to_string() });
    let with = |extra: Value| {
        let mut p = common.clone();
        if let (Some(p), Value::Object(e)) = (p.as_object_mut(), extra) {
            p.extend(e);
        }
        p
    };

    Ok(match command {
        Command::Classify => {
            let a = inputs.seq("a")?;
            let class = classify_shape(&a, tol);
            Outcome::new(
                Verdict::from_holds(class.variant.is_v_shaped()),
                to_value(&class),
                with(json!({ "a": a })),
            )
        }
        Command::Check { wrt } => {
            let a = inputs.seq("a")?;
            if *wrt {
                let t = inputs.witness("t")?;
                let r = is_convex_wrt(&a, &t, tol)?;
                Outcome::new(Verdict::from_holds(r.holds), to_value(&r), with(json!({ "a": a, "t": t, "wrt": true })))
            } else {
                let r = is_convex(&a, tol);
                Outcome::new(Verdict::from_holds(r.holds), to_value(&r), with(json!({ "a": a, "wrt": false })))
            }
        }
        Command::Witness { t1, plateau_step } => {
            let a = inputs.seq("a")?;
            let s = inputs.raw("s").unwrap_or(&[]).to_vec();
            let params = with(json!({ "a": a, "s": s, "t1": t1, "plateau_step": plateau_step }));
            let class = classify_shape(&a, tol);
            if !class.variant.is_v_shaped() {
                return Ok(Outcome::new(Verdict::Violated, json!({ "shape": to_value(&class) }), params));
            }
            let t = construct_witness(&a, &s, *t1, *plateau_step, tol)?;
            let check = is_convex_wrt(&a, &t, tol)?;
            Outcome::new(Verdict::Success, json!({ "t": t, "check": to_value(&check) }), params)
        }
        Command::Subdivide { alpha, beta } => {
            let a = inputs.seq("a")?;
            let params = with(json!({ "a": a, "alpha": alpha, "beta": beta }));
            let class = classify_shape(&a, tol);
            if !class.variant.is_v_shaped() {
                return Ok(Outcome::new(Verdict::Violated, json!({ "shape": to_value(&class) }), params));
            }
            let t = construct_witness_on_interval(&a, *alpha, *beta, tol)?;
            let check = is_convex_wrt(&a, &t, tol)?;
            Outcome::new(Verdict::Success, json!({ "t": t, "check": to_value(&check) }), params)
        }
        Command::Extend => {
            let a = inputs.seq("a")?;
            let t = inputs.witness("t")?;
            if g.resolution < 2 {
                bail!("--resolution must be at least 2");
            }
            let ext = Extension::new(&a, &t)?;
            let mut buf = Vec::new();
            ext.write_samples_csv(g.resolution, &mut buf)?;
            *samples = Some(buf);
            let convex = is_convex_wrt(&a, &t, tol)?;
            Outcome::new(
                Verdict::Success,
                json!({ "slopes": ext.slopes(), "convex": to_value(&convex) }),
                with(json!({ "a": a, "t": t, "resolution": g.resolution, "output": g.output })),
            )
        }
        Command::Lupas => {
            let a = inputs.seq("a")?;
            let b = inputs.seq("b")?;
            let t = inputs.witness("t")?;
            let p = inputs.weights_or_uniform(a.len())?;
            let r = lupas_check(&a, &b, &t, &p, tol, pre)?;
            Outcome::new(
                Verdict::from_holds(r.holds),
                to_value(&r),
                with(json!({ "a": a, "b": b, "t": t, "p": p.to_vec() })),
            )
        }
        Command::Pecaric => {
            let a = inputs.seq("a")?;
            let b = inputs.seq("b")?;
            let r = pecaric_check(&a, &b, tol, pre)?;
            Outcome::new(Verdict::from_holds(r.holds), to_value(&r), with(json!({ "a": a, "b": b })))
        }
        Command::Hhf => {
            let a = inputs.seq("a")?;
            let t = inputs.witness("t")?;
            let p = inputs.weights_or_uniform(a.len())?;
            let r = hhf_bounds(&a, &t, &p, &psi, tol, pre)?;
            Outcome::new(
                Verdict::from_holds(r.holds),
                to_value(&r),
                with(json!({ "a": a, "t": t, "p": p.to_vec() })),
            )
        }
        Command::Niezgoda => {
            let a = inputs.seq("a")?;
            let p = inputs.weights_or_uniform(a.len())?;
            let r = niezgoda_bound(&a, &p, &psi, tol, pre)?;
            Outcome::new(Verdict::from_holds(r.holds), to_value(&r), with(json!({ "a": a, "p": p.to_vec() })))
        }
        Command::Cor2 => {
            let a = inputs.seq("a")?;
            let p = inputs.weights_or_uniform(a.len())?;
            let r = cor2_bounds(&a, &p, &psi, tol, pre)?;
            Outcome::new(Verdict::from_holds(r.holds), to_value(&r), with(json!({ "a": a, "p": p.to_vec() })))
        }
        Command::Majorize => {
            let a = inputs.seq("a")?;
            if inputs.raw("t").is_some() {
                let t = inputs.witness("t")?;
                let pvec = inputs.require("pvec")?;
                let qvec = inputs.require("qvec")?;
                let r = majorization_inequality_check(&a, &t, pvec, qvec, tol, pre)?;
                Outcome::new(
                    Verdict::from_holds(r.holds()),
                    to_value(&r),
                    with(json!({ "a": a, "t": t, "pvec": pvec, "qvec": qvec })),
                )
            } else {
                let pidx = inputs.indices("pvec")?;
                let qidx = inputs.indices("qvec")?;
                let r = integer_majorization_check(&a, &pidx, &qidx, tol, pre)?;
                Outcome::new(
                    Verdict::from_holds(r.holds()),
                    to_value(&r),
                    with(json!({ "a": a, "pvec": pidx, "qvec": qidx })),
                )
            }
        }
        Command::Diagnose { alpha, bound } => diagnose(inputs, tol, pre, *alpha, *bound, with)?,
        Command::Fuzz { count, len } => fuzz(g, tol, pre, *count, *len, with)?,
    })
}

fn not_applicable(e: &Error) -> Value {
    json!({ "status": "not_applicable", "reason": e.to_string() })
}

fn diagnose(
    inputs: &Inputs,
    tol: Tol64,
    pre: Preconditions,
    alpha: f64,
    bound: Option<f64>,
    with: impl Fn(Value) -> Value,
) -> Result<Outcome> {
    let a = inputs.seq("a")?;
    let t = inputs.witness("t")?;
    let base = is_convex_wrt(&a, &t, tol)?;
    let grv = grv_check(&a, &t, tol)?;
    let consecutive = determinant_all_triples(&a, &t, tol, TripleMode::Consecutive)?;
    let anchors = slope_from_all_anchors(&a, &t, tol)?;
    let mut verdicts = vec![grv.holds, consecutive.holds, anchors.holds];
    let grv2 = match grv2_check(&a, &t, tol) {
        Ok(r) => {
            verdicts.push(r.holds);
            to_value(&r)
        }
        Err(e) => not_applicable(&e),
    };
    let bound = bound.unwrap_or_else(|| a.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    let monotone = match bounded_monotone_diagnostic(&a, &t, bound, alpha, tol, pre) {
        Ok(r) => to_value(&r),
        Err(e) => not_applicable(&e),
    };
    let rate = match rate_diagnostic(&a, &t, alpha, tol, pre) {
        Ok(r) => {
            let threshold = reference_decay_threshold(a.len());
            json!({
                "report": to_value(&r),
                "decay_threshold": threshold,
                "decays": r.decays_below(threshold),
                "increments_shrink": r.increments_shrink(),
            })
        }
        Err(e) => not_applicable(&e),
    };
    let agree = verdicts.iter().all(|&v| v == base.holds);
    Ok(Outcome::new(
        Verdict::from_holds(base.holds && agree),
        json!({
            "convex_wrt": to_value(&base),
            "three_point": to_value(&grv),
            "ratio_form": grv2,
            "determinants": to_value(&consecutive),
            "anchored_slopes": to_value(&anchors),
            "characterizations_agree": agree,
            "bounded_monotone": monotone,
            "rate": rate,
        }),
        with(json!({ "a": a, "t": t, "alpha": alpha, "bound": bound })),
    ))
}

fn fuzz(
    g: &GlobalOpts,
    tol: Tol64,
    pre: Preconditions,
    count: u64,
    len: usize,
    with: impl Fn(Value) -> Value,
) -> Result<Outcome> {
    if len < 2 {
        bail!("--len must be at least 2");
    }
    let mut failures = Vec::new();
    let mut worst = json!({});
    let mut min_slack = [f64::INFINITY; 4];
    for seed in g.seed..g.seed.saturating_add(count) {
        let s = Seeded::new(seed);
        let (a, t) = oracles::gen_relative_convex_pair(len, s)?;
        let b = oracles::gen_convex_on(&t, oracles::ConvexFamily::Quadratic, s.derive(1))?;
        let p = oracles::gen_weights(len, s.derive(2))?;
        let q = oracles::gen_points_in(&t, len, s.derive(3));
        let pv = oracles::gen_majorized_pair(&q, oracles::default_transform_count(len), s.derive(4))?;

        let lupas = lupas_check(&a, &b, &t, &p, tol, pre)?;
        let hhf = hhf_bounds(&a, &t, &p, &g.psi, tol, pre)?;
        let maj = majorization_inequality_check(&a, &t, &pv, &q, tol, pre)?;
        let base = is_convex_wrt(&a, &t, tol)?.holds;
        let agree = grv_check(&a, &t, tol)?.holds == base
            && determinant_all_triples(&a, &t, tol, TripleMode::All)?.holds == base
            && slope_from_all_anchors(&a, &t, tol)?.holds == base;

        let slacks = [
            lupas.slack,
            hhf.slack_lower.unwrap_or(f64::INFINITY),
            hhf.slack_upper,
            maj.rhs - maj.lhs,
        ];
        for (m, s) in min_slack.iter_mut().zip(slacks) {
            *m = m.min(s);
        }
        for (name, ok) in [
            ("lupas", lupas.holds),
            ("hhf", hhf.holds),
            ("majorization", maj.holds()),
            ("characterizations", agree),
        ] {
            if !ok {
                failures.push(json!({ "seed": seed, "check": name }));
            }
        }
    }
    if let Some(obj) = worst.as_object_mut() {
        for (k, v) in ["lupas", "hhf_lower", "hhf_upper", "majorization"].iter().zip(min_slack) {
            obj.insert((*k).into(), json!(v));
        }
    }
    Ok(Outcome::new(
        Verdict::from_holds(failures.is_empty()),
        json!({ "instances": count, "failures": failures, "min_slack": worst }),
        with(json!({ "seed": g.seed, "count": count, "len": len })),
    ))
}
