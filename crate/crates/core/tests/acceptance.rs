//! One line per acceptance criterion, exact equality throughout.
//!
//! A criterion listed in `KNOWN_RED` is printed as FAIL with its reason and
//! does not fail the run; it does fail the run if it unexpectedly passes.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use rotcalc::verify::{self, stated_tau2_lm, spot_check, verify_mutated, verify_with};
use rotcalc::{Context, Engine, Expression as E, Rat};

/// Criteria whose stated form does not hold, with the reason.
const KNOWN_RED: &[(u32, &str)] = &[(
    5,
    "the stated level-2 closed form disagrees with the recursion at m = 2: \
     the g-term must be (15/8)m(m+1), not m(11m+19)/8, and the r-term bracket \
     must be (3m+5)/2 u_j^m + sum_{p>=1} u_i^p u_j^(m-p)",
)];

struct Engines(BTreeMap<usize, Engine>);

impl Engines {
    fn new() -> Engines {
        Engines((1..=4).map(|n| (n, Engine::new(Context::with_n(n).unwrap()))).collect())
    }

    fn get(&self, n: usize) -> &Engine {
        &self.0[&n]
    }
}

#[derive(Default)]
struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn fail(&mut self, note: String) {
        self.ok = false;
        self.notes.push(note);
    }

    fn require(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.fail(note());
        }
    }
}

/// Runs registry identities at the given dimensions.
fn identities(en: &Engines, ids: &[&str], ns: &[usize]) -> Outcome {
    let mut out = Outcome::new();
    for &n in ns {
        for id in ids {
            match verify_with(en.get(n), id) {
                Ok(r) if r.passed => {}
                Ok(r) => out.fail(format!("{id} N={n}: {} witness {}", r.failed_check.unwrap_or_default(), r.witness)),
                Err(e) => out.fail(format!("{id} N={n}: {e}")),
            }
        }
    }
    out
}

fn c5(en: &Engines) -> Outcome {
    let mut out = identities(en, &["lmrec-closed", "tau-vlf", "actlm", "l1-derived"], &[2, 3]);
    for n in [2, 3] {
        let e = en.get(n);
        for m in 0..=2 {
            for i in 1..=n {
                let rec = e.lm_recursive(m, 2, i).unwrap();
                let shown = stated_tau2_lm(e, m, i).unwrap();
                if rec != shown {
                    out.fail(format!("N={n} <tau^2 L{m}, E{i}>: recursion - stated = {}", &rec - &shown));
                }
            }
        }
    }
    out
}

fn c10(en: &Engines) -> Outcome {
    let mut out = identities(en, &["virasoro-main"], &[1, 2, 3]);
    // both sides at N = 1, worked by hand
    let e = en.get(1);
    let hand = &(&(&E::t(2, 1) * &E::s_pow(1, -4)) * &E::int(6)) - &(&(&E::r(1, 1).pow(2) * &E::inv_g(1)) * &E::frac(49, 4));
    let hand = &hand * &E::constant(Rat::new(1, 1152));
    let target = e.l1f2_target().unwrap();
    let pred = e.prediction(rotcalc::genus2::PredictionRoute::Rotation).unwrap();
    out.require(target == hand, || format!("N=1 L1 F2 = {target}, expected {hand}"));
    out.require(pred == hand, || format!("N=1 prediction = {pred}, expected {hand}"));
    out
}

fn c14(en: &Engines) -> Outcome {
    let e = en.get(2);
    let ids: Vec<&str> = verify::registry().iter().map(|i| i.id).collect();
    let results: Vec<(String, Outcome, bool)> = ids
        .par_iter()
        .enumerate()
        .map(|(k, id)| {
            let mut out = Outcome::new();
            let passing = verify_with(e, id).map(|r| r.passed).unwrap_or(false);
            out.require(passing, || format!("{id} does not pass symbolically at N=2"));
            match spot_check(e, id, 100, 1000 + k as u64) {
                Ok(s) => out.require(s.mismatches.is_empty(), || {
                    format!("{id}: {} of {} evaluations disagree, first {:?}", s.mismatches.len(), s.evaluations, s.mismatches[0])
                }),
                Err(err) => out.fail(format!("{id}: {err}")),
            }
            let mut mutated = false;
            for seed in 0..3u64 {
                match verify_mutated(e, id, seed) {
                    Ok(Some(r)) => {
                        mutated = true;
                        out.require(!r.passed && !r.witness.is_zero(), || format!("{id}: mutation {seed} not caught"));
                    }
                    Ok(None) => {}
                    Err(err) => out.fail(format!("{id}: {err}")),
                }
            }
            (id.to_string(), out, mutated)
        })
        .collect();
    let mut out = Outcome::new();
    let mut property_only = Vec::new();
    for (id, o, mutated) in results {
        if !mutated {
            property_only.push(id);
        }
        out.ok &= o.ok;
        out.notes.extend(o.notes);
    }
    if !property_only.is_empty() {
        out.notes.push(format!("property-only, nothing to flip: {}", property_only.join(", ")));
    }
    out
}

fn main() -> ExitCode {
    let en = Engines::new();
    type Run = fn(&Engines) -> Outcome;
    let criteria: Vec<(u32, &str, Run)> = vec![
        (1, "theta/omega/lambda symmetry, N=2,3,4", |en| {
            identities(en, &["theta-sym", "omega-sym", "lambda-sym"], &[2, 3, 4])
        }),
        (2, "idempotent derivations commute, N=2,3", |en| identities(en, &["idem-commute"], &[2, 3])),
        (3, "stated derivative laws and Lambda pole order, N=2,3", |en| {
            identities(en, &["theta-derivative", "omega-derivative", "lambda-pole-order"], &[2, 3])
        }),
        (4, "correlator symmetry (exhaustive) and two-point phi, N=1,2,3", |en| {
            identities(en, &["corr-symmetry", "phi2-closed"], &[1, 2, 3])
        }),
        (5, "pairing recursion vs closed forms, tau-vlf, L_m action, L1 on v/theta/Omega, N=2,3", c5),
        (6, "T(Xbar) on correlators, N=2", |en| identities(en, &["t-xbar-corr"], &[2])),
        (7, "F2 assembled = F2 rotation form, N=1,2,3", |en| identities(en, &["f2-equivalence"], &[1, 2, 3])),
        (8, "F2 structure: t2/t3 only, poles of order <= 2, N=2,3", |en| identities(en, &["f2-structure"], &[2, 3])),
        (9, "L1 F2 = closed form / 1152, N=1,2,3", |en| identities(en, &["l1-consistency"], &[1, 2, 3])),
        (10, "genus-2 L1 constraint, N=1 (by hand),2,3", c10),
        (11, "prediction via G* = rotation form, N=1,2,3", |en| identities(en, &["prediction-paths"], &[1, 2, 3])),
        (12, "L_A + L_B = L1 F2 with t3/t4 cancellation, N=1,2,3", |en| {
            identities(en, &["appendix-route"], &[1, 2, 3])
        }),
        (13, "grading degrees, N=1,2,3,4", |en| identities(en, &["homogeneity"], &[1, 2, 3, 4])),
        (14, "100 random points per identity and sign-flip mutations, N=2", c14),
    ];

    let mut unexpected = 0;
    for (k, name, run) in criteria {
        let start = Instant::now();
        let out = run(&en);
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_RED.iter().find(|(c, _)| *c == k);
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {k:>2}  {status}  {secs:>8.2}s  {name}");
        for note in &out.notes {
            println!("    {note}");
        }
        match (out.ok, known) {
            (false, Some((_, why))) => println!("    known: {why}"),
            (true, Some(_)) => {
                println!("    listed as known-red but passed");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
