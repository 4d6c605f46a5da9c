//! Verification suites behind `mg verify`.

use std::collections::HashSet;

use anyhow::Result;
use clap::{Args, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use i2_growth::mealy::MealyAutomaton;
use i2_growth::rewrite::{
    applicable_rewrites, quotient_normal_forms, reduce_quotient, reduce_traced, verify_left_zero,
    verify_relation, width, Gen, GenWord, I2Tables, Relation,
};
use i2_growth::semigroup::{
    ball_growth_oracle, quotient_order, quotient_order_formula, spherical_growth_oracle,
    DEFAULT_MAX_ELEMENTS,
};
use i2_growth::series::{odd_distinct_partitions, psi_sum_form, GrowthCoefficients};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Leftzero,
    Width,
    Series,
    Oracle,
    Soundness,
    Quotient,
    All,
}

const SUITES: [Suite; 7] = [
    Suite::Relations,
    Suite::Leftzero,
    Suite::Width,
    Suite::Series,
    Suite::Oracle,
    Suite::Soundness,
    Suite::Quotient,
];

#[derive(Debug, Clone, Args)]
pub struct Params {
    /// Largest p for the relation suite.
    #[arg(long, default_value_t = 6)]
    pmax: u32,
    /// Table level for the relation and soundness suites.
    #[arg(long, default_value_t = 12)]
    level: u32,
    /// Largest n for the left-zero, oracle, and quotient suites.
    #[arg(long)]
    nmax: Option<u32>,
    /// Series order for the series suite.
    #[arg(long = "N", default_value_t = 2000)]
    big_n: usize,
    /// Random cases for the width and soundness suites.
    #[arg(long, default_value_t = 10_000)]
    count: usize,
    #[arg(long, default_value_t = 40)]
    max_len: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Serialize)]
struct Report {
    suite: Suite,
    passed: bool,
    detail: String,
    failures: Vec<String>,
}

/// Failures past this many are counted but not listed.
const MAX_LISTED: usize = 10;

struct Failures(Vec<String>, usize);

impl Failures {
    fn new() -> Self {
        Self(Vec::new(), 0)
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.1 += 1;
            if self.0.len() < MAX_LISTED {
                self.0.push(msg());
            }
        }
    }

    fn report(self, suite: Suite, detail: String) -> Report {
        let detail = if self.1 > 0 {
            format!("{detail}; {} failures", self.1)
        } else {
            detail
        };
        Report {
            suite,
            passed: self.1 == 0,
            detail,
            failures: self.0,
        }
    }
}

fn random_word(rng: &mut StdRng, max_len: usize) -> GenWord {
    let len = rng.random_range(0..=max_len);
    GenWord::new(
        (0..len)
            .map(|_| if rng.random() { Gen::F1 } else { Gen::F0 })
            .collect(),
    )
}

fn relations(p: &Params) -> Result<Report> {
    let mut f = Failures::new();
    for q in 0..=p.pmax {
        f.check(verify_relation(q, p.level)?, || format!("r_{q} fails at level {}", p.level));
    }
    Ok(f.report(Suite::Relations, format!("r_0..r_{} at level {}", p.pmax, p.level)))
}

fn leftzero(p: &Params) -> Result<Report> {
    let nmax = p.nmax.unwrap_or(8);
    let mut f = Failures::new();
    for n in 1..=nmax {
        let got = verify_left_zero(n)?;
        f.check(got == (true, true), || format!("n = {n}: {got:?}"));
    }
    Ok(f.report(Suite::Leftzero, format!("n = 1..{nmax}")))
}

fn width_suite(p: &Params) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(p.seed);
    let mut f = Failures::new();
    for _ in 0..p.count {
        let q = rng.random_range(0..=5);
        let side = if rng.random() { Relation::R(q).lhs() } else { Relation::R(q).rhs() };
        let w = random_word(&mut rng, p.max_len / 2)
            .concat(&side)
            .concat(&random_word(&mut rng, p.max_len / 2));
        let rewrites = applicable_rewrites(&w, 5);
        let r = rewrites[rng.random_range(0..rewrites.len())];
        let v = r.apply(&w).expect("listed rewrites apply");
        f.check(width(&v) == width(&w), || format!("{w} -> {v} by {r:?}"));
    }
    Ok(f.report(Suite::Width, format!("{} random rewrites", p.count)))
}

fn series(p: &Params) -> Result<Report> {
    let mut f = Failures::new();
    let product = odd_distinct_partitions(p.big_n);
    let sum = psi_sum_form(p.big_n);
    f.check(product == sum, || {
        format!("Ψ forms differ at X^{}", product.first_difference(&sum).unwrap_or(0))
    });
    // Each sequence is also checked against its closed formula here.
    let g = GrowthCoefficients::compute(p.big_n)?;
    f.check(g.ball.mul_one_minus_x().as_ref() == Some(&g.delta), || "Δ ≠ (1-X)Γ_S".into());
    f.check(g.delta.div_one_minus_x_pow(2) == g.aut, || "Γ ≠ Δ/(1-X²)".into());
    f.check(g.delta.prefix_sums() == g.ball, || "Γ_S ≠ Δ/(1-X)".into());
    Ok(f.report(Suite::Series, format!("N = {}", p.big_n)))
}

fn oracle(p: &Params) -> Result<Report> {
    let nmax = p.nmax.unwrap_or(12) as usize;
    let g = GrowthCoefficients::compute(nmax)?;
    let i2 = MealyAutomaton::i2();
    let mut f = Failures::new();
    for n in 1..=nmax {
        let sphere = spherical_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS)?.value;
        let ball = ball_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS)?.value;
        f.check(sphere.to_string() == g.aut[n].to_string(), || {
            format!("n = {n}: Γ oracle {sphere}, series {}", g.aut[n])
        });
        f.check(ball.to_string() == g.ball[n].to_string(), || {
            format!("n = {n}: γ_S oracle {ball}, series {}", g.ball[n])
        });
    }
    Ok(f.report(Suite::Oracle, format!("n = 1..{nmax}")))
}

fn soundness(p: &Params) -> Result<Report> {
    let tables = I2Tables::new(p.level)?;
    let mut rng = StdRng::seed_from_u64(p.seed);
    let mut f = Failures::new();
    for _ in 0..p.count {
        let w = random_word(&mut rng, p.max_len);
        let r = reduce_traced(&w);
        f.check(r.steps <= w.len() / 2, || format!("{w}: {} steps", r.steps));
        f.check(tables.table(&w) == tables.table(&r.normal_form.to_word()), || {
            format!("{w}: table differs from {}", r.normal_form)
        });
    }
    Ok(f.report(
        Suite::Soundness,
        format!("{} words of length <= {} at level {}", p.count, p.max_len, p.level),
    ))
}

/// The quotient normal forms are fixed by quotient reduction, have pairwise
/// distinct level-n tables, and number exactly the enumerated order.
fn quotient(p: &Params) -> Result<Report> {
    let nmax = p.nmax.unwrap_or(8);
    let mut f = Failures::new();
    for n in 1..=nmax {
        let forms = quotient_normal_forms(n)?;
        let tables = I2Tables::new(n)?;
        let mut seen = HashSet::new();
        for nf in &forms {
            let w = nf.to_word();
            f.check(reduce_quotient(&w, n)? == *nf, || format!("n = {n}: {nf} not fixed"));
            f.check(seen.insert(tables.table(&w)), || format!("n = {n}: {nf} collides"));
        }
        let order = quotient_order(n, DEFAULT_MAX_ELEMENTS)?;
        let formula = quotient_order_formula(n).to_string();
        f.check(order == forms.len() && order.to_string() == formula, || {
            format!("n = {n}: enumerated {order}, forms {}, formula {formula}", forms.len())
        });
    }
    Ok(f.report(Suite::Quotient, format!("n = 1..{nmax}")))
}

fn run_one(suite: Suite, p: &Params) -> Result<Report> {
    match suite {
        Suite::Relations => relations(p),
        Suite::Leftzero => leftzero(p),
        Suite::Width => width_suite(p),
        Suite::Series => series(p),
        Suite::Oracle => oracle(p),
        Suite::Soundness => soundness(p),
        Suite::Quotient => quotient(p),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Runs the suite (or all of them, in parallel) and prints one line per
/// suite. Returns whether everything passed.
pub fn run(suite: Suite, params: &Params, json: bool) -> Result<bool> {
    let suites: Vec<Suite> = match suite {
        Suite::All => SUITES.to_vec(),
        one => vec![one],
    };
    let reports: Vec<Report> = suites
        .par_iter()
        .map(|&s| run_one(s, params))
        .collect::<Result<_>>()?;
    for r in &reports {
        if json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            let status = if r.passed { "PASS" } else { "FAIL" };
            let name = serde_json::to_value(r.suite)?;
            println!("{status} {}: {}", name.as_str().unwrap_or("?"), r.detail);
            for failure in &r.failures {
                println!("  {failure}");
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}
