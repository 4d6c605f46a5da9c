use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use serde::Serialize;

use super::growth::ball_growth_coeffs;
use super::partitions::{check_coprime, odd_distinct_partitions};
use super::SeriesError;
use crate::numeric::{ln_big, LogSum};

/// `C · n^α · exp(β √n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoteSpec {
    pub prefactor: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl AsymptoteSpec {
    pub fn new(prefactor: f64, alpha: f64, beta: f64) -> Self {
        assert!(prefactor > 0.0, "prefactor must be positive");
        Self {
            prefactor,
            alpha,
            beta,
        }
    }

    pub fn ln_eval(&self, n: f64) -> f64 {
        self.prefactor.ln() + self.alpha * n.ln() + self.beta * n.sqrt()
    }

    pub fn eval(&self, n: f64) -> f64 {
        self.ln_eval(n).exp()
    }
}

fn beta_q() -> f64 {
    PI / 6f64.sqrt()
}

/// `δ(n) ~ (2² 3^{1/4} / π) n^{-1/4} exp(π √(n/6))`
pub fn delta_asymptote() -> AsymptoteSpec {
    AsymptoteSpec::new(4.0 * 3f64.powf(0.25) / PI, -0.25, beta_q())
}
/// `Γ(n) ~ (2^{5/2} 3^{3/4} / π²) n^{1/4} exp(π √(n/6))`
pub fn aut_asymptote() -> AsymptoteSpec {
    AsymptoteSpec::new(2f64.powf(2.5) * 3f64.powf(0.75) / (PI * PI), 0.25, beta_q())
}
/// `γ_S(n) ~ (2^{7/2} 3^{3/4} / π²) n^{1/4} exp(π √(n/6))`
pub fn ball_asymptote() -> AsymptoteSpec {
    AsymptoteSpec::new(2f64.powf(3.5) * 3f64.powf(0.75) / (PI * PI), 0.25, beta_q())
}

/// Log of the main term
/// `2^{(s-3)/2 + Σa/M} 3^{-1/4} n^{-3/4} exp(π √(s n / (3M)))`
/// for partitions into distinct parts congruent to one of `residues` mod `modulus`.
pub fn ln_richmond_asymptote(
    residues: &[u64],
    modulus: u64,
    s: usize,
    n: f64,
) -> Result<f64, SeriesError> {
    if modulus == 0 {
        return Err(SeriesError::ZeroModulus);
    }
    if residues.len() != s {
        return Err(SeriesError::ResidueCount {
            expected: s,
            got: residues.len(),
        });
    }
    if n < 1.0 {
        return Err(SeriesError::OutOfRange(format!("n = {n} is below 1")));
    }
    check_coprime(residues, modulus)?;
    let s = s as f64;
    let m = modulus as f64;
    let a_sum: f64 = residues.iter().map(|&a| a as f64).sum();
    let two_exp = (s - 3.0) / 2.0 + a_sum / m;
    Ok(two_exp * LN_2 - 0.25 * 3f64.ln() - 0.75 * n.ln() + PI * (s * n / (3.0 * m)).sqrt())
}

pub fn richmond_asymptote(
    residues: &[u64],
    modulus: u64,
    s: usize,
    n: f64,
) -> Result<f64, SeriesError> {
    ln_richmond_asymptote(residues, modulus, s, n).map(f64::exp)
}

/// The six main terms at `n`, as natural logs: three in terms of the exact
/// `q(n)` and three fully closed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthAsymptotes {
    pub n: usize,
    pub ln_q: f64,
    pub ln_delta_q_form: f64,
    pub ln_aut_q_form: f64,
    pub ln_ball_q_form: f64,
    pub ln_delta_closed: f64,
    pub ln_aut_closed: f64,
    pub ln_ball_closed: f64,
}

impl GrowthAsymptotes {
    pub fn with_q(n: usize, q_n: &BigUint) -> Self {
        let nf = n as f64;
        let ln_q = ln_big(q_n);
        let pi2 = PI * PI;
        Self {
            n,
            ln_q,
            ln_delta_q_form: (4.0 * 6f64.sqrt() / PI).ln() + 0.5 * nf.ln() + ln_q,
            ln_aut_q_form: (24.0 / pi2).ln() + nf.ln() + ln_q,
            ln_ball_q_form: (48.0 / pi2).ln() + nf.ln() + ln_q,
            ln_delta_closed: delta_asymptote().ln_eval(nf),
            ln_aut_closed: aut_asymptote().ln_eval(nf),
            ln_ball_closed: ball_asymptote().ln_eval(nf),
        }
    }

    /// `exact / exp(ln_main)`.
    pub fn ratio(&self, exact: &BigUint, ln_main: f64) -> f64 {
        (ln_big(exact) - ln_main).exp()
    }
}

/// Main terms at `n`; computes `q(n)` exactly first.
pub fn growth_asymptotes(n: usize) -> Result<GrowthAsymptotes, SeriesError> {
    if n == 0 {
        return Err(SeriesError::OutOfRange("n must be at least 1".into()));
    }
    let q = odd_distinct_partitions(n);
    Ok(GrowthAsymptotes::with_q(n, &q[n]))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartialSumPoint {
    pub n: usize,
    /// `Σ_{i≤n} i^α exp(β√i)` divided by `(2/β) n^{α+1/2} exp(β√n)`.
    pub ratio: f64,
}

/// Compares partial sums of `n^α exp(β√n)` with `(2/β) n^{α+1/2} exp(β√n)`
/// at every power of ten up to `max_n` and at `max_n` itself.
pub fn partial_sum_check(
    alpha: f64,
    beta: f64,
    max_n: usize,
) -> Result<Vec<PartialSumPoint>, SeriesError> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(SeriesError::OutOfRange(format!("beta = {beta} must be positive")));
    }
    let summand = AsymptoteSpec::new(1.0, alpha, beta);
    let main = AsymptoteSpec::new(2.0 / beta, alpha + 0.5, beta);
    let mut sum = LogSum::default();
    let mut points = Vec::new();
    let mut next_power = 1usize;
    for n in 1..=max_n {
        sum.add_ln(summand.ln_eval(n as f64));
        if n == next_power || n == max_n {
            points.push(PartialSumPoint {
                n,
                ratio: (sum.ln() - main.ln_eval(n as f64)).exp(),
            });
        }
        if n == next_power {
            next_power = next_power.saturating_mul(10);
        }
    }
    Ok(points)
}

/// Largest `γ_S(N) x^N / Σ_{n≤N} γ_S(n) x^n` the probe accepts.
pub const TAIL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ProbeOutcome {
    /// `(1 - x) log Σ_{n≤N} γ_S(n) x^n`, next to the target `π²/24`.
    Value {
        x: f64,
        value: f64,
        target: f64,
        tail_ratio: f64,
    },
    /// The last included term is not negligible, so the truncated sum says
    /// nothing about the full series.
    Refused { x: f64, tail_ratio: f64 },
}

pub fn tauberian_probe(max_n: usize, xs: &[f64]) -> Result<Vec<ProbeOutcome>, SeriesError> {
    if let Some(&x) = xs.iter().find(|&&x| !(x > 0.0 && x < 1.0)) {
        return Err(SeriesError::OutOfRange(format!("x = {x} is not in (0, 1)")));
    }
    let ln_ball: Vec<f64> = ball_growth_coeffs(max_n)?.coeffs().iter().map(ln_big).collect();
    let target = PI * PI / 24.0;
    Ok(xs
        .iter()
        .map(|&x| {
            let ln_x = x.ln();
            let mut sum = LogSum::default();
            for (n, &l) in ln_ball.iter().enumerate() {
                sum.add_ln(l + n as f64 * ln_x);
            }
            let total = sum.ln();
            let last = ln_ball[max_n] + max_n as f64 * ln_x;
            let tail_ratio = (last - total).exp();
            if tail_ratio < TAIL_TOLERANCE {
                ProbeOutcome::Value {
                    x,
                    value: (1.0 - x) * total,
                    target,
                    tail_ratio,
                }
            } else {
                ProbeOutcome::Refused { x, tail_ratio }
            }
        })
        .collect())
}
