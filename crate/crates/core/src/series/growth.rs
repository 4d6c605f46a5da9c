use num_bigint::BigUint;

use super::partitions::odd_distinct_partitions;
use super::{check_agree, BigSeries, SeriesError};

/// `S(m) = q(0) + … + q(m)` and `B(n) = Σ_{i<n} (n - i) q(i)`, the running
/// sums behind the closed counting formulas.
struct RunningSums {
    s: Vec<BigUint>,
    b: Vec<BigUint>,
}

impl RunningSums {
    fn new(q: &BigSeries) -> Self {
        let order = q.order();
        let mut s = Vec::with_capacity(order + 1);
        let mut acc = BigUint::default();
        for c in q.coeffs() {
            acc += c;
            s.push(acc.clone());
        }
        let mut b = Vec::with_capacity(order + 1);
        b.push(BigUint::default());
        for n in 1..=order {
            let next = &b[n - 1] + &s[n - 1];
            b.push(next);
        }
        Self { s, b }
    }
}

/// `Δ(X) = (1 + X)(1 + X/(1 - X) · Ψ(X))`.
fn delta_series(psi: &BigSeries) -> BigSeries {
    let order = psi.order();
    BigSeries::one(order)
        .add(&psi.prefix_sums().shift(1))
        .mul_one_plus_x_pow(1)
}

/// `δ(0..=order)`, the number of elements of word length exactly `n`.
pub fn word_growth_coeffs(order: usize) -> Result<BigSeries, SeriesError> {
    Ok(GrowthCoefficients::compute(order)?.delta)
}

/// `Γ(0..=order)`, the number of distinct products of exactly `n`
/// generators (the growth of the automaton powers).
pub fn automaton_growth_coeffs(order: usize) -> Result<BigSeries, SeriesError> {
    Ok(GrowthCoefficients::compute(order)?.aut)
}

/// `γ_S(0..=order)`, the number of elements of length at most `n`.
pub fn ball_growth_coeffs(order: usize) -> Result<BigSeries, SeriesError> {
    Ok(GrowthCoefficients::compute(order)?.ball)
}

/// The three growth sequences and `q`, each computed by series algebra and by
/// its closed counting formula, with the two routes checked against each
/// other.
#[derive(Debug, Clone)]
pub struct GrowthCoefficients {
    pub q: BigSeries,
    pub delta: BigSeries,
    pub aut: BigSeries,
    pub ball: BigSeries,
}

impl GrowthCoefficients {
    pub fn compute(order: usize) -> Result<Self, SeriesError> {
        let q = odd_distinct_partitions(order);
        let sums = RunningSums::new(&q);
        let two = BigUint::from(2u32);

        let delta = delta_series(&q);
        let delta_closed = BigSeries::from_coeffs(
            (0..=order)
                .map(|n| match n {
                    0 => BigUint::from(1u32),
                    1 => two.clone(),
                    _ => &q[n - 1] + &two * &sums.s[n - 2],
                })
                .collect(),
        );
        check_agree("word growth", &delta, &delta_closed)?;

        let aut = delta.div_one_minus_x_pow(2);
        let aut_closed =
            BigSeries::from_coeffs(sums.b.iter().map(|b| b + 1u32).collect());
        check_agree("automaton growth", &aut, &aut_closed)?;

        let ball = delta.prefix_sums();
        let ball_closed = BigSeries::from_coeffs(
            (0..=order)
                .map(|n| match n {
                    0 => BigUint::from(1u32),
                    _ => &two + &two * &sums.b[n] - &sums.s[n - 1],
                })
                .collect(),
        );
        check_agree("ball growth", &ball, &ball_closed)?;

        Ok(Self { q, delta, aut, ball })
    }
}
