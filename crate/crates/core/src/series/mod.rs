//! Exact growth series of S(I2) and the asymptotic evaluators checked
//! against them.
//!
//! All coefficient paths use big integers; floating point only appears in the
//! asymptotic module, and there always in log space.

mod asymptotics;
mod growth;
mod partitions;
mod rows;

pub use asymptotics::{
    aut_asymptote, ball_asymptote, delta_asymptote, growth_asymptotes, ln_richmond_asymptote,
    partial_sum_check, richmond_asymptote, tauberian_probe, AsymptoteSpec, GrowthAsymptotes,
    PartialSumPoint, ProbeOutcome, TAIL_TOLERANCE,
};
pub use growth::{
    automaton_growth_coeffs, ball_growth_coeffs, word_growth_coeffs, GrowthCoefficients,
};
pub use partitions::{count_distinct_congruent, odd_distinct_partitions, psi_sum_form};
pub use rows::{growth_rows, GrowthRow};

use std::ops::Index;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("{what}: the two computations disagree at coefficient {index}")]
    Disagreement { what: &'static str, index: usize },
    #[error("gcd of the residues and the modulus is {0}, not 1")]
    NotCoprime(u64),
    #[error("expected {expected} residues, got {got}")]
    ResidueCount { expected: usize, got: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// A power series truncated after `X^order`, with non-negative integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigSeries {
    coeffs: Vec<BigUint>,
}

impl BigSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigUint::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0)
    }

    /// `X^k`, truncated.
    pub fn monomial(order: usize, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigUint::from(1u32);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least one coefficient");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    pub fn add(&self, other: &BigSeries) -> BigSeries {
        let order = self.order().min(other.order());
        BigSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &BigSeries) -> BigSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> BigSeries {
        let mut out = Self::zero(self.order());
        for i in k..=self.order() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplication by `1 + X^s`.
    pub fn mul_one_plus_x_pow(&self, s: usize) -> BigSeries {
        let mut out = self.clone();
        for i in (s..=self.order()).rev() {
            let (lo, hi) = out.coeffs.split_at_mut(i);
            hi[0] += &lo[i - s];
        }
        out
    }

    /// Multiplication by `1 / (1 - X^s)`: strided prefix sums.
    pub fn div_one_minus_x_pow(&self, s: usize) -> BigSeries {
        assert!(s > 0, "1 - X^0 is not invertible");
        let mut out = self.clone();
        for i in s..=self.order() {
            let (lo, hi) = out.coeffs.split_at_mut(i);
            hi[0] += &lo[i - s];
        }
        out
    }

    /// Multiplication by `1 / (1 - X)`.
    pub fn prefix_sums(&self) -> BigSeries {
        self.div_one_minus_x_pow(1)
    }

    /// Multiplication by `1 - X`, or `None` if a coefficient would be
    /// negative.
    pub fn mul_one_minus_x(&self) -> Option<BigSeries> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(self.coeffs[0].clone());
        for w in self.coeffs.windows(2) {
            if w[1] < w[0] {
                return None;
            }
            coeffs.push(&w[1] - &w[0]);
        }
        Some(BigSeries { coeffs })
    }

    /// Index of the first differing coefficient over the common order.
    pub fn first_difference(&self, other: &BigSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl Index<usize> for BigSeries {
    type Output = BigUint;

    fn index(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }
}

pub(crate) fn check_agree(
    what: &'static str,
    a: &BigSeries,
    b: &BigSeries,
) -> Result<(), SeriesError> {
    match a.first_difference(b) {
        Some(index) => Err(SeriesError::Disagreement { what, index }),
        None => Ok(()),
    }
}
