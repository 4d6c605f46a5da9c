//! Floating-point helpers for quantities too large for `f64`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Natural logarithm of a big integer, from its top 64 bits and a binary
/// exponent. Returns `-inf` for zero.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits in 64 bits").to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits after shift");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(e^a + e^b)` without overflow.
pub fn ln_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Running sum of terms given by their logarithms, kept as a compensated
/// sum of `exp(term - scale)`; the scale moves up when a larger term arrives.
#[derive(Debug, Clone)]
pub struct LogSum {
    scale: f64,
    sum: f64,
    compensation: f64,
}

impl Default for LogSum {
    fn default() -> Self {
        Self {
            scale: f64::NEG_INFINITY,
            sum: 0.0,
            compensation: 0.0,
        }
    }
}

impl LogSum {
    pub fn add_ln(&mut self, ln_term: f64) {
        if ln_term == f64::NEG_INFINITY {
            return;
        }
        if ln_term > self.scale {
            let factor = (self.scale - ln_term).exp();
            self.sum *= factor;
            self.compensation *= factor;
            self.scale = ln_term;
        }
        // Neumaier summation.
        let term = (ln_term - self.scale).exp();
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn ln(&self) -> f64 {
        if self.scale == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        self.scale + (self.sum + self.compensation).ln()
    }
}
