//! Semigroups of automatic transformations restricted to finite levels of
//! the binary tree. This is the exact enumeration oracle the rest of the
//! crate is checked against.

mod enumerate;
mod packed;
mod table;

pub use enumerate::{
    enumerate_monoid, EnumerateOptions, GrowthLayers, MonoidEnumeration, DEFAULT_MAX_ELEMENTS,
};
pub use table::{pack_word, unpack_word, word_table, TransformTable, MAX_LEVEL};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::mealy::{AutomatonError, MealyAutomaton};
use crate::numeric::ln_big;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("tables are defined over the binary alphabet only (got {0} letters)")]
    UnsupportedAlphabet(usize),
    #[error("level {level} exceeds the maximum of {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error("levels differ: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("word {word} does not fit in {level} letters")]
    WordOutOfRange { word: u32, level: u32 },
    #[error("outputs are not prefix-compatible at input {input}")]
    NotPrefixCompatible { input: u32 },
    #[error("no generators given")]
    NoGenerators,
    #[error("generator index {0} out of range")]
    UnknownGenerator(usize),
    #[error("enumeration reached {elements} elements, above the cap of {cap}")]
    Capacity { elements: usize, cap: usize },
    #[error("level must be at least {min} (got {got})")]
    LevelTooSmall { min: u32, got: u32 },
    #[error("counts did not stabilize below level {max_level}")]
    Unstable { max_level: u32 },
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// Tables of every state of `a` at `level`, in state order.
pub fn state_tables(a: &MealyAutomaton, level: u32) -> Result<Vec<TransformTable>, TableError> {
    (0..a.state_count())
        .map(|q| TransformTable::from_automaton(a, q, level))
        .collect()
}

/// A count read off a level-`k` enumeration, confirmed at level `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilizedCount {
    pub value: usize,
    pub level: u32,
}

fn stabilized(
    a: &MealyAutomaton,
    radius: usize,
    max_elements: usize,
    read: impl Fn(&GrowthLayers) -> usize,
) -> Result<StabilizedCount, TableError> {
    // A product of `radius` generators in I2 has normal-form exponents at most
    // (radius - 1) / 2, and level radius/2 + 2 already separates such forms.
    let mut level = (radius / 2 + 2) as u32;
    let opts = EnumerateOptions {
        max_depth: Some(radius),
        max_elements,
        track_spheres: true,
    };
    let count_at = |level: u32| -> Result<usize, TableError> {
        let gens = state_tables(a, level)?;
        Ok(read(&enumerate_monoid(&gens, opts)?.layers))
    };
    let mut previous = count_at(level)?;
    loop {
        if level + 1 > MAX_LEVEL {
            return Err(TableError::Unstable {
                max_level: MAX_LEVEL,
            });
        }
        let next = count_at(level + 1)?;
        if next == previous {
            return Ok(StabilizedCount {
                value: previous,
                level,
            });
        }
        previous = next;
        level += 1;
    }
}

/// Number of distinct products of exactly `n` states of `a`.
pub fn spherical_growth_oracle(
    a: &MealyAutomaton,
    n: usize,
    max_elements: usize,
) -> Result<StabilizedCount, TableError> {
    stabilized(a, n, max_elements, |layers| {
        layers.sphere_sizes.as_ref().expect("tracked")[n]
    })
}

/// Number of distinct products of at most `n` states of `a`, identity included.
pub fn ball_growth_oracle(
    a: &MealyAutomaton,
    n: usize,
    max_elements: usize,
) -> Result<StabilizedCount, TableError> {
    stabilized(a, n, max_elements, |layers| layers.cumulative[n])
}

/// Order of the quotient `S_n`: the monoid generated by the level-`n`
/// tables of I2, counted by enumeration.
pub fn quotient_order(n: u32, max_elements: usize) -> Result<usize, TableError> {
    if n == 0 {
        return Err(TableError::LevelTooSmall { min: 1, got: 0 });
    }
    let gens = state_tables(&MealyAutomaton::i2(), n)?;
    let opts = EnumerateOptions {
        max_elements,
        ..EnumerateOptions::default()
    };
    Ok(enumerate_monoid(&gens, opts)?.len())
}

/// Closed form `2 + (2n - 1) 2^n` for the order of `S_n`.
pub fn quotient_order_formula(n: u32) -> BigUint {
    BigUint::from(2u32) + (BigUint::from(2 * u64::from(n)) - 1u32) * (BigUint::one() << n)
}

/// Exponent `m (m^k - 1) / (m - 1)` with `|End(X_m^[k])| = m^exponent`.
pub fn endomorphism_exponent(m: u32, k: u32) -> BigUint {
    let m_big = BigUint::from(m);
    m_big.clone() * (m_big.pow(k) - 1u32) / (m - 1)
}

/// Largest exponent (in bits of the result) `endomorphism_count` will build.
const MAX_ENDOMORPHISM_BITS: u64 = 1 << 26;

/// Number of endomorphisms of the first `k` levels of the `m`-ary tree,
/// `m^(m (m^k - 1) / (m - 1))`.
pub fn endomorphism_count(m: u32, k: u32) -> Result<BigUint, TableError> {
    assert!(m >= 2, "alphabet size must be at least 2");
    let exponent = endomorphism_exponent(m, k);
    let bits_estimate = exponent.clone() * (32 - m.leading_zeros());
    if bits_estimate > BigUint::from(MAX_ENDOMORPHISM_BITS) {
        return Err(TableError::LevelTooLarge { level: k, max: MAX_LEVEL });
    }
    let e = u32::try_from(&exponent).expect("bounded above");
    Ok(BigUint::from(m).pow(e))
}

/// `ln |End(X_m^[k])|`, computed from the exact exponent.
pub fn ln_endomorphism_count(m: u32, k: u32) -> f64 {
    endomorphism_exponent(m, k).to_f64().unwrap_or(f64::INFINITY) * f64::from(m).ln()
}

/// `log |S_n| / log |End(X_2^[n])|` for `n = 1..=max_level`.
pub fn hausdorff_sequence(max_level: u32) -> Vec<f64> {
    (1..=max_level)
        .map(|n| ln_big(&quotient_order_formula(n)) / ln_endomorphism_count(2, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i2_level_one_monoid_has_four_elements() {
        assert_eq!(quotient_order(1, DEFAULT_MAX_ELEMENTS).unwrap(), 4);
    }

    #[test]
    fn small_quotient_orders_match_formula() {
        for n in 1..=6 {
            let order = quotient_order(n, DEFAULT_MAX_ELEMENTS).unwrap();
            assert_eq!(BigUint::from(order), quotient_order_formula(n), "n = {n}");
        }
        assert_eq!(quotient_order_formula(2), BigUint::from(14u32));
        assert_eq!(quotient_order_formula(3), BigUint::from(42u32));
        assert_eq!(quotient_order_formula(12), BigUint::from(94210u32));
    }

    #[test]
    fn quotient_order_rejects_level_zero() {
        assert!(quotient_order(0, 10).is_err());
    }

    #[test]
    fn identity_generator_has_unit_spheres() {
        let id = TransformTable::identity(3).unwrap();
        let opts = EnumerateOptions {
            max_depth: Some(5),
            track_spheres: true,
            ..Default::default()
        };
        let e = enumerate_monoid(&[id], opts).unwrap();
        assert_eq!(e.layers.sphere_sizes, Some(vec![1; 6]));
        assert_eq!(e.layers.cumulative, vec![1; 6]);
        assert!(e.layers.closed);
    }

    #[test]
    fn growth_inequalities_hold() {
        let gens = state_tables(&MealyAutomaton::i2(), 5).unwrap();
        let opts = EnumerateOptions {
            max_depth: Some(14),
            track_spheres: true,
            ..Default::default()
        };
        let layers = enumerate_monoid(&gens, opts).unwrap().layers;
        let spheres = layers.sphere_sizes.clone().unwrap();
        let mut running = 0;
        for d in 0..=layers.depth() {
            running += layers.layer_sizes[d];
            assert_eq!(layers.cumulative[d], running);
            assert!(layers.layer_sizes[d] <= spheres[d]);
            assert!(spheres[d] <= layers.cumulative[d]);
            if d > 0 {
                assert!(layers.cumulative[d] >= layers.cumulative[d - 1]);
            }
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let gens = state_tables(&MealyAutomaton::i2(), 6).unwrap();
        let opts = EnumerateOptions {
            max_elements: 50,
            ..Default::default()
        };
        assert!(matches!(
            enumerate_monoid(&gens, opts),
            Err(TableError::Capacity { cap: 50, .. })
        ));
    }

    #[test]
    fn spherical_oracle_small_radii() {
        let i2 = MealyAutomaton::i2();
        let values: Vec<usize> = (1..=5)
            .map(|n| spherical_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS).unwrap().value)
            .collect();
        assert_eq!(values, vec![2, 4, 6, 9, 13]);
    }

    #[test]
    fn ball_oracle_small_radii() {
        let i2 = MealyAutomaton::i2();
        let values: Vec<usize> = (0..=5)
            .map(|n| ball_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS).unwrap().value)
            .collect();
        assert_eq!(values, vec![1, 3, 6, 10, 15, 22]);
    }

    #[test]
    fn endomorphism_counts() {
        assert_eq!(endomorphism_count(2, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(endomorphism_count(2, 2).unwrap(), BigUint::from(64u32));
        assert_eq!(endomorphism_count(2, 3).unwrap(), BigUint::from(16384u32));
        assert_eq!(endomorphism_count(3, 1).unwrap(), BigUint::from(27u32));
        assert!(endomorphism_count(2, 30).is_err());
        let ln = ln_endomorphism_count(2, 3);
        assert!((ln - 16384f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn hausdorff_terms() {
        let seq = hausdorff_sequence(20);
        assert!((seq[0] - 1.0).abs() < 1e-12);
        assert!((seq[1] - 14f64.ln() / (3.0 * 4f64.ln())).abs() < 1e-12);
        assert!((seq[1] - 0.6346).abs() < 1e-4);
        assert!((seq[2] - 0.3852).abs() < 1e-4);
        assert!(seq.windows(2).all(|w| w[1] < w[0]));
        assert!(seq[19] < 0.01);
    }

    #[test]
    fn product_tables_compose() {
        let i2 = MealyAutomaton::i2();
        let p = i2.product(&i2).unwrap();
        for k in 0..=8 {
            for q1 in 0..2 {
                for q2 in 0..2 {
                    let lhs = TransformTable::from_automaton(&p, q1 * 2 + q2, k).unwrap();
                    let rhs = TransformTable::from_automaton(&i2, q1, k)
                        .unwrap()
                        .compose(&TransformTable::from_automaton(&i2, q2, k).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
