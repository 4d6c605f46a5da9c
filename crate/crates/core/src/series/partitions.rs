use num_bigint::BigUint;
use num_integer::gcd;

use super::{BigSeries, SeriesError};

/// Distinct-part 0/1 knapsack over the allowed parts, ascending.
fn distinct_parts(order: usize, parts: impl Iterator<Item = usize>) -> BigSeries {
    let mut c = BigSeries::one(order).into_coeffs();
    for part in parts.take_while(|&p| p <= order) {
        for r in (part..=order).rev() {
            let (lo, hi) = c.split_at_mut(r);
            hi[0] += &lo[r - part];
        }
    }
    BigSeries::from_coeffs(c)
}

/// `q(0..=order)`: partitions into distinct odd parts, the coefficients of
/// `(1 + X)(1 + X^3)(1 + X^5)⋯`.
pub fn odd_distinct_partitions(order: usize) -> BigSeries {
    distinct_parts(order, (1..).step_by(2))
}

/// The same coefficients from `Σ_m X^{m²} / ((1 - X²)(1 - X⁴)⋯(1 - X^{2m}))`.
pub fn psi_sum_form(order: usize) -> BigSeries {
    let mut total = BigSeries::zero(order);
    // inv = 1 / ∏_{j ≤ m} (1 - X^{2j}), built one factor at a time.
    let mut inv = BigSeries::one(order);
    let mut m = 0usize;
    while m * m <= order {
        if m > 0 {
            inv = inv.div_one_minus_x_pow(2 * m);
        }
        total = total.add(&inv.shift(m * m));
        m += 1;
    }
    total
}

/// Partitions of `n` into distinct parts, each congruent to one of
/// `residues` modulo `modulus`.
pub fn count_distinct_congruent(
    n: usize,
    residues: &[u64],
    modulus: u64,
) -> Result<BigUint, SeriesError> {
    if modulus == 0 {
        return Err(SeriesError::ZeroModulus);
    }
    let allowed = |j: &usize| residues.iter().any(|&a| (*j as u64) % modulus == a % modulus);
    let series = distinct_parts(n, (1..=n).filter(allowed));
    Ok(series[n].clone())
}

pub(crate) fn check_coprime(residues: &[u64], modulus: u64) -> Result<(), SeriesError> {
    let g = residues.iter().fold(modulus, |g, &a| gcd(g, a));
    if g == 1 {
        Ok(())
    } else {
        Err(SeriesError::NotCoprime(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(s: &BigSeries) -> Vec<u64> {
        s.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn q_values() {
        assert_eq!(small(&odd_distinct_partitions(9)), vec![1, 1, 0, 1, 1, 1, 1, 1, 2, 2]);
        assert_eq!(odd_distinct_partitions(16)[16], BigUint::from(5u32));
        assert_eq!(odd_distinct_partitions(0)[0], BigUint::from(1u32));
    }

    #[test]
    fn sum_form_matches_product_form() {
        assert_eq!(psi_sum_form(0), BigSeries::one(0));
        assert_eq!(psi_sum_form(1)[1], BigUint::from(1u32));
        assert_eq!(psi_sum_form(500), odd_distinct_partitions(500));
    }

    #[test]
    fn congruent_parts() {
        let q = odd_distinct_partitions(100);
        for n in 0..=100 {
            assert_eq!(count_distinct_congruent(n, &[1], 2).unwrap(), q[n]);
        }
        assert_eq!(count_distinct_congruent(0, &[1, 2], 3).unwrap(), BigUint::from(1u32));
        assert_eq!(count_distinct_congruent(5, &[1, 2], 3).unwrap(), BigUint::from(2u32));
        assert!(count_distinct_congruent(5, &[1], 0).is_err());
        assert!(check_coprime(&[2], 4).is_err());
        assert!(check_coprime(&[1], 2).is_ok());
    }
}
