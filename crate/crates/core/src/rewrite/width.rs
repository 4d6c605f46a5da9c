use super::{Gen, GenWord};

/// Sizes of the blocks of `w`. After cancelling `f0²`, an odd run of `f0`
/// between two `f1`s becomes a single `f0` and joins them into one block; an
/// even run leaves the two `f1`s adjacent, which starts a new block.
pub fn block_sizes(w: &GenWord) -> Vec<u64> {
    let mut blocks: Vec<u64> = Vec::new();
    let mut f0_run = 0usize;
    for &g in w.letters() {
        match g {
            Gen::F0 => f0_run += 1,
            Gen::F1 => {
                match blocks.last_mut() {
                    Some(last) if f0_run % 2 == 1 => *last += 1,
                    _ => blocks.push(1),
                }
                f0_run = 0;
            }
        }
    }
    blocks
}

/// `max Υ - min Υ`, where `Υ` holds `0` and the alternating partial sums
/// `i_1 - i_2 + i_3 - …` of the block sizes.
pub fn width(w: &GenWord) -> u64 {
    let (mut lo, mut hi, mut sum) = (0i64, 0i64, 0i64);
    for (j, &b) in block_sizes(w).iter().enumerate() {
        if j % 2 == 0 {
            sum += b as i64;
        } else {
            sum -= b as i64;
        }
        lo = lo.min(sum);
        hi = hi.max(sum);
    }
    (hi - lo) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::Relation;

    fn w(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(width(&w("000")), 0);
        assert_eq!(width(&w("")), 0);
        assert_eq!(width(&w("1")), 1);
        assert_eq!(block_sizes(&w("0110101001")), vec![1, 3, 1]);
        for p in 1..=5 {
            let r = Relation::R(p);
            assert_eq!(width(&r.lhs()), u64::from(p) + 1);
            assert_eq!(width(&r.rhs()), u64::from(p) + 1);
        }
        assert_eq!(width(&Relation::R(0).lhs()), width(&Relation::R(0).rhs()));
    }
}
