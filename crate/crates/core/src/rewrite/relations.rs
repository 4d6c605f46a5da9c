use std::fmt;

use serde::Serialize;

use super::{f0f1_power, f1f0_power, power, Gen, GenWord, I2Tables, RewriteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `f0² = 1`
    Involution,
    /// `r_p`; `R(0)` is `f1³ = f1`.
    R(u32),
}

impl Relation {
    pub fn lhs(self) -> GenWord {
        match self {
            Relation::Involution => power(Gen::F0, 2),
            Relation::R(p) => {
                let p = p as usize;
                let mut w = power(Gen::F1, 1);
                w.extend(&f0f1_power(p))
                    .extend(&f1f0_power(p))
                    .extend(&power(Gen::F1, 2));
                w
            }
        }
    }

    pub fn rhs(self) -> GenWord {
        match self {
            Relation::Involution => GenWord::empty(),
            Relation::R(p) => {
                let p = p as usize;
                let mut w = power(Gen::F1, 1);
                w.extend(&f0f1_power(p)).extend(&f1f0_power(p));
                w
            }
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Involution => f.write_str("f0^2=1"),
            Relation::R(p) => write!(f, "r_{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// Replace an occurrence of the left side by the right side.
    Shorten,
    /// Replace an occurrence of the right side by the left side.
    Lengthen,
}

/// One rewrite step at a given letter position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Rewrite {
    pub relation: Relation,
    pub direction: Direction,
    pub position: usize,
}

impl Rewrite {
    fn pattern_and_replacement(&self) -> (GenWord, GenWord) {
        match self.direction {
            Direction::Shorten => (self.relation.lhs(), self.relation.rhs()),
            Direction::Lengthen => (self.relation.rhs(), self.relation.lhs()),
        }
    }

    /// Applies the rewrite, or returns `None` if the pattern does not occur
    /// at `position`.
    pub fn apply(&self, w: &GenWord) -> Option<GenWord> {
        let (pattern, replacement) = self.pattern_and_replacement();
        let letters = w.letters();
        let end = self.position.checked_add(pattern.len())?;
        if end > letters.len() || letters[self.position..end] != *pattern.letters() {
            return None;
        }
        let mut out = letters[..self.position].to_vec();
        out.extend_from_slice(replacement.letters());
        out.extend_from_slice(&letters[end..]);
        Some(GenWord::new(out))
    }
}

fn occurrences<'a>(haystack: &'a [Gen], needle: &[Gen]) -> impl Iterator<Item = usize> + 'a {
    let needle = needle.to_vec();
    (0..=haystack.len().saturating_sub(needle.len()))
        .filter(move |&i| haystack.len() >= needle.len() && haystack[i..i + needle.len()] == needle[..])
}

/// Every single-step rewrite of `w` using `f0² = 1` and `r_p` for
/// `p <= max_p`, in both directions.
pub fn applicable_rewrites(w: &GenWord, max_p: u32) -> Vec<Rewrite> {
    let letters = w.letters();
    let mut out = Vec::new();
    let relations = std::iter::once(Relation::Involution).chain((0..=max_p).map(Relation::R));
    for relation in relations {
        for direction in [Direction::Shorten, Direction::Lengthen] {
            let rewrite = Rewrite {
                relation,
                direction,
                position: 0,
            };
            let (pattern, _) = rewrite.pattern_and_replacement();
            for position in occurrences(letters, pattern.letters()) {
                out.push(Rewrite { position, ..rewrite });
            }
        }
    }
    out
}

/// Checks `r_p` on the level-`k` tables.
pub fn verify_relation(p: u32, k: u32) -> Result<bool, RewriteError> {
    let tables = I2Tables::new(k)?;
    let r = Relation::R(p);
    Ok(tables.table(&r.lhs()) == tables.table(&r.rhs()))
}

/// `f1 (f0 f1)^{n-1}`
pub fn left_zero_word(n: u32) -> Result<GenWord, RewriteError> {
    if n == 0 {
        return Err(RewriteError::ZeroLevel);
    }
    Ok(power(Gen::F1, 1).concat(&f0f1_power(n as usize - 1)))
}

fn zero_relations_hold(tables: &I2Tables, z: &GenWord) -> [bool; 2] {
    let zt = tables.table(z);
    [Gen::F0, Gen::F1].map(|g| tables.table(&z.concat(&power(g, 1))) == zt)
}

/// Checks that `Z = f1 (f0 f1)^{n-1}` is a left zero of the level-`n`
/// quotient: its table is the constant `x1^n` and `Z f0 = Z f1 = Z`. The
/// second flag is true when both equations fail at level `n + 1`.
pub fn verify_left_zero(n: u32) -> Result<(bool, bool), RewriteError> {
    let z = left_zero_word(n)?;
    let at_n = I2Tables::new(n)?;
    let all_ones = (1u32 << n) - 1;
    let holds = at_n.table(&z).constant_value() == Some(all_ones)
        && zero_relations_hold(&at_n, &z) == [true, true];
    let fails_above = zero_relations_hold(&I2Tables::new(n + 1)?, &z) == [false, false];
    Ok((holds, fails_above))
}
