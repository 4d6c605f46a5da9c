use std::fmt;

use serde::Serialize;

use super::{f0f1_power, Gen, GenWord, RewriteError};

/// The word `f0^e1 · f1 (f0 f1)^{p_1} · … · f1 (f0 f1)^{p_k} · f1 (f0 f1)^tail · f0^e2`
/// with `p_1 < … < p_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneralForm {
    pub e1: bool,
    pub exponents: Vec<u32>,
    pub tail: u32,
    pub e2: bool,
}

impl GeneralForm {
    pub fn new(e1: bool, exponents: Vec<u32>, tail: u32, e2: bool) -> Result<Self, RewriteError> {
        if let Some(w) = exponents.windows(2).find(|w| w[0] >= w[1]) {
            return Err(RewriteError::InvalidNormalForm(format!(
                "exponents must strictly increase, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self {
            e1,
            exponents,
            tail,
            e2,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NormalForm {
    /// The identity.
    One,
    JustF0,
    General(GeneralForm),
}

impl NormalForm {
    pub fn word_length(&self) -> usize {
        match self {
            NormalForm::One => 0,
            NormalForm::JustF0 => 1,
            NormalForm::General(g) => {
                let blocks: usize = g.exponents.iter().map(|&p| 2 * p as usize + 1).sum();
                usize::from(g.e1) + blocks + 2 * g.tail as usize + 1 + usize::from(g.e2)
            }
        }
    }

    pub fn to_word(&self) -> GenWord {
        match self {
            NormalForm::One => GenWord::empty(),
            NormalForm::JustF0 => GenWord::new(vec![Gen::F0]),
            NormalForm::General(g) => {
                let mut w = GenWord::empty();
                if g.e1 {
                    w.push(Gen::F0);
                }
                for &p in g.exponents.iter().chain(std::iter::once(&g.tail)) {
                    w.push(Gen::F1).extend(&f0f1_power(p as usize));
                }
                if g.e2 {
                    w.push(Gen::F0);
                }
                w
            }
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::One => f.write_str("one"),
            NormalForm::JustF0 => f.write_str("f0"),
            NormalForm::General(g) => {
                let exps: Vec<String> = g.exponents.iter().map(u32::to_string).collect();
                write!(
                    f,
                    "e1={};p=[{}];tail={};e2={}",
                    u8::from(g.e1),
                    exps.join(","),
                    g.tail,
                    u8::from(g.e2)
                )
            }
        }
    }
}

/// Strictly increasing `p_1 < … < p_k`, all at least `min_p`, with
/// `Σ (2 p_i + 1) = remaining`.
fn odd_block_sets(min_p: u32, remaining: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let mut p = min_p;
    while 2 * (p as usize) < remaining {
        current.push(p);
        odd_block_sets(p + 1, remaining - (2 * p as usize + 1), current, out);
        current.pop();
        p += 1;
    }
}

/// All normal forms of word length exactly `n`, in a fixed order.
pub fn normal_forms_of_length(n: usize) -> Vec<NormalForm> {
    match n {
        0 => return vec![NormalForm::One],
        1 => {
            return vec![
                NormalForm::JustF0,
                NormalForm::General(GeneralForm {
                    e1: false,
                    exponents: vec![],
                    tail: 0,
                    e2: false,
                }),
            ]
        }
        _ => {}
    }
    let mut out = Vec::new();
    let mut sets = Vec::new();
    for e1 in [false, true] {
        for e2 in [false, true] {
            let fixed = usize::from(e1) + usize::from(e2) + 1;
            let mut tail = 0usize;
            while fixed + 2 * tail <= n {
                sets.clear();
                odd_block_sets(0, n - fixed - 2 * tail, &mut Vec::new(), &mut sets);
                for exps in sets.drain(..) {
                    out.push(NormalForm::General(GeneralForm {
                        e1,
                        exponents: exps,
                        tail: tail as u32,
                        e2,
                    }));
                }
                tail += 1;
            }
        }
    }
    out
}

/// Number of normal forms of length `n`, without materializing them.
pub fn count_normal_forms(n: usize) -> u64 {
    // q[r]: sets of distinct odd parts summing to r.
    let mut q = vec![0u64; n + 1];
    q[0] = 1;
    let mut part = 1;
    while part <= n {
        for r in (part..=n).rev() {
            q[r] += q[r - part];
        }
        part += 2;
    }
    match n {
        0 => 1,
        1 => 2,
        _ => {
            let mut total = 0;
            for fixed in [1usize, 2, 2, 3] {
                let mut t = 0;
                while fixed + 2 * t <= n {
                    total += q[n - fixed - 2 * t];
                    t += 1;
                }
            }
            total
        }
    }
}

/// Normal forms of the elements of the level-`n` quotient: exponents below
/// `n - 1`, and the tail at most `n - 1` with no trailing `f0` at the cap.
pub fn quotient_normal_forms(n: u32) -> Result<Vec<NormalForm>, RewriteError> {
    if n == 0 {
        return Err(RewriteError::ZeroLevel);
    }
    let cap = n - 1;
    let mut out = vec![NormalForm::One, NormalForm::JustF0];
    for mask in 0u64..(1 << cap) {
        let exps: Vec<u32> = (0..cap).filter(|&p| mask >> p & 1 == 1).collect();
        for e1 in [false, true] {
            for tail in 0..=cap {
                for e2 in [false, true] {
                    if tail == cap && e2 {
                        continue;
                    }
                    out.push(NormalForm::General(GeneralForm {
                        e1,
                        exponents: exps.clone(),
                        tail,
                        e2,
                    }));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        let expected = [1, 2, 3, 4, 5, 7, 9, 11, 13, 16, 20, 24, 28, 33, 39, 45, 52, 61, 71, 81, 92];
        for (n, &d) in expected.iter().enumerate() {
            assert_eq!(normal_forms_of_length(n).len() as u64, d, "n = {n}");
            assert_eq!(count_normal_forms(n), d, "n = {n}");
        }
    }

    #[test]
    fn lengths_are_consistent() {
        for n in 0..=14 {
            for nf in normal_forms_of_length(n) {
                assert_eq!(nf.word_length(), n);
                assert_eq!(nf.to_word().len(), n);
            }
        }
    }

    #[test]
    fn display_format() {
        let nf = NormalForm::General(GeneralForm::new(true, vec![0, 2], 1, false).unwrap());
        assert_eq!(nf.to_string(), "e1=1;p=[0,2];tail=1;e2=0");
        assert_eq!(nf.to_word().to_string(), "0110101101");
        assert!(GeneralForm::new(false, vec![2, 2], 0, false).is_err());
    }

    #[test]
    fn quotient_form_count() {
        for n in 1..=8u32 {
            let forms = quotient_normal_forms(n).unwrap();
            assert_eq!(forms.len() as u64, 2 + (2 * u64::from(n) - 1) * (1 << n));
        }
        assert!(quotient_normal_forms(0).is_err());
    }
}
