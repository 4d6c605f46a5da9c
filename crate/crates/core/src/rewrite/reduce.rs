use super::normal_form::{GeneralForm, NormalForm};
use super::{Gen, GenWord, RewriteError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub normal_form: NormalForm,
    /// Number of relation applications used; each shortens the word by 2.
    pub steps: usize,
}

/// Cancels `f0 f0` and `f1 f1 f1 -> f1` until neither occurs. The two rules
/// do not overlap with each other and each overlaps itself trivially, so the
/// result does not depend on the order.
fn cancel_short(letters: &[Gen], steps: &mut usize) -> Vec<Gen> {
    let mut stack: Vec<Gen> = Vec::with_capacity(letters.len());
    for &g in letters {
        stack.push(g);
        let n = stack.len();
        let square = g == Gen::F0 && n >= 2 && stack[n - 2] == Gen::F0;
        let cube = g == Gen::F1 && n >= 3 && stack[n - 2] == Gen::F1 && stack[n - 3] == Gen::F1;
        if square || cube {
            stack.truncate(n - 2);
            *steps += 1;
        }
    }
    stack
}

/// A word free of `f0 f0` and `f1 f1 f1`, cut into maximal blocks
/// `f1 (f0 f1)^p`. Blocks are given by the positions of their first and
/// last `f1`.
struct Blocks {
    e1: bool,
    spans: Vec<(usize, usize)>,
    e2: bool,
}

impl Blocks {
    fn parse(letters: &[Gen]) -> Option<Self> {
        let e1 = letters.first() == Some(&Gen::F0);
        let mut i = usize::from(e1);
        if i >= letters.len() {
            return None;
        }
        debug_assert_eq!(letters[i], Gen::F1);
        let mut spans = Vec::new();
        let mut start = i;
        loop {
            match letters.get(i + 1) {
                None => {
                    spans.push((start, i));
                    return Some(Self { e1, spans, e2: false });
                }
                Some(Gen::F1) => {
                    spans.push((start, i));
                    i += 1;
                    start = i;
                }
                Some(Gen::F0) => match letters.get(i + 2) {
                    None => {
                        spans.push((start, i));
                        return Some(Self { e1, spans, e2: true });
                    }
                    Some(_) => i += 2,
                },
            }
        }
    }

    fn exponent(&self, j: usize) -> u32 {
        let (s, e) = self.spans[j];
        ((e - s) / 2) as u32
    }
}

pub fn reduce_traced(w: &GenWord) -> Reduction {
    let mut letters = w.letters().to_vec();
    let mut steps = 0;
    loop {
        letters = cancel_short(&letters, &mut steps);
        let Some(blocks) = Blocks::parse(&letters) else {
            let normal_form = if letters.is_empty() {
                NormalForm::One
            } else {
                NormalForm::JustF0
            };
            return Reduction { normal_form, steps };
        };
        // The last block is the tail; exponents before it must increase.
        let k = blocks.spans.len() - 1;
        let violation = (0..k.saturating_sub(1)).find(|&j| blocks.exponent(j) >= blocks.exponent(j + 1));
        match violation {
            None => {
                let exponents = (0..k).map(|j| blocks.exponent(j)).collect();
                let normal_form = NormalForm::General(GeneralForm {
                    e1: blocks.e1,
                    exponents,
                    tail: blocks.exponent(k),
                    e2: blocks.e2,
                });
                debug_assert_eq!(normal_form.word_length(), letters.len());
                return Reduction { normal_form, steps };
            }
            Some(j) => {
                // Block j is at least as long as block j+1 = f1 (f0 f1)^q, so
                // r_q cancels the f1 f1 where block j+1 meets block j+2.
                let end = blocks.spans[j + 1].1;
                letters.drain(end..end + 2);
                steps += 1;
            }
        }
    }
}

pub fn reduce(w: &GenWord) -> NormalForm {
    reduce_traced(w).normal_form
}

/// Image of a normal form in the level-`n` quotient, where
/// `f1 (f0 f1)^{n-1}` is a left zero.
pub fn truncate_to_quotient(nf: &NormalForm, n: u32) -> Result<NormalForm, RewriteError> {
    if n == 0 {
        return Err(RewriteError::ZeroLevel);
    }
    let cap = n - 1;
    Ok(match nf {
        NormalForm::General(g) => {
            let mut g = g.clone();
            if let Some(i) = g.exponents.iter().position(|&p| p >= cap) {
                g.exponents.truncate(i);
                g.tail = cap;
                g.e2 = false;
            } else if g.tail >= cap {
                g.tail = cap;
                g.e2 = false;
            }
            // Already reduced after truncation; reducing again costs one pass.
            reduce(&NormalForm::General(g).to_word())
        }
        other => other.clone(),
    })
}

pub fn reduce_quotient(w: &GenWord, n: u32) -> Result<NormalForm, RewriteError> {
    truncate_to_quotient(&reduce(w), n)
}

pub fn words_equal(a: &GenWord, b: &GenWord) -> bool {
    reduce(a) == reduce(b)
}

pub fn words_equal_quotient(a: &GenWord, b: &GenWord, n: u32) -> Result<bool, RewriteError> {
    Ok(reduce_quotient(a, n)? == reduce_quotient(b, n)?)
}
