use std::fmt;

use crate::mealy::MealyAutomaton;

use super::TableError;

/// Largest supported level; a table holds `2^level` entries.
pub const MAX_LEVEL: u32 = 24;

/// The action of a transformation on all binary words of length `level`.
///
/// Words are packed into integers with the first letter in the most
/// significant of the `level` bits, so `outputs[u]` is the image of the word
/// `u`. Every table is length-preserving and prefix-compatible; constructors
/// reject anything else.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransformTable {
    level: u32,
    outputs: Vec<u32>,
}

impl fmt::Debug for TransformTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.level as usize;
        let mut list = f.debug_map();
        for (u, &v) in self.outputs.iter().enumerate().take(16) {
            list.entry(&format!("{u:0k$b}"), &format!("{v:0k$b}"));
        }
        list.finish()
    }
}

pub(crate) fn check_level(level: u32) -> Result<(), TableError> {
    if level > MAX_LEVEL {
        Err(TableError::LevelTooLarge {
            level,
            max: MAX_LEVEL,
        })
    } else {
        Ok(())
    }
}

impl TransformTable {
    pub fn identity(level: u32) -> Result<Self, TableError> {
        check_level(level)?;
        Ok(Self {
            level,
            outputs: (0..1u32 << level).collect(),
        })
    }

    pub fn constant(level: u32, word: u32) -> Result<Self, TableError> {
        check_level(level)?;
        if u64::from(word) >= 1u64 << level {
            return Err(TableError::WordOutOfRange { word, level });
        }
        Ok(Self {
            level,
            outputs: vec![word; 1usize << level],
        })
    }

    /// Table of the automatic transformation `f_q` restricted to level `level`.
    pub fn from_automaton(a: &MealyAutomaton, q: usize, level: u32) -> Result<Self, TableError> {
        if a.alphabet_size() != 2 {
            return Err(TableError::UnsupportedAlphabet(a.alphabet_size()));
        }
        a.check_state(q)?;
        check_level(level)?;
        // Breadth-first over prefixes: state reached and output so far.
        let mut states = vec![q];
        let mut outs = vec![0u32];
        for _ in 0..level {
            let mut next_states = Vec::with_capacity(states.len() * 2);
            let mut next_outs = Vec::with_capacity(outs.len() * 2);
            for (&s, &o) in states.iter().zip(&outs) {
                for x in 0..2 {
                    next_states.push(a.next_state(s, x));
                    next_outs.push((o << 1) | a.output_letter(s, x) as u32);
                }
            }
            states = next_states;
            outs = next_outs;
        }
        Ok(Self {
            level,
            outputs: outs,
        })
    }

    /// Wraps a raw output array after checking length, range and prefix
    /// compatibility.
    pub fn from_outputs(level: u32, outputs: Vec<u32>) -> Result<Self, TableError> {
        check_level(level)?;
        if outputs.len() != 1usize << level {
            return Err(TableError::LengthMismatch {
                expected: 1usize << level,
                got: outputs.len(),
            });
        }
        let bound = 1u64 << level;
        for (input, &word) in outputs.iter().enumerate() {
            if u64::from(word) >= bound {
                return Err(TableError::WordOutOfRange { word, level });
            }
            // Every input must agree, on each prefix, with the input that
            // shares that prefix and continues with zeros.
            for j in 1..level {
                let low = level - j;
                let anchor = (input >> low) << low;
                if (outputs[anchor] >> low) != (word >> low) {
                    return Err(TableError::NotPrefixCompatible {
                        input: input as u32,
                    });
                }
            }
        }
        Ok(Self { level, outputs })
    }

    pub(crate) fn from_outputs_unchecked(level: u32, outputs: Vec<u32>) -> Self {
        debug_assert_eq!(outputs.len(), 1usize << level);
        Self { level, outputs }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn outputs(&self) -> &[u32] {
        &self.outputs
    }

    #[inline]
    pub fn image(&self, input: u32) -> u32 {
        self.outputs[input as usize]
    }

    /// Image of a word given as a letter sequence of length `level`.
    pub fn apply_word(&self, word: &[usize]) -> Result<Vec<usize>, TableError> {
        if word.len() != self.level as usize {
            return Err(TableError::LengthMismatch {
                expected: self.level as usize,
                got: word.len(),
            });
        }
        let packed = pack_word(word)?;
        Ok(unpack_word(self.image(packed), self.level))
    }

    /// `self ∘ g`: apply `g` first, then `self`.
    pub fn compose(&self, g: &TransformTable) -> Result<TransformTable, TableError> {
        if self.level != g.level {
            return Err(TableError::LevelMismatch {
                left: self.level,
                right: g.level,
            });
        }
        Ok(Self {
            level: self.level,
            outputs: g.outputs.iter().map(|&w| self.outputs[w as usize]).collect(),
        })
    }

    /// Replaces `self` with `self ∘ g`, reusing `scratch` as the output buffer.
    pub(crate) fn compose_right_into(&mut self, g: &TransformTable, scratch: &mut Vec<u32>) {
        debug_assert_eq!(self.level, g.level);
        scratch.clear();
        scratch.extend(g.outputs.iter().map(|&w| self.outputs[w as usize]));
        std::mem::swap(&mut self.outputs, scratch);
    }

    pub fn is_identity(&self) -> bool {
        self.outputs.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// The constant value if every input maps to the same word.
    pub fn constant_value(&self) -> Option<u32> {
        let first = self.outputs[0];
        self.outputs.iter().all(|&v| v == first).then_some(first)
    }

    /// Restriction to the first `level` letters.
    pub fn truncate(&self, level: u32) -> Result<TransformTable, TableError> {
        if level > self.level {
            return Err(TableError::LevelMismatch {
                left: level,
                right: self.level,
            });
        }
        let shift = self.level - level;
        Ok(Self {
            level,
            outputs: (0..1u32 << level)
                .map(|u| self.outputs[(u << shift) as usize] >> shift)
                .collect(),
        })
    }
}

/// Table of the product `g_{w_1} ∘ g_{w_2} ∘ … ∘ g_{w_L}` over the given
/// generator tables (the last factor acts first). The empty word gives the
/// identity.
pub fn word_table(gens: &[TransformTable], level: u32, word: &[usize]) -> Result<TransformTable, TableError> {
    let mut acc = TransformTable::identity(level)?;
    let mut scratch = Vec::with_capacity(acc.outputs.len());
    for &g in word {
        let table = gens.get(g).ok_or(TableError::UnknownGenerator(g))?;
        if table.level != level {
            return Err(TableError::LevelMismatch {
                left: level,
                right: table.level,
            });
        }
        acc.compose_right_into(table, &mut scratch);
    }
    Ok(acc)
}

pub fn pack_word(word: &[usize]) -> Result<u32, TableError> {
    if word.len() > MAX_LEVEL as usize {
        return Err(TableError::LevelTooLarge {
            level: word.len() as u32,
            max: MAX_LEVEL,
        });
    }
    word.iter().try_fold(0u32, |acc, &x| match x {
        0 | 1 => Ok((acc << 1) | x as u32),
        _ => Err(TableError::UnsupportedAlphabet(x + 1)),
    })
}

pub fn unpack_word(packed: u32, level: u32) -> Vec<usize> {
    (0..level)
        .rev()
        .map(|bit| ((packed >> bit) & 1) as usize)
        .collect()
}
