//! The semigroup S(I2) as a rewriting system over the generators `f0`, `f1`.
//!
//! Words are written left to right and act right to left: `f1 f0` applies
//! `f0` first. The defining relations are `f0² = 1` and, for every `p ≥ 0`,
//!
//! ```text
//! r_p:  f1 (f0 f1)^p (f1 f0)^p f1²  =  f1 (f0 f1)^p (f1 f0)^p
//! ```

mod normal_form;
mod reduce;
mod relations;
mod test_word;
mod width;

pub use normal_form::{
    count_normal_forms, normal_forms_of_length, quotient_normal_forms, GeneralForm, NormalForm,
};
pub use reduce::{
    reduce, reduce_quotient, reduce_traced, truncate_to_quotient, words_equal,
    words_equal_quotient, Reduction,
};
pub use relations::{
    applicable_rewrites, left_zero_word, verify_left_zero, verify_relation, Direction, Relation,
    Rewrite,
};
pub use test_word::{eval_test_word, test_word_pattern};
pub use width::{block_sizes, width};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::mealy::MealyAutomaton;
use crate::semigroup::{state_tables, TableError, TransformTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("position {position}: expected `0` or `1`, found `{found}`")]
    Parse { position: usize, found: char },
    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("not a test word: {0}")]
    ShapeMismatch(String),
    #[error("test word image {table:?} disagrees with the closed pattern {pattern:?}")]
    TestWordMismatch {
        table: Vec<usize>,
        pattern: Vec<usize>,
    },
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    F0,
    F1,
}

impl Gen {
    /// State index of the generator in [`MealyAutomaton::i2`].
    pub fn index(self) -> usize {
        match self {
            Gen::F0 => 0,
            Gen::F1 => 1,
        }
    }
}

/// A word over `{f0, f1}`; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenWord(Vec<Gen>);

impl GenWord {
    pub fn new(letters: Vec<Gen>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Gen> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Gen) -> &mut Self {
        self.0.push(g);
        self
    }

    pub fn extend(&mut self, other: &GenWord) -> &mut Self {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    pub fn repeat(&self, times: usize) -> GenWord {
        GenWord(self.0.repeat(times))
    }

    /// Generator indices, as used by [`crate::semigroup::word_table`].
    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|g| g.index()).collect()
    }

    /// Image of a letter word under this element of S(I2).
    pub fn act_on(&self, input: &[usize]) -> Vec<usize> {
        let i2 = MealyAutomaton::i2();
        self.0.iter().rev().fold(input.to_vec(), |u, g| {
            i2.apply(g.index(), &u).expect("binary input")
        })
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for g in &self.0 {
            f.write_str(match g {
                Gen::F0 => "0",
                Gen::F1 => "1",
            })?;
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = RewriteError;

    /// `0` stands for `f0` and `1` for `f1`; `ε` or the empty string is the
    /// identity.
    fn from_str(s: &str) -> Result<Self, RewriteError> {
        if s == "ε" {
            return Ok(GenWord::empty());
        }
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(Gen::F0),
                '1' => Ok(Gen::F1),
                found => Err(RewriteError::Parse { position, found }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GenWord)
    }
}

/// Shorthand for building words: `word("f1 f0")` or `word("10")` style is
/// covered by `FromStr`; this builds `g^times`.
pub fn power(g: Gen, times: usize) -> GenWord {
    GenWord(vec![g; times])
}

/// `(f0 f1)^p`
pub fn f0f1_power(p: usize) -> GenWord {
    GenWord([Gen::F0, Gen::F1].repeat(p))
}

/// `(f1 f0)^p`
pub fn f1f0_power(p: usize) -> GenWord {
    GenWord([Gen::F1, Gen::F0].repeat(p))
}

/// Level-`k` tables of `f0` and `f1`, for evaluating many words at one level.
#[derive(Debug, Clone)]
pub struct I2Tables {
    level: u32,
    gens: [TransformTable; 2],
}

impl I2Tables {
    pub fn new(level: u32) -> Result<Self, TableError> {
        let mut tables = state_tables(&MealyAutomaton::i2(), level)?.into_iter();
        let f0 = tables.next().expect("two states");
        let f1 = tables.next().expect("two states");
        Ok(Self {
            level,
            gens: [f0, f1],
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generators(&self) -> &[TransformTable; 2] {
        &self.gens
    }

    pub fn table(&self, w: &GenWord) -> TransformTable {
        let mut acc = TransformTable::identity(self.level).expect("level checked on construction");
        let mut scratch = Vec::with_capacity(acc.outputs().len());
        for g in w.letters() {
            acc.compose_right_into(&self.gens[g.index()], &mut scratch);
        }
        acc
    }
}
