//! Finite letter-to-letter transducers (Mealy automata) over a shared alphabet.
//!
//! States and letters are 0-indexed. A state `q` defines the automatic
//! transformation `f_q` obtained by running the transducer from `q`. Products
//! follow the composition convention used throughout the crate: the state
//! `(q1, q2)` of `a × b` acts as `f_{q1} ∘ f_{q2}`, so `q2` reads the input
//! first.

mod format;
mod iso;
mod minimize;

pub use format::ParseError;
pub use iso::{are_isomorphic, are_similar};
pub use minimize::{minimize, minimize_with_classes};

use thiserror::Error;

/// Default bound on the number of states a product may create.
pub const DEFAULT_MAX_STATES: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("alphabet size and state count must be positive (got m={alphabet}, n={states})")]
    Empty { alphabet: usize, states: usize },
    #[error("table entry for state {state}, letter {letter} is {value}, out of range 0..{bound}")]
    EntryOutOfRange {
        state: usize,
        letter: usize,
        value: usize,
        bound: usize,
    },
    #[error("table length {got} does not match {states} states x {alphabet} letters")]
    TableShape {
        got: usize,
        states: usize,
        alphabet: usize,
    },
    #[error("state {state} out of range 0..{states}")]
    StateOutOfRange { state: usize, states: usize },
    #[error("letter {letter} at position {position} out of range 0..{alphabet}")]
    LetterOutOfRange {
        letter: usize,
        position: usize,
        alphabet: usize,
    },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("product would have {requested} states, above the cap of {cap}")]
    Capacity { requested: usize, cap: usize },
    #[error("{0} label(s) given for {1} states")]
    LabelCount(usize, usize),
}

/// The first-letter decomposition `f_q = (f_{π(x_0,q)}, …, f_{π(x_{m-1},q)}) σ_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathForm {
    pub successor_states: Vec<usize>,
    pub output_map: Vec<usize>,
}

impl WreathForm {
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.output_map.len()];
        for &y in &self.output_map {
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

/// Transition table `π[state][letter]` and output table `λ[state][letter]`,
/// stored row-major by state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyAutomaton {
    alphabet: usize,
    states: usize,
    transition: Vec<usize>,
    output: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl MealyAutomaton {
    pub fn new(
        alphabet: usize,
        states: usize,
        transition: Vec<usize>,
        output: Vec<usize>,
    ) -> Result<Self, AutomatonError> {
        if alphabet == 0 || states == 0 {
            return Err(AutomatonError::Empty { alphabet, states });
        }
        for table in [&transition, &output] {
            if table.len() != alphabet * states {
                return Err(AutomatonError::TableShape {
                    got: table.len(),
                    states,
                    alphabet,
                });
            }
        }
        for (i, (&t, &o)) in transition.iter().zip(&output).enumerate() {
            let (state, letter) = (i / alphabet, i % alphabet);
            if t >= states {
                return Err(AutomatonError::EntryOutOfRange {
                    state,
                    letter,
                    value: t,
                    bound: states,
                });
            }
            if o >= alphabet {
                return Err(AutomatonError::EntryOutOfRange {
                    state,
                    letter,
                    value: o,
                    bound: alphabet,
                });
            }
        }
        Ok(Self {
            alphabet,
            states,
            transition,
            output,
            labels: None,
        })
    }

    /// Builds an automaton from one wreath form per state.
    pub fn from_wreath_forms(
        alphabet: usize,
        forms: &[WreathForm],
    ) -> Result<Self, AutomatonError> {
        let mut transition = Vec::with_capacity(forms.len() * alphabet);
        let mut output = Vec::with_capacity(forms.len() * alphabet);
        for form in forms {
            if form.successor_states.len() != alphabet || form.output_map.len() != alphabet {
                return Err(AutomatonError::TableShape {
                    got: form.successor_states.len().max(form.output_map.len()),
                    states: 1,
                    alphabet,
                });
            }
            transition.extend_from_slice(&form.successor_states);
            output.extend_from_slice(&form.output_map);
        }
        Self::new(alphabet, forms.len(), transition, output)
    }

    /// The two-state automaton I2 over `{x0, x1}`:
    /// `f0 = (f0, f0)·(x1 x0)` and `f1 = (f1, f0)·(x1 x1)`.
    pub fn i2() -> Self {
        Self::new(2, 2, vec![0, 0, 1, 0], vec![1, 0, 1, 1])
            .expect("I2 tables are well formed")
            .with_labels(vec!["f0".into(), "f1".into()])
            .expect("two labels")
    }

    /// One-state automaton acting as the identity on every word.
    pub fn identity(alphabet: usize) -> Self {
        Self::new(alphabet, 1, vec![0; alphabet], (0..alphabet).collect())
            .expect("identity tables are well formed")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AutomatonError> {
        if labels.len() != self.states {
            return Err(AutomatonError::LabelCount(labels.len(), self.states));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a state: its label if present, otherwise `q<index>`.
    pub fn label(&self, state: usize) -> String {
        match &self.labels {
            Some(labels) => labels[state].clone(),
            None => format!("q{state}"),
        }
    }

    #[inline]
    pub fn next_state(&self, state: usize, letter: usize) -> usize {
        self.transition[state * self.alphabet + letter]
    }

    #[inline]
    pub fn output_letter(&self, state: usize, letter: usize) -> usize {
        self.output[state * self.alphabet + letter]
    }

    pub fn check_state(&self, state: usize) -> Result<(), AutomatonError> {
        if state < self.states {
            Ok(())
        } else {
            Err(AutomatonError::StateOutOfRange {
                state,
                states: self.states,
            })
        }
    }

    /// Runs the transducer from `state` over `word`.
    pub fn apply(&self, state: usize, word: &[usize]) -> Result<Vec<usize>, AutomatonError> {
        self.check_state(state)?;
        let mut current = state;
        let mut out = Vec::with_capacity(word.len());
        for (position, &letter) in word.iter().enumerate() {
            if letter >= self.alphabet {
                return Err(AutomatonError::LetterOutOfRange {
                    letter,
                    position,
                    alphabet: self.alphabet,
                });
            }
            out.push(self.output_letter(current, letter));
            current = self.next_state(current, letter);
        }
        Ok(out)
    }

    pub fn unrolled_form(&self, state: usize) -> Result<WreathForm, AutomatonError> {
        self.check_state(state)?;
        let row = state * self.alphabet..(state + 1) * self.alphabet;
        Ok(WreathForm {
            successor_states: self.transition[row.clone()].to_vec(),
            output_map: self.output[row].to_vec(),
        })
    }

    /// True iff every `σ_q` is a permutation of the alphabet.
    pub fn is_invertible(&self) -> bool {
        (0..self.states).all(|q| {
            self.unrolled_form(q)
                .map(|form| form.is_permutation())
                .unwrap_or(false)
        })
    }

    /// Product automaton on `Q_self × Q_other`; the pair `(q1, q2)` has index
    /// `q1 * other.state_count() + q2` and acts as `f_{q1} ∘ f_{q2}`.
    pub fn product(&self, other: &MealyAutomaton) -> Result<MealyAutomaton, AutomatonError> {
        self.product_capped(other, DEFAULT_MAX_STATES)
    }

    pub fn product_capped(
        &self,
        other: &MealyAutomaton,
        max_states: usize,
    ) -> Result<MealyAutomaton, AutomatonError> {
        if self.alphabet != other.alphabet {
            return Err(AutomatonError::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        let states = self
            .states
            .checked_mul(other.states)
            .filter(|&n| n <= max_states)
            .ok_or(AutomatonError::Capacity {
                requested: self.states.saturating_mul(other.states),
                cap: max_states,
            })?;
        let m = self.alphabet;
        let mut transition = Vec::with_capacity(states * m);
        let mut output = Vec::with_capacity(states * m);
        for q1 in 0..self.states {
            for q2 in 0..other.states {
                for x in 0..m {
                    let inner = other.output_letter(q2, x);
                    transition
                        .push(self.next_state(q1, inner) * other.states + other.next_state(q2, x));
                    output.push(self.output_letter(q1, inner));
                }
            }
        }
        let mut result = MealyAutomaton::new(m, states, transition, output)?;
        if let (Some(left), Some(right)) = (&self.labels, &other.labels) {
            let labels = left
                .iter()
                .flat_map(|l| right.iter().map(move |r| format!("{l}{r}")))
                .collect();
            result.labels = Some(labels);
        }
        Ok(result)
    }

    /// Left-associated `n`-fold product `((A × A) × …) × A`.
    pub fn power(&self, n: usize) -> Result<MealyAutomaton, AutomatonError> {
        self.power_capped(n, DEFAULT_MAX_STATES)
    }

    pub fn power_capped(&self, n: usize, max_states: usize) -> Result<MealyAutomaton, AutomatonError> {
        if n == 0 {
            return Err(AutomatonError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product_capped(self, max_states)?;
        }
        Ok(acc)
    }

    /// Relabels states by `theta`, input letters by `xi` and output letters by
    /// `psi`, producing `B` with `θπ(x,q) = π_B(ξx, θq)` and
    /// `ψλ(x,q) = λ_B(ξx, θq)`.
    pub fn relabeled(
        &self,
        theta: &[usize],
        xi: &[usize],
        psi: &[usize],
    ) -> Result<MealyAutomaton, AutomatonError> {
        let (n, m) = (self.states, self.alphabet);
        let mut transition = vec![0; n * m];
        let mut output = vec![0; n * m];
        for q in 0..n {
            for x in 0..m {
                let idx = theta[q] * m + xi[x];
                transition[idx] = theta[self.next_state(q, x)];
                output[idx] = psi[self.output_letter(q, x)];
            }
        }
        MealyAutomaton::new(m, n, transition, output)
    }
}

/// Automaton growth `Γ_a(1..=n_max)`: the number of pairwise distinct
/// transformations among all length-`n` products of states.
///
/// Powers are built incrementally as `minimize(minimize(A^{n-1}) × A)`.
pub fn automaton_growth(
    a: &MealyAutomaton,
    n_max: usize,
    max_states: usize,
) -> Result<Vec<usize>, AutomatonError> {
    let mut growth = Vec::with_capacity(n_max);
    if n_max == 0 {
        return Ok(growth);
    }
    let mut current = minimize(a);
    growth.push(current.state_count());
    for _ in 1..n_max {
        current = minimize(&current.product_capped(a, max_states)?);
        growth.push(current.state_count());
    }
    Ok(growth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i2_worked_examples() {
        let i2 = MealyAutomaton::i2();
        assert_eq!(i2.apply(0, &[0, 0, 1]).unwrap(), vec![1, 1, 0]);
        assert_eq!(
            i2.apply(1, &[0, 0, 1, 0, 0, 1]).unwrap(),
            vec![1, 1, 1, 1, 1, 0]
        );
        assert!(i2.apply(0, &[]).unwrap().is_empty());
    }

    #[test]
    fn apply_rejects_bad_letters() {
        let i2 = MealyAutomaton::i2();
        assert_eq!(
            i2.apply(0, &[0, 2]),
            Err(AutomatonError::LetterOutOfRange {
                letter: 2,
                position: 1,
                alphabet: 2
            })
        );
        assert!(i2.apply(5, &[0]).is_err());
    }

    #[test]
    fn unrolled_forms() {
        let i2 = MealyAutomaton::i2();
        let f0 = i2.unrolled_form(0).unwrap();
        assert_eq!(f0.successor_states, vec![0, 0]);
        assert_eq!(f0.output_map, vec![1, 0]);
        let f1 = i2.unrolled_form(1).unwrap();
        assert_eq!(f1.successor_states, vec![1, 0]);
        assert_eq!(f1.output_map, vec![1, 1]);

        let id = MealyAutomaton::identity(3).unrolled_form(0).unwrap();
        assert_eq!(id.successor_states, vec![0, 0, 0]);
        assert_eq!(id.output_map, vec![0, 1, 2]);
    }

    #[test]
    fn construction_validates_tables() {
        assert!(MealyAutomaton::new(2, 1, vec![0, 1], vec![0, 0]).is_err());
        assert!(MealyAutomaton::new(2, 1, vec![0, 0], vec![0, 2]).is_err());
        assert!(MealyAutomaton::new(2, 1, vec![0], vec![0]).is_err());
        assert!(MealyAutomaton::new(0, 1, vec![], vec![]).is_err());
    }

    #[test]
    fn product_unrolled_form_matches_f1_f0() {
        // f1 f0 = (f0^2, f1 f0)·(x1 x1)
        let i2 = MealyAutomaton::i2();
        let p = i2.product(&i2).unwrap();
        let f1f0 = 2; // (q1, q0)
        let form = p.unrolled_form(f1f0).unwrap();
        assert_eq!(form.output_map, vec![1, 1]);
        assert_eq!(form.successor_states, vec![0, 2]); // (q0,q0), (q1,q0)
        assert_eq!(p.label(0), "f0f0");
        assert_eq!(p.label(2), "f1f0");
    }

    #[test]
    fn product_semantics_on_i2() {
        let i2 = MealyAutomaton::i2();
        let p = i2.product(&i2).unwrap();
        for len in 0..=6 {
            for bits in 0..(1usize << len) {
                let w: Vec<usize> = (0..len).map(|i| (bits >> i) & 1).collect();
                for (q1, q2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let inner = i2.apply(q2, &w).unwrap();
                    assert_eq!(p.apply(q1 * 2 + q2, &w).unwrap(), i2.apply(q1, &inner).unwrap());
                }
            }
        }
    }

    #[test]
    fn product_alphabet_mismatch() {
        let err = MealyAutomaton::i2().product(&MealyAutomaton::identity(3));
        assert_eq!(err, Err(AutomatonError::AlphabetMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn product_cap() {
        let i2 = MealyAutomaton::i2();
        assert!(matches!(
            i2.power_capped(5, 16),
            Err(AutomatonError::Capacity { requested: 32, cap: 16 })
        ));
    }

    #[test]
    fn powers() {
        let i2 = MealyAutomaton::i2();
        assert_eq!(i2.power(1).unwrap(), i2);
        assert_eq!(i2.power(2).unwrap().state_count(), 4);
        assert_eq!(i2.power(0), Err(AutomatonError::ZeroPower));
        assert_eq!(minimize(&i2.power(3).unwrap()).state_count(), 6);
    }

    #[test]
    fn invertibility() {
        assert!(!MealyAutomaton::i2().is_invertible());
        assert!(MealyAutomaton::identity(4).is_invertible());
        let swap = MealyAutomaton::new(2, 2, vec![1, 0, 0, 1], vec![1, 0, 0, 1]).unwrap();
        assert!(swap.is_invertible());
    }

    #[test]
    fn growth_of_i2_and_identity() {
        let i2 = MealyAutomaton::i2();
        assert_eq!(
            automaton_growth(&i2, 5, DEFAULT_MAX_STATES).unwrap(),
            vec![2, 4, 6, 9, 13]
        );
        let id = MealyAutomaton::identity(2);
        assert_eq!(
            automaton_growth(&id, 5, DEFAULT_MAX_STATES).unwrap(),
            vec![1; 5]
        );
    }

    #[test]
    fn growth_bounded_by_state_power() {
        let a = MealyAutomaton::new(2, 3, vec![1, 2, 0, 0, 2, 1], vec![1, 0, 0, 0, 1, 1]).unwrap();
        let growth = automaton_growth(&a, 6, DEFAULT_MAX_STATES).unwrap();
        for (i, g) in growth.iter().enumerate() {
            assert!(*g <= 3usize.pow(i as u32 + 1));
        }
    }

    #[test]
    fn f0_is_an_involution() {
        let i2 = MealyAutomaton::i2();
        for len in 0..=12 {
            for bits in 0..(1usize << len) {
                let w: Vec<usize> = (0..len).map(|i| (bits >> i) & 1).collect();
                let once = i2.apply(0, &w).unwrap();
                assert_eq!(i2.apply(0, &once).unwrap(), w);
            }
        }
    }
}
