//! Growth of the semigroup generated by the two-state automaton I2, with the
//! general Mealy automaton machinery it rests on.

pub mod mealy;
pub mod numeric;
pub mod rewrite;
pub mod semigroup;
pub mod series;

pub use mealy::{AutomatonError, MealyAutomaton};
pub use rewrite::{reduce, GenWord, NormalForm};
pub use semigroup::{TableError, TransformTable};
