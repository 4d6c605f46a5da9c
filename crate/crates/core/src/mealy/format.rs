//! Plain-text automaton files.
//!
//! ```text
//! alphabet 2
//! states 2
//! state f0 trans 0 0 out 1 0
//! state f1 trans 1 0 out 1 1   # comment
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{AutomatonError, MealyAutomaton};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let mut items = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    items.push((s + 1, &text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            items.push((s + 1, &text[s..]));
        }
        Self { line, items, pos: 0 }
    }

    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn end_column(&self) -> usize {
        self.items.last().map_or(1, |(c, t)| c + t.len())
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let item = self
            .items
            .get(self.pos)
            .copied()
            .ok_or_else(|| self.error(self.end_column(), format!("expected {what}")))?;
        self.pos += 1;
        Ok(item)
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let (col, tok) = self.next(&format!("`{word}`"))?;
        if tok == word {
            Ok(())
        } else {
            Err(self.error(col, format!("expected `{word}`, found `{tok}`")))
        }
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        let (col, tok) = self.next(what)?;
        tok.parse::<usize>()
            .map(|v| (col, v))
            .map_err(|_| self.error(col, format!("expected {what}, found `{tok}`")))
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.items.get(self.pos) {
            Some((col, tok)) => Err(self.error(*col, format!("unexpected `{tok}`"))),
            None => Ok(()),
        }
    }
}

impl FromStr for MealyAutomaton {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());

        let mut header = |key: &str| -> Result<usize, ParseError> {
            let (no, line) = lines.next().ok_or(ParseError {
                line: text.lines().count() + 1,
                column: 1,
                message: format!("missing `{key}` line"),
            })?;
            let mut t = Tokens::new(no, line);
            t.keyword(key)?;
            let (col, v) = t.number("a positive integer")?;
            if v == 0 {
                return Err(t.error(col, format!("{key} must be positive")));
            }
            t.finish()?;
            Ok(v)
        };
        let m = header("alphabet")?;
        let n = header("states")?;

        let mut labels = Vec::with_capacity(n);
        let mut transition = Vec::with_capacity(n * m);
        let mut output = Vec::with_capacity(n * m);
        let mut last_line = 0;
        for (no, line) in lines {
            last_line = no;
            let mut t = Tokens::new(no, line);
            if labels.len() == n {
                return Err(t.error(1, format!("more than {n} state lines")));
            }
            t.keyword("state")?;
            let (_, name) = t.next("a state name")?;
            labels.push(name.to_string());
            t.keyword("trans")?;
            for _ in 0..m {
                let (col, v) = t.number("a state index")?;
                if v >= n {
                    return Err(t.error(col, format!("state {v} out of range 0..{n}")));
                }
                transition.push(v);
            }
            t.keyword("out")?;
            for _ in 0..m {
                let (col, v) = t.number("a letter index")?;
                if v >= m {
                    return Err(t.error(col, format!("letter {v} out of range 0..{m}")));
                }
                output.push(v);
            }
            t.finish()?;
        }
        if labels.len() != n {
            return Err(ParseError {
                line: last_line + 1,
                column: 1,
                message: format!("expected {n} state lines, found {}", labels.len()),
            });
        }
        let wrap = |e: AutomatonError| ParseError {
            line: 1,
            column: 1,
            message: e.to_string(),
        };
        MealyAutomaton::new(m, n, transition, output)
            .and_then(|a| a.with_labels(labels))
            .map_err(wrap)
    }
}

impl fmt::Display for MealyAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet {}", self.alphabet)?;
        writeln!(f, "states {}", self.states)?;
        for q in 0..self.states {
            write!(f, "state {} trans", self.label(q))?;
            for x in 0..self.alphabet {
                write!(f, " {}", self.next_state(q, x))?;
            }
            write!(f, " out")?;
            for x in 0..self.alphabet {
                write!(f, " {}", self.output_letter(q, x))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
