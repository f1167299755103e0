use std::fmt;
use std::str::FromStr;

use crate::error::{MonoError, Result};

/// Generators of the affine braid group: exchanges `b_i` and loops `X_j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    B(usize),
    X(usize),
}

impl Generator {
    pub fn check(self, n: usize) -> Result<()> {
        let ok = match self {
            Generator::B(i) => i >= 1 && i < n,
            Generator::X(j) => j >= 1 && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(MonoError::InvalidGenerator(format!("{self} for n = {n}")))
        }
    }

    /// All generators for `n` strands: `b_1..b_{n-1}` then `X_1..X_n`.
    pub fn all(n: usize) -> Vec<Generator> {
        (1..n).map(Generator::B).chain((1..=n).map(Generator::X)).collect()
    }

    /// Position in [`Generator::all`].
    pub fn index(self, n: usize) -> usize {
        match self {
            Generator::B(i) => i - 1,
            Generator::X(j) => n - 1 + j - 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::B(i) => write!(f, "b{i}"),
            Generator::X(j) => write!(f, "X{j}"),
        }
    }
}

impl FromStr for Generator {
    type Err = MonoError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || MonoError::Parse(format!("unknown generator {s:?}"));
        let (head, idx) = s.split_at(s.chars().next().map(|c| c.len_utf8()).ok_or_else(bad)?);
        let i: usize = idx.parse().map_err(|_| bad())?;
        match head {
            "b" | "B" => Ok(Generator::B(i)),
            "X" | "x" => Ok(Generator::X(i)),
            _ => Err(bad()),
        }
    }
}

/// A word in the generators; each letter has exponent `±1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<(Generator, i8)>,
}

impl BraidWord {
    pub fn new(letters: Vec<(Generator, i8)>) -> Result<Self> {
        if let Some((g, e)) = letters.iter().find(|(_, e)| *e != 1 && *e != -1) {
            return Err(MonoError::Parse(format!("exponent {e} on {g}")));
        }
        Ok(BraidWord { letters })
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn letter(g: Generator, e: i8) -> Self {
        BraidWord { letters: vec![(g, e.signum())] }
    }

    pub fn letters(&self) -> &[(Generator, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.letters.iter().try_for_each(|(g, _)| g.check(n))
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// Cancels adjacent `g g^{-1}` pairs.
    pub fn reduced(&self) -> BraidWord {
        let mut out: Vec<(Generator, i8)> = Vec::new();
        for &(g, e) in &self.letters {
            if out.last() == Some(&(g, -e)) {
                out.pop();
            } else {
                out.push((g, e));
            }
        }
        BraidWord { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !(w[0].0 == w[1].0 && w[0].1 == -w[1].1))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|(g, e)| if *e < 0 { format!("{g}'") } else { g.to_string() }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Space-separated letters; an inverse is written `b1'` or `b1^-1`; `1` is the empty word.
impl FromStr for BraidWord {
    type Err = MonoError;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, e) = if let Some(b) = tok.strip_suffix('\'') {
                (b, -1)
            } else if let Some(b) = tok.strip_suffix("^-1") {
                (b, -1)
            } else {
                (tok, 1)
            };
            letters.push((body.parse()?, e));
        }
        Ok(BraidWord { letters })
    }
}
