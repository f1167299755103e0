use std::sync::OnceLock;

use rayon::prelude::*;
use supercore::{GradedMatrix, Mode, SuperSpace};

use crate::braid::{BraidWord, Generator};
use crate::error::Result;

/// How the generator matrices were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Algebraic,
    Numeric,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Algebraic => "algebraic",
            Provenance::Numeric => "numeric",
        })
    }
}

/// Produces the matrix of a single generator.
pub trait GeneratorSource: Send + Sync {
    fn generator(&self, g: Generator) -> Result<GradedMatrix>;
}

/// Evaluates braid words as ordered products `M(g_1)·M(g_2)·…`. Generator
/// matrices and their inverses are computed once and cached.
pub struct WordEvaluator {
    n: usize,
    provenance: Provenance,
    space: SuperSpace,
    source: Box<dyn GeneratorSource>,
    forward: Vec<OnceLock<GradedMatrix>>,
    backward: Vec<OnceLock<GradedMatrix>>,
}

impl std::fmt::Debug for WordEvaluator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WordEvaluator").field("n", &self.n).field("provenance", &self.provenance).finish()
    }
}

impl WordEvaluator {
    pub fn new(n: usize, provenance: Provenance, space: SuperSpace, source: Box<dyn GeneratorSource>) -> Self {
        let slots = Generator::all(n).len();
        WordEvaluator {
            n,
            provenance,
            space,
            source,
            forward: (0..slots).map(|_| OnceLock::new()).collect(),
            backward: (0..slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `V^{⊗n}`.
    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    /// `M(g)`; the first successful computation wins.
    pub fn generator(&self, g: Generator) -> Result<&GradedMatrix> {
        g.check(self.n)?;
        let cell = &self.forward[g.index(self.n)];
        if let Some(m) = cell.get() {
            return Ok(m);
        }
        let m = self.source.generator(g)?;
        Ok(cell.get_or_init(|| m))
    }

    /// `M(g)^{-1}`.
    pub fn inverse(&self, g: Generator) -> Result<&GradedMatrix> {
        g.check(self.n)?;
        let cell = &self.backward[g.index(self.n)];
        if let Some(m) = cell.get() {
            return Ok(m);
        }
        let m = self.generator(g)?.inverse()?;
        Ok(cell.get_or_init(|| m))
    }

    /// Computes every generator and inverse, in parallel.
    pub fn warm(&self) -> Result<()> {
        Generator::all(self.n).par_iter().try_for_each(|&g| self.inverse(g).map(|_| ()))
    }

    pub fn letter(&self, g: Generator, e: i8) -> Result<&GradedMatrix> {
        if e < 0 {
            self.inverse(g)
        } else {
            self.generator(g)
        }
    }

    pub fn eval(&self, word: &BraidWord) -> Result<GradedMatrix> {
        word.check(self.n)?;
        let mut out = GradedMatrix::identity(&self.space, Mode::Complex);
        for &(g, e) in word.letters() {
            out = out.try_compose(self.letter(g, e)?)?;
        }
        Ok(out)
    }
}
