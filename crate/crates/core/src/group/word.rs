//! Words over a surface alphabet: free reduction, ShortLex order, the
//! serialization grammar (`a1 b1^-1 c2^3`, identity `1`).

use super::context::SurfaceSpec;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A single generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: u16,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen: gen as u16, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

// ShortLex letter order: by generator index, positive before inverse.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.gen, self.inv).cmp(&(other.gen, other.inv))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word in the base alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![Letter::new(i, false)])
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().copied().is_some_and(|last| last.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().copied().chain(other.0.iter().copied()))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self * w * self^-1`, freely reduced.
    pub fn conjugate(&self, w: &Word) -> Word {
        self.concat(w).concat(&self.inverse())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Cyclic reduction: returns `(core, conjugator)` with
    /// `self = conjugator * core * conjugator^-1` and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut core = self.0.clone();
        let mut prefix: Vec<Letter> = Vec::new();
        while core.len() >= 2 && core[0].cancels(*core.last().unwrap()) {
            prefix.push(core[0]);
            core.remove(0);
            core.pop();
        }
        (Word(core), Word(prefix))
    }

    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// ShortLex comparison: first by length, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn validate(&self, surface: &SurfaceSpec) -> Result<()> {
        for l in &self.0 {
            if (l.gen as usize) >= surface.alphabet_size() {
                return Err(Error::Context(format!(
                    "letter index {} outside the alphabet of {}",
                    l.gen, surface
                )));
            }
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, surface: &'a SurfaceSpec) -> WordDisplay<'a> {
        WordDisplay { word: self, surface }
    }

    /// Parses the whitespace-separated grammar. Tokens are `a1`, `b2^-1`,
    /// `c1^3`; the identity is `1`. The fiber letter is rejected here; use
    /// `BundleElement::parse` for elements with fiber content.
    pub fn parse(s: &str, surface: &SurfaceSpec) -> Result<Word> {
        let mut letters = Vec::new();
        for (tok, col) in tokens_with_cols(s) {
            if tok == "1" {
                continue;
            }
            let (name, exp) = split_exponent(tok, col)?;
            let gen = surface
                .parse_gen(name)
                .ok_or_else(|| Error::parse(1, col, format!("unknown generator `{name}`")))?;
            push_power(&mut letters, Letter::new(gen, false), exp);
        }
        Ok(Word::reduce(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    surface: &'a SurfaceSpec,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        let v = &self.word.0;
        while i < v.len() {
            let mut j = i + 1;
            while j < v.len() && v[j] == v[i] {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if v[i].inv { -run } else { run };
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self.surface.gen_name(v[i].gen as usize);
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

pub(crate) fn push_power(out: &mut Vec<Letter>, letter: Letter, exp: i64) {
    let l = if exp < 0 { letter.inverse() } else { letter };
    for _ in 0..exp.unsigned_abs() {
        out.push(l);
    }
}

pub(crate) fn split_exponent(tok: &str, col: usize) -> Result<(&str, i64)> {
    match tok.split_once('^') {
        None => Ok((tok, 1)),
        Some((name, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::parse(1, col, format!("bad exponent `{e}`")))?;
            if exp == 0 {
                return Err(Error::parse(1, col, "zero exponent"));
            }
            Ok((name, exp))
        }
    }
}

pub(crate) fn tokens_with_cols(s: &str) -> impl Iterator<Item = (&str, usize)> {
    s.split_whitespace().map(move |tok| {
        let col = tok.as_ptr() as usize - s.as_ptr() as usize + 1;
        (tok, col)
    })
}
