//! Elements of `pi_1(M)` in normal form: a canonical base word together with
//! the exponent of the central fiber class `f`. Normal forms are unique, so
//! equality is structural.

use super::context::{BundleSpec, SurfaceKind, SurfaceSpec};
use super::dehn;
use super::word::{push_power, split_exponent, tokens_with_cols, Letter, Word};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Raw input token: a base letter or a fiber power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Base(Letter),
    Fiber(i64),
}

/// An element of `pi_1(M)` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleElement {
    spec: BundleSpec,
    base: Word,
    fiber: i64,
}

/// Canonical base-word normalization; returns the canonical word and the
/// fiber shift it incurs (zero except for genus >= 2 closed contexts).
pub fn normalize_word(w: Word, spec: &BundleSpec) -> (Word, i64) {
    match spec.surface.kind() {
        SurfaceKind::Open => (Word::reduce(w.0), 0),
        SurfaceKind::ClosedTorus => {
            let mut counts = [0i64; 2];
            for l in &w.0 {
                counts[l.gen as usize] += if l.inv { -1 } else { 1 };
            }
            let mut out = Vec::new();
            push_power(&mut out, Letter::new(0, false), counts[0]);
            push_power(&mut out, Letter::new(1, false), counts[1]);
            (Word(out), 0)
        }
        SurfaceKind::ClosedHyperbolic => dehn::normal_form(w, spec.surface.genus, spec.euler),
    }
}

impl BundleElement {
    pub fn identity(spec: BundleSpec) -> Self {
        BundleElement { spec, base: Word::identity(), fiber: 0 }
    }

    pub fn fiber_power(spec: BundleSpec, k: i64) -> Self {
        BundleElement { spec, base: Word::identity(), fiber: k }
    }

    pub fn generator(spec: BundleSpec, i: usize) -> Result<Self> {
        Self::from_word(spec, Word::gen(i), 0)
    }

    /// Builds the normal form of `word * f^fiber`.
    pub fn from_word(spec: BundleSpec, word: Word, fiber: i64) -> Result<Self> {
        word.validate(&spec.surface)?;
        let (base, d) = normalize_word(word, &spec);
        Ok(BundleElement { spec, base, fiber: fiber + d })
    }

    /// Reduces a raw token sequence; the fiber letters commute out by
    /// centrality.
    pub fn reduce_tokens(spec: BundleSpec, tokens: &[Token]) -> Result<Self> {
        let mut letters = Vec::new();
        let mut fiber = 0i64;
        for t in tokens {
            match t {
                Token::Base(l) => letters.push(*l),
                Token::Fiber(k) => fiber += k,
            }
        }
        Self::from_word(spec, Word(letters), fiber)
    }

    /// Parses the grammar `a1 b1^-1 f^-2`; identity is `1`.
    pub fn parse(spec: BundleSpec, s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (tok, col) in tokens_with_cols(s) {
            if tok == "1" {
                continue;
            }
            let (name, exp) = split_exponent(tok, col)?;
            if name == "f" {
                tokens.push(Token::Fiber(exp));
            } else {
                let gen = spec
                    .surface
                    .parse_gen(name)
                    .ok_or_else(|| Error::parse(1, col, format!("unknown generator `{name}`")))?;
                let mut letters = Vec::new();
                push_power(&mut letters, Letter::new(gen, false), exp);
                tokens.extend(letters.into_iter().map(Token::Base));
            }
        }
        Self::reduce_tokens(spec, &tokens)
    }

    pub fn spec(&self) -> &BundleSpec {
        &self.spec
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn fiber(&self) -> i64 {
        self.fiber
    }

    pub fn is_identity(&self) -> bool {
        self.base.is_empty() && self.fiber == 0
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.spec.surface
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::ContextMismatch(format!(
                "elements live in different bundles: {} vs {}",
                self.spec, other.spec
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let raw = Word(self
            .base
            .0
            .iter()
            .copied()
            .chain(other.base.0.iter().copied())
            .collect());
        Self::from_word(self.spec, raw, self.fiber + other.fiber)
    }

    pub fn inverse(&self) -> Self {
        Self::from_word(self.spec, self.base.inverse(), -self.fiber)
            .expect("inverse of valid element")
    }

    pub fn pow(&self, n: i64) -> Self {
        let mut out = Self::identity(self.spec);
        let step = if n < 0 { self.inverse() } else { self.clone() };
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&step).expect("same spec");
        }
        out
    }

    /// Multiplies the fiber exponent by `f^k`.
    pub fn shift_fiber(&self, k: i64) -> Self {
        BundleElement { spec: self.spec, base: self.base.clone(), fiber: self.fiber + k }
    }

    /// Conjugation by any lift of the base word `delta` (well defined because
    /// `f` is central).
    pub fn conj_by_base(&self, delta: &Word) -> Self {
        Self::from_word(self.spec, delta.conjugate(&self.base), self.fiber)
            .expect("conjugate of valid element")
    }

    /// Projection `p_*` to `pi_1(F)`: the canonical base word.
    pub fn project(&self) -> Word {
        self.base.clone()
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    pub fn display(&self) -> ElemDisplay<'_> {
        ElemDisplay(self)
    }
}

impl Ord for BundleElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.fiber.cmp(&other.fiber))
            .then_with(|| self.spec.cmp(&other.spec))
    }
}

impl PartialOrd for BundleElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct ElemDisplay<'a>(&'a BundleElement);

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        if e.base.is_empty() && e.fiber == 0 {
            return write!(f, "1");
        }
        if e.base.is_empty() {
            return write!(f, "f^{}", e.fiber);
        }
        write!(f, "{}", e.base.display(&e.spec.surface))?;
        if e.fiber != 0 {
            write!(f, " f^{}", e.fiber)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus() -> BundleSpec {
        BundleSpec::product(SurfaceSpec::new(0, 2).unwrap())
    }

    fn genus2(euler: i64) -> BundleSpec {
        BundleSpec::new(SurfaceSpec::new(2, 0).unwrap(), euler).unwrap()
    }

    fn torus3() -> BundleSpec {
        BundleSpec::product(SurfaceSpec::new(1, 0).unwrap())
    }

    #[test]
    fn free_cancellation_in_annulus_times_circle() {
        let spec = BundleSpec::product(SurfaceSpec::new(1, 1).unwrap());
        let e = BundleElement::parse(spec, "a1 a1^-1 b1").unwrap();
        assert_eq!(e.display().to_string(), "b1");
        assert_eq!(e.fiber(), 0);
    }

    #[test]
    fn fiber_is_central() {
        let spec = annulus();
        let e = BundleElement::parse(spec, "f c1 f^-1").unwrap();
        assert_eq!(e.display().to_string(), "c1");
        assert_eq!(e.fiber(), 0);
    }

    #[test]
    fn relator_becomes_fiber_power() {
        // Genus 2, euler -2: the full relator word normalizes to f^-2.
        let spec = genus2(-2);
        let e = BundleElement::parse(spec, "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1").unwrap();
        assert!(e.base().is_identity());
        assert_eq!(e.fiber(), -2);
    }

    #[test]
    fn product_realizing_relator() {
        let spec = genus2(-2);
        let x = BundleElement::parse(spec, "a1 b1 a1^-1 b1^-1").unwrap();
        let y = BundleElement::parse(spec, "a2 b2 a2^-1 b2^-1").unwrap();
        let p = x.mul(&y).unwrap();
        assert!(p.base().is_identity());
        assert_eq!(p.fiber(), -2);
    }

    #[test]
    fn simple_products() {
        let spec = annulus();
        let x = BundleElement::parse(spec, "c1").unwrap();
        let y = BundleElement::parse(spec, "c1^-1 f^3").unwrap();
        let p = x.mul(&y).unwrap();
        assert!(p.base().is_identity());
        assert_eq!(p.fiber(), 3);
    }

    #[test]
    fn torus_is_abelian() {
        let spec = torus3();
        let x = BundleElement::parse(spec, "b1 a1 b1 a1^-1 a1").unwrap();
        assert_eq!(x.display().to_string(), "a1 b1^2");
        let y = BundleElement::parse(spec, "a1 b1^2").unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn inverse_and_associativity() {
        let spec = genus2(-2);
        for s in ["a1 b1 f^2", "a2^-1 b2 a1", "b1^3"] {
            let x = BundleElement::parse(spec, s).unwrap();
            assert!(x.mul(&x.inverse()).unwrap().is_identity());
        }
        let a = BundleElement::parse(spec, "a1 b2").unwrap();
        let b = BundleElement::parse(spec, "b1^-1 a2 f").unwrap();
        let c = BundleElement::parse(spec, "a2^-1 b2^-1 a1").unwrap();
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn normal_form_idempotent() {
        let spec = genus2(-2);
        let x = BundleElement::parse(spec, "a1 b1 a1^-1 b1^-1 a2 b2").unwrap();
        let again = BundleElement::from_word(spec, x.base().clone(), x.fiber()).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn context_mismatch_rejected() {
        let x = BundleElement::parse(annulus(), "c1").unwrap();
        let y = BundleElement::parse(torus3(), "a1").unwrap();
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn display_round_trip() {
        let spec = genus2(-2);
        for s in ["1", "f^3", "a1 b1^-2 f^-1", "a2^2"] {
            let x = BundleElement::parse(spec, s).unwrap();
            let y = BundleElement::parse(spec, &x.display().to_string()).unwrap();
            assert_eq!(x, y);
        }
    }
}
