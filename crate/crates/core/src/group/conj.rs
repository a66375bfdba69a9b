//! Conjugacy with witnesses, centralizer roots, and the unique fiber shift
//! between elements with conjugate projections.

use super::context::{BundleSpec, SurfaceKind, SurfaceSpec};
use super::dehn;
use super::elem::BundleElement;
use super::word::Word;
use crate::error::{Error, Result};
use std::fmt;

/// Canonical representative of the conjugacy class of a base word, with the
/// data needed to move between the input and the representative.
pub struct WordConjCanon {
    pub rep: Word,
    /// Fiber shift picked up while canonicalizing, relative to the input.
    pub fiber_delta: i64,
    /// `witness * (rep, k + fiber_delta) * witness^-1 == (input, k)`.
    pub witness: Word,
    /// Known nontrivial elements of the centralizer of the input.
    pub self_conjugators: Vec<Word>,
}

/// Conjugacy canonical form of a base word in the given bundle context.
pub fn word_conj_canon(w: &Word, spec: &BundleSpec) -> WordConjCanon {
    match spec.surface.kind() {
        SurfaceKind::Open => {
            let (core, prefix) = Word::reduce(w.0.clone()).cyclic_reduce();
            let mut best_k = 0usize;
            for k in 1..core.0.len() {
                if core.rotated(k) < core.rotated(best_k) {
                    best_k = k;
                }
            }
            let rep = core.rotated(best_k);
            let witness = prefix.concat(&Word(core.0[..best_k].to_vec()));
            let mut self_conjugators = Vec::new();
            if !core.is_identity() {
                let root = free_primitive_root(w);
                self_conjugators.push(root);
            }
            WordConjCanon { rep, fiber_delta: 0, witness, self_conjugators }
        }
        SurfaceKind::ClosedTorus => {
            let (rep, _) = super::elem::normalize_word(w.clone(), spec);
            WordConjCanon {
                rep,
                fiber_delta: 0,
                witness: Word::identity(),
                self_conjugators: Vec::new(),
            }
        }
        SurfaceKind::ClosedHyperbolic => {
            let c = dehn::cyclic_canon(w.clone(), spec.surface.genus, spec.euler);
            WordConjCanon {
                rep: c.rep,
                fiber_delta: c.fiber_delta,
                witness: c.witness,
                self_conjugators: c.self_conjugators,
            }
        }
    }
}

/// Primitive root in a free group: cyclically reduce and take the shortest
/// period of the cyclic word, conjugated back to the input coordinates.
fn free_primitive_root(w: &Word) -> Word {
    let (core, prefix) = Word::reduce(w.0.clone()).cyclic_reduce();
    let n = core.0.len();
    debug_assert!(n > 0);
    let mut period = n;
    for p in 1..n {
        if n % p == 0 && core.rotated(p) == core {
            period = p;
            break;
        }
    }
    let root = Word(core.0[..period].to_vec());
    prefix.concat(&root).concat(&prefix.inverse())
}

/// Decides conjugacy of reduced words in `pi_1(F)` and produces a witness
/// `xi` with `xi * u * xi^-1 == v`.
pub fn are_conjugate_base(surface: &SurfaceSpec, u: &Word, v: &Word) -> Result<Option<Word>> {
    u.validate(surface)?;
    v.validate(surface)?;
    let spec = base_spec(surface);
    let cu = word_conj_canon(u, &spec);
    let cv = word_conj_canon(v, &spec);
    if cu.rep != cv.rep {
        return Ok(None);
    }
    // u = wit_u rep wit_u^-1, v = wit_v rep wit_v^-1 => xi = wit_v wit_u^-1.
    let xi = cv.witness.concat(&cu.witness.inverse());
    let (xi, _) = super::elem::normalize_word(xi, &spec);
    debug_assert_eq!(
        super::elem::normalize_word(xi.conjugate(u), &spec).0,
        super::elem::normalize_word(v.clone(), &spec).0
    );
    Ok(Some(xi))
}

fn base_spec(surface: &SurfaceSpec) -> BundleSpec {
    BundleSpec { surface: *surface, euler: 0 }
}

/// Generator of the centralizer of a nontrivial element of `pi_1(F)`
/// (infinite cyclic for surfaces other than the closed torus), i.e. the
/// primitive root `z` with `w = z^m`, `m >= 1` maximal.
pub fn centralizer_root(surface: &SurfaceSpec, w: &Word) -> Result<Word> {
    w.validate(surface)?;
    let spec = base_spec(surface);
    let (nf, _) = super::elem::normalize_word(w.clone(), &spec);
    if nf.is_identity() {
        return Err(Error::Context("centralizer of the identity is the whole group".into()));
    }
    match surface.kind() {
        SurfaceKind::Open => Ok(free_primitive_root(&nf)),
        SurfaceKind::ClosedTorus => Err(Error::Context(
            "centralizers over the closed torus are not cyclic".into(),
        )),
        SurfaceKind::ClosedHyperbolic => dehn::primitive_root_closed(&nf, surface.genus, 0),
    }
}

/// Canonical conjugacy-class representative of a bundle element, plus a
/// witness with `witness * rep * witness^-1 == elem`.
pub fn elem_conj_canon(e: &BundleElement) -> (BundleElement, Word) {
    let c = word_conj_canon(e.base(), e.spec());
    let rep = BundleElement::from_word(*e.spec(), c.rep, e.fiber() + c.fiber_delta)
        .expect("canonical rep is valid");
    debug_assert_eq!(&rep.conj_by_base(&c.witness), e, "conjugacy witness failed");
    (rep, c.witness)
}

/// The unique `i` with `x` conjugate to `y * f^i` in `pi_1(M)`, if the
/// projections are conjugate in `pi_1(F)`; `None` otherwise. Uniqueness and
/// witness independence come from the freeness of the kink action.
pub fn fiber_shift(x: &BundleElement, y: &BundleElement) -> Result<Option<i64>> {
    if x.spec() != y.spec() {
        return Err(Error::ContextMismatch("fiber_shift across different bundles".into()));
    }
    let (rx, _) = elem_conj_canon(x);
    let (ry, wy) = elem_conj_canon(y);
    if rx.base() != ry.base() {
        return Ok(None);
    }
    let i = rx.fiber() - ry.fiber();
    // Witness independence: re-deriving y through a second witness (the
    // first composed with a centralizer element of the representative) must
    // reproduce y exactly, so the shift does not depend on the witness.
    #[cfg(debug_assertions)]
    {
        let c = word_conj_canon(ry.base(), ry.spec());
        if let Some(z) = c.self_conjugators.first() {
            let wit2 = wy.concat(z);
            debug_assert_eq!(ry.conj_by_base(&wit2), *y, "fiber shift depends on witness");
        } else {
            debug_assert_eq!(ry.conj_by_base(&wy), *y);
        }
    }
    #[cfg(not(debug_assertions))]
    let _ = wy;
    Ok(Some(i))
}

/// `x` and `y` conjugate in `pi_1(M)` (fiber shift zero).
pub fn are_conjugate_total(x: &BundleElement, y: &BundleElement) -> Result<bool> {
    Ok(fiber_shift(x, y)? == Some(0))
}

/// Canonical conjugacy class of an element of `pi_1(M)`: the key type for
/// components of the space of unframed curves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjClass {
    rep: BundleElement,
}

impl ConjClass {
    pub fn of(e: &BundleElement) -> Self {
        ConjClass { rep: elem_conj_canon(e).0 }
    }

    pub fn rep(&self) -> &BundleElement {
        &self.rep
    }
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display())
    }
}
