//! Wedge classes: unordered pairs of `pi_1(M)` elements modulo simultaneous
//! conjugation and swap. These record singular knots with one double point.
//!
//! Canonical representatives are computed by minimizing, in the pair order,
//! over the swap and over all simultaneous conjugations: the first coordinate
//! is brought to its conjugacy canonical form, and the residual action of its
//! centralizer (infinite cyclic, Preissman) on the second coordinate is
//! searched within a length bound under which conjugate length grows.

use crate::error::{Error, Result};
use crate::group::context::{BundleSpec, SurfaceKind, SurfaceSpec};
use crate::group::conj::{centralizer_root, elem_conj_canon};
use crate::group::elem::BundleElement;
use crate::group::word::Word;
use std::cmp::Ordering;
use std::fmt;

/// Minimal representative of the simultaneous-conjugation orbit of the
/// ordered pair `(x, y)`.
pub(crate) fn ordered_pair_canon(
    x: &BundleElement,
    y: &BundleElement,
) -> (BundleElement, BundleElement) {
    let spec = *x.spec();
    match spec.surface.kind() {
        SurfaceKind::ClosedTorus => (x.clone(), y.clone()),
        _ => {
            if x.base().is_identity() {
                // x is central; minimize y freely.
                return (x.clone(), elem_conj_canon(y).0);
            }
            let (rx, wit) = elem_conj_canon(x);
            let y0 = y.conj_by_base(&wit.inverse());
            let z = centralizer_root(&spec.surface, rx.base())
                .expect("nontrivial base has cyclic centralizer");
            let bound = (y0.base().len() + 2 * z.len() + 16) as i64;
            let mut best = y0.clone();
            let mut zp = Word::identity();
            let mut zn = Word::identity();
            for _ in 1..=bound {
                zp = zp.concat(&z);
                zn = zn.concat(&z.inverse());
                for cand_wit in [&zp, &zn] {
                    let cand = y0.conj_by_base(cand_wit);
                    if cand < best {
                        best = cand;
                    }
                }
            }
            (rx, best)
        }
    }
}

/// An element of the quotient `B` of `pi_1(M) + pi_1(M)` by simultaneous
/// conjugation and swap; stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeClass {
    a: BundleElement,
    b: BundleElement,
}

impl WedgeClass {
    pub fn new(x: BundleElement, y: BundleElement) -> Result<Self> {
        if x.spec() != y.spec() {
            return Err(Error::ContextMismatch("wedge coordinates in different bundles".into()));
        }
        let p = ordered_pair_canon(&x, &y);
        let q = ordered_pair_canon(&y, &x);
        let (a, b) = if (&p.0, &p.1) <= (&q.0, &q.1) { p } else { q };
        Ok(WedgeClass { a, b })
    }

    pub fn spec(&self) -> &BundleSpec {
        self.a.spec()
    }

    /// First coordinate of the stored canonical pair.
    pub fn first(&self) -> &BundleElement {
        &self.a
    }

    /// Second coordinate of the stored canonical pair.
    pub fn second(&self) -> &BundleElement {
        &self.b
    }

    /// Multiplies the coordinates of the stored canonical pair by `f^i` and
    /// `f^j`. Well defined on the quotient because `f` is central; for `i != j`
    /// the assignment of exponents to coordinates follows the stored order.
    pub fn shift(&self, i: i64, j: i64) -> WedgeClass {
        WedgeClass::new(self.a.shift_fiber(i), self.b.shift_fiber(j))
            .expect("same spec")
    }

    /// Drops fiber data and projects to the base quotient.
    pub fn project_to_base(&self) -> BaseWedgeClass {
        BaseWedgeClass::new(self.spec().surface, self.a.base().clone(), self.b.base().clone())
            .expect("bases of a valid class are valid")
    }

    /// Conjugacy class of the product of the two loops: the component datum
    /// of the singular knot the class came from.
    pub fn product_class(&self) -> BundleElement {
        crate::group::conj::elem_conj_canon(&self.a.mul(&self.b).expect("same spec")).0
    }

    pub fn display(&self) -> WedgeDisplay<'_> {
        WedgeDisplay(self)
    }

    /// Parses `[w1|f^k1, w2|f^k2]`.
    pub fn parse(spec: BundleSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(1, 1, "wedge class must be bracketed"))?;
        let (lhs, rhs) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(1, 1, "wedge class needs two coordinates"))?;
        let parse_side = |side: &str| -> Result<BundleElement> {
            let (word, fiber) = side
                .split_once('|')
                .ok_or_else(|| Error::parse(1, 1, "coordinate must be `word|f^k`"))?;
            let fiber = fiber.trim();
            let k: i64 = fiber
                .strip_prefix("f^")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::parse(1, 1, "fiber part must be `f^k`"))?;
            let w = Word::parse(word.trim(), &spec.surface)?;
            BundleElement::from_word(spec, w, k)
        };
        WedgeClass::new(parse_side(lhs)?, parse_side(rhs)?)
    }
}

impl Ord for WedgeClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.a, &self.b).cmp(&(&other.a, &other.b))
    }
}

impl PartialOrd for WedgeClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WedgeDisplay<'a>(&'a WedgeClass);

impl fmt::Display for WedgeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        let surface = &w.spec().surface;
        write!(
            f,
            "[{}|f^{}, {}|f^{}]",
            w.a.base().display(surface),
            w.a.fiber(),
            w.b.base().display(surface),
            w.b.fiber()
        )
    }
}

/// Pair of base-group elements modulo simultaneous conjugation and swap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseWedgeClass {
    surface: SurfaceSpec,
    a: Word,
    b: Word,
}

impl BaseWedgeClass {
    pub fn new(surface: SurfaceSpec, x: Word, y: Word) -> Result<Self> {
        x.validate(&surface)?;
        y.validate(&surface)?;
        let spec = BundleSpec { surface, euler: 0 };
        let ex = BundleElement::from_word(spec, x, 0)?;
        let ey = BundleElement::from_word(spec, y, 0)?;
        let w = WedgeClass::new(ex, ey)?;
        Ok(BaseWedgeClass {
            surface,
            a: w.a.base().clone(),
            b: w.b.base().clone(),
        })
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn first(&self) -> &Word {
        &self.a
    }

    pub fn second(&self) -> &Word {
        &self.b
    }

    /// Whether the two coordinates can be made equal by a simultaneous
    /// conjugation; this is case (a) of the fiber ordering.
    pub fn coordinates_equalizable(&self) -> bool {
        self.a == self.b
    }

    /// Canonical form of the ordered base pair under simultaneous conjugation
    /// only (no swap); used as the tie-break that distinguishes one loop in
    /// case (b).
    pub fn ordered_canon(surface: &SurfaceSpec, x: &Word, y: &Word) -> (Word, Word) {
        let spec = BundleSpec { surface: *surface, euler: 0 };
        let ex = BundleElement::from_word(spec, x.clone(), 0).expect("valid");
        let ey = BundleElement::from_word(spec, y.clone(), 0).expect("valid");
        let (a, b) = ordered_pair_canon(&ex, &ey);
        (a.base().clone(), b.base().clone())
    }

    pub fn display(&self) -> BaseWedgeDisplay<'_> {
        BaseWedgeDisplay(self)
    }
}

pub struct BaseWedgeDisplay<'a>(&'a BaseWedgeClass);

impl fmt::Display for BaseWedgeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        write!(
            f,
            "[{}, {}]",
            w.a.display(&w.surface),
            w.b.display(&w.surface)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::context::{BundleSpec, SurfaceSpec};

    fn free2() -> BundleSpec {
        BundleSpec::product(SurfaceSpec::new(1, 1).unwrap())
    }

    fn el(spec: BundleSpec, s: &str) -> BundleElement {
        BundleElement::parse(spec, s).unwrap()
    }

    #[test]
    fn swap_symmetry() {
        let spec = free2();
        let x = el(spec, "a1");
        let one = BundleElement::identity(spec);
        let w1 = WedgeClass::new(x.clone(), one.clone()).unwrap();
        let w2 = WedgeClass::new(one, x).unwrap();
        assert_eq!(w1, w2);
    }

    #[test]
    fn simultaneous_conjugation_symmetry() {
        let spec = free2();
        let w1 = WedgeClass::new(el(spec, "a1 b1"), el(spec, "b1")).unwrap();
        // Conjugate both coordinates by b1.
        let w2 = WedgeClass::new(el(spec, "b1 a1 b1 b1^-1"), el(spec, "b1")).unwrap();
        assert_eq!(w1, w2);
    }

    #[test]
    fn asymmetric_conjugation_changes_class() {
        let spec = free2();
        let w1 = WedgeClass::new(el(spec, "a1"), el(spec, "b1")).unwrap();
        let w2 = WedgeClass::new(el(spec, "a1"), el(spec, "b1^-1")).unwrap();
        assert_ne!(w1, w2);
    }

    #[test]
    fn distinct_orbits_by_brute_force() {
        // (a, b) vs (a, b^-1): no simultaneous conjugator of length <= 4
        // (with or without swap) relates them.
        let spec = free2();
        let s = spec.surface;
        let letters: Vec<crate::group::word::Letter> = (0..2)
            .flat_map(|g| [false, true].map(|inv| crate::group::word::Letter::new(g, inv)))
            .collect();
        let mut conjugators: Vec<Word> = vec![Word::identity()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &conjugators {
                for &l in &letters {
                    let mut v = w.0.clone();
                    v.push(l);
                    let r = Word::reduce(v);
                    if r.len() == w.len() + 1 && !conjugators.contains(&r) && !next.contains(&r) {
                        next.push(r);
                    }
                }
            }
            conjugators.extend(next);
        }
        let a = Word::parse("a1", &s).unwrap();
        let b = Word::parse("b1", &s).unwrap();
        let bi = Word::parse("b1^-1", &s).unwrap();
        let mut related = false;
        for g in &conjugators {
            let ca = Word::reduce(g.conjugate(&a).0);
            let cb = Word::reduce(g.conjugate(&b).0);
            if (ca == a && cb == bi) || (ca == bi && cb == a) {
                related = true;
            }
        }
        assert!(!related);
        let w1 = WedgeClass::new(el(spec, "a1"), el(spec, "b1")).unwrap();
        let w2 = WedgeClass::new(el(spec, "a1"), el(spec, "b1^-1")).unwrap();
        assert_ne!(w1, w2);
    }

    #[test]
    fn canonicalization_sound_under_random_conjugation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let specs = [
            free2(),
            BundleSpec::new(SurfaceSpec::new(2, 0).unwrap(), -2).unwrap(),
            BundleSpec::product(SurfaceSpec::new(1, 0).unwrap()),
        ];
        for spec in specs {
            let n_gens = spec.surface.alphabet_size();
            for _ in 0..60 {
                let rand_word = |rng: &mut rand_chacha::ChaCha8Rng, len: usize| -> Word {
                    Word::reduce((0..len).map(|_| {
                        crate::group::word::Letter::new(rng.gen_range(0..n_gens), rng.gen())
                    }))
                };
                let (lx, ly, ld) =
                    (rng.gen_range(0..5), rng.gen_range(0..5), rng.gen_range(0..4));
                let (fx, fy) = (rng.gen_range(-2..3), rng.gen_range(-2..3));
                let x = BundleElement::from_word(spec, rand_word(&mut rng, lx), fx).unwrap();
                let y = BundleElement::from_word(spec, rand_word(&mut rng, ly), fy).unwrap();
                let w1 = WedgeClass::new(x.clone(), y.clone()).unwrap();
                let delta = rand_word(&mut rng, ld);
                let (xc, yc) = (x.conj_by_base(&delta), y.conj_by_base(&delta));
                let w2 = if rng.gen() {
                    WedgeClass::new(xc, yc).unwrap()
                } else {
                    WedgeClass::new(yc, xc).unwrap()
                };
                assert_eq!(w1, w2, "orbit not collapsed in {spec}");
            }
        }
    }

    #[test]
    fn shift_identities() {
        let spec = free2();
        let w = WedgeClass::new(el(spec, "a1"), el(spec, "b1")).unwrap();
        assert_eq!(w.shift(0, 0), w);
        assert_eq!(w.shift(1, -1).shift(-1, 1), w);
        let shifted = w.shift(1, -1);
        assert_eq!(shifted.first().fiber() - w.first().fiber(), 1);
        assert_eq!(shifted.second().fiber() - w.second().fiber(), -1);
    }

    #[test]
    fn shift_action_on_distinct_bases() {
        let spec = free2();
        let w = WedgeClass::new(el(spec, "a1"), el(spec, "b1 a1")).unwrap();
        for (i, j, k, l) in [(1, -1, 2, 0), (0, 3, -1, -1), (2, 2, -2, -2)] {
            assert_eq!(w.shift(i, j).shift(k, l), w.shift(i + k, j + l));
        }
    }

    #[test]
    fn projection_drops_fibers() {
        let spec = free2();
        let w = WedgeClass::new(el(spec, "a1 f^3"), el(spec, "b1 f^-2")).unwrap();
        let p = w.project_to_base();
        let q = w.shift(5, -1).project_to_base();
        assert_eq!(p, q);
        let s = spec.surface;
        let expected = BaseWedgeClass::new(
            s,
            Word::parse("a1", &s).unwrap(),
            Word::parse("b1", &s).unwrap(),
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn fiber_pair_projects_trivially() {
        let spec = free2();
        let w = WedgeClass::new(el(spec, "f"), BundleElement::identity(spec)).unwrap();
        let p = w.project_to_base();
        assert!(p.first().is_identity() && p.second().is_identity());
    }

    #[test]
    fn display_parse_round_trip() {
        let spec = BundleSpec::new(SurfaceSpec::new(2, 0).unwrap(), -2).unwrap();
        let w = WedgeClass::new(el(spec, "a1 b1^-1 f^2"), el(spec, "a2 f^-1")).unwrap();
        let s = w.display().to_string();
        let back = WedgeClass::parse(spec, &s).unwrap();
        assert_eq!(back, w);
    }
}
