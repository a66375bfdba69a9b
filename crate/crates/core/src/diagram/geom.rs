//! Exact rational plane geometry: points, directions, proper segment
//! intersection, and reference-ray crossing counts for turning numbers.
//! Everything is over `BigRational`, so genericity decisions are exact.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().ok()?;
            let d = d.parse::<BigInt>().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Self {
        Pt { x, y }
    }

    pub fn of(x: i64, y: i64) -> Self {
        Pt::new(rat(x), rat(y))
    }

    pub fn to(&self, other: &Pt) -> Dir {
        Dir { x: &other.x - &self.x, y: &other.y - &self.y }
    }

    pub fn lerp(&self, other: &Pt, t: &Rat) -> Pt {
        Pt {
            x: &self.x + t * (&other.x - &self.x),
            y: &self.y + t * (&other.y - &self.y),
        }
    }
}

impl fmt::Display for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rat(&self.x), fmt_rat(&self.y))
    }
}

/// A nonzero direction (not normalized).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dir {
    pub x: Rat,
    pub y: Rat,
}

impl Dir {
    pub fn of(x: i64, y: i64) -> Self {
        Dir { x: rat(x), y: rat(y) }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, other: &Dir) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Dir) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn neg(&self) -> Dir {
        Dir { x: -self.x.clone(), y: -self.y.clone() }
    }
}

/// Exact rational rotation (cos, sin with cos^2 + sin^2 = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rot {
    pub c: Rat,
    pub s: Rat,
}

impl Rot {
    pub fn identity() -> Self {
        Rot { c: rat(1), s: rat(0) }
    }

    /// The rotation taking direction `from` to direction `to`; requires the
    /// two to have equal (rational) norms times a rational scale, which holds
    /// whenever both squared norms are perfect squares of rationals.
    pub fn between(from: &Dir, to: &Dir) -> Option<Rot> {
        let nf = sqrt_rat(&from.dot(from))?;
        let nt = sqrt_rat(&to.dot(to))?;
        let denom = nf * nt;
        let c = from.dot(to) / denom.clone();
        let s = from.cross(to) / denom;
        debug_assert!((&c * &c + &s * &s).is_one());
        Some(Rot { c, s })
    }

    pub fn apply(&self, d: &Dir) -> Dir {
        Dir {
            x: &self.c * &d.x - &self.s * &d.y,
            y: &self.s * &d.x + &self.c * &d.y,
        }
    }

    pub fn inverse(&self) -> Rot {
        Rot { c: self.c.clone(), s: -self.s.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_one() && self.s.is_zero()
    }

    /// |angle| < pi, i.e. not a half turn.
    pub fn is_proper(&self) -> bool {
        !(self.s.is_zero() && self.c < Rat::zero())
    }
}

/// Exact square root of a rational, when it is a perfect square.
fn sqrt_rat(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Signed count of passages of the short rotation arc from `u` to `v`
/// through the east direction `(1, 0)`, with the half-open convention that
/// the arc owns its endpoint `v` but not `u`. Requires `u`, `v` nonzero and
/// not anti-parallel.
pub fn east_crossings(u: &Dir, v: &Dir) -> i64 {
    let zero = Rat::zero();
    let c = u.cross(v);
    if c > zero {
        let inside = u.y < zero && v.y > zero;
        let ends_east = v.y.is_zero() && v.x > zero;
        i64::from(inside || ends_east)
    } else if c < zero {
        let inside = v.y < zero && u.y > zero;
        let ends_east = u.y.is_zero() && u.x > zero;
        -i64::from(inside || ends_east)
    } else {
        debug_assert!(u.dot(v) > zero, "anti-parallel corner must be rejected earlier");
        0
    }
}

/// Valid PL corner: both directions nonzero and not anti-parallel.
pub fn corner_ok(u: &Dir, v: &Dir) -> bool {
    if u.is_zero() || v.is_zero() {
        return false;
    }
    !(u.cross(v).is_zero() && u.dot(v).is_negative())
}

/// Result of intersecting two closed segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegX {
    Disjoint,
    /// Transversal crossing interior to both segments, with parameters on
    /// each segment in (0, 1).
    Proper { s: Rat, t: Rat, point: Pt },
    /// Any non-generic contact: endpoint touching, tangency, overlap.
    Touching,
}

fn on_segment(p: &Pt, a: &Pt, b: &Pt) -> bool {
    let ab = a.to(b);
    let ap = a.to(p);
    if !ab.cross(&ap).is_zero() {
        return false;
    }
    let t_num = ab.dot(&ap);
    let len2 = ab.dot(&ab);
    !t_num.is_negative() && t_num <= len2
}

pub fn seg_intersect(a1: &Pt, a2: &Pt, b1: &Pt, b2: &Pt) -> SegX {
    let av = a1.to(a2);
    let bv = b1.to(b2);
    let d1 = av.cross(&a1.to(b1));
    let d2 = av.cross(&a1.to(b2));
    let d3 = bv.cross(&b1.to(a1));
    let d4 = bv.cross(&b1.to(a2));
    let zero = Rat::zero();
    let strict = |p: &Rat, q: &Rat| (p > &zero && q < &zero) || (p < &zero && q > &zero);
    if strict(&d1, &d2) && strict(&d3, &d4) {
        let denom = av.cross(&bv);
        let s = a1.to(b1).cross(&bv) / denom.clone();
        let t = a1.to(b1).cross(&av) / denom;
        let point = a1.lerp(a2, &s);
        return SegX::Proper { s, t, point };
    }
    // Non-transversal contact detection.
    for (p, x, y) in [(b1, a1, a2), (b2, a1, a2), (a1, b1, b2), (a2, b1, b2)] {
        if on_segment(p, x, y) {
            return SegX::Touching;
        }
    }
    SegX::Disjoint
}

/// Fractional part in [0, 1).
pub fn wrap_unit(r: &Rat) -> Rat {
    r - r.floor()
}

/// Signed shortest angular difference `to - from` of two points of the unit
/// circle R/Z, in (-1/2, 1/2]; errors when the gap is exactly a half turn.
pub fn wrapped_gap(from: &Rat, to: &Rat) -> Result<Rat> {
    let raw = to - from;
    let mut d = wrap_unit(&raw);
    let half = rat_frac(1, 2);
    if d == half {
        return Err(Error::Genericity(
            "fiber angles differ by exactly a half turn; interpolation ambiguous".into(),
        ));
    }
    if d > half {
        d -= Rat::one();
    }
    Ok(d)
}

/// Number of signed crossings of the cut angle 0 by the linear path from
/// `theta` (in [0,1)) moving by `delta` (in (-1/2, 1/2)); lands in -1..=1.
pub fn cut_crossings(theta: &Rat, delta: &Rat) -> i64 {
    use num::ToPrimitive;
    debug_assert!(!theta.is_negative() && theta < &Rat::one());
    (theta + delta).floor().to_integer().to_i64().expect("cut count fits i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winding_of_square_loop() {
        // Direction path of a ccw square: E, N, W, S, back to E: one full turn.
        let dirs = [Dir::of(1, 0), Dir::of(0, 1), Dir::of(-1, 0), Dir::of(0, -1)];
        let mut total = 0;
        for i in 0..4 {
            total += east_crossings(&dirs[i], &dirs[(i + 1) % 4]);
        }
        assert_eq!(total, 1);
        // Clockwise: -1.
        let mut total = 0;
        for i in (0..4).rev() {
            total += east_crossings(&dirs[(i + 1) % 4], &dirs[i]);
        }
        assert_eq!(total, -1);
    }

    #[test]
    fn east_crossing_half_open() {
        // Arc ending exactly east counts; arc starting exactly east does not.
        let se = Dir::of(1, -1);
        let e = Dir::of(1, 0);
        let ne = Dir::of(1, 1);
        assert_eq!(east_crossings(&se, &e), 1);
        assert_eq!(east_crossings(&e, &ne), 0);
        assert_eq!(east_crossings(&se, &ne), 1);
        assert_eq!(east_crossings(&ne, &se), -1);
        assert_eq!(east_crossings(&ne, &e), 0);
        assert_eq!(east_crossings(&e, &se), -1);
    }

    #[test]
    fn proper_intersection_params() {
        let a1 = Pt::of(0, 0);
        let a2 = Pt::of(2, 2);
        let b1 = Pt::of(0, 2);
        let b2 = Pt::of(2, 0);
        match seg_intersect(&a1, &a2, &b1, &b2) {
            SegX::Proper { s, t, point } => {
                assert_eq!(s, rat_frac(1, 2));
                assert_eq!(t, rat_frac(1, 2));
                assert_eq!(point, Pt::of(1, 1));
            }
            other => panic!("expected proper intersection, got {other:?}"),
        }
    }

    #[test]
    fn touching_is_flagged() {
        let a1 = Pt::of(0, 0);
        let a2 = Pt::of(2, 0);
        let b1 = Pt::of(1, 0);
        let b2 = Pt::of(1, 5);
        assert_eq!(seg_intersect(&a1, &a2, &b1, &b2), SegX::Touching);
        let c1 = Pt::of(0, 1);
        let c2 = Pt::of(5, 1);
        assert_eq!(seg_intersect(&a1, &a2, &c1, &c2), SegX::Disjoint);
    }

    #[test]
    fn cut_crossing_rules() {
        // Upward through the cut.
        assert_eq!(cut_crossings(&rat_frac(9, 10), &rat_frac(2, 10)), 1);
        // Downward through the cut.
        assert_eq!(cut_crossings(&rat_frac(1, 10), &rat_frac(-2, 10)), -1);
        // No crossing.
        assert_eq!(cut_crossings(&rat_frac(5, 10), &rat_frac(3, 10)), 0);
        // Landing exactly on the cut from below counts as a crossing.
        assert_eq!(cut_crossings(&rat_frac(8, 10), &rat_frac(2, 10)), 1);
        // Starting at the cut going up: no crossing.
        assert_eq!(cut_crossings(&rat(0), &rat_frac(2, 10)), 0);
        // Starting at the cut going down: one negative crossing.
        assert_eq!(cut_crossings(&rat(0), &rat_frac(-2, 10)), -1);
    }

    #[test]
    fn rotation_between_pythagorean_dirs() {
        let u = Dir::of(1, 0);
        let v = Dir::of(3, -4);
        let r = Rot::between(&u, &v).unwrap();
        assert_eq!(r.apply(&u), Dir { x: rat_frac(3, 5), y: rat_frac(-4, 5) });
        assert!(r.is_proper());
        let back = r.inverse().apply(&r.apply(&Dir::of(7, 2)));
        assert_eq!(back, Dir::of(7, 2));
    }

    #[test]
    fn wrapped_gap_bounds() {
        assert_eq!(wrapped_gap(&rat_frac(1, 10), &rat_frac(3, 10)).unwrap(), rat_frac(1, 5));
        assert_eq!(wrapped_gap(&rat_frac(9, 10), &rat_frac(1, 10)).unwrap(), rat_frac(1, 5));
        assert_eq!(wrapped_gap(&rat_frac(1, 10), &rat_frac(9, 10)).unwrap(), rat_frac(-1, 5));
        assert!(wrapped_gap(&rat(0), &rat_frac(1, 2)).is_err());
    }
}
