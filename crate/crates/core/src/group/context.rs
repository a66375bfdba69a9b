//! Surface and bundle contexts.
//!
//! A surface is given by genus and puncture count, with `F != S^2` enforced at
//! construction. The fundamental group is free for punctured surfaces, `Z^2`
//! for the closed torus and a one-relator surface group for closed genus >= 2.
//! A bundle context adds the Euler number of the oriented circle bundle; the
//! group `pi_1(M)` is the central extension generated by the base alphabet
//! together with the fiber class `f`, subject to `prod [a_i,b_i] = f^e` in the
//! closed case.

use crate::error::{Error, Result};
use std::fmt;

/// Classification of the base surface, driving the word-problem algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Punctured surface: free fundamental group.
    Open,
    /// Closed torus: `Z^2`.
    ClosedTorus,
    /// Closed genus >= 2: one-relator small-cancellation group.
    ClosedHyperbolic,
}

/// An oriented surface `F != S^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSpec {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        if genus == 0 && punctures == 0 {
            return Err(Error::Context("the sphere (genus 0, no punctures) is excluded".into()));
        }
        Ok(SurfaceSpec { genus, punctures })
    }

    pub fn is_closed(&self) -> bool {
        self.punctures == 0
    }

    pub fn kind(&self) -> SurfaceKind {
        if !self.is_closed() {
            SurfaceKind::Open
        } else if self.genus == 1 {
            SurfaceKind::ClosedTorus
        } else {
            SurfaceKind::ClosedHyperbolic
        }
    }

    /// Number of generators in the base alphabet.
    ///
    /// Closed: `a_1,b_1,...,a_g,b_g`. Open: the same handle generators plus
    /// one generator per puncture beyond the first, so the group is free of
    /// rank `2g + p - 1`.
    pub fn alphabet_size(&self) -> usize {
        let handles = 2 * self.genus as usize;
        if self.is_closed() {
            handles
        } else {
            handles + self.punctures as usize - 1
        }
    }

    /// Display name of generator index `i`.
    pub fn gen_name(&self, i: usize) -> String {
        let handles = 2 * self.genus as usize;
        if i < handles {
            if i % 2 == 0 {
                format!("a{}", i / 2 + 1)
            } else {
                format!("b{}", i / 2 + 1)
            }
        } else {
            format!("c{}", i - handles + 1)
        }
    }

    /// Inverse of `gen_name`. Returns None for names outside the alphabet.
    pub fn parse_gen(&self, name: &str) -> Option<usize> {
        let (kind, idx) = name.split_at(1);
        let idx: usize = idx.parse().ok()?;
        if idx == 0 {
            return None;
        }
        let handles = 2 * self.genus as usize;
        let i = match kind {
            "a" => (idx - 1) * 2,
            "b" => (idx - 1) * 2 + 1,
            "c" => handles + idx - 1,
            _ => return None,
        };
        if kind != "c" && i >= handles {
            return None;
        }
        if i < self.alphabet_size() {
            Some(i)
        } else {
            None
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surface {} {}", self.genus, self.punctures)
    }
}

/// An oriented circle bundle `p: M -> F` with base `F` and Euler number `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleSpec {
    pub surface: SurfaceSpec,
    pub euler: i64,
}

impl BundleSpec {
    pub fn new(surface: SurfaceSpec, euler: i64) -> Result<Self> {
        if !surface.is_closed() && euler != 0 {
            return Err(Error::Context(
                "circle bundles over punctured surfaces are trivial; euler must be 0".into(),
            ));
        }
        if surface.kind() == SurfaceKind::ClosedTorus && euler != 0 {
            return Err(Error::Context(
                "only the trivial bundle over the closed torus is supported".into(),
            ));
        }
        Ok(BundleSpec { surface, euler })
    }

    pub fn product(surface: SurfaceSpec) -> Self {
        BundleSpec { surface, euler: 0 }
    }

    /// The spherized tangent bundle context of the same base surface.
    ///
    /// Euler number `2 - 2g` for a closed base, `0` for an open one. The sign
    /// is pinned by the calibration convention: a small positively turning
    /// embedded circle lifts to the fiber class `f`.
    pub fn spherized_tangent(surface: SurfaceSpec) -> Self {
        let euler = if surface.is_closed() { 2 - 2 * surface.genus as i64 } else { 0 };
        BundleSpec { surface, euler }
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, euler {}", self.surface, self.euler)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_rejected() {
        assert!(SurfaceSpec::new(0, 0).is_err());
        assert!(SurfaceSpec::new(0, 1).is_ok());
        assert!(SurfaceSpec::new(2, 0).is_ok());
    }

    #[test]
    fn alphabet_sizes() {
        assert_eq!(SurfaceSpec::new(0, 2).unwrap().alphabet_size(), 1);
        assert_eq!(SurfaceSpec::new(1, 1).unwrap().alphabet_size(), 2);
        assert_eq!(SurfaceSpec::new(2, 0).unwrap().alphabet_size(), 4);
        assert_eq!(SurfaceSpec::new(0, 1).unwrap().alphabet_size(), 0);
        assert_eq!(SurfaceSpec::new(1, 3).unwrap().alphabet_size(), 4);
    }

    #[test]
    fn gen_names_round_trip() {
        let s = SurfaceSpec::new(2, 3).unwrap();
        for i in 0..s.alphabet_size() {
            let name = s.gen_name(i);
            assert_eq!(s.parse_gen(&name), Some(i), "{name}");
        }
        assert_eq!(s.parse_gen("q1"), None);
        assert_eq!(s.parse_gen("c3"), None);
        assert_eq!(s.parse_gen("a0"), None);
        assert_eq!(s.parse_gen("a3"), None);
    }

    #[test]
    fn bundle_constraints() {
        let open = SurfaceSpec::new(1, 1).unwrap();
        assert!(BundleSpec::new(open, 1).is_err());
        let torus = SurfaceSpec::new(1, 0).unwrap();
        assert!(BundleSpec::new(torus, -1).is_err());
        assert!(BundleSpec::new(torus, 0).is_ok());
        let genus2 = SurfaceSpec::new(2, 0).unwrap();
        assert!(BundleSpec::new(genus2, -2).is_ok());
        assert_eq!(BundleSpec::spherized_tangent(genus2).euler, -2);
        assert_eq!(BundleSpec::spherized_tangent(torus).euler, 0);
        assert_eq!(BundleSpec::spherized_tangent(open).euler, 0);
    }
}
