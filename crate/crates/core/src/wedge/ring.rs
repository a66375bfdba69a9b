//! Formal finite integer combinations of wedge classes: the value group of
//! the invariant. Zero coefficients are never stored, so equality is exact
//! multiset equality and the sorted text form is a stable equality key.

use super::class::WedgeClass;
use crate::error::{Error, Result};
use crate::group::context::BundleSpec;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    spec: BundleSpec,
    terms: BTreeMap<WedgeClass, i64>,
}

impl InvariantValue {
    pub fn zero(spec: BundleSpec) -> Self {
        InvariantValue { spec, terms: BTreeMap::new() }
    }

    pub fn term(class: WedgeClass, coeff: i64) -> Self {
        let mut v = InvariantValue::zero(*class.spec());
        v.add_term(class, coeff);
        v
    }

    pub fn spec(&self) -> &BundleSpec {
        &self.spec
    }

    pub fn add_term(&mut self, class: WedgeClass, coeff: i64) {
        debug_assert_eq!(class.spec(), &self.spec);
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(class) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, class: &WedgeClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeClass, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, by: i64) -> Self {
        if by == 0 {
            return InvariantValue::zero(self.spec);
        }
        InvariantValue {
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * by)).collect(),
        }
    }

    pub fn checked_combine(&self, other: &Self, sign: i64) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::ContextMismatch("invariant values in different bundles".into()));
        }
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_term(k.clone(), sign * v);
        }
        Ok(out)
    }
}

impl Add for &InvariantValue {
    type Output = InvariantValue;
    fn add(self, rhs: &InvariantValue) -> InvariantValue {
        self.checked_combine(rhs, 1).expect("context mismatch in add")
    }
}

impl Sub for &InvariantValue {
    type Output = InvariantValue;
    fn sub(self, rhs: &InvariantValue) -> InvariantValue {
        self.checked_combine(rhs, -1).expect("context mismatch in sub")
    }
}

impl Neg for &InvariantValue {
    type Output = InvariantValue;
    fn neg(self) -> InvariantValue {
        self.scaled(-1)
    }
}

impl Mul<i64> for &InvariantValue {
    type Output = InvariantValue;
    fn mul(self, rhs: i64) -> InvariantValue {
        self.scaled(rhs)
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (class, coeff) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{} * {}", coeff, class.display())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::context::SurfaceSpec;
    use crate::group::elem::BundleElement;

    fn spec() -> BundleSpec {
        BundleSpec::product(SurfaceSpec::new(0, 2).unwrap())
    }

    fn cls(s: &str, t: &str) -> WedgeClass {
        WedgeClass::new(
            BundleElement::parse(spec(), s).unwrap(),
            BundleElement::parse(spec(), t).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn zero_coefficients_drop() {
        let mut v = InvariantValue::zero(spec());
        let c = cls("c1", "1");
        v.add_term(c.clone(), 2);
        v.add_term(c.clone(), -2);
        assert!(v.is_zero());
        assert_eq!(v.to_string(), "0");
    }

    #[test]
    fn addition_is_coefficientwise() {
        let a = InvariantValue::term(cls("c1", "1"), 2);
        let b = InvariantValue::term(cls("c1", "1"), 3);
        let c = &a + &b;
        assert_eq!(c.coeff(&cls("c1", "1")), 5);
        assert_eq!((&a - &a).is_zero(), true);
    }

    #[test]
    fn display_is_sorted_and_stable() {
        let mut v = InvariantValue::zero(spec());
        v.add_term(cls("c1", "f"), -4);
        v.add_term(cls("1", "1"), 4);
        let s1 = v.to_string();
        let mut w = InvariantValue::zero(spec());
        w.add_term(cls("1", "1"), 4);
        w.add_term(cls("c1", "f"), -4);
        assert_eq!(s1, w.to_string());
        assert!(s1.lines().count() == 2);
    }
}
