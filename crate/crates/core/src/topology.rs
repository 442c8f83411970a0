//! Supratopologies: union-closed families viewed as generalized topologies.
//!
//! A supratopology here is a union-closed family containing both its universe
//! and the empty set; the members are the open sets, their complements the
//! closed sets. Intersections of open sets need not be open, which is what
//! separates this setting from ordinary finite topologies.

use crate::error::{Error, Result};
use crate::family::{Element, SetFamily, SetMask};
use std::collections::HashSet;

/// A validated supratopology with per-point caches.
#[derive(Clone, PartialEq, Eq)]
pub struct Supratopology {
    family: SetFamily,
    elements: Vec<Element>,
    avoiding: Vec<SetMask>, // per element of `elements`
    members: HashSet<u64>,
}

impl Supratopology {
    /// Validates that the family is union-closed and contains the empty set.
    /// The universe itself is then automatically a member.
    pub fn new(family: SetFamily) -> Result<Supratopology> {
        if !family.has_empty_set() {
            return Err(Error::MissingEmptySet);
        }
        family.ensure_union_closed()?;
        debug_assert!(family.contains(family.universe()));
        let elements = family.universe_elements();
        let avoiding = elements
            .iter()
            .map(|e| family.avoiding_union_unchecked(*e))
            .collect();
        let members = family.mask_set();
        Ok(Supratopology {
            family,
            elements,
            avoiding,
            members,
        })
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn universe(&self) -> SetMask {
        self.family.universe()
    }

    pub fn point_count(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn is_open(&self, s: SetMask) -> bool {
        self.members.contains(&s.raw())
    }

    pub fn is_closed(&self, s: SetMask) -> bool {
        self.is_open(self.universe().difference(s))
    }

    /// All closed sets, i.e. complements of members.
    pub fn closed_sets(&self) -> Vec<SetMask> {
        self.family
            .sets()
            .iter()
            .map(|o| self.universe().difference(*o))
            .collect()
    }

    fn ensure_point(&self, x: Element) -> Result<()> {
        if self.universe().contains(x) {
            Ok(())
        } else {
            Err(Error::PointNotInUniverse { point: x })
        }
    }

    fn ensure_subset(&self, a: SetMask) -> Result<()> {
        if a.is_subset_of(self.universe()) {
            Ok(())
        } else {
            Err(Error::SetOutsideUniverse { set: a })
        }
    }

    fn rank(&self, x: Element) -> usize {
        self.elements.binary_search(&x).expect("point in universe")
    }

    /// Biggest open set contained in `a`.
    pub fn interior(&self, a: SetMask) -> Result<SetMask> {
        self.ensure_subset(a)?;
        Ok(self
            .family
            .sets()
            .iter()
            .filter(|o| o.is_subset_of(a))
            .fold(SetMask::EMPTY, |acc, o| acc.union(*o)))
    }

    /// Smallest closed set containing `a`, i.e. the complement of the
    /// interior of the complement.
    pub fn closure(&self, a: SetMask) -> Result<SetMask> {
        let x = self.universe();
        Ok(x.difference(self.interior(x.difference(a))?))
    }

    /// Union of all open sets avoiding `x`.
    pub fn avoiding_union(&self, x: Element) -> Result<SetMask> {
        self.ensure_point(x)?;
        Ok(self.avoiding[self.rank(x)])
    }

    pub(crate) fn avoiding_union_fast(&self, x: Element) -> SetMask {
        self.avoiding[self.rank(x)]
    }

    /// Closure of the singleton `{x}`: the points whose every neighborhood
    /// contains `x`.
    pub fn point_closure(&self, x: Element) -> Result<SetMask> {
        self.ensure_point(x)?;
        Ok(self.universe().difference(self.avoiding_union_fast(x)))
    }

    /// Point closure minus the point itself.
    pub fn shadow(&self, x: Element) -> Result<SetMask> {
        Ok(self.point_closure(x)?.remove(x))
    }

    /// Points `y` such that every open set containing `x` also contains `y`;
    /// the elements dominating `x`. Equivalently, `x` does not lie in the
    /// avoiding union of `y`.
    pub fn kernel(&self, x: Element) -> Result<SetMask> {
        self.ensure_point(x)?;
        let mut out = SetMask::EMPTY;
        for &y in &self.elements {
            if !self.avoiding_union_fast(y).contains(x) {
                out = out.insert(y);
            }
        }
        Ok(out)
    }

    /// Kernel minus the point itself.
    pub fn shell(&self, x: Element) -> Result<SetMask> {
        Ok(self.kernel(x)?.remove(x))
    }

    /// Weak separation: some open set contains all of `a` and misses `b`.
    ///
    /// Since the family is union-closed, the union of all opens avoiding `b`
    /// is itself open and is the largest candidate, so a single containment
    /// test decides.
    pub fn weakly_separated(&self, a: SetMask, b: SetMask) -> bool {
        let avoiding_b = self
            .family
            .sets()
            .iter()
            .filter(|o| !o.intersects(b))
            .fold(SetMask::EMPTY, |acc, o| acc.union(*o));
        a.is_subset_of(avoiding_b)
    }
}

impl std::fmt::Debug for Supratopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Supratopology({:?})", self.family)
    }
}

/// Weak separation by direct scan over the members; works for arbitrary
/// families, union-closed or not.
pub fn weakly_separated_scan(family: &SetFamily, a: SetMask, b: SetMask) -> bool {
    family
        .sets()
        .iter()
        .any(|o| a.is_subset_of(*o) && !o.intersects(b))
}
