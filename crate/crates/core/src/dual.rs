//! Dual families via the index transpose.
//!
//! An [`IndexedFamily`] is an ordered list of distinct non-empty sets. Its
//! transpose maps the j-th smallest universe element to the set of positions
//! of the items containing j; transposing twice recovers the original items
//! when the universe is compact (`1..=m`), since position and element swap
//! roles. The dual of a family is the union closure of the transpose of its
//! non-empty members.

use crate::error::{Error, Result};
use crate::family::{close_under_union, Element, SetFamily, SetMask};

/// An explicitly ordered list of distinct non-empty sets; the carrier of the
/// transpose operator, where item positions matter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexedFamily {
    universe: SetMask,
    items: Vec<SetMask>,
}

impl IndexedFamily {
    /// Wraps an ordered list of sets. Items must be non-empty and pairwise
    /// distinct; the universe is their union.
    pub fn new(items: Vec<SetMask>) -> Result<IndexedFamily> {
        let mut seen = std::collections::HashSet::new();
        for it in &items {
            if it.is_empty() {
                return Err(Error::SetNotInFamily { set: *it });
            }
            if !seen.insert(it.raw()) {
                return Err(Error::IndexingMismatch);
            }
        }
        let universe = items.iter().fold(SetMask::EMPTY, |acc, s| acc.union(*s));
        Ok(IndexedFamily { universe, items })
    }

    /// Drops the empty set and orders the rest canonically (cardinality,
    /// then mask value).
    pub fn index_canonically(family: &SetFamily) -> IndexedFamily {
        let items: Vec<SetMask> = family
            .sets()
            .iter()
            .copied()
            .filter(|s| !s.is_empty())
            .collect();
        let universe = items.iter().fold(SetMask::EMPTY, |acc, s| acc.union(*s));
        IndexedFamily { universe, items }
    }

    pub fn items(&self) -> &[SetMask] {
        &self.items
    }

    pub fn universe(&self) -> SetMask {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The member sets as an unordered family.
    pub fn to_family(&self) -> SetFamily {
        SetFamily::new(self.items.iter().copied())
    }

    /// Positions (1-based) of the items containing `j`.
    fn positions_containing(&self, j: Element) -> SetMask {
        let mut out = SetMask::EMPTY;
        for (i, item) in self.items.iter().enumerate() {
            if item.contains(j) {
                out = out.insert(Element::new(i as u32 + 1).unwrap());
            }
        }
        out
    }

    /// The transpose: one item per universe element in increasing label
    /// order, each the set of positions of the items containing it.
    ///
    /// Requires a separating source, otherwise two output items would
    /// coincide; the error carries the colliding pair of elements. Applied
    /// twice to a family with compact universe this is the identity.
    pub fn transpose(&self) -> Result<IndexedFamily> {
        if self.items.is_empty() {
            return Err(Error::EmptyIndexedFamily);
        }
        let elems: Vec<Element> = self.universe.elements().collect();
        let mut items = Vec::with_capacity(elems.len());
        let mut seen: std::collections::HashMap<u64, Element> = std::collections::HashMap::new();
        for &j in &elems {
            let t = self.positions_containing(j);
            if let Some(first) = seen.get(&t.raw()) {
                return Err(Error::DuplicateTranspose {
                    first: *first,
                    second: j,
                });
            }
            seen.insert(t.raw(), j);
            items.push(t);
        }
        let universe = items.iter().fold(SetMask::EMPTY, |acc, s| acc.union(*s));
        Ok(IndexedFamily { universe, items })
    }

    /// Like [`IndexedFamily::transpose`] but keeps colliding items; only fit
    /// for feeding a union closure, where duplicates merge harmlessly.
    fn transpose_lossy(&self) -> Vec<SetMask> {
        self.universe
            .elements()
            .map(|j| self.positions_containing(j))
            .collect()
    }

    /// Positions of the items meeting `a`; equals the union of the transpose
    /// items over the elements of `a`.
    pub fn positions_meeting(&self, a: SetMask) -> Result<SetMask> {
        if !a.is_subset_of(self.universe) {
            return Err(Error::SetOutsideUniverse { set: a });
        }
        let mut out = SetMask::EMPTY;
        for (i, item) in self.items.iter().enumerate() {
            if item.intersects(a) {
                out = out.insert(Element::new(i as u32 + 1).unwrap());
            }
        }
        Ok(out)
    }
}

/// How to index the non-empty members before transposing.
#[derive(Clone, Debug)]
pub enum Indexing {
    /// Deterministic order: cardinality, then mask value.
    Canonical,
    /// A caller-supplied order; must list exactly the non-empty members.
    Given(IndexedFamily),
}

/// The dual family: the union closure of the transpose of the non-empty
/// members. Degenerate inputs (no sets, or only the empty set) dualize to
/// `{∅}` so that reductions bottom out.
///
/// For a union-closed input the dual is normalized and has
/// `|family| + 1 - ε` members, where ε is 1 exactly when the empty set is a
/// member; the dual's universe is `1..=s` for `s` non-empty members.
pub fn dual(family: &SetFamily, indexing: Indexing) -> Result<SetFamily> {
    let indexed = match indexing {
        Indexing::Canonical => IndexedFamily::index_canonically(family),
        Indexing::Given(given) => {
            let canonical = IndexedFamily::index_canonically(family);
            let mut a: Vec<u64> = given.items.iter().map(|s| s.raw()).collect();
            let mut b: Vec<u64> = canonical.items.iter().map(|s| s.raw()).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::IndexingMismatch);
            }
            given
        }
    };
    if indexed.is_empty() {
        return Ok(SetFamily::new([SetMask::EMPTY]));
    }
    Ok(close_under_union(&indexed.transpose_lossy()))
}

/// The unique element of a normalized family lying in every non-empty
/// member. Rejects non-normalized input and the 0-normalized family `{∅}`.
pub fn common_element(normalized: &SetFamily) -> Result<Element> {
    normalized.ensure_normalized()?;
    let meet = normalized
        .sets()
        .iter()
        .filter(|s| !s.is_empty())
        .fold(normalized.universe(), |acc, s| acc.intersection(*s));
    match (meet.len(), meet.min_element()) {
        (1, Some(e)) => Ok(e),
        _ => Err(Error::NotNormalized {
            reason: "no unique element common to all non-empty members",
        }),
    }
}

/// Double dual of the irreducibles of a normalized family, with the second
/// transpose applied to the first transpose's own indexing. For a normalized
/// family over a compact universe this reproduces the family exactly, not
/// merely up to isomorphism; a compact universe is therefore required.
pub fn double_dual_irreducibles(normalized: &SetFamily) -> Result<SetFamily> {
    normalized.ensure_normalized()?;
    if !normalized.has_compact_universe() {
        return Err(Error::UniverseNotCompact {
            expected: normalized.universe_size(),
        });
    }
    let irr = normalized.irreducibles()?;
    if irr.is_empty() {
        return Ok(SetFamily::new([SetMask::EMPTY]));
    }
    let indexed = IndexedFamily::new(sorted_canonically(irr))?;
    let once = indexed.transpose()?;
    let twice = once.transpose()?;
    let result = close_under_union(twice.items());
    debug_assert_eq!(&result, normalized);
    Ok(result)
}

pub(crate) fn sorted_canonically(mut sets: Vec<SetMask>) -> Vec<SetMask> {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{power_set, staircase};

    fn m(labels: &[u32]) -> SetMask {
        SetMask::from_labels(labels).unwrap()
    }

    fn fam(sets: &[&[u32]]) -> SetFamily {
        SetFamily::new(sets.iter().map(|s| m(s)))
    }

    fn e(label: u32) -> Element {
        Element::new(label).unwrap()
    }

    fn seven_set_family() -> SetFamily {
        fam(&[&[], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
    }

    fn seven_normalized() -> SetFamily {
        fam(&[
            &[],
            &[1, 4, 6, 7],
            &[2, 5, 6, 7],
            &[3, 4, 5, 6],
            &[1, 2, 4, 5, 6, 7],
            &[1, 3, 4, 5, 6, 7],
            &[2, 3, 4, 5, 6, 7],
            &[1, 2, 3, 4, 5, 6, 7],
        ])
    }

    #[test]
    fn canonical_indexing_of_the_seven_set_family() {
        let h = IndexedFamily::index_canonically(&seven_set_family());
        assert_eq!(
            h.items(),
            &[
                m(&[2]),
                m(&[3]),
                m(&[1, 2]),
                m(&[1, 3]),
                m(&[2, 3]),
                m(&[1, 2, 3])
            ]
        );
        assert!(IndexedFamily::index_canonically(&fam(&[&[]])).is_empty());
        assert_eq!(
            IndexedFamily::index_canonically(&staircase(3).unwrap()).items(),
            &[m(&[1]), m(&[1, 2]), m(&[1, 2, 3])]
        );
    }

    #[test]
    fn transpose_of_the_seven_set_family() {
        let h = IndexedFamily::index_canonically(&seven_set_family());
        let t = h.transpose().unwrap();
        assert_eq!(
            t.items(),
            &[m(&[3, 4, 6]), m(&[1, 3, 5, 6]), m(&[2, 4, 5, 6])]
        );
        // applying the transpose twice recovers the items in order
        let back = t.transpose().unwrap();
        assert_eq!(back.items(), h.items());
    }

    #[test]
    fn transpose_of_irreducibles_in_listed_order() {
        let j =
            IndexedFamily::new(vec![m(&[1, 4, 6, 7]), m(&[2, 5, 6, 7]), m(&[3, 4, 5, 6])]).unwrap();
        let t = j.transpose().unwrap();
        assert_eq!(
            t.items(),
            &[
                m(&[1]),
                m(&[2]),
                m(&[3]),
                m(&[1, 3]),
                m(&[2, 3]),
                m(&[1, 2, 3]),
                m(&[1, 2])
            ]
        );
    }

    #[test]
    fn transpose_rejects_non_separating_sources() {
        let h = IndexedFamily::new(vec![m(&[1, 2]), m(&[1, 2, 3])]).unwrap();
        match h.transpose() {
            Err(Error::DuplicateTranspose { first, second }) => {
                assert_eq!((first, second), (e(1), e(2)));
            }
            other => panic!("expected duplicate transpose error, got {other:?}"),
        }
    }

    #[test]
    fn positions_meeting_examples() {
        let h = IndexedFamily::index_canonically(&seven_set_family());
        assert_eq!(
            h.positions_meeting(m(&[2, 3])).unwrap(),
            m(&[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(h.positions_meeting(SetMask::EMPTY).unwrap(), SetMask::EMPTY);
        assert_eq!(h.positions_meeting(m(&[1])).unwrap(), m(&[3, 4, 6]));
        // position count equals the number of members meeting the set
        let f = seven_set_family();
        let meets = f.restrict(m(&[2, 3]), crate::family::Restriction::Meets);
        assert_eq!(
            h.positions_meeting(m(&[2, 3])).unwrap().len() as usize,
            meets.len()
        );
    }

    #[test]
    fn dual_of_the_seven_set_family() {
        let d = dual(&seven_set_family(), Indexing::Canonical).unwrap();
        let expected = fam(&[
            &[],
            &[3, 4, 6],
            &[1, 3, 5, 6],
            &[2, 4, 5, 6],
            &[1, 3, 4, 5, 6],
            &[2, 3, 4, 5, 6],
            &[1, 2, 3, 4, 5, 6],
        ]);
        assert_eq!(d, expected);
        assert!(d.is_normalized());
        assert_eq!(d.len(), seven_set_family().len() + 1 - 1);
    }

    #[test]
    fn dual_of_staircase() {
        let d = dual(&staircase(3).unwrap(), Indexing::Canonical).unwrap();
        assert_eq!(d, fam(&[&[], &[3], &[2, 3], &[1, 2, 3]]));
        assert!(crate::canonical::isomorphic(&d, &staircase(3).unwrap()));
    }

    #[test]
    fn dual_conventions_for_degenerate_families() {
        assert_eq!(
            dual(&fam(&[&[]]), Indexing::Canonical).unwrap(),
            fam(&[&[]])
        );
        assert_eq!(
            dual(&SetFamily::empty(), Indexing::Canonical).unwrap(),
            fam(&[&[]])
        );
    }

    #[test]
    fn dual_with_given_indexing() {
        let f = seven_set_family();
        let paper_order = IndexedFamily::new(vec![
            m(&[2]),
            m(&[3]),
            m(&[1, 2]),
            m(&[1, 3]),
            m(&[2, 3]),
            m(&[1, 2, 3]),
        ])
        .unwrap();
        let d = dual(&f, Indexing::Given(paper_order)).unwrap();
        assert!(d.is_normalized());
        // wrong item list is rejected
        let wrong = IndexedFamily::new(vec![m(&[2]), m(&[3])]).unwrap();
        assert!(matches!(
            dual(&f, Indexing::Given(wrong)),
            Err(Error::IndexingMismatch)
        ));
    }

    #[test]
    fn dual_size_identity_with_and_without_empty_set() {
        let with_empty = fam(&[&[], &[1], &[1, 2]]);
        let d1 = dual(&with_empty, Indexing::Canonical).unwrap();
        assert_eq!(d1.len(), with_empty.len() + 1 - 1);
        let without_empty = fam(&[&[1], &[1, 2]]);
        let d2 = dual(&without_empty, Indexing::Canonical).unwrap();
        assert_eq!(d2.len(), without_empty.len() + 1);
        assert_eq!(d1, d2);
    }

    #[test]
    fn common_element_examples() {
        let d = dual(&seven_set_family(), Indexing::Canonical).unwrap();
        assert_eq!(common_element(&d).unwrap(), e(6));
        assert_eq!(common_element(&staircase(4).unwrap()).unwrap(), e(1));
        assert_eq!(common_element(&seven_normalized()).unwrap(), e(6));
        assert!(common_element(&fam(&[&[]])).is_err());
        assert!(common_element(&power_set(2).unwrap()).is_err());
    }

    #[test]
    fn double_dual_reproduces_normalized_families_exactly() {
        for n in [
            seven_normalized(),
            staircase(3).unwrap(),
            fam(&[&[], &[1], &[1, 2]]),
            dual(&seven_set_family(), Indexing::Canonical).unwrap(),
        ] {
            assert_eq!(double_dual_irreducibles(&n).unwrap(), n);
        }
    }

    #[test]
    fn double_dual_requires_compact_universe() {
        let shifted = staircase(3)
            .unwrap()
            .relabeled(|x| e(x.label() + 1))
            .unwrap();
        assert!(matches!(
            double_dual_irreducibles(&shifted),
            Err(Error::UniverseNotCompact { .. })
        ));
    }

    #[test]
    fn intermediate_dual_of_seven_normalized_is_power_set() {
        let n = seven_normalized();
        let j = SetFamily::new(n.irreducibles().unwrap());
        let d = dual(&j, Indexing::Canonical).unwrap();
        assert_eq!(d, power_set(3).unwrap());
    }
}
