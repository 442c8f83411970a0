//! Set families over small labeled universes.
//!
//! Elements are integer labels in `1..=64`, member sets are single-word
//! characteristic vectors, and a [`SetFamily`] is a duplicate-free collection
//! of member sets kept in a canonical order. All operations are pure and all
//! values are immutable once built.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;

/// Largest supported element label.
pub const MAX_LABEL: u32 = 64;

/// A universe element, identified by a label in `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u8);

impl Element {
    pub fn new(label: u32) -> Result<Element> {
        if label == 0 || label > MAX_LABEL {
            return Err(Error::LabelOutOfRange {
                label: label as u64,
            });
        }
        Ok(Element(label as u8))
    }

    pub fn label(self) -> u32 {
        self.0 as u32
    }

    fn bit(self) -> u64 {
        1u64 << (self.0 - 1)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A subset of the 64-element label space, stored as a characteristic vector
/// with label 1 in the least significant position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SetMask(u64);

impl SetMask {
    pub const EMPTY: SetMask = SetMask(0);

    pub fn from_raw(bits: u64) -> SetMask {
        SetMask(bits)
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn singleton(e: Element) -> SetMask {
        SetMask(e.bit())
    }

    pub fn from_labels(labels: &[u32]) -> Result<SetMask> {
        let mut bits = 0u64;
        for &l in labels {
            bits |= Element::new(l)?.bit();
        }
        Ok(SetMask(bits))
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: u32) -> Result<SetMask> {
        if n > MAX_LABEL {
            return Err(Error::LabelOutOfRange { label: n as u64 });
        }
        if n == 0 {
            return Ok(SetMask::EMPTY);
        }
        Ok(SetMask(u64::MAX >> (64 - n)))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, e: Element) -> bool {
        self.0 & e.bit() != 0
    }

    pub fn insert(self, e: Element) -> SetMask {
        SetMask(self.0 | e.bit())
    }

    pub fn remove(self, e: Element) -> SetMask {
        SetMask(self.0 & !e.bit())
    }

    pub fn union(self, other: SetMask) -> SetMask {
        SetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SetMask) -> SetMask {
        SetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SetMask) -> SetMask {
        SetMask(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: SetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SetMask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn elements(self) -> impl Iterator<Item = Element> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Element((tz + 1) as u8))
            }
        })
    }

    pub fn min_element(self) -> Option<Element> {
        self.elements().next()
    }

    /// Canonical order: cardinality first, then numeric value of the
    /// characteristic vector.
    pub fn canonical_cmp(self, other: SetMask) -> std::cmp::Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

impl std::ops::BitOr for SetMask {
    type Output = SetMask;
    fn bitor(self, rhs: SetMask) -> SetMask {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for SetMask {
    type Output = SetMask;
    fn bitand(self, rhs: SetMask) -> SetMask {
        self.intersection(rhs)
    }
}

impl fmt::Display for SetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which side of a restriction to keep.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Restriction {
    /// Members that meet the pivot set.
    Meets,
    /// Members disjoint from the pivot set.
    Avoids,
}

/// The four basic structural predicates of a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Predicates {
    pub is_union_closed: bool,
    pub is_separating: bool,
    pub is_normalized: bool,
    pub is_independent: bool,
}

/// A finite family of distinct sets over an explicit universe.
///
/// Construction via [`SetFamily::new`] sets the universe to the union of the
/// member sets; [`SetFamily::over`] keeps a caller-declared universe that may
/// strictly contain that union. Member sets are always held in canonical
/// order (cardinality, then numeric mask value).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe: SetMask,
    sets: Vec<SetMask>,
}

fn normalize_sets(mut sets: Vec<SetMask>) -> Vec<SetMask> {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
    sets
}

impl SetFamily {
    /// Builds a family from the given member sets, dropping duplicates.
    /// The universe is the union of the members.
    pub fn new(sets: impl IntoIterator<Item = SetMask>) -> SetFamily {
        let sets = normalize_sets(sets.into_iter().collect());
        let universe = sets.iter().fold(SetMask::EMPTY, |acc, s| acc.union(*s));
        SetFamily { universe, sets }
    }

    /// Builds a family over a declared universe, which must contain every
    /// member set.
    pub fn over(universe: SetMask, sets: impl IntoIterator<Item = SetMask>) -> Result<SetFamily> {
        let sets = normalize_sets(sets.into_iter().collect());
        for s in &sets {
            if !s.is_subset_of(universe) {
                return Err(Error::SetOutsideUniverse { set: *s });
            }
        }
        Ok(SetFamily { universe, sets })
    }

    pub fn empty() -> SetFamily {
        SetFamily {
            universe: SetMask::EMPTY,
            sets: Vec::new(),
        }
    }

    pub fn universe(&self) -> SetMask {
        self.universe
    }

    pub fn universe_size(&self) -> u32 {
        self.universe.len()
    }

    pub fn universe_elements(&self) -> Vec<Element> {
        self.universe.elements().collect()
    }

    pub fn sets(&self) -> &[SetMask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: SetMask) -> bool {
        self.sets.binary_search_by(|s| s.canonical_cmp(set)).is_ok()
    }

    pub fn has_empty_set(&self) -> bool {
        self.sets.first().is_some_and(|s| s.is_empty())
    }

    /// 1 if the empty set is a member, 0 otherwise.
    pub fn empty_indicator(&self) -> usize {
        self.has_empty_set() as usize
    }

    /// True for the two degenerate families `{}` and `{∅}`, which the
    /// frequency conjectures exclude.
    pub fn is_degenerate(&self) -> bool {
        self.sets.is_empty() || (self.sets.len() == 1 && self.sets[0].is_empty())
    }

    /// Membership lookup set, useful for repeated `contains` queries.
    pub fn mask_set(&self) -> HashSet<u64> {
        self.sets.iter().map(|s| s.raw()).collect()
    }

    pub fn is_union_closed(&self) -> bool {
        self.union_closure_violation().is_none()
    }

    /// A pair of members whose union is missing, if any.
    pub fn union_closure_violation(&self) -> Option<(SetMask, SetMask)> {
        let present = self.mask_set();
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[i + 1..] {
                if !present.contains(&a.union(b).raw()) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub(crate) fn ensure_union_closed(&self) -> Result<()> {
        match self.union_closure_violation() {
            None => Ok(()),
            Some((a, b)) => Err(Error::NotUnionClosed { a, b }),
        }
    }

    /// Members meeting (or avoiding) the pivot set `s`.
    pub fn restrict(&self, s: SetMask, mode: Restriction) -> SetFamily {
        let keep = |m: &&SetMask| match mode {
            Restriction::Meets => m.intersects(s),
            Restriction::Avoids => !m.intersects(s),
        };
        SetFamily::new(self.sets.iter().filter(keep).copied())
    }

    /// The family `{ F \ s : F ∈ self }` with duplicates merged.
    pub fn subtract(&self, s: SetMask) -> SetFamily {
        SetFamily::new(self.sets.iter().map(|m| m.difference(s)))
    }

    /// Removes one member set; the universe is recomputed.
    pub fn without(&self, set: SetMask) -> SetFamily {
        SetFamily::new(self.sets.iter().copied().filter(|m| *m != set))
    }

    /// Union of all member sets avoiding `x`; empty when only the empty set
    /// avoids `x` (or nothing does).
    pub fn avoiding_union(&self, x: Element) -> Result<SetMask> {
        if !self.universe.contains(x) {
            return Err(Error::PointNotInUniverse { point: x });
        }
        Ok(self.avoiding_union_unchecked(x))
    }

    pub(crate) fn avoiding_union_unchecked(&self, x: Element) -> SetMask {
        self.sets
            .iter()
            .filter(|m| !m.contains(x))
            .fold(SetMask::EMPTY, |acc, m| acc.union(*m))
    }

    /// Number of members containing `a`.
    pub fn frequency(&self, a: Element) -> Result<usize> {
        if !self.universe.contains(a) {
            return Err(Error::PointNotInUniverse { point: a });
        }
        Ok(self.sets.iter().filter(|m| m.contains(a)).count())
    }

    /// The most frequent element and its frequency; ties go to the smallest
    /// label. `None` when the universe is empty.
    pub fn max_frequency(&self) -> Option<(Element, usize)> {
        let mut best: Option<(Element, usize)> = None;
        for e in self.universe.elements() {
            let f = self.sets.iter().filter(|m| m.contains(e)).count();
            if best.is_none_or(|(_, bf)| f > bf) {
                best = Some((e, f));
            }
        }
        best
    }

    /// Distinct elements lie in distinct member subcollections.
    pub fn is_separating(&self) -> bool {
        let elems = self.universe_elements();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i + 1..] {
                let same = self.sets.iter().all(|m| m.contains(a) == m.contains(b));
                if same {
                    return false;
                }
            }
        }
        true
    }

    /// Separation decided through the avoiding-union criterion: the family is
    /// separating exactly when the avoiding unions are pairwise distinct.
    pub fn is_separating_by_avoiding_unions(&self) -> bool {
        let unions: Vec<u64> = self
            .universe
            .elements()
            .map(|e| self.avoiding_union_unchecked(e).raw())
            .collect();
        let mut sorted = unions.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Separating, union-closed, contains the empty set and has exactly
    /// `|universe| + 1` members.
    pub fn is_normalized(&self) -> bool {
        self.has_empty_set()
            && self.sets.len() == self.universe.len() as usize + 1
            && self.is_union_closed()
            && self.is_separating()
    }

    pub(crate) fn ensure_normalized(&self) -> Result<()> {
        if !self.has_empty_set() {
            return Err(Error::NotNormalized {
                reason: "the empty set is missing",
            });
        }
        if self.sets.len() != self.universe.len() as usize + 1 {
            return Err(Error::NotNormalized {
                reason: "size is not universe size plus one",
            });
        }
        self.ensure_union_closed()
            .map_err(|_| Error::NotNormalized {
                reason: "not union-closed",
            })?;
        if !self.is_separating() {
            return Err(Error::NotNormalized {
                reason: "not separating",
            });
        }
        Ok(())
    }

    /// A witness that the family is dependent: an element `a` together with a
    /// set `s` of other elements such that exactly the members meeting `s`
    /// contain `a`. `None` means the family is independent.
    ///
    /// Only the maximal candidate `s` (all elements whose member collections
    /// sit inside that of `a`) needs to be tested; if any witness set works,
    /// that one does. Ties resolve to the smallest `a`.
    pub fn dependence_witness(&self) -> Option<(Element, SetMask)> {
        for a in self.universe.elements() {
            // b qualifies iff every member containing b also contains a,
            // which is exactly b ∉ avoiding_union(a).
            let candidates = self
                .universe
                .difference(self.avoiding_union_unchecked(a))
                .remove(a);
            if candidates.is_empty() {
                continue;
            }
            let covered = self
                .sets
                .iter()
                .filter(|m| m.contains(a))
                .all(|m| m.intersects(candidates));
            if covered {
                return Some((a, candidates));
            }
        }
        None
    }

    pub fn is_independent(&self) -> bool {
        self.dependence_witness().is_none()
    }

    pub(crate) fn ensure_independent(&self) -> Result<()> {
        match self.dependence_witness() {
            None => Ok(()),
            Some((element, on)) => Err(Error::NotIndependent { element, on }),
        }
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            is_union_closed: self.is_union_closed(),
            is_separating: self.is_separating(),
            is_normalized: self.is_normalized(),
            is_independent: self.is_independent(),
        }
    }

    /// Non-empty members not expressible as a union of two strictly smaller
    /// members. Requires a union-closed family.
    ///
    /// In a union-closed family a member is reducible exactly when it equals
    /// the union of all its proper sub-members, so a single pass suffices.
    pub fn irreducibles(&self) -> Result<Vec<SetMask>> {
        self.ensure_union_closed()?;
        let mut out = Vec::new();
        for &f in &self.sets {
            if f.is_empty() {
                continue;
            }
            let proper_union = self
                .sets
                .iter()
                .filter(|m| m.is_subset_of(f) && **m != f)
                .fold(SetMask::EMPTY, |acc, m| acc.union(*m));
            if proper_union != f {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// Inclusion-minimal non-empty members.
    pub fn minimal_sets(&self) -> Vec<SetMask> {
        self.sets
            .iter()
            .filter(|f| !f.is_empty())
            .filter(|f| {
                !self
                    .sets
                    .iter()
                    .any(|m| !m.is_empty() && *m != **f && m.is_subset_of(**f))
            })
            .copied()
            .collect()
    }

    /// Cheap power set test: union-closed with the empty set, every
    /// singleton present, and exactly `2^|universe|` members.
    pub fn is_power_set(&self) -> bool {
        if !self.has_empty_set() {
            return false;
        }
        let n = self.universe.len();
        if n >= 64 || self.sets.len() as u128 != 1u128 << n {
            return false;
        }
        self.universe
            .elements()
            .all(|e| self.contains(SetMask::singleton(e)))
            && self.is_union_closed()
    }

    /// Applies a relabeling to every member set. The map must be injective on
    /// the universe.
    pub fn relabeled(&self, map: impl Fn(Element) -> Element) -> Result<SetFamily> {
        let mut seen = SetMask::EMPTY;
        for e in self.universe.elements() {
            let img = map(e);
            if seen.contains(img) {
                return Err(Error::InvalidRelabeling);
            }
            seen = seen.insert(img);
        }
        let remap = |s: SetMask| {
            s.elements()
                .fold(SetMask::EMPTY, |acc, e| acc.insert(map(e)))
        };
        Ok(SetFamily {
            universe: remap(self.universe),
            sets: normalize_sets(self.sets.iter().map(|s| remap(*s)).collect()),
        })
    }

    /// Relabels the universe onto `1..=n` preserving label order.
    pub fn relabel_to_compact(&self) -> SetFamily {
        let elems = self.universe_elements();
        self.relabeled(|e| {
            let rank = elems.iter().position(|x| *x == e).unwrap() as u32 + 1;
            Element::new(rank).unwrap()
        })
        .expect("rank map is a bijection")
    }

    /// Whether the universe is exactly `1..=n`.
    pub fn has_compact_universe(&self) -> bool {
        self.universe == SetMask::full(self.universe.len()).unwrap()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.sets {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", s)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] over {}", self, self.universe)
    }
}

/// Smallest union-closed family containing the generators; the empty set is
/// always included as the union of an empty collection.
pub fn close_under_union(generators: &[SetMask]) -> SetFamily {
    let mut closure: HashSet<u64> = HashSet::new();
    closure.insert(0);
    for &g in generators {
        let step: Vec<u64> = closure.iter().map(|m| m | g.raw()).collect();
        closure.extend(step);
    }
    SetFamily::new(closure.into_iter().map(SetMask::from_raw))
}

/// `{∅, {1}, {1,2}, ..., {1..n}}`.
pub fn staircase(n: u32) -> Result<SetFamily> {
    if n > MAX_LABEL {
        return Err(Error::SizeGuard {
            what: "staircase universe",
            limit: MAX_LABEL as u64,
            got: n as u64,
        });
    }
    Ok(SetFamily::new((0..=n).map(|k| SetMask::full(k).unwrap())))
}

/// All subsets of `{1..n}`.
pub fn power_set(n: u32) -> Result<SetFamily> {
    const LIMIT: u32 = 20;
    if n > LIMIT {
        return Err(Error::SizeGuard {
            what: "power set universe",
            limit: LIMIT as u64,
            got: n as u64,
        });
    }
    Ok(SetFamily::new((0u64..(1u64 << n)).map(SetMask::from_raw)))
}

/// Union closure of all k-element subsets of `{1..n}`: every subset with at
/// least `k` elements, plus the empty set.
pub fn binom_at_least(n: u32, k: u32) -> Result<SetFamily> {
    if n > MAX_LABEL {
        return Err(Error::SizeGuard {
            what: "binomial universe",
            limit: MAX_LABEL as u64,
            got: n as u64,
        });
    }
    let count: u128 = (k..=n).map(|j| binomial(n, j)).sum();
    if count + 1 > 1 << 20 {
        return Err(Error::SizeGuard {
            what: "binomial family size",
            limit: 1 << 20,
            got: count.min(u64::MAX as u128) as u64,
        });
    }
    let mut sets = vec![SetMask::EMPTY];
    for j in k..=n {
        push_combinations(n, j, 1, SetMask::EMPTY, &mut sets);
    }
    Ok(SetFamily::new(sets))
}

// all size-`remaining` extensions of `acc` using labels `from..=n`
fn push_combinations(n: u32, remaining: u32, from: u32, acc: SetMask, out: &mut Vec<SetMask>) {
    if remaining == 0 {
        out.push(acc);
        return;
    }
    for label in from..=(n - remaining + 1) {
        let e = Element::new(label).expect("label within range");
        push_combinations(n, remaining - 1, label + 1, acc.insert(e), out);
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
