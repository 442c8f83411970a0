//! Canonical forms for set families under universe relabeling.
//!
//! Two families are isomorphic when some bijection between their universes
//! maps one onto the other. The canonical form is the lexicographically
//! smallest relabeled copy, found by iterated partition refinement on element
//! signatures followed by backtracking individualization inside the remaining
//! cells. Refinement is label-invariant and the search visits every ordering
//! compatible with it, so the minimum is a complete isomorphism invariant.

use crate::family::{Element, SetFamily, SetMask};
use std::collections::BTreeMap;

/// Relabeling-invariant encoding of a family: universe size plus the member
/// masks of the minimal relabeled copy, sorted ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    universe_size: u32,
    masks: Vec<u64>,
}

impl CanonicalForm {
    pub fn universe_size(&self) -> u32 {
        self.universe_size
    }

    /// The canonical copy as a family over `1..=n`.
    pub fn to_family(&self) -> SetFamily {
        SetFamily::new(self.masks.iter().map(|m| SetMask::from_raw(*m)))
    }
}

struct Search<'a> {
    // member sets as element-index bitmasks (index i = i-th universe element)
    sets: Vec<u64>,
    best: Option<Vec<u64>>,
    n: usize,
    _family: &'a SetFamily,
}

type Partition = Vec<Vec<usize>>;

impl Search<'_> {
    /// Splits every cell by an invariant signature until stable.
    ///
    /// A set's type is the multiset of cell ids of its elements; an element's
    /// signature is the multiset of types of the sets containing it. Both are
    /// invariant under any relabeling that respects the current partition.
    fn refine(&self, partition: &mut Partition) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in partition.iter().enumerate() {
                for &e in cell {
                    cell_of[e] = ci;
                }
            }
            let set_types: Vec<Vec<usize>> = self
                .sets
                .iter()
                .map(|&s| {
                    let mut t: Vec<usize> = bits(s).map(|e| cell_of[e]).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
            let mut changed = false;
            let mut next: Partition = Vec::with_capacity(partition.len());
            for cell in partition.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<&Vec<usize>>, Vec<usize>> = BTreeMap::new();
                for &e in cell {
                    let mut sig: Vec<&Vec<usize>> = self
                        .sets
                        .iter()
                        .enumerate()
                        .filter(|(_, &s)| s & (1 << e) != 0)
                        .map(|(i, _)| &set_types[i])
                        .collect();
                    sig.sort();
                    groups.entry(sig).or_default().push(e);
                }
                if groups.len() > 1 {
                    changed = true;
                }
                next.extend(groups.into_values());
            }
            *partition = next;
            if !changed {
                return;
            }
        }
    }

    fn descend(&mut self, mut partition: Partition) {
        self.refine(&mut partition);
        if let Some(pos) = partition.iter().position(|c| c.len() > 1) {
            let cell = partition[pos].clone();
            for &e in &cell {
                let mut split = partition.clone();
                let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != e).collect();
                split[pos] = vec![e];
                split.insert(pos + 1, rest);
                self.descend(split);
            }
            return;
        }
        // discrete partition: element at position i gets label i+1
        let mut new_pos = vec![0u32; self.n];
        for (i, cell) in partition.iter().enumerate() {
            new_pos[cell[0]] = i as u32;
        }
        let mut encoded: Vec<u64> = self
            .sets
            .iter()
            .map(|&s| bits(s).fold(0u64, |acc, e| acc | 1 << new_pos[e]))
            .collect();
        encoded.sort_unstable();
        if self.best.as_ref().is_none_or(|b| encoded < *b) {
            self.best = Some(encoded);
        }
    }
}

fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let tz = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(tz)
        }
    })
}

/// Canonical form of a family; equal forms exactly characterize isomorphism.
pub fn canonical_form(family: &SetFamily) -> CanonicalForm {
    let elems = family.universe_elements();
    let n = elems.len();
    let index_of: BTreeMap<Element, usize> =
        elems.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let sets: Vec<u64> = family
        .sets()
        .iter()
        .map(|s| s.elements().fold(0u64, |acc, e| acc | 1 << index_of[&e]))
        .collect();
    if n == 0 {
        return CanonicalForm {
            universe_size: 0,
            masks: sets,
        };
    }
    let mut search = Search {
        sets,
        best: None,
        n,
        _family: family,
    };
    search.descend(vec![(0..n).collect()]);
    CanonicalForm {
        universe_size: n as u32,
        masks: search.best.expect("at least one discrete ordering"),
    }
}

/// Whether two families differ only by a relabeling of their universes.
pub fn isomorphic(a: &SetFamily, b: &SetFamily) -> bool {
    if a.universe_size() != b.universe_size() || a.len() != b.len() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}
