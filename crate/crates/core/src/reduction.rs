//! Reduction of normalized families and the induced child operator.
//!
//! Removing an inclusion-minimal non-empty member from a normalized family
//! and deleting the common element from every remaining member yields a
//! normalized family one step smaller. Pulled through the duality this turns
//! any union-closed family into a *child* with one member less; iterating
//! gives its descendents. Trivial parents invert both steps.

use crate::dual::{common_element, dual, sorted_canonically, IndexedFamily, Indexing};
use crate::error::{Error, Result};
use crate::family::{close_under_union, Element, SetFamily, SetMask};

/// One normalized reduction step, kept for lineage reporting.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub parent: SetFamily,
    pub minimal_set: SetMask,
    pub removed_element: Element,
    pub result: SetFamily,
}

/// Removes the member `minimal_set` and deletes the common element from all
/// remaining members. The input must be normalized and `minimal_set` one of
/// its inclusion-minimal non-empty members; the result is normalized with
/// both the member count and the universe shrunk by one, labels preserved.
pub fn reduce_normalized(normalized: &SetFamily, minimal_set: SetMask) -> Result<SetFamily> {
    let step = reduction_step(normalized, minimal_set)?;
    Ok(step.result)
}

/// Like [`reduce_normalized`] but returns the full step record.
pub fn reduction_step(normalized: &SetFamily, minimal_set: SetMask) -> Result<ReductionStep> {
    normalized.ensure_normalized()?;
    if minimal_set.is_empty() || !normalized.contains(minimal_set) {
        return Err(Error::SetNotInFamily { set: minimal_set });
    }
    if let Some(smaller) = normalized
        .sets()
        .iter()
        .find(|m| !m.is_empty() && **m != minimal_set && m.is_subset_of(minimal_set))
    {
        return Err(Error::NotMinimal {
            set: minimal_set,
            smaller: *smaller,
        });
    }
    let a = common_element(normalized)?;
    let result = normalized
        .without(minimal_set)
        .subtract(SetMask::singleton(a));
    debug_assert!(result.is_normalized());
    debug_assert_eq!(result.len(), normalized.len() - 1);
    debug_assert_eq!(result.universe(), normalized.universe().remove(a));
    Ok(ReductionStep {
        parent: normalized.clone(),
        minimal_set,
        removed_element: a,
        result,
    })
}

/// Detailed record of one child computation.
#[derive(Clone, Debug)]
pub struct ChildStep {
    /// Dual of the parent (canonical indexing).
    pub parent_dual: SetFamily,
    /// The minimal set removed on the dual side.
    pub minimal_set: SetMask,
    /// The common element deleted on the dual side.
    pub removed_element: Element,
    /// The reduced dual.
    pub reduced_dual: SetFamily,
    /// The child's non-empty members in the order induced by the transpose
    /// of the reduced dual's irreducibles; transposing these again recovers
    /// `reduced_dual` exactly.
    pub child_indexed: Option<IndexedFamily>,
    /// The child itself.
    pub child: SetFamily,
}

/// The child of a union-closed family: dualize, reduce by a minimal set,
/// take irreducibles, dualize back. `minimal_set` addresses the dual side;
/// `None` picks the canonical-least minimal set. The child has exactly one
/// member less and is independent.
///
/// A missing empty set is adjoined before dualizing.
pub fn child(family: &SetFamily, minimal_set: Option<SetMask>) -> Result<SetFamily> {
    Ok(child_step(family, minimal_set)?.child)
}

/// Like [`child`] but returns the whole pipeline record.
pub fn child_step(family: &SetFamily, minimal_set: Option<SetMask>) -> Result<ChildStep> {
    let family = adjoin_empty(family);
    family.ensure_union_closed()?;
    if family.len() < 2 {
        return Err(Error::SizeGuard {
            what: "child of a family with fewer than two members",
            limit: 1,
            got: family.len() as u64,
        });
    }
    let parent_dual = dual(&family, Indexing::Canonical)?;
    let minimal_set = match minimal_set {
        Some(m) => m,
        None => least_minimal(&parent_dual).expect("normalized family with a non-empty member"),
    };
    let step = reduction_step(&parent_dual, minimal_set)?;
    let reduced_dual = step.result;
    let irr = reduced_dual.irreducibles()?;
    let (child_indexed, child) = if irr.is_empty() {
        (None, SetFamily::new([SetMask::EMPTY]))
    } else {
        let indexed = IndexedFamily::new(sorted_canonically(irr))?;
        let transposed = indexed.transpose()?;
        let child = close_under_union(transposed.items());
        (Some(transposed), child)
    };
    debug_assert_eq!(child.len(), family.len() - 1);
    Ok(ChildStep {
        parent_dual,
        minimal_set,
        removed_element: step.removed_element,
        reduced_dual,
        child_indexed,
        child,
    })
}

fn adjoin_empty(family: &SetFamily) -> SetFamily {
    if family.has_empty_set() {
        family.clone()
    } else {
        let mut sets = family.sets().to_vec();
        sets.push(SetMask::EMPTY);
        SetFamily::new(sets)
    }
}

/// Canonical-least minimal set: smallest by (cardinality, mask value).
pub fn least_minimal(family: &SetFamily) -> Option<SetMask> {
    family
        .minimal_sets()
        .into_iter()
        .min_by(|a, b| a.canonical_cmp(*b))
}

/// Which minimal-set choices to explore when descending.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// Only the canonical-least minimal set.
    First,
    /// Every minimal set of the dual at every node.
    All,
}

/// How to merge equivalent nodes at the same depth.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dedup {
    /// Keep every path.
    None,
    /// Merge nodes that are equal after relabeling to a compact universe.
    Equality,
    /// Merge isomorphic nodes.
    Canonical,
}

/// One choice made on the dual side while descending.
#[derive(Clone, Debug)]
pub struct LineageStep {
    pub minimal_set: SetMask,
    pub removed_element: Element,
}

/// A family reached by iterated child steps, with the dual-side choices that
/// produced it.
#[derive(Clone, Debug)]
pub struct DescendentNode {
    pub family: SetFamily,
    pub lineage: Vec<LineageStep>,
    pub depth: usize,
}

/// Explores children of `family` level by level down to `depth`, returning
/// the nodes of every level including the root. Each node's member count is
/// the root's minus its depth.
pub fn descendents(
    family: &SetFamily,
    depth: usize,
    branch: Branch,
    dedup: Dedup,
) -> Result<Vec<DescendentNode>> {
    let root = adjoin_empty(family);
    root.ensure_union_closed()?;
    if depth + 1 > root.len() {
        return Err(Error::DepthExceeded {
            depth,
            available: root.len() - 1,
        });
    }
    let mut out = vec![DescendentNode {
        family: root.clone(),
        lineage: Vec::new(),
        depth: 0,
    }];
    let mut frontier: Vec<DescendentNode> = out.clone();
    for level in 1..=depth {
        let mut next: Vec<DescendentNode> = Vec::new();
        let mut seen_eq: std::collections::HashSet<SetFamily> = std::collections::HashSet::new();
        let mut seen_iso: std::collections::HashSet<crate::canonical::CanonicalForm> =
            std::collections::HashSet::new();
        for node in &frontier {
            let choices: Vec<Option<SetMask>> = match branch {
                Branch::First => vec![None],
                Branch::All => dual(&node.family, Indexing::Canonical)?
                    .minimal_sets()
                    .into_iter()
                    .map(Some)
                    .collect(),
            };
            for m in choices {
                let step = child_step(&node.family, m)?;
                debug_assert_eq!(step.child.len(), root.len() - level);
                let fresh = match dedup {
                    Dedup::None => true,
                    Dedup::Equality => seen_eq.insert(step.child.relabel_to_compact()),
                    Dedup::Canonical => {
                        seen_iso.insert(crate::canonical::canonical_form(&step.child))
                    }
                };
                if fresh {
                    let mut lineage = node.lineage.clone();
                    lineage.push(LineageStep {
                        minimal_set: step.minimal_set,
                        removed_element: step.removed_element,
                    });
                    next.push(DescendentNode {
                        family: step.child,
                        lineage,
                        depth: level,
                    });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// The canonical parent of a normalized family: every member extended by a
/// fresh element, plus the empty set. Requires a compact universe `1..=n`;
/// the result is (n+1)-normalized, its common element is the fresh label,
/// and reducing by its unique minimal set gives the input back exactly.
pub fn trivial_parent_normalized(normalized: &SetFamily) -> Result<SetFamily> {
    normalized.ensure_normalized()?;
    if !normalized.has_compact_universe() {
        return Err(Error::UniverseNotCompact {
            expected: normalized.universe_size(),
        });
    }
    let fresh = Element::new(normalized.universe_size() + 1)?;
    let mut sets: Vec<SetMask> = normalized.sets().iter().map(|s| s.insert(fresh)).collect();
    sets.push(SetMask::EMPTY);
    let parent = SetFamily::new(sets);
    debug_assert!(parent.is_normalized());
    debug_assert_eq!(common_element(&parent)?, fresh);
    Ok(parent)
}

/// The canonical parent of an independent union-closed family containing the
/// empty set: a family one member larger whose child recovers the input (up
/// to isomorphism in general, exactly when the transposes line up).
pub fn trivial_parent_independent(family: &SetFamily) -> Result<SetFamily> {
    family.ensure_union_closed()?;
    family.ensure_independent()?;
    if !family.has_empty_set() {
        return Err(Error::MissingEmptySet);
    }
    let star = dual(family, Indexing::Canonical)?;
    let parent_dual = trivial_parent_normalized(&star)?;
    let irr = parent_dual.irreducibles()?;
    let parent = dual(&SetFamily::new(irr), Indexing::Canonical)?;
    debug_assert_eq!(parent.len(), family.len() + 1);
    Ok(parent)
}

/// Repeatedly removes a dependent element (smallest label first) until the
/// family is independent. Each removal keeps the member count; the removed
/// labels are returned in order.
pub fn eliminate_dependence(family: &SetFamily) -> Result<(SetFamily, Vec<Element>)> {
    family.ensure_union_closed()?;
    let mut current = family.clone();
    let mut removed = Vec::new();
    while let Some((a, _)) = current.dependence_witness() {
        let next = current.subtract(SetMask::singleton(a));
        debug_assert_eq!(next.len(), current.len());
        removed.push(a);
        current = next;
    }
    Ok((current, removed))
}

/// Member-set sizes with multiplicities, ascending. For a normalized family
/// the first entry is always `(0, 1)` and the multiplicities sum to the
/// member count.
pub fn size_class_decomposition(normalized: &SetFamily) -> Result<Vec<(u32, usize)>> {
    normalized.ensure_normalized()?;
    let mut out: Vec<(u32, usize)> = Vec::new();
    for s in normalized.sets() {
        match out.last_mut() {
            Some((size, count)) if *size == s.len() => *count += 1,
            _ => out.push((s.len(), 1)),
        }
    }
    Ok(out)
}
