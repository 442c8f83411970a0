//! Exhaustive generation of union-closed and normalized families on small
//! universes, plus the brute-force sweeps that cross-check every optimized
//! decision procedure against its definition-level oracle.
//!
//! The main generator walks the subset lattice from the largest mask down,
//! deciding membership per mask and pruning choices that would break closure
//! under union; every union-closed family is reached exactly once. A second,
//! fully independent generator filters all subsets of the power set and is
//! used to validate the first.

use crate::axioms::{
    axiom_profile, check_axiom_naive, empirical_extra_implications, replay_witness, verify_hasse,
    AxiomId, AxiomProfile,
};
use crate::canonical::{canonical_form, CanonicalForm};
use crate::conjectures::{frankl_check, generalized_chain, salzborn_check};
use crate::dual::{common_element, dual, Indexing};
use crate::error::{Error, Result};
use crate::family::{power_set, staircase, SetFamily, SetMask};
use crate::reduction::reduce_normalized;
use crate::topology::Supratopology;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;

/// Structural constraints for [`enumerate`].
#[derive(Clone, Copy, Default, Debug)]
pub struct Constraints {
    pub contains_empty: bool,
    pub contains_universe: bool,
    pub separating: bool,
    /// Implies the other constraints needed for an n-normalized family over
    /// exactly `1..=n`.
    pub normalized: bool,
    pub independent: bool,
}

/// What to enumerate: all union-closed families over `1..=n` meeting the
/// constraints, optionally one representative per isomorphism class.
#[derive(Clone, Copy, Debug)]
pub struct EnumSpec {
    pub n: u32,
    pub constraints: Constraints,
    pub up_to_iso: bool,
}

const ENUM_LIMIT: u32 = 5;
const ENUM_LIMIT_NORMALIZED: u32 = 6;

impl EnumSpec {
    fn check_guard(&self) -> Result<()> {
        let limit = if self.constraints.normalized {
            ENUM_LIMIT_NORMALIZED
        } else {
            ENUM_LIMIT
        };
        if self.n > limit {
            return Err(Error::SizeGuard {
                what: "enumeration universe",
                limit: limit as u64,
                got: self.n as u64,
            });
        }
        Ok(())
    }
}

struct Enumerator<'a> {
    n: u32,
    constraints: Constraints,
    up_to_iso: bool,
    present: Vec<bool>, // indexed by raw mask
    chosen: Vec<u64>,
    seen_classes: HashSet<CanonicalForm>,
    visit: &'a mut dyn FnMut(&SetFamily),
}

impl Enumerator<'_> {
    fn run(&mut self) {
        let full = (1u64 << self.n) - 1;
        self.decide(full as i64);
    }

    // masks are decided in decreasing numeric order, so every union of the
    // current mask with an already chosen one has been decided already
    fn decide(&mut self, mask: i64) {
        if mask < 0 {
            self.leaf();
            return;
        }
        let m = mask as u64;
        let full = (1u64 << self.n) - 1;
        let forced = (m == full && self.constraints.contains_universe)
            || (m == 0 && (self.constraints.contains_empty || self.constraints.normalized));
        let closure_ok = self
            .chosen
            .iter()
            .all(|c| (m | c) == *c || self.present[(m | c) as usize]);
        // a normalized family over 1..=n has exactly n + 1 members
        let size_ok = !self.constraints.normalized || (self.chosen.len() as u32) < self.n + 1;

        if !forced {
            self.decide(mask - 1);
        }
        if closure_ok && size_ok {
            self.present[m as usize] = true;
            self.chosen.push(m);
            self.decide(mask - 1);
            self.chosen.pop();
            self.present[m as usize] = false;
        }
    }

    fn leaf(&mut self) {
        let family = SetFamily::new(self.chosen.iter().map(|m| SetMask::from_raw(*m)));
        let c = &self.constraints;
        if c.normalized {
            if family.len() as u32 != self.n + 1
                || family.universe_size() != self.n
                || !family.is_separating()
            {
                return;
            }
        } else {
            if c.separating && !family.is_separating() {
                return;
            }
        }
        if c.independent && !family.is_independent() {
            return;
        }
        if self.up_to_iso && !self.seen_classes.insert(canonical_form(&family)) {
            return;
        }
        (self.visit)(&family);
    }
}

/// Streams every union-closed family over `1..=n` meeting the constraints
/// into `visit`, each exactly once (once per isomorphism class with
/// `up_to_iso`). Deterministic order.
pub fn enumerate_with(spec: &EnumSpec, visit: &mut dyn FnMut(&SetFamily)) -> Result<()> {
    spec.check_guard()?;
    let mut constraints = spec.constraints;
    if constraints.normalized {
        constraints.contains_empty = true;
        constraints.contains_universe = true;
        constraints.separating = true;
    }
    let mut enumerator = Enumerator {
        n: spec.n,
        constraints,
        up_to_iso: spec.up_to_iso,
        present: vec![false; 1 << spec.n],
        chosen: Vec::new(),
        seen_classes: HashSet::new(),
        visit,
    };
    enumerator.run();
    Ok(())
}

/// Like [`enumerate_with`] but collects into a vector.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<SetFamily>> {
    let mut out = Vec::new();
    enumerate_with(spec, &mut |f| out.push(f.clone()))?;
    Ok(out)
}

/// Independent oracle generator: filters every subset of the power set of
/// `1..=n` for union-closedness and the constraints. Exponential in `2^n`,
/// guarded to `n <= 4`.
pub fn enumerate_naive(spec: &EnumSpec) -> Result<Vec<SetFamily>> {
    if spec.n > 4 {
        return Err(Error::SizeGuard {
            what: "naive enumeration universe",
            limit: 4,
            got: spec.n as u64,
        });
    }
    let member_count = 1u32 << spec.n;
    let mut out = Vec::new();
    let mut seen_classes = HashSet::new();
    for bits in 0u64..(1u64 << member_count) {
        let sets: Vec<SetMask> = (0..member_count)
            .filter(|i| bits & (1 << i) != 0)
            .map(|i| SetMask::from_raw(i as u64))
            .collect();
        let family = SetFamily::new(sets);
        if !family.is_union_closed() {
            continue;
        }
        let c = spec.constraints;
        let full = SetMask::full(spec.n).unwrap();
        if c.contains_empty && !family.has_empty_set() {
            continue;
        }
        if c.contains_universe && !family.contains(full) {
            continue;
        }
        if c.separating && !family.is_separating() {
            continue;
        }
        if c.normalized && !(family.is_normalized() && family.universe() == full) {
            continue;
        }
        if c.independent && !family.is_independent() {
            continue;
        }
        if spec.up_to_iso && !seen_classes.insert(canonical_form(&family)) {
            continue;
        }
        out.push(family);
    }
    Ok(out)
}

/// All supratopologies over `1..=n`: union-closed with both the empty set
/// and the full universe.
pub fn supratopologies(n: u32) -> Result<Vec<SetFamily>> {
    enumerate(&EnumSpec {
        n,
        constraints: Constraints {
            contains_empty: true,
            contains_universe: true,
            ..Constraints::default()
        },
        up_to_iso: false,
    })
}

/// Deterministic pseudorandom union-closed family over `1..=n`, built by
/// closing a handful of random generator sets and adjoining the empty set
/// and the universe.
pub fn random_supratopology(n: u32, rng: &mut StdRng) -> SetFamily {
    let full = (1u64 << n) - 1;
    let count = rng.gen_range(1..=n.max(2));
    let mut gens: Vec<SetMask> = (0..count)
        .map(|_| SetMask::from_raw(rng.gen_range(0..=full)))
        .collect();
    gens.push(SetMask::from_raw(full));
    crate::family::close_under_union(&gens)
}

/// One mismatch between an optimized procedure and its oracle, or a failed
/// structural assertion, found by [`oracle_crosscheck`].
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub family: SetFamily,
    pub what: String,
}

/// Summary of one crosscheck sweep.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub universe: u32,
    pub families_checked: usize,
    pub normalized_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Pairwise implications that held on every profile beyond the known
    /// lattice; reported, not assumed.
    pub extra_implications: Vec<(AxiomId, AxiomId)>,
}

impl CrosscheckReport {
    pub fn clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Sweeps every supratopology over `1..=n` (a random sample of 2000 for
/// `n = 5`) and checks each optimized decision procedure against its oracle,
/// together with the structural identities of the duality and the reduction.
pub fn oracle_crosscheck(n: u32) -> Result<CrosscheckReport> {
    if n > 5 {
        return Err(Error::SizeGuard {
            what: "crosscheck universe",
            limit: 5,
            got: n as u64,
        });
    }
    let families = if n <= 4 {
        supratopologies(n)?
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        (0..2000)
            .map(|_| random_supratopology(5, &mut rng))
            .collect()
    };
    let mut discrepancies = Vec::new();
    let mut profiles = Vec::new();
    let mut push = |family: &SetFamily, what: String| {
        discrepancies.push(Discrepancy {
            family: family.clone(),
            what,
        });
    };

    for f in &families {
        let space = Supratopology::new(f.clone())?;
        let profile = axiom_profile(&space);
        for axiom in AxiomId::ALL {
            let fast = profile.get(axiom);
            let naive = check_axiom_naive(&space, axiom)?;
            if fast.holds != naive.holds {
                push(
                    f,
                    format!("{axiom}: fast={} naive={}", fast.holds, naive.holds),
                );
            }
            for v in [fast, naive] {
                if let Some(w) = v.witness {
                    if replay_witness(&space, axiom, &w) {
                        push(f, format!("{axiom}: witness {w} does not replay"));
                    }
                }
            }
        }
        if f.is_separating() != f.is_separating_by_avoiding_unions() {
            push(f, "separating criteria disagree".into());
        }
        // dual size identity and normalization
        let d = dual(f, Indexing::Canonical)?;
        if d.len() != f.len() + 1 - f.empty_indicator() {
            push(
                f,
                format!("dual size {} for family size {}", d.len(), f.len()),
            );
        }
        if !d.is_normalized() {
            push(f, "dual not normalized".into());
        }
        if profile.holds(AxiomId::TI) {
            if let Err(e) = check_independent_identities(f) {
                push(f, e);
            }
        }
        if profile.holds(AxiomId::TFF) {
            if !frankl_check(f).verdict.satisfied() {
                push(f, "TFF family without a half-frequency element".into());
            }
            if f.len() < 1 << (f.universe_size() - 1) {
                push(f, "TFF family smaller than half the subset count".into());
            }
        }
        profiles.push(profile);
    }

    // implication lattice on the full census
    for v in verify_hasse(families.iter())? {
        push(&v.family, format!("implication {} violated", v.edge));
    }

    // reduction of every normalized family over 1..=n, by every minimal set
    let mut normalized_checked = 0;
    if n >= 1 {
        let normalized = enumerate(&EnumSpec {
            n,
            constraints: Constraints {
                normalized: true,
                ..Constraints::default()
            },
            up_to_iso: false,
        })?;
        normalized_checked = normalized.len();
        let mut staircase_classes: HashSet<CanonicalForm> = HashSet::new();
        for nf in &normalized {
            for m in nf.minimal_sets() {
                match reduce_normalized(nf, m) {
                    Ok(r) => {
                        if !(r.is_normalized() && r.universe_size() + 1 == nf.universe_size()) {
                            push(nf, format!("reduction by {m} not normalized one lower"));
                        }
                    }
                    Err(e) => push(nf, format!("reduction by {m} failed: {e}")),
                }
            }
            if common_element(nf).is_err() {
                push(nf, "normalized family without a common element".into());
            }
            if nf.is_independent() {
                staircase_classes.insert(canonical_form(nf));
            }
            match salzborn_check(nf) {
                Ok(r) if r.holds() => {}
                _ => push(nf, "irreducible-size bound failed".into()),
            }
        }
        if n >= 1 && staircase_classes.len() != 1 {
            discrepancies.push(Discrepancy {
                family: staircase(n)?,
                what: format!(
                    "expected exactly one independent normalized class, found {}",
                    staircase_classes.len()
                ),
            });
        } else if n >= 1 && !staircase_classes.contains(&canonical_form(&staircase(n)?)) {
            discrepancies.push(Discrepancy {
                family: staircase(n)?,
                what: "the unique independent normalized class is not the staircase".into(),
            });
        }
    }

    let extra_implications = empirical_extra_implications(&profiles);
    Ok(CrosscheckReport {
        universe: n,
        families_checked: families.len(),
        normalized_checked,
        discrepancies,
        extra_implications,
    })
}

// identities available on independent families: the transpose of the family
// lists exactly the irreducibles of its dual, and transposing again recovers
// the family
fn check_independent_identities(f: &SetFamily) -> std::result::Result<(), String> {
    use crate::dual::IndexedFamily;
    let star = dual(f, Indexing::Canonical).map_err(|e| e.to_string())?;
    let j_star = star.irreducibles().map_err(|e| e.to_string())?;
    if f.is_degenerate() {
        return Ok(());
    }
    let indexed = IndexedFamily::index_canonically(f);
    let transposed = indexed.transpose().map_err(|e| e.to_string())?;
    let mut a: Vec<u64> = transposed.items().iter().map(|s| s.raw()).collect();
    let mut b: Vec<u64> = j_star.iter().map(|s| s.raw()).collect();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err("dual irreducibles differ from the transpose".into());
    }
    if j_star.len() as u32 != f.universe_size() {
        return Err("dual irreducible count differs from universe size".into());
    }
    // double transpose gives the family back exactly when its universe is
    // compact, up to isomorphism otherwise
    let back = crate::family::close_under_union(
        transposed.transpose().map_err(|e| e.to_string())?.items(),
    );
    let reference = if f.has_empty_set() {
        f.clone()
    } else {
        let mut sets = f.sets().to_vec();
        sets.push(SetMask::EMPTY);
        SetFamily::new(sets)
    };
    if f.has_compact_universe() {
        if back != reference {
            return Err("double transpose did not recover the family".into());
        }
    } else if !crate::canonical::isomorphic(&back, &reference) {
        return Err("double transpose not isomorphic to the family".into());
    }
    Ok(())
}

/// Report of one descendent-tree verification run.
#[derive(Clone, Debug)]
pub struct DescPowerReport {
    pub n: u32,
    pub levels: usize,
    pub nodes_checked: usize,
    /// Families (on the normalized side) whose independent counterpart
    /// missed the half-frequency bound; must be empty.
    pub failures: Vec<SetFamily>,
}

impl DescPowerReport {
    pub fn clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Dedup mode for [`verify_descpower`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DescDedup {
    /// Merge isomorphic nodes per level.
    Canonical,
    /// Merge only label-identical nodes per level.
    Equality,
}

/// Explores every descendent of the power set of `1..=n`, over all
/// minimal-set choices, working on the normalized side of the duality.
/// Each node must satisfy the irreducible-size bound, and its independent
/// counterpart (the dual of its irreducibles) the half-frequency bound.
pub fn verify_descpower(n: u32, dedup: DescDedup) -> Result<DescPowerReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::SizeGuard {
            what: "descendents-of-power-set universe",
            limit: 4,
            got: n as u64,
        });
    }
    let root = dual(&power_set(n)?, Indexing::Canonical)?;
    // size-class structure of the power-set dual: one class of
    // C(n, k) members of size 2^n - 2^(n-k) for each k
    {
        let classes = crate::reduction::size_class_decomposition(&root)?;
        let expected: Vec<(u32, usize)> = (0..=n)
            .map(|k| {
                (
                    (1u32 << n) - (1u32 << (n - k)),
                    crate::family::binomial(n, k) as usize,
                )
            })
            .collect();
        if classes != expected {
            return Err(Error::NotNormalized {
                reason: "power-set dual has unexpected size classes",
            });
        }
    }
    let mut failures = Vec::new();
    let mut nodes_checked = 0;
    let mut level: Vec<SetFamily> = vec![root];
    let mut levels = 0;
    while !level.is_empty() {
        let mut next: Vec<SetFamily> = Vec::new();
        let mut seen_eq: HashSet<SetFamily> = HashSet::new();
        let mut seen_iso: HashSet<CanonicalForm> = HashSet::new();
        for nf in &level {
            nodes_checked += 1;
            let salz = salzborn_check(nf)?;
            let independent_side = dual(&SetFamily::new(nf.irreducibles()?), Indexing::Canonical)?;
            if independent_side.is_degenerate() {
                continue;
            }
            let frankl = frankl_check(&independent_side);
            let parity_ok = frankl.verdict.satisfied();
            if !(salz.holds() && parity_ok) {
                failures.push(nf.clone());
            }
            for m in nf.minimal_sets() {
                let reduced = reduce_normalized(nf, m)?;
                let fresh = match dedup {
                    DescDedup::Equality => seen_eq.insert(reduced.relabel_to_compact()),
                    DescDedup::Canonical => seen_iso.insert(canonical_form(&reduced)),
                };
                if fresh {
                    next.push(reduced);
                }
            }
        }
        level = next;
        if !level.is_empty() {
            levels += 1;
        }
    }
    Ok(DescPowerReport {
        n,
        levels,
        nodes_checked,
        failures,
    })
}

/// Convenience wrapper bundling a profile with its family, for reporting.
pub fn profile_of(family: &SetFamily) -> Result<AxiomProfile> {
    Ok(axiom_profile(&Supratopology::new(family.clone())?))
}

/// Exhaustive census check: every union-closed family over `1..=n` has a
/// half-frequency element unless degenerate, no sharp family is a
/// non-power-set, and every chain certificate validates.
pub fn frequency_sweep(n: u32) -> Result<CrosscheckReport> {
    if n > 4 {
        return Err(Error::SizeGuard {
            what: "frequency sweep universe",
            limit: 4,
            got: n as u64,
        });
    }
    let all = enumerate(&EnumSpec {
        n,
        constraints: Constraints::default(),
        up_to_iso: false,
    })?;
    let mut discrepancies = Vec::new();
    for f in &all {
        if f.is_degenerate() {
            continue;
        }
        let report = frankl_check(f);
        if !report.verdict.satisfied() {
            discrepancies.push(Discrepancy {
                family: f.clone(),
                what: "no half-frequency element".into(),
            });
        }
        if crate::conjectures::poonen_sharp_check(f)?
            == crate::conjectures::PoonenVerdict::SharpNotPowerSet
        {
            discrepancies.push(Discrepancy {
                family: f.clone(),
                what: "sharp family that is not a power set".into(),
            });
        }
        match generalized_chain(f) {
            Ok(cert) => {
                if !cert.validate(f) {
                    discrepancies.push(Discrepancy {
                        family: f.clone(),
                        what: "chain certificate failed validation".into(),
                    });
                }
            }
            Err(e) => discrepancies.push(Discrepancy {
                family: f.clone(),
                what: format!("chain construction failed: {e}"),
            }),
        }
    }
    Ok(CrosscheckReport {
        universe: n,
        families_checked: all.len(),
        normalized_checked: 0,
        discrepancies,
        extra_implications: Vec::new(),
    })
}
