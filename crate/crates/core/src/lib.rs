//! Exact computation on finite union-closed set families.
//!
//! The crate provides:
//!
//! * bitmask-backed families over labeled universes of at most 64 elements
//!   ([`family`]),
//! * generalized-topology point operators and weak separation on
//!   supratopologies ([`topology`]),
//! * decision procedures for the eleven separation axioms between T0 and T1,
//!   each paired with a definition-level oracle ([`axioms`]),
//! * the index-transpose duality, normalized families and their reduction,
//!   child and descendent operators ([`mod@dual`], [`reduction`]),
//! * frequency-conjecture checkers with exact integer arithmetic
//!   ([`conjectures`]),
//! * exhaustive enumeration of union-closed and normalized families on small
//!   universes, backing the brute-force verification sweeps
//!   ([`enumeration`]),
//! * canonical labeling for isomorphism tests ([`canonical`]), a catalogue
//!   of named example spaces ([`catalogue`]), and line-oriented text and
//!   JSON file formats ([`mod@format`]).
//!
//! Every value is immutable after construction and every operation is pure,
//! so results are deterministic and safe to share across threads.
//!
//! ```
//! use unionclosed::{close_under_union, dual, frankl_check, Indexing, SetMask};
//!
//! let generators = [
//!     SetMask::from_labels(&[1, 2])?,
//!     SetMask::from_labels(&[2, 3])?,
//! ];
//! let family = close_under_union(&generators);
//! assert!(family.is_union_closed());
//!
//! // element 2 lies in three of the four members
//! let report = frankl_check(&family);
//! assert_eq!(report.best.map(|e| e.label()), Some(2));
//! assert_eq!((report.frequency, report.total), (3, 4));
//!
//! // the dual of a union-closed family is always normalized
//! let dual_family = dual(&family, Indexing::Canonical)?;
//! assert!(dual_family.is_normalized());
//! # Ok::<(), unionclosed::Error>(())
//! ```

pub mod axioms;
pub mod canonical;
pub mod catalogue;
pub mod conjectures;
pub mod dual;
pub mod enumeration;
mod error;
pub mod family;
pub mod format;
pub mod reduction;
pub mod topology;

pub use axioms::{
    axiom_profile, check_axiom, check_axiom_naive, empirical_extra_implications, hasse_edges,
    replay_witness, verify_hasse, AxiomId, AxiomProfile, AxiomVerdict, HasseViolation, Witness,
};
pub use canonical::{canonical_form, isomorphic, CanonicalForm};
pub use catalogue::{consistent_separation_examples, separation_examples, AxiomExample};
pub use conjectures::{
    binomial_lemma_check, frankl_check, generalized_chain, poonen_equiv_probe, poonen_sharp_check,
    problematic_sets, salzborn_check, salzborn_transfer_check, ChainCertificate, FranklReport,
    FranklVerdict, ParentGrowthReport, PoonenVerdict, SalzbornReport, SalzbornVerdict,
};
pub use dual::{common_element, double_dual_irreducibles, dual, IndexedFamily, Indexing};
pub use enumeration::{
    enumerate, enumerate_naive, enumerate_with, frequency_sweep, oracle_crosscheck,
    random_supratopology, supratopologies, verify_descpower, Constraints, CrosscheckReport,
    DescDedup, DescPowerReport, Discrepancy, EnumSpec,
};
pub use error::{Error, Result};
pub use family::{
    binom_at_least, binomial, close_under_union, power_set, staircase, Element, Predicates,
    Restriction, SetFamily, SetMask, MAX_LABEL,
};
pub use format::{
    family_file_from_json, family_from_json, family_to_json, parse_family, parse_family_file,
    serialize_family, FamilyFile, ParseError,
};
pub use reduction::{
    child, child_step, descendents, eliminate_dependence, least_minimal, reduce_normalized,
    reduction_step, size_class_decomposition, trivial_parent_independent,
    trivial_parent_normalized, Branch, ChildStep, Dedup, DescendentNode, LineageStep,
    ReductionStep,
};
pub use topology::{weakly_separated_scan, Supratopology};
