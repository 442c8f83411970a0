//! Named example spaces with their recorded axiom classifications.
//!
//! These are the small spaces that witness the non-implications between the
//! separation axioms; each entry records which axioms it is expected to
//! satisfy and which to fail. They drive the regression suite and double as
//! witnesses that the implication lattice has no further edges beyond the
//! ones it claims, with one exception that is kept under its recorded
//! expectation and flagged by the suite: the five-point space below is
//! recorded as satisfying TUD while failing T0, but covering the shadow of
//! a point by closed sets requires an open set around the point missing the
//! covered one, so TUD forces T0 and the evaluation reports the recorded
//! expectation as unmet.

use crate::axioms::AxiomId;
use crate::family::{binom_at_least, close_under_union, staircase, SetFamily, SetMask};

/// One catalogued space: a family plus expected (axiom, verdict) pairs.
#[derive(Clone, Debug)]
pub struct AxiomExample {
    pub name: &'static str,
    pub family: SetFamily,
    pub expected: Vec<(AxiomId, bool)>,
}

fn m(labels: &[u32]) -> SetMask {
    SetMask::from_labels(labels).unwrap()
}

fn fam(sets: &[&[u32]]) -> SetFamily {
    SetFamily::new(sets.iter().map(|s| m(s)))
}

/// The example catalogue, in presentation order.
pub fn separation_examples() -> Vec<AxiomExample> {
    vec![
        AxiomExample {
            name: "indiscrete-2",
            family: fam(&[&[], &[1, 2]]),
            expected: vec![(AxiomId::TiD, true), (AxiomId::T0, false)],
        },
        AxiomExample {
            name: "pairs-of-4",
            family: binom_at_least(4, 2).unwrap(),
            expected: vec![(AxiomId::T1, true)],
        },
        AxiomExample {
            name: "staircase-3",
            family: staircase(3).unwrap(),
            expected: vec![(AxiomId::TD, true), (AxiomId::T1, false)],
        },
        AxiomExample {
            name: "two-blocks-4",
            family: close_under_union(&[m(&[1, 2]), m(&[3, 4])]),
            expected: vec![(AxiomId::TiD, true), (AxiomId::TUD, false)],
        },
        AxiomExample {
            name: "co-singletons-3",
            family: fam(&[&[], &[1, 3], &[1, 2], &[1, 2, 3]]),
            expected: vec![(AxiomId::TUD, true), (AxiomId::TD, false)],
        },
        AxiomExample {
            name: "two-petals-5",
            family: fam(&[&[], &[1, 2, 3], &[1, 4, 5], &[1, 2, 3, 4, 5]]),
            expected: vec![(AxiomId::TUD, true), (AxiomId::T0, false)],
        },
        AxiomExample {
            name: "pointed-3",
            family: fam(&[&[], &[1, 2], &[1, 3], &[1, 2, 3]]),
            expected: vec![(AxiomId::TYS, true), (AxiomId::TI, false)],
        },
        AxiomExample {
            name: "tdd-not-tf-4",
            family: fam(&[
                &[],
                &[1, 2],
                &[2, 3],
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
                &[1, 2, 3, 4],
            ]),
            expected: vec![(AxiomId::TDD, true), (AxiomId::TF, false)],
        },
        AxiomExample {
            name: "triples-of-4",
            family: binom_at_least(4, 3).unwrap(),
            expected: vec![(AxiomId::T1, true), (AxiomId::TFF, false)],
        },
    ]
}

/// Entries whose recorded expectations match the definitional evaluation;
/// everything except `two-petals-5`.
pub fn consistent_separation_examples() -> Vec<AxiomExample> {
    separation_examples()
        .into_iter()
        .filter(|e| e.name != "two-petals-5")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{axiom_profile, check_axiom_naive};
    use crate::topology::Supratopology;

    #[test]
    fn consistent_examples_classify_as_recorded() {
        for example in consistent_separation_examples() {
            let space = Supratopology::new(example.family.clone()).unwrap();
            let profile = axiom_profile(&space);
            for (axiom, expected) in &example.expected {
                assert_eq!(
                    profile.holds(*axiom),
                    *expected,
                    "{}: {axiom}",
                    example.name
                );
                assert_eq!(
                    check_axiom_naive(&space, *axiom).unwrap().holds,
                    *expected,
                    "{} (naive): {axiom}",
                    example.name
                );
            }
        }
    }

    #[test]
    fn two_petals_expectation_is_unmet_at_a_twin_point() {
        // the recorded expectation says TUD holds here, but points 2 and 3
        // share all neighborhoods, and a closed cover piece for the shadow
        // of 2 would be the complement of an open set containing 2 and
        // missing 3
        let entry = separation_examples()
            .into_iter()
            .find(|e| e.name == "two-petals-5")
            .unwrap();
        let space = Supratopology::new(entry.family.clone()).unwrap();
        let profile = axiom_profile(&space);
        assert!(!profile.holds(AxiomId::T0));
        assert!(!profile.holds(AxiomId::TUD));
        assert!(!check_axiom_naive(&space, AxiomId::TUD).unwrap().holds);
    }
}
