//! The `paper-suite` subcommand: a fixed regression run over the recorded
//! worked examples. Each item prints one line; exit code 1 only when a check
//! genuinely fails. An item whose recorded expectation is known to be
//! unsatisfiable (see the catalogue notes on the two-petals space) reports
//! `DIVERGES` with both the recorded and the evaluated verdicts.

use serde_json::json;
use std::process::ExitCode;
use unionclosed::*;

pub enum Outcome {
    Pass,
    Diverges(String),
    Fail(String),
}

type Item = (&'static str, fn() -> Outcome);

fn m(labels: &[u32]) -> SetMask {
    SetMask::from_labels(labels).unwrap()
}

fn fam(sets: &[&[u32]]) -> SetFamily {
    SetFamily::new(sets.iter().map(|s| m(s)))
}

fn seven_set_family() -> SetFamily {
    fam(&[&[], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
}

fn expect(cond: bool, detail: &str) -> Outcome {
    if cond {
        Outcome::Pass
    } else {
        Outcome::Fail(detail.to_string())
    }
}

fn item_dual_of_punctured_cube() -> Outcome {
    let d = match dual(&seven_set_family(), Indexing::Canonical) {
        Ok(d) => d,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let expected = fam(&[
        &[],
        &[3, 4, 6],
        &[1, 3, 5, 6],
        &[2, 4, 5, 6],
        &[1, 3, 4, 5, 6],
        &[2, 3, 4, 5, 6],
        &[1, 2, 3, 4, 5, 6],
    ]);
    expect(d == expected && d.is_normalized(), &format!("dual was {d}"))
}

fn item_double_dual_seven_normalized() -> Outcome {
    let n = fam(&[
        &[],
        &[1, 4, 6, 7],
        &[2, 5, 6, 7],
        &[3, 4, 5, 6],
        &[1, 2, 4, 5, 6, 7],
        &[1, 3, 4, 5, 6, 7],
        &[2, 3, 4, 5, 6, 7],
        &[1, 2, 3, 4, 5, 6, 7],
    ]);
    let irr = match n.irreducibles() {
        Ok(i) => i,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if irr != vec![m(&[3, 4, 5, 6]), m(&[1, 4, 6, 7]), m(&[2, 5, 6, 7])] {
        return Outcome::Fail(format!("irreducibles were {irr:?}"));
    }
    let j_dual = match dual(&SetFamily::new(irr), Indexing::Canonical) {
        Ok(d) => d,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if j_dual != power_set(3).unwrap() {
        return Outcome::Fail(format!("dual of irreducibles was {j_dual}"));
    }
    match double_dual_irreducibles(&n) {
        Ok(dd) => expect(dd == n, &format!("double dual was {dd}")),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn item_child_of_punctured_cube() -> Outcome {
    let step = match child_step(&seven_set_family(), None) {
        Ok(s) => s,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let intermediate = fam(&[
        &[],
        &[1, 3, 5],
        &[2, 4, 5],
        &[1, 3, 4, 5],
        &[2, 3, 4, 5],
        &[1, 2, 3, 4, 5],
    ]);
    let expected = fam(&[&[], &[1, 3], &[2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 3, 4]]);
    expect(
        step.reduced_dual == intermediate && step.child == expected,
        &format!("reduced dual {}, child {}", step.reduced_dual, step.child),
    )
}

fn item_irreducible_removal_rejected() -> Outcome {
    let n = fam(&[
        &[],
        &[5, 7],
        &[3, 6, 7],
        &[3, 5, 6, 7],
        &[2, 4, 5, 6, 7],
        &[1, 3, 4, 5, 6, 7],
        &[2, 3, 4, 5, 6, 7],
        &[1, 2, 3, 4, 5, 6, 7],
    ]);
    let big = m(&[1, 3, 4, 5, 6, 7]);
    let rejected = matches!(reduce_normalized(&n, big), Err(Error::NotMinimal { .. }));
    let forced = n.without(big).subtract(m(&[7]));
    let two_vs_four = forced
        .sets()
        .iter()
        .all(|s| s.contains(Element::new(2).unwrap()) == s.contains(Element::new(4).unwrap()));
    expect(
        rejected && !forced.is_separating() && two_vs_four,
        "non-minimal removal was not rejected or separation survived",
    )
}

fn axiom_example_outcome(name: &str) -> Outcome {
    let example = separation_examples()
        .into_iter()
        .find(|e| e.name == name)
        .expect("catalogue entry");
    let space = match Supratopology::new(example.family.clone()) {
        Ok(s) => s,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let profile = axiom_profile(&space);
    let mut divergent = Vec::new();
    for (axiom, expected) in &example.expected {
        let fast = profile.holds(*axiom);
        let naive = match check_axiom_naive(&space, *axiom) {
            Ok(v) => v.holds,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        if fast != naive {
            return Outcome::Fail(format!("deciders disagree on {axiom}"));
        }
        if fast != *expected {
            divergent.push(format!(
                "{axiom} recorded {} but evaluates {}",
                verdict_word(*expected),
                verdict_word(fast)
            ));
        }
    }
    if divergent.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Diverges(divergent.join("; "))
    }
}

fn verdict_word(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn item_binomial_inequality() -> Outcome {
    let anchors = binomial(6, 0) + binomial(6, 1) == 7
        && binomial(6, 0) + binomial(6, 1) + binomial(6, 2) == 22;
    match binomial_lemma_check(6, 30) {
        Ok(true) if anchors => Outcome::Pass,
        Ok(true) => Outcome::Fail("anchor values differ".into()),
        Ok(false) => Outcome::Fail("inequality failed somewhere in 6..=30".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn item_descpower_3() -> Outcome {
    match verify_descpower(3, DescDedup::Equality) {
        Ok(r) if r.clean() => Outcome::Pass,
        Ok(r) => Outcome::Fail(format!("{} failing nodes", r.failures.len())),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn item_staircase_uniqueness() -> Outcome {
    for n in 1..=5 {
        let classes = match enumerate(&EnumSpec {
            n,
            constraints: Constraints {
                normalized: true,
                independent: true,
                ..Constraints::default()
            },
            up_to_iso: true,
        }) {
            Ok(c) => c,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        if classes.len() != 1 || !isomorphic(&classes[0], &staircase(n).unwrap()) {
            return Outcome::Fail(format!("n={n}: {} classes", classes.len()));
        }
    }
    Outcome::Pass
}

fn item_hasse_census_3() -> Outcome {
    let mut families = Vec::new();
    for n in 1..=3 {
        match supratopologies(n) {
            Ok(mut f) => families.append(&mut f),
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    }
    for example in separation_examples() {
        families.push(example.family);
    }
    match verify_hasse(families.iter()) {
        Ok(v) if v.is_empty() => Outcome::Pass,
        Ok(v) => Outcome::Fail(format!("{} violations, first edge {}", v.len(), v[0].edge)),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn item_oracle_crosscheck_3() -> Outcome {
    match oracle_crosscheck(3) {
        Ok(r) if r.clean() => Outcome::Pass,
        Ok(r) => Outcome::Fail(format!("{} discrepancies", r.discrepancies.len())),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn item_dual_size_identity_3() -> Outcome {
    for n in 0..=3 {
        let all = match enumerate(&EnumSpec {
            n,
            constraints: Constraints::default(),
            up_to_iso: false,
        }) {
            Ok(a) => a,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        for l in &all {
            match dual(l, Indexing::Canonical) {
                Ok(d) => {
                    if d.len() != l.len() + 1 - l.empty_indicator() || !d.is_normalized() {
                        return Outcome::Fail(format!("identity fails on {l}"));
                    }
                }
                Err(e) => return Outcome::Fail(e.to_string()),
            }
        }
    }
    Outcome::Pass
}

fn item_reduction_theorem_4() -> Outcome {
    for n in 1..=4 {
        let normalized = match enumerate(&EnumSpec {
            n,
            constraints: Constraints {
                normalized: true,
                ..Constraints::default()
            },
            up_to_iso: true,
        }) {
            Ok(f) => f,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        for f in &normalized {
            for min in f.minimal_sets() {
                match reduce_normalized(f, min) {
                    Ok(r) if r.is_normalized() && r.universe_size() + 1 == n => {}
                    Ok(_) => return Outcome::Fail(format!("{f} minus {min} not one lower")),
                    Err(e) => return Outcome::Fail(format!("{f} minus {min}: {e}")),
                }
            }
        }
    }
    Outcome::Pass
}

fn item_powerset_dual_structure() -> Outcome {
    for n in 3..=5u32 {
        let d = match dual(&power_set(n).unwrap(), Indexing::Canonical) {
            Ok(d) => d,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let classes = match size_class_decomposition(&d) {
            Ok(c) => c,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let expected: Vec<(u32, usize)> = (0..=n)
            .map(|k| ((1u32 << n) - (1u32 << (n - k)), binomial(n, k) as usize))
            .collect();
        if classes != expected {
            return Outcome::Fail(format!("n={n}: size classes {classes:?}"));
        }
        match d.irreducibles() {
            Ok(irr) => {
                if !(irr.len() == n as usize && irr.iter().all(|j| j.len() == 1 << (n - 1))) {
                    return Outcome::Fail(format!("n={n}: irreducible sizes off"));
                }
            }
            Err(e) => return Outcome::Fail(e.to_string()),
        }
        match salzborn_check(&d) {
            Ok(r) if r.holds() && r.sharp() => {}
            _ => return Outcome::Fail(format!("n={n}: irreducible-size bound not sharp")),
        }
    }
    Outcome::Pass
}

fn item_sharp_families_sweep_3() -> Outcome {
    for n in 1..=3 {
        match frequency_sweep(n) {
            Ok(r) if r.clean() => {}
            Ok(r) => return Outcome::Fail(format!("n={n}: {} issues", r.discrepancies.len())),
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    }
    Outcome::Pass
}

fn item_chain_certificates_3() -> Outcome {
    let all = match enumerate(&EnumSpec {
        n: 3,
        constraints: Constraints::default(),
        up_to_iso: false,
    }) {
        Ok(a) => a,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    for f in all.iter().filter(|f| !f.is_degenerate()) {
        match generalized_chain(f) {
            Ok(cert) if cert.validate(f) => {}
            Ok(_) => return Outcome::Fail(format!("invalid certificate for {f}")),
            Err(e) => return Outcome::Fail(format!("{f}: {e}")),
        }
    }
    Outcome::Pass
}

fn items() -> Vec<Item> {
    let mut list: Vec<Item> = vec![
        ("dual-of-punctured-cube", item_dual_of_punctured_cube),
        (
            "double-dual-seven-normalized",
            item_double_dual_seven_normalized,
        ),
        ("child-of-punctured-cube", item_child_of_punctured_cube),
        (
            "irreducible-removal-rejected",
            item_irreducible_removal_rejected,
        ),
    ];
    // one item per catalogued axiom example, in catalogue order
    for example in separation_examples() {
        let f: fn() -> Outcome = match example.name {
            "indiscrete-2" => || axiom_example_outcome("indiscrete-2"),
            "pairs-of-4" => || axiom_example_outcome("pairs-of-4"),
            "staircase-3" => || axiom_example_outcome("staircase-3"),
            "two-blocks-4" => || axiom_example_outcome("two-blocks-4"),
            "co-singletons-3" => || axiom_example_outcome("co-singletons-3"),
            "two-petals-5" => || axiom_example_outcome("two-petals-5"),
            "pointed-3" => || axiom_example_outcome("pointed-3"),
            "tdd-not-tf-4" => || axiom_example_outcome("tdd-not-tf-4"),
            "triples-of-4" => || axiom_example_outcome("triples-of-4"),
            other => panic!("unknown catalogue entry {other}"),
        };
        list.push((axiom_item_name(example.name), f));
    }
    list.extend_from_slice(&[
        (
            "binomial-inequality-sweep",
            item_binomial_inequality as fn() -> Outcome,
        ),
        ("descpower-3", item_descpower_3),
        ("staircase-uniqueness", item_staircase_uniqueness),
        ("hasse-census-3", item_hasse_census_3),
        ("oracle-crosscheck-3", item_oracle_crosscheck_3),
        ("dual-size-identity-3", item_dual_size_identity_3),
        ("reduction-theorem-4", item_reduction_theorem_4),
        ("powerset-dual-structure", item_powerset_dual_structure),
        ("sharp-families-sweep-3", item_sharp_families_sweep_3),
        ("chain-certificates-3", item_chain_certificates_3),
    ]);
    list
}

fn axiom_item_name(name: &str) -> &'static str {
    match name {
        "indiscrete-2" => "axiom-example-indiscrete-2",
        "pairs-of-4" => "axiom-example-pairs-of-4",
        "staircase-3" => "axiom-example-staircase-3",
        "two-blocks-4" => "axiom-example-two-blocks-4",
        "co-singletons-3" => "axiom-example-co-singletons-3",
        "two-petals-5" => "axiom-example-two-petals-5",
        "pointed-3" => "axiom-example-pointed-3",
        "tdd-not-tf-4" => "axiom-example-tdd-not-tf-4",
        "triples-of-4" => "axiom-example-triples-of-4",
        other => panic!("unknown catalogue entry {other}"),
    }
}

pub fn run(filter: Option<&str>, json: bool) -> anyhow::Result<ExitCode> {
    let selected: Vec<Item> = items()
        .into_iter()
        .filter(|(name, _)| filter.is_none_or(|f| *name == f))
        .collect();
    if selected.is_empty() {
        anyhow::bail!("no suite item named {:?}", filter.unwrap_or(""));
    }
    let mut failed = 0usize;
    let mut diverged = 0usize;
    for (name, f) in &selected {
        match f() {
            Outcome::Pass => {
                if json {
                    println!("{}", json!({ "item": name, "status": "pass" }));
                } else {
                    println!("PASS {name}");
                }
            }
            Outcome::Diverges(detail) => {
                diverged += 1;
                if json {
                    println!(
                        "{}",
                        json!({ "item": name, "status": "diverges", "detail": detail })
                    );
                } else {
                    println!("DIVERGES {name}: {detail}");
                }
            }
            Outcome::Fail(detail) => {
                failed += 1;
                if json {
                    println!(
                        "{}",
                        json!({ "item": name, "status": "fail", "detail": detail })
                    );
                } else {
                    println!("FAIL {name}: {detail}");
                }
            }
        }
    }
    let summary = json!({
        "items": selected.len(),
        "passed": selected.len() - failed - diverged,
        "diverged": diverged,
        "failed": failed,
    });
    if json {
        println!("{summary}");
    } else {
        println!(
            "{} items: {} passed, {} diverged, {} failed",
            selected.len(),
            selected.len() - failed - diverged,
            diverged,
            failed
        );
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
