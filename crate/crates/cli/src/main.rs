//! Command-line front end for the union-closed family toolkit.
//!
//! Exit codes: 0 when everything checked passes, 1 when a checked property
//! fails (the report says which), 2 on input or usage errors.

mod suite;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;
use unionclosed::*;

#[derive(Parser)]
#[command(
    name = "ucf",
    version,
    about = "Exact computations on union-closed set families"
)]
struct Cli {
    /// Emit line-oriented JSON (one object per result) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural predicates and optional property checks for a family.
    Check {
        file: String,
        /// Classify all eleven separation axioms (requires a supratopology).
        #[arg(long)]
        axioms: bool,
        /// Half-frequency check.
        #[arg(long)]
        frankl: bool,
        /// Irreducible-size check (requires a normalized family).
        #[arg(long)]
        salzborn: bool,
        /// Cross-validate the axiom deciders against the definitions.
        #[arg(long)]
        naive: bool,
    },
    /// Dual family.
    Dual {
        file: String,
        #[arg(long, value_enum, default_value_t = IndexingArg::Canonical)]
        indexing: IndexingArg,
    },
    /// Reduce a normalized family by a minimal member.
    Reduce {
        file: String,
        /// Elements of the member to remove, e.g. "3 4 6"; defaults to the
        /// canonical-least minimal member.
        #[arg(long)]
        minimal: Option<String>,
    },
    /// Child of a union-closed family.
    Child {
        file: String,
        /// Minimal member of the dual to remove; canonical-least by default.
        #[arg(long)]
        minimal: Option<String>,
    },
    /// Iterated children.
    Descend {
        file: String,
        #[arg(long)]
        depth: usize,
        /// Explore every minimal-set choice instead of the canonical one.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum)]
        dedup: Option<DedupArg>,
    },
    /// List union-closed families over 1..=n.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        normalized: bool,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// contains-empty, contains-universe, separating or independent.
        #[arg(long = "constraint")]
        constraints: Vec<String>,
    },
    /// Nested-chain certificate for the generalized frequency bound.
    Chain { file: String },
    /// Regression suite over the recorded worked examples.
    PaperSuite {
        /// Run only the item with this exact name.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexingArg {
    /// Sort the members by cardinality, then mask value.
    Canonical,
    /// Use the order in which the file lists the sets.
    Induced,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    /// Merge isomorphic siblings.
    Iso,
    /// Merge label-identical siblings.
    Eq,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn load_family(path: &str) -> anyhow::Result<SetFamily> {
    let text = std::fs::read_to_string(path)?;
    if path.ends_with(".json") {
        Ok(family_from_json(&text)?)
    } else {
        Ok(parse_family(&text)?)
    }
}

fn load_family_file(path: &str) -> anyhow::Result<FamilyFile> {
    let text = std::fs::read_to_string(path)?;
    if path.ends_with(".json") {
        Ok(family_file_from_json(&text)?)
    } else {
        Ok(parse_family_file(&text)?)
    }
}

fn parse_mask_arg(text: &str) -> anyhow::Result<SetMask> {
    let cleaned = text.replace(['{', '}', ','], " ");
    let labels = cleaned
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| anyhow::anyhow!("bad element {t:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(SetMask::from_labels(&labels)?)
}

fn mask_json(s: SetMask) -> serde_json::Value {
    json!(s.elements().map(|e| e.label()).collect::<Vec<_>>())
}

fn family_json_value(f: &SetFamily) -> serde_json::Value {
    serde_json::from_str(&family_to_json(f)).expect("family json is valid")
}

fn print_family(f: &SetFamily, json: bool) {
    if json {
        println!("{}", family_to_json(f));
    } else {
        print!("{}", serialize_family(f));
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Check {
            file,
            axioms,
            frankl,
            salzborn,
            naive,
        } => cmd_check(file, *axioms, *frankl, *salzborn, *naive, cli.json),
        Cmd::Dual { file, indexing } => {
            let family_file = load_family_file(file)?;
            let family = family_file.clone().into_family()?;
            let indexing = match indexing {
                IndexingArg::Canonical => Indexing::Canonical,
                IndexingArg::Induced => {
                    let ordered: Vec<SetMask> = family_file
                        .sets
                        .iter()
                        .copied()
                        .filter(|s| !s.is_empty())
                        .collect();
                    Indexing::Given(IndexedFamily::new(ordered)?)
                }
            };
            let d = dual(&family, indexing)?;
            print_family(&d, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { file, minimal } => {
            let family = load_family(file)?;
            let minimal = match minimal {
                Some(text) => parse_mask_arg(text)?,
                None => least_minimal(&family)
                    .ok_or_else(|| anyhow::anyhow!("family has no non-empty member"))?,
            };
            let reduced = reduce_normalized(&family, minimal)?;
            print_family(&reduced, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Child { file, minimal } => {
            let family = load_family(file)?;
            let minimal = match minimal {
                Some(text) => Some(parse_mask_arg(text)?),
                None => None,
            };
            let c = child(&family, minimal)?;
            print_family(&c, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Descend {
            file,
            depth,
            all,
            dedup,
        } => {
            let family = load_family(file)?;
            let branch = if *all { Branch::All } else { Branch::First };
            let dedup = match dedup {
                None => Dedup::None,
                Some(DedupArg::Iso) => Dedup::Canonical,
                Some(DedupArg::Eq) => Dedup::Equality,
            };
            let nodes = descendents(&family, *depth, branch, dedup)?;
            for node in &nodes {
                if cli.json {
                    let lineage: Vec<serde_json::Value> = node
                        .lineage
                        .iter()
                        .map(|step| {
                            json!({
                                "minimal": mask_json(step.minimal_set),
                                "removed": step.removed_element.label(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "depth": node.depth,
                            "size": node.family.len(),
                            "family": family_json_value(&node.family),
                            "lineage": lineage,
                        })
                    );
                } else {
                    println!(
                        "depth={} size={} {}",
                        node.depth,
                        node.family.len(),
                        node.family
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate {
            n,
            normalized,
            iso,
            constraints,
        } => {
            let mut c = Constraints {
                normalized: *normalized,
                ..Constraints::default()
            };
            for raw in constraints {
                match raw.as_str() {
                    "contains-empty" => c.contains_empty = true,
                    "contains-universe" => c.contains_universe = true,
                    "separating" => c.separating = true,
                    "independent" => c.independent = true,
                    other => anyhow::bail!("unknown constraint {other:?}"),
                }
            }
            let spec = EnumSpec {
                n: *n,
                constraints: c,
                up_to_iso: *iso,
            };
            let mut count = 0usize;
            let json = cli.json;
            enumerate_with(&spec, &mut |f| {
                count += 1;
                if json {
                    println!("{}", family_to_json(f));
                } else {
                    println!("{f}");
                }
            })?;
            if json {
                println!("{}", json!({ "count": count }));
            } else {
                println!("count: {count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chain { file } => {
            let family = load_family(file)?;
            match generalized_chain(&family) {
                Ok(cert) => {
                    let valid = cert.validate(&family);
                    for (i, (link, count)) in cert.chain.iter().zip(cert.counts.iter()).enumerate()
                    {
                        if cli.json {
                            println!(
                                "{}",
                                json!({
                                    "k": i + 1,
                                    "set": mask_json(*link),
                                    "count": count,
                                    "total": cert.total,
                                })
                            );
                        } else {
                            println!(
                                "k={} set={} contained in {} of {} members",
                                i + 1,
                                link,
                                count,
                                cert.total
                            );
                        }
                    }
                    if cli.json {
                        println!(
                            "{}",
                            json!({ "certificate": if valid { "valid" } else { "invalid" } })
                        );
                    } else {
                        println!("certificate: {}", if valid { "valid" } else { "invalid" });
                    }
                    Ok(if valid {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_CHECK_FAILED)
                    })
                }
                Err(Error::QuotientWithoutHalfFrequency { quotient }) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "certificate": "failed",
                                "quotient": family_json_value(&quotient),
                            })
                        );
                    } else {
                        println!("certificate: failed");
                        println!("quotient without a half-frequency element: {quotient}");
                    }
                    Ok(ExitCode::from(EXIT_CHECK_FAILED))
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::PaperSuite { filter } => suite::run(filter.as_deref(), cli.json),
    }
}

fn cmd_check(
    file: &str,
    axioms: bool,
    frankl: bool,
    salzborn: bool,
    naive: bool,
    json: bool,
) -> anyhow::Result<ExitCode> {
    let family = load_family(file)?;
    let mut failed = false;

    let p = family.predicates();
    if json {
        println!(
            "{}",
            json!({
                "check": "predicates",
                "union_closed": p.is_union_closed,
                "separating": p.is_separating,
                "normalized": p.is_normalized,
                "independent": p.is_independent,
                "members": family.len(),
                "universe": mask_json(family.universe()),
            })
        );
    } else {
        println!("members: {}  universe: {}", family.len(), family.universe());
        println!("union-closed: {}", yes_no(p.is_union_closed));
        println!("separating: {}", yes_no(p.is_separating));
        println!("normalized: {}", yes_no(p.is_normalized));
        println!("independent: {}", yes_no(p.is_independent));
    }

    if axioms || naive {
        let space = Supratopology::new(family.clone())?;
        let profile = axiom_profile(&space);
        for (axiom, verdict) in profile.iter() {
            let naive_verdict = if naive {
                let nv = check_axiom_naive(&space, axiom)?;
                if nv.holds != verdict.holds {
                    failed = true;
                }
                Some(nv.holds)
            } else {
                None
            };
            if json {
                let mut obj = json!({
                    "check": "axiom",
                    "axiom": axiom.name(),
                    "holds": verdict.holds,
                });
                if let Some(w) = verdict.witness {
                    obj["witness"] = json!(w.to_string());
                }
                if let Some(nh) = naive_verdict {
                    obj["naive"] = json!(nh);
                    obj["agrees"] = json!(nh == verdict.holds);
                }
                println!("{obj}");
            } else {
                let mut line = format!(
                    "{}: {}",
                    axiom,
                    if verdict.holds { "holds" } else { "fails" }
                );
                if let Some(w) = verdict.witness {
                    line.push_str(&format!(" ({w})"));
                }
                if let Some(nh) = naive_verdict {
                    line.push_str(if nh == verdict.holds {
                        "  [definition agrees]"
                    } else {
                        "  [DEFINITION DISAGREES]"
                    });
                }
                println!("{line}");
            }
        }
    }

    if frankl {
        let r = frankl_check(&family);
        if !r.verdict.satisfied() && r.verdict != FranklVerdict::Excluded {
            failed = true;
        }
        if json {
            println!(
                "{}",
                json!({
                    "check": "frankl",
                    "verdict": format!("{:?}", r.verdict).to_lowercase(),
                    "best": r.best.map(|e| e.label()),
                    "frequency": r.frequency,
                    "total": r.total,
                })
            );
        } else {
            match r.best {
                Some(b) => println!(
                    "half-frequency: {} (element {} in {} of {} members)",
                    format!("{:?}", r.verdict).to_lowercase(),
                    b,
                    r.frequency,
                    r.total
                ),
                None => println!("half-frequency: excluded (degenerate family)"),
            }
        }
    }

    if salzborn {
        let r = salzborn_check(&family)?;
        if r.verdict == SalzbornVerdict::Fails {
            failed = true;
        }
        if json {
            println!(
                "{}",
                json!({
                    "check": "salzborn",
                    "verdict": format!("{:?}", r.verdict).to_lowercase(),
                    "witness": r.witness.map(mask_json),
                    "witness_size": r.witness_size,
                    "total": r.total,
                    "sharp": r.sharp(),
                })
            );
        } else {
            match r.witness {
                Some(w) => println!(
                    "irreducible-size: {} (witness {} of size {}, {} members{})",
                    format!("{:?}", r.verdict).to_lowercase(),
                    w,
                    r.witness_size,
                    r.total,
                    if r.sharp() { ", sharp" } else { "" }
                ),
                None => println!("irreducible-size: excluded (no irreducibles)"),
            }
        }
    }

    Ok(if failed {
        ExitCode::from(EXIT_CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
