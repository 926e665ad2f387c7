use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use graftpack::clutter::{self, Clutter, MinorOutcome, ObstructionId};
use graftpack::graph::EdgeSet;
use graftpack::json::{ClutterJson, InstanceJson, PlaneJson};
use graftpack::obstruction::{self, SearchBudget};
use graftpack::reduce;
use graftpack::solve::{self, Tau};
use graftpack::verify::{self, VerifyConfig};
use graftpack::{SignedGraft, VertexSet};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "graftpack", version, about = "Exact packing and covering of odd T-joins in signed grafts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum TModeArg {
    Empty,
    Pair,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    OddMinor,
    Tjoin4,
    TwoCommodity,
    PlaneDual,
    CutCover,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClutterOp {
    Blocker,
    Binary,
    Eulerian,
    Minor,
    Cycling,
    Idealness,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum cover size with a witnessing cover.
    Tau(SolveArgs),
    /// Maximum number of pairwise disjoint odd T-joins.
    Nu(SolveArgs),
    /// Exact fractional packing value with primal/dual certificates.
    Nustar(SolveArgs),
    /// τ, ν and certificates together.
    Packs(SolveArgs),
    /// k disjoint sets: ℓ odd st-joins and k−ℓ even st-paths.
    MixedPacking(SolveArgs),
    /// Clutter-level operations.
    Clutter {
        #[arg(value_enum)]
        op: ClutterOp,
        #[arg(long = "in")]
        input: PathBuf,
        /// Obstruction name (l7, o5, bo5, p10) or a clutter JSON file.
        #[arg(long)]
        target: Option<String>,
    },
    /// Signed-graft minor detection.
    Minor {
        #[arg(long = "in")]
        input: PathBuf,
        /// k5t, f7, or a graft JSON file.
        #[arg(long)]
        target: String,
    },
    /// Corollary reductions.
    Reduce {
        #[arg(long, value_enum)]
        kind: ReduceKind,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustive theorem and conjecture verification.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "both")]
        t_mode: TModeArg,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Log one replayable row per instance in the report.
        #[arg(long)]
        log_instances: bool,
        /// Also run the clutter-conjecture sweep.
        #[arg(long)]
        conjectures: bool,
        /// Recompute a logged row (a JSON file) and compare.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Force the brute-force route for cross-checks.
    #[arg(long, value_enum)]
    oracle: Option<OracleMode>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_graft(path: &Path) -> Result<SignedGraft> {
    let inst: InstanceJson = read_json(path)?;
    Ok(inst.to_graft()?)
}

fn tau_value(t: Tau) -> Value {
    match t {
        Tau::Finite(v) => json!(v),
        Tau::NoJoin => json!("no-join"),
    }
}

fn edge_sets(sets: &[EdgeSet]) -> Value {
    json!(sets.iter().map(|s| s.ids()).collect::<Vec<_>>())
}

fn emit(v: Value) -> Result<i32> {
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(0)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Tau(args) => {
            let sg = load_graft(&args.input)?;
            let (t, cover) = match args.oracle {
                Some(OracleMode::Exhaustive) => solve::tau_exhaustive(&sg)?,
                None => solve::tau(&sg)?,
            };
            emit(json!({
                "value": tau_value(t),
                "certificate": cover.map(|c| json!({
                    "cover": c.edges.ids(),
                    "kind": format!("{:?}", c.kind).to_lowercase(),
                })),
            }))
        }
        Command::Nu(args) => {
            let sg = load_graft(&args.input)?;
            let (v, packing) = match args.oracle {
                Some(OracleMode::Exhaustive) => solve::nu_exhaustive(&sg)?,
                None => solve::nu(&sg),
            };
            emit(json!({"value": v, "certificate": {"packing": edge_sets(&packing)}}))
        }
        Command::Nustar(args) => {
            let sg = load_graft(&args.input)?;
            let f = solve::nustar(&sg)?;
            emit(json!({
                "value": f.value.to_string(),
                "certificate": {
                    "weights": f.weights.iter()
                        .map(|(s, w)| json!({"join": s.ids(), "weight": w.to_string()}))
                        .collect::<Vec<_>>(),
                    "fractional_cover": f.cover.iter().map(|y| y.to_string()).collect::<Vec<_>>(),
                },
            }))
        }
        Command::Packs(args) => {
            let sg = load_graft(&args.input)?;
            let r = solve::packs(&sg)?;
            if let Some(OracleMode::Exhaustive) = args.oracle {
                let (t2, _) = solve::tau_exhaustive(&sg)?;
                let (n2, _) = solve::nu_exhaustive(&sg)?;
                if t2 != r.tau || n2 != r.nu {
                    bail!("oracle disagrees: tau {:?} vs {:?}, nu {} vs {}", r.tau, t2, r.nu, n2);
                }
            }
            emit(json!({
                "value": {"tau": tau_value(r.tau), "nu": r.nu, "packs": r.packs},
                "certificate": {
                    "cover": r.cover.map(|c| c.edges.ids()),
                    "packing": edge_sets(&r.packing),
                },
            }))
        }
        Command::MixedPacking(args) => {
            let sg = load_graft(&args.input)?;
            let mp = solve::mixed_packing(&sg)?;
            emit(json!({
                "value": {"cut_size": mp.cut_size, "signature_size": mp.signature_size},
                "certificate": {
                    "odd_joins": edge_sets(&mp.odd_joins),
                    "even_paths": edge_sets(&mp.even_paths),
                },
            }))
        }
        Command::Clutter { op, input, target } => {
            let cj: ClutterJson = read_json(&input)?;
            let c = cj.to_clutter()?;
            match op {
                ClutterOp::Blocker => emit(json!(ClutterJson::from_clutter(&c.blocker()))),
                ClutterOp::Binary => emit(json!({"binary": c.is_binary()})),
                ClutterOp::Eulerian => emit(json!({"eulerian": c.is_eulerian()})),
                ClutterOp::Minor => {
                    let target = target.context("clutter minor needs --target")?;
                    let tgt = resolve_clutter_target(&target)?;
                    let outcome = clutter::has_clutter_minor(&c, &tgt, 1 << 22);
                    emit(minor_outcome_json(&outcome))
                }
                ClutterOp::Cycling => emit(conjecture_json(&clutter::cycling_check(&c))),
                ClutterOp::Idealness => emit(conjecture_json(&clutter::idealness_check(&c))),
            }
        }
        Command::Minor { input, target } => {
            let sg = load_graft(&input)?;
            let tgt = resolve_graft_target(&target)?;
            let outcome = obstruction::has_graft_minor(&sg, &tgt, &SearchBudget::default());
            let v = match outcome {
                MinorOutcome::Found(w) => {
                    let ok = obstruction::verify_graft_witness(&sg, &tgt, &w);
                    json!({
                        "found": true,
                        "witness": {
                            "delete": w.delete,
                            "resign_shore": w.resign_shore,
                            "contract": w.contract,
                            "isomorphism": w.iso,
                        },
                        "replay_verified": ok,
                    })
                }
                MinorOutcome::Absent => json!({"found": false}),
                MinorOutcome::Inconclusive => json!({"found": "inconclusive"}),
            };
            emit(v)
        }
        Command::Reduce { kind, input } => run_reduce(kind, &input),
        Command::Verify {
            max_n,
            max_m,
            t_mode,
            jobs,
            out,
            log_instances,
            conjectures,
            replay,
        } => {
            if let Some(row_path) = replay {
                let row: verify::InstanceRow = read_json(&row_path)?;
                verify::replay_row(&row)?;
                println!("replay ok");
                return Ok(0);
            }
            let cfg = VerifyConfig {
                max_n,
                max_m,
                t_empty: matches!(t_mode, TModeArg::Empty | TModeArg::Both),
                t_pair: matches!(t_mode, TModeArg::Pair | TModeArg::Both),
                jobs,
                log_instances,
            };
            let report = verify::verify_main_theorem(&cfg)?;
            let mut doc = serde_json::to_value(&report)?;
            if conjectures {
                let conj = verify::verify_conjectures(&cfg)?;
                doc["conjectures"] = serde_json::to_value(&conj)?;
            }
            let text = serde_json::to_string_pretty(&doc)?;
            match out {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => println!("{text}"),
            }
            eprintln!(
                "generated {} | eulerian {} | obstruction-free {} | packed {} | no-join {} | skipped {} | counterexamples {}",
                report.generated,
                report.eulerian,
                report.obstruction_free,
                report.packed,
                report.no_join,
                report.skipped_budget,
                report.counterexamples.len()
            );
            Ok(verify::exit_code(&report))
        }
    }
}

fn fixture_dir() -> Option<PathBuf> {
    std::env::var_os("GRAFTPACK_FIXTURE_DIR").map(PathBuf::from)
}

fn resolve_graft_target(name: &str) -> Result<SignedGraft> {
    match name {
        "k5t" | "k5tilde" => Ok(obstruction::k5tilde()),
        "f7" => Ok(obstruction::f7()),
        other => {
            let path = match fixture_dir() {
                Some(dir) if dir.join(other).exists() => dir.join(other),
                _ => PathBuf::from(other),
            };
            load_graft(&path)
        }
    }
}

fn resolve_clutter_target(name: &str) -> Result<Clutter> {
    let builtin = match name {
        "l7" => Some(ObstructionId::L7),
        "o5" => Some(ObstructionId::O5),
        "bo5" | "b(o5)" => Some(ObstructionId::BO5),
        "p10" => Some(ObstructionId::P10),
        _ => None,
    };
    if let Some(id) = builtin {
        return Ok(clutter::catalog(id).clone());
    }
    let path = match fixture_dir() {
        Some(dir) if dir.join(name).exists() => dir.join(name),
        _ => PathBuf::from(name),
    };
    let cj: ClutterJson = read_json(&path)?;
    Ok(cj.to_clutter()?)
}

fn minor_outcome_json(outcome: &MinorOutcome<clutter::ClutterWitness>) -> Value {
    match outcome {
        MinorOutcome::Found(w) => json!({
            "found": true,
            "witness": {"delete": w.delete, "contract": w.contract, "bijection": w.bijection},
        }),
        MinorOutcome::Absent => json!({"found": false}),
        MinorOutcome::Inconclusive => json!({"found": "inconclusive"}),
    }
}

fn conjecture_json(r: &clutter::ConjectureReport) -> Value {
    json!({
        "binary": r.binary,
        "eulerian": r.eulerian,
        "exclusions": r.exclusions.iter().map(|(id, o)| {
            json!({"obstruction": id.name(), "found": matches!(o, MinorOutcome::Found(_))})
        }).collect::<Vec<_>>(),
        "hypothesis": r.hypothesis,
        "tau": r.tau,
        "nu": r.nu,
        "nustar": r.nustar.as_ref().map(|v| v.to_string()),
        "conclusion": r.conclusion,
        "consistent": r.consistent,
    })
}

fn run_reduce(kind: ReduceKind, input: &Path) -> Result<i32> {
    match kind {
        ReduceKind::OddMinor => {
            let inst: InstanceJson = read_json(input)?;
            let g = graftpack::Multigraph::new(inst.n, inst.edges)?;
            let r = reduce::reduce_odd_minor_circuits(&g)?;
            emit(json!({
                "value": {"tau": tau_value(r.tau), "nu": r.nu},
                "certificate": {
                    "transversal": r.cover.map(|c| c.edges.ids()),
                    "odd_circuits": edge_sets(&r.packing),
                },
            }))
        }
        ReduceKind::Tjoin4 => {
            let inst: InstanceJson = read_json(input)?;
            let g = graftpack::Multigraph::new(inst.n, inst.edges)?;
            let r = reduce::reduce_tjoin4(&g, &inst.terminals)?;
            emit(json!({
                "value": r.value,
                "certificate": {
                    "tjoins": edge_sets(&r.joins),
                    "tcut": r.tcut.ids(),
                    "tcut_shore": r.tcut_shore,
                },
            }))
        }
        ReduceKind::TwoCommodity => {
            #[derive(serde::Deserialize)]
            struct TwoCommodityJson {
                n: usize,
                edges: Vec<(usize, usize)>,
                pairs: [(usize, usize); 2],
            }
            let inst: TwoCommodityJson = read_json(input)?;
            let g = graftpack::Multigraph::new(inst.n, inst.edges)?;
            let r = reduce::reduce_two_commodity(
                &g,
                inst.pairs[0].0,
                inst.pairs[0].1,
                inst.pairs[1].0,
                inst.pairs[1].1,
            )?;
            emit(json!({
                "value": r.value,
                "certificate": {
                    "paths": r.paths.iter()
                        .map(|(p, which)| json!({"edges": p.ids(), "pair": which}))
                        .collect::<Vec<_>>(),
                    "disconnecting_set": r.cut.ids(),
                },
            }))
        }
        ReduceKind::PlaneDual => {
            let pj: PlaneJson = read_json(input)?;
            let emb = pj.to_embedding()?;
            let sigma = EdgeSet::from_ids(pj.sigma.iter().copied());
            let terminals = VertexSet::from_ids(pj.terminals.iter().copied());
            let r = reduce::reduce_plane_dual(&emb, sigma, terminals)?;
            let witness = match &r.witness {
                reduce::MinWitness::OddCircuit(c) => json!({"odd_circuit": c.ids()}),
                reduce::MinWitness::OddTJoin(j) => json!({"odd_tjoin": j.ids()}),
            };
            emit(json!({
                "value": r.value,
                "certificate": {
                    "signatures": edge_sets(&r.signatures),
                    "minimizer": witness,
                    "odd_faces": [r.odd_faces.0, r.odd_faces.1],
                },
            }))
        }
        ReduceKind::CutCover => {
            let pj: PlaneJson = read_json(input)?;
            let emb = pj.to_embedding()?;
            let (s, t) = (
                pj.s.context("cut-cover needs \"s\"")?,
                pj.t.context("cut-cover needs \"t\"")?,
            );
            let r = reduce::reduce_cut_cover(&emb, s, t)?;
            emit(json!({
                "value": {"k": r.k, "available": r.available},
                "certificate": {
                    "cuts": edge_sets(&r.cuts),
                    "shores": r.shores,
                    "coloring": r.coloring,
                },
            }))
        }
    }
}
