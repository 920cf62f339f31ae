//! One function per subcommand; each reads its inputs and returns a report.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use obstacle_core::arrangement::Arrangement;
use obstacle_core::bounds::{default_exponent, hhat, lemma1_report, wn_lower_bound, BoundConfig, Wide};
use obstacle_core::geometry::Point;
use obstacle_core::graph::Graph;
use obstacle_core::minimizer::{
    brute_force_fixed, min_obstacles_fixed, obstacle_number_search, slab_report, MinimizeConfig,
    MinimizeResult, Mode, SearchConfig,
};
use obstacle_core::random::{default_range, random_simple_points};
use obstacle_core::representation::{
    per_obstacle_decomposition, verify, Embedding, Obstacle, ObstacleRepresentation, ViolationKind,
};
use obstacle_core::super_order::{
    canonical_sequence, degenerate_count, is_simple, order_type, perturb_to_simple, pstar_sign,
    super_order_type, PerturbConfig, PerturbContext,
};
use obstacle_core::{Rational, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::{face_json, instance_json, parse_instance, points_json, Instance};
use crate::report::Report;
use crate::svg;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    Faces,
    Clusters,
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Faces => Mode::Faces,
            ModeArg::Clusters => Mode::VertexClusters,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Faces => "faces",
            ModeArg::Clusters => "clusters",
        }
    }
}

pub fn load(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Other(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn require_points(inst: &Instance) -> Result<&Embedding<Rational>, CliError> {
    inst.points
        .as_ref()
        .ok_or_else(|| CliError::Precondition("the instance has no \"points\"".into()))
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn sign_value(s: Sign) -> i8 {
    s.as_i8()
}

/// Face-based obstacles of a minimum as JSON, with their boundary walks.
fn minimum_json(result: &MinimizeResult<Rational>) -> Value {
    let arr = &result.arrangement;
    json!({
        "mode": mode_name(result.mode),
        "count": result.count,
        "faces": result.faces,
        "face_geometry": result.face_ids().iter().map(|&f| face_json(arr, f)).collect::<Vec<_>>(),
        "arrangement": arrangement_summary(arr),
    })
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Faces => "faces",
        Mode::VertexClusters => "clusters",
    }
}

fn arrangement_summary(arr: &Arrangement<Rational>) -> Value {
    json!({
        "nodes": arr.nodes().len(),
        "arcs": arr.arc_count(),
        "crossings": arr.crossing_count(),
        "faces": arr.face_count(),
        "components": arr.components(),
        "euler_holds": arr.euler_holds(),
    })
}

fn certificate_json(rep: &ObstacleRepresentation<Rational>) -> Value {
    instance_json(&rep.graph, Some(&rep.embedding), &rep.obstacles)
}

fn certificate_text(rep: &ObstacleRepresentation<Rational>) -> String {
    let mut s = serde_json::to_string_pretty(&certificate_json(rep)).expect("JSON values serialize");
    s.push('\n');
    s
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    /// Instance with points and obstacles.
    pub instance: PathBuf,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let inst = load(&args.instance)?;
    let points = require_points(&inst)?.clone();
    let rep = ObstacleRepresentation::new(inst.graph, points, inst.obstacles)?;
    let results = verify_json(&rep)?;
    Ok(Report::new(
        "verify",
        json!({ "instance": path_str(&args.instance) }),
        None,
        results,
    ))
}

/// Validity report; for a valid representation with obstacles, also checks
/// that the per-obstacle visibility graphs intersect to exactly the edges.
pub fn verify_json(rep: &ObstacleRepresentation<Rational>) -> Result<Value, CliError> {
    let report = verify(rep)?;
    let violations: Vec<Value> = report
        .violations()
        .map(|(p, kind)| {
            json!({
                "pair": [p.u + 1, p.w + 1],
                "kind": match kind {
                    ViolationKind::EdgeBlocked => "edge_blocked",
                    ViolationKind::NonEdgeVisible => "non_edge_visible",
                },
                "blocked_by": one_based(&p.blocked_by),
            })
        })
        .collect();
    let valid = report.is_valid();
    let decomposition = if valid && !rep.obstacles.is_empty() {
        let parts = per_obstacle_decomposition(rep)?;
        let meet = Graph::intersection(rep.graph.n(), &parts);
        json!({
            "edges_per_obstacle": parts.iter().map(Graph::edge_count).collect::<Vec<_>>(),
            "intersection_equals_edges": meet == rep.graph,
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "valid": valid,
        "n": rep.graph.n(),
        "edges": rep.graph.edge_count(),
        "obstacles": rep.obstacles.len(),
        "pairs_checked": report.pairs.len(),
        "violations": violations,
        "decomposition": decomposition,
    }))
}

#[derive(Args, Clone, Debug)]
pub struct MinimizeArgs {
    /// Instance with points; its obstacles are ignored.
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Faces)]
    pub mode: ModeArg,
    /// Perturb a non-simple embedding first instead of failing.
    #[arg(long)]
    pub perturb: bool,
    /// Write the drawing with the chosen faces shaded.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write the certificate as an instance file accepted by `verify`.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Branch-and-bound node limit.
    #[arg(long, default_value_t = MinimizeConfig::default().node_budget)]
    pub node_budget: u64,
    /// Seed for every randomized step.
    #[arg(long, env = "OBSTACLE_SEED", default_value_t = 0)]
    pub seed: u64,
}

pub fn cmd_minimize(args: &MinimizeArgs) -> Result<Report, CliError> {
    let seed = args.seed;
    let inst = load(&args.instance)?;
    let mut points = require_points(&inst)?.clone();
    let mut perturbed = false;
    if !is_simple(&points) {
        if !args.perturb {
            return Err(CliError::Precondition(format!(
                "embedding is not simple ({} degenerate sextuples); rerun with --perturb",
                degenerate_count(&points)
            )));
        }
        points = perturb_to_simple(&points, None, PerturbConfig::with_seed(seed))?.points;
        perturbed = true;
    }
    let cfg = MinimizeConfig {
        mode: args.mode.mode(),
        node_budget: args.node_budget,
    };
    let result = min_obstacles_fixed(&inst.graph, &points, cfg)?;
    let mut results = minimum_json(&result);
    results["perturbed"] = json!(perturbed);
    results["certificate"] = certificate_json(&result.certificate);
    let echo = json!({
        "instance": path_str(&args.instance),
        "mode": args.mode.name(),
        "perturb": args.perturb,
        "svg": args.svg.as_deref().map(path_str),
        "certificate": args.certificate.as_deref().map(path_str),
        "node_budget": args.node_budget,
    });
    Ok(Report::new("minimize", echo, Some(seed), results)
        .with_artifact(args.svg.as_deref(), || {
            svg::render(&result.arrangement, &result.face_ids())
        })
        .with_artifact(args.certificate.as_deref(), || {
            certificate_text(&result.certificate)
        }))
}

#[derive(Args, Clone, Debug)]
pub struct SearchArgs {
    /// Instance without points.
    pub instance: PathBuf,
    /// Number of random embeddings to try.
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Faces)]
    pub mode: ModeArg,
    /// Coordinates are drawn from [0, range]; n^4 by default.
    #[arg(long)]
    pub range: Option<i64>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, env = "OBSTACLE_SEED", default_value_t = 0)]
    pub seed: u64,
}

pub fn cmd_search(args: &SearchArgs) -> Result<Report, CliError> {
    let seed = args.seed;
    let inst = load(&args.instance)?;
    if inst.points.is_some() {
        return Err(CliError::Schema(
            "search takes an instance without \"points\"".into(),
        ));
    }
    let cfg = SearchConfig {
        budget: args.budget,
        seed,
        range: args.range,
        minimize: MinimizeConfig::with_mode(args.mode.mode()),
        ..Default::default()
    };
    let out = obstacle_number_search(&inst.graph, cfg)?;
    let mut results = minimum_json(&out.best);
    results["samples"] = json!(out.samples);
    results["best_sample"] = json!(out.best_sample);
    results["history"] = json!(out.history);
    results["lower_bound"] = json!(usize::from(!inst.graph.is_complete()));
    results["certificate"] = certificate_json(&out.best.certificate);
    let echo = json!({
        "instance": path_str(&args.instance),
        "budget": args.budget,
        "mode": args.mode.name(),
        "range": args.range.unwrap_or_else(|| default_range(inst.graph.n())),
        "svg": args.svg.as_deref().map(path_str),
        "certificate": args.certificate.as_deref().map(path_str),
    });
    Ok(Report::new("search", echo, Some(seed), results)
        .with_artifact(args.svg.as_deref(), || {
            svg::render(&out.best.arrangement, &out.best.face_ids())
        })
        .with_artifact(args.certificate.as_deref(), || {
            certificate_text(&out.best.certificate)
        }))
}

#[derive(Args, Clone, Debug)]
pub struct SotArgs {
    pub first: PathBuf,
    /// Compare against a second point sequence.
    pub second: Option<PathBuf>,
}

fn sot_summary(p: &Embedding<Rational>) -> Value {
    let sigma = super_order_type(p);
    json!({
        "n": p.len(),
        "r": sigma.values().len(),
        "simple": sigma.is_simple(),
        "degenerate": sigma.zero_count(),
        "pstar_sign": sign_value(pstar_sign(p)),
        "order_type": order_type(p).symbols(),
        "super_order_type": sigma.symbols(),
    })
}

pub fn cmd_sot(args: &SotArgs) -> Result<Report, CliError> {
    let a = load(&args.first)?;
    let pa = require_points(&a)?;
    let mut results = json!({ "first": sot_summary(pa) });
    if let Some(second) = &args.second {
        let b = load(second)?;
        let pb = require_points(&b)?;
        let (sa, sb) = (super_order_type(pa), super_order_type(pb));
        results["second"] = sot_summary(pb);
        results["equal"] = json!(sa == sb);
        results["order_types_equal"] = json!(order_type(pa) == order_type(pb));
        results["first_difference"] = match sa.first_difference(&sb) {
            None => Value::Null,
            Some(i) if pa.len() == pb.len() => {
                let e = canonical_sequence(pa.len()).entries()[i];
                json!({
                    "index": i + 1,
                    "sextuple": [[e.a.0 + 1, e.a.1 + 1], [e.b.0 + 1, e.b.1 + 1], [e.c.0 + 1, e.c.1 + 1]],
                    "first": sign_value(sa.values()[i]),
                    "second": sign_value(sb.values()[i]),
                })
            }
            Some(_) => json!({ "index": Value::Null, "reason": "different numbers of points" }),
        };
    }
    let echo = json!({
        "first": path_str(&args.first),
        "second": args.second.as_deref().map(path_str),
    });
    Ok(Report::new("sot", echo, None, results))
}

#[derive(Args, Clone, Debug)]
pub struct PerturbArgs {
    /// Instance with points; point and polygon obstacles are kept visible-equivalent.
    pub instance: PathBuf,
    /// Write the perturbed instance here.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, env = "OBSTACLE_SEED", default_value_t = 0)]
    pub seed: u64,
}

pub fn cmd_perturb(args: &PerturbArgs) -> Result<Report, CliError> {
    let seed = args.seed;
    let inst = load(&args.instance)?;
    let points = require_points(&inst)?;
    if inst.obstacles.iter().any(Obstacle::needs_arrangement) {
        return Err(CliError::Precondition(
            "face obstacles depend on the embedding and cannot be carried through a perturbation".into(),
        ));
    }
    let context = (!inst.obstacles.is_empty()).then_some(PerturbContext {
        graph: &inst.graph,
        obstacles: &inst.obstacles,
    });
    let before = super_order_type(points);
    let checked = context.is_some();
    let out = perturb_to_simple(points, context, PerturbConfig::with_seed(seed))?;
    let after = super_order_type(&out.points);
    let kept = before
        .values()
        .iter()
        .zip(after.values())
        .all(|(b, a)| b.is_zero() || b == a);
    let new_instance = instance_json(&inst.graph, Some(&out.points), &inst.obstacles);
    let results = json!({
        "identity": &out.points == points,
        "degenerate_before": before.zero_count(),
        "degenerate_after": after.zero_count(),
        "nonzero_types_kept": kept,
        "visibility_checked": checked,
        "steps": out.steps.iter().map(|s| json!({
            "vertex": s.vertex + 1,
            "degenerate_before": s.degenerate_before,
            "degenerate_after": s.degenerate_after,
        })).collect::<Vec<_>>(),
        "instance": new_instance,
    });
    let echo = json!({
        "instance": path_str(&args.instance),
        "emit": args.emit.as_deref().map(path_str),
    });
    Ok(
        Report::new("perturb", echo, Some(seed), results.clone()).with_artifact(args.emit.as_deref(), || {
            let mut s = serde_json::to_string_pretty(&results["instance"]).expect("JSON values serialize");
            s.push('\n');
            s
        }),
    )
}

#[derive(Args, Clone, Debug)]
pub struct SlabArgs {
    /// Instance with points whose x-coordinates are distinct.
    pub instance: PathBuf,
    /// Points per slab.
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Faces)]
    pub mode: ModeArg,
}

pub fn cmd_slab(args: &SlabArgs) -> Result<Report, CliError> {
    let inst = load(&args.instance)?;
    let points = require_points(&inst)?;
    let report = slab_report(
        &inst.graph,
        points,
        args.k,
        MinimizeConfig::with_mode(args.mode.mode()),
    )?;
    let slabs: Vec<Value> = report
        .slabs
        .iter()
        .map(|s| {
            json!({
                "vertices": one_based(&s.vertices),
                "edges": s.graph.edge_count(),
                "minimum": s.minimum.count,
                "faces": s.minimum.faces,
                "whole_obstacles_inside": s.whole_obstacles_inside,
                "at_most_whole": s.minimum.count <= report.whole.count,
            })
        })
        .collect();
    let results = json!({
        "k": report.k,
        "m": report.m,
        "order": one_based(&report.order),
        "whole": minimum_json(&report.whole),
        "slabs": slabs,
        "monotone": report.slabs.iter().all(|s| s.minimum.count <= report.whole.count),
    });
    let echo = json!({
        "instance": path_str(&args.instance),
        "k": args.k,
        "mode": args.mode.name(),
    });
    Ok(Report::new("slab", echo, None, results))
}

#[derive(Args, Clone, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// Samples per seed.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Seeds to sample with; repeat the flag for several.
    #[arg(
        long = "seed",
        value_name = "SEED",
        env = "OBSTACLE_SEED",
        default_value = "0"
    )]
    pub seeds: Vec<u64>,
    /// Include every distinct type in the report.
    #[arg(long)]
    pub list: bool,
}

pub fn cmd_census(args: &CensusArgs) -> Result<Report, CliError> {
    if args.n < 3 {
        return Err(CliError::Schema(format!(
            "--n must be at least 3, got {}",
            args.n
        )));
    }
    if args.seeds.is_empty() {
        return Err(CliError::Schema("census needs at least one --seed".into()));
    }
    let seeds = &args.seeds;
    let range = default_range(args.n);
    let r = canonical_sequence(args.n).r();
    let mut all: BTreeSet<String> = BTreeSet::new();
    let mut per_seed = Vec::new();
    for &seed in seeds {
        let mut found: BTreeSet<String> = BTreeSet::new();
        let mut new_at = Vec::new();
        for i in 0..args.samples {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let p = random_simple_points(args.n, range, 16, &mut rng)?;
            if found.insert(super_order_type(&p).symbols()) {
                new_at.push(i + 1);
            }
        }
        per_seed.push(json!({ "seed": seed, "distinct": found.len(), "new_at_sample": new_at }));
        all.extend(found);
    }
    let within = (r as u32) >= usize::BITS || all.len() < (1usize << r);
    let mut results = json!({
        "n": args.n,
        "r": r,
        "per_seed": per_seed,
        "distinct": all.len(),
        "bound_log2": r,
        "within_bound": within,
    });
    if args.list {
        results["types"] = json!(all);
    }
    let echo = json!({ "n": args.n, "samples": args.samples, "seeds": seeds, "list": args.list });
    Ok(Report::new("census", echo, None, results))
}

#[derive(Args, Clone, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: u64,
    /// Slab constant c.
    #[arg(long)]
    pub c: Option<f64>,
    /// Per-slab threshold constant alpha.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Encoding constant of the graph-count bound.
    #[arg(long)]
    pub enc: Option<f64>,
}

fn wide(x: Wide) -> Value {
    json!(f64::from(x))
}

fn conditional(value: Value, on: &[&str]) -> Value {
    json!({ "value": value, "conditional_on": on })
}

pub fn cmd_bounds(args: &BoundsArgs) -> Result<Report, CliError> {
    let d = BoundConfig::default();
    let cfg = BoundConfig {
        c: args.c.unwrap_or(d.c),
        alpha: args.alpha.unwrap_or(d.alpha),
        enc: args.enc.unwrap_or(d.enc),
    };
    let defaults_used: Vec<&str> = [("c", args.c), ("alpha", args.alpha), ("enc", args.enc)]
        .iter()
        .filter(|(_, v)| v.is_none())
        .map(|(k, _)| *k)
        .collect();
    let l = lemma1_report::<Wide>(args.n, cfg)?;
    let g = default_exponent::<Wide>(&cfg);
    let h = hhat(args.n, &g)?;
    let w = wn_lower_bound::<Wide>(args.n, cfg, &g)?;
    let chain = f64::from(l.chain_ln);
    let direct = f64::from(l.direct_ln);
    let rel_gap = if direct != 0.0 {
        ((chain - direct) / direct).abs()
    } else {
        (chain - direct).abs()
    };
    let results = json!({
        "log_base": 2,
        "lemma1": {
            "k": conditional(json!(l.k), &["c"]),
            "m": conditional(json!(l.m), &["c"]),
            "ck2": conditional(wide(l.ck2), &["c"]),
            "ln_mu": conditional(wide(l.ln_mu), &["c"]),
            "mu": conditional(wide(l.mu), &["c"]),
            "ln_one_plus_delta": conditional(wide(l.ln_one_plus_delta), &["c"]),
            "chernoff_trivial": conditional(json!(l.trivial), &["c"]),
            "chain_ln": conditional(json!(chain), &["c"]),
            "direct_ln": conditional(json!(direct), &["c"]),
            "chain_relative_gap": conditional(json!(rel_gap), &["c"]),
            "chain_at_least_direct": conditional(json!(chain >= direct), &["c"]),
            "obstacle_lower_bound": conditional(
                l.obstacle_lower_bound.map_or(Value::Null, wide),
                &["c", "alpha"],
            ),
        },
        "hhat": conditional(json!({ "value": h.value, "vacuous": h.vacuous }), &["enc"]),
        "wn_lower_bound": conditional(
            json!({
                "argument": w.argument,
                "hhat": w.hhat.value,
                "vacuous": w.hhat.vacuous,
                "value": wide(w.value),
            }),
            &["c", "enc"],
        ),
    });
    let echo = json!({
        "n": args.n,
        "c": cfg.c,
        "alpha": cfg.alpha,
        "enc": cfg.enc,
        "defaults_used": defaults_used,
    });
    Ok(Report::new("bounds", echo, None, results))
}

#[derive(Args, Clone, Debug)]
pub struct OrderTypeGapArgs {
    /// Largest number of points; trials use 4..=n.
    #[arg(long, default_value_t = 7)]
    pub n: usize,
    /// Number of trials.
    #[arg(long, default_value_t = 50)]
    pub budget: usize,
    /// Seed for every randomized step.
    #[arg(long, env = "OBSTACLE_SEED", default_value_t = 0)]
    pub seed: u64,
}

const GAP_MOVES: usize = 24;

/// Orientation signs of all triples, computed without the library routine.
fn orientations(p: &Embedding<Rational>) -> Vec<Sign> {
    let pts = p.points();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            for k in (j + 1)..pts.len() {
                let (a, b, c) = (&pts[i], &pts[j], &pts[k]);
                let det = (b.x.clone() - a.x.clone()) * (c.y.clone() - a.y.clone())
                    - (b.y.clone() - a.y.clone()) * (c.x.clone() - a.x.clone());
                out.push(obstacle_core::Scalar::sign(&det));
            }
        }
    }
    out
}

fn nudge(p: &Embedding<Rational>, range: i64, rng: &mut ChaCha8Rng) -> Option<Embedding<Rational>> {
    let v = rng.gen_range(0..p.len());
    let step = (range / 4).max(1);
    let d = Point::from_ints(rng.gen_range(-step..=step), rng.gen_range(-step..=step));
    let mut pts = p.points().to_vec();
    pts[v] = pts[v].add(&d);
    Embedding::new(pts).ok()
}

pub fn cmd_ordertype_gap(args: &OrderTypeGapArgs) -> Result<Report, CliError> {
    let seed = args.seed;
    if args.n < 4 {
        return Err(CliError::Schema(format!(
            "--n must be at least 4, got {}",
            args.n
        )));
    }
    let mut found = Value::Null;
    let mut trials = 0;
    let mut comparisons = 0;
    let mut same_sigma = 0;
    'trials: for t in 0..args.budget {
        trials = t + 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let n = 4 + t % (args.n - 3);
        let graph = Graph::gnp(n, 0.5, &mut rng);
        if graph.is_complete() {
            continue;
        }
        let range = default_range(n);
        let p1 = random_simple_points(n, range, 16, &mut rng)?;
        let ot1 = order_type(&p1);
        let sigma1 = super_order_type(&p1);
        let m1 = min_obstacles_fixed(&graph, &p1, MinimizeConfig::default())?.count;
        let mut current = p1.clone();
        for _ in 0..GAP_MOVES {
            let Some(p2) = nudge(&current, range, &mut rng) else {
                continue;
            };
            if !is_simple(&p2) || order_type(&p2) != ot1 {
                continue;
            }
            current = p2.clone();
            if super_order_type(&p2) == sigma1 {
                same_sigma += 1;
                continue;
            }
            comparisons += 1;
            let m2 = min_obstacles_fixed(&graph, &p2, MinimizeConfig::default())?.count;
            if m2 == m1 {
                continue;
            }
            let b1 = brute_force_fixed(&graph, &p1)?.len();
            let b2 = brute_force_fixed(&graph, &p2)?.len();
            let orientations_equal = orientations(&p1) == orientations(&p2);
            found = json!({
                "n": n,
                "edges": graph.edges().map(|(u, w)| [u + 1, w + 1]).collect::<Vec<_>>(),
                "first": { "points": points_json(p1.points()), "minimum": m1 },
                "second": { "points": points_json(p2.points()), "minimum": m2 },
                "recheck": {
                    "order_types_equal": orientations_equal,
                    "first_minimum": b1,
                    "second_minimum": b2,
                    "confirmed": orientations_equal && b1 == m1 && b2 == m2,
                },
                "super_order_types_equal": super_order_type(&p1) == super_order_type(&p2),
            });
            break 'trials;
        }
    }
    let results = json!({
        "found": !found.is_null(),
        "trials": trials,
        "comparisons": comparisons,
        "skipped_equal_super_order_type": same_sigma,
        "pair": found,
    });
    let echo = json!({ "n": args.n, "budget": args.budget });
    Ok(Report::new("ordertype-gap", echo, Some(seed), results))
}
