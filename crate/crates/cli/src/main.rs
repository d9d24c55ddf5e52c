//! `ucg`: analyse uniform central graphs, compute covering sizes and
//! appendage numbers, build and verify constructions.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ucg::analysis::induced_covering;
use ucg::appendage::{appendage_center_only, appendage_periphery_only, AppendageOptions, OneSidedResult};
use ucg::construction::{build_refined_scaffold, build_scaffold, verify_construction, Scaffold};
use ucg::covering::{
    check_a, check_adp_bdp, check_aprime, check_b, check_bprime, cov_a, cov_profile, decide_cover_k,
    CovValue, Outcome,
};
use ucg::families::{all_fixtures, fig5_refinement};
use ucg::io::{parse_named, scaffold_to_dot, to_dot, to_graph6};
use ucg::oracle::{brute_force_appendage, OracleOutcome};
use ucg::{
    appendage_number, metric_profile, ucg_analysis, AppendageValue, Bounds, ConditionSet, Covering,
    Graph, RefinedCovering,
};

use report::{labels, scaffold_json, usage, write_file, Failure, Input, Report};

#[derive(Parser)]
#[command(name = "ucg", version, about = "Uniform central graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a DOT drawing of the input or witness graph here.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Center, eccentric sets, centered periphery and induced covering.
    Analyze {
        #[arg(long, alias = "periphery")]
        graph: String,
    },
    /// Minimum covering sizes of a periphery graph, or one fixed-size search.
    Cover {
        #[arg(long)]
        periphery: String,
        /// Search for a covering with exactly this many blocks.
        #[arg(long)]
        k: Option<usize>,
        /// Conditions for `--k`, from a, b, a1, b1, a2, b2.
        #[arg(long, default_value = "a", requires = "k")]
        conditions: String,
        /// Search refined coverings even without a2/b2.
        #[arg(long, requires = "k")]
        refine: bool,
    },
    /// Appendage number with a witness graph.
    Append {
        #[arg(long, required_unless_present = "periphery_only")]
        center: Option<String>,
        #[arg(long, required_unless_present = "center_only")]
        periphery: Option<String>,
        /// Only the center is prescribed.
        #[arg(long, conflicts_with_all = ["periphery", "periphery_only"])]
        center_only: bool,
        /// Only the centered periphery is prescribed.
        #[arg(long, conflicts_with = "center")]
        periphery_only: bool,
        /// Always search instead of reading values off diameter and radius.
        #[arg(long)]
        no_fast_paths: bool,
    },
    /// Build a scaffold from a covering and verify it.
    Construct {
        #[arg(long)]
        center: String,
        #[arg(long)]
        periphery: String,
        /// Spine length; defaults to min(diam C, 2), at least 1.
        #[arg(long)]
        rho: Option<usize>,
        /// Depths of the unattached spine to omit.
        #[arg(long, value_delimiter = ',')]
        drop: Vec<usize>,
        /// JSON covering: {"blocks": [[..], ..]}, plus "iota", "q0", "q1" when refined.
        #[arg(long, value_name = "FILE")]
        cover: Option<PathBuf>,
        /// Two-level construction with one split block.
        #[arg(long, conflicts_with_all = ["rho", "drop"])]
        refined: bool,
    },
    /// Brute-force appendage number for small graphs.
    Oracle {
        #[arg(long)]
        center: String,
        #[arg(long)]
        periphery: String,
        #[arg(long, default_value_t = 3)]
        tmax: usize,
        /// Largest number of optional vertex pairs to enumerate over.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Write the named fixture graphs and a manifest.
    Families {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Cover { .. } => "cover",
            Command::Append { .. } => "append",
            Command::Construct { .. } => "construct",
            Command::Oracle { .. } => "oracle",
            Command::Families { .. } => "families",
        }
    }
}

/// What a subcommand hands back: the result payload, a summary for the
/// terminal, an optional drawing and whether the answer is infeasible.
struct Done {
    result: Value,
    summary: String,
    dot: Option<String>,
    infeasible: Option<String>,
}

impl Done {
    fn new(result: Value, summary: String) -> Self {
        Done {
            result,
            summary,
            dot: None,
            infeasible: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Infeasible(msg) => eprintln!("{msg}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let start = Instant::now();
    let bounds = Bounds::from_env();
    let mut report = Report {
        command: cli.command.name(),
        args: std::env::args().skip(1).collect(),
        bounds,
        inputs: Vec::new(),
    };
    let out = dispatch(cli.command, &mut report)?;
    let rendered = report.render(&out.result, start.elapsed());
    let shown = match cli.out.json.as_deref() {
        Some(p) if p == Path::new("-") => &rendered,
        Some(p) => {
            write_file(p, &rendered)?;
            &out.summary
        }
        None => &out.summary,
    };
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{shown}");
    if let Some(p) = &cli.out.dot {
        let dot = out.dot.as_deref().ok_or_else(|| usage("this command has no graph to draw"))?;
        write_file(p, dot)?;
    }
    match out.infeasible {
        Some(msg) => Err(Failure::Infeasible(msg)),
        None => Ok(()),
    }
}

fn dispatch(cmd: Command, report: &mut Report) -> Result<Done, Failure> {
    let bounds = report.bounds;
    match cmd {
        Command::Analyze { graph } => {
            let input = Input::load("graph", &graph)?;
            let out = analyze(&input.graph);
            report.inputs.push(input);
            Ok(out)
        }
        Command::Cover {
            periphery,
            k,
            conditions,
            refine,
        } => {
            let input = Input::load("periphery", &periphery)?;
            let out = match k {
                None => cover_profile(&input.graph, &bounds),
                Some(k) => {
                    let conds: ConditionSet = conditions.parse().map_err(usage)?;
                    cover_k(&input.graph, k, conds, refine, &bounds)?
                }
            };
            report.inputs.push(input);
            Ok(out)
        }
        Command::Append {
            center,
            periphery,
            center_only,
            periphery_only,
            no_fast_paths,
        } => {
            if center_only {
                let c = Input::load("center", center.as_deref().expect("required by clap"))?;
                let out = one_sided(appendage_center_only(&c.graph), "center-only")?;
                report.inputs.push(c);
                return Ok(out);
            }
            if periphery_only {
                let p = Input::load("periphery", periphery.as_deref().expect("required by clap"))?;
                let out = one_sided(appendage_periphery_only(&p.graph), "periphery-only")?;
                report.inputs.push(p);
                return Ok(out);
            }
            let c = Input::load("center", center.as_deref().expect("required by clap"))?;
            let p = Input::load("periphery", periphery.as_deref().expect("required by clap"))?;
            let opts = AppendageOptions {
                table_fast_paths: !no_fast_paths,
                bounds,
            };
            let out = append(&c.graph, &p.graph, &opts)?;
            report.inputs.extend([c, p]);
            Ok(out)
        }
        Command::Construct {
            center,
            periphery,
            rho,
            drop,
            cover,
            refined,
        } => {
            let c = Input::load("center", &center)?;
            let p = Input::load("periphery", &periphery)?;
            let cover_text = match &cover {
                Some(path) => Some(fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?),
                None => None,
            };
            let out = if refined {
                construct_refined(&c.graph, &p.graph, cover_text.as_deref())?
            } else {
                construct_plain(&c.graph, &p.graph, cover_text.as_deref(), rho, &drop)?
            };
            report.inputs.extend([c, p]);
            Ok(out)
        }
        Command::Oracle {
            center,
            periphery,
            tmax,
            bound,
        } => {
            let c = Input::load("center", &center)?;
            let p = Input::load("periphery", &periphery)?;
            let out = oracle(&c.graph, &p.graph, tmax, bound.unwrap_or(bounds.oracle_free_pairs));
            report.inputs.extend([c, p]);
            Ok(out)
        }
        Command::Families { out } => families(&out),
    }
}

fn analyze(g: &Graph) -> Done {
    let a = ucg_analysis(g);
    let induced = match induced_covering(g) {
        Ok(ic) => json!(ic),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let result = json!({
        "analysis": a,
        "center_labels": labels(g, a.center),
        "periphery_labels": labels(g, a.periphery()),
        "centered_periphery_labels": labels(g, a.centered_periphery),
        "induced_covering": induced,
    });
    let summary = format!(
        "ucg: {}\nradius: {}\ndiameter: {}\ncenter: {}\nperiphery: {}\ncentered periphery: {}",
        a.is_ucg,
        a.profile.radius,
        a.profile.diameter,
        labels(g, a.center).join(" "),
        labels(g, a.periphery()).join(" "),
        labels(g, a.centered_periphery).join(" "),
    );
    let mut out = Done::new(result, summary);
    out.dot = Some(to_dot(g));
    out
}

fn cover_profile(p: &Graph, bounds: &Bounds) -> Done {
    let prof = cov_profile(p, bounds);
    let summary = prof
        .entries
        .iter()
        .map(|e| format!("{} = {} ({})", e.which, e.value, e.method))
        .collect::<Vec<_>>()
        .join("\n");
    let mut out = Done::new(json!({ "profile": prof.entries }), summary);
    if prof.entries[0].value == CovValue::Infeasible {
        out.infeasible = Some("no covering passes A: some vertex is adjacent to all others".into());
    }
    out
}

fn cover_k(p: &Graph, k: usize, conds: ConditionSet, refine: bool, bounds: &Bounds) -> Result<Done, Failure> {
    let refine = refine || conds.needs_refinement();
    let dec = decide_cover_k(p, k, conds, refine, bounds).map_err(|e| match e {
        ucg::covering::CoveringError::BoundExceeded { .. } => Failure::Infeasible(e.to_string()),
        _ => usage(e),
    })?;
    let verdict = match &dec.outcome {
        Outcome::Found(_) => "found",
        Outcome::Exhausted => "none",
        Outcome::BudgetExceeded => "budget exceeded",
    };
    let summary = format!("k = {k}, conditions {conds}: {verdict} ({} nodes)", dec.visited);
    let mut out = Done::new(json!({ "decision": dec }), summary);
    if !matches!(dec.outcome, Outcome::Found(_)) {
        out.infeasible = Some(format!("no {k}-block covering with {conds} found"));
    }
    Ok(out)
}

fn value_outcome(value: AppendageValue, result: Value, summary: String, s: Option<&Scaffold>) -> Done {
    let mut out = Done::new(result, summary);
    out.dot = s.map(scaffold_to_dot);
    if value == AppendageValue::Infinite {
        out.infeasible = Some("appendage number is infinite".into());
    }
    out
}

fn append(c: &Graph, p: &Graph, opts: &AppendageOptions) -> Result<Done, Failure> {
    let r = appendage_number(c, p, opts).map_err(|e| Failure::Infeasible(e.to_string()))?;
    let result = json!({
        "value": r.value,
        "case_tag": r.case_tag,
        "kappa": r.kappa,
        "certificates": r.certificates,
        "witness": r.witness.as_ref().map(scaffold_json),
        "verification": r.verification,
    });
    let summary = format!("value: {}\ncase: {}", r.value, r.case_tag);
    Ok(value_outcome(r.value, result, summary, r.witness.as_ref()))
}

fn one_sided(r: Result<OneSidedResult, ucg::appendage::AppendageError>, mode: &str) -> Result<Done, Failure> {
    let r = r.map_err(|e| Failure::Infeasible(e.to_string()))?;
    let result = json!({
        "mode": mode,
        "value": r.value,
        "periphery": r.periphery.as_ref().map(to_graph6),
        "witness": r.witness.as_ref().map(scaffold_json),
        "verification": r.verification,
    });
    let summary = format!("{mode} value: {}", r.value);
    Ok(value_outcome(r.value, result, summary, r.witness.as_ref()))
}

fn default_cover(p: &Graph) -> Result<Covering, Failure> {
    let r = cov_a(p);
    match r.witness {
        Some(w) => Ok(w.covering().clone()),
        None => Err(Failure::Infeasible("no covering passes A: some vertex is adjacent to all others".into())),
    }
}

fn construction_outcome(s: Scaffold, c: &Graph, p: &Graph, mut result: Value) -> Done {
    let rep = verify_construction(&s, c, p);
    result["scaffold"] = scaffold_json(&s);
    result["verification"] = json!(rep);
    let summary = format!(
        "verified: {}\nradius: {}\nadded vertices: {}",
        rep.ok(),
        rep.radius,
        rep.intermediate_count
    );
    let mut out = Done::new(result, summary);
    out.dot = Some(scaffold_to_dot(&s));
    if !rep.ok() {
        out.infeasible = Some("construction does not realize the prescribed center and periphery".into());
    }
    out
}

fn construct_plain(
    c: &Graph,
    p: &Graph,
    cover_text: Option<&str>,
    rho: Option<usize>,
    drop: &[usize],
) -> Result<Done, Failure> {
    let cover = match cover_text {
        Some(t) => serde_json::from_str::<Covering>(t).map_err(|e| usage(format!("covering: {e}")))?,
        None => default_cover(p)?,
    };
    let rho = rho.unwrap_or_else(|| metric_profile(c).diameter.value().map_or(2, |d| d.min(2)).max(1) as usize);
    let s = build_scaffold(c, p, &cover, rho, drop).map_err(usage)?;
    let checks = [check_a, check_b, check_aprime, check_bprime].map(|f| f(p, &cover));
    let result = json!({
        "mode": "spines",
        "rho": rho,
        "drop": drop,
        "covering": cover,
        "conditions": checks,
    });
    Ok(construction_outcome(s, c, p, result))
}

fn construct_refined(c: &Graph, p: &Graph, cover_text: Option<&str>) -> Result<Done, Failure> {
    let rc = match cover_text {
        Some(t) => serde_json::from_str::<RefinedCovering>(t).map_err(|e| usage(format!("covering: {e}")))?,
        None => RefinedCovering::trivial(default_cover(p)?, 0).map_err(usage)?,
    };
    let s = build_refined_scaffold(c, p, &rc).map_err(usage)?;
    let (a2, b2) = check_adp_bdp(p, &rc);
    let result = json!({
        "mode": "refined",
        "covering": rc,
        "conditions": [check_a(p, rc.base()), a2, b2],
    });
    Ok(construction_outcome(s, c, p, result))
}

fn oracle(c: &Graph, p: &Graph, tmax: usize, bound: usize) -> Done {
    match brute_force_appendage(c, p, tmax, bound) {
        Ok(rep) => {
            let summary = match rep.outcome {
                OracleOutcome::Found(t) => format!("found: {t} added vertices ({} graphs examined)", rep.examined),
                OracleOutcome::NotFound(t) => format!("none with up to {t} added vertices ({} graphs examined)", rep.examined),
            };
            let result = json!({
                "outcome": rep.outcome,
                "examined": rep.examined,
                "pair_bound": bound,
                "witness": rep.witness.as_ref().map(to_graph6),
            });
            let mut out = Done::new(result, summary);
            out.dot = rep.witness.as_ref().map(to_dot);
            if let OracleOutcome::NotFound(t) = rep.outcome {
                out.infeasible = Some(format!("no graph with up to {t} added vertices"));
            }
            out
        }
        Err(e) => {
            let mut out = Done::new(json!({ "error": e.to_string(), "pair_bound": bound }), e.to_string());
            out.infeasible = Some(e.to_string());
            out
        }
    }
}

/// Small graphs kept next to the family fixtures for quick command-line use.
const REFERENCE: [&str; 5] = ["2k1", "2k2", "p4", "c4", "c5"];

fn families(dir: &Path) -> Result<Done, Failure> {
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let mut entries = Vec::new();
    let mut emit = |name: &str, g: &Graph, provenance: &str, extras: Value| -> Result<(), Failure> {
        let g6 = to_graph6(g);
        let file = format!("{name}.g6");
        write_file(&dir.join(&file), &format!("{g6}\n"))?;
        entries.push(json!({
            "name": name,
            "file": file,
            "graph6": g6,
            "n": g.n(),
            "labels": (0..g.n()).map(|v| g.label(v)).collect::<Vec<_>>(),
            "provenance": provenance,
            "extras": extras,
        }));
        Ok(())
    };
    for f in all_fixtures() {
        let extras: serde_json::Map<String, Value> = f
            .extras
            .iter()
            .map(|(k, set)| (k.clone(), json!(labels(&f.graph, *set))))
            .collect();
        emit(&f.name, &f.graph, f.provenance, Value::Object(extras))?;
        if let Some(rc) = fig5_refinement(&f) {
            let text = serde_json::to_string_pretty(&rc).expect("covering serializes");
            write_file(&dir.join(format!("{}.cover.json", f.name)), &format!("{text}\n"))?;
        }
    }
    for name in REFERENCE {
        let g = parse_named(name).expect("known name").map_err(usage)?;
        emit(name, &g, "reference graph", json!({}))?;
    }
    let manifest = json!({ "fixtures": entries });
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_file(&dir.join("manifest.json"), &format!("{text}\n"))?;
    let summary = format!("wrote {} fixtures to {}", entries.len(), dir.display());
    Ok(Done::new(manifest, summary))
}
