use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fvslab::enumerate::{for_each_graph, Filters};
use fvslab::io::{read_graphs, to_adjacency, to_graph6};
use fvslab::report::{certificate_json, write_jsonl};
use fvslab::verify::{default_workers, run_verification, Suite, VerifyConfig};
use fvslab_core::construct::{fvs_planar_girth5_with, fvs_subcubic_with, verify_certificate, ConstructConfig};
use fvslab_core::exact::{min_fvs_bruteforce, min_fvs_exact, FvsResult};
use fvslab_core::family::FamilyCatalog;
use fvslab_core::planarity::is_planar;
use fvslab_core::structure::has_girth_at_least;
use fvslab_core::{Error, Graph};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fvs", version, about = "Feedback vertex set bounds: families, solvers and verification runs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Work with the F(i, j) families.
    Families {
        #[command(subcommand)]
        cmd: FamiliesCmd,
    },
    /// Write every graph passing the filters as graph6, one per line.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long = "filter", value_enum, value_delimiter = ',')]
        filters: Vec<FilterArg>,
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve feedback vertex set on every graph in a file.
    Fvs {
        #[command(subcommand)]
        cmd: FvsCmd,
    },
    /// Run a verification suite and write a JSONL report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum FamiliesCmd {
    /// Write `F_i_j.g6` and the sidecar `F_i_j.json` into a directory.
    Generate {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum FvsCmd {
    /// Branch and bound.
    Exact { file: PathBuf },
    /// Subset enumeration.
    Brute { file: PathBuf },
    /// Certified constructive solver.
    Construct {
        file: PathBuf,
        /// Defaults to planar5 for planar graphs of girth at least 5, else subcubic.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long)]
        fallback_exact: bool,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Planar5,
    Subcubic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    Connected,
    Planar,
    Subcubic,
    NoTwoDisjointShortCycles,
    ForbiddenFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bounds,
    FamilyLemmas,
    Claims,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    fallback_exact: bool,
    #[arg(long)]
    report: PathBuf,
    /// Verify the graphs in this file instead of the built-in corpora.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 500)]
    random_count: usize,
    #[arg(long, default_value_t = 24)]
    random_max_n: usize,
    #[arg(long, default_value_t = 12)]
    general_max_n: usize,
    #[arg(long, default_value_t = 16)]
    family_cap: usize,
    #[arg(long, default_value_t = 14)]
    family_fvs_max_n: usize,
    /// Write 0 for every row's millis so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means something checked came out wrong.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Families { cmd: FamiliesCmd::Generate { i, j, out } } => families(i, j, &out),
        Cmd::Enumerate { max_n, filters, girth_min, out } => enumerate(max_n, &filters, girth_min, &out),
        Cmd::Fvs { cmd } => fvs(cmd),
        Cmd::Verify(a) => verify(a),
    }
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?))
}

fn families(i: u32, j: u32, out: &Path) -> anyhow::Result<bool> {
    let mut catalog = FamilyCatalog::new((i + 3 * j) as usize);
    let members = catalog.get(i, j)?;
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut list = create(&out.join(format!("F_{i}_{j}.g6")))?;
    let mut entries = Vec::new();
    for m in members {
        // graph6 has no loops or parallel edges; those two members get adjacency text instead.
        let g6 = to_graph6(&m.graph).ok();
        if let Some(s) = &g6 {
            writeln!(list, "{s}")?;
        }
        let mut e = json!({ "graph6": g6, "degree2_count": m.degree2_count() });
        if g6.is_none() {
            e["adjacency"] = json!(to_adjacency(&m.graph));
        }
        entries.push(e);
    }
    list.flush()?;
    let side = json!({ "i": i, "j": j, "count": members.len(), "members": entries });
    fs::write(out.join(format!("F_{i}_{j}.json")), serde_json::to_string_pretty(&side)? + "\n")?;
    println!("{}", json!({ "i": i, "j": j, "count": members.len() }));
    Ok(true)
}

fn enumerate(max_n: usize, filters: &[FilterArg], girth_min: Option<usize>, out: &Path) -> anyhow::Result<bool> {
    let has = |f| filters.contains(&f);
    let f = Filters {
        connected: has(FilterArg::Connected),
        planar: has(FilterArg::Planar),
        girth_min,
        subcubic: has(FilterArg::Subcubic),
        no_two_disjoint_short_cycles: has(FilterArg::NoTwoDisjointShortCycles),
        forbidden_free: has(FilterArg::ForbiddenFree),
    };
    let mut w = create(out)?;
    let mut count = 0usize;
    let mut failed = None;
    for_each_graph(max_n, &f, |g| {
        if failed.is_none() {
            match to_graph6(g).map_err(anyhow::Error::from).and_then(|s| Ok(writeln!(w, "{s}")?)) {
                Ok(()) => count += 1,
                Err(e) => failed = Some(e),
            }
        }
    })?;
    if let Some(e) = failed {
        return Err(e);
    }
    w.flush()?;
    println!("{}", json!({ "count": count }));
    Ok(true)
}

fn solved(r: &FvsResult, millis: u128) -> serde_json::Value {
    json!({ "size": r.size, "witness": r.witness, "method": r.method.as_str(), "millis": millis })
}

fn fvs(cmd: FvsCmd) -> anyhow::Result<bool> {
    match cmd {
        FvsCmd::Exact { file } => {
            for g in read_graphs(&file)? {
                let t = Instant::now();
                let r = min_fvs_exact(&g)?;
                println!("{}", solved(&r, t.elapsed().as_millis()));
            }
            Ok(true)
        }
        FvsCmd::Brute { file } => {
            for g in read_graphs(&file)? {
                let t = Instant::now();
                let r = min_fvs_bruteforce(&g)?;
                println!("{}", solved(&r, t.elapsed().as_millis()));
            }
            Ok(true)
        }
        FvsCmd::Construct { file, mode, fallback_exact, trace } => {
            let cfg = ConstructConfig { fallback_exact };
            let mut traces = Vec::new();
            let mut all_ok = true;
            for g in read_graphs(&file)? {
                let mode = mode.unwrap_or_else(|| default_mode(&g));
                let t = Instant::now();
                let got = match mode {
                    Mode::Planar5 => fvs_planar_girth5_with(&g, &cfg),
                    Mode::Subcubic => fvs_subcubic_with(&g, &cfg),
                };
                let c = match got {
                    Ok(c) => c,
                    Err(e @ Error::Integrity(_)) => {
                        eprintln!("error: {e}");
                        all_ok = false;
                        continue;
                    }
                    Err(e) => bail!(e),
                };
                let verified = verify_certificate(&g, &c);
                all_ok &= verified;
                println!(
                    "{}",
                    json!({
                        "size": c.witness.len(),
                        "witness": c.witness,
                        "bound_numerator": c.bound_numerator,
                        "r_numerator": c.r_value.numerator(),
                        "fallback_used": c.fallback_used,
                        "verified": verified,
                        "millis": t.elapsed().as_millis(),
                    })
                );
                traces.push(certificate_json(&c));
            }
            if let Some(path) = trace {
                let v = if traces.len() == 1 { traces.pop().expect("one") } else { json!(traces) };
                fs::write(&path, serde_json::to_string_pretty(&v)? + "\n").with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(all_ok)
        }
    }
}

fn default_mode(g: &Graph) -> Mode {
    if g.is_simple() && has_girth_at_least(g, 5) && is_planar(g) {
        Mode::Planar5
    } else {
        Mode::Subcubic
    }
}

fn verify(a: VerifyArgs) -> anyhow::Result<bool> {
    let suite = match a.suite {
        SuiteArg::Bounds => Suite::Bounds,
        SuiteArg::FamilyLemmas => Suite::FamilyLemmas,
        SuiteArg::Claims => Suite::Claims,
        SuiteArg::All => Suite::All,
    };
    let input = a.input.as_deref().map(read_graphs).transpose()?;
    let cfg = VerifyConfig {
        suite,
        max_n: a.max_n,
        seed: a.seed,
        random_count: a.random_count,
        random_max_n: a.random_max_n,
        general_max_n: a.general_max_n,
        family_cap: a.family_cap,
        family_fvs_max_n: a.family_fvs_max_n,
        fallback_exact: a.fallback_exact,
        workers: default_workers(),
        timing: !a.no_timing,
        input,
    };
    let v = run_verification(&cfg)?;
    let mut w = create(&a.report)?;
    write_jsonl(&mut w, &v.header, &v.rows, &v.summary)?;
    w.flush()?;
    let s = &v.summary;
    println!(
        "{}",
        json!({ "suite": suite.as_str(), "rows": s.rows, "pass": s.pass, "fail": s.fail, "fallback": s.fallback,
                "skipped": s.skipped, "failed_checks": s.failed_checks(), "passed": v.passed() })
    );
    Ok(v.passed())
}
