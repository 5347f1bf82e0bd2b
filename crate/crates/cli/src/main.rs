//! `countforge`: exact counting, reductions, and inflation pipelines over
//! small instances, plus the seeded verification harness.
//!
//! Structured results go to standard output as JSON with rationals as
//! strings; reduced/inflated instances are printed in the same text
//! formats the parsers accept, so subcommands compose through files or
//! pipes. Exit code 0 means success (for `verify`: zero failures).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use countforge_cli::formats;
use countforge_cli::verify::{verify_all, verify_suite, Limits, Report};
use countforge_core::exactmath::Rational;
use countforge_core::inflate::{
    bundle_gadget, inflate, path_gadget, theta_graph, wump_graph, ThetaSpec, WumpSpec,
};
use countforge_core::isetred::{indset_to_2sat, sat_to_indset_graph};
use countforge_core::oracles::{
    count_3tmc, count_colourings, count_independent_sets, count_maxcut, count_nae, count_sat,
    permanent, reliability_bruteforce, tutte_subset_sum, z_subset_sum, PermMethod, ZVariant,
};
use countforge_core::permred::sat_to_perm_pm1;
use countforge_core::pipelines::{
    chromatic3_via_linial, coeffs_by_theta, coeffs_by_thickening, coeffs_by_wump,
    maxcut_from_ising, reliability_from_tutte, tmc3_from_z0,
};
use countforge_core::satchain::{nae_to_maxcut, sat_to_nae};
use countforge_core::structures::{Multigraph, TerminalTriple, WeightMap};
use serde_json::json;

#[derive(Parser)]
#[command(name = "countforge", version, about = "Exact counting via graph inflations and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count solutions of an instance by brute force
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Permanent of a square rational matrix
    Perm {
        /// matrix file
        input: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
    },
    /// Multivariate Potts/Tutte partition function
    Z {
        #[command(subcommand)]
        cmd: ZCmd,
    },
    /// Tutte polynomial evaluation
    Tutte {
        #[command(subcommand)]
        cmd: TutteCmd,
    },
    /// Counting reductions between problem classes
    Reduce {
        #[command(subcommand)]
        which: ReduceCmd,
    },
    /// Replace every edge of a graph by a gadget
    Inflate {
        #[command(subcommand)]
        which: InflateCmd,
    },
    /// Coefficient-recovery and counting pipelines
    Pipeline {
        #[command(subcommand)]
        which: PipelineCmd,
    },
    /// Run a named property suite (or `all`) with a seeded RNG
    Verify {
        /// suite name, or `all`
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        /// list registered suite names and exit
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// satisfying assignments of a CNF
    Sat { input: PathBuf },
    /// not-all-equal assignments of a CNF
    Nae { input: PathBuf },
    /// independent sets of a graph
    Is { input: PathBuf },
    /// maximum cuts of a multigraph
    Maxcut { input: PathBuf },
    /// 3-terminal minimum cuts
    #[command(name = "3tmc")]
    Tmc3 {
        input: PathBuf,
        /// three distinct vertices, comma-separated
        #[arg(long, value_parser = parse_terminals)]
        terminals: Terminals,
    },
    /// proper colourings with a fixed palette
    Colourings {
        input: PathBuf,
        #[arg(long)]
        colours: usize,
    },
    /// all-terminal reliability at edge failure probability p
    Reliability {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        p: Rational,
    },
}

#[derive(Subcommand)]
enum ZCmd {
    /// evaluate Z(G; q, w) with uniform edge weight w
    Eval {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        q: Rational,
        /// uniform weight; omitted = use the file's per-edge weights
        #[arg(long, value_parser = parse_rat_arg)]
        w: Option<Rational>,
        #[arg(long, value_enum, default_value_t = VariantArg::Z)]
        variant: VariantArg,
    },
}

#[derive(Subcommand)]
enum TutteCmd {
    /// evaluate T(G; x, y)
    Eval {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        x: Rational,
        #[arg(long, value_parser = parse_rat_arg)]
        y: Rational,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// 3-CNF to a ±1-weighted digraph whose permanent encodes #Sat
    Sat2perm { input: PathBuf },
    /// 3-CNF to the independent-set parity graph
    Sat2is { input: PathBuf },
    /// independent-set instance to its 2-SAT counting form
    Is2sat { input: PathBuf },
    /// CNF to a planted NAE-SAT instance
    Sat2nae { input: PathBuf },
    /// trivariate NAE formula to a max-cut instance
    Nae2maxcut { input: PathBuf },
}

#[derive(Subcommand)]
enum InflateCmd {
    /// replace each edge by a k-path
    Stretch {
        input: PathBuf,
        #[arg(long, value_parser = parse_usize_list)]
        params: UsizeList,
    },
    /// replace each edge by a k-bundle of parallel edges
    Thicken {
        input: PathBuf,
        #[arg(long, value_parser = parse_usize_list)]
        params: UsizeList,
    },
    /// replace each edge by a theta gadget with the given path lengths
    Theta {
        input: PathBuf,
        #[arg(long, value_parser = parse_usize_list)]
        params: UsizeList,
    },
    /// replace each edge by a wump gadget with the given bundle sequence
    Wump {
        input: PathBuf,
        #[arg(long, value_parser = parse_usize_list)]
        params: UsizeList,
    },
}

#[derive(Subcommand)]
enum PipelineCmd {
    /// coefficients of v ↦ Z(G;q,v) via thickenings at a fixed point
    ThickenCoeffs {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        q: Rational,
        #[arg(long, value_parser = parse_rat_arg)]
        w: Rational,
    },
    /// coefficients of v ↦ Z(G;q,v) via theta inflations
    ThetaCoeffs {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        q: Rational,
        #[arg(long, value_parser = parse_rat_arg)]
        w: Rational,
    },
    /// coefficients of v ↦ Z₀(G;0,v) via wump inflations
    WumpCoeffs {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        w: Rational,
    },
    /// cut-size distribution and maximum cut from the Ising point q=2
    MaxcutIsing { input: PathBuf },
    /// 3-terminal minimum cut count recovered from Z₀ at a fixed q
    #[command(name = "3tmc")]
    Tmc3 {
        input: PathBuf,
        #[arg(long, value_parser = parse_terminals)]
        terminals: Terminals,
        #[arg(long, value_parser = parse_rat_arg)]
        q: Rational,
    },
    /// 3-colouring count extracted from chromatic evaluations at q
    Linial {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        q: Rational,
    },
    /// all-terminal reliability through the Tutte-plane route
    Reliability {
        input: PathBuf,
        #[arg(long, value_parser = parse_rat_arg)]
        p: Rational,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Naive,
    Ryser,
    Cycles,
}

impl From<MethodArg> for PermMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Naive => PermMethod::Naive,
            MethodArg::Ryser => PermMethod::Ryser,
            MethodArg::Cycles => PermMethod::CycleCover,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Z,
    Z0,
}

impl From<VariantArg> for ZVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Z => ZVariant::Z,
            VariantArg::Z0 => ZVariant::Z0,
        }
    }
}

#[derive(Clone)]
struct Terminals([usize; 3]);

fn parse_terminals(s: &str) -> Result<Terminals, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated vertex ids".into());
    }
    let mut t = [0usize; 3];
    for (slot, part) in t.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("malformed vertex id: {part}"))?;
    }
    Ok(Terminals(t))
}

#[derive(Clone)]
struct UsizeList(Vec<usize>);

fn parse_usize_list(s: &str) -> Result<UsizeList, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        out.push(
            part.trim()
                .parse()
                .map_err(|_| format!("malformed integer: {part}"))?,
        );
    }
    if out.is_empty() {
        return Err("expected at least one integer".into());
    }
    Ok(UsizeList(out))
}

fn parse_rat_arg(s: &str) -> Result<Rational, String> {
    formats::parse_rational(s, 0).map_err(|e| e.to_string())
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &PathBuf) -> Result<(Multigraph, WeightMap), String> {
    formats::parse_graph(&read(path)?).map_err(|e| e.to_string())
}

fn rat_str(x: &Rational) -> String {
    formats::serialize_rational(x)
}

fn single_param(list: &UsizeList) -> Result<usize, String> {
    match list.0.as_slice() {
        [k] => Ok(*k),
        _ => Err("this gadget takes exactly one integer parameter".into()),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{value}");
}

fn count_json(count: impl ToString) -> serde_json::Value {
    json!({ "count": count.to_string() })
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    let fail = |e: countforge_core::Error| e.to_string();
    match cli.command {
        Command::Count { what } => {
            let value = match what {
                CountCmd::Sat { input } => {
                    let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                    count_json(count_sat(&f).map_err(fail)?)
                }
                CountCmd::Nae { input } => {
                    let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                    count_json(count_nae(&f).map_err(fail)?)
                }
                CountCmd::Is { input } => {
                    let (g, _) = read_graph(&input)?;
                    count_json(count_independent_sets(&g).map_err(fail)?)
                }
                CountCmd::Maxcut { input } => {
                    let (g, _) = read_graph(&input)?;
                    let cut = count_maxcut(&g).map_err(fail)?;
                    json!({ "size": cut.size, "count": cut.count.to_string() })
                }
                CountCmd::Tmc3 { input, terminals } => {
                    let (g, _) = read_graph(&input)?;
                    let t = TerminalTriple::new(g, terminals.0).map_err(fail)?;
                    let cut = count_3tmc(&t).map_err(fail)?;
                    json!({ "size": cut.size, "count": cut.count.to_string() })
                }
                CountCmd::Colourings { input, colours } => {
                    let (g, _) = read_graph(&input)?;
                    count_json(count_colourings(&g, colours).map_err(fail)?)
                }
                CountCmd::Reliability { input, p } => {
                    let (g, _) = read_graph(&input)?;
                    json!({ "value": rat_str(&reliability_bruteforce(&g, &p).map_err(fail)?) })
                }
            };
            print_json(&value);
        }
        Command::Perm { input, method } => {
            let a = formats::parse_matrix(&read(&input)?).map_err(fail)?;
            let per = permanent(&a, method.into()).map_err(fail)?;
            print_json(&json!({ "permanent": rat_str(&per) }));
        }
        Command::Z { cmd } => {
            let ZCmd::Eval { input, q, w, variant } = cmd;
            let (g, file_weights) = read_graph(&input)?;
            let weights = match w {
                Some(w) => WeightMap::uniform(g.edge_count(), w),
                None => file_weights,
            };
            let value = z_subset_sum(&g, &q, &weights, variant.into()).map_err(fail)?;
            print_json(&json!({ "value": rat_str(&value) }));
        }
        Command::Tutte { cmd } => {
            let TutteCmd::Eval { input, x, y } = cmd;
            let (g, _) = read_graph(&input)?;
            let value = tutte_subset_sum(&g, &x, &y).map_err(fail)?;
            print_json(&json!({ "value": rat_str(&value) }));
        }
        Command::Reduce { which } => match which {
            ReduceCmd::Sat2perm { input } => {
                let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                let inst = sat_to_perm_pm1(&f).map_err(fail)?;
                println!("# occurrence_count = {}", inst.occurrence_count);
                print!("{}", formats::serialize_digraph(&inst.digraph));
            }
            ReduceCmd::Sat2is { input } => {
                let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                let inst = sat_to_indset_graph(&f).map_err(fail)?;
                println!("# source_vars = {}", inst.n_src);
                println!("# source_clauses = {}", inst.m_src);
                let ones = WeightMap::ones(inst.graph.edge_count());
                print!("{}", formats::serialize_graph(&inst.graph, &ones).map_err(fail)?);
            }
            ReduceCmd::Is2sat { input } => {
                let (g, _) = read_graph(&input)?;
                let f = indset_to_2sat(&g).map_err(fail)?;
                print!("{}", formats::serialize_cnf(&f));
            }
            ReduceCmd::Sat2nae { input } => {
                let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                let inst = sat_to_nae(&f).map_err(fail)?;
                println!("c relation_constant = {}", inst.relation_constant);
                print!("{}", formats::serialize_cnf(&inst.formula));
            }
            ReduceCmd::Nae2maxcut { input } => {
                let f = formats::parse_cnf(&read(&input)?).map_err(fail)?;
                let (g, k) = nae_to_maxcut(&f).map_err(fail)?;
                println!("# k = {k}");
                let ones = WeightMap::ones(g.edge_count());
                print!("{}", formats::serialize_graph(&g, &ones).map_err(fail)?);
            }
        },
        Command::Inflate { which } => {
            let (input, gadget) = match &which {
                InflateCmd::Stretch { input, params } => {
                    (input, path_gadget(single_param(params)?).map_err(fail)?)
                }
                InflateCmd::Thicken { input, params } => {
                    (input, bundle_gadget(single_param(params)?).map_err(fail)?)
                }
                InflateCmd::Theta { input, params } => {
                    let spec = ThetaSpec::new(params.0.clone()).map_err(fail)?;
                    (input, theta_graph(&spec))
                }
                InflateCmd::Wump { input, params } => {
                    let spec = WumpSpec::new(params.0.clone()).map_err(fail)?;
                    (input, wump_graph(&spec))
                }
            };
            let (g, _) = read_graph(input)?;
            let out = inflate(&g, &gadget).map_err(fail)?;
            let ones = WeightMap::ones(out.edge_count());
            print!("{}", formats::serialize_graph(&out, &ones).map_err(fail)?);
        }
        Command::Pipeline { which } => {
            let value = match which {
                PipelineCmd::ThickenCoeffs { input, q, w } => {
                    let (g, _) = read_graph(&input)?;
                    let coeffs = coeffs_by_thickening(&g, &q, &w, |h| {
                        z_subset_sum(h, &q, &WeightMap::uniform(h.edge_count(), w.clone()), ZVariant::Z)
                    })
                    .map_err(fail)?;
                    json!({ "coefficients": coeffs.coeffs().iter().map(rat_str).collect::<Vec<_>>() })
                }
                PipelineCmd::ThetaCoeffs { input, q, w } => {
                    let (g, _) = read_graph(&input)?;
                    let coeffs = coeffs_by_theta(&g, &q, &w, |h| {
                        z_subset_sum(h, &q, &WeightMap::uniform(h.edge_count(), w.clone()), ZVariant::Z)
                    })
                    .map_err(fail)?;
                    json!({ "coefficients": coeffs.coeffs().iter().map(rat_str).collect::<Vec<_>>() })
                }
                PipelineCmd::WumpCoeffs { input, w } => {
                    let (g, _) = read_graph(&input)?;
                    let zero = Rational::from_integer(0.into());
                    let coeffs = coeffs_by_wump(&g, &w, |h| {
                        z_subset_sum(
                            h,
                            &zero,
                            &WeightMap::uniform(h.edge_count(), w.clone()),
                            ZVariant::Z0,
                        )
                    })
                    .map_err(fail)?;
                    json!({ "coefficients": coeffs.coeffs().iter().map(rat_str).collect::<Vec<_>>() })
                }
                PipelineCmd::MaxcutIsing { input } => {
                    let (g, _) = read_graph(&input)?;
                    let (dist, best) = maxcut_from_ising(&g).map_err(fail)?;
                    let dist: serde_json::Map<String, serde_json::Value> = dist
                        .into_iter()
                        .map(|(size, count)| (size.to_string(), count.to_string().into()))
                        .collect();
                    json!({
                        "distribution": dist,
                        "max_size": best.size,
                        "max_count": best.count.to_string(),
                    })
                }
                PipelineCmd::Tmc3 { input, terminals, q } => {
                    let (g, _) = read_graph(&input)?;
                    let t = TerminalTriple::new(g, terminals.0).map_err(fail)?;
                    count_json(tmc3_from_z0(&t, &q).map_err(fail)?)
                }
                PipelineCmd::Linial { input, q } => {
                    let (g, _) = read_graph(&input)?;
                    let count = chromatic3_via_linial(&g, &q, |h| {
                        Ok(countforge_core::oracles::chromatic_polynomial(h)?.eval(&q))
                    })
                    .map_err(fail)?;
                    count_json(rat_str(&count))
                }
                PipelineCmd::Reliability { input, p } => {
                    let (g, _) = read_graph(&input)?;
                    json!({ "value": rat_str(&reliability_from_tutte(&g, &p).map_err(fail)?) })
                }
            };
            print_json(&value);
        }
        Command::Verify { suite, seed, trials, max_n, max_m, list } => {
            if list {
                for name in countforge_cli::verify::suite_names() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let limits = Limits { trials, max_n, max_m };
            let reports: Vec<Report> = if suite == "all" {
                verify_all(seed, &limits)
            } else {
                vec![verify_suite(&suite, seed, &limits).map_err(fail)?]
            };
            for r in &reports {
                eprintln!(
                    "{:24} {} ({} checks, {:.2?})",
                    r.suite,
                    if r.passed() { "ok" } else { "FAILED" },
                    r.trials,
                    r.elapsed
                );
            }
            let body = if suite == "all" {
                serde_json::to_string(&reports)
            } else {
                serde_json::to_string(&reports[0])
            }
            .map_err(|e| e.to_string())?;
            println!("{body}");
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
