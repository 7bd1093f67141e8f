//! `cocg`: exact spectra of co-centralizer graphs from the command line.
//!
//! Exit codes: 0 all results matched (or plain success), 1 at least one
//! mismatch, 2 invalid input, 3 every requested result was degenerate.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cocg_core::closed_form::{integrality_condition, MatrixKind};
use cocg_core::graph::Graph;
use cocg_core::numeric::{jacobi_spectrum, DEFAULT_MATCH_TOL, DEFAULT_SWEEP_TOL};
use cocg_core::verify::{spectrum_is_integral, verify_family, verify_lemma1, ScanRow};
use cocg_core::{FiniteGroup, GroupSpec, Outcome, VerificationReport};

#[derive(Parser)]
#[command(name = "cocg", version, about = "Co-centralizer graph spectra toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Numeric tolerance for the oracle cross-check (also via COCG_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Number of worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
enum KindArg {
    D,
    #[value(alias = "dl")]
    DL,
    #[value(alias = "dq")]
    DQ,
    All,
}

impl KindArg {
    fn kinds(self) -> Vec<MatrixKind> {
        match self {
            KindArg::D => vec![MatrixKind::D],
            KindArg::DL => vec![MatrixKind::Dl],
            KindArg::DQ => vec![MatrixKind::Dq],
            KindArg::All => MatrixKind::ALL.to_vec(),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Q4n,
    D2m,
    Qd2n,
    M2mn,
    Psl2,
}

#[derive(Args)]
struct FamilyArgs {
    /// Group family.
    #[arg(long, value_enum)]
    family: Family,

    /// Family parameter n (q4n, qd2n, m2mn).
    #[arg(short = 'n', long)]
    n: Option<u32>,

    /// Family parameter m (d2m, m2mn).
    #[arg(short = 'm', long)]
    m: Option<u32>,

    /// Field degree k (psl2).
    #[arg(short = 'k', long)]
    k: Option<u32>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<GroupSpec, String> {
        let spec = match self.family {
            Family::Q4n => GroupSpec::Q4n {
                n: self.n.ok_or("q4n requires -n")?,
            },
            Family::D2m => GroupSpec::D2m {
                m: self.m.ok_or("d2m requires -m")?,
            },
            Family::Qd2n => GroupSpec::Qd2n {
                n: self.n.ok_or("qd2n requires -n")?,
            },
            Family::M2mn => GroupSpec::M2mn {
                m: self.m.ok_or("m2mn requires -m")?,
                n: self.n.ok_or("m2mn requires -n")?,
            },
            Family::Psl2 => GroupSpec::Psl2 {
                k: self.k.ok_or("psl2 requires -k")?,
            },
        };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }

    /// Expand `range` over the family's primary parameter.
    fn grid(&self, range: &str) -> Result<Vec<GroupSpec>, String> {
        let (lo, hi) = parse_range(range)?;
        let specs: Vec<GroupSpec> = (lo..=hi)
            .map(|p| match self.family {
                Family::Q4n => GroupSpec::Q4n { n: p },
                Family::D2m => GroupSpec::D2m { m: p },
                Family::Qd2n => GroupSpec::Qd2n { n: p },
                Family::M2mn => GroupSpec::M2mn {
                    m: p,
                    n: self.n.unwrap_or(1),
                },
                Family::Psl2 => GroupSpec::Psl2 { k: p },
            })
            .collect();
        for s in &specs {
            s.validate().map_err(|e| e.to_string())?;
        }
        Ok(specs)
    }
}

/// Parse an inclusive range written `lo..hi`.
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range must look like 3..40, got {s:?}"))?;
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Cmd {
    /// Print order, center size and centralizer cardinality multiset.
    Group {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Print the exact and numeric spectrum of the co-centralizer graph.
    Spectrum {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = KindArg::D)]
        kind: KindArg,
        /// Write the co-centralizer graph as an edge list to this path.
        #[arg(long)]
        dump_graph: Option<PathBuf>,
    },
    /// Verify closed-form spectra against brute force.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        /// Inclusive parameter range `lo..hi` over the family's primary
        /// parameter, instead of a single instance.
        #[arg(long, alias = "n-range", alias = "range")]
        param_range: Option<String>,
    },
    /// Check the multipartite distance charpoly formula for given parts.
    Lemma1 {
        /// Comma-separated part sizes, e.g. 5,10,6.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
    },
    /// Integrality scan over a parameter range (CSV-friendly).
    Scan {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = KindArg::D)]
        kind: KindArg,
        /// Inclusive parameter range `lo..hi`.
        #[arg(long)]
        range: String,
        /// Cross-check the condition against the exact spectrum for group
        /// orders up to this bound (0 disables).
        #[arg(long, default_value_t = 5000)]
        cross_check_max_order: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {jobs} worker threads");
            return ExitCode::from(2);
        }
    }
    let tol = cli
        .tol
        .or_else(|| std::env::var("COCG_TOL").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_MATCH_TOL);

    let result = run(&cli, tol);
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, tol: f64) -> Result<ExitCode, String> {
    match &cli.cmd {
        Cmd::Group { family } => {
            let spec = family.spec()?;
            let group = FiniteGroup::build(spec).map_err(|e| e.to_string())?;
            let fam = group.proper_centralizer_family().map_err(|e| e.to_string())?;
            let multiset = fam.cardinality_multiset();
            let out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report::group_json(
                    &spec, &group, &multiset,
                ))
                .unwrap(),
                _ => {
                    let classes: Vec<String> = multiset
                        .iter()
                        .map(|(card, count)| format!("{card}:{count}"))
                        .collect();
                    format!(
                        "{spec}\norder: {}\ncenter size: {}\nproper centralizers: {}\ncardinality multiset: {{{}}}",
                        group.order(),
                        group.center().len(),
                        fam.centralizers.len(),
                        classes.join(", ")
                    )
                }
            };
            emit(cli, &out)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Spectrum {
            family,
            kind,
            dump_graph,
        } => {
            let spec = family.spec()?;
            if let Some(path) = dump_graph {
                let group = FiniteGroup::build(spec).map_err(|e| e.to_string())?;
                let fam = group.proper_centralizer_family().map_err(|e| e.to_string())?;
                let cocg = Graph::centralizer_graph(&fam).complement();
                fs::write(path, cocg.to_edge_list()).map_err(|e| e.to_string())?;
            }
            let reports = collect_reports(&[spec], &kind.kinds(), tol)?;
            let mut lines = Vec::new();
            for r in &reports {
                lines.push(render_spectrum(r, cli.format)?);
            }
            emit(cli, &lines.join("\n"))?;
            Ok(aggregate_exit(&reports))
        }

        Cmd::Verify {
            family,
            kind,
            param_range,
        } => {
            let specs = match param_range {
                Some(range) => family.grid(range)?,
                None => vec![family.spec()?],
            };
            let reports = collect_reports(&specs, &kind.kinds(), tol)?;
            let out = match cli.format {
                Format::Json => {
                    let vals: Vec<serde_json::Value> =
                        reports.iter().map(report::report_json).collect();
                    serde_json::to_string_pretty(&vals).unwrap()
                }
                _ => reports
                    .iter()
                    .map(|r| {
                        format!(
                            "{} {}: {}",
                            r.spec,
                            r.kind.name(),
                            r.outcome
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(cli, &out)?;
            Ok(aggregate_exit(&reports))
        }

        Cmd::Lemma1 { parts } => {
            if parts.len() < 2 {
                return Err("lemma1 needs at least two part sizes".into());
            }
            let ok = verify_lemma1(parts).map_err(|e| e.to_string())?;
            emit(cli, &format!("parts {parts:?}: {ok}"))?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Cmd::Scan {
            family,
            kind,
            range,
            cross_check_max_order,
        } => {
            let kinds = kind.kinds();
            if kinds.len() != 1 {
                return Err("scan takes a single --kind (D, DL or DQ)".into());
            }
            let specs = family.grid(range)?;
            let rows: Vec<ScanRow> = specs
                .par_iter()
                .map(|spec| scan_one(spec, kinds[0], *cross_check_max_order))
                .collect::<Result<_, _>>()?;
            let out = match cli.format {
                Format::Json => {
                    let vals: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| report::scan_row_json(family_name(family.family), kinds[0], r))
                        .collect();
                    serde_json::to_string_pretty(&vals).unwrap()
                }
                _ => {
                    let mut lines =
                        vec!["param,kind,condition_holds,spectrum_integral,witness".to_string()];
                    for r in &rows {
                        lines.push(format!(
                            "{},{},{},{},{}",
                            r.param,
                            kinds[0].name(),
                            r.condition_holds,
                            r.spectrum_integral
                                .map_or("".to_string(), |b| b.to_string()),
                            csv_quote(&r.witness)
                        ));
                    }
                    lines.join("\n")
                }
            };
            emit(cli, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Q4n => "q4n",
        Family::D2m => "d2m",
        Family::Qd2n => "qd2n",
        Family::M2mn => "m2mn",
        Family::Psl2 => "psl2",
    }
}

fn scan_one(spec: &GroupSpec, kind: MatrixKind, max_order: u64) -> Result<ScanRow, String> {
    // single-spec version of the library scan, so rows parallelize
    match integrality_condition(spec, kind) {
        Ok(cond) => {
            let exact = if max_order > 0 && spec.order() <= max_order {
                Some(spectrum_is_integral(spec, kind).map_err(|e| e.to_string())?)
            } else {
                None
            };
            Ok(ScanRow {
                param: spec.to_string(),
                condition_holds: cond.holds,
                spectrum_integral: exact,
                witness: cond.condition,
            })
        }
        Err(cocg_core::Error::Degenerate(reason)) => Ok(ScanRow {
            param: spec.to_string(),
            condition_holds: false,
            spectrum_integral: None,
            witness: format!("degenerate: {reason}"),
        }),
        Err(e) => Err(e.to_string()),
    }
}

fn collect_reports(
    specs: &[GroupSpec],
    kinds: &[MatrixKind],
    tol: f64,
) -> Result<Vec<VerificationReport>, String> {
    let jobs: Vec<(GroupSpec, MatrixKind)> = specs
        .iter()
        .flat_map(|s| kinds.iter().map(move |&k| (*s, k)))
        .collect();
    jobs.par_iter()
        .map(|(spec, kind)| verify_family(spec, *kind, tol).map_err(|e| e.to_string()))
        .collect()
}

fn render_spectrum(r: &VerificationReport, format: Format) -> Result<String, String> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&report::report_json(r)).unwrap());
    }
    match &r.outcome {
        Outcome::Degenerate(reason) => Ok(format!(
            "{} {}: degenerate ({reason})",
            r.spec,
            r.kind.name()
        )),
        _ => {
            let claimed = r
                .claimed
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".into());
            let group = FiniteGroup::build(r.spec).map_err(|e| e.to_string())?;
            let fam = group.proper_centralizer_family().map_err(|e| e.to_string())?;
            let cocg = Graph::centralizer_graph(&fam).complement();
            let d = cocg.distance_matrix().map_err(|e| e.to_string())?;
            let matrix = match r.kind {
                MatrixKind::D => d,
                MatrixKind::Dl => cocg_core::graph::dl_matrix(&d),
                MatrixKind::Dq => cocg_core::graph::dq_matrix(&d),
            };
            let numeric = jacobi_spectrum(&matrix, DEFAULT_SWEEP_TOL).map_err(|e| e.to_string())?;
            let nums: Vec<String> = numeric.values.iter().map(|v| format!("{v:.6}")).collect();
            Ok(format!(
                "{} {} ({}):\n  exact:   {}\n  numeric: [{}]",
                r.spec,
                r.kind.name(),
                r.outcome,
                claimed,
                nums.join(", ")
            ))
        }
    }
}

fn aggregate_exit(reports: &[VerificationReport]) -> ExitCode {
    if reports
        .iter()
        .any(|r| matches!(r.outcome, Outcome::Mismatch(_)))
    {
        ExitCode::from(1)
    } else if reports
        .iter()
        .all(|r| matches!(r.outcome, Outcome::Degenerate(_)))
    {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
