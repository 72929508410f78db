//! asmap: structural analysis of AS-level topology maps from the command
//! line. One subcommand per plot or table: summary statistics, rich-club
//! curve, rank-binned link counts, cycle coefficients, synthetic graph
//! generation, attack/error percolation traces, and two-map diffs.
//!
//! Every run drops a `<subcommand>_manifest.json` beside its artifacts with
//! the resolved flags, input checksums, and seed; rerunning with the same
//! inputs reproduces every artifact byte for byte (the manifest timestamp
//! aside).

mod manifest;

use std::collections::BTreeMap;
use std::fs;
use std::fs::File;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use asmap_core::{
    BaParams, Error, Graph, RemovalMode, RemovalTrace, attack_trace, cycle_coefficients,
    diff_maps, error_trace, generate_ba, link_rank_matrix, read_edge_list_file, rich_club_at,
    rich_club_curve, summarize, write_curve_csv, write_edge_list_file,
};

#[derive(Parser)]
#[command(name = "asmap", version, about = "Structural analysis of AS-level topology maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Headline statistics of one map, printed and written as summary.json
    Summary {
        input: PathBuf,
        /// Also fit the degree-distribution tail exponent
        #[arg(long)]
        gamma: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Rich-club coefficient curve as richclub.csv (columns r,phi)
    Richclub {
        input: PathBuf,
        /// Print phi at this normalized rank instead of writing the curve
        #[arg(long)]
        at: Option<f64>,
        /// Log-spaced downsampling target for the curve file
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(2..))]
        points: u32,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Link counts between 5% rank bins as linkdist.csv (bin_i,bin_j,count)
    Linkdist {
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Triangle and rectangle coefficients by rank as cycles_kt.csv and cycles_kr.csv
    Cycles {
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Grow a preferential-attachment graph into generated.edges
    Generate {
        /// Final node count
        #[arg(long)]
        n: usize,
        /// Links added per new node
        #[arg(long)]
        m: usize,
        /// Seed-clique size (default m+1)
        #[arg(long)]
        m0: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Degree-targeted removal trace as attack.csv (columns f,S,mode,seed)
    Attack {
        input: PathBuf,
        /// Deepest removed fraction
        #[arg(long, default_value_t = 0.1)]
        fmax: f64,
        /// Removals between samples (default: ~200 samples)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        step: Option<u64>,
        /// Re-rank surviving degrees after every removal
        #[arg(long)]
        recompute: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Random removal trace averaged over trials, as error.csv
    Error {
        input: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        fmax: f64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        step: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Links in MAP_B missing from MAP_A, classified by MAP_B's rank bins
    Diff {
        map_a: PathBuf,
        map_b: PathBuf,
        /// Rank-prefix fractions for the rich-rich share of missing links
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.05])]
        top: Vec<f64>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(match e {
                Error::Parse { .. } | Error::Io(_) | Error::InvalidParams(_) => 2,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Summary {
            input,
            gamma,
            format,
            out,
        } => cmd_summary(&input, gamma, format, &out),
        Command::Richclub {
            input,
            at,
            points,
            out,
        } => cmd_richclub(&input, at, points as usize, &out),
        Command::Linkdist { input, out } => cmd_linkdist(&input, &out),
        Command::Cycles { input, out } => cmd_cycles(&input, &out),
        Command::Generate { n, m, m0, seed, out } => cmd_generate(n, m, m0, seed, &out),
        Command::Attack {
            input,
            fmax,
            step,
            recompute,
            out,
        } => cmd_attack(&input, fmax, step.map(|s| s as usize), recompute, &out),
        Command::Error {
            input,
            fmax,
            step,
            seed,
            trials,
            out,
        } => cmd_error(&input, fmax, step.map(|s| s as usize), seed, trials as usize, &out),
        Command::Diff {
            map_a,
            map_b,
            top,
            out,
        } => cmd_diff(&map_a, &map_b, &top, &out),
    }
}

/// Loads a map and rejects files that parse to zero nodes; every analysis
/// downstream needs at least one.
fn load_nonempty(path: &Path) -> Result<Graph, Error> {
    let (g, _) = read_edge_list_file(path)?;
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g)
}

fn prepared_out_dir(out: &Path) -> Result<(), Error> {
    fs::create_dir_all(out)?;
    Ok(())
}

fn flag(map: &mut BTreeMap<String, String>, key: &str, value: impl ToString) {
    map.insert(key.to_string(), value.to_string());
}

fn cmd_summary(input: &Path, gamma: bool, format: Format, out: &Path) -> Result<(), Error> {
    prepared_out_dir(out)?;
    let g = load_nonempty(input)?;
    let summary = summarize(&g, gamma);

    match format {
        Format::Json => {
            let body = serde_json::to_string_pretty(&summary).expect("summary is plain data");
            println!("{}", body);
            fs::write(out.join("summary.json"), body + "\n")?;
        }
        Format::Csv => {
            let header = [
                "n_nodes",
                "n_links",
                "k_average",
                "k_max",
                "kt_max",
                "kt_average",
                "kr_max",
                "kr_average",
                "gamma_estimate",
            ];
            let row = vec![
                summary.n_nodes.to_string(),
                summary.n_links.to_string(),
                summary.k_average.to_string(),
                summary.k_max.to_string(),
                summary.kt_max.to_string(),
                summary.kt_average.to_string(),
                summary.kr_max.to_string(),
                summary.kr_average.to_string(),
                summary.gamma_estimate.map_or(String::new(), |v| v.to_string()),
            ];
            let mut buf = Vec::new();
            write_curve_csv(&mut buf, &header, &[row])?;
            let text = String::from_utf8(buf).expect("csv is utf-8");
            print!("{}", text);
            fs::write(out.join("summary.csv"), text)?;
        }
    }

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    flag(&mut flags, "gamma", gamma);
    flag(&mut flags, "format", if format == Format::Json { "json" } else { "csv" });
    flag(&mut flags, "out", out.display());
    manifest::write(out, "summary", flags, &[input], None)?;
    Ok(())
}

fn cmd_richclub(input: &Path, at: Option<f64>, points: usize, out: &Path) -> Result<(), Error> {
    prepared_out_dir(out)?;
    let g = load_nonempty(input)?;

    if let Some(r) = at {
        println!("{}", rich_club_at(&g, r)?);
    } else {
        let curve = rich_club_curve(&g)?;
        let picked = log_spaced(curve.points.len(), points);
        let rows: Vec<Vec<String>> = picked
            .into_iter()
            .map(|i| {
                let p = &curve.points[i];
                vec![p.r.to_string(), p.phi.to_string()]
            })
            .collect();
        write_curve_csv(File::create(out.join("richclub.csv"))?, &["r", "phi"], &rows)?;
    }

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    if let Some(r) = at {
        flag(&mut flags, "at", r);
    }
    flag(&mut flags, "points", points);
    flag(&mut flags, "out", out.display());
    manifest::write(out, "richclub", flags, &[input], None)?;
    Ok(())
}

/// Up to `target` indices into a curve of `len` points, log-spaced from the
/// first point to the last, deduplicated and always including both ends.
fn log_spaced(len: usize, target: usize) -> Vec<usize> {
    if len <= target {
        return (0..len).collect();
    }
    let span = (len as f64).ln();
    let mut picked: Vec<usize> = (0..target)
        .map(|i| {
            let x = (span * i as f64 / (target - 1) as f64).exp();
            ((x - 1.0).round() as usize).min(len - 1)
        })
        .collect();
    picked.dedup();
    picked
}

fn matrix_rows(m: &asmap_core::RankBinMatrix) -> Vec<Vec<String>> {
    (0..asmap_core::metrics::RANK_BINS)
        .flat_map(|i| {
            (0..asmap_core::metrics::RANK_BINS).map(move |j| (i, j))
        })
        .map(|(i, j)| vec![i.to_string(), j.to_string(), m.cell(i, j).to_string()])
        .collect()
}

fn cmd_linkdist(input: &Path, out: &Path) -> Result<(), Error> {
    prepared_out_dir(out)?;
    let g = load_nonempty(input)?;
    let matrix = link_rank_matrix(&g);
    write_curve_csv(
        File::create(out.join("linkdist.csv"))?,
        &["bin_i", "bin_j", "count"],
        &matrix_rows(&matrix),
    )?;

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    flag(&mut flags, "out", out.display());
    manifest::write(out, "linkdist", flags, &[input], None)?;
    Ok(())
}

fn cmd_cycles(input: &Path, out: &Path) -> Result<(), Error> {
    prepared_out_dir(out)?;
    let g = load_nonempty(input)?;
    let table = cycle_coefficients(&g);

    let by_rank = |order: &[u32], value: &dyn Fn(u32) -> u64| -> Vec<Vec<String>> {
        order
            .iter()
            .enumerate()
            .map(|(i, &v)| vec![(i + 1).to_string(), value(v).to_string()])
            .collect()
    };
    write_curve_csv(
        File::create(out.join("cycles_kt.csv"))?,
        &["rank", "kt"],
        &by_rank(&table.kt_rank_order, &|v| table.kt_of(v).unwrap()),
    )?;
    write_curve_csv(
        File::create(out.join("cycles_kr.csv"))?,
        &["rank", "kr"],
        &by_rank(&table.kr_rank_order, &|v| table.kr_of(v).unwrap()),
    )?;

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    flag(&mut flags, "out", out.display());
    manifest::write(out, "cycles", flags, &[input], None)?;
    Ok(())
}

fn cmd_generate(
    n: usize,
    m: usize,
    m0: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<(), Error> {
    prepared_out_dir(out)?;
    let g = generate_ba(BaParams {
        n_final: n,
        m_links: m,
        m0,
        seed,
    })?;
    write_edge_list_file(&g, out.join("generated.edges"))?;

    let mut flags = BTreeMap::new();
    flag(&mut flags, "n", n);
    flag(&mut flags, "m", m);
    flag(&mut flags, "m0", m0.unwrap_or(m + 1));
    flag(&mut flags, "seed", seed);
    flag(&mut flags, "out", out.display());
    manifest::write(out, "generate", flags, &[], Some(seed))?;
    Ok(())
}

fn check_fmax(fmax: f64) -> Result<(), Error> {
    if fmax > 0.0 && fmax <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "fmax must be in (0, 1], got {}",
            fmax
        )))
    }
}

/// Default sampling stride: about 200 points across the removal range.
fn resolve_step(step: Option<usize>, n: usize, fmax: f64) -> usize {
    step.unwrap_or_else(|| {
        let deepest = (fmax * n as f64).floor() as usize;
        (deepest / 200).max(1)
    })
}

fn write_trace_csv(trace: &RemovalTrace, path: &Path) -> Result<(), Error> {
    let (mode, seed) = match trace.mode {
        RemovalMode::Attack => ("attack", String::new()),
        RemovalMode::Error => ("error", trace.seed.expect("error trace has a seed").to_string()),
    };
    let rows: Vec<Vec<String>> = trace
        .points
        .iter()
        .map(|p| vec![p.f.to_string(), p.s.to_string(), mode.to_string(), seed.clone()])
        .collect();
    write_curve_csv(File::create(path)?, &["f", "S", "mode", "seed"], &rows)
}

fn cmd_attack(
    input: &Path,
    fmax: f64,
    step: Option<usize>,
    recompute: bool,
    out: &Path,
) -> Result<(), Error> {
    prepared_out_dir(out)?;
    check_fmax(fmax)?;
    let g = load_nonempty(input)?;
    let step = resolve_step(step, g.node_count(), fmax);
    let trace = attack_trace(&g, fmax, step, recompute);
    write_trace_csv(&trace, &out.join("attack.csv"))?;

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    flag(&mut flags, "fmax", fmax);
    flag(&mut flags, "step", step);
    flag(&mut flags, "recompute", recompute);
    flag(&mut flags, "out", out.display());
    manifest::write(out, "attack", flags, &[input], None)?;
    Ok(())
}

fn cmd_error(
    input: &Path,
    fmax: f64,
    step: Option<usize>,
    seed: u64,
    trials: usize,
    out: &Path,
) -> Result<(), Error> {
    prepared_out_dir(out)?;
    check_fmax(fmax)?;
    let g = load_nonempty(input)?;
    let step = resolve_step(step, g.node_count(), fmax);
    let trace = error_trace(&g, fmax, step, seed, trials);
    write_trace_csv(&trace, &out.join("error.csv"))?;

    let mut flags = BTreeMap::new();
    flag(&mut flags, "input", input.display());
    flag(&mut flags, "fmax", fmax);
    flag(&mut flags, "step", step);
    flag(&mut flags, "seed", seed);
    flag(&mut flags, "trials", trials);
    flag(&mut flags, "out", out.display());
    manifest::write(out, "error", flags, &[input], Some(seed))?;
    Ok(())
}

#[derive(Serialize)]
struct DiffJson {
    common_nodes: usize,
    nodes_only_in_a: usize,
    nodes_only_in_b: usize,
    missing_links: usize,
    links_only_in_a: usize,
    /// Requested prefix fraction -> share of missing links inside it;
    /// zero when nothing is missing.
    rich_rich_fraction: BTreeMap<String, f64>,
}

fn cmd_diff(map_a: &Path, map_b: &Path, top: &[f64], out: &Path) -> Result<(), Error> {
    prepared_out_dir(out)?;
    for &t in top {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "top fraction must be in (0, 1], got {}",
                t
            )));
        }
    }
    let a = load_nonempty(map_a)?;
    let b = load_nonempty(map_b)?;
    let report = diff_maps(&a, &b)?;

    let mut fractions = BTreeMap::new();
    for &t in top {
        let value = if report.missing_links.is_empty() {
            0.0
        } else {
            report.rich_rich_fraction_at(t)?
        };
        fractions.insert(t.to_string(), value);
    }
    let json = DiffJson {
        common_nodes: report.common_nodes,
        nodes_only_in_a: report.nodes_only_in_a,
        nodes_only_in_b: report.nodes_only_in_b,
        missing_links: report.missing_links.len(),
        links_only_in_a: report.links_only_in_a,
        rich_rich_fraction: fractions,
    };
    let body = serde_json::to_string_pretty(&json).expect("report is plain data");
    println!("{}", body);
    fs::write(out.join("diff.json"), body + "\n")?;

    write_curve_csv(
        File::create(out.join("diff_bins.csv"))?,
        &["bin_i", "bin_j", "count"],
        &matrix_rows(&report.missing_bin_matrix),
    )?;
    let mut missing = File::create(out.join("diff_missing.edges"))?;
    for &(u, v) in &report.missing_links {
        writeln!(missing, "{} {}", u, v)?;
    }

    let mut flags = BTreeMap::new();
    flag(&mut flags, "map_a", map_a.display());
    flag(&mut flags, "map_b", map_b.display());
    flag(
        &mut flags,
        "top",
        top.iter().map(f64::to_string).collect::<Vec<_>>().join(","),
    );
    flag(&mut flags, "out", out.display());
    manifest::write(out, "diff", flags, &[map_a, map_b], None)?;
    Ok(())
}
