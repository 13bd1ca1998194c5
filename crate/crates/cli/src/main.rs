//! Command-line surface for the analysis engine: family generation,
//! invariant reports, peel colourings, rainbow-neighbourhood numbers,
//! perfection checks, the claim suite, and the conjecture search.
//!
//! Reports go to stdout as JSON lines (or CSV where supported); timings and
//! diagnostics go to stderr, so stdout is byte-identical across runs with the
//! same arguments and seed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rainbow_graphs::claims::{
    self, conjecture_search, registry, run_check, CheckResult, ConjectureOptions, RunOptions,
};
use rainbow_graphs::colourings::{
    convention_colouring, imax_colouring, is_proper, Colouring, ColouringTrace, PeelMode,
};
use rainbow_graphs::corpus::parse_graph6_text;
use rainbow_graphs::generators::{
    complete, cycle, empty_sun, null, path, set_graph, sunlet, thorn_complete, ThornSpec,
};
use rainbow_graphs::invariants::{
    chromatic_number_with_budget, clique_number, count_maximum_cliques,
    count_maximum_independent_sets, independence_number, DEFAULT_CHI_BUDGET,
};
use rainbow_graphs::perfection::{perfection_report, PerfectionReport};
use rainbow_graphs::rainbow::{rainbow_bounds, rainbow_vertices};
use rainbow_graphs::{graph6, Graph};

const EXIT_OK: u8 = 0;
/// Usage and input errors; clap uses the same code for its own parse errors.
const EXIT_USAGE: u8 = 2;
/// A report field was cut off by a solver or partition budget.
const EXIT_PARTIAL: u8 = 3;

/// Minimum colourings enumerated for rainbow extremes when no --partitions
/// budget is given; hitting it marks the report partial rather than running
/// unbounded.
const DEFAULT_PARTITION_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "rainbow-graphs",
    version,
    about = "Exact colouring, rainbow-neighbourhood, and perfection analysis for small graphs"
)]
struct Cli {
    /// Worker threads for corpus scans (default: RAINBOW_GRAPHS_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family member as a graph6 line.
    Gen {
        /// set-graph | path | cycle | complete | null | sunlet | empty-sun |
        /// thorn-complete
        family: String,
        /// Size parameter of the family.
        #[arg(short = 'n', long)]
        n: u32,
        /// Pendant counts for thorn-complete, comma-separated (default 1,2,..,n).
        #[arg(short = 't', long, value_delimiter = ',')]
        t: Option<Vec<u32>>,
    },
    /// Full invariant report: degrees, clique and independence data, chromatic
    /// and peel colour counts, rainbow numbers, perfection verdicts.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        /// Node budget for the chromatic-number search.
        #[arg(long)]
        budget: Option<u64>,
        /// Cap on minimum colourings enumerated for the rainbow extremes.
        #[arg(long)]
        partitions: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Run one peel-colouring protocol and print the colouring with its trace.
    Colour {
        #[command(flatten)]
        input: GraphInput,
        /// imax breaks ties toward small residual independence number,
        /// convention toward large.
        #[arg(long, value_enum, default_value = "imax")]
        protocol: Protocol,
        /// deterministic uses the lowest-mask tie-break; exhaustive also
        /// searches every tie-break and reports the colour-count bracket.
        #[arg(long, value_enum, default_value = "deterministic")]
        mode: Mode,
    },
    /// Rainbow-neighbourhood numbers: the convention-colouring count plus the
    /// minimum and maximum over enumerated minimum colourings.
    Rainbow {
        #[command(flatten)]
        input: GraphInput,
        /// Cap on minimum colourings enumerated.
        #[arg(long)]
        partitions: Option<u64>,
    },
    /// Perfection report from both oracles: subgraph sweep and hole search.
    Perfect {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run registered claim checks; one result per line.
    Claims {
        /// Claim ids to run (see --list); prop-3.1 expands to its eight parts.
        ids: Vec<String>,
        /// Run every registered claim.
        #[arg(long)]
        all: bool,
        /// List registered claims and exit.
        #[arg(long)]
        list: bool,
        /// Cap the order of corpus-scan scopes.
        #[arg(long)]
        max_order: Option<u32>,
        /// Seed for randomized scopes; required when one is in range.
        #[arg(long)]
        seed: Option<u64>,
        /// Minimum-colouring budget for the largest set-graph scope.
        #[arg(long)]
        partition_budget: Option<u64>,
        /// Random draws per density in sampled scopes.
        #[arg(long)]
        samples_per_density: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Counterexample search for the weak-perfection conjecture.
    Conjecture {
        /// Orders through 7 are exhaustive; 8 and 9 sample and need --seed.
        #[arg(long, default_value_t = 6)]
        max_order: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 2_000)]
        samples_per_density: u64,
        /// Scan disconnected graphs too (default: connected only).
        #[arg(long)]
        all_graphs: bool,
        /// Exhaustive part: one labelling per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
}

/// One graph source; exactly one of --family, --g6, --g6-file must be given
/// (checked after parsing so the error names the offending flags).
#[derive(Args)]
struct GraphInput {
    /// Family name; combine with -n (and -t for thorn-complete).
    #[arg(long)]
    family: Option<String>,
    /// Size parameter when --family is given.
    #[arg(short = 'n', long)]
    n: Option<u32>,
    /// Pendant counts for thorn-complete, comma-separated (default 1,2,..,n).
    #[arg(short = 't', long, value_delimiter = ',')]
    t: Option<Vec<u32>>,
    /// One graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File of graph6 lines; one report per line.
    #[arg(long)]
    g6_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Protocol {
    Imax,
    Convention,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Deterministic,
    Exhaustive,
}

struct CliError(String);

fn cli<E: std::fmt::Display>(e: E) -> CliError {
    CliError(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool(cli.jobs);
    let started = Instant::now();
    let result = run(cli.command);
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn init_thread_pool(jobs_flag: Option<usize>) {
    let jobs = jobs_flag.or_else(|| {
        std::env::var("RAINBOW_GRAPHS_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
        {
            eprintln!("warning: thread pool already initialised: {e}");
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Gen { family, n, t } => {
            let g = build_family(&family, n, t.as_deref())?;
            println!("{}", graph6::encode(&g));
            Ok(EXIT_OK)
        }
        Command::Invariants {
            input,
            budget,
            partitions,
            format,
        } => cmd_invariants(&input, budget, partitions, format),
        Command::Colour {
            input,
            protocol,
            mode,
        } => cmd_colour(&input, protocol, mode),
        Command::Rainbow { input, partitions } => cmd_rainbow(&input, partitions),
        Command::Perfect { input } => cmd_perfect(&input),
        Command::Claims {
            ids,
            all,
            list,
            max_order,
            seed,
            partition_budget,
            samples_per_density,
            format,
        } => {
            if list {
                return cmd_claims_list();
            }
            let opts = RunOptions {
                max_order,
                seed,
                partition_budget,
                samples_per_density,
            };
            cmd_claims(&ids, all, &opts, format)
        }
        Command::Conjecture {
            max_order,
            seed,
            samples_per_density,
            all_graphs,
            dedup,
            format,
        } => {
            let opts = ConjectureOptions {
                max_order,
                connected_only: !all_graphs,
                dedup,
                seed,
                samples_per_density,
            };
            let results = vec![conjecture_search(&opts).map_err(cli)?];
            emit_check_results(&results, format)?;
            Ok(claims::exit_code(&results) as u8)
        }
    }
}

fn build_family(name: &str, n: u32, t: Option<&[u32]>) -> Result<Graph, CliError> {
    if t.is_some() && name != "thorn-complete" {
        return Err(CliError(format!("family {name} takes no -t pendant counts")));
    }
    match name {
        "set-graph" => set_graph(n).map(|s| s.graph).map_err(cli),
        "path" => path(n).map_err(cli),
        "cycle" => cycle(n).map_err(cli),
        "complete" => complete(n).map_err(cli),
        "null" => null(n).map_err(cli),
        "sunlet" => sunlet(n).map_err(cli),
        "empty-sun" => empty_sun(n).map_err(cli),
        "thorn-complete" => {
            let counts: Vec<u32> = match t {
                Some(t) => t.to_vec(),
                None => (1..=n).collect(),
            };
            let spec = ThornSpec::new(counts).map_err(cli)?;
            thorn_complete(n, &spec).map_err(cli)
        }
        other => Err(CliError(format!(
            "unknown family {other}; expected set-graph, path, cycle, complete, \
             null, sunlet, empty-sun, or thorn-complete"
        ))),
    }
}

fn resolve_input(input: &GraphInput) -> Result<Vec<Graph>, CliError> {
    let sources = [
        input.family.is_some(),
        input.g6.is_some(),
        input.g6_file.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError(
            "pass exactly one of --family, --g6, --g6-file".into(),
        ));
    }
    if input.family.is_none() && (input.n.is_some() || input.t.is_some()) {
        return Err(CliError("-n and -t only apply with --family".into()));
    }
    if let Some(name) = &input.family {
        let n = input
            .n
            .ok_or_else(|| CliError(format!("--family {name} needs -n")))?;
        Ok(vec![build_family(name, n, input.t.as_deref())?])
    } else if let Some(text) = &input.g6 {
        Ok(vec![graph6::decode(text.trim()).map_err(cli)?])
    } else {
        let file = input.g6_file.as_ref().expect("checked above");
        let text = std::fs::read_to_string(file)
            .map_err(|e| CliError(format!("cannot read {}: {e}", file.display())))?;
        let (graphs, errors) = parse_graph6_text(&text);
        if let Some(first) = errors.first() {
            return Err(CliError(format!(
                "{} line {}: {}",
                file.display(),
                first.line,
                first.error
            )));
        }
        if graphs.is_empty() {
            return Err(CliError(format!("{} contains no graphs", file.display())));
        }
        Ok(graphs)
    }
}

#[derive(Serialize)]
struct ExtendedReport {
    graph6: String,
    order: u32,
    size: u32,
    min_degree: u32,
    max_degree: u32,
    omega: u32,
    alpha: u32,
    max_clique_count: u64,
    max_independent_set_count: u64,
    chi: Option<u32>,
    chi_imax: Option<u32>,
    alpha_imax: Option<u32>,
    /// Rainbow vertices under the deterministic convention colouring.
    rainbow_convention: Option<u32>,
    r_min: Option<u32>,
    r_max: Option<u32>,
    rainbow_exact: Option<bool>,
    partitions_examined: Option<u64>,
    weakly_perfect: Option<bool>,
    /// None above the subgraph sweep's order limit; that is by design and
    /// does not mark the report partial.
    perfect_bruteforce: Option<bool>,
    perfect_hole_based: Option<bool>,
    every_vertex_in_max_clique: Option<bool>,
    /// True when a budget cut a field off; the missing fields are listed in
    /// `skipped` and the process exits with code 3.
    partial: bool,
    skipped: Vec<String>,
}

fn extended_report(g: &Graph, budget: u64, partition_cap: u64) -> ExtendedReport {
    let mut skipped = Vec::new();
    let chi = match chromatic_number_with_budget(g, budget) {
        Ok(v) => Some(v),
        Err(e) => {
            skipped.push(format!("chi: {e}"));
            None
        }
    };
    let chi_imax = match imax_colouring(g, PeelMode::Deterministic) {
        Ok(out) => Some(out.colouring.num_colours()),
        Err(e) => {
            skipped.push(format!("chi_imax: {e}"));
            None
        }
    };
    let rainbow_convention = match convention_colouring(g, PeelMode::Deterministic) {
        Ok(out) => Some(
            rainbow_vertices(g, &out.colouring)
                .expect("peel classes form a proper colouring")
                .len(),
        ),
        Err(e) => {
            skipped.push(format!("rainbow_convention: {e}"));
            None
        }
    };
    let alpha_imax = chi_imax.zip(chi).map(|(ci, chi)| ci - chi);
    let bounds = match rainbow_bounds(g, Some(partition_cap)) {
        Ok(b) => Some(b),
        Err(e) => {
            skipped.push(format!("rainbow_bounds: {e}"));
            None
        }
    };
    let perfection = match perfection_report(g) {
        Ok(p) => Some(p),
        Err(e) => {
            skipped.push(format!("perfection: {e}"));
            None
        }
    };
    if bounds.as_ref().is_some_and(|b| !b.exact) {
        skipped.push(format!(
            "rainbow extremes sampled from the first {partition_cap} minimum colourings"
        ));
    }
    ExtendedReport {
        graph6: graph6::encode(g),
        order: g.order(),
        size: g.size(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        omega: clique_number(g),
        alpha: independence_number(g),
        max_clique_count: count_maximum_cliques(g),
        max_independent_set_count: count_maximum_independent_sets(g),
        chi,
        chi_imax,
        alpha_imax,
        rainbow_convention,
        r_min: bounds.as_ref().map(|b| b.min),
        r_max: bounds.as_ref().map(|b| b.max),
        rainbow_exact: bounds.as_ref().map(|b| b.exact),
        partitions_examined: bounds.as_ref().map(|b| b.partitions_examined),
        weakly_perfect: perfection.as_ref().map(|p| p.weakly_perfect),
        perfect_bruteforce: perfection.as_ref().and_then(|p| p.perfect_bruteforce),
        perfect_hole_based: perfection.as_ref().map(|p| p.perfect_hole_based),
        every_vertex_in_max_clique: perfection.as_ref().map(|p| p.every_vertex_in_max_clique),
        partial: !skipped.is_empty(),
        skipped,
    }
}

const INVARIANT_CSV_HEADER: &str = "graph6,order,size,min_degree,max_degree,omega,alpha,\
max_clique_count,max_independent_set_count,chi,chi_imax,alpha_imax,rainbow_convention,\
r_min,r_max,rainbow_exact,partitions_examined,weakly_perfect,perfect_bruteforce,\
perfect_hole_based,every_vertex_in_max_clique,partial";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn invariant_csv_row(r: &ExtendedReport) -> String {
    let mut row = String::new();
    let _ = write!(
        row,
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        csv_field(&r.graph6),
        r.order,
        r.size,
        r.min_degree,
        r.max_degree,
        r.omega,
        r.alpha,
        r.max_clique_count,
        r.max_independent_set_count,
        opt(&r.chi),
        opt(&r.chi_imax),
        opt(&r.alpha_imax),
        opt(&r.rainbow_convention),
        opt(&r.r_min),
        opt(&r.r_max),
        opt(&r.rainbow_exact),
        opt(&r.partitions_examined),
        opt(&r.weakly_perfect),
        opt(&r.perfect_bruteforce),
        opt(&r.perfect_hole_based),
        opt(&r.every_vertex_in_max_clique),
        r.partial,
    );
    row
}

fn cmd_invariants(
    input: &GraphInput,
    budget: Option<u64>,
    partitions: Option<u64>,
    format: OutFormat,
) -> Result<u8, CliError> {
    let graphs = resolve_input(input)?;
    let budget = budget.unwrap_or(DEFAULT_CHI_BUDGET);
    let cap = partitions.unwrap_or(DEFAULT_PARTITION_CAP).max(1);
    let mut partial = false;
    if matches!(format, OutFormat::Csv) {
        println!("{INVARIANT_CSV_HEADER}");
    }
    for g in &graphs {
        let report = extended_report(g, budget, cap);
        partial |= report.partial;
        match format {
            OutFormat::Json => println!("{}", serde_json::to_string(&report).map_err(cli)?),
            OutFormat::Csv => println!("{}", invariant_csv_row(&report)),
        }
    }
    Ok(if partial { EXIT_PARTIAL } else { EXIT_OK })
}

#[derive(Serialize)]
struct ColourOutput {
    graph6: String,
    order: u32,
    protocol: &'static str,
    mode: &'static str,
    num_colours: u32,
    proper: bool,
    colouring: Colouring,
    trace: ColouringTrace,
    /// Colour-count bracket over all tie-breaks; only exhaustive mode fills
    /// these in.
    min_colours: Option<u32>,
    max_colours: Option<u32>,
}

fn cmd_colour(input: &GraphInput, protocol: Protocol, mode: Mode) -> Result<u8, CliError> {
    let graphs = resolve_input(input)?;
    let peel_mode = match mode {
        Mode::Deterministic => PeelMode::Deterministic,
        Mode::Exhaustive => PeelMode::Exhaustive,
    };
    for g in &graphs {
        let outcome = match protocol {
            Protocol::Imax => imax_colouring(g, peel_mode),
            Protocol::Convention => convention_colouring(g, peel_mode),
        }
        .map_err(cli)?;
        let out = ColourOutput {
            graph6: graph6::encode(g),
            order: g.order(),
            protocol: match protocol {
                Protocol::Imax => "imax",
                Protocol::Convention => "convention",
            },
            mode: match mode {
                Mode::Deterministic => "deterministic",
                Mode::Exhaustive => "exhaustive",
            },
            num_colours: outcome.colouring.num_colours(),
            proper: is_proper(g, &outcome.colouring),
            colouring: outcome.colouring,
            trace: outcome.trace,
            min_colours: outcome.min_colours,
            max_colours: outcome.max_colours,
        };
        println!("{}", serde_json::to_string(&out).map_err(cli)?);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RainbowOutput {
    graph6: String,
    order: u32,
    chi: u32,
    rainbow_convention: u32,
    r_min: u32,
    r_max: u32,
    partitions_examined: u64,
    exact: bool,
    min_witness: Colouring,
    max_witness: Colouring,
}

fn cmd_rainbow(input: &GraphInput, partitions: Option<u64>) -> Result<u8, CliError> {
    let graphs = resolve_input(input)?;
    let cap = partitions.unwrap_or(DEFAULT_PARTITION_CAP).max(1);
    let mut partial = false;
    for g in &graphs {
        let bounds = rainbow_bounds(g, Some(cap)).map_err(cli)?;
        let conv = convention_colouring(g, PeelMode::Deterministic).map_err(cli)?;
        let r = rainbow_vertices(g, &conv.colouring)
            .expect("peel classes form a proper colouring")
            .len();
        partial |= !bounds.exact;
        let out = RainbowOutput {
            graph6: graph6::encode(g),
            order: g.order(),
            chi: bounds.min_witness.num_colours(),
            rainbow_convention: r,
            r_min: bounds.min,
            r_max: bounds.max,
            partitions_examined: bounds.partitions_examined,
            exact: bounds.exact,
            min_witness: bounds.min_witness,
            max_witness: bounds.max_witness,
        };
        println!("{}", serde_json::to_string(&out).map_err(cli)?);
    }
    Ok(if partial { EXIT_PARTIAL } else { EXIT_OK })
}

#[derive(Serialize)]
struct PerfectOutput {
    graph6: String,
    order: u32,
    #[serde(flatten)]
    report: PerfectionReport,
}

fn cmd_perfect(input: &GraphInput) -> Result<u8, CliError> {
    let graphs = resolve_input(input)?;
    for g in &graphs {
        let report = perfection_report(g).map_err(cli)?;
        let out = PerfectOutput {
            graph6: graph6::encode(g),
            order: g.order(),
            report,
        };
        println!("{}", serde_json::to_string(&out).map_err(cli)?);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ClaimListing {
    id: &'static str,
    classification: claims::Classification,
    summary: &'static str,
}

fn cmd_claims_list() -> Result<u8, CliError> {
    for info in registry() {
        let row = ClaimListing {
            id: info.id,
            classification: info.classification,
            summary: info.summary,
        };
        println!("{}", serde_json::to_string(&row).map_err(cli)?);
    }
    Ok(EXIT_OK)
}

const CLAIM_CSV_HEADER: &str =
    "claim_id,classification,verdict,scope,counterexample_count,harness_error_count";

fn claim_csv_row(r: &CheckResult) -> Result<String, CliError> {
    // Reuse serde's kebab-case enum strings, minus the JSON quotes.
    let classification = serde_json::to_value(r.classification).map_err(cli)?;
    let verdict = serde_json::to_value(r.verdict).map_err(cli)?;
    Ok(format!(
        "{},{},{},{},{},{}",
        csv_field(&r.claim_id),
        classification.as_str().expect("string enum"),
        verdict.as_str().expect("string enum"),
        csv_field(&r.scope),
        r.counterexamples.len(),
        r.harness_errors.len(),
    ))
}

fn emit_check_results(results: &[CheckResult], format: OutFormat) -> Result<(), CliError> {
    match format {
        OutFormat::Json => {
            for r in results {
                println!("{}", serde_json::to_string(r).map_err(cli)?);
            }
        }
        OutFormat::Csv => {
            println!("{CLAIM_CSV_HEADER}");
            for r in results {
                println!("{}", claim_csv_row(r)?);
            }
        }
    }
    Ok(())
}

fn cmd_claims(
    ids: &[String],
    all: bool,
    opts: &RunOptions,
    format: OutFormat,
) -> Result<u8, CliError> {
    if all && !ids.is_empty() {
        return Err(CliError("pass claim ids or --all, not both".into()));
    }
    if !all && ids.is_empty() {
        return Err(CliError(
            "pass claim ids or --all (see --list for ids)".into(),
        ));
    }
    let results = if all {
        claims::run_all(opts).map_err(cli)?
    } else {
        let mut out = Vec::new();
        for id in ids {
            out.extend(run_check(id, opts).map_err(cli)?);
        }
        out
    };
    emit_check_results(&results, format)?;
    Ok(claims::exit_code(&results) as u8)
}
