//! Command-line driver over the library: build graphs, summarize their
//! spectra, scan cycle spectra, run the deletion procedure, and batch-check
//! the spectral statements.
//!
//! Exit codes: 0 when the command completes and no assertable check fails
//! (a premise that does not apply still counts as completion), 1 when an
//! assertable check fails, 2 on usage, input, or parameter errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use spectral_cycles::construct::{t2_exact_mu, Family, FamilySpec};
use spectral_cycles::cycles::{
    classify_premise, cycle_spectrum, has_cycle_of_length, CycleSearch, CycleStatus,
    PremiseStatus, DEFAULT_CYCLE_BUDGET,
};
use spectral_cycles::io::read_edge_list;
use spectral_cycles::io::format_edge_list;
use spectral_cycles::procedure::{
    check_theorem3_conclusion, premise_check, run_procedure, validate_params, Branch,
    ProcedureParams,
};
use spectral_cycles::spectral::{
    lemma1_check_with, lemma2_check_with, spectral_radius, Lemma1Check, Lemma2Check,
    SpectralOptions,
};
use spectral_cycles::verify::{
    check_graph, default_corpus, join_threshold_sweep, run_suite, theorem2_certificate_check,
    Outcome, StabilityCertificate, Statement,
};

/// Environment variable supplying the default eigensolver tolerance.
const TOL_ENV: &str = "SPECTRAL_CYCLES_TOL";

#[derive(Parser)]
#[command(name = "spectral-cycles", version, about = "Spectral conditions for odd cycles: analysis, constructions, and verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Eigensolver tolerance; overrides the SPECTRAL_CYCLES_TOL variable.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Structural and spectral summary of one graph.
    Analyze(AnalyzeArgs),
    /// Emit a parametrized graph as an edge list.
    Construct(ConstructArgs),
    /// Decide one cycle length or scan the whole spectrum.
    Cycles(CyclesArgs),
    /// Run the vertex-deletion procedure and check its guarantees.
    Procedure(ProcedureArgs),
    /// Batch-check one statement over a corpus or a single graph.
    Verify(VerifyArgs),
    /// Smallest clique sizes pushing the clique-to-empty join past mu = n/2.
    Sweep(SweepArgs),
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("procedure failed: {0}")]
    Procedure(String),
    #[error(transparent)]
    GraphIo(#[from] spectral_cycles::io::IoError),
    #[error(transparent)]
    Construct(#[from] spectral_cycles::construct::ConstructError),
    #[error(transparent)]
    Verify(#[from] spectral_cycles::verify::VerifyError),
    #[error(transparent)]
    Cycle(#[from] spectral_cycles::cycles::CycleError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    File(#[from] std::io::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let opts = options(cli.tol)?;
    match cli.command {
        Command::Analyze(a) => cmd_analyze(a, cli.format, &opts),
        Command::Construct(a) => cmd_construct(a),
        Command::Cycles(a) => cmd_cycles(a, cli.format),
        Command::Procedure(a) => cmd_procedure(a, cli.format, &opts),
        Command::Verify(a) => cmd_verify(a, cli.format, &opts),
        Command::Sweep(a) => cmd_sweep(a, cli.format),
    }
}

fn options(cli_tol: Option<f64>) -> Result<SpectralOptions, CliError> {
    let mut opts = SpectralOptions::default();
    let tol = match cli_tol {
        Some(t) => Some(t),
        None => match std::env::var(TOL_ENV) {
            Ok(s) => Some(s.trim().parse::<f64>().map_err(|_| {
                CliError::Usage(format!("invalid {TOL_ENV} value `{s}`"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("tolerance must be positive and finite, got {t}")));
        }
        opts.tol = t;
    }
    Ok(opts)
}

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::NotApplicable => "not applicable",
        Outcome::Exception => "exception",
    }
}

fn exit_for(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Edge-list file: first line the vertex count, then one `u v` per line.
    #[arg(long, short = 'i')]
    input: PathBuf,
}

#[derive(Serialize)]
struct AnalyzeReport {
    input: String,
    n: usize,
    m: usize,
    min_degree: usize,
    bipartite: bool,
    triangles: usize,
    mu: f64,
    iterations: usize,
    residual: f64,
    converged: bool,
    /// `sqrt(floor(n^2/4))`, the odd-cycle spectral threshold.
    threshold: f64,
    premise: PremiseStatus,
    min_entry: Option<f64>,
    min_entry_vertex: Option<usize>,
    lemma1: Lemma1Check,
    lemma2: Lemma2Check,
}

fn cmd_analyze(a: AnalyzeArgs, format: Format, opts: &SpectralOptions) -> Result<ExitCode, CliError> {
    let g = read_edge_list(&a.input)?;
    let sp = spectral_radius(&g, opts);
    if !sp.converged {
        eprintln!(
            "warning: eigensolver stopped before convergence (residual {:.3e})",
            sp.residual
        );
    }
    let threshold = t2_exact_mu(g.order());
    let premise = classify_premise(sp.mu, threshold);
    let lemma1 = lemma1_check_with(&g, &sp);
    let lemma2 = lemma2_check_with(&g, &sp, opts);
    let (min_entry_vertex, min_entry) = match sp.min_entry() {
        Some((v, x)) => (Some(v), Some(x)),
        None => (None, None),
    };
    let report = AnalyzeReport {
        input: a.input.display().to_string(),
        n: g.order(),
        m: g.edge_count(),
        min_degree: g.min_degree().unwrap_or(0),
        bipartite: g.is_bipartite(),
        triangles: g.triangle_count(),
        mu: sp.mu,
        iterations: sp.iterations,
        residual: sp.residual,
        converged: sp.converged,
        threshold,
        premise,
        min_entry,
        min_entry_vertex,
        lemma1: lemma1.clone(),
        lemma2: lemma2.clone(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => {
            println!("key,value");
            println!("n,{}", report.n);
            println!("m,{}", report.m);
            println!("min_degree,{}", report.min_degree);
            println!("bipartite,{}", report.bipartite);
            println!("triangles,{}", report.triangles);
            println!("mu,{}", report.mu);
            println!("iterations,{}", report.iterations);
            println!("residual,{}", report.residual);
            println!("converged,{}", report.converged);
            println!("threshold,{}", report.threshold);
            println!("premise,{}", premise_str(report.premise));
            println!("min_entry,{}", report.min_entry.map(|x| x.to_string()).unwrap_or_default());
            println!(
                "min_entry_vertex,{}",
                report.min_entry_vertex.map(|v| v.to_string()).unwrap_or_default()
            );
            println!(
                "lemma1_bound,{}",
                lemma1.bound.map(|b| b.to_string()).unwrap_or_default()
            );
            println!(
                "lemma1_slack,{}",
                lemma1.slack.map(|s| s.to_string()).unwrap_or_default()
            );
            println!("lemma1_outcome,{}", outcome_str(lemma1.outcome).replace(' ', "_"));
            println!("lemma2_slack,{}", lemma2.slack);
            println!("lemma2_outcome,{}", outcome_str(lemma2.outcome).replace(' ', "_"));
        }
        Format::Human => {
            println!("input: {}", report.input);
            println!("order: {}", report.n);
            println!("size: {}", report.m);
            println!("min degree: {}", report.min_degree);
            println!("bipartite: {}", if report.bipartite { "yes" } else { "no" });
            println!("triangles: {}", report.triangles);
            println!(
                "spectral radius: {:.12} (iterations {}, residual {:.3e})",
                report.mu, report.iterations, report.residual
            );
            println!(
                "odd-cycle threshold: {:.12} (mu - threshold = {:+.6}, {})",
                report.threshold,
                report.mu - report.threshold,
                premise_str(report.premise)
            );
            match (report.min_entry_vertex, report.min_entry) {
                (Some(v), Some(x)) => println!("min perron entry: {x:.12} at vertex {v}"),
                _ => println!("min perron entry: none (empty graph)"),
            }
            match (lemma1.bound, lemma1.slack) {
                (Some(b), Some(s)) => println!(
                    "lemma1: bound {:.12}, slack {:.6e}, {}",
                    b,
                    s,
                    outcome_str(lemma1.outcome)
                ),
                _ => println!("lemma1: {}", outcome_str(lemma1.outcome)),
            }
            if lemma2.outcome == Outcome::NotApplicable {
                println!("lemma2: not applicable");
            } else {
                println!(
                    "lemma2: deleted vertex {}, lhs {:.12}, rhs {:.12}, slack {:.6e}, {}",
                    lemma2.deleted_vertex,
                    lemma2.lhs,
                    lemma2.rhs,
                    lemma2.slack,
                    outcome_str(lemma2.outcome)
                );
            }
        }
    }
    let failed = lemma1.outcome == Outcome::Fail || lemma2.outcome == Outcome::Fail;
    Ok(exit_for(failed))
}

fn premise_str(p: PremiseStatus) -> &'static str {
    match p {
        PremiseStatus::Exceeds => "exceeds",
        PremiseStatus::Equal => "equal within tolerance",
        PremiseStatus::Below => "below",
    }
}

#[derive(Args)]
struct ConstructArgs {
    /// Family: t2, join, gnp, t2_plus_edge, cycle, complete, path, petersen,
    /// wheel, circulant2.
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Clique side of the join family.
    #[arg(long)]
    k: Option<usize>,
    /// Edge probability of the gnp family.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn build_spec(
    family: &str,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<f64>,
    seed: Option<u64>,
) -> Result<FamilySpec, CliError> {
    let family: Family = family.parse().map_err(CliError::Usage)?;
    let n = match (family, n) {
        (Family::Petersen, n) => n.unwrap_or(10),
        (_, Some(n)) => n,
        (f, None) => {
            return Err(CliError::Usage(format!("family `{}` requires --n", f.as_str())));
        }
    };
    let mut spec = FamilySpec::fixture(family, n);
    match family {
        Family::JoinCliqueEmpty => {
            let k = k.ok_or_else(|| CliError::Usage("family `join` requires --k".into()))?;
            spec.k = Some(k);
        }
        Family::Gnp => {
            let p = p.ok_or_else(|| CliError::Usage("family `gnp` requires --p".into()))?;
            spec.p = Some(p);
            spec.seed = Some(seed.unwrap_or(0));
        }
        Family::T2PlusEdge => {
            spec.seed = Some(seed.unwrap_or(0));
        }
        _ => {}
    }
    Ok(spec)
}

fn cmd_construct(a: ConstructArgs) -> Result<ExitCode, CliError> {
    let spec = build_spec(&a.family, a.n, a.k, a.p, a.seed)?;
    let g = spec.realize()?;
    let text = format_edge_list(&g);
    match &a.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Args)]
struct CyclesArgs {
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Decide a single length.
    #[arg(long, conflicts_with = "t_max")]
    t: Option<usize>,
    /// Scan lengths 3..=t_max; defaults to the order of the graph.
    #[arg(long)]
    t_max: Option<usize>,
    /// Node-expansion budget per length.
    #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
    budget: u64,
}

fn search_line(s: &CycleSearch) -> String {
    match &s.status {
        CycleStatus::Found(w) => format!("t={}: found {:?} (expanded {})", s.t, w, s.expanded),
        CycleStatus::Absent => format!("t={}: absent (expanded {})", s.t, s.expanded),
        CycleStatus::BudgetExhausted => {
            format!("t={}: undecided, budget exhausted (expanded {})", s.t, s.expanded)
        }
    }
}

fn search_csv_row(s: &CycleSearch) -> String {
    let (status, witness) = match &s.status {
        CycleStatus::Found(w) => {
            let w = w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            ("found", w)
        }
        CycleStatus::Absent => ("absent", String::new()),
        CycleStatus::BudgetExhausted => ("budget_exhausted", String::new()),
    };
    format!("{},{},{},{}", s.t, status, s.expanded, witness)
}

fn cmd_cycles(a: CyclesArgs, format: Format) -> Result<ExitCode, CliError> {
    let g = read_edge_list(&a.input)?;
    if let Some(t) = a.t {
        let search = has_cycle_of_length(&g, t, a.budget)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&search)?),
            Format::Csv => {
                println!("t,status,expanded,witness");
                println!("{}", search_csv_row(&search));
            }
            Format::Human => println!("{}", search_line(&search)),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let t_max = a.t_max.unwrap_or_else(|| g.order());
    let report = cycle_spectrum(&g, t_max, a.budget);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => {
            println!("t,status,expanded,witness");
            for e in &report.entries {
                println!("{}", search_csv_row(e));
            }
        }
        Format::Human => {
            for e in &report.entries {
                println!("{}", search_line(e));
            }
            println!("found lengths: {:?}", report.found_lengths());
            match (report.girth(), report.circumference()) {
                (Some(gir), Some(circ)) => {
                    println!("girth {gir}, circumference {circ} (within scanned range)")
                }
                _ => println!("no cycles found up to t = {t_max}"),
            }
            println!("exhaustive: {}", if report.exhaustive() { "yes" } else { "no" });
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Args)]
struct ProcedureArgs {
    #[arg(long, short = 'i')]
    input: PathBuf,
    #[arg(long, default_value_t = 0.25)]
    alpha: f64,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, default_value_t = 0.4375)]
    gamma: f64,
    /// Additive spectral premise constant.
    #[arg(long = "K", default_value_t = 0.0)]
    k_const: f64,
    /// Run even when the parameter gate or the premise is violated.
    #[arg(long)]
    no_strict: bool,
    /// Write the full trace and conclusion report as JSON.
    #[arg(long)]
    trace_out: Option<PathBuf>,
}

fn branch_str(b: Branch) -> &'static str {
    match b {
        Branch::I => "i",
        Branch::II => "ii",
    }
}

fn cmd_procedure(
    a: ProcedureArgs,
    format: Format,
    opts: &SpectralOptions,
) -> Result<ExitCode, CliError> {
    let g = read_edge_list(&a.input)?;
    let params = ProcedureParams {
        alpha: a.alpha,
        beta: a.beta,
        gamma: a.gamma,
        k_const: a.k_const,
        strict: !a.no_strict,
    };
    let gate = validate_params(&params, g.order());
    if params.strict && !gate.satisfied() {
        return Err(CliError::Params(gate.violations.join("; ")));
    }
    let premise = premise_check(&g, &params, opts);
    if params.strict && !premise.satisfied() {
        match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "outcome": "not_applicable",
                    "premise": premise,
                }))?
            ),
            _ => {
                println!(
                    "premise not satisfied: mu {:.6} vs {:.6} (slack {:+.6}); min degree {} vs {:.6} (slack {:+.6})",
                    premise.mu,
                    premise.mu_threshold,
                    premise.mu_slack,
                    premise.min_degree,
                    premise.degree_threshold,
                    premise.degree_slack
                );
                println!("outcome: not applicable");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let trace = run_procedure(&g, &params, opts).map_err(|e| CliError::Procedure(e.to_string()))?;
    let conclusion = check_theorem3_conclusion(&trace, &params);
    if let Some(path) = &a.trace_out {
        let payload = serde_json::json!({ "trace": trace, "conclusion": conclusion });
        std::fs::write(path, serde_json::to_string_pretty(&payload)?)?;
    }
    match format {
        Format::Json => {
            let payload = serde_json::json!({ "trace": trace, "conclusion": conclusion });
            println!("{}", serde_json::to_string_pretty(&payload)?);
        }
        Format::Csv => {
            println!("k,order,mu,min_degree,degree_guard,deleted_vertex,min_entry");
            for s in &trace.steps {
                println!(
                    "{},{},{},{},{},{},{}",
                    s.k, s.order, s.mu, s.min_degree, s.degree_guard, s.deleted_vertex, s.min_entry
                );
            }
        }
        Format::Human => {
            println!(
                "params: alpha={} beta={} gamma={} K={} strict={} (n_min={})",
                params.alpha, params.beta, params.gamma, params.k_const, params.strict, gate.n_min
            );
            println!(
                "premise: mu {:.6} vs {:.6} (slack {:+.6}); min degree {} vs {:.6} (slack {:+.6})",
                premise.mu,
                premise.mu_threshold,
                premise.mu_slack,
                premise.min_degree,
                premise.degree_threshold,
                premise.degree_slack
            );
            for s in &trace.steps {
                println!(
                    "step {}: deleted vertex {} (perron entry {:.6}); mu(G_{}) = {:.6}, min degree {}, order {}",
                    s.k + 1,
                    s.deleted_vertex,
                    s.min_entry,
                    s.k,
                    s.mu,
                    s.min_degree,
                    s.order
                );
            }
            println!(
                "final: branch {} after {} deletion(s); |H| = {}, mu(H) = {:.6}, min degree {}",
                branch_str(trace.branch),
                trace.deletions(),
                trace.final_subgraph.len(),
                trace.final_mu,
                trace.final_min_degree
            );
            for c in &conclusion.checks {
                println!(
                    "check {}: {:.6} vs {:.6} (slack {:+.6e}) {}",
                    c.label,
                    c.lhs,
                    c.rhs,
                    c.slack,
                    if c.pass { "pass" } else { "FAIL" }
                );
            }
            println!("outcome: {}", outcome_str(conclusion.outcome));
        }
    }
    Ok(exit_for(conclusion.outcome == Outcome::Fail))
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement id: lemma1, lemma2, fact2, triangle_threshold, theorem1,
    /// theorem2, theorem3, fact1.
    #[arg(long)]
    statement: String,
    /// Synthetic corpus family; combines with --n/--k/--p/--trials/--seed.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Corpus size for seeded families (gnp, t2_plus_edge).
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check one explicit graph instead of a corpus.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    /// Stability certificate JSON for `--statement theorem2 --input`.
    #[arg(long, requires = "input")]
    certificate: Option<PathBuf>,
    /// Also write the JSON report to a file.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn family_corpus(
    family: &str,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<f64>,
    trials: usize,
    seed: u64,
) -> Result<Vec<FamilySpec>, CliError> {
    let base = build_spec(family, n, k, p, Some(seed))?;
    match base.family {
        Family::Gnp | Family::T2PlusEdge => Ok((0..trials.max(1) as u64)
            .map(|i| {
                let mut s = base.clone();
                s.seed = Some(seed.wrapping_add(i));
                s
            })
            .collect()),
        _ => Ok(vec![base]),
    }
}

fn cmd_verify(a: VerifyArgs, format: Format, opts: &SpectralOptions) -> Result<ExitCode, CliError> {
    let statement: Statement = a.statement.parse()?;

    if let Some(input) = &a.input {
        let g = read_edge_list(input)?;
        let graph_id = input
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| input.display().to_string());

        if let Some(cert_path) = &a.certificate {
            if statement != Statement::Theorem2 {
                return Err(CliError::Usage(
                    "--certificate applies to --statement theorem2 only".into(),
                ));
            }
            let text = std::fs::read_to_string(cert_path)?;
            let cert: StabilityCertificate = serde_json::from_str(&text)?;
            let chk = theorem2_certificate_check(&g, &cert, opts);
            if let Some(path) = &a.output {
                std::fs::write(path, serde_json::to_string_pretty(&chk)?)?;
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&chk)?),
                Format::Csv => {
                    println!("key,value");
                    println!("mu,{}", chk.mu);
                    println!("premise_met,{}", chk.premise_met);
                    println!("subset_order,{}", chk.subset_order);
                    println!("order_ok,{}", chk.order_ok);
                    println!("induced_bipartite,{}", chk.induced_bipartite);
                    println!("induced_min_degree,{}", chk.induced_min_degree);
                    println!("degree_ok,{}", chk.degree_ok);
                    println!("outcome,{}", outcome_str(chk.outcome).replace(' ', "_"));
                }
                Format::Human => {
                    println!(
                        "premise: mu {:.6} vs {:.6} ({})",
                        chk.mu,
                        chk.premise_threshold,
                        if chk.premise_met { "met" } else { "not met" }
                    );
                    println!(
                        "subset: order {} vs threshold {:.4} ({})",
                        chk.subset_order,
                        chk.order_threshold,
                        if chk.order_ok { "ok" } else { "too small" }
                    );
                    println!(
                        "induced subgraph: bipartite {}, min degree {} vs threshold {:.4} ({})",
                        if chk.induced_bipartite { "yes" } else { "no" },
                        chk.induced_min_degree,
                        chk.degree_threshold,
                        if chk.degree_ok { "ok" } else { "too small" }
                    );
                    println!("outcome: {}", outcome_str(chk.outcome));
                }
            }
            return Ok(exit_for(chk.outcome == Outcome::Fail));
        }

        let result = check_graph(statement, &graph_id, &g, opts);
        if let Some(path) = &a.output {
            std::fs::write(path, serde_json::to_string_pretty(&result)?)?;
        }
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&result)?),
            Format::Csv => {
                println!("graph_id,outcome,slack");
                println!(
                    "{},{},{}",
                    result.graph_id,
                    outcome_str(result.outcome).replace(' ', "_"),
                    result.slack.map(|s| s.to_string()).unwrap_or_default()
                );
            }
            Format::Human => {
                println!("{}: {}", result.graph_id, outcome_str(result.outcome));
                if let Some(s) = result.slack {
                    println!("slack: {s:.6e}");
                }
                if let Some(w) = &result.witness {
                    println!("witness: {w}");
                }
                if let Some(note) = &result.note {
                    println!("note: {note}");
                }
                if let Some(ce) = &result.counterexample {
                    println!("counterexample:");
                    print!("{ce}");
                }
            }
        }
        return Ok(exit_for(result.outcome == Outcome::Fail));
    }

    let corpus = match &a.family {
        Some(f) => family_corpus(f, a.n, a.k, a.p, a.trials, a.seed)?,
        None => default_corpus(statement, a.seed),
    };
    let report = run_suite(statement, &corpus, a.seed, opts);
    if let Some(path) = &a.output {
        std::fs::write(path, report.to_json())?;
    }
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.summary_csv()),
        Format::Human => {
            println!("statement: {}", report.statement);
            println!("instances: {} (seed {})", report.summary.total, report.seed);
            println!(
                "pass {}  fail {}  not applicable {}  exception {}",
                report.summary.pass,
                report.summary.fail,
                report.summary.not_applicable,
                report.summary.exception
            );
            if let Some(w) = report.worst_slack() {
                println!("worst slack: {w:.6e}");
            }
            for r in report.results.iter().filter(|r| r.outcome == Outcome::Fail) {
                println!("FAIL {}", r.graph_id);
            }
            for r in report.results.iter().filter(|r| r.outcome == Outcome::Exception) {
                println!("exception {}: {}", r.graph_id, r.note.as_deref().unwrap_or(""));
            }
            println!("result: {}", if report.all_clear() { "pass" } else { "fail" });
        }
    }
    Ok(exit_for(report.summary.fail > 0))
}

#[derive(Args)]
struct SweepArgs {
    /// Order to include; repeat for several (default 200 500 1000 2000).
    #[arg(long = "n")]
    n: Vec<usize>,
    /// Also write the JSON result to a file.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn cmd_sweep(a: SweepArgs, format: Format) -> Result<ExitCode, CliError> {
    let ns = if a.n.is_empty() { vec![200, 500, 1000, 2000] } else { a.n.clone() };
    let sweep = join_threshold_sweep(&ns)?;
    if let Some(path) = &a.output {
        std::fs::write(path, serde_json::to_string_pretty(&sweep)?)?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&sweep)?),
        Format::Csv => print!("{}", sweep.to_csv()),
        Format::Human => {
            for r in &sweep.rows {
                println!(
                    "n={}: k_min={} mu={:.6} ratio={:.6} deviation={:.6}",
                    r.n, r.k_min, r.mu, r.ratio, r.deviation
                );
            }
            println!("limit: {:.6}", sweep.limit_constant);
        }
    }
    Ok(ExitCode::SUCCESS)
}
