//! `rees-cm`: verify Cohen-Macaulayness of Rees algebras of diagonal ideals
//! on concrete instances, and run the supporting duality checks.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rees_cm::field::{FieldKind, PrimeField, Rationals};
use rees_cm::groebner::GbBudget;
use rees_cm::pipeline::{
    random_suite, staircase_check, staircase_suite, verify, PipelineError, RandomSuiteOptions, StaircaseReport,
    VerifyOptions, EXIT_EXHAUSTED, EXIT_REFUTED, EXIT_VERIFIED,
};
use rees_cm::rees::{admissible_indices, family_generators, predicted_monomial, FamilyTag, Instance};
use rees_cm::ring::PolyRing;
use rees_cm::squarefree::{
    alexander_dual, betti_numbers_capped, initial_ideal_of_instance, SquareFreeError, SquareFreeIdeal,
    DEFAULT_VERTEX_CAP,
};
use serde_json::json;

use config::{Config, InstanceConfig};

/// Exit code for bad input: unknown flags, invalid instances, unreadable files.
const EXIT_USAGE: u8 = 1;

#[derive(Debug, Parser)]
#[command(name = "rees-cm", version, about = "Exact verification of Cohen-Macaulay Rees algebras of diagonal ideals")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "REES_CM_JOBS")]
    jobs: Option<usize>,
    /// TOML file whose keys mirror the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full pipeline on one instance.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Cap on S-pairs for every Groebner computation.
        #[arg(long)]
        budget: Option<u64>,
        /// Do not run the elimination oracle.
        #[arg(long)]
        skip_oracle: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one family: generator tags (minorX, g, f, U, ...) give
    /// polynomials, initial tags (hX, hg, hU, ...) give monomials.
    Dump {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        family: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Closed-form versus generic dual of staircase ideals.
    Staircase {
        m: Option<usize>,
        n: Option<usize>,
        l: Option<usize>,
        /// Every (m, n, l) with 2 <= m <= max-m, m <= n <= max-n.
        #[arg(long, conflicts_with_all = ["m", "n", "l"])]
        suite: bool,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Alexander dual of an ideal in exchange format, or of the predicted
    /// initial ideal of an instance.
    Dual {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Graded Betti numbers of an ideal, as JSON entries {i, j, rank}.
    Betti {
        #[command(flatten)]
        source: SourceArgs,
        /// Take the Alexander dual first.
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Duality and Cohen-Macaulay cross-checks on seeded random ideals.
    RandomSuite {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// All six parameters at once: m,n,s1,t1,s2,t2.
    #[arg(long, value_delimiter = ',')]
    instance: Option<Vec<usize>>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s1: Option<usize>,
    #[arg(long)]
    t1: Option<usize>,
    #[arg(long)]
    s2: Option<usize>,
    #[arg(long)]
    t2: Option<usize>,
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Exchange-format file, one generator per line.
    #[arg(long, conflicts_with_all = ["instance", "m", "n", "s1", "t1", "s2", "t2"])]
    file: Option<PathBuf>,
    #[command(flatten)]
    instance: InstanceArgs,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// QQ, or GF(p) for a prime p.
    #[arg(long)]
    field: Option<String>,
    /// Largest support handled by the Betti and Reisner computations.
    #[arg(long)]
    vertex_cap: Option<usize>,
    /// Print JSON instead of the human summary.
    #[arg(long)]
    json: bool,
}

/// Failure that ends the command with a given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::SquareFree(e) => e.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<SquareFreeError> for Failure {
    fn from(e: SquareFreeError) -> Self {
        let code = match e {
            SquareFreeError::VertexCap { .. } => EXIT_EXHAUSTED as u8,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<rees_cm::rees::ReesError> for Failure {
    fn from(e: rees_cm::rees::ReesError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(Failure::usage)?,
        None => Config::default(),
    };
    if let Some(jobs) = cli.jobs.or(config.jobs) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::usage(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Verify { instance, common, budget, skip_oracle, out } => {
            let inst = resolve_instance(&instance, config.instance)?;
            let budget = match budget.or(config.budget) {
                Some(limit) => GbBudget::pairs(limit),
                None => GbBudget::default(),
            };
            let options = VerifyOptions {
                field: resolve_field(common.field.as_deref(), &config)?,
                budget,
                skip_oracle: skip_oracle || config.skip_oracle.unwrap_or(false),
                vertex_cap: common.vertex_cap.or(config.vertex_cap).unwrap_or(DEFAULT_VERTEX_CAP),
            };
            let report = verify(inst, &options)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Some(path) = out {
                std::fs::write(&path, format!("{text}\n")).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            if common.json || config.json.unwrap_or(false) {
                println!("{text}");
            } else {
                print!("{}", report.summary());
            }
            Ok(report.exit_code() as u8)
        }
        Command::Dump { instance, family, field } => {
            let inst = resolve_instance(&instance, config.instance)?;
            let kind = resolve_field(field.as_deref(), &config)?;
            let normalized = Instance::build(inst.m, inst.n, inst.s1, inst.t1, inst.s2, inst.t2)?;
            for notice in &normalized.notices {
                eprintln!("note: {notice}");
            }
            let lines = match kind {
                FieldKind::Rationals => dump(&normalized.instance, Rationals, &family)?,
                FieldKind::PrimeField(p) => {
                    let f = PrimeField::new(p as u64).map_err(|e| Failure::usage(e.to_string()))?;
                    dump(&normalized.instance, f, &family)?
                }
            };
            for line in lines {
                println!("{line}");
            }
            Ok(EXIT_VERIFIED as u8)
        }
        Command::Staircase { m, n, l, suite, max_m, max_n, common } => {
            let kind = resolve_field(common.field.as_deref(), &config)?;
            let cap = common.vertex_cap.or(config.vertex_cap).unwrap_or(DEFAULT_VERTEX_CAP);
            let reports = if suite {
                staircase_suite(max_m, max_n, kind, cap)?
            } else {
                match (m, n, l) {
                    (Some(m), Some(n), Some(l)) => vec![staircase_check(m, n, l, kind, cap)?],
                    _ => return Err(Failure::usage("staircase needs M N L, or --suite")),
                }
            };
            if common.json || config.json.unwrap_or(false) {
                println!("{}", serde_json::to_string_pretty(&reports).expect("report serializes"));
            } else {
                for r in &reports {
                    println!("{}", staircase_line(r));
                }
            }
            Ok(if reports.iter().all(|r| r.verified) { EXIT_VERIFIED } else { EXIT_REFUTED } as u8)
        }
        Command::Dual { source } => {
            let ideal = load_source(&source, &config)?;
            print!("{}", alexander_dual(&ideal)?.to_exchange());
            Ok(EXIT_VERIFIED as u8)
        }
        Command::Betti { source, dual, common } => {
            let mut ideal = load_source(&source, &config)?;
            if dual {
                ideal = alexander_dual(&ideal)?;
            }
            let kind = resolve_field(common.field.as_deref(), &config)?;
            let cap = common.vertex_cap.or(config.vertex_cap).unwrap_or(DEFAULT_VERTEX_CAP);
            let table = betti_numbers_capped(&ideal, kind, cap)?;
            let mut value = table.to_json();
            value["regularity"] = json!(table.regularity());
            value["projective_dimension"] = json!(table.projective_dimension());
            value["linear"] = json!(table.is_linear());
            println!("{}", serde_json::to_string_pretty(&value).expect("table serializes"));
            Ok(EXIT_VERIFIED as u8)
        }
        Command::RandomSuite { seed, count, max_vertices, common } => {
            let defaults = RandomSuiteOptions::default();
            let options = RandomSuiteOptions {
                seed: seed.or(config.seed).unwrap_or(defaults.seed),
                count: count.or(config.count).unwrap_or(defaults.count),
                max_vertices: max_vertices.or(config.max_vertices).unwrap_or(defaults.max_vertices),
                field: resolve_field(common.field.as_deref(), &config)?,
                ..defaults
            };
            if !(2..=16).contains(&options.max_vertices) {
                return Err(Failure::usage("--max-vertices must lie in 2..=16"));
            }
            let report = random_suite(&options)?;
            if common.json || config.json.unwrap_or(false) {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("seed {} count {} max_vertices {}", options.seed, options.count, options.max_vertices);
                for (name, tally) in [
                    ("involution", report.involution),
                    ("dual = intersection of primes", report.dual_matches_intersection),
                    ("dual generators are minimal covers", report.dual_generators_are_minimal_covers),
                    ("reg(I*) = pd(R/I)", report.terai),
                    ("Eagon-Reiner = Reisner", report.eagon_reiner_matches_reisner),
                    ("Betti tables agree across fields", report.fields_agree),
                ] {
                    println!("  {name:<36} {} passed, {} failed", tally.passed, tally.failed);
                }
                println!("  Cohen-Macaulay quotients: {}", report.cohen_macaulay);
                for failure in &report.failures {
                    println!("  failing ideal:\n{failure}");
                }
            }
            Ok(if report.all_passed() { EXIT_VERIFIED } else { EXIT_REFUTED } as u8)
        }
    }
}

fn resolve_field(flag: Option<&str>, config: &Config) -> Result<FieldKind, Failure> {
    match flag.or(config.field.as_deref()) {
        Some(text) => FieldKind::parse(text).map_err(|e| Failure::usage(e.to_string())),
        None => Ok(FieldKind::Rationals),
    }
}

fn resolve_instance(args: &InstanceArgs, config: Option<InstanceConfig>) -> Result<Instance, Failure> {
    let base = config.unwrap_or_default();
    let listed = args.instance.as_deref();
    if listed.is_some_and(|v| v.len() != 6) {
        return Err(Failure::usage("--instance takes six values m,n,s1,t1,s2,t2"));
    }
    let pick = |flag: Option<usize>, pos: usize, fallback: Option<usize>, name: &str| {
        flag.or(listed.map(|v| v[pos]))
            .or(fallback)
            .ok_or_else(|| Failure::usage(format!("missing instance parameter {name} (use --instance m,n,s1,t1,s2,t2)")))
    };
    Ok(Instance {
        m: pick(args.m, 0, base.m, "m")?,
        n: pick(args.n, 1, base.n, "n")?,
        s1: pick(args.s1, 2, base.s1, "s1")?,
        t1: pick(args.t1, 3, base.t1, "t1")?,
        s2: pick(args.s2, 4, base.s2, "s2")?,
        t2: pick(args.t2, 5, base.t2, "t2")?,
    })
}

fn has_instance(args: &InstanceArgs) -> bool {
    args.instance.is_some() || [args.m, args.n, args.s1, args.t1, args.s2, args.t2].iter().any(Option::is_some)
}

fn load_source(source: &SourceArgs, config: &Config) -> Result<SquareFreeIdeal, Failure> {
    if let Some(path) = &source.file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        return Ok(SquareFreeIdeal::parse_exchange_inferred(&text)?);
    }
    if !has_instance(&source.instance) && config.instance.is_none() {
        return Err(Failure::usage("give --file or an instance"));
    }
    let inst = resolve_instance(&source.instance, config.instance)?;
    let normalized = Instance::build(inst.m, inst.n, inst.s1, inst.t1, inst.s2, inst.t2)?;
    for notice in &normalized.notices {
        eprintln!("note: {notice}");
    }
    Ok(initial_ideal_of_instance(&normalized.instance)?)
}

fn dump<F: rees_cm::field::Field>(inst: &Instance, field: F, family: &str) -> Result<Vec<String>, Failure> {
    let ring: std::sync::Arc<PolyRing<F>> = inst.ring(field).map_err(|e| Failure::usage(e.to_string()))?;
    if let Some(tag) = FamilyTag::parse(family) {
        let elements = family_generators(inst, &ring, tag)?;
        return Ok(elements.iter().map(|e| ring.render(&e.value)).collect());
    }
    if let Some(tag) = FamilyTag::parse_initial(family) {
        let mut out: Vec<String> = Vec::new();
        for idx in admissible_indices(inst, tag)? {
            let vars = predicted_monomial(inst, tag, &idx)?;
            let m = ring.monomial_from_vars(&vars).map_err(|e| Failure::usage(e.to_string()))?;
            let text = ring.render_monomial(&m);
            if !out.contains(&text) {
                out.push(text);
            }
        }
        return Ok(out);
    }
    let known: Vec<&str> =
        FamilyTag::ALL.iter().map(|t| t.name()).chain(FamilyTag::ALL.iter().filter_map(|t| t.initial_name())).collect();
    Err(Failure::usage(format!("unknown family `{family}`; known: {}", known.join(", "))))
}

fn staircase_line(r: &StaircaseReport) -> String {
    format!(
        "({},{},{}) dual generators {} closed form {} regularity {} (expected {}) linear {} -> {}",
        r.m,
        r.n,
        r.l,
        r.dual_generators,
        if r.closed_form_matches { "equal" } else { "DIFFERS" },
        r.regularity.map_or_else(|| "n/a".into(), |v| v.to_string()),
        r.expected_degree,
        r.linear,
        if r.verified { "verified" } else { "REFUTED" }
    )
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    use super::*;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }
}
