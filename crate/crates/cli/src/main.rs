//! Command-line front end: construction, forcing certificates, gadget
//! threshold scans, embeddings, set-family programs, the cubic colouring
//! scheme and the acceptance suite.
//!
//! Exit codes: 0 for conclusive runs, 2 when a budget made the outcome
//! inconclusive, 1 for input errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use antiramsey::acceptance;
use antiramsey::certify::{
    forces_with, smallest_forcing_multiplicity, Mode, MultiplicityScan, SearchOptions, Verdict,
};
use antiramsey::colouring::{
    chromatic_index, colouring_to_json, format_colouring, is_proper, parse_colouring,
};
use antiramsey::constructions::{class2_regular, forest_host, gadget, named_graph};
use antiramsey::copies::enumerate_copies;
use antiramsey::families::{disjoint_representatives, fractional_width, Element, SetFamily};
use antiramsey::graph::{format_graph, parse_graph, to_dot, Graph};
use antiramsey::patterns::{ar_d_bounds, Pattern};
use antiramsey::rainbow::{find_rainbow_copy, greedy_rainbow_embed, rainbow_tree_embed};

#[derive(Parser)]
#[command(name = "antiramsey", version, about = "rainbow forcing certificates at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// seed for every randomised run
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_SEED)]
    seed: u64,
    /// worker threads for the forcing search (1 = reference semantics)
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalogue or gadget graph and print it
    Construct(ConstructArgs),
    /// Decide whether every colouring of a host contains a rainbow pattern
    Forces(ForcesArgs),
    /// Scan gadget multiplicities for the least forcing one
    Dk(DkArgs),
    /// Find a rainbow embedding of a pattern in a coloured host
    Embed(EmbedArgs),
    /// Exact fractional width of a set family
    Width(FamilyArgs),
    /// System of disjoint representatives of a grouped set family
    Sdr(FamilyArgs),
    /// Proper colouring of a bridgeless cubic host with no rainbow 4-cycle
    AvoidC4(HostArgs),
    /// Exact chromatic index of a host
    ChromaticIndex(QueryArgs),
    /// Known degree anti-Ramsey bounds for a pattern
    Bounds(PatternArgs),
    /// Run the acceptance tiers
    Suite(SuiteArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// name | gadget:K,D | class2:K | host:FOREST_FILE
    spec: String,
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    json: bool,
    /// write the artifact here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ForcesArgs {
    /// host: name | gadget:K,D | class2:K | a graph file path
    #[arg(long)]
    host: String,
    /// pattern name from the catalogue
    #[arg(long)]
    pattern: String,
    /// proper | m=K | palette=Q
    #[arg(long, default_value = "proper")]
    mode: String,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<u64>,
    #[arg(long)]
    json: bool,
    /// write the JSON certificate here
    #[arg(long)]
    out: Option<PathBuf>,
    /// write a reproducibility manifest here
    #[arg(long)]
    manifest: Option<PathBuf>,
}

#[derive(Args)]
struct DkArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    dmax: usize,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    host: String,
    /// colouring file with lines `u v colour`
    #[arg(long)]
    colouring: PathBuf,
    #[arg(long)]
    pattern: String,
    #[arg(long, value_enum, default_value_t = EmbedMethod::Search)]
    method: EmbedMethod,
    /// colour multiplicity for the greedy method
    #[arg(long, default_value_t = 1)]
    multiplicity: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedMethod {
    /// exhaustive scan over copies
    Search,
    /// degeneracy-order greedy for complete hosts
    Greedy,
    /// seeded tree embedding for regular hosts
    Tree,
}

#[derive(Args)]
struct FamilyArgs {
    /// family JSON: {"universe": [...], "sets": [[...]], "groups": [[...]]}
    #[arg(long)]
    family: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HostArgs {
    #[arg(long)]
    host: String,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    host: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PatternArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, value_enum, default_value_t = Tier::Fast)]
    tier: Tier,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tier {
    Fast,
    Full,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Inconclusive(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> CliError {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Inconclusive(message)) => {
            eprintln!("inconclusive: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Forces(args) => forces_cmd(args, cli.workers, cli.seed),
        Command::Dk(args) => dk_cmd(args, cli.workers),
        Command::Embed(args) => embed_cmd(args),
        Command::Width(args) => width_cmd(args),
        Command::Sdr(args) => sdr_cmd(args),
        Command::AvoidC4(args) => avoid_c4_cmd(args),
        Command::ChromaticIndex(args) => chromatic_index_cmd(args),
        Command::Bounds(args) => bounds_cmd(args),
        Command::Suite(args) => suite_cmd(args, cli.seed),
    }
}

/// name | gadget:K,D | class2:K | host:FILE | a path to a graph file
fn load_host(spec: &str) -> Result<Graph, CliError> {
    if let Some(rest) = spec.strip_prefix("gadget:") {
        let (k, d) = parse_pair(rest)?;
        return Ok(gadget(k, d).map_err(CliError::input)?.graph);
    }
    if let Some(rest) = spec.strip_prefix("class2:") {
        let k: usize = rest.parse().map_err(CliError::input)?;
        return class2_regular(k).map_err(CliError::input);
    }
    if let Some(rest) = spec.strip_prefix("host:") {
        let text = read_file(Path::new(rest))?;
        let forest = parse_graph(&text).map_err(CliError::input)?;
        return forest_host(&forest).map_err(CliError::input);
    }
    if Path::new(spec).exists() {
        let text = read_file(Path::new(spec))?;
        return parse_graph(&text).map_err(CliError::input);
    }
    named_graph(spec).map_err(CliError::input)
}

fn parse_pair(text: &str) -> Result<(usize, usize), CliError> {
    let mut parts = text.split(',');
    let mut next = || {
        parts
            .next()
            .and_then(|t| t.trim().parse::<usize>().ok())
            .ok_or_else(|| CliError::Input(format!("expected K,D after the colon in `{text}`")))
    };
    Ok((next()?, next()?))
}

fn load_pattern(name: &str) -> Result<Pattern, CliError> {
    let g = named_graph(name).map_err(CliError::input)?;
    Pattern::new(g).map_err(CliError::input)
}

fn parse_mode(text: &str) -> Result<Mode, CliError> {
    if text == "proper" {
        return Ok(Mode::Proper);
    }
    if let Some(m) = text.strip_prefix("m=") {
        return Ok(Mode::MBounded(m.parse().map_err(CliError::input)?));
    }
    if let Some(q) = text.strip_prefix("palette=") {
        return Ok(Mode::PaletteLimited(q.parse().map_err(CliError::input)?));
    }
    Err(CliError::Input(format!(
        "unknown mode `{text}`; use proper, m=K or palette=Q"
    )))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_artifact(path: &Path, content: &str) -> CliResult {
    std::fs::write(path, content).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, content: &str) -> CliResult {
    match out {
        Some(path) => write_artifact(path, content),
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn construct(args: ConstructArgs) -> CliResult {
    let g = load_host(&args.spec)?;
    let content = if args.dot {
        to_dot(&g)
    } else if args.json {
        #[derive(Serialize)]
        struct GraphJson<'a> {
            vertex_count: usize,
            edges: &'a [(usize, usize)],
        }
        serde_json::to_string_pretty(&GraphJson {
            vertex_count: g.vertex_count(),
            edges: g.edges(),
        })
        .expect("graph serialises")
    } else {
        format_graph(&g)
    };
    emit(&args.out, &content)
}

#[derive(Serialize)]
struct RunManifest {
    command: Vec<String>,
    inputs: BTreeMap<String, String>,
    seed: u64,
    budget_nodes: Option<u64>,
    budget_secs: Option<u64>,
    outcome: String,
    artifacts: Vec<String>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn forces_cmd(args: ForcesArgs, workers: usize, seed: u64) -> CliResult {
    let g = load_host(&args.host)?;
    let h = load_pattern(&args.pattern)?;
    let mode = parse_mode(&args.mode)?;
    let options = SearchOptions {
        budget_nodes: args.budget_nodes,
        budget_time: args.budget_secs.map(Duration::from_secs),
        workers,
        ..SearchOptions::default()
    };
    let cert = forces_with(&g, &h, mode, &options).map_err(CliError::input)?;
    let json = serde_json::to_string_pretty(&cert).expect("certificate serialises");
    if let Some(path) = &args.out {
        write_artifact(path, &json)?;
    }
    if args.json {
        println!("{json}");
    } else {
        match cert.verdict {
            Verdict::Forces => println!(
                "forces: every colouring contains a rainbow {} ({} nodes)",
                args.pattern, cert.stats.nodes
            ),
            Verdict::WitnessFound => {
                println!(
                    "witness found: a colouring avoids every rainbow {}",
                    args.pattern
                );
                let witness = cert.witness_colouring().unwrap();
                print!("{}", format_colouring(&g, &witness));
            }
            Verdict::Inconclusive => {}
        }
    }
    if let Some(path) = &args.manifest {
        let mut inputs = BTreeMap::new();
        if Path::new(&args.host).exists() {
            let bytes = std::fs::read(&args.host).map_err(CliError::input)?;
            inputs.insert(args.host.clone(), format!("{:016x}", fnv1a64(&bytes)));
        }
        let manifest = RunManifest {
            command: std::env::args().collect(),
            inputs,
            seed,
            budget_nodes: args.budget_nodes,
            budget_secs: args.budget_secs,
            outcome: format!("{:?}", cert.verdict),
            artifacts: args.out.iter().map(|p| p.display().to_string()).collect(),
        };
        write_artifact(
            path,
            &serde_json::to_string_pretty(&manifest).expect("manifest serialises"),
        )?;
    }
    if cert.verdict == Verdict::Inconclusive {
        return Err(CliError::Inconclusive(format!(
            "budget exhausted after {} nodes",
            cert.stats.nodes
        )));
    }
    Ok(())
}

fn dk_cmd(args: DkArgs, workers: usize) -> CliResult {
    let options = SearchOptions {
        budget_nodes: args.budget_nodes,
        budget_time: args.budget_secs.map(Duration::from_secs),
        workers,
        ..SearchOptions::default()
    };
    let scan =
        smallest_forcing_multiplicity(args.k, args.dmax, &options).map_err(CliError::input)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&scan).expect("scan serialises")
        );
    }
    match scan {
        MultiplicityScan::Found { multiplicity, .. } => {
            if !args.json {
                println!("{multiplicity}");
            }
            Ok(())
        }
        MultiplicityScan::NotFoundUpTo(dmax) => {
            if !args.json {
                println!("none up to {dmax}");
            }
            Ok(())
        }
        MultiplicityScan::Inconclusive { multiplicity, .. } => Err(CliError::Inconclusive(
            format!("budget exhausted at multiplicity {multiplicity}"),
        )),
    }
}

fn embed_cmd(args: EmbedArgs) -> CliResult {
    let g = load_host(&args.host)?;
    let text = read_file(&args.colouring)?;
    let c = parse_colouring(&text, &g).map_err(CliError::input)?;
    let h = load_pattern(&args.pattern)?;
    let embedding = match args.method {
        EmbedMethod::Search => find_rainbow_copy(&g, &c, &h),
        EmbedMethod::Greedy => {
            Some(greedy_rainbow_embed(&g, &c, &h, args.multiplicity).map_err(CliError::input)?)
        }
        EmbedMethod::Tree => Some(rainbow_tree_embed(&g, &c, &h).map_err(CliError::input)?),
    };
    #[derive(Serialize)]
    struct EmbedJson<'a> {
        found: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        embedding: Option<&'a antiramsey::Embedding>,
    }
    let json = serde_json::to_string_pretty(&EmbedJson {
        found: embedding.is_some(),
        embedding: embedding.as_ref(),
    })
    .expect("embedding serialises");
    println!("{json}");
    Ok(())
}

fn load_family(path: &Path) -> Result<SetFamily, CliError> {
    let text = read_file(path)?;
    let family: SetFamily = serde_json::from_str(&text).map_err(CliError::input)?;
    family.validate().map_err(CliError::input)?;
    Ok(family)
}

fn width_cmd(args: FamilyArgs) -> CliResult {
    let family = load_family(&args.family)?;
    let width = fractional_width(&family).map_err(CliError::input)?;
    if args.json {
        println!("{}", serde_json::json!({ "width": width.to_string() }));
    } else {
        println!("{width}");
    }
    Ok(())
}

fn sdr_cmd(args: FamilyArgs) -> CliResult {
    let family = load_family(&args.family)?;
    let system = disjoint_representatives(&family).map_err(CliError::input)?;
    if args.json {
        println!("{}", serde_json::json!({ "system": system }));
    } else {
        match system {
            Some(indices) => {
                let rendered: Vec<String> = indices
                    .iter()
                    .map(|&i| {
                        let set: Vec<String> =
                            family.sets[i].iter().map(Element::to_string).collect();
                        format!("{i}: {{{}}}", set.join(", "))
                    })
                    .collect();
                println!("{}", rendered.join("\n"));
            }
            None => println!("none"),
        }
    }
    Ok(())
}

fn avoid_c4_cmd(args: HostArgs) -> CliResult {
    let g = load_host(&args.host)?;
    let c = antiramsey::matching::avoid_rainbow_c4_cubic(&g).map_err(CliError::input)?;
    // verification report: properness plus an exhaustive rainbow scan
    let c4 = load_pattern("c_4")?;
    let proper = is_proper(&g, &c);
    let rainbow_free = enumerate_copies(&g, &c4).iter().all(|cp| !cp.is_rainbow(&c));
    if let Some(path) = &args.out {
        write_artifact(path, &format_colouring(&g, &c))?;
    }
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "colouring": colouring_to_json(&g, &c),
                "colours_used": c.colour_count(),
                "proper": proper,
                "rainbow_c4_free": rainbow_free,
            })
        );
    } else {
        print!("{}", format_colouring(&g, &c));
        println!(
            "# proper: {proper}; rainbow 4-cycle free: {rainbow_free}; colours: {}",
            c.colour_count()
        );
    }
    assert!(proper && rainbow_free, "scheme output failed verification");
    Ok(())
}

fn chromatic_index_cmd(args: QueryArgs) -> CliResult {
    let g = load_host(&args.host)?;
    if g.edge_count() == 0 {
        return Err(CliError::Input("host has no edges".into()));
    }
    let chi = chromatic_index(&g);
    if args.json {
        println!(
            "{}",
            serde_json::json!({ "chromatic_index": chi, "max_degree": g.max_degree() })
        );
    } else {
        println!("{chi}");
    }
    Ok(())
}

fn bounds_cmd(args: PatternArgs) -> CliResult {
    let h = load_pattern(&args.pattern)?;
    let bounds = ar_d_bounds(&h);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&bounds).expect("bounds serialise")
        );
    } else {
        match bounds.upper {
            Some(upper) if upper == bounds.lower => {
                println!("exactly {upper} ({})", bounds.provenance)
            }
            Some(upper) => println!(
                "between {} and {upper} ({})",
                bounds.lower, bounds.provenance
            ),
            None => println!("at least {} ({})", bounds.lower, bounds.provenance),
        }
    }
    Ok(())
}

fn suite_cmd(args: SuiteArgs, seed: u64) -> CliResult {
    let reports = match args.tier {
        Tier::Fast => acceptance::fast_tier(seed),
        Tier::Full => acceptance::full_tier(seed),
    };
    if args.json {
        #[derive(Serialize)]
        struct ReportJson<'a> {
            id: usize,
            label: &'a str,
            passed: bool,
            detail: &'a str,
            millis: u128,
        }
        let rows: Vec<ReportJson> = reports
            .iter()
            .map(|r| ReportJson {
                id: r.id,
                label: r.label,
                passed: r.passed,
                detail: &r.detail,
                millis: r.millis,
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("reports serialise")
        );
    } else {
        for report in &reports {
            println!("{}", report.line());
        }
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(CliError::Input("some criteria failed".into()))
    }
}
