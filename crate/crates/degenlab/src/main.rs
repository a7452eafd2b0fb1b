//! Command-line front end over the analysis library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use degenlab::error::ParseError;
use degenlab::{
    analysis_json, analysis_text, analyze, battery_json, build_report, canonical_form,
    catalog_line, display_symbol, enumerate_arrangements, enumerate_graphs_up_to,
    exists_pair_of_type, find_type_collisions, graph_from_certificate, parse_curated,
    parse_edge_list, parse_graph_json, parse_type_symbol, realize_symbol, type_symbol,
    ArrangementGraph, CuratedTable, Error, PairType, Result, Verdict,
};

#[derive(Parser)]
#[command(
    name = "degenlab",
    version,
    about = "Invariants and smoothability obstructions for line arrangements in the double curve of a plane arrangement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant and obstruction report for one arrangement.
    Analyze(InputArgs),
    /// Stream every isomorphism class of arrangements at a plane count.
    Enumerate {
        /// Plane count (at most 6).
        #[arg(long)]
        m: u32,
        /// Keep only classes whose augmented complement stays connected.
        #[arg(long)]
        irreducible_only: bool,
        /// Keep only classes with at least one fired criterion.
        #[arg(long)]
        obstructed_only: bool,
    },
    /// Stream the abstract graph catalog up to an edge bound.
    Catalog {
        /// Plane count the classes are embedded into.
        #[arg(long)]
        m: u32,
        /// Largest edge count to include (at most 8).
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
    },
    /// Search for an irreducible pair with the given pair type.
    SearchType {
        /// Target pair type, written m,dbar,k,tau2,tau3.
        #[arg(long = "type", value_name = "M,DBAR,K,TAU2,TAU3")]
        target: String,
    },
    /// List pair types shared by several graph classes.
    Collisions {
        /// Plane count the classes are embedded into.
        #[arg(long)]
        m: u32,
        /// Largest edge count to include (at most 8).
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
    },
    /// Run only the obstruction battery.
    Battery(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Plane count; required with --edges and --symbol.
    #[arg(long)]
    m: Option<u32>,
    /// Inline edge list, e.g. "1-2,1-3,2-3".
    #[arg(long)]
    edges: Option<String>,
    /// Type symbol, e.g. "(2,1|2,0)"; must determine the class uniquely.
    #[arg(long, conflicts_with = "edges")]
    symbol: Option<String>,
    /// File with an edge list (or a JSON object when it starts with '{').
    #[arg(long, conflicts_with_all = ["edges", "symbol"])]
    file: Option<PathBuf>,
}

fn usage_error(message: &str) -> Error {
    Error::Parse(ParseError::new(1, 1, message))
}

impl InputArgs {
    fn resolve(&self) -> Result<ArrangementGraph> {
        if let Some(edges) = &self.edges {
            let m = self.m.ok_or_else(|| usage_error("--edges requires --m"))?;
            return graph_from_certificate(&edges.replace(' ', ""), m);
        }
        if let Some(symbol) = &self.symbol {
            let m = self.m.ok_or_else(|| usage_error("--symbol requires --m"))?;
            return realize_symbol(&parse_type_symbol(symbol)?, m);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)?;
            return if text.trim_start().starts_with('{') {
                parse_graph_json(&text)
            } else {
                parse_edge_list(&text)
            };
        }
        Err(usage_error("one of --edges, --symbol, or --file is required"))
    }
}

fn load_table() -> Result<CuratedTable> {
    match std::env::var_os("DEGENLAB_CURATED_TABLE") {
        Some(path) => parse_curated(&std::fs::read_to_string(path)?),
        None => Ok(CuratedTable::builtin().clone()),
    }
}

fn parse_target(s: &str) -> Result<PairType> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(usage_error("expected five comma-separated integers m,dbar,k,tau2,tau3"));
    }
    let mut v = [0i128; 5];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot =
            part.parse().map_err(|_| usage_error(&format!("bad integer {part:?} in pair type")))?;
    }
    if v[0] < 0 || v[0] > u32::MAX as i128 {
        return Err(usage_error("plane count out of range in pair type"));
    }
    Ok(PairType { m: v[0] as u32, dbar: v[1], k: v[2], tau2: v[3], tau3: v[4] })
}

fn class_text_line(g: &ArrangementGraph, table: &CuratedTable) -> String {
    let report = build_report(g, table);
    let cert = match canonical_form(g) {
        Ok(c) if c.certificate.is_empty() => "(empty)".to_string(),
        Ok(c) => c.certificate,
        Err(_) => "(uncertified)".to_string(),
    };
    let pt = report.pair_type;
    let verdict = match (&report.verdict, &report.curated) {
        (Verdict::KnownResult, Some(v)) => format!("KnownResult:{}", v.status),
        (v, _) => v.to_string(),
    };
    format!(
        "{}\t{}\t({},{},{},{},{})\t{}",
        display_symbol(&type_symbol(g)),
        cert,
        pt.m,
        pt.dbar,
        pt.k,
        pt.tau2,
        pt.tau3,
        verdict
    )
}

fn emit_class(g: &ArrangementGraph, table: &CuratedTable, format: Format) {
    match format {
        Format::Json => println!("{}", catalog_line(g, table)),
        Format::Text => println!("{}", class_text_line(g, table)),
    }
}

fn run(cli: Cli) -> Result<()> {
    let table = load_table()?;
    match cli.command {
        Command::Analyze(input) => {
            let g = input.resolve()?;
            let a = analyze(&g, &table);
            match cli.format {
                Format::Json => println!("{}", analysis_json(&a)),
                Format::Text => print!("{}", analysis_text(&a)),
            }
        }
        Command::Battery(input) => {
            let g = input.resolve()?;
            let report = build_report(&g, &table);
            match cli.format {
                Format::Json => println!("{}", battery_json(&report)),
                Format::Text => {
                    let pt = report.pair_type;
                    println!("pair type ({},{},{},{},{})", pt.m, pt.dbar, pt.k, pt.tau2, pt.tau3);
                    if report.fired.is_empty() {
                        println!("battery: silent");
                    }
                    for o in &report.fired {
                        println!("fired: {} - {}", o.name(), o.description());
                    }
                    match &report.curated {
                        Some(v) => {
                            println!("curated: {} [{}] per {}", v.status, v.applicable_m, v.source)
                        }
                        None => println!("curated: none"),
                    }
                    println!("verdict: {}", report.verdict);
                }
            }
        }
        Command::Enumerate { m, irreducible_only, obstructed_only } => {
            for class in enumerate_arrangements(m)? {
                if irreducible_only && !class.irreducible {
                    continue;
                }
                if obstructed_only
                    && build_report(&class.graph, &table).verdict != Verdict::Obstructed
                {
                    continue;
                }
                emit_class(&class.graph, &table, cli.format);
            }
        }
        Command::Catalog { m, max_edges } => {
            for class in enumerate_graphs_up_to(max_edges)? {
                if class.graph.vertex_count() > m as usize {
                    continue;
                }
                emit_class(&class.graph.with_m(m)?, &table, cli.format);
            }
        }
        Command::SearchType { target } => {
            let st = parse_target(&target)?;
            let witness = exists_pair_of_type(&st)?;
            match cli.format {
                Format::Json => {
                    let value = match &witness {
                        Some(g) => json!({
                            "found": true,
                            "m": g.m(),
                            "edges": g.edges().map(|e| [e.i(), e.j()]).collect::<Vec<_>>(),
                            "certificate": canonical_form(g).ok().map(|c| c.certificate),
                        }),
                        None => json!({"found": false}),
                    };
                    println!("{value}");
                }
                Format::Text => match &witness {
                    Some(g) => println!("witness at m = {}: {}", g.m(), class_text_line(g, &table)),
                    None => println!("no arrangement of this type"),
                },
            }
        }
        Command::Collisions { m, max_edges } => {
            for group in find_type_collisions(m, max_edges)? {
                let pt = group.pair_type;
                let certs: Vec<&str> =
                    group.classes.iter().map(|c| c.canonical.certificate.as_str()).collect();
                match cli.format {
                    Format::Json => {
                        println!("{}", json!({"pair_type": pt.as_array(), "certificates": certs}))
                    }
                    Format::Text => println!(
                        "type ({},{},{},{},{}): {}",
                        pt.m,
                        pt.dbar,
                        pt.k,
                        pt.tau2,
                        pt.tau3,
                        certs.join(" | ")
                    ),
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
