use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphsiege::attacks::{
    campaign, parse_profile, run_attack_with, AttackProfile, CampaignSummary, DamageTrace,
    Knowledge, Recompute,
};
use graphsiege::centrality::{edge_betweenness_with, vertex_betweenness_with, BetweennessTable};
use graphsiege::damage::{damage_with, DamageReport};
use graphsiege::fixtures::{ladder_graph, scaled_rung, LADDER};
use graphsiege::format::g6;
use graphsiege::fragmentation::{s_table, STableRow};
use graphsiege::generators::{generate, Family, GenSpec};
use graphsiege::io::{read_edge_list, write_edge_list};
use graphsiege::paths::MetricReport;
use graphsiege::{Exec, Graph};

#[derive(Parser)]
#[command(
    name = "graphsiege",
    version,
    about = "Fragmentation damage and attack experiments on undirected graphs"
)]
struct Cli {
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph as an edge list.
    Gen(GenArgs),
    /// Path and clustering metrics of a graph.
    Stats(InputArgs),
    /// Vertex or edge betweenness table.
    Betweenness {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Kind::Vertex)]
        kind: Kind,
    },
    /// Edge list of the subgraph discovered from a center, with its id map.
    Discover {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        view: ViewArgs,
    },
    /// Damage relative to the reconnected reference graph.
    Damage(InputArgs),
    /// Run one attack profile and write its damage trace.
    Attack {
        #[command(flatten)]
        input: InputArgs,
        /// Profile such as `D:H` or `E:L`.
        #[arg(long, default_value = "E:H")]
        profile: String,
        #[command(flatten)]
        view: ViewArgs,
        #[command(flatten)]
        attack: AttackArgs,
        #[arg(long, env = "GRAPHSIEGE_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Run several profiles over several seeds and write mean traces.
    Campaign {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated profiles.
        #[arg(long, value_delimiter = ',', default_value = "E:H,E:L,V:H,V:L,D:H,D:L")]
        profile: Vec<String>,
        #[command(flatten)]
        view: ViewArgs,
        #[command(flatten)]
        attack: AttackArgs,
        /// First seed; seeds `seed..seed+runs` are used.
        #[arg(long, env = "GRAPHSIEGE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        runs: u64,
    },
    /// Exact and closed-form mean fragment size for each size class.
    STable {
        #[arg(long, default_value_t = 2520)]
        n: usize,
        /// A single value, a list `2,3,5` or a range `2..10`.
        #[arg(long, default_value = "2..10")]
        j: String,
    },
    /// Damage of each fragment-ladder rung at several scales.
    Ladder {
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,10")]
        scales: Vec<usize>,
        #[arg(long, env = "GRAPHSIEGE_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Edge list file.
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Args)]
struct ViewArgs {
    #[arg(long, default_value_t = 0)]
    center: usize,
    /// Discovery radius in hops; omit for the whole component.
    #[arg(long)]
    radius: Option<usize>,
}

#[derive(Args)]
struct AttackArgs {
    /// Stop after this many removals.
    #[arg(long)]
    steps: Option<usize>,
    /// Rank once on the initial view instead of after every removal.
    #[arg(long)]
    initial: bool,
    /// Rediscover the view from the center every step.
    #[arg(long)]
    rediscover: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::ErGnm)]
    family: FamilyName,
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Edge probability (er-gnp) or rewiring probability (ws).
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Lattice degree (ws).
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Edge count (er-gnm) or attachments per vertex (ba).
    #[arg(long, default_value_t = 120)]
    m: usize,
    #[arg(long, env = "GRAPHSIEGE_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    ErGnp,
    ErGnm,
    Ws,
    Ba,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Vertex,
    Edge,
}

type Failure = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("graphsiege: {e}");
            ExitCode::from(1)
        }
    }
}

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(input: &InputArgs) -> Result<Graph, Failure> {
    read_edge_list(&input.input).map_err(|e| format!("{}: {e}", input.input.display()).into())
}

fn write_rows<I, R>(out: Box<dyn Write>, header: &[&str], rows: I) -> Result<(), Failure>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn attack_profile(
    text: &str,
    view: &ViewArgs,
    attack: &AttackArgs,
    seed: u64,
) -> Result<AttackProfile, Failure> {
    let mut p = parse_profile(text)?
        .with_center(view.center)
        .with_radius(view.radius)
        .with_seed(seed);
    if attack.initial {
        p = p.with_recompute(Recompute::Initial);
    }
    if attack.rediscover {
        p = p.with_knowledge(Knowledge::Rediscovered);
    }
    Ok(p)
}

/// Parses `4`, `2,3,5` or `2..10` (inclusive).
fn parse_js(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || format!("bad --j value {text:?}");
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad().into()))
        .collect()
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let out = || sink(cli.output.as_deref());
    match &cli.command {
        Command::Gen(a) => {
            let family = match a.family {
                FamilyName::ErGnp => Family::ErGnp { p: a.p },
                FamilyName::ErGnm => Family::ErGnm { edges: a.m },
                FamilyName::Ws => Family::WattsStrogatz {
                    k: a.k,
                    rewire_p: a.p,
                },
                FamilyName::Ba => Family::BarabasiAlbert { m_attach: a.m },
            };
            let g = generate(&GenSpec {
                family,
                n: a.n,
                seed: a.seed,
            })?;
            let mut o = out()?;
            o.write_all(write_edge_list(&g).as_bytes())?;
            o.flush()?;
        }
        Command::Stats(input) => {
            let report = MetricReport::compute_with(&load(input)?, exec);
            write_rows(out()?, &MetricReport::CSV_HEADER, [report.csv_record()])?;
        }
        Command::Betweenness { input, kind } => {
            let g = load(input)?;
            let table = match kind {
                Kind::Vertex => vertex_betweenness_with(&g, exec),
                Kind::Edge => edge_betweenness_with(&g, exec),
            };
            write_rows(out()?, &BetweennessTable::CSV_HEADER, table.csv_records())?;
        }
        Command::Discover { input, view } => {
            let g = load(input)?;
            let v = g.discover(view.center, view.radius)?;
            let mut o = out()?;
            o.write_all(write_edge_list(&v.local).as_bytes())?;
            writeln!(o, "# local global")?;
            for (l, gid) in v.to_global.iter().enumerate() {
                writeln!(o, "# {l} {gid}")?;
            }
            o.flush()?;
        }
        Command::Damage(input) => {
            let report = damage_with(&load(input)?, exec);
            write_rows(out()?, &DamageReport::CSV_HEADER, [report.csv_record()])?;
        }
        Command::Attack {
            input,
            profile,
            view,
            attack,
            seed,
        } => {
            let g = load(input)?;
            g.discover(view.center, view.radius)?;
            let p = attack_profile(profile, view, attack, *seed)?;
            let trace = run_attack_with(&g, &p, attack.steps.unwrap_or(usize::MAX), exec);
            write_rows(out()?, &DamageTrace::CSV_HEADER, trace.csv_records())?;
            eprintln!(
                "{} seed {}: {} steps, stopped: {:?}",
                p.label(),
                seed,
                trace.steps.len(),
                trace.stop
            );
        }
        Command::Campaign {
            input,
            profile,
            view,
            attack,
            seed,
            runs,
        } => {
            let g = load(input)?;
            g.discover(view.center, view.radius)?;
            if profile.is_empty() || *runs == 0 {
                return Err("campaign needs at least one profile and one run".into());
            }
            let profiles = profile
                .iter()
                .map(|t| attack_profile(t, view, attack, *seed))
                .collect::<Result<Vec<_>, _>>()?;
            let seeds: Vec<u64> = (*seed..seed + runs).collect();
            let c = campaign(
                &g,
                &profiles,
                &seeds,
                attack.steps.unwrap_or(usize::MAX),
                exec,
            );
            write_rows(
                out()?,
                &CampaignSummary::CSV_HEADER,
                c.summaries.iter().flat_map(CampaignSummary::csv_records),
            )?;
            for (rank, i) in c.ranking().into_iter().enumerate() {
                let s = &c.summaries[i];
                eprintln!("{}. {} auc {}", rank + 1, s.profile.label(), g6(s.auc));
            }
        }
        Command::STable { n, j } => {
            let js = parse_js(j)?;
            if *n < 2 || js.iter().any(|&j| j < 1 || j > *n) {
                return Err(format!("need n >= 2 and 1 <= j <= n, got n = {n}, j = {j}").into());
            }
            let rows = s_table(*n, &js);
            write_rows(
                out()?,
                &STableRow::CSV_HEADER,
                rows.iter().map(STableRow::csv_record),
            )?;
        }
        Command::Ladder { scales, seed } => {
            if scales.contains(&0) {
                return Err("scales must be positive".into());
            }
            let mut rows = Vec::new();
            for &scale in scales {
                for (i, rung) in LADDER.iter().enumerate() {
                    let g = ladder_graph(i, scale, *seed);
                    let d = damage_with(&g, exec);
                    let sizes = scaled_rung(rung, scale);
                    rows.push(vec![
                        i.to_string(),
                        scale.to_string(),
                        g.alive_count().to_string(),
                        sizes.len().to_string(),
                        sizes
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(";"),
                        g6(d.ratio),
                        g6(d.damage),
                    ]);
                }
            }
            write_rows(
                out()?,
                &[
                    "rung",
                    "scale",
                    "n",
                    "m_fragments",
                    "sizes",
                    "ratio",
                    "damage",
                ],
                rows,
            )?;
        }
    }
    Ok(())
}
