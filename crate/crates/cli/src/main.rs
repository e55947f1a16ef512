use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use diii_core::*;

#[derive(Parser)]
#[command(name = "diii", version, about = "DIII (n,n)-clans: counting, weak order, sects, bijections, flags")]
struct Cli {
    /// Worker threads for enumeration and batch checks (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of DIII (n,n)-clans.
    Count {
        n: usize,
        /// Also list the count for each number of mate pairs.
        #[arg(long)]
        by_pairs: bool,
    },
    /// List every DIII (n,n)-clan.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Compact)]
        format: ListFormat,
    },
    /// Length of a clan in the weak order.
    Length {
        #[arg(allow_hyphen_values = true)]
        clan: String,
        /// Print spreads, weaves and z as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Apply the simple reflection s_i to a clan.
    Act {
        i: usize,
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
    /// The weak-order poset on DIII (n,n)-clans.
    Poset {
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
    },
    /// Rank generating polynomial A_n(t).
    RankPoly {
        n: usize,
        #[arg(long, value_enum, default_value_t = RankMethod::Recurrence)]
        method: RankMethod,
    },
    /// Clans grouped by base clan.
    Sects {
        n: usize,
        #[arg(long)]
        sizes_only: bool,
    },
    /// The sect of the dense cell, with each clan's partial involution.
    BigSect { n: usize },
    /// Translate between clans and the other models.
    Convert {
        /// Model of the input (default: clan).
        #[arg(long, value_enum)]
        from: Option<Model>,
        /// Model of the output (default: clan).
        #[arg(long, value_enum)]
        to: Option<Model>,
        /// Half-length, needed with --from pfpf.
        #[arg(long)]
        n: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Representative flag matrix of a clan.
    Flag {
        #[arg(allow_hyphen_values = true)]
        clan: String,
        #[arg(long, value_enum, default_value_t = FlagFormat::Pretty)]
        format: FlagFormat,
    },
    /// Run the invariant suite for every size up to n.
    Verify { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Compact,
    Spaced,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RankMethod {
    Poset,
    Recurrence,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlagFormat {
    Pretty,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Clan,
    Pfpf,
    Pyramid,
    Rooks,
    Partitions,
    Delannoy,
}

fn clan_arg(text: &str) -> Result<DiiiClan> {
    DiiiClan::parse(text).with_context(|| format!("cannot use {text:?} as a DIII clan"))
}

fn read_input(from: Model, n: Option<usize>, input: &str) -> Result<DiiiClan> {
    Ok(match from {
        Model::Clan => clan_arg(input)?,
        Model::Pfpf => {
            let Some(n) = n else {
                bail!("--from pfpf needs --n");
            };
            pfpf_to_clan(&PartialFpfInvolution::parse(n, input)?)?
        }
        Model::Pyramid => pyramid_to_clan(&Pyramid::from_json(input)?)?,
        Model::Rooks => placement_to_clan(&RookPlacement::from_json(input)?)?,
        Model::Delannoy => path_to_clan(&WeightedDelannoyPath::parse(input)?)?,
        Model::Partitions => bail!("partition pairs are output only"),
    })
}

fn write_output(to: Model, c: &DiiiClan) -> Result<String> {
    Ok(match to {
        Model::Clan => c.to_string(),
        Model::Pfpf => {
            let x = clan_to_pfpf(c)?;
            if x.pairs().is_empty() {
                "(empty)".to_string()
            } else {
                x.to_string()
            }
        }
        Model::Pyramid => clan_to_pyramid(c).to_json(),
        Model::Rooks => clan_to_placement(c).to_json(),
        Model::Partitions => clan_to_partition_pair(c)?.to_string(),
        Model::Delannoy => clan_to_path(c).to_string(),
    })
}

fn run(cmd: Command, out: &mut impl Write) -> Result<bool> {
    match cmd {
        Command::Count { n, by_pairs } => {
            if by_pairs {
                for r in 0..=n / 2 {
                    writeln!(out, "r={r}: {}", count_by_pairs(n, r)?)?;
                }
            }
            writeln!(out, "{}", if n == 0 { count_recurrence(0)? } else { count_formula(n)? })?;
        }
        Command::Enumerate { n, format } => {
            let set = enumerate_diii(n)?;
            match format {
                ListFormat::Compact => for c in set.iter() {
                        writeln!(out, "{c}")?;
                    },
                ListFormat::Spaced => for c in set.iter() {
                        writeln!(out, "{}", c.to_spaced())?;
                    },
                ListFormat::Json => writeln!(out, "{}", serde_json::to_string(&set.clans)?)?,
            }
        }
        Command::Length { clan, json } => {
            let stats = clan_length(&clan_arg(&clan)?);
            if json {
                writeln!(out, "{}", serde_json::to_string(&stats)?)?;
            } else {
                writeln!(out, "{}", stats.length)?;
            }
        }
        Command::Act { i, clan } => writeln!(out, "{}", apply_reflection(i, &clan_arg(&clan)?)?)?,
        Command::Poset { n, format } => {
            let poset = weak_order_poset(n)?;
            match format {
                PosetFormat::Dot => write!(out, "{}", poset.to_dot())?,
                PosetFormat::Json => writeln!(out, "{}", poset.to_json())?,
            }
        }
        Command::RankPoly { n, method } => {
            let rec = matches!(method, RankMethod::Recurrence | RankMethod::Both)
                .then(|| rank_poly_recurrence(n))
                .transpose()?;
            let pos = matches!(method, RankMethod::Poset | RankMethod::Both)
                .then(|| weak_order_poset(n).map(|p| p.rank_polynomial()))
                .transpose()?;
            match (pos, rec) {
                (Some(p), Some(r)) => {
                    writeln!(out, "poset:      {p}")?;
                    writeln!(out, "recurrence: {r}")?;
                    if p != r {
                        writeln!(out, "MISMATCH")?;
                        return Ok(false);
                    }
                    writeln!(out, "match")?;
                }
                (Some(p), None) | (None, Some(p)) => writeln!(out, "{p}")?,
                (None, None) => unreachable!(),
            }
        }
        Command::Sects { n, sizes_only } => {
            for s in sects(n)? {
                if sizes_only {
                    writeln!(out, "{} {}", s.base, s.len())?;
                } else {
                    let members: Vec<String> = s.members.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{}: {}", s.base, members.join(" "))?;
                }
            }
        }
        Command::BigSect { n } => {
            let sect = big_sect(n)?;
            writeln!(out, "base {} ({} clans)", sect.base, sect.len())?;
            for c in &sect.members {
                writeln!(out, "{c}\t{}", write_output(Model::Pfpf, c)?)?;
            }
        }
        Command::Convert { from, to, n, input } => {
            let c = read_input(from.unwrap_or(Model::Clan), n, &input)?;
            writeln!(out, "{}", write_output(to.unwrap_or(Model::Clan), &c)?)?;
        }
        Command::Flag { clan, format } => {
            let g = representative_matrix(&clan_arg(&clan)?);
            match format {
                FlagFormat::Json => writeln!(out, "{}", g.to_json())?,
                FlagFormat::Pretty => {
                    write!(out, "{}", g.to_pretty())?;
                    writeln!(out, "in SO({}): {}", g.size(), verify_special_orthogonal(&g))?;
                    writeln!(out, "dim(V_n ∩ E_n) = {}", intersection_dimension(&g))?;
                }
            }
        }
        Command::Verify { n } => {
            if n == 0 {
                bail!("n must be at least 1");
            }
            let results = run_suite(n);
            let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in &results {
                let mark = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{mark}  {:width$}  {}", r.name, r.detail)?;
            }
            return Ok(results.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = BufWriter::new(io::stdout().lock());
    let status = run(cli.command, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match status {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}
