//! `ramify` — exact arithmetic of ramification towers, their Herbrand
//! functions, bi-Herbrand envelopes, datum invariants, and the layer calculus
//! of symmetric profiles.
//!
//! Input documents are JSON with all rationals as strings (see `doc`).
//! Exit status: `0` when the command (and any verification) succeeds, `1`
//! when a verification fails, `2` on usage or input errors.

mod doc;
mod ops;
mod render;
mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::doc::RawDoc;
use crate::ops::DirectionArg;
use crate::render::Format;

#[derive(Parser)]
#[command(
    name = "ramify",
    version,
    about = "Exact arithmetic of ramification towers, bi-Herbrand envelopes, \
             datum invariants, and symmetric profiles"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

/// Flags shared by every document-reading command.
#[derive(Args)]
struct Io {
    /// Input document (JSON); reads stdin when omitted.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Herbrand functions of ramification towers.
    #[command(subcommand)]
    Herb(HerbCmd),
    /// The two-sided envelope of a tower with a fixed exponent.
    #[command(subcommand)]
    Bi(BiCmd),
    /// Invariants and parameter calculus of ramification data.
    #[command(subcommand)]
    Carayol(CarayolCmd),
    /// Decomposition and layer calculus of symmetric profiles.
    #[command(subcommand)]
    Galois(GaloisCmd),
    /// Searches for an exponent whose crossing admits two readings.
    Scenario97(ScenarioArgs),
    /// Runs every check the input document supports.
    VerifyAll(VerifyArgs),
}

#[derive(Subcommand)]
enum HerbCmd {
    /// Evaluates the Herbrand function at a point.
    Eval {
        #[command(flatten)]
        io: Io,
        /// Evaluation point, an exact rational.
        #[arg(long)]
        x: String,
    },
    /// Prints the jump table of the Herbrand function.
    Jumps {
        #[command(flatten)]
        io: Io,
    },
    /// Prints the degree, wild exponent, and largest jump of the tower.
    Wild {
        #[command(flatten)]
        io: Io,
    },
    /// Recovers the elementary tower from a Herbrand-shaped function.
    Resolve {
        #[command(flatten)]
        io: Io,
    },
    /// Lifts the tower through a tame base change of the given degree.
    Lift {
        #[command(flatten)]
        io: Io,
        /// Degree of the tame base change (prime to p).
        #[arg(long)]
        lift: u32,
    },
}

#[derive(Subcommand)]
enum BiCmd {
    /// Builds the envelope: both one-sided functions, their maximum, the
    /// crossing, and the mirrored largest jump.
    Build {
        #[command(flatten)]
        io: Io,
    },
    /// Prints the crossing point of the graph with the symmetry axis.
    C {
        #[command(flatten)]
        io: Io,
    },
    /// Runs the symmetry and jump-shape checks on the envelope.
    Check {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Subcommand)]
enum CarayolCmd {
    /// Prints every invariant of the datum.
    Invariants {
        #[command(flatten)]
        io: Io,
        /// Also print q^lambda for this residue size q.
        #[arg(long)]
        q: Option<u64>,
    },
    /// The twisted Herbrand function of the datum at the given level.
    Psi {
        #[command(flatten)]
        io: Io,
        /// Level of the twisting character.
        #[arg(long)]
        level: u64,
    },
    /// Standard-case classification, admissible levels, and standardization.
    Classify {
        #[command(flatten)]
        io: Io,
    },
    /// Predicts the level after twisting at parameter d.
    Vary {
        #[command(flatten)]
        io: Io,
        /// Current level of the datum.
        #[arg(long)]
        level: u64,
        /// Twisting parameter.
        #[arg(long)]
        d: u64,
    },
    /// Converts parameters across the ultrametric pairing.
    Distance {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// The parameter to convert, an exact rational.
        #[arg(long)]
        value: String,
    },
}

#[derive(Subcommand)]
enum GaloisCmd {
    /// Decomposition of the profile at its crossing.
    Analyze {
        #[command(flatten)]
        io: Io,
        /// Apply a tame base change of this degree first.
        #[arg(long)]
        lift: Option<u64>,
    },
    /// The restriction table of the profile.
    Table {
        #[command(flatten)]
        io: Io,
        /// Apply a tame base change of this degree first.
        #[arg(long)]
        lift: Option<u64>,
    },
    /// Peels the first ramification layer off the profile.
    Descend {
        #[command(flatten)]
        io: Io,
        /// Apply a tame base change of this degree first.
        #[arg(long)]
        lift: Option<u64>,
    },
    /// Rebuilds the outer profile from a layer and an inner datum.
    Ascend {
        #[command(flatten)]
        io: Io,
        /// First jump of the outer profile, an exact rational.
        #[arg(long)]
        layer_jump: String,
        /// Height of the first jump (a power of p).
        #[arg(long)]
        layer_height: u64,
        /// Inner datum is a bare character with this Swan exponent
        /// (otherwise read an inner profile from --in).
        #[arg(long)]
        character_sw: Option<u64>,
        /// Residue characteristic; needed with --character-sw.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Closed forms for single-jump profiles.
    Hsingular {
        #[command(flatten)]
        io: Io,
        /// Apply a tame base change of this degree first.
        #[arg(long)]
        lift: Option<u64>,
    },
}

#[derive(Args)]
struct ScenarioArgs {
    #[command(flatten)]
    io: Io,
    /// Smallest jump (an odd positive integer); overrides the document.
    #[arg(long)]
    a: Option<u64>,
    /// Upper bound for the largest jump; overrides the document.
    #[arg(long)]
    b: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    io: Io,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(input: &Option<PathBuf>) -> Result<RawDoc> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .context("cannot read stdin")?;
            buffer
        }
    };
    RawDoc::parse(&text)
}

fn emit(io: &Io, content: &str) -> Result<()> {
    match &io.out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => {
            // A closed pipe downstream (e.g. `ramify ... | head`) is not an
            // error; exit quietly like other line-oriented tools.
            if let Err(err) = std::io::stdout().write_all(content.as_bytes()) {
                if err.kind() == std::io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                return Err(err).context("cannot write to stdout");
            }
        }
    }
    Ok(())
}

/// Rejects csv/svg for commands whose output is prose or a JSON document.
fn text_only(io: &Io) -> Result<()> {
    if io.format != Format::Text {
        anyhow::bail!("this command only supports --format text");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Cmd::Herb(cmd) => run_herb(cmd),
        Cmd::Bi(cmd) => run_bi(cmd),
        Cmd::Carayol(cmd) => run_carayol(cmd),
        Cmd::Galois(cmd) => run_galois(cmd),
        Cmd::Scenario97(args) => {
            text_only(&args.io)?;
            let doc = match &args.io.input {
                Some(_) => Some(read_doc(&args.io.input)?),
                None => None,
            };
            let (a, b) = ops::scenario_inputs(doc, args.a, args.b.as_deref())?;
            let out = ops::scenario(a, &b)?;
            emit(&args.io, &out)?;
            Ok(true)
        }
        Cmd::VerifyAll(args) => {
            text_only(&args.io)?;
            let doc = read_doc(&args.io.input)?;
            let (out, pass) = ops::verify_all(&doc)?;
            emit(&args.io, &out)?;
            Ok(pass)
        }
    }
}

fn run_herb(cmd: HerbCmd) -> Result<bool> {
    match cmd {
        HerbCmd::Eval { io, x } => {
            text_only(&io)?;
            let out = ops::herb_eval(&read_doc(&io.input)?, &x)?;
            emit(&io, &out)?;
        }
        HerbCmd::Jumps { io } => {
            let out = ops::herb_jumps(&read_doc(&io.input)?, io.format)?;
            emit(&io, &out)?;
        }
        HerbCmd::Wild { io } => {
            text_only(&io)?;
            let out = ops::herb_wild(&read_doc(&io.input)?)?;
            emit(&io, &out)?;
        }
        HerbCmd::Resolve { io } => {
            text_only(&io)?;
            let out = ops::herb_resolve(&read_doc(&io.input)?)?;
            emit(&io, &out)?;
        }
        HerbCmd::Lift { io, lift } => {
            text_only(&io)?;
            let out = ops::herb_lift(&read_doc(&io.input)?, lift)?;
            emit(&io, &out)?;
        }
    }
    Ok(true)
}

fn run_bi(cmd: BiCmd) -> Result<bool> {
    match cmd {
        BiCmd::Build { io } => {
            let out = ops::bi_build(&read_doc(&io.input)?, io.format)?;
            emit(&io, &out)?;
            Ok(true)
        }
        BiCmd::C { io } => {
            text_only(&io)?;
            let out = ops::bi_c(&read_doc(&io.input)?)?;
            emit(&io, &out)?;
            Ok(true)
        }
        BiCmd::Check { io } => {
            text_only(&io)?;
            let (out, pass) = ops::bi_check(&read_doc(&io.input)?)?;
            emit(&io, &out)?;
            Ok(pass)
        }
    }
}

fn run_carayol(cmd: CarayolCmd) -> Result<bool> {
    match cmd {
        CarayolCmd::Invariants { io, q } => {
            text_only(&io)?;
            let out = ops::carayol_invariants(&read_doc(&io.input)?, q)?;
            emit(&io, &out)?;
        }
        CarayolCmd::Psi { io, level } => {
            let out = ops::carayol_psi(&read_doc(&io.input)?, level, io.format)?;
            emit(&io, &out)?;
        }
        CarayolCmd::Classify { io } => {
            text_only(&io)?;
            let out = ops::carayol_classify(&read_doc(&io.input)?)?;
            emit(&io, &out)?;
        }
        CarayolCmd::Vary { io, level, d } => {
            text_only(&io)?;
            let out = ops::carayol_vary(&read_doc(&io.input)?, level, d)?;
            emit(&io, &out)?;
        }
        CarayolCmd::Distance {
            io,
            direction,
            value,
        } => {
            text_only(&io)?;
            let out = ops::carayol_distance(&read_doc(&io.input)?, direction, &value)?;
            emit(&io, &out)?;
        }
    }
    Ok(true)
}

fn run_galois(cmd: GaloisCmd) -> Result<bool> {
    match cmd {
        GaloisCmd::Analyze { io, lift } => {
            text_only(&io)?;
            let out = ops::galois_analyze(&read_doc(&io.input)?, lift)?;
            emit(&io, &out)?;
        }
        GaloisCmd::Table { io, lift } => {
            let out = ops::galois_table(&read_doc(&io.input)?, lift, io.format)?;
            emit(&io, &out)?;
        }
        GaloisCmd::Descend { io, lift } => {
            text_only(&io)?;
            let out = ops::galois_descend(&read_doc(&io.input)?, lift)?;
            emit(&io, &out)?;
        }
        GaloisCmd::Ascend {
            io,
            layer_jump,
            layer_height,
            character_sw,
            p,
        } => {
            text_only(&io)?;
            let doc = match &io.input {
                Some(_) => Some(read_doc(&io.input)?),
                None if character_sw.is_none() => Some(read_doc(&io.input)?),
                None => None,
            };
            let out = ops::galois_ascend(doc, &layer_jump, layer_height, character_sw, p)?;
            emit(&io, &out)?;
        }
        GaloisCmd::Hsingular { io, lift } => {
            text_only(&io)?;
            let out = ops::galois_hsingular(&read_doc(&io.input)?, lift)?;
            emit(&io, &out)?;
        }
    }
    Ok(true)
}
