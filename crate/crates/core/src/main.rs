use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tt2::delta::enumerate_mono;
use tt2::driver::Session;
use tt2::sstgen::{generate, Artifact, GenPlan};
use tt2::syntax::Universes;

#[derive(Parser)]
#[command(name = "tt2", version, about = "Checker and generator for a two-level type theory")]
struct Cli {
    /// Number of universe levels in each layer.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    universes: u32,

    /// Place every fibrant universe below the lowest strict one.
    #[arg(long, global = true)]
    collapse_fibrant_universes: bool,

    /// One JSON object per diagnostic per line.
    #[arg(long, global = true)]
    json_diagnostics: bool,

    #[arg(long, global = true)]
    no_color: bool,

    /// Extra directories to search for input files.
    #[arg(short = 'I', global = true, value_name = "DIR")]
    include: Vec<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check files in order against one shared signature.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the normal form of a definition.
    Eval {
        file: PathBuf,
        #[arg(long)]
        term: String,
    },
    /// Generate semi-simplicial scaffolding.
    Gen(GenArgs),
    /// Enumerate strictly monotone maps.
    Delta {
        /// Print all maps [k] -> [n].
        #[arg(long, num_args = 2, value_names = ["K", "N"], required = true)]
        faces: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sst,
    Spine,
    Segal,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(long)]
    levels: usize,
    #[arg(long)]
    literal_spine: bool,
    #[arg(long, default_value_t = 0)]
    universe: u32,
    #[arg(long, default_value = "")]
    prefix: String,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("tt2: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let universes = Universes::new(cli.universes, cli.collapse_fibrant_universes).map_err(|e| e.to_string())?;
    let color = !cli.no_color && std::env::var("TT2_COLOR").map_or(true, |v| v != "0");
    let session = || Session::new(universes).with_include(cli.include.clone());
    match cli.command {
        Command::Check { files } => {
            let mut s = session();
            for f in &files {
                s.check_path(f).map_err(|e| e.to_string())?;
            }
            Ok(report(&s, cli.json_diagnostics, color))
        }
        Command::Eval { file, term } => {
            let mut s = session();
            s.check_path(&file).map_err(|e| e.to_string())?;
            if s.has_errors() {
                return Ok(report(&s, cli.json_diagnostics, color));
            }
            let nf = s.normalize(&term).map_err(|e| e.to_string())?;
            println!("{nf}");
            Ok(0)
        }
        Command::Gen(args) => {
            let artifact = match args.kind {
                Kind::Sst => Artifact::Sst,
                Kind::Spine => Artifact::Spine,
                Kind::Segal => Artifact::Segal,
            };
            let mut plan = GenPlan::new(args.levels, artifact);
            plan.literal_spine = args.literal_spine;
            plan.universe = args.universe;
            plan.prefix = args.prefix;
            let text = generate(&plan).map_err(|e| e.to_string())?;
            match args.out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Delta { faces } => {
            let mut out = std::io::stdout().lock();
            for f in enumerate_mono(faces[0], faces[1]) {
                writeln!(out, "{f}").map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
    }
}

fn report(s: &Session, json: bool, color: bool) -> u8 {
    for r in s.reports() {
        if json {
            eprintln!("{}", r.to_json());
        } else {
            eprintln!("{}", r.render(color));
        }
    }
    u8::from(s.has_errors())
}
