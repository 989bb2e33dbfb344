mod commands;
mod doc;
mod dot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use omegacanon::{Error, Limits};

#[derive(Parser)]
#[command(name = "omegacanon", version, about = "Natural colors, canonical FDFAs and Wagner measures for ω-regular languages")]
struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest MSCC whose subsets are enumerated (overrides OMEGACANON_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Word bounds U,V for searches: |u| <= U, 1 <= |v| <= V.
    #[arg(long, global = true, value_parser = parse_bounds)]
    bounds: Option<(usize, usize)>,
    /// Write the produced document to FILE instead of embedding it in stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Inclusion measures and hierarchy class of an automaton.
    Wagner { file: PathBuf },
    /// Diameter of an FDFA (or of the periodic FDFA of an automaton).
    Diameter { file: PathBuf },
    /// Build the colorful FDFA of an automaton.
    Colorful {
        file: PathBuf,
        /// Also write the DOT rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Query the color of (U, V) in the built FDFA.
        #[arg(long, requires = "v")]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
    },
    /// Natural color of a finite period, or of an ω-word with --infinite.
    Color {
        file: PathBuf,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long, required_unless_present = "upword")]
        v: Option<String>,
        /// Read (u, v) from an upword document; implies --infinite.
        #[arg(long)]
        upword: Option<PathBuf>,
        #[arg(long)]
        infinite: bool,
    },
    /// Boolean operations and decision procedures on FDFAs.
    FdfaOps {
        #[arg(value_enum)]
        op: commands::FdfaOp,
        files: Vec<PathBuf>,
    },
    /// Membership of an ω-word in an automaton or FDFA.
    Accepts {
        file: PathBuf,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long, required_unless_present = "upword")]
        v: Option<String>,
        #[arg(long)]
        upword: Option<PathBuf>,
    },
    /// Black&White DBA or DCA of an automaton.
    Bw {
        #[arg(value_enum)]
        kind: commands::BwKind,
        file: PathBuf,
    },
    /// Graphviz rendering of an automaton or FDFA document.
    Dot { file: PathBuf },
    /// Run the property suites on the bundled fixtures.
    Selftest {
        /// Add an FDFA that is not saturated, which must be reported.
        #[arg(long)]
        inject_unsaturated: bool,
    },
    /// Print a bundled fixture document.
    #[command(hide = true)]
    Fixture { name: String },
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once(',').ok_or("expected U,V")?;
    let u = u.trim().parse().map_err(|_| format!("bad bound {u:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad bound {v:?}"))?;
    Ok((u, v))
}

fn limits(cap: Option<usize>) -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Ok(env) = std::env::var("OMEGACANON_CAP") {
        let n = env
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("OMEGACANON_CAP is not a number: {env:?}")))?;
        limits = limits.with_mscc_cap(n);
    }
    if let Some(n) = cap {
        limits = limits.with_mscc_cap(n);
    }
    Ok(limits)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = limits(cli.cap).and_then(|limits| {
        let env = commands::Env { limits, bounds: cli.bounds, out: cli.out.clone() };
        match cli.command {
            Command::Wagner { file } => commands::wagner(&env, &file),
            Command::Diameter { file } => commands::diameter(&env, &file),
            Command::Colorful { file, dot, u, v } => commands::colorful(&env, &file, dot.as_deref(), u.as_deref(), v.as_deref()),
            Command::Color { file, u, v, upword, infinite } => {
                commands::color(&env, &file, &u, v.as_deref(), upword.as_deref(), infinite)
            }
            Command::FdfaOps { op, files } => commands::fdfa_ops(&env, op, &files),
            Command::Accepts { file, u, v, upword } => commands::accepts(&env, &file, &u, v.as_deref(), upword.as_deref()),
            Command::Bw { kind, file } => commands::bw(&env, kind, &file),
            Command::Dot { file } => commands::dot(&env, &file),
            Command::Selftest { inject_unsaturated } => commands::selftest(&env, inject_unsaturated),
            Command::Fixture { name } => commands::fixture(&name),
        }
    });
    match result {
        Ok(outcome) => {
            match cli.format {
                Format::Json => {
                    print!("{}", doc::to_json(&outcome.json));
                    eprintln!("{}", outcome.text);
                }
                Format::Text => println!("{}", outcome.text),
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            let code = match e {
                Error::Capacity { .. } => 3,
                _ => 2,
            };
            if cli.format == Format::Json {
                print!("{}", doc::to_json(&serde_json::json!({ "error": e.to_string() })));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
