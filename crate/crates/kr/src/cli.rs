use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kr_core::builders::Builder;
use kr_core::cartan::{format_labels, second_decomposition, AffineSpec, Family};
use kr_core::crystal::decomposition;
use kr_core::verify::{grid, Suite};

use crate::document::GraphDocument;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kr", version, about = "Build and check Kirillov–Reshetikhin crystals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct SpecArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Subset {
    /// Colors 1..n.
    Classical,
    /// The second classical subalgebra containing node 0.
    Zero,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build B^{r,s} and write it as a graph document.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the highest weights of a classical decomposition.
    Decompose {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "classical")]
        subset: Subset,
    },
    /// Print the number of vertices.
    Dim {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Run check suites on one spec or on a grid.
    Check {
        #[arg(long, value_parser = parse_family, requires_all = ["n", "r", "s"])]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteChoice,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        s_max: usize,
        /// Report format: text lines, or JSON with `--format json`.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
pub enum SuiteChoice {
    All,
    One(Suite),
}

impl SuiteChoice {
    pub fn suites(&self) -> Vec<Suite> {
        match self {
            SuiteChoice::All => Suite::ALL.to_vec(),
            SuiteChoice::One(s) => vec![*s],
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    Suite::parse(s).map(SuiteChoice::One).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected all or one of {}", names.join(", "))
    })
}

fn spec_of(a: &SpecArgs) -> Result<AffineSpec, String> {
    AffineSpec::new(a.family, a.n, a.r, a.s).map_err(|e| e.to_string())
}

fn write_out(path: Option<&PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

/// Runs a parsed command, writing results to `stdout` and diagnostics to
/// `stderr`; returns the exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut builder = Builder::new();
    let result: Result<i32, (i32, String)> = (|| match cli.command {
        Command::Build { spec, format, out } => {
            let spec = spec_of(&spec).map_err(|e| (EXIT_INVALID, e))?;
            let b = builder.build(spec).map_err(|e| (EXIT_INVALID, e.to_string()))?;
            let doc = GraphDocument::from_build(&b);
            let text = match format {
                Format::Json => doc.to_json(),
                Format::Dot => doc.to_dot(),
            };
            write_out(out.as_ref(), &text, stdout).map_err(|e| (EXIT_INVALID, e))?;
            Ok(EXIT_OK)
        }
        Command::Decompose { spec, subset } => {
            let spec = spec_of(&spec).map_err(|e| (EXIT_INVALID, e))?;
            let b = builder.build(spec).map_err(|e| (EXIT_INVALID, e.to_string()))?;
            let colors = match subset {
                Subset::Classical => spec.classical_colors(),
                Subset::Zero => second_decomposition(&spec).0,
            };
            let parts: Vec<String> = decomposition(&b.graph, &colors).iter().map(|l| format_labels(l)).collect();
            writeln!(stdout, "{}", parts.join(", ")).map_err(|e| (EXIT_INVALID, e.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::Dim { spec } => {
            let spec = spec_of(&spec).map_err(|e| (EXIT_INVALID, e))?;
            let b = builder.build(spec).map_err(|e| (EXIT_INVALID, e.to_string()))?;
            writeln!(stdout, "{}", b.len()).map_err(|e| (EXIT_INVALID, e.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::Check { family, n, r, s, suite, n_max, s_max, format, out } => {
            let specs = match family {
                Some(f) => {
                    let spec = AffineSpec::new(f, n.unwrap_or(0), r.unwrap_or(0), s.unwrap_or(0))
                        .map_err(|e| (EXIT_INVALID, e.to_string()))?;
                    vec![spec]
                }
                None => {
                    if n_max < 2 || s_max < 1 {
                        return Err((EXIT_INVALID, "--n-max must be at least 2 and --s-max at least 1".into()));
                    }
                    grid(n_max, s_max)
                }
            };
            let reports = report::run_timed(&mut builder, &specs, &suite.suites());
            let text = match format {
                Some(Format::Json) => report::to_json(&reports),
                Some(Format::Dot) => return Err((EXIT_INVALID, "reports are text or JSON".into())),
                None => report::to_text(&reports),
            };
            write_out(out.as_ref(), &text, stdout).map_err(|e| (EXIT_INVALID, e))?;
            let _ = writeln!(stderr, "checked in {:.3}s", report::total_micros(&reports) as f64 / 1e6);
            Ok(if report::all_passed(&reports) { EXIT_OK } else { EXIT_FAILED })
        }
    })();
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

/// Parses `args` (program name first) and runs; clap errors map to exit 2.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            code
        }
    }
}
