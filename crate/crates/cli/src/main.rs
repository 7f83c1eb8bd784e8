use std::io::Write;
use std::process::ExitCode;

use chevalley_core::chevalley::{minuscule_decomposition, scalar_multiply_general};
use chevalley_core::heisenberg::BasisClass;
use chevalley_core::oracle::verify_row;
use chevalley_core::parse::{parse_affine, parse_elt, parse_root_coords, parse_weight};
use chevalley_core::qbg::{edges_json, export_dot, Qbg};
use chevalley_core::verify::{run, Sampling, Scope, SuiteReport};
use chevalley_core::walks::{enumerate_decorations, enumerate_quantum_walks, walk_json};
use chevalley_core::weyl::{format_word, group_order};
use chevalley_core::{Error, MinusculeDatum, RootSystem};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chevalley", version, about = "Inverse Chevalley formulas for semi-infinite flag manifolds")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Expand e^λ · [O(w t_ξ)(μ)] in the Schubert basis.
    Expand {
        #[arg(long = "type")]
        cartan: String,
        /// `w:c1,...,cn` or `eps:i`.
        #[arg(long)]
        weight: String,
        /// `1 2 1`, `w0`, `e`, optionally `WORD | t: c1,...,cn`.
        #[arg(long, default_value = "e")]
        elt: String,
        /// Root-lattice coordinates of ξ (overrides a translation in --elt).
        #[arg(long)]
        translation: Option<String>,
        /// Line-bundle twist μ of the input class.
        #[arg(long)]
        bundle: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites; exit 2 on any mismatch.
    Verify {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        elt: Option<String>,
        /// row, theorems, toda, propL or all.
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dump the quantum Bruhat graph.
    Qbg {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// List the quantum walks and their decorations.
    Walks {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "e")]
        elt: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("serializable") + "\n"));
}

fn expand(
    cartan: &str,
    weight: &str,
    elt: &str,
    translation: Option<&str>,
    bundle: Option<&str>,
    format: Format,
) -> Result<(), Failure> {
    let rs = RootSystem::from_name(cartan)?;
    let lambda = parse_weight(&rs, weight)?;
    let mut start = parse_affine(&rs, elt)?;
    if let Some(t) = translation {
        start.xi = parse_root_coords(&rs, t)?;
    }
    let mu = match bundle {
        Some(b) => parse_weight(&rs, b)?,
        None => rs.zero_weight(),
    };
    let input = BasisClass::basis(start.w.clone(), start.xi.clone(), mu.clone());
    let parts = minuscule_decomposition(&rs, &lambda)?;
    let out = scalar_multiply_general(&rs, &lambda, &input)?;
    out.check_integral()?;
    match format {
        Format::Json => {
            let data: Vec<Value> = parts
                .iter()
                .map(|p| {
                    let d = MinusculeDatum::new(&rs, p)?;
                    Ok(json!({
                        "lambda": p.0,
                        "x_word": format_word(&d.x_word),
                        "y_word": format_word(&d.y_word),
                    }))
                })
                .collect::<Result<_, Error>>()?;
            print_json(&json!({
                "type": rs.cartan_type().to_string(),
                "weight": lambda.0,
                "input": { "elt": start.display(&rs), "bundle": mu.0 },
                "metadata": { "minuscule_factors": data },
                "result": out.to_json(&rs),
            }));
        }
        _ => emit(&(out.display(&rs) + "\n")),
    }
    Ok(())
}

fn verify(
    cartan: &str,
    weight: Option<&str>,
    elt: Option<&str>,
    scope: &str,
    samples: Option<usize>,
    seed: u64,
) -> Result<(), Failure> {
    let rs = RootSystem::from_name(cartan)?;
    let scope: Scope = scope.parse()?;
    let (report, passed) = match (weight, elt) {
        (Some(wt), Some(e)) if scope == Scope::Row => {
            let rep = verify_row(&rs, &parse_weight(&rs, wt)?, &parse_elt(&rs, e)?)?;
            (rep.to_json(&rs), rep.passed())
        }
        (None, None) => {
            let sampling = match samples {
                Some(count) => Sampling::Seeded { count, seed },
                None if group_order(&rs) <= 5_000 => Sampling::Exhaustive,
                None => Sampling::Seeded { count: 25, seed },
            };
            let reports = run(&rs, scope, sampling, false)?;
            let ok = reports.iter().all(SuiteReport::passed);
            let v = json!({
                "type": rs.cartan_type().to_string(),
                "seed": seed,
                "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
                "passed": ok,
            });
            (v, ok)
        }
        _ => return Err(Failure::Usage("--weight and --elt go together and only with --scope row".into())),
    };
    print_json(&report);
    if passed {
        Ok(())
    } else {
        Err(Failure::Mismatch("verification mismatch".into()))
    }
}

fn qbg(cartan: &str, format: Format) -> Result<(), Failure> {
    let rs = RootSystem::from_name(cartan)?;
    let g = Qbg::new(&rs)?;
    match format {
        Format::Json => print_json(&edges_json(&rs, g.edges())),
        _ => emit(&export_dot(&rs, g.edges())),
    }
    Ok(())
}

fn walks(cartan: &str, weight: &str, elt: &str, format: Format) -> Result<(), Failure> {
    let rs = RootSystem::from_name(cartan)?;
    let lambda = parse_weight(&rs, weight)?;
    let datum = MinusculeDatum::new(&rs, &lambda)?;
    let w = parse_elt(&rs, elt)?;
    let mut dumps = Vec::new();
    let mut lines = Vec::new();
    for walk in enumerate_quantum_walks(&rs, &datum, &w) {
        let decs = enumerate_decorations(&rs, &walk)?;
        lines.push(format!("{}  end {}  decorations {}", walk.steps_string(), walk.end().word_string(&rs), decs.len()));
        dumps.push(walk_json(&rs, &walk, &decs));
    }
    match format {
        Format::Json => print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": lambda.0,
            "x_word": format_word(&datum.x_word),
            "y_word": format_word(&datum.y_word),
            "walks": dumps,
        })),
        _ => emit(&lines.iter().map(|l| format!("{l}\n")).collect::<String>()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let out = match &cli.command {
        Command::Expand { cartan, weight, elt, translation, bundle, format } => {
            expand(cartan, weight, elt, translation.as_deref(), bundle.as_deref(), *format)
        }
        Command::Verify { cartan, weight, elt, scope, samples, seed } => {
            verify(cartan, weight.as_deref(), elt.as_deref(), scope, *samples, *seed)
        }
        Command::Qbg { cartan, format } => qbg(cartan, *format),
        Command::Walks { cartan, weight, elt, format } => walks(cartan, weight, elt, *format),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
