use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use z3hopf::algebra::check_local_confluence;
use z3hopf::expr::{evaluate, parse, Context, MapName, Value};
use z3hopf::presets::{preset, preset_with_max_steps, PRESET_NAMES};
use z3hopf::verify::{self, VerifyOptions};
use z3hopf::{AlgebraError, CheckReport, Presentation, Status};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "z3hopf", version, about = "Exact computations in a Z3-graded quantum group")]
struct Cli {
    /// Built-in presentation to work in.
    #[arg(short, long, global = true, default_value = "Mq2")]
    preset: String,

    /// Read the presentation from a file instead of a preset.
    #[arg(short = 'f', long = "presentation-file", global = true)]
    presentation_file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write the output to a file as well as stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Rewrite-step guard.
    #[arg(long, global = true)]
    max_steps: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Normalize { expr: String },
    /// Print the grade of an expression.
    Grade { expr: String },
    /// Apply delta, epsilon, antipode, star, deltaL or deltaR.
    Apply { map: String, expr: String },
    /// Run a named check, or `all`.
    Verify {
        check: String,
        /// Cases per randomized suite.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
    /// Check local confluence of a presentation.
    Confluence { name: Option<String> },
    /// Count normal monomials by degree.
    Census {
        name: Option<String>,
        deg: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Print a presentation in text form.
    Export { name: Option<String> },
    /// List presets and checks.
    List,
}

struct Failure(String);

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure(e.to_string())
    }
}

struct Out {
    text: String,
    machine: Json,
}

fn load(cli: &Cli, name: Option<&str>) -> Result<Arc<Presentation>, Failure> {
    if let Some(path) = &cli.presentation_file {
        let src = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        let mut p = Presentation::from_text(&src)?;
        if let Some(n) = cli.max_steps {
            p = p.with_max_steps(n);
        }
        return Ok(Arc::new(p));
    }
    let name = name.unwrap_or(&cli.preset);
    Ok(match cli.max_steps {
        Some(n) => preset_with_max_steps(name, n)?,
        None => preset(name)?,
    })
}

fn eval_in(p: &Arc<Presentation>, src: &str) -> Result<Value, Failure> {
    let e = parse(src).map_err(|err| Failure(format!("{err}\n  {src}")))?;
    Ok(evaluate(&e, &Context::new(p.clone()))?)
}

fn value_json(v: &Value) -> Json {
    let kind = match v {
        Value::Scalar(_) => "scalar",
        Value::Poly(_) => "polynomial",
        Value::Tensor(_) => "tensor",
        Value::Localized(_) => "localized",
        Value::LocalizedTensor(_) => "localized-tensor",
    };
    json!({ "kind": kind, "value": v.to_string() })
}

fn reports_out(reports: &[CheckReport]) -> Out {
    let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let machine = json!({
        "checks": reports,
        "summary": {
            "pass": count(Status::Pass),
            "fail": count(Status::Fail),
            "report": count(Status::Report),
        }
    });
    let summary = format!(
        "{} checks: {} pass, {} fail, {} report",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Report)
    );
    Out {
        text: if reports.len() > 1 { format!("{text}\n{summary}") } else { text },
        machine,
    }
}

fn run(cli: &Cli) -> Result<(Out, bool), Failure> {
    let ok = |text: String, machine: Json| Ok((Out { text, machine }, true));
    match &cli.command {
        Command::Normalize { expr } => {
            let p = load(cli, None)?;
            let v = eval_in(&p, expr)?;
            ok(v.to_string(), json!({ "presentation": p.name(), "input": expr, "result": value_json(&v) }))
        }
        Command::Grade { expr } => {
            let p = load(cli, None)?;
            let v = eval_in(&p, expr)?;
            let g = v.grade().map(|g| g.to_string()).unwrap_or_else(|| "none".into());
            ok(g.clone(), json!({ "presentation": p.name(), "input": expr, "grade": g }))
        }
        Command::Apply { map, expr } => {
            let m: MapName = map
                .parse()
                .map_err(|_| Failure(format!("unknown map `{map}` (delta, epsilon, antipode, star, deltaL, deltaR)")))?;
            let p = load(cli, None)?;
            let v = eval_in(&p, &format!("{m}({expr})"))?;
            ok(
                v.to_string(),
                json!({ "presentation": p.name(), "map": m.as_str(), "input": expr, "result": value_json(&v) }),
            )
        }
        Command::Verify { check, cases, seed } => {
            let opts = VerifyOptions { cases: *cases, seed: *seed };
            let reports = if check == "all" {
                verify::run_all(&opts)
            } else {
                vec![verify::run_check(check, &opts)?]
            };
            let clear = verify::all_clear(&reports);
            Ok((reports_out(&reports), clear))
        }
        Command::Confluence { name } => {
            let p = load(cli, name.as_deref())?;
            let r = check_local_confluence(&p).to_check(&format!("confluence-{}", p.name()), &p);
            let passed = !r.failed();
            Ok((reports_out(&[r]), passed))
        }
        Command::Census { name, deg, degree } => {
            let p = load(cli, name.as_deref())?;
            let d = degree.or(*deg).unwrap_or(4);
            let counts = p.dimension_census(d);
            let text = counts.iter().enumerate().map(|(i, n)| format!("{i}: {n}")).collect::<Vec<_>>().join("\n");
            ok(text, json!({ "presentation": p.name(), "census": counts }))
        }
        Command::Export { name } => {
            let p = load(cli, name.as_deref())?;
            let text = p.to_text();
            ok(text.trim_end().to_string(), json!({ "presentation": p.name(), "text": text }))
        }
        Command::List => ok(
            format!("presets: {}\nchecks: {}", PRESET_NAMES.join(", "), verify::check_names().join(", ")),
            json!({ "presets": PRESET_NAMES, "checks": verify::check_names() }),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, clear)) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Machine => serde_json::to_string_pretty(&out.machine).expect("serializable"),
            };
            println!("{body}");
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, format!("{body}\n")) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if clear {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
