use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use deephole_core::code::{field_name, LinearCode};
use deephole_core::codefile::{export_code_spec, load_code, parse_builtin, parse_code_spec};
use deephole_core::combin::binomial;
use deephole_core::dist::{
    covering_radius, deep_holes, error_distance_brute, error_distance_mds, nested_max_distance, AlgoChoice,
    Budgets, DeepHoleReport, RadiusReport,
};
use deephole_core::ssp::{ssp_solve, validate_certificate, SspInstance};
use deephole_core::verify::{run_suite, Suite, VerifyOptions};
use deephole_core::{is_mds, min_distance, Error, Field, Word};

#[derive(Parser)]
#[command(name = "deephole")]
#[command(about = "Covering radii, deep holes and error distances of small MDS codes")]
#[command(version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Maximum syndrome-table entries
    #[arg(long, default_value_t = 100_000_000)]
    mem_budget: u64,

    /// Maximum enumerated codewords or words
    #[arg(long, default_value_t = 100_000_000)]
    enum_budget: u64,
}

impl BudgetArgs {
    fn budgets(self) -> Budgets {
        Budgets {
            mem: self.mem_budget as u128,
            enumeration: self.enum_budget as u128,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and print its parameters
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Distances, covering radius and deep holes
    Analyze {
        #[command(subcommand)]
        cmd: AnalyzeCmd,
    },
    /// Solve a k-subset-sum instance over a finite field
    Ssp {
        /// Field order, or the characteristic when --a is given
        #[arg(long)]
        q: u32,
        /// Extension degree
        #[arg(long)]
        a: Option<u32>,
        /// Subset size
        #[arg(long)]
        k: usize,
        /// Target sum (element encoding)
        #[arg(long)]
        target: u32,
    },
    /// Run a verification suite
    Verify {
        /// all, boundary, prop1, thm1, thm3, conj3, glynn, ssp, sandwich or prop7
        suite: String,
        /// Restrict to these field orders (comma separated)
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
        /// Restrict to these dimensions (comma separated)
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Reed-Solomon code over F_q (all of F_q unless --eval is given)
    Rs {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        /// Evaluation points, comma separated
        #[arg(long)]
        eval: Option<String>,
    },
    /// Projective Reed-Solomon code PRS(q+1, k)
    Prs {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
    },
    /// The [10,5] Glynn code over F_9
    Glynn {
        #[arg(long)]
        w: Option<u32>,
    },
    /// Load a code-spec file
    FromFile { path: PathBuf },
    /// Print a code as a code-spec file
    Export {
        #[arg(long)]
        code: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AnalyzeCmd {
    /// Covering radius
    Radius {
        #[command(flatten)]
        target: CodeArgs,
    },
    /// All deep-hole cosets
    DeepHoles {
        #[command(flatten)]
        target: CodeArgs,
        /// Known covering radius
        #[arg(long)]
        rho: Option<usize>,
    },
    /// Error distance of a word
    Distance {
        #[command(flatten)]
        target: CodeArgs,
        /// Word entries, comma separated
        #[arg(long)]
        word: String,
    },
    /// Minimum distance
    MinDistance {
        #[command(flatten)]
        target: CodeArgs,
    },
    /// Check whether every k columns of the generator are independent
    MdsCheck {
        #[command(flatten)]
        target: CodeArgs,
    },
    /// Largest distance from a codeword of --super to the subcode --code
    NestedMax {
        #[command(flatten)]
        target: CodeArgs,
        /// The larger code
        #[arg(long = "super")]
        sup: String,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Code-spec file or builtin ("prs --q 5 --k 4", "rs:7:3", "glynn:4")
    #[arg(long)]
    code: String,
    /// auto, syndrome, sweep or brute
    #[arg(long, default_value = "auto")]
    algo: String,
    #[command(flatten)]
    budgets: BudgetArgs,
}

impl CodeArgs {
    fn load(&self) -> Result<LinearCode, Error> {
        load_code(&self.code)
    }

    fn algo(&self) -> Result<AlgoChoice, Error> {
        self.algo.parse()
    }
}

/// Minimum distance: `n − k + 1` for MDS codes, else by enumeration when
/// within budget.
fn known_distance(code: &LinearCode, budget: u128) -> Option<usize> {
    if binomial(code.n(), code.k()) <= budget && is_mds(code) {
        return Some(code.n() - code.k() + 1);
    }
    min_distance(code, budget).ok()
}

fn code_json(code: &LinearCode, budget: u128) -> Value {
    let rows = |m: &deephole_core::matrix::Matrix| -> Vec<String> {
        m.row_vecs().into_iter().map(|r| Word(r).to_string()).collect()
    };
    let mds = (binomial(code.n(), code.k()) <= budget).then(|| is_mds(code));
    json!({
        "code": code.label(),
        "field": code.field().descriptor().to_string(),
        "n": code.n(),
        "k": code.k(),
        "d": known_distance(code, budget),
        "mds": mds,
        "generator": rows(code.generator()),
        "parity_check": rows(code.parity_check()),
    })
}

fn radius_json(code: &LinearCode, rep: &RadiusReport, budget: u128) -> Value {
    json!({
        "code": rep.code,
        "n": rep.n,
        "k": rep.k,
        "d": known_distance(code, budget),
        "rho": rep.rho,
        "algorithm": rep.algorithm,
        "cosets_examined": rep.cosets_examined.to_string(),
        "witness": rep.witness,
        "deep_hole_count": Value::Null,
        "deep_holes": Value::Null,
        "matches_degree_k_family": Value::Null,
        "elapsed_ms": rep.elapsed_ms as u64,
    })
}

fn deep_holes_json(code: &LinearCode, rep: &DeepHoleReport, budget: u128) -> Value {
    json!({
        "code": rep.code,
        "n": rep.n,
        "k": rep.k,
        "d": known_distance(code, budget),
        "rho": rep.rho,
        "algorithm": rep.algorithm,
        "deep_hole_count": rep.count(),
        "deep_holes": rep.deep_holes,
        "matches_degree_k_family": rep.matches_family(),
        "family": rep.family.as_ref().map(|f| json!({
            "family_size": f.family_size,
            "extra_count": f.extra.len(),
            "missing": f.missing,
        })),
        "elapsed_ms": rep.elapsed_ms as u64,
    })
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("json"),
        Format::Text => {
            let Value::Object(map) = value else {
                return value.to_string();
            };
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        Value::Array(items) if items.len() > 12 => format!("[{} entries]", items.len()),
                        other => other.to_string(),
                    };
                    format!("{k:<width$}  {shown}")
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        Format::Csv => {
            let Value::Object(map) = value else {
                return value.to_string();
            };
            let scalars: Vec<(&String, &Value)> = map
                .iter()
                .filter(|(_, v)| !v.is_array() && !v.is_object())
                .collect();
            let header: Vec<&str> = scalars.iter().map(|(k, _)| k.as_str()).collect();
            let row: Vec<String> = scalars
                .iter()
                .map(|(_, v)| match v {
                    Value::String(s) => s.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                })
                .collect();
            format!("{}\n{}", header.join(","), row.join(","))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    let print = |v: Value| println!("{}", render(&v, format));
    match cli.command {
        Command::Code { cmd } => {
            let budget = BudgetArgs {
                mem_budget: 100_000_000,
                enum_budget: 100_000_000,
            }
            .budgets()
            .enumeration;
            match cmd {
                CodeCmd::Rs { q, k, eval } => {
                    let mut spec = format!("rs --q {q} --k {k}");
                    if let Some(e) = eval {
                        spec.push_str(&format!(" --eval {e}"));
                    }
                    print(code_json(&parse_builtin(&spec)?, budget));
                }
                CodeCmd::Prs { q, k } => print(code_json(&parse_builtin(&format!("prs --q {q} --k {k}"))?, budget)),
                CodeCmd::Glynn { w } => {
                    let spec = w.map_or("glynn".to_string(), |w| format!("glynn --w {w}"));
                    print(code_json(&parse_builtin(&spec)?, budget));
                }
                CodeCmd::FromFile { path } => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse {
                        line: 0,
                        msg: format!("{}: {e}", path.display()),
                    })?;
                    print(code_json(&parse_code_spec(&text)?, budget));
                }
                CodeCmd::Export { code, out } => {
                    let text = export_code_spec(&load_code(&code)?);
                    match out {
                        Some(path) => std::fs::write(&path, text).map_err(|e| Error::Parse {
                            line: 0,
                            msg: format!("{}: {e}", path.display()),
                        })?,
                        None => print!("{text}"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { cmd } => {
            match cmd {
                AnalyzeCmd::Radius { target } => {
                    let code = target.load()?;
                    let budgets = target.budgets.budgets();
                    let rep = covering_radius(&code, target.algo()?, budgets)?;
                    print(radius_json(&code, &rep, budgets.enumeration));
                }
                AnalyzeCmd::DeepHoles { target, rho } => {
                    let code = target.load()?;
                    let budgets = target.budgets.budgets();
                    let rep = deep_holes(&code, rho, target.algo()?, budgets)?;
                    print(deep_holes_json(&code, &rep, budgets.enumeration));
                }
                AnalyzeCmd::Distance { target, word } => {
                    let code = target.load()?;
                    let budgets = target.budgets.budgets();
                    let u = Word::parse(&word, code.field())?;
                    let (d, nearest, method) = match target.algo()? {
                        AlgoChoice::Brute => {
                            let (d, c) = error_distance_brute(&code, u.entries(), budgets.enumeration)?;
                            (d, c, "brute")
                        }
                        _ => match error_distance_mds(&code, u.entries()) {
                            Ok((d, c)) => (d, c, "mds"),
                            Err(Error::NotMds) => {
                                let (d, c) = error_distance_brute(&code, u.entries(), budgets.enumeration)?;
                                (d, c, "brute")
                            }
                            Err(e) => return Err(e),
                        },
                    };
                    print(json!({
                        "code": code.label(),
                        "n": code.n(),
                        "k": code.k(),
                        "word": u,
                        "distance": d,
                        "nearest": nearest,
                        "method": method,
                    }));
                }
                AnalyzeCmd::MinDistance { target } => {
                    let code = target.load()?;
                    let d = min_distance(&code, target.budgets.budgets().enumeration)?;
                    print(json!({
                        "code": code.label(),
                        "n": code.n(),
                        "k": code.k(),
                        "d": d,
                        "singleton_bound": code.n() - code.k() + 1,
                    }));
                }
                AnalyzeCmd::MdsCheck { target } => {
                    let code = target.load()?;
                    print(json!({
                        "code": code.label(),
                        "n": code.n(),
                        "k": code.k(),
                        "mds": is_mds(&code),
                    }));
                }
                AnalyzeCmd::NestedMax { target, sup } => {
                    let small = target.load()?;
                    let big = load_code(&sup)?;
                    let nm = nested_max_distance(&small, &big, target.budgets.budgets().enumeration)?;
                    print(json!({
                        "code": small.label(),
                        "super": big.label(),
                        "m": nm.m,
                        "witness": nm.witness,
                    }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ssp { q, a, k, target } => {
            let field = Arc::new(match a {
                Some(a) => Field::new(q, a, None)?,
                None => Field::of_order(q)?,
            });
            let g = field.elem(target as u64)?;
            let set = ssp_solve(&SspInstance::new(field.clone(), k, g)?)?;
            let valid = validate_certificate(&field, k, g, &set);
            print(json!({
                "field": field_name(&field),
                "k": k,
                "target": g,
                "set": set,
                "valid": valid,
            }));
            Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { suite, q, k, budgets } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                qs: (!q.is_empty()).then_some(q),
                ks: (!k.is_empty()).then_some(k),
                budgets: budgets.budgets(),
            };
            let report = run_suite(suite, &opts);
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_table()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
