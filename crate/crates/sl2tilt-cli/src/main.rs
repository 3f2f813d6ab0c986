use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sl2tilt::alcove::{self, block, decompose_into_tiltings, orbit, tensor_power_factors};
use sl2tilt::endofun::{center_diagram_basis, endo_hom_dimension, evaluate_endo_diagram, ThetaWordObject};
use sl2tilt::quiver::{self, apply_u_sum, center_basis, hom_poincare, module_hom, Parity, Summand};
use sl2tilt::scalars::{quantum_binomial, quantum_integer, specialize};
use sl2tilt::soergel::dsl::{parse_diagram, serialize};
use sl2tilt::soergel::library::{evaluate_jones_wenzl, jones_wenzl};
use sl2tilt::soergel::{diagrams_equal, evaluate, DiagramLinComb};
use sl2tilt::tiltcat::{self, k0_matrix, object_from_triples, object_triples, Color, ThetaWord};
use sl2tilt::uqweyl::{build_weyl, is_simple, weyl_head_socle_weights};
use sl2tilt::verify::{run_verify, VerifyConfig};
use sl2tilt::{Error, RootOfUnitySpec};

#[derive(Parser, Debug)]
#[command(name = "sl2tilt", version, about = "Exact computations with graded tilting modules of quantum sl2")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct RootArgs {
    /// Order of q^2; any l > 2.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(3..))]
    l: u32,
    /// Use q of odd order n = l instead of n = 2l.
    #[arg(long)]
    odd_n: bool,
}

impl RootArgs {
    fn spec(self) -> Result<RootOfUnitySpec, Error> {
        RootOfUnitySpec::from_l(self.l, self.odd_n)
    }
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Cutoff {
    /// Quiver cutoff m.
    #[arg(long, env = "SL2TILT_CUTOFF", default_value_t = 8)]
    m: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Quantum integer [a], optionally a binomial, and its value at the root of unity.
    Qint {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        choose: Option<u32>,
        #[command(flatten)]
        root: RootArgs,
    },
    /// The Weyl module Δ(i): dimension, simplicity, head and socle weights.
    Weyl {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        matrices: bool,
        #[command(flatten)]
        root: RootArgs,
    },
    /// Linkage orbit and block of a weight.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, default_value_t = 20)]
        cutoff: i64,
        #[command(flatten)]
        root: RootArgs,
    },
    /// Weyl factors of a tensor product of Weyl modules and its tilting decomposition.
    TensorDecompose {
        /// Comma separated highest weights.
        #[arg(long, value_delimiter = ',')]
        word: Vec<i64>,
        #[command(flatten)]
        root: RootArgs,
    },
    /// Poincaré polynomial of Hom between projectives or sums of them.
    Hom {
        /// Vertex, or a JSON list of [vertex, shift] pairs.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        cut: Cutoff,
    },
    /// U_j on a module given as a JSON list of [vertex, shift] pairs.
    ApplyU {
        /// An index, "even" or "odd".
        #[arg(long)]
        j: String,
        #[arg(long)]
        module: String,
        #[command(flatten)]
        cut: Cutoff,
    },
    /// Θ_x applied to a tilting object.
    Theta {
        /// Word over s and t; the rightmost letter acts first.
        #[arg(long, default_value = "")]
        word: String,
        /// Start at T_i.
        #[arg(long, conflicts_with = "object")]
        start: Option<usize>,
        /// Start at an object given as JSON [index, shift, multiplicity] triples.
        #[arg(long)]
        object: Option<String>,
    },
    /// Matrix of [Θ_s] or [Θ_t] on the split Grothendieck group.
    K0 {
        #[arg(long)]
        color: char,
        #[command(flatten)]
        cut: Cutoff,
    },
    /// Evaluates a marked diagram from a .sd file.
    DiagramEval { file: PathBuf },
    /// Decides equality of two diagrams through the evaluation.
    DiagramEqual { a: PathBuf, b: PathBuf },
    /// The Jones–Wenzl projector on the alternating sequence of length i.
    Jw {
        #[arg(long)]
        i: usize,
        /// Also print the projector as a diagram (large for i > 5).
        #[arg(long)]
        diagram: bool,
    },
    /// Graded dimension of natural transformations Θ_x -> Θ_y.
    EndoHom {
        #[arg(long, default_value = "-")]
        x: String,
        #[arg(long, default_value = "-")]
        y: String,
        #[command(flatten)]
        cut: Cutoff,
    },
    /// Center of Q_m and the diagram families evaluating into it.
    Center {
        #[command(flatten)]
        cut: Cutoff,
    },
    /// Runs every relation and property suite.
    Verify {
        #[command(flatten)]
        root: RootArgs,
        #[arg(long, env = "SL2TILT_CUTOFF", default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("bad JSON argument: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

struct Output {
    json: Value,
    pretty: String,
    ok: bool,
}

impl Output {
    fn new(json: Value, pretty: impl Into<String>) -> Self {
        Self { json, pretty: pretty.into(), ok: true }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_diagram(path: &Path) -> Result<DiagramLinComb, CliError> {
    if path.extension().and_then(|e| e.to_str()) != Some("sd") {
        return Err(CliError::Usage(format!("{}: diagram files use the .sd extension", path.display())));
    }
    Ok(parse_diagram(&read(path)?)?)
}

fn module_arg(s: &str) -> Result<Vec<Summand>, CliError> {
    match s.trim().parse::<usize>() {
        Ok(v) => Ok(vec![quiver::summand(v, 0)]),
        Err(_) => Ok(serde_json::from_str(s)?),
    }
}

fn lines<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n")
}

fn run(cmd: Cmd) -> Result<Output, CliError> {
    Ok(match cmd {
        Cmd::Qint { a, choose, root } => {
            let spec = root.spec()?;
            let p = match choose {
                Some(b) => quantum_binomial(a, b),
                None => quantum_integer(a),
            };
            let val = specialize(&p, spec);
            Output::new(json!({"poly": p, "at_root": val, "n": spec.n}), format!("{p}\nat q (n = {}): {val}", spec.n))
        }
        Cmd::Weyl { i, matrices, root } => {
            let spec = root.spec()?;
            let w = build_weyl(i, spec);
            let simple = is_simple(&w);
            let (head, socle) = weyl_head_socle_weights(i as i64, root.l)?;
            let mut j = json!({"i": i, "dim": i + 1, "simple": simple, "head": head, "socle": socle});
            if matrices {
                j["module"] = serde_json::to_value(&w)?;
            }
            Output::new(j, format!("Δ({i}): dim {}, simple {simple}, head {head}, socle {socle}", i + 1))
        }
        Cmd::Orbit { x, cutoff, root } => {
            alcove::check_l(root.l)?;
            let o = orbit(x, root.l, cutoff);
            let b = block(x, root.l, cutoff);
            Output::new(json!({"orbit": o, "block": b}), format!("orbit {o:?}\nblock {b:?}"))
        }
        Cmd::TensorDecompose { word, root } => {
            alcove::check_l(root.l)?;
            if word.iter().any(|&w| w < 0) {
                return Err(CliError::Usage("highest weights must be non-negative".into()));
            }
            let f = tensor_power_factors(&word);
            let d = decompose_into_tiltings(&f, root.l)?;
            Output::new(json!({"weyl_factors": f, "tiltings": d}), format!("Weyl factors {f:?}\ntiltings {d:?}"))
        }
        Cmd::Hom { x, y, cut } => {
            let (x, y) = (module_arg(&x)?, module_arg(&y)?);
            if let Some(s) = x.iter().chain(&y).find(|s| s.vertex > cut.m) {
                return Err(Error::NotInRange(s.vertex as i64).into());
            }
            let p = if x.len() == 1 && y.len() == 1 && x[0].shift == 0 && y[0].shift == 0 {
                hom_poincare(x[0].vertex, y[0].vertex, cut.m)
            } else {
                module_hom(&x, &y, cut.m)
            };
            Output::new(json!({"poincare": p}), p.to_string())
        }
        Cmd::ApplyU { j, module, cut } => {
            let js = match j.as_str() {
                "even" => Parity::Even.indices(cut.m),
                "odd" => Parity::Odd.indices(cut.m),
                n => {
                    let n: usize = n.parse().map_err(|_| CliError::Usage(format!("bad functor index {n:?}")))?;
                    if n == 0 || n > cut.m {
                        return Err(Error::InvalidParameter(format!("functor index {n} outside 1..={}", cut.m)).into());
                    }
                    vec![n]
                }
            };
            let module = module_arg(&module)?;
            let out = apply_u_sum(&js, &module, cut.m);
            Output::new(json!({"module": out}), format!("{out:?}"))
        }
        Cmd::Theta { word, start, object } => {
            let x: ThetaWord = word.parse()?;
            let obj = match (start, object) {
                (_, Some(o)) => object_from_triples(&serde_json::from_str::<Vec<(usize, i64, usize)>>(&o)?)?,
                (s, None) => tiltcat::tilting(s.unwrap_or(0)),
            };
            let out = object_triples(&tiltcat::evaluate_theta_word(&x, &obj));
            let pretty = lines(out.iter().map(|(i, s, m)| format!("T_{i}<{s}> x{m}")));
            Output::new(json!({"word": x.to_string(), "object": out}), pretty)
        }
        Cmd::K0 { color, cut } => {
            let c = match color {
                's' => Color::S,
                't' => Color::T,
                _ => return Err(CliError::Usage("--color is s or t".into())),
            };
            let mat = k0_matrix(c, cut.m);
            let pretty = lines(mat.iter().map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | ")));
            Output::new(json!({"matrix": mat}), pretty)
        }
        Cmd::DiagramEval { file } => {
            let d = load_diagram(&file)?;
            let f = evaluate(&d)?;
            Output::new(json!({"degree": d.degree(), "matrix": f}), f.to_string())
        }
        Cmd::DiagramEqual { a, b } => {
            let eq = diagrams_equal(&load_diagram(&a)?, &load_diagram(&b)?)?;
            Output::new(json!({"equal": eq}), eq.to_string())
        }
        Cmd::Jw { i, diagram } => {
            let f = evaluate_jones_wenzl(i)?;
            let mut j = json!({"i": i, "matrix": f});
            let mut pretty = f.to_string();
            if diagram {
                let d = serialize(&jones_wenzl(i));
                pretty = format!("{d}\n{pretty}");
                j["diagram"] = Value::String(d);
            }
            Output::new(j, pretty)
        }
        Cmd::EndoHom { x, y, cut } => {
            let (x, y): (ThetaWordObject, ThetaWordObject) = (x.parse()?, y.parse()?);
            let p = endo_hom_dimension(&x, &y, cut.m)?;
            Output::new(json!({"x": x.to_string(), "y": y.to_string(), "m": cut.m, "poincare": p}), p.to_string())
        }
        Cmd::Center { cut } => {
            let z = center_basis(cut.m);
            let mut fams = vec![];
            for f in center_diagram_basis(cut.m) {
                let e = evaluate_endo_diagram(&f)?;
                let (&(k, _), d) = f.entries().next().expect("center families have one entry");
                fams.push(json!({"component": k, "diagram": serialize(d), "central": e.central_element().map(|c| c.to_string())}));
            }
            let basis: Vec<String> = z.iter().map(|e| e.to_string()).collect();
            Output::new(json!({"m": cut.m, "basis": basis, "families": fams}), lines(&basis))
        }
        Cmd::Verify { root, m, depth } => {
            if root.odd_n {
                return Err(CliError::Usage("verify runs both parities of n itself".into()));
            }
            let report = run_verify(&VerifyConfig { l: root.l, m, depth, ..Default::default() })?;
            let pretty = lines(report.checks.iter().map(|c| {
                let w = c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default();
                format!("{} {}/{} {} ms{w}", if c.pass { "PASS" } else { "FAIL" }, c.suite, c.id, c.millis)
            }));
            let ok = report.passed;
            Output { json: serde_json::to_value(&report)?, pretty, ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => out.json.to_string(),
                Format::Pretty => out.pretty,
            };
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
