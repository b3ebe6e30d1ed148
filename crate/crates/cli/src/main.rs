use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coherence_core::arrow::{verify_chain, ChainError};
use coherence_core::coherence::{
    arrows_equal, canonical_arrow, expand_gamma, functor_f, functor_g,
};
use coherence_core::insertion::{classify_normal, equal_terms, normalize};
use coherence_core::polytopes::{permutohedron_graph, tamari_graph, to_dot};
use coherence_core::theories::{builtin, builtin_group, builtin_scripts, theory, Builtin};
use coherence_core::{ArrowTerm, Calculus, Direction, ITerm, ProofScript, TheoryKind, Tree};

#[derive(Parser)]
#[command(
    name = "coherence",
    version,
    about = "Insertion terms, arrow terms and coherence checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an insertion term and its normal type.
    Normalize {
        #[arg(long)]
        with_unit: bool,
        term: String,
    },
    /// Decide equality of two insertion terms.
    Eq {
        #[arg(long)]
        with_unit: bool,
        left: String,
        right: String,
    },
    /// The tree denoted by an insertion term.
    Eval { term: String },
    /// The insertion term of a tree.
    Embed { tree: String },
    /// gamma_{A,B} written with gamma_{2,2} only.
    Gamma {
        left: String,
        right: String,
        #[arg(long)]
        bwd: bool,
    },
    /// Translate an arrow term between the two presentations.
    Translate {
        #[arg(long)]
        to: Target,
        term: String,
    },
    /// Decide equality of two arrow terms.
    ArrowEq {
        #[arg(long)]
        theory: TheoryArg,
        left: String,
        right: String,
    },
    /// A canonical arrow between two trees with the same number of leaves.
    Canon { source: String, target: String },
    /// Verify a proof script.
    CheckProof { file: PathBuf },
    /// Verify built-in proof scripts.
    CheckBuiltin {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Print a built-in proof script.
    ExportBuiltin { name: String },
    /// Emit a polytope skeleton.
    Graph {
        kind: GraphKind,
        n: usize,
        #[arg(long)]
        directed: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Gamma,
    Assoc,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Gamma,
    Assoc,
    Symstrict,
}

impl From<TheoryArg> for TheoryKind {
    fn from(t: TheoryArg) -> Self {
        match t {
            TheoryArg::Gamma => TheoryKind::Gamma,
            TheoryArg::Assoc => TheoryKind::Assoc,
            TheoryArg::Symstrict => TheoryKind::SymStrict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Tamari,
    Permutohedron,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

/// Printed output and the verdict: `true` exits 0, `false` exits 1.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn accept(text: String) -> Outcome {
        Outcome { text, ok: true }
    }
}

type Run = Result<Outcome, String>;

fn input_error(what: &str, e: impl std::fmt::Display) -> String {
    format!("{what}: {e}")
}

fn parse_iterm(text: &str, calculus: Calculus) -> Result<ITerm, String> {
    let t = ITerm::parse(text).map_err(|e| input_error(&format!("term '{text}'"), e))?;
    if calculus == Calculus::WithoutUnit && t.contains_unit() {
        return Err(format!("term '{text}': the generator 1 needs --with-unit"));
    }
    Ok(t)
}

fn parse_tree(text: &str) -> Result<Tree, String> {
    Tree::parse(text).map_err(|e| input_error(&format!("tree '{text}'"), e))
}

fn parse_arrow(text: &str, kind: TheoryKind) -> Result<ArrowTerm, String> {
    let f = ArrowTerm::parse(text, kind)
        .map_err(|e| input_error(&format!("arrow term '{text}'"), e))?;
    f.infer_type(kind)
        .map_err(|e| input_error(&format!("arrow term '{text}'"), e))?;
    Ok(f)
}

fn calculus(with_unit: bool) -> Calculus {
    if with_unit {
        Calculus::WithUnit
    } else {
        Calculus::WithoutUnit
    }
}

fn typed_lines(f: &ArrowTerm, kind: TheoryKind) -> Result<String, String> {
    let ends = f.infer_type(kind).map_err(|e| e.to_string())?;
    Ok(format!(
        "{f}\nsource: {}\ntarget: {}\n",
        ends.source, ends.target
    ))
}

fn run(command: Command) -> Run {
    match command {
        Command::Normalize { with_unit, term } => {
            let calc = calculus(with_unit);
            let nf = normalize(&parse_iterm(&term, calc)?, calc);
            let class = classify_normal(&nf).map_err(|e| e.to_string())?;
            Ok(Outcome::accept(format!("{nf}\n{class}\n")))
        }
        Command::Eq {
            with_unit,
            left,
            right,
        } => {
            let calc = calculus(with_unit);
            let (a, b) = (parse_iterm(&left, calc)?, parse_iterm(&right, calc)?);
            let ok = equal_terms(&a, &b, calc);
            let verdict = if ok { "equal" } else { "not equal" };
            Ok(Outcome {
                text: format!(
                    "{}\n{}\n{verdict}\n",
                    normalize(&a, calc),
                    normalize(&b, calc)
                ),
                ok,
            })
        }
        Command::Eval { term } => {
            let t = parse_iterm(&term, Calculus::WithUnit)?;
            Ok(Outcome::accept(format!("{}\n", t.eval())))
        }
        Command::Embed { tree } => Ok(Outcome::accept(format!(
            "{}\n",
            ITerm::from_tree(&parse_tree(&tree)?)
        ))),
        Command::Gamma { left, right, bwd } => {
            let (a, b) = (parse_tree(&left)?, parse_tree(&right)?);
            let dir = if bwd {
                Direction::Backward
            } else {
                Direction::Forward
            };
            Ok(Outcome::accept(typed_lines(
                &expand_gamma(&a, &b, dir),
                TheoryKind::Gamma,
            )?))
        }
        Command::Translate { to, term } => {
            let (image, kind) = match to {
                Target::Gamma => {
                    let f = parse_arrow(&term, TheoryKind::Assoc)?;
                    (functor_g(&f), TheoryKind::Gamma)
                }
                Target::Assoc => {
                    let f = parse_arrow(&term, TheoryKind::Gamma)?;
                    (functor_f(&f), TheoryKind::Assoc)
                }
            };
            let image = image.map_err(|e| input_error(&format!("arrow term '{term}'"), e))?;
            Ok(Outcome::accept(typed_lines(&image, kind)?))
        }
        Command::ArrowEq {
            theory,
            left,
            right,
        } => {
            let kind = TheoryKind::from(theory);
            let (f, g) = (parse_arrow(&left, kind)?, parse_arrow(&right, kind)?);
            let ok = arrows_equal(&f, &g, kind).map_err(|e| e.to_string())?;
            let mut text = String::new();
            for h in [&f, &g] {
                let e = h.infer_type(kind).map_err(|e| e.to_string())?;
                let _ = writeln!(text, "{h}: {e}");
            }
            text.push_str(if ok { "equal\n" } else { "not equal\n" });
            Ok(Outcome { text, ok })
        }
        Command::Canon { source, target } => {
            let (x, y) = (parse_tree(&source)?, parse_tree(&target)?);
            let f = canonical_arrow(&x, &y).map_err(|e| e.to_string())?;
            Ok(Outcome::accept(typed_lines(&f, TheoryKind::Assoc)?))
        }
        Command::CheckProof { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| input_error(&file.display().to_string(), e))?;
            let script = ProofScript::parse(&text)
                .map_err(|e| input_error(&file.display().to_string(), e))?;
            match verify_chain(&script, &theory(script.theory)) {
                Ok(report) => Ok(Outcome::accept(format!(
                    "accepted: {} steps, {}\n",
                    report.steps, report.endpoints
                ))),
                Err(e @ ChainError::IllTyped { .. }) => {
                    Err(input_error(&file.display().to_string(), e))
                }
                Err(e) => Ok(Outcome {
                    text: format!("rejected: {e}\n"),
                    ok: false,
                }),
            }
        }
        Command::CheckBuiltin { name, all } => {
            let chosen: Vec<&Builtin> = if all {
                builtin_scripts().iter().collect()
            } else {
                let name = name.unwrap_or_default();
                builtin_group(&name).ok_or_else(|| format!("unknown built-in script '{name}'"))?
            };
            let mut text = String::new();
            let mut ok = true;
            for b in chosen {
                match b.verify() {
                    Ok(r) => {
                        let _ = writeln!(
                            text,
                            "{}: accepted: {} steps, {}",
                            b.name, r.steps, r.endpoints
                        );
                    }
                    Err(e) => {
                        ok = false;
                        let _ = writeln!(text, "{}: rejected: {e}", b.name);
                    }
                }
            }
            Ok(Outcome { text, ok })
        }
        Command::ExportBuiltin { name } => {
            let b = builtin(&name).ok_or_else(|| format!("unknown built-in script '{name}'"))?;
            Ok(Outcome::accept(b.source.to_string()))
        }
        Command::Graph {
            kind,
            n,
            directed,
            format: Format::Dot,
        } => {
            let g = match kind {
                GraphKind::Tamari => tamari_graph(n, directed),
                GraphKind::Permutohedron => permutohedron_graph(n, directed),
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome::accept(to_dot(&g)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
