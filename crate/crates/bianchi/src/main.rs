//! Command-line front end: classification, Jacobi checking, decomposition,
//! isomorphism witnesses, automorphism groups, orbit closures, the canonical
//! representative table, and a deterministic sample generator.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 Jacobi violation,
//! 4 type/mode mismatch, 5 no witness within tolerance.

use std::cmp::Reverse;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use bianchi::{
    aut_info, classify, closure_poset, closure_set, decompose, jacobian_tensor,
    orbit_dim_of_label, parse_bracket_text, render_bracket, render_dot,
    representative, sample_brackets, witness, BianchiType, Bracket,
    ClassificationReport, Error, FieldMode, ReportDoc, Scalar, TypeLabel,
    DEFAULT_WITNESS_TOLERANCE, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "bianchi",
    version,
    about = "Exact classification of Lie brackets on a 3-dimensional vector space"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a bracket file into its Bianchi isomorphism type.
    Classify {
        /// Input bracket file; with --batch, any number of files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Print only the type line instead of the full report.
        #[arg(long)]
        quiet: bool,
        /// Work over the Gaussian rationals.
        #[arg(long)]
        complex: bool,
        /// Process several files, reports in input order.
        #[arg(long)]
        batch: bool,
    },
    /// Evaluate the Jacobi obstruction of a bracket file.
    Jacobi {
        file: PathBuf,
        #[arg(long)]
        complex: bool,
    },
    /// Print the equivariant decomposition: symmetric matrix and covector.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        complex: bool,
    },
    /// Find a basis change carrying the first bracket to the second.
    Witness {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        complex: bool,
        /// Largest acceptable witness residual.
        #[arg(long, default_value_t = DEFAULT_WITNESS_TOLERANCE)]
        tolerance: f64,
    },
    /// Automorphism group of a type (name, dimension, block description).
    Aut {
        /// Type label: I, II, IV, V, VI_0, VI_h, VII_0, VII_h, VIII, IX, III.
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Exact family parameter h², e.g. 9/2 (families only).
        #[arg(long)]
        h2: Option<String>,
        #[arg(long)]
        complex: bool,
    },
    /// Orbit closure of a type, or the whole closure poset as DOT.
    Closure {
        /// Type label; optional with --dot.
        #[arg(value_name = "TYPE")]
        ty: Option<String>,
        /// Exact family parameter h² (closures do not depend on it).
        #[arg(long)]
        h2: Option<String>,
        /// Emit the full closure poset as a DOT digraph.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        complex: bool,
    },
    /// Print the canonical representative for every type.
    Table {
        #[arg(long)]
        complex: bool,
    },
    /// Generate deterministic pseudo-random brackets of a given type.
    Sample {
        /// Type label.
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Exact family parameter h², e.g. 2 or 9/2 (families only).
        #[arg(long)]
        h2: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        complex: bool,
        /// Write one file per sample here instead of standard output.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::JacobiViolation(..) => 3,
            _ => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

/// The field the computation runs in: the file's declared field, widened by
/// `--complex`. A gaussian-mode file without the flag is refused.
fn resolve_mode(file_mode: FieldMode, complex: bool) -> Result<FieldMode, Failure> {
    if file_mode == FieldMode::Complex && !complex {
        return Err(Failure::new(
            4,
            "file declares gaussian mode; pass --complex to work over Q(i)",
        ));
    }
    Ok(if complex { FieldMode::Complex } else { FieldMode::Real })
}

fn load_bracket(path: &PathBuf, complex: bool) -> Result<(Bracket, FieldMode), Failure> {
    let text = read_file(path)?;
    let (c, file_mode) = parse_bracket_text(&text)?;
    let mode = resolve_mode(file_mode, complex)?;
    Ok((c, mode))
}

fn flag_mode(complex: bool) -> FieldMode {
    if complex { FieldMode::Complex } else { FieldMode::Real }
}

fn parse_type(label: &str, h2: Option<&str>) -> Result<BianchiType, Failure> {
    let h2 = match h2 {
        Some(text) => Some(
            text.parse::<Scalar>()
                .map_err(|e| Failure::new(2, e.to_string()))?,
        ),
        None => None,
    };
    Ok(BianchiType::from_label(label, h2)?)
}

fn quiet_line(report: &ClassificationReport) -> String {
    let label = report.ty.label().as_str();
    match report.ty.h_squared() {
        Some(h2) => {
            let (re, im) = report.h_approx.expect("family types have h_approx");
            format!("{label} h^2={h2} (h≈{})", bianchi::format_approx(re, im))
        }
        None => label.to_string(),
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Classify { files, quiet, complex, batch } => {
            if !batch && files.len() != 1 {
                return Err(Failure::new(
                    2,
                    "pass exactly one file, or use --batch for several",
                ));
            }
            let mut out = String::new();
            for path in &files {
                let (c, mode) = load_bracket(path, complex)?;
                let report = classify(&c, mode)?;
                if quiet {
                    out.push_str(&quiet_line(&report));
                    out.push('\n');
                } else {
                    out.push_str(&ReportDoc::from_report(&report).render());
                }
            }
            print!("{out}");
            Ok(())
        }
        Cmd::Jacobi { file, complex } => {
            let (c, _mode) = load_bracket(&file, complex)?;
            let j = jacobian_tensor(&c);
            let [x, y, z] = j.components().clone();
            println!("J(e1,e2,e3) = ({x}, {y}, {z})");
            if j.is_zero() {
                println!("Jacobi identity: holds");
                Ok(())
            } else {
                println!("Jacobi identity: violated");
                Err(Failure::new(3, format!(
                    "Jacobi identity fails: J(e1,e2,e3) = ({x}, {y}, {z})"
                )))
            }
        }
        Cmd::Decompose { file, complex } => {
            let (c, mode) = load_bracket(&file, complex)?;
            let d = decompose(&c);
            #[derive(Serialize)]
            struct DecomposeOut {
                schema: u32,
                mode: String,
                matrix: [[String; 3]; 3],
                nu: [String; 3],
            }
            let doc = DecomposeOut {
                schema: SCHEMA_VERSION,
                mode: mode.name().to_string(),
                matrix: std::array::from_fn(|i| {
                    std::array::from_fn(|j| d.m.entry(i, j).to_string())
                }),
                nu: std::array::from_fn(|i| d.nu.0[i].to_string()),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(())
        }
        Cmd::Witness { first, second, complex, tolerance } => {
            let (c1, m1) = load_bracket(&first, complex)?;
            let (c2, m2) = load_bracket(&second, complex)?;
            if m1 != m2 {
                return Err(Failure::new(4, "the two files declare different field modes"));
            }
            let result = witness(&c1, &c2, m1)?;
            let w = result.ok_or_else(|| {
                Failure::new(5, "the brackets are not isomorphic: invariants differ")
            })?;
            if w.residual > tolerance {
                return Err(Failure::new(
                    5,
                    format!(
                        "no witness within tolerance: residual {:e} exceeds {:e}",
                        w.residual, tolerance
                    ),
                ));
            }
            #[derive(Serialize)]
            struct WitnessOut {
                schema: u32,
                mode: String,
                exact: bool,
                residual: f64,
                g: [[String; 3]; 3],
            }
            let doc = WitnessOut {
                schema: SCHEMA_VERSION,
                mode: m1.name().to_string(),
                exact: w.is_exact(),
                residual: w.residual,
                g: std::array::from_fn(|i| {
                    std::array::from_fn(|j| w.g.get(i, j).to_string())
                }),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(())
        }
        Cmd::Aut { ty, h2, complex } => {
            let ty = parse_type(&ty, h2.as_deref())?;
            let mode = flag_mode(complex);
            let info = aut_info(&ty, mode)?;
            #[derive(Serialize)]
            struct AutOut {
                schema: u32,
                mode: String,
                #[serde(rename = "type")]
                ty: String,
                h2: Option<String>,
                name: Option<String>,
                dimension: u8,
                description: String,
                orbit_dim: u8,
            }
            let doc = AutOut {
                schema: SCHEMA_VERSION,
                mode: mode.name().to_string(),
                ty: ty.label().as_str().to_string(),
                h2: ty.h_squared().map(|h| h.to_string()),
                name: info.name.map(str::to_string),
                dimension: info.dimension,
                description: info.description.to_string(),
                orbit_dim: orbit_dim_of_label(ty.label()),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(())
        }
        Cmd::Closure { ty, h2, dot, complex } => {
            let mode = flag_mode(complex);
            if dot {
                print!("{}", render_dot(&closure_poset(mode)));
                return Ok(());
            }
            let label = ty.ok_or_else(|| {
                Failure::new(2, "pass a type label, or --dot for the whole poset")
            })?;
            // Closures are constant within a family, so a family label
            // without --h2 defaults to h² = 1.
            let needs_default = h2.is_none()
                && matches!(label.trim(), "VI_h" | "VIh" | "VII_h" | "VIIh");
            let ty = if needs_default {
                BianchiType::from_label(label.trim(), Some(Scalar::one()))
                    .map_err(Failure::from)?
            } else {
                parse_type(&label, h2.as_deref())?
            };
            let set = closure_set(&ty, mode)?;
            let mut rest: Vec<TypeLabel> =
                set.into_iter().filter(|l| *l != ty.label()).collect();
            rest.sort_by_key(|l| (Reverse(orbit_dim_of_label(*l)), *l));
            let mut names = vec![ty.label().as_str().to_string()];
            names.extend(rest.into_iter().map(|l| l.as_str().to_string()));
            println!("{}", names.join(", "));
            Ok(())
        }
        Cmd::Table { complex } => {
            let mode = flag_mode(complex);
            let fixed = |ty: &BianchiType| -> Result<String, Failure> {
                Ok(representative(ty, mode)?.to_string())
            };
            let mut rows: Vec<(String, String)> = Vec::new();
            rows.push(("I".into(), fixed(&BianchiType::I)?));
            rows.push(("II".into(), fixed(&BianchiType::II)?));
            rows.push(("IV".into(), fixed(&BianchiType::IV)?));
            rows.push(("V".into(), fixed(&BianchiType::V)?));
            if mode == FieldMode::Real {
                rows.push((
                    "VI_h (h<=0)".into(),
                    "[e1,e2] = 0, [e2,e3] = e1 - h e2, [e3,e1] = h e1 - e2".into(),
                ));
                rows.push((
                    "VII_h (h>=0)".into(),
                    "[e1,e2] = 0, [e2,e3] = e1 - h e2, [e3,e1] = h e1 + e2".into(),
                ));
                rows.push(("VIII".into(), fixed(&BianchiType::VIII)?));
            } else {
                rows.push((
                    "VII_h".into(),
                    "[e1,e2] = 0, [e2,e3] = e1 - h e2, [e3,e1] = h e1 + e2".into(),
                ));
            }
            rows.push(("IX".into(), fixed(&BianchiType::IX)?));
            for (label, bracket) in rows {
                println!("{label}: {bracket}");
            }
            Ok(())
        }
        Cmd::Sample { ty, h2, seed, count, complex, out_dir } => {
            let ty = parse_type(&ty, h2.as_deref())?;
            let mode = flag_mode(complex);
            let samples = sample_brackets(&ty, mode, seed, count)?;
            match out_dir {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)
                        .map_err(|e| Failure::new(2, format!("{}: {e}", dir.display())))?;
                    for (k, c) in samples.iter().enumerate() {
                        let name = format!("{}-{seed}-{k}.json", ty.label().as_str());
                        let path = dir.join(name);
                        std::fs::write(&path, render_bracket(c, mode))
                            .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
                        println!("{}", path.display());
                    }
                }
                None => {
                    for c in &samples {
                        print!("{}", render_bracket(c, mode));
                    }
                }
            }
            Ok(())
        }
    }
}
