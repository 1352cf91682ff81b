//! Command-line front end: cohomology tables, gauge/GL/Lc rank formulas,
//! the rationalized long exact sequence, cohomology recovery from Lc
//! ranks, and Poincaré-polynomial factorization.
//!
//! Exit codes: 0 success, 1 domain errors (carrying the module error text
//! and a stable code), 2 usage errors.

mod machine;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use gaugerank_core::{
    betti_with_coefficients, build_les, corpus, euler_characteristic, factor_poincare,
    gauge_ranks, gl_ranks, hnil_report, lc_ranks, parse_group_spec, recover_cohomology,
    reduced_betti, Error, GradedDims, PoincarePoly, SimplicialComplex,
};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gaugerank",
    version,
    about = "Exact rational cohomology of finite simplicial complexes and rational homotopy ranks of matrix and gauge groups over C(X)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output mode; machine mode emits one JSON document per invocation
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Rational cohomology ranks of a complex (Čech = simplicial here)
    Cohomology {
        /// Complex file path, or builtin:NAME (see `corpus`)
        #[arg(long)]
        complex: String,
        /// Dimension of the rational coefficient vector space
        #[arg(long, default_value_t = 1)]
        coeff_dim: usize,
        /// Report reduced cohomology instead
        #[arg(long)]
        reduced: bool,
    },
    /// Rational homotopy ranks of the gauge spaces F(X,G)° and F•(X,G)°
    Gauge {
        #[arg(long)]
        complex: String,
        /// Group spec: U(n), SU(n), Sp(n), S(m) with m odd, K(d:r,...), trivial
        #[arg(long)]
        group: String,
    },
    /// Rational homotopy ranks of GL_n(C(X))°
    Gl {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        n: i64,
    },
    /// Rational homotopy ranks of the last-column space Lc_n(C(X))°
    Lc {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        n: i64,
    },
    /// The rationalized long exact sequence of GL_{n-1} -> GL_n -> Lc_n
    Les {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        n: i64,
        /// Top degree of the table; defaults to 2n-1+dim
        #[arg(long)]
        k_max: Option<i64>,
    },
    /// Recover the rank of H^s(X; Q) from Lc_n ranks (stable range n > s/2 + 1)
    #[command(group(ArgGroup::new("lc_source").required(true).args(["complex", "lc_json"])))]
    Recover {
        /// Compute the Lc_n ranks from this complex
        #[arg(long)]
        complex: Option<String>,
        /// Read externally supplied Lc ranks from a machine-mode JSON document
        #[arg(long)]
        lc_json: Option<PathBuf>,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        s: i64,
    },
    /// Factor a Poincaré polynomial into exterior generator degrees
    Factor {
        /// Comma-separated coefficients, lowest degree first, e.g. 1,1,0,1,1
        #[arg(long)]
        poly: String,
    },
    /// List the built-in complexes
    Corpus,
}

enum CliError {
    Core(Error),
    Io(String),
    BadDocument(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "io",
            CliError::BadDocument(_) => "bad-document",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::BadDocument(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.code(), e);
            ExitCode::FAILURE
        }
    }
}

fn load_complex(source: &str) -> Result<SimplicialComplex, CliError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return corpus::builtin(name).ok_or_else(|| {
            let known: Vec<&str> = corpus::NAMES.iter().map(|(n, _)| *n).collect();
            CliError::Io(format!(
                "unknown builtin complex {name:?} (known: {})",
                known.join(", ")
            ))
        });
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| CliError::Io(format!("cannot read {source}: {e}")))?;
    Ok(SimplicialComplex::parse(&text)?)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let machine = cli.output == OutputMode::Machine;
    match &cli.command {
        Command::Cohomology {
            complex,
            coeff_dim,
            reduced,
        } => {
            if *coeff_dim < 1 {
                return Err(Error::InvalidParameter(
                    "--coeff-dim must be a positive integer".into(),
                )
                .into());
            }
            let x = load_complex(complex)?;
            let ranks = if *reduced {
                reduced_betti(&x).scaled(*coeff_dim)
            } else {
                betti_with_coefficients(&x, *coeff_dim)
            };
            let euler = euler_characteristic(&x);
            if machine {
                return Ok(machine::render(&machine::CohomologyDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "cohomology",
                    complex: machine::ComplexSummary::new(complex, &x),
                    coeff_dim: *coeff_dim,
                    reduced: *reduced,
                    ranks,
                    euler_characteristic: euler,
                }));
            }
            let mut out = complex_header(complex, &x);
            let label = if *reduced {
                "reduced Ȟ^k(X; Q)"
            } else {
                "Ȟ^k(X; Q)"
            };
            let coeff = if *coeff_dim == 1 {
                String::new()
            } else {
                format!(", coefficients in Q^{coeff_dim}")
            };
            let _ = writeln!(
                out,
                "{label} ranks [finite complex: Čech = simplicial{coeff}]:"
            );
            out.push_str(&rank_table(&ranks));
            let _ = writeln!(out, "Euler characteristic: {euler}");
            Ok(out)
        }
        Command::Gauge { complex, group } => {
            let x = load_complex(complex)?;
            let g = parse_group_spec(group)?;
            let result = gauge_ranks(&x, &g);
            let hnil = hnil_report(&g, true);
            if machine {
                return Ok(machine::render(&machine::GaugeDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "gauge",
                    complex: machine::ComplexSummary::new(complex, &x),
                    group: g,
                    free_ranks: result.free_ranks,
                    based_ranks: result.based_ranks,
                    em_decomposition: result.em_decomposition,
                    habelian: result.habelian,
                    hnil,
                }));
            }
            let mut out = complex_header(complex, &x);
            let _ = writeln!(
                out,
                "group: {}, homotopy ranks {}, finite-dimensional cohomology: {}",
                g.name(),
                g.homotopy_ranks(),
                yes_no(g.finite_dim_cohomology())
            );
            let _ = writeln!(out, "pi_j(F(X,G)°) ⊗ Q (free maps):");
            out.push_str(&rank_table(&result.free_ranks));
            let _ = writeln!(out, "pi_j(F•(X,G)°) ⊗ Q (based maps):");
            out.push_str(&rank_table(&result.based_ranks));
            let _ = writeln!(
                out,
                "EM decomposition of F(X,G)°: {}",
                em_product_text(&result.em_decomposition)
            );
            match hnil.hnil_q {
                Some(v) => {
                    let _ = writeln!(
                        out,
                        "rationally homotopy-abelian: yes; Hnil_Q({}) = {v}; the EM decomposition is a rational H-equivalence",
                        hnil.subject
                    );
                }
                None => {
                    let _ = writeln!(
                        out,
                        "rationally homotopy-abelian: unknown (model cohomology is not finite-dimensional; Hnil_Q not computed)"
                    );
                }
            }
            Ok(out)
        }
        Command::Gl { complex, n } => {
            let x = load_complex(complex)?;
            let ranks = gl_ranks(&x, *n)?;
            if machine {
                return Ok(machine::render(&machine::RanksDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "gl",
                    complex: machine::ComplexSummary::new(complex, &x),
                    n: *n,
                    ranks,
                }));
            }
            let mut out = complex_header(complex, &x);
            let _ = writeln!(out, "pi_h(GL_{n}(C(X))°) ⊗ Q:");
            out.push_str(&rank_table(&ranks));
            Ok(out)
        }
        Command::Lc { complex, n } => {
            let x = load_complex(complex)?;
            let ranks = lc_ranks(&x, *n)?;
            if machine {
                return Ok(machine::render(&machine::RanksDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "lc",
                    complex: machine::ComplexSummary::new(complex, &x),
                    n: *n,
                    ranks,
                }));
            }
            let mut out = complex_header(complex, &x);
            let _ = writeln!(out, "pi_k(Lc_{n}(C(X))°) ⊗ Q:");
            out.push_str(&rank_table(&ranks));
            Ok(out)
        }
        Command::Les { complex, n, k_max } => {
            let x = load_complex(complex)?;
            let table = build_les(&x, *n, *k_max)?;
            let violations = gaugerank_core::verify_exactness(&table);
            if machine {
                return Ok(machine::render(&machine::LesDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "les",
                    complex: machine::ComplexSummary::new(complex, &x),
                    n: table.n,
                    k_max: table.k_max,
                    rows: table.rows,
                    exact: table.exact,
                    violations,
                }));
            }
            let mut out = complex_header(complex, &x);
            let _ = writeln!(
                out,
                "rationalized sequence GL_{} -> GL_{} -> Lc_{}, degrees {} down to 1 (degree 0 excluded):",
                n - 1,
                n,
                n,
                table.k_max
            );
            let _ = writeln!(out, "{table}");
            for violation in &violations {
                let _ = writeln!(out, "violation: {violation}");
            }
            Ok(out)
        }
        Command::Recover {
            complex,
            lc_json,
            n,
            s,
        } => {
            let (source, lc) = match (complex, lc_json) {
                (Some(src), None) => {
                    let x = load_complex(src)?;
                    (src.clone(), lc_ranks(&x, *n)?)
                }
                (None, Some(path)) => (path.display().to_string(), read_lc_document(path)?),
                _ => unreachable!("clap enforces exactly one source"),
            };
            let rank = recover_cohomology(&lc, *n, *s)?;
            let lc_degree = 2 * n - 1 - s;
            if machine {
                return Ok(machine::render(&machine::RecoverDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "recover",
                    source,
                    n: *n,
                    s: *s,
                    lc_degree,
                    rank,
                }));
            }
            let mut out = String::new();
            let _ = writeln!(out, "rank Ȟ^{s} = {rank}");
            let _ = writeln!(
                out,
                "(recovered from pi_{lc_degree}(Lc_{n}) ⊗ Q; source: {source})"
            );
            Ok(out)
        }
        Command::Factor { poly } => {
            let coeffs = parse_coeff_list(poly)?;
            let p = PoincarePoly::new(coeffs)?;
            let degrees = factor_poincare(&p)?;
            if machine {
                return Ok(machine::render(&machine::FactorDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "factor",
                    coeffs: p.coeffs().to_vec(),
                    generator_degrees: degrees,
                }));
            }
            let mut out = String::new();
            let _ = writeln!(out, "poincare polynomial: {}", poly_text(p.coeffs()));
            if degrees.is_empty() {
                let _ = writeln!(out, "generator degrees: none (trivial algebra)");
            } else {
                let list: Vec<String> = degrees.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "generator degrees: {}", list.join(", "));
                let _ = writeln!(
                    out,
                    "exterior algebra on {} odd generator{}",
                    degrees.len(),
                    if degrees.len() == 1 { "" } else { "s" }
                );
            }
            Ok(out)
        }
        Command::Corpus => {
            if machine {
                let entries = corpus::NAMES
                    .iter()
                    .map(|&(name, description)| {
                        let x = corpus::builtin(name).expect("listed names resolve");
                        machine::CorpusEntry {
                            name,
                            description,
                            dim: x.dim(),
                            f_vector: x.f_vector(),
                        }
                    })
                    .collect();
                return Ok(machine::render(&machine::CorpusDoc {
                    schema_version: machine::SCHEMA_VERSION,
                    command: "corpus",
                    entries,
                }));
            }
            let mut out = String::new();
            for &(name, description) in corpus::NAMES {
                let x = corpus::builtin(name).expect("listed names resolve");
                let _ = writeln!(
                    out,
                    "{name:<14} {description} (dim {}, f-vector {:?})",
                    x.dim(),
                    x.f_vector()
                );
            }
            Ok(out)
        }
    }
}

fn complex_header(source: &str, x: &SimplicialComplex) -> String {
    let shown = x.name().unwrap_or(source);
    format!(
        "complex: {shown} (dim {}, f-vector {:?})\n",
        x.dim(),
        x.f_vector()
    )
}

fn rank_table(ranks: &GradedDims) -> String {
    if ranks.is_empty() {
        return "  (zero in all degrees)\n".to_string();
    }
    let mut out = String::new();
    for (degree, rank) in ranks.iter() {
        let _ = writeln!(out, "  {degree}: {rank}");
    }
    out
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn em_product_text(decomposition: &[(i64, usize)]) -> String {
    if decomposition.is_empty() {
        return "point".to_string();
    }
    let factors: Vec<String> = decomposition
        .iter()
        .map(|(degree, rank)| format!("K(Q^{rank},{degree})"))
        .collect();
    factors.join(" x ")
}

fn poly_text(coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    for (degree, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (degree, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (d, 1) => format!("t^{d}"),
            (d, c) => format!("{c}t^{d}"),
        };
        terms.push(term);
    }
    terms.join(" + ")
}

fn parse_coeff_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|token| {
            token.trim().parse::<i64>().map_err(|_| {
                Error::InvalidParameter(format!(
                    "--poly expects comma-separated integers, got {token:?}"
                ))
                .into()
            })
        })
        .collect()
}

fn read_lc_document(path: &PathBuf) -> Result<GradedDims, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::BadDocument(format!("{}: {e}", path.display())))?;
    if let Some(version) = value.get("schema_version") {
        if version != machine::SCHEMA_VERSION {
            return Err(CliError::BadDocument(format!(
                "{}: unsupported schema_version {version} (expected {})",
                path.display(),
                machine::SCHEMA_VERSION
            )));
        }
    }
    let ranks_value = value.get("ranks").cloned().unwrap_or(value);
    serde_json::from_value::<GradedDims>(ranks_value).map_err(|e| {
        CliError::BadDocument(format!(
            "{}: expected a ranks object mapping degree to rank: {e}",
            path.display()
        ))
    })
}
