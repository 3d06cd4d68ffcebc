//! Command-line front end: builds the boson models, classifies their A1
//! subalgebras, decomposes them into tensor multiplets (checking published
//! component listings where they exist), and prints reduction chains,
//! closed-form spectra and Fock-sector eigenvalues.
//!
//! Exit codes: 0 on success, 2 on usage errors (unknown models, classes or
//! operators), 3 on verification failures (including published listings
//! whose rows fail their component checks).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use lieboson::boson::{BosonFactor, OperatorPoly};
use lieboson::fock::{diagonalize, fock_matrix, FockBasis};
use lieboson::models::{cached, reference, Model, ModelName};
use lieboson::spectrum::{jset_casimir, label_count, multiplicity_weighted_count, spectrum, HamiltonianSpec};
use lieboson::tensor::rank_signature;
use lieboson::{Error, HalfInt, RadicalScalar, Result};

#[derive(Parser)]
#[command(
    name = "lieboson",
    version,
    about = "Exact boson-algebra models: structure, A1 classes, tensor multiplets, chains and spectra"
)]
struct Cli {
    /// Output format (also honored from LIEBOSON_FORMAT).
    #[arg(long, global = true, value_enum, env = "LIEBOSON_FORMAT", default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_model(s: &str) -> std::result::Result<ModelName, String> {
    ModelName::parse(s).map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    s.parse::<BigRational>()
        .map_err(|e| format!("not a rational number: {e}"))
}

#[derive(Subcommand)]
enum Command {
    /// Build a model: dimensions, radical, generator expressions.
    Build {
        #[arg(value_parser = parse_model)]
        model: ModelName,
    },
    /// List the A1 conjugacy classes with weighted diagrams and
    /// representative triples.
    Classify {
        #[arg(value_parser = parse_model)]
        model: ModelName,
    },
    /// Decompose the algebra into tensor multiplets relative to one class,
    /// checking any published component listing for that class.
    Tensor {
        #[arg(value_parser = parse_model)]
        model: ModelName,
        /// Name of the class whose triple organizes the decomposition.
        #[arg(long)]
        jset: String,
    },
    /// List the reduction chains through the subalgebra lattice.
    Chains {
        #[arg(value_parser = parse_model)]
        model: ModelName,
    },
    /// Closed-form spectrum of the four-Casimir chain Hamiltonian.
    Spectrum {
        #[arg(long, value_parser = parse_rational, default_value = "0", allow_hyphen_values = true)]
        alpha: BigRational,
        #[arg(long, value_parser = parse_rational, default_value = "0", allow_hyphen_values = true)]
        beta: BigRational,
        #[arg(long, value_parser = parse_rational, default_value = "0", allow_hyphen_values = true)]
        gamma: BigRational,
        #[arg(long, value_parser = parse_rational, default_value = "0", allow_hyphen_values = true)]
        delta: BigRational,
        /// Total label N.
        #[arg(long = "N")]
        n: i64,
    },
    /// Eigenvalues of a named operator on an N-boson sector.
    Fock {
        #[arg(value_parser = parse_model)]
        model: ModelName,
        /// Operator name: N (total number) or <class>2 (L2, W2, ...).
        #[arg(long)]
        op: String,
        /// Sector boson number.
        #[arg(long = "N")]
        n: u32,
        /// Also emit the matrix in row-major text form.
        #[arg(long)]
        dump_matrix: bool,
    },
}

struct Report {
    payload: Value,
    text: String,
    /// True when a published listing failed verification (exit code 3).
    flagged: bool,
}

impl Report {
    fn clean(payload: Value, text: String) -> Self {
        Report { payload, text, flagged: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.payload).expect("serializable report")
                    );
                }
            }
            if report.flagged {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::UnknownName { .. } | Error::InvalidLabel(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Build { model } => cmd_build(cached(*model)?),
        Command::Classify { model } => cmd_classify(cached(*model)?),
        Command::Tensor { model, jset } => cmd_tensor(cached(*model)?, jset),
        Command::Chains { model } => cmd_chains(cached(*model)?),
        Command::Spectrum { alpha, beta, gamma, delta, n } => {
            let h = HamiltonianSpec::new(alpha.clone(), beta.clone(), gamma.clone(), delta.clone());
            cmd_spectrum(&h, *n)
        }
        Command::Fock { model, op, n, dump_matrix } => {
            cmd_fock(cached(*model)?, op, *n, *dump_matrix)
        }
    }
}

fn cmd_build(model: &Model) -> Result<Report> {
    let algebra = &model.algebra;
    let generators: Vec<Value> = algebra
        .names()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            json!({ "name": name, "expression": algebra.basis_op(i).to_string() })
        })
        .collect();
    let payload = json!({
        "command": "build",
        "model": model.name.as_str(),
        "dimension": algebra.dim(),
        "semisimple_dimension": model.levi.levi.len(),
        "radical": model.radical_names,
        "generators": generators,
        "lattice": model.lattice_json(),
    });
    let mut text = String::new();
    writeln!(text, "model {}", model.name).unwrap();
    writeln!(text, "dimension {}", algebra.dim()).unwrap();
    writeln!(text, "semisimple dimension {}", model.levi.levi.len()).unwrap();
    writeln!(text, "radical: {}", model.radical_names.join(", ")).unwrap();
    writeln!(text, "generators:").unwrap();
    for (i, name) in algebra.names().iter().enumerate() {
        writeln!(text, "  {name} = {}", algebra.basis_op(i)).unwrap();
    }
    Ok(Report::clean(payload, text))
}

fn cmd_classify(model: &Model) -> Result<Report> {
    let mut classes = Vec::new();
    let mut text = String::new();
    writeln!(text, "model {}", model.name).unwrap();
    writeln!(text, "classes: {}", model.classes.len()).unwrap();
    for class in &model.classes {
        let (jp, jm, jz) = class.jset.ops(&model.algebra);
        classes.push(json!({
            "name": class.name,
            "diagram": class.wdd.to_string(),
            "node": class.node,
            "j_plus": jp.to_string(),
            "j_minus": jm.to_string(),
            "j_zero": jz.to_string(),
        }));
        writeln!(
            text,
            "{}  {}  node {}",
            class.name,
            class.wdd,
            class.node.as_deref().unwrap_or("-")
        )
        .unwrap();
        writeln!(text, "  J+ = {jp}").unwrap();
        writeln!(text, "  J- = {jm}").unwrap();
        writeln!(text, "  J0 = {jz}").unwrap();
    }
    let payload = json!({
        "command": "classify",
        "model": model.name.as_str(),
        "classes": classes,
    });
    Ok(Report::clean(payload, text))
}

fn cmd_tensor(model: &Model, class_name: &str) -> Result<Report> {
    let class = model.class(class_name)?;
    let multiplets = model.decompose(class_name)?;
    let signature: Vec<String> =
        rank_signature(&multiplets).iter().map(HalfInt::to_string).collect();
    let multiplet_values: Vec<Value> = multiplets
        .iter()
        .map(|m| {
            json!({
                "rank": m.weight().to_string(),
                "spinor": m.is_spinor(),
                "components": m
                    .operators(&model.algebra)
                    .iter()
                    .map(OperatorPoly::to_string)
                    .collect::<Vec<_>>(),
            })
        })
        .collect();

    let mut text = String::new();
    writeln!(text, "model {}", model.name).unwrap();
    writeln!(text, "class {}  diagram {}", class.name, class.wdd).unwrap();
    writeln!(text, "signature: {}", signature.join(" ")).unwrap();
    writeln!(text, "multiplets:").unwrap();
    for m in &multiplets {
        let kind = if m.is_spinor() { " (spinor)" } else { "" };
        writeln!(text, "  rank {}{kind}", m.weight()).unwrap();
        let weight = m.weight();
        for (op, q) in m.operators(&model.algebra).iter().zip(weight.projections()) {
            writeln!(text, "    q={}: {op}", q.signed_label()).unwrap();
        }
    }

    let mut flagged = false;
    let reference_value = match reference::table_for(model, class_name)? {
        None => Value::Null,
        Some(table) => {
            let report = reference::verify_table(model, &table)?;
            flagged = report.flagged;
            writeln!(text, "published listing: {} rows", report.rows.len()).unwrap();
            for row in &report.rows {
                if row.flagged {
                    if row.diagnostics.is_empty() {
                        writeln!(text, "  {}: FLAGGED (no reading passes)", row.name).unwrap();
                    } else {
                        writeln!(
                            text,
                            "  {}: FLAGGED (diagnostics: {})",
                            row.name,
                            row.diagnostics.join("; ")
                        )
                        .unwrap();
                    }
                } else {
                    writeln!(text, "  {}: passes {}", row.name, row.passes.join(", ")).unwrap();
                }
            }
            for note in &report.notes {
                writeln!(text, "  note: {note}").unwrap();
            }
            if report.flagged {
                writeln!(
                    text,
                    "listing verdict: FLAGGED; the verified multiplets above replace the flagged rows"
                )
                .unwrap();
            } else {
                writeln!(text, "listing verdict: verified").unwrap();
            }
            report.to_json(model)
        }
    };

    let payload = json!({
        "command": "tensor",
        "model": model.name.as_str(),
        "class": class.name,
        "diagram": class.wdd.to_string(),
        "signature": signature,
        "multiplets": multiplet_values,
        "reference": reference_value,
    });
    Ok(Report { payload, text, flagged })
}

fn cmd_chains(model: &Model) -> Result<Report> {
    let chains: Vec<String> = model.chains().iter().map(|c| c.to_string()).collect();
    let payload = json!({
        "command": "chains",
        "model": model.name.as_str(),
        "count": chains.len(),
        "chains": chains,
    });
    let mut text = String::new();
    writeln!(text, "model {}", model.name).unwrap();
    writeln!(text, "chains: {}", chains.len()).unwrap();
    for chain in &chains {
        writeln!(text, "  {chain}").unwrap();
    }
    Ok(Report::clean(payload, text))
}

fn cmd_spectrum(h: &HamiltonianSpec, n: i64) -> Result<Report> {
    let levels = spectrum(h, n)?;
    let level_values: Vec<Value> = levels
        .iter()
        .map(|(labels, energy)| {
            json!({
                "n": labels.n,
                "t": labels.t,
                "u": labels.u,
                "w": labels.w,
                "energy": energy.to_string(),
            })
        })
        .collect();
    let payload = json!({
        "command": "spectrum",
        "n": n,
        "coefficients": {
            "alpha": h.alpha.to_string(),
            "beta": h.beta.to_string(),
            "gamma": h.gamma.to_string(),
            "delta": h.delta.to_string(),
        },
        "levels": level_values,
        "label_count": label_count(n),
        "multiplicity_weighted_count": multiplicity_weighted_count(n)?,
    });
    let mut text = String::new();
    writeln!(
        text,
        "chain spectrum for N={n} with alpha={} beta={} gamma={} delta={}",
        h.alpha, h.beta, h.gamma, h.delta
    )
    .unwrap();
    writeln!(text, "(N, t, u, w)  E").unwrap();
    for (labels, energy) in &levels {
        writeln!(text, "{labels}  {energy}").unwrap();
    }
    writeln!(
        text,
        "{} labels; multiplicity-weighted count {}",
        label_count(n),
        multiplicity_weighted_count(n)?
    )
    .unwrap();
    Ok(Report::clean(payload, text))
}

/// Total-number operator over the model's defining modes.
fn number_operator(model: &Model) -> OperatorPoly {
    let mut out = OperatorPoly::zero();
    for (species, mu) in model.defining.modes() {
        out = out.add(&OperatorPoly::from_word(
            &[
                BosonFactor::creation(species, *mu),
                BosonFactor::annihilation(species, *mu),
            ],
            RadicalScalar::one(),
        ));
    }
    out
}

fn resolve_operator(model: &Model, name: &str) -> Result<OperatorPoly> {
    if name == "N" {
        return Ok(number_operator(model));
    }
    if let Some(class_name) = name.strip_suffix('2') {
        if model.classes.iter().any(|c| c.name == class_name) {
            let class = model.class(class_name)?;
            return jset_casimir(&model.algebra, &class.jset);
        }
    }
    Err(Error::UnknownName {
        kind: "operator",
        name: name.to_string(),
    })
}

/// The half-integer `w` with `w(w+1)` equal to the eigenvalue, when one
/// exists within tolerance.
fn w_assignment(eigenvalue: f64) -> Option<HalfInt> {
    let discriminant = 1.0 + 4.0 * eigenvalue;
    if discriminant < 0.0 {
        return None;
    }
    let two_w = discriminant.sqrt() - 1.0;
    let rounded = two_w.round();
    if (two_w - rounded).abs() < 1e-6 && rounded >= 0.0 {
        Some(HalfInt::from_two(rounded as i32))
    } else {
        None
    }
}

fn cmd_fock(model: &Model, op_name: &str, n: u32, dump_matrix: bool) -> Result<Report> {
    let op = resolve_operator(model, op_name)?;
    let basis = FockBasis::new(&model.defining, n);
    let matrix = fock_matrix(&basis, &op)?;
    let eigenvalues = diagonalize(&matrix)?;
    let eigen_values: Vec<Value> = eigenvalues
        .iter()
        .map(|&value| {
            json!({
                "value": value,
                "w": w_assignment(value).map(|w| w.to_string()),
            })
        })
        .collect();
    let mut payload = json!({
        "command": "fock",
        "model": model.name.as_str(),
        "operator": op_name,
        "n": n,
        "dimension": basis.len(),
        "eigenvalues": eigen_values,
    });
    let mut text = String::new();
    writeln!(
        text,
        "model {}  operator {op_name}  sector N={n}  dimension {}",
        model.name,
        basis.len()
    )
    .unwrap();
    writeln!(text, "eigenvalue  w").unwrap();
    for &value in &eigenvalues {
        match w_assignment(value) {
            Some(w) => writeln!(text, "{value:.6}  {w}").unwrap(),
            None => writeln!(text, "{value:.6}  -").unwrap(),
        }
    }
    if dump_matrix {
        let exported = matrix.to_text();
        writeln!(text, "matrix:").unwrap();
        text.push_str(&exported);
        payload["matrix"] = Value::String(exported);
    }
    Ok(Report::clean(payload, text))
}
