//! Command-line front end: every subcommand prints a short human summary and,
//! with `--json PATH`, writes a machine-readable report (command echo, input
//! digest, structured results, overall verdict).
//!
//! Exit codes: 0 when the verdict is pass or cleanly not-applicable, 1 when a
//! checked claim fails, 2 for input or usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use liealg::catalog::CatalogSpec;
use liealg::derivations::{derivation_tower, DerivationSpace};
use liealg::forms::{killing_form, perp_center_certificate, BilinearForm};
use liealg::holomorph::{completeness_theorem_certificate, Holomorph};
use liealg::io::{
    digest_bytes, file_digest, write_algebra_file, write_report, AlgebraFile, Report,
};
use liealg::torus::ExponentTorus;
use liealg::{
    Certificate, Error, FieldElement, FieldSpec, IntMat, LieAlgebra, Result, Subspace, Verdict,
};

#[derive(Parser)]
#[command(name = "liealg", version, about = "Exact computations with finite-dimensional Lie algebras")]
struct Cli {
    /// Write a machine-readable report of the run to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry conventions and the Jacobi identity of a table.
    Validate { file: PathBuf },
    /// Compute the center.
    Center { file: PathBuf },
    /// Compute the derived subalgebra [g, g].
    Derived { file: PathBuf },
    /// Compute a basis of the derivation algebra.
    Der {
        file: PathBuf,
        /// Also write the derivation algebra itself as an algebra file.
        #[arg(long, value_name = "OUT")]
        emit_algebra: Option<PathBuf>,
    },
    /// Decide completeness: trivial center and every derivation inner.
    Complete { file: PathBuf },
    /// Build the holomorph g ⋊ Der g.
    Holomorph {
        file: PathBuf,
        /// Also write the holomorph as an algebra file.
        #[arg(long, value_name = "OUT")]
        emit_algebra: Option<PathBuf>,
    },
    /// Iterate g → Der g until a complete level or the level budget.
    Tower {
        file: PathBuf,
        /// Maximum number of levels to compute.
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
    /// Certify the completeness theorem for a perfect centerless algebra.
    Verify { file: PathBuf },
    /// Check invariance/nondegeneracy of a bilinear form and the
    /// derived-subalgebra ⊥ center relation.
    Form { file: PathBuf },
    /// Commutation structure of a quantum torus at the exponent level.
    Torus {
        #[command(subcommand)]
        cmd: TorusCmd,
    },
    /// Materialize a named algebra as an algebra file.
    Catalog {
        /// Name: abelian, heisenberg, affine2, sl, current_sl2 — or a
        /// compact expression such as "sl:2+abelian:1".
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Build over F_p instead of the rationals.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum TorusCmd {
    /// Canonical basis of the lattice of central degrees.
    Rad {
        #[arg(long)]
        n: usize,
        /// Multiplicative order q of the deformation parameter.
        #[arg(long)]
        order: u64,
        /// Row-major n*n antisymmetric exponent matrix, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e: Vec<i64>,
    },
    /// Classify every degree in a box as central or a commutator.
    Graded {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e: Vec<i64>,
        /// Box radius: degrees with all coordinates in [-r, r].
        #[arg(long = "box", default_value_t = 3)]
        box_radius: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Outcome {
    digest: String,
    results: Value,
    overall: Verdict,
}

fn run(cli: &Cli) -> Result<u8> {
    let outcome = dispatch(&cli.command)?;
    if let Some(path) = &cli.json {
        let report = Report {
            command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
            input_digest: outcome.digest.clone(),
            results: outcome.results.clone(),
            overall: outcome.overall,
        };
        write_report(path, &report)?;
    }
    Ok(match outcome.overall {
        Verdict::Pass | Verdict::NotApplicable => 0,
        Verdict::Fail => 1,
    })
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => cmd_validate(file),
        Command::Center { file } => cmd_center(file),
        Command::Derived { file } => cmd_derived(file),
        Command::Der { file, emit_algebra } => cmd_der(file, emit_algebra.as_deref()),
        Command::Complete { file } => cmd_complete(file),
        Command::Holomorph { file, emit_algebra } => cmd_holomorph(file, emit_algebra.as_deref()),
        Command::Tower { file, max } => cmd_tower(file, *max),
        Command::Verify { file } => cmd_verify(file),
        Command::Form { file } => cmd_form(file),
        Command::Torus { cmd } => match cmd {
            TorusCmd::Rad { n, order, e } => cmd_torus_rad(*n, *order, e),
            TorusCmd::Graded { n, order, e, box_radius } => {
                cmd_torus_graded(*n, *order, e, *box_radius)
            }
        },
        Command::Catalog { name, n, k, prime, out } => cmd_catalog(name, *n, *k, *prime, out),
    }
}

/// Load, insisting on a well-formed file but deferring the Jacobi check.
fn load(path: &Path) -> Result<(String, LieAlgebra, Option<BilinearForm>)> {
    let digest = file_digest(path)?;
    let (g, form) = liealg::io::load_algebra(path)?;
    Ok((digest, g, form))
}

fn load_valid(path: &Path) -> Result<(String, LieAlgebra, Option<BilinearForm>)> {
    let (digest, g, form) = load(path)?;
    g.validate()?;
    Ok((digest, g, form))
}

fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime { p } => format!("F_{p}"),
    }
}

fn vector_strings(v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn subspace_json(s: &Subspace) -> Value {
    let rows: Vec<Vec<String>> = s.basis().iter().map(|v| vector_strings(v)).collect();
    json!({ "dim": s.dim(), "basis": rows })
}

/// Renders a coefficient vector as a linear combination of labelled basis
/// elements, e.g. "h0 - 2·e1".
fn combo(labels: &[String], coeffs: &[FieldElement]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        if out.is_empty() {
            if text == "1" {
                out = label.clone();
            } else if text == "-1" {
                out = format!("-{label}");
            } else {
                out = format!("{text}·{label}");
            }
        } else if let Some(rest) = text.strip_prefix('-') {
            if rest == "1" {
                out.push_str(&format!(" - {label}"));
            } else {
                out.push_str(&format!(" - {rest}·{label}"));
            }
        } else if text == "1" {
            out.push_str(&format!(" + {label}"));
        } else {
            out.push_str(&format!(" + {text}·{label}"));
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn print_subspace(title: &str, labels: &[String], s: &Subspace) {
    println!("{title}: dimension {}", s.dim());
    for v in s.basis() {
        println!("  {}", combo(labels, v));
    }
}

fn print_certificate(cert: &Certificate) {
    println!("{}", cert.subject);
    for claim in &cert.claims {
        let dims = if claim.dims.is_empty() {
            String::new()
        } else {
            let parts: Vec<String> = claim
                .dims
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!("  [{}]", parts.join(", "))
        };
        let gate = if claim.gate { " (hypothesis)" } else { "" };
        println!("  {}{gate}: {}{dims}", claim.name, claim.verdict);
        if let Some(w) = &claim.witness {
            println!("    witness: {}", witness_line(w));
        }
    }
    println!("overall: {}", cert.overall);
}

fn witness_line(w: &liealg::Witness) -> String {
    match w {
        liealg::Witness::Vector { entries } => format!("vector [{}]", entries.join(", ")),
        liealg::Witness::Matrix { rows } => {
            let body: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
            format!("matrix {}", body.join(" "))
        }
        liealg::Witness::BasisTriple { i, j, k } => format!("basis triple ({i}, {j}, {k})"),
        liealg::Witness::DegreePair { left, right } => {
            format!("degrees [{}] and [{}]", left.join(", "), right.join(", "))
        }
    }
}

fn certificate_outcome(digest: String, cert: Certificate) -> Result<Outcome> {
    print_certificate(&cert);
    let overall = cert.overall;
    Ok(Outcome {
        digest,
        results: serde_json::to_value(&cert)?,
        overall,
    })
}

fn cmd_validate(path: &Path) -> Result<Outcome> {
    let (digest, g, form) = load(path)?;
    match g.validate() {
        Ok(()) => {
            println!(
                "valid Lie algebra: dimension {} over {}",
                g.dim(),
                field_name(g.field())
            );
            if form.is_some() {
                println!("file also carries a {0}x{0} bilinear form", g.dim());
            }
            Ok(Outcome {
                digest,
                results: json!({ "dim": g.dim(), "valid": true }),
                overall: Verdict::Pass,
            })
        }
        Err(Error::AxiomViolation { reason, i, j, k }) => {
            println!("invalid: {reason} at basis triple ({i}, {j}, {k})");
            Ok(Outcome {
                digest,
                results: json!({
                    "dim": g.dim(),
                    "valid": false,
                    "reason": reason,
                    "witness": { "i": i, "j": j, "k": k },
                }),
                overall: Verdict::Fail,
            })
        }
        Err(e) => Err(e),
    }
}

fn cmd_center(path: &Path) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let c = g.center();
    print_subspace("center", g.labels(), &c);
    Ok(Outcome {
        digest,
        results: json!({ "dim": g.dim(), "center": subspace_json(&c) }),
        overall: Verdict::Pass,
    })
}

fn cmd_derived(path: &Path) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let d = g.derived_subspace();
    print_subspace("derived subalgebra", g.labels(), &d);
    println!("perfect: {}", d.dim() == g.dim());
    Ok(Outcome {
        digest,
        results: json!({
            "dim": g.dim(),
            "derived": subspace_json(&d),
            "perfect": d.dim() == g.dim(),
        }),
        overall: Verdict::Pass,
    })
}

fn cmd_der(path: &Path, emit: Option<&Path>) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let ds = DerivationSpace::of(&g)?;
    println!(
        "derivation algebra: dimension {}, inner dimension {}",
        ds.dim(),
        ds.inner_dim()
    );
    let basis_rows: Vec<Vec<Vec<String>>> =
        ds.basis().iter().map(|m| m.to_strings()).collect();
    let mut results = json!({
        "dim": g.dim(),
        "der_dim": ds.dim(),
        "inner_dim": ds.inner_dim(),
        "all_inner": ds.all_inner(),
        "basis": basis_rows,
    });
    if let Some(out) = emit {
        let der_alg = ds.lie_algebra()?;
        write_algebra_file(out, &AlgebraFile::from_algebra(&der_alg, None))?;
        println!("wrote derivation algebra to {}", out.display());
        results["emitted"] = json!(out.display().to_string());
    }
    Ok(Outcome {
        digest,
        results,
        overall: Verdict::Pass,
    })
}

fn cmd_complete(path: &Path) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let ds = DerivationSpace::of(&g)?;
    certificate_outcome(digest, ds.completeness_certificate())
}

fn cmd_holomorph(path: &Path, emit: Option<&Path>) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let h = Holomorph::of(&g)?;
    println!(
        "holomorph: dimension {} = {} (base) + {} (derivations)",
        h.algebra().dim(),
        h.base_dim(),
        h.der_dim()
    );
    let mut results = json!({
        "dim": h.algebra().dim(),
        "base_dim": h.base_dim(),
        "der_dim": h.der_dim(),
    });
    if let Some(out) = emit {
        write_algebra_file(out, &AlgebraFile::from_algebra(h.algebra(), None))?;
        println!("wrote holomorph to {}", out.display());
        results["emitted"] = json!(out.display().to_string());
    }
    Ok(Outcome {
        digest,
        results,
        overall: Verdict::Pass,
    })
}

fn cmd_tower(path: &Path, max: usize) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    let tower = derivation_tower(&g, max)?;
    let dims: Vec<String> = tower.dims.iter().map(|d| d.to_string()).collect();
    println!("derivation tower dimensions: {}", dims.join(" -> "));
    println!(
        "status: {}",
        match tower.status {
            liealg::derivations::TowerStatus::Complete => "stabilized at a complete algebra",
            liealg::derivations::TowerStatus::MaxLevels => "level budget exhausted",
        }
    );
    Ok(Outcome {
        digest,
        results: serde_json::to_value(&tower)?,
        overall: Verdict::Pass,
    })
}

fn cmd_verify(path: &Path) -> Result<Outcome> {
    let (digest, g, _) = load_valid(path)?;
    certificate_outcome(digest, completeness_theorem_certificate(&g)?)
}

fn cmd_form(path: &Path) -> Result<Outcome> {
    let (digest, g, file_form) = load_valid(path)?;
    let (form, source) = match file_form {
        Some(f) => (f, "file"),
        None => (killing_form(&g)?, "killing"),
    };
    println!("form source: {source}");
    let cert = perp_center_certificate(&g, &form)?;
    print_certificate(&cert);
    let overall = cert.overall;
    Ok(Outcome {
        digest,
        results: json!({
            "source": source,
            "gram": form.gram().to_strings(),
            "certificate": serde_json::to_value(&cert)?,
        }),
        overall,
    })
}

fn build_torus(n: usize, order: u64, e: &[i64]) -> Result<ExponentTorus> {
    if e.len() != n * n {
        return Err(Error::Shape(format!(
            "--e needs {} row-major entries for n = {n}, got {}",
            n * n,
            e.len()
        )));
    }
    let rows: Vec<&[i64]> = e.chunks(n).collect();
    ExponentTorus::new(n, order, IntMat::from_i64(&rows))
}

fn torus_digest(kind: &str, n: usize, order: u64, e: &[i64], extra: &str) -> String {
    digest_bytes(format!("torus {kind} n={n} order={order} e={e:?}{extra}").as_bytes())
}

fn cmd_torus_rad(n: usize, order: u64, e: &[i64]) -> Result<Outcome> {
    let torus = build_torus(n, order, e)?;
    let basis = torus.radical_basis();
    println!(
        "central degree lattice: rank {} basis rows (order {})",
        basis.len(),
        order
    );
    let rows: Vec<Vec<String>> = basis
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    for row in &rows {
        println!("  [{}]", row.join(", "));
    }
    Ok(Outcome {
        digest: torus_digest("rad", n, order, e, ""),
        results: json!({ "n": n, "order": order, "radical_rank": rows.len(), "radical": rows }),
        overall: Verdict::Pass,
    })
}

fn cmd_torus_graded(n: usize, order: u64, e: &[i64], box_radius: i64) -> Result<Outcome> {
    let torus = build_torus(n, order, e)?;
    let (classes, cert) = torus.classify_box(box_radius)?;
    print_certificate(&cert);
    let overall = cert.overall;
    Ok(Outcome {
        digest: torus_digest("graded", n, order, e, &format!(" box={box_radius}")),
        results: json!({
            "n": n,
            "order": order,
            "box_radius": box_radius,
            "certificate": serde_json::to_value(&cert)?,
            "classes": serde_json::to_value(&classes)?,
        }),
        overall,
    })
}

fn resolve_catalog(name: &str, n: Option<usize>, k: Option<usize>) -> Result<CatalogSpec> {
    match (name, n, k) {
        ("abelian", Some(n), None) => Ok(CatalogSpec::Abelian { n }),
        ("sl", Some(n), None) => Ok(CatalogSpec::Sl { n }),
        ("current_sl2", None, Some(k)) => Ok(CatalogSpec::CurrentSl2 { k }),
        (_, None, None) => CatalogSpec::parse(name),
        _ => Err(Error::InvalidParameter(format!(
            "flags --n/--k do not match catalog name '{name}'"
        ))),
    }
}

fn cmd_catalog(
    name: &str,
    n: Option<usize>,
    k: Option<usize>,
    prime: Option<u64>,
    out: &Path,
) -> Result<Outcome> {
    let spec = resolve_catalog(name, n, k)?;
    let field = match prime {
        None => FieldSpec::Rational,
        Some(p) => FieldSpec::prime(p)?,
    };
    let g = spec.build(field)?;
    write_algebra_file(out, &AlgebraFile::from_algebra(&g, None))?;
    println!(
        "wrote {} (dimension {}, over {}) to {}",
        name,
        g.dim(),
        field_name(field),
        out.display()
    );
    let digest = digest_bytes(
        format!("catalog {name} n={n:?} k={k:?} prime={prime:?}").as_bytes(),
    );
    Ok(Outcome {
        digest,
        results: json!({
            "dim": g.dim(),
            "perfect": g.is_perfect(),
            "centerless": g.is_centerless(),
            "out": out.display().to_string(),
        }),
        overall: Verdict::Pass,
    })
}
