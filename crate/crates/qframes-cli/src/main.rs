//! `qframes`: construct, inspect, and certify finite frames over the
//! quaternions from the command line.
//!
//! Matrices travel as `.qmat` JSON files (see `qframes::qmatfile`). Every
//! subcommand prints a human-readable report, or one stable JSON object
//! under `--json`. Exit codes: `0` when every requested certificate passes,
//! `1` when a requested certificate fails, `2` for usage, I/O, or format
//! problems.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qframes::{
    angle_report, canonical_cycles, cycle_basis, etf_size_admits, etf_size_range, frame_graph,
    hopf_lines, m_product, max_angle, max_lines, projective_symmetry_group, symmetry_candidates,
    welch_angle, Error, FieldClass, Frame, QMatFile, QMatrix, Tolerance, DEFAULT_SEARCH_CAP,
};

/// Largest number of rows printed in the Welch table of `bounds`.
const WELCH_TABLE_CAP: usize = 64;
/// Largest number of distinct-index cycles `mproducts` will enumerate.
const MPRODUCT_CYCLE_CAP: f64 = 2_000_000.0;

#[derive(Parser)]
#[command(
    name = "qframes",
    version,
    about = "Finite tight frames and equiangular lines over the quaternions",
    propagate_version = true
)]
struct Cli {
    /// Comparison tolerance for every certificate (overrides the
    /// QFRAMES_EPS environment variable; default 1e-9).
    #[arg(long, global = true, value_name = "EPS")]
    eps: Option<f64>,

    /// Emit the report as a single JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalogued line system and write its synthesis matrix.
    Construct {
        /// Catalog entry: onb, simplex, hoggar4, wh_sic2, five_h2,
        /// b20_five_h2, five_h3, six_h2, six_h4, hopf.
        name: String,
        /// Numeric parameter as KEY=VALUE (repeatable), e.g. d=3, t=0.6, n=5.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Output .qmat file.
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Check certificates of a frame; exits 0 only if all requested pass.
    Verify {
        /// Input .qmat file.
        input: PathBuf,
        /// Certify tightness of the frame operator.
        #[arg(long)]
        tight: bool,
        /// Certify equiangularity of the unit-norm line system.
        #[arg(long)]
        equiangular: bool,
        /// Certify that the declared field tag matches the entries.
        #[arg(long)]
        field: bool,
    },
    /// Print line-count bounds and the Welch angle table for a dimension.
    Bounds {
        /// Ambient dimension d.
        #[arg(long)]
        dim: usize,
        /// Scalar field: R, C, or H.
        #[arg(long, value_parser = parse_field)]
        field: FieldClass,
    },
    /// Write the complementary tight frame of a unit-norm tight frame.
    Complement {
        /// Input .qmat file.
        input: PathBuf,
        /// Output .qmat file.
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Embed a frame one field down the tower and write the image.
    Embed {
        /// Input .qmat file.
        input: PathBuf,
        /// Target: "real" doubles a complex frame into R^(2d), "complex"
        /// doubles a quaternionic frame into C^(2d).
        #[arg(long, value_parser = ["real", "complex"])]
        to: String,
        /// Output .qmat file.
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
        /// Run the tightness-descent certificate first; a frame whose
        /// embedded double is not tight fails with exit code 1.
        #[arg(long)]
        tight: bool,
    },
    /// List reduced m-product multisets over a cycle basis and over all
    /// distinct-index cycles.
    Mproducts {
        /// Input .qmat file.
        input: PathBuf,
        /// Longest distinct-index cycle to enumerate.
        #[arg(long = "max-m", value_name = "M", default_value_t = 6)]
        max_m: usize,
    },
    /// Count the projective symmetries of a frame.
    Symmetry {
        /// Input .qmat file.
        input: PathBuf,
        /// Also lift each symmetry to a unitary and close the group.
        #[arg(long)]
        certify: bool,
    },
    /// Write the n-vector simplex line system pulled through the Hopf map.
    Hopf {
        /// Number of lines, between 3 and 6.
        #[arg(long)]
        n: usize,
        /// Output .qmat file.
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
}

fn parse_field(s: &str) -> Result<FieldClass, String> {
    match s {
        "R" => Ok(FieldClass::Real),
        "C" => Ok(FieldClass::Complex),
        "H" => Ok(FieldClass::Quaternionic),
        other => Err(format!("unknown field {other:?}; expected R, C, or H")),
    }
}

fn field_tag(class: FieldClass) -> &'static str {
    match class {
        FieldClass::Real => "R",
        FieldClass::Complex => "C",
        FieldClass::Quaternionic => "H",
    }
}

/// Minimal field tag containing every synthesis entry, judged at the
/// working tolerance (unlike the exact-support tag the file carries).
fn entry_tag(m: &QMatrix, eps: f64) -> &'static str {
    let mut complex = false;
    for q in m.entries() {
        if q.y.abs() >= eps || q.z.abs() >= eps {
            return "H";
        }
        if q.x.abs() >= eps {
            complex = true;
        }
    }
    if complex {
        "C"
    } else {
        "R"
    }
}

fn resolve_tolerance(flag: Option<f64>) -> Result<Tolerance, Error> {
    if let Some(eps) = flag {
        return Tolerance::new(eps);
    }
    match std::env::var("QFRAMES_EPS") {
        Ok(text) => {
            let eps: f64 = text.parse().map_err(|_| {
                Error::InvalidArgument(format!("QFRAMES_EPS is not a number: {text:?}"))
            })?;
            Tolerance::new(eps)
        }
        Err(_) => Ok(Tolerance::default()),
    }
}

fn parse_params(pairs: &[String]) -> Result<BTreeMap<String, f64>, Error> {
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (key, value) = pair.split_once('=').ok_or_else(|| {
            Error::InvalidArgument(format!("--param expects KEY=VALUE, got {pair:?}"))
        })?;
        let value: f64 = value.parse().map_err(|_| {
            Error::InvalidArgument(format!("--param {key}: not a number: {value:?}"))
        })?;
        map.insert(key.to_string(), value);
    }
    Ok(map)
}

/// Reads a `.qmat` file keeping both the declared tag and the matrix.
fn read_qmat(path: &Path) -> Result<(QMatFile, QMatrix), Error> {
    let text = std::fs::read_to_string(path)?;
    let file: QMatFile = serde_json::from_str(&text)?;
    let matrix = file.to_matrix()?;
    Ok((file, matrix))
}

fn read_frame(path: &Path, tol: Tolerance) -> Result<(QMatFile, Frame), Error> {
    let (file, matrix) = read_qmat(path)?;
    let frame = Frame::new(matrix, tol)?;
    Ok((file, frame))
}

/// Prints either the JSON object or the plain-text lines. Writing is
/// best-effort: a downstream pipe that closes early (`... | head`) must
/// neither panic nor override the certificate exit code.
fn emit(json_mode: bool, report: &Value, lines: &[String]) {
    use std::io::Write;
    let mut text = if json_mode {
        serde_json::to_string_pretty(report).expect("report serializes")
    } else if lines.is_empty() {
        return;
    } else {
        lines.join("\n")
    };
    text.push('\n');
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let tol = resolve_tolerance(cli.eps)?;
    let json = cli.json;
    match cli.command {
        Command::Construct { name, params, output } => construct(&name, &params, &output, tol, json),
        Command::Verify { input, tight, equiangular, field } => {
            verify(&input, tight, equiangular, field, tol, json)
        }
        Command::Bounds { dim, field } => bounds(dim, field, tol, json),
        Command::Complement { input, output } => complement(&input, &output, tol, json),
        Command::Embed { input, to, output, tight } => embed(&input, &to, &output, tight, tol, json),
        Command::Mproducts { input, max_m } => mproducts(&input, max_m, tol, json),
        Command::Symmetry { input, certify } => symmetry(&input, certify, tol, json),
        Command::Hopf { n, output } => hopf_cmd(n, &output, tol, json),
    }
}

fn construct(
    name: &str,
    params: &[String],
    output: &Path,
    tol: Tolerance,
    json: bool,
) -> Result<u8, Error> {
    let params = parse_params(params)?;
    let frame = qframes::catalog(name, &params, tol)?;
    qframes::qmatfile::save(output, frame.synthesis())?;
    let field = frame.classify_field();
    let report = json!({
        "command": "construct",
        "name": name,
        "params": params,
        "output": output.display().to_string(),
        "dim": frame.dim(),
        "vectors": frame.len(),
        "field": field.to_string(),
    });
    let lines = vec![
        format!("constructed {name}: {} vectors in dimension {}", frame.len(), frame.dim()),
        format!("field: {field}"),
        format!("wrote {}", output.display()),
    ];
    emit(json, &report, &lines);
    Ok(0)
}

fn verify(
    input: &Path,
    tight: bool,
    equiangular: bool,
    field: bool,
    tol: Tolerance,
    json: bool,
) -> Result<u8, Error> {
    let (file, frame) = read_frame(input, tol)?;
    // With no flags the command reports every certificate informationally
    // and, since none was requested, exits 0 regardless of the outcomes.
    let inspect = !tight && !equiangular && !field;
    let mut checks = Vec::new();
    let mut lines = vec![format!(
        "{}: {} vectors in dimension {} (declared field {})",
        input.display(),
        frame.len(),
        frame.dim(),
        file.field_tag
    )];
    let mut requested_pass = true;

    if tight || inspect {
        let (check, line, pass) = match frame.tightness() {
            Ok(r) => (
                json!({
                    "name": "tight",
                    "pass": r.is_tight,
                    "frame_bound": r.frame_bound,
                    "operator_defect": r.operator_defect,
                    "variational_defect": r.variational_defect,
                }),
                format!(
                    "tight: {} (frame bound {:.9}, operator defect {:.3e})",
                    verdict(r.is_tight),
                    r.frame_bound,
                    r.operator_defect
                ),
                r.is_tight,
            ),
            Err(e) => (
                json!({"name": "tight", "pass": false, "error": e.to_string()}),
                format!("tight: FAIL ({e})"),
                false,
            ),
        };
        checks.push(check);
        lines.push(line);
        if tight {
            requested_pass &= pass;
        }
    }

    if equiangular || inspect {
        let (check, line, pass) = match angle_report(&frame) {
            Ok(r) => (
                json!({
                    "name": "equiangular",
                    "pass": r.is_equiangular,
                    "lambda": r.common_lambda,
                    "max_deviation": r.max_deviation,
                    "theta_degrees": r.theta_degrees,
                }),
                format!(
                    "equiangular: {} (lambda {}, max deviation {:.3e})",
                    verdict(r.is_equiangular),
                    r.common_lambda.map_or("n/a".to_string(), |l| format!("{l:.9}")),
                    r.max_deviation
                ),
                r.is_equiangular,
            ),
            Err(e) => (
                json!({"name": "equiangular", "pass": false, "error": e.to_string()}),
                format!("equiangular: FAIL ({e})"),
                false,
            ),
        };
        checks.push(check);
        lines.push(line);
        if equiangular {
            requested_pass &= pass;
        }
    }

    if field || inspect {
        let actual = entry_tag(frame.synthesis(), tol.eps());
        let gramian_field = frame.classify_field();
        let pass = actual == file.field_tag;
        checks.push(json!({
            "name": "field",
            "pass": pass,
            "declared": file.field_tag,
            "entries": actual,
            "gramian_field": gramian_field.to_string(),
        }));
        lines.push(format!(
            "field: {} (declared {}, entries {}, gramian {})",
            verdict(pass),
            file.field_tag,
            actual,
            gramian_field
        ));
        if field {
            requested_pass &= pass;
        }
    }

    let report = json!({
        "command": "verify",
        "input": input.display().to_string(),
        "dim": frame.dim(),
        "vectors": frame.len(),
        "declared_field": file.field_tag,
        "checks": checks,
        "pass": requested_pass,
    });
    lines.push(format!("result: {}", verdict(requested_pass)));
    emit(json, &report, &lines);
    Ok(if requested_pass { 0 } else { 1 })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn bounds(dim: usize, field: FieldClass, tol: Tolerance, json: bool) -> Result<u8, Error> {
    let _ = tol;
    let most = max_lines(dim, field)?;
    let best_angle = max_angle(dim, field)?;
    let (etf_min, etf_max) = etf_size_range(dim, field);
    let mut table = Vec::new();
    let mut truncated = false;
    for n in (dim + 1)..=most {
        if table.len() == WELCH_TABLE_CAP {
            truncated = true;
            break;
        }
        table.push(json!({
            "n": n,
            "welch_lambda": welch_angle(n, dim)?,
            "etf_admissible": etf_size_admits(n, dim, field),
        }));
    }
    let report = json!({
        "command": "bounds",
        "dim": dim,
        "field": field_tag(field),
        "max_lines": most,
        "max_lines_lambda": best_angle,
        "etf_size_range": {"n_min": etf_min, "n_max": etf_max},
        "welch_table": table,
        "welch_table_truncated": truncated,
    });
    let mut lines = vec![
        format!("dimension {dim} over {}", field),
        format!("max equiangular lines: {most} (common angle lambda = {best_angle:.9})"),
        format!("equiangular tight frame sizes admitted: n in [{etf_min:.3}, {etf_max}]"),
        "welch bound per frame size:".to_string(),
    ];
    for row in &table {
        lines.push(format!(
            "  n = {:3}  lambda >= {:.9}  etf size {}",
            row["n"],
            row["welch_lambda"].as_f64().unwrap_or(f64::NAN),
            if row["etf_admissible"].as_bool() == Some(true) { "admitted" } else { "excluded" },
        ));
    }
    if truncated {
        lines.push(format!("  ... table capped at {WELCH_TABLE_CAP} rows"));
    }
    emit(json, &report, &lines);
    Ok(0)
}

fn complement(input: &Path, output: &Path, tol: Tolerance, json: bool) -> Result<u8, Error> {
    let (_, frame) = read_frame(input, tol)?;
    let comp = frame.complement()?;
    qframes::qmatfile::save(output, comp.synthesis())?;
    let tight = comp.tightness()?;
    let angles = angle_report(&comp)?;
    let report = json!({
        "command": "complement",
        "input": input.display().to_string(),
        "output": output.display().to_string(),
        "dim": comp.dim(),
        "vectors": comp.len(),
        "frame_bound": tight.frame_bound,
        "is_tight": tight.is_tight,
        "lambda": angles.common_lambda,
        "is_equiangular": angles.is_equiangular,
    });
    let lines = vec![
        format!(
            "complement: {} vectors in dimension {} (frame bound {:.9})",
            comp.len(),
            comp.dim(),
            tight.frame_bound
        ),
        format!(
            "equiangular: {} (lambda {})",
            verdict(angles.is_equiangular),
            angles.common_lambda.map_or("n/a".to_string(), |l| format!("{l:.9}"))
        ),
        format!("wrote {}", output.display()),
    ];
    emit(json, &report, &lines);
    Ok(0)
}

fn embed(
    input: &Path,
    to: &str,
    output: &Path,
    tight: bool,
    tol: Tolerance,
    json: bool,
) -> Result<u8, Error> {
    let (_, frame) = read_frame(input, tol)?;
    let mut descends = None;
    if tight {
        let outcome = match to {
            "real" => frame.descends_to_real(),
            _ => frame.descends_to_complex(),
        };
        match outcome {
            Ok(ok) => descends = Some(ok),
            // A non-tight input cannot pass the descent certificate.
            Err(Error::NotTight { defect }) => {
                let report = json!({
                    "command": "embed",
                    "input": input.display().to_string(),
                    "to": to,
                    "descends": false,
                    "error": format!("frame is not tight (operator defect {defect:.3e})"),
                    "pass": false,
                });
                emit(json, &report, &[format!(
                    "descent: FAIL (frame is not tight, operator defect {defect:.3e})"
                )]);
                return Ok(1);
            }
            Err(e) => return Err(e),
        }
        if descends == Some(false) {
            let report = json!({
                "command": "embed",
                "input": input.display().to_string(),
                "to": to,
                "descends": false,
                "pass": false,
            });
            emit(json, &report, &[
                format!("descent: FAIL (the embedded frame is not tight for {to} scalars)"),
            ]);
            return Ok(1);
        }
    }
    let image = match to {
        "real" => frame.embedded_real()?,
        _ => frame.embedded_complex()?,
    };
    qframes::qmatfile::save(output, image.synthesis())?;
    let report = json!({
        "command": "embed",
        "input": input.display().to_string(),
        "to": to,
        "descends": descends,
        "dim": image.dim(),
        "vectors": image.len(),
        "output": output.display().to_string(),
        "pass": true,
    });
    let mut lines = Vec::new();
    if let Some(ok) = descends {
        lines.push(format!("descent: {} (embedded frame stays tight)", verdict(ok)));
    }
    lines.push(format!(
        "embedded {} vectors into dimension {} over {to} scalars",
        image.len(),
        image.dim()
    ));
    lines.push(format!("wrote {}", output.display()));
    emit(json, &report, &lines);
    Ok(0)
}

/// Clusters reduced values `(re, abs)` that agree within `width` into
/// `(re, abs, count)` triples, sorted by real part.
fn cluster_reduced(mut values: Vec<(f64, f64)>, width: f64) -> Vec<(f64, f64, usize)> {
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite reduced values"));
    let mut out: Vec<(f64, f64, usize)> = Vec::new();
    for (re, abs) in values {
        match out.last_mut() {
            Some((r, a, count)) if (re - *r).abs() <= width && (abs - *a).abs() <= width => {
                *count += 1;
            }
            _ => out.push((re, abs, 1)),
        }
    }
    out
}

fn cluster_json(clusters: &[(f64, f64, usize)]) -> Vec<Value> {
    clusters
        .iter()
        .map(|(re, abs, count)| json!({"re": re, "abs": abs, "count": count}))
        .collect()
}

fn cluster_text(clusters: &[(f64, f64, usize)]) -> String {
    clusters
        .iter()
        .map(|(re, abs, count)| format!("(re {re:.9}, abs {abs:.9}) x{count}"))
        .collect::<Vec<_>>()
        .join("  ")
}

fn mproducts(input: &Path, max_m: usize, tol: Tolerance, json: bool) -> Result<u8, Error> {
    let (_, frame) = read_frame(input, tol)?;
    let n = frame.len();
    let graph = frame_graph(&frame);
    let basis = cycle_basis(&graph);
    let width = (tol.eps() * 1e3).max(1e-12);

    let mut by_length: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    for cycle in &basis {
        let p = m_product(&frame, cycle)?;
        by_length.entry(cycle.len()).or_default().push(p.reduced);
    }
    let mut basis_section = Vec::new();
    let mut lines = vec![format!(
        "{}: {} vectors, frame graph with {} edges, cycle basis of size {}",
        input.display(),
        n,
        graph.edges.len(),
        basis.len()
    )];
    lines.push("cycle basis, reduced m-products by length:".to_string());
    for (length, values) in &by_length {
        let clusters = cluster_reduced(values.clone(), width);
        lines.push(format!("  length {length}: {}", cluster_text(&clusters)));
        basis_section.push(json!({
            "length": length,
            "cycles": values.len(),
            "values": cluster_json(&clusters),
        }));
    }
    if by_length.is_empty() {
        lines.push("  (none: the frame graph is a forest)".to_string());
    }

    // Guard the distinct-index enumeration before materializing it: the
    // number of canonical m-cycles is C(n, m) (m-1)! / 2 for m >= 3.
    let mut budget = 0.0;
    let limit = max_m.min(n);
    for m in 1..=limit {
        budget += canonical_cycle_count(n, m);
    }
    if budget > MPRODUCT_CYCLE_CAP {
        return Err(Error::InvalidArgument(format!(
            "enumerating all cycles up to length {limit} over {n} vectors needs ~{budget:.2e} \
             m-products; lower --max-m"
        )));
    }

    let mut all_section = Vec::new();
    lines.push(format!("all distinct-index cycles up to length {limit}:"));
    for m in 1..=limit {
        let cycles = canonical_cycles(n, m);
        let mut values = Vec::with_capacity(cycles.len());
        for cycle in &cycles {
            values.push(m_product(&frame, cycle)?.reduced);
        }
        let clusters = cluster_reduced(values, width);
        lines.push(format!("  m = {m} ({} cycles): {}", cycles.len(), cluster_text(&clusters)));
        all_section.push(json!({
            "m": m,
            "cycles": cycles.len(),
            "values": cluster_json(&clusters),
        }));
    }

    let report = json!({
        "command": "mproducts",
        "input": input.display().to_string(),
        "vectors": n,
        "graph_edges": graph.edges.len(),
        "cycle_basis": basis_section,
        "distinct_cycles": all_section,
        "cluster_width": width,
    });
    emit(json, &report, &lines);
    Ok(0)
}

fn canonical_cycle_count(n: usize, m: usize) -> f64 {
    let mut choose = 1.0;
    for t in 0..m {
        choose *= (n - t) as f64 / (t + 1) as f64;
    }
    if m <= 2 {
        return choose;
    }
    let mut arrangements = 1.0;
    for t in 1..m {
        arrangements *= t as f64;
    }
    choose * arrangements / 2.0
}

fn symmetry(input: &Path, certify: bool, tol: Tolerance, json: bool) -> Result<u8, Error> {
    let (_, frame) = read_frame(input, tol)?;
    if !certify {
        let candidates = symmetry_candidates(&frame, DEFAULT_SEARCH_CAP)?;
        let report = json!({
            "command": "symmetry",
            "input": input.display().to_string(),
            "vectors": frame.len(),
            "permutation_order": candidates.len(),
        });
        let lines = vec![format!("permutation symmetry group: order {}", candidates.len())];
        emit(json, &report, &lines);
        return Ok(0);
    }
    let group = projective_symmetry_group(&frame, DEFAULT_SEARCH_CAP)?;
    let report = json!({
        "command": "symmetry",
        "input": input.display().to_string(),
        "vectors": frame.len(),
        "permutation_order": group.permutations.len() + group.uncertified.len(),
        "certified": group.permutations.len(),
        "uncertified": group.uncertified.len(),
        "unitary_closure_order": group.unitary_group.len(),
        "max_certificate_defect": group.max_defect,
    });
    let mut lines = vec![
        format!(
            "permutation symmetry group: order {}",
            group.permutations.len() + group.uncertified.len()
        ),
        format!(
            "certified by unitary lifts: {} (max certificate defect {:.3e})",
            group.permutations.len(),
            group.max_defect
        ),
        format!("unitary closure: order {}", group.unitary_group.len()),
    ];
    if !group.uncertified.is_empty() {
        lines.push(format!("uncertified candidates: {}", group.uncertified.len()));
    }
    emit(json, &report, &lines);
    Ok(0)
}

fn hopf_cmd(n: usize, output: &Path, tol: Tolerance, json: bool) -> Result<u8, Error> {
    let frame = hopf_lines(n, tol)?;
    qframes::qmatfile::save(output, frame.synthesis())?;
    let angles = angle_report(&frame)?;
    let field = frame.classify_field();
    let report = json!({
        "command": "hopf",
        "n": n,
        "output": output.display().to_string(),
        "dim": frame.dim(),
        "vectors": frame.len(),
        "field": field.to_string(),
        "lambda": angles.common_lambda,
    });
    let lines = vec![
        format!(
            "hopf lines: {} vectors in dimension {} over the {field} field (lambda {})",
            frame.len(),
            frame.dim(),
            angles.common_lambda.map_or("n/a".to_string(), |l| format!("{l:.9}"))
        ),
        format!("wrote {}", output.display()),
    ];
    emit(json, &report, &lines);
    Ok(0)
}
