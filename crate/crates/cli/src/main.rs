//! Command-line front end: parse complexes from facet files or the named
//! registry, dispatch the deformation computations, and print tables or
//! JSON.
//!
//! Exit codes: 0 on success, 1 on usage and domain errors, 2 when a
//! normal-form verification fails.

use std::collections::HashSet;
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use srdef_core::complex::SimplicialComplex;
use srdef_core::cotangent::{
    b_set, degree_zero_totals, is_rigid, surface_formulas, t1_manifold_dim, t2_manifold_dim,
    t_graded_dim, threefold_formula, GradedPieceReport, Method,
};
use srdef_core::degree::Multidegree;
use srdef_core::error::{Error, Result};
use srdef_core::oracle::{t1_oracle_dim, t2_oracle_dim};
use srdef_core::poly::{MonomialOrder, Poly, Ring};
use srdef_core::sheaf::{local_cohomology_dim, twisted_structure_sheaf_cohomology};
use srdef_core::versal::{
    first_order_table, krull_dimension, normal_form, verify_normal_form_relations, versal_ideal,
    NormalForm,
};
use srdef_core::vset::{VertexSet, MAX_VERTICES};
use srdef_core::{named, Error as CoreError};

#[derive(Parser)]
#[command(
    name = "srdef",
    version,
    about = "Deformation invariants of Stanley-Reisner schemes of simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker thread cap for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    parallel: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Source {
    /// Facet file path or registry name, e.g. torus:7 or suspension:cycle:6.
    source: String,
}

#[derive(Args)]
struct DegreeArgs {
    /// Positive part as vertex:exponent pairs, e.g. "0:2,3:1".
    #[arg(long)]
    a: Option<String>,
    /// Negative squarefree part as a vertex list, e.g. "1,4,7".
    #[arg(long)]
    b: Option<String>,
}

impl DegreeArgs {
    fn multidegree(&self) -> Result<Multidegree> {
        let a = match &self.a {
            Some(s) => Multidegree::parse_a(s)?,
            None => Vec::new(),
        };
        let b = match &self.b {
            Some(s) => Multidegree::parse_b(s)?,
            None => return Err(Error::Parse("--b is required unless --degree0 is given".into())),
        };
        Multidegree::new(a, b)
    }
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, Euler characteristic, valencies, manifold and orientability checks.
    Info(Source),
    /// Squarefree degrees b whose first-order piece has a single generator.
    Bset(Source),
    /// First-order deformations: one graded piece, or the degree-zero total.
    T1 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: DegreeArgs,
        /// Total all contributions in degree zero instead of one piece.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        degree0: bool,
    },
    /// Obstructions: one graded piece, or the degree-zero total.
    T2 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: DegreeArgs,
        /// Total all contributions in degree zero instead of one piece.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        degree0: bool,
    },
    /// One first-order piece by the direct linear-algebra method.
    OracleT1 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// One obstruction piece by the direct linear-algebra method.
    OracleT2 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// Closed-surface deformation dimensions from the valency census.
    Surface(Source),
    /// Closed-3-manifold first-order dimension from the link census.
    Threefold(Source),
    /// Rigidity test for closed 3-manifolds.
    Rigid(Source),
    /// One graded piece of local cohomology at the irrelevant ideal.
    LocalCohomology {
        #[command(flatten)]
        source: Source,
        /// Cohomological index.
        #[arg(long)]
        i: i32,
        /// Multidegree as a comma-separated integer vector, one entry per vertex.
        #[arg(long)]
        c: String,
    },
    /// Cohomology of a twist of the structure sheaf.
    SheafCohomology {
        #[command(flatten)]
        source: Source,
        /// Twist, m >= 0.
        #[arg(long)]
        m: i64,
    },
    /// Deformation equations of the cone over the n-gon, truncated in parameter order.
    NormalForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: u32,
    },
    /// Verify that the normal-form relations lift; exits 2 on failure.
    VerifyNf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: u32,
    },
    /// Base ideal of the versal deformation of a low-valency surface.
    VersalIdeal(Source),
    /// Krull dimension of the versal base ring.
    KrullDim(Source),
    /// Per-vertex first-order parameter assignments in global coordinates.
    FirstOrderTable(Source),
    /// Stellar exchange replacing the face a by the minimal non-face b.
    Flip {
        #[command(flatten)]
        source: Source,
        /// Face to remove, as a vertex list.
        #[arg(long)]
        a: String,
        /// Minimal non-face to insert, as a vertex list.
        #[arg(long)]
        b: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(w) = cli.parallel {
        // ignore failure when a pool was already installed
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match run(&cli.command, cli.format) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e, cli.format);
            ExitCode::from(1)
        }
    }
}

fn error_code(e: &CoreError) -> &'static str {
    match e {
        CoreError::Capacity(_) => "capacity",
        CoreError::Domain(_) => "domain",
        CoreError::Unsupported(_) => "unsupported",
        CoreError::Resource(_) => "resource",
        CoreError::Parse(_) => "parse",
    }
}

fn report_error(e: &CoreError, format: Format) {
    match format {
        Format::Text => eprintln!("error: {e}"),
        Format::Json => {
            let v = json!({ "error": { "code": error_code(e), "message": e.to_string() } });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
}

struct Report {
    text: String,
    json: Value,
}

fn emit(format: Format, command: &str, source: Option<&str>, warnings: &[String], rep: Report) {
    match format {
        Format::Text => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
            println!("{}", rep.text.trim_end());
        }
        Format::Json => {
            let mut envelope = Map::new();
            envelope.insert("command".into(), json!(command));
            if let Some(s) = source {
                envelope.insert("source".into(), json!(s));
            }
            if !warnings.is_empty() {
                envelope.insert("normalization".into(), json!(warnings));
            }
            envelope.insert("result".into(), rep.json);
            println!("{}", serde_json::to_string_pretty(&Value::Object(envelope)).unwrap());
        }
    }
}

fn run(command: &Command, format: Format) -> Result<ExitCode> {
    let mut exit = ExitCode::SUCCESS;
    let (name, source, warnings, rep) = match command {
        Command::Info(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            ("info", Some(&src.source), w, info_report(&k))
        }
        Command::Bset(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            ("bset", Some(&src.source), w, bset_report(&k)?)
        }
        Command::T1 { source, degree, degree0 } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let rep = if *degree0 {
                degree_zero_report(&k, 1)?
            } else {
                graded_report(&k, 1, &degree.multidegree()?)?
            };
            ("t1", Some(&source.source), w, rep)
        }
        Command::T2 { source, degree, degree0 } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let rep = if *degree0 {
                degree_zero_report(&k, 2)?
            } else {
                graded_report(&k, 2, &degree.multidegree()?)?
            };
            ("t2", Some(&source.source), w, rep)
        }
        Command::OracleT1 { source, degree } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let c = degree.multidegree()?;
            let dim = t1_oracle_dim(&k, &c)?;
            ("oracle-t1", Some(&source.source), w, oracle_report(1, &c, dim))
        }
        Command::OracleT2 { source, degree } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let c = degree.multidegree()?;
            let dim = t2_oracle_dim(&k, &c)?;
            ("oracle-t2", Some(&source.source), w, oracle_report(2, &c, dim))
        }
        Command::Surface(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            let r = surface_formulas(&k)?;
            let text = format!(
                "dim T1_P = {}\ndim T2_A,0 = {}\nh2(Theta) = {}\nf1 = {}\nh2 = {}\nEuler characteristic = {}\nvertices by valency: {}",
                r.t1_projective,
                r.t2_degree_zero,
                r.h2_theta,
                r.f1,
                r.h2,
                r.euler,
                r.f0_by_valency
                    .iter()
                    .map(|(v, n)| format!("{n} of valency {v}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            let json = serde_json::to_value(&r).unwrap();
            ("surface", Some(&src.source), w, Report { text, json })
        }
        Command::Threefold(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            let r = threefold_formula(&k)?;
            let text = format!(
                "dim T1_P = {}\nvertex links: {} tetrahedra, {} suspended triangles, {} suspended squares, {} suspended larger cycles, {} other spheres\nedges: {} of valency 3, {} of valency 4\nh2 = {}",
                r.t1_projective, r.d3, r.e3, r.e4, r.e_ge5, r.c_ge6, r.f1_valency3, r.f1_valency4, r.h2,
            );
            let json = serde_json::to_value(&r).unwrap();
            ("threefold", Some(&src.source), w, Report { text, json })
        }
        Command::Rigid(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            let r = is_rigid(&k)?;
            let mut text = format!("rigid: {}\nh2 = {}", r.rigid, r.h2);
            if !r.low_valency_edges.is_empty() {
                text.push_str(&format!(
                    "\nedges of valency < 5: {}",
                    r.low_valency_edges
                        .iter()
                        .map(|(e, v)| format!("{e} (valency {v})"))
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
            let json = serde_json::to_value(&r).unwrap();
            ("rigid", Some(&src.source), w, Report { text, json })
        }
        Command::LocalCohomology { source, i, c } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let c: Vec<i64> = c
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("invalid multidegree entry '{t}'")))
                })
                .collect::<Result<_>>()?;
            let dim = local_cohomology_dim(&k, *i, &c)?;
            let text = format!("dim H^{i}_m(A)_c = {dim}");
            let json = json!({ "i": i, "c": c, "dim": dim });
            ("local-cohomology", Some(&source.source), w, Report { text, json })
        }
        Command::SheafCohomology { source, m } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let dims = twisted_structure_sheaf_cohomology(&k, *m)?;
            let text = dims
                .iter()
                .enumerate()
                .map(|(p, h)| format!("h^{p}(O({m})) = {h}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({ "m": m, "h": dims });
            ("sheaf-cohomology", Some(&source.source), w, Report { text, json })
        }
        Command::NormalForm { n, order } => {
            let nf = normal_form(*n, *order)?;
            ("normal-form", None, Vec::new(), normal_form_report(&nf))
        }
        Command::VerifyNf { n, order } => {
            let rep = verify_normal_form_relations(*n, *order)?;
            let mut text = String::new();
            for rel in &rep.relations {
                let status = if rel.residual_zero { "ok  " } else { "FAIL" };
                text.push_str(&format!("{status} {}\n", rel.description));
                if let Some(res) = &rel.residual {
                    text.push_str(&format!("     residual: {res}\n"));
                }
            }
            text.push_str(&format!(
                "verification {} for n = {} at order {}",
                if rep.passed { "passed" } else { "FAILED" },
                rep.n,
                rep.order
            ));
            if !rep.passed {
                exit = ExitCode::from(2);
            }
            let json = serde_json::to_value(&rep).unwrap();
            ("verify-nf", None, Vec::new(), Report { text, json })
        }
        Command::VersalIdeal(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            ("versal-ideal", Some(&src.source), w, versal_ideal_report(&k)?)
        }
        Command::KrullDim(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            let vi = versal_ideal(&k)?;
            let dim = krull_dimension(&vi)?;
            let text = format!("krull dimension = {dim}");
            let json = json!({ "krull_dimension": dim });
            ("krull-dim", Some(&src.source), w, Report { text, json })
        }
        Command::FirstOrderTable(src) => {
            let (k, w) = parse_complex_source(&src.source)?;
            let table = first_order_table(&k)?;
            let mut text = String::new();
            for va in &table {
                text.push_str(&format!("vertex {} (valency {}):\n", va.vertex, va.valency));
                for (src_param, dst) in &va.rows {
                    text.push_str(&format!("  {src_param} -> {dst}\n"));
                }
            }
            let json = serde_json::to_value(&table).unwrap();
            ("first-order-table", Some(&src.source), w, Report { text, json })
        }
        Command::Flip { source, a, b } => {
            let (k, w) = parse_complex_source(&source.source)?;
            let a = Multidegree::parse_b(a)?;
            let b = Multidegree::parse_b(b)?;
            let flipped = k.flip(a, b)?;
            let facets: Vec<Vec<usize>> = flipped.facets().iter().map(|f| f.to_vec()).collect();
            let text = facets
                .iter()
                .map(|f| f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({ "facets": facets });
            ("flip", Some(&source.source), w, Report { text, json })
        }
    };
    emit(format, name, source.map(|s| s.as_str()), &warnings, rep);
    Ok(exit)
}

/// Read a complex from a facet file or the named registry, together with
/// the normalization report for file input.
fn parse_complex_source(spec: &str) -> Result<(SimplicialComplex, Vec<String>)> {
    let path = Path::new(spec);
    let (k, warnings) = if path.is_file() {
        parse_facet_file(path)?
    } else {
        (named::named_complex(spec)?, Vec::new())
    };
    if let Ok(cap) = std::env::var("SRDEF_MAX_VERTICES") {
        let cap: usize = cap
            .parse()
            .map_err(|_| Error::Parse("SRDEF_MAX_VERTICES is not a number".into()))?;
        if k.n_vertices() > cap {
            return Err(Error::Resource(format!(
                "complex has {} vertices, above the SRDEF_MAX_VERTICES cap of {cap}",
                k.n_vertices()
            )));
        }
    }
    Ok((k, warnings))
}

/// One facet per line as whitespace-separated vertex indices; `#` starts a
/// comment. Non-maximal and duplicate facets are dropped with a warning.
fn parse_facet_file(path: &Path) -> Result<(SimplicialComplex, Vec<String>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut facets: Vec<(usize, VertexSet)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                Error::Parse(format!("{}:{}: invalid vertex '{tok}'", path.display(), ln + 1))
            })?;
            if v >= MAX_VERTICES {
                return Err(Error::Capacity(v));
            }
            verts.push(v);
        }
        facets.push((ln + 1, VertexSet::from_vertices(verts)));
    }
    let mut warnings = Vec::new();
    for (idx, (ln, f)) in facets.iter().enumerate() {
        if facets.iter().any(|(_, g)| f != g && f.is_subset_of(*g)) {
            warnings.push(format!("line {ln}: facet {f} dropped as non-maximal"));
        } else if facets[..idx].iter().any(|(_, g)| g == f) {
            warnings.push(format!("line {ln}: duplicate facet {f} merged"));
        }
    }
    let n = facets
        .iter()
        .filter_map(|(_, f)| f.max_vertex())
        .max()
        .map_or(0, |m| m + 1);
    let k = SimplicialComplex::build_from_facets(facets.into_iter().map(|(_, f)| f), n)?;
    Ok((k, warnings))
}

fn info_report(k: &SimplicialComplex) -> Report {
    let fv = k.f_vector();
    let euler = k.euler_characteristic();
    let valencies = k.face_valency_counts(0);
    let manifold = k.is_closed_manifold().unwrap_or((false, 0));
    let orientable = if manifold.0 { k.is_orientable().ok() } else { None };
    let nonfaces = k.minimal_nonfaces();
    let mut text = format!(
        "vertices: {} (universe 0..{})\ndimension: {}\nf-vector: {:?}\nEuler characteristic: {}\nvertex valencies: {}\nminimal non-faces: {}\nclosed manifold: {}",
        k.support().len(),
        k.n_vertices(),
        k.dim().map_or("void".to_string(), |d| d.to_string()),
        fv,
        euler,
        valencies
            .iter()
            .map(|(v, n)| format!("{n} of valency {v}"))
            .collect::<Vec<_>>()
            .join(", "),
        nonfaces.len(),
        if manifold.0 { format!("yes (dimension {})", manifold.1) } else { "no".to_string() },
    );
    if let Some(o) = orientable {
        text.push_str(&format!("\norientable: {o}"));
    }
    let json = json!({
        "vertices": k.support().len(),
        "universe": k.n_vertices(),
        "dimension": k.dim(),
        "f_vector": fv,
        "euler_characteristic": euler,
        "vertex_valencies": valencies,
        "minimal_nonfaces": nonfaces.len(),
        "closed_manifold": manifold.0,
        "manifold_dimension": manifold.0.then_some(manifold.1),
        "orientable": orientable,
    });
    Report { text, json }
}

fn bset_report(k: &SimplicialComplex) -> Result<Report> {
    let bs = b_set(k)?;
    let mut text = String::new();
    for b in &bs {
        text.push_str(&format!("{b}\n"));
    }
    text.push_str(&format!("cardinality = {}", bs.len()));
    let json = json!({
        "b_set": bs.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
        "cardinality": bs.len(),
    });
    Ok(Report { text, json })
}

fn degree_zero_report(k: &SimplicialComplex, i: u8) -> Result<Report> {
    let s = degree_zero_totals(k)?;
    let total = if i == 1 { s.t1_total } else { s.t2_total };
    let mut text = format!("dim T{i}_A,0 = {total}");
    let mut by_size = Map::new();
    let max_a = s.contributions.iter().map(|c| c.a.len()).max().unwrap_or(0);
    for a_len in 1..=max_a {
        let part = s.total_for_context_size(i, a_len);
        if part > 0 {
            let label = match a_len {
                1 => "vertices".to_string(),
                2 => "edges".to_string(),
                3 => "triangles".to_string(),
                n => format!("faces with {n} vertices"),
            };
            text.push_str(&format!("\n  from {label}: {part}"));
            by_size.insert(a_len.to_string(), json!(part));
        }
    }
    let json = json!({ "i": i, "total": total, "by_context_size": by_size });
    Ok(Report { text, json })
}

fn graded_report(k: &SimplicialComplex, i: u8, c: &Multidegree) -> Result<Report> {
    let a = c.a_support();
    let closed = k.is_closed_manifold().map(|(m, _)| m).unwrap_or(false);
    let rep: GradedPieceReport = if closed {
        if i == 1 {
            t1_manifold_dim(k, a, c.b)?
        } else {
            t2_manifold_dim(k, a, c.b)?
        }
    } else {
        GradedPieceReport {
            i,
            a,
            b: c.b,
            dim: t_graded_dim(k, i as usize, a, c.b)?,
            basis: None,
            method: Method::GeneralTopological,
        }
    };
    let mut text = format!("dim T{i} in degree a - b, a = {}, b = {}: {}", rep.a, rep.b, rep.dim);
    if let Some(basis) = &rep.basis {
        text.push_str(&format!("\nbasis: {basis}"));
    }
    let json = serde_json::to_value(&rep).unwrap();
    Ok(Report { text, json })
}

fn oracle_report(i: u8, c: &Multidegree, dim: usize) -> Report {
    let text = format!(
        "dim T{i} in degree a - b, a = {}, b = {}: {dim} (direct linear algebra)",
        c.a_support(),
        c.b
    );
    let json = json!({
        "i": i,
        "a": c.a,
        "b": c.b.to_vec(),
        "dim": dim,
        "method": "oracle",
    });
    Report { text, json }
}

/// Terms of `p` as `{coeff, params, ys}` objects in descending monomial
/// order, so the output is byte-stable.
fn poly_terms_json(ring: &Ring, y_vars: &HashSet<usize>, p: &Poly, ord: &MonomialOrder) -> Value {
    let mut terms = ring.term_list(p);
    terms.sort_by(|a, b| ord.cmp(b.0, a.0));
    let out: Vec<Value> = terms
        .iter()
        .map(|(m, coeff)| {
            let mut params = Map::new();
            let mut ys = Map::new();
            for v in m.support() {
                let e = json!(m.exponent(v));
                if y_vars.contains(&v) {
                    ys.insert(ring.name(v).to_string(), e);
                } else {
                    params.insert(ring.name(v).to_string(), e);
                }
            }
            json!({ "coeff": coeff.to_string(), "params": params, "ys": ys })
        })
        .collect();
    Value::Array(out)
}

fn normal_form_report(nf: &NormalForm) -> Report {
    let ord = MonomialOrder::all(nf.ring.n_vars());
    let y_vars: HashSet<usize> = nf.y.iter().copied().collect();
    let mut text = String::new();
    let mut equations = Vec::new();
    for (eq, lift) in nf.equations.iter().zip(&nf.lifts) {
        text.push_str(&format!("# lifts {lift}\n{}\n", nf.ring.format(eq)));
        equations.push(json!({
            "lifts": lift,
            "terms": poly_terms_json(&nf.ring, &y_vars, eq, &ord),
        }));
    }
    let mut base_relations = Vec::new();
    if !nf.base_relations.is_empty() {
        text.push_str("# base ideal generators\n");
        for r in &nf.base_relations {
            text.push_str(&format!("{}\n", nf.ring.format(r)));
            base_relations.push(poly_terms_json(&nf.ring, &y_vars, r, &ord));
        }
    }
    let json = json!({
        "n": nf.n,
        "order": nf.order,
        "equations": equations,
        "base_relations": base_relations,
    });
    Report { text, json }
}

fn versal_ideal_report(k: &SimplicialComplex) -> Result<Report> {
    let vi = versal_ideal(k)?;
    let ring = &vi.ring;
    let matrices: Vec<Value> = vi
        .matrices
        .iter()
        .map(|(v, m)| {
            json!({
                "vertex": v,
                "rows": m.iter()
                    .map(|row| row.iter().map(|&e| ring.name(e)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let generators: Vec<String> = vi.generators.iter().map(|g| ring.format(g)).collect();
    let krull = krull_dimension(&vi).ok();
    let mut text = format!(
        "variables: {}\nminor matrices: {}\ngenerators: {}\nexact: {}",
        vi.variables.count,
        vi.matrices.len(),
        generators.len(),
        vi.is_exact(),
    );
    for (v, m) in &vi.matrices {
        text.push_str(&format!(
            "\nmatrix at vertex {v}: [{}] / [{}]",
            m[0].iter().map(|&e| ring.name(e)).collect::<Vec<_>>().join(", "),
            m[1].iter().map(|&e| ring.name(e)).collect::<Vec<_>>().join(", "),
        ));
    }
    for g in &generators {
        text.push_str(&format!("\n  {g}"));
    }
    if let Some(d) = krull {
        text.push_str(&format!("\nkrull dimension = {d}"));
    }
    let json = json!({
        "variables": serde_json::to_value(&vi.variables).unwrap(),
        "variable_count": vi.variables.count,
        "matrices": matrices,
        "generators": generators,
        "exact": vi.is_exact(),
        "exactness": serde_json::to_value(vi.exactness).unwrap(),
        "krull_dimension": krull,
    });
    Ok(Report { text, json })
}
