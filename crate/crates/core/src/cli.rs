//! Command-line front end: file formats, report assembly and exit codes.
//!
//! Exit codes: 0 success, 1 a checked identity failed, 2 invalid input,
//! 3 an integrity error (a bug, or input that slipped past validation).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::cone::Cone;
use crate::ehrhart::EhrhartCache;
use crate::error::Error;
use crate::hypersurface::HypersurfaceContext;
use crate::lattice::LatticeVector;
use crate::mirror::{self, CayleyData, HodgeDiamond, NefPartition};
use crate::poly::LaurentPoly2;
use crate::stanley::{self, PosetPolyCache};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "stringy",
    version,
    about = "Poset, Ehrhart and stringy E-polynomials of toric data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Verify the identities relevant to the command.
    #[arg(long, global = true)]
    pub check: bool,

    /// Compare lattice point counts with the closed-form series to order K
    /// (default: cone rank + 2).
    #[arg(long, value_name = "K", num_args = 0..=1, global = true)]
    pub truncation_check: Option<Option<u64>>,

    /// Include per-face tables.
    #[arg(long, global = true)]
    pub faces: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Face lattice, Gorenstein data and G/H/H_Lef/B polynomials of a cone.
    Cone { path: PathBuf },
    /// E-polynomials of the generic hypersurface of a Gorenstein cone.
    Hypersurface { path: PathBuf },
    /// Stringy E-polynomials of a nef-partition and its mirror.
    Mirror { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `{"rank": d, "generators": [[...], ...]}`
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub rank: usize,
    pub generators: Vec<Vec<i64>>,
}

/// `{"rank": d, "summands": [[[...], ...], ...]}`
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct NefFile {
    pub rank: usize,
    pub summands: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INVALID,
            CliError::Math(Error::Integrity(_) | Error::Overflow) => EXIT_INTEGRITY,
            CliError::Math(_) => EXIT_INVALID,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_cone(path: &Path) -> Result<Cone, CliError> {
    let file: ConeFile = read_json(path)?;
    let gens: Vec<LatticeVector> = file
        .generators
        .iter()
        .map(|g| LatticeVector::from_i64(g))
        .collect();
    Ok(Cone::from_generators(file.rank, &gens)?)
}

pub fn load_nef(path: &Path) -> Result<NefPartition, CliError> {
    let file: NefFile = read_json(path)?;
    let parts: Vec<Vec<LatticeVector>> = file
        .summands
        .iter()
        .map(|s| s.iter().map(|p| LatticeVector::from_i64(p)).collect())
        .collect();
    Ok(NefPartition::from_points(file.rank, &parts)?)
}

/// A rendered report: ordered `(key, value)` pairs for text output, and
/// whether a checked identity failed.
#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
    pub falsified: bool,
}

impl Report {
    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_string(), value.into()));
    }

    fn verdict(&mut self, key: &str, holds: bool) {
        self.falsified |= !holds;
        self.put(key, holds);
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self.entries.iter().cloned().collect();
        Value::Object(map)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            match v {
                Value::String(s) if s.contains('\n') => {
                    let _ = writeln!(out, "{k}:");
                    for line in s.lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                }
                Value::String(s) => {
                    let _ = writeln!(out, "{k}: {s}");
                }
                Value::Object(m) if m.contains_key("picture") => {
                    let _ = writeln!(out, "{k}:");
                    for line in m["picture"].as_str().unwrap_or_default().lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                }
                Value::Array(rows) if rows.iter().all(Value::is_object) => {
                    let _ = writeln!(out, "{k}:");
                    for row in rows {
                        let _ = writeln!(out, "  {}", compact(row));
                    }
                }
                other => {
                    let _ = writeln!(out, "{k}: {}", compact(other));
                }
            }
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", compact(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn t(p: &LaurentPoly2) -> Value {
    Value::String(p.display_t())
}

fn uv(p: &LaurentPoly2) -> Value {
    Value::String(p.to_string())
}

fn vectors(vs: &[LatticeVector]) -> Value {
    Value::Array(vs.iter().map(|v| Value::String(v.to_string())).collect())
}

fn diamond(d: &HodgeDiamond) -> Value {
    json!({
        "rows": d.rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "picture": d.to_string(),
    })
}

pub fn cone_report(cone: &Cone, cli: &Cli) -> Result<Report, CliError> {
    let mut r = Report::default();
    let lattice = cone.face_lattice();
    let poset = &lattice.poset;
    r.put("rank", cone.rank());
    r.put("generators", vectors(cone.generators()));
    r.put("f_vector", json!(lattice.f_vector()));
    r.put("gorenstein", cone.is_gorenstein());
    if let Some(n) = cone.degree_form() {
        r.put("degree_form", n.to_string());
    }
    r.put(
        "reflexive_index",
        cone.reflexive_index()
            .map_or(Value::Null, |i| Value::String(i.to_string())),
    );
    let mut cache = PosetPolyCache::new();
    let (bottom, top) = (poset.bottom(), poset.top());
    r.put("G", t(&cache.g(poset, bottom, top)));
    r.put("H", t(&cache.h(poset, bottom, top)));
    r.put("H_Lef", t(&cache.h_lef(poset, bottom, top)?));
    r.put("B", uv(&cache.b(poset, bottom, top)?));
    let mut ehrhart = EhrhartCache::new();
    if cone.is_gorenstein() {
        r.put("S", t(&ehrhart.s_poly(cone, &lattice, top)?));
        r.put("T", t(&ehrhart.t_poly(cone, &lattice, top)?));
    }
    if cli.check {
        let ids = stanley::verify_all_intervals(poset)?;
        r.put("intervals_checked", ids.intervals);
        r.verdict("h_symmetry", ids.h_symmetry);
        r.verdict("g_inversion", ids.inversion);
        r.verdict("b_degree", ids.degree);
        r.verdict("interval_relation", ids.relation);
        r.verdict("b_duality", ids.duality);
        r.verdict("h_lef", ids.lef);
        if cone.is_gorenstein() {
            let mut ok = true;
            for x in 0..lattice.len() {
                ok &= ehrhart.check_reciprocity(cone, &lattice, x)?;
            }
            r.verdict("reciprocity", ok);
        }
    }
    if let Some(k) = cli.truncation_check {
        let k = k.unwrap_or(cone.rank() as u64 + 2);
        if !cone.is_gorenstein() {
            return Err(Error::NotGorenstein.into());
        }
        let mut ok = true;
        for x in 0..lattice.len() {
            ok &= ehrhart.check_series(cone, &lattice, x, k)?;
        }
        r.put("truncation_order", k);
        r.verdict("truncation", ok);
    }
    if cli.faces && cone.is_gorenstein() {
        let mut rows = Vec::new();
        for x in 0..lattice.len() {
            let f = lattice.face(x);
            rows.push(json!({
                "face": x,
                "dim": f.dim,
                "rays": f.generators.ones().collect::<Vec<_>>(),
                "S": t(&ehrhart.s_poly(cone, &lattice, x)?),
                "T": t(&ehrhart.t_poly(cone, &lattice, x)?),
            }));
        }
        r.put("faces", Value::Array(rows));
    }
    Ok(r)
}

pub fn hypersurface_report(cone: Cone, cli: &Cli) -> Result<Report, CliError> {
    let mut ctx = HypersurfaceContext::new(cone)?;
    let mut r = Report::default();
    r.put("rank", ctx.rank());
    r.put("E(Z)", uv(&ctx.e_affine_top()?));
    r.put("E_int(P)", uv(&ctx.e_int_toric()));
    r.put("E_int(Zbar)", uv(&ctx.e_int_hypersurface()?));
    r.put("E_prim", uv(&ctx.e_prim()?));
    if cli.check {
        let recursion = ctx.verify_recursion()?;
        r.verdict("recursion", recursion);
        let spec = ctx.check_all_specializations()?;
        r.verdict("specialization", spec);
        let recip = ctx.check_reciprocity()?;
        r.verdict("reciprocity", recip);
    }
    if let Some(k) = cli.truncation_check {
        let k = k.unwrap_or(ctx.rank() as u64 + 2);
        let ok = ctx.check_truncation(k)?;
        r.put("truncation_order", k);
        r.verdict("truncation", ok);
    }
    if cli.faces {
        let mut rows = Vec::new();
        for x in 0..ctx.lattice().len() {
            let dim = ctx.lattice().face(x).dim;
            let e = if dim == 0 {
                Value::Null
            } else {
                uv(&ctx.e_affine(x)?)
            };
            rows.push(json!({
                "face": x,
                "dim": dim,
                "S": t(&ctx.s_poly(x)?),
                "T": t(&ctx.t_poly(x)?),
                "E(Z_x)": e,
            }));
        }
        r.put("faces", Value::Array(rows));
    }
    Ok(r)
}

pub fn mirror_report(nef: &NefPartition, cli: &Cli) -> Result<Report, CliError> {
    let report = mirror::verify_mirror_duality(nef)?;
    let mut r = Report::default();
    r.put("index", report.index);
    r.put("dim", report.dim);
    r.put("partition", nef.to_string());
    r.put("dual_partition", report.dual.to_string());
    r.put("E_st(V)", uv(&report.e_st_v));
    r.put("E_st(W)", uv(&report.e_st_w));
    r.put("euler(V)", report.diamond_v.euler().to_string());
    r.put("hodge(V)", diamond(&report.diamond_v));
    r.put("hodge(W)", diamond(&report.diamond_w));
    r.verdict("mirror_duality", report.duality);
    r.verdict("poincare", report.poincare);
    r.verdict("hodge_symmetry", report.hodge_symmetry);
    r.verdict("nonnegative", report.nonnegative);
    r.verdict("v_form", report.v_form);
    if let Some(k) = cli.truncation_check {
        let mut v = CayleyData::new(nef.clone())?;
        let mut w = CayleyData::new(report.dual.clone())?;
        let k = k.unwrap_or(v.rank() as u64 + 2);
        let ok = v.check_truncation(k)? && w.check_truncation(k)?;
        r.put("truncation_order", k);
        r.verdict("truncation", ok);
    }
    if cli.faces {
        let mut v = CayleyData::new(nef.clone())?;
        let mut rows = Vec::new();
        for x in 0..v.lattice().len() {
            rows.push(json!({
                "face": x,
                "dim": v.lattice().face(x).dim,
                "T": t(&v.hypersurface().t_poly(x)?),
                "S(dual)": t(&v.s_dual(x)?),
            }));
        }
        r.put("faces", Value::Array(rows));
    }
    Ok(r)
}

/// Runs one parsed invocation and returns the exit code with what should
/// go to stdout and stderr.
pub fn execute(cli: &Cli) -> (i32, String, String) {
    let result = match &cli.command {
        Command::Cone { path } => load_cone(path).and_then(|c| cone_report(&c, cli)),
        Command::Hypersurface { path } => load_cone(path).and_then(|c| hypersurface_report(c, cli)),
        Command::Mirror { path } => load_nef(path).and_then(|n| mirror_report(&n, cli)),
    };
    match result {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&report.to_json()).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => report.to_text(),
            };
            let code = if report.falsified {
                EXIT_FALSIFIED
            } else {
                EXIT_OK
            };
            (code, out, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
