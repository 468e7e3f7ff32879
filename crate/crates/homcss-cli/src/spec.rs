//! Parsers for the CLI's inputs: complex source specs, voltage files,
//! quadratic form names and generator matrix files.
//!
//! Complex specs:
//!   toric:L          periodic L×L grid torus
//!   circle:N         cycle graph on N ≥ 2 vertices
//!   tetrahedron      boundary of the 3-simplex
//!   torus7           7-vertex torus triangulation
//!   facets:FILE      simplicial closure of a JSON facet list
//!   product(A,B)     tensor product of two specs
//!   dual(A)          Poincaré dual of a spec
//!   file:PATH        chain complex JSON (also any bare path)
//!
//! Builder-backed specs carry covering geometry; file-backed ones do not.

use std::collections::BTreeMap;

use homcss::arith::ZSqrt2Matrix;
use homcss::builders::{
    self, CoverBase, Permutation, PolyhedralComplexData, SimplicialComplexData, SimplicialInput,
    VoltageCover,
};
use homcss::complex::ChainComplex;
use num_bigint::BigInt;
use serde_json::Value;

use crate::report::CliError;

pub enum BuiltComplex {
    Simplicial(SimplicialComplexData),
    Polyhedral(PolyhedralComplexData),
    Plain(ChainComplex),
}

impl BuiltComplex {
    pub fn complex(&self) -> &ChainComplex {
        match self {
            BuiltComplex::Simplicial(s) => &s.complex,
            BuiltComplex::Polyhedral(p) => &p.complex,
            BuiltComplex::Plain(c) => c,
        }
    }

    pub fn into_complex(self) -> ChainComplex {
        match self {
            BuiltComplex::Simplicial(s) => s.complex,
            BuiltComplex::Polyhedral(p) => p.complex,
            BuiltComplex::Plain(c) => c,
        }
    }

    pub fn cover_base(&self) -> Option<CoverBase<'_>> {
        match self {
            BuiltComplex::Simplicial(s) => Some(CoverBase::Simplicial(s)),
            BuiltComplex::Polyhedral(p) => Some(CoverBase::Polyhedral(p)),
            BuiltComplex::Plain(_) => None,
        }
    }
}

pub fn parse_complex(spec: &str) -> Result<BuiltComplex, CliError> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("product(").and_then(|s| s.strip_suffix(')')) {
        let (left, right) = split_top_level(inner)?;
        let l = parse_complex(&left)?;
        let r = parse_complex(&right)?;
        let product = l.complex().tensor_product(r.complex())?;
        return Ok(BuiltComplex::Plain(product));
    }
    if let Some(inner) = spec.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        let base = parse_complex(inner)?;
        let dual = builders::dualize(base.complex())?;
        return Ok(BuiltComplex::Plain(dual.complex));
    }
    if let Some(arg) = spec.strip_prefix("toric:") {
        let l: usize = parse_number(arg, "toric side length")?;
        return Ok(BuiltComplex::Polyhedral(builders::toric_grid(l)?));
    }
    if let Some(arg) = spec.strip_prefix("circle:") {
        let n: usize = parse_number(arg, "circle size")?;
        return Ok(BuiltComplex::Polyhedral(builders::circle(n)?));
    }
    if spec == "tetrahedron" {
        return Ok(BuiltComplex::Simplicial(builders::from_facets(
            &SimplicialInput::new(vec![
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
            ]),
        )));
    }
    if spec == "torus7" {
        return Ok(BuiltComplex::Simplicial(builders::from_facets(
            &SimplicialInput::new(builders::seven_vertex_torus_facets()),
        )));
    }
    if let Some(path) = spec.strip_prefix("facets:") {
        let text = std::fs::read_to_string(path)?;
        let facets: Vec<Vec<usize>> = serde_json::from_str(&text)?;
        return Ok(BuiltComplex::Simplicial(builders::from_facets(
            &SimplicialInput::new(facets),
        )));
    }
    let path = spec.strip_prefix("file:").unwrap_or(spec);
    if std::path::Path::new(path).exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok(BuiltComplex::Plain(ChainComplex::from_json(&text)?));
    }
    Err(CliError::Usage(format!(
        "cannot interpret complex spec {spec:?} (not a known builder and not an existing file)"
    )))
}

fn split_top_level(s: &str) -> Result<(String, String), CliError> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                return Ok((s[..i].to_string(), s[i + 1..].to_string()));
            }
            _ => {}
        }
    }
    Err(CliError::Usage(format!(
        "product spec needs two comma-separated parts, got {s:?}"
    )))
}

fn parse_number(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a number, got {s:?}")))
}

/// Voltage file: JSON object mapping edge indices to permutation arrays;
/// edges not listed carry the identity.
pub fn parse_voltages(path: &str, sheets: usize, edges: usize) -> Result<VoltageCover, CliError> {
    let text = std::fs::read_to_string(path)?;
    let map: BTreeMap<String, Vec<usize>> = serde_json::from_str(&text)?;
    let mut voltages = vec![Permutation::identity(sheets); edges];
    for (key, perm) in map {
        let e: usize = key
            .parse()
            .map_err(|_| CliError::Usage(format!("voltage key {key:?} is not an edge index")))?;
        if e >= edges {
            return Err(CliError::Usage(format!(
                "voltage key {e} out of range: base has {edges} edges"
            )));
        }
        voltages[e] = Permutation::new(perm)?;
    }
    Ok(VoltageCover { sheets, voltages })
}

/// Generator file: JSON array of `{"A": [[..]], "B": [[..]]}` with entries
/// given as JSON integers or decimal strings (strings never lose
/// precision).
pub fn parse_generators(path: &str) -> Result<Vec<ZSqrt2Matrix>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let docs: Vec<Value> = serde_json::from_str(&text)?;
    docs.iter().map(parse_generator).collect()
}

fn parse_generator(doc: &Value) -> Result<ZSqrt2Matrix, CliError> {
    let a = parse_int_matrix(doc.get("A").ok_or_else(|| missing("A"))?)?;
    let b = parse_int_matrix(doc.get("B").ok_or_else(|| missing("B"))?)?;
    Ok(ZSqrt2Matrix::from_parts(&a, &b)?)
}

fn missing(part: &str) -> CliError {
    CliError::Usage(format!("generator entry is missing the {part:?} matrix"))
}

fn parse_int_matrix(v: &Value) -> Result<Vec<Vec<BigInt>>, CliError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CliError::Usage("matrix part must be an array of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CliError::Usage("matrix row must be an array".into()))?
                .iter()
                .map(parse_big_int)
                .collect()
        })
        .collect()
}

fn parse_big_int(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else {
                Err(CliError::Usage(format!(
                    "matrix entry {n} is not an integer (use a decimal string for big values)"
                )))
            }
        }
        Value::String(s) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("matrix entry {s:?} is not a decimal integer"))),
        other => Err(CliError::Usage(format!(
            "matrix entry {other} must be an integer or decimal string"
        ))),
    }
}

/// Emits generators in the same JSON shape `parse_generators` reads, with
/// entries as decimal strings.
pub fn generators_to_json(mats: &[ZSqrt2Matrix]) -> Value {
    let part = |m: &Vec<Vec<BigInt>>| -> Value {
        Value::Array(
            m.iter()
                .map(|row| {
                    Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect())
                })
                .collect(),
        )
    };
    Value::Array(
        mats.iter()
            .map(|m| {
                serde_json::json!({
                    "A": part(&m.a_part()),
                    "B": part(&m.b_part()),
                })
            })
            .collect(),
    )
}

/// Quadratic form names: `sqrt2:D`, `sqrt2-definite:D`, `lorentz:D`
/// (D+1 variables each).
pub fn parse_form(s: &str) -> Result<homcss::arith::QuadraticForm, CliError> {
    let (name, arg) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("form spec {s:?} must look like name:D")))?;
    let d: usize = parse_number(arg, "form dimension")?;
    match name {
        "sqrt2" => Ok(homcss::arith::QuadraticForm::sqrt2_hyperbolic(d)),
        "sqrt2-definite" => Ok(homcss::arith::QuadraticForm::sqrt2_definite(d)),
        "lorentz" => Ok(homcss::arith::QuadraticForm::lorentz(d)),
        other => Err(CliError::Usage(format!(
            "unknown form {other:?}: expected sqrt2, sqrt2-definite or lorentz"
        ))),
    }
}

/// Grid spec `a:b:step` for the bounds commands.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "grid spec {s:?} must look like a:b:step"
        )));
    }
    let a: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::Usage(format!("bad grid start {:?}", parts[0])))?;
    let b: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Usage(format!("bad grid end {:?}", parts[1])))?;
    let step: f64 = parts[2]
        .parse()
        .map_err(|_| CliError::Usage(format!("bad grid step {:?}", parts[2])))?;
    if step <= 0.0 || b < a {
        return Err(CliError::Usage(format!("grid {s:?} is empty or reversed")));
    }
    let mut grid = Vec::new();
    let mut r = a;
    while r <= b + 1e-12 {
        grid.push(r);
        r += step;
    }
    Ok(grid)
}

/// CSV volume profile: `r,V` per line, header line optional.
pub fn parse_profile(path: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.to_lowercase().starts_with("r,")) {
            continue;
        }
        let (r, v) = line.split_once(',').ok_or_else(|| {
            CliError::Usage(format!("profile line {} is not r,V: {line:?}", lineno + 1))
        })?;
        let r: f64 = r.trim().parse().map_err(|_| {
            CliError::Usage(format!("profile line {}: bad radius {r:?}", lineno + 1))
        })?;
        let v: f64 = v.trim().parse().map_err(|_| {
            CliError::Usage(format!("profile line {}: bad volume {v:?}", lineno + 1))
        })?;
        out.push((r, v));
    }
    Ok(out)
}
