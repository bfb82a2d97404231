//! JSON file formats for Lie algebras, representations, circle algebroids
//! and symbol fibers.
//!
//! Rationals are strings (`"p/q"`). Serialization is canonical: brackets in
//! increasing `(i, j)`, components in increasing `k`, zero components
//! omitted, two-space indentation, and a trailing newline. Parsing a
//! canonical document and serializing it again reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::circle::{CircleAlgebroid, TrigPoly};
use crate::error::{Error, Result};
use crate::liealg::{BracketEntry, LieAlgebra, Representation};
use crate::linalg::RationalMatrix;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::symbol::FiberData;

/// Largest Lie algebra dimension accepted from a file.
pub const MAX_ALGEBRA_DIM: usize = 64;
/// Largest representation or fiber dimension accepted from a file.
pub const MAX_FIBER_DIM: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub brackets: Vec<BracketFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFile {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "dim_E")]
    pub dim_e: usize,
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebroidFile {
    Rank1Anchor {
        p: String,
        #[serde(rename = "N_range", default, skip_serializing_if = "Option::is_none")]
        n_range: Option<[usize; 2]>,
    },
    Action {
        g: LieAlgebraFile,
        phi: Vec<String>,
        #[serde(rename = "N_range", default, skip_serializing_if = "Option::is_none")]
        n_range: Option<[usize; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberFile {
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    pub anchor: Vec<Vec<String>>,
    #[serde(rename = "dim_E")]
    pub dim_e: usize,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

/// Prefixes a parse message with the field it came from.
fn prefixed(e: Error, path: String) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{path}: {msg}")),
        other => Error::Parse(format!("{path}: {other}")),
    }
}

fn field_rational(text: &str, path: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).map_err(|e| prefixed(e, path()))
}

fn matrix_from_strings(
    rows: usize,
    cols: usize,
    entries: &[Vec<String>],
    path: &str,
) -> Result<RationalMatrix> {
    if entries.len() != rows {
        return Err(Error::Parse(format!(
            "{path}: expected {rows} rows, got {}",
            entries.len()
        )));
    }
    let mut parsed = Vec::with_capacity(rows);
    for (r, row) in entries.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "{path}[{r}]: expected {cols} entries, got {}",
                row.len()
            )));
        }
        parsed.push(
            row.iter()
                .enumerate()
                .map(|(c, s)| field_rational(s, || format!("{path}[{r}][{c}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    RationalMatrix::from_rows(rows, cols, parsed)
}

fn matrix_to_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

impl LieAlgebraFile {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        if self.dim > MAX_ALGEBRA_DIM {
            return Err(Error::Parse(format!(
                "dim: {} exceeds the limit {MAX_ALGEBRA_DIM}",
                self.dim
            )));
        }
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (b, bracket) in self.brackets.into_iter().enumerate() {
            let coeffs = bracket
                .coeffs
                .iter()
                .enumerate()
                .map(|(c, (k, s))| {
                    Ok((
                        *k,
                        field_rational(s, || format!("brackets[{b}].coeffs[{c}]"))?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(BracketEntry {
                i: bracket.i,
                j: bracket.j,
                coeffs,
            });
        }
        LieAlgebra::new(self.dim, entries, self.name)
            .map_err(|e| Error::Parse(format!("brackets: {e}")))
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        Self {
            name: g.name().map(str::to_owned),
            dim: g.dim(),
            brackets: g
                .entries()
                .into_iter()
                .map(|e| BracketFile {
                    i: e.i,
                    j: e.j,
                    coeffs: e
                        .coeffs
                        .iter()
                        .map(|(k, c)| (*k, format_rational(c)))
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn parse_lie_algebra(text: &str) -> Result<LieAlgebra> {
    from_json::<LieAlgebraFile>(text)?.into_algebra()
}

pub fn lie_algebra_to_json(g: &LieAlgebra) -> String {
    to_json(&LieAlgebraFile::from_algebra(g))
}

/// Representation data not yet attached to an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationData {
    pub name: Option<String>,
    pub dim_e: usize,
    pub action: Vec<RationalMatrix>,
}

impl RepresentationData {
    pub fn bind(self, algebra: LieAlgebra) -> Result<Representation> {
        Representation::new(algebra, self.dim_e, self.action)
    }

    pub fn from_representation(r: &Representation, name: Option<String>) -> Self {
        Self {
            name,
            dim_e: r.dim_e(),
            action: r.action().to_vec(),
        }
    }
}

pub fn parse_representation(text: &str) -> Result<RepresentationData> {
    let file: RepresentationFile = from_json(text)?;
    if file.dim_e > MAX_FIBER_DIM {
        return Err(Error::Parse(format!(
            "dim_E: {} exceeds the limit {MAX_FIBER_DIM}",
            file.dim_e
        )));
    }
    let action = file
        .action
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_strings(file.dim_e, file.dim_e, m, &format!("action[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepresentationData {
        name: file.name,
        dim_e: file.dim_e,
        action,
    })
}

pub fn representation_to_json(r: &RepresentationData) -> String {
    to_json(&RepresentationFile {
        name: r.name.clone(),
        dim_e: r.dim_e,
        action: r.action.iter().map(matrix_to_strings).collect(),
    })
}

/// A circle algebroid with an optional window range for sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebroidSpec {
    pub algebroid: CircleAlgebroid,
    pub n_range: Option<(usize, usize)>,
}

fn parse_trig(text: &str, path: impl FnOnce() -> String) -> Result<TrigPoly> {
    text.parse::<TrigPoly>().map_err(|e| prefixed(e, path()))
}

pub fn parse_algebroid(text: &str) -> Result<AlgebroidSpec> {
    let file: AlgebroidFile = from_json(text)?;
    let (algebroid, range) = match file {
        AlgebroidFile::Rank1Anchor { p, n_range } => (
            CircleAlgebroid::Rank1Anchor {
                p: parse_trig(&p, || "p".into())?,
            },
            n_range,
        ),
        AlgebroidFile::Action { g, phi, n_range } => {
            let g = g.into_algebra().map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("g.{msg}")),
                other => other,
            })?;
            let phi = phi
                .iter()
                .enumerate()
                .map(|(i, s)| parse_trig(s, || format!("phi[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            if phi.len() != g.dim() {
                return Err(Error::Parse(format!(
                    "phi: expected {} vector fields, got {}",
                    g.dim(),
                    phi.len()
                )));
            }
            (CircleAlgebroid::Action { g, phi }, n_range)
        }
    };
    Ok(AlgebroidSpec {
        algebroid,
        n_range: range.map(|[a, b]| (a, b)),
    })
}

pub fn algebroid_to_json(spec: &AlgebroidSpec) -> String {
    let n_range = spec.n_range.map(|(a, b)| [a, b]);
    let file = match &spec.algebroid {
        CircleAlgebroid::Rank1Anchor { p } => AlgebroidFile::Rank1Anchor {
            p: p.to_string(),
            n_range,
        },
        CircleAlgebroid::Action { g, phi } => AlgebroidFile::Action {
            g: LieAlgebraFile::from_algebra(g),
            phi: phi.iter().map(ToString::to_string).collect(),
            n_range,
        },
    };
    to_json(&file)
}

pub fn parse_fiber(text: &str) -> Result<FiberData> {
    let file: FiberFile = from_json(text)?;
    if file.dim_a > MAX_ALGEBRA_DIM || file.dim_m > MAX_ALGEBRA_DIM || file.dim_e > MAX_FIBER_DIM {
        return Err(Error::Parse("fiber dimensions exceed the limits".into()));
    }
    let anchor = matrix_from_strings(file.dim_m, file.dim_a, &file.anchor, "anchor")?;
    FiberData::new(file.dim_a, file.dim_m, anchor, file.dim_e)
}

pub fn fiber_to_json(f: &FiberData) -> String {
    to_json(&FiberFile {
        dim_a: f.dim_a,
        dim_m: f.dim_m,
        anchor: matrix_to_strings(&f.anchor),
        dim_e: f.dim_e,
    })
}

/// Comma-separated rationals, e.g. `1,-1/2,0`.
pub fn parse_covector(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .enumerate()
        .map(|(i, s)| field_rational(s.trim(), || format!("alpha[{i}]")))
        .collect()
}

/// Kind of document, judged by the presence of a `kind` field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    LieAlgebra,
    Algebroid,
}

pub fn sniff(text: &str) -> Result<DocumentKind> {
    let value: serde_json::Value = from_json(text)?;
    Ok(if value.get("kind").is_some() {
        DocumentKind::Algebroid
    } else {
        DocumentKind::LieAlgebra
    })
}
