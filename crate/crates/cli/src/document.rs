//! The JSON document format for systems, data and Okubo triples.
//!
//! Scalars are objects `{"re": "p/q", "im": "p/q"}` with reduced fractions
//! and positive denominators; matrices are lists of rows. Serialization is
//! compact with a fixed key order and a trailing newline, so a canonical
//! document survives a parse/serialize round trip byte for byte.

use std::str::FromStr;

use midconv::datum::{Block, Datum};
use midconv::exactalg::{GaussianRational, Matrix, Rational};
use midconv::functors::OkuboTriple;
use midconv::systems::{PrincipalPart, System};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(String),
}

impl DocumentError {
    pub fn name(&self) -> &'static str {
        match self {
            DocumentError::Parse { .. } => "ParseError",
            DocumentError::Validation(_) => "ValidationError",
        }
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

fn invalid(e: midconv::Error) -> DocumentError {
    DocumentError::Validation(e.to_string())
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|_| format!("invalid rational {s:?}"))
}

/// Parses `RE` or `RE,IM`, each a rational `p` or `p/q`.
pub fn parse_scalar_arg(s: &str) -> Result<GaussianRational, String> {
    match s.split_once(',') {
        Some((re, im)) => Ok(GaussianRational::new(
            parse_rational(re)?,
            parse_rational(im)?,
        )),
        None => Ok(GaussianRational::real(parse_rational(s)?)),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarRepr {
    re: String,
    im: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "ScalarRepr", into = "ScalarRepr")]
pub struct Scalar(pub GaussianRational);

impl TryFrom<ScalarRepr> for Scalar {
    type Error = String;

    fn try_from(r: ScalarRepr) -> Result<Self, String> {
        Ok(Scalar(GaussianRational::new(
            parse_rational(&r.re)?,
            parse_rational(&r.im)?,
        )))
    }
}

impl From<Scalar> for ScalarRepr {
    fn from(s: Scalar) -> Self {
        ScalarRepr {
            re: format_rational(&s.0.re),
            im: format_rational(&s.0.im),
        }
    }
}

pub type Rows = Vec<Vec<Scalar>>;

pub fn rows_of(m: &Matrix) -> Rows {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| Scalar(m.get(i, j).clone())).collect())
        .collect()
}

/// Builds a `rows × cols` matrix, checking the shape of `data`.
fn matrix_of(data: &Rows, rows: usize, cols: usize, what: &str) -> Result<Matrix, DocumentError> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(DocumentError::Validation(format!(
            "{what} must be {rows}x{cols}"
        )));
    }
    Ok(Matrix::from_vec(
        rows,
        cols,
        data.iter().flatten().map(|s| s.0.clone()).collect(),
    ))
}

pub fn scalar_value(x: &GaussianRational) -> Value {
    serde_json::to_value(Scalar(x.clone())).expect("scalars serialize")
}

pub fn matrix_value(m: &Matrix) -> Value {
    serde_json::to_value(rows_of(m)).expect("matrices serialize")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPart {
    point: Scalar,
    coefficients: Vec<Rows>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExponent {
    point: Scalar,
    order: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeclarations {
    exponents: Vec<RawExponent>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    dimension: usize,
    constant: Rows,
    parts: Vec<RawPart>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    declarations: Option<RawDeclarations>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<RawMetadata>,
}

/// A system together with its optional display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemDocument {
    pub system: System,
    pub name: Option<String>,
}

impl SystemDocument {
    pub fn new(system: System) -> Self {
        Self { system, name: None }
    }
}

fn raw_system(doc: &SystemDocument) -> RawSystem {
    let s = &doc.system;
    RawSystem {
        dimension: s.dimension,
        constant: rows_of(&s.constant),
        parts: s
            .parts
            .iter()
            .map(|p| RawPart {
                point: Scalar(p.point.clone()),
                coefficients: p.coefficients.iter().map(rows_of).collect(),
            })
            .collect(),
        declarations: s.exponents.as_ref().map(|e| RawDeclarations {
            exponents: e
                .iter()
                .map(|(t, l)| RawExponent {
                    point: Scalar(t.clone()),
                    order: *l,
                })
                .collect(),
        }),
        metadata: doc.name.as_ref().map(|n| RawMetadata {
            name: Some(n.clone()),
        }),
    }
}

fn system_from_raw(raw: RawSystem) -> Result<SystemDocument, DocumentError> {
    let n = raw.dimension;
    let constant = matrix_of(&raw.constant, n, n, "constant")?;
    let parts = raw
        .parts
        .iter()
        .map(|p| {
            let what = format!("coefficient at {}", p.point.0);
            let coefficients = p
                .coefficients
                .iter()
                .map(|c| matrix_of(c, n, n, &what))
                .collect::<Result<Vec<_>, _>>()?;
            PrincipalPart::new(p.point.0.clone(), coefficients).map_err(invalid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut system = System::new(n, constant, parts).map_err(invalid)?;
    if let Some(d) = raw.declarations {
        system = system
            .with_exponents(
                d.exponents
                    .into_iter()
                    .map(|e| (e.point.0, e.order))
                    .collect(),
            )
            .map_err(invalid)?;
    }
    Ok(SystemDocument {
        system,
        name: raw.metadata.and_then(|m| m.name),
    })
}

pub fn parse_document(text: &str) -> Result<SystemDocument, DocumentError> {
    system_from_raw(serde_json::from_str(text)?)
}

pub fn serialize_document(doc: &SystemDocument) -> String {
    to_line(&raw_system(doc))
}

pub fn system_value(s: &System) -> Value {
    serde_json::to_value(raw_system(&SystemDocument::new(s.clone()))).expect("systems serialize")
}

pub fn to_line<T: Serialize>(v: &T) -> String {
    let mut out = serde_json::to_string(v).expect("documents serialize");
    out.push('\n');
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    point: Scalar,
    nilpotent: Rows,
    q: Rows,
    p: Rows,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    dimension: usize,
    blocks: Vec<RawBlock>,
}

pub fn datum_value(d: &Datum) -> Value {
    let raw = RawDatum {
        dimension: d.dim_v,
        blocks: d
            .blocks
            .iter()
            .map(|b| RawBlock {
                point: Scalar(b.point.clone()),
                nilpotent: rows_of(&b.nilpotent),
                q: rows_of(&b.q),
                p: rows_of(&b.p),
            })
            .collect(),
    };
    serde_json::to_value(raw).expect("data serialize")
}

pub fn parse_datum(text: &str) -> Result<Datum, DocumentError> {
    let raw: RawDatum = serde_json::from_str(text)?;
    let n = raw.dimension;
    let blocks = raw
        .blocks
        .iter()
        .map(|b| {
            let w = b.nilpotent.len();
            let nil = matrix_of(&b.nilpotent, w, w, "nilpotent")?;
            let q = matrix_of(&b.q, n, w, "q")?;
            let p = matrix_of(&b.p, w, n, "p")?;
            Block::new(b.point.0.clone(), nil, q, p).map_err(invalid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Datum::new(n, blocks).map_err(invalid)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOkubo {
    dimension: usize,
    t: Rows,
    r: Rows,
}

pub fn parse_okubo(text: &str) -> Result<OkuboTriple, DocumentError> {
    let raw: RawOkubo = serde_json::from_str(text)?;
    let w = raw.dimension;
    let t = matrix_of(&raw.t, w, w, "t")?;
    let r = matrix_of(&raw.r, w, w, "r")?;
    OkuboTriple::new(t, r).map_err(invalid)
}

/// What a file holds, judged by its top-level keys.
pub enum AnyDocument {
    System(SystemDocument),
    Datum(Datum),
}

pub fn parse_any(text: &str) -> Result<AnyDocument, DocumentError> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("blocks").is_some() {
        parse_datum(text).map(AnyDocument::Datum)
    } else {
        parse_document(text).map(AnyDocument::System)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-3").unwrap()), "-3/1");
        assert_eq!(format_rational(&parse_rational("2/-4").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn scalar_arguments() {
        assert_eq!(
            parse_scalar_arg("1/2,-3").unwrap(),
            GaussianRational::new(
                parse_rational("1/2").unwrap(),
                parse_rational("-3").unwrap()
            )
        );
        assert!(parse_scalar_arg("x").is_err());
    }

    #[test]
    fn parse_error_has_position() {
        let err = parse_document("{\n  \"dimension\": 1,\n  \"constant\": [[{\"re\": \"a\", \"im\": \"0/1\"}]], \"parts\": []}").unwrap_err();
        match err {
            DocumentError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
