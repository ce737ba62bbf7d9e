//! `count`, `expand`, `eval` and `verify`.

use std::fmt;
use std::path::Path;

use hyperinv_core::calculus::{
    ch_residual_rank2, ch_residual_rank4_with, char_poly, contract_leading, identity_defect,
    inverse_even_rank, inverse_rank2,
};
use hyperinv_core::combinatorics::{enumerate_classes_with, enumerate_semimagic_with, hn_formula};
use hyperinv_core::engine::{build_expansion_with, discriminant_oracle_with, discriminant_with};
use hyperinv_core::special::{cayley_hyperdet, thirdrank_inverse_d2};
use hyperinv_core::suite::{self, published, Mode};
use hyperinv_core::{make_unit_delta, Error, HyperMatrix, Limits, Variance};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::document::{ExpansionDocument, TensorDocument};

/// Failure classes, each with its own exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Input(String),
    Cap(String),
    Domain(String),
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Cap(m) => write!(f, "resource cap: {m}"),
            CliError::Domain(m) => write!(f, "domain error: {m}"),
            CliError::CheckFailed(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            Error::Singular(_) => CliError::Domain(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Serialize)]
struct CountReport {
    n: usize,
    r: u32,
    squares: usize,
    formula: Option<String>,
    classes: usize,
    notes: Vec<String>,
}

fn printed_counts(n: usize, r: u32) -> (Option<u64>, Option<usize>) {
    let classes = |table: &[&[u32]]| {
        if n == 1 {
            1
        } else {
            table.iter().filter(|c| c.len() == n * n).count()
        }
    };
    match (r, n) {
        (2, 1..=4) => (
            Some(published::H_LINE_SUM_2[n - 1]),
            Some(classes(published::RANK2_CLASSES)),
        ),
        (4, 1..=4) => (
            Some(published::H_LINE_SUM_4_TEXT[n - 1]),
            Some(classes(published::RANK4_CLASSES)),
        ),
        _ => (None, None),
    }
}

pub fn cmd_count(n: usize, r: u32, format: OutputFormat, limits: &Limits) -> CliResult<String> {
    if n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    let squares = enumerate_semimagic_with(n, r, limits)?.len();
    let formula = if n <= 4 {
        Some(hn_formula(n, r)?.to_string())
    } else {
        None
    };
    let classes = enumerate_classes_with(n, r, limits)?.len();
    let mut notes = Vec::new();
    if let Some(f) = &formula {
        if *f != squares.to_string() {
            notes.push(format!("formula {f} disagrees with enumeration {squares}"));
        }
    }
    let (printed_squares, printed_classes) = printed_counts(n, r);
    if let Some(p) = printed_squares.filter(|&p| p != squares as u64) {
        notes.push(format!(
            "printed value {p} differs from the enumerated count {squares}"
        ));
    }
    if let Some(p) = printed_classes.filter(|&p| p != classes) {
        notes.push(format!(
            "printed class list has {p} classes; orbit enumeration finds {classes}"
        ));
    }
    let report = CountReport {
        n,
        r,
        squares,
        formula,
        classes,
        notes,
    };
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Input(e.to_string()))
        }
        _ => {
            let mut out = format!("order {n}, line sum {r}\nsquares: {squares}\n");
            if let Some(f) = &report.formula {
                out.push_str(&format!("formula: {f}\n"));
            }
            out.push_str(&format!("classes: {classes}\n"));
            for note in &report.notes {
                out.push_str(&format!("note: {note}\n"));
            }
            Ok(out.trim_end().to_string())
        }
    }
}

pub fn cmd_expand(
    rank: usize,
    order: usize,
    format: OutputFormat,
    limits: &Limits,
) -> CliResult<String> {
    let exp = build_expansion_with(rank, order, limits)?;
    let doc = ExpansionDocument::from_expansion(&exp);
    match format {
        OutputFormat::Latex => Ok(doc.to_latex().trim_end().to_string()),
        _ => serde_json::to_string_pretty(&doc).map_err(|e| CliError::Input(e.to_string())),
    }
}

/// Requested quantities for `eval`.
#[derive(Debug, Clone, Default)]
pub struct EvalRequest {
    pub order_s: Option<usize>,
    pub oracle: bool,
    pub det: bool,
    pub inverse: bool,
    pub charpoly: bool,
    pub ch_check: bool,
    pub hyperdet222: bool,
}

fn num(x: f64) -> CliResult<Box<RawValue>> {
    if !x.is_finite() {
        return Err(CliError::Domain(format!("result {x} is not finite")));
    }
    RawValue::from_string(format!("{x:.16e}")).map_err(|e| CliError::Input(e.to_string()))
}

fn raw(v: &impl Serialize) -> CliResult<Box<RawValue>> {
    serde_json::value::to_raw_value(v).map_err(|e| CliError::Input(e.to_string()))
}

fn transpose2(a: &HyperMatrix) -> CliResult<HyperMatrix> {
    Ok(HyperMatrix::from_fn(
        2,
        a.dim(),
        Variance::Covariant,
        |ix| a.get(&[ix[1], ix[0]]),
    )?)
}

pub fn read_tensor(path: &Path) -> CliResult<HyperMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc = TensorDocument::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.to_tensor()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Returns the JSON result and whether every requested check passed.
pub fn cmd_eval(a: &HyperMatrix, req: &EvalRequest, limits: &Limits) -> CliResult<(String, bool)> {
    let mut fields: Vec<(&str, Box<RawValue>)> =
        vec![("rank", raw(&a.rank())?), ("dim", raw(&a.dim())?)];
    let mut passed = true;
    let (r, d) = (a.rank(), a.dim());
    let nothing =
        !(req.oracle || req.det || req.inverse || req.charpoly || req.ch_check || req.hyperdet222)
            && req.order_s.is_none();

    if nothing {
        let values: Vec<Box<RawValue>> = (1..=d.min(4))
            .map(|s| num(discriminant_with(a, s, limits)?))
            .collect::<CliResult<_>>()?;
        fields.push(("discriminants", raw(&values)?));
    }
    if let Some(s) = req.order_s {
        fields.push(("order", raw(&s)?));
        fields.push(("discriminant", num(discriminant_with(a, s, limits)?)?));
    }
    if req.oracle {
        let s = req
            .order_s
            .ok_or_else(|| CliError::Input("--oracle needs --order-s".into()))?;
        let delta = make_unit_delta(r, d)?;
        fields.push((
            "oracle",
            num(discriminant_oracle_with(a, &delta, s, limits)?)?,
        ));
    }
    if req.det {
        fields.push(("determinant", num(discriminant_with(a, d, limits)?)?));
    }
    if req.inverse {
        let inv = match (r, d) {
            (2, _) => inverse_rank2(a)?,
            (3, 2) => thirdrank_inverse_d2(a)?,
            _ if r % 2 == 0 => inverse_even_rank(a)?,
            _ => {
                return Err(CliError::Domain(format!(
                    "no inverse is defined for rank {r}, dim {d}"
                )))
            }
        };
        let lower = if r == 2 { transpose2(a)? } else { a.clone() };
        let defect = identity_defect(&contract_leading(
            &inv.clone().with_variance(Variance::Covariant),
            &lower.with_variance(Variance::Covariant),
        )?);
        fields.push(("inverse", raw(&TensorDocument::from_tensor(&inv))?));
        fields.push(("inverse_defect", num(defect)?));
    }
    if req.charpoly {
        if r != 2 {
            return Err(CliError::Input("--charpoly needs a rank-2 tensor".into()));
        }
        let p = char_poly(a)?;
        let cs: Vec<Box<RawValue>> = p
            .coefficients()
            .iter()
            .map(|&c| num(c))
            .collect::<CliResult<_>>()?;
        fields.push(("char_poly", raw(&cs)?));
    }
    if req.ch_check {
        let (residual, tol) = match r {
            2 => (ch_residual_rank2(a)?, 1e-9),
            4 => (ch_residual_rank4_with(a, limits)?, 1e-8),
            _ => return Err(CliError::Input("--ch-check needs rank 2 or 4".into())),
        };
        let worst = residual.data().iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let bound = tol * a.scale().powi(d as i32).max(f64::MIN_POSITIVE);
        let ok = worst <= bound;
        passed &= ok;
        fields.push(("ch_residual", num(worst)?));
        fields.push(("ch_tolerance", num(bound)?));
        fields.push(("ch_pass", raw(&ok)?));
    }
    if req.hyperdet222 {
        fields.push(("hyperdeterminant", num(cayley_hyperdet(a)?)?));
    }
    let text = serde_json::to_string_pretty(&Fields(fields))
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok((text, passed))
}

/// Ordered JSON object whose values are already serialized.
struct Fields<'a>(Vec<(&'a str, Box<RawValue>)>);

impl Serialize for Fields<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Report text and overall pass flag.
pub fn cmd_verify(seed: u64, mode: Mode) -> (String, bool) {
    let report = suite::run(seed, mode);
    (report.render().trim_end().to_string(), report.passed())
}
