//! JSON interchange formats for tensors and expansions.

use hyperinv_core::engine::{orbit_size, InvariantExpansion};
use hyperinv_core::{HyperMatrix, Variance};
use serde::ser::{Error as _, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub rank: usize,
    pub dim: usize,
    pub layout: String,
    pub variance: String,
    #[serde(serialize_with = "seventeen_digits")]
    pub data: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
}

fn seventeen_digits<S: Serializer>(data: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(data.len()))?;
    for x in data {
        if !x.is_finite() {
            return Err(S::Error::custom(format!("non-finite entry {x}")));
        }
        let raw = RawValue::from_string(format!("{x:.16e}")).map_err(S::Error::custom)?;
        seq.serialize_element(&raw)?;
    }
    seq.end()
}

impl TensorDocument {
    pub fn from_tensor(t: &HyperMatrix) -> Self {
        TensorDocument {
            rank: t.rank(),
            dim: t.dim(),
            layout: "row-major".into(),
            variance: t.variance().name().into(),
            data: t.data().to_vec(),
            symmetric: None,
        }
    }

    /// Validates every field; messages name the offending field.
    pub fn to_tensor(&self) -> Result<HyperMatrix, String> {
        if self.layout != "row-major" {
            return Err(format!(
                "field `layout`: expected \"row-major\", got {:?}",
                self.layout
            ));
        }
        let variance = match self.variance.as_str() {
            "covariant" => Variance::Covariant,
            "contravariant" => Variance::Contravariant,
            other => {
                return Err(format!(
                    "field `variance`: expected \"covariant\" or \"contravariant\", got {other:?}"
                ))
            }
        };
        if self.rank == 0 || self.dim == 0 {
            return Err("fields `rank` and `dim` must be positive".into());
        }
        let expected = (self.dim as u128).checked_pow(self.rank as u32);
        if expected != Some(self.data.len() as u128) {
            return Err(format!(
                "field `data`: expected dim^rank = {}^{} entries, got {}",
                self.dim,
                self.rank,
                self.data.len()
            ));
        }
        if let Some(k) = self.data.iter().position(|x| !x.is_finite()) {
            return Err(format!("field `data`: entry {k} is not finite"));
        }
        let t = HyperMatrix::new(self.rank, self.dim, variance, self.data.clone())
            .map_err(|e| e.to_string())?;
        if self.symmetric == Some(true) && !t.is_symmetric(1e-12) {
            return Err(format!(
                "field `symmetric`: tensor deviates from symmetry by {:e}",
                t.symmetry_deviation()
            ));
        }
        Ok(t)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn emit(&self) -> Result<String, String> {
        serde_json::to_string_pretty(self).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub square: Vec<Vec<u32>>,
    pub coefficient: i64,
    pub class_size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDocument {
    pub rank: usize,
    pub order: usize,
    pub prefactor_denominator: u64,
    pub terms: Vec<ExpansionTerm>,
}

impl ExpansionDocument {
    /// Nonzero terms only, in canonical order.
    pub fn from_expansion(exp: &InvariantExpansion) -> Self {
        ExpansionDocument {
            rank: exp.rank,
            order: exp.order,
            prefactor_denominator: exp.prefactor_denominator,
            terms: exp
                .nonzero_terms()
                .map(|(sq, c)| ExpansionTerm {
                    square: sq.rows(),
                    coefficient: c,
                    class_size: orbit_size(sq),
                })
                .collect(),
        }
    }

    /// Matrix-table form: `C_n = {1\over n!}\,\left[c\,\left(\matrix{…}\right) …\right]`.
    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "C_{}({{\\bf A}})&=&{{1\\over{}}}\\,\\left[",
            self.order, self.prefactor_denominator
        );
        for (k, t) in self.terms.iter().enumerate() {
            let body: Vec<String> = t
                .square
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    format!("{}\\cr", cells.join("&"))
                })
                .collect();
            let magnitude = t.coefficient.unsigned_abs();
            let sign = match (k, t.coefficient < 0) {
                (0, false) => "",
                (_, false) => "+",
                (_, true) => "-",
            };
            let factor = if magnitude == 1 {
                String::new()
            } else {
                format!("{magnitude}\\,")
            };
            out.push_str(&format!(
                "{sign}{factor}\\left(\\matrix{{{}}}\\right)",
                body.join("")
            ));
            if k + 1 < self.terms.len() && (k + 1) % 4 == 0 {
                out.push_str("\\nonumber\\\\\n&&\\quad");
            }
        }
        out.push_str("\\right]\n");
        out
    }
}
