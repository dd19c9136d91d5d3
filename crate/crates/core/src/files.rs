//! On-disk JSON formats for weights and orders. Rationals are strings
//! (`"p/q"`) or plain integers; label indices are JSON object keys.
//!
//! ```json
//! {"central_charge": "0",
//!  "finite_labels": {"1": "1/2"},
//!  "recurrent": {"char_poly": ["-2", "1"], "initial": {"0": "1"}}}
//! ```
//!
//! ```json
//! {"rank": 2, "order": {"kind": "embedding", "d": 2, "weights": [["1", "0"], ["0", "1"]]}}
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{GammaGroup, OrderSpec};
use crate::scalar::{parse_rational, rational_str};
use crate::verma::{Recurrence, Weight};

fn zero() -> BigRational {
    BigRational::zero()
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightFile {
    #[serde(with = "rational_str", default = "zero")]
    pub central_charge: BigRational,
    #[serde(with = "rational_str::index_map", default)]
    pub finite_labels: BTreeMap<i64, BigRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recurrent: Option<RecurrentFile>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurrentFile {
    /// Ascending coefficients `ρ_0, ..., ρ_d`.
    #[serde(with = "rational_str::vec")]
    pub char_poly: Vec<BigRational>,
    #[serde(with = "rational_str::index_map")]
    pub initial: BTreeMap<i64, BigRational>,
}

impl WeightFile {
    pub fn to_weight(&self) -> Result<Weight<BigRational>> {
        let recurrent = self
            .recurrent
            .as_ref()
            .map(|r| Recurrence::new(r.char_poly.clone(), r.initial.clone()))
            .transpose()?;
        Ok(Weight::new(self.central_charge.clone(), self.finite_labels.clone(), recurrent))
    }
}

impl From<&Weight<BigRational>> for WeightFile {
    fn from(w: &Weight<BigRational>) -> Self {
        Self {
            central_charge: w.central_charge().clone(),
            finite_labels: w.finite_labels().clone(),
            recurrent: w
                .recurrent()
                .map(|r| RecurrentFile { char_poly: r.char_poly().to_vec(), initial: r.initial() }),
        }
    }
}

pub fn parse_weight(json: &str) -> Result<Weight<BigRational>> {
    let file: WeightFile = serde_json::from_str(json).map_err(|e| Error::Parse(format!("weight file: {e}")))?;
    file.to_weight()
}

pub fn weight_to_json(w: &Weight<BigRational>) -> String {
    serde_json::to_string_pretty(&WeightFile::from(w)).expect("weight files always serialize")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub rank: usize,
    pub order: OrderBody,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum OrderBody {
    /// `axes` is a permutation of `1..=rank`, most significant first; `signs[k]` applies to coordinate `k+1`.
    Lex {
        #[serde(default)]
        axes: Option<Vec<usize>>,
        #[serde(default)]
        signs: Option<Vec<i8>>,
    },
    /// Each weight is `[rational part, coefficient of √d]`.
    Embedding { d: u64, weights: Vec<(String, String)> },
}

impl OrderFile {
    pub fn to_order(&self) -> Result<(OrderSpec, GammaGroup)> {
        let g = GammaGroup::new(self.rank)?;
        let spec = match &self.order {
            OrderBody::Lex { axes, signs } => {
                let axes = match axes {
                    Some(a) => a
                        .iter()
                        .map(|&k| {
                            k.checked_sub(1)
                                .ok_or_else(|| Error::InvalidOrder("axes are numbered from 1".into()))
                        })
                        .collect::<Result<Vec<_>>>()?,
                    None => (0..self.rank).collect(),
                };
                OrderSpec::lex(axes, signs.clone().unwrap_or_else(|| vec![1; self.rank]))?
            }
            OrderBody::Embedding { d, weights } => {
                let w = weights
                    .iter()
                    .map(|(p, q)| Ok((parse_rational(p)?, parse_rational(q)?)))
                    .collect::<Result<Vec<_>>>()?;
                OrderSpec::embedding(*d, w)?
            }
        };
        if spec.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: spec.rank() });
        }
        Ok((spec, g))
    }
}

pub fn parse_order(json: &str) -> Result<(OrderSpec, GammaGroup)> {
    let file: OrderFile = serde_json::from_str(json).map_err(|e| Error::Parse(format!("order file: {e}")))?;
    file.to_order()
}
