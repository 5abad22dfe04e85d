//! Ensemble weight vectors `w_1 ≥ w_2 ≥ … ≥ 0`, `Σ w_j = 1`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, q, to_f64, Q};
use crate::spectrum::majorizes;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Q>,
}

/// Outcome of [`WeightVector::normalizing`].
#[derive(Debug, Clone)]
pub struct NormalizedWeights {
    pub weights: WeightVector,
    /// Sum of the raw entries before rescaling.
    pub raw_sum: Q,
}

impl NormalizedWeights {
    /// `|Σ w - 1|` beyond `1e-9`: worth a warning.
    pub fn was_rescaled_noticeably(&self) -> bool {
        (to_f64(&self.raw_sum) - 1.0).abs() > 1e-9
    }
}

impl WeightVector {
    /// Trailing zeros are dropped; `r` is the remaining length.
    pub fn new(weights: Vec<Q>) -> Result<Self> {
        let mut weights = weights;
        while weights.last().is_some_and(Zero::is_zero) {
            weights.pop();
        }
        if weights.is_empty() {
            return Err(Error::Domain("weight vector has no nonzero entry".into()));
        }
        if weights.iter().any(Signed::is_negative) {
            return Err(Error::Domain("weights must be nonnegative".into()));
        }
        if weights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "weights must be decreasing: {}",
                show(&weights)
            )));
        }
        let sum: Q = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::Normalization(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self { weights })
    }

    /// Rescales decreasing nonnegative entries to unit sum.
    pub fn normalizing(raw: Vec<Q>) -> Result<NormalizedWeights> {
        let raw_sum: Q = raw.iter().sum();
        if !raw_sum.is_positive() {
            return Err(Error::Normalization("weights must have a positive sum".into()));
        }
        let scaled = raw.iter().map(|w| w / &raw_sum).collect();
        Ok(NormalizedWeights {
            weights: Self::new(scaled)?,
            raw_sum,
        })
    }

    /// Comma-separated rationals or decimals, e.g. `"1/2,1/3,1/6"`.
    pub fn parse(text: &str) -> Result<NormalizedWeights> {
        let raw = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::normalizing(raw)
    }

    /// `w_j ∝ 2^{r-j}`: strictly decreasing with exact binary fractions.
    pub fn dyadic(rank: usize) -> Self {
        assert!(rank >= 1);
        let raw: Vec<Q> = (0..rank).map(|j| q(1i64 << (rank - 1 - j))).collect();
        let sum: Q = raw.iter().sum();
        Self {
            weights: raw.into_iter().map(|w| w / &sum).collect(),
        }
    }

    /// Nonzero entries `w_1, …, w_r`.
    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    /// Number of nonzero weights.
    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// First `len` entries, zero-padded.
    pub fn padded(&self, len: usize) -> Vec<Q> {
        let mut out = self.weights.clone();
        out.resize(len.max(out.len()), Q::zero());
        out
    }

    /// Strictly decreasing nonzero entries.
    pub fn is_generic(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] > w[1])
    }

    /// `self ≺ other`.
    pub fn is_majorized_by(&self, other: &WeightVector) -> bool {
        let len = self.rank().max(other.rank());
        majorizes(&other.padded(len), &self.padded(len)).expect("both sum to one")
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.weights.iter().map(to_f64).collect()
    }
}

fn show(values: &[Q]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show(&self.weights))
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        strings.serialize(s)
    }
}
