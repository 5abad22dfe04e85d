//! Candidate natural occupation numbers and vector majorization.

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{q, rationalize, to_f64, Q, DEFAULT_DENOMINATOR_BOUND};

/// Absolute tolerance on `Σ λ_i = N` for float inputs.
pub const FLOAT_SUM_TOLERANCE: f64 = 1e-9;

/// Nonnegative occupation numbers with an exact total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Q>,
    total: Q,
}

impl Spectrum {
    pub fn new(values: Vec<Q>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Dimension("empty spectrum".into()));
        }
        if values.iter().any(Signed::is_negative) {
            return Err(Error::Domain("occupation numbers must be nonnegative".into()));
        }
        let total = values.iter().sum();
        Ok(Self { values, total })
    }

    /// Exact spectrum that must sum to `total`.
    pub fn with_total(values: Vec<Q>, total: &Q) -> Result<Self> {
        let s = Self::new(values)?;
        if &s.total != total {
            return Err(Error::Normalization(format!(
                "entries sum to {}, expected {total}",
                s.total
            )));
        }
        Ok(s)
    }

    /// Rationalizes float entries (denominators ≤ `denominator_bound`).
    /// The sum must be within [`FLOAT_SUM_TOLERANCE`] of `total`; the
    /// rounding residual is absorbed by the largest entry so the result sums
    /// to `total` exactly.
    pub fn from_f64(values: &[f64], total: usize, denominator_bound: u64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Dimension("empty spectrum".into()));
        }
        let sum: f64 = values.iter().sum();
        if (sum - total as f64).abs() > FLOAT_SUM_TOLERANCE {
            return Err(Error::Normalization(format!(
                "entries sum to {sum}, expected {total}"
            )));
        }
        if values.iter().any(|&v| v < -FLOAT_SUM_TOLERANCE) {
            return Err(Error::Domain("occupation numbers must be nonnegative".into()));
        }
        let mut exact = values
            .iter()
            .map(|&v| rationalize(v.max(0.0), denominator_bound))
            .collect::<Result<Vec<_>>>()?;
        let target = q(total as i64);
        let residual = &target - exact.iter().sum::<Q>();
        if !residual.is_zero() {
            let largest = (0..exact.len())
                .max_by(|&a, &b| exact[a].cmp(&exact[b]).then(b.cmp(&a)))
                .expect("nonempty");
            exact[largest] += residual;
        }
        Self::with_total(exact, &target)
    }

    pub fn from_f64_default(values: &[f64], total: usize) -> Result<Self> {
        Self::from_f64(values, total, DEFAULT_DENOMINATOR_BOUND)
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn total(&self) -> &Q {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ^↓`, stable.
    pub fn sorted_decreasing(&self) -> Vec<Q> {
        sorted_decreasing(&self.values)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(to_f64).collect()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        strings.serialize(s)
    }
}

pub fn sorted_decreasing(values: &[Q]) -> Vec<Q> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// `S_k(x^↓)` for `k = 1..=len`.
pub fn partial_sums(sorted: &[Q]) -> Vec<Q> {
    let mut acc = Q::zero();
    sorted
        .iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// `b ≺ a`: every partial sum of `b^↓` is bounded by the one of `a^↓`,
/// with equal totals.
pub fn majorizes(a: &[Q], b: &[Q]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "majorization needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let sa = partial_sums(&sorted_decreasing(a));
    let sb = partial_sums(&sorted_decreasing(b));
    if sa.last() != sb.last() {
        return Err(Error::Normalization("majorization needs equal sums".into()));
    }
    Ok(sb.iter().zip(&sa).all(|(x, y)| x <= y))
}

/// Float version of [`majorizes`]; partial sums may exceed by `tol`.
pub fn majorizes_f64(a: &[f64], b: &[f64], tol: f64) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Dimension("majorization needs equal lengths".into()));
    }
    let sort = |x: &[f64]| {
        let mut v = x.to_vec();
        v.sort_by(|p, q| q.total_cmp(p));
        v
    };
    let (sa, sb) = (sort(a), sort(b));
    let (mut pa, mut pb) = (0.0, 0.0);
    for (x, y) in sa.iter().zip(&sb) {
        pa += x;
        pb += y;
        if pb > pa + tol {
            return Ok(false);
        }
    }
    if (pa - pb).abs() > tol {
        return Err(Error::Normalization(format!("sums differ: {pa} vs {pb}")));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&v(&[2, 0, 0]), &v(&[1, 1, 0])).unwrap());
        assert!(!majorizes(&v(&[1, 1, 0]), &v(&[2, 0, 0])).unwrap());
        assert!(majorizes(&v(&[1, 1, 0]), &v(&[0, 1, 1])).unwrap());
        assert!(matches!(
            majorizes(&v(&[2, 0]), &v(&[1, 0])),
            Err(Error::Normalization(_))
        ));
        assert!(matches!(
            majorizes(&v(&[2, 0]), &v(&[1, 1, 0])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn float_spectra_are_rationalized_to_exact_total() {
        let s = Spectrum::from_f64(&[1.7, 0.3, 0.0], 2, 1_000_000).unwrap();
        assert_eq!(s.values(), &[frac(17, 10), frac(3, 10), q(0)]);
        let s = Spectrum::from_f64(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0 + 1e-12], 1, 1000).unwrap();
        assert_eq!(s.total(), &q(1));
        assert!(Spectrum::from_f64(&[1.0, 0.5], 2, 1000).is_err());
        assert!(Spectrum::from_f64(&[2.1, -0.1], 2, 1000).is_err());
    }

    #[test]
    fn exact_spectrum_validation() {
        assert!(Spectrum::with_total(v(&[1, 1]), &q(2)).is_ok());
        assert!(Spectrum::with_total(v(&[1, 2]), &q(2)).is_err());
        assert!(Spectrum::new(v(&[-1, 3])).is_err());
        assert!(Spectrum::new(vec![]).is_err());
    }

    proptest! {
        #[test]
        fn majorization_is_reflexive_and_permutation_blind(
            xs in prop::collection::vec(0i64..20, 1..6),
            rot in 0usize..6,
        ) {
            let a = v(&xs);
            prop_assert!(majorizes(&a, &a).unwrap());
            let mut b = a.clone();
            let k = rot % b.len();
            b.rotate_left(k);
            prop_assert!(majorizes(&a, &b).unwrap());
            prop_assert!(majorizes(&b, &a).unwrap());
        }

        #[test]
        fn uniform_vector_is_majorized_by_everything(
            xs in prop::collection::vec(0i64..20, 1..6),
        ) {
            let a = v(&xs);
            let total: Q = a.iter().sum();
            let uniform = vec![total / q(a.len() as i64); a.len()];
            prop_assert!(majorizes(&a, &uniform).unwrap());
        }
    }
}
