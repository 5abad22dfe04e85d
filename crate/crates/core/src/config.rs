//! Bosonic configurations `1 ≤ i_1 ≤ … ≤ i_N ≤ d`, their occupation
//! vectors, and the componentwise dominance order on them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Result of comparing two configurations in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PosetOrdering {
    Equal,
    LessOrEqual,
    GreaterOrEqual,
    Incomparable,
}

/// Nondecreasing tuple of 1-based orbital indices, carrying its orbital count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    indices: Vec<u32>,
    orbitals: u32,
}

impl Configuration {
    pub fn new(indices: Vec<u32>, orbitals: u32) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Domain("a configuration needs at least one particle".into()));
        }
        if indices.iter().any(|&i| i == 0 || i > orbitals) {
            return Err(Error::Domain(format!(
                "orbital index out of range 1..={orbitals}: {indices:?}"
            )));
        }
        if indices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!("indices not nondecreasing: {indices:?}")));
        }
        Ok(Self { indices, orbitals })
    }

    /// `(1, 1, …, 1)`, the unique minimum of the order.
    pub fn ground(particles: usize, orbitals: u32) -> Result<Self> {
        if orbitals == 0 {
            return Err(Error::Domain("need at least one orbital".into()));
        }
        Self::new(vec![1; particles], orbitals)
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn particle_count(&self) -> usize {
        self.indices.len()
    }

    pub fn orbital_count(&self) -> u32 {
        self.orbitals
    }

    pub fn occupation_vector(&self) -> OccupationVector {
        let mut counts = vec![0u32; self.orbitals as usize];
        for &i in &self.indices {
            counts[i as usize - 1] += 1;
        }
        OccupationVector { counts }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.orbitals != other.orbitals || self.indices.len() != other.indices.len() {
            return Err(Error::Dimension(format!(
                "(N, d) = ({}, {}) vs ({}, {})",
                self.indices.len(),
                self.orbitals,
                other.indices.len(),
                other.orbitals
            )));
        }
        Ok(())
    }

    /// Componentwise comparison `i_k ≤ j_k`.
    pub fn compare(&self, other: &Self) -> Result<PosetOrdering> {
        self.check_compatible(other)?;
        let mut le = true;
        let mut ge = true;
        for (a, b) in self.indices.iter().zip(&other.indices) {
            match a.cmp(b) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (le, ge) {
            (true, true) => PosetOrdering::Equal,
            (true, false) => PosetOrdering::LessOrEqual,
            (false, true) => PosetOrdering::GreaterOrEqual,
            (false, false) => PosetOrdering::Incomparable,
        })
    }

    /// Configurations covered by `self`: one index lowered by one.
    pub fn lower_covers(&self) -> Vec<Configuration> {
        let mut out = Vec::new();
        for k in 0..self.indices.len() {
            let i = self.indices[k];
            if i > 1 && (k == 0 || self.indices[k - 1] < i) {
                let mut next = self.indices.clone();
                next[k] -= 1;
                out.push(Configuration {
                    indices: next,
                    orbitals: self.orbitals,
                });
            }
        }
        out
    }

    /// Configurations covering `self`: one index raised by one.
    pub fn upper_covers(&self) -> Vec<Configuration> {
        let n = self.indices.len();
        let mut out = Vec::new();
        for k in 0..n {
            let i = self.indices[k];
            if i < self.orbitals && (k + 1 == n || self.indices[k + 1] > i) {
                let mut next = self.indices.clone();
                next[k] += 1;
                out.push(Configuration {
                    indices: next,
                    orbitals: self.orbitals,
                });
            }
        }
        out
    }

    /// Number of particles in orbitals strictly above `k` (1-based).
    pub(crate) fn count_above(&self, k: u32) -> i64 {
        self.indices.iter().filter(|&&i| i > k).count() as i64
    }

    /// Particles outside orbital 1.
    pub fn excitation_count(&self) -> usize {
        self.indices.iter().filter(|&&i| i > 1).count()
    }

    pub fn max_orbital(&self) -> u32 {
        *self.indices.last().expect("nonempty")
    }

    /// Same excited orbitals with `extra` more particles in orbital 1.
    pub fn with_extra_ground_particles(&self, extra: usize) -> Configuration {
        let mut indices = vec![1; extra];
        indices.extend_from_slice(&self.indices);
        Configuration {
            indices,
            orbitals: self.orbitals,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices.serialize(s)
    }
}

/// Multiplicity of each orbital in a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OccupationVector {
    counts: Vec<u32>,
}

impl OccupationVector {
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Inverse of [`Configuration::occupation_vector`].
    pub fn to_configuration(&self) -> Result<Configuration> {
        let orbitals = self.counts.len() as u32;
        let indices = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(k, &c)| std::iter::repeat_n(k as u32 + 1, c as usize))
            .collect();
        Configuration::new(indices, orbitals)
    }
}

/// All of `I_{N,d}` in lexicographic order.
pub fn all_configurations(particles: usize, orbitals: u32) -> Result<Vec<Configuration>> {
    if particles == 0 || orbitals == 0 {
        return Err(Error::Domain("need N ≥ 1 and d ≥ 1".into()));
    }
    let mut out = Vec::new();
    let mut current = vec![1u32; particles];
    loop {
        out.push(Configuration {
            indices: current.clone(),
            orbitals,
        });
        // Next nondecreasing tuple in lexicographic order.
        let Some(k) = (0..particles).rev().find(|&k| current[k] < orbitals) else {
            break;
        };
        let v = current[k] + 1;
        for slot in current.iter_mut().skip(k) {
            *slot = v;
        }
    }
    Ok(out)
}

/// `binomial(N + d - 1, N)`.
pub fn configuration_count(particles: usize, orbitals: u32) -> u128 {
    let n = particles as u128;
    let d = orbitals as u128;
    if d == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for k in 1..=n {
        acc = acc * (d - 1 + k) / k;
    }
    acc
}

fn check_down_closed(ideal: &BTreeSet<Configuration>) -> Result<()> {
    for c in ideal {
        if let Some(missing) = c.lower_covers().into_iter().find(|l| !ideal.contains(l)) {
            return Err(Error::Precondition(format!(
                "set is not down-closed: {c} present but {missing} missing"
            )));
        }
    }
    Ok(())
}

/// Minimal elements of the complement of a down-closed set, in
/// lexicographic order. The empty set yields the ground configuration.
pub fn minimal_successors(
    ideal: &BTreeSet<Configuration>,
    particles: usize,
    orbitals: u32,
) -> Result<Vec<Configuration>> {
    if let Some(c) = ideal
        .iter()
        .find(|c| c.particle_count() != particles || c.orbital_count() != orbitals)
    {
        return Err(Error::Dimension(format!(
            "{c} does not belong to I_(N={particles}, d={orbitals})"
        )));
    }
    check_down_closed(ideal)?;
    Ok(frontier(ideal, particles, orbitals))
}

/// [`minimal_successors`] without validation.
pub(crate) fn frontier(
    ideal: &BTreeSet<Configuration>,
    particles: usize,
    orbitals: u32,
) -> Vec<Configuration> {
    if ideal.is_empty() {
        return vec![Configuration {
            indices: vec![1; particles],
            orbitals,
        }];
    }
    let mut out = BTreeSet::new();
    for c in ideal {
        for u in c.upper_covers() {
            if !ideal.contains(&u) && u.lower_covers().iter().all(|l| ideal.contains(l)) {
                out.insert(u);
            }
        }
    }
    out.into_iter().collect()
}
