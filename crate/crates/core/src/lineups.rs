//! Lineups: the `r` energetically lowest configurations of a non-interacting
//! Hamiltonian `h_1 < h_2 < … < h_d`, listed in increasing energy.
//!
//! A lineup is enumerated as a prefix of a linear extension of the
//! dominance order (each step picks a minimal element of what is left), kept
//! only if some strictly increasing `h` realizes exactly that prefix. The
//! order alone over-counts from `r = 5` on; realizability is decided by an
//! exact LP in the level spacings `h_{k+1} - h_k`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::{frontier, Configuration};
use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Relation};
use crate::rational::{q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Lineup {
    configurations: Vec<Configuration>,
}

impl Lineup {
    /// Validates the ideal/minimality structure. Realizability is not checked.
    pub fn new(configurations: Vec<Configuration>) -> Result<Self> {
        let first = configurations
            .first()
            .ok_or_else(|| Error::Domain("empty lineup".into()))?;
        let (n, d) = (first.particle_count(), first.orbital_count());
        let mut ideal = BTreeSet::new();
        for c in &configurations {
            if c.particle_count() != n || c.orbital_count() != d {
                return Err(Error::Dimension("mixed (N, d) in lineup".into()));
            }
            if !frontier(&ideal, n, d).contains(c) {
                return Err(Error::Precondition(format!(
                    "{c} is not minimal among the configurations left"
                )));
            }
            ideal.insert(c.clone());
        }
        Ok(Self { configurations })
    }

    pub fn configurations(&self) -> &[Configuration] {
        &self.configurations
    }

    pub fn len(&self) -> usize {
        self.configurations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configurations.is_empty()
    }

    pub fn particle_count(&self) -> usize {
        self.configurations[0].particle_count()
    }

    pub fn orbital_count(&self) -> u32 {
        self.configurations[0].orbital_count()
    }

    /// The same lineup with `extra` more bosons in the lowest orbital.
    pub fn with_extra_ground_particles(&self, extra: usize) -> Lineup {
        Lineup {
            configurations: self
                .configurations
                .iter()
                .map(|c| c.with_extra_ground_particles(extra))
                .collect(),
        }
    }

    /// A strictly increasing `h` (with `h_1 = 0`) whose `r` lowest
    /// configurations are exactly this lineup, in this order, with no ties.
    pub fn realizing_energies(&self) -> Option<Vec<Q>> {
        let ideal: BTreeSet<_> = self.configurations.iter().cloned().collect();
        realizing_gaps(&self.configurations, &ideal).map(|gaps| {
            let d = self.orbital_count() as usize;
            let mut h = Vec::with_capacity(d);
            h.push(Q::zero());
            for k in 1..d {
                let step = gaps.get(k - 1).cloned().unwrap_or_else(Q::one);
                h.push(&h[k - 1] + step);
            }
            h
        })
    }

    /// Energy of configuration `c` under `h`.
    pub fn energy(c: &Configuration, h: &[Q]) -> Q {
        c.indices().iter().map(|&i| &h[i as usize - 1]).sum()
    }
}

pub(crate) fn check_bounds(particles: usize, orbitals: u32, length: usize) -> Result<()> {
    if length == 0 {
        return Err(Error::Domain("lineup length r must be ≥ 1".into()));
    }
    if particles == 0 || orbitals == 0 {
        return Err(Error::Domain("need N ≥ 1 and d ≥ 1".into()));
    }
    if particles + 1 < length || (orbitals as usize) < length {
        return Err(Error::Domain(format!(
            "need N ≥ r - 1 and d ≥ r, got N = {particles}, d = {orbitals}, r = {length}"
        )));
    }
    Ok(())
}

/// Spacings `h_{k+1} - h_k ≥ 1` for `k < m` (`m` the highest orbital the
/// prefix or its frontier touches) realizing `sequence` strictly below every
/// other configuration.
fn realizing_gaps(sequence: &[Configuration], ideal: &BTreeSet<Configuration>) -> Option<Vec<Q>> {
    let first = &sequence[0];
    let (n, d) = (first.particle_count(), first.orbital_count());
    let next = frontier(ideal, n, d);
    let top = sequence
        .iter()
        .chain(&next)
        .map(Configuration::max_orbital)
        .max()
        .unwrap_or(1);
    let vars = top as usize - 1;
    if vars == 0 {
        return Some(Vec::new());
    }
    let last = sequence.last().expect("nonempty");
    let pairs = sequence
        .windows(2)
        .map(|w| (&w[0], &w[1]))
        .chain(next.iter().map(|c| (last, c)));

    // E(hi) - E(lo) = Σ_k Δ_k g_k with g_k = 1 + x_k, x_k ≥ 0; require ≥ 1.
    let mut lp = LinearProgram::new(vars);
    for (lo, hi) in pairs {
        let delta: Vec<i64> = (1..=vars as u32)
            .map(|k| hi.count_above(k) - lo.count_above(k))
            .collect();
        let offset: i64 = delta.iter().sum();
        lp.add_constraint(
            delta.into_iter().map(q).collect(),
            Relation::Ge,
            q(1 - offset),
        );
    }
    lp.find_feasible()
        .map(|x| x.into_iter().map(|v| v + Q::one()).collect())
}

fn search(
    sequence: &mut Vec<Configuration>,
    ideal: &mut BTreeSet<Configuration>,
    particles: usize,
    orbitals: u32,
    length: usize,
    visit: &mut dyn FnMut(&[Configuration]),
) {
    if sequence.len() == length {
        visit(sequence);
        return;
    }
    for candidate in frontier(ideal, particles, orbitals) {
        sequence.push(candidate.clone());
        ideal.insert(candidate.clone());
        if realizing_gaps(sequence, ideal).is_some() {
            search(sequence, ideal, particles, orbitals, length, visit);
        }
        ideal.remove(&candidate);
        sequence.pop();
    }
}

/// All lineups of length `r` for `N` bosons in `d` orbitals, in
/// lexicographic order of their configuration sequences.
pub fn enumerate_lineups(particles: usize, orbitals: u32, length: usize) -> Result<Vec<Lineup>> {
    check_bounds(particles, orbitals, length)?;
    let mut out = Vec::new();
    search(
        &mut Vec::new(),
        &mut BTreeSet::new(),
        particles,
        orbitals,
        length,
        &mut |seq| {
            out.push(Lineup {
                configurations: seq.to_vec(),
            })
        },
    );
    Ok(out)
}

/// Number of lineups, without storing them.
pub fn count_lineups(particles: usize, orbitals: u32, length: usize) -> Result<u64> {
    check_bounds(particles, orbitals, length)?;
    let mut count = 0u64;
    search(
        &mut Vec::new(),
        &mut BTreeSet::new(),
        particles,
        orbitals,
        length,
        &mut |_| count += 1,
    );
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::all_configurations;

    fn c(ix: &[u32], d: u32) -> Configuration {
        Configuration::new(ix.to_vec(), d).unwrap()
    }

    #[test]
    fn small_cases() {
        let one = enumerate_lineups(3, 3, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].configurations(), &[c(&[1, 1, 1], 3)]);

        let three = enumerate_lineups(3, 3, 3).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(
            three[0].configurations(),
            &[c(&[1, 1, 1], 3), c(&[1, 1, 2], 3), c(&[1, 1, 3], 3)]
        );
        assert_eq!(
            three[1].configurations(),
            &[c(&[1, 1, 1], 3), c(&[1, 1, 2], 3), c(&[1, 2, 2], 3)]
        );
    }

    #[test]
    fn counts_for_small_r() {
        assert_eq!(count_lineups(3, 4, 4).unwrap(), 4);
        assert_eq!(count_lineups(1, 1, 1).unwrap(), 1);
        assert_eq!(count_lineups(5, 7, 1).unwrap(), 1);
        assert_eq!(count_lineups(4, 5, 5).unwrap(), 8);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(enumerate_lineups(1, 3, 3), Err(Error::Domain(_))));
        assert!(matches!(enumerate_lineups(3, 2, 3), Err(Error::Domain(_))));
        assert!(matches!(count_lineups(3, 3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn unrealizable_orders_are_dropped() {
        // Both are prefixes of linear extensions of the dominance order, but
        // (1113) before (1122) means h_1 + h_3 < 2 h_2, while (1222) before
        // (1123) means the opposite; likewise with the roles swapped.
        let all = enumerate_lineups(4, 5, 5).unwrap();
        for bad in [
            [[1, 1, 1, 1], [1, 1, 1, 2], [1, 1, 1, 3], [1, 1, 2, 2], [1, 2, 2, 2]],
            [[1, 1, 1, 1], [1, 1, 1, 2], [1, 1, 2, 2], [1, 1, 1, 3], [1, 1, 2, 3]],
        ] {
            let seq: Vec<Configuration> = bad.iter().map(|ix| c(ix, 5)).collect();
            let lineup = Lineup::new(seq).expect("valid order prefix");
            assert!(lineup.realizing_energies().is_none());
            assert!(!all.contains(&lineup));
        }
    }

    #[test]
    fn realizing_energies_sort_configurations() {
        for (n, d, r) in [(3, 3, 3), (3, 4, 4), (4, 5, 5)] {
            let all = all_configurations(n, d).unwrap();
            for lineup in enumerate_lineups(n, d, r).unwrap() {
                let h = lineup.realizing_energies().expect("realizable");
                assert!(h.windows(2).all(|w| w[0] < w[1]));
                let mut by_energy: Vec<(Q, &Configuration)> =
                    all.iter().map(|c| (Lineup::energy(c, &h), c)).collect();
                by_energy.sort();
                let lowest: Vec<Configuration> =
                    by_energy[..r].iter().map(|(_, c)| (*c).clone()).collect();
                assert_eq!(lowest, lineup.configurations());
                assert!(by_energy[..=r].windows(2).all(|w| w[0].0 < w[1].0));
            }
        }
    }

    #[test]
    fn lineup_validation() {
        assert!(Lineup::new(vec![c(&[1, 1], 3), c(&[1, 2], 3)]).is_ok());
        assert!(Lineup::new(vec![c(&[1, 1], 3), c(&[1, 3], 3)]).is_err());
        assert!(Lineup::new(vec![]).is_err());
    }
}
