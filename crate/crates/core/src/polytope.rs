//! Vertex representation of the spectral polytope `Σ(w)` and exact
//! membership tests.
//!
//! Each lineup `i_1 → … → i_r` gives the generating vertex
//! `v = Σ_j w_j n(i_j)`; `Σ(w)` is the convex hull of all coordinate
//! permutations of these vertices. Membership uses the generalized Rado
//! characterization: `λ ∈ Σ(w)` iff `λ ≺ Σ_l p_l v_l^↓` for some convex
//! weights `p`. Because every `v_l^↓` is sorted the combination is sorted
//! too, so the partial-sum conditions are linear in `p`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lineups::{enumerate_lineups, Lineup};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::{q, to_f64, Q};
use crate::spectrum::{partial_sums, sorted_decreasing, Spectrum};
use crate::weights::WeightVector;

/// LP slack below which a verdict is flagged as lying on the boundary.
pub const BOUNDARY_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    coords: Vec<Q>,
    lineup_ids: Vec<usize>,
}

impl Vertex {
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// Index of the first generating lineup.
    pub fn lineup_id(&self) -> usize {
        self.lineup_ids[0]
    }

    /// All lineups producing this vertex (several only for degenerate `w`).
    pub fn lineup_ids(&self) -> &[usize] {
        &self.lineup_ids
    }

    pub fn sorted(&self) -> Vec<Q> {
        sorted_decreasing(&self.coords)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(to_f64).collect()
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coords.iter().map(|v| v.to_string()).collect();
        strings.serialize(s)
    }
}

#[derive(Debug, Clone)]
pub struct SpectralPolytope {
    particles: usize,
    orbitals: u32,
    weights: WeightVector,
    lineups: Vec<Lineup>,
    vertices: Vec<Vertex>,
}

/// Verdict of [`SpectralPolytope::contains`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// `|slack| < 1e-10`.
    pub boundary: bool,
    /// Largest `t` with `S_k(λ^↓) + t ≤ S_k(v^↓)` for all `k < d` over
    /// convex combinations `v`, capped at `N`. Nonnegative iff member.
    #[serde(serialize_with = "ser_q")]
    pub slack: Q,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `Σ_j w_j n(i_j)` for one lineup.
pub fn lineup_vertex(lineup: &Lineup, weights: &WeightVector) -> Vec<Q> {
    let mut coords = vec![Q::zero(); lineup.orbital_count() as usize];
    for (w, cfg) in weights.weights().iter().zip(lineup.configurations()) {
        for (slot, &n) in coords.iter_mut().zip(cfg.occupation_vector().counts()) {
            if n > 0 {
                *slot += w * q(n as i64);
            }
        }
    }
    coords
}

impl SpectralPolytope {
    /// One vertex per lineup of length `r = rank(w)`, merged when two
    /// lineups give the same vertex up to permutation.
    pub fn build(particles: usize, orbitals: u32, weights: &WeightVector) -> Result<Self> {
        let lineups = enumerate_lineups(particles, orbitals, weights.rank())?;
        let mut vertices: Vec<Vertex> = Vec::new();
        for (id, lineup) in lineups.iter().enumerate() {
            let coords = lineup_vertex(lineup, weights);
            let sorted = sorted_decreasing(&coords);
            match vertices.iter_mut().find(|v| v.sorted() == sorted) {
                Some(existing) => existing.lineup_ids.push(id),
                None => vertices.push(Vertex {
                    coords,
                    lineup_ids: vec![id],
                }),
            }
        }
        Ok(Self {
            particles,
            orbitals,
            weights: weights.clone(),
            lineups,
            vertices,
        })
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn orbitals(&self) -> u32 {
        self.orbitals
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn lineups(&self) -> &[Lineup] {
        &self.lineups
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Distinct `v^↓`, in vertex order.
    pub fn sorted_vertices(&self) -> Vec<Vec<Q>> {
        self.vertices.iter().map(Vertex::sorted).collect()
    }

    fn check_spectrum(&self, lambda: &Spectrum) -> Result<()> {
        if lambda.len() != self.orbitals as usize {
            return Err(Error::Dimension(format!(
                "spectrum has {} entries, polytope lives in d = {}",
                lambda.len(),
                self.orbitals
            )));
        }
        if lambda.total() != &q(self.particles as i64) {
            return Err(Error::Normalization(format!(
                "spectrum sums to {}, expected N = {}",
                lambda.total(),
                self.particles
            )));
        }
        Ok(())
    }

    /// Exact membership by the generalized Rado LP.
    pub fn contains(&self, lambda: &Spectrum) -> Result<Membership> {
        self.check_spectrum(lambda)?;
        let d = self.orbitals as usize;
        let n_total = q(self.particles as i64);
        let target = partial_sums(&lambda.sorted_decreasing());
        let sums: Vec<Vec<Q>> = self
            .sorted_vertices()
            .iter()
            .map(|v| partial_sums(v))
            .collect();
        let count = sums.len();

        // Variables: p_1..p_R, t+, t-.
        let width = count + 2;
        let mut lp = LinearProgram::new(width);
        for k in 0..d.saturating_sub(1) {
            let mut row: Vec<Q> = sums.iter().map(|s| s[k].clone()).collect();
            row.push(-Q::one());
            row.push(Q::one());
            lp.add_constraint(row, Relation::Ge, target[k].clone());
        }
        let mut simplex = vec![Q::one(); count];
        simplex.extend([Q::zero(), Q::zero()]);
        lp.add_constraint(simplex, Relation::Eq, Q::one());
        let mut cap = vec![Q::zero(); width];
        cap[count] = Q::one();
        cap[count + 1] = -Q::one();
        lp.add_constraint(cap.clone(), Relation::Le, n_total);
        lp.maximize(cap);

        let slack = match lp.solve() {
            LpOutcome::Optimal { value, .. } => value,
            other => {
                return Err(Error::Invariant(format!("membership LP ended as {other:?}")));
            }
        };
        Ok(Membership {
            member: !slack.is_negative(),
            boundary: to_f64(&slack).abs() < BOUNDARY_SLACK,
            slack,
        })
    }

    /// [`Self::contains`] over many spectra; results keep input order.
    pub fn contains_batch(&self, spectra: &[Spectrum]) -> Vec<Result<Membership>> {
        spectra.par_iter().map(|s| self.contains(s)).collect()
    }

    /// Membership by a convex combination of explicitly permuted vertices.
    /// Costs `d!` columns per vertex; a reference for small `d`.
    pub fn contains_by_hull(&self, lambda: &Spectrum) -> Result<bool> {
        self.check_spectrum(lambda)?;
        let points = self.permuted_vertices();
        Ok(convex_combination_exists(&points, lambda.values()))
    }

    /// Every distinct coordinate permutation of every vertex.
    pub fn permuted_vertices(&self) -> Vec<Vec<Q>> {
        let mut out = BTreeSet::new();
        for v in &self.vertices {
            for p in distinct_permutations(v.coords()) {
                out.insert(p);
            }
        }
        out.into_iter().collect()
    }

    /// The polytope for `N' = N + δ` particles: every vertex shifted by
    /// `δ e_1`, every lineup padded with `δ` ground-orbital bosons.
    pub fn minkowski_lift(&self, new_particles: usize) -> Result<Self> {
        if new_particles <= self.particles {
            return Err(Error::Domain(format!(
                "lift needs N' > N, got N' = {new_particles}, N = {}",
                self.particles
            )));
        }
        let delta = new_particles - self.particles;
        let shift = q(delta as i64);
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let mut coords = v.coords.clone();
                coords[0] += &shift;
                Vertex {
                    coords,
                    lineup_ids: v.lineup_ids.clone(),
                }
            })
            .collect();
        Ok(Self {
            particles: new_particles,
            orbitals: self.orbitals,
            weights: self.weights.clone(),
            lineups: self
                .lineups
                .iter()
                .map(|l| l.with_extra_ground_particles(delta))
                .collect(),
            vertices,
        })
    }

    /// Does `μ = λ + c` hold for some `λ` in this polytope and some `c` in
    /// the simplex `conv{δ e_k}`? Decided on explicit vertices, independent
    /// of the Rado LP.
    pub fn minkowski_sum_contains(&self, delta: usize, mu: &Spectrum) -> Result<bool> {
        let d = self.orbitals as usize;
        if mu.len() != d {
            return Err(Error::Dimension("μ has the wrong length".into()));
        }
        if mu.total() != &q((self.particles + delta) as i64) {
            return Err(Error::Normalization("μ must sum to N + δ".into()));
        }
        let points = self.permuted_vertices();
        let (np, nc) = (points.len(), d);
        let mut lp = LinearProgram::new(np + nc);
        for i in 0..d {
            let mut row: Vec<Q> = points.iter().map(|p| p[i].clone()).collect();
            row.extend((0..nc).map(|k| if k == i { q(delta as i64) } else { Q::zero() }));
            lp.add_constraint(row, Relation::Eq, mu.values()[i].clone());
        }
        let mut first = vec![Q::one(); np];
        first.extend(vec![Q::zero(); nc]);
        lp.add_constraint(first, Relation::Eq, Q::one());
        let mut second = vec![Q::zero(); np];
        second.extend(vec![Q::one(); nc]);
        lp.add_constraint(second, Relation::Eq, Q::one());
        Ok(lp.find_feasible().is_some())
    }
}

/// `w1 ≺ w2`, cross-checked by testing every vertex of `Σ(w1)` against
/// `Σ(w2)`. A failed cross-check is reported as an invariant error.
pub fn domain_inclusion(
    smaller: &WeightVector,
    larger: &WeightVector,
    particles: usize,
    orbitals: u32,
) -> Result<bool> {
    if !smaller.is_majorized_by(larger) {
        return Ok(false);
    }
    let inner = SpectralPolytope::build(particles, orbitals, smaller)?;
    let outer = SpectralPolytope::build(particles, orbitals, larger)?;
    for v in inner.vertices() {
        let lambda = Spectrum::new(v.coords().to_vec())?;
        if !outer.contains(&lambda)?.member {
            return Err(Error::Invariant(format!(
                "vertex {:?} of Σ({smaller}) lies outside Σ({larger})",
                v.to_f64()
            )));
        }
    }
    Ok(true)
}

/// Feasibility of `x = Σ q_i p_i`, `q` in the probability simplex.
pub fn convex_combination_exists(points: &[Vec<Q>], x: &[Q]) -> bool {
    let mut lp = LinearProgram::new(points.len());
    for (i, xi) in x.iter().enumerate() {
        lp.add_constraint(
            points.iter().map(|p| p[i].clone()).collect(),
            Relation::Eq,
            xi.clone(),
        );
    }
    lp.add_constraint(vec![Q::one(); points.len()], Relation::Eq, Q::one());
    lp.find_feasible().is_some()
}

/// Distinct permutations in lexicographic order.
pub fn distinct_permutations(values: &[Q]) -> Vec<Vec<Q>> {
    let mut current = values.to_vec();
    current.sort();
    let mut out = vec![current.clone()];
    loop {
        // Next lexicographic permutation.
        let Some(i) = (0..current.len().saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("successor exists");
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}
