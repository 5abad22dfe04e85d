//! Halfspace representations of the ordered sector `Σ^↓(w)`.
//!
//! Two routes: closed-form systems for `r ≤ 3`, and exact facet enumeration
//! at fixed `w` for larger `r`. The numeric route works in partial-sum
//! coordinates `s_k = λ_1^↓ + … + λ_k^↓`, `k < d`, where the generalized
//! Rado condition says `Σ^↓ = (conv{S(v^↓)} − ℝ^{d-1}_+) ∩ chamber`. Both
//! conversions (V→H for the dominated hull, H→V after intersecting with the
//! chamber) use [`crate::dd`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dd::{extreme_rays, integer_ray, rank};
use crate::error::{Error, Result};
use crate::lineups::{check_bounds, Lineup};
use crate::polytope::{lineup_vertex, SpectralPolytope};
use crate::rational::{primitive_scale, q, to_f64, Q};
use crate::spectrum::{partial_sums, sorted_decreasing, Spectrum};
use crate::weights::WeightVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintKind {
    #[serde(rename = "ineq")]
    Inequality,
    #[serde(rename = "eq")]
    Equality,
}

/// Bound written as `β_r + Σ_{j<r} (β_j − β_r) w_j`, i.e. with `w_r`
/// eliminated through normalization. Two constraints have the same
/// `w`-dependence when their forms agree after zero padding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightForm {
    pub constant: Q,
    pub coefficients: Vec<Q>,
}

impl WeightForm {
    fn trimmed(&self) -> (Q, Vec<Q>) {
        let mut c = self.coefficients.clone();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        (self.constant.clone(), c)
    }

    /// Equality up to trailing zero coefficients.
    pub fn same_dependence(&self, other: &WeightForm) -> bool {
        self.trimmed() == other.trimmed()
    }

    pub fn evaluate(&self, weights: &WeightVector) -> Q {
        let w = weights.padded(self.coefficients.len());
        &self.constant
            + self
                .coefficients
                .iter()
                .zip(&w)
                .map(|(c, x)| c * x)
                .sum::<Q>()
    }

    /// `β_1, …, β_r` from the bound coefficients of a lineup's vertex.
    fn from_betas(betas: &[Q]) -> Self {
        let last = betas.last().cloned().unwrap_or_else(Q::zero);
        Self {
            coefficients: betas[..betas.len().saturating_sub(1)]
                .iter()
                .map(|b| b - &last)
                .collect(),
            constant: last,
        }
    }
}

impl fmt::Display for WeightForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (j, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + {c}·w{}", j + 1)?;
            }
        }
        Ok(())
    }
}

/// `coefficients · λ^↓ ≤ bound` (or `=` for the normalization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceConstraint {
    pub coefficients: Vec<Q>,
    pub bound: Q,
    pub kind: ConstraintKind,
    /// Distinct `w`-dependences of the bound among the generating vertices
    /// that saturate it. Empty for the normalization.
    pub weight_forms: Vec<WeightForm>,
}

impl HalfspaceConstraint {
    /// `coefficients · λ^↓` with missing entries on either side read as 0.
    pub fn evaluate(&self, sorted: &[Q]) -> Q {
        self.coefficients.iter().zip(sorted).map(|(a, x)| a * x).sum()
    }

    /// `bound − a · λ^↓`; nonnegative iff satisfied (inequalities).
    pub fn slack(&self, sorted: &[Q]) -> Q {
        &self.bound - self.evaluate(sorted)
    }

    /// Coefficients with trailing zeros removed.
    pub fn normal(&self) -> Vec<Q> {
        let mut c = self.coefficients.clone();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }
}

impl Serialize for HalfspaceConstraint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HalfspaceConstraint", 3)?;
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("bound", &self.bound.to_string())?;
        st.serialize_field("type", &self.kind)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceSystem {
    particles: usize,
    orbitals: u32,
    constraints: Vec<HalfspaceConstraint>,
}

impl HalfspaceSystem {
    fn with_inequalities(particles: usize, orbitals: u32, mut inequalities: Vec<HalfspaceConstraint>) -> Self {
        inequalities.push(HalfspaceConstraint {
            coefficients: vec![Q::one(); orbitals as usize],
            bound: q(particles as i64),
            kind: ConstraintKind::Equality,
            weight_forms: Vec::new(),
        });
        Self {
            particles,
            orbitals,
            constraints: inequalities,
        }
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn orbitals(&self) -> u32 {
        self.orbitals
    }

    /// All constraints; the normalization equality is last.
    pub fn constraints(&self) -> &[HalfspaceConstraint] {
        &self.constraints
    }

    pub fn inequalities(&self) -> impl Iterator<Item = &HalfspaceConstraint> {
        self.constraints
            .iter()
            .filter(|c| c.kind == ConstraintKind::Inequality)
    }

    /// Inequalities plus one for the normalization.
    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }
}

fn inequality(coefficients: Vec<Q>, orbitals: u32, form: WeightForm, weights: &WeightVector) -> HalfspaceConstraint {
    let mut coefficients = coefficients;
    coefficients.resize(orbitals as usize, Q::zero());
    HalfspaceConstraint {
        coefficients,
        bound: form.evaluate(weights),
        kind: ConstraintKind::Inequality,
        weight_forms: vec![form],
    }
}

/// Closed-form minimal systems for `r = 1, 2, 3`:
/// `λ_1^↓ ≤ N − 1 + w_1` from `r = 2` on and
/// `2λ_1^↓ + λ_2^↓ ≤ 2(N − 1) + 2w_1 + w_2` at `r = 3`.
pub fn analytic_halfspaces(particles: usize, orbitals: u32, weights: &WeightVector) -> Result<HalfspaceSystem> {
    let r = weights.rank();
    if r > 3 {
        return Err(Error::Unsupported(format!(
            "closed-form halfspaces exist only for r ≤ 3 (got r = {r}); use the numeric facets"
        )));
    }
    check_bounds(particles, orbitals, r)?;
    let n1 = q(particles as i64 - 1);
    let mut ineqs = Vec::new();
    if r >= 2 {
        let form = WeightForm {
            constant: n1.clone(),
            coefficients: vec![q(1), q(0)][..r - 1].to_vec(),
        };
        ineqs.push(inequality(vec![q(1)], orbitals, form, weights));
    }
    if r == 3 {
        let form = WeightForm {
            constant: q(2) * &n1,
            coefficients: vec![q(2), q(1)],
        };
        ineqs.push(inequality(vec![q(2), q(1)], orbitals, form, weights));
    }
    Ok(HalfspaceSystem::with_inequalities(particles, orbitals, ineqs))
}

/// `λ^↓` satisfies every inequality and `Σλ = N`. Shorter vectors are zero
/// padded, so a system for `d` orbitals also tests spectra on fewer.
pub fn check_system(system: &HalfspaceSystem, lambda: &Spectrum) -> bool {
    let sorted = lambda.sorted_decreasing();
    system.constraints.iter().all(|c| match c.kind {
        ConstraintKind::Inequality => !c.slack(&sorted).is_negative(),
        ConstraintKind::Equality => {
            let total: Q = sorted.iter().sum();
            total == c.bound
        }
    })
}

/// Smallest inequality slack `b − a·λ^↓`, or `None` for a system without
/// inequalities.
pub fn min_slack(system: &HalfspaceSystem, lambda: &Spectrum) -> Option<Q> {
    let sorted = lambda.sorted_decreasing();
    system.inequalities().map(|c| c.slack(&sorted)).min()
}

/// Options for [`numeric_facets_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FacetOptions {
    /// Lift the `r ≤ 5` cap. Larger ranks run but are not calibrated.
    pub allow_large: bool,
}

/// Facet data of `Σ^↓(w)` for any `(N, d)` and any `w`.
#[derive(Debug, Clone)]
pub struct OrderedSector {
    /// Vertices of `Σ^↓` in `λ` coordinates, deterministic order.
    pub vertices: Vec<Vec<Q>>,
    /// Facets that are not chamber walls, `a·λ^↓ ≤ b` with primitive
    /// integer `a`.
    pub exclusion: Vec<(Vec<Q>, Q)>,
    /// Chamber walls `λ_k ≥ λ_{k+1}` (`k < d`) and `λ_d ≥ 0` that are
    /// facets, by index `k` (1-based; `d` stands for positivity).
    pub chamber_facets: Vec<usize>,
}

struct SInequality {
    a: Vec<Q>,
    b: Q,
    chamber: Option<usize>,
}

fn to_lambda_vertex(s: &[Q], particles: &Q) -> Vec<Q> {
    let mut out = Vec::with_capacity(s.len() + 1);
    let mut prev = Q::zero();
    for x in s {
        out.push(x - &prev);
        prev = x.clone();
    }
    out.push(particles - &prev);
    out
}

/// Facet enumeration of the ordered sector `Σ^↓(w) ⊂ {Σλ = N}`.
pub fn ordered_sector(polytope: &SpectralPolytope) -> Result<OrderedSector> {
    let d = polytope.orbitals() as usize;
    let n_total = q(polytope.particles() as i64);
    let n = d - 1;
    let sorted = polytope.sorted_vertices();
    if n == 0 {
        return Ok(OrderedSector {
            vertices: vec![vec![n_total]],
            exclusion: Vec::new(),
            chamber_facets: Vec::new(),
        });
    }
    let points: Vec<Vec<Q>> = sorted
        .iter()
        .map(|v| partial_sums(v)[..n].to_vec())
        .collect();

    // V→H for D = conv(points) − orthant: y = (y0, a) with
    // y0 + a·p ≤ 0 on points and −a_k ≤ 0 on the recession rays.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for p in &points {
        let mut g = vec![q(1)];
        g.extend(p.iter().cloned());
        rows.push(integer_ray(&g.iter().map(|x| -x).collect::<Vec<_>>()));
    }
    for k in 0..n {
        let mut g = vec![BigInt::zero(); n + 1];
        g[k + 1] = BigInt::one();
        rows.push(g);
    }
    let mut ineqs: Vec<SInequality> = Vec::new();

    // Chamber walls first so coincident exclusion rows keep the label.
    for k in 1..=n {
        // λ_k − λ_{k+1} ≥ 0  ⇔  −s_{k−1} + 2 s_k − s_{k+1} ≥ 0.
        let mut a = vec![Q::zero(); n];
        let mut b = Q::zero();
        a[k - 1] = q(-2);
        if k >= 2 {
            a[k - 2] = q(1);
        }
        if k < n {
            a[k] = q(1);
        } else {
            b -= &n_total;
        }
        ineqs.push(SInequality { a, b, chamber: Some(k) });
    }
    let mut positivity = vec![Q::zero(); n];
    positivity[n - 1] = q(1);
    ineqs.push(SInequality {
        a: positivity,
        b: n_total.clone(),
        chamber: Some(d),
    });

    for y in extreme_rays(&rows)? {
        let a: Vec<Q> = y[1..].iter().map(|x| Q::from_integer(x.clone())).collect();
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        ineqs.push(SInequality {
            a,
            b: -Q::from_integer(y[0].clone()),
            chamber: None,
        });
    }

    // H→V on the homogenized cone over (t, s): b t − a·s ≥ 0, t ≥ 0.
    let mut cone: Vec<Vec<BigInt>> = ineqs
        .iter()
        .map(|h| {
            let mut row = vec![h.b.clone()];
            row.extend(h.a.iter().map(|x| -x));
            integer_ray(&row)
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[0] = BigInt::one();
    cone.push(t_row);
    let mut vertices: Vec<Vec<Q>> = Vec::new();
    for ray in extreme_rays(&cone)? {
        if !ray[0].is_positive() {
            return Err(Error::Invariant("ordered sector is unbounded".into()));
        }
        let t = Q::from_integer(ray[0].clone());
        vertices.push(ray[1..].iter().map(|x| Q::from_integer(x.clone()) / &t).collect());
    }
    vertices.sort();
    vertices.dedup();

    let mut seen = BTreeSet::new();
    let mut exclusion = Vec::new();
    let mut chamber_facets = Vec::new();
    for h in &ineqs {
        let tight: Vec<Vec<Q>> = vertices
            .iter()
            .filter(|s| h.a.iter().zip(s.iter()).map(|(x, y)| x * y).sum::<Q>() == h.b)
            .map(|s| {
                let mut row = vec![q(1)];
                row.extend(s.iter().cloned());
                row
            })
            .collect();
        if tight.len() < n || rank(&tight) < n {
            continue;
        }
        let scale = primitive_scale(&h.a);
        let key: (Vec<Q>, Q) = (h.a.iter().map(|x| x * &scale).collect(), &h.b * &scale);
        if !seen.insert(key) {
            continue;
        }
        match h.chamber {
            Some(k) => chamber_facets.push(k),
            None => {
                // a·s = Σ_i (Σ_{k≥i} a_k) λ_i over i < d.
                let mut c = vec![Q::zero(); d];
                let mut acc = Q::zero();
                for i in (0..n).rev() {
                    acc += &h.a[i];
                    c[i] = acc.clone();
                }
                let scale = primitive_scale(&c);
                exclusion.push((c.iter().map(|x| x * &scale).collect(), &h.b * &scale));
            }
        }
    }
    if exclusion.is_empty() && chamber_facets.is_empty() {
        return Err(Error::Invariant("ordered sector is not full-dimensional".into()));
    }
    exclusion.sort();
    Ok(OrderedSector {
        vertices: vertices
            .iter()
            .map(|s| to_lambda_vertex(s, &n_total))
            .collect(),
        exclusion,
        chamber_facets,
    })
}

/// Sorting permutation of a vertex: `order[i]` is the orbital holding the
/// `i`-th largest entry (stable).
fn sorting_order(coords: &[Q]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..coords.len()).collect();
    order.sort_by(|&a, &b| coords[b].cmp(&coords[a]));
    order
}

/// `β_j = a · π(n(i_j))` with `π` the sorting permutation of the lineup's
/// vertex.
fn weight_form(coefficients: &[Q], lineup: &Lineup, weights: &WeightVector) -> WeightForm {
    let order = sorting_order(&lineup_vertex(lineup, weights));
    let betas: Vec<Q> = lineup
        .configurations()
        .iter()
        .map(|cfg| {
            let counts = cfg.occupation_vector();
            coefficients
                .iter()
                .zip(&order)
                .map(|(a, &o)| a * q(counts.counts()[o] as i64))
                .sum()
        })
        .collect();
    WeightForm::from_betas(&betas)
}

/// Minimal halfspace system of `Σ^↓(w)` at fixed generic `w`, `d = r ≤ 5`.
pub fn numeric_facets(polytope: &SpectralPolytope) -> Result<HalfspaceSystem> {
    numeric_facets_with(polytope, FacetOptions::default())
}

pub fn numeric_facets_with(polytope: &SpectralPolytope, options: FacetOptions) -> Result<HalfspaceSystem> {
    let w = polytope.weights();
    let r = w.rank();
    if !w.is_generic() {
        return Err(Error::Degeneracy(format!(
            "facet multiplicity is undefined for degenerate weights {w}"
        )));
    }
    if polytope.orbitals() as usize != r {
        return Err(Error::Precondition(format!(
            "numeric facets need d = r, got d = {}, r = {r}",
            polytope.orbitals()
        )));
    }
    if r > 5 && !options.allow_large {
        return Err(Error::Unsupported(format!(
            "numeric facets are capped at r ≤ 5 (got r = {r}); opt in to go further"
        )));
    }
    let sector = ordered_sector(polytope)?;
    let sorted = polytope.sorted_vertices();
    let ineqs = sector
        .exclusion
        .into_iter()
        .map(|(coefficients, bound)| {
            let mut forms: Vec<WeightForm> = Vec::new();
            for (vertex, v_sorted) in polytope.vertices().iter().zip(&sorted) {
                let value: Q = coefficients.iter().zip(v_sorted).map(|(a, x)| a * x).sum();
                if value != bound {
                    continue;
                }
                for &id in vertex.lineup_ids() {
                    let form = weight_form(&coefficients, &polytope.lineups()[id], w);
                    if !forms.contains(&form) {
                        forms.push(form);
                    }
                }
            }
            HalfspaceConstraint {
                coefficients,
                bound,
                kind: ConstraintKind::Inequality,
                weight_forms: forms,
            }
        })
        .collect();
    Ok(HalfspaceSystem::with_inequalities(
        polytope.particles(),
        polytope.orbitals(),
        ineqs,
    ))
}

/// `λ^↓` as floats, for reporting.
pub fn sorted_f64(lambda: &Spectrum) -> Vec<f64> {
    sorted_decreasing(lambda.values()).iter().map(to_f64).collect()
}
