//! Exact diagonalization of small boson systems, used to check the polytope
//! data against actual ensemble states.
//!
//! Operators are dense Hermitian matrices on the symmetric `N`-boson sector
//! of `d` modes, in the lexicographic configuration basis of
//! [`all_configurations`]. Everything here is double precision.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::config::{all_configurations, Configuration};
use crate::error::{Error, Result};
use crate::halfspace::{ConstraintKind, HalfspaceSystem};
use crate::lineups::Lineup;
use crate::polytope::SpectralPolytope;
use crate::rational::to_f64;
use crate::spectrum::majorizes_f64;
use crate::weights::WeightVector;

/// Largest sector handled by the dense eigensolver.
pub const MAX_SECTOR_DIMENSION: usize = 500;
/// Eigenvalues closer than this count as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-8;
/// Spectrum-versus-vertex matching tolerance.
pub const VERTEX_TOLERANCE: f64 = 1e-10;
/// Hermiticity tolerance for operators.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Configuration basis of the `N`-boson sector.
#[derive(Debug, Clone)]
pub struct FockBasis {
    particles: usize,
    modes: u32,
    configurations: Vec<Configuration>,
    occupations: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl FockBasis {
    pub fn new(particles: usize, modes: u32) -> Result<Self> {
        if particles == 0 || modes == 0 {
            return Err(Error::Domain("need N ≥ 1 and d ≥ 1".into()));
        }
        let configurations = all_configurations(particles, modes)?;
        if configurations.len() > MAX_SECTOR_DIMENSION {
            return Err(Error::Size(format!(
                "sector dimension {} exceeds {MAX_SECTOR_DIMENSION}",
                configurations.len()
            )));
        }
        let occupations: Vec<Vec<u32>> = configurations
            .iter()
            .map(|c| c.occupation_vector().counts().to_vec())
            .collect();
        let index = occupations
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(Self {
            particles,
            modes,
            configurations,
            occupations,
            index,
        })
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn modes(&self) -> u32 {
        self.modes
    }

    pub fn dimension(&self) -> usize {
        self.configurations.len()
    }

    pub fn configurations(&self) -> &[Configuration] {
        &self.configurations
    }

    pub fn occupation(&self, state: usize) -> &[u32] {
        &self.occupations[state]
    }

    /// `a†_q a_p |state⟩ = amplitude · |target⟩`, or `None` if it vanishes.
    pub fn hop(&self, state: usize, p: usize, q: usize) -> Option<(usize, f64)> {
        let n = &self.occupations[state];
        if n[p] == 0 {
            return None;
        }
        if p == q {
            return Some((state, n[p] as f64));
        }
        let amplitude = (n[p] as f64 * (n[q] + 1) as f64).sqrt();
        let mut m = n.clone();
        m[p] -= 1;
        m[q] += 1;
        Some((self.index[&m], amplitude))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    OneBody,
    Interaction,
    Total,
}

#[derive(Debug, Clone)]
pub struct ManyBodyOperator {
    basis: FockBasis,
    matrix: DMatrix<Complex64>,
    kind: OperatorKind,
}

/// Eigenpairs sorted by ascending energy.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub energies: Vec<f64>,
    /// Column `j` belongs to `energies[j]`.
    pub vectors: DMatrix<Complex64>,
}

impl ManyBodyOperator {
    pub fn new(basis: FockBasis, matrix: DMatrix<Complex64>, kind: OperatorKind) -> Result<Self> {
        let dim = basis.dimension();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::Dimension(format!(
                "matrix is {}×{}, sector has dimension {dim}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let asym = max_abs(&(&matrix - matrix.adjoint()));
        if asym > HERMITIAN_TOLERANCE * max_abs(&matrix).max(1.0) {
            return Err(Error::Domain(format!("operator is not Hermitian (defect {asym:e})")));
        }
        Ok(Self { basis, matrix, kind })
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn eigensystem(&self) -> Eigensystem {
        let eig = self.matrix.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let energies: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vectors = DMatrix::from_fn(self.matrix.nrows(), order.len(), |r, c| {
            eig.eigenvectors[(r, order[c])]
        });
        let mut system = Eigensystem { energies, vectors };
        canonicalize_blocks(&mut system);
        system
    }
}

/// Fixes the phase of each eigenvector (largest component real positive)
/// and orders vectors inside a degenerate block lexicographically by the
/// magnitudes of their components, largest first.
fn canonicalize_blocks(system: &mut Eigensystem) {
    let dim = system.vectors.nrows();
    for mut col in system.vectors.column_iter_mut() {
        let pivot = (0..dim)
            .max_by(|&a, &b| col[a].norm().total_cmp(&col[b].norm()).then(b.cmp(&a)))
            .expect("nonempty");
        let phase = col[pivot].conj() / col[pivot].norm();
        col *= phase;
    }
    let mut start = 0;
    while start < system.energies.len() {
        let mut end = start + 1;
        while end < system.energies.len()
            && system.energies[end] - system.energies[end - 1] < DEGENERACY_TOLERANCE
        {
            end += 1;
        }
        if end - start > 1 {
            let mut cols: Vec<Vec<Complex64>> = (start..end)
                .map(|c| system.vectors.column(c).iter().copied().collect())
                .collect();
            cols.sort_by(|a, b| {
                for (x, y) in a.iter().zip(b) {
                    let ord = y.norm().total_cmp(&x.norm());
                    if ord.is_ne() {
                        return ord;
                    }
                }
                std::cmp::Ordering::Equal
            });
            for (offset, col) in cols.into_iter().enumerate() {
                for (r, v) in col.into_iter().enumerate() {
                    system.vectors[(r, start + offset)] = v;
                }
            }
        }
        start = end;
    }
}

/// Largest entry modulus.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `Σ_k h_{i_k}` on the diagonal.
pub fn build_noninteracting(h: &[f64], particles: usize) -> Result<ManyBodyOperator> {
    let basis = FockBasis::new(particles, h.len() as u32)?;
    let dim = basis.dimension();
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for (s, cfg) in basis.configurations().iter().enumerate() {
        let e: f64 = cfg.indices().iter().map(|&i| h[i as usize - 1]).sum();
        m[(s, s)] = Complex64::new(e, 0.0);
    }
    ManyBodyOperator::new(basis, m, OperatorKind::OneBody)
}

/// Open-chain Bose-Hubbard model
/// `−J Σ_i (a†_i a_{i+1} + h.c.) + U/2 Σ_i n_i(n_i − 1) + Σ_i v_i n_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HubbardParameters {
    pub hopping: f64,
    pub interaction: f64,
    pub potentials: Vec<f64>,
}

pub fn build_bose_hubbard(params: &HubbardParameters, particles: usize) -> Result<ManyBodyOperator> {
    let sites = params.potentials.len();
    if sites == 0 || sites > 6 || particles > 6 {
        return Err(Error::Size(format!(
            "Bose-Hubbard is limited to 1 ≤ d ≤ 6 sites and N ≤ 6, got d = {sites}, N = {particles}"
        )));
    }
    let basis = FockBasis::new(particles, sites as u32)?;
    let dim = basis.dimension();
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for s in 0..dim {
        let n = basis.occupation(s);
        let diag: f64 = n
            .iter()
            .zip(&params.potentials)
            .map(|(&k, v)| {
                let k = k as f64;
                0.5 * params.interaction * k * (k - 1.0) + v * k
            })
            .sum();
        m[(s, s)] += Complex64::new(diag, 0.0);
        for i in 0..sites.saturating_sub(1) {
            for (p, q) in [(i, i + 1), (i + 1, i)] {
                if let Some((t, amp)) = basis.hop(s, p, q) {
                    m[(t, s)] += Complex64::new(-params.hopping * amp, 0.0);
                }
            }
        }
    }
    ManyBodyOperator::new(basis, m, OperatorKind::Total)
}

/// Density operator on a boson sector.
#[derive(Debug, Clone)]
pub struct ManyBodyState {
    basis: FockBasis,
    density: DMatrix<Complex64>,
    weights: Option<WeightVector>,
}

impl ManyBodyState {
    /// `Σ_j w_j |ψ_j⟩⟨ψ_j|` from the first `rank(w)` columns of `vectors`.
    pub fn ensemble(basis: FockBasis, vectors: &DMatrix<Complex64>, weights: &WeightVector) -> Result<Self> {
        let r = weights.rank();
        if vectors.ncols() < r || vectors.nrows() != basis.dimension() {
            return Err(Error::Dimension(format!(
                "need {r} vectors of length {}, got {}×{}",
                basis.dimension(),
                vectors.nrows(),
                vectors.ncols()
            )));
        }
        let dim = basis.dimension();
        let mut density = DMatrix::<Complex64>::zeros(dim, dim);
        for (j, w) in weights.to_f64().into_iter().enumerate() {
            let v = vectors.column(j);
            density += (v * v.adjoint()) * Complex64::new(w, 0.0);
        }
        Ok(Self {
            basis,
            density,
            weights: Some(weights.clone()),
        })
    }

    /// Arbitrary density matrix; checked for unit trace and Hermiticity.
    pub fn from_density(basis: FockBasis, density: DMatrix<Complex64>) -> Result<Self> {
        if density.nrows() != basis.dimension() || density.ncols() != basis.dimension() {
            return Err(Error::Dimension("density matrix has the wrong size".into()));
        }
        let trace = density.trace();
        if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
            return Err(Error::Normalization(format!("Tr Γ = {trace}")));
        }
        if max_abs(&(&density - density.adjoint())) > HERMITIAN_TOLERANCE {
            return Err(Error::Domain("density matrix is not Hermitian".into()));
        }
        Ok(Self {
            basis,
            density,
            weights: None,
        })
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn density(&self) -> &DMatrix<Complex64> {
        &self.density
    }

    pub fn weights(&self) -> Option<&WeightVector> {
        self.weights.as_ref()
    }

    /// `Tr[Γ A]`.
    pub fn expectation(&self, op: &ManyBodyOperator) -> f64 {
        (&self.density * op.matrix()).trace().re
    }
}

/// Result of [`gok_minimizer`].
#[derive(Debug, Clone)]
pub struct GokMinimizer {
    pub state: ManyBodyState,
    /// `E_w = Σ_j w_j E_j`.
    pub energy: f64,
    /// The `r + 1` lowest levels (fewer if the sector is smaller).
    pub levels: Vec<f64>,
    /// Some weighted level, or the first unweighted one, is degenerate with
    /// a neighbour; the eigenvector choice then follows
    /// [`ManyBodyOperator::eigensystem`]'s canonical order.
    pub degenerate: bool,
}

pub fn gok_minimizer(h: &ManyBodyOperator, weights: &WeightVector) -> Result<GokMinimizer> {
    let r = weights.rank();
    let dim = h.basis().dimension();
    if r > dim {
        return Err(Error::Domain(format!(
            "rank {r} exceeds the sector dimension {dim}"
        )));
    }
    let eig = h.eigensystem();
    let wf = weights.to_f64();
    let energy = wf.iter().zip(&eig.energies).map(|(w, e)| w * e).sum();
    let levels: Vec<f64> = eig.energies.iter().take(r + 1).copied().collect();
    let degenerate = levels
        .windows(2)
        .any(|p| p[1] - p[0] < DEGENERACY_TOLERANCE);
    let state = ManyBodyState::ensemble(h.basis().clone(), &eig.vectors, weights)?;
    Ok(GokMinimizer {
        state,
        energy,
        levels,
        degenerate,
    })
}

/// `γ_{pq} = Tr[Γ a†_q a_p]`.
#[derive(Debug, Clone)]
pub struct OneParticleRdm {
    matrix: DMatrix<Complex64>,
    particles: usize,
}

pub fn reduce_1rdm(state: &ManyBodyState) -> OneParticleRdm {
    let basis = state.basis();
    let d = basis.modes() as usize;
    let g = state.density();
    let mut gamma = DMatrix::<Complex64>::zeros(d, d);
    for beta in 0..basis.dimension() {
        for p in 0..d {
            for q in 0..d {
                if let Some((alpha, amp)) = basis.hop(beta, p, q) {
                    gamma[(p, q)] += g[(beta, alpha)] * amp;
                }
            }
        }
    }
    OneParticleRdm {
        matrix: gamma,
        particles: basis.particles(),
    }
}

impl OneParticleRdm {
    pub fn new(matrix: DMatrix<Complex64>, particles: usize) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension("1RDM must be square".into()));
        }
        let trace = matrix.trace().re;
        if (trace - particles as f64).abs() > 1e-10 {
            return Err(Error::Normalization(format!("Tr γ = {trace}, expected {particles}")));
        }
        Ok(Self { matrix, particles })
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Natural occupation numbers, decreasing.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut values: Vec<f64> = self
            .matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Site (orbital) occupations `γ_{pp}`.
    pub fn diagonal(&self) -> Vec<f64> {
        self.matrix.diagonal().iter().map(|z| z.re).collect()
    }
}

/// Total energy of a configuration under one-particle energies `h`.
fn configuration_energy(c: &Configuration, h: &[f64]) -> f64 {
    c.indices().iter().map(|&i| h[i as usize - 1]).sum()
}

/// Strictly increasing `h` with pairwise distinct configuration energies
/// (gap ≥ `DEGENERACY_TOLERANCE`).
pub fn check_generic_energies(h: &[f64], particles: usize) -> Result<()> {
    if h.windows(2).any(|p| p[1] - p[0] < DEGENERACY_TOLERANCE) {
        return Err(Error::Degeneracy(format!(
            "one-particle energies must be strictly increasing: {h:?}"
        )));
    }
    let mut energies: Vec<f64> = all_configurations(particles, h.len() as u32)?
        .iter()
        .map(|c| configuration_energy(c, h))
        .collect();
    energies.sort_by(f64::total_cmp);
    if energies.windows(2).any(|p| p[1] - p[0] < DEGENERACY_TOLERANCE) {
        return Err(Error::Degeneracy(format!(
            "two configurations share an energy for h = {h:?}"
        )));
    }
    Ok(())
}

/// Uniform `[0, 1)` energies, sorted, resampled until generic.
pub fn sample_generic_energies<R: Rng + ?Sized>(modes: u32, particles: usize, rng: &mut R) -> Result<Vec<f64>> {
    for _ in 0..10_000 {
        let mut h: Vec<f64> = (0..modes).map(|_| rng.random::<f64>()).collect();
        h.sort_by(f64::total_cmp);
        if check_generic_energies(&h, particles).is_ok() {
            return Ok(h);
        }
    }
    Err(Error::Degeneracy("no generic h found in 10000 draws".into()))
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexReport {
    pub energies: Vec<f64>,
    /// Natural occupation numbers of the minimizer, decreasing.
    pub spectrum: Vec<f64>,
    /// Lineup formed by the `r` lowest configurations under `h`.
    pub lineup: Vec<Configuration>,
    /// Vertex index matched within tolerance, if any.
    pub matched_vertex: Option<usize>,
    /// The matched vertex is the one generated by `lineup`.
    pub lineup_consistent: bool,
    /// Smallest max-norm distance between the spectrum and a sorted vertex.
    pub deviation: f64,
}

impl VertexReport {
    pub fn hit(&self) -> bool {
        self.matched_vertex.is_some() && self.lineup_consistent
    }
}

/// `h ↦ Γ_w ↦ γ_w ↦ spec(γ_w)` for the non-interacting Hamiltonian, compared
/// against the vertices of `polytope` (which fixes `N`, `d` and `w`).
pub fn verify_vertex_sequence_in(polytope: &SpectralPolytope, h: &[f64]) -> Result<VertexReport> {
    let (n, d) = (polytope.particles(), polytope.orbitals());
    if h.len() != d as usize {
        return Err(Error::Dimension(format!("h has {} entries, d = {d}", h.len())));
    }
    check_generic_energies(h, n)?;
    let op = build_noninteracting(h, n)?;
    let gok = gok_minimizer(&op, polytope.weights())?;
    let spectrum = reduce_1rdm(&gok.state).spectrum();

    let mut by_energy: Vec<&Configuration> = op.basis().configurations().iter().collect();
    by_energy.sort_by(|a, b| configuration_energy(a, h).total_cmp(&configuration_energy(b, h)));
    let r = polytope.weights().rank();
    let lineup: Vec<Configuration> = by_energy[..r].iter().map(|c| (*c).clone()).collect();
    let expected = Lineup::new(lineup.clone())?;
    let lineup_id = polytope.lineups().iter().position(|l| *l == expected);

    let mut best: Option<(usize, f64)> = None;
    for (k, v) in polytope.sorted_vertices().iter().enumerate() {
        let dev = v
            .iter()
            .zip(&spectrum)
            .map(|(x, y)| (to_f64(x) - y).abs())
            .fold(0.0, f64::max);
        if best.is_none_or(|(_, b)| dev < b) {
            best = Some((k, dev));
        }
    }
    let (k, deviation) = best.expect("polytope has a vertex");
    let matched_vertex = (deviation <= VERTEX_TOLERANCE).then_some(k);
    let lineup_consistent = match (matched_vertex, lineup_id) {
        (Some(k), Some(id)) => polytope.vertices()[k].lineup_ids().contains(&id),
        _ => false,
    };
    Ok(VertexReport {
        energies: h.to_vec(),
        spectrum,
        lineup,
        matched_vertex,
        lineup_consistent,
        deviation,
    })
}

pub fn verify_vertex_sequence(h: &[f64], particles: usize, weights: &WeightVector) -> Result<VertexReport> {
    let polytope = SpectralPolytope::build(particles, h.len() as u32, weights)?;
    verify_vertex_sequence_in(&polytope, h)
}

#[derive(Debug, Clone, Serialize)]
pub struct SchurHornReport {
    pub diagonal: Vec<f64>,
    pub spectrum: Vec<f64>,
    /// `diag(γ) ≺ spec(γ)` within the tolerance.
    pub diagonal_majorized: bool,
    pub spectrum_passes: bool,
    pub diagonal_passes: bool,
}

impl SchurHornReport {
    /// Majorization holds, and the diagonal passes whenever the spectrum does.
    pub fn consistent(&self) -> bool {
        self.diagonal_majorized && (!self.spectrum_passes || self.diagonal_passes)
    }
}

/// Float evaluation of a halfspace system; inequalities may be violated by
/// at most `tol`, normalization off by at most `tol`.
pub fn passes_system_f64(system: &HalfspaceSystem, values: &[f64], tol: f64) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    system.constraints().iter().all(|c| {
        let lhs: f64 = c
            .coefficients
            .iter()
            .zip(&sorted)
            .map(|(a, x)| to_f64(a) * x)
            .sum();
        let bound = to_f64(&c.bound);
        match c.kind {
            ConstraintKind::Inequality => lhs <= bound + tol,
            ConstraintKind::Equality => {
                let total: f64 = sorted.iter().sum();
                (total - bound).abs() <= tol
            }
        }
    })
}

/// Schur–Horn transfer of a halfspace system from `spec(γ)` to `diag(γ)`.
pub fn schur_horn_check(gamma: &OneParticleRdm, system: &HalfspaceSystem) -> SchurHornReport {
    const TOL: f64 = 1e-10;
    let diagonal = gamma.diagonal();
    let spectrum = gamma.spectrum();
    let diagonal_majorized = majorizes_f64(&spectrum, &diagonal, TOL).unwrap_or(false);
    SchurHornReport {
        spectrum_passes: passes_system_f64(system, &spectrum, TOL),
        diagonal_passes: passes_system_f64(system, &diagonal, TOL),
        diagonal,
        spectrum,
        diagonal_majorized,
    }
}

/// `(A + A†)/2` with standard complex Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let a = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    (&a + a.adjoint()) * Complex64::new(0.5, 0.0)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `dim × cols` matrix with orthonormal columns (Gram–Schmidt on Gaussian
/// vectors), i.e. the first columns of a Haar-random unitary.
pub fn random_isometry<R: Rng + ?Sized>(dim: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    assert!(cols <= dim);
    let mut u = DMatrix::<Complex64>::zeros(dim, cols);
    let mut c = 0;
    while c < cols {
        let mut v = nalgebra::DVector::from_fn(dim, |_, _| gaussian(rng));
        // Two passes keep orthogonality at machine precision.
        for _ in 0..2 {
            for k in 0..c {
                let uk = u.column(k);
                let overlap = uk.dotc(&v);
                v -= uk * overlap;
            }
        }
        let norm = v.norm();
        if norm < 1e-8 {
            continue;
        }
        u.set_column(c, &(v / Complex64::new(norm, 0.0)));
        c += 1;
    }
    u
}

/// `Tr[H U diag(w) U†] = Σ_j w_j ⟨u_j|H|u_j⟩` over the columns of `u`.
pub fn ensemble_energy(h: &DMatrix<Complex64>, u: &DMatrix<Complex64>, weights: &[f64]) -> f64 {
    weights
        .iter()
        .enumerate()
        .map(|(j, w)| {
            let col = u.column(j);
            w * (col.adjoint() * h * col)[(0, 0)].re
        })
        .sum()
}

/// `Σ_j w_j E_j` over the ascending spectrum of a Hermitian matrix.
pub fn weighted_ground_energy(h: &DMatrix<Complex64>, weights: &[f64]) -> f64 {
    let mut e: Vec<f64> = h.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    weights.iter().zip(&e).map(|(w, x)| w * x).sum()
}

/// Distance of the minimizer's spectrum from the boundary of `Σ(w)`,
/// measured by the membership slack (zero on the boundary).
pub fn boundary_slack(polytope: &SpectralPolytope, spectrum: &[f64]) -> Result<f64> {
    let s = crate::spectrum::Spectrum::from_f64(spectrum, polytope.particles(), 10_000_000_000)?;
    let m = polytope.contains(&s)?;
    Ok(to_f64(&m.slack))
}
