use bosonic_polytope::config::configuration_count;
use bosonic_polytope::oracle::{
    boundary_slack, build_bose_hubbard, build_noninteracting, gok_minimizer, max_abs,
    random_hermitian, reduce_1rdm, weighted_ground_energy, HubbardParameters,
};
use bosonic_polytope::polytope::SpectralPolytope;
use bosonic_polytope::rational::frac;
use bosonic_polytope::weights::WeightVector;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn weights(xs: &[(i64, i64)]) -> WeightVector {
    WeightVector::new(xs.iter().map(|&(a, b)| frac(a, b)).collect()).unwrap()
}

fn random_hubbard(rng: &mut ChaCha8Rng, sites: usize) -> HubbardParameters {
    HubbardParameters {
        hopping: rng.random_range(0.1..2.0),
        interaction: rng.random_range(0.0..8.0),
        potentials: (0..sites).map(|_| rng.random_range(-1.0..1.0)).collect(),
    }
}

#[test]
fn weighted_energy_is_monotone_under_majorization() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // Each entry is majorized by the next.
    let chain = [
        vec![1.0 / 3.0; 3],
        vec![0.5, 0.25, 0.25],
        vec![0.5, 0.5, 0.0],
        vec![0.8, 0.2, 0.0],
        vec![1.0, 0.0, 0.0],
    ];
    for _ in 0..20 {
        let h = random_hermitian(15, &mut rng);
        let energies: Vec<f64> = chain.iter().map(|w| weighted_ground_energy(&h, w)).collect();
        assert!(energies.windows(2).all(|e| e[0] >= e[1] - 1e-12), "{energies:?}");
    }
}

#[test]
fn weighted_energy_is_concave_in_the_hamiltonian() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let w = [0.6, 0.3, 0.1];
    for _ in 0..20 {
        let (a, b) = (random_hermitian(12, &mut rng), random_hermitian(12, &mut rng));
        let t = rng.random_range(0.0..1.0);
        let mix = &a * Complex64::new(t, 0.0) + &b * Complex64::new(1.0 - t, 0.0);
        let lhs = weighted_ground_energy(&mix, &w);
        let rhs = t * weighted_ground_energy(&a, &w) + (1.0 - t) * weighted_ground_energy(&b, &w);
        assert!(lhs >= rhs - 1e-12);
    }
}

#[test]
fn physical_spectra_lie_in_the_polytope() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ws = [
        weights(&[(1, 1)]),
        weights(&[(3, 5), (2, 5)]),
        weights(&[(1, 2), (1, 3), (1, 6)]),
        WeightVector::dyadic(4),
    ];
    for trial in 0..40 {
        let w = &ws[trial % ws.len()];
        let sites = rng.random_range(w.rank().max(2)..=4);
        let n = rng.random_range(w.rank().saturating_sub(1).max(1)..=4);
        let h = build_bose_hubbard(&random_hubbard(&mut rng, sites), n).unwrap();
        let gok = gok_minimizer(&h, w).unwrap();
        let gamma = reduce_1rdm(&gok.state);
        assert!((gamma.trace() - n as f64).abs() < 1e-10);
        let p = SpectralPolytope::build(n, sites as u32, w).unwrap();
        let slack = boundary_slack(&p, &gamma.spectrum()).unwrap();
        assert!(slack > -1e-9, "trial {trial}: slack {slack}");
    }
}

#[test]
fn interaction_moves_spectra_off_the_boundary() {
    // Reported, not asserted beyond U = 0: no quantitative bound is known.
    let w = weights(&[(1, 2), (1, 3), (1, 6)]);
    let p = SpectralPolytope::build(3, 3, &w).unwrap();
    let mut slacks = Vec::new();
    for u in [0.0, 0.05, 0.2, 1.0, 4.0] {
        let params = HubbardParameters {
            hopping: 0.0,
            interaction: u,
            potentials: vec![0.0, 0.37, 0.81],
        };
        let gok = gok_minimizer(&build_bose_hubbard(&params, 3).unwrap(), &w).unwrap();
        let slack = boundary_slack(&p, &reduce_1rdm(&gok.state).spectrum()).unwrap();
        slacks.push((u, slack));
    }
    eprintln!("U vs membership slack: {slacks:?}");
    assert!(slacks[0].1.abs() < 1e-9);
    assert!(slacks.iter().all(|&(_, s)| s > -1e-9));
}

#[test]
fn hubbard_sector_dimensions() {
    for (n, sites) in [(1, 1), (2, 3), (4, 4), (6, 6)] {
        let params = HubbardParameters {
            hopping: 1.0,
            interaction: 2.0,
            potentials: vec![0.0; sites],
        };
        let h = build_bose_hubbard(&params, n).unwrap();
        assert_eq!(h.basis().dimension() as u128, configuration_count(n, sites as u32));
    }
    let params = HubbardParameters {
        hopping: 1.0,
        interaction: 1.0,
        potentials: vec![0.0; 3],
    };
    assert!(build_bose_hubbard(&params, 7).is_err());
}

#[test]
fn degenerate_levels_are_flagged_and_reproducible() {
    // Uniform chain without hopping: all configurations with the same
    // double occupancy share an energy.
    let params = HubbardParameters {
        hopping: 0.0,
        interaction: 1.0,
        potentials: vec![0.0; 3],
    };
    let h = build_bose_hubbard(&params, 2).unwrap();
    let w = weights(&[(2, 3), (1, 3)]);
    let a = gok_minimizer(&h, &w).unwrap();
    let b = gok_minimizer(&h, &w).unwrap();
    assert!(a.degenerate);
    assert_eq!(a.state.density(), b.state.density());
}

#[test]
fn noninteracting_zero_field_is_zero() {
    let h = build_noninteracting(&[0.0; 4], 3).unwrap();
    assert_eq!(max_abs(h.matrix()), 0.0);
    let id = DMatrix::<Complex64>::identity(2, 2);
    assert_eq!(max_abs(&id), 1.0);
}
