//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! print.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bosonic_polytope::halfspace::{analytic_halfspaces, check_system, numeric_facets};
use bosonic_polytope::lineups::count_lineups;
use bosonic_polytope::oracle::{
    build_bose_hubbard, ensemble_energy, gok_minimizer, random_hermitian, random_isometry,
    reduce_1rdm, sample_generic_energies, schur_horn_check, verify_vertex_sequence_in,
    weighted_ground_energy, HubbardParameters,
};
use bosonic_polytope::polytope::{domain_inclusion, SpectralPolytope};
use bosonic_polytope::rational::{frac, q, Q};
use bosonic_polytope::spectrum::Spectrum;
use bosonic_polytope::weights::WeightVector;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn weights(xs: &[(i64, i64)]) -> WeightVector {
    WeightVector::new(xs.iter().map(|&(a, b)| frac(a, b)).collect()).unwrap()
}

/// Uniform point of `{λ ≥ 0, Σλ = N}` on the grid of spacing `N/M`.
fn simplex_point(rng: &mut ChaCha8Rng, d: usize, total: usize) -> Vec<Q> {
    const M: i64 = 1_000_000;
    let mut cuts: Vec<i64> = (0..d - 1).map(|_| rng.random_range(0..=M)).collect();
    cuts.push(0);
    cuts.push(M);
    cuts.sort_unstable();
    cuts.windows(2)
        .map(|w| frac((w[1] - w[0]) * total as i64, M))
        .collect()
}

fn table_counts() -> Outcome {
    const EXPECTED: [u64; 12] = [1, 1, 2, 4, 8, 17, 37, 82, 184, 418, 967, 2278];
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (k, &expected) in EXPECTED.iter().enumerate() {
        let r = k + 1;
        for n in [r.saturating_sub(1).max(1), r] {
            let got = count_lineups(n, r as u32, r).unwrap();
            if got != expected {
                mismatches.push(format!("r={r} N={n}: {got} != {expected}"));
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: mismatches.is_empty() && elapsed < Duration::from_secs(60),
        detail: format!(
            "r=1..12 at N=r-1 and N=r, {:.1}s single-threaded{}",
            elapsed.as_secs_f64(),
            if mismatches.is_empty() { String::new() } else { format!("; {}", mismatches.join(", ")) }
        ),
    }
}

fn table_inequalities() -> Outcome {
    const EXPECTED: [usize; 5] = [1, 2, 3, 5, 8];
    let start = Instant::now();
    let mut got = Vec::new();
    for r in 1..=5 {
        let p = SpectralPolytope::build((r - 1).max(1), r as u32, &WeightVector::dyadic(r)).unwrap();
        got.push(numeric_facets(&p).unwrap().len());
    }
    let calibrated = got[..3] == EXPECTED[..3];
    let elapsed = start.elapsed();
    Outcome {
        pass: calibrated && got == EXPECTED && elapsed < Duration::from_secs(300),
        detail: format!(
            "counts {got:?} vs {EXPECTED:?} (exclusion facets + normalization; calibration r<=3 {}), {:.2}s",
            if calibrated { "ok" } else { "FAILED" },
            elapsed.as_secs_f64()
        ),
    }
}

fn analytic_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    let mut disagreements = 0;
    let mut settings = 0;
    let (mut inside, mut total) = (0usize, 0usize);
    for r in 1..=3 {
        for n in [2usize, 3, 5] {
            for d in [3u32, 4] {
                let w = WeightVector::dyadic(r);
                let p = SpectralPolytope::build(n, d, &w).unwrap();
                let sys = analytic_halfspaces(n, d, &w).unwrap();
                let spectra: Vec<Spectrum> = (0..10_000)
                    .map(|_| Spectrum::new(simplex_point(&mut rng, d as usize, n)).unwrap())
                    .collect();
                for (s, m) in spectra.iter().zip(p.contains_batch(&spectra)) {
                    let m = m.unwrap();
                    total += 1;
                    inside += m.member as usize;
                    if m.member != check_system(&sys, s) {
                        disagreements += 1;
                    }
                }
                settings += 1;
            }
        }
    }
    Outcome {
        pass: disagreements == 0 && total == 180_000,
        detail: format!(
            "{settings} settings x 10^4 spectra, {inside}/{total} inside, {disagreements} disagreements"
        ),
    }
}

fn vertex_sequence() -> Outcome {
    let settings: [(usize, u32, usize); 7] =
        [(2, 3, 2), (3, 3, 3), (3, 4, 3), (3, 4, 4), (4, 4, 4), (4, 5, 4), (4, 5, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (n, d, r) in settings {
        let p = SpectralPolytope::build(n, d, &WeightVector::dyadic(r)).unwrap();
        let mut hits = 0;
        for _ in 0..100 {
            let h = sample_generic_energies(d, n, &mut rng).unwrap();
            let report = verify_vertex_sequence_in(&p, &h).unwrap();
            worst = worst.max(report.deviation);
            hits += report.hit() as usize;
        }
        if hits != 100 {
            failures.push(format!("(N,d,r)=({n},{d},{r}) {hits}/100"));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{} settings x 100 trials, max deviation {worst:.1e}{}",
            settings.len(),
            if failures.is_empty() { ", all hits".to_string() } else { format!("; {}", failures.join(", ")) }
        ),
    }
}

fn gok_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let w = [0.5, 0.3, 0.2];
    let mut worst_gap = f64::INFINITY;
    let mut violations = 0;
    for dim in [10usize, 35, 100] {
        let h = random_hermitian(dim, &mut rng);
        let e_w = weighted_ground_energy(&h, &w);
        let eig = h.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let lowest = DMatrix::from_fn(dim, w.len(), |r, c| eig.eigenvectors[(r, order[c])]);
        for trial in 0..1000 {
            // Every other isometry is a small rotation of the minimizer.
            let u = if trial % 2 == 0 {
                random_isometry(dim, w.len(), &mut rng)
            } else {
                let noise = random_isometry(dim, w.len(), &mut rng);
                (&lowest + noise * Complex64::new(1e-4, 0.0)).qr().q()
            };
            let gap = ensemble_energy(&h, &u, &w) - e_w;
            worst_gap = worst_gap.min(gap);
            if gap < -1e-10 {
                violations += 1;
            }
        }
    }
    Outcome {
        pass: violations == 0,
        detail: format!("3 Hamiltonians (dim 10, 35, 100) x 1000 isometries, min gap {worst_gap:.3e}, {violations} violations"),
    }
}

fn minkowski() -> Outcome {
    let w = weights(&[(1, 2), (3, 10), (1, 5)]);
    let small = SpectralPolytope::build(3, 3, &w).unwrap();
    let lifted = small.minkowski_lift(5).unwrap();
    let direct = SpectralPolytope::build(5, 3, &w).unwrap();
    let as_set = |p: &SpectralPolytope| -> BTreeSet<Vec<Q>> { p.sorted_vertices().into_iter().collect() };
    let same_vertices = as_set(&lifted) == as_set(&direct);

    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let corners = direct.permuted_vertices();
    let (mut disagreements, mut inside) = (0, 0);
    let mut sampled = 0;
    while sampled < 1000 {
        let u = simplex_point(&mut rng, 3, 5);
        let mu: Vec<Q> = if sampled % 2 == 0 {
            u
        } else {
            // Near the boundary: v + s (u − v), s ∈ [−1/5, 1/5].
            let v = corners.choose(&mut rng).unwrap();
            let s = frac(rng.random_range(-200..=200), 1000);
            v.iter().zip(&u).map(|(a, b)| a + &s * (b - a)).collect()
        };
        if mu.iter().any(|x| x < &q(0)) {
            continue;
        }
        sampled += 1;
        let mu = Spectrum::with_total(mu, &q(5)).unwrap();
        let by_rado = direct.contains(&mu).unwrap().member;
        let by_sum = small.minkowski_sum_contains(2, &mu).unwrap();
        inside += by_rado as usize;
        if by_rado != by_sum {
            disagreements += 1;
        }
    }
    Outcome {
        pass: same_vertices && disagreements == 0,
        detail: format!(
            "lifted vertices {} direct; 1000 samples ({inside} inside), {disagreements} disagreements",
            if same_vertices { "==" } else { "!=" }
        ),
    }
}

fn hierarchy_and_inclusion() -> Outcome {
    let two = analytic_halfspaces(3, 3, &weights(&[(3, 5), (2, 5)])).unwrap();
    let three = analytic_halfspaces(3, 3, &weights(&[(1, 2), (1, 3), (1, 6)])).unwrap();
    let verbatim = two.inequalities().all(|c| {
        three.inequalities().any(|d| {
            d.normal() == c.normal()
                && c.weight_forms
                    .iter()
                    .any(|f| d.weight_forms.iter().any(|g| f.same_dependence(g)))
        })
    });

    let chain = [
        weights(&[(1, 3), (1, 3), (1, 3)]),
        weights(&[(1, 2), (1, 4), (1, 4)]),
        weights(&[(1, 2), (1, 2)]),
        weights(&[(3, 5), (2, 5)]),
        weights(&[(4, 5), (1, 5)]),
        weights(&[(1, 1)]),
    ];
    let mut checks = 0;
    let mut failed = Vec::new();
    for i in 0..chain.len() {
        for j in i..chain.len() {
            checks += 1;
            if !matches!(domain_inclusion(&chain[i], &chain[j], 2, 3), Ok(true)) {
                failed.push(format!("Σ({}) ⊄ Σ({})", chain[i], chain[j]));
            }
        }
    }
    Outcome {
        pass: verbatim && failed.is_empty(),
        detail: format!(
            "r=2 inequality in r=3 system: {}; {checks} nested-domain checks at (N,d)=(2,3), {} failed",
            if verbatim { "yes" } else { "no" },
            failed.len()
        ),
    }
}

fn random_generic_weights(rng: &mut ChaCha8Rng, r: usize) -> WeightVector {
    loop {
        let mut raw: Vec<i64> = (0..r).map(|_| rng.random_range(1..=40)).collect();
        raw.sort_unstable_by(|a, b| b.cmp(a));
        if raw.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let sum: i64 = raw.iter().sum();
        return WeightVector::new(raw.iter().map(|&x| frac(x, sum)).collect()).unwrap();
    }
}

fn schur_horn() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let (mut instances, mut majorized, mut spectrum_passes, mut consistent) = (0, 0, 0, 0);
    while instances < 50 {
        let n = rng.random_range(2..=4usize);
        let sites = rng.random_range(2..=4usize);
        let r = rng.random_range(1..=3usize.min(sites));
        let params = HubbardParameters {
            hopping: rng.random_range(0.1..2.0),
            interaction: rng.random_range(0.0..8.0),
            potentials: (0..sites).map(|_| rng.random_range(-1.0..1.0)).collect(),
        };
        let w = random_generic_weights(&mut rng, r);
        let h = build_bose_hubbard(&params, n).unwrap();
        let gok = gok_minimizer(&h, &w).unwrap();
        if gok.degenerate {
            continue;
        }
        instances += 1;
        let gamma = reduce_1rdm(&gok.state);
        let sys = analytic_halfspaces(n, sites as u32, &w).unwrap();
        let report = schur_horn_check(&gamma, &sys);
        majorized += report.diagonal_majorized as usize;
        spectrum_passes += report.spectrum_passes as usize;
        consistent += report.consistent() as usize;
    }
    Outcome {
        pass: majorized == 50 && consistent == 50,
        detail: format!(
            "50 Bose-Hubbard instances: diag ≺ spec in {majorized}, spectrum passes in {spectrum_passes}, diagonal follows in {consistent}"
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 lineup counts", table_counts),
        ("2 inequality counts", table_inequalities),
        ("3 analytic/LP equivalence", analytic_equivalence),
        ("4 vertex-sequence oracle", vertex_sequence),
        ("5 GOK bound", gok_bound),
        ("6 Minkowski relation", minkowski),
        ("7 hierarchy and inclusion", hierarchy_and_inclusion),
        ("8 Schur-Horn transfer", schur_horn),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        println!(
            "criterion {name}: {} ({}) [{:.1}s]",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
        failures += (!outcome.pass) as usize;
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
