//! Plot data for three-orbital polytopes in the `(λ_1^↓, λ_2^↓)` plane.
//! The third occupation number is implied by normalization.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::halfspace::ordered_sector;
use crate::polytope::SpectralPolytope;
use crate::rational::{q, Q};
use crate::weights::WeightVector;

pub type Point2 = [Q; 2];

fn cross(o: &Point2, a: &Point2, b: &Point2) -> Q {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Counter-clockwise hull (Andrew's monotone chain) without collinear
/// points, starting from the lexicographically smallest point.
pub fn convex_hull_2d(points: &[Point2]) -> Vec<Point2> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn require_three_orbitals(p: &SpectralPolytope) -> Result<()> {
    if p.orbitals() != 3 {
        return Err(Error::Precondition(format!(
            "plane figures need d = 3, got d = {}",
            p.orbitals()
        )));
    }
    Ok(())
}

/// Boundary loop of `Σ^↓(w)` as `(λ_1, λ_2)` pairs.
pub fn sigma_loop(p: &SpectralPolytope) -> Result<Vec<Point2>> {
    require_three_orbitals(p)?;
    let sector = ordered_sector(p)?;
    let points: Vec<Point2> = sector
        .vertices
        .iter()
        .map(|v| [v[0].clone(), v[1].clone()])
        .collect();
    Ok(convex_hull_2d(&points))
}

/// Named loops for one figure panel.
#[derive(Debug, Clone)]
pub struct FigureLoops {
    pub loops: Vec<(String, Vec<Point2>)>,
}

impl FigureLoops {
    /// `shape,vertex,lambda1,lambda2` with decimal values, then the exact
    /// rationals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("shape,vertex,lambda1,lambda2,lambda1_exact,lambda2_exact\n");
        for (name, points) in &self.loops {
            for (k, p) in points.iter().enumerate() {
                out.push_str(&format!(
                    "{name},{k},{},{},{},{}\n",
                    crate::rational::to_f64(&p[0]),
                    crate::rational::to_f64(&p[1]),
                    p[0],
                    p[1]
                ));
            }
        }
        out
    }
}

/// `Σ^↓(w)` at `(N, 3)`.
pub fn sigma_figure(particles: usize, weights: &WeightVector) -> Result<FigureLoops> {
    let p = SpectralPolytope::build(particles, 3, weights)?;
    Ok(FigureLoops {
        loops: vec![("sigma".into(), sigma_loop(&p)?)],
    })
}

/// `Σ_N^↓`, the simplex `C = conv{δ e_k}` (ordered part) with
/// `δ = N' − N`, and `Σ_{N'}^↓`.
pub fn minkowski_figure(particles: usize, new_particles: usize, weights: &WeightVector) -> Result<FigureLoops> {
    if new_particles <= particles {
        return Err(Error::Domain(format!(
            "need N' > N, got N = {particles}, N' = {new_particles}"
        )));
    }
    let small = SpectralPolytope::build(particles, 3, weights)?;
    let large = small.minkowski_lift(new_particles)?;
    let delta = q((new_particles - particles) as i64);
    let simplex = vec![
        [delta.clone(), Q::zero()],
        [&delta / q(2), &delta / q(2)],
        [&delta / q(3), &delta / q(3)],
    ];
    Ok(FigureLoops {
        loops: vec![
            (format!("sigma_{particles}"), sigma_loop(&small)?),
            ("simplex".into(), convex_hull_2d(&simplex)),
            (format!("sigma_{new_particles}"), sigma_loop(&large)?),
        ],
    })
}
