//! Double description method (Motzkin et al.) on integer data.
//!
//! Computes the extreme rays of a pointed polyhedral cone
//! `{ y : a_i · y ≥ 0 }` by inserting one constraint at a time and combining
//! adjacent rays across the new hyperplane. Rays are kept as primitive
//! integer vectors so the arithmetic stays exact and small. Adjacency uses
//! the combinatorial test on zero sets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Debug, Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// Bitset over constraint indices where `a_i · y = 0`.
    zeros: Vec<u64>,
}

fn bit_words(m: usize) -> usize {
    m.div_ceil(64).max(1)
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd; the sign is kept.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Integer vector on the same ray as a rational one (positive scaling).
pub fn integer_ray(v: &[Q]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    make_primitive(&mut out);
    out
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Inverse of a square rational matrix, `None` if singular.
fn inverse(rows: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Extreme rays of `{ y ∈ ℝ^n : a_i · y ≥ 0 }`. The constraint matrix
/// must have rank `n` (pointed cone). Output order is deterministic for a
/// given input order.
pub fn extreme_rays(constraints: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let m = constraints.len();
    let n = constraints
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Domain("no constraints".into()))?;
    if constraints.iter().any(|c| c.len() != n) {
        return Err(Error::Dimension("ragged constraint matrix".into()));
    }
    let as_q: Vec<Vec<Q>> = constraints
        .iter()
        .map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect();

    // Greedy choice of n independent rows for the initial simplicial cone.
    let mut basis: Vec<usize> = Vec::with_capacity(n);
    for i in 0..m {
        let mut trial: Vec<Vec<Q>> = basis.iter().map(|&b| as_q[b].clone()).collect();
        trial.push(as_q[i].clone());
        if rank(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == n {
                break;
            }
        }
    }
    if basis.len() < n {
        return Err(Error::Domain(format!(
            "cone is not pointed: constraint rank {} < {n}",
            basis.len()
        )));
    }
    let b_rows: Vec<Vec<Q>> = basis.iter().map(|&b| as_q[b].clone()).collect();
    let inv = inverse(&b_rows).expect("independent rows");

    let words = bit_words(m);
    let mut rays: Vec<Ray> = (0..n)
        .map(|k| {
            let column: Vec<Q> = inv.iter().map(|row| row[k].clone()).collect();
            let coords = integer_ray(&column);
            let mut zeros = vec![0u64; words];
            for (pos, &b) in basis.iter().enumerate() {
                if pos != k {
                    set_bit(&mut zeros, b);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for i in (0..m).filter(|i| !basis.contains(i)) {
        let a = &constraints[i];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.coords)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        if minus.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if values[k].is_zero() {
                    set_bit(&mut r.zeros, i);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for (k, r) in rays.iter().enumerate() {
            if !values[k].is_negative() {
                let mut kept = r.clone();
                if values[k].is_zero() {
                    set_bit(&mut kept.zeros, i);
                }
                next.push(kept);
            }
        }
        for &p in &plus {
            for &q in &minus {
                let common = intersect(&rays[p].zeros, &rays[q].zeros);
                if popcount(&common) + 2 < n {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == q || !is_subset(&common, &r.zeros)
                });
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&values[p], &values[q]);
                let mut coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yq, yp)| vp * yq - vq * yp)
                    .collect();
                make_primitive(&mut coords);
                let mut zeros = common;
                set_bit(&mut zeros, i);
                next.push(Ray { coords, zeros });
            }
        }
        rays = next;
    }
    Ok(rays.into_iter().map(|r| r.coords).collect())
}
