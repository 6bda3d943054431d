//! Simultaneous root finding (Aberth–Ehrlich) for rational polynomials.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::RatPoly;

const MAX_ITERATIONS: usize = 2000;
const ANGLE_OFFSET: f64 = 0.4;
/// Relative floor of the multiplicity clustering threshold.
const CLUSTER_REL: f64 = 1e-6;

/// A root with its multiplicity and `|p(root)|` on the monic normalization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexRoot {
    #[serde(serialize_with = "crate::serial::float")]
    pub re: f64,
    #[serde(serialize_with = "crate::serial::float")]
    pub im: f64,
    pub multiplicity: usize,
    #[serde(serialize_with = "crate::serial::float")]
    pub residual: f64,
}

impl ComplexRoot {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn horner(a: &[f64], z: Complex64) -> Complex64 {
    a.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `p(z)`, `p'(z)` and the running-error bound `sum |a_j| |z|^j`.
fn eval_with_bound(a: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let r = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    for &c in a.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * r + c.abs();
    }
    (p, dp, bound)
}

fn rounding_floor(bound: f64, degree: usize) -> f64 {
    4.0 * f64::EPSILON * bound * (degree as f64 + 1.0)
}

/// Finds all `deg p` roots of `p`, grouping numerically coincident roots.
///
/// Exact zero roots are split off before iterating. Starting points lie on a
/// circle of radius `|a_0|^{1/n}` (monic `p`) with a fixed angular offset, so
/// the result is a deterministic function of `(p, tol)`. Roots are sorted by
/// real then imaginary part.
pub fn find_roots(p: &RatPoly, tol: f64) -> Result<Vec<ComplexRoot>> {
    let val = p.valuation().ok_or(Error::ZeroDivisor)?;
    let mut out = Vec::new();
    if val > 0 {
        out.push(ComplexRoot {
            re: 0.0,
            im: 0.0,
            multiplicity: val,
            residual: 0.0,
        });
    }
    let reduced = p.shift_down(val).monic();
    let n = reduced.degree().expect("nonzero");
    if n > 0 {
        let a = reduced.to_f64();
        let approx = aberth(&a)?;
        out.extend(cluster_and_polish(&reduced, &a, approx, tol));
    }
    out.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(out)
}

/// Plain Aberth–Ehrlich iteration on monic `a` (lowest degree first).
fn aberth(a: &[f64]) -> Result<Vec<Complex64>> {
    let n = a.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-a[0], 0.0)]);
    }
    let radius = a[0].abs().powf(1.0 / n as f64).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / n as f64 + ANGLE_OFFSET;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];

    for _ in 0..MAX_ITERATIONS {
        for j in 0..n {
            if done[j] {
                continue;
            }
            let (pz, dpz, bound) = eval_with_bound(a, z[j]);
            if pz.norm() <= rounding_floor(bound, n) {
                done[j] = true;
                continue;
            }
            let ratio = pz / dpz;
            let repulsion: Complex64 = (0..n)
                .filter(|&l| l != j)
                .map(|l| (z[j] - z[l]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                // p'(z) vanished or two iterates collided; nudge off the spot
                z[j] += Complex64::new(radius * 1e-3, radius * 1e-3);
                continue;
            }
            z[j] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[j].norm() {
                done[j] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::RootFindingDiverged {
        iterations: MAX_ITERATIONS,
        best: z.iter().map(|c| (c.re, c.im)).collect(),
    })
}

struct Cluster {
    members: Vec<Complex64>,
}

impl Cluster {
    fn centroid(&self) -> Complex64 {
        self.members.iter().sum::<Complex64>() / self.members.len() as f64
    }
}

fn cluster_threshold(m: usize, tol: f64, at: Complex64) -> f64 {
    CLUSTER_REL.max(tol.powf(1.0 / m as f64)) * at.norm().max(1.0)
}

/// Merges nearest clusters while they sit within `tol^(1/m)` of each other,
/// then refines each multiple root as a simple root of `p^(m-1)`.
fn cluster_and_polish(
    p: &RatPoly,
    a: &[f64],
    approx: Vec<Complex64>,
    tol: f64,
) -> Vec<ComplexRoot> {
    let mut clusters: Vec<Cluster> = approx
        .into_iter()
        .map(|z| Cluster { members: vec![z] })
        .collect();
    loop {
        let mut best: Option<(usize, usize, f64)> = None;
        for x in 0..clusters.len() {
            for y in x + 1..clusters.len() {
                let dist = (clusters[x].centroid() - clusters[y].centroid()).norm();
                if best.is_none_or(|(_, _, bd)| dist < bd) {
                    best = Some((x, y, dist));
                }
            }
        }
        let Some((x, y, dist)) = best else { break };
        let m = clusters[x].members.len() + clusters[y].members.len();
        if dist > cluster_threshold(m, tol, clusters[x].centroid()) {
            break;
        }
        let merged = clusters.swap_remove(y);
        clusters[x].members.extend(merged.members);
    }

    clusters
        .into_iter()
        .map(|c| {
            let m = c.members.len();
            let centroid = c.centroid();
            let z = if m > 1 {
                polish_multiple(p, m, centroid, &c.members)
            } else {
                centroid
            };
            let (pz, _, _) = eval_with_bound(a, z);
            ComplexRoot {
                re: z.re,
                im: z.im,
                multiplicity: m,
                residual: pz.norm(),
            }
        })
        .collect()
}

fn polish_multiple(p: &RatPoly, m: usize, start: Complex64, members: &[Complex64]) -> Complex64 {
    let mut deriv = p.clone();
    for _ in 1..m {
        deriv = deriv.derivative();
    }
    let da = deriv.to_f64();
    let spread = members
        .iter()
        .map(|z| (z - start).norm())
        .fold(0.0, f64::max);
    let mut z = start;
    for _ in 0..50 {
        let (pz, dpz, _) = eval_with_bound(&da, z);
        let step = pz / dpz;
        if !step.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 2.0 * f64::EPSILON * z.norm().max(1.0) {
            break;
        }
    }
    if (z - start).norm() <= 10.0 * spread + 1e-12 {
        z
    } else {
        start
    }
}

/// `|p(z)|` on the monic normalization of `p`.
pub fn monic_residual(p: &RatPoly, z: Complex64) -> f64 {
    horner(&p.monic().to_f64(), z).norm()
}
