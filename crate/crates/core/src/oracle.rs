//! Independent iterative polynomial root finder (simultaneous Aberth–Ehrlich
//! iteration with Newton polish), used to cross-check the closed-form
//! solvers, plus multiset root comparison by bipartite matching.
//!
//! The finder is deterministic: initial guesses are placed on a circle whose
//! phase offset comes from a fixed-seed ChaCha stream, so identical inputs
//! give bit-identical outputs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Poly1, RootSet, CLUSTER_TOL};

/// Tuning knobs for the iterative root finder.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Maximum simultaneous-iteration sweeps before giving up.
    pub max_iters: usize,
    /// Per-root relative correction threshold for declaring convergence.
    pub tol: f64,
    /// Distance within which converged roots merge into one multiple root.
    pub cluster_tol: f64,
    /// Seed for the phase of the initial guesses.
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_iters: 200,
            tol: 1e-13,
            cluster_tol: CLUSTER_TOL,
            seed: 0x0A1B_2C3D,
        }
    }
}

/// Backward-stable residual scale at `z`: `Σ |a_i| |z|^i`, floored at the
/// largest coefficient magnitude so the criterion is meaningful near 0.
fn residual_scale(p: &Poly1, z: Complex64) -> f64 {
    let zm = z.norm();
    let mut acc = 0.0;
    let mut pw = 1.0;
    for c in p.coeffs() {
        acc += c.norm() * pw;
        pw *= zm;
    }
    acc.max(p.max_coeff_norm())
}

/// All complex roots of `p`, clustered into multiplicities.
///
/// Exact zero roots (vanishing low-order coefficients) are factored out
/// first; the remaining roots come from Aberth–Ehrlich iteration followed by
/// a short Newton polish. Fails with [`Error::NonConvergence`] only if the
/// sweeps stall *and* some candidate's residual stays far above the
/// backward-stable floor.
pub fn all_roots(p: &Poly1, cfg: &OracleConfig) -> Result<RootSet> {
    let degree = p.degree()?;
    if degree == 0 {
        return Ok(RootSet { roots: Vec::new() });
    }

    // Factor out exact roots at the origin.
    let mut low = 0;
    while low < degree && p.coeff(low).norm() == 0.0 {
        low += 1;
    }
    let reduced = Poly1::new(p.coeffs()[low..].to_vec());
    let n = degree - low;

    let mut values: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); low];
    if n > 0 {
        values.extend(merge_multiple_roots(&reduced, aberth(&reduced, n, cfg)?, cfg));
    }
    Ok(RootSet::from_values(&values, cfg.cluster_tol, p))
}

/// Group approximations of one multiple root and replace each group by its
/// mean. A root of multiplicity m is resolved only to ~eps^(1/m), which can
/// exceed the clustering tolerance; the Newton correction `p/p'` blows up
/// near such clusters, so disks of radius `2n·|p/p'|` around each candidate
/// overlap exactly when the candidates share a root. The group mean cancels
/// the symmetric perturbation and is far more accurate than any member.
fn merge_multiple_roots(p: &Poly1, z: Vec<Complex64>, cfg: &OracleConfig) -> Vec<Complex64> {
    let n = z.len();
    let dp = p.derivative();
    let radii: Vec<f64> = z
        .iter()
        .map(|&zk| {
            let dpz = dp.eval(zk).norm();
            let raw = if dpz == 0.0 {
                0.0
            } else {
                2.0 * n as f64 * p.eval(zk).norm() / dpz
            };
            // Cap so an accidentally tiny derivative between two genuinely
            // distinct roots cannot merge them.
            (cfg.cluster_tol * 0.5).max(raw.min(0.01 * (1.0 + zk.norm())))
        })
        .collect();

    // Union-find over overlapping disks.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (z[i] - z[j]).norm() <= radii[i] + radii[j] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut out = Vec::with_capacity(n);
    for members in groups.values() {
        let mean = members.iter().map(|&i| z[i]).sum::<Complex64>() / members.len() as f64;
        out.extend(std::iter::repeat_n(mean, members.len()));
    }
    out
}

fn aberth(p: &Poly1, n: usize, cfg: &OracleConfig) -> Result<Vec<Complex64>> {
    let dp = p.derivative();
    let lead = p.coeff(n);

    // Cauchy-style inclusion radius: 1 + max |a_i / a_n|.
    let radius = 1.0
        + (0..n)
            .map(|i| (p.coeff(i) / lead).norm())
            .fold(0.0, f64::max);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            // Slightly irrational angular stride discourages symmetric
            // stalemates on polynomials with rotational symmetry.
            let theta = phase + std::f64::consts::TAU * (k as f64 + 0.35) / n as f64;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut converged = vec![false; n];
    for iteration in 0..cfg.max_iters {
        let mut all_done = true;
        for k in 0..n {
            if converged[k] {
                continue;
            }
            let pz = p.eval(z[k]);
            if pz.norm() <= 4.0 * f64::EPSILON * residual_scale(p, z[k]) {
                converged[k] = true;
                continue;
            }
            let dpz = dp.eval(z[k]);
            let w = if dpz.norm() == 0.0 {
                // Sitting exactly on a critical point: nudge off it.
                Complex64::new(cfg.tol.sqrt(), cfg.tol.sqrt())
            } else {
                pz / dpz
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * repulsion;
            let correction = if denom.norm() < 1e-300 { w } else { w / denom };
            z[k] -= correction;
            if correction.norm() > cfg.tol * (1.0 + z[k].norm()) {
                all_done = false;
            }
        }
        if all_done || converged.iter().all(|&c| c) {
            break;
        }
        if iteration + 1 == cfg.max_iters {
            // Stalled sweeps are acceptable if every candidate already sits
            // at a backward-stable residual (multiple roots stall quadratic
            // convergence without being wrong).
            let worst = z
                .iter()
                .map(|&zk| p.eval(zk).norm() / residual_scale(p, zk))
                .fold(0.0, f64::max);
            if worst > 1e-8 {
                return Err(Error::NonConvergence {
                    iterations: cfg.max_iters,
                });
            }
        }
    }

    // Final polish sharpens simple roots to full precision.
    Ok(z.into_iter().map(|zk| polish_root(p, zk, 16).0).collect())
}

/// Newton-polish a root candidate. Returns the improved value and a flag
/// that is `true` if the iteration *stalled*: it neither reached a
/// backward-stable residual nor kept shrinking its steps.
pub fn polish_root(p: &Poly1, start: Complex64, max_iters: usize) -> (Complex64, bool) {
    let dp = p.derivative();
    let mut z = start;
    let mut best = z;
    let mut best_res = p.eval(z).norm();
    for _ in 0..max_iters {
        let pz = p.eval(z);
        if pz.norm() <= 4.0 * f64::EPSILON * residual_scale(p, z) {
            return (z, false);
        }
        let dpz = dp.eval(z);
        if dpz.norm() == 0.0 {
            break;
        }
        z -= pz / dpz;
        let res = p.eval(z).norm();
        if res < best_res {
            best = z;
            best_res = res;
        }
    }
    let stalled = best_res > 1e-8 * residual_scale(p, best);
    (best, stalled)
}

/// Whether two root multisets agree within `tol`, element for element.
///
/// Builds the bipartite graph of pairs closer than `tol` and checks for a
/// perfect matching by augmenting paths, so repeated values on either side
/// are handled correctly.
pub fn roots_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let adjacency: Vec<Vec<usize>> = a
        .iter()
        .map(|&ra| {
            b.iter()
                .enumerate()
                .filter(|(_, &rb)| (ra - rb).norm() <= tol)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut matched_b: Vec<Option<usize>> = vec![None; n];

    fn augment(
        i: usize,
        adjacency: &[Vec<usize>],
        matched_b: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &j in &adjacency[i] {
            if visited[j] {
                continue;
            }
            visited[j] = true;
            if matched_b[j].is_none()
                || augment(matched_b[j].unwrap(), adjacency, matched_b, visited)
            {
                matched_b[j] = Some(i);
                return true;
            }
        }
        false
    }

    (0..n).all(|i| {
        let mut visited = vec![false; n];
        augment(i, &adjacency, &mut matched_b, &mut visited)
    })
}
