//! A pencil of plane cubic curves and the geometry of its parameter map:
//! the rational function λ(x, y) whose fibers are the pencil members, its
//! critical points (where the member through the point is singular), the
//! nine base points shared by all members, and real-locus sampling.
//!
//! The default pencil is `μ·(zy² − 2x²(x + 8z)) + λ·(zx² − (y+z)²(y+9z))`,
//! whose generic member is a smooth cubic; the parameter map in the affine
//! chart is λ = (y² − 2x²(x+8)) / ((y+1)²(y+9) − x²).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form;
use crate::error::{Error, Result};
use crate::oracle::{self, OracleConfig};
use crate::poly::{HomogPoly3, PencilParam, Poly1, Poly2, ProjPoint, Var, CLUSTER_TOL};

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

// ---------------------------------------------------------------------------
// The pencil
// ---------------------------------------------------------------------------

/// Two homogeneous cubics spanning a pencil `μ·f1 + λ·f2` of plane curves.
#[derive(Clone, Debug)]
pub struct CubicPencil {
    pub f1: HomogPoly3,
    pub f2: HomogPoly3,
}

impl Default for CubicPencil {
    /// The rational-elliptic-surface pencil: `f1 = zy² − 2x³ − 16x²z` and
    /// `f2 = zx² − (y+z)²(y+9z) = x²z − y³ − 11y²z − 19yz² − 9z³`.
    fn default() -> Self {
        let f1 = HomogPoly3::from_real_terms(
            3,
            &[(0, 2, 1, 1.0), (3, 0, 0, -2.0), (2, 0, 1, -16.0)],
        )
        .expect("static pencil member");
        let f2 = HomogPoly3::from_real_terms(
            3,
            &[
                (2, 0, 1, 1.0),
                (0, 3, 0, -1.0),
                (0, 2, 1, -11.0),
                (0, 1, 2, -19.0),
                (0, 0, 3, -9.0),
            ],
        )
        .expect("static pencil member");
        CubicPencil { f1, f2 }
    }
}

/// The member `μ·f1 + λ·f2`.
pub fn pencil_member_cubic(cp: &CubicPencil, t: &PencilParam) -> HomogPoly3 {
    cp.f1
        .scale(t.mu())
        .add(&cp.f2.scale(t.lambda()))
        .expect("members share degree 3")
}

/// The parameter value at a point: a finite λ, or the member at infinity
/// `[0 : 1]` of the λ-chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LambdaValue {
    Finite(Complex64),
    Infinity,
}

impl LambdaValue {
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            LambdaValue::Finite(v) => Some(*v),
            LambdaValue::Infinity => None,
        }
    }
}

/// One converged critical point of the parameter map, in the affine chart
/// `z = 1`. `residual` is the gradient norm of the chart map at the point
/// (the λ-chart map for finite λ, the μ-chart map for the member at
/// infinity).
#[derive(Clone, Copy, Debug)]
pub struct CriticalPointRecord {
    pub x: Complex64,
    pub y: Complex64,
    pub lambda: LambdaValue,
    pub residual: f64,
}

/// Tuning for the multi-start critical-point search. Seeds are deterministic
/// complex draws: `x` uniform in a disk of `radius_x`, `y` in `radius_y`
/// (the far critical points sit near |x| ≈ 17 and |y| ≈ 25, well inside).
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub seed_count: usize,
    pub radius_x: f64,
    pub radius_y: f64,
    pub newton_max_iters: usize,
    pub dedupe_tol: f64,
    pub gradient_tol: f64,
    /// RNG seed for the deterministic start points.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed_count: 2000,
            radius_x: 20.0,
            radius_y: 150.0,
            newton_max_iters: 96,
            dedupe_tol: 1e-6,
            gradient_tol: 1e-9,
            seed: 0x517E_CA57,
        }
    }
}

// ---------------------------------------------------------------------------
// The rational parameter map and its derivatives
// ---------------------------------------------------------------------------

/// Precomputed affine data for the map λ = n/d of a pencil: the numerator
/// and denominator with their partials, and the polynomial gradient
/// numerators g1 = nₓd − n·dₓ, g2 = n_y·d − n·d_y with their Jacobian.
pub struct LambdaMap {
    pub n: Poly2,
    pub d: Poly2,
    nx: Poly2,
    ny: Poly2,
    dx: Poly2,
    dy: Poly2,
    pub g1: Poly2,
    pub g2: Poly2,
}

impl LambdaMap {
    /// Build from a pencil: member μf1 + λf2 = 0 through `(x, y, 1)` gives
    /// λ/μ = −f1/f2, so `n = f1|z=1` and `d = −f2|z=1`.
    pub fn new(cp: &CubicPencil) -> Self {
        let n = cp.f1.dehomogenize(2);
        let d = Poly2::zero().sub(&cp.f2.dehomogenize(2));
        let nx = n.partial(Var::X);
        let ny = n.partial(Var::Y);
        let dx = d.partial(Var::X);
        let dy = d.partial(Var::Y);
        let g1 = nx.mul(&d).sub(&n.mul(&dx));
        let g2 = ny.mul(&d).sub(&n.mul(&dy));
        LambdaMap { n, d, nx, ny, dx, dy, g1, g2 }
    }
}

/// Relative threshold below which the denominator counts as a pole.
const POLE_REL_TOL: f64 = 1e-12;
/// Relative threshold below which numerator and denominator jointly count
/// as a base point.
const BASE_REL_TOL: f64 = 1e-8;

fn rel_scales(map: &LambdaMap, x: Complex64, y: Complex64) -> (f64, f64) {
    let sn = map.n.eval_abs(x.norm(), y.norm()).max(1.0);
    let sd = map.d.eval_abs(x.norm(), y.norm()).max(1.0);
    (sn, sd)
}

/// The parameter map at `(x, y)` in the chart z = 1. A vanishing denominator
/// with nonvanishing numerator is the member at infinity; both vanishing is
/// a base point, where the map is undefined.
pub fn lambda_of_point(map: &LambdaMap, x: Complex64, y: Complex64) -> Result<LambdaValue> {
    let n = map.n.eval(x, y);
    let d = map.d.eval(x, y);
    let (sn, sd) = rel_scales(map, x, y);
    if d.norm() <= POLE_REL_TOL * sd {
        if n.norm() <= BASE_REL_TOL * sn {
            return Err(Error::BasePoint { x, y });
        }
        return Ok(LambdaValue::Infinity);
    }
    Ok(LambdaValue::Finite(n / d))
}

/// Analytic gradient of λ = n/d by the quotient rule. Errors on poles.
pub fn gradient_lambda(map: &LambdaMap, x: Complex64, y: Complex64) -> Result<(Complex64, Complex64)> {
    let d = map.d.eval(x, y);
    let (_, sd) = rel_scales(map, x, y);
    if d.norm() <= POLE_REL_TOL * sd {
        return Err(Error::PoleInput { x, y });
    }
    let n = map.n.eval(x, y);
    let d2 = d * d;
    let gx = (map.nx.eval(x, y) * d - n * map.dx.eval(x, y)) / d2;
    let gy = (map.ny.eval(x, y) * d - n * map.dy.eval(x, y)) / d2;
    Ok((gx, gy))
}

// ---------------------------------------------------------------------------
// 2×2 Newton iteration on a polynomial system
// ---------------------------------------------------------------------------

/// A square polynomial system (f, g) in two complex variables with its
/// Jacobian, for Newton iteration.
struct System2 {
    f: Poly2,
    g: Poly2,
    fx: Poly2,
    fy: Poly2,
    gx: Poly2,
    gy: Poly2,
}

impl System2 {
    fn new(f: Poly2, g: Poly2) -> Self {
        let fx = f.partial(Var::X);
        let fy = f.partial(Var::Y);
        let gx = g.partial(Var::X);
        let gy = g.partial(Var::Y);
        System2 { f, g, fx, fy, gx, gy }
    }

    fn residual(&self, x: Complex64, y: Complex64) -> f64 {
        (self.f.eval(x, y).norm().powi(2) + self.g.eval(x, y).norm().powi(2)).sqrt()
    }

    /// Damped Newton iteration from a start point: the full step is
    /// backtracked (halved, up to six times) until the residual norm
    /// decreases, which widens the basins of attraction without affecting
    /// the quadratic endgame. Returns the converged point and the final
    /// step size, or `None` on stagnation or a singular Jacobian.
    fn newton(&self, mut x: Complex64, mut y: Complex64, max_iters: usize) -> Option<(Complex64, Complex64, f64)> {
        let mut res = self.residual(x, y);
        for _ in 0..max_iters {
            let fv = self.f.eval(x, y);
            let gv = self.g.eval(x, y);
            let j11 = self.fx.eval(x, y);
            let j12 = self.fy.eval(x, y);
            let j21 = self.gx.eval(x, y);
            let j22 = self.gy.eval(x, y);
            let det = j11 * j22 - j12 * j21;
            if det.norm() < 1e-280 {
                return None;
            }
            let dx = -(j22 * fv - j12 * gv) / det;
            let dy = -(-j21 * fv + j11 * gv) / det;
            let full = dx.norm() + dy.norm();
            if !full.is_finite() {
                return None;
            }
            // Already converged: the undamped step is negligible (this must
            // be checked before the decrease test, which cannot strictly
            // hold at a root).
            if full <= 1e-13 * (1.0 + x.norm() + y.norm()) {
                return Some((x + dx, y + dy, full));
            }
            let mut t = 1.0;
            let mut accepted = false;
            for _ in 0..10 {
                let nx = x + dx * t;
                let ny = y + dy * t;
                let nres = self.residual(nx, ny);
                if nres < res {
                    x = nx;
                    y = ny;
                    res = nres;
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if !accepted || x.norm() + y.norm() > 1e9 {
                return None;
            }
            let step = (dx.norm() + dy.norm()) * t;
            if step <= 1e-13 * (1.0 + x.norm() + y.norm()) {
                return Some((x, y, step));
            }
        }
        None
    }
}

// ---------------------------------------------------------------------------
// Critical-point search
// ---------------------------------------------------------------------------

/// All critical points of the pencil's parameter map found by multi-start
/// Newton on the polynomial system g1 = g2 = 0, plus the member-at-infinity
/// stratum (handled by a direct solve rather than random seeding). Records
/// are deduplicated at `dedupe_tol` and sorted by (Re λ, Im λ) with the
/// at-infinity records last.
///
/// Critical points on the line at infinity (z = 0) cannot be expressed in
/// the affine record format; [`infinite_critical_points`] finds them
/// separately, and the default pencil has none.
pub fn find_critical_points(cp: &CubicPencil, cfg: &SearchConfig) -> Result<Vec<CriticalPointRecord>> {
    let map = LambdaMap::new(cp);
    let system = System2::new(map.g1.clone(), map.g2.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut found: Vec<CriticalPointRecord> = Vec::new();

    for k in 0..cfg.seed_count {
        // Scale-mixed seeding. A single uniform law over two disks whose
        // radii differ by an order of magnitude wastes almost every draw on
        // the large-|y| region, so the stream interleaves four magnitude
        // profiles: global coverage, small-|y| bias, rim-|x| with small
        // |y|, and a real-line substream (the map has real coefficients, so
        // real roots are reachable from real seeds). All seeds stay inside
        // the configured disks.
        let u = [
            rng.gen::<f64>(),
            rng.gen::<f64>(),
            rng.gen::<f64>(),
            rng.gen::<f64>(),
        ];
        let tau = std::f64::consts::TAU;
        let (x0, y0) = match k % 4 {
            0 => (
                Complex64::from_polar(cfg.radius_x * u[0], tau * u[1]),
                Complex64::from_polar(cfg.radius_y * u[2], tau * u[3]),
            ),
            1 => (
                Complex64::from_polar(cfg.radius_x * (0.5 + 0.5 * u[0]), tau * u[1]),
                Complex64::from_polar(
                    cfg.radius_y.min(cfg.radius_x) * u[2],
                    tau * u[3],
                ),
            ),
            2 => (
                Complex64::from_polar(cfg.radius_x * (0.5 + 0.5 * u[0]), tau * u[1]),
                Complex64::from_polar(cfg.radius_y * u[2].powi(3), tau * u[3]),
            ),
            _ => (
                c64(cfg.radius_x * (2.0 * u[0] - 1.0)),
                c64(cfg.radius_y * u[2].powi(3) * (2.0 * u[3] - 1.0).signum()),
            ),
        };

        let Some((x, y, _)) = system.newton(x0, y0, cfg.newton_max_iters) else {
            continue;
        };

        let n = map.n.eval(x, y);
        let d = map.d.eval(x, y);
        let (_sn, sd) = rel_scales(&map, x, y);
        if d.norm() <= BASE_REL_TOL * sd {
            // Pole or base point: the member-at-infinity stratum and the
            // base-point blow-ups are handled by the dedicated passes.
            continue;
        }
        let d2 = d * d;
        let grad_norm = ((map.g1.eval(x, y) / d2).norm().powi(2)
            + (map.g2.eval(x, y) / d2).norm().powi(2))
        .sqrt();
        if grad_norm > cfg.gradient_tol {
            continue;
        }
        let record = CriticalPointRecord {
            x,
            y,
            lambda: LambdaValue::Finite(n / d),
            residual: grad_norm,
        };
        merge_record(&mut found, record, cfg.dedupe_tol);
    }

    for record in infinity_stratum_critical_points(cp, cfg)? {
        merge_record(&mut found, record, cfg.dedupe_tol);
    }

    found.sort_by(|a, b| {
        let ka = match a.lambda {
            LambdaValue::Finite(l) => (0u8, l.re, l.im),
            LambdaValue::Infinity => (1u8, 0.0, 0.0),
        };
        let kb = match b.lambda {
            LambdaValue::Finite(l) => (0u8, l.re, l.im),
            LambdaValue::Infinity => (1u8, 0.0, 0.0),
        };
        ka.partial_cmp(&kb).unwrap()
    });
    Ok(found)
}

fn merge_record(found: &mut Vec<CriticalPointRecord>, record: CriticalPointRecord, tol: f64) {
    let dist = |a: &CriticalPointRecord, b: &CriticalPointRecord| {
        ((a.x - b.x).norm().powi(2) + (a.y - b.y).norm().powi(2)).sqrt()
    };
    match found.iter_mut().find(|r| dist(r, &record) <= tol) {
        Some(existing) => {
            if record.residual < existing.residual {
                *existing = record;
            }
        }
        None => found.push(record),
    }
}

/// Critical points lying on the member at infinity `[0 : 1]` (the μ = 0
/// fiber): singular points of that member, i.e. solutions of
/// `F = Fₓ = F_y = 0` for the member's affine equation, excluding base
/// points. Solved directly by elimination rather than by random seeding.
fn infinity_stratum_critical_points(cp: &CubicPencil, cfg: &SearchConfig) -> Result<Vec<CriticalPointRecord>> {
    let map = LambdaMap::new(cp);
    let fa = cp.f2.dehomogenize(2);
    let fax = fa.partial(Var::X);
    let fay = fa.partial(Var::Y);
    if fax.is_zero() || fay.is_zero() {
        return Ok(Vec::new());
    }

    let mut candidates: Vec<(Complex64, Complex64)> = Vec::new();
    let r = resultant(&fax, &fay, Var::Y)?;
    if r.degree().is_err() {
        return Ok(Vec::new());
    }
    let xs = solve_possibly_high_degree(&r)?;
    for x in xs {
        let slice = fay.substitute(Var::X, x);
        let ys = match slice.degree() {
            Ok(deg) if deg >= 1 => solve_possibly_high_degree(&slice)?,
            _ => continue,
        };
        for y in ys {
            candidates.push((x, y));
        }
    }

    let polish = System2::new(fax.clone(), fay.clone());
    let mut out = Vec::new();
    for (x0, y0) in candidates {
        let Some((x, y, _)) = polish.newton(x0, y0, 32) else {
            continue;
        };
        let sx = fax.eval_abs(x.norm(), y.norm()).max(1.0);
        let sy = fay.eval_abs(x.norm(), y.norm()).max(1.0);
        let sf = fa.eval_abs(x.norm(), y.norm()).max(1.0);
        if fax.eval(x, y).norm() > 1e-8 * sx || fay.eval(x, y).norm() > 1e-8 * sy {
            continue;
        }
        // The singular point must lie on the member itself…
        if fa.eval(x, y).norm() > 1e-8 * sf {
            continue;
        }
        // …and must not be a base point (numerator of λ must not vanish).
        let n = map.n.eval(x, y);
        let (sn, _) = rel_scales(&map, x, y);
        if n.norm() <= BASE_REL_TOL * sn {
            continue;
        }
        // Gradient of the μ-chart map μ/λ = d/n at the point.
        let n2 = n * n;
        let grad_norm = ((map.g1.eval(x, y) / n2).norm().powi(2)
            + (map.g2.eval(x, y) / n2).norm().powi(2))
        .sqrt();
        if grad_norm > cfg.gradient_tol {
            continue;
        }
        out.push(CriticalPointRecord {
            x,
            y,
            lambda: LambdaValue::Infinity,
            residual: grad_norm,
        });
    }
    Ok(out)
}

/// Critical points on the line at infinity z = 0: points (other than base
/// points) where the gradients of the two spanning cubics are parallel,
/// found as common roots of the three 2×2 minors of the restricted Jacobian.
/// Empty for the default pencil.
pub fn infinite_critical_points(cp: &CubicPencil) -> Result<Vec<ProjPoint>> {
    let grads1: Vec<Vec<Complex64>> = (0..3).map(|v| cp.f1.partial(v).restrict_to_zero(2)).collect();
    let grads2: Vec<Vec<Complex64>> = (0..3).map(|v| cp.f2.partial(v).restrict_to_zero(2)).collect();
    let minor = |a: usize, b: usize| {
        let lhs = convolve(&grads1[a], &grads2[b]);
        let rhs = convolve(&grads1[b], &grads2[a]);
        sub_vec(&lhs, &rhs)
    };
    let minors = [minor(0, 1), minor(0, 2), minor(1, 2)];
    let scale = |v: &[Complex64]| v.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let Some(first) = minors.iter().find(|m| scale(m) > 0.0) else {
        return Err(Error::NonGenericPencil(
            "all Jacobian minors vanish identically on the line at infinity",
        ));
    };
    let mut out = Vec::new();
    for (root, _mult) in binary_form_roots(first)? {
        // Check the remaining minors at the candidate.
        let ok = minors.iter().all(|m| {
            let s = scale(m);
            s == 0.0 || eval_binary_form(m, root).norm() <= 1e-8 * s * root_scale(root, m.len() - 1)
        });
        if !ok {
            continue;
        }
        // Skip base points (both cubics vanish there).
        let r1 = cp.f1.restrict_to_zero(2);
        let r2 = cp.f2.restrict_to_zero(2);
        let on1 = eval_binary_form(&r1, root).norm() <= 1e-8 * scale(&r1) * root_scale(root, 3);
        let on2 = eval_binary_form(&r2, root).norm() <= 1e-8 * scale(&r2) * root_scale(root, 3);
        if on1 && on2 {
            continue;
        }
        out.push(ProjPoint::new([root[0], root[1], zero()])?);
    }
    Ok(out)
}

fn root_scale(root: [Complex64; 2], degree: usize) -> f64 {
    root[0].norm().max(root[1].norm()).max(1.0).powi(degree as i32)
}

fn convolve(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![zero(); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn sub_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).copied().unwrap_or(zero()) - b.get(i).copied().unwrap_or(zero())
        })
        .collect()
}

/// Evaluate a binary form `Σ cᵢ·x^i·y^(d−i)` at `[x : y]`.
fn eval_binary_form(coeffs: &[Complex64], p: [Complex64; 2]) -> Complex64 {
    let d = coeffs.len() - 1;
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| c * p[0].powu(i as u32) * p[1].powu((d - i) as u32))
        .sum()
}

/// Roots `[x : y]` of a binary form with coefficients `cᵢ` on `x^i·y^(d−i)`:
/// the affine roots (y = 1) of the dehomogenized polynomial plus `[1 : 0]`
/// with multiplicity equal to the degree drop.
fn binary_form_roots(coeffs: &[Complex64]) -> Result<Vec<([Complex64; 2], u32)>> {
    let p = Poly1::new(coeffs.to_vec()).trim_trailing(1e-12);
    let d = coeffs.len() - 1;
    let mut out = Vec::new();
    let eff = match p.degree() {
        Ok(deg) => deg,
        Err(_) => return Err(Error::ZeroPolynomial),
    };
    if eff >= 1 {
        for entry in solve_possibly_high_degree_entries(&p)? {
            out.push(([entry.0, c64(1.0)], entry.1));
        }
    }
    if d > eff {
        out.push(([c64(1.0), zero()], (d - eff) as u32));
    }
    Ok(out)
}

fn solve_possibly_high_degree(p: &Poly1) -> Result<Vec<Complex64>> {
    Ok(solve_possibly_high_degree_entries(p)?
        .into_iter()
        .map(|(v, _)| v)
        .collect())
}

/// Distinct roots with multiplicities: closed forms through degree 4, the
/// iterative finder beyond.
fn solve_possibly_high_degree_entries(p: &Poly1) -> Result<Vec<(Complex64, u32)>> {
    let rs = match p.degree()? {
        0 => return Ok(Vec::new()),
        1..=4 => closed_form::solve_any(p)?,
        _ => oracle::all_roots(p, &OracleConfig::default())?,
    };
    Ok(rs.roots.iter().map(|r| (r.value, r.multiplicity)).collect())
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Determinant of a complex matrix by LU with partial pivoting.
fn det_complex(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = c64(1.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&a, &b| m[a][k].norm().partial_cmp(&m[b][k].norm()).unwrap())
            .unwrap();
        if m[pivot][k].norm() == 0.0 {
            return zero();
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        det *= m[k][k];
        let pivot_row = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let factor = row[k] / pivot_row[k];
            for (entry, &p) in row.iter_mut().zip(&pivot_row).skip(k) {
                *entry -= factor * p;
            }
        }
    }
    det
}

/// Sylvester resultant of two bivariate polynomials, eliminating `elim`:
/// a univariate polynomial in the kept variable whose roots are the
/// projections of the common zeros.
///
/// Computed by evaluation–interpolation: the kept variable is sampled at
/// roots of unity, each numeric Sylvester determinant is taken with the
/// *formal* degrees (so a leading coefficient vanishing at a sample is
/// harmless), and the coefficients are recovered by an inverse DFT.
pub fn resultant(pa: &Poly2, pb: &Poly2, elim: Var) -> Result<Poly1> {
    if pa.is_zero() || pb.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let da = pa.degree_in(elim).unwrap();
    let db = pb.degree_in(elim).unwrap();
    // Degenerate conventions: res(f, g) = f^deg(g) when f has no elim part.
    if da == 0 {
        return Ok(poly2_to_poly1(pa)?.power(db));
    }
    if db == 0 {
        return Ok(poly2_to_poly1(pb)?.power(da));
    }

    let ca = pa.coeffs_in(elim);
    let cb = pb.coeffs_in(elim);
    let ka = ca.iter().filter_map(|p| p.degree().ok()).max().unwrap_or(0);
    let kb = cb.iter().filter_map(|p| p.degree().ok()).max().unwrap_or(0);
    let bound = db * ka + da * kb;
    let samples = bound + 1;

    let mut values = Vec::with_capacity(samples);
    for k in 0..samples {
        let theta = std::f64::consts::TAU * k as f64 / samples as f64;
        let t = Complex64::from_polar(1.0, theta);
        let a_num: Vec<Complex64> = ca.iter().map(|p| p.eval(t)).collect();
        let b_num: Vec<Complex64> = cb.iter().map(|p| p.eval(t)).collect();
        values.push(det_complex(sylvester(&a_num, &b_num)));
    }

    // Inverse DFT (naive — the sizes here are tiny).
    let n = samples as f64;
    let coeffs: Vec<Complex64> = (0..samples)
        .map(|j| {
            let mut acc = zero();
            for (k, &v) in values.iter().enumerate() {
                let theta = -std::f64::consts::TAU * (j * k) as f64 / n;
                acc += v * Complex64::from_polar(1.0, theta);
            }
            acc / n
        })
        .collect();
    Ok(Poly1::new(coeffs).trim_trailing(1e-10))
}

/// Sylvester matrix of two univariate coefficient vectors (ascending).
fn sylvester(a: &[Complex64], b: &[Complex64]) -> Vec<Vec<Complex64>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let size = da + db;
    let mut m = vec![vec![zero(); size]; size];
    for row in 0..db {
        for (i, &c) in a.iter().rev().enumerate() {
            m[row][row + i] = c;
        }
    }
    for row in 0..da {
        for (i, &c) in b.iter().rev().enumerate() {
            m[db + row][row + i] = c;
        }
    }
    m
}

fn poly2_to_poly1(p: &Poly2) -> Result<Poly1> {
    // A polynomial with no x-part is a Poly1 in y and vice versa; detect
    // which variable is absent.
    if p.degree_in(Var::X) == Some(0) {
        Ok(p.substitute(Var::X, zero()))
    } else if p.degree_in(Var::Y) == Some(0) {
        Ok(p.substitute(Var::Y, zero()))
    } else {
        Err(Error::Internal("polynomial depends on both variables"))
    }
}

impl Poly1 {
    /// Integer power by repeated multiplication (small exponents only).
    pub fn power(&self, k: usize) -> Poly1 {
        let mut acc = Poly1::from_real(&[1.0]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Base points
// ---------------------------------------------------------------------------

/// The nine base points of the pencil (common zeros of both cubics),
/// counted with multiplicity. Affine candidates come from the degree-9
/// resultant in x, back-substitution in y, and a joint Newton polish; the
/// line at infinity is checked directly (the default pencil meets it in no
/// common point).
pub fn base_points_cubic(cp: &CubicPencil) -> Result<Vec<(ProjPoint, u32)>> {
    let f1 = cp.f1.dehomogenize(2);
    let f2 = cp.f2.dehomogenize(2);
    let r = resultant(&f1, &f2, Var::Y)?;
    if !matches!(r.degree(), Ok(deg) if deg >= 1) {
        return Err(Error::NonGenericPencil(
            "the spanning cubics share a component or have no affine intersection",
        ));
    }
    let polish = System2::new(f1.clone(), f2.clone());
    let xs = oracle::all_roots(&r, &OracleConfig::default())?;

    let mut out: Vec<(ProjPoint, u32)> = Vec::new();
    for entry in &xs.roots {
        let x0 = entry.value;
        // Back-substitute: y-roots of f1(x0, ·), keeping the one that best
        // satisfies f2 as well.
        let slice = f1.substitute(Var::X, x0);
        let ys = match slice.degree() {
            Ok(deg) if deg >= 1 => solve_possibly_high_degree(&slice)?,
            _ => continue,
        };
        let y0 = ys
            .into_iter()
            .min_by(|a, b| {
                f2.eval(x0, *a)
                    .norm()
                    .partial_cmp(&f2.eval(x0, *b).norm())
                    .unwrap()
            })
            .unwrap();
        let Some((x, y, _)) = polish.newton(x0, y0, 48) else {
            continue;
        };
        let s1 = f1.eval_abs(x.norm(), y.norm()).max(1.0);
        let s2 = f2.eval_abs(x.norm(), y.norm()).max(1.0);
        if f1.eval(x, y).norm() > 1e-8 * s1 || f2.eval(x, y).norm() > 1e-8 * s2 {
            continue;
        }
        let point = ProjPoint::from_affine(x, y);
        match out.iter_mut().find(|(q, _)| q.eq_tol(&point, CLUSTER_TOL)) {
            Some((_, m)) => *m += entry.multiplicity,
            None => out.push((point, entry.multiplicity)),
        }
    }

    // Common zeros on the line at infinity.
    let r1 = cp.f1.restrict_to_zero(2);
    let r2 = cp.f2.restrict_to_zero(2);
    let s2 = r2.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if r1.iter().any(|c| c.norm() > 0.0) {
        for (root, mult) in binary_form_roots(&r1)? {
            if s2 > 0.0
                && eval_binary_form(&r2, root).norm() <= 1e-8 * s2 * root_scale(root, 3)
            {
                out.push((ProjPoint::new([root[0], root[1], zero()])?, mult));
            }
        }
    }

    out.sort_by(|(a, _), (b, _)| {
        let ka: Vec<(f64, f64)> = a.coords().iter().map(|c| (c.re, c.im)).collect();
        let kb: Vec<(f64, f64)> = b.coords().iter().map(|c| (c.re, c.im)).collect();
        ka.partial_cmp(&kb).unwrap()
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Real-locus sampling
// ---------------------------------------------------------------------------

/// Sample the real affine locus of a homogeneous curve `F(x, y, 1) = 0` on a
/// window: for each of `grid_n` evenly spaced x-values, solve for y by the
/// closed-form solvers and keep real solutions inside the window. Every
/// returned point satisfies the curve equation to 1e−9 (relative).
pub fn sample_curve(
    f: &HomogPoly3,
    window: (f64, f64, f64, f64),
    grid_n: usize,
) -> Vec<(f64, f64)> {
    assert!(grid_n >= 2, "sampling needs at least two grid columns");
    let (x_min, x_max, y_min, y_max) = window;
    let fa = f.dehomogenize(2);
    let mut out = Vec::new();
    for i in 0..grid_n {
        let x = x_min + (x_max - x_min) * i as f64 / (grid_n - 1) as f64;
        let slice = fa.substitute(Var::X, c64(x));
        let Ok(deg) = slice.degree() else { continue };
        if deg == 0 {
            continue;
        }
        let Ok(roots) = solve_possibly_high_degree_entries(&slice) else {
            continue;
        };
        let mut ys: Vec<f64> = Vec::new();
        for (yv, _) in roots {
            if yv.im.abs() > 1e-9 * (1.0 + yv.re.abs()) {
                continue;
            }
            let y = yv.re;
            if y < y_min || y > y_max {
                continue;
            }
            let scale = fa.eval_abs(x.abs(), y.abs()).max(1.0);
            if fa.eval(c64(x), c64(y)).norm() <= 1e-9 * scale {
                ys.push(y);
            }
        }
        ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ys.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        out.extend(ys.into_iter().map(|y| (x, y)));
    }
    out
}

// ---------------------------------------------------------------------------
// Published reference rows (two significant figures)
// ---------------------------------------------------------------------------

/// One row of the published two-significant-figure reference table of
/// critical points for the default pencil. `lambda_finite = None` marks the
/// row whose member is `[0 : 1]` (the μ = 0 fiber).
#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub x: Complex64,
    pub y: Complex64,
    pub lambda_finite: Option<Complex64>,
}

/// The published reference rows, stored exactly as printed (two significant
/// figures per real component).
pub fn reference_rows() -> Vec<ReferenceRow> {
    let row = |xr: f64, xi: f64, yr: f64, yi: f64, lr: f64, li: f64| ReferenceRow {
        x: Complex64::new(xr, xi),
        y: Complex64::new(yr, yi),
        lambda_finite: Some(Complex64::new(lr, li)),
    };
    vec![
        row(0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        row(0.0, 0.0, 4.8, 0.0, 0.05, 0.0),
        row(0.0, 0.0, -3.8, 0.0, 0.35, 0.0),
        row(-8.2, 0.0, -6.2, 0.0, 7.8, 0.0),
        row(1.0, 0.0, -1.0, 0.0, 17.0, 0.0),
        row(4.1, 11.0, -6.3, -0.016, 20.0, 11.0),
        row(4.1, -11.0, -6.3, 0.016, 20.0, -11.0),
        row(-0.5, -0.87, -1.0, -0.00046, 15.0, -0.87),
        row(-0.5, 0.87, -1.0, 0.00046, 15.0, 0.87),
        row(-16.0, 0.011, 3.6, -110.0, 0.0014, 0.011),
        row(-16.0, -0.011, 3.6, 110.0, 0.0014, -0.011),
        ReferenceRow {
            x: Complex64::new(0.0, 0.0),
            y: Complex64::new(-1.0, 0.0),
            lambda_finite: None,
        },
    ]
}

/// Key of a real number rounded to two significant figures: `(exponent,
/// signed two-digit mantissa)`, with magnitudes below 1e−6 collapsing to
/// zero. Two numbers agree to two significant figures iff their keys match.
pub fn two_sig_key(v: f64) -> (i32, i64) {
    if v.abs() < 1e-6 {
        return (0, 0);
    }
    let e = v.abs().log10().floor() as i32;
    let m = (v / 10f64.powi(e - 1)).round() as i64;
    if m.abs() == 100 {
        (e + 1, m / 10)
    } else {
        (e, m)
    }
}

/// Two-significant-figure agreement, component by component.
pub fn two_sig_match(a: Complex64, b: Complex64) -> bool {
    two_sig_key(a.re) == two_sig_key(b.re) && two_sig_key(a.im) == two_sig_key(b.im)
}

/// Whether a found record matches a reference row at the published
/// two-significant-figure precision.
pub fn record_matches_row(record: &CriticalPointRecord, row: &ReferenceRow) -> bool {
    let coords_ok = two_sig_match(record.x, row.x) && two_sig_match(record.y, row.y);
    match (row.lambda_finite, record.lambda) {
        (Some(lr), LambdaValue::Finite(lf)) => coords_ok && two_sig_match(lf, lr),
        (None, LambdaValue::Infinity) => coords_ok,
        _ => false,
    }
}

#[cfg(test)]
// Expected values below are frozen at full printed precision on purpose.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn map() -> LambdaMap {
        LambdaMap::new(&CubicPencil::default())
    }

    #[test]
    fn default_pencil_shapes() {
        let cp = CubicPencil::default();
        // f1 at z=1 is y² − 2x³ − 16x² = y² − 2x²(x+8)
        let f1a = cp.f1.dehomogenize(2);
        assert_eq!(
            f1a,
            Poly2::from_real_terms(&[(0, 2, 1.0), (3, 0, -2.0), (2, 0, -16.0)])
        );
        // f2 at z=1 is x² − (y+1)²(y+9)
        let f2a = cp.f2.dehomogenize(2);
        assert_eq!(
            f2a,
            Poly2::from_real_terms(&[(2, 0, 1.0), (0, 3, -1.0), (0, 2, -11.0), (0, 1, -19.0), (0, 0, -9.0)])
        );
    }

    #[test]
    fn member_endpoints() {
        let cp = CubicPencil::default();
        let at0 = pencil_member_cubic(&cp, &PencilParam::new(c64(1.0), c64(0.0)).unwrap());
        assert_eq!(at0, cp.f1);
        let atinf = pencil_member_cubic(&cp, &PencilParam::at_infinity());
        assert_eq!(atinf, cp.f2);
    }

    #[test]
    fn lambda_map_values() {
        let m = map();
        assert_eq!(
            lambda_of_point(&m, c64(0.0), c64(0.0)).unwrap(),
            LambdaValue::Finite(c(0.0, 0.0))
        );
        // (1, −1): numerator 1 − 2 − 16 = −17, denominator 0 − 1 = −1
        assert_eq!(
            lambda_of_point(&m, c64(1.0), c64(-1.0)).unwrap(),
            LambdaValue::Finite(c(17.0, 0.0))
        );
        assert_eq!(
            lambda_of_point(&m, c64(0.0), c64(-1.0)).unwrap(),
            LambdaValue::Infinity
        );
    }

    #[test]
    fn lambda_rejects_base_points() {
        let m = map();
        // A common zero of both cubics (known to high precision).
        let x = c64(-0.27982620195027013);
        let y = c64(-1.0995548902324185);
        assert!(matches!(
            lambda_of_point(&m, x, y),
            Err(Error::BasePoint { .. })
        ));
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let m = map();
        let pts = [
            (c(0.3, 0.1), c(2.0, -0.4)),
            (c(-1.5, 0.0), c(3.0, 0.0)),
            (c(5.0, 1.0), c(-4.0, 2.0)),
        ];
        let h = 1e-6;
        for (x, y) in pts {
            let (gx, gy) = gradient_lambda(&m, x, y).unwrap();
            let lam = |x: Complex64, y: Complex64| {
                lambda_of_point(&m, x, y).unwrap().finite().unwrap()
            };
            let fdx = (lam(x + c64(h), y) - lam(x - c64(h), y)) / (2.0 * h);
            let fdy = (lam(x, y + c64(h)) - lam(x, y - c64(h))) / (2.0 * h);
            assert!((gx - fdx).norm() <= 1e-5 * (1.0 + gx.norm()), "x-partial at ({x}, {y})");
            assert!((gy - fdy).norm() <= 1e-5 * (1.0 + gy.norm()), "y-partial at ({x}, {y})");
        }
    }

    #[test]
    fn gradient_errors_on_pole() {
        let m = map();
        assert!(matches!(
            gradient_lambda(&m, c64(0.0), c64(-1.0)),
            Err(Error::PoleInput { .. })
        ));
    }

    #[test]
    fn resultant_linear_cases() {
        // res_x(x − 2, x − 5) = 2 − 5 up to sign
        let pa = Poly2::from_real_terms(&[(1, 0, 1.0), (0, 0, -2.0)]);
        let pb = Poly2::from_real_terms(&[(1, 0, 1.0), (0, 0, -5.0)]);
        let r = resultant(&pa, &pb, Var::X).unwrap();
        assert_eq!(r.degree().unwrap(), 0);
        assert!((r.coeff(0).norm() - 3.0).abs() < 1e-12);

        // res_y(y − x², y − 3) = ±(3 − x²)
        let pa = Poly2::from_real_terms(&[(0, 1, 1.0), (2, 0, -1.0)]);
        let pb = Poly2::from_real_terms(&[(0, 1, 1.0), (0, 0, -3.0)]);
        let r = resultant(&pa, &pb, Var::Y).unwrap();
        let expect = Poly1::from_real(&[3.0, 0.0, -1.0]);
        let sign = if (r.coeff(2) + c64(1.0)).norm() < 1e-9 { 1.0 } else { -1.0 };
        for i in 0..3 {
            assert!((r.coeff(i) * c64(sign) - expect.coeff(i)).norm() < 1e-9);
        }
    }

    #[test]
    fn resultant_of_default_cubics_is_degree_nine() {
        let cp = CubicPencil::default();
        let f1 = cp.f1.dehomogenize(2);
        let f2 = cp.f2.dehomogenize(2);
        let r = resultant(&f1, &f2, Var::Y).unwrap();
        assert_eq!(r.degree().unwrap(), 9);
        // Independent expansion gives, up to one overall sign,
        // 8x⁹ + 192x⁸ + 1536x⁷ + 3764x⁶ − 5268x⁵ − 20897x⁴ + 326x³ + 2626x² − 81.
        let expect = [
            -81.0, 0.0, 2626.0, 326.0, -20897.0, -5268.0, 3764.0, 1536.0, 192.0, 8.0,
        ];
        let s = r.coeff(9) / c64(8.0);
        assert!((s.norm() - 1.0).abs() < 1e-9, "leading coefficient off scale");
        for (i, &e) in expect.iter().enumerate() {
            assert!(
                (r.coeff(i) / s - c64(e)).norm() < 1e-6 * (1.0 + e.abs()),
                "coefficient {i}: {} vs {e}",
                r.coeff(i) / s
            );
        }
    }

    #[test]
    fn nine_base_points_on_every_member() {
        let cp = CubicPencil::default();
        let pts = base_points_cubic(&cp).unwrap();
        let total: u32 = pts.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 9);
        // Frozen high-precision values from an independent run (sorted by x).
        let want = [
            (-7.983104849587638, 1.4674653735790752),
            (-7.809568579661175, -4.819603866925582),
            (-7.452534889900364, -7.798251531135873),
            (-2.7367875903822948, -8.879357429965474),
            (-0.27982620195027013, -1.0995548902324185),
            (-0.23293227181441068, -0.9180645255114753),
            (0.22685407727832052, -0.92019206556494),
            (0.26946066722545707, -1.0958445992299331),
            (1.9984396387923748, -8.936596465013379),
        ];
        for (wx, wy) in want {
            assert!(
                pts.iter().any(|(p, _)| {
                    let (x, y) = p.to_affine(2).unwrap();
                    (x - c64(wx)).norm() < 1e-8 && (y - c64(wy)).norm() < 1e-8
                }),
                "missing base point near ({wx}, {wy})"
            );
        }
        // Every member vanishes at every base point.
        for (mu, lambda) in [(1.0, 0.7), (1.0, -2.3), (0.0, 1.0), (1.0, 5.5)] {
            let member = pencil_member_cubic(
                &cp,
                &PencilParam::new(c64(mu), c64(lambda)).unwrap(),
            );
            for (p, _) in &pts {
                let mags = p.coords().map(|c| c.norm());
                assert!(member.eval(p).norm() <= 1e-8 * member.eval_abs(mags).max(1.0));
            }
        }
    }

    #[test]
    fn base_points_trip_the_lambda_map() {
        let cp = CubicPencil::default();
        let m = LambdaMap::new(&cp);
        for (p, _) in base_points_cubic(&cp).unwrap() {
            let (x, y) = p.to_affine(2).unwrap();
            assert!(matches!(
                lambda_of_point(&m, x, y),
                Err(Error::BasePoint { .. })
            ));
        }
    }

    #[test]
    fn critical_point_search_finds_the_true_set() {
        let cp = CubicPencil::default();
        let records = find_critical_points(&cp, &SearchConfig::default()).unwrap();
        // 11 finite critical points and one on the μ = 0 member.
        let finite: Vec<&CriticalPointRecord> = records
            .iter()
            .filter(|r| matches!(r.lambda, LambdaValue::Finite(_)))
            .collect();
        let infinite: Vec<&CriticalPointRecord> = records
            .iter()
            .filter(|r| matches!(r.lambda, LambdaValue::Infinity))
            .collect();
        assert_eq!(finite.len(), 11, "finite critical points: {records:#?}");
        assert_eq!(infinite.len(), 1);
        assert!((infinite[0].x).norm() < 1e-9);
        assert!((infinite[0].y - c(-1.0, 0.0)).norm() < 1e-9);

        // Frozen high-precision values (λ, x, y), sorted by (Re λ, Im λ),
        // from an independent elimination of the gradient system.
        let want: [(Complex64, Complex64, Complex64); 11] = [
            (
                c(-16.975329629501280, 0.0),
                c(-10.991776543167093, 0.0),
                c(-6.379905894147577, 0.0),
            ),
            (
                c(-2.5742291954515014, 0.0),
                c(-6.191409731817167, 0.0),
                c(-6.638242786217136, 0.0),
            ),
            (
                c(-0.0661186976914978, 0.0),
                c(-5.355372899230499, 0.0),
                c(-17.044636498159917, 0.0),
            ),
            (c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            (
                c(0.0206201274660022, 0.0),
                c(-5.326459957511333, 0.0),
                c(24.741557391882411, 0.0),
            ),
            (
                c(0.0496307926249561, 0.0),
                c(0.0, 0.0),
                c(4.772001872658766, 0.0),
            ),
            (
                c(0.3541778011250439, 0.0),
                c(0.0, 0.0),
                c(-3.772001872658766, 0.0),
            ),
            (
                c(12.990303372057059, 0.0),
                c(-1.0032322093143136, 0.0),
                c(-1.0097339937334529, 0.0),
            ),
            (
                c(17.504422294431622, -2.6036342407155439),
                c(0.5014740981438741, -0.8678780802385146),
                c(-1.0070436890912377, -0.0010566732705144),
            ),
            (
                c(17.504422294431622, 2.6036342407155439),
                c(0.5014740981438741, 0.8678780802385146),
                c(-1.0070436890912377, 0.0010566732705144),
            ),
            (
                c(67.595909434257973, 0.0),
                c(17.198636478085991, 0.0),
                c(-6.321617508108519, 0.0),
            ),
        ];
        for (i, (wl, wx, wy)) in want.iter().enumerate() {
            let r = finite[i];
            let l = r.lambda.finite().unwrap();
            assert!((l - wl).norm() < 1e-6, "λ[{i}] = {l} vs {wl}");
            assert!((r.x - wx).norm() < 1e-6, "x[{i}] = {} vs {wx}", r.x);
            assert!((r.y - wy).norm() < 1e-6, "y[{i}] = {} vs {wy}", r.y);
            assert!(r.residual <= 1e-9);
        }
    }

    #[test]
    fn critical_set_is_conjugation_symmetric() {
        let cp = CubicPencil::default();
        let records = find_critical_points(&cp, &SearchConfig::default()).unwrap();
        for r in &records {
            assert!(
                records.iter().any(|s| (s.x - r.x.conj()).norm() < 1e-6
                    && (s.y - r.y.conj()).norm() < 1e-6),
                "conjugate of ({}, {}) missing",
                r.x,
                r.y
            );
        }
    }

    #[test]
    fn no_critical_points_at_infinity_for_default_pencil() {
        let cp = CubicPencil::default();
        assert!(infinite_critical_points(&cp).unwrap().is_empty());
    }

    #[test]
    fn reference_rows_partially_reproduce() {
        // The x = 0 rows and the μ = 0 row of the published table agree with
        // the search; the remaining rows do not correspond to zeros of the
        // printed map's gradient (documented discrepancy), so this test pins
        // the honest outcome: exactly rows 1, 2, 3, and 12 match.
        let cp = CubicPencil::default();
        let records = find_critical_points(&cp, &SearchConfig::default()).unwrap();
        let rows = reference_rows();
        let matched: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(_, row)| records.iter().any(|r| record_matches_row(r, row)))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(matched, vec![1, 2, 3, 12]);
    }

    #[test]
    fn two_sig_rounding_keys() {
        assert_eq!(two_sig_key(4.772), two_sig_key(4.8));
        assert_eq!(two_sig_key(0.049630), two_sig_key(0.05));
        assert_eq!(two_sig_key(-3.772), two_sig_key(-3.8));
        assert_eq!(two_sig_key(0.0), (0, 0));
        assert_eq!(two_sig_key(1e-9), (0, 0));
        assert_ne!(two_sig_key(17.504), two_sig_key(17.0));
        assert_eq!(two_sig_key(-110.0), (2, -11));
        assert_eq!(two_sig_key(0.00046), (-4, 46));
        // mantissa rounding up to 100 bumps the exponent
        assert_eq!(two_sig_key(0.999), two_sig_key(1.0));
    }

    #[test]
    fn sampling_the_parabola() {
        let parabola = HomogPoly3::from_real_terms(2, &[(0, 1, 1, 1.0), (2, 0, 0, -1.0)]).unwrap();
        let pts = sample_curve(&parabola, (-2.0, 2.0, -2.0, 2.0), 41);
        assert!(!pts.is_empty());
        for (x, y) in pts {
            assert!((y - x * x).abs() <= 1e-9 * (1.0 + x * x));
        }
        // Window that misses the curve entirely.
        let empty = sample_curve(&parabola, (5.0, 6.0, 0.0, 1.0), 11);
        assert!(empty.is_empty());
    }

    #[test]
    fn sampling_the_nodal_member() {
        let cp = CubicPencil::default();
        let f1 = pencil_member_cubic(&cp, &PencilParam::new(c64(1.0), c64(0.0)).unwrap());
        let pts = sample_curve(&f1, (-1.0, 1.0, -5.0, 5.0), 21);
        assert!(!pts.is_empty());
        let fa = f1.dehomogenize(2);
        for (x, y) in &pts {
            let scale = fa.eval_abs(x.abs(), y.abs()).max(1.0);
            assert!(fa.eval(c64(*x), c64(*y)).norm() <= 1e-9 * scale);
        }
        // The node at the origin is on the locus.
        assert!(pts.iter().any(|(x, y)| x.abs() < 1e-12 && y.abs() < 1e-12));
    }
}
