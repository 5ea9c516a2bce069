//! Closed-form solvers: the stable quadratic formula, Cardano's cubic with
//! explicit cube-root pairing, a trigonometric solver for the reduced cubic
//! `4u³ − 3u − k`, and the quartic via the depressed transform, the resolvent
//! cubic, and a pair of quadratic factors.
//!
//! Every solver Newton-polishes each root once against the original
//! polynomial before returning, which recovers digits lost to cancellation
//! without changing the method.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{Poly1, RootSet, CLUSTER_TOL};

/// Monic quartic `x⁴ + ax³ + bx² + cx + d`.
#[derive(Clone, Copy, Debug)]
pub struct QuarticCoeffs {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Depressed quartic `u⁴ + pu² + qu + r` together with the substitution
/// `x = u + shift` (`shift = −a/4`) that produced it.
#[derive(Clone, Copy, Debug)]
pub struct DepressedQuartic {
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
    pub shift: Complex64,
}

/// The resolvent-cubic root chosen to factor a depressed quartic, with the
/// square-root branch used and the full resolvent root set for diagnostics.
#[derive(Clone, Debug)]
pub struct LambdaChoice {
    pub lambda: Complex64,
    pub sqrt_lambda: Complex64,
    pub all_resolvent_roots: RootSet,
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// One guarded Newton step against `p`: take the step only if it does not
/// increase the residual (it can, exactly at a multiple root).
fn polish_once(p: &Poly1, z: Complex64) -> Complex64 {
    let pz = p.eval(z);
    if pz.norm() == 0.0 {
        return z;
    }
    let dpz = p.derivative().eval(z);
    if dpz.norm() == 0.0 {
        return z;
    }
    let z2 = z - pz / dpz;
    if p.eval(z2).norm() <= pz.norm() {
        z2
    } else {
        z
    }
}

fn polished_rootset(values: Vec<Complex64>, p: &Poly1) -> RootSet {
    let polished: Vec<Complex64> = values.into_iter().map(|z| polish_once(p, z)).collect();
    RootSet::from_values(&polished, CLUSTER_TOL, p)
}

// ---------------------------------------------------------------------------
// Quadratic
// ---------------------------------------------------------------------------

/// Both roots of `az² + bz + c`, computed cancellation-free: the square root
/// of the discriminant is oriented to reinforce `b`, giving the
/// larger-magnitude root; the other comes from the root product `c/a`.
pub fn solve_quadratic(a: Complex64, b: Complex64, c: Complex64) -> Result<RootSet> {
    if a.norm() == 0.0 {
        return Err(Error::QuadraticLeadingZero);
    }
    let poly = Poly1::new(vec![c, b, a]);
    let s = (b * b - 4.0 * a * c).sqrt();
    // Pick the sign that makes b and s add constructively.
    let s = if (b.conj() * s).re >= 0.0 { s } else { -s };
    let big = -(b + s) / 2.0;
    let values = if big.norm() == 0.0 {
        // b and the discriminant root both vanish, so c must too: double root 0.
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)]
    } else {
        vec![big / a, c / big]
    };
    Ok(polished_rootset(values, &poly))
}

// ---------------------------------------------------------------------------
// Cubic
// ---------------------------------------------------------------------------

/// All roots of the monic cubic `x³ + ax² + bx + c` by Cardano's formula.
///
/// The depressed form is `t³ + pt + q` with `x = t − a/3`. The two cube
/// roots are coupled: `A` is the principal cube root of the larger-magnitude
/// of `−q/2 ± √(q²/4 + p³/27)` and `B = −p/(3A)`, so that `A·B = −p/3`
/// always holds; the remaining roots rotate `A` and `B` by the primitive
/// cube roots of unity in opposite directions.
pub fn solve_cubic(a: Complex64, b: Complex64, c: Complex64) -> Result<RootSet> {
    let poly = Poly1::new(vec![c, b, a, c64(1.0)]);
    let p = (3.0 * b - a * a) / 3.0;
    let q = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 27.0;
    let shift = -a / 3.0;

    let scale = 1.0_f64.max(a.norm()).max(b.norm()).max(c.norm());
    let p_scale = scale * scale; // p has the dimensions of x²
    let q_scale = scale * scale * scale;
    if p.norm() <= 1e-14 * p_scale && q.norm() <= 1e-14 * q_scale {
        // t³ = 0: triple root at the shift.
        return Ok(polished_rootset(vec![shift; 3], &poly));
    }

    let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let t1 = -q / 2.0 + s;
    let t2 = -q / 2.0 - s;
    let big = if t1.norm() >= t2.norm() { t1 } else { t2 };
    let a_cube = big.cbrt();
    let b_cube = -p / (3.0 * a_cube);

    let omega = Complex64::new(-0.5, 0.75f64.sqrt());
    let omega_bar = omega.conj();
    let values = vec![
        a_cube + b_cube + shift,
        omega * a_cube + omega_bar * b_cube + shift,
        omega_bar * a_cube + omega * b_cube + shift,
    ];
    Ok(polished_rootset(values, &poly))
}

/// All roots of the reduced cubic `4u³ − 3u − k` for real `k`, by comparison
/// with the triple-angle identity `4cos³θ − 3cosθ = cos 3θ`: the roots are
/// `cos((arccos k + 2πj)/3)` for `j = 0, 1, 2`, with `arccos` continued into
/// the complex plane when `|k| > 1`.
pub fn solve_cubic_trig(k: f64) -> RootSet {
    let poly = Poly1::from_real(&[-k, -3.0, 0.0, 4.0]);
    let theta = Complex64::new(k, 0.0).acos();
    let values: Vec<Complex64> = (0..3)
        .map(|j| ((theta + c64(std::f64::consts::TAU * j as f64)) / 3.0).cos())
        .collect();
    polished_rootset(values, &poly)
}

// ---------------------------------------------------------------------------
// Quartic
// ---------------------------------------------------------------------------

/// Substitute `x = u − a/4` to remove the cubic term.
pub fn depress_quartic(qc: &QuarticCoeffs) -> DepressedQuartic {
    let QuarticCoeffs { a, b, c, d } = *qc;
    DepressedQuartic {
        p: b - 3.0 * a * a / 8.0,
        q: c - a * b / 2.0 + a * a * a / 8.0,
        r: d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0,
        shift: -a / 4.0,
    }
}

/// Rebuild the monic quartic that a depressed form came from.
pub fn undepress_quartic(dq: &DepressedQuartic) -> QuarticCoeffs {
    let k = dq.shift;
    // x⁴ + ax³ + bx² + cx + d = (u + k)⁴ + p(u + k)² + q(u + k) + r with u = x − k
    let a = -4.0 * k;
    let b = 6.0 * k * k + dq.p;
    let c = -4.0 * k * k * k - 2.0 * dq.p * k + dq.q;
    let d = k * k * k * k + dq.p * k * k - dq.q * k + dq.r;
    QuarticCoeffs { a, b, c, d }
}

/// The monic resolvent cubic `λ³ + 2pλ² + (p² − 4r)λ − q²` of a depressed
/// quartic, as ascending coefficients.
pub fn resolvent_cubic(dq: &DepressedQuartic) -> Poly1 {
    let DepressedQuartic { p, q, r, .. } = *dq;
    Poly1::new(vec![-q * q, p * p - 4.0 * r, 2.0 * p, c64(1.0)])
}

/// Deterministic choice among the resolvent roots: the nonzero root of
/// largest modulus (ties broken by larger real part, then larger imaginary
/// part), with the principal square root. Keeping `λ` large keeps the
/// `q/√λ` terms of the quadratic factors small.
pub fn select_lambda(resolvent_roots: &RootSet, q: Complex64) -> Result<LambdaChoice> {
    let candidates: Vec<Complex64> = resolvent_roots
        .expanded()
        .into_iter()
        .filter(|z| z.norm() > 1e-12)
        .collect();
    let lambda = candidates
        .into_iter()
        .max_by(|x, y| {
            (x.norm(), x.re, x.im)
                .partial_cmp(&(y.norm(), y.re, y.im))
                .unwrap()
        })
        .ok_or_else(|| {
            if q.norm() == 0.0 {
                Error::Internal("resolvent λ requested on the biquadratic path (q = 0)")
            } else {
                Error::Internal("all resolvent roots vanish although q ≠ 0")
            }
        })?;
    Ok(LambdaChoice {
        lambda,
        sqrt_lambda: lambda.sqrt(),
        all_resolvent_roots: resolvent_roots.clone(),
    })
}

/// The four roots of `u⁴ + pu² + qu + r`.
///
/// Generic path: pick a resolvent root λ and split the quartic into
/// `u² − √λ·u + (p+λ)/2 + q/(2√λ)` and `u² + √λ·u + (p+λ)/2 − q/(2√λ)`
/// (the pairing that agrees with the completed-square derivation). When
/// `q ≈ 0` the resolvent has the root λ = 0 and the split divides by `√λ`,
/// so the quartic is solved as a quadratic in `u²` instead.
pub fn solve_depressed_quartic(dq: &DepressedQuartic) -> Result<RootSet> {
    let DepressedQuartic { p, q, r, .. } = *dq;
    let poly = Poly1::new(vec![r, q, p, c64(0.0), c64(1.0)]);
    let scale = 1.0_f64.max(p.norm()).max(q.norm()).max(r.norm());

    let values = if q.norm() <= 1e-12 * scale {
        // Biquadratic: u⁴ + pu² + r = (u² − v₁)(u² − v₂).
        let vs = solve_quadratic(c64(1.0), p, r)?;
        let mut out = Vec::with_capacity(4);
        for v in vs.expanded() {
            let s = v.sqrt();
            out.push(s);
            out.push(-s);
        }
        out
    } else {
        let resolvent = resolvent_cubic(dq);
        let rr = solve_cubic(resolvent.coeff(2), resolvent.coeff(1), resolvent.coeff(0))?;
        let choice = select_lambda(&rr, q)?;
        let (lambda, s) = (choice.lambda, choice.sqrt_lambda);
        let half = (p + lambda) / 2.0;
        let correction = q / (2.0 * s);
        let mut out = Vec::with_capacity(4);
        out.extend(solve_quadratic(c64(1.0), -s, half + correction)?.expanded());
        out.extend(solve_quadratic(c64(1.0), s, half - correction)?.expanded());
        out
    };
    Ok(polished_rootset(values, &poly))
}

/// The four roots of the monic quartic, by depressing, solving, and
/// translating back by the recorded shift.
pub fn solve_quartic(qc: &QuarticCoeffs) -> Result<RootSet> {
    let dq = depress_quartic(qc);
    let depressed = solve_depressed_quartic(&dq)?;
    let poly = Poly1::new(vec![qc.d, qc.c, qc.b, qc.a, c64(1.0)]);
    // Translate the clustered entries directly so the relation
    // "quartic roots = depressed roots + shift" holds exactly.
    let roots = depressed
        .roots
        .into_iter()
        .map(|mut entry| {
            entry.value += dq.shift;
            entry.residual = poly.eval(entry.value).norm();
            entry
        })
        .collect();
    Ok(RootSet { roots })
}

/// Degree dispatch for polynomials of degree 1 through 4, scaling by the
/// leading coefficient where a solver wants a monic input.
pub fn solve_any(p: &Poly1) -> Result<RootSet> {
    let degree = p.degree()?;
    match degree {
        0 => Err(Error::UnsupportedDegree(0, "no roots to solve for")),
        1 => {
            let root = -p.coeff(0) / p.coeff(1);
            Ok(RootSet::from_values(&[root], CLUSTER_TOL, p))
        }
        2 => {
            let rs = solve_quadratic(p.coeff(2), p.coeff(1), p.coeff(0))?;
            Ok(RootSet::from_values(&rs.expanded(), CLUSTER_TOL, p))
        }
        3 => {
            let lead = p.coeff(3);
            let rs = solve_cubic(p.coeff(2) / lead, p.coeff(1) / lead, p.coeff(0) / lead)?;
            Ok(RootSet::from_values(&rs.expanded(), CLUSTER_TOL, p))
        }
        4 => {
            let lead = p.coeff(4);
            let qc = QuarticCoeffs {
                a: p.coeff(3) / lead,
                b: p.coeff(2) / lead,
                c: p.coeff(1) / lead,
                d: p.coeff(0) / lead,
            };
            let rs = solve_quartic(&qc)?;
            Ok(RootSet::from_values(&rs.expanded(), CLUSTER_TOL, p))
        }
        n => Err(Error::UnsupportedDegree(n, "closed forms stop at degree 4")),
    }
}
