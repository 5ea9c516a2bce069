//! Plane conics and pencils of conics: the geometric route to the quartic.
//!
//! A monic depressed quartic `u⁴ + pu² + qu + r` is the intersection of the
//! parabola `v = u²` with the conic `v² + pvw + quw + rw² = 0`; those two
//! conics span a pencil whose members all pass through the four intersection
//! points. A member of rank ≤ 2 is a pair of lines, and intersecting lines
//! with the parabola only takes square roots — so finding one singular
//! member (a cubic determinant condition) solves the quartic.

use num_complex::Complex64;

use crate::closed_form::{self, DepressedQuartic};
use crate::error::{Error, Result};
use crate::poly::{canonicalize, HomogPoly3, PencilParam, Poly1, ProjPoint, RootSet, CLUSTER_TOL};

/// Relative tolerance for numerical rank decisions on conic matrices.
pub const RANK_TOL: f64 = 1e-9;

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

// ---------------------------------------------------------------------------
// Conic
// ---------------------------------------------------------------------------

/// A plane conic `Pᵀ M P = 0` on points `P = [u : v : w]`, stored as the
/// upper triangle of the symmetric matrix `M`, so symmetry holds exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conic {
    pub m00: Complex64,
    pub m01: Complex64,
    pub m02: Complex64,
    pub m11: Complex64,
    pub m12: Complex64,
    pub m22: Complex64,
}

impl Conic {
    /// Build from the six upper-triangle entries `[m00, m01, m02, m11, m12, m22]`.
    pub fn from_upper(e: [Complex64; 6]) -> Self {
        Conic {
            m00: e[0],
            m01: e[1],
            m02: e[2],
            m11: e[3],
            m12: e[4],
            m22: e[5],
        }
    }

    /// The six upper-triangle entries in `[m00, m01, m02, m11, m12, m22]` order.
    pub fn upper(&self) -> [Complex64; 6] {
        [self.m00, self.m01, self.m02, self.m11, self.m12, self.m22]
    }

    /// The full symmetric matrix.
    pub fn matrix(&self) -> [[Complex64; 3]; 3] {
        [
            [self.m00, self.m01, self.m02],
            [self.m01, self.m11, self.m12],
            [self.m02, self.m12, self.m22],
        ]
    }

    /// Largest entry magnitude, used to scale rank tolerances.
    pub fn max_norm(&self) -> f64 {
        self.upper().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Quadratic form value at raw coordinates.
    pub fn eval_raw(&self, p: [Complex64; 3]) -> Complex64 {
        let [u, v, w] = p;
        self.m00 * u * u
            + self.m11 * v * v
            + self.m22 * w * w
            + 2.0 * (self.m01 * u * v + self.m02 * u * w + self.m12 * v * w)
    }

    /// Quadratic form value at a projective point's canonical representative.
    pub fn eval(&self, p: &ProjPoint) -> Complex64 {
        self.eval_raw(p.coords())
    }

    /// Bilinear form `aᵀ M b` (the polarization of the quadratic form).
    pub fn bilinear(&self, a: [Complex64; 3], b: [Complex64; 3]) -> Complex64 {
        let m = self.matrix();
        let mut acc = zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += a[i] * m[i][j] * b[j];
            }
        }
        acc
    }

    pub fn scale(&self, s: Complex64) -> Conic {
        let e = self.upper().map(|c| c * s);
        Conic::from_upper(e)
    }

    pub fn add(&self, other: &Conic) -> Conic {
        let a = self.upper();
        let b = other.upper();
        Conic::from_upper([
            a[0] + b[0],
            a[1] + b[1],
            a[2] + b[2],
            a[3] + b[3],
            a[4] + b[4],
            a[5] + b[5],
        ])
    }

    pub fn det(&self) -> Complex64 {
        let m = self.matrix();
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Adjugate (transposed cofactor) matrix; symmetric for symmetric input.
    pub fn adjugate(&self) -> [[Complex64; 3]; 3] {
        let m = self.matrix();
        let cof = |r1: usize, r2: usize, c1: usize, c2: usize| {
            m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
        };
        [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ]
    }

    /// The conic as a degree-2 homogeneous polynomial in `(u, v, w)`.
    pub fn to_homog(&self) -> HomogPoly3 {
        HomogPoly3::new(
            2,
            &[
                (2, 0, 0, self.m00),
                (0, 2, 0, self.m11),
                (0, 0, 2, self.m22),
                (1, 1, 0, 2.0 * self.m01),
                (1, 0, 1, 2.0 * self.m02),
                (0, 1, 1, 2.0 * self.m12),
            ],
        )
        .expect("conic terms are homogeneous of degree 2 by construction")
    }
}

// ---------------------------------------------------------------------------
// Line
// ---------------------------------------------------------------------------

/// A projective line `{P : l·P = 0}`, stored as a canonicalized covector
/// (largest-modulus coefficient exactly 1, like `ProjPoint`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    l: [Complex64; 3],
}

impl Line {
    pub fn new(coeffs: [Complex64; 3]) -> Result<Self> {
        Ok(Line {
            l: canonicalize(coeffs)?,
        })
    }

    pub fn coeffs(&self) -> [Complex64; 3] {
        self.l
    }

    pub fn eval(&self, p: &ProjPoint) -> Complex64 {
        let c = p.coords();
        self.l[0] * c[0] + self.l[1] * c[1] + self.l[2] * c[2]
    }

    pub fn eq_tol(&self, other: &Line, tol: f64) -> bool {
        self.l
            .iter()
            .zip(other.l.iter())
            .all(|(a, b)| (a - b).norm() <= tol)
    }
}

fn cross(a: [Complex64; 3], b: [Complex64; 3]) -> [Complex64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Skew matrix of the cross product: `cross_matrix(p) · x = p × x`.
fn cross_matrix(p: [Complex64; 3]) -> [[Complex64; 3]; 3] {
    [
        [zero(), -p[2], p[1]],
        [p[2], zero(), -p[0]],
        [-p[1], p[0], zero()],
    ]
}

// ---------------------------------------------------------------------------
// Pencils of conics
// ---------------------------------------------------------------------------

/// The pencil `μ·c1 + λ·c2` spanned by two conics. For quartic solving,
/// `c1` carries the quartic's coefficients and `c2` is the parabola.
#[derive(Clone, Copy, Debug)]
pub struct PencilOfConics {
    pub c1: Conic,
    pub c2: Conic,
}

/// One rank ≤ 2 member of a pencil.
#[derive(Clone, Debug)]
pub struct SingularMember {
    pub param: PencilParam,
    pub multiplicity: u32,
    pub conic: Conic,
}

/// The singular members of a pencil together with the determinant cubic
/// (in the affine chart λ = λ/μ) they are the roots of.
#[derive(Clone, Debug)]
pub struct SingularMembers {
    pub det_cubic: Poly1,
    pub members: Vec<SingularMember>,
}

/// Encode `u⁴ + pu² + qu + r` as a pencil: `c1` is the conic
/// `v² + pvw + quw + rw²` and `c2` is the parabola `vw − u²`; the quartic's
/// roots are the `u`-coordinates of the pencil's base points.
pub fn quartic_to_pencil(dq: &DepressedQuartic) -> PencilOfConics {
    let c1 = Conic {
        m00: zero(),
        m01: zero(),
        m02: dq.q / 2.0,
        m11: c64(1.0),
        m12: dq.p / 2.0,
        m22: dq.r,
    };
    let c2 = Conic {
        m00: c64(-1.0),
        m01: zero(),
        m02: zero(),
        m11: zero(),
        m12: c64(0.5),
        m22: zero(),
    };
    PencilOfConics { c1, c2 }
}

/// The member `μ·c1 + λ·c2`.
pub fn pencil_member(pc: &PencilOfConics, t: &PencilParam) -> Conic {
    pc.c1.scale(t.mu()).add(&pc.c2.scale(t.lambda()))
}

/// `det(m1 + λ·m2)` as an exact cubic in λ, by expanding the 3×3 determinant
/// with degree-1 polynomial entries.
pub fn det_poly(pc: &PencilOfConics) -> Poly1 {
    let m1 = pc.c1.matrix();
    let m2 = pc.c2.matrix();
    let entry = |i: usize, j: usize| Poly1::new(vec![m1[i][j], m2[i][j]]);
    let prod3 = |a: Poly1, b: Poly1, c: Poly1| a.mul(&b).mul(&c);
    // Leibniz expansion over the six permutations of {0,1,2}.
    let mut det = Poly1::zero();
    let perms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([1, 2, 0], 1.0),
        ([2, 0, 1], 1.0),
        ([0, 2, 1], -1.0),
        ([2, 1, 0], -1.0),
        ([1, 0, 2], -1.0),
    ];
    for (perm, sign) in perms {
        let term = prod3(entry(0, perm[0]), entry(1, perm[1]), entry(2, perm[2]));
        det = det.add(&term.scale(c64(sign)));
    }
    det
}

/// All pencil parameters whose member has rank ≤ 2, with multiplicities,
/// found as roots of the determinant cubic. A root "at infinity" (the cubic
/// degenerating below degree 3) is the member `[0 : 1]`.
pub fn singular_members(pc: &PencilOfConics) -> Result<SingularMembers> {
    let det_cubic = det_poly(pc);
    let scale = pc.c1.max_norm().max(pc.c2.max_norm());
    let coeff_scale = det_cubic.max_coeff_norm();
    if coeff_scale <= 1e-12 * scale.powi(3) {
        return Err(Error::IdenticallySingularPencil);
    }
    // Decide the effective degree: trailing coefficients below the relative
    // floor correspond to singular members at μ = 0.
    let trimmed = det_cubic.trim_trailing(1e-12);
    let effective_degree = trimmed.degree()?;
    let mut members = Vec::new();
    if effective_degree > 0 {
        let roots = closed_form::solve_any(&trimmed)?;
        for entry in &roots.roots {
            let param = PencilParam::from_lambda(entry.value);
            members.push(SingularMember {
                param,
                multiplicity: entry.multiplicity,
                conic: pencil_member(pc, &param),
            });
        }
    }
    let infinity_multiplicity = 3 - effective_degree as u32;
    if infinity_multiplicity > 0 {
        let param = PencilParam::at_infinity();
        members.push(SingularMember {
            param,
            multiplicity: infinity_multiplicity,
            conic: pencil_member(pc, &param),
        });
    }
    Ok(SingularMembers { det_cubic, members })
}

/// Split a conic of rank ≤ 2 into its two lines (equal lines for rank 1).
///
/// Rank 2: the adjugate is `−ppᵀ` for the singular point `p`; adding the
/// cross-product matrix of `p` to the conic collapses it to the rank-1
/// product of its two lines, read off as the largest row and column.
/// Rank 1: the conic is `±llᵀ` and a scaled column is the double line.
pub fn split_degenerate_conic(c: &Conic) -> Result<(Line, Line)> {
    let n = c.max_norm();
    if n == 0.0 {
        return Err(Error::Internal("cannot split the zero conic"));
    }
    if c.det().norm() > RANK_TOL * n.powi(3) {
        return Err(Error::NotDegenerate);
    }
    let adj = c.adjugate();
    let adj_max = adj
        .iter()
        .flatten()
        .map(|e| e.norm())
        .fold(0.0, f64::max);

    if adj_max > RANK_TOL * n * n {
        // Rank 2. Largest adjugate diagonal entry locates a usable
        // coordinate of the singular point (diagonal dominance holds for
        // any symmetric rank-1 matrix, which the adjugate now is).
        let i = (0..3)
            .max_by(|&a, &b| adj[a][a].norm().partial_cmp(&adj[b][b].norm()).unwrap())
            .unwrap();
        let beta = (-adj[i][i]).sqrt();
        if beta.norm() == 0.0 {
            return Err(Error::Internal("degenerate conic: adjugate diagonal vanished"));
        }
        let p = [adj[0][i] / beta, adj[1][i] / beta, adj[2][i] / beta];
        let cm = cross_matrix(p);
        let m = c.matrix();
        let mut d = [[zero(); 3]; 3];
        for (r, row) in d.iter_mut().enumerate() {
            for (s, entry) in row.iter_mut().enumerate() {
                *entry = m[r][s] + cm[r][s];
            }
        }
        // d = (scaled) outer product line₁·line₂ᵀ: rows are multiples of
        // line₂ᵀ and columns multiples of line₁.
        let (mut bi, mut bj, mut best) = (0, 0, -1.0);
        for (r, row) in d.iter().enumerate() {
            for (s, entry) in row.iter().enumerate() {
                if entry.norm() > best {
                    best = entry.norm();
                    bi = r;
                    bj = s;
                }
            }
        }
        let row = Line::new(d[bi])?;
        let col = Line::new([d[0][bj], d[1][bj], d[2][bj]])?;
        Ok((col, row))
    } else {
        // Rank 1: double line.
        let m = c.matrix();
        let i = (0..3)
            .max_by(|&a, &b| m[a][a].norm().partial_cmp(&m[b][b].norm()).unwrap())
            .unwrap();
        let g = m[i][i].sqrt();
        if g.norm() == 0.0 {
            return Err(Error::Internal("rank-1 conic with vanishing diagonal"));
        }
        let line = Line::new([m[0][i] / g, m[1][i] / g, m[2][i] / g])?;
        Ok((line, line))
    }
}

/// The (at most two) intersection points of a line and a conic, with
/// multiplicity 2 at a tangency. Errors if the line lies on the conic.
pub fn intersect_line_conic(l: &Line, c: &Conic) -> Result<Vec<(ProjPoint, u32)>> {
    let lc = l.coeffs();
    // Span the line by two well-conditioned points: cross the covector with
    // the two coordinate axes other than its largest coefficient.
    let a = (0..3)
        .max_by(|&i, &j| lc[i].norm().partial_cmp(&lc[j].norm()).unwrap())
        .unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != a).collect();
    let axis = |i: usize| {
        let mut e = [zero(); 3];
        e[i] = c64(1.0);
        e
    };
    let p1 = cross(lc, axis(others[0]));
    let p2 = cross(lc, axis(others[1]));

    // Restrict the quadratic form to the line: Q(s·p1 + t·p2) = αs² + 2βst + γt².
    let alpha = c.bilinear(p1, p1);
    let beta = c.bilinear(p1, p2);
    let gamma = c.bilinear(p2, p2);

    let pmax = p1
        .iter()
        .chain(p2.iter())
        .map(|e| e.norm())
        .fold(0.0, f64::max);
    let cond = 9.0 * c.max_norm() * pmax * pmax;
    let big = alpha.norm().max(beta.norm()).max(gamma.norm());
    if big <= 1e-12 * cond {
        return Err(Error::LineOnConic);
    }

    // Solve the binary quadratic for [s : t], avoiding the vanishing lead.
    let eps = 1e-12 * big;
    let params: Vec<(Complex64, Complex64, u32)> = if alpha.norm() > eps && alpha.norm() >= gamma.norm()
    {
        let rs = closed_form::solve_quadratic(alpha, 2.0 * beta, gamma)?;
        rs.roots
            .iter()
            .map(|e| (e.value, c64(1.0), e.multiplicity))
            .collect()
    } else if gamma.norm() > eps {
        let rs = closed_form::solve_quadratic(gamma, 2.0 * beta, alpha)?;
        rs.roots
            .iter()
            .map(|e| (c64(1.0), e.value, e.multiplicity))
            .collect()
    } else {
        // Both squares vanish: Q = 2βst, roots are the two spanning points.
        vec![(c64(1.0), zero(), 1), (zero(), c64(1.0), 1)]
    };

    let mut out: Vec<(ProjPoint, u32)> = Vec::new();
    for (s, t, mult) in params {
        let coords = [
            s * p1[0] + t * p2[0],
            s * p1[1] + t * p2[1],
            s * p1[2] + t * p2[2],
        ];
        let point = ProjPoint::new(coords)?;
        match out.iter_mut().find(|(q, _)| q.eq_tol(&point, CLUSTER_TOL)) {
            Some((_, m)) => *m += mult,
            None => out.push((point, mult)),
        }
    }
    sort_points(&mut out);
    Ok(out)
}

fn sort_points(points: &mut [(ProjPoint, u32)]) {
    points.sort_by(|(a, _), (b, _)| {
        let ka: Vec<(f64, f64)> = a.coords().iter().map(|c| (c.re, c.im)).collect();
        let kb: Vec<(f64, f64)> = b.coords().iter().map(|c| (c.re, c.im)).collect();
        ka.partial_cmp(&kb).unwrap()
    });
}

/// The four base points of the pencil (points on every member), counted with
/// multiplicity: split one singular member into lines and intersect each
/// line with a non-split member.
pub fn base_points(pc: &PencilOfConics) -> Result<Vec<(ProjPoint, u32)>> {
    let sm = singular_members(pc)?;
    // Prefer the affine singular member of largest |λ| (mirrors the
    // resolvent-root selection rule); fall back to the μ = 0 member only if
    // no affine one exists, intersecting with c1 instead of c2 in that case.
    let affine_best = sm
        .members
        .iter()
        .filter_map(|m| m.param.lambda_affine().map(|l| (l, m)))
        .max_by(|(a, _), (b, _)| {
            (a.norm(), a.re, a.im)
                .partial_cmp(&(b.norm(), b.re, b.im))
                .unwrap()
        });
    let (member, target) = match affine_best {
        Some((_, m)) => (m, pc.c2),
        None => {
            let m = sm
                .members
                .first()
                .ok_or(Error::Internal("no singular member found"))?;
            (m, pc.c1)
        }
    };
    let (l1, l2) = split_degenerate_conic(&member.conic)?;
    let mut out: Vec<(ProjPoint, u32)> = Vec::new();
    for line in [l1, l2] {
        for (point, mult) in intersect_line_conic(&line, &target)? {
            match out.iter_mut().find(|(q, _)| q.eq_tol(&point, CLUSTER_TOL)) {
                Some((_, m)) => *m += mult,
                None => out.push((point, mult)),
            }
        }
    }
    sort_points(&mut out);
    Ok(out)
}

/// Solve a depressed quartic geometrically: the `u`-coordinates of the
/// pencil's base points, Newton-polished against the quartic.
pub fn solve_quartic_via_pencil(dq: &DepressedQuartic) -> Result<RootSet> {
    let pc = quartic_to_pencil(dq);
    let points = base_points(&pc)?;
    let poly = Poly1::new(vec![dq.r, dq.q, dq.p, zero(), c64(1.0)]);
    let mut values = Vec::with_capacity(4);
    for (point, mult) in points {
        let (u, _v) = point.to_affine(2).ok_or(Error::Internal(
            "quartic pencil produced a base point at infinity, which the parabola cannot contain",
        ))?;
        let polished = crate::oracle::polish_root(&poly, u, 8).0;
        values.extend(std::iter::repeat_n(polished, mult as usize));
    }
    Ok(RootSet::from_values(&values, CLUSTER_TOL, &poly))
}
