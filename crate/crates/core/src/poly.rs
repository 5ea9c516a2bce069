//! Polynomial and projective-geometry primitives: dense univariate and
//! bivariate polynomials over `Complex64`, trivariate homogeneous
//! polynomials, canonicalized projective points, and multiplicity-aware
//! root sets.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance for projective-point equality on canonical representatives.
pub const POINT_EQ_TOL: f64 = 1e-9;

/// Default tolerance for clustering nearby roots into one multiple root.
pub const CLUSTER_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Poly1: dense univariate polynomial, ascending coefficients
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over `Complex64`; `coeffs[i]` multiplies `x^i`.
///
/// The zero polynomial is the empty coefficient list. Constructors trim
/// exactly-zero leading (highest-degree) coefficients so the last stored
/// coefficient of a nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly1 {
    coeffs: Vec<Complex64>,
}

impl Poly1 {
    /// Build from ascending coefficients, trimming exactly-zero high terms.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    /// Build from ascending real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly1::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    /// Monic polynomial with the given roots, by expansion.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut asc = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); asc.len() + 1];
            for (i, &c) in asc.iter().enumerate() {
                next[i + 1] += c; // x * c x^i
                next[i] -= r * c; // -r * c x^i
            }
            asc = next;
        }
        Poly1::new(asc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or an error for the zero polynomial (whose degree is undefined here).
    pub fn degree(&self) -> Result<usize> {
        if self.coeffs.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly1 {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        Poly1::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }

    /// Same roots, leading coefficient 1.
    pub fn monic(&self) -> Result<Poly1> {
        let lead = *self.coeffs.last().ok_or(Error::ZeroPolynomial)?;
        Ok(Poly1::new(self.coeffs.iter().map(|&c| c / lead).collect()))
    }

    pub fn scale(&self, s: Complex64) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly1::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly1::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Product by coefficient convolution.
    pub fn mul(&self, other: &Poly1) -> Poly1 {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::new(out)
    }

    /// Drop trailing coefficients whose magnitude is at most `tol` times the
    /// largest coefficient magnitude (used after numerically-built expansions).
    pub fn trim_trailing(&self, tol: f64) -> Poly1 {
        let floor = self.max_coeff_norm() * tol;
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.norm() <= floor) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }
}

// ---------------------------------------------------------------------------
// Poly2: dense bivariate polynomial
// ---------------------------------------------------------------------------

/// Which variable of a bivariate polynomial an operation applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Dense bivariate polynomial; `grid[i][j]` multiplies `x^i y^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2 {
    grid: Vec<Vec<Complex64>>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { grid: Vec::new() }
    }

    /// Build from `(x_power, y_power, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, usize, Complex64)]) -> Self {
        let mut p = Poly2::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p.trim();
        p
    }

    /// Build from real-coefficient terms.
    pub fn from_real_terms(terms: &[(usize, usize, f64)]) -> Self {
        Poly2::from_terms(
            &terms
                .iter()
                .map(|&(i, j, c)| (i, j, Complex64::new(c, 0.0)))
                .collect::<Vec<_>>(),
        )
    }

    fn add_term(&mut self, i: usize, j: usize, c: Complex64) {
        while self.grid.len() <= i {
            self.grid.push(Vec::new());
        }
        let row = &mut self.grid[i];
        while row.len() <= j {
            row.push(Complex64::new(0.0, 0.0));
        }
        row[j] += c;
    }

    fn trim(&mut self) {
        for row in &mut self.grid {
            while row.last().is_some_and(|c| c.norm() == 0.0) {
                row.pop();
            }
        }
        while self.grid.last().is_some_and(|row| row.is_empty()) {
            self.grid.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.grid.iter().all(|row| row.is_empty())
    }

    pub fn coeff(&self, i: usize, j: usize) -> Complex64 {
        self.grid
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Degree in the given variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        match v {
            Var::X => Some(
                self.grid
                    .iter()
                    .enumerate()
                    .filter(|(_, row)| !row.is_empty())
                    .map(|(i, _)| i)
                    .max()
                    .unwrap_or(0),
            ),
            Var::Y => Some(self.grid.iter().map(|row| row.len()).max().unwrap_or(1) - 1),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.grid.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| c.norm() != 0.0)
                .map(move |(j, &c)| (i, j, c))
        })
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c);
        }
        out.trim();
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, -c);
        }
        out.trim();
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in other.terms() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out.trim();
        out
    }

    pub fn partial(&self, v: Var) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, j, c) in self.terms() {
            match v {
                Var::X if i > 0 => out.add_term(i - 1, j, c * i as f64),
                Var::Y if j > 0 => out.add_term(i, j - 1, c * j as f64),
                _ => {}
            }
        }
        out.trim();
        out
    }

    /// Horner evaluation: inner Horner in `y` per `x`-row, outer Horner in `x`.
    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for row in self.grid.iter().rev() {
            let mut row_val = Complex64::new(0.0, 0.0);
            for &c in row.iter().rev() {
                row_val = row_val * y + c;
            }
            acc = acc * x + row_val;
        }
        acc
    }

    /// Sum of `|c_ij| * |x|^i * |y|^j` — a conditioning scale for residual
    /// thresholds at the evaluation point.
    pub fn eval_abs(&self, x_mag: f64, y_mag: f64) -> f64 {
        let mut acc = 0.0;
        let mut xp = 1.0;
        for row in &self.grid {
            let mut yp = 1.0;
            for &c in row {
                acc += c.norm() * xp * yp;
                yp *= y_mag;
            }
            xp *= x_mag;
        }
        acc
    }

    /// Substitute a value for one variable, producing a `Poly1` in the other.
    pub fn substitute(&self, v: Var, value: Complex64) -> Poly1 {
        match v {
            // fix x = value, keep a polynomial in y
            Var::X => {
                let ny = self.grid.iter().map(|row| row.len()).max().unwrap_or(0);
                let mut coeffs = vec![Complex64::new(0.0, 0.0); ny];
                let mut xp = Complex64::new(1.0, 0.0);
                for row in &self.grid {
                    for (j, &c) in row.iter().enumerate() {
                        coeffs[j] += c * xp;
                    }
                    xp *= value;
                }
                Poly1::new(coeffs)
            }
            // fix y = value, keep a polynomial in x
            Var::Y => {
                let mut coeffs = Vec::with_capacity(self.grid.len());
                for row in &self.grid {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for &c in row.iter().rev() {
                        acc = acc * value + c;
                    }
                    coeffs.push(acc);
                }
                Poly1::new(coeffs)
            }
        }
    }

    /// Swap the roles of x and y.
    pub fn swap_vars(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, j, c) in self.terms() {
            out.add_term(j, i, c);
        }
        out.trim();
        out
    }

    /// Collect coefficients of each power of the eliminated variable as
    /// polynomials in the kept variable: entry `k` multiplies `elim^k`.
    pub fn coeffs_in(&self, elim: Var) -> Vec<Poly1> {
        let p = match elim {
            Var::Y => self.clone(),
            Var::X => self.swap_vars(),
        };
        // now eliminate y: coefficient of y^k is a Poly1 in x
        let ny = p.grid.iter().map(|row| row.len()).max().unwrap_or(0);
        (0..ny)
            .map(|k| {
                Poly1::new(
                    p.grid
                        .iter()
                        .map(|row| row.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0)))
                        .collect(),
                )
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// HomogPoly3: trivariate homogeneous polynomial
// ---------------------------------------------------------------------------

/// Trivariate homogeneous polynomial of fixed degree `d`; terms are stored
/// sparsely, keyed by the exponent triple `(i, j, k)` with `i + j + k = d`
/// for coordinates `(x, y, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogPoly3 {
    degree: usize,
    terms: BTreeMap<(usize, usize, usize), Complex64>,
}

impl HomogPoly3 {
    /// Build from terms; every exponent triple must sum to `degree`.
    pub fn new(degree: usize, terms: &[(usize, usize, usize, Complex64)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(i, j, k, c) in terms {
            if i + j + k != degree {
                return Err(Error::Internal("homogeneous term has wrong total degree"));
            }
            if c.norm() != 0.0 {
                *map.entry((i, j, k)).or_insert(Complex64::new(0.0, 0.0)) += c;
            }
        }
        map.retain(|_, c| c.norm() != 0.0);
        Ok(HomogPoly3 { degree, terms: map })
    }

    /// Build from real-coefficient terms.
    pub fn from_real_terms(degree: usize, terms: &[(usize, usize, usize, f64)]) -> Result<Self> {
        HomogPoly3::new(
            degree,
            &terms
                .iter()
                .map(|&(i, j, k, c)| (i, j, k, Complex64::new(c, 0.0)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, Complex64)> + '_ {
        self.terms.iter().map(|(&(i, j, k), &c)| (i, j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Evaluate at raw homogeneous coordinates.
    pub fn eval_raw(&self, coords: [Complex64; 3]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(i, j, k), &c) in &self.terms {
            acc += c * coords[0].powu(i as u32) * coords[1].powu(j as u32) * coords[2].powu(k as u32);
        }
        acc
    }

    /// Evaluate at a projective point's canonical representative.
    pub fn eval(&self, p: &ProjPoint) -> Complex64 {
        self.eval_raw(p.coords())
    }

    /// Sum of `|c| * |x|^i |y|^j |z|^k` — conditioning scale at a point.
    pub fn eval_abs(&self, mags: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j, k), &c)| {
                c.norm() * mags[0].powi(i as i32) * mags[1].powi(j as i32) * mags[2].powi(k as i32)
            })
            .sum()
    }

    /// Formal partial derivative in coordinate `var` (0 = x, 1 = y, 2 = z);
    /// homogeneous of degree `d − 1` (zero polynomial if `d = 0`).
    pub fn partial(&self, var: usize) -> HomogPoly3 {
        let mut map = BTreeMap::new();
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            if e[var] == 0 {
                continue;
            }
            let mut f = e;
            f[var] -= 1;
            let coeff = c * e[var] as f64;
            *map.entry((f[0], f[1], f[2])).or_insert(Complex64::new(0.0, 0.0)) += coeff;
        }
        map.retain(|_, c| c.norm() != 0.0);
        HomogPoly3 {
            degree: self.degree.saturating_sub(1),
            terms: map,
        }
    }

    /// Scale all coefficients.
    pub fn scale(&self, s: Complex64) -> HomogPoly3 {
        let mut terms = self.terms.clone();
        for c in terms.values_mut() {
            *c *= s;
        }
        terms.retain(|_, c| c.norm() != 0.0);
        HomogPoly3 {
            degree: self.degree,
            terms,
        }
    }

    pub fn add(&self, other: &HomogPoly3) -> Result<HomogPoly3> {
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::Internal("cannot add homogeneous polynomials of different degree"));
        }
        let mut terms = self.terms.clone();
        for (&key, &c) in &other.terms {
            *terms.entry(key).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        terms.retain(|_, c| c.norm() != 0.0);
        Ok(HomogPoly3 {
            degree: self.degree.max(other.degree),
            terms,
        })
    }

    /// Substitute 1 for the chart coordinate, producing a bivariate affine
    /// polynomial in the remaining coordinates (kept in their original order).
    pub fn dehomogenize(&self, chart: usize) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            let mut rest = [0usize; 2];
            let mut n = 0;
            for (v, &exp) in e.iter().enumerate() {
                if v != chart {
                    rest[n] = exp;
                    n += 1;
                }
            }
            out.add_term(rest[0], rest[1], c);
        }
        out.trim();
        out
    }

    /// Restriction to the line where coordinate `var` is zero, as a binary
    /// form in the two remaining coordinates: entry `i` multiplies
    /// `first^i * second^(d−i)` with the surviving coordinates in order.
    pub fn restrict_to_zero(&self, var: usize) -> Vec<Complex64> {
        let d = self.degree;
        let mut out = vec![Complex64::new(0.0, 0.0); d + 1];
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            if e[var] != 0 {
                continue;
            }
            let rest: Vec<usize> = (0..3).filter(|&v| v != var).map(|v| e[v]).collect();
            out[rest[0]] += c;
        }
        out
    }
}

/// Homogenize a bivariate affine polynomial to total degree `d`, inserting
/// the new (homogenizing) variable at coordinate index `new_var` of the
/// resulting `(x, y, z)`-style triple; the affine variables fill the
/// remaining slots in order.
pub fn homogenize(f: &Poly2, d: usize, new_var: usize) -> Result<HomogPoly3> {
    let total = f
        .terms()
        .map(|(i, j, _)| i + j)
        .max()
        .ok_or(Error::ZeroPolynomial)?;
    if d < total {
        return Err(Error::HomogenizeDegreeTooSmall { given: d, needed: total });
    }
    let mut terms = Vec::new();
    for (i, j, c) in f.terms() {
        let fill = d - i - j;
        let mut triple = [0usize; 3];
        triple[new_var] = fill;
        let mut affine = [i, j].into_iter();
        for (slot, t) in triple.iter_mut().enumerate() {
            if slot != new_var {
                *t = affine.next().unwrap();
            }
        }
        terms.push((triple[0], triple[1], triple[2], c));
    }
    HomogPoly3::new(d, &terms)
}

// ---------------------------------------------------------------------------
// Projective points
// ---------------------------------------------------------------------------

pub(crate) fn canonicalize<const N: usize>(mut coords: [Complex64; N]) -> Result<[Complex64; N]> {
    let mut best = 0;
    let mut best_norm = 0.0;
    for (i, c) in coords.iter().enumerate() {
        let n = c.norm();
        // strict inequality: ties go to the lowest index
        if n > best_norm {
            best_norm = n;
            best = i;
        }
    }
    if best_norm == 0.0 {
        return Err(Error::AllZeroCoordinates);
    }
    let pivot = coords[best];
    for c in coords.iter_mut() {
        *c /= pivot;
    }
    coords[best] = Complex64::new(1.0, 0.0); // exact, not 1 + 0i*eps
    Ok(coords)
}

/// A point of the projective plane, stored as the canonical representative
/// whose largest-modulus coordinate is exactly `1 + 0i` (ties broken by the
/// lowest index). Canonical storage makes equality and output deterministic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjPoint {
    coords: [Complex64; 3],
}

impl ProjPoint {
    /// Canonicalize raw homogeneous coordinates; errors on the zero tuple.
    pub fn new(coords: [Complex64; 3]) -> Result<Self> {
        Ok(ProjPoint {
            coords: canonicalize(coords)?,
        })
    }

    /// The affine point `(x, y)` embedded in the chart `z = 1`.
    pub fn from_affine(x: Complex64, y: Complex64) -> Self {
        ProjPoint::new([x, y, Complex64::new(1.0, 0.0)]).expect("affine embedding is never zero")
    }

    pub fn coords(&self) -> [Complex64; 3] {
        self.coords
    }

    /// Equality within `tol` on canonical representatives.
    pub fn eq_tol(&self, other: &ProjPoint, tol: f64) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// Affine coordinates in the chart where coordinate `chart` is 1, if the
    /// point is finite there (chart coordinate not vanishingly small).
    pub fn to_affine(&self, chart: usize) -> Option<(Complex64, Complex64)> {
        let w = self.coords[chart];
        if w.norm() <= POINT_EQ_TOL {
            return None;
        }
        let rest: Vec<Complex64> = (0..3)
            .filter(|&v| v != chart)
            .map(|v| self.coords[v] / w)
            .collect();
        Some((rest[0], rest[1]))
    }
}

/// A point `[μ : λ]` of the projective line labeling a pencil member, stored
/// canonically like [`ProjPoint`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PencilParam {
    coords: [Complex64; 2],
}

impl PencilParam {
    pub fn new(mu: Complex64, lambda: Complex64) -> Result<Self> {
        let [a, b] = canonical2([mu, lambda])?;
        Ok(PencilParam { coords: [a, b] })
    }

    /// The member `[1 : λ]` of the affine λ-chart.
    pub fn from_lambda(lambda: Complex64) -> Self {
        PencilParam::new(Complex64::new(1.0, 0.0), lambda).expect("nonzero by construction")
    }

    /// The member `[0 : 1]` (μ = 0).
    pub fn at_infinity() -> Self {
        PencilParam {
            coords: [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    pub fn mu(&self) -> Complex64 {
        self.coords[0]
    }

    pub fn lambda(&self) -> Complex64 {
        self.coords[1]
    }

    /// λ/μ if μ is not vanishingly small, else `None` (the μ = 0 member).
    pub fn lambda_affine(&self) -> Option<Complex64> {
        if self.coords[0].norm() <= POINT_EQ_TOL {
            None
        } else {
            Some(self.coords[1] / self.coords[0])
        }
    }

    pub fn eq_tol(&self, other: &PencilParam, tol: f64) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| (a - b).norm() <= tol)
    }
}

fn canonical2(coords: [Complex64; 2]) -> Result<[Complex64; 2]> {
    let (a, b) = (coords[0], coords[1]);
    if a.norm() == 0.0 && b.norm() == 0.0 {
        return Err(Error::AllZeroCoordinates);
    }
    if a.norm() >= b.norm() {
        Ok([Complex64::new(1.0, 0.0), b / a])
    } else {
        Ok([a / b, Complex64::new(1.0, 0.0)])
    }
}

// ---------------------------------------------------------------------------
// RootSet
// ---------------------------------------------------------------------------

/// One root with its multiplicity and the residual `|p(root)|` diagnostic.
#[derive(Clone, Copy, Debug)]
pub struct RootEntry {
    pub value: Complex64,
    pub multiplicity: u32,
    pub residual: f64,
}

/// Roots of a polynomial counted with multiplicity; values within the
/// clustering tolerance are merged into one entry with summed multiplicity.
/// Entries are sorted by `(Re, Im)` for deterministic output.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<RootEntry>,
}

impl RootSet {
    /// Cluster raw root values at `cluster_tol`, attach residuals from `p`.
    pub fn from_values(values: &[Complex64], cluster_tol: f64, p: &Poly1) -> RootSet {
        let mut vals: Vec<Complex64> = values.to_vec();
        vals.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        let mut clusters: Vec<(Complex64, u32)> = Vec::new();
        for v in vals {
            // mean-linkage against the running cluster representative
            match clusters
                .iter_mut()
                .find(|(rep, _)| (*rep - v).norm() <= cluster_tol)
            {
                Some((rep, count)) => {
                    let n = *count as f64;
                    *rep = (*rep * n + v) / (n + 1.0);
                    *count += 1;
                }
                None => clusters.push((v, 1)),
            }
        }
        clusters.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap());
        RootSet {
            roots: clusters
                .into_iter()
                .map(|(value, multiplicity)| RootEntry {
                    value,
                    multiplicity,
                    residual: p.eval(value).norm(),
                })
                .collect(),
        }
    }

    /// Root values repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity as usize))
            .collect()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}
