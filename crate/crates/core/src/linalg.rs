//! Exact rational linear algebra: dense matrices, reduced row echelon form,
//! kernels, linear solving, canonical subspaces and quotient maps.
//!
//! Everything downstream is built on this module. Subspaces are kept in
//! reduced row echelon form with strictly increasing pivots, which makes
//! every derived object canonical and comparable by plain equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix of exact rationals. Serializes as row-major
/// nested arrays of rational strings.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        for v in &rows {
            if v.len() != c {
                return Err(Error::input("ragged rows in matrix literal"));
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::input(format!(
                "vector length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc += a * &v[j];
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// `M^k = 0` for some `k <= rows`; standard criterion for nilpotency.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows).is_zero()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(r, c).recip().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis, echelonized.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
            .expect("kernel vectors share the ambient dimension")
            .into_basis()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(c, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= pivot.clone();
            let inv = pivot.recip().expect("pivot nonzero");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::input("matrix is singular"));
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Solves `A x = b`. Returns `None` when the system is inconsistent;
    /// otherwise the particular solution with all free variables set to zero
    /// (the minimal-support echelon solution, deterministic).
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Coefficients `c_0..c_n` of the characteristic polynomial
    /// `det(xI - A) = c_n x^n + ... + c_0` (monic), by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -(m.trace() / Scalar::from_int(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
        }
        coeffs
    }

    /// All rational roots of the characteristic polynomial, sorted.
    pub fn rational_eigenvalues(&self) -> Vec<Scalar> {
        rational_roots(&self.char_poly())
    }
}

/// Positive divisors of `n` (|n| taken first). Intended for the small
/// integers that arise from structure constants.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::from(1u32);
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Rational roots of a polynomial with rational coefficients `c_0..c_n`.
/// Complete over the rationals (rational root theorem after clearing
/// denominators); sorted ascending.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    // clear denominators
    let mut lcm = BigInt::from(1u32);
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let deg = match ints.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Vec::new(), // zero polynomial: roots unconstrained
    };
    let mut roots = Vec::new();
    // strip zero roots
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Scalar::zero());
    }
    if deg > low {
        let a0 = &ints[low];
        let an = &ints[deg];
        let eval = |x: &Scalar| -> Scalar {
            let mut acc = Scalar::zero();
            for c in ints.iter().rev() {
                acc = acc * x.clone()
                    + Scalar::from_big(c.clone(), BigInt::from(1u32)).expect("unit denominator");
            }
            acc
        };
        for p in divisors(a0) {
            for qd in divisors(an) {
                for sign in [1i64, -1] {
                    let cand = Scalar::from_big(&p * BigInt::from(sign), qd.clone())
                        .expect("nonzero denominator");
                    if roots.contains(&cand) {
                        continue;
                    }
                    if eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// A linear subspace of `Q^n`, stored as a reduced-row-echelon basis:
/// nonzero rows, strictly increasing pivots, each pivot column containing a
/// single 1. Two subspaces are equal iff their representations are equal.
/// Serializes as the list of basis rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(
            ambient,
            &(0..ambient)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); ambient];
                    v[i] = Scalar::one();
                    v
                })
                .collect::<Vec<_>>(),
        )
        .expect("unit vectors are well-formed")
    }

    /// Echelonizes a spanning set. Idempotent: the canonical form depends
    /// only on the span.
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::input(format!(
                    "vector of length {} in ambient dimension {}",
                    v.len(),
                    ambient
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Scalar>> {
        self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Residual of `v` after reduction against the basis. Zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for j in 0..self.ambient {
                let val = &w[j] - &(&f * &self.basis[row][j]);
                w[j] = val;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::input("mixed ambient dimensions"));
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.clone());
        Subspace::span(self.ambient, &vecs)
    }

    /// Intersection, via the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::input("mixed ambient dimensions"));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // columns: coefficients on self.basis then other.basis;
        // rows: ambient coordinates of (sum self - sum other) = 0
        let k = self.dim();
        let m = other.dim();
        let mut sys = Matrix::zeros(self.ambient, k + m);
        for (c, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                sys.set(i, c, v[i].clone());
            }
        }
        for (c, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                sys.set(i, k + c, -&v[i]);
            }
        }
        let mut vecs = Vec::new();
        for sol in sys.kernel() {
            let mut w = vec![Scalar::zero(); self.ambient];
            for (c, v) in self.basis.iter().enumerate() {
                if sol[c].is_zero() {
                    continue;
                }
                for i in 0..self.ambient {
                    let val = &w[i] + &(&sol[c] * &v[i]);
                    w[i] = val;
                }
            }
            vecs.push(w);
        }
        Subspace::span(self.ambient, &vecs)
    }
}

/// Projection/section pair for the quotient of the ambient space by `s`.
///
/// The complement is spanned by the non-pivot coordinate vectors in
/// increasing index order, so the result is reproducible. The projection has
/// kernel exactly `s` and `projection . section = identity`.
pub fn quotient_map(ambient: usize, s: &Subspace) -> Result<(Matrix, Matrix)> {
    if s.ambient_dim() != ambient {
        return Err(Error::input("subspace ambient dimension mismatch"));
    }
    let pivots = s.pivots();
    let free: Vec<usize> = (0..ambient).filter(|i| !pivots.contains(i)).collect();
    let m = free.len();
    let mut projection = Matrix::zeros(m, ambient);
    for (a, &fcol) in free.iter().enumerate() {
        projection.set(a, fcol, Scalar::one());
        for (row, &p) in pivots.iter().enumerate() {
            projection.set(a, p, -&s.basis()[row][fcol]);
        }
    }
    let mut section = Matrix::zeros(ambient, m);
    for (a, &fcol) in free.iter().enumerate() {
        section.set(fcol, a, Scalar::one());
    }
    Ok((projection, section))
}

/// Zero vector helper.
pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// `i`-th standard basis vector of `Q^n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub fn vec_neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Renders a vector as a combination of labelled basis elements, e.g.
/// `-e1 + 1/2 e3`. Zero renders as `0`.
pub fn format_vec(v: &[Scalar], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = labels
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("e{}", i + 1));
        let term = if c.is_one() {
            label
        } else if (-c).is_one() {
            format!("-{label}")
        } else {
            format!("{c} {label}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts
            .join(" + ")
            .replace("+ -", "- ")
    }
}
