//! Lie algebras by structure constants, bilinear forms, the symplectic
//! predicate, central/derived series, adjoint operators and symplectic
//! adjoints.
//!
//! A `LieAlgebra` is a basis `e1..en` together with the full antisymmetric
//! table `[e_i, e_j]`. The checked constructor enforces the Jacobi identity;
//! a raw constructor exists so that `check_jacobi` itself can be exercised
//! on bad input.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{format_vec, unit_vec, vec_is_zero, zero_vec, Matrix, Subspace};
use crate::scalar::Scalar;

/// Bracket entries: `(i, j, [(k, c), ...])` meaning `[e_i, e_j] = sum c e_k`,
/// all indices zero-based, `i < j`.
pub type BracketSpec = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Clone, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Full antisymmetric bracket table: `table[i][j] = [e_i, e_j]`.
    table: Vec<Vec<Vec<Scalar>>>,
}

/// Equality is structural: same dimension and structure constants. Labels
/// are presentation only.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LieAlgebra dim {} {{", self.dim)?;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !vec_is_zero(&self.table[i][j]) {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.labels[i],
                        self.labels[j],
                        format_vec(&self.table[i][j], &self.labels)
                    )?;
                }
            }
        }
        write!(f, "}}")
    }
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Checked constructor: rejects non-Jacobi input.
    pub fn new(dim: usize, labels: Option<Vec<String>>, brackets: &[BracketSpec]) -> Result<Self> {
        let alg = Self::new_unchecked(dim, labels, brackets)?;
        let report = alg.check_jacobi();
        if !report.ok {
            let (i, j, k, residual) = &report.violations[0];
            return Err(Error::axiom(
                "Jacobi identity",
                format!(
                    "cyclic sum at basis triple ({}, {}, {}) is {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    format_vec(residual, &alg.labels)
                ),
            ));
        }
        Ok(alg)
    }

    /// Raw constructor: builds the antisymmetric table without the Jacobi
    /// check. Intended for testing `check_jacobi` on broken input.
    pub fn new_unchecked(
        dim: usize,
        labels: Option<Vec<String>>,
        brackets: &[BracketSpec],
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(Error::input("label count does not match dimension"));
        }
        let mut table = vec![vec![zero_vec(dim); dim]; dim];
        for (i, j, out) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::input(format!(
                    "bracket index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if i >= j {
                return Err(Error::input(format!(
                    "bracket entries must have i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            for (k, c) in out {
                if *k >= dim {
                    return Err(Error::input(format!(
                        "bracket output index {} out of range",
                        k + 1
                    )));
                }
                table[*i][*j][*k] = &table[*i][*j][*k] + c;
            }
        }
        for i in 0..dim {
            for j in 0..i {
                table[i][j] = table[j][i].iter().map(|c| -c).collect();
            }
        }
        Ok(LieAlgebra { dim, labels, table })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, None, &[]).expect("abelian algebra is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    /// Bilinear, antisymmetric evaluation of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::input("vector length does not match dimension"));
        }
        let mut out = zero_vec(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        out[k] = &out[k] + &(&coeff * &self.table[i][j][k]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Cyclic Jacobi sum over all basis triples `i < j < k`.
    pub fn check_jacobi(&self) -> JacobiReport {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = unit_vec(self.dim, i);
                    let ej = unit_vec(self.dim, j);
                    let ek = unit_vec(self.dim, k);
                    let mut sum = self
                        .bracket(&self.table[i][j], &ek)
                        .expect("dimensions match");
                    let t2 = self
                        .bracket(&self.table[j][k], &ei)
                        .expect("dimensions match");
                    let t3 = self
                        .bracket(&self.table[k][i], &ej)
                        .expect("dimensions match");
                    for l in 0..self.dim {
                        sum[l] = &sum[l] + &t2[l] + &t3[l];
                    }
                    if !vec_is_zero(&sum) {
                        violations.push((i, j, k, sum));
                    }
                }
            }
        }
        JacobiReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Matrix of `ad(e_i) : y -> [e_i, y]` acting on coordinate columns.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.table[i][j][k].clone());
            }
        }
        m
    }

    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::input("vector length does not match dimension"));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.ad_basis(i).scale(c));
        }
        Ok(m)
    }

    /// `[A, B]` for subspaces: span of brackets of basis pairs.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                vecs.push(self.bracket(u, v).expect("ambient dimensions match"));
            }
        }
        Subspace::span(self.dim, &vecs).expect("bracket output has ambient dimension")
    }

    /// Derived ideal `D(g) = [g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_spaces(&full, &full)
    }

    /// Descending central series `C^0 = g, C^k = [g, C^{k-1}]`, listed until
    /// stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let prev = series.last().unwrap();
            let next = self.bracket_spaces(&full, prev);
            if &next == prev {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
        }
        series
    }

    /// Derived series `D^0 = g, D^k = [D^{k-1}, D^{k-1}]` until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let prev = series.last().unwrap();
            let next = self.bracket_spaces(prev, prev);
            if &next == prev {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
        }
        series
    }

    /// Nilpotency step: the first `p` with `C^p = 0`, when the series reaches
    /// zero. The abelian algebra has step 1, the zero algebra step 0.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series
            .iter()
            .position(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_step().is_some()
    }

    /// Solvability step from the derived series.
    pub fn solvability_step(&self) -> Option<usize> {
        let series = self.derived_series();
        series.iter().position(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.solvability_step().is_some()
    }

    /// Kernel of the stacked adjoint matrices.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        let mut stacked = Matrix::zeros(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            let ad = self.ad_basis(i);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    stacked.set(i * self.dim + r, c, ad.get(r, c).clone());
                }
            }
        }
        Subspace::span(self.dim, &stacked.kernel()).expect("kernel vectors well-formed")
    }

    /// Killing form `K(x, y) = tr(ad_x ad_y)`.
    pub fn killing_form(&self) -> BilinearForm {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].mul(&ads[j]).trace();
                m.set(i, j, t.clone());
                m.set(j, i, t);
            }
        }
        BilinearForm::new(m).expect("square by construction")
    }

    /// All lines `Q v` with `[g, v] ⊆ Q v`, found as joint eigenvectors of
    /// the adjoint maps with rational eigenvalues; complete for rational
    /// spectra. When a whole joint eigenspace qualifies, its echelon basis
    /// vectors are reported as the line representatives. Lexicographically
    /// sorted and deterministic.
    pub fn ideal_lines(&self) -> Vec<Vec<Scalar>> {
        if self.dim == 0 {
            return Vec::new();
        }
        let mut spaces = vec![Subspace::full(self.dim)];
        for i in 0..self.dim {
            let ad = self.ad_basis(i);
            let eigen = ad.rational_eigenvalues();
            let mut next = Vec::new();
            for space in &spaces {
                for mu in &eigen {
                    let shifted = ad.sub(&Matrix::identity(self.dim).scale(mu));
                    let eig_space = Subspace::span(self.dim, &shifted.kernel())
                        .expect("kernel vectors well-formed");
                    let meet = space.intersect(&eig_space).expect("same ambient");
                    if !meet.is_zero() {
                        next.push(meet);
                    }
                }
            }
            spaces = next;
            if spaces.is_empty() {
                return Vec::new();
            }
        }
        let mut lines: Vec<Vec<Scalar>> = spaces
            .into_iter()
            .flat_map(Subspace::into_basis)
            .collect();
        lines.sort_by(|a, b| {
            let pa = a.iter().position(|c| !c.is_zero());
            let pb = b.iter().position(|c| !c.is_zero());
            pa.cmp(&pb).then_with(|| a.cmp(b))
        });
        lines.dedup();
        lines
    }

    /// Structure constants in a new basis given by `rows` (each row a vector
    /// of the current space). Fails if the rows are not a basis.
    pub fn in_basis(&self, rows: &[Vec<Scalar>]) -> Result<LieAlgebra> {
        if rows.len() != self.dim {
            return Err(Error::input("basis size does not match dimension"));
        }
        let b = Matrix::from_rows(rows.to_vec())?.transpose();
        let binv = b
            .inverse()
            .map_err(|_| Error::input("given vectors are not a basis"))?;
        let mut brackets: Vec<BracketSpec> = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let br = self.bracket(&rows[i], &rows[j])?;
                let coords = binv.mul_vec(&br)?;
                let out: Vec<(usize, Scalar)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !out.is_empty() {
                    brackets.push((i, j, out));
                }
            }
        }
        LieAlgebra::new_unchecked(self.dim, None, &brackets)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiReport {
    pub ok: bool,
    /// Violating triples `(i, j, k)` (zero-based) with residual vectors.
    pub violations: Vec<(usize, usize, usize, Vec<Scalar>)>,
}

/// Symmetry flag of a bilinear form, computed from the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Symmetry {
    Symmetric,
    Skew,
    None,
}

/// A bilinear form on the coordinate space, as a square matrix
/// `m[i][j] = B(e_i, e_j)`. Serializes as the nested-array matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::input("bilinear form matrix must be square"));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    /// Builds a form from wedge terms `(i, j, c)` meaning `c e^i ∧ e^j`
    /// (zero-based, `i < j`): contributes `m[i][j] = c`, `m[j][i] = -c`.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut m = Matrix::zeros(dim, dim);
        for (i, j, c) in terms {
            if *i >= dim || *j >= dim {
                return Err(Error::input(format!(
                    "form index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if i >= j {
                return Err(Error::input(format!(
                    "form terms must have i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            m.set(*i, *j, m.get(*i, *j) + c);
            m.set(*j, *i, m.get(*j, *i) - c);
        }
        BilinearForm::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::input("vector length does not match form size"));
        }
        let my = self.matrix.mul_vec(y)?;
        let mut acc = Scalar::zero();
        for i in 0..x.len() {
            if !x[i].is_zero() && !my[i].is_zero() {
                acc += &x[i] * &my[i];
            }
        }
        Ok(acc)
    }

    pub fn symmetry(&self) -> Symmetry {
        let m = &self.matrix;
        let n = self.dim();
        let mut sym = true;
        let mut skew = true;
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                skew = false;
            }
            for j in (i + 1)..n {
                if m.get(i, j) != m.get(j, i) {
                    sym = false;
                }
                if *m.get(i, j) != -m.get(j, i) {
                    skew = false;
                }
            }
        }
        // the zero form counts as skew here
        if skew {
            Symmetry::Skew
        } else if sym {
            Symmetry::Symmetric
        } else {
            Symmetry::None
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }

    /// Orthogonal complement `S^⊥ = { x : B(x, s) = 0 for all s in S }`.
    pub fn orthogonal(&self, s: &Subspace) -> Result<Subspace> {
        if !self.is_nondegenerate() {
            return Err(Error::axiom(
                "nondegeneracy",
                "orthogonal complement requires a nondegenerate form".to_string(),
            ));
        }
        if s.ambient_dim() != self.dim() {
            return Err(Error::input("subspace ambient dimension mismatch"));
        }
        if s.is_zero() {
            return Ok(Subspace::full(self.dim()));
        }
        let mut sys = Matrix::zeros(s.dim(), self.dim());
        for (r, v) in s.basis().iter().enumerate() {
            // row r: x -> B(x, v), coefficients (M v)_i
            let mv = self.matrix.mul_vec(v)?;
            for i in 0..self.dim() {
                sys.set(r, i, mv[i].clone());
            }
        }
        Subspace::span(self.dim(), &sys.kernel())
    }

    /// Vanishes identically on `S x S`.
    pub fn vanishes_on(&self, s: &Subspace) -> bool {
        for u in s.basis() {
            for v in s.basis() {
                if !self.eval(u, v).expect("ambient matches").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The form in a new basis given by `rows`.
    pub fn in_basis(&self, rows: &[Vec<Scalar>]) -> Result<BilinearForm> {
        let n = rows.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.eval(&rows[i], &rows[j])?);
            }
        }
        BilinearForm::new(m)
    }

    /// Cocycle defect `B([x,y],z) + B([y,z],x) + B([z,x],y)` over basis
    /// triples; empty iff the form is closed.
    pub fn cocycle_violations(&self, alg: &LieAlgebra) -> Vec<(usize, usize, usize, Scalar)> {
        let n = alg.dim();
        let mut out = Vec::new();
        for i in 0..n {
            let ei = unit_vec(n, i);
            for j in (i + 1)..n {
                let ej = unit_vec(n, j);
                for k in (j + 1)..n {
                    let ek = unit_vec(n, k);
                    let s = self
                        .eval(alg.bracket_basis(i, j), &ek)
                        .expect("sizes match")
                        + self
                            .eval(alg.bracket_basis(j, k), &ei)
                            .expect("sizes match")
                        + self
                            .eval(alg.bracket_basis(k, i), &ej)
                            .expect("sizes match");
                    if !s.is_zero() {
                        out.push((i, j, k, s));
                    }
                }
            }
        }
        out
    }
}

/// Full symplectic predicate: skew, nondegenerate, 2-cocycle, even dimension.
#[derive(Debug, Clone, Serialize)]
pub struct SymplecticCheck {
    pub skew: bool,
    pub nondegenerate: bool,
    pub cocycle: bool,
    pub even_dim: bool,
    /// First few cocycle violations, as 1-based triples with defects.
    pub cocycle_witnesses: Vec<(usize, usize, usize, Scalar)>,
}

impl SymplecticCheck {
    pub fn all(&self) -> bool {
        self.skew && self.nondegenerate && self.cocycle && self.even_dim
    }

    /// Name of the first failing axiom, if any.
    pub fn failing_axiom(&self) -> Option<&'static str> {
        if !self.skew {
            Some("skew-symmetry")
        } else if !self.even_dim {
            Some("even dimension")
        } else if !self.nondegenerate {
            Some("nondegeneracy")
        } else if !self.cocycle {
            Some("2-cocycle identity")
        } else {
            None
        }
    }
}

pub fn is_symplectic(alg: &LieAlgebra, omega: &BilinearForm) -> Result<SymplecticCheck> {
    if omega.dim() != alg.dim() {
        return Err(Error::input("form size does not match algebra dimension"));
    }
    let violations = omega.cocycle_violations(alg);
    Ok(SymplecticCheck {
        skew: omega.symmetry() == Symmetry::Skew,
        nondegenerate: omega.is_nondegenerate(),
        cocycle: violations.is_empty(),
        even_dim: alg.dim().is_multiple_of(2),
        cocycle_witnesses: violations
            .into_iter()
            .take(10)
            .map(|(i, j, k, s)| (i + 1, j + 1, k + 1, s))
            .collect(),
    })
}

/// Symplectic adjoint `f*` with `w(f x, y) = w(x, f* y)` for all `x, y`,
/// computed as `W^{-1} f^T W` where `W` is the matrix of the form.
pub fn symplectic_adjoint(omega: &BilinearForm, f: &Matrix) -> Result<Matrix> {
    if !omega.is_nondegenerate() {
        return Err(Error::axiom(
            "nondegeneracy",
            "symplectic adjoint requires a nondegenerate form",
        ));
    }
    if f.rows() != omega.dim() || f.cols() != omega.dim() {
        return Err(Error::input("endomorphism size does not match form"));
    }
    let w = omega.matrix();
    Ok(w.inverse()?.mul(&f.transpose()).mul(w))
}

/// Leibniz test `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
pub fn is_derivation_lie(alg: &LieAlgebra, d: &Matrix) -> Result<bool> {
    if d.rows() != alg.dim() || d.cols() != alg.dim() {
        return Err(Error::input("endomorphism size does not match algebra"));
    }
    let n = alg.dim();
    for i in 0..n {
        let dei = d.col_vec(i);
        for j in (i + 1)..n {
            let dej = d.col_vec(j);
            let lhs = d.mul_vec(alg.bracket_basis(i, j))?;
            let rhs = crate::linalg::vec_add(
                &alg.bracket(&dei, &unit_vec(n, j))?,
                &alg.bracket(&unit_vec(n, i), &dej)?,
            );
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solves `w = d(alpha)`, i.e. `w(x, y) = -alpha([x, y])` on basis pairs.
/// Returns the echelon solution when the form is exact (the algebra is then
/// Frobenius for nondegenerate `w`), `None` otherwise.
pub fn exactness_certificate(alg: &LieAlgebra, omega: &BilinearForm) -> Result<Option<Vec<Scalar>>> {
    let n = alg.dim();
    if omega.dim() != n {
        return Err(Error::input("form size does not match algebra dimension"));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut sys = Matrix::zeros(pairs.len(), n);
    let mut rhs = Vec::with_capacity(pairs.len());
    for (r, (i, j)) in pairs.iter().enumerate() {
        let br = alg.bracket_basis(*i, *j);
        for c in 0..n {
            sys.set(r, c, -&br[c]);
        }
        rhs.push(omega.eval_basis(*i, *j).clone());
    }
    sys.solve(&rhs)
}
