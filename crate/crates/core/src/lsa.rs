//! Bilinear product tables and the left-symmetric / Novikov / associative /
//! LR property chain.
//!
//! All property decisions are exhaustive over basis tuples with exact
//! equality; multilinearity makes the basis checks complete. Where an
//! identity has several equivalent operator forms they are all computed and
//! required to agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{BracketSpec, LieAlgebra};
use crate::linalg::{format_vec, vec_is_zero, vec_sub, zero_vec, Matrix};
use crate::scalar::Scalar;

/// Product entries `(i, j, [(k, c), ...])` meaning `e_i . e_j = sum c e_k`,
/// zero-based, arbitrary ordered pairs.
pub type ProductSpec = (usize, usize, Vec<(usize, Scalar)>);

/// A bilinear multiplication on a based vector space. No identity is
/// assumed; properties are decided by [`ProductTable::classify`].
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct ProductTable {
    dim: usize,
    /// `table[i][j] = e_i . e_j`.
    table: Vec<Vec<Vec<Scalar>>>,
}

impl std::fmt::Debug for ProductTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels = crate::lie::default_labels(self.dim);
        writeln!(f, "ProductTable dim {} {{", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !vec_is_zero(&self.table[i][j]) {
                    writeln!(
                        f,
                        "  e{}.e{} = {}",
                        i + 1,
                        j + 1,
                        format_vec(&self.table[i][j], &labels)
                    )?;
                }
            }
        }
        write!(f, "}}")
    }
}

impl ProductTable {
    pub fn new(dim: usize, entries: &[ProductSpec]) -> Result<Self> {
        let mut table = vec![vec![zero_vec(dim); dim]; dim];
        for (i, j, out) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::input(format!(
                    "product index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            for (k, c) in out {
                if *k >= dim {
                    return Err(Error::input(format!(
                        "product output index {} out of range",
                        k + 1
                    )));
                }
                table[*i][*j][*k] = &table[*i][*j][*k] + c;
            }
        }
        Ok(ProductTable { dim, table })
    }

    pub fn zero(dim: usize) -> Self {
        ProductTable {
            dim,
            table: vec![vec![zero_vec(dim); dim]; dim],
        }
    }

    pub fn from_table(table: Vec<Vec<Vec<Scalar>>>) -> Self {
        let dim = table.len();
        ProductTable { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    /// Nonzero entries in deterministic (i, j) order.
    pub fn entries(&self) -> Vec<ProductSpec> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let terms: Vec<(usize, Scalar)> = self.table[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::input("vector length does not match dimension"));
        }
        let mut out = zero_vec(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
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

    /// `ass(x, y, z) = (x.y).z - x.(y.z)`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        let xy = self.multiply(x, y)?;
        let yz = self.multiply(y, z)?;
        Ok(vec_sub(&self.multiply(&xy, z)?, &self.multiply(x, &yz)?))
    }

    fn associator_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let lhs = self
            .multiply(&self.table[i][j], &crate::linalg::unit_vec(self.dim, k))
            .expect("sizes match");
        let rhs = self
            .multiply(&crate::linalg::unit_vec(self.dim, i), &self.table[j][k])
            .expect("sizes match");
        vec_sub(&lhs, &rhs)
    }

    /// Matrix of `L_x : y -> x.y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::input("vector length does not match dimension"));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        let v = m.get(k, j) + &(&x[i] * &self.table[i][j][k]);
                        m.set(k, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `R_x : y -> y.x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::input("vector length does not match dimension"));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    if !self.table[j][i][k].is_zero() {
                        let v = m.get(k, j) + &(&x[i] * &self.table[j][i][k]);
                        m.set(k, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        self.left_mult(&crate::linalg::unit_vec(self.dim, i))
            .expect("basis vector has the right length")
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        self.right_mult(&crate::linalg::unit_vec(self.dim, i))
            .expect("basis vector has the right length")
    }

    /// Exhaustive basis classification of the product.
    pub fn classify(&self) -> Classification {
        let n = self.dim;
        let mut witnesses = Vec::new();
        let mut left_symmetric = true;
        let mut right_commutative = true;
        let mut associative = true;
        let mut commutative = true;

        let record = |witnesses: &mut Vec<Witness>, identity, i, j, k, residual: Vec<Scalar>| {
            if witnesses
                .iter()
                .filter(|w: &&Witness| w.identity == identity)
                .count()
                < MAX_WITNESSES_PER_IDENTITY
            {
                witnesses.push(Witness {
                    identity,
                    triple: (i + 1, j + 1, k + 1),
                    residual,
                });
            }
        };

        for i in 0..n {
            for j in 0..n {
                if i < j {
                    let comm = vec_sub(&self.table[i][j], &self.table[j][i]);
                    if !vec_is_zero(&comm) {
                        commutative = false;
                    }
                }
                for k in 0..n {
                    let ass_ijk = self.associator_basis(i, j, k);
                    if !vec_is_zero(&ass_ijk) {
                        associative = false;
                        record(&mut witnesses, "associativity", i, j, k, ass_ijk.clone());
                    }
                    if i < j {
                        let ass_jik = self.associator_basis(j, i, k);
                        let defect = vec_sub(&ass_ijk, &ass_jik);
                        if !vec_is_zero(&defect) {
                            left_symmetric = false;
                            record(&mut witnesses, "left-symmetry", i, j, k, defect);
                        }
                    }
                    if j < k {
                        // (e_i . e_j) . e_k = (e_i . e_k) . e_j
                        let lhs = self
                            .multiply(&self.table[i][j], &crate::linalg::unit_vec(n, k))
                            .expect("sizes match");
                        let rhs = self
                            .multiply(&self.table[i][k], &crate::linalg::unit_vec(n, j))
                            .expect("sizes match");
                        let defect = vec_sub(&lhs, &rhs);
                        if !vec_is_zero(&defect) {
                            right_commutative = false;
                            record(&mut witnesses, "right-commutativity", i, j, k, defect);
                        }
                    }
                }
            }
        }

        // Operator forms of the same identities; they agree with the triple
        // scans by multilinearity and serve as an internal cross-check.
        let lmats: Vec<Matrix> = (0..n).map(|i| self.left_mult_basis(i)).collect();
        let rmats: Vec<Matrix> = (0..n).map(|i| self.right_mult_basis(i)).collect();
        let mut rr_commute = true;
        let mut ll_commute = true;
        let mut eq4 = true;
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    if !rmats[i].commutator(&rmats[j]).is_zero() {
                        rr_commute = false;
                    }
                    if !lmats[i].commutator(&lmats[j]).is_zero() {
                        ll_commute = false;
                    }
                }
                // L_{e_i . e_j} = R_{e_j} . L_{e_i}
                let lhs = self.left_mult(&self.table[i][j]).expect("sizes match");
                if lhs != rmats[j].mul(&lmats[i]) {
                    eq4 = false;
                }
            }
        }
        assert_eq!(
            right_commutative, rr_commute,
            "triple scan and [R,R] operator check must agree"
        );
        assert_eq!(
            right_commutative, eq4,
            "triple scan and L_(x.y) = R_y L_x operator check must agree"
        );

        let lr = ll_commute && rr_commute;
        if !lr {
            let identity = "lr";
            'outer: for i in 0..n {
                for j in (i + 1)..n {
                    let c = lmats[i].commutator(&lmats[j]);
                    if !c.is_zero() {
                        let col = (0..n).find(|&k| !vec_is_zero(&c.col_vec(k))).unwrap();
                        witnesses.push(Witness {
                            identity,
                            triple: (i + 1, j + 1, col + 1),
                            residual: c.col_vec(col),
                        });
                        break 'outer;
                    }
                    let c = rmats[i].commutator(&rmats[j]);
                    if !c.is_zero() {
                        let col = (0..n).find(|&k| !vec_is_zero(&c.col_vec(k))).unwrap();
                        witnesses.push(Witness {
                            identity,
                            triple: (i + 1, j + 1, col + 1),
                            residual: c.col_vec(col),
                        });
                        break 'outer;
                    }
                }
            }
        }

        Classification {
            left_symmetric,
            novikov: left_symmetric && right_commutative,
            associative,
            lr,
            commutative,
            witnesses,
        }
    }

    /// The Lie algebra with bracket `[x,y] = x.y - y.x`. Refused for
    /// non-left-symmetric products, where Jacobi is not guaranteed.
    pub fn commutator_algebra(&self) -> Result<LieAlgebra> {
        let class = self.classify();
        if !class.left_symmetric {
            let w = class
                .witnesses
                .iter()
                .find(|w| w.identity == "left-symmetry")
                .expect("failed flag has witnesses");
            return Err(Error::axiom(
                "left-symmetry",
                format!(
                    "commutator bracket requires a left-symmetric product; defect at basis triple {:?}",
                    w.triple
                ),
            ));
        }
        let mut brackets: Vec<BracketSpec> = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let c = vec_sub(&self.table[i][j], &self.table[j][i]);
                let terms: Vec<(usize, Scalar)> = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        // Jacobi is guaranteed by left-symmetry; the checked constructor
        // re-verifies it.
        LieAlgebra::new(self.dim, None, &brackets)
    }

    /// Completeness of the affine structure: all right multiplications are
    /// nilpotent. Restricted to Novikov products, where the basis check is
    /// sufficient (commuting right multiplications are closed under sums).
    pub fn is_complete_novikov(&self) -> Result<bool> {
        let class = self.classify();
        if !class.novikov {
            return Err(Error::axiom(
                "Novikov identity",
                "completeness via basis right-multiplications requires a Novikov product",
            ));
        }
        Ok((0..self.dim).all(|i| self.right_mult_basis(i).is_nilpotent()))
    }
}

const MAX_WITNESSES_PER_IDENTITY: usize = 10;

/// A failed identity instance: which identity, at which (1-based) basis
/// triple, with the exact residual vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: &'static str,
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

/// Result of the exhaustive property scan.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub left_symmetric: bool,
    pub novikov: bool,
    pub associative: bool,
    pub lr: bool,
    pub commutative: bool,
    pub witnesses: Vec<Witness>,
}

/// Leibniz test for a product: `D(x.y) = D(x).y + x.D(y)` on basis pairs.
pub fn is_derivation_product(p: &ProductTable, d: &Matrix) -> Result<bool> {
    let n = p.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::input("endomorphism size does not match product"));
    }
    for i in 0..n {
        let dei = d.col_vec(i);
        for j in 0..n {
            let dej = d.col_vec(j);
            let lhs = d.mul_vec(p.basis_product(i, j))?;
            let rhs = crate::linalg::vec_add(
                &p.multiply(&dei, &crate::linalg::unit_vec(n, j))?,
                &p.multiply(&crate::linalg::unit_vec(n, i), &dej)?,
            );
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vec;
    use crate::scalar::{q, z};

    /// aff(R) associated product: e1.e1 = -e1, e2.e1 = -e2.
    fn aff_product() -> ProductTable {
        ProductTable::new(
            2,
            &[(0, 0, vec![(0, z(-1))]), (1, 0, vec![(1, z(-1))])],
        )
        .unwrap()
    }

    /// Truncated polynomials R[t]/(t^3) with basis 1, t, t^2.
    pub fn poly3() -> ProductTable {
        ProductTable::new(
            3,
            &[
                (0, 0, vec![(0, z(1))]),
                (0, 1, vec![(1, z(1))]),
                (1, 0, vec![(1, z(1))]),
                (0, 2, vec![(2, z(1))]),
                (2, 0, vec![(2, z(1))]),
                (1, 1, vec![(2, z(1))]),
            ],
        )
        .unwrap()
    }

    /// d/dt on the basis 1, t, t^2. Not a derivation of R[t]/(t^3): Leibniz
    /// fails on (t, t^2) because the truncation kills t^3 while
    /// D(t) t^2 + t D(t^2) = 3t^2 survives.
    pub fn ddt() -> Matrix {
        let mut d = Matrix::zeros(3, 3);
        d.set(0, 1, z(1));
        d.set(1, 2, z(2));
        d
    }

    /// t d/dt on R[t]/(t^3): a genuine derivation with D^2 != 0.
    pub fn tddt() -> Matrix {
        let mut d = Matrix::zeros(3, 3);
        d.set(1, 1, z(1));
        d.set(2, 2, z(2));
        d
    }

    /// The raw bilinear table x * y = x . D(y) for an endomorphism D.
    pub fn twisted_product(p: &ProductTable, d: &Matrix) -> ProductTable {
        let n = p.dim();
        let mut table = Vec::new();
        for i in 0..n {
            let mut row = Vec::new();
            for j in 0..n {
                let dy = d.col_vec(j);
                row.push(p.multiply(&unit_vec(n, i), &dy).unwrap());
            }
            table.push(row);
        }
        ProductTable::from_table(table)
    }

    #[test]
    fn multiply_and_associator() {
        let zero = ProductTable::zero(3);
        let x = unit_vec(3, 0);
        assert!(vec_is_zero(&zero.associator(&x, &x, &x).unwrap()));

        let aff = aff_product();
        assert_eq!(
            aff.multiply(&unit_vec(2, 0), &unit_vec(2, 0)).unwrap(),
            vec![z(-1), z(0)]
        );

        // raw table x . D(y) with D = d/dt: ass(1, 1, t^2) = -2
        let star = twisted_product(&poly3(), &ddt());
        let one = unit_vec(3, 0);
        let t2 = unit_vec(3, 2);
        assert_eq!(
            star.associator(&one, &one, &t2).unwrap(),
            vec![z(-2), z(0), z(0)]
        );
    }

    #[test]
    fn twisted_by_ddt_table_values() {
        let star = twisted_product(&poly3(), &ddt());
        // 1*t = 1, t*t = t, 1*t^2 = 2t, t*t^2 = 2t^2, t^2*t = t^2
        assert_eq!(star.basis_product(0, 1), &[z(1), z(0), z(0)]);
        assert_eq!(star.basis_product(1, 1), &[z(0), z(1), z(0)]);
        assert_eq!(star.basis_product(0, 2), &[z(0), z(2), z(0)]);
        assert_eq!(star.basis_product(1, 2), &[z(0), z(0), z(2)]);
        assert_eq!(star.basis_product(2, 1), &[z(0), z(0), z(1)]);
        assert!(vec_is_zero(star.basis_product(2, 2)));
        // since d/dt is not a derivation of the truncated ring, this table
        // is not even left-symmetric: ass(1,t^2,t^2) = 4t^2 but
        // ass(t^2,1,t^2) = -2t^2
        let c = star.classify();
        assert!(!c.left_symmetric);
        assert!(!c.novikov);
    }

    #[test]
    fn classify_products() {
        let aff = aff_product();
        let c = aff.classify();
        assert!(c.left_symmetric && c.novikov && c.associative);
        assert!(!c.lr);
        assert!(!c.commutative);
        assert!(c.witnesses.iter().any(|w| w.identity == "lr"));

        // x.y = [x,y]/2 on Heisenberg: left-symmetric and Novikov
        let half = ProductTable::new(
            3,
            &[
                (0, 1, vec![(2, q(1, 2))]),
                (1, 0, vec![(2, q(-1, 2))]),
            ],
        )
        .unwrap();
        let c = half.classify();
        assert!(c.left_symmetric);
        assert!(c.novikov);

        // x * y = x . (t d/dt)(y): Novikov but not associative
        let star = twisted_product(&poly3(), &tddt());
        let c = star.classify();
        assert!(c.novikov);
        assert!(!c.associative);
        assert!(c
            .witnesses
            .iter()
            .any(|w| w.identity == "associativity"));
        assert!(!c.witnesses.iter().any(|w| w.identity == "left-symmetry"));
    }

    #[test]
    fn left_and_right_multiplications() {
        let zero = ProductTable::zero(2);
        assert!(zero.left_mult_basis(0).is_zero());
        assert!(zero.right_mult_basis(1).is_zero());

        let aff = aff_product();
        // R_{e1} = -identity
        assert_eq!(aff.right_mult_basis(0), Matrix::identity(2).neg());

        // Novikov: right multiplications commute
        let star = twisted_product(&poly3(), &tddt());
        for i in 0..3 {
            for j in 0..3 {
                let ri = star.right_mult_basis(i);
                let rj = star.right_mult_basis(j);
                assert!(ri.commutator(&rj).is_zero());
            }
        }

        // operator extraction against direct evaluation
        let x = vec![q(1, 2), z(3), z(-1)];
        let y = vec![z(2), q(-1, 3), z(0)];
        let lx = star.left_mult(&x).unwrap();
        assert_eq!(lx.mul_vec(&y).unwrap(), star.multiply(&x, &y).unwrap());
        let rx = star.right_mult(&x).unwrap();
        assert_eq!(rx.mul_vec(&y).unwrap(), star.multiply(&y, &x).unwrap());
    }

    #[test]
    fn left_symmetry_as_representation() {
        // [L_x, L_y] = L_{[x,y]} on basis pairs for a left-symmetric product
        let star = twisted_product(&poly3(), &tddt());
        let lie = star.commutator_algebra().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let li = star.left_mult_basis(i);
                let lj = star.left_mult_basis(j);
                let lb = star.left_mult(lie.bracket_basis(i, j)).unwrap();
                assert_eq!(li.commutator(&lj), lb);
            }
        }
    }

    #[test]
    fn commutator_algebra_cases() {
        // commutative table gives the abelian algebra
        let comm = poly3();
        let lie = comm.commutator_algebra().unwrap();
        assert_eq!(lie.derived_subalgebra().dim(), 0);

        // rh3 table: bracket [e1,e2] = e3 only
        let rh3 = ProductTable::new(
            4,
            &[(0, 1, vec![(2, z(1))]), (1, 1, vec![(3, z(-1))])],
        )
        .unwrap();
        let lie = rh3.commutator_algebra().unwrap();
        assert_eq!(lie.bracket_basis(0, 1), &[z(0), z(0), z(1), z(0)]);
        assert!(vec_is_zero(lie.bracket_basis(0, 2)));
        assert!(vec_is_zero(lie.bracket_basis(2, 3)));

        // non-left-symmetric input refused
        let bad =
            ProductTable::new(2, &[(0, 0, vec![(1, z(1))]), (1, 0, vec![(0, z(1))])]).unwrap();
        assert!(!bad.classify().left_symmetric);
        assert!(bad.commutator_algebra().is_err());
    }

    #[test]
    fn completeness() {
        assert!(ProductTable::zero(3).is_complete_novikov().unwrap());
        // aff product is Novikov but R_{e1} = -I is invertible
        assert!(!aff_product().is_complete_novikov().unwrap());
        // commutative associative is Novikov; nilpotent multiplication
        let p = poly3();
        assert!(p.classify().novikov);
        // non-Novikov input refused
        let not_novikov =
            ProductTable::new(2, &[(0, 0, vec![(1, z(1))]), (1, 0, vec![(0, z(1))])]).unwrap();
        assert!(!not_novikov.classify().novikov);
        assert!(not_novikov.is_complete_novikov().is_err());
    }

    #[test]
    fn product_derivation_check() {
        let p = poly3();
        assert!(is_derivation_product(&p, &Matrix::zeros(3, 3)).unwrap());
        // d/dt does not descend to the truncated ring
        assert!(!is_derivation_product(&p, &ddt()).unwrap());
        // t d/dt does
        assert!(is_derivation_product(&p, &tddt()).unwrap());
        // and so does t -> t^2 (a square-zero derivation)
        let mut sq = Matrix::zeros(3, 3);
        sq.set(2, 1, z(1));
        assert!(is_derivation_product(&p, &sq).unwrap());
        assert!(sq.mul(&sq).is_zero());
        // sending 1 -> 1 violates Leibniz: D(1.1) = 1 but D(1).1 + 1.D(1) = 2
        let mut bad = Matrix::zeros(3, 3);
        bad.set(0, 0, z(1));
        assert!(!is_derivation_product(&p, &bad).unwrap());
    }
}
