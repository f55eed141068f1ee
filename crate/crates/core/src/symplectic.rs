//! The left-symmetric product associated to a symplectic Lie algebra and the
//! full symplectic-Novikov property report.
//!
//! The associated product is the unique bilinear product with
//! `w(x.y, z) = -w(y, [x, z])` for all `z`; it always satisfies
//! `x.y - y.x = [x, y]`, the dual identity `w(x.y, z) = w(x, z.y)`, the
//! cyclic identity, and left-symmetry. The pair is symplectic Novikov (SNLA)
//! exactly when the product is Novikov, equivalently associative.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{is_symplectic, BilinearForm, LieAlgebra, SymplecticCheck};
use crate::linalg::{unit_vec, vec_sub};
use crate::lsa::{Classification, ProductTable};

/// Computes the associated left-symmetric product of a symplectic pair.
///
/// Refuses non-symplectic input, naming the failing axiom. The construction
/// is an exact linear solve against the nondegenerate form, so the result is
/// independent of any ordering choices. The defining identity and its
/// consequences are re-verified on all basis tuples before returning.
pub fn associated_product(alg: &LieAlgebra, omega: &BilinearForm) -> Result<ProductTable> {
    let check = is_symplectic(alg, omega)?;
    if let Some(axiom) = check.failing_axiom() {
        let witness = match axiom {
            "2-cocycle identity" => format!(
                "first violating triple {:?} with defect {}",
                check.cocycle_witnesses[0].clone(),
                check.cocycle_witnesses[0].3
            ),
            _ => "the form is not symplectic for this algebra".to_string(),
        };
        return Err(Error::axiom(axiom, witness));
    }

    let n = alg.dim();
    // w(v, e_k) = (W^T v)_k, so each product column solves W^T v = b.
    let wt_inv = omega.matrix().transpose().inverse()?;
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let ej = unit_vec(n, j);
            let mut b = Vec::with_capacity(n);
            for k in 0..n {
                b.push(-omega.eval(&ej, alg.bracket_basis(i, k))?);
            }
            row.push(wt_inv.mul_vec(&b)?);
        }
        table.push(row);
    }
    let product = ProductTable::from_table(table);

    verify_associated(alg, omega, &product)?;
    Ok(product)
}

/// Consequences of the defining equation, re-verified exactly.
fn verify_associated(
    alg: &LieAlgebra,
    omega: &BilinearForm,
    product: &ProductTable,
) -> Result<()> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            // x.y - y.x = [x, y]
            let comm = vec_sub(product.basis_product(i, j), product.basis_product(j, i));
            if comm != alg.bracket_basis(i, j) {
                return Err(Error::axiom(
                    "commutator identity",
                    format!("x.y - y.x differs from [x,y] at basis pair ({}, {})", i + 1, j + 1),
                ));
            }
            for k in 0..n {
                let ek = unit_vec(n, k);
                // w(x.y, z) = w(x, z.y)
                let lhs = omega.eval(product.basis_product(i, j), &ek)?;
                let rhs = omega.eval(&unit_vec(n, i), product.basis_product(k, j))?;
                if lhs != rhs {
                    return Err(Error::axiom(
                        "dual product identity",
                        format!("w(x.y,z) != w(x,z.y) at ({}, {}, {})", i + 1, j + 1, k + 1),
                    ));
                }
                // cyclic identity
                let cyc = omega.eval(product.basis_product(i, j), &ek)?
                    + omega.eval(product.basis_product(j, k), &unit_vec(n, i))?
                    + omega.eval(product.basis_product(k, i), &unit_vec(n, j))?;
                if !cyc.is_zero() {
                    return Err(Error::axiom(
                        "cyclic product identity",
                        format!("nonzero cyclic sum at ({}, {}, {})", i + 1, j + 1, k + 1),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Nilpotency data for the bound `p <= dim D(g) + 1 <= dim/2 + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct NilpotencyBound {
    pub step: usize,
    pub dim_derived: usize,
    pub dim: usize,
    pub bound_holds: bool,
}

/// Structural consequences that hold for every SNLA.
#[derive(Debug, Clone, Serialize)]
pub struct SnlaStructure {
    /// The derived ideal is isotropic for the symplectic form.
    pub derived_isotropic: bool,
    /// `[[g,g],[g,g]] = 0`.
    pub two_step_solvable: bool,
    /// The product is LR exactly when the algebra is at most 2-step nilpotent.
    pub lr_iff_two_step_nilpotent: bool,
    /// `R_[x,y] = 0` on all basis pairs.
    pub commutator_right_mult_zero: bool,
    /// Nilpotency bound data, for nilpotent algebras.
    pub nilpotency: Option<NilpotencyBound>,
}

impl SnlaStructure {
    pub fn all(&self) -> bool {
        self.derived_isotropic
            && self.two_step_solvable
            && self.lr_iff_two_step_nilpotent
            && self.commutator_right_mult_zero
            && self.nilpotency.as_ref().is_none_or(|b| b.bound_holds)
    }
}

/// Full property report for a symplectic pair.
#[derive(Debug, Clone, Serialize)]
pub struct SnlaReport {
    pub dim: usize,
    pub symplectic: SymplecticCheck,
    pub classification: Classification,
    /// Novikov flag of the associated product.
    pub is_snla: bool,
    /// The associated product is Novikov iff associative: reported always,
    /// as a built-in self-test of the implementation.
    pub novikov_associative_agree: bool,
    pub nilpotency_step: Option<usize>,
    pub solvability_step: Option<usize>,
    /// Structural consequences; present exactly when `is_snla`.
    pub structure: Option<SnlaStructure>,
}

/// Computes the associated product and decides the SNLA property chain.
pub fn snla_report(alg: &LieAlgebra, omega: &BilinearForm) -> Result<SnlaReport> {
    let product = associated_product(alg, omega)?;
    snla_report_with_product(alg, omega, &product)
}

pub fn snla_report_with_product(
    alg: &LieAlgebra,
    omega: &BilinearForm,
    product: &ProductTable,
) -> Result<SnlaReport> {
    let symplectic = is_symplectic(alg, omega)?;
    let classification = product.classify();
    let is_snla = classification.novikov;
    let novikov_associative_agree = classification.novikov == classification.associative;
    let nilpotency_step = alg.nilpotency_step();
    let solvability_step = alg.solvability_step();

    let structure = if is_snla {
        let derived = alg.derived_subalgebra();
        let derived_isotropic = omega.vanishes_on(&derived);
        let two_step_solvable = alg.bracket_spaces(&derived, &derived).is_zero();
        let two_step_nilpotent = nilpotency_step.is_some_and(|p| p <= 2);
        let lr_iff = classification.lr == two_step_nilpotent;
        let mut r_comm_zero = true;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if !product
                    .right_mult(alg.bracket_basis(i, j))
                    .expect("sizes match")
                    .is_zero()
                {
                    r_comm_zero = false;
                }
            }
        }
        let nilpotency = nilpotency_step.map(|p| {
            let dd = derived.dim();
            NilpotencyBound {
                step: p,
                dim_derived: dd,
                dim: alg.dim(),
                bound_holds: p <= dd + 1 && 2 * dd <= alg.dim(),
            }
        });
        Some(SnlaStructure {
            derived_isotropic,
            two_step_solvable,
            lr_iff_two_step_nilpotent: lr_iff,
            commutator_right_mult_zero: r_comm_zero,
            nilpotency,
        })
    } else {
        None
    };

    Ok(SnlaReport {
        dim: alg.dim(),
        symplectic,
        classification,
        is_snla,
        novikov_associative_agree,
        nilpotency_step,
        solvability_step,
        structure,
    })
}
