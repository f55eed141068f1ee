//! Catalog of low-dimensional examples: the four-dimensional and nilpotent
//! six-dimensional symplectic Novikov tables, and the three-dimensional
//! Novikov algebra list used by the cotangent construction.
//!
//! Entries are stored exactly as printed in the source tables. Building an
//! entry re-derives the associated product from the commutator bracket and
//! the stored form; when the printed product does not reproduce, the entry
//! carries an erratum record with the computed product alongside the printed
//! one, instead of silently patching the table. Two printed rows are known
//! to be internally inconsistent and are flagged this way (`L6_18.v3`,
//! `L6_25`); see the erratum details on the built entries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{is_symplectic, BilinearForm, LieAlgebra};
use crate::lsa::{ProductSpec, ProductTable};
use crate::scalar::{q, z, Scalar};
use crate::symplectic::{associated_product, snla_report, SnlaReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntryKind {
    /// A symplectic pair with its printed Novikov product.
    Snla,
    /// A bare product table (the three-dimensional Novikov list).
    Product,
}

/// Expected properties, recorded from the source remarks (corrected where a
/// printed claim is provably wrong; such corrections carry a note).
#[derive(Debug, Clone, Serialize)]
pub struct Expected {
    pub snla: Option<bool>,
    pub novikov: Option<bool>,
    pub associative: Option<bool>,
    pub nilpotency_step: Option<usize>,
    pub lr: Option<bool>,
    pub frobenius: Option<bool>,
}

/// Printed product vs. the product actually associated to the stored
/// symplectic form.
#[derive(Debug, Clone, Serialize)]
pub struct Erratum {
    pub detail: String,
    pub computed: ProductTable,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub dim: usize,
    pub params: BTreeMap<String, Scalar>,
    /// The product exactly as printed.
    pub printed_product: ProductTable,
    /// The symplectic form as printed (SNLA entries only).
    pub omega: Option<BilinearForm>,
    pub expected: Expected,
    /// Present when the printed product is not the associated product of
    /// the printed form.
    pub erratum: Option<Erratum>,
    pub note: Option<&'static str>,
}

impl CatalogEntry {
    /// The Lie algebra of the entry: commutator of the printed product.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        self.printed_product.commutator_algebra()
    }

    /// The product the toolkit actually certifies: the associated product
    /// of (algebra, omega) for SNLA entries (equal to the printed product
    /// unless the entry is an erratum), the printed product otherwise.
    pub fn effective_product(&self) -> ProductTable {
        match &self.erratum {
            Some(e) => e.computed.clone(),
            None => self.printed_product.clone(),
        }
    }

    pub fn snla_report(&self) -> Result<SnlaReport> {
        let omega = self
            .omega
            .as_ref()
            .ok_or_else(|| Error::input("entry has no symplectic form"))?;
        snla_report(&self.algebra()?, omega)
    }
}

/// All catalog names, in deterministic order. Parametric entries take a
/// parameter `lambda` or `a`.
pub fn list() -> Vec<&'static str> {
    vec![
        "aff_r",
        "rh3",
        "rr3_0",
        "d4_1",
        "r2_prime",
        "L6_18.v1",
        "L6_18.v2",
        "L6_18.v3",
        "L6_21.plus",
        "L6_21.minus",
        "L6_23.v1",
        "L6_23.v2.plus",
        "L6_23.v2.minus",
        "L6_25",
        "A_3_2",
        "A_3_3",
        "A_3_4",
        "A_3_5",
        "g_3_1",
        "g_3_2",
        "g_3_3",
    ]
}

/// Names of the twelve classification rows: the four 4-dimensional rows and
/// eight 6-dimensional rows (sign variants of `L6_21` are separate rows; the
/// correlated sign pair of `L6_23.v2` forms a single row).
pub fn classification_rows() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("rh3", vec!["rh3"]),
        ("rr3_0", vec!["rr3_0"]),
        ("d4_1", vec!["d4_1"]),
        ("r2_prime", vec!["r2_prime"]),
        ("L6_18.v1", vec!["L6_18.v1"]),
        ("L6_18.v2", vec!["L6_18.v2"]),
        ("L6_18.v3", vec!["L6_18.v3"]),
        ("L6_21.plus", vec!["L6_21.plus"]),
        ("L6_21.minus", vec!["L6_21.minus"]),
        ("L6_23.v1", vec!["L6_23.v1"]),
        ("L6_23.v2", vec!["L6_23.v2.plus", "L6_23.v2.minus"]),
        ("L6_25", vec!["L6_25"]),
    ]
}

/// The seven three-dimensional Novikov tables.
pub fn novikov3_names() -> Vec<&'static str> {
    vec!["A_3_2", "A_3_3", "A_3_4", "A_3_5", "g_3_1", "g_3_2", "g_3_3"]
}

/// Default parameter samples for batch runs: `{-2, -1/2, 1/2, 2, 3}` minus
/// each entry's exclusions.
pub fn parameter_samples(name: &str) -> Vec<Scalar> {
    let base = vec![z(-2), q(-1, 2), q(1, 2), z(2), z(3)];
    match parameter_name(name) {
        Some("lambda") => base
            .into_iter()
            .filter(|v| !v.is_zero() && !v.is_one())
            .collect(),
        Some(_) => base,
        None => vec![],
    }
}

/// The name of the entry's parameter, if it has one.
pub fn parameter_name(name: &str) -> Option<&'static str> {
    match name {
        "L6_18.v1" | "L6_18.v2" => Some("lambda"),
        "g_3_1" | "g_3_2" => Some("a"),
        _ => None,
    }
}

/// Default single parameter binding used by `catalog show` when none is
/// given.
pub fn default_params(name: &str) -> BTreeMap<String, Scalar> {
    let mut map = BTreeMap::new();
    if let Some(p) = parameter_name(name) {
        map.insert(p.to_string(), z(2));
    }
    map
}

fn require_param(params: &BTreeMap<String, Scalar>, key: &str, name: &str) -> Result<Scalar> {
    params.get(key).cloned().ok_or_else(|| {
        Error::input(format!("catalog entry {name} requires parameter {key}"))
    })
}

fn product(dim: usize, entries: &[ProductSpec]) -> ProductTable {
    ProductTable::new(dim, entries).expect("catalog table entries are in range")
}

fn form(dim: usize, terms: &[(usize, usize, Scalar)]) -> BilinearForm {
    BilinearForm::from_terms(dim, terms).expect("catalog form terms are in range")
}

/// Builds a catalog entry. Parametric entries read their parameter from
/// `params` and reject excluded values.
pub fn build(name: &str, params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let (kind, dim, printed, omega, expected, note): (
        EntryKind,
        usize,
        ProductTable,
        Option<BilinearForm>,
        Expected,
        Option<&'static str>,
    ) = match name {
        "aff_r" => (
            EntryKind::Snla,
            2,
            product(2, &[(0, 0, vec![(0, z(-1))]), (1, 0, vec![(1, z(-1))])]),
            Some(form(2, &[(0, 1, z(1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: Some(false),
                frobenius: Some(true),
            },
            Some("the two-dimensional nonabelian example; not a classification row"),
        ),
        "rh3" => (
            EntryKind::Snla,
            4,
            product(4, &[(0, 1, vec![(2, z(1))]), (1, 1, vec![(3, z(-1))])]),
            Some(form(4, &[(0, 3, z(1)), (1, 2, z(1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: Some(2),
                lr: Some(true),
                frobenius: Some(false),
            },
            None,
        ),
        "rr3_0" => (
            EntryKind::Snla,
            4,
            product(4, &[(0, 0, vec![(0, z(-1))]), (1, 0, vec![(1, z(-1))])]),
            Some(form(4, &[(0, 1, z(1)), (2, 3, z(1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: Some(false),
                frobenius: Some(false),
            },
            None,
        ),
        "d4_1" => (
            EntryKind::Snla,
            4,
            product(
                4,
                &[
                    (0, 1, vec![(2, z(1))]),
                    (0, 3, vec![(0, z(-1))]),
                    (1, 3, vec![(1, z(-1))]),
                    (2, 3, vec![(2, z(-1))]),
                    (3, 1, vec![(1, z(-1))]),
                    (3, 3, vec![(3, z(-1))]),
                ],
            ),
            Some(form(4, &[(0, 1, z(1)), (2, 3, z(-1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: Some(false),
                frobenius: Some(true),
            },
            None,
        ),
        "r2_prime" => (
            EntryKind::Snla,
            4,
            product(
                4,
                &[
                    (0, 0, vec![(0, z(-1))]),
                    (0, 1, vec![(1, z(-1))]),
                    (1, 0, vec![(1, z(-1))]),
                    (1, 1, vec![(0, z(1))]),
                    (2, 0, vec![(2, z(-1))]),
                    (2, 1, vec![(3, z(-1))]),
                    (3, 0, vec![(3, z(-1))]),
                    (3, 1, vec![(2, z(1))]),
                ],
            ),
            Some(form(4, &[(0, 3, z(1)), (1, 2, z(1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: Some(false),
                frobenius: Some(true),
            },
            None,
        ),
        "L6_18.v1" => {
            let l = require_param(params, "lambda", name)?;
            if l.is_zero() || l.is_one() {
                return Err(Error::input("L6_18 requires lambda outside {0, 1}"));
            }
            let lm1 = &l - &Scalar::one();
            (
                EntryKind::Snla,
                6,
                product(
                    6,
                    &[
                        (0, 1, vec![(3, &l / &lm1)]),
                        (0, 2, vec![(4, &lm1 / &l)]),
                        (1, 0, vec![(3, lm1.recip()?)]),
                        (1, 2, vec![(5, -&lm1)]),
                        (2, 0, vec![(4, -&l.recip()?)]),
                        (2, 1, vec![(5, -&l)]),
                    ],
                ),
                Some(form(6, &[(0, 5, z(1)), (1, 4, l.clone()), (2, 3, lm1.clone())])),
                Expected {
                    snla: Some(true),
                    novikov: Some(true),
                    associative: Some(true),
                    nilpotency_step: Some(2),
                    lr: Some(true),
                    frobenius: Some(false),
                },
                None,
            )
        }
        "L6_18.v2" => {
            let l = require_param(params, "lambda", name)?;
            if l.is_zero() || l.is_one() {
                return Err(Error::input("L6_18 requires lambda outside {0, 1}"));
            }
            let l2p1 = &(&l * &l) + &Scalar::one();
            let l2m1 = &(&l * &l) - &Scalar::one();
            let two_l = &z(2) * &l;
            let a = &two_l / &l2p1; // 2l/(l^2+1)
            let b = &l2m1 / &l2p1; // (l^2-1)/(l^2+1)
            let half = q(1, 2);
            let inv2l = two_l.recip()?;
            (
                EntryKind::Snla,
                6,
                product(
                    6,
                    &[
                        (0, 0, vec![(3, -&inv2l)]),
                        (0, 1, vec![(3, half.clone())]),
                        (1, 0, vec![(3, -&half)]),
                        (1, 1, vec![(3, -&inv2l)]),
                        (0, 2, vec![(4, &a * &l), (5, -&a)]),
                        (1, 2, vec![(4, a.clone()), (5, &a * &l)]),
                        (2, 0, vec![(4, b.clone()), (5, -&a)]),
                        (2, 1, vec![(4, a.clone()), (5, b.clone())]),
                    ],
                ),
                Some(form(
                    6,
                    &[
                        (0, 4, z(1)),
                        (0, 5, l.clone()),
                        (1, 4, -&l),
                        (1, 5, z(1)),
                        (2, 3, -&two_l),
                    ],
                )),
                Expected {
                    snla: Some(true),
                    novikov: Some(true),
                    associative: Some(true),
                    nilpotency_step: Some(2),
                    lr: Some(true),
                    frobenius: Some(false),
                },
                None,
            )
        }
        "L6_18.v3" => (
            EntryKind::Snla,
            6,
            product(
                6,
                &[
                    (0, 1, vec![(3, z(-1)), (4, z(-2))]),
                    (0, 2, vec![(4, z(-1))]),
                    (1, 0, vec![(3, z(-2)), (4, z(-2))]),
                    (1, 1, vec![(5, q(1, 2))]),
                    (1, 2, vec![(5, q(1, 2))]),
                    (2, 0, vec![(4, z(-2))]),
                    (2, 1, vec![(5, q(-1, 2))]),
                ],
            ),
            Some(form(
                6,
                &[(2, 4, z(1)), (0, 5, z(-1)), (1, 4, z(1)), (2, 3, z(2))],
            )),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: Some(2),
                lr: Some(true),
                frobenius: Some(false),
            },
            Some(
                "printed row is internally inconsistent: no symplectic form makes the printed \
                 products associated (the linear constraints force a degenerate form); stored as \
                 printed with the computed associated product in the erratum record",
            ),
        ),
        "L6_21.plus" | "L6_21.minus" => {
            let s = if name.ends_with("plus") { z(1) } else { z(-1) };
            (
                EntryKind::Snla,
                6,
                product(
                    6,
                    &[
                        (0, 0, vec![(2, z(1))]),
                        (0, 2, vec![(4, z(-1))]),
                        (1, 0, vec![(3, z(-1))]),
                        (1, 2, vec![(5, z(1))]),
                        (2, 0, vec![(4, z(-1))]),
                        (3, 0, vec![(5, z(-1))]),
                    ],
                ),
                Some(form(6, &[(0, 5, s.clone()), (1, 4, s.clone()), (2, 3, -&s)])),
                Expected {
                    snla: Some(true),
                    novikov: Some(true),
                    associative: Some(true),
                    nilpotency_step: Some(3),
                    lr: Some(false),
                    frobenius: Some(false),
                },
                None,
            )
        }
        "L6_23.v1" => (
            EntryKind::Snla,
            6,
            product(
                6,
                &[
                    (0, 0, vec![(3, z(1))]),
                    (0, 1, vec![(4, z(1))]),
                    (1, 1, vec![(5, z(-1))]),
                    (2, 0, vec![(5, z(-1))]),
                ],
            ),
            Some(form(6, &[(0, 5, z(1)), (1, 4, z(1)), (2, 3, z(1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: Some(2),
                lr: Some(true),
                frobenius: Some(false),
            },
            None,
        ),
        "L6_23.v2.plus" | "L6_23.v2.minus" => {
            // The row's two sign choices anti-correlate: the printed product
            // with e2.e3 = e3.e2 = s e4 is associated to e^{14} - s(e^{26} +
            // e^{35}), not to e^{14} + s(...). Sub-entries are keyed by the
            // product sign.
            let s = if name.ends_with("plus") { z(1) } else { z(-1) };
            (
                EntryKind::Snla,
                6,
                product(
                    6,
                    &[
                        (0, 1, vec![(4, z(1))]),
                        (0, 2, vec![(5, z(1))]),
                        (1, 2, vec![(3, s.clone())]),
                        (2, 1, vec![(3, s.clone())]),
                    ],
                ),
                Some(form(6, &[(0, 3, z(1)), (1, 5, -&s), (2, 4, -&s)])),
                Expected {
                    snla: Some(true),
                    novikov: Some(true),
                    associative: Some(true),
                    nilpotency_step: Some(2),
                    lr: Some(true),
                    frobenius: Some(false),
                },
                Some(
                    "the two printed sign symbols anti-correlate: reading both with the same \
                     sign is inconsistent with the defining equation; the form stores the \
                     opposite sign of the product",
                ),
            )
        }
        "L6_25" => (
            EntryKind::Snla,
            6,
            product(6, &[(0, 0, vec![(4, z(1))]), (1, 0, vec![(5, z(-1))])]),
            Some(form(6, &[(0, 5, z(1)), (1, 3, z(1)), (2, 4, z(-1))])),
            Expected {
                snla: Some(true),
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: Some(2),
                lr: Some(true),
                frobenius: Some(false),
            },
            Some(
                "printed form e^{16}+e^{24}-e^{35} does not reproduce the printed product \
                 (it gives e1.e1 = e4); the printed product is associated to \
                 e^{16}+e^{25}-e^{34}, so the stored row carries an erratum record",
            ),
        ),
        "A_3_2" => (
            EntryKind::Product,
            3,
            product(3, &[(0, 0, vec![(1, z(1))])]),
            None,
            Expected {
                snla: None,
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: None,
                frobenius: None,
            },
            None,
        ),
        "A_3_3" => (
            EntryKind::Product,
            3,
            product(
                3,
                &[
                    (0, 0, vec![(1, z(1))]),
                    (0, 1, vec![(2, z(1))]),
                    (1, 0, vec![(2, z(1))]),
                ],
            ),
            None,
            Expected {
                snla: None,
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: None,
                frobenius: None,
            },
            None,
        ),
        "A_3_4" => (
            EntryKind::Product,
            3,
            product(3, &[(0, 0, vec![(2, z(1))]), (1, 1, vec![(2, z(1))])]),
            None,
            Expected {
                snla: None,
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: None,
                frobenius: None,
            },
            None,
        ),
        "A_3_5" => (
            EntryKind::Product,
            3,
            product(3, &[(0, 0, vec![(2, z(-1))]), (1, 1, vec![(2, z(1))])]),
            None,
            Expected {
                snla: None,
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: None,
                frobenius: None,
            },
            None,
        ),
        "g_3_1" => {
            let a = require_param(params, "a", name)?;
            (
                EntryKind::Product,
                3,
                product(
                    3,
                    &[
                        (0, 0, vec![(1, z(1))]),
                        (0, 1, vec![(2, &a + &Scalar::one())]),
                        (1, 0, vec![(2, a.clone())]),
                    ],
                ),
                None,
                Expected {
                    snla: None,
                    novikov: Some(true),
                    // listed under "Novikov associative" but ass(e1,e1,e1) =
                    // e2.e1 - e1.e2 = -e3 for every a; the table heading is
                    // wrong for this row
                    associative: Some(false),
                    nilpotency_step: None,
                    lr: None,
                    frobenius: None,
                },
                Some("Novikov but not associative: ass(e1,e1,e1) = -e3 for every a"),
            )
        }
        "g_3_2" => {
            let a = require_param(params, "a", name)?;
            (
                EntryKind::Product,
                3,
                product(
                    3,
                    &[
                        (0, 0, vec![(2, a.clone())]),
                        (0, 1, vec![(2, z(1))]),
                        (1, 1, vec![(2, z(1))]),
                    ],
                ),
                None,
                Expected {
                    snla: None,
                    novikov: Some(true),
                    associative: Some(true),
                    nilpotency_step: None,
                    lr: None,
                    frobenius: None,
                },
                None,
            )
        }
        "g_3_3" => (
            EntryKind::Product,
            3,
            product(3, &[(0, 1, vec![(2, q(1, 2))]), (1, 0, vec![(2, q(-1, 2))])]),
            None,
            Expected {
                snla: None,
                novikov: Some(true),
                associative: Some(true),
                nilpotency_step: None,
                lr: None,
                frobenius: None,
            },
            None,
        ),
        _ => return Err(Error::input(format!("unknown catalog entry {name:?}"))),
    };

    let mut entry = CatalogEntry {
        name: name.to_string(),
        kind,
        dim,
        params: params.clone(),
        printed_product: printed,
        omega,
        expected,
        erratum: None,
        note,
    };

    if entry.kind == EntryKind::Snla {
        let alg = entry.algebra()?;
        let omega = entry.omega.as_ref().expect("snla entries carry a form");
        let check = is_symplectic(&alg, omega)?;
        if !check.all() {
            return Err(Error::axiom(
                "symplectic axioms",
                format!("catalog entry {name} stores a non-symplectic form"),
            ));
        }
        let computed = associated_product(&alg, omega)?;
        if computed != entry.printed_product {
            entry.erratum = Some(Erratum {
                detail: format!(
                    "printed product is not the product associated to the printed form \
                     (entry {name})"
                ),
                computed,
            });
        }
    }
    Ok(entry)
}

/// Builds an entry over its default parameter binding.
pub fn build_default(name: &str) -> Result<CatalogEntry> {
    build(name, &default_params(name))
}

/// Every (entry, parameter binding) combination in the batch sample set.
pub fn all_instances() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for name in list() {
        match parameter_name(name) {
            None => out.push(build(name, &BTreeMap::new()).expect("static entry builds")),
            Some(p) => {
                for v in parameter_samples(name) {
                    let mut params = BTreeMap::new();
                    params.insert(p.to_string(), v);
                    out.push(build(name, &params).expect("sampled entry builds"));
                }
            }
        }
    }
    out
}

/// All SNLA instances (catalog entries with a symplectic form), sampled.
pub fn snla_instances() -> Vec<CatalogEntry> {
    all_instances()
        .into_iter()
        .filter(|e| e.kind == EntryKind::Snla)
        .collect()
}

/// The perturbed d4_1 pair: same bracket, form e^{12} - e^{34} + e^{24}.
/// Symplectic but not Novikov; the standard negative control.
pub fn d4_1_perturbed() -> (LieAlgebra, BilinearForm) {
    let entry = build_default("d4_1").expect("d4_1 builds");
    let alg = entry.algebra().expect("d4_1 bracket satisfies Jacobi");
    let omega = form(4, &[(0, 1, z(1)), (2, 3, z(-1)), (1, 3, z(1))]);
    (alg, omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_is_zero;

    #[test]
    fn every_entry_builds_and_satisfies_jacobi() {
        for entry in all_instances() {
            if entry.kind == EntryKind::Snla {
                let alg = entry.algebra().unwrap();
                assert!(alg.check_jacobi().ok, "{} bracket fails Jacobi", entry.name);
                let omega = entry.omega.as_ref().unwrap();
                assert!(
                    is_symplectic(&alg, omega).unwrap().all(),
                    "{} form is not symplectic",
                    entry.name
                );
            }
        }
    }

    #[test]
    fn round_trip_errata_are_exactly_the_known_rows() {
        let mut errata = Vec::new();
        for entry in snla_instances() {
            if entry.erratum.is_some() {
                errata.push(entry.name.clone());
            }
        }
        errata.sort();
        errata.dedup();
        assert_eq!(errata, vec!["L6_18.v3".to_string(), "L6_25".to_string()]);
    }

    #[test]
    fn every_snla_entry_is_snla() {
        for entry in snla_instances() {
            let report = entry.snla_report().unwrap();
            assert!(
                report.is_snla,
                "{} expected SNLA, classification: {:?}",
                entry.name, report.classification
            );
            assert!(report.novikov_associative_agree, "{}", entry.name);
            assert_eq!(report.nilpotency_step, entry.expected.nilpotency_step,
                "{} nilpotency step", entry.name);
            let s = report.structure.unwrap();
            assert!(s.all(), "{} structural consequences", entry.name);
            if let Some(lr) = entry.expected.lr {
                assert_eq!(report.classification.lr, lr, "{} LR flag", entry.name);
            }
        }
    }

    #[test]
    fn frobenius_flags() {
        for name in ["aff_r", "rh3", "rr3_0", "d4_1", "r2_prime"] {
            let entry = build_default(name).unwrap();
            let alg = entry.algebra().unwrap();
            let omega = entry.omega.as_ref().unwrap();
            let cert = crate::lie::exactness_certificate(&alg, omega).unwrap();
            assert_eq!(
                cert.is_some(),
                entry.expected.frobenius.unwrap(),
                "{name} Frobenius flag"
            );
            if let Some(alpha) = cert {
                // verify w(x,y) = -alpha([x,y]) on basis pairs
                for i in 0..alg.dim() {
                    for j in 0..alg.dim() {
                        let br = alg.bracket_basis(i, j);
                        let mut pairing = Scalar::zero();
                        for (k, c) in br.iter().enumerate() {
                            pairing += c * &alpha[k];
                        }
                        assert_eq!(-pairing, omega.eval_basis(i, j).clone(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_build_examples() {
        // rr3_0 printed product
        let e = build_default("rr3_0").unwrap();
        assert_eq!(e.printed_product.basis_product(0, 0), &[z(-1), z(0), z(0), z(0)]);
        assert!(e.erratum.is_none());

        // L6_18.v1 at lambda = 2
        let mut params = BTreeMap::new();
        params.insert("lambda".to_string(), z(2));
        let e = build("L6_18.v1", &params).unwrap();
        assert_eq!(
            e.printed_product.basis_product(0, 1),
            &[z(0), z(0), z(0), z(2), z(0), z(0)]
        );
        assert_eq!(
            e.printed_product.basis_product(1, 0),
            &[z(0), z(0), z(0), z(1), z(0), z(0)]
        );
        assert_eq!(
            e.printed_product.basis_product(0, 2),
            &[z(0), z(0), z(0), z(0), q(1, 2), z(0)]
        );
        assert_eq!(*e.omega.as_ref().unwrap().eval_basis(1, 4), z(2));
        assert!(e.erratum.is_none());

        // excluded parameter refused
        let mut bad = BTreeMap::new();
        bad.insert("lambda".to_string(), Scalar::one());
        assert!(build("L6_18.v1", &bad).is_err());

        // g_3_3 printed product
        let e = build_default("g_3_3").unwrap();
        assert_eq!(e.printed_product.basis_product(0, 1), &[z(0), z(0), q(1, 2)]);
        assert_eq!(e.printed_product.basis_product(1, 0), &[z(0), z(0), q(-1, 2)]);

        assert!(build("no_such_entry", &BTreeMap::new()).is_err());
    }

    #[test]
    fn derived_brackets_match_expectations() {
        // L6_18 commutators are independent of lambda: [e1,e2]=e4,
        // [e1,e3]=e5, [e2,e3]=e6
        let mut params = BTreeMap::new();
        params.insert("lambda".to_string(), z(2));
        for name in ["L6_18.v1", "L6_18.v2"] {
            let alg = build(name, &params).unwrap().algebra().unwrap();
            assert_eq!(alg.bracket_basis(0, 1)[3], z(1), "{name}");
            assert_eq!(alg.bracket_basis(0, 2)[4], z(1), "{name}");
            assert_eq!(alg.bracket_basis(1, 2)[5], z(1), "{name}");
        }

        // L6_23.v1: D(g) = span{e5, e6}, 2-step nilpotent
        let alg = build_default("L6_23.v1").unwrap().algebra().unwrap();
        let d = alg.derived_subalgebra();
        assert_eq!(d.basis(), &[crate::linalg::unit_vec(6, 4), crate::linalg::unit_vec(6, 5)]);
        assert_eq!(alg.nilpotency_step(), Some(2));

        // L6_25: [e1, e2] = e6 only
        let alg = build_default("L6_25").unwrap().algebra().unwrap();
        assert_eq!(alg.bracket_basis(0, 1), &[z(0), z(0), z(0), z(0), z(0), z(1)]);
        for (i, j) in [(0usize, 2usize), (0, 3), (1, 2), (2, 3)] {
            assert!(vec_is_zero(alg.bracket_basis(i, j)));
        }
    }

    #[test]
    fn l6_25_erratum_content() {
        let e = build_default("L6_25").unwrap();
        let err = e.erratum.as_ref().expect("L6_25 is a known erratum");
        // the printed form gives e1.e1 = e4, not the printed e5
        assert_eq!(
            err.computed.basis_product(0, 0),
            &[z(0), z(0), z(0), z(1), z(0), z(0)]
        );
        assert_eq!(
            e.printed_product.basis_product(0, 0),
            &[z(0), z(0), z(0), z(0), z(1), z(0)]
        );
        // and the computed product is genuinely the associated one
        let alg = e.algebra().unwrap();
        let assoc = associated_product(&alg, e.omega.as_ref().unwrap()).unwrap();
        assert_eq!(assoc, err.computed);
    }

    #[test]
    fn novikov3_classifications() {
        for name in novikov3_names() {
            let e = build_default(name).unwrap();
            let c = e.printed_product.classify();
            assert_eq!(Some(c.novikov), e.expected.novikov, "{name} novikov");
            assert_eq!(
                Some(c.associative),
                e.expected.associative,
                "{name} associative"
            );
        }
        // g_3_1 is the one non-associative row, for every sampled a
        for a in parameter_samples("g_3_1") {
            let mut params = BTreeMap::new();
            params.insert("a".to_string(), a);
            let e = build("g_3_1", &params).unwrap();
            let c = e.printed_product.classify();
            assert!(c.novikov && !c.associative);
        }
    }

    #[test]
    fn nilpotent_entries_have_zero_killing_form() {
        for entry in snla_instances() {
            let alg = entry.algebra().unwrap();
            if alg.is_nilpotent() {
                assert!(alg.killing_form().matrix().is_zero(), "{}", entry.name);
            }
        }
    }

    #[test]
    fn l6_25_printed_product_is_complete() {
        // strictly triangular right multiplications
        let e = build_default("L6_25").unwrap();
        assert!(e.printed_product.is_complete_novikov().unwrap());
        // and so is the computed associated product
        assert!(e.effective_product().is_complete_novikov().unwrap());
    }

    #[test]
    fn perturbed_d4_1_is_symplectic() {
        let (alg, omega) = d4_1_perturbed();
        assert!(is_symplectic(&alg, &omega).unwrap().all());
        let report = snla_report(&alg, &omega).unwrap();
        assert!(!report.is_snla);
        assert!(report.novikov_associative_agree);
        assert!(!report.classification.witnesses.is_empty());
    }
}
