//! File formats: Lie algebras, product tables and oxidation data as JSON.
//!
//! Indices are 1-based in files and converted at the boundary. Coefficients
//! are rational strings `"p/q"` (or `"p"`). Omitted pairs are zero; bracket
//! and form entries require `i < j` and the skew completion is implicit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{BilinearForm, LieAlgebra};
use crate::linalg::Matrix;
use crate::lsa::ProductTable;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermOut {
    pub k: usize,
    pub c: Scalar,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairOut {
    pub i: usize,
    pub j: usize,
    pub out: Vec<TermOut>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormTerm {
    pub i: usize,
    pub j: usize,
    pub c: Scalar,
}

/// `{"dim": n, "labels": [...], "brackets": [...], "omega": [...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<PairOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<FormTerm>>,
}

/// `{"dim": n, "products": [...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductFile {
    pub dim: usize,
    #[serde(default)]
    pub products: Vec<PairOut>,
}

/// `{"phi": matrix, "lambda": covector, "zeta": vector|null}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OxidationFile {
    pub phi: Vec<Vec<Scalar>>,
    pub lambda: Vec<Scalar>,
    #[serde(default)]
    pub zeta: Option<Vec<Scalar>>,
}

fn check_index(value: usize, dim: usize, field: &str) -> Result<usize> {
    if value == 0 || value > dim {
        return Err(Error::input(format!(
            "field {field}: index {value} out of range 1..={dim}"
        )));
    }
    Ok(value - 1)
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let mut brackets = Vec::new();
        for (row, entry) in self.brackets.iter().enumerate() {
            let i = check_index(entry.i, self.dim, &format!("brackets[{row}].i"))?;
            let j = check_index(entry.j, self.dim, &format!("brackets[{row}].j"))?;
            if i >= j {
                return Err(Error::input(format!(
                    "brackets[{row}]: require i < j (skew completion is implicit), got ({}, {})",
                    entry.i, entry.j
                )));
            }
            let mut out = Vec::new();
            for (t, term) in entry.out.iter().enumerate() {
                let k = check_index(term.k, self.dim, &format!("brackets[{row}].out[{t}].k"))?;
                out.push((k, term.c.clone()));
            }
            brackets.push((i, j, out));
        }
        LieAlgebra::new(self.dim, self.labels.clone(), &brackets)
    }

    pub fn to_omega(&self) -> Result<Option<BilinearForm>> {
        let Some(terms) = &self.omega else {
            return Ok(None);
        };
        let mut parsed = Vec::new();
        for (row, term) in terms.iter().enumerate() {
            let i = check_index(term.i, self.dim, &format!("omega[{row}].i"))?;
            let j = check_index(term.j, self.dim, &format!("omega[{row}].j"))?;
            if i >= j {
                return Err(Error::input(format!(
                    "omega[{row}]: require i < j (skew completion is implicit), got ({}, {})",
                    term.i, term.j
                )));
            }
            parsed.push((i, j, term.c.clone()));
        }
        Ok(Some(BilinearForm::from_terms(self.dim, &parsed)?))
    }

    /// Requires the file to carry a symplectic form candidate.
    pub fn to_pair(&self) -> Result<(LieAlgebra, BilinearForm)> {
        let alg = self.to_algebra()?;
        let omega = self
            .to_omega()?
            .ok_or_else(|| Error::input("file has no \"omega\" field"))?;
        Ok((alg, omega))
    }

    pub fn from_pair(alg: &LieAlgebra, omega: Option<&BilinearForm>) -> AlgebraFile {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let out: Vec<TermOut> = alg
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| TermOut { k: k + 1, c: c.clone() })
                    .collect();
                if !out.is_empty() {
                    brackets.push(PairOut { i: i + 1, j: j + 1, out });
                }
            }
        }
        let omega = omega.map(|w| {
            let mut terms = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let c = w.eval_basis(i, j);
                    if !c.is_zero() {
                        terms.push(FormTerm { i: i + 1, j: j + 1, c: c.clone() });
                    }
                }
            }
            terms
        });
        AlgebraFile {
            dim: n,
            labels: Some(alg.labels().to_vec()),
            brackets,
            omega,
        }
    }
}

impl ProductFile {
    pub fn to_product(&self) -> Result<ProductTable> {
        let mut entries = Vec::new();
        for (row, entry) in self.products.iter().enumerate() {
            let i = check_index(entry.i, self.dim, &format!("products[{row}].i"))?;
            let j = check_index(entry.j, self.dim, &format!("products[{row}].j"))?;
            let mut out = Vec::new();
            for (t, term) in entry.out.iter().enumerate() {
                let k = check_index(term.k, self.dim, &format!("products[{row}].out[{t}].k"))?;
                out.push((k, term.c.clone()));
            }
            entries.push((i, j, out));
        }
        ProductTable::new(self.dim, &entries)
    }

    pub fn from_product(p: &ProductTable) -> ProductFile {
        let products = p
            .entries()
            .into_iter()
            .map(|(i, j, out)| PairOut {
                i: i + 1,
                j: j + 1,
                out: out
                    .into_iter()
                    .map(|(k, c)| TermOut { k: k + 1, c })
                    .collect(),
            })
            .collect();
        ProductFile {
            dim: p.dim(),
            products,
        }
    }
}

impl OxidationFile {
    pub fn to_data(&self) -> Result<crate::constructions::OxidationData> {
        let rows = self.phi.len();
        let cols = self.phi.first().map_or(0, |r| r.len());
        if rows != cols {
            return Err(Error::input("phi must be a square matrix"));
        }
        let phi = Matrix::from_rows(self.phi.clone())?;
        if self.lambda.len() != rows {
            return Err(Error::input("lambda length must match phi"));
        }
        if let Some(zeta) = &self.zeta {
            if zeta.len() != rows {
                return Err(Error::input("zeta length must match phi"));
            }
        }
        Ok(crate::constructions::OxidationData {
            phi,
            lambda: self.lambda.clone(),
            zeta: self.zeta.clone(),
        })
    }
}

/// Parses a JSON string into an algebra file with location diagnostics.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    serde_json::from_str(text)
        .map_err(|e| Error::input(format!("algebra file: {e}")))
}

pub fn parse_product_file(text: &str) -> Result<ProductFile> {
    serde_json::from_str(text)
        .map_err(|e| Error::input(format!("product file: {e}")))
}

pub fn parse_oxidation_file(text: &str) -> Result<OxidationFile> {
    serde_json::from_str(text)
        .map_err(|e| Error::input(format!("oxidation data file: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, z};

    #[test]
    fn algebra_file_round_trip() {
        let text = r#"{
            "dim": 2,
            "labels": ["e1", "e2"],
            "brackets": [{"i": 1, "j": 2, "out": [{"k": 2, "c": "1"}]}],
            "omega": [{"i": 1, "j": 2, "c": "1"}]
        }"#;
        let file = parse_algebra_file(text).unwrap();
        let (alg, omega) = file.to_pair().unwrap();
        assert_eq!(alg.bracket_basis(0, 1), &[z(0), z(1)]);
        assert_eq!(*omega.eval_basis(0, 1), z(1));
        assert_eq!(*omega.eval_basis(1, 0), z(-1));

        let out = AlgebraFile::from_pair(&alg, Some(&omega));
        let (alg2, omega2) = out.to_pair().unwrap();
        assert_eq!(alg, alg2);
        assert_eq!(omega, omega2);
    }

    #[test]
    fn rational_coefficients_parse() {
        let text = r#"{
            "dim": 3,
            "products": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1/2"}]},
                         {"i": 2, "j": 1, "out": [{"k": 3, "c": "-1/2"}]}]
        }"#;
        let p = parse_product_file(text).unwrap().to_product().unwrap();
        assert_eq!(p.basis_product(0, 1), &[z(0), z(0), q(1, 2)]);
        assert_eq!(p.basis_product(1, 0), &[z(0), z(0), q(-1, 2)]);
    }

    #[test]
    fn diagnostics_for_bad_input() {
        // out-of-range index named with its field
        let text = r#"{"dim": 2, "brackets": [{"i": 1, "j": 5, "out": []}]}"#;
        let err = parse_algebra_file(text).unwrap().to_algebra().unwrap_err();
        assert!(err.to_string().contains("brackets[0].j"));

        // i >= j rejected
        let text = r#"{"dim": 2, "brackets": [{"i": 2, "j": 1, "out": []}]}"#;
        assert!(parse_algebra_file(text).unwrap().to_algebra().is_err());

        // malformed rational
        let text = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "out": [{"k": 1, "c": "x"}]}]}"#;
        assert!(parse_algebra_file(text).is_err());

        // non-Jacobi input refused at conversion
        let text = r#"{
            "dim": 3,
            "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]},
                         {"i": 1, "j": 3, "out": [{"k": 1, "c": "1"}]}]
        }"#;
        let err = parse_algebra_file(text).unwrap().to_algebra().unwrap_err();
        assert!(err.to_string().contains("Jacobi"));
    }

    #[test]
    fn oxidation_file_parses() {
        let text = r#"{
            "phi": [["0", "0"], ["1", "0"]],
            "lambda": ["0", "0"],
            "zeta": null
        }"#;
        let data = parse_oxidation_file(text).unwrap().to_data().unwrap();
        assert_eq!(*data.phi.get(1, 0), z(1));
        assert!(data.zeta.is_none());
    }
}
