//! JSON documents for algebras and bimodules.
//!
//! Indices are 1-based. Scalars are strings (`"3"`, `"-1/2"`) or integers;
//! the canonical form writes rationals as reduced strings and residues as
//! integers in `[0, p)`.

use std::sync::Arc;

use leibniz_core::linalg::Matrix;
use leibniz_core::{Bimodule, FieldSpec, LeibnizAlgebra, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    /// Only `"Q"` is accepted.
    Name(String),
    Prime { p: u64 },
}

impl FieldDoc {
    pub fn spec(&self) -> Result<FieldSpec, CliError> {
        match self {
            FieldDoc::Name(s) if s == "Q" => Ok(FieldSpec::Rationals),
            FieldDoc::Name(s) => Err(CliError::Input(format!("unknown field {s:?} (use \"Q\" or {{\"p\": n}})"))),
            FieldDoc::Prime { p } => Ok(FieldSpec::prime(*p)?),
        }
    }

    pub fn of(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => FieldDoc::Name("Q".into()),
            FieldSpec::PrimeField(p) => FieldDoc::Prime { p: u64::from(p) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Text(String),
}

impl ScalarDoc {
    pub fn parse<K: Scalar>(&self) -> Result<K, CliError> {
        match self {
            ScalarDoc::Int(v) => Ok(K::from_i64(*v)),
            ScalarDoc::Text(s) => Ok(K::parse_scalar(s.trim())?),
        }
    }

    pub fn of<K: Scalar>(x: &K) -> Self {
        match x.residue() {
            Some(r) => ScalarDoc::Int(r as i64),
            None => ScalarDoc::Text(x.to_string()),
        }
    }
}

/// `[i, j, [c_1, …, c_dim]]`: `e_i e_j = Σ c_k e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc(pub usize, pub usize, pub Vec<ScalarDoc>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default)]
    pub products: Vec<ProductDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDocument {
    pub dim: usize,
    pub lambda: Vec<Vec<Vec<ScalarDoc>>>,
    pub rho: Vec<Vec<Vec<ScalarDoc>>>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed {what} document: {e}")))
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        parse_json(text, "algebra")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Structure constants without checking the Leibniz identity, so that
    /// violations can be reported by the caller.
    pub fn build<K: Scalar>(&self) -> Result<LeibnizAlgebra<K>, CliError> {
        let d = self.dim;
        let mut c = vec![vec![vec![K::zero(); d]; d]; d];
        let mut seen = vec![vec![false; d]; d];
        for ProductDoc(i, j, v) in &self.products {
            if *i == 0 || *j == 0 || *i > d || *j > d {
                return Err(CliError::Input(format!("product index ({i}, {j}) outside 1..={d}")));
            }
            if v.len() != d {
                return Err(CliError::Input(format!("product ({i}, {j}) has {} coefficients, expected {d}", v.len())));
            }
            if std::mem::replace(&mut seen[i - 1][j - 1], true) {
                return Err(CliError::Input(format!("product ({i}, {j}) given twice")));
            }
            c[i - 1][j - 1] = v.iter().map(ScalarDoc::parse).collect::<Result<_, _>>()?;
        }
        Ok(LeibnizAlgebra::new_unchecked(d, c)?)
    }

    pub fn from_algebra<K: Scalar>(a: &LeibnizAlgebra<K>) -> Self {
        let d = a.dim();
        let mut products = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let v = a.basis_product(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    products.push(ProductDoc(i + 1, j + 1, v.iter().map(ScalarDoc::of).collect()));
                }
            }
        }
        AlgebraDocument { field: FieldDoc::of(K::field()), dim: d, products }
    }
}

fn matrix_from<K: Scalar>(rows: &[Vec<ScalarDoc>], dim: usize, what: &str) -> Result<Matrix<K>, CliError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Input(format!("{what} is not a {dim}x{dim} matrix")));
    }
    let dense: Vec<Vec<K>> = rows
        .iter()
        .map(|r| r.iter().map(ScalarDoc::parse).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    Ok(if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_dense(&dense) })
}

fn matrix_doc<K: Scalar>(m: &Matrix<K>) -> Vec<Vec<ScalarDoc>> {
    m.to_dense().iter().map(|r| r.iter().map(ScalarDoc::of).collect()).collect()
}

impl BimoduleDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        parse_json(text, "bimodule")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Actions without checking the bimodule identities.
    pub fn build<K: Scalar>(&self, algebra: Arc<LeibnizAlgebra<K>>) -> Result<Bimodule<K>, CliError> {
        let n = algebra.dim();
        if self.lambda.len() != n || self.rho.len() != n {
            return Err(CliError::Input(format!(
                "bimodule lists {} left and {} right matrices, the algebra has dimension {n}",
                self.lambda.len(),
                self.rho.len()
            )));
        }
        let conv = |ms: &[Vec<Vec<ScalarDoc>>], side: &str| -> Result<Vec<Matrix<K>>, CliError> {
            ms.iter()
                .enumerate()
                .map(|(i, m)| matrix_from(m, self.dim, &format!("{side}[{}]", i + 1)))
                .collect()
        };
        let lambda = conv(&self.lambda, "lambda")?;
        let rho = conv(&self.rho, "rho")?;
        Ok(Bimodule::new_unchecked(algebra, lambda, rho)?)
    }

    pub fn from_bimodule<K: Scalar>(m: &Bimodule<K>) -> Self {
        BimoduleDocument {
            dim: m.dim(),
            lambda: m.lambda().iter().map(matrix_doc).collect(),
            rho: m.rho().iter().map(matrix_doc).collect(),
        }
    }
}
