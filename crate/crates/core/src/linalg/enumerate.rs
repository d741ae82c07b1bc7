//! Exhaustive enumeration of vectors, lines and subspaces over a small prime
//! field, always behind an explicit budget.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::subspace::Subspace;

/// Default cap on the number of objects an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

fn field_elements<K: Scalar>() -> Result<Vec<K>> {
    K::elements().ok_or(Error::FiniteFieldRequired)
}

fn checked_pow(base: u64, exp: usize) -> u64 {
    (0..exp).fold(1u64, |acc, _| acc.saturating_mul(base))
}

/// Number of `k`-dimensional subspaces of `GF(q)^n` (Gaussian binomial).
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(u128::from(checked_pow(q, n - i)) - 1);
        den = den.saturating_mul(u128::from(checked_pow(q, i + 1)) - 1);
    }
    u64::try_from(num / den).unwrap_or(u64::MAX)
}

/// All vectors of `GF(p)^n`, in lexicographic order.
pub fn all_vectors<K: Scalar>(n: usize, budget: u64) -> Result<Vec<Vec<K>>> {
    let els = field_elements::<K>()?;
    let total = checked_pow(els.len() as u64, n);
    if total > budget {
        return Err(Error::BudgetExceeded { budget, needed: total });
    }
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                els.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

/// One normalized representative (first nonzero entry 1) per line of
/// `GF(p)^n`.
pub fn lines<K: Scalar>(n: usize, budget: u64) -> Result<Vec<Vec<K>>> {
    let els = field_elements::<K>()?;
    let total = gaussian_binomial(n, 1, els.len() as u64);
    if total > budget {
        return Err(Error::BudgetExceeded { budget, needed: total });
    }
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = all_vectors::<K>(n - lead - 1, budget)?;
        for t in tail {
            let mut v = vec![K::zero(); lead];
            v.push(K::one());
            v.extend(t);
            out.push(v);
        }
    }
    Ok(out)
}

/// All `k`-dimensional subspaces of `GF(p)^n`, each exactly once, by running
/// over reduced echelon shapes.
pub fn subspaces_of_dim<K: Scalar>(n: usize, k: usize, budget: u64) -> Result<Vec<Subspace<K>>> {
    let els = field_elements::<K>()?;
    let total = gaussian_binomial(n, k, els.len() as u64);
    if total > budget {
        return Err(Error::BudgetExceeded { budget, needed: total });
    }
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // free slots: (row r, column c) with c > pivots[r] and c not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = pivots.clone();
                ((pivots[r] + 1)..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        for fill in all_vectors::<K>(slots.len(), budget)? {
            let mut rows = vec![vec![K::zero(); n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = K::one();
            }
            for ((r, c), x) in slots.iter().zip(fill) {
                rows[*r][*c] = x;
            }
            out.push(Subspace::span(n, &rows));
        }
    }
    Ok(out)
}

/// Every subspace of `GF(p)^n`, ordered by dimension.
pub fn all_subspaces<K: Scalar>(n: usize, budget: u64) -> Result<Vec<Subspace<K>>> {
    let q = field_elements::<K>()?.len() as u64;
    let total: u64 = (0..=n).map(|k| gaussian_binomial(n, k, q)).fold(0u64, u64::saturating_add);
    if total > budget {
        return Err(Error::BudgetExceeded { budget, needed: total });
    }
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(subspaces_of_dim(n, k, budget)?);
    }
    Ok(out)
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use std::collections::HashSet;

    #[test]
    fn counts_match_gaussian_binomials() {
        type F3 = Fp<3>;
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        let subs = subspaces_of_dim::<F3>(3, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(subs.len(), 13);
        let distinct: HashSet<_> = subs.into_iter().collect();
        assert_eq!(distinct.len(), 13);
        assert_eq!(lines::<F3>(3, DEFAULT_BUDGET).unwrap().len(), 13);
        assert_eq!(all_subspaces::<Fp<2>>(3, DEFAULT_BUDGET).unwrap().len(), 16);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            all_vectors::<Fp<7>>(8, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(all_vectors::<crate::field::Rational>(1, 10).is_err());
    }
}
