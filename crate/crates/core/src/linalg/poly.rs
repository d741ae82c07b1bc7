//! Dense univariate polynomials, constant term first.

use crate::field::Scalar;
use crate::linalg::matrix::Matrix;

pub fn trim<K: Scalar>(p: &mut Vec<K>) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

pub fn degree<K: Scalar>(p: &[K]) -> Option<usize> {
    p.iter().rposition(|x| !x.is_zero())
}

pub fn eval<K: Scalar>(p: &[K], x: &K) -> K {
    p.iter().rev().fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
}

pub fn mul<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![K::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

pub fn sub<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let n = a.len().max(b.len());
    let mut out: Vec<K> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(K::zero);
            let y = b.get(i).cloned().unwrap_or_else(K::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<K: Scalar>(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("nonzero lead");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![K::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone() * lead_inv.clone();
        let shift = dr - db;
        for (i, y) in b.iter().enumerate().take(db + 1) {
            r[i + shift] = r[i + shift].clone() - c.clone() * y.clone();
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn monic<K: Scalar>(p: &[K]) -> Vec<K> {
    let mut p = p.to_vec();
    trim(&mut p);
    if let Some(l) = p.last().cloned() {
        let inv = l.inv().expect("nonzero");
        for c in p.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
    p
}

pub fn gcd<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

fn mulmod<K: Scalar>(a: &[K], b: &[K], m: &[K]) -> Vec<K> {
    divrem(&mul(a, b), m).1
}

pub fn powmod<K: Scalar>(base: &[K], mut e: u64, m: &[K]) -> Vec<K> {
    let mut acc = divrem(&[K::one()], m).1;
    let mut b = divrem(base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m);
        }
        b = mulmod(&b, &b, m);
        e >>= 1;
    }
    acc
}

/// Distinct roots in GF(p) of `f` for an odd prime `p`: the linear part
/// `gcd(f, x^p - x)` is split by deterministic equal-degree splitting with
/// shifts `x + a`, `a = 0, 1, ...`.
pub fn split_roots_mod_p<K: Scalar>(f: &[K], p: u64) -> Vec<K> {
    let f = monic(f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let x = vec![K::zero(), K::one()];
    let xp = powmod(&x, p, &f);
    let g = gcd(&f, &sub(&xp, &x));
    let mut out = Vec::new();
    split_linear(&g, p, 0, &mut out);
    out
}

fn split_linear<K: Scalar>(g: &[K], p: u64, mut shift: i64, out: &mut Vec<K>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(-(g[0].clone() * g[1].inv().expect("nonzero"))),
        Some(d) => loop {
            let base = vec![K::from_i64(shift), K::one()];
            let h = powmod(&base, (p - 1) / 2, g);
            let h = gcd(g, &sub(&h, &[K::one()]));
            shift += 1;
            let dh = degree(&h).unwrap_or(0);
            if dh > 0 && dh < d {
                let (q, _) = divrem(g, &h);
                split_linear(&h, p, shift, out);
                split_linear(&monic(&q), p, shift, out);
                return;
            }
        },
    }
}

/// Characteristic polynomial `det(x I - A)` via reduction to upper
/// Hessenberg form; valid in every characteristic.
pub fn charpoly<K: Scalar>(a: &Matrix<K>) -> Vec<K> {
    assert!(a.is_square());
    let n = a.rows();
    let mut h = a.to_dense();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let piv_inv = h[m][m - 1].inv().expect("nonzero");
        for i in m + 1..n {
            let u = h[i][m - 1].clone() * piv_inv.clone();
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let t = h[m][j].clone();
                h[i][j] = h[i][j].clone() - u.clone() * t;
            }
            for row in h.iter_mut() {
                let t = row[i].clone();
                row[m] = row[m].clone() + u.clone() * t;
            }
        }
    }
    let mut polys: Vec<Vec<K>> = vec![vec![K::one()]];
    for k in 1..=n {
        let mut pk = mul(&[-h[k - 1][k - 1].clone(), K::one()], &polys[k - 1]);
        let mut t = K::one();
        for i in 1..k {
            t = t * h[k - i][k - i - 1].clone();
            let c = t.clone() * h[k - i - 1][k - 1].clone();
            if !c.is_zero() {
                let scaled: Vec<K> = polys[k - i - 1].iter().map(|x| x.clone() * c.clone()).collect();
                pk = sub(&pk, &scaled);
            }
        }
        polys.push(pk);
    }
    let mut p = polys.pop().unwrap();
    p.resize(n + 1, K::zero());
    p
}

/// `p(A)` by Horner's rule.
pub fn eval_matrix<K: Scalar>(p: &[K], a: &Matrix<K>) -> Matrix<K> {
    let n = a.rows();
    p.iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
        acc.checked_mul(a)
            .expect("square")
            .checked_add(&Matrix::scalar(n, c.clone()))
            .expect("square")
    })
}
