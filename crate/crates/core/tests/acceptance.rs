//! Acceptance gate: one PASS/FAIL line per criterion, with pinned time
//! limits. Reference values come from the worked examples; everything else
//! is checked against the naive modular oracle below, which rebuilds the
//! coboundary, θ and ι straight from their defining formulas with dense
//! `u64` arithmetic and shares no code with the library.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use leibniz_core::cohomology::{
    coboundary, dixmier_sequence, hl_dims, verify_cartan, verify_square_zero, CochainComplex, CohomologyResult,
};
use leibniz_core::fitting::fitting_set;
use leibniz_core::linalg::unit;
use leibniz_core::theorems::{
    check, random_algebra, random_bimodule, random_scalar, structural_identities, sweep_fields, AlgebraClass,
    RandomAlgebraSpec, Status, TheoremId, Verdict,
};
use leibniz_core::{Bimodule, Gf2, Gf3, Gf5, LeibnizAlgebra, Rational, Scalar, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N_LOW: Duration = Duration::from_secs(1);
const N_HIGH: Duration = Duration::from_secs(30);
const TWO_DIM_A: Duration = Duration::from_secs(5);
const ONE_DIM_SUITE: Duration = Duration::from_secs(60);
const HARNESS: Duration = Duration::from_secs(600);

const ONE_DIM_INSTANCES: u64 = 210;
const STRUCTURAL_PAIRS: u64 = 220;
const SWEEP_INSTANCES: usize = 120;
const DIM3_SAMPLES: u64 = 40;

// ---------------------------------------------------------------------------
// Naive oracle over GF(p)

mod oracle {
    pub type Dense = Vec<Vec<u64>>;

    /// Structure constants `c[i][j][k]` and actions `lam[i][r][s]` (row `r`,
    /// column `s`), all reduced mod `p`.
    #[derive(Clone, Debug)]
    pub struct Data {
        pub p: u64,
        pub d: usize,
        pub c: Vec<Vec<Vec<u64>>>,
        pub dm: usize,
        pub lam: Vec<Dense>,
        pub rho: Vec<Dense>,
    }

    pub fn neg(p: u64, x: u64) -> u64 {
        (p - x % p) % p
    }

    fn pow(p: u64, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn zeros(r: usize, c: usize) -> Dense {
        vec![vec![0; c]; r]
    }

    pub fn mul(p: u64, a: &Dense, b: &Dense) -> Dense {
        let cols = b.first().map_or(0, Vec::len);
        let mut out = zeros(a.len(), cols);
        for (i, row) in a.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b[k].iter().enumerate() {
                    if y != 0 {
                        out[i][j] = (out[i][j] + x * y) % p;
                    }
                }
            }
        }
        out
    }

    pub fn add(p: u64, a: &Dense, b: &Dense) -> Dense {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + y) % p).collect()).collect()
    }

    pub fn is_zero(a: &Dense) -> bool {
        a.iter().all(|r| r.iter().all(|&x| x == 0))
    }

    pub fn rank(p: u64, mut a: Dense) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
            a.swap(r, piv);
            let inv = pow(p, a[r][c], p - 2);
            for x in a[r].iter_mut() {
                *x = *x * inv % p;
            }
            for i in 0..rows {
                if i != r && a[i][c] != 0 {
                    let f = a[i][c];
                    for j in 0..cols {
                        a[i][j] = (a[i][j] + neg(p, f * a[r][j] % p)) % p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    pub fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..d).map(move |i| {
                        let mut u = t.clone();
                        u.push(i);
                        u
                    })
                })
                .collect();
        }
        out
    }

    pub fn index(t: &[usize], d: usize) -> usize {
        t.iter().fold(0, |acc, &i| acc * d + i)
    }

    impl Data {
        pub fn cdim(&self, n: usize) -> usize {
            self.d.pow(n as u32) * self.dm
        }

        fn put(&self, m: &mut Dense, row: usize, col: usize, v: u64, sign: bool) {
            let v = if sign { v % self.p } else { neg(self.p, v) };
            m[row][col] = (m[row][col] + v) % self.p;
        }

        /// `d^n`, optionally with the sign of the right-action term flipped.
        pub fn d(&self, n: usize, flip_right: bool) -> Dense {
            let (d, dm) = (self.d, self.dm);
            let mut m = zeros(self.cdim(n + 1), self.cdim(n));
            for x in tuples(d, n + 1) {
                for s in 0..dm {
                    let row = index(&x, d) * dm + s;
                    for j in 0..n {
                        let mut t = x.clone();
                        t.remove(j);
                        for r in 0..dm {
                            self.put(&mut m, row, index(&t, d) * dm + r, self.lam[x[j]][s][r], j % 2 == 0);
                        }
                    }
                    let t = &x[..n];
                    let plus = (n + 1) % 2 == 0;
                    for r in 0..dm {
                        self.put(&mut m, row, index(t, d) * dm + r, self.rho[x[n]][s][r], plus != flip_right);
                    }
                    for i in 0..=n {
                        for j in i + 1..=n {
                            for k in 0..d {
                                let c = self.c[x[i]][x[j]][k];
                                if c == 0 {
                                    continue;
                                }
                                let mut t = x.clone();
                                t[j] = k;
                                t.remove(i);
                                self.put(&mut m, row, index(&t, d) * dm + s, c, (i + 1) % 2 == 0);
                            }
                        }
                    }
                }
            }
            m
        }

        pub fn theta(&self, a: usize, n: usize) -> Dense {
            let (d, dm) = (self.d, self.dm);
            let mut m = zeros(self.cdim(n), self.cdim(n));
            for x in tuples(d, n) {
                let xi = index(&x, d);
                for s in 0..dm {
                    let row = xi * dm + s;
                    for r in 0..dm {
                        self.put(&mut m, row, xi * dm + r, self.lam[a][s][r], true);
                    }
                    for j in 0..n {
                        for k in 0..d {
                            let c = self.c[a][x[j]][k];
                            if c != 0 {
                                let mut t = x.clone();
                                t[j] = k;
                                self.put(&mut m, row, index(&t, d) * dm + s, c, false);
                            }
                        }
                    }
                }
            }
            m
        }

        /// `ι_a: CL^n → CL^{n-1}`.
        pub fn iota(&self, a: usize, n: usize) -> Dense {
            let (d, dm) = (self.d, self.dm);
            let mut m = zeros(self.cdim(n - 1), self.cdim(n));
            for y in tuples(d, n - 1) {
                let mut t = vec![a];
                t.extend(&y);
                for s in 0..dm {
                    m[index(&y, d) * dm + s][index(&t, d) * dm + s] = 1;
                }
            }
            m
        }

        pub fn dims(&self, n_max: usize) -> Vec<usize> {
            let ranks: Vec<usize> = (0..=n_max).map(|n| rank(self.p, self.d(n, false))).collect();
            (0..=n_max).map(|n| self.cdim(n) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }).collect()
        }

        fn mul_basis(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
            let mut out = vec![0; self.d];
            for i in 0..self.d {
                for j in 0..self.d {
                    let f = x[i] * y[j] % self.p;
                    if f == 0 {
                        continue;
                    }
                    for k in 0..self.d {
                        out[k] = (out[k] + f * self.c[i][j][k]) % self.p;
                    }
                }
            }
            out
        }

        fn op(&self, ops: &[Dense], x: &[u64]) -> Dense {
            let mut m = zeros(self.dm, self.dm);
            for (i, &c) in x.iter().enumerate() {
                for r in 0..self.dm {
                    for s in 0..self.dm {
                        m[r][s] = (m[r][s] + c * ops[i][r][s]) % self.p;
                    }
                }
            }
            m
        }

        /// Left Leibniz identity and the three bimodule identities on basis
        /// elements.
        pub fn valid(&self) -> bool {
            let p = self.p;
            let e = |i: usize| -> Vec<u64> { (0..self.d).map(|k| u64::from(k == i)).collect() };
            let sub = |a: &Dense, b: &Dense| add(p, a, &b.iter().map(|r| r.iter().map(|&x| neg(p, x)).collect()).collect());
            for i in 0..self.d {
                for j in 0..self.d {
                    let xy = self.mul_basis(&e(i), &e(j));
                    for k in 0..self.d {
                        let lhs = self.mul_basis(&e(i), &self.mul_basis(&e(j), &e(k)));
                        let a = self.mul_basis(&xy, &e(k));
                        let b = self.mul_basis(&e(j), &self.mul_basis(&e(i), &e(k)));
                        if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (a, b))| *l != (a + b) % p) {
                            return false;
                        }
                    }
                    let (li, lj, ri, rj) = (&self.lam[i], &self.lam[j], &self.rho[i], &self.rho[j]);
                    if self.op(&self.lam, &xy) != sub(&mul(p, li, lj), &mul(p, lj, li)) {
                        return false;
                    }
                    if self.op(&self.rho, &xy) != sub(&mul(p, li, rj), &mul(p, rj, li)) {
                        return false;
                    }
                    let rr = mul(p, rj, ri);
                    let rl = mul(p, rj, li);
                    if !is_zero(&add(p, &rr, &rl)) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

fn residue<K: Scalar>(x: &K) -> u64 {
    x.residue().expect("oracle runs over GF(p)")
}

fn oracle_of<K: Scalar>(m: &Bimodule<K>) -> oracle::Data {
    let a = m.algebra();
    let d = a.dim();
    let c = (0..d).map(|i| (0..d).map(|j| a.basis_product(i, j).iter().map(residue).collect()).collect()).collect();
    let dense = |ms: &[leibniz_core::Matrix<K>]| -> Vec<oracle::Dense> {
        ms.iter().map(|x| x.to_dense().iter().map(|r| r.iter().map(residue).collect()).collect()).collect()
    };
    oracle::Data {
        p: K::field().characteristic(),
        d,
        c,
        dm: m.dim(),
        lam: dense(m.lambda()),
        rho: dense(m.rho()),
    }
}

fn core_matches_oracle<K: Scalar>(m: &Bimodule<K>, o: &oracle::Data, n: usize) -> bool {
    let ours = coboundary(m, n).to_dense();
    let theirs = o.d(n, false);
    ours.len() == theirs.len()
        && ours.iter().zip(&theirs).all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| residue(x) == *y))
}

// ---------------------------------------------------------------------------
// Runner

struct Gate {
    failures: usize,
}

impl Gate {
    fn run(&mut self, n: u32, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let slow = limit.is_some_and(|l| took > l);
        let timing = match limit {
            Some(l) => format!("{:.2} s, limit {} s", took.as_secs_f64(), l.as_secs()),
            None => format!("{:.2} s", took.as_secs_f64()),
        };
        let (ok, detail) = match res {
            Ok(d) if !slow => (true, d),
            Ok(d) => (false, format!("too slow; {d}")),
            Err(e) => (false, e),
        };
        if !ok {
            self.failures += 1;
        }
        println!("{} criterion {n:>2} {title} [{timing}]: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn n_trivial<K: Scalar>() -> Bimodule<K> {
    Bimodule::trivial(Arc::new(LeibnizAlgebra::example_n()), 1)
}

fn c1_low() -> Result<String, String> {
    let q = hl_dims(&n_trivial::<Rational>(), 3).map_err(|e| e.to_string())?;
    let p = hl_dims(&n_trivial::<Gf5>(), 3).map_err(|e| e.to_string())?;
    ensure(q == vec![1; 4] && p == vec![1; 4], || format!("Q {q:?}, GF(5) {p:?}"))?;
    Ok(format!("dim HL^n(N, F) = {q:?} over Q and GF(5), n = 0..3"))
}

fn c1_high() -> Result<String, String> {
    let q = hl_dims(&n_trivial::<Rational>(), 6).map_err(|e| e.to_string())?;
    let p = hl_dims(&n_trivial::<Gf5>(), 6).map_err(|e| e.to_string())?;
    let o = oracle_of(&n_trivial::<Gf5>()).dims(6);
    ensure(q == vec![1; 7] && p == q && o == q, || format!("Q {q:?}, GF(5) {p:?}, oracle {o:?}"))?;
    Ok("n = 4..6 also 1 over Q and GF(5); naive oracle agrees".into())
}

fn same_classes<K: Scalar>(h: &CohomologyResult<K>, target: &[K]) -> bool {
    let amb = h.cocycles.ambient_dim();
    h.is_cocycle(target)
        && h.representatives.sum(&h.coboundaries).unwrap() == Subspace::span(amb, &[target.to_vec()]).sum(&h.coboundaries).unwrap()
}

fn c2_for<K: Scalar>() -> Result<(), String> {
    let cx = CochainComplex::of_bimodule(&n_trivial::<K>(), 3).map_err(|e| e.to_string())?;
    // e = 0, f = 1
    for t in [vec![1], vec![1, 0], vec![1, 0, 1]] {
        let h = cx.cohomology(t.len());
        let v: Vec<K> = unit(2usize.pow(t.len() as u32), oracle::index(&t, 2));
        ensure(h.dim_h == 1 && same_classes(&h, &v), || format!("degree {} over {}", t.len(), K::field()))?;
    }
    Ok(())
}

fn c2() -> Result<String, String> {
    c2_for::<Rational>()?;
    c2_for::<Gf5>()?;
    // the oracle: each cochain is a cocycle outside the coboundaries
    let o = oracle_of(&n_trivial::<Gf5>());
    for t in [vec![1], vec![1, 0], vec![1, 0, 1]] {
        let n = t.len();
        let mut v = vec![0u64; o.cdim(n)];
        v[oracle::index(&t, 2)] = 1;
        let dv = oracle::mul(5, &o.d(n, false), &v.iter().map(|&x| vec![x]).collect());
        ensure(oracle::is_zero(&dv), || format!("oracle: degree {n} cochain is not a cocycle"))?;
        let b = o.d(n - 1, false);
        let with: oracle::Dense = b.iter().zip(&v).map(|(r, &x)| r.iter().copied().chain([x]).collect()).collect();
        ensure(oracle::rank(5, with) > oracle::rank(5, b), || format!("oracle: degree {n} cochain is a coboundary"))?;
    }
    let (dd, dims) = sign_mutant();
    ensure(dd, || format!("sign mutant not detected, dims {dims:?}"))?;
    Ok(format!(
        "HL^1..3 = classes of f*, f*⊗e*, f*⊗e*⊗f* over Q and GF(5); right-action sign mutant breaks d∘d \
         on the two-dimensional Lie adjoint (mutant dims {dims:?})"
    ))
}

/// Flipping the sign of the right-action term gives the differential of
/// `(λ, -ρ)`, which is a bimodule only when `ρ_y λ_x = 0 = ρ_y ρ_x`. On `N_ad`
/// that holds, so the check runs on the adjoint of `x y = y = -y x`.
fn sign_mutant() -> (bool, Vec<i64>) {
    let a = LeibnizAlgebra::<Gf5>::from_int_products(2, &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]).unwrap();
    let g = oracle_of(&Bimodule::adjoint(Arc::new(a)));
    let broken = (0..3).any(|n| !oracle::is_zero(&oracle::mul(5, &g.d(n + 1, true), &g.d(n, true))));
    let r: Vec<usize> = (0..=2).map(|n| oracle::rank(5, g.d(n, true))).collect();
    let dims = (0..=2).map(|n| g.cdim(n) as i64 - r[n] as i64 - if n == 0 { 0 } else { r[n - 1] as i64 }).collect();
    (broken, dims)
}

fn c3() -> Result<String, String> {
    let ad = Bimodule::<Rational>::adjoint(Arc::new(LeibnizAlgebra::example_n()));
    let dims = hl_dims(&ad, 5).map_err(|e| e.to_string())?;
    ensure(dims[..3] == [1, 1, 1], || format!("dims {dims:?}"))?;
    let o = oracle_of(&Bimodule::<Gf5>::adjoint(Arc::new(LeibnizAlgebra::example_n()))).dims(5);
    Ok(format!(
        "dim HL^0..2(N, N_ad) = 1; conjecture data n = 3..5: Q {:?}, GF(5) oracle {:?}",
        &dims[3..],
        &o[3..]
    ))
}

fn c4() -> Result<String, String> {
    let a = Arc::new(LeibnizAlgebra::<Rational>::example_a());
    let triv = hl_dims(&Bimodule::trivial(a.clone(), 1), 5).map_err(|e| e.to_string())?;
    ensure(triv == vec![1; 6], || format!("trivial dims {triv:?}"))?;
    let ad = Bimodule::adjoint(a.clone());
    let cx = CochainComplex::of_bimodule(&ad, 2).map_err(|e| e.to_string())?;
    let h: Vec<_> = (0..=2).map(|n| cx.cohomology(n)).collect();
    ensure(h[1].dim_h == 0 && h[2].dim_h == 0, || "HL^1 or HL^2 of the adjoint is nonzero".into())?;
    // basis (e, h)
    ensure(h[0].cocycles == Subspace::coordinate(2, &[0]), || "HL^0 is not span{e}".into())?;
    Ok("dim HL^n(A, F) = 1 for n ≤ 5; HL^1 = HL^2 = 0 and HL^0 = span{e} for A_ad".into())
}

fn c5() -> Result<String, String> {
    let m = Bimodule::<Rational>::example_a();
    let e12 = Subspace::coordinate(3, &[0, 1]);
    ensure(m.invariants() == e12, || "M^L ≠ span{e1, e2}".into())?;
    ensure(m.antisymmetric_kernel() == e12, || "M_0 ≠ span{e1, e2}".into())?;
    let e1 = Subspace::coordinate(3, &[0]);
    ensure(m.trivial_part() == e1, || "largest trivial sub-bimodule ≠ span{e1}".into())?;
    let sub = m.sub_bimodule(&e1).map_err(|e| e.to_string())?;
    ensure(sub.is_trivial(), || "span{e1} does not carry the trivial action".into())?;
    let dims = hl_dims(&m, 5).map_err(|e| e.to_string())?;
    ensure(dims[1..] == [0; 5], || format!("complex dims {dims:?}"))?;
    // closed forms from ranks, through the oracle over GF(5)
    let g = oracle_of(&Bimodule::<Gf5>::example_a());
    let closed = closed_forms(&g, 5);
    ensure(closed[1..] == [0; 5] && g.dims(5) == closed, || format!("closed forms {closed:?}"))?;
    Ok(format!("M^L = M_0 = span{{e1, e2}}, trivial span{{e1}}, dims {dims:?} by complex and closed forms"))
}

fn c6() -> Result<String, String> {
    let m = Bimodule::<Rational>::example_b();
    let fp = fitting_set(&m, &[unit(2, 0), unit(2, 1)]).map_err(|e| e.to_string())?;
    ensure(fp.zero_part.is_zero() && fp.one_part.is_full(), || "wrong Fitting components".into())?;
    // oracle: M_0(S) = ∩ Ker s^dim, M_1(S) = Σ Im s^dim
    let g = oracle_of(&Bimodule::<Gf5>::example_b());
    let sq: Vec<oracle::Dense> = g.lam.iter().map(|l| oracle::mul(5, l, l)).collect();
    let stacked: oracle::Dense = sq.iter().flatten().cloned().collect();
    let zero = 2 - oracle::rank(5, stacked);
    let cols: oracle::Dense = (0..2).map(|r| sq.iter().flat_map(|s| s[r].clone()).collect()).collect();
    let one = oracle::rank(5, cols);
    ensure(zero == 0 && one == 2, || format!("oracle dims {zero}, {one}"))?;
    Ok("M_0(S) = 0 and M_1(S) = M for S = {E, I}".into())
}

/// `dim HL^n` of a bimodule over `F e` from the ranks of `ρ` and `λ + ρ`.
fn closed_forms(g: &oracle::Data, n_max: usize) -> Vec<usize> {
    let p = g.p;
    let rho = oracle::rank(p, g.rho[0].clone());
    let sum = oracle::rank(p, oracle::add(p, &g.lam[0], &g.rho[0]));
    let inv = g.dm - rho;
    let upper0 = g.dm - sum;
    (0..=n_max)
        .map(|n| match n {
            0 => inv,
            n if n % 2 == 1 => upper0 - rho,
            _ => inv - sum,
        })
        .collect()
}

fn one_dim_case<K: Scalar>(seed: u64, kinds: &mut [usize; 3]) -> Result<(), String> {
    let a = Arc::new(LeibnizAlgebra::<K>::one_dim_lie());
    let dim = 1 + (seed % 4) as usize;
    let m = random_bimodule(a, dim, seed).map_err(|e| e.to_string())?;
    let g = oracle_of(&m);
    ensure(g.valid(), || format!("seed {seed}: generated bimodule fails the identities"))?;
    kinds[if m.is_symmetric() { 0 } else if m.is_antisymmetric() { 1 } else { 2 }] += 1;
    let dims = hl_dims(&m, 5).map_err(|e| e.to_string())?;
    let closed = closed_forms(&g, 5);
    ensure(dims == closed && g.dims(5) == dims, || format!("seed {seed} over {}: {dims:?} vs {closed:?}", K::field()))?;
    // inclusions M L ⊆ M^0 and M_0 ⊆ M^L, so both quotients make sense
    let (p, lam, rho) = (g.p, &g.lam[0], &g.rho[0]);
    let s = oracle::add(p, lam, rho);
    ensure(oracle::is_zero(&oracle::mul(p, rho, &s)) && oracle::is_zero(&oracle::mul(p, &s, rho)), || {
        format!("seed {seed}: inclusions fail")
    })?;
    ensure(closed[1] == closed[2], || format!("seed {seed}: dim M^0/ML ≠ dim M^L/M_0"))?;
    Ok(())
}

fn c7() -> Result<String, String> {
    let mut kinds = [0usize; 3];
    for seed in 0..ONE_DIM_INSTANCES {
        match seed % 3 {
            0 => one_dim_case::<Gf2>(seed, &mut kinds)?,
            1 => one_dim_case::<Gf3>(seed, &mut kinds)?,
            _ => one_dim_case::<Gf5>(seed, &mut kinds)?,
        }
    }
    Ok(format!(
        "{ONE_DIM_INSTANCES} bimodules over GF(2), GF(3), GF(5), dim ≤ 4: complex = closed forms for n ≤ 5 \
         (symmetric {}, antisymmetric {}, other {})",
        kinds[0], kinds[1], kinds[2]
    ))
}

fn structural_pair<K: Scalar>(seed: u64) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RandomAlgebraSpec { dim: rng.gen_range(1..=3), class: AlgebraClass::Any, seed };
    let Ok(a) = random_algebra::<K>(spec) else { return Ok(false) };
    let a = Arc::new(a);
    let dm = rng.gen_range(1..=3);
    let Ok(m) = random_bimodule(a.clone(), dm, seed) else { return Ok(false) };
    let g = oracle_of(&m);
    ensure(g.valid(), || format!("seed {seed}: pair fails the identities"))?;
    let p = g.p;
    let n_max = 4;
    let d: Vec<oracle::Dense> = (0..=n_max + 1).map(|n| g.d(n, false)).collect();
    for n in 0..=n_max {
        ensure(core_matches_oracle(&m, &g, n), || format!("seed {seed}: d^{n} differs from the oracle"))?;
        ensure(oracle::is_zero(&oracle::mul(p, &d[n + 1], &d[n])), || format!("seed {seed}: d∘d ≠ 0 at {n}"))?;
    }
    ensure(verify_square_zero(&m, n_max).is_ok(), || format!("seed {seed}: library d∘d"))?;
    let x: Vec<K> = (0..a.dim()).map(|_| random_scalar(&mut rng)).collect();
    ensure(verify_cartan(&m, &x, n_max).is_ok(), || format!("seed {seed}: library Cartan identities"))?;
    for b in 0..g.d {
        for n in 0..=n_max {
            let th = g.theta(b, n);
            let th1 = g.theta(b, n + 1);
            ensure(oracle::mul(p, &th1, &d[n]) == oracle::mul(p, &d[n], &th), || format!("seed {seed}: θd ≠ dθ"))?;
            if n >= 1 {
                let lhs = oracle::add(p, &oracle::mul(p, &d[n - 1], &g.iota(b, n)), &oracle::mul(p, &g.iota(b, n + 1), &d[n]));
                ensure(lhs == th, || format!("seed {seed}: dι + ιd ≠ θ in degree {n}"))?;
            }
        }
    }
    Ok(true)
}

fn c8() -> Result<String, String> {
    let mut done = 0;
    for seed in 0..STRUCTURAL_PAIRS {
        let ok = match seed % 3 {
            0 => structural_pair::<Gf2>(seed)?,
            1 => structural_pair::<Gf3>(seed)?,
            _ => structural_pair::<Gf5>(seed)?,
        };
        done += usize::from(ok);
    }
    ensure(done >= 200, || format!("only {done} pairs generated"))?;
    let lib = structural_identities::<Gf3>(200, 8, 4).map_err(|e| e.to_string())?;
    ensure(lib.clean() && lib.instances >= 200, || format!("{lib:?}"))?;
    Ok(format!(
        "{done} random pairs, dims ≤ 3, n ≤ 4: d∘d = 0, dι + ιd = θ, θd = dθ exactly, library d^n = oracle d^n; \
         library suite clean on {}",
        lib.instances
    ))
}

fn c9() -> Result<String, String> {
    use TheoremId::*;
    let ids = [
        Vannilp, Dixmier, Vanhh, Fittinghh, Cohfitting, Van, Vansupsolv, Vansolv, Nonvannilp, Nonvantriv, Adj, Adjlie,
        Nontriv, Non1dim, Inv, Sym, Triv, Fitting0, Fitting1, Fitting, Identities,
    ];
    let mut lines = Vec::new();
    let mut bad = Vec::new();
    for (k, id) in ids.iter().enumerate() {
        let s = sweep_fields(*id, SWEEP_INSTANCES, 1000 + k as u64, 3).map_err(|e| e.to_string())?;
        let generated = s.instances - s.generation_failures;
        if s.fail > 0 || generated < 100 {
            bad.push(format!("{id}: fail {} generated {generated} {:?}", s.fail, s.failures.first()));
        }
        lines.push(format!("{id} {}/{}/{}", s.pass, s.vacuously_true, s.not_applicable));
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("0 Fail, {SWEEP_INSTANCES} instances each (pass/vacuous/n.a.): {}", lines.join(", ")))
}

fn c10() -> Result<String, String> {
    let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
    let a = Arc::new(LeibnizAlgebra::<Rational>::example_a());
    let cases = [
        ("(N, F)", Bimodule::trivial(n.clone(), 1), unit(2, 1)),
        ("(N, N_ad)", Bimodule::adjoint(n), unit(2, 1)),
        ("(A, F)", Bimodule::trivial(a, 1), unit(2, 1)),
    ];
    let mut out = Vec::new();
    for (name, m, x) in cases {
        let ideal = Subspace::coordinate(2, &[0]);
        let r = dixmier_sequence(&m, &ideal, &x, 3).map_err(|e| e.to_string())?;
        ensure(r.les.levelwise.iter().all(|&b| b) && r.les.chain_maps, || format!("{name}: short sequence not exact"))?;
        ensure(r.phi_iso && r.anticommutation.iter().all(|&b| b), || format!("{name}: φ"))?;
        ensure(r.connecting_vs_theta.iter().all(|&b| b), || format!("{name}: φ∘∂ ≠ res∘θ_x"))?;
        ensure(r.les.is_exact() && r.res_chain_map, || format!("{name}: long sequence not exact"))?;
        out.push(format!("{name} HL(I) {:?}", r.ideal_dims));
    }
    Ok(format!("I = span{{e}}, n ≤ 3, all identities exact: {}", out.join(", ")))
}

/// Subspaces of `GF(p)^d` as sorted element lists, by brute force.
fn oracle_frattini(g: &oracle::Data) -> BTreeSet<Vec<u64>> {
    let (p, d) = (g.p, g.d);
    let all: Vec<Vec<u64>> = oracle::tuples(p as usize, d).into_iter().map(|t| t.iter().map(|&x| x as u64).collect()).collect();
    let span = |gens: &[&Vec<u64>]| -> BTreeSet<Vec<u64>> {
        oracle::tuples(p as usize, gens.len())
            .into_iter()
            .map(|cs| {
                (0..d).map(|k| gens.iter().zip(&cs).map(|(v, &c)| v[k] * c as u64).sum::<u64>() % p).collect()
            })
            .collect()
    };
    let mut subs: BTreeSet<BTreeSet<Vec<u64>>> = BTreeSet::new();
    for u in &all {
        for v in &all {
            for w in &all {
                subs.insert(span(&[u, v, w][..d.min(3)]));
            }
        }
    }
    let prod = |x: &[u64], y: &[u64]| -> Vec<u64> {
        let mut out = vec![0; d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out[k] = (out[k] + x[i] * y[j] % p * g.c[i][j][k]) % p;
                }
            }
        }
        out
    };
    let full: BTreeSet<Vec<u64>> = all.iter().cloned().collect();
    let proper: Vec<&BTreeSet<Vec<u64>>> = subs
        .iter()
        .filter(|s| s.len() < full.len() && s.iter().all(|x| s.iter().all(|y| s.contains(&prod(x, y)))))
        .collect();
    let maximal: Vec<&&BTreeSet<Vec<u64>>> =
        proper.iter().filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t))).collect();
    if maximal.is_empty() {
        return [vec![0; d]].into_iter().collect();
    }
    maximal.iter().fold(full, |acc, s| acc.intersection(s).cloned().collect())
}

#[derive(Default)]
struct SectionFive {
    algebras: usize,
    solvable: usize,
    verdicts: [usize; 4],
    caveats: usize,
}

fn section_five_instance<K: Scalar>(a: LeibnizAlgebra<K>, acc: &mut SectionFive) -> Result<(), String> {
    acc.algebras += 1;
    let g = oracle_of(&Bimodule::trivial(Arc::new(a.clone()), 1));
    let ours = a.frattini(1_000_000).map_err(|e| e.to_string())?;
    let theirs = oracle_frattini(&g);
    let size = (g.p as usize).pow(ours.dim() as u32);
    ensure(size == theirs.len() && theirs.iter().all(|v| ours.contains(&v.iter().map(|&x| K::from_i64(x as i64)).collect::<Vec<_>>())), || {
        format!("Frattini mismatch on {:?}", a.structure_constants())
    })?;
    if !a.is_solvable() {
        return Ok(());
    }
    acc.solvable += 1;
    let a = Arc::new(a);
    for id in [TheoremId::Frattini, TheoremId::Max, TheoremId::Maxchain] {
        let r = check(id, &a, None, 2).map_err(|e| e.to_string())?;
        ensure(r.verdict != Verdict::Fail, || format!("{id} fails on {:?}", a.structure_constants()))?;
        acc.verdicts[r.verdict as usize] += 1;
        acc.caveats += usize::from(r.hypotheses.iter().any(|h| matches!(h.status, Status::Caveat(_))));
    }
    Ok(())
}

fn exhaust<K: Scalar>(dim: usize, acc: &mut SectionFive) -> Result<(), String> {
    let p = K::field().characteristic() as usize;
    let entries = dim * dim * dim;
    for code in 0..p.pow(entries as u32) {
        let mut c = vec![vec![vec![K::zero(); dim]; dim]; dim];
        let mut rest = code;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c[i][j][k] = K::from_i64((rest % p) as i64);
                    rest /= p;
                }
            }
        }
        if let Ok(a) = LeibnizAlgebra::new(dim, c) {
            section_five_instance(a, acc)?;
        }
    }
    Ok(())
}

fn sample_dim3<K: Scalar>(acc: &mut SectionFive) -> Result<(), String> {
    for seed in 0..DIM3_SAMPLES {
        if let Ok(a) = random_algebra::<K>(RandomAlgebraSpec { dim: 3, class: AlgebraClass::Solvable, seed }) {
            section_five_instance(a, acc)?;
        }
    }
    Ok(())
}

/// `h e = e = -e h` over GF(3) with basis `(h, e)`: every complement of
/// `A = span{e}` is `exp(L_a)(span{h})` for some `a ∈ A`.
fn split_witness() -> Result<String, String> {
    let a = Arc::new(LeibnizAlgebra::<Gf3>::from_int_products(2, &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]).unwrap());
    let r = check(TheoremId::Splitsolv, &a, None, 2).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Pass, || format!("splitsolv verdict {:?}", r.verdict))?;
    // complements are span{h + t e}; L_{s e} sends h to -s e and squares to
    // zero, so exp(L_{s e})(h) = h - s e
    let mut witnesses = 0;
    for t in 0..3i64 {
        let k = Subspace::<Gf3>::span(2, &[vec![Gf3::from_i64(1), Gf3::from_i64(t)]]);
        ensure(a.is_subalgebra(&k), || "complement is not a subalgebra".into())?;
        let s = (3 - t) % 3;
        let x = vec![Gf3::from_i64(0), Gf3::from_i64(s)];
        let lx = a.left_mult(&x);
        ensure(lx.checked_mul(&lx).unwrap().is_zero(), || "L_a not square zero".into())?;
        let exp = leibniz_core::Matrix::identity(2).checked_add(&lx).unwrap();
        let image = Subspace::coordinate(2, &[0]).image_under(&exp);
        ensure(image == k, || format!("no witness for t = {t}"))?;
        witnesses += 1;
    }
    Ok(format!("{witnesses} complements conjugate to span{{h}} by exp(L_a), a ∈ A"))
}

fn c11() -> Result<String, String> {
    let mut acc = SectionFive::default();
    for dim in 1..=2 {
        exhaust::<Gf2>(dim, &mut acc)?;
        exhaust::<Gf3>(dim, &mut acc)?;
    }
    sample_dim3::<Gf2>(&mut acc)?;
    sample_dim3::<Gf3>(&mut acc)?;
    let w = split_witness()?;
    let [pass, _, vac, na] = acc.verdicts;
    Ok(format!(
        "Frattini by exhaustion on {} algebras (every valid table of dim ≤ 2 over GF(2), GF(3), plus solvable dim 3 from {} seeds); \
         frattini/max/maxchain on {} solvable: pass {pass}, vacuous {vac}, n.a. {na}, caveat recorded {}; {w}",
        acc.algebras,
        2 * DIM3_SAMPLES,
        acc.solvable,
        acc.caveats
    ))
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };
    gate.run(1, "N with trivial coefficients, n ≤ 3", Some(N_LOW), c1_low);
    gate.run(1, "N with trivial coefficients, n = 4..6", Some(N_HIGH), c1_high);
    gate.run(2, "N cocycle representatives", None, c2);
    gate.run(3, "N adjoint", None, c3);
    gate.run(4, "two-dimensional A with trivial and adjoint coefficients", Some(TWO_DIM_A), c4);
    gate.run(5, "Jordan block over F e", None, c5);
    gate.run(6, "Fitting components for S = {E, I}", None, c6);
    gate.run(7, "one-dimensional Lie algebra closed forms", Some(ONE_DIM_SUITE), c7);
    gate.run(8, "structural identities", None, c8);
    gate.run(9, "theorem harness sweeps", Some(HARNESS), c9);
    gate.run(10, "Dixmier sequence", None, c10);
    gate.run(11, "Frattini and splitting at desk scale", None, c11);
    if gate.failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criterion line(s) failed", gate.failures);
        ExitCode::FAILURE
    }
}
