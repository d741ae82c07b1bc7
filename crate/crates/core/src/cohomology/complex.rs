//! Finite cochain complexes, their cohomology, and long exact sequences.

use rayon::prelude::*;
use serde::Serialize;

use super::coboundary;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_many, Matrix, Subspace};

/// `C^0 → C^1 → … → C^{top+1}`, with `d[n]: C^n → C^{n+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex<K> {
    pub dims: Vec<usize>,
    pub d: Vec<Matrix<K>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// Cohomology in one degree. The representatives span a complement of the
/// coboundaries inside the cocycles: the cocycles vanishing on the pivot
/// columns of the coboundary space.
#[derive(Clone, Debug)]
pub struct CohomologyResult<K> {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub cocycles: Subspace<K>,
    pub coboundaries: Subspace<K>,
    pub representatives: Subspace<K>,
}

impl<K: Scalar> CohomologyResult<K> {
    pub fn dims(&self) -> DegreeDims {
        DegreeDims { degree: self.degree, dim_z: self.dim_z, dim_b: self.dim_b, dim_h: self.dim_h }
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn class_coords(&self, z: &[K]) -> Option<Vec<K>> {
        if !self.cocycles.contains(z) {
            return None;
        }
        self.representatives.coords(&self.coboundaries.reduce(z))
    }

    pub fn is_coboundary(&self, v: &[K]) -> bool {
        self.coboundaries.contains(v)
    }

    pub fn is_cocycle(&self, v: &[K]) -> bool {
        self.cocycles.contains(v)
    }
}

impl<K: Scalar> CochainComplex<K> {
    pub fn new(d: Vec<Matrix<K>>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::DimensionMismatch("a complex needs at least one differential".into()));
        }
        let mut dims = vec![d[0].cols()];
        for (n, m) in d.iter().enumerate() {
            if m.cols() != dims[n] {
                return Err(Error::DimensionMismatch(format!("differential {n} has the wrong source")));
            }
            dims.push(m.rows());
        }
        Ok(CochainComplex { dims, d })
    }

    /// `CL^•(L, M)` with differentials `d^0 … d^top`.
    pub fn of_bimodule(m: &Bimodule<K>, top: usize) -> Result<Self> {
        let d: Vec<Matrix<K>> = (0..=top).into_par_iter().map(|n| coboundary(m, n)).collect();
        Self::new(d)
    }

    /// Highest degree whose cohomology is defined.
    pub fn top(&self) -> usize {
        self.d.len() - 1
    }

    pub fn is_complex(&self) -> bool {
        self.d.windows(2).all(|w| w[1].checked_mul(&w[0]).map(|p| p.is_zero()).unwrap_or(false))
    }

    pub fn cohomology(&self, n: usize) -> CohomologyResult<K> {
        assert!(n <= self.top(), "degree {n} beyond the stored differentials");
        let cocycles = Subspace::kernel(&self.d[n]);
        let coboundaries = if n == 0 { Subspace::zero(self.dims[0]) } else { Subspace::image(&self.d[n - 1]) };
        let off_pivots = Subspace::coordinate(self.dims[n], &coboundaries.free_columns());
        let representatives = cocycles.intersect(&off_pivots).expect("same ambient");
        let (dim_z, dim_b) = (cocycles.dim(), coboundaries.dim());
        debug_assert_eq!(representatives.dim(), dim_z - dim_b);
        CohomologyResult { degree: n, dim_z, dim_b, dim_h: dim_z - dim_b, cocycles, coboundaries, representatives }
    }

    pub fn cohomology_all(&self) -> Vec<CohomologyResult<K>> {
        (0..=self.top()).into_par_iter().map(|n| self.cohomology(n)).collect()
    }
}

/// Degreewise maps `f^n: X^n → Y^n`.
#[derive(Clone, Debug)]
pub struct ChainMap<K> {
    pub maps: Vec<Matrix<K>>,
}

impl<K: Scalar> ChainMap<K> {
    /// `f^{n+1} d_X^n = d_Y^n f^n` wherever both sides are stored.
    pub fn commutes(&self, x: &CochainComplex<K>, y: &CochainComplex<K>) -> bool {
        let top = x.d.len().min(y.d.len()).min(self.maps.len().saturating_sub(1));
        (0..top).all(|n| {
            let lhs = self.maps[n + 1].checked_mul(&x.d[n]);
            let rhs = y.d[n].checked_mul(&self.maps[n]);
            matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
        })
    }

    /// Induced map `H^n(X) → H^n(Y)` in representative coordinates.
    pub fn induced(&self, n: usize, hx: &CohomologyResult<K>, hy: &CohomologyResult<K>) -> Matrix<K> {
        let cols: Vec<Vec<K>> = hx
            .representatives
            .basis()
            .iter()
            .map(|r| hy.class_coords(&self.maps[n].mul_vec(r)).expect("chain maps send cocycles to cocycles"))
            .collect();
        Matrix::from_columns(hy.dim_h, &cols)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesNode {
    /// `"A"`, `"B"` or `"C"` for the three complexes.
    pub term: &'static str,
    pub degree: usize,
    pub dim: usize,
    pub exact: bool,
}

/// The long exact sequence of `0 → A → B → C → 0`, checked node by node.
#[derive(Clone, Debug)]
pub struct LesReport<K> {
    pub chain_maps: bool,
    /// Injective `i`, surjective `p`, `im i = ker p`, per degree.
    pub levelwise: Vec<bool>,
    pub nodes: Vec<LesNode>,
    pub induced_i: Vec<Matrix<K>>,
    pub induced_p: Vec<Matrix<K>>,
    pub connecting: Vec<Matrix<K>>,
    pub h_a: Vec<DegreeDims>,
    pub h_b: Vec<DegreeDims>,
    pub h_c: Vec<DegreeDims>,
}

impl<K> LesReport<K> {
    pub fn is_exact(&self) -> bool {
        self.chain_maps && self.levelwise.iter().all(|&b| b) && self.nodes.iter().all(|n| n.exact)
    }
}

/// `im(incoming) = ker(outgoing)` inside a space of dimension `dim`.
fn exact_at<K: Scalar>(dim: usize, incoming: &Matrix<K>, outgoing: &Matrix<K>) -> bool {
    debug_assert_eq!(incoming.rows(), dim);
    debug_assert_eq!(outgoing.cols(), dim);
    Subspace::image(incoming) == Subspace::kernel(outgoing)
}

fn levelwise_exact<K: Scalar>(i: &Matrix<K>, p: &Matrix<K>) -> bool {
    let img = Subspace::image(i);
    img.dim() == i.cols() && Subspace::image(p).is_full() && img == Subspace::kernel(p)
}

/// Connecting map `H^n(C) → H^{n+1}(A)`: lift, apply `d_B`, pull back along `i`.
fn connecting<K: Scalar>(
    n: usize,
    b: &CochainComplex<K>,
    i: &ChainMap<K>,
    p: &ChainMap<K>,
    h_c: &CohomologyResult<K>,
    h_a_next: &CohomologyResult<K>,
) -> Result<Matrix<K>> {
    let reps = h_c.representatives.basis();
    let lifts = solve_many(&p.maps[n], reps);
    let mut boundaries = Vec::with_capacity(reps.len());
    for l in lifts {
        let l = l.ok_or_else(|| Error::Precondition("projection is not surjective".into()))?;
        boundaries.push(b.d[n].mul_vec(&l));
    }
    let pulled = solve_many(&i.maps[n + 1], &boundaries);
    let mut cols = Vec::with_capacity(reps.len());
    for a in pulled {
        let a = a.ok_or_else(|| Error::Precondition("boundary of a lift is not in the image of i".into()))?;
        let c = h_a_next
            .class_coords(&a)
            .ok_or_else(|| Error::Precondition("connecting image is not a cocycle".into()))?;
        cols.push(c);
    }
    Ok(Matrix::from_columns(h_a_next.dim_h, &cols))
}

/// Builds and checks the long exact sequence through `H^{n_max}(C)`. The
/// complexes need differentials through degree `n_max + 1`, and the chain
/// maps one degree beyond that.
pub fn long_exact_sequence<K: Scalar>(
    a: &CochainComplex<K>,
    b: &CochainComplex<K>,
    c: &CochainComplex<K>,
    i: &ChainMap<K>,
    p: &ChainMap<K>,
    n_max: usize,
) -> Result<LesReport<K>> {
    for cx in [a, b, c] {
        if cx.top() < n_max + 1 {
            return Err(Error::Precondition(format!("complex stops before degree {}", n_max + 1)));
        }
    }
    if i.maps.len() < n_max + 3 || p.maps.len() < n_max + 3 {
        return Err(Error::Precondition("chain maps stop too early".into()));
    }
    let chain_maps = i.commutes(a, b) && p.commutes(b, c);
    let levelwise: Vec<bool> = (0..=n_max + 1).map(|n| levelwise_exact(&i.maps[n], &p.maps[n])).collect();
    if !chain_maps || !levelwise.iter().all(|&x| x) {
        return Ok(LesReport {
            chain_maps,
            levelwise,
            nodes: Vec::new(),
            induced_i: Vec::new(),
            induced_p: Vec::new(),
            connecting: Vec::new(),
            h_a: Vec::new(),
            h_b: Vec::new(),
            h_c: Vec::new(),
        });
    }
    let ha: Vec<_> = (0..=n_max + 1).map(|n| a.cohomology(n)).collect();
    let hb: Vec<_> = (0..=n_max).map(|n| b.cohomology(n)).collect();
    let hc: Vec<_> = (0..=n_max).map(|n| c.cohomology(n)).collect();
    let induced_i: Vec<_> = (0..=n_max).map(|n| i.induced(n, &ha[n], &hb[n])).collect();
    let induced_p: Vec<_> = (0..=n_max).map(|n| p.induced(n, &hb[n], &hc[n])).collect();
    let conn = (0..=n_max)
        .map(|n| connecting(n, b, i, p, &hc[n], &ha[n + 1]))
        .collect::<Result<Vec<_>>>()?;
    let mut nodes = Vec::new();
    for n in 0..=n_max {
        let into_a = if n == 0 { Matrix::zeros(ha[0].dim_h, 0) } else { conn[n - 1].clone() };
        nodes.push(LesNode { term: "A", degree: n, dim: ha[n].dim_h, exact: exact_at(ha[n].dim_h, &into_a, &induced_i[n]) });
        nodes.push(LesNode {
            term: "B",
            degree: n,
            dim: hb[n].dim_h,
            exact: exact_at(hb[n].dim_h, &induced_i[n], &induced_p[n]),
        });
        nodes.push(LesNode { term: "C", degree: n, dim: hc[n].dim_h, exact: exact_at(hc[n].dim_h, &induced_p[n], &conn[n]) });
    }
    Ok(LesReport {
        chain_maps,
        levelwise,
        nodes,
        induced_i,
        induced_p,
        connecting: conn,
        h_a: ha.iter().map(CohomologyResult::dims).collect(),
        h_b: hb.iter().map(CohomologyResult::dims).collect(),
        h_c: hc.iter().map(CohomologyResult::dims).collect(),
    })
}
