//! Fitting components of operators and of bimodules.

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};

/// `V_0` (stabilized kernel) and `V_1` (stabilized image).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingPair<K> {
    pub zero_part: Subspace<K>,
    pub one_part: Subspace<K>,
}

/// Powers of `t` until kernel and image stop changing; returns the
/// stabilization index together with the stable kernel and image.
fn stabilize<K: Scalar>(t: &Matrix<K>) -> (usize, Subspace<K>, Subspace<K>) {
    let n = t.rows();
    let mut power = t.clone();
    let mut ker = Subspace::kernel(&power);
    let mut img = Subspace::image(&power);
    let mut r = 1;
    while r <= n {
        let next = power.checked_mul(t).expect("square");
        let (k2, i2) = (Subspace::kernel(&next), Subspace::image(&next));
        if k2 == ker && i2 == img {
            break;
        }
        power = next;
        ker = k2;
        img = i2;
        r += 1;
    }
    (r, ker, img)
}

/// Fitting's lemma for one operator: `t` is nilpotent on the zero part and
/// invertible on the one part.
pub fn fitting_operator<K: Scalar>(t: &Matrix<K>) -> FittingPair<K> {
    assert!(t.is_square());
    if t.rows() == 0 {
        return FittingPair { zero_part: Subspace::zero(0), one_part: Subspace::zero(0) };
    }
    let (_, zero_part, one_part) = stabilize(t);
    debug_assert_eq!(zero_part.dim() + one_part.dim(), t.rows());
    FittingPair { zero_part, one_part }
}

/// `M_0(S) = ∩ M_0(λ_s)`, `M_1(S) = Σ M_1(λ_s)` over the given elements.
/// Every `L_s` has to be nilpotent.
pub fn fitting_set<K: Scalar>(m: &Bimodule<K>, s: &[Vec<K>]) -> Result<FittingPair<K>> {
    let a = m.algebra();
    for (i, x) in s.iter().enumerate() {
        if x.len() != a.dim() {
            return Err(Error::DimensionMismatch("element of a different algebra".into()));
        }
        if !a.left_mult(x).is_nilpotent() {
            return Err(Error::NotNilpotent(i));
        }
    }
    let mut zero_part = Subspace::full(m.dim());
    let mut one_part = Subspace::zero(m.dim());
    for x in s {
        let p = fitting_operator(&m.lambda_of(x));
        zero_part = zero_part.intersect(&p.zero_part)?;
        one_part = one_part.sum(&p.one_part)?;
    }
    Ok(FittingPair { zero_part, one_part })
}

/// The four claims of the Fitting lemma for bimodules, evaluated on one
/// instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FittingClaims {
    pub zero_part_is_sub_bimodule: bool,
    pub left_nilpotent_on_zero_part: bool,
    pub right_nilpotent_on_zero_part: bool,
    pub one_part_is_sub_bimodule: bool,
    pub direct_sum: bool,
}

impl FittingClaims {
    pub fn all(&self) -> bool {
        self.zero_part_is_sub_bimodule
            && self.left_nilpotent_on_zero_part
            && self.right_nilpotent_on_zero_part
            && self.one_part_is_sub_bimodule
            && self.direct_sum
    }
}

pub fn fitting_claims<K: Scalar>(m: &Bimodule<K>, s: &[Vec<K>]) -> Result<(FittingPair<K>, FittingClaims)> {
    let pair = fitting_set(m, s)?;
    let zero_is_sub = m.is_sub_bimodule(&pair.zero_part);
    let (mut left_nil, mut right_nil) = (true, true);
    if zero_is_sub {
        for x in s {
            left_nil &= pair.zero_part.restrict(&m.lambda_of(x))?.is_nilpotent();
            right_nil &= pair.zero_part.restrict(&m.rho_of(x))?.is_nilpotent();
        }
    } else {
        left_nil = false;
        right_nil = false;
    }
    let sum = pair.zero_part.sum(&pair.one_part)?;
    let direct_sum = sum.is_full() && pair.zero_part.dim() + pair.one_part.dim() == m.dim();
    let claims = FittingClaims {
        zero_part_is_sub_bimodule: zero_is_sub,
        left_nilpotent_on_zero_part: left_nil,
        right_nilpotent_on_zero_part: right_nil,
        one_part_is_sub_bimodule: m.is_sub_bimodule(&pair.one_part),
        direct_sum,
    };
    Ok((pair, claims))
}

/// Which of the four expansion identities failed, and for which basis `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub y: usize,
}

pub const LAMBDA_POWER_LAMBDA: &str = "λ_x^n λ_y = Σ C(n,k) λ_{L_x^k y} λ_x^{n-k}";
pub const LAMBDA_POWER_RHO: &str = "λ_x^n ρ_y = Σ C(n,k) ρ_{L_x^k y} λ_x^{n-k}";
pub const LAMBDA_TIMES_POWER: &str = "λ_y λ_x^n = Σ (-1)^{n-k} C(n,k) λ_x^k λ_{L_x^{n-k} y}";
pub const RHO_TIMES_POWER: &str = "ρ_y λ_x^n = Σ (-1)^{n-k} C(n,k) λ_x^k ρ_{L_x^{n-k} y}";

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Checks the four operator identities expanding powers of `λ_x` against
/// `λ_y` and `ρ_y`, for every basis vector `y`, as exact matrix equalities.
pub fn verify_nilpotency_identities<K: Scalar>(
    m: &Bimodule<K>,
    x: &[K],
    n: usize,
) -> std::result::Result<(), IdentityFailure> {
    let a = m.algebra();
    let d = m.dim();
    let lx = m.lambda_of(x);
    let big_l = a.left_mult(x);
    let mut lx_pow = vec![Matrix::identity(d)];
    for k in 1..=n {
        lx_pow.push(lx_pow[k - 1].checked_mul(&lx).expect("square"));
    }
    let mut l_pow = vec![Matrix::identity(a.dim())];
    for k in 1..=n {
        l_pow.push(l_pow[k - 1].checked_mul(&big_l).expect("square"));
    }
    let mul = |p: &Matrix<K>, q: &Matrix<K>| p.checked_mul(q).expect("square");
    for y in 0..a.dim() {
        let ey = crate::linalg::unit::<K>(a.dim(), y);
        // L_x^k(y) for k = 0..n
        let lky: Vec<Vec<K>> = l_pow.iter().map(|p| p.mul_vec(&ey)).collect();
        let (mut s1, mut s2, mut s3, mut s4) =
            (Matrix::zeros(d, d), Matrix::zeros(d, d), Matrix::zeros(d, d), Matrix::zeros(d, d));
        for k in 0..=n {
            let c = K::from_i64(binomial(n, k));
            let sc = if (n - k) % 2 == 0 { c.clone() } else { -c.clone() };
            let one = K::one();
            s1 = s1.lincomb(&one, &mul(&m.lambda_of(&lky[k]), &lx_pow[n - k]), &c).expect("shape");
            s2 = s2.lincomb(&one, &mul(&m.rho_of(&lky[k]), &lx_pow[n - k]), &c).expect("shape");
            s3 = s3.lincomb(&one, &mul(&lx_pow[k], &m.lambda_of(&lky[n - k])), &sc).expect("shape");
            s4 = s4.lincomb(&one, &mul(&lx_pow[k], &m.rho_of(&lky[n - k])), &sc).expect("shape");
        }
        let checks = [
            (LAMBDA_POWER_LAMBDA, mul(&lx_pow[n], &m.lambda()[y]), s1),
            (LAMBDA_POWER_RHO, mul(&lx_pow[n], &m.rho()[y]), s2),
            (LAMBDA_TIMES_POWER, mul(&m.lambda()[y], &lx_pow[n]), s3),
            (RHO_TIMES_POWER, mul(&m.rho()[y], &lx_pow[n]), s4),
        ];
        for (identity, lhs, rhs) in checks {
            if lhs != rhs {
                return Err(IdentityFailure { identity, y });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::field::Rational;
    use crate::linalg::unit;

    type Q = Rational;

    #[test]
    fn operator_components() {
        let t = Matrix::<Q>::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
        let p = fitting_operator(&t);
        assert_eq!((p.zero_part.dim(), p.one_part.dim()), (2, 1));
        let n = Matrix::<Q>::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(fitting_operator(&n).zero_part.is_full());
        assert!(fitting_operator(&Matrix::<Q>::identity(2)).one_part.is_full());
    }

    #[test]
    fn example_b_components() {
        let m = Bimodule::<Q>::example_b();
        let s = vec![unit(2, 0), unit(2, 1)];
        let (pair, claims) = fitting_claims(&m, &s).unwrap();
        assert!(pair.zero_part.is_zero());
        assert!(pair.one_part.is_full());
        assert!(claims.all());
    }

    #[test]
    fn adjoint_n_zero_part_is_everything() {
        let n = Arc::new(LeibnizAlgebra::<Q>::example_n());
        let m = Bimodule::adjoint(n);
        let pair = fitting_set(&m, &[unit(2, 0), unit(2, 1)]).unwrap();
        assert!(pair.zero_part.is_full());
        for k in 1..=3 {
            assert!(verify_nilpotency_identities(&m, &unit(2, 1), k).is_ok());
        }
    }

    #[test]
    fn precondition_names_offending_element() {
        let a = Arc::new(LeibnizAlgebra::<Q>::example_a());
        let m = Bimodule::adjoint(a);
        assert_eq!(fitting_set(&m, &[unit(2, 0), unit(2, 1)]), Err(Error::NotNilpotent(1)));
    }

    #[test]
    fn example_a_identities() {
        let m = Bimodule::<Q>::example_a();
        assert!(verify_nilpotency_identities(&m, &unit(1, 0), 2).is_ok());
    }
}
