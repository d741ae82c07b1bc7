//! Exact ground fields: the rationals and prime fields GF(p).
//!
//! Every algebraic routine in the crate is generic over [`Scalar`]. Two
//! families of implementors exist: [`Rational`] (arbitrary precision
//! fractions) and [`Fp`], the residues modulo a prime `P` fixed at compile
//! time. `Fp<0>` reads its modulus from a process-wide slot that is set once
//! with [`set_runtime_prime`]; this is how the command line front end handles
//! primes that are only known after parsing an input document.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::poly;

/// Arbitrary precision rational numbers.
pub type Rational = BigRational;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// Validates `p` and returns the prime field it names.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => u64::from(*p),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(u64::from(*p)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn field() -> FieldSpec;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Parses the textual form used in documents: integers, and `a/b`
    /// fractions (interpreted modulo `p` in a prime field).
    fn parse_scalar(s: &str) -> Result<Self>;

    /// All elements in a fixed order, when the field is finite and small
    /// enough to list (at most 2^16 elements).
    fn elements() -> Option<Vec<Self>> {
        None
    }

    /// The roots lying in this field of the polynomial with coefficients
    /// `coeffs` (constant term first), without multiplicity, sorted in a
    /// deterministic order. `None` when the search cannot be completed
    /// (rational coefficients beyond the divisor search bound).
    fn roots(coeffs: &[Self]) -> Option<Vec<Self>>;

    /// Rescales a row so that fraction-free elimination keeps entries small.
    /// Must only multiply the row by a nonzero scalar.
    fn make_primitive(_row: &mut [(usize, Self)]) {}

    /// Integer representative of a residue; `None` in characteristic zero.
    fn residue(&self) -> Option<u64> {
        None
    }
}

// ---------------------------------------------------------------------------
// Rationals

impl Scalar for BigRational {
    fn field() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let t = s.trim();
        BigRational::from_str(t).map_err(|_| Error::ParseScalar(s.to_string()))
    }

    fn roots(coeffs: &[Self]) -> Option<Vec<Self>> {
        rational_roots(coeffs)
    }

    fn make_primitive(row: &mut [(usize, Self)]) {
        if row.is_empty() {
            return;
        }
        let mut den = BigInt::one();
        for (_, v) in row.iter() {
            den = den.lcm(v.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, v) in row.iter() {
            let n = v.numer() * (&den / v.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        if num_gcd.is_zero() {
            return;
        }
        let factor = BigRational::new(den, num_gcd);
        if factor.is_one() {
            return;
        }
        for (_, v) in row.iter_mut() {
            *v = &*v * &factor;
        }
    }
}

/// Largest |constant| or |leading| coefficient for which divisors are
/// enumerated when searching rational roots.
const RATIONAL_ROOT_BOUND: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > RATIONAL_ROOT_BOUND {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

fn rational_roots(coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    // strip factors of x
    let shift = c.iter().take_while(|x| x.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
        c.drain(..shift);
    }
    if c.len() > 1 {
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let a0 = &ints[0];
        let an = &ints[ints.len() - 1];
        let (ps, qs) = (divisors(a0)?, divisors(an)?);
        {
            for q in &qs {
                for p in &ps {
                    for sign in [1i64, -1] {
                        let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                        if roots.contains(&cand) {
                            continue;
                        }
                        if poly::eval(&c, &cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

// ---------------------------------------------------------------------------
// Prime fields

static RUNTIME_PRIME: AtomicU32 = AtomicU32::new(0);

/// Fixes the modulus used by [`Fp<0>`](Fp). The slot can be set once per
/// process; setting it again to the same prime is a no-op.
pub fn set_runtime_prime(p: u64) -> Result<()> {
    let FieldSpec::PrimeField(p) = FieldSpec::prime(p)? else {
        unreachable!()
    };
    match RUNTIME_PRIME.compare_exchange(0, p, Ordering::SeqCst, Ordering::SeqCst) {
        Ok(_) => Ok(()),
        Err(existing) if existing == p => Ok(()),
        Err(existing) => Err(Error::RuntimePrimeConflict { existing, requested: p }),
    }
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

/// Prime field whose modulus is chosen at run time.
pub type RuntimeFp = Fp<0>;

impl<const P: u32> Fp<P> {
    #[inline]
    pub fn modulus() -> u32 {
        if P != 0 {
            P
        } else {
            let p = RUNTIME_PRIME.load(Ordering::Relaxed);
            assert!(p != 0, "runtime prime not set");
            p
        }
    }

    pub fn new(v: u64) -> Self {
        Fp((v % u64::from(Self::modulus())) as u32)
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % Self::modulus())
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let p = u64::from(Self::modulus());
        Fp(((u64::from(self.0) + u64::from(rhs.0)) % p) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let p = u64::from(Self::modulus());
        Fp(((u64::from(self.0) + p - u64::from(rhs.0)) % p) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let p = u64::from(Self::modulus());
        Fp(((u64::from(self.0) * u64::from(rhs.0)) % p) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(Self::modulus() - self.0)
        }
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u32> Scalar for Fp<P> {
    fn field() -> FieldSpec {
        FieldSpec::PrimeField(Self::modulus())
    }

    fn from_i64(v: i64) -> Self {
        let p = i64::from(Self::modulus());
        Fp(v.rem_euclid(p) as u32)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(u64::from(Self::modulus()) - 2))
        }
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let err = || Error::ParseScalar(s.to_string());
        let t = s.trim();
        let parse_int = |x: &str| -> Result<Self> {
            let n = BigInt::from_str(x.trim()).map_err(|_| err())?;
            let r = n.mod_floor(&BigInt::from(Self::modulus()));
            Ok(Fp(r.to_u32().expect("residue fits")))
        };
        match t.split_once('/') {
            Some((a, b)) => {
                let num = parse_int(a)?;
                let den = parse_int(b)?;
                let inv = den.inv().ok_or_else(err)?;
                Ok(num * inv)
            }
            None => parse_int(t),
        }
    }

    fn elements() -> Option<Vec<Self>> {
        let p = Self::modulus();
        (p <= 1 << 16).then(|| (0..p).map(Fp).collect())
    }

    fn roots(coeffs: &[Self]) -> Option<Vec<Self>> {
        let mut c = coeffs.to_vec();
        poly::trim(&mut c);
        if c.len() <= 1 {
            return Some(Vec::new());
        }
        if let Some(all) = Self::elements() {
            return Some(all.into_iter().filter(|x| poly::eval(&c, x).is_zero()).collect());
        }
        let mut roots = poly::split_roots_mod_p(&c, u64::from(Self::modulus()));
        roots.sort();
        roots.dedup();
        Some(roots)
    }

    fn residue(&self) -> Option<u64> {
        Some(u64::from(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;

    fn q(s: &str) -> Rational {
        Rational::parse_scalar(s).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = F5::from_i64(3);
        let b = F5::from_i64(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((-a).value(), 2);
        assert_eq!(a.inv().unwrap() * a, F5::one());
        assert!(F5::zero().inv().is_none());
        assert_eq!(F5::from_i64(-1).value(), 4);
    }

    #[test]
    fn parse_scalars() {
        assert_eq!(q("-1/2"), Rational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(q(" 3 "), Rational::from_i64(3));
        assert!(Rational::parse_scalar("1/0").is_err());
        assert!(Rational::parse_scalar("abc").is_err());
        assert_eq!(F5::parse_scalar("1/2").unwrap(), F5::from_i64(3));
        assert_eq!(F5::parse_scalar("-7").unwrap(), F5::from_i64(3));
        assert!(F5::parse_scalar("1/5").is_err());
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2147483647).is_ok());
        assert!(FieldSpec::prime(2147483659).is_err());
        assert!(FieldSpec::prime(2147483629).is_ok());
    }

    #[test]
    fn rational_roots_of_products() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let c = vec![q("0"), q("-3/2"), q("5/2"), q("1")];
        assert_eq!(Rational::roots(&c).unwrap(), vec![q("-3"), q("0"), q("1/2")]);
        // x^2 + 1 has no rational root
        assert!(Rational::roots(&[q("1"), q("0"), q("1")]).unwrap().is_empty());
    }

    #[test]
    fn prime_field_roots() {
        // x^2 - 1 over GF(5)
        let c = vec![F5::from_i64(-1), F5::zero(), F5::one()];
        assert_eq!(F5::roots(&c).unwrap(), vec![F5::from_i64(1), F5::from_i64(4)]);
    }

    #[test]
    fn make_primitive_clears_denominators() {
        let mut row = vec![(0, q("1/2")), (3, q("-3/4"))];
        Rational::make_primitive(&mut row);
        assert_eq!(row, vec![(0, q("2")), (3, q("-3"))]);
    }
}
