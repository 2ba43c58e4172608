//! Exact integer polynomials and periodic rational sequences.
//!
//! Everything here is arbitrary precision: coefficients are `BigInt`,
//! periodic tables hold `BigRational`. No operation ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    /// Polynomial division left a nonzero remainder; carries the index of
    /// the first offending remainder coefficient.
    #[error("non-exact polynomial division: first nonzero remainder at t^{0}")]
    NonExactDivision(usize),
    #[error("series inversion requires constant term 1")]
    NonUnitConstantTerm,
}

/// Dense integer polynomial, index `i` holds the coefficient of `t^i`.
///
/// Normal form: trailing zeros are stripped, so the zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// 1 - t^d, the basic factor of every generating function here.
    pub fn one_minus_power(d: usize) -> Self {
        assert!(d >= 1);
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of t^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::new(out)
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + k] = c.clone();
        }
        IntPolynomial { coeffs: out }
    }

    /// Value at t = 1 (coefficient sum).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Exact schoolbook convolution.
pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntPolynomial::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    IntPolynomial::new(out)
}

/// Exact polynomial division pivoting on the constant term (power-series
/// style). The denominators in play all have constant term ±1, so quotient
/// coefficients stay integral; any nonzero remainder is a caller bug and is
/// reported with the first offending coefficient index.
pub fn poly_div_exact(
    num: &IntPolynomial,
    den: &IntPolynomial,
) -> Result<IntPolynomial, ExactError> {
    if den.is_zero() {
        return Err(ExactError::NonExactDivision(0));
    }
    if num.is_zero() {
        return Ok(IntPolynomial::zero());
    }
    let dn = num.degree();
    let dd = den.degree();
    if dn < dd {
        let first = num.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        return Err(ExactError::NonExactDivision(first));
    }
    let pivot = &den.coeffs[0];
    if pivot.is_zero() {
        return Err(ExactError::NonExactDivision(0));
    }
    let dq = dn - dd;
    let mut rem = num.coeffs.clone();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for i in 0..=dq {
        let (q, r) = rem[i].div_rem(pivot);
        if !r.is_zero() {
            return Err(ExactError::NonExactDivision(i));
        }
        if !q.is_zero() {
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
        }
        quot[i] = q;
    }
    if let Some(k) = rem.iter().position(|c| !c.is_zero()) {
        return Err(ExactError::NonExactDivision(k));
    }
    Ok(IntPolynomial::new(quot))
}

/// First `order + 1` coefficients of 1/p as a power series. Requires
/// p(0) = 1, which makes every coefficient an integer.
pub fn series_inverse_trunc(
    p: &IntPolynomial,
    order: usize,
) -> Result<Vec<BigInt>, ExactError> {
    if p.is_zero() || !p.coeffs[0].is_one() {
        return Err(ExactError::NonUnitConstantTerm);
    }
    let mut c = Vec::with_capacity(order + 1);
    c.push(BigInt::one());
    for k in 1..=order {
        let mut acc = BigInt::zero();
        for i in 1..=k.min(p.degree()) {
            acc += &p.coeffs[i] * &c[k - i];
        }
        c.push(-acc);
    }
    Ok(c)
}

/// Exact rational sequence of integer period; evaluation at `s` reads the
/// table at `s mod period`.
#[derive(Debug, Clone)]
pub struct PeriodicRational {
    values: Vec<BigRational>,
}

impl PeriodicRational {
    pub fn new(values: Vec<BigRational>) -> Self {
        assert!(!values.is_empty(), "period must be >= 1");
        PeriodicRational { values }
    }

    pub fn constant(v: BigRational) -> Self {
        PeriodicRational { values: vec![v] }
    }

    /// The exact residue table of cos(pi*s) at integer s.
    pub fn cos_pi_s() -> Self {
        PeriodicRational {
            values: vec![
                BigRational::from(BigInt::one()),
                BigRational::from(-BigInt::one()),
            ],
        }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn eval(&self, s: usize) -> &BigRational {
        &self.values[s % self.values.len()]
    }

    /// Smallest period that reproduces the table.
    pub fn reduced(&self) -> Self {
        let n = self.values.len();
        for d in 1..n {
            if n % d == 0 && (0..n).all(|i| self.values[i] == self.values[i % d]) {
                return PeriodicRational {
                    values: self.values[..d].to_vec(),
                };
            }
        }
        self.clone()
    }
}

impl PartialEq for PeriodicRational {
    /// Equal iff the two sequences agree on 0..lcm(periods)-1.
    fn eq(&self, other: &Self) -> bool {
        let l = self.values.len().lcm(&other.values.len());
        (0..l).all(|s| self.eval(s) == other.eval(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(poly_mul(&p(&[1, -1]), &p(&[1, 1])), p(&[1, 0, -1]));
    }

    #[test]
    fn mul_identity() {
        assert_eq!(poly_mul(&p(&[1, 1, 1]), &p(&[1])), p(&[1, 1, 1]));
    }

    #[test]
    fn mul_cube_of_binomial() {
        // (1+t)^3 by repeated schoolbook multiplication
        let b = p(&[1, 1]);
        let cube = poly_mul(&poly_mul(&b, &b), &b);
        assert_eq!(cube, p(&[1, 3, 3, 1]));
    }

    #[test]
    fn div_geometric_factor() {
        assert_eq!(poly_div_exact(&p(&[1, 0, -1]), &p(&[1, -1])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn div_perfect_square() {
        assert_eq!(poly_div_exact(&p(&[1, 2, 1]), &p(&[1, 1])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn div_non_exact_reports_index() {
        // (1 + t^2) / (1 - t) leaves a remainder; quotient coefficients are
        // computed from the low end so the failure surfaces as a trailing
        // nonzero remainder coefficient.
        let err = poly_div_exact(&p(&[1, 0, 1]), &p(&[1, -1])).unwrap_err();
        assert!(matches!(err, ExactError::NonExactDivision(_)));
    }

    #[test]
    fn div_by_zero_rejected() {
        assert!(poly_div_exact(&p(&[1, 1]), &IntPolynomial::zero()).is_err());
    }

    #[test]
    fn series_inverse_geometric() {
        let c = series_inverse_trunc(&p(&[1, -1]), 4).unwrap();
        assert_eq!(c, vec![1, 1, 1, 1, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn series_inverse_parts_one_two() {
        // 1/((1-t)(1-t^2)) counts partitions into parts {1,2}
        let den = poly_mul(&p(&[1, -1]), &p(&[1, 0, -1]));
        let c = series_inverse_trunc(&den, 5).unwrap();
        let expect: Vec<BigInt> = [1, 1, 2, 2, 3, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn series_inverse_order_zero() {
        let c = series_inverse_trunc(&p(&[1, 7, -3]), 0).unwrap();
        assert_eq!(c, vec![BigInt::one()]);
    }

    #[test]
    fn series_inverse_needs_unit_constant() {
        assert_eq!(
            series_inverse_trunc(&p(&[2, 1]), 3).unwrap_err(),
            ExactError::NonUnitConstantTerm
        );
    }

    #[test]
    fn cos_pi_table() {
        let t = PeriodicRational::cos_pi_s();
        for s in 0..=50 {
            let expect = if s % 2 == 0 { 1 } else { -1 };
            assert_eq!(*t.eval(s), BigRational::from(BigInt::from(expect)));
        }
    }

    #[test]
    fn periodic_equality_over_lcm() {
        let one = BigRational::from(BigInt::one());
        let a = PeriodicRational::new(vec![one.clone(), one.clone()]);
        let b = PeriodicRational::constant(one.clone());
        assert_eq!(a, b);
        let c = PeriodicRational::new(vec![one.clone(), -one]);
        assert_ne!(a, c);
    }

    #[test]
    fn periodic_reduction() {
        let one = BigRational::from(BigInt::one());
        let t = PeriodicRational::new(vec![one.clone(), one.clone(), one.clone(), one]);
        assert_eq!(t.reduced().period(), 1);
    }
}
