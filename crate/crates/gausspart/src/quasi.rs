//! Quasi-polynomial closed forms for W_m(s) with consecutive parts,
//! m in {2, 3, 5}.
//!
//! A quasi-polynomial of degree m-1 is stored as one periodic rational
//! table per power of s. That representation absorbs mixed terms like
//! (s/64)cos(pi*s) natively: they become a period-2 table on the linear
//! coefficient. The oscillatory terms are never touched in floating
//! point; every table entry is an exact rational.
//!
//! Builtins are constructed by fitting the DP oracle: for each residue
//! class modulo lcm(1..m) the restriction of W_m is a genuine polynomial
//! of degree m-1, so m sample points pin it down exactly. The literal
//! polynomial parts of the published closed forms are then asserted
//! against the fit, which guards against transcription errors in either
//! direction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::PeriodicRational;
use crate::partition::count_consecutive;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuasiError {
    #[error("no builtin quasi-polynomial for m = {0}; supported m: 2, 3, 5")]
    UnsupportedOrder(u32),
    #[error("quasi-polynomial evaluated to a non-integral or negative value at s = {0}")]
    NonIntegralValue(usize),
}

/// Degree-(m-1) polynomial in s whose coefficients are periodic rational
/// sequences; index r of `coeffs` holds the coefficient of s^r.
#[derive(Debug, Clone)]
pub struct QuasiPolynomial {
    m: u32,
    coeffs: Vec<PeriodicRational>,
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Solve the m x m Vandermonde system sum_r c_r * s_k^r = v_k exactly.
fn solve_vandermonde(points: &[usize], values: &[BigRational]) -> Vec<BigRational> {
    let n = points.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|k| {
            let s = BigRational::from(BigInt::from(points[k]));
            let mut row = Vec::with_capacity(n + 1);
            let mut pow = BigRational::one();
            for _ in 0..n {
                row.push(pow.clone());
                pow *= &s;
            }
            row.push(values[k].clone());
            row
        })
        .collect();
    // Gaussian elimination with partial pivoting on nonzero entries.
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Vandermonde matrix with distinct points is nonsingular");
        a.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in col..=n {
            a[col][j] /= &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..=n {
                    let sub = &factor * &a[col][j];
                    a[r][j] -= sub;
                }
            }
        }
    }
    (0..n).map(|r| a[r][n].clone()).collect()
}

fn lcm_up_to(m: u32) -> usize {
    (1..=m as usize).fold(1usize, num_integer::lcm)
}

/// Fit the degree-(m-1) quasi-polynomial for W_m from DP oracle values,
/// with coefficient period lcm(1..m), then reduce each table to its
/// minimal period.
fn fit_consecutive(m: u32) -> QuasiPolynomial {
    let period = lcm_up_to(m);
    let deg = (m - 1) as usize;
    let mut tables: Vec<Vec<BigRational>> = vec![Vec::with_capacity(period); deg + 1];
    for residue in 0..period {
        let points: Vec<usize> = (0..=deg).map(|k| residue + k * period).collect();
        let values: Vec<BigRational> = points
            .iter()
            .map(|&s| BigRational::from(count_consecutive(s, m)))
            .collect();
        let coeffs = solve_vandermonde(&points, &values);
        for (r, c) in coeffs.into_iter().enumerate() {
            tables[r].push(c);
        }
    }
    QuasiPolynomial {
        m,
        coeffs: tables
            .into_iter()
            .map(|t| PeriodicRational::new(t).reduced())
            .collect(),
    }
}

/// The explicit quasi-polynomial for W_m(s), m in {2, 3, 5}.
pub fn builtin_w(m: u32) -> Result<QuasiPolynomial, QuasiError> {
    if !matches!(m, 2 | 3 | 5) {
        return Err(QuasiError::UnsupportedOrder(m));
    }
    let q = fit_consecutive(m);
    q.assert_published_polynomial_part();
    Ok(q)
}

impl QuasiPolynomial {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Periodic coefficient table of s^r.
    pub fn coeff(&self, r: usize) -> &PeriodicRational {
        &self.coeffs[r]
    }

    /// Minimal period of the whole quasi-polynomial (lcm of the
    /// coefficient table periods).
    pub fn period(&self) -> usize {
        self.coeffs
            .iter()
            .fold(1usize, |acc, t| num_integer::lcm(acc, t.period()))
    }

    pub fn evaluate(&self, s: usize) -> Result<BigInt, QuasiError> {
        let sr = BigRational::from(BigInt::from(s));
        let mut pow = BigRational::one();
        let mut total = BigRational::zero();
        for table in &self.coeffs {
            total += table.eval(s) * &pow;
            pow *= &sr;
        }
        if !total.is_integer() || total.is_negative() {
            return Err(QuasiError::NonIntegralValue(s));
        }
        Ok(total.to_integer())
    }

    /// Check the fitted tables against the published closed-form
    /// polynomial parts: leading coefficient 1/((m-1)! m!) always, plus
    /// the non-constant coefficients as printed for each supported m.
    /// The W_5 linear coefficient carries the folded (s/64)cos(pi*s)
    /// term as a period-2 alternation.
    fn assert_published_polynomial_part(&self) {
        let m = self.m as i64;
        let fact = |k: i64| (1..=k).product::<i64>().max(1);
        let leading = PeriodicRational::constant(rat(1, fact(m - 1) * fact(m)));
        assert_eq!(
            *self.coeff(self.degree()),
            leading,
            "leading coefficient of W_{m} disagrees with 1/((m-1)! m!)"
        );
        match self.m {
            2 => {
                assert_eq!(*self.coeff(1), PeriodicRational::constant(rat(1, 2)));
            }
            3 => {
                assert_eq!(*self.coeff(2), PeriodicRational::constant(rat(1, 12)));
                assert_eq!(*self.coeff(1), PeriodicRational::constant(rat(1, 2)));
            }
            5 => {
                assert_eq!(*self.coeff(4), PeriodicRational::constant(rat(1, 2880)));
                assert_eq!(*self.coeff(3), PeriodicRational::constant(rat(1, 96)));
                assert_eq!(*self.coeff(2), PeriodicRational::constant(rat(31, 288)));
                let linear = PeriodicRational::new(vec![
                    rat(85, 192) + rat(1, 64),
                    rat(85, 192) - rat(1, 64),
                ]);
                assert_eq!(*self.coeff(1), linear);
            }
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsupported_orders_rejected() {
        for m in [0, 1, 4, 6, 12] {
            assert_eq!(builtin_w(m).unwrap_err(), QuasiError::UnsupportedOrder(m));
        }
    }

    #[test]
    fn w2_examples() {
        let w2 = builtin_w(2).unwrap();
        assert_eq!(w2.evaluate(1).unwrap(), BigInt::one());
        assert_eq!(w2.evaluate(6).unwrap(), BigInt::from(4));
    }

    #[test]
    fn w3_examples() {
        let w3 = builtin_w(3).unwrap();
        assert_eq!(w3.evaluate(0).unwrap(), BigInt::one());
        assert_eq!(w3.evaluate(3).unwrap(), BigInt::from(3));
    }

    #[test]
    fn w5_examples() {
        let w5 = builtin_w(5).unwrap();
        assert_eq!(w5.evaluate(0).unwrap(), BigInt::one());
        assert_eq!(w5.evaluate(5).unwrap(), BigInt::from(7));
    }

    #[test]
    fn master_agreement_with_dp() {
        for m in [2u32, 3, 5] {
            let q = builtin_w(m).unwrap();
            for s in 0..=200 {
                assert_eq!(q.evaluate(s).unwrap(), count_consecutive(s, m), "m={m} s={s}");
            }
        }
    }

    #[test]
    fn w2_constant_table_literal() {
        // 3/4 + (1/4)cos(pi*s) = [1, 1/2]
        let w2 = builtin_w(2).unwrap();
        let expect = PeriodicRational::new(vec![rat(1, 1), rat(1, 2)]);
        assert_eq!(*w2.coeff(0), expect);
    }

    #[test]
    fn w3_constant_table_literal() {
        // 47/72 + (2/9)cos(2*pi*s/3) + (1/8)cos(pi*s); cos(2*pi*s/3) is
        // 1 at s=0 mod 3 and -1/2 otherwise, cos(pi*s) alternates.
        let cos3 = |s: i64| if s % 3 == 0 { rat(1, 1) } else { rat(-1, 2) };
        let cos1 = |s: i64| if s % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let table: Vec<BigRational> = (0..6)
            .map(|s| rat(47, 72) + rat(2, 9) * cos3(s) + rat(1, 8) * cos1(s))
            .collect();
        let w3 = builtin_w(3).unwrap();
        assert_eq!(*w3.coeff(0), PeriodicRational::new(table));
    }

    #[test]
    fn w5_s_cos_term_alternates() {
        // The linear coefficient differs from 85/192 by exactly
        // (-1)^s / 64, the folded (s/64)cos(pi*s) term.
        let w5 = builtin_w(5).unwrap();
        let base = rat(85, 192);
        for s in 0..4 {
            let sign = if s % 2 == 0 { rat(1, 64) } else { rat(-1, 64) };
            assert_eq!(*w5.coeff(1).eval(s), &base + sign);
        }
    }

    #[test]
    fn detected_periods() {
        assert_eq!(builtin_w(2).unwrap().period(), 2);
        assert_eq!(builtin_w(3).unwrap().period(), 6);
        // The period-4, period-3, period-5 and period-2 oscillations in
        // the constant term force the full lcm.
        assert_eq!(builtin_w(5).unwrap().period(), 60);
    }

    #[test]
    fn leading_coefficients() {
        for m in [2u32, 3, 5] {
            let q = builtin_w(m).unwrap();
            let fact = |k: u64| (1..=k).product::<u64>().max(1);
            let expect = BigRational::new(
                BigInt::one(),
                BigInt::from(fact(m as u64 - 1) * fact(m as u64)),
            );
            assert_eq!(*q.coeff(q.degree()), PeriodicRational::constant(expect));
        }
    }
}
