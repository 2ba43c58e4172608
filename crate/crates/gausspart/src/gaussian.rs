//! Gaussian polynomial tables and the verification sweeps built on them.
//!
//! G(n,m;t) is the degree-nm polynomial whose coefficient of t^s counts
//! partitions of s into at most n parts, each at most m. Three routes
//! construct the full table here (product division, the q-Pascal
//! recurrence, and the constrained DP oracle); a fourth lives in the
//! toeplitz module. Each table carries its construction method so a
//! cross-check failure can name both sides.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

use crate::exact::{poly_div_exact, poly_mul, ExactError, IntPolynomial};
use crate::partition::{consecutive_table, count_constrained};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaussianError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("g = {g} exceeds n + m = {limit}; the piecewise formulas stop there")]
    OutOfTheoremRange { g: usize, limit: usize },
}

/// Construction route of a table, carried for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ProductDivision,
    Recurrence,
    Toeplitz,
    Oracle,
    Theorem2Piecewise,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::ProductDivision => "product-division",
            Method::Recurrence => "recurrence",
            Method::Toeplitz => "toeplitz",
            Method::Oracle => "oracle",
            Method::Theorem2Piecewise => "theorem2-piecewise",
        };
        f.write_str(s)
    }
}

/// The coefficient table of G(n,m;t): entry s is P_n^m(s).
#[derive(Debug, Clone)]
pub struct GaussianTable {
    pub n: u32,
    pub m: u32,
    pub coeffs: IntPolynomial,
    pub method: Method,
}

impl GaussianTable {
    pub fn value(&self, s: usize) -> BigInt {
        self.coeffs.coeff(s)
    }

    pub fn nm(&self) -> usize {
        self.n as usize * self.m as usize
    }

    /// min(n, m) and max(n, m), the breakpoints of the piecewise formulas.
    pub fn mu(&self) -> (u32, u32) {
        (self.n.min(self.m), self.n.max(self.m))
    }
}

/// Build G(n,m;t) as prod_{i=1}^{n+m}(1-t^i) divided by the product of
/// the two factorial-style denominators. The division is exact.
pub fn gaussian_by_division(n: u32, m: u32) -> Result<GaussianTable, GaussianError> {
    assert!(n >= 1 && m >= 1);
    let mut num = IntPolynomial::one();
    for i in 1..=(n + m) as usize {
        num = poly_mul(&num, &IntPolynomial::one_minus_power(i));
    }
    let mut den = IntPolynomial::one();
    for u in 1..=n as usize {
        den = poly_mul(&den, &IntPolynomial::one_minus_power(u));
    }
    for v in 1..=m as usize {
        den = poly_mul(&den, &IntPolynomial::one_minus_power(v));
    }
    let coeffs = poly_div_exact(&num, &den)?;
    Ok(GaussianTable {
        n,
        m,
        coeffs,
        method: Method::ProductDivision,
    })
}

/// Division-free route via the q-Pascal identity
/// G(n,m) = G(n,m-1) + t^m G(n-1,m), G(0,.) = G(.,0) = 1.
pub fn gaussian_by_recurrence(n: u32, m: u32) -> GaussianTable {
    assert!(n >= 1 && m >= 1);
    let n = n as usize;
    let m = m as usize;
    let mut table: Vec<Vec<IntPolynomial>> = vec![vec![IntPolynomial::one(); m + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=m {
            table[i][j] = table[i][j - 1].add(&table[i - 1][j].shift(j));
        }
    }
    GaussianTable {
        n: n as u32,
        m: m as u32,
        coeffs: table[n][m].clone(),
        method: Method::Recurrence,
    }
}

/// Build the table from the constrained-count DP, coefficient by
/// coefficient. The definitional oracle route.
pub fn gaussian_by_oracle(n: u32, m: u32) -> GaussianTable {
    assert!(n >= 1 && m >= 1);
    let nm = n as usize * m as usize;
    let coeffs: Vec<BigInt> = (0..=nm).map(|s| count_constrained(s, n, m)).collect();
    GaussianTable {
        n,
        m,
        coeffs: IntPolynomial::new(coeffs),
        method: Method::Oracle,
    }
}

/// P_n^m(g) from the piecewise closed forms: W_{mu1}(g) up to mu2, and
/// W_n(g) + W_m(g) - W_{n+m}(g) on mu2..n+m. Valid only through g = n+m.
pub fn theorem2_piecewise(n: u32, m: u32, g: usize) -> Result<BigInt, GaussianError> {
    assert!(n >= 1 && m >= 1);
    let limit = (n + m) as usize;
    if g > limit {
        return Err(GaussianError::OutOfTheoremRange { g, limit });
    }
    let mu2 = n.max(m);
    if g <= mu2 as usize {
        let mu1 = n.min(m);
        Ok(crate::partition::count_consecutive(g, mu1))
    } else {
        let wn = crate::partition::count_consecutive(g, n);
        let wm = crate::partition::count_consecutive(g, m);
        let wnm = crate::partition::count_consecutive(g, n + m);
        Ok(wn + wm - wnm)
    }
}

/// One convolution residual row: the value of Delta at g.
#[derive(Debug, Clone)]
pub struct ResidualRow {
    pub g: usize,
    pub delta: BigInt,
}

/// Per-g residuals of the defining linear system: for each g,
/// Delta = sum_s [P(s) W_{m+n}(g-s) - W_n(s) W_m(g-s)], with P(s) = 0
/// beyond nm. The contract is Delta = 0 everywhere; a nonzero entry is
/// reported, not thrown.
pub fn check_convolution_residual(table: &GaussianTable, g_max: usize) -> Vec<ResidualRow> {
    let wn = consecutive_table(g_max, table.n);
    let wm = consecutive_table(g_max, table.m);
    let wnm = consecutive_table(g_max, table.n + table.m);
    (0..=g_max)
        .map(|g| {
            let mut delta = BigInt::zero();
            for s in 0..=g {
                delta += table.value(s) * &wnm[g - s];
                delta -= &wn[s] * &wm[g - s];
            }
            ResidualRow { g, delta }
        })
        .collect()
}

pub fn residuals_all_zero(rows: &[ResidualRow]) -> bool {
    rows.iter().all(|r| r.delta.is_zero())
}

/// One row of the finite limit check: P_n^m(s) at a given m.
#[derive(Debug, Clone)]
pub struct LimitRow {
    pub m: u32,
    pub value: BigInt,
    pub expected: BigInt,
}

/// Finite instantiation of the m -> infinity limit: P_n^m(s) must equal
/// W_n(s) for every m >= max(m_start, s). Scans m over that threshold
/// plus a margin of 10.
pub fn corollary1_check(n: u32, s: usize, m_start: u32) -> Vec<LimitRow> {
    assert!(n >= 1 && m_start >= 1);
    let expected = crate::partition::count_consecutive(s, n);
    let lo = m_start.max(s as u32).max(1);
    (lo..=lo + 10)
        .map(|m| LimitRow {
            m,
            value: count_constrained(s, n, m),
            expected: expected.clone(),
        })
        .collect()
}

pub fn limit_rows_all_match(rows: &[LimitRow]) -> bool {
    rows.iter().all(|r| r.value == r.expected)
}

/// The structural checks on a finished table: degree nm, unit
/// endpoints, palindromic symmetry, and monotone growth on the first
/// half. Returns the names of the violated properties.
pub fn theorem1_violations(table: &GaussianTable) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let nm = table.nm();
    if table.coeffs.degree() != nm || table.coeffs.is_zero() {
        bad.push("degree");
    }
    if !table.value(0).is_one() || !table.value(nm).is_one() {
        bad.push("endpoints");
    }
    if (0..=nm).any(|s| table.value(s) != table.value(nm - s)) {
        bad.push("palindrome");
    }
    if (1..=nm / 2).any(|s| table.value(s) < table.value(s - 1)) {
        bad.push("unimodal-first-half");
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::count_consecutive;

    #[test]
    fn division_golden_3_2() {
        let t = gaussian_by_division(3, 2).unwrap();
        assert_eq!(t.coeffs, IntPolynomial::from_i64(&[1, 1, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn division_n_one() {
        for m in 1..=6 {
            let t = gaussian_by_division(1, m).unwrap();
            assert_eq!(t.coeffs, IntPolynomial::new(vec![BigInt::one(); m as usize + 1]));
        }
    }

    #[test]
    fn division_midpoint_4_4() {
        let t = gaussian_by_division(4, 4).unwrap();
        assert_eq!(t.value(8), BigInt::from(8));
        assert_eq!(t.value(8), count_constrained(8, 4, 4));
    }

    #[test]
    fn recurrence_small_tables() {
        assert_eq!(
            gaussian_by_recurrence(2, 2).coeffs,
            IntPolynomial::from_i64(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            gaussian_by_recurrence(1, 1).coeffs,
            IntPolynomial::from_i64(&[1, 1])
        );
        assert_eq!(
            gaussian_by_recurrence(3, 2).coeffs,
            gaussian_by_division(3, 2).unwrap().coeffs
        );
    }

    #[test]
    fn piecewise_examples() {
        assert_eq!(theorem2_piecewise(3, 2, 4).unwrap(), BigInt::from(2));
        assert_eq!(theorem2_piecewise(3, 2, 1).unwrap(), BigInt::one());
        for (n, m) in [(1, 1), (4, 7), (6, 3)] {
            assert_eq!(theorem2_piecewise(n, m, 0).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn piecewise_range_error() {
        let err = theorem2_piecewise(3, 2, 6).unwrap_err();
        assert_eq!(err, GaussianError::OutOfTheoremRange { g: 6, limit: 5 });
    }

    #[test]
    fn piecewise_branch_overlap_consistent() {
        // At g = mu1 and g = mu2 the adjacent branch formulas agree.
        for n in 1..=8u32 {
            for m in 1..=8u32 {
                let (mu1, mu2) = (n.min(m), n.max(m));
                let at = |g: usize| count_consecutive(g, mu1);
                assert_eq!(at(mu1 as usize), count_consecutive(mu1 as usize, mu1));
                let g = mu2 as usize;
                let branch12 = count_consecutive(g, n) + count_consecutive(g, m)
                    - count_consecutive(g, n + m);
                assert_eq!(at(g), branch12, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn residual_zero_small() {
        for (n, m) in [(1, 1), (2, 2), (3, 2)] {
            let t = gaussian_by_oracle(n, m);
            let rows = check_convolution_residual(&t, 2 * t.nm().max(6));
            assert!(residuals_all_zero(&rows), "n={n} m={m}");
        }
    }

    #[test]
    fn residual_detects_corruption() {
        let mut t = gaussian_by_oracle(3, 2);
        let mut c: Vec<BigInt> = t.coeffs.coeffs().to_vec();
        c[3] += 1;
        t.coeffs = IntPolynomial::new(c);
        let rows = check_convolution_residual(&t, 8);
        assert!(!residuals_all_zero(&rows));
    }

    #[test]
    fn corollary1_examples() {
        let rows = corollary1_check(3, 4, 4);
        assert!(limit_rows_all_match(&rows));
        assert!(rows.iter().all(|r| r.value == BigInt::from(4)));
        let rows = corollary1_check(2, 5, 5);
        assert!(rows.iter().all(|r| r.value == BigInt::from(3)));
        let rows = corollary1_check(4, 0, 1);
        assert!(rows.iter().all(|r| r.value == BigInt::one()));
    }

    #[test]
    fn theorem1_clean_on_built_tables() {
        for n in 1..=6 {
            for m in 1..=6 {
                let t = gaussian_by_division(n, m).unwrap();
                assert!(theorem1_violations(&t).is_empty(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn theorem1_symmetry_n_m() {
        for n in 1..=6 {
            for m in 1..=6 {
                let a = gaussian_by_division(n, m).unwrap();
                let b = gaussian_by_division(m, n).unwrap();
                assert_eq!(a.coeffs, b.coeffs);
            }
        }
    }

    #[test]
    fn theorem1_flags_corruption() {
        let mut t = gaussian_by_oracle(3, 3);
        let mut c: Vec<BigInt> = t.coeffs.coeffs().to_vec();
        c[2] += 5;
        t.coeffs = IntPolynomial::new(c);
        assert!(!theorem1_violations(&t).is_empty());
    }
}
