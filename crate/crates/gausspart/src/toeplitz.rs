//! Unit-diagonal triangular Toeplitz convolution systems: forward
//! substitution, the multinomial Phi polynomials, the closed-form
//! solution built from them, and the specialization that reproduces
//! the Gaussian coefficient table from W sequences alone.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

use crate::exact::IntPolynomial;
use crate::gaussian::{GaussianTable, Method};
use crate::partition::{consecutive_table, enumerate_partitions};

/// The data of P(g) = T(g) + sum_{s<g} P(s) U(g-s); T(0) must be 1 so
/// that P(0) = 1.
pub struct ConvolutionSystem {
    t: Box<dyn Fn(usize) -> BigInt>,
    u: Box<dyn Fn(usize) -> BigInt>,
}

impl ConvolutionSystem {
    pub fn new(
        t: impl Fn(usize) -> BigInt + 'static,
        u: impl Fn(usize) -> BigInt + 'static,
    ) -> Self {
        assert!(t(0).is_one(), "T(0) must equal 1");
        ConvolutionSystem {
            t: Box::new(t),
            u: Box::new(u),
        }
    }

    /// Finite tables, read as zero beyond their length.
    pub fn from_tables(t: Vec<BigInt>, u: Vec<BigInt>) -> Self {
        let at = |v: Vec<BigInt>| move |g: usize| v.get(g).cloned().unwrap_or_else(BigInt::zero);
        Self::new(at(t), at(u))
    }

    pub fn t(&self, g: usize) -> BigInt {
        (self.t)(g)
    }

    pub fn u(&self, g: usize) -> BigInt {
        (self.u)(g)
    }
}

/// P(0..=g_max) by forward substitution.
pub fn solve_forward(sys: &ConvolutionSystem, g_max: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(g_max + 1);
    p.push(BigInt::one());
    for g in 1..=g_max {
        let mut acc = sys.t(g);
        for s in 0..g {
            acc += &p[s] * sys.u(g - s);
        }
        p.push(acc);
    }
    p
}

/// One multinomial term of Phi_r: coefficient q!/prod(q_k!) and the
/// exponent vector (q_1..q_r) of a partition of r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTerm {
    pub coeff: BigInt,
    pub exponents: Vec<u32>,
}

/// Phi_r as a formal polynomial in U(1..r): one term per partition of
/// r, in reverse-lexicographic partition order. Phi_0 is the constant 1
/// (empty term list is not used; r = 0 holds a single term with empty
/// exponent vector and coefficient 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiPolynomial {
    pub r: usize,
    pub terms: Vec<PhiTerm>,
}

fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn multinomial(exponents: &[u32]) -> BigInt {
    let q: u32 = exponents.iter().sum();
    let mut c = factorial(q);
    for &qk in exponents {
        if qk > 1 {
            c /= factorial(qk);
        }
    }
    c
}

pub fn build_phi(r: usize) -> PhiPolynomial {
    let terms = enumerate_partitions(r)
        .exponent_vectors()
        .into_iter()
        .map(|exponents| PhiTerm {
            coeff: multinomial(&exponents),
            exponents,
        })
        .collect();
    PhiPolynomial { r, terms }
}

impl PhiPolynomial {
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|t| &t.coeff).sum()
    }
}

/// Evaluate Phi_r at a concrete sequence U(1..r):
/// sum over terms of coeff * prod_k U(k)^{q_k}.
pub fn eval_phi(phi: &PhiPolynomial, u: impl Fn(usize) -> BigInt) -> BigInt {
    let u_values: Vec<BigInt> = (1..=phi.r).map(&u).collect();
    let mut total = BigInt::zero();
    for term in &phi.terms {
        let mut prod = term.coeff.clone();
        for (k, &qk) in term.exponents.iter().enumerate() {
            for _ in 0..qk {
                prod *= &u_values[k];
            }
        }
        total += prod;
    }
    total
}

/// Phi_0..Phi_{r_max} at a concrete U via the generating recurrence
/// Phi_r = sum_{k=1}^r U(k) Phi_{r-k}. This is the memoized fast path;
/// it agrees with eval_phi(build_phi(r), U) term by term (covered by
/// tests) without materializing the p(r) partition terms.
pub fn phi_values(u: impl Fn(usize) -> BigInt, r_max: usize) -> Vec<BigInt> {
    let u_values: Vec<BigInt> = (1..=r_max).map(&u).collect();
    let mut phi: Vec<BigInt> = Vec::with_capacity(r_max + 1);
    phi.push(BigInt::one());
    for r in 1..=r_max {
        let mut acc = BigInt::zero();
        for k in 1..=r {
            acc += &u_values[k - 1] * &phi[r - k];
        }
        phi.push(acc);
    }
    phi
}

/// P(g) by the closed form P(g) = sum_{r=0}^{g-1} [T(g-r) + U(g-r)] Phi_r(U),
/// with the Phi polynomials built and evaluated literally.
pub fn solve_closed_form(sys: &ConvolutionSystem, g: usize) -> BigInt {
    if g == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for r in 0..g {
        let phi = eval_phi(&build_phi(r), |k| sys.u(k));
        total += (sys.t(g - r) + sys.u(g - r)) * phi;
    }
    total
}

/// Full value sequence P(0..=g_max) for the (n, m) system of the
/// Gaussian table, by the closed form. T(g) is the W_n * W_m
/// convolution, U(s) = -W_{m+n}(s); both are precomputed once, and the
/// Phi_r(m+n) values are computed once and reused for every g.
pub fn pnm_toeplitz_values(n: u32, m: u32, g_max: usize) -> Vec<BigInt> {
    assert!(n >= 1 && m >= 1);
    let wn = consecutive_table(g_max, n);
    let wm = consecutive_table(g_max, m);
    let wnm = consecutive_table(g_max, n + m);
    let t: Vec<BigInt> = (0..=g_max)
        .map(|g| (0..=g).map(|s| &wn[s] * &wm[g - s]).sum())
        .collect();
    let u: Vec<BigInt> = wnm.iter().map(|w| -w).collect();
    let phis = phi_values(
        {
            let u = u.clone();
            move |k| u[k].clone()
        },
        g_max.saturating_sub(1),
    );
    let mut values = Vec::with_capacity(g_max + 1);
    values.push(BigInt::one());
    for g in 1..=g_max {
        let mut total = BigInt::zero();
        for (r, phi) in phis[..g].iter().enumerate() {
            total += (&t[g - r] + &u[g - r]) * phi;
        }
        values.push(total);
    }
    values
}

/// Gaussian table by the closed-form Toeplitz route. Computes out to
/// max(g_max, nm); trailing zero coefficients beyond degree nm are
/// stripped by polynomial normalization, so a non-vanishing tail would
/// surface as a degree mismatch in the structural checks.
pub fn pnm_by_toeplitz(n: u32, m: u32, g_max: usize) -> GaussianTable {
    let nm = n as usize * m as usize;
    let values = pnm_toeplitz_values(n, m, g_max.max(nm));
    GaussianTable {
        n,
        m,
        coeffs: IntPolynomial::new(values),
        method: Method::Toeplitz,
    }
}

impl fmt::Display for PhiPolynomial {
    /// Paper-style rendering: U(k) factors in descending k, caret
    /// powers, terms in reverse-lexicographic partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for term in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !term.coeff.is_one() {
                write!(f, "{}", term.coeff)?;
            }
            for k in (1..=self.r).rev() {
                let qk = term.exponents[k - 1];
                if qk == 0 {
                    continue;
                }
                write!(f, "U({k})")?;
                if qk > 1 {
                    write!(f, "^{qk}")?;
                }
            }
        }
        Ok(())
    }
}
