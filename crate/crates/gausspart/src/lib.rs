//! Exact computation of Gaussian polynomial coefficients P_n^m(s) by
//! several independent routes, with the cross-validation machinery the
//! routes are checked against: dynamic-programming partition counting,
//! quasi-polynomial closed forms for W_2/W_3/W_5, the piecewise small-s
//! formulas, and a triangular Toeplitz closed form built from the Phi
//! multinomial polynomials.

pub mod exact;
pub mod gaussian;
pub mod partition;
pub mod quasi;
pub mod report;
pub mod toeplitz;

pub use exact::{poly_div_exact, poly_mul, series_inverse_trunc, IntPolynomial, PeriodicRational};
pub use gaussian::{
    check_convolution_residual, corollary1_check, gaussian_by_division, gaussian_by_oracle,
    gaussian_by_recurrence, theorem2_piecewise, GaussianTable, Method,
};
pub use partition::{
    count_consecutive, count_constrained, count_unconstrained, enumerate_partitions, DenomTuple,
    PartitionList,
};
pub use quasi::{builtin_w, QuasiPolynomial};
pub use toeplitz::{
    build_phi, eval_phi, phi_values, pnm_by_toeplitz, solve_closed_form, solve_forward,
    ConvolutionSystem, PhiPolynomial,
};
