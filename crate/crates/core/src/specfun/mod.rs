//! Special functions: gamma family, hypergeometric series, incomplete gamma and
//! beta, Legendre and parabolic cylinder functions, Bell polynomials.

pub mod bell;
pub mod gamma;
pub mod hyper;
pub mod incomplete;
pub mod legendre;
pub mod parabolic;

pub use bell::bell_polynomial;
pub use gamma::{factorial, gamma, gamma_real, pochhammer, rgamma};
pub use hyper::{
    hyp1f1, hyp2f1, hyp2f1_regularized, hyp3f2, hyp_pfq, hyp_pfq_regularized,
    hyp_pfq_unit_accelerated, HypergeometricSpec, SeriesControl, SeriesResult,
};
pub use incomplete::{incomplete_beta, lower_incomplete_gamma};
pub use legendre::{legendre_p, legendre_polynomial};
pub use parabolic::{parabolic_cylinder_d, parabolic_cylinder_d_scaled};
