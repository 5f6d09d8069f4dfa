//! Exact symbol calculus for linear partial differential operators on
//! `R x R^n` and decision procedures for their Galilei invariance.
//!
//! Coefficients are Gaussian rationals, so every check is exact. The main
//! entry points are [`classify_order2`], which recognizes `alpha (2 i lambda Dt
//! + Lap) + beta` among order-2 operators, and [`classify_order_m`], which
//! recognizes polynomials in `2 i lambda Dt + Lap` at a fixed `lambda`.
//!
//! ```
//! use galilei_core::{classify_order2, parse_operator};
//!
//! let l = parse_operator("2i*Dt + Lap", Some(3)).unwrap();
//! let verdict = classify_order2(&l).unwrap();
//! assert_eq!(verdict.accepted().unwrap().lambda.to_string(), "1");
//! ```

pub mod algebra;
pub mod characterize;
pub mod error;
pub mod galilei;
pub mod invariance;
pub mod operator;
pub mod oracle;
pub mod space;
pub mod text;

pub use algebra::{GaussianRational, MultiPoly, OrthogonalMatrix, RationalMatrix};
pub use characterize::{
    classify_order2, classify_order_m, normalize_gauge, synthesize, GaugeNormalization, Theorem1Accept, Theorem1Rejection, Theorem1Verdict,
    Theorem2Rejection, Theorem2Verdict,
};
pub use error::{Error, Result};
pub use galilei::{conj_boost_gauge, conj_rotation, conj_translation, theta_of, Boost, PhaseSpec, Theta, Translation};
pub use invariance::{
    check_boost_invariance_fixed_gauge, check_rotation_invariance, check_translation_invariance, rotation_generator_check, CheckReport, Evidence, Verdict,
};
pub use operator::{operator_of, symbol_of, Derivative, Lpdo, Symbol};
pub use oracle::{boost_commutator_defect, SamplePlan, DEFAULT_SEED};
pub use space::Space;
pub use text::{parse_operator, print_operator};
