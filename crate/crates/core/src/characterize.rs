//! Classifiers for Galilei-invariant operators.
//!
//! [`classify_order2`] decides whether an order-2 operator is invariant under
//! the full Galilei group with some local gauge and, if so, recovers
//! `L = alpha (2 i lambda Dt + Lap) + beta` together with the gauge family.
//! [`classify_order_m`] decides, for a fixed nonzero `lambda`, whether an
//! order-`m` operator is a polynomial in `2 i lambda Dt + Lap`.
//!
//! Rejections carry the first failed stage, in the order the invariance
//! argument proceeds: constancy, rotation, order, time-quadratic term,
//! reality of `lambda`.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::{Error, Result};
use crate::galilei::PhaseSpec;
use crate::invariance::{check_boost_invariance_fixed_gauge, check_translation_invariance, radial_decompose, rotation_generator_check};
use crate::operator::{conjugate_linear_phase, power_const, symbol_of, Lpdo};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem1Rejection {
    NonConstantCoefficients,
    RotationFailure,
    A20Nonzero,
    LambdaNotReal,
    NotOrder2,
    ForbiddenLowerTerm,
}

impl fmt::Display for Theorem1Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem1Rejection::NonConstantCoefficients => "non-constant-coefficients",
            Theorem1Rejection::RotationFailure => "rotation-failure",
            Theorem1Rejection::A20Nonzero => "a20-nonzero",
            Theorem1Rejection::LambdaNotReal => "lambda-not-real",
            Theorem1Rejection::NotOrder2 => "not-order-2",
            Theorem1Rejection::ForbiddenLowerTerm => "forbidden-lower-term",
        })
    }
}

/// Parameters of an accepted order-2 operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Accept {
    /// Common coefficient of `Dx_a^2`.
    pub alpha: GaussianRational,
    /// Coefficient of the identity.
    pub beta: GaussianRational,
    pub lambda: BigRational,
    /// Gauge family, normalized to `theta_v(0,0) = 0` in the quadratic case.
    pub theta: PhaseSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem1Verdict {
    Accepted(Theorem1Accept),
    Rejected {
        reason: Theorem1Rejection,
        /// `-i a_10 / (2 alpha)` when the pipeline got far enough to compute it.
        lambda_candidate: Option<GaussianRational>,
    },
}

impl Theorem1Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Theorem1Verdict::Accepted(_))
    }

    pub fn accepted(&self) -> Option<&Theorem1Accept> {
        match self {
            Theorem1Verdict::Accepted(a) => Some(a),
            Theorem1Verdict::Rejected { .. } => None,
        }
    }

    pub fn rejection(&self) -> Option<Theorem1Rejection> {
        match self {
            Theorem1Verdict::Accepted(_) => None,
            Theorem1Verdict::Rejected { reason, .. } => Some(*reason),
        }
    }

    fn reject(reason: Theorem1Rejection) -> Self {
        Theorem1Verdict::Rejected {
            reason,
            lambda_candidate: None,
        }
    }
}

/// Order-2 classification.
pub fn classify_order2(l: &Lpdo) -> Result<Theorem1Verdict> {
    use Theorem1Rejection::*;

    if !check_translation_invariance(l).is_invariant() {
        return Ok(Theorem1Verdict::reject(NonConstantCoefficients));
    }
    if !rotation_generator_check(l)?.is_invariant() {
        return Ok(Theorem1Verdict::reject(RotationFailure));
    }
    if l.order() != 2 {
        return Ok(Theorem1Verdict::reject(NotOrder2));
    }
    let dec = radial_decompose(l)?;
    // p_0 = b00 + b01 |xi|^2 with b01 = -a_{0,2e_a}
    let alpha = -dec.b(0, 1);
    let beta = dec.b(0, 0);
    let a10 = dec.b(1, 0);
    if !dec.b(2, 0).is_zero() {
        return Ok(Theorem1Verdict::reject(A20Nonzero));
    }
    if alpha.is_zero() {
        return Ok(Theorem1Verdict::reject(NotOrder2));
    }
    let two_alpha = alpha.scale(&BigRational::from_integer(2.into()));
    let lambda_c = (-(&GaussianRational::i() * &a10)).checked_div(&two_alpha)?;
    if !lambda_c.is_real() {
        return Ok(Theorem1Verdict::Rejected {
            reason: LambdaNotReal,
            lambda_candidate: Some(lambda_c),
        });
    }
    let lambda = lambda_c.re().clone();

    let rebuilt = Lpdo::linear_combination(
        l.n(),
        [(alpha.clone(), &Lpdo::schrodinger(l.n(), &lambda)), (beta.clone(), &Lpdo::identity(l.n()))],
    )?;
    if rebuilt != *l {
        return Ok(Theorem1Verdict::Rejected {
            reason: ForbiddenLowerTerm,
            lambda_candidate: Some(lambda_c),
        });
    }
    if !check_boost_invariance_fixed_gauge(l, &lambda)?.is_invariant() {
        return Err(Error::Internal("classified operator fails its own boost check".into()));
    }
    let theta = if lambda.is_zero() {
        PhaseSpec::XIndependent
    } else {
        PhaseSpec::quadratic(lambda.clone(), BigRational::zero())?
    };
    Ok(Theorem1Verdict::Accepted(Theorem1Accept {
        alpha,
        beta,
        lambda,
        theta,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem2Rejection {
    OddOrder,
    ResidualXiDependence,
    NonConstantCoefficients,
    RotationFailure,
}

impl fmt::Display for Theorem2Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem2Rejection::OddOrder => "odd-order",
            Theorem2Rejection::ResidualXiDependence => "residual-xi-dependence",
            Theorem2Rejection::NonConstantCoefficients => "non-constant-coefficients",
            Theorem2Rejection::RotationFailure => "rotation-failure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem2Verdict {
    /// `L = sum_j coeffs[j] (2 i lambda Dt + Lap)^j`, last entry nonzero.
    Accepted { coeffs: Vec<GaussianRational> },
    Rejected { reason: Theorem2Rejection },
}

impl Theorem2Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Theorem2Verdict::Accepted { .. })
    }

    pub fn coeffs(&self) -> Option<&[GaussianRational]> {
        match self {
            Theorem2Verdict::Accepted { coeffs } => Some(coeffs),
            Theorem2Verdict::Rejected { .. } => None,
        }
    }

    pub fn rejection(&self) -> Option<Theorem2Rejection> {
        match self {
            Theorem2Verdict::Accepted { .. } => None,
            Theorem2Verdict::Rejected { reason } => Some(*reason),
        }
    }
}

/// Order-`m` classification at a fixed `lambda != 0`.
///
/// With `mu = 2 lambda tau + |xi|^2` the symbol of `2 i lambda Dt + Lap` is
/// `-mu`. Substituting `tau = (mu - |xi|^2) / (2 lambda)` leaves a polynomial
/// `r(mu, xi)`; `L` is a polynomial in the Schrödinger operator iff `r` does not
/// depend on `xi`, and then `a_j = (-1)^j [mu^j] r`.
pub fn classify_order_m(l: &Lpdo, lambda: &BigRational) -> Result<Theorem2Verdict> {
    use Theorem2Rejection::*;

    if lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    let reject = |reason| Ok(Theorem2Verdict::Rejected { reason });
    if !l.is_constant_coefficient() {
        return reject(NonConstantCoefficients);
    }
    if !rotation_generator_check(l)?.is_invariant() {
        return reject(RotationFailure);
    }
    let s = l.space();
    let inv_two_lambda = (lambda * BigRational::from_integer(2.into())).recip();
    let tau_image = (&s.var(s.mu()) - &s.xi_norm_sqr()).scale_rational(&inv_two_lambda);
    let r = symbol_of(l).poly().substitute(&HashMap::from([(s.tau(), tau_image)]))?;
    if !r.is_free_of(&s.xi_vars()) {
        return reject(ResidualXiDependence);
    }
    if l.order() % 2 == 1 {
        return reject(OddOrder);
    }
    let k_max = l.order() / 2;
    let by_power = r.coefficients_in(s.mu());
    let coeffs: Vec<GaussianRational> = (0..=k_max)
        .map(|j| {
            let c = by_power.get(&j).map(MultiPoly::constant_term).unwrap_or_default();
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    if by_power.keys().any(|&j| j > k_max) || coeffs[k_max as usize].is_zero() {
        return Err(Error::Internal("rewritten symbol disagrees with the operator order".into()));
    }
    Ok(Theorem2Verdict::Accepted { coeffs })
}

/// `sum_j coeffs[j] (2 i lambda Dt + Lap)^j` in dimension `n`. Trailing zero
/// coefficients are dropped.
pub fn synthesize(n: usize, lambda: &BigRational, coeffs: &[GaussianRational]) -> Result<Lpdo> {
    let top = coeffs.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroOperator)?;
    let base = Lpdo::schrodinger(n, lambda);
    let powers = (0..=top as u32).map(|j| power_const(&base, j)).collect::<Result<Vec<_>>>()?;
    Lpdo::linear_combination(n, coeffs[..=top].iter().cloned().zip(powers.iter()))
}

/// Result of removing the constant term by a linear-in-time phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeNormalization {
    /// `alpha (2 i lambda Dt + Lap)`.
    pub operator: Lpdo,
    /// Exponent `phi(t) = -beta t / (2 alpha lambda)` of `e^{i phi} L e^{-i phi}`.
    pub phase: MultiPoly,
    /// True when `phi` is real, so that `e^{+-i phi}` is a global gauge.
    pub global_gauge: bool,
}

/// Conjugates the constant `beta` away: `e^{i phi} L e^{-i phi} = alpha (2 i lambda Dt + Lap)`.
pub fn normalize_gauge(verdict: &Theorem1Verdict, l: &Lpdo) -> Result<GaugeNormalization> {
    let acc = verdict.accepted().ok_or(Error::NotAccepted)?;
    if acc.lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    let s = l.space();
    let denom = acc.alpha.scale(&(&acc.lambda * BigRational::from_integer(2.into())));
    let gamma = -(acc.beta.checked_div(&denom)?);
    let phase = s.var(s.t()).scale(&gamma);
    let operator = conjugate_linear_phase(l, &phase)?;
    let target = Lpdo::schrodinger(l.n(), &acc.lambda).scale(&acc.alpha)?;
    if operator != target {
        return Err(Error::Internal("normalized operator is not alpha times the Schrödinger operator".into()));
    }
    Ok(GaugeNormalization {
        operator,
        global_gauge: phase.is_real(),
        phase,
    })
}
