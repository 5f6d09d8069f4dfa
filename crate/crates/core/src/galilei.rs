//! Galilei group elements and their conjugation actions on operators.
//!
//! Every action is written as a conjugation `g . L = g* L (g*)^{-1}` so that an
//! operator is invariant under `g` exactly when it is a fixed point.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::gaussian::fmt_rational;
use crate::algebra::{GaussianRational, MultiPoly, OrthogonalMatrix};
use crate::error::{Error, Result};
use crate::operator::{operator_of, symbol_of, Frequency, Lpdo, Symbol};
use crate::space::Space;

/// Space-time shift `(s, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub s: BigRational,
    pub y: Vec<BigRational>,
}

impl Translation {
    pub fn new(s: BigRational, y: Vec<BigRational>) -> Self {
        Self { s, y }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(BigRational::zero(), vec![BigRational::zero(); n])
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            &self.s + &other.s,
            self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        )
    }
}

/// Boost velocity, either a concrete rational vector or the symbols `v1..vn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Boost {
    Concrete(Vec<BigRational>),
    Symbolic(usize),
}

impl Boost {
    pub fn n(&self) -> usize {
        match self {
            Boost::Concrete(v) => v.len(),
            Boost::Symbolic(n) => *n,
        }
    }

    pub fn components(&self, space: &Space) -> Result<Vec<MultiPoly>> {
        if self.n() != space.n() {
            return Err(Error::DimensionMismatch {
                expected: space.n(),
                found: self.n(),
            });
        }
        Ok(match self {
            Boost::Concrete(v) => v.iter().map(|c| space.constant(c.clone().into())).collect(),
            Boost::Symbolic(n) => (1..=*n).map(|a| space.var(space.v(a))).collect(),
        })
    }
}

/// Gauge family attached to a boost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhaseSpec {
    /// `theta_v(t,x) = c + lambda v.x - (lambda/2) t |v|^2` with `lambda != 0`.
    Quadratic { lambda: BigRational, c: BigRational },
    /// `theta_v(t,x) = theta_v(t,0)`.
    XIndependent,
}

impl PhaseSpec {
    pub fn quadratic(lambda: BigRational, c: BigRational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::LambdaZero);
        }
        Ok(PhaseSpec::Quadratic { lambda, c })
    }

    /// Formula text with the constant `c` left symbolic.
    pub fn formula_free_constant(&self) -> String {
        match self {
            PhaseSpec::Quadratic { lambda, .. } => quadratic_formula("c".to_string(), lambda),
            PhaseSpec::XIndependent => "theta_v(t,0)".to_string(),
        }
    }
}

impl fmt::Display for PhaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseSpec::Quadratic { lambda, c } => {
                let head = if c.is_zero() { String::new() } else { fmt_rational(c) };
                f.write_str(&quadratic_formula(head, lambda))
            }
            PhaseSpec::XIndependent => f.write_str("theta_v(t,0)"),
        }
    }
}

fn coefficient_prefix(r: &BigRational) -> String {
    if r.is_one() {
        String::new()
    } else if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("({})", fmt_rational(r))
    }
}

fn quadratic_formula(head: String, lambda: &BigRational) -> String {
    let half = lambda / BigRational::from_integer(2.into());
    let mut out = head;
    let mut push = |coef: &BigRational, body: &str| {
        let sign = if coef.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if coef.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&coefficient_prefix(&coef.abs()));
        out.push_str(body);
    };
    push(lambda, "v.x");
    push(&-half, "t|v|^2");
    out
}

/// A gauge phase and its polynomial realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    pub spec: PhaseSpec,
    /// `theta_v` as a polynomial in `(t, x)` (plus `v` when the boost is
    /// symbolic). For the x-independent family this is the constant `c`.
    pub phase: MultiPoly,
}

/// `theta_v(t,x) = c + lambda v.x - (lambda/2) t |v|^2` for `lambda != 0`, and
/// the x-independent family (represented by the constant `c`) for `lambda = 0`.
pub fn theta_of(space: &Space, lambda: &BigRational, c: &BigRational, v: &Boost) -> Result<Theta> {
    let comps = v.components(space)?;
    let constant = space.constant(c.clone().into());
    if lambda.is_zero() {
        return Ok(Theta {
            spec: PhaseSpec::XIndependent,
            phase: constant,
        });
    }
    let mut v_dot_x = space.zero();
    let mut v_sq = space.zero();
    for (a, va) in comps.iter().enumerate() {
        v_dot_x = v_dot_x + va * &space.var(space.x(a + 1));
        v_sq = v_sq + va * va;
    }
    let half = lambda / BigRational::from_integer(2.into());
    let phase = constant + v_dot_x.scale_rational(lambda) - (&space.var(space.t()) * &v_sq).scale_rational(&half);
    Ok(Theta {
        spec: PhaseSpec::quadratic(lambda.clone(), c.clone())?,
        phase,
    })
}

/// `a(t,x) -> a(t+s, x+y)` on every coefficient.
pub fn conj_translation(l: &Lpdo, shift: &Translation) -> Result<Lpdo> {
    let s = l.space();
    if shift.y.len() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            found: shift.y.len(),
        });
    }
    let mut bindings = HashMap::from([(s.t(), &s.var(s.t()) + &s.constant(shift.s.clone().into()))]);
    for (a, ya) in shift.y.iter().enumerate() {
        let x = s.x(a + 1);
        bindings.insert(x, &s.var(x) + &s.constant(ya.clone().into()));
    }
    let coeffs = l
        .coeffs()
        .iter()
        .map(|(d, c)| Ok((d.clone(), c.substitute(&bindings)?)))
        .collect::<Result<Vec<_>>>()?;
    Lpdo::new(s.n(), coeffs)
}

/// Bindings `xi -> R^T xi`.
pub(crate) fn rotation_bindings(space: &Space, r: &OrthogonalMatrix) -> HashMap<usize, MultiPoly> {
    (1..=space.n())
        .map(|a| {
            let image = (1..=space.n()).fold(space.zero(), |acc, b| {
                acc + space.var(space.xi(b)).scale_rational(r.get(b - 1, a - 1))
            });
            (space.xi(a), image)
        })
        .collect()
}

/// Rotation conjugation on constant-coefficient operators:
/// `symbol(result)(tau, xi) = symbol(L)(tau, R^T xi)`.
pub fn conj_rotation(l: &Lpdo, r: &OrthogonalMatrix) -> Result<Lpdo> {
    let s = l.space();
    if r.dim() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            found: r.dim(),
        });
    }
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let p = symbol_of(l).into_poly().substitute(&rotation_bindings(s, r))?;
    operator_of(&Symbol::new(s, p)?)
}

/// Result of transporting a plane wave through a gauged boost:
/// `e^{i theta_v} G_v^* e_xi = e^{ic} e_{frequency}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoostedFrequency {
    pub frequency: Frequency,
    /// `c`, so that the scalar factor is `e^{ic}`.
    pub phase_constant: BigRational,
}

/// `(tau, xi) -> (tau - xi.v - (lambda/2)|v|^2, xi + lambda v)`.
pub fn boost_frequency_map(space: &Space, freq: &Frequency, v: &Boost, lambda: &BigRational, c: &BigRational) -> Result<BoostedFrequency> {
    if freq.xi.len() != space.n() {
        return Err(Error::DimensionMismatch {
            expected: space.n(),
            found: freq.xi.len(),
        });
    }
    let comps = v.components(space)?;
    let mut xi_dot_v = space.zero();
    let mut v_sq = space.zero();
    for (xa, va) in freq.xi.iter().zip(&comps) {
        xi_dot_v = xi_dot_v + xa * va;
        v_sq = v_sq + va * va;
    }
    let half = lambda / BigRational::from_integer(2.into());
    let tau = &(&freq.tau - &xi_dot_v) - &v_sq.scale_rational(&half);
    let xi = freq
        .xi
        .iter()
        .zip(&comps)
        .map(|(xa, va)| xa + &va.scale_rational(lambda))
        .collect();
    Ok(BoostedFrequency {
        frequency: Frequency { tau, xi },
        phase_constant: c.clone(),
    })
}

/// `q(tau, xi, v) = p(tau - xi.v - (lambda/2)|v|^2, xi + lambda v)` with symbolic `v`.
///
/// `L` commutes with the gauged boosts of this family iff `q - p = 0`.
pub fn conj_boost_gauge(l: &Lpdo, lambda: &BigRational) -> Result<MultiPoly> {
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let s = l.space();
    let moved = boost_frequency_map(s, &Frequency::symbolic(s), &Boost::Symbolic(s.n()), lambda, &BigRational::zero())?;
    symbol_of(l).poly().substitute(&moved.frequency.bindings(s))
}

/// `p(boosted frequency) - p(tau, xi)` at a concrete boost, as a polynomial in
/// `(tau, xi)`.
pub fn boost_residue(l: &Lpdo, lambda: &BigRational, v: &[BigRational]) -> Result<MultiPoly> {
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let s = l.space();
    let moved = boost_frequency_map(s, &Frequency::symbolic(s), &Boost::Concrete(v.to_vec()), lambda, &BigRational::zero())?;
    let p = symbol_of(l).into_poly();
    p.substitute(&moved.frequency.bindings(s))?.try_sub(&p)
}

/// `p(boosted frequency) - p(tau, xi)` at a concrete boost and frequency.
pub fn boost_residue_at(l: &Lpdo, lambda: &BigRational, v: &[BigRational], tau: &GaussianRational, xi: &[GaussianRational]) -> Result<GaussianRational> {
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let s = l.space();
    let freq = Frequency::concrete(s, tau.clone(), xi.to_vec())?;
    let moved = boost_frequency_map(s, &freq, &Boost::Concrete(v.to_vec()), lambda, &BigRational::zero())?;
    let p = symbol_of(l);
    let at = |f: &Frequency| -> Result<GaussianRational> { Ok(p.poly().substitute(&f.bindings(s))?.constant_term()) };
    Ok(&at(&moved.frequency)? - &at(&freq)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cayley_orthogonal;
    use crate::algebra::RationalMatrix;
    use crate::operator::Derivative;

    #[test]
    fn residue_at_concrete_boost() {
        let sch = Lpdo::schrodinger(2, &q(1, 1));
        assert!(boost_residue(&sch, &q(1, 1), &[q(2, 3), q(-1, 1)]).unwrap().is_zero());
        let r = boost_residue(&sch, &q(2, 1), &[q(1, 1), q(0, 1)]).unwrap();
        assert!(!r.is_zero());
        let tau = GaussianRational::from_int(3);
        let xi = [GaussianRational::from_int(1), GaussianRational::from_int(-2)];
        let s = sch.space();
        let mut point = vec![GaussianRational::zero(); s.universe().len()];
        point[s.tau()] = tau.clone();
        point[s.xi(1)] = xi[0].clone();
        point[s.xi(2)] = xi[1].clone();
        assert_eq!(r.evaluate(&point).unwrap(), boost_residue_at(&sch, &q(2, 1), &[q(1, 1), q(0, 1)], &tau, &xi).unwrap());
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn dx(n: usize, a: usize) -> Lpdo {
        Lpdo::from_constants(n, [(Derivative::dx(n, a, 1), GaussianRational::one())]).unwrap()
    }

    #[test]
    fn translation_shifts_coefficients() {
        let s = Space::new(1);
        let l = Lpdo::new(1, [(Derivative::dx(1, 1, 1), s.var(s.t()))]).unwrap();
        let moved = conj_translation(&l, &Translation::new(q(1, 1), vec![q(0, 1)])).unwrap();
        let want = Lpdo::new(1, [(Derivative::dx(1, 1, 1), &s.var(s.t()) + &s.one())]).unwrap();
        assert_eq!(moved, want);
        assert_ne!(moved, l);

        let s2 = Space::new(2);
        let l = Lpdo::new(2, [(Derivative::identity(2), s2.var(s2.x(1)))]).unwrap();
        let moved = conj_translation(&l, &Translation::new(q(0, 1), vec![q(1, 1), q(0, 1)])).unwrap();
        let want = Lpdo::new(2, [(Derivative::identity(2), &s2.var(s2.x(1)) + &s2.one())]).unwrap();
        assert_eq!(moved, want);
    }

    #[test]
    fn translation_fixes_constant_operators() {
        let l = Lpdo::schrodinger(2, &q(1, 1));
        let shift = Translation::new(q(-3, 7), vec![q(2, 5), q(9, 1)]);
        assert_eq!(conj_translation(&l, &shift).unwrap(), l);
        assert!(matches!(
            conj_translation(&l, &Translation::new(q(0, 1), vec![q(0, 1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rotation_examples() {
        let a = RationalMatrix::from_ratios(&[&[(0, 1), (1, 2)], &[(-1, 2), (0, 1)]]).unwrap();
        let r = cayley_orthogonal(&a).unwrap();
        assert_eq!(conj_rotation(&Lpdo::laplacian(2), &r).unwrap(), Lpdo::laplacian(2));
        let dt = Lpdo::from_constants(2, [(Derivative::dt(2, 1), GaussianRational::one())]).unwrap();
        assert_eq!(conj_rotation(&dt, &r).unwrap(), dt);

        // i (R^T xi)_1 = i (R_11 xi_1 + R_21 xi_2) = (3/5) i xi_1 + (4/5) i xi_2
        let want = Lpdo::from_constants(
            2,
            [
                (Derivative::dx(2, 1, 1), GaussianRational::from_ratios(3, 5, 0, 1)),
                (Derivative::dx(2, 2, 1), GaussianRational::from_ratios(4, 5, 0, 1)),
            ],
        )
        .unwrap();
        assert_eq!(conj_rotation(&dx(2, 1), &r).unwrap(), want);
    }

    #[test]
    fn rotation_rejects_variable_coefficients() {
        let s = Space::new(2);
        let l = Lpdo::new(2, [(Derivative::dx(2, 1, 1), s.var(s.x(2)))]).unwrap();
        assert_eq!(conj_rotation(&l, &OrthogonalMatrix::identity(2)), Err(Error::VariableCoefficients));
    }

    #[test]
    fn frequency_map_examples() {
        let s = Space::new(1);
        let f = Frequency::concrete(&s, 0.into(), vec![1.into()]).unwrap();
        let same = boost_frequency_map(&s, &f, &Boost::Concrete(vec![q(0, 1)]), &q(1, 1), &q(0, 1)).unwrap();
        assert_eq!(same.frequency, f);

        let moved = boost_frequency_map(&s, &f, &Boost::Concrete(vec![q(2, 1)]), &q(1, 1), &q(0, 1)).unwrap();
        assert_eq!(moved.frequency, Frequency::concrete(&s, (-4).into(), vec![3.into()]).unwrap());

        let sym = boost_frequency_map(&s, &Frequency::symbolic(&s), &Boost::Symbolic(1), &q(1, 1), &q(0, 1)).unwrap();
        let (tau, xi, v) = (s.var(s.tau()), s.var(s.xi(1)), s.var(s.v(1)));
        let want_tau = &(&tau - &(&xi * &v)) - &(&v * &v).scale_rational(&q(1, 2));
        assert_eq!(sym.frequency.tau, want_tau);
        assert_eq!(sym.frequency.xi, vec![&xi + &v]);
    }

    #[test]
    fn boost_gauge_examples() {
        let sch = Lpdo::schrodinger(2, &q(1, 1));
        assert_eq!(&conj_boost_gauge(&sch, &q(1, 1)).unwrap(), symbol_of(&sch).poly());

        let lap = Lpdo::laplacian(1);
        let s = lap.space().clone();
        let got = conj_boost_gauge(&lap, &q(1, 1)).unwrap();
        let shifted = &s.var(s.xi(1)) + &s.var(s.v(1));
        assert_eq!(got, -(&shifted * &shifted));
        assert_ne!(&got, symbol_of(&lap).poly());

        let id = Lpdo::identity(3);
        assert_eq!(conj_boost_gauge(&id, &q(1, 1)).unwrap(), Space::new(3).one());
    }

    #[test]
    fn theta_examples() {
        let s = Space::new(2);
        let th = theta_of(&s, &q(1, 1), &q(0, 1), &Boost::Symbolic(2)).unwrap();
        let mut want = s.zero();
        for a in 1..=2 {
            let v = s.var(s.v(a));
            want = want + &v * &s.var(s.x(a)) - (&s.var(s.t()) * &(&v * &v)).scale_rational(&q(1, 2));
        }
        assert_eq!(th.phase, want);
        assert_eq!(th.spec.formula_free_constant(), "c + v.x - (1/2)t|v|^2");

        let th = theta_of(&s, &q(3, 1), &q(5, 2), &Boost::Concrete(vec![q(0, 1), q(0, 1)])).unwrap();
        assert_eq!(th.phase, s.constant(GaussianRational::from_ratios(5, 2, 0, 1)));

        let s1 = Space::new(1);
        let th = theta_of(&s1, &q(2, 1), &q(0, 1), &Boost::Concrete(vec![q(1, 1)])).unwrap();
        assert_eq!(th.phase, &s1.var(s1.x(1)).scale_rational(&q(2, 1)) - &s1.var(s1.t()));
        assert_eq!(th.spec.to_string(), "2v.x - t|v|^2");

        let th = theta_of(&s1, &q(0, 1), &q(1, 1), &Boost::Symbolic(1)).unwrap();
        assert_eq!(th.spec, PhaseSpec::XIndependent);
    }

    #[test]
    fn formula_signs() {
        assert_eq!(quadratic_formula("c".into(), &q(-1, 1)), "c - v.x + (1/2)t|v|^2");
        assert_eq!(quadratic_formula(String::new(), &q(1, 2)), "(1/2)v.x - (1/4)t|v|^2");
    }
}
