//! Brute-force verification path.
//!
//! Operators are applied literally to `amplitude * exp(i phase)` functions by
//! the product and chain rules. Nothing here goes through `symbol_of`, so the
//! results can be compared against the symbol calculus as an independent route.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::{Error, Result};
use crate::galilei::{theta_of, Boost};
use crate::operator::{Derivative, ExpWave, Frequency, Lpdo};
use crate::space::Space;

/// Seed used whenever a caller does not choose one.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Deterministic sampling parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePlan {
    pub seed: u64,
    pub count: usize,
    /// Numerators lie in `[-bound, bound]`, denominators in `[1, bound]`.
    pub bound: i64,
}

impl Default for SamplePlan {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            count: 20,
            bound: 16,
        }
    }
}

impl SamplePlan {
    pub fn new(seed: u64, count: usize, bound: i64) -> Self {
        assert!(count > 0 && bound > 0, "sample plan needs positive count and bound");
        Self { seed, count, bound }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn random_gaussian<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::new(random_rational(rng, bound), random_rational(rng, bound))
}

/// `d/dz (A e^{i phi}) = (dA/dz + i A dphi/dz) e^{i phi}`, iterated over the
/// derivative's multi-index.
pub fn differentiate_expwave(space: &Space, w: &ExpWave, d: &Derivative) -> Result<ExpWave> {
    if d.alpha.len() != space.n() {
        return Err(Error::DimensionMismatch {
            expected: space.n(),
            found: d.alpha.len(),
        });
    }
    let mut steps = vec![space.t(); d.j as usize];
    for (a, &k) in d.alpha.iter().enumerate() {
        steps.extend(std::iter::repeat_n(space.x(a + 1), k as usize));
    }
    let mut amplitude = w.amplitude.clone();
    let i = GaussianRational::i();
    for var in steps {
        let dphi = w.phase.partial(var)?;
        amplitude = amplitude.partial(var)?.try_add(&amplitude.try_mul(&dphi)?.scale(&i))?;
    }
    Ok(ExpWave {
        amplitude,
        phase: w.phase.clone(),
    })
}

/// `L w` by term-by-term differentiation; the phase is unchanged.
pub fn apply_by_differentiation(l: &Lpdo, w: &ExpWave) -> Result<ExpWave> {
    let s = l.space();
    let mut amplitude = s.zero();
    for (d, a) in l.coeffs() {
        let dw = differentiate_expwave(s, w, d)?;
        amplitude = amplitude.try_add(&a.try_mul(&dw.amplitude)?)?;
    }
    Ok(ExpWave {
        amplitude,
        phase: w.phase.clone(),
    })
}

/// `(G_v^* f)(t, x) = f(t, x - t v)` applied to amplitude and phase.
fn pull_back_boost(space: &Space, w: &ExpWave, v: &[BigRational]) -> Result<ExpWave> {
    let t = space.var(space.t());
    let bindings: HashMap<usize, MultiPoly> = v
        .iter()
        .enumerate()
        .map(|(a, va)| {
            let x = space.x(a + 1);
            (x, &space.var(x) - &t.scale_rational(va))
        })
        .collect();
    Ok(ExpWave {
        amplitude: w.amplitude.substitute(&bindings)?,
        phase: w.phase.substitute(&bindings)?,
    })
}

/// Amplitude of `L(e^{i theta_v} G_v^* e_xi) - e^{i theta_v} G_v^*(L e_xi)` on the
/// plane wave with symbolic frequency. Both sides share the phase
/// `theta_v + tau t + xi.(x - t v)`, so the defect is a polynomial in
/// `(t, x, tau, xi)`; it is zero iff the gauged boost commutes with `L` on every
/// plane wave.
pub fn boost_commutator_defect(l: &Lpdo, lambda: &BigRational, v: &[BigRational], c: &BigRational) -> Result<MultiPoly> {
    let s = l.space();
    if v.len() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            found: v.len(),
        });
    }
    let theta = theta_of(s, lambda, c, &Boost::Concrete(v.to_vec()))?.phase;
    let plane = ExpWave::plane_wave(s, &Frequency::symbolic(s));

    // left: L applied to the gauged, boosted plane wave
    let boosted = pull_back_boost(s, &plane, v)?;
    let gauged = ExpWave {
        amplitude: boosted.amplitude,
        phase: boosted.phase.try_add(&theta)?,
    };
    let left = apply_by_differentiation(l, &gauged)?;

    // right: gauge and boost applied to L e_xi
    let l_plane = apply_by_differentiation(l, &plane)?;
    let pulled = pull_back_boost(s, &l_plane, v)?;
    let right_phase = pulled.phase.try_add(&theta)?;
    if right_phase != left.phase {
        return Err(Error::Internal("commutator sides carry different phases".into()));
    }
    left.amplitude.try_sub(&pulled.amplitude)
}

/// Outcome of [`sampled_identity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleVerdict {
    AllEqual { samples: usize, seed: u64 },
    Discrepancy {
        point: Vec<GaussianRational>,
        left: GaussianRational,
        right: GaussianRational,
        seed: u64,
    },
}

impl SampleVerdict {
    pub fn all_equal(&self) -> bool {
        matches!(self, SampleVerdict::AllEqual { .. })
    }
}

/// Evaluates both polynomials at `plan.count` random rational points.
pub fn sampled_identity_check(left: &MultiPoly, right: &MultiPoly, plan: &SamplePlan) -> Result<SampleVerdict> {
    if left.universe() != right.universe() {
        return Err(Error::UniverseMismatch);
    }
    let mut rng = plan.rng();
    let dims = left.universe().len();
    for _ in 0..plan.count {
        let point: Vec<GaussianRational> = (0..dims).map(|_| random_rational(&mut rng, plan.bound).into()).collect();
        let (l, r) = (left.evaluate(&point)?, right.evaluate(&point)?);
        if l != r {
            return Ok(SampleVerdict::Discrepancy {
                point,
                left: l,
                right: r,
                seed: plan.seed,
            });
        }
    }
    Ok(SampleVerdict::AllEqual {
        samples: plan.count,
        seed: plan.seed,
    })
}

/// Random constant-coefficient operator of exact order `m` in dimension `n`.
/// Each admissible derivative is kept with probability one half; one order-`m`
/// term is always present.
pub fn random_constant_operator<R: Rng>(rng: &mut R, n: usize, m: u32, bound: i64) -> Lpdo {
    let derivs = derivatives_up_to(n, m);
    let top: Vec<&Derivative> = derivs.iter().filter(|d| d.order() == m).collect();
    let forced = top[rng.gen_range(0..top.len())].clone();
    let mut terms = Vec::new();
    for d in derivs.iter().filter(|d| **d != forced) {
        if rng.gen_bool(0.5) {
            terms.push((d.clone(), random_gaussian(rng, bound)));
        }
    }
    let mut c = random_gaussian(rng, bound);
    if c.is_zero() {
        c = GaussianRational::one();
    }
    terms.push((forced, c));
    Lpdo::from_constants(n, terms).expect("random operator has a top-order term")
}

/// Random operator of exact order `m` whose coefficients are polynomials in
/// `(t, x)` of degree at most `coeff_degree`. With `coeff_degree >= 1` at least
/// one coefficient is non-constant.
pub fn random_polynomial_operator<R: Rng>(rng: &mut R, n: usize, m: u32, coeff_degree: u32, bound: i64) -> Lpdo {
    let space = Space::new(n);
    let derivs = derivatives_up_to(n, m);
    let top: Vec<&Derivative> = derivs.iter().filter(|d| d.order() == m).collect();
    let forced = top[rng.gen_range(0..top.len())].clone();
    let mut terms = Vec::new();
    for d in derivs.iter().filter(|d| **d != forced) {
        if rng.gen_bool(0.5) {
            terms.push((d.clone(), random_position_poly(rng, &space, coeff_degree, bound)));
        }
    }
    let mut lead = space.one();
    if coeff_degree >= 1 {
        let vars = space.position_vars();
        lead = lead + space.var(vars[rng.gen_range(0..vars.len())]);
    }
    terms.push((forced, lead));
    Lpdo::new(n, terms).expect("random operator has a top-order term")
}

/// Random polynomial in `(t, x)` of total degree at most `degree`.
pub fn random_position_poly<R: Rng>(rng: &mut R, space: &Space, degree: u32, bound: i64) -> MultiPoly {
    let vars = space.position_vars();
    let mut p = space.zero();
    for _ in 0..=(degree as usize + 1) {
        let mut e = vec![0u32; space.universe().len()];
        let mut left = rng.gen_range(0..=degree);
        while left > 0 {
            e[vars[rng.gen_range(0..vars.len())]] += 1;
            left -= 1;
        }
        p = p + MultiPoly::monomial(space.universe(), e, random_gaussian(rng, bound));
    }
    p
}

/// All derivatives `Dt^j D^alpha` with `j + |alpha| <= m`.
pub fn derivatives_up_to(n: usize, m: u32) -> Vec<Derivative> {
    let mut out = Vec::new();
    for total in 0..=m {
        for j in 0..=total {
            for alpha in compositions(total - j, n) {
                out.push(Derivative::new(j, alpha));
            }
        }
    }
    out
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}
