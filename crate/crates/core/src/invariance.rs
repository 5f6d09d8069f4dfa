//! Exact decision procedures for translation, rotation and gauged-boost
//! invariance.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{all_signed_permutations, fmt_rational, cayley_orthogonal, Exponents, GaussianRational, MultiPoly, OrthogonalMatrix, RationalMatrix};
use crate::error::{Error, Result};
use crate::galilei::{boost_residue_at, conj_boost_gauge, conj_rotation, conj_translation, rotation_bindings, Translation};
use crate::operator::{symbol_of, Derivative, Lpdo};
use crate::oracle::{random_rational, SamplePlan};
use crate::space::Space;

/// Number of Cayley rotations used to cross-check the generator criterion.
pub const ROTATION_SAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Invariant,
    NotInvariant,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Invariant => "invariant",
            Verdict::NotInvariant => "not-invariant",
        })
    }
}

/// Certificate for an accepted check, or witness for a rejected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    ConstantCoefficients,
    /// All `so(n)` generators and coordinate reflections annihilate every `p_j`;
    /// `samples` orthogonal matrices were cross-checked.
    GeneratorAnnihilation { samples: usize },
    ZeroSubstitutionResidue,
    /// Coefficient of `derivative` contains `monomial`; shifting along one of its
    /// variables by `shift` changes the operator.
    NonConstantCoefficient {
        derivative: Derivative,
        monomial: Exponents,
        shift: Translation,
    },
    /// `(xi_a d/dxi_b - xi_b d/dxi_a) p_j = image != 0`; `moved_by` is a sampled
    /// rotation that moves the operator, when one was found.
    RotationGenerator {
        time_order: u32,
        a: usize,
        b: usize,
        image: MultiPoly,
        moved_by: Option<OrthogonalMatrix>,
    },
    /// `p_j` is not even in `xi_axis`.
    Reflection {
        time_order: u32,
        axis: usize,
        reflection: OrthogonalMatrix,
    },
    /// `p(boosted frequency) - p(tau, xi) = defect != 0` at a concrete point.
    BoostDefect {
        lambda: BigRational,
        v: Vec<BigRational>,
        tau: GaussianRational,
        xi: Vec<GaussianRational>,
        defect: GaussianRational,
    },
}

fn monomial_text(e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| {
            let name = if v == 0 { "t".to_string() } else { format!("x{v}") };
            if k == 1 {
                name
            } else {
                format!("{name}^{k}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn list_text<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::ConstantCoefficients => f.write_str("all coefficients are constant"),
            Evidence::GeneratorAnnihilation { samples } => {
                write!(f, "rotation generators and reflections annihilate every p_j; {samples} orthogonal samples agree")
            }
            Evidence::ZeroSubstitutionResidue => f.write_str("boosted symbol equals the symbol identically"),
            Evidence::NonConstantCoefficient {
                derivative,
                monomial,
                shift,
            } => {
                let y: Vec<String> = shift.y.iter().map(fmt_rational).collect();
                write!(
                    f,
                    "coefficient of {derivative} contains {}; translation by s={}, y=({}) changes it",
                    monomial_text(monomial),
                    fmt_rational(&shift.s),
                    y.join(", ")
                )
            }
            Evidence::RotationGenerator {
                time_order,
                a,
                b,
                image,
                moved_by,
            } => {
                write!(f, "xi{a}*d/dxi{b} - xi{b}*d/dxi{a} maps p_{time_order} to {image}")?;
                match moved_by {
                    Some(r) => write!(f, "; R = {:?} moves the operator", r.matrix()),
                    None => Ok(()),
                }
            }
            Evidence::Reflection { time_order, axis, .. } => write!(f, "p_{time_order} is not even in xi{axis}"),
            Evidence::BoostDefect { v, tau, xi, defect, .. } => {
                let v: Vec<String> = v.iter().map(fmt_rational).collect();
                write!(f, "v=({}), tau={tau}, xi={}: boosted symbol minus symbol = {defect}", v.join(", "), list_text(xi))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl CheckReport {
    pub fn is_invariant(&self) -> bool {
        self.verdict == Verdict::Invariant
    }

    /// Replays a failure witness against `l`. Accepting reports return `true`.
    pub fn reverify(&self, l: &Lpdo) -> Result<bool> {
        Ok(match &self.evidence {
            Evidence::ConstantCoefficients | Evidence::GeneratorAnnihilation { .. } | Evidence::ZeroSubstitutionResidue => true,
            Evidence::NonConstantCoefficient { derivative, shift, .. } => {
                conj_translation(l, shift)?.coefficient(derivative) != l.coefficient(derivative)
            }
            Evidence::RotationGenerator {
                time_order,
                a,
                b,
                image,
                moved_by,
            } => {
                let parts = time_parts(l);
                let pj = parts.get(time_order).cloned().unwrap_or_else(|| l.space().zero());
                let fresh = generator_image(l.space(), &pj, *a, *b)?;
                let moved = match moved_by {
                    Some(r) => conj_rotation(l, r)? != *l,
                    None => true,
                };
                !fresh.is_zero() && fresh == *image && moved
            }
            Evidence::Reflection { reflection, .. } => conj_rotation(l, reflection)? != *l,
            Evidence::BoostDefect {
                lambda, v, tau, xi, defect, ..
            } => {
                let fresh = boost_residue_at(l, lambda, v, tau, xi)?;
                !fresh.is_zero() && fresh == *defect
            }
        })
    }
}

/// Translation invariance holds iff every coefficient is constant.
pub fn check_translation_invariance(l: &Lpdo) -> CheckReport {
    let s = l.space();
    for (d, c) in l.coeffs() {
        if c.is_constant() {
            continue;
        }
        let (monomial, _) = c
            .sorted_terms()
            .into_iter()
            .find(|(e, _)| e.iter().any(|&k| k > 0))
            .expect("non-constant coefficient has a non-constant monomial");
        let var = monomial.iter().position(|&k| k > 0).expect("non-constant monomial");
        let mut shift = Translation::zero(s.n());
        if var == s.t() {
            shift.s = BigRational::one();
        } else {
            shift.y[var - 1] = BigRational::one();
        }
        return CheckReport {
            verdict: Verdict::NotInvariant,
            evidence: Evidence::NonConstantCoefficient {
                derivative: d.clone(),
                monomial: monomial.clone(),
                shift,
            },
        };
    }
    CheckReport {
        verdict: Verdict::Invariant,
        evidence: Evidence::ConstantCoefficients,
    }
}

/// `p = sum_j p_j(xi) (i tau)^j`, returned as `j -> p_j`.
pub(crate) fn time_parts(l: &Lpdo) -> HashMap<u32, MultiPoly> {
    let s = l.space();
    symbol_of(l)
        .poly()
        .coefficients_in(s.tau())
        .into_iter()
        .map(|(j, c)| {
            let k = j % 4;
            (j, c.scale(&GaussianRational::i_pow((4 - k) % 4)))
        })
        .collect()
}

fn generator_image(space: &Space, p: &MultiPoly, a: usize, b: usize) -> Result<MultiPoly> {
    let (xa, xb) = (space.xi(a), space.xi(b));
    Ok(&(&space.var(xa) * &p.partial(xb)?) - &(&space.var(xb) * &p.partial(xa)?))
}

fn reflect(space: &Space, p: &MultiPoly, axis: usize) -> Result<MultiPoly> {
    let x = space.xi(axis);
    p.substitute(&HashMap::from([(x, -space.var(x))]))
}

fn reflection_matrix(n: usize, axis: usize) -> OrthogonalMatrix {
    let mut m = RationalMatrix::identity(n);
    m.set(axis - 1, axis - 1, -BigRational::one());
    OrthogonalMatrix::new(m).expect("coordinate reflection")
}

/// `count` Cayley rotations from random skew matrices, plus every signed
/// permutation when `n <= 3`.
pub fn sample_orthogonal(n: usize, plan: &SamplePlan) -> Vec<OrthogonalMatrix> {
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..plan.count {
        let mut a = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let r = random_rational(&mut rng, plan.bound);
                a.set(i, j, r.clone());
                a.set(j, i, -r);
            }
        }
        out.push(cayley_orthogonal(&a).expect("skew-symmetric by construction"));
    }
    if n <= 3 {
        out.extend(all_signed_permutations(n));
    } else {
        out.extend((1..=n).map(|a| reflection_matrix(n, a)));
    }
    out
}

fn default_rotation_plan() -> SamplePlan {
    SamplePlan {
        count: ROTATION_SAMPLES,
        bound: 4,
        ..SamplePlan::default()
    }
}

/// O(n)-invariance of a constant-coefficient operator by the infinitesimal
/// criterion alone: every generator `xi_a d_b - xi_b d_a` kills each `p_j`, and
/// each `p_j` is even in every `xi_a`.
pub fn rotation_generator_check(l: &Lpdo) -> Result<CheckReport> {
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let s = l.space();
    let n = s.n();
    let mut parts: Vec<(u32, MultiPoly)> = time_parts(l).into_iter().collect();
    parts.sort_by_key(|(j, _)| *j);
    for (j, pj) in &parts {
        for a in 1..=n {
            for b in a + 1..=n {
                let image = generator_image(s, pj, a, b)?;
                if !image.is_zero() {
                    return Ok(CheckReport {
                        verdict: Verdict::NotInvariant,
                        evidence: Evidence::RotationGenerator {
                            time_order: *j,
                            a,
                            b,
                            image,
                            moved_by: None,
                        },
                    });
                }
            }
        }
        for axis in 1..=n {
            if reflect(s, pj, axis)? != *pj {
                return Ok(CheckReport {
                    verdict: Verdict::NotInvariant,
                    evidence: Evidence::Reflection {
                        time_order: *j,
                        axis,
                        reflection: reflection_matrix(n, axis),
                    },
                });
            }
        }
    }
    Ok(CheckReport {
        verdict: Verdict::Invariant,
        evidence: Evidence::GeneratorAnnihilation { samples: 0 },
    })
}

/// [`rotation_generator_check`] cross-checked against sampled exact orthogonal
/// matrices. A generator failure is accompanied by a sampled rotation that
/// moves the operator when one exists.
pub fn check_rotation_invariance(l: &Lpdo) -> Result<CheckReport> {
    let mut report = rotation_generator_check(l)?;
    let s = l.space();
    let samples = sample_orthogonal(s.n(), &default_rotation_plan());
    match &mut report.evidence {
        Evidence::RotationGenerator { moved_by, .. } => {
            *moved_by = samples.iter().find(|r| conj_rotation(l, r).is_ok_and(|m| m != *l)).cloned();
        }
        Evidence::GeneratorAnnihilation { samples: count } => {
            let p = symbol_of(l).into_poly();
            for r in &samples {
                if p.substitute(&rotation_bindings(s, r))? != p {
                    return Err(Error::Internal(format!("generator criterion accepted but {r:?} moves the symbol")));
                }
            }
            *count = samples.len();
        }
        _ => {}
    }
    Ok(report)
}

/// `p_j(xi) = sum_k b_{jk} |xi|^{2k}` for every time order `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialDecomposition {
    pub n: usize,
    pub m: u32,
    /// `coefficients[j][k] = b_{jk}`, with `2k <= m - j`.
    pub coefficients: Vec<Vec<GaussianRational>>,
}

impl RadialDecomposition {
    pub fn b(&self, j: u32, k: u32) -> GaussianRational {
        self.coefficients
            .get(j as usize)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// `sum_j sum_k b_{jk} |xi|^{2k} (i tau)^j`.
    pub fn reconstruct(&self) -> MultiPoly {
        let s = Space::new(self.n);
        let r2 = s.xi_norm_sqr();
        let i_tau = s.var(s.tau()).scale(&GaussianRational::i());
        let mut out = s.zero();
        for (j, row) in self.coefficients.iter().enumerate() {
            let tpow = i_tau.try_pow(j as u32).expect("within degree cap");
            for (k, b) in row.iter().enumerate() {
                out = out + &r2.try_pow(k as u32).expect("within degree cap").scale(b) * &tpow;
            }
        }
        out
    }
}

/// Radial decomposition of a rotation-invariant constant-coefficient operator.
pub fn radial_decompose(l: &Lpdo) -> Result<RadialDecomposition> {
    if !rotation_generator_check(l)?.is_invariant() {
        return Err(Error::NotRotationInvariant);
    }
    let s = l.space();
    let m = l.order();
    let parts = time_parts(l);
    let xi_vars = s.xi_vars();
    let at_e1: HashMap<usize, GaussianRational> = (1..=s.n())
        .map(|a| (s.xi(a), if a == 1 { GaussianRational::one() } else { GaussianRational::zero() }))
        .collect();
    let r2 = s.xi_norm_sqr();
    let mut coefficients = Vec::new();
    for j in 0..=m {
        let pj = parts.get(&j).cloned().unwrap_or_else(|| s.zero());
        let mut row = vec![GaussianRational::zero(); ((m - j) / 2 + 1) as usize];
        for (d, part) in pj.homogeneous_parts(&xi_vars) {
            if d % 2 == 1 {
                return Err(Error::Internal(format!("odd-degree invariant part of degree {d} in p_{j} is nonzero")));
            }
            let k = (d / 2) as usize;
            if k >= row.len() {
                return Err(Error::Internal(format!("p_{j} has degree {d} beyond order {m}")));
            }
            row[k] = part.evaluate_partial(&at_e1)?.constant_term();
        }
        let rebuilt = row
            .iter()
            .enumerate()
            .fold(s.zero(), |acc, (k, b)| acc + r2.try_pow(k as u32).expect("within degree cap").scale(b));
        if rebuilt != pj {
            return Err(Error::Internal(format!("p_{j} is not a polynomial in |xi|^2")));
        }
        coefficients.push(row);
    }
    Ok(RadialDecomposition {
        n: s.n(),
        m,
        coefficients,
    })
}

/// Invariance under `e^{i theta_v} G_v^*` for the quadratic gauge family with
/// parameter `lambda` (the x-independent family when `lambda = 0`).
pub fn check_boost_invariance_fixed_gauge(l: &Lpdo, lambda: &BigRational) -> Result<CheckReport> {
    if !l.is_constant_coefficient() {
        return Err(Error::VariableCoefficients);
    }
    let s = l.space();
    let residue = conj_boost_gauge(l, lambda)?.try_sub(symbol_of(l).poly())?;
    if residue.is_zero() {
        return Ok(CheckReport {
            verdict: Verdict::Invariant,
            evidence: Evidence::ZeroSubstitutionResidue,
        });
    }
    let n = s.n();
    let plan = SamplePlan::default();
    let mut rng = plan.rng();
    for attempt in 0..10_000 {
        let v: Vec<BigRational> = if attempt < n {
            (0..n).map(|a| if a == attempt { BigRational::one() } else { BigRational::zero() }).collect()
        } else {
            (0..n).map(|_| random_rational(&mut rng, plan.bound)).collect()
        };
        let tau: GaussianRational = random_rational(&mut rng, plan.bound).into();
        let xi: Vec<GaussianRational> = (0..n).map(|_| random_rational(&mut rng, plan.bound).into()).collect();
        let defect = boost_residue_at(l, lambda, &v, &tau, &xi)?;
        if !defect.is_zero() {
            return Ok(CheckReport {
                verdict: Verdict::NotInvariant,
                evidence: Evidence::BoostDefect {
                    lambda: lambda.clone(),
                    v,
                    tau,
                    xi,
                    defect,
                },
            });
        }
    }
    Err(Error::Internal("nonzero boost residue vanished at every sampled point".into()))
}
