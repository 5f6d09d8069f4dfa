//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Every polynomial carries the [`Universe`] it lives in. Terms are stored in a
//! `BTreeMap` keyed by exponent vector with zero coefficients never stored, so
//! structural equality is mathematical equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

/// Default bound on the total degree of any polynomial produced by a product.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

pub type Exponents = Vec<u32>;

/// Ordered list of named variables plus the total-degree cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
    degree_cap: u32,
}

impl Universe {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        Self::with_degree_cap(names, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap<S: Into<String>>(names: impl IntoIterator<Item = S>, degree_cap: u32) -> Arc<Self> {
        Arc::new(Self {
            names: names.into_iter().map(Into::into).collect(),
            degree_cap,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone)]
pub struct MultiPoly {
    universe: Arc<Universe>,
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(universe: &Arc<Universe>, c: GaussianRational) -> Self {
        Self::monomial(universe, vec![0; universe.len()], c)
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, GaussianRational::one())
    }

    /// The variable with index `var`. Panics if `var` is out of range.
    pub fn var(universe: &Arc<Universe>, var: usize) -> Self {
        assert!(var < universe.len(), "variable index out of range");
        let mut e = vec![0; universe.len()];
        e[var] = 1;
        Self::monomial(universe, e, GaussianRational::one())
    }

    pub fn monomial(universe: &Arc<Universe>, exponents: Exponents, c: GaussianRational) -> Self {
        assert_eq!(exponents.len(), universe.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Self {
            universe: universe.clone(),
            terms,
        }
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(universe: &Arc<Universe>, terms: impl IntoIterator<Item = (Exponents, GaussianRational)>) -> Self {
        let mut p = Self::zero(universe);
        for (e, c) in terms {
            assert_eq!(e.len(), universe.len(), "exponent vector length");
            p.add_term(e, &c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponents, GaussianRational)> {
        self.terms.into_iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> GaussianRational {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Constant term (value at the origin).
    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&vec![0; self.universe.len()])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Joint degree in a subset of variables; `None` for zero.
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).sum()).max()
    }

    /// True when no term involves any of `vars`.
    pub fn is_free_of(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|e| vars.iter().all(|&v| e[v] == 0))
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    fn add_term(&mut self, e: Exponents, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    /// Product, failing on universe mismatch or when the degree cap is exceeded.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        if let (Some(a), Some(b)) = (self.total_degree(), other.total_degree()) {
            let cap = self.universe.degree_cap;
            if a + b > cap {
                return Err(Error::DegreeCapExceeded { degree: a + b, cap });
            }
        }
        let mut out = Self::zero(&self.universe);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.universe);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        Self {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&GaussianRational::from_real(r.clone()))
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Result<Self> {
        if var >= self.universe.len() {
            return Err(Error::UnknownVariable(format!("#{var}")));
        }
        let mut out = Self::zero(&self.universe);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] -= 1;
            out.add_term(e2, &c.scale(&BigRational::from_integer(k.into())));
        }
        Ok(out)
    }

    /// Partial derivative by variable name.
    pub fn partial_by_name(&self, name: &str) -> Result<Self> {
        self.partial(self.universe.index_of(name)?)
    }

    /// Composes `self` with `bindings`: every bound variable is replaced by its
    /// polynomial, unbound variables pass through.
    pub fn substitute(&self, bindings: &HashMap<usize, MultiPoly>) -> Result<Self> {
        for (&v, b) in bindings {
            if v >= self.universe.len() {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
            self.check_universe(b)?;
        }
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        // powers of each bound polynomial, grown on demand
        let mut powers: HashMap<usize, Vec<MultiPoly>> = bindings
            .iter()
            .map(|(&v, b)| (v, vec![Self::one(&self.universe), b.clone()]))
            .collect();
        let mut out = Self::zero(&self.universe);
        for (e, c) in &self.terms {
            let mut free = e.clone();
            let mut factor = Self::one(&self.universe);
            for (&v, pw) in powers.iter_mut() {
                let k = e[v] as usize;
                if k == 0 {
                    continue;
                }
                free[v] = 0;
                while pw.len() <= k {
                    let next = pw.last().unwrap().try_mul(&pw[1])?;
                    pw.push(next);
                }
                factor = factor.try_mul(&pw[k])?;
            }
            let free_degree: u32 = free.iter().sum();
            let degree = free_degree + factor.total_degree().unwrap_or(0);
            if degree > self.universe.degree_cap {
                return Err(Error::DegreeCapExceeded {
                    degree,
                    cap: self.universe.degree_cap,
                });
            }
            for (fe, fc) in factor.terms {
                let e: Exponents = free.iter().zip(&fe).map(|(x, y)| x + y).collect();
                out.add_term(e, &(c * &fc));
            }
        }
        Ok(out)
    }

    /// Substitutes constants for some variables.
    pub fn evaluate_partial(&self, values: &HashMap<usize, GaussianRational>) -> Result<Self> {
        let mut out = Self::zero(&self.universe);
        for &v in values.keys() {
            if v >= self.universe.len() {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
        }
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut free = e.clone();
            for (&v, x) in values {
                if e[v] > 0 {
                    coeff *= &x.pow(e[v]);
                    free[v] = 0;
                }
            }
            out.add_term(free, &coeff);
        }
        Ok(out)
    }

    /// Evaluates at a full point (one value per universe variable).
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.universe.len() {
            return Err(Error::DimensionMismatch {
                expected: self.universe.len(),
                found: point.len(),
            });
        }
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= &x.pow(k);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Splits into pieces homogeneous in `vars`, keyed by their joint degree.
    pub fn homogeneous_parts(&self, vars: &[usize]) -> BTreeMap<u32, MultiPoly> {
        let mut parts: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = vars.iter().map(|&v| e[v]).sum();
            parts
                .entry(d)
                .or_insert_with(|| Self::zero(&self.universe))
                .add_term(e.clone(), c);
        }
        parts
    }

    /// Collects coefficients of powers of `var`: `self = sum_k out[k] * var^k`.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var];
            rest[var] = 0;
            out.entry(k)
                .or_insert_with(|| Self::zero(&self.universe))
                .add_term(rest, c);
        }
        out
    }

    /// Terms sorted graded-lexicographically (highest first) over the declared
    /// variable order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &GaussianRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self + &rhs
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("universe mismatch in add")
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("universe mismatch in sub")
    }
}

/// Panics on universe mismatch or degree-cap overflow; fallible callers use
/// [`MultiPoly::try_mul`].
impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial product")
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Add<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: &MultiPoly) -> MultiPoly {
        self.check_universe(rhs).expect("universe mismatch in add");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
        self
    }
}

impl Sub<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: &MultiPoly) -> MultiPoly {
        self.check_universe(rhs).expect("universe mismatch in sub");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), &-c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-GaussianRational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn fmt_coeff(c: &GaussianRational) -> String {
    if c.is_real() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.universe.name(v).to_string()
                    } else {
                        format!("{}^{}", self.universe.name(v), k)
                    }
                })
                .collect();
            let (neg, mag) = if c.is_real() && c.re() < &BigRational::from_integer(0.into()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if idx > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if factors.is_empty() {
                f.write_str(&fmt_coeff(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_coeff(&mag))?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni() -> Arc<Universe> {
        Universe::new(["tau", "xi1", "xi2", "v1"])
    }

    #[test]
    fn substitute_expands_binomial() {
        let u = uni();
        let (tau, xi1, v1) = (MultiPoly::var(&u, 0), MultiPoly::var(&u, 1), MultiPoly::var(&u, 3));
        let p = &tau * &tau;
        let b = HashMap::from([(0, &tau - &(&xi1 * &v1))]);
        let got = p.substitute(&b).unwrap();
        let two = GaussianRational::from_int(2);
        let want = &(&(&tau * &tau) - &(&tau * &xi1 * &v1).scale(&two)) + &(&xi1 * &xi1 * &v1 * &v1);
        assert_eq!(got, want);
    }

    #[test]
    fn substitute_identity_when_unbound() {
        let u = uni();
        let xi1 = MultiPoly::var(&u, 1);
        assert_eq!(xi1.substitute(&HashMap::new()).unwrap(), xi1);
    }

    #[test]
    fn schrodinger_symbol_is_a_fixed_point() {
        // n = 1, lambda = 1
        let u = uni();
        let (tau, xi1, v1) = (MultiPoly::var(&u, 0), MultiPoly::var(&u, 1), MultiPoly::var(&u, 3));
        let two = GaussianRational::from_int(2);
        let half = GaussianRational::from_ratios(1, 2, 0, 1);
        let p = -&(&tau.scale(&two) + &(&xi1 * &xi1));
        let b = HashMap::from([
            (0, &(&tau - &(&xi1 * &v1)) - &(&v1 * &v1).scale(&half)),
            (1, &xi1 + &v1),
        ]);
        assert_eq!(p.substitute(&b).unwrap(), p);
    }

    #[test]
    fn substitute_rejects_foreign_universe() {
        let u = uni();
        let other = Universe::new(["a", "b", "c", "d"]);
        let b = HashMap::from([(0, MultiPoly::var(&other, 0))]);
        assert_eq!(MultiPoly::var(&u, 0).substitute(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn partial_examples() {
        let u = uni();
        let (tau, xi1, xi2) = (MultiPoly::var(&u, 0), MultiPoly::var(&u, 1), MultiPoly::var(&u, 2));
        let r = &(&xi1 * &xi1) + &(&xi2 * &xi2);
        assert_eq!(r.partial(1).unwrap(), xi1.scale(&GaussianRational::from_int(2)));
        assert!((&xi1 * &xi1).partial(2).unwrap().is_zero());
        let t3 = tau.try_pow(3).unwrap();
        assert_eq!(t3.partial(0).unwrap(), (&tau * &tau).scale(&GaussianRational::from_int(3)));
        assert!(matches!(tau.partial(9), Err(Error::UnknownVariable(_))));
        assert!(matches!(tau.partial_by_name("mu"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn degree_cap_fails_fast() {
        let u = Universe::with_degree_cap(["z"], 8);
        let z = MultiPoly::var(&u, 0);
        assert!(z.try_pow(8).is_ok());
        assert_eq!(
            z.try_pow(9),
            Err(Error::DegreeCapExceeded { degree: 9, cap: 8 })
        );
    }

    #[test]
    fn display_is_graded_lex() {
        let u = uni();
        let (tau, xi1) = (MultiPoly::var(&u, 0), MultiPoly::var(&u, 1));
        let p = &(&tau.scale(&GaussianRational::from_int(-2)) - &(&xi1 * &xi1)) + &MultiPoly::constant(&u, GaussianRational::i());
        assert_eq!(p.to_string(), "-xi1^2 - 2*tau + (i)");
    }
}
