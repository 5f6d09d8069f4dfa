//! Linear partial differential operators `L = sum a_{j,alpha}(t,x) Dt^j D^alpha`
//! and their plane-wave symbols `p(t,x,tau,xi) = sum a_{j,alpha} (i tau)^j (i xi)^alpha`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;

use crate::algebra::{Exponents, GaussianRational, MultiPoly};
use crate::error::{Error, Result};
use crate::space::Space;

/// A derivative `Dt^j Dx1^alpha_1 ... Dxn^alpha_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Derivative {
    pub j: u32,
    pub alpha: Vec<u32>,
}

impl Derivative {
    pub fn new(j: u32, alpha: Vec<u32>) -> Self {
        Self { j, alpha }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(0, vec![0; n])
    }

    pub fn dt(n: usize, j: u32) -> Self {
        Self::new(j, vec![0; n])
    }

    /// `Dx_a^k` with `a` in `1..=n`.
    pub fn dx(n: usize, a: usize, k: u32) -> Self {
        let mut alpha = vec![0; n];
        alpha[a - 1] = k;
        Self::new(0, alpha)
    }

    pub fn order(&self) -> u32 {
        self.j + self.alpha.iter().sum::<u32>()
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.j + other.j,
            self.alpha.iter().zip(&other.alpha).map(|(a, b)| a + b).collect(),
        )
    }
}

/// `Dt^j*Dx1^a1*...`, or `I` for the identity.
impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        let mut push = |name: String, k: u32| match k {
            0 => {}
            1 => factors.push(name),
            k => factors.push(format!("{name}^{k}")),
        };
        push("Dt".into(), self.j);
        for (a, &k) in self.alpha.iter().enumerate() {
            push(format!("Dx{}", a + 1), k);
        }
        if factors.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

pub type CoeffMap = BTreeMap<Derivative, MultiPoly>;

/// An operator of order `m` with polynomial coefficients in `(t, x)`.
///
/// Zero coefficients are never stored and the order is the effective one: some
/// key with `j + |alpha| = m` carries a nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Lpdo {
    space: Space,
    order: u32,
    coeffs: CoeffMap,
}

impl Lpdo {
    /// Validates coefficients and recomputes the effective order.
    pub fn new(n: usize, coeffs: impl IntoIterator<Item = (Derivative, MultiPoly)>) -> Result<Self> {
        let space = Space::new(n);
        let positions = space.position_vars();
        let others: Vec<usize> = (0..space.universe().len()).filter(|v| !positions.contains(v)).collect();
        let mut map = CoeffMap::new();
        for (d, c) in coeffs {
            if d.alpha.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: d.alpha.len(),
                });
            }
            if c.universe() != space.universe() {
                return Err(Error::UniverseMismatch);
            }
            if !c.is_free_of(&others) {
                return Err(Error::SymbolVariables);
            }
            let slot = map.entry(d).or_insert_with(|| space.zero());
            *slot = slot.try_add(&c)?;
        }
        map.retain(|_, c| !c.is_zero());
        let order = map.keys().map(Derivative::order).max().ok_or(Error::ZeroOperator)?;
        Ok(Self {
            space,
            order,
            coeffs: map,
        })
    }

    /// Like [`Lpdo::new`] with a declared order: keys above `m` are rejected,
    /// a declared order above the effective one is normalized down.
    pub fn with_declared_order(n: usize, m: u32, coeffs: impl IntoIterator<Item = (Derivative, MultiPoly)>) -> Result<Self> {
        let l = Self::new(n, coeffs)?;
        if l.order > m {
            return Err(Error::Internal(format!(
                "coefficient of order {} exceeds the declared order {m}",
                l.order
            )));
        }
        Ok(l)
    }

    /// Operator with constant coefficients.
    pub fn from_constants(n: usize, terms: impl IntoIterator<Item = (Derivative, GaussianRational)>) -> Result<Self> {
        let space = Space::new(n);
        Self::new(n, terms.into_iter().map(|(d, c)| (d, space.constant(c))))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_constants(n, [(Derivative::identity(n), GaussianRational::one())]).expect("identity")
    }

    pub fn laplacian(n: usize) -> Self {
        Self::from_constants(n, (1..=n).map(|a| (Derivative::dx(n, a, 2), GaussianRational::one()))).expect("laplacian")
    }

    /// `2 i lambda Dt + Lap`; for `lambda = 0` this is the Laplacian.
    pub fn schrodinger(n: usize, lambda: &BigRational) -> Self {
        let two_i_lambda = GaussianRational::new(BigRational::from_integer(0.into()), lambda * BigRational::from_integer(2.into()));
        let mut terms: Vec<_> = (1..=n).map(|a| (Derivative::dx(n, a, 2), GaussianRational::one())).collect();
        terms.push((Derivative::dt(n, 1), two_i_lambda));
        Self::from_constants(n, terms).expect("schrodinger operator")
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coeffs(&self) -> &CoeffMap {
        &self.coeffs
    }

    pub fn coefficient(&self, d: &Derivative) -> MultiPoly {
        self.coeffs.get(d).cloned().unwrap_or_else(|| self.space.zero())
    }

    /// Constant value of a coefficient; only meaningful for constant operators.
    pub fn constant_coefficient(&self, d: &Derivative) -> GaussianRational {
        self.coeffs.get(d).map(MultiPoly::constant_term).unwrap_or_default()
    }

    pub fn is_constant_coefficient(&self) -> bool {
        self.coeffs.values().all(MultiPoly::is_constant)
    }

    pub fn scale(&self, c: &GaussianRational) -> Result<Self> {
        Self::new(self.n(), self.coeffs.iter().map(|(d, p)| (d.clone(), p.scale(c))))
    }

    /// `sum_k c_k L_k`; fails with [`Error::ZeroOperator`] if everything cancels.
    pub fn linear_combination<'a>(n: usize, parts: impl IntoIterator<Item = (GaussianRational, &'a Lpdo)>) -> Result<Self> {
        let mut all = Vec::new();
        for (c, l) in parts {
            if l.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: l.n(),
                });
            }
            all.extend(l.coeffs.iter().map(|(d, p)| (d.clone(), p.scale(&c))));
        }
        Self::new(n, all)
    }

    fn require_constant(&self) -> Result<()> {
        if self.is_constant_coefficient() {
            Ok(())
        } else {
            Err(Error::VariableCoefficients)
        }
    }
}

impl fmt::Debug for Lpdo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lpdo(n={}, m={}, {})", self.n(), self.order, crate::text::print_operator(self))
    }
}

impl fmt::Display for Lpdo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_operator(self))
    }
}

/// Plane-wave symbol: a polynomial in `(t, x, tau, xi)` of joint degree `m` in
/// `(tau, xi)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Symbol {
    space: Space,
    order: u32,
    poly: MultiPoly,
}

impl Symbol {
    pub fn new(space: &Space, poly: MultiPoly) -> Result<Self> {
        if poly.universe() != space.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut forbidden = space.v_vars();
        forbidden.push(space.mu());
        if !poly.is_free_of(&forbidden) {
            return Err(Error::SymbolVariables);
        }
        let order = poly.degree_in_vars(&space.frequency_vars()).unwrap_or(0);
        Ok(Self {
            space: space.clone(),
            order,
            poly,
        })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }
}

/// `p(t,x,tau,xi) = sum a_{j,alpha}(t,x) (i tau)^j (i xi)^alpha`.
pub fn symbol_of(l: &Lpdo) -> Symbol {
    let s = &l.space;
    let mut p = s.zero();
    for (d, a) in &l.coeffs {
        let mut e = vec![0; s.universe().len()];
        e[s.tau()] = d.j;
        for (k, &ak) in d.alpha.iter().enumerate() {
            e[s.xi(k + 1)] = ak;
        }
        let mono = MultiPoly::monomial(s.universe(), e, GaussianRational::i_pow(d.order()));
        p = p + a * &mono;
    }
    Symbol::new(s, p).expect("symbol of a valid operator")
}

/// Inverse of [`symbol_of`]: reads `L = p(t, x, -i Dt, -i grad)` back off the
/// symbol's monomials.
pub fn operator_of(p: &Symbol) -> Result<Lpdo> {
    let s = &p.space;
    let n = s.n();
    let mut coeffs: Vec<(Derivative, MultiPoly)> = Vec::new();
    for (e, c) in p.poly.terms() {
        let j = e[s.tau()];
        let alpha: Vec<u32> = (1..=n).map(|a| e[s.xi(a)]).collect();
        let d = Derivative::new(j, alpha);
        let mut rest: Exponents = e.clone();
        for v in s.frequency_vars() {
            rest[v] = 0;
        }
        // c = a * i^k  =>  a = c * i^(4 - k mod 4)
        let k = d.order() % 4;
        let a = c * &GaussianRational::i_pow((4 - k) % 4);
        coeffs.push((d, MultiPoly::monomial(s.universe(), rest, a)));
    }
    Lpdo::new(n, coeffs)
}

/// A frequency `(tau, xi_1..xi_n)` whose entries may be symbolic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frequency {
    pub tau: MultiPoly,
    pub xi: Vec<MultiPoly>,
}

impl Frequency {
    /// The frequency variables themselves.
    pub fn symbolic(space: &Space) -> Self {
        Self {
            tau: space.var(space.tau()),
            xi: (1..=space.n()).map(|a| space.var(space.xi(a))).collect(),
        }
    }

    pub fn concrete(space: &Space, tau: GaussianRational, xi: Vec<GaussianRational>) -> Result<Self> {
        if xi.len() != space.n() {
            return Err(Error::DimensionMismatch {
                expected: space.n(),
                found: xi.len(),
            });
        }
        Ok(Self {
            tau: space.constant(tau),
            xi: xi.into_iter().map(|c| space.constant(c)).collect(),
        })
    }

    /// Bindings `tau -> self.tau`, `xi_a -> self.xi[a]`.
    pub fn bindings(&self, space: &Space) -> HashMap<usize, MultiPoly> {
        let mut b = HashMap::from([(space.tau(), self.tau.clone())]);
        for (a, x) in self.xi.iter().enumerate() {
            b.insert(space.xi(a + 1), x.clone());
        }
        b
    }

    /// `tau t + xi . x`.
    pub fn phase(&self, space: &Space) -> MultiPoly {
        let mut ph = &self.tau * &space.var(space.t());
        for (a, x) in self.xi.iter().enumerate() {
            ph = ph + x * &space.var(space.x(a + 1));
        }
        ph
    }
}

/// `amplitude * exp(i * phase)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpWave {
    pub amplitude: MultiPoly,
    pub phase: MultiPoly,
}

impl ExpWave {
    /// `e_xi = exp(i (tau t + xi . x))`.
    pub fn plane_wave(space: &Space, freq: &Frequency) -> Self {
        Self {
            amplitude: space.one(),
            phase: freq.phase(space),
        }
    }

    /// True when every phase coefficient is real.
    pub fn has_real_phase(&self) -> bool {
        self.phase.is_real()
    }
}

/// `L e_xi = p(x, xi) e_xi`.
pub fn apply_plane_wave(l: &Lpdo, freq: &Frequency) -> Result<ExpWave> {
    let s = &l.space;
    if freq.xi.len() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            found: freq.xi.len(),
        });
    }
    let amplitude = symbol_of(l).poly.substitute(&freq.bindings(s))?;
    Ok(ExpWave {
        amplitude,
        phase: freq.phase(s),
    })
}

/// Composition of constant-coefficient operators through symbol products.
pub fn compose_const(l1: &Lpdo, l2: &Lpdo) -> Result<Lpdo> {
    if l1.n() != l2.n() {
        return Err(Error::DimensionMismatch {
            expected: l1.n(),
            found: l2.n(),
        });
    }
    l1.require_constant()?;
    l2.require_constant()?;
    let p = symbol_of(l1).poly.try_mul(&symbol_of(l2).poly)?;
    operator_of(&Symbol::new(&l1.space, p)?)
}

/// `k`-th power under [`compose_const`]; `L^0` is the identity.
pub fn power_const(l: &Lpdo, k: u32) -> Result<Lpdo> {
    let mut acc = Lpdo::identity(l.n());
    for _ in 0..k {
        acc = compose_const(&acc, l)?;
    }
    Ok(acc)
}

/// `e^{i phi} L e^{-i phi}` for an affine phase `phi = c0 + gamma t + b . x`.
///
/// On symbols this is the shift `tau -> tau - gamma`, `xi_a -> xi_a - b_a`.
pub fn conjugate_linear_phase(l: &Lpdo, phi: &MultiPoly) -> Result<Lpdo> {
    let s = &l.space;
    if phi.universe() != s.universe() {
        return Err(Error::UniverseMismatch);
    }
    let positions = s.position_vars();
    let others: Vec<usize> = (0..s.universe().len()).filter(|v| !positions.contains(v)).collect();
    if !phi.is_free_of(&others) {
        return Err(Error::PhaseVariables);
    }
    let deg = phi.total_degree().unwrap_or(0);
    if deg > 1 {
        return Err(Error::PhaseDegree(deg));
    }
    l.require_constant()?;
    let slope = |var: usize| phi.partial(var).map(|d| d.constant_term());
    let mut bindings = HashMap::new();
    bindings.insert(s.tau(), &s.var(s.tau()) - &s.constant(slope(s.t())?));
    for a in 1..=s.n() {
        bindings.insert(s.xi(a), &s.var(s.xi(a)) - &s.constant(slope(s.x(a))?));
    }
    let p = symbol_of(l).poly.substitute(&bindings)?;
    operator_of(&Symbol::new(s, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gq(p: i64, q: i64, r: i64, s: i64) -> GaussianRational {
        GaussianRational::from_ratios(p, q, r, s)
    }

    fn schrodinger(n: usize) -> Lpdo {
        Lpdo::schrodinger(n, &BigRational::from_integer(1.into()))
    }

    #[test]
    fn symbol_of_schrodinger() {
        let l = schrodinger(2);
        let s = l.space().clone();
        let want = -(&(&s.var(s.tau()).scale(&2.into()) + &s.xi_norm_sqr()));
        assert_eq!(symbol_of(&l).poly(), &want);
        assert_eq!(symbol_of(&l).order(), 2);
    }

    #[test]
    fn symbol_of_identity_and_variable_coefficient() {
        assert_eq!(symbol_of(&Lpdo::identity(1)).poly(), &Space::new(1).one());
        let s = Space::new(1);
        let l = Lpdo::new(1, [(Derivative::dx(1, 1, 1), s.var(s.t()))]).unwrap();
        let want = (&s.var(s.t()) * &s.var(s.xi(1))).scale(&GaussianRational::i());
        assert_eq!(symbol_of(&l).poly(), &want);
    }

    #[test]
    fn operator_of_examples() {
        let s = Space::new(2);
        let p = -(&(&s.var(s.tau()).scale(&2.into()) + &s.xi_norm_sqr()));
        assert_eq!(operator_of(&Symbol::new(&s, p).unwrap()).unwrap(), schrodinger(2));
        assert_eq!(operator_of(&Symbol::new(&s, s.one()).unwrap()).unwrap(), Lpdo::identity(2));
        let p = s.var(s.xi(1)).scale(&GaussianRational::i());
        let dx1 = Lpdo::from_constants(2, [(Derivative::dx(2, 1, 1), GaussianRational::one())]).unwrap();
        assert_eq!(operator_of(&Symbol::new(&s, p).unwrap()).unwrap(), dx1);
    }

    #[test]
    fn plane_wave_examples() {
        let s = Space::new(2);
        let dx1 = Lpdo::from_constants(2, [(Derivative::dx(2, 1, 1), GaussianRational::one())]).unwrap();
        let w = apply_plane_wave(&dx1, &Frequency::symbolic(&s)).unwrap();
        assert_eq!(w.amplitude, s.var(s.xi(1)).scale(&GaussianRational::i()));
        assert_eq!(w.phase, Frequency::symbolic(&s).phase(&s));

        let f = Frequency::concrete(&s, 1.into(), vec![1.into(), 1.into()]).unwrap();
        let w = apply_plane_wave(&schrodinger(2), &f).unwrap();
        assert_eq!(w.amplitude, s.constant((-4).into()));

        let w = apply_plane_wave(&Lpdo::identity(2), &f).unwrap();
        assert_eq!(w.amplitude, s.one());
    }

    #[test]
    fn compose_examples() {
        let lap = Lpdo::laplacian(1);
        let want = Lpdo::from_constants(1, [(Derivative::dx(1, 1, 4), GaussianRational::one())]).unwrap();
        assert_eq!(compose_const(&lap, &lap).unwrap(), want);

        let sch = schrodinger(1);
        let want = Lpdo::from_constants(
            1,
            [
                (Derivative::dt(1, 2), (-4).into()),
                (Derivative::new(1, vec![2]), gq(0, 1, 4, 1)),
                (Derivative::dx(1, 1, 4), 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(compose_const(&sch, &sch).unwrap(), want);
        assert_eq!(compose_const(&Lpdo::identity(1), &sch).unwrap(), sch);
    }

    #[test]
    fn compose_rejects_variable_coefficients() {
        let s = Space::new(1);
        let l = Lpdo::new(1, [(Derivative::dx(1, 1, 1), s.var(s.t()))]).unwrap();
        assert_eq!(compose_const(&l, &l), Err(Error::VariableCoefficients));
    }

    #[test]
    fn conjugate_by_time_phase() {
        let s = Space::new(1);
        let gamma = gq(3, 2, 0, 1);
        let dt = Lpdo::from_constants(1, [(Derivative::dt(1, 1), GaussianRational::one())]).unwrap();
        let phi = s.var(s.t()).scale(&gamma);
        let want = Lpdo::from_constants(
            1,
            [
                (Derivative::dt(1, 1), GaussianRational::one()),
                (Derivative::identity(1), -(&GaussianRational::i() * &gamma)),
            ],
        )
        .unwrap();
        assert_eq!(conjugate_linear_phase(&dt, &phi).unwrap(), want);
        assert_eq!(conjugate_linear_phase(&dt, &s.zero()).unwrap(), dt);
    }

    #[test]
    fn conjugation_removes_constant_term() {
        // e^{beta t/(2 i alpha lambda)} L e^{-beta t/(2 i alpha lambda)} = alpha(2 i lambda Dt + Lap)
        let s = Space::new(2);
        let alpha = gq(2, 3, -1, 1);
        let beta = gq(5, 1, 1, 2);
        let lambda = BigRational::new(3.into(), 2.into());
        let core = Lpdo::schrodinger(2, &lambda).scale(&alpha).unwrap();
        let l = Lpdo::linear_combination(2, [(GaussianRational::one(), &core), (beta.clone(), &Lpdo::identity(2))]).unwrap();
        let two_alpha_lambda = (&alpha * &GaussianRational::from_real(lambda)).scale(&BigRational::from_integer(2.into()));
        let phi = s.var(s.t()).scale(&-(&beta / &two_alpha_lambda));
        assert_eq!(conjugate_linear_phase(&l, &phi).unwrap(), core);
    }

    #[test]
    fn conjugation_rejects_quadratic_phase() {
        let s = Space::new(1);
        let phi = &s.var(s.x(1)) * &s.var(s.x(1));
        assert_eq!(conjugate_linear_phase(&Lpdo::identity(1), &phi), Err(Error::PhaseDegree(2)));
    }

    #[test]
    fn order_is_effective() {
        let l = Lpdo::with_declared_order(1, 4, [(Derivative::dt(1, 1), Space::new(1).one())]).unwrap();
        assert_eq!(l.order(), 1);
        assert_eq!(Lpdo::new(1, [(Derivative::dt(1, 1), Space::new(1).zero())]), Err(Error::ZeroOperator));
    }
}
