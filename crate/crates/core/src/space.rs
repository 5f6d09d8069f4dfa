//! The variable universe `(t, x1..xn, tau, xi1..xin, v1..vn, mu)` shared by
//! every polynomial attached to an operator in dimension `n`.

use std::sync::{Arc, Mutex, OnceLock};

use std::collections::HashMap;

use crate::algebra::{GaussianRational, MultiPoly, Universe};

/// Index layout of the standard universe for spatial dimension `n`.
#[derive(Debug, Clone)]
pub struct Space {
    n: usize,
    universe: Arc<Universe>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for Space {}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Universe>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Universe>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl Space {
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "spatial dimension must be at least 1");
        let universe = cache()
            .lock()
            .expect("universe cache")
            .entry(n)
            .or_insert_with(|| {
                let mut names = vec!["t".to_string()];
                names.extend((1..=n).map(|a| format!("x{a}")));
                names.push("tau".into());
                names.extend((1..=n).map(|a| format!("xi{a}")));
                names.extend((1..=n).map(|a| format!("v{a}")));
                names.push("mu".into());
                Universe::new(names)
            })
            .clone();
        Self { n, universe }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn t(&self) -> usize {
        0
    }

    /// Spatial coordinate, `a` in `1..=n`.
    pub fn x(&self, a: usize) -> usize {
        debug_assert!((1..=self.n).contains(&a));
        a
    }

    pub fn tau(&self) -> usize {
        self.n + 1
    }

    /// Spatial frequency, `a` in `1..=n`.
    pub fn xi(&self, a: usize) -> usize {
        debug_assert!((1..=self.n).contains(&a));
        self.n + 1 + a
    }

    /// Boost velocity component, `a` in `1..=n`.
    pub fn v(&self, a: usize) -> usize {
        debug_assert!((1..=self.n).contains(&a));
        2 * self.n + 1 + a
    }

    pub fn mu(&self) -> usize {
        3 * self.n + 2
    }

    /// Variables `t, x1..xn`.
    pub fn position_vars(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    pub fn xi_vars(&self) -> Vec<usize> {
        (1..=self.n).map(|a| self.xi(a)).collect()
    }

    /// Variables `tau, xi1..xin`.
    pub fn frequency_vars(&self) -> Vec<usize> {
        (self.tau()..=self.tau() + self.n).collect()
    }

    pub fn v_vars(&self) -> Vec<usize> {
        (1..=self.n).map(|a| self.v(a)).collect()
    }

    pub fn var(&self, index: usize) -> MultiPoly {
        MultiPoly::var(&self.universe, index)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(&self.universe)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(&self.universe)
    }

    pub fn constant(&self, c: GaussianRational) -> MultiPoly {
        MultiPoly::constant(&self.universe, c)
    }

    /// `|xi|^2`.
    pub fn xi_norm_sqr(&self) -> MultiPoly {
        (1..=self.n).fold(self.zero(), |acc, a| {
            let x = self.var(self.xi(a));
            acc + &x * &x
        })
    }

    /// `|v|^2` with symbolic `v`.
    pub fn v_norm_sqr(&self) -> MultiPoly {
        (1..=self.n).fold(self.zero(), |acc, a| {
            let x = self.var(self.v(a));
            acc + &x * &x
        })
    }
}
