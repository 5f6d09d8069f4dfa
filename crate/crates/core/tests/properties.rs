use std::collections::HashMap;

use num_rational::BigRational;
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

use galilei_core::algebra::{cayley_orthogonal, RationalMatrix};
use galilei_core::operator::{compose_const, conjugate_linear_phase};
use galilei_core::oracle::{random_constant_operator, random_gaussian, random_polynomial_operator, random_position_poly, random_rational};
use galilei_core::{
    classify_order_m, conj_rotation, conj_translation, operator_of, parse_operator, print_operator, symbol_of, synthesize, GaussianRational, MultiPoly,
    OrthogonalMatrix, SamplePlan, Space, Translation,
};

fn seeded(seed: u64) -> ChaCha8Rng {
    SamplePlan::new(seed, 1, 1).rng()
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-50i64..50, 1i64..12, -50i64..50, 1i64..12).prop_map(|(p, q, r, s)| GaussianRational::from_ratios(p, q, r, s))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..30, 1i64..9).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

/// Random polynomial in every variable of the dimension-`n` universe.
fn full_poly(rng: &mut ChaCha8Rng, space: &Space, terms: usize) -> MultiPoly {
    use rand::Rng;
    let mut p = space.zero();
    let len = space.universe().len();
    for _ in 0..terms {
        let mut e = vec![0u32; len];
        for _ in 0..rng.gen_range(0..4) {
            e[rng.gen_range(0..len)] += 1;
        }
        p = p + MultiPoly::monomial(space.universe(), e, random_gaussian(rng, 6));
    }
    p
}

fn random_rotation(rng: &mut ChaCha8Rng, n: usize) -> OrthogonalMatrix {
    let mut a = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = random_rational(rng, 5);
            a.set(i, j, x.clone());
            a.set(j, i, -x);
        }
    }
    cayley_orthogonal(&a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, GaussianRational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &a.conj()).re().clone(), a.norm_sqr());
    }

    #[test]
    fn gaussian_text_round_trip(a in gaussian()) {
        prop_assert_eq!(a.to_string().parse::<GaussianRational>().unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(seed in any::<u64>(), n in 1usize..3) {
        let mut rng = seeded(seed);
        let s = Space::new(n);
        let p = full_poly(&mut rng, &s, 4);
        let q = full_poly(&mut rng, &s, 4);
        let mut bindings = HashMap::new();
        bindings.insert(s.tau(), full_poly(&mut rng, &s, 2));
        bindings.insert(s.xi(1), full_poly(&mut rng, &s, 2));
        let sub = |x: &MultiPoly| x.substitute(&bindings).unwrap();
        prop_assert_eq!(sub(&(&p + &q)), &sub(&p) + &sub(&q));
        prop_assert_eq!(sub(&(&p * &q)), &sub(&p) * &sub(&q));
        prop_assert_eq!(sub(&s.one()), s.one());
    }

    #[test]
    fn mixed_partials_commute(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = seeded(seed);
        let s = Space::new(n);
        let p = full_poly(&mut rng, &s, 6);
        let (a, b) = (s.t(), s.xi(n));
        prop_assert_eq!(p.partial(a).unwrap().partial(b).unwrap(), p.partial(b).unwrap().partial(a).unwrap());
        let q = full_poly(&mut rng, &s, 3);
        let leibniz = &(&p.partial(a).unwrap() * &q) + &(&p * &q.partial(a).unwrap());
        prop_assert_eq!((&p * &q).partial(a).unwrap(), leibniz);
    }

    #[test]
    fn symbol_round_trip(seed in any::<u64>(), n in 1usize..4, m in 0u32..4, deg in 0u32..3) {
        let l = random_polynomial_operator(&mut seeded(seed), n, m, deg, 9);
        let p = symbol_of(&l);
        prop_assert!(p.poly().try_sub(p.poly()).unwrap().is_zero());
        prop_assert_eq!(operator_of(&p).unwrap(), l);
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>(), n in 1usize..4, m in 0u32..4, deg in 0u32..3) {
        let l = random_polynomial_operator(&mut seeded(seed), n, m, deg, 9);
        let text = print_operator(&l);
        prop_assert_eq!(parse_operator(&text, Some(n)).unwrap(), l, "{}", text);
    }

    #[test]
    fn composition_multiplies_symbols(seed in any::<u64>(), n in 1usize..3) {
        let mut rng = seeded(seed);
        let a = random_constant_operator(&mut rng, n, 2, 5);
        let b = random_constant_operator(&mut rng, n, 1, 5);
        let ab = compose_const(&a, &b).unwrap();
        prop_assert_eq!(symbol_of(&ab).poly().clone(), symbol_of(&a).poly() * symbol_of(&b).poly());
        prop_assert_eq!(ab, compose_const(&b, &a).unwrap());
    }

    #[test]
    fn phase_conjugation_inverts(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = seeded(seed);
        let l = random_constant_operator(&mut rng, n, 3, 5);
        let s = l.space();
        let phi = random_position_poly(&mut rng, s, 1, 7);
        let there = conjugate_linear_phase(&l, &phi).unwrap();
        prop_assert_eq!(conjugate_linear_phase(&there, &-&phi).unwrap(), l);
    }

    #[test]
    fn rotations_compose(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = seeded(seed);
        let l = random_constant_operator(&mut rng, n, 3, 5);
        let r1 = random_rotation(&mut rng, n);
        let r2 = random_rotation(&mut rng, n);
        let stepwise = conj_rotation(&conj_rotation(&l, &r1).unwrap(), &r2).unwrap();
        prop_assert_eq!(stepwise, conj_rotation(&l, &(&r2 * &r1)).unwrap());
        let back = conj_rotation(&conj_rotation(&l, &r1).unwrap(), &r1.transpose()).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn translations_compose(seed in any::<u64>(), n in 1usize..4, s1 in rational(), s2 in rational()) {
        let mut rng = seeded(seed);
        let l = random_polynomial_operator(&mut rng, n, 2, 2, 5);
        let t1 = Translation::new(s1, (0..n).map(|_| random_rational(&mut rng, 4)).collect());
        let t2 = Translation::new(s2, (0..n).map(|_| random_rational(&mut rng, 4)).collect());
        let stepwise = conj_translation(&conj_translation(&l, &t1).unwrap(), &t2).unwrap();
        prop_assert_eq!(stepwise, conj_translation(&l, &t1.compose(&t2)).unwrap());
    }

    #[test]
    fn synthesize_classify_round_trip(
        coeffs in proptest::collection::vec(gaussian(), 1..4),
        top in gaussian().prop_filter("nonzero", |c| !c.is_zero()),
        lambda in rational().prop_filter("nonzero", |r| *r != BigRational::from_integer(0.into())),
        n in 1usize..4,
    ) {
        let mut coeffs = coeffs;
        coeffs.push(top);
        let l = synthesize(n, &lambda, &coeffs).unwrap();
        let verdict = classify_order_m(&l, &lambda).unwrap();
        prop_assert_eq!(verdict.coeffs(), Some(&coeffs[..]));
    }
}
