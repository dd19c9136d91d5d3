use std::cmp::Ordering;

use blockalg::algebra::{bracket_basis, bracket_realized, from_realization, to_realization};
use blockalg::criterion::*;
use blockalg::order::{compare, OrderSpec};
use blockalg::verma::{
    act_basis, is_singular, singular_at_minus_one, ModuleVector, PbwMonomial, Straightener, Strategy as Order, DEFAULT_MAX_ROWS,
};
use blockalg::{BasisSymbol, Element, Rational, Vector, Weight, Witness};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn gen(bound: i64) -> impl Strategy<Value = BasisSymbol> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, i)| BasisSymbol::gen(a, i))
}

fn symbol(bound: i64) -> impl Strategy<Value = BasisSymbol> {
    prop_oneof![9 => gen(bound), 1 => Just(BasisSymbol::Central)]
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((symbol(6), rational()), 0..4).prop_map(|t| t.into_iter().collect())
}

fn finite_weight() -> impl Strategy<Value = Weight> {
    (rational(), -3i64..=4, prop::collection::vec(rational(), 0..=8))
        .prop_map(|(c, start, labels)| Weight::finite(c, (start..).zip(labels)))
}

fn monomial() -> impl Strategy<Value = PbwMonomial> {
    prop::collection::vec((1i64..=3, -6i64..=6), 0..=4).prop_map(|mut f| {
        f.sort();
        PbwMonomial::new(f).unwrap()
    })
}

fn vector() -> impl Strategy<Value = Vector> {
    prop::collection::vec((monomial(), rational()), 1..3).prop_map(|terms| {
        let mut v = Vector::zero();
        for (m, c) in terms {
            v.add_term(m, c);
        }
        v
    })
}

fn geometric_ratio() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![q(2), q(3), q(-1), Rational::new(1.into(), 2.into()), Rational::new((-2).into(), 3.into())])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn antisymmetry_and_jacobi(x in symbol(10), y in symbol(10), z in symbol(10)) {
        let (ex, ey, ez) = (Element::basis(x), Element::basis(y), Element::basis(z));
        prop_assert!((bracket_basis::<Rational>(x, y) + bracket_basis(y, x)).is_zero());
        let jac = ex.bracket(&ey.bracket(&ez)) + ey.bracket(&ez.bracket(&ex)) + ez.bracket(&ex.bracket(&ey));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn jacobi_on_central_triples(a in -8i64..=8, b in -8i64..=8, i in -8i64..=8, j in -8i64..=8) {
        let (ex, ey, ez) = (Element::gen(a, i), Element::gen(b, j), Element::gen(-a - b, -2 - i - j));
        let jac = ex.bracket(&ey.bracket(&ez)) + ey.bracket(&ez.bracket(&ex)) + ez.bracket(&ex.bracket(&ey));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn realization_is_an_isomorphism(x in element(), y in element()) {
        let direct = to_realization(&x.bracket(&y));
        let realized = bracket_realized(&to_realization(&x), &to_realization(&y));
        prop_assert_eq!(&direct, &realized);
        prop_assert_eq!(from_realization(&realized), x.bracket(&y));
    }

    #[test]
    fn bracket_respects_grading(x in gen(8), y in gen(8)) {
        let b = bracket_basis::<Rational>(x, y);
        if !b.is_zero() {
            prop_assert_eq!(b.homogeneous_degree(), Some(x.degree() + y.degree()));
        }
    }

    #[test]
    fn representation_property(w in finite_weight(), x in gen(3), y in gen(3), v in vector()) {
        let mut st = Straightener::new(&w, Order::Leftmost);
        let (ex, ey) = (Element::basis(x), Element::basis(y));
        let yv = st.act(&ey, &v);
        let xv = st.act(&ex, &v);
        let lhs = st.act(&ex, &yv).sub(&st.act(&ey, &xv));
        prop_assert_eq!(lhs, st.act(&ex.bracket(&ey), &v));
    }

    #[test]
    fn action_shifts_degree(w in finite_weight(), x in gen(3), m in monomial()) {
        let out = act_basis(x, &m, &w);
        if !out.is_zero() {
            prop_assert_eq!(out.homogeneous_degree(), Some(x.degree() + m.degree()));
        }
    }

    #[test]
    fn straightening_is_confluent(w in finite_weight(), word in prop::collection::vec(symbol(3), 1..=4)) {
        let left = Straightener::new(&w, Order::Leftmost).reduce(&word);
        let right = Straightener::new(&w, Order::Rightmost).reduce(&word);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sigma_matches_generating_series(w in finite_weight(), j in -4i64..=4) {
        // Σ^(j)(z) = z Δ^(-j)(z) - j Δ^(-j-1)(z) - c zʲ/j!, expanded with ordinary
        // power-series coefficients and converted back to the zⁱ/i! basis.
        let n = 12usize;
        let fact = |k: usize| -> Rational { (1..=k as i64).fold(Rational::one(), |a, b| a * q(b)) };
        let ordinary = |d: &[Rational]| -> Vec<Rational> {
            d.iter().enumerate().map(|(i, b)| b.clone() / fact(i)).collect()
        };
        let d0 = ordinary(&delta_series(&w, -j, n).coeffs);
        let d1 = ordinary(&delta_series(&w, -j - 1, n).coeffs);
        let mut sigma = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            if i >= 1 {
                sigma[i] += d0[i - 1].clone();
            }
            sigma[i] -= q(j) * d1[i].clone();
        }
        if (0..=n as i64).contains(&j) {
            sigma[j as usize] -= w.central_charge().clone() / fact(j as usize);
        }
        let back: Vec<Rational> = sigma.iter().enumerate().map(|(i, s)| s.clone() * fact(i)).collect();
        prop_assert_eq!(back, sigma_series(&w, j, n).coeffs);
    }

    #[test]
    fn geometric_witness_is_a_double_root(r in geometric_ratio(), c in prop::sample::select(vec![0i64, 0, 1])) {
        let w = Weight::geometric(r.clone()).unwrap().with_central_charge(q(c));
        let s = reducibility_witness(&w, 4, &WitnessOptions::default()).unwrap();
        if c == 0 {
            prop_assert_eq!(s.witness, Some(WitnessPolynomial::power_of_linear(r, 2)));
        } else {
            prop_assert!(s.witness.is_none());
        }
    }

    #[test]
    fn witness_shifts_stay_witnesses(r in geometric_ratio(), shift in -3i64..=3) {
        let w = Weight::geometric(r.clone()).unwrap();
        let f: Witness = WitnessPolynomial::power_of_linear(r, 2);
        // x⁻¹ tʲ f(t) = Σ a_s L[-1, s+j-1]
        let v = ModuleVector::from_depth_one(
            f.coeffs().iter().enumerate().map(|(s, a)| (s as i64 + shift - 1, a.clone())),
        );
        let check = is_singular(&v, &w, -12..=12, DEFAULT_MAX_ROWS).unwrap();
        prop_assert!(check.singular);
    }

    #[test]
    fn witness_annihilates_every_sigma(r in geometric_ratio(), j in -5i64..=5) {
        let w = Weight::geometric(r.clone()).unwrap();
        let f: Witness = WitnessPolynomial::power_of_linear(r, 2);
        prop_assert!(annihilates(f.coeffs(), &sigma_series(&w, j, 16).coeffs));
    }

    #[test]
    fn finite_weights_have_no_witness(w in finite_weight()) {
        let zero_rows = w.central_charge().is_zero()
            && w.finite_labels().iter().all(|(i, l)| *i == -1 || l.is_zero());
        let s = reducibility_witness(&w, 4, &WitnessOptions::default()).unwrap();
        prop_assert_eq!(s.witness.is_some(), zero_rows);
    }

    #[test]
    fn witness_and_singular_vector_agree(w in finite_weight()) {
        let s = reducibility_witness(&w, 3, &WitnessOptions::default()).unwrap();
        let sing = singular_at_minus_one(&w, -6..=6, -6..=6, DEFAULT_MAX_ROWS).unwrap();
        prop_assert_eq!(s.witness.is_some(), !sing.basis.is_empty());
    }
}

fn lex_order() -> impl Strategy<Value = OrderSpec> {
    (Just(vec![0usize, 1, 2]).prop_shuffle(), prop::collection::vec(prop::sample::select(vec![1i8, -1]), 3))
        .prop_map(|(axes, signs)| OrderSpec::lex(axes, signs).unwrap())
}

fn embedding_order() -> impl Strategy<Value = OrderSpec> {
    (
        prop::sample::select(vec![2u64, 3, 5, 7]),
        prop::collection::vec((rational(), rational()), 2),
    )
        .prop_filter_map("independent weights", |(d, w)| OrderSpec::embedding(d, w).ok())
}

fn element_of(r: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-30i64..=30, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lex_is_a_strict_total_order(o in lex_order(), x in element_of(3), y in element_of(3), z in element_of(3)) {
        check_total_order(&o, &x, &y, &z)?;
    }

    #[test]
    fn embedding_is_a_strict_total_order(o in embedding_order(), x in element_of(2), y in element_of(2), z in element_of(2)) {
        check_total_order(&o, &x, &y, &z)?;
    }
}

fn check_total_order(o: &OrderSpec, x: &[i64], y: &[i64], z: &[i64]) -> Result<(), TestCaseError> {
    let xy = compare(o, x, y).unwrap();
    prop_assert_eq!(xy, compare(o, y, x).unwrap().reverse());
    prop_assert_eq!(xy == Ordering::Equal, x == y);
    let yz = compare(o, y, z).unwrap();
    if xy == Ordering::Less && yz == Ordering::Less {
        prop_assert_eq!(compare(o, x, z).unwrap(), Ordering::Less);
    }
    // translation invariance
    let xz: Vec<i64> = x.iter().zip(z).map(|(a, b)| a + b).collect();
    let yz_: Vec<i64> = y.iter().zip(z).map(|(a, b)| a + b).collect();
    prop_assert_eq!(compare(o, &xz, &yz_).unwrap(), xy);
    Ok(())
}
