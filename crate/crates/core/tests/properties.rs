use num_integer::Integer;
use proptest::prelude::*;

use tinvariant::closed_form::{classify, lens_t, t_closed};
use tinvariant::{class_of, fiber_vector, fiber_word, GoldenNum, SeifertPresentation};

fn coprime(range: std::ops::RangeInclusive<i64>, nonzero_alpha: bool) -> impl Strategy<Value = (i64, i64)> {
    (range.clone(), range).prop_filter("coprime", move |&(a, b)| a.gcd(&b) == 1 && (!nonzero_alpha || a != 0))
}

fn presentation(nonzero_alpha: bool) -> impl Strategy<Value = SeifertPresentation> {
    (-8..=8i64, [coprime(-40..=40, nonzero_alpha), coprime(-40..=40, nonzero_alpha), coprime(-40..=40, nonzero_alpha)])
        .prop_map(|(b, f)| SeifertPresentation::from_pairs(b, f).unwrap())
}

fn lens(p: i64, q: i64) -> GoldenNum {
    SeifertPresentation::from_pairs(-1, [(p, q), (0, 1), (1, 1)]).unwrap().t_invariant().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normalization_preserves_t(p in presentation(false)) {
        let n = p.normalize().unwrap();
        prop_assert_eq!(n.t_invariant().unwrap(), p.t_invariant().unwrap());
        prop_assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn normalization_preserves_euler_number(p in presentation(true)) {
        prop_assert_eq!(p.normalize().unwrap().euler_number(), p.euler_number());
    }

    #[test]
    fn routes_agree(p in presentation(false)) {
        prop_assert_eq!(t_closed(&p).unwrap(), p.t_invariant().unwrap());
    }

    #[test]
    fn fiber_order_and_sign_do_not_matter(p in presentation(false), perm in 0..6usize, flips in [any::<bool>(); 3]) {
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut fibers = orders[perm].map(|i| p.fibers[i]);
        for (f, flip) in fibers.iter_mut().zip(flips) {
            if flip {
                *f = f.flipped();
            }
        }
        let q = SeifertPresentation::new(p.b, fibers).unwrap();
        prop_assert_eq!(q.t_invariant().unwrap(), p.t_invariant().unwrap());
        prop_assert_eq!(classify(&q).unwrap().tag(), classify(&p).unwrap().tag());
        prop_assert_eq!(t_closed(&q).unwrap(), t_closed(&p).unwrap());
    }

    #[test]
    fn zero_one_fiber_splits_as_product(f1 in coprime(-30..=30, false), f3 in coprime(-30..=30, false), b in -5..=5i64) {
        let whole = SeifertPresentation::from_pairs(b, [f1, (0, 1), f3]).unwrap().t_invariant().unwrap();
        prop_assert_eq!(whole, lens(f1.0, f1.1) * lens(f3.0, f3.1));
    }

    #[test]
    fn words_rebuild_their_pair(f in coprime(1..=400, true).prop_filter("positive", |&(_, b)| b > 0)) {
        let word = fiber_word(f.0, f.1).unwrap();
        prop_assert_eq!(word.apply_to_seed(), Some(f));
    }

    #[test]
    fn homology_order_matches_determinant(p in presentation(true)) {
        let h = p.h1().unwrap();
        match p.homology_order().unwrap() {
            0 => prop_assert_eq!(h.free_rank, 1),
            n => prop_assert_eq!(h.order(), Some(n)),
        }
    }
}

#[test]
fn fiber_vector_depends_only_on_class() {
    let mut seen = std::collections::BTreeMap::new();
    for alpha in 1..=60i64 {
        for beta in 1..=60i64 {
            if alpha.gcd(&beta) != 1 || (alpha, beta) == (1, 1) {
                continue;
            }
            let v = fiber_vector(alpha, beta).unwrap();
            let c = class_of(alpha, beta).unwrap();
            assert_eq!(*seen.entry(c).or_insert(v), v, "({alpha},{beta})");
        }
    }
    assert_eq!(seen.len(), 12);
}

#[test]
fn lens_table_matches_tensor_route_and_moves() {
    for p in -30..=30i64 {
        for q in -30..=30i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let t = lens_t(p, q).unwrap();
            assert_eq!(t, lens(p, q), "L({p},{q})");
            assert_eq!(t, lens_t(-p, q).unwrap());
            assert_eq!(t, lens_t(p, -q).unwrap());
            for k in -3..=3 {
                assert_eq!(t, lens_t(p, q + k * p).unwrap());
            }
            if p != 0 {
                let (_, inv, _) = tinvariant::seifert::ext_gcd(q, p);
                assert_eq!(t, lens_t(p, inv).unwrap(), "inverse move L({p},{q})");
            }
        }
    }
}

#[test]
fn all_twos_value_depends_only_on_k() {
    let twos: Vec<(i64, i64)> = (1..=40i64)
        .flat_map(|a| (-20..=20i64).map(move |b| (a, b)))
        .filter(|&(a, b)| a.rem_euclid(5) == 2 && a.gcd(&b) == 1)
        .take(25)
        .collect();
    let mut by_k = std::collections::BTreeMap::new();
    for (i, &f1) in twos.iter().enumerate() {
        for &f2 in &twos[i..] {
            for &f3 in twos.iter().step_by(3) {
                for b in -3..=3 {
                    let p = SeifertPresentation::from_pairs(b, [f1, f2, f3]).unwrap();
                    let case = classify(&p).unwrap();
                    if let tinvariant::TheoremCase::AllTwos { k } = case {
                        let t = p.t_invariant().unwrap();
                        assert_eq!(*by_k.entry(k).or_insert(t), t, "{p}");
                    }
                }
            }
        }
    }
    assert_eq!(by_k.len(), 5);
    assert_eq!(by_k[&1], by_k[&4]);
    assert_eq!(by_k[&2], by_k[&3]);
}
