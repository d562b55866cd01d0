use hyperwalk_core::exact::{distribution_after, WalkOptions};
use hyperwalk_core::group::{enumerate_group, GroupId, SignedPermutation};
use hyperwalk_core::ratio::{format_exact, parse_rational, rational};
use hyperwalk_core::WalkSpec;
use proptest::prelude::*;

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n).prop_flat_map(|n| {
        let perm = Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle();
        (perm, proptest::collection::vec(any::<bool>(), n)).prop_map(|(perm, signs)| {
            let w = perm.iter().zip(&signs).map(|(&p, &s)| if s { -p } else { p }).collect();
            SignedPermutation::from_window(w).unwrap()
        })
    })
}

fn same_size_triple() -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (1usize..=7).prop_flat_map(|n| {
        let g = GroupId::b(n);
        let order = g.order().unwrap();
        (0..order, 0..order, 0..order)
            .prop_map(move |(a, b, c)| (g.unrank(a).unwrap(), g.unrank(b).unwrap(), g.unrank(c).unwrap()))
    })
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in same_size_triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn xi_and_projection_are_homomorphisms((a, b, _) in same_size_triple()) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.xi(), a.xi() * b.xi());
        prop_assert_eq!(ab.project(), a.project().compose(&b.project()).unwrap());
    }

    #[test]
    fn inverse_cancels(p in signed_perm(9)) {
        let n = p.n();
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), SignedPermutation::identity(n));
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn rank_round_trips(p in signed_perm(9)) {
        let g = GroupId::b(p.n());
        prop_assert_eq!(g.unrank(g.rank(&p).unwrap()).unwrap(), p.clone());
        if p.is_in_dn() {
            let d = GroupId::d(p.n());
            prop_assert_eq!(d.unrank(d.rank(&p).unwrap()).unwrap(), p.clone());
        }
    }

    #[test]
    fn text_round_trips(p in signed_perm(9)) {
        prop_assert_eq!(p.to_string().parse::<SignedPermutation>().unwrap(), p);
    }

    #[test]
    fn rational_text_round_trips(num in -10_000i64..10_000, den in 1i64..10_000) {
        let r = rational(num, den);
        prop_assert_eq!(parse_rational(&format_exact(&r)).unwrap(), r);
    }
}

#[test]
fn walk_distributions_are_inverse_symmetric() {
    for spec in [
        WalkSpec::bn(3).unwrap(),
        WalkSpec::bn_alpha(3, rational(1, 5)).unwrap(),
        WalkSpec::dn(4).unwrap(),
        WalkSpec::sn(4, rational(1, 3)).unwrap(),
    ] {
        for k in [1, 2, 5] {
            let d = distribution_after(&spec, k, WalkOptions::default()).unwrap();
            assert!(d.is_inverse_symmetric().unwrap(), "{spec} k={k}");
        }
    }
}

#[test]
fn ranks_enumerate_in_order() {
    for g in [GroupId::b(4), GroupId::d(4), GroupId::s(5)] {
        for (i, p) in enumerate_group(g).unwrap().enumerate() {
            assert_eq!(g.rank(&p).unwrap(), i as u64);
        }
    }
}
