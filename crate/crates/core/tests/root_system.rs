mod common;

use std::collections::HashSet;

use modrep_core::{Context, LatticeMode, RootSystem, Series, Weight, WeylGroup};
use proptest::prelude::*;

fn all_types() -> Vec<(Series, usize)> {
    let mut v = Vec::new();
    for n in 1..=6 {
        v.push((Series::A, n));
    }
    for n in 2..=6 {
        v.push((Series::B, n));
        v.push((Series::C, n));
    }
    for n in 4..=6 {
        v.push((Series::D, n));
    }
    v.extend([(Series::E, 6), (Series::F, 4), (Series::G, 2)]);
    v
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Classification tables, independent of the reflection-closure enumeration.
fn expected_counts(s: Series, n: usize) -> (usize, usize) {
    match s {
        Series::A => (n * (n + 1) / 2, factorial(n + 1)),
        Series::B | Series::C => (n * n, (1 << n) * factorial(n)),
        Series::D => (n * (n - 1), (1 << (n - 1)) * factorial(n)),
        Series::E => (36, 51840),
        Series::F => (24, 1152),
        Series::G => (6, 12),
    }
}

#[test]
fn root_counts_and_group_orders_match_tables() {
    for (s, n) in all_types() {
        let rs = RootSystem::new(s, n).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        let (roots, order) = expected_counts(s, n);
        assert_eq!(rs.num_positive_roots(), roots, "{s}{n}");
        assert_eq!(w.order(), order, "{s}{n}");
        assert_eq!(w.longest().length, roots, "{s}{n}");
        assert_eq!(w.elements().iter().filter(|e| e.length == roots).count(), 1);
        assert!(rs.rho().coords().iter().all(|&c| c == 1));
    }
}

#[test]
fn highest_root_pairs_to_two_with_itself() {
    for (s, n) in all_types() {
        let rs = RootSystem::new(s, n).unwrap();
        let k = rs.highest_root();
        let theta = &rs.positive_root_weights()[k];
        assert!(theta.is_dominant(), "{s}{n}");
        assert_eq!(rs.positive_pairings(theta)[k], 2);
    }
}

#[test]
fn length_counts_inversions() {
    for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::G, 2), (Series::D, 4)] {
        let rs = RootSystem::new(s, n).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        let positives: HashSet<Weight> = rs.positive_root_weights().iter().cloned().collect();
        for e in w.elements() {
            let inversions = rs
                .positive_root_weights()
                .iter()
                .filter(|a| !positives.contains(&e.act(a)))
                .count();
            assert_eq!(inversions, e.length);
            assert_eq!(e.word.len(), e.length);
        }
    }
}

#[test]
fn sign_is_multiplicative() {
    let rs = RootSystem::new(Series::B, 3).unwrap();
    let w = WeylGroup::generate(&rs).unwrap();
    for u in w.elements().iter().step_by(3) {
        for v in w.elements().iter().step_by(5) {
            assert_eq!(w.compose(u, v).sign(), u.sign() * v.sign());
        }
    }
}

#[test]
fn dominant_representative_matches_orbit_scan() {
    let rs = RootSystem::new(Series::A, 2).unwrap();
    let w = WeylGroup::generate(&rs).unwrap();
    let start = Weight::from([-1, 2]);
    let scanned: Vec<Weight> =
        w.elements().iter().map(|e| e.act(&start)).filter(|x| x.is_dominant()).collect();
    let (el, dom) = w.dominant_representative(&rs, &start);
    assert!(scanned.iter().all(|x| *x == dom));
    assert_eq!(dom, Weight::from([1, 1]));
    assert_eq!(el.act(&start), dom);
}

#[test]
fn dot_orbit_sizes() {
    let ctx = Context::new(Series::G, 2, LatticeMode::SimplyConnected).unwrap();
    let rs = ctx.root_system();
    for a in -4..=4 {
        for b in -4..=4 {
            let l = Weight::from([a, b]);
            let orbit: HashSet<Weight> =
                ctx.weyl_group().elements().iter().map(|e| e.dot_act(&l)).collect();
            let singular = rs.positive_pairings(&(&l + rs.rho())).contains(&0);
            if !singular {
                assert_eq!(orbit.len(), 12, "{l}");
            } else {
                assert!(orbit.len() < 12);
            }
        }
    }
}

#[test]
fn steinberg_split_is_a_bijection_onto_restricted_times_dominant() {
    let rs = RootSystem::new(Series::A, 2).unwrap();
    for p in [2, 3, 5, 7] {
        let mut seen = HashSet::new();
        for a in 0..=50 {
            for b in 0..=50 {
                let l = Weight::from([a, b]);
                let (low, high) = rs.steinberg_split(&l, p).unwrap();
                assert!(low.is_restricted(p) && high.is_dominant());
                assert_eq!(low.add_scaled(&high, p), l);
                assert!(seen.insert((low, high)));
            }
        }
    }
}

proptest! {
    #[test]
    fn dot_multiplication_composes(a in 0i64..30, b in 0i64..30, m in 1i64..6, n in 1i64..6) {
        let l = Weight::from([a, b]);
        let once = l.dot_multiply(n);
        prop_assert!(once.is_dominant());
        prop_assert_eq!(once.dot_multiply(m), l.dot_multiply(m * n));
    }

    #[test]
    fn dot_multiplication_lands_in_steinberg_coset(a in -20i64..20, b in -20i64..20, p in prop::sample::select(vec![3i64, 5, 7])) {
        let rs = RootSystem::new(Series::A, 2).unwrap();
        let l = Weight::from([a, b]);
        let diff = &l.dot_multiply(p) - &rs.rho().scale(p - 1);
        prop_assert_eq!(&diff, &l.scale(p));
        if rs.in_root_lattice(&l) {
            prop_assert!(rs.in_root_lattice(&diff.div_exact(p).unwrap()));
        }
    }

    #[test]
    fn dot_action_commutes_with_dot_multiplication(a in -10i64..10, b in -10i64..10, n in 1i64..5, idx in 0usize..12) {
        let rs = RootSystem::new(Series::G, 2).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        let e = &w.elements()[idx];
        let l = Weight::from([a, b]);
        prop_assert_eq!(e.dot_act(&l.dot_multiply(n)), e.dot_act(&l).dot_multiply(n));
    }
}
