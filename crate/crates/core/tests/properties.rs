use std::collections::BTreeSet;

use proptest::prelude::*;
use rpl_core::invset::{
    act_letter_set, act_word_set, associated_monotone, decompose, phi, reassemble,
};
use rpl_core::oracle::{parking_by_sorting, CaseRng};
use rpl_core::pak_stanley::{
    sorted_sequence, sp_forward, sp_invert_placement, sp_invert_sorted, Variant,
};
use rpl_core::weyl::{act_letter, act_word, centroid_of_alcove, is_centroid_coords, WeylPoint};
use rpl_core::{AffineWindow, InvariantSet, ParkingWord};

const LIMIT: i64 = 200;

fn pair() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![
        (2, 3),
        (3, 2),
        (3, 4),
        (4, 3),
        (3, 5),
        (5, 3),
        (2, 5),
        (5, 4),
    ])
}

fn any_pair() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(3, 4), (4, 3), (6, 4), (4, 6), (6, 3), (2, 4), (6, 9)])
}

fn word(m: usize, n: usize) -> impl Strategy<Value = ParkingWord> {
    prop::collection::vec(0..m, n).prop_map(move |l| ParkingWord::new(m, l).unwrap())
}

fn parking(m: usize, n: usize) -> impl Strategy<Value = ParkingWord> {
    word(m, n).prop_filter("parking", |w| w.is_parking())
}

/// `{g + a·m + b·n}` for random generators `g`, always containing every
/// residue mod gcd(m, n) so the set has a terminal ray.
fn invariant_set(m: usize, n: usize) -> impl Strategy<Value = InvariantSet> {
    let d = num_integer::gcd(m, n) as i64;
    prop::collection::vec(0i64..30, 0..5).prop_map(move |extra| {
        let mut gens: Vec<i64> = (0..d).collect();
        gens.extend(extra);
        let mut elems = BTreeSet::new();
        for g in gens {
            for a in 0..=LIMIT / m as i64 {
                for b in 0..=LIMIT / n as i64 {
                    let x = g + a * m as i64 + b * n as i64;
                    if x < LIMIT {
                        elems.insert(x);
                    }
                }
            }
        }
        let elems: Vec<i64> = elems.into_iter().collect();
        InvariantSet::from_prefix(&elems, LIMIT).unwrap()
    })
}

fn point(m: usize) -> impl Strategy<Value = WeylPoint> {
    prop::collection::vec(-60i64..60, m).prop_map(|xs| {
        WeylPoint::balanced_from_rationals(&xs.iter().map(|&x| (x, 6).into()).collect::<Vec<_>>())
            .unwrap()
    })
}

fn window(n: usize) -> impl Strategy<Value = AffineWindow> {
    prop::collection::vec(0..n, 0..12).prop_map(move |gens| {
        gens.into_iter()
            .fold(AffineWindow::identity(n), |w, i| w.times_generator(i))
    })
}

proptest! {
    #[test]
    fn compact_and_json_round_trip((m, n) in pair(), seed in any::<u64>()) {
        let mut rng = CaseRng::new(seed, 0);
        let w = rpl_core::oracle::random_word(&mut rng, m, n);
        prop_assert_eq!(ParkingWord::parse(&w.to_compact().unwrap(), m).unwrap(), w.clone());
        prop_assert_eq!(ParkingWord::parse(&w.render(), m).unwrap(), w);
    }

    #[test]
    fn parking_test_agrees_with_sorting_oracle(w in pair().prop_flat_map(|(m, n)| word(m, n))) {
        prop_assert_eq!(w.is_parking(), parking_by_sorting(w.letters(), w.m()));
    }

    #[test]
    fn parking_is_closed_under_rotation(w in pair().prop_flat_map(|(m, n)| parking(m, n)), k in 0usize..8) {
        prop_assert!(w.rotated(k % w.n()).is_parking());
    }

    #[test]
    fn action_never_increases_distance(
        (u, v, w) in pair().prop_flat_map(|(m, n)| (point(m), point(m), word(m, n)))
    ) {
        let wu = act_word(&u, &w).unwrap().0;
        let wv = act_word(&v, &w).unwrap().0;
        prop_assert!(wu.dist2(&wv) <= u.dist2(&v));
    }

    #[test]
    fn set_action_commutes_with_translation(
        (s, w) in any_pair().prop_flat_map(|(m, n)| (invariant_set(m, n), word(m, n))),
        k in -20i64..20
    ) {
        let (a, ra) = act_word_set(&s, &w).unwrap();
        let (b, rb) = act_word_set(&s.shifted(k), &w).unwrap();
        prop_assert_eq!(b, a.shifted(k));
        prop_assert_eq!(rb, ra.iter().map(|x| x + k).collect::<Vec<_>>());
    }

    #[test]
    fn phi_intertwines_the_actions(
        (s, j, m) in any_pair().prop_flat_map(|(m, n)| (invariant_set(m, n), 0..m, Just(m)))
    ) {
        let x = phi(&s, m).unwrap();
        let moved = act_letter_set(&s, j, m).unwrap().0;
        prop_assert_eq!(phi(&moved, m).unwrap(), act_letter(&x, j).unwrap().0);
    }

    #[test]
    fn monotone_word_shifts_its_set(
        (s, m, n) in any_pair().prop_flat_map(|(m, n)| (invariant_set(m, n), Just(m), Just(n)))
    ) {
        let p = associated_monotone(&s, m, n).unwrap();
        prop_assert!(p.is_monotone() && p.is_parking());
        prop_assert_eq!(act_word_set(&s, &p).unwrap().0, s.shifted(n as i64));
    }

    #[test]
    fn decomposition_round_trips(
        (s, m, n) in any_pair().prop_flat_map(|(m, n)| (invariant_set(m, n), Just(m), Just(n))),
        k in -9i64..9
    ) {
        let s = s.shifted(k);
        let dec = decompose(&s, m, n).unwrap();
        prop_assert_eq!(reassemble(&dec).unwrap(), s);
    }

    #[test]
    fn window_inverse_is_an_involution(w in (2usize..6).prop_flat_map(window)) {
        let inv = w.inverse();
        prop_assert_eq!(inv.inverse(), w.clone());
        for x in -10..10 {
            prop_assert_eq!(inv.eval(w.eval(x)), x);
        }
        prop_assert_eq!(inv.length(), w.length());
    }

    #[test]
    fn reduced_word_rebuilds_the_window(w in (2usize..6).prop_flat_map(window)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len() as u64, w.length());
        let rebuilt = word
            .iter()
            .rev()
            .fold(AffineWindow::identity(w.n()), |acc, &i| acc.times_generator(i));
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn alcove_centroids_are_centroids(w in (2usize..6).prop_flat_map(window)) {
        let c = centroid_of_alcove(&w, w.n()).unwrap();
        prop_assert!(is_centroid_coords(&c));
    }

    #[test]
    fn sorted_inverse_round_trips(p in pair().prop_flat_map(|(m, n)| parking(m, n))) {
        let inv = sp_invert_sorted(&p).unwrap();
        prop_assert!(inv.window.is_m_restricted(p.m()));
        prop_assert_eq!(sp_forward(&inv.window, p.m(), Variant::Inversions).unwrap(), p.clone());
        let len = 3 * p.n() + 10;
        prop_assert_eq!(sp_invert_placement(&p, len).unwrap(), sorted_sequence(&p, len).unwrap());
    }
}
