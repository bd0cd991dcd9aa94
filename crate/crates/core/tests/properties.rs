use std::collections::BTreeSet;

use minfact::action::{
    act_on_sequence, apply_permutation, apply_word, projection, sort_chain, word_to_permutation,
};
use minfact::geodesic::Chain;
use minfact::parking::{normalize, park, shift_pair, ParkingInput};
use minfact::perm::{Permutation, Transposition};
use minfact::surjection::{fiber, gamma, section, PairAB};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn sized_permutations(max: usize, count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max).prop_flat_map(move |n| prop::collection::vec(permutation(n), count))
}

/// A random pair `(A, B)` with `n ≤ max_n` and `k < n`.
fn pair(max_n: usize) -> impl Strategy<Value = PairAB> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                prop::collection::vec(1..=n, k),
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, a, labels)| {
            let b: BTreeSet<usize> = labels[..a.len() + 1].iter().copied().collect();
            PairAB::new(n, a, b).unwrap()
        })
}

proptest! {
    #[test]
    fn norm_is_inverse_invariant(ps in sized_permutations(9, 1)) {
        let p = &ps[0];
        prop_assert_eq!(p.norm(), p.inverse().norm());
        prop_assert!((&p.clone() * &p.inverse()).is_identity());
    }

    #[test]
    fn multiplication_is_associative(ps in sized_permutations(9, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
    }

    #[test]
    fn a_transposition_changes_cycle_count_by_one(
        ps in sized_permutations(9, 1).prop_filter("need two labels", |v| v[0].n() >= 2),
        seed in any::<(usize, usize)>(),
    ) {
        let p = &ps[0];
        let n = p.n();
        let a = seed.0 % n + 1;
        let b = (a + seed.1 % (n - 1)) % n + 1;
        let t = Permutation::from_transposition(n, Transposition::new(a, b).unwrap()).unwrap();
        let before = p.cycle_count() as i64;
        let after = (p * &t).cycle_count() as i64;
        prop_assert_eq!((after - before).abs(), 1);
    }

    #[test]
    fn text_form_round_trips(ps in sized_permutations(9, 1)) {
        let p = &ps[0];
        prop_assert_eq!(&Permutation::parse(&p.to_string(), p.n()).unwrap(), p);
    }

    #[test]
    fn parking_is_shift_equivariant(p in pair(9), t in -20i64..20) {
        let inp = ParkingInput::new(p.n(), p.a().to_vec(), p.b().clone()).unwrap();
        let out = park(&inp);
        let (a, b) = shift_pair(p.a(), p.b(), t, p.n()).unwrap();
        let shifted = park(&ParkingInput::new(p.n(), a, b).unwrap());
        let (spaces, rho) = shift_pair(&out.spaces, &BTreeSet::from([out.residue]), t, p.n()).unwrap();
        prop_assert_eq!(shifted.spaces, spaces);
        prop_assert_eq!(BTreeSet::from([shifted.residue]), rho);
    }

    #[test]
    fn parking_fills_all_but_one_open_space(p in pair(9)) {
        let out = park(&ParkingInput::new(p.n(), p.a().to_vec(), p.b().clone()).unwrap());
        let mut used: BTreeSet<usize> = out.spaces.iter().copied().collect();
        prop_assert_eq!(used.len(), out.spaces.len());
        prop_assert!(used.insert(out.residue));
        prop_assert_eq!(&used, p.b());
    }

    #[test]
    fn normalize_is_idempotent(p in pair(9)) {
        let once = normalize(p.a(), p.b(), p.n()).unwrap();
        let twice = normalize(&once.entries, &once.open, p.n()).unwrap();
        prop_assert_eq!(twice.shift, 0);
        prop_assert_eq!(twice.entries, once.entries);
        prop_assert_eq!(twice.open, once.open);
    }

    #[test]
    fn gamma_lands_in_sigma_with_the_shifted_projection(p in pair(9)) {
        let c = gamma(&p).unwrap();
        prop_assert!(c.is_member());
        let nm = normalize(p.a(), p.b(), p.n()).unwrap();
        prop_assert_eq!(projection(&c), nm.entries);
    }

    #[test]
    fn gamma_is_shift_invariant(p in pair(9), t in 0i64..9) {
        prop_assert_eq!(gamma(&p.shift(t)).unwrap(), gamma(&p).unwrap());
    }

    #[test]
    fn section_is_a_right_inverse(p in pair(9)) {
        let c = gamma(&p).unwrap();
        let s = section(&c).unwrap();
        prop_assert_eq!(s.residue(), 1);
        prop_assert_eq!(gamma(&s).unwrap(), c.clone());
        let f = fiber(&c).unwrap();
        prop_assert!(f.contains(&p));
    }

    #[test]
    fn any_sorting_permutation_gives_the_same_chain(p in pair(8), seed in any::<u64>()) {
        // σ and σ' both sort Ã exactly when σ' = τσ with τ fixing the
        // sorted sequence; τ permutes positions holding equal values.
        let expected = gamma(&p).unwrap();
        let nm = normalize(p.a(), p.b(), p.n()).unwrap();
        let (sigma, sorted_chain) = sort_chain(&expected).unwrap();
        let sorted = act_on_sequence(&sigma, &nm.entries).unwrap();
        let tau = shuffle_within_ties(&sorted, seed);
        let other = &tau * &sigma;
        prop_assert_eq!(act_on_sequence(&other, &nm.entries).unwrap(), sorted);
        prop_assert_eq!(apply_permutation(&sorted_chain, &other.inverse()).unwrap(), expected);
    }

    #[test]
    fn words_for_the_same_permutation_act_alike(p in pair(7), word in prop::collection::vec(1usize..7, 0..12)) {
        let c = gamma(&p).unwrap();
        let k = c.len();
        prop_assume!(k >= 2);
        let word: Vec<usize> = word.into_iter().map(|l| (l - 1) % (k - 1) + 1).collect();
        let perm = word_to_permutation(k, &word).unwrap();
        let by_word = apply_word(&c, &word).unwrap();
        prop_assert_eq!(&by_word, &apply_permutation(&c, &perm).unwrap());
        prop_assert_eq!(projection(&by_word), act_on_sequence(&perm, &projection(&c)).unwrap());
        prop_assert_eq!(by_word.product(), c.product());
    }
}

/// A permutation of positions that only moves positions with equal values.
fn shuffle_within_ties(sorted: &[usize], mut seed: u64) -> Permutation {
    let k = sorted.len();
    let mut images: Vec<usize> = (1..=k).collect();
    let mut start = 0;
    while start < k {
        let mut end = start;
        while end < k && sorted[end] == sorted[start] {
            end += 1;
        }
        // Fisher-Yates on images[start..end] with a cheap LCG
        for x in (start + 1..end).rev() {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let y = start + (seed >> 33) as usize % (x - start + 1);
            images.swap(x, y);
        }
        start = end;
    }
    Permutation::from_images(&images).unwrap()
}

#[test]
fn empty_chain_round_trip() {
    let c = Chain::empty(6).unwrap();
    let s = section(&c).unwrap();
    assert_eq!(gamma(&s).unwrap(), c);
}

#[test]
fn geodesic_order_is_a_partial_order() {
    use itertools::Itertools;
    for n in 1..=5 {
        let all: Vec<Permutation> = (1..=n)
            .permutations(n)
            .map(|p| Permutation::from_images(&p).unwrap())
            .collect();
        let m = all.len();
        let rel: Vec<Vec<bool>> = all
            .iter()
            .map(|a| all.iter().map(|b| a.precedes(b).unwrap()).collect())
            .collect();
        for x in 0..m {
            assert!(rel[x][x], "not reflexive at {}", all[x]);
            for y in 0..m {
                if x != y && rel[x][y] {
                    assert!(!rel[y][x], "{} and {} precede each other", all[x], all[y]);
                }
                if !rel[x][y] {
                    continue;
                }
                for z in 0..m {
                    if rel[y][z] {
                        assert!(rel[x][z], "{} ≼ {} ≼ {}", all[x], all[y], all[z]);
                    }
                }
            }
        }
    }
}
