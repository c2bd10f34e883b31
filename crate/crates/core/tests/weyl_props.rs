use lieblocks::weyl::{self, coxeter_m, EnumBound, WeylElement};
use lieblocks::{Exec, RootSystem, Weight, Q};
use proptest::prelude::*;

const TYPES: [&str; 10] = ["A3", "A4", "B3", "C3", "B4", "D4", "D5", "F4", "G2", "E6"];

fn system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(&TYPES[..]).prop_map(|n| RootSystem::of(n).unwrap())
}

fn with_word(max_len: usize) -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
    system().prop_flat_map(move |rs| {
        let r = rs.rank();
        (Just(rs), prop::collection::vec(0..r, 0..max_len))
    })
}

fn with_weight(max_len: usize) -> impl Strategy<Value = (RootSystem, Vec<usize>, Weight)> {
    with_word(max_len).prop_flat_map(|(rs, word)| {
        let r = rs.rank();
        (Just(rs), Just(word), weight(r))
    })
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-6i64..=6, 1i64..=3), rank).prop_map(|v| Weight(v.into_iter().map(|(p, q)| Q::new(p, q)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn length_matches_reduced_word((rs, word) in with_word(24)) {
        let w = WeylElement::from_word(&rs, &word);
        prop_assert_eq!(w.length(&rs), w.word_len());
        prop_assert!(w.length(&rs) <= word.len());
        prop_assert_eq!(w.length(&rs) % 2, word.len() % 2);
        let again = WeylElement::from_word(&rs, &w.word());
        prop_assert_eq!(again.perm(), w.perm());
    }

    #[test]
    fn tau_left_is_tau_right_of_inverse((rs, word) in with_word(24)) {
        let w = WeylElement::from_word(&rs, &word);
        prop_assert_eq!(w.tau_l(&rs), w.inverse(&rs).tau_r(&rs));
    }

    #[test]
    fn inverse_and_compose((rs, a) in with_word(16), b in prop::collection::vec(0usize..4, 0..16)) {
        let b: Vec<usize> = b.into_iter().map(|i| i % rs.rank()).collect();
        let x = WeylElement::from_word(&rs, &a);
        let y = WeylElement::from_word(&rs, &b);
        let xy = x.compose(&rs, &y);
        let cat: Vec<usize> = a.iter().chain(&b).copied().collect();
        let direct = WeylElement::from_word(&rs, &cat);
        prop_assert_eq!(xy.perm(), direct.perm());
        prop_assert_eq!(x.compose(&rs, &x.inverse(&rs)).length(&rs), 0);
        prop_assert_eq!(x.inverse(&rs).length(&rs), x.length(&rs));
    }

    #[test]
    fn dot_is_an_action((rs, a, lambda) in with_weight(12), b in prop::collection::vec(0usize..4, 0..12)) {
        let b: Vec<usize> = b.into_iter().map(|i| i % rs.rank()).collect();
        let x = WeylElement::from_word(&rs, &a);
        let y = WeylElement::from_word(&rs, &b);
        let xy = x.compose(&rs, &y);
        prop_assert_eq!(xy.dot(&rs, &lambda), x.dot(&rs, &y.dot(&rs, &lambda)));
        prop_assert_eq!(WeylElement::identity(&rs).dot(&rs, &lambda), lambda.clone());
        prop_assert!(weyl::same_central_character(&rs, &lambda, &x.dot(&rs, &lambda)));
    }

    #[test]
    fn action_permutes_root_weights((rs, word) in with_word(16)) {
        let w = WeylElement::from_word(&rs, &word);
        for i in 0..rs.num_roots() {
            prop_assert_eq!(w.act(&rs, &rs.root_weight(i)), rs.root_weight(w.apply(i)));
        }
    }

    #[test]
    fn pairing_is_linear(rs in system(), s in any::<u64>(), k in -4i64..=4) {
        let n = rs.rank();
        let l: Vec<i64> = (0..n).map(|i| ((s >> (4 * i)) & 7) as i64 - 3).collect();
        let m: Vec<i64> = (0..n).map(|i| ((s >> (4 * i + 32)) & 7) as i64 - 3).collect();
        let (l, m) = (Weight::from_ints(&l), Weight::from_ints(&m));
        let sum = &l.scale(Q::from_integer(k)) + &m;
        for a in 0..rs.num_roots() {
            let lhs = rs.pairing_idx(&sum, a);
            let rhs = rs.pairing_idx(&l, a) * Q::from_integer(k) + rs.pairing_idx(&m, a);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn braid_relations() {
    for name in TYPES {
        let rs = RootSystem::of(name).unwrap();
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                let m = coxeter_m(&rs, i, j) as usize;
                let word: Vec<usize> = (0..2 * m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                assert_eq!(WeylElement::from_word(&rs, &word).length(&rs), 0, "{name} ({i},{j})");
                if m > 1 {
                    let half = WeylElement::from_word(&rs, &word[..m]);
                    assert_eq!(half.length(&rs), m, "{name} ({i},{j})");
                }
            }
        }
    }
}

/// `prod (1 + q + ... + q^{d-1})` over the degrees.
fn poincare(degrees: &[usize]) -> Vec<usize> {
    let mut p = vec![1usize];
    for &d in degrees {
        let mut next = vec![0; p.len() + d - 1];
        for (i, c) in p.iter().enumerate() {
            for k in 0..d {
                next[i + k] += c;
            }
        }
        p = next;
    }
    p
}

#[test]
fn exhaustive_length_distribution() {
    for (name, degrees) in [("A3", &[2, 3, 4][..]), ("B3", &[2, 4, 6]), ("D4", &[2, 4, 4, 6]), ("G2", &[2, 6])] {
        let rs = RootSystem::of(name).unwrap();
        let all = weyl::elements(&rs, EnumBound::Default, Exec::Sequential).unwrap();
        let want = poincare(degrees);
        let mut got = vec![0usize; want.len()];
        for w in &all {
            assert_eq!(w.length(&rs), w.word_len());
            got[w.length(&rs)] += 1;
        }
        assert_eq!(got, want, "{name}");
        let longest = all.iter().max_by_key(|w| w.length(&rs)).unwrap();
        assert_eq!(longest.length(&rs), rs.num_positive());
    }
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let rs = RootSystem::of("E6").unwrap();
    let a = weyl::elements(&rs, EnumBound::Default, Exec::Sequential).unwrap();
    let b = weyl::elements(&rs, EnumBound::Default, Exec::Parallel).unwrap();
    assert_eq!(a.len(), 51_840);
    assert!(a.iter().zip(&b).all(|(x, y)| x.perm() == y.perm()));
}
