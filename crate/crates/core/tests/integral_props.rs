use lieblocks::integral::{self, BlockStatus};
use lieblocks::subalg::{self, RootSubsystem};
use lieblocks::weyl::{self, WeylElement};
use lieblocks::{RootSystem, Weight, Q};
use proptest::prelude::*;

const TYPES: [&str; 7] = ["A3", "B3", "C3", "D4", "F4", "G2", "B4"];

fn case() -> impl Strategy<Value = (RootSystem, Weight, Vec<usize>)> {
    prop::sample::select(&TYPES[..]).prop_flat_map(|name| {
        let rs = RootSystem::of(name).unwrap();
        let r = rs.rank();
        let coords = prop::collection::vec((-5i64..=5, prop::sample::select(vec![1i64, 2, 2, 3, 4])), r);
        let word = prop::collection::vec(0..r, 0..10);
        (Just(rs), coords, word).prop_map(|(rs, c, w)| {
            let lambda = Weight(c.into_iter().map(|(p, q)| Q::new(p, q)).collect());
            (rs, lambda, w)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn integral_subsystem_invariants((rs, lambda, word) in case()) {
        let z = integral::integral_subsystem(&rs, &lambda).unwrap();
        for a in rs.singular_set(&lambda) {
            prop_assert!(z.members().contains(a));
        }
        let dual = rs.dual();
        let zd = integral::coroot_subsystem(&z, &dual).unwrap();
        prop_assert_eq!(zd.len(), z.len());
        prop_assert!(zd.is_additively_closed());

        // the dot action moves Delta^Z by w, so its size and type are unchanged
        let w = WeylElement::from_word(&rs, &word);
        let moved = w.dot(&rs, &lambda);
        prop_assert!(weyl::same_central_character(&rs, &lambda, &moved));
        let z2 = integral::integral_subsystem(&rs, &moved).unwrap();
        prop_assert_eq!(z2.members(), &z.members().image(w.perm()));
        prop_assert_eq!(subalg::classify(&z2).unwrap(), subalg::classify(&z).unwrap());
    }

    #[test]
    fn passing_weights_realize_the_orbit_dimension((rs, lambda, _w) in case()) {
        let an = integral::analyze(&rs, &lambda).unwrap();
        if an.all_tests_pass && !rs.dtype().simply_laced() {
            prop_assert_eq!(an.dual_type.codim, rs.min_orbit_dim());
            let st = integral::fd_block_status(&rs, &lambda).unwrap();
            prop_assert_eq!(st.status, BlockStatus::SemisimpleUniqueSimple);
        }
        if lambda.is_integral() {
            prop_assert!(!an.proper);
        }
    }
}

#[test]
fn candidates_are_closed_and_classified() {
    for name in ["B4", "C4", "D5", "E6", "F4", "G2"] {
        let rs = RootSystem::of(name).unwrap();
        let dim_g = rs.rank() + rs.num_roots();
        for c in subalg::candidates(&rs, lieblocks::Exec::Sequential) {
            let class = subalg::classify(&c.sub).unwrap();
            assert_eq!(class.dim + class.codim, dim_g, "{name} {}", class.label);
            assert!(c.sub.is_symmetric());
            assert!(c.sub.is_proper());
            let again = RootSubsystem::from_members(&rs, c.sub.members().clone()).unwrap();
            assert!(subalg::conjugate_under_w(&again, &c.sub).unwrap());
        }
    }
}

#[test]
fn b2_levi_classes_are_not_conjugate() {
    // removing node 1 or node 2 of B2 gives the long and the short A1 + T
    let rs = RootSystem::of("B2").unwrap();
    let levis = subalg::levi_candidates(&rs);
    let proper: Vec<&RootSubsystem> = levis.iter().filter(|s| s.is_proper()).collect();
    assert_eq!(proper.len(), 2);
    assert!(!subalg::conjugate_under_w(proper[0], proper[1]).unwrap());
}

#[test]
fn frozen_integral_types() {
    let cases = [
        ("B2", "1/2,0", "A1+A1", 4),
        ("B3", "1/2,0,0", "B2+A1", 10),
        ("G2", "1/3,0", "A1+T", 2),
        ("G2", "0,1/3", "A2", 6),
        ("G2", "0,1/2", "A1+A1", 4),
        ("G2", "1/2,0", "A1+A1", 4),
        ("C3", "0,0,1/2", "A3", 12),
    ];
    for (name, lam, label, roots) in cases {
        let rs = RootSystem::of(name).unwrap();
        let an = integral::analyze(&rs, &Weight::parse(lam).unwrap()).unwrap();
        assert_eq!((an.z_type.label.as_str(), an.integral_roots), (label, roots), "{name} {lam}");
    }
}
