//! Cross-module invariants over random small ideals.

use proptest::prelude::*;
use stanley_core::bound::{size_inequality_check, BoundConfig};
use stanley_core::sdepth::{default_cap, sdepth_ideal, sdepth_module_with_cap, sdepth_quotient, Unlimited};
use stanley_core::{decompose, size, Monomial, MonomialIdeal, SdepthConfig};

fn cfg() -> SdepthConfig {
    SdepthConfig::default()
}

/// Proper nonzero ideals in 1..=4 variables with exponents at most 3.
fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=4).prop_filter_map(
            "unit generator",
            move |gens| {
                let gens: Vec<Monomial> = gens.into_iter().map(Monomial::new).collect();
                if gens.iter().any(Monomial::is_one) {
                    return None;
                }
                Some(MonomialIdeal::new(n, gens).unwrap())
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cap_robustness(i in small_ideal()) {
        let unit = MonomialIdeal::unit(i.nvars());
        let zero = MonomialIdeal::zero(i.nvars());
        for (sub, amb) in [(&i, &unit), (&zero, &i)] {
            let cap = default_cap(sub, amb);
            let bigger: Vec<u32> = cap.iter().map(|g| g + 1).collect();
            let a = sdepth_module_with_cap(sub, amb, &cap, &cfg(), &mut Unlimited).unwrap().sdepth;
            let b = sdepth_module_with_cap(sub, amb, &bigger, &cfg(), &mut Unlimited).unwrap().sdepth;
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn polarization_shifts_quotient_sdepth(i in small_ideal()) {
        let p = i.polarize().unwrap();
        let a = sdepth_quotient(&i, &cfg(), &mut Unlimited).unwrap().sdepth;
        let b = sdepth_quotient(&p.ideal, &cfg(), &mut Unlimited).unwrap().sdepth;
        prop_assert_eq!(a + p.added, b);
    }

    #[test]
    fn nonzero_ideals_have_positive_sdepth(i in small_ideal()) {
        prop_assert!(sdepth_ideal(&i, &cfg(), &mut Unlimited).unwrap().sdepth >= 1);
    }

    #[test]
    fn size_is_a_radical_invariant(i in small_ideal()) {
        // only supports enter the definition; the radical keeps them all when
        // no support contains another (no embedded primes)
        let d = decompose(&i).unwrap();
        let supports: Vec<_> = d.components().iter().map(|q| q.support()).collect();
        let antichain = supports.iter().enumerate().all(|(a, x)| supports.iter().enumerate().all(|(b, y)| a == b || !x.is_subset(*y)));
        prop_assume!(antichain);
        prop_assert_eq!(size(&i).unwrap().size, size(&i.radical()).unwrap().size);
    }

    #[test]
    fn bound_is_sound_and_size_holds_under_hypothesis(i in small_ideal()) {
        let r = size_inequality_check(&i, &BoundConfig::default(), &mut Unlimited).unwrap();
        prop_assert!(r.bound_sound(), "{}: bound {} > sdepth {}", i, r.bound.value, r.sdepth_exact());
        prop_assert!(!r.has_violation());
        prop_assert!(r.sdepth.is_valid_for(
            &stanley_core::sdepth::characteristic_points(&i, &MonomialIdeal::unit(i.nvars()), &r.sdepth.cap).unwrap()
        ));
    }

    #[test]
    fn decomposition_round_trip(i in small_ideal()) {
        prop_assert_eq!(decompose(&i).unwrap().intersection(), i);
    }
}

#[test]
fn squarefree_ideals_always_satisfy_the_size_inequality() {
    // every squarefree ideal in three variables
    let faces: Vec<Monomial> =
        stanley_core::monomial::monomials_in_box(&[1, 1, 1]).into_iter().filter(|m| !m.is_one()).collect();
    for mask in 1u32..1 << faces.len() {
        let gens: Vec<Monomial> = (0..faces.len()).filter(|&k| mask >> k & 1 == 1).map(|k| faces[k].clone()).collect();
        let i = MonomialIdeal::new(3, gens).unwrap();
        let r = size_inequality_check(&i, &BoundConfig::default(), &mut Unlimited).unwrap();
        assert!(r.hypothesis.satisfied && r.inequality_holds() && !r.has_violation(), "{i}");
    }
}
