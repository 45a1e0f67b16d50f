//! Property tests of the kernel against the oracles in `syzcalc-testkit`.

use std::cmp::Ordering;

use proptest::prelude::*;
use syzcalc_core::division::divide;
use syzcalc_core::groebner::{buchberger, pseudo_reduce, GroebnerError, GroebnerOptions};
use syzcalc_core::orders::{BaseOrderKind, MonomialOrder};
use syzcalc_core::polynomials::{FreeModule, ModuleMonomial, Monomial, Term};
use syzcalc_core::resolutions::{free_resolution, schreyer_syzygies};
use syzcalc_core::rings::{CoherentRing, Integers, IntegersMod, Rationals, Ring, StrictBezout};
use syzcalc_core::syzygies::{flatten, iterated_s_list, syzygies_of_terms, syzygies_of_terms_bezout, DEFAULT_LEVEL_SET_CAP};
use syzcalc_testkit::contracts::{check_division, check_groebner, check_resolution, check_schreyer};
use syzcalc_testkit::{
    brute_force_syzygies, field_buchberger_oracle, field_reduce, in_term_syzygy_span, oracle_dot, to_sparse,
    verify_syzygy, BruteForceError, IdealOracle, InstanceBounds, OracleOrder, QPoly, RandomInstanceSpec,
};

fn small() -> InstanceBounds {
    InstanceBounds {
        max_vars: 2,
        max_rank: 2,
        max_count: 3,
        max_degree: 2,
        coeff_bound: 6,
        max_terms: 2,
    }
}

fn kinds() -> impl Strategy<Value = BaseOrderKind> {
    prop_oneof![Just(BaseOrderKind::Lex), Just(BaseOrderKind::Grlex), Just(BaseOrderKind::Grevlex)]
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..5, n).prop_map(Monomial::new)
}

fn division_holds<R: CoherentRing + IdealOracle + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), InstanceBounds::default(), seed);
    let h = spec.module(ring);
    let divisors = spec.polynomials(&h);
    let u = spec.extra(&h);
    let d = divide(&h, &u, &divisors).map_err(|e| TestCaseError::fail(format!("{e:?}")))?;
    check_division(&h, &u, &divisors, &d).map_err(TestCaseError::fail)
}

fn closure_holds<R: CoherentRing + StrictBezout + IdealOracle + Copy>(ring: R, seed: u64, bezout: bool) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), small(), seed);
    let h = spec.module(ring);
    let fs = spec.polynomials(&h);
    let mut opts = GroebnerOptions::<R>::default().max_rounds(12);
    if bezout {
        opts = opts.bezout();
    }
    match buchberger(&h, &fs, &opts) {
        Ok((gb, report)) => {
            prop_assert!(report.terminated);
            check_groebner(&h, &fs, &gb, &opts).map_err(TestCaseError::fail)?;
            let reduced = pseudo_reduce(&h, &gb);
            check_groebner(&h, &fs, &reduced, &opts).map_err(TestCaseError::fail)
        }
        Err(GroebnerError::RoundLimitExceeded { .. }) => Ok(()),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

fn term_syzygies_are_syzygies<R: CoherentRing + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), InstanceBounds::default(), seed);
    let h = spec.module(ring);
    let terms = spec.terms(&h);
    let fs: Vec<_> = terms.iter().map(|t| h.normalize(vec![t.clone()])).collect();
    let levels = syzygies_of_terms(&h, &terms, DEFAULT_LEVEL_SET_CAP).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for v in flatten(&levels) {
        prop_assert!(verify_syzygy(&ring, &v, &fs));
    }
    Ok(())
}

fn s_lists_track_combinations<R: CoherentRing + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), small(), seed);
    let h = spec.module(ring);
    let fs = spec.polynomials(&h);
    let items = iterated_s_list(&h, 1, &fs, 1 << 12).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(items.len() >= fs.len());
    for item in &items {
        prop_assert_eq!(oracle_dot(&ring, &item.combination, &fs), to_sparse(&ring, &item.vector));
    }
    Ok(())
}

fn schreyer_holds<R: CoherentRing + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), small(), seed);
    let h = spec.module(ring);
    let opts = GroebnerOptions::<R>::default().max_rounds(12);
    let Ok((gb, _)) = buchberger(&h, &spec.polynomials(&h), &opts) else {
        return Ok(());
    };
    // Level sets grow like 2^len within one position.
    if gb.elements.len() > 8 {
        return Ok(());
    }
    let out = schreyer_syzygies(&h, &gb.elements, &opts).map_err(|e| TestCaseError::fail(e.to_string()))?;
    check_schreyer(&out, &gb.elements).map_err(TestCaseError::fail)
}

fn resolution_holds<R: CoherentRing + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let bounds = InstanceBounds { max_rank: 1, max_count: 2, ..small() };
    let spec = RandomInstanceSpec::draw(ring.descriptor(), bounds, seed);
    let h = spec.module(ring);
    let fs = spec.polynomials(&h);
    let mut opts = GroebnerOptions::<R>::default().max_rounds(12);
    opts.level_set_cap = 1 << 10;
    match free_resolution(&h, &fs, spec.nvars + 2, &opts) {
        Ok(res) => {
            check_resolution(&res).map_err(TestCaseError::fail)?;
            prop_assert!(res.length() <= spec.nvars + 1);
            Ok(())
        }
        // Capped completions are reported, not checked.
        Err(_) => Ok(()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn orders_are_total_and_multiplicative(kind in kinds(), a in monomial(3), b in monomial(3), c in monomial(3)) {
        let o = MonomialOrder::new(kind, 3);
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
        prop_assert_ne!(o.compare(&Monomial::one(3), &a), Ordering::Greater);
    }

    #[test]
    fn kernel_order_matches_oracle_order(kind in kinds(), a in monomial(3), b in monomial(3)) {
        let oracle = match kind {
            BaseOrderKind::Lex => OracleOrder::Lex,
            BaseOrderKind::Grlex => OracleOrder::Grlex,
            BaseOrderKind::Grevlex => OracleOrder::Grevlex,
        };
        prop_assert_eq!(MonomialOrder::new(kind, 3).compare(&a, &b), oracle.compare(a.exponents(), b.exponents()));
    }

    #[test]
    fn division_over_integers(seed in any::<u64>()) { division_holds(Integers, seed)?; }

    #[test]
    fn division_over_rationals(seed in any::<u64>()) { division_holds(Rationals, seed)?; }

    #[test]
    fn division_over_integers_mod(seed in any::<u64>(), n in 2u64..30) { division_holds(IntegersMod::new(n), seed)?; }

    #[test]
    fn buchberger_over_integers(seed in any::<u64>(), bezout in any::<bool>()) { closure_holds(Integers, seed, bezout)?; }

    #[test]
    fn buchberger_over_integers_mod(seed in any::<u64>(), n in prop_oneof![Just(4u64), Just(6), Just(8), Just(12)]) {
        closure_holds(IntegersMod::new(n), seed, false)?;
    }

    #[test]
    fn term_syzygies_vanish(seed in any::<u64>()) {
        term_syzygies_are_syzygies(Integers, seed)?;
        term_syzygies_are_syzygies(Rationals, seed)?;
        term_syzygies_are_syzygies(IntegersMod::new(12), seed)?;
    }

    #[test]
    fn s_list_combinations(seed in any::<u64>()) {
        s_lists_track_combinations(Integers, seed)?;
        s_lists_track_combinations(IntegersMod::new(8), seed)?;
    }

    #[test]
    fn schreyer_leading_terms(seed in any::<u64>()) {
        schreyer_holds(Integers, seed)?;
        schreyer_holds(IntegersMod::new(8), seed)?;
        schreyer_holds(Rationals, seed)?;
    }

    #[test]
    fn resolutions_compose_to_zero(seed in any::<u64>()) {
        resolution_holds(Rationals, seed)?;
        resolution_holds(IntegersMod::new(8), seed)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    /// Over ZZ/8 the term syzygies are compared with every homogeneous
    /// syzygy of low degree found by enumeration.
    #[test]
    fn term_syzygies_complete_mod_8(seed in any::<u64>(), bezout in any::<bool>()) {
        let ring = IntegersMod::new(8);
        let bounds = InstanceBounds { max_vars: 2, max_rank: 2, max_count: 3, max_degree: 2, coeff_bound: 7, max_terms: 1 };
        let spec = RandomInstanceSpec::draw(ring.descriptor(), bounds, seed);
        let h = spec.module(ring);
        let terms = spec.terms(&h);
        let levels = if bezout {
            syzygies_of_terms_bezout(&h, &terms, DEFAULT_LEVEL_SET_CAP)
        } else {
            syzygies_of_terms(&h, &terms, DEFAULT_LEVEL_SET_CAP)
        };
        let gens = flatten(&levels.map_err(|e| TestCaseError::fail(e.to_string()))?);
        let top = terms.iter().map(|t| t.monomial.monomial.degree() as u32).max().unwrap_or(0) + 1;
        let cap = 1 << 16;
        let all = match brute_force_syzygies(&h, &terms, top, cap) {
            Ok(v) => v,
            Err(BruteForceError::Explosion { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
        };
        for v in &all {
            match in_term_syzygy_span(&ring, &terms, &gens, v, cap) {
                Ok(inside) => prop_assert!(inside, "syzygy {:?} missed", v.entries),
                Err(BruteForceError::Explosion { .. }) => {}
                Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
            }
        }
    }

    /// Over QQ the kernel and the textbook completion generate the same ideal.
    #[test]
    fn field_completion_agrees(seed in any::<u64>()) {
        let bounds = InstanceBounds { max_vars: 3, max_rank: 1, max_count: 3, max_degree: 3, coeff_bound: 5, max_terms: 3 };
        let spec = RandomInstanceSpec::draw(Rationals.descriptor(), bounds, seed);
        let h: FreeModule<Rationals> = spec.module(Rationals);
        let fs = spec.polynomials(&h);
        let (gb, _) = buchberger(&h, &fs, &GroebnerOptions::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let order = match spec.order {
            BaseOrderKind::Lex => OracleOrder::Lex,
            BaseOrderKind::Grlex => OracleOrder::Grlex,
            BaseOrderKind::Grevlex => OracleOrder::Grevlex,
        };
        let oracle = field_buchberger_oracle(&fs.iter().map(QPoly::from_poly).collect::<Vec<_>>(), order);
        for g in &gb.elements {
            prop_assert!(field_reduce(&QPoly::from_poly(g), &oracle, order).is_zero());
        }
        for o in &oracle {
            let v = h.normalize(
                o.terms
                    .iter()
                    .map(|(e, c)| Term::new(c.clone(), ModuleMonomial::new(Monomial::new(e.clone()), 0)))
                    .collect(),
            );
            prop_assert!(divide(&h, &v, &gb.elements).unwrap().remainder.is_zero());
        }
    }
}
