use std::sync::{Arc, OnceLock};

use fixedspace::corpus::{self, CorpusEntry};
use fixedspace::function_space::{
    fourier_projection, indicator_basis, inner_product, invariant_kernel_spanning_set,
    is_invariant, sigma, span_dimension,
};
use fixedspace::partition_group::{group_from_partition, GeneratorMode};
use fixedspace::res_ind::{
    extend_by_zero, induce, reciprocity_check, restrict, FunctionOnY, InvariantSubset,
};
use fixedspace::{
    FiniteGroup, FunctionOnX, GaussianRational, GroupAction, Partition, Permutation,
    PermutationGroup, Rational,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn entries() -> &'static [CorpusEntry] {
    static ENTRIES: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let mut all = corpus::default_entries();
        all.extend(corpus::sample_entries());
        all
    })
}

fn scalar(rng: &mut impl Rng) -> GaussianRational {
    GaussianRational::from_fractions(
        rng.gen_range(-5..=5),
        rng.gen_range(1..=3),
        rng.gen_range(-5..=5),
        rng.gen_range(1..=3),
    )
}

fn function(rng: &mut impl Rng, n: usize) -> FunctionOnX {
    FunctionOnX::new((0..n).map(|_| scalar(rng)).collect())
}

fn invariant_function(rng: &mut impl Rng, act: &GroupAction) -> FunctionOnX {
    let mut values = vec![GaussianRational::zero(); act.degree()];
    for cell in act.orbits().cells() {
        let v = scalar(rng);
        for &x in cell {
            values[x] = v.clone();
        }
    }
    FunctionOnX::new(values)
}

fn random_union_of_orbits(rng: &mut impl Rng, act: &GroupAction) -> InvariantSubset {
    let orbits = act.orbits();
    let mut points: Vec<usize> = orbits
        .cells()
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .flatten()
        .copied()
        .collect();
    if points.is_empty() {
        points = orbits.cells()[0].clone();
    }
    InvariantSubset::new(act, &points).unwrap()
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn generators() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 0..3)))
}

fn set_partition() -> impl Strategy<Value = Partition> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, n)))
        .prop_map(|(n, labels)| {
            let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (x, &l) in labels.iter().enumerate() {
                cells[l].push(x);
            }
            Partition::new(n, cells.into_iter().filter(|c| !c.is_empty()).collect()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_output_validates((n, gens) in generators()) {
        let gens: Vec<Permutation> = gens.into_iter().map(|g| Permutation::new(g).unwrap()).collect();
        let pg = PermutationGroup::from_generators(n, &gens, 200).unwrap();
        let g = &pg.group;
        prop_assert!(FiniteGroup::from_table(g.table(), None, None).is_ok());
        prop_assert!(GroupAction::new(Arc::new(g.clone()), GroupAction::evaluation(&pg).table()).is_ok());
    }

    #[test]
    fn subgroup_generation_is_idempotent((n, gens) in generators(), seeds in prop::collection::vec(0usize..120, 0..3)) {
        let gens: Vec<Permutation> = gens.into_iter().map(|g| Permutation::new(g).unwrap()).collect();
        let g = PermutationGroup::from_generators(n, &gens, 200).unwrap().group;
        let seeds: Vec<usize> = seeds.into_iter().map(|s| s % g.order()).collect();
        let h = g.subgroup_generated(&seeds);
        let again = g.subgroup_generated(h.members());
        prop_assert_eq!(again.members(), h.members());
        prop_assert_eq!(g.index(&h) * h.order(), g.order());
    }

    #[test]
    fn hermitian_axioms(idx in 0usize..64, seed in any::<u64>()) {
        let act = &entries()[idx % entries().len()].action;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (function(&mut rng, act.degree()), function(&mut rng, act.degree()), function(&mut rng, act.degree()));
        let alpha = scalar(&mut rng);
        prop_assert_eq!(inner_product(&f, &g).unwrap(), inner_product(&g, &f).unwrap().conjugate());
        let lhs = inner_product(&f.scale(&alpha).add(&h), &g).unwrap();
        prop_assert_eq!(lhs, &alpha * &inner_product(&f, &g).unwrap() + inner_product(&h, &g).unwrap());
        let ff = inner_product(&f, &f).unwrap();
        prop_assert!(ff.is_real() && !ff.re.is_negative());
        prop_assert_eq!(ff.is_zero(), f.is_zero());
    }

    #[test]
    fn projection_lands_in_invariants(idx in 0usize..64, seed in any::<u64>()) {
        let act = &entries()[idx % entries().len()].action;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = fourier_projection(act, &function(&mut rng, act.degree())).unwrap();
        prop_assert!(is_invariant(act, &p).unwrap().is_some());
        let inv = invariant_function(&mut rng, act);
        prop_assert_eq!(fourier_projection(act, &inv).unwrap(), inv);
    }

    #[test]
    fn restriction_and_extension(idx in 0usize..64, seed in any::<u64>()) {
        let act = &entries()[idx % entries().len()].action;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_union_of_orbits(&mut rng, act);
        let g = FunctionOnY::new(y.clone(), (0..y.len()).map(|_| scalar(&mut rng)).collect()).unwrap();
        prop_assert_eq!(&restrict(&extend_by_zero(&g), &y).unwrap(), &g);

        let f = function(&mut rng, act.degree());
        let masked = extend_by_zero(&restrict(&f, &y).unwrap());
        for x in 0..act.degree() {
            let expected = if y.contains(x) { f.value(x).clone() } else { GaussianRational::zero() };
            prop_assert_eq!(masked.value(x), &expected);
        }

        let inv = invariant_function(&mut rng, act);
        let g_inv = restrict(&inv, &y).unwrap();
        prop_assert!(is_invariant(act, &extend_by_zero(&g_inv)).unwrap().is_some());

        // Ind symmetrizes even a non-invariant argument.
        prop_assert!(is_invariant(act, &induce(act, &y, &g).unwrap()).unwrap().is_some());
    }

    #[test]
    fn reciprocity_is_sesquilinear(idx in 0usize..64, seed in any::<u64>()) {
        let act = &entries()[idx % entries().len()].action;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_union_of_orbits(&mut rng, act);
        let f1 = restrict(&invariant_function(&mut rng, act), &y).unwrap();
        let f2 = restrict(&invariant_function(&mut rng, act), &y).unwrap();
        let g = invariant_function(&mut rng, act);
        let alpha = scalar(&mut rng);
        let combo = FunctionOnY::new(
            y.clone(),
            f1.values().iter().zip(f2.values()).map(|(a, b)| &alpha * a + b.clone()).collect(),
        ).unwrap();
        let r1 = reciprocity_check(act, &y, &f1, &g).unwrap();
        let r2 = reciprocity_check(act, &y, &f2, &g).unwrap();
        let rc = reciprocity_check(act, &y, &combo, &g).unwrap();
        prop_assert!(r1.equal && r2.equal && rc.equal);
        prop_assert_eq!(rc.lhs, &alpha * &r1.lhs + r2.lhs);

        let g2 = g.scale(&alpha);
        let rg = reciprocity_check(act, &y, &f1, &g2).unwrap();
        prop_assert_eq!(rg.lhs, &alpha.conjugate() * &r1.lhs);
    }

    #[test]
    fn partition_round_trip(p in set_partition(), adjacent in any::<bool>()) {
        let mode = if adjacent { GeneratorMode::Adjacent } else { GeneratorMode::AllTranspositions };
        let pg = group_from_partition(&p, mode, 1000).unwrap();
        prop_assert_eq!(&pg.action.orbits(), &p);
        let dim = pg.action.burnside_dimension(&pg.group.group.whole()).unwrap();
        prop_assert_eq!(dim, Rational::from(p.len()));
    }
}

#[test]
fn corpus_entries_validate_and_satisfy_orbit_stabilizer() {
    for entry in entries() {
        let act = &entry.action;
        assert!(
            GroupAction::new(act.group_arc().clone(), act.table()).is_ok(),
            "{}",
            entry.name
        );
        assert!(
            entry.mismatches().is_empty(),
            "{}: {:?}",
            entry.name,
            entry.mismatches()
        );
        for x in 0..act.degree() {
            assert_eq!(
                act.orbit(x).len() * act.stabilizer(x).order(),
                act.group().order(),
                "{}",
                entry.name
            );
        }
        if entry.order_fails_to_divide_degree() {
            assert!(!act.is_free(), "{}", entry.name);
        }
    }
}

#[test]
fn orbit_indicators_are_orthonormal_up_to_scale() {
    for entry in entries() {
        let act = &entry.action;
        let n = act.degree();
        let basis = indicator_basis(act);
        let orbits = act.orbits();
        for (i, di) in basis.iter().enumerate() {
            for (j, dj) in basis.iter().enumerate() {
                let ip = inner_product(di, dj).unwrap();
                if i == j {
                    let size = orbits.cells()[i].len() as i64;
                    assert_eq!(
                        ip.scale(&Rational::new(n as i64, size)),
                        GaussianRational::one()
                    );
                } else {
                    assert!(ip.is_zero());
                }
            }
        }
    }
}

#[test]
fn invariant_kernel_has_one_less_dimension_than_orbit_count() {
    for entry in entries() {
        let act = &entry.action;
        let span = invariant_kernel_spanning_set(act);
        assert!(span
            .iter()
            .all(|f| sigma(f).is_zero() && is_invariant(act, f).unwrap().is_some()));
        assert_eq!(
            span_dimension(&span),
            act.orbits().len() - 1,
            "{}",
            entry.name
        );
    }
}

#[test]
fn trivial_iff_every_delta_is_invariant() {
    for entry in entries() {
        let act = &entry.action;
        let n = act.degree();
        let all_deltas = (0..n).all(|x| {
            is_invariant(act, &FunctionOnX::delta(n, x))
                .unwrap()
                .is_some()
        });
        let singletons = act.orbits().cells().iter().all(|c| c.len() == 1);
        assert_eq!(all_deltas, act.is_trivial(), "{}", entry.name);
        assert_eq!(singletons, act.is_trivial(), "{}", entry.name);
    }
}
