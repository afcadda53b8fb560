mod common;

use engel::group::{direct_product, make_family, Family};
use engel::survey::{catalog, FamilySelection};
use engel::{Group, Permutation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1usize..=5).prop_map(Family::Symmetric),
        (3usize..=5).prop_map(Family::Alternating),
        (1usize..=30).prop_map(Family::Cyclic),
        (3usize..=20).prop_map(|h| Family::Dihedral(2 * h)),
        (2usize..=10).prop_map(Family::Dicyclic),
    ]
}

fn check_laws(g: &Group) -> Result<(), TestCaseError> {
    let e = g.identity();
    prop_assert!(g.element(e).is_identity());
    for a in 0..g.order() {
        prop_assert_eq!(g.mul(a, e), a);
        prop_assert_eq!(g.mul(e, a), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), e);
        prop_assert_eq!(g.element(g.inv(a)), &g.element(a).inverse());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn families_satisfy_group_laws(f in family()) {
        let g = make_family(&f).unwrap();
        prop_assert_eq!(Some(g.order()), f.order());
        check_laws(&g)?;
    }

    #[test]
    fn enumeration_matches_naive_closure(f in family()) {
        let g = make_family(&f).unwrap();
        prop_assume!(g.order() <= 60);
        let gens: Vec<Permutation> = g.generator_perms().cloned().collect();
        let naive = common::enumerate_group(&gens);
        prop_assert_eq!(naive.as_slice(), g.elements());
    }

    #[test]
    fn closure_is_idempotent(f in family()) {
        let g = make_family(&f).unwrap();
        let again = Group::closure(g.elements(), "again").unwrap();
        prop_assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn table_agrees_with_composition(f in family(), seed in any::<u64>()) {
        let g = make_family(&f).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..50 {
            let (a, b) = (rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
            prop_assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
        }
    }
}

#[test]
fn associativity_on_random_triples() {
    let mut rng = StdRng::seed_from_u64(3);
    let groups: Vec<Group> = catalog(60, FamilySelection::all().with_nilpotent())
        .iter()
        .map(|e| e.build(&Default::default()).unwrap())
        .collect();
    let mut triples = 0;
    for g in &groups {
        for _ in 0..20 {
            let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..g.order()));
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{}", g.name());
            triples += 1;
        }
    }
    assert!(triples >= 1000, "{triples}");
}

#[test]
fn products_multiply_orders() {
    let s3 = make_family(&Family::Symmetric(3)).unwrap();
    let a4 = make_family(&Family::Alternating(4)).unwrap();
    let c5 = make_family(&Family::Cyclic(5)).unwrap();
    assert_eq!(direct_product(&s3, &c5).unwrap().order(), 30);
    assert_eq!(direct_product(&a4, &s3).unwrap().order(), 72);
}

#[test]
fn closure_cap_is_enforced() {
    use engel::group::ClosureConfig;
    let cfg = ClosureConfig {
        cap: 100,
        ..ClosureConfig::default()
    };
    let s5 = engel::group::make_family_with(&Family::Symmetric(5), &cfg);
    assert!(matches!(
        s5,
        Err(engel::GroupError::ClosureTooLarge { cap: 100 })
    ));
}
