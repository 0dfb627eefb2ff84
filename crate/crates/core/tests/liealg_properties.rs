use lorentz_bott::exact::{q, vector, Rational, Vector3};
use lorentz_bott::liealg::{
    bracket, build_group, check_jacobi, sample_params, CasePredicate, Group, GroupSpec, Param, Params, Recipe, Region,
    StructureConstants,
};
use lorentz_bott::Error;
use proptest::prelude::*;

fn spec(group: Group, assignments: &str) -> GroupSpec {
    GroupSpec::new(group, Params::parse_assignments(assignments).unwrap())
}

fn generic(group: Group, seed: u64) -> StructureConstants {
    let region = Region::new(format!("props.{group}"), group, CasePredicate::always(), default_recipe(group)).unwrap();
    build_group(&sample_params(&region, seed, 1).unwrap()[0]).unwrap()
}

fn default_recipe(group: Group) -> Recipe {
    lorentz_bott::collineation::catalog()
        .pair(group, lorentz_bott::connection::Distribution::B1)
        .recipe
        .clone()
}

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn vec3() -> impl Strategy<Value = Vector3> {
    proptest::array::uniform3(small())
}

fn group() -> impl Strategy<Value = Group> {
    proptest::sample::select(Group::ALL.to_vec())
}

#[test]
fn g2_bracket_e2_e3() {
    let sc = build_group(&spec(Group::G2, "alpha=1,beta=2,gamma=3")).unwrap();
    assert_eq!(bracket(&sc, &vector::basis(1), &vector::basis(2)), vector::basis(0));
}

#[test]
fn g7_bracket_e1_e2() {
    let sc = build_group(&spec(Group::G7, "alpha=0,beta=1,gamma=0,delta=1")).unwrap();
    assert_eq!(bracket(&sc, &vector::basis(0), &vector::basis(1)), vector::from_ints([0, -1, -1]));
}

#[test]
fn g4_satisfies_jacobi() {
    let sc = Group::G4
        .structure_constants_unchecked(&Params::parse_assignments("alpha=1,beta=2,eta=1").unwrap())
        .unwrap();
    assert!(check_jacobi(&sc).valid());
}

#[test]
fn constraint_violations_are_named() {
    let err = build_group(&spec(Group::G1, "alpha=0,beta=1")).unwrap_err();
    assert!(matches!(err, Error::ConstraintViolation { ref group, .. } if group == "G1"), "{err}");
    let err = build_group(&spec(Group::G4, "alpha=1,beta=1,eta=2")).unwrap_err();
    assert!(matches!(err, Error::ConstraintViolation { .. }), "{err}");
    let err = build_group(&spec(Group::G7, "alpha=1,beta=1,gamma=1,delta=1")).unwrap_err();
    assert!(matches!(err, Error::ConstraintViolation { .. }), "{err}");
}

#[test]
fn parameter_sets_must_match_the_group() {
    assert!(matches!(
        build_group(&spec(Group::G3, "alpha=1,beta=1")),
        Err(Error::MissingParameter { .. })
    ));
    assert!(matches!(
        build_group(&spec(Group::G3, "alpha=1,beta=1,gamma=1,delta=1")),
        Err(Error::UnexpectedParameter { .. })
    ));
    assert!(Params::parse_assignments("alpha=1,alpha=2").is_err());
    assert!(Params::parse_assignments("theta=1").is_err());
}

#[test]
fn json_algebras_are_validated() {
    let bad = r#"{"c": [[["0","0","0"],["0","0","1"],["0","0","0"]],
                        [["0","0","0"],["0","0","0"],["0","0","0"]],
                        [["0","0","0"],["0","0","0"],["0","0","0"]]]}"#;
    let err = StructureConstants::from_json(bad).unwrap_err().to_string();
    assert!(err.contains("antisymmetric"), "{err}");
    let sc = build_group(&spec(Group::G6, "alpha=1,beta=2,gamma=2,delta=1")).unwrap();
    let json = serde_json::to_string(&sc).unwrap();
    assert_eq!(StructureConstants::from_json(&json).unwrap(), sc);
}

#[test]
fn sampling_is_reproducible_and_admissible() {
    for g in Group::ALL {
        let region = Region::new("repro", g, CasePredicate::always(), default_recipe(g)).unwrap();
        let a = sample_params(&region, 7, 15).unwrap();
        assert_eq!(a, sample_params(&region, 7, 15).unwrap());
        assert_ne!(a, sample_params(&region, 8, 15).unwrap(), "{g}");
        for s in &a {
            assert!(build_group(s).is_ok(), "{g} {}", s.params);
        }
    }
}

#[test]
fn predicates_restrict_samples() {
    let pred = CasePredicate::parse("alpha = 0; beta != 0").unwrap();
    let recipe = Recipe::parse("alpha=0; beta=nz; gamma=nz").unwrap();
    let region = Region::new("restricted", Group::G2, pred, recipe).unwrap();
    for s in sample_params(&region, 1, 20).unwrap() {
        assert!(s.params.get(Param::Alpha).unwrap().is_zero());
        assert!(!s.params.get(Param::Beta).unwrap().is_zero());
    }
}

#[test]
fn infeasible_regions_exhaust() {
    let pred = CasePredicate::parse("alpha != 0").unwrap();
    let recipe = Recipe::parse("alpha=0; beta=any; gamma=nz").unwrap();
    let region = Region::new("never", Group::G2, pred, recipe).unwrap();
    assert!(matches!(sample_params(&region, 0, 1), Err(Error::ExhaustedSampling { .. })));
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(g in group(), seed in 0u64..50, u in vec3(), v in vec3()) {
        let sc = generic(g, seed);
        let uv = bracket(&sc, &u, &v);
        let vu = bracket(&sc, &v, &u);
        prop_assert!(vector::is_zero(&vector::add(&uv, &vu)));
    }

    #[test]
    fn bracket_is_bilinear(g in group(), seed in 0u64..50, u in vec3(), v in vec3(), w in vec3(), t in small()) {
        let sc = generic(g, seed);
        let lhs = bracket(&sc, &vector::add(&u, &vector::scale(&t, &v)), &w);
        let rhs = vector::add(&bracket(&sc, &u, &w), &vector::scale(&t, &bracket(&sc, &v, &w)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sampled_groups_satisfy_jacobi(g in group(), seed in any::<u64>()) {
        prop_assert!(check_jacobi(&generic(g, seed)).valid());
    }
}
