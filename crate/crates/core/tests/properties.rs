use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;

use odd_e6::coset_enum::todd_coxeter;
use odd_e6::eisenstein::{hermitian, hexaflection, hexaflection_power, EisensteinVector};
use odd_e6::gosset;
use odd_e6::isometry::{self, reflection_matrix, ModularMatrix};
use odd_e6::lattice::{self, inner, reflect, LatticeVector, Root};
use odd_e6::presentation::{self, evaluate_word, DiagramKind, Presentation, Word};
use odd_e6::suites::curated_norm_one_vectors;

fn vector(n: usize) -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(-30i64..=30, n + 1).prop_map(|c| LatticeVector::new(c).unwrap())
}

/// A root obtained by moving a simple root with a word in the simple reflections.
fn root(n: usize) -> impl Strategy<Value = Root> {
    (0..=n, prop::collection::vec(0..=n, 0..8)).prop_map(move |(start, word)| {
        let simple = lattice::simple_roots(n).unwrap();
        let mut v = simple[start].vector().clone();
        for i in word {
            v = reflect(&simple[i], &v).unwrap();
        }
        Root::new(v).unwrap()
    })
}

fn dim_root_vectors() -> impl Strategy<Value = (Root, LatticeVector, LatticeVector)> {
    (2usize..=8).prop_flat_map(|n| (root(n), vector(n), vector(n)))
}

fn eisenstein_vector() -> impl Strategy<Value = EisensteinVector> {
    prop::array::uniform4((-4i64..=4, -4i64..=4)).prop_map(EisensteinVector::from_pairs)
}

fn sorted(elements: impl Iterator<Item = ModularMatrix>) -> BTreeSet<Vec<u8>> {
    elements.map(|m| m.entries().to_vec()).collect()
}

proptest! {
    #[test]
    fn reflections_are_isometric_involutions((a, l, m) in dim_root_vectors()) {
        let rl = reflect(&a, &l).unwrap();
        let rm = reflect(&a, &m).unwrap();
        prop_assert_eq!(inner(&rl, &rm).unwrap(), inner(&l, &m).unwrap());
        prop_assert_eq!(reflect(&a, &rl).unwrap(), l);
    }

    #[test]
    fn reflection_matrices_are_forward_isometries((a, l, _m) in dim_root_vectors()) {
        let s = reflection_matrix(&a);
        prop_assert!(s.preserves_form());
        prop_assert!(s.is_forward());
        prop_assert_eq!(s.determinant(), -1);
        prop_assert!(s.mul(&s).is_identity());
        prop_assert_eq!(s.apply(&l).unwrap(), reflect(&a, &l).unwrap());
    }

    #[test]
    fn norm_one_reflections_vanish_mod_two((a, _l, _m) in dim_root_vectors()) {
        let m = isometry::reduce_mod(&reflection_matrix(&a), isometry::Modulus::Two);
        prop_assert_eq!(m.is_identity(), a.norm() == 1);
    }

    #[test]
    fn hexaflections_preserve_the_form(
        k in 0usize..5,
        u in eisenstein_vector(),
        v in eisenstein_vector(),
    ) {
        let e = curated_norm_one_vectors()[k];
        let (hu, hv) = (hexaflection(&e, &u).unwrap(), hexaflection(&e, &v).unwrap());
        prop_assert_eq!(hermitian(&hu, &hv), hermitian(&u, &v));
        prop_assert_eq!(hexaflection_power(&e, &u, 6).unwrap(), u);
    }

    #[test]
    fn hermitian_form_is_conjugate_symmetric(u in eisenstein_vector(), v in eisenstein_vector()) {
        prop_assert_eq!(hermitian(&u, &v), hermitian(&v, &u).conj());
    }

    #[test]
    fn words_times_reversals_are_trivial(letters in prop::collection::vec(0usize..10, 0..16)) {
        let walls = gosset::gosset_walls(4).unwrap();
        let labels = walls.labels();
        let assignment: HashMap<_, _> = labels.iter().cloned().zip(walls.reflections()).collect();
        let w = Word::new(letters.iter().map(|&i| labels[i].clone()));
        let rev = Word::new(letters.iter().rev().map(|&i| labels[i].clone()));
        let product = evaluate_word(&w, &assignment).unwrap().mul(&evaluate_word(&rev, &assignment).unwrap());
        prop_assert!(product.is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closure_ignores_generator_order(
        (n, order) in (2usize..=3).prop_flat_map(|n| (Just(n), Just((0..=n).collect::<Vec<usize>>()).prop_shuffle())),
    ) {
        let gens = isometry::mod3_generators(n).unwrap();
        let shuffled: Vec<ModularMatrix> = order.iter().map(|&i| gens[i].clone()).collect();
        let a = isometry::closure(&gens).unwrap();
        let b = isometry::closure(&shuffled).unwrap();
        prop_assert_eq!(sorted(a.elements().cloned()), sorted(b.elements().cloned()));
    }

    #[test]
    fn enumeration_ignores_relator_order(
        order in Just((0..22).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let p = presentation::build_presentation(DiagramKind::AffineA5);
        let shuffled = p.with_relator_order(&order);
        let t = todd_coxeter(&shuffled, &[], 200_000).unwrap();
        prop_assert_eq!(t.index(), Some(720));
        prop_assert!(t.satisfies(p.relators()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn petersen_enumeration_ignores_relator_order(
        order in Just((0..65).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let p = presentation::build_presentation(DiagramKind::Petersen);
        let t = todd_coxeter(&p.with_relator_order(&order), &[], 200_000).unwrap();
        prop_assert_eq!(t.index(), Some(51840));
    }

    #[test]
    fn relator_text_round_trips(order in Just((0..22).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = presentation::build_presentation(DiagramKind::AffineA5).with_relator_order(&order);
        let q = Presentation::parse_relator_text(&p.to_relator_text()).unwrap();
        prop_assert_eq!(q, p);
    }
}
