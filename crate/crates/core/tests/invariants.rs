use proptest::prelude::*;

use suborbit_lab::census::{c_of_r, tau_map};
use suborbit_lab::gf2::{
    affine_coset_action, close_matrices, conjugate_group, enumerate_gl42, orbit_ratio, selection_property,
    stabilizer_of_w, subspace_orbit, Gf2Matrix, Gf2Subspace,
};
use suborbit_lab::group::{cyclic, dihedral, direct_product, elementary_abelian, generalized_dicyclic, ElementSubset, GroupTable};
use suborbit_lab::perm::{PermGroup, Permutation};
use suborbit_lab::suborbit::{conjecture_form_check, suborbit_profile};
use suborbit_lab::ExactRatio;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..10).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

fn two_generated() -> impl Strategy<Value = PermGroup> {
    (2usize..=7)
        .prop_flat_map(|n| (perm(n), perm(n)))
        .prop_map(|(x, y)| PermGroup::generate(x.degree(), vec![x, y]).unwrap())
}

fn small_table() -> impl Strategy<Value = GroupTable> {
    (0usize..6, 1usize..7).prop_map(|(kind, k)| match kind {
        0 => cyclic(k + 1).unwrap(),
        1 => dihedral(2 * (k + 1)).unwrap(),
        2 => elementary_abelian(k.min(4)).unwrap(),
        3 => generalized_dicyclic(&cyclic(2 * k + 2).unwrap(), (k + 1) as u32).unwrap(),
        4 => direct_product(&cyclic(k + 1).unwrap(), &dihedral(8).unwrap()),
        _ => direct_product(&cyclic(4).unwrap(), &cyclic(k + 1).unwrap()),
    })
}

fn gl42_element() -> impl Strategy<Value = Gf2Matrix> {
    let gl = enumerate_gl42();
    (0..gl.len()).prop_map(move |i| gl[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutations_form_a_group((x, y, z) in perm_triple()) {
        let id = Permutation::identity(x.degree());
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert_eq!(x.compose(&x.inverse()), id.clone());
        prop_assert_eq!(x.compose(&id), x.clone());
        let mut p = id.clone();
        for _ in 0..x.order() {
            p = p.compose(&x);
        }
        prop_assert_eq!(p, id);
        // Right action: p^(xy) = (p^x)^y.
        for p in 0..x.degree() as u32 {
            prop_assert_eq!(x.compose(&y).apply(p), y.apply(x.apply(p)));
        }
    }

    #[test]
    fn suborbit_profile_is_a_partition(g in two_generated()) {
        prop_assume!(g.is_transitive());
        let n = g.degree();
        let p = suborbit_profile(&g, 0).unwrap();
        let total: usize = p.sizes().values().sum();
        prop_assert_eq!(total, n);
        let small = p.part_size(1) + p.part_size(2);
        prop_assert_eq!(p.ratio, ExactRatio::new(small as u64, n as u64).unwrap());
        // The fixed points of a point stabilizer form a block.
        prop_assert_eq!(n % p.d, 0);
        for (&i, &x) in &p.x {
            prop_assert_eq!(x * p.d, p.part_size(i));
            prop_assert_eq!(p.part_size(i) % i, 0);
        }
        for base in 1..n {
            prop_assert_eq!(suborbit_profile(&g, base).unwrap().sizes(), p.sizes());
        }
    }

    #[test]
    fn ratio_text_round_trips(a in 0u64..10_000, b in 1u64..10_000) {
        let r = ExactRatio::new(a, b).unwrap();
        prop_assert_eq!(r.to_string().parse::<ExactRatio>().unwrap(), r);
        let s = ExactRatio::new(b, a + b).unwrap();
        prop_assert_eq!(r < s, (a as u128) * ((a + b) as u128) < (b as u128) * (b as u128));
    }

    #[test]
    fn conjecture_form_matches_direct_division(b in 2u64..500, a_off in 0u64..500) {
        let a = b / 2 + 1 + a_off % (b - b / 2);
        prop_assume!(a <= b);
        let form = conjecture_form_check(ExactRatio::new(a, b).unwrap());
        let (a, b) = { let r = ExactRatio::new(a, b).unwrap(); (r.numer(), r.denom()) };
        prop_assert_eq!(form.conforms, (2 * b) % (2 * a - b) == 0);
        let q = form.q.unwrap();
        // (q + 1) / 2q == a / b
        prop_assert_eq!((q.numer() + q.denom()) * b, 2 * q.numer() * a);
    }

    #[test]
    fn involutions_pair_off(t in small_table()) {
        let square_roots_of_one = t.elements().filter(|&x| t.mul(x, x) == 0).count();
        prop_assert_eq!((t.order() - square_roots_of_one) % 2, 0);
        prop_assert_eq!(c_of_r(&t), (t.order() + square_roots_of_one) / 2);
    }

    #[test]
    fn tau_is_an_involution(t in small_table()) {
        for r in t.elements().filter(|&x| x != 0 && t.is_involution(x) && t.is_central(x)) {
            let u = ElementSubset::from_iter(t.order(), [0, r]);
            let tau = tau_map(&t, &u, r);
            prop_assert!(tau.compose(&tau).is_identity());
        }
    }

    #[test]
    fn orbit_ratio_is_invariant_under_the_stabilizer_of_w(x in gl42_element(), y in gl42_element(), k in 0usize..576) {
        let h = close_matrices(&[x, y]);
        prop_assume!(h.len() <= 2000);
        let kk = stabilizer_of_w()[k];
        let conj = conjugate_group(&h, kk);
        prop_assert_eq!(orbit_ratio(&h).unwrap(), orbit_ratio(&conj).unwrap());
        prop_assert_eq!(selection_property(&h).unwrap(), selection_property(&conj).unwrap());
    }
}

fn unitriangular() -> Vec<Gf2Matrix> {
    enumerate_gl42()
        .into_iter()
        .filter(|m| (0..4).all(|i| m.entry(i, i) == 1 && (0..i).all(|j| m.entry(i, j) == 0)))
        .collect()
}

/// Generators of a small subgroup: two elements of a conjugate of the
/// unitriangular 2-Sylow subgroup, or one arbitrary element.
fn small_matrix_group() -> impl Strategy<Value = Vec<Gf2Matrix>> {
    let u = unitriangular();
    let n = u.len();
    prop_oneof![
        (0..n, 0..n, gl42_element()).prop_map(move |(a, b, g)| {
            let gi = g.inverse().unwrap();
            vec![gi.mul(u[a]).mul(g), gi.mul(u[b]).mul(g)]
        }),
        gl42_element().prop_map(|x| vec![x]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coset_action_ratio_is_the_orbit_ratio(gens in small_matrix_group()) {
        let h = close_matrices(&gens);
        let action = affine_coset_action(&gens).unwrap();
        let g = PermGroup::generate(action.degree, action.generators.clone()).unwrap();
        prop_assert!(g.is_transitive());
        let profile = suborbit_profile(&g, action.base as usize).unwrap();
        prop_assert_eq!(profile.ratio, orbit_ratio(&h).unwrap());
        // Faithful exactly when the conjugates of W meet in zero.
        let faithful = g.order() == 16 * h.len();
        let meet = subspace_orbit(Gf2Subspace::w(), &h).iter().fold(0xffffu16, |acc, u| acc & u.members());
        prop_assert_eq!(faithful, meet == 1);
    }
}

#[test]
fn gl42_has_the_expected_sizes() {
    assert_eq!(enumerate_gl42().len(), 20160);
    assert_eq!(unitriangular().len(), 64);
    assert_eq!(stabilizer_of_w().len(), 576);
}
