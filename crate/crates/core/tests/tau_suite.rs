//! `τ` with `U = <r>` on the documented instances, against brute-force
//! subset counts where the group is small enough.

use suborbit_lab::census::{
    c_of_r, quadratic_form_classify, s_set_formula_check, tau_analysis, tau_instances, FormFamily, TauOutcome,
    FAMILY_PARAMETER_LIMIT,
};
use suborbit_lab::group::{ElementSubset, GroupTable};

/// Number of subsets closed under inversion and under `x ↦ xr` off `{1, r}`.
fn brute_invariant_subsets(t: &GroupTable, r: u32) -> u64 {
    let n = t.order();
    let tau = |x: u32| if x == 0 || x == r { x } else { t.mul(x, r) };
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        let has = |x: u32| mask >> x & 1 == 1;
        if t.elements().all(|x| !has(x) || (has(t.inv(x)) && has(tau(x)))) {
            count += 1;
        }
    }
    count
}

#[test]
fn every_instance_lands_in_an_outcome() {
    let instances = tau_instances().unwrap();
    assert_eq!(instances.len(), 3 + 3 * 3 * 4 + 4);
    for inst in &instances {
        let u = ElementSubset::from_iter(inst.table.order(), [0, inst.r]);
        let rep = tau_analysis(&inst.table, &u, inst.r).unwrap();
        assert!(rep.fix_formulas_match, "{}", inst.name);
        assert_eq!(rep.kappa, rep.kappa_burnside, "{}", inst.name);
        assert_ne!(rep.outcome, TauOutcome::None, "{}", inst.name);
        assert!(rep.holds, "{}", inst.name);
        let n = inst.table.order();
        assert_eq!(rep.below_48, 48 * rep.kappa + n <= 48 * c_of_r(&inst.table), "{}", inst.name);
        if n <= 16 {
            assert_eq!(brute_invariant_subsets(&inst.table, inst.r), 1 << rep.kappa, "{}", inst.name);
        }
    }
}

#[test]
fn documented_outcomes() {
    let instances = tau_instances().unwrap();
    let get = |name: &str| {
        let inst = instances.iter().find(|i| i.name == name).unwrap();
        let u = ElementSubset::from_iter(inst.table.order(), [0, inst.r]);
        tau_analysis(&inst.table, &u, inst.r).unwrap()
    };
    let c6 = get("C6");
    assert_eq!((c6.fix_identity, c6.fix_iota, c6.fix_tau, c6.fix_iota_tau), (6, 2, 2, 2));
    assert_eq!(c6.kappa, 3);
    assert_eq!(c6.outcome, TauOutcome::BelowBound48);
    assert!(get("C4").c4_times_elementary);
    let q8 = get("Q8");
    assert_eq!(q8.s_size, 6);
    assert!(q8.generalized_dicyclic);
    for l in 0..=FAMILY_PARAMETER_LIMIT {
        assert!(get(&format!("q8chain(1,{l})")).generalized_dicyclic, "Q8 x C2^{l}");
        assert!(get(&format!("c4c2({l})")).c4_times_elementary, "C4 x C2^{l}");
    }
    // D8 o D8 and C4 o D8 clear the bound outright.
    assert_eq!(get("d8chain(2,0)").outcome, TauOutcome::BelowBound48);
    assert_eq!(get("c4chain(1,0)").outcome, TauOutcome::BelowBound48);
}

#[test]
fn square_root_counts() {
    for family in [FormFamily::D8Chain, FormFamily::Q8Chain, FormFamily::C4Chain, FormFamily::C4C2] {
        let ts = if family == FormFamily::C4C2 { 0..=0 } else { 1..=FAMILY_PARAMETER_LIMIT };
        for t in ts {
            for l in 0..=FAMILY_PARAMETER_LIMIT {
                let rep = s_set_formula_check(t, l, family).unwrap();
                assert!(rep.holds, "{family:?} t={t} l={l}: {} vs {}", rep.s_size, rep.expected);
            }
        }
    }
    // Q8 o D8 o D8 has order 128 and (2^3 + 1) * 128 / 16 = 72 square roots of r.
    assert_eq!(s_set_formula_check(3, 0, FormFamily::Q8Chain).unwrap().s_size, 72);
}

#[test]
fn forms_recover_the_family() {
    for inst in tau_instances().unwrap().iter().filter(|i| i.table.order() >= 8) {
        let class = quadratic_form_classify(&inst.table, inst.r).unwrap();
        assert!(class.isomorphism_checked.unwrap_or(true), "{}", inst.name);
        let expected_prefix = match class.family {
            FormFamily::C4C2 => format!("c4c2({})", class.l),
            f => format!("{}({},{})", f.name(), class.t, class.l),
        };
        if inst.name.contains('(') {
            assert_eq!(inst.name, expected_prefix);
        }
    }
}
