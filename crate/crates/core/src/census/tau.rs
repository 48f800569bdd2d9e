use serde::Serialize;

use super::c_of_r;
use crate::error::{Error, Result};
use crate::group::{ElementSubset, GroupTable};
use crate::perm::{orbits_under, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauOutcome {
    /// `κ <= c(R) - |R|/48`.
    BelowBound48,
    GeneralizedDicyclic,
    /// `R ≅ C4 × C2^ℓ`.
    C4TimesElementary,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub order: usize,
    pub u_order: usize,
    pub c_r: usize,
    pub fix_identity: usize,
    pub fix_iota: usize,
    pub fix_tau: usize,
    pub fix_iota_tau: usize,
    /// `|{x ∉ U : x^2 = r}|`.
    pub s_size: usize,
    /// Closed forms for the four fixed-point counts agree with direct scans.
    pub fix_formulas_match: bool,
    pub t_order: usize,
    pub kappa: usize,
    pub kappa_burnside: usize,
    pub below_48: bool,
    pub generalized_dicyclic: bool,
    pub c4_times_elementary: bool,
    pub outcome: TauOutcome,
    pub holds: bool,
    #[serde(skip)]
    pub tau: Permutation,
}

/// `R ≅ C4 × C2^ℓ`: abelian of exponent 4 with exactly one nontrivial square.
pub fn is_c4_times_elementary(table: &GroupTable) -> bool {
    if !table.is_abelian() || table.exponent() != 4 {
        return false;
    }
    let squares = ElementSubset::from_iter(table.order(), table.elements().map(|x| table.mul(x, x)));
    squares.count() == 2
}

/// The map fixing `U` and sending `x ↦ x r` off `U`.
pub fn tau_map(table: &GroupTable, u: &ElementSubset, r: u32) -> Permutation {
    Permutation::from_images(
        table
            .elements()
            .map(|x| if u.contains(x) { x } else { table.mul(x, r) })
            .collect(),
    )
    .expect("x -> xr is a bijection on the complement of a subgroup containing r")
}

fn check_input(table: &GroupTable, u: &ElementSubset, r: u32) -> Result<()> {
    if u.universe() != table.order() {
        return Err(Error::BadTauInput("U has the wrong universe".into()));
    }
    if !table.is_subgroup(u) {
        return Err(Error::BadTauInput("U is not a subgroup".into()));
    }
    if u.count() == table.order() {
        return Err(Error::BadTauInput("U is not proper".into()));
    }
    if r as usize >= table.order() || !table.is_involution(r) || !table.is_central(r) {
        return Err(Error::BadTauInput(format!("{r} is not a central involution")));
    }
    if !u.contains(r) {
        return Err(Error::BadTauInput(format!("{r} is not in U")));
    }
    Ok(())
}

fn fixed_points(p: &Permutation) -> usize {
    p.images()
        .iter()
        .enumerate()
        .filter(|&(i, &x)| i as u32 == x)
        .count()
}

pub fn tau_analysis(table: &GroupTable, u: &ElementSubset, r: u32) -> Result<TauReport> {
    check_input(table, u, r)?;
    let n = table.order();
    let iota = Permutation::from_images(table.elements().map(|x| table.inv(x)).collect())
        .expect("inversion is a bijection");
    let tau = tau_map(table, u, r);
    let iota_tau = iota.compose(&tau);
    if !tau.compose(&tau).is_identity() || iota_tau != tau.compose(&iota) {
        return Err(Error::Invariant("tau is not an involution commuting with inversion".into()));
    }

    let s_size = table
        .elements()
        .filter(|&x| !u.contains(x) && table.mul(x, x) == r)
        .count();
    let involutions_u = u.iter().filter(|&x| table.mul(x, x) == 0).count();
    let fix = [
        n,
        table.involution_set().count(),
        u.count(),
        involutions_u + s_size,
    ];
    let perms = [Permutation::identity(n), iota.clone(), tau.clone(), iota_tau];
    let scanned: Vec<usize> = perms.iter().map(fixed_points).collect();
    let fix_formulas_match = scanned == fix;

    // Burnside over the distinct elements of T = <ι, τ>.
    let mut distinct: Vec<&Permutation> = Vec::new();
    let mut fix_sum = 0;
    for (p, &f) in perms.iter().zip(&scanned) {
        if !distinct.contains(&p) {
            distinct.push(p);
            fix_sum += f;
        }
    }
    let t_order = distinct.len();
    if fix_sum % t_order != 0 {
        return Err(Error::Invariant(format!(
            "fixed-point sum {fix_sum} is not divisible by |T| = {t_order}"
        )));
    }
    let kappa_burnside = fix_sum / t_order;
    let kappa = orbits_under(&[iota, tau.clone()], n).len();

    let c_r = c_of_r(table);
    let below_48 = 48 * kappa + n <= 48 * c_r;
    let generalized_dicyclic = table.is_generalized_dicyclic();
    let c4_times_elementary = is_c4_times_elementary(table);
    let outcome = if below_48 {
        TauOutcome::BelowBound48
    } else if generalized_dicyclic {
        TauOutcome::GeneralizedDicyclic
    } else if c4_times_elementary {
        TauOutcome::C4TimesElementary
    } else {
        TauOutcome::None
    };
    Ok(TauReport {
        order: n,
        u_order: u.count(),
        c_r,
        fix_identity: scanned[0],
        fix_iota: scanned[1],
        fix_tau: scanned[2],
        fix_iota_tau: scanned[3],
        s_size,
        fix_formulas_match,
        t_order,
        kappa,
        kappa_burnside,
        below_48,
        generalized_dicyclic,
        c4_times_elementary,
        outcome,
        holds: fix_formulas_match && kappa == kappa_burnside && outcome != TauOutcome::None,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, generalized_dicyclic};

    #[test]
    fn c6() {
        let c6 = cyclic(6).unwrap();
        let u = ElementSubset::from_iter(6, [0, 3]);
        let rep = tau_analysis(&c6, &u, 3).unwrap();
        assert_eq!(
            (rep.fix_identity, rep.fix_iota, rep.fix_tau, rep.fix_iota_tau),
            (6, 2, 2, 2)
        );
        assert_eq!((rep.kappa, rep.kappa_burnside, rep.t_order), (3, 3, 4));
        assert_eq!(rep.outcome, TauOutcome::BelowBound48);
        assert!(rep.holds);
    }

    #[test]
    fn c4_tau_is_inversion() {
        let c4 = cyclic(4).unwrap();
        let u = ElementSubset::from_iter(4, [0, 2]);
        let rep = tau_analysis(&c4, &u, 2).unwrap();
        assert_eq!(rep.t_order, 2);
        assert_eq!(rep.s_size, 2);
        assert!(rep.c4_times_elementary);
        assert!(rep.holds);
    }

    #[test]
    fn q8_s_set() {
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        let r = q8.elements().find(|&x| q8.is_involution(x)).unwrap();
        let rep = tau_analysis(&q8, &q8.center(), r).unwrap();
        assert_eq!(rep.s_size, 6);
        assert!(rep.generalized_dicyclic);
        assert!(rep.holds);
    }

    #[test]
    fn bad_inputs() {
        let c6 = cyclic(6).unwrap();
        let all = ElementSubset::full(6);
        assert!(matches!(tau_analysis(&c6, &all, 3), Err(Error::BadTauInput(_))));
        let u = ElementSubset::from_iter(6, [0, 3]);
        assert!(matches!(tau_analysis(&c6, &u, 2), Err(Error::BadTauInput(_))));
        let u = ElementSubset::from_iter(6, [0, 2, 4]);
        assert!(matches!(tau_analysis(&c6, &u, 3), Err(Error::BadTauInput(_))));
        let not_sub = ElementSubset::from_iter(6, [0, 1]);
        assert!(matches!(tau_analysis(&c6, &not_sub, 3), Err(Error::BadTauInput(_))));
    }
}
