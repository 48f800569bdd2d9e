use serde::Serialize;

use super::{
    census_profile, invariant_count, regular_identification, stabilizer_orbit_count, tau_analysis,
    CensusProfile, RegularEmbedding, TauOutcome, TauReport,
};
use crate::error::{Error, Result};
use crate::group::ElementSubset;
use crate::perm::{orbits_under, PermGroup, Permutation};
use crate::ratio::ExactRatio;
use crate::suborbit::{elementary_abelian_witness, suborbit_profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Pass,
    Fail,
    /// The bound does not apply to this pair, or the group is in one of the
    /// excepted classes.
    Exempt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub b96: BoundStatus,
    pub b48: BoundStatus,
    pub b24: BoundStatus,
}

impl Bounds {
    pub fn any_fail(&self) -> bool {
        [self.b96, self.b48, self.b24].contains(&BoundStatus::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCase {
    /// `κ <= c(R) - |R|/96`.
    A,
    /// `R` abelian of exponent greater than 2.
    B,
    /// `R` generalized dicyclic.
    C,
    Violation,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub g_order: usize,
    pub r_order: usize,
    pub ratio: ExactRatio,
    pub kappa: usize,
    pub c_r: usize,
    pub case: PairCase,
    pub bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<CensusProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<TauReport>,
    /// Orbits of `G_1` alone; `2^orbits` Cayley digraphs admit `G`.
    pub stabilizer_orbits: usize,
    /// `orbits <= 3|R|/4`.
    pub digraph_bound_ok: bool,
    pub holds: bool,
}

fn status(pass: bool, exempt: bool) -> BoundStatus {
    if pass {
        BoundStatus::Pass
    } else if exempt {
        BoundStatus::Exempt
    } else {
        BoundStatus::Fail
    }
}

/// The `τ` reduction for a pair with all suborbits of size at most 2 and a
/// witness `N`: `r` generates `R ∩ N`, `U = N_R(G_1)` is the set of points
/// fixed by `G_1`, and the `G_1`-orbits off `U` are `{x, xr}`.
fn tau_reduction(emb: &RegularEmbedding, n_group: &PermGroup) -> Result<TauReport> {
    let table = &emb.table;
    let meet: Vec<&Permutation> = emb
        .regular
        .elements()
        .iter()
        .filter(|x| !x.is_identity() && n_group.contains(x))
        .collect();
    let [r_perm] = meet[..] else {
        return Err(Error::Invariant(format!(
            "R ∩ N has order {} instead of 2",
            meet.len() + 1
        )));
    };
    let r = emb.labeling[r_perm.apply(emb.base) as usize];

    let stab = &emb.stabilizer;
    let normalizing = emb.regular.elements().iter().filter(|x| {
        let x_inv = x.inverse();
        stab.generators()
            .iter()
            .all(|g| stab.contains(&x_inv.compose(g).compose(x)))
    });
    let u = ElementSubset::from_iter(
        table.order(),
        normalizing.map(|x| emb.labeling[x.apply(emb.base) as usize]),
    );
    let on_labels = emb.stabilizer_on_labels();
    let fixed = ElementSubset::from_iter(
        table.order(),
        table.elements().filter(|&x| on_labels.iter().all(|g| g.apply(x) == x)),
    );
    if u != fixed {
        return Err(Error::Invariant(
            "the normalizer of G_1 in R differs from the fixed points of G_1".into(),
        ));
    }
    let report = tau_analysis(table, &u, r)?;
    let by_g1 = orbits_under(&on_labels, table.order());
    let by_tau = orbits_under(std::slice::from_ref(&report.tau), table.order());
    if by_g1 != by_tau {
        return Err(Error::Invariant("G_1-orbits differ from tau-orbits".into()));
    }
    Ok(report)
}

/// Runs every count and bound on a pair `R < G` with `R` regular.
pub fn analyze_pair(
    ambient: &PermGroup,
    regular_gens: &[Permutation],
    alpha: usize,
) -> Result<PairReport> {
    let emb = regular_identification(ambient, regular_gens, alpha)?;
    let count = invariant_count(&emb)?;
    let ratio = suborbit_profile(ambient, alpha)?.ratio;
    let excepted = count.abelian_exponent_gt_2 || count.generalized_dicyclic;
    let b96 = status(count.below_96, excepted);

    let (mut b48, mut b24) = (BoundStatus::Exempt, BoundStatus::Exempt);
    let mut profile = None;
    let mut tau = None;
    if ratio.is_one() {
        if let Some(n_group) = elementary_abelian_witness(ambient, &emb.stabilizer) {
            let report = tau_reduction(&emb, &n_group)?;
            if report.kappa != count.kappa {
                return Err(Error::Invariant(format!(
                    "tau count {} differs from the direct count {}",
                    report.kappa, count.kappa
                )));
            }
            b48 = status(
                report.below_48,
                report.outcome != TauOutcome::None && !report.below_48,
            );
            tau = Some(report);
        }
    } else {
        let p = census_profile(&emb)?;
        b24 = status(p.below_24, false);
        profile = Some(p);
    }

    let case = if count.below_96 {
        PairCase::A
    } else if count.abelian_exponent_gt_2 {
        PairCase::B
    } else if count.generalized_dicyclic {
        PairCase::C
    } else {
        PairCase::Violation
    };
    let stabilizer_orbits = stabilizer_orbit_count(&emb);
    let order = emb.table.order();
    let digraph_bound_ok = 4 * stabilizer_orbits <= 3 * order;
    let bounds = Bounds { b96, b48, b24 };
    let holds = case != PairCase::Violation
        && !bounds.any_fail()
        && digraph_bound_ok
        && profile.as_ref().is_none_or(|p| p.holds)
        && tau.as_ref().is_none_or(|t| t.holds);
    Ok(PairReport {
        g_order: ambient.order(),
        r_order: order,
        ratio,
        kappa: count.kappa,
        c_r: count.c_r,
        case,
        bounds,
        profile,
        tau,
        stabilizer_orbits,
        digraph_bound_ok,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{dihedral_group, symmetric_group};

    #[test]
    fn s3_over_c3() {
        let s3 = symmetric_group(3).unwrap();
        let rot = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let rep = analyze_pair(&s3, &[rot], 0).unwrap();
        assert_eq!(rep.kappa, 2);
        assert_eq!(rep.case, PairCase::B);
        assert!(rep.holds);
    }

    #[test]
    fn wreath_pair_goes_through_tau() {
        // C2 wr C3 on 6 points has I = 1 and G_1 of order 4.
        let g = PermGroup::generate(
            6,
            vec![
                Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 3, 5]]).unwrap(),
            ],
        )
        .unwrap();
        let c6 = Permutation::from_cycles(6, &[&[0, 2, 4, 1, 3, 5]]).unwrap();
        let rep = analyze_pair(&g, &[c6], 0).unwrap();
        assert!(rep.ratio.is_one());
        let tau = rep.tau.as_ref().expect("family (c) pair");
        assert_eq!(tau.kappa, rep.kappa);
        assert!(rep.holds, "{rep:?}");
    }

    #[test]
    fn regular_pair_is_rejected() {
        let d4 = dihedral_group(4).unwrap();
        let gens = d4.generators().to_vec();
        assert!(matches!(analyze_pair(&d4, &gens, 0), Err(Error::NotRegular(_))));
    }
}
