use serde::Serialize;

use super::{c_of_r, t_orbits, RegularEmbedding};
use crate::error::{Error, Result};
use crate::perm::orbits_under;
use crate::ratio::ExactRatio;
use crate::suborbit::suborbit_profile;

/// Elements of `R` split by whether they lie in `I(R)` and by the size of
/// their `G_1`-orbit (1, 2, or larger).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusProfile {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
    pub order: usize,
    pub involutions: usize,
    pub ratio: ExactRatio,
    pub kappa: usize,
    pub c_r: usize,
    /// `e + f >= |R|/6`.
    pub tail_at_least_sixth: bool,
    /// `T`-orbits on the first four categories stay inside one category with
    /// sizes 1, 2, 2 and at least 2; the remaining orbits have size at least
    /// 3, and at least 4 when they hold no involution.
    pub orbit_sizes_ok: bool,
    /// Orbits of size at least 3 that hold involutions and non-involutions.
    pub mixed_orbits: usize,
    /// `κ <= a + b/2 + c/2 + d/2 + e/3 + f/4`. This assumes no mixed orbits
    /// and can fail without contradicting the final bound.
    pub kappa_ledger_ok: bool,
    /// `c(R) - κ >= (e + f)/4`, summed orbit by orbit.
    pub tail_contribution_ok: bool,
    /// `κ <= c(R) - |R|/24`.
    pub below_24: bool,
    pub holds: bool,
}

pub fn census_profile(emb: &RegularEmbedding) -> Result<CensusProfile> {
    let ratio = suborbit_profile(&emb.ambient, emb.base as usize)?.ratio;
    if ratio == ExactRatio::one() {
        return Err(Error::PreconditionRatio {
            ratio: ratio.to_string(),
        });
    }
    let table = &emb.table;
    let n = table.order();
    let mut g1_size = vec![0usize; n];
    for orbit in orbits_under(&emb.stabilizer_on_labels(), n) {
        for &x in orbit.points() {
            g1_size[x as usize] = orbit.len();
        }
    }
    // Category 0..6 in the order a, b, c, d, e, f.
    let category = |x: u32| {
        let involution = table.mul(x, x) == 0;
        let band = match g1_size[x as usize] {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        2 * band + usize::from(!involution)
    };
    let mut counts = [0usize; 6];
    for x in table.elements() {
        counts[category(x)] += 1;
    }
    let [a, b, c, d, e, f] = counts;

    let orbits = t_orbits(emb);
    let kappa = orbits.len();
    let mut mixed_orbits = 0;
    let orbit_sizes_ok = orbits.iter().all(|orbit| {
        let cat = category(orbit[0]);
        let involutions = orbit.iter().filter(|&&x| category(x) % 2 == 0).count();
        if cat >= 4 {
            if involutions > 0 && involutions < orbit.len() {
                mixed_orbits += 1;
            }
            let min = if involutions == 0 { 4 } else { 3 };
            return orbit.iter().all(|&x| category(x) >= 4) && orbit.len() >= min;
        }
        let size_ok = match cat {
            0 => orbit.len() == 1,
            1 | 2 => orbit.len() == 2,
            _ => orbit.len() >= 2,
        };
        orbit.iter().all(|&x| category(x) == cat) && size_ok
    });
    let c_r = c_of_r(table);
    let tail_at_least_sixth = 6 * (e + f) >= n;
    let kappa_ledger_ok = 12 * kappa <= 12 * a + 6 * (b + c + d) + 4 * e + 3 * f;
    let tail_contribution_ok = 4 * kappa + e + f <= 4 * c_r;
    let below_24 = 24 * kappa + n <= 24 * c_r;
    Ok(CensusProfile {
        a,
        b,
        c,
        d,
        e,
        f,
        order: n,
        involutions: a + c + e,
        ratio,
        kappa,
        c_r,
        tail_at_least_sixth,
        orbit_sizes_ok,
        mixed_orbits,
        kappa_ledger_ok,
        tail_contribution_ok,
        below_24,
        holds: tail_at_least_sixth && orbit_sizes_ok && tail_contribution_ok && below_24,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{harness::holomorph, regular_identification};
    use crate::perm::{symmetric_group, Permutation};

    #[test]
    fn holomorph_of_c5() {
        let hol = holomorph(5).unwrap();
        assert_eq!(hol.order(), 20);
        let shift = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let emb = regular_identification(&hol, &[shift], 0).unwrap();
        let p = census_profile(&emb).unwrap();
        assert_eq!(p.ratio, ExactRatio::new(1, 5).unwrap());
        assert_eq!((p.a, p.b, p.c, p.d, p.e, p.f), (1, 0, 0, 0, 0, 4));
        assert_eq!(p.kappa, 2);
        assert!(p.holds);
    }

    #[test]
    fn mixed_orbit_in_sym4_over_c4() {
        let s4 = symmetric_group(4).unwrap();
        let c4 = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let emb = regular_identification(&s4, &[c4], 0).unwrap();
        let p = census_profile(&emb).unwrap();
        assert_eq!((p.a, p.e, p.f), (1, 1, 2));
        assert_eq!((p.kappa, p.mixed_orbits), (2, 1));
        // 2 > 1 + 1/3 + 2/4, yet 2 <= 3 - 4/24.
        assert!(!p.kappa_ledger_ok);
        assert!(p.below_24 && p.tail_contribution_ok && p.holds);
    }

    #[test]
    fn ratio_one_is_rejected() {
        let s3 = symmetric_group(3).unwrap();
        let rot = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let emb = regular_identification(&s3, &[rot], 0).unwrap();
        assert!(matches!(census_profile(&emb), Err(Error::PreconditionRatio { .. })));
    }
}
