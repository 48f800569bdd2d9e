//! Counting Cayley graphs on a regular subgroup `R` that admit a larger
//! transitive group `G`.
//!
//! The domain of `G` is identified with `R` through the labelling
//! `ω ↦ r` where `α^r = ω`; `G_1` (the stabilizer of `α`) then acts on
//! element indices of the table of `R`.

mod forms;
pub mod harness;
mod pair;
mod profile;
mod tau;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementSubset, GroupTable};
use crate::perm::{orbits_under, PermGroup, Permutation};

pub use forms::{
    build_family, quadratic_form_classify, s_set_formula_check, tau_instances, FormFamily, QuadraticClass,
    SSetReport, TauInstance, FAMILY_PARAMETER_LIMIT,
};
pub use pair::{analyze_pair, BoundStatus, Bounds, PairCase, PairReport};
pub use profile::{census_profile, CensusProfile};
pub use tau::{tau_analysis, tau_map, TauOutcome, TauReport};

/// `c(R) = (|R| + |I(R)|) / 2`: the base-2 logarithm of the number of
/// inverse-closed subsets.
pub fn c_of_r(table: &GroupTable) -> usize {
    (table.order() + table.involution_set().count()) / 2
}

/// Cayley digraph: arc `(r, t)` iff `t r^-1 ∈ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyDigraph {
    out: Vec<Vec<u32>>,
}

impl CayleyDigraph {
    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbours(&self, r: u32) -> &[u32] {
        &self.out[r as usize]
    }

    pub fn has_arc(&self, r: u32, t: u32) -> bool {
        self.out[r as usize].binary_search(&t).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Every arc has its reverse.
    pub fn is_graph(&self) -> bool {
        self.out
            .iter()
            .enumerate()
            .all(|(r, nbrs)| nbrs.iter().all(|&t| self.has_arc(t, r as u32)))
    }
}

pub fn cayley_digraph(table: &GroupTable, s: &ElementSubset) -> CayleyDigraph {
    let out = table
        .elements()
        .map(|r| {
            let mut nbrs: Vec<u32> = s.iter().map(|x| table.mul(x, r)).collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    CayleyDigraph { out }
}

/// `S = S^-1`.
pub fn is_inverse_closed(table: &GroupTable, s: &ElementSubset) -> bool {
    s.iter().all(|x| s.contains(table.inv(x)))
}

/// A regular subgroup `R` of `G` with the domain identified with `R`.
#[derive(Clone, Debug)]
pub struct RegularEmbedding {
    pub ambient: PermGroup,
    pub regular: PermGroup,
    pub table: GroupTable,
    pub base: u32,
    /// Point `ω` to the index of the `r` with `α^r = ω`.
    pub labeling: Vec<u32>,
    /// Inverse of `labeling`.
    pub points: Vec<u32>,
    /// `G_1`, the stabilizer of the base point.
    pub stabilizer: PermGroup,
}

impl RegularEmbedding {
    /// A permutation of `G` transported to element indices of `R`.
    pub fn on_labels(&self, g: &Permutation) -> Permutation {
        Permutation::from_images(
            self.points
                .iter()
                .map(|&p| self.labeling[g.apply(p) as usize])
                .collect(),
        )
        .expect("labeling is a bijection")
    }

    /// Inversion `x ↦ x^-1` on element indices.
    pub fn iota(&self) -> Permutation {
        Permutation::from_images(self.table.elements().map(|x| self.table.inv(x)).collect())
            .expect("inversion is a bijection")
    }

    /// Generators of `G_1` acting on element indices.
    pub fn stabilizer_on_labels(&self) -> Vec<Permutation> {
        self.stabilizer
            .generators()
            .iter()
            .map(|g| self.on_labels(g))
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        self.ambient.order() > self.regular.order()
    }
}

pub fn regular_identification(
    ambient: &PermGroup,
    regular_gens: &[Permutation],
    alpha: usize,
) -> Result<RegularEmbedding> {
    let n = ambient.degree();
    if alpha >= n {
        return Err(Error::PointOutOfRange { point: alpha, degree: n });
    }
    for g in regular_gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: g.degree(),
            });
        }
        if !ambient.contains(g) {
            return Err(Error::NotASubgroup(format!(
                "{g:?} is not an element of the ambient group"
            )));
        }
    }
    let regular = PermGroup::generate(n, regular_gens.to_vec())?;
    if regular.order() != n || !regular.is_transitive() {
        return Err(Error::NotRegular(format!(
            "order {} on {} points{}",
            regular.order(),
            n,
            if regular.is_transitive() { "" } else { ", intransitive" }
        )));
    }
    let table = GroupTable::from_regular_action(&regular);
    let sorted = regular.sorted_elements();
    let mut labeling = vec![0u32; n];
    let mut points = vec![0u32; n];
    for (index, r) in sorted.iter().enumerate() {
        let omega = r.apply(alpha as u32);
        labeling[omega as usize] = index as u32;
        points[index] = omega;
    }
    let stabilizer = ambient.point_stabilizer(alpha)?;
    Ok(RegularEmbedding {
        ambient: ambient.clone(),
        regular,
        table,
        base: alpha as u32,
        labeling,
        points,
        stabilizer,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCount {
    /// Number of orbits of `T = <ι, G_1>` on `R`.
    pub kappa: usize,
    pub c_r: usize,
    /// `κ <= c(R) - |R|/96`, checked as `96κ <= 96c(R) - |R|`.
    pub below_96: bool,
    /// `R` is abelian of exponent greater than 2.
    pub abelian_exponent_gt_2: bool,
    pub generalized_dicyclic: bool,
    /// One of the three alternatives holds.
    pub bound_ok: bool,
}

/// Orbits of `T = <ι, G_1>` on element indices.
pub fn t_orbits(emb: &RegularEmbedding) -> Vec<Vec<u32>> {
    let mut gens = emb.stabilizer_on_labels();
    gens.push(emb.iota());
    orbits_under(&gens, emb.table.order())
        .into_iter()
        .map(|o| o.points().to_vec())
        .collect()
}

pub fn invariant_count(emb: &RegularEmbedding) -> Result<InvariantCount> {
    if !emb.is_proper() {
        return Err(Error::NotProper);
    }
    let kappa = t_orbits(emb).len();
    let c_r = c_of_r(&emb.table);
    let order = emb.table.order();
    let below_96 = 96 * kappa + order <= 96 * c_r;
    let abelian_exponent_gt_2 = emb.table.is_abelian_exponent_gt_2();
    let generalized_dicyclic = emb.table.is_generalized_dicyclic();
    Ok(InvariantCount {
        kappa,
        c_r,
        below_96,
        abelian_exponent_gt_2,
        generalized_dicyclic,
        bound_ok: below_96 || abelian_exponent_gt_2 || generalized_dicyclic,
    })
}

/// Orbits of `G_1` alone on element indices; `2^orbits` digraphs admit `G`.
pub fn stabilizer_orbit_count(emb: &RegularEmbedding) -> usize {
    orbits_under(&emb.stabilizer_on_labels(), emb.table.order()).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, generalized_dicyclic};
    use crate::perm::{cyclic_group, dihedral_group, symmetric_group};

    #[test]
    fn c_values() {
        assert_eq!(c_of_r(&elementary_abelian(3).unwrap()), 8);
        assert_eq!(c_of_r(&cyclic(4).unwrap()), 3);
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert_eq!(c_of_r(&q8), 5);
    }

    #[test]
    fn inverse_closed_subsets_of_c4() {
        let c4 = cyclic(4).unwrap();
        let count = (0u32..16)
            .filter(|mask| {
                let s = ElementSubset::from_iter(4, (0..4).filter(|i| mask >> i & 1 == 1));
                is_inverse_closed(&c4, &s)
            })
            .count();
        assert_eq!(count, 1 << c_of_r(&c4));
    }

    #[test]
    fn digraphs() {
        let c4 = cyclic(4).unwrap();
        let empty = cayley_digraph(&c4, &ElementSubset::new(4));
        assert_eq!(empty.arc_count(), 0);
        let cycle = cayley_digraph(&c4, &ElementSubset::from_iter(4, [1, 3]));
        assert!(cycle.is_graph());
        assert_eq!(cycle.arc_count(), 8);
        for r in 0..4 {
            assert_eq!(cycle.out_neighbours(r).len(), 2);
            assert!(cycle.has_arc(r, (r + 1) % 4));
        }
        let directed = cayley_digraph(&c4, &ElementSubset::from_iter(4, [1]));
        assert!(!directed.is_graph());
        // Right multiplication preserves arcs.
        for a in c4.elements() {
            for r in c4.elements() {
                for &t in cycle.out_neighbours(r) {
                    assert!(cycle.has_arc(c4.mul(r, a), c4.mul(t, a)));
                }
            }
        }
    }

    #[test]
    fn identifications() {
        let c3 = cyclic_group(3).unwrap();
        let emb = regular_identification(&c3, c3.generators(), 0).unwrap();
        assert_eq!(emb.stabilizer.order(), 1);
        assert!(!emb.is_proper());
        assert_eq!(invariant_count(&emb), Err(Error::NotProper));

        let s3 = symmetric_group(3).unwrap();
        let rot = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let emb = regular_identification(&s3, std::slice::from_ref(&rot), 0).unwrap();
        assert_eq!(emb.stabilizer.order(), 2);
        assert_eq!(emb.labeling[0], 0);
        let count = invariant_count(&emb).unwrap();
        assert_eq!(count.kappa, 2);

        let d4 = dihedral_group(4).unwrap();
        let rot4 = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let emb = regular_identification(&d4, &[rot4], 0).unwrap();
        assert_eq!(emb.stabilizer.order(), 2);

        let refl = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert!(matches!(
            regular_identification(&s3, &[refl], 0),
            Err(Error::NotRegular(_))
        ));
        let outside = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c4 = cyclic_group(4).unwrap();
        assert!(matches!(
            regular_identification(&c4, &[outside], 0),
            Err(Error::NotASubgroup(_))
        ));
    }

    #[test]
    fn stabilizer_acts_on_labels_like_points() {
        let s4 = symmetric_group(4).unwrap();
        let v4 = [
            Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ];
        let emb = regular_identification(&s4, &v4, 0).unwrap();
        for g in emb.stabilizer.elements() {
            let on = emb.on_labels(g);
            for p in 0..4u32 {
                assert_eq!(emb.points[on.apply(emb.labeling[p as usize]) as usize], g.apply(p));
            }
        }
    }
}
