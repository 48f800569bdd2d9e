//! Suborbit measurements: the partition of the domain by the size of the
//! point-stabilizer orbit, the proportion `I` of points in suborbits of size
//! at most two, and the classification of groups with `I = 1`.

mod gap;
mod lemmas;

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, PointSet};
use crate::ratio::ExactRatio;

pub use gap::{conjecture_form_check, gap_scan, ConjectureForm, GapReport, GapViolation};
pub use lemmas::{
    bipartite_commutation, lemma_structure_check, valency_two_closure, BipartiteOutcome,
    LemmaReport, ValencyOutcome,
};

/// `Ω_{α,i}` for every occurring `i`, with `d = |Ω_{α,1}|` and
/// `x_i = |Ω_{α,i}| / d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuborbitProfile {
    pub base: u32,
    pub degree: usize,
    pub parts: BTreeMap<usize, PointSet>,
    pub d: usize,
    pub x: BTreeMap<usize, usize>,
    pub ratio: ExactRatio,
}

impl SuborbitProfile {
    pub fn part(&self, i: usize) -> PointSet {
        self.parts.get(&i).cloned().unwrap_or_default()
    }

    pub fn part_size(&self, i: usize) -> usize {
        self.parts.get(&i).map_or(0, PointSet::len)
    }

    /// Part sizes keyed by suborbit size.
    pub fn sizes(&self) -> BTreeMap<usize, usize> {
        self.parts.iter().map(|(&i, p)| (i, p.len())).collect()
    }
}

/// Partition of the domain by `|δ^{G_α}|`, computed from the orbits of the
/// stabilizer. Sizes are re-derived at a second base point.
pub fn suborbit_profile(group: &PermGroup, alpha: usize) -> Result<SuborbitProfile> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let profile = raw_profile(group, alpha)?;
    let n = group.degree();
    if n > 1 {
        let other = raw_profile(group, (alpha + 1) % n)?;
        if other.sizes() != profile.sizes() {
            return Err(Error::Invariant(format!(
                "suborbit sizes differ between base points {alpha} and {}",
                (alpha + 1) % n
            )));
        }
    }
    Ok(profile)
}

fn raw_profile(group: &PermGroup, alpha: usize) -> Result<SuborbitProfile> {
    let n = group.degree();
    let stab = group.point_stabilizer(alpha)?;
    let mut parts: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for orbit in stab.orbits() {
        parts
            .entry(orbit.len())
            .or_default()
            .extend_from_slice(orbit.points());
    }
    let parts: BTreeMap<usize, PointSet> =
        parts.into_iter().map(|(i, p)| (i, PointSet::new(p))).collect();
    let d = parts.get(&1).map_or(0, PointSet::len);
    let total: usize = parts.values().map(PointSet::len).sum();
    if total != n {
        return Err(Error::Invariant("parts do not partition the domain".into()));
    }
    if d == 0 || parts.values().any(|p| p.len() % d != 0) {
        return Err(Error::Invariant("d does not divide every part".into()));
    }
    let x: BTreeMap<usize, usize> = parts.iter().map(|(&i, p)| (i, p.len() / d)).collect();
    if x.get(&1) != Some(&1) || d * x.values().sum::<usize>() != n {
        return Err(Error::Invariant("x_1 = 1 and |Ω| = d Σ x_i failed".into()));
    }
    let small = parts.get(&1).map_or(0, PointSet::len) + parts.get(&2).map_or(0, PointSet::len);
    let ratio = ExactRatio::new(small as u64, n as u64).expect("degree is positive");
    Ok(SuborbitProfile {
        base: alpha as u32,
        degree: n,
        parts,
        d,
        x,
        ratio,
    })
}

/// `Ω_{α,1}` is the orbit of `α` under `N_G(G_α)` and is a block.
pub fn fixed_block_check(group: &PermGroup, alpha: usize) -> Result<bool> {
    let profile = suborbit_profile(group, alpha)?;
    let stab = group.point_stabilizer(alpha)?;
    let normalizer = group.normalizer(&stab)?;
    let orbit = normalizer.orbit(alpha)?;
    Ok(orbit == profile.part(1) && group.is_block(&orbit)?)
}

/// One element `t_ω` with `α^{t_ω} = ω` for every point `ω`.
pub fn transversal(group: &PermGroup, alpha: usize) -> Result<Vec<Permutation>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    let mut reps: Vec<Option<Permutation>> = vec![None; n];
    reps[alpha] = Some(Permutation::identity(n));
    let mut queue = vec![alpha as u32];
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head];
        head += 1;
        let t = reps[p as usize].clone().expect("queued points have reps");
        for g in group.generators() {
            let q = g.apply(p);
            if reps[q as usize].is_none() {
                reps[q as usize] = Some(t.compose(g));
                queue.push(q);
            }
        }
    }
    Ok(reps.into_iter().map(|r| r.expect("transitive")).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Trichotomy {
    /// (a) `G` acts regularly.
    Regular,
    /// (b) `|G_α| = 2`.
    StabilizerOrder2,
    /// (c) an elementary abelian normal 2-subgroup `N` with `|N : G_α| = 2`.
    ElementaryAbelianIndex2,
    /// `I < 1`: the classification says nothing.
    NotApplicable,
}

#[derive(Clone, Debug)]
pub struct TrichotomyVerdict {
    /// First matching family in the order (a), (b), (c).
    pub tag: Trichotomy,
    /// Every matching family.
    pub matching: Vec<Trichotomy>,
    /// The subgroup `N` when family (c) matches.
    pub witness: Option<PermGroup>,
}

/// Classifies a transitive group with `I = 1`. Family (c) is searched over
/// the normal closures of `G_α` together with one involution: any witness
/// `N` is such a closure, and a closure of order `2|G_α|` that is
/// elementary abelian is a witness.
pub fn bergman_lenstra_classify(group: &PermGroup) -> Result<TrichotomyVerdict> {
    let profile = suborbit_profile(group, 0)?;
    if !profile.ratio.is_one() {
        return Ok(TrichotomyVerdict {
            tag: Trichotomy::NotApplicable,
            matching: Vec::new(),
            witness: None,
        });
    }
    let stab = group.point_stabilizer(0)?;
    let mut matching = Vec::new();
    if stab.order() == 1 {
        matching.push(Trichotomy::Regular);
    }
    if stab.order() == 2 {
        matching.push(Trichotomy::StabilizerOrder2);
    }
    let witness = elementary_abelian_witness(group, &stab);
    if witness.is_some() {
        matching.push(Trichotomy::ElementaryAbelianIndex2);
    }
    let Some(&tag) = matching.first() else {
        return Err(Error::Invariant(
            "a group with every suborbit of size at most 2 matched no family".into(),
        ));
    };
    Ok(TrichotomyVerdict {
        tag,
        matching,
        witness,
    })
}

/// Elementary abelian normal 2-subgroup `N >= G_α` with `|N : G_α| = 2`.
pub fn elementary_abelian_witness(group: &PermGroup, stab: &PermGroup) -> Option<PermGroup> {
    if !stab.is_elementary_abelian_2() {
        return None;
    }
    let bound = 2 * stab.order();
    let mut tried: HashSet<Permutation> = HashSet::new();
    for t in group.elements() {
        if t.is_identity() || !t.compose(t).is_identity() || stab.contains(t) {
            continue;
        }
        if tried.contains(t) || !stab.generators().iter().all(|s| s.commutes_with(t)) {
            continue;
        }
        let mut seeds: Vec<Permutation> = stab.generators().to_vec();
        seeds.push(t.clone());
        match bounded_normal_closure(group, &seeds, bound) {
            Some(elements) => {
                let n = group
                    .subgroup(elements)
                    .expect("closure elements lie in the group");
                if n.is_elementary_abelian_2() && n.order() == bound {
                    return Some(n);
                }
                tried.extend(n.elements().iter().cloned());
            }
            None => {
                tried.insert(t.clone());
            }
        }
    }
    None
}

/// Normal closure of `seeds`, abandoned once it exceeds `bound` elements.
fn bounded_normal_closure(
    group: &PermGroup,
    seeds: &[Permutation],
    bound: usize,
) -> Option<Vec<Permutation>> {
    let n = group.degree();
    let mut members: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    let mut list = vec![Permutation::identity(n)];
    let mut gens: Vec<Permutation> = Vec::new();
    let mut pending: Vec<Permutation> = seeds.to_vec();
    while let Some(s) = pending.pop() {
        if members.contains(&s) {
            continue;
        }
        gens.push(s.clone());
        for g in group.generators() {
            pending.push(s.conjugate_by(g));
        }
        // Extend the closure by the new generator.
        let mut head = 0;
        members.insert(s.clone());
        list.push(s);
        while head < list.len() {
            let x = list[head].clone();
            head += 1;
            for g in &gens {
                let y = x.compose(g);
                if members.insert(y.clone()) {
                    list.push(y);
                    if list.len() > bound {
                        return None;
                    }
                }
            }
        }
        if list.len() > bound {
            return None;
        }
    }
    Some(list)
}
