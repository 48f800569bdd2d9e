//! Structural consequences of `1/2 < I < 1`, checked directly on a group.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use super::{suborbit_profile, transversal, SuborbitProfile};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, PointSet};
use crate::ratio::ExactRatio;

/// Named pass/fail results. Checks whose hypotheses do not hold for the
/// group are left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub ratio: ExactRatio,
    /// `x_4 = |Ω_{α,4}| / d`.
    pub x4: usize,
    pub checks: BTreeMap<String, bool>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

type ElementSet = BTreeSet<Permutation>;

fn conjugate_set(set: &ElementSet, t: &Permutation) -> ElementSet {
    set.iter().map(|s| s.conjugate_by(t)).collect()
}

fn image_set(set: &PointSet, t: &Permutation) -> PointSet {
    set.image(t)
}

fn sets_commute(a: &ElementSet, b: &ElementSet) -> bool {
    a.iter().all(|x| b.iter().all(|y| x.commutes_with(y)))
}

fn is_elementary_abelian(a: &ElementSet) -> bool {
    a.iter().all(|x| x.compose(x).is_identity()) && sets_commute(a, a)
}

fn product_set(a: &ElementSet, b: &ElementSet) -> ElementSet {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.compose(y)))
        .collect()
}

/// Runs every check whose hypotheses hold. Requires `1/2 < I < 1`.
pub fn lemma_structure_check(group: &PermGroup, alpha: usize) -> Result<LemmaReport> {
    let profile = suborbit_profile(group, alpha)?;
    let half = ExactRatio::new(1, 2).expect("nonzero");
    if !profile.ratio.strictly_between(half, ExactRatio::one()) {
        return Err(Error::PreconditionRatio {
            ratio: profile.ratio.to_string(),
        });
    }
    let reps = transversal(group, alpha)?;
    let stab: ElementSet = group
        .point_stabilizer(alpha)?
        .elements()
        .iter()
        .cloned()
        .collect();
    let stab_at = |w: u32| conjugate_set(&stab, &reps[w as usize]);
    let part_at = |i: usize, w: u32| image_set(&profile.part(i), &reps[w as usize]);

    let mut checks = BTreeMap::new();
    let sizes_ok = profile.parts.keys().all(|i| [1, 2, 4].contains(i));
    checks.insert("subdegrees_in_1_2_4".to_string(), sizes_ok);

    let four = profile.part(4);
    let two = profile.part(2);
    let one = profile.part(1);
    let mut meets = true;
    let mut factorizes = true;
    for &beta in four.points() {
        let common = two.intersection(&part_at(2, beta));
        if common.is_empty() {
            meets = false;
        }
        let g_beta = stab_at(beta);
        for &omega in common.points() {
            let g_omega = stab_at(omega);
            let a: ElementSet = stab.intersection(&g_omega).cloned().collect();
            let b: ElementSet = g_beta.intersection(&g_omega).cloned().collect();
            if product_set(&a, &b) != g_omega {
                factorizes = false;
            }
        }
    }
    checks.insert("four_orbit_meets_two_orbits".to_string(), meets);
    checks.insert("stabilizer_factorization".to_string(), factorizes);

    let x4 = four.len() / profile.d;
    if one.len() == four.len() && sizes_ok {
        let union = one.union(&four);
        checks.insert("fixed_four_union_block".to_string(), group.is_block(&union)?);
        let stab_group = group.point_stabilizer(alpha)?;
        let n_alpha = group.normalizer(&stab_group)?;
        let agree = four.points().iter().all(|&beta| {
            let g_beta = group
                .point_stabilizer(beta as usize)
                .expect("point in range");
            group.normalizer(&g_beta).expect("subgroup") == n_alpha
        });
        checks.insert("normalizers_agree".to_string(), agree);
    }

    let five_sixths = ExactRatio::new(5, 6).expect("nonzero");
    if profile.ratio >= five_sixths {
        checks.insert(
            "four_part_at_most_twice_fixed".to_string(),
            four.len() <= 2 * one.len(),
        );
        let elementary = is_elementary_abelian(&stab);
        checks.insert("stabilizer_elementary_abelian".to_string(), elementary);
        let mut commute = true;
        let mut normal16 = true;
        for &beta in four.points() {
            let g_beta = stab_at(beta);
            commute &= sets_commute(&stab, &g_beta);
            let prod = product_set(&stab, &g_beta);
            let normal = group
                .generators()
                .iter()
                .all(|g| prod.iter().all(|p| prod.contains(&p.conjugate_by(g))));
            normal16 &= prod.len() == 16 && is_elementary_abelian(&prod) && normal;
        }
        checks.insert("stabilizers_commute".to_string(), commute);
        checks.insert("stabilizer_product_normal_order_16".to_string(), normal16);

        let conjugates = distinct_stabilizers(&profile, &stab_at);
        if elementary {
            let mut bipartite_ok = true;
            for &beta in four.points() {
                let g_beta: Vec<Permutation> = stab_at(beta).into_iter().collect();
                let x: Vec<Permutation> = stab.iter().cloned().collect();
                match bipartite_commutation(&x, &g_beta, &conjugates) {
                    Ok(outcome) => bipartite_ok &= outcome.holds,
                    Err(_) => bipartite_ok = false,
                }
            }
            checks.insert("bipartite_commutation".to_string(), bipartite_ok);
        }
        if x4 == 2 {
            if let Some(&beta) = four.points().first() {
                let outcome = stabilizer_graph_closure(&conjugates, &stab, &stab_at(beta));
                checks.insert("valency_two_closure".to_string(), outcome.holds);
            }
        }
    }

    Ok(LemmaReport {
        ratio: profile.ratio,
        x4,
        checks,
    })
}

/// Distinct point stabilizers, each as a sorted element list.
fn distinct_stabilizers(
    profile: &SuborbitProfile,
    stab_at: &dyn Fn(u32) -> ElementSet,
) -> Vec<Vec<Permutation>> {
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    for w in 0..profile.degree as u32 {
        seen.insert(stab_at(w).into_iter().collect());
    }
    seen.into_iter().collect()
}

/// Graph on the distinct stabilizers, adjacent when they meet in index 4,
/// with `W` the stabilizers containing `G_α ∩ G_β`.
fn stabilizer_graph_closure(
    stabilizers: &[Vec<Permutation>],
    g_alpha: &ElementSet,
    g_beta: &ElementSet,
) -> ValencyOutcome {
    let sets: Vec<HashSet<&Permutation>> =
        stabilizers.iter().map(|s| s.iter().collect()).collect();
    let order = g_alpha.len();
    let adjacency: Vec<Vec<usize>> = (0..sets.len())
        .map(|i| {
            (0..sets.len())
                .filter(|&j| j != i && 4 * sets[i].intersection(&sets[j]).count() == order)
                .collect()
        })
        .collect();
    let core: Vec<&Permutation> = g_alpha.intersection(g_beta).collect();
    let w: Vec<usize> = (0..sets.len())
        .filter(|&i| core.iter().all(|c| sets[i].contains(c)))
        .collect();
    valency_two_closure(&adjacency, &w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteOutcome {
    pub edges: usize,
    pub commute: bool,
    /// At least six edges force `X` and `Y` to commute.
    pub holds: bool,
}

/// Bipartite graph between the three subgroups strictly between `Z = X ∩ Y`
/// and `X`, and those between `Z` and `Y`; `X_i ~ Y_j` when the product
/// `X_i Y_j` is one of the listed conjugates of `X`. Inputs are element
/// lists; `X` must be elementary abelian with `|X : Z| = |Y : Z| = 4`.
pub fn bipartite_commutation(
    x: &[Permutation],
    y: &[Permutation],
    conjugates: &[Vec<Permutation>],
) -> Result<BipartiteOutcome> {
    let xs: ElementSet = x.iter().cloned().collect();
    let ys: ElementSet = y.iter().cloned().collect();
    if !is_elementary_abelian(&xs) || xs.len() != ys.len() {
        return Err(Error::Invariant(
            "X must be elementary abelian and the same size as Y".into(),
        ));
    }
    let z: ElementSet = xs.intersection(&ys).cloned().collect();
    if 4 * z.len() != xs.len() {
        return Err(Error::Invariant("X ∩ Y must have index 4".into()));
    }
    let between = |whole: &ElementSet| -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = Vec::new();
        for g in whole {
            if z.contains(g) {
                continue;
            }
            let mut sub = z.clone();
            sub.extend(z.iter().map(|h| h.compose(g)));
            if !out.contains(&sub) {
                out.push(sub);
            }
        }
        out
    };
    let lambda_x = between(&xs);
    let lambda_y = between(&ys);
    let targets: HashSet<ElementSet> = conjugates
        .iter()
        .map(|c| c.iter().cloned().collect())
        .collect();
    let mut edges = 0;
    for a in &lambda_x {
        for b in &lambda_y {
            if targets.contains(&product_set(a, b)) {
                edges += 1;
            }
        }
    }
    let commute = sets_commute(&xs, &ys);
    Ok(BipartiteOutcome {
        edges,
        commute,
        holds: edges < 6 || commute,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValencyOutcome {
    pub valency_two: bool,
    /// `W` contains an edge and `V \ (Γ(δ1) ∪ Γ(δ2)) ⊆ W` for distinct
    /// `δ1, δ2` in `W`.
    pub closure_property: bool,
    /// `W = V` or `|V| <= 6`.
    pub conclusion: bool,
    pub holds: bool,
}

/// For a graph given by adjacency lists (assumed vertex-transitive) and a
/// vertex subset `W`: if every vertex has valency 2 and `W` has the closure
/// property, then `W = V` or `|V| <= 6`.
pub fn valency_two_closure(adjacency: &[Vec<usize>], w: &[usize]) -> ValencyOutcome {
    let n = adjacency.len();
    let valency_two = adjacency.iter().all(|nbrs| {
        let distinct: BTreeSet<&usize> = nbrs.iter().collect();
        distinct.len() == 2 && nbrs.len() == 2
    });
    let in_w: Vec<bool> = (0..n).map(|v| w.contains(&v)).collect();
    let has_edge = w
        .iter()
        .any(|&a| adjacency[a].iter().any(|&b| in_w[b]));
    let mut closure_property = has_edge;
    'outer: for (i, &d1) in w.iter().enumerate() {
        for &d2 in &w[i + 1..] {
            for (v, &inside) in in_w.iter().enumerate() {
                let near = adjacency[d1].contains(&v) || adjacency[d2].contains(&v);
                if !near && !inside {
                    closure_property = false;
                    break 'outer;
                }
            }
        }
    }
    let conclusion = in_w.iter().all(|&b| b) || n <= 6;
    ValencyOutcome {
        valency_two,
        closure_property,
        conclusion,
        holds: !(valency_two && closure_property) || conclusion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cyclic_group;

    fn cycles_graph(lengths: &[usize]) -> Vec<Vec<usize>> {
        let mut adj = Vec::new();
        let mut offset = 0;
        for &l in lengths {
            for i in 0..l {
                adj.push(vec![offset + (i + l - 1) % l, offset + (i + 1) % l]);
            }
            offset += l;
        }
        adj
    }

    #[test]
    fn valency_two_closure_on_cycle_unions() {
        for lengths in [
            vec![3],
            vec![4],
            vec![5],
            vec![6],
            vec![7],
            vec![8],
            vec![9],
            vec![3, 3],
            vec![4, 4],
            vec![5, 5],
        ] {
            let adj = cycles_graph(&lengths);
            let n = adj.len();
            let mut any_proper_closed = false;
            for mask in 0u32..(1 << n) {
                let w: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                let outcome = valency_two_closure(&adj, &w);
                assert!(outcome.valency_two);
                assert!(outcome.holds, "{lengths:?} {w:?}");
                if outcome.closure_property && w.len() < n {
                    any_proper_closed = true;
                }
            }
            if n >= 7 {
                assert!(!any_proper_closed, "{lengths:?}");
            }
        }
        // Small cycles do admit proper closed subsets.
        let c6 = cycles_graph(&[6]);
        let w = [0, 1];
        let outcome = valency_two_closure(&c6, &w);
        assert!(!outcome.closure_property);
        let c4 = cycles_graph(&[4]);
        assert!(valency_two_closure(&c4, &[0, 1]).closure_property);
    }

    #[test]
    fn bipartite_on_commuting_klein_pair() {
        // X = <(0 1), (2 3)>, Y = <(4 5), (6 7)> in Sym(8), Z trivial.
        let p = |c: &[&[u32]]| Permutation::from_cycles(8, c).unwrap();
        let x = PermGroup::generate(8, vec![p(&[&[0, 1]]), p(&[&[2, 3]])]).unwrap();
        let y = PermGroup::generate(8, vec![p(&[&[4, 5]]), p(&[&[6, 7]])]).unwrap();
        let mut conj: Vec<Vec<Permutation>> = Vec::new();
        for a in [p(&[&[0, 1]]), p(&[&[2, 3]]), p(&[&[0, 1], &[2, 3]])] {
            for b in [p(&[&[4, 5]]), p(&[&[6, 7]]), p(&[&[4, 5], &[6, 7]])] {
                let g = PermGroup::generate(8, vec![a.clone(), b]).unwrap();
                conj.push(g.sorted_elements());
            }
        }
        let out = bipartite_commutation(x.elements(), y.elements(), &conj).unwrap();
        assert_eq!(out.edges, 9);
        assert!(out.commute && out.holds);
        let none = bipartite_commutation(x.elements(), y.elements(), &[]).unwrap();
        assert_eq!(none.edges, 0);
        assert!(none.holds);
    }

    #[test]
    fn precondition_ratio() {
        let c5 = cyclic_group(5).unwrap();
        assert!(matches!(
            lemma_structure_check(&c5, 0),
            Err(Error::PreconditionRatio { .. })
        ));
    }
}
