//! Permutations of `{0..n-1}` and the groups they generate.
//!
//! Products follow the exponential convention: `x.compose(y)` applies `x`
//! first, so `p^(xy) = (p^x)^y`. Every subgroup computation is a filter over
//! the cached element list of the ambient group.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Closure cap used when `SUBORBIT_LAB_CLOSURE_CAP` is not set.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;

/// Environment variable overriding the closure cap.
pub const CLOSURE_CAP_ENV: &str = "SUBORBIT_LAB_CLOSURE_CAP";

/// The active closure cap.
pub fn closure_cap() -> usize {
    std::env::var(CLOSURE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&cap: &usize| cap >= 1)
        .unwrap_or(DEFAULT_CLOSURE_CAP)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection on `{0..n-1}` with `n >= 1`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("image {p} repeated")));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2, 3]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(Error::PointOutOfRange {
                        point: p.max(q) as usize,
                        degree,
                    });
                }
                if std::mem::replace(&mut touched[p as usize], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in two cycles"
                    )));
                }
                images[p as usize] = q;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as u32;
        }
        Permutation { images }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u32 == q)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Sorted set of points of the domain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(Vec<u32>);

impl PointSet {
    pub fn new(mut points: Vec<u32>) -> Self {
        points.sort_unstable();
        points.dedup();
        Self(points)
    }

    pub fn points(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u32) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn image(&self, g: &Permutation) -> PointSet {
        PointSet::new(self.0.iter().map(|&p| g.apply(p)).collect())
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.0.iter().all(|&p| !other.contains(p))
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet(self.0.iter().copied().filter(|&p| other.contains(p)).collect())
    }
}

impl FromIterator<u32> for PointSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

/// Breadth-first closure of `generators`, starting at the identity and
/// applying generators on the right in the given order.
pub fn generate_elements(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be at least 1".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                seen.insert(y.clone(), ());
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// A permutation group with its full element list cached.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|e| other.contains(e))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Generates the group using the active closure cap.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(degree, generators, closure_cap())
    }

    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        let elements = generate_elements(degree, &generators, cap)?;
        debug_assert!(order_divides_factorial(elements.len(), degree));
        Ok(Self::assemble(degree, generators, elements))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::assemble(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn assemble(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Self {
            degree,
            generators,
            elements,
            index,
        }
    }

    /// Wraps an element list already known to be a subgroup (a filter of a
    /// group by a subgroup-defining predicate) and picks a generating set.
    fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashMap<Permutation, ()> = HashMap::new();
        span.insert(Permutation::identity(degree), ());
        for e in &elements {
            if span.contains_key(e) {
                continue;
            }
            generators.push(e.clone());
            let closure = generate_elements(degree, &generators, usize::MAX)
                .expect("subgroup closure cannot fail");
            span = closure.into_iter().map(|p| (p, ())).collect();
        }
        Self::assemble(degree, generators, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in breadth-first generation order; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Elements in lexicographic order of their image arrays.
    pub fn sorted_elements(&self) -> Vec<Permutation> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    pub fn orbit(&self, point: usize) -> Result<PointSet> {
        self.check_point(point)?;
        Ok(orbit_under(&self.generators, self.degree, point as u32))
    }

    /// Orbits ordered by their smallest point.
    pub fn orbits(&self) -> Vec<PointSet> {
        orbits_under(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        orbit_under(&self.generators, self.degree, 0).len() == self.degree
    }

    pub fn filter(&self, pred: impl Fn(&Permutation) -> bool) -> PermGroup {
        let elements = self.elements.iter().filter(|g| pred(g)).cloned().collect();
        Self::from_closed_elements(self.degree, elements)
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.check_point(point)?;
        let stab = self.filter(|g| g.apply(point as u32) == point as u32);
        if self.is_transitive() && self.degree * stab.order() != self.order() {
            return Err(Error::Invariant("orbit-stabilizer count failed".into()));
        }
        Ok(stab)
    }

    fn require_subgroup(&self, sub: &PermGroup) -> Result<()> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(
                "the given group is not contained in the ambient group".into(),
            ));
        }
        Ok(())
    }

    pub fn normalizer(&self, sub: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(sub)?;
        Ok(self.filter(|g| sub.generators.iter().all(|s| sub.contains(&s.conjugate_by(g)))))
    }

    pub fn centralizer(&self, sub: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(sub)?;
        Ok(self.filter(|g| sub.generators.iter().all(|s| s.commutes_with(g))))
    }

    /// `true` iff every image of `candidate` equals it or is disjoint from it.
    pub fn is_block(&self, candidate: &PointSet) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if candidate.is_empty() {
            return Err(Error::InvalidPermutation("empty block candidate".into()));
        }
        if let Some(&p) = candidate.points().last() {
            self.check_point(p as usize)?;
        }
        Ok(self.elements.iter().all(|g| {
            let img = candidate.image(g);
            img == *candidate || img.is_disjoint(candidate)
        }))
    }

    /// Conjugacy classes, each sorted lexicographically, listed by their
    /// smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<Permutation>> = Vec::new();
        let inverses: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![self.elements[start].clone()];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (g, gi) in self.generators.iter().zip(&inverses) {
                    let y = gi.compose(&self.elements[i]).compose(g);
                    let j = self.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        members.push(y);
                        queue.push_back(j);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        classes.sort();
        classes
    }

    /// Subgroup generated by the given elements of this group.
    pub fn subgroup(&self, generators: Vec<Permutation>) -> Result<PermGroup> {
        for g in &generators {
            if !self.contains(g) {
                return Err(Error::NotASubgroup(format!("{g:?} is not an element")));
            }
        }
        PermGroup::generate_with_cap(self.degree, generators, usize::MAX)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        for e in elements {
            for g in &self.elements {
                let c = e.conjugate_by(g);
                if !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        gens.sort();
        let closure = self.subgroup(gens)?;
        Ok(Self::from_closed_elements(self.degree, closure.elements))
    }

    pub fn is_normal_subgroup(&self, sub: &PermGroup) -> bool {
        sub.is_subgroup_of(self)
            && self.generators.iter().all(|g| {
                sub.generators
                    .iter()
                    .all(|s| sub.contains(&s.conjugate_by(g)))
            })
    }

    /// Every element squares to the identity.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.elements.iter().all(|e| e.compose(e).is_identity())
    }
}

fn order_divides_factorial(order: usize, degree: usize) -> bool {
    let mut rest = order as u128;
    for k in 1..=degree as u128 {
        let g = gcd128(rest, k);
        rest /= g;
        if rest == 1 {
            return true;
        }
    }
    rest == 1
}

fn gcd128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

/// Orbit of `point` under the group generated by `gens`.
pub fn orbit_under(gens: &[Permutation], degree: usize, point: u32) -> PointSet {
    let mut seen = vec![false; degree];
    seen[point as usize] = true;
    let mut out = vec![point];
    let mut head = 0;
    while head < out.len() {
        let p = out[head];
        head += 1;
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                out.push(q);
            }
        }
    }
    PointSet::new(out)
}

/// All orbits of `⟨gens⟩` on `{0..degree-1}`, ordered by smallest point.
pub fn orbits_under(gens: &[Permutation], degree: usize) -> Vec<PointSet> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if assigned[p] {
            continue;
        }
        let orbit = orbit_under(gens, degree, p as u32);
        for &q in orbit.points() {
            assigned[q as usize] = true;
        }
        out.push(orbit);
    }
    out
}

/// Symmetric group of the given degree, generated by a transposition and an
/// n-cycle.
pub fn symmetric_group(degree: usize) -> Result<PermGroup> {
    if degree == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let cycle: Vec<u32> = (0..degree as u32).collect();
    PermGroup::generate(
        degree,
        vec![
            Permutation::from_cycles(degree, &[&[0, 1]])?,
            Permutation::from_cycles(degree, &[&cycle])?,
        ],
    )
}

/// Alternating group on `degree >= 3` points, generated by 3-cycles.
pub fn alternating_group(degree: usize) -> Result<PermGroup> {
    let gens = (2..degree as u32)
        .map(|k| Permutation::from_cycles(degree, &[&[0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::generate(degree, gens)
}

/// Cyclic group generated by the standard n-cycle.
pub fn cyclic_group(degree: usize) -> Result<PermGroup> {
    let cycle: Vec<u32> = (0..degree as u32).collect();
    PermGroup::generate(degree, vec![Permutation::from_cycles(degree, &[&cycle])?])
}

/// Dihedral group of order `2n` acting on the vertices of an n-gon.
pub fn dihedral_group(n: usize) -> Result<PermGroup> {
    let rotation = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    let reflection = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    PermGroup::generate(n, vec![rotation, reflection])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym4() -> PermGroup {
        PermGroup::generate(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(generate_elements(3, &[], 10).unwrap().len(), 1);
        assert_eq!(generate_elements(4, &[perm(4, &[&[0, 1, 2, 3]])], 10).unwrap().len(), 4);
        assert_eq!(sym4().order(), 24);
        let err = generate_elements(4, &[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 10);
        assert_eq!(err, Err(Error::ClosureCapExceeded { cap: 10 }));
    }

    #[test]
    fn closure_is_deterministic() {
        let gens = vec![perm(5, &[&[0, 1, 2]]), perm(5, &[&[2, 3, 4]])];
        assert_eq!(
            generate_elements(5, &gens, 1000).unwrap(),
            generate_elements(5, &gens, 1000).unwrap()
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images(vec![0, 4]).is_err());
    }

    #[test]
    fn orbits_and_transitivity() {
        let trivial = PermGroup::trivial(5);
        assert_eq!(trivial.orbit(2).unwrap().points(), &[2]);
        let c4 = cyclic_group(4).unwrap();
        assert_eq!(c4.orbit(0).unwrap().points(), &[0, 1, 2, 3]);
        assert!(c4.is_transitive());
        assert!(!PermGroup::trivial(2).is_transitive());
        let two = PermGroup::generate(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])]).unwrap();
        assert!(!two.is_transitive());
        assert_eq!(two.orbit(0).unwrap().points(), &[0, 1]);
        let stab = sym4().point_stabilizer(0).unwrap();
        assert_eq!(stab.orbit(1).unwrap().points(), &[1, 2, 3]);
    }

    #[test]
    fn stabilizers() {
        assert_eq!(cyclic_group(4).unwrap().point_stabilizer(0).unwrap().order(), 1);
        assert_eq!(symmetric_group(3).unwrap().point_stabilizer(0).unwrap().order(), 2);
        assert_eq!(sym4().point_stabilizer(0).unwrap().order(), 6);
        assert!(sym4().point_stabilizer(7).is_err());
    }

    #[test]
    fn normalizers_and_centralizers() {
        let c4 = cyclic_group(4).unwrap();
        let sub = c4.subgroup(vec![perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(c4.normalizer(&sub).unwrap(), c4);

        let s3 = symmetric_group(3).unwrap();
        let t = s3.subgroup(vec![perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(s3.normalizer(&t).unwrap().order(), 2);
        assert_eq!(s3.centralizer(&PermGroup::trivial(3)).unwrap(), s3);
        assert_eq!(s3.centralizer(&s3).unwrap().order(), 1);

        let s4 = sym4();
        let klein = s4
            .subgroup(vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])])
            .unwrap();
        assert_eq!(s4.normalizer(&klein).unwrap().order(), 24);

        let d4 = dihedral_group(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.centralizer(&d4).unwrap().order(), 2);

        let outside = PermGroup::generate(3, vec![perm(3, &[&[0, 1]])]).unwrap();
        let c3 = cyclic_group(3).unwrap();
        assert!(matches!(c3.normalizer(&outside), Err(Error::NotASubgroup(_))));
        assert!(matches!(c3.centralizer(&outside), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn blocks() {
        let c4 = cyclic_group(4).unwrap();
        assert!(c4.is_block(&PointSet::new(vec![1])).unwrap());
        assert!(c4.is_block(&PointSet::new(vec![0, 1, 2, 3])).unwrap());
        assert!(c4.is_block(&PointSet::new(vec![0, 2])).unwrap());
        assert!(!c4.is_block(&PointSet::new(vec![0, 1, 2])).unwrap());
        assert!(!sym4().is_block(&PointSet::new(vec![0, 2])).unwrap());
        let two = PermGroup::generate(4, vec![perm(4, &[&[0, 1]])]).unwrap();
        assert_eq!(two.is_block(&PointSet::new(vec![0])), Err(Error::NotTransitive));
    }

    #[test]
    fn class_sizes() {
        let sizes = |g: &PermGroup| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
            s.sort();
            s
        };
        assert_eq!(sizes(&cyclic_group(5).unwrap()), vec![1; 5]);
        assert_eq!(sizes(&symmetric_group(3).unwrap()), vec![1, 2, 3]);
        assert_eq!(sizes(&sym4()), vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn cycle_notation_and_order() {
        let p = perm(6, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(format!("{p:?}"), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(format!("{:?}", Permutation::identity(3)), "()");
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
