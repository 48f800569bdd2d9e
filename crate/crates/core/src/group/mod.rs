//! Abstract finite groups stored as multiplication tables.
//!
//! Element 0 is always the identity. Products read left to right:
//! `mul(a, b)` is `ab`, matching the permutation convention where `a` acts
//! first.

mod construct;
mod iso;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub use construct::{
    build_standard, central_product, coset_action, cyclic, dihedral, direct_product,
    elementary_abelian, generalized_dicyclic, semidirect_v_h, SemidirectLayout, Standard,
};
pub(crate) use construct::central_product_indexed;
pub use construct::TABLE_ORDER_LIMIT;
pub use iso::{automorphisms, brute_isomorphic, find_isomorphism, ISOMORPHISM_ORDER_LIMIT};

/// Exhaustive associativity check up to this order; sampled above it.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable(order {})", self.order)
    }
}

/// Serialized form: order plus the row-major flattened table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub order: usize,
    pub mul: Vec<u32>,
}

impl GroupTable {
    /// Validates a row-major table: identity at 0, Latin square, associative.
    pub fn from_mul_table(order: usize, mul: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                mul.len()
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x as usize >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; order];
        for row in 0..order {
            for col in 0..order {
                let v = mul[row * order + col] as usize;
                if seen[v] == row as u32 + 1 {
                    return Err(Error::InvalidTable(format!("row {row} repeats {v}")));
                }
                seen[v] = row as u32 + 1;
            }
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("Latin square row contains the identity");
            inv[x] = y as u32;
        }
        let table = Self { order, mul, inv };
        table.check_associativity()?;
        Ok(table)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: u32, b: u32, c: u32| {
            self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    for c in 0..n as u32 {
                        if bad(a, b, c) {
                            return Err(Error::InvalidTable(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let a = rng.random_range(0..n as u32);
                let b = rng.random_range(0..n as u32);
                let c = rng.random_range(0..n as u32);
                if bad(a, b, c) {
                    return Err(Error::InvalidTable(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a table from a closure known to define a group law on
    /// `0..order` with identity 0. Skips validation.
    pub(crate) fn from_fn_unchecked(order: usize, f: impl Fn(u32, u32) -> u32) -> Self {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order as u32 {
            for b in 0..order as u32 {
                mul.push(f(a, b));
            }
        }
        let mut inv = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        Self { order, mul, inv }
    }

    /// Table of the abstract group underlying a permutation group. Elements
    /// are indexed in lexicographic order, so the identity is element 0.
    pub fn from_regular_action(group: &PermGroup) -> Self {
        let elements = group.sorted_elements();
        let index: HashMap<&Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        Self::from_fn_unchecked(elements.len(), |a, b| {
            index[&elements[a as usize].compose(&elements[b as usize])]
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn data(&self) -> TableData {
        TableData {
            order: self.order,
            mul: self.mul.clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `b^-1 a b`.
    pub fn conjugate(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn is_central(&self, a: u32) -> bool {
        self.elements().all(|b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| b < a || self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> ElementSubset {
        ElementSubset::from_iter(self.order, self.elements().filter(|&a| self.is_central(a)))
    }

    pub fn is_involution(&self, a: u32) -> bool {
        a != 0 && self.mul(a, a) == 0
    }

    /// Elements of order at most 2, identity included.
    pub fn involution_set(&self) -> ElementSubset {
        ElementSubset::from_iter(self.order, self.elements().filter(|&a| self.mul(a, a) == 0))
    }

    pub fn subgroup_generated(&self, gens: &[u32]) -> ElementSubset {
        let mut set = ElementSubset::new(self.order);
        set.insert(0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Closed under products and contains the identity.
    pub fn is_subgroup(&self, set: &ElementSubset) -> bool {
        set.universe() == self.order
            && set.contains(0)
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &ElementSubset) -> bool {
        self.is_subgroup(set)
            && set
                .iter()
                .all(|a| self.elements().all(|g| set.contains(self.conjugate(a, g))))
    }

    /// Greedy generating set, preferring elements of large order.
    pub fn generating_set(&self) -> Vec<u32> {
        let mut candidates: Vec<u32> = self.elements().skip(1).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = self.subgroup_generated(&gens);
        for a in candidates {
            if span.count() == self.order {
                break;
            }
            if !span.contains(a) {
                gens.push(a);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Right cosets `Hx`, labelled in order of their smallest element.
    pub fn right_cosets(&self, sub: &ElementSubset) -> Vec<Vec<u32>> {
        let mut label = vec![usize::MAX; self.order];
        let mut cosets = Vec::new();
        for x in self.elements() {
            if label[x as usize] != usize::MAX {
                continue;
            }
            let coset: Vec<u32> = {
                let mut c: Vec<u32> = sub.iter().map(|h| self.mul(h, x)).collect();
                c.sort_unstable();
                c
            };
            for &y in &coset {
                label[y as usize] = cosets.len();
            }
            cosets.push(coset);
        }
        cosets
    }

    /// Index-2 subgroups, found as kernels of the homomorphisms onto C2.
    pub fn index_two_subgroups(&self) -> Vec<ElementSubset> {
        if self.order % 2 == 1 {
            return Vec::new();
        }
        // Every index-2 subgroup contains all squares, and the quotient by
        // the subgroup they generate is elementary abelian.
        let mut squares: Vec<u32> = self.elements().map(|a| self.mul(a, a)).collect();
        squares.sort_unstable();
        squares.dedup();
        let base = self.subgroup_generated(&squares);
        // Label cosets of `base` by vectors over GF(2).
        let mut label: Vec<Option<u64>> = vec![None; self.order];
        for x in base.iter() {
            label[x as usize] = Some(0);
        }
        let mut dim = 0u32;
        for x in self.elements() {
            if label[x as usize].is_some() {
                continue;
            }
            let bit = 1u64 << dim;
            dim += 1;
            let known: Vec<(u32, u64)> = self
                .elements()
                .filter_map(|y| label[y as usize].map(|l| (y, l)))
                .collect();
            for (y, l) in known {
                let z = self.mul(y, x);
                label[z as usize] = Some(l ^ bit);
            }
        }
        let label: Vec<u64> = label.into_iter().map(|l| l.expect("all labelled")).collect();
        (1u64..(1u64 << dim))
            .map(|f| {
                ElementSubset::from_iter(
                    self.order,
                    self.elements().filter(|&x| (label[x as usize] & f).count_ones().is_multiple_of(2)),
                )
            })
            .collect()
    }

    /// Searches for a witness `(A, y, x)` that the group is generalized
    /// dicyclic: `A` abelian of index 2 and exponent > 2, `x` outside `A`
    /// with `x^2 = y` an involution and `x` inverting `A`.
    pub fn generalized_dicyclic_witness(&self) -> Option<DicyclicWitness> {
        for a in self.index_two_subgroups() {
            let abelian = a
                .iter()
                .all(|p| a.iter().all(|q| self.mul(p, q) == self.mul(q, p)));
            if !abelian {
                continue;
            }
            if a.iter().all(|p| self.mul(p, p) == 0) {
                continue;
            }
            for x in self.elements().filter(|&x| !a.contains(x)) {
                let y = self.mul(x, x);
                if !self.is_involution(y) {
                    continue;
                }
                if a.iter().all(|p| self.conjugate(p, x) == self.inv(p)) {
                    return Some(DicyclicWitness { base: a, y, x });
                }
            }
        }
        None
    }

    pub fn is_generalized_dicyclic(&self) -> bool {
        self.generalized_dicyclic_witness().is_some()
    }

    /// Abelian with an element of order greater than 2.
    pub fn is_abelian_exponent_gt_2(&self) -> bool {
        self.is_abelian() && self.elements().any(|a| self.mul(a, a) != 0)
    }

    /// Sorted multiset of element orders.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Regular right action of the table as permutations of its elements.
    pub fn right_regular(&self, a: u32) -> Permutation {
        Permutation::from_images(self.elements().map(|x| self.mul(x, a)).collect())
            .expect("table rows are permutations")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicyclicWitness {
    pub base: ElementSubset,
    pub y: u32,
    pub x: u32,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Bit-indexed subset of the elements of a group table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    universe: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ElementSubset {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            bits: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_iter(universe, 0..universe as u32)
    }

    pub fn from_iter(universe: usize, items: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::new(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Size of the ambient group.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    pub fn insert(&mut self, x: u32) {
        assert!((x as usize) < self.universe, "element {x} out of range");
        self.bits[x as usize / 64] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: u32) {
        if (x as usize) < self.universe {
            self.bits[x as usize / 64] &= !(1 << (x % 64));
        }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        (x as usize) < self.universe && self.bits[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.universe as u32).filter(|&x| self.contains(x))
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset {
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// Elements of order at most 2 (free-function form).
pub fn involution_set(group: &GroupTable) -> ElementSubset {
    group.involution_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{cyclic_group, symmetric_group};

    #[test]
    fn regular_action_tables() {
        let c2 = PermGroup::generate(2, vec![Permutation::from_images(vec![1, 0]).unwrap()])
            .unwrap();
        let t = GroupTable::from_regular_action(&c2);
        assert_eq!(t.order(), 2);
        assert!(t.is_abelian());
        let c4 = GroupTable::from_regular_action(&cyclic_group(4).unwrap());
        assert!(brute_isomorphic(&c4, &cyclic(4).unwrap()).unwrap());
        let s3 = GroupTable::from_regular_action(&symmetric_group(3).unwrap());
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn table_validation() {
        assert!(GroupTable::from_mul_table(2, vec![0, 1, 1, 0]).is_ok());
        assert!(GroupTable::from_mul_table(2, vec![0, 1, 1, 1]).is_err());
        assert!(GroupTable::from_mul_table(2, vec![1, 0, 0, 1]).is_err());
        assert!(GroupTable::from_mul_table(3, vec![0, 1, 2, 1, 2, 0]).is_err());
        // Latin square with identity that is not associative (order 5 loop).
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            GroupTable::from_mul_table(5, loop5),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn involution_sets() {
        assert_eq!(cyclic(3).unwrap().involution_set().count(), 1);
        assert_eq!(elementary_abelian(3).unwrap().involution_set().count(), 8);
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert_eq!(involution_set(&q8).count(), 2);
    }

    #[test]
    fn dicyclic_recognition() {
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert!(q8.is_generalized_dicyclic());
        let c4c2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap());
        assert!(!c4c2.is_generalized_dicyclic());
        let dic12 = generalized_dicyclic(&cyclic(6).unwrap(), 3).unwrap();
        assert_eq!(dic12.order(), 12);
        assert!(dic12.is_generalized_dicyclic());
        assert!(!dihedral(8).unwrap().is_generalized_dicyclic());
        assert!(!elementary_abelian(3).unwrap().is_generalized_dicyclic());
    }

    #[test]
    fn index_two_subgroup_count() {
        // C2^3 has 7 hyperplanes, C4 one, D8 three, Q8 three.
        assert_eq!(elementary_abelian(3).unwrap().index_two_subgroups().len(), 7);
        assert_eq!(cyclic(4).unwrap().index_two_subgroups().len(), 1);
        assert_eq!(dihedral(8).unwrap().index_two_subgroups().len(), 3);
        assert_eq!(cyclic(9).unwrap().index_two_subgroups().len(), 0);
    }

    #[test]
    fn subsets() {
        let mut s = ElementSubset::new(70);
        s.insert(0);
        s.insert(65);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert_eq!(s.count(), 2);
        assert_eq!(s.to_vec(), vec![0, 65]);
        s.remove(0);
        assert_eq!(s.count(), 1);
    }
}
