//! Standard constructors for group tables.

use std::collections::HashMap;

use super::{ElementSubset, GroupTable};
use crate::error::{Error, Result};
use crate::gf2::{check_closed, Gf2Matrix, Gf2Vector};
use crate::perm::{PermGroup, Permutation};

/// Largest table the constructors will build (the table has `order^2` cells).
pub const TABLE_ORDER_LIMIT: usize = 4096;

fn check_order(order: usize) -> Result<()> {
    if order > TABLE_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order,
            limit: TABLE_ORDER_LIMIT,
        });
    }
    Ok(())
}

/// Named groups accepted by [`build_standard`].
#[derive(Clone, Debug)]
pub enum Standard {
    Cyclic(usize),
    /// `C2^k`.
    ElementaryAbelian(usize),
    /// Dihedral group of the given (even) order.
    Dihedral(usize),
    GeneralizedDicyclic { base: GroupTable, y: u32 },
    DirectProduct(GroupTable, GroupTable),
    CentralProduct {
        a: GroupTable,
        b: GroupTable,
        za: u32,
        zb: u32,
    },
}

pub fn build_standard(kind: &Standard) -> Result<GroupTable> {
    match kind {
        Standard::Cyclic(n) => cyclic(*n),
        Standard::ElementaryAbelian(k) => elementary_abelian(*k),
        Standard::Dihedral(n) => dihedral(*n),
        Standard::GeneralizedDicyclic { base, y } => generalized_dicyclic(base, *y),
        Standard::DirectProduct(a, b) => {
            check_order(a.order() * b.order())?;
            Ok(direct_product(a, b))
        }
        Standard::CentralProduct { a, b, za, zb } => central_product(a, b, *za, *zb),
    }
}

/// `C_n`, element `i` standing for the `i`-th power of a generator.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadConstructorInput("cyclic order must be positive".into()));
    }
    check_order(n)?;
    let m = n as u32;
    Ok(GroupTable::from_fn_unchecked(n, |a, b| (a + b) % m))
}

/// `C2^k` with XOR as the product.
pub fn elementary_abelian(k: usize) -> Result<GroupTable> {
    if k >= 32 {
        return Err(Error::BadConstructorInput(format!("rank {k} too large")));
    }
    check_order(1 << k)?;
    Ok(GroupTable::from_fn_unchecked(1 << k, |a, b| a ^ b))
}

/// Dihedral group of order `n`; element `i + (n/2) j` is `r^i s^j`.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::BadConstructorInput(format!(
            "dihedral order must be even and positive, got {n}"
        )));
    }
    check_order(n)?;
    let m = (n / 2) as u32;
    Ok(GroupTable::from_fn_unchecked(n, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let k = if j == 1 { (m - k) % m } else { k };
        (i + k) % m + m * ((j + l) % 2)
    }))
}

/// `Dic(A, y, x) = <A, x | x^2 = y, a^x = a^-1>`. Element `a + |A| e` is
/// `a x^e`.
pub fn generalized_dicyclic(base: &GroupTable, y: u32) -> Result<GroupTable> {
    let n = base.order();
    if !base.is_abelian() {
        return Err(Error::BadConstructorInput("base group is not abelian".into()));
    }
    if n % 2 == 1 {
        return Err(Error::BadConstructorInput("base group has odd order".into()));
    }
    if base.exponent() <= 2 {
        return Err(Error::BadConstructorInput("base group has exponent at most 2".into()));
    }
    if y as usize >= n || !base.is_involution(y) {
        return Err(Error::BadConstructorInput(format!("{y} is not an involution of the base")));
    }
    check_order(2 * n)?;
    let m = n as u32;
    Ok(GroupTable::from_fn_unchecked(2 * n, |p, q| {
        let (a, e) = (p % m, p / m);
        let (b, f) = (q % m, q / m);
        // x^e b = b^{(-1)^e} x^e
        let b = if e == 1 { base.inv(b) } else { b };
        let ab = base.mul(a, b);
        if e == 1 && f == 1 {
            base.mul(ab, y)
        } else {
            ab + m * (e ^ f)
        }
    }))
}

/// `A x B`; element `a + |A| b` is the pair `(a, b)`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let n = a.order() as u32;
    GroupTable::from_fn_unchecked(a.order() * b.order(), |p, q| {
        a.mul(p % n, q % n) + n * b.mul(p / n, q / n)
    })
}

/// `(A x B) / <(zA, zB)>` for central involutions `zA`, `zB`. Each class is
/// represented by its smaller pair index; classes are numbered in order of
/// representative, so the identity stays at 0.
pub fn central_product(a: &GroupTable, b: &GroupTable, za: u32, zb: u32) -> Result<GroupTable> {
    Ok(central_product_indexed(a, b, za, zb)?.0)
}

/// Central product together with the class index of each pair `a + |A| b`.
pub(crate) fn central_product_indexed(
    a: &GroupTable,
    b: &GroupTable,
    za: u32,
    zb: u32,
) -> Result<(GroupTable, Vec<u32>)> {
    for (g, z, side) in [(a, za, "first"), (b, zb, "second")] {
        if z as usize >= g.order() || z == 0 || !g.is_involution(z) || !g.is_central(z) {
            return Err(Error::BadConstructorInput(format!(
                "{z} is not a central involution of the {side} factor"
            )));
        }
    }
    let order = a.order() * b.order() / 2;
    check_order(order)?;
    let full = direct_product(a, b);
    let n = a.order() as u32;
    let z = za + n * zb;
    let mut rep_index = vec![u32::MAX; full.order()];
    let mut reps = Vec::with_capacity(order);
    for p in full.elements() {
        if rep_index[p as usize] != u32::MAX {
            continue;
        }
        let q = full.mul(p, z);
        rep_index[p as usize] = reps.len() as u32;
        rep_index[q as usize] = reps.len() as u32;
        reps.push(p);
    }
    let table = GroupTable::from_fn_unchecked(order, |x, y| {
        rep_index[full.mul(reps[x as usize], reps[y as usize]) as usize]
    });
    Ok((table, rep_index))
}

/// Element layout of `V ⋊ H`: element `v + 16 p` is the pair
/// `(v, H[p])`, with the identity matrix at position 0 and the remaining
/// matrices in sorted order.
#[derive(Clone, Debug)]
pub struct SemidirectLayout {
    matrices: Vec<Gf2Matrix>,
    position: HashMap<Gf2Matrix, usize>,
}

impl SemidirectLayout {
    pub fn new(h: &[Gf2Matrix]) -> Result<Self> {
        check_closed(h)?;
        let mut matrices: Vec<Gf2Matrix> = h.to_vec();
        matrices.sort();
        matrices.dedup();
        matrices.retain(|&m| m != Gf2Matrix::IDENTITY);
        matrices.insert(0, Gf2Matrix::IDENTITY);
        let position = matrices.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(Self { matrices, position })
    }

    pub fn order(&self) -> usize {
        16 * self.matrices.len()
    }

    pub fn matrices(&self) -> &[Gf2Matrix] {
        &self.matrices
    }

    pub fn element(&self, v: Gf2Vector, h: Gf2Matrix) -> Option<u32> {
        self.position.get(&h).map(|&p| v.0 as u32 + 16 * p as u32)
    }

    pub fn vector_of(&self, x: u32) -> Gf2Vector {
        Gf2Vector((x % 16) as u8)
    }

    pub fn matrix_of(&self, x: u32) -> Gf2Matrix {
        self.matrices[(x / 16) as usize]
    }

    /// The normal subgroup `V = {(v, 1)}`.
    pub fn v_subgroup(&self) -> ElementSubset {
        ElementSubset::from_iter(self.order(), 0..16)
    }

    /// `W = {(w, 1) : w in <e1, e2>}`.
    pub fn w_subgroup(&self) -> ElementSubset {
        ElementSubset::from_iter(self.order(), 0..4)
    }

    /// `(v1, h1)(v2, h2) = (v1 + v2 h1^-1, h1 h2)`.
    pub fn table(&self) -> GroupTable {
        let inverses: Vec<Gf2Matrix> = self
            .matrices
            .iter()
            .map(|m| m.inverse().expect("invertible"))
            .collect();
        GroupTable::from_fn_unchecked(self.order(), |x, y| {
            let (v1, p1) = ((x % 16) as u8, (x / 16) as usize);
            let (v2, p2) = ((y % 16) as u8, (y / 16) as usize);
            let v = v1 ^ inverses[p1].apply(Gf2Vector(v2)).0;
            let h = self.matrices[p1].mul(self.matrices[p2]);
            v as u32 + 16 * self.position[&h] as u32
        })
    }
}

/// `V ⋊ H` for a subgroup `H` of GL(4,2).
pub fn semidirect_v_h(h: &[Gf2Matrix]) -> Result<GroupTable> {
    Ok(SemidirectLayout::new(h)?.table())
}

/// Right multiplication on the right cosets of `sub`, cosets numbered in
/// order of their smallest element (the subgroup itself is point 0).
pub fn coset_action(group: &GroupTable, sub: &ElementSubset) -> Result<PermGroup> {
    if sub.universe() != group.order() || !group.is_subgroup(sub) {
        return Err(Error::NotASubgroup("subset is not a subgroup of the table".into()));
    }
    let cosets = group.right_cosets(sub);
    let mut label = vec![0u32; group.order()];
    for (i, coset) in cosets.iter().enumerate() {
        for &x in coset {
            label[x as usize] = i as u32;
        }
    }
    let degree = cosets.len();
    let gens: Vec<Permutation> = group
        .generating_set()
        .into_iter()
        .map(|g| {
            Permutation::from_images(
                cosets
                    .iter()
                    .map(|c| label[group.mul(c[0], g) as usize])
                    .collect(),
            )
            .expect("coset action is a permutation")
        })
        .filter(|p| !p.is_identity())
        .collect();
    PermGroup::generate(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::theorem2_groups;
    use crate::group::brute_isomorphic;
    use crate::perm::alternating_group;

    #[test]
    fn small_constructors() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert!(cyclic(0).is_err());
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(d8.involution_set().count(), 6);
        assert!(dihedral(7).is_err());
        assert_eq!(elementary_abelian(0).unwrap().order(), 1);
    }

    #[test]
    fn dicyclic_groups() {
        for n in [4usize, 6, 8] {
            let c = cyclic(n).unwrap();
            let dic = generalized_dicyclic(&c, (n / 2) as u32).unwrap();
            assert_eq!(dic.order(), 2 * n);
            assert_eq!(dic.involution_set().count(), 2, "one involution plus identity");
        }
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert_eq!(q8.center().count(), 2);
        assert!(generalized_dicyclic(&cyclic(4).unwrap(), 1).is_err());
        assert!(generalized_dicyclic(&elementary_abelian(2).unwrap(), 1).is_err());
        assert!(generalized_dicyclic(&cyclic(3).unwrap(), 0).is_err());
        assert!(generalized_dicyclic(&dihedral(8).unwrap(), 1).is_err());
    }

    #[test]
    fn central_products() {
        let d8 = dihedral(8).unwrap();
        // The rotation r^2 is the central involution of D8.
        let z = 2;
        assert!(d8.is_central(z) && d8.is_involution(z));
        let g = central_product(&d8, &d8, z, z).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.center().count(), 2);
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        let h = central_product(&q8, &d8, 2, z).unwrap();
        assert_eq!(h.order(), 32);
        assert!(!brute_isomorphic(&g, &h).unwrap());
        assert!(central_product(&d8, &d8, 1, z).is_err());
        let standard = build_standard(&Standard::CentralProduct {
            a: d8.clone(),
            b: d8.clone(),
            za: z,
            zb: z,
        })
        .unwrap();
        assert_eq!(standard, g);
    }

    #[test]
    fn semidirect_products() {
        let trivial = semidirect_v_h(&[Gf2Matrix::IDENTITY]).unwrap();
        assert!(brute_isomorphic(&trivial, &elementary_abelian(4).unwrap()).unwrap());
        let (h12, h24) = theorem2_groups();
        let layout = SemidirectLayout::new(&h12).unwrap();
        let g = layout.table();
        assert_eq!(g.order(), 192);
        assert_eq!(semidirect_v_h(&h24).unwrap().order(), 384);
        let v = layout.v_subgroup();
        assert!(g.is_normal(&v));
        // Conjugating (v, 1) by (0, h) gives (v h, 1).
        for &h in layout.matrices() {
            let x = layout.element(Gf2Vector::ZERO, h).unwrap();
            for vec in Gf2Vector::all() {
                let y = layout.element(vec, Gf2Matrix::IDENTITY).unwrap();
                let expected = layout.element(h.apply(vec), Gf2Matrix::IDENTITY).unwrap();
                assert_eq!(g.conjugate(y, x), expected);
            }
        }
    }

    #[test]
    fn coset_actions() {
        let c6 = cyclic(6).unwrap();
        let whole = ElementSubset::full(6);
        assert_eq!(coset_action(&c6, &whole).unwrap().degree(), 1);
        let trivial = ElementSubset::from_iter(6, [0]);
        let regular = coset_action(&c6, &trivial).unwrap();
        assert_eq!((regular.degree(), regular.order()), (6, 6));
        let not_sub = ElementSubset::from_iter(6, [0, 1]);
        assert!(matches!(coset_action(&c6, &not_sub), Err(Error::NotASubgroup(_))));

        let (h12, _) = theorem2_groups();
        let layout = SemidirectLayout::new(&h12).unwrap();
        let g = layout.table();
        let action = coset_action(&g, &layout.w_subgroup()).unwrap();
        assert_eq!(action.degree(), 48);
        assert!(action.is_transitive());
        assert_eq!(action.order(), 192);
    }

    #[test]
    fn extremal_group_is_alt4() {
        let (h12, h24) = theorem2_groups();
        let as_perms = |h: &[Gf2Matrix]| {
            let gens = h
                .iter()
                .map(|m| {
                    Permutation::from_images((0u8..16).map(|v| m.apply(Gf2Vector(v)).0 as u32).collect())
                        .unwrap()
                })
                .collect();
            PermGroup::generate(16, gens).unwrap()
        };
        let t12 = GroupTable::from_regular_action(&as_perms(&h12));
        let alt4 = GroupTable::from_regular_action(&alternating_group(4).unwrap());
        assert!(brute_isomorphic(&t12, &alt4).unwrap());
        let t24 = GroupTable::from_regular_action(&as_perms(&h24));
        let sym4 = GroupTable::from_regular_action(&crate::perm::symmetric_group(4).unwrap());
        assert!(brute_isomorphic(&t24, &sym4).unwrap());
    }
}
