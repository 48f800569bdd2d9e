//! Isomorphism testing for small tables by backtracking over generator
//! images.

use super::GroupTable;
use crate::error::{Error, Result};

pub const ISOMORPHISM_ORDER_LIMIT: usize = 64;

/// Automorphism enumeration is kept to tiny groups.
const AUTOMORPHISM_ORDER_LIMIT: usize = 32;

pub fn brute_isomorphic(a: &GroupTable, b: &GroupTable) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// An isomorphism `a -> b` as the image of each element of `a`.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Result<Option<Vec<u32>>> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_ORDER_LIMIT {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                limit: ISOMORPHISM_ORDER_LIMIT,
            });
        }
    }
    if a.order() != b.order() || a.order_statistics() != b.order_statistics() {
        return Ok(None);
    }
    let mut found = None;
    search(a, b, &mut |map| {
        found = Some(map.to_vec());
        false
    });
    Ok(found)
}

/// All automorphisms of a group of order at most 32.
pub fn automorphisms(a: &GroupTable) -> Result<Vec<Vec<u32>>> {
    if a.order() > AUTOMORPHISM_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: a.order(),
            limit: AUTOMORPHISM_ORDER_LIMIT,
        });
    }
    let mut out = Vec::new();
    search(a, a, &mut |map| {
        out.push(map.to_vec());
        true
    });
    out.sort();
    Ok(out)
}

/// Visits every isomorphism; the visitor returns `false` to stop.
fn search(a: &GroupTable, b: &GroupTable, visit: &mut dyn FnMut(&[u32]) -> bool) {
    let gens = a.generating_set();
    let orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(a, b, &gens, &orders, &mut images, visit);
}

fn backtrack(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[u32],
    orders: &[usize],
    images: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    let k = images.len();
    if k == gens.len() {
        return match extend(a, b, gens, images) {
            Some(map) if map.iter().all(|&x| x != u32::MAX) => visit(&map),
            _ => true,
        };
    }
    for candidate in b.elements() {
        if b.element_order(candidate) != orders[k] {
            continue;
        }
        images.push(candidate);
        let keep_going = if extend(a, b, &gens[..=k], images).is_some() {
            backtrack(a, b, gens, orders, images, visit)
        } else {
            true
        };
        images.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Extends generator images to the subgroup they generate. Unreached
/// elements map to `u32::MAX`; `None` on a conflict or a collision.
fn extend(a: &GroupTable, b: &GroupTable, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let n = a.order();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &h) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let image = b.mul(map[x as usize], h);
            match map[y as usize] {
                u32::MAX => {
                    if used[image as usize] {
                        return None;
                    }
                    used[image as usize] = true;
                    map[y as usize] = image;
                    queue.push(y);
                }
                existing if existing != image => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, elementary_abelian, generalized_dicyclic};

    #[test]
    fn basic_isomorphism() {
        let c4 = cyclic(4).unwrap();
        let v4 = elementary_abelian(2).unwrap();
        assert!(brute_isomorphic(&c4, &c4).unwrap());
        assert!(!brute_isomorphic(&c4, &v4).unwrap());
        let c6 = cyclic(6).unwrap();
        let c2c3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        let map = find_isomorphism(&c6, &c2c3).unwrap().unwrap();
        for x in c6.elements() {
            for y in c6.elements() {
                assert_eq!(map[c6.mul(x, y) as usize], c2c3.mul(map[x as usize], map[y as usize]));
            }
        }
        let d8 = dihedral(8).unwrap();
        let q8 = generalized_dicyclic(&c4, 2).unwrap();
        assert!(!brute_isomorphic(&d8, &q8).unwrap());
        assert!(matches!(
            brute_isomorphic(&cyclic(65).unwrap(), &cyclic(65).unwrap()),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(8).unwrap()).unwrap().len(), 4);
        assert_eq!(automorphisms(&elementary_abelian(3).unwrap()).unwrap().len(), 168);
        assert_eq!(automorphisms(&dihedral(8).unwrap()).unwrap().len(), 8);
        let q8 = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert_eq!(automorphisms(&q8).unwrap().len(), 24);
    }
}
