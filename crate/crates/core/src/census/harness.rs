//! Small pairs `R < G` with `R` regular, used to exercise the census.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{automorphisms, cyclic, dihedral, direct_product, elementary_abelian, generalized_dicyclic, GroupTable};
use crate::perm::{alternating_group, dihedral_group, symmetric_group, PermGroup, Permutation};

/// Largest regular subgroup the harness builds.
pub const HARNESS_ORDER_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct HarnessPair {
    pub name: String,
    pub ambient: PermGroup,
    pub regular: Vec<Permutation>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn shift(n: usize) -> Permutation {
    Permutation::from_images((0..n as u32).map(|x| (x + 1) % n as u32).collect()).expect("shift")
}

fn scale(n: usize, u: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| (x * u % n) as u32).collect()).expect("unit")
}

/// `C_n ⋊ Aut(C_n)` acting on `Z_n` by `x ↦ ux + b`.
pub fn holomorph(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::BadConstructorInput(format!("holomorph needs n >= 2, got {n}")));
    }
    let mut gens = vec![shift(n)];
    gens.extend((2..n).filter(|&u| gcd(u, n) == 1).map(|u| scale(n, u)));
    PermGroup::generate(n, gens)
}

/// `<x ↦ x + 1, x ↦ ux>` on `Z_n`.
pub fn affine(n: usize, u: usize) -> Result<PermGroup> {
    if n < 2 || gcd(u, n) != 1 {
        return Err(Error::BadConstructorInput(format!("{u} is not a unit mod {n}")));
    }
    PermGroup::generate(n, vec![shift(n), scale(n, u)])
}

fn regular_gens(table: &GroupTable) -> Vec<Permutation> {
    table.generating_set().into_iter().map(|a| table.right_regular(a)).collect()
}

/// Left multiplications `x ↦ a^-1 x`, which commute with the right ones.
fn left_regular(table: &GroupTable, a: u32) -> Permutation {
    let a_inv = table.inv(a);
    Permutation::from_images(table.elements().map(|x| table.mul(a_inv, x)).collect())
        .expect("table rows are permutations")
}

/// `<left, right>` regular actions of a table; the right one is returned as
/// the regular subgroup.
pub fn left_right(table: &GroupTable) -> Result<(PermGroup, Vec<Permutation>)> {
    let regular = regular_gens(table);
    let mut gens = regular.clone();
    gens.extend(table.generating_set().into_iter().map(|a| left_regular(table, a)));
    Ok((PermGroup::generate(table.order(), gens)?, regular))
}

/// `C2 wr C_k` on `2k` points `2i + b`.
pub fn wreath_c2_ck(k: usize) -> Result<PermGroup> {
    let n = 2 * k;
    let shift_blocks =
        Permutation::from_images((0..n).map(|p| (2 * ((p / 2 + 1) % k) + p % 2) as u32).collect())?;
    PermGroup::generate(n, vec![Permutation::from_cycles(n, &[&[0, 1]])?, shift_blocks])
}

fn wreath_regulars(k: usize) -> Result<[Vec<Permutation>; 2]> {
    let n = 2 * k;
    let shift_blocks =
        Permutation::from_images((0..n).map(|p| (2 * ((p / 2 + 1) % k) + p % 2) as u32).collect())?;
    let flip_all = Permutation::from_images((0..n).map(|p| (p ^ 1) as u32).collect())?;
    let twisted = Permutation::from_images(
        (0..n)
            .map(|p| {
                let (i, b) = (p / 2, p % 2);
                if i + 1 < k {
                    (2 * (i + 1) + b) as u32
                } else {
                    (1 - b) as u32
                }
            })
            .collect(),
    )?;
    Ok([vec![shift_blocks, flip_all], vec![twisted]])
}

fn small_tables() -> Result<Vec<(String, GroupTable)>> {
    let c4 = cyclic(4)?;
    let mut out = vec![
        ("C2^2".to_string(), elementary_abelian(2)?),
        ("C2^3".to_string(), elementary_abelian(3)?),
        ("C4xC2".to_string(), direct_product(&c4, &cyclic(2)?)),
        ("C4xC4".to_string(), direct_product(&c4, &c4)),
        ("Q8".to_string(), generalized_dicyclic(&c4, 2)?),
        ("Dic12".to_string(), generalized_dicyclic(&cyclic(6)?, 3)?),
    ];
    for n in [4, 5, 6, 7, 8, 9, 10, 12] {
        out.push((format!("C{n}"), cyclic(n)?));
    }
    for n in [6, 8, 10, 12] {
        out.push((format!("D{n}"), dihedral(n)?));
    }
    Ok(out)
}

/// Every harness pair; the seed drives the choice of automorphisms in the
/// `R ⋊ A` family.
pub fn harness_pairs(seed: u64) -> Result<Vec<HarnessPair>> {
    let mut pairs = Vec::new();
    for n in 3..=HARNESS_ORDER_LIMIT {
        pairs.push(HarnessPair {
            name: format!("hol(C{n})"),
            ambient: holomorph(n)?,
            regular: vec![shift(n)],
        });
        for u in (2..n).filter(|&u| gcd(u, n) == 1) {
            pairs.push(HarnessPair {
                name: format!("affine({n},{u})"),
                ambient: affine(n, u)?,
                regular: vec![shift(n)],
            });
        }
        pairs.push(HarnessPair {
            name: format!("Dih({n}) > C{n}"),
            ambient: dihedral_group(n)?,
            regular: vec![shift(n)],
        });
    }
    for n in 3..=6 {
        pairs.push(HarnessPair {
            name: format!("Sym({n}) > C{n}"),
            ambient: symmetric_group(n)?,
            regular: vec![shift(n)],
        });
    }
    pairs.push(HarnessPair {
        name: "Alt(5) > C5".into(),
        ambient: alternating_group(5)?,
        regular: vec![shift(5)],
    });
    let v4 = vec![
        Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
        Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
    ];
    pairs.push(HarnessPair {
        name: "Sym(4) > V4".into(),
        ambient: symmetric_group(4)?,
        regular: v4.clone(),
    });
    pairs.push(HarnessPair {
        name: "Alt(4) > V4".into(),
        ambient: alternating_group(4)?,
        regular: v4,
    });
    pairs.push(HarnessPair {
        name: "Sym(4) > C4".into(),
        ambient: symmetric_group(4)?,
        regular: vec![shift(4)],
    });
    for k in 2..=HARNESS_ORDER_LIMIT / 2 {
        let ambient = wreath_c2_ck(k)?;
        let [split, twisted] = wreath_regulars(k)?;
        pairs.push(HarnessPair {
            name: format!("C2 wr C{k} > C{k}xC2"),
            ambient: ambient.clone(),
            regular: split,
        });
        pairs.push(HarnessPair {
            name: format!("C2 wr C{k} > C{}", 2 * k),
            ambient,
            regular: twisted,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, table) in small_tables()? {
        let regular = regular_gens(&table);
        let n = table.order();
        if !table.is_abelian() {
            let (ambient, regular) = left_right(&table)?;
            pairs.push(HarnessPair {
                name: format!("{name} left x right"),
                ambient,
                regular,
            });
        }
        let mut auts: Vec<Vec<u32>> = automorphisms(&table)?
            .into_iter()
            .filter(|a| a.iter().enumerate().any(|(i, &x)| i as u32 != x))
            .collect();
        if auts.is_empty() {
            continue;
        }
        auts.shuffle(&mut rng);
        for take in [1, 2] {
            let mut gens = regular.clone();
            for a in auts.iter().take(take) {
                gens.push(Permutation::from_images(a.clone())?);
            }
            pairs.push(HarnessPair {
                name: format!("{name} x| A{take}"),
                ambient: PermGroup::generate(n, gens)?,
                regular: regular.clone(),
            });
        }
    }
    Ok(pairs)
}
