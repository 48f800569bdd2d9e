//! The four families of 2-groups whose squares all lie in a central
//! subgroup of order 2, and the quadratic-form test that tells them apart.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    brute_isomorphic, central_product_indexed, cyclic, dihedral, direct_product,
    elementary_abelian, generalized_dicyclic, GroupTable, ISOMORPHISM_ORDER_LIMIT,
};

/// Chain length and number of extra `C2` factors accepted by the builders.
pub const FAMILY_PARAMETER_LIMIT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormFamily {
    /// `D8 ∘ ... ∘ D8 × C2^ℓ` with `t` factors.
    D8Chain,
    /// `Q8 ∘ D8 ∘ ... ∘ D8 × C2^ℓ` with `t - 1` copies of `D8`.
    Q8Chain,
    /// `C4 ∘ D8 ∘ ... ∘ D8 × C2^ℓ` with `t` copies of `D8`.
    C4Chain,
    /// `C4 × C2^ℓ`.
    C4C2,
}

impl FormFamily {
    pub fn name(self) -> &'static str {
        match self {
            FormFamily::D8Chain => "d8chain",
            FormFamily::Q8Chain => "q8chain",
            FormFamily::C4Chain => "c4chain",
            FormFamily::C4C2 => "c4c2",
        }
    }
}

fn central_involution(table: &GroupTable) -> u32 {
    table
        .elements()
        .find(|&x| table.is_involution(x) && table.is_central(x))
        .expect("factor has a central involution")
}

/// Builds a member of a family together with its distinguished central
/// involution `r`.
pub fn build_family(family: FormFamily, t: usize, l: usize) -> Result<(GroupTable, u32)> {
    if t > FAMILY_PARAMETER_LIMIT || l > FAMILY_PARAMETER_LIMIT {
        return Err(Error::BadConstructorInput(format!(
            "parameters t = {t}, l = {l} exceed the limit {FAMILY_PARAMETER_LIMIT}"
        )));
    }
    if (family == FormFamily::C4C2) != (t == 0) {
        return Err(Error::BadConstructorInput(format!(
            "{} does not take t = {t}",
            family.name()
        )));
    }
    let d8 = dihedral(8)?;
    let c4 = cyclic(4)?;
    let (mut table, mut r, extra_d8) = match family {
        FormFamily::D8Chain => (d8.clone(), central_involution(&d8), t - 1),
        FormFamily::Q8Chain => {
            let q8 = generalized_dicyclic(&c4, 2)?;
            let z = central_involution(&q8);
            (q8, z, t - 1)
        }
        FormFamily::C4Chain => (c4.clone(), 2, t),
        FormFamily::C4C2 => (c4.clone(), 2, 0),
    };
    let zd = central_involution(&d8);
    for _ in 0..extra_d8 {
        let (next, rep_index) = central_product_indexed(&table, &d8, r, zd)?;
        r = rep_index[r as usize];
        table = next;
    }
    if l > 0 {
        // The first factor keeps its indices in a direct product.
        table = direct_product(&table, &elementary_abelian(l)?);
    }
    Ok((table, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SSetReport {
    pub family: FormFamily,
    pub t: usize,
    pub l: usize,
    pub order: usize,
    /// `|{x : x^2 = r}|`.
    pub s_size: usize,
    pub expected: usize,
    pub holds: bool,
}

/// A group with a distinguished central involution `r`, for `τ` with
/// `U = <r>`.
#[derive(Clone, Debug)]
pub struct TauInstance {
    pub name: String,
    pub table: GroupTable,
    pub r: u32,
}

/// `C6`, `C4`, `Q8`, then every family member with `t, ℓ <= 3`. These
/// include `D8 ∘ D8`, `C4 ∘ D8`, `Q8 × C2^ℓ` and `C4 × C2^ℓ`.
pub fn tau_instances() -> Result<Vec<TauInstance>> {
    let c6 = cyclic(6)?;
    let c4 = cyclic(4)?;
    let q8 = generalized_dicyclic(&c4, 2)?;
    let mut out = vec![
        TauInstance { name: "C6".into(), r: 3, table: c6 },
        TauInstance { name: "C4".into(), r: 2, table: c4 },
        TauInstance { name: "Q8".into(), r: central_involution(&q8), table: q8 },
    ];
    for family in [FormFamily::D8Chain, FormFamily::Q8Chain, FormFamily::C4Chain, FormFamily::C4C2] {
        let ts = if family == FormFamily::C4C2 { 0..=0 } else { 1..=FAMILY_PARAMETER_LIMIT };
        for t in ts {
            for l in 0..=FAMILY_PARAMETER_LIMIT {
                let (table, r) = build_family(family, t, l)?;
                let name = if family == FormFamily::C4C2 {
                    format!("{}({l})", family.name())
                } else {
                    format!("{}({t},{l})", family.name())
                };
                out.push(TauInstance { name, table, r });
            }
        }
    }
    Ok(out)
}

/// Counts the square roots of `r` and compares with the closed forms
/// `(2^t - 1)|R|/2^(t+1)`, `(2^t + 1)|R|/2^(t+1)` and `|R|/2`.
pub fn s_set_formula_check(t: usize, l: usize, family: FormFamily) -> Result<SSetReport> {
    let (table, r) = build_family(family, t, l)?;
    let order = table.order();
    let s_size = table.elements().filter(|&x| table.mul(x, x) == r).count();
    let expected = match family {
        FormFamily::D8Chain => (((1 << t) - 1) * order) >> (t + 1),
        FormFamily::Q8Chain => (((1 << t) + 1) * order) >> (t + 1),
        FormFamily::C4Chain | FormFamily::C4C2 => order / 2,
    };
    Ok(SSetReport {
        family,
        t,
        l,
        order,
        s_size,
        expected,
        holds: s_size == expected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticClass {
    pub family: FormFamily,
    pub t: usize,
    pub l: usize,
    /// Dimension of `R/<r>` over GF(2).
    pub dimension: usize,
    pub radical_dimension: usize,
    /// Number of `v` with `q(v) = 0`.
    pub singular: usize,
    /// Result of the isomorphism cross-check, when the order allows it.
    pub isomorphism_checked: Option<bool>,
}

/// Coordinates on `R/<r>`.
struct Quotient {
    dim: usize,
    /// Vector to one element of its coset.
    lift: Vec<u32>,
}

fn quotient_coordinates(table: &GroupTable, r: u32) -> Result<Quotient> {
    let n = table.order();
    let mut coords = vec![u32::MAX; n];
    let mut lift = vec![0u32];
    coords[0] = 0;
    coords[r as usize] = 0;
    let mut dim = 0;
    while lift.len() * 2 < n {
        let g = table
            .elements()
            .find(|&x| coords[x as usize] == u32::MAX)
            .expect("a coset outside the span exists");
        let bit = 1u32 << dim;
        let old = lift.len();
        for v in 0..old {
            let x = table.mul(lift[v], g);
            lift.push(x);
            for y in [x, table.mul(x, r)] {
                if coords[y as usize] != u32::MAX {
                    return Err(Error::NotExtraspecialShape(
                        "quotient by <r> is not elementary abelian".into(),
                    ));
                }
                coords[y as usize] = v as u32 | bit;
            }
        }
        dim += 1;
    }
    // The labelling is a homomorphism only if the quotient is elementary abelian.
    for x in table.elements() {
        for y in table.elements() {
            if coords[table.mul(x, y) as usize] != coords[x as usize] ^ coords[y as usize] {
                return Err(Error::NotExtraspecialShape(
                    "quotient by <r> is not elementary abelian".into(),
                ));
            }
        }
    }
    Ok(Quotient { dim, lift })
}

/// Classifies `R` by the quadratic form `q(x<r>) = x^2` on `R/<r>` and its
/// polarization, the commutator form.
pub fn quadratic_form_classify(table: &GroupTable, r: u32) -> Result<QuadraticClass> {
    if r as usize >= table.order() || !table.is_involution(r) || !table.is_central(r) {
        return Err(Error::NotExtraspecialShape(format!(
            "{r} is not a central involution"
        )));
    }
    if let Some(x) = table.elements().find(|&x| {
        let sq = table.mul(x, x);
        sq != 0 && sq != r
    }) {
        return Err(Error::NotExtraspecialShape(format!(
            "the square of {x} lies outside <r>"
        )));
    }
    let quot = quotient_coordinates(table, r)?;
    let size = 1usize << quot.dim;
    let q: Vec<bool> = quot
        .lift
        .iter()
        .map(|&x| table.mul(x, x) == r)
        .collect();
    let b = |u: usize, v: usize| table.commutator(quot.lift[u], quot.lift[v]) == r;
    for u in 0..size {
        for v in 0..size {
            if (q[u ^ v] ^ q[u] ^ q[v]) != b(u, v) {
                return Err(Error::Invariant(format!(
                    "polarization fails at ({u:b}, {v:b})"
                )));
            }
        }
    }
    let radical: Vec<usize> = (0..size)
        .filter(|&u| (0..quot.dim).all(|i| !b(u, 1 << i)))
        .collect();
    let rho = radical.len().trailing_zeros() as usize;
    let k = (quot.dim - rho) / 2;
    let singular = q.iter().filter(|&&s| !s).count();
    let q_on_radical = radical.iter().any(|&u| q[u]);
    let (family, t, l) = if q_on_radical {
        if k == 0 {
            (FormFamily::C4C2, 0, rho - 1)
        } else {
            (FormFamily::C4Chain, k, rho - 1)
        }
    } else if k == 0 {
        return Err(Error::NotExtraspecialShape(
            "the group is elementary abelian".into(),
        ));
    } else {
        // Singular vectors number 2^ρ (2^(2k-1) ± 2^(k-1)); the sign is the
        // type of the nondegenerate part.
        let plus = (1usize << rho) * ((1 << (2 * k - 1)) + (1 << (k - 1)));
        if singular == plus {
            (FormFamily::D8Chain, k, rho)
        } else {
            (FormFamily::Q8Chain, k, rho)
        }
    };
    let isomorphism_checked = if table.order() <= ISOMORPHISM_ORDER_LIMIT {
        let (model, _) = build_family(family, t, l)?;
        let iso = brute_isomorphic(table, &model)?;
        if !iso {
            return Err(Error::Invariant(format!(
                "form says {} t = {t}, l = {l} but the group is not isomorphic to it",
                family.name()
            )));
        }
        Some(true)
    } else {
        None
    };
    Ok(QuadraticClass {
        family,
        t,
        l,
        dimension: quot.dim,
        radical_dimension: rho,
        singular,
        isomorphism_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_set_examples() {
        let d8 = s_set_formula_check(1, 0, FormFamily::D8Chain).unwrap();
        assert_eq!((d8.order, d8.s_size, d8.expected), (8, 2, 2));
        let q8 = s_set_formula_check(1, 0, FormFamily::Q8Chain).unwrap();
        assert_eq!((q8.order, q8.s_size), (8, 6));
        let d8d8 = s_set_formula_check(2, 0, FormFamily::D8Chain).unwrap();
        assert_eq!((d8d8.order, d8d8.s_size), (32, 12));
    }

    #[test]
    fn s_set_all_small_parameters() {
        for family in [FormFamily::D8Chain, FormFamily::Q8Chain, FormFamily::C4Chain] {
            for t in 1..=2 {
                for l in 0..=2 {
                    let rep = s_set_formula_check(t, l, family).unwrap();
                    assert!(rep.holds, "{rep:?}");
                }
            }
        }
        for l in 0..=3 {
            assert!(s_set_formula_check(0, l, FormFamily::C4C2).unwrap().holds);
        }
        assert!(matches!(
            s_set_formula_check(0, 0, FormFamily::D8Chain),
            Err(Error::BadConstructorInput(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let c4 = cyclic(4).unwrap();
        let out = quadratic_form_classify(&c4, 2).unwrap();
        assert_eq!((out.family, out.t, out.l), (FormFamily::C4C2, 0, 0));

        let (q8, r) = build_family(FormFamily::Q8Chain, 1, 0).unwrap();
        let out = quadratic_form_classify(&q8, r).unwrap();
        assert_eq!((out.family, out.t, out.l), (FormFamily::Q8Chain, 1, 0));

        let (d8c2, r) = build_family(FormFamily::D8Chain, 1, 1).unwrap();
        let out = quadratic_form_classify(&d8c2, r).unwrap();
        assert_eq!((out.family, out.t, out.l), (FormFamily::D8Chain, 1, 1));
        assert_eq!(out.radical_dimension, 1);
        assert_eq!(out.isomorphism_checked, Some(true));
    }

    #[test]
    fn classify_round_trips() {
        for family in [FormFamily::D8Chain, FormFamily::Q8Chain, FormFamily::C4Chain, FormFamily::C4C2] {
            for t in 0..=2 {
                for l in 0..=2 {
                    let Ok((table, r)) = build_family(family, t, l) else { continue };
                    let out = quadratic_form_classify(&table, r).unwrap();
                    assert_eq!((out.family, out.t, out.l), (family, t, l));
                }
            }
        }
    }

    #[test]
    fn rejects_other_shapes() {
        let c8 = cyclic(8).unwrap();
        assert!(matches!(
            quadratic_form_classify(&c8, 4),
            Err(Error::NotExtraspecialShape(_))
        ));
        let e = elementary_abelian(3).unwrap();
        assert!(matches!(
            quadratic_form_classify(&e, 1),
            Err(Error::NotExtraspecialShape(_))
        ));
    }
}
