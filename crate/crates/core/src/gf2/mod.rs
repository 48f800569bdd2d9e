//! Linear algebra over the two-element field in dimension 4, the 2-subspace
//! action of subgroups of GL(4,2), and the K-conjugacy machinery around the
//! subspace `W = <e1, e2>`.
//!
//! Vectors are rows and matrices act on the right: `v * M` is the XOR of the
//! rows of `M` selected by the coordinates of `v`.

mod scan;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ratio::ExactRatio;

pub use scan::{
    two_generated_scan, ExtremalClass, NonconformingRatio, ScanReport, ScanViolation, COVERAGE_NOTE,
};

/// Order of GL(4,2): 15 * 14 * 12 * 8.
pub const GL42_ORDER: usize = 20160;
/// Number of 2-dimensional subspaces of GF(2)^4.
pub const TWO_SUBSPACE_COUNT: usize = 35;

/// A vector of GF(2)^4; bit `i` is the coordinate on `e_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Gf2Vector(pub u8);

impl Gf2Vector {
    pub const ZERO: Gf2Vector = Gf2Vector(0);

    /// Basis vector `e_i` for `i` in `1..=4`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=4).contains(&i));
        Gf2Vector(1 << (i - 1))
    }

    pub fn all() -> impl Iterator<Item = Gf2Vector> {
        (0u8..16).map(Gf2Vector)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Gf2Vector) -> Gf2Vector {
        Gf2Vector(self.0 ^ other.0)
    }

    pub fn times(self, m: Gf2Matrix) -> Gf2Vector {
        m.apply(self)
    }
}

/// A 4x4 matrix over GF(2); row `i` occupies bits `4i..4i+4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix(pub u16);

impl Gf2Matrix {
    pub const IDENTITY: Gf2Matrix = Gf2Matrix(0x8421);

    /// Rows as printed, entries 0 or 1.
    pub fn from_rows(rows: [[u8; 4]; 4]) -> Self {
        let mut code = 0u16;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x & 1 == 1 {
                    code |= 1 << (4 * i + j);
                }
            }
        }
        Gf2Matrix(code)
    }

    #[inline]
    pub fn row(self, i: usize) -> u8 {
        ((self.0 >> (4 * i)) & 0xf) as u8
    }

    pub fn entry(self, i: usize, j: usize) -> u8 {
        (self.row(i) >> j) & 1
    }

    #[inline]
    pub fn apply(self, v: Gf2Vector) -> Gf2Vector {
        let mut out = 0u8;
        for i in 0..4 {
            if v.0 >> i & 1 == 1 {
                out ^= self.row(i);
            }
        }
        Gf2Vector(out)
    }

    /// `self * other`: act by `self`, then by `other`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Gf2Matrix) -> Gf2Matrix {
        let mut code = 0u16;
        for i in 0..4 {
            code |= (other.apply(Gf2Vector(self.row(i))).0 as u16) << (4 * i);
        }
        Gf2Matrix(code)
    }

    pub fn transpose(self) -> Gf2Matrix {
        let mut code = 0u16;
        for i in 0..4 {
            for j in 0..4 {
                if self.entry(i, j) == 1 {
                    code |= 1 << (4 * j + i);
                }
            }
        }
        Gf2Matrix(code)
    }

    pub fn rank(self) -> usize {
        rank_of((0..4).map(|i| self.row(i)))
    }

    pub fn is_invertible(self) -> bool {
        self.rank() == 4
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(self) -> Option<Gf2Matrix> {
        let mut left: [u8; 4] = [self.row(0), self.row(1), self.row(2), self.row(3)];
        let mut right: [u8; 4] = [1, 2, 4, 8];
        for col in 0..4 {
            let pivot = (col..4).find(|&r| left[r] >> col & 1 == 1)?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            for r in 0..4 {
                if r != col && left[r] >> col & 1 == 1 {
                    left[r] ^= left[col];
                    right[r] ^= right[col];
                }
            }
        }
        let mut code = 0u16;
        for (i, &row) in right.iter().enumerate() {
            code |= (row as u16) << (4 * i);
        }
        Some(Gf2Matrix(code))
    }

    /// `k^-1 * self * k`.
    pub fn conjugate_by(self, k: Gf2Matrix) -> Gf2Matrix {
        k.inverse().expect("conjugator is invertible").mul(self).mul(k)
    }

    pub fn order(self) -> usize {
        let mut x = self;
        let mut k = 1;
        while x != Gf2Matrix::IDENTITY {
            x = x.mul(self);
            k += 1;
            if k > 64 {
                break;
            }
        }
        k
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..4 {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..4 {
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for Gf2Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&format_args!("{self:?}"))
    }
}

fn rank_of(rows: impl IntoIterator<Item = u8>) -> usize {
    let mut basis: Vec<u8> = Vec::new();
    for mut v in rows {
        for &b in &basis {
            let low = b & b.wrapping_neg();
            if v & low != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            // keep basis reduced on pivots
            let low = v & v.wrapping_neg();
            for b in basis.iter_mut() {
                if *b & low != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

/// A subspace of GF(2)^4 held by its reduced row-echelon basis. The pivot of
/// each row is its lowest coordinate; rows are sorted by pivot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Subspace {
    basis: [u8; 4],
    dim: u8,
}

impl fmt::Debug for Gf2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, b) in self.basis().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b:04b}")?;
        }
        write!(f, ">")
    }
}

impl Gf2Subspace {
    pub fn span(vectors: impl IntoIterator<Item = Gf2Vector>) -> Self {
        let mut rows: Vec<u8> = Vec::new();
        for Gf2Vector(mut v) in vectors {
            v &= 0xf;
            for &b in &rows {
                let pivot = b & b.wrapping_neg();
                if v & pivot != 0 {
                    v ^= b;
                }
            }
            if v == 0 {
                continue;
            }
            let pivot = v & v.wrapping_neg();
            for b in rows.iter_mut() {
                if *b & pivot != 0 {
                    *b ^= v;
                }
            }
            rows.push(v);
        }
        rows.sort_by_key(|&b| b & b.wrapping_neg());
        let mut basis = [0u8; 4];
        basis[..rows.len()].copy_from_slice(&rows);
        Self {
            basis,
            dim: rows.len() as u8,
        }
    }

    /// `<e1, e2>`.
    pub fn w() -> Self {
        Self::span([Gf2Vector::basis(1), Gf2Vector::basis(2)])
    }

    pub fn zero() -> Self {
        Self::span([])
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn basis(&self) -> &[u8] {
        &self.basis[..self.dim as usize]
    }

    /// Membership bitmask over the 16 vectors.
    pub fn members(&self) -> u16 {
        let mut mask = 0u16;
        for combo in 0u8..(1 << self.dim) {
            let mut v = 0u8;
            for (i, &b) in self.basis().iter().enumerate() {
                if combo >> i & 1 == 1 {
                    v ^= b;
                }
            }
            mask |= 1 << v;
        }
        mask
    }

    pub fn contains(&self, v: Gf2Vector) -> bool {
        self.members() >> v.0 & 1 == 1
    }

    pub fn contains_subspace(&self, other: &Gf2Subspace) -> bool {
        other.members() & !self.members() == 0
    }

    pub fn image(&self, m: Gf2Matrix) -> Gf2Subspace {
        Gf2Subspace::span(self.basis().iter().map(|&b| m.apply(Gf2Vector(b))))
    }

    pub fn intersection_dim(&self, other: &Gf2Subspace) -> usize {
        (self.members() & other.members()).count_ones().trailing_zeros() as usize
    }

    pub fn vectors(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let members = self.members();
        (0u8..16).filter(move |v| members >> v & 1 == 1).map(Gf2Vector)
    }
}

/// All invertible 4x4 matrices, sorted by code.
pub fn enumerate_gl42() -> Vec<Gf2Matrix> {
    (0..=u16::MAX)
        .map(Gf2Matrix)
        .filter(|m| m.is_invertible())
        .collect()
}

/// All 2-dimensional subspaces, sorted.
pub fn enumerate_2subspaces() -> Vec<Gf2Subspace> {
    let mut set = BTreeSet::new();
    for a in 1u8..16 {
        for b in (a + 1)..16 {
            set.insert(Gf2Subspace::span([Gf2Vector(a), Gf2Vector(b)]));
        }
    }
    set.into_iter().collect()
}

/// Setwise stabilizer `K` of `W` in GL(4,2).
pub fn stabilizer_of_w() -> Vec<Gf2Matrix> {
    let w = Gf2Subspace::w();
    enumerate_gl42()
        .into_iter()
        .filter(|&m| w.image(m) == w)
        .collect()
}

/// `Ok` iff the set is non-empty and closed under products (hence a subgroup
/// of the finite group GL(4,2)).
pub fn check_closed(h: &[Gf2Matrix]) -> Result<()> {
    if h.is_empty() || h.iter().any(|m| !m.is_invertible()) {
        return Err(Error::NotClosed);
    }
    let set: HashSet<Gf2Matrix> = h.iter().copied().collect();
    for &a in &set {
        for &b in &set {
            if !set.contains(&a.mul(b)) {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(())
}

/// Breadth-first closure of a generating set inside GL(4,2).
pub fn close_matrices(gens: &[Gf2Matrix]) -> Vec<Gf2Matrix> {
    let mut seen: HashSet<Gf2Matrix> = HashSet::from([Gf2Matrix::IDENTITY]);
    let mut out = vec![Gf2Matrix::IDENTITY];
    let mut queue = VecDeque::from([Gf2Matrix::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = x.mul(g);
            if seen.insert(y) {
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort();
    out
}

/// Orbit of a subspace under a matrix group given by generators.
pub fn subspace_orbit(start: Gf2Subspace, gens: &[Gf2Matrix]) -> Vec<Gf2Subspace> {
    let mut seen: BTreeSet<Gf2Subspace> = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &g in gens {
            let v = u.image(g);
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Fraction of the orbit `U0^H` meeting `U0` non-trivially, i.e. with
/// `|U0 : U0 ∩ U| <= 2`.
pub fn frame_ratio(orbit: &[Gf2Subspace], base: &Gf2Subspace) -> ExactRatio {
    let base_members = base.members();
    let meeting = orbit
        .iter()
        .filter(|u| (u.members() & base_members) != 1)
        .count();
    ExactRatio::new(meeting as u64, orbit.len() as u64).expect("orbit is non-empty")
}

/// The orbit spans `V` and its members intersect in `0`.
pub fn frame_selected(orbit: &[Gf2Subspace]) -> bool {
    let span = Gf2Subspace::span(orbit.iter().flat_map(|u| u.vectors()));
    let meet = orbit.iter().fold(0xffffu16, |acc, u| acc & u.members());
    span.dim() == 4 && meet == 1
}

/// Ratio of the `H`-orbit of `W` meeting `W` in dimension at least 1.
pub fn orbit_ratio(h: &[Gf2Matrix]) -> Result<ExactRatio> {
    check_closed(h)?;
    let orbit = subspace_orbit(Gf2Subspace::w(), h);
    Ok(frame_ratio(&orbit, &Gf2Subspace::w()))
}

/// `V = <W^h : h in H>` and the intersection of all `W^h` is zero.
pub fn selection_property(h: &[Gf2Matrix]) -> Result<bool> {
    check_closed(h)?;
    Ok(frame_selected(&subspace_orbit(Gf2Subspace::w(), h)))
}

/// `V ⋊ H` acting on the right cosets of `W`, built from generators only so
/// that large `H` stay cheap. Point `4i + j` is the coset `(W^h + v, h)` for
/// `h` the `i`-th element of `H` in sorted order and `v` the `j`-th least
/// representative modulo `W^h`.
#[derive(Clone, Debug)]
pub struct AffineCosetAction {
    pub degree: usize,
    pub h_order: usize,
    /// Translations by `e1..e4`, then the generators of `H`.
    pub generators: Vec<Permutation>,
    /// Translations by a basis of `W`; they generate the stabilizer of `base`.
    pub stabilizer: Vec<Permutation>,
    /// The coset `W` itself.
    pub base: u32,
}

pub fn affine_coset_action(gens: &[Gf2Matrix]) -> Result<AffineCosetAction> {
    if gens.iter().any(|m| !m.is_invertible()) {
        return Err(Error::NotClosed);
    }
    let h = close_matrices(gens);
    let w = Gf2Subspace::w();
    let index: HashMap<Gf2Matrix, usize> = h.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    // Per element of H: the label in 0..4 of each vector modulo W^h.
    let labels: Vec<[u8; 16]> = h
        .iter()
        .map(|&m| {
            let members = w.image(m).members();
            let canon = |v: u8| (0u8..16).filter(|&x| members >> x & 1 == 1).map(|x| x ^ v).min();
            let mut reps: Vec<u8> = (0u8..16).filter_map(canon).collect();
            reps.sort_unstable();
            reps.dedup();
            let mut out = [0u8; 16];
            for v in 0u8..16 {
                let c = canon(v).expect("W^h contains 0");
                out[v as usize] = reps.iter().position(|&r| r == c).expect("listed") as u8;
            }
            out
        })
        .collect();
    // A representative vector for each label.
    let reps: Vec<[u8; 4]> = labels
        .iter()
        .map(|l| {
            let mut r = [0u8; 4];
            for v in (0u8..16).rev() {
                r[l[v as usize] as usize] = v;
            }
            r
        })
        .collect();
    let degree = 4 * h.len();
    let act = |u: u8, k: Gf2Matrix| -> Result<Permutation> {
        let images = (0..degree)
            .map(|p| {
                let (i, j) = (p / 4, p % 4);
                let target = index[&h[i].mul(k)];
                let v = Gf2Vector(reps[i][j]).times(k).0 ^ u;
                (4 * target + labels[target][v as usize] as usize) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    let mut generators = Vec::new();
    for i in 1..=4 {
        generators.push(act(Gf2Vector::basis(i).0, Gf2Matrix::IDENTITY)?);
    }
    for &k in gens {
        generators.push(act(0, k)?);
    }
    let stabilizer = w
        .basis()
        .iter()
        .map(|&b| act(b, Gf2Matrix::IDENTITY))
        .collect::<Result<Vec<_>>>()?;
    let base = 4 * index[&Gf2Matrix::IDENTITY] + labels[index[&Gf2Matrix::IDENTITY]][0] as usize;
    Ok(AffineCosetAction {
        degree,
        h_order: h.len(),
        generators,
        stabilizer,
        base: base as u32,
    })
}

const F21_X: [[u8; 4]; 4] = [[0, 0, 1, 0], [0, 1, 1, 1], [0, 0, 0, 1], [1, 0, 1, 0]];
const F21_Y: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 1, 1, 1], [0, 0, 0, 1], [0, 0, 1, 1]];
const A7_X: [[u8; 4]; 4] = [[0, 1, 1, 1], [1, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]];
const A7_Y: [[u8; 4]; 4] = [[1, 1, 0, 1], [1, 1, 1, 0], [1, 0, 1, 0], [1, 0, 0, 0]];

/// A Frobenius group of order 21 acting on `<e1, e3, e4>` and fixing
/// `e2 + e3`. The `H`-orbit of `W` has 21 members, 13 of which meet `W`.
pub fn f21_generators() -> Vec<Gf2Matrix> {
    vec![Gf2Matrix::from_rows(F21_X), Gf2Matrix::from_rows(F21_Y)]
}

/// A subgroup isomorphic to Alt(7), transitive on all 35 2-subspaces; 19
/// of them meet `W`.
pub fn a7_generators() -> Vec<Gf2Matrix> {
    vec![Gf2Matrix::from_rows(A7_X), Gf2Matrix::from_rows(A7_Y)]
}

/// How the displayed generator matrices are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// Row `i` of the matrix is the image of `e_{i+1}`.
    RowsAsPrinted,
    /// The transpose: column `i` is the image of `e_{i+1}`.
    Transposed,
}

/// The reading under which the displayed generators give groups of orders
/// 12 and 24 with orbit ratio 5/6. The transposed reading yields 1/2.
pub const GENERATOR_READING: Reading = Reading::RowsAsPrinted;

const EXTREMAL_A: [[u8; 4]; 4] = [[0, 0, 0, 1], [1, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]];
const EXTREMAL_B: [[u8; 4]; 4] = [[1, 1, 1, 1], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]];
const EXTREMAL_C: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 1], [1, 1, 1, 0]];

/// Generators of the order-12 and order-24 extremal groups.
pub fn extremal_generators(reading: Reading) -> (Vec<Gf2Matrix>, Vec<Gf2Matrix>) {
    let read = |rows| {
        let m = Gf2Matrix::from_rows(rows);
        match reading {
            Reading::RowsAsPrinted => m,
            Reading::Transposed => m.transpose(),
        }
    };
    let a = read(EXTREMAL_A);
    let b = read(EXTREMAL_B);
    let c = read(EXTREMAL_C);
    (vec![a, b], vec![a, b, c])
}

/// The two extremal subgroups of GL(4,2), closed and sorted: the first has
/// order 12 (isomorphic to Alt(4)), the second order 24 (Sym(4)) and
/// contains the first.
pub fn theorem2_groups() -> (Vec<Gf2Matrix>, Vec<Gf2Matrix>) {
    let (g12, g24) = extremal_generators(GENERATOR_READING);
    let h12 = close_matrices(&g12);
    let h24 = close_matrices(&g24);
    assert_eq!(h12.len(), 12, "order-12 generator transcription");
    assert_eq!(h24.len(), 24, "order-24 generator transcription");
    assert!(h12.iter().all(|m| h24.binary_search(m).is_ok()));
    (h12, h24)
}

/// Sorted conjugate `k^-1 H k`.
pub fn conjugate_group(h: &[Gf2Matrix], k: Gf2Matrix) -> Vec<Gf2Matrix> {
    let ki = k.inverse().expect("conjugator is invertible");
    let mut out: Vec<Gf2Matrix> = h.iter().map(|&x| ki.mul(x).mul(k)).collect();
    out.sort();
    out
}

/// Some `k` in `K` with `H1^k = H2`, found by exhaustive search.
pub fn k_conjugate(h1: &[Gf2Matrix], h2: &[Gf2Matrix]) -> Result<Option<Gf2Matrix>> {
    check_closed(h1)?;
    check_closed(h2)?;
    k_conjugate_with(&stabilizer_of_w(), h1, h2)
}

pub(crate) fn k_conjugate_with(
    k: &[Gf2Matrix],
    h1: &[Gf2Matrix],
    h2: &[Gf2Matrix],
) -> Result<Option<Gf2Matrix>> {
    let mut target = h2.to_vec();
    target.sort();
    target.dedup();
    let mut source = h1.to_vec();
    source.sort();
    source.dedup();
    if source.len() != target.len() {
        return Ok(None);
    }
    if source == target {
        return Ok(Some(Gf2Matrix::IDENTITY));
    }
    Ok(k.iter()
        .copied()
        .find(|&x| conjugate_group(&source, x) == target))
}

/// Lexicographically least `K`-conjugate of `H`; equal keys mean
/// `K`-conjugate groups.
pub fn k_canonical_form(k: &[Gf2Matrix], h: &[Gf2Matrix]) -> Vec<Gf2Matrix> {
    k.iter()
        .map(|&x| conjugate_group(h, x))
        .min()
        .expect("K is non-empty")
}
