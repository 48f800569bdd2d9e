//! Scan of the subgroups of GL(4,2) generated by two elements.
//!
//! Pairs `(c, g)` run over conjugacy-class representatives `c` and all
//! elements `g`. Only one `g` per set `{c^i g^±1 c^j}` is closed, since they
//! all generate the same subgroup together with `c`. The orbit ratio is
//! relative to `W` and only `K`-invariant, so every distinct subgroup `H` is
//! evaluated against each of the 35 2-subspaces `U` as base: the pair
//! `(H, U)` stands for the conjugate of `H` that moves `U` onto `W`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{
    conjugate_group, enumerate_2subspaces, enumerate_gl42, k_canonical_form, stabilizer_of_w,
    theorem2_groups, Gf2Matrix, Gf2Subspace, Gf2Vector, GL42_ORDER,
};
use crate::ratio::ExactRatio;
use crate::suborbit::conjecture_form_check;

pub const COVERAGE_NOTE: &str = "coverage: subgroups of GL(4,2) generated by at most two \
elements only; subgroups needing three or more generators are not examined";

/// Any subgroup with more than half the elements is the whole group.
const LAGRANGE_BOUND: usize = GL42_ORDER / 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanViolation {
    pub order: usize,
    pub base: String,
    pub ratio: ExactRatio,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalClass {
    pub order: usize,
    /// `"H12"` or `"H24"` when the class matches one of the displayed groups.
    pub matches: Option<String>,
    /// Number of (subgroup, base subspace) pairs falling in the class.
    pub frames: usize,
}

/// A selected frame ratio above 1/2 that is not `(q + 1) / 2q` with `2q`
/// a positive integer. Each frame `(H, U)` is the transitive group `V ⋊ H`
/// on the cosets of `U`, of degree `4|H|`, whose suborbit ratio is the frame
/// ratio, so these are counterexamples to that form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonconformingRatio {
    pub ratio: ExactRatio,
    pub q: ExactRatio,
    pub frames: usize,
    /// Smallest `|H|` seen with this ratio, and one base for it.
    pub order: usize,
    pub degree: usize,
    pub base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    /// Generator pairs closed.
    pub scanned: usize,
    pub distinct_subgroups: usize,
    /// (subgroup, base) pairs that pass the selection filter.
    pub selected: usize,
    /// Ratio histogram over selected pairs.
    pub histogram: BTreeMap<String, usize>,
    pub max_ratio_below_one: Option<ExactRatio>,
    pub violations: Vec<ScanViolation>,
    pub extremal_classes: Vec<ExtremalClass>,
    pub nonconforming: Vec<NonconformingRatio>,
    pub orbit_stabilizer_failures: usize,
    pub coverage: String,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.orbit_stabilizer_failures == 0
            && self.extremal_classes.len() == 2
            && self.extremal_classes.iter().all(|c| c.matches.is_some())
    }
}

/// Right-multiplication lookup for one matrix: image of each row vector.
#[derive(Clone, Copy)]
struct RowTable([u8; 16]);

impl RowTable {
    fn new(m: Gf2Matrix) -> Self {
        let mut t = [0u8; 16];
        for (v, slot) in t.iter_mut().enumerate() {
            *slot = m.apply(Gf2Vector(v as u8)).0;
        }
        Self(t)
    }

    #[inline]
    fn right_mul(&self, x: u16) -> u16 {
        let t = &self.0;
        (t[(x & 0xf) as usize] as u16)
            | (t[(x >> 4 & 0xf) as usize] as u16) << 4
            | (t[(x >> 8 & 0xf) as usize] as u16) << 8
            | (t[(x >> 12 & 0xf) as usize] as u16) << 12
    }
}

/// Reusable closure workspace over the 65536 matrix codes.
struct Closer {
    seen: Vec<u64>,
    list: Vec<u16>,
}

enum Closed {
    Whole,
    Proper,
}

impl Closer {
    fn new() -> Self {
        Self {
            seen: vec![0; 1 << 10],
            list: Vec::with_capacity(LAGRANGE_BOUND + 2),
        }
    }

    fn reset(&mut self) {
        for &x in &self.list {
            self.seen[(x >> 6) as usize] = 0;
        }
        self.list.clear();
    }

    #[inline]
    fn insert(&mut self, x: u16) -> bool {
        let (w, b) = ((x >> 6) as usize, x & 63);
        if self.seen[w] >> b & 1 == 1 {
            false
        } else {
            self.seen[w] |= 1 << b;
            self.list.push(x);
            true
        }
    }

    fn close(&mut self, gens: &[RowTable]) -> Closed {
        self.reset();
        self.insert(Gf2Matrix::IDENTITY.0);
        let mut head = 0;
        while head < self.list.len() {
            let x = self.list[head];
            head += 1;
            for g in gens {
                let y = g.right_mul(x);
                if self.insert(y) && self.list.len() > LAGRANGE_BOUND {
                    return Closed::Whole;
                }
            }
        }
        Closed::Proper
    }

    fn sorted_elements(&self) -> Vec<Gf2Matrix> {
        let mut v: Vec<Gf2Matrix> = self.list.iter().map(|&x| Gf2Matrix(x)).collect();
        v.sort();
        v
    }
}

fn element_hash(sorted: &[Gf2Matrix]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    for m in sorted {
        hasher.update(m.0.to_le_bytes());
    }
    hasher.finalize().into()
}

/// Minimal code in each conjugacy class of GL(4,2).
pub fn class_representatives(gl: &[Gf2Matrix]) -> Vec<Gf2Matrix> {
    let inverses: Vec<Gf2Matrix> = gl.iter().map(|m| m.inverse().expect("invertible")).collect();
    let mut assigned = vec![false; 1 << 16];
    let mut reps = Vec::new();
    for &x in gl {
        if assigned[x.0 as usize] {
            continue;
        }
        reps.push(x);
        for (k, ki) in gl.iter().zip(&inverses) {
            assigned[ki.mul(x).mul(*k).0 as usize] = true;
        }
    }
    reps
}

fn subspace_image(members: u16, g: &RowTable) -> u16 {
    let mut out = 0u16;
    for v in 0..16 {
        if members >> v & 1 == 1 {
            out |= 1 << g.0[v];
        }
    }
    out
}

/// Orbit of a subspace (as a membership mask) under generator tables.
fn mask_orbit(start: u16, gens: &[RowTable]) -> Vec<u16> {
    let mut orbit = vec![start];
    let mut head = 0;
    while head < orbit.len() {
        let u = orbit[head];
        head += 1;
        for g in gens {
            let v = subspace_image(u, g);
            if !orbit.contains(&v) {
                orbit.push(v);
            }
        }
    }
    orbit
}

fn span_dim(masks: &[u16]) -> usize {
    let all = masks.iter().fold(0u16, |acc, m| acc | m);
    Gf2Subspace::span((0u8..16).filter(|v| all >> v & 1 == 1).map(Gf2Vector)).dim()
}

/// Runs the scan. Deterministic: every loop follows code order.
pub fn two_generated_scan() -> ScanReport {
    let gl = enumerate_gl42();
    let k = stabilizer_of_w();
    let reps = class_representatives(&gl);
    let subspaces = enumerate_2subspaces();
    let w = Gf2Subspace::w();

    // A conjugator taking each base subspace onto W.
    let mut to_w: HashMap<u16, Gf2Matrix> = HashMap::new();
    for &y in &gl {
        for u in &subspaces {
            if !to_w.contains_key(&u.members()) && u.image(y) == w {
                to_w.insert(u.members(), y);
            }
        }
        if to_w.len() == subspaces.len() {
            break;
        }
    }

    let (h12, h24) = theorem2_groups();
    let key12 = k_canonical_form(&k, &h12);
    let key24 = k_canonical_form(&k, &h24);

    let mut closer = Closer::new();
    let mut seen_hashes: HashMap<[u8; 32], ()> = HashMap::new();
    let mut scanned = 0usize;
    let mut selected = 0usize;
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    let mut max_below_one: Option<ExactRatio> = None;
    let mut violations = Vec::new();
    let mut classes: BTreeMap<Vec<Gf2Matrix>, (usize, usize)> = BTreeMap::new();
    let mut key_cache: HashMap<[u8; 32], Vec<Gf2Matrix>> = HashMap::new();
    let mut orbit_stabilizer_failures = 0usize;
    let five_sixths = ExactRatio::new(5, 6).expect("nonzero");
    let mut whole_group_seen = false;
    let mut nonconforming: BTreeMap<ExactRatio, NonconformingRatio> = BTreeMap::new();

    for &c in &reps {
        let c_powers: Vec<Gf2Matrix> = {
            let mut p = vec![Gf2Matrix::IDENTITY];
            let mut x = c;
            while x != Gf2Matrix::IDENTITY {
                p.push(x);
                x = x.mul(c);
            }
            p
        };
        let c_table = RowTable::new(c);
        for &g in &gl {
            // Skip g unless it is the least code in its <c>-double coset
            // (with inverses), all of which give the same subgroup.
            let gi = g.inverse().expect("invertible");
            let is_least = c_powers.iter().all(|&a| {
                c_powers.iter().all(|&b| {
                    let x = a.mul(g).mul(b);
                    let y = a.mul(gi).mul(b);
                    x >= g && y >= g
                })
            });
            if !is_least {
                continue;
            }
            scanned += 1;
            let gens = [c_table, RowTable::new(g)];
            let elements = match closer.close(&gens) {
                Closed::Whole => {
                    if whole_group_seen {
                        continue;
                    }
                    whole_group_seen = true;
                    gl.clone()
                }
                Closed::Proper => closer.sorted_elements(),
            };
            let hash = element_hash(&elements);
            if seen_hashes.insert(hash, ()).is_some() {
                continue;
            }

            // Orbit-stabilizer at W.
            let w_orbit = mask_orbit(w.members(), &gens);
            let stab = elements.iter().filter(|m| w.image(**m) == w).count();
            if w_orbit.len() * stab != elements.len() {
                orbit_stabilizer_failures += 1;
            }

            for base in &subspaces {
                let b = base.members();
                let orbit = mask_orbit(b, &gens);
                let meet = orbit.iter().fold(0xffffu16, |acc, m| acc & m);
                if meet != 1 || span_dim(&orbit) != 4 {
                    continue;
                }
                selected += 1;
                let meeting = orbit.iter().filter(|&&u| u & b != 1).count();
                let ratio =
                    ExactRatio::new(meeting as u64, orbit.len() as u64).expect("orbit non-empty");
                *histogram.entry(ratio.to_string()).or_insert(0) += 1;
                let form = conjecture_form_check(ratio);
                if let (false, Some(q)) = (form.conforms, form.q) {
                    let entry = nonconforming.entry(ratio).or_insert_with(|| NonconformingRatio {
                        ratio,
                        q,
                        frames: 0,
                        order: elements.len(),
                        degree: 4 * elements.len(),
                        base: format!("{base:?}"),
                    });
                    entry.frames += 1;
                    if elements.len() < entry.order {
                        entry.order = elements.len();
                        entry.degree = 4 * elements.len();
                        entry.base = format!("{base:?}");
                    }
                }
                if ratio < ExactRatio::one() {
                    max_below_one = Some(max_below_one.map_or(ratio, |m| m.max(ratio)));
                }
                if ratio.strictly_between(five_sixths, ExactRatio::one()) {
                    violations.push(ScanViolation {
                        order: elements.len(),
                        base: format!("{base:?}"),
                        ratio,
                        reason: "ratio strictly between 5/6 and 1".into(),
                    });
                }
                if ratio == five_sixths {
                    let moved = conjugate_group(&elements, to_w[&b]);
                    let moved_hash = element_hash(&moved);
                    let key = key_cache
                        .entry(moved_hash)
                        .or_insert_with(|| k_canonical_form(&k, &moved))
                        .clone();
                    let entry = classes.entry(key).or_insert((elements.len(), 0));
                    entry.1 += 1;
                }
            }
        }
    }

    let extremal_classes: Vec<ExtremalClass> = classes
        .into_iter()
        .map(|(key, (order, frames))| {
            let matches = if key == key12 {
                Some("H12".to_string())
            } else if key == key24 {
                Some("H24".to_string())
            } else {
                None
            };
            ExtremalClass {
                order,
                matches,
                frames,
            }
        })
        .collect();
    for class in &extremal_classes {
        if class.matches.is_none() {
            violations.push(ScanViolation {
                order: class.order,
                base: format!("{:?}", w),
                ratio: five_sixths,
                reason: "ratio 5/6 subgroup not K-conjugate to either displayed group".into(),
            });
        }
    }

    ScanReport {
        scanned,
        distinct_subgroups: seen_hashes.len(),
        selected,
        histogram,
        max_ratio_below_one: max_below_one,
        violations,
        extremal_classes,
        nonconforming: nonconforming.into_values().collect(),
        orbit_stabilizer_failures,
        coverage: COVERAGE_NOTE.to_string(),
    }
}
