//! The binary icosahedral group Γ ⊂ SU(2) and its generating triples.
//!
//! Γ is the preimage of the rotation group A₅ of the icosahedron under the
//! double cover SU(2) → SO(3): 120 unit quaternions with coordinates in
//! ½ℤ[φ]. This module builds Γ by closing two explicit generators, stores it
//! as an index-based multiplication table, and enumerates the conjugation
//! invariants of all triples (M₁, M₂, M₃) ∈ Γ³ that generate Γ.
//!
//! A triple is recorded by its *seven-tuple* of traces
//! m = (m₁, m₂, m₃, m₄, m₁₂, m₂₃, m₁₃), where M₄ = (M₃M₂M₁)⁻¹ and
//! mᵢⱼ = Tr(MᵢMⱼ). Two generating triples have the same seven-tuple exactly
//! when they are conjugate in SU(2), so the census of 120³ triples collapses
//! to the 1 601 280 generating ones and then to 26 688 distinct seven-tuples
//! — the finite set on which the braid group acts.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{rat, A5Class, ExactError, GoldenNum, Quat, TRACE_TABLE};

/// |Γ| = 120.
pub const ORDER: usize = 120;

/// Number of ordered generating triples of Γ (Hall's formula at n = 3).
pub const GENERATING_TRIPLES: u64 = 1_601_280;

/// Number of distinct seven-tuples of generating triples.
pub const SEVEN_TUPLES: usize = 26_688;

/// Largest order of a proper subgroup of Γ. Γ/{±1} ≅ A₅ is simple, so a
/// subgroup of order > 60 surjects onto A₅ and contains −1, hence is all of
/// Γ; in fact the maximal proper subgroups (binary tetrahedral, binary
/// dihedral) have order ≤ 24. The subgroup-closure scans bail out as soon as
/// this bound is exceeded.
const MAX_PROPER_SUBGROUP: usize = 60;

#[derive(Debug, Error)]
pub enum IcosaError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("group closure produced {found} elements, expected {expected}")]
    CountMismatch { expected: usize, found: usize },
    #[error("matrix tuple {0:?} violates the product relation M4·M3·M2·M1 = 1")]
    BadTuple([u8; 4]),
}

/// The standard generating pair of Γ:
/// g₁ = (−1 + 𝐢 + 𝐣 + 𝐤)/2 (order 6) and g₂ = (𝐢 + σ𝐣 + τ𝐤)/2 (order 4),
/// with σ = (√5 − 1)/2 and τ = (√5 + 1)/2.
pub fn generator_pair() -> (Quat, Quat) {
    let half = GoldenNum::new(rat(1, 2), rat(0, 1));
    let g1 = Quat::new(-half.clone(), half.clone(), half.clone(), half.clone());
    let g2 = Quat::new(
        GoldenNum::zero(),
        half,
        GoldenNum::new(rat(-1, 4), rat(1, 4)), // σ/2
        GoldenNum::new(rat(1, 4), rat(1, 4)),  // τ/2
    );
    (g1, g2)
}

/// Γ as explicit data: elements in a fixed discovery order (identity first,
/// then breadth-first products of the generators), an index-level
/// multiplication table, inverses, traces, and A₅ class labels.
pub struct GroupTable {
    elements: Vec<Quat>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    trace: Vec<GoldenNum>,
    trace_code: Vec<u8>,
    a5: Vec<A5Class>,
    hash: u64,
}

impl GroupTable {
    /// Close the generator pair into the full group and precompute all
    /// tables. Deterministic: the element order depends only on the
    /// generators and the breadth-first strategy.
    pub fn build() -> Result<GroupTable, IcosaError> {
        let (g1, g2) = generator_pair();
        debug_assert!(g1.is_unit() && g2.is_unit());
        let gens = [g1, g2];

        let mut elements = vec![Quat::one()];
        let mut index: HashMap<Quat, u8> = HashMap::new();
        index.insert(Quat::one(), 0);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for g in &gens {
                let p = &cur * g;
                if !index.contains_key(&p) {
                    if elements.len() >= ORDER + 1 {
                        return Err(IcosaError::CountMismatch {
                            expected: ORDER,
                            found: elements.len(),
                        });
                    }
                    index.insert(p.clone(), elements.len() as u8);
                    elements.push(p);
                }
            }
        }
        if elements.len() != ORDER {
            return Err(IcosaError::CountMismatch { expected: ORDER, found: elements.len() });
        }

        let mut mul = vec![0u8; ORDER * ORDER];
        for a in 0..ORDER {
            for b in 0..ORDER {
                let p = &elements[a] * &elements[b];
                mul[a * ORDER + b] = *index.get(&p).ok_or(IcosaError::CountMismatch {
                    expected: ORDER,
                    found: ORDER + 1,
                })?;
            }
        }
        let mut inv = vec![0u8; ORDER];
        for a in 0..ORDER {
            let q = elements[a].conj(); // unit quaternion: inverse = conjugate
            inv[a] = index[&q];
        }

        let mut trace = Vec::with_capacity(ORDER);
        let mut trace_code = vec![0u8; ORDER];
        let mut a5 = Vec::with_capacity(ORDER);
        for (i, e) in elements.iter().enumerate() {
            let t = e.trace();
            let code = TRACE_TABLE
                .iter()
                .position(|(_, tr)| tr == &t)
                .ok_or_else(|| ExactError::NotIcosahedralTrace(t.to_string()))?;
            trace_code[i] = code as u8;
            a5.push(A5Class::from_trace(&t)?);
            trace.push(t);
        }

        let mut hash = 0xcbf2_9ce4_8422_2325u64; // FNV-1a over the element list
        for e in &elements {
            for part in [&e.w, &e.x, &e.y, &e.z] {
                for byte in part.serialize().bytes() {
                    hash ^= byte as u64;
                    hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
                }
            }
        }

        Ok(GroupTable { elements, mul, inv, trace, trace_code, a5, hash })
    }

    /// Index of the identity element.
    pub const IDENTITY: u8 = 0;

    pub fn element(&self, i: u8) -> &Quat {
        &self.elements[i as usize]
    }

    /// Index of the product `elements[a] · elements[b]`.
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * ORDER + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn trace(&self, a: u8) -> &GoldenNum {
        &self.trace[a as usize]
    }

    /// Position of `trace(a)` in [`TRACE_TABLE`] (0..9).
    #[inline]
    pub fn trace_code(&self, a: u8) -> u8 {
        self.trace_code[a as usize]
    }

    pub fn a5_class(&self, a: u8) -> A5Class {
        self.a5[a as usize]
    }

    /// Content hash of the element list (and hence of every derived table);
    /// used to invalidate the on-disk seven-tuple cache.
    pub fn hash(&self) -> u64 {
        self.hash
    }

    /// Conjugacy classes as sorted element-index lists, ordered by
    /// (size, smallest member). Γ has nine; the trace is constant on each
    /// class and distinguishes them.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u8>> {
        let mut seen = vec![false; ORDER];
        let mut classes = Vec::new();
        for a in 0..ORDER as u8 {
            if seen[a as usize] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..ORDER as u8 {
                let c = self.mul(self.mul(g, a), self.inv(g));
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    /// Order of the subgroup generated by the given element indices,
    /// stopping (and reporting `None`) as soon as it exceeds `cap`.
    fn closure_order_capped(&self, seed: &Closure, extra: u8, cap: usize) -> Option<usize> {
        let mut bits = seed.bits;
        let mut queue: Vec<u8> = seed.list.clone();
        let mut count = seed.list.len();
        if !bit_get(&bits, extra) {
            bit_set(&mut bits, extra);
            queue.push(extra);
            count += 1;
        }
        let gens = [seed.gens[0], seed.gens[1], extra];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let p = self.mul(x, g);
                if !bit_get(&bits, p) {
                    bit_set(&mut bits, p);
                    queue.push(p);
                    count += 1;
                    if count > cap {
                        return None;
                    }
                }
            }
        }
        Some(count)
    }

    /// Subgroup generated by two elements, as an explicit closure.
    fn closure2(&self, i1: u8, i2: u8) -> Closure {
        let mut bits = [0u64; 2];
        let mut list = vec![Self::IDENTITY];
        bit_set(&mut bits, Self::IDENTITY);
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in &[i1, i2] {
                let p = self.mul(x, g);
                if !bit_get(&bits, p) {
                    bit_set(&mut bits, p);
                    list.push(p);
                }
            }
        }
        Closure { gens: [i1, i2], bits, list }
    }

    /// Does the triple of element indices generate all of Γ?
    pub fn generates(&self, i1: u8, i2: u8, i3: u8) -> bool {
        let pair = self.closure2(i1, i2);
        if pair.list.len() == ORDER {
            return true;
        }
        if bit_get(&pair.bits, i3) {
            return false;
        }
        self.closure_order_capped(&pair, i3, MAX_PROPER_SUBGROUP).is_none()
    }

    /// Orders of all subgroups generated by pairs of elements — the census
    /// behind the early-exit bound in the triple scan.
    pub fn two_generated_subgroup_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..ORDER as u8)
            .flat_map(|i1| (0..ORDER as u8).map(move |i2| (i1, i2)))
            .map(|(i1, i2)| self.closure2(i1, i2).list.len())
            .collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }
}

/// A two-generated subgroup, kept around so triple scans can extend it.
struct Closure {
    gens: [u8; 2],
    bits: [u64; 2],
    list: Vec<u8>,
}

#[inline]
fn bit_get(bits: &[u64; 2], i: u8) -> bool {
    bits[(i >> 6) as usize] & (1u64 << (i & 63)) != 0
}

#[inline]
fn bit_set(bits: &mut [u64; 2], i: u8) {
    bits[(i >> 6) as usize] |= 1u64 << (i & 63);
}

/// Hall's count of ordered n-tuples generating Γ, by Möbius inversion over
/// the subgroup lattice: 120ⁿ − 5·24ⁿ − 6·20ⁿ − 10·12ⁿ + 20·6ⁿ + 60·4ⁿ − 60·2ⁿ.
pub fn hall_count(n: u32) -> u128 {
    let p = |b: i128| b.pow(n);
    let total = p(120) - 5 * p(24) - 6 * p(20) - 10 * p(12) + 20 * p(6) + 60 * p(4) - 60 * p(2);
    debug_assert!(total >= 0);
    total as u128
}

/// A generating triple in index form, extended by M₄ = (M₃M₂M₁)⁻¹ so that
/// M₄M₃M₂M₁ = 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MatTuple4(pub [u8; 4]);

impl MatTuple4 {
    /// Extend a triple of element indices by the fourth matrix.
    pub fn from_triple(t: &GroupTable, i1: u8, i2: u8, i3: u8) -> MatTuple4 {
        let i4 = t.inv(t.mul(t.mul(i3, i2), i1));
        MatTuple4([i1, i2, i3, i4])
    }

    /// Check the product relation M₄M₃M₂M₁ = 1.
    pub fn validate(&self, t: &GroupTable) -> Result<(), IcosaError> {
        let [i1, i2, i3, i4] = self.0;
        let prod = t.mul(t.mul(t.mul(i4, i3), i2), i1);
        if prod == GroupTable::IDENTITY {
            Ok(())
        } else {
            Err(IcosaError::BadTuple(self.0))
        }
    }
}

/// The conjugation invariant of a matrix tuple: traces
/// (m₁, m₂, m₃, m₄, m₁₂, m₂₃, m₁₃), each one of the nine icosahedral trace
/// values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MTuple(pub [GoldenNum; 7]);

impl MTuple {
    /// Compact form: the position of each entry in [`TRACE_TABLE`].
    pub fn code(&self) -> Result<[u8; 7], ExactError> {
        let mut out = [0u8; 7];
        for (slot, value) in out.iter_mut().zip(self.0.iter()) {
            *slot = TRACE_TABLE
                .iter()
                .position(|(_, tr)| tr == value)
                .ok_or_else(|| ExactError::NotIcosahedralTrace(value.to_string()))?
                as u8;
        }
        Ok(out)
    }

    pub fn from_code(code: &[u8; 7]) -> MTuple {
        MTuple(std::array::from_fn(|k| TRACE_TABLE[code[k] as usize].1.clone()))
    }

    /// Cache line form: seven serialized golden numbers joined by `;`.
    pub fn serialize(&self) -> String {
        self.0.iter().map(GoldenNum::serialize).collect::<Vec<_>>().join(";")
    }

    pub fn parse(line: &str) -> Result<MTuple, ExactError> {
        let parts: Vec<&str> = line.split(';').collect();
        if parts.len() != 7 {
            return Err(ExactError::Parse(line.to_string(), "seven-tuple"));
        }
        let mut vals = Vec::with_capacity(7);
        for p in parts {
            vals.push(GoldenNum::parse(p)?);
        }
        Ok(MTuple(vals.try_into().map_err(|_| {
            ExactError::Parse(line.to_string(), "seven-tuple")
        })?))
    }
}

impl fmt::Display for MTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Traces of a matrix tuple.
pub fn seven_tuple(t: &GroupTable, m: &MatTuple4) -> MTuple {
    let [i1, i2, i3, i4] = m.0;
    let tr = |i: u8| t.trace(i).clone();
    MTuple([
        tr(i1),
        tr(i2),
        tr(i3),
        tr(i4),
        tr(t.mul(i1, i2)),
        tr(t.mul(i2, i3)),
        tr(t.mul(i1, i3)),
    ])
}

/// The deduplicated census of generating triples: every seven-tuple in a
/// fixed canonical order (lexicographic in compact code), one representative
/// matrix tuple each, and the raw triple count.
pub struct SSet {
    tuples: Vec<[u8; 7]>,
    reps: Vec<MatTuple4>,
    index: HashMap<[u8; 7], u32>,
    raw_triples: u64,
}

impl SSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Ordered generating triples counted before deduplication.
    pub fn raw_triples(&self) -> u64 {
        self.raw_triples
    }

    /// Seven-tuple at a census position.
    pub fn tuple(&self, i: u32) -> MTuple {
        MTuple::from_code(&self.tuples[i as usize])
    }

    pub fn code(&self, i: u32) -> &[u8; 7] {
        &self.tuples[i as usize]
    }

    /// Representative matrix tuple whose seven-tuple sits at position `i`.
    pub fn rep(&self, i: u32) -> MatTuple4 {
        self.reps[i as usize]
    }

    /// Census position of a seven-tuple, if it belongs to a generating
    /// triple.
    pub fn position(&self, m: &MTuple) -> Option<u32> {
        let code = m.code().ok()?;
        self.position_of_code(&code)
    }

    #[inline]
    pub fn position_of_code(&self, code: &[u8; 7]) -> Option<u32> {
        self.index.get(code).copied()
    }

    /// Rebuild a census from parsed tuples and representatives (cache load).
    /// The entries must already be in canonical order.
    pub(crate) fn from_parts(
        tuples: Vec<[u8; 7]>,
        reps: Vec<MatTuple4>,
        raw_triples: u64,
    ) -> SSet {
        let index =
            tuples.iter().enumerate().map(|(i, c)| (*c, i as u32)).collect::<HashMap<_, _>>();
        SSet { tuples, reps, index, raw_triples }
    }
}

/// Scan all 120³ triples, keep the generating ones, and deduplicate their
/// seven-tuples. The scan is parallel over the first index; the result is
/// canonical (sorted codes, lexicographically smallest representative per
/// tuple), so it does not depend on the number of threads.
pub fn enumerate_s(t: &GroupTable) -> SSet {
    let per_i1: Vec<(u64, HashMap<[u8; 7], [u8; 3]>)> = (0..ORDER as u8)
        .into_par_iter()
        .map(|i1| {
            let mut map: HashMap<[u8; 7], [u8; 3]> = HashMap::new();
            let mut raw = 0u64;
            for i2 in 0..ORDER as u8 {
                let pair = t.closure2(i1, i2);
                let pair_full = pair.list.len() == ORDER;
                for i3 in 0..ORDER as u8 {
                    let generates = if pair_full {
                        true
                    } else if bit_get(&pair.bits, i3) {
                        false
                    } else {
                        t.closure_order_capped(&pair, i3, MAX_PROPER_SUBGROUP).is_none()
                    };
                    if !generates {
                        continue;
                    }
                    raw += 1;
                    let i4 = t.inv(t.mul(t.mul(i3, i2), i1));
                    let code = [
                        t.trace_code(i1),
                        t.trace_code(i2),
                        t.trace_code(i3),
                        t.trace_code(i4),
                        t.trace_code(t.mul(i1, i2)),
                        t.trace_code(t.mul(i2, i3)),
                        t.trace_code(t.mul(i1, i3)),
                    ];
                    let rep = [i1, i2, i3];
                    map.entry(code)
                        .and_modify(|r| {
                            if rep < *r {
                                *r = rep;
                            }
                        })
                        .or_insert(rep);
                }
            }
            (raw, map)
        })
        .collect();

    let mut merged: HashMap<[u8; 7], [u8; 3]> = HashMap::new();
    let mut raw_triples = 0u64;
    for (raw, map) in per_i1 {
        raw_triples += raw;
        for (code, rep) in map {
            merged
                .entry(code)
                .and_modify(|r| {
                    if rep < *r {
                        *r = rep;
                    }
                })
                .or_insert(rep);
        }
    }

    let mut entries: Vec<([u8; 7], [u8; 3])> = merged.into_iter().collect();
    entries.sort_unstable();
    let mut tuples = Vec::with_capacity(entries.len());
    let mut reps = Vec::with_capacity(entries.len());
    let mut index = HashMap::with_capacity(entries.len());
    for (pos, (code, rep)) in entries.into_iter().enumerate() {
        tuples.push(code);
        reps.push(MatTuple4::from_triple(t, rep[0], rep[1], rep[2]));
        index.insert(code, pos as u32);
    }
    SSet { tuples, reps, index, raw_triples }
}
