//! Braid-group and sign actions on seven-tuples of traces.
//!
//! Deforming the pole position t of the Fuchsian system permutes its linear
//! monodromy data: the three-string braid group acts on tuples
//! (M₁, M₂, M₃, M₄) by
//!
//!   ωᵢ : (Mᵢ, Mᵢ₊₁) ↦ (Mᵢ₊₁, Mᵢ₊₁MᵢMᵢ₊₁⁻¹),   i = 1, 2, 3,
//!
//! fixing the other slots and the relation M₄M₃M₂M₁ = 1. On the invariant
//! seven-tuple m = (m₁, m₂, m₃, m₄, m₁₂, m₂₃, m₁₃) the action closes into
//! polynomial maps. Together with the even sign group Σ ≅ (ℤ/2)³ (twists by
//! −1 in pairs of slots) these generate the geometric equivalence: two
//! tuples yield equivalent algebraic solutions exactly when they lie in one
//! orbit. This module realises the generators both on tuples and — as an
//! independent oracle — on matrix quadruples, builds the permutation action
//! on the full census, extracts its orbits, and computes branch data: the
//! orbit of a tuple under the pure braids ⟨ω₁², ω₂²⟩ is the set of branches
//! of the corresponding solution y(t), with monodromy ρ₀ = ω₁², ρ₁ = ω₂²,
//! ρ∞ = (ρ₁ρ₀)⁻¹ feeding Riemann–Hurwitz.

use thiserror::Error;

use crate::exact::GoldenNum;
use crate::icosa::{GroupTable, MTuple, MatTuple4, SSet};
use crate::permg::{genus_rh, group_order, CycleType, Perm, PermError};
use num_bigint::BigUint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("sign vector {0:?} must have entries ±1 with product +1")]
    BadSignVector([i8; 4]),
    #[error("braid generator index {0} out of range 1..=3")]
    BadGenerator(usize),
    #[error("image of census tuple {0} under {1} left the census")]
    TupleNotInCensus(u32, &'static str),
    #[error("{0} does not act bijectively on the census")]
    NotAPermutation(&'static str),
}

/// Even sign vector ε ∈ {±1}⁴ with ε₁ε₂ε₃ε₄ = +1; acts on a seven-tuple by
/// mᵢ ↦ εᵢmᵢ, m₁₂ ↦ ε₁ε₂m₁₂, m₂₃ ↦ ε₂ε₃m₂₃, m₁₃ ↦ ε₁ε₃m₁₃. Evenness is
/// what keeps the matrix relation M₄M₃M₂M₁ = 1 intact when each Mᵢ is
/// replaced by εᵢMᵢ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignVec {
    eps: [i8; 4],
}

impl SignVec {
    pub fn new(eps: [i8; 4]) -> Result<SignVec, BraidError> {
        let ok = eps.iter().all(|&e| e == 1 || e == -1)
            && eps.iter().map(|&e| e as i32).product::<i32>() == 1;
        if ok {
            Ok(SignVec { eps })
        } else {
            Err(BraidError::BadSignVector(eps))
        }
    }

    /// Three involutions generating all 8 even sign vectors.
    pub fn generators() -> [SignVec; 3] {
        [
            SignVec { eps: [-1, -1, 1, 1] },
            SignVec { eps: [1, -1, -1, 1] },
            SignVec { eps: [1, 1, -1, -1] },
        ]
    }

    pub fn eps(&self) -> [i8; 4] {
        self.eps
    }

    pub fn act(&self, m: &MTuple) -> MTuple {
        let e = |i: usize| self.eps[i] as i64;
        let scale = |v: &GoldenNum, s: i64| if s == 1 { v.clone() } else { -v };
        MTuple([
            scale(&m.0[0], e(0)),
            scale(&m.0[1], e(1)),
            scale(&m.0[2], e(2)),
            scale(&m.0[3], e(3)),
            scale(&m.0[4], e(0) * e(1)),
            scale(&m.0[5], e(1) * e(2)),
            scale(&m.0[6], e(0) * e(2)),
        ])
    }
}

/// Braid generator ωᵢ (i = 1, 2, 3) on seven-tuples. The first four slots
/// swap slots i, i+1; of the pair traces only one moves, by the quadratic
/// trace identity in the remaining coordinates.
pub fn omega_tuple(i: usize, m: &MTuple) -> Result<MTuple, BraidError> {
    let [m1, m2, m3, m4, m12, m23, m13] = &m.0;
    let out = match i {
        1 => [
            m2.clone(),
            m1.clone(),
            m3.clone(),
            m4.clone(),
            m12.clone(),
            &(&(m2 * m4) + &(m1 * m3)) - &(m13 + &(m12 * m23)),
            m23.clone(),
        ],
        2 => [
            m1.clone(),
            m3.clone(),
            m2.clone(),
            m4.clone(),
            m13.clone(),
            m23.clone(),
            &(&(m3 * m4) + &(m1 * m2)) - &(m12 + &(m23 * m13)),
        ],
        3 => [
            m1.clone(),
            m2.clone(),
            m4.clone(),
            m3.clone(),
            m12.clone(),
            &(&(m2 * m4) + &(m1 * m3)) - &(m13 + &(m12 * m23)),
            m23.clone(),
        ],
        _ => return Err(BraidError::BadGenerator(i)),
    };
    Ok(MTuple(out))
}

/// The same generator on matrix quadruples (indices into the group table):
/// ωᵢ swaps slots i, i+1 sending (Mᵢ, Mᵢ₊₁) ↦ (Mᵢ₊₁, Mᵢ₊₁MᵢMᵢ₊₁⁻¹). This is
/// the authoritative form of the action; `omega_tuple` must match it
/// through `seven_tuple`.
pub fn omega_matrix(i: usize, t: &GroupTable, m: &MatTuple4) -> Result<MatTuple4, BraidError> {
    let [a, b, c, d] = m.0;
    let conj = |x: u8, y: u8| t.mul(t.mul(x, y), t.inv(x));
    let out = match i {
        1 => [b, conj(b, a), c, d],
        2 => [a, c, conj(c, b), d],
        3 => [a, b, d, conj(d, c)],
        _ => return Err(BraidError::BadGenerator(i)),
    };
    Ok(MatTuple4(out))
}

/// The braid and sign generators realised as permutations of the census.
pub struct BraidAction<'a> {
    census: &'a SSet,
    omega: [Vec<u32>; 3],
    omega_inv: [Vec<u32>; 3],
    sign: [Vec<u32>; 3],
}

impl<'a> BraidAction<'a> {
    /// Tabulate ω₁, ω₂, ω₃ and the three sign generators on every census
    /// tuple. Every image must land back in the census and every map must
    /// be a bijection — both are verified, which is itself the proof that
    /// the census is closed under the geometric equivalence.
    pub fn build(census: &'a SSet) -> Result<BraidAction<'a>, BraidError> {
        let n = census.len() as u32;
        let mut omega: [Vec<u32>; 3] = Default::default();
        let mut sign: [Vec<u32>; 3] = Default::default();
        let sign_gens = SignVec::generators();
        for i in 0..3 {
            omega[i] = Vec::with_capacity(n as usize);
            sign[i] = Vec::with_capacity(n as usize);
        }
        for pos in 0..n {
            let m = census.tuple(pos);
            for i in 0..3 {
                let im = omega_tuple(i + 1, &m).expect("generator index in range");
                let target = census
                    .position(&im)
                    .ok_or(BraidError::TupleNotInCensus(pos, OMEGA_NAMES[i]))?;
                omega[i].push(target);
                let im = sign_gens[i].act(&m);
                let target = census
                    .position(&im)
                    .ok_or(BraidError::TupleNotInCensus(pos, SIGN_NAMES[i]))?;
                sign[i].push(target);
            }
        }
        let mut omega_inv: [Vec<u32>; 3] = Default::default();
        for i in 0..3 {
            omega_inv[i] = invert(&omega[i]).ok_or(BraidError::NotAPermutation(OMEGA_NAMES[i]))?;
            if invert(&sign[i]).is_none() {
                return Err(BraidError::NotAPermutation(SIGN_NAMES[i]));
            }
        }
        Ok(BraidAction { census, omega, omega_inv, sign })
    }

    pub fn census(&self) -> &SSet {
        self.census
    }

    /// ωᵢ as a census permutation, i ∈ 1..=3.
    pub fn omega(&self, i: usize, pos: u32) -> u32 {
        self.omega[i - 1][pos as usize]
    }

    pub fn omega_inv(&self, i: usize, pos: u32) -> u32 {
        self.omega_inv[i - 1][pos as usize]
    }

    /// j-th sign generator (j ∈ 0..3) as a census permutation.
    pub fn sign_gen(&self, j: usize, pos: u32) -> u32 {
        self.sign[j][pos as usize]
    }

    /// Orbits of ⟨ω₁^±, ω₂^±, ω₃^±, Σ⟩ on the census. Orbit ids are
    /// assigned in increasing order of smallest member, so the result is
    /// deterministic.
    pub fn geometric_orbits(&self) -> Orbits {
        let n = self.census.len();
        const UNSEEN: u32 = u32::MAX;
        let mut orbit_id = vec![UNSEEN; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        let mut queue: Vec<u32> = Vec::new();
        for start in 0..n as u32 {
            if orbit_id[start as usize] != UNSEEN {
                continue;
            }
            let id = members.len() as u32;
            let mut orbit = vec![start];
            orbit_id[start as usize] = id;
            queue.clear();
            queue.push(start);
            while let Some(p) = queue.pop() {
                let images = [
                    self.omega[0][p as usize],
                    self.omega[1][p as usize],
                    self.omega[2][p as usize],
                    self.omega_inv[0][p as usize],
                    self.omega_inv[1][p as usize],
                    self.omega_inv[2][p as usize],
                    self.sign[0][p as usize],
                    self.sign[1][p as usize],
                    self.sign[2][p as usize],
                ];
                for q in images {
                    if orbit_id[q as usize] == UNSEEN {
                        orbit_id[q as usize] = id;
                        orbit.push(q);
                        queue.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        Orbits { orbit_id, members }
    }

    /// Orbit of `base` under the pure braids ⟨ω₁², ω₂²⟩ in breadth-first
    /// discovery order (base first). This is the set of branches of the
    /// algebraic solution attached to `base`.
    pub fn f2_orbit(&self, base: u32) -> Vec<u32> {
        let step = |gen: &Vec<u32>, p: u32| gen[gen[p as usize] as usize];
        let mut order = vec![base];
        let mut seen = std::collections::HashSet::new();
        seen.insert(base);
        let mut head = 0;
        while head < order.len() {
            let p = order[head];
            head += 1;
            for gen in [&self.omega[0], &self.omega[1]] {
                let q = step(gen, p);
                if seen.insert(q) {
                    order.push(q);
                }
            }
        }
        order
    }

    /// Branch data of the solution containing `base`: the pure-braid orbit
    /// together with the monodromy ρ₀ = ω₁², ρ₁ = ω₂², ρ∞ = (ρ₁ρ₀)⁻¹ as
    /// permutations of the branches.
    pub fn branch_data(&self, base: u32) -> BranchData {
        let points = self.f2_orbit(base);
        let mut index = std::collections::HashMap::new();
        for (j, &p) in points.iter().enumerate() {
            index.insert(p, j as u32);
        }
        let perm_of = |gen: &Vec<u32>| {
            let img = points
                .iter()
                .map(|&p| index[&gen[gen[p as usize] as usize]])
                .collect();
            Perm::from_images(img).expect("pure braid permutes the orbit")
        };
        let rho0 = perm_of(&self.omega[0]);
        let rho1 = perm_of(&self.omega[1]);
        let rho_inf = rho1.compose(&rho0).inverse();
        BranchData { points, rho0, rho1, rho_inf }
    }
}

/// Partition of the census into geometric orbits.
pub struct Orbits {
    /// census position → orbit id
    pub orbit_id: Vec<u32>,
    /// orbit id → sorted member positions
    pub members: Vec<Vec<u32>>,
}

impl Orbits {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn size(&self, id: u32) -> usize {
        self.members[id as usize].len()
    }
}

/// Branches of one algebraic solution with the permutations describing how
/// they braid around t = 0, 1, ∞.
pub struct BranchData {
    /// census positions of the branches, base point first
    pub points: Vec<u32>,
    pub rho0: Perm,
    pub rho1: Perm,
    pub rho_inf: Perm,
}

impl BranchData {
    /// Number of branches = degree of y(t) over ℚ(t).
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn cycle_types(&self) -> [CycleType; 3] {
        [self.rho0.cycle_type(), self.rho1.cycle_type(), self.rho_inf.cycle_type()]
    }

    /// Genus of the solution curve by Riemann–Hurwitz over the t-line.
    pub fn genus(&self) -> Result<i64, PermError> {
        genus_rh(self.degree(), &self.cycle_types())
    }

    /// Order of the monodromy group ⟨ρ₀, ρ₁⟩ ≤ S_degree.
    pub fn monodromy_order(&self) -> BigUint {
        group_order(&[self.rho0.clone(), self.rho1.clone()])
    }
}

const OMEGA_NAMES: [&str; 3] = ["ω1", "ω2", "ω3"];
const SIGN_NAMES: [&str; 3] = ["sign generator 1", "sign generator 2", "sign generator 3"];

/// Inverse of an image table, or None if it is not a bijection.
fn invert(img: &[u32]) -> Option<Vec<u32>> {
    let n = img.len();
    let mut inv = vec![u32::MAX; n];
    for (x, &y) in img.iter().enumerate() {
        if (y as usize) >= n || inv[y as usize] != u32::MAX {
            return None;
        }
        inv[y as usize] = x as u32;
    }
    Some(inv)
}
