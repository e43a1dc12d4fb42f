//! Permutation groups on the branches of a finite-branching solution.
//!
//! A solution with k branches is a degree-k cover of the three-punctured
//! sphere; its monodromy is a pair of permutations ρ₀, ρ₁ ∈ Sₖ (around 0 and
//! 1) with ρ∞ = (ρ₁ρ₀)⁻¹ closing the relation ρ∞ρ₁ρ₀ = 1. This module
//! provides the machinery the classification needs from that picture: cycle
//! types, the Riemann–Hurwitz genus, group orders via a Schreier–Sims
//! stabilizer chain (the orders reach ~10¹³ at degree 72), alternating /
//! symmetric recognition, and simultaneous-conjugacy testing of permutation
//! pairs.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("cannot parse {0:?} as a permutation in cycle notation")]
    Parse(String),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("point {0} appears twice")]
    DuplicatePoint(usize),
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("permutations act on different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("branch data gives non-integral or negative genus ({0}/2)")]
    BadGenus(i64),
}

/// Permutation of {0, …, n−1}, stored as its image list. All textual I/O is
/// 1-indexed cycle notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u32).collect() }
    }

    /// Build from an image list, validating bijectivity.
    pub fn from_images(img: Vec<u32>) -> Result<Perm, PermError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &y in &img {
            let y = y as usize;
            if y >= n || seen[y] {
                return Err(PermError::NotABijection);
            }
            seen[y] = true;
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// Composition acting right-to-left: `(a.compose(&b))(x) = a(b(x))`.
    pub fn compose(&self, b: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), b.degree());
        Perm { img: b.img.iter().map(|&x| self.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y as usize] = x as u32;
        }
        Perm { img }
    }

    /// Cycle type as a partition of the degree (fixed points included).
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    /// Parse 1-indexed cycle notation like `(1 2)(3 4 5)` or `(1,2)(3,4,5)`.
    /// Points up to `degree` that are not mentioned are fixed.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, PermError> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let body = text.trim();
        if body.is_empty() || body == "()" || body == "id" {
            return Ok(Perm { img });
        }
        if !body.starts_with('(') || !body.ends_with(')') {
            return Err(PermError::Parse(text.to_string()));
        }
        for cycle in body[1..body.len() - 1].split(")(") {
            let pts: Vec<usize> = cycle
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| PermError::Parse(text.to_string())))
                .collect::<Result<_, _>>()?;
            if pts.is_empty() {
                continue;
            }
            for &p in &pts {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange(p, degree));
                }
                if used[p - 1] {
                    return Err(PermError::DuplicatePoint(p));
                }
                used[p - 1] = true;
            }
            for w in 0..pts.len() {
                img[pts[w] - 1] = (pts[(w + 1) % pts.len()] - 1) as u32;
            }
        }
        Perm::from_images(img)
    }

    /// 1-indexed cycle notation, fixed points omitted; the identity prints
    /// as `()`.
    pub fn format_cycles(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
                first = false;
                x = self.apply(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}] {}", self.degree(), self.format_cycles())
    }
}

/// Partition of the degree recording the cycle lengths of a permutation,
/// parts descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType(pub Vec<u32>);

impl CycleType {
    /// Number of cycles, fixed points included — the quantity entering
    /// Riemann–Hurwitz.
    pub fn cycle_count(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Build from the non-trivial parts of a partition of `degree`,
    /// padding with fixed points.
    pub fn from_parts(degree: u32, parts: &[u32]) -> CycleType {
        let mut full: Vec<u32> = parts.to_vec();
        let sum: u32 = parts.iter().sum();
        assert!(sum <= degree, "parts exceed degree");
        full.extend(std::iter::repeat(1).take((degree - sum) as usize));
        full.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(full)
    }

    /// Compact form used by the classification table: fixed points are
    /// suppressed, repeated parts collapse to exponents, parts ascending —
    /// e.g. `2^4 3^8 5^8`; an identity permutation prints as `1`.
    pub fn display_compact(&self) -> String {
        let mut asc: Vec<u32> = self.0.iter().copied().filter(|&p| p > 1).collect();
        if asc.is_empty() {
            return "1".to_string();
        }
        asc.sort_unstable();
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < asc.len() {
            let mut j = i;
            while j < asc.len() && asc[j] == asc[i] {
                j += 1;
            }
            let count = j - i;
            if count == 1 {
                pieces.push(format!("{}", asc[i]));
            } else {
                pieces.push(format!("{}^{}", asc[i], count));
            }
            i = j;
        }
        pieces.join(" ")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_compact())
    }
}

/// Riemann–Hurwitz genus of a degree-k cover of ℙ¹ branched over three
/// points with the given local cycle types:
/// g = 1 − k + ½ Σₚ (k − #cycles(ρₚ)).
pub fn genus_rh(degree: usize, types: &[CycleType; 3]) -> Result<i64, PermError> {
    let k = degree as i64;
    // twice = 2g = 2 − 2k + Σₚ (k − cₚ)
    let mut twice = 2 - 2 * k;
    for t in types {
        debug_assert_eq!(t.degree() as i64, k);
        twice += k - t.cycle_count() as i64;
    }
    if twice % 2 != 0 || twice < 0 {
        return Err(PermError::BadGenus(twice));
    }
    Ok(twice / 2)
}

/// Order of ⟨gens⟩ via a Schreier–Sims stabilizer chain. Deterministic and
/// exact; comfortable for degrees ≤ a few hundred.
pub fn group_order(gens: &[Perm]) -> BigUint {
    match StabilizerChain::build(gens) {
        None => BigUint::one(),
        Some(chain) => chain.order(),
    }
}

/// `A{k}` / `S{k}` when the order equals k!/2 or k! at degree k ≥ 3.
pub fn group_label(degree: usize, order: &BigUint) -> Option<String> {
    if degree < 3 {
        return None;
    }
    let full = factorial(degree);
    if order == &full {
        Some(format!("S{degree}"))
    } else if order * 2u32 == full {
        Some(format!("A{degree}"))
    } else {
        None
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Prime factorization by trial division (orders of subgroups of Sₖ only
/// involve primes ≤ k, so this is instant).
pub fn factorize(n: &BigUint) -> Vec<(u64, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while n > BigUint::one() {
        let bp = BigUint::from(p);
        if (&n % &bp) == BigUint::ZERO {
            let mut e = 0u32;
            while (&n % &bp) == BigUint::ZERO {
                n /= &bp;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
        assert!(p <= 1_000_003, "factor too large for trial division");
    }
    out
}

/// Factored form like `2^32·3^4·5·7`.
pub fn format_factored(factors: &[(u64, u32)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("·")
}

/// Simultaneous conjugator: σ with σp₀σ⁻¹ = q₀ and σp₁σ⁻¹ = q₁, if one
/// exists. Backtracking with propagation along both permutations.
pub fn pairs_conjugate(p0: &Perm, p1: &Perm, q0: &Perm, q1: &Perm) -> Option<Perm> {
    let n = p0.degree();
    if p1.degree() != n || q0.degree() != n || q1.degree() != n {
        return None;
    }
    let mut sigma: Vec<Option<u32>> = vec![None; n];
    let mut used: Vec<bool> = vec![false; n];
    if search_conjugator(p0, p1, q0, q1, &mut sigma, &mut used) {
        let img = sigma.into_iter().map(|y| y.unwrap()).collect();
        let s = Perm::from_images(img).ok()?;
        debug_assert_eq!(s.compose(p0).compose(&s.inverse()), *q0);
        debug_assert_eq!(s.compose(p1).compose(&s.inverse()), *q1);
        Some(s)
    } else {
        None
    }
}

fn search_conjugator(
    p0: &Perm,
    p1: &Perm,
    q0: &Perm,
    q1: &Perm,
    sigma: &mut Vec<Option<u32>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = sigma.len();
    let x = match (0..n).find(|&x| sigma[x].is_none()) {
        None => return true,
        Some(x) => x,
    };
    for y in 0..n as u32 {
        if used[y as usize] {
            continue;
        }
        // tentative assignment σ(x) = y; propagate σ∘p = q∘σ for both pairs
        let mut trail: Vec<usize> = Vec::new();
        if assign(p0, p1, q0, q1, sigma, used, &mut trail, x, y)
            && search_conjugator(p0, p1, q0, q1, sigma, used)
        {
            return true;
        }
        for &t in &trail {
            used[sigma[t].unwrap() as usize] = false;
            sigma[t] = None;
        }
    }
    false
}

/// Assign σ(x) = y and propagate through both permutation constraints;
/// records assignments in `trail` so the caller can undo on failure.
fn assign(
    p0: &Perm,
    p1: &Perm,
    q0: &Perm,
    q1: &Perm,
    sigma: &mut Vec<Option<u32>>,
    used: &mut Vec<bool>,
    trail: &mut Vec<usize>,
    x: usize,
    y: u32,
) -> bool {
    let mut queue = vec![(x, y)];
    while let Some((x, y)) = queue.pop() {
        match sigma[x] {
            Some(cur) if cur == y => continue,
            Some(_) => return false,
            None => {
                if used[y as usize] {
                    return false;
                }
                sigma[x] = Some(y);
                used[y as usize] = true;
                trail.push(x);
                queue.push((p0.apply(x), q0.apply(y as usize) as u32));
                queue.push((p1.apply(x), q1.apply(y as usize) as u32));
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Schreier–Sims

struct StabilizerChain {
    degree: usize,
    base: Vec<usize>,
    /// gens[l] generates the stabilizer of base[0..l]; nested by inclusion
    gens: Vec<Vec<Perm>>,
    orbits: Vec<Orbit>,
}

struct Orbit {
    points: Vec<usize>,
    /// transversal[p] = coset representative mapping the base point to p
    transversal: Vec<Option<Perm>>,
}

impl Orbit {
    fn compute(degree: usize, beta: usize, gens: &[Perm]) -> Orbit {
        let mut points = vec![beta];
        let mut transversal = vec![None; degree];
        transversal[beta] = Some(Perm::identity(degree));
        let mut head = 0;
        while head < points.len() {
            let p = points[head];
            head += 1;
            for g in gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    let rep = g.compose(transversal[p].as_ref().unwrap());
                    transversal[q] = Some(rep);
                    points.push(q);
                }
            }
        }
        Orbit { points, transversal }
    }
}

impl StabilizerChain {
    /// Bottom-up deterministic Schreier–Sims: verify levels from the deepest
    /// upwards; every non-trivial sifted Schreier generator is appended as a
    /// strong generator to the levels it stabilizes and verification resumes
    /// at its drop-out level. None when the group is trivial.
    fn build(input: &[Perm]) -> Option<StabilizerChain> {
        let gens0: Vec<Perm> = input.iter().filter(|g| !g.is_identity()).cloned().collect();
        let first = gens0.first()?;
        let degree = first.degree();
        let mut chain = StabilizerChain { degree, base: Vec::new(), gens: Vec::new(), orbits: Vec::new() };
        // seed the base so every generator moves some base point, and
        // distribute each generator to every level whose base prefix it fixes
        for g in &gens0 {
            debug_assert_eq!(g.degree(), degree);
            if chain.base.iter().all(|&b| g.apply(b) == b) {
                let beta = (0..degree).find(|&p| g.apply(p) != p).unwrap();
                chain.base.push(beta);
                chain.gens.push(Vec::new());
            }
        }
        for g in gens0 {
            let stop = chain.fixed_prefix(&g);
            for l in 0..=stop.min(chain.base.len() - 1) {
                chain.gens[l].push(g.clone());
            }
        }
        for l in 0..chain.base.len() {
            chain.orbits.push(Orbit::compute(degree, chain.base[l], &chain.gens[l]));
        }
        // bottom-up verification
        let mut i = chain.base.len() as isize - 1;
        while i >= 0 {
            match chain.verify_level(i as usize) {
                None => i -= 1,
                Some(j) => i = j as isize,
            }
        }
        Some(chain)
    }

    /// Number of leading base points fixed by g.
    fn fixed_prefix(&self, g: &Perm) -> usize {
        self.base.iter().take_while(|&&b| g.apply(b) == b).count()
    }

    fn order(&self) -> BigUint {
        self.orbits.iter().map(|o| BigUint::from(o.points.len())).product()
    }

    /// Strip `g` through levels `start..`; returns the residue and the level
    /// where stripping stopped (== base.len() if fully stripped).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for i in start..self.base.len() {
            let im = g.apply(self.base[i]);
            match &self.orbits[i].transversal[im] {
                None => return (g, i),
                Some(u) => g = u.inverse().compose(&g),
            }
        }
        (g, self.base.len())
    }

    /// Sift all Schreier generators of level i. On the first failure, adjoin
    /// the residue as a strong generator at levels i+1..=j (j its drop-out
    /// level, with a new base point if it fixes the whole base) and return
    /// Some(j); None when the level verifies clean.
    fn verify_level(&mut self, i: usize) -> Option<usize> {
        self.orbits[i] = Orbit::compute(self.degree, self.base[i], &self.gens[i]);
        for pt in 0..self.orbits[i].points.len() {
            let p = self.orbits[i].points[pt];
            for s in 0..self.gens[i].len() {
                let g = &self.gens[i][s];
                let q = g.apply(p);
                let u_p = self.orbits[i].transversal[p].as_ref().unwrap();
                let u_q = self.orbits[i].transversal[q].as_ref().unwrap();
                let schreier = u_q.inverse().compose(&g.compose(u_p));
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip(schreier, i + 1);
                if residue.is_identity() {
                    continue;
                }
                if j == self.base.len() {
                    let beta = (0..self.degree).find(|&p| residue.apply(p) != p).unwrap();
                    self.base.push(beta);
                    self.gens.push(Vec::new());
                    self.orbits.push(Orbit::compute(self.degree, beta, &[]));
                }
                for l in i + 1..=j {
                    self.gens[l].push(residue.clone());
                    self.orbits[l] =
                        Orbit::compute(self.degree, self.base[l], &self.gens[l]);
                }
                return Some(j);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn parse_format_roundtrip() {
        let g = p(6, "(1 2)(3 4 5)");
        assert_eq!(g.format_cycles(), "(1 2)(3 4 5)");
        assert_eq!(Perm::parse_cycles(6, "(1,2)(3,4,5)").unwrap(), g);
        assert_eq!(Perm::identity(4).format_cycles(), "()");
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
        assert!(Perm::parse_cycles(3, "(1 1)").is_err());
    }

    #[test]
    fn compose_acts_right_to_left() {
        let a = p(3, "(1 2)");
        let b = p(3, "(2 3)");
        // (a∘b)(3) = a(2) = 1
        assert_eq!(a.compose(&b).apply(2), 0);
        assert_eq!(a.compose(&a), Perm::identity(3));
        assert_eq!(a.inverse(), a);
    }

    #[test]
    fn cycle_type_and_compact_display() {
        let g = p(9, "(1 2)(3 4 5)(6 7 8)");
        assert_eq!(g.cycle_type().0, vec![3, 3, 2, 1]);
        assert_eq!(g.cycle_type().display_compact(), "2 3^2");
        assert_eq!(Perm::identity(5).cycle_type().display_compact(), "1");
        assert_eq!(CycleType::from_parts(9, &[3, 5]).0, vec![5, 3, 1]);
    }

    #[test]
    fn riemann_hurwitz_values() {
        let t = |parts: &[u32]| CycleType::from_parts(9, parts);
        // degree 9, all three branch permutations of type (3, 5, 1)
        let g = genus_rh(9, &[t(&[3, 5]), t(&[3, 5]), t(&[3, 5])]).unwrap();
        assert_eq!(g, 1);
        let s = |parts: &[u32]| CycleType::from_parts(72, parts);
        let t72 = s(&[2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 5, 5, 5, 5, 5, 5, 5, 5]);
        assert_eq!(genus_rh(72, &[t72.clone(), t72.clone(), t72]).unwrap(), 7);
        // the elliptic curve as a 3-fold cover totally branched over 0, 1, ∞
        let sph = |parts: &[u32]| CycleType::from_parts(3, parts);
        assert_eq!(genus_rh(3, &[sph(&[3]), sph(&[3]), sph(&[3])]).unwrap(), 1);
        // three transpositions at degree 3 would give odd 2g
        assert!(genus_rh(3, &[sph(&[2]), sph(&[2]), sph(&[2])]).is_err());
    }

    #[test]
    fn orders_of_known_groups() {
        // S5 from a transposition and a 5-cycle
        let order = group_order(&[p(5, "(1 2)"), p(5, "(1 2 3 4 5)")]);
        assert_eq!(order, BigUint::from(120u32));
        assert_eq!(group_label(5, &order).as_deref(), Some("S5"));
        // A5 from two 3-cycles
        let order = group_order(&[p(5, "(1 2 3)"), p(5, "(3 4 5)")]);
        assert_eq!(order, BigUint::from(60u32));
        assert_eq!(group_label(5, &order).as_deref(), Some("A5"));
        // cyclic of order 6 on 5 points
        let order = group_order(&[p(5, "(1 2)(3 4 5)")]);
        assert_eq!(order, BigUint::from(6u32));
        assert_eq!(group_label(5, &order), None);
        // trivial
        assert_eq!(group_order(&[Perm::identity(4)]), BigUint::one());
    }

    #[test]
    fn factorization_and_display() {
        let n = BigUint::from(46_448_640u64); // 2^14·3^4·5·7
        let f = factorize(&n);
        assert_eq!(f, vec![(2, 14), (3, 4), (5, 1), (7, 1)]);
        assert_eq!(format_factored(&f), "2^14·3^4·5·7");
        assert_eq!(format_factored(&factorize(&BigUint::one())), "1");
    }

    #[test]
    fn conjugating_pairs() {
        let p0 = p(5, "(1 2 3)");
        let p1 = p(5, "(3 4 5)");
        let s = p(5, "(1 5 4 3 2)");
        let q0 = s.compose(&p0).compose(&s.inverse());
        let q1 = s.compose(&p1).compose(&s.inverse());
        let found = pairs_conjugate(&p0, &p1, &q0, &q1).expect("conjugate pair");
        assert_eq!(found.compose(&p0).compose(&found.inverse()), q0);
        assert_eq!(found.compose(&p1).compose(&found.inverse()), q1);
        // conjugating (3 4 5) to (1 2 4) would have to move the support of
        // (1 2 3), which the first constraint pins down — impossible
        assert!(pairs_conjugate(&p0, &p1, &p0, &p(5, "(1 2 4)")).is_none());
        assert!(pairs_conjugate(&p0, &p1, &p0, &p(5, "(1 2)")).is_none());
    }
}
