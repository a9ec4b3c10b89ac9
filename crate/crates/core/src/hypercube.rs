//! Hypercube combinatorics: vertex subsets, boundary edges, cubals, the
//! Type indicator, and the closed-form edge-isoperimetric values.
//!
//! Conventions: a vertex of Q_n is an n-bit word u = u_1…u_n with u_1 the
//! most significant bit, so coordinate j corresponds to the bit mask
//! `1 << (n - j)`. Vertices are stored as their numeric value in 0..2^n.

use std::fmt;

use crate::error::{Error, Result};

/// Largest dimension for which dense vertex subsets are supported (2^n bits).
pub const MAX_SUBSET_DIM: u32 = 20;
/// Largest dimension accepted by the formula-only paths.
pub const MAX_FORMULA_DIM: u32 = 40;

/// A vertex of the hypercube Q_n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex {
    n: u32,
    bits: u32,
}

impl CubeVertex {
    pub fn new(n: u32, bits: u32) -> Result<Self> {
        if n == 0 || n > MAX_SUBSET_DIM {
            return Err(Error::Dimension {
                n,
                min: 1,
                max: MAX_SUBSET_DIM,
            });
        }
        if u64::from(bits) >= 1u64 << n {
            return Err(Error::Cardinality {
                n,
                k: u64::from(bits),
                max: (1u64 << n) - 1,
            });
        }
        Ok(CubeVertex { n, bits })
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Coordinate u_j for 1-based j (u_1 is the most significant bit).
    pub fn coordinate(&self, j: u32) -> bool {
        debug_assert!(j >= 1 && j <= self.n);
        self.bits >> (self.n - j) & 1 == 1
    }

    /// The neighbor differing in coordinate j.
    pub fn flip(&self, j: u32) -> CubeVertex {
        debug_assert!(j >= 1 && j <= self.n);
        CubeVertex {
            n: self.n,
            bits: self.bits ^ (1 << (self.n - j)),
        }
    }

    pub fn neighbors(&self) -> impl Iterator<Item = CubeVertex> + '_ {
        (1..=self.n).map(move |j| self.flip(j))
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.n {
            write!(f, "{}", u8::from(self.coordinate(j)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubeVertex({self})")
    }
}

/// A subset of V(Q_n), stored as a dense bitmap over vertex values.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSubset {
    n: u32,
    words: Vec<u64>,
    len: u64,
}

impl VertexSubset {
    pub fn empty(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_SUBSET_DIM {
            return Err(Error::Dimension {
                n,
                min: 1,
                max: MAX_SUBSET_DIM,
            });
        }
        let verts = 1u64 << n;
        let words = vec![0u64; verts.div_ceil(64) as usize];
        Ok(VertexSubset { n, words, len: 0 })
    }

    pub fn full(n: u32) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in 0..1u32 << n {
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_values(n: u32, values: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in values {
            if u64::from(v) >= 1u64 << n {
                return Err(Error::Cardinality {
                    n,
                    k: u64::from(v),
                    max: (1u64 << n) - 1,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!(u64::from(v) < 1u64 << self.n);
        let w = &mut self.words[(v / 64) as usize];
        let bit = 1u64 << (v % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
        }
    }

    pub fn remove(&mut self, v: u32) {
        let w = &mut self.words[(v / 64) as usize];
        let bit = 1u64 << (v % 64);
        if *w & bit != 0 {
            *w &= !bit;
            self.len -= 1;
        }
    }

    pub fn complement(&self) -> VertexSubset {
        let mut out = self.clone();
        let total = 1u64 << self.n;
        for v in 0..total as u32 {
            if self.contains(v) {
                out.remove(v);
            } else {
                out.insert(v);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..1u32 << self.n).filter(|&v| self.contains(v))
    }

    /// θ(n, S): the number of hypercube edges with exactly one endpoint in S.
    ///
    /// Each boundary edge is counted once, from its endpoint inside S.
    pub fn boundary_theta(&self) -> u64 {
        let mut count = 0u64;
        for v in self.iter() {
            for j in 0..self.n {
                if !self.contains(v ^ (1 << j)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// |E(S)|: the number of hypercube edges with both endpoints in S.
    pub fn internal_edges(&self) -> u64 {
        let mut count = 0u64;
        for v in self.iter() {
            for j in 0..self.n {
                let u = v ^ (1 << j);
                if u > v && self.contains(u) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Type(S): the minimum of |S ∩ H| over the 2n half-planes H of Q_n
    /// (each half-plane fixes one coordinate to 0 or 1).
    pub fn type_of(&self) -> u64 {
        let mut counts = vec![0u64; 2 * self.n as usize];
        for v in self.iter() {
            for j in 0..self.n {
                let side = (v >> j & 1) as usize;
                counts[2 * j as usize + side] += 1;
            }
        }
        counts.into_iter().min().unwrap_or(0)
    }

    /// True iff S attains θ(n, |S|), which characterizes cubals.
    pub fn is_min_boundary(&self) -> bool {
        self.boundary_theta() == theta_min(self.n, self.len).expect("|S| <= 2^n")
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSubset(n={}, {{", self.n)?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:0width$b}", v, width = self.n as usize)?;
        }
        write!(f, "}})")
    }
}

/// E(k): the maximum number of internal edges of a k-subset of a hypercube,
/// attained by cubals. With k = Σ 2^{c_i} for c_1 < … < c_N,
/// E(k) = Σ_i ((N − i)·2^{c_i} + c_i·2^{c_i − 1}).
pub fn cubal_edge_count(k: u64) -> u64 {
    let n_terms = u64::from(k.count_ones());
    let mut total = 0u64;
    let mut i = 0u64;
    for c in 0..64u64 {
        if k >> c & 1 == 1 {
            i += 1;
            total += (n_terms - i) << c;
            if c > 0 {
                total += c << (c - 1);
            }
        }
    }
    total
}

/// θ(n, k) = n·k − 2E(k): the minimum boundary over all k-subsets of Q_n.
pub fn theta_min(n: u32, k: u64) -> Result<u64> {
    if n > MAX_FORMULA_DIM {
        return Err(Error::Dimension {
            n,
            min: 0,
            max: MAX_FORMULA_DIM,
        });
    }
    if k > 1u64 << n {
        return Err(Error::Cardinality {
            n,
            k,
            max: 1u64 << n,
        });
    }
    Ok(u64::from(n) * k - 2 * cubal_edge_count(k))
}

/// The canonical cubal of size k in Q_n: the first k vertices in numeric
/// order, which realize the nested-subcube structure.
pub fn make_cubal(n: u32, k: u64) -> Result<VertexSubset> {
    if k > 1u64 << n {
        return Err(Error::Cardinality {
            n,
            k,
            max: 1u64 << n,
        });
    }
    VertexSubset::from_values(n, 0..k as u32)
}

/// θ(n, 2^{n-1}, t) for small type t: 2θ(n−2, t) + 2^{n-1}.
///
/// Defined for 2t ≤ 2^{n-2}; larger t is big type and only admits the
/// lower bound [`theta_type_lower_bound`].
pub fn theta_small_type(n: u32, t: u64) -> Result<u64> {
    if !(2..=MAX_FORMULA_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: MAX_FORMULA_DIM,
        });
    }
    if 2 * t > 1u64 << (n - 2) {
        return Err(Error::TypeValue {
            n,
            t,
            max: (1u64 << (n - 2)) / 2,
        });
    }
    Ok(2 * theta_min(n - 2, t)? + (1u64 << (n - 1)))
}

/// A lower bound on θ(n, 2^{n-1}, t), exact for small type: the type is
/// clamped to 2^{n-3} before evaluating the small-type formula.
pub fn theta_type_lower_bound(n: u32, t: u64) -> Result<u64> {
    if !(2..=MAX_FORMULA_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: MAX_FORMULA_DIM,
        });
    }
    let cap = (1u64 << (n - 2)) / 2;
    theta_small_type(n, t.min(cap))
}

/// A θ query: dimension, cardinality, and an optional type constraint.
///
/// The type constraint is only meaningful at half cardinality k = 2^{n-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaProfile {
    pub n: u32,
    pub k: u64,
    pub type_value: Option<u64>,
}

impl ThetaProfile {
    pub fn new(n: u32, k: u64, type_value: Option<u64>) -> Result<Self> {
        if k > 1u64 << n {
            return Err(Error::Cardinality {
                n,
                k,
                max: 1u64 << n,
            });
        }
        if let Some(t) = type_value {
            if n < 2 || k != 1u64 << (n - 1) {
                return Err(Error::Host {
                    n1: n,
                    n2: 0,
                    reason: "type constraint requires k = 2^(n-1)",
                });
            }
            if t > 1u64 << (n - 2) {
                return Err(Error::TypeValue {
                    n,
                    t,
                    max: 1u64 << (n - 2),
                });
            }
        }
        Ok(ThetaProfile { n, k, type_value })
    }

    /// Exact θ value; errors for big-type constraints.
    pub fn theta(&self) -> Result<u64> {
        match self.type_value {
            None => theta_min(self.n, self.k),
            Some(t) => theta_small_type(self.n, t),
        }
    }

    /// Always-defined lower bound (equal to [`Self::theta`] when exact).
    pub fn theta_lower_bound(&self) -> Result<u64> {
        match self.type_value {
            None => theta_min(self.n, self.k),
            Some(t) => theta_type_lower_bound(self.n, t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn subset(n: u32, values: &[u32]) -> VertexSubset {
        VertexSubset::from_values(n, values.iter().copied()).unwrap()
    }

    /// Oracle: max internal edges over all k-subsets of Q_n by enumeration.
    fn brute_max_internal(n: u32, k: u32) -> u64 {
        let verts = 1u32 << n;
        let mut best = 0;
        for mask in 0u32..1 << verts {
            if mask.count_ones() != k {
                continue;
            }
            let mut edges = 0;
            for v in 0..verts {
                if mask >> v & 1 == 0 {
                    continue;
                }
                for j in 0..n {
                    let u = v ^ (1 << j);
                    if u > v && mask >> u & 1 == 1 {
                        edges += 1;
                    }
                }
            }
            best = best.max(edges);
        }
        best
    }

    /// Oracle: min boundary over all k-subsets of Q_n by enumeration.
    fn brute_min_boundary(n: u32, k: u32) -> u64 {
        let verts = 1u32 << n;
        let mut best = u64::MAX;
        for mask in 0u32..1 << verts {
            if mask.count_ones() != k {
                continue;
            }
            let mut boundary = 0u64;
            for v in 0..verts {
                if mask >> v & 1 == 0 {
                    continue;
                }
                for j in 0..n {
                    if mask >> (v ^ (1 << j)) & 1 == 0 {
                        boundary += 1;
                    }
                }
            }
            best = best.min(boundary);
        }
        best
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(subset(3, &[]).boundary_theta(), 0);
        assert_eq!(subset(3, &[0]).boundary_theta(), 3);
        assert_eq!(subset(3, &[0, 1, 2, 3]).boundary_theta(), 4);
    }

    #[test]
    fn cubal_edge_count_examples() {
        assert_eq!(cubal_edge_count(0), 0);
        assert_eq!(cubal_edge_count(1), 0);
        assert_eq!(cubal_edge_count(3), brute_max_internal(2, 3));
        assert_eq!(cubal_edge_count(3), 2);
        assert_eq!(cubal_edge_count(6), brute_max_internal(3, 6));
        assert_eq!(cubal_edge_count(6), 7);
        // full cube: E(2^n) = n·2^{n-1}
        for n in 0..10u64 {
            assert_eq!(cubal_edge_count(1 << n), n << n >> 1);
        }
    }

    #[test]
    fn theta_min_examples() {
        assert_eq!(theta_min(3, 0).unwrap(), 0);
        assert_eq!(theta_min(3, 4).unwrap(), 4);
        assert_eq!(theta_min(3, 3).unwrap(), brute_min_boundary(3, 3));
        assert_eq!(theta_min(3, 3).unwrap(), 5);
        assert!(theta_min(3, 9).is_err());
    }

    #[test]
    fn theta_min_matches_exhaustive_small() {
        for n in 1..=3u32 {
            for k in 0..=1u32 << n {
                assert_eq!(
                    theta_min(n, u64::from(k)).unwrap(),
                    brute_min_boundary(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn make_cubal_examples() {
        assert_eq!(make_cubal(3, 8).unwrap(), VertexSubset::full(3).unwrap());
        let c33 = make_cubal(3, 3).unwrap();
        assert_eq!(c33, subset(3, &[0, 1, 2]));
        assert_eq!(c33.internal_edges(), 2);
        assert_eq!(c33.boundary_theta(), 5);
        let c46 = make_cubal(4, 6).unwrap();
        assert_eq!(c46.boundary_theta(), 10);
        assert_eq!(c46.internal_edges(), cubal_edge_count(6));
    }

    #[test]
    fn cubal_attains_theta_min() {
        for n in 1..=6u32 {
            for k in 0..=1u64 << n {
                let c = make_cubal(n, k).unwrap();
                assert_eq!(c.boundary_theta(), theta_min(n, k).unwrap(), "n={n} k={k}");
                assert_eq!(c.internal_edges(), cubal_edge_count(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn is_min_boundary_examples() {
        assert!(subset(3, &[0, 1, 2, 3]).is_min_boundary());
        let s = subset(3, &[0b000, 0b011]);
        assert_eq!(s.boundary_theta(), 6);
        assert!(!s.is_min_boundary());
        assert!(make_cubal(4, 6).unwrap().is_min_boundary());
    }

    #[test]
    fn type_examples() {
        // dimension half-cube {u: u_1 = 0} of Q_4
        let half = VertexSubset::from_values(4, 0..8).unwrap();
        assert_eq!(half.type_of(), 0);
        assert_eq!(subset(3, &[]).type_of(), 0);
    }

    #[test]
    fn theta_small_type_examples() {
        for n in 3..10 {
            assert_eq!(theta_small_type(n, 0).unwrap(), 1 << (n - 1));
        }
        assert_eq!(theta_small_type(6, 6).unwrap(), 52);
        assert_eq!(theta_small_type(6, 8).unwrap(), 48);
        assert!(theta_small_type(6, 9).is_err());
    }

    #[test]
    fn theta_type_lower_bound_examples() {
        assert_eq!(theta_type_lower_bound(5, 4).unwrap(), 24);
        assert_eq!(theta_type_lower_bound(5, 7).unwrap(), 24);
        assert_eq!(theta_type_lower_bound(7, 16).unwrap(), 96);
    }

    #[test]
    fn small_type_matches_constrained_exhaustive() {
        // min boundary over half-size subsets of Q_n with a given type
        for n in 3..=4u32 {
            let verts = 1u32 << n;
            let half = verts / 2;
            let cap = (1u64 << (n - 2)) / 2;
            let mut best = vec![u64::MAX; (1 << (n - 2)) + 1];
            for mask in 0u32..1 << verts {
                if mask.count_ones() != half {
                    continue;
                }
                let s = VertexSubset::from_values(n, (0..verts).filter(|&v| mask >> v & 1 == 1))
                    .unwrap();
                let t = s.type_of() as usize;
                let b = s.boundary_theta();
                if b < best[t] {
                    best[t] = b;
                }
            }
            for t in 0..=cap {
                assert_eq!(
                    theta_small_type(n, t).unwrap(),
                    best[t as usize],
                    "n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn recurrences_hold() {
        // θ(n,k) = θ(n-1,k) + k for k ≤ 2^{n-1}
        for n in 1..=12u32 {
            for k in 0..=1u64 << (n - 1) {
                assert_eq!(
                    theta_min(n, k).unwrap(),
                    theta_min(n - 1, k).unwrap() + k,
                    "n={n} k={k}"
                );
            }
        }
        // θ(n+1,2k) = 2θ(n,k)
        for n in 0..=12u32 {
            for k in 0..=1u64 << n {
                assert_eq!(
                    theta_min(n + 1, 2 * k).unwrap(),
                    2 * theta_min(n, k).unwrap()
                );
            }
        }
        // θ(n,2^{n-1},2t) = 2θ(n-1,2^{n-2},t) for t ≤ 2^{n-4}
        for n in 4..=12u32 {
            for t in 0..=1u64 << (n - 4) {
                assert_eq!(
                    theta_small_type(n, 2 * t).unwrap(),
                    2 * theta_small_type(n - 1, t).unwrap()
                );
            }
        }
    }

    #[test]
    fn edge_count_recurrences_hold() {
        // E(2k+1) = E(2k) + N and E(2k+2) = E(2k+1) + N + 1, N = popcount(k)
        for k in 0..=1u64 << 12 {
            let n_terms = u64::from(k.count_ones());
            assert_eq!(cubal_edge_count(2 * k + 1), cubal_edge_count(2 * k) + n_terms);
            assert_eq!(
                cubal_edge_count(2 * k + 2),
                cubal_edge_count(2 * k + 1) + n_terms + 1
            );
            if k > 0 {
                assert_eq!(
                    2 * cubal_edge_count(2 * k + 1),
                    cubal_edge_count(2 * k) + cubal_edge_count(2 * k + 2) - 1
                );
            }
        }
    }

    #[test]
    fn odd_type_theta_identity() {
        // 2θ(n,2^{n-1},2k+1) = θ(n,2^{n-1},2k) + θ(n,2^{n-1},2k+2) + 4
        for n in 5..=12u32 {
            for k in 1..=(1u64 << (n - 4)) - 1 {
                assert_eq!(
                    2 * theta_small_type(n, 2 * k + 1).unwrap(),
                    theta_small_type(n, 2 * k).unwrap()
                        + theta_small_type(n, 2 * k + 2).unwrap()
                        + 4
                );
            }
        }
    }

    #[test]
    fn theta_profile_dispatch() {
        let p = ThetaProfile::new(4, 6, None).unwrap();
        assert_eq!(p.theta().unwrap(), 10);
        let p = ThetaProfile::new(6, 32, Some(6)).unwrap();
        assert_eq!(p.theta().unwrap(), 52);
        let p = ThetaProfile::new(6, 32, Some(12)).unwrap();
        assert!(p.theta().is_err());
        assert_eq!(p.theta_lower_bound().unwrap(), 48);
        assert!(ThetaProfile::new(4, 6, Some(1)).is_err());
    }

    proptest! {
        #[test]
        fn complement_symmetry(n in 1u32..=8, seed in any::<u64>()) {
            let verts = 1u64 << n;
            let mut s = VertexSubset::empty(n).unwrap();
            let mut state = seed;
            for v in 0..verts as u32 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    s.insert(v);
                }
            }
            prop_assert_eq!(s.boundary_theta(), s.complement().boundary_theta());
            prop_assert_eq!(s.len() + s.complement().len(), verts);
        }

        #[test]
        fn boundary_at_least_theta_min(n in 1u32..=7, seed in any::<u64>()) {
            let mut s = VertexSubset::empty(n).unwrap();
            let mut state = seed;
            for v in 0..1u32 << n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    s.insert(v);
                }
            }
            prop_assert!(s.boundary_theta() >= theta_min(n, s.len()).unwrap());
        }
    }
}
