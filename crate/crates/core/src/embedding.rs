//! Embeddings of Q_n onto host labels and the three wirelength engines:
//! direct metric summation, edge-cut decomposition, and explicit routing
//! with per-edge congestion. The three are mathematically equal on every
//! embedding; they are kept as independent code paths so they can check
//! one another.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cylinder::{HostGraph, HostLabel};
use crate::error::{Error, Result};
use crate::graycode::gray_rank_bits;
use crate::hypercube::{CubeVertex, VertexSubset};

/// A bijection from the vertices of Q_n onto the host labels 1..=2^n.
#[derive(Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    host: HostGraph,
    /// forward[v] = label of the vertex with numeric value v
    forward: Vec<u32>,
    /// inverse[label - 1] = numeric value of the vertex mapped there
    inverse: Vec<u32>,
}

impl EmbeddingMap {
    /// Builds an embedding from the labels of vertices 0..2^n in numeric
    /// order, validating that they form a bijection onto 1..=2^n.
    pub fn new(host: HostGraph, labels: Vec<u64>) -> Result<Self> {
        let total = host.vertex_count();
        if labels.len() as u64 != total {
            return Err(Error::NotBijection(format!(
                "expected {total} labels, got {}",
                labels.len()
            )));
        }
        let mut inverse = vec![u32::MAX; total as usize];
        let mut forward = Vec::with_capacity(labels.len());
        for (v, &label) in labels.iter().enumerate() {
            if label < 1 || label > total {
                return Err(Error::Label { label, max: total });
            }
            let slot = &mut inverse[(label - 1) as usize];
            if *slot != u32::MAX {
                return Err(Error::NotBijection(format!(
                    "duplicate label {label} (vertices {} and {v})",
                    *slot
                )));
            }
            *slot = v as u32;
            forward.push(label as u32);
        }
        if let Some(missing) = inverse.iter().position(|&v| v == u32::MAX) {
            return Err(Error::NotBijection(format!("missing label {}", missing + 1)));
        }
        Ok(EmbeddingMap {
            host,
            forward,
            inverse,
        })
    }

    /// The Gray code embedding: vertex u goes to its Gray rank.
    pub fn gray(host: HostGraph) -> Self {
        let total = host.vertex_count() as u32;
        let mut forward = Vec::with_capacity(total as usize);
        let mut inverse = vec![0u32; total as usize];
        for v in 0..total {
            let label = gray_rank_bits(v) + 1;
            forward.push(label);
            inverse[(label - 1) as usize] = v;
        }
        EmbeddingMap {
            host,
            forward,
            inverse,
        }
    }

    /// The lexicographic embedding: vertex u goes to its numeric value + 1.
    pub fn lexicographic(host: HostGraph) -> Self {
        let total = host.vertex_count() as u32;
        EmbeddingMap {
            host,
            forward: (1..=total).collect(),
            inverse: (0..total).collect(),
        }
    }

    /// A uniformly random bijection drawn from `rng`.
    pub fn random<R: Rng + ?Sized>(host: HostGraph, rng: &mut R) -> Self {
        let total = host.vertex_count() as u32;
        let mut forward: Vec<u32> = (1..=total).collect();
        forward.shuffle(rng);
        let mut inverse = vec![0u32; total as usize];
        for (v, &label) in forward.iter().enumerate() {
            inverse[(label - 1) as usize] = v as u32;
        }
        EmbeddingMap {
            host,
            forward,
            inverse,
        }
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn n(&self) -> u32 {
        self.host.n()
    }

    pub fn label_of(&self, v: CubeVertex) -> HostLabel {
        self.label_of_bits(v.bits())
    }

    pub fn label_of_bits(&self, bits: u32) -> HostLabel {
        u64::from(self.forward[bits as usize])
    }

    pub fn vertex_at(&self, label: HostLabel) -> Result<CubeVertex> {
        if label < 1 || label > self.host.vertex_count() {
            return Err(Error::Label {
                label,
                max: self.host.vertex_count(),
            });
        }
        CubeVertex::new(self.n(), self.inverse[(label - 1) as usize])
    }

    /// The labels of vertices 0..2^n in numeric order.
    pub fn labels(&self) -> impl Iterator<Item = HostLabel> + '_ {
        self.forward.iter().map(|&l| u64::from(l))
    }

    /// f^{-1}(L): the vertex subset mapped onto a set of labels.
    pub fn preimage(&self, labels: impl IntoIterator<Item = HostLabel>) -> VertexSubset {
        let mut s = VertexSubset::empty(self.n()).expect("host dimension in range");
        for label in labels {
            s.insert(self.inverse[(label - 1) as usize]);
        }
        s
    }
}

impl std::fmt::Debug for EmbeddingMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "EmbeddingMap(n1={}, n2={}, labels={:?})",
            self.host.n1(),
            self.host.n2(),
            self.forward
        )
    }
}

/// Builds the Gray code embedding for the host with the given exponents.
pub fn gray_embedding(n1: u32, n2: u32) -> Result<EmbeddingMap> {
    Ok(EmbeddingMap::gray(HostGraph::new(n1, n2)?))
}

/// Iterates hypercube edges as ordered pairs (v, u) with v < u.
fn cube_edges(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..1u32 << n).flat_map(move |v| {
        (0..n).filter_map(move |j| {
            let u = v ^ (1 << j);
            (u > v).then_some((v, u))
        })
    })
}

/// WL(f) summed edge by edge from the host metric.
pub fn wirelength_direct(f: &EmbeddingMap) -> u64 {
    let host = f.host();
    let positions: Vec<(u64, u64)> = (1..=host.vertex_count())
        .map(|x| host.position_of(x).unwrap())
        .collect();
    let rows = host.rows();
    let mut total = 0u64;
    for (v, u) in cube_edges(f.n()) {
        let (r1, c1) = positions[(f.label_of_bits(v) - 1) as usize];
        let (r2, c2) = positions[(f.label_of_bits(u) - 1) as usize];
        let dr = r1.abs_diff(r2);
        total += dr.min(rows - dr) + c1.abs_diff(c2);
    }
    total
}

/// The ring-cut and column-cut contributions to the cut-based wirelength:
/// (Σ_i θ(f^{-1}(A_i)), Σ_j θ(f^{-1}(B_j))).
pub fn wirelength_cut_sums(f: &EmbeddingMap) -> (u64, u64) {
    let host = f.host();
    let a_sum = (1..=host.ring_cut_count())
        .map(|i| f.preimage(host.region_a(i).unwrap()).boundary_theta())
        .sum();
    let b_sum = (1..=host.column_cut_count())
        .map(|j| f.preimage(host.region_b(j).unwrap()).boundary_theta())
        .sum();
    (a_sum, b_sum)
}

/// WL(f) through the edge-cut partition: every cut contributes the boundary
/// of the guest preimage of its region.
pub fn wirelength_via_cuts(f: &EmbeddingMap) -> u64 {
    let (a, b) = wirelength_cut_sums(f);
    a + b
}

/// Shortest-path routing policy for the congestion engine.
///
/// Dimension-ordered: walk the cycle dimension first along the shorter arc
/// (ties toward increasing row index), then the path dimension. Every rule
/// that stays on shortest paths yields the same congestion total.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RoutingRule {
    #[default]
    DimensionOrdered,
}

/// Per-host-edge congestion counts for an embedding under a routing rule.
#[derive(Clone, Debug)]
pub struct CongestionMap {
    per_edge: HashMap<(HostLabel, HostLabel), u64>,
    total: u64,
}

impl CongestionMap {
    /// Congestion of one host edge (keys are (min, max) label pairs);
    /// edges on no route have congestion 0.
    pub fn congestion(&self, a: HostLabel, b: HostLabel) -> u64 {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.per_edge.get(&key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(HostLabel, HostLabel), &u64)> {
        self.per_edge.iter()
    }
}

/// Routes every hypercube edge and accumulates per-host-edge congestion.
pub fn edge_congestion(f: &EmbeddingMap, _rule: RoutingRule) -> CongestionMap {
    let host = f.host();
    let rows = host.rows();
    let mut per_edge: HashMap<(HostLabel, HostLabel), u64> = HashMap::new();
    let mut total = 0u64;
    let bump = |per_edge: &mut HashMap<(HostLabel, HostLabel), u64>, a: u64, b: u64| {
        let key = if a <= b { (a, b) } else { (b, a) };
        *per_edge.entry(key).or_insert(0) += 1;
    };
    for (v, u) in cube_edges(f.n()) {
        let (mut r, mut c) = host.position_of(f.label_of_bits(v)).unwrap();
        let (r2, c2) = host.position_of(f.label_of_bits(u)).unwrap();
        // cycle dimension first, along the shorter arc; tie breaks toward
        // increasing row index
        while r != r2 {
            let fwd = (r2 + rows - r) % rows;
            let bwd = (r + rows - r2) % rows;
            let next = if fwd <= bwd {
                r % rows + 1
            } else {
                (r + rows - 2) % rows + 1
            };
            bump(
                &mut per_edge,
                host.label_at(r, c).unwrap(),
                host.label_at(next, c).unwrap(),
            );
            total += 1;
            r = next;
        }
        while c != c2 {
            let next = if c2 > c { c + 1 } else { c - 1 };
            bump(
                &mut per_edge,
                host.label_at(r, c).unwrap(),
                host.label_at(r, next).unwrap(),
            );
            total += 1;
            c = next;
        }
    }
    CongestionMap { per_edge, total }
}

/// WL(f) as the total congestion over all host edges.
pub fn wirelength_via_congestion(f: &EmbeddingMap, rule: RoutingRule) -> u64 {
    edge_congestion(f, rule).total()
}

/// The closed-form minimum wirelength of Q_n into C_{2^{n1}} × P_{2^{n2}}:
/// 2^{n2}(3·2^{2n1−3} − 2^{n1−1}) + 2^{n1}(2^{2n2−1} − 2^{n2−1}), with the
/// degenerate reductions 2^{2n−1} − 2^{n−1} for the path (n1 = 0) and
/// 3·2^{2n−3} − 2^{n−1} for the cycle (n2 = 0).
///
/// n1 = 1 is accepted for formula arithmetic even though no verified host
/// exists there.
pub fn closed_form_wirelength(n1: u32, n2: u32) -> Result<u64> {
    let n = n1 + n2;
    if !(1..=31).contains(&n) {
        return Err(Error::Host {
            n1,
            n2,
            reason: "total dimension must be in 1..=31",
        });
    }
    if n1 == 0 {
        return Ok((1u64 << (2 * n - 1)) - (1u64 << (n - 1)));
    }
    if n2 == 0 {
        if n < 2 {
            return Err(Error::Host {
                n1,
                n2,
                reason: "cycle host needs n >= 2",
            });
        }
        return Ok(3 * (1u64 << (2 * n - 3)) - (1u64 << (n - 1)));
    }
    // n1, n2 >= 1, so 2n1 + n2 - 3 and n1 + 2n2 - 1 are nonnegative
    let ring_part = 3 * (1u64 << (2 * n1 + n2 - 3)) - (1u64 << (n - 1));
    let column_part = (1u64 << (n1 + 2 * n2 - 1)) - (1u64 << (n - 1));
    Ok(ring_part + column_part)
}

/// Reads an embedding file: a header line `n n1 n2`, then 2^n labels in
/// numeric vertex order; `#` starts a comment. Files using 0-based labels
/// (0 present, 2^n absent) are shifted up by one.
pub fn load_embedding<R: BufRead>(reader: R) -> Result<EmbeddingMap> {
    let mut header: Option<(u32, u32, u32)> = None;
    let mut labels: Vec<u64> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if header.is_none() {
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Format(format!(
                    "line {}: header must be `n n1 n2`, got {text:?}",
                    lineno + 1
                )));
            }
            let parse = |s: &str| {
                s.parse::<u32>()
                    .map_err(|_| Error::Format(format!("line {}: bad integer {s:?}", lineno + 1)))
            };
            header = Some((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
        } else {
            for field in text.split_whitespace() {
                let value = field.parse::<u64>().map_err(|_| {
                    Error::Format(format!("line {}: bad label {field:?}", lineno + 1))
                })?;
                labels.push(value);
            }
        }
    }
    let (n, n1, n2) = header.ok_or_else(|| Error::Format("missing header line".into()))?;
    if n != n1 + n2 {
        return Err(Error::Format(format!("header says n={n} but n1+n2={}", n1 + n2)));
    }
    let host = HostGraph::new(n1, n2)?;
    if labels.len() as u64 != host.vertex_count() {
        return Err(Error::Format(format!(
            "expected {} labels, found {}",
            host.vertex_count(),
            labels.len()
        )));
    }
    let top = host.vertex_count();
    if labels.contains(&0) && !labels.contains(&top) {
        for label in &mut labels {
            *label += 1;
        }
    }
    EmbeddingMap::new(host, labels)
}

/// Writes an embedding in the file format accepted by [`load_embedding`].
pub fn save_embedding<W: Write>(f: &EmbeddingMap, mut writer: W) -> std::io::Result<()> {
    writeln!(
        writer,
        "{} {} {}",
        f.host().n(),
        f.host().n1(),
        f.host().n2()
    )?;
    for chunk in f.forward.chunks(16) {
        let row: Vec<String> = chunk.iter().map(|l| l.to_string()).collect();
        writeln!(writer, "{}", row.join(" "))?;
    }
    Ok(())
}
