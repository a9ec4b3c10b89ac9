//! The host graph C_{2^{n1}} × P_{2^{n2}} with boustrophedon labeling, its
//! metric, and the edge-cut partition used by the cut-based wirelength
//! engine. Degenerate hosts (pure path for n1 = 0, pure cycle for n2 = 0)
//! reuse the same machinery with one cut family empty.
//!
//! Rows index the cycle dimension (1..=2^{n1}), columns the path dimension
//! (1..=2^{n2}). Labels snake through the rows: odd rows run left to right,
//! even rows right to left, so consecutive labels are host-adjacent.

use crate::error::{Error, Result};

/// A host vertex label in 1..=2^n.
pub type HostLabel = u64;

/// Largest supported total dimension (labels and distance sums stay in u64).
pub const MAX_HOST_DIM: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostKind {
    Cylinder,
    Path,
    Cycle,
}

impl HostKind {
    pub fn name(&self) -> &'static str {
        match self {
            HostKind::Cylinder => "cylinder",
            HostKind::Path => "path",
            HostKind::Cycle => "cycle",
        }
    }
}

/// Identifier of one edge cut in the partition: `Ring(i)` cuts the cycle
/// dimension at two antipodal row gaps, `Column(j)` separates columns
/// 1..=j from the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutId {
    Ring(u64),
    Column(u64),
}

impl std::fmt::Display for CutId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutId::Ring(i) => write!(f, "X{i}"),
            CutId::Column(j) => write!(f, "Y{j}"),
        }
    }
}

/// One edge cut together with the vertex set of one of the two components
/// left by its removal.
#[derive(Clone, Debug)]
pub struct EdgeCut {
    pub id: CutId,
    pub edges: Vec<(HostLabel, HostLabel)>,
    pub region: Vec<HostLabel>,
}

impl EdgeCut {
    /// Whether the cut separates labels x and y (exactly one lies in the
    /// region).
    pub fn separates(&self, x: HostLabel, y: HostLabel) -> bool {
        self.region.binary_search(&x).is_ok() != self.region.binary_search(&y).is_ok()
    }
}

/// The cylinder C_{2^{n1}} × P_{2^{n2}}, or its path/cycle degenerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HostGraph {
    n1: u32,
    n2: u32,
    kind: HostKind,
}

impl HostGraph {
    /// Builds a host from the cycle exponent n1 and path exponent n2.
    ///
    /// n1 = 0 yields the path P_{2^n}; n2 = 0 yields the cycle C_{2^n}
    /// (needs n1 ≥ 2 so the cycle has at least four vertices); otherwise a
    /// cylinder with n1 ≥ 2. n1 = 1 is rejected: C_2 would be a doubled
    /// edge and the ring cuts collapse.
    pub fn new(n1: u32, n2: u32) -> Result<Self> {
        let n = n1 + n2;
        if n == 0 || n > MAX_HOST_DIM {
            return Err(Error::Host {
                n1,
                n2,
                reason: "total dimension must be in 1..=20",
            });
        }
        let kind = match (n1, n2) {
            (0, _) => HostKind::Path,
            (1, _) => {
                return Err(Error::Host {
                    n1,
                    n2,
                    reason: "n1 = 1 is not a valid cycle dimension (C_2 degenerates)",
                })
            }
            (_, 0) => HostKind::Cycle,
            _ => HostKind::Cylinder,
        };
        Ok(HostGraph { n1, n2, kind })
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn n(&self) -> u32 {
        self.n1 + self.n2
    }

    pub fn kind(&self) -> HostKind {
        self.kind
    }

    pub fn rows(&self) -> u64 {
        1u64 << self.n1
    }

    pub fn cols(&self) -> u64 {
        1u64 << self.n2
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.n()
    }

    /// a_{i,j}: the boustrophedon label of row i, column j.
    pub fn label_at(&self, row: u64, col: u64) -> Result<HostLabel> {
        self.check_position(row, col)?;
        Ok(if row % 2 == 1 {
            (row - 1) * self.cols() + col
        } else {
            row * self.cols() + 1 - col
        })
    }

    /// The (row, column) position carrying a label.
    pub fn position_of(&self, label: HostLabel) -> Result<(u64, u64)> {
        if label < 1 || label > self.vertex_count() {
            return Err(Error::Label {
                label,
                max: self.vertex_count(),
            });
        }
        let row = (label - 1) / self.cols() + 1;
        let col = if row % 2 == 1 {
            label - (row - 1) * self.cols()
        } else {
            row * self.cols() + 1 - label
        };
        Ok((row, col))
    }

    /// The shortest-path distance between two labels: cyclic distance in the
    /// row dimension plus linear distance in the column dimension.
    pub fn distance(&self, x: HostLabel, y: HostLabel) -> Result<u64> {
        let (r1, c1) = self.position_of(x)?;
        let (r2, c2) = self.position_of(y)?;
        let dr = r1.abs_diff(r2);
        let ring = if self.n1 == 0 {
            0
        } else {
            dr.min(self.rows() - dr)
        };
        Ok(ring + c1.abs_diff(c2))
    }

    /// All host edges, each as a (min, max) label pair.
    pub fn edges(&self) -> Vec<(HostLabel, HostLabel)> {
        let mut out = Vec::new();
        let (rows, cols) = (self.rows(), self.cols());
        for i in 1..=rows {
            for j in 1..cols {
                out.push(ordered(
                    self.label_at(i, j).unwrap(),
                    self.label_at(i, j + 1).unwrap(),
                ));
            }
        }
        if rows > 1 {
            for j in 1..=cols {
                for i in 1..rows {
                    out.push(ordered(
                        self.label_at(i, j).unwrap(),
                        self.label_at(i + 1, j).unwrap(),
                    ));
                }
                out.push(ordered(
                    self.label_at(rows, j).unwrap(),
                    self.label_at(1, j).unwrap(),
                ));
            }
        }
        out
    }

    /// Number of ring cuts (2^{n1-1}, zero for the path host).
    pub fn ring_cut_count(&self) -> u64 {
        if self.n1 == 0 {
            0
        } else {
            1u64 << (self.n1 - 1)
        }
    }

    /// Number of column cuts (2^{n2} − 1, zero for the cycle host).
    pub fn column_cut_count(&self) -> u64 {
        self.cols() - 1
    }

    /// A_i: the 2^{n-1} consecutive labels starting at (i−1)·2^{n2}+1; one
    /// component of removing ring cut i.
    pub fn region_a(&self, i: u64) -> Result<Vec<HostLabel>> {
        if i < 1 || i > self.ring_cut_count() {
            return Err(Error::Index {
                what: "ring cut",
                index: i,
                min: 1,
                max: self.ring_cut_count(),
            });
        }
        let start = (i - 1) * self.cols() + 1;
        Ok((start..start + self.vertex_count() / 2).collect())
    }

    /// B_j: the labels of the first j columns; one component of removing
    /// column cut j.
    pub fn region_b(&self, j: u64) -> Result<Vec<HostLabel>> {
        if j < 1 || j > self.column_cut_count() {
            return Err(Error::Index {
                what: "column cut",
                index: j,
                min: 1,
                max: self.column_cut_count(),
            });
        }
        let mut out: Vec<HostLabel> = (1..=self.rows())
            .flat_map(|i| (1..=j).map(move |k| (i, k)))
            .map(|(i, k)| self.label_at(i, k).unwrap())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The edge-cut partition {X_1..X_{2^{n1-1}}, Y_1..Y_{2^{n2}-1}}.
    ///
    /// Ring cut X_i holds the 2·2^{n2} edges crossing the antipodal row
    /// gaps (i−1 | i) and (i−1+2^{n1-1} | i+2^{n1-1}), with row 0 read as
    /// row 2^{n1}; column cut Y_j holds the 2^{n1} edges between columns j
    /// and j+1. The cuts are pairwise disjoint and cover every host edge.
    pub fn cut_partition(&self) -> Vec<EdgeCut> {
        let mut cuts = Vec::new();
        let rows = self.rows();
        let half_rows = rows / 2;
        for i in 1..=self.ring_cut_count() {
            let mut edges = Vec::new();
            for gap in [(i - 1 + rows) % rows, i - 1 + half_rows] {
                // gap g sits between row g and row g+1 (g = 0 wraps)
                let (lo, hi) = if gap == 0 { (rows, 1) } else { (gap, gap + 1) };
                for j in 1..=self.cols() {
                    edges.push(ordered(
                        self.label_at(lo, j).unwrap(),
                        self.label_at(hi, j).unwrap(),
                    ));
                }
            }
            cuts.push(EdgeCut {
                id: CutId::Ring(i),
                edges,
                region: self.region_a(i).unwrap(),
            });
        }
        for j in 1..=self.column_cut_count() {
            let edges = (1..=rows)
                .map(|i| {
                    ordered(
                        self.label_at(i, j).unwrap(),
                        self.label_at(i, j + 1).unwrap(),
                    )
                })
                .collect();
            cuts.push(EdgeCut {
                id: CutId::Column(j),
                edges,
                region: self.region_b(j).unwrap(),
            });
        }
        cuts
    }

    fn check_position(&self, row: u64, col: u64) -> Result<()> {
        if row < 1 || row > self.rows() {
            return Err(Error::Index {
                what: "row",
                index: row,
                min: 1,
                max: self.rows(),
            });
        }
        if col < 1 || col > self.cols() {
            return Err(Error::Index {
                what: "column",
                index: col,
                min: 1,
                max: self.cols(),
            });
        }
        Ok(())
    }
}

fn ordered(a: HostLabel, b: HostLabel) -> (HostLabel, HostLabel) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
