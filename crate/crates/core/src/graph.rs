//! Simple undirected graphs, BFS distances and closer-vertex counts.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hop count marking a vertex that BFS could not reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph on the vertices `0..order`.
///
/// Neighbor lists are kept sorted. Connectivity is not part of the type:
/// enumeration code builds disconnected graphs and filters them, while the
/// invariant functions reject them with [`Error::DisconnectedInput`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            size: 0,
        }
    }

    /// Builds a graph from an edge list.
    ///
    /// Self-loops, out-of-range endpoints and repeated edges are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); order];
        let mut size = 0;
        for (u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(Error::InvalidEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            size += 1;
        }
        for (u, row) in adjacency.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(u, w[0]));
            }
        }
        Ok(Graph { adjacency, size })
    }

    /// Builds a graph from per-vertex neighbor bitmasks (orders up to 64).
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let adjacency: Vec<Vec<usize>> = masks
            .iter()
            .map(|&mask| {
                let mut row = Vec::with_capacity(mask.count_ones() as usize);
                let mut rest = mask;
                while rest != 0 {
                    row.push(rest.trailing_zeros() as usize);
                    rest &= rest - 1;
                }
                row
            })
            .collect();
        let size = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adjacency, size }
    }

    /// Per-vertex neighbor bitmasks. Only meaningful for orders up to 64.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adjacency
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// The common valence if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|row| row.len() == first)
            .then_some(first)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size + 1 == self.order() && self.is_connected()
    }

    /// Graph obtained by sending vertex `v` to `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut adjacency = vec![Vec::new(); self.order()];
        for (u, row) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = row.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adjacency[perm[u]] = mapped;
        }
        Graph {
            adjacency,
            size: self.size,
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adjacency = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && self.adjacency[u].binary_search(&v).is_err())
                    .collect()
            })
            .collect();
        Graph {
            adjacency,
            size: n * n.saturating_sub(1) / 2 - self.size,
        }
    }

    /// Single-source BFS hop counts.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.order()];
        bfs_into(self, source, &mut dist, &mut VecDeque::new());
        Ok(DistanceRow { source, dist })
    }

    /// True iff one BFS from vertex 0 reaches every vertex. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Result<usize> {
        Ok(DistanceTable::new(self)?.diameter())
    }

    /// Closer-vertex counts for the pair `(u, v)`.
    pub fn pair_balance(&self, u: usize, v: usize) -> Result<PairBalance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let du = self.bfs_distances(u)?;
        if du.dist.contains(&UNREACHABLE) {
            return Err(Error::DisconnectedInput);
        }
        let dv = self.bfs_distances(v)?;
        Ok(PairBalance::from_rows(&du.dist, &dv.dist))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn bfs_into(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// BFS distances from one source; unreachable vertices hold [`UNREACHABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

/// The three-way split of the vertex set induced by a pair `(u, v)`.
///
/// `closer_to_u` counts `u` itself and `closer_to_v` counts `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairBalance {
    pub closer_to_u: u64,
    pub closer_to_v: u64,
    pub equidistant: u64,
}

impl PairBalance {
    fn from_rows(du: &[u32], dv: &[u32]) -> Self {
        let mut closer_to_u = 0;
        let mut closer_to_v = 0;
        let mut equidistant = 0;
        for (a, b) in du.iter().zip(dv) {
            match a.cmp(b) {
                std::cmp::Ordering::Less => closer_to_u += 1,
                std::cmp::Ordering::Greater => closer_to_v += 1,
                std::cmp::Ordering::Equal => equidistant += 1,
            }
        }
        PairBalance {
            closer_to_u,
            closer_to_v,
            equidistant,
        }
    }

    #[inline]
    pub fn unbalancedness(&self) -> u64 {
        self.closer_to_u.abs_diff(self.closer_to_v)
    }

    #[inline]
    pub fn is_balanced(&self) -> bool {
        self.closer_to_u == self.closer_to_v
    }

    pub fn swapped(self) -> Self {
        PairBalance {
            closer_to_u: self.closer_to_v,
            closer_to_v: self.closer_to_u,
            equidistant: self.equidistant,
        }
    }
}

/// All-pairs hop counts of a connected graph, row-major.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    /// One BFS per source. Fails on disconnected input.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            bfs_into(g, s, row, &mut queue);
            if row.contains(&UNREACHABLE) {
                return Err(Error::DisconnectedInput);
            }
        }
        Ok(DistanceTable { order: n, dist })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    #[inline]
    pub fn pair_balance(&self, u: usize, v: usize) -> PairBalance {
        PairBalance::from_rows(self.row(u), self.row(v))
    }

    /// `|n_{u,v} - n_{v,u}|` without materialising the equidistant count.
    #[inline]
    pub fn pair_unbalancedness(&self, u: usize, v: usize) -> u64 {
        let mut diff: i64 = 0;
        for (a, b) in self.row(u).iter().zip(self.row(v)) {
            diff += (a < b) as i64 - (a > b) as i64;
        }
        diff.unsigned_abs()
    }
}
