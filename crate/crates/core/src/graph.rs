//! Simple undirected graphs in compressed adjacency form.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

/// Undirected simple graph stored as offsets into one sorted neighbour array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    degree: Option<usize>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(alloc::format!(
                    "edge {u}-{v} out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(alloc::format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_lists(adj))
    }

    /// Sorts and deduplicates each list. Callers guarantee symmetry and no loops.
    pub(crate) fn from_lists(mut adj: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0);
        let mut neighbors = Vec::new();
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            neighbors.extend(list.iter().map(|&w| w as u32));
            offsets.push(neighbors.len());
        }
        let mut g = Graph { offsets, neighbors, degree: None };
        g.degree = g.uniform_degree();
        g
    }

    fn uniform_degree(&self) -> Option<usize> {
        if self.vertex_count() == 0 {
            return None;
        }
        let first = self.degree(0);
        (0..self.vertex_count()).all(|v| self.degree(v) == first).then_some(first)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_lists(vec![Vec::new(); vertex_count])
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3);
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Self::from_edges(m, &edges).expect("valid cycle")
    }

    pub fn path(m: usize) -> Self {
        let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        Self::from_edges(m, &edges).expect("valid path")
    }

    pub fn complete(m: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                edges.push((i, j));
            }
        }
        Self::from_edges(m, &edges).expect("valid clique")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::from_edges(10, &edges).expect("valid Petersen graph")
    }

    /// Uniform random `degree`-regular simple graph via the pairing model with rejection.
    pub fn random_regular(vertex_count: usize, degree: usize, seed: u64) -> Result<Self> {
        if degree >= vertex_count || (vertex_count * degree) % 2 == 1 {
            return Err(Error::invalid(alloc::format!(
                "no {degree}-regular graph on {vertex_count} vertices"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        'attempt: for _ in 0..10_000 {
            let mut points: Vec<usize> =
                (0..vertex_count).flat_map(|v| core::iter::repeat_n(v, degree)).collect();
            for i in (1..points.len()).rev() {
                let j = uniform_below(&mut rng, i + 1);
                points.swap(i, j);
            }
            let mut edges = Vec::with_capacity(points.len() / 2);
            for pair in points.chunks(2) {
                let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if u == v || edges.contains(&(u, v)) {
                    continue 'attempt;
                }
                edges.push((u, v));
            }
            return Self::from_edges(vertex_count, &edges);
        }
        Err(Error::invalid("pairing model kept producing loops or multi-edges"))
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// The common degree, if the graph is regular.
    pub fn degree_tag(&self) -> Option<usize> {
        self.degree
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u).iter().map(|&w| w as usize).filter(move |&w| w > u).map(move |w| (u, w))
        })
    }

    /// Whether every vertex has exactly `d` neighbours.
    pub fn validate_regular(&self, d: usize) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == d)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += sorted_intersection_count(self.neighbors(u), self.neighbors(v));
        }
        count / 3
    }

    /// `y = A x`.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        for (v, out) in y.iter_mut().enumerate() {
            *out = self.neighbors(v).iter().map(|&w| x[w as usize]).sum();
        }
    }

    /// `x^T A x` over this graph.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        2.0 * self.edges().map(|(u, v)| x[u] * x[v]).sum::<f64>()
    }

    /// Dense row-major adjacency matrix.
    pub fn dense_adjacency(&self) -> Vec<f64> {
        let n = self.vertex_count();
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// Subgraph induced on `keep`. Returns the graph and, for each new index, the old index.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.vertex_count();
        let mut new_index = vec![usize::MAX; n];
        let mut remap = Vec::with_capacity(keep.len());
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= n {
                return Err(Error::invalid(alloc::format!("vertex {v} out of range for {n} vertices")));
            }
            new_index[v] = remap.len();
            remap.push(v);
        }
        let adj = remap
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .map(|&w| new_index[w as usize])
                    .filter(|&w| w != usize::MAX)
                    .collect()
            })
            .collect();
        Ok((Self::from_lists(adj), remap))
    }

    /// Cartesian product; vertex `(a, b)` is indexed `a * |H| + b`.
    pub fn box_product(&self, other: &Graph, max_vertices: usize) -> Result<Graph> {
        let (p, q) = (self.vertex_count(), other.vertex_count());
        let size = p.checked_mul(q).unwrap_or(usize::MAX);
        if size > max_vertices {
            return Err(Error::Capacity { what: "box product", size, limit: max_vertices });
        }
        let mut adj = Vec::with_capacity(size);
        for a in 0..p {
            for b in 0..q {
                let mut list = Vec::with_capacity(self.degree(a) + other.degree(b));
                list.extend(self.neighbors(a).iter().map(|&x| x as usize * q + b));
                list.extend(other.neighbors(b).iter().map(|&y| a * q + y as usize));
                adj.push(list);
            }
        }
        Ok(Self::from_lists(adj))
    }
}

/// Uniform integer in `0..bound` by rejection.
pub(crate) fn uniform_below(rng: &mut impl RngCore, bound: usize) -> usize {
    let bound = bound as u64;
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return (x % bound) as usize;
        }
    }
}

/// Uniform double in `[0, 1)`.
pub(crate) fn uniform_unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn sorted_intersection_count(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}
