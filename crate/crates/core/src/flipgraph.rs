//! The flip graph of triangulations of a convex `n`-gon (the associahedron graph).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triangulation::{enumerate_triangulations_with, Diagonal, Triangulation};
use crate::Limits;

/// The flip graph together with the triangulation behind each vertex.
#[derive(Clone, Debug)]
pub struct Associahedron {
    n: usize,
    triangulations: Vec<Triangulation>,
    /// vertex indices sorted by canonical code
    by_code: Vec<u32>,
    graph: Graph,
}

impl Associahedron {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limits(n, &Limits::default())
    }

    pub fn with_limits(n: usize, limits: &Limits) -> Result<Self> {
        let triangulations = enumerate_triangulations_with(n, limits)?;
        let mut by_code: Vec<u32> = (0..triangulations.len() as u32).collect();
        by_code.sort_unstable_by(|&a, &b| triangulations[a as usize].cmp(&triangulations[b as usize]));

        let mut edges = Vec::with_capacity(triangulations.len() * n.saturating_sub(3) / 2);
        for (u, t) in triangulations.iter().enumerate() {
            for &d in t.diagonals() {
                let (_, t2) = t.flip(d)?;
                let v = lookup(&triangulations, &by_code, &t2).expect("flip stays inside the enumeration");
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(triangulations.len(), &edges)?;
        Ok(Associahedron { n, triangulations, by_code, graph })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn triangulations(&self) -> &[Triangulation] {
        &self.triangulations
    }

    pub fn triangulation(&self, v: usize) -> &Triangulation {
        &self.triangulations[v]
    }

    /// Vertex index of `t`, if it triangulates the same polygon.
    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        lookup(&self.triangulations, &self.by_code, t)
    }

    /// Vertices whose triangulation contains `d`, ascending.
    pub fn containing(&self, d: Diagonal) -> Vec<usize> {
        (0..self.triangulations.len()).filter(|&v| self.triangulations[v].contains(d)).collect()
    }

    /// Subgraph induced by the triangulations containing `d`, with the vertex remap.
    pub fn slice(&self, d: Diagonal) -> Result<(Graph, Vec<usize>)> {
        if !d.is_valid_for(self.n) {
            return Err(Error::invalid(alloc::format!("{d} is not a diagonal of a {}-gon", self.n)));
        }
        self.graph.induced_subgraph(&self.containing(d))
    }
}

fn lookup(all: &[Triangulation], by_code: &[u32], t: &Triangulation) -> Option<usize> {
    by_code
        .binary_search_by(|&k| all[k as usize].cmp(t))
        .ok()
        .map(|pos| by_code[pos] as usize)
}

/// The associahedron graph on `C_{n-2}` vertices, indexed in enumeration order.
pub fn build_associahedron(n: usize) -> Result<Graph> {
    Ok(Associahedron::new(n)?.into_graph())
}

/// Subgraph of the `n`-gon flip graph induced by the triangulations containing `d`.
pub fn diagonal_slice(n: usize, d: Diagonal) -> Result<Graph> {
    if !d.is_valid_for(n) {
        return Err(Error::invalid(alloc::format!("{d} is not a diagonal of a {n}-gon")));
    }
    Ok(Associahedron::new(n)?.slice(d)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::catalan_count;

    #[test]
    fn small_associahedra() {
        let a4 = build_associahedron(4).unwrap();
        assert_eq!(a4, Graph::complete(2));
        let a5 = build_associahedron(5).unwrap();
        assert_eq!(a5.vertex_count(), 5);
        assert_eq!(a5.degree_tag(), Some(2));
        assert!(a5.is_connected());
        let a6 = build_associahedron(6).unwrap();
        assert_eq!(a6.vertex_count(), 14);
        assert_eq!(a6.degree_tag(), Some(3));
        assert!(build_associahedron(7).unwrap().validate_regular(4));
        assert_eq!(build_associahedron(3).unwrap().vertex_count(), 1);
        assert!(build_associahedron(15).is_err());
    }

    #[test]
    fn regular_connected_triangle_free() {
        for n in 4..=10 {
            let g = build_associahedron(n).unwrap();
            let c = catalan_count(n) as usize;
            assert_eq!(g.vertex_count(), c);
            assert_eq!(g.degree_tag(), Some(n - 3));
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), c * (n - 3) / 2);
            assert_eq!(g.triangle_count(), 0, "n = {n}");
        }
    }

    #[test]
    fn vertex_labels_match_flips() {
        let a = Associahedron::new(7).unwrap();
        for (u, v) in a.graph().edges() {
            assert_eq!(a.triangulation(u).shared_count(a.triangulation(v)), 7 - 4);
        }
        for (v, t) in a.triangulations().iter().enumerate() {
            assert_eq!(a.index_of(t), Some(v));
        }
    }

    #[test]
    fn slice_sizes_are_catalan_products() {
        for n in 5..=10 {
            let a = Associahedron::new(n).unwrap();
            for k in 3..n {
                let d = Diagonal::new(n, 1, k).unwrap();
                let expected = catalan_count(k) * catalan_count(n - k + 2);
                assert_eq!(a.containing(d).len() as u64, expected, "n = {n}, k = {k}");
            }
        }
        let hex13 = diagonal_slice(6, Diagonal::new(6, 1, 3).unwrap()).unwrap();
        assert_eq!(hex13.vertex_count(), 5);
        assert!(diagonal_slice(6, Diagonal::new(8, 1, 7).unwrap()).is_err());
    }
}
