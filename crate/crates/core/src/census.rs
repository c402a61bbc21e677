//! Pentagon (5-cycle) and hexagon (copies of the hexagon flip graph) counts through
//! the vertices and edges of a flip graph.
//!
//! Each count has two routes: a closed form read off the dual tree or the flip
//! quadrilateral, and a brute-force oracle working on the graph or on the raw
//! polygon geometry.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flipgraph::{build_associahedron, Associahedron};
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::triangulation::{is_side, Diagonal, Triangulation};
use crate::Limits;

fn choose2(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

fn choose3(d: usize) -> usize {
    d * d.saturating_sub(1) * d.saturating_sub(2) / 6
}

/// 5-cycles through `t`, as `sum_v binom(d_v, 2)` over its dual tree (`= n - 6 + ears`).
pub fn pentagon_count_vertex_formula(t: &Triangulation) -> usize {
    t.dual_tree().degrees.iter().map(|&d| choose2(d)).sum()
}

fn check_oracle_size(g: &Graph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        return Err(Error::Capacity { what: "cycle oracle", size: g.vertex_count(), limit });
    }
    Ok(())
}

/// Distinct 5-cycles of `g` through `v`, by walking every simple closed path of length 5.
pub fn pentagon_count_vertex_oracle(g: &Graph, v: usize, limit: usize) -> Result<usize> {
    check_oracle_size(g, limit)?;
    let mut closed = 0;
    for &a in g.neighbors(v) {
        let a = a as usize;
        for &b in g.neighbors(a) {
            let b = b as usize;
            if b == v {
                continue;
            }
            for &c in g.neighbors(b) {
                let c = c as usize;
                if c == v || c == a {
                    continue;
                }
                for &d in g.neighbors(c) {
                    let d = d as usize;
                    if d != v && d != a && d != b && g.has_edge(d, v) {
                        closed += 1;
                    }
                }
            }
        }
    }
    // each cycle is walked once in each direction
    Ok(closed / 2)
}

/// Distinct 5-cycles of `g` through the edge `u-v`.
pub fn pentagon_count_edge_oracle(g: &Graph, u: usize, v: usize, limit: usize) -> Result<usize> {
    check_oracle_size(g, limit)?;
    if !g.has_edge(u, v) {
        return Err(Error::invalid(alloc::format!("{u}-{v} is not an edge")));
    }
    let mut count = 0;
    for &a in g.neighbors(v) {
        let a = a as usize;
        if a == u {
            continue;
        }
        for &b in g.neighbors(a) {
            let b = b as usize;
            if b == u || b == v {
                continue;
            }
            for &c in g.neighbors(b) {
                let c = c as usize;
                if c != v && c != a && g.has_edge(c, u) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Total number of 5-cycles in `g`; each cycle is counted from its smallest vertex.
pub fn five_cycle_total(g: &Graph, limit: usize) -> Result<usize> {
    check_oracle_size(g, limit)?;
    let mut twice = 0;
    for s in 0..g.vertex_count() {
        let above = |x: u32| x as usize > s;
        for &a in g.neighbors(s).iter().filter(|&&x| above(x)) {
            for &b in g.neighbors(a as usize).iter().filter(|&&x| above(x)) {
                for &c in g.neighbors(b as usize).iter().filter(|&&x| above(x) && x != a) {
                    for &d in g.neighbors(c as usize).iter().filter(|&&x| above(x) && x != a && x != b) {
                        if g.has_edge(d as usize, s) {
                            twice += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(twice / 2)
}

/// The diagonal removed and the one added by the flip from `t` to `t2`.
fn flip_pair(t: &Triangulation, t2: &Triangulation) -> Result<(Diagonal, Diagonal)> {
    let n = t.n();
    if t2.n() != n || t.shared_count(t2) + 4 != n || n < 4 {
        return Err(Error::invalid("triangulations are not adjacent in the flip graph"));
    }
    let removed = t.diagonals().iter().copied().find(|d| !t2.contains(*d));
    let added = t2.diagonals().iter().copied().find(|d| !t.contains(*d));
    match (removed, added) {
        (Some(r), Some(a)) => Ok((r, a)),
        _ => Err(Error::invalid("triangulations are not adjacent in the flip graph")),
    }
}

/// Corners of the flip quadrilateral, ascending.
fn quadrilateral(r: Diagonal, a: Diagonal) -> [usize; 4] {
    let (p, q) = r.endpoints();
    let (x, y) = a.endpoints();
    let mut c = [p, q, x, y];
    c.sort_unstable();
    c
}

fn quad_sides(q: [usize; 4]) -> [(usize, usize); 4] {
    [(q[0], q[1]), (q[1], q[2]), (q[2], q[3]), (q[0], q[3])]
}

/// 5-cycles through the edge `t-t2`: sides of the flip quadrilateral that are
/// diagonals rather than polygon sides.
pub fn pentagon_count_edge(t: &Triangulation, t2: &Triangulation) -> Result<usize> {
    let (r, a) = flip_pair(t, t2)?;
    let n = t.n();
    Ok(quad_sides(quadrilateral(r, a)).iter().filter(|&&(i, j)| !is_side(n, i, j)).count())
}

/// Connected 4-node subtrees of the dual tree, split by shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct HexagonCount {
    /// Paths on four nodes: `sum over dual edges xy of (d_x - 1)(d_y - 1)`.
    pub paths: usize,
    /// Claws: `sum over nodes of binom(d_v, 3)`.
    pub stars: usize,
}

impl HexagonCount {
    pub fn total(&self) -> usize {
        self.paths + self.stars
    }
}

/// Copies of the hexagon flip graph through `t`, from its dual tree.
pub fn hexagon_count_vertex_formula(t: &Triangulation) -> HexagonCount {
    let dt = t.dual_tree();
    let paths = dt
        .edges
        .iter()
        .map(|e| (dt.degrees[e.a] - 1) * (dt.degrees[e.b] - 1))
        .sum();
    let stars = dt.degrees.iter().map(|&d| choose3(d)).sum();
    HexagonCount { paths, stars }
}

/// Vertex counts of the faces cut out of the `n`-gon by `diagonals`.
pub fn face_sizes(n: usize, diagonals: &[Diagonal]) -> Vec<usize> {
    let mut pending: Vec<Vec<usize>> = vec![(1..=n).collect()];
    let mut done = Vec::new();
    while let Some(face) = pending.pop() {
        let k = face.len();
        let split = diagonals.iter().find_map(|d| {
            let (i, j) = d.endpoints();
            let pi = face.iter().position(|&v| v == i)?;
            let pj = face.iter().position(|&v| v == j)?;
            let gap = pj.abs_diff(pi);
            (gap >= 2 && gap <= k - 2).then_some((pi.min(pj), pi.max(pj)))
        });
        match split {
            Some((a, b)) => {
                let inner = face[a..=b].to_vec();
                let mut outer = face[..=a].to_vec();
                outer.extend_from_slice(&face[b..]);
                pending.push(inner);
                pending.push(outer);
            }
            None => done.push(k),
        }
    }
    done.sort_unstable();
    done
}

/// Triples of diagonals of `t` whose removal opens a hexagonal face.
pub fn hexagon_count_vertex_oracle(t: &Triangulation, max_n: usize) -> Result<usize> {
    let n = t.n();
    if n > max_n {
        return Err(Error::Capacity { what: "hexagon oracle polygon", size: n, limit: max_n });
    }
    let ds = t.diagonals();
    let m = ds.len();
    let mut count = 0;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let rest: Vec<Diagonal> = (0..m).filter(|&x| x != a && x != b && x != c).map(|x| ds[x]).collect();
                if face_sizes(n, &rest).contains(&6) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Copies of the hexagon flip graph containing the edge `t-t2`.
///
/// The shared diagonals cut the polygon into the flip quadrilateral `Q` and triangles.
/// A hexagon around `Q` adds either two triangles on distinct sides of `Q`, or one
/// triangle on a side of `Q` and a second triangle beyond one of its other sides.
pub fn hexagon_count_edge(t: &Triangulation, t2: &Triangulation) -> Result<usize> {
    let (r, a) = flip_pair(t, t2)?;
    let n = t.n();
    let q = quadrilateral(r, a);
    let mut open_sides = 0;
    let mut chains = 0;
    for (x, y) in quad_sides(q) {
        if is_side(n, x, y) {
            continue;
        }
        open_sides += 1;
        // the triangle across x-y lies on the side of x-y away from Q
        let inside_q = q.iter().any(|&c| c > x && c < y);
        let apex = if inside_q {
            (y + 1..=n).chain(1..x).find(|&c| t.has_edge(x, c) && t.has_edge(c, y))
        } else {
            (x + 1..y).find(|&c| t.has_edge(x, c) && t.has_edge(c, y))
        }
        .expect("a diagonal side of Q borders a triangle");
        let (s1, s2) = ((x.min(apex), x.max(apex)), (y.min(apex), y.max(apex)));
        chains += [s1, s2].iter().filter(|&&(i, j)| !is_side(n, i, j)).count();
    }
    Ok(choose2(open_sides) + chains)
}

/// Whole-graph search for copies of the hexagon flip graph: vertex sets of the form
/// "all triangulations sharing a fixed set of `n - 6` diagonals" that induce a graph
/// isomorphic to the hexagon flip graph. Returns per-vertex counts and per-edge counts
/// aligned with `assoc.graph().edges()`.
pub fn hexagon_copies_oracle(assoc: &Associahedron, limits: &Limits) -> Result<(Vec<usize>, Vec<usize>)> {
    let g = assoc.graph();
    let n = assoc.n();
    check_oracle_size(g, limits.oracle_vertices)?;
    let mut per_vertex = vec![0usize; g.vertex_count()];
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut per_edge = vec![0usize; edges.len()];
    if n < 6 {
        return Ok((per_vertex, per_edge));
    }
    let a6 = build_associahedron(6)?;
    let mut groups: BTreeMap<Vec<Diagonal>, Vec<usize>> = BTreeMap::new();
    for (v, t) in assoc.triangulations().iter().enumerate() {
        let ds = t.diagonals();
        let m = ds.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    let key: Vec<Diagonal> =
                        (0..m).filter(|&x| x != a && x != b && x != c).map(|x| ds[x]).collect();
                    groups.entry(key).or_default().push(v);
                }
            }
        }
    }
    let edge_pos: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for members in groups.values() {
        if members.len() != a6.vertex_count() {
            continue;
        }
        let (sub, remap) = g.induced_subgraph(members)?;
        if !is_isomorphic(&sub, &a6, limits.iso_vertices)? {
            continue;
        }
        for &v in members {
            per_vertex[v] += 1;
        }
        for (x, y) in sub.edges() {
            per_edge[edge_pos[&(remap[x], remap[y])]] += 1;
        }
    }
    Ok((per_vertex, per_edge))
}

/// Per-vertex and per-edge pentagon and hexagon counts for a whole flip graph.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub ears: Vec<usize>,
    pub pentagon_formula: Vec<usize>,
    pub pentagon_oracle: Option<Vec<usize>>,
    /// Empty below `n = 6`.
    pub hexagon_formula: Vec<HexagonCount>,
    pub hexagon_oracle: Option<Vec<usize>>,
    /// Edges in `Graph::edges` order.
    pub edges: Vec<(usize, usize)>,
    pub edge_pentagon: Vec<usize>,
    pub edge_pentagon_oracle: Option<Vec<usize>>,
    pub edge_hexagon: Vec<usize>,
    pub edge_hexagon_oracle: Option<Vec<usize>>,
}

fn min_max(xs: impl IntoIterator<Item = usize>) -> Option<(usize, usize)> {
    xs.into_iter().fold(None, |acc, x| match acc {
        None => Some((x, x)),
        Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
    })
}

impl CensusReport {
    pub fn pentagon_vertex_range(&self) -> Option<(usize, usize)> {
        min_max(self.pentagon_formula.iter().copied())
    }

    pub fn pentagon_edge_range(&self) -> Option<(usize, usize)> {
        min_max(self.edge_pentagon.iter().copied())
    }

    pub fn hexagon_vertex_range(&self) -> Option<(usize, usize)> {
        min_max(self.hexagon_formula.iter().map(HexagonCount::total))
    }

    pub fn hexagon_edge_range(&self) -> Option<(usize, usize)> {
        min_max(self.edge_hexagon.iter().copied())
    }

    /// Formula counts agree with every oracle that was run.
    pub fn formulas_match_oracles(&self) -> bool {
        let hex_totals: Vec<usize> = self.hexagon_formula.iter().map(HexagonCount::total).collect();
        let same = |a: &[usize], b: &Option<Vec<usize>>| b.as_ref().is_none_or(|b| a == &b[..]);
        same(&self.pentagon_formula, &self.pentagon_oracle)
            && same(&self.edge_pentagon, &self.edge_pentagon_oracle)
            && (self.hexagon_formula.is_empty() || same(&hex_totals, &self.hexagon_oracle))
            && (self.edge_hexagon.is_empty() || same(&self.edge_hexagon, &self.edge_hexagon_oracle))
    }
}

/// Runs every formula, and optionally every oracle, over the flip graph.
pub fn census(assoc: &Associahedron, with_oracles: bool, limits: &Limits) -> Result<CensusReport> {
    let g = assoc.graph();
    let n = assoc.n();
    let ts = assoc.triangulations();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let ears = ts.iter().map(Triangulation::ear_count).collect();
    let pentagon_formula = ts.iter().map(pentagon_count_vertex_formula).collect();
    let edge_pentagon =
        edges.iter().map(|&(u, v)| pentagon_count_edge(&ts[u], &ts[v])).collect::<Result<Vec<_>>>()?;
    let hexes = n >= 6;
    let hexagon_formula = if hexes { ts.iter().map(hexagon_count_vertex_formula).collect() } else { Vec::new() };
    let edge_hexagon = if hexes {
        edges.iter().map(|&(u, v)| hexagon_count_edge(&ts[u], &ts[v])).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    let mut report = CensusReport {
        n,
        ears,
        pentagon_formula,
        pentagon_oracle: None,
        hexagon_formula,
        hexagon_oracle: None,
        edges,
        edge_pentagon,
        edge_pentagon_oracle: None,
        edge_hexagon,
        edge_hexagon_oracle: None,
    };
    if with_oracles {
        let lim = limits.oracle_vertices;
        report.pentagon_oracle = Some(
            (0..g.vertex_count()).map(|v| pentagon_count_vertex_oracle(g, v, lim)).collect::<Result<_>>()?,
        );
        report.edge_pentagon_oracle = Some(
            report.edges.iter().map(|&(u, v)| pentagon_count_edge_oracle(g, u, v, lim)).collect::<Result<_>>()?,
        );
        if hexes {
            let (per_vertex, per_edge) = hexagon_copies_oracle(assoc, limits)?;
            report.hexagon_oracle = Some(per_vertex);
            report.edge_hexagon_oracle = Some(per_edge);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::enumerate_triangulations;

    fn tri(n: usize, ds: &[(usize, usize)]) -> Triangulation {
        Triangulation::new(n, ds.iter().map(|&(i, j)| Diagonal::new(n, i, j).unwrap()).collect()).unwrap()
    }

    /// Snake triangulation of an octagon: dual tree is a path on six nodes.
    fn snake8() -> Triangulation {
        tri(8, &[(1, 3), (3, 8), (3, 7), (4, 7), (4, 6)])
    }

    #[test]
    fn pentagon_vertex_formula_examples() {
        for t in enumerate_triangulations(5).unwrap() {
            assert_eq!(pentagon_count_vertex_formula(&t), 1);
        }
        assert_eq!(pentagon_count_vertex_formula(&tri(6, &[(1, 3), (3, 5), (1, 5)])), 3);
        assert_eq!(pentagon_count_vertex_formula(&Triangulation::fan(6).unwrap()), 2);
        for n in 5..=9 {
            for t in enumerate_triangulations(n).unwrap() {
                let f = pentagon_count_vertex_formula(&t);
                assert_eq!(f + 6, n + t.ear_count());
                assert!(f + 4 >= n);
            }
        }
    }

    #[test]
    fn pentagon_oracle_examples() {
        let a5 = build_associahedron(5).unwrap();
        for v in 0..5 {
            assert_eq!(pentagon_count_vertex_oracle(&a5, v, 100).unwrap(), 1);
        }
        let c6 = Graph::cycle(6);
        assert_eq!(pentagon_count_vertex_oracle(&c6, 0, 100).unwrap(), 0);
        let p = Graph::petersen();
        for v in 0..10 {
            assert_eq!(pentagon_count_vertex_oracle(&p, v, 100).unwrap(), 6);
        }
        for (u, v) in p.edges() {
            assert_eq!(pentagon_count_edge_oracle(&p, u, v, 100).unwrap(), 4);
        }
        assert_eq!(five_cycle_total(&p, 100).unwrap(), 12);
        assert!(pentagon_count_vertex_oracle(&p, 0, 9).is_err());
    }

    #[test]
    fn pentagon_edge_examples() {
        let a5 = Associahedron::new(5).unwrap();
        for (u, v) in a5.graph().edges() {
            assert_eq!(pentagon_count_edge(a5.triangulation(u), a5.triangulation(v)).unwrap(), 1);
        }
        let t = tri(6, &[(1, 3), (1, 5), (3, 5)]);
        let t2 = tri(6, &[(1, 3), (1, 5), (1, 4)]);
        assert_eq!(pentagon_count_edge(&t, &t2).unwrap(), 2);
        assert!(pentagon_count_edge(&t, &t).is_err());
        assert!(pentagon_count_edge(&t, &Triangulation::fan(6).unwrap()).is_ok());
        assert!(pentagon_count_edge(&t, &tri(6, &[(2, 4), (2, 6), (4, 6)])).is_err());
    }

    #[test]
    fn hexagon_vertex_examples() {
        for t in enumerate_triangulations(6).unwrap() {
            assert_eq!(hexagon_count_vertex_formula(&t).total(), 1);
            assert_eq!(hexagon_count_vertex_oracle(&t, 14).unwrap(), 1);
        }
        let fan7 = Triangulation::fan(7).unwrap();
        assert_eq!(hexagon_count_vertex_formula(&fan7), HexagonCount { paths: 2, stars: 0 });
        assert_eq!(hexagon_count_vertex_oracle(&fan7, 14).unwrap(), 2);
        let snake = snake8();
        let degrees = snake.dual_tree().degree_counts();
        assert_eq!(degrees, [0, 2, 4, 0]);
        assert_eq!(hexagon_count_vertex_oracle(&snake, 14).unwrap(), 3);
        assert_eq!(hexagon_count_vertex_formula(&snake).total(), 3);
        assert!(hexagon_count_vertex_oracle(&snake, 7).is_err());
    }

    #[test]
    fn face_sizes_of_partial_triangulations() {
        assert_eq!(face_sizes(6, &[]), vec![6]);
        let d = |i, j| Diagonal::new(8, i, j).unwrap();
        assert_eq!(face_sizes(8, &[d(1, 4)]), vec![4, 6]);
        assert_eq!(face_sizes(8, &[d(1, 4), d(4, 8), d(5, 8)]), vec![3, 3, 4, 4]);
    }

    #[test]
    fn hexagon_edge_counts_small() {
        let a6 = Associahedron::new(6).unwrap();
        for (u, v) in a6.graph().edges() {
            assert_eq!(hexagon_count_edge(a6.triangulation(u), a6.triangulation(v)).unwrap(), 1);
        }
    }

    #[test]
    fn census_formulas_agree_with_oracles() {
        for n in 5..=8 {
            let a = Associahedron::new(n).unwrap();
            let report = census(&a, true, &Limits::default()).unwrap();
            assert!(report.formulas_match_oracles(), "n = {n}");
            let (lo, hi) = report.pentagon_edge_range().unwrap();
            assert!(lo >= 1 && hi <= 4);
            // every 5-cycle is seen from each of its five vertices
            let total: usize = report.pentagon_formula.iter().sum();
            assert_eq!(total, 5 * five_cycle_total(a.graph(), 100_000).unwrap());
        }
    }

    #[test]
    fn n4_has_no_odd_structure() {
        let a = Associahedron::new(4).unwrap();
        let report = census(&a, true, &Limits::default()).unwrap();
        assert_eq!(report.pentagon_formula, vec![0, 0]);
        assert_eq!(report.pentagon_oracle, Some(vec![0, 0]));
        assert!(report.hexagon_formula.is_empty());
    }
}
