//! Triangulations of a convex polygon with vertices labelled `1..=n` clockwise.
//!
//! A triangulation is stored as its canonical code: the sorted list of its
//! `n - 3` diagonals, each normalised so that `i < j`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::Limits;

/// Largest polygon the label type can address.
pub const MAX_POLYGON: usize = 64;

/// Number of triangulations of a convex `n`-gon, `C_{n-2}`.
pub fn catalan_count(n: usize) -> u64 {
    assert!(n >= 2, "polygon needs at least two vertices");
    catalan(n - 2)
}

/// Catalan number `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> u64 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2) stays integral at every step.
    let mut c: u64 = 1;
    for k in 0..m as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// A chord `i-j` of the polygon that is not one of its sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    i: u8,
    j: u8,
}

impl Diagonal {
    /// Builds the diagonal between labels `a` and `b` of an `n`-gon, in either order.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if !(4..=MAX_POLYGON).contains(&n) && n != 3 {
            return Err(Error::Range { what: "polygon size", value: n, min: 3, max: MAX_POLYGON });
        }
        if i < 1 || j > n || j - i < 2 || (i == 1 && j == n) {
            return Err(Error::invalid(alloc::format!("{i}-{j} is not a diagonal of a {n}-gon")));
        }
        Ok(Diagonal { i: i as u8, j: j as u8 })
    }

    pub(crate) const fn raw(i: usize, j: usize) -> Self {
        Diagonal { i: i as u8, j: j as u8 }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.i as usize, self.j as usize)
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        let (i, j) = self.endpoints();
        i >= 1 && j <= n && j >= i + 2 && !(i == 1 && j == n)
    }

    /// Strict interleaving of endpoints; diagonals sharing an endpoint never cross.
    fn interleaves(self, other: Diagonal) -> bool {
        let (a, b) = self.endpoints();
        let (c, d) = other.endpoints();
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

/// Whether two diagonals of the same `n`-gon cross in the interior.
pub fn crosses(n: usize, a: Diagonal, b: Diagonal) -> Result<bool> {
    for d in [a, b] {
        if !d.is_valid_for(n) {
            return Err(Error::invalid(alloc::format!("{d} is not a diagonal of a {n}-gon")));
        }
    }
    Ok(a.interleaves(b))
}

/// True if `i-j` (with `i < j`) is a side of the `n`-gon.
#[inline]
pub(crate) fn is_side(n: usize, i: usize, j: usize) -> bool {
    j == i + 1 || (i == 1 && j == n)
}

/// A maximal set of pairwise non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: u8,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    /// Validates and canonicalises a set of diagonals.
    pub fn new(n: usize, mut diagonals: Vec<Diagonal>) -> Result<Self> {
        if !(3..=MAX_POLYGON).contains(&n) {
            return Err(Error::Range { what: "polygon size", value: n, min: 3, max: MAX_POLYGON });
        }
        if diagonals.len() != n - 3 {
            return Err(Error::invalid(alloc::format!(
                "a triangulation of a {n}-gon has {} diagonals, got {}",
                n - 3,
                diagonals.len()
            )));
        }
        if let Some(d) = diagonals.iter().find(|d| !d.is_valid_for(n)) {
            return Err(Error::invalid(alloc::format!("{d} is not a diagonal of a {n}-gon")));
        }
        diagonals.sort_unstable();
        if diagonals.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("repeated diagonal"));
        }
        for (k, a) in diagonals.iter().enumerate() {
            if let Some(b) = diagonals[k + 1..].iter().find(|b| a.interleaves(**b)) {
                return Err(Error::invalid(alloc::format!("diagonals {a} and {b} cross")));
            }
        }
        Ok(Triangulation { n: n as u8, diagonals })
    }

    fn from_sorted(n: usize, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Triangulation { n: n as u8, diagonals }
    }

    /// The fan from vertex 1: diagonals `1-3, 1-4, ..., 1-(n-1)`.
    pub fn fan(n: usize) -> Result<Self> {
        let diagonals = (3..n).map(|j| Diagonal::new(n, 1, j)).collect::<Result<Vec<_>>>()?;
        Triangulation::new(n, diagonals)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical code: diagonals sorted ascending.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    /// Whether `i-j` is an edge of the triangulated polygon (a side or a diagonal).
    pub(crate) fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        is_side(self.n(), i, j) || self.contains(Diagonal::raw(i, j))
    }

    /// The two apices of the triangles on either side of `d`, inner one first.
    fn apices(&self, d: Diagonal) -> (usize, usize) {
        let (a, b) = d.endpoints();
        let n = self.n();
        let inner = (a + 1..b).find(|&c| self.has_edge(a, c) && self.has_edge(c, b));
        let outer = (b + 1..=n).chain(1..a).find(|&c| self.has_edge(a, c) && self.has_edge(c, b));
        match (inner, outer) {
            (Some(x), Some(y)) => (x, y),
            _ => unreachable!("every diagonal of a triangulation borders two triangles"),
        }
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by its two triangles.
    pub fn flip(&self, d: Diagonal) -> Result<(Diagonal, Triangulation)> {
        let pos = self
            .diagonals
            .binary_search(&d)
            .map_err(|_| Error::NotPresent { i: d.i, j: d.j })?;
        let (x, y) = self.apices(d);
        let replacement = Diagonal::raw(x.min(y), x.max(y));
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(pos);
        let at = diagonals.binary_search(&replacement).unwrap_err();
        diagonals.insert(at, replacement);
        Ok((replacement, Triangulation::from_sorted(self.n(), diagonals)))
    }

    /// The `n - 3` triangulations one flip away, in diagonal order.
    pub fn neighbors(&self) -> Vec<Triangulation> {
        self.diagonals
            .iter()
            .map(|&d| self.flip(d).expect("own diagonal").1)
            .collect()
    }

    /// Number of diagonals shared with `other`.
    pub fn shared_count(&self, other: &Triangulation) -> usize {
        self.diagonals.iter().filter(|d| other.contains(**d)).count()
    }

    /// Triangles paired with the tree built by peeling from the side `1-n`.
    pub fn dual_tree(&self) -> DualTree {
        let n = self.n();
        let mut triangles = Vec::with_capacity(n - 2);
        let mut edges = Vec::with_capacity(n.saturating_sub(3));
        // (i, j, parent) with i-j an edge whose inner side is still untriangulated
        let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(1, n, None)];
        while let Some((i, j, parent)) = stack.pop() {
            let k = (i + 1..j)
                .find(|&c| self.has_edge(i, c) && self.has_edge(c, j))
                .expect("triangulated region");
            let t = triangles.len();
            triangles.push([i, k, j]);
            if let Some(p) = parent {
                edges.push(DualEdge { a: p, b: t, diagonal: Diagonal::raw(i, j) });
            }
            if j - k >= 2 {
                stack.push((k, j, Some(t)));
            }
            if k - i >= 2 {
                stack.push((i, k, Some(t)));
            }
        }
        let mut degrees = vec![0usize; triangles.len()];
        for e in &edges {
            degrees[e.a] += 1;
            degrees[e.b] += 1;
        }
        DualTree { triangles, edges, degrees }
    }

    /// Number of ears, i.e. leaves of the dual tree.
    pub fn ear_count(&self) -> usize {
        self.dual_tree().degree_counts()[1]
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diagonals.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// An edge of the dual tree, labelled with the diagonal the two triangles share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    pub diagonal: Diagonal,
}

/// Tree on the triangles of a triangulation; triangles are adjacent when they share a diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    /// Vertex triples `[i, k, j]` with `i < k < j`.
    pub triangles: Vec<[usize; 3]>,
    pub edges: Vec<DualEdge>,
    pub degrees: Vec<usize>,
}

impl DualTree {
    pub fn node_count(&self) -> usize {
        self.triangles.len()
    }

    /// `[_, t1, t2, t3]`: how many nodes have degree 1, 2 and 3.
    pub fn degree_counts(&self) -> [usize; 4] {
        let mut t = [0usize; 4];
        for &d in &self.degrees {
            t[d.min(3)] += 1;
        }
        t
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    /// Nodes whose removal leaves components of at most `node_count / 2` nodes.
    pub fn centroids(&self) -> Vec<usize> {
        let m = self.node_count();
        let adj = self.adjacency();
        // iterative DFS order from node 0, then subtree sizes bottom-up
        let mut parent = vec![usize::MAX; m];
        let mut order = Vec::with_capacity(m);
        let mut stack = vec![0usize];
        parent[0] = 0;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut size = vec![1usize; m];
        for &v in order.iter().rev().take(m.saturating_sub(1)) {
            size[parent[v]] += size[v];
        }
        (0..m)
            .filter(|&v| {
                let largest = adj[v]
                    .iter()
                    .filter(|&&w| parent[w] == v)
                    .map(|&w| size[w])
                    .fold(m - size[v], usize::max);
                2 * largest <= m
            })
            .collect()
    }
}

/// Every triangulation of the `n`-gon, in the order produced by choosing the apex over
/// side `1-n` (ascending) and recursing into the two sub-polygons.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_with(n, &Limits::default())
}

pub fn enumerate_triangulations_with(n: usize, limits: &Limits) -> Result<Vec<Triangulation>> {
    if !(3..=MAX_POLYGON).contains(&n) {
        return Err(Error::Range { what: "polygon size", value: n, min: 3, max: MAX_POLYGON });
    }
    if n > limits.max_n {
        return Err(Error::Capacity { what: "polygon", size: n, limit: limits.max_n });
    }
    // by_size[m]: triangulations of the polygon 0..m-1 (relative labels), apex over side 0-(m-1)
    let mut by_size: Vec<Vec<Vec<Diagonal>>> = vec![Vec::new(); n + 1];
    by_size[2] = vec![Vec::new()];
    for m in 3..=n {
        let mut all = Vec::with_capacity(catalan(m - 2) as usize);
        let last = m - 1;
        for k in 1..last {
            let (left, right) = (&by_size[k + 1], &by_size[m - k]);
            for l in left {
                for r in right {
                    let mut ds = Vec::with_capacity(m - 3);
                    if k >= 2 {
                        ds.push(Diagonal::raw(0, k));
                    }
                    ds.extend_from_slice(l);
                    if last - k >= 2 {
                        ds.push(Diagonal::raw(k, last));
                    }
                    ds.extend(r.iter().map(|d| Diagonal::raw(d.i as usize + k, d.j as usize + k)));
                    all.push(ds);
                }
            }
        }
        by_size[m] = all;
    }
    let top = core::mem::take(&mut by_size[n]);
    Ok(top
        .into_iter()
        .map(|ds| {
            let mut ds: Vec<Diagonal> =
                ds.into_iter().map(|d| Diagonal::raw(d.i as usize + 1, d.j as usize + 1)).collect();
            ds.sort_unstable();
            Triangulation::from_sorted(n, ds)
        })
        .collect())
}
