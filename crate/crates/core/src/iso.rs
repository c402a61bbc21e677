//! Small-graph isomorphism and subgraph-copy search by backtracking.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stable colour refinement run on the disjoint union of `a` and `b`.
/// Returns the colours of `a`'s vertices followed by `b`'s.
fn refine_colors(a: &Graph, b: &Graph) -> Vec<usize> {
    let na = a.vertex_count();
    let total = na + b.vertex_count();
    let nbrs = |v: usize| -> &[u32] {
        if v < na {
            a.neighbors(v)
        } else {
            b.neighbors(v - na)
        }
    };
    let offset = |v: usize, w: u32| if v < na { w as usize } else { w as usize + na };
    let mut color: Vec<usize> = (0..total).map(|v| nbrs(v).len()).collect();
    let mut classes = color.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|v| {
                let mut s: Vec<usize> = nbrs(v).iter().map(|&w| color[offset(v, w)]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let palette: BTreeMap<&(usize, Vec<usize>), usize> = signatures
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = signatures.iter().map(|s| palette[s]).collect();
        let next_classes = palette.len();
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

/// Whether an adjacency-preserving bijection between `g` and `h` exists.
///
/// Both graphs must have at most `limit` vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    for size in [g.vertex_count(), h.vertex_count()] {
        if size > limit {
            return Err(Error::Capacity { what: "isomorphism check", size, limit });
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    let color = refine_colors(g, h);
    let (cg, ch) = color.split_at(n);
    let mut hist_g = cg.to_vec();
    let mut hist_h = ch.to_vec();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(false);
    }

    let order = search_order(g, cg);
    let anchor: Vec<Option<usize>> = anchors(g, &order);
    let mut map_g = vec![usize::MAX; n];
    let mut map_h = vec![usize::MAX; n];
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n);

    let consistent = |u: usize, x: usize, map_g: &[usize], map_h: &[usize]| -> bool {
        if cg[u] != ch[x] {
            return false;
        }
        let mut mapped = 0;
        for &w in g.neighbors(u) {
            let fw = map_g[w as usize];
            if fw != usize::MAX {
                if !h.has_edge(fw, x) {
                    return false;
                }
                mapped += 1;
            }
        }
        let mapped_h = h.neighbors(x).iter().filter(|&&y| map_h[y as usize] != usize::MAX).count();
        mapped == mapped_h
    };

    let candidates_for = |depth: usize, map_h: &[usize], map_g: &[usize]| -> Vec<usize> {
        let u = order[depth];
        match anchor[depth] {
            Some(p) => h
                .neighbors(map_g[p])
                .iter()
                .map(|&y| y as usize)
                .filter(|&y| map_h[y] == usize::MAX)
                .collect(),
            None => (0..n).filter(|&y| map_h[y] == usize::MAX && ch[y] == cg[u]).collect(),
        }
    };

    candidates.push(candidates_for(0, &map_h, &map_g));
    cursor.push(0);
    while let Some(depth) = cursor.len().checked_sub(1) {
        let u = order[depth];
        // undo the previous choice at this depth
        if map_g[u] != usize::MAX {
            map_h[map_g[u]] = usize::MAX;
            map_g[u] = usize::MAX;
        }
        let mut chosen = None;
        while cursor[depth] < candidates[depth].len() {
            let x = candidates[depth][cursor[depth]];
            cursor[depth] += 1;
            if consistent(u, x, &map_g, &map_h) {
                chosen = Some(x);
                break;
            }
        }
        match chosen {
            Some(x) => {
                map_g[u] = x;
                map_h[x] = u;
                if depth + 1 == n {
                    return Ok(true);
                }
                candidates.push(candidates_for(depth + 1, &map_h, &map_g));
                cursor.push(0);
            }
            None => {
                candidates.pop();
                cursor.pop();
            }
        }
    }
    Ok(false)
}

/// Breadth-first order per component, each component rooted at a vertex of its rarest colour.
fn search_order(g: &Graph, color: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in color {
        *freq.entry(c).or_default() += 1;
    }
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (freq[&color[v]], color[v], v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> =
                g.neighbors(v).iter().map(|&w| w as usize).filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (freq[&color[w]], color[w], w));
            for w in next {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

/// For each position in `order`, an earlier-placed neighbour if there is one.
fn anchors(g: &Graph, order: &[usize]) -> Vec<Option<usize>> {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().map(|&w| w as usize).find(|&w| pos[w] < i))
        .collect()
}

/// One copy of a pattern inside a host graph: the image vertex set and image edge set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgraphCopy {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphCopy {
    /// Image of `pattern` under `map` (pattern vertex -> host vertex).
    pub fn from_map(pattern: &Graph, map: &[usize]) -> Self {
        let mut vertices = map.to_vec();
        vertices.sort_unstable();
        let mut edges: Vec<(usize, usize)> = pattern
            .edges()
            .map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
            .collect();
        edges.sort_unstable();
        SubgraphCopy { vertices, edges }
    }
}

/// Calls `visit` with every injective map from `pattern` into `host` that sends edges to edges.
pub fn for_each_embedding(pattern: &Graph, host: &Graph, mut visit: impl FnMut(&[usize])) {
    let k = pattern.vertex_count();
    if k == 0 || k > host.vertex_count() {
        return;
    }
    let flat = vec![0usize; k];
    let order = search_order(pattern, &flat);
    let anchor = anchors(pattern, &order);
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];

    fn extend(
        depth: usize,
        ctx: (&Graph, &Graph, &[usize], &[Option<usize>]),
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let (pattern, host, order, anchor) = ctx;
        if depth == order.len() {
            visit(map);
            return;
        }
        let u = order[depth];
        let need = pattern.degree(u);
        let mut try_vertex = |x: usize, map: &mut [usize], used: &mut [bool]| {
            if used[x] || host.degree(x) < need {
                return;
            }
            let ok = pattern.neighbors(u).iter().all(|&w| {
                let fw = map[w as usize];
                fw == usize::MAX || host.has_edge(fw, x)
            });
            if ok {
                map[u] = x;
                used[x] = true;
                extend(depth + 1, ctx, map, used, visit);
                used[x] = false;
                map[u] = usize::MAX;
            }
        };
        match anchor[depth] {
            Some(p) => {
                for &x in host.neighbors(map[p]) {
                    try_vertex(x as usize, map, used);
                }
            }
            None => {
                for x in 0..host.vertex_count() {
                    try_vertex(x, map, used);
                }
            }
        }
    }

    extend(0, (pattern, host, &order, &anchor), &mut map, &mut used, &mut visit);
}

/// Number of automorphisms of `g`.
pub fn automorphism_count(g: &Graph) -> usize {
    let mut count = 0;
    for_each_embedding(g, g, |_| count += 1);
    count
}

/// All distinct subgraphs of `host` isomorphic to `pattern`, in ascending order.
pub fn subgraph_copies(pattern: &Graph, host: &Graph, limit: usize) -> Result<Vec<SubgraphCopy>> {
    if host.vertex_count() > limit {
        return Err(Error::Capacity { what: "subgraph search", size: host.vertex_count(), limit });
    }
    let mut copies = BTreeSet::new();
    for_each_embedding(pattern, host, |map| {
        copies.insert(SubgraphCopy::from_map(pattern, map));
    });
    Ok(copies.into_iter().collect())
}
