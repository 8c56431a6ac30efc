//! Simple undirected graphs with a canonical edge order, edge subsets over that
//! order, and the degree bookkeeping every other module builds on.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. Every
/// [`EdgeSubset`] over the graph is indexed by this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    // incident edge index for each entry of `adj`
    inc: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from raw vertex pairs. Pairs may come in either
    /// orientation; duplicates and loops are rejected rather than merged.
    pub fn new(n: usize, raw_edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in raw_edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            inc[u].push(i);
            adj[v].push(u);
            inc[v].push(i);
        }
        for v in 0..n {
            let mut pairs: Vec<_> = adj[v].iter().copied().zip(inc[v].iter().copied()).collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            inc[v] = pairs.iter().map(|p| p.1).collect();
        }
        Graph { n, edges, adj, inc }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge indices incident to `v`, aligned with [`Graph::neighbors`].
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    /// The common degree, if the graph is regular. `None` for `n = 0`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.is_regular(d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_labels().1 == 1
    }

    /// Component index per vertex (numbered by smallest member) and the count.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Induced subgraph on `vertices` (sorted, distinct), relabeled `0..k` in
    /// the given order. The returned map sends local labels back to host labels.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                let (a, b) = (local[u], local[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        (Graph::from_sorted(vertices.len(), edges), vertices.to_vec())
    }

    /// Maximal connected pieces, ordered by their smallest vertex label.
    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut sets = vec![Vec::new(); count];
        for v in 0..self.n {
            sets[label[v]].push(v);
        }
        sets.into_iter()
            .map(|vertices| {
                let (graph, map) = self.induced(&vertices);
                Component { vertices, graph, map }
            })
            .collect()
    }

    /// A shortest cycle, or `None` for forests.
    ///
    /// BFS is run from every root in increasing label order, scanning
    /// neighbors in increasing order; the first cycle of globally minimal
    /// length wins. The cycle starts at its root and follows the BFS tree
    /// branch of the closing edge's first endpoint.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            let mut closing: Option<(usize, usize, usize)> = None;
            while let Some(x) = queue.pop_front() {
                let bound = closing.map_or(best.as_ref().map_or(usize::MAX, |b| b.0), |c| c.0);
                if 2 * dist[x] + 1 >= bound {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if y != parent[x] {
                        let len = dist[x] + dist[y] + 1;
                        let cur = closing.map_or(best.as_ref().map_or(usize::MAX, |b| b.0), |c| c.0);
                        if len < cur {
                            closing = Some((len, x, y));
                        }
                    }
                }
            }
            if let Some((len, x, y)) = closing {
                let mut forward = vec![x];
                while *forward.last().unwrap() != root {
                    let p = parent[*forward.last().unwrap()];
                    forward.push(p);
                }
                forward.reverse();
                let mut back = vec![y];
                while parent[*back.last().unwrap()] != root {
                    let p = parent[*back.last().unwrap()];
                    back.push(p);
                }
                forward.extend(back);
                debug_assert_eq!(forward.len(), len);
                best = Some((len, forward));
            }
        }
        best.map(|b| b.1)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| self.adj[u].iter().any(|w| self.adj[v].binary_search(w).is_ok()))
    }
}

/// One connected component together with its relabeled induced graph.
#[derive(Debug, Clone)]
pub struct Component {
    /// Host labels, sorted.
    pub vertices: Vec<usize>,
    pub graph: Graph,
    /// `map[local] = host label`.
    pub map: Vec<usize>,
}

/// A set of edges of a host graph, indexed by the host's canonical edge order.
/// Membership means the edge has color 1, i.e. belongs to the subgraph `H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    len: usize,
    words: Vec<u64>,
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubset({}/{}: {:?})", self.count(), self.len, self.iter().collect::<Vec<_>>())
    }
}

impl EdgeSubset {
    pub fn empty(host_edge_count: usize) -> Self {
        EdgeSubset { len: host_edge_count, words: vec![0; host_edge_count.div_ceil(64)] }
    }

    pub fn full(host_edge_count: usize) -> Self {
        let mut s = Self::empty(host_edge_count);
        for i in 0..host_edge_count {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(host_edge_count: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(host_edge_count);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Subset whose bit `i` is bit `i` of `mask` (hosts with at most 64 edges).
    pub fn from_mask(host_edge_count: usize, mask: u64) -> Self {
        assert!(host_edge_count <= 64);
        let mut s = Self::empty(host_edge_count);
        if host_edge_count > 0 {
            let keep = if host_edge_count == 64 { u64::MAX } else { (1u64 << host_edge_count) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// Edges given as vertex pairs of `g`. Unknown pairs yield `None`.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Option<Self> {
        let mut s = Self::empty(g.edge_count());
        for &(u, v) in pairs {
            s.insert(g.edge_index(u, v)?);
        }
        Some(s)
    }

    pub fn host_edge_count(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.iter().map(|i| g.edge(i)).collect()
    }

    /// Per-vertex degree of the subgraph inside `g`.
    pub fn degrees(&self, g: &Graph) -> Result<Vec<usize>> {
        check_size(g, self)?;
        let mut deg = vec![0; g.order()];
        for i in self.iter() {
            let (u, v) = g.edge(i);
            deg[u] += 1;
            deg[v] += 1;
        }
        Ok(deg)
    }
}

fn check_size(g: &Graph, s: &EdgeSubset) -> Result<()> {
    if s.host_edge_count() != g.edge_count() {
        return Err(Error::SizeMismatch { expected: g.edge_count(), got: s.host_edge_count() });
    }
    Ok(())
}

/// Bitwise complement of `s` over the edges of `g`.
pub fn complement_within(g: &Graph, s: &EdgeSubset) -> Result<EdgeSubset> {
    check_size(g, s)?;
    let mut out = s.clone();
    for i in 0..g.edge_count() {
        out.toggle(i);
    }
    Ok(out)
}

/// Vertex counts per subgraph degree, highest degree first: `(n_d, ..., n_0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeProfile(Vec<usize>);

impl DegreeProfile {
    /// `counts` lists `n_d` first and `n_0` last.
    pub fn new(counts: Vec<usize>) -> Self {
        DegreeProfile(counts)
    }

    /// Profile of a degree sequence inside a `d`-regular host.
    pub fn from_degrees(d: usize, degrees: &[usize]) -> Self {
        let mut counts = vec![0; d + 1];
        for &k in degrees {
            counts[d - k] += 1;
        }
        DegreeProfile(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn host_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `m(H, k)`: vertices of subgraph degree `k`.
    pub fn count(&self, k: usize) -> usize {
        self.0[self.host_degree() - k]
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// The profile of the complementary subgraph.
    pub fn reversed(&self) -> Self {
        DegreeProfile(self.0.iter().rev().copied().collect())
    }

    pub fn odd_degree_count(&self) -> usize {
        (0..=self.host_degree()).filter(|k| k % 2 == 1).map(|k| self.count(k)).sum()
    }

    pub fn satisfies_handshake(&self) -> bool {
        self.odd_degree_count().is_multiple_of(2)
    }

    /// `max_k |m(H,k) - n/(d+1)|` as an exact rational.
    pub fn max_deviation(&self) -> Ratio<i64> {
        let n = self.order() as i64;
        let parts = self.0.len() as i64;
        if parts == 0 {
            return Ratio::from_integer(0);
        }
        let mean = Ratio::new(n, parts);
        self.0.iter().map(|&c| (Ratio::from_integer(c as i64) - mean).abs()).max().unwrap()
    }

    /// Componentwise sum. Both profiles must share the host degree.
    pub fn add(&self, other: &DegreeProfile) -> Self {
        assert_eq!(self.0.len(), other.0.len());
        DegreeProfile(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Profile of `s` inside the regular graph `g`, inferring its degree.
pub fn profile_of(g: &Graph, s: &EdgeSubset) -> Result<DegreeProfile> {
    let d = match g.order() {
        0 => 0,
        _ => g.regular_degree().ok_or(Error::NotRegular(g.degree(0)))?,
    };
    profile_with_degree(g, s, d)
}

/// Profile of `s` inside `g`, which must be `d`-regular.
pub fn profile_with_degree(g: &Graph, s: &EdgeSubset, d: usize) -> Result<DegreeProfile> {
    if !g.is_regular(d) {
        return Err(Error::NotRegular(d));
    }
    Ok(DegreeProfile::from_degrees(d, &s.degrees(g)?))
}

/// Structural tag of a small connected cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmallClass {
    K4,
    K33,
    Prism,
    Other,
}

/// Connected cubic graphs on at most six vertices are exactly K4, K3,3 and
/// the prism; order and triangles tell them apart.
pub fn classify_small(g: &Graph) -> Result<SmallClass> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(match g.order() {
        4 => SmallClass::K4,
        6 if g.has_triangle() => SmallClass::Prism,
        6 => SmallClass::K33,
        _ => SmallClass::Other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, e).unwrap()
    }

    fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(k4().edge_count(), 6);
        assert_eq!(Graph::new(3, [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn regularity() {
        assert!(k4().is_regular(3));
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!p3.is_regular(2));
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(c6.is_regular(2));
    }

    #[test]
    fn components_of_two_k4() {
        let mut e = k4().edges().to_vec();
        e.extend(k4().edges().iter().map(|&(u, v)| (u + 4, v + 4)));
        let g = Graph::new(8, e).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertices, vec![4, 5, 6, 7]);
        for c in &comps {
            assert_eq!(classify_small(&c.graph), Ok(SmallClass::K4));
        }
        assert_eq!(petersen().components().len(), 1);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn girths() {
        assert_eq!(k4().shortest_cycle().unwrap().len(), 3);
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(k33.shortest_cycle().unwrap().len(), 4);
        assert_eq!(petersen().shortest_cycle().unwrap().len(), 5);
        assert_eq!(Graph::new(3, [(0, 1), (1, 2)]).unwrap().shortest_cycle(), None);
        assert_eq!(k4().shortest_cycle().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn complement_reverses_profile() {
        let g = k4();
        let one = EdgeSubset::from_indices(6, [0]);
        assert_eq!(profile_of(&g, &one).unwrap().counts(), &[0, 0, 2, 2]);
        let c = complement_within(&g, &one).unwrap();
        assert_eq!(profile_of(&g, &c).unwrap().counts(), &[2, 2, 0, 0]);
        assert_eq!(complement_within(&g, &EdgeSubset::empty(6)).unwrap().count(), 6);
        assert_eq!(complement_within(&g, &EdgeSubset::empty(5)), Err(Error::SizeMismatch { expected: 6, got: 5 }));
    }

    #[test]
    fn profiles() {
        let p = petersen();
        assert_eq!(profile_of(&p, &EdgeSubset::full(15)).unwrap().counts(), &[10, 0, 0, 0]);
        let g = prism();
        let h = EdgeSubset::from_pairs(&g, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(profile_of(&g, &h).unwrap().counts(), &[1, 2, 1, 2]);
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(profile_of(&path, &EdgeSubset::empty(2)), Err(Error::NotRegular(1)));
    }

    #[test]
    fn deviation_is_exact() {
        let p = DegreeProfile::new(vec![0, 1, 2, 3]);
        assert_eq!(p.max_deviation(), Ratio::new(3, 2));
        assert_eq!(DegreeProfile::new(vec![3, 2, 3, 2]).max_deviation(), Ratio::new(1, 2));
        assert!(p.satisfies_handshake());
    }

    #[test]
    fn classification() {
        assert_eq!(classify_small(&k4()), Ok(SmallClass::K4));
        assert_eq!(classify_small(&prism()), Ok(SmallClass::Prism));
        assert_eq!(classify_small(&petersen()), Ok(SmallClass::Other));
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(classify_small(&path), Err(Error::NotRegular(3)));
    }
}
