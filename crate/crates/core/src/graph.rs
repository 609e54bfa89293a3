//! Finite digraph, oriented graph and undirected graph representations.
//!
//! Vertices are dense integers `0..order`. All structures are immutable after
//! construction; every query is a pure function, so values can be shared
//! freely across threads.

use std::fmt;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(u32, usize),
    #[error("loop arc ({0},{0}) rejected")]
    LoopArc(u32),
    #[error("symmetric arc pair ({0},{1}) present; not an oriented graph")]
    SymmetricPair(u32, u32),
    #[error("self edge {{{0},{0}}} rejected")]
    SelfEdge(u32),
}

/// A finite loopless digraph. Symmetric pairs (both `(u,v)` and `(v,u)`)
/// are representable; see [`OrientedGraph`] for the antisymmetric variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    arcs: Vec<(u32, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
}

impl Digraph {
    pub fn new(order: usize, arcs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (u, v) in arcs {
            if u as usize >= order {
                return Err(GraphError::VertexOutOfRange(u, order));
            }
            if v as usize >= order {
                return Err(GraphError::VertexOutOfRange(v, order));
            }
            if u == v {
                return Err(GraphError::LoopArc(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut out_adj = vec![Vec::new(); order];
        let mut in_adj = vec![Vec::new(); order];
        for &(u, v) in &list {
            out_adj[u as usize].push(v);
            in_adj[v as usize].push(u);
        }
        for adj in in_adj.iter_mut() {
            adj.sort_unstable();
        }
        Ok(Digraph { order, arcs: list, out_adj, in_adj })
    }

    pub fn empty(order: usize) -> Self {
        Digraph::new(order, []).expect("empty digraph is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.in_adj[v as usize]
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.out_adj[v as usize].len()
    }

    pub fn in_degree(&self, v: u32) -> usize {
        self.in_adj[v as usize].len()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Underlying (undirected) neighbors, sorted and deduplicated.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut nb: Vec<u32> = self.out_adj[v as usize]
            .iter()
            .chain(self.in_adj[v as usize].iter())
            .copied()
            .collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    /// First symmetric pair `(u,v)` with `u < v`, if any.
    pub fn symmetric_pair(&self) -> Option<(u32, u32)> {
        self.arcs
            .iter()
            .find(|&&(u, v)| u < v && self.has_arc(v, u))
            .copied()
    }

    pub fn is_oriented(&self) -> bool {
        self.symmetric_pair().is_none()
    }

    /// Weak-connectivity components as sorted vertex lists, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for s in 0..self.order as u32 {
            if seen[s as usize] {
                continue;
            }
            let mut comp = vec![s];
            seen[s as usize] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.order <= 1 || self.connected_components().len() == 1
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally),
    /// relabeled to `0..keep.len()` preserving relative order.
    pub fn induced(&self, keep: &[u32]) -> Digraph {
        let mut verts: Vec<u32> = keep.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let index = |v: u32| verts.binary_search(&v).ok().map(|i| i as u32);
        let arcs: Vec<(u32, u32)> = self
            .arcs
            .iter()
            .filter_map(|&(u, v)| Some((index(u)?, index(v)?)))
            .collect();
        Digraph::new(verts.len(), arcs).expect("induced subgraph of a valid digraph is valid")
    }

    /// Relabel through `perm`, where `perm[v]` is the new name of `v`.
    pub fn relabel(&self, perm: &[u32]) -> Digraph {
        let arcs: Vec<(u32, u32)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Digraph::new(self.order, arcs).expect("relabeling preserves validity")
    }

    /// The converse digraph (all arcs reversed).
    pub fn converse(&self) -> Digraph {
        let arcs: Vec<(u32, u32)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Digraph::new(self.order, arcs).expect("converse of a valid digraph is valid")
    }

    /// Disjoint union, vertices of `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.order as u32;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        Digraph::new(self.order + other.order, arcs).expect("disjoint union is valid")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph {}", self.order)?;
        for (u, v) in &self.arcs {
            write!(f, "\n{u} {v}")?;
        }
        Ok(())
    }
}

/// A digraph with no symmetric arc pair (an orientation of a simple graph).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph(Digraph);

impl OrientedGraph {
    pub fn new(g: Digraph) -> Result<Self, GraphError> {
        match g.symmetric_pair() {
            Some((u, v)) => Err(GraphError::SymmetricPair(u, v)),
            None => Ok(OrientedGraph(g)),
        }
    }

    pub fn from_arcs(order: usize, arcs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        OrientedGraph::new(Digraph::new(order, arcs)?)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn induced(&self, keep: &[u32]) -> OrientedGraph {
        OrientedGraph(self.0.induced(keep))
    }

    pub fn converse(&self) -> OrientedGraph {
        OrientedGraph(self.0.converse())
    }
}

impl std::ops::Deref for OrientedGraph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    order: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl UndirectedGraph {
    pub fn new(order: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a as usize >= order {
                return Err(GraphError::VertexOutOfRange(a, order));
            }
            if b as usize >= order {
                return Err(GraphError::VertexOutOfRange(b, order));
            }
            if a == b {
                return Err(GraphError::SelfEdge(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in &list {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for nb in adj.iter_mut() {
            nb.sort_unstable();
        }
        Ok(UndirectedGraph { order, edges: list, adj })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min,max)` pairs.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Underlying undirected graph of a digraph.
    pub fn underlying(g: &Digraph) -> UndirectedGraph {
        UndirectedGraph::new(g.order(), g.arcs().iter().copied())
            .expect("underlying graph of a loopless digraph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    /// Proper 2-colouring (bipartition sides) if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.order];
        for s in 0..self.order as u32 {
            if colour[s as usize] != u8::MAX {
                continue;
            }
            colour[s as usize] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if colour[w as usize] == u8::MAX {
                        colour[w as usize] = 1 - colour[v as usize];
                        stack.push(w);
                    } else if colour[w as usize] == colour[v as usize] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph {}", self.order)?;
        for (a, b) in &self.edges {
            write!(f, "\n{a} {b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Digraph::new(3, [(1, 1)]), Err(GraphError::LoopArc(1)));
        assert_eq!(Digraph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange(2, 2)));
    }

    #[test]
    fn symmetric_pairs_representable_but_not_oriented() {
        let g = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.symmetric_pair(), Some((0, 1)));
        assert_eq!(
            OrientedGraph::new(g),
            Err(GraphError::SymmetricPair(0, 1))
        );
    }

    #[test]
    fn components_partition_vertices() {
        let g = Digraph::new(7, [(0, 1), (2, 3), (5, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6]]);
    }

    #[test]
    fn empty_graph_components_are_singletons() {
        let g = Digraph::empty(3);
        assert_eq!(g.connected_components().len(), 3);
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = Digraph::new(5, [(0, 2), (2, 4), (1, 3)]).unwrap();
        let h = g.induced(&[0, 2, 4]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.arcs(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn undirected_normalizes_edges() {
        let g = UndirectedGraph::new(3, [(2, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert!(g.has_edge(2, 0));
    }
}
