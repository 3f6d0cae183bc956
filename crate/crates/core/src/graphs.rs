//! Finite simple graphs: spider trees, edge-subset component analysis,
//! bipartitions, brute-force proper-coloring expansion, and stable-partition
//! enumeration.
//!
//! Vertices are `0..vertex_count`. Edges are stored as normalized
//! `(low, high)` pairs in construction order; the spider constructor fixes a
//! canonical labeling so downstream expansions are reproducible byte for
//! byte.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, Coeff, SymPoly};

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates endpoints, rejects loops and duplicate edges, and normalizes
    /// each pair as (low, high). Edge order is preserved.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph("edge endpoint out of range"));
            }
            if a == b {
                return Err(Error::InvalidGraph("loop edge"));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph("duplicate edge"));
            }
            normalized.push(e);
        }
        Ok(Graph { vertex_count, edges: normalized })
    }

    /// Path on `n` vertices: 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, edges).expect("path edges are valid")
    }

    /// Star on `n` vertices with hub 0.
    pub fn star(n: usize) -> Graph {
        let edges = (1..n).map(|v| (0, v)).collect();
        Graph::new(n, edges).expect("star edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges).expect("cycle edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a as u32, b as u32);
        }
        uf.component_count() == 1
    }

    /// Connected with exactly `vertex_count - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1
            && self.edges.len() == self.vertex_count - 1
            && self.is_connected()
    }

    /// Relabels vertices through `perm` (a bijection on 0..vertex_count).
    /// The abstract graph is unchanged; edge order follows the original list.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidArgument("permutation length mismatch"));
        }
        let edges = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(self.vertex_count, edges)
    }
}

/// Disjoint-set forest with path halving and union by size, reusable across
/// many edge subsets via `reset`.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.size.fill(1);
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grandparent = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grandparent;
            x = grandparent;
        }
        x
    }

    /// Returns false when the endpoints were already connected.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        true
    }

    pub(crate) fn component_count(&mut self) -> usize {
        (0..self.parent.len() as u32).filter(|&v| self.find(v) == v).count()
    }

    /// Component sizes, one entry per root.
    pub(crate) fn component_sizes(&mut self) -> Vec<usize> {
        let mut sizes = Vec::new();
        for v in 0..self.parent.len() as u32 {
            if self.find(v) == v {
                sizes.push(self.size[v as usize] as usize);
            }
        }
        sizes
    }
}

/// The spider tree T(nu) on `2n` vertices, `n = nu.weight() + 1`: hub 0 is
/// adjacent to vertices `1..=n`, and for `i <= len(nu)` vertex `i` carries
/// `nu[i-1]` pendant leaves, labeled consecutively from `n + 1` in increasing
/// `i`. The empty partition gives K_2.
pub fn spider(nu: &Partition) -> Graph {
    let n = nu.weight() + 1;
    let mut edges = Vec::with_capacity(2 * n - 1);
    for v in 1..=n {
        edges.push((0, v));
    }
    let mut next_leaf = n + 1;
    for (i, &pendants) in nu.parts().iter().enumerate() {
        for _ in 0..pendants {
            edges.push((i + 1, next_leaf));
            next_leaf += 1;
        }
    }
    Graph::new(2 * n, edges).expect("spider construction is valid by design")
}

/// Component sizes of the spanning subgraph keeping only the listed edge
/// indices, as a partition of `vertex_count`. Indices must be in range.
pub fn component_size_partition(g: &Graph, kept_edges: &[usize]) -> Partition {
    let mut uf = UnionFind::new(g.vertex_count());
    for &idx in kept_edges {
        let (a, b) = g.edges()[idx];
        uf.union(a as u32, b as u32);
    }
    Partition::from_unsorted(uf.component_sizes())
}

/// The type (side sizes, sorted descending) of the unique bipartition of a
/// connected graph, or `None` when an odd cycle makes the graph
/// non-bipartite. Disconnected input is an error: the bipartition would not
/// be unique.
pub fn bipartition_type(g: &Graph) -> Result<Option<Partition>> {
    if g.vertex_count() == 0 {
        return Err(Error::Disconnected);
    }
    let mut side = vec![u8::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    side[0] = 0;
    queue.push_back(0usize);
    let mut visited = 1usize;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                visited += 1;
                queue.push_back(w);
            } else if side[w] == side[v] {
                return Ok(None);
            }
        }
    }
    if visited != g.vertex_count() {
        return Err(Error::Disconnected);
    }
    let zeros = side.iter().filter(|&&s| s == 0).count();
    Ok(Some(Partition::from_unsorted(vec![
        zeros,
        g.vertex_count() - zeros,
    ])))
}

/// Monomial expansion of the k-variable chromatic symmetric function by
/// brute force: the coefficient of `m_mu` is the number of proper colorings
/// using color `i` exactly `mu_i` times, for the one canonical content per
/// shape. Exponential in `vertex_count`; intended for at most ~8 vertices.
pub fn coloring_monomial_expansion(g: &Graph, k: usize) -> SymPoly {
    let n = g.vertex_count();
    // Neighbors with smaller index; colorings are extended in vertex order,
    // so only these can already be colored.
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).into_iter().filter(|&w| w < v).collect())
        .collect();
    let mut poly = SymPoly::zero(Basis::Monomial, n);
    for mu in partitions_of(n) {
        if mu.len() > k {
            continue;
        }
        let count = count_colorings_with_content(&earlier, mu.parts());
        poly.add_term(mu, count).expect("mu is a partition of the vertex count");
    }
    poly
}

fn count_colorings_with_content(earlier: &[Vec<usize>], content: &[usize]) -> Coeff {
    fn rec(
        earlier: &[Vec<usize>],
        remaining: &mut [usize],
        colors: &mut [usize],
        v: usize,
    ) -> Coeff {
        if v == earlier.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..remaining.len() {
            if remaining[c] == 0 || earlier[v].iter().any(|&w| colors[w] == c) {
                continue;
            }
            remaining[c] -= 1;
            colors[v] = c;
            total += rec(earlier, remaining, colors, v + 1);
            remaining[c] += 1;
        }
        total
    }
    let mut remaining = content.to_vec();
    let mut colors = vec![usize::MAX; earlier.len()];
    rec(earlier, &mut remaining, &mut colors, 0)
}

/// Largest vertex count accepted by `stable_partition_types`.
pub const MAX_STABLE_PARTITION_VERTICES: usize = 12;

/// The set of types realized by stable partitions of `g` (set partitions of
/// the vertices into independent sets), by backtracking in vertex order:
/// each vertex joins an existing non-conflicting block or opens a new one.
pub fn stable_partition_types(g: &Graph) -> Result<BTreeSet<Partition>> {
    let n = g.vertex_count();
    if n > MAX_STABLE_PARTITION_VERTICES {
        return Err(Error::TooLarge {
            what: "stable-partition vertex count",
            limit: MAX_STABLE_PARTITION_VERTICES,
            actual: n,
        });
    }
    let mut neighbor_mask = vec![0u16; n];
    for &(a, b) in g.edges() {
        neighbor_mask[a] |= 1 << b;
        neighbor_mask[b] |= 1 << a;
    }
    let mut types = BTreeSet::new();
    // block_masks[j] holds the vertices of block j; a vertex may join iff
    // none of its neighbors is already there.
    fn rec(
        neighbor_mask: &[u16],
        block_masks: &mut Vec<u16>,
        block_sizes: &mut Vec<usize>,
        v: usize,
        types: &mut BTreeSet<Partition>,
    ) {
        if v == neighbor_mask.len() {
            types.insert(Partition::from_unsorted(block_sizes.clone()));
            return;
        }
        let bit = 1u16 << v;
        for j in 0..block_masks.len() {
            if block_masks[j] & neighbor_mask[v] == 0 {
                block_masks[j] |= bit;
                block_sizes[j] += 1;
                rec(neighbor_mask, block_masks, block_sizes, v + 1, types);
                block_sizes[j] -= 1;
                block_masks[j] &= !bit;
            }
        }
        block_masks.push(bit);
        block_sizes.push(1);
        rec(neighbor_mask, block_masks, block_sizes, v + 1, types);
        block_sizes.pop();
        block_masks.pop();
    }
    rec(&neighbor_mask, &mut Vec::new(), &mut Vec::new(), 0, &mut types);
    Ok(types)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(0, vec![]).is_ok());
    }

    #[test]
    fn spider_of_nine_is_the_degree_ten_tree_on_twenty_vertices() {
        let g = spider(&p(&[9]));
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 19);
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 10);
        assert_eq!(g.degree(1), 10); // hub plus nine pendant leaves
        for v in 2..=10 {
            assert_eq!(g.degree(v), 1);
        }
    }

    #[test]
    fn spider_two_one_layout() {
        let g = spider(&p(&[2, 1]));
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.degree(3), 1);
        assert_eq!(g.degree(4), 1);
        assert_eq!(g.neighbors(1), vec![0, 5, 6]);
        assert_eq!(g.neighbors(2), vec![0, 7]);
    }

    #[test]
    fn spider_of_all_ones_pairs_up_neighbors() {
        let g = spider(&p(&[1; 9]));
        assert_eq!(g.vertex_count(), 20);
        for v in 1..=9 {
            assert_eq!(g.degree(v), 2);
        }
        assert_eq!(g.degree(10), 1);
    }

    #[test]
    fn spider_of_empty_partition_is_a_single_edge() {
        let g = spider(&Partition::empty());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn spider_tree_shape_for_all_small_nu() {
        for w in 0..=9 {
            let n = w + 1;
            for nu in partitions_of(w) {
                let g = spider(&nu);
                assert!(g.is_tree(), "nu={nu}");
                assert_eq!(g.vertex_count(), 2 * n);
                assert_eq!(g.edge_count(), 2 * n - 1);
                assert_eq!(g.degree(0), n, "hub degree for nu={nu}");
                // Non-hub leaves: bare hub neighbors plus all pendants. (For
                // n = 1 the hub itself is also a leaf, so it is excluded.)
                let leaves = (1..g.vertex_count()).filter(|&v| g.degree(v) == 1).count();
                assert_eq!(leaves, n - nu.len() + nu.weight(), "leaf count for nu={nu}");
            }
        }
    }

    #[test]
    fn component_sizes_of_edge_subsets() {
        let p3 = Graph::path(3);
        assert_eq!(component_size_partition(&p3, &[]), p(&[1, 1, 1]));
        assert_eq!(component_size_partition(&p3, &[0]), p(&[2, 1]));
        assert_eq!(component_size_partition(&p3, &[0, 1]), p(&[3]));
    }

    #[test]
    fn forest_subsets_have_vertices_minus_edges_components() {
        let g = spider(&p(&[2, 1]));
        let m = g.edge_count();
        for mask in 0u32..(1 << m) {
            let kept: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let lam = component_size_partition(&g, &kept);
            assert_eq!(lam.len(), g.vertex_count() - kept.len());
        }
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(bipartition_type(&Graph::path(4)).unwrap(), Some(p(&[2, 2])));
        assert_eq!(bipartition_type(&Graph::star(4)).unwrap(), Some(p(&[3, 1])));
        assert_eq!(bipartition_type(&Graph::cycle(5)).unwrap(), None);
        assert_eq!(bipartition_type(&Graph::path(1)).unwrap(), Some(p(&[1])));
        let two_isolated = Graph::new(2, vec![]).unwrap();
        assert_eq!(bipartition_type(&two_isolated), Err(Error::Disconnected));
    }

    #[test]
    fn spiders_split_into_equal_sides() {
        for w in 0..=9 {
            let n = w + 1;
            for nu in partitions_of(w) {
                let side = bipartition_type(&spider(&nu)).unwrap();
                assert_eq!(side, Some(p(&[n, n])), "nu={nu}");
            }
        }
    }

    #[test]
    fn coloring_expansion_examples() {
        let k2 = coloring_monomial_expansion(&Graph::path(2), 2);
        assert_eq!(k2.coeff(&p(&[1, 1])), 2);
        assert_eq!(k2.coeff(&p(&[2])), 0);

        let p3 = coloring_monomial_expansion(&Graph::path(3), 3);
        assert_eq!(p3.coeff(&p(&[2, 1])), 1);
        assert_eq!(p3.coeff(&p(&[1, 1, 1])), 6);
        assert_eq!(p3.coeff(&p(&[3])), 0);

        let single = coloring_monomial_expansion(&Graph::path(1), 1);
        assert_eq!(single.coeff(&p(&[1])), 1);

        let triangle = coloring_monomial_expansion(&Graph::cycle(3), 3);
        assert_eq!(triangle.coeff(&p(&[1, 1, 1])), 6);
        assert_eq!(triangle.term_count(), 1);
    }

    #[test]
    fn fewer_colors_truncate_the_expansion() {
        let p4_two = coloring_monomial_expansion(&Graph::path(4), 2);
        assert_eq!(p4_two.coeff(&p(&[2, 2])), 2);
        assert_eq!(p4_two.coeff(&p(&[1, 1, 1, 1])), 0, "needs four colors");
        assert_eq!(p4_two.coeff(&p(&[3, 1])), 0, "not properly colorable");
    }

    #[test]
    fn stable_partition_type_examples() {
        let k2 = stable_partition_types(&Graph::path(2)).unwrap();
        assert_eq!(k2.into_iter().collect::<Vec<_>>(), vec![p(&[1, 1])]);

        let k3 = stable_partition_types(&Graph::cycle(3)).unwrap();
        assert_eq!(k3.into_iter().collect::<Vec<_>>(), vec![p(&[1, 1, 1])]);

        let star = stable_partition_types(&Graph::star(4)).unwrap();
        assert_eq!(
            star.into_iter().collect::<Vec<_>>(),
            vec![p(&[3, 1]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn stable_partition_size_guard() {
        let big = Graph::path(13);
        assert!(matches!(
            stable_partition_types(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn stable_types_respect_the_independence_number() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::star(4), spider(&p(&[2, 1]))] {
            let mut neighbor_mask = vec![0u32; g.vertex_count()];
            for &(a, b) in g.edges() {
                neighbor_mask[a] |= 1 << b;
                neighbor_mask[b] |= 1 << a;
            }
            let independence_number = (0u32..1 << g.vertex_count())
                .filter(|set| {
                    (0..g.vertex_count())
                        .all(|v| set >> v & 1 == 0 || set & neighbor_mask[v] == 0)
                })
                .map(|set| set.count_ones() as usize)
                .max()
                .unwrap();
            for lam in stable_partition_types(&g).unwrap() {
                assert!(lam.first_part() <= independence_number, "type {lam}");
            }
        }
    }

    #[test]
    fn bipartition_type_is_a_stable_type() {
        for g in [Graph::path(4), Graph::path(7), Graph::star(6), spider(&p(&[2, 1]))] {
            let side = bipartition_type(&g).unwrap().expect("bipartite");
            let types = stable_partition_types(&g).unwrap();
            assert!(types.contains(&side), "{side} missing");
        }
    }

    #[test]
    fn relabeling_preserves_the_abstract_graph() {
        let g = Graph::path(4);
        let h = g.relabeled(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert!(h.is_tree());
        assert!(g.relabeled(&[0, 1]).is_err());
    }
}
