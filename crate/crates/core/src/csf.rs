//! Chromatic symmetric functions in exact arithmetic.
//!
//! The power-sum expansion follows the edge-subset formula: each subset S of
//! edges contributes (-1)^|S| to the coefficient of p indexed by the
//! component sizes of (V, S). Conversion to the Schur basis goes through the
//! character table. The chromatic polynomial provides an independent
//! evaluation cross-check.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graphs::{Graph, UnionFind};
use crate::partitions::Partition;
use crate::symfunc::{p_to_s, Basis, CharacterTable, Coeff, SymPoly};

/// Largest edge count accepted by `csf_power_basis` (the enumeration walks
/// all 2^|E| subsets; 25 keeps a worst case of ~34M subsets).
pub const MAX_CSF_EDGES: usize = 25;

/// Power-sum expansion of the chromatic symmetric function of `g`.
///
/// The coefficient of `p_mu` is the signed count of edge subsets whose
/// spanning subgraph has component sizes `mu`; for a tree this is
/// (-1)^(|V| - len(mu)) times the number of realizing subsets.
pub fn csf_power_basis(g: &Graph) -> Result<SymPoly> {
    let m = g.edge_count();
    if m > MAX_CSF_EDGES {
        return Err(Error::TooLarge {
            what: "edge count for subset enumeration",
            limit: MAX_CSF_EDGES,
            actual: m,
        });
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut uf = UnionFind::new(n);
    let mut sizes = Vec::with_capacity(n);
    let mut counts: HashMap<Vec<usize>, Coeff> = HashMap::new();
    for mask in 0u32..1u32 << m {
        uf.reset();
        let mut bits = mask;
        while bits != 0 {
            let idx = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = edges[idx];
            uf.union(a as u32, b as u32);
        }
        sizes.clear();
        sizes.extend(uf.component_sizes());
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let sign: Coeff = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *counts.entry(sizes.clone()).or_insert(0) += sign;
    }
    SymPoly::new(
        Basis::Power,
        n,
        counts.into_iter().map(|(parts, c)| {
            (Partition::new(parts).expect("component sizes sort descending"), c)
        }),
    )
}

/// Schur expansion of the chromatic symmetric function of `g`, via the
/// power basis and the character table for degree `|V|`.
pub fn csf_schur(g: &Graph, table: &CharacterTable) -> Result<SymPoly> {
    p_to_s(&csf_power_basis(g)?, table)
}

/// The negative terms of a Schur expansion, in the fixed partition
/// enumeration order.
pub fn negative_schur_coefficients(f: &SymPoly) -> Vec<(Partition, Coeff)> {
    f.iter()
        .filter(|&(_, c)| c < 0)
        .map(|(lam, c)| (lam.clone(), c))
        .collect()
}

fn checked_pow(base: Coeff, exp: usize) -> Result<Coeff> {
    let mut acc: Coeff = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base)
            .ok_or(Error::Overflow("chromatic polynomial power"))?;
    }
    Ok(acc)
}

/// Number of proper colorings of `g` with `k` colors, by deletion and
/// contraction (contracted parallel edges are collapsed, keeping every
/// intermediate graph simple).
pub fn chromatic_polynomial_at(g: &Graph, k: usize) -> Result<Coeff> {
    fn rec(vertex_count: usize, edges: &[(usize, usize)], k: Coeff) -> Result<Coeff> {
        let Some(&(a, b)) = edges.last() else {
            return checked_pow(k, vertex_count);
        };
        let rest = &edges[..edges.len() - 1];
        let deleted = rec(vertex_count, rest, k)?;
        // Contract b into a: relabel b's incidences to a, shift labels above
        // b down, and drop the duplicates this creates.
        let mut contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(x, y)| {
                let map = |v: usize| {
                    if v == b {
                        a
                    } else if v > b {
                        v - 1
                    } else {
                        v
                    }
                };
                let (x, y) = (map(x), map(y));
                (x.min(y), x.max(y))
            })
            .collect();
        contracted.sort_unstable();
        contracted.dedup();
        let merged = rec(vertex_count - 1, &contracted, k)?;
        deleted
            .checked_sub(merged)
            .ok_or(Error::Overflow("chromatic polynomial difference"))
    }
    rec(g.vertex_count(), g.edges(), k as Coeff)
}

/// Closed-form proper-coloring count for a tree: k(k-1)^(v-1).
pub fn tree_coloring_count(vertex_count: usize, k: usize) -> Result<Coeff> {
    if vertex_count == 0 {
        return Err(Error::InvalidArgument("tree must have at least one vertex"));
    }
    let pow = checked_pow(k as Coeff - 1, vertex_count - 1)?;
    (k as Coeff)
        .checked_mul(pow)
        .ok_or(Error::Overflow("tree coloring count"))
}
