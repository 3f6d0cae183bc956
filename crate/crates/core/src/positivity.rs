//! Schur-positivity verdicts for chromatic symmetric functions, the
//! stable-partition dominance screen, the hub-distance structural check, and
//! the driver that sweeps every candidate tree of a given hub degree.
//!
//! The driver rests on two reductions: a Schur-positive tree on 2n vertices
//! with a degree-n hub must have all non-hub, non-neighbor vertices as
//! leaves, and up to isomorphism such trees are exactly the spiders T(nu)
//! with nu a partition of n-1. Sweeping the spiders therefore decides the
//! whole class.

use std::fmt;

use crate::csf::{csf_schur, negative_schur_coefficients};
use crate::error::{Error, Result};
use crate::graphs::{spider, stable_partition_types, Graph};
use crate::partitions::{dominates, partitions_of, Partition};
use crate::symfunc::{CharacterTable, Coeff, SymPoly};

/// Witness that a graph is not Schur positive, by the dominance lemma: the
/// graph realizes a stable partition of type `achieved` but none of type
/// `missing`, even though `missing` is dominated by `achieved`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenCertificate {
    pub achieved: Partition,
    pub missing: Partition,
}

/// Full positivity analysis of one candidate tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityReport {
    pub nu: Partition,
    pub graph: Graph,
    pub schur: SymPoly,
    pub negative: Vec<(Partition, Coeff)>,
    pub schur_positive: bool,
}

/// Outcome of a full candidate sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremVerdict {
    /// Every candidate failed positivity: no Schur-positive tree exists in
    /// the class.
    Verified,
    /// Some candidate is Schur positive, so the class contains no
    /// counterexample to the positivity conjecture at this size.
    CounterexampleAbsent,
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremVerdict::Verified => f.write_str("VERIFIED"),
            TheoremVerdict::CounterexampleAbsent => f.write_str("COUNTEREXAMPLE-ABSENT"),
        }
    }
}

/// True iff no stored coefficient is negative (the zero function counts as
/// positive).
pub fn is_schur_positive(f: &SymPoly) -> bool {
    f.iter().all(|(_, c)| c >= 0)
}

/// Searches for a dominance certificate: a realized stable-partition type
/// whose dominance cone contains an unrealized type. Returns the first
/// (achieved, missing) pair in the fixed partition enumeration order; any
/// certificate proves the chromatic symmetric function is not Schur
/// positive.
pub fn dominance_screen(g: &Graph) -> Result<Option<ScreenCertificate>> {
    let types = stable_partition_types(g)?;
    let all = partitions_of(g.vertex_count());
    for achieved in &types {
        for mu in &all {
            if mu == achieved || types.contains(mu) {
                continue;
            }
            if dominates(achieved, mu)? {
                return Ok(Some(ScreenCertificate {
                    achieved: achieved.clone(),
                    missing: mu.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Structural test behind the spider reduction: with `hub` fixed, every
/// vertex that is neither the hub nor one of its neighbors must be a leaf.
/// A false result already rules out Schur positivity for trees whose hub
/// degree is half the vertex count, with no expansion computed.
pub fn hub_leaf_reduction_check(g: &Graph, hub: usize) -> Result<bool> {
    if hub >= g.vertex_count() {
        return Err(Error::InvalidArgument("hub vertex out of range"));
    }
    if !g.is_tree() {
        return Err(Error::InvalidArgument("hub-leaf check requires a tree"));
    }
    let neighbors = g.neighbors(hub);
    for v in 0..g.vertex_count() {
        if v == hub || neighbors.binary_search(&v).is_ok() {
            continue;
        }
        if g.degree(v) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All candidate trees for hub degree `n`: the spiders T(nu) over nu ranging
/// through the partitions of n-1 in enumeration order.
pub fn candidate_trees(n: usize) -> Result<Vec<(Partition, Graph)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("hub degree must be positive"));
    }
    Ok(partitions_of(n - 1)
        .into_iter()
        .map(|nu| {
            let g = spider(&nu);
            (nu, g)
        })
        .collect())
}

/// Expands every candidate tree for hub degree `n` and records its full
/// Schur expansion, negative terms, and positivity verdict, in candidate
/// order. The class has no Schur-positive member iff every report comes
/// back negative (see `theorem_verdict`).
pub fn verify_theorem(n: usize, table: &CharacterTable) -> Result<Vec<PositivityReport>> {
    if table.degree() != 2 * n {
        return Err(Error::WeightMismatch(table.degree(), 2 * n));
    }
    let mut reports = Vec::new();
    for (nu, graph) in candidate_trees(n)? {
        let schur = csf_schur(&graph, table)?;
        let negative = negative_schur_coefficients(&schur);
        let schur_positive = negative.is_empty();
        debug_assert_eq!(schur_positive, is_schur_positive(&schur));
        reports.push(PositivityReport { nu, graph, schur, negative, schur_positive });
    }
    Ok(reports)
}

/// Collapses a candidate sweep to its verdict.
pub fn theorem_verdict(reports: &[PositivityReport]) -> TheoremVerdict {
    if reports.iter().all(|r| !r.schur_positive) {
        TheoremVerdict::Verified
    } else {
        TheoremVerdict::CounterexampleAbsent
    }
}
