//! Exact symmetric-function linear algebra: irreducible symmetric-group
//! characters via the Murnaghan–Nakayama rule, Kostka numbers by tableau
//! enumeration, principal specializations, and conversions among the
//! power-sum, Schur, and monomial bases.
//!
//! All coefficients are signed 128-bit integers. Basis-conversion
//! accumulations use checked arithmetic and report overflow as an error
//! instead of wrapping; at degree 20 character values reach ~10^9 and
//! power-sum coefficients ~10^5, so the 627-term dot products stay far
//! inside the 128-bit range but would be uncomfortably close to 64 bits.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Exact coefficient type used throughout the crate.
pub type Coeff = i128;

/// The symmetric-function bases this crate expands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Power,
    Schur,
    Monomial,
}

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// coefficient map over partitions in one fixed basis.
///
/// Invariants: every key is a partition of `degree`; zero coefficients are
/// never stored. Iteration follows the fixed partition enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SymPoly {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymPoly { basis, degree, coeffs: BTreeMap::new() }
    }

    /// Builds from raw terms, summing duplicates exactly and dropping zeros.
    pub fn new(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Coeff)>,
    ) -> Result<Self> {
        let mut poly = SymPoly::zero(basis, degree);
        for (lam, c) in terms {
            poly.add_term(lam, c)?;
        }
        Ok(poly)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `lam` (zero when absent).
    pub fn coeff(&self, lam: &Partition) -> Coeff {
        self.coeffs.get(lam).copied().unwrap_or(0)
    }

    /// Terms in the fixed partition enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, Coeff)> {
        self.coeffs.iter().map(|(lam, &c)| (lam, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` to the coefficient of `lam`, exactly.
    pub fn add_term(&mut self, lam: Partition, c: Coeff) -> Result<()> {
        if lam.weight() != self.degree {
            return Err(Error::WeightMismatch(lam.weight(), self.degree));
        }
        let entry = self.coeffs.entry(lam);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(c)
                    .ok_or(Error::Overflow("coefficient accumulation"))?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Exact sum of two expansions in the same basis and degree.
    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.basis != other.basis {
            return Err(Error::InvalidArgument("cannot add across bases"));
        }
        if self.degree != other.degree {
            return Err(Error::WeightMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (lam, c) in other.iter() {
            out.add_term(lam.clone(), c)?;
        }
        Ok(out)
    }

    /// Exact scalar multiple.
    pub fn scale(&self, k: Coeff) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.basis, self.degree);
        for (lam, c) in self.iter() {
            let scaled = c.checked_mul(k).ok_or(Error::Overflow("scaling"))?;
            out.add_term(lam.clone(), scaled)?;
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama characters
// ---------------------------------------------------------------------------
//
// Shapes are encoded as beta-sets on an abacus: a partition with at most R
// rows maps to the bit set { lam_i + R - 1 - i : 0 <= i < R } (missing rows
// count as zero parts). Removing a border strip of length k is moving a bead
// from position b to the empty position b - k; the strip height is the number
// of beads strictly between the two positions. The empty shape is the low-R
// bits. Bead count R is fixed within one recursion, so memo keys never mix
// encodings.

fn shape_mask(parts: &[usize], beads: usize) -> u64 {
    let mut mask = 0u64;
    for i in 0..beads {
        let part = parts.get(i).copied().unwrap_or(0);
        mask |= 1u64 << (part + beads - 1 - i);
    }
    mask
}

/// Bits strictly between positions `lo` and `hi` (exclusive on both ends).
fn between_mask(lo: u32, hi: u32) -> u64 {
    debug_assert!(lo < hi && hi < 64);
    ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1)
}

fn mn_rec(
    mask: u64,
    empty: u64,
    cycle: &[usize],
    idx: usize,
    memo: &mut [HashMap<u64, Coeff>],
) -> Coeff {
    if idx == cycle.len() {
        debug_assert_eq!(mask, empty, "weights out of sync");
        return 1;
    }
    if let Some(&v) = memo[idx].get(&mask) {
        return v;
    }
    let k = cycle[idx] as u32;
    let mut acc: Coeff = 0;
    let mut beads = mask;
    while beads != 0 {
        let b = beads.trailing_zeros();
        beads &= beads - 1;
        if b < k || mask & (1u64 << (b - k)) != 0 {
            continue;
        }
        let height = (mask & between_mask(b - k, b)).count_ones();
        let next = mask ^ (1u64 << b) ^ (1u64 << (b - k));
        let term = mn_rec(next, empty, cycle, idx + 1, memo);
        if height & 1 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    memo[idx].insert(mask, acc);
    acc
}

/// Largest degree the abacus encoding supports for a standalone character
/// evaluation (bead positions must fit in a u64).
pub const MAX_CHARACTER_DEGREE: usize = 63;

/// The irreducible symmetric-group character value `chi^lam(mu)`, computed by
/// recursive border-strip removal with memoization on (remaining shape,
/// remaining cycle suffix). Parts of `mu` are consumed largest-first.
pub fn mn_character(lam: &Partition, mu: &Partition) -> Result<Coeff> {
    if lam.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lam.weight(), mu.weight()));
    }
    let n = lam.weight();
    if n == 0 {
        return Ok(1);
    }
    if n > MAX_CHARACTER_DEGREE {
        return Err(Error::TooLarge {
            what: "character degree",
            limit: MAX_CHARACTER_DEGREE,
            actual: n,
        });
    }
    let beads = lam.len();
    let mask = shape_mask(lam.parts(), beads);
    let empty = (1u64 << beads) - 1;
    let mut memo = vec![HashMap::new(); mu.len()];
    Ok(mn_rec(mask, empty, mu.parts(), 0, &mut memo))
}

/// Memoized character table for one fixed degree, indexed by the fixed
/// partition enumeration order in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// values[lambda_index][mu_index]
    values: Vec<Vec<Coeff>>,
}

/// Largest degree `CharacterTable::build` supports: every intermediate shape
/// is padded to `degree` beads, so positions reach `2 * degree - 1`.
pub const MAX_TABLE_DEGREE: usize = 32;

impl CharacterTable {
    /// Computes the full table for `degree` in bulk.
    ///
    /// The border-strip memo is shared across all rows of one column (one
    /// cycle type), with shapes padded to a fixed bead count so identical
    /// remainders hit the same key regardless of which row produced them.
    pub fn build(degree: usize) -> Result<Self> {
        if degree > MAX_TABLE_DEGREE {
            return Err(Error::TooLarge {
                what: "character table degree",
                limit: MAX_TABLE_DEGREE,
                actual: degree,
            });
        }
        let partitions = partitions_of(degree);
        let count = partitions.len();
        let beads = degree.max(1);
        let empty = (1u64 << beads) - 1;
        let masks: Vec<u64> = partitions
            .iter()
            .map(|lam| shape_mask(lam.parts(), beads))
            .collect();
        let mut values = vec![vec![0; count]; count];
        for (mj, mu) in partitions.iter().enumerate() {
            let mut memo = vec![HashMap::new(); mu.len()];
            for (li, mask) in masks.iter().enumerate() {
                values[li][mj] = mn_rec(*mask, empty, mu.parts(), 0, &mut memo);
            }
        }
        Ok(Self::from_rows(degree, values).expect("freshly built table is well formed"))
    }

    /// Assembles a table from precomputed rows (used by cache loading).
    /// Rows and columns must both follow the fixed enumeration order.
    pub fn from_rows(degree: usize, values: Vec<Vec<Coeff>>) -> Result<Self> {
        let partitions = partitions_of(degree);
        let count = partitions.len();
        if values.len() != count || values.iter().any(|row| row.len() != count) {
            return Err(Error::InvalidArgument("character table has wrong dimensions"));
        }
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, lam)| (lam, i))
            .collect();
        Ok(CharacterTable { degree, partitions, index, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All partitions of the degree in enumeration order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lam: &Partition) -> Option<usize> {
        self.index.get(lam).copied()
    }

    /// `chi^lam(mu)` by table lookup, falling back to a fresh border-strip
    /// recursion when the key is outside this table's degree.
    pub fn value(&self, lam: &Partition, mu: &Partition) -> Result<Coeff> {
        match (self.index_of(lam), self.index_of(mu)) {
            (Some(li), Some(mj)) => Ok(self.values[li][mj]),
            _ => mn_character(lam, mu),
        }
    }

    /// Entry by enumeration-order indices.
    pub fn value_at(&self, lambda_index: usize, mu_index: usize) -> Coeff {
        self.values[lambda_index][mu_index]
    }
}

// ---------------------------------------------------------------------------
// Hook lengths, Kostka numbers, principal specialization
// ---------------------------------------------------------------------------

/// Dimension of the irreducible representation indexed by `lam`:
/// `n!` divided by the product of hook lengths.
pub fn hook_dimension(lam: &Partition) -> Result<Coeff> {
    let n = lam.weight();
    let mut factorial: Coeff = 1;
    for i in 1..=n {
        factorial = factorial
            .checked_mul(i as Coeff)
            .ok_or(Error::Overflow("hook-length factorial"))?;
    }
    let mut hooks: Coeff = 1;
    for row in lam.hook_lengths() {
        for h in row {
            hooks = hooks
                .checked_mul(h as Coeff)
                .ok_or(Error::Overflow("hook-length product"))?;
        }
    }
    Ok(factorial / hooks)
}

/// The Kostka number `K_{lam, mu}`: semistandard Young tableaux of shape
/// `lam` and content `mu`, counted by direct enumeration of horizontal-strip
/// chains. Exact for any size, but intended for weights up to ~12.
pub fn kostka(lam: &Partition, mu: &Partition) -> Result<Coeff> {
    if lam.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lam.weight(), mu.weight()));
    }
    Ok(kostka_rec(lam.parts(), mu.parts(), mu.len()))
}

/// Number of SSYT of `shape` with content `mu[0..values]` in values `1..=values`.
fn kostka_rec(shape: &[usize], mu: &[usize], values: usize) -> Coeff {
    if values == 0 {
        return if shape.is_empty() { 1 } else { 0 };
    }
    if values == 1 {
        // A single value fills a one-row shape exactly.
        return if shape == [mu[0]] { 1 } else { 0 };
    }
    let strip = mu[values - 1];
    let mut total = 0;
    for inner in horizontal_strip_removals(shape, strip) {
        total += kostka_rec(&inner, mu, values - 1);
    }
    total
}

/// All shapes obtained from `shape` by removing a horizontal strip of size
/// `k`: row i keeps between `shape[i+1]` and `shape[i]` cells (interlacing),
/// and the removed cells total `k`. Trailing zero rows are dropped.
fn horizontal_strip_removals(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(shape.len());
    strip_rows(shape, 0, k, &mut current, &mut out);
    out
}

fn strip_rows(
    shape: &[usize],
    row: usize,
    budget: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if row == shape.len() {
        if budget == 0 {
            let mut inner = current.clone();
            while inner.last() == Some(&0) {
                inner.pop();
            }
            out.push(inner);
        }
        return;
    }
    let lower = shape.get(row + 1).copied().unwrap_or(0);
    let max_remove = (shape[row] - lower).min(budget);
    for removed in 0..=max_remove {
        current.push(shape[row] - removed);
        strip_rows(shape, row + 1, budget - removed, current, out);
        current.pop();
    }
}

/// The principal specialization `s_lam(1, ..., 1)` with `k` ones, i.e. the
/// number of SSYT of shape `lam` with entries at most `k`, by the
/// hook-content formula. Zero when `lam` has more than `k` rows.
pub fn schur_principal_evaluation(lam: &Partition, k: usize) -> Result<Coeff> {
    if lam.len() > k {
        return Ok(0);
    }
    let hooks = lam.hook_lengths();
    let mut numerator: Coeff = 1;
    let mut denominator: Coeff = 1;
    for (i, row_hooks) in hooks.iter().enumerate() {
        for (j, &hook) in row_hooks.iter().enumerate() {
            // k + j - i >= k - (rows - 1) >= 1 here.
            let content_factor = (k + j - i) as Coeff;
            numerator = numerator
                .checked_mul(content_factor)
                .ok_or(Error::Overflow("hook-content numerator"))?;
            denominator = denominator
                .checked_mul(hook as Coeff)
                .ok_or(Error::Overflow("hook-content denominator"))?;
        }
    }
    Ok(numerator / denominator)
}

// ---------------------------------------------------------------------------
// Basis conversions
// ---------------------------------------------------------------------------

/// Converts a power-sum expansion to the Schur basis using
/// `p_mu = sum_lam chi^lam(mu) s_lam`. Exact; overflow is reported, never
/// wrapped.
pub fn p_to_s(f: &SymPoly, table: &CharacterTable) -> Result<SymPoly> {
    if f.basis() != Basis::Power {
        return Err(Error::InvalidArgument("p_to_s expects a power-basis input"));
    }
    if f.degree() != table.degree() {
        return Err(Error::WeightMismatch(f.degree(), table.degree()));
    }
    let mut out = SymPoly::zero(Basis::Schur, f.degree());
    for (li, lam) in table.partitions().iter().enumerate() {
        let mut acc: Coeff = 0;
        for (mu, c) in f.iter() {
            let mj = table
                .index_of(mu)
                .expect("poly keys are partitions of the table degree");
            let term = c
                .checked_mul(table.value_at(li, mj))
                .ok_or(Error::Overflow("power-to-Schur conversion"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("power-to-Schur conversion"))?;
        }
        out.add_term(lam.clone(), acc)?;
    }
    Ok(out)
}

/// Converts a Schur expansion to the monomial basis using
/// `s_lam = sum_mu K_{lam,mu} m_mu`. Practical for degrees up to ~12.
pub fn s_to_m(f: &SymPoly) -> Result<SymPoly> {
    if f.basis() != Basis::Schur {
        return Err(Error::InvalidArgument("s_to_m expects a Schur-basis input"));
    }
    let mut out = SymPoly::zero(Basis::Monomial, f.degree());
    for mu in partitions_of(f.degree()) {
        let mut acc: Coeff = 0;
        for (lam, c) in f.iter() {
            let term = c
                .checked_mul(kostka(lam, &mu)?)
                .ok_or(Error::Overflow("Schur-to-monomial conversion"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("Schur-to-monomial conversion"))?;
        }
        out.add_term(mu, acc)?;
    }
    Ok(out)
}
