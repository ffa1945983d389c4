//! Exhaustive, isomorph-free generation of candidate colour adjacency
//! matrices: all m x m nonnegative integer matrices with row sums k that are
//! weakly symmetric, consistent, and irreducible, collected as canonical
//! forms under colour permutation.
//!
//! The search fills matrices row by row. Zeros propagate through weak
//! symmetry (entry (r, c) with c < r is forced zero or forced positive by
//! the already-fixed (c, r)), row budgets prune infeasible suffixes, cycle
//! consistency is checked as soon as every entry of a cycle is fixed, and
//! support components that can no longer reach the unfilled columns kill the
//! branch. An optional spectral target fuses the eigenvalue filter into the
//! search via power-sum windows, so the composed operation
//! `spectral_filter(enumerate_candidates(k, m), g)` stays feasible even
//! where the unfiltered candidate set would be astronomically large.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::ColourMatrix;
use crate::par;
use crate::poly::{char_poly_of_matrix, CharPoly, SpectrumError};

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("enumeration incomplete: node budget exhausted after {nodes} nodes")]
    Incomplete { nodes: u64 },
    #[error("degree {0} out of range 1..=8")]
    Degree(u32),
    #[error("colour count {0} out of range 1..=8")]
    Colours(usize),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Practical caps: beyond these the candidate sets explode combinatorially.
pub const MAX_DEGREE: u32 = 8;
pub const MAX_COLOURS: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Node budget (row placements). `None` means unlimited.
    pub budget: Option<u64>,
    /// Worker count; 1 runs strictly sequentially.
    pub jobs: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            budget: None,
            jobs: 1,
        }
    }
}

/// Spectral target: the characteristic polynomial a candidate must divide.
#[derive(Clone, Debug)]
pub struct SpectralTarget {
    poly: CharPoly,
    roots: Option<Vec<(i64, u32)>>,
}

impl SpectralTarget {
    pub fn from_graph(g: &Graph) -> Result<Self, SpectrumError> {
        Ok(Self::from_poly(crate::poly::char_poly_of_graph(g)?))
    }

    pub fn from_poly(poly: CharPoly) -> Self {
        let roots = poly.integer_roots();
        SpectralTarget { poly, roots }
    }

    pub fn poly(&self) -> &CharPoly {
        &self.poly
    }
}

/// All m x m candidates with row sum k, as a sorted set of canonical forms.
pub fn enumerate_candidates(
    k: u32,
    m: usize,
    opts: &EnumerateOptions,
) -> Result<BTreeSet<ColourMatrix>, EnumerateError> {
    enumerate_inner(k, m, None, opts)
}

/// Candidates whose characteristic polynomial divides the target, computed
/// without materializing the unfiltered set. Produces exactly
/// `spectral_filter(enumerate_candidates(k, m), g)`.
pub fn enumerate_filtered(
    k: u32,
    m: usize,
    target: &SpectralTarget,
    opts: &EnumerateOptions,
) -> Result<BTreeSet<ColourMatrix>, EnumerateError> {
    enumerate_inner(k, m, Some(target), opts)
}

fn enumerate_inner(
    k: u32,
    m: usize,
    target: Option<&SpectralTarget>,
    opts: &EnumerateOptions,
) -> Result<BTreeSet<ColourMatrix>, EnumerateError> {
    if k == 0 || k > MAX_DEGREE {
        return Err(EnumerateError::Degree(k));
    }
    if m == 0 || m > MAX_COLOURS {
        return Err(EnumerateError::Colours(m));
    }
    let filter = match target {
        Some(t) => match LeafFilter::build(t, k, m) {
            Some(f) => Some(f),
            // The target cannot host any order-m divisor with eigenvalue k.
            None => return Ok(BTreeSet::new()),
        },
        None => None,
    };
    let shared = SharedBudget {
        used: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        limit: opts.budget.unwrap_or(u64::MAX),
    };

    // Row 0 has no cross-row constraints; split the search on it.
    let mut row0s: Vec<Vec<u32>> = Vec::new();
    compositions(k, m, &mut |row| row0s.push(row.to_vec()));

    let run_one = |row0: &Vec<u32>| -> (BTreeSet<ColourMatrix>, bool) {
        let mut search = Search::new(k, m, filter.as_ref(), &shared);
        search.a[..m].copy_from_slice(row0);
        let completed = search.row_placed(0);
        search.flush();
        (search.out, completed)
    };

    let results: Vec<(BTreeSet<ColourMatrix>, bool)> = if opts.jobs > 1 {
        par::map_slice(opts.jobs, &row0s, run_one)
    } else {
        row0s.iter().map(run_one).collect()
    };

    let mut out = BTreeSet::new();
    let mut complete = true;
    for (set, ok) in results {
        complete &= ok;
        out.extend(set);
    }
    if !complete || shared.abort.load(Ordering::Relaxed) {
        return Err(EnumerateError::Incomplete {
            nodes: shared.used.load(Ordering::Relaxed),
        });
    }
    Ok(out)
}

/// Calls `f` with every composition of `sum` into `m` nonnegative parts.
fn compositions(sum: u32, m: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, left: u32, slots: usize, f: &mut impl FnMut(&[u32])) {
        if slots == 1 {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=left {
            buf.push(v);
            rec(buf, left - v, slots - 1, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(m);
    rec(&mut buf, sum, m, f);
}

struct SharedBudget {
    used: AtomicU64,
    abort: AtomicBool,
    limit: u64,
}

const FLUSH_EVERY: u64 = 4096;

/// Power sums (sum of eigenvalues, sum of squares) of every admissible
/// eigenvalue multiset, grouped by the first power sum.
struct AllowedPairs {
    by_p1: Vec<(i64, Vec<i64>)>,
}

impl AllowedPairs {
    fn feasible(&self, p1_lo: i64, p1_hi: i64, p2_lo: i64, p2_hi: i64) -> bool {
        let start = self.by_p1.partition_point(|(p1, _)| *p1 < p1_lo);
        for (p1, p2s) in &self.by_p1[start..] {
            if *p1 > p1_hi {
                break;
            }
            let idx = p2s.partition_point(|p2| *p2 < p2_lo);
            if idx < p2s.len() && p2s[idx] <= p2_hi {
                return true;
            }
        }
        false
    }
}

struct LeafFilter {
    /// Graph eigenvalues with multiplicities when the target splits over the
    /// integers; enables power-sum pruning and fast root-deflation checks.
    roots: Option<Vec<(i64, u32)>>,
    allowed: Option<AllowedPairs>,
    poly: CharPoly,
}

impl LeafFilter {
    /// `None` when no order-m divisor with eigenvalue k can exist at all.
    fn build(target: &SpectralTarget, k: u32, m: usize) -> Option<LeafFilter> {
        if m > target.poly.degree() {
            return None;
        }
        let Some(roots) = &target.roots else {
            return Some(LeafFilter {
                roots: None,
                allowed: None,
                poly: target.poly.clone(),
            });
        };
        // A matrix with constant row sums k always has eigenvalue k, so k
        // must be available in the target spectrum.
        let mut caps = roots.clone();
        let slot = caps.iter_mut().find(|(r, _)| *r == k as i64)?;
        slot.1 -= 1;
        caps.retain(|(_, c)| *c > 0);

        let mut pairs: BTreeSet<(i64, i64)> = BTreeSet::new();
        collect_power_sums(
            &caps,
            0,
            m - 1,
            k as i64,
            (k as i64) * (k as i64),
            &mut pairs,
        );
        if pairs.is_empty() {
            return None;
        }
        let mut by_p1: Vec<(i64, Vec<i64>)> = Vec::new();
        for (p1, p2) in pairs {
            match by_p1.last_mut() {
                Some((last, v)) if *last == p1 => v.push(p2),
                _ => by_p1.push((p1, vec![p2])),
            }
        }
        Some(LeafFilter {
            roots: Some(roots.clone()),
            allowed: Some(AllowedPairs { by_p1 }),
            poly: target.poly.clone(),
        })
    }
}

fn collect_power_sums(
    caps: &[(i64, u32)],
    idx: usize,
    left: usize,
    p1: i64,
    p2: i64,
    out: &mut BTreeSet<(i64, i64)>,
) {
    if left == 0 {
        out.insert((p1, p2));
        return;
    }
    if idx == caps.len() {
        return;
    }
    let (root, cap) = caps[idx];
    let take_max = left.min(cap as usize);
    for take in 0..=take_max {
        let t = take as i64;
        collect_power_sums(
            caps,
            idx + 1,
            left - take,
            p1 + t * root,
            p2 + t * root * root,
            out,
        );
    }
}

struct Search<'a> {
    m: usize,
    k: u32,
    a: Vec<u32>,
    filter: Option<&'a LeafFilter>,
    shared: &'a SharedBudget,
    nodes_since_flush: u64,
    out: BTreeSet<ColourMatrix>,
    p1: i64,
    p2: i64,
    /// 2 * sum of filled entries a[i][c] (c in unfilled columns, a[i][c] > 0):
    /// a lower bound on the cross contribution still to come in tr(A^2).
    cross_min: i64,
}

impl<'a> Search<'a> {
    fn new(k: u32, m: usize, filter: Option<&'a LeafFilter>, shared: &'a SharedBudget) -> Self {
        Search {
            m,
            k,
            a: vec![0; m * m],
            filter,
            shared,
            nodes_since_flush: 0,
            out: BTreeSet::new(),
            p1: 0,
            p2: 0,
            cross_min: 0,
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.m + j]
    }

    /// Counts a row placement against the budget. False means abort.
    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes_since_flush += 1;
        if self.nodes_since_flush >= FLUSH_EVERY {
            let total = self
                .shared
                .used
                .fetch_add(self.nodes_since_flush, Ordering::Relaxed)
                + self.nodes_since_flush;
            self.nodes_since_flush = 0;
            if total > self.shared.limit {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
            if self.shared.abort.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        self.shared
            .used
            .fetch_add(self.nodes_since_flush, Ordering::Relaxed);
        self.nodes_since_flush = 0;
    }

    /// Row r has just been written into `self.a`. Runs all row-level checks
    /// and descends. Returns false only on budget abort.
    fn row_placed(&mut self, r: usize) -> bool {
        if !self.tick() {
            self.flush();
            return false;
        }
        if !self.prefix_cycles_ok(r) || !self.components_ok(r) {
            return true;
        }

        // Incremental power-sum trackers and window pruning.
        let (save_p1, save_p2, save_cross) = (self.p1, self.p2, self.cross_min);
        let diag = self.at(r, r) as i64;
        self.p1 += diag;
        self.p2 += diag * diag;
        for i in 0..r {
            let fwd = self.at(i, r) as i64;
            let bwd = self.at(r, i) as i64;
            self.p2 += 2 * fwd * bwd;
            if fwd > 0 {
                self.cross_min -= 2 * fwd;
            }
        }
        for c in r + 1..self.m {
            let e = self.at(r, c) as i64;
            if e > 0 {
                self.cross_min += 2 * e;
            }
        }

        let ok = if self.windows_ok(r) {
            if r + 1 == self.m {
                self.leaf();
                true
            } else {
                self.fill_row(r + 1)
            }
        } else {
            true
        };

        self.p1 = save_p1;
        self.p2 = save_p2;
        self.cross_min = save_cross;
        ok
    }

    fn windows_ok(&self, r: usize) -> bool {
        let Some(filter) = self.filter else {
            return true;
        };
        let Some(allowed) = &filter.allowed else {
            return true;
        };
        let future = (self.m - 1 - r) as i64;
        let k = self.k as i64;
        let a00 = self.a[0] as i64;
        let p1_lo = self.p1 + future * a00;
        let p1_hi = self.p1 + future * k;
        let p2_lo = self.p2 + self.cross_min + future * a00 * a00;
        let p2_hi = self.p2 + self.cross_min + 2 * future * k * k;
        allowed.feasible(p1_lo, p1_hi, p2_lo, p2_hi)
    }

    /// Consistency of every colour cycle whose largest index is r.
    fn prefix_cycles_ok(&self, r: usize) -> bool {
        if r < 2 {
            return true;
        }
        self.cycle_dfs(r, r, 1, 1, 0, usize::MAX)
    }

    fn cycle_dfs(&self, anchor: usize, last: usize, fwd: u64, bwd: u64, used: u32, first: usize) -> bool {
        for next in 0..anchor {
            if used >> next & 1 == 1 {
                continue;
            }
            let step_f = self.at(last, next) as u64;
            let step_b = self.at(next, last) as u64;
            if step_f == 0 {
                // Weak symmetry holds for the filled prefix, so the reverse
                // entry is zero too and every cycle through here is trivial.
                continue;
            }
            let (nf, nb) = (fwd * step_f, bwd * step_b);
            let first_here = if first == usize::MAX { next } else { first };
            if first != usize::MAX && first < next {
                let close_f = self.at(next, anchor) as u64;
                if close_f != 0 && nf * close_f != nb * self.at(anchor, next) as u64 {
                    return false;
                }
            }
            if !self.cycle_dfs(anchor, next, nf, nb, used | 1 << next, first_here) {
                return false;
            }
        }
        true
    }

    /// No support component of the filled prefix may be cut off from the
    /// unfilled columns unless it already spans all colours. At the last row
    /// this is exactly the irreducibility check.
    fn components_ok(&self, r: usize) -> bool {
        let filled = r + 1;
        let mut comp: Vec<usize> = (0..filled).collect();
        fn find(comp: &mut Vec<usize>, x: usize) -> usize {
            let mut root = x;
            while comp[root] != root {
                root = comp[root];
            }
            let mut cur = x;
            while comp[cur] != root {
                let next = comp[cur];
                comp[cur] = root;
                cur = next;
            }
            root
        }
        for i in 0..filled {
            for j in 0..i {
                if self.at(i, j) != 0 || self.at(j, i) != 0 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    if a != b {
                        comp[a] = b;
                    }
                }
            }
        }
        // A component is open while some member has a nonzero entry into an
        // unfilled column (weak symmetry will create the back edge later).
        let mut open = vec![false; filled];
        for i in 0..filled {
            if (filled..self.m).any(|c| self.at(i, c) != 0) {
                let root = find(&mut comp, i);
                open[root] = true;
            }
        }
        let roots: Vec<usize> = (0..filled)
            .filter(|&i| find(&mut comp, i) == i)
            .collect();
        if filled == self.m {
            roots.len() == 1
        } else {
            roots.iter().all(|&root| open[root])
        }
    }

    /// Generates all admissible compositions for row r and recurses.
    fn fill_row(&mut self, r: usize) -> bool {
        let m = self.m;
        // Column minima: forced positive under fixed (c, r) entries, forced
        // zero otherwise for c < r; the diagonal may not undercut a[0][0]
        // (the canonical representative has the least diagonal entry first,
        // so pruning such rows never loses a colour-permutation class).
        let mut minima = vec![0u32; m];
        let mut zero = vec![false; m];
        for c in 0..r {
            if self.at(c, r) != 0 {
                minima[c] = 1;
            } else {
                zero[c] = true;
            }
        }
        minima[r] = self.a[0];
        let mut suffix_min = vec![0u32; m + 1];
        for c in (0..m).rev() {
            suffix_min[c] = suffix_min[c + 1] + minima[c];
        }
        if suffix_min[0] > self.k {
            return true;
        }
        self.fill_cell(r, 0, self.k, &minima, &zero, &suffix_min)
    }

    fn fill_cell(
        &mut self,
        r: usize,
        c: usize,
        left: u32,
        minima: &[u32],
        zero: &[bool],
        suffix_min: &[u32],
    ) -> bool {
        if c == self.m {
            return self.row_placed(r);
        }
        if zero[c] {
            self.a[r * self.m + c] = 0;
            return self.fill_cell(r, c + 1, left, minima, zero, suffix_min);
        }
        let hi = left - suffix_min[c + 1];
        for v in minima[c]..=hi {
            self.a[r * self.m + c] = v;
            if !self.fill_cell(r, c + 1, left - v, minima, zero, suffix_min) {
                return false;
            }
        }
        self.a[r * self.m + c] = 0;
        true
    }

    fn leaf(&mut self) {
        if let Some(filter) = self.filter {
            if !self.leaf_divides(filter) {
                return;
            }
        }
        let matrix = ColourMatrix::from_flat(self.m, self.a.clone()).unwrap();
        debug_assert!(matrix.is_weakly_symmetric());
        debug_assert!(matrix.is_consistent());
        debug_assert!(matrix.is_irreducible());
        self.out.insert(matrix.canonical());
    }

    fn leaf_divides(&self, filter: &LeafFilter) -> bool {
        match &filter.roots {
            Some(roots) => {
                // The candidate divides iff its characteristic polynomial
                // splits over the target roots within multiplicity caps.
                let mut poly = char_poly_i128(self.m, &self.a);
                let mut degree = self.m;
                for &(root, cap) in roots {
                    let mut used = 0;
                    while used < cap {
                        match deflate_i128(&poly[..=degree], root) {
                            Some(next) => {
                                poly[..degree].copy_from_slice(&next);
                                degree -= 1;
                                used += 1;
                            }
                            None => break,
                        }
                    }
                    if degree == 0 {
                        break;
                    }
                }
                degree == 0
            }
            None => {
                let matrix = ColourMatrix::from_flat(self.m, self.a.clone()).unwrap();
                char_poly_of_matrix(&matrix)
                    .map(|p| p.divides(&filter.poly))
                    .unwrap_or(false)
            }
        }
    }
}

/// Characteristic polynomial of a small matrix, constant term first.
/// Faddeev-LeVerrier in i128; exact for the orders and entries allowed here.
fn char_poly_i128(m: usize, a: &[u32]) -> Vec<i128> {
    let n = m;
    let a: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mat = a.clone();
    for k in 1..=n {
        let tr: i128 = (0..n).map(|i| mat[i * n + i]).sum();
        let c = -tr / (k as i128);
        debug_assert_eq!(-tr % (k as i128), 0);
        coeffs[n - k] = c;
        if k == n {
            break;
        }
        let mut shifted = mat;
        for i in 0..n {
            shifted[i * n + i] += c;
        }
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = a[i * n + l];
                if ail == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += ail * shifted[l * n + j];
                }
            }
        }
        mat = next;
    }
    coeffs
}

/// Synthetic division by (x - root); `None` if the remainder is nonzero.
fn deflate_i128(coeffs: &[i128], root: i64) -> Option<Vec<i128>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return None;
    }
    let mut out = vec![0i128; n];
    let mut carry = 0i128;
    for i in (0..n).rev() {
        carry = coeffs[i + 1] + carry * root as i128;
        out[i] = carry;
    }
    (coeffs[0] + carry * root as i128 == 0).then_some(out)
}

/// Filters an existing candidate set by exact divisibility. Thin wrapper
/// kept for symmetry with the fused path.
pub fn filter_candidates(
    candidates: &BTreeSet<ColourMatrix>,
    g: &Graph,
) -> Result<BTreeSet<ColourMatrix>, SpectrumError> {
    crate::poly::spectral_filter(candidates, g)
}

/// BigInt cross-check used by tests: no i128 shortcut.
#[doc(hidden)]
pub fn char_poly_reference(a: &ColourMatrix) -> Vec<BigInt> {
    char_poly_of_matrix(a).unwrap().coeffs().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::matrix;

    fn opts() -> EnumerateOptions {
        EnumerateOptions::default()
    }

    /// Independent oracle: enumerate every row-sum-k matrix directly from
    /// per-row compositions and apply the public predicates.
    fn naive(k: u32, m: usize) -> BTreeSet<ColourMatrix> {
        let mut rows_pool: Vec<Vec<u32>> = Vec::new();
        compositions(k, m, &mut |row| rows_pool.push(row.to_vec()));
        let mut out = BTreeSet::new();
        let mut pick = vec![0usize; m];
        loop {
            let rows: Vec<Vec<u32>> = pick.iter().map(|&i| rows_pool[i].clone()).collect();
            let a = ColourMatrix::from_rows(rows).unwrap();
            if a.is_weakly_symmetric() && a.is_consistent() && a.is_irreducible() {
                out.insert(a.canonical());
            }
            let mut idx = m;
            loop {
                if idx == 0 {
                    return out;
                }
                idx -= 1;
                pick[idx] += 1;
                if pick[idx] < rows_pool.len() {
                    break;
                }
                pick[idx] = 0;
            }
        }
    }

    #[test]
    fn single_colour() {
        for k in 1..=5 {
            let set = enumerate_candidates(k, 1, &opts()).unwrap();
            assert_eq!(set, BTreeSet::from([matrix(&[&[k]])]));
        }
    }

    #[test]
    fn two_colour_counts() {
        // Frozen from the naive oracle below and hand counting of the
        // swap-equivalence classes.
        assert_eq!(enumerate_candidates(4, 2, &opts()).unwrap().len(), 10);
        assert_eq!(enumerate_candidates(5, 2, &opts()).unwrap().len(), 15);
        assert_eq!(enumerate_candidates(3, 2, &opts()).unwrap().len(), 6);
    }

    #[test]
    fn matches_naive_oracle() {
        for (k, m) in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (4, 3)] {
            let fast = enumerate_candidates(k, m, &opts()).unwrap();
            assert_eq!(fast, naive(k, m), "k={k} m={m}");
        }
    }

    #[test]
    fn three_colour_degree_four_count() {
        // All candidate matrices for perfect 3-colourings of 4-regular graphs.
        assert_eq!(enumerate_candidates(4, 3, &opts()).unwrap().len(), 64);
    }

    #[test]
    fn fused_filter_equals_filter_after_enumerate() {
        let g = Graph::hypercube(4).unwrap();
        let target = SpectralTarget::from_graph(&g).unwrap();
        for m in 1..=4 {
            let fused = enumerate_filtered(4, m, &target, &opts()).unwrap();
            let plain = enumerate_candidates(4, m, &opts()).unwrap();
            let filtered = filter_candidates(&plain, &g).unwrap();
            assert_eq!(fused, filtered, "m={m}");
        }
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let res = enumerate_candidates(5, 4, &EnumerateOptions {
            budget: Some(10),
            jobs: 1,
        });
        assert!(matches!(res, Err(EnumerateError::Incomplete { .. })));
    }

    #[test]
    fn outputs_are_canonical_and_pass_predicates() {
        for (k, m) in [(4, 2), (4, 3), (5, 2), (5, 3), (3, 4)] {
            let set = enumerate_candidates(k, m, &opts()).unwrap();
            for a in &set {
                assert_eq!(a, &a.canonical());
                assert!(a.is_weakly_symmetric());
                assert!(a.is_consistent());
                assert!(a.is_irreducible());
                assert_eq!(a.uniform_row_sum(), Some(k));
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = enumerate_candidates(5, 3, &opts()).unwrap();
        let par = enumerate_candidates(
            5,
            3,
            &EnumerateOptions {
                budget: None,
                jobs: 4,
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn char_poly_i128_matches_bigint() {
        for a in enumerate_candidates(4, 3, &opts()).unwrap() {
            let fast = char_poly_i128(3, a.entries());
            let slow = char_poly_reference(&a);
            let fast_big: Vec<BigInt> = fast.iter().map(|&c| BigInt::from(c)).collect();
            assert_eq!(fast_big, slow);
        }
    }
}
