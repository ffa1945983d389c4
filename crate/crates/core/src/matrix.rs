//! Colour adjacency matrices and the feasibility predicates on them.
//!
//! An m-colouring of a k-regular graph is perfect exactly when every vertex
//! of colour i has the same number `a[i][j]` of neighbours of colour j; the
//! matrix of these counts is the colour adjacency matrix. Matrices that are
//! colour permutations of each other describe the same colouring, so sets of
//! candidates are always kept as canonical representatives.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix must be square and nonempty, got {rows} rows and {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix text is empty")]
    EmptyText,
    #[error("bad entry {0:?}")]
    BadEntry(String),
    #[error("colour index {0} out of range 1..={1}")]
    ColourOutOfRange(usize, usize),
}

/// m x m nonnegative integer matrix of neighbour counts per colour pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourMatrix {
    m: usize,
    a: Vec<u32>,
}

impl ColourMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(MatrixError::NotSquare {
                rows: m,
                cols: rows.first().map_or(0, |r| r.len()),
            });
        }
        Ok(ColourMatrix {
            m,
            a: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(m: usize, a: Vec<u32>) -> Result<Self, MatrixError> {
        if m == 0 || a.len() != m * m {
            return Err(MatrixError::NotSquare {
                rows: m,
                cols: if m == 0 { 0 } else { a.len() / m },
            });
        }
        Ok(ColourMatrix { m, a })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.m + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.a
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.a[i * self.m..(i + 1) * self.m]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.m).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sum(&self, i: usize) -> u32 {
        self.row(i).iter().sum()
    }

    /// The common row sum k, if all rows agree (the degree tag).
    pub fn uniform_row_sum(&self) -> Option<u32> {
        let k = self.row_sum(0);
        (1..self.m).all(|i| self.row_sum(i) == k).then_some(k)
    }

    /// a[i][j] = 0 exactly when a[j][i] = 0.
    pub fn is_weakly_symmetric(&self) -> bool {
        (0..self.m).all(|i| (0..i).all(|j| (self.get(i, j) == 0) == (self.get(j, i) == 0)))
    }

    /// Cyclic products match their reversals for every cycle of distinct
    /// colours. Cycles are walked once up to rotation and reflection by
    /// anchoring each at its largest colour index.
    pub fn is_consistent(&self) -> bool {
        (2..self.m).all(|anchor| self.cycles_through_anchor_consistent(anchor))
    }

    fn cycles_through_anchor_consistent(&self, anchor: usize) -> bool {
        // DFS over paths anchor -> x1 -> ... -> xt with xi < anchor, closing
        // back to anchor. Reflections are skipped by requiring x1 < xt.
        // Products stay well below u64 even for m = 8 and entries <= 64.
        struct Dfs<'a> {
            a: &'a ColourMatrix,
            anchor: usize,
            path: Vec<usize>,
            used: u32,
        }
        impl Dfs<'_> {
            fn run(&mut self, last: usize, fwd: u128, bwd: u128) -> bool {
                for next in 0..self.anchor {
                    if self.used >> next & 1 == 1 {
                        continue;
                    }
                    let step_f = self.a.get(last, next) as u128;
                    let step_b = self.a.get(next, last) as u128;
                    if step_f == 0 && step_b == 0 {
                        continue;
                    }
                    let (fwd, bwd) = (fwd * step_f, bwd * step_b);
                    self.path.push(next);
                    self.used |= 1 << next;
                    if self.path.len() >= 2 && self.path[0] < next {
                        let close_f = self.a.get(next, self.anchor) as u128;
                        let close_b = self.a.get(self.anchor, next) as u128;
                        if (close_f != 0 || close_b != 0) && fwd * close_f != bwd * close_b {
                            return false;
                        }
                    }
                    if (fwd != 0 || bwd != 0) && !self.run(next, fwd, bwd) {
                        return false;
                    }
                    self.used &= !(1 << next);
                    self.path.pop();
                }
                true
            }
        }
        let mut dfs = Dfs {
            a: self,
            anchor,
            path: Vec::new(),
            used: 0,
        };
        dfs.run(anchor, 1, 1)
    }

    /// Support graph on colours (edge when a[i][j] != 0, i != j) is connected.
    /// Under weak symmetry this is the usual irreducibility of the matrix.
    pub fn is_irreducible(&self) -> bool {
        let m = self.m;
        let mut reached: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut next = 0u32;
            for i in 0..m {
                if frontier >> i & 1 == 0 {
                    continue;
                }
                for j in 0..m {
                    if i != j && reached >> j & 1 == 0 && (self.get(i, j) != 0 || self.get(j, i) != 0)
                    {
                        next |= 1 << j;
                    }
                }
            }
            reached |= next;
            frontier = next;
        }
        reached == (1u32 << m) - 1 || m == 1
    }

    /// Applies a colour permutation: result[i][j] = self[perm[i]][perm[j]].
    pub fn permuted(&self, perm: &[usize]) -> ColourMatrix {
        debug_assert_eq!(perm.len(), self.m);
        let mut a = Vec::with_capacity(self.m * self.m);
        for i in 0..self.m {
            for j in 0..self.m {
                a.push(self.get(perm[i], perm[j]));
            }
        }
        ColourMatrix { m: self.m, a }
    }

    /// Lexicographically least row-major sequence over all simultaneous
    /// row-and-column permutations, together with the permutation achieving
    /// it (ties broken by the lexicographically least permutation).
    pub fn canonicalize(&self) -> CanonicalForm {
        let mut best = self.clone();
        let mut best_perm: Vec<usize> = (0..self.m).collect();
        for perm in (0..self.m).permutations(self.m) {
            let candidate = self.permuted(&perm);
            if candidate.a < best.a {
                best = candidate;
                best_perm = perm;
            }
        }
        CanonicalForm {
            matrix: best,
            perm: best_perm,
        }
    }

    /// Shorthand for the canonical representative matrix.
    pub fn canonical(&self) -> ColourMatrix {
        self.canonicalize().matrix
    }

    /// All colour permutations that leave the matrix unchanged.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .permutations(self.m)
            .filter(|p| self.permuted(p) == *self)
            .collect()
    }

    /// Fuses colours i and j (0-based) when doing so preserves perfection:
    /// the two rows must agree outside {i, j} and the fused diagonal counts
    /// must match. The merged class sits at position min(i, j); other rows
    /// get their i and j columns summed into the fused column.
    pub fn merge_colours(&self, i: usize, j: usize) -> Option<ColourMatrix> {
        assert!(i != j && i < self.m && j < self.m, "bad merge pair");
        let (lo, hi) = (i.min(j), i.max(j));
        for l in 0..self.m {
            if l != i && l != j && self.get(i, l) != self.get(j, l) {
                return None;
            }
        }
        if self.get(i, i) + self.get(i, j) != self.get(j, i) + self.get(j, j) {
            return None;
        }
        let keep: Vec<usize> = (0..self.m).filter(|&l| l != hi).collect();
        let m2 = self.m - 1;
        let mut a = Vec::with_capacity(m2 * m2);
        for &r in &keep {
            for &c in &keep {
                let val = if r == lo && c == lo {
                    self.get(i, i) + self.get(i, j)
                } else if r == lo {
                    self.get(i, c)
                } else if c == lo {
                    self.get(r, lo) + self.get(r, hi)
                } else {
                    self.get(r, c)
                };
                a.push(val);
            }
        }
        Some(ColourMatrix { m: m2, a })
    }

    /// All mergeable pairs with their merged matrices.
    pub fn merge_options(&self) -> Vec<(usize, usize, ColourMatrix)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                if let Some(merged) = self.merge_colours(i, j) {
                    out.push((i, j, merged));
                }
            }
        }
        out
    }
}

/// Canonical representative of a colour-permutation class.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    matrix: ColourMatrix,
    perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn matrix(&self) -> &ColourMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ColourMatrix {
        self.matrix
    }

    /// Permutation p with canonical[i][j] = original[p[i]][p[j]].
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.matrix.cmp(&other.matrix)
    }
}

impl fmt::Debug for ColourMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColourMatrix({self})")
    }
}

/// Text form: rows joined by ';', entries by ','. Whitespace is ignored.
impl fmt::Display for ColourMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = (0..self.m)
            .map(|i| self.row(i).iter().map(u32::to_string).join(","))
            .join(";");
        write!(f, "{rows}")
    }
}

impl FromStr for ColourMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(MatrixError::EmptyText);
        }
        let rows: Vec<Vec<u32>> = compact
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        tok.parse::<u32>()
                            .map_err(|_| MatrixError::BadEntry(tok.to_string()))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        ColourMatrix::from_rows(rows)
    }
}

impl Serialize for ColourMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ColourMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        ColourMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Convenience for fixtures and tests.
pub fn matrix(rows: &[&[u32]]) -> ColourMatrix {
    ColourMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> ColourMatrix {
        matrix(rows)
    }

    #[test]
    fn weak_symmetry_cases() {
        assert!(m(&[&[0, 4], &[2, 2]]).is_weakly_symmetric());
        assert!(!m(&[&[0, 4], &[0, 4]]).is_weakly_symmetric());
        assert!(m(&[&[0, 5, 0], &[1, 0, 4], &[0, 2, 3]]).is_weakly_symmetric());
    }

    #[test]
    fn consistency_cases() {
        assert!(m(&[&[0, 1, 2], &[1, 0, 2], &[1, 1, 1]]).is_consistent());
        assert!(!m(&[&[0, 1, 3], &[2, 0, 2], &[1, 2, 1]]).is_consistent());
        // Any 2x2 matrix is consistent: the two-cycle products coincide.
        for a in 0..3 {
            for b in 0..3 {
                assert!(m(&[&[a, 1], &[b, 2]]).is_consistent());
            }
        }
        // Four-cycle violation is caught, not just triangles.
        assert!(!m(&[
            &[0, 1, 0, 1],
            &[1, 0, 1, 0],
            &[0, 1, 0, 2],
            &[2, 0, 1, 0]
        ])
        .is_consistent());
    }

    #[test]
    fn irreducibility_cases() {
        assert!(m(&[&[0, 4], &[4, 0]]).is_irreducible());
        assert!(!m(&[&[4, 0], &[0, 4]]).is_irreducible());
        assert!(m(&[&[2, 0, 2], &[0, 2, 2], &[1, 1, 2]]).is_irreducible());
        assert!(m(&[&[3]]).is_irreducible());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            m(&[&[2, 2], &[4, 0]]).canonical(),
            m(&[&[0, 4], &[2, 2]])
        );
        assert_eq!(
            m(&[&[0, 4], &[4, 0]]).canonical(),
            m(&[&[0, 4], &[4, 0]])
        );
        // Frozen from checking both permutations of S_2 by hand.
        assert_eq!(
            m(&[&[3, 1], &[3, 1]]).canonical(),
            m(&[&[1, 3], &[1, 3]])
        );
    }

    #[test]
    fn canonicalize_reports_achieving_permutation() {
        let a = m(&[&[2, 2], &[4, 0]]);
        let canon = a.canonicalize();
        assert_eq!(a.permuted(canon.permutation()), *canon.matrix());
    }

    #[test]
    fn merge_cases() {
        assert_eq!(
            m(&[&[0, 0, 4], &[0, 0, 4], &[1, 1, 2]]).merge_colours(0, 1),
            Some(m(&[&[0, 4], &[2, 2]]))
        );
        assert_eq!(
            m(&[&[2, 2, 0], &[1, 0, 3], &[0, 2, 2]]).merge_colours(0, 2),
            Some(m(&[&[2, 2], &[4, 0]]))
        );
        assert_eq!(
            m(&[&[0, 5, 0], &[1, 0, 4], &[0, 2, 3]]).merge_colours(0, 1),
            None
        );
    }

    #[test]
    fn merge_preserves_row_sum_and_weak_symmetry() {
        let cases = [
            m(&[&[0, 0, 4], &[0, 0, 4], &[1, 1, 2]]),
            m(&[&[2, 2, 0], &[1, 0, 3], &[0, 2, 2]]),
            m(&[&[0, 1, 4], &[1, 0, 4], &[1, 1, 3]]),
        ];
        for a in &cases {
            let k = a.uniform_row_sum().unwrap();
            for (_, _, merged) in a.merge_options() {
                assert_eq!(merged.uniform_row_sum(), Some(k));
                assert!(merged.is_weakly_symmetric());
                assert!(merged.is_consistent());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a: ColourMatrix = "0,4;2,2".parse().unwrap();
        assert_eq!(a, m(&[&[0, 4], &[2, 2]]));
        assert_eq!(a.to_string(), "0,4;2,2");
        let spaced: ColourMatrix = " 0 , 4 ; 2 , 2 ".parse().unwrap();
        assert_eq!(spaced, a);
        assert!("0,4;2".parse::<ColourMatrix>().is_err());
        assert!("a,b".parse::<ColourMatrix>().is_err());
        let json: ColourMatrix = serde_json::from_str("[[0,4],[2,2]]").unwrap();
        assert_eq!(json, a);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[0,4],[2,2]]");
    }
}
