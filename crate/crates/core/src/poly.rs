//! Exact characteristic polynomials and the eigenvalue divisibility filter.
//!
//! The colour adjacency matrix of any perfect colouring has a characteristic
//! polynomial dividing that of the graph's adjacency matrix, so exact
//! divisibility over the integers is a sound candidate filter. Everything
//! here is integer arithmetic; there are no floating-point eigensolvers.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::ColourMatrix;

/// Largest matrix order accepted by the exact characteristic polynomial.
pub const MAX_CHAR_POLY_ORDER: usize = 64;

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("matrix order {0} exceeds the characteristic polynomial bound {MAX_CHAR_POLY_ORDER}")]
    OrderTooLarge(usize),
    #[error("graph is {got}-regular but candidates have row sum {want}")]
    DegreeMismatch { got: u32, want: u32 },
    #[error("graph is not regular")]
    NotRegular,
}

/// Monic integer polynomial, coefficients constant-term first.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            coeffs.last().map(|c| c.is_one()).unwrap_or(false),
            "characteristic polynomial must be monic"
        );
        CharPoly { coeffs }
    }

    /// Expands a product of linear factors (x - root)^multiplicity.
    pub fn from_factors(factors: &[(i64, u32)]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &(root, mult) in factors {
            for _ in 0..mult {
                // Multiply by (x - root).
                let mut next = vec![BigInt::zero(); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * BigInt::from(root);
                }
                coeffs = next;
            }
        }
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, constant term first. This is the JSON order as well.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when `self` divides `other` over the rationals (equivalently the
    /// integers, both being monic): long division leaves no remainder.
    pub fn divides(&self, other: &CharPoly) -> bool {
        if self.degree() > other.degree() {
            return false;
        }
        let mut rem = other.coeffs.clone();
        let d = self.degree();
        // Monic divisor keeps every step exact over the integers.
        for top in (d..rem.len()).rev() {
            let q = rem[top].clone();
            if q.is_zero() {
                continue;
            }
            for (i, c) in self.coeffs.iter().enumerate() {
                let idx = top - d + i;
                rem[idx] = &rem[idx] - &q * c;
            }
            debug_assert!(rem[top].is_zero());
        }
        rem[..d].iter().all(Zero::is_zero)
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Divides out (x - root) once; `None` if root is not a root.
    pub fn deflate(&self, root: i64) -> Option<CharPoly> {
        if self.degree() == 0 {
            return None;
        }
        let r = BigInt::from(root);
        let mut out = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for i in (0..self.coeffs.len() - 1).rev() {
            carry = &self.coeffs[i + 1] + &carry * &r;
            out[i] = carry.clone();
        }
        let rem = &self.coeffs[0] + carry * r;
        rem.is_zero().then(|| CharPoly { coeffs: out })
    }

    /// Full integer factorization into linear factors, if one exists.
    /// Returns (root, multiplicity) pairs sorted ascending, or `None` when
    /// the polynomial does not split over the integers.
    pub fn integer_roots(&self) -> Option<Vec<(i64, u32)>> {
        let mut rest = self.clone();
        let mut roots: Vec<(i64, u32)> = Vec::new();
        while rest.degree() > 0 {
            // Monic: any integer root divides the constant term.
            let c0 = &rest.coeffs[0];
            let root = if c0.is_zero() {
                Some(0)
            } else {
                let limit: BigInt = c0.abs();
                let limit = i64::try_from(&limit).ok()?;
                divisors_of(limit)
                    .into_iter()
                    .flat_map(|d| [d, -d])
                    .find(|&r| rest.eval(r).is_zero())
            }?;
            let mut mult = 0;
            while let Some(next) = rest.deflate(root) {
                rest = next;
                mult += 1;
            }
            roots.push((root, mult));
        }
        roots.sort_unstable();
        Some(roots)
    }
}

fn divisors_of(n: i64) -> Vec<i64> {
    let n = n.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as i64);
            out.push((n / d) as i64);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "CharPoly({})", terms.join(" + "))
    }
}

/// Exact characteristic polynomial det(xI - A) of a square integer matrix,
/// by the Faddeev-LeVerrier recurrence. Every intermediate division is exact
/// over the integers, so the result is exact for any integer matrix.
fn char_poly_rows(rows: &[Vec<i64>]) -> Result<CharPoly, SpectrumError> {
    let n = rows.len();
    if n > MAX_CHAR_POLY_ORDER {
        return Err(SpectrumError::OrderTooLarge(n));
    }
    let a: Vec<BigInt> = rows
        .iter()
        .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M starts as A; c_{n-k} = -tr(M)/k; then M <- A (M + c_{n-k} I).
    let mut m_mat = a.clone();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| m_mat[i * n + i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        let mut shifted = m_mat;
        for i in 0..n {
            shifted[i * n + i] += &c;
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let alk = &a[i * n + l];
                if alk.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let s = &shifted[l * n + j];
                    if !s.is_zero() {
                        next[i * n + j] += alk * s;
                    }
                }
            }
        }
        m_mat = next;
    }
    Ok(CharPoly { coeffs })
}

/// Characteristic polynomial of a colour adjacency matrix.
pub fn char_poly_of_matrix(a: &ColourMatrix) -> Result<CharPoly, SpectrumError> {
    let rows: Vec<Vec<i64>> = a
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    char_poly_rows(&rows)
}

/// Characteristic polynomial of the graph's adjacency matrix (order <= 64).
pub fn char_poly_of_graph(g: &Graph) -> Result<CharPoly, SpectrumError> {
    let n = g.n();
    if n > MAX_CHAR_POLY_ORDER {
        return Err(SpectrumError::OrderTooLarge(n));
    }
    let mut rows = vec![vec![0i64; n]; n];
    for v in 0..n {
        for &w in g.neighbours(v) {
            rows[v][w as usize] = 1;
        }
    }
    char_poly_rows(&rows)
}

/// Keeps exactly the candidates whose characteristic polynomial divides the
/// graph's. The graph must be regular of the candidates' common row sum.
pub fn spectral_filter(
    candidates: &BTreeSet<ColourMatrix>,
    g: &Graph,
) -> Result<BTreeSet<ColourMatrix>, SpectrumError> {
    let degree = g.regularity().ok_or(SpectrumError::NotRegular)?;
    let target = char_poly_of_graph(g)?;
    let mut out = BTreeSet::new();
    for a in candidates {
        if let Some(k) = a.uniform_row_sum() {
            if k != degree {
                return Err(SpectrumError::DegreeMismatch {
                    got: degree,
                    want: k,
                });
            }
        }
        if char_poly_of_matrix(a)?.divides(&target) {
            out.insert(a.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::matrix;

    #[test]
    fn complete_5_spectrum() {
        let g = Graph::complete(5).unwrap();
        let p = char_poly_of_graph(&g).unwrap();
        assert_eq!(p, CharPoly::from_factors(&[(4, 1), (-1, 4)]));
    }

    #[test]
    fn hypercube_4_spectrum() {
        let g = Graph::hypercube(4).unwrap();
        let p = char_poly_of_graph(&g).unwrap();
        let expect = CharPoly::from_factors(&[(-4, 1), (-2, 4), (0, 6), (2, 4), (4, 1)]);
        assert_eq!(p, expect);
    }

    #[test]
    fn small_matrix_char_poly() {
        // Trace 4, determinant 0.
        let p = char_poly_of_matrix(&matrix(&[&[1, 3], &[1, 3]])).unwrap();
        let coeffs: Vec<i64> = p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(coeffs, vec![0, -4, 1]);
    }

    #[test]
    fn divides_cases() {
        let q4 = char_poly_of_graph(&Graph::hypercube(4).unwrap()).unwrap();
        assert!(q4.divides(&q4));
        // (x-4)(x+2), both roots in the spectrum.
        assert!(CharPoly::from_factors(&[(4, 1), (-2, 1)]).divides(&q4));
        // 3 is not an eigenvalue.
        assert!(!CharPoly::from_factors(&[(3, 1), (-1, 1)]).divides(&q4));
    }

    #[test]
    fn integer_roots_agree_with_divisibility_on_fixtures() {
        let fixtures = [
            CharPoly::from_factors(&[(4, 1), (-1, 4)]),
            CharPoly::from_factors(&[(5, 1), (-1, 5)]),
            CharPoly::from_factors(&[(-4, 1), (-2, 4), (0, 6), (2, 4), (4, 1)]),
            CharPoly::from_factors(&[(-5, 1), (-3, 5), (-1, 10), (1, 10), (3, 5), (5, 1)]),
        ];
        for q in &fixtures {
            let roots = q.integer_roots().unwrap();
            for p in &fixtures {
                let containment = {
                    let pr = p.integer_roots().unwrap();
                    pr.iter().all(|(r, m)| {
                        roots
                            .iter()
                            .any(|(qr, qm)| qr == r && qm >= m)
                    })
                };
                assert_eq!(p.divides(q), containment);
            }
        }
    }

    #[test]
    fn deflate_and_roots() {
        let p = CharPoly::from_factors(&[(2, 2), (-3, 1)]);
        assert_eq!(p.integer_roots(), Some(vec![(-3, 1), (2, 2)]));
        let q = p.deflate(2).unwrap();
        assert_eq!(q, CharPoly::from_factors(&[(2, 1), (-3, 1)]));
        assert!(p.deflate(7).is_none());
        // x^2 + 1 does not split.
        let p = CharPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        assert_eq!(p.integer_roots(), None);
    }

    #[test]
    fn filter_rejects_degree_mismatch() {
        let g = Graph::hypercube(4).unwrap();
        let set: BTreeSet<_> = [matrix(&[&[0, 5], &[1, 4]])].into();
        assert!(matches!(
            spectral_filter(&set, &g),
            Err(SpectrumError::DegreeMismatch { .. })
        ));
    }
}
