//! Concrete N x N matrix realization of `sl(N,R)`.
//!
//! Exact integer matrices only; this module is a structure-constant
//! self-test harness, not a numerics engine. It builds the compact basis
//! `X_ij = e_ij - e_ji`, the symmetric complement `Y_ij = e_ij + e_ji` with
//! the Cartan elements `H_j`, the simple raising/lowering vectors, and
//! checks the sl(2) triple relations by exact commutators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::weyl::ParabolicSpec;

/// Exact integer N x N matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixElement {
    n: usize,
    entries: Vec<i64>,
}

impl MatrixElement {
    pub fn zero(n: usize) -> MatrixElement {
        MatrixElement {
            n,
            entries: vec![0; n * n],
        }
    }

    /// The standard matrix `e_ij` with a single 1 at row `i`, column `j` (1-based).
    pub fn standard(n: usize, i: usize, j: usize) -> MatrixElement {
        let mut m = MatrixElement::zero(n);
        m.entries[(i - 1) * n + (j - 1)] = 1;
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.entries[i * self.n + i]).sum()
    }

    pub fn transpose(&self) -> MatrixElement {
        let mut out = MatrixElement::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.entries[j * self.n + i] = self.entries[i * self.n + j];
            }
        }
        out
    }

    pub fn add(&self, rhs: &MatrixElement) -> MatrixElement {
        assert_eq!(self.n, rhs.n);
        MatrixElement {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &MatrixElement) -> MatrixElement {
        assert_eq!(self.n, rhs.n);
        MatrixElement {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: i64) -> MatrixElement {
        MatrixElement {
            n: self.n,
            entries: self.entries.iter().map(|a| s * a).collect(),
        }
    }

    pub fn mul(&self, rhs: &MatrixElement) -> MatrixElement {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = MatrixElement::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.entries[l * n + j];
                }
            }
        }
        out
    }

    /// Exact commutator `[self, rhs]`.
    pub fn commutator(&self, rhs: &MatrixElement) -> MatrixElement {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// Cartan involution `theta X = -X^t`.
    pub fn cartan_involution(&self) -> MatrixElement {
        self.transpose().scale(-1)
    }
}

/// Basis of `sl(N,R)` split along the Cartan involution.
#[derive(Debug, Clone)]
pub struct SlBasis {
    /// `X_ij = e_ij - e_ji`, `i < j`; spans the maximal compact `so(N)`.
    pub k_basis: Vec<MatrixElement>,
    /// `Y_ij = e_ij + e_ji`, `i < j`; the off-diagonal part of `p`.
    pub p_basis: Vec<MatrixElement>,
    /// `H_j = e_jj - e_{j+1,j+1}`, `j = 1..N-1`.
    pub cartan: Vec<MatrixElement>,
    /// Simple raising vectors `X+_j = e_{j,j+1}`.
    pub raise: Vec<MatrixElement>,
    /// Simple lowering vectors `X-_j = e_{j+1,j}`.
    pub lower: Vec<MatrixElement>,
}

/// Builds the full basis for `sl(matrix_size, R)`.
pub fn build_basis(matrix_size: usize) -> Result<SlBasis, Error> {
    if matrix_size < 2 {
        return Err(Error::Domain(format!(
            "matrix size must be at least 2, got {matrix_size}"
        )));
    }
    let n = matrix_size;
    let mut k_basis = Vec::new();
    let mut p_basis = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let eij = MatrixElement::standard(n, i, j);
            let eji = MatrixElement::standard(n, j, i);
            k_basis.push(eij.sub(&eji));
            p_basis.push(eij.add(&eji));
        }
    }
    let mut cartan = Vec::new();
    let mut raise = Vec::new();
    let mut lower = Vec::new();
    for j in 1..n {
        cartan.push(
            MatrixElement::standard(n, j, j).sub(&MatrixElement::standard(n, j + 1, j + 1)),
        );
        raise.push(MatrixElement::standard(n, j, j + 1));
        lower.push(MatrixElement::standard(n, j + 1, j));
    }
    Ok(SlBasis {
        k_basis,
        p_basis,
        cartan,
        raise,
        lower,
    })
}

/// Per-index outcome of the sl(2) triple relations for one simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2Check {
    pub index: usize,
    /// `[X+_j, X-_j] = H_j`
    pub bracket_ok: bool,
    /// `[H_j, X+_j] = 2 X+_j`
    pub raise_ok: bool,
    /// `[H_j, X-_j] = -2 X-_j`
    pub lower_ok: bool,
}

impl Sl2Check {
    pub fn all_ok(&self) -> bool {
        self.bracket_ok && self.raise_ok && self.lower_ok
    }
}

/// Report of the sl(2) triple checks for every simple root index.
#[derive(Debug, Clone)]
pub struct Sl2Report {
    pub checks: Vec<Sl2Check>,
}

impl Sl2Report {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(Sl2Check::all_ok)
    }
}

/// Verifies `[X+_j, X-_j] = H_j` and `[H_j, X±_j] = ±2 X±_j` by exact
/// commutators, per index.
pub fn check_sl2_triples(matrix_size: usize) -> Result<Sl2Report, Error> {
    let basis = build_basis(matrix_size)?;
    let checks = (0..matrix_size - 1)
        .map(|idx| {
            let (h, xp, xm) = (&basis.cartan[idx], &basis.raise[idx], &basis.lower[idx]);
            Sl2Check {
                index: idx + 1,
                bracket_ok: xp.commutator(xm) == *h,
                raise_ok: h.commutator(xp) == xp.scale(2),
                lower_ok: h.commutator(xm) == xm.scale(-2),
            }
        })
        .collect();
    Ok(Sl2Report { checks })
}

/// Dimensions of the pieces of a maximal parabolic `p = m + a + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    pub m_dim: usize,
    pub a_dim: usize,
    pub n_dim: usize,
}

impl ParabolicDecomposition {
    /// `m + a + n + ñ`, which must equal `N^2 - 1`.
    pub fn total_with_opposite(&self) -> usize {
        self.m_dim + self.a_dim + 2 * self.n_dim
    }
}

/// Dimension bookkeeping for the maximal parabolic cut at `alpha_k`:
/// `m = sl(k) + sl(N-k)`, `dim a = 1`, `dim n = k (N-k)`.
pub fn parabolic_dimensions(spec: &ParabolicSpec) -> ParabolicDecomposition {
    let (n, k) = (spec.matrix_size(), spec.removed_index());
    ParabolicDecomposition {
        m_dim: (k * k - 1) + ((n - k) * (n - k) - 1),
        a_dim: 1,
        n_dim: k * (n - k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_counts_and_traces() {
        let b = build_basis(4).unwrap();
        assert_eq!(b.k_basis.len(), 6);
        assert_eq!(b.p_basis.len(), 6);
        assert_eq!(b.cartan.len(), 3);
        for m in b.k_basis.iter().chain(&b.p_basis).chain(&b.cartan) {
            assert_eq!(m.trace(), 0);
        }
        assert!(build_basis(1).is_err());
    }

    #[test]
    fn cartan_involution_fixes_compact_basis() {
        let b = build_basis(5).unwrap();
        for x in &b.k_basis {
            assert_eq!(x.cartan_involution(), *x);
        }
        for y in &b.p_basis {
            assert_eq!(y.cartan_involution(), y.scale(-1));
        }
    }

    #[test]
    fn h1_for_sl2() {
        let b = build_basis(2).unwrap();
        let h = &b.cartan[0];
        assert_eq!((h.entry(1, 1), h.entry(2, 2)), (1, -1));
        assert_eq!(h.entry(1, 2), 0);
    }

    #[test]
    fn sl2_triples_hold() {
        for n in 2..=8 {
            let report = check_sl2_triples(n).unwrap();
            assert_eq!(report.checks.len(), n - 1);
            assert!(report.all_ok(), "failed at N={n}");
        }
    }

    #[test]
    fn parabolic_dimension_examples() {
        let d = parabolic_dimensions(&ParabolicSpec::new(4, 2).unwrap());
        assert_eq!((d.m_dim, d.a_dim, d.n_dim), (6, 1, 4));
        assert_eq!(d.total_with_opposite(), 15);

        let d = parabolic_dimensions(&ParabolicSpec::new(6, 3).unwrap());
        assert_eq!((d.m_dim, d.a_dim, d.n_dim), (16, 1, 9));

        let d = parabolic_dimensions(&ParabolicSpec::new(2, 1).unwrap());
        assert_eq!((d.m_dim, d.a_dim, d.n_dim), (0, 1, 1));
    }

    #[test]
    fn dimension_bookkeeping_all_cuts() {
        for n in 2..=9usize {
            for k in 1..n {
                let d = parabolic_dimensions(&ParabolicSpec::new(n, k).unwrap());
                assert_eq!(d.total_with_opposite(), n * n - 1);
            }
        }
    }

    #[test]
    fn commutators_stay_traceless_and_compact_closes() {
        let b = build_basis(6).unwrap();
        for x in &b.k_basis {
            for y in &b.k_basis {
                let c = x.commutator(y);
                assert_eq!(c.trace(), 0);
                // so(N) closure: the bracket of antisymmetric matrices is antisymmetric
                assert_eq!(c.cartan_involution(), c);
            }
        }
    }
}
