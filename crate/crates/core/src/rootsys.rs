//! A-series root system in Harish-Chandra coordinates.
//!
//! Positive roots of `A_{N-1}` are exactly the contiguous intervals
//! `alpha_p + ... + alpha_q` of simple roots, so a root is stored as the pair
//! `[p, q]`. A [`Signature`] holds the integer labels of a weight (already
//! shifted by rho) on the simple coroots; the Harish-Chandra parameter of any
//! positive root is then the interval sum of labels, and the shifted Weyl
//! reflection acts label-wise through [`cartan_pairing`].

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// Positive root `alpha_p + ... + alpha_q`, endpoints 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    pub p: usize,
    pub q: usize,
}

impl Root {
    /// Builds `[p, q]`, requiring `1 <= p <= q`.
    pub fn new(p: usize, q: usize) -> Result<Root, Error> {
        if p < 1 || q < p {
            return Err(Error::Domain(format!("invalid root interval [{p}, {q}]")));
        }
        Ok(Root { p, q })
    }

    /// The simple root `alpha_i`.
    pub fn simple(i: usize) -> Root {
        Root { p: i, q: i }
    }

    pub fn is_simple(&self) -> bool {
        self.p == self.q
    }

    /// Number of simple roots in the interval.
    pub fn len(&self) -> usize {
        self.q - self.p + 1
    }

    /// Whether the interval contains the index `i`.
    pub fn contains(&self, i: usize) -> bool {
        self.p <= i && i <= self.q
    }
}

// Canonical root order: simple roots first, then by interval length,
// lexicographic within a length.
impl Ord for Root {
    fn cmp(&self, other: &Root) -> Ordering {
        (self.len(), self.p).cmp(&(other.len(), other.p))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Root) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α_{{{}..{}}}", self.p, self.q)
    }
}

/// The positive root set of `A_{N-1}` for `sl(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    matrix_size: usize,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    /// Full positive root set for `sl(matrix_size)`.
    pub fn new(matrix_size: usize) -> Result<RootSystem, Error> {
        if matrix_size < 2 {
            return Err(Error::Domain(format!(
                "matrix size must be at least 2, got {matrix_size}"
            )));
        }
        let rank = matrix_size - 1;
        let mut positive_roots = Vec::with_capacity(matrix_size * rank / 2);
        for d in 0..rank {
            for p in 1..=rank - d {
                positive_roots.push(Root { p, q: p + d });
            }
        }
        Ok(RootSystem {
            matrix_size,
            positive_roots,
        })
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn rank(&self) -> usize {
        self.matrix_size - 1
    }

    /// All positive roots: simple first, then by length, lexicographic within.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots.iter().copied().filter(Root::is_simple)
    }
}

/// Harish-Chandra labels of a (rho-shifted) weight on the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    labels: Vec<i64>,
}

impl Signature {
    pub fn new(labels: Vec<i64>) -> Signature {
        Signature { labels }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Label at simple-root index `i` (1-based).
    pub fn label(&self, i: usize) -> i64 {
        self.labels[i - 1]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.labels.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn check_root_range(sig: &Signature, beta: Root) -> Result<(), Error> {
    if beta.p < 1 || beta.q > sig.rank() {
        return Err(Error::Domain(format!(
            "root interval [{}, {}] out of range for rank {}",
            beta.p,
            beta.q,
            sig.rank()
        )));
    }
    Ok(())
}

/// Harish-Chandra parameter `(Lambda+rho, beta^vee)`: the interval sum of labels.
pub fn hc_param(sig: &Signature, beta: Root) -> Result<i64, Error> {
    check_root_range(sig, beta)?;
    Ok(sig.labels[beta.p - 1..beta.q].iter().sum())
}

/// Cartan pairing `(beta, alpha_i^vee)` from the interval model:
/// `[i=p] + [i=q] - [i=p-1] - [i=q+1]`, giving 2 on `i = p = q`.
pub fn cartan_pairing(beta: Root, i: usize) -> Result<i64, Error> {
    if i < 1 {
        return Err(Error::Domain(format!("simple-root index {i} out of range")));
    }
    Ok(pairing_unchecked(beta, i))
}

pub(crate) fn pairing_unchecked(beta: Root, i: usize) -> i64 {
    let mut v = 0;
    if i == beta.p {
        v += 1;
    }
    if i == beta.q {
        v += 1;
    }
    if i + 1 == beta.p {
        v -= 1;
    }
    if i == beta.q + 1 {
        v -= 1;
    }
    v
}

/// Shifted Weyl reflection `w_beta`: subtracts `m_beta * beta` label-wise.
pub fn dot_reflect(sig: &Signature, beta: Root) -> Result<Signature, Error> {
    let m = hc_param(sig, beta)?;
    let labels = sig
        .labels
        .iter()
        .enumerate()
        .map(|(idx, &v)| v - m * pairing_unchecked(beta, idx + 1))
        .collect();
    Ok(Signature::new(labels))
}
