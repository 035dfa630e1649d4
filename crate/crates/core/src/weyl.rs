//! Weyl group of `sl(N)` as permutations, parabolic subgroup data, and
//! restricted Weyl reflections.
//!
//! For the split form the restricted root system coincides with the full
//! one, so the restricted Weyl group is all of `S_N`. Elements act on
//! weights through the epsilon-coordinate permutation model; lengths are
//! inversion counts.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::rational::Rational;

/// Hard cap on full group enumeration (10! elements).
pub const WEYL_ENUMERATION_CAP: usize = 10;

/// A permutation of `{1..N}` in one-line notation (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement {
            perm: (0..n).collect(),
        }
    }

    /// Builds from 0-based one-line notation, checking bijectivity.
    pub fn from_one_line(perm: Vec<usize>) -> Result<WeylElement, Error> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::Domain(format!(
                    "not a permutation of 0..{n}: {perm:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(WeylElement { perm })
    }

    pub fn one_line(&self) -> &[usize] {
        &self.perm
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// Coxeter length: the inversion count of the one-line word.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Action on an epsilon-coordinate vector: entry `i` moves to `perm[i]`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.perm.len());
        let mut out = vec![0; v.len()];
        for (i, &w) in self.perm.iter().enumerate() {
            out[w] = v[i];
        }
        out
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.perm.len(), other.perm.len());
        WeylElement {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (i, &w) in self.perm.iter().enumerate() {
            perm[w] = i;
        }
        WeylElement { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &w)| i == w)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.perm.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", w + 1)?;
        }
        write!(f, "]")
    }
}

/// Advances `a` to its next lexicographic permutation; false at the last one.
/// Handles repeated entries (multiset permutations).
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All `N!` Weyl elements in lexicographic one-line order.
pub fn weyl_group(matrix_size: usize) -> Result<Vec<WeylElement>, Error> {
    if matrix_size > WEYL_ENUMERATION_CAP {
        return Err(Error::Capacity {
            what: "full Weyl group enumeration",
            cap: WEYL_ENUMERATION_CAP,
            requested: matrix_size,
        });
    }
    let mut word: Vec<usize> = (0..matrix_size).collect();
    let mut out = Vec::new();
    loop {
        out.push(WeylElement { perm: word.clone() });
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

/// The order-reversing permutation `i -> N+1-i`.
pub fn longest_element(matrix_size: usize) -> WeylElement {
    WeylElement {
        perm: (0..matrix_size).rev().collect(),
    }
}

/// Maximal parabolic data: `sl(N)` with the simple root `alpha_k` removed.
///
/// The Levi blocks carry the simple-root indices `1..k-1` and `k+1..N-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParabolicSpec {
    matrix_size: usize,
    removed_index: usize,
}

impl ParabolicSpec {
    pub fn new(matrix_size: usize, removed_index: usize) -> Result<ParabolicSpec, Error> {
        if matrix_size < 2 {
            return Err(Error::Domain(format!(
                "matrix size must be at least 2, got {matrix_size}"
            )));
        }
        if removed_index < 1 || removed_index > matrix_size - 1 {
            return Err(Error::Domain(format!(
                "removed index {removed_index} out of range 1..={}",
                matrix_size - 1
            )));
        }
        Ok(ParabolicSpec {
            matrix_size,
            removed_index,
        })
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn removed_index(&self) -> usize {
        self.removed_index
    }

    pub fn rank(&self) -> usize {
        self.matrix_size - 1
    }

    /// Simple-root indices of the left Levi block (`1..k-1`).
    pub fn left_block(&self) -> impl Iterator<Item = usize> {
        1..self.removed_index
    }

    /// Simple-root indices of the right Levi block (`k+1..N-1`).
    pub fn right_block(&self) -> impl Iterator<Item = usize> {
        self.removed_index + 1..self.matrix_size
    }

    /// Whether the parabolic is its own opposite up to conjugation (`N = 2k`),
    /// the case where Knapp-Stein pairing closes inside one multiplet.
    pub fn is_self_dual(&self) -> bool {
        self.matrix_size == 2 * self.removed_index
    }
}

fn factorial(n: usize) -> u64 {
    (2..=n as u64).product()
}

/// `|W(m, h_m)| = k! (N-k)!`.
pub fn parabolic_subgroup_order(spec: &ParabolicSpec) -> u64 {
    factorial(spec.removed_index) * factorial(spec.matrix_size - spec.removed_index)
}

/// Number of members of a generic multiplet: `N! / (k! (N-k)!)`.
pub fn multiplet_size(spec: &ParabolicSpec) -> u64 {
    let (n, k) = (spec.matrix_size as u64, spec.removed_index as u64);
    let mut out = 1u64;
    for i in 1..=k.min(n - k) {
        out = out * (n - k.min(n - k) + i) / i;
    }
    out
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter()
        .zip(v)
        .fold(Rational::ZERO, |acc, (&a, &b)| acc + a * b)
}

/// Restricted Weyl reflection `s_lambda(mu) = mu - 2 (lambda,mu)/(lambda,lambda) lambda`.
pub fn restricted_reflection(mu: &[Rational], lambda: &[Rational]) -> Result<Vec<Rational>, Error> {
    if mu.len() != lambda.len() {
        return Err(Error::Domain(format!(
            "vector lengths differ: {} vs {}",
            mu.len(),
            lambda.len()
        )));
    }
    let norm = dot(lambda, lambda);
    if norm.is_zero() {
        return Err(Error::Domain("reflection through the zero vector".into()));
    }
    let coeff = Rational::from(2) * dot(lambda, mu) / norm;
    Ok(mu
        .iter()
        .zip(lambda)
        .map(|(&m, &l)| m - coeff * l)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(weyl_group(2).unwrap().len(), 2);
        assert_eq!(weyl_group(4).unwrap().len(), 24);
        assert_eq!(weyl_group(6).unwrap().len(), 720);
        match weyl_group(11) {
            Err(Error::Capacity { cap, requested, .. }) => {
                assert_eq!((cap, requested), (10, 11));
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn group_is_lexicographic_and_distinct() {
        let g = weyl_group(4).unwrap();
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g[0].is_identity());
        assert_eq!(g.last().unwrap(), &longest_element(4));
    }

    #[test]
    fn longest_element_properties() {
        let w0 = longest_element(4);
        assert_eq!(w0.one_line(), &[3, 2, 1, 0]);
        assert_eq!(w0.length(), 6);
        assert!(w0.compose(&w0).is_identity());
        assert_eq!(longest_element(2).one_line(), &[1, 0]);
    }

    #[test]
    fn parabolic_orders_and_sizes() {
        let cases = [(4, 2, 4, 6), (6, 3, 36, 20), (8, 4, 576, 70)];
        for (n, k, order, size) in cases {
            let spec = ParabolicSpec::new(n, k).unwrap();
            assert_eq!(parabolic_subgroup_order(&spec), order);
            assert_eq!(multiplet_size(&spec), size);
        }
    }

    #[test]
    fn order_times_size_is_group_order() {
        for n in 2..=10usize {
            for k in 1..n {
                let spec = ParabolicSpec::new(n, k).unwrap();
                assert_eq!(
                    multiplet_size(&spec) * parabolic_subgroup_order(&spec),
                    factorial(n)
                );
            }
        }
    }

    #[test]
    fn apply_convention_round_trips() {
        let w = WeylElement::from_one_line(vec![2, 0, 1]).unwrap();
        let v = vec![10, 20, 30];
        // entry i moves to position perm[i]
        assert_eq!(w.apply(&v), vec![20, 30, 10]);
        assert_eq!(w.inverse().apply(&w.apply(&v)), v);
    }

    #[test]
    fn restricted_reflection_identities() {
        let lam: Vec<Rational> = [1, -2, 3].map(Rational::from).to_vec();
        let neg: Vec<Rational> = [-1, 2, -3].map(Rational::from).to_vec();
        assert_eq!(restricted_reflection(&lam, &lam).unwrap(), neg);

        let mu: Vec<Rational> = [Rational::new(1, 2), Rational::new(2, 3), Rational::new(-1, 5)]
            .to_vec();
        let once = restricted_reflection(&mu, &lam).unwrap();
        let twice = restricted_reflection(&once, &lam).unwrap();
        assert_eq!(twice, mu);

        // mu orthogonal to lambda stays fixed
        let orth: Vec<Rational> = [2, 1, 0].map(Rational::from).to_vec();
        assert_eq!(restricted_reflection(&orth, &lam).unwrap(), orth);

        let zero = [Rational::ZERO; 3];
        assert!(restricted_reflection(&mu, &zero).is_err());
    }
}
