//! Property tests for the exact combinatorics layer.
//!
//! The multiplet generator sweeps lexicographic multiset permutations; the
//! oracle here enumerates m-dominant orbit points by an independent route
//! (splitting the tail-sum multiset across the two Levi blocks) and the two
//! must agree exactly.

use std::collections::{BTreeMap, BTreeSet};

use multiplex_core::{
    cartan_pairing, dot_reflect, generate_multiplet, hc_param, m_rep_dimension, multiplet_size,
    weyl_group, HalfInt, ParabolicSpec, Root, RootSystem, Signature,
};
use proptest::prelude::*;

/// Independent enumeration of the m-dominant orbit points.
///
/// Values of the tail-sum multiset are distributed over the two blocks; a
/// block may hold each value at most once, so a value of multiplicity two is
/// forced into both blocks and any higher multiplicity kills the orbit.
fn oracle_signatures(n: usize, k: usize, labels: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut lam = vec![0i64; n];
    for i in (0..n - 1).rev() {
        lam[i] = lam[i + 1] + labels[i];
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &v in &lam {
        *counts.entry(v).or_default() += 1;
    }
    let mut out = BTreeSet::new();
    if counts.values().any(|&c| c > 2) {
        return out;
    }
    let distinct: Vec<(i64, usize)> = counts.into_iter().rev().collect();

    fn recurse(
        distinct: &[(i64, usize)],
        idx: usize,
        b1: &mut Vec<i64>,
        b2: &mut Vec<i64>,
        k: usize,
        n: usize,
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if idx == distinct.len() {
            if b1.len() == k && b2.len() == n - k {
                let arr: Vec<i64> = b1.iter().chain(b2.iter()).copied().collect();
                out.insert(arr.windows(2).map(|w| w[0] - w[1]).collect());
            }
            return;
        }
        let (value, mult) = distinct[idx];
        if mult == 2 {
            b1.push(value);
            b2.push(value);
            recurse(distinct, idx + 1, b1, b2, k, n, out);
            b1.pop();
            b2.pop();
        } else {
            b1.push(value);
            recurse(distinct, idx + 1, b1, b2, k, n, out);
            b1.pop();
            b2.push(value);
            recurse(distinct, idx + 1, b1, b2, k, n, out);
            b2.pop();
        }
    }

    recurse(&distinct, 0, &mut Vec::new(), &mut Vec::new(), k, n, &mut out);
    out
}

fn arb_root(rank: usize) -> impl Strategy<Value = Root> {
    (1..=rank).prop_flat_map(move |p| (Just(p), p..=rank).prop_map(|(p, q)| Root::new(p, q).unwrap()))
}

proptest! {
    #[test]
    fn dot_reflect_involution(labels in prop::collection::vec(-8i64..=8, 3..=7)) {
        let rank = labels.len();
        let sig = Signature::new(labels);
        for p in 1..=rank {
            for q in p..=rank {
                let beta = Root::new(p, q).unwrap();
                let back = dot_reflect(&dot_reflect(&sig, beta).unwrap(), beta).unwrap();
                prop_assert_eq!(&back, &sig);
            }
        }
    }

    #[test]
    fn hc_param_negates_under_reflection(
        labels in prop::collection::vec(-8i64..=8, 5),
        beta in arb_root(5),
    ) {
        let sig = Signature::new(labels);
        let reflected = dot_reflect(&sig, beta).unwrap();
        prop_assert_eq!(
            hc_param(&reflected, beta).unwrap(),
            -hc_param(&sig, beta).unwrap()
        );
    }

    #[test]
    fn hc_param_is_interval_additive(
        labels in prop::collection::vec(-8i64..=8, 6),
        beta in arb_root(6),
    ) {
        let sig = Signature::new(labels);
        let total: i64 = (beta.p..=beta.q)
            .map(|i| hc_param(&sig, Root::simple(i)).unwrap())
            .sum();
        prop_assert_eq!(hc_param(&sig, beta).unwrap(), total);
    }

    #[test]
    fn generator_agrees_with_block_split_oracle(
        nk in prop::sample::select(vec![(4usize, 2usize), (5, 2), (6, 3), (6, 2)]),
        seed_labels in prop::collection::vec(0i64..=4, 7),
    ) {
        let (n, k) = nk;
        let labels = &seed_labels[..n - 1];
        let spec = ParabolicSpec::new(n, k).unwrap();
        let multiplet = generate_multiplet(&spec, labels).unwrap();
        let got: BTreeSet<Vec<i64>> = multiplet
            .vertices
            .iter()
            .map(|v| v.signature.labels().to_vec())
            .collect();
        prop_assert_eq!(got.len(), multiplet.vertices.len()); // signatures pairwise distinct
        prop_assert_eq!(got, oracle_signatures(n, k, labels));
    }

    #[test]
    fn main_multiplet_count_and_duality(
        nk in prop::sample::select(vec![(4usize, 2usize), (6, 3), (8, 4)]),
        seed_labels in prop::collection::vec(1i64..=20, 7),
    ) {
        let (n, k) = nk;
        let labels = &seed_labels[..n - 1];
        let spec = ParabolicSpec::new(n, k).unwrap();
        let m = generate_multiplet(&spec, labels).unwrap();
        prop_assert_eq!(m.vertices.len() as u64, multiplet_size(&spec));

        for v in &m.vertices {
            let p = v.ks_partner.unwrap();
            let partner = m.vertex(p);
            prop_assert_eq!(partner.ks_partner, Some(v.id));
            prop_assert_eq!(partner.c, -v.c);
            if p == v.id {
                prop_assert!(v.c.is_zero());
            }
            // block swap of inducing data across the pair
            prop_assert_eq!(&partner.m_left, &v.m_right);
            prop_assert_eq!(&partner.m_right, &v.m_left);
            prop_assert_eq!(
                m_rep_dimension(&v.m_left).unwrap(),
                m_rep_dimension(&partner.m_right).unwrap()
            );
        }

        for a in &m.arrows {
            prop_assert!(a.root.contains(k));
            prop_assert_ne!(a.source, a.target);
            // image of an arrow under duality is the reversed arrow
            let ps = m.vertex(a.source).ks_partner.unwrap();
            let pt = m.vertex(a.target).ks_partner.unwrap();
            prop_assert!(m
                .arrows
                .iter()
                .any(|b| b.source == pt && b.target == ps && b.degree == a.degree));
            // conformal factor never decreases along an arrow
            prop_assert!(m.vertex(a.target).c >= m.vertex(a.source).c);
        }
    }

    #[test]
    fn weyl_dimension_closed_forms(p in 1i64..=30, q in 1i64..=30) {
        prop_assert_eq!(m_rep_dimension(&[p]).unwrap(), p as u64);
        prop_assert_eq!(
            m_rep_dimension(&[p, q]).unwrap() as i64,
            p * q * (p + q) / 2
        );
    }
}

#[test]
fn root_counts_up_to_rank_eleven() {
    for n in 2..=12usize {
        let rs = RootSystem::new(n).unwrap();
        assert_eq!(rs.positive_roots().len(), n * (n - 1) / 2);
        assert_eq!(rs.simple_roots().count(), n - 1);
    }
}

#[test]
fn cartan_pairing_range() {
    for n in 2..=9usize {
        let rs = RootSystem::new(n).unwrap();
        for &beta in rs.positive_roots() {
            for i in 1..n {
                let v = cartan_pairing(beta, i).unwrap();
                assert!((-1..=2).contains(&v));
            }
        }
    }
}

/// Exhaustive coset check: under the parabolic subgroup acting inside the
/// two position blocks, every coset of the full Weyl group carries exactly
/// one m-dominant arrangement.
#[test]
fn each_coset_carries_one_dominant_point() {
    for (n, k) in [(4usize, 2usize), (5, 2), (6, 3), (7, 3), (8, 4)] {
        // generic strictly decreasing weight
        let lam: Vec<i64> = (0..n).map(|i| ((n - i) * (i + 3)) as i64 + (n - i) as i64 * 7).collect();
        let mut sorted = lam.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        assert!(sorted.windows(2).all(|w| w[0] > w[1]), "weight not generic");

        let mut dominant_per_coset: BTreeMap<(Vec<i64>, Vec<i64>), usize> = BTreeMap::new();
        for w in weyl_group(n).unwrap() {
            let arr = w.apply(&sorted);
            let mut left = arr[..k].to_vec();
            let mut right = arr[k..].to_vec();
            let dominant = left.windows(2).all(|w| w[0] > w[1])
                && right.windows(2).all(|w| w[0] > w[1]);
            left.sort_unstable();
            right.sort_unstable();
            *dominant_per_coset.entry((left, right)).or_default() += usize::from(dominant);
        }
        let spec = ParabolicSpec::new(n, k).unwrap();
        assert_eq!(dominant_per_coset.len() as u64, multiplet_size(&spec));
        assert!(dominant_per_coset.values().all(|&c| c == 1));
    }
}

#[test]
fn half_integers_order_like_rationals() {
    let values: Vec<HalfInt> = (-6..=6).map(HalfInt::from_twice).collect();
    for a in &values {
        for b in &values {
            assert_eq!(a.cmp(b), a.as_rational().cmp(&b.as_rational()));
        }
    }
}
