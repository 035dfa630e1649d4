//! Multiplet generation for a maximal parabolic of `sl(N,R)`.
//!
//! A signature is carried in epsilon coordinates as an "arrangement": the
//! vector of partial sums of its labels with last entry 0, on which the Weyl
//! group acts by permutation and the shifted reflection by a transposition.
//! The members of a multiplet are the points of the orbit whose labels at
//! all Levi indices are strictly positive. The orbit is swept as the
//! lexicographic multiset permutations of the base arrangement and filtered
//! by that dominance condition.
//!
//! Derived per member: the conformal factor `c = -(n_k + sum n_i)/2`, the
//! Levi block labels, the coset length (inversion count of the arrangement),
//! and for `N = 2k` the Knapp-Stein partner, obtained by applying the
//! longest Weyl element and re-dominating, which in arrangement terms swaps
//! the two half-blocks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::rational::HalfInt;
use crate::rootsys::{pairing_unchecked, Root, RootSystem, Signature};
use crate::weyl::{next_permutation, ParabolicSpec};

/// Hard cap on orbit sweeps (10! arrangements).
pub const GENERATION_CAP: usize = 10;

pub type VertexId = usize;

/// One member of a multiplet with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletVertex {
    pub id: VertexId,
    pub signature: Signature,
    /// Conformal factor; flips sign under Knapp-Stein duality.
    pub c: HalfInt,
    /// Labels at the left Levi block indices `1..k-1`.
    pub m_left: Vec<i64>,
    /// Labels at the right Levi block indices `k+1..N-1`.
    pub m_right: Vec<i64>,
    /// Knapp-Stein partner; defined only for the self-dual parabolic `N = 2k`.
    pub ks_partner: Option<VertexId>,
    /// Inversion count of the defining coset representative.
    pub coset_length: usize,
}

/// How an intertwining operator attached to an arrow acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// Simple root: the operator is the `m`-th power of the root vector.
    SimplePowerDifferential,
    /// Non-simple root: differential operator from a general singular vector.
    GeneralDifferential,
    /// Degeneration of a Knapp-Stein integral operator.
    DegenerateKnappStein,
}

/// Embedding arrow `Lambda -> Lambda - m_beta beta` between two members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub source: VertexId,
    pub target: VertexId,
    pub root: Root,
    pub degree: i64,
    pub kind: OperatorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipletKind {
    /// All inducing labels strictly positive.
    Main,
    /// Some label vanished; two or more members survive.
    Reduced,
    /// Exactly one member.
    Singlet,
}

/// Relation of the two members of a Knapp-Stein pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    /// Related by shifted Weyl reflections inside the multiplet.
    WeylShift,
    /// Both members at `c = 0`: the intertwiner is a flip of the inducing pair.
    Flip,
    /// Member paired with itself.
    SelfDual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KsPair {
    pub a: VertexId,
    pub b: VertexId,
    pub relation: PairRelation,
}

/// Degeneration annotations for reduced doublets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneration {
    /// The doublet is still connected by a differential operator inherited
    /// from the main multiplet.
    InheritedDifferential {
        source: VertexId,
        target: VertexId,
        root: Root,
        degree: i64,
    },
    /// No shift connects the pair; the Knapp-Stein integral operator
    /// degenerates to a differential operator of half-integer exponent,
    /// a d'Alembertian power when the inducing blocks coincide.
    DegenerateKnappStein {
        minus: VertexId,
        plus: VertexId,
        exponent: HalfInt,
        dalembertian_power: Option<i64>,
    },
}

/// A full multiplet: members, arrows, Knapp-Stein pairs, annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplet {
    pub spec: ParabolicSpec,
    pub inducing_labels: Vec<i64>,
    pub kind: MultipletKind,
    pub vertices: Vec<MultipletVertex>,
    pub arrows: Vec<Arrow>,
    pub pairs: Vec<KsPair>,
    pub degenerations: Vec<Degeneration>,
}

impl Multiplet {
    pub fn vertex(&self, id: VertexId) -> &MultipletVertex {
        &self.vertices[id]
    }

    pub fn find_vertex(&self, sig: &Signature) -> Option<&MultipletVertex> {
        self.vertices.iter().find(|v| &v.signature == sig)
    }

    pub fn arrow_between(&self, a: VertexId, b: VertexId) -> Option<&Arrow> {
        self.arrows
            .iter()
            .find(|e| (e.source == a && e.target == b) || (e.source == b && e.target == a))
    }
}

impl fmt::Display for MultipletKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MultipletKind::Main => "main",
            MultipletKind::Reduced => "reduced",
            MultipletKind::Singlet => "singlet",
        })
    }
}

impl fmt::Display for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairRelation::WeylShift => "weyl-shift",
            PairRelation::Flip => "flip",
            PairRelation::SelfDual => "self-dual",
        })
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::SimplePowerDifferential => "simple-power-differential",
            OperatorKind::GeneralDifferential => "general-differential",
            OperatorKind::DegenerateKnappStein => "degenerate-KS-differential",
        })
    }
}

/// Partial sums of the labels, last entry 0: the epsilon-coordinate
/// arrangement of the weight with the normalization `lambda_N = 0`.
fn arrangement_from_labels(labels: &[i64]) -> Vec<i64> {
    let n = labels.len() + 1;
    let mut arr = vec![0i64; n];
    for i in (0..n - 1).rev() {
        arr[i] = labels[i] + arr[i + 1];
    }
    arr
}

fn signature_from_arrangement(arr: &[i64]) -> Signature {
    Signature::new(arr.windows(2).map(|w| w[0] - w[1]).collect())
}

/// Strictly decreasing inside both half-blocks; the gap at `k` is free.
fn is_m_dominant(arr: &[i64], k: usize) -> bool {
    arr.windows(2)
        .enumerate()
        .all(|(i, w)| i + 1 == k || w[0] > w[1])
}

/// Inversion count of the minimal coset representative mapping the
/// dominant arrangement to this one: ascending pairs, ties free.
fn ascent_pairs(arr: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..arr.len() {
        for j in i + 1..arr.len() {
            if arr[i] < arr[j] {
                count += 1;
            }
        }
    }
    count
}

fn conformal_from_arrangement(arr: &[i64], k: usize) -> HalfInt {
    // 2c = -((lambda_k - lambda_{k+1}) + (lambda_1 - lambda_N))
    HalfInt::from_twice(-((arr[k - 1] - arr[k]) + (arr[0] - arr[arr.len() - 1])))
}

/// Conformal factor `c = -(n_k + sum_i n_i)/2` of a signature.
pub fn conformal_factor(spec: &ParabolicSpec, sig: &Signature) -> HalfInt {
    assert_eq!(sig.rank(), spec.rank(), "signature rank mismatch");
    let total: i64 = sig.labels().iter().sum();
    HalfInt::from_twice(-(sig.label(spec.removed_index()) + total))
}

fn factorial_cap(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

/// Generates the multiplet of the signature with the given inducing labels.
///
/// Labels must be non-negative; zeros produce reduced multiplets. Members
/// are ordered by (coset length, lexicographic signature) and ids follow
/// that order.
pub fn generate_multiplet(spec: &ParabolicSpec, labels: &[i64]) -> Result<Multiplet, Error> {
    let n = spec.matrix_size();
    let k = spec.removed_index();
    if labels.len() != n - 1 {
        return Err(Error::Domain(format!(
            "expected {} labels for sl({n}), got {}",
            n - 1,
            labels.len()
        )));
    }
    if let Some(bad) = labels.iter().find(|&&v| v < 0) {
        return Err(Error::Domain(format!("negative inducing label {bad}")));
    }
    if n > GENERATION_CAP {
        return Err(Error::Capacity {
            what: "multiplet orbit sweep",
            cap: GENERATION_CAP,
            requested: n,
        });
    }

    // Sweep the orbit: all multiset permutations of the base arrangement,
    // keeping the m-dominant ones.
    let mut work = arrangement_from_labels(labels);
    work.sort_unstable();
    let mut dominant: Vec<Vec<i64>> = Vec::new();
    let mut swept = 0usize;
    loop {
        swept += 1;
        if is_m_dominant(&work, k) {
            dominant.push(work.clone());
        }
        if !next_permutation(&mut work) {
            break;
        }
    }
    debug_assert!(swept <= factorial_cap(n), "orbit exceeded N!");

    let mut seeds: Vec<(usize, Signature, Vec<i64>)> = dominant
        .into_iter()
        .map(|arr| {
            let sig = signature_from_arrangement(&arr);
            (ascent_pairs(&arr), sig, arr)
        })
        .collect();
    seeds.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let index_of: BTreeMap<Vec<i64>, VertexId> = seeds
        .iter()
        .enumerate()
        .map(|(id, (_, _, arr))| (arr.clone(), id))
        .collect();

    let self_dual = spec.is_self_dual();
    let mut vertices = Vec::with_capacity(seeds.len());
    for (id, (length, sig, arr)) in seeds.iter().enumerate() {
        let ks_partner = self_dual.then(|| {
            let mut swapped = arr[k..].to_vec();
            swapped.extend_from_slice(&arr[..k]);
            index_of[&swapped]
        });
        vertices.push(MultipletVertex {
            id,
            signature: sig.clone(),
            c: conformal_from_arrangement(arr, k),
            m_left: sig.labels()[..k - 1].to_vec(),
            m_right: sig.labels()[k..].to_vec(),
            ks_partner,
            coset_length: *length,
        });
    }

    // Arrows: every shifted reflection of positive degree landing back in
    // the member set. In arrangement terms the reflection along [p, q]
    // is the transposition of epsilon slots p and q+1.
    let roots = RootSystem::new(n)?;
    let mut arrows = Vec::new();
    for (id, (_, _, arr)) in seeds.iter().enumerate() {
        for &root in roots.positive_roots() {
            let degree = arr[root.p - 1] - arr[root.q];
            if degree <= 0 {
                continue;
            }
            let mut image = arr.clone();
            image.swap(root.p - 1, root.q);
            if let Some(&target) = index_of.get(&image) {
                let kind = if root.is_simple() {
                    OperatorKind::SimplePowerDifferential
                } else {
                    OperatorKind::GeneralDifferential
                };
                arrows.push(Arrow {
                    source: id,
                    target,
                    root,
                    degree,
                    kind,
                });
            }
        }
    }

    let mut pairs = Vec::new();
    for v in &vertices {
        if let Some(partner) = v.ks_partner {
            if v.id <= partner {
                let relation = if partner == v.id {
                    PairRelation::SelfDual
                } else if v.c.is_zero() {
                    PairRelation::Flip
                } else {
                    PairRelation::WeylShift
                };
                pairs.push(KsPair {
                    a: v.id,
                    b: partner,
                    relation,
                });
            }
        }
    }

    let kind = if labels.iter().all(|&v| v > 0) {
        MultipletKind::Main
    } else if vertices.len() == 1 {
        MultipletKind::Singlet
    } else {
        MultipletKind::Reduced
    };

    let mut multiplet = Multiplet {
        spec: *spec,
        inducing_labels: labels.to_vec(),
        kind,
        vertices,
        arrows,
        pairs,
        degenerations: Vec::new(),
    };
    if multiplet.kind == MultipletKind::Reduced && multiplet.vertices.len() == 2 {
        multiplet.degenerations = classify_degenerations(&multiplet)?;
    }
    Ok(multiplet)
}

/// Annotates a reduced doublet: either the pair is still connected by a
/// differential operator inherited from the main multiplet, or (zero label
/// at the removed index) the Knapp-Stein operator degenerates, with the
/// exponent `c^+` and a d'Alembertian power when the blocks coincide.
pub fn classify_degenerations(multiplet: &Multiplet) -> Result<Vec<Degeneration>, Error> {
    if multiplet.vertices.len() != 2 {
        return Err(Error::Domain(format!(
            "degeneration classification requires a doublet, got {} members",
            multiplet.vertices.len()
        )));
    }
    let (first, second) = (&multiplet.vertices[0], &multiplet.vertices[1]);
    let (lo, hi) = if (first.c, &first.signature) <= (second.c, &second.signature) {
        (first, second)
    } else {
        (second, first)
    };
    if let Some(arrow) = multiplet.arrow_between(lo.id, hi.id) {
        return Ok(vec![Degeneration::InheritedDifferential {
            source: arrow.source,
            target: arrow.target,
            root: arrow.root,
            degree: arrow.degree,
        }]);
    }
    let k = multiplet.spec.removed_index();
    if multiplet.inducing_labels[k - 1] == 0 {
        let exponent = hi.c;
        let dalembertian_power = if hi.m_left == hi.m_right {
            exponent.as_integer()
        } else {
            None
        };
        return Ok(vec![Degeneration::DegenerateKnappStein {
            minus: lo.id,
            plus: hi.id,
            exponent,
            dalembertian_power,
        }]);
    }
    Ok(Vec::new())
}

/// Transitive reduction of the arrow digraph: the minimal diagram view.
pub fn covering_arrows(multiplet: &Multiplet) -> Vec<Arrow> {
    let nv = multiplet.vertices.len();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); nv];
    for a in &multiplet.arrows {
        adjacency[a.source].push(a.target);
    }
    // Arrows strictly increase coset length, so id order is topological.
    let mut reach = vec![vec![false; nv]; nv];
    for v in (0..nv).rev() {
        for &u in &adjacency[v].clone() {
            reach[v][u] = true;
            let row = reach[u].clone();
            for (slot, r) in reach[v].iter_mut().zip(row) {
                *slot |= r;
            }
        }
    }
    multiplet
        .arrows
        .iter()
        .filter(|a| {
            !adjacency[a.source]
                .iter()
                .any(|&w| w != a.target && reach[w][a.target])
        })
        .copied()
        .collect()
}

/// Dimension of the finite-dimensional `sl(n)` representation with the given
/// strictly-positive labels, by the exact product formula over root
/// intervals: the product of interval sums over the product of interval
/// lengths.
pub fn m_rep_dimension(block_labels: &[i64]) -> Result<u64, Error> {
    if let Some(bad) = block_labels.iter().find(|&&v| v <= 0) {
        return Err(Error::Domain(format!(
            "block label {bad} is not strictly positive"
        )));
    }
    let r = block_labels.len();
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for i in 0..r {
        let mut sum = 0i64;
        for j in i..r {
            sum += block_labels[j];
            numerator *= sum as u128;
            denominator *= (j - i + 1) as u128;
        }
    }
    debug_assert!(numerator % denominator == 0);
    u64::try_from(numerator / denominator)
        .map_err(|_| Error::Domain("representation dimension overflows u64".into()))
}

/// Change of conformal factor along an arrow, from the pairing data alone:
/// `delta c = m/2 (c(beta, k) + sum_i c(beta, i))`.
pub fn conformal_step(spec: &ParabolicSpec, root: Root, degree: i64) -> HalfInt {
    let total: i64 = (1..=spec.rank())
        .map(|i| pairing_unchecked(root, i))
        .sum();
    HalfInt::from_twice(degree * (pairing_unchecked(root, spec.removed_index()) + total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::dot_reflect;

    fn spec(n: usize, k: usize) -> ParabolicSpec {
        ParabolicSpec::new(n, k).unwrap()
    }

    #[test]
    fn sl4_all_ones_members() {
        let m = generate_multiplet(&spec(4, 2), &[1, 1, 1]).unwrap();
        assert_eq!(m.kind, MultipletKind::Main);
        let want: Vec<Vec<i64>> = vec![
            vec![1, 1, 1],
            vec![2, -1, 2],
            vec![1, -2, 3],
            vec![3, -2, 1],
            vec![2, -3, 2],
            vec![1, -3, 1],
        ];
        let got: Vec<Vec<i64>> = m
            .vertices
            .iter()
            .map(|v| v.signature.labels().to_vec())
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            m.vertices.iter().map(|v| v.coset_length).collect::<Vec<_>>(),
            vec![0, 1, 2, 2, 3, 4]
        );
        let c: Vec<i64> = m.vertices.iter().map(|v| v.c.twice()).collect();
        assert_eq!(c, vec![-4, -2, 0, 0, 2, 4]);
    }

    #[test]
    fn sl4_all_ones_pairs_and_arrows() {
        let m = generate_multiplet(&spec(4, 2), &[1, 1, 1]).unwrap();
        let partners: Vec<Option<usize>> = m.vertices.iter().map(|v| v.ks_partner).collect();
        assert_eq!(
            partners,
            vec![Some(5), Some(4), Some(3), Some(2), Some(1), Some(0)]
        );
        let mut edges: Vec<(usize, usize, (usize, usize), i64)> = m
            .arrows
            .iter()
            .map(|a| (a.source, a.target, (a.root.p, a.root.q), a.degree))
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                (0, 1, (2, 2), 1),
                (1, 2, (1, 2), 1),
                (1, 3, (2, 3), 1),
                (2, 4, (2, 3), 1),
                (3, 4, (1, 2), 1),
                (4, 5, (1, 3), 1),
            ]
        );
        // every root interval crosses the removed index, no self-arrows
        for a in &m.arrows {
            assert!(a.root.contains(2));
            assert_ne!(a.source, a.target);
        }
    }

    #[test]
    fn sl4_generic_sextet_matches_shifted_table() {
        // symbolic check at several label triples
        for (m1, m2, m3) in [(1i64, 2, 3), (5, 1, 2), (3, 3, 3), (2, 7, 4)] {
            let m = generate_multiplet(&spec(4, 2), &[m1, m2, m3]).unwrap();
            assert_eq!(m.vertices.len(), 6);
            let expect = [
                vec![m1, m2, m3],
                vec![m1 + m2, -m2, m2 + m3],
                vec![m2, -m1 - m2, m1 + m2 + m3],
                vec![m1 + m2 + m3, -m2 - m3, m2],
                vec![m2 + m3, -m1 - m2 - m3, m1 + m2],
                vec![m3, -m1 - m2 - m3, m1],
            ];
            for sig in &expect {
                assert!(
                    m.find_vertex(&Signature::new(sig.clone())).is_some(),
                    "missing {sig:?} for ({m1},{m2},{m3})"
                );
            }
        }
    }

    #[test]
    fn sl6_all_ones_has_twenty_members() {
        let m = generate_multiplet(&spec(6, 3), &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(m.vertices.len(), 20);
        // chi_2 at all-ones
        assert!(m.find_vertex(&Signature::new(vec![1, 2, -1, 2, 1])).is_some());
        // partner involution with c negation
        for v in &m.vertices {
            let p = v.ks_partner.unwrap();
            assert_eq!(m.vertex(p).ks_partner, Some(v.id));
            assert_eq!(m.vertex(p).c, -v.c);
        }
    }

    #[test]
    fn reduced_doublets_of_sl4() {
        // zero at the first index: doublet joined by an inherited operator
        let m = generate_multiplet(&spec(4, 2), &[0, 2, 3]).unwrap();
        assert_eq!(m.kind, MultipletKind::Reduced);
        assert_eq!(m.vertices.len(), 2);
        assert_eq!(
            m.degenerations,
            vec![Degeneration::InheritedDifferential {
                source: 0,
                target: 1,
                root: Root::new(2, 3).unwrap(),
                degree: 3,
            }]
        );

        // zero at the removed index: degenerate Knapp-Stein operator
        let m = generate_multiplet(&spec(4, 2), &[1, 0, 3]).unwrap();
        assert_eq!(m.vertices.len(), 2);
        assert!(m.arrows.is_empty());
        assert_eq!(
            m.degenerations,
            vec![Degeneration::DegenerateKnappStein {
                minus: 0,
                plus: 1,
                exponent: HalfInt::from_twice(4),
                dalembertian_power: None,
            }]
        );

        // equal blocks: a d'Alembertian power
        for n in 1..=3i64 {
            let m = generate_multiplet(&spec(4, 2), &[n, 0, n]).unwrap();
            match m.degenerations.as_slice() {
                [Degeneration::DegenerateKnappStein {
                    exponent,
                    dalembertian_power,
                    ..
                }] => {
                    assert_eq!(*exponent, HalfInt::from_integer(n));
                    assert_eq!(*dalembertian_power, Some(n));
                }
                other => panic!("unexpected degenerations {other:?}"),
            }
        }
    }

    #[test]
    fn singlet_and_flip_cases_of_sl6() {
        let m = generate_multiplet(&spec(6, 3), &[0, 2, 0, 3, 0]).unwrap();
        assert_eq!(m.kind, MultipletKind::Singlet);
        assert_eq!(m.vertices.len(), 1);
        assert_eq!(m.pairs[0].relation, PairRelation::SelfDual);
        assert!(m.vertices[0].c.is_zero());

        // zeros at 1 and 5: both members at c = 0, flip pair
        let m = generate_multiplet(&spec(6, 3), &[0, 2, 3, 4, 0]).unwrap();
        assert_eq!(m.vertices.len(), 2);
        assert_eq!(m.pairs.len(), 1);
        assert_eq!(m.pairs[0].relation, PairRelation::Flip);
        assert!(m.vertices.iter().all(|v| v.c.is_zero()));

        // zeros at 1 and 3: doublet still joined by a single shift
        let m = generate_multiplet(&spec(6, 3), &[0, 2, 0, 4, 5]).unwrap();
        assert_eq!(m.vertices.len(), 2);
        assert_eq!(m.pairs[0].relation, PairRelation::WeylShift);
        assert_eq!(m.arrows.len(), 1);
        assert_eq!(m.arrows[0].root, Root::new(3, 5).unwrap());
        assert_eq!(m.arrows[0].degree, 5);
    }

    #[test]
    fn arrows_match_dot_reflection() {
        let m = generate_multiplet(&spec(6, 3), &[2, 1, 3, 1, 2]).unwrap();
        for a in &m.arrows {
            let src = &m.vertex(a.source).signature;
            let image = dot_reflect(src, a.root).unwrap();
            assert_eq!(&image, &m.vertex(a.target).signature);
            assert_eq!(
                crate::rootsys::hc_param(src, a.root).unwrap(),
                a.degree
            );
            // conformal step is non-negative and matches the closed form
            let step = m.vertex(a.target).c - m.vertex(a.source).c;
            assert_eq!(step, conformal_step(&m.spec, a.root, a.degree));
            assert!(step >= HalfInt::ZERO);
        }
    }

    #[test]
    fn covering_is_subset_preserving_reachability() {
        let m = generate_multiplet(&spec(6, 3), &[1, 1, 1, 1, 1]).unwrap();
        let cover = covering_arrows(&m);
        assert!(cover.len() <= m.arrows.len());
        // reachability closure must agree
        let reach = |arrows: &[Arrow]| {
            let nv = m.vertices.len();
            let mut r = vec![vec![false; nv]; nv];
            for _ in 0..nv {
                for a in arrows {
                    r[a.source][a.target] = true;
                    let row = r[a.target].clone();
                    for (slot, x) in r[a.source].iter_mut().zip(row) {
                        *slot |= x;
                    }
                }
            }
            r
        };
        assert_eq!(reach(&m.arrows), reach(&cover));
    }

    #[test]
    fn conformal_factor_examples() {
        let s = spec(4, 2);
        for (m1, m2, m3) in [(1i64, 1, 1), (2, 5, 3)] {
            let c = conformal_factor(&s, &Signature::new(vec![m1, m2, m3]));
            assert_eq!(c.twice(), -(m1 + 2 * m2 + m3));
        }
    }

    #[test]
    fn rep_dimension_examples() {
        assert_eq!(m_rep_dimension(&[5]).unwrap(), 5);
        assert_eq!(m_rep_dimension(&[1, 1]).unwrap(), 1);
        assert_eq!(m_rep_dimension(&[2, 1]).unwrap(), 3);
        assert_eq!(m_rep_dimension(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(m_rep_dimension(&[]).unwrap(), 1);
        assert!(m_rep_dimension(&[2, 0]).is_err());
    }

    #[test]
    fn degenerate_input_errors() {
        assert!(generate_multiplet(&spec(4, 2), &[1, 1]).is_err());
        assert!(generate_multiplet(&spec(4, 2), &[1, -1, 1]).is_err());
        assert!(matches!(
            generate_multiplet(&spec(11, 5), &[1; 10]),
            Err(Error::Capacity { .. })
        ));
        let m = generate_multiplet(&spec(4, 2), &[1, 1, 1]).unwrap();
        assert!(classify_degenerations(&m).is_err());
    }
}
