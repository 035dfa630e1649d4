//! Exact combinatorics of induced-representation multiplets for `sl(N,R)`
//! with a maximal parabolic subalgebra.
//!
//! Everything here is integer or rational arithmetic; there is no floating
//! point anywhere in this crate. The crate is `no_std` (with `alloc`) so the
//! algorithmic core stays free of IO concerns; the companion CLI crate
//! carries file formats and rendering.
//!
//! Module map:
//!
//! - [`rootsys`]: the A-series root system, signatures in Harish-Chandra
//!   coordinates, pairings and the shifted Weyl reflection.
//! - [`weyl`]: the Weyl group as permutations, parabolic data, multiplet
//!   sizes, restricted reflections.
//! - [`matrixreal`]: concrete traceless-matrix realization used as a
//!   structure-constant self-test.
//! - [`multiplet`]: orbit generation, conformal factors, Knapp-Stein
//!   pairing, embedding arrows, degeneration classification.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod matrixreal;
pub mod multiplet;
pub mod rational;
pub mod rootsys;
pub mod weyl;

pub use error::Error;
pub use matrixreal::{
    build_basis, check_sl2_triples, parabolic_dimensions, MatrixElement, ParabolicDecomposition,
    Sl2Report, SlBasis,
};
pub use multiplet::{
    classify_degenerations, conformal_factor, covering_arrows, generate_multiplet,
    m_rep_dimension, Arrow, Degeneration, KsPair, Multiplet, MultipletKind, MultipletVertex,
    OperatorKind, PairRelation, VertexId,
};
pub use rational::{HalfInt, Rational};
pub use rootsys::{cartan_pairing, dot_reflect, hc_param, Root, RootSystem, Signature};
pub use weyl::{
    longest_element, multiplet_size, parabolic_subgroup_order, restricted_reflection, weyl_group,
    ParabolicSpec, WeylElement,
};
