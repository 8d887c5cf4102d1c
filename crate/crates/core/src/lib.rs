//! Exact-arithmetic toolkit for r-determinantal facet ideals.
//!
//! Given a pure simplicial complex Δ on `[m]` and a generic `n x m` matrix
//! of indeterminates, the r-determinantal facet ideal is generated by the
//! `r x r` minors `[a|b]` whose column set `b` is a facet of Δ. This crate
//! builds those ideals exactly (rationals or a prime field — no floating
//! point), decides the combinatorial conditions that control their Groebner
//! behaviour (lcm-closedness, unit-interval shape, closedness), verifies
//! Groebner claims directly with a Buchberger engine, computes multigraded
//! Betti numbers of monomial ideals through lcm-lattice homology, builds
//! the sparse Eagon-Northcott complex of a clique decomposition with its
//! strand homology, and renders Cohen-Macaulayness verdicts.
//!
//! Modules mirror the mathematical layers:
//!
//! * [`algebra`] — fields, monomials, term orders, polynomials, minors;
//! * [`simplicial`] — pure complexes, clique decompositions, i-nonfaces;
//! * [`dfi`] — determinantal facet ideals and their conditions;
//! * [`groebner`] — Buchberger engine, ideal intersection, pairwise tests;
//! * [`poset`] — finite posets, order complexes, exact homology, Kuenneth;
//! * [`lcmlattice`] — lcm lattices, Betti tables, staircase monomials;
//! * [`encomplex`] — sparse Eagon-Northcott complexes and strand homology;
//! * [`cm`] — heights, projective dimensions, Cohen-Macaulay checks;
//! * [`cli`] — the JSON front end used by the `dfilab` binary.

pub mod algebra;
pub mod caps;
pub mod cli;
pub mod cm;
pub mod dfi;
pub mod encomplex;
pub mod error;
pub mod groebner;
pub mod lcmlattice;
pub mod linalg;
pub mod poset;
pub mod simplicial;

pub use caps::Caps;
pub use error::{Error, Result};
