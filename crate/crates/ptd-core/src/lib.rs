//! Torsion pairs in the cluster category of Dynkin type `D_n`, computed
//! through a combinatorial arc model on the `2n`-gon.
//!
//! The crate has three independent descriptions of the same objects and
//! cross-validates them against each other:
//!
//! * [`geometry`] and [`ptolemy`] model indecomposables as arcs of a `2n`-gon
//!   (pair orbits and coloured diameters), define when arcs cross, and
//!   recognize the arc collections closed under the Ptolemy forcing rules.
//!   Torsion pairs are exactly the fixed points of `nc ∘ nc`.
//! * [`cluster_cat`] works directly on Auslander-Reiten quiver coordinates
//!   with `τ` and `Σ` actions and decides torsion pairs from Hom-vanishing,
//!   without mentioning the polygon.
//! * [`series`] carries the exact generating-function pipeline whose
//!   coefficients count the same diagrams, and [`enumeration`] produces the
//!   counts by exhaustive or pruned search plus the central-region
//!   decomposition that proves the product formula.
//!
//! [`verify`] wires all of that into one report: every number is computed at
//! least twice by routes that share as little code as possible.

pub mod cluster_cat;
pub mod enumeration;
pub mod geometry;
pub mod ptolemy;
pub mod series;
pub mod verify;
