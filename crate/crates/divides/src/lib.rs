//! Divides with cusps and divides with gleams for symmetric links.
//!
//! A divide is the image of a generic proper immersion of a compact
//! 1-manifold in the 2-disk; it presents a link in S³ invariant under an
//! involution. This crate implements the combinatorics connecting the three
//! presentations of such links:
//!
//! * transvergent diagrams (reflection-symmetric link diagrams, encoded by
//!   their quotient),
//! * divides with cusps, and
//! * divides with gleams (half-integer region weights).
//!
//! plus a Kauffman-bracket oracle on explicit PD codes used to verify every
//! conversion at desk scale, and a freely-2-periodic criterion for divides
//! with gleams on the 2-sphere.

pub mod cuspify;
pub mod divide;
pub mod pd;
pub mod transvergent;
pub mod fixtures;
pub mod geom;
pub mod halfint;
pub mod pipeline;
pub mod planemap;

pub use halfint::Half;
pub use planemap::{Dart, DualGraph, EdgeId, FaceId, PlaneMap, Surface, VertexId};
