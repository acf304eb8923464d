//! Co-prime graphs of finite groups.
//!
//! The co-prime graph `Γ(G)` of a finite group has the group elements as
//! vertices, with `x ~ y` iff `gcd(o(x), o(y)) = 1`. This crate builds these
//! graphs (in full, or reduced to prime-support classes), recognizes the
//! forbidden-subgraph classes C4-free, claw-free, cograph, split and AT-free
//! with checkable certificates, evaluates the group-theoretic criteria for
//! those classes, and embeds arbitrary graphs as induced subgraphs of
//! `Γ(Z_k)`.

pub mod arith;
pub mod classify;
pub mod coprime;
pub mod detect;
pub mod embed;
pub mod graph;
pub mod group;

pub use arith::PrimeSet;
pub use coprime::{CoprimeGraph, GkGraph, PrimeSetGraph};
pub use graph::{PatternGraph, SimpleGraph};
pub use group::{ElementRef, GroupError, GroupHandle, OrderSpectrum};
