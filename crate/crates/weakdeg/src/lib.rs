//! Weak degeneracy of graphs, made executable.
//!
//! The central notion is a *removal certificate*: an ordered sequence of
//! `Delete`/`DelSave` operations together with initial vertex weights, which
//! witnesses that a graph is weakly `f`-degenerate. Everything else in the
//! crate either produces certificates (exact search, the planar recursion,
//! removal-scheme conversion), consumes them (DP-coloring synthesis, the
//! on-line painting game), or checks them (the replay verifier).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `weakdeg-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod catalog;
pub mod dp;

pub mod flow;
pub mod gen;
pub mod graph;
pub mod mad;
pub mod paint;
pub mod planar;



pub mod structure;
pub mod weak;

pub use graph::{Graph, GraphError, VertexSet};

