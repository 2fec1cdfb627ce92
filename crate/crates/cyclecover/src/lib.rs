//! Exact cycle and covering invariants for simplicial complexes and linear
//! matroids: boundary matrices over GF(p) or the rationals, the induced
//! matroid on top-dimension faces, maximum simple cycles, covering numbers,
//! circuit-contraction decomposition trees, and machine-checked verdicts for
//! the inequalities tying those quantities together.
//!
//! Everything is exact: no floats anywhere, square-root bounds are decided by
//! squaring rationals, and power bounds by big-integer arithmetic.
//!
//! # Start with the examples
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! - `field_arithmetic` — exact scalars over GF(p) and the rationals.
//! - `boundary_operator` — complexes, f-vectors, boundary matrices, dd = 0.
//! - `matroid_basics` — rank, circuits with certificates, minors, components.
//! - `max_cycle` — branch-and-bound search for the largest simple cycle.
//! - `covering_number` — minimum covers by acyclic sets, density, s-profile.
//! - `decomposition_tree` — contracting maximum circuits down to loops.
//! - `generators` — the seeded instance families.
//! - `verify_bounds` — every inequality verdict on one instance.
//!
//! Run one with `cargo run --example <name>`.
//!
//! The same machinery is scriptable through the `cyclecover` binary
//! (subcommands `generate`, `analyze`, `max-cycle`, `gamma`, `decompose`,
//! `verify`, `oracle`); see [`cli`].

pub mod arith;
pub mod cli;
pub mod complex;
pub mod decomp;
pub mod extremal;
pub mod gen;
pub mod matroid;
pub mod verify;
