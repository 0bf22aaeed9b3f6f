//! Exact computation of the finite data that classify Hopf algebra quotients of
//! the quantized coordinate algebra `O_ε(G)` at an odd root of unity `ε`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO. It is organised
//! bottom-up:
//!
//! * [`qarith`]: exact arithmetic in the cyclotomic field `ℚ(ε)` and q-numbers.
//! * [`rootsys`]: Cartan data, positive roots, supports and convex orderings.
//! * [`abelian`]: finite abelian groups, subgroups, homomorphisms and the
//!   pairing on `(ℤ/ℓ)^s`.
//! * [`datum`]: subgroup data `(I₊, I₋, N, Γ, σ, δ)`, their validation and
//!   dimension formulas.
//! * [`order`]: the partial order and equivalence of subgroup data, Hasse diagrams.
//! * [`enumerate`]: census of all finite subgroup data inside configured caps.
//! * [`uqsl2`]: the small quantum group `u_ε(sl₂)` as an exact Hopf algebra,
//!   used as an oracle for the rank-one statements.
#![no_std]

extern crate alloc;

pub mod abelian;
pub mod datum;
pub mod enumerate;
mod error;
mod lattice;
pub mod order;
pub mod qarith;
pub mod rootsys;
pub mod uqsl2;

pub use error::{Axis, Error, Result};
