//! Discrete differential forms and chains on finite lattice boxes, over a
//! runtime-selectable commutative ring, with a constructive solver that
//! recovers potentials for simultaneous difference equations.
//!
//! The pieces fit together like the smooth theory, with forward differences
//! in place of derivatives:
//!
//! - [`forms`]: grids of ring elements, degree-q forms, the exterior
//!   derivative built from `(∂_i f)(a) = f(a + e_i) - f(a)`, and the wedge
//!   product. `D∘D = 0`.
//! - [`chains`]: formal sums of lattice cells, the boundary map (`∂∘∂ = 0`),
//!   the evaluation pairing between forms and chains, and the summation
//!   identity `B(Dω, c) = B(ω, D'c)` tying the two complexes together.
//! - [`poincare`]: every closed form of positive degree has a potential,
//!   produced explicitly by antidifferencing one axis at a time; for
//!   degree 1 an independent path-sum construction is provided as a
//!   cross-check.
//! - [`vec3`]: gradient/curl/divergence dress-up of degrees 0..3 in three
//!   dimensions, with scalar and vector potential recovery.
//! - [`oracle`]: the same operators materialized as exact rational matrices
//!   on small boxes, with kernel/image computations certifying the claims
//!   above by brute force.
//! - [`json`]: canonical string-based JSON for every object.
//!
//! All values are immutable and all operations are pure functions; every
//! public type is safe to share across threads.

pub mod chains;
pub mod error;
pub mod forms;
pub mod json;
pub mod lattice;
pub mod oracle;
pub mod poincare;
pub mod ring;
pub mod vec3;

pub use chains::{boundary, pair, stokes_verify, Cell, Chain, StokesReport};
pub use error::{CoreError, Result};
pub use forms::{exterior_derivative, partial, sign_s, wedge, GridForm, ScalarGrid};
pub use lattice::{LatticeBox, LatticePoint, MultiIndex};
pub use poincare::{
    check_closed, h0_kernel_check, homotopy_k, pathsum_scalar_potential, pullback_cylinder,
    restrict_base, solve_potential, PotentialResult,
};
pub use ring::{Ring, RingElement, RingSpec};
pub use vec3::{curl, div, grad, scalar_potential3, vector_potential3, VectorField3};

#[cfg(test)]
mod tests {
    #[test]
    fn public_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::Ring>();
        assert_send_sync::<crate::RingElement>();
        assert_send_sync::<crate::GridForm>();
        assert_send_sync::<crate::Chain>();
        assert_send_sync::<crate::VectorField3>();
        assert_send_sync::<crate::PotentialResult>();
    }
}
