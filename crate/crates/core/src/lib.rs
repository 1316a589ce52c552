//! Water-hammer transients and burst-leak detection in serial pipelines.
//!
//! The crate simulates pressure transients in a single reservoir-fed
//! pipeline with the Method of Characteristics, models burst leakage
//! (deterministic and probabilistic trigger laws over the hoop-stress
//! criterion), and runs an Extended Kalman Filter that estimates heads,
//! pipe-end flows, and per-node leak rates from two noisy boundary head
//! measurements.
//!
//! Numerical core is generic over the scalar type (`f32` or `f64`); the
//! command-line tool and the acceptance suite run in `f64`.

pub mod burst;
pub mod ekf;
pub mod error;
pub mod hydraulics;
pub mod io;
pub mod moc;
pub mod run;
pub mod scenario;
pub mod validate;

pub use error::{Error, Result};

/// Scalar type for the numerical core: `f32` or `f64`.
pub trait Scalar:
    nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
}

impl<T> Scalar for T where
    T: nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
}

/// Converts an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("literal not representable in scalar type")
}

pub type Network64 = hydraulics::PipelineNetwork<f64>;
pub type SolverState64 = hydraulics::SolverState<f64>;
pub type EkfState64 = ekf::EkfState<f64>;
pub type RunArtifacts64 = run::RunArtifacts<f64>;
