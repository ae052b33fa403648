//! Quantum Schubert calculus at q = 1 for (co)minuscule homogeneous spaces,
//! plus the first non-(co)minuscule example.
//!
//! The crate builds the finite spectrum of the quantum cohomology ring
//! specialized at q = 1, evaluates every Schubert class as a function on it,
//! computes Gromov-Witten invariants by trace formulas against an exact
//! combinatorial oracle, certifies semisimplicity through the quantum Euler
//! class, and verifies the conjugation/duality identities, including the
//! E6 and E7 ledgers in exact integer arithmetic.

pub mod combin;
pub mod duality;
pub mod error;
pub mod exact;
pub mod label;
pub mod qalg;
pub mod rootsys;
pub mod scalar;
pub mod schubfun;
pub mod space;
pub mod spectrum;
pub mod vafa;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;
pub use space::HomSpace;

/// Default floating scalar.
pub type F = f64;
/// Extended-precision scalar (double-double, ~106-bit mantissa).
pub type F128 = twofloat::TwoFloat;
/// Default complex scalar.
pub type C64 = num_complex::Complex<f64>;
