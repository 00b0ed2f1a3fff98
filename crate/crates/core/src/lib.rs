//! Cyclic codes over finite fields and the asymmetric quantum codes built from them.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure computation:
//!
//! * [`galois`]: arithmetic in GF(p^m) with a deterministic primitive modulus table.
//! * [`polyring`]: polynomials, cyclotomic cosets, minimal polynomials and the
//!   factorization of x^n - 1 inside a [`CodeSpace`](polyring::CodeSpace).
//! * [`cyclic`]: cyclic codes identified by their defining sets, with duals,
//!   intersections, sums, containment and the BCH / RS / Hamming constructors.
//! * [`weights`]: exhaustive minimum-weight searches (including set differences
//!   `C \ D` of nested codes), weight distributions and the MacWilliams transform.
//! * [`aqec`]: CSS asymmetric codes `[[n, k, dz/dx]]`, the two cyclic extension
//!   constructions, subsystem codes and dimension trading.
//!
//! Parallelism is injected through [`weights::Executor`]; the crate itself ships
//! only the serial executor.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod aqec;
pub mod cyclic;
pub mod descriptor;
mod error;
pub mod galois;
mod numtheory;
pub mod polyring;
mod text;
pub mod weights;

pub use error::{Error, Result};
pub use numtheory::{gcd, is_prime, multiplicative_order, prime_factors};
