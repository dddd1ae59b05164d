//! Exact computation engine for signed standard Young tableaux and their
//! cyclic sieving phenomena.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`]: partitions, cells, contents, hook lengths.
//! * [`qalgebra`]: integer Laurent polynomials, q-analogues, cyclotomic
//!   polynomials and exact evaluation at roots of unity.
//! * [`tableaux`]: standard Young tableaux, descents, major index, promotion.
//! * [`signed`]: signed tableaux, the super major index and its generating
//!   function.
//! * [`strips`]: border strip tableaux and Murnaghan–Nakayama evaluations.
//! * [`sieve`]: cyclic actions, fixed-point counting and the sieving drivers.

pub mod arith;
pub mod error;
pub mod qalgebra;
pub mod shapes;
pub mod sieve;
pub mod signed;
pub mod strips;
pub mod tableaux;

pub use error::{Error, Result};
pub use qalgebra::{CyclotomicElement, IntPoly, LaurentPolynomial};
pub use shapes::{Cell, Partition};
pub use sieve::{CspReport, CspRow, CyclicAction, Evaluation, OrbitProfile};
pub use signed::{SignedTableau, SuperGF};
pub use strips::BorderStripTableau;
pub use tableaux::StandardTableau;
