//! Largest monomial subideals (`mono`), smallest monomial over-ideals
//! (`Mono`), monomial ideal combinatorics and graded Betti tables over `QQ`
//! and prime fields.
//!
//! The building blocks, bottom up:
//!
//! * [`field`], [`monomial`], [`order`], [`ring`], [`poly`], [`parse`]:
//!   exact coefficients, exponent vectors, term orders, sparse polynomials
//!   and the ideal file reader.
//! * [`groebner`]: reduced Gröbner bases, elimination, saturation,
//!   intersections and colon ideals.
//! * [`monomial_ideal`]: purely combinatorial operations on monomial ideals.
//! * [`mono`]: three independent ways to compute `mono(I)`, plus `Mono(I)`
//!   and a scan over characteristics.
//! * [`betti`]: graded Betti tables of `R/I` through Koszul homology.
//! * [`selftest`]: seeded randomized property suites.

pub mod betti;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod mono;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod selftest;

pub use betti::{graded_betti, BettiTable};
pub use error::{Error, Result};
pub use field::{Coeff, FieldSpec};
pub use groebner::{GroebnerBasis, Ideal};
pub use mono::{Method, MonoResult};
pub use monomial::Monomial;
pub use monomial_ideal::{MonomialIdeal, SocleMatrix};
pub use order::TermOrder;
pub use poly::{Polynomial, Term};
pub use ring::{Ring, RingContext};
