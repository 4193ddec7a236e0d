//! Linear recurring sequences over finite fields.
//!
//! * [`gf`]: GF(p^m) arithmetic.
//! * [`poly`]: polynomials over GF(q), factorization and the order θ(g).
//! * [`lfsr`]: the recurrence `a_n = Σ c_i a_{n−i}`, its state transitions
//!   and the cycle decomposition of GF(q)^r.
//! * [`biperiod`]: period sets, and existence, construction and enumeration
//!   of characteristic polynomials with exactly two periods.
//! * [`catalog`]: reproducible JSON-lines catalogs of existence reports.
//!
//! ```
//! use lrs_core::{biperiod, gf::FieldSpec, poly::Poly};
//!
//! let gf2 = FieldSpec::prime(2).unwrap();
//! let f = Poly::parse(&gf2, "1,0,1,1,1").unwrap(); // 1 + x^2 + x^3 + x^4
//! assert_eq!(biperiod::period_set(&f).unwrap().period_set, [1, 7]);
//! assert_eq!(biperiod::construct_biperiodic(&gf2, 4, 7).unwrap(), f);
//! ```

pub mod biperiod;
pub mod catalog;
pub mod error;
pub mod gf;
pub mod lfsr;
pub mod numtheory;
pub mod poly;

pub use error::{Error, Result};
