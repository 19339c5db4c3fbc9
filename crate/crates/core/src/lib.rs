//! Exact root-configuration classification for real monic cubics and quartics.
//!
//! Given rational coefficients, [`classify_cubic`] and [`classify_quartic`]
//! decide the real and complex root multiplicities together with the
//! left-to-right order of the real roots by multiplicity, using sign
//! conditions on polynomial invariants of the coefficients. All arithmetic
//! is exact.
//!
//! Two independent routes back the closed forms up: the [`sturm`] module
//! counts distinct real roots from Sturm chains, and the [`oracle`] module
//! recovers the full multiplicity structure by square-free decomposition and
//! real-root isolation.
//!
//! ```
//! use rootconf::{classify_quartic, QuarticCoeffs};
//!
//! // (x - 1)^2 (x - 2)(x - 3)
//! let report = classify_quartic(&QuarticCoeffs::from_ints(-7, 17, -17, 6));
//! assert_eq!(report.config.as_str(), "quartic/double_two_singles/double_below_both");
//! assert_eq!(report.double_root.unwrap().to_string(), "1");
//! ```

pub mod classify;
pub mod cli;
pub mod cubic;
pub mod error;
pub mod label;
pub mod oracle;
pub mod poly;
pub mod quartic;
pub mod rat;
pub mod sample;
pub mod sturm;
pub mod verify;

pub use classify::{classify_poly, Report};
pub use cubic::{classify_cubic, CubicCoeffs, CubicInvariants, CubicReport};
pub use error::{Error, Result};
pub use label::{
    ConfigLabel, CubicComplexConfig, CubicConfig, DoubleOrder, DoubleSinglesOrder,
    QuarticComplexConfig, QuarticConfig, TripleOrder,
};
pub use oracle::{oracle_classify, RootStructure};
pub use poly::Poly;
pub use quartic::{classify_quartic, QuarticCoeffs, QuarticInvariants, QuarticReport};
pub use rat::{parse_rat, Rat, Sign};
pub use sturm::SturmChain;
