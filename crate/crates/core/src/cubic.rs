//! Closed-form classification of monic cubics `x^3 + p x^2 + q x + r`.
//!
//! Dispatch uses four polynomial quantities in the coefficients:
//!
//! * `D = -4q^3 + p^2 q^2 + 18pqr - 4p^3 r - 27r^2`, the discriminant;
//! * `P = p^2 - 3q`, a quarter of the discriminant of the derivative;
//! * `E = 27r - 9pq + 2p^3`;
//! * `T = p^3 - 27r`.
//!
//! When `D = 0` and `P != 0` the double root is `(9r - pq) / 2P`, and expanding
//! `(x - d)^2 (x - e)` gives `E = 2(d - e)^3` and `P = (d - e)^2`, so
//! `E / 2P = d - e`. A negative `E / 2P` therefore puts the single root above
//! the double root.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::label::{CubicComplexConfig, CubicConfig, DoubleOrder};
use crate::poly::Poly;
use crate::rat::{int, Rat, Sign};
use crate::sturm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicCoeffs {
    pub p: Rat,
    pub q: Rat,
    pub r: Rat,
}

impl CubicCoeffs {
    pub fn new(p: Rat, q: Rat, r: Rat) -> CubicCoeffs {
        CubicCoeffs { p, q, r }
    }

    pub fn from_ints(p: i64, q: i64, r: i64) -> CubicCoeffs {
        CubicCoeffs::new(int(p), int(q), int(r))
    }

    /// Reads the coefficients of any cubic after dividing by its leading
    /// coefficient.
    pub fn from_poly(f: &Poly) -> Result<CubicCoeffs> {
        if f.degree() != Some(3) {
            return Err(Error::WrongDegree {
                expected: 3,
                got: f.signed_degree(),
            });
        }
        let m = f.monicize()?;
        Ok(CubicCoeffs::new(m.coeff(2), m.coeff(1), m.coeff(0)))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![self.r.clone(), self.q.clone(), self.p.clone(), Rat::one()])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicInvariants {
    /// `D`
    pub discriminant: Rat,
    /// `P = p^2 - 3q`
    pub derivative_disc: Rat,
    /// `E = 27r - 9pq + 2p^3`
    pub offset_numer: Rat,
    /// `T = p^3 - 27r`
    pub triple_defect: Rat,
}

pub fn cubic_invariants(c: &CubicCoeffs) -> CubicInvariants {
    let CubicCoeffs { p, q, r } = c;
    let p2 = p * p;
    let p3 = &p2 * p;
    let q2 = q * q;
    let q3 = &q2 * q;
    let pq = p * q;
    let discriminant = int(-4) * &q3 + &p2 * &q2 + int(18) * r * &pq
        - int(4) * r * &p3
        - int(27) * r * r;
    CubicInvariants {
        discriminant,
        derivative_disc: &p2 - int(3) * q,
        offset_numer: int(27) * r - int(9) * &pq + int(2) * &p3,
        triple_defect: &p3 - int(27) * r,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicReport {
    pub coeffs: CubicCoeffs,
    pub config: CubicConfig,
    pub invariants: CubicInvariants,
    pub double_root: Option<Rat>,
    pub single_root: Option<Rat>,
    pub triple_root: Option<Rat>,
    /// Raw `E / 2P` in the double-root case.
    pub single_offset: Option<Rat>,
    /// Number of positive roots of multiplicity one; absent when 0 is a root.
    pub positive_single_count: Option<usize>,
}

impl CubicReport {
    pub fn complex_config(&self) -> CubicComplexConfig {
        self.config.complex()
    }
}

pub fn classify_cubic(c: &CubicCoeffs) -> CubicReport {
    let inv = cubic_invariants(c);
    let d = Sign::of(&inv.discriminant);
    let pp = Sign::of(&inv.derivative_disc);

    let mut report = CubicReport {
        coeffs: c.clone(),
        config: CubicConfig::ThreeDistinctReal,
        invariants: inv.clone(),
        double_root: None,
        single_root: None,
        triple_root: None,
        single_offset: None,
        positive_single_count: None,
    };

    report.config = match (d, pp) {
        (Sign::Positive, _) => {
            debug_assert_eq!(pp, Sign::Positive, "D > 0 forces p^2 - 3q > 0");
            CubicConfig::ThreeDistinctReal
        }
        (Sign::Negative, _) => CubicConfig::OneRealTwoComplex,
        (Sign::Zero, Sign::Zero) => {
            report.triple_root = Some(-&c.p / int(3));
            CubicConfig::TripleRoot
        }
        (Sign::Zero, _) => {
            let double = double_root_unchecked(c, &inv);
            let offset = single_offset_unchecked(&inv);
            let single = &double - &offset;
            let order = if offset < Rat::zero() {
                DoubleOrder::SingleAboveDouble
            } else {
                DoubleOrder::SingleBelowDouble
            };
            report.double_root = Some(double);
            report.single_root = Some(single);
            report.single_offset = Some(offset);
            CubicConfig::DoubleAndSingle(order)
        }
    };

    if !c.r.is_zero() {
        report.positive_single_count = Some(match report.config {
            CubicConfig::ThreeDistinctReal | CubicConfig::OneRealTwoComplex => {
                positive_count_squarefree(c, report.config)
            }
            CubicConfig::DoubleAndSingle(_) => {
                usize::from(report.single_root.as_ref().is_some_and(|s| *s > Rat::zero()))
            }
            CubicConfig::TripleRoot => 0,
        });
    }
    report
}

fn double_root_unchecked(c: &CubicCoeffs, inv: &CubicInvariants) -> Rat {
    (int(9) * &c.r - &c.p * &c.q) / (int(2) * &inv.derivative_disc)
}

fn single_offset_unchecked(inv: &CubicInvariants) -> Rat {
    &inv.offset_numer / (int(2) * &inv.derivative_disc)
}

fn in_double_case(inv: &CubicInvariants) -> bool {
    inv.discriminant.is_zero() && !inv.derivative_disc.is_zero()
}

/// The double root `-(pq - 9r) / 2(p^2 - 3q)`.
pub fn cubic_double_root(c: &CubicCoeffs) -> Result<Rat> {
    let inv = cubic_invariants(c);
    if !in_double_case(&inv) {
        return Err(Error::NotInDoubleCase);
    }
    Ok(double_root_unchecked(c, &inv))
}

/// `E / 2P`, which equals double root minus single root.
pub fn cubic_single_root_offset(c: &CubicCoeffs) -> Result<Rat> {
    let inv = cubic_invariants(c);
    if !in_double_case(&inv) {
        return Err(Error::NotInDoubleCase);
    }
    Ok(single_offset_unchecked(&inv))
}

/// Positive roots of a cubic with three simple roots, from the sign rules on
/// `q`, `r` and `pq - 9r`.
pub fn cubic_positive_single_count(c: &CubicCoeffs) -> Result<usize> {
    if c.r.is_zero() {
        return Err(Error::ZeroIsRoot);
    }
    let inv = cubic_invariants(c);
    match Sign::of(&inv.discriminant) {
        Sign::Zero => Err(Error::NotSquarefree),
        Sign::Positive => Ok(positive_count_squarefree(c, CubicConfig::ThreeDistinctReal)),
        Sign::Negative => Ok(positive_count_squarefree(c, CubicConfig::OneRealTwoComplex)),
    }
}

fn positive_count_squarefree(c: &CubicCoeffs, config: CubicConfig) -> usize {
    let r = Sign::of(&c.r);
    match config {
        CubicConfig::ThreeDistinctReal => {
            let q = Sign::of(&c.q);
            let w = Sign::of(&(&c.p * &c.q - int(9) * &c.r));
            match (q, r, w) {
                (Sign::Positive, _, Sign::Zero) => {
                    // boundary of the sign rules
                    sturm::count_positive_real_roots(&c.to_poly()).expect("r != 0")
                }
                (Sign::Positive, Sign::Positive, Sign::Positive) => 0,
                (Sign::Positive, Sign::Negative, Sign::Negative) => 3,
                (_, Sign::Positive, _) => 2,
                _ => 1,
            }
        }
        _ => usize::from(r == Sign::Negative),
    }
}

pub fn cubic_complex_configuration(c: &CubicCoeffs) -> CubicComplexConfig {
    let inv = cubic_invariants(c);
    match (inv.discriminant.is_zero(), inv.derivative_disc.is_zero()) {
        (false, _) => CubicComplexConfig::ThreeDistinct,
        (true, false) => CubicComplexConfig::DoubleAndSingle,
        (true, true) => CubicComplexConfig::Triple,
    }
}
