//! Closed-form classification of monic quartics `x^4 + p x^3 + q x^2 + r x + s`.
//!
//! The configuration is decided by the signs of the discriminant `D`, the
//! leading numerator `D1` of the degree-one Sturm remainder, `G = 3p^2 - 8q`
//! and `H = p^3 - 4pq + 8r`, with `D2` and `D3` fixing the order of a double
//! root against two real single roots.
//!
//! | case | condition |
//! |------|-----------|
//! | 1    | `G > 0, D1 > 0, D > 0` |
//! | 2    | `D < 0` |
//! | 3    | `D > 0` and (`G <= 0` or `D1 <= 0`) |
//! | 4a/b/c | `D = 0, D1 > 0`; `D2 < 0` / `D2 > 0, D3 < 0` / `D2 > 0, D3 > 0` |
//! | 5    | `D = 0, D1 < 0` |
//! | 6    | `D = 0, D1 = 0, G > 0, H = 0` |
//! | 7    | `D = 0, D1 = 0, G < 0` |
//! | 8a/b | `D = 0, D1 = 0, G > 0, H != 0`; `H < 0` / `H > 0` |
//! | 9    | `D = 0, D1 = 0, G = 0` |

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::label::{DoubleSinglesOrder, QuarticComplexConfig, QuarticConfig, TripleOrder};
use crate::poly::Poly;
use crate::rat::{int, ratio, Rat, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticCoeffs {
    pub p: Rat,
    pub q: Rat,
    pub r: Rat,
    pub s: Rat,
}

impl QuarticCoeffs {
    pub fn new(p: Rat, q: Rat, r: Rat, s: Rat) -> QuarticCoeffs {
        QuarticCoeffs { p, q, r, s }
    }

    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> QuarticCoeffs {
        QuarticCoeffs::new(int(p), int(q), int(r), int(s))
    }

    pub fn from_poly(f: &Poly) -> Result<QuarticCoeffs> {
        if f.degree() != Some(4) {
            return Err(Error::WrongDegree {
                expected: 4,
                got: f.signed_degree(),
            });
        }
        let m = f.monicize()?;
        Ok(QuarticCoeffs::new(m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![
            self.s.clone(),
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            Rat::one(),
        ])
    }

    /// Coefficients of `f(-x)`.
    pub fn mirrored(&self) -> QuarticCoeffs {
        QuarticCoeffs::new(-&self.p, self.q.clone(), -&self.r, self.s.clone())
    }
}

/// A term `coeff * p^a q^b r^c s^d`.
pub type Term = (i64, u32, u32, u32, u32);

/// Evaluates a polynomial in `(p, q, r, s)` given as a term list.
pub fn eval_terms(terms: &[Term], c: &QuarticCoeffs) -> Rat {
    let pow = |x: &Rat, e: u32| num_traits::pow(x.clone(), e as usize);
    terms
        .iter()
        .map(|&(k, a, b, e, d)| int(k) * pow(&c.p, a) * pow(&c.q, b) * pow(&c.r, e) * pow(&c.s, d))
        .sum()
}

const DISCRIMINANT: [Term; 16] = [
    (18, 3, 1, 1, 1),
    (-4, 2, 3, 0, 1),
    (144, 0, 1, 2, 1),
    (1, 2, 2, 2, 0),
    (-192, 1, 0, 1, 2),
    (144, 2, 1, 0, 2),
    (18, 1, 1, 3, 0),
    (-4, 3, 0, 3, 0),
    (-128, 0, 2, 0, 2),
    (16, 0, 4, 0, 1),
    (-4, 0, 3, 2, 0),
    (-27, 4, 0, 0, 2),
    (-80, 1, 2, 1, 1),
    (-6, 2, 0, 2, 1),
    (256, 0, 0, 0, 3),
    (-27, 0, 0, 4, 0),
];

const D1_TERMS: [Term; 7] = [
    (1, 2, 2, 0, 0),
    (-3, 3, 0, 1, 0),
    (-6, 2, 0, 0, 1),
    (-4, 0, 3, 0, 0),
    (14, 1, 1, 1, 0),
    (16, 0, 1, 0, 1),
    (-18, 0, 0, 2, 0),
];

/// Numerator of the constant term of the leftover quadratic, scaled by
/// `2 D1^2`.
const D2_TERMS: [Term; 33] = [
    (4320, 2, 1, 2, 1),
    (-6912, 1, 1, 1, 2),
    (702, 5, 1, 1, 1),
    (27, 6, 1, 2, 0),
    (128, 3, 4, 1, 0),
    (-272, 1, 5, 1, 0),
    (-252, 4, 2, 2, 0),
    (162, 3, 1, 3, 0),
    (1152, 2, 2, 0, 2),
    (-1440, 3, 2, 1, 1),
    (-256, 1, 3, 1, 1),
    (27, 5, 0, 3, 0),
    (336, 0, 4, 2, 0),
    (189, 2, 0, 4, 0),
    (648, 0, 1, 4, 0),
    (2, 4, 5, 0, 0),
    (-16, 2, 6, 0, 0),
    (-256, 0, 5, 0, 1),
    (512, 0, 3, 0, 2),
    (6912, 0, 0, 2, 2),
    (81, 6, 0, 0, 2),
    (32, 0, 7, 0, 0),
    (500, 2, 3, 2, 0),
    (-1296, 1, 2, 3, 0),
    (-1026, 4, 0, 2, 1),
    (-648, 4, 1, 0, 2),
    (544, 2, 4, 0, 1),
    (-228, 4, 3, 0, 1),
    (-15, 5, 3, 1, 0),
    (-3456, 1, 0, 3, 1),
    (1728, 3, 0, 1, 2),
    (-81, 7, 0, 1, 1),
    (27, 6, 2, 0, 1),
];

/// Numerator of the double root, `-3pr^2 + 4q^2 r + 9sp^3 - p^2 qr - 32pqs + 48rs`.
const DOUBLE_ROOT_NUMER: [Term; 6] = [
    (-3, 1, 0, 2, 0),
    (4, 0, 2, 1, 0),
    (9, 3, 0, 0, 1),
    (-1, 2, 1, 1, 0),
    (-32, 1, 1, 0, 1),
    (48, 0, 0, 1, 1),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub d: Rat,
    pub d1: Rat,
    pub d2: Rat,
    /// `D3 = H (q^2 - 3pr + 12s)`
    pub d3: Rat,
    /// `D4 = H (27p^3 r - 9p^2 q^2 - 108pqr + 32q^3 + 108r^2)`
    pub d4: Rat,
    pub d5: Rat,
    /// `G = 3p^2 - 8q`
    pub g: Rat,
    /// `H = p^3 - 4pq + 8r`
    pub h: Rat,
    /// `K = p^4 - 256s`
    pub k: Rat,
}

pub fn quartic_invariants(c: &QuarticCoeffs) -> QuarticInvariants {
    let QuarticCoeffs { p, q, r, s } = c;
    let p2 = p * p;
    let p3 = &p2 * p;
    let q2 = q * q;
    let pq = p * q;
    let g = int(3) * &p2 - int(8) * q;
    let h = &p3 - int(4) * &pq + int(8) * r;
    let d5_core = int(27) * &p3 * r - int(9) * &p2 * &q2 - int(108) * &pq * r
        + int(32) * &q2 * q
        + int(108) * r * r;
    let d5 = ratio(-27, 64) * &p3 * r + ratio(9, 64) * &p2 * &q2 + ratio(27, 16) * &pq * r
        - ratio(27, 16) * r * r
        - ratio(1, 2) * &q2 * q;
    QuarticInvariants {
        d: eval_terms(&DISCRIMINANT, c),
        d1: eval_terms(&D1_TERMS, c),
        d2: eval_terms(&D2_TERMS, c),
        d3: &h * (&q2 - int(3) * p * r + int(12) * s),
        d4: &h * d5_core,
        d5,
        k: &p2 * &p2 - int(256) * s,
        g,
        h,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticReport {
    pub coeffs: QuarticCoeffs,
    pub config: QuarticConfig,
    pub invariants: QuarticInvariants,
    /// Cases 4 and 5.
    pub double_root: Option<Rat>,
    /// Cases 4 and 5: `y^2 + b y + c` whose roots are the single roots minus
    /// the double root.
    pub leftover_quadratic: Option<Poly>,
    /// Case 8.
    pub triple_root: Option<Rat>,
    /// Case 8.
    pub single_root: Option<Rat>,
    /// Case 9.
    pub quadruple_root: Option<Rat>,
    /// Cases 6 and 7: monic `g` with `f = g^2`.
    pub double_pair_quadratic: Option<Poly>,
}

impl QuarticReport {
    pub fn complex_config(&self) -> QuarticComplexConfig {
        self.config.complex()
    }
}

fn real_config(inv: &QuarticInvariants) -> QuarticConfig {
    let d = Sign::of(&inv.d);
    let d1 = Sign::of(&inv.d1);
    let g = Sign::of(&inv.g);
    let h = Sign::of(&inv.h);
    match (d, d1) {
        (Sign::Negative, _) => QuarticConfig::TwoRealTwoComplex,
        (Sign::Positive, Sign::Positive) if g == Sign::Positive => QuarticConfig::FourDistinctReal,
        (Sign::Positive, _) => QuarticConfig::FourComplex,
        (Sign::Zero, Sign::Positive) => {
            let order = match (Sign::of(&inv.d2), Sign::of(&inv.d3)) {
                (Sign::Negative, _) => DoubleSinglesOrder::SingleDoubleSingle,
                (Sign::Positive, Sign::Negative) => DoubleSinglesOrder::DoubleBelowBoth,
                (Sign::Positive, Sign::Positive) => DoubleSinglesOrder::DoubleAboveBoth,
                (d2, d3) => unreachable!("D = 0, D1 > 0 with D2 {d2}, D3 {d3}"),
            };
            QuarticConfig::DoubleWithTwoRealSingles(order)
        }
        (Sign::Zero, Sign::Negative) => QuarticConfig::DoubleWithComplexPair,
        (Sign::Zero, Sign::Zero) => match (g, h) {
            (Sign::Zero, _) => QuarticConfig::QuadrupleRoot,
            (Sign::Negative, _) => QuarticConfig::TwoComplexDoubles,
            (Sign::Positive, Sign::Zero) => QuarticConfig::TwoRealDoubles,
            (Sign::Positive, Sign::Negative) => QuarticConfig::TripleAndSingle(TripleOrder::TripleBelow),
            (Sign::Positive, Sign::Positive) => QuarticConfig::TripleAndSingle(TripleOrder::TripleAbove),
        },
    }
}

pub fn classify_quartic(c: &QuarticCoeffs) -> QuarticReport {
    let inv = quartic_invariants(c);
    let config = real_config(&inv);
    let mut report = QuarticReport {
        coeffs: c.clone(),
        config,
        invariants: inv,
        double_root: None,
        leftover_quadratic: None,
        triple_root: None,
        single_root: None,
        quadruple_root: None,
        double_pair_quadratic: None,
    };
    match config {
        QuarticConfig::DoubleWithTwoRealSingles(_) | QuarticConfig::DoubleWithComplexPair => {
            let d = double_root_unchecked(c, &report.invariants);
            report.leftover_quadratic = Some(leftover_unchecked(c, &d));
            report.double_root = Some(d);
        }
        QuarticConfig::TripleAndSingle(_) => {
            let (t, s) = triple_single_unchecked(c, &report.invariants);
            report.triple_root = Some(t);
            report.single_root = Some(s);
        }
        QuarticConfig::QuadrupleRoot => report.quadruple_root = Some(-&c.p / int(4)),
        QuarticConfig::TwoRealDoubles | QuarticConfig::TwoComplexDoubles => {
            report.double_pair_quadratic = Some(double_pair_unchecked(c));
        }
        _ => {}
    }
    report
}

fn in_double_case(inv: &QuarticInvariants) -> bool {
    inv.d.is_zero() && !inv.d1.is_zero()
}

fn double_root_unchecked(c: &QuarticCoeffs, inv: &QuarticInvariants) -> Rat {
    eval_terms(&DOUBLE_ROOT_NUMER, c) / (int(2) * &inv.d1)
}

fn leftover_unchecked(c: &QuarticCoeffs, d: &Rat) -> Poly {
    let linear = &c.p + int(4) * d;
    let constant = &c.q + int(3) * &c.p * d + int(6) * d * d;
    Poly::new(vec![constant, linear, Rat::one()])
}

fn triple_single_unchecked(c: &QuarticCoeffs, inv: &QuarticInvariants) -> (Rat, Rat) {
    let triple = (int(6) * &c.r - &c.p * &c.q) / &inv.g;
    let single = &triple - int(3) * &inv.h / &inv.g;
    (triple, single)
}

fn double_pair_unchecked(c: &QuarticCoeffs) -> Poly {
    let half_p = &c.p / int(2);
    let constant = (&c.q - &half_p * &half_p) / int(2);
    Poly::new(vec![constant, half_p, Rat::one()])
}

/// The real double root of cases 4 and 5.
pub fn quartic_double_root(c: &QuarticCoeffs) -> Result<Rat> {
    let inv = quartic_invariants(c);
    if !in_double_case(&inv) {
        return Err(Error::NotInDoubleCase);
    }
    Ok(double_root_unchecked(c, &inv))
}

/// The quadratic left after translating the double root to 0 and dividing
/// out `y^2`. Its constant term has the sign of `D2` and its `y` coefficient
/// is `D3 / D1`.
pub fn leftover_quadratic(c: &QuarticCoeffs) -> Result<Poly> {
    let d = quartic_double_root(c)?;
    Ok(leftover_unchecked(c, &d))
}

pub fn quartic_triple_and_single(c: &QuarticCoeffs) -> Result<(Rat, Rat)> {
    let inv = quartic_invariants(c);
    match real_config(&inv) {
        QuarticConfig::TripleAndSingle(_) => Ok(triple_single_unchecked(c, &inv)),
        _ => Err(Error::NotInTripleCase),
    }
}

/// Monic `g` with `f = g^2`, for the two-double-roots cases.
pub fn quartic_double_pair(c: &QuarticCoeffs) -> Result<Poly> {
    let inv = quartic_invariants(c);
    match real_config(&inv) {
        QuarticConfig::TwoRealDoubles | QuarticConfig::TwoComplexDoubles => {}
        _ => return Err(Error::NotInTwoDoubleCase),
    }
    let g = double_pair_unchecked(c);
    if g.pow(2) != c.to_poly() {
        return Err(Error::InternalInconsistency(format!(
            "{} is not the square of {g}",
            c.to_poly()
        )));
    }
    Ok(g)
}

pub fn quadruple_root(c: &QuarticCoeffs) -> Result<Rat> {
    let inv = quartic_invariants(c);
    if !(inv.d.is_zero() && inv.d1.is_zero() && inv.g.is_zero()) {
        return Err(Error::NotQuadruple);
    }
    let root = -&c.p / int(4);
    if Poly::from_roots(&[(root.clone(), 4)]) != c.to_poly() {
        return Err(Error::InternalInconsistency(format!(
            "{} is not a fourth power",
            c.to_poly()
        )));
    }
    Ok(root)
}

pub fn quartic_complex_configuration(c: &QuarticCoeffs) -> QuarticComplexConfig {
    let inv = quartic_invariants(c);
    if !inv.d.is_zero() {
        QuarticComplexConfig::FourDistinct
    } else if !inv.d1.is_zero() {
        QuarticComplexConfig::DoubleTwoSingles
    } else if inv.g.is_zero() {
        QuarticComplexConfig::Quadruple
    } else if inv.h.is_zero() {
        QuarticComplexConfig::TwoDoubles
    } else {
        QuarticComplexConfig::TripleSingle
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm;
    use proptest::prelude::*;

    fn c(p: i64, q: i64, r: i64, s: i64) -> QuarticCoeffs {
        QuarticCoeffs::from_ints(p, q, r, s)
    }

    /// The table rows written out literally, independent of `real_config`.
    fn matching_rows(inv: &QuarticInvariants) -> Vec<QuarticConfig> {
        use DoubleSinglesOrder::*;
        use TripleOrder::*;
        let z = Rat::zero();
        let (d, d1, d2, d3, g, h) = (&inv.d, &inv.d1, &inv.d2, &inv.d3, &inv.g, &inv.h);
        let rows = [
            (QuarticConfig::FourDistinctReal, *g > z && *d1 > z && *d > z),
            (QuarticConfig::TwoRealTwoComplex, *d < z),
            (QuarticConfig::FourComplex, *d > z && (*g <= z || *d1 <= z)),
            (QuarticConfig::DoubleWithTwoRealSingles(SingleDoubleSingle), *d == z && *d1 > z && *d2 < z),
            (QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth), *d == z && *d1 > z && *d2 > z && *d3 < z),
            (QuarticConfig::DoubleWithTwoRealSingles(DoubleAboveBoth), *d == z && *d1 > z && *d2 > z && *d3 > z),
            (QuarticConfig::DoubleWithComplexPair, *d == z && *d1 < z),
            (QuarticConfig::TwoRealDoubles, *d == z && *d1 == z && *g > z && *h == z),
            (QuarticConfig::TwoComplexDoubles, *d == z && *d1 == z && *g < z),
            (QuarticConfig::TripleAndSingle(TripleBelow), *d == z && *d1 == z && *g > z && *h < z),
            (QuarticConfig::TripleAndSingle(TripleAbove), *d == z && *d1 == z && *g > z && *h > z),
            (QuarticConfig::QuadrupleRoot, *d == z && *d1 == z && *g == z),
        ];
        rows.into_iter().filter(|(_, hit)| *hit).map(|(c, _)| c).collect()
    }

    #[test]
    fn invariants_examples() {
        let inv = quartic_invariants(&c(-10, 35, -50, 24));
        assert_eq!((inv.d, inv.d1, inv.g), (int(144), int(40), int(20)));
        let inv = quartic_invariants(&c(0, 0, 0, 1));
        assert_eq!((inv.d, inv.g), (int(256), int(0)));
        let inv = quartic_invariants(&c(0, 0, 0, 0));
        for v in [inv.d, inv.d1, inv.g, inv.h, inv.k] {
            assert!(v.is_zero());
        }
    }

    #[test]
    fn classify_examples() {
        use DoubleSinglesOrder::*;
        let cases = [
            (c(-10, 35, -50, 24), QuarticConfig::FourDistinctReal),
            (c(0, 0, 0, -1), QuarticConfig::TwoRealTwoComplex),
            (c(0, 0, 0, 1), QuarticConfig::FourComplex),
            (c(-7, 17, -17, 6), QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth)),
            (c(-8, 23, -28, 12), QuarticConfig::DoubleWithTwoRealSingles(SingleDoubleSingle)),
            (c(0, -2, 0, 1), QuarticConfig::TwoRealDoubles),
            (c(0, 2, 0, 1), QuarticConfig::TwoComplexDoubles),
            (c(-1, 0, 0, 0), QuarticConfig::TripleAndSingle(TripleOrder::TripleBelow)),
            (c(0, 0, 0, 0), QuarticConfig::QuadrupleRoot),
        ];
        for (coeffs, expected) in cases {
            let rep = classify_quartic(&coeffs);
            assert_eq!(rep.config, expected, "{coeffs:?}");
            assert_eq!(matching_rows(&rep.invariants), vec![expected]);
        }
        assert_eq!(quartic_invariants(&c(0, 0, 0, -1)).d, int(-256));

        let inv = quartic_invariants(&c(-7, 17, -17, 6));
        assert_eq!((inv.d.clone(), inv.d1.clone(), inv.d3.clone()), (int(0), int(4), int(-12)));
        assert!(inv.d2 > Rat::zero());
        assert_eq!(classify_quartic(&c(0, 0, 0, 0)).quadruple_root, Some(int(0)));
    }

    #[test]
    fn double_root_examples() {
        assert_eq!(quartic_double_root(&c(-7, 17, -17, 6)), Ok(int(1)));
        assert_eq!(quartic_double_root(&c(-8, 23, -28, 12)), Ok(int(2)));
        assert_eq!(quartic_double_root(&c(0, 2, 0, 1)), Err(Error::NotInDoubleCase));
        assert_eq!(quartic_double_root(&c(-10, 35, -50, 24)), Err(Error::NotInDoubleCase));
    }

    #[test]
    fn leftover_quadratic_examples() {
        assert_eq!(leftover_quadratic(&c(-7, 17, -17, 6)), Ok(Poly::from_ints(&[2, -3, 1])));
        assert_eq!(leftover_quadratic(&c(-8, 23, -28, 12)), Ok(Poly::from_ints(&[-1, 0, 1])));

        // (x - 1)^2 (x^2 + 1): double root 1, singles i and -i.
        let f = &Poly::from_roots(&[(int(1), 2)]) * &Poly::from_ints(&[1, 0, 1]);
        let coeffs = QuarticCoeffs::from_poly(&f).unwrap();
        let rep = classify_quartic(&coeffs);
        assert_eq!(rep.config, QuarticConfig::DoubleWithComplexPair);
        let lq = leftover_quadratic(&coeffs).unwrap();
        let disc = lq.coeff(1) * lq.coeff(1) - int(4) * lq.coeff(0);
        assert!(disc < Rat::zero());
        assert_eq!(lq, Poly::from_ints(&[1, 0, 1]).translate(&int(1)));
    }

    #[test]
    fn triple_and_single_examples() {
        assert_eq!(quartic_triple_and_single(&c(-1, 0, 0, 0)), Ok((int(0), int(1))));
        assert_eq!(quartic_triple_and_single(&c(1, 0, 0, 0)), Ok((int(0), int(-1))));
        assert_eq!(quartic_triple_and_single(&c(-5, 6, 0, 0)), Err(Error::NotInTripleCase));
        assert_eq!(quartic_triple_and_single(&c(0, 0, 0, 0)), Err(Error::NotInTripleCase));
    }

    #[test]
    fn double_pair_examples() {
        assert_eq!(quartic_double_pair(&c(0, -2, 0, 1)), Ok(Poly::from_ints(&[-1, 0, 1])));
        assert_eq!(quartic_double_pair(&c(0, 2, 0, 1)), Ok(Poly::from_ints(&[1, 0, 1])));
        assert_eq!(quartic_double_pair(&c(-2, 3, -2, 1)), Ok(Poly::from_ints(&[1, -1, 1])));
        assert_eq!(quartic_double_pair(&c(-1, 0, 0, 0)), Err(Error::NotInTwoDoubleCase));
    }

    #[test]
    fn quadruple_examples() {
        assert_eq!(quadruple_root(&c(0, 0, 0, 0)), Ok(int(0)));
        assert_eq!(quadruple_root(&c(-4, 6, -4, 1)), Ok(int(1)));
        assert_eq!(quadruple_root(&c(4, 6, 4, 1)), Ok(int(-1)));
        assert_eq!(quadruple_root(&c(0, 0, 0, 1)), Err(Error::NotQuadruple));
    }

    #[test]
    fn complex_configuration_examples() {
        assert_eq!(quartic_complex_configuration(&c(0, 0, 0, 1)), QuarticComplexConfig::FourDistinct);
        assert_eq!(quartic_complex_configuration(&c(0, 2, 0, 1)), QuarticComplexConfig::TwoDoubles);
        assert!(quartic_invariants(&c(0, 2, 0, 1)).h.is_zero());
        assert_eq!(quartic_complex_configuration(&c(-1, 0, 0, 0)), QuarticComplexConfig::TripleSingle);
        assert_eq!(quartic_complex_configuration(&c(-7, 17, -17, 6)), QuarticComplexConfig::DoubleTwoSingles);
        assert_eq!(quartic_complex_configuration(&c(0, 0, 0, 0)), QuarticComplexConfig::Quadruple);
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-12i64..=12, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
    }

    fn coeffs() -> impl Strategy<Value = QuarticCoeffs> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(p, q, r, s)| QuarticCoeffs::new(p, q, r, s))
    }

    proptest! {
        #[test]
        fn exactly_one_row_matches(c in coeffs()) {
            let inv = quartic_invariants(&c);
            prop_assert_eq!(matching_rows(&inv), vec![real_config(&inv)]);
        }

        #[test]
        fn sturm_agreement(c in coeffs()) {
            prop_assert_eq!(
                classify_quartic(&c).config.distinct_real_roots(),
                sturm::count_distinct_real_roots(&c.to_poly()).unwrap()
            );
        }

        #[test]
        fn mirror_symmetry(c in coeffs()) {
            prop_assert_eq!(
                classify_quartic(&c.mirrored()).config,
                classify_quartic(&c).config.mirrored()
            );
        }

        #[test]
        fn d3_factorization(c in coeffs()) {
            let inv = quartic_invariants(&c);
            let alt = -&inv.h * (int(3) * &c.p * &c.r - int(12) * &c.s - &c.q * &c.q);
            prop_assert_eq!(inv.d3, alt);
        }

        #[test]
        fn d2_is_scaled_leftover_constant(c in coeffs()) {
            let inv = quartic_invariants(&c);
            prop_assume!(!inv.d1.is_zero());
            let d = double_root_unchecked(&c, &inv);
            let lq = leftover_unchecked(&c, &d);
            prop_assert_eq!(&inv.d2, &(int(2) * &inv.d1 * &inv.d1 * lq.coeff(0)));
            prop_assert_eq!(lq.coeff(1), &inv.d3 / &inv.d1);
        }
    }
}
