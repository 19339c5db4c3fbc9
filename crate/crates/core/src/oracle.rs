//! Independent ground truth for root configurations.
//!
//! Multiplicities come from an exact square-free decomposition, real roots
//! from Sturm-count bisection with rational endpoints. No closed-form
//! invariant is consulted, so the classifiers can be checked against it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::label::{
    ConfigLabel, CubicConfig, DoubleOrder, DoubleSinglesOrder, QuarticConfig, TripleOrder,
};
use crate::poly::Poly;
use crate::rat::{int, Rat, Sign};
use crate::sturm::SturmChain;

/// Square-free factors `g_i` with multiplicities `m_i`, ascending in `m_i`,
/// such that `monic(f) = prod g_i^m_i`. Each `g_i` is monic and the factors
/// are pairwise coprime.
pub fn squarefree_multiplicity_split(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => {
            return Err(Error::DegreeTooSmall {
                degree: f.signed_degree(),
                min: 1,
            })
        }
    }
    // Yun's algorithm.
    let f = f.monicize()?;
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut mult = 1;
    while b.degree() != Some(0) {
        let a = b.gcd(&d);
        let next_b = b.exact_div(&a)?;
        let c = d.exact_div(&a)?;
        d = &c - &next_b.derivative();
        if a.degree().is_some_and(|k| k >= 1) {
            out.push((a, mult));
        }
        b = next_b;
        mult += 1;
    }
    Ok(out)
}

/// An isolating interval: either the open interval `(lo, hi)` or the exact
/// point `lo = hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(x: Rat) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn open(lo: Rat, hi: Rat) -> Interval {
        debug_assert!(lo < hi);
        Interval { lo, hi }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Whether `x` lies in the interval (the point itself, or strictly inside).
    pub fn contains(&self, x: &Rat) -> bool {
        if self.is_point() {
            *x == self.lo
        } else {
            self.lo < *x && *x < self.hi
        }
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        match (self.is_point(), other.is_point()) {
            (true, true) => self.lo == other.lo,
            (true, false) => other.contains(&self.lo),
            (false, true) => self.contains(&other.lo),
            (false, false) => self.lo.clone().max(other.lo.clone()) < self.hi.clone().min(other.hi.clone()),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

/// Cauchy bound: every real root lies strictly inside `(-B, B)`.
fn root_bound(f: &Poly) -> Rat {
    let lead = f.leading_coeff().expect("nonzero").abs();
    let n = f.degree().unwrap_or(0);
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    Rat::one() + max
}

pub fn is_squarefree(f: &Poly) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// Isolating intervals of the real roots of a square-free `f`, left to right.
pub fn isolate_real_roots(f: &Poly) -> Result<Vec<Interval>> {
    let chain = SturmChain::new(f)?;
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let bound = root_bound(f);
    let mut out = Vec::new();
    isolate_in(f, f, &chain, -bound.clone(), bound, &mut out)?;
    Ok(out)
}

fn chain_count(chain: &SturmChain, lo: &Rat, hi: &Rat) -> usize {
    chain.signs_at(lo).variations() - chain.signs_at(hi).variations()
}

// `f` is the polynomial being counted, `orig` the one whose roots are
// reported; they differ once rational roots have been divided out.
fn isolate_in(
    orig: &Poly,
    f: &Poly,
    chain: &SturmChain,
    lo: Rat,
    hi: Rat,
    out: &mut Vec<Interval>,
) -> Result<()> {
    match chain_count(chain, &lo, &hi) {
        0 => Ok(()),
        1 => {
            out.push(tighten(orig, chain, lo, hi));
            Ok(())
        }
        _ => {
            let mid = (&lo + &hi) / int(2);
            if f.eval(&mid).is_zero() {
                // Deflate so `mid` is no longer a root of the polynomial being
                // counted, then continue on both sides.
                let g = f.exact_div(&Poly::linear_root(&mid))?;
                let g_chain = SturmChain::new(&g)?;
                isolate_in(orig, &g, &g_chain, lo, mid.clone(), out)?;
                out.push(Interval::point(mid.clone()));
                isolate_in(orig, &g, &g_chain, mid, hi, out)
            } else {
                isolate_in(orig, f, chain, lo, mid.clone(), out)?;
                isolate_in(orig, f, chain, mid, hi, out)
            }
        }
    }
}

/// Shrinks an interval holding one counted root until neither endpoint is a
/// root of `orig`, so the endpoints bracket a sign change.
fn tighten(orig: &Poly, chain: &SturmChain, mut lo: Rat, mut hi: Rat) -> Interval {
    while orig.eval(&lo).is_zero() || orig.eval(&hi).is_zero() {
        let mid = (&lo + &hi) / int(2);
        if orig.eval(&mid).is_zero() {
            return Interval::point(mid);
        }
        if chain_count(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Interval::open(lo, hi)
}

/// One bisection step on an interval holding a single simple root of `f`.
pub fn bisect(f: &Poly, iv: &Interval) -> Interval {
    if iv.is_point() {
        return iv.clone();
    }
    let mid = (&iv.lo + &iv.hi) / int(2);
    let at_mid = Sign::of(&f.eval(&mid));
    if at_mid == Sign::Zero {
        Interval::point(mid)
    } else if Sign::of(&f.eval(&iv.lo)) * at_mid == Sign::Negative {
        Interval::open(iv.lo.clone(), mid)
    } else {
        Interval::open(mid, iv.hi.clone())
    }
}

/// Bisects until the interval is narrower than `width` (or exact).
pub fn refine(f: &Poly, iv: &Interval, width: &Rat) -> Interval {
    let mut iv = iv.clone();
    while !iv.is_point() && iv.width() >= *width {
        iv = bisect(f, &iv);
    }
    iv
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub interval: Interval,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootStructure {
    /// Distinct real roots, left to right, with pairwise disjoint intervals.
    pub real_roots: Vec<RealRoot>,
    /// multiplicity -> number of conjugate pairs with that multiplicity
    pub complex_pairs: BTreeMap<u32, usize>,
}

impl RootStructure {
    pub fn degree(&self) -> u32 {
        let real: u32 = self.real_roots.iter().map(|r| r.multiplicity).sum();
        let complex: u32 = self.complex_pairs.iter().map(|(m, n)| 2 * m * *n as u32).sum();
        real + complex
    }

    pub fn distinct_real_roots(&self) -> usize {
        self.real_roots.len()
    }

    pub fn real_multiplicities(&self) -> Vec<u32> {
        self.real_roots.iter().map(|r| r.multiplicity).collect()
    }

    /// Multiplicity pattern only; intervals are ignored.
    pub fn same_shape(&self, other: &RootStructure) -> bool {
        self.real_multiplicities() == other.real_multiplicities()
            && self.complex_pairs == other.complex_pairs
    }

    /// The cubic or quartic configuration this structure realizes.
    pub fn config(&self) -> Option<ConfigLabel> {
        let mults = self.real_multiplicities();
        let pairs: Vec<(u32, usize)> = self.complex_pairs.iter().map(|(m, n)| (*m, *n)).collect();
        let label = match (self.degree(), mults.as_slice(), pairs.as_slice()) {
            (3, [1, 1, 1], []) => ConfigLabel::Cubic(CubicConfig::ThreeDistinctReal),
            (3, [1], [(1, 1)]) => ConfigLabel::Cubic(CubicConfig::OneRealTwoComplex),
            (3, [2, 1], []) => {
                ConfigLabel::Cubic(CubicConfig::DoubleAndSingle(DoubleOrder::SingleAboveDouble))
            }
            (3, [1, 2], []) => {
                ConfigLabel::Cubic(CubicConfig::DoubleAndSingle(DoubleOrder::SingleBelowDouble))
            }
            (3, [3], []) => ConfigLabel::Cubic(CubicConfig::TripleRoot),
            (4, [1, 1, 1, 1], []) => ConfigLabel::Quartic(QuarticConfig::FourDistinctReal),
            (4, [1, 1], [(1, 1)]) => ConfigLabel::Quartic(QuarticConfig::TwoRealTwoComplex),
            (4, [], [(1, 2)]) => ConfigLabel::Quartic(QuarticConfig::FourComplex),
            (4, [1, 2, 1], []) => ConfigLabel::Quartic(QuarticConfig::DoubleWithTwoRealSingles(
                DoubleSinglesOrder::SingleDoubleSingle,
            )),
            (4, [2, 1, 1], []) => ConfigLabel::Quartic(QuarticConfig::DoubleWithTwoRealSingles(
                DoubleSinglesOrder::DoubleBelowBoth,
            )),
            (4, [1, 1, 2], []) => ConfigLabel::Quartic(QuarticConfig::DoubleWithTwoRealSingles(
                DoubleSinglesOrder::DoubleAboveBoth,
            )),
            (4, [2], [(1, 1)]) => ConfigLabel::Quartic(QuarticConfig::DoubleWithComplexPair),
            (4, [2, 2], []) => ConfigLabel::Quartic(QuarticConfig::TwoRealDoubles),
            (4, [], [(2, 1)]) => ConfigLabel::Quartic(QuarticConfig::TwoComplexDoubles),
            (4, [3, 1], []) => {
                ConfigLabel::Quartic(QuarticConfig::TripleAndSingle(TripleOrder::TripleBelow))
            }
            (4, [1, 3], []) => {
                ConfigLabel::Quartic(QuarticConfig::TripleAndSingle(TripleOrder::TripleAbove))
            }
            (4, [4], []) => ConfigLabel::Quartic(QuarticConfig::QuadrupleRoot),
            _ => return None,
        };
        Some(label)
    }
}

impl fmt::Display for RootStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("real [")?;
        for (i, r) in self.real_roots.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} x{}", r.interval, r.multiplicity)?;
        }
        f.write_str("] complex pairs {")?;
        for (i, (m, n)) in self.complex_pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{m}: {n}")?;
        }
        f.write_str("}")
    }
}

fn interval_order(a: &Interval, b: &Interval) -> Ordering {
    a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi))
}

/// Full multiplicity structure with real roots ordered left to right.
pub fn oracle_classify(f: &Poly) -> Result<RootStructure> {
    let mut real: Vec<(Interval, usize)> = Vec::new();
    let mut factors = Vec::new();
    let mut complex_pairs = BTreeMap::new();
    for (g, mult) in squarefree_multiplicity_split(f)? {
        let roots = isolate_real_roots(&g)?;
        let non_real = g.degree().unwrap_or(0) - roots.len();
        if non_real > 0 {
            *complex_pairs.entry(mult).or_insert(0) += non_real / 2;
        }
        real.extend(roots.into_iter().map(|iv| (iv, factors.len())));
        factors.push((g, mult));
    }

    // Intervals from different factors may overlap; the roots are distinct,
    // so bisecting both sides eventually separates them.
    loop {
        let clash = (0..real.len())
            .flat_map(|i| (i + 1..real.len()).map(move |j| (i, j)))
            .find(|&(i, j)| real[i].0.overlaps(&real[j].0));
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            let (iv, fi) = &real[k];
            real[k].0 = bisect(&factors[*fi].0, iv);
        }
    }
    real.sort_by(|a, b| interval_order(&a.0, &b.0));

    Ok(RootStructure {
        real_roots: real
            .into_iter()
            .map(|(interval, fi)| RealRoot {
                interval,
                multiplicity: factors[fi].1,
            })
            .collect(),
        complex_pairs,
    })
}
