//! Seeded generation of polynomials with a known root configuration.

use std::collections::BTreeMap;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::label::{
    ConfigLabel, CubicConfig, DoubleOrder, DoubleSinglesOrder, QuarticConfig, TripleOrder,
};
use crate::oracle::{Interval, RealRoot, RootStructure};
use crate::poly::Poly;
use crate::rat::{int, ratio, Rat};

#[derive(Debug, Clone)]
pub struct LabeledInstance {
    pub poly: Poly,
    pub label: ConfigLabel,
    pub expected: RootStructure,
}

/// Draws small rationals for root construction.
pub struct RootSampler {
    rng: ChaCha8Rng,
    max_numer: i64,
    max_denom: i64,
}

impl RootSampler {
    pub fn new(seed: u64) -> RootSampler {
        RootSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_numer: 12,
            max_denom: 4,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self) -> Rat {
        let n = self.rng.gen_range(-self.max_numer..=self.max_numer);
        let d = self.rng.gen_range(1..=self.max_denom);
        ratio(n, d)
    }

    pub fn positive(&mut self) -> Rat {
        let n = self.rng.gen_range(1..=self.max_numer);
        let d = self.rng.gen_range(1..=self.max_denom);
        ratio(n, d)
    }

    /// `k` distinct rationals in increasing order.
    pub fn distinct_sorted(&mut self, k: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(k);
        while out.len() < k {
            let x = self.rational();
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    /// Monic quadratic `x^2 - 2u x + u^2 + v` with `v > 0`, plus `(u, v)`.
    pub fn complex_pair(&mut self) -> (Poly, (Rat, Rat)) {
        let u = self.rational();
        let v = self.positive();
        let quad = Poly::new(vec![&u * &u + &v, int(-2) * &u, Rat::one()]);
        (quad, (u, v))
    }
}

fn structure(real: &[(Rat, u32)], pairs: &[(u32, usize)]) -> RootStructure {
    RootStructure {
        real_roots: real
            .iter()
            .map(|(x, m)| RealRoot {
                interval: Interval::point(x.clone()),
                multiplicity: *m,
            })
            .collect(),
        complex_pairs: pairs.iter().copied().collect::<BTreeMap<_, _>>(),
    }
}

/// Real roots with multiplicity, and complex-pair quadratics with multiplicity.
type Pattern = (Vec<(Rat, u32)>, Vec<(Poly, u32)>);

/// Builds one instance of `label` from fresh random roots.
pub fn construct(label: ConfigLabel, s: &mut RootSampler) -> LabeledInstance {
    use DoubleSinglesOrder::*;
    use TripleOrder::*;

    // Real roots are listed in ascending order.
    let (real, complex): Pattern = match label {
        ConfigLabel::Cubic(c) => match c {
            CubicConfig::ThreeDistinctReal => {
                let r = s.distinct_sorted(3);
                (r.into_iter().map(|x| (x, 1)).collect(), vec![])
            }
            CubicConfig::OneRealTwoComplex => (vec![(s.rational(), 1)], vec![(s.complex_pair().0, 1)]),
            CubicConfig::DoubleAndSingle(order) => {
                let r = s.distinct_sorted(2);
                match order {
                    DoubleOrder::SingleAboveDouble => (vec![(r[0].clone(), 2), (r[1].clone(), 1)], vec![]),
                    DoubleOrder::SingleBelowDouble => (vec![(r[0].clone(), 1), (r[1].clone(), 2)], vec![]),
                }
            }
            CubicConfig::TripleRoot => (vec![(s.rational(), 3)], vec![]),
        },
        ConfigLabel::Quartic(c) => match c {
            QuarticConfig::FourDistinctReal => {
                (s.distinct_sorted(4).into_iter().map(|x| (x, 1)).collect(), vec![])
            }
            QuarticConfig::TwoRealTwoComplex => {
                let r = s.distinct_sorted(2);
                (r.into_iter().map(|x| (x, 1)).collect(), vec![(s.complex_pair().0, 1)])
            }
            QuarticConfig::FourComplex => {
                let (a, key_a) = s.complex_pair();
                let b = loop {
                    let (b, key_b) = s.complex_pair();
                    if key_b != key_a {
                        break b;
                    }
                };
                (vec![], vec![(a, 1), (b, 1)])
            }
            QuarticConfig::DoubleWithTwoRealSingles(order) => {
                let r = s.distinct_sorted(3);
                let mults = match order {
                    SingleDoubleSingle => [1, 2, 1],
                    DoubleBelowBoth => [2, 1, 1],
                    DoubleAboveBoth => [1, 1, 2],
                };
                (r.into_iter().zip(mults).collect(), vec![])
            }
            QuarticConfig::DoubleWithComplexPair => (vec![(s.rational(), 2)], vec![(s.complex_pair().0, 1)]),
            QuarticConfig::TwoRealDoubles => {
                (s.distinct_sorted(2).into_iter().map(|x| (x, 2)).collect(), vec![])
            }
            QuarticConfig::TwoComplexDoubles => (vec![], vec![(s.complex_pair().0, 2)]),
            QuarticConfig::TripleAndSingle(order) => {
                let r = s.distinct_sorted(2);
                let mults = match order {
                    TripleBelow => [3, 1],
                    TripleAbove => [1, 3],
                };
                (r.into_iter().zip(mults).collect(), vec![])
            }
            QuarticConfig::QuadrupleRoot => (vec![(s.rational(), 4)], vec![]),
        },
    };

    let poly = complex
        .iter()
        .fold(Poly::from_roots(&real), |acc, (quad, m)| &acc * &quad.pow(*m));
    let mut pairs: BTreeMap<u32, usize> = BTreeMap::new();
    for (_, m) in &complex {
        *pairs.entry(*m).or_default() += 1;
    }
    let pairs: Vec<_> = pairs.into_iter().collect();
    LabeledInstance {
        poly,
        label,
        expected: structure(&real, &pairs),
    }
}

fn label_stream_seed(label: ConfigLabel, seed: u64) -> u64 {
    let index = ConfigLabel::all().position(|l| l == label).unwrap_or(0) as u64;
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index)
}

/// `count` seeded instances realizing `label`; identical arguments always give
/// identical output.
pub fn sample_labeled_instances(label: ConfigLabel, count: usize, seed: u64) -> Vec<LabeledInstance> {
    let mut s = RootSampler::new(label_stream_seed(label, seed));
    (0..count).map(|_| construct(label, &mut s)).collect()
}

/// Whether `rs` agrees with an expected structure built from exact roots:
/// same multiplicity pattern and every expected root inside the matching
/// interval.
pub fn matches_expected(rs: &RootStructure, expected: &RootStructure) -> bool {
    rs.same_shape(expected)
        && rs
            .real_roots
            .iter()
            .zip(&expected.real_roots)
            .all(|(got, want)| got.interval.contains(&want.interval.lo))
}

/// Random rational `n/d` with `|n| <= max` and `1 <= d <= max`.
pub fn random_rational<R: Rng>(rng: &mut R, max: i64) -> Rat {
    let n = rng.gen_range(-max..=max);
    let d = rng.gen_range(1..=max);
    ratio(n, d)
}
