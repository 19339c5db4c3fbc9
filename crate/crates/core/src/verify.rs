//! Three-way comparison of closed-form classifier, Sturm count and oracle.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_poly, Report};
use crate::error::Result;
use crate::label::{ConfigLabel, CubicConfig, QuarticConfig};
use crate::oracle::{oracle_classify, RootStructure};
use crate::poly::Poly;
use crate::rat::{int, Rat};
use crate::sample::{construct, matches_expected, random_rational, sample_labeled_instances, RootSampler};
use crate::sturm;

/// Outcome of checking one polynomial.
#[derive(Debug, Clone)]
pub struct Check {
    pub poly: Poly,
    pub report: Report,
    pub sturm_count: usize,
    pub oracle: RootStructure,
    /// Label the polynomial was constructed to have, if any.
    pub expected: Option<ConfigLabel>,
    /// Exact root structure of the construction, if any.
    pub expected_structure: Option<RootStructure>,
}

impl Check {
    pub fn sturm_agrees(&self) -> bool {
        self.report.label().distinct_real_roots() == self.sturm_count
    }

    pub fn oracle_agrees(&self) -> bool {
        self.oracle.config() == Some(self.report.label())
            && self.oracle.distinct_real_roots() == self.sturm_count
    }

    pub fn expected_agrees(&self) -> bool {
        self.expected.is_none_or(|e| e == self.report.label())
            && self
                .expected_structure
                .as_ref()
                .is_none_or(|e| matches_expected(&self.oracle, e))
    }

    pub fn passed(&self) -> bool {
        self.sturm_agrees() && self.oracle_agrees() && self.expected_agrees()
    }

    pub fn describe(&self) -> String {
        format!(
            "poly: {}\n  classifier: {}\n  sturm distinct real roots: {}\n  oracle: {} ({})\n  expected: {}",
            self.poly,
            self.report.label(),
            self.sturm_count,
            self.oracle
                .config()
                .map_or_else(|| "unrecognized".to_string(), |l| l.to_string()),
            self.oracle,
            self.expected.map_or_else(|| "-".to_string(), |l| l.to_string()),
        )
    }
}

/// Runs classifier, Sturm engine and oracle on a cubic or quartic.
pub fn check_poly(f: &Poly, expected: Option<ConfigLabel>) -> Result<Check> {
    let report = classify_poly(f)?;
    let sturm_count = sturm::count_distinct_real_roots(f)?;
    let oracle = oracle_classify(f)?;
    Ok(Check {
        poly: f.clone(),
        report,
        sturm_count,
        oracle,
        expected,
        expected_structure: None,
    })
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    /// label -> (passed, total); keyed by construction label in constructed
    /// mode and by classifier label in random mode.
    pub per_label: BTreeMap<ConfigLabel, (usize, usize)>,
    pub mismatches: Vec<Check>,
}

impl VerifyReport {
    pub fn total(&self) -> usize {
        self.per_label.values().map(|(_, t)| t).sum()
    }

    pub fn passed(&self) -> usize {
        self.per_label.values().map(|(p, _)| p).sum()
    }

    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, key: ConfigLabel, check: Check) {
        let entry = self.per_label.entry(key).or_default();
        entry.1 += 1;
        if check.passed() {
            entry.0 += 1;
        } else {
            self.mismatches.push(check);
        }
    }
}

/// `count` constructed instances of every configuration label.
pub fn verify_constructed(count: usize, seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for label in ConfigLabel::all() {
        for inst in sample_labeled_instances(label, count, seed) {
            let mut check = check_poly(&inst.poly, Some(label))?;
            check.expected_structure = Some(inst.expected);
            report.record(label, check);
        }
    }
    Ok(report)
}

/// Random monic cubic: raw coefficients most of the time, otherwise a
/// construction on a lower-dimensional stratum.
pub fn random_cubic<R: Rng>(rng: &mut R, max: i64) -> Poly {
    match rng.gen_range(0..10) {
        0..=5 => monic(&draws(rng, 3, max)),
        6 => {
            // P = 0 slice
            let p = random_rational(rng, max);
            let q = &p * &p / int(3);
            monic(&[p, q, random_rational(rng, max)])
        }
        _ => {
            let label = CubicConfig::ALL[rng.gen_range(0..CubicConfig::ALL.len())];
            let mut s = RootSampler::new(rng.gen());
            construct(ConfigLabel::Cubic(label), &mut s).poly
        }
    }
}

/// Random monic quartic, with injections onto the `D = 0` and `D1 = 0`
/// strata (including double roots that are irrational).
pub fn random_quartic<R: Rng>(rng: &mut R, max: i64) -> Poly {
    match rng.gen_range(0..10) {
        0..=4 => monic(&draws(rng, 4, max)),
        5 => {
            // (x - a)^2 times an arbitrary monic quadratic
            let c = draws(rng, 3, max);
            let quad = Poly::new(vec![c[1].clone(), c[2].clone(), int(1)]);
            &Poly::from_roots(&[(c[0].clone(), 2)]) * &quad
        }
        6 => {
            // square of an arbitrary monic quadratic
            monic(&draws(rng, 2, max)).pow(2)
        }
        _ => {
            let label = QuarticConfig::ALL[rng.gen_range(0..QuarticConfig::ALL.len())];
            let mut s = RootSampler::new(rng.gen());
            construct(ConfigLabel::Quartic(label), &mut s).poly
        }
    }
}

fn draws<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vec<Rat> {
    (0..n).map(|_| random_rational(rng, max)).collect()
}

/// Monic polynomial with the given coefficients from `x^(n-1)` down to `x^0`.
pub fn monic(high_to_low: &[Rat]) -> Poly {
    let mut c: Vec<Rat> = high_to_low.iter().rev().cloned().collect();
    c.push(int(1));
    Poly::new(c)
}

/// `count` random cubics and `count` random quartics with coefficient
/// numerators and denominators bounded by 50.
pub fn verify_random(count: usize, seed: u64) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport::default();
    for _ in 0..count {
        let f = random_cubic(&mut rng, 50);
        let check = check_poly(&f, None)?;
        report.record(check.report.label(), check);
    }
    for _ in 0..count {
        let f = random_quartic(&mut rng, 50);
        let check = check_poly(&f, None)?;
        report.record(check.report.label(), check);
    }
    Ok(report)
}
