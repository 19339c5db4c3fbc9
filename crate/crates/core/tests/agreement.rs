use proptest::prelude::*;
use rootconf::label::{ConfigLabel, QuarticConfig};
use rootconf::rat::ratio;
use rootconf::sample::{matches_expected, sample_labeled_instances};
use rootconf::sturm::count_distinct_real_roots;
use rootconf::{classify_poly, classify_quartic, oracle_classify, Poly, QuarticCoeffs};

#[test]
fn constructed_labels_round_trip_through_every_path() {
    for label in ConfigLabel::all() {
        for inst in sample_labeled_instances(label, 30, 2026) {
            let report = classify_poly(&inst.poly).unwrap();
            assert_eq!(report.label(), label, "{}", inst.poly);
            assert_eq!(report.complex_label(), label.complex_str());
            let rs = oracle_classify(&inst.poly).unwrap();
            assert!(matches_expected(&rs, &inst.expected), "{}: {rs}", inst.poly);
            assert_eq!(count_distinct_real_roots(&inst.poly).unwrap(), label.distinct_real_roots());
        }
    }
}

#[test]
fn non_cubic_quartic_degrees_are_rejected() {
    assert!(classify_poly(&Poly::from_ints(&[1, 0, 1])).is_err());
    assert!(classify_poly(&Poly::from_ints(&[1, 0, 0, 0, 0, 1])).is_err());
}

fn small() -> impl Strategy<Value = rootconf::Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn scaling_roots_preserves_quartic_label(
        p in small(), q in small(), r in small(), s in small(), k in 1i64..=5,
    ) {
        // f(x/k) k^4 has roots scaled by k > 0: same configuration
        let c = QuarticCoeffs::new(p, q, r, s);
        let kk = ratio(k, 1);
        let scaled = QuarticCoeffs::new(
            &c.p * &kk,
            &c.q * &kk * &kk,
            &c.r * &kk * &kk * &kk,
            &c.s * &kk * &kk * &kk * &kk,
        );
        prop_assert_eq!(classify_quartic(&c).config, classify_quartic(&scaled).config);
    }

    #[test]
    fn reversed_quartic_mirrors_order(p in small(), q in small(), r in small(), s in small()) {
        let c = QuarticCoeffs::new(p, q, r, s);
        let a = classify_quartic(&c).config;
        let b = classify_quartic(&c.mirrored()).config;
        prop_assert_eq!(b, a.mirrored());
        if matches!(a, QuarticConfig::FourDistinctReal) {
            prop_assert_eq!(b, a);
        }
    }
}
