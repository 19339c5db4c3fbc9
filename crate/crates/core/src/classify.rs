//! Degree dispatch over the cubic and quartic classifiers.

use crate::cubic::{classify_cubic, CubicCoeffs, CubicReport};
use crate::error::{Error, Result};
use crate::label::ConfigLabel;
use crate::poly::Poly;
use crate::quartic::{classify_quartic, QuarticCoeffs, QuarticReport};

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Report {
    Cubic(CubicReport),
    Quartic(QuarticReport),
}

impl Report {
    pub fn label(&self) -> ConfigLabel {
        match self {
            Report::Cubic(r) => ConfigLabel::Cubic(r.config),
            Report::Quartic(r) => ConfigLabel::Quartic(r.config),
        }
    }

    pub fn complex_label(&self) -> &'static str {
        self.label().complex_str()
    }
}

/// Classifies a cubic or quartic with any nonzero leading coefficient.
pub fn classify_poly(f: &Poly) -> Result<Report> {
    match f.degree() {
        Some(3) => Ok(Report::Cubic(classify_cubic(&CubicCoeffs::from_poly(f)?))),
        Some(4) => Ok(Report::Quartic(classify_quartic(&QuarticCoeffs::from_poly(f)?))),
        _ => Err(Error::UnsupportedDegree(f.signed_degree())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatches_on_degree() {
        let r = classify_poly(&Poly::from_ints(&[-12, 22, -12, 2])).unwrap();
        assert_eq!(r.label().as_str(), "cubic/three_distinct_real");
        let r = classify_poly(&Poly::from_ints(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.label().as_str(), "quartic/four_complex");
        assert_eq!(r.complex_label(), "four_distinct");
        assert_eq!(
            classify_poly(&Poly::from_ints(&[1, 0, 1])),
            Err(Error::UnsupportedDegree(2))
        );
    }
}
