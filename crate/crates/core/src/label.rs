//! Root-configuration enumerations and their stable string labels.
//!
//! Labels are `degree/configuration[/order]` paths in snake_case, e.g.
//! `cubic/double_single/single_above` or `quartic/triple_single/triple_below`.
//! Every label printed by the CLI parses back with [`ConfigLabel::from_str`].

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Position of the single root relative to the double root of a cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DoubleOrder {
    SingleAboveDouble,
    SingleBelowDouble,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicConfig {
    ThreeDistinctReal,
    OneRealTwoComplex,
    DoubleAndSingle(DoubleOrder),
    TripleRoot,
}

/// Order of a quartic's real double root and its two real single roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DoubleSinglesOrder {
    SingleDoubleSingle,
    DoubleBelowBoth,
    DoubleAboveBoth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleOrder {
    TripleBelow,
    TripleAbove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuarticConfig {
    FourDistinctReal,
    TwoRealTwoComplex,
    FourComplex,
    DoubleWithTwoRealSingles(DoubleSinglesOrder),
    DoubleWithComplexPair,
    TwoRealDoubles,
    TwoComplexDoubles,
    TripleAndSingle(TripleOrder),
    QuadrupleRoot,
}

/// Multiplicity structure over the complex numbers (order forgotten).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicComplexConfig {
    ThreeDistinct,
    DoubleAndSingle,
    Triple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuarticComplexConfig {
    FourDistinct,
    DoubleTwoSingles,
    TwoDoubles,
    TripleSingle,
    Quadruple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigLabel {
    Cubic(CubicConfig),
    Quartic(QuarticConfig),
}

impl CubicConfig {
    pub const ALL: [CubicConfig; 5] = [
        CubicConfig::ThreeDistinctReal,
        CubicConfig::OneRealTwoComplex,
        CubicConfig::DoubleAndSingle(DoubleOrder::SingleAboveDouble),
        CubicConfig::DoubleAndSingle(DoubleOrder::SingleBelowDouble),
        CubicConfig::TripleRoot,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CubicConfig::ThreeDistinctReal => "cubic/three_distinct_real",
            CubicConfig::OneRealTwoComplex => "cubic/one_real_two_complex",
            CubicConfig::DoubleAndSingle(DoubleOrder::SingleAboveDouble) => {
                "cubic/double_single/single_above"
            }
            CubicConfig::DoubleAndSingle(DoubleOrder::SingleBelowDouble) => {
                "cubic/double_single/single_below"
            }
            CubicConfig::TripleRoot => "cubic/triple",
        }
    }

    /// Row of the real-configuration table: `1`, `2`, `3a`, `3b`, `4`.
    pub fn case(self) -> &'static str {
        match self {
            CubicConfig::ThreeDistinctReal => "1",
            CubicConfig::OneRealTwoComplex => "2",
            CubicConfig::DoubleAndSingle(DoubleOrder::SingleAboveDouble) => "3a",
            CubicConfig::DoubleAndSingle(DoubleOrder::SingleBelowDouble) => "3b",
            CubicConfig::TripleRoot => "4",
        }
    }

    pub fn distinct_real_roots(self) -> usize {
        match self {
            CubicConfig::ThreeDistinctReal => 3,
            CubicConfig::OneRealTwoComplex => 1,
            CubicConfig::DoubleAndSingle(_) => 2,
            CubicConfig::TripleRoot => 1,
        }
    }

    pub fn complex(self) -> CubicComplexConfig {
        match self {
            CubicConfig::ThreeDistinctReal | CubicConfig::OneRealTwoComplex => {
                CubicComplexConfig::ThreeDistinct
            }
            CubicConfig::DoubleAndSingle(_) => CubicComplexConfig::DoubleAndSingle,
            CubicConfig::TripleRoot => CubicComplexConfig::Triple,
        }
    }
}

impl QuarticConfig {
    pub const ALL: [QuarticConfig; 12] = [
        QuarticConfig::FourDistinctReal,
        QuarticConfig::TwoRealTwoComplex,
        QuarticConfig::FourComplex,
        QuarticConfig::DoubleWithTwoRealSingles(DoubleSinglesOrder::SingleDoubleSingle),
        QuarticConfig::DoubleWithTwoRealSingles(DoubleSinglesOrder::DoubleBelowBoth),
        QuarticConfig::DoubleWithTwoRealSingles(DoubleSinglesOrder::DoubleAboveBoth),
        QuarticConfig::DoubleWithComplexPair,
        QuarticConfig::TwoRealDoubles,
        QuarticConfig::TwoComplexDoubles,
        QuarticConfig::TripleAndSingle(TripleOrder::TripleBelow),
        QuarticConfig::TripleAndSingle(TripleOrder::TripleAbove),
        QuarticConfig::QuadrupleRoot,
    ];

    pub fn as_str(self) -> &'static str {
        use DoubleSinglesOrder::*;
        use TripleOrder::*;
        match self {
            QuarticConfig::FourDistinctReal => "quartic/four_distinct_real",
            QuarticConfig::TwoRealTwoComplex => "quartic/two_real_two_complex",
            QuarticConfig::FourComplex => "quartic/four_complex",
            QuarticConfig::DoubleWithTwoRealSingles(SingleDoubleSingle) => {
                "quartic/double_two_singles/single_double_single"
            }
            QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth) => {
                "quartic/double_two_singles/double_below_both"
            }
            QuarticConfig::DoubleWithTwoRealSingles(DoubleAboveBoth) => {
                "quartic/double_two_singles/double_above_both"
            }
            QuarticConfig::DoubleWithComplexPair => "quartic/double_complex_pair",
            QuarticConfig::TwoRealDoubles => "quartic/two_real_doubles",
            QuarticConfig::TwoComplexDoubles => "quartic/two_complex_doubles",
            QuarticConfig::TripleAndSingle(TripleBelow) => "quartic/triple_single/triple_below",
            QuarticConfig::TripleAndSingle(TripleAbove) => "quartic/triple_single/triple_above",
            QuarticConfig::QuadrupleRoot => "quartic/quadruple",
        }
    }

    /// Row of the real-configuration table: `1` .. `9` with `4a`-`4c`, `8a`, `8b`.
    pub fn case(self) -> &'static str {
        use DoubleSinglesOrder::*;
        use TripleOrder::*;
        match self {
            QuarticConfig::FourDistinctReal => "1",
            QuarticConfig::TwoRealTwoComplex => "2",
            QuarticConfig::FourComplex => "3",
            QuarticConfig::DoubleWithTwoRealSingles(SingleDoubleSingle) => "4a",
            QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth) => "4b",
            QuarticConfig::DoubleWithTwoRealSingles(DoubleAboveBoth) => "4c",
            QuarticConfig::DoubleWithComplexPair => "5",
            QuarticConfig::TwoRealDoubles => "6",
            QuarticConfig::TwoComplexDoubles => "7",
            QuarticConfig::TripleAndSingle(TripleBelow) => "8a",
            QuarticConfig::TripleAndSingle(TripleAbove) => "8b",
            QuarticConfig::QuadrupleRoot => "9",
        }
    }

    pub fn distinct_real_roots(self) -> usize {
        match self {
            QuarticConfig::FourDistinctReal => 4,
            QuarticConfig::TwoRealTwoComplex => 2,
            QuarticConfig::FourComplex => 0,
            QuarticConfig::DoubleWithTwoRealSingles(_) => 3,
            QuarticConfig::DoubleWithComplexPair => 1,
            QuarticConfig::TwoRealDoubles => 2,
            QuarticConfig::TwoComplexDoubles => 0,
            QuarticConfig::TripleAndSingle(_) => 2,
            QuarticConfig::QuadrupleRoot => 1,
        }
    }

    pub fn complex(self) -> QuarticComplexConfig {
        match self {
            QuarticConfig::FourDistinctReal
            | QuarticConfig::TwoRealTwoComplex
            | QuarticConfig::FourComplex => QuarticComplexConfig::FourDistinct,
            QuarticConfig::DoubleWithTwoRealSingles(_) | QuarticConfig::DoubleWithComplexPair => {
                QuarticComplexConfig::DoubleTwoSingles
            }
            QuarticConfig::TwoRealDoubles | QuarticConfig::TwoComplexDoubles => {
                QuarticComplexConfig::TwoDoubles
            }
            QuarticConfig::TripleAndSingle(_) => QuarticComplexConfig::TripleSingle,
            QuarticConfig::QuadrupleRoot => QuarticComplexConfig::Quadruple,
        }
    }

    /// The configuration of `f(-x)`.
    pub fn mirrored(self) -> QuarticConfig {
        use DoubleSinglesOrder::*;
        use TripleOrder::*;
        match self {
            QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth) => {
                QuarticConfig::DoubleWithTwoRealSingles(DoubleAboveBoth)
            }
            QuarticConfig::DoubleWithTwoRealSingles(DoubleAboveBoth) => {
                QuarticConfig::DoubleWithTwoRealSingles(DoubleBelowBoth)
            }
            QuarticConfig::TripleAndSingle(TripleBelow) => {
                QuarticConfig::TripleAndSingle(TripleAbove)
            }
            QuarticConfig::TripleAndSingle(TripleAbove) => {
                QuarticConfig::TripleAndSingle(TripleBelow)
            }
            other => other,
        }
    }
}

impl CubicComplexConfig {
    pub fn as_str(self) -> &'static str {
        match self {
            CubicComplexConfig::ThreeDistinct => "three_distinct",
            CubicComplexConfig::DoubleAndSingle => "double_single",
            CubicComplexConfig::Triple => "triple",
        }
    }
}

impl QuarticComplexConfig {
    pub fn as_str(self) -> &'static str {
        match self {
            QuarticComplexConfig::FourDistinct => "four_distinct",
            QuarticComplexConfig::DoubleTwoSingles => "double_two_singles",
            QuarticComplexConfig::TwoDoubles => "two_doubles",
            QuarticComplexConfig::TripleSingle => "triple_single",
            QuarticComplexConfig::Quadruple => "quadruple",
        }
    }
}

impl ConfigLabel {
    /// Every label, cubic first, in table order.
    pub fn all() -> impl Iterator<Item = ConfigLabel> {
        CubicConfig::ALL
            .into_iter()
            .map(ConfigLabel::Cubic)
            .chain(QuarticConfig::ALL.into_iter().map(ConfigLabel::Quartic))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConfigLabel::Cubic(c) => c.as_str(),
            ConfigLabel::Quartic(c) => c.as_str(),
        }
    }

    pub fn case(self) -> &'static str {
        match self {
            ConfigLabel::Cubic(c) => c.case(),
            ConfigLabel::Quartic(c) => c.case(),
        }
    }

    pub fn degree(self) -> usize {
        match self {
            ConfigLabel::Cubic(_) => 3,
            ConfigLabel::Quartic(_) => 4,
        }
    }

    pub fn distinct_real_roots(self) -> usize {
        match self {
            ConfigLabel::Cubic(c) => c.distinct_real_roots(),
            ConfigLabel::Quartic(c) => c.distinct_real_roots(),
        }
    }

    pub fn complex_str(self) -> &'static str {
        match self {
            ConfigLabel::Cubic(c) => c.complex().as_str(),
            ConfigLabel::Quartic(c) => c.complex().as_str(),
        }
    }
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for CubicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for QuarticConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConfigLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConfigLabel::all()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labels_round_trip_and_are_unique() {
        let all: Vec<_> = ConfigLabel::all().collect();
        assert_eq!(all.len(), 17);
        let strs: HashSet<_> = all.iter().map(|l| l.as_str()).collect();
        assert_eq!(strs.len(), all.len());
        for l in all {
            assert_eq!(l.as_str().parse::<ConfigLabel>().unwrap(), l);
        }
        assert!("cubic/bogus".parse::<ConfigLabel>().is_err());
    }

    #[test]
    fn mirror_is_involution() {
        for c in QuarticConfig::ALL {
            assert_eq!(c.mirrored().mirrored(), c);
            assert_eq!(c.mirrored().complex(), c.complex());
        }
    }
}
