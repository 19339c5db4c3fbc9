//! Sturm chains and distinct-real-root counting.
//!
//! The chain is `f, f', -rem(f, f'), ...` down to the last nonzero remainder.
//! For `a < b` with `f(a) != 0` and `f(b) != 0`, the number of distinct real
//! roots in `(a, b)` is `V(a) - V(b)`, where `V` counts sign variations of the
//! chain evaluated at a point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{fmt_rat, Rat, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infinity {
    Negative,
    Positive,
}

/// Signs of the chain elements at a point or at an infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSeq(pub Vec<Sign>);

impl SignSeq {
    /// Number of strict sign changes after dropping zeros.
    pub fn variations(&self) -> usize {
        sign_variations(&self.0)
    }
}

pub fn sign_variations(signs: &[Sign]) -> usize {
    let nonzero: Vec<_> = signs.iter().filter(|s| **s != Sign::Zero).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    elements: Vec<Poly>,
}

impl SturmChain {
    /// Builds the chain by negated-remainder division. Elements are stored
    /// unnormalized.
    pub fn new(f: &Poly) -> Result<SturmChain> {
        match f.degree() {
            Some(d) if d >= 1 => {}
            _ => {
                return Err(Error::DegreeTooSmall {
                    degree: f.signed_degree(),
                    min: 1,
                })
            }
        }
        let mut elements = vec![f.clone(), f.derivative()];
        loop {
            let n = elements.len();
            let rem = elements[n - 2].rem(&elements[n - 1])?;
            if rem.is_zero() {
                break;
            }
            elements.push(-&rem);
        }
        Ok(SturmChain { elements })
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Last element, a scalar multiple of `gcd(f, f')`.
    pub fn last(&self) -> &Poly {
        self.elements.last().expect("chain has at least two elements")
    }

    /// Element of the given degree, if the chain contains one.
    pub fn element_of_degree(&self, degree: usize) -> Option<&Poly> {
        self.elements.iter().find(|e| e.degree() == Some(degree))
    }

    pub fn signs_at(&self, x: &Rat) -> SignSeq {
        SignSeq(self.elements.iter().map(|e| Sign::of(&e.eval(x))).collect())
    }

    pub fn signs_at_infinity(&self, direction: Infinity) -> SignSeq {
        SignSeq(
            self.elements
                .iter()
                .map(|e| {
                    let lead = Sign::of(e.leading_coeff().expect("chain elements are nonzero"));
                    let odd = e.degree().unwrap_or(0) % 2 == 1;
                    match direction {
                        Infinity::Negative if odd => lead.flip(),
                        _ => lead,
                    }
                })
                .collect(),
        )
    }

    /// Display form with every element scaled by a positive rational to
    /// coprime integer coefficients. Counting never uses this.
    pub fn normalized(&self) -> Vec<Poly> {
        self.elements.iter().map(Poly::primitive_part).collect()
    }

    /// `V(a) - V(b)`; caller guarantees `a < b` and neither is a root.
    fn count_between(&self, a: &Rat, b: &Rat) -> usize {
        self.signs_at(a).variations() - self.signs_at(b).variations()
    }
}

pub fn sturm_chain(f: &Poly) -> Result<SturmChain> {
    SturmChain::new(f)
}

/// Distinct real roots of `f` in the open interval `(a, b)`.
pub fn count_real_roots_interval(f: &Poly, a: &Rat, b: &Rat) -> Result<usize> {
    if a >= b {
        return Err(Error::BadInterval(fmt_rat(a), fmt_rat(b)));
    }
    for end in [a, b] {
        if f.eval(end).is_zero() {
            return Err(Error::EndpointIsRoot(fmt_rat(end)));
        }
    }
    Ok(SturmChain::new(f)?.count_between(a, b))
}

pub fn count_distinct_real_roots(f: &Poly) -> Result<usize> {
    let chain = SturmChain::new(f)?;
    Ok(chain.signs_at_infinity(Infinity::Negative).variations()
        - chain.signs_at_infinity(Infinity::Positive).variations())
}

/// Distinct real roots in `(0, +inf)`.
pub fn count_positive_real_roots(f: &Poly) -> Result<usize> {
    if f.eval(&Rat::zero()).is_zero() {
        return Err(Error::ZeroIsRoot);
    }
    let chain = SturmChain::new(f)?;
    Ok(chain.signs_at(&Rat::zero()).variations()
        - chain.signs_at_infinity(Infinity::Positive).variations())
}

/// Degree of `gcd(f, f')`, read off the last chain element.
pub fn gcd_degree(f: &Poly) -> Result<usize> {
    Ok(SturmChain::new(f)?.last().degree().unwrap_or(0))
}
