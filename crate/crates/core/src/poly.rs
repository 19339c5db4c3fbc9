//! Dense univariate polynomials over `Rat`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{int, Rat};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// The polynomial `x - a`.
    pub fn linear_root(a: &Rat) -> Poly {
        Poly::new(vec![-a.clone(), Rat::one()])
    }

    /// Monic polynomial whose roots are exactly `roots` with the given
    /// multiplicities.
    pub fn from_roots(roots: &[(Rat, u32)]) -> Poly {
        roots.iter().fold(Poly::constant(Rat::one()), |acc, (root, mult)| {
            &acc * &Poly::linear_root(root).pow(*mult)
        })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the `-1` convention for the zero polynomial.
    pub fn signed_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monicize(&self) -> Result<Poly> {
        let lead = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.recip()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        let g_deg = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let g_lead = &g.coeffs[g_deg];
        let mut rem = self.coeffs.clone();
        let Some(f_deg) = self.degree().filter(|&d| d >= g_deg) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut quot = vec![Rat::zero(); f_deg - g_deg + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + g_deg] / g_lead;
            if !c.is_zero() {
                for (j, gc) in g.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * gc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(g_deg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        self.div_rem(g).map(|(_, r)| r)
    }

    /// Exact quotient; errors if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InternalInconsistency(format!("{g} does not divide {self}")))
        }
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monicize().unwrap_or_default()
    }

    /// Returns `g` with `g(y) = self(y + c)`.
    pub fn translate(&self, c: &Rat) -> Poly {
        let shift = Poly::new(vec![c.clone(), Rat::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| &(&acc * &shift) + &Poly::constant(a.clone()))
    }

    /// Returns `g` with `g(x) = self(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::constant(Rat::one()), |acc, _| &acc * self)
    }

    /// Scales by a positive rational so that all coefficients are coprime
    /// integers. Signs are preserved.
    pub fn primitive_part(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<_> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
        Poly::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn monicize_examples() {
        assert_eq!(p(&[-12, 22, -12, 2]).monicize().unwrap(), p(&[-6, 11, -6, 1]));
        assert_eq!(p(&[0, 1, 0, 1]).monicize().unwrap(), p(&[0, 1, 0, 1]));
        assert_eq!(p(&[-3, 0, 0, 0, 3]).monicize().unwrap(), p(&[-1, 0, 0, 0, 1]));
        assert_eq!(Poly::zero().monicize(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[7, 5, 3, 1]).derivative(), p(&[5, 6, 3]));
        assert_eq!(p(&[1, 2, 3, 4, 1]).derivative(), p(&[2, 6, 12, 4]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
        assert_eq!(Poly::zero().derivative(), Poly::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-6, 11, -6, 1]).eval(&int(1)), int(0));
        assert_eq!(p(&[1, 0, 1]).eval(&int(0)), int(1));
        assert_eq!(p(&[0, 0, -1, 1]).eval(&int(2)), int(4));
        assert_eq!(Poly::zero().eval(&int(3)), int(0));
    }

    #[test]
    fn div_rem_examples() {
        let (q, r) = p(&[0, 0, 0, 1]).div_rem(&p(&[0, 0, 3])).unwrap();
        assert_eq!(q, Poly::new(vec![int(0), ratio(1, 3)]));
        assert!(r.is_zero());

        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), Poly::zero()));

        let (_, r) = p(&[-6, 11, -6, 1]).div_rem(&p(&[11, -12, 3])).unwrap();
        assert_eq!(r, Poly::new(vec![ratio(4, 3), ratio(-2, 3)]));

        assert_eq!(p(&[1, 1]).div_rem(&Poly::zero()), Err(Error::DivisionByZeroPoly));
        let (q, r) = p(&[1, 1]).div_rem(&p(&[1, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[1, 1]));
    }

    #[test]
    fn translate_examples() {
        let f = p(&[0, 0, -1, 1]);
        assert_eq!(f.translate(&int(0)), f);
        let g = f.translate(&int(0));
        assert!(g.coeff(0).is_zero() && g.coeff(1).is_zero());

        let f = p(&[6, -17, 17, -7, 1]);
        assert_eq!(f, Poly::from_roots(&[(int(1), 2), (int(2), 1), (int(3), 1)]));
        let g = f.translate(&int(1));
        assert!(g.coeff(0).is_zero() && g.coeff(1).is_zero());
        assert_eq!(g, Poly::from_roots(&[(int(0), 2), (int(1), 1), (int(2), 1)]));
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(
            Poly::from_roots(&[(int(1), 1), (int(2), 1), (int(3), 1)]),
            p(&[-6, 11, -6, 1])
        );
        assert_eq!(Poly::from_roots(&[(int(0), 3)]), p(&[0, 0, 0, 1]));
        assert_eq!(
            Poly::from_roots(&[(int(1), 2), (int(2), 1), (int(3), 1)]),
            p(&[6, -17, 17, -7, 1])
        );
        assert_eq!(Poly::from_roots(&[]), p(&[1]));
    }

    #[test]
    fn zero_polynomial_conventions() {
        let z = Poly::zero();
        assert_eq!(z.degree(), None);
        assert_eq!(z.signed_degree(), -1);
        assert_eq!(z.leading_coeff(), None);
        assert_eq!(Poly::from_ints(&[0, 0, 0]), z);
        assert_eq!(z.translate(&int(5)), z);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-6, 11, -6, 1]).to_string(), "x^3 - 6x^2 + 11x - 6");
        assert_eq!(Poly::new(vec![ratio(-1, 2), ratio(2, 9)]).to_string(), "(2/9)x - 1/2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn gcd_and_primitive_part() {
        let f = Poly::from_roots(&[(int(1), 2), (int(2), 1)]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(Poly::new(vec![ratio(-1, 2), ratio(2, 9)]).primitive_part(), p(&[-9, 4]));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-30i64..=30, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(f in small_poly(7), g in small_poly(5)) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.div_rem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.signed_degree() < g.signed_degree());
        }

        #[test]
        fn translate_round_trip_and_eval(f in small_poly(6), c in small_rat(), y in small_rat()) {
            let g = f.translate(&c);
            prop_assert_eq!(g.translate(&-c.clone()), f.clone());
            prop_assert_eq!(g.eval(&y), f.eval(&(&y + &c)));
        }

        #[test]
        fn from_roots_vanishes_at_roots(
            roots in prop::collection::vec((small_rat(), 1u32..=3), 1..=3)
        ) {
            let f = Poly::from_roots(&roots);
            let df = f.derivative();
            prop_assert!(f.is_monic());
            for (r, m) in &roots {
                prop_assert!(f.eval(r).is_zero());
                if *m >= 2 {
                    prop_assert!(df.eval(r).is_zero());
                }
            }
        }

        #[test]
        fn monicize_is_scale_invariant(f in small_poly(5), s in small_rat()) {
            prop_assume!(!f.is_zero() && !s.is_zero());
            prop_assert_eq!(f.scale(&s).monicize().unwrap(), f.monicize().unwrap());
        }
    }
}
