//! Elements of Q(p1, ..., pk) in a canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{gcd, Polynomial};
use crate::Error;

/// A rational function `num / den`. The denominator is monic under graded-lex
/// order and coprime to the numerator, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The parameter at position `index`.
    pub fn param(index: usize) -> Self {
        Scalar {
            num: Polynomial::var(index),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// Bring `num / den` to canonical form.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let Some(c) = den.as_constant() {
            return Ok(Scalar {
                num: num.scale(&c.recip()),
                den: Polynomial::one(),
            });
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coefficient().expect("nonzero").recip();
        Ok(Scalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        Scalar::normalize(num, den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The value if this scalar does not depend on any parameter.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Scalar {
        Scalar {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Substitute values for some parameters. Fails if the denominator vanishes.
    pub fn substitute(&self, values: &[Option<BigRational>]) -> Result<Scalar, Error> {
        let den = self.den.substitute(values);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(self.den.render(&[])));
        }
        Scalar::normalize(self.num.substitute(values), den)
    }

    /// Evaluate at a full numeric assignment. `None` if the denominator vanishes.
    pub fn evaluate(&self, values: &[BigRational]) -> Option<BigRational> {
        let vals: Vec<_> = values.iter().cloned().map(Some).collect();
        let d = self.den.substitute(&vals).as_constant()?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.substitute(&vals).as_constant()? / d)
    }

    /// Text in the scalar grammar, using the given parameter names.
    pub fn render(&self, params: &[String]) -> String {
        if self.den.is_one() {
            return self.num.render(params);
        }
        // Clear fractional numerator coefficients into the denominator: 1/(2*a5), not 1/2/a5.
        let l = self
            .num
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
        let l = BigRational::from_integer(l);
        let (numer, denom) = (self.num.scale(&l), self.den.scale(&l));
        let num = numer.render(params);
        let num = if numer.num_terms() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = denom.render(params);
        let simple_den = denom.num_terms() == 1
            && denom
                .leading()
                .is_some_and(|(m, c)| m.degree() == 1 && c.is_one());
        if simple_den {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }

    /// True if the numerator is one term with a negative coefficient.
    pub fn is_negative_term(&self) -> bool {
        self.num.num_terms() == 1 && self.num.leading_coefficient().is_some_and(|c| c.is_negative())
    }

    /// True if the numerator has at most one term.
    pub fn is_single_term(&self) -> bool {
        self.num.num_terms() <= 1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_polynomial(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Scalar::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        Scalar::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_polynomial(self.num.mul(&rhs.num));
        }
        Scalar::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] to get an error instead.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a5", "b"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn gcd_cancellation() {
        let a5 = Polynomial::var(0);
        let two = BigRational::from_integer(BigInt::from(2));
        let four = BigRational::from_integer(BigInt::from(4));
        let s = Scalar::normalize(a5.scale(&two), a5.mul(&a5).scale(&four)).unwrap();
        assert_eq!(s, Scalar::ratio(1, 2) * Scalar::param(0).inv().unwrap());
        assert_eq!(s.render(&names()), "1/(2*a5)");
    }

    #[test]
    fn cancellation_of_parameter() {
        let a5 = Scalar::param(0);
        let b = Scalar::param(1);
        let s = (-&b) / a5.clone();
        assert_eq!(s.render(&names()), "-b/a5");
        assert_eq!(&s * &a5, -b);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            Scalar::normalize(Polynomial::one(), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        ));
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn halves_sum_to_one() {
        assert!((Scalar::ratio(1, 2) + Scalar::ratio(1, 2)).is_one());
    }
}
