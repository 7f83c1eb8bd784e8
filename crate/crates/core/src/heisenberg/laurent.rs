//! Laurent polynomials in `q` with rational exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQ {
    terms: BTreeMap<Rational64, i64>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational64::zero(), 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Rational64::zero(), c)
    }

    /// `c · q^exp`.
    pub fn monomial(exp: Rational64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational64::from_integer(k), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Rational64::zero()) == Some(&1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational64, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: Rational64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Whether every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer())
    }

    pub fn check_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::Internal(format!("non-integral q-exponent in {self}")))
        }
    }

    pub fn add_term(&mut self, exp: Rational64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: Rational64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, *c)).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (e, c) in &self.terms {
            m.insert(e.to_string(), Value::from(*c));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("coefficient must be an object".into()))?;
        let mut out = Self::zero();
        for (k, c) in obj {
            let e: Rational64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent `{k}`")))?;
            let c = c.as_i64().ok_or_else(|| Error::Parse(format!("bad coefficient for `{k}`")))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, *c);
        }
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -*c);
        }
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        self.scale(-1)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}")?;
            }
            if e.is_one() {
                f.write_str("q")?;
            } else if e.is_integer() && !e.is_negative() {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "q^({e})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = &LaurentQ::one() - &LaurentQ::q_pow(1);
        let b = &LaurentQ::one() + &LaurentQ::q_pow(1);
        assert_eq!(&a * &b, &LaurentQ::one() - &LaurentQ::q_pow(2));
        assert!((&a - &a).is_zero());
        assert_eq!(a.at_one(), 0);
        assert_eq!(LaurentQ::q_pow(1).shift(Rational64::new(-1, 2)), LaurentQ::monomial(Rational64::new(1, 2), 1));
        assert!(!LaurentQ::monomial(Rational64::new(1, 2), 1).is_integral());
    }

    #[test]
    fn display_and_json() {
        let p = &(&LaurentQ::q_pow(2).scale(3) - &LaurentQ::one()) + &LaurentQ::q_pow(-1);
        assert_eq!(p.to_string(), "3q^2 - 1 + q^(-1)");
        assert_eq!(LaurentQ::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(LaurentQ::zero().to_string(), "0");
        assert_eq!((-&LaurentQ::q_pow(1)).to_string(), "-q");
    }
}
