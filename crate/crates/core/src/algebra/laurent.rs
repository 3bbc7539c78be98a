//! Laurent monomials and polynomials in the contraction parameter ε.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// `coeff · ε^exp`. The zero monomial is stored with exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentMonomial {
    pub coeff: Rational,
    #[serde(rename = "exp")]
    pub exponent: i32,
}

impl LaurentMonomial {
    pub fn new(coeff: Rational, exponent: i32) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            LaurentMonomial { coeff, exponent }
        }
    }

    pub fn zero() -> Self {
        LaurentMonomial {
            coeff: Rational::zero(),
            exponent: 0,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `ε^k`.
    pub fn eps(k: i32) -> Self {
        Self::new(Rational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(LaurentMonomial::new(self.coeff.recip(), -self.exponent))
        }
    }

    pub fn eval(&self, eps: f64) -> f64 {
        self.coeff.to_f64() * eps.powi(self.exponent)
    }
}

impl fmt::Debug for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}e", self.coeff),
            k => write!(f, "{}e^{}", self.coeff, k),
        }
    }
}

impl Mul<&LaurentMonomial> for &LaurentMonomial {
    type Output = LaurentMonomial;
    fn mul(self, rhs: &LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial::new(&self.coeff * &rhs.coeff, self.exponent + rhs.exponent)
    }
}

/// Finite sum of monomials, keyed by exponent. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(LaurentMonomial::constant(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, exponent: i32, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Coefficient of `ε^k`.
    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn has_negative_powers(&self) -> bool {
        self.min_exponent().is_some_and(|k| k < 0)
    }

    /// The ε → 0⁺ limit, when it exists.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        if self.has_negative_powers() {
            None
        } else {
            Some(self.coeff(0))
        }
    }

    /// Returns the monomial if the polynomial has at most one term.
    pub fn as_monomial(&self) -> Option<LaurentMonomial> {
        match self.terms.len() {
            0 => Some(LaurentMonomial::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                Some(LaurentMonomial::new(c.clone(), *k))
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn mul_monomial(&self, m: &LaurentMonomial) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(k, v)| (k + m.exponent, v * &m.coeff)),
        )
    }

    pub fn eval(&self, eps: f64) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64() * eps.powi(*k))
            .sum()
    }
}

// A single-term entry serializes as one monomial object, longer ones as an array.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolyRepr {
    One(LaurentMonomial),
    Many(Vec<LaurentMonomial>),
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self.as_monomial() {
            Some(m) => PolyRepr::One(m),
            None => PolyRepr::Many(
                self.terms
                    .iter()
                    .map(|(k, c)| LaurentMonomial::new(c.clone(), *k))
                    .collect(),
            ),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ms = match PolyRepr::deserialize(d)? {
            PolyRepr::One(m) => vec![m],
            PolyRepr::Many(v) => v,
        };
        Ok(LaurentPoly::from_terms(ms.into_iter().map(|m| (m.exponent, m.coeff))))
    }
}

impl From<LaurentMonomial> for LaurentPoly {
    fn from(m: LaurentMonomial) -> Self {
        Self::from_terms([(m.exponent, m.coeff)])
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| LaurentMonomial::new(c.clone(), *k).to_string())
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rational::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly::from_terms([(1, r(1)), (-1, r(2))]);
        let b = LaurentPoly::from_terms([(-1, r(2))]);
        let d = &a - &b;
        assert_eq!(d, LaurentPoly::from(LaurentMonomial::eps(1)));
        assert!(!d.has_negative_powers());
        assert_eq!(d.limit_at_zero(), Some(r(0)));
    }

    #[test]
    fn product_and_limit() {
        // (1 - e)(e^-1) = e^-1 - 1, divergent
        let p = LaurentPoly::from_terms([(0, r(1)), (1, r(-1))]);
        let q = LaurentPoly::from(LaurentMonomial::eps(-1));
        let pq = &p * &q;
        assert!(pq.has_negative_powers());
        assert_eq!(pq.limit_at_zero(), None);
        assert_eq!(pq.coeff(0), r(-1));
    }

    #[test]
    fn zero_monomial_is_canonical() {
        let z = LaurentMonomial::new(Rational::zero(), 5);
        assert_eq!(z, LaurentMonomial::zero());
        assert_eq!(z.exponent, 0);
    }

    #[test]
    fn serde_forms() {
        let m = LaurentPoly::from(LaurentMonomial::new(Rational::new(-1, 2), 1));
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"coeff":"-1/2","exp":1}"#);
        let p = LaurentPoly::from_terms([(0, r(1)), (1, r(-1))]);
        let js = serde_json::to_string(&p).unwrap();
        assert!(js.starts_with('['));
        assert_eq!(serde_json::from_str::<LaurentPoly>(&js).unwrap(), p);
    }

    #[test]
    fn evaluation_matches_terms() {
        let p = LaurentPoly::from_terms([(0, r(1)), (2, r(3))]);
        assert!((p.eval(0.5) - 1.75).abs() < 1e-15);
    }
}
