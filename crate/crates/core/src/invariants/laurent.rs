//! Dense Laurent polynomials in one variable over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::scalar::Ring;

/// `Σ c_k x^k` for `k` in `low .. low + coeffs.len()`.
///
/// Always trimmed: the first and last stored coefficients are nonzero, and
/// the zero polynomial has no coefficients and `low == 0`. Equality is
/// therefore literal equality of coefficient maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Build from `(exponent, coefficient)` terms; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = slot.clone() + c;
        }
        Self::from_coeffs(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> C {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `x ↦ x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution x -> x^0 is not invertible");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Evaluate at a unit `x` of another ring; `x_inv` must be its inverse
    /// when negative exponents occur.
    pub fn eval_with<R: Ring>(&self, x: &R, x_inv: Option<&R>, lift: impl Fn(&C) -> R) -> R {
        let mut acc = R::zero();
        for (e, c) in self.terms() {
            let base = if e < 0 {
                x_inv.expect("negative exponent needs an inverse").clone()
            } else {
                x.clone()
            };
            let mut m = R::one();
            for _ in 0..e.unsigned_abs() {
                m = m * base.clone();
            }
            acc = acc + lift(c) * m;
        }
        acc
    }

    /// Quotient and remainder by a divisor whose highest coefficient is one;
    /// the remainder has degree below the divisor's.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d_high = divisor.high_degree().expect("division by zero polynomial");
        assert!(divisor.coeff(d_high).is_one(), "divisor must have leading coefficient one");
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while let Some(h) = rem.high_degree() {
            if h < d_high {
                break;
            }
            let c = rem.coeff(h);
            let e = h - d_high;
            rem = &rem - &divisor.shift(e).scale(&c);
            quot_terms.push((e, c));
        }
        (Self::from_terms(quot_terms), rem)
    }
}

impl<C: Ring + PartialOrd> LaurentPoly<C> {
    /// Multiply by `±x^k` so the lowest term has exponent zero and a
    /// positive coefficient.
    pub fn normalized(&self) -> Self {
        let Some(low) = self.low_degree() else {
            return self.clone();
        };
        let shifted = self.shift(-low);
        if shifted.coeff(0) < C::zero() {
            -&shifted
        } else {
            shifted
        }
    }
}

impl<C: Ring> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl<C: Ring> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Ring> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Ring> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Ring + fmt::Display + PartialOrd> LaurentPoly<C> {
    /// Human-readable form in the variable `var`, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let terms: Vec<(i64, C)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        for (k, (e, c)) in terms.into_iter().rev().enumerate() {
            let negative = c < C::zero();
            let mag = if negative { -c } else { c };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match e {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(var);
                    if e != 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }
}

impl<C: Ring + fmt::Display + PartialOrd> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl<C: Ring + fmt::Debug> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms()).finish()
    }
}

/// Serialized as sorted `[exponent, coefficient]` pairs.
impl<C: Ring + Serialize> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(None)?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}
