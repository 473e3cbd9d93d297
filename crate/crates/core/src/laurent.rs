//! Integer Laurent polynomials in `t^{1/2}`.
//!
//! Exponents are stored doubled: the key `k` stands for `t^{k/2}`. Every
//! Alexander polynomial produced by this crate is a [`HalfLaurent`], and the
//! parity of its doubled exponents tells integral powers (odd number of link
//! components) from strictly half-integral ones (even number).
//!
//! Coefficients are `i64` with checked arithmetic; an overflow panics rather
//! than wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow in addition")
}

#[inline]
fn mul_coeff(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("coefficient overflow in multiplication")
}

/// Laurent polynomial in `t^{1/2}` with integer coefficients, kept in
/// canonical form (no zero coefficient is ever stored).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, i64>,
}

/// Leading data of an Alexander polynomial: `2·d(L)`, `α(L)` and `β(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlexSummary {
    pub degree_doubled: i64,
    pub alpha: i64,
    pub beta: i64,
    pub is_zero: bool,
}

impl AlexSummary {
    /// `d(L)` rendered as an integer or a half-integer, e.g. `3/2`.
    pub fn degree_text(&self) -> String {
        if self.degree_doubled % 2 == 0 {
            format!("{}", self.degree_doubled / 2)
        } else {
            format!("{}/2", self.degree_doubled)
        }
    }
}

impl fmt::Display for AlexSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            write!(f, "zero polynomial")
        } else {
            write!(
                f,
                "d={} alpha={} beta={}",
                self.degree_text(),
                self.alpha,
                self.beta
            )
        }
    }
}

/// Which Conway symmetry class a polynomial falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConwayParity {
    /// Integral exponents with `a_i = a_{-i}`: odd number of components.
    SymmetricIntegral,
    /// Half-integral exponents with `a_i = -a_{-i}`: even number of components.
    AntisymmetricHalf,
    Zero,
    Violation,
}

impl ConwayParity {
    /// The class a nonzero Alexander polynomial of a link with `components`
    /// components must fall into.
    pub fn expected_for_components(components: usize) -> Self {
        if components % 2 == 1 {
            ConwayParity::SymmetricIntegral
        } else {
            ConwayParity::AntisymmetricHalf
        }
    }
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `coeff · t^{doubled_exp/2}`.
    pub fn monomial(doubled_exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(doubled_exp, coeff);
        }
        Self { terms }
    }

    /// `t^{1/2} - t^{-1/2}`, the factor in front of `Δ_{L_0}` in the skein
    /// relation and the Alexander polynomial of the positive Hopf link.
    pub fn skein_factor() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    /// Builds a polynomial from `(doubled_exp, coeff)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Polynomial in integral powers of `t`: `coeffs[i]` multiplies `t^{low + i}`.
    pub fn from_integral_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (2 * (low + i as i64), c)),
        )
    }

    fn add_term(&mut self, doubled_exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(doubled_exp).or_insert(0);
        *entry = add_coeff(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(&doubled_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^{doubled_exp/2}`, zero when absent.
    pub fn coeff(&self, doubled_exp: i64) -> i64 {
        self.terms.get(&doubled_exp).copied().unwrap_or(0)
    }

    /// Terms in decreasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    /// Largest doubled exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of the highest term, zero for the zero polynomial.
    pub fn leading_coeff(&self) -> i64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| add_coeff(acc, c))
    }

    /// Multiplies by `t^{doubled_shift/2}`.
    pub fn shift(&self, doubled_shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e + doubled_shift, c))
                .collect(),
        }
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e, mul_coeff(c, factor)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn summarize(&self) -> AlexSummary {
        match self.max_exp() {
            None => AlexSummary {
                degree_doubled: 0,
                alpha: 0,
                beta: 0,
                is_zero: true,
            },
            Some(top) => AlexSummary {
                degree_doubled: top,
                alpha: self.coeff(top),
                beta: self.coeff(top - 2),
                is_zero: false,
            },
        }
    }

    /// Substitutes `t ↦ t^w`: every exponent is multiplied by `w`. For
    /// `w = 0` the polynomial collapses to the constant sum of coefficients.
    pub fn substitute_power(&self, w: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e * w, c)))
    }

    pub fn conway_parity(&self) -> ConwayParity {
        if self.is_zero() {
            return ConwayParity::Zero;
        }
        let all_even = self.terms.keys().all(|e| e.rem_euclid(2) == 0);
        let all_odd = self.terms.keys().all(|e| e.rem_euclid(2) == 1);
        if all_even && self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c) {
            ConwayParity::SymmetricIntegral
        } else if all_odd && self.terms.iter().all(|(&e, &c)| self.coeff(-e) == -c) {
            ConwayParity::AntisymmetricHalf
        } else {
            ConwayParity::Violation
        }
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor` is
    /// zero or does not divide `self`.
    pub fn exact_div(&self, divisor: &HalfLaurent) -> Option<HalfLaurent> {
        let (dmax, dmin) = (divisor.max_exp()?, divisor.min_exp()?);
        let dlead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quotient = HalfLaurent::zero();
        let Some(pmin) = rem.min_exp() else {
            return Some(quotient);
        };
        let qmin = pmin - dmin;
        while let Some(top) = rem.max_exp() {
            let shift = top - dmax;
            if shift < qmin {
                return None;
            }
            let c = rem.coeff(top);
            if c % dlead != 0 {
                return None;
            }
            let q = c / dlead;
            quotient.add_term(shift, q);
            for (e, dc) in divisor.terms() {
                rem.add_term(e + shift, -mul_coeff(dc, q));
            }
        }
        Some(quotient)
    }

    /// Serializable view: `[doubled_exponent, coefficient]` pairs in
    /// decreasing exponent order.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.terms().map(|(e, c)| [e, c]).collect()
    }

    /// Accepts the canonical text form or a JSON array of pairs.
    pub fn parse_any(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::parse(e.column(), e.to_string()))
        } else {
            trimmed.parse()
        }
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, doubled_exp: i64) -> fmt::Result {
    if doubled_exp % 2 != 0 {
        write!(f, "t^({doubled_exp}/2)")
    } else if doubled_exp == 2 {
        write!(f, "t")
    } else {
        write!(f, "t^{}", doubled_exp / 2)
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.unsigned_abs();
            if e == 0 {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write_power(f, e)?;
            }
        }
        Ok(())
    }
}

struct TermParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> TermParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn number(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits
            .parse()
            .map(Some)
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn signed_number(&mut self) -> Result<i64> {
        let negative = self.eat(b'-');
        let at = self.pos;
        let n = self
            .number()?
            .ok_or_else(|| Error::parse(at, "expected an integer"))?;
        Ok(if negative { -n } else { n })
    }

    /// Doubled exponent following `t`.
    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(2);
        }
        if self.eat(b'(') {
            let num = self.signed_number()?;
            let doubled = if self.eat(b'/') {
                let at = self.pos;
                let den = self.signed_number()?;
                if den != 2 {
                    return Err(Error::parse(at, "only denominators of 2 are allowed"));
                }
                num
            } else {
                num.checked_mul(2)
                    .ok_or_else(|| Error::parse(self.pos, "exponent out of range"))?
            };
            self.expect(b')')?;
            Ok(doubled)
        } else {
            let n = self.signed_number()?;
            n.checked_mul(2)
                .ok_or_else(|| Error::parse(self.pos, "exponent out of range"))
        }
    }
}

impl FromStr for HalfLaurent {
    type Err = Error;

    /// Parses the text form produced by `Display`, e.g.
    /// `t^2 - t - t^-1 + t^-2` or `t^(1/2) - t^(-1/2)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = TermParser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut out = HalfLaurent::zero();
        let mut first = true;
        loop {
            let sign = if p.eat(b'-') {
                -1
            } else if p.eat(b'+') || first {
                1
            } else if p.peek().is_none() {
                break;
            } else {
                return Err(Error::parse(p.pos, "expected '+' or '-'"));
            };
            first = false;
            let coeff = p.number()?;
            let term = if p.peek() == Some(b't') || (coeff.is_some() && p.peek() == Some(b'*')) {
                if coeff.is_some() {
                    p.expect(b'*')?;
                }
                p.expect(b't')?;
                let e = p.exponent()?;
                (e, coeff.unwrap_or(1))
            } else {
                match coeff {
                    Some(c) => (0, c),
                    None => return Err(Error::parse(p.pos, "expected a term")),
                }
            };
            out.add_term(term.0, mul_coeff(sign, term.1));
            if p.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&[e, c])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairsVisitor;

        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = HalfLaurent;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of [doubled_exponent, coefficient] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut out = HalfLaurent::zero();
                while let Some([e, c]) = seq.next_element::<[i64; 2]>()? {
                    if out.terms.contains_key(&e) {
                        return Err(de::Error::custom(format!("duplicate exponent {e}")));
                    }
                    out.add_term(e, c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_seq(PairsVisitor)
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;

    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;

    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;

    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;

    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;

    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;

    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

// exponents add under multiplication
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;

    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, mul_coeff(c1, c2));
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;

    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl std::iter::Product for HalfLaurent {
    fn product<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    /// Schoolbook product over dense integer-exponent vectors, independent of
    /// the map-based implementation.
    fn schoolbook(a: &[i64], a_low: i64, b: &[i64], b_low: i64) -> HalfLaurent {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        HalfLaurent::from_integral_coeffs(a_low + b_low, &out)
    }

    #[test]
    fn add_examples() {
        let hopf = HalfLaurent::skein_factor();
        assert_eq!(&hopf + &HalfLaurent::zero(), hopf);
        assert!((p("t - 1 + t^-1") + p("-t + 1 - t^-1")).is_zero());
        assert_eq!(p("t - 2 + t^-1") + HalfLaurent::one(), p("t - 1 + t^-1"));
    }

    #[test]
    fn mul_examples() {
        let u = HalfLaurent::skein_factor();
        assert_eq!(&u * &u, p("t - 2 + t^-1"));
        assert_eq!(p("t - 1 + t^-1") * HalfLaurent::one(), p("t - 1 + t^-1"));
        let expected = schoolbook(&[1, -1, 1], -1, &[1, -1, 1, -1, 1], -2);
        assert_eq!(p("t - 1 + t^-1") * p("t^2 - t + 1 - t^-1 + t^-2"), expected);
        assert_eq!(
            expected,
            p("t^3 - 2*t^2 + 3*t - 3 + 3*t^-1 - 2*t^-2 + t^-3")
        );
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(HalfLaurent::skein_factor().coeff(1), 1);
        assert_eq!(p("t - 1 + t^-1").coeff(0), -1);
        assert_eq!(HalfLaurent::zero().coeff(4), 0);
    }

    #[test]
    fn summarize_examples() {
        let s = HalfLaurent::skein_factor().summarize();
        assert_eq!(
            (s.degree_doubled, s.alpha, s.beta, s.is_zero),
            (1, 1, -1, false)
        );
        let s = HalfLaurent::one().summarize();
        assert_eq!((s.degree_doubled, s.alpha, s.beta), (0, 1, 0));
        let s = p("t^2 - t - t^-1 + t^-2").summarize();
        assert_eq!((s.degree_doubled, s.alpha, s.beta), (4, 1, -1));
        assert!(HalfLaurent::zero().summarize().is_zero);
        assert_eq!(s.degree_text(), "2");
        assert_eq!(HalfLaurent::skein_factor().summarize().degree_text(), "1/2");
    }

    #[test]
    fn substitute_power_examples() {
        let tref = p("t - 1 + t^-1");
        assert_eq!(tref.substitute_power(2), p("t^2 - 1 + t^-2"));
        assert_eq!(tref.substitute_power(1), tref);
        assert_eq!(tref.substitute_power(0), HalfLaurent::one());
        assert_eq!(p("t^2 + 3").substitute_power(-1), p("3 + t^-2"));
    }

    #[test]
    fn conway_parity_examples() {
        assert_eq!(
            p("t - 1 + t^-1").conway_parity(),
            ConwayParity::SymmetricIntegral
        );
        assert_eq!(
            HalfLaurent::skein_factor().conway_parity(),
            ConwayParity::AntisymmetricHalf
        );
        assert_eq!(p("t + 1 - t^-1").conway_parity(), ConwayParity::Violation);
        assert_eq!(HalfLaurent::zero().conway_parity(), ConwayParity::Zero);
        assert_eq!(p("t^(1/2) + 1").conway_parity(), ConwayParity::Violation);
    }

    #[test]
    fn display_is_canonical() {
        let q = p("t^3 - 2*t^2 + 3*t - 3 + 3*t^-1 - 2*t^-2 + t^-3");
        assert_eq!(
            q.to_string(),
            "t^3 - 2*t^2 + 3*t - 3 + 3*t^-1 - 2*t^-2 + t^-3"
        );
        assert_eq!(
            HalfLaurent::skein_factor().to_string(),
            "t^(1/2) - t^(-1/2)"
        );
        assert_eq!(p("-t^(3/2) + 2").to_string(), "-t^(3/2) + 2");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn parse_errors_carry_position() {
        match "t^2 + x".parse::<HalfLaurent>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!("t^(1/3)".parse::<HalfLaurent>().is_err());
        assert!("t t".parse::<HalfLaurent>().is_err());
    }

    #[test]
    fn json_pairs() {
        let q = p("t^2 - t - t^-1 + t^-2");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[[4,1],[2,-1],[-2,-1],[-4,1]]");
        assert_eq!(serde_json::to_string(&HalfLaurent::zero()).unwrap(), "[]");
        let back: HalfLaurent = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<HalfLaurent>("[[1,1],[1,2]]").is_err());
        assert_eq!(
            HalfLaurent::parse_any("[[1,1],[-1,-1]]").unwrap(),
            HalfLaurent::skein_factor()
        );
        assert_eq!(HalfLaurent::parse_any(" 1 ").unwrap(), HalfLaurent::one());
    }

    #[test]
    fn exact_division() {
        let a = p("t - 1 + t^-1");
        let b = p("t^2 - t + 1 - t^-1 + t^-2");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(p("t^2 + 1").exact_div(&p("t + 1")), None);
        assert_eq!(p("2*t").exact_div(&p("3")), None);
        assert_eq!(HalfLaurent::zero().exact_div(&a), Some(HalfLaurent::zero()));
        assert_eq!(a.exact_div(&HalfLaurent::zero()), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_a_hard_error() {
        let big = HalfLaurent::constant(i64::MAX);
        let _ = &big + &HalfLaurent::one();
    }
}
