//! Sparse bivariate polynomials in `x` and `y` over arbitrary-precision
//! integers.
//!
//! A [`BivarPoly`] stores only its nonzero terms, so two polynomials are equal
//! exactly when their term maps are equal. Terms are kept in display order:
//! decreasing degree in `x`, then increasing degree in `y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair of a monomial `x^x y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    pub x: u32,
    pub y: u32,
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        other.x.cmp(&self.x).then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Output styles understood by [`BivarPoly::format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// Caret notation, e.g. `x^4 + 3x^2y + y^2`.
    Plain,
    /// Like plain, with multi-digit exponents braced: `x^{10}`.
    Latex,
    /// `{"terms":[{"x":2,"y":0,"c":"1"}, ...]}` with decimal-string coefficients.
    Json,
    /// A `x,y,c` header followed by one row per term.
    Csv,
}

impl FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Style::Plain),
            "latex" => Ok(Style::Latex),
            "json" => Ok(Style::Json),
            "csv" => Ok(Style::Csv),
            other => Err(Error::Input(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `c · x^i y^j`.
    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents { x: i, y: j }, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(i, j, coeff)` triples. Repeated exponent
    /// pairs are summed; negative exponents are rejected.
    pub fn from_terms<I, C>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::new();
        for (i, j, c) in terms {
            let (Ok(x), Ok(y)) = (u32::try_from(i), u32::try_from(j)) else {
                return Err(Error::Input(format!(
                    "negative or oversized exponent ({i}, {j})"
                )));
            };
            accumulate(&mut out, Exponents { x, y }, c.into());
        }
        Ok(Self::canonical(out))
    }

    fn canonical(mut terms: BTreeMap<Exponents, BigInt>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a polynomial without variables; `None` if `x` or `y` occurs.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Exponents { x: 0, y: 0 }).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms
            .get(&Exponents { x: i, y: j })
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.x + e.y).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.y).max()
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces `y` by the integer `k`: `x^i y^j ↦ k^j x^i`.
    pub fn substitute_y(&self, k: &BigInt) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            accumulate(&mut out, Exponents { x: e.x, y: 0 }, c * k.pow(e.y));
        }
        Self::canonical(out)
    }

    /// Replaces `x` by `k·x`: `x^i y^j ↦ k^i x^i y^j`.
    pub fn scale_x(&self, k: &BigInt) -> Self {
        Self::canonical(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c * k.pow(e.x)))
                .collect(),
        )
    }

    /// Divides every coefficient by two, failing on the first odd one.
    pub fn halve_exact(&self) -> Result<Self> {
        let two = BigInt::from(2);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if c.is_odd_int() {
                return Err(Error::Exactness {
                    x: e.x,
                    y: e.y,
                    coeff: c.to_string(),
                });
            }
            terms.insert(*e, c / &two);
        }
        Ok(Self { terms })
    }

    pub fn eval_int(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * x0.pow(e.x) * y0.pow(e.y))
            .sum()
    }

    /// Floating-point evaluation. Each `y^j` stratum is evaluated by Horner's
    /// rule in `x`, and the strata are then combined by Horner's rule in `y`.
    /// Both passes are compensated, so the result is about as accurate as if
    /// computed in twice the working precision and then rounded.
    pub fn eval_float(&self, x0: f64, y0: f64) -> f64 {
        let Some(max_y) = self.degree_y() else {
            return 0.0;
        };
        let max_x = self.degree_x().unwrap_or(0) as usize;
        let mut strata = vec![vec![0.0f64; max_x + 1]; max_y as usize + 1];
        for (e, c) in &self.terms {
            strata[e.y as usize][e.x as usize] = c.to_f64().unwrap_or(f64::NAN);
        }
        let by_y: Vec<f64> = strata.iter().map(|coeffs| horner(coeffs, x0)).collect();
        horner(&by_y, y0)
    }

    pub fn format(&self, style: Style) -> String {
        match style {
            Style::Plain => self.render(false),
            Style::Latex => self.render(true),
            Style::Json => serde_json::to_string(self).expect("polynomial serializes"),
            Style::Csv => {
                let mut out = String::from("x,y,c\n");
                for (e, c) in &self.terms {
                    out.push_str(&format!("{},{},{}\n", e.x, e.y, c));
                }
                out
            }
        }
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let has_vars = e.x > 0 || e.y > 0;
            if !has_vars || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            push_var(&mut out, 'x', e.x, latex);
            push_var(&mut out, 'y', e.y, latex);
        }
        out
    }

    /// Parses the plain (or LaTeX) rendering back into a polynomial.
    pub fn parse_plain(s: &str) -> Result<Self> {
        PlainParser::new(s).parse()
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn accumulate(map: &mut BTreeMap<Exponents, BigInt>, e: Exponents, c: BigInt) {
    *map.entry(e).or_default() += c;
}

/// Compensated Horner: the rounding error of every product and sum is
/// captured exactly (FMA for products, TwoSum for sums) and run through a
/// second Horner recurrence that corrects the result at the end.
fn horner(coeffs: &[f64], x: f64) -> f64 {
    let Some((&lead, rest)) = coeffs.split_last() else {
        return 0.0;
    };
    let mut s = lead;
    let mut err = 0.0f64;
    for &c in rest.iter().rev() {
        let p = s * x;
        let p_err = s.mul_add(x, -p);
        let sum = p + c;
        let t = sum - p;
        let sum_err = (p - (sum - t)) + (c - t);
        s = sum;
        err = err.mul_add(x, p_err + sum_err);
    }
    s + err
}

fn push_var(out: &mut String, var: char, exp: u32, latex: bool) {
    match exp {
        0 => {}
        1 => out.push(var),
        e if latex && e >= 10 => out.push_str(&format!("{var}^{{{e}}}")),
        e => out.push_str(&format!("{var}^{e}")),
    }
}

trait OddInt {
    fn is_odd_int(&self) -> bool;
}

impl OddInt for BigInt {
    fn is_odd_int(&self) -> bool {
        self.bit(0)
    }
}

struct PlainParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> PlainParser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.char_indices().peekable(),
            src,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        (!s.is_empty()).then_some(s)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.chars.next_if(|(_, c)| *c == '^').is_none() {
            return Ok(1);
        }
        let braced = self.chars.next_if(|(_, c)| *c == '{').is_some();
        let d = self.digits().ok_or_else(|| self.err("missing exponent"))?;
        if braced && self.chars.next_if(|(_, c)| *c == '}').is_none() {
            return Err(self.err("unclosed brace"));
        }
        d.parse().map_err(|_| self.err("exponent out of range"))
    }

    fn parse(mut self) -> Result<BivarPoly> {
        let mut terms = BTreeMap::new();
        self.skip_ws();
        let mut sign = match self.chars.peek() {
            Some((_, '-')) => {
                self.chars.next();
                -1
            }
            Some((_, '+')) => {
                self.chars.next();
                1
            }
            None => return Err(self.err("empty input")),
            _ => 1,
        };
        loop {
            self.skip_ws();
            let coeff = self.digits();
            let mut e = Exponents { x: 0, y: 0 };
            if self.chars.next_if(|(_, c)| *c == 'x').is_some() {
                e.x = self.exponent()?;
            }
            if self.chars.next_if(|(_, c)| *c == 'y').is_some() {
                e.y = self.exponent()?;
            }
            if coeff.is_none() && e.x == 0 && e.y == 0 {
                return Err(self.err("expected a term"));
            }
            let c = match coeff {
                Some(d) => BigInt::from_str(&d).map_err(|_| self.err("bad coefficient"))?,
                None => BigInt::one(),
            };
            accumulate(&mut terms, e, c * sign);
            self.skip_ws();
            sign = match self.chars.next() {
                None => break,
                Some((_, '+')) => 1,
                Some((_, '-')) => -1,
                Some((i, c)) => return Err(self.err(&format!("unexpected `{c}` at {i}"))),
            };
        }
        Ok(BivarPoly::canonical(terms))
    }
}

impl FromStr for BivarPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_plain(s)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for BivarPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, *e, c.clone());
        }
        BivarPoly::canonical(terms)
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, *e, -c);
        }
        BivarPoly::canonical(terms)
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = Exponents {
                    x: ea.x + eb.x,
                    y: ea.y + eb.y,
                };
                accumulate(&mut terms, e, ca * cb);
            }
        }
        BivarPoly::canonical(terms)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<BivarPoly> for &BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl std::iter::Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, p| acc + p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: u32,
    y: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    x: e.x,
                    y: e.y,
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            let c = BigInt::from_str(&t.c)
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))?;
            accumulate(&mut terms, Exponents { x: t.x, y: t.y }, c);
        }
        Ok(BivarPoly::canonical(terms))
    }
}
