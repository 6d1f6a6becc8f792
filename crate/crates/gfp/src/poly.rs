//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! [`Poly`] is the value type for everything else in the crate. Coefficients
//! are stored in ascending order of degree and the representation is always
//! canonical: the highest stored coefficient is nonzero, and the zero
//! polynomial is the empty vector. Two polynomials are equal exactly when
//! their coefficient vectors are equal, so `==` is exact polynomial equality.
//!
//! The gcd implemented here is the gcd in `Z[x]`, not in `Q[x]`: the integer
//! content takes part, so `gcd(4x + 4, 2)` is `2` rather than `1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("quotient is not a polynomial with integer coefficients")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A polynomial in `Z[x]`, `coeffs[i]` being the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Convenience constructor from small ascending coefficients.
    ///
    /// ```
    /// use gfp::Poly;
    /// let p = Poly::from_i64s(&[4, 12, 12, 8]);
    /// assert_eq!(p.to_string(), "8x^3 + 12x^2 + 12x + 4");
    /// ```
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Ascending coefficients in canonical form.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, with `None` standing for the degree of the zero polynomial
    /// (minus infinity). `None` compares below every `Some`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `1` and `-1`, the units of `Z[x]`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub(crate) fn scale_in_place(&mut self, c: &BigInt) {
        if c.is_zero() {
            self.coeffs.clear();
        } else if (-c).is_one() {
            self.coeffs.iter_mut().for_each(|a| *a = -std::mem::take(a));
        } else if !c.is_one() {
            self.coeffs.iter_mut().for_each(|a| *a *= c);
        }
    }

    /// `self += a * b`, in place.
    ///
    /// ```
    /// use gfp::Poly;
    /// let mut p = Poly::from_i64s(&[1, 1]);
    /// p.add_product(&Poly::from_i64s(&[0, 2]), &Poly::from_i64s(&[3, 0, 1]));
    /// assert_eq!(p.to_string(), "2x^3 + 7x + 1");
    /// ```
    pub fn add_product(&mut self, a: &Poly, b: &Poly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let mut scratch = BigInt::zero();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let small = x.magnitude().to_u32();
            let negative = x.is_negative();
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let slot = &mut self.coeffs[i + j];
                match small {
                    Some(1) => {}
                    Some(k) => {
                        scratch.clone_from(y);
                        scratch *= k;
                    }
                    None => scratch = x.abs() * y,
                }
                let term = if small == Some(1) { y } else { &scratch };
                if negative {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
        self.trim();
    }

    /// `self^e`, with `p^0 = 1` for every `p` including zero.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient in `Z[x]`.
    ///
    /// Long division is carried out with the rational quotient in mind: each
    /// step must divide the running leading coefficient by `lc(den)` exactly,
    /// otherwise the rational quotient has a non-integer coefficient and the
    /// division fails. A nonzero final remainder fails likewise.
    ///
    /// ```
    /// use gfp::{Poly, PolyError};
    /// let num: Poly = "x^3 + 2x".parse().unwrap();
    /// let den: Poly = "x^2 + 2".parse().unwrap();
    /// assert_eq!(num.exact_div(&den), Ok(Poly::x()));
    /// assert_eq!(den.exact_div(&Poly::x()), Err(PolyError::NotDivisible));
    /// ```
    pub fn exact_div(&self, den: &Poly) -> Result<Poly, PolyError> {
        let Some(dd) = den.degree() else {
            return Err(PolyError::ZeroDivisor);
        };
        let Some(nd) = self.degree() else {
            return Ok(Poly::zero());
        };
        if nd < dd {
            return Err(PolyError::NotDivisible);
        }
        let lc = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, c) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Poly::new(quot))
    }

    /// Gcd of the absolute values of the coefficients; `content(0) = 0`.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(
            BigInt::zero(),
            |acc, c| if acc.is_one() { acc } else { acc.gcd(c) },
        )
    }

    /// `self / content(self)`, with the sign flipped so the leading
    /// coefficient is positive. Together with [`Poly::content`] this gives
    /// `p = ±content(p) * primitive_part(p)`, the sign being that of `lc(p)`.
    pub fn primitive_part(&self) -> Result<Poly, PolyError> {
        let Some(lc) = self.leading_coeff() else {
            return Err(PolyError::ZeroPolynomial);
        };
        let mut c = self.content();
        if lc.is_negative() {
            c = -c;
        }
        Ok(self.div_scalar(&c))
    }

    /// The associate with positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Pseudo-remainder: the remainder of `lc(den)^k * self` on division by
    /// `den`, for the smallest `k` the elimination needs. Only the associate
    /// class matters to the gcd, so the exact power is not tracked.
    pub fn pseudo_rem(&self, den: &Poly) -> Result<Poly, PolyError> {
        let Some(dd) = den.degree() else {
            return Err(PolyError::ZeroDivisor);
        };
        let lc = &den.coeffs[dd];
        let mut rem = self.clone();
        while let Some(rd) = rem.degree().filter(|&rd| rd >= dd) {
            let top = rem.coeffs[rd].clone();
            let shift = rd - dd;
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * lc).collect();
            for (j, c) in den.coeffs.iter().enumerate() {
                next[shift + j] -= &top * c;
            }
            rem = Poly::new(next);
        }
        Ok(rem)
    }

    /// The gcd in `Z[x]`, integer content included, with positive leading
    /// coefficient. `gcd(p, 0)` is `p` normalized and `gcd(0, 0) = 0`.
    ///
    /// The primitive part of the gcd comes from a primitive remainder
    /// sequence: pseudo-division followed by primitive-part reduction at each
    /// step keeps coefficients bounded without rational arithmetic.
    ///
    /// ```
    /// use gfp::Poly;
    /// let f4: Poly = "x^3 + 2x".parse().unwrap();
    /// let f6: Poly = "x^5 + 4x^3 + 3x".parse().unwrap();
    /// assert_eq!(f4.gcd(&f6), Poly::x());
    /// let g3: Poly = "8x^3 + 12x^2 + 12x + 4".parse().unwrap();
    /// assert_eq!(g3.gcd(&Poly::constant(2)), Poly::constant(2));
    /// ```
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                // primitive constants are 1
                a = Poly::one();
                break;
            }
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        a.scale(&content)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    fn primitive(&self) -> Poly {
        self.primitive_part().expect("caller checked nonzero")
    }

    fn div_scalar(&self, c: &BigInt) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }
}

/// `gcd` as a free function, for symmetry with the other ring operations.
pub fn poly_gcd_z(p: &Poly, q: &Poly) -> Poly {
    p.gcd(q)
}

fn add_coeffs(lhs: &[BigInt], rhs: &[BigInt], negate_rhs: bool) -> Poly {
    let n = lhs.len().max(rhs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = lhs.get(i);
        let b = rhs.get(i);
        let v = match (a, b) {
            (Some(a), Some(b)) if negate_rhs => a - b,
            (Some(a), Some(b)) => a + b,
            (Some(a), None) => a.clone(),
            (None, Some(b)) if negate_rhs => -b,
            (None, Some(b)) => b.clone(),
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    Poly::new(out)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl From<BigInt> for Poly {
    fn from(c: BigInt) -> Self {
        Poly::constant(c)
    }
}

/// Descending-degree text form, e.g. `8x^3 + 12x^2 + 12x + 4` or `-x^2 + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        (!s.is_empty()).then_some(s)
    }
}

/// Parses the text form produced by `Display`. Whitespace between tokens is
/// ignored, `*` between a coefficient and `x` is allowed, and repeated
/// powers are summed.
impl FromStr for Poly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| PolyError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut cur = Cursor {
            chars: s.char_indices().peekable(),
        };
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') {
                if first {
                    return Err(fail("leading '+'"));
                }
                false
            } else if first {
                false
            } else {
                return Err(fail("expected '+' or '-' between terms"));
            };
            first = false;

            let magnitude = cur.digits();
            if magnitude.is_some() {
                cur.eat('*');
            }
            let power = if cur.eat('x') {
                if cur.eat('^') {
                    let e = cur
                        .digits()
                        .ok_or_else(|| fail("expected exponent after '^'"))?;
                    e.parse::<usize>().map_err(|_| fail("exponent too large"))?
                } else {
                    1
                }
            } else if magnitude.is_some() {
                0
            } else {
                return Err(fail("expected a coefficient or 'x'"));
            };
            let mut c = match magnitude {
                Some(m) => m.parse::<BigInt>().expect("ascii digits"),
                None => BigInt::one(),
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;

            if cur.peek().is_none() {
                break;
            }
        }
        Ok(Poly::new(coeffs))
    }
}

/// JSON form: ascending coefficients as decimal strings.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct CoeffVisitor;

impl Visitor<'_> for CoeffVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse()
            .map_err(|_| E::custom(format!("invalid coefficient {v:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }
}

struct Coeff(BigInt);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(CoeffVisitor).map(Coeff)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Poly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of ascending coefficients")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Poly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(Coeff(c)) = seq.next_element()? {
                    coeffs.push(c);
                }
                Ok(Poly::new(coeffs))
            }
        }
        deserializer.deserialize_seq(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x + 1") + p("x - 1"), p("2x"));
        assert_eq!(p("x") * Poly::zero(), Poly::zero());
        // (x + 2)(x^2 + 1) expanded by hand: x^3 + x + 2x^2 + 2
        assert_eq!(p("x + 2") * p("x^2 + 1"), Poly::from_i64s(&[2, 1, 2, 1]));
        assert_eq!(p("x^2") - p("x^2"), Poly::zero());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p("2x").pow(3), p("8x^3"));
        assert_eq!(p("x^2 + 3").pow(0), Poly::one());
        assert_eq!(Poly::zero().pow(0), Poly::one());
        assert_eq!(Poly::zero().pow(2), Poly::zero());
        assert_eq!(p("x + 1").pow(2), &p("x + 1") * &p("x + 1"));
        assert_eq!(p("x + 1").pow(2), p("x^2 + 2x + 1"));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("x^3 + 2x").exact_div(&p("x^2 + 2")), Ok(p("x")));
        assert_eq!(
            p("x^2 + 1").exact_div(&p("x")),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(Poly::zero().exact_div(&p("3x + 1")), Ok(Poly::zero()));
        assert_eq!(p("x").exact_div(&Poly::zero()), Err(PolyError::ZeroDivisor));
        // divisible over Q but not over Z
        assert_eq!(
            p("x + 1").exact_div(&p("2x + 2")),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(p("x").exact_div(&p("x^2")), Err(PolyError::NotDivisible));
        assert_eq!(p("4x + 6").exact_div(&p("2")), Ok(p("2x + 3")));
    }

    #[test]
    fn content_and_primitive_part() {
        assert_eq!(p("4x^2 + 4x + 4").content(), BigInt::from(4));
        assert_eq!(p("x^3 + 3x").content(), BigInt::from(1));
        // 4(2x + 1)(x^2 + x + 1) = 8x^3 + 12x^2 + 12x + 4
        let g3 = Poly::constant(4) * p("2x + 1") * p("x^2 + x + 1");
        assert_eq!(g3, p("8x^3 + 12x^2 + 12x + 4"));
        assert_eq!(g3.content(), BigInt::from(4));
        assert_eq!(Poly::zero().content(), BigInt::zero());
        assert_eq!(p("-6").content(), BigInt::from(6));

        assert_eq!(p("-2x - 4").primitive_part(), Ok(p("x + 2")));
        assert_eq!(p("x").primitive_part(), Ok(p("x")));
        assert_eq!(g3.primitive_part(), Ok(p("2x^3 + 3x^2 + 3x + 1")));
        assert_eq!(
            Poly::zero().primitive_part(),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(p("-7").primitive_part(), Ok(Poly::one()));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^3 + 2x").gcd(&p("x^5 + 4x^3 + 3x")), p("x"));
        assert_eq!(p("-3x^2 + 1").gcd(&Poly::zero()), p("3x^2 - 1"));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
        assert_eq!(p("8x^3 + 12x^2 + 12x + 4").gcd(&p("2")), p("2"));
        assert_eq!(p("6x + 6").gcd(&p("4x^2 - 4")), p("2x + 2"));
        assert_eq!(p("x^2 + 2").gcd(&p("2")), Poly::one());
        assert_eq!(p("-x").gcd(&p("-x")), p("x"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x^2 + 2").eval_i64(1), BigInt::from(3));
        assert_eq!(Poly::zero().eval_i64(7), BigInt::zero());
        assert_eq!(p("x^5 + 4x^3 + 3x").eval_i64(1), BigInt::from(8));
        assert_eq!(p("x^2 - 3").eval_i64(-2), BigInt::from(1));
    }

    #[test]
    fn degree_of_zero_is_below_everything() {
        assert_eq!(Poly::zero().degree(), None);
        assert!(Poly::zero().degree() < Poly::one().degree());
        assert_eq!(
            Poly::new(vec![1.into(), 0.into(), 0.into()]).degree(),
            Some(0)
        );
    }

    #[test]
    fn text_form() {
        for s in [
            "8x^3 + 12x^2 + 12x + 4",
            "-x^2 + 1",
            "x^5 - 4x^3 - x",
            "0",
            "-3",
            "x",
            "2x - 7",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("3*x^2+x -1"), p("3x^2 + x - 1"));
        assert_eq!(p("x + x"), p("2x"));
        assert!("".parse::<Poly>().is_err());
        assert!("x^".parse::<Poly>().is_err());
        assert!("2 3".parse::<Poly>().is_err());
        assert!("+x".parse::<Poly>().is_err());
        assert!("x y".parse::<Poly>().is_err());
    }

    #[test]
    fn json_form() {
        let g = p("8x^3 + 12x^2 + 12x + 4");
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"["4","12","12","8"]"#);
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), g);
        assert_eq!(serde_json::from_str::<Poly>("[0, -1, 0]").unwrap(), p("-x"));
        assert_eq!(serde_json::to_string(&Poly::zero()).unwrap(), "[]");
        assert!(serde_json::from_str::<Poly>(r#"["1.5"]"#).is_err());
    }
}
