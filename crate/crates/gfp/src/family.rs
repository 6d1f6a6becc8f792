//! Generalized Fibonacci polynomial families and their term sequences.
//!
//! A family is fixed by `d(x)`, `g(x)` and two initial values; every term
//! after the first two follows `G_n = d * G_{n-1} + g * G_{n-2}`. Families
//! come in two kinds, distinguished by their initial values:
//!
//! * Fibonacci type: `G_0 = 0`, `G_1 = 1`.
//! * Lucas type: `2 * G_1 = G_0 * d` with `G_0` a constant of absolute value
//!   1 or 2. `alpha = 2 / G_0` is then one of ±1, ±2.
//!
//! A Fibonacci-type and a Lucas-type family sharing `d` and `g` are called
//! equivalent; they have the same characteristic roots.

use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    #[serde(alias = "FibonacciType", alias = "fibonacci")]
    FibonacciType,
    #[serde(alias = "LucasType", alias = "lucas")]
    LucasType,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::FibonacciType => Kind::LucasType,
            Kind::LucasType => Kind::FibonacciType,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::FibonacciType => "Fibonacci type",
            Kind::LucasType => "Lucas type",
        })
    }
}

/// One violated side condition of a family definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    ZeroD,
    ZeroG,
    DgNotCoprime,
    P0MustBeZero,
    P1MustBeOne,
    P0NotConstant,
    P0OutOfRange,
    LucasRelation,
    P0P1NotCoprime,
    P0DNotCoprime,
    AlphaP1NotCoprime,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::ZeroD => "d must be nonzero",
            Violation::ZeroG => "g must be nonzero",
            Violation::DgNotCoprime => "gcd(d,g)≠1",
            Violation::P0MustBeZero => "p0 must be 0",
            Violation::P1MustBeOne => "p1 must be 1",
            Violation::P0NotConstant => "p0 must be a constant",
            Violation::P0OutOfRange => "|p0| must be 1 or 2",
            Violation::LucasRelation => "2·p1 must equal p0·d",
            Violation::P0P1NotCoprime => "gcd(p0,p1)≠1",
            Violation::P0DNotCoprime => "gcd(p0,d)≠1",
            Violation::AlphaP1NotCoprime => "gcd(α,p1)≠1",
        })
    }
}

/// A family of generalized Fibonacci polynomials.
///
/// Construction does not validate; call [`Family::validate`] or
/// [`Family::validated`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    name: String,
    kind: Kind,
    d: Poly,
    g: Poly,
    p0: Poly,
    p1: Poly,
}

impl Family {
    pub fn new(name: impl Into<String>, kind: Kind, d: Poly, g: Poly, p0: Poly, p1: Poly) -> Self {
        Family {
            name: name.into(),
            kind,
            d,
            g,
            p0,
            p1,
        }
    }

    /// Fibonacci type over `d`, `g`: `G_0 = 0`, `G_1 = 1`.
    pub fn fibonacci_type(name: impl Into<String>, d: Poly, g: Poly) -> Self {
        Family::new(name, Kind::FibonacciType, d, g, Poly::zero(), Poly::one())
    }

    /// Lucas type over `d`, `g` with `G_0 = p0` and `G_1 = p0 * d / 2`.
    pub fn lucas_type(name: impl Into<String>, d: Poly, g: Poly, p0: i64) -> Result<Self> {
        let p1 = d.scale(&BigInt::from(p0)).exact_div(&Poly::constant(2))?;
        Ok(Family::new(
            name,
            Kind::LucasType,
            d,
            g,
            Poly::constant(p0),
            p1,
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn p0(&self) -> &Poly {
        &self.p0
    }

    pub fn p1(&self) -> &Poly {
        &self.p1
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Every violated side condition; empty means the family is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.d.is_zero() {
            out.push(Violation::ZeroD);
        }
        if self.g.is_zero() {
            out.push(Violation::ZeroG);
        }
        if !self.d.is_zero() && !self.g.is_zero() && !self.d.gcd(&self.g).is_one() {
            out.push(Violation::DgNotCoprime);
        }
        match self.kind {
            Kind::FibonacciType => {
                if !self.p0.is_zero() {
                    out.push(Violation::P0MustBeZero);
                }
                if !self.p1.is_one() {
                    out.push(Violation::P1MustBeOne);
                }
            }
            Kind::LucasType => {
                if !self.p0.is_constant() {
                    out.push(Violation::P0NotConstant);
                } else if !matches!(self.p0_value(), Some(1 | 2)) {
                    out.push(Violation::P0OutOfRange);
                }
                if self.p1.scale(&BigInt::from(2)) != &self.p0 * &self.d {
                    out.push(Violation::LucasRelation);
                }
                if !self.p0.gcd(&self.p1).is_one() {
                    out.push(Violation::P0P1NotCoprime);
                }
                if !self.p0.gcd(&self.d).is_one() {
                    out.push(Violation::P0DNotCoprime);
                }
                if let Ok(alpha) = self.alpha() {
                    if !Poly::constant(alpha).gcd(&self.p1).is_one() {
                        out.push(Violation::AlphaP1NotCoprime);
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self` if valid, otherwise [`Error::InvalidFamily`].
    pub fn validated(self) -> Result<Self> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidFamily {
                name: self.name,
                violations,
            })
        }
    }

    fn p0_value(&self) -> Option<i64> {
        if !self.p0.is_constant() {
            return None;
        }
        self.p0.coeff(0).abs().to_i64()
    }

    /// `d^2 + 4g`, the square of the difference of the characteristic roots.
    pub fn discriminant(&self) -> Poly {
        &(&self.d * &self.d) + &self.g.scale(&BigInt::from(4))
    }

    /// `2 / p0` for a Lucas-type family.
    pub fn alpha(&self) -> Result<i64> {
        self.expect_kind(Kind::LucasType)?;
        let p0 = if self.p0.is_constant() {
            self.p0.coeff(0).to_i64()
        } else {
            None
        };
        match p0 {
            Some(c @ (-2 | -1 | 1 | 2)) => Ok(2 / c),
            _ => Err(Error::InvalidFamily {
                name: self.name.clone(),
                violations: vec![Violation::P0OutOfRange],
            }),
        }
    }

    pub(crate) fn expect_kind(&self, expected: Kind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongKind {
                family: self.name.clone(),
                expected,
                found: self.kind,
            })
        }
    }

    /// True when `self` and `other` have the same `d` and `g` and opposite kinds.
    pub fn is_equivalent_to(&self, other: &Family) -> bool {
        self.kind != other.kind && self.d == other.d && self.g == other.g
    }

    /// True when every field but the name agrees.
    pub fn same_sequence(&self, other: &Family) -> bool {
        self.kind == other.kind
            && self.d == other.d
            && self.g == other.g
            && self.p0 == other.p0
            && self.p1 == other.p1
    }

    /// The partner family with the same `d`, `g` and the other kind.
    ///
    /// For a Lucas-type partner `p0 = 2, p1 = d` is tried first and
    /// `p0 = 1, p1 = d / 2` second; the first candidate passing validation
    /// wins. A partner matching a built-in family takes the built-in's name.
    ///
    /// ```
    /// use gfp::family::builtin_family;
    /// let pell = builtin_family("pell").unwrap();
    /// let partner = pell.equivalent_family().unwrap();
    /// assert_eq!(partner.name(), "pell-lucas-prime");
    /// assert_eq!(partner.p0().to_string(), "1");
    /// ```
    pub fn equivalent_family(&self) -> Result<Family> {
        let fallback_name = format!("{}-equivalent", self.name);
        let partner = match self.kind {
            Kind::LucasType => {
                Family::fibonacci_type(fallback_name, self.d.clone(), self.g.clone())
            }
            Kind::FibonacciType => [2, 1]
                .into_iter()
                .filter_map(|p0| {
                    Family::lucas_type(fallback_name.clone(), self.d.clone(), self.g.clone(), p0)
                        .ok()
                })
                .find(Family::is_valid)
                .ok_or_else(|| Error::NoValidEquivalent(self.name.clone()))?,
        };
        Ok(
            match builtin_families()
                .into_iter()
                .find(|b| b.same_sequence(&partner))
            {
                Some(b) => b,
                None => partner,
            },
        )
    }
}

const REGISTRY: &[(&str, Kind, &str, &str, &str, &str)] = &[
    ("fibonacci", Kind::FibonacciType, "x", "1", "0", "1"),
    ("lucas", Kind::LucasType, "x", "1", "2", "x"),
    ("pell", Kind::FibonacciType, "2x", "1", "0", "1"),
    ("pell-lucas-prime", Kind::LucasType, "2x", "1", "1", "x"),
    ("fermat", Kind::FibonacciType, "3x", "-2", "0", "1"),
    ("fermat-lucas", Kind::LucasType, "3x", "-2", "2", "3x"),
    ("chebyshev2", Kind::FibonacciType, "2x", "-1", "0", "1"),
    ("chebyshev1", Kind::LucasType, "2x", "-1", "1", "x"),
    ("jacobsthal", Kind::FibonacciType, "1", "2x", "0", "1"),
    ("jacobsthal-lucas", Kind::LucasType, "1", "2x", "2", "1"),
    (
        "morgan-voyce-b",
        Kind::FibonacciType,
        "x + 2",
        "-1",
        "0",
        "1",
    ),
    (
        "morgan-voyce-c",
        Kind::LucasType,
        "x + 2",
        "-1",
        "2",
        "x + 2",
    ),
    (
        "paper-2x1-fib",
        Kind::FibonacciType,
        "2x + 1",
        "1",
        "0",
        "1",
    ),
    (
        "paper-2x1-lucas",
        Kind::LucasType,
        "2x + 1",
        "1",
        "2",
        "2x + 1",
    ),
];

/// Equivalent pairs of the registry, Fibonacci type first.
pub const BUILTIN_PAIRS: &[(&str, &str)] = &[
    ("fibonacci", "lucas"),
    ("pell", "pell-lucas-prime"),
    ("fermat", "fermat-lucas"),
    ("chebyshev2", "chebyshev1"),
    ("jacobsthal", "jacobsthal-lucas"),
    ("morgan-voyce-b", "morgan-voyce-c"),
    ("paper-2x1-fib", "paper-2x1-lucas"),
];

fn registry_entry(entry: &(&str, Kind, &str, &str, &str, &str)) -> Family {
    let &(name, kind, d, g, p0, p1) = entry;
    let parse = |s: &str| s.parse::<Poly>().expect("registry polynomials parse");
    Family::new(name, kind, parse(d), parse(g), parse(p0), parse(p1))
}

/// All built-in families in registry order.
pub fn builtin_families() -> Vec<Family> {
    REGISTRY.iter().map(registry_entry).collect()
}

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.0)
}

/// Looks a family up by registry name.
///
/// ```
/// let fermat = gfp::family::builtin_family("fermat").unwrap();
/// assert_eq!(fermat.d().to_string(), "3x");
/// assert_eq!(fermat.g().to_string(), "-2");
/// ```
pub fn builtin_family(name: &str) -> Result<Family> {
    REGISTRY
        .iter()
        .find(|e| e.0 == name)
        .map(registry_entry)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// The registry name of the equivalent partner of a built-in.
pub fn builtin_partner(name: &str) -> Option<&'static str> {
    BUILTIN_PAIRS.iter().find_map(|&(f, l)| match name {
        _ if name == f => Some(l),
        _ if name == l => Some(f),
        _ => None,
    })
}

/// Memoized terms of one family.
///
/// The store only ever grows, behind a lock, so a `Sequence` can be shared
/// across threads and every caller sees the same value for a given index.
#[derive(Debug)]
pub struct Sequence {
    family: Family,
    terms: RwLock<Vec<Arc<Poly>>>,
}

impl Sequence {
    pub fn new(family: Family) -> Self {
        let terms = vec![Arc::new(family.p0.clone()), Arc::new(family.p1.clone())];
        Sequence {
            family,
            terms: RwLock::new(terms),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// `G_n`, extending the cache as needed.
    ///
    /// ```
    /// use gfp::family::{builtin_family, Sequence};
    /// let fib = Sequence::new(builtin_family("fibonacci").unwrap());
    /// assert_eq!(fib.term(6).to_string(), "x^5 + 4x^3 + 3x");
    /// ```
    pub fn term(&self, n: usize) -> Arc<Poly> {
        if let Some(t) = self.terms.read().expect("lock poisoned").get(n) {
            return Arc::clone(t);
        }
        let mut terms = self.terms.write().expect("lock poisoned");
        while terms.len() <= n {
            let k = terms.len();
            let next = &(&self.family.d * &*terms[k - 1]) + &(&self.family.g * &*terms[k - 2]);
            terms.push(Arc::new(next));
        }
        Arc::clone(&terms[n])
    }

    /// Number of cached terms.
    pub fn cached(&self) -> usize {
        self.terms.read().expect("lock poisoned").len()
    }

    /// Re-checks the recurrence over every cached triple.
    pub fn recurrence_holds(&self) -> bool {
        let terms = self.terms.read().expect("lock poisoned");
        *terms[0] == self.family.p0
            && *terms[1] == self.family.p1
            && terms
                .windows(3)
                .all(|w| *w[2] == &(&self.family.d * &*w[1]) + &(&self.family.g * &*w[0]))
    }
}

/// `G_n` without retaining intermediate terms.
pub fn nth_term(family: &Family, n: usize) -> Poly {
    let (mut prev, mut cur) = (family.p0.clone(), family.p1.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = if family.g.is_constant() {
            prev.scale_in_place(&family.g.coeff(0));
            prev
        } else {
            &family.g * &prev
        };
        next.add_product(&family.d, &cur);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
