//! Closed-form gcds of generalized Fibonacci polynomials, refereed by a
//! brute-force polynomial gcd.
//!
//! With `d = gcd(m, n)` and `E2` the 2-adic valuation:
//!
//! * Fibonacci type: `gcd(G'_m, G'_n) = G'_d`.
//! * Lucas type: `gcd(G*_m, G*_n) = G*_d` when `E2(m) = E2(n)`, otherwise
//!   `gcd(G*_d, G*_0)`, which is 1 or 2.
//! * Equivalent pair: `gcd(G'_m, G*_n) = G*_d` when `E2(m) > E2(n)`,
//!   otherwise `gcd(G*_d, G*_0)`.
//!
//! The closed forms never touch the oracle; [`compare`] runs both and records
//! whether they agree.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Kind, Sequence};
use crate::poly::Poly;

/// Which branch of which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    FibStrong,
    LucasEqualE2,
    LucasUnequalE2,
    MixedDominant,
    MixedOtherwise,
}

/// A closed-form gcd next to the oracle's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdReport {
    pub m: usize,
    pub n: usize,
    pub case_tag: CaseTag,
    pub closed_form: Poly,
    pub oracle: Poly,
    pub agrees: bool,
}

/// Largest `k` with `2^k | n`.
///
/// ```
/// use gfp::theorems::two_adic_valuation;
/// assert_eq!(two_adic_valuation(96), Ok(5));
/// assert!(two_adic_valuation(0).is_err());
/// ```
pub fn two_adic_valuation(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidArgument("E2(0) is undefined".into()));
    }
    Ok(n.trailing_zeros())
}

fn e2(n: usize) -> u32 {
    n.trailing_zeros()
}

fn positive(indices: &[usize]) -> Result<()> {
    if indices.contains(&0) {
        return Err(Error::InvalidArgument(
            "closed forms need indices >= 1".into(),
        ));
    }
    Ok(())
}

/// `G'_{gcd(m,n)}` for a Fibonacci-type sequence.
pub fn gcd_fib_closed(seq: &Sequence, m: usize, n: usize) -> Result<Poly> {
    seq.family().expect_kind(Kind::FibonacciType)?;
    positive(&[m, n])?;
    Ok(seq.term(m.gcd(&n)).normalized())
}

/// `gcd(G*_d, G*_0)` for a Lucas-type sequence: 2 exactly when `|p0| = 2`
/// and the content of `G*_d` is even, otherwise 1.
pub fn gcd_with_initial(seq: &Sequence, d: usize) -> Result<Poly> {
    seq.family().expect_kind(Kind::LucasType)?;
    positive(&[d])?;
    Ok(seq.term(d).gcd(&seq.term(0)))
}

/// Lucas-type closed form, decided by comparing `E2(m)` and `E2(n)`.
///
/// ```
/// use gfp::family::{builtin_family, Sequence};
/// use gfp::theorems::{gcd_lucas_closed, CaseTag};
/// let g = Sequence::new(builtin_family("paper-2x1-lucas").unwrap());
/// let (value, tag) = gcd_lucas_closed(&g, 3, 6).unwrap();
/// assert_eq!(value.to_string(), "2");
/// assert_eq!(tag, CaseTag::LucasUnequalE2);
/// ```
pub fn gcd_lucas_closed(seq: &Sequence, m: usize, n: usize) -> Result<(Poly, CaseTag)> {
    seq.family().expect_kind(Kind::LucasType)?;
    positive(&[m, n])?;
    let d = m.gcd(&n);
    if e2(m) == e2(n) {
        Ok((seq.term(d).normalized(), CaseTag::LucasEqualE2))
    } else {
        Ok((gcd_with_initial(seq, d)?, CaseTag::LucasUnequalE2))
    }
}

fn check_pair(fib: &Sequence, lucas: &Sequence) -> Result<()> {
    fib.family().expect_kind(Kind::FibonacciType)?;
    lucas.family().expect_kind(Kind::LucasType)?;
    if !fib.family().is_equivalent_to(lucas.family()) {
        return Err(Error::NotEquivalent(
            fib.family().name().to_string(),
            lucas.family().name().to_string(),
        ));
    }
    Ok(())
}

/// `gcd(G'_m, G*_n)` for an equivalent pair; `m` indexes the Fibonacci-type
/// side. `m = n` falls in the non-dominant branch.
pub fn gcd_mixed_closed(
    fib: &Sequence,
    lucas: &Sequence,
    m: usize,
    n: usize,
) -> Result<(Poly, CaseTag)> {
    check_pair(fib, lucas)?;
    positive(&[m, n])?;
    let d = m.gcd(&n);
    if e2(m) > e2(n) {
        Ok((lucas.term(d).normalized(), CaseTag::MixedDominant))
    } else {
        Ok((gcd_with_initial(lucas, d)?, CaseTag::MixedOtherwise))
    }
}

/// Brute-force `gcd(A_m, B_n)` in `Z[x]`.
pub fn oracle_gcd(a: &Sequence, b: &Sequence, m: usize, n: usize) -> Poly {
    a.term(m).gcd(&b.term(n))
}

/// Runs the oracle and packages it next to a closed-form value.
pub fn compare(
    a: &Sequence,
    b: &Sequence,
    m: usize,
    n: usize,
    closed: Poly,
    case_tag: CaseTag,
) -> GcdReport {
    let oracle = oracle_gcd(a, b, m, n);
    GcdReport {
        m,
        n,
        case_tag,
        agrees: closed == oracle,
        closed_form: closed,
        oracle,
    }
}

/// Smallest `k <= bound` with `gcd(G*_k, G*_0) = 2`, if any.
///
/// ```
/// use gfp::family::{builtin_family, Sequence};
/// use gfp::theorems::min_even_index;
/// let g = Sequence::new(builtin_family("paper-2x1-lucas").unwrap());
/// assert_eq!(min_even_index(&g, 12).unwrap(), Some(3));
/// let lucas = Sequence::new(builtin_family("lucas").unwrap());
/// assert_eq!(min_even_index(&lucas, 12).unwrap(), None);
/// ```
pub fn min_even_index(seq: &Sequence, bound: usize) -> Result<Option<usize>> {
    seq.family().expect_kind(Kind::LucasType)?;
    let two = Poly::constant(2);
    for k in 1..=bound {
        if gcd_with_initial(seq, k)? == two {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::builtin_family;

    fn seq(name: &str) -> Sequence {
        Sequence::new(builtin_family(name).unwrap())
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn valuation() {
        assert_eq!(two_adic_valuation(12), Ok(2));
        assert_eq!(two_adic_valuation(7), Ok(0));
        assert_eq!(two_adic_valuation(96), Ok(5));
        assert!(two_adic_valuation(0).is_err());
    }

    #[test]
    fn fibonacci_type_examples() {
        let fib = seq("fibonacci");
        assert_eq!(gcd_fib_closed(&fib, 4, 6).unwrap(), p("x"));
        assert_eq!(oracle_gcd(&fib, &fib, 4, 6), p("x"));
        assert_eq!(
            gcd_fib_closed(&fib, 7, 7).unwrap(),
            fib.term(7).normalized()
        );
        assert_eq!(gcd_fib_closed(&seq("pell"), 3, 5).unwrap(), Poly::one());
        assert!(matches!(
            gcd_fib_closed(&seq("lucas"), 1, 2),
            Err(Error::WrongKind { .. })
        ));
        assert!(gcd_fib_closed(&fib, 0, 2).is_err());
    }

    #[test]
    fn lucas_type_examples() {
        let lucas = seq("lucas");
        assert_eq!(
            gcd_lucas_closed(&lucas, 3, 9).unwrap(),
            (p("x^3 + 3x"), CaseTag::LucasEqualE2)
        );
        assert_eq!(
            gcd_lucas_closed(&lucas, 2, 4).unwrap(),
            (Poly::one(), CaseTag::LucasUnequalE2)
        );
        let g = seq("paper-2x1-lucas");
        assert_eq!(
            gcd_lucas_closed(&g, 3, 6).unwrap(),
            (p("2"), CaseTag::LucasUnequalE2)
        );
        assert_eq!(oracle_gcd(&g, &g, 3, 6), p("2"));
    }

    #[test]
    fn with_initial_examples() {
        assert_eq!(gcd_with_initial(&seq("lucas"), 3).unwrap(), Poly::one());
        for d in 1..10 {
            assert_eq!(
                gcd_with_initial(&seq("chebyshev1"), d).unwrap(),
                Poly::one()
            );
        }
        assert_eq!(
            gcd_with_initial(&seq("paper-2x1-lucas"), 3).unwrap(),
            p("2")
        );
        assert!(gcd_with_initial(&seq("fibonacci"), 3).is_err());
    }

    #[test]
    fn mixed_examples() {
        let (fib, lucas) = (seq("fibonacci"), seq("lucas"));
        assert_eq!(
            gcd_mixed_closed(&fib, &lucas, 4, 2).unwrap(),
            (p("x^2 + 2"), CaseTag::MixedDominant)
        );
        assert_eq!(
            gcd_mixed_closed(&fib, &lucas, 3, 6).unwrap(),
            (Poly::one(), CaseTag::MixedOtherwise)
        );
        assert_eq!(
            gcd_mixed_closed(&fib, &lucas, 3, 3).unwrap(),
            (Poly::one(), CaseTag::MixedOtherwise)
        );
        assert_eq!(oracle_gcd(&fib, &lucas, 3, 3), Poly::one());
        assert!(matches!(
            gcd_mixed_closed(&fib, &seq("pell-lucas-prime"), 1, 1),
            Err(Error::NotEquivalent(..))
        ));
        assert!(matches!(
            gcd_mixed_closed(&lucas, &fib, 1, 1),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let fib = seq("fibonacci");
        assert_eq!(oracle_gcd(&fib, &fib, 4, 6), p("x"));
        let lucas = seq("lucas");
        for n in 0..8 {
            assert_eq!(oracle_gcd(&lucas, &lucas, 0, n), p("2").gcd(&lucas.term(n)));
        }
        let fermat = seq("fermat");
        assert_eq!(oracle_gcd(&fermat, &fermat, 2, 3), Poly::one());
        // G'_0 = 0 so the gcd is the other term
        assert_eq!(oracle_gcd(&fib, &fib, 0, 5), fib.term(5).normalized());
    }

    #[test]
    fn compare_flags_disagreement() {
        let lucas = seq("lucas");
        let (closed, tag) = gcd_lucas_closed(&lucas, 3, 9).unwrap();
        assert!(compare(&lucas, &lucas, 3, 9, closed, tag).agrees);
        // the equal-E2 answer used where E2 differs
        let wrong = lucas.term(2).normalized();
        let r = compare(&lucas, &lucas, 2, 4, wrong, CaseTag::LucasEqualE2);
        assert!(!r.agrees);
        assert_eq!(r.oracle, Poly::one());
        let fib = seq("fibonacci");
        let r = compare(
            &fib,
            &fib,
            5,
            5,
            gcd_fib_closed(&fib, 5, 5).unwrap(),
            CaseTag::FibStrong,
        );
        assert!(r.agrees);
        assert_eq!(r.closed_form, *fib.term(5));
    }

    #[test]
    fn report_json() {
        let fib = seq("fibonacci");
        let r = compare(&fib, &fib, 4, 6, p("x"), CaseTag::FibStrong);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"m":4,"n":6,"case_tag":"FibStrong","closed_form":["0","1"],"oracle":["0","1"],"agrees":true}"#
        );
    }

    #[test]
    fn min_even_index_examples() {
        assert_eq!(
            min_even_index(&seq("paper-2x1-lucas"), 12).unwrap(),
            Some(3)
        );
        assert_eq!(min_even_index(&seq("paper-2x1-lucas"), 2).unwrap(), None);
        assert_eq!(min_even_index(&seq("lucas"), 12).unwrap(), None);
        assert_eq!(min_even_index(&seq("chebyshev1"), 12).unwrap(), None);
        assert!(min_even_index(&seq("pell"), 12).is_err());
    }
}
