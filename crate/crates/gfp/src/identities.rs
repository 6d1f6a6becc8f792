//! Checkable identities and divisibility facts for GFP families.
//!
//! Each check instantiates one identity for concrete indices, evaluates both
//! sides with exact arithmetic and returns an [`IdentityReport`].
//!
//! Checks that assert divisibility put the extracted quotient in
//! [`IdentityReport::witness`]. Checks that assert a biconditional encode each
//! side as the constant polynomial 1 (true) or 0 (false), so that a report
//! passes exactly when `lhs == rhs` in every case.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{builtin_family, Family, Kind, Sequence, BUILTIN_PAIRS};
use crate::poly::Poly;

/// One instantiated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub family: String,
    pub params: Vec<usize>,
    pub pass: bool,
    pub lhs: Poly,
    pub rhs: Poly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Poly>,
}

impl IdentityReport {
    fn new(id: &str, family: &str, params: &[usize], lhs: Poly, rhs: Poly) -> Self {
        IdentityReport {
            identity_id: id.to_string(),
            family: family.to_string(),
            params: params.to_vec(),
            pass: lhs == rhs,
            lhs,
            rhs,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Option<Poly>) -> Self {
        self.witness = witness;
        self
    }
}

/// Selector for a group of related checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Convolution,
    Addition,
    Discriminant,
    LucasAddition,
    Dic2Mod,
    Dic2Pow2,
    DividesIff,
    OddDivisor,
    NeighborGcd,
    MixedShift,
    AdditionCross,
    DiscriminantCoprime,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Convolution,
        Identity::Addition,
        Identity::Discriminant,
        Identity::LucasAddition,
        Identity::Dic2Mod,
        Identity::Dic2Pow2,
        Identity::DividesIff,
        Identity::OddDivisor,
        Identity::NeighborGcd,
        Identity::MixedShift,
        Identity::AdditionCross,
        Identity::DiscriminantCoprime,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::Convolution => "convolution",
            Identity::Addition => "addition",
            Identity::Discriminant => "discriminant",
            Identity::LucasAddition => "lucas-addition",
            Identity::Dic2Mod => "dic2-mod",
            Identity::Dic2Pow2 => "dic2-pow2",
            Identity::DividesIff => "divides-iff",
            Identity::OddDivisor => "odd-divisor",
            Identity::NeighborGcd => "neighbor-gcd",
            Identity::MixedShift => "mixed-shift",
            Identity::AdditionCross => "addition-cross",
            Identity::DiscriminantCoprime => "discriminant-coprime",
        }
    }

    /// Parameter tuples swept for this identity up to `max_index`.
    ///
    /// Indices range over `0..=max_index` (or `1..=max_index` where the
    /// identity needs positive indices). `dic2-pow2` sweeps `(k, r)` with
    /// `2^k * r <= max_index^2`.
    pub fn instances(self, max_index: usize) -> Vec<Vec<usize>> {
        let n = max_index;
        let mut out = Vec::new();
        match self {
            Identity::Convolution | Identity::Discriminant => {
                for a in 0..=n {
                    for b in 0..=n {
                        out.push(vec![a, b]);
                    }
                }
            }
            Identity::Addition | Identity::LucasAddition | Identity::AdditionCross => {
                for b in 0..=n {
                    for a in 0..=b {
                        out.push(vec![a, b]);
                    }
                }
            }
            Identity::Dic2Mod => {
                for m in 1..=n {
                    for q in 1..=n {
                        for r in 0..m {
                            out.push(vec![m, q, r]);
                        }
                    }
                }
            }
            Identity::Dic2Pow2 => {
                let cap = (n * n).max(4);
                let mut k = 2;
                while 1usize << k <= cap {
                    for r in 1..=n.max(1) {
                        if (1usize << k) * r <= cap {
                            out.push(vec![k, r]);
                        }
                    }
                    k += 1;
                }
            }
            Identity::DividesIff | Identity::MixedShift => {
                for a in 1..=n {
                    for b in 1..=n {
                        out.push(vec![a, b]);
                    }
                }
            }
            Identity::OddDivisor => {
                for m in 1..=n {
                    for q in (1..=m).step_by(2) {
                        if m % q == 0 && (q == 1 || !m.is_power_of_two()) {
                            out.push(vec![m, q]);
                        }
                    }
                }
            }
            Identity::NeighborGcd => {
                for a in 1..=n {
                    for b in 1..=n {
                        if (1..=2).contains(&a.abs_diff(b)) {
                            out.push(vec![a, b]);
                        }
                    }
                }
            }
            Identity::DiscriminantCoprime => {
                for a in 1..=n {
                    out.push(vec![a]);
                }
            }
        }
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

fn truth(b: bool) -> Poly {
    Poly::constant(i64::from(b))
}

/// `(-1)^sign * g^e`.
fn signed_power(g: &Poly, sign: usize, e: usize) -> Poly {
    let p = g.pow(e as u64);
    if sign % 2 == 1 {
        -p
    } else {
        p
    }
}

fn alpha_poly(lucas: &Sequence) -> Result<Poly> {
    Ok(Poly::constant(lucas.family().alpha()?))
}

fn expect_pair(fib: &Sequence, lucas: &Sequence) -> Result<()> {
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

fn pair_label(fib: &Sequence, lucas: &Sequence) -> String {
    format!("{}/{}", fib.family().name(), lucas.family().name())
}

fn ordered(m: usize, n: usize) -> Result<()> {
    if m > n {
        return Err(Error::IndexOrder(format!("need m <= n, got m={m}, n={n}")));
    }
    Ok(())
}

/// `G'_{m+n+1} = G'_{m+1} G'_{n+1} + g G'_m G'_n`.
pub fn check_convolution(fib: &Sequence, m: usize, n: usize) -> Result<IdentityReport> {
    let f = fib.family();
    f.expect_kind(Kind::FibonacciType)?;
    let t = |k| fib.term(k);
    let lhs = (*t(m + n + 1)).clone();
    let rhs = &(&*t(m + 1) * &*t(n + 1)) + &(f.g() * &(&*t(m) * &*t(n)));
    Ok(IdentityReport::new(
        "convolution",
        f.name(),
        &[m, n],
        lhs,
        rhs,
    ))
}

/// For `n >= m`:
/// `G'_{n+m} = α G'_n G*_m - (-g)^m G'_{n-m}` and
/// `G'_{n+m} = α G'_m G*_n + (-g)^m G'_{n-m}`.
pub fn check_addition_laws(
    fib: &Sequence,
    lucas: &Sequence,
    m: usize,
    n: usize,
) -> Result<[IdentityReport; 2]> {
    expect_pair(fib, lucas)?;
    ordered(m, n)?;
    let alpha = alpha_poly(lucas)?;
    let (f, l) = (|k| fib.term(k), |k| lucas.term(k));
    let neg_g_pow = signed_power(fib.family().g(), m, m);
    let tail = &neg_g_pow * &*f(n - m);
    let lhs = (*f(n + m)).clone();
    let minus = &(&alpha * &(&*f(n) * &*l(m))) - &tail;
    let plus = &(&alpha * &(&*f(m) * &*l(n))) + &tail;
    let label = pair_label(fib, lucas);
    Ok([
        IdentityReport::new("addition-minus", &label, &[m, n], lhs.clone(), minus),
        IdentityReport::new("addition-plus", &label, &[m, n], lhs, plus),
    ])
}

/// `(d^2 + 4g) G'_{m+n+1} = α^2 (G*_{m+1} G*_{n+1} + g G*_m G*_n)` and
/// `G*_{m+n+2} = α G*_{m+1} G*_{n+1} + g (α G*_m G*_n - G*_{m+n})`.
pub fn check_discriminant_laws(
    fib: &Sequence,
    lucas: &Sequence,
    m: usize,
    n: usize,
) -> Result<[IdentityReport; 2]> {
    expect_pair(fib, lucas)?;
    let alpha = alpha_poly(lucas)?;
    let g = lucas.family().g();
    let l = |k| lucas.term(k);
    let outer = &*l(m + 1) * &*l(n + 1);
    let inner = &*l(m) * &*l(n);
    let label = pair_label(fib, lucas);

    let lhs1 = &fib.family().discriminant() * &*fib.term(m + n + 1);
    let rhs1 = &(&alpha * &alpha) * &(&outer + &(g * &inner));
    let lhs2 = (*l(m + n + 2)).clone();
    let rhs2 = &(&alpha * &outer) + &(g * &(&(&alpha * &inner) - &*l(m + n)));
    Ok([
        IdentityReport::new("discriminant-fib", &label, &[m, n], lhs1, rhs1),
        IdentityReport::new("discriminant-lucas", &label, &[m, n], lhs2, rhs2),
    ])
}

/// For `m <= n`: `G*_{m+n} = α G*_m G*_n + (-1)^{m+1} g^m G*_{n-m}`.
pub fn check_lucas_addition(lucas: &Sequence, m: usize, n: usize) -> Result<IdentityReport> {
    let f = lucas.family();
    f.expect_kind(Kind::LucasType)?;
    ordered(m, n)?;
    let alpha = alpha_poly(lucas)?;
    let l = |k| lucas.term(k);
    let lhs = (*l(m + n)).clone();
    let rhs = &(&alpha * &(&*l(m) * &*l(n))) + &(&signed_power(f.g(), m + 1, m) * &*l(n - m));
    Ok(IdentityReport::new(
        "lucas-addition",
        f.name(),
        &[m, n],
        lhs,
        rhs,
    ))
}

/// The correction term `C` with `G*_{mq+r} ≡ C (mod G*_m)`, `t = ⌈q/2⌉`:
/// `(-1)^{m(t-1)+t+r} g^{(t-1)m+r} G*_{m-r}` for odd `q`,
/// `(-1)^{(m+1)t} g^{mt} G*_r` for even `q`.
pub fn mod_gm_correction(lucas: &Sequence, m: usize, q: usize, r: usize) -> Poly {
    let g = lucas.family().g();
    let t = q.div_ceil(2);
    if q % 2 == 1 {
        &signed_power(g, m * (t - 1) + t + r, (t - 1) * m + r) * &*lucas.term(m - r)
    } else {
        &signed_power(g, (m + 1) * t, m * t) * &*lucas.term(r)
    }
}

/// Extracts `T` with `G*_{mq+r} = G*_m T + C`, `C` from [`mod_gm_correction`].
///
/// The report's `lhs` is `G*_{mq+r}`; `rhs` is `G*_m T + C` when the
/// division is exact and `C` alone otherwise.
pub fn decompose_mod_gm(lucas: &Sequence, m: usize, q: usize, r: usize) -> Result<IdentityReport> {
    let f = lucas.family();
    f.expect_kind(Kind::LucasType)?;
    if m == 0 || q == 0 {
        return Err(Error::InvalidArgument("m and q must be positive".into()));
    }
    if r >= m {
        return Err(Error::IndexOrder(format!("need r < m, got r={r}, m={m}")));
    }
    let correction = mod_gm_correction(lucas, m, q, r);
    let target = lucas.term(m * q + r);
    let gm = lucas.term(m);
    let witness = (&*target - &correction).exact_div(&gm).ok();
    let rhs = match &witness {
        Some(t) => &(&*gm * t) + &correction,
        None => correction,
    };
    Ok(
        IdentityReport::new("dic2-mod", f.name(), &[m, q, r], (*target).clone(), rhs)
            .with_witness(witness),
    )
}

/// Extracts `T` with `G*_{2^k r} = G*_r T + (2/α) g^{2^{k-1} r}`, `k >= 2`.
pub fn decompose_pow2(lucas: &Sequence, k: usize, r: usize) -> Result<IdentityReport> {
    let f = lucas.family();
    f.expect_kind(Kind::LucasType)?;
    if k < 2 {
        return Err(Error::IndexOrder(format!("need k >= 2, got {k}")));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let two_over_alpha = BigInt::from(2 / f.alpha()?);
    let correction = f
        .g()
        .pow((1u64 << (k - 1)) * r as u64)
        .scale(&two_over_alpha);
    let target = lucas.term((1usize << k) * r);
    let gr = lucas.term(r);
    let witness = (&*target - &correction).exact_div(&gr).ok();
    let rhs = match &witness {
        Some(t) => &(&*gr * t) + &correction,
        None => correction,
    };
    Ok(
        IdentityReport::new("dic2-pow2", f.name(), &[k, r], (*target).clone(), rhs)
            .with_witness(witness),
    )
}

/// `G'_m | G'_n  ⇔  m | n`, both sides encoded as 0/1.
///
/// When `m > 1` and `G'_m` is a unit (for instance `G'_2 = d = 1`) the
/// left side holds trivially and the biconditional has no content; such
/// instances are rejected with [`Error::Degenerate`].
pub fn divides_iff(fib: &Sequence, m: usize, n: usize) -> Result<IdentityReport> {
    let f = fib.family();
    f.expect_kind(Kind::FibonacciType)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let gm = fib.term(m);
    if m > 1 && gm.is_unit() {
        return Err(Error::Degenerate(format!(
            "{}: G'_{m} = {gm} is a unit",
            f.name()
        )));
    }
    let quotient = fib.term(n).exact_div(&gm).ok();
    Ok(IdentityReport::new(
        "divides-iff",
        f.name(),
        &[m, n],
        truth(quotient.is_some()),
        truth(n.is_multiple_of(m)),
    )
    .with_witness(quotient))
}

/// `G*_{m/q} | G*_m` for an odd divisor `q` of `m` (`m` not a power of two
/// unless `q = 1`). `rhs` is `G*_{m/q} T` when the quotient exists.
pub fn odd_divisor_divides(lucas: &Sequence, m: usize, q: usize) -> Result<IdentityReport> {
    let f = lucas.family();
    f.expect_kind(Kind::LucasType)?;
    if m == 0 || q.is_multiple_of(2) || !m.is_multiple_of(q) {
        return Err(Error::BadDivisor(format!(
            "{q} is not an odd divisor of {m}"
        )));
    }
    if q > 1 && m.is_power_of_two() {
        return Err(Error::BadDivisor(format!("{m} is a power of two")));
    }
    let big = lucas.term(m);
    let small = lucas.term(m / q);
    let quotient = big.exact_div(&small).ok();
    let rhs = match &quotient {
        Some(t) => &*small * t,
        None => (*small).clone(),
    };
    Ok(
        IdentityReport::new("odd-divisor", f.name(), &[m, q], (*big).clone(), rhs)
            .with_witness(quotient),
    )
}

/// `gcd(G_m, G_n)` for `0 < |m - n| <= 2`: `G*_1` when both indices are odd
/// (Lucas type), `G'_2` when both are even (Fibonacci type), 1 otherwise.
pub fn neighbor_gcd(seq: &Sequence, m: usize, n: usize) -> Result<IdentityReport> {
    if !(1..=2).contains(&m.abs_diff(n)) || m == 0 || n == 0 {
        return Err(Error::IndexOrder(format!(
            "need positive indices with 0 < |m-n| <= 2, got m={m}, n={n}"
        )));
    }
    let f = seq.family();
    let predicted = match f.kind() {
        Kind::LucasType if m % 2 == 1 && n % 2 == 1 => seq.term(1).normalized(),
        Kind::FibonacciType if m.is_multiple_of(2) && n.is_multiple_of(2) => {
            seq.term(2).normalized()
        }
        _ => Poly::one(),
    };
    let lhs = seq.term(m).gcd(&seq.term(n));
    Ok(IdentityReport::new(
        "neighbor-gcd",
        f.name(),
        &[m, n],
        lhs,
        predicted,
    ))
}

/// Shifted mixed gcds; each report compares two oracle gcds.
///
/// * always: `gcd(G'_{m+n+1}, G*_n) = gcd(G*_{m+1}, G*_n)`
/// * `m > n`: `gcd(G'_{m-n+1}, G*_n) = gcd(G*_{m+1}, G*_n)`
/// * `m < n`: `gcd(G'_{n-m+1}, G*_n) = gcd(G*_{m-1}, G*_n)`
pub fn mixed_shift_gcd(
    fib: &Sequence,
    lucas: &Sequence,
    m: usize,
    n: usize,
) -> Result<Vec<IdentityReport>> {
    expect_pair(fib, lucas)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let label = pair_label(fib, lucas);
    let ln = lucas.term(n);
    let gcd_fib = |k: usize| fib.term(k).gcd(&ln);
    let gcd_lucas = |k: usize| lucas.term(k).gcd(&ln);
    let mut out = vec![IdentityReport::new(
        "mixed-shift-1",
        &label,
        &[m, n],
        gcd_fib(m + n + 1),
        gcd_lucas(m + 1),
    )];
    if m > n {
        out.push(IdentityReport::new(
            "mixed-shift-2",
            &label,
            &[m, n],
            gcd_fib(m - n + 1),
            gcd_lucas(m + 1),
        ));
    }
    if m < n {
        out.push(IdentityReport::new(
            "mixed-shift-3",
            &label,
            &[m, n],
            gcd_fib(n - m + 1),
            gcd_lucas(m - 1),
        ));
    }
    Ok(out)
}

/// For `m <= n`: `2 (-g)^m G'_{n-m} = α (G'_n G*_m - G'_m G*_n)`, the
/// difference of the two addition laws.
pub fn check_addition_cross(
    fib: &Sequence,
    lucas: &Sequence,
    m: usize,
    n: usize,
) -> Result<IdentityReport> {
    expect_pair(fib, lucas)?;
    ordered(m, n)?;
    let alpha = alpha_poly(lucas)?;
    let (f, l) = (|k| fib.term(k), |k| lucas.term(k));
    let lhs = (&signed_power(fib.family().g(), m, m) * &*f(n - m)).scale(&BigInt::from(2));
    let rhs = &alpha * &(&(&*f(n) * &*l(m)) - &(&*f(m) * &*l(n)));
    Ok(IdentityReport::new(
        "addition-cross",
        &pair_label(fib, lucas),
        &[m, n],
        lhs,
        rhs,
    ))
}

/// `gcd(d^2 + 4g, G*_n) = 1` for `n >= 1`.
pub fn discriminant_coprime(lucas: &Sequence, n: usize) -> Result<IdentityReport> {
    let f = lucas.family();
    f.expect_kind(Kind::LucasType)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let lhs = f.discriminant().gcd(&lucas.term(n));
    Ok(IdentityReport::new(
        "discriminant-coprime",
        f.name(),
        &[n],
        lhs,
        Poly::one(),
    ))
}

/// An equivalent Fibonacci/Lucas pair with shared term caches.
#[derive(Debug)]
pub struct Pair {
    pub fib: Sequence,
    pub lucas: Sequence,
}

impl Pair {
    pub fn new(fib: Family, lucas: Family) -> Result<Pair> {
        let (fib, lucas) = (Sequence::new(fib), Sequence::new(lucas));
        expect_pair(&fib, &lucas)?;
        Ok(Pair { fib, lucas })
    }

    /// `family` together with its equivalent partner, in either order.
    pub fn around(family: Family) -> Result<Pair> {
        let partner = family.equivalent_family()?;
        match family.kind() {
            Kind::FibonacciType => Pair::new(family, partner),
            Kind::LucasType => Pair::new(partner, family),
        }
    }

    /// The seven built-in equivalent pairs.
    pub fn builtins() -> Vec<Pair> {
        BUILTIN_PAIRS
            .iter()
            .map(|&(f, l)| {
                Pair::new(
                    builtin_family(f).expect("registry"),
                    builtin_family(l).expect("registry"),
                )
                .expect("registry pairs are equivalent")
            })
            .collect()
    }

    pub fn label(&self) -> String {
        pair_label(&self.fib, &self.lucas)
    }
}

fn run_instance(pair: &Pair, identity: Identity, params: &[usize]) -> Result<Vec<IdentityReport>> {
    let (fib, lucas) = (&pair.fib, &pair.lucas);
    let one = |r: Result<IdentityReport>| r.map(|r| vec![r]);
    match (identity, params) {
        (Identity::Convolution, &[m, n]) => one(check_convolution(fib, m, n)),
        (Identity::Addition, &[m, n]) => check_addition_laws(fib, lucas, m, n).map(Vec::from),
        (Identity::Discriminant, &[m, n]) => {
            check_discriminant_laws(fib, lucas, m, n).map(Vec::from)
        }
        (Identity::LucasAddition, &[m, n]) => one(check_lucas_addition(lucas, m, n)),
        (Identity::Dic2Mod, &[m, q, r]) => one(decompose_mod_gm(lucas, m, q, r)),
        (Identity::Dic2Pow2, &[k, r]) => one(decompose_pow2(lucas, k, r)),
        (Identity::DividesIff, &[m, n]) => match divides_iff(fib, m, n) {
            Err(Error::Degenerate(_)) => Ok(Vec::new()),
            other => one(other),
        },
        (Identity::OddDivisor, &[m, q]) => one(odd_divisor_divides(lucas, m, q)),
        (Identity::NeighborGcd, &[m, n]) => {
            Ok(vec![neighbor_gcd(fib, m, n)?, neighbor_gcd(lucas, m, n)?])
        }
        (Identity::MixedShift, &[m, n]) => mixed_shift_gcd(fib, lucas, m, n),
        (Identity::AdditionCross, &[m, n]) => one(check_addition_cross(fib, lucas, m, n)),
        (Identity::DiscriminantCoprime, &[n]) => one(discriminant_coprime(lucas, n)),
        _ => Err(Error::InvalidArgument(format!(
            "{identity} does not take parameters {params:?}"
        ))),
    }
}

/// Sweeps `identities` over every pair up to `max_index`.
///
/// Instances run in parallel; the result is ordered by pair, then identity,
/// then parameter tuple, whatever the scheduling.
pub fn run_catalog(
    pairs: &[Pair],
    identities: &[Identity],
    max_index: usize,
) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for pair in pairs {
        for &identity in identities {
            let batches = identity
                .instances(max_index)
                .into_par_iter()
                .map(|params| run_instance(pair, identity, &params))
                .collect::<Result<Vec<_>>>()?;
            out.extend(batches.into_iter().flatten());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(name: &str) -> Sequence {
        Sequence::new(builtin_family(name).unwrap())
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn convolution_examples() {
        let fib = seq("fibonacci");
        let r = check_convolution(&fib, 1, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, p("x^2 + 1"));
        assert!(check_convolution(&fib, 2, 3).unwrap().pass);
        let r = check_convolution(&fib, 0, 0).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (Poly::one(), true));
        assert!(check_convolution(&seq("lucas"), 1, 1).is_err());
    }

    #[test]
    fn addition_examples() {
        let (fib, lucas) = (seq("fibonacci"), seq("lucas"));
        let [minus, plus] = check_addition_laws(&fib, &lucas, 2, 3).unwrap();
        assert!(minus.pass && plus.pass);
        assert_eq!(minus.lhs, p("x^4 + 3x^2 + 1"));
        for m in 0..6 {
            let [a, b] = check_addition_laws(&fib, &lucas, m, m).unwrap();
            assert!(a.pass && b.pass);
        }
        let [a, b] = check_addition_laws(&seq("pell"), &seq("pell-lucas-prime"), 1, 4).unwrap();
        assert!(a.pass && b.pass);
        assert!(matches!(
            check_addition_laws(&fib, &lucas, 3, 2),
            Err(Error::IndexOrder(_))
        ));
        assert!(matches!(
            check_addition_laws(&fib, &seq("chebyshev1"), 1, 2),
            Err(Error::NotEquivalent(..))
        ));
    }

    #[test]
    fn discriminant_examples() {
        let (fib, lucas) = (seq("fibonacci"), seq("lucas"));
        let [a, b] = check_discriminant_laws(&fib, &lucas, 0, 0).unwrap();
        assert_eq!((a.lhs.clone(), a.pass), (p("x^2 + 4"), true));
        assert_eq!((b.lhs.clone(), b.pass), (p("x^2 + 2"), true));
        let [a, b] = check_discriminant_laws(&seq("fermat"), &seq("fermat-lucas"), 1, 2).unwrap();
        assert!(a.pass && b.pass);
    }

    #[test]
    fn lucas_addition_examples() {
        let lucas = seq("lucas");
        let r = check_lucas_addition(&lucas, 1, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (p("x^2 + 2"), true));
        assert!(check_lucas_addition(&lucas, 2, 5).unwrap().pass);
        assert!(check_lucas_addition(&seq("chebyshev1"), 1, 3).unwrap().pass);
        assert!(matches!(
            check_lucas_addition(&lucas, 4, 3),
            Err(Error::IndexOrder(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let lucas = seq("lucas");
        let r = decompose_mod_gm(&lucas, 2, 1, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness, Some(p("x")));
        assert_eq!(mod_gm_correction(&lucas, 2, 1, 1), p("x"));
        let r = decompose_mod_gm(&lucas, 3, 2, 1).unwrap();
        assert!(r.pass && r.witness.is_some());
        assert!(decompose_mod_gm(&seq("chebyshev1"), 2, 1, 0).unwrap().pass);
        assert!(matches!(
            decompose_mod_gm(&lucas, 2, 1, 2),
            Err(Error::IndexOrder(_))
        ));

        let r = decompose_pow2(&lucas, 2, 1).unwrap();
        assert_eq!((r.witness.clone(), r.pass), (Some(p("x^3 + 4x")), true));
        assert!(decompose_pow2(&seq("chebyshev1"), 2, 1).unwrap().pass);
        assert!(decompose_pow2(&lucas, 3, 1).unwrap().pass);
        assert!(matches!(
            decompose_pow2(&lucas, 1, 1),
            Err(Error::IndexOrder(_))
        ));
    }

    #[test]
    fn divisibility_examples() {
        let fib = seq("fibonacci");
        let r = divides_iff(&fib, 3, 9).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (Poly::one(), true));
        let r = divides_iff(&fib, 4, 6).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.pass, r.witness.clone()),
            (Poly::zero(), true, None)
        );
        for n in 1..8 {
            assert!(divides_iff(&fib, 1, n).unwrap().pass);
        }
        // G'_2 = d = 1 for Jacobsthal
        assert!(matches!(
            divides_iff(&seq("jacobsthal"), 2, 3),
            Err(Error::Degenerate(_))
        ));

        let lucas = seq("lucas");
        let r = odd_divisor_divides(&lucas, 6, 3).unwrap();
        assert_eq!(lucas.term(6).to_string(), "x^6 + 6x^4 + 9x^2 + 2");
        assert!(r.pass);
        assert_eq!(r.witness, Some(p("x^4 + 4x^2 + 1")));
        assert!(odd_divisor_divides(&lucas, 8, 1).unwrap().pass);
        assert!(odd_divisor_divides(&lucas, 9, 3).unwrap().pass);
        assert!(matches!(
            odd_divisor_divides(&lucas, 9, 2),
            Err(Error::BadDivisor(_))
        ));
        assert!(matches!(
            odd_divisor_divides(&lucas, 10, 3),
            Err(Error::BadDivisor(_))
        ));
    }

    #[test]
    fn neighbor_examples() {
        let lucas = seq("lucas");
        let r = neighbor_gcd(&lucas, 3, 5).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (p("x"), true));
        let r = neighbor_gcd(&lucas, 2, 4).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (Poly::one(), true));
        let r = neighbor_gcd(&seq("fibonacci"), 4, 6).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (p("x"), true));
        assert!(matches!(
            neighbor_gcd(&lucas, 3, 6),
            Err(Error::IndexOrder(_))
        ));
        assert!(matches!(
            neighbor_gcd(&lucas, 3, 3),
            Err(Error::IndexOrder(_))
        ));
    }

    #[test]
    fn mixed_shift_examples() {
        let (fib, lucas) = (seq("fibonacci"), seq("lucas"));
        let r = mixed_shift_gcd(&fib, &lucas, 2, 3).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|r| r.pass));
        let r = mixed_shift_gcd(&fib, &lucas, 4, 2).unwrap();
        assert_eq!(r[1].identity_id, "mixed-shift-2");
        assert_eq!(r[1].lhs, fib.term(3).gcd(&lucas.term(2)));
        assert!(r[1].pass);
        let r = mixed_shift_gcd(&fib, &lucas, 1, 3).unwrap();
        assert_eq!(r[1].identity_id, "mixed-shift-3");
        assert_eq!(r[1].rhs, lucas.term(0).gcd(&lucas.term(3)));
        assert!(r[1].pass);
        assert_eq!(mixed_shift_gcd(&fib, &lucas, 3, 3).unwrap().len(), 1);
    }

    #[test]
    fn cross_and_coprime() {
        let (fib, lucas) = (seq("fibonacci"), seq("lucas"));
        for n in 0..6 {
            for m in 0..=n {
                assert!(check_addition_cross(&fib, &lucas, m, n).unwrap().pass);
            }
        }
        for n in 1..10 {
            assert!(
                discriminant_coprime(&seq("pell-lucas-prime"), n)
                    .unwrap()
                    .pass
            );
        }
    }

    #[test]
    fn identity_ids_round_trip() {
        for i in Identity::ALL {
            assert_eq!(i.id().parse::<Identity>().unwrap(), i);
        }
        assert_eq!(
            "nope".parse::<Identity>(),
            Err(Error::UnknownIdentity("nope".into()))
        );
    }

    #[test]
    fn catalog_is_ordered_and_passes_small() {
        let pairs = Pair::builtins();
        let a = run_catalog(&pairs[..2], &Identity::ALL, 5).unwrap();
        let b = run_catalog(&pairs[..2], &Identity::ALL, 5).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.pass), "{:?}", a.iter().find(|r| !r.pass));
    }

    #[test]
    fn report_json_shape() {
        let r = decompose_pow2(&seq("lucas"), 2, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"identity_id":"dic2-pow2","family":"lucas","params":[2,1],"pass":true,"lhs":["2","0","4","0","1"],"rhs":["2","0","4","0","1"],"witness":["0","4","0","1"]}"#
        );
        let r = check_convolution(&seq("fibonacci"), 0, 0).unwrap();
        assert!(!serde_json::to_string(&r).unwrap().contains("witness"));
    }
}
