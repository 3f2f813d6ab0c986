//! Exact scalars: rationals, Laurent polynomials in `v`, and the cyclotomic
//! field `Q(q)` for a root of unity `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Encodes a rational as a `[numerator, denominator]` pair of machine integers.
pub fn rational_to_pair(r: &Rational) -> Result<(i64, i64)> {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Error::Decode(format!("rational {r} does not fit in 64 bits"))),
    }
}

pub fn rational_from_pair(n: i64, d: i64) -> Result<Rational> {
    if d <= 0 {
        return Err(Error::Decode(format!("denominator must be positive, got {d}")));
    }
    Ok(rat(n, d))
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials

/// An element of `Q[v, v^{-1}]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(e, x)| (e, x * c)))
    }

    pub fn shift(&self, by: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + by, c.clone())).collect() }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Value at `v = 1` (the ungraded dimension for Poincaré polynomials).
    pub fn at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Exact division. Returns `(quotient, remainder)` where the remainder
    /// has all exponents below `min_exp(divisor) + (max - min)` window.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        let (dlo, dhi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Internal("division by zero Laurent polynomial".into())),
        };
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let (Some(rlo), Some(rhi)) = (rem.min_exp(), rem.max_exp()) {
            if rhi - rlo < dhi - dlo {
                break;
            }
            // Cancel the top term of the remainder.
            let c = rem.coeff(rhi) / &lead;
            let e = rhi - dhi;
            quot.add_term(e, c.clone());
            rem = &rem - &(divisor.shift(e).scale(&c));
        }
        Ok((quot, rem))
    }

    /// Division that must be exact; a nonzero remainder is an internal bug.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("inexact Laurent division: ({self}) / ({divisor}) leaves {r}")));
        }
        Ok(q)
    }

    pub fn to_triples(&self) -> Result<Vec<(i64, i64, i64)>> {
        self.terms()
            .map(|(e, c)| rational_to_pair(c).map(|(n, d)| (e, n, d)))
            .collect()
    }

    pub fn from_triples(triples: &[(i64, i64, i64)]) -> Result<Self> {
        let mut p = Self::zero();
        let mut last: Option<i64> = None;
        for &(e, n, d) in triples {
            if let Some(prev) = last {
                if e <= prev {
                    return Err(Error::Decode("exponents must be strictly increasing".into()));
                }
            }
            last = Some(e);
            let c = rational_from_pair(n, d)?;
            if c.is_zero() {
                return Err(Error::Decode(format!("zero coefficient stored at exponent {e}")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", fmt_rational(&abs))?;
            }
            match *e {
                0 => {}
                1 => write!(f, "v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples = self.to_triples().map_err(serde::ser::Error::custom)?;
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(i64, i64, i64)>::deserialize(d)?;
        LaurentPoly::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Quantum numbers

/// `[a] = v^{a-1} + v^{a-3} + ... + v^{1-a}`, with `[-a] = -[a]`.
pub fn quantum_integer(a: i64) -> LaurentPoly {
    let n = a.abs();
    let p = LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, Rational::one())));
    if a < 0 {
        -p
    } else {
        p
    }
}

/// `[b]! = [1][2]...[b]`, `[0]! = 1`.
pub fn quantum_factorial(b: u32) -> LaurentPoly {
    (1..=b as i64).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k))
}

/// `[a][a-1]...[a-b+1] / [b]!`, computed by exact Laurent division.
pub fn quantum_binomial(a: i64, b: u32) -> LaurentPoly {
    let num = (0..b as i64).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(a - k));
    num.div_exact(&quantum_factorial(b))
        .expect("quantum binomial division is exact over Q[v, v^-1]")
}

// ---------------------------------------------------------------------------
// Roots of unity and the cyclotomic field

/// `q` is a primitive `n`-th root of unity and `l` is the order of `q^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootOfUnitySpec {
    pub n: u32,
    pub l: u32,
}

impl RootOfUnitySpec {
    /// Largest accepted order `n`; the cyclotomic reduction is quadratic in it.
    pub const MAX_ORDER: u32 = 4096;

    pub fn from_n(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("root of unity order must be positive".into()));
        }
        if n > Self::MAX_ORDER {
            return Err(Error::InvalidParameter(format!("root of unity order {n} exceeds {}", Self::MAX_ORDER)));
        }
        let l = if n % 2 == 1 { n } else { n / 2 };
        if l <= 2 {
            return Err(Error::InvalidParameter(format!("order of q^2 must exceed 2 (n = {n} gives l = {l})")));
        }
        Ok(Self { n, l })
    }

    /// The user-facing constructor: `l` plus the parity of `n`. With
    /// `odd_n = false` the order is `n = 2l`.
    pub fn from_l(l: u32, odd_n: bool) -> Result<Self> {
        if odd_n {
            if l.is_multiple_of(2) {
                return Err(Error::InvalidParameter(format!("odd n requires odd l, got l = {l}")));
            }
            Self::from_n(l)
        } else {
            Self::from_n(l.saturating_mul(2))
        }
    }

    pub fn phi(&self) -> usize {
        cyclotomic_polynomial(self.n).len() - 1
    }
}

impl<'de> Deserialize<'de> for RootOfUnitySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            l: u32,
        }
        let raw = Raw::deserialize(d)?;
        let spec = RootOfUnitySpec::from_n(raw.n).map_err(serde::de::Error::custom)?;
        if spec.l != raw.l {
            return Err(serde::de::Error::custom(format!("l = {} is inconsistent with n = {}", raw.l, raw.n)));
        }
        Ok(spec)
    }
}

/// Integer coefficients (lowest degree first) of the `n`-th cyclotomic
/// polynomial, computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = int_poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic.
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    q
}

type RPoly = Vec<Rational>;

fn rpoly_trim(p: &mut RPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rpoly_mul(a: &[Rational], b: &[Rational]) -> RPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rpoly_trim(&mut out);
    out
}

fn rpoly_sub(a: &[Rational], b: &[Rational]) -> RPoly {
    let n = a.len().max(b.len());
    let mut out: RPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_else(Rational::zero) - b.get(i).cloned().unwrap_or_else(Rational::zero))
        .collect();
    rpoly_trim(&mut out);
    out
}

fn rpoly_divrem(a: &[Rational], b: &[Rational]) -> (RPoly, RPoly) {
    let mut rem = a.to_vec();
    rpoly_trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].clone() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
        rpoly_trim(&mut rem);
    }
    rpoly_trim(&mut q);
    (q, rem)
}

/// An element of `Q(q)`, stored as a polynomial in `q` of degree below
/// `phi(n)`, reduced modulo the cyclotomic polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    spec: RootOfUnitySpec,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    fn modulus(spec: &RootOfUnitySpec) -> RPoly {
        cyclotomic_polynomial(spec.n).into_iter().map(Rational::from_integer).collect()
    }

    fn from_poly(spec: RootOfUnitySpec, p: &[Rational]) -> Self {
        let (_, mut r) = rpoly_divrem(p, &Self::modulus(&spec));
        let phi = spec.phi();
        r.resize(phi, Rational::zero());
        Self { spec, coeffs: r }
    }

    pub fn zero(spec: RootOfUnitySpec) -> Self {
        Self::from_poly(spec, &[])
    }

    pub fn one(spec: RootOfUnitySpec) -> Self {
        Self::from_rational(spec, Rational::one())
    }

    pub fn from_rational(spec: RootOfUnitySpec, c: Rational) -> Self {
        Self::from_poly(spec, &[c])
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(spec: RootOfUnitySpec, k: i64) -> Self {
        let e = k.rem_euclid(spec.n as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        Self::from_poly(spec, &p)
    }

    pub fn spec(&self) -> RootOfUnitySpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_coeffs(spec: RootOfUnitySpec, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != spec.phi() {
            return Err(Error::Decode(format!("expected {} coefficients, got {}", spec.phi(), coeffs.len())));
        }
        Ok(Self { spec, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.spec)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.spec, other.spec, "cyclotomic scalars over different roots of unity");
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = Self::modulus(&self.spec);
        let mut a = self.coeffs.clone();
        rpoly_trim(&mut a);
        // Invariant: s * self == r (mod m).
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1): (RPoly, RPoly) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = rpoly_divrem(&r0, &r1);
            let s = rpoly_sub(&s0, &rpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because m is irreducible.
        if r0.len() != 1 {
            return Err(Error::Internal("cyclotomic modulus is not irreducible".into()));
        }
        let c = r0[0].clone();
        let s: RPoly = s0.into_iter().map(|x| x / &c).collect();
        Ok(Self::from_poly(self.spec, &s))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.spec), |acc, _| &acc * self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_rational(c);
            parts.push(match k {
                0 => cs,
                1 => format!("{cs}*q"),
                _ => format!("{cs}*q^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[n={}]({self})", self.spec.n)
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.check(rhs);
        CycScalar { spec: self.spec, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.check(rhs);
        CycScalar { spec: self.spec, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.check(rhs);
        CycScalar::from_poly(self.spec, &rpoly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { spec: self.spec, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            n: u32,
            l: u32,
            coeffs: Vec<(i64, i64)>,
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(rational_to_pair)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::ser::Error::custom)?;
        Raw { n: self.spec.n, l: self.spec.l, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            l: u32,
            coeffs: Vec<(i64, i64)>,
        }
        let raw = Raw::deserialize(d)?;
        let spec = RootOfUnitySpec::from_n(raw.n).map_err(serde::de::Error::custom)?;
        if spec.l != raw.l {
            return Err(serde::de::Error::custom("l inconsistent with n"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|&(n, d)| rational_from_pair(n, d))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        CycScalar::from_coeffs(spec, coeffs).map_err(serde::de::Error::custom)
    }
}

/// Evaluates `v -> q` and reduces modulo the cyclotomic polynomial.
pub fn specialize(p: &LaurentPoly, spec: RootOfUnitySpec) -> CycScalar {
    let mut out = CycScalar::zero(spec);
    for (e, c) in p.terms() {
        let t = &CycScalar::q_pow(spec, e) * &CycScalar::from_rational(spec, c.clone());
        out = &out + &t;
    }
    out
}

/// Greatest common divisor helper used by the alcove module.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(l: u32) -> RootOfUnitySpec {
        RootOfUnitySpec::from_l(l, false).unwrap()
    }

    #[test]
    fn order_is_bounded() {
        assert!(RootOfUnitySpec::from_l(u32::MAX, false).is_err());
        assert!(RootOfUnitySpec::from_n(RootOfUnitySpec::MAX_ORDER + 1).is_err());
        assert!(serde_json::from_str::<CycScalar>(r#"{"n":4000000000,"l":2000000000,"coeffs":[]}"#).is_err());
    }

    #[test]
    fn qint_small() {
        assert_eq!(quantum_integer(2).to_string(), "v + v^-1");
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(5).to_string(), "v^4 + v^2 + 1 + v^-2 + v^-4");
        assert_eq!(quantum_integer(-3), -quantum_integer(3));
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        assert_eq!(quantum_factorial(2), quantum_integer(2));
        assert_eq!(quantum_binomial(3, 0), LaurentPoly::one());
        assert_eq!(quantum_binomial(2, 1), quantum_integer(2));
        // [4][3]/[2] = (v^2 + v^-2)(v^2 + 1 + v^-2)
        assert_eq!(quantum_binomial(4, 2).to_string(), "v^4 + v^2 + 2 + v^-2 + v^-4");
    }

    #[test]
    fn cyclotomics() {
        let c = |n| cyclotomic_polynomial(n).iter().map(|x| x.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(3), vec![1, 1, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
        assert_eq!(c(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(c(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn specialize_examples() {
        let s3 = RootOfUnitySpec::from_l(3, true).unwrap();
        assert_eq!(specialize(&quantum_integer(2), s3), CycScalar::from_rational(s3, int(-1)));
        assert!(specialize(&quantum_integer(3), s3).is_zero());
        assert!(specialize(&LaurentPoly::one(), s3).is_one());
        // n = 2l: q^2 has order l.
        let s = spec(3);
        assert!(CycScalar::q_pow(s, 6).is_one());
        assert!(!CycScalar::q_pow(s, 3).is_one());
    }

    #[test]
    fn inverse_roundtrip() {
        let s = spec(5);
        let x = &CycScalar::q_pow(s, 1) + &CycScalar::from_rational(s, rat(3, 2));
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        assert!(CycScalar::zero(s).inverse().is_err());
    }

    #[test]
    fn json_forms() {
        let p = quantum_integer(3);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[[-2,1,1],[0,1,1],[2,1,1]]");
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<LaurentPoly>("[[0,1,0]]").is_err());
        assert!(serde_json::from_str::<LaurentPoly>("[[1,1,1],[0,1,1]]").is_err());
        let s = spec(3);
        let x = CycScalar::q_pow(s, 1);
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<CycScalar>(&js).unwrap(), x);
    }
}
