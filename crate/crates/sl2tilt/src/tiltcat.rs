//! The graded regular tilting block as a matrix category over the quiver
//! model: `T_i` is `_iP`, `Θ_s = U_even`, `Θ_t = U_odd`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{self, summand, GradedModule, Parity, QuiverMatrix, Summand};
use crate::scalars::{quantum_integer, LaurentPoly, Rational};

pub type TiltObject = GradedModule;
pub type TiltMorphism = QuiverMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    S,
    T,
}

impl Color {
    pub fn parity(self) -> Parity {
        match self {
            Color::S => Parity::Even,
            Color::T => Parity::Odd,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::S => Color::T,
            Color::T => Color::S,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::S => 's',
            Color::T => 't',
        }
    }
}

/// A word over `{s, t}`; the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ThetaWord(pub Vec<Color>);

impl ThetaWord {
    /// Letters in the order they act.
    pub fn acting_order(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Alternating word of length `k` whose rightmost letter is `first`.
    pub fn alternating(k: usize, first: Color) -> Self {
        let mut v = vec![];
        let mut c = first;
        for _ in 0..k {
            v.push(c);
            c = c.other();
        }
        v.reverse();
        ThetaWord(v)
    }

    /// The number of maximal runs of equal letters.
    pub fn runs(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        1 + self.0.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl FromStr for ThetaWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                's' => Ok(Color::S),
                't' => Ok(Color::T),
                other => Err(Error::InvalidParameter(format!("theta words use only s and t, found {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ThetaWord)
    }
}

impl fmt::Display for ThetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

pub fn tilting(i: usize) -> TiltObject {
    vec![summand(i, 0)]
}

/// A cutoff large enough that no functor image touches the truncation.
pub fn cutoff_for(obj: &[Summand]) -> usize {
    obj.iter().map(|s| s.vertex).max().unwrap_or(0) + 2
}

pub fn theta_on_object(c: Color, obj: &[Summand]) -> TiltObject {
    quiver::apply_u_parity(c.parity(), obj, cutoff_for(obj))
}

pub fn theta_on_morphism(c: Color, f: &TiltMorphism) -> Result<TiltMorphism> {
    let m = f.max_vertex() + 2;
    quiver::apply_u_parity_morphism(c.parity(), f, m)
}

pub fn evaluate_theta_word(x: &ThetaWord, start: &[Summand]) -> TiltObject {
    x.acting_order().fold(start.to_vec(), |obj, c| theta_on_object(c, &obj))
}

/// Multiplicity of each index, ignoring shifts.
pub fn index_multiplicities(obj: &[Summand]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for s in obj {
        *out.entry(s.vertex).or_insert(0) += 1;
    }
    out
}

/// Highest index present and its multiplicity.
pub fn leading_term(obj: &[Summand]) -> Option<(usize, usize)> {
    index_multiplicities(obj).into_iter().next_back()
}

pub fn project_to_index(obj: &[Summand], i: usize) -> TiltObject {
    obj.iter().copied().filter(|s| s.vertex == i).collect()
}

/// The `T_{ℓ̃(x)}` part of `Θ_x T_0`, with `ℓ̃` the number of runs.
pub fn leading_projector_object(x: &ThetaWord) -> TiltObject {
    project_to_index(&evaluate_theta_word(x, &tilting(0)), x.runs())
}

/// Serialisable form `[index, shift, multiplicity]`, sorted.
pub fn object_triples(obj: &[Summand]) -> Vec<(usize, i64, usize)> {
    let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for s in obj {
        *counts.entry((s.vertex, s.shift)).or_insert(0) += 1;
    }
    counts.into_iter().map(|((i, s), m)| (i, s, m)).collect()
}

pub fn object_from_triples(triples: &[(usize, i64, usize)]) -> Result<TiltObject> {
    let mut out = vec![];
    let mut last = None;
    for &(i, s, m) in triples {
        if Some((i, s)) <= last {
            return Err(Error::Decode("object triples must be strictly increasing".into()));
        }
        if m == 0 {
            return Err(Error::Decode("zero multiplicity".into()));
        }
        if m > 1 << 16 {
            return Err(Error::Decode(format!("multiplicity {m} is too large")));
        }
        last = Some((i, s));
        out.extend(std::iter::repeat_n(summand(i, s), m));
    }
    Ok(out)
}

/// Checks the leading-term shape of `Θ_x T_i` for an alternating word:
/// returns the expected `(index, multiplicity)` or `None` for zero.
pub fn expected_leading_term(i: usize, x: &ThetaWord) -> Option<(usize, usize)> {
    let k = x.len();
    let Some(first) = x.acting_order().next() else {
        return Some((i, 1));
    };
    let splits = first.parity() == Parity::of(i);
    if splits && i == 0 {
        return None;
    }
    if splits {
        Some((i + k - 1, 2))
    } else {
        Some((i + k, 1))
    }
}

pub fn check_alternating_shape(i: usize, x: &ThetaWord) -> Result<()> {
    let obj = evaluate_theta_word(x, &tilting(i));
    let got = leading_term(&obj);
    let want = expected_leading_term(i, x);
    if got != want {
        return Err(Error::RelationFailure {
            relation: "leading term of an alternating theta word".into(),
            witness: format!("Θ_{x} T_{i}: got {got:?}, expected {want:?}"),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Grothendieck group

pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

fn poly_zero(n: usize) -> PolyMatrix {
    vec![vec![LaurentPoly::zero(); n]; n]
}

pub fn poly_identity(n: usize) -> PolyMatrix {
    let mut m = poly_zero(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = LaurentPoly::one();
    }
    m
}

pub fn poly_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let mut out = poly_zero(n);
    for r in 0..n {
        for k in 0..n {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..n {
                if !b[k][c].is_zero() {
                    out[r][c] += &(&a[r][k] * &b[k][c]);
                }
            }
        }
    }
    out
}

pub fn poly_add(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn poly_scale(c: &LaurentPoly, a: &PolyMatrix) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

fn module_column(obj: &[Summand], n: usize) -> Vec<LaurentPoly> {
    let mut col = vec![LaurentPoly::zero(); n];
    for s in obj {
        if s.vertex < n {
            col[s.vertex].add_term(s.shift, Rational::one());
        }
    }
    col
}

fn from_columns(cols: Vec<Vec<LaurentPoly>>) -> PolyMatrix {
    let n = cols.len();
    (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
}

/// `[Θ_c]` on `K_0` with basis `[T_0], ..., [T_m]`; index `m+1` is dropped.
pub fn k0_matrix(c: Color, m: usize) -> PolyMatrix {
    let n = m + 1;
    from_columns((0..n).map(|i| module_column(&theta_on_object(c, &tilting(i)), n)).collect())
}

/// `[U_j]` on `K_0`. The span of `[T_0], ..., [T_m]` is stable, so no
/// truncation occurs.
pub fn k0_generator(j: usize, m: usize) -> PolyMatrix {
    let n = m + 1;
    from_columns((0..n).map(|a| module_column(&quiver::apply_u(j, &[summand(a, 0)], m), n)).collect())
}

fn first_difference(a: &PolyMatrix, b: &PolyMatrix, bound: usize) -> Option<(usize, usize, LaurentPoly, LaurentPoly)> {
    for r in 0..=bound {
        for c in 0..=bound {
            if a[r][c] != b[r][c] {
                return Some((r, c, a[r][c].clone(), b[r][c].clone()));
            }
        }
    }
    None
}

fn expect_equal(name: &str, a: &PolyMatrix, b: &PolyMatrix, bound: usize) -> Result<()> {
    match first_difference(a, b, bound) {
        None => Ok(()),
        Some((r, c, x, y)) => Err(Error::RelationFailure {
            relation: name.into(),
            witness: format!("entry ({r}, {c}): {x} vs {y}"),
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TlReport {
    pub m: usize,
    pub checks: Vec<String>,
}

/// Squaring relations for `[Θ_s]`, `[Θ_t]` on interior indices, and the
/// Temperley–Lieb relations for the generators `[U_j]`, `1 <= j <= m`.
pub fn check_tl_relations(m: usize) -> Result<TlReport> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!("check_tl_relations needs m >= 4, got {m}")));
    }
    let two = quantum_integer(2);
    let bound = m - 2;
    let mut checks = vec![];
    for c in [Color::S, Color::T] {
        let e = k0_matrix(c, m);
        expect_equal(&format!("E_{0} E_{0} = [2] E_{0}", c.letter()), &poly_mul(&e, &e), &poly_scale(&two, &e), bound)?;
        checks.push(format!("E_{0}^2 = [2] E_{0}", c.letter()));
    }
    check_generator_relations(m, &mut checks, None)?;
    Ok(TlReport { m, checks })
}

/// As [`check_tl_relations`] on the generators, with an optional matrix
/// substituted for `[U_j]` (used to exercise the failure path).
pub fn check_generator_relations(
    m: usize,
    checks: &mut Vec<String>,
    replace: Option<(usize, PolyMatrix)>,
) -> Result<()> {
    let two = quantum_integer(2);
    let zero = poly_zero(m + 1);
    let gens: Vec<PolyMatrix> = (0..=m)
        .map(|j| match &replace {
            Some((k, mat)) if *k == j => mat.clone(),
            _ if j == 0 => zero.clone(),
            _ => k0_generator(j, m),
        })
        .collect();
    for i in 1..=m {
        let e = &gens[i];
        expect_equal(&format!("E_{i}^2 = [2] E_{i}"), &poly_mul(e, e), &poly_scale(&two, e), m)?;
        for j in 1..=m {
            let prod = poly_mul(e, &gens[j]);
            if i.abs_diff(j) == 1 {
                expect_equal(&format!("E_{i} E_{j} E_{i} = E_{i}"), &poly_mul(&prod, e), e, m)?;
            } else if i.abs_diff(j) > 1 {
                expect_equal(&format!("E_{i} E_{j} = 0"), &prod, &zero, m)?;
            }
        }
    }
    checks.push(format!("Temperley-Lieb relations for E_1..E_{m}"));
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BurauConvention {
    PlusOne,
    MinusOne,
    PlusV,
    MinusV,
}

impl BurauConvention {
    pub const ALL: [BurauConvention; 4] =
        [BurauConvention::PlusOne, BurauConvention::MinusOne, BurauConvention::PlusV, BurauConvention::MinusV];

    pub fn coefficient(self) -> LaurentPoly {
        match self {
            BurauConvention::PlusOne => LaurentPoly::one(),
            BurauConvention::MinusOne => -LaurentPoly::one(),
            BurauConvention::PlusV => LaurentPoly::v_pow(1),
            BurauConvention::MinusV => -LaurentPoly::v_pow(1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BurauConvention::PlusOne => "b_i = 1 + E_i",
            BurauConvention::MinusOne => "b_i = 1 - E_i",
            BurauConvention::PlusV => "b_i = 1 + v E_i",
            BurauConvention::MinusV => "b_i = 1 - v E_i",
        }
    }
}

pub fn burau_generator(i: usize, m: usize, conv: BurauConvention) -> PolyMatrix {
    poly_add(&poly_identity(m + 1), &poly_scale(&conv.coefficient(), &k0_generator(i, m)))
}

#[derive(Clone, Debug, Serialize)]
pub struct BurauReport {
    pub m: usize,
    pub results: Vec<(BurauConvention, bool)>,
    pub passing: Vec<BurauConvention>,
    /// The convention is found by search, not taken from a reference.
    pub derived: bool,
}

/// Tests `b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}` and far commutativity for
/// each convention on generators `1 <= i < m`.
pub fn burau_search(m: usize) -> BurauReport {
    let mut results = vec![];
    for conv in BurauConvention::ALL {
        let b: Vec<PolyMatrix> = (1..=m).map(|i| burau_generator(i, m, conv)).collect();
        let mut ok = true;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let (x, y) = (&b[i], &b[j]);
                let holds = if j == i + 1 {
                    poly_mul(&poly_mul(x, y), x) == poly_mul(&poly_mul(y, x), y)
                } else {
                    poly_mul(x, y) == poly_mul(y, x)
                };
                ok &= holds;
            }
        }
        results.push((conv, ok));
    }
    let passing = results.iter().filter(|(_, ok)| *ok).map(|(c, _)| *c).collect();
    BurauReport { m, results, passing, derived: true }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Path, QuiverElem};

    fn w(s: &str) -> ThetaWord {
        s.parse().unwrap()
    }

    #[test]
    fn objects() {
        assert_eq!(theta_on_object(Color::T, &tilting(0)), tilting(1));
        assert!(theta_on_object(Color::S, &tilting(0)).is_empty());
        assert_eq!(theta_on_object(Color::T, &tilting(1)), vec![summand(1, -1), summand(1, 1)]);
        assert_eq!(theta_on_object(Color::S, &tilting(1)), tilting(2));
        assert_eq!(theta_on_object(Color::T, &tilting(2)), vec![summand(1, 0), summand(3, 0)]);
    }

    #[test]
    fn words() {
        assert_eq!(evaluate_theta_word(&w("t"), &tilting(0)), tilting(1));
        assert_eq!(evaluate_theta_word(&w("st"), &tilting(0)), tilting(2));
        assert_eq!(leading_projector_object(&w("tt")), vec![summand(1, -1), summand(1, 1)]);
        assert_eq!(leading_projector_object(&w("st")), tilting(2));
        assert_eq!(ThetaWord::alternating(3, Color::T), w("tst"));
        assert!("tsx".parse::<ThetaWord>().is_err());
    }

    #[test]
    fn alternating_shapes() {
        for i in 0..=4 {
            for k in 0..=6 {
                for first in [Color::S, Color::T] {
                    check_alternating_shape(i, &ThetaWord::alternating(k, first)).unwrap();
                }
            }
        }
    }

    #[test]
    fn morphisms() {
        let u0 = QuiverMatrix::single(summand(0, 0), summand(1, 0), QuiverElem::path(Path::Up(0)));
        let img = theta_on_morphism(Color::T, &u0).unwrap();
        assert!(img.entries[0][0].is_zero());
        assert_eq!(img.entries[1][0], QuiverElem::path(Path::Idem(1)));
        let id = QuiverMatrix::identity(vec![summand(2, 0), summand(3, 1)]);
        let th = theta_on_morphism(Color::S, &id).unwrap();
        assert_eq!(th, QuiverMatrix::identity(theta_on_object(Color::S, &id.source)));
    }

    #[test]
    fn k0() {
        let et = k0_matrix(Color::T, 6);
        assert_eq!(et[1][0], LaurentPoly::one());
        assert_eq!(et[1][1], quantum_integer(2));
        let es = k0_matrix(Color::S, 6);
        assert!((0..7).all(|r| es[r][0].is_zero()));
        check_tl_relations(8).unwrap();
    }

    #[test]
    fn theta_level_braid_relation_fails() {
        // Θ_s Θ_t Θ_s T_1 = T_2^2 ⊕ T_4, not Θ_s T_1 = T_2.
        let m = 10;
        let (es, et) = (k0_matrix(Color::S, m), k0_matrix(Color::T, m));
        let sts = poly_mul(&poly_mul(&es, &et), &es);
        assert_eq!(sts[2][1], LaurentPoly::constant(crate::scalars::int(2)));
        assert_eq!(sts[4][1], LaurentPoly::one());
        assert_eq!(es[2][1], LaurentPoly::one());
    }

    #[test]
    fn perturbed_generator_rejected() {
        let m = 6;
        let bad = poly_scale(&LaurentPoly::constant(crate::scalars::int(2)), &k0_generator(3, m));
        let mut checks = vec![];
        assert!(matches!(
            check_generator_relations(m, &mut checks, Some((3, bad))),
            Err(Error::RelationFailure { .. })
        ));
    }

    #[test]
    fn burau() {
        let r = burau_search(10);
        assert_eq!(r.passing, vec![BurauConvention::MinusV]);
    }

    #[test]
    fn triples_roundtrip() {
        let obj = vec![summand(1, -1), summand(1, 1), summand(1, 1)];
        let t = object_triples(&obj);
        assert_eq!(t, vec![(1, -1, 1), (1, 1, 2)]);
        assert_eq!(object_from_triples(&t).unwrap(), obj);
        assert!(object_from_triples(&[(1, 0, 1), (0, 0, 1)]).is_err());
    }
}
