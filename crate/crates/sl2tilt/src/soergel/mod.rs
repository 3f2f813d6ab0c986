//! Two-colour Soergel diagrams as sliced words, their formal linear
//! combinations, and evaluation into the tilting category.
//!
//! Sequences are stored left to right, so `seq[0]` is the leftmost strand
//! and the last entry is the rightmost one (next to the marked face).

pub mod dsl;
pub mod eval;
pub mod library;
pub mod nat;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{rational_to_pair, Rational};
use crate::tiltcat::Color;

pub use eval::{diagrams_equal, evaluate, evaluate_full, evaluate_object, full_object};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Col {
    R,
    G,
}

impl Col {
    /// Red strands act by `Θ_s`, green ones by `Θ_t`.
    pub fn theta(self) -> Color {
        match self {
            Col::R => Color::S,
            Col::G => Color::T,
        }
    }

    pub fn other(self) -> Col {
        match self {
            Col::R => Col::G,
            Col::G => Col::R,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Col::R => 'r',
            Col::G => 'g',
        }
    }

    pub fn from_letter(c: char) -> Option<Col> {
        match c {
            'r' => Some(Col::R),
            'g' => Some(Col::G),
            _ => None,
        }
    }
}

pub fn seq_to_string(seq: &[Col]) -> String {
    seq.iter().map(|c| c.letter()).collect()
}

pub fn parse_seq(s: &str) -> Result<Vec<Col>> {
    s.trim()
        .chars()
        .map(|c| Col::from_letter(c).ok_or_else(|| Error::InvalidParameter(format!("colour sequences use r and g, got {c:?}"))))
        .collect()
}

/// Alternating sequence of length `len` whose rightmost strand is `first`.
pub fn alternating(len: usize, first: Col) -> Vec<Col> {
    let mut v: Vec<Col> = (0..len).map(|k| if k % 2 == 0 { first } else { first.other() }).collect();
    v.reverse();
    v
}

pub fn is_alternating(seq: &[Col]) -> bool {
    seq.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Token {
    Id(Col),
    /// A strand starting at a dot.
    DotUp(Col),
    /// A strand ending at a dot.
    DotDown(Col),
    Merge(Col),
    Split(Col),
}

impl Token {
    pub fn col(self) -> Col {
        match self {
            Token::Id(c) | Token::DotUp(c) | Token::DotDown(c) | Token::Merge(c) | Token::Split(c) => c,
        }
    }

    pub fn bottom_arity(self) -> usize {
        match self {
            Token::DotUp(_) => 0,
            Token::Id(_) | Token::DotDown(_) | Token::Split(_) => 1,
            Token::Merge(_) => 2,
        }
    }

    pub fn top_arity(self) -> usize {
        match self {
            Token::DotDown(_) => 0,
            Token::Id(_) | Token::DotUp(_) | Token::Merge(_) => 1,
            Token::Split(_) => 2,
        }
    }

    pub fn degree(self) -> i64 {
        match self {
            Token::Id(_) => 0,
            Token::DotUp(_) | Token::DotDown(_) => 1,
            Token::Merge(_) | Token::Split(_) => -1,
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(self, Token::Id(_))
    }

    /// The upside-down generator.
    pub fn flipped(self) -> Token {
        match self {
            Token::Id(c) => Token::Id(c),
            Token::DotUp(c) => Token::DotDown(c),
            Token::DotDown(c) => Token::DotUp(c),
            Token::Merge(c) => Token::Split(c),
            Token::Split(c) => Token::Merge(c),
        }
    }

    pub fn inverted(self) -> Token {
        match self {
            Token::Id(c) => Token::Id(c.other()),
            Token::DotUp(c) => Token::DotUp(c.other()),
            Token::DotDown(c) => Token::DotDown(c.other()),
            Token::Merge(c) => Token::Merge(c.other()),
            Token::Split(c) => Token::Split(c.other()),
        }
    }

    pub fn dsl(self) -> String {
        match self {
            Token::Id(c) => format!("|{}", c.letter()),
            Token::DotUp(c) => format!(".^{}", c.letter()),
            Token::DotDown(c) => format!(".v{}", c.letter().to_ascii_uppercase()),
            Token::Merge(c) => format!("m({})", c.letter()),
            Token::Split(c) => format!("s({})", c.letter()),
        }
    }
}

pub type Slice = Vec<Token>;

/// Applies a slice to a bottom sequence, checking arities and colours.
pub fn apply_slice(slice: &[Token], seq: &[Col]) -> std::result::Result<Vec<Col>, String> {
    let mut pos = 0;
    let mut out = vec![];
    for t in slice {
        let n = t.bottom_arity();
        if pos + n > seq.len() {
            return Err(format!("token {} needs {n} strand(s) but only {} remain", t.dsl(), seq.len() - pos));
        }
        if let Some(bad) = seq[pos..pos + n].iter().find(|&&c| c != t.col()) {
            return Err(format!("token {} meets a {} strand", t.dsl(), bad.letter()));
        }
        pos += n;
        out.extend(std::iter::repeat_n(t.col(), t.top_arity()));
    }
    if pos != seq.len() {
        return Err(format!("slice covers {pos} strand(s) of {}", seq.len()));
    }
    Ok(out)
}

/// The slice carrying `tok` at strand position `pos` with identities elsewhere.
pub fn single_slice(seq: &[Col], pos: usize, tok: Token) -> Slice {
    let mut s: Slice = seq[..pos].iter().map(|&c| Token::Id(c)).collect();
    s.push(tok);
    s.extend(seq[pos + tok.bottom_arity()..].iter().map(|&c| Token::Id(c)));
    s
}

/// Rewrites a slice list into one generator per slice (rightmost generator
/// first) and drops identity slices. Assumes the slices compose.
fn normalize_slices(bottom: &[Col], slices: &[Slice]) -> Vec<Slice> {
    let mut seq = bottom.to_vec();
    let mut out = vec![];
    for slice in slices {
        let gens: Vec<usize> = (0..slice.len()).filter(|&k| !slice[k].is_identity()).collect();
        for &g in gens.iter().rev() {
            let pos: usize = slice[..g].iter().map(|t| t.bottom_arity()).sum();
            let s = single_slice(&seq, pos, slice[g]);
            seq = apply_slice(&s, &seq).expect("normalised slice composes");
            out.push(s);
        }
    }
    out
}

/// A rational combination of sliced diagrams with common boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramLinComb {
    pub marked: bool,
    pub bottom: Vec<Col>,
    pub top: Vec<Col>,
    terms: BTreeMap<Vec<Slice>, Rational>,
}

impl DiagramLinComb {
    pub fn zero(bottom: Vec<Col>, top: Vec<Col>, marked: bool) -> Self {
        Self { marked, bottom, top, terms: BTreeMap::new() }
    }

    pub fn identity(seq: &[Col], marked: bool) -> Self {
        let mut d = Self::zero(seq.to_vec(), seq.to_vec(), marked);
        d.terms.insert(vec![], Rational::one());
        d
    }

    /// A single term; slices may carry several generators.
    pub fn from_slices(bottom: &[Col], slices: &[Slice], marked: bool) -> Result<Self> {
        let mut seq = bottom.to_vec();
        for (k, s) in slices.iter().enumerate() {
            seq = apply_slice(s, &seq).map_err(|msg| Error::Arity { slice: k, line: 0, msg })?;
        }
        let mut d = Self::zero(bottom.to_vec(), seq, marked);
        d.terms.insert(normalize_slices(bottom, slices), Rational::one());
        Ok(d)
    }

    /// One generator on `seq` at strand position `pos`.
    pub fn generator(seq: &[Col], pos: usize, tok: Token, marked: bool) -> Result<Self> {
        if pos + tok.bottom_arity() > seq.len() {
            return Err(Error::BoundaryMismatch(format!("{} at position {pos} on {}", tok.dsl(), seq_to_string(seq))));
        }
        Self::from_slices(seq, &[single_slice(seq, pos, tok)], marked)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Slice>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, slices: &[Slice]) -> Rational {
        self.terms.get(slices).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, slices: Vec<Slice>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(slices.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&slices);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.bottom != other.bottom || self.top != other.top {
            return Err(Error::BoundaryMismatch(format!(
                "{} -> {} vs {} -> {}",
                seq_to_string(&self.bottom),
                seq_to_string(&self.top),
                seq_to_string(&other.bottom),
                seq_to_string(&other.top)
            )));
        }
        if self.marked != other.marked {
            return Err(Error::MarkPlacement);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.bottom.clone(), self.top.clone(), self.marked);
        for (s, x) in self.terms() {
            out.add_term(s.clone(), x * c);
        }
        out
    }

    pub fn with_marked(&self, marked: bool) -> Self {
        Self { marked, ..self.clone() }
    }

    /// `self` glued on top of `lower`.
    pub fn compose_v(&self, lower: &Self) -> Result<Self> {
        if lower.top != self.bottom {
            return Err(Error::BoundaryMismatch(format!(
                "top {} of the lower diagram differs from bottom {} of the upper one",
                seq_to_string(&lower.top),
                seq_to_string(&self.bottom)
            )));
        }
        if self.marked != lower.marked {
            return Err(Error::MarkPlacement);
        }
        let mut out = Self::zero(lower.bottom.clone(), self.top.clone(), self.marked);
        for (s1, c1) in lower.terms() {
            for (s2, c2) in self.terms() {
                let mut s = s1.clone();
                s.extend(s2.iter().cloned());
                out.add_term(s, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `self` placed to the left of `right`. Only `right` may be marked.
    pub fn compose_h(&self, right: &Self) -> Result<Self> {
        if self.marked {
            return Err(Error::MarkPlacement);
        }
        let cat = |a: &[Col], b: &[Col]| [a, b].concat();
        let mut out = Self::zero(cat(&self.bottom, &right.bottom), cat(&self.top, &right.top), right.marked);
        for (sl, cl) in self.terms() {
            for (sr, cr) in right.terms() {
                let mut slices: Vec<Slice> = vec![];
                for s in sr {
                    let mut t: Slice = self.bottom.iter().map(|&c| Token::Id(c)).collect();
                    t.extend(s.iter().copied());
                    slices.push(t);
                }
                for s in sl {
                    let mut t = s.clone();
                    t.extend(right.top.iter().map(|&c| Token::Id(c)));
                    slices.push(t);
                }
                out.add_term(slices, cl * cr);
            }
        }
        Ok(out)
    }

    /// Degrees of the terms, sorted and deduplicated.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|s| slices_degree(s)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The degree, when homogeneous and nonzero.
    pub fn degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Upside-down reflection.
    pub fn flip_vertical(&self) -> Self {
        let mut out = Self::zero(self.top.clone(), self.bottom.clone(), self.marked);
        for (s, c) in self.terms() {
            let slices: Vec<Slice> = s.iter().rev().map(|sl| sl.iter().map(|t| t.flipped()).collect()).collect();
            out.add_term(slices, c.clone());
        }
        out
    }

    /// Exchanges the two colours.
    pub fn color_inverted(&self) -> Self {
        let inv = |v: &[Col]| v.iter().map(|c| c.other()).collect::<Vec<_>>();
        let mut out = Self::zero(inv(&self.bottom), inv(&self.top), self.marked);
        for (s, c) in self.terms() {
            let slices = s.iter().map(|sl| sl.iter().map(|t| t.inverted()).collect()).collect();
            out.add_term(slices, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut terms = vec![];
        for (s, c) in self.terms() {
            let (n, d) = rational_to_pair(c)?;
            let slices: Vec<Vec<String>> = s.iter().map(|sl| sl.iter().map(|t| t.dsl()).collect()).collect();
            terms.push(serde_json::json!({ "coeff": [n, d], "slices": slices }));
        }
        Ok(serde_json::json!({
            "marked": self.marked,
            "bottom": seq_to_string(&self.bottom),
            "top": seq_to_string(&self.top),
            "terms": terms,
        }))
    }
}

pub fn slices_degree(slices: &[Slice]) -> i64 {
    slices.iter().flatten().map(|t| t.degree()).sum()
}

impl fmt::Display for DiagramLinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", dsl::serialize(self))
    }
}

/// Barbell counts `(red, green)` of a diagram on the empty sequence made
/// only of floating barbells; its class in `End(∅) = Q[b_r, b_g]`.
pub fn barbell_monomial(bottom: &[Col], slices: &[Slice]) -> Result<(usize, usize)> {
    if !bottom.is_empty() {
        return Err(Error::BoundaryMismatch("barbell monomials live on the empty sequence".into()));
    }
    let norm = normalize_slices(bottom, slices);
    let mut seq: Vec<Col> = vec![];
    let mut counts = (0, 0);
    for s in &norm {
        let g = s.iter().position(|t| !t.is_identity()).expect("normalised slices carry a generator");
        match s[g] {
            Token::DotUp(_) => {}
            Token::DotDown(c) => {
                // The killed strand must have been born at a dot with nothing in between.
                match c {
                    Col::R => counts.0 += 1,
                    Col::G => counts.1 += 1,
                }
            }
            t => return Err(Error::InvalidParameter(format!("{} is not part of a floating barbell", t.dsl()))),
        }
        seq = apply_slice(s, &seq).map_err(|msg| Error::Arity { slice: 0, line: 0, msg })?;
    }
    if !seq.is_empty() {
        return Err(Error::BoundaryMismatch("diagram does not return to the empty sequence".into()));
    }
    Ok(counts)
}

/// Graded dimension of `End(∅)` in the unmarked calculus in degree `d`:
/// monomials `b_r^a b_g^b` with `2(a + b) = d`.
pub fn end_empty_dimension(d: i64) -> usize {
    if d < 0 || d % 2 != 0 {
        0
    } else {
        (d / 2 + 1) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;
    use crate::quiver::{summand, Path, QuiverElem, QuiverMatrix};
    use crate::scalars::{int, rat};

    fn g(seq: &str, pos: usize, tok: Token) -> DiagramLinComb {
        DiagramLinComb::generator(&parse_seq(seq).unwrap(), pos, tok, true).unwrap()
    }

    #[test]
    fn objects() {
        let obj = |s: &str| evaluate_object(&parse_seq(s).unwrap());
        assert_eq!(obj(""), vec![summand(0, 0)]);
        assert_eq!(obj("g"), vec![summand(1, 0)]);
        assert_eq!(obj("rg"), vec![summand(2, 0)]);
        assert_eq!(obj("gg"), vec![summand(1, -1), summand(1, 1)]);
        assert!(obj("r").is_empty());
        assert!(obj("grgr").is_empty());
        assert_eq!(obj("ggrg"), vec![summand(3, -1), summand(3, 1)]);
    }

    #[test]
    fn generators() {
        let up = evaluate(&g("", 0, Token::DotUp(Col::G))).unwrap();
        assert_eq!(up, QuiverMatrix::single(summand(0, 0), summand(1, 0), QuiverElem::path(Path::Up(0))));
        let m = evaluate(&g("gg", 0, Token::Merge(Col::G))).unwrap();
        assert!(m.entries[0][0].is_zero());
        assert_eq!(m.entries[0][1], QuiverElem::path(Path::Idem(1)));
        // A dot on the outer green strand of rg.
        let d = evaluate(&g("rg", 1, Token::DotDown(Col::G))).unwrap();
        assert!(d.is_zero() && d.target.is_empty());
        let b = evaluate(&g("rg", 0, Token::DotDown(Col::R))).unwrap();
        assert_eq!(b.entries[0][0], QuiverElem::term(Path::Down(2), int(4)));
    }

    #[test]
    fn merge_then_split_pattern() {
        // Block structure per copy on g r g -> g g r g style sequences.
        let d = g("ggrg", 0, Token::Merge(Col::G));
        let f = evaluate(&d).unwrap();
        assert_eq!(f.rows(), 1);
        assert_eq!(f.cols(), 2);
        let s = evaluate(&g("grg", 0, Token::Split(Col::G))).unwrap();
        assert_eq!(f.compose(&s).unwrap(), QuiverMatrix::zero(s.source.clone(), f.target.clone()));
    }

    #[test]
    fn relations_hold() {
        let rep = check_relations(&all_local_relations(), 4).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.instances > 200);
        let de = check_dead_end(4).unwrap();
        assert!(de.passed(), "{:?}", de.failures);
    }

    #[test]
    fn wrong_relations_fail() {
        // The needle is not the identity, and the barbell sign matters.
        let c = Col::G;
        let bad = vec![
            Relation { name: "needle-as-id".into(), lhs: then_(&split(c), &merge(c)), rhs: DiagramLinComb::identity(&[c], false) },
            Relation {
                name: "barbell-plus".into(),
                lhs: barbell(c).compose_h(&DiagramLinComb::identity(&[c], false)).unwrap(),
                rhs: DiagramLinComb::identity(&[c], false).compose_h(&barbell(c)).unwrap(),
            },
        ];
        let rep = check_relations(&bad, 3).unwrap();
        assert!(rep.failures.iter().any(|f| f.relation == "needle-as-id"));
        assert!(rep.failures.iter().any(|f| f.relation == "barbell-plus"));
    }

    fn then_(a: &DiagramLinComb, b: &DiagramLinComb) -> DiagramLinComb {
        b.compose_v(a).unwrap()
    }

    #[test]
    fn barbell_between_strands() {
        // A barbell left of the rightmost strand is 2^{k+1} eps_k.
        let e1 = evaluate(&in_context(&[], &barbell(Col::G), &[Col::G]).unwrap()).unwrap();
        assert_eq!(e1, QuiverMatrix::single(summand(1, 0), summand(1, 0), QuiverElem::term(Path::Loop(1), int(4))));
        let e2 = evaluate(&in_context(&[], &barbell(Col::R), &[Col::R, Col::G]).unwrap()).unwrap();
        assert_eq!(e2, QuiverMatrix::single(summand(2, 0), summand(2, 0), QuiverElem::term(Path::Loop(2), int(8))));
        // Between two green strands the red barbell gives Θ_t(4 eps_1) = (0 0; 2 0).
        let d = in_context(&[Col::G], &barbell(Col::R), &[Col::G]).unwrap();
        let f = evaluate(&d).unwrap();
        assert_eq!(f.source, vec![summand(1, -1), summand(1, 1)]);
        assert!(f.entries[0][0].is_zero() && f.entries[0][1].is_zero() && f.entries[1][1].is_zero());
        assert_eq!(f.entries[1][0], QuiverElem::term(Path::Idem(1), int(2)));
        // Both colours act on T_j as 4j eps_j.
        for j in 1..=6 {
            let x = alternating(j, Col::G);
            for c in [Col::R, Col::G] {
                let f = evaluate(&in_context(&[], &barbell(c), &x).unwrap()).unwrap();
                let want = QuiverElem::term(Path::Loop(j), int(4 * j as i64));
                assert_eq!(f, QuiverMatrix::single(summand(j, 0), summand(j, 0), want), "{c:?} at {j}");
            }
        }
    }

    #[test]
    fn components_are_natural() {
        use super::nat::solve_components;
        for c in [Col::R, Col::G] {
            for tok in [Token::DotUp(c), Token::DotDown(c), Token::Merge(c), Token::Split(c)] {
                let sol = solve_components(tok, 7, eval::leading_table).unwrap();
                assert_eq!(sol.freedom, 0, "{tok:?}");
                for a in 0..=7 {
                    assert_eq!(sol.comps[a], eval::component(tok, a, 0), "{tok:?} at {a}");
                }
            }
        }
    }

    #[test]
    fn named_diagrams() {
        for i in 0..6 {
            assert_eq!(
                evaluate(&u_diagram(i)).unwrap(),
                QuiverMatrix::single(summand(i, 0), summand(i + 1, 0), QuiverElem::path(Path::Up(i)))
            );
            if i >= 1 {
                assert_eq!(
                    evaluate(&d_diagram(i)).unwrap(),
                    QuiverMatrix::single(summand(i, 0), summand(i - 1, 0), QuiverElem::path(Path::Down(i)))
                );
                assert_eq!(
                    evaluate(&eps_diagram(i)).unwrap(),
                    QuiverMatrix::single(summand(i, 0), summand(i, 0), QuiverElem::path(Path::Loop(i)))
                );
            }
            for j in 0..6 {
                assert!(check_hom_basis(i, j).unwrap(), "{i} -> {j}");
            }
        }
        // Composition between projected objects: multiply the evaluations.
        let ev = |d: &DiagramLinComb| evaluate(d).unwrap();
        assert!(ev(&d_diagram(1)).compose(&ev(&u_diagram(0))).unwrap().is_zero());
        for i in 1..=5 {
            let du = ev(&d_diagram(i + 1)).compose(&ev(&u_diagram(i))).unwrap();
            let ud = ev(&u_diagram(i - 1)).compose(&ev(&d_diagram(i))).unwrap();
            assert_eq!(du, ud);
            assert_eq!(du, ev(&eps_diagram(i)));
            assert!(ev(&u_diagram(i)).compose(&ev(&u_diagram(i - 1))).unwrap().is_zero());
            assert!(ev(&d_diagram(i)).compose(&ev(&d_diagram(i + 1))).unwrap().is_zero());
        }
        // Without the projector in between, the lower summand of x_3 contributes.
        let raw = evaluate(&d_diagram(3).compose_v(&u_diagram(2)).unwrap()).unwrap();
        assert_ne!(raw, ev(&eps_diagram(2)));
    }

    #[test]
    fn jones_wenzl_small() {
        let jw3 = jones_wenzl(3);
        assert_eq!(jw3.num_terms(), 2);
        assert_eq!(jw3.coefficient(&[]), int(1));
        assert_eq!(jw3.degrees(), vec![0]);
        assert!(jw3.terms().any(|(_, c)| *c == rat(-1, 2)));
        for i in 0..=5 {
            let lit = evaluate_full(&jones_wenzl(i).with_marked(true)).unwrap();
            assert_eq!(lit, evaluate_jones_wenzl(i).unwrap(), "i = {i}");
        }
        // The projector is the coordinate projection onto the leading summands.
        for i in 0..=8 {
            let p = evaluate_jones_wenzl(i).unwrap();
            let x = alternating(i, Col::G);
            let full = full_object(&x);
            let top = full.iter().map(|s| s.vertex).max().unwrap();
            let mut want = QuiverMatrix::zero(full.clone(), full.clone());
            for (k, s) in full.iter().enumerate() {
                if s.vertex == top {
                    want.entries[k][k] = QuiverElem::path(Path::Idem(top));
                }
            }
            assert_eq!(p, want, "i = {i}");
            assert_eq!(top, i);
        }
        let p = jones_wenzl(4).with_marked(true);
        let pp = p.compose_v(&p).unwrap();
        assert!(diagrams_equal(&pp, &p).unwrap());
    }

    #[test]
    fn pitchforks_die() {
        for i in 3..=5 {
            let jw = jones_wenzl(i).with_marked(true);
            for (off, len, c) in pitchfork_placements(i) {
                let p = placed_pitchfork(i, off, len, c, false).unwrap();
                assert!(evaluate(&p.compose_v(&jw).unwrap()).unwrap().is_zero());
                let q = placed_pitchfork(i, off, len, c, true).unwrap();
                assert!(evaluate(&jw.compose_v(&q).unwrap()).unwrap().is_zero());
            }
        }
        assert!(pitchfork(&parse_seq("grg").unwrap(), Col::R).is_err());
        assert!(pitchfork(&parse_seq("gg").unwrap(), Col::G).is_err());
        let p = pitchfork(&parse_seq("rgrg").unwrap(), Col::G).unwrap();
        assert_eq!(p.top, parse_seq("rg").unwrap());
    }

    #[test]
    fn marks() {
        let u = DiagramLinComb::identity(&[Col::G], false);
        assert_eq!(evaluate(&u).unwrap_err(), Error::UnmarkedDiagram);
        let m = DiagramLinComb::identity(&[Col::G], true);
        assert_eq!(m.compose_h(&u).unwrap_err(), Error::MarkPlacement);
        assert!(u.compose_h(&m).unwrap().marked);
    }

    #[test]
    fn floating_barbells() {
        let b = barbell(Col::R).compose_h(&barbell(Col::G)).unwrap();
        let b2 = b.compose_v(&barbell(Col::G)).unwrap();
        let (slices, _) = b2.terms().next().unwrap();
        assert_eq!(barbell_monomial(&[], slices).unwrap(), (1, 2));
        assert_eq!(b2.degree(), Some(6));
        assert_eq!(end_empty_dimension(6), 4);
        assert_eq!(end_empty_dimension(3), 0);
    }

    #[test]
    fn dsl_roundtrip() {
        let text = "marked: true\nbottom: g\n+ 1/2 *\n.vG\n.^g\n";
        let d = dsl::parse_diagram(text).unwrap();
        assert_eq!(evaluate(&d).unwrap(), evaluate(&eps_diagram(1)).unwrap());
        assert_eq!(dsl::parse_diagram(&dsl::serialize(&d)).unwrap(), d);
        let jw = jones_wenzl(4);
        assert_eq!(dsl::parse_diagram(&dsl::serialize(&jw)).unwrap(), jw);
        let z = DiagramLinComb::zero(vec![Col::G], vec![Col::G, Col::G], true);
        assert_eq!(dsl::parse_diagram(&dsl::serialize(&z)).unwrap(), z);
        // Implicit single term; comments and several generators per slice.
        let d = dsl::parse_diagram("marked: true\nbottom: gg # two strands\n.vG .vG\n").unwrap();
        assert_eq!(d.top, vec![]);
        assert_eq!(d.terms().next().unwrap().0.len(), 2);
    }

    #[test]
    fn dsl_errors() {
        let e = dsl::parse_diagram("bottom: g\nm(g)\n").unwrap_err();
        assert!(matches!(e, Error::Arity { slice: 0, line: 2, .. }), "{e:?}");
        let e = dsl::parse_diagram("bottom: g\n|g x(r)\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, col: 4, msg: "unknown token `x(r)`".into() });
        assert!(matches!(dsl::parse_diagram("marked: maybe\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(dsl::parse_diagram("bottom: g\n+ 1/0 *\n"), Err(Error::Parse { .. })));
        assert!(matches!(dsl::parse_diagram("bottom: g\n+ 1 *\n.vG\n+ 1 *\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(dsl::parse_diagram("bottom: g\n|r\n"), Err(Error::Arity { .. })));
    }
}
