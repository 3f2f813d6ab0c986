//! Named diagrams: local relations, Jones-Wenzl projectors, pitchforks and
//! the hom bases between alternating sequences.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::eval::{evaluate, evaluate_full, full_object, lift_left};
use super::{alternating, is_alternating, seq_to_string, Col, DiagramLinComb, Token};
use crate::error::{Error, Result};
use crate::quiver::{hom_poincare, QuiverMatrix};
use crate::scalars::{int, rat, LaurentPoly, Rational};

fn gen(seq: &[Col], pos: usize, tok: Token) -> DiagramLinComb {
    DiagramLinComb::generator(seq, pos, tok, false).expect("generator fits its sequence")
}

fn id(seq: &[Col]) -> DiagramLinComb {
    DiagramLinComb::identity(seq, false)
}

fn then(lower: &DiagramLinComb, upper: &DiagramLinComb) -> DiagramLinComb {
    upper.compose_v(lower).expect("boundaries agree")
}

fn beside(left: &DiagramLinComb, right: &DiagramLinComb) -> DiagramLinComb {
    left.compose_h(right).expect("left factor is unmarked")
}

fn plus(a: &DiagramLinComb, b: &DiagramLinComb) -> DiagramLinComb {
    a.add(b).expect("boundaries agree")
}

pub fn startdot(c: Col) -> DiagramLinComb {
    gen(&[], 0, Token::DotUp(c))
}

pub fn enddot(c: Col) -> DiagramLinComb {
    gen(&[c], 0, Token::DotDown(c))
}

pub fn merge(c: Col) -> DiagramLinComb {
    gen(&[c, c], 0, Token::Merge(c))
}

pub fn split(c: Col) -> DiagramLinComb {
    gen(&[c], 0, Token::Split(c))
}

pub fn cup(c: Col) -> DiagramLinComb {
    then(&startdot(c), &split(c))
}

pub fn cap(c: Col) -> DiagramLinComb {
    then(&merge(c), &enddot(c))
}

/// A floating barbell on the empty sequence, of degree 2.
pub fn barbell(c: Col) -> DiagramLinComb {
    then(&startdot(c), &enddot(c))
}

/// A strand cut into two dotted halves.
pub fn broken(c: Col) -> DiagramLinComb {
    then(&enddot(c), &startdot(c))
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: DiagramLinComb,
    pub rhs: DiagramLinComb,
}

fn rel(name: &str, c: Col, lhs: DiagramLinComb, rhs: DiagramLinComb) -> Relation {
    Relation { name: format!("{name}({})", c.letter()), lhs, rhs }
}

/// The local relations of the diagrammatic category for one strand colour.
pub fn local_relations(c: Col) -> Vec<Relation> {
    let i1 = id(&[c]);
    let o = c.other();
    let two = int(2);
    let zero_cc = DiagramLinComb::zero(vec![c], vec![c], false);
    let split_merge = then(&merge(c), &split(c));
    vec![
        rel("assoc", c, then(&beside(&merge(c), &i1), &merge(c)), then(&beside(&i1, &merge(c)), &merge(c))),
        rel("coassoc", c, then(&split(c), &beside(&split(c), &i1)), then(&split(c), &beside(&i1, &split(c)))),
        rel("h-equals-i-left", c, split_merge.clone(), then(&beside(&split(c), &i1), &beside(&i1, &merge(c)))),
        rel("h-equals-i-right", c, split_merge, then(&beside(&i1, &split(c)), &beside(&merge(c), &i1))),
        rel("unit-left", c, then(&beside(&startdot(c), &i1), &merge(c)), i1.clone()),
        rel("unit-right", c, then(&beside(&i1, &startdot(c)), &merge(c)), i1.clone()),
        rel("counit-left", c, then(&split(c), &beside(&enddot(c), &i1)), i1.clone()),
        rel("counit-right", c, then(&split(c), &beside(&i1, &enddot(c))), i1.clone()),
        rel("needle", c, then(&split(c), &merge(c)), zero_cc),
        rel(
            "barbell-same",
            c,
            beside(&barbell(c), &i1),
            broken(c).scale(&two).sub(&beside(&i1, &barbell(c))).unwrap(),
        ),
        rel(
            "barbell-other",
            c,
            beside(&barbell(o), &i1),
            plus(
                &plus(&beside(&i1, &barbell(o)), &broken(c).scale(&two)),
                &beside(&i1, &barbell(c)).scale(&-two.clone()),
            ),
        ),
        rel("zigzag-left", c, then(&beside(&i1, &cup(c)), &beside(&cap(c), &i1)), i1.clone()),
        rel("zigzag-right", c, then(&beside(&cup(c), &i1), &beside(&i1, &cap(c))), i1.clone()),
        rel("rotate-merge-left", c, merge(c), then(&beside(&i1, &split(c)), &beside(&cap(c), &i1))),
        rel("rotate-merge-right", c, merge(c), then(&beside(&split(c), &i1), &beside(&i1, &cap(c)))),
        rel("rotate-split-left", c, split(c), then(&beside(&cup(c), &i1), &beside(&i1, &merge(c)))),
        rel("rotate-split-right", c, split(c), then(&beside(&i1, &cup(c)), &beside(&merge(c), &i1))),
        rel("rotate-enddot-left", c, enddot(c), then(&beside(&startdot(c), &i1), &cap(c))),
        rel("rotate-enddot-right", c, enddot(c), then(&beside(&i1, &startdot(c)), &cap(c))),
        rel("rotate-startdot-left", c, startdot(c), then(&cup(c), &beside(&enddot(c), &i1))),
        rel("rotate-startdot-right", c, startdot(c), then(&cup(c), &beside(&i1, &enddot(c)))),
    ]
}

pub fn all_local_relations() -> Vec<Relation> {
    let mut v = local_relations(Col::R);
    v.extend(local_relations(Col::G));
    v
}

/// Every word in `r, g` of length at most `n`.
pub fn words_up_to(n: usize) -> Vec<Vec<Col>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..n {
        let mut next = vec![];
        for w in &layer {
            for c in [Col::R, Col::G] {
                let mut x: Vec<Col> = w.clone();
                x.push(c);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `id_left ⊗ d ⊗ id_right`, marked.
pub fn in_context(left: &[Col], d: &DiagramLinComb, right: &[Col]) -> Result<DiagramLinComb> {
    let inner = d.with_marked(false).compose_h(&DiagramLinComb::identity(right, true))?;
    DiagramLinComb::identity(left, false).compose_h(&inner)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub instances: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks each relation inside every padding `(left, right)` with at most
/// `max_strands` strands on either boundary.
pub fn check_relations(relations: &[Relation], max_strands: usize) -> Result<RelationReport> {
    let words = words_up_to(max_strands);
    let mut jobs = vec![];
    for r in relations {
        let width = r.lhs.bottom.len().max(r.lhs.top.len());
        for left in &words {
            for right in &words {
                if left.len() + width + right.len() <= max_strands {
                    jobs.push((r, left, right));
                }
            }
        }
    }
    let results: Vec<Result<Option<RelationFailure>>> = jobs
        .par_iter()
        .map(|(r, left, right)| {
            let a = evaluate_full(&in_context(left, &r.lhs, right)?)?;
            let b = evaluate_full(&in_context(left, &r.rhs, right)?)?;
            Ok((a != b).then(|| RelationFailure {
                relation: r.name.clone(),
                left: seq_to_string(left),
                right: seq_to_string(right),
            }))
        })
        .collect();
    let mut failures = vec![];
    for x in results {
        failures.extend(x?);
    }
    Ok(RelationReport { instances: jobs.len(), failures })
}

/// Diagrams that must evaluate to zero at the marked face: anything red
/// there, and a green barbell there.
pub fn dead_end_diagrams() -> Vec<(String, DiagramLinComb)> {
    vec![
        ("red-at-mark".into(), id(&[Col::R])),
        ("red-dot-at-mark".into(), startdot(Col::R)),
        ("red-barbell-at-mark".into(), barbell(Col::R)),
        ("green-barbell-at-mark".into(), barbell(Col::G)),
    ]
}

pub fn check_dead_end(max_strands: usize) -> Result<RelationReport> {
    let mut instances = 0;
    let mut failures = vec![];
    for (name, d) in dead_end_diagrams() {
        let width = d.bottom.len().max(d.top.len());
        for left in words_up_to(max_strands.saturating_sub(width)) {
            instances += 1;
            if !evaluate_full(&in_context(&left, &d, &[])?)?.is_zero() {
                failures.push(RelationFailure { relation: name.clone(), left: seq_to_string(&left), right: String::new() });
            }
        }
    }
    Ok(RelationReport { instances, failures })
}

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors

/// The correction diagram of the recursion on `x_i` built around `inner`,
/// which acts on the rightmost `i - 3` strands.
fn jw_middle(i: usize, inner: &DiagramLinComb) -> DiagramLinComb {
    let x = alternating(i, Col::G);
    let c = x[0];
    let rest = &x[3..];
    let mut after_dot = vec![c, c];
    after_dot.extend_from_slice(rest);
    let mut merged = vec![c];
    merged.extend_from_slice(rest);
    let down = gen(&x, 1, Token::DotDown(x[1]));
    let m = gen(&after_dot, 0, Token::Merge(c));
    let mid = beside(&id(&[c]), inner);
    let s = gen(&merged, 0, Token::Split(c));
    let up = gen(&after_dot, 1, Token::DotUp(x[1]));
    then(&then(&then(&then(&down, &m), &mid), &s), &up)
}

fn jw_coefficient(i: usize) -> Rational {
    rat(i as i64 - 2, i as i64 - 1)
}

/// The projector on the alternating sequence of length `i` ending in green,
/// as an explicit (unmarked) linear combination.
pub fn jones_wenzl(i: usize) -> DiagramLinComb {
    let mut memo: Vec<DiagramLinComb> = vec![];
    for k in 0..=i {
        let x = alternating(k, Col::G);
        let jw = if k <= 2 {
            id(&x)
        } else {
            let a = beside(&id(&x[..1]), &memo[k - 1]);
            let corr = then(&then(&a, &jw_middle(k, &memo[k - 3])), &a);
            a.sub(&corr.scale(&jw_coefficient(k))).unwrap()
        };
        memo.push(jw);
    }
    memo.pop().unwrap()
}

fn jw_cache() -> &'static Mutex<HashMap<usize, Arc<QuiverMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QuiverMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn marked_eval(d: &DiagramLinComb) -> Result<QuiverMatrix> {
    evaluate_full(&d.with_marked(true))
}

/// The image of [`jones_wenzl`] under the full evaluation, computed through
/// the recursion on morphisms rather than by expanding the diagram.
pub fn evaluate_jones_wenzl(i: usize) -> Result<QuiverMatrix> {
    if let Some(m) = jw_cache().lock().unwrap().get(&i) {
        return Ok((**m).clone());
    }
    let x = alternating(i, Col::G);
    let out = if i <= 2 {
        QuiverMatrix::identity(full_object(&x))
    } else {
        let c = x[0];
        let a = lift_left(&[c], &evaluate_jones_wenzl(i - 1)?)?;
        let inner = lift_left(&[c], &evaluate_jones_wenzl(i - 3)?)?;
        let rest = &x[3..];
        let after_dot: Vec<Col> = [&[c, c][..], rest].concat();
        let merged: Vec<Col> = [&[c][..], rest].concat();
        let down = marked_eval(&gen(&x, 1, Token::DotDown(x[1])))?;
        let m = marked_eval(&gen(&after_dot, 0, Token::Merge(c)))?;
        let s = marked_eval(&gen(&merged, 0, Token::Split(c)))?;
        let up = marked_eval(&gen(&after_dot, 1, Token::DotUp(x[1])))?;
        let mid = up.compose(&s)?.compose(&inner)?.compose(&m)?.compose(&down)?;
        let corr = a.compose(&mid)?.compose(&a)?;
        a.add(&corr.scale(&-jw_coefficient(i)))?
    };
    jw_cache().lock().unwrap().insert(i, Arc::new(out.clone()));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Pitchforks

/// Merges every `c`-strand of an alternating window into one and caps the
/// others with dots. For even windows the strand at the non-`c` end passes
/// through.
pub fn pitchfork(window: &[Col], c: Col) -> Result<DiagramLinComb> {
    let n = window.len();
    if n < 3 || !is_alternating(window) {
        return Err(Error::InvalidParameter(format!("pitchforks need an alternating window of length >= 3, got {}", seq_to_string(window))));
    }
    let through = if n % 2 == 1 {
        if window[0] != c {
            return Err(Error::InvalidParameter(format!("odd window {} must start and end in {}", seq_to_string(window), c.letter())));
        }
        None
    } else if window[0] == c {
        Some(n - 1)
    } else {
        Some(0)
    };
    let mut seq = window.to_vec();
    let mut d = id(&seq);
    for pos in (0..n).rev() {
        if seq[pos] != c && Some(pos) != through {
            let g = gen(&seq, pos, Token::DotDown(seq[pos]));
            seq.remove(pos);
            d = then(&d, &g);
        }
    }
    let start = if through == Some(0) { 1 } else { 0 };
    while seq.iter().filter(|&&x| x == c).count() > 1 {
        let g = gen(&seq, start, Token::Merge(c));
        seq.remove(start);
        d = then(&d, &g);
    }
    Ok(d)
}

/// The upside-down pitchfork.
pub fn reflected_pitchfork(window: &[Col], c: Col) -> Result<DiagramLinComb> {
    Ok(pitchfork(window, c)?.flip_vertical())
}

/// All `(offset, window length, colour)` pitchfork placements on `x_i`.
pub fn pitchfork_placements(i: usize) -> Vec<(usize, usize, Col)> {
    let x = alternating(i, Col::G);
    let mut out = vec![];
    for len in 3..=i {
        for off in 0..=i - len {
            let w = &x[off..off + len];
            if len % 2 == 1 {
                out.push((off, len, w[0]));
            } else {
                out.push((off, len, Col::R));
                out.push((off, len, Col::G));
            }
        }
    }
    out
}

/// `id ⊗ P ⊗ id` on `x_i` for a placement.
pub fn placed_pitchfork(i: usize, off: usize, len: usize, c: Col, reflected: bool) -> Result<DiagramLinComb> {
    let x = alternating(i, Col::G);
    let p = if reflected { reflected_pitchfork(&x[off..off + len], c)? } else { pitchfork(&x[off..off + len], c)? };
    in_context(&x[..off], &p, &x[off + len..])
}

// ---------------------------------------------------------------------------
// Homs between alternating sequences

/// `x_i -> x_{i+1}`: a dot starting the new leftmost strand, scaled by
/// `2^i / (i+1)` so that it evaluates to the arrow `u_i`.
pub fn u_diagram(i: usize) -> DiagramLinComb {
    let x = alternating(i + 1, Col::G);
    gen(&x[1..], 0, Token::DotUp(x[0]))
        .with_marked(true)
        .scale(&rat(1i64 << i, i as i64 + 1))
}

/// `x_i -> x_{i-1}` normalised to evaluate to the arrow `d_i`.
pub fn d_diagram(i: usize) -> DiagramLinComb {
    let x = alternating(i, Col::G);
    gen(&x, 0, Token::DotDown(x[0])).with_marked(true).scale(&pow2_inv(i))
}

/// The degree-two endomorphism of `x_i`, `i >= 1`: the broken leftmost
/// strand over `2i`, evaluating to the loop.
pub fn eps_diagram(i: usize) -> DiagramLinComb {
    let x = alternating(i, Col::G);
    let b = then(&gen(&x, 0, Token::DotDown(x[0])), &gen(&x[1..], 0, Token::DotUp(x[0])));
    b.with_marked(true).scale(&rat(1, 2 * i as i64))
}

fn pow2_inv(i: usize) -> Rational {
    Rational::one() / int(1i64 << i)
}

/// A basis of the marked morphisms `x_i -> x_j` between alternating
/// sequences ending in green.
pub fn hom_basis(i: usize, j: usize) -> Vec<DiagramLinComb> {
    if i == j {
        let mut v = vec![DiagramLinComb::identity(&alternating(i, Col::G), true)];
        if i >= 1 {
            v.push(eps_diagram(i));
        }
        v
    } else if j == i + 1 {
        vec![u_diagram(i)]
    } else if i == j + 1 {
        vec![d_diagram(i)]
    } else {
        vec![]
    }
}

pub fn hom_dimension(i: usize, j: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for d in hom_basis(i, j) {
        p.add_term(d.degree().expect("basis diagrams are homogeneous"), Rational::one());
    }
    p
}

/// Confirms the basis evaluates to linearly independent morphisms with the
/// graded dimensions of the path algebra.
pub fn check_hom_basis(i: usize, j: usize) -> Result<bool> {
    let m = i.max(j) + 2;
    if hom_dimension(i, j) != hom_poincare(i, j, m) {
        return Ok(false);
    }
    let mut seen = vec![];
    for d in hom_basis(i, j) {
        let f = evaluate(&d)?;
        if f.is_zero() || f.degree()? != d.degree() {
            return Ok(false);
        }
        seen.push(f);
    }
    // Distinct degrees, or a single element, give independence.
    let mut degs: Vec<_> = seen.iter().map(|f| f.degree().ok().flatten()).collect();
    degs.dedup();
    Ok(degs.len() == seen.len())
}
