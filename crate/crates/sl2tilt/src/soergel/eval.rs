//! The evaluation functor from marked diagrams to tilting modules.
//!
//! A sequence acts on `T_0` through `Θ_s` (red) and `Θ_t` (green), rightmost
//! strand first. Generators are natural transformations between words in
//! the two functors, so a slice is the component of its generator at the
//! image of the strands to its right, pushed through the functors of the
//! strands to its left. [`evaluate_full`] is this functor on the whole
//! image; [`evaluate`] keeps only the leading summands `T_k`, which is the
//! tilting module a sequence stands for.

use std::collections::HashMap;

use super::nat::{word_morphism, word_object};
use super::{seq_to_string, Col, DiagramLinComb, Slice, Token};
use crate::error::{Error, Result};
use crate::quiver::{summand, GradedModule, Path, QuiverElem, QuiverMatrix, Summand};
use crate::scalars::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Out,
    Double,
    Kill,
}

fn step_kind(c: Col, k: usize) -> Step {
    match (c, k % 2) {
        (Col::R, _) if k == 0 => Step::Kill,
        (Col::G, 0) | (Col::R, 1) => Step::Out,
        _ => Step::Double,
    }
}

/// The full image `Θ_x T_0`.
pub fn full_object(seq: &[Col]) -> GradedModule {
    word_object(seq, &[summand(0, 0)])
}

fn leading_indices(obj: &[Summand]) -> Vec<usize> {
    match obj.iter().map(|s| s.vertex).max() {
        None => vec![],
        Some(top) => (0..obj.len()).filter(|&k| obj[k].vertex == top).collect(),
    }
}

fn leading_part(obj: &[Summand]) -> GradedModule {
    leading_indices(obj).into_iter().map(|k| obj[k]).collect()
}

/// The tilting module a sequence stands for: copies of a single `T_k`.
pub fn evaluate_object(seq: &[Col]) -> GradedModule {
    leading_part(&full_object(seq))
}

/// Restricts a morphism between full images to their leading summands.
pub fn leading_block(f: &QuiverMatrix) -> QuiverMatrix {
    f.restrict(&leading_indices(&f.target), &leading_indices(&f.source))
}

/// Pushes `f` through the functors of the strands in `left`.
pub fn lift_left(left: &[Col], f: &QuiverMatrix) -> Result<QuiverMatrix> {
    word_morphism(left, f)
}

fn pow2(k: usize) -> Rational {
    int(1i64 << k)
}

/// Weight `j / 2^(j-1)` of the summand `B_j` in the unit of each
/// adjunction. With it both barbells act on `_jP` as `4j ε_j`, which is
/// what the mixed barbell relation needs; merges carry the inverse.
pub fn unit_weight(j: usize) -> Rational {
    rat(j as i64, 1i64 << (j - 1))
}

fn shifted_all(obj: &[Summand], by: i64) -> GradedModule {
    obj.iter().map(|s| summand(s.vertex, s.shift + by)).collect()
}

/// Component of a generator at `_aP⟨s⟩`, between the images of its bottom
/// and top legs.
pub fn component(tok: Token, a: usize, s: i64) -> QuiverMatrix {
    let (bot, top) = super::nat::functors(tok);
    let src = shifted_all(&word_object(&bot, &[summand(a, 0)]), s);
    let tgt = shifted_all(&word_object(&top, &[summand(a, 0)]), s);
    let mut out = QuiverMatrix::zero(src.clone(), tgt.clone());
    let kind = step_kind(tok.col(), a);
    if kind == Step::Kill {
        return out;
    }
    let idem = |v: usize| QuiverElem::path(Path::Idem(v));
    match tok {
        Token::Id(_) => return QuiverMatrix::identity(src),
        Token::DotUp(_) => {
            for (r, t) in tgt.iter().enumerate() {
                let e = match (kind, t.vertex) {
                    (Step::Double, _) if t.shift < s => QuiverElem::term(Path::Loop(a), pow2(a)),
                    (Step::Double, _) => idem(a),
                    (_, v) if v == a + 1 => QuiverElem::path(Path::Up(a)),
                    _ => QuiverElem::term(Path::Down(a), pow2(a - 1)),
                };
                out.entries[r][0] = e.scale(&unit_weight(t.vertex));
            }
        }
        Token::DotDown(_) => {
            for (c, t) in src.iter().enumerate() {
                out.entries[0][c] = match (kind, t.vertex) {
                    (Step::Double, _) if t.shift < s => idem(a),
                    (Step::Double, _) => QuiverElem::term(Path::Loop(a), pow2(a)),
                    (_, v) if v == a + 1 => QuiverElem::term(Path::Down(a + 1), pow2(a + 1)),
                    _ => QuiverElem::path(Path::Up(a - 1)),
                };
            }
        }
        // Each summand of the single image doubles; merge keeps the upper
        // copy and split feeds the lower one.
        Token::Merge(_) => {
            for (r, t) in tgt.iter().enumerate() {
                out.entries[r][2 * r + 1] = idem(t.vertex).scale(&unit_weight(t.vertex).recip());
            }
        }
        Token::Split(_) => {
            for (c, t) in src.iter().enumerate() {
                out.entries[2 * c][c] = idem(t.vertex);
            }
        }
    }
    out
}

/// The generator at the object `obj`, summand by summand.
fn component_at(tok: Token, obj: &[Summand]) -> QuiverMatrix {
    let blocks: Vec<QuiverMatrix> = obj.iter().map(|s| component(tok, s.vertex, s.shift)).collect();
    QuiverMatrix::block_diag(&blocks)
}

type Cache = HashMap<(Vec<Col>, Slice), QuiverMatrix>;

fn evaluate_slice(seq: &[Col], slice: &Slice, cache: &mut Cache) -> Result<QuiverMatrix> {
    let key = (seq.to_vec(), slice.clone());
    if let Some(m) = cache.get(&key) {
        return Ok(m.clone());
    }
    let out = match slice.iter().position(|t| !t.is_identity()) {
        None => QuiverMatrix::identity(full_object(seq)),
        Some(pos) => {
            let tok = slice[pos];
            let right = &seq[pos + tok.bottom_arity()..];
            lift_left(&seq[..pos], &component_at(tok, &full_object(right)))?
        }
    };
    cache.insert(key, out.clone());
    Ok(out)
}

fn evaluate_slices(bottom: &[Col], slices: &[Slice], cache: &mut Cache) -> Result<QuiverMatrix> {
    let mut seq = bottom.to_vec();
    let mut acc = QuiverMatrix::identity(full_object(bottom));
    for s in slices {
        let f = evaluate_slice(&seq, s, cache)?;
        acc = f.compose(&acc)?;
        seq = super::apply_slice(s, &seq).map_err(Error::Internal)?;
    }
    Ok(acc)
}

/// The functor on the whole image `Θ_bottom T_0 -> Θ_top T_0`.
pub fn evaluate_full(d: &DiagramLinComb) -> Result<QuiverMatrix> {
    if !d.marked {
        return Err(Error::UnmarkedDiagram);
    }
    let mut cache = Cache::new();
    let mut acc = QuiverMatrix::zero(full_object(&d.bottom), full_object(&d.top));
    for (slices, c) in d.terms() {
        let f = evaluate_slices(&d.bottom, slices, &mut cache)?;
        acc = acc.add(&f.scale(c))?;
    }
    Ok(acc)
}

/// Evaluates a marked diagram to a morphism between the tilting modules of
/// its boundary sequences.
pub fn evaluate(d: &DiagramLinComb) -> Result<QuiverMatrix> {
    Ok(leading_block(&evaluate_full(d)?))
}

/// Equality decided through the faithful evaluation: both sides are
/// sandwiched between the projectors of their boundaries and compared on
/// the leading summands.
pub fn diagrams_equal(a: &DiagramLinComb, b: &DiagramLinComb) -> Result<bool> {
    if a.bottom != b.bottom || a.top != b.top {
        return Err(Error::BoundaryMismatch(format!(
            "{} -> {} vs {} -> {}",
            seq_to_string(&a.bottom),
            seq_to_string(&a.top),
            seq_to_string(&b.bottom),
            seq_to_string(&b.top)
        )));
    }
    let lo = boundary_projector(&a.bottom)?;
    let hi = boundary_projector(&a.top)?;
    let fa = hi.compose(&evaluate_full(a)?)?.compose(&lo)?;
    let fb = hi.compose(&evaluate_full(b)?)?.compose(&lo)?;
    Ok(leading_block(&fa) == leading_block(&fb))
}

/// The image of the Jones-Wenzl projector for alternating sequences ending
/// in green, the identity otherwise.
pub fn boundary_projector(seq: &[Col]) -> Result<QuiverMatrix> {
    if super::is_alternating(seq) && seq.last() == Some(&Col::G) {
        super::library::evaluate_jones_wenzl(seq.len())
    } else {
        Ok(QuiverMatrix::identity(full_object(seq)))
    }
}

/// The prescribed block between leading summands next to `_kP⟨0⟩`, used to
/// pin down the components by naturality; `None` at the dead end.
pub fn leading_table(tok: Token, k: usize) -> Option<QuiverMatrix> {
    if step_kind(tok.col(), k) == Step::Kill {
        return None;
    }
    let c = component(tok, k, 0);
    Some(leading_block(&c))
}
