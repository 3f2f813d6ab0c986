//! The generators as natural transformations between words in `Θ_s, Θ_t`
//! on the quiver model.
//!
//! Only the leading blocks are prescribed directly; the components on the
//! lower summands are the unique solution of the naturality equations with
//! those leading blocks.

use std::collections::HashMap;

use num_traits::Zero;

use super::{Col, Token};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve};
use crate::quiver::{basis_paths, paths_between, summand, GradedModule, Path, QuiverElem, QuiverMatrix};
use crate::scalars::Rational;
use crate::tiltcat::{theta_on_morphism, theta_on_object};

/// `Θ_word`, innermost (rightmost) colour applied first.
pub fn word_object(word: &[Col], obj: &[crate::quiver::Summand]) -> GradedModule {
    word.iter().rev().fold(obj.to_vec(), |o, c| theta_on_object(c.theta(), &o))
}

pub fn word_morphism(word: &[Col], f: &QuiverMatrix) -> Result<QuiverMatrix> {
    let mut f = f.clone();
    for c in word.iter().rev() {
        f = theta_on_morphism(c.theta(), &f)?;
    }
    Ok(f)
}

/// Source and target functors of a generator.
pub fn functors(tok: Token) -> (Vec<Col>, Vec<Col>) {
    let c = tok.col();
    (vec![c; tok.bottom_arity()], vec![c; tok.top_arity()])
}

/// The prescribed block between leading summands at vertex `a`.
pub type LeadingTable = fn(Token, usize) -> Option<QuiverMatrix>;

#[derive(Clone, Debug)]
pub struct Components {
    pub tok: Token,
    /// `comps[a]` is the component at `_aP⟨0⟩`.
    pub comps: Vec<QuiverMatrix>,
    /// Dimension of the remaining freedom (should be zero).
    pub freedom: usize,
}

fn leading_rows(obj: &[crate::quiver::Summand]) -> Vec<usize> {
    match obj.iter().map(|s| s.vertex).max() {
        None => vec![],
        Some(top) => (0..obj.len()).filter(|&k| obj[k].vertex == top).collect(),
    }
}

/// Solves for the components at vertices `0..=n`, using naturality against
/// every arrow between those vertices.
pub fn solve_components(tok: Token, n: usize, table: LeadingTable) -> Result<Components> {
    let (sw, tw) = functors(tok);
    let src: Vec<GradedModule> = (0..=n).map(|a| word_object(&sw, &[summand(a, 0)])).collect();
    let tgt: Vec<GradedModule> = (0..=n).map(|a| word_object(&tw, &[summand(a, 0)])).collect();
    let deg = tok.degree();

    // Unknowns: one coefficient per admissible path in each entry.
    let mut vars: Vec<(usize, usize, usize, Path)> = vec![];
    let mut var_of: HashMap<(usize, usize, usize, Path), usize> = HashMap::new();
    for a in 0..=n {
        for (r, t) in tgt[a].iter().enumerate() {
            for (c, s) in src[a].iter().enumerate() {
                for p in paths_between(s.vertex, t.vertex, n + 4) {
                    if p.degree() + t.shift - s.shift == deg {
                        var_of.insert((a, r, c, p), vars.len());
                        vars.push((a, r, c, p));
                    }
                }
            }
        }
    }
    let nv = vars.len();
    let unit_matrix = |a: usize, r: usize, c: usize, p: Path| {
        let mut m = QuiverMatrix::zero(src[a].clone(), tgt[a].clone());
        m.entries[r][c] = QuiverElem::path(p);
        m
    };

    // Naturality: T(g) η_a = η_b S(g) for every basis path g: a -> b.
    let mut eqs: HashMap<(usize, usize, usize, Path), Vec<Rational>> = HashMap::new();
    let paths: Vec<Path> = basis_paths(n + 4).into_iter().filter(|g| g.source() <= n && g.target() <= n).collect();
    for (gi, &g) in paths.iter().enumerate() {
        let (a, b) = (g.source(), g.target());
        let gm = QuiverMatrix::single(summand(a, 0), summand(b, 0), QuiverElem::path(g));
        let sg = word_morphism(&sw, &gm)?;
        let tg = word_morphism(&tw, &gm)?;
        let mut add = |v: usize, m: &QuiverMatrix, sign: &Rational| {
            for (r, row) in m.entries.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    for (p, x) in e.terms() {
                        let row = eqs.entry((gi, r, c, p)).or_insert_with(|| vec![Rational::zero(); nv]);
                        row[v] += x * sign;
                    }
                }
            }
        };
        let one = Rational::from_integer(1.into());
        for (v, &(va, r, c, p)) in vars.iter().enumerate() {
            if va == a {
                add(v, &tg.compose(&unit_matrix(va, r, c, p))?, &one);
            }
            if va == b {
                add(v, &unit_matrix(va, r, c, p).compose(&sg)?, &-one.clone());
            }
        }
    }
    let mut rows: Vec<Vec<Rational>> = eqs.into_values().collect();
    let mut rhs: Vec<Rational> = vec![Rational::zero(); rows.len()];

    // Leading blocks.
    for a in 0..=n {
        let Some(want) = table(tok, a) else { continue };
        let lr = leading_rows(&tgt[a]);
        let lc = leading_rows(&src[a]);
        if want.rows() != lr.len() || want.cols() != lc.len() {
            return Err(Error::Internal(format!("leading table for {} at {a} has the wrong shape", tok.dsl())));
        }
        for (i, &r) in lr.iter().enumerate() {
            for (j, &c) in lc.iter().enumerate() {
                for p in paths_between(src[a][c].vertex, tgt[a][r].vertex, n + 4) {
                    let x = want.entries[i][j].coeff(p);
                    match var_of.get(&(a, r, c, p)) {
                        Some(&v) => {
                            let mut row = vec![Rational::zero(); nv];
                            row[v] = Rational::from_integer(1.into());
                            rows.push(row);
                            rhs.push(x);
                        }
                        None if !x.is_zero() => {
                            return Err(Error::Internal(format!("leading table for {} at {a} has the wrong degree", tok.dsl())))
                        }
                        None => {}
                    }
                }
            }
        }
    }
    let x = solve(&Rational::zero(), &rows, &rhs, nv)
        .ok_or_else(|| Error::RelationFailure { relation: format!("naturality of {}", tok.dsl()), witness: "no solution".into() })?;
    let freedom = nullspace(&Rational::zero(), &rows, nv).len();
    let mut comps: Vec<QuiverMatrix> = (0..=n).map(|a| QuiverMatrix::zero(src[a].clone(), tgt[a].clone())).collect();
    for (v, &(a, r, c, p)) in vars.iter().enumerate() {
        if !x[v].is_zero() {
            comps[a].entries[r][c].add_term(p, x[v].clone());
        }
    }
    Ok(Components { tok, comps, freedom })
}
