//! Projective endofunctors of the tilting block: composites of `Θ_s, Θ_t`
//! (or of the single bimodule functors `U_j`), natural transformations
//! between them as block matrices over `T_0, T_1, ...`, and diagram families
//! evaluating to them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, Echelon};
use crate::quiver::{
    apply_u_sum, apply_u_sum_morphism, basis_paths, hom_poincare, paths_between, shifted, summand, GradedModule,
    Path, QuiverElem, QuiverMatrix, Summand,
};
use crate::scalars::{LaurentPoly, Rational};
use crate::soergel::eval::{evaluate_full, full_object};
use crate::soergel::nat::word_object;
use crate::soergel::{alternating, seq_to_string, Col, DiagramLinComb};
use crate::tiltcat::{evaluate_theta_word, theta_on_morphism, tilting, Color, ThetaWord};

/// `Θ_x⟨shift⟩` for a word `x` over `{s, t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ThetaWordObject {
    pub word: ThetaWord,
    pub shift: i64,
}

impl ThetaWordObject {
    pub fn new(word: ThetaWord, shift: i64) -> Self {
        Self { word, shift }
    }

    pub fn from_cols(cols: &[Col], shift: i64) -> Self {
        Self::new(ThetaWord(cols.iter().map(|c| c.theta()).collect()), shift)
    }

    pub fn cols(&self) -> Vec<Col> {
        self.word.0.iter().map(|&c| col_of(c)).collect()
    }

    /// `Θ_x⟨shift⟩(obj)`.
    pub fn on_object(&self, obj: &[Summand]) -> GradedModule {
        shifted(&evaluate_theta_word(&self.word, obj), self.shift)
    }

    pub fn on_morphism(&self, f: &QuiverMatrix) -> Result<QuiverMatrix> {
        let mut f = f.clone();
        for c in self.word.acting_order() {
            f = theta_on_morphism(c, &f)?;
        }
        Ok(shift_matrix(&f, self.shift))
    }

    /// `Θ_c ∘ Θ_x`.
    pub fn then(&self, c: Color) -> Self {
        let mut w = vec![c];
        w.extend(self.word.0.iter().copied());
        Self::new(ThetaWord(w), self.shift)
    }
}

impl fmt::Display for ThetaWordObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "∅")?;
        } else {
            write!(f, "{}", self.word)?;
        }
        if self.shift != 0 {
            write!(f, "<{}>", self.shift)?;
        }
        Ok(())
    }
}

/// `st`, `st<-1>`, or `-`/empty for the identity functor.
impl FromStr for ThetaWordObject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (w, shift) = match s.find('<') {
            Some(p) => {
                let inner = s[p + 1..]
                    .strip_suffix('>')
                    .ok_or_else(|| Error::InvalidParameter(format!("unclosed shift in {s:?}")))?;
                let shift = inner.parse().map_err(|_| Error::InvalidParameter(format!("bad shift in {s:?}")))?;
                (&s[..p], shift)
            }
            None => (s, 0),
        };
        let w = if w == "-" || w == "∅" { "" } else { w };
        Ok(Self::new(w.parse()?, shift))
    }
}

fn col_of(c: Color) -> Col {
    match c {
        Color::S => Col::R,
        Color::T => Col::G,
    }
}

fn shift_matrix(f: &QuiverMatrix, by: i64) -> QuiverMatrix {
    QuiverMatrix { source: shifted(&f.source, by), target: shifted(&f.target, by), entries: f.entries.clone() }
}

// ---------------------------------------------------------------------------
// Block matrices

/// A natural transformation `Θ_x -> Θ_x'` recorded by its blocks
/// `Θ_x(T_k) -> Θ_x'(T_k')` for `k, k' < bound`; absent blocks are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMorphism {
    pub source: ThetaWordObject,
    pub target: ThetaWordObject,
    pub bound: usize,
    blocks: BTreeMap<(usize, usize), QuiverMatrix>,
}

impl EndoMorphism {
    pub fn zero(source: ThetaWordObject, target: ThetaWordObject, bound: usize) -> Self {
        Self { source, target, bound, blocks: BTreeMap::new() }
    }

    pub fn identity(x: ThetaWordObject, bound: usize) -> Self {
        let mut out = Self::zero(x.clone(), x.clone(), bound);
        for k in 0..bound {
            let obj = x.on_object(&tilting(k));
            if !obj.is_empty() {
                out.blocks.insert((k, k), QuiverMatrix::identity(obj));
            }
        }
        out
    }

    pub fn source_at(&self, k: usize) -> GradedModule {
        self.source.on_object(&tilting(k))
    }

    pub fn target_at(&self, k: usize) -> GradedModule {
        self.target.on_object(&tilting(k))
    }

    /// Sets the block `(row, col)` after checking its shape.
    pub fn set(&mut self, row: usize, col: usize, block: QuiverMatrix) -> Result<()> {
        if row >= self.bound || col >= self.bound {
            return Err(Error::IncompatibleShapes(format!("block ({row}, {col}) outside bound {}", self.bound)));
        }
        let (src, tgt) = (self.source_at(col), self.target_at(row));
        if block.source != src || block.target != tgt {
            return Err(Error::IncompatibleShapes(format!(
                "block ({row}, {col}) should map {} to {}",
                self.source, self.target
            )));
        }
        block.validate()?;
        if block.is_zero() {
            self.blocks.remove(&(row, col));
        } else {
            self.blocks.insert((row, col), block);
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> QuiverMatrix {
        self.blocks
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| QuiverMatrix::zero(self.source_at(col), self.target_at(row)))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(usize, usize), &QuiverMatrix)> {
        self.blocks.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `self ∘ lower`.
    pub fn compose(&self, lower: &EndoMorphism) -> Result<EndoMorphism> {
        if lower.target != self.source || lower.bound != self.bound {
            return Err(Error::IncompatibleShapes(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, lower.source, lower.target
            )));
        }
        let mut out = Self::zero(lower.source.clone(), self.target.clone(), self.bound);
        for r in 0..self.bound {
            for c in 0..self.bound {
                let mut acc = QuiverMatrix::zero(out.source_at(c), out.target_at(r));
                for k in 0..self.bound {
                    if let (Some(a), Some(b)) = (self.blocks.get(&(r, k)), lower.blocks.get(&(k, c))) {
                        acc = acc.add(&a.compose(b)?)?;
                    }
                }
                out.set(r, c, acc)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> EndoMorphism {
        let mut out = Self::zero(self.source.clone(), self.target.clone(), self.bound);
        for (&k, b) in &self.blocks {
            let s = b.scale(c);
            if !s.is_zero() {
                out.blocks.insert(k, s);
            }
        }
        out
    }

    /// For transformations of the identity functor, the element
    /// `Σ_k (block at T_k)` of the path algebra.
    pub fn central_element(&self) -> Option<QuiverElem> {
        if !self.source.word.is_empty() || !self.target.word.is_empty() || self.source.shift != self.target.shift {
            return None;
        }
        let mut z = QuiverElem::zero();
        for (&(r, c), b) in &self.blocks {
            if r != c {
                return None;
            }
            z = z.add(&b.entries[0][0]);
        }
        Some(z)
    }
}

impl Serialize for EndoMorphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Block<'a> {
            row: usize,
            col: usize,
            matrix: &'a QuiverMatrix,
        }
        let blocks: Vec<Block> =
            self.blocks.iter().map(|(&(row, col), matrix)| Block { row, col, matrix }).collect();
        let mut st = s.serialize_struct("EndoMorphism", 4)?;
        st.serialize_field("source", &self.source.to_string())?;
        st.serialize_field("target", &self.target.to_string())?;
        st.serialize_field("bound", &self.bound)?;
        st.serialize_field("blocks", &blocks)?;
        st.end()
    }
}

fn generators(bound: usize) -> Vec<(usize, usize, Path)> {
    let mut out = vec![];
    for k in 0..bound.saturating_sub(1) {
        out.push((k, k + 1, Path::Up(k)));
        out.push((k + 1, k, Path::Down(k + 1)));
    }
    out
}

/// Whether the blocks form a natural transformation: block diagonal (forced
/// by the idempotents) and commuting with the images of every `u_k` and
/// `d_{k+1}` inside the bound.
pub fn check_naturality(f: &EndoMorphism) -> Result<bool> {
    for (&(r, c), b) in &f.blocks {
        if b.source != f.source_at(c) || b.target != f.target_at(r) {
            return Err(Error::IncompatibleShapes(format!("block ({r}, {c})")));
        }
        if r != c {
            return Ok(false);
        }
    }
    for (a, b, g) in generators(f.bound) {
        let gm = QuiverMatrix::single(summand(a, 0), summand(b, 0), QuiverElem::path(g));
        let lhs = f.get(b, b).compose(&f.source.on_morphism(&gm)?)?;
        let rhs = f.target.on_morphism(&gm)?.compose(&f.get(a, a))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Bimodule functors on Q_m

/// `B_{x_1} ⊗ ⋯ ⊗ B_{x_n}` over `Q_m`: the functor `U_{x_n} ∘ ⋯ ∘ U_{x_1}`,
/// written with the first-acting index rightmost.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimoduleWord {
    indices: Vec<usize>,
    m: usize,
}

impl BimoduleWord {
    pub fn new(indices: Vec<usize>, m: usize) -> Result<Self> {
        if let Some(&j) = indices.iter().find(|&&j| j == 0 || j > m) {
            return Err(Error::InvalidParameter(format!("functor index {j} outside 1..={m}")));
        }
        Ok(Self { indices, m })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// A direct sum of shifted composites of `U_J = ⊕_{j ∈ J} U_j` on `Q_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endofunctor {
    pub m: usize,
    /// Factors in acting order, with the shift of the term.
    terms: Vec<(Vec<Vec<usize>>, i64)>,
}

impl Endofunctor {
    pub fn theta(x: &ThetaWordObject, m: usize) -> Self {
        let factors = x.word.acting_order().map(|c| c.parity().indices(m)).collect();
        Self { m, terms: vec![(factors, x.shift)] }
    }

    pub fn bimodule(w: &BimoduleWord) -> Self {
        let factors = w.indices.iter().rev().map(|&j| vec![j]).collect();
        Self { m: w.m, terms: vec![(factors, 0)] }
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self { m: self.m, terms: self.terms.iter().map(|(f, s)| (f.clone(), s + by)).collect() }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::IncompatibleShapes(format!("cutoffs {} and {}", self.m, other.m)));
        }
        Ok(Self { m: self.m, terms: [self.terms.clone(), other.terms.clone()].concat() })
    }

    pub fn on_object(&self, obj: &[Summand]) -> GradedModule {
        let mut out = vec![];
        for (factors, s) in &self.terms {
            let o = factors.iter().fold(obj.to_vec(), |o, js| apply_u_sum(js, &o, self.m));
            out.extend(shifted(&o, *s));
        }
        out
    }

    pub fn on_morphism(&self, f: &QuiverMatrix) -> Result<QuiverMatrix> {
        let mut blocks = vec![];
        for (factors, s) in &self.terms {
            let mut g = f.clone();
            for js in factors {
                g = apply_u_sum_morphism(js, &g, self.m)?;
            }
            blocks.push(shift_matrix(&g, *s));
        }
        let mut out = QuiverMatrix::block_diag(&blocks);
        out.source = self.on_object(&f.source);
        out.target = self.on_object(&f.target);
        Ok(out)
    }
}

type Var = (usize, usize, usize, Path);

/// Basis of the degree-`d` natural transformations `src -> tgt`, each given
/// by its components at `_0P, ..., _mP`.
pub fn natural_transformations(src: &Endofunctor, tgt: &Endofunctor, d: i64) -> Result<Vec<Vec<QuiverMatrix>>> {
    let m = src.m;
    let s_obj: Vec<GradedModule> = (0..=m).map(|a| src.on_object(&[summand(a, 0)])).collect();
    let t_obj: Vec<GradedModule> = (0..=m).map(|a| tgt.on_object(&[summand(a, 0)])).collect();
    let vars = unknowns(&s_obj, &t_obj, m, Some(d));
    let nv = vars.len();
    if nv == 0 {
        return Ok(vec![]);
    }
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (v, &(a, ..)) in vars.iter().enumerate() {
        by_vertex.entry(a).or_default().push(v);
    }
    let unit = |(a, r, c, p): Var| {
        let mut x = QuiverMatrix::zero(s_obj[a].clone(), t_obj[a].clone());
        x.entries[r][c] = QuiverElem::path(p);
        x
    };
    let one = Rational::from_integer(1.into());
    let mut rows = vec![];
    for g in basis_paths(m) {
        let (a, b) = (g.source(), g.target());
        let gm = QuiverMatrix::single(summand(a, 0), summand(b, 0), QuiverElem::path(g));
        let (sg, tg) = (src.on_morphism(&gm)?, tgt.on_morphism(&gm)?);
        let mut eqs: BTreeMap<(usize, usize, Path), Vec<Rational>> = BTreeMap::new();
        let mut add = |v: usize, x: &QuiverMatrix, sign: &Rational| {
            for (r, row) in x.entries.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    for (p, coeff) in e.terms() {
                        eqs.entry((r, c, p)).or_insert_with(|| vec![Rational::zero(); nv])[v] += coeff * sign;
                    }
                }
            }
        };
        for &v in by_vertex.get(&a).into_iter().flatten() {
            add(v, &tg.compose(&unit(vars[v]))?, &one);
        }
        for &v in by_vertex.get(&b).into_iter().flatten() {
            add(v, &unit(vars[v]).compose(&sg)?, &-one.clone());
        }
        rows.extend(eqs.into_values());
    }
    let basis = nullspace(&Rational::zero(), &rows, nv);
    Ok(basis
        .into_iter()
        .map(|x| {
            let mut comps: Vec<QuiverMatrix> =
                (0..=m).map(|a| QuiverMatrix::zero(s_obj[a].clone(), t_obj[a].clone())).collect();
            for (v, &(a, r, c, p)) in vars.iter().enumerate() {
                if !x[v].is_zero() {
                    comps[a].entries[r][c].add_term(p, x[v].clone());
                }
            }
            comps
        })
        .collect())
}

fn unknowns(s_obj: &[GradedModule], t_obj: &[GradedModule], m: usize, d: Option<i64>) -> Vec<Var> {
    let mut vars = vec![];
    for a in 0..=m {
        for (r, t) in t_obj[a].iter().enumerate() {
            for (c, s) in s_obj[a].iter().enumerate() {
                for p in paths_between(s.vertex, t.vertex, m) {
                    if d.is_none_or(|d| p.degree() + t.shift - s.shift == d) {
                        vars.push((a, r, c, p));
                    }
                }
            }
        }
    }
    vars
}

/// Graded dimension of the natural transformations `src -> tgt`, that is
/// of the bimodule homs between the representing bimodules.
pub fn natural_hom_dimension(src: &Endofunctor, tgt: &Endofunctor) -> Result<LaurentPoly> {
    let m = src.m;
    let s_obj: Vec<GradedModule> = (0..=m).map(|a| src.on_object(&[summand(a, 0)])).collect();
    let t_obj: Vec<GradedModule> = (0..=m).map(|a| tgt.on_object(&[summand(a, 0)])).collect();
    let degrees: BTreeSet<i64> = unknowns(&s_obj, &t_obj, m, None)
        .into_iter()
        .map(|(a, r, c, p)| p.degree() + t_obj[a][r].shift - s_obj[a][c].shift)
        .collect();
    let mut out = LaurentPoly::zero();
    for d in degrees {
        let n = natural_transformations(src, tgt, d)?.len();
        out.add_term(d, Rational::from_integer(n.into()));
    }
    Ok(out)
}

/// Graded dimension of `Hom(Θ_x, Θ_x')` over `Q_m`. Agrees with the
/// infinite quiver for components at vertices at least the word length
/// away from `m`.
pub fn endo_hom_dimension(x: &ThetaWordObject, y: &ThetaWordObject, m: usize) -> Result<LaurentPoly> {
    natural_hom_dimension(&Endofunctor::theta(x, m), &Endofunctor::theta(y, m))
}

/// `Hom(B_x, B_y)` for nonempty words through the projective bimodule
/// decomposition `B_x ≅ Qe_{first} ⊗ e_{last}Q ⊗ V_x`.
pub fn bimodule_hom_formula(x: &BimoduleWord, y: &BimoduleWord) -> Result<LaurentPoly> {
    if x.m != y.m || x.indices.is_empty() || y.indices.is_empty() {
        return Err(Error::InvalidParameter("formula needs nonempty words over the same cutoff".into()));
    }
    let m = x.m;
    let mult = |w: &[usize]| {
        let mut p = LaurentPoly::v_pow(-(w.len() as i64));
        for pair in w.windows(2) {
            p = &p * &hom_poincare(pair[0], pair[1], m);
        }
        p
    };
    let (xf, xl) = (x.indices[x.indices.len() - 1], x.indices[0]);
    let (yf, yl) = (y.indices[y.indices.len() - 1], y.indices[0]);
    let ends = &hom_poincare(xf, yf, m) * &hom_poincare(yl, xl, m);
    Ok(&(&ends * &mult(&y.indices)) * &mult(&x.indices).bar())
}

// ---------------------------------------------------------------------------
// Diagram families

/// A matrix of marked diagrams: the entry `(k', k)` goes from
/// `source x_k` to `target x_k'`, with `x_k` the alternating sequence of
/// length `k` ending in green.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoDiagram {
    pub source: Vec<Col>,
    pub target: Vec<Col>,
    pub bound: usize,
    entries: BTreeMap<(usize, usize), DiagramLinComb>,
}

impl EndoDiagram {
    pub fn zero(source: Vec<Col>, target: Vec<Col>, bound: usize) -> Self {
        Self { source, target, bound, entries: BTreeMap::new() }
    }

    /// The family `η ⊗ id_{x_k}` of an unmarked diagram `η`.
    pub fn diagonal(eta: &DiagramLinComb, bound: usize) -> Result<Self> {
        if eta.marked {
            return Err(Error::MarkPlacement);
        }
        let mut out = Self::zero(eta.bottom.clone(), eta.top.clone(), bound);
        for k in 0..bound {
            out.set(k, k, eta.compose_h(&DiagramLinComb::identity(&alternating(k, Col::G), true))?)?;
        }
        Ok(out)
    }

    pub fn set(&mut self, row: usize, col: usize, d: DiagramLinComb) -> Result<()> {
        let bottom = [self.source.clone(), alternating(col, Col::G)].concat();
        let top = [self.target.clone(), alternating(row, Col::G)].concat();
        if row >= self.bound || col >= self.bound {
            return Err(Error::IncompatibleShapes(format!("entry ({row}, {col}) outside bound {}", self.bound)));
        }
        if d.bottom != bottom || d.top != top {
            return Err(Error::BoundaryMismatch(format!(
                "entry ({row}, {col}) should go {} -> {}",
                seq_to_string(&bottom),
                seq_to_string(&top)
            )));
        }
        if !d.marked {
            return Err(Error::UnmarkedDiagram);
        }
        if d.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), d);
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&DiagramLinComb> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &DiagramLinComb)> {
        self.entries.iter()
    }

    /// Entrywise vertical composition of diagonal families.
    pub fn compose(&self, lower: &EndoDiagram) -> Result<EndoDiagram> {
        if lower.target != self.source || lower.bound != self.bound {
            return Err(Error::BoundaryMismatch(format!(
                "families {} -> {} and {} -> {}",
                seq_to_string(&lower.source),
                seq_to_string(&lower.target),
                seq_to_string(&self.source),
                seq_to_string(&self.target)
            )));
        }
        let mut out = Self::zero(lower.source.clone(), self.target.clone(), self.bound);
        for r in 0..self.bound {
            for c in 0..self.bound {
                let mut acc: Option<DiagramLinComb> = None;
                for k in 0..self.bound {
                    if let (Some(a), Some(b)) = (self.get(r, k), lower.get(k, c)) {
                        let p = a.compose_v(b)?;
                        acc = Some(match acc {
                            None => p,
                            Some(x) => x.add(&p)?,
                        });
                    }
                }
                if let Some(d) = acc {
                    out.set(r, c, d)?;
                }
            }
        }
        Ok(out)
    }
}

/// Positions in `Θ_word(inner)` of the summands coming from `inner[keep]`.
fn image_positions(word: &[Col], inner: &[Summand], keep: usize) -> Vec<usize> {
    let mut pos = 0;
    for (k, s) in inner.iter().enumerate() {
        let n = word_object(word, &[*s]).len();
        if k == keep {
            return (pos..pos + n).collect();
        }
        pos += n;
    }
    vec![]
}

/// The leading summand `T_k` of `Θ_{x_k} T_0`.
fn leading_position(k: usize) -> usize {
    full_object(&alternating(k, Col::G))
        .iter()
        .position(|s| s.vertex == k && s.shift == 0)
        .expect("alternating words contain their leading tilting once")
}

/// Evaluates a diagonal family block by block and checks that the result
/// is natural.
pub fn evaluate_endo_diagram(f: &EndoDiagram) -> Result<EndoMorphism> {
    if let Some((&(r, c), _)) = f.entries.iter().find(|((r, c), _)| r != c) {
        return Err(Error::IncompatibleShapes(format!("family is not diagonal: entry ({r}, {c})")));
    }
    let src = ThetaWordObject::from_cols(&f.source, 0);
    let tgt = ThetaWordObject::from_cols(&f.target, 0);
    let mut out = EndoMorphism::zero(src, tgt, f.bound);
    for (&(k, _), d) in &f.entries {
        let full = evaluate_full(d)?;
        let inner = full_object(&alternating(k, Col::G));
        let lead = leading_position(k);
        let rows = image_positions(&f.target, &inner, lead);
        let cols = image_positions(&f.source, &inner, lead);
        out.set(k, k, full.restrict(&rows, &cols))?;
    }
    if !check_naturality(&out)? {
        return Err(Error::NotNatural(format!(
            "family {} -> {}",
            seq_to_string(&f.source),
            seq_to_string(&f.target)
        )));
    }
    Ok(out)
}

/// The families with a single `ε_i` on the diagonal of the empty word, for
/// `1 <= i <= m - 2`.
pub fn center_diagram_basis(m: usize) -> Vec<EndoDiagram> {
    (1..=m.saturating_sub(2))
        .map(|i| {
            let mut f = EndoDiagram::zero(vec![], vec![], m);
            f.set(i, i, crate::soergel::library::eps_diagram(i)).expect("ε_i is an endomorphism of x_i");
            f
        })
        .collect()
}

/// Whether `z` lies in the span of `basis`, comparing path coefficients.
pub fn in_span(basis: &[QuiverElem], z: &QuiverElem) -> bool {
    let paths: BTreeSet<Path> = basis.iter().chain(std::iter::once(z)).flat_map(|e| e.terms().map(|(p, _)| p)).collect();
    let vec_of = |e: &QuiverElem| paths.iter().map(|&p| e.coeff(p)).collect::<Vec<_>>();
    let mut ech = Echelon::new(Rational::zero());
    for b in basis {
        ech.insert(&vec_of(b));
    }
    ech.contains(&vec_of(z))
}
