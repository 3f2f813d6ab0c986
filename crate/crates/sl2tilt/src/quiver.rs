//! The zigzag quiver algebras `Q_m` with the dead-end relation, their graded
//! projective right modules `_iP`, and the functors `U_i = · ⊗ B_i`.
//!
//! A path `g: a -> b` is read as the morphism `_aP -> _bP` given by left
//! multiplication, so composing morphisms is composing paths. A morphism
//! `O⟨s⟩ -> O'⟨s'⟩` given by a path of degree `d` has degree `d + s' - s`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::scalars::{fmt_rational, int, rational_to_pair, LaurentPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Path {
    Idem(usize),
    /// `u_i: i -> i+1`
    Up(usize),
    /// `d_i: i -> i-1`
    Down(usize),
    /// `ε_i: i -> i`, only for `i >= 1`
    Loop(usize),
}

impl Path {
    pub fn source(self) -> usize {
        match self {
            Path::Idem(i) | Path::Up(i) | Path::Down(i) | Path::Loop(i) => i,
        }
    }

    pub fn target(self) -> usize {
        match self {
            Path::Idem(i) | Path::Loop(i) => i,
            Path::Up(i) => i + 1,
            Path::Down(i) => i - 1,
        }
    }

    pub fn degree(self) -> i64 {
        match self {
            Path::Idem(_) => 0,
            Path::Up(_) | Path::Down(_) => 1,
            Path::Loop(_) => 2,
        }
    }

    pub fn is_valid(self, m: usize) -> bool {
        match self {
            Path::Idem(i) => i <= m,
            Path::Up(i) => i < m,
            Path::Down(i) | Path::Loop(i) => i >= 1 && i <= m,
        }
    }

    /// `a ∘ b` (apply `b` first); `None` is zero.
    pub fn compose(a: Path, b: Path) -> Option<Path> {
        if b.target() != a.source() {
            return None;
        }
        match (a, b) {
            (Path::Idem(_), p) | (p, Path::Idem(_)) => Some(p),
            (Path::Down(_), Path::Up(i)) => (i >= 1).then_some(Path::Loop(i)),
            (Path::Up(_), Path::Down(i)) => Some(Path::Loop(i)),
            _ => None,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Idem(i) => write!(f, "e{i}"),
            Path::Up(i) => write!(f, "u{i}"),
            Path::Down(i) => write!(f, "d{i}"),
            Path::Loop(i) => write!(f, "eps{i}"),
        }
    }
}

/// All basis paths of `Q_m`, sorted.
pub fn basis_paths(m: usize) -> Vec<Path> {
    let mut out = vec![];
    for i in 0..=m {
        for p in [Path::Idem(i), Path::Up(i), Path::Down(i), Path::Loop(i)] {
            if p.is_valid(m) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// Basis paths from `a` to `b` in the canonical summand order.
pub fn paths_between(a: usize, b: usize, m: usize) -> Vec<Path> {
    let cands = if a == b {
        vec![Path::Idem(a), Path::Loop(a)]
    } else if b == a + 1 {
        vec![Path::Up(a)]
    } else if a == b + 1 {
        vec![Path::Down(a)]
    } else {
        vec![]
    };
    cands.into_iter().filter(|p| p.is_valid(m)).collect()
}

/// A rational linear combination of basis paths.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct QuiverElem {
    terms: BTreeMap<Path, Rational>,
}

impl QuiverElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn path(p: Path) -> Self {
        Self::term(p, Rational::one())
    }

    pub fn term(p: Path, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(p, c);
        e
    }

    pub fn add_term(&mut self, p: Path, c: Rational) {
        if c.is_zero() {
            return;
        }
        let x = self.terms.entry(p).or_insert_with(Rational::zero);
        *x += c;
        if x.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Path, &Rational)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn coeff(&self, p: Path) -> Rational {
        self.terms.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (p, x) in self.terms() {
            out.add_term(p, x * c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some(p) = Path::compose(a, b) {
                    out.add_term(p, x * y);
                }
            }
        }
        out
    }

    /// The path degrees occurring, sorted.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|p| p.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn to_wire(&self) -> Result<Vec<(String, i64, i64)>> {
        self.terms()
            .map(|(p, c)| rational_to_pair(c).map(|(n, d)| (p.to_string(), n, d)))
            .collect()
    }
}

impl fmt::Display for QuiverElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(p, c)| if c.is_one() { p.to_string() } else { format!("{}*{p}", fmt_rational(c)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QuiverElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuiverElem({self})")
    }
}

impl Serialize for QuiverElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

pub fn multiply(a: &QuiverElem, b: &QuiverElem) -> QuiverElem {
    a.multiply(b)
}

/// One summand `_iP⟨s⟩` (or a simple at vertex `i` over the trivial quiver).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, i64)", into = "(usize, i64)")]
pub struct Summand {
    pub vertex: usize,
    pub shift: i64,
}

impl From<(usize, i64)> for Summand {
    fn from((vertex, shift): (usize, i64)) -> Self {
        Self { vertex, shift }
    }
}

impl From<Summand> for (usize, i64) {
    fn from(s: Summand) -> Self {
        (s.vertex, s.shift)
    }
}

pub fn summand(vertex: usize, shift: i64) -> Summand {
    Summand { vertex, shift }
}

pub type GradedModule = Vec<Summand>;

pub fn canonical(m: &[Summand]) -> GradedModule {
    let mut v = m.to_vec();
    v.sort();
    v
}

pub fn shifted(m: &[Summand], by: i64) -> GradedModule {
    m.iter().map(|s| summand(s.vertex, s.shift + by)).collect()
}

/// Poincaré polynomial of `Hom(_aP, _bP)`.
pub fn hom_poincare(a: usize, b: usize, m: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for path in paths_between(a, b, m) {
        p.add_term(path.degree(), Rational::one());
    }
    p
}

/// Graded basis and Poincaré polynomial of `Hom(_aP, _bP)` in `Q_m`.
pub fn hom_space(a: usize, b: usize, m: usize) -> (Vec<QuiverElem>, LaurentPoly) {
    let basis = paths_between(a, b, m).into_iter().map(QuiverElem::path).collect();
    (basis, hom_poincare(a, b, m))
}

/// Poincaré polynomial of `Hom(_aP⟨s⟩, _bP⟨s'⟩)`.
pub fn graded_hom(x: Summand, y: Summand, m: usize) -> LaurentPoly {
    hom_poincare(x.vertex, y.vertex, m).shift(y.shift - x.shift)
}

pub fn module_hom(x: &[Summand], y: &[Summand], m: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for a in x {
        for b in y {
            p += &graded_hom(*a, *b, m);
        }
    }
    p
}

// ---------------------------------------------------------------------------
// Matrices

/// A morphism between direct sums; `entries[row][col]` maps `source[col]`
/// to `target[row]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverMatrix {
    pub source: GradedModule,
    pub target: GradedModule,
    pub entries: Vec<Vec<QuiverElem>>,
}

impl QuiverMatrix {
    pub fn zero(source: GradedModule, target: GradedModule) -> Self {
        let entries = vec![vec![QuiverElem::zero(); source.len()]; target.len()];
        Self { source, target, entries }
    }

    pub fn identity(obj: GradedModule) -> Self {
        let mut out = Self::zero(obj.clone(), obj.clone());
        for (k, s) in obj.iter().enumerate() {
            out.entries[k][k] = QuiverElem::path(Path::Idem(s.vertex));
        }
        out
    }

    /// A `1 x 1` matrix.
    pub fn single(source: Summand, target: Summand, e: QuiverElem) -> Self {
        Self { source: vec![source], target: vec![target], entries: vec![vec![e]] }
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Entries must be paths from the column vertex to the row vertex.
    pub fn validate(&self) -> Result<()> {
        if self.entries.len() != self.rows() || self.entries.iter().any(|r| r.len() != self.cols()) {
            return Err(Error::IncompatibleShapes("entry array does not match source/target".into()));
        }
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                for (p, _) in e.terms() {
                    if p.source() != self.source[c].vertex || p.target() != self.target[r].vertex {
                        return Err(Error::IncompatibleShapes(format!(
                            "entry ({r}, {c}) contains {p}, not a path {} -> {}",
                            self.source[c].vertex, self.target[r].vertex
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &QuiverMatrix) -> Result<QuiverMatrix> {
        if other.target != self.source {
            return Err(Error::IncompatibleShapes(format!(
                "cannot compose: inner objects {:?} vs {:?}",
                other.target, self.source
            )));
        }
        let mut out = QuiverMatrix::zero(other.source.clone(), self.target.clone());
        for r in 0..self.rows() {
            for c in 0..other.cols() {
                let mut acc = QuiverElem::zero();
                for k in 0..self.cols() {
                    let (a, b) = (&self.entries[r][k], &other.entries[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.multiply(b));
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QuiverMatrix) -> Result<QuiverMatrix> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::IncompatibleShapes("cannot add morphisms with different shapes".into()));
        }
        let mut out = self.clone();
        for (r, row) in out.entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = e.add(&other.entries[r][c]);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> QuiverMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut().flatten() {
            *e = e.scale(c);
        }
        out
    }

    /// The single degree of every nonzero term, if it is homogeneous.
    /// `Ok(None)` is the zero morphism.
    pub fn degree(&self) -> Result<Option<i64>> {
        let mut deg = None;
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                for d in e.degrees() {
                    let total = d + self.target[r].shift - self.source[c].shift;
                    match deg {
                        None => deg = Some(total),
                        Some(x) if x == total => {}
                        Some(x) => {
                            return Err(Error::IncompatibleShapes(format!("inhomogeneous: degrees {x} and {total}")))
                        }
                    }
                }
            }
        }
        Ok(deg)
    }

    /// Keeps the listed rows and columns.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> QuiverMatrix {
        QuiverMatrix {
            source: cols.iter().map(|&c| self.source[c]).collect(),
            target: rows.iter().map(|&r| self.target[r]).collect(),
            entries: rows.iter().map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect()).collect(),
        }
    }

    pub fn block_diag(blocks: &[QuiverMatrix]) -> QuiverMatrix {
        let source: GradedModule = blocks.iter().flat_map(|b| b.source.clone()).collect();
        let target: GradedModule = blocks.iter().flat_map(|b| b.target.clone()).collect();
        let mut out = QuiverMatrix::zero(source, target);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.entries[r0 + r][c0 + c] = b.entries[r][c].clone();
                }
            }
            r0 += b.rows();
            c0 += b.cols();
        }
        out
    }

    pub fn max_vertex(&self) -> usize {
        self.source.iter().chain(&self.target).map(|s| s.vertex).max().unwrap_or(0)
    }
}

impl fmt::Display for QuiverMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |s: &Summand| format!("P{}<{}>", s.vertex, s.shift);
        let src: Vec<String> = self.source.iter().map(name).collect();
        let tgt: Vec<String> = self.target.iter().map(name).collect();
        writeln!(f, "[{}] -> [{}]", src.join(", "), tgt.join(", "))?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  ( {} )", cells.join(" | "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Functors

/// `U_j(_aP⟨s⟩) = ⊕_{q: j -> a} _jP⟨s + deg q - 1⟩`.
pub fn apply_u(j: usize, module: &[Summand], m: usize) -> GradedModule {
    let mut out = vec![];
    for s in module {
        for q in paths_between(j, s.vertex, m) {
            out.push(summand(j, s.shift + q.degree() - 1));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn indices(self, m: usize) -> Vec<usize> {
        let first = match self {
            Parity::Even => 2,
            Parity::Odd => 1,
        };
        (first..=m).step_by(2).collect()
    }

    pub fn of(i: usize) -> Parity {
        if i.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Summands ordered by input summand, then functor index, then path.
pub fn apply_u_sum(js: &[usize], module: &[Summand], m: usize) -> GradedModule {
    let mut out = vec![];
    for s in module {
        for &j in js {
            out.extend(apply_u(j, &[*s], m));
        }
    }
    out
}

pub fn apply_u_parity(parity: Parity, module: &[Summand], m: usize) -> GradedModule {
    apply_u_sum(&parity.indices(m), module, m)
}

pub fn apply_u_even(module: &[Summand], m: usize) -> GradedModule {
    apply_u_parity(Parity::Even, module, m)
}

pub fn apply_u_odd(module: &[Summand], m: usize) -> GradedModule {
    apply_u_parity(Parity::Odd, module, m)
}

/// Rescaling of the summand basis vector indexed by a path `q: j -> a`.
/// Loops and down-steps carry `2^j`; this is the normalisation under
/// which the diagram evaluation functor is well defined.
pub fn basis_rescaling(q: Path) -> Rational {
    match q {
        Path::Loop(j) | Path::Down(j) => int(1i64 << j),
        Path::Idem(_) | Path::Up(_) => Rational::one(),
    }
}

/// `U_j(g)` for every basis path `g` of `Q_m`, as rational matrices between
/// the summand bases `paths_between(j, source)` and `paths_between(j, target)`.
#[derive(Debug)]
pub struct TransferTable {
    pub m: usize,
    table: HashMap<(usize, Path), Vec<Vec<Rational>>>,
}

impl TransferTable {
    fn build(m: usize) -> Self {
        let mut table = HashMap::new();
        for j in 1..=m {
            for g in basis_paths(m) {
                table.insert((j, g), transfer_entry(j, g, m));
            }
        }
        Self { m, table }
    }

    pub fn get(&self, j: usize, g: Path) -> &Vec<Vec<Rational>> {
        &self.table[&(j, g)]
    }
}

fn transfer_entry(j: usize, g: Path, m: usize) -> Vec<Vec<Rational>> {
    let betas = paths_between(j, g.source(), m);
    let gammas = paths_between(j, g.target(), m);
    gammas
        .iter()
        .map(|&gam| {
            betas
                .iter()
                .map(|&beta| match Path::compose(g, beta) {
                    Some(p) if p == gam => basis_rescaling(beta) / basis_rescaling(gam),
                    _ => Rational::zero(),
                })
                .collect()
        })
        .collect()
}

/// The memoised transfer table for cutoff `m`.
pub fn transfer_table(m: usize) -> Arc<TransferTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TransferTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("transfer table cache poisoned");
    guard.entry(m).or_insert_with(|| Arc::new(TransferTable::build(m))).clone()
}

fn check_cutoff(f: &QuiverMatrix, m: usize) -> Result<()> {
    if f.max_vertex() > m {
        return Err(Error::IncompatibleShapes(format!("vertex {} beyond cutoff {m}", f.max_vertex())));
    }
    Ok(())
}

/// `⊕_{j ∈ js} U_j(f)` in the summand order of [`apply_u_sum`].
pub fn apply_u_sum_morphism(js: &[usize], f: &QuiverMatrix, m: usize) -> Result<QuiverMatrix> {
    f.validate()?;
    check_cutoff(f, m)?;
    let table = transfer_table(m);
    let source = apply_u_sum(js, &f.source, m);
    let target = apply_u_sum(js, &f.target, m);
    let mut out = QuiverMatrix::zero(source, target);
    // Offsets of each (input summand, j) block.
    let offsets = |obj: &[Summand]| {
        let mut map = HashMap::new();
        let mut pos = 0;
        for (k, s) in obj.iter().enumerate() {
            for &j in js {
                map.insert((k, j), pos);
                pos += paths_between(j, s.vertex, m).len();
            }
        }
        map
    };
    let (src_off, tgt_off) = (offsets(&f.source), offsets(&f.target));
    for (r, row) in f.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            for (p, coeff) in e.terms() {
                for &j in js {
                    let block = table.get(j, p);
                    let (r0, c0) = (tgt_off[&(r, j)], src_off[&(c, j)]);
                    for (gi, brow) in block.iter().enumerate() {
                        for (bi, x) in brow.iter().enumerate() {
                            if !x.is_zero() {
                                out.entries[r0 + gi][c0 + bi].add_term(Path::Idem(j), x * coeff);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn apply_u_morphism(j: usize, f: &QuiverMatrix, m: usize) -> Result<QuiverMatrix> {
    if j == 0 || j > m {
        return Err(Error::InvalidParameter(format!("functor index {j} outside 1..={m}")));
    }
    apply_u_sum_morphism(&[j], f, m)
}

pub fn apply_u_parity_morphism(parity: Parity, f: &QuiverMatrix, m: usize) -> Result<QuiverMatrix> {
    apply_u_sum_morphism(&parity.indices(m), f, m)
}

/// Independent computation of `U_j(g)` through the tensor product
/// `bQ ⊗_Q Qj` presented as pairs of paths modulo the balancing relations,
/// in the rescaled bases.
pub fn tensor_oracle(j: usize, g: Path, m: usize) -> Result<Vec<Vec<Rational>>> {
    let all = basis_paths(m);
    let a = g.source();
    let b = g.target();
    // aQ: paths ending at `a`; Qj: paths starting at `j`.
    let left = |v: usize| all.iter().copied().filter(|p| p.target() == v).collect::<Vec<_>>();
    let right: Vec<Path> = all.iter().copied().filter(|p| p.source() == j).collect();
    let space = |v: usize| {
        let l = left(v);
        let idx: HashMap<(Path, Path), usize> = l
            .iter()
            .flat_map(|&p| right.iter().map(move |&q| (p, q)))
            .enumerate()
            .map(|(k, pq)| (pq, k))
            .collect();
        (l, idx)
    };
    let relations = |l: &[Path], idx: &HashMap<(Path, Path), usize>| {
        let mut e = Echelon::new(Rational::zero());
        for &p in l {
            for &x in &all {
                for &q in &right {
                    let mut v = vec![Rational::zero(); idx.len()];
                    if let Some(px) = Path::compose(p, x) {
                        if let Some(k) = idx.get(&(px, q)) {
                            v[*k] += Rational::one();
                        }
                    }
                    if let Some(xq) = Path::compose(x, q) {
                        if let Some(k) = idx.get(&(p, xq)) {
                            v[*k] -= Rational::one();
                        }
                    }
                    e.insert(&v);
                }
            }
        }
        e
    };
    let unit_vec = |idx: &HashMap<(Path, Path), usize>, p: Path, q: Path| {
        let mut v = vec![Rational::zero(); idx.len()];
        v[idx[&(p, q)]] = Rational::one();
        v
    };
    let betas = paths_between(j, a, m);
    let gammas = paths_between(j, b, m);

    // The classes [a ⊗ β] must form a basis of the source quotient.
    let (la, ia) = space(a);
    let ra = relations(&la, &ia);
    if ia.len() - ra.rank() != betas.len() {
        return Err(Error::Internal(format!("aQ ⊗ Qj has the wrong dimension at a = {a}, j = {j}")));
    }

    let (lb, ib) = space(b);
    let rb = relations(&lb, &ib);
    if ib.len() - rb.rank() != gammas.len() {
        return Err(Error::Internal(format!("bQ ⊗ Qj has the wrong dimension at b = {b}, j = {j}")));
    }
    let cols: Vec<Vec<Rational>> = gammas.iter().map(|&gam| rb.reduce(&unit_vec(&ib, Path::Idem(b), gam))).collect();
    let mut out = vec![vec![Rational::zero(); betas.len()]; gammas.len()];
    for (bi, &beta) in betas.iter().enumerate() {
        let image = rb.reduce(&unit_vec(&ib, g, beta));
        let rows: Vec<Vec<Rational>> = (0..ib.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let x = linalg::solve(&Rational::zero(), &rows, &image, gammas.len())
            .ok_or_else(|| Error::Internal(format!("[{g} ⊗ {beta}] is outside the span of the standard classes")))?;
        for (gi, &gam) in gammas.iter().enumerate() {
            out[gi][bi] = &x[gi] * basis_rescaling(beta) / basis_rescaling(gam);
        }
    }
    Ok(out)
}

/// Compares the stored table against [`tensor_oracle`] on every generator.
pub fn cross_check_transfer(m: usize) -> Result<()> {
    let table = transfer_table(m);
    for j in 1..=m {
        for g in basis_paths(m) {
            let direct = tensor_oracle(j, g, m)?;
            if &direct != table.get(j, g) {
                return Err(Error::RelationFailure {
                    relation: "transfer table = tensor product".into(),
                    witness: format!("U_{j}({g}) at m = {m}"),
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Wall functors

/// Translation onto the wall: `_{i'}P ↦ ⊕_{q: i -> i'} simple(i)⟨deg q⟩`.
pub fn apply_u_onto(i: usize, module: &[Summand], m: usize) -> GradedModule {
    let mut out = vec![];
    for s in module {
        for q in paths_between(i, s.vertex, m) {
            out.push(summand(i, s.shift + q.degree()));
        }
    }
    out
}

/// Translation out of the wall: `simple(i)⟨s⟩ ↦ _iP⟨s - 1⟩`.
pub fn apply_u_outof(module: &[Summand]) -> GradedModule {
    module.iter().map(|s| summand(s.vertex, s.shift - 1)).collect()
}

/// Graded homs between sums of one-dimensional simples.
pub fn simple_hom(x: &[Summand], y: &[Summand]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for a in x {
        for b in y {
            if a.vertex == b.vertex {
                p.add_term(b.shift - a.shift, Rational::one());
            }
        }
    }
    p
}

// ---------------------------------------------------------------------------
// Relations between the functors

fn same_sum(name: &str, a: usize, x: &[Summand], y: &[Summand]) -> Result<()> {
    if canonical(x) == canonical(y) {
        Ok(())
    } else {
        Err(Error::RelationFailure { relation: name.into(), witness: format!("on _{a}P: {x:?} vs {y:?}") })
    }
}

/// `U_iU_i = U_i⟨-1⟩ ⊕ U_i⟨1⟩`, `U_iU_{i±1}U_i = U_i` and `U_iU_j = 0` for
/// `|i - j| > 1`, summand by summand on every `_aP` of `Q_m`.
pub fn check_functor_relations(m: usize) -> Result<usize> {
    let mut checked = 0;
    for a in 0..=m {
        let p = [summand(a, 0)];
        for i in 1..=m {
            let ui = apply_u(i, &p, m);
            let twice = apply_u(i, &ui, m);
            let split = [shifted(&ui, -1), shifted(&ui, 1)].concat();
            same_sum(&format!("U_{i} U_{i} = U_{i}<-1> + U_{i}<1>"), a, &twice, &split)?;
            checked += 1;
            for j in 1..=m {
                let uji = apply_u(j, &ui, m);
                if i.abs_diff(j) == 1 {
                    same_sum(&format!("U_{i} U_{j} U_{i} = U_{i}"), a, &apply_u(i, &uji, m), &ui)?;
                    checked += 1;
                } else if i.abs_diff(j) > 1 {
                    same_sum(&format!("U_{j} U_{i} = 0"), a, &uji, &[])?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Graded dimension equalities for the adjunctions between the wall
/// functors and for the self-adjointness of `U_i`, `U_even`, `U_odd`, on
/// indices up to `n`.
pub fn check_adjunctions(n: usize, m: usize) -> Result<usize> {
    let fail = |relation: String, witness: String| Err(Error::RelationFailure { relation, witness });
    let mut checked = 0;
    for i in 1..=n {
        for b in 0..=n {
            let y = [summand(b, 0)];
            for s in -2..=2 {
                let x = [summand(i, s)];
                // Out of the wall is left adjoint to onto the wall shifted by 1.
                let l = module_hom(&apply_u_outof(&x), &y, m);
                let r = simple_hom(&x, &shifted(&apply_u_onto(i, &y, m), 1));
                if l != r {
                    return fail(format!("out_{i} -| onto_{i}<1>"), format!("s = {s}, b = {b}: {l} vs {r}"));
                }
                let l = simple_hom(&apply_u_onto(i, &y, m), &x);
                let r = module_hom(&y, &shifted(&apply_u_outof(&x), -1), m);
                if l != r {
                    return fail(format!("onto_{i} -| out_{i}<-1>"), format!("s = {s}, b = {b}: {l} vs {r}"));
                }
                checked += 2;
            }
        }
    }
    for a in 0..=n {
        for b in 0..=n {
            let (x, y) = ([summand(a, 0)], [summand(b, 0)]);
            let mut functors: Vec<(String, Vec<usize>)> = (1..=n).map(|i| (format!("U_{i}"), vec![i])).collect();
            functors.push(("U_even".into(), Parity::Even.indices(m)));
            functors.push(("U_odd".into(), Parity::Odd.indices(m)));
            for (name, js) in functors {
                let l = module_hom(&apply_u_sum(&js, &x, m), &y, m);
                let r = module_hom(&x, &apply_u_sum(&js, &y, m), m);
                if l != r {
                    return fail(format!("{name} self-adjoint"), format!("_{a}P, _{b}P: {l} vs {r}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

// ---------------------------------------------------------------------------
// Center

/// Basis of `Z(Q_m)` by solving `z a = a z` for every basis path `a`,
/// returned in reduced echelon form.
pub fn center_basis(m: usize) -> Vec<QuiverElem> {
    let paths = basis_paths(m);
    let n = paths.len();
    let mut rows = vec![];
    for &a in &paths {
        // Coefficient of each output path in z∘a - a∘z, linear in z.
        let mut eqs: BTreeMap<Path, Vec<Rational>> = BTreeMap::new();
        for (k, &z) in paths.iter().enumerate() {
            if let Some(p) = Path::compose(z, a) {
                eqs.entry(p).or_insert_with(|| vec![Rational::zero(); n])[k] += Rational::one();
            }
            if let Some(p) = Path::compose(a, z) {
                eqs.entry(p).or_insert_with(|| vec![Rational::zero(); n])[k] -= Rational::one();
            }
        }
        rows.extend(eqs.into_values());
    }
    let ns = linalg::nullspace(&Rational::zero(), &rows, n);
    let mut ech = Echelon::new(Rational::zero());
    for v in &ns {
        ech.insert(v);
    }
    let mut basis = ech.basis();
    basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    basis
        .into_iter()
        .map(|v| {
            let mut e = QuiverElem::zero();
            for (k, c) in v.into_iter().enumerate() {
                e.add_term(paths[k], c);
            }
            e
        })
        .collect()
}

/// The unit `Σ_i e_i` of `Q_m`.
pub fn unit(m: usize) -> QuiverElem {
    let mut e = QuiverElem::zero();
    for i in 0..=m {
        e.add_term(Path::Idem(i), Rational::one());
    }
    e
}
