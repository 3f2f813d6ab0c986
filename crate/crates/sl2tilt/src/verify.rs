//! Every relation and property suite at one configuration, collected into a
//! deterministic report.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::{self, block, decompose_into_tiltings, tensor_power_factors, tilting_weyl_factors};
use crate::endofun::{
    bimodule_hom_formula, center_diagram_basis, check_naturality, endo_hom_dimension, evaluate_endo_diagram, in_span,
    natural_hom_dimension, BimoduleWord, EndoDiagram, EndoMorphism, Endofunctor, ThetaWordObject,
};
use crate::error::{Error, Result};
use crate::quiver::{self, center_basis, hom_poincare, summand, unit, Path, QuiverElem, QuiverMatrix};
use crate::scalars::{int, quantum_binomial, quantum_factorial, quantum_integer, rat, specialize, LaurentPoly, RootOfUnitySpec};
use crate::soergel::library::{
    all_local_relations, barbell, broken, check_dead_end, check_hom_basis, check_relations, d_diagram, enddot,
    eps_diagram, evaluate_jones_wenzl, hom_dimension, jones_wenzl, merge, pitchfork_placements, placed_pitchfork,
    split, startdot, u_diagram, Relation, RelationReport,
};
use crate::soergel::eval::leading_block;
use crate::soergel::{evaluate, evaluate_full, Col, DiagramLinComb};
use crate::tiltcat::{self, burau_search, check_alternating_shape, check_tl_relations, Color, ThetaWord};
use crate::uqweyl::{build_weyl, generated_submodule, is_simple};

/// Deliberate faults, used to exercise the failure path of the report.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    /// Replaces `[U_2]` by zero in the Temperley–Lieb check.
    TlGenerator,
    /// Adds the false relation `broken(g) = 2 broken(g)`.
    DiagramRelation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub l: u32,
    pub m: usize,
    /// Maximal number of strands (and word length) in the diagram suites.
    pub depth: usize,
    #[doc(hidden)]
    pub perturbation: Option<Perturbation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { l: 3, m: 8, depth: 5, perturbation: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub id: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub l: u32,
    pub m: usize,
    pub depth: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub millis: u64,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// `Ok(Ok(()))` passes, `Ok(Err(witness))` fails; errors count as failures.
type Outcome = Result<std::result::Result<(), String>>;
type Job = (&'static str, &'static str, Box<dyn Fn() -> Outcome + Send + Sync>);

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn relation_outcome(r: RelationReport) -> Outcome {
    Ok(match r.failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} in context ({}, {}); {} of {} failed", f.relation, f.left, f.right, r.failures.len(), r.instances)),
    })
}

fn specs(l: u32) -> Result<Vec<RootOfUnitySpec>> {
    let mut v = vec![RootOfUnitySpec::from_l(l, false)?];
    if l % 2 == 1 {
        v.push(RootOfUnitySpec::from_l(l, true)?);
    }
    Ok(v)
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<Report> {
    alcove::check_l(cfg.l)?;
    if cfg.m < 6 {
        return Err(Error::InvalidParameter(format!("verify needs m >= 6, got {}", cfg.m)));
    }
    if cfg.depth < 3 {
        return Err(Error::InvalidParameter(format!("verify needs depth >= 3, got {}", cfg.depth)));
    }
    let start = Instant::now();
    let jobs = jobs(cfg.clone());
    let checks: Vec<Check> = jobs
        .par_iter()
        .map(|(suite, id, f)| {
            let t = Instant::now();
            let (pass, witness) = match f() {
                Ok(Ok(())) => (true, None),
                Ok(Err(w)) => (false, Some(w)),
                Err(e) => (false, Some(e.to_string())),
            };
            Check { suite: suite.to_string(), id: id.to_string(), pass, witness, millis: t.elapsed().as_millis() as u64 }
        })
        .collect();
    Ok(Report {
        l: cfg.l,
        m: cfg.m,
        depth: cfg.depth,
        passed: checks.iter().all(|c| c.pass),
        checks,
        millis: start.elapsed().as_millis() as u64,
    })
}

fn jobs(cfg: VerifyConfig) -> Vec<Job> {
    let VerifyConfig { l, m, depth, perturbation } = cfg;
    let li = l as usize;
    let mut jobs: Vec<Job> = vec![];

    // scalars
    jobs.push(("scalars", "quantum-integer-vanishing", Box::new(move || {
        for spec in specs(l)? {
            for j in 1..=20i64 {
                let zero = specialize(&quantum_integer(j), spec).is_zero();
                if zero != (j % l as i64 == 0) {
                    return Ok(Err(format!("[{j}] at n = {}", spec.n)));
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("scalars", "binomial-factorials", Box::new(|| {
        for a in 0..=10i64 {
            for b in 0..=a as u32 {
                let lhs = &(&quantum_binomial(a, b) * &quantum_factorial(b)) * &quantum_factorial(a as u32 - b);
                if lhs != quantum_factorial(a as u32) {
                    return Ok(Err(format!("[{a} choose {b}]")));
                }
            }
        }
        Ok(Ok(()))
    })));

    // weyl
    jobs.push(("weyl", "uq-relations", Box::new(move || {
        for spec in specs(l)? {
            for i in 0..=10 {
                build_weyl(i, spec).check_relations()?;
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("weyl", "simplicity-table", Box::new(move || {
        let spec = RootOfUnitySpec::from_l(l, false)?;
        for i in 0..=12usize {
            let want = i < li || i % li == li - 1;
            if is_simple(&build_weyl(i, spec)) != want {
                return Ok(Err(format!("Δ({i})")));
            }
        }
        Ok(Ok(()))
    })));
    if l == 3 {
        jobs.push(("weyl", "trivial-submodule", Box::new(|| {
            let spec = RootOfUnitySpec::from_l(3, false)?;
            let w = build_weyl(4, spec);
            let sub = generated_submodule(&w, &w.basis_vector(2))?;
            Ok(ensure(sub.rank == 1, || format!("rank {}", sub.rank)))
        })));
    }

    // alcove
    jobs.push(("alcove", "blocks-partition", Box::new(move || {
        let cutoff = 4 * l as i64;
        let mut seen = BTreeSet::new();
        for x in -1..=l as i64 - 1 {
            for w in block(x, l, cutoff) {
                if !seen.insert(w) {
                    return Ok(Err(format!("weight {w} in two blocks")));
                }
            }
        }
        Ok(ensure(seen == (0..=cutoff).collect(), || "blocks do not cover the weights".into()))
    })));
    jobs.push(("alcove", "tilting-characters", Box::new(move || {
        for i in 0..=4 * l as i64 {
            let d = decompose_into_tiltings(&tilting_weyl_factors(i, l), l)?;
            if d.len() != 1 || d.get(&i) != Some(&1) {
                return Ok(Err(format!("T({i}) decomposes as {d:?}")));
            }
        }
        for k in 1..=depth {
            decompose_into_tiltings(&tensor_power_factors(&vec![1; k]), l)?;
        }
        Ok(Ok(()))
    })));

    // quiver
    jobs.push(("quiver", "hom-table", Box::new(move || {
        for a in 0..=m {
            for b in 0..=m {
                let want = match a.abs_diff(b) {
                    0 if a == 0 => LaurentPoly::one(),
                    0 => LaurentPoly::from_terms([(0, int(1)), (2, int(1))]),
                    1 => LaurentPoly::v_pow(1),
                    _ => LaurentPoly::zero(),
                };
                if hom_poincare(a, b, m) != want {
                    return Ok(Err(format!("Hom(_{a}P, _{b}P)")));
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("quiver", "functor-relations", Box::new(move || quiver::check_functor_relations(m).map(|_| Ok(())))));
    jobs.push(("quiver", "adjunctions", Box::new(move || quiver::check_adjunctions(6, m).map(|_| Ok(())))));
    jobs.push(("quiver", "transfer-table", Box::new(|| {
        quiver::cross_check_transfer(6)?;
        let u0 = QuiverMatrix::single(summand(0, 0), summand(1, 0), QuiverElem::path(Path::Up(0)));
        let img = tiltcat::theta_on_morphism(Color::T, &u0)?;
        let want = QuiverMatrix {
            source: vec![summand(1, 0)],
            target: vec![summand(1, -1), summand(1, 1)],
            entries: vec![vec![QuiverElem::zero()], vec![QuiverElem::path(Path::Idem(1))]],
        };
        Ok(ensure(img == want, || format!("Θ_t(u_0) = {img:?}")))
    })));
    jobs.push(("quiver", "center", Box::new(move || {
        let z = center_basis(m);
        if z.len() != m + 1 {
            return Ok(Err(format!("dim Z(Q_{m}) = {}", z.len())));
        }
        let mut want = vec![unit(m)];
        want.extend((1..=m).map(|i| QuiverElem::path(Path::Loop(i))));
        Ok(ensure(want.iter().all(|e| in_span(&z, e)), || "unit or loop outside the center".into()))
    })));

    // tiltcat
    jobs.push(("tiltcat", "alternating-shapes", Box::new(move || {
        for len in 0..=depth + 1 {
            for first in [Color::S, Color::T] {
                for i in 0..=4 {
                    check_alternating_shape(i, &ThetaWord::alternating(len, first))?;
                }
            }
        }
        let t0 = tiltcat::tilting(0);
        Ok(ensure(
            tiltcat::theta_on_object(Color::S, &t0).is_empty() && tiltcat::theta_on_object(Color::T, &t0) == tiltcat::tilting(1),
            || "dead end at T_0".into(),
        ))
    })));
    jobs.push(("tiltcat", "temperley-lieb", Box::new(move || {
        let mut m = m;
        if m < 10 {
            m = 10;
        }
        match perturbation {
            Some(Perturbation::TlGenerator) => {
                let zero = vec![vec![LaurentPoly::zero(); m + 1]; m + 1];
                tiltcat::check_generator_relations(m, &mut vec![], Some((2, zero)))?;
            }
            _ => {
                check_tl_relations(m)?;
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("tiltcat", "burau-search", Box::new(|| {
        let r = burau_search(10);
        Ok(ensure(!r.passing.is_empty() && r.derived, || "no convention satisfies the braid relation".into()))
    })));

    // soergel
    jobs.push(("soergel", "local-relations", Box::new(move || {
        let mut rels = all_local_relations();
        if perturbation == Some(Perturbation::DiagramRelation) {
            let b = broken(Col::G);
            rels.push(Relation { name: "perturbed".into(), rhs: b.scale(&int(2)), lhs: b });
        }
        relation_outcome(check_relations(&rels, depth)?)
    })));
    jobs.push(("soergel", "dead-end", Box::new(move || relation_outcome(check_dead_end(depth)?))));
    jobs.push(("soergel", "jones-wenzl", Box::new(move || {
        for i in 0..=depth + 1 {
            let p = evaluate_jones_wenzl(i)?;
            if p.compose(&p)? != p {
                return Ok(Err(format!("JW_{i} is not idempotent")));
            }
        }
        let half = -rat(1, 2);
        Ok(ensure(jones_wenzl(3).terms().any(|(_, c)| *c == half), || "JW_3 lacks the -1/2 term".into()))
    })));
    jobs.push(("soergel", "pitchforks", Box::new(move || {
        for i in 3..=depth + 1 {
            // F(JW_i) through its recursion; expanding the diagram is far slower.
            let jw = evaluate_jones_wenzl(i)?;
            for (off, len, c) in pitchfork_placements(i) {
                let p = evaluate_full(&placed_pitchfork(i, off, len, c, false)?)?;
                let q = evaluate_full(&placed_pitchfork(i, off, len, c, true)?)?;
                if !leading_block(&p.compose(&jw)?).is_zero() || !leading_block(&jw.compose(&q)?).is_zero() {
                    return Ok(Err(format!("pitchfork of length {len} at {off} on x_{i}")));
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("soergel", "quiver-relations", Box::new(move || {
        let ev = |d: &DiagramLinComb| evaluate(d);
        if !ev(&d_diagram(1))?.compose(&ev(&u_diagram(0))?)?.is_zero() {
            return Ok(Err("d_1 u_0 != 0".into()));
        }
        for i in 1..=depth {
            let du = ev(&d_diagram(i + 1))?.compose(&ev(&u_diagram(i))?)?;
            let ud = ev(&u_diagram(i - 1))?.compose(&ev(&d_diagram(i))?)?;
            if du != ud || du != ev(&eps_diagram(i))? {
                return Ok(Err(format!("d u = u d = ε at {i}")));
            }
            if !ev(&u_diagram(i))?.compose(&ev(&u_diagram(i - 1))?)?.is_zero()
                || !ev(&d_diagram(i))?.compose(&ev(&d_diagram(i + 1))?)?.is_zero()
            {
                return Ok(Err(format!("u u = d d = 0 at {i}")));
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("soergel", "hom-bases", Box::new(|| {
        for i in 0..=6 {
            for j in 0..=6 {
                if hom_dimension(i, j) != hom_poincare(i, j, 8) || !check_hom_basis(i, j)? {
                    return Ok(Err(format!("x_{i} -> x_{j}")));
                }
            }
        }
        Ok(Ok(()))
    })));

    // endofun
    jobs.push(("endofun", "self-adjointness", Box::new(|| {
        let words: Vec<ThetaWordObject> = ["-", "s", "t", "st", "ts"].iter().map(|w| w.parse().unwrap()).collect();
        for c in [Color::S, Color::T] {
            for x in &words {
                for y in &words {
                    let a = endo_hom_dimension(&x.then(c), y, 6)?;
                    let b = endo_hom_dimension(x, &y.then(c), 6)?;
                    if a != b {
                        return Ok(Err(format!("{}: Hom({}{x}, {y}) = {a}, Hom({x}, {}{y}) = {b}", c.letter(), c.letter(), c.letter())));
                    }
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("endofun", "bimodule-homs", Box::new(|| {
        let words: [&[usize]; 5] = [&[1], &[2], &[2, 2], &[1, 2], &[3, 2, 3]];
        for x in words {
            for y in words {
                let bx = BimoduleWord::new(x.to_vec(), 5)?;
                let by = BimoduleWord::new(y.to_vec(), 5)?;
                let got = natural_hom_dimension(&Endofunctor::bimodule(&bx), &Endofunctor::bimodule(&by))?;
                if got != bimodule_hom_formula(&bx, &by)? {
                    return Ok(Err(format!("Hom(B_{x:?}, B_{y:?}) = {got}")));
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs.push(("endofun", "diagram-naturality", Box::new(|| {
        let etas = [startdot(Col::G), enddot(Col::R), broken(Col::G), barbell(Col::R), merge(Col::G), split(Col::R)];
        for eta in &etas {
            let f = evaluate_endo_diagram(&EndoDiagram::diagonal(eta, 5)?)?;
            if !check_naturality(&f)? {
                return Ok(Err(format!("family of {}", crate::soergel::seq_to_string(&eta.bottom))));
            }
        }
        let x: ThetaWordObject = "t".parse()?;
        let mut f = EndoMorphism::identity(x, 5);
        f.set(2, 2, f.get(2, 2).scale(&int(2)))?;
        Ok(ensure(!check_naturality(&f)?, || "perturbed identity accepted".into()))
    })));
    jobs.push(("endofun", "center-families", Box::new(|| {
        for m in 3..=5 {
            let z = center_basis(m);
            for f in center_diagram_basis(m) {
                let e = evaluate_endo_diagram(&f)?;
                let c = e.central_element().ok_or_else(|| Error::Internal("not an endomorphism of the identity".into()))?;
                if !in_span(&z, &c) || !evaluate_endo_diagram(&f.compose(&f)?)?.is_zero() {
                    return Ok(Err(format!("ε family at m = {m}")));
                }
            }
        }
        Ok(Ok(()))
    })));
    jobs
}
