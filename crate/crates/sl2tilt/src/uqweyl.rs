//! Weyl modules of `U_q(sl2)` as explicit matrices over `Q(q)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alcove;
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, mat_vec, Echelon};
use crate::scalars::{int, quantum_binomial, quantum_factorial, specialize, CycScalar, RootOfUnitySpec};

pub type CycMatrix = Vec<Vec<CycScalar>>;

/// `Δ_q(i)` on the basis `m_0, ..., m_i`. Matrices act on column vectors;
/// row index is the output basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct WeylModule {
    pub i: usize,
    pub spec: RootOfUnitySpec,
    pub k: CycMatrix,
    pub k_inv: CycMatrix,
    /// `e[j-1]` is the divided power `E^{(j)}`.
    pub e: Vec<CycMatrix>,
    pub f: Vec<CycMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleBasis {
    pub vectors: Vec<Vec<CycScalar>>,
    pub rank: usize,
}

fn zero_matrix(spec: RootOfUnitySpec, n: usize) -> CycMatrix {
    vec![vec![CycScalar::zero(spec); n]; n]
}

pub fn build_weyl(i: usize, spec: RootOfUnitySpec) -> WeylModule {
    let n = i + 1;
    let ii = i as i64;
    let mut k = zero_matrix(spec, n);
    let mut k_inv = zero_matrix(spec, n);
    for a in 0..n {
        let w = ii - 2 * a as i64;
        k[a][a] = CycScalar::q_pow(spec, w);
        k_inv[a][a] = CycScalar::q_pow(spec, -w);
    }
    let mut e = vec![];
    let mut f = vec![];
    for j in 1..=i {
        let mut ej = zero_matrix(spec, n);
        let mut fj = zero_matrix(spec, n);
        for a in 0..n {
            let ai = a as i64;
            if a >= j {
                ej[a - j][a] = specialize(&quantum_binomial(ii - ai + j as i64, j as u32), spec);
            }
            if a + j < n {
                fj[a + j][a] = specialize(&quantum_binomial(ai + j as i64, j as u32), spec);
            }
        }
        e.push(ej);
        f.push(fj);
    }
    WeylModule { i, spec, k, k_inv, e, f }
}

impl WeylModule {
    pub fn dim(&self) -> usize {
        self.i + 1
    }

    fn zero(&self) -> CycScalar {
        CycScalar::zero(self.spec)
    }

    pub fn action_matrices(&self) -> Vec<&CycMatrix> {
        let mut v = vec![&self.k, &self.k_inv];
        v.extend(self.e.iter());
        v.extend(self.f.iter());
        v
    }

    pub fn basis_vector(&self, a: usize) -> Vec<CycScalar> {
        let mut v = vec![self.zero(); self.dim()];
        v[a] = CycScalar::one(self.spec);
        v
    }

    pub fn e1(&self) -> CycMatrix {
        self.e.first().cloned().unwrap_or_else(|| zero_matrix(self.spec, self.dim()))
    }

    pub fn f1(&self) -> CycMatrix {
        self.f.first().cloned().unwrap_or_else(|| zero_matrix(self.spec, self.dim()))
    }

    fn mul(&self, a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
        mat_mul(&self.zero(), a, b)
    }

    fn identity(&self) -> CycMatrix {
        let mut m = zero_matrix(self.spec, self.dim());
        for (a, row) in m.iter_mut().enumerate() {
            row[a] = CycScalar::one(self.spec);
        }
        m
    }

    fn scale(&self, c: &CycScalar, a: &CycMatrix) -> CycMatrix {
        a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
    }

    fn sub(&self, a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
    }

    fn power(&self, a: &CycMatrix, p: usize) -> CycMatrix {
        (0..p).fold(self.identity(), |acc, _| self.mul(&acc, a))
    }

    /// Checks the defining relations, `E^l = F^l = 0`, and `E^j = [j]! E^{(j)}`.
    pub fn check_relations(&self) -> Result<()> {
        let fail = |relation: &str, witness: String| {
            Err(Error::RelationFailure { relation: relation.into(), witness })
        };
        let spec = self.spec;
        let i = self.i;
        if self.mul(&self.k, &self.k_inv) != self.identity() || self.mul(&self.k_inv, &self.k) != self.identity() {
            return fail("K K^-1 = 1", format!("i = {i}"));
        }
        let q2 = CycScalar::q_pow(spec, 2);
        let q_2 = CycScalar::q_pow(spec, -2);
        let (e, f) = (self.e1(), self.f1());
        if self.mul(&self.k, &e) != self.scale(&q2, &self.mul(&e, &self.k)) {
            return fail("K E = q^2 E K", format!("i = {i}"));
        }
        if self.mul(&self.k, &f) != self.scale(&q_2, &self.mul(&f, &self.k)) {
            return fail("K F = q^-2 F K", format!("i = {i}"));
        }
        let q = CycScalar::q_pow(spec, 1);
        let qi = CycScalar::q_pow(spec, -1);
        let denom = (&q - &qi).inverse()?;
        let lhs = self.sub(&self.mul(&e, &f), &self.mul(&f, &e));
        let rhs = self.scale(&denom, &self.sub(&self.k, &self.k_inv));
        if lhs != rhs {
            return fail("EF - FE = (K - K^-1)/(q - q^-1)", format!("i = {i}"));
        }
        let l = spec.l as usize;
        let zero = zero_matrix(spec, self.dim());
        if self.power(&e, l) != zero {
            return fail("E^l = 0", format!("i = {i}"));
        }
        if self.power(&f, l) != zero {
            return fail("F^l = 0", format!("i = {i}"));
        }
        for j in 1..=i {
            let fact = specialize(&quantum_factorial(j as u32), spec);
            if self.power(&e, j) != self.scale(&fact, &self.e[j - 1]) {
                return fail("E^j = [j]! E^(j)", format!("i = {i}, j = {j}"));
            }
            if self.power(&f, j) != self.scale(&fact, &self.f[j - 1]) {
                return fail("F^j = [j]! F^(j)", format!("i = {i}, j = {j}"));
            }
        }
        Ok(())
    }
}

/// Smallest subspace containing `v` stable under every action matrix.
pub fn generated_submodule(m: &WeylModule, v: &[CycScalar]) -> Result<SubmoduleBasis> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    if v.len() != m.dim() {
        return Err(Error::IncompatibleShapes(format!("vector of length {} in module of dim {}", v.len(), m.dim())));
    }
    let zero = m.zero();
    let mut ech = Echelon::new(zero.clone());
    let mut frontier = vec![v.to_vec()];
    ech.insert(v);
    let mats = m.action_matrices();
    while let Some(w) = frontier.pop() {
        for a in &mats {
            let img = mat_vec(&zero, a, &w);
            if ech.insert(&img) {
                frontier.push(img);
            }
        }
    }
    let rank = ech.rank();
    Ok(SubmoduleBasis { vectors: ech.basis(), rank })
}

/// Decides simplicity by closure from every weight vector and from 20 seeded
/// pseudo-random vectors.
pub fn is_simple(m: &WeylModule) -> bool {
    let n = m.dim();
    let full = |v: &[CycScalar]| generated_submodule(m, v).map(|s| s.rank == n).unwrap_or(true);
    if !(0..n).all(|a| full(&m.basis_vector(a))) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d001 + m.i as u64);
    for _ in 0..20 {
        let v: Vec<CycScalar> = (0..n)
            .map(|_| CycScalar::from_rational(m.spec, int(rng.gen_range(-5..=5))))
            .collect();
        if !full(&v) {
            return false;
        }
    }
    true
}

/// `(head, socle)` weights of `Δ_q(i)`.
pub fn weyl_head_socle_weights(i: i64, l: u32) -> Result<(i64, i64)> {
    if i < 0 {
        return Err(Error::NotInRange(i));
    }
    Ok(match alcove::linked_lower_weight(i, l) {
        Some(low) => (i, low),
        None => (i, i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn cube() -> RootOfUnitySpec {
        RootOfUnitySpec::from_l(3, true).unwrap()
    }

    #[test]
    fn example_actions() {
        let s = cube();
        let m = build_weyl(3, s);
        // E m_2 = -m_1 and E m_1 = 0.
        assert_eq!(m.e[0][1][2], CycScalar::from_rational(s, int(-1)));
        assert!(m.e[0][0][1].is_zero());
        let m4 = build_weyl(4, s);
        let eig: Vec<_> = (0..5).map(|a| m4.k[a][a].clone()).collect();
        let want: Vec<_> = [4, 2, 0, -2, -4].iter().map(|&w| CycScalar::q_pow(s, w)).collect();
        assert_eq!(eig, want);
        let m0 = build_weyl(0, s);
        assert!(m0.k[0][0].is_one());
        assert!(m0.e.is_empty() && m0.f.is_empty());
    }

    #[test]
    fn submodules() {
        let s = cube();
        let m4 = build_weyl(4, s);
        let sub = generated_submodule(&m4, &m4.basis_vector(2)).unwrap();
        assert_eq!(sub.rank, 1);
        let m3 = build_weyl(3, s);
        assert_eq!(generated_submodule(&m3, &m3.basis_vector(0)).unwrap().rank, 4);
        assert_eq!(generated_submodule(&m3, &m3.basis_vector(1)).unwrap().rank, 2);
        let z = vec![CycScalar::zero(s); 4];
        assert_eq!(generated_submodule(&m3, &z).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn simplicity_examples() {
        let s = cube();
        assert!(is_simple(&build_weyl(2, s)));
        assert!(is_simple(&build_weyl(5, s)));
        assert!(!is_simple(&build_weyl(4, s)));
    }

    #[test]
    fn head_socle() {
        assert_eq!(weyl_head_socle_weights(4, 3).unwrap(), (4, 0));
        assert_eq!(weyl_head_socle_weights(1, 3).unwrap(), (1, 1));
        assert_eq!(weyl_head_socle_weights(10, 3).unwrap(), (10, 6));
        assert!(weyl_head_socle_weights(-1, 3).is_err());
    }

    #[test]
    fn relations_small() {
        for l in [3u32, 5] {
            let s = RootOfUnitySpec::from_l(l, false).unwrap();
            for i in 0..=6 {
                build_weyl(i, s).check_relations().unwrap();
            }
        }
    }
}
