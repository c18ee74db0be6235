//! Hom spaces as intertwiner nullspaces, endomorphism algebras with their
//! Jacobson radicals, indecomposability certificates and certified
//! isomorphism testing.
//!
//! The radical of a finite-dimensional algebra is computed from the left
//! regular representation: over characteristic zero as the kernel of the
//! trace form (t, s) ↦ trace(L_t L_s), over F_p by the iterated p-trace
//! refinement (a descending chain of ideals cut out by the semilinear trace
//! functions g_i(z) = p^{-i}·trace(lift(L_z)^{p^i}) mod p).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{LinearSpan, Matrix};
use crate::module::{Module, ModuleMap};

/// A basis of Hom(source, target); each element is a target.dim × source.dim
/// intertwiner matrix.
#[derive(Clone, Debug)]
pub struct HomSpace<K: Field> {
    pub src_dim: usize,
    pub tgt_dim: usize,
    pub basis: Vec<Matrix<K>>,
}

impl<K: Field> HomSpace<K> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Materialize a coordinate vector as a matrix.
    pub fn matrix_of(&self, coords: &[K::Elem], field: &K) -> Matrix<K> {
        let mut m = Matrix::zero(field.clone(), self.tgt_dim, self.src_dim);
        for (c, b) in coords.iter().zip(self.basis.iter()) {
            if field.is_zero(c) {
                continue;
            }
            m = m.add(&b.scale(c));
        }
        m
    }
}

/// Basis of {φ : φ X_src = X_tgt φ, φ Y_src = Y_tgt φ}, computed as the
/// nullspace of the stacked intertwiner system.
pub fn hom_basis<K: Field>(src: &Module<K>, tgt: &Module<K>) -> HomSpace<K> {
    assert_eq!(src.algebra, tgt.algebra, "hom between different algebras");
    let field = src.field();
    let (s, t) = (src.dim(), tgt.dim());
    let unknowns = s * t;
    if unknowns == 0 {
        return HomSpace {
            src_dim: s,
            tgt_dim: t,
            basis: vec![],
        };
    }
    // Φ flattened row-major: idx(r, c) = r*s + c.
    let idx = |r: usize, c: usize| r * s + c;
    let mut system = Matrix::zero(field.clone(), 2 * unknowns, unknowns);
    let mut row = 0;
    for (act_s, act_t) in [(&src.x, &tgt.x), (&src.y, &tgt.y)] {
        for i in 0..t {
            for j in 0..s {
                // (Φ A_s − A_t Φ)[i, j] = Σ_c Φ[i,c] A_s[c,j] − Σ_r A_t[i,r] Φ[r,j]
                for c in 0..s {
                    let a = act_s.at(c, j);
                    if field.is_zero(a) {
                        continue;
                    }
                    let cur = system.at(row, idx(i, c)).clone();
                    system.set(row, idx(i, c), field.add(&cur, a));
                }
                for r in 0..t {
                    let a = act_t.at(i, r);
                    if field.is_zero(a) {
                        continue;
                    }
                    let cur = system.at(row, idx(r, j)).clone();
                    system.set(row, idx(r, j), field.sub(&cur, a));
                }
                row += 1;
            }
        }
    }
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zero(field.clone(), t, s);
            for r in 0..t {
                for c in 0..s {
                    m.set(r, c, v[idx(r, c)].clone());
                }
            }
            m
        })
        .collect();
    HomSpace {
        src_dim: s,
        tgt_dim: t,
        basis,
    }
}

/// f ∘ g as module maps.
pub fn compose<K: Field>(f: &ModuleMap<K>, g: &ModuleMap<K>) -> ModuleMap<K> {
    assert_eq!(g.target.dim(), f.source.dim(), "maps are not composable");
    ModuleMap {
        source: g.source.clone(),
        target: f.target.clone(),
        matrix: f.matrix.mul(&g.matrix),
    }
}

/// Kernel with its inclusion into the source.
pub fn kernel_of<K: Field>(f: &ModuleMap<K>) -> Result<(Module<K>, ModuleMap<K>), Error> {
    let basis = f.matrix.nullspace();
    f.source.submodule(&basis)
}

/// Image with its inclusion into the target.
pub fn image_of<K: Field>(f: &ModuleMap<K>) -> Result<(Module<K>, ModuleMap<K>), Error> {
    let basis = f.matrix.column_space();
    f.target.submodule(&basis)
}

/// Cokernel with the projection from the target.
pub fn cokernel_of<K: Field>(f: &ModuleMap<K>) -> Result<(Module<K>, ModuleMap<K>), Error> {
    let basis = f.matrix.column_space();
    f.target.quotient(&basis)
}

/// The endomorphism algebra of a module in a fixed hom basis: composition
/// table, left regular representation and Jacobson radical.
#[derive(Clone, Debug)]
pub struct EndAlgebra<K: Field> {
    pub field: K,
    pub hom: HomSpace<K>,
    /// mult[a][b] = coordinates of basis[a] ∘ basis[b]
    mult: Vec<Vec<Vec<K::Elem>>>,
    /// radical basis, as coordinate vectors in the hom basis
    pub radical: Vec<Vec<K::Elem>>,
}

impl<K: Field> EndAlgebra<K> {
    pub fn new(module: &Module<K>) -> Result<Self, Error> {
        let hom = hom_basis(module, module);
        Self::from_hom(module.field(), hom)
    }

    pub fn from_hom(field: K, hom: HomSpace<K>) -> Result<Self, Error> {
        let h = hom.dim();
        let mut span = LinearSpan::new(field.clone(), hom.src_dim * hom.tgt_dim);
        for b in &hom.basis {
            if !span.insert(&b.flatten()) {
                return Err(Error::Internal("hom basis is dependent".to_string()));
            }
        }
        let mut mult = vec![vec![Vec::new(); h]; h];
        for a in 0..h {
            for b in 0..h {
                let prod = hom.basis[a].mul(&hom.basis[b]);
                let coords = span
                    .coordinates(&prod.flatten())
                    .ok_or_else(|| Error::Internal("composition left the hom space".to_string()))?;
                mult[a][b] = coords;
            }
        }
        let mut alg = EndAlgebra {
            field,
            hom,
            mult,
            radical: Vec::new(),
        };
        alg.radical = alg.compute_radical()?;
        alg.verify_radical()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.hom.dim()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.len()
    }

    pub fn multiply(&self, u: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let h = self.dim();
        let mut out = vec![f.zero(); h];
        for a in 0..h {
            if f.is_zero(&u[a]) {
                continue;
            }
            for b in 0..h {
                if f.is_zero(&v[b]) {
                    continue;
                }
                let scale = f.mul(&u[a], &v[b]);
                for g in 0..h {
                    let c = &self.mult[a][b][g];
                    if f.is_zero(c) {
                        continue;
                    }
                    let add = f.mul(&scale, c);
                    out[g] = f.add(&out[g], &add);
                }
            }
        }
        out
    }

    /// Left multiplication operators of the basis elements, as h×h matrices
    /// over the coordinate space (column b = coordinates of e_a ∘ e_b).
    fn basis_left_mults(&self) -> Vec<Matrix<K>> {
        let h = self.dim();
        (0..h)
            .map(|a| {
                let mut m = Matrix::zero(self.field.clone(), h, h);
                for b in 0..h {
                    for (g, c) in self.mult[a][b].iter().enumerate() {
                        if !self.field.is_zero(c) {
                            m.set(g, b, c.clone());
                        }
                    }
                }
                m
            })
            .collect()
    }

    /// Left multiplication operator of an arbitrary element.
    fn left_mult_of(&self, u: &[K::Elem], lefts: &[Matrix<K>]) -> Matrix<K> {
        let f = &self.field;
        let h = self.dim();
        let mut m = Matrix::zero(self.field.clone(), h, h);
        for (g, c) in u.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            m = m.add(&lefts[g].scale(c));
        }
        m
    }

    fn compute_radical(&self) -> Result<Vec<Vec<K::Elem>>, Error> {
        let h = self.dim();
        if h == 0 {
            return Ok(vec![]);
        }
        let p = self.field.characteristic();
        if p == 0 {
            self.radical_trace_form()
        } else {
            self.radical_p_trace(p)
        }
    }

    /// Characteristic zero: rad = kernel of (u, v) ↦ trace(L_u L_v).
    fn radical_trace_form(&self) -> Result<Vec<Vec<K::Elem>>, Error> {
        let f = &self.field;
        let h = self.dim();
        let lefts = self.basis_left_mults();
        let mut gram = Matrix::zero(self.field.clone(), h, h);
        for a in 0..h {
            for b in 0..h {
                // trace(L_a L_b) without forming the product
                let mut t = f.zero();
                for i in 0..h {
                    for j in 0..h {
                        let x = lefts[a].at(i, j);
                        if f.is_zero(x) {
                            continue;
                        }
                        let y = lefts[b].at(j, i);
                        if f.is_zero(y) {
                            continue;
                        }
                        let prod = f.mul(x, y);
                        t = f.add(&t, &prod);
                    }
                }
                gram.set(a, b, t);
            }
        }
        Ok(gram.nullspace())
    }

    /// Characteristic p: descending chain V_0 = A ⊇ V_1 ⊇ …, where V_{i+1}
    /// is cut out of V_i by g_i(x·y) = 0 for all x, y in V_i, iterated while
    /// p^i ≤ dim A. Each g_i(z) = p^{-i}·trace(lift(L_z)^{p^i}) mod p is
    /// evaluated on canonical integer lifts with the matrix power taken mod
    /// p^{i+1}. On the ideal V_i the function g_i is additive, and over the
    /// prime field the Frobenius twist on scalars is the identity, so g_i is
    /// evaluated only on a basis of V_i and extended linearly.
    fn radical_p_trace(&self, p: u64) -> Result<Vec<Vec<K::Elem>>, Error> {
        let f = &self.field;
        let h = self.dim();
        let lefts = self.basis_left_mults();
        // current space basis, as coordinate vectors in the algebra
        let mut current: Vec<Vec<K::Elem>> = (0..h)
            .map(|a| {
                let mut e = vec![f.zero(); h];
                e[a] = f.one();
                e
            })
            .collect();
        let mut power: u64 = 1; // p^i
        while power <= h as u64 {
            let modulus = power
                .checked_mul(p)
                .ok_or_else(|| Error::Internal("p-trace modulus overflow".to_string()))?;
            let k = current.len();
            if k == 0 {
                break;
            }
            // g_i on the basis of V_i
            let mut g_vals = Vec::with_capacity(k);
            let mut ops = Vec::with_capacity(k);
            for w in &current {
                let op = self.left_mult_of(w, &lefts);
                g_vals.push(self.p_trace(&op, power, modulus, p)?);
                ops.push(op);
            }
            // coordinate extractor for span(V_i)
            let mut span = LinearSpan::new(self.field.clone(), h);
            for w in &current {
                span.insert(w);
            }
            // G[b][a] = g_i(v_a · v_b), expanded linearly through the basis
            let mut gram = Matrix::zero(self.field.clone(), k, k);
            for a in 0..k {
                for b in 0..k {
                    let prod = ops[a].mul_vec(&current[b]);
                    let coords = span.coordinates(&prod).ok_or_else(|| {
                        Error::Internal("ideal chain is not closed under products".to_string())
                    })?;
                    let mut val = 0u64;
                    for (c, g) in coords.iter().zip(g_vals.iter()) {
                        if f.is_zero(c) {
                            continue;
                        }
                        // c is a canonical representative in [0, p)
                        let c_lift = (0..p)
                            .find(|r| *c == f.from_i64(*r as i64))
                            .expect("canonical representative");
                        val = (val + c_lift * g) % p;
                    }
                    gram.set(b, a, f.from_i64(val as i64));
                }
            }
            let kernel = gram.nullspace();
            current = kernel
                .into_iter()
                .map(|coeffs| {
                    let mut v = vec![f.zero(); h];
                    for (c, basis_vec) in coeffs.iter().zip(current.iter()) {
                        if f.is_zero(c) {
                            continue;
                        }
                        for g in 0..h {
                            let add = f.mul(c, &basis_vec[g]);
                            v[g] = f.add(&v[g], &add);
                        }
                    }
                    v
                })
                .collect();
            power = modulus;
        }
        Ok(current)
    }

    /// trace(lift(L)^e) / e computed mod p, where e = p^i and the trace is
    /// taken mod p^{i+1}; the value of g_i at the element with operator `lz`.
    fn p_trace(&self, lz: &Matrix<K>, e: u64, modulus: u64, p: u64) -> Result<u64, Error> {
        let h = self.dim();
        // canonical lift: representatives in [0, p)
        let lift = |v: &K::Elem| -> u64 {
            for r in 0..p {
                if *v == self.field.from_i64(r as i64) {
                    return r;
                }
            }
            unreachable!("field element outside canonical range")
        };
        let mut m: Vec<u64> = Vec::with_capacity(h * h);
        for r in 0..h {
            for c in 0..h {
                m.push(lift(lz.at(r, c)));
            }
        }
        let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; h * h];
            for i in 0..h {
                for k in 0..h {
                    let v = a[i * h + k];
                    if v == 0 {
                        continue;
                    }
                    for j in 0..h {
                        let add = (v as u128 * b[k * h + j] as u128) % modulus as u128;
                        out[i * h + j] = ((out[i * h + j] as u128 + add) % modulus as u128) as u64;
                    }
                }
            }
            out
        };
        // m^e mod modulus by repeated squaring
        let mut acc: Vec<u64> = {
            let mut id = vec![0u64; h * h];
            for i in 0..h {
                id[i * h + i] = 1 % modulus;
            }
            id
        };
        let mut base = m;
        let mut exp = e;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(&acc, &base);
            }
            base = mul(&base, &base);
            exp >>= 1;
        }
        let mut tr: u64 = 0;
        for i in 0..h {
            tr = (tr + acc[i * h + i]) % modulus;
        }
        if tr % e != 0 {
            return Err(Error::Internal(format!(
                "p-trace not divisible by p^i: {tr} vs {e}"
            )));
        }
        Ok((tr / e) % p)
    }

    /// The radical must be a nilpotent two-sided ideal; checked directly.
    fn verify_radical(&self) -> Result<(), Error> {
        let f = &self.field;
        let h = self.dim();
        if self.radical.is_empty() {
            return Ok(());
        }
        let mut rad_span = LinearSpan::new(self.field.clone(), h);
        for r in &self.radical {
            rad_span.insert(r);
        }
        // two-sided ideal: basis element times radical stays inside
        for a in 0..h {
            let mut e = vec![f.zero(); h];
            e[a] = f.one();
            for r in &self.radical {
                if !rad_span.contains(&self.multiply(&e, r))
                    || !rad_span.contains(&self.multiply(r, &e))
                {
                    return Err(Error::Internal(
                        "computed radical is not an ideal".to_string(),
                    ));
                }
            }
        }
        // nilpotency: powers of the span shrink to zero
        let lefts = self.basis_left_mults();
        let rad_ops: Vec<Matrix<K>> = self
            .radical
            .iter()
            .map(|r| self.left_mult_of(r, &lefts))
            .collect();
        let mut layer: Vec<Vec<K::Elem>> = self.radical.clone();
        for _ in 0..=h {
            if layer.is_empty() {
                return Ok(());
            }
            let mut next_span = LinearSpan::new(self.field.clone(), h);
            let mut next = Vec::new();
            for op in &rad_ops {
                for u in &layer {
                    let prod = op.mul_vec(u);
                    if prod.iter().any(|e| !f.is_zero(e)) && next_span.insert(&prod) {
                        next.push(prod);
                    }
                }
            }
            layer = next;
        }
        Err(Error::Internal(
            "computed radical is not nilpotent".to_string(),
        ))
    }
}

/// Certificate data for a split-local endomorphism ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalCert {
    pub end_dim: usize,
    pub rad_dim: usize,
}

/// Split-local test: true iff End(m)/rad is one-dimensional. A decomposable
/// module is detected through a Fitting witness (an endomorphism whose high
/// power is neither zero nor invertible); if the quotient has dimension > 1
/// and no witness is found the test refuses to guess.
pub fn is_indecomposable<K: Field>(m: &Module<K>, seed: u64) -> Result<(bool, LocalCert), Error> {
    if m.dim() == 0 {
        return Err(Error::InvalidInput(
            "zero module in indecomposability test".to_string(),
        ));
    }
    let end = EndAlgebra::new(m)?;
    let cert = LocalCert {
        end_dim: end.dim(),
        rad_dim: end.radical_dim(),
    };
    if cert.end_dim - cert.rad_dim == 1 {
        return Ok((true, cert));
    }
    // Fitting search: φ^N with 0 ≠ φ^N singular splits the module.
    let field = m.field();
    let n = m.dim() as u32;
    let fitting = |phi: &Matrix<K>| -> bool {
        let pw = phi.pow(n);
        !pw.is_zero() && pw.rank() < m.dim()
    };
    for b in &end.hom.basis {
        if fitting(b) {
            return Ok((false, cert));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_f177);
    for _ in 0..200 {
        let coords: Vec<K::Elem> = (0..end.dim())
            .map(|_| field.from_i64(rng.gen_range(-3i64..=3)))
            .collect();
        let phi = end.hom.matrix_of(&coords, &field);
        if fitting(&phi) {
            return Ok((false, cert));
        }
    }
    Err(Error::NonSplitLocal {
        module: format!("module of dim {}", m.dim()),
        dim: cert.end_dim - cert.rad_dim,
    })
}

/// Positive result: an exact invertible intertwiner. Negative result: the
/// name of an isomorphism invariant on which the two modules differ (or the
/// vanishing of the hom space).
#[derive(Clone, Debug)]
pub enum IsoResult<K: Field> {
    Iso(Matrix<K>),
    NotIso(String),
}

fn fingerprint<K: Field>(m: &Module<K>) -> Vec<(String, Vec<usize>)> {
    let mut out = Vec::new();
    out.push(("dim".to_string(), vec![m.dim()]));
    out.push(("rank x".to_string(), vec![m.x.rank()]));
    out.push(("rank y".to_string(), vec![m.y.rank()]));
    out.push(("rank xy".to_string(), vec![m.x.mul(&m.y).rank()]));
    let mut ypows = Vec::new();
    let mut xypows = Vec::new();
    for t in 1..m.algebra.y_bound {
        let yt = m.y.pow(t);
        ypows.push(yt.rank());
        xypows.push(m.x.mul(&yt).rank());
    }
    out.push(("ranks of y^t".to_string(), ypows));
    out.push(("ranks of x·y^t".to_string(), xypows));
    out.push(("radical series".to_string(), m.radical_series()));
    out.push(("socle series".to_string(), m.socle_series()));
    out
}

/// Search for an isomorphism a ≅ b. A `NotIso` answer always carries a
/// certified witness; when every invariant agrees and no invertible
/// intertwiner is found the search aborts with an undecided error rather
/// than guessing.
pub fn find_isomorphism<K: Field>(
    a: &Module<K>,
    b: &Module<K>,
    seed: u64,
) -> Result<IsoResult<K>, Error> {
    if a.dim() != b.dim() {
        return Ok(IsoResult::NotIso(format!(
            "dimension mismatch: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    if a.dim() == 0 {
        return Ok(IsoResult::Iso(Matrix::zero(a.field(), 0, 0)));
    }
    if a.x == b.x && a.y == b.y {
        return Ok(IsoResult::Iso(Matrix::identity(a.field(), a.dim())));
    }
    for ((name, fa), (_, fb)) in fingerprint(a).into_iter().zip(fingerprint(b)) {
        if fa != fb {
            return Ok(IsoResult::NotIso(format!(
                "{name} differ: {fa:?} vs {fb:?}"
            )));
        }
    }
    let hom = hom_basis(a, b);
    if hom.dim() == 0 {
        return Ok(IsoResult::NotIso("hom space is zero".to_string()));
    }
    let field = a.field();
    let check = |phi: &Matrix<K>| -> Option<Matrix<K>> {
        if phi.rank() == a.dim() {
            Some(phi.clone())
        } else {
            None
        }
    };
    for b_mat in &hom.basis {
        if let Some(iso) = check(b_mat) {
            return Ok(IsoResult::Iso(iso));
        }
    }
    let p = field.characteristic();
    if p == 2 && hom.dim() <= 16 {
        // exhaust all F_2 combinations
        for mask in 1u32..(1u32 << hom.dim()) {
            let coords: Vec<K::Elem> = (0..hom.dim())
                .map(|i| field.from_i64(((mask >> i) & 1) as i64))
                .collect();
            let phi = hom.matrix_of(&coords, &field);
            if let Some(iso) = check(&phi) {
                return Ok(IsoResult::Iso(iso));
            }
        }
        return Ok(IsoResult::NotIso(
            "no invertible intertwiner exists (exhaustive over F_2)".to_string(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let coords: Vec<K::Elem> = (0..hom.dim())
            .map(|_| {
                if p == 0 {
                    field.from_i64(rng.gen_range(-3i64..=3))
                } else {
                    field.from_i64(rng.gen_range(0..p as i64))
                }
            })
            .collect();
        let phi = hom.matrix_of(&coords, &field);
        if let Some(iso) = check(&phi) {
            return Ok(IsoResult::Iso(iso));
        }
    }
    Err(Error::UndecidedIsomorphism {
        a: format!("module of dim {}", a.dim()),
        b: format!("module of dim {}", b.dim()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular_module, MonomialAlgebra};
    use crate::field::{PrimeField, Rationals};
    use crate::module::{a_module, da_module, u_module, x_module, zigzag_module, Module};

    #[test]
    fn hom_from_regular_counts_dimension() {
        let alg = MonomialAlgebra::an(1);
        let reg = regular_module(&alg, Rationals);
        for m in [
            u_module(0, &alg, Rationals).unwrap(),
            u_module(2, &alg, Rationals).unwrap(),
            a_module(0, 1, &alg, Rationals).unwrap(),
            da_module(1, 0, &alg, Rationals).unwrap(),
        ] {
            assert_eq!(hom_basis(&reg, &m).dim(), m.dim());
            // injective cogenerator duality
            assert_eq!(hom_basis(&m, &reg.dual()).dim(), m.dim());
        }
    }

    #[test]
    fn hom_between_simples_and_chains() {
        let alg = MonomialAlgebra::an(2);
        let u0 = u_module(0, &alg, Rationals).unwrap();
        for i in 0..=3u32 {
            let ui = u_module(i, &alg, Rationals).unwrap();
            assert_eq!(hom_basis(&u0, &ui).dim(), 1); // = dim soc U_i
        }
        let x = x_module(&alg, Rationals).unwrap();
        assert_eq!(hom_basis(&x, &u0).dim(), 1); // factors through the top
    }

    #[test]
    fn end_of_uniserials() {
        let alg = MonomialAlgebra::an(2);
        for i in 0..=3u32 {
            let ui = u_module(i, &alg, Rationals).unwrap();
            let end = EndAlgebra::new(&ui).unwrap();
            assert_eq!(end.dim() as u32, i + 1);
            assert_eq!(end.radical_dim() as u32, i);
            // oracle: the chain shift powers span End(U_i)
            let mut span = LinearSpan::new(Rationals, ui.dim() * ui.dim());
            let mut pow = Matrix::identity(Rationals, ui.dim());
            for _ in 0..=i {
                assert!(span.insert(&pow.flatten()));
                pow = pow.mul(&ui.y);
            }
            for b in &end.hom.basis {
                assert!(span.contains(&b.flatten()));
            }
        }
    }

    #[test]
    fn end_of_simple_square_is_matrix_algebra() {
        let alg = MonomialAlgebra::an(0);
        let u0 = u_module(0, &alg, Rationals).unwrap();
        let (sum, _) = Module::direct_sum(Rationals, &alg, &[&u0, &u0]).unwrap();
        let end = EndAlgebra::new(&sum).unwrap();
        assert_eq!(end.dim(), 4);
        assert_eq!(end.radical_dim(), 0);
        // the same over F_2, where the regular trace form of M_2 degenerates
        let f2 = PrimeField::new(2);
        let u0 = u_module(0, &alg, f2).unwrap();
        let (sum, _) = Module::direct_sum(f2, &alg, &[&u0, &u0]).unwrap();
        let end = EndAlgebra::new(&sum).unwrap();
        assert_eq!(end.dim(), 4);
        assert_eq!(end.radical_dim(), 0);
    }

    #[test]
    fn radical_dims_agree_across_characteristics() {
        let f101 = PrimeField::new(101);
        for n in 1..=2u32 {
            let aq = MonomialAlgebra::an(n);
            for (i, j) in [(0, 0), (0, 1), (n, 0)] {
                let mq = a_module(i, j, &aq, Rationals).unwrap();
                let mp = a_module(i, j, &aq, f101).unwrap();
                let eq = EndAlgebra::new(&mq).unwrap();
                let ep = EndAlgebra::new(&mp).unwrap();
                assert_eq!(eq.dim(), ep.dim());
                assert_eq!(eq.radical_dim(), ep.radical_dim());
            }
        }
    }

    #[test]
    fn f2_radical_of_dual_numbers() {
        // F_2[y]/(y²) = End-style check through U_1 over A_0
        let alg = MonomialAlgebra::an(0);
        let f2 = PrimeField::new(2);
        let u1 = u_module(1, &alg, f2).unwrap();
        let end = EndAlgebra::new(&u1).unwrap();
        assert_eq!(end.dim(), 2);
        assert_eq!(end.radical_dim(), 1);
    }

    #[test]
    fn indecomposability() {
        let alg = MonomialAlgebra::an(1);
        for i in 0..=2u32 {
            let ui = u_module(i, &alg, Rationals).unwrap();
            assert!(is_indecomposable(&ui, 0).unwrap().0);
        }
        let u0 = u_module(0, &alg, Rationals).unwrap();
        let (sum, _) = Module::direct_sum(Rationals, &alg, &[&u0, &u0]).unwrap();
        assert!(!is_indecomposable(&sum, 0).unwrap().0);
        for l in [2u32, 3] {
            let z = zigzag_module(l, &alg, Rationals).unwrap();
            let (ok, cert) = is_indecomposable(&z, 0).unwrap();
            assert!(ok);
            assert_eq!(cert.end_dim - cert.rad_dim, 1);
        }
    }

    #[test]
    fn iso_results() {
        let alg = MonomialAlgebra::an(1);
        let a = a_module(1, 0, &alg, Rationals).unwrap();
        // identity fast path
        match find_isomorphism(&a, &a, 0).unwrap() {
            IsoResult::Iso(m) => assert_eq!(m, Matrix::identity(Rationals, a.dim())),
            IsoResult::NotIso(w) => panic!("unexpected non-iso: {w}"),
        }
        // u_1 vs X: y-action ranks differ
        let u1 = u_module(1, &alg, Rationals).unwrap();
        let x = x_module(&alg, Rationals).unwrap();
        match find_isomorphism(&u1, &x, 0).unwrap() {
            IsoResult::NotIso(w) => assert!(w.contains("rank"), "witness: {w}"),
            IsoResult::Iso(_) => panic!("U_1 and X are not isomorphic"),
        }
        // double dual
        let dd = a.dual().dual();
        match find_isomorphism(&dd, &a, 0).unwrap() {
            IsoResult::Iso(phi) => {
                assert_eq!(phi.rank(), a.dim());
                let map = ModuleMap {
                    source: dd,
                    target: a.clone(),
                    matrix: phi,
                };
                assert!(map.intertwines());
            }
            IsoResult::NotIso(w) => panic!("dual(dual(A_1^0)) ≅ A_1^0 expected: {w}"),
        }
        // uniserials and X are self-dual
        for m in [u1.clone(), x.clone(), u_module(2, &alg, Rationals).unwrap()] {
            match find_isomorphism(&m.dual(), &m, 1).unwrap() {
                IsoResult::Iso(_) => {}
                IsoResult::NotIso(w) => panic!("self-duality expected: {w}"),
            }
        }
    }

    #[test]
    fn a_n0_isomorphic_to_regular() {
        for n in 0..=2u32 {
            let alg = MonomialAlgebra::an(n);
            let a = a_module(n, 0, &alg, Rationals).unwrap();
            let reg = regular_module(&alg, Rationals);
            match find_isomorphism(&a, &reg, 0).unwrap() {
                IsoResult::Iso(_) => {}
                IsoResult::NotIso(w) => panic!("A[{n},0] should be the regular module: {w}"),
            }
        }
    }

    #[test]
    fn kernel_of_projection_to_top_is_radical_ladder() {
        // kernel of A_n^0 → top ≅ A_{n-1}^1
        for n in 1..=2u32 {
            let alg = MonomialAlgebra::an(n);
            let a = a_module(n, 0, &alg, Rationals).unwrap();
            let (_, proj) = a.top();
            let (ker, incl) = kernel_of(&proj).unwrap();
            assert!(incl.intertwines());
            let ladder = a_module(n - 1, 1, &alg, Rationals).unwrap();
            match find_isomorphism(&ker, &ladder, 0).unwrap() {
                IsoResult::Iso(_) => {}
                IsoResult::NotIso(w) => panic!("rad A_{n}^0 ≅ A_{}^1 expected: {w}", n - 1),
            }
        }
    }

    #[test]
    fn cokernel_and_exactness() {
        let alg = MonomialAlgebra::an(1);
        let u2 = u_module(2, &alg, Rationals).unwrap();
        let u0 = u_module(0, &alg, Rationals).unwrap();
        // cokernel of the zero map is the target
        let zero = ModuleMap {
            source: u0.clone(),
            target: u2.clone(),
            matrix: Matrix::zero(Rationals, 3, 1),
        };
        let (cok, _) = cokernel_of(&zero).unwrap();
        assert_eq!(cok.dim(), 3);
        // 0 → K → N → T → 0 balances dimensions
        let (_, proj) = u2.top();
        let (ker, _) = kernel_of(&proj).unwrap();
        assert_eq!(
            ker.dim() as i64 - u2.dim() as i64 + proj.target.dim() as i64,
            0
        );
    }

    #[test]
    fn inflation_preserves_hom_dimensions() {
        let n = 1;
        let an = MonomialAlgebra::an(n);
        let lam = MonomialAlgebra::lambda(n);
        let pairs = [
            (
                a_module(0, 1, &an, Rationals).unwrap(),
                da_module(1, 0, &an, Rationals).unwrap(),
            ),
            (
                u_module(2, &an, Rationals).unwrap(),
                x_module(&an, Rationals).unwrap(),
            ),
        ];
        for (a, b) in pairs {
            let d_before = hom_basis(&a, &b).dim();
            let d_after = hom_basis(&a.inflate(&lam).unwrap(), &b.inflate(&lam).unwrap()).dim();
            assert_eq!(d_before, d_after);
        }
    }

    #[test]
    fn compose_is_associative_on_small_maps() {
        let alg = MonomialAlgebra::an(1);
        let u2 = u_module(2, &alg, Rationals).unwrap();
        let u1 = u_module(1, &alg, Rationals).unwrap();
        let u0 = u_module(0, &alg, Rationals).unwrap();
        let ab = hom_basis(&u2, &u1);
        let bc = hom_basis(&u1, &u0);
        let cd = hom_basis(&u0, &u0);
        for f in &cd.basis {
            for g in &bc.basis {
                for h in &ab.basis {
                    let lhs = f.mul(&g.mul(h));
                    let rhs = f.mul(g).mul(h);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
