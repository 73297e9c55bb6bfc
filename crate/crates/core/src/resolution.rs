//! Minimal free resolutions and Betti numbers of finite modules over an
//! Artinian local algebra.
//!
//! Free modules `R^b` are handled as `k`-spaces of dimension `l·b` with
//! coordinates `(j, u)`, `j` the summand and `u` the basis element of `R`.
//! Because the basis of `R` is adapted to the `m`-adic filtration, `mR^b`
//! and `m²R^b` are coordinate subspaces, which is what keeps the syzygy
//! computations small.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{ArtinianLocalAlgebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, FpMatrix, PrimeField};
use crate::series::{IntPoly, PowerSeriesZ};

/// A finite-dimensional module over an Artinian local algebra, given by the
/// action of each minimal generator of the maximal ideal.
#[derive(Clone, Debug)]
pub struct FinModule<'a> {
    algebra: &'a ArtinianLocalAlgebra,
    dim: usize,
    actions: Vec<FpMatrix>,
    basis_ops: Vec<FpMatrix>,
}

impl<'a> FinModule<'a> {
    /// Checks that the actions commute, are nilpotent, and satisfy the
    /// relations of the algebra.
    pub fn new(algebra: &'a ArtinianLocalAlgebra, dim: usize, actions: Vec<FpMatrix>) -> Result<Self> {
        if actions.len() != algebra.edim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for embedding dimension {}",
                actions.len(),
                algebra.edim()
            )));
        }
        for a in &actions {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch(format!("action matrix is not {dim}x{dim}")));
            }
        }
        for (i, a) in actions.iter().enumerate() {
            for b in &actions[i + 1..] {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidTable("module actions do not commute".into()));
                }
            }
        }
        let m = Self::from_parts(algebra, dim, actions);
        m.check_relations()?;
        Ok(m)
    }

    fn from_parts(algebra: &'a ArtinianLocalAlgebra, dim: usize, actions: Vec<FpMatrix>) -> Self {
        let field = algebra.field();
        let basis_ops = (0..algebra.length())
            .map(|u| {
                let mut op = FpMatrix::identity(field, dim);
                for (t, &e) in algebra.basis_word(u).iter().enumerate() {
                    for _ in 0..e {
                        op = actions[t].mul(&op).unwrap();
                    }
                }
                op
            })
            .collect();
        FinModule { algebra, dim, actions, basis_ops }
    }

    /// `b_u b_v` must act as the expansion of the product in the basis.
    fn check_relations(&self) -> Result<()> {
        let r = self.algebra;
        let f = r.field();
        for u in 0..r.length() {
            for v in 0..r.length() {
                let prod = r.mul(&r.basis_element(u), &r.basis_element(v));
                let mut expected = FpMatrix::zeros(f, self.dim, self.dim);
                for (w, &c) in prod.iter().enumerate() {
                    if c != 0 {
                        expected = expected.add(&self.basis_ops[w].scale(c))?;
                    }
                }
                if self.basis_ops[u].mul(&self.basis_ops[v])? != expected {
                    return Err(Error::InvalidTable("module action violates the relations of the algebra".into()));
                }
            }
        }
        Ok(())
    }

    /// `R` as a module over itself.
    pub fn regular(algebra: &'a ArtinianLocalAlgebra) -> Self {
        let actions = (0..algebra.edim()).map(|t| algebra.basis_operator(algebra.generator_index(t)).clone()).collect();
        Self::from_parts(algebra, algebra.length(), actions)
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(algebra: &'a ArtinianLocalAlgebra) -> Self {
        let actions = vec![FpMatrix::zeros(algebra.field(), 1, 1); algebra.edim()];
        Self::from_parts(algebra, 1, actions)
    }

    /// The cyclic module `R/(elements)`.
    pub fn from_quotient(algebra: &'a ArtinianLocalAlgebra, elements: &[Element]) -> Result<Self> {
        for a in elements {
            if a.len() != algebra.length() {
                return Err(Error::DimensionMismatch("element length".into()));
            }
        }
        let ideal = algebra.ideal_closure(elements);
        let pivots: BTreeSet<usize> = ideal.pivots().iter().copied().collect();
        let complement: Vec<usize> = (0..algebra.length()).filter(|c| !pivots.contains(c)).collect();
        let actions = (0..algebra.edim())
            .map(|t| {
                let op = algebra.basis_operator(algebra.generator_index(t));
                let cols: Vec<Vec<u32>> = complement
                    .iter()
                    .map(|&c| {
                        let mut w = op.column(c);
                        ideal.reduce(&mut w);
                        complement.iter().map(|&k| w[k]).collect()
                    })
                    .collect();
                FpMatrix::from_columns(algebra.field(), complement.len(), &cols)
            })
            .collect();
        Ok(Self::from_parts(algebra, complement.len(), actions))
    }

    pub fn algebra(&self) -> &'a ArtinianLocalAlgebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[FpMatrix] {
        &self.actions
    }

    /// Action of the `u`-th basis element of the algebra.
    pub fn basis_operator(&self, u: usize) -> &FpMatrix {
        &self.basis_ops[u]
    }

    /// Basis of `mM`.
    fn maximal_ideal_image(&self) -> EchelonBasis {
        let mut e = EchelonBasis::new(self.algebra.field(), self.dim);
        for a in &self.actions {
            for c in a.columns() {
                e.insert(&c);
            }
        }
        e
    }

    /// `dim M/mM`, the minimal number of generators.
    pub fn minimal_generator_count(&self) -> usize {
        self.dim - self.maximal_ideal_image().len()
    }
}

/// `R/(elements)` as an `R`-module.
pub fn module_from_quotient<'a>(algebra: &'a ArtinianLocalAlgebra, elements: &[Element]) -> Result<FinModule<'a>> {
    FinModule::from_quotient(algebra, elements)
}

#[derive(Clone, Copy, Debug)]
pub struct ResolutionOptions {
    /// Largest homological degree `D`.
    pub max_degree: usize,
    /// Cap on `l·β_i`; the resolution stops early when it would be exceeded.
    pub budget: usize,
    /// Re-check `d² = 0` on every new generator by direct multiplication.
    pub verify: bool,
    /// Shuffle the columns of each syzygy matrix before elimination.
    pub column_seed: Option<u64>,
}

impl Default for ResolutionOptions {
    fn default() -> Self {
        ResolutionOptions { max_degree: 6, budget: 200_000, verify: true, column_seed: None }
    }
}

impl ResolutionOptions {
    pub fn to_degree(max_degree: usize) -> Self {
        ResolutionOptions { max_degree, ..Self::default() }
    }
}

/// Betti numbers `β_0..β_D` of a module together with the differentials of
/// its minimal free resolution.
#[derive(Clone, Debug, Serialize)]
pub struct BettiTable {
    pub betti: Vec<usize>,
    pub max_degree: usize,
    pub truncated: bool,
    #[serde(skip)]
    length: usize,
    /// `generators[0]` are the chosen generators of the module;
    /// `generators[i]` for `i ≥ 1` are the columns of `d_i` as vectors of `R^{β_{i-1}}`.
    #[serde(skip)]
    generators: Vec<Vec<Vec<u32>>>,
}

impl BettiTable {
    /// `Σ β_i t^i` up to the last computed degree.
    pub fn poincare_series(&self) -> PowerSeriesZ {
        PowerSeriesZ::from_usize(&self.betti)
    }

    /// Number of computed degrees minus one.
    pub fn computed_degree(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn module_generators(&self) -> &[Vec<u32>] {
        &self.generators[0]
    }

    /// The differential `d_i : R^{β_i} → R^{β_{i-1}}` as a `β_{i-1} × β_i`
    /// matrix with entries in the algebra, for `1 ≤ i ≤` computed degree.
    pub fn differential(&self, i: usize) -> Vec<Vec<Element>> {
        let l = self.length;
        let gens = &self.generators[i];
        (0..self.betti[i - 1]).map(|row| gens.iter().map(|h| h[row * l..(row + 1) * l].to_vec()).collect()).collect()
    }

    /// Column `j` of `d_i` as a vector of `R^{β_{i-1}}`.
    pub fn differential_column(&self, i: usize, j: usize) -> &[u32] {
        &self.generators[i][j]
    }
}

/// Multiplies every block of `h ∈ R^b` by the basis element `u`.
fn free_basis_mul(algebra: &ArtinianLocalAlgebra, u: usize, h: &[u32]) -> Vec<u32> {
    let l = algebra.length();
    let op = algebra.basis_operator(u);
    let mut out = Vec::with_capacity(h.len());
    for block in h.chunks(l) {
        if block.iter().all(|&x| x == 0) {
            out.extend(std::iter::repeat_n(0, l));
        } else {
            out.extend(op.mul_vec(block).unwrap());
        }
    }
    out
}

fn axpy(field: PrimeField, acc: &mut [u32], c: u32, v: &[u32]) {
    for (a, &x) in acc.iter_mut().zip(v) {
        if x != 0 {
            *a = field.add(*a, field.mul(c, x));
        }
    }
}

/// Image under `d` of a vector of `R^b`, where `d` sends the `j`-th basis
/// vector to `images[j]`, and `act(u, w)` multiplies `w` by `b_u`.
fn apply_map(
    field: PrimeField,
    l: usize,
    v: &[u32],
    images: &[Vec<u32>],
    target_dim: usize,
    act: &dyn Fn(usize, &[u32]) -> Vec<u32>,
) -> Vec<u32> {
    let mut out = vec![0u32; target_dim];
    for (j, h) in images.iter().enumerate() {
        for u in 0..l {
            let c = v[j * l + u];
            if c != 0 {
                axpy(field, &mut out, c, &act(u, h));
            }
        }
    }
    out
}

/// Minimal free resolution of `module` up to `options.max_degree`.
///
/// At each step the syzygy module `K = ker(R^b → previous)` is computed,
/// its minimal generator count is `dim K/mK`, and lifts of the
/// lexicographically first basis of `K/mK` become the next differential.
pub fn minimal_free_resolution(module: &FinModule<'_>, options: &ResolutionOptions) -> Result<BettiTable> {
    let r = module.algebra;
    let field = r.field();
    let l = r.length();
    let n = r.edim();
    let mut rng = options.column_seed.map(ChaCha8Rng::seed_from_u64);

    // Step 0: generators of M and the kernel of R^{β0} → M.
    let mm = module.maximal_ideal_image();
    let mut pick = mm.clone();
    let mut gens0 = Vec::new();
    for c in 0..module.dim {
        let mut e = vec![0u32; module.dim];
        e[c] = 1;
        if pick.insert(&e) {
            gens0.push(e);
        }
    }
    let mut table = BettiTable {
        betti: vec![gens0.len()],
        max_degree: options.max_degree,
        truncated: false,
        length: l,
        generators: vec![gens0.clone()],
    };
    if options.max_degree == 0 || gens0.is_empty() {
        table.betti.resize(options.max_degree + 1, 0);
        return Ok(table);
    }
    if l * gens0.len() > options.budget {
        table.truncated = true;
        return Ok(table);
    }
    let module_act = |u: usize, w: &[u32]| module.basis_ops[u].mul_vec(w).unwrap();
    let cols0: Vec<Vec<u32>> =
        (0..gens0.len()).flat_map(|j| (0..l).map(move |u| (j, u))).map(|(j, u)| module_act(u, &gens0[j])).collect();
    let d0 = FpMatrix::from_columns(field, module.dim, &cols0);
    if d0.rank() != module.dim {
        return Err(Error::Verification("generators do not span the module".into()));
    }
    // kernel vectors of R^{β0} → M, full coordinates
    let mut kernel: Vec<Vec<u32>> = d0.kernel_basis().columns();
    let mut prev_images = gens0;
    let mut prev_is_module = true;

    for i in 1..=options.max_degree {
        let b_prev = table.betti[i - 1];
        // minimal generators of K = kernel ⊆ m R^{b_prev}
        let gens = minimal_generators(r, b_prev, &kernel)?;
        let b = gens.len();
        if options.verify {
            for h in &gens {
                if (0..b_prev).any(|j| h[j * l] != 0) {
                    return Err(Error::Verification(format!("differential d_{i} has a unit entry")));
                }
                let image = if prev_is_module {
                    apply_map(field, l, h, &prev_images, module.dim, &module_act)
                } else {
                    apply_map(field, l, h, &prev_images, prev_images[0].len(), &|u, w| free_basis_mul(r, u, w))
                };
                if image.iter().any(|&x| x != 0) {
                    return Err(Error::Verification(format!("d_{} d_{i} is not zero", i - 1)));
                }
            }
        }
        table.betti.push(b);
        table.generators.push(gens.clone());
        if b == 0 {
            table.betti.resize(options.max_degree + 1, 0);
            return Ok(table);
        }
        if i == options.max_degree {
            break;
        }
        if l * b > options.budget {
            table.truncated = true;
            return Ok(table);
        }
        // Kernel of d_i. Its columns at unit coordinates are the generators
        // themselves, independent modulo m·im, so the kernel lies in m R^b and
        // only the columns (j, u) with u ∈ m are needed; those land in m² R^{b_prev}.
        let rows: Vec<usize> = (0..b_prev).flat_map(|j| (1 + n..l).map(move |u| j * l + u)).collect();
        let mut cols: Vec<(usize, usize)> = (0..b).flat_map(|j| (1..l).map(move |u| (j, u))).collect();
        if let Some(rng) = rng.as_mut() {
            cols.shuffle(rng);
        }
        let col_vectors: Vec<Vec<u32>> = cols
            .iter()
            .map(|&(j, u)| {
                let full = free_basis_mul(r, u, &gens[j]);
                rows.iter().map(|&k| full[k]).collect()
            })
            .collect();
        let d = FpMatrix::from_columns(field, rows.len(), &col_vectors);
        let kb = d.kernel_basis();
        let rank = cols.len() - kb.cols();
        // exactness at F_{i-1}: rank d_i = rank of the restricted block + b = dim K_{i-1}
        if rank + b != kernel.len() {
            return Err(Error::Verification(format!(
                "resolution is not exact at step {}: rank {} vs kernel dimension {}",
                i - 1,
                rank + b,
                kernel.len()
            )));
        }
        kernel = kb
            .columns()
            .into_iter()
            .map(|v| {
                let mut full = vec![0u32; l * b];
                for (c, &(j, u)) in cols.iter().enumerate() {
                    full[j * l + u] = v[c];
                }
                full
            })
            .collect();
        prev_images = gens;
        prev_is_module = false;
    }
    Ok(table)
}

/// Lifts of the first basis of `K/mK` taken from `kernel` in order.
fn minimal_generators(r: &ArtinianLocalAlgebra, b: usize, kernel: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let field = r.field();
    let l = r.length();
    let n = r.edim();
    // K ⊆ mR^b; work in the coordinates (j, u) with u ∈ m
    let sub: Vec<usize> = (0..b).flat_map(|j| (1..l).map(move |u| j * l + u)).collect();
    let restrict = |v: &[u32]| -> Vec<u32> { sub.iter().map(|&k| v[k]).collect() };
    let mut m_k: Vec<Vec<u32>> = Vec::with_capacity(n * kernel.len());
    for v in kernel {
        for t in 0..n {
            let w = free_basis_mul(r, r.generator_index(t), v);
            if w.iter().any(|&x| x != 0) {
                m_k.push(restrict(&w));
            }
        }
    }
    let mut basis = EchelonBasis::new(field, sub.len());
    if !m_k.is_empty() {
        let (rr, pivots) = FpMatrix::from_row_vectors(field, sub.len(), &m_k).rref();
        for i in 0..pivots.len() {
            basis.insert(rr.row(i));
        }
    }
    let target = kernel.len() - basis.len();
    let mut gens = Vec::with_capacity(target);
    for v in kernel {
        if gens.len() == target {
            break;
        }
        if basis.insert(&restrict(v)) {
            gens.push(v.clone());
        }
    }
    if gens.len() != target {
        return Err(Error::Verification("kernel does not contain m times itself".into()));
    }
    Ok(gens)
}

/// Resolution of the residue field.
pub fn betti_of_k(algebra: &ArtinianLocalAlgebra, max_degree: usize) -> Result<BettiTable> {
    minimal_free_resolution(&FinModule::residue_field(algebra), &ResolutionOptions::to_degree(max_degree))
}

/// Both sides of Serre's inequality `P^S_k ≼ P^R_k / (1 − t(P^R_S − 1))` for `S = R/J`.
#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub max_degree: usize,
    pub lhs: PowerSeriesZ,
    pub rhs: PowerSeriesZ,
    pub termwise_leq: bool,
    pub equality: bool,
    /// Lowest degree with a strict inequality.
    pub first_strict_degree: Option<usize>,
}

/// Compares the two sides of Serre's inequality for the quotient of
/// `algebra` by the ideal generated by `ideal`, through degree `max_degree`.
pub fn serre_inequality_check(
    algebra: &ArtinianLocalAlgebra,
    ideal: &[Element],
    max_degree: usize,
) -> Result<SerreReport> {
    if max_degree == 0 {
        return Err(Error::Precondition("degree bound must be at least 1".into()));
    }
    let s = algebra.quotient_by_ideal(ideal)?;
    let lhs = betti_of_k(&s, max_degree)?;
    let pk = betti_of_k(algebra, max_degree)?;
    let ps =
        minimal_free_resolution(&FinModule::from_quotient(algebra, ideal)?, &ResolutionOptions::to_degree(max_degree))?;
    if lhs.truncated || pk.truncated || ps.truncated {
        return Err(Error::Budget("resolution truncated before the requested degree".into()));
    }
    let one = PowerSeriesZ::from_poly(&IntPoly::one(), max_degree);
    let t = PowerSeriesZ::from_poly(&IntPoly::monomial(1), max_degree);
    let den = one.sub(&t.mul(&ps.poincare_series().sub(&one)));
    let rhs = pk.poincare_series().mul(&den.inverse()?);
    let lhs = lhs.poincare_series();
    Ok(SerreReport {
        max_degree,
        termwise_leq: lhs.termwise_le(&rhs),
        equality: lhs == rhs,
        first_strict_degree: lhs.first_difference(&rhs),
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> ArtinianLocalAlgebra {
        ArtinianLocalAlgebra::from_ideal(f101(), n, gens, 20).unwrap()
    }

    fn inverse(n: usize, gens: &[&str]) -> ArtinianLocalAlgebra {
        ArtinianLocalAlgebra::from_inverse_system_text(f101(), n, gens).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let r = ideal(1, &["x1^3"]);
        let t = betti_of_k(&r, 4).unwrap();
        assert_eq!(t.betti, vec![1; 5]);
        // d_1 = (x), d_2 = (x^2), d_3 = (x)
        let x = r.generator(0);
        let x2 = r.mul(&x, &x);
        assert_eq!(t.differential(1), vec![vec![x.clone()]]);
        assert_eq!(t.differential(2), vec![vec![x2]]);
        assert_eq!(t.differential(3), vec![vec![x]]);
        assert_eq!(betti_of_k(&r, 6).unwrap().betti, vec![1; 7]);
    }

    #[test]
    fn golod_examples() {
        let r = ideal(2, &["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(betti_of_k(&r, 4).unwrap().betti, vec![1, 2, 4, 8, 16]);
        let r = ideal(2, &["x1^3", "x1*x2", "x2^2"]);
        assert_eq!(betti_of_k(&r, 8).unwrap().betti, vec![1, 2, 4, 8, 16, 32, 64, 128, 256]);
    }

    #[test]
    fn free_and_field_modules() {
        let r = inverse(3, &["Y1^2*Y2 + Y3^2"]);
        let t = minimal_free_resolution(&FinModule::regular(&r), &ResolutionOptions::to_degree(4)).unwrap();
        assert_eq!(t.betti, vec![1, 0, 0, 0, 0]);
        let dual = ideal(1, &["x1^2"]);
        let field = dual.quotient_by_ideal(&[dual.generator(0)]).unwrap();
        assert_eq!(field.length(), 1);
        assert_eq!(betti_of_k(&field, 3).unwrap().betti, vec![1, 0, 0, 0]);
    }

    #[test]
    fn quotient_modules() {
        let r = inverse(3, &["Y1^2*Y2 + Y3^2"]);
        assert_eq!(module_from_quotient(&r, &[]).unwrap().dim(), 7);
        let m: Vec<Element> = (1..7).map(|u| r.basis_element(u)).collect();
        assert_eq!(module_from_quotient(&r, &m).unwrap().dim(), 1);
        // x1 R = span{x1, x1^2, x1 x2, x1^2 x2}: the socle lies in x1 R
        let x1 = r.variable_images()[0].clone();
        let m = module_from_quotient(&r, &[x1]).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.minimal_generator_count(), 1);
    }

    #[test]
    fn gorenstein_examples() {
        let r = inverse(3, &["Y1^2*Y2 + Y3^2"]);
        assert_eq!(betti_of_k(&r, 6).unwrap().betti, vec![1, 3, 8, 21, 55, 144, 377]);
    }

    #[test]
    fn second_betti_counts_relations() {
        for (n, gens) in [(2, vec!["Y1^3*Y2"]), (3, vec!["Y1^2 + Y2^2 + Y3^2"]), (2, vec!["Y1^2", "Y2^2"])] {
            let r = inverse(n, &gens);
            let t = betti_of_k(&r, 2).unwrap();
            let h = crate::koszul::KoszulComplex::new(&r).unwrap().homology_profile();
            let n = r.edim();
            assert_eq!(t.betti[1], n);
            assert_eq!(t.betti[2], h.dims[1] + n * (n - 1) / 2);
        }
    }

    #[test]
    fn betti_numbers_do_not_depend_on_pivot_order() {
        let r = inverse(3, &["Y1^3 + Y2^2 + Y3^2", "Y1*Y2*Y3"]);
        let base = betti_of_k(&r, 5).unwrap();
        for seed in 0..3 {
            let opts = ResolutionOptions { column_seed: Some(seed), ..ResolutionOptions::to_degree(5) };
            let t = minimal_free_resolution(&FinModule::residue_field(&r), &opts).unwrap();
            assert_eq!(t.betti, base.betti);
        }
    }

    #[test]
    fn socle_quotient_shifts_betti_numbers() {
        let r = inverse(2, &["Y1^3*Y2"]);
        let k = betti_of_k(&r, 5).unwrap();
        let soc = r.socle().columns();
        let t = minimal_free_resolution(&module_from_quotient(&r, &soc).unwrap(), &ResolutionOptions::to_degree(5))
            .unwrap();
        assert_eq!(t.betti[0], 1);
        assert_eq!(&t.betti[1..], &k.betti[..5]);
    }

    #[test]
    fn budget_truncates() {
        let r = ideal(2, &["x1^2", "x1*x2", "x2^2"]);
        let opts = ResolutionOptions { budget: 20, ..ResolutionOptions::to_degree(8) };
        let t = minimal_free_resolution(&FinModule::residue_field(&r), &opts).unwrap();
        assert!(t.truncated);
        assert_eq!(t.betti, vec![1, 2, 4, 8]);
    }

    #[test]
    fn serre_examples() {
        let r = inverse(3, &["Y1^2*Y2 + Y3^2"]);
        let same = serre_inequality_check(&r, &[], 4).unwrap();
        assert!(same.equality);
        let m2: Vec<Element> =
            (0..r.length()).filter(|&u| r.basis_degree(u) >= 2).map(|u| r.basis_element(u)).collect();
        // mu(m^2) = 2, so R -> R/m^2 is not a Golod homomorphism: 9 < 10 in degree 2
        let rep = serre_inequality_check(&r, &m2, 5).unwrap();
        assert!(rep.termwise_leq && !rep.equality);
        assert_eq!(rep.first_strict_degree, Some(2));
        assert_eq!(rep.lhs, PowerSeriesZ::from_i64(&[1, 3, 9, 27, 81, 243]));
        let rep = serre_inequality_check(&r, &r.socle().columns(), 5).unwrap();
        assert!(rep.termwise_leq && rep.equality);
        let m: Vec<Element> = (1..r.length()).map(|u| r.basis_element(u)).collect();
        let rep = serre_inequality_check(&r, &m, 5).unwrap();
        assert!(rep.termwise_leq && !rep.equality);
        assert_eq!(rep.lhs.coeffs()[0], 1.into());
        assert_eq!(rep.first_strict_degree, Some(1));
    }

    #[test]
    fn module_validation() {
        let r = ideal(1, &["x1^3"]);
        let f = f101();
        // x acting as a 2x2 nilpotent Jordan block is a module over k[x]/(x^3)
        let j = FpMatrix::from_rows(f, &[vec![0, 0], vec![1, 0]]).unwrap();
        assert!(FinModule::new(&r, 2, vec![j]).is_ok());
        // a 4x4 Jordan block is not: x^3 acts nontrivially
        let mut j4 = FpMatrix::zeros(f, 4, 4);
        for i in 0..3 {
            j4.set(i + 1, i, 1);
        }
        assert!(FinModule::new(&r, 4, vec![j4]).is_err());
    }
}
