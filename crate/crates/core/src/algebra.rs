//! Artinian local algebras given by their regular representation.
//!
//! Every algebra is stored on a monomial basis adapted to the m-adic
//! filtration: the unity comes first, then monomials in the minimal
//! generators ordered by degree, so that `m^j` is the coordinate subspace
//! spanned by the basis elements of degree at least `j`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dualpoly::{DualPolynomial, Exponent, MonomialIndex};
use crate::error::{Error, Result};
use crate::koszul::KoszulHomologyProfile;
use crate::linalg::{EchelonBasis, FpMatrix, PrimeField};

/// Coordinates of an algebra element in the distinguished basis.
pub type Element = Vec<u32>;

#[derive(Clone, Debug)]
pub struct ArtinianLocalAlgebra {
    field: PrimeField,
    length: usize,
    /// Exponent vector over the minimal generators of each basis monomial.
    words: Vec<Exponent>,
    degrees: Vec<usize>,
    generators: Vec<FpMatrix>,
    /// `mult[u]` is left multiplication by basis element `u`.
    mult: Vec<FpMatrix>,
    hilbert: Vec<usize>,
    socle: FpMatrix,
    /// Images of the variables of the presentation the algebra was built from.
    variable_images: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_gorenstein: bool,
    #[serde(rename = "type")]
    pub socle_type: usize,
    pub mu_m_squared: usize,
    pub is_stretched: bool,
    pub is_almost_stretched: bool,
    pub is_compressed: bool,
    pub epsilon_profile: Vec<u64>,
    pub codepth_leq_3_applicable: bool,
    pub is_complete_intersection: Option<bool>,
}

/// Search parameters for [`ArtinianLocalAlgebra::find_principal_reduction`].
#[derive(Clone, Copy, Debug)]
pub struct ReductionSearch {
    /// Exhaustive search over all linear combinations when `p^n` is at most this.
    pub exhaustive_limit: u64,
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for ReductionSearch {
    fn default() -> Self {
        ReductionSearch { exhaustive_limit: 1_000_000, random_trials: 10_000, seed: 0 }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Coordinates of every target column in the basis formed by the
/// (independent) columns of `basis`.
pub(crate) fn coordinates(
    field: PrimeField,
    dim: usize,
    basis: &[Vec<u32>],
    targets: &[Vec<u32>],
) -> Result<Vec<Element>> {
    let l = basis.len();
    let mut cols = basis.to_vec();
    cols.extend_from_slice(targets);
    let (r, pivots) = FpMatrix::from_columns(field, dim, &cols).rref();
    if pivots.len() != l || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::InvalidTable("targets leave the span of the basis".into()));
    }
    Ok((0..targets.len()).map(|t| (0..l).map(|i| r.get(i, l + t)).collect()).collect())
}

impl ArtinianLocalAlgebra {
    /// Builds the algebra from its regular representation on `k^l`.
    ///
    /// `unit` is the unity, `ops` are left multiplications by elements that
    /// generate the maximal ideal (not necessarily minimally) and
    /// `variable_images` are the elements to remember as presentation
    /// variables, all in the same coordinates.
    pub fn from_regular_representation(
        field: PrimeField,
        unit: &[u32],
        ops: &[FpMatrix],
        variable_images: &[Vec<u32>],
    ) -> Result<Self> {
        let l = unit.len();
        if l == 0 {
            return Err(Error::InvalidTable("empty basis".into()));
        }
        for g in ops {
            if g.rows() != l || g.cols() != l {
                return Err(Error::InvalidTable(format!(
                    "generator matrix of size {}x{} on a basis of size {l}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field.modulus(), g.field().modulus()));
            }
        }
        for (i, a) in ops.iter().enumerate() {
            for b in &ops[i + 1..] {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidTable("generator matrices do not commute".into()));
                }
            }
        }
        for v in variable_images {
            if v.len() != l {
                return Err(Error::DimensionMismatch("variable image length".into()));
            }
        }

        // powers of the maximal ideal: V^1 = sum im G_i, V^{j+1} = sum G_i V^j
        let mut powers: Vec<EchelonBasis> = Vec::new();
        let mut current: Vec<Vec<u32>> = ops.iter().flat_map(|g| g.columns()).collect();
        loop {
            let mut e = EchelonBasis::new(field, l);
            for v in &current {
                e.insert(v);
            }
            if let Some(prev) = powers.last() {
                if prev.len() == e.len() && !e.is_empty() {
                    return Err(Error::InvalidTable("generators are not nilpotent".into()));
                }
            }
            let done = e.is_empty();
            current = e.vectors().iter().flat_map(|v| ops.iter().map(move |g| g.mul_vec(v).unwrap())).collect();
            powers.push(e);
            if done {
                break;
            }
        }
        let m_dim = powers[0].len();
        if m_dim + 1 != l || powers[0].contains(unit) {
            return Err(Error::InvalidTable("the unit does not generate the algebra".into()));
        }

        // minimal generators: G_i(1) independent modulo m^2
        let mut modsq = powers.get(1).cloned().unwrap_or_else(|| EchelonBasis::new(field, l));
        let minimal: Vec<usize> = (0..ops.len()).filter(|&i| modsq.insert(&ops[i].mul_vec(unit).unwrap())).collect();
        let n = minimal.len();

        // adapted monomial basis, degree by degree
        let mut words: Vec<Exponent> = vec![vec![0; n]];
        let mut vecs: Vec<Vec<u32>> = vec![unit.to_vec()];
        let mut parents: Vec<(usize, usize)> = vec![(0, 0)];
        let mut degrees = vec![0usize];
        let mut level: Vec<usize> = vec![0];
        let mut j = 1;
        while !level.is_empty() && j <= powers.len() {
            let mut e = powers.get(j).cloned().unwrap_or_else(|| EchelonBasis::new(field, l));
            let mut candidates: BTreeMap<Exponent, (Vec<u32>, usize, usize)> = BTreeMap::new();
            for &b in &level {
                for (gi, &op) in minimal.iter().enumerate() {
                    let mut w = words[b].clone();
                    w[gi] += 1;
                    candidates.entry(w).or_insert_with(|| (ops[op].mul_vec(&vecs[b]).unwrap(), b, gi));
                }
            }
            let mut next = Vec::new();
            // lexicographically largest exponent first: x1^2, x1*x2, x2^2, ...
            for (w, (v, parent, gi)) in candidates.into_iter().rev() {
                if e.insert(&v) {
                    next.push(words.len());
                    words.push(w);
                    vecs.push(v);
                    parents.push((parent, gi));
                    degrees.push(j);
                }
            }
            level = next;
            j += 1;
        }
        if words.len() != l {
            return Err(Error::InvalidTable("the unit does not generate the algebra".into()));
        }

        let p = FpMatrix::from_columns(field, l, &vecs);
        let p_inv = p.inverse().ok_or_else(|| Error::InvalidTable("monomial basis is singular".into()))?;
        let generators: Vec<FpMatrix> =
            minimal.iter().map(|&i| p_inv.mul(&ops[i]).and_then(|m| m.mul(&p))).collect::<Result<_>>()?;
        let variable_images: Vec<Element> = variable_images.iter().map(|v| p_inv.mul_vec(v)).collect::<Result<_>>()?;
        let mut mult = vec![FpMatrix::identity(field, l)];
        for &(parent, gi) in &parents[1..l] {
            let m = generators[gi].mul(&mult[parent])?;
            mult.push(m);
        }
        let s = *degrees.last().unwrap();
        let mut hilbert = vec![0usize; s + 1];
        for &d in &degrees {
            hilbert[d] += 1;
        }
        let socle = if n == 0 {
            FpMatrix::identity(field, 1)
        } else {
            let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n * l);
            for g in &generators {
                for r in 0..l {
                    rows.push(g.row(r).to_vec());
                }
            }
            FpMatrix::from_row_vectors(field, l, &rows).kernel_basis()
        };
        Ok(ArtinianLocalAlgebra { field, length: l, words, degrees, generators, mult, hilbert, socle, variable_images })
    }

    /// Algebra from a multiplication table: basis element 0 is the unity and
    /// `generators` are the left multiplications by elements generating m.
    pub fn from_table(field: PrimeField, basis: usize, generators: &[FpMatrix]) -> Result<Self> {
        let mut unit = vec![0u32; basis];
        if basis == 0 {
            return Err(Error::InvalidTable("empty basis".into()));
        }
        unit[0] = 1;
        let images: Vec<Vec<u32>> = generators.iter().map(|g| g.column(0)).collect();
        Self::from_regular_representation(field, &unit, generators, &images)
    }

    /// `k[X]/ann(F_1, ..., F_g)` acting on the span of all contractions.
    pub fn from_inverse_system(field: PrimeField, generators: &[DualPolynomial]) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let nvars = first.nvars();
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch("generators in different variable counts".into()));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field.modulus(), g.field().modulus()));
            }
        }
        if generators.iter().all(|g| g.degree().unwrap_or(0) == 0) {
            return Err(Error::ZeroAlgebra);
        }
        let index = MonomialIndex::divisors_of(generators);
        let dim = index.len() * generators.len();
        let phi = |a: &[u32]| -> Vec<u32> {
            let mut v = Vec::with_capacity(dim);
            for g in generators {
                v.extend(index.vector(&g.contract_monomial(a)));
            }
            v
        };

        // order ideal of standard monomials, explored breadth first
        let mut echelon = EchelonBasis::new(field, dim);
        let mut accepted: Vec<Exponent> = Vec::new();
        let mut images: Vec<Vec<u32>> = Vec::new();
        let mut seen: BTreeSet<Exponent> = BTreeSet::new();
        let mut queue: VecDeque<Exponent> = VecDeque::new();
        let one = vec![0u32; nvars];
        seen.insert(one.clone());
        queue.push_back(one);
        while let Some(a) = queue.pop_front() {
            let v = phi(&a);
            if !echelon.insert(&v) {
                continue;
            }
            accepted.push(a.clone());
            images.push(v);
            for i in 0..nvars {
                let mut b = a.clone();
                b[i] += 1;
                if seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        let l = accepted.len();
        let mut targets = Vec::with_capacity(nvars * l);
        for i in 0..nvars {
            for a in &accepted {
                let mut b = a.clone();
                b[i] += 1;
                targets.push(phi(&b));
            }
        }
        let coords = coordinates(field, dim, &images, &targets)?;
        let ops: Vec<FpMatrix> =
            (0..nvars).map(|i| FpMatrix::from_columns(field, l, &coords[i * l..(i + 1) * l])).collect();
        let mut unit = vec![0u32; l];
        unit[0] = 1;
        let var_images: Vec<Vec<u32>> = ops.iter().map(|g| g.column(0)).collect();
        Self::from_regular_representation(field, &unit, &ops, &var_images)
    }

    /// Parses the generators with [`DualPolynomial::parse`] and calls
    /// [`Self::from_inverse_system`].
    pub fn from_inverse_system_text(field: PrimeField, nvars: usize, generators: &[&str]) -> Result<Self> {
        let polys: Vec<DualPolynomial> =
            generators.iter().map(|s| DualPolynomial::parse(field, s, nvars, None)).collect::<Result<_>>()?;
        Self::from_inverse_system(field, &polys)
    }

    /// `k[x_1..x_n]/I` localized at the origin, by truncated linear algebra.
    pub fn from_ideal(field: PrimeField, nvars: usize, ideal_generators: &[&str], max_bound: usize) -> Result<Self> {
        let polys: Vec<DualPolynomial> =
            ideal_generators.iter().map(|s| DualPolynomial::parse(field, s, nvars, None)).collect::<Result<_>>()?;
        Self::from_ideal_polynomials(field, nvars, &polys, max_bound)
    }

    pub fn from_ideal_polynomials(
        field: PrimeField,
        nvars: usize,
        generators: &[DualPolynomial],
        max_bound: usize,
    ) -> Result<Self> {
        if max_bound < 2 {
            return Err(Error::Precondition("truncation bound must be at least 2".into()));
        }
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch("ideal generator variable count".into()));
            }
            if g.order().is_some_and(|o| o < 2) {
                return Err(Error::NotInSquare(g.to_text("x")));
            }
        }
        let generators: Vec<&DualPolynomial> = generators.iter().filter(|g| !g.is_zero()).collect();
        for n_trunc in 2..=max_bound {
            let monomials = monomials_up_to(nvars, n_trunc);
            let position: BTreeMap<&Exponent, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows: Vec<Vec<u32>> = Vec::new();
            for g in &generators {
                let ord = g.order().unwrap() as usize;
                for a in monomials.iter().filter(|a| deg(a) + ord <= n_trunc) {
                    let mut row = vec![0u32; monomials.len()];
                    for (e, c) in g.mul_monomial(a).terms() {
                        if deg(e) <= n_trunc {
                            row[position[e]] = c;
                        }
                    }
                    rows.push(row);
                }
            }
            let (r, pivots) = if rows.is_empty() {
                (FpMatrix::zeros(field, 0, monomials.len()), Vec::new())
            } else {
                FpMatrix::from_row_vectors(field, monomials.len(), &rows).rref()
            };
            let mut pivot_row = vec![None; monomials.len()];
            for (i, &c) in pivots.iter().enumerate() {
                pivot_row[c] = Some(i);
            }
            let complement: Vec<usize> = (0..monomials.len()).filter(|&c| pivot_row[c].is_none()).collect();
            let image = |e: &Exponent| -> Vec<u32> {
                let mut v = vec![0u32; complement.len()];
                if deg(e) > n_trunc {
                    return v;
                }
                let c = position[e];
                match pivot_row[c] {
                    None => v[complement.binary_search(&c).unwrap()] = 1,
                    Some(row) => {
                        for (k, &cc) in complement.iter().enumerate() {
                            v[k] = field.neg(r.get(row, cc));
                        }
                    }
                }
                v
            };
            let top_vanishes = monomials.iter().filter(|m| deg(m) == n_trunc).all(|m| image(m).iter().all(|&x| x == 0));
            if !top_vanishes {
                continue;
            }
            let l = complement.len();
            let ops: Vec<FpMatrix> = (0..nvars)
                .map(|i| {
                    let cols: Vec<Vec<u32>> = complement
                        .iter()
                        .map(|&c| {
                            let mut e = monomials[c].clone();
                            e[i] += 1;
                            image(&e)
                        })
                        .collect();
                    FpMatrix::from_columns(field, l, &cols)
                })
                .collect();
            let unit = image(&vec![0; nvars]);
            let var_images: Vec<Vec<u32>> = (0..nvars)
                .map(|i| {
                    let mut e = vec![0; nvars];
                    e[i] = 1;
                    image(&e)
                })
                .collect();
            return Self::from_regular_representation(field, &unit, &ops, &var_images);
        }
        Err(Error::NotArtinian(max_bound))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Embedding dimension: the number of minimal generators.
    pub fn edim(&self) -> usize {
        self.generators.len()
    }

    /// Loewy length `lo(R) = max{ i : m^i != 0 }`.
    pub fn loewy_length(&self) -> usize {
        self.hilbert.len() - 1
    }

    pub fn hilbert_function(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn generator_matrices(&self) -> &[FpMatrix] {
        &self.generators
    }

    /// Left multiplication by the `u`-th basis element.
    pub fn basis_operator(&self, u: usize) -> &FpMatrix {
        &self.mult[u]
    }

    pub fn basis_degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn basis_degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Exponent vector over the minimal generators of basis element `u`.
    pub fn basis_word(&self, u: usize) -> &[u32] {
        &self.words[u]
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.words.iter().map(|w| word_label(w)).collect()
    }

    pub fn variable_images(&self) -> &[Element] {
        &self.variable_images
    }

    /// Basis matrix of `m^j` (a coordinate subspace).
    pub fn filtration(&self, j: usize) -> FpMatrix {
        let idx: Vec<usize> = (0..self.length).filter(|&u| self.degrees[u] >= j).collect();
        FpMatrix::identity(self.field, self.length).select_columns(&idx)
    }

    pub fn filtration_dim(&self, j: usize) -> usize {
        self.degrees.iter().filter(|&&d| d >= j).count()
    }

    /// Basis matrix of `(0 :_R m)`.
    pub fn socle(&self) -> &FpMatrix {
        &self.socle
    }

    pub fn socle_dim(&self) -> usize {
        self.socle.cols()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle.cols() == 1
    }

    pub fn unit(&self) -> Element {
        let mut e = vec![0; self.length];
        e[0] = 1;
        e
    }

    pub fn zero(&self) -> Element {
        vec![0; self.length]
    }

    pub fn basis_element(&self, u: usize) -> Element {
        let mut e = self.zero();
        e[u] = 1;
        e
    }

    /// Basis index of the `i`-th minimal generator.
    pub fn generator_index(&self, i: usize) -> usize {
        1 + i
    }

    pub fn generator(&self, i: usize) -> Element {
        self.basis_element(self.generator_index(i))
    }

    /// m-adic order: the largest `j` with `a ∈ m^j` (`None` for zero).
    pub fn order(&self, a: &[u32]) -> Option<usize> {
        a.iter().enumerate().filter(|(_, &x)| x != 0).map(|(u, _)| self.degrees[u]).min()
    }

    pub fn in_maximal_ideal(&self, a: &[u32]) -> bool {
        a[0] == 0
    }

    /// Left multiplication by `a` as a matrix.
    pub fn operator(&self, a: &[u32]) -> FpMatrix {
        let f = self.field;
        let mut out = FpMatrix::zeros(f, self.length, self.length);
        for (u, &c) in a.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.mult[u].scale(c)).unwrap();
            }
        }
        out
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Element {
        let f = self.field;
        let mut out = vec![0u32; self.length];
        for (u, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let v = self.mult[u].mul_vec(b).unwrap();
            for (o, x) in out.iter_mut().zip(v) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Element {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Element {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Element {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    /// Value of a polynomial in the presentation variables.
    pub fn evaluate(&self, poly: &DualPolynomial) -> Result<Element> {
        if poly.nvars() != self.variable_images.len() {
            return Err(Error::VariableOutOfRange { index: poly.nvars(), count: self.variable_images.len() });
        }
        let mut out = self.zero();
        for (e, c) in poly.terms() {
            let mut term = self.scale(c, &self.unit());
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    term = self.mul(&self.variable_images[i], &term);
                }
            }
            out = self.add(&out, &term);
        }
        Ok(out)
    }

    /// Parses a polynomial in the presentation variables and evaluates it.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let poly = DualPolynomial::parse(self.field, text, self.variable_images.len(), None)?;
        self.evaluate(&poly)
    }

    /// Renders an element as a combination of basis monomials.
    pub fn format_element(&self, a: &[u32]) -> String {
        let labels = self.basis_labels();
        let mut parts = Vec::new();
        for (u, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = self.field.centered(c);
            let body = match (c, u) {
                (_, 0) => c.to_string(),
                (1, _) => labels[u].clone(),
                (-1, _) => format!("-{}", labels[u]),
                _ => format!("{c}*{}", labels[u]),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }

    /// The smallest ideal containing the given elements, as an echelon basis.
    pub fn ideal_closure(&self, elements: &[Element]) -> EchelonBasis {
        let mut e = EchelonBasis::new(self.field, self.length);
        let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
        for a in elements {
            if e.insert(a) {
                queue.push_back(a.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for g in &self.generators {
                let w = g.mul_vec(&v).unwrap();
                if e.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
        e
    }

    /// `R/J` where `J` is the ideal generated by the elements.
    pub fn quotient_by_ideal(&self, elements: &[Element]) -> Result<Self> {
        for a in elements {
            if a.len() != self.length {
                return Err(Error::DimensionMismatch("element length".into()));
            }
            if !self.in_maximal_ideal(a) {
                return Err(Error::NotInMaximalIdeal);
            }
        }
        let ideal = self.ideal_closure(elements);
        let pivots: BTreeSet<usize> = ideal.pivots().iter().copied().collect();
        let complement: Vec<usize> = (0..self.length).filter(|c| !pivots.contains(c)).collect();
        let project = |v: &[u32]| -> Vec<u32> {
            let mut w = v.to_vec();
            ideal.reduce(&mut w);
            complement.iter().map(|&c| w[c]).collect()
        };
        let ops: Vec<FpMatrix> = self
            .generators
            .iter()
            .map(|g| {
                let cols: Vec<Vec<u32>> = complement.iter().map(|&c| project(&g.column(c))).collect();
                FpMatrix::from_columns(self.field, complement.len(), &cols)
            })
            .collect();
        let unit = project(&self.unit());
        let vars: Vec<Vec<u32>> = self.variable_images.iter().map(|v| project(v)).collect();
        Self::from_regular_representation(self.field, &unit, &ops, &vars)
    }

    /// `R/m^i` for `2 <= i <= lo(R)`.
    pub fn quotient_by_power(&self, i: usize) -> Result<Self> {
        let lo = self.loewy_length();
        if i < 2 || i > lo {
            return Err(Error::Precondition(format!("power {i} outside [2, {lo}]")));
        }
        let elements: Vec<Element> =
            (0..self.length).filter(|&u| self.degrees[u] >= i).map(|u| self.basis_element(u)).collect();
        self.quotient_by_ideal(&elements)
    }

    /// `R/soc(R)`.
    pub fn quotient_by_socle(&self) -> Result<Self> {
        self.quotient_by_ideal(&self.socle.columns())
    }

    /// `(0 :_R a)` as a basis matrix.
    pub fn annihilator(&self, a: &[u32]) -> FpMatrix {
        self.operator(a).kernel_basis()
    }

    pub fn epsilon_profile(&self) -> Vec<u64> {
        let n = self.edim() as u64;
        let s = self.loewy_length() as u64;
        if n == 0 {
            return vec![1];
        }
        (0..=s).map(|i| binomial(n - 1 + s - i, n - 1).min(binomial(n - 1 + i, n - 1))).collect()
    }

    pub fn classify(&self, koszul: Option<&KoszulHomologyProfile>) -> Classification {
        let n = self.edim();
        let mu2 = self.hilbert.get(2).copied().unwrap_or(0);
        let eps = self.epsilon_profile();
        let gor = self.is_gorenstein();
        Classification {
            is_gorenstein: gor,
            socle_type: self.socle_dim(),
            mu_m_squared: mu2,
            is_stretched: mu2 == 1,
            is_almost_stretched: mu2 == 2,
            is_compressed: gor && n >= 2 && self.length as u64 == eps.iter().sum::<u64>(),
            epsilon_profile: eps,
            codepth_leq_3_applicable: n <= 3,
            is_complete_intersection: koszul.map(|k| k.dims.get(1).copied().unwrap_or(0) == n),
        }
    }

    /// `true` when `x ∈ m \ m^2` and `x·m = m^2`, checked by rank.
    pub fn is_principal_reduction(&self, x: &[u32]) -> bool {
        if self.order(x) != Some(1) {
            return false;
        }
        let images: Vec<Vec<u32>> = (1..self.length).map(|u| self.mul(x, &self.basis_element(u))).collect();
        let target = self.filtration_dim(2);
        if images.iter().any(|v| self.order(v).is_some_and(|d| d < 2)) {
            return false;
        }
        let mut e = EchelonBasis::new(self.field, self.length);
        for v in &images {
            e.insert(v);
        }
        e.len() == target
    }

    /// Searches for `x ∈ m \ m^2` with `m^2 = x·m`.
    pub fn find_principal_reduction(&self, search: &ReductionSearch) -> Result<Element> {
        let n = self.edim();
        if n == 0 {
            return Err(Error::ReductionNotFound { reason: "maximal ideal is zero".into(), exhaustive: true });
        }
        let combine = |coeffs: &[u32]| -> Element {
            let mut x = self.zero();
            for (i, &c) in coeffs.iter().enumerate() {
                x[self.generator_index(i)] = c;
            }
            x
        };
        for i in 0..n {
            let x = self.generator(i);
            if self.is_principal_reduction(&x) {
                return Ok(x);
            }
        }
        let p = self.field.modulus() as u64;
        let exhaustive = (p as f64).powi(n as i32) <= search.exhaustive_limit as f64;
        for k in 2..=n {
            for subset in subsets(n, k) {
                if exhaustive {
                    let mut digits = vec![1u32; k];
                    loop {
                        let mut coeffs = vec![0u32; n];
                        for (&i, &d) in subset.iter().zip(&digits) {
                            coeffs[i] = d;
                        }
                        let x = combine(&coeffs);
                        if self.is_principal_reduction(&x) {
                            return Ok(x);
                        }
                        // next tuple in (1..p)^k, lexicographic
                        let mut pos = k;
                        loop {
                            if pos == 0 {
                                break;
                            }
                            pos -= 1;
                            if (digits[pos] as u64) < p - 1 {
                                digits[pos] += 1;
                                digits[pos + 1..].iter_mut().for_each(|d| *d = 1);
                                pos = usize::MAX;
                                break;
                            }
                        }
                        if pos != usize::MAX {
                            break;
                        }
                    }
                } else {
                    let mut coeffs = vec![0u32; n];
                    for &i in &subset {
                        coeffs[i] = 1;
                    }
                    let x = combine(&coeffs);
                    if self.is_principal_reduction(&x) {
                        return Ok(x);
                    }
                }
            }
        }
        if exhaustive {
            return Err(Error::ReductionNotFound {
                reason: format!(
                    "exhaustive search over {} combinations, mu(m^2) = {}",
                    p.pow(n as u32),
                    self.classify(None).mu_m_squared
                ),
                exhaustive: true,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
        for _ in 0..search.random_trials {
            let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p as u32)).collect();
            let x = combine(&coeffs);
            if self.is_principal_reduction(&x) {
                return Ok(x);
            }
        }
        Err(Error::ReductionNotFound {
            reason: format!("{} random trials with seed {}", search.random_trials, search.seed),
            exhaustive: false,
        })
    }
}

fn deg(e: &[u32]) -> usize {
    e.iter().sum::<u32>() as usize
}

fn monomials_up_to(nvars: usize, max: usize) -> Vec<Exponent> {
    let mut out = vec![vec![0u32; nvars]];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = BTreeSet::new();
        for m in &frontier {
            for i in 0..nvars {
                let mut e = m.clone();
                e[i] += 1;
                next.insert(e);
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn word_label(w: &[u32]) -> String {
    let parts: Vec<String> = w
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
