//! The Koszul complex of an Artinian local algebra on its minimal generators.
//!
//! `K_j = R ⊗ Λ^j k^n` has basis `e_S ⊗ b_u` for `j`-subsets `S` in
//! lexicographic order; coordinate `s·l + u` holds the coefficient of
//! `e_S ⊗ b_u`. The differential is
//! `d(e_S ⊗ r) = Σ_k (-1)^k x_{s_k} r ⊗ e_{S \ s_k}` where `k` is the
//! position of `s_k` in `S`.

use std::collections::HashMap;

use crate::algebra::{subsets, ArtinianLocalAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, FpMatrix};

/// Largest embedding dimension accepted by [`KoszulComplex::new`].
pub const MAX_KOSZUL_EDIM: usize = 8;

#[derive(Clone, Debug)]
pub struct KoszulComplex<'a> {
    algebra: &'a ArtinianLocalAlgebra,
    n: usize,
    subsets: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    /// `differentials[j]` is `d_j : K_j -> K_{j-1}` for `1 <= j <= n`; entry 0 is unused.
    differentials: Vec<FpMatrix>,
}

/// An element of `K_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub coords: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulHomologyProfile {
    pub dims: Vec<usize>,
    pub cycle_representatives: Vec<Vec<Vec<u32>>>,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(algebra: &'a ArtinianLocalAlgebra) -> Result<Self> {
        let n = algebra.edim();
        if n > MAX_KOSZUL_EDIM {
            return Err(Error::Precondition(format!(
                "Koszul complex limited to embedding dimension {MAX_KOSZUL_EDIM}, got {n}"
            )));
        }
        let l = algebra.length();
        let f = algebra.field();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|j| subsets(n, j)).collect();
        let index: Vec<HashMap<Vec<usize>, usize>> =
            subsets.iter().map(|ss| ss.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let mut differentials = vec![FpMatrix::zeros(f, l, 0)];
        for j in 1..=n {
            let mut d = FpMatrix::zeros(f, l * subsets[j - 1].len(), l * subsets[j].len());
            for (si, s) in subsets[j].iter().enumerate() {
                for (pos, &i) in s.iter().enumerate() {
                    let mut t = s.clone();
                    t.remove(pos);
                    let ti = index[j - 1][&t];
                    let g = &algebra.generator_matrices()[i];
                    for u in 0..l {
                        for v in 0..l {
                            let x = g.get(v, u);
                            if x != 0 {
                                let x = if pos % 2 == 0 { x } else { f.neg(x) };
                                d.set(ti * l + v, si * l + u, x);
                            }
                        }
                    }
                }
            }
            differentials.push(d);
        }
        let k = KoszulComplex { algebra, n, subsets, index, differentials };
        for j in 2..=n {
            if !k.differentials[j - 1].mul(&k.differentials[j])?.is_zero() {
                return Err(Error::Verification(format!("d_{} d_{} != 0", j - 1, j)));
            }
        }
        Ok(k)
    }

    pub fn algebra(&self) -> &ArtinianLocalAlgebra {
        self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d_j` for `1 <= j <= n`.
    pub fn differential(&self, j: usize) -> &FpMatrix {
        &self.differentials[j]
    }

    pub fn subsets(&self, j: usize) -> &[Vec<usize>] {
        &self.subsets[j]
    }

    pub fn rank(&self, j: usize) -> usize {
        self.algebra.length() * self.subsets[j].len()
    }

    pub fn zero_chain(&self, degree: usize) -> Chain {
        Chain { degree, coords: vec![0; self.rank(degree)] }
    }

    /// The chain `r ⊗ e_S`.
    pub fn chain(&self, subset: &[usize], r: &[u32]) -> Chain {
        let j = subset.len();
        let mut c = self.zero_chain(j);
        let l = self.algebra.length();
        let s = self.index[j][subset];
        c.coords[s * l..(s + 1) * l].copy_from_slice(r);
        c
    }

    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        if c.degree == 0 {
            return Err(Error::Precondition("boundary of a degree 0 chain".into()));
        }
        Ok(Chain { degree: c.degree - 1, coords: self.differentials[c.degree].mul_vec(&c.coords)? })
    }

    pub fn add(&self, a: &Chain, b: &Chain) -> Chain {
        let f = self.algebra.field();
        Chain { degree: a.degree, coords: a.coords.iter().zip(&b.coords).map(|(&x, &y)| f.add(x, y)).collect() }
    }

    pub fn scale(&self, c: u32, a: &Chain) -> Chain {
        let f = self.algebra.field();
        Chain { degree: a.degree, coords: a.coords.iter().map(|&x| f.mul(c, x)).collect() }
    }

    /// Product in the exterior algebra over `R`.
    pub fn wedge_multiply(&self, a: &Chain, b: &Chain) -> Result<Chain> {
        let deg = a.degree + b.degree;
        if deg > self.n {
            return Err(Error::Precondition(format!("degree {deg} exceeds {}", self.n)));
        }
        let r = self.algebra;
        let l = r.length();
        let f = r.field();
        let mut out = self.zero_chain(deg);
        for (si, s) in self.subsets[a.degree].iter().enumerate() {
            let ra = &a.coords[si * l..(si + 1) * l];
            if ra.iter().all(|&x| x == 0) {
                continue;
            }
            for (ti, t) in self.subsets[b.degree].iter().enumerate() {
                if s.iter().any(|x| t.contains(x)) {
                    continue;
                }
                let rb = &b.coords[ti * l..(ti + 1) * l];
                if rb.iter().all(|&x| x == 0) {
                    continue;
                }
                let inversions: usize = s.iter().map(|&x| t.iter().filter(|&&y| y < x).count()).sum();
                let mut union: Vec<usize> = s.iter().chain(t).copied().collect();
                union.sort_unstable();
                let ui = self.index[deg][&union];
                let prod = r.mul(ra, rb);
                for (k, &x) in prod.iter().enumerate() {
                    let x = if inversions.is_multiple_of(2) { x } else { f.neg(x) };
                    let slot = &mut out.coords[ui * l + k];
                    *slot = f.add(*slot, x);
                }
            }
        }
        Ok(out)
    }

    /// Echelon basis of the boundaries `im d_{j+1}` inside `K_j`.
    fn boundaries(&self, j: usize) -> EchelonBasis {
        let f = self.algebra.field();
        let mut e = EchelonBasis::new(f, self.rank(j));
        if j < self.n {
            for c in self.differentials[j + 1].column_space().columns() {
                e.insert(&c);
            }
        }
        e
    }

    pub fn homology_profile(&self) -> KoszulHomologyProfile {
        let f = self.algebra.field();
        let mut dims = Vec::with_capacity(self.n + 1);
        let mut reps = Vec::with_capacity(self.n + 1);
        for j in 0..=self.n {
            let cycles =
                if j == 0 { FpMatrix::identity(f, self.rank(0)) } else { self.differentials[j].kernel_basis() };
            let mut e = self.boundaries(j);
            let mut r = Vec::new();
            for z in cycles.columns() {
                if e.insert(&z) {
                    r.push(z);
                }
            }
            dims.push(r.len());
            reps.push(r);
        }
        KoszulHomologyProfile { dims, cycle_representatives: reps }
    }

    /// `true` when every product of two `H_1` classes is a boundary.
    pub fn h1_square_is_zero(&self, profile: &KoszulHomologyProfile) -> Result<bool> {
        if self.n < 2 {
            return Ok(true);
        }
        let b = self.boundaries(2);
        let reps = &profile.cycle_representatives[1];
        for (i, z) in reps.iter().enumerate() {
            for w in &reps[i..] {
                let za = Chain { degree: 1, coords: z.clone() };
                let wb = Chain { degree: 1, coords: w.clone() };
                if !b.contains(&self.wedge_multiply(&za, &wb)?.coords) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For Gorenstein `R`, checks that `H_i × H_{n-i} -> H_n ≅ k` is perfect.
    pub fn poincare_duality_check(&self, profile: &KoszulHomologyProfile) -> Result<bool> {
        let r = self.algebra;
        if !r.is_gorenstein() {
            return Err(Error::NotGorenstein(r.socle_dim()));
        }
        let f = r.field();
        let l = r.length();
        let delta = r.socle().column(0);
        let piv = delta.iter().position(|&x| x != 0).unwrap();
        let inv = f.inv(delta[piv]);
        let n = self.n;
        for i in 1..n {
            let (a, b) = (&profile.cycle_representatives[i], &profile.cycle_representatives[n - i]);
            if a.len() != b.len() {
                return Ok(false);
            }
            let mut rows = Vec::with_capacity(a.len());
            for z in a {
                let mut row = Vec::with_capacity(b.len());
                for w in b {
                    let p = self.wedge_multiply(
                        &Chain { degree: i, coords: z.clone() },
                        &Chain { degree: n - i, coords: w.clone() },
                    )?;
                    debug_assert_eq!(p.coords.len(), l);
                    row.push(f.mul(p.coords[piv], inv));
                }
                rows.push(row);
            }
            if FpMatrix::from_row_vectors(f, b.len(), &rows).rank() != a.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Number of minimal generators of the defining ideal, `dim H_1`.
pub fn mu_defining_ideal(profile: &KoszulHomologyProfile) -> usize {
    profile.dims.get(1).copied().unwrap_or(0)
}
