//! Fibre products, connected sums and the splitting of a Gorenstein ring
//! `R` with `μ(m²) < edim R` into a connected sum `S # T`.

use serde::Serialize;

use crate::algebra::{coordinates, ArtinianLocalAlgebra, Element, ReductionSearch};
use crate::error::{Error, Result};
use crate::linalg::{same_span, EchelonBasis, FpMatrix};

/// Adjusted generators `x_1..x_n` of a Gorenstein ring with
/// `m² = (x_1², x_1x_2, ..., x_1x_m)`, `(x_1..x_m)(x_{m+1}..x_n) = 0` and
/// `(x_{m+1}..x_n)² = soc R`.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectedSumWitness {
    pub adjusted_generators: Vec<Element>,
    pub split_index: usize,
    pub socle_generator: Element,
    /// Whether each of the three identities above holds.
    pub claims: [bool; 3],
}

#[derive(Clone, Debug)]
pub struct ConnectedSumDecomposition {
    pub s: ArtinianLocalAlgebra,
    pub t: ArtinianLocalAlgebra,
    pub witness: ConnectedSumWitness,
}

#[derive(Clone, Debug)]
pub enum Decomposition {
    Split(Box<ConnectedSumDecomposition>),
    /// No splitting was produced; the string says why.
    NotSplit(String),
}

fn check_fields(s: &ArtinianLocalAlgebra, t: &ArtinianLocalAlgebra) -> Result<()> {
    if s.field() != t.field() {
        return Err(Error::FieldMismatch(s.field().modulus(), t.field().modulus()));
    }
    Ok(())
}

/// Places an element of a factor into the fibre product basis
/// `{1} ⊔ m_S ⊔ m_T`; `offset` is 0 for `S` and `l(S) - 1` for `T`.
fn embed(v: &[u32], offset: usize, total: usize) -> Vec<u32> {
    let mut out = vec![0u32; total];
    out[0] = v[0];
    for (u, &x) in v.iter().enumerate().skip(1) {
        out[offset + u] = x;
    }
    out
}

/// `S ×_k T`.
pub fn fibre_product(s: &ArtinianLocalAlgebra, t: &ArtinianLocalAlgebra) -> Result<ArtinianLocalAlgebra> {
    check_fields(s, t)?;
    let f = s.field();
    let total = s.length() + t.length() - 1;
    let mut ops = Vec::new();
    let mut vars = Vec::new();
    for (factor, offset) in [(s, 0), (t, s.length() - 1)] {
        for g in factor.generator_matrices() {
            let mut m = FpMatrix::zeros(f, total, total);
            for u in 0..factor.length() {
                let col = embed(&g.column(u), offset, total);
                let target = if u == 0 { 0 } else { offset + u };
                for (r, &x) in col.iter().enumerate() {
                    m.set(r, target, x);
                }
            }
            ops.push(m);
        }
        vars.extend(factor.variable_images().iter().map(|v| embed(v, offset, total)));
    }
    let mut unit = vec![0u32; total];
    unit[0] = 1;
    ArtinianLocalAlgebra::from_regular_representation(f, &unit, &ops, &vars)
}

fn check_gorenstein_factor(r: &ArtinianLocalAlgebra) -> Result<()> {
    if !r.is_gorenstein() {
        return Err(Error::NotGorenstein(r.socle_dim()));
    }
    if r.loewy_length() < 2 {
        return Err(Error::Precondition(format!(
            "connected sum factors need Loewy length at least 2, got {}",
            r.loewy_length()
        )));
    }
    Ok(())
}

/// `S # T = (S ×_k T)/(δ_S − δ_T)`, together with `δ_S` and `δ_T`.
pub fn connected_sum(
    s: &ArtinianLocalAlgebra,
    t: &ArtinianLocalAlgebra,
) -> Result<(ArtinianLocalAlgebra, Element, Element)> {
    check_fields(s, t)?;
    check_gorenstein_factor(s)?;
    check_gorenstein_factor(t)?;
    let fp = fibre_product(s, t)?;
    let ds = s.socle().column(0);
    let dt = t.socle().column(0);
    let total = fp.length();
    // the fibre product is re-normalized, so translate from concatenated coordinates
    let (es, et) = (embed(&ds, 0, total), embed(&dt, s.length() - 1, total));
    let raw = fibre_product_raw_to_normal(s, t, &fp)?;
    let delta = fp.sub(&raw.mul_vec(&es)?, &raw.mul_vec(&et)?);
    let sum = fp.quotient_by_ideal(&[delta])?;
    Ok((sum, ds, dt))
}

/// Change of coordinates from the concatenated basis `{1} ⊔ m_S ⊔ m_T` to the
/// normalized basis of the fibre product.
fn fibre_product_raw_to_normal(
    s: &ArtinianLocalAlgebra,
    t: &ArtinianLocalAlgebra,
    fp: &ArtinianLocalAlgebra,
) -> Result<FpMatrix> {
    let f = fp.field();
    let total = fp.length();
    let mut cols = vec![fp.unit()];
    // basis element u of a factor is a monomial in that factor's generators,
    // whose images in the fibre product are the corresponding generators
    let ns = s.edim();
    for (factor, shift) in [(s, 0usize), (t, ns)] {
        for u in 1..factor.length() {
            let mut v = fp.unit();
            for (i, &a) in factor.basis_word(u).iter().enumerate() {
                for _ in 0..a {
                    v = fp.mul(&fp.generator(shift + i), &v);
                }
            }
            cols.push(v);
        }
    }
    Ok(FpMatrix::from_columns(f, total, &cols))
}

/// Runs the three-stage generator adjustment for a Gorenstein ring with
/// `m² = x_1·m` and `μ(m²) < edim R`.
pub fn adjust_generators(r: &ArtinianLocalAlgebra, x1: &[u32]) -> Result<ConnectedSumWitness> {
    if !r.is_gorenstein() {
        return Err(Error::NotGorenstein(r.socle_dim()));
    }
    if r.loewy_length() < 3 {
        return Err(Error::Precondition(format!("Loewy length {} < 3", r.loewy_length())));
    }
    if !r.is_principal_reduction(x1) {
        return Err(Error::Precondition("x_1 does not satisfy m^2 = x_1 m".into()));
    }
    let n = r.edim();
    let m = r.hilbert_function()[2];
    if m >= n {
        return Err(Error::Precondition(format!("mu(m^2) = {m} is not below edim = {n}")));
    }
    let f = r.field();
    let l = r.length();

    // (a) x_1^2, x_1 x_2, ..., x_1 x_m independent modulo m^3
    let mut mod_m3 = EchelonBasis::new(f, l);
    for c in r.filtration(3).columns() {
        mod_m3.insert(&c);
    }
    let mut mod_m2 = EchelonBasis::new(f, l);
    for c in r.filtration(2).columns() {
        mod_m2.insert(&c);
    }
    if !mod_m3.insert(&r.mul(x1, x1)) {
        return Err(Error::Verification("x_1^2 lies in m^3".into()));
    }
    mod_m2.insert(x1);
    let mut xs: Vec<Element> = vec![x1.to_vec()];
    for i in 0..n {
        if xs.len() == m {
            break;
        }
        let g = r.generator(i);
        if mod_m2.contains(&g) {
            continue;
        }
        if mod_m3.insert(&r.mul(x1, &g)) {
            mod_m2.insert(&g);
            xs.push(g);
        }
    }
    if xs.len() != m {
        return Err(Error::Verification("could not extend x_1 to a basis of m^2 / m^3".into()));
    }
    for i in 0..n {
        let g = r.generator(i);
        if mod_m2.insert(&g) {
            xs.push(g);
        }
    }
    debug_assert_eq!(xs.len(), n);

    // (b) make x_1 x_j = 0 for j > m, subtracting y in (x_1..x_m)R
    let first = r.ideal_closure(&xs[..m]);
    let basis: Vec<Vec<u32>> = first.vectors().to_vec();
    let images: Vec<Vec<u32>> = basis.iter().map(|b| r.mul(x1, b)).collect();
    let a = FpMatrix::from_columns(f, l, &images);
    for (j, x) in xs.iter_mut().enumerate().skip(m) {
        let target = r.mul(x1, x);
        let c = a
            .solve(&target)?
            .ok_or_else(|| Error::Verification(format!("x_1 x_{} is outside x_1 (x_1..x_m)", j + 1)))?;
        let y = combine(r, &basis, &c);
        *x = r.sub(x, &y);
    }

    // (c) make x_i x_j = 0 for 2 <= i <= m < j, subtracting elements of (0 : x_1) ∩ m^2
    if m >= 2 {
        let ann = r.annihilator(x1);
        let a_space = crate::linalg::intersect_subspaces(&ann, &r.filtration(2))?;
        let a_basis = a_space.columns();
        if !a_basis.is_empty() {
            let mut rows_per_col: Vec<Vec<u32>> = Vec::new();
            for b in &a_basis {
                let mut col = Vec::with_capacity(l * (m - 1));
                for xi in &xs[1..m] {
                    col.extend(r.mul(b, xi));
                }
                rows_per_col.push(col);
            }
            let system = FpMatrix::from_columns(f, l * (m - 1), &rows_per_col);
            for j in m..n {
                let mut rhs = Vec::with_capacity(l * (m - 1));
                for xi in &xs[1..m] {
                    rhs.extend(r.mul(&xs[j], xi));
                }
                let c =
                    system.solve(&rhs)?.ok_or_else(|| Error::Verification(format!("no correction for x_{}", j + 1)))?;
                let hat = combine(r, &a_basis, &c);
                xs[j] = r.sub(&xs[j], &hat);
            }
        }
    }

    let delta = r.socle().column(0);
    let claims = verify_claims(r, &xs, m)?;
    if claims.iter().any(|c| !c) {
        return Err(Error::Verification(format!("generator adjustment claims {claims:?}")));
    }
    Ok(ConnectedSumWitness { adjusted_generators: xs, split_index: m, socle_generator: delta, claims })
}

fn combine(r: &ArtinianLocalAlgebra, basis: &[Vec<u32>], c: &[u32]) -> Element {
    let mut out = r.zero();
    for (b, &x) in basis.iter().zip(c) {
        if x != 0 {
            out = r.add(&out, &r.scale(x, b));
        }
    }
    out
}

fn verify_claims(r: &ArtinianLocalAlgebra, xs: &[Element], m: usize) -> Result<[bool; 3]> {
    let f = r.field();
    let l = r.length();
    let n = xs.len();
    // minimality
    let mut e = EchelonBasis::new(f, l);
    for c in r.filtration(2).columns() {
        e.insert(&c);
    }
    if !xs.iter().all(|x| e.insert(x)) {
        return Err(Error::Verification("adjusted generators are not minimal".into()));
    }
    let prods: Vec<Element> = (0..m).map(|i| r.mul(&xs[0], &xs[i])).collect();
    let c1 =
        r.ideal_closure(&prods).len() == r.filtration_dim(2) && prods.iter().all(|p| r.order(p).is_none_or(|d| d >= 2));
    let c2 = (0..m).all(|i| (m..n).all(|j| r.mul(&xs[i], &xs[j]).iter().all(|&x| x == 0)));
    let mut quad = Vec::new();
    for i in m..n {
        for j in i..n {
            quad.push(r.mul(&xs[i], &xs[j]));
        }
    }
    let c3 = same_span(&FpMatrix::from_columns(f, l, &quad), r.socle());
    Ok([c1, c2, c3])
}

/// Unital subalgebra spanned by `1` and the given subspace (closed under
/// multiplication), generated by `gens`.
fn subalgebra(r: &ArtinianLocalAlgebra, span: &[Vec<u32>], gens: &[Element]) -> Result<ArtinianLocalAlgebra> {
    let f = r.field();
    let mut basis = vec![r.unit()];
    basis.extend_from_slice(span);
    let d = basis.len();
    let mut ops = Vec::new();
    for g in gens {
        let targets: Vec<Vec<u32>> = basis.iter().map(|b| r.mul(g, b)).collect();
        let coords = coordinates(f, r.length(), &basis, &targets)?;
        ops.push(FpMatrix::from_columns(f, d, &coords));
    }
    let mut unit = vec![0u32; d];
    unit[0] = 1;
    let vars: Vec<Vec<u32>> = ops.iter().map(|g| g.column(0)).collect();
    ArtinianLocalAlgebra::from_regular_representation(f, &unit, &ops, &vars)
}

/// Splits a Gorenstein ring as `S # T` with `lo(S) = lo(R)` and `lo(T) = 2`
/// when `m² = x·m` for some `x` and `μ(m²) < edim R`.
pub fn decompose_connected_sum(r: &ArtinianLocalAlgebra, search: &ReductionSearch) -> Result<Decomposition> {
    if !r.is_gorenstein() {
        return Ok(Decomposition::NotSplit(format!("not Gorenstein (socle dimension {})", r.socle_dim())));
    }
    if r.loewy_length() <= 2 {
        return Ok(Decomposition::NotSplit(format!("Loewy length {} <= 2: terminal factor", r.loewy_length())));
    }
    let n = r.edim();
    let mu2 = r.hilbert_function()[2];
    if mu2 >= n {
        return Ok(Decomposition::NotSplit(format!(
            "mu(m^2) = {mu2} {} edim = {n}",
            if mu2 == n { "equals" } else { "exceeds" }
        )));
    }
    let x1 = match r.find_principal_reduction(search) {
        Ok(x) => x,
        Err(Error::ReductionNotFound { reason, .. }) => {
            return Ok(Decomposition::NotSplit(format!("no x with m^2 = x m: {reason}")))
        }
        Err(e) => return Err(e),
    };
    let witness = adjust_generators(r, &x1)?;
    let m = witness.split_index;
    let xs = &witness.adjusted_generators;

    let s_span = r.ideal_closure(&xs[..m]).vectors().to_vec();
    let s = subalgebra(r, &s_span, &xs[..m])?;
    let mut t_span: Vec<Vec<u32>> = xs[m..].to_vec();
    t_span.push(witness.socle_generator.clone());
    let t = subalgebra(r, &t_span, &xs[m..])?;

    let fail = |what: String| Err(Error::Verification(format!("decomposition check failed: {what}")));
    if s.edim() != m || t.edim() != n - m {
        return fail(format!("edim(S) = {}, edim(T) = {}", s.edim(), t.edim()));
    }
    if s.loewy_length() != r.loewy_length() || t.loewy_length() != 2 {
        return fail(format!("lo(S) = {}, lo(T) = {}", s.loewy_length(), t.loewy_length()));
    }
    if !s.is_gorenstein() || !t.is_gorenstein() {
        return fail("factors are not Gorenstein".into());
    }
    if r.length() + 2 != s.length() + t.length() {
        return fail(format!("lengths {} != {} + {} - 2", r.length(), s.length(), t.length()));
    }
    let (sum, _, _) = connected_sum(&s, &t)?;
    if sum.hilbert_function() != r.hilbert_function() {
        return fail(format!("S # T has Hilbert function {:?}", sum.hilbert_function()));
    }
    Ok(Decomposition::Split(Box::new(ConnectedSumDecomposition { s, t, witness })))
}

/// Repeatedly splits off `T`-factors. Returns the `T`-factors in the order
/// they were found followed by the final indecomposed factor.
pub fn decompose_fully(r: &ArtinianLocalAlgebra, search: &ReductionSearch) -> Result<Vec<ArtinianLocalAlgebra>> {
    let mut factors = Vec::new();
    let mut current = r.clone();
    loop {
        match decompose_connected_sum(&current, search)? {
            Decomposition::Split(d) => {
                factors.push(d.t);
                current = d.s;
            }
            Decomposition::NotSplit(_) => {
                factors.push(current);
                return Ok(factors);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualpoly::{sum_disjoint, DualPolynomial};
    use crate::linalg::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn dual(n: usize, f: &str) -> ArtinianLocalAlgebra {
        ArtinianLocalAlgebra::from_inverse_system_text(k(), n, &[f]).unwrap()
    }

    fn trunc(power: u32) -> ArtinianLocalAlgebra {
        ArtinianLocalAlgebra::from_ideal(k(), 1, &[&format!("x1^{power}")], 12).unwrap()
    }

    #[test]
    fn fibre_products() {
        let p = fibre_product(&trunc(2), &trunc(2)).unwrap();
        assert_eq!((p.length(), p.hilbert_function()), (3, &[1usize, 2][..]));
        assert_eq!(p.socle_dim(), 2);
        let p = fibre_product(&trunc(3), &trunc(2)).unwrap();
        assert_eq!((p.length(), p.hilbert_function()), (4, &[1usize, 2, 1][..]));
        assert!(p.mul(&p.generator(0), &p.generator(1)).iter().all(|&x| x == 0));
        assert_eq!(p.edim(), 2);
        let other = ArtinianLocalAlgebra::from_ideal(PrimeField::new(7).unwrap(), 1, &["x1^2"], 5).unwrap();
        assert!(fibre_product(&trunc(2), &other).is_err());
    }

    #[test]
    fn connected_sums() {
        let (c, _, _) = connected_sum(&trunc(3), &trunc(3)).unwrap();
        assert_eq!((c.length(), c.hilbert_function()), (4, &[1usize, 2, 1][..]));
        assert_eq!(c.hilbert_function(), dual(2, "Y1^2 + Y2^2").hilbert_function());
        assert!(c.is_gorenstein());

        let (c, _, _) = connected_sum(&dual(1, "Y1^3"), &dual(2, "Y1^2 + Y2^2")).unwrap();
        assert_eq!(c.hilbert_function(), dual(3, "Y1^3 + Y2^2 + Y3^2").hilbert_function());

        let bad = ArtinianLocalAlgebra::from_ideal(k(), 2, &["x1^2", "x1*x2", "x2^2"], 10).unwrap();
        assert_eq!(connected_sum(&trunc(3), &bad).unwrap_err(), Error::NotGorenstein(2));
        assert!(connected_sum(&trunc(3), &trunc(2)).is_err());
    }

    #[test]
    fn connected_sum_matches_sum_of_dual_generators() {
        let f = DualPolynomial::parse(k(), "Y1^2*Y2", 2, None).unwrap();
        let g = DualPolynomial::parse(k(), "Y1^3", 1, None).unwrap().embed(2, 3).unwrap();
        let sum = sum_disjoint(&f, &g).unwrap();
        let whole = ArtinianLocalAlgebra::from_inverse_system(k(), &[sum]).unwrap();
        let (c, _, _) =
            connected_sum(&ArtinianLocalAlgebra::from_inverse_system(k(), &[f]).unwrap(), &trunc(4)).unwrap();
        assert_eq!(c.hilbert_function(), whole.hilbert_function());
        assert_eq!(c.length(), 6 + 4 - 2);
    }

    #[test]
    fn adjustment_examples() {
        let r = dual(3, "Y1^2*Y2 + Y3^2");
        let x = r.find_principal_reduction(&ReductionSearch::default()).unwrap();
        let w = adjust_generators(&r, &x).unwrap();
        assert_eq!(w.split_index, 2);
        assert_eq!(w.claims, [true; 3]);

        let r = dual(3, "Y1^3 + Y2^2 + Y3^2");
        let x = r.find_principal_reduction(&ReductionSearch::default()).unwrap();
        let w = adjust_generators(&r, &x).unwrap();
        assert_eq!(w.split_index, 1);

        let r = dual(1, "Y1^3");
        assert!(adjust_generators(&r, &r.generator(0)).is_err());
    }

    #[test]
    fn adjustment_on_a_skewed_presentation() {
        // same ring type, but generators mixed so that stages (b) and (c) have work to do
        let r = dual(3, "Y1^2*Y2 + Y1*Y3^2 + Y3^2 + Y2*Y3");
        if r.loewy_length() >= 3 && r.hilbert_function()[2] < r.edim() {
            if let Ok(x) = r.find_principal_reduction(&ReductionSearch::default()) {
                let w = adjust_generators(&r, &x).unwrap();
                assert_eq!(w.claims, [true; 3]);
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let r = dual(3, "Y1^3 + Y2^2 + Y3^2");
        let Decomposition::Split(d) = decompose_connected_sum(&r, &ReductionSearch::default()).unwrap() else {
            panic!("expected a splitting")
        };
        assert_eq!(d.s.hilbert_function(), &[1, 1, 1, 1]);
        assert_eq!(d.t.hilbert_function(), &[1, 2, 1]);

        let r = dual(3, "Y1^2*Y2 + Y3^2");
        let Decomposition::Split(d) = decompose_connected_sum(&r, &ReductionSearch::default()).unwrap() else {
            panic!("expected a splitting")
        };
        assert_eq!((d.s.length(), d.s.hilbert_function()), (6, &[1usize, 2, 2, 1][..]));
        assert_eq!((d.t.length(), d.t.edim(), d.t.loewy_length()), (3, 1, 2));

        let r = trunc(4);
        assert!(matches!(
            decompose_connected_sum(&r, &ReductionSearch::default()).unwrap(),
            Decomposition::NotSplit(_)
        ));
        let factors = decompose_fully(&dual(3, "Y1^3 + Y2^2 + Y3^2"), &ReductionSearch::default()).unwrap();
        assert_eq!(factors.len(), 2);
    }

    #[test]
    fn truncations_of_a_decomposed_ring_are_fibre_products() {
        let r = dual(3, "Y1^4 + Y2^2 + Y3^2");
        let Decomposition::Split(d) = decompose_connected_sum(&r, &ReductionSearch::default()).unwrap() else {
            panic!("expected a splitting")
        };
        for i in 2..=r.loewy_length() {
            let lhs = r.quotient_by_power(i).unwrap();
            // the socle of T is identified with the socle of S, which lies in m^i
            let si = d.s.quotient_by_power(i).unwrap();
            let ti = d.t.quotient_by_power(2).unwrap();
            let rhs = fibre_product(&si, &ti).unwrap();
            assert_eq!(lhs.hilbert_function(), rhs.hilbert_function(), "i = {i}");
        }
    }
}
