//! Exact power series and rational functions over the integers, and the
//! closed-form Poincaré series predictions they are compared against.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{ArtinianLocalAlgebra, Classification};
use crate::error::{Error, Result};
use crate::koszul::KoszulHomologyProfile;

/// Polynomial in `t` with integer coefficients, lowest degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly(c)
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize) -> Self {
        Self::from_i64(&[1, 1]).pow(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn scale(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, n: usize) -> IntPoly {
        (0..n).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        IntPoly(self.0.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of `self` by `d` (`d` nonzero).
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().unwrap();
        let lead = d.0[dd].clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.0[rd].clone();
            // r = lead * r - factor * t^(rd-dd) * d
            let shifted = IntPoly::monomial(rd - dd).mul(d).scale(&factor);
            r = r.scale(&lead).sub(&shifted);
        }
        r
    }

    /// Greatest common divisor in `Z[t]`, with positive leading coefficient.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&content).normalize_sign()
    }

    fn normalize_sign(&self) -> IntPoly {
        match self.0.last() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lead = &d.0[dd];
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (quo, rem) = r.0[rd].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            q[rd - dd] = quo.clone();
            r = r.sub(&IntPoly::monomial(rd - dd).mul(d).scale(&quo));
        }
        Some(IntPoly::new(q))
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.to_i64()).collect()
    }
}

/// Truncated power series `c_0 + c_1 t + ... + c_D t^D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeriesZ {
    coeffs: Vec<BigInt>,
}

impl PowerSeriesZ {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        PowerSeriesZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_usize(coeffs: &[usize]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_poly(p: &IntPoly, degree: usize) -> Self {
        Self::new((0..=degree).map(|i| p.coeff(i)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(self.coeffs[..=degree.min(self.degree())].to_vec())
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        Self::new((0..=d).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        Self::new((0..=d).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        let mut c = vec![BigInt::zero(); d + 1];
        for i in 0..=d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=d - i {
                c[i + j] += &self.coeffs[i] * &o.coeffs[j];
            }
        }
        Self::new(c)
    }

    /// Multiplicative inverse; requires constant term ±1.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::Series(format!("constant term {c0} is not a unit")));
        }
        let d = self.degree();
        let mut inv: Vec<BigInt> = vec![BigInt::zero(); d + 1];
        inv[0] = c0.clone();
        for k in 1..=d {
            let mut s = BigInt::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &inv[k - i];
            }
            inv[k] = -(s * c0);
        }
        Ok(Self::new(inv))
    }

    /// `true` when every coefficient of `self` is at most the corresponding
    /// coefficient of `o` (up to the common degree).
    pub fn termwise_le(&self, o: &Self) -> bool {
        self.coeffs.iter().zip(&o.coeffs).all(|(a, b)| a <= b)
    }

    /// First degree at which the two series differ.
    pub fn first_difference(&self, o: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&o.coeffs).position(|(a, b)| a != b)
    }
}

impl Serialize for PowerSeriesZ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coeffs(&self.coeffs, s)
    }
}

/// Coefficients as JSON integers when they fit in 64 bits, decimal strings otherwise.
fn serialize_coeffs<S: Serializer>(c: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let values: Vec<serde_json::Value> = c
        .iter()
        .map(|x| match x.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(x.to_string()),
        })
        .collect();
    values.serialize(s)
}

struct Coeffs<'a>(&'a [BigInt]);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coeffs(self.0, s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coeffs(&self.0, s)
    }
}

/// `numerator / denominator` with the denominator's constant term ±1, so
/// that the quotient expands as an integer power series.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RationalSeries", 2)?;
        st.serialize_field("numerator", &Coeffs(&self.numerator.0))?;
        st.serialize_field("denominator", &Coeffs(&self.denominator.0))?;
        st.end()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Equality as rational functions.
impl PartialEq for RationalSeries {
    fn eq(&self, o: &Self) -> bool {
        self.numerator.mul(&o.denominator) == o.numerator.mul(&self.denominator)
    }
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        let c0 = denominator.coeff(0);
        if c0.abs() != BigInt::one() {
            return Err(Error::Series(format!("denominator {denominator} has constant term {c0}, expected ±1")));
        }
        if c0.is_negative() {
            return Ok(RationalSeries { numerator: numerator.neg(), denominator: denominator.neg() });
        }
        Ok(RationalSeries { numerator, denominator })
    }

    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(IntPoly::from_i64(numerator), IntPoly::from_i64(denominator))
    }

    pub fn polynomial(p: IntPoly) -> Self {
        RationalSeries { numerator: p, denominator: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::polynomial(IntPoly::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Cancels the common factor of numerator and denominator.
    pub fn reduced(&self) -> Self {
        let g = self.numerator.gcd(&self.denominator);
        if g.degree().unwrap_or(0) == 0 && g.coeff(0).abs() == BigInt::one() {
            return self.clone();
        }
        let n = self.numerator.div_exact(&g).expect("gcd divides the numerator");
        let d = self.denominator.div_exact(&g).expect("gcd divides the denominator");
        // the constant term of g divides the unit constant term of the denominator
        Self::new(n, d).expect("reduced denominator keeps a unit constant term")
    }

    pub fn expand(&self, degree: usize) -> PowerSeriesZ {
        let inv =
            PowerSeriesZ::from_poly(&self.denominator, degree).inverse().expect("denominator constant term is ±1");
        PowerSeriesZ::from_poly(&self.numerator, degree).mul(&inv)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.numerator.mul(&o.denominator).add(&o.numerator.mul(&self.denominator));
        Self::new(n, self.denominator.mul(&o.denominator)).unwrap().reduced()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&Self { numerator: o.numerator.neg(), denominator: o.denominator.clone() })
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.numerator.mul(&o.numerator), self.denominator.mul(&o.denominator)).unwrap().reduced()
    }

    /// `1 / self`; needs a numerator with constant term ±1.
    pub fn recip(&self) -> Result<Self> {
        Ok(Self::new(self.denominator.clone(), self.numerator.clone())?.reduced())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }
}

/// `(1+t)^n / (1 − Σ_{i≥1} dim H_i t^{i+1})`, Serre's upper bound for `P^R_k`.
pub fn golod_series(n: usize, profile: &KoszulHomologyProfile) -> RationalSeries {
    let mut den = vec![BigInt::one(), BigInt::zero()];
    for (i, &h) in profile.dims.iter().enumerate().skip(1) {
        den.push(-BigInt::from(h));
        debug_assert_eq!(den.len(), i + 2);
    }
    RationalSeries::new(IntPoly::one_plus_t_pow(n), IntPoly::new(den)).unwrap()
}

/// `((1+t)^n, d_R)` with `d_R = 1 − t(P^Q_R − 1) + t^{n+1}(1+t)` and
/// `P^Q_R = Σ dim H_i t^i`, for Gorenstein rings of embedding dimension ≥ 2.
pub fn gorenstein_denominator(n: usize, profile: &KoszulHomologyProfile) -> Result<RationalSeries> {
    if n < 2 {
        return Err(Error::Precondition(format!("embedding dimension {n} < 2")));
    }
    if profile.dims.len() != n + 1 {
        return Err(Error::DimensionMismatch("Koszul profile length".into()));
    }
    if profile.dims[n] != 1 {
        return Err(Error::NotGorenstein(profile.dims[n]));
    }
    let pq_minus_one = IntPoly::new(
        profile.dims.iter().enumerate().map(|(i, &h)| if i == 0 { BigInt::zero() } else { BigInt::from(h) }).collect(),
    );
    let d = IntPoly::one()
        .sub(&IntPoly::monomial(1).mul(&pq_minus_one))
        .add(&IntPoly::monomial(n + 1).mul(&IntPoly::one_plus_t_pow(1)));
    RationalSeries::new(IntPoly::one_plus_t_pow(n), d)
}

/// `((1+t)^n, 1 − r t² − r t³ + t⁵)` for Gorenstein rings of codepth ≤ 3
/// that are not complete intersections; `r` is the number of relations.
pub fn codepth3_denominator(n: usize, r: usize) -> Result<RationalSeries> {
    if n > 3 {
        return Err(Error::Precondition(format!("codepth {n} > 3")));
    }
    if r <= n {
        return Err(Error::Precondition(format!("{r} relations in {n} variables: complete intersection")));
    }
    let r = r as i64;
    RationalSeries::new(IntPoly::one_plus_t_pow(n), IntPoly::from_i64(&[1, 0, -r, -r, 0, 1]))
}

/// Prediction for Gorenstein rings with `μ(m²) ≤ 2`: the series for `k`
/// and the common denominator for all modules.
pub fn small_square_prediction(n: usize) -> Result<(RationalSeries, IntPoly)> {
    match n {
        0 => Err(Error::Precondition("embedding dimension 0".into())),
        1 => {
            let d = IntPoly::from_i64(&[1, -1]);
            Ok((RationalSeries::new(IntPoly::one(), d.clone())?, d))
        }
        _ => {
            let q = IntPoly::from_i64(&[1, -(n as i64), 1]);
            Ok((RationalSeries::new(IntPoly::one(), q.clone())?, IntPoly::one_plus_t_pow(n).mul(&q)))
        }
    }
}

/// Prediction for stretched Artinian rings of embedding dimension `n` and type `r`.
pub fn stretched_artinian_prediction(n: usize, r: usize) -> Result<(RationalSeries, IntPoly)> {
    if r > n || n == 0 {
        return Err(Error::Precondition(format!("type {r} with embedding dimension {n}")));
    }
    let n_i = n as i64;
    if r == n {
        let d = IntPoly::from_i64(&[1, -n_i]);
        return Ok((RationalSeries::new(IntPoly::one(), d.clone())?, d));
    }
    let q = IntPoly::from_i64(&[1, -n_i, 1]);
    Ok((RationalSeries::new(IntPoly::one(), q.clone())?, IntPoly::one_plus_t_pow(n - r + 1).mul(&q)))
}

fn check_unit_constant(p: &RationalSeries) -> Result<()> {
    if p.numerator.coeff(0) != p.denominator.coeff(0) {
        return Err(Error::Series(format!("series {p} does not start with 1")));
    }
    Ok(())
}

/// `1/P_R = 1/P_S + 1/P_T − 1` for `R = S ×_k T`.
pub fn fibre_product_series(ps: &RationalSeries, pt: &RationalSeries) -> Result<RationalSeries> {
    check_unit_constant(ps)?;
    check_unit_constant(pt)?;
    ps.recip()?.add(&pt.recip()?).sub(&RationalSeries::one()).recip()
}

/// `P^R_M = P^S_M · P^R_k / P^S_k` for an `S`-module `M` over `R = S ×_k T`.
pub fn fibre_product_module_series(
    ps_m: &RationalSeries,
    ps_k: &RationalSeries,
    pr_k: &RationalSeries,
) -> Result<RationalSeries> {
    check_unit_constant(ps_k)?;
    ps_m.mul(pr_k).div(ps_k)
}

/// `P / (1 − t² P)`, the series of `R/soc R` from that of `R`.
pub fn socle_quotient_series(p: &RationalSeries) -> Result<RationalSeries> {
    let t2p = RationalSeries::polynomial(IntPoly::monomial(2)).mul(p);
    p.div(&RationalSeries::one().sub(&t2p))
}

/// `1/(1 − nt)`.
pub fn quotient_power_prediction(n: usize) -> RationalSeries {
    RationalSeries::new(IntPoly::one(), IntPoly::from_i64(&[1, -(n as i64)])).unwrap()
}

/// `P / (1 + t)`.
pub fn deformation_divide(p: &RationalSeries) -> RationalSeries {
    p.mul(&RationalSeries::new(IntPoly::one(), IntPoly::one_plus_t_pow(1)).unwrap())
}

/// Smallest `g ≤ g_max` such that the coefficients of `d · P_hat` vanish in
/// degrees `g+1 ..= D`, where `D` is the truncation degree of `P_hat`.
///
/// Coefficient `k` of the product only involves `P_hat` up to degree `k`, so
/// every coefficient up to `D` is exact. `g` is searched below `D` so that at
/// least one vanishing coefficient is witnessed.
pub fn denominator_divisibility_check(d: &IntPoly, p_hat: &PowerSeriesZ, g_max: usize) -> Result<Option<usize>> {
    let big_d = p_hat.degree();
    let deg_d = d.degree().unwrap_or(0);
    if big_d <= deg_d {
        return Err(Error::Series(format!(
            "truncation degree {big_d} does not exceed the degree {deg_d} of the denominator"
        )));
    }
    let prod = PowerSeriesZ::from_poly(d, big_d).mul(p_hat);
    let last_nonzero = prod.coeffs().iter().rposition(|c| !c.is_zero());
    let g = last_nonzero.unwrap_or(0);
    Ok((g <= g_max.min(big_d - 1)).then_some(g))
}

/// Default search window for [`denominator_divisibility_check`].
pub fn default_g_max(d: &IntPoly, r: &ArtinianLocalAlgebra) -> usize {
    d.degree().unwrap_or(0) + r.loewy_length() + r.edim()
}

/// Labels [`predict`] can emit, in dispatch order.
pub const PREDICTION_LABELS: &[&str] =
    &["gorenstein-mu2-le-2", "stretched", "almost-stretched-gorenstein", "codepth3-gorenstein", "socle-quotient-golod"];

/// A closed-form prediction for `P^R_k` with the common denominator it
/// implies for `P^R_M`.
#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub label: String,
    pub series: RationalSeries,
    pub module_denominator: IntPoly,
}

/// Every closed form whose hypotheses the ring satisfies.
pub fn predict(
    r: &ArtinianLocalAlgebra,
    classification: &Classification,
    profile: Option<&KoszulHomologyProfile>,
) -> Vec<Prediction> {
    let n = r.edim();
    let s = r.loewy_length();
    let mut out = Vec::new();
    let mut push = |label: &str, (series, den): (RationalSeries, IntPoly)| {
        out.push(Prediction { label: label.to_string(), series, module_denominator: den });
    };
    if n == 0 {
        return out;
    }
    let gor = classification.is_gorenstein;
    if gor && classification.mu_m_squared <= 2 {
        push("gorenstein-mu2-le-2", small_square_prediction(n).unwrap());
    }
    if classification.is_stretched && classification.socle_type <= n {
        push("stretched", stretched_artinian_prediction(n, classification.socle_type).unwrap());
    }
    if gor && classification.is_almost_stretched && n >= 2 {
        let (p, d) = small_square_prediction(n).unwrap();
        push("almost-stretched-gorenstein", (p, d));
    }
    if let Some(profile) = profile {
        let rel = profile.dims.get(1).copied().unwrap_or(0);
        let codepth3 = gor && n <= 3 && rel > n;
        if codepth3 {
            let q = codepth3_denominator(n, rel).unwrap();
            let d = q.denominator().clone();
            push("codepth3-gorenstein", (q, d));
        }
        let compressed = classification.is_compressed && s >= 2 && s != 3;
        if gor && n >= 2 && (codepth3 || compressed) {
            if let Ok(q) = gorenstein_denominator(n, profile) {
                let d = q.denominator().clone();
                push("socle-quotient-golod", (q, d));
            }
        }
    }
    out
}

/// Pairs of predictions that disagree as rational functions.
pub fn cross_check(predictions: &[Prediction]) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    for (i, a) in predictions.iter().enumerate() {
        for b in &predictions[i + 1..] {
            if a.series != b.series {
                bad.push((a.label.clone(), b.label.clone()));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(n: &[i64], d: &[i64]) -> RationalSeries {
        RationalSeries::from_i64(n, d).unwrap()
    }

    fn ints(s: &PowerSeriesZ) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn profile(dims: &[usize]) -> KoszulHomologyProfile {
        KoszulHomologyProfile { dims: dims.to_vec(), cycle_representatives: vec![] }
    }

    #[test]
    fn expansions() {
        assert_eq!(ints(&rs(&[1], &[1, -1]).expand(4)), vec![1; 5]);
        assert_eq!(ints(&rs(&[1], &[1, -2, 1]).expand(4)), vec![1, 2, 3, 4, 5]);
        assert_eq!(ints(&rs(&[1], &[1, -3, 1]).expand(6)), vec![1, 3, 8, 21, 55, 144, 377]);
        assert!(RationalSeries::from_i64(&[1], &[2, 1]).is_err());
        assert_eq!(ints(&rs(&[1], &[-1, 1]).expand(2)), vec![-1, -1, -1]);
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let c = rs(&[1], &[1, -3, 1]).expand(60);
        assert!(c.coeffs()[60] > BigInt::from(u64::MAX));
    }

    #[test]
    fn gcd_and_reduction() {
        let a = IntPoly::from_i64(&[1, 1]).mul(&IntPoly::from_i64(&[1, -2]));
        let b = IntPoly::from_i64(&[1, 1]).mul(&IntPoly::from_i64(&[1, 0, 3]));
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[1, 1]));
        let q = RationalSeries::new(IntPoly::one_plus_t_pow(2), IntPoly::from_i64(&[1, 0, -3, -2])).unwrap();
        let red = q.reduced();
        assert_eq!(red.numerator(), &IntPoly::one());
        assert_eq!(red.denominator(), &IntPoly::from_i64(&[1, -2]));
    }

    #[test]
    fn golod_series_examples() {
        let g = golod_series(2, &profile(&[1, 3, 2]));
        assert_eq!(g, rs(&[1], &[1, -2]));
        assert_eq!(golod_series(1, &profile(&[1, 1])), rs(&[1], &[1, -1]));
        let g = golod_series(3, &profile(&[1, 5, 5, 1]));
        assert_eq!(g.denominator(), &IntPoly::from_i64(&[1, 0, -5, -5, -1]));
    }

    #[test]
    fn gorenstein_denominator_examples() {
        let q = gorenstein_denominator(3, &profile(&[1, 5, 5, 1])).unwrap();
        assert_eq!(q.denominator(), &IntPoly::from_i64(&[1, 0, -5, -5, 0, 1]));
        assert_eq!(q.denominator(), codepth3_denominator(3, 5).unwrap().denominator());
        let q = gorenstein_denominator(2, &profile(&[1, 2, 1])).unwrap();
        assert_eq!(q.denominator(), &IntPoly::from_i64(&[1, 0, -1]).pow(2));
        assert_eq!(gorenstein_denominator(2, &profile(&[1, 3, 2])).unwrap_err(), Error::NotGorenstein(2));
        assert!(codepth3_denominator(4, 9).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(ints(&small_square_prediction(2).unwrap().0.expand(3)), vec![1, 2, 3, 4]);
        assert_eq!(ints(&small_square_prediction(3).unwrap().0.expand(3)), vec![1, 3, 8, 21]);
        assert_eq!(small_square_prediction(1).unwrap().0, rs(&[1], &[1, -1]));
        assert!(small_square_prediction(0).is_err());
        assert_eq!(stretched_artinian_prediction(2, 2).unwrap().0, rs(&[1], &[1, -2]));
        assert_eq!(stretched_artinian_prediction(3, 1).unwrap().0, rs(&[1], &[1, -3, 1]));
        assert!(stretched_artinian_prediction(2, 3).is_err());
        assert_eq!(ints(&quotient_power_prediction(3).expand(3)), vec![1, 3, 9, 27]);
        assert_eq!(quotient_power_prediction(1), rs(&[1], &[1, -1]));
    }

    #[test]
    fn fibre_product_series_examples() {
        let geo = rs(&[1], &[1, -1]);
        assert_eq!(fibre_product_series(&geo, &geo).unwrap(), rs(&[1], &[1, -2]));
        assert_eq!(fibre_product_series(&geo, &RationalSeries::one()).unwrap(), geo);
        assert_eq!(fibre_product_series(&geo, &rs(&[1], &[1, -2])).unwrap(), rs(&[1], &[1, -3]));
        assert!(fibre_product_series(&geo, &rs(&[0, 1], &[1])).is_err());
        let m = fibre_product_module_series(&geo, &geo, &rs(&[1], &[1, -2])).unwrap();
        assert_eq!(m, rs(&[1], &[1, -2]));
    }

    #[test]
    fn socle_quotient_and_deformation() {
        assert_eq!(socle_quotient_series(&rs(&[1], &[1, -2, 1])).unwrap(), rs(&[1], &[1, -2]));
        for n in 2..8 {
            let p = small_square_prediction(n).unwrap().0;
            assert_eq!(socle_quotient_series(&p).unwrap(), quotient_power_prediction(n));
        }
        assert_eq!(socle_quotient_series(&RationalSeries::one()).unwrap(), rs(&[1], &[1, 0, -1]));
        let p = RationalSeries::new(IntPoly::one_plus_t_pow(2), IntPoly::from_i64(&[1, -2])).unwrap();
        let q = deformation_divide(&p);
        assert_eq!(q, RationalSeries::new(IntPoly::one_plus_t_pow(1), IntPoly::from_i64(&[1, -2])).unwrap());
        assert_eq!(deformation_divide(&rs(&[1], &[1, -1])), rs(&[1], &[1, 0, -1]));
    }

    #[test]
    fn divisibility_examples() {
        let p = rs(&[1], &[1, -2, 1]).expand(10);
        assert_eq!(denominator_divisibility_check(&IntPoly::from_i64(&[1, -2, 1]), &p, 9).unwrap(), Some(0));
        let p = rs(&[1], &[1, -2]).expand(10);
        assert_eq!(denominator_divisibility_check(&IntPoly::from_i64(&[1, -1]), &p, 9).unwrap(), None);
        let p = rs(&[1, 1, 1], &[1, -2]).expand(10);
        assert_eq!(denominator_divisibility_check(&IntPoly::from_i64(&[1, -2]), &p, 9).unwrap(), Some(2));
        assert_eq!(denominator_divisibility_check(&IntPoly::from_i64(&[1, -2]), &p, 1).unwrap(), None);
        assert!(denominator_divisibility_check(&IntPoly::from_i64(&[1, -2]), &p.truncate(1), 9).is_err());
    }

    #[test]
    fn json_rendering() {
        let q = rs(&[1], &[1, -3, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"numerator":[1],"denominator":[1,-3,1]}"#);
    }

    fn labels_for(n: usize, dual: &[&str]) -> Vec<Prediction> {
        let f = crate::linalg::PrimeField::new(101).unwrap();
        let r = ArtinianLocalAlgebra::from_inverse_system_text(f, n, dual).unwrap();
        let profile = crate::koszul::KoszulComplex::new(&r).unwrap().homology_profile();
        let class = r.classify(Some(&profile));
        let preds = predict(&r, &class, Some(&profile));
        assert!(cross_check(&preds).is_empty());
        preds
    }

    #[test]
    fn dispatch() {
        let names = |p: &[Prediction]| p.iter().map(|x| x.label.clone()).collect::<Vec<_>>();
        let p = labels_for(3, &["Y1^2*Y2 + Y3^2"]);
        assert_eq!(
            names(&p),
            ["gorenstein-mu2-le-2", "almost-stretched-gorenstein", "codepth3-gorenstein", "socle-quotient-golod"]
        );
        assert_eq!(p[0].series, rs(&[1], &[1, -3, 1]));
        let p = labels_for(3, &["Y1^2 + Y2^2 + Y3^2"]);
        assert!(names(&p).contains(&"socle-quotient-golod".to_string()));
        assert!(names(&p).contains(&"codepth3-gorenstein".to_string()));
        let q = p.iter().find(|x| x.label == "codepth3-gorenstein").unwrap();
        assert_eq!(q.series.denominator(), &IntPoly::from_i64(&[1, 0, -5, -5, 0, 1]));
        let p = labels_for(1, &["Y1^4"]);
        assert_eq!(names(&p), ["gorenstein-mu2-le-2", "stretched"]);
        assert_eq!(p[0].series, rs(&[1], &[1, -1]));
        // not Gorenstein, not stretched: nothing applies
        assert!(labels_for(2, &["Y1^3", "Y2^3"]).is_empty());
    }

    fn arb_series() -> impl Strategy<Value = RationalSeries> {
        (prop::collection::vec(-4i64..5, 1..4), prop::collection::vec(-4i64..5, 0..3)).prop_map(|(n, mut d)| {
            d.insert(0, 1);
            rs(&n, &d)
        })
    }

    fn arb_unit_series() -> impl Strategy<Value = RationalSeries> {
        (prop::collection::vec(-4i64..5, 0..3), prop::collection::vec(-4i64..5, 0..3)).prop_map(|(mut n, mut d)| {
            n.insert(0, 1);
            d.insert(0, 1);
            rs(&n, &d)
        })
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(a.mul(&b).expand(10), a.expand(10).mul(&b.expand(10)));
            prop_assert_eq!(a.add(&b).expand(10), a.expand(10).add(&b.expand(10)));
        }

        #[test]
        fn fibre_product_series_is_commutative_and_associative(
            a in arb_unit_series(), b in arb_unit_series(), c in arb_unit_series(),
        ) {
            let ab = fibre_product_series(&a, &b).unwrap();
            prop_assert_eq!(&ab, &fibre_product_series(&b, &a).unwrap());
            let left = fibre_product_series(&ab, &c);
            let right = fibre_product_series(&b, &c).and_then(|bc| fibre_product_series(&a, &bc));
            if let (Ok(l), Ok(r)) = (left, right) {
                prop_assert_eq!(l, r);
            }
            prop_assert_eq!(fibre_product_series(&a, &RationalSeries::one()).unwrap(), a);
        }

        #[test]
        fn gorenstein_and_codepth3_denominators_agree(r in 4usize..30) {
            let p = profile(&[1, r, r, 1]);
            let a = gorenstein_denominator(3, &p).unwrap();
            let b = codepth3_denominator(3, r).unwrap();
            prop_assert_eq!(a.denominator(), b.denominator());
        }

        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-5i64..6, 1..5), b in prop::collection::vec(-5i64..6, 1..5)) {
            let (a, b) = (IntPoly::from_i64(&a), IntPoly::from_i64(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
        }
    }
}
