//! Sparse multivariate polynomials over `F_p` and the contraction action of
//! `k[X_1..X_n]` on the dual ring `k[Y_1..Y_n]`.
//!
//! `X_i` acts on a monomial by lowering the exponent of `Y_i` by one and kills
//! monomials that do not contain `Y_i`. No factorial or binomial factors are
//! involved, so the action is defined the same way in every characteristic.
//!
//! The same type is used for ideal generators; only the interpretation of the
//! variables differs.
//!
//! Text grammar: terms joined by `+`/`-`; a term is a product of factors
//! separated by `*`, each factor an integer coefficient or a variable with an
//! optional `^exponent`. Whitespace is ignored. Variables are either one of the
//! supplied names or `<letters><index>` with a 1-based index.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, FpMatrix, PrimeField};

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct DualPolynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Exponent, u32>,
}

impl fmt::Debug for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("Y"))
    }
}

impl DualPolynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        DualPolynomial { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(vec![0; nvars], field.from_i64(c));
        p
    }

    pub fn monomial(field: PrimeField, exponent: Exponent, coeff: i64) -> Self {
        let mut p = Self::zero(field, exponent.len());
        p.add_term(exponent, field.from_i64(coeff));
        p
    }

    pub fn from_terms(field: PrimeField, nvars: usize, terms: &[(Exponent, i64)]) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in {} variables",
                    e.len(),
                    nvars
                )));
            }
            p.add_term(e.clone(), field.from_i64(*c));
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: u32) {
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, u32)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: &[u32]) -> u32 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    pub fn add(&self, other: &DualPolynomial) -> Result<DualPolynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: u32) -> DualPolynomial {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), self.field.mul(c, s));
        }
        out
    }

    pub fn sub(&self, other: &DualPolynomial) -> Result<DualPolynomial> {
        self.add(&other.scale(self.field.neg(1)))
    }

    /// Ordinary product `X^a * self`, as used for ideal generators.
    pub fn mul_monomial(&self, a: &[u32]) -> DualPolynomial {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            let shifted: Exponent = e.iter().zip(a).map(|(x, y)| x + y).collect();
            out.add_term(shifted, c);
        }
        out
    }

    /// Contraction by `X_var` (0-based variable index).
    pub fn contract(&self, var: usize) -> Result<DualPolynomial> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange { index: var, count: self.nvars });
        }
        let mut out = Self::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            if e[var] > 0 {
                let mut lowered = e.clone();
                lowered[var] -= 1;
                out.add_term(lowered, c);
            }
        }
        Ok(out)
    }

    /// Contraction by the monomial `X^a`.
    pub fn contract_monomial(&self, a: &[u32]) -> DualPolynomial {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            if e.iter().zip(a).all(|(x, y)| x >= y) {
                out.add_term(e.iter().zip(a).map(|(x, y)| x - y).collect(), c);
            }
        }
        out
    }

    /// Moves the variables of `self` to positions `offset..offset+nvars` of a
    /// polynomial ring in `total` variables.
    pub fn embed(&self, offset: usize, total: usize) -> Result<DualPolynomial> {
        if offset + self.nvars > total {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {} variables at offset {} among {}",
                self.nvars, offset, total
            )));
        }
        let mut out = Self::zero(self.field, total);
        for (e, &c) in &self.terms {
            let mut big = vec![0; total];
            big[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(big, c);
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &DualPolynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.modulus(), other.field.modulus()));
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        Ok(())
    }

    /// Parses the text grammar described in the module docs.
    pub fn parse(field: PrimeField, text: &str, nvars: usize, names: Option<&[String]>) -> Result<Self> {
        Parser { field, nvars, names, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
            .polynomial()
    }

    /// Renders in the text grammar with variables `<prefix>1, <prefix>2, ...`.
    pub fn to_text(&self, prefix: &str) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("{prefix}{i}")).collect();
        self.to_text_named(&names)
    }

    pub fn to_text_named(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest degree first
        let mut terms: Vec<(&Exponent, &u32)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, &c)) in terms.into_iter().enumerate() {
            let signed = self.field.centered(c);
            if k == 0 {
                if signed < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if signed < 0 { " - " } else { " + " });
            }
            let mag = signed.unsigned_abs();
            let mut factors = Vec::new();
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], a)),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

struct Parser<'a> {
    field: PrimeField,
    nvars: usize,
    names: Option<&'a [String]>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in \"{text}\"", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn polynomial(mut self) -> Result<DualPolynomial> {
        let mut poly = DualPolynomial::zero(self.field, self.nvars);
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut first = true;
        while self.pos < self.chars.len() {
            let mut sign = 1i64;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = -1;
                    self.pos += 1
                }
                _ if first => {}
                _ => return Err(self.err("expected '+' or '-'")),
            }
            first = false;
            let (e, c) = self.term()?;
            poly.add_term(e, self.field.from_i64(sign * c));
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Exponent, i64)> {
        let mut exponent = vec![0u32; self.nvars];
        let mut coeff = 1i64;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    coeff = self.field.from_i64(coeff) as i64 * (n % self.field.modulus() as u64) as i64
                        % self.field.modulus() as i64;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let var = self.variable()?;
                    let mut power = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        power = u32::try_from(self.integer()?).map_err(|_| self.err("exponent too large"))?;
                    }
                    exponent[var] += power;
                }
                _ => return Err(self.err("expected a coefficient or a variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((exponent, coeff))
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>().map_err(|_| self.err("invalid integer"))
    }

    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let ident: String = self.chars[start..self.pos].iter().collect();
        if let Some(names) = self.names {
            if let Some(i) = names.iter().position(|n| *n == ident) {
                return Ok(i);
            }
        }
        let digits_at = ident.find(|c: char| c.is_ascii_digit());
        if let Some(d) = digits_at {
            if d > 0 && ident[d..].chars().all(|c| c.is_ascii_digit()) {
                let idx: usize = ident[d..].parse().map_err(|_| self.err("invalid variable index"))?;
                if idx >= 1 && idx <= self.nvars {
                    return Ok(idx - 1);
                }
                return Err(Error::VariableOutOfRange { index: idx, count: self.nvars });
            }
        }
        Err(self.err(&format!("unknown variable '{ident}'")))
    }
}

/// The `F_p`-span of all iterated contractions of a list of dual polynomials.
#[derive(Clone, Debug)]
pub struct ContractionSpan {
    pub span_basis: Vec<DualPolynomial>,
    pub total_dimension: usize,
    /// `degree_profile[d]` = dim(W ∩ T_{≤d}) − dim(W ∩ T_{≤d−1}).
    pub degree_profile: Vec<usize>,
}

/// Index of all monomials dividing some term of the given polynomials.
pub(crate) struct MonomialIndex {
    pub monomials: Vec<Exponent>,
    pub position: BTreeMap<Exponent, usize>,
}

impl MonomialIndex {
    pub(crate) fn divisors_of(polys: &[DualPolynomial]) -> Self {
        let mut set = BTreeSet::new();
        for p in polys {
            for e in p.terms.keys() {
                collect_divisors(e, &mut set);
            }
        }
        let monomials: Vec<Exponent> = set.into_iter().collect();
        let position = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        MonomialIndex { monomials, position }
    }

    pub(crate) fn len(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn vector(&self, p: &DualPolynomial) -> Vec<u32> {
        let mut v = vec![0u32; self.monomials.len()];
        for (e, &c) in &p.terms {
            v[self.position[e]] = c;
        }
        v
    }
}

fn collect_divisors(e: &[u32], out: &mut BTreeSet<Exponent>) {
    let mut cur = vec![0u32; e.len()];
    loop {
        out.insert(cur.clone());
        let mut i = 0;
        loop {
            if i == e.len() {
                return;
            }
            if cur[i] < e[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Breadth-first closure of the generators under the contractions
/// `X_1, ..., X_n`, eliminating incrementally against the accumulated basis.
pub fn contraction_span(generators: &[DualPolynomial]) -> Result<ContractionSpan> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let (field, n) = (first.field, first.nvars);
    for g in generators {
        if g.nvars != n || g.field != field {
            return Err(Error::DimensionMismatch("generators must share the field and the variable count".into()));
        }
    }
    let index = MonomialIndex::divisors_of(generators);
    let mut echelon = EchelonBasis::new(field, index.len());
    let mut basis = Vec::new();
    let mut queue: VecDeque<DualPolynomial> = VecDeque::new();
    for g in generators {
        if echelon.insert(&index.vector(g)) {
            basis.push(g.clone());
            queue.push_back(g.clone());
        }
    }
    while let Some(f) = queue.pop_front() {
        for var in 0..n {
            let c = f.contract(var)?;
            if c.is_zero() {
                continue;
            }
            if echelon.insert(&index.vector(&c)) {
                basis.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    let total = basis.len();
    let max_deg = basis.iter().filter_map(|b| b.degree()).max().unwrap_or(0) as usize;
    let columns: Vec<Vec<u32>> = basis.iter().map(|b| index.vector(b)).collect();
    let w = FpMatrix::from_columns(field, index.len(), &columns);
    let mut profile = Vec::with_capacity(max_deg + 1);
    let mut prev = 0usize;
    for d in 0..=max_deg {
        // dim(W ∩ T_{≤d}) = dim W − rank of W projected onto degrees > d
        let high: Vec<usize> =
            (0..index.len()).filter(|&i| index.monomials[i].iter().sum::<u32>() as usize > d).collect();
        let projected = w.transpose().select_columns(&high);
        let dim = total - projected.rank();
        profile.push(dim - prev);
        prev = dim;
    }
    Ok(ContractionSpan { span_basis: basis, total_dimension: total, degree_profile: profile })
}

/// `F + G` for polynomials in disjoint sets of variables.
pub fn sum_disjoint(f: &DualPolynomial, g: &DualPolynomial) -> Result<DualPolynomial> {
    if f.field != g.field {
        return Err(Error::FieldMismatch(f.field.modulus(), g.field.modulus()));
    }
    let n = f.nvars.max(g.nvars);
    let f = f.embed(0, n)?;
    let g = g.embed(0, n)?;
    if let Some(&v) = f.support().intersection(&g.support()).next() {
        return Err(Error::OverlappingVariables(v + 1));
    }
    f.add(&g)
}
