//! End-to-end acceptance criteria. Each criterion prints one `PASS` or
//! `FAIL` line; the test fails when a criterion outside `KNOWN_FAILURES`
//! fails, or when a known failure starts passing.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use artinian::algebra::{ArtinianLocalAlgebra, Element, ReductionSearch};
use artinian::dualpoly::DualPolynomial;
use artinian::koszul::KoszulComplex;
use artinian::linalg::{FpMatrix, PrimeField};
use artinian::resolution::{
    betti_of_k, minimal_free_resolution, module_from_quotient, serre_inequality_check, BettiTable, FinModule,
    ResolutionOptions,
};
use artinian::series::{self, IntPoly, PowerSeriesZ, RationalSeries};
use artinian::structure::{self, Decomposition};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold as stated; see the comment on `criterion_10`.
const KNOWN_FAILURES: &[usize] = &[10];

struct Outcome {
    ok: bool,
    detail: String,
}

fn field() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn dual(n: usize, gens: &[&str]) -> ArtinianLocalAlgebra {
    ArtinianLocalAlgebra::from_inverse_system_text(field(), n, gens).unwrap()
}

fn ideal(n: usize, gens: &[&str]) -> ArtinianLocalAlgebra {
    ArtinianLocalAlgebra::from_ideal(field(), n, gens, 20).unwrap()
}

/// Coefficients of `num/den` from the recurrence `den · c = num`, in plain
/// integers; independent of the series module.
fn recurrence(num: &[i64], den: &[i64], degree: usize) -> Vec<i64> {
    assert_eq!(den[0], 1);
    let mut c = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        let mut v = num.get(k).copied().unwrap_or(0);
        for i in 1..den.len().min(k + 1) {
            v -= den[i] * c[k - i];
        }
        c.push(v);
    }
    c
}

fn as_i64(b: &BettiTable) -> Vec<i64> {
    b.betti.iter().map(|&x| x as i64).collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.ok = false;
    }
    out.detail = format!("{} [{:.2?} / limit {:?}]", out.detail, elapsed, limit);
    out
}

fn betti_matches(r: &ArtinianLocalAlgebra, degree: usize, expected: &[i64]) -> (bool, String) {
    let b = betti_of_k(r, degree).unwrap();
    let got = as_i64(&b);
    (got == expected && !b.truncated, format!("betti {got:?} vs {expected:?}"))
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(60), || {
        let r = dual(3, &["Y1^2*Y2 + Y3^2"]);
        let expected = recurrence(&[1], &[1, -3, 1], 6);
        let (ok, detail) = betti_matches(&r, 6, &expected);
        let ok = ok && expected == [1, 3, 8, 21, 55, 144, 377] && r.classify(None).is_almost_stretched;
        Outcome { ok, detail }
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(60), || {
        let r = dual(3, &["Y1^3 + Y2^2 + Y3^2"]);
        let c = r.classify(None);
        let (ok, detail) = betti_matches(&r, 6, &recurrence(&[1], &[1, -3, 1], 6));
        Outcome { ok: ok && c.mu_m_squared == 1 && c.is_gorenstein, detail }
    })
}

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(30), || {
        let r = ideal(2, &["x1^3", "x1*x2", "x2^2"]);
        let c = r.classify(None);
        let expected: Vec<i64> = (0..=8).map(|i| 1 << i).collect();
        let (ok, mut detail) = betti_matches(&r, 8, &expected);
        let file = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/stretched_type2.json");
        let mut out = Vec::new();
        let code = artinian::cli::run(
            ["artinian", "golod", file.to_str().unwrap(), "--max-degree", "8"],
            &mut out,
            &mut Vec::new(),
        );
        let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
        let verdict = report["verdict"].as_str().unwrap_or("").to_string();
        detail = format!("{detail}; golod verdict {verdict}");
        let ok = ok
            && c.is_stretched
            && c.socle_type == 2
            && r.edim() == 2
            && code == 0
            && verdict == "golod-evidence-to-degree-8";
        Outcome { ok, detail }
    })
}

fn criterion_4() -> Outcome {
    timed(Duration::from_secs(120), || {
        let r = dual(3, &["Y1^3 + Y2^3 + Y3^3"]);
        let k = KoszulComplex::new(&r).unwrap();
        let profile = k.homology_profile();
        let h1 = k.h1_square_is_zero(&profile).unwrap();
        let pd = k.poincare_duality_check(&profile).unwrap();
        // (1+t)^3 / (1 - 5t^2 - 5t^3 + t^5)
        let expected = recurrence(&[1, 3, 3, 1], &[1, 0, -5, -5, 0, 1], 6);
        let (ok, detail) = betti_matches(&r, 6, &expected);
        Outcome {
            ok: ok && profile.dims == [1, 5, 5, 1] && h1 && pd,
            detail: format!("koszul {:?}, H1^2 = 0: {h1}, duality: {pd}; {detail}", profile.dims),
        }
    })
}

fn criterion_5() -> Outcome {
    timed(Duration::from_secs(60), || {
        let r = dual(3, &["Y1^2 + Y2^2 + Y3^2"]);
        let profile = KoszulComplex::new(&r).unwrap().homology_profile();
        let c = r.classify(Some(&profile));
        let d1 = series::gorenstein_denominator(3, &profile).unwrap();
        let d3 = series::codepth3_denominator(3, profile.dims[1]).unwrap();
        let target = IntPoly::from_i64(&[1, 0, -5, -5, 0, 1]);
        let expected = recurrence(&[1, 3, 3, 1], &[1, 0, -5, -5, 0, 1], 6);
        let (ok, detail) = betti_matches(&r, 6, &expected);
        let ok = ok
            && c.is_compressed
            && c.epsilon_profile == [1, 3, 1]
            && r.length() == 5
            && d1.denominator() == &target
            && d3.denominator() == &target;
        Outcome { ok, detail: format!("eps {:?}, d_R = {}; {detail}", c.epsilon_profile, d1.denominator()) }
    })
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(30), || {
        let s = ideal(1, &["x1^3"]);
        let t = ideal(1, &["x1^3"]);
        let r = structure::fibre_product(&s, &t).unwrap();
        let geo = RationalSeries::from_i64(&[1], &[1, -1]).unwrap();
        let dk = series::fibre_product_series(&geo, &geo).unwrap();
        let expected: Vec<i64> = (0..=8).map(|i| 1 << i).collect();
        let (ok, detail) = betti_matches(&r, 8, &expected);
        Outcome { ok: ok && dk == RationalSeries::from_i64(&[1], &[1, -2]).unwrap(), detail: format!("{dk}; {detail}") }
    })
}

fn criterion_7() -> Outcome {
    timed(Duration::from_secs(60), || {
        let r = dual(3, &["Y1^2*Y2 + Y3^2"]);
        let expected: Vec<i64> = (0..=6).map(|i| 3i64.pow(i)).collect();
        let (ok1, d1) = betti_matches(&r.quotient_by_power(2).unwrap(), 6, &expected);
        let (ok2, d2) = betti_matches(&r.quotient_by_socle().unwrap(), 6, &expected);
        let socq = series::socle_quotient_series(&RationalSeries::from_i64(&[1], &[1, -3, 1]).unwrap()).unwrap();
        let ok3 = socq == RationalSeries::from_i64(&[1], &[1, -3]).unwrap();
        Outcome { ok: ok1 && ok2 && ok3, detail: format!("R/m^2 {d1}; R/soc {d2}; socq {socq}") }
    })
}

fn decomposition_ok(r: &ArtinianLocalAlgebra) -> (bool, String) {
    let start = Instant::now();
    let Decomposition::Split(d) = structure::decompose_connected_sum(r, &ReductionSearch::default()).unwrap() else {
        return (false, "not split".into());
    };
    let (s, t) = (&d.s, &d.t);
    let mu2 = r.hilbert_function()[2];
    let (sum, _, _) = structure::connected_sum(s, t).unwrap();
    let ok = d.witness.claims == [true, true, true]
        && s.edim() == mu2
        && s.loewy_length() == r.loewy_length()
        && t.loewy_length() == 2
        && r.length() + 2 == s.length() + t.length()
        && sum.hilbert_function() == r.hilbert_function()
        && start.elapsed() < Duration::from_secs(10);
    (ok, format!("S {:?} # T {:?} in {:.2?}", s.hilbert_function(), t.hilbert_function(), start.elapsed()))
}

fn criterion_8() -> Outcome {
    timed(Duration::from_secs(20), || {
        let (ok1, d1) = decomposition_ok(&dual(3, &["Y1^3 + Y2^2 + Y3^2"]));
        let (ok2, d2) = decomposition_ok(&dual(3, &["Y1^2*Y2 + Y3^2"]));
        Outcome { ok: ok1 && ok2, detail: format!("{d1}; {d2}") }
    })
}

fn criterion_9() -> Outcome {
    timed(Duration::from_secs(120), || {
        let r = dual(3, &["Y1^2*Y2 + Y3^2"]);
        let x1 = r.variable_images()[0].clone();
        let m = module_from_quotient(&r, &[x1]).unwrap();
        let table = minimal_free_resolution(&m, &ResolutionOptions::to_degree(8)).unwrap();
        let p_hat = table.poincare_series();
        let d = IntPoly::one_plus_t_pow(3).mul(&IntPoly::from_i64(&[1, -3, 1]));
        let g_max = series::default_g_max(&d, &r).min(7);
        let g = series::denominator_divisibility_check(&d, &p_hat, g_max).unwrap();
        let none = series::denominator_divisibility_check(&IntPoly::from_i64(&[1, -1]), &p_hat, 7).unwrap();
        // oracle: multiply by hand in i64
        let b = as_i64(&table);
        let dc = [1i64, 0, -5, -5, 0, 1];
        let prod: Vec<i64> = (0..b.len()).map(|k| (0..=k.min(5)).map(|i| dc[i] * b[k - i]).sum()).collect();
        let oracle_g = prod.iter().rposition(|&c| c != 0).unwrap();
        Outcome {
            ok: g.is_some() && g == Some(oracle_g) && none.is_none() && !table.truncated,
            detail: format!("P_M {b:?}, g = {g:?}, with 1-t: {none:?}"),
        }
    })
}

/// Serre's bound is an equality exactly when `R -> S` is a Golod
/// homomorphism. For `S = R/m^2` here `β_1^R(S) = μ(m^2) = 2`, which forces
/// the right side to `1 + 3t + 10t^2 + ...` while `β_2^S(k) = 9`; the
/// equality part of this criterion cannot hold. The strict case for `S = k`
/// and the equality for the Golod homomorphism `R -> R/soc R` are checked
/// alongside and reported.
fn criterion_10() -> Outcome {
    timed(Duration::from_secs(120), || {
        let r = dual(3, &["Y1^2*Y2 + Y3^2"]);
        let m2: Vec<Element> =
            (0..r.length()).filter(|&u| r.basis_degree(u) >= 2).map(|u| r.basis_element(u)).collect();
        let m: Vec<Element> = (1..r.length()).map(|u| r.basis_element(u)).collect();
        let a = serre_inequality_check(&r, &m2, 5).unwrap();
        let b = serre_inequality_check(&r, &m, 5).unwrap();
        let c = serre_inequality_check(&r, &r.socle().columns(), 5).unwrap();
        let ok = a.termwise_leq && a.equality && b.termwise_leq && !b.equality;
        let fmt = |s: &PowerSeriesZ| s.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
        Outcome {
            ok,
            detail: format!(
                "R/m^2: lhs ({}) rhs ({}) leq {} eq {}; k: leq {} strict-from {:?}; R/soc: eq {}",
                fmt(&a.lhs),
                fmt(&a.rhs),
                a.termwise_leq,
                a.equality,
                b.termwise_leq,
                b.first_strict_degree,
                c.equality
            ),
        }
    })
}

/// The analysed part of the known failure: everything except the equality claim holds.
fn criterion_10_analysis_holds() -> bool {
    let r = dual(3, &["Y1^2*Y2 + Y3^2"]);
    let m2: Vec<Element> = (0..r.length()).filter(|&u| r.basis_degree(u) >= 2).map(|u| r.basis_element(u)).collect();
    let m: Vec<Element> = (1..r.length()).map(|u| r.basis_element(u)).collect();
    let a = serre_inequality_check(&r, &m2, 5).unwrap();
    let b = serre_inequality_check(&r, &m, 5).unwrap();
    let c = serre_inequality_check(&r, &r.socle().columns(), 5).unwrap();
    a.termwise_leq
        && a.first_strict_degree == Some(2)
        && a.lhs.coeffs()[2] == BigInt::from(9)
        && a.rhs.coeffs()[2] == BigInt::from(10)
        && b.termwise_leq
        && !b.equality
        && c.equality
}

/// Random inverse systems in at most 3 variables.
fn random_corpus(seed: u64, count: usize) -> Vec<ArtinianLocalAlgebra> {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=3);
        let ngens = rng.gen_range(1..=2);
        let gens: Vec<DualPolynomial> = (0..ngens)
            .map(|_| {
                let deg = rng.gen_range(2..=4u32);
                let terms: Vec<(Vec<u32>, i64)> = (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let mut e = vec![0u32; n];
                        for _ in 0..deg {
                            e[rng.gen_range(0..n)] += 1;
                        }
                        (e, rng.gen_range(1..101))
                    })
                    .collect();
                DualPolynomial::from_terms(f, n, &terms).unwrap()
            })
            .collect();
        let Ok(r) = ArtinianLocalAlgebra::from_inverse_system(f, &gens) else { continue };
        if r.length() <= 12 && r.edim() >= 1 {
            out.push(r);
        }
    }
    out
}

/// `k`-linear matrix of `d_i` from its entries in the algebra.
fn linear_map(r: &ArtinianLocalAlgebra, entries: &[Vec<Element>], cols: usize) -> FpMatrix {
    let l = r.length();
    let rows = entries.len();
    let mut columns = Vec::with_capacity(cols * l);
    for j in 0..cols {
        for u in 0..l {
            let mut v = Vec::with_capacity(rows * l);
            for row in entries {
                v.extend(r.mul(&r.basis_element(u), &row[j]));
            }
            columns.push(v);
        }
    }
    FpMatrix::from_columns(r.field(), rows * l, &columns)
}

/// Violations of `d² = 0`, minimality and exactness in a resolution of `k`.
fn resolution_violations(r: &ArtinianLocalAlgebra, table: &BettiTable) -> Vec<String> {
    let mut bad = Vec::new();
    let l = r.length();
    let top = table.computed_degree();
    let maps: Vec<FpMatrix> = (1..=top)
        .map(|i| {
            let d = table.differential(i);
            for row in &d {
                for e in row {
                    if !r.in_maximal_ideal(e) {
                        bad.push(format!("d_{i} has an entry outside m"));
                    }
                }
            }
            linear_map(r, &d, table.betti[i])
        })
        .collect();
    // d_0 : R -> k is the augmentation, rank 1
    let mut ranks = vec![1usize];
    ranks.extend(maps.iter().map(|m| m.rank()));
    for i in 1..top {
        if !maps[i - 1].mul(&maps[i]).unwrap().is_zero() {
            bad.push(format!("d_{} d_{} != 0", i, i + 1));
        }
    }
    // exactness at F_i: dim ker d_i = rank d_{i+1}
    for i in 0..top {
        let kernel = l * table.betti[i] - ranks[i];
        if kernel != ranks[i + 1] {
            bad.push(format!("not exact at F_{i}: kernel {kernel}, image {}", ranks[i + 1]));
        }
    }
    bad
}

fn annihilator_of_power(r: &ArtinianLocalAlgebra, i: usize) -> usize {
    let l = r.length();
    let gens: Vec<usize> = (0..l).filter(|&u| r.basis_degree(u) >= i).collect();
    if gens.is_empty() {
        return l;
    }
    let rows: Vec<Vec<i64>> = gens
        .iter()
        .flat_map(|&u| {
            let op = r.basis_operator(u);
            (0..l).map(move |row| op.row(row).iter().map(|&x| x as i64).collect::<Vec<_>>())
        })
        .collect();
    l - FpMatrix::from_rows(r.field(), &rows).unwrap().rank()
}

fn criterion_11() -> Outcome {
    timed(Duration::from_secs(600), || {
        let corpus = random_corpus(11, 24);
        let mut violations = Vec::new();
        let mut gorenstein = 0;
        for (idx, r) in corpus.iter().enumerate() {
            let table =
                minimal_free_resolution(&FinModule::residue_field(r), &ResolutionOptions::to_degree(5)).unwrap();
            for v in resolution_violations(r, &table) {
                violations.push(format!("ring {idx}: {v}"));
            }
            let shuffled = ResolutionOptions { column_seed: Some(idx as u64), ..ResolutionOptions::to_degree(5) };
            if minimal_free_resolution(&FinModule::residue_field(r), &shuffled).unwrap().betti != table.betti {
                violations.push(format!("ring {idx}: Betti numbers depend on the pivot order"));
            }
            let profile = KoszulComplex::new(r).unwrap().homology_profile();
            let euler: i64 =
                profile.dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
            if euler != 0 {
                violations.push(format!("ring {idx}: Euler characteristic {euler}"));
            }
            if profile.dims[r.edim()] != r.socle_dim() {
                violations.push(format!("ring {idx}: dim H_n != dim soc"));
            }
            if r.is_gorenstein() {
                gorenstein += 1;
                for i in 0..=r.loewy_length() + 1 {
                    if annihilator_of_power(r, i) + r.filtration_dim(i) != r.length() {
                        violations.push(format!("ring {idx}: duality fails at i = {i}"));
                    }
                }
            }
        }
        Outcome {
            ok: violations.is_empty() && corpus.len() >= 20,
            detail: format!("{} rings ({gorenstein} Gorenstein), violations {violations:?}", corpus.len()),
        }
    })
}

#[test]
fn acceptance() {
    type Criterion = (usize, &'static str, fn() -> Outcome);
    let criteria: Vec<Criterion> = vec![
        (1, "almost stretched Gorenstein ring: beta(k) = 1/(1-3t+t^2)", criterion_1),
        (2, "Gorenstein ring with mu(m^2) = 1: beta(k) = 1/(1-3t+t^2)", criterion_2),
        (3, "stretched ring of type 2: beta(k) = 1/(1-2t), Golod equality", criterion_3),
        (4, "codepth 3 Gorenstein non-complete-intersection", criterion_4),
        (5, "compressed Gorenstein ring: denominator and Betti numbers", criterion_5),
        (6, "fibre product series", criterion_6),
        (7, "quotients by m^2 and by the socle", criterion_7),
        (8, "connected sum decomposition round trip", criterion_8),
        (9, "common denominator for R/(x1)", criterion_9),
        (10, "Serre inequality", criterion_10),
        (11, "property suites on a random corpus", criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let out = check();
        println!("{} criterion {id}: {name} :: {}", if out.ok { "PASS" } else { "FAIL" }, out.detail);
        let known = KNOWN_FAILURES.contains(&id);
        if out.ok == known {
            unexpected.push(id);
        }
    }
    assert!(criterion_10_analysis_holds());
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
