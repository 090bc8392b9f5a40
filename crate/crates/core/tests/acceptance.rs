//! Acceptance run: prints one PASS/FAIL line per criterion and exits with
//! status 1 if any of them fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use maxcomm_core::constructions::{example1_verify, example2_verify, lemma1_verify, lemma2_verify, Lemma1Variant};
use maxcomm_core::oracle::{
    brute_nilradical, enumerate_exhaustive, finite_elements, sweep_generated, unit_absorption, EnumerationReport,
    BRUTE_NILRADICAL_MAX,
};
use maxcomm_core::{
    algebra_closure, centralizer_basis, centralizer_of_subspace, decompose, fitting_split, idempotents_via_minpoly,
    is_maximal_commutative, nilradical, DMat, Domain, Subalgebra,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_matrix, small_primes};

struct Outcome {
    passed: bool,
    detail: String,
}

fn report(k: usize, o: &Outcome) {
    println!("criterion {k}: {} ({})", if o.passed { "PASS" } else { "FAIL" }, o.detail);
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn canonical_set(r: &EnumerationReport) -> BTreeSet<Vec<String>> {
    r.per_ring
        .iter()
        .map(|e| e.canonical_basis().iter().map(|m| format!("{:?}", m.flatten())).collect())
        .collect()
}

fn criterion1() -> (Outcome, EnumerationReport) {
    let t = Instant::now();
    let r = enumerate_exhaustive(2, 2).expect("M_2(F_2) is small enough");
    let elapsed = t.elapsed();
    let mut failures = 0;
    for e in &r.per_ring {
        let c = &e.check;
        let ok = c.passed()
            && c.factor_count <= 2
            && c.j_equals_n
            && c.brute_jacobson_agrees == Some(true)
            && c.brute_nilradical_agrees == Some(true)
            && c.nil_power_vanishes;
        failures += usize::from(!ok);
    }
    // A second, independent enumeration: closures of all commuting pairs.
    let sweep = sweep_generated(2, 2, 2).expect("small sweep");
    let same_rings = canonical_set(&sweep) == canonical_set(&r);
    let passed = failures == 0
        && r.non_unital_pass_agrees == Some(true)
        && same_rings
        && !r.per_ring.is_empty()
        && elapsed < Duration::from_secs(5);
    let detail = format!(
        "{} rings, {failures} failures, sweep agrees: {same_rings}, {}",
        r.rings_found(),
        secs(elapsed)
    );
    (Outcome { passed, detail }, r)
}

fn criterion2() -> (Outcome, Vec<EnumerationReport>) {
    let mut parts = Vec::new();
    let mut passed = true;
    let mut reports = Vec::new();
    for (p, n) in [(3, 2), (2, 3)] {
        let t = Instant::now();
        let r = sweep_generated(p, n, 2).expect("sweep within limits");
        let elapsed = t.elapsed();
        let failures = r
            .per_ring
            .iter()
            .filter(|e| {
                let c = &e.check;
                !(c.passed() && c.factor_count_at_most_n && c.j_equals_n && c.nil_power_vanishes && c.corollary)
            })
            .count();
        passed &= failures == 0 && !r.per_ring.is_empty() && elapsed < Duration::from_secs(60);
        parts.push(format!("M_{n}(F_{p}): {} rings, {failures} failures, {}", r.rings_found(), secs(elapsed)));
        reports.push(r);
    }
    (Outcome { passed, detail: parts.join("; ") }, reports)
}

fn lemma_domains() -> Vec<Domain> {
    vec![Domain::Prime(2), Domain::Prime(3), Domain::Prime(5), Domain::Rationals, Domain::hamilton()]
}

fn criterion3() -> Outcome {
    let t = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for d in lemma_domains() {
        for n in 2..=4 {
            let mut variants = vec![Lemma1Variant::PlainN];
            if matches!(d, Domain::Quaternion(_)) {
                variants.push(Lemma1Variant::LN);
            }
            for v in variants {
                cases += 1;
                match lemma1_verify(&d, n, v) {
                    Ok(c) if c.equal() => {}
                    other => bad.push(format!("{d:?} n={n} {v:?}: {:?}", other.map(|c| c.equal()))),
                }
            }
        }
    }
    let elapsed = t.elapsed();
    Outcome {
        passed: bad.is_empty() && elapsed < Duration::from_secs(10),
        detail: format!("{cases} cases, {} mismatches {bad:?}, {}", bad.len(), secs(elapsed)),
    }
}

fn criterion4() -> Outcome {
    let t = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for d in lemma_domains() {
        for n in 2..=4 {
            cases += 1;
            match lemma2_verify(&d, n) {
                Ok(c) if c.equal() => {}
                other => bad.push(format!("{d:?} n={n}: {:?}", other.map(|c| c.equal()))),
            }
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: format!("{cases} cases, {} mismatches {bad:?}, {}", bad.len(), secs(t.elapsed())),
    }
}

fn criterion5() -> Outcome {
    let t = Instant::now();
    let h = Domain::hamilton();
    let mut dims = Vec::new();
    let mut passed = true;
    for (n, expected) in [(2, 5), (3, 7), (4, 9)] {
        match example1_verify(&h, n) {
            Ok(c) => {
                dims.push(c.dim_z);
                passed &= c.dim_z == expected && c.all_hold() && c.factor_count == 1;
            }
            Err(e) => {
                dims.push(0);
                passed = false;
                eprintln!("example 1, n={n}: {e}");
            }
        }
    }
    let elapsed = t.elapsed();
    passed &= elapsed < Duration::from_secs(10);
    Outcome { passed, detail: format!("dimensions over Q {dims:?}, {}", secs(elapsed)) }
}

fn criterion6() -> Outcome {
    let t = Instant::now();
    let h = Domain::hamilton();
    let mut parts = Vec::new();
    let mut passed = true;
    for n in 2..=4 {
        match example2_verify(&h, n) {
            Ok(c) => {
                passed &= c.all_hold(n);
                parts.push(format!("n={n}: dim over L {}, local {}", c.dim_over_l, c.local));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("n={n}: {e}"));
            }
        }
    }
    Outcome { passed, detail: format!("{}, {}", parts.join("; "), secs(t.elapsed())) }
}

/// Random instances: (domain, n, generators). Four fifths over a prime
/// field, the rest over Q.
fn field_instances(rng: &mut ChaCha8Rng, count: usize, max_n: usize, max_gens: usize) -> Vec<(Domain, usize, Vec<DMat>)> {
    let primes = small_primes();
    (0..count)
        .map(|_| {
            let d = match rng.gen_range(0..5) {
                4 => Domain::Rationals,
                k => primes[k].clone(),
            };
            let n = rng.gen_range(1..=max_n);
            let k = rng.gen_range(1..=max_gens);
            let gens = (0..k).map(|_| random_matrix(&d, n, rng)).collect();
            (d, n, gens)
        })
        .collect()
}

fn quaternion_instances(rng: &mut ChaCha8Rng, count: usize, max_n: usize, max_gens: usize) -> Vec<(Domain, usize, Vec<DMat>)> {
    let h = Domain::hamilton();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let k = rng.gen_range(1..=max_gens);
            (h.clone(), n, (0..k).map(|_| random_matrix(&h, n, rng)).collect())
        })
        .collect()
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: usize,
}

fn run_suite<F>(name: &'static str, instances: &[(Domain, usize, Vec<DMat>)], check: F) -> Suite
where
    F: Fn(&Domain, usize, &[DMat]) -> bool,
{
    let failures = instances.iter().filter(|(d, n, g)| !check(d, *n, g)).count();
    Suite { name, cases: instances.len(), failures }
}

fn rank_nullity(_: &Domain, n: usize, g: &[DMat]) -> bool {
    let (ker, im) = g[0].kernel_image();
    ker.dim() + im.dim() == n && g[0].rank() == im.dim()
}

fn inverse_ok(d: &Domain, n: usize, g: &[DMat]) -> bool {
    match g[0].inverse() {
        Ok(inv) => {
            let id = DMat::identity(d, n);
            g[0].mul(&inv) == id && inv.mul(&g[0]) == id
        }
        Err(_) => g[0].rank() < n,
    }
}

fn triple_centralizer(d: &Domain, n: usize, g: &[DMat]) -> bool {
    let c = centralizer_basis(d, n, g);
    centralizer_of_subspace(&centralizer_of_subspace(&c)) == c
}

fn absorption(d: &Domain, n: usize, g: &[DMat]) -> bool {
    let s = algebra_closure(d, n, g);
    unit_absorption(&s, 4, g.len() as u64 + n as u64).passed()
}

fn corpus<'a>(reports: impl IntoIterator<Item = &'a EnumerationReport>) -> Vec<&'a Subalgebra> {
    reports.into_iter().flat_map(|r| r.per_ring.iter().map(|e| &e.ring)).collect()
}

fn finite_size(s: &Subalgebra) -> f64 {
    (s.field().characteristic() as f64).powi(s.dim_z() as i32)
}

fn criterion7(rings: &[&Subalgebra]) -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let single = field_instances(&mut rng, 1000, 4, 1);
    let several = field_instances(&mut rng, 1000, 3, 2);
    let quat_single = quaternion_instances(&mut rng, 200, 3, 1);
    let quat_several = quaternion_instances(&mut rng, 100, 2, 2);

    let mut suites = vec![
        run_suite("rank-nullity", &single, rank_nullity),
        run_suite("rank-nullity/H", &quat_single, rank_nullity),
        run_suite("inverse", &single, inverse_ok),
        run_suite("inverse/H", &quat_single, inverse_ok),
        run_suite("C(C(C(S)))=C(S)", &several, triple_centralizer),
        run_suite("C(C(C(S)))=C(S)/H", &quat_several, triple_centralizer),
        run_suite("unit absorption", &several, absorption),
        run_suite("unit absorption/H", &quat_several, absorption),
    ];

    // Nilradical against the span of all nilpotents: every corpus ring plus
    // closures of random single matrices over prime fields.
    let mut finite: Vec<Subalgebra> = rings.iter().map(|s| (*s).clone()).collect();
    let mut drawn = 0;
    let primes = small_primes();
    while drawn < 1000 {
        let d = primes[rng.gen_range(0..primes.len())].clone();
        let n = rng.gen_range(1..=4);
        let s = algebra_closure(&d, n, &[random_matrix(&d, n, &mut rng)]);
        if finite_size(&s) <= BRUTE_NILRADICAL_MAX as f64 {
            finite.push(s);
            drawn += 1;
        }
    }
    let nil_failures = finite
        .iter()
        .filter(|s| match (nilradical(s), brute_nilradical(s)) {
            (Ok(a), Ok(b)) => a != b,
            _ => true,
        })
        .count();
    suites.push(Suite { name: "trace-form N = brute N", cases: finite.len(), failures: nil_failures });

    let idem_failures = rings
        .iter()
        .filter(|s| match (idempotents_via_minpoly(s), decompose(s)) {
            (Ok(e), Ok(r)) => e.len() != r.factor_count(),
            _ => true,
        })
        .count();
    suites.push(Suite { name: "idempotent count = factor count", cases: rings.len(), failures: idem_failures });

    let passed = suites.iter().all(|s| s.failures == 0);
    let parts: Vec<String> = suites.iter().map(|s| format!("{} {}/{}", s.name, s.cases - s.failures, s.cases)).collect();
    Outcome { passed, detail: format!("{}; {}", parts.join(", "), secs(t.elapsed())) }
}

/// Every witness of every split ring, not only the one decompose picks.
fn criterion8(rings: &[&Subalgebra]) -> Outcome {
    let t = Instant::now();
    let mut split_rings = 0;
    let mut splits = 0;
    let mut failures = 0;
    for s in rings {
        let Some(elements) = finite_elements(s, 1 << 16) else {
            failures += 1;
            continue;
        };
        let witnesses: Vec<&DMat> = elements.iter().filter(|x| !x.is_nilpotent() && !x.is_invertible()).collect();
        if witnesses.is_empty() {
            continue;
        }
        split_rings += 1;
        for w in witnesses {
            splits += 1;
            let ok = fitting_split(s, w).is_ok_and(|f| {
                is_maximal_commutative(&f.s1).unwrap_or(false) && is_maximal_commutative(&f.s2).unwrap_or(false)
            });
            failures += usize::from(!ok);
        }
    }
    Outcome {
        passed: failures == 0 && split_rings > 0,
        detail: format!("{split_rings} split rings, {splits} splits checked, {failures} failures, {}", secs(t.elapsed())),
    }
}

fn main() {
    let (c1, exhaustive) = criterion1();
    report(1, &c1);
    let (c2, sweeps) = criterion2();
    report(2, &c2);
    let rest = [criterion3(), criterion4(), criterion5(), criterion6()];
    for (k, o) in rest.iter().enumerate() {
        report(k + 3, o);
    }
    let rings = corpus(std::iter::once(&exhaustive).chain(&sweeps));
    let c7 = criterion7(&rings);
    report(7, &c7);
    let c8 = criterion8(&rings);
    report(8, &c8);

    let all = [&c1, &c2, &c7, &c8].iter().all(|o| o.passed) && rest.iter().all(|o| o.passed);
    if !all {
        std::process::exit(1);
    }
}
