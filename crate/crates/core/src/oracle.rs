//! Brute-force enumeration of maximal commutative subrings of small matrix
//! rings `M_n(F_p)`, with every structural claim re-checked on each ring.
//!
//! Exhaustive mode walks every subset of `M_n(F_p)` and decides ring
//! closure, commutativity and self-centralizing purely from addition and
//! multiplication tables, so it shares no linear algebra with the
//! algorithms it checks. Sweep mode closes tuples of commuting generators
//! instead and scales a little further.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::centralizer::{centralizer_of_subspace, ZSubspace};
use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::field::{is_prime, Scalar};
use crate::scalar::Domain;
use crate::subalgebra::{
    algebra_closure, corner_is_local, decompose, idempotents_via_minpoly, is_maximal_commutative,
    maximality_transfer, nilradical, Subalgebra,
};

/// Largest ambient ring (in elements) for the subset walk: `2^16` subsets.
pub const EXHAUSTIVE_MAX_ELEMENTS: u64 = 16;
/// Largest number of generator tuples a sweep will visit.
pub const SWEEP_MAX_TUPLES: u64 = 10_000_000;
/// Largest subalgebra (in elements) whose nilradical is recomputed by
/// listing every element.
pub const BRUTE_NILRADICAL_MAX: u64 = 1 << 16;
/// Largest subalgebra for the quadratic brute-force Jacobson radical.
pub const BRUTE_JACOBSON_MAX: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCheck {
    pub contains_scalars: bool,
    pub self_centralizing: bool,
    pub factor_count: usize,
    pub factor_count_at_most_n: bool,
    pub idempotents_orthogonal: bool,
    pub factors_local: bool,
    pub idempotent_count_agrees: bool,
    /// The certified Jacobson radical equals the nilradical.
    pub j_equals_n: bool,
    /// Span of all nilpotent elements equals the computed nilradical.
    pub brute_nilradical_agrees: Option<bool>,
    /// `{x : I - s x invertible for all s}` equals the computed nilradical.
    pub brute_jacobson_agrees: Option<bool>,
    pub nil_index: Option<usize>,
    pub nil_power_vanishes: bool,
    /// A reduced ring splits into fields.
    pub corollary: bool,
    pub maximality_transfer: bool,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.contains_scalars
            && self.self_centralizing
            && self.factor_count_at_most_n
            && self.idempotents_orthogonal
            && self.factors_local
            && self.idempotent_count_agrees
            && self.j_equals_n
            && self.brute_nilradical_agrees.unwrap_or(true)
            && self.brute_jacobson_agrees.unwrap_or(true)
            && self.nil_power_vanishes
            && self.corollary
            && self.maximality_transfer
    }
}

/// Every element of a subalgebra over a prime field, if there are at most
/// `limit` of them.
pub fn finite_elements(s: &Subalgebra, limit: u64) -> Option<Vec<DMat>> {
    let p = s.field().characteristic() as u64;
    if p == 0 {
        return None;
    }
    let size = p.checked_pow(s.dim_z() as u32).filter(|&size| size <= limit)?;
    let basis = s.space();
    Some(
        (0..size)
            .map(|mut code| {
                let coeffs: Vec<Scalar> = (0..s.dim_z())
                    .map(|_| {
                        let c = (code % p) as u32;
                        code /= p;
                        Scalar::Mod(c)
                    })
                    .collect();
                basis.combine(&coeffs)
            })
            .collect(),
    )
}

/// Span of the nilpotent elements, found by listing all of them.
pub fn brute_nilradical(s: &Subalgebra) -> Result<ZSubspace> {
    let elems = finite_elements(s, BRUTE_NILRADICAL_MAX).ok_or_else(|| too_large_fallback(s))?;
    Ok(ZSubspace::span(s.domain(), s.n(), elems.iter().filter(|x| x.is_nilpotent())))
}

/// The Jacobson radical straight from its definition. Also checks that the
/// resulting set is closed under addition, as an ideal must be.
pub fn brute_jacobson(s: &Subalgebra) -> Result<ZSubspace> {
    let elems = finite_elements(s, BRUTE_JACOBSON_MAX).ok_or_else(|| too_large_fallback(s))?;
    let id = s.identity();
    let members: Vec<&DMat> =
        elems.iter().filter(|x| elems.iter().all(|r| id.sub(&r.mul(x)).is_invertible())).collect();
    let span = ZSubspace::span(s.domain(), s.n(), members.iter().copied());
    let p = s.field().characteristic() as usize;
    if members.len() != p.pow(span.dim_z() as u32) {
        return Err(Error::RadicalCertificationFailed("quasi-regular elements do not form a subspace".into()));
    }
    Ok(span)
}

fn too_large_fallback(s: &Subalgebra) -> Error {
    let p = s.field().characteristic() as u128;
    Error::CharacteristicFallbackTooLarge {
        size: p.saturating_pow(s.dim_z() as u32),
        limit: BRUTE_NILRADICAL_MAX as u128,
    }
}

/// Runs the decomposition on `s` and checks everything the structure
/// theorem predicts for a maximal commutative subring.
pub fn verify_theorem(s: &Subalgebra) -> Result<TheoremCheck> {
    let n = s.n();
    let report = decompose(s)?;
    let nil = nilradical(s)?;
    let id = s.identity();

    let es: Vec<&DMat> = report.factors.iter().map(|f| &f.idempotent).collect();
    let sum = es.iter().fold(DMat::zeros(s.domain(), n), |acc, e| acc.add(e));
    let idempotents_orthogonal = sum == id
        && es.iter().enumerate().all(|(i, a)| {
            a.mul(a) == **a && es.iter().enumerate().all(|(j, b)| i == j || a.mul(b).is_zero())
        });
    let mut factors_local = true;
    for e in &es {
        factors_local &= corner_is_local(s, e)?;
    }

    let brute_nilradical_agrees = brute_nilradical(s).ok().map(|b| b == nil);
    let brute_jacobson_agrees = match brute_jacobson(s) {
        Ok(b) => Some(b == nil),
        Err(Error::RadicalCertificationFailed(_)) => Some(false),
        Err(_) => None,
    };

    Ok(TheoremCheck {
        contains_scalars: s.contains_scalars(),
        self_centralizing: centralizer_of_subspace(s.space()) == *s.space(),
        factor_count: report.factor_count(),
        factor_count_at_most_n: report.factor_count_at_most_n,
        idempotents_orthogonal,
        factors_local,
        idempotent_count_agrees: idempotents_via_minpoly(s)?.len() == report.factor_count(),
        j_equals_n: report.j_equals_n,
        brute_nilradical_agrees,
        brute_jacobson_agrees,
        nil_index: report.nil_index,
        nil_power_vanishes: report.nil_index_at_most_n,
        corollary: report.reduced_implies_fields,
        maximality_transfer: maximality_transfer(s)?,
    })
}

/// A random element of `S` with small coordinates: residues drawn
/// uniformly, or integers in `[-3, 3]` over the rationals.
pub fn random_element<R: Rng>(s: &Subalgebra, rng: &mut R) -> DMat {
    let f = s.field();
    let coeffs: Vec<Scalar> = (0..s.dim_z())
        .map(|_| match f.characteristic() {
            0 => f.from_i64(rng.gen_range(-3..=3)),
            p => Scalar::Mod(rng.gen_range(0..p)),
        })
        .collect();
    s.space().combine(&coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AbsorptionCheck {
    pub samples: usize,
    pub invertible: usize,
    pub absorbed: usize,
}

impl AbsorptionCheck {
    pub fn passed(&self) -> bool {
        self.invertible == self.absorbed
    }
}

/// Draws `samples` random elements of `S` and checks that the inverse of
/// each invertible one lies in `S` again.
pub fn unit_absorption(s: &Subalgebra, samples: usize, seed: u64) -> AbsorptionCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = AbsorptionCheck { samples, invertible: 0, absorbed: 0 };
    for _ in 0..samples {
        let x = random_element(s, &mut rng);
        if let Ok(inv) = x.inverse() {
            check.invertible += 1;
            check.absorbed += usize::from(s.contains(&inv));
        }
    }
    check
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    Sweep { max_gens: usize },
}

#[derive(Clone, Debug)]
pub struct RingEntry {
    pub ring: Subalgebra,
    pub check: TheoremCheck,
}

impl RingEntry {
    pub fn canonical_basis(&self) -> &[DMat] {
        self.ring.basis()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub p: u32,
    pub n: usize,
    pub mode: EnumerationMode,
    pub per_ring: Vec<RingEntry>,
    /// Exhaustive mode: the pass that did not require `I` found exactly the
    /// same maximal commutative subrings, all of them containing `I`.
    pub non_unital_pass_agrees: Option<bool>,
}

impl EnumerationReport {
    pub fn rings_found(&self) -> usize {
        self.per_ring.len()
    }

    pub fn all_theorem_checks_passed(&self) -> bool {
        self.non_unital_pass_agrees.unwrap_or(true) && self.per_ring.iter().all(|r| r.check.passed())
    }
}

/// All `p^{n^2}` matrices in `M_n(F_p)`, ordered by base-`p` code with the
/// first entry least significant.
pub fn all_matrices(domain: &Domain, p: u32, n: usize) -> Vec<DMat> {
    let count = (p as u64).pow((n * n) as u32);
    (0..count)
        .map(|mut code| {
            let flat: Vec<Scalar> = (0..n * n)
                .map(|_| {
                    let c = (code % p as u64) as u32;
                    code /= p as u64;
                    Scalar::Mod(c)
                })
                .collect();
            DMat::unflatten(&flat, domain, n).expect("residues are in range")
        })
        .collect()
}

fn prime_domain(p: u32, n: usize) -> Result<Domain> {
    if !is_prime(p as u64) {
        return Err(Error::NonPrimeModulus(p as u64));
    }
    if n == 0 {
        return Err(Error::ShapeMismatch(0, 1));
    }
    Domain::prime(p as u64)
}

fn sorted_entries(rings: Vec<Subalgebra>) -> Result<Vec<RingEntry>> {
    let mut rings = rings;
    rings.sort_by(|a, b| {
        a.dim_z().cmp(&b.dim_z()).then_with(|| {
            let fa: Vec<&[Scalar]> = a.basis().iter().map(DMat::flatten).collect();
            let fb: Vec<&[Scalar]> = b.basis().iter().map(DMat::flatten).collect();
            fa.cmp(&fb)
        })
    });
    rings
        .into_par_iter()
        .map(|ring| verify_theorem(&ring).map(|check| RingEntry { ring, check }))
        .collect()
}

/// Subsets of the ambient ring as bitmasks over element indices.
struct Tables {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl Tables {
    fn new(elems: &[DMat]) -> Tables {
        let index = |m: &DMat| elems.iter().position(|e| e == m).expect("table is closed");
        let add = elems.iter().map(|a| elems.iter().map(|b| index(&a.add(b))).collect()).collect();
        let mul = elems.iter().map(|a| elems.iter().map(|b| index(&a.mul(b))).collect()).collect();
        let zero = elems.iter().position(DMat::is_zero).expect("zero matrix");
        let one = elems.iter().position(DMat::is_identity).expect("identity matrix");
        Tables { add, mul, zero, one }
    }

    /// Closed under `+` and `*`, containing `0` (and `I` if asked). For a
    /// finite additive monoid in characteristic `p` this is a subring.
    fn is_ring(&self, mask: u64, unital: bool) -> bool {
        let has = |i: usize| mask >> i & 1 == 1;
        if !has(self.zero) || (unital && !has(self.one)) {
            return false;
        }
        let members: Vec<usize> = (0..self.add.len()).filter(|&i| has(i)).collect();
        members.iter().all(|&a| members.iter().all(|&b| has(self.add[a][b]) && has(self.mul[a][b])))
    }

    /// Commutative and equal to its own centralizer, hence maximal among
    /// commutative subrings.
    fn is_maximal_commutative(&self, mask: u64) -> bool {
        let members: Vec<usize> = (0..self.add.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let centralizer = (0..self.add.len())
            .filter(|&x| members.iter().all(|&t| self.mul[x][t] == self.mul[t][x]))
            .fold(0u64, |acc, x| acc | 1 << x);
        centralizer == mask
    }

    fn maximal_commutative_masks(&self, unital: bool) -> Vec<u64> {
        let total = 1u64 << self.add.len();
        (0..total)
            .into_par_iter()
            .filter(|&mask| self.is_ring(mask, unital) && self.is_maximal_commutative(mask))
            .collect()
    }
}

pub fn enumerate_exhaustive(p: u32, n: usize) -> Result<EnumerationReport> {
    let domain = prime_domain(p, n)?;
    let size = (p as u64).checked_pow((n * n) as u32).unwrap_or(u64::MAX);
    if size > EXHAUSTIVE_MAX_ELEMENTS {
        return Err(Error::InstanceTooLarge(format!(
            "M_{n}(F_{p}) has {size} elements; subset enumeration is limited to {EXHAUSTIVE_MAX_ELEMENTS}"
        )));
    }
    let elems = all_matrices(&domain, p, n);
    let tables = Tables::new(&elems);
    let unital = tables.maximal_commutative_masks(true);
    let any = tables.maximal_commutative_masks(false);
    let non_unital_pass_agrees = any == unital && any.iter().all(|m| m >> tables.one & 1 == 1);

    let mut rings = Vec::with_capacity(unital.len());
    for mask in unital {
        let members = elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m);
        let space = ZSubspace::span(&domain, n, members);
        rings.push(Subalgebra::from_space(space)?);
    }
    Ok(EnumerationReport {
        p,
        n,
        mode: EnumerationMode::Exhaustive,
        per_ring: sorted_entries(rings)?,
        non_unital_pass_agrees: Some(non_unital_pass_agrees),
    })
}

/// Closures of every multiset of at most `max_gens` pairwise commuting
/// matrices, kept when maximal commutative.
pub fn sweep_generated(p: u32, n: usize, max_gens: usize) -> Result<EnumerationReport> {
    let domain = prime_domain(p, n)?;
    let size = (p as u64).checked_pow((n * n) as u32);
    let tuples = size.and_then(|s| s.checked_pow(max_gens as u32));
    if max_gens == 0 || tuples.is_none_or(|t| t > SWEEP_MAX_TUPLES) {
        return Err(Error::InstanceTooLarge(format!(
            "sweep over M_{n}(F_{p}) with {max_gens} generators exceeds {SWEEP_MAX_TUPLES} tuples"
        )));
    }
    let elems = all_matrices(&domain, p, n);

    // Non-decreasing index tuples; shorter tuples appear through repeats.
    let mut frontier: Vec<Vec<usize>> = (0..elems.len()).map(|i| vec![i]).collect();
    for _ in 1..max_gens {
        frontier = frontier
            .into_par_iter()
            .flat_map_iter(|t| {
                let last = *t.last().expect("tuples are nonempty");
                let elems = &elems;
                (last..elems.len())
                    .filter(|&j| t.iter().all(|&i| elems[i].mul(&elems[j]) == elems[j].mul(&elems[i])))
                    .map(|j| {
                        let mut next = t.clone();
                        next.push(j);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let closures: HashSet<ZSubspace> = frontier
        .into_par_iter()
        .map(|t| {
            let gens: Vec<DMat> = t.iter().map(|&i| elems[i].clone()).collect();
            algebra_closure(&domain, n, &gens).space().clone()
        })
        .collect();
    let rings: Vec<Subalgebra> = closures
        .into_par_iter()
        .filter_map(|space| {
            let s = Subalgebra::from_space(space).ok()?;
            is_maximal_commutative(&s).ok()?.then_some(s)
        })
        .collect();
    Ok(EnumerationReport {
        p,
        n,
        mode: EnumerationMode::Sweep { max_gens },
        per_ring: sorted_entries(rings)?,
        non_unital_pass_agrees: None,
    })
}
