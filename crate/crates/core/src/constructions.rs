//! Centralizer identities for the Jordan block and the corner unit, and the
//! two example rings built from them.
//!
//! Every check here is per instance: a fixed domain and size, compared by
//! exact subspace equality.

use serde::{Deserialize, Serialize};

use crate::centralizer::{centralizer_basis, ZSubspace};
use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::scalar::{DElem, Domain, DomainKind, Subset};
use crate::subalgebra::{decompose, is_local, is_maximal_commutative, Subalgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma1Variant {
    /// Centralizer of `N` itself.
    #[serde(rename = "plainN")]
    PlainN,
    /// Centralizer of all left `L`-multiples of `N`.
    #[serde(rename = "LN")]
    LN,
}

impl std::str::FromStr for Lemma1Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plainN" | "N" => Ok(Lemma1Variant::PlainN),
            "LN" => Ok(Lemma1Variant::LN),
            other => Err(Error::Parse(format!("unknown variant `{other}`, expected plainN or LN"))),
        }
    }
}

/// A claimed subspace next to the one a centralizer solve produced.
#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub claimed: ZSubspace,
    pub computed: ZSubspace,
}

impl LemmaCheck {
    pub fn equal(&self) -> bool {
        self.claimed == self.computed
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ShapeMismatch(n, 2));
    }
    Ok(())
}

fn scaled(coeffs: &[DElem], m: &DMat) -> Vec<DMat> {
    coeffs.iter().map(|c| m.scale_left(c)).collect()
}

fn corner_multiples(domain: &Domain, n: usize) -> Vec<DMat> {
    scaled(&domain.z_basis(), &DMat::corner(domain, n))
}

/// `X I ⊕ X N ⊕ ... ⊕ X N^{n-2} ⊕ D E_{1,n}` with `X = D` or `X = L`.
pub fn lemma1_claim(domain: &Domain, n: usize, variant: Lemma1Variant) -> Result<ZSubspace> {
    check_size(n)?;
    let coeffs = match variant {
        Lemma1Variant::PlainN => domain.z_basis(),
        Lemma1Variant::LN => domain.l_basis(),
    };
    let jn = DMat::jordan_nilpotent(domain, n);
    let mut gens = Vec::new();
    for k in 0..n - 1 {
        gens.extend(scaled(&coeffs, &jn.pow(k as u32)));
    }
    gens.extend(corner_multiples(domain, n));
    Ok(ZSubspace::span(domain, n, &gens))
}

pub fn lemma1_verify(domain: &Domain, n: usize, variant: Lemma1Variant) -> Result<LemmaCheck> {
    let claimed = lemma1_claim(domain, n, variant)?;
    let jn = DMat::jordan_nilpotent(domain, n);
    let gens = match variant {
        Lemma1Variant::PlainN => vec![jn],
        Lemma1Variant::LN => scaled(&domain.l_basis(), &jn),
    };
    Ok(LemmaCheck { claimed, computed: centralizer_basis(domain, n, &gens) })
}

/// Membership test: first column zero below the corner, last row zero left
/// of the corner, and equal central `(1,1)` and `(n,n)` entries.
pub fn lemma2_member(x: &DMat) -> bool {
    let n = x.n();
    let domain = x.domain();
    let first_col = (1..n).all(|i| x.entry(i, 0).is_zero());
    let last_row = (0..n - 1).all(|j| x.entry(n - 1, j).is_zero());
    let corner = x.entry(0, 0);
    first_col && last_row && corner == x.entry(n - 1, n - 1) && domain.membership(&corner, Subset::CenterZ)
}

pub fn lemma2_claim(domain: &Domain, n: usize) -> Result<ZSubspace> {
    check_size(n)?;
    let one = domain.one();
    let mut diag_ends = DMat::zeros(domain, n);
    diag_ends.set(0, 0, &one);
    diag_ends.set(n - 1, n - 1, &one);
    let mut gens = vec![diag_ends];
    for i in 0..n {
        for j in 0..n {
            let pinned = (j == 0 && i > 0) || (i == n - 1 && j < n - 1) || (i, j) == (0, 0) || (i, j) == (n - 1, n - 1);
            if !pinned {
                gens.extend(scaled(&domain.z_basis(), &DMat::elementary(domain, n, i + 1, j + 1)?));
            }
        }
    }
    Ok(ZSubspace::span(domain, n, &gens))
}

pub fn lemma2_verify(domain: &Domain, n: usize) -> Result<LemmaCheck> {
    let claimed = lemma2_claim(domain, n)?;
    let computed = centralizer_basis(domain, n, &corner_multiples(domain, n));
    Ok(LemmaCheck { claimed, computed })
}

fn require_quaternions(domain: &Domain, what: &str) -> Result<()> {
    if domain.kind() != DomainKind::QuaternionAlgebra {
        return Err(Error::UnsupportedDomain(format!(
            "{what} needs a quaternion algebra so that L is a proper subfield; got {domain}"
        )));
    }
    Ok(())
}

/// `Z I ⊕ L N ⊕ ... ⊕ L N^{n-2} ⊕ D E_{1,n}`: banded upper triangular with a
/// central diagonal, `L` on the bands and a free corner.
pub fn example1_claim(domain: &Domain, n: usize) -> Result<ZSubspace> {
    check_size(n)?;
    let jn = DMat::jordan_nilpotent(domain, n);
    let mut gens = vec![DMat::identity(domain, n)];
    for k in 1..n - 1 {
        gens.extend(scaled(&domain.l_basis(), &jn.pow(k as u32)));
    }
    gens.extend(corner_multiples(domain, n));
    Ok(ZSubspace::span(domain, n, &gens))
}

/// Centralizer of `L N` together with every left `D`-multiple of the corner
/// unit `E_{1,n}`.
pub fn example1_ring(domain: &Domain, n: usize) -> Result<Subalgebra> {
    require_quaternions(domain, "example 1")?;
    check_size(n)?;
    let mut gens = scaled(&domain.l_basis(), &DMat::jordan_nilpotent(domain, n));
    gens.extend(corner_multiples(domain, n));
    Subalgebra::from_space(centralizer_basis(domain, n, &gens))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Example1Check {
    pub dim_z: usize,
    pub shape_matches: bool,
    pub maximal_commutative: bool,
    pub ideal_property: bool,
    pub local: bool,
    pub factor_count: usize,
    pub j_equals_n: bool,
    pub nil_index_at_most_n: bool,
}

impl Example1Check {
    pub fn all_hold(&self) -> bool {
        self.shape_matches
            && self.maximal_commutative
            && self.ideal_property
            && self.local
            && self.factor_count == 1
            && self.j_equals_n
            && self.nil_index_at_most_n
    }
}

/// Every `r (d E_{1,n})` and `(d E_{1,n}) r` lies in `Z (d E_{1,n})`.
pub fn corner_ideal_property(ring: &Subalgebra) -> bool {
    let (domain, n) = (ring.domain(), ring.n());
    corner_multiples(domain, n).iter().all(|m| {
        let line = ZSubspace::span(domain, n, [m]);
        ring.basis().iter().all(|r| line.contains(&r.mul(m)) && line.contains(&m.mul(r)))
    })
}

pub fn example1_verify(domain: &Domain, n: usize) -> Result<Example1Check> {
    let ring = example1_ring(domain, n)?;
    let report = decompose(&ring)?;
    Ok(Example1Check {
        dim_z: ring.dim_z(),
        shape_matches: *ring.space() == example1_claim(domain, n)?,
        maximal_commutative: report.maximal,
        ideal_property: corner_ideal_property(&ring),
        local: is_local(&ring)?,
        factor_count: report.factor_count(),
        j_equals_n: report.j_equals_n,
        nil_index_at_most_n: report.nil_index_at_most_n,
    })
}

/// `L[N]`: the `Z`-span of `l N^k` for `l` in the basis of `L`.
pub fn example2_claim(domain: &Domain, n: usize) -> Result<ZSubspace> {
    check_size(n)?;
    let jn = DMat::jordan_nilpotent(domain, n);
    let gens: Vec<DMat> = (0..n).flat_map(|k| scaled(&domain.l_basis(), &jn.pow(k as u32))).collect();
    Ok(ZSubspace::span(domain, n, &gens))
}

/// Centralizer of `L I + L N`.
pub fn example2_ring(domain: &Domain, n: usize) -> Result<Subalgebra> {
    require_quaternions(domain, "example 2")?;
    check_size(n)?;
    let l = domain.l_basis();
    let mut gens = scaled(&l, &DMat::identity(domain, n));
    gens.extend(scaled(&l, &DMat::jordan_nilpotent(domain, n)));
    Subalgebra::from_space(centralizer_basis(domain, n, &gens))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Example2Check {
    pub dim_z: usize,
    #[serde(rename = "equalsLN_polynomials")]
    pub equals_ln_polynomials: bool,
    pub maximal_commutative: bool,
    pub dim_over_l: usize,
    pub has_nilpotents: bool,
    pub local: bool,
    pub factor_count: usize,
}

impl Example2Check {
    pub fn all_hold(&self, n: usize) -> bool {
        self.equals_ln_polynomials
            && self.maximal_commutative
            && self.dim_over_l == n
            && self.has_nilpotents
            && self.local
            && self.factor_count == 1
    }
}

pub fn example2_verify(domain: &Domain, n: usize) -> Result<Example2Check> {
    let ring = example2_ring(domain, n)?;
    let jn = DMat::jordan_nilpotent(domain, n);
    let report = decompose(&ring)?;
    Ok(Example2Check {
        dim_z: ring.dim_z(),
        equals_ln_polynomials: *ring.space() == example2_claim(domain, n)?,
        maximal_commutative: is_maximal_commutative(&ring)?,
        dim_over_l: ring.dim_z() / domain.l_basis_size(),
        has_nilpotents: ring.contains(&jn) && jn.is_nilpotent() && !report.nilradical.is_zero(),
        local: is_local(&ring)?,
        factor_count: report.factor_count(),
    })
}
