//! Splitting a commutative subalgebra into local factors by Fitting
//! decompositions of witnesses that are neither nilpotent nor invertible.

use std::ops::Range;

use crate::centralizer::ZSubspace;
use crate::dmat::DMat;
use crate::error::{Error, Result};

use super::idempotent::{split_or_certify, CornerSplit};
use super::radical::{certify_jacobson, corner_nilradical, nil_index, nil_power_vanishes, nilradical};
use super::{is_commutative, is_maximal_commutative, search_elements, Corner, Subalgebra};

#[derive(Clone, Debug)]
pub struct FittingSplit {
    /// Rows are an echelon basis of `Im(A^n)` followed by one of `Ker(A^n)`.
    pub basis_change: DMat,
    pub basis_change_inv: DMat,
    /// `dim Im(A^n)`, the size of the first block.
    pub rank: usize,
    pub s1: Subalgebra,
    pub s2: Subalgebra,
}

pub fn fitting_split(s: &Subalgebra, a: &DMat) -> Result<FittingSplit> {
    if a.n() != s.n() || a.domain() != s.domain() || !s.contains(a) {
        return Err(Error::NotInSubalgebra);
    }
    if a.is_nilpotent() || a.is_invertible() {
        return Err(Error::NilpotentOrInvertibleInput);
    }
    let n = s.n();
    let domain = s.domain();
    let a_star = a.pow(n as u32);
    let (ker, im) = a_star.kernel_image();
    let rank = im.dim();
    let rows: Vec<_> = im.basis().iter().chain(ker.basis()).cloned().collect();
    let p = DMat::from_entries(domain, &rows)?;
    let p_inv = p.inverse()?;
    let mut g1 = Vec::with_capacity(s.dim_z());
    let mut g2 = Vec::with_capacity(s.dim_z());
    for b in s.basis() {
        let c = b.conjugate(&p, &p_inv);
        if !c.is_block_diagonal(rank) {
            return Err(Error::NotCommutative);
        }
        g1.push(c.block(0, rank));
        g2.push(c.block(rank, n - rank));
    }
    // Block projections of a unital algebra are unital algebras.
    let s1 = Subalgebra::from_closed(ZSubspace::span(domain, rank, &g1));
    let s2 = Subalgebra::from_closed(ZSubspace::span(domain, n - rank, &g2));
    Ok(FittingSplit { basis_change: p, basis_change_inv: p_inv, rank, s1, s2 })
}

/// First element in search order that is neither nilpotent nor invertible.
pub(crate) fn find_witness(s: &Subalgebra) -> Option<DMat> {
    search_elements(s.basis(), s.field()).find(|x| !x.is_nilpotent() && !x.is_invertible())
}

/// A witness for `s`: the search-order element if there is one, otherwise a
/// nontrivial idempotent found from a minimal polynomial. The search only
/// tries small coefficients, so over Q it can miss every shifted element
/// `A - c I` with `c` an eigenvalue.
fn witness_or_idempotent(s: &Subalgebra, certified: &Result<CornerSplit>) -> Result<DMat> {
    if let Some(w) = find_witness(s) {
        return Ok(w);
    }
    match certified {
        Ok(CornerSplit::Split(idems)) => idems
            .iter()
            .find(|e| !e.is_zero() && !e.is_identity())
            .cloned()
            .ok_or(Error::WitnessSearchExhausted),
        Err(e) => Err(e.clone()),
        Ok(CornerSplit::Local) => Err(Error::WitnessSearchExhausted),
    }
}

/// Whether every Fitting split taken on the way down to local blocks has
/// two halves that are maximal commutative in their own matrix rings.
pub fn maximality_transfer(s: &Subalgebra) -> Result<bool> {
    let certified = split_or_certify(&Corner::whole(s));
    if let Ok(CornerSplit::Local) = certified {
        return Ok(true);
    }
    let witness = witness_or_idempotent(s, &certified)?;
    let split = fitting_split(s, &witness)?;
    for half in [&split.s1, &split.s2] {
        if !is_maximal_commutative(half)? || !maximality_transfer(half)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct LocalFactor {
    /// The factor's unit, in the original coordinates.
    pub idempotent: DMat,
    /// Diagonal block (0-based, half open) occupied in the final basis.
    pub block_range: Range<usize>,
    /// `e S` as a subspace of `M_n(D)`.
    pub factor_basis: ZSubspace,
    pub nilradical_basis: ZSubspace,
    pub residue_field_dim_z: usize,
}

impl LocalFactor {
    pub fn dim_z(&self) -> usize {
        self.factor_basis.dim_z()
    }

    pub fn is_field(&self) -> bool {
        self.nilradical_basis.is_zero()
    }
}

/// One Fitting split taken during the recursion.
#[derive(Clone, Debug)]
pub struct SplitStep {
    pub depth: usize,
    /// Start of the block being split, in the final basis.
    pub offset: usize,
    /// The witness, in the coordinates of the block being split.
    pub witness: DMat,
    pub rank: usize,
    pub left_dim_z: usize,
    pub right_dim_z: usize,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub factors: Vec<LocalFactor>,
    /// `P` with `P s P^{-1}` block diagonal for every `s` in the algebra.
    pub basis_change: DMat,
    pub nilradical: ZSubspace,
    pub nil_index: Option<usize>,
    pub j_equals_n: bool,
    pub nil_index_at_most_n: bool,
    pub factor_count_at_most_n: bool,
    pub reduced_implies_fields: bool,
    pub maximal: bool,
    pub splits: Vec<SplitStep>,
}

impl DecompositionReport {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }
}

struct Blocks {
    basis_change: DMat,
    /// (offset, size) of every local block.
    blocks: Vec<(usize, usize)>,
}

fn split_rec(s: &Subalgebra, depth: usize, offset: usize, steps: &mut Vec<SplitStep>) -> Result<Blocks> {
    let n = s.n();
    let local = Blocks { basis_change: DMat::identity(s.domain(), n), blocks: vec![(offset, n)] };
    let certified = split_or_certify(&Corner::whole(s));
    if let Ok(CornerSplit::Local) = certified {
        return Ok(local);
    }
    let witness = witness_or_idempotent(s, &certified)?;
    let split = fitting_split(s, &witness)?;
    steps.push(SplitStep {
        depth,
        offset,
        witness,
        rank: split.rank,
        left_dim_z: split.s1.dim_z(),
        right_dim_z: split.s2.dim_z(),
    });
    let left = split_rec(&split.s1, depth + 1, offset, steps)?;
    let right = split_rec(&split.s2, depth + 1, offset + split.rank, steps)?;
    let inner = DMat::block_diag(&left.basis_change, &right.basis_change);
    let mut blocks = left.blocks;
    blocks.extend(right.blocks);
    Ok(Blocks { basis_change: inner.mul(&split.basis_change), blocks })
}

pub fn decompose(s: &Subalgebra) -> Result<DecompositionReport> {
    if !is_commutative(s) {
        return Err(Error::NotCommutative);
    }
    let n = s.n();
    let domain = s.domain();
    let mut splits = Vec::new();
    let Blocks { basis_change, blocks } = split_rec(s, 0, 0, &mut splits)?;
    let p_inv = basis_change.inverse()?;

    let mut factors = Vec::with_capacity(blocks.len());
    for (offset, size) in blocks {
        let mut unit = DMat::zeros(domain, n);
        for k in offset..offset + size {
            unit.set(k, k, &domain.one());
        }
        let idempotent = p_inv.mul(&unit).mul(&basis_change);
        debug_assert!(s.contains(&idempotent));
        let corner = Corner::cut(s, &idempotent);
        let nil = corner_nilradical(&corner);
        factors.push(LocalFactor {
            residue_field_dim_z: corner.dim() - nil.dim_z(),
            idempotent,
            block_range: offset..offset + size,
            factor_basis: corner.space,
            nilradical_basis: nil,
        });
    }

    let nil = nilradical(s)?;
    let j_equals_n = match certify_jacobson(s, &nil) {
        Ok(()) => true,
        Err(Error::RadicalCertificationFailed(_)) => false,
        Err(e) => return Err(e),
    };
    let reduced_implies_fields = !nil.is_zero() || factors.iter().all(|f| f.is_field() && f.residue_field_dim_z == f.dim_z());
    Ok(DecompositionReport {
        factor_count_at_most_n: factors.len() <= n,
        nil_index_at_most_n: nil_power_vanishes(&nil, n),
        nil_index: nil_index(&nil),
        nilradical: nil,
        j_equals_n,
        reduced_implies_fields,
        maximal: is_maximal_commutative(s)?,
        factors,
        basis_change,
        splits,
    })
}
