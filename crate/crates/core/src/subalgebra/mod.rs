//! Unital commutative `Z`-subalgebras of `M_n(D)`: closure, maximality,
//! radicals, idempotents and the splitting into local factors.
//!
//! A maximal commutative subring contains `Z * I` (adjoining central scalars
//! keeps it commutative), so every subring handled here is a unital
//! `Z`-subalgebra.

mod decompose;
mod idempotent;
mod radical;

pub use decompose::{
    decompose, fitting_split, maximality_transfer, DecompositionReport, FittingSplit, LocalFactor, SplitStep,
};
pub use idempotent::{corner_is_local, idempotents_via_minpoly, is_local};
pub use radical::{ideal_power, jacobson_radical, nil_index, nilradical};

use crate::centralizer::{centralizer_of_subspace, ZSubspace};
use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::field::{BaseField, Scalar};
use crate::scalar::Domain;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subalgebra {
    space: ZSubspace,
    basis: Vec<DMat>,
}

impl Subalgebra {
    /// Validates that `space` contains `I` and is closed under products.
    pub fn from_space(space: ZSubspace) -> Result<Subalgebra> {
        let id = DMat::identity(space.domain(), space.n());
        if !space.contains(&id) {
            return Err(Error::NotASubalgebra("identity is missing".into()));
        }
        let s = Subalgebra::from_closed(space);
        for a in &s.basis {
            for b in &s.basis {
                if !s.space.contains(&a.mul(b)) {
                    return Err(Error::NotASubalgebra("not closed under multiplication".into()));
                }
            }
        }
        Ok(s)
    }

    pub(crate) fn from_closed(space: ZSubspace) -> Subalgebra {
        let basis = space.basis();
        Subalgebra { space, basis }
    }

    pub fn space(&self) -> &ZSubspace {
        &self.space
    }

    pub fn basis(&self) -> &[DMat] {
        &self.basis
    }

    pub fn dim_z(&self) -> usize {
        self.basis.len()
    }

    pub fn domain(&self) -> &Domain {
        self.space.domain()
    }

    pub fn field(&self) -> BaseField {
        self.domain().base_field()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn contains(&self, m: &DMat) -> bool {
        self.space.contains(m)
    }

    pub fn identity(&self) -> DMat {
        DMat::identity(self.domain(), self.n())
    }

    /// Whether `Z * I` lies in the algebra (always true for unital ones; kept
    /// as an explicit check for the oracle reports).
    pub fn contains_scalars(&self) -> bool {
        self.contains(&self.identity())
    }
}

/// Smallest unital subalgebra containing `gens`.
pub fn algebra_closure(domain: &Domain, n: usize, gens: &[DMat]) -> Subalgebra {
    let mut space = ZSubspace::zero(domain, n);
    let mut elems = Vec::new();
    for g in std::iter::once(DMat::identity(domain, n)).chain(gens.iter().cloned()) {
        if space.insert(&g) {
            elems.push(g);
        }
    }
    // Products of every pair of spanning elements end up in the span.
    let mut idx = 0;
    while idx < elems.len() {
        let x = elems[idx].clone();
        for k in 0..=idx {
            let y = elems[k].clone();
            for p in [x.mul(&y), y.mul(&x)] {
                if space.insert(&p) {
                    elems.push(p);
                }
            }
        }
        idx += 1;
    }
    Subalgebra::from_closed(space)
}

pub fn is_commutative(s: &Subalgebra) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| b[i].mul(&b[j]) == b[j].mul(&b[i])))
}

/// For commutative `S`, `C(S)` contains `S`, and equality is exactly
/// maximality among commutative subrings.
pub fn is_maximal_commutative(s: &Subalgebra) -> Result<bool> {
    if !is_commutative(s) {
        return Err(Error::NotCommutative);
    }
    Ok(centralizer_of_subspace(s.space()) == *s.space())
}

/// The algebra `eSe` with unit `e` for an idempotent `e` of a commutative
/// subalgebra; `e = I` gives `S` itself.
#[derive(Clone, Debug)]
pub(crate) struct Corner {
    pub unit: DMat,
    pub space: ZSubspace,
    pub basis: Vec<DMat>,
}

impl Corner {
    pub fn whole(s: &Subalgebra) -> Corner {
        Corner { unit: s.identity(), space: s.space().clone(), basis: s.basis().to_vec() }
    }

    pub fn cut(s: &Subalgebra, e: &DMat) -> Corner {
        let products: Vec<DMat> = s.basis().iter().map(|b| b.mul(e)).collect();
        let space = ZSubspace::span(s.domain(), s.n(), &products);
        let basis = space.basis();
        Corner { unit: e.clone(), space, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> BaseField {
        self.space.domain().base_field()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    /// Coordinates of `a * b`, which must lie in the corner.
    pub fn product_coords(&self, a: &DMat, b: &DMat) -> Vec<Scalar> {
        self.space.coordinates(&a.mul(b)).expect("corner is closed under multiplication")
    }
}

/// Deterministic search order over elements of a subspace: basis elements,
/// then `b_i + c b_j`, then `b_i + c b_j + c' b_k`, and finally (finite
/// fields only, when small enough) every element.
pub(crate) fn search_elements(basis: &[DMat], field: BaseField) -> impl Iterator<Item = DMat> + '_ {
    let coeffs = field.search_coefficients();
    let d = basis.len();
    let singles = basis.iter().cloned();
    let pairs_coeffs = coeffs.clone();
    let pairs = (0..d).flat_map(move |i| {
        let cs = pairs_coeffs.clone();
        (i + 1..d).flat_map(move |j| cs.clone().into_iter().map(move |c| (i, j, c)))
    });
    let pairs = pairs.map(move |(i, j, c)| basis[i].add(&basis[j].scale_z(&c)));
    let triple_coeffs = coeffs.clone();
    let triples = (0..d).flat_map(move |i| {
        let cs = triple_coeffs.clone();
        (i + 1..d).flat_map(move |j| {
            let cs = cs.clone();
            (j + 1..d).flat_map(move |k| {
                let cs2 = cs.clone();
                cs.clone().into_iter().flat_map(move |c| cs2.clone().into_iter().map(move |c2| (i, j, k, c.clone(), c2)))
            })
        })
    });
    let triples = triples.map(move |(i, j, k, c, c2)| basis[i].add(&basis[j].scale_z(&c)).add(&basis[k].scale_z(&c2)));
    let exhaustive: Box<dyn Iterator<Item = DMat>> = match field {
        BaseField::Prime(p) if (p as f64).powi(d as i32) <= (1u64 << 16) as f64 => {
            let total = (p as u64).pow(d as u32);
            Box::new((1..total).map(move |mut code| {
                let mut acc = DMat::zeros(basis[0].domain(), basis[0].n());
                for b in basis {
                    let c = (code % p as u64) as u32;
                    code /= p as u64;
                    if c != 0 {
                        acc = acc.add(&b.scale_z(&Scalar::Mod(c)));
                    }
                }
                acc
            }))
        }
        _ => Box::new(std::iter::empty()),
    };
    singles.chain(pairs).chain(triples).chain(exhaustive)
}
