//! Centralizers in `M_n(D)` as `Z`-subspaces.
//!
//! The condition `XG = GX` is `Z`-linear in `X` but not `D`-linear when `D`
//! is noncommutative, so every solve runs over the center with
//! `n^2 * [D:Z]` unknowns.

use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Echelon;
use crate::scalar::Domain;

/// A `Z`-subspace of `M_n(D)`, held as the canonical echelon basis of the
/// flattened coordinate vectors. Equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZSubspace {
    domain: Domain,
    n: usize,
    space: Echelon,
}

impl ZSubspace {
    pub fn zero(domain: &Domain, n: usize) -> ZSubspace {
        ZSubspace { domain: domain.clone(), n, space: Echelon::new(domain.base_field(), Self::ambient(domain, n)) }
    }

    pub fn full(domain: &Domain, n: usize) -> ZSubspace {
        ZSubspace { domain: domain.clone(), n, space: Echelon::full(domain.base_field(), Self::ambient(domain, n)) }
    }

    pub fn span<'a, I>(domain: &Domain, n: usize, mats: I) -> ZSubspace
    where
        I: IntoIterator<Item = &'a DMat>,
    {
        let mut s = ZSubspace::zero(domain, n);
        for m in mats {
            s.insert(m);
        }
        s
    }

    pub(crate) fn from_echelon(domain: &Domain, n: usize, space: Echelon) -> ZSubspace {
        debug_assert_eq!(space.ambient_dim(), Self::ambient(domain, n));
        ZSubspace { domain: domain.clone(), n, space }
    }

    fn ambient(domain: &Domain, n: usize) -> usize {
        n * n * domain.z_basis_size()
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_z(&self) -> usize {
        self.space.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.space
    }

    pub fn basis(&self) -> Vec<DMat> {
        self.space.rows().iter().map(|r| DMat::from_flat_unchecked(&self.domain, self.n, r.clone())).collect()
    }

    pub fn insert(&mut self, m: &DMat) -> bool {
        assert_eq!(m.n(), self.n, "matrix size does not match the subspace");
        self.space.insert(m.flatten())
    }

    pub fn contains(&self, m: &DMat) -> bool {
        m.n() == self.n && self.space.contains(m.flatten())
    }

    /// Coefficients of `m` with respect to [`basis`](Self::basis).
    pub fn coordinates(&self, m: &DMat) -> Option<Vec<Scalar>> {
        self.space.coordinates(m.flatten())
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> DMat {
        DMat::from_flat_unchecked(&self.domain, self.n, self.space.combine(coeffs))
    }

    pub fn is_subspace_of(&self, other: &ZSubspace) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn intersection(&self, other: &ZSubspace) -> ZSubspace {
        ZSubspace::from_echelon(&self.domain, self.n, self.space.intersection(&other.space))
    }

    pub fn sum(&self, other: &ZSubspace) -> ZSubspace {
        ZSubspace::from_echelon(&self.domain, self.n, self.space.sum(&other.space))
    }
}

pub fn commutes(a: &DMat, b: &DMat) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::ShapeMismatch(a.n(), b.n()));
    }
    if a.domain() != b.domain() {
        return Err(Error::DomainMismatch);
    }
    Ok(a.mul(b) == b.mul(a))
}

/// `C_{M_n(D)}(gens)`: the solution space of `XG - GX = 0` for all `G`.
pub fn centralizer_basis(domain: &Domain, n: usize, gens: &[DMat]) -> ZSubspace {
    let f = domain.base_field();
    let zb = domain.z_basis_size();
    let unknowns = n * n * zb;
    let mut constraints = Echelon::new(f, unknowns);
    let units = domain.z_basis();
    for g in gens {
        assert!(g.n() == n && g.domain() == domain, "generator outside M_n(D)");
        // Column t of the map X -> XG - GX, for X = u E_{a,b}.
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(unknowns);
        for a in 0..n {
            for b in 0..n {
                for u in &units {
                    let mut col = vec![f.zero(); unknowns];
                    for j in 0..n {
                        // (u E_ab G)_{a,j} = u G_{b,j}
                        let o = (a * n + j) * zb;
                        domain.mul_acc(&mut col[o..o + zb], u.coords(), g.entry_coords(b, j));
                    }
                    for i in 0..n {
                        // (G u E_ab)_{i,b} = G_{i,a} u
                        let o = (i * n + b) * zb;
                        let mut prod = vec![f.zero(); zb];
                        domain.mul_acc(&mut prod, g.entry_coords(i, a), u.coords());
                        for (c, p) in col[o..o + zb].iter_mut().zip(&prod) {
                            *c = f.sub(c, p);
                        }
                    }
                    columns.push(col);
                }
            }
        }
        for r in 0..unknowns {
            let row: Vec<Scalar> = columns.iter().map(|c| c[r].clone()).collect();
            constraints.insert(&row);
            if constraints.rank() == unknowns {
                break;
            }
        }
        if constraints.rank() == unknowns {
            break;
        }
    }
    ZSubspace::from_echelon(domain, n, constraints.kernel())
}

/// Centralizer of a subspace: centralizing a set is centralizing its `Z`-span.
pub fn centralizer_of_subspace(v: &ZSubspace) -> ZSubspace {
    centralizer_basis(v.domain(), v.n(), &v.basis())
}

pub fn bicommutant(domain: &Domain, n: usize, gens: &[DMat]) -> ZSubspace {
    centralizer_of_subspace(&centralizer_basis(domain, n, gens))
}
