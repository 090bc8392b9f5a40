//! Primitive idempotents from factored minimal polynomials.
//!
//! If the minimal polynomial of `x` in a corner `eSe` is `prod q_i^{m_i}`
//! with at least two distinct irreducible factors, the Chinese remainder
//! theorem gives orthogonal idempotents `eps_i(x)` summing to `e`. A corner is
//! local once some element's minimal polynomial is a power of a single
//! irreducible whose degree equals the dimension of the residue algebra
//! `eSe / N(eSe)`: then that residue algebra is generated by the image of
//! the element and is a field.

use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::poly::Poly;

use super::radical::corner_nilradical;
use super::{is_commutative, search_elements, Corner, Subalgebra};

pub(crate) enum CornerSplit {
    /// Orthogonal idempotents summing to the corner's unit, at least two.
    Split(Vec<DMat>),
    Local,
}

/// CRT idempotents of `x` relative to `unit`, one per coprime primary part
/// of its minimal polynomial.
fn crt_idempotents(x: &DMat, unit: &DMat, factors: &[(Poly, usize)], mu: &Poly) -> Vec<DMat> {
    let f = mu.field();
    factors
        .iter()
        .map(|(q, m)| {
            let mut big_q = Poly::one(f);
            for _ in 0..*m {
                big_q = big_q.mul(q);
            }
            let rest = mu.div_exact(&big_q);
            let inv = rest.inv_mod(&big_q).expect("primary parts are coprime");
            let eps = rest.mul(&inv).rem(mu);
            x.eval_poly(&eps, unit)
        })
        .collect()
}

pub(crate) fn split_or_certify(c: &Corner) -> Result<CornerSplit> {
    let residue_dim = c.dim() - corner_nilradical(c).dim_z();
    if residue_dim == 1 {
        return Ok(CornerSplit::Local);
    }
    let mut factor_error = None;
    for x in search_elements(&c.basis, c.field()) {
        let mu = x.min_poly_rel(&c.unit);
        let factors = match mu.factor() {
            Ok(fs) => fs,
            Err(e) => {
                factor_error.get_or_insert(e);
                continue;
            }
        };
        if factors.len() >= 2 {
            return Ok(CornerSplit::Split(crt_idempotents(&x, &c.unit, &factors, &mu)));
        }
        if let [(q, _)] = factors.as_slice() {
            if q.degree() == Some(residue_dim) {
                return Ok(CornerSplit::Local);
            }
        }
    }
    Err(factor_error.unwrap_or(Error::WitnessSearchExhausted))
}

/// A complete set of orthogonal primitive idempotents of `S`, summing to
/// `I`, sorted by their flattened coordinates.
pub fn idempotents_via_minpoly(s: &Subalgebra) -> Result<Vec<DMat>> {
    if !is_commutative(s) {
        return Err(Error::NotCommutative);
    }
    let mut pending = vec![s.identity()];
    let mut done = Vec::new();
    while let Some(e) = pending.pop() {
        match split_or_certify(&Corner::cut(s, &e))? {
            CornerSplit::Local => done.push(e),
            CornerSplit::Split(parts) => pending.extend(parts),
        }
    }
    done.sort_by(|a, b| a.flatten().cmp(b.flatten()));
    Ok(done)
}

/// Whether the corner `e S` of an idempotent `e` in `S` is local.
pub fn corner_is_local(s: &Subalgebra, e: &DMat) -> Result<bool> {
    if !s.contains(e) || e.mul(e) != *e {
        return Err(Error::NotInSubalgebra);
    }
    match split_or_certify(&Corner::cut(s, e))? {
        CornerSplit::Local => Ok(true),
        CornerSplit::Split(_) => Ok(false),
    }
}

/// Whether `S` has no idempotents besides `0` and `I`.
///
/// When neither a splitting nor a certificate turns up (a minimal polynomial
/// over `Q` out of factoring range, or an unlucky search), this falls back to
/// checking that every searched element is nilpotent or invertible.
pub fn is_local(s: &Subalgebra) -> Result<bool> {
    if !is_commutative(s) {
        return Err(Error::NotCommutative);
    }
    match split_or_certify(&Corner::whole(s)) {
        Ok(CornerSplit::Local) => Ok(true),
        Ok(CornerSplit::Split(_)) => Ok(false),
        Err(_) => Ok(search_elements(s.basis(), s.field()).all(|x| x.is_nilpotent() || x.is_invertible())),
    }
}
