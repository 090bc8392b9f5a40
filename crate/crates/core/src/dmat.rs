//! Matrices over a division ring `D`.
//!
//! `D^n` is a left vector space of row vectors and a matrix acts on the
//! right, `v -> vA`, which identifies `M_n(D)` with `End_D(D^n)`. Row
//! operations therefore use left scalar multiplication only, and "rank"
//! always means left row rank.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::DependencyFinder;
use crate::poly::Poly;
use crate::scalar::{DElem, Domain};

/// An `n x n` matrix over `D`, stored as the flattened `Z`-coordinates of its
/// entries in row-major order (`zBasisSize` coordinates per entry).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DMat {
    domain: Domain,
    n: usize,
    data: Vec<Scalar>,
}

/// Which special matrix [`builder`] produces. Indices are 1-based, as in
/// `E_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builder {
    Identity,
    Elementary(usize, usize),
    /// `E_{1,2} + E_{2,3} + ... + E_{n-1,n}`.
    JordanNilpotent,
    /// `E_{1,n}`.
    Corner,
}

pub fn builder(domain: &Domain, n: usize, which: Builder) -> Result<DMat> {
    match which {
        Builder::Identity => Ok(DMat::identity(domain, n)),
        Builder::Elementary(i, j) => DMat::elementary(domain, n, i, j),
        Builder::JordanNilpotent => Ok(DMat::jordan_nilpotent(domain, n)),
        Builder::Corner => DMat::elementary(domain, n, 1, n),
    }
}

#[derive(Clone, Debug)]
pub enum MatOp<'a> {
    Add,
    Mul,
    ScaleLeft(&'a DElem),
    Neg,
    Pow(u32),
}

/// Ring operations on `M_n(D)` with shape and domain checks.
pub fn mat_op(op: MatOp<'_>, a: &DMat, b: Option<&DMat>) -> Result<DMat> {
    let other = || b.ok_or(Error::ShapeMismatch(a.n, 0));
    match op {
        MatOp::Add => a.checked(other()?).map(|b| a.add(b)),
        MatOp::Mul => a.checked(other()?).map(|b| a.mul(b)),
        MatOp::ScaleLeft(d) => {
            a.domain.check(d)?;
            Ok(a.scale_left(d))
        }
        MatOp::Neg => Ok(a.neg()),
        MatOp::Pow(k) => Ok(a.pow(k)),
    }
}

impl DMat {
    pub fn zeros(domain: &Domain, n: usize) -> DMat {
        assert!(n >= 1, "matrices are at least 1x1");
        let zero = domain.base_field().zero();
        DMat { domain: domain.clone(), n, data: vec![zero; n * n * domain.z_basis_size()] }
    }

    pub fn identity(domain: &Domain, n: usize) -> DMat {
        DMat::scalar(domain, n, &domain.one())
    }

    /// `d * I`.
    pub fn scalar(domain: &Domain, n: usize, d: &DElem) -> DMat {
        let mut m = DMat::zeros(domain, n);
        for i in 0..n {
            m.set(i, i, d);
        }
        m
    }

    /// `E_{i,j}` with 1-based indices.
    pub fn elementary(domain: &Domain, n: usize, i: usize, j: usize) -> Result<DMat> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        let mut m = DMat::zeros(domain, n);
        m.set(i - 1, j - 1, &domain.one());
        Ok(m)
    }

    pub fn jordan_nilpotent(domain: &Domain, n: usize) -> DMat {
        let mut m = DMat::zeros(domain, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, &domain.one());
        }
        m
    }

    pub fn corner(domain: &Domain, n: usize) -> DMat {
        DMat::elementary(domain, n, 1, n).expect("corner index is in range")
    }

    pub fn from_entries(domain: &Domain, entries: &[Vec<DElem>]) -> Result<DMat> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ShapeMismatch(0, 1));
        }
        let mut m = DMat::zeros(domain, n);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(row.len(), n));
            }
            for (j, e) in row.iter().enumerate() {
                domain.check(e)?;
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    pub fn unflatten(v: &[Scalar], domain: &Domain, n: usize) -> Result<DMat> {
        let expected = n * n * domain.z_basis_size();
        if v.len() != expected {
            return Err(Error::LengthMismatch { got: v.len(), expected });
        }
        let f = domain.base_field();
        if !v.iter().all(|s| f.owns(s)) {
            return Err(Error::DomainMismatch);
        }
        Ok(DMat { domain: domain.clone(), n, data: v.to_vec() })
    }

    pub(crate) fn from_flat_unchecked(domain: &Domain, n: usize, data: Vec<Scalar>) -> DMat {
        debug_assert_eq!(data.len(), n * n * domain.z_basis_size());
        DMat { domain: domain.clone(), n, data }
    }

    pub fn flatten(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Scalar> {
        self.data
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn zb(&self) -> usize {
        self.domain.z_basis_size()
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.n + j) * self.zb()
    }

    pub(crate) fn entry_coords(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.zb()]
    }

    /// Entry at 0-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> DElem {
        self.domain.element(self.entry_coords(i, j)).expect("stored entries are valid")
    }

    pub fn set(&mut self, i: usize, j: usize, d: &DElem) {
        let o = self.offset(i, j);
        let zb = self.zb();
        self.data[o..o + zb].clone_from_slice(d.coords());
    }

    pub fn rows(&self) -> Vec<Vec<DElem>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == DMat::identity(&self.domain, self.n)
    }

    fn checked<'a>(&self, other: &'a DMat) -> Result<&'a DMat> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch(self.n, other.n));
        }
        Ok(other)
    }

    fn assert_compatible(&self, other: &DMat) {
        assert!(self.n == other.n && self.domain == other.domain, "incompatible matrices");
    }

    pub fn add(&self, other: &DMat) -> DMat {
        self.assert_compatible(other);
        let f = self.domain.base_field();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        DMat { domain: self.domain.clone(), n: self.n, data }
    }

    pub fn sub(&self, other: &DMat) -> DMat {
        self.assert_compatible(other);
        let f = self.domain.base_field();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        DMat { domain: self.domain.clone(), n: self.n, data }
    }

    pub fn neg(&self) -> DMat {
        let f = self.domain.base_field();
        DMat { domain: self.domain.clone(), n: self.n, data: self.data.iter().map(|a| f.neg(a)).collect() }
    }

    /// Multiplication by a central scalar.
    pub fn scale_z(&self, s: &Scalar) -> DMat {
        let f = self.domain.base_field();
        DMat { domain: self.domain.clone(), n: self.n, data: self.data.iter().map(|a| f.mul(s, a)).collect() }
    }

    /// `d * A`: every entry multiplied by `d` on the left.
    pub fn scale_left(&self, d: &DElem) -> DMat {
        let mut out = DMat::zeros(&self.domain, self.n);
        let zb = self.zb();
        for (dst, src) in out.data.chunks_mut(zb).zip(self.data.chunks(zb)) {
            self.domain.mul_acc(dst, d.coords(), src);
        }
        out
    }

    pub fn mul(&self, other: &DMat) -> DMat {
        self.assert_compatible(other);
        let n = self.n;
        let zb = self.zb();
        let mut out = DMat::zeros(&self.domain, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry_coords(i, k);
                if a.iter().all(Scalar::is_zero) {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry_coords(k, j);
                    let o = (i * n + j) * zb;
                    self.domain.mul_acc(&mut out.data[o..o + zb], a, b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> DMat {
        let mut acc = DMat::identity(&self.domain, self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn commutator(&self, other: &DMat) -> DMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Nilpotency index is at most `n` in `M_n(D)`, so `A^n = 0` decides it.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n as u32).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// `P A P^{-1}`: the matrix of `A` in the basis given by the rows of `P`.
    pub fn conjugate(&self, p: &DMat, p_inv: &DMat) -> DMat {
        p.mul(self).mul(p_inv)
    }

    /// Square block starting at 0-based `(start, start)`.
    pub fn block(&self, start: usize, size: usize) -> DMat {
        let mut out = DMat::zeros(&self.domain, size);
        for i in 0..size {
            for j in 0..size {
                let o = out.offset(i, j);
                let zb = self.zb();
                out.data[o..o + zb].clone_from_slice(self.entry_coords(start + i, start + j));
            }
        }
        out
    }

    /// Whether every entry outside the two diagonal blocks split at `r` is zero.
    pub fn is_block_diagonal(&self, r: usize) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| (i < r) == (j < r) || self.entry_coords(i, j).iter().all(Scalar::is_zero))
        })
    }

    pub fn block_diag(a: &DMat, b: &DMat) -> DMat {
        assert_eq!(a.domain, b.domain);
        let n = a.n + b.n;
        let zb = a.zb();
        let mut out = DMat::zeros(&a.domain, n);
        for (src, shift) in [(a, 0), (b, a.n)] {
            for i in 0..src.n {
                for j in 0..src.n {
                    let o = out.offset(i + shift, j + shift);
                    out.data[o..o + zb].clone_from_slice(src.entry_coords(i, j));
                }
            }
        }
        out
    }

    pub fn row_reduce(&self) -> RowReduction {
        let mut rows = self.rows();
        let rank = rref(&self.domain, &mut rows, self.n);
        rows.truncate(rank);
        RowReduction { echelon: RowSpace { domain: self.domain.clone(), n: self.n, basis: rows }, rank }
    }

    /// Left kernel `{v : vA = 0}` and image (left row space).
    pub fn kernel_image(&self) -> (RowSpace, RowSpace) {
        let kernel = left_kernel(&self.domain, &self.rows(), self.n);
        let image = self.row_reduce().echelon;
        (RowSpace::from_vectors(&self.domain, self.n, kernel), image)
    }

    /// Two-sided inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<DMat> {
        let d = &self.domain;
        let n = self.n;
        let mut rows: Vec<Vec<DElem>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { d.one() } else { d.zero() }));
                r
            })
            .collect();
        if rref(d, &mut rows, n) < n {
            return Err(Error::Singular);
        }
        let right: Vec<Vec<DElem>> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        DMat::from_entries(d, &right)
    }

    /// Minimal polynomial over the center `Z`.
    pub fn min_poly_over_z(&self) -> Poly {
        self.min_poly_rel(&DMat::identity(&self.domain, self.n))
    }

    /// Minimal polynomial of `self` in the algebra with unit `unit` (an
    /// idempotent with `unit * self = self`): the constant term stands for a
    /// multiple of `unit`.
    pub fn min_poly_rel(&self, unit: &DMat) -> Poly {
        let f = self.domain.base_field();
        let mut finder = DependencyFinder::new(f);
        let mut power = unit.clone();
        loop {
            if let Some(c) = finder.push(power.flatten()) {
                return Poly::new(f, c);
            }
            power = power.mul(self);
        }
    }

    /// `p(A)` with the constant term read as a multiple of `unit`.
    pub fn eval_poly(&self, p: &Poly, unit: &DMat) -> DMat {
        let mut acc = DMat::zeros(&self.domain, self.n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&unit.scale_z(c));
        }
        acc
    }
}

impl fmt::Display for DMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    let c = self.entry_coords(i, j);
                    if c.len() == 1 {
                        c[0].to_string()
                    } else {
                        format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    }
                })
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RowReduction {
    pub echelon: RowSpace,
    pub rank: usize,
}

/// A left subspace of `D^n` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowSpace {
    domain: Domain,
    n: usize,
    basis: Vec<Vec<DElem>>,
}

impl RowSpace {
    pub fn from_vectors(domain: &Domain, n: usize, vectors: Vec<Vec<DElem>>) -> RowSpace {
        let mut rows = vectors;
        let rank = rref(domain, &mut rows, n);
        rows.truncate(rank);
        RowSpace { domain: domain.clone(), n, basis: rows }
    }

    pub fn whole(domain: &Domain, n: usize) -> RowSpace {
        DMat::identity(domain, n).row_reduce().echelon
    }

    pub fn basis(&self) -> &[Vec<DElem>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[DElem]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(&self.domain, &mut rows, self.n) == self.basis.len()
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        RowSpace::from_vectors(&self.domain, self.n, rows)
    }

    /// `{cU : cU = dW}` from the left kernel of the stacked bases.
    pub fn intersection(&self, other: &RowSpace) -> RowSpace {
        let d = &self.domain;
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let deps = left_kernel(d, &stacked, self.n);
        let u = self.basis.len();
        let vectors = deps
            .into_iter()
            .map(|c| {
                let mut v = vec![d.zero(); self.n];
                for (ci, row) in c[..u].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = d.add(x, &d.mul(ci, y));
                    }
                }
                v
            })
            .collect();
        RowSpace::from_vectors(d, self.n, vectors)
    }
}

/// In-place reduced row echelon form on the first `ncols` columns using left
/// row operations; further columns ride along. Returns the rank. Pivot rows
/// are the lowest-index candidates and are normalised to 1.
fn rref(d: &Domain, rows: &mut [Vec<DElem>], ncols: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = d.inv(&rows[pivot_row][col]).expect("nonzero pivot of a division ring");
        for x in rows[pivot_row].iter_mut() {
            *x = d.mul(&inv, x);
        }
        let pivot = rows[pivot_row].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == pivot_row || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x = d.sub(x, &d.mul(&c, y));
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// Basis of `{c : sum c_i rows_i = 0}`.
fn left_kernel(d: &Domain, rows: &[Vec<DElem>], ncols: usize) -> Vec<Vec<DElem>> {
    let m = rows.len();
    let mut aug: Vec<Vec<DElem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..m).map(|j| if i == j { d.one() } else { d.zero() }));
            r
        })
        .collect();
    let rank = rref(d, &mut aug, ncols);
    aug.into_iter().skip(rank).map(|r| r[ncols..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::quat_int;

    fn f2() -> Domain {
        Domain::Prime(2)
    }

    fn h() -> Domain {
        Domain::hamilton()
    }

    fn int_mat(d: &Domain, rows: &[&[i64]]) -> DMat {
        let entries: Vec<Vec<DElem>> = rows.iter().map(|r| r.iter().map(|&x| d.from_i64(x)).collect()).collect();
        DMat::from_entries(d, &entries).unwrap()
    }

    #[test]
    fn builders() {
        assert_eq!(builder(&f2(), 2, Builder::JordanNilpotent).unwrap(), int_mat(&f2(), &[&[0, 1], &[0, 0]]));
        let c = builder(&h(), 3, Builder::Corner).unwrap();
        assert_eq!(c, DMat::elementary(&h(), 3, 1, 3).unwrap());
        assert!(c.entry(0, 2).is_one());
        assert!(DMat::jordan_nilpotent(&Domain::Rationals, 1).is_zero());
        assert_eq!(
            builder(&f2(), 2, Builder::Elementary(3, 1)),
            Err(Error::IndexOutOfRange { i: 3, j: 1, n: 2 })
        );
    }

    #[test]
    fn products_of_band_and_corner() {
        let q = Domain::Rationals;
        let n = DMat::jordan_nilpotent(&q, 3);
        assert_eq!(n.pow(2), DMat::corner(&q, 3));
        let m = DMat::corner(&q, 3);
        assert!(n.mul(&m).is_zero());
        assert!(m.mul(&n).is_zero());
        let d = h();
        let i_n = DMat::jordan_nilpotent(&d, 2).scale_left(&d.unit(1));
        assert!(i_n.mul(&i_n).is_zero());
    }

    #[test]
    fn mat_op_checks() {
        let a = DMat::identity(&f2(), 2);
        let b = DMat::identity(&f2(), 3);
        assert_eq!(mat_op(MatOp::Add, &a, Some(&b)), Err(Error::ShapeMismatch(2, 3)));
        let c = DMat::identity(&Domain::Prime(3), 2);
        assert_eq!(mat_op(MatOp::Mul, &a, Some(&c)), Err(Error::DomainMismatch));
        assert!(mat_op(MatOp::Pow(0), &a, None).unwrap().is_identity());
        assert_eq!(mat_op(MatOp::ScaleLeft(&h().unit(1)), &a, None), Err(Error::DomainMismatch));
    }

    #[test]
    fn ranks() {
        assert_eq!(DMat::jordan_nilpotent(&Domain::Rationals, 3).rank(), 2);
        assert_eq!(DMat::corner(&h(), 3).rank(), 1);
    }

    /// Independent 2x2 criterion: rank < 2 iff one row is a left multiple of
    /// the other (or zero).
    fn rank2_oracle(d: &Domain, a: &DMat) -> usize {
        let r0 = [a.entry(0, 0), a.entry(0, 1)];
        let r1 = [a.entry(1, 0), a.entry(1, 1)];
        let zero = |r: &[DElem; 2]| r.iter().all(DElem::is_zero);
        if zero(&r0) && zero(&r1) {
            return 0;
        }
        if zero(&r0) || zero(&r1) {
            return 1;
        }
        let k = r0.iter().position(|x| !x.is_zero()).unwrap();
        if r1[k].is_zero() {
            return 2;
        }
        // lambda * r0 = r1 forces lambda = r1[k] r0[k]^{-1}
        let lambda = d.mul(&r1[k], &d.inv(&r0[k]).unwrap());
        if (0..2).all(|c| d.mul(&lambda, &r0[c]) == r1[c]) {
            1
        } else {
            2
        }
    }

    #[test]
    fn quaternion_rank_matches_oracle() {
        let d = h();
        let (i, j, k) = (d.unit(1), d.unit(2), d.unit(3));
        let a = DMat::from_entries(&d, &[vec![i.clone(), j.clone()], vec![k.clone(), d.from_i64(-1)]]).unwrap();
        // The only candidate multiplier is k i^{-1} = -j, and -j (i, j) = (k, 1).
        let expected = rank2_oracle(&d, &a);
        assert_eq!(a.rank(), expected);
        assert_eq!(expected, 2);
        let b = DMat::from_entries(&d, &[vec![i.clone(), j.clone()], vec![k.clone(), d.from_i64(1)]]).unwrap();
        assert_eq!(rank2_oracle(&d, &b), 1);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn kernel_and_image() {
        let q = Domain::Rationals;
        let a = int_mat(&q, &[&[1, 0], &[0, 0]]);
        let (ker, im) = a.kernel_image();
        assert_eq!(ker.basis(), &[vec![q.zero(), q.one()]]);
        assert_eq!(im.basis(), &[vec![q.one(), q.zero()]]);

        let n = DMat::jordan_nilpotent(&q, 3);
        let (ker, im) = n.kernel_image();
        assert_eq!((ker.dim(), im.dim()), (1, 2));
        assert_eq!(ker.intersection(&im).dim(), 1);

        let (ker, im) = DMat::identity(&h(), 3).kernel_image();
        assert_eq!((ker.dim(), im.dim()), (0, 3));
    }

    #[test]
    fn inverses() {
        let d = f2();
        let m = DMat::identity(&d, 2).add(&DMat::jordan_nilpotent(&d, 2));
        assert_eq!(m.inverse().unwrap(), m);
        let hq = h();
        let diag = DMat::from_entries(&hq, &[vec![hq.unit(1), hq.zero()], vec![hq.zero(), hq.unit(2)]]).unwrap();
        let expect = DMat::from_entries(
            &hq,
            &[vec![hq.neg(&hq.unit(1)), hq.zero()], vec![hq.zero(), hq.neg(&hq.unit(2))]],
        )
        .unwrap();
        assert_eq!(diag.inverse().unwrap(), expect);
        assert_eq!(DMat::elementary(&Domain::Rationals, 2, 1, 2).unwrap().inverse(), Err(Error::Singular));
    }

    #[test]
    fn flatten_examples() {
        let d = f2();
        let id = DMat::identity(&d, 2);
        assert_eq!(id.flatten(), &[Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(0), Scalar::Mod(1)]);
        let hq = h();
        let i1 = DMat::scalar(&hq, 1, &hq.unit(1));
        assert_eq!(i1.flatten(), hq.unit(1).coords());
        assert_eq!(
            DMat::unflatten(&[Scalar::Mod(1)], &d, 2),
            Err(Error::LengthMismatch { got: 1, expected: 4 })
        );
    }

    #[test]
    fn minimal_polynomials() {
        let q = Domain::Rationals;
        assert_eq!(DMat::jordan_nilpotent(&q, 3).min_poly_over_z(), Poly::from_i64(q.base_field(), &[0, 0, 0, 1]));
        let d = f2();
        let e = int_mat(&d, &[&[1, 0], &[0, 0]]);
        assert_eq!(e.min_poly_over_z(), Poly::from_i64(d.base_field(), &[0, 1, 1]));
        let hq = h();
        let i1 = DMat::scalar(&hq, 1, &hq.unit(1));
        assert_eq!(i1.min_poly_over_z(), Poly::from_i64(hq.base_field(), &[1, 0, 1]));
        let x = DMat::scalar(&hq, 2, &quat_int(&hq, [1, 1, 1, 0]));
        let p = x.min_poly_over_z();
        assert!(x.eval_poly(&p, &DMat::identity(&hq, 2)).is_zero());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn block_helpers() {
        let q = Domain::Rationals;
        let a = int_mat(&q, &[&[1, 2], &[3, 4]]);
        let b = int_mat(&q, &[&[5]]);
        let m = DMat::block_diag(&a, &b);
        assert!(m.is_block_diagonal(2));
        assert!(!m.is_block_diagonal(1));
        assert_eq!(m.block(0, 2), a);
        assert_eq!(m.block(2, 1), b);
    }
}
