//! Linear algebra over the center `Z`: canonical reduced row echelon forms,
//! kernels and linear dependencies of coordinate vectors.

use crate::field::{BaseField, Scalar};

/// A subspace of `Z^dim` held in reduced row echelon form.
///
/// Rows are sorted by pivot, each pivot entry is 1 and every pivot column is
/// zero outside its row, so two subspaces are equal iff their rows are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Echelon {
    field: BaseField,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: BaseField, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<I, V>(field: BaseField, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut e = Echelon::new(field, dim);
        for v in vectors {
            e.insert(v.as_ref());
        }
        e
    }

    /// The whole space `Z^dim`.
    pub fn full(field: BaseField, dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                v
            })
            .collect();
        Echelon { field, dim, rows, pivots: (0..dim).collect() }
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length does not match ambient dimension");
        let f = self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` in terms of the rows, if `v` lies in the span.
    /// In reduced form these are just the entries of `v` at the pivots.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the rows.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                f.mul_add_assign(o, c, x);
            }
        }
        out
    }

    /// Adds `v` to the span. Returns `false` if it was already there.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero pivot");
        for x in r.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        for r in &other.rows {
            e.insert(r);
        }
        e
    }

    /// `{x : row . x = 0 for every row}`, in canonical form.
    pub fn kernel(&self) -> Echelon {
        let f = self.field;
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.dim).filter(|&c| !is_pivot[c]).map(|free| {
            let mut x = vec![f.zero(); self.dim];
            x[free] = f.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = f.neg(&row[free]);
            }
            x
        });
        Echelon::from_vectors(f, self.dim, basis)
    }

    /// Intersection via the joint kernel of the stacked bases.
    pub fn intersection(&self, other: &Echelon) -> Echelon {
        let f = self.field;
        let (a, b) = (self.rank(), other.rank());
        // Columns of the stacked matrix [U; -W]^T: find (c, d) with cU = dW.
        let mut constraints = Echelon::new(f, a + b);
        for col in 0..self.dim {
            let mut eq = Vec::with_capacity(a + b);
            eq.extend(self.rows.iter().map(|r| r[col].clone()));
            eq.extend(other.rows.iter().map(|r| f.neg(&r[col])));
            constraints.insert(&eq);
        }
        let sols = constraints.kernel();
        Echelon::from_vectors(f, self.dim, sols.rows.iter().map(|s| self.combine(&s[..a])))
    }
}

/// Solution space of the homogeneous system whose equations are `rows`.
pub fn nullspace<V: AsRef<[Scalar]>>(field: BaseField, ncols: usize, rows: &[V]) -> Echelon {
    Echelon::from_vectors(field, ncols, rows).kernel()
}

/// Finds the first linear dependency in a growing sequence of vectors.
///
/// [`push`](Self::push) returns coefficients `c_0, ..., c_k` with `c_k = 1`
/// and `sum c_i v_i = 0` as soon as the `k`-th vector depends on the earlier
/// ones.
pub struct DependencyFinder {
    field: BaseField,
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    count: usize,
}

impl DependencyFinder {
    pub fn new(field: BaseField) -> Self {
        DependencyFinder { field, rows: Vec::new(), count: 0 }
    }

    pub fn push(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let k = self.count;
        self.count += 1;
        let mut v = v.to_vec();
        let mut combo = vec![f.zero(); k + 1];
        combo[k] = f.one();
        for (p, row, rc) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Some(combo),
            Some(p) => {
                let inv = f.inv(&v[p]).expect("nonzero pivot");
                v.iter_mut().for_each(|x| *x = f.mul(x, &inv));
                combo.iter_mut().for_each(|x| *x = f.mul(x, &inv));
                self.rows.push((p, v, combo));
                None
            }
        }
    }
}
