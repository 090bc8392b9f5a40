//! Univariate polynomials over `Z` and the factorization needed to split
//! minimal polynomials into coprime parts.
//!
//! Over `F_p` factorization is complete (radical + Berlekamp). Over `Q` it
//! handles rational roots plus Kronecker's method for the remaining part up
//! to degree 8.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{BaseField, Scalar};
use crate::linalg::Echelon;

/// Dense polynomial, coefficients from the constant term upwards, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: BaseField,
    coeffs: Vec<Scalar>,
}

const KRONECKER_MAX_DEGREE: usize = 8;
const KRONECKER_MAX_CANDIDATES: usize = 2_000_000;
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

impl Poly {
    pub fn new(field: BaseField, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: BaseField, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: BaseField) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: BaseField) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: BaseField, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    /// `x - c`.
    pub fn linear(field: BaseField, c: &Scalar) -> Self {
        Poly::new(field, vec![field.neg(c), field.one()])
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(Scalar::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero lead");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|x| f.mul(x, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|k| f.add(&self.coeff(k), &other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|k| f.sub(&self.coeff(k), &other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut out[i + j], a, b);
            }
        }
        Poly::new(f, out)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg();
        let lead_inv = f.inv(d.lead().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, dj));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        Poly::new(
            f,
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| f.mul(&f.from_i64(k as i64), c)).collect(),
        )
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(l).unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Distinct monic irreducible factors with their multiplicities, sorted
    /// by degree and then coefficients.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let f = self.monic();
        if f.deg() == 0 {
            return Ok(Vec::new());
        }
        let mut irreducibles = match self.field {
            BaseField::Prime(p) => {
                let rad = radical_fp(&f, p);
                berlekamp(&rad, p)
            }
            BaseField::Rationals => {
                let rad = f.div_exact(&f.gcd(&f.derivative())).monic();
                factor_squarefree_q(&rad)?
            }
        };
        irreducibles.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        Ok(irreducibles
            .into_iter()
            .map(|q| {
                let mut rest = f.clone();
                let mut mult = 0;
                while q.divides(&rest) {
                    rest = rest.div_exact(&q);
                    mult += 1;
                }
                (q, mult)
            })
            .collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Product of the distinct irreducible factors of a monic `f` over `F_p`.
fn radical_fp(f: &Poly, p: u32) -> Poly {
    let field = f.field;
    if f.deg() == 0 {
        return Poly::one(field);
    }
    let d = f.derivative();
    if d.is_zero() {
        // f(x) = h(x)^p with h obtained by taking every p-th coefficient.
        let h = Poly::new(field, f.coeffs.iter().step_by(p as usize).cloned().collect());
        return radical_fp(&h.monic(), p);
    }
    let c = f.gcd(&d);
    let w = f.div_exact(&c).monic();
    let mut rest = c;
    loop {
        let g = rest.gcd(&w);
        if g.deg() == 0 {
            break;
        }
        rest = rest.div_exact(&g).monic();
    }
    if rest.deg() == 0 {
        w
    } else {
        let h = Poly::new(field, rest.coeffs.iter().step_by(p as usize).cloned().collect());
        w.mul(&radical_fp(&h.monic(), p))
    }
}

/// Berlekamp's algorithm: splits a squarefree monic polynomial over `F_p`
/// into its irreducible factors.
fn berlekamp(g: &Poly, p: u32) -> Vec<Poly> {
    let field = g.field;
    let n = g.deg();
    if n <= 1 {
        return if n == 1 { vec![g.clone()] } else { Vec::new() };
    }
    let x = Poly::new(field, vec![field.zero(), field.one()]);
    let xp = x.pow_mod(p as u64, g);
    // Row k holds x^{pk} mod g; the fixed space of Frobenius is the left
    // kernel of (Q - I).
    let mut q_rows = Vec::with_capacity(n);
    let mut cur = Poly::one(field);
    for _ in 0..n {
        q_rows.push(cur.clone());
        cur = cur.mul(&xp).rem(g);
    }
    let mut equations = Echelon::new(field, n);
    for col in 0..n {
        let eq: Vec<Scalar> = (0..n)
            .map(|k| {
                let mut v = q_rows[k].coeff(col);
                if k == col {
                    v = field.sub(&v, &field.one());
                }
                v
            })
            .collect();
        equations.insert(&eq);
    }
    let fixed = equations.kernel();
    let r = fixed.rank();
    let mut factors = vec![g.clone()];
    for v in fixed.rows() {
        if factors.len() == r {
            break;
        }
        let v = Poly::new(field, v.clone());
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.deg() == 1 {
                next.push(h);
                continue;
            }
            let mut pending = vec![h];
            for s in 0..p {
                let shifted = v.sub(&Poly::constant(field, Scalar::Mod(s)));
                let mut remaining = Vec::new();
                for h in pending {
                    let d = h.gcd(&shifted);
                    if d.deg() > 0 && d.deg() < h.deg() {
                        remaining.push(h.div_exact(&d).monic());
                        remaining.push(d);
                    } else {
                        remaining.push(h);
                    }
                }
                pending = remaining;
            }
            next.extend(pending);
        }
        factors = next;
    }
    factors.into_iter().map(|h| h.monic()).collect()
}

fn rat_of(s: &Scalar) -> &BigRational {
    s.as_rational().expect("rational coefficient")
}

/// Scales a rational polynomial to a primitive integer one.
fn primitive_integer(f: &Poly) -> Vec<BigInt> {
    let den = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(rat_of(c).denom()));
    let ints: Vec<BigInt> = f.coeffs.iter().map(|c| (rat_of(c) * BigRational::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT).ok_or_else(|| {
        Error::FactorizationUnavailable(format!("coefficient {n} too large for divisor enumeration"))
    })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigInt::from).collect())
}

fn factor_squarefree_q(f: &Poly) -> Result<Vec<Poly>> {
    let field = f.field;
    let mut out = Vec::new();
    let mut rest = f.clone();
    // Rational roots.
    loop {
        if rest.deg() == 0 {
            return Ok(out);
        }
        if rest.coeff(0).is_zero() {
            let x = Poly::linear(field, &field.zero());
            out.push(x.clone());
            rest = rest.div_exact(&x);
            continue;
        }
        let ints = primitive_integer(&rest);
        let num_divs = positive_divisors(&ints[0])?;
        let den_divs = positive_divisors(ints.last().unwrap())?;
        let mut found = None;
        'search: for a in &num_divs {
            for b in &den_divs {
                for sign in [1, -1] {
                    let r = Scalar::Rat(BigRational::new(a * BigInt::from(sign), b.clone()));
                    if rest.eval(&r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                let lin = Poly::linear(field, &r);
                out.push(lin.clone());
                rest = rest.div_exact(&lin).monic();
            }
            None => break,
        }
    }
    out.extend(kronecker(&rest)?);
    Ok(out)
}

/// Splits a monic rational polynomial without rational roots into
/// irreducible factors by Kronecker's interpolation search.
fn kronecker(f: &Poly) -> Result<Vec<Poly>> {
    let field = f.field;
    let n = f.deg();
    if n <= 3 {
        return Ok(vec![f.clone()]);
    }
    if n > KRONECKER_MAX_DEGREE {
        return Err(Error::FactorizationUnavailable(format!(
            "degree {n} irreducibility test over Q exceeds the supported degree {KRONECKER_MAX_DEGREE}"
        )));
    }
    let ints = primitive_integer(f);
    let int_poly = Poly::new(field, ints.iter().map(|c| Scalar::Rat(BigRational::from_integer(c.clone()))).collect());
    let points: Vec<i64> = (0..=n as i64 / 2 + 1).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).collect();
    for m in 2..=n / 2 {
        let xs: Vec<i64> = points[..=m].to_vec();
        let mut divisor_sets = Vec::with_capacity(m + 1);
        let mut total: usize = 1;
        for &x in &xs {
            let v = rat_of(&int_poly.eval(&field.from_i64(x))).to_integer();
            let ds = positive_divisors(&v)?;
            let signed: Vec<BigInt> = ds.iter().flat_map(|d| [d.clone(), -d.clone()]).collect();
            total = total.saturating_mul(signed.len());
            divisor_sets.push(signed);
        }
        if total > KRONECKER_MAX_CANDIDATES {
            return Err(Error::FactorizationUnavailable(format!(
                "Kronecker search for a degree-{m} factor needs {total} candidates"
            )));
        }
        let mut idx = vec![0usize; m + 1];
        loop {
            let ys: Vec<&BigInt> = idx.iter().zip(&divisor_sets).map(|(&i, s)| &s[i]).collect();
            if let Some(cand) = interpolate(field, &xs, &ys) {
                if cand.degree() == Some(m)
                    && cand.coeffs.iter().all(|c| rat_of(c).is_integer())
                    && cand.divides(&int_poly)
                {
                    let g = cand.monic();
                    let h = f.div_exact(&g).monic();
                    let mut out = kronecker(&g)?;
                    out.extend(kronecker(&h)?);
                    return Ok(out);
                }
            }
            let mut k = 0;
            loop {
                if k > m {
                    break;
                }
                idx[k] += 1;
                if idx[k] < divisor_sets[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k > m {
                break;
            }
        }
    }
    Ok(vec![f.clone()])
}

fn interpolate(field: BaseField, xs: &[i64], ys: &[&BigInt]) -> Option<Poly> {
    let mut acc = Poly::zero(field);
    for (i, (&xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Poly::one(field);
        let mut denom = BigInt::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly::linear(field, &field.from_i64(xj)));
                denom *= BigInt::from(xi - xj);
            }
        }
        let c = Scalar::Rat(BigRational::new((*yi).clone(), denom));
        acc = acc.add(&basis.scale(&c));
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> Poly {
        Poly::from_i64(BaseField::Rationals, coeffs)
    }

    fn fp(p: u32, coeffs: &[i64]) -> Poly {
        Poly::from_i64(BaseField::Prime(p), coeffs)
    }

    fn product(factors: &[(Poly, usize)], field: BaseField) -> Poly {
        factors.iter().fold(Poly::one(field), |acc, (q, m)| (0..*m).fold(acc, |a, _| a.mul(q)))
    }

    #[test]
    fn divrem_reconstructs() {
        let a = q(&[1, 2, 3, 4]);
        let b = q(&[1, 1]);
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = q(&[-1, 0, 1]);
        let b = q(&[-2, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, q(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn factor_over_f2() {
        // x^2 + x = x (x + 1)
        let f = fp(2, &[0, 1, 1]);
        let fs = f.factor().unwrap();
        assert_eq!(fs, vec![(fp(2, &[0, 1]), 1), (fp(2, &[1, 1]), 1)]);
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
        let g = fp(2, &[1, 0, 1, 0, 1]);
        assert_eq!(g.factor().unwrap(), vec![(fp(2, &[1, 1, 1]), 2)]);
    }

    #[test]
    fn berlekamp_splits_equal_degree_factors() {
        // x^4 + 1 over F_3 = (x^2 + x + 2)(x^2 + 2x + 2)
        let f = fp(3, &[1, 0, 0, 0, 1]);
        let fs = f.factor().unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(q, m)| q.degree() == Some(2) && *m == 1));
        assert_eq!(product(&fs, BaseField::Prime(3)), f);
    }

    #[test]
    fn frobenius_power_radical() {
        // (x + 1)^6 over F_3 is a perfect cube of a square
        let lin = fp(3, &[1, 1]);
        let f = (0..6).fold(Poly::one(BaseField::Prime(3)), |a, _| a.mul(&lin));
        assert_eq!(f.factor().unwrap(), vec![(lin, 6)]);
    }

    #[test]
    fn factor_over_q_with_roots_and_quadratics() {
        // (x^2 + 1)^2 (x - 1/2) x
        let f = q(&[1, 0, 1]).mul(&q(&[1, 0, 1])).mul(&Poly::linear(BaseField::Rationals, &Scalar::Rat(BigRational::new(1.into(), 2.into())))).mul(&q(&[0, 1]));
        let fs = f.factor().unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs, BaseField::Rationals), f.monic());
        assert!(fs.contains(&(q(&[1, 0, 1]), 2)));
    }

    #[test]
    fn kronecker_finds_quadratic_pairs() {
        // (x^2 + 1)(x^2 + 2) has no rational roots but splits.
        let f = q(&[1, 0, 1]).mul(&q(&[2, 0, 1]));
        let fs = f.factor().unwrap();
        assert_eq!(fs, vec![(q(&[1, 0, 1]), 1), (q(&[2, 0, 1]), 1)]);
        // x^4 + 1 is irreducible over Q.
        assert_eq!(q(&[1, 0, 0, 0, 1]).factor().unwrap(), vec![(q(&[1, 0, 0, 0, 1]), 1)]);
    }

    #[test]
    fn degree_limit_is_reported() {
        let f = q(&[3, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(f.factor(), Err(Error::FactorizationUnavailable(_))));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(fp(2, &[0, 1, 1]).to_string(), "x^2 + x");
    }
}
