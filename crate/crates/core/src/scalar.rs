//! Division rings `D` with exact arithmetic: `Q`, `F_p`, and quaternion
//! algebras `(a, b)` over `Q`. Elements are coordinate vectors over the
//! center `Z` in a fixed `Z`-basis of `D` (`{1}` for fields, `{1, i, j, k}`
//! for quaternions).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::field::{is_prime, parse_rational, rational_to_string, BaseField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionParams {
    pub a: BigRational,
    pub b: BigRational,
}

/// A supported division ring together with its center and its designated
/// maximal subfield `L` (`Q(i)` inside quaternions, `D` itself for fields).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rationals,
    Prime(u32),
    Quaternion(Arc<QuaternionParams>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    RationalField,
    PrimeField,
    QuaternionAlgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subset {
    CenterZ,
    SubfieldL,
}

/// Wire form of a domain: `{"kind": "Q" | "Fp" | "quat", "p"?, "a"?, "b"?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

pub fn make_domain(spec: &DomainSpec) -> Result<Domain> {
    match spec.kind.as_str() {
        "Q" => Ok(Domain::Rationals),
        "Fp" => {
            let p = spec
                .p
                .ok_or_else(|| Error::Parse("prime field needs a modulus `p`".into()))?;
            Domain::prime(p)
        }
        "quat" => {
            let parse = |v: &Option<String>| -> Result<BigRational> {
                match v {
                    None => Ok(-BigRational::one()),
                    Some(s) => parse_rational(s)
                        .ok_or_else(|| Error::Parse(format!("bad rational `{s}`"))),
                }
            };
            Domain::quaternion(parse(&spec.a)?, parse(&spec.b)?)
        }
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

impl Domain {
    pub fn prime(p: u64) -> Result<Domain> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Domain::Prime(p as u32))
    }

    /// Hamilton quaternions over `Q`: `(-1, -1)`.
    pub fn hamilton() -> Domain {
        Domain::quaternion(-BigRational::one(), -BigRational::one()).expect("nonzero parameters")
    }

    pub fn quaternion(a: BigRational, b: BigRational) -> Result<Domain> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::UnsupportedKind("quaternion algebra with a zero parameter".into()));
        }
        Ok(Domain::Quaternion(Arc::new(QuaternionParams { a, b })))
    }

    pub fn kind(&self) -> DomainKind {
        match self {
            Domain::Rationals => DomainKind::RationalField,
            Domain::Prime(_) => DomainKind::PrimeField,
            Domain::Quaternion(_) => DomainKind::QuaternionAlgebra,
        }
    }

    pub fn spec(&self) -> DomainSpec {
        match self {
            Domain::Rationals => DomainSpec { kind: "Q".into(), p: None, a: None, b: None },
            Domain::Prime(p) => DomainSpec { kind: "Fp".into(), p: Some(*p as u64), a: None, b: None },
            Domain::Quaternion(q) => DomainSpec {
                kind: "quat".into(),
                p: None,
                a: Some(rational_to_string(&q.a)),
                b: Some(rational_to_string(&q.b)),
            },
        }
    }

    pub fn base_field(&self) -> BaseField {
        match self {
            Domain::Rationals | Domain::Quaternion(_) => BaseField::Rationals,
            Domain::Prime(p) => BaseField::Prime(*p),
        }
    }

    /// `[D : Z]`.
    pub fn z_basis_size(&self) -> usize {
        match self {
            Domain::Quaternion(_) => 4,
            _ => 1,
        }
    }

    /// `[L : Z]`.
    pub fn l_basis_size(&self) -> usize {
        match self {
            Domain::Quaternion(_) => 2,
            _ => 1,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Quaternion(_))
    }

    pub fn zero(&self) -> DElem {
        DElem { coords: smallvec![self.base_field().zero(); self.z_basis_size()] }
    }

    pub fn one(&self) -> DElem {
        self.from_scalar(self.base_field().one())
    }

    pub fn from_i64(&self, v: i64) -> DElem {
        self.from_scalar(self.base_field().from_i64(v))
    }

    /// Embeds a central scalar.
    pub fn from_scalar(&self, s: Scalar) -> DElem {
        let mut e = self.zero();
        e.coords[0] = s;
        e
    }

    /// Builds an element from coordinates in the `Z`-basis.
    pub fn element(&self, coords: &[Scalar]) -> Result<DElem> {
        let e = DElem { coords: coords.iter().cloned().collect() };
        self.check(&e)?;
        Ok(e)
    }

    /// The `k`-th basis element of `D` over `Z` (`0 -> 1, 1 -> i, 2 -> j, 3 -> k`).
    pub fn unit(&self, k: usize) -> DElem {
        let mut e = self.zero();
        e.coords[k] = self.base_field().one();
        e
    }

    pub fn z_basis(&self) -> Vec<DElem> {
        (0..self.z_basis_size()).map(|k| self.unit(k)).collect()
    }

    /// `Z`-basis of `L`: `{1, i}` for quaternions, `{1}` for fields.
    pub fn l_basis(&self) -> Vec<DElem> {
        (0..self.l_basis_size()).map(|k| self.unit(k)).collect()
    }

    pub fn check(&self, x: &DElem) -> Result<()> {
        let f = self.base_field();
        if x.coords.len() != self.z_basis_size() || !x.coords.iter().all(|c| f.owns(c)) {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    pub fn add(&self, x: &DElem, y: &DElem) -> DElem {
        let f = self.base_field();
        DElem { coords: x.coords.iter().zip(&y.coords).map(|(a, b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, x: &DElem, y: &DElem) -> DElem {
        let f = self.base_field();
        DElem { coords: x.coords.iter().zip(&y.coords).map(|(a, b)| f.sub(a, b)).collect() }
    }

    pub fn neg(&self, x: &DElem) -> DElem {
        let f = self.base_field();
        DElem { coords: x.coords.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn mul(&self, x: &DElem, y: &DElem) -> DElem {
        let mut acc = self.zero();
        self.mul_acc(&mut acc.coords, &x.coords, &y.coords);
        acc
    }

    /// Multiplies by a central scalar.
    pub fn scale(&self, s: &Scalar, x: &DElem) -> DElem {
        let f = self.base_field();
        DElem { coords: x.coords.iter().map(|a| f.mul(s, a)).collect() }
    }

    /// `acc += x * y` on raw coordinate slices.
    pub(crate) fn mul_acc(&self, acc: &mut [Scalar], x: &[Scalar], y: &[Scalar]) {
        let f = self.base_field();
        match self {
            Domain::Quaternion(q) => {
                if x.iter().all(Scalar::is_zero) || y.iter().all(Scalar::is_zero) {
                    return;
                }
                let r = |s: &Scalar| s.as_rational().expect("rational coordinate").clone();
                let [x0, x1, x2, x3] = [r(&x[0]), r(&x[1]), r(&x[2]), r(&x[3])];
                let [y0, y1, y2, y3] = [r(&y[0]), r(&y[1]), r(&y[2]), r(&y[3])];
                let (a, b) = (&q.a, &q.b);
                let ab = a * b;
                let out = [
                    &x0 * &y0 + a * &x1 * &y1 + b * &x2 * &y2 - &ab * &x3 * &y3,
                    &x0 * &y1 + &x1 * &y0 - b * &x2 * &y3 + b * &x3 * &y2,
                    &x0 * &y2 + &x2 * &y0 + a * &x1 * &y3 - a * &x3 * &y1,
                    &x0 * &y3 + &x3 * &y0 + &x1 * &y2 - &x2 * &y1,
                ];
                for (slot, v) in acc.iter_mut().zip(out) {
                    *slot = f.add(slot, &Scalar::Rat(v));
                }
            }
            _ => f.mul_add_assign(&mut acc[0], &x[0], &y[0]),
        }
    }

    pub fn conj(&self, x: &DElem) -> DElem {
        match self {
            Domain::Quaternion(_) => {
                let f = self.base_field();
                let mut c = x.clone();
                for s in c.coords.iter_mut().skip(1) {
                    *s = f.neg(s);
                }
                c
            }
            _ => x.clone(),
        }
    }

    /// Reduced norm `x * conj(x)`, a central scalar; `x` itself for fields.
    pub fn norm(&self, x: &DElem) -> Scalar {
        match self {
            Domain::Quaternion(_) => self.mul(x, &self.conj(x)).coords[0].clone(),
            _ => x.coords[0].clone(),
        }
    }

    pub fn inv(&self, x: &DElem) -> Result<DElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.base_field();
        match self {
            Domain::Quaternion(q) => {
                let n = self.norm(x);
                let n_inv = f.inv(&n).ok_or_else(|| Error::SplitAlgebraWitness {
                    a: rational_to_string(&q.a),
                    b: rational_to_string(&q.b),
                })?;
                Ok(self.scale(&n_inv, &self.conj(x)))
            }
            _ => Ok(self.from_scalar(f.inv(&x.coords[0]).expect("nonzero"))),
        }
    }

    pub fn membership(&self, x: &DElem, subset: Subset) -> bool {
        let start = match subset {
            Subset::CenterZ => 1,
            Subset::SubfieldL => self.l_basis_size(),
        };
        x.coords.iter().skip(start).all(Scalar::is_zero)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "Q"),
            Domain::Prime(p) => write!(f, "F{p}"),
            Domain::Quaternion(q) if q.a == -BigRational::one() && q.b == -BigRational::one() => {
                write!(f, "H")
            }
            Domain::Quaternion(q) => {
                write!(f, "quat({},{})", rational_to_string(&q.a), rational_to_string(&q.b))
            }
        }
    }
}

/// Short names: `Q`, `F<p>` (or `Fp<p>`), `H` for Hamilton quaternions,
/// `quat(a,b)` for a general quaternion algebra over `Q`.
impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Domain> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Domain::Rationals);
        }
        if s == "H" || s == "HQ" || s == "H_Q" {
            return Ok(Domain::hamilton());
        }
        if let Some(rest) = s.strip_prefix("quat(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad quaternion domain `{s}`")))?;
            let a = parse_rational(a).ok_or_else(|| Error::Parse(format!("bad rational `{a}`")))?;
            let b = parse_rational(b).ok_or_else(|| Error::Parse(format!("bad rational `{b}`")))?;
            return Domain::quaternion(a, b);
        }
        if let Some(p) = s.strip_prefix("Fp").or_else(|| s.strip_prefix('F')) {
            let p: u64 = p.trim_start_matches('_').parse().map_err(|_| Error::Parse(format!("bad domain `{s}`")))?;
            return Domain::prime(p);
        }
        Err(Error::UnsupportedKind(s.to_string()))
    }
}

/// An element of `D` as coordinates over `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DElem {
    pub(crate) coords: SmallVec<[Scalar; 1]>,
}

impl DElem {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Scalar::is_zero)
    }
}

/// Convenience for tests and builders: quaternion with integer coordinates.
pub fn quat_int(domain: &Domain, coords: [i64; 4]) -> DElem {
    let f = domain.base_field();
    DElem { coords: coords.iter().map(|&c| f.from_i64(c)).collect() }
}

/// Convenience: rational from a ratio of machine integers.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Domain {
        Domain::hamilton()
    }

    #[test]
    fn make_domain_examples() {
        let f2 = make_domain(&DomainSpec { kind: "Fp".into(), p: Some(2), a: None, b: None }).unwrap();
        assert_eq!(f2, Domain::Prime(2));
        assert_eq!(f2.z_basis_size(), 1);
        let hq = make_domain(&DomainSpec {
            kind: "quat".into(),
            p: None,
            a: Some("-1".into()),
            b: Some("-1".into()),
        })
        .unwrap();
        assert_eq!(hq, h());
        assert_eq!((hq.z_basis_size(), hq.l_basis_size()), (4, 2));
        assert_eq!(
            make_domain(&DomainSpec { kind: "Fp".into(), p: Some(4), a: None, b: None }),
            Err(Error::NonPrimeModulus(4))
        );
        assert!(matches!(
            make_domain(&DomainSpec { kind: "octonion".into(), p: None, a: None, b: None }),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn quaternion_relations() {
        let d = h();
        let (i, j, k) = (d.unit(1), d.unit(2), d.unit(3));
        assert_eq!(d.mul(&i, &j), k);
        assert_eq!(d.mul(&j, &i), d.neg(&k));
        assert_eq!(d.mul(&i, &i), d.from_i64(-1));
        assert_eq!(d.mul(&k, &k), d.from_i64(-1));
    }

    #[test]
    fn general_quaternion_relations() {
        let d = Domain::quaternion(ratio(2, 1), ratio(-3, 1)).unwrap();
        let (i, j, k) = (d.unit(1), d.unit(2), d.unit(3));
        assert_eq!(d.mul(&i, &i), d.from_i64(2));
        assert_eq!(d.mul(&j, &j), d.from_i64(-3));
        assert_eq!(d.mul(&k, &k), d.from_i64(6));
        assert_eq!(d.mul(&d.mul(&i, &j), &k), d.mul(&i, &d.mul(&j, &k)));
    }

    #[test]
    fn characteristic_two() {
        let d = Domain::Prime(2);
        assert!(d.add(&d.one(), &d.one()).is_zero());
    }

    #[test]
    fn inverse_examples() {
        let d = h();
        let x = quat_int(&d, [1, 1, 0, 0]);
        let expect = DElem {
            coords: smallvec![
                Scalar::Rat(ratio(1, 2)),
                Scalar::Rat(ratio(-1, 2)),
                Scalar::Rat(ratio(0, 1)),
                Scalar::Rat(ratio(0, 1))
            ],
        };
        assert_eq!(d.inv(&x).unwrap(), expect);
        let f3 = Domain::Prime(3);
        assert_eq!(f3.inv(&f3.from_i64(2)).unwrap(), f3.from_i64(2));
        assert_eq!(Domain::Rationals.inv(&Domain::Rationals.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn split_algebra_is_reported() {
        // (1, 1) is M_2(Q): 1 + i has norm 1 - 1 = 0.
        let d = Domain::quaternion(ratio(1, 1), ratio(1, 1)).unwrap();
        let x = quat_int(&d, [1, 1, 0, 0]);
        assert!(matches!(d.inv(&x), Err(Error::SplitAlgebraWitness { .. })));
    }

    #[test]
    fn membership_examples() {
        let d = h();
        assert!(!d.membership(&d.unit(1), Subset::CenterZ));
        assert!(d.membership(&d.unit(1), Subset::SubfieldL));
        assert!(!d.membership(&d.unit(2), Subset::SubfieldL));
        let f5 = Domain::Prime(5);
        assert!((0..5).all(|v| f5.membership(&f5.from_i64(v), Subset::CenterZ)));
    }

    #[test]
    fn domain_names() {
        for name in ["Q", "F2", "F97", "H", "quat(2,-3)"] {
            let d: Domain = name.parse().unwrap();
            assert_eq!(d.to_string(), name);
        }
        assert!("F4".parse::<Domain>().is_err());
        assert_eq!("Fp5".parse::<Domain>().unwrap(), Domain::Prime(5));
    }

    #[test]
    fn mixed_elements_are_rejected() {
        let d = h();
        assert_eq!(d.check(&Domain::Prime(3).one()), Err(Error::DomainMismatch));
        assert_eq!(Domain::Prime(3).check(&Domain::Rationals.one()), Err(Error::DomainMismatch));
    }
}
