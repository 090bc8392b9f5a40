//! The center `Z` of a supported division ring: either the rationals or a
//! prime field. All linear algebra over `Z` goes through [`BaseField`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A scalar of the center. Residues are stored reduced into `[0, p)`; the
/// modulus lives on the [`BaseField`] that performs the arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u32),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u32> {
        match self {
            Scalar::Mod(v) => Some(*v),
            Scalar::Rat(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u32),
}

impl BaseField {
    /// 0 for the rationals.
    pub fn characteristic(self) -> u32 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Rat(BigRational::zero()),
            BaseField::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Rat(BigRational::one()),
            BaseField::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            BaseField::Prime(p) => Scalar::Mod(v.rem_euclid(p as i64) as u32),
        }
    }

    pub fn from_rational(self, r: &BigRational) -> Option<Scalar> {
        match self {
            BaseField::Rationals => Some(Scalar::Rat(r.clone())),
            BaseField::Prime(p) => {
                let reduce = |x: &BigInt| -> u32 {
                    let m = BigInt::from(p);
                    let v = ((x % &m) + &m) % &m;
                    u32::try_from(v).expect("residue fits in u32")
                };
                let num = reduce(r.numer());
                let den = reduce(r.denom());
                let den = self.inv(&Scalar::Mod(den))?;
                Some(self.mul(&Scalar::Mod(num), &den))
            }
        }
    }

    /// Whether `s` is a valid element of this field (right variant, residue in range).
    pub fn owns(self, s: &Scalar) -> bool {
        match (self, s) {
            (BaseField::Rationals, Scalar::Rat(_)) => true,
            (BaseField::Prime(p), Scalar::Mod(v)) => *v < p,
            _ => false,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (BaseField::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 + *y as u64) % p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (BaseField::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (BaseField::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (BaseField::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 * *y as u64) % p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// `acc += a * b`, avoiding a temporary for the rational case.
    pub fn mul_add_assign(self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        match (self, acc, a, b) {
            (BaseField::Rationals, Scalar::Rat(acc), Scalar::Rat(x), Scalar::Rat(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *acc += x * y;
                }
            }
            (BaseField::Prime(p), Scalar::Mod(acc), Scalar::Mod(x), Scalar::Mod(y)) => {
                *acc = ((*acc as u64 + *x as u64 * *y as u64) % p as u64) as u32;
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (BaseField::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            (BaseField::Prime(p), Scalar::Mod(x)) => Some(Scalar::Mod(pow_mod(*x, p - 2, p))),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// All elements of a prime field, in residue order; `None` for the rationals.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            BaseField::Rationals => None,
            BaseField::Prime(p) => Some((0..p).map(Scalar::Mod)),
        }
    }

    /// Small nonzero coefficients used by deterministic element searches:
    /// every nonzero residue for prime fields, `{1, -1}` otherwise.
    pub fn search_coefficients(self) -> Vec<Scalar> {
        match self {
            BaseField::Rationals => vec![self.from_i64(1), self.from_i64(-1)],
            BaseField::Prime(p) => (1..p).map(Scalar::Mod).collect(),
        }
    }
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Formats a rational the way the JSON encoding wants it: `"3"` or `"-3/4"`.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(s.parse().ok()?),
    };
    Some(r)
}
