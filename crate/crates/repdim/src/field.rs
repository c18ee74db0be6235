//! Exact coefficient fields: the rationals and prime fields F_p.
//!
//! All arithmetic in this crate is exact; rank decisions are never made on
//! floating point. Rationals are kept in an i64/i64 fast path and promoted to
//! `num::BigRational` on overflow, so intermediate growth during elimination
//! is handled without ever losing exactness.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

/// A field the engine can compute over. Field values act as handles: `Elem`
/// is the element type, and all operations go through the handle so that
/// runtime-configured fields (F_p for user-chosen p) work uniformly.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;
    /// Canonical name used in certificates ("q", "f2", "fp:P").
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }
}

/// An exact rational, reduced, denominator positive. Values that fit in
/// i64/i64 stay in the `Small` variant; `Big` holds everything else and is
/// demoted back as soon as the value fits again, so equality can stay
/// structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn make_rat_i128(mut num: i128, mut den: i128) -> Rat {
    debug_assert!(den != 0);
    if den < 0 {
        num = -num;
        den = -den;
    }
    if num == 0 {
        return Rat::Small(0, 1);
    }
    let g = gcd_i128(num, den);
    num /= g;
    den /= g;
    if let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) {
        Rat::Small(n, d)
    } else {
        Rat::Big(Box::new(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }
}

fn demote(r: BigRational) -> Rat {
    if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
        Rat::Small(n, d)
    } else {
        Rat::Big(Box::new(r))
    }
}

impl Rat {
    pub fn from_int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        make_rat_i128(num as i128, den as i128)
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    fn add_impl(&self, other: &Rat) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            let num = (*n1 as i128) * (*d2 as i128) + (*n2 as i128) * (*d1 as i128);
            let den = (*d1 as i128) * (*d2 as i128);
            return make_rat_i128(num, den);
        }
        demote(self.to_big() + other.to_big())
    }

    fn mul_impl(&self, other: &Rat) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            let num = (*n1 as i128) * (*n2 as i128);
            let den = (*d1 as i128) * (*d2 as i128);
            return make_rat_i128(num, den);
        }
        demote(self.to_big() * other.to_big())
    }

    fn neg_impl(&self) -> Rat {
        match self {
            Rat::Small(n, d) => {
                if let Some(m) = n.checked_neg() {
                    Rat::Small(m, *d)
                } else {
                    make_rat_i128(-(*n as i128), *d as i128)
                }
            }
            Rat::Big(b) => demote(-(**b).clone()),
        }
    }

    fn inv_impl(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        match self {
            Rat::Small(n, d) => Some(make_rat_i128(*d as i128, *n as i128)),
            Rat::Big(b) => Some(demote(b.recip())),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(b) => {
                if b.denom() == &BigInt::from(1) {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

/// The field Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::Small(0, 1)
    }
    fn one(&self) -> Rat {
        Rat::Small(1, 1)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add_impl(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.add_impl(&b.neg_impl())
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg_impl()
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul_impl(b)
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        a.inv_impl()
    }
    fn from_i64(&self, n: i64) -> Rat {
        Rat::from_int(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "q".to_string()
    }
}

/// The prime field F_p for a runtime-chosen prime p. Elements are canonical
/// representatives in [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        assert!(is_prime(p), "{p} is not prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc: u64 = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i128;
        (((n as i128 % p) + p) % p) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn name(&self) -> String {
        if self.p == 2 {
            "f2".to_string()
        } else {
            format!("fp:{}", self.p)
        }
    }
}

/// Run-wide field selection, parsed from the CLI grammar `q | f2 | fp:P`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec, String> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rational),
            "f2" | "F2" => Ok(FieldSpec::Prime(2)),
            _ => {
                if let Some(rest) = s.strip_prefix("fp:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| format!("invalid prime in field spec `{s}`"))?;
                    if !is_prime(p) {
                        return Err(format!("{p} is not prime"));
                    }
                    Ok(FieldSpec::Prime(p))
                } else {
                    Err(format!(
                        "unknown field `{s}` (expected q, f2 or fp:P with P prime)"
                    ))
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rational => "q".to_string(),
            FieldSpec::Prime(2) => "f2".to_string(),
            FieldSpec::Prime(p) => format!("fp:{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_stays_reduced() {
        let q = Rationals;
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::Small(1, 2));
        let b = Rat::new(-3, -6);
        assert_eq!(b, Rat::Small(1, 2));
        assert_eq!(q.add(&a, &b), Rat::Small(1, 1));
        assert_eq!(q.mul(&a, &b), Rat::Small(1, 4));
        assert_eq!(q.sub(&a, &b), Rat::Small(0, 1));
        assert_eq!(q.inv(&Rat::new(3, 7)).unwrap(), Rat::Small(7, 3));
        assert_eq!(q.inv(&Rat::new(-3, 7)).unwrap(), Rat::Small(-7, 3));
        assert!(q.inv(&q.zero()).is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let q = Rationals;
        let big = Rat::from_int(1 << 62);
        let prod = q.mul(&big, &big); // 2^124 does not fit in i64
        assert!(matches!(prod, Rat::Big(_)));
        // dividing back down demotes to the small representation
        let back = q.div(&prod, &big);
        assert_eq!(back, Rat::Small(1 << 62, 1));
        // sums promoting through i128 territory
        let a = Rat::new(i64::MAX - 1, 3);
        let b = Rat::new(i64::MAX - 5, 7);
        let s = q.add(&a, &b);
        let diff = q.sub(&s, &b);
        assert_eq!(diff, a);
    }

    #[test]
    fn prime_field_ops() {
        let f5 = PrimeField::new(5);
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.inv(&3).unwrap(), 2);
        assert_eq!(f5.from_i64(-1), 4);
        assert_eq!(f5.neg(&0), 0);
        let f2 = PrimeField::new(2);
        assert_eq!(f2.add(&1, &1), 0);
        assert_eq!(f2.name(), "f2");
    }

    #[test]
    fn field_spec_parse() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("f2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse("fp:7").unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::parse("fp:6").is_err());
        assert!(FieldSpec::parse("r").is_err());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}
