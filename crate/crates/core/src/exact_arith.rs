//! Exact scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms, and
//! [`GaussianRational`] is a complex number `a + bi` with rational parts. Every
//! inner product, Fourier coefficient and dimension count in this crate is
//! computed with these types, so identities are checked as exact equalities
//! and no tolerance parameter exists anywhere.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number with a positive denominator, always reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

/// Failure to parse a scalar string such as `"3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

impl Rational {
    /// `numer / denom`. Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Canonical `"num/den"` form, used for every serialized scalar.
    pub fn to_canonical(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rational {
    type Err = ParseScalarError;

    /// Accepts `"num/den"` or the integer shorthand `"n"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| err())?;
                Ok(Rational::from_bigint(n))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_bigint(BigInt::from(n))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(Rational::from_integer(n))
    }

    /// Shorthand for `re_n/re_d + (im_n/im_d) i`.
    pub fn from_fractions(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        GaussianRational {
            re: Rational::new(re_n, re_d),
            im: Rational::new(im_n, im_d),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`, the squared modulus.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sq().recip()?;
        Some(GaussianRational {
            re: &self.re * &n,
            im: -(&self.im * &n),
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.re, &self.im).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (re, im) = <(Rational, Rational)>::deserialize(d)?;
        Ok(GaussianRational { re, im })
    }
}

// Operator boilerplate: implement on references, forward the owned forms.
macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl<'b> Sub<&'b Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl<'b> Mul<&'b Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl<'b> Div<&'b Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: &'b Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl<'b> Div<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        self * &rhs.recip().expect("division by zero")
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);
forward_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// Rank of a list of vectors over the Gaussian rationals, by exact
/// row reduction.
pub fn rank(vectors: &[Vec<GaussianRational>]) -> usize {
    let mut rows: Vec<Vec<GaussianRational>> = vectors.to_vec();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) =
            (rank..rows.len()).find(|&r| col < rows[r].len() && !rows[r][col].is_zero())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("nonzero pivot");
        let pivot_row: Vec<GaussianRational> = rows[rank].iter().map(|v| v * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if col >= row.len() || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                if c < row.len() {
                    let t = &factor * p;
                    row[c] -= &t;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_fractions(a, b, c, d)
    }

    #[test]
    fn multiply_examples() {
        let w = z(-7, 3, 5, 2);
        assert_eq!(GaussianRational::one() * &w, w);
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            GaussianRational::from_integer(-1)
        );
        // (a+bi)(a-bi) = a²+b² = 1/4 + 1/4
        assert_eq!(
            z(1, 2, 1, 2) * z(1, 2, -1, 2),
            GaussianRational::real(q(1, 2))
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            GaussianRational::from_integer(3).conjugate(),
            GaussianRational::from_integer(3)
        );
        assert_eq!(GaussianRational::i().conjugate(), z(0, 1, -1, 1));
    }

    #[test]
    fn norm_sq_examples() {
        assert_eq!(GaussianRational::zero().norm_sq(), Rational::zero());
        // 9/25 + 16/25
        assert_eq!(z(3, 5, 4, 5).norm_sq(), Rational::one());
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = q(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(r.to_canonical(), "-3/4");
        assert_eq!(Rational::from_integer(3).to_canonical(), "3/1");
    }

    #[test]
    fn parse_scalar_strings() {
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::from_integer(3));
        assert_eq!("-6/8".parse::<Rational>().unwrap(), q(-3, 4));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        let g: GaussianRational = serde_json::from_str(r#"["1/2","-3/4"]"#).unwrap();
        assert_eq!(g, z(1, 2, -3, 4));
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"["1/2","-3/4"]"#);
    }

    #[test]
    fn rank_of_small_systems() {
        let v = |xs: &[i64]| {
            xs.iter()
                .map(|&x| GaussianRational::from_integer(x))
                .collect::<Vec<_>>()
        };
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[1, 0, -1]), v(&[0, 1, -1]), v(&[1, -1, 0])]), 2);
        let c = vec![GaussianRational::i(), GaussianRational::one()];
        let d = vec![GaussianRational::from_integer(-1), GaussianRational::i()];
        // d = i·c
        assert_eq!(rank(&[c, d]), 1);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
        (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), GaussianRational::one());
            } else {
                prop_assert!(a.recip().is_none());
            }
        }

        #[test]
        fn conjugation_is_a_ring_involution(a in arb_gauss(), b in arb_gauss()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        }

        #[test]
        fn norm_is_multiplicative(a in arb_gauss(), b in arb_gauss()) {
            prop_assert_eq!((&a * &b).norm_sq(), &a.norm_sq() * &b.norm_sq());
            prop_assert_eq!((&a * &a.conjugate()).re, a.norm_sq());
            prop_assert!((&a * &a.conjugate()).im.is_zero());
            prop_assert!(!a.norm_sq().is_negative());
            prop_assert_eq!(a.norm_sq().is_zero(), a.is_zero());
        }

        #[test]
        fn scalar_json_round_trip(a in arb_gauss()) {
            let s = serde_json::to_string(&a).unwrap();
            let b: GaussianRational = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
