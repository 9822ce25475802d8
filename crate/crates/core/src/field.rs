//! Exact arithmetic in the cyclotomic field ℚ(ζ₈) = ℚ[x]/(x⁴ + 1).
//!
//! Every scalar that occurs in the classification lies in ℚ(i, √2), which is
//! this field: `i = ζ²` and `√2 = ζ − ζ³`. The real subfield fixed by complex
//! conjugation is ℚ(√2), and it is ordered through the embedding √2 ↦ 1.414…,
//! which is what [`FieldElement::real_sign`] decides exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical (reduced, positive denominator) form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
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

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Exact real cube root when `self` is the cube of a rational.
    pub fn cbrt(&self) -> Option<Self> {
        let n = self.numer().cbrt();
        let d = self.denom().cbrt();
        if &(&n * &n * &n) == self.numer() && &(&d * &d * &d) == self.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::from_big(parse(n)?, parse(d)?),
            None => Ok(Rational(BigRational::from_integer(parse(s)?))),
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

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

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.numer().to_string(), self.denom().to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [n, den] = <[String; 2]>::deserialize(d)?;
        let n: BigInt = n.parse().map_err(D::Error::custom)?;
        let den: BigInt = den.parse().map_err(D::Error::custom)?;
        if !den.is_positive() {
            return Err(D::Error::custom("denominator must be positive"));
        }
        let r = BigRational::new(n.clone(), den.clone());
        if r.numer() != &n || r.denom() != &den {
            return Err(D::Error::custom("rational is not in reduced form"));
        }
        Ok(Rational(r))
    }
}

/// Sign of a real field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// `c0 + c1·ζ + c2·ζ² + c3·ζ³` with ζ⁴ = −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    c: [Rational; 4],
}

impl FieldElement {
    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        FieldElement { c }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        FieldElement {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn zeta() -> Self {
        FieldElement {
            c: [Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn i() -> Self {
        FieldElement {
            c: [Rational::zero(), Rational::zero(), Rational::one(), Rational::zero()],
        }
    }

    pub fn sqrt2() -> Self {
        FieldElement {
            c: [Rational::zero(), Rational::one(), Rational::zero(), -Rational::one()],
        }
    }

    /// `p + q·√2 + r·i + s·i·√2`.
    pub fn from_parts(p: Rational, q: Rational, r: Rational, s: Rational) -> Self {
        // q√2 + s·i√2 = (q+s)ζ + (s−q)ζ³
        FieldElement {
            c: [p, &q + &s, r, &s - &q],
        }
    }

    /// Inverse of [`FieldElement::from_parts`]: `(p, q, r, s)`.
    pub fn parts(&self) -> (Rational, Rational, Rational, Rational) {
        let half = Rational::new(1, 2);
        let [c0, c1, c2, c3] = &self.c;
        (
            c0.clone(),
            &(c1 - c3) * &half,
            c2.clone(),
            &(c1 + c3) * &half,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && (&self.c[1] + &self.c[3]).is_zero()
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Image under ζ ↦ ζᵏ for odd k.
    fn galois(&self, k: u8) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        let c = match k % 8 {
            1 => [c0, c1, c2, c3],
            3 => [c0, c3, -c2, c1],
            5 => [c0, -c1, c2, -c3],
            7 => [c0, -c3, -c2, -c1],
            _ => unreachable!("only odd exponents are automorphisms"),
        };
        FieldElement { c }
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        self.galois(7)
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rest = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let norm = self * &rest;
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .recip()?;
        Ok(rest.scale(&n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElement {
            c: std::array::from_fn(|k| &self.c[k] * r),
        }
    }

    /// Real part `(a + ā)/2`, an element of ℚ(√2).
    pub fn re(&self) -> Self {
        (self + &self.conjugate()).scale(&Rational::new(1, 2))
    }

    /// Imaginary part `(a − ā)/(2i)`, an element of ℚ(√2).
    pub fn im(&self) -> Self {
        let d = self - &self.conjugate();
        (&d * &FieldElement::i()).scale(&Rational::new(-1, 2))
    }

    pub fn real_sign(&self) -> Result<Sign> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let (p, q, _, _) = self.parts();
        Ok(sign_of_sum(&p, &q))
    }

    /// Square root inside ℚ(√2) of a non-negative real element, if it exists there.
    pub fn sqrt_real(&self) -> Option<Self> {
        if self.real_sign().ok()? == Sign::Negative {
            return None;
        }
        let (p, q, _, _) = self.parts();
        if q.is_zero() {
            if let Some(x) = p.sqrt() {
                return Some(Self::from_rational(x));
            }
            // p = 2y²
            let y = (&p * &Rational::new(1, 2)).sqrt()?;
            return Some(Self::from_parts(Rational::zero(), y, Rational::zero(), Rational::zero()));
        }
        // (x + y√2)² = x² + 2y² + 2xy√2 ⇒ x² = (p ± √(p² − 2q²))/2
        let disc = (&(&p * &p) - &(&(&q * &q) * &Rational::from_int(2))).sqrt()?;
        for d in [disc.clone(), -disc] {
            let x2 = &(&p + &d) * &Rational::new(1, 2);
            if let Some(x) = x2.sqrt() {
                if x.is_zero() {
                    continue;
                }
                let y = &q * &(&Rational::from_int(2) * &x).recip().ok()?;
                let cand = Self::from_parts(x, y, Rational::zero(), Rational::zero());
                if &cand * &cand == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Exact sign of `p + q√2`.
fn sign_of_sum(p: &Rational, q: &Rational) -> Sign {
    let sp = p.signum();
    let sq = q.signum();
    let ord = match (sp, sq) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        // opposite signs: compare p² with 2q²
        (a, _) => {
            let p2 = p * p;
            let q2 = &(q * q) * &Rational::from_int(2);
            match p2.cmp(&q2) {
                Ordering::Greater => a,
                Ordering::Less => a.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    };
    match ord {
        Ordering::Less => Sign::Negative,
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => Sign::Positive,
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r, s) = self.parts();
        let terms: Vec<String> = [(p, ""), (q, "√2"), (r, "i"), (s, "i√2")]
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, unit)| match (unit, c.numer().is_one() && c.denom().is_one()) {
                ("", _) => c.to_string(),
                (u, true) => u.to_string(),
                (u, false) if c == -Rational::one() => format!("-{u}"),
                (u, false) => format!("{c}·{u}"),
            })
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut acc: [Rational; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let k = i + j;
                if k < 4 {
                    acc[k] = &acc[k] + &prod;
                } else {
                    acc[k - 4] = &acc[k - 4] - &prod;
                }
            }
        }
        FieldElement { c: acc }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                $tr::$m(&self, rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Div<&FieldElement> for &FieldElement {
    type Output = Result<FieldElement>;
    fn div(self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.invert()?)
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = &*self - rhs;
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::from_rational(r)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(FieldElement {
            c: <[Rational; 4]>::deserialize(d)?,
        })
    }
}

impl PartialOrd for Sign {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sign {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |s: &Sign| match s {
            Sign::Negative => 0,
            Sign::Zero => 1,
            Sign::Positive => 2,
        };
        rank(self).cmp(&rank(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(p: i64, q: i64, r: i64, s: i64) -> FieldElement {
        FieldElement::from_parts(
            Rational::from_int(p),
            Rational::from_int(q),
            Rational::from_int(r),
            Rational::from_int(s),
        )
    }

    #[test]
    fn defining_relations() {
        let i = FieldElement::i();
        let r2 = FieldElement::sqrt2();
        assert_eq!(&i * &i, FieldElement::from_int(-1));
        assert_eq!(&r2 * &r2, FieldElement::from_int(2));
        assert_eq!(FieldElement::zeta().pow(4), FieldElement::from_int(-1));
    }

    #[test]
    fn primitive_eighth_root_squares_to_i() {
        // (1+i)/√2 expanded by hand in the ζ-basis is ζ itself.
        let w = (&(&FieldElement::one() + &FieldElement::i()) / &FieldElement::sqrt2()).unwrap();
        assert_eq!(w, FieldElement::zeta());
        assert_eq!(&w * &w, FieldElement::i());
    }

    #[test]
    fn inversion_examples() {
        let r2 = FieldElement::sqrt2();
        assert_eq!(r2.invert().unwrap(), r2.scale(&Rational::new(1, 2)));
        assert_eq!(FieldElement::i().invert().unwrap(), -FieldElement::i());
        let one_plus_i = fe(1, 0, 1, 0);
        let expect = fe(1, 0, -1, 0).scale(&Rational::new(1, 2));
        assert_eq!(one_plus_i.invert().unwrap(), expect);
        assert_eq!(FieldElement::zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(FieldElement::i().conjugate(), -FieldElement::i());
        let real = fe(3, 2, 0, 0);
        assert_eq!(real.conjugate(), real);
        let w = FieldElement::zeta(); // (1+i)/√2
        let expect = (&fe(1, 0, -1, 0) / &FieldElement::sqrt2()).unwrap();
        assert_eq!(w.conjugate(), expect);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(FieldElement::zero().real_sign().unwrap(), Sign::Zero);
        assert_eq!(fe(3, -2, 0, 0).real_sign().unwrap(), Sign::Positive);
        assert_eq!(fe(1, -1, 0, 0).real_sign().unwrap(), Sign::Negative);
        assert_eq!(fe(-3, 2, 0, 0).real_sign().unwrap(), Sign::Negative);
        assert!(matches!(FieldElement::i().real_sign(), Err(Error::NotReal(_))));
    }

    #[test]
    fn square_roots_in_real_subfield() {
        let r = fe(3, -2, 0, 0); // (√2 − 1)²
        let s = r.sqrt_real().unwrap();
        assert_eq!(&s * &s, r);
        assert_eq!(FieldElement::from_int(8).sqrt_real().unwrap(), fe(0, 2, 0, 0));
        assert!(FieldElement::from_int(3).sqrt_real().is_none());
        assert!(FieldElement::from_int(-4).sqrt_real().is_none());
    }

    #[test]
    fn parts_roundtrip_and_display() {
        let x = fe(1, -2, 3, 4);
        assert_eq!(FieldElement::from_parts(x.parts().0, x.parts().1, x.parts().2, x.parts().3), x);
        assert_eq!(fe(0, 1, 0, 0).to_string(), "√2");
        assert_eq!(fe(1, 0, -1, 0).to_string(), "1 - i");
    }

    #[test]
    fn serde_is_four_rational_pairs() {
        let x = FieldElement::from_parts(
            Rational::new(-1, 2),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        );
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"[["-1","2"],["0","1"],["0","1"],["0","1"]]"#);
        let back: FieldElement = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<FieldElement>(r#"[["2","4"],["0","1"],["0","1"],["0","1"]]"#).is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
    }

    prop_compose! {
        fn arb_fe()(a in arb_rational(), b in arb_rational(), c in arb_rational(), d in arb_rational()) -> FieldElement {
            FieldElement::from_coeffs([a, b, c, d])
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn conjugation_is_involutive(a in arb_fe()) {
            prop_assert_eq!(a.conjugate().conjugate(), a);
        }

        #[test]
        fn norm_is_nonnegative_real(a in arb_fe()) {
            let n = &a * &a.conjugate();
            let s = n.real_sign().unwrap();
            prop_assert_eq!(s == Sign::Zero, a.is_zero());
            prop_assert!(s != Sign::Negative);
        }
    }

    proptest! {
        #[test]
        fn inverse_and_conjugate_are_multiplicative(a in arb_fe(), b in arb_fe()) {
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            if !a.is_zero() && !b.is_zero() {
                let ab = &a * &b;
                prop_assert_eq!(ab.invert().unwrap(), &b.invert().unwrap() * &a.invert().unwrap());
                prop_assert!((&a * &a.invert().unwrap()).is_one());
            }
        }

        #[test]
        fn ring_axioms(a in arb_fe(), b in arb_fe(), c in arb_fe()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn real_sign_matches_float_embedding(p in -50i64..50, q in -50i64..50) {
            let x = fe(p, q, 0, 0);
            let v = p as f64 + q as f64 * std::f64::consts::SQRT_2;
            let expect = if v > 1e-9 { Sign::Positive } else if v < -1e-9 { Sign::Negative } else { Sign::Zero };
            prop_assert_eq!(x.real_sign().unwrap(), expect);
        }
    }
}
