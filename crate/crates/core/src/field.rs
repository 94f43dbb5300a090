//! Base fields: prime fields `F_p` (`p <= 97`), `F4 = F2[w]/(w² + w + 1)`
//! and the rationals.
//!
//! Text formats are fixed: prime field elements print as `0..p-1`, `F4`
//! elements as `0`, `1`, `w`, `w1` (meaning `w + 1`), and rationals as `n`
//! or `n/d` with `d > 0` in lowest terms.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest prime accepted for `F_p`.
pub const MAX_PRIME: u8 = 97;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u8),
    Gf4,
    Rationals,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl FieldSpec {
    /// `F_p`, checking that `p` is a supported prime.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::parse(format!("{p} is not prime")));
        }
        if p > MAX_PRIME as u32 {
            return Err(Error::parse(format!("prime {p} exceeds the supported maximum {MAX_PRIME}")));
        }
        Ok(FieldSpec::Prime(p as u8))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Prime(p) => p as u32,
            FieldSpec::Gf4 => 2,
            FieldSpec::Rationals => 0,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<usize> {
        match self {
            FieldSpec::Prime(p) => Some(p as usize),
            FieldSpec::Gf4 => Some(4),
            FieldSpec::Rationals => None,
        }
    }

    pub fn is_finite(self) -> bool {
        self.order().is_some()
    }

    pub fn is_f2(self) -> bool {
        self == FieldSpec::Prime(2)
    }

    /// Rejects `F2`, which the classification layer does not cover.
    pub fn require_nontrivial(self) -> Result<()> {
        if self.is_f2() {
            Err(Error::UnsupportedField {
                field: self,
                reason: "the two-element field is excluded",
            })
        } else {
            Ok(())
        }
    }

    pub fn zero(self) -> FieldElem {
        self.from_int(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_int(1)
    }

    /// Image of an integer under the canonical ring map `Z -> K`.
    pub fn from_int(self, n: i64) -> FieldElem {
        let repr = match self {
            FieldSpec::Prime(p) => Repr::Prime {
                p,
                v: n.rem_euclid(p as i64) as u8,
            },
            FieldSpec::Gf4 => Repr::Gf4(n.rem_euclid(2) as u8),
            FieldSpec::Rationals => Repr::Rational(Box::new(BigRational::from_integer(BigInt::from(n)))),
        };
        FieldElem(repr)
    }

    /// A rational `num/den` as a field element.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FieldElem> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_int(num).try_div(&self.from_int(den))
    }

    /// All elements in canonical order: residues `0, 1, ..., p-1`, and
    /// `0, 1, w, w1` for `F4`.
    pub fn elements(self) -> Result<Vec<FieldElem>> {
        match self {
            FieldSpec::Prime(p) => Ok((0..p).map(|v| FieldElem(Repr::Prime { p, v })).collect()),
            FieldSpec::Gf4 => Ok((0..4).map(|v| FieldElem(Repr::Gf4(v))).collect()),
            FieldSpec::Rationals => Err(Error::InfiniteField(self)),
        }
    }

    pub fn parse_elem(self, text: &str) -> Result<FieldElem> {
        let t = normalize_minus(text.trim());
        let t = t.as_str();
        if t.is_empty() {
            return Err(Error::parse("empty field element"));
        }
        match self {
            FieldSpec::Gf4 => match t {
                "0" => Ok(FieldElem(Repr::Gf4(0))),
                "1" => Ok(FieldElem(Repr::Gf4(1))),
                "w" => Ok(FieldElem(Repr::Gf4(2))),
                "w1" | "w+1" => Ok(FieldElem(Repr::Gf4(3))),
                _ => Err(Error::parse(format!("invalid F4 element {t:?}"))),
            },
            FieldSpec::Prime(_) | FieldSpec::Rationals => {
                let q = parse_rational(t)?;
                if self == FieldSpec::Rationals {
                    return Ok(FieldElem(Repr::Rational(Box::new(q))));
                }
                let num = self.reduce_bigint(q.numer());
                let den = self.reduce_bigint(q.denom());
                num.try_div(&den)
            }
        }
    }

    fn reduce_bigint(self, n: &BigInt) -> FieldElem {
        match self {
            FieldSpec::Prime(p) => {
                let r = n.mod_floor_u32(p as u32);
                FieldElem(Repr::Prime { p, v: r as u8 })
            }
            FieldSpec::Gf4 => FieldElem(Repr::Gf4(n.mod_floor_u32(2) as u8)),
            FieldSpec::Rationals => FieldElem(Repr::Rational(Box::new(BigRational::from_integer(n.clone())))),
        }
    }
}

trait ModFloorU32 {
    fn mod_floor_u32(&self, m: u32) -> u32;
}

impl ModFloorU32 for BigInt {
    fn mod_floor_u32(&self, m: u32) -> u32 {
        use num_integer::Integer;
        let r = self.mod_floor(&BigInt::from(m));
        r.iter_u32_digits().next().unwrap_or(0)
    }
}

fn normalize_minus(t: &str) -> alloc::string::String {
    t.replace('\u{2212}', "-")
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("invalid number {t:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if d.is_negative() {
                return Err(Error::parse(format!("denominator must be positive in {t:?}")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Gf4 => f.write_str("F4"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Fp` for a prime `p <= 97`, `F4`, and `Q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::parse(format!("invalid field {s:?}; expected Fp, F4 or Q")))?;
        let n: u32 = digits
            .parse()
            .map_err(|_| Error::parse(format!("invalid field {s:?}")))?;
        if n == 4 {
            return Ok(FieldSpec::Gf4);
        }
        FieldSpec::prime(n).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("invalid field {s:?}: {msg}")),
            other => other,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Prime { p: u8, v: u8 },
    /// `c0 + c1 w` packed as `c0 | c1 << 1`.
    Gf4(u8),
    Rational(Box<BigRational>),
}

/// An element of one of the supported fields, always in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem(Repr);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
    Div,
}

/// Applies `op` to `x` (and `y` for the binary operations).
pub fn arith(op: ArithOp, x: &FieldElem, y: Option<&FieldElem>) -> Result<FieldElem> {
    let rhs = || y.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")));
    match op {
        ArithOp::Add => x.try_add(rhs()?),
        ArithOp::Sub => x.try_sub(rhs()?),
        ArithOp::Mul => x.try_mul(rhs()?),
        ArithOp::Div => x.try_div(rhs()?),
        ArithOp::Neg => Ok(-x),
        ArithOp::Inv => x.inv(),
    }
}

// Multiplication in F4 on the packed representation.
const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const GF4_INV: [u8; 4] = [0, 1, 3, 2];

impl FieldElem {
    pub fn spec(&self) -> FieldSpec {
        match &self.0 {
            Repr::Prime { p, .. } => FieldSpec::Prime(*p),
            Repr::Gf4(_) => FieldSpec::Gf4,
            Repr::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Prime { v, .. } => *v == 0,
            Repr::Gf4(v) => *v == 0,
            Repr::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Prime { v, .. } => *v == 1,
            Repr::Gf4(v) => *v == 1,
            Repr::Rational(q) => q.is_one(),
        }
    }

    /// Position in [`FieldSpec::elements`] order for finite fields.
    pub fn index(&self) -> Option<usize> {
        match &self.0 {
            Repr::Prime { v, .. } => Some(*v as usize),
            Repr::Gf4(v) => Some(*v as usize),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            _ => None,
        }
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        let (a, b) = (self.spec(), rhs.spec());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(FieldElem(match (&self.0, &rhs.0) {
            (Repr::Prime { p, v }, Repr::Prime { v: w, .. }) => Repr::Prime {
                p: *p,
                v: ((*v as u16 + *w as u16) % *p as u16) as u8,
            },
            (Repr::Gf4(a), Repr::Gf4(b)) => Repr::Gf4(a ^ b),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(Box::new(&**a + &**b)),
            _ => unreachable!(),
        }))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(FieldElem(match (&self.0, &rhs.0) {
            (Repr::Prime { p, v }, Repr::Prime { v: w, .. }) => Repr::Prime {
                p: *p,
                v: ((*v as u16 * *w as u16) % *p as u16) as u8,
            },
            (Repr::Gf4(a), Repr::Gf4(b)) => Repr::Gf4(GF4_MUL[*a as usize][*b as usize]),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(Box::new(&**a * &**b)),
            _ => unreachable!(),
        }))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem(match &self.0 {
            Repr::Prime { p, v } => {
                // v^(p-2) by square-and-multiply
                let (p16, mut base, mut e, mut acc) = (*p as u32, *v as u32, *p as u32 - 2, 1u32);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p16;
                    }
                    base = base * base % p16;
                    e >>= 1;
                }
                Repr::Prime { p: *p, v: acc as u8 }
            }
            Repr::Gf4(a) => Repr::Gf4(GF4_INV[*a as usize]),
            Repr::Rational(q) => Repr::Rational(Box::new(q.recip())),
        }))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        self.try_mul(&rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.spec().one();
        let mut base = self.clone();
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

impl Neg for &FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        FieldElem(match &self.0 {
            Repr::Prime { p, v } => Repr::Prime {
                p: *p,
                v: if *v == 0 { 0 } else { *p - *v },
            },
            Repr::Gf4(a) => Repr::Gf4(*a),
            Repr::Rational(q) => Repr::Rational(Box::new(-&**q)),
        })
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        -&self
    }
}

// Operator forms panic on mixed fields; use the `try_*` methods on
// unvalidated input.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field elements from different fields")
            }
        }

        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }

        impl $trait<FieldElem> for &FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Fields compare by [`FieldSpec`] first; within a finite field the order is
/// the enumeration order, within `Q` it is the numeric order.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            _ => self
                .spec()
                .cmp(&other.spec())
                .then_with(|| self.index().cmp(&other.index())),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Prime { v, .. } => write!(f, "{v}"),
            Repr::Gf4(v) => f.write_str(["0", "1", "w", "w1"][*v as usize]),
            Repr::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.spec(), self)
    }
}
