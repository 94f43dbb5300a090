//! Sparse polynomials in the six variables `x1, x2, y1, y2, z1, z2`, used to
//! expand `x²y² - (xy)²` formally and to check monomial independence.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::algebra::StructureMatrix;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X1,
    X2,
    Y1,
    Y2,
    Z1,
    Z2,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X1, Var::X2, Var::Y1, Var::Y2, Var::Z1, Var::Z2];

    fn name(self) -> &'static str {
        ["x1", "x2", "y1", "y2", "z1", "z2"][self as usize]
    }
}

/// Exponents of `(x1, x2, y1, y2, z1, z2)`.
pub type Exponents = [u8; 6];

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    spec: FieldSpec,
    terms: BTreeMap<Exponents, FieldElem>,
}

impl MultiPoly {
    pub fn zero(spec: FieldSpec) -> Self {
        MultiPoly {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::monomial(c, [0; 6])
    }

    pub fn monomial(c: FieldElem, exps: Exponents) -> Self {
        let mut p = Self::zero(c.spec());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(spec: FieldSpec, v: Var) -> Self {
        let mut e = [0; 6];
        e[v as usize] = 1;
        Self::monomial(spec.one(), e)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> FieldElem {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|e| e[v as usize]).max().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.spec, other.spec))
        }
    }

    fn add_term(&mut self, exps: Exponents, c: FieldElem) {
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.spec);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = core::array::from_fn(|i| e1[i] + e2[i]);
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn try_scale(&self, k: &FieldElem) -> Result<Self> {
        if k.spec() != self.spec {
            return Err(Error::FieldMismatch(self.spec, k.spec()));
        }
        let mut out = Self::zero(self.spec);
        for (e, c) in &self.terms {
            out.add_term(*e, c * k);
        }
        Ok(out)
    }

    /// Value at `point`, indexed like [`Var::ALL`].
    pub fn eval(&self, point: &[FieldElem; 6]) -> FieldElem {
        self.terms.iter().fold(self.spec.zero(), |acc, (e, c)| {
            let term = e
                .iter()
                .zip(point)
                .filter(|(k, _)| **k > 0)
                .fold(c.clone(), |t, (k, x)| t * x.pow(*k as u32));
            acc + term
        })
    }
}

#[derive(Debug, Clone)]
pub enum PolyOperand<'a> {
    Poly(&'a MultiPoly),
    Scalar(&'a FieldElem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Scale,
}

pub fn poly_arith(op: PolyOp, p: &MultiPoly, q: PolyOperand<'_>) -> Result<MultiPoly> {
    match (op, q) {
        (PolyOp::Add, PolyOperand::Poly(q)) => p.try_add(q),
        (PolyOp::Sub, PolyOperand::Poly(q)) => p.try_sub(q),
        (PolyOp::Mul, PolyOperand::Poly(q)) => p.try_mul(q),
        (PolyOp::Scale | PolyOp::Mul, PolyOperand::Scalar(k)) => p.try_scale(k),
        (op, _) => Err(Error::Precondition(format!("{op:?} needs a polynomial operand"))),
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            spec: self.spec,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }

        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

/// Terms are printed in descending lexicographic order of exponents.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !c.is_one() || e.iter().all(|&k| k == 0) {
                factors.push(format!("{c}"));
            }
            for (v, &k) in Var::ALL.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(v.name().into()),
                    k => factors.push(format!("{}^{k}", v.name())),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.spec, self)
    }
}

/// `(E, F)` coordinates of the product of two symbolic elements.
fn product(a: &StructureMatrix, x: &[MultiPoly; 2], y: &[MultiPoly; 2]) -> [MultiPoly; 2] {
    let w = [&x[0] * &y[0], &x[1] * &y[1], &x[0] * &y[1], &x[1] * &y[0]];
    core::array::from_fn(|col| {
        w.iter()
            .zip(a.rows())
            .fold(MultiPoly::zero(a.spec()), |acc, (wi, row)| acc + wi.try_scale(&row[col]).expect("same field"))
    })
}

/// The `e`- and `f`-coordinates of `x²y² - (xy)²` for generic
/// `x = x1 e + x2 f`, `y = y1 e + y2 f`.
pub fn ec_defect(a: &StructureMatrix) -> (MultiPoly, MultiPoly) {
    let s = a.spec();
    let x = [MultiPoly::var(s, Var::X1), MultiPoly::var(s, Var::X2)];
    let y = [MultiPoly::var(s, Var::Y1), MultiPoly::var(s, Var::Y2)];
    let xx = product(a, &x, &x);
    let yy = product(a, &y, &y);
    let lhs = product(a, &xx, &yy);
    let xy = product(a, &x, &y);
    let rhs = product(a, &xy, &xy);
    let [l0, l1] = lhs;
    let [r0, r1] = rhs;
    (l0 - r0, l1 - r1)
}

/// Exponent patterns of `X1..X9` over `(x1, x2, y1, y2)`.
pub const X_MONOMIALS: [Exponents; 9] = [
    [2, 0, 2, 0, 0, 0], // x1²y1²
    [0, 2, 0, 2, 0, 0], // x2²y2²
    [2, 0, 0, 2, 0, 0], // x1²y2²
    [0, 2, 2, 0, 0, 0], // x2²y1²
    [1, 1, 1, 1, 0, 0], // x1x2y1y2
    [2, 0, 1, 1, 0, 0], // x1²y1y2
    [1, 1, 2, 0, 0, 0], // x1x2y1²
    [1, 1, 0, 2, 0, 0], // x1x2y2²
    [0, 2, 1, 1, 0, 0], // x2²y1y2
];

/// Exponent patterns of `Z1..Z8`: `x_i y_j z_k` in the order
/// `(i, j, k) = (1,1,1), (1,1,2), ..., (2,2,2)`.
pub const Z_MONOMIALS: [Exponents; 8] = [
    [1, 0, 1, 0, 1, 0],
    [1, 0, 1, 0, 0, 1],
    [1, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 0],
    [0, 1, 1, 0, 0, 1],
    [0, 1, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
];

/// Coefficients of `p` with respect to `X1..X9`.
pub fn coeffs_in_x_basis(p: &MultiPoly) -> Result<[FieldElem; 9]> {
    if let Some((e, _)) = p.terms().find(|(e, _)| !X_MONOMIALS.contains(e)) {
        let term = MultiPoly::monomial(p.spec().one(), *e);
        return Err(Error::NotInXSpan(alloc::string::ToString::to_string(&term)));
    }
    Ok(core::array::from_fn(|i| p.coeff(&X_MONOMIALS[i])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialSystem {
    /// `X1..X9` in `(x1, x2, y1, y2)`.
    XNine,
    /// `Z1..Z8` in `(x1, x2, y1, y2, z1, z2)`.
    ZEight,
}

impl MonomialSystem {
    pub fn monomials(self) -> &'static [Exponents] {
        match self {
            MonomialSystem::XNine => &X_MONOMIALS,
            MonomialSystem::ZEight => &Z_MONOMIALS,
        }
    }

    fn arity(self) -> usize {
        match self {
            MonomialSystem::XNine => 4,
            MonomialSystem::ZEight => 6,
        }
    }
}

/// Sample points for the rationals: `{-2, -1, 0, 1, 2, 1/2}` per coordinate.
fn rational_grid() -> Vec<FieldElem> {
    let q = FieldSpec::Rationals;
    let mut g: Vec<FieldElem> = [-2, -1, 0, 1, 2].iter().map(|&n| q.from_int(n)).collect();
    g.push(q.from_ratio(1, 2).expect("nonzero denominator"));
    g
}

/// Rank of the evaluation matrix whose rows are the points of `K^4` (resp.
/// `K^6`) and whose columns are the monomials of `system`. Over `Q` the
/// points are drawn from a fixed grid.
pub fn independence_rank(system: MonomialSystem, spec: FieldSpec) -> Result<usize> {
    let min_order = match system {
        MonomialSystem::XNine => 3,
        MonomialSystem::ZEight => 2,
    };
    if spec.order().is_some_and(|q| q < min_order) {
        return Err(Error::Precondition(format!(
            "{system:?} needs a field with at least {min_order} elements"
        )));
    }
    let values = match spec {
        FieldSpec::Rationals => rational_grid(),
        _ => spec.elements()?,
    };
    let n = system.arity();
    let monomials: Vec<MultiPoly> = system
        .monomials()
        .iter()
        .map(|e| MultiPoly::monomial(spec.one(), *e))
        .collect();
    let total = values.len().pow(n as u32);
    let rows = (0..total).map(|mut idx| {
        let mut point: [FieldElem; 6] = core::array::from_fn(|_| spec.zero());
        for slot in point.iter_mut().take(n) {
            *slot = values[idx % values.len()].clone();
            idx /= values.len();
        }
        monomials.iter().map(|m| m.eval(&point)).collect::<Vec<_>>()
    });
    Ok(linalg::rank_of_rows(monomials.len(), rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CFormParams;

    const F3: FieldSpec = FieldSpec::Prime(3);
    const F5: FieldSpec = FieldSpec::Prime(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(spec: FieldSpec, var: Var) -> MultiPoly {
        MultiPoly::var(spec, var)
    }

    #[test]
    fn arithmetic_examples() {
        let (x1, y1) = (v(Q, Var::X1), v(Q, Var::Y1));
        let p = (&x1 + &y1) * (&x1 - &y1);
        assert_eq!(p, &x1 * &x1 - &y1 * &y1);
        assert_eq!(p.to_string(), "x1^2 + -1*y1^2");

        let three = F3.from_int(3);
        assert!(v(F3, Var::X1).try_scale(&three).unwrap().is_zero());

        let x1x2 = v(F5, Var::X1) * v(F5, Var::X2);
        assert_eq!(&x1x2 + &x1x2, x1x2.try_scale(&F5.from_int(2)).unwrap());
        assert_eq!((&x1x2 + &x1x2).to_string(), "2*x1*x2");

        assert!(v(F3, Var::X1).try_add(&v(F5, Var::X1)).is_err());
        assert!(poly_arith(PolyOp::Add, &x1x2, PolyOperand::Scalar(&F5.one())).is_err());
    }

    #[test]
    fn defect_of_zero_and_canonical_forms() {
        let (e, f) = ec_defect(&StructureMatrix::zero(F5));
        assert!(e.is_zero() && f.is_zero());
        for a in [0, 1, 2, 3, 4] {
            let c2 = CFormParams::from_ints(F5, [0, a, 0, 1 - a], true, false).to_matrix();
            let (e, f) = ec_defect(&c2);
            assert!(e.is_zero() && f.is_zero());
        }
        let c2 = CFormParams::new(Q.zero(), Q.from_ratio(2, 7).unwrap(), Q.zero(), Q.from_ratio(5, 7).unwrap(), true, false);
        let (e, f) = ec_defect(&c2.to_matrix());
        assert!(e.is_zero() && f.is_zero());
    }

    #[test]
    fn defect_detects_non_ec() {
        // first C-form equation: ε a² + a² b + a b c = 2 ≠ 0 = εδa
        let a = CFormParams::from_ints(F3, [1, 1, 0, 0], true, false).to_matrix();
        let (e, _) = ec_defect(&a);
        assert!(!e.is_zero());
    }

    #[test]
    fn x_basis_coefficients() {
        let x5 = MultiPoly::monomial(F5.one(), X_MONOMIALS[4]);
        let c = coeffs_in_x_basis(&x5).unwrap();
        let expect: Vec<FieldElem> = (0..9).map(|i| F5.from_int((i == 4) as i64)).collect();
        assert_eq!(c.to_vec(), expect);

        let bad = MultiPoly::monomial(F5.one(), [3, 0, 1, 0, 0, 0]);
        assert!(matches!(coeffs_in_x_basis(&bad), Err(Error::NotInXSpan(t)) if t == "x1^3*y1"));
    }

    // Transcription of the two displayed expansions for the e-coordinate,
    // coefficient by coefficient in X1..X9.
    fn displayed_e_coordinate(m: &StructureMatrix) -> [FieldElem; 9] {
        let (a1, b1, a2, b2) = (m.a(1).clone(), m.b(1).clone(), m.a(2).clone(), m.b(2).clone());
        let (a3, b3, a4, b4) = (m.a(3).clone(), m.b(3).clone(), m.a(4).clone(), m.b(4).clone());
        let two = m.spec().from_int(2);
        let sa = &a3 + &a4;
        let sb = &b3 + &b4;
        let lhs = [
            &a1 * &a1 * &a1 + &a2 * &b1 * &b1 + &a1 * &a3 * &b1 + &a1 * &a4 * &b1,
            &a1 * &a2 * &a2 + &a2 * &b2 * &b2 + &a2 * &a3 * &b2 + &a2 * &a4 * &b2,
            &a1 * &a1 * &a2 + &a2 * &b1 * &b2 + &a1 * &a3 * &b2 + &a2 * &a4 * &b1,
            &a1 * &a1 * &a2 + &a2 * &b1 * &b2 + &a2 * &a3 * &b1 + &a1 * &a4 * &b2,
            (&a1 + &sb) * &sa * &sa + &a2 * &sb * &sb,
            (&a1 * &a1 + &a4 * &b1) * &sa + (&a2 * &b1 + &a1 * &a3) * &sb,
            (&a1 * &a1 + &a3 * &b1) * &sa + (&a2 * &b1 + &a4 * &a1) * &sb,
            (&a1 * &a2 + &a3 * &b2) * &sa + &a2 * (&a4 + &b2) * &sb,
            (&a1 * &a2 + &a4 * &b2) * &sa + &a2 * (&a3 + &b2) * &sb,
        ];
        let rhs = [
            &a1 * &a1 * &a1 + &a2 * &b1 * &b1 + &a1 * &b1 * &sa,
            &a1 * &a2 * &a2 + &a2 * &b2 * &b2 + &a2 * &b2 * &sa,
            &a1 * &a3 * &a3 + &a2 * &b3 * &b3 + &a3 * &b3 * &sa,
            &a1 * &a4 * &a4 + &a2 * &b4 * &b4 + &a4 * &b4 * &sa,
            &two * &a1 * (&a1 * &a2 + &a3 * &a4)
                + &two * &a2 * (&b1 * &b2 + &b3 * &b4)
                + &sa * (&a1 * &b2 + &a2 * &b1 + &a3 * &b4 + &a4 * &b3),
            &two * &a1 * &a1 * &a3 + &two * &a2 * &b1 * &b3 + &sa * (&a1 * &b3 + &a3 * &b1),
            &two * &a1 * &a1 * &a4 + &two * &a2 * &b1 * &b4 + &sa * (&a1 * &b4 + &a4 * &b1),
            &two * &a1 * &a2 * &a3 + &two * &a2 * &b2 * &b3 + &sa * (&a2 * &b3 + &a3 * &b2),
            &two * &a1 * &a2 * &a4 + &two * &a2 * &b2 * &b4 + &sa * (&a2 * &b4 + &a4 * &b2),
        ];
        core::array::from_fn(|i| &lhs[i] - &rhs[i])
    }

    // Same for the f-coordinate.
    fn displayed_f_coordinate(m: &StructureMatrix) -> [FieldElem; 9] {
        let (a1, b1, a2, b2) = (m.a(1).clone(), m.b(1).clone(), m.a(2).clone(), m.b(2).clone());
        let (a3, b3, a4, b4) = (m.a(3).clone(), m.b(3).clone(), m.a(4).clone(), m.b(4).clone());
        let two = m.spec().from_int(2);
        let sa = &a3 + &a4;
        let sb = &b3 + &b4;
        let lhs = [
            &a1 * &a1 * &b1 + &b1 * &b1 * &b2 + &a1 * &b1 * &b3 + &a1 * &b4 * &b1,
            &a2 * &a2 * &b1 + &b2 * &b2 * &b2 + &a2 * &b2 * &b3 + &a2 * &b2 * &b4,
            &a1 * &a2 * &b1 + &b1 * &b2 * &b2 + &a1 * &b2 * &b3 + &a2 * &b1 * &b4,
            &a1 * &a2 * &b1 + &b1 * &b2 * &b2 + &a2 * &b1 * &b3 + &a1 * &b2 * &b4,
            &b1 * &sa * &sa + (&b2 + &sa) * &sb * &sb,
            &b1 * (&a1 + &b4) * &sa + (&b1 * &b2 + &a1 * &b3) * &sb,
            &b1 * (&a1 + &b3) * &sa + (&b1 * &b2 + &a1 * &b4) * &sb,
            (&a2 * &b1 + &b2 * &b3) * &sa + (&b2 * &b2 + &a2 * &b4) * &sb,
            (&a2 * &b1 + &b2 * &b4) * &sa + (&b2 * &b2 + &a2 * &b3) * &sb,
        ];
        let rhs = [
            &a1 * &a1 * &b1 + &b1 * &b1 * &b2 + &a1 * &b1 * &sb,
            &a2 * &a2 * &b1 + &b2 * &b2 * &b2 + &a2 * &b2 * &sb,
            &a3 * &a3 * &b1 + &b2 * &b3 * &b3 + &a3 * &b3 * &sb,
            &a4 * &a4 * &b1 + &b2 * &b4 * &b4 + &a4 * &b4 * &sb,
            &two * &b1 * (&a1 * &a2 + &a3 * &a4)
                + &two * &b2 * (&b1 * &b2 + &b3 * &b4)
                + &sb * (&a1 * &b2 + &a2 * &b1 + &a3 * &b4 + &a4 * &b3),
            &two * &a1 * &a3 * &b1 + &two * &b1 * &b2 * &b3 + &sb * (&a1 * &b3 + &a3 * &b1),
            &two * &a1 * &a4 * &b1 + &two * &b1 * &b2 * &b4 + &sb * (&a1 * &b4 + &a4 * &b1),
            &two * &a2 * &a3 * &b1 + &two * &b2 * &b2 * &b3 + &sb * (&a2 * &b3 + &a3 * &b2),
            &two * &a2 * &a4 * &b1 + &two * &b2 * &b2 * &b4 + &sb * (&a2 * &b4 + &a4 * &b2),
        ];
        core::array::from_fn(|i| &lhs[i] - &rhs[i])
    }

    fn check_against_displayed(m: &StructureMatrix) {
        let (de, df) = ec_defect(m);
        assert_eq!(coeffs_in_x_basis(&de).unwrap(), displayed_e_coordinate(m), "{m:?}");
        assert_eq!(coeffs_in_x_basis(&df).unwrap(), displayed_f_coordinate(m), "{m:?}");
    }

    #[test]
    fn defect_matches_displayed_expansion_f5() {
        let m = StructureMatrix::from_ints(F5, [[1, 2], [3, 4], [2, 1], [4, 3]]);
        check_against_displayed(&m);
    }

    proptest::proptest! {
        #[test]
        fn defect_matches_displayed_expansion_q(m in proptest::array::uniform8(-6i64..6)) {
            let a = StructureMatrix::from_ints(Q, [[m[0], m[1]], [m[2], m[3]], [m[4], m[5]], [m[6], m[7]]]);
            check_against_displayed(&a);
        }

        #[test]
        fn defect_degree_bound(m in proptest::array::uniform8(0i64..5)) {
            let a = StructureMatrix::from_ints(F5, [[m[0], m[1]], [m[2], m[3]], [m[4], m[5]], [m[6], m[7]]]);
            let (de, df) = ec_defect(&a);
            for p in [de, df] {
                for var in [Var::X1, Var::X2, Var::Y1, Var::Y2] {
                    proptest::prop_assert!(p.degree_in(var) <= 2);
                }
                proptest::prop_assert!(coeffs_in_x_basis(&p).is_ok());
            }
        }
    }

    #[test]
    fn monomial_ranks() {
        assert_eq!(independence_rank(MonomialSystem::XNine, F3).unwrap(), 9);
        assert_eq!(independence_rank(MonomialSystem::ZEight, F3).unwrap(), 8);
        assert_eq!(independence_rank(MonomialSystem::ZEight, F5).unwrap(), 8);
        assert_eq!(independence_rank(MonomialSystem::XNine, FieldSpec::Gf4).unwrap(), 9);
        assert_eq!(independence_rank(MonomialSystem::XNine, Q).unwrap(), 9);
        assert_eq!(independence_rank(MonomialSystem::ZEight, FieldSpec::Prime(2)).unwrap(), 8);
        assert!(independence_rank(MonomialSystem::XNine, FieldSpec::Prime(2)).is_err());
    }

    #[test]
    fn eval_matches_substitution() {
        let (x1, y2) = (v(F5, Var::X1), v(F5, Var::Y2));
        let p = &(&x1 * &x1) * &y2 + MultiPoly::constant(F5.from_int(3));
        let point = [2, 0, 0, 4, 0, 0].map(|n| F5.from_int(n));
        // 4·4 + 3 = 19 ≡ 4
        assert_eq!(p.eval(&point), F5.from_int(4));
    }
}
