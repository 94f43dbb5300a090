//! Two-dimensional algebras given by structure matrices, and the property
//! predicates used by the classification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::iso::Transform2;
use crate::linalg::{self, Matrix};
use crate::poly;

/// The 4×2 matrix of structure constants with rows `e², f², ef, fe`.
///
/// Row `i` holds `(a_i, b_i)` with `e² = a1 e + b1 f`, `f² = a2 e + b2 f`,
/// `ef = a3 e + b3 f` and `fe = a4 e + b4 f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureMatrix {
    spec: FieldSpec,
    rows: [[FieldElem; 2]; 4],
}

/// `x = x1 e + x2 f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub x1: FieldElem,
    pub x2: FieldElem,
}

impl AlgebraElement {
    pub fn new(x1: FieldElem, x2: FieldElem) -> Self {
        debug_assert_eq!(x1.spec(), x2.spec());
        AlgebraElement { x1, x2 }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Self::new(spec.zero(), spec.zero())
    }

    pub fn e(spec: FieldSpec) -> Self {
        Self::new(spec.one(), spec.zero())
    }

    pub fn f(spec: FieldSpec) -> Self {
        Self::new(spec.zero(), spec.one())
    }

    pub fn spec(&self) -> FieldSpec {
        self.x1.spec()
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.x1 + &other.x1, &self.x2 + &other.x2)
    }

    pub fn scale(&self, k: &FieldElem) -> Self {
        Self::new(k * &self.x1, k * &self.x2)
    }

    /// Whether `self` and `other` are linearly dependent.
    pub fn is_parallel(&self, other: &Self) -> bool {
        (&self.x1 * &other.x2 - &self.x2 * &other.x1).is_zero()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x1, self.x2)
    }
}

/// Parameters of the C-form `C(a, b, c, d; ε, δ)`:
/// `e² = εe`, `f² = δf`, `ef = ae + bf`, `fe = ce + df`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CFormParams {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
    pub eps: bool,
    pub delta: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EcMethod {
    /// The structure-constant criterion (the eight-equation system, or the
    /// six-equation C-form specialisation when the matrix is in C-form).
    Criterion,
    /// Formal vanishing of `x²y² - (xy)²` as polynomials.
    FormalDefect,
    /// Direct evaluation over all pairs of elements (finite fields only).
    Pointwise,
}

fn bit(spec: FieldSpec, b: bool) -> FieldElem {
    if b {
        spec.one()
    } else {
        spec.zero()
    }
}

impl CFormParams {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem, eps: bool, delta: bool) -> Self {
        debug_assert!([&b, &c, &d].iter().all(|x| x.spec() == a.spec()));
        CFormParams { a, b, c, d, eps, delta }
    }

    pub fn from_ints(spec: FieldSpec, [a, b, c, d]: [i64; 4], eps: bool, delta: bool) -> Self {
        Self::new(spec.from_int(a), spec.from_int(b), spec.from_int(c), spec.from_int(d), eps, delta)
    }

    pub fn spec(&self) -> FieldSpec {
        self.a.spec()
    }

    pub fn to_matrix(&self) -> StructureMatrix {
        let s = self.spec();
        StructureMatrix {
            spec: s,
            rows: [
                [bit(s, self.eps), s.zero()],
                [s.zero(), bit(s, self.delta)],
                [self.a.clone(), self.b.clone()],
                [self.c.clone(), self.d.clone()],
            ],
        }
    }

    /// Curledness criterion for C-forms: `b + d = ε` and `a + c = δ`.
    pub fn curled_by_criterion(&self) -> bool {
        let s = self.spec();
        &self.b + &self.d == bit(s, self.eps) && &self.a + &self.c == bit(s, self.delta)
    }

    /// The six-equation endo-commutativity system for C-forms.
    pub fn ec_by_criterion(&self) -> bool {
        let s = self.spec();
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, dl) = (bit(s, self.eps), bit(s, self.delta));
        let ed = &e * &dl;
        let equations = [
            (&ed * a, &e * &(a * a) + a * &(a * b) + a * &(b * c)),
            (&ed * c, &e * &(c * c) + a * &(c * d) + c * &(c * d)),
            (&e * c + &e * &(a * d), &e * a + &e * &(b * c)),
            (&ed * b, &dl * &(b * b) + a * &(b * b) + a * &(b * d)),
            (&ed * d, &dl * &(d * d) + b * &(c * d) + c * &(d * d)),
            (&dl * &(b * c) + &dl * d, &dl * b + &dl * &(a * d)),
        ];
        equations.iter().all(|(l, r)| l == r)
    }

    /// Endo-commutative and curled, by the combined eight-equation system.
    pub fn is_ec_curled(&self) -> bool {
        self.curled_by_criterion() && self.ec_by_criterion()
    }
}

impl fmt::Display for CFormParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C({},{},{},{};{},{})",
            self.a, self.b, self.c, self.d, self.eps as u8, self.delta as u8
        )
    }
}

impl StructureMatrix {
    pub fn new(spec: FieldSpec, rows: [[FieldElem; 2]; 4]) -> Result<Self> {
        for x in rows.iter().flatten() {
            if x.spec() != spec {
                return Err(Error::FieldMismatch(spec, x.spec()));
            }
        }
        Ok(StructureMatrix { spec, rows })
    }

    pub fn zero(spec: FieldSpec) -> Self {
        StructureMatrix {
            spec,
            rows: core::array::from_fn(|_| [spec.zero(), spec.zero()]),
        }
    }

    pub fn from_ints(spec: FieldSpec, rows: [[i64; 2]; 4]) -> Self {
        StructureMatrix {
            spec,
            rows: rows.map(|[a, b]| [spec.from_int(a), spec.from_int(b)]),
        }
    }

    /// Parses `[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]` or `C(a,b,c,d;eps,delta)`.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = compact.strip_prefix("C(").and_then(|s| s.strip_suffix(')')) {
            return parse_cform(spec, inner).map(|p| p.to_matrix());
        }
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::parse(format!("invalid structure matrix {text:?}")))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 4 {
            return Err(Error::parse(format!("structure matrix needs 4 rows, got {}", rows.len())));
        }
        let mut out = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(Error::parse(format!("structure matrix row {row:?} needs 2 entries")));
            }
            out.push([spec.parse_elem(cells[0])?, spec.parse_elem(cells[1])?]);
        }
        let rows: [[FieldElem; 2]; 4] = out.try_into().expect("four rows");
        Ok(StructureMatrix { spec, rows })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> &[[FieldElem; 2]; 4] {
        &self.rows
    }

    /// `a_i` for `i` in `1..=4`.
    pub fn a(&self, i: usize) -> &FieldElem {
        &self.rows[i - 1][0]
    }

    /// `b_i` for `i` in `1..=4`.
    pub fn b(&self, i: usize) -> &FieldElem {
        &self.rows[i - 1][1]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.spec, self.rows.iter().map(|r| r.to_vec()).collect())
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert_eq!(m.shape(), (4, 2));
        StructureMatrix {
            spec: m.spec(),
            rows: core::array::from_fn(|i| [m[(i, 0)].clone(), m[(i, 1)].clone()]),
        }
    }

    /// The C-form parameters if `b1 = a2 = 0` and `a1, b2 ∈ {0, 1}`.
    pub fn as_cform(&self) -> Option<CFormParams> {
        let flag = |x: &FieldElem| {
            if x.is_zero() {
                Some(false)
            } else if x.is_one() {
                Some(true)
            } else {
                None
            }
        };
        if !self.b(1).is_zero() || !self.a(2).is_zero() {
            return None;
        }
        Some(CFormParams::new(
            self.a(3).clone(),
            self.b(3).clone(),
            self.a(4).clone(),
            self.b(4).clone(),
            flag(self.a(1))?,
            flag(self.b(2))?,
        ))
    }

    fn check_elem(&self, x: &AlgebraElement) -> Result<()> {
        if x.spec() != self.spec {
            Err(Error::FieldMismatch(self.spec, x.spec()))
        } else {
            Ok(())
        }
    }

    /// `xy = E e + F f` with `E = x1y1 a1 + x2y2 a2 + x1y2 a3 + x2y1 a4`
    /// and `F` likewise in the `b_i`.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let w = [&x.x1 * &y.x1, &x.x2 * &y.x2, &x.x1 * &y.x2, &x.x2 * &y.x1];
        let coord = |col: usize| {
            w.iter()
                .zip(&self.rows)
                .fold(self.spec.zero(), |acc, (wi, row)| acc + wi * &row[col])
        };
        AlgebraElement::new(coord(0), coord(1))
    }

    pub fn square(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.multiply(x, x)
    }

    /// All elements `x1 e + x2 f` of a finite algebra.
    pub fn elements(&self) -> Result<Vec<AlgebraElement>> {
        let els = self.spec.elements()?;
        Ok(els
            .iter()
            .flat_map(|x1| els.iter().map(move |x2| AlgebraElement::new(x1.clone(), x2.clone())))
            .collect())
    }

    pub fn is_endo_commutative(&self, method: EcMethod) -> Result<bool> {
        match method {
            EcMethod::Criterion => Ok(match self.as_cform() {
                Some(p) => p.ec_by_criterion(),
                None => self.satisfies_ec_system(),
            }),
            EcMethod::FormalDefect => {
                let (de, df) = poly::ec_defect(self);
                Ok(de.is_zero() && df.is_zero())
            }
            EcMethod::Pointwise => {
                if !self.spec.is_finite() {
                    return Err(Error::UnsupportedField {
                        field: self.spec,
                        reason: "pointwise checks need a finite field",
                    });
                }
                Ok(self.ec_pointwise())
            }
        }
    }

    fn ec_pointwise(&self) -> bool {
        let els = self.elements().expect("finite field");
        let squares: Vec<AlgebraElement> = els.iter().map(|x| self.mul_unchecked(x, x)).collect();
        for (x, xx) in els.iter().zip(&squares) {
            for (y, yy) in els.iter().zip(&squares) {
                let xy = self.mul_unchecked(x, y);
                if self.mul_unchecked(xx, yy) != self.mul_unchecked(&xy, &xy) {
                    return false;
                }
            }
        }
        true
    }

    /// The eight-equation structure-constant system for endo-commutativity
    /// of a general structure matrix.
    pub fn satisfies_ec_system(&self) -> bool {
        let (a1, b1, a2, b2) = (self.a(1), self.b(1), self.a(2), self.b(2));
        let (a3, b3, a4, b4) = (self.a(3), self.b(3), self.a(4), self.b(4));
        let m = |xs: &[&FieldElem]| xs.iter().skip(1).fold((*xs[0]).clone(), |acc, x| acc * *x);
        let equations = [
            (
                m(&[a1, a1, a2]) + m(&[b1, a2, b2]) + m(&[a1, b2, a3]) + m(&[b1, a2, a4]),
                m(&[a1, a3, a3]) + m(&[a2, b3, b3]) + m(&[a3, a3, b3]) + m(&[a3, b3, a4]),
            ),
            (
                m(&[a1, a1, a2]) + m(&[b1, a2, b2]) + m(&[b1, a2, a3]) + m(&[a1, b2, a4]),
                m(&[a1, a4, a4]) + m(&[a2, b4, b4]) + m(&[a3, a4, b4]) + m(&[a4, a4, b4]),
            ),
            (
                m(&[a1, a1, a4]) + m(&[b1, a4, a4]) + m(&[b1, a2, b4]) + m(&[a1, a3, b4]),
                m(&[a1, a1, a3]) + m(&[b1, a2, b3]) + m(&[b1, a3, a3]) + m(&[a1, b3, a4]),
            ),
            (
                a2 * &(a1 * a4 + a4 * b4 + b2 * b4),
                a2 * &(a1 * a3 + b2 * b3 + a3 * b3),
            ),
            (
                m(&[a1, b1, a2]) + m(&[b1, b2, b2]) + m(&[a1, b2, b3]) + m(&[b1, a2, b4]),
                m(&[b1, a3, a3]) + m(&[b2, b3, b3]) + m(&[a3, b3, b3]) + m(&[a3, b3, b4]),
            ),
            (
                m(&[a1, b1, a2]) + m(&[b1, b2, b2]) + m(&[b1, a2, b3]) + m(&[a1, b2, b4]),
                m(&[b1, a4, a4]) + m(&[b2, b4, b4]) + m(&[b3, a4, b4]) + m(&[a4, b4, b4]),
            ),
            (
                b1 * &(a1 * a4 + a4 * b4 + b2 * b4),
                b1 * &(a1 * a3 + b2 * b3 + a3 * b3),
            ),
            (
                m(&[b1, a2, a4]) + m(&[b2, b3, a4]) + m(&[b2, b2, b4]) + m(&[a2, b4, b4]),
                m(&[b1, a2, a3]) + m(&[b2, b2, b3]) + m(&[a2, b3, b3]) + m(&[b2, a3, b4]),
            ),
        ];
        equations.iter().all(|(l, r)| l == r)
    }

    /// Whether every square `x²` is a scalar multiple of `x`.
    ///
    /// Finite fields are checked pointwise. Over `Q` the basis squares must
    /// already be parallel to the basis vectors (`b1 = a2 = 0`); the matrix
    /// is then rescaled to C-form and tested with the C-form criterion.
    pub fn is_curled(&self) -> Result<bool> {
        if self.spec.is_f2() {
            return Err(Error::UnsupportedField {
                field: self.spec,
                reason: "curledness is only characterised for fields with more than two elements",
            });
        }
        if self.spec.is_finite() {
            return Ok(self.curled_pointwise());
        }
        if !self.b(1).is_zero() || !self.a(2).is_zero() {
            return Ok(false);
        }
        let (params, _) = self.diagonal_normalize();
        Ok(params.curled_by_criterion())
    }

    fn curled_pointwise(&self) -> bool {
        self.elements()
            .expect("finite field")
            .iter()
            .all(|x| x.is_parallel(&self.mul_unchecked(x, x)))
    }

    pub fn is_commutative(&self) -> bool {
        self.a(3) == self.a(4) && self.b(3) == self.b(4)
    }

    /// Additive square map: `xy + yx = 0` for all `x, y`.
    pub fn is_anticommutative(&self) -> bool {
        let two = self.spec.from_int(2);
        (self.a(3) + self.a(4)).is_zero()
            && (self.b(3) + self.b(4)).is_zero()
            && [self.a(1), self.b(1), self.a(2), self.b(2)]
                .iter()
                .all(|x| (&two * *x).is_zero())
    }

    /// `x² = 0` for all `x`.
    pub fn is_zeropotent(&self) -> bool {
        [self.a(1), self.b(1), self.a(2), self.b(2)].iter().all(|x| x.is_zero())
            && (self.a(3) + self.a(4)).is_zero()
            && (self.b(3) + self.b(4)).is_zero()
    }

    /// `(uv)w = u(vw)` on all eight triples of basis vectors.
    pub fn is_associative(&self) -> bool {
        let basis = [AlgebraElement::e(self.spec), AlgebraElement::f(self.spec)];
        basis.iter().all(|u| {
            basis.iter().all(|v| {
                basis.iter().all(|w| {
                    let left = self.mul_unchecked(&self.mul_unchecked(u, v), w);
                    let right = self.mul_unchecked(u, &self.mul_unchecked(v, w));
                    left == right
                })
            })
        })
    }

    /// Solves `ue = eu = e`, `uf = fu = f` for `u = αe + βf`.
    pub fn find_unit(&self) -> Option<AlgebraElement> {
        let s = self.spec;
        let (e2, f2, ef, fe) = (&self.rows[0], &self.rows[1], &self.rows[2], &self.rows[3]);
        // (α-coefficient row, β-coefficient row, target) for each product
        let products: [(&[FieldElem; 2], &[FieldElem; 2], [i64; 2]); 4] = [
            (e2, fe, [1, 0]), // ue = e
            (e2, ef, [1, 0]), // eu = e
            (ef, f2, [0, 1]), // uf = f
            (fe, f2, [0, 1]), // fu = f
        ];
        let mut rows = Vec::with_capacity(8);
        let mut rhs = Vec::with_capacity(8);
        for (alpha, beta, target) in products {
            for k in 0..2 {
                rows.push(vec![alpha[k].clone(), beta[k].clone()]);
                rhs.push(s.from_int(target[k]));
            }
        }
        let sol = linalg::solve(&Matrix::from_rows(s, rows), &rhs)?;
        Some(AlgebraElement::new(sol[0].clone(), sol[1].clone()))
    }

    /// Rescales a matrix with `b1 = a2 = 0` by `diag(u, v)`, where `u = a1`
    /// (or 1 if `a1 = 0`) and `v = b2` (or 1 if `b2 = 0`), so that `e²` and
    /// `f²` become `εe` and `δf`.
    fn diagonal_normalize(&self) -> (CFormParams, Transform2) {
        debug_assert!(self.b(1).is_zero() && self.a(2).is_zero());
        let s = self.spec;
        let pick = |x: &FieldElem| if x.is_zero() { s.one() } else { x.clone() };
        let witness = Transform2::new(pick(self.a(1)), s.zero(), s.zero(), pick(self.b(2)))
            .expect("diagonal with nonzero entries");
        let image = crate::iso::transform(self, &witness).expect("same field");
        let params = image.as_cform().expect("diagonal rescaling yields C-form");
        (params, witness)
    }

    /// C-form parameters of a curled algebra together with the diagonal
    /// basis change `X` such that `transform(self, X)` is that C-form.
    pub fn normalize_curled(&self) -> Result<(CFormParams, Transform2)> {
        if !self.is_curled()? {
            return Err(Error::Precondition(format!("{self} is not curled")));
        }
        Ok(self.diagonal_normalize())
    }
}

fn parse_cform(spec: FieldSpec, inner: &str) -> Result<CFormParams> {
    let bad = || Error::parse(format!("invalid C-form literal C({inner})"));
    let (vals, flags) = inner.split_once(';').ok_or_else(bad)?;
    let vals: Vec<&str> = vals.split(',').collect();
    let flags: Vec<&str> = flags.split(',').collect();
    if vals.len() != 4 || flags.len() != 2 {
        return Err(bad());
    }
    let flag = |t: &str| match t {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::parse(format!("C-form flags must be 0 or 1, got {t:?}"))),
    };
    Ok(CFormParams::new(
        spec.parse_elem(vals[0])?,
        spec.parse_elem(vals[1])?,
        spec.parse_elem(vals[2])?,
        spec.parse_elem(vals[3])?,
        flag(flags[0])?,
        flag(flags[1])?,
    ))
}

impl fmt::Display for StructureMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, [a, b]) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{a},{b}]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for StructureMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.spec, self)
    }
}

impl PartialOrd for StructureMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(a1, b1, a2, b2, a3, b3, a4, b4)`.
impl Ord for StructureMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.spec
            .cmp(&other.spec)
            .then_with(|| self.rows.iter().flatten().cmp(other.rows.iter().flatten()))
    }
}

/// Every C-form `C(a, b, c, d; ε, δ)` over a finite field, in lexicographic
/// order of `(ε, δ, a, b, c, d)`.
pub fn all_cforms(spec: FieldSpec) -> Result<Vec<CFormParams>> {
    let els = spec.elements()?;
    let mut out = Vec::with_capacity(4 * els.len().pow(4));
    for eps in [false, true] {
        for delta in [false, true] {
            for a in &els {
                for b in &els {
                    for c in &els {
                        for d in &els {
                            out.push(CFormParams::new(a.clone(), b.clone(), c.clone(), d.clone(), eps, delta));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
