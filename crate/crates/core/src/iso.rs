//! Basis changes and isomorphism of structure matrices.
//!
//! A basis change `X = [[x, y], [z, w]] ∈ GL2(K)` acts on structure matrices
//! by `A ↦ X̃⁻¹ A X`, where `X̃` is the 4×4 lift
//!
//! ```text
//! x²  y²  xy  xy
//! z²  w²  zw  zw
//! xz  yw  xw  yz
//! xz  yw  yz  xw
//! ```
//!
//! Two algebras are isomorphic iff some `X` maps one structure matrix to the
//! other, i.e. `X̃ A' = A X`. The lift is a group homomorphism, so `X̃⁻¹` is
//! computed as the lift of `X⁻¹`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::StructureMatrix;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::linalg::Matrix;

/// An invertible 2×2 matrix `[[x, y], [z, w]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Transform2 {
    spec: FieldSpec,
    entries: [FieldElem; 4],
}

impl Transform2 {
    pub fn new(x: FieldElem, y: FieldElem, z: FieldElem, w: FieldElem) -> Result<Self> {
        let spec = x.spec();
        for e in [&y, &z, &w] {
            if e.spec() != spec {
                return Err(Error::FieldMismatch(spec, e.spec()));
            }
        }
        let t = Transform2 {
            spec,
            entries: [x, y, z, w],
        };
        if t.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(t)
    }

    pub fn from_ints(spec: FieldSpec, [[x, y], [z, w]]: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(spec.from_int(x), spec.from_int(y), spec.from_int(z), spec.from_int(w))
    }

    pub fn identity(spec: FieldSpec) -> Self {
        Transform2 {
            spec,
            entries: [spec.one(), spec.zero(), spec.zero(), spec.one()],
        }
    }

    /// Parses `[[x,y],[z,w]]`.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let compact: alloc::string::String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("invalid transform {text:?}")))?;
        let cells: Vec<&str> = inner.split("],[").flat_map(|r| r.split(',')).collect();
        if cells.len() != 4 || inner.matches("],[").count() != 1 {
            return Err(Error::Parse(format!("transform needs 2x2 entries: {text:?}")));
        }
        let e: Vec<FieldElem> = cells.iter().map(|c| spec.parse_elem(c)).collect::<Result<_>>()?;
        let [x, y, z, w]: [FieldElem; 4] = e.try_into().expect("four entries");
        Self::new(x, y, z, w)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// `(x, y, z, w)`.
    pub fn entries(&self) -> &[FieldElem; 4] {
        &self.entries
    }

    pub fn det(&self) -> FieldElem {
        let [x, y, z, w] = &self.entries;
        x * w - y * z
    }

    pub fn inverse(&self) -> Self {
        let [x, y, z, w] = &self.entries;
        let inv = self.det().inv().expect("invertible by construction");
        Transform2 {
            spec: self.spec,
            entries: [w * &inv, -(y * &inv), -(z * &inv), x * &inv],
        }
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Transform2 {
            spec: self.spec,
            entries: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let [x, y, z, w] = self.entries.clone();
        Matrix::from_rows(self.spec, alloc::vec![alloc::vec![x, y], alloc::vec![z, w]])
    }

    /// The 4×4 lift `X̃`.
    pub fn tilde(&self) -> Matrix {
        let [a, b, c, d] = &self.entries;
        let rows = [
            [a * a, b * b, a * b, a * b],
            [c * c, d * d, c * d, c * d],
            [a * c, b * d, a * d, b * c],
            [a * c, b * d, b * c, a * d],
        ];
        Matrix::from_rows(self.spec, rows.into_iter().map(Vec::from).collect())
    }
}

impl fmt::Display for Transform2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.entries;
        write!(f, "[[{x},{y}],[{z},{w}]]")
    }
}

impl fmt::Debug for Transform2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.spec, self)
    }
}

fn same_field(a: FieldSpec, b: FieldSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch(a, b))
    }
}

/// Structure matrix of the same algebra in the basis given by `x`:
/// `X̃⁻¹ A X`.
pub fn transform(a: &StructureMatrix, x: &Transform2) -> Result<StructureMatrix> {
    same_field(a.spec(), x.spec())?;
    let lifted_inv = x.inverse().tilde();
    let m = lifted_inv.mul(&a.to_matrix()).mul(&x.to_matrix());
    Ok(StructureMatrix::from_matrix(&m))
}

/// Whether `X̃ A' = A X`, i.e. `x` carries `a` to `a_prime`.
pub fn is_equiv_under(a: &StructureMatrix, a_prime: &StructureMatrix, x: &Transform2) -> bool {
    if a.spec() != a_prime.spec() || a.spec() != x.spec() {
        return false;
    }
    x.tilde().mul(&a_prime.to_matrix()) == a.to_matrix().mul(&x.to_matrix())
}

/// Every invertible 2×2 matrix over a finite field, in lexicographic order
/// of `(x, y, z, w)`.
pub fn gl2_elements(spec: FieldSpec) -> Result<Vec<Transform2>> {
    let els = spec.elements()?;
    let mut out = Vec::new();
    for x in &els {
        for y in &els {
            for z in &els {
                for w in &els {
                    if let Ok(t) = Transform2::new(x.clone(), y.clone(), z.clone(), w.clone()) {
                        out.push(t);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Rank of the 4×2 structure matrix.
pub fn rank(a: &StructureMatrix) -> usize {
    a.to_matrix().rank()
}

/// Exhaustive search over `GL2(F_q)` for a basis change carrying `a` to
/// `a_prime`; `None` proves the algebras non-isomorphic.
pub fn find_isomorphism(a: &StructureMatrix, a_prime: &StructureMatrix) -> Result<Option<Transform2>> {
    same_field(a.spec(), a_prime.spec())?;
    let group = Gl2::new(a.spec())?;
    Ok(group.find_isomorphism(a, a_prime))
}

/// `GL2(F_q)` with the lifts precomputed, for repeated searches.
#[derive(Debug, Clone)]
pub struct Gl2 {
    spec: FieldSpec,
    elements: Vec<(Transform2, Matrix, Matrix)>,
}

impl Gl2 {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let elements = gl2_elements(spec)?
            .into_iter()
            .map(|t| {
                let (lift, m) = (t.tilde(), t.to_matrix());
                (t, lift, m)
            })
            .collect();
        Ok(Gl2 { spec, elements })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Transform2> {
        self.elements.iter().map(|(t, _, _)| t)
    }

    /// First `X` in scan order with `X̃ A' = A X`; rank mismatch exits early.
    pub fn find_isomorphism(&self, a: &StructureMatrix, a_prime: &StructureMatrix) -> Option<Transform2> {
        if a.spec() != self.spec || a_prime.spec() != self.spec {
            return None;
        }
        if rank(a) != rank(a_prime) {
            return None;
        }
        let (am, apm) = (a.to_matrix(), a_prime.to_matrix());
        self.elements
            .iter()
            .find(|(_, lift, m)| lift.mul(&apm) == am.mul(m))
            .map(|(t, _, _)| t.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CFormParams;

    const F3: FieldSpec = FieldSpec::Prime(3);
    const F5: FieldSpec = FieldSpec::Prime(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    fn ints(m: &Matrix) -> Vec<Vec<alloc::string::String>> {
        let (r, c) = m.shape();
        (0..r).map(|i| (0..c).map(|j| m[(i, j)].to_string()).collect()).collect()
    }

    fn c2(spec: FieldSpec, a: &FieldElem) -> StructureMatrix {
        CFormParams::new(spec.zero(), a.clone(), spec.zero(), &spec.one() - a, true, false).to_matrix()
    }

    fn c3(spec: FieldSpec, a: &FieldElem) -> StructureMatrix {
        CFormParams::new(a.clone(), spec.zero(), &spec.one() - a, spec.zero(), false, true).to_matrix()
    }

    fn c4(spec: FieldSpec, a: &FieldElem) -> StructureMatrix {
        let one_minus = &spec.one() - a;
        CFormParams::new(a.clone(), one_minus.clone(), one_minus, a.clone(), true, true).to_matrix()
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(Transform2::identity(Q).tilde(), Matrix::identity(Q, 4));
        let swap = Transform2::from_ints(Q, [[0, 1], [1, 0]]).unwrap();
        assert_eq!(
            ints(&swap.tilde()),
            [["0", "1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "1", "0"]]
        );
        let x = Transform2::from_ints(Q, [[0, 1], [1, -1]]).unwrap();
        assert_eq!(
            ints(&x.tilde()),
            [["0", "1", "0", "0"], ["1", "1", "-1", "-1"], ["0", "-1", "0", "1"], ["0", "-1", "1", "0"]]
        );
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(Transform2::from_ints(F5, [[1, 2], [2, 4]]), Err(Error::Singular));
        assert!(Transform2::parse(F5, "[[1,2],[3]]").is_err());
        assert_eq!(Transform2::parse(F5, "[[0,1],[1,-1]]").unwrap().to_string(), "[[0,1],[1,4]]");
    }

    #[test]
    fn swap_carries_c2_and_c3() {
        let swap = Transform2::from_ints(Q, [[0, 1], [1, 0]]).unwrap();
        for a in [Q.zero(), Q.one(), Q.from_ratio(1, 3).unwrap(), Q.from_int(-4)] {
            let one_minus = &Q.one() - &a;
            assert_eq!(transform(&c3(Q, &a), &swap).unwrap(), c2(Q, &one_minus));
            assert_eq!(transform(&c2(Q, &a), &swap).unwrap(), c3(Q, &one_minus));
            assert!(is_equiv_under(&c2(Q, &a), &c3(Q, &one_minus), &swap));
        }
    }

    #[test]
    fn skew_matrix_relates_c2_and_c4() {
        // X̃ C4(1-a) = C2(a) X: X maps C2(a) to C4(1-a), and X⁻¹ maps back.
        let x = Transform2::from_ints(Q, [[0, 1], [1, -1]]).unwrap();
        assert_eq!(x.inverse().to_string(), "[[1,1],[1,0]]");
        for a in [Q.zero(), Q.one(), Q.from_ratio(2, 5).unwrap()] {
            let one_minus = &Q.one() - &a;
            assert!(is_equiv_under(&c2(Q, &one_minus), &c4(Q, &a), &x));
            assert_eq!(transform(&c2(Q, &one_minus), &x).unwrap(), c4(Q, &a));
            assert_eq!(transform(&c4(Q, &a), &x.inverse()).unwrap(), c2(Q, &one_minus));
        }
    }

    #[test]
    fn identity_transform_and_equivalence() {
        let a = StructureMatrix::from_ints(F5, [[1, 2], [3, 4], [0, 1], [2, 2]]);
        let id = Transform2::identity(F5);
        assert_eq!(transform(&a, &id).unwrap(), a);
        assert!(is_equiv_under(&a, &a, &id));
        let c1 = CFormParams::from_ints(F5, [1, 0, -1, 0], false, false).to_matrix();
        let zero = StructureMatrix::zero(F5);
        for x in gl2_elements(F5).unwrap().iter().take(50) {
            assert!(!is_equiv_under(&zero, &c1, x));
        }
    }

    #[test]
    fn gl2_orders() {
        // brute-force count of nonsingular matrices among all q⁴
        for (spec, q) in [(F3, 3i64), (FieldSpec::Gf4, 4), (F5, 5)] {
            let els = spec.elements().unwrap();
            let mut count = 0;
            for x in &els {
                for y in &els {
                    for z in &els {
                        for w in &els {
                            if !(x * w - y * z).is_zero() {
                                count += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(gl2_elements(spec).unwrap().len(), count);
            assert_eq!(count as i64, (q * q - 1) * (q * q - q));
        }
        assert_eq!(gl2_elements(F3).unwrap().len(), 48);
        assert_eq!(gl2_elements(FieldSpec::Gf4).unwrap().len(), 180);
        assert_eq!(gl2_elements(F5).unwrap().len(), 480);
        assert!(gl2_elements(Q).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&StructureMatrix::zero(F3)), 0);
        assert_eq!(rank(&CFormParams::from_ints(F3, [1, 0, -1, 0], false, false).to_matrix()), 1);
        for a in F5.elements().unwrap() {
            assert_eq!(rank(&c2(F5, &a)), 2);
        }
    }

    #[test]
    fn search_examples() {
        let two = F3.from_int(2);
        let w = find_isomorphism(&c2(F3, &two), &c3(F3, &two)).unwrap().unwrap();
        assert!(is_equiv_under(&c2(F3, &two), &c3(F3, &two), &w));
        assert_eq!(find_isomorphism(&c2(F3, &F3.zero()), &c2(F3, &F3.one())).unwrap(), None);
        // a self-map always exists; check the one returned
        let a = c4(F3, &two);
        let w = find_isomorphism(&a, &a).unwrap().unwrap();
        assert!(is_equiv_under(&a, &a, &w));
        assert!(find_isomorphism(&c2(Q, &Q.one()), &c2(Q, &Q.one())).is_err());
    }

    #[test]
    fn homomorphism_and_determinant_f3() {
        let g = gl2_elements(F3).unwrap();
        for x in &g {
            let d = x.det();
            assert_eq!(x.tilde().det(), d.pow(4));
            for y in &g {
                assert_eq!(x.compose(y).tilde(), x.tilde().mul(&y.tilde()));
            }
        }
    }

    #[test]
    fn action_law_f5_sampled() {
        let g = gl2_elements(F5).unwrap();
        let a = StructureMatrix::from_ints(F5, [[1, 2], [0, 3], [4, 1], [2, 2]]);
        for (i, x) in g.iter().enumerate().step_by(37) {
            let y = &g[(i * 7 + 3) % g.len()];
            let lhs = transform(&transform(&a, x).unwrap(), y).unwrap();
            assert_eq!(lhs, transform(&a, &x.compose(y)).unwrap());
        }
    }

    proptest::proptest! {
        #[test]
        fn action_law_rationals(
            m in proptest::array::uniform8(-5i64..5),
            x in proptest::array::uniform4(-4i64..4),
            y in proptest::array::uniform4(-4i64..4),
        ) {
            let a = StructureMatrix::from_ints(Q, [[m[0], m[1]], [m[2], m[3]], [m[4], m[5]], [m[6], m[7]]]);
            let (Ok(x), Ok(y)) = (
                Transform2::from_ints(Q, [[x[0], x[1]], [x[2], x[3]]]),
                Transform2::from_ints(Q, [[y[0], y[1]], [y[2], y[3]]]),
            ) else {
                return Ok(());
            };
            let lhs = transform(&transform(&a, &x).unwrap(), &y).unwrap();
            proptest::prop_assert_eq!(lhs, transform(&a, &x.compose(&y)).unwrap());
            proptest::prop_assert!(is_equiv_under(&a, &transform(&a, &x).unwrap(), &x));
            proptest::prop_assert_eq!(rank(&transform(&a, &x).unwrap()), rank(&a));
        }
    }
}
