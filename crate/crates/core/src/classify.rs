//! Canonical forms of endo-commutative curled algebras and the constructive
//! classifier.
//!
//! Every such algebra over a field other than `F2` is isomorphic to exactly
//! one of `C0`, `C1` or `C2(a)`. The classifier returns the label together
//! with an explicit basis change `X` such that `transform(A, X)` is the
//! canonical structure matrix.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{CFormParams, EcMethod, StructureMatrix};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::iso::{self, Transform2};

/// `C3(a)` and `C4(a)` name the `ECC01` and `ECC11` members; both are
/// isomorphic to `C2(1 - a)` and never leave [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalLabel {
    C0,
    C1,
    C2(FieldElem),
    C3(FieldElem),
    C4(FieldElem),
}

impl CanonicalLabel {
    /// Replaces the aliases by the `C2` form they are isomorphic to.
    pub fn resolve(&self) -> CanonicalLabel {
        match self {
            CanonicalLabel::C3(a) | CanonicalLabel::C4(a) => CanonicalLabel::C2(&a.spec().one() - a),
            other => other.clone(),
        }
    }

    pub fn is_alias(&self) -> bool {
        matches!(self, CanonicalLabel::C3(_) | CanonicalLabel::C4(_))
    }

    fn param(&self) -> Option<&FieldElem> {
        match self {
            CanonicalLabel::C0 | CanonicalLabel::C1 => None,
            CanonicalLabel::C2(a) | CanonicalLabel::C3(a) | CanonicalLabel::C4(a) => Some(a),
        }
    }

    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let t = text.trim();
        match t {
            "C0" => return Ok(CanonicalLabel::C0),
            "C1" => return Ok(CanonicalLabel::C1),
            _ => {}
        }
        let bad = || Error::Parse(format!("invalid canonical label {text:?}"));
        let (head, rest) = t.split_at(t.find('(').ok_or_else(bad)?);
        let arg = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let a = spec.parse_elem(arg)?;
        match head {
            "C2" => Ok(CanonicalLabel::C2(a)),
            "C3" => Ok(CanonicalLabel::C3(a)),
            "C4" => Ok(CanonicalLabel::C4(a)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalLabel::C0 => f.write_str("C0"),
            CanonicalLabel::C1 => f.write_str("C1"),
            CanonicalLabel::C2(a) => write!(f, "C2({a})"),
            CanonicalLabel::C3(a) => write!(f, "C3({a})"),
            CanonicalLabel::C4(a) => write!(f, "C4({a})"),
        }
    }
}

/// Exact structure matrix of a canonical form. Aliases give the `ECC01` or
/// `ECC11` member they name.
pub fn canonical_matrix(label: &CanonicalLabel, spec: FieldSpec) -> StructureMatrix {
    let (zero, one) = (spec.zero(), spec.one());
    match label {
        CanonicalLabel::C0 => StructureMatrix::zero(spec),
        CanonicalLabel::C1 => CFormParams::new(one.clone(), zero.clone(), -one, zero, false, false).to_matrix(),
        CanonicalLabel::C2(a) => CFormParams::new(zero.clone(), a.clone(), zero, &one - a, true, false).to_matrix(),
        CanonicalLabel::C3(a) => CFormParams::new(a.clone(), zero.clone(), &one - a, zero, false, true).to_matrix(),
        CanonicalLabel::C4(a) => {
            let b = &one - a;
            CFormParams::new(a.clone(), b.clone(), b, a.clone(), true, true).to_matrix()
        }
    }
}

/// True iff the labels name the same isomorphism class.
pub fn labels_isomorphic(l: &CanonicalLabel, r: &CanonicalLabel) -> bool {
    l.resolve() == r.resolve()
}

/// Result of [`classify`]: `transform(A, witness) == canonical_matrix(label)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub label: CanonicalLabel,
    pub witness: Transform2,
}

/// Witness sending `C(a, b, -a, -b; 0, 0)` with `(a, b) != 0` to `C1`.
///
/// `X = [[x, -b], [z, a]]` with `(x, z) = (1, 0)` if `a != 0`, else `(0, 1)`;
/// then `Xᵗ (a, b)ᵗ = det(X) (1, 0)ᵗ`.
pub fn ecc00_witness(a: &FieldElem, b: &FieldElem) -> Result<Transform2> {
    let s = a.spec();
    let (x, z) = if a.is_zero() { (s.zero(), s.one()) } else { (s.one(), s.zero()) };
    Transform2::new(x, -b, z, a.clone())
}

/// Label and dispatch witness for a curled EC C-form.
fn dispatch(p: &CFormParams) -> Result<(CanonicalLabel, Transform2)> {
    let s = p.spec();
    let id = Transform2::identity(s);
    match (p.eps, p.delta) {
        (false, false) => {
            if p.a.is_zero() && p.b.is_zero() {
                Ok((CanonicalLabel::C0, id))
            } else {
                Ok((CanonicalLabel::C1, ecc00_witness(&p.a, &p.b)?))
            }
        }
        (true, false) => Ok((CanonicalLabel::C2(p.b.clone()), id)),
        (false, true) => Ok((
            CanonicalLabel::C3(p.a.clone()).resolve(),
            Transform2::from_ints(s, [[0, 1], [1, 0]])?,
        )),
        // [[0,1],[1,-1]] carries C2(1-a) to C4(a); its inverse goes back.
        (true, true) => Ok((
            CanonicalLabel::C4(p.a.clone()).resolve(),
            Transform2::from_ints(s, [[1, 1], [1, 0]])?,
        )),
    }
}

/// Classifies an endo-commutative curled algebra.
///
/// Fails with [`Error::UnsupportedField`] over `F2` and with
/// [`Error::NotClassifiable`] when the algebra is not endo-commutative or not
/// curled.
pub fn classify(a: &StructureMatrix) -> Result<Classification> {
    let spec = a.spec();
    spec.require_nontrivial()?;
    if !a.is_endo_commutative(EcMethod::Criterion)? {
        return Err(Error::NotClassifiable("endo-commutative"));
    }
    if !a.is_curled()? {
        return Err(Error::NotClassifiable("curled"));
    }
    let (params, normalizer) = a.normalize_curled()?;
    if !params.is_ec_curled() {
        return Err(Error::Internal(format!("normal form {params} fails the C-form criteria")));
    }
    let (label, step) = dispatch(&params)?;
    let witness = normalizer.compose(&step);
    let image = iso::transform(a, &witness)?;
    let expected = canonical_matrix(&label, spec);
    if image != expected {
        return Err(Error::Internal(format!(
            "witness {witness} maps {a} to {image}, expected {expected}"
        )));
    }
    Ok(Classification { label, witness })
}

/// Properties whose curled EC classes are listed by [`special_classes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialKind {
    Zeropotent,
    Commutative,
    Anticommutative,
    Associative,
}

impl SpecialKind {
    pub const ALL: [SpecialKind; 4] = [
        SpecialKind::Zeropotent,
        SpecialKind::Commutative,
        SpecialKind::Anticommutative,
        SpecialKind::Associative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::Zeropotent => "zeropotent",
            SpecialKind::Commutative => "commutative",
            SpecialKind::Anticommutative => "anticommutative",
            SpecialKind::Associative => "associative",
        }
    }

    pub fn holds(self, a: &StructureMatrix) -> bool {
        match self {
            SpecialKind::Zeropotent => a.is_zeropotent(),
            SpecialKind::Commutative => a.is_commutative(),
            SpecialKind::Anticommutative => a.is_anticommutative(),
            SpecialKind::Associative => a.is_associative(),
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpecialKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

/// Classes of curled EC algebras with the given property, sorted.
pub fn special_classes(kind: SpecialKind, spec: FieldSpec) -> Result<Vec<CanonicalLabel>> {
    spec.require_nontrivial()?;
    let mut out = match kind {
        SpecialKind::Zeropotent | SpecialKind::Anticommutative => vec![CanonicalLabel::C0, CanonicalLabel::C1],
        SpecialKind::Commutative if spec.characteristic() == 2 => vec![CanonicalLabel::C0, CanonicalLabel::C1],
        SpecialKind::Commutative => vec![CanonicalLabel::C0, CanonicalLabel::C2(spec.from_int(2).inv()?)],
        SpecialKind::Associative => vec![
            CanonicalLabel::C0,
            CanonicalLabel::C2(spec.zero()),
            CanonicalLabel::C2(spec.one()),
        ],
    };
    out.sort();
    Ok(out)
}

/// All canonical labels over a finite field: `C0`, `C1`, then `C2(a)` for
/// each `a` in element order.
pub fn canonical_labels(spec: FieldSpec) -> Result<Vec<CanonicalLabel>> {
    spec.require_nontrivial()?;
    let mut out = vec![CanonicalLabel::C0, CanonicalLabel::C1];
    out.extend(spec.elements()?.into_iter().map(CanonicalLabel::C2));
    Ok(out)
}

impl Classification {
    /// `label` and `witness` in their text forms.
    pub fn to_strings(&self) -> (alloc::string::String, alloc::string::String) {
        (self.label.to_string(), self.witness.to_string())
    }

    pub fn param(&self) -> Option<&FieldElem> {
        self.label.param()
    }
}
