use std::collections::BTreeSet;

use curled2_core::classify::{canonical_labels, canonical_matrix, classify, special_classes};
use curled2_core::iso::{gl2_elements, transform};
use curled2_core::{CFormParams, CanonicalLabel, EcMethod, Error, FieldElem, FieldSpec, SpecialKind, StructureMatrix, Transform2};
use proptest::prelude::*;

const F3: FieldSpec = FieldSpec::Prime(3);
const Q: FieldSpec = FieldSpec::Rationals;

fn all_matrices(spec: FieldSpec) -> impl Iterator<Item = StructureMatrix> {
    let els = spec.elements().unwrap();
    let q = els.len();
    (0..q.pow(8)).map(move |mut n| {
        let mut e: Vec<FieldElem> = Vec::with_capacity(8);
        for _ in 0..8 {
            e.push(els[n % q].clone());
            n /= q;
        }
        let g = |i: usize| e[i].clone();
        StructureMatrix::new(spec, [[g(0), g(1)], [g(2), g(3)], [g(4), g(5)], [g(6), g(7)]]).unwrap()
    })
}

#[test]
fn documented_examples() {
    let cases = [
        (Q, "C(1,0,-1,0;0,0)", "C1", "[[1,0],[0,1]]"),
        (Q, "C(1/3,0,2/3,0;0,1)", "C2(2/3)", "[[0,1],[1,0]]"),
        (Q, "[[0,0],[0,1],[1/3,0],[2/3,0]]", "C2(2/3)", "[[0,1],[1,0]]"),
        (F3, "C(2,-1,-1,2;1,1)", "C2(2)", "[[1,1],[1,0]]"),
        (F3, "C(1,0,2,0;0,0)", "C1", "[[1,0],[0,1]]"),
    ];
    for (spec, lit, label, witness) in cases {
        let a = StructureMatrix::parse(spec, lit).unwrap();
        let c = classify(&a).unwrap();
        assert_eq!(c.label.to_string(), label, "{lit}");
        assert_eq!(c.witness.to_string(), witness, "{lit}");
        assert_eq!(transform(&a, &c.witness).unwrap(), canonical_matrix(&c.label, spec));
    }
}

/// Over F3 every structure matrix that is EC and curled by direct evaluation
/// is classified, everything else is refused, and the number of classified
/// matrices equals the sum of the orbit sizes of the canonical forms.
#[test]
fn exhaustive_f3_domain_and_orbit_count() {
    let mut classified = 0usize;
    let mut labels = BTreeSet::new();
    for a in all_matrices(F3) {
        let in_domain = a.is_curled().unwrap() && a.is_endo_commutative(EcMethod::Pointwise).unwrap();
        match classify(&a) {
            Ok(c) => {
                assert!(in_domain, "{a} classified outside the domain");
                classified += 1;
                labels.insert(c.label);
            }
            Err(Error::NotClassifiable(_)) => assert!(!in_domain, "{a} refused"),
            Err(e) => panic!("{a}: {e}"),
        }
    }
    let group = gl2_elements(F3).unwrap();
    let orbit_total: usize = canonical_labels(F3)
        .unwrap()
        .iter()
        .map(|l| {
            let m = canonical_matrix(l, F3);
            group.iter().map(|x| transform(&m, x).unwrap()).collect::<BTreeSet<_>>().len()
        })
        .sum();
    assert_eq!(classified, orbit_total);
    assert_eq!(labels.len(), 5);
}

#[test]
fn special_classes_over_general_f3_matrices() {
    for kind in SpecialKind::ALL {
        let found: BTreeSet<CanonicalLabel> = all_matrices(F3)
            .filter(|a| kind.holds(a))
            .filter_map(|a| classify(&a).ok())
            .map(|c| c.label)
            .collect();
        let want: BTreeSet<CanonicalLabel> = special_classes(kind, F3).unwrap().into_iter().collect();
        assert_eq!(found, want, "{kind}");
    }
}

fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    prop_oneof![Just((0, 1)), Just((1, 1)), (-30i64..30, 1i64..12)]
}

proptest! {
    /// A family member seen in a random basis is classified to the label the
    /// family predicts, with an exact witness.
    #[test]
    fn classify_in_random_basis(
        family in 0usize..4,
        (an, ad) in small_rational(),
        (bn, bd) in small_rational(),
        x in proptest::array::uniform4(-3i64..4),
    ) {
        let (a, b) = (Q.from_ratio(an, ad).unwrap(), Q.from_ratio(bn, bd).unwrap());
        let one = Q.one();
        let z = Q.zero();
        let (member, want) = match family {
            0 => {
                let want = if a.is_zero() && b.is_zero() { CanonicalLabel::C0 } else { CanonicalLabel::C1 };
                (CFormParams::new(a.clone(), b.clone(), -&a, -&b, false, false), want)
            }
            1 => (CFormParams::new(z.clone(), b.clone(), z.clone(), &one - &b, true, false), CanonicalLabel::C2(b.clone())),
            2 => (CFormParams::new(a.clone(), z.clone(), &one - &a, z.clone(), false, true), CanonicalLabel::C2(&one - &a)),
            _ => (CFormParams::new(a.clone(), &one - &a, &one - &a, a.clone(), true, true), CanonicalLabel::C2(&one - &a)),
        };
        let Ok(x) = Transform2::from_ints(Q, [[x[0], x[1]], [x[2], x[3]]]) else { return Ok(()) };
        let seen = transform(&member.to_matrix(), &x).unwrap();
        let c = classify(&seen).unwrap();
        prop_assert_eq!(&c.label, &want);
        prop_assert_eq!(transform(&seen, &c.witness).unwrap(), canonical_matrix(&want, Q));
    }

    /// Parameter faithfulness: distinct C2 parameters never share a label.
    #[test]
    fn c2_parameter_is_recovered((n, d) in small_rational()) {
        let a = Q.from_ratio(n, d).unwrap();
        let c = classify(&canonical_matrix(&CanonicalLabel::C2(a.clone()), Q)).unwrap();
        prop_assert_eq!(c.label, CanonicalLabel::C2(a));
        prop_assert_eq!(c.witness, Transform2::identity(Q));
    }
}
