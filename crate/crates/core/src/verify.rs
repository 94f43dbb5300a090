//! Exhaustive re-checks of the classification and its supporting criteria
//! over small finite fields.
//!
//! Each check enumerates everything it can afford, compares an independent
//! route against the library's fast path, and reports counts plus the first
//! counterexamples on failure. Sampling, where needed, is driven by a seeded
//! ChaCha8 generator so reports are reproducible.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{all_cforms, CFormParams, EcMethod, StructureMatrix};
use crate::classify::{
    canonical_labels, canonical_matrix, classify, ecc00_witness, special_classes, CanonicalLabel, SpecialKind,
};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::iso::{self, Gl2, Transform2};
use crate::poly::{independence_rank, MonomialSystem};
use crate::union_find::UnionFind;

/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 0x2DC0_11ED;

/// Number of random general structure matrices in the criterion check for
/// fields larger than `F3`.
pub const DEFAULT_RANDOM_SAMPLES: usize = 10_000;

/// Upper bound on `samples * q⁴` pointwise pair evaluations in one sweep.
const POINTWISE_BUDGET: usize = 10_000_000;

/// Largest field order for which `GL2` is swept completely in the
/// quadratic checks.
const FULL_SWEEP_MAX_Q: usize = 5;

/// How many counterexamples a failed check keeps.
const MAX_EXAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub random_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            random_samples: DEFAULT_RANDOM_SAMPLES,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub counts: BTreeMap<String, u64>,
    pub details: String,
}

/// Accumulates counts and counterexamples for a check.
struct Tally {
    name: &'static str,
    counts: BTreeMap<String, u64>,
    failures: u64,
    examples: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            counts: BTreeMap::new(),
            failures: 0,
            examples: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += n;
    }

    fn set(&mut self, key: &str, n: u64) {
        self.counts.insert(key.to_string(), n);
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(mut self, spec: FieldSpec) -> CheckOutcome {
        self.set("failures", self.failures);
        let passed = self.failures == 0;
        let details = if passed {
            self.notes.join("; ")
        } else {
            let mut d = format!("{} failure(s) over {}; counterexamples: {}", self.failures, spec, self.examples.join(" | "));
            if !self.notes.is_empty() {
                d.push_str("; ");
                d.push_str(&self.notes.join("; "));
            }
            d
        };
        CheckOutcome {
            name: self.name.to_string(),
            passed,
            counts: self.counts,
            details,
        }
    }
}

/// Elements of a finite field other than `F2`.
fn small_field(spec: FieldSpec) -> Result<Vec<FieldElem>> {
    spec.require_nontrivial()?;
    spec.elements()
}

fn order(spec: FieldSpec) -> usize {
    spec.order().expect("finite field")
}

/// The four parameterised families of curled EC C-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccFamilies {
    /// `C(a, b, -a, -b; 0, 0)`
    pub ecc00: Vec<CFormParams>,
    /// `C(0, b, 0, 1-b; 1, 0)`
    pub ecc10: Vec<CFormParams>,
    /// `C(a, 0, 1-a, 0; 0, 1)`
    pub ecc01: Vec<CFormParams>,
    /// `C(a, 1-a, 1-a, a; 1, 1)`
    pub ecc11: Vec<CFormParams>,
}

impl EccFamilies {
    pub fn sizes(&self) -> [usize; 4] {
        [self.ecc00.len(), self.ecc10.len(), self.ecc01.len(), self.ecc11.len()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &CFormParams> {
        self.ecc00.iter().chain(&self.ecc10).chain(&self.ecc01).chain(&self.ecc11)
    }

    pub fn union(&self) -> BTreeSet<CFormParams> {
        self.iter().cloned().collect()
    }
}

pub fn enumerate_ecc(spec: FieldSpec) -> Result<EccFamilies> {
    let els = small_field(spec)?;
    let (zero, one) = (spec.zero(), spec.one());
    let mut ecc00 = Vec::new();
    for a in &els {
        for b in &els {
            ecc00.push(CFormParams::new(a.clone(), b.clone(), -a, -b, false, false));
        }
    }
    let ecc10 = els
        .iter()
        .map(|b| CFormParams::new(zero.clone(), b.clone(), zero.clone(), &one - b, true, false))
        .collect();
    let ecc01 = els
        .iter()
        .map(|a| CFormParams::new(a.clone(), zero.clone(), &one - a, zero.clone(), false, true))
        .collect();
    let ecc11 = els
        .iter()
        .map(|a| {
            let b = &one - a;
            CFormParams::new(a.clone(), b.clone(), b, a.clone(), true, true)
        })
        .collect();
    Ok(EccFamilies {
        ecc00,
        ecc10,
        ecc01,
        ecc11,
    })
}

/// All curled EC C-form matrices (by the C-form criteria), sorted.
pub fn curled_ec_cforms(spec: FieldSpec) -> Result<Vec<StructureMatrix>> {
    small_field(spec)?;
    let mut out: Vec<StructureMatrix> = all_cforms(spec)?
        .into_iter()
        .filter(CFormParams::is_ec_curled)
        .map(|p| p.to_matrix())
        .collect();
    out.sort();
    Ok(out)
}

/// One isomorphism class of curled EC C-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    /// Lexicographically least member.
    pub representative: StructureMatrix,
    /// Canonical forms found among the members.
    pub canonical: Vec<CanonicalLabel>,
    pub members: Vec<StructureMatrix>,
}

/// Partitions the curled EC C-forms into `GL2` orbits by brute force.
///
/// Each not-yet-placed matrix is pushed through every basis change, and the
/// images that are again curled EC C-forms are merged with it.
pub fn partition_classes(spec: FieldSpec) -> Result<Vec<IsoClass>> {
    let mats = curled_ec_cforms(spec)?;
    let index: BTreeMap<&StructureMatrix, usize> = mats.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let group = Gl2::new(spec)?;
    let mut uf = UnionFind::new(mats.len());
    let mut placed = alloc::vec![false; mats.len()];
    for i in 0..mats.len() {
        if placed[i] {
            continue;
        }
        placed[i] = true;
        for x in group.iter() {
            let image = iso::transform(&mats[i], x)?;
            if let Some(&j) = index.get(&image) {
                uf.union(i, j);
                placed[j] = true;
            }
        }
    }
    let canon: BTreeMap<StructureMatrix, CanonicalLabel> = canonical_labels(spec)?
        .into_iter()
        .map(|l| (canonical_matrix(&l, spec), l))
        .collect();
    Ok(uf
        .groups()
        .into_iter()
        .map(|g| {
            // `mats` is sorted, so the first member is the least
            let members: Vec<StructureMatrix> = g.iter().map(|&i| mats[i].clone()).collect();
            IsoClass {
                representative: members[0].clone(),
                canonical: members.iter().filter_map(|m| canon.get(m).cloned()).collect(),
                members,
            }
        })
        .collect())
}

fn show(p: &CFormParams) -> String {
    format!("{p}")
}

/// Every family member is EC and curled pointwise, and every C-form that is
/// EC and curled pointwise lies in one of the four families.
pub fn verify_family_closure(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("family_closure");
    let q = order(spec) as u64;
    let fam = enumerate_ecc(spec)?;
    let [s00, s10, s01, s11] = fam.sizes().map(|n| n as u64);
    t.set("ecc00", s00);
    t.set("ecc10", s10);
    t.set("ecc01", s01);
    t.set("ecc11", s11);
    t.expect([s00, s10, s01, s11] == [q * q, q, q, q], || format!("family sizes {:?}", fam.sizes()));
    let union = fam.union();
    t.set("union", union.len() as u64);
    t.expect(union.len() as u64 == q * q + 3 * q, || "families overlap".into());
    for p in fam.iter() {
        let m = p.to_matrix();
        let ok = m.is_endo_commutative(EcMethod::Pointwise)? && m.is_curled()?;
        t.expect(ok, || format!("member {} is not EC and curled", show(p)));
    }
    let mut passing = 0;
    for p in all_cforms(spec)? {
        let m = p.to_matrix();
        t.add("cforms", 1);
        if m.is_curled()? && m.is_endo_commutative(EcMethod::Pointwise)? {
            passing += 1;
            t.expect(union.contains(&p), || format!("{} is EC and curled but in no family", show(&p)));
        }
    }
    t.set("ec_curled_cforms", passing);
    t.expect(passing == union.len() as u64, || format!("{passing} EC curled C-forms vs {} family members", union.len()));
    t.note("checked against ECC00 ∪ ECC10 ∪ ECC01 ∪ ECC11 (all four families; ECC10 taken once)");
    Ok(t.finish(spec))
}

/// Brute-force classes of curled EC C-forms: `q + 2` of them, one canonical
/// form each, and the classifier agrees with the partition.
pub fn verify_classification(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("classification");
    let q = order(spec);
    let classes = partition_classes(spec)?;
    let n: usize = classes.iter().map(|c| c.members.len()).sum();
    t.set("matrices", n as u64);
    t.set("classes", classes.len() as u64);
    t.set("class_count", classes.len() as u64);
    t.expect(n == q * q + 3 * q, || format!("{n} curled EC C-forms, expected {}", q * q + 3 * q));
    t.expect(classes.len() == q + 2, || format!("{} classes, expected {}", classes.len(), q + 2));
    let group = Gl2::new(spec)?;
    t.set("gl2_order", group.len() as u64);
    let mut summary = Vec::new();
    for class in &classes {
        t.expect(class.canonical.len() == 1, || {
            format!("class of {} holds canonical forms {:?}", class.representative, class.canonical)
        });
        let Some(label) = class.canonical.first() else { continue };
        summary.push(format!("{label}:{}", class.members.len()));
        let target = canonical_matrix(label, spec);
        for m in &class.members {
            match classify(m) {
                Ok(c) => t.expect(&c.label == label, || format!("classify({m}) = {}, class is {label}", c.label)),
                Err(e) => t.expect(false, || format!("classify({m}) failed: {e}")),
            }
            // an independent witness from search
            t.add("searches", 1);
            match group.find_isomorphism(m, &target) {
                Some(x) => t.expect(iso::is_equiv_under(m, &target, &x), || format!("bad witness {x} for {m}")),
                None => t.expect(false, || format!("no isomorphism found from {m} to {label}")),
            }
        }
    }
    // distinct canonical forms are never connected
    let labels = canonical_labels(spec)?;
    for (i, l) in labels.iter().enumerate() {
        for r in &labels[i + 1..] {
            t.add("searches", 1);
            let found = group.find_isomorphism(&canonical_matrix(l, spec), &canonical_matrix(r, spec));
            t.expect(found.is_none(), || format!("{l} ≅ {r} via {}", found.as_ref().unwrap()));
        }
    }
    summary.sort();
    t.note(format!("classes: {}", summary.join(" ")));
    Ok(t.finish(spec))
}

/// Labels of curled EC algebras with each special property match the
/// predicted lists.
pub fn verify_special_classes(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("special_classes");
    let mats = curled_ec_cforms(spec)?;
    let labelled: Vec<(StructureMatrix, CanonicalLabel)> = mats
        .into_iter()
        .map(|m| classify(&m).map(|c| (m, c.label)))
        .collect::<Result<_>>()?;
    for kind in SpecialKind::ALL {
        let found: BTreeSet<CanonicalLabel> = labelled
            .iter()
            .filter(|(m, _)| kind.holds(m))
            .map(|(_, l)| l.clone())
            .collect();
        t.set(kind.name(), labelled.iter().filter(|(m, _)| kind.holds(m)).count() as u64);
        let expected: BTreeSet<CanonicalLabel> = special_classes(kind, spec)?.into_iter().collect();
        t.expect(found == expected, || {
            let f: Vec<String> = found.iter().map(ToString::to_string).collect();
            let e: Vec<String> = expected.iter().map(ToString::to_string).collect();
            format!("{kind}: found {{{}}}, expected {{{}}}", f.join(","), e.join(","))
        });
    }
    t.note(if spec.characteristic() == 2 {
        "characteristic 2 branch"
    } else {
        "characteristic not 2 branch"
    });
    Ok(t.finish(spec))
}

fn tuples(spec: FieldSpec, list: &[([i64; 4], u8, u8)]) -> BTreeSet<CFormParams> {
    list.iter()
        .map(|&(v, e, d)| CFormParams::from_ints(spec, v, e == 1, d == 1))
        .collect()
}

/// The unital C-forms.
const UNITAL: [([i64; 4], u8, u8); 5] = [
    ([0, 1, 0, 1], 1, 0),
    ([1, 0, 1, 0], 0, 1),
    ([0, 0, 0, 0], 1, 1),
    ([1, 0, 1, 0], 1, 1),
    ([0, 1, 0, 1], 1, 1),
];

/// The associative C-forms.
const ASSOCIATIVE: [([i64; 4], u8, u8); 14] = [
    ([0, 0, 0, 0], 0, 0),
    ([0, 0, 0, 0], 1, 0),
    ([0, 0, 0, 1], 1, 0),
    ([0, 1, 0, 0], 1, 0),
    ([0, 1, 0, 1], 1, 0),
    ([0, 0, 0, 0], 0, 1),
    ([0, 0, 1, 0], 0, 1),
    ([1, 0, 0, 0], 0, 1),
    ([1, 0, 1, 0], 0, 1),
    ([0, 0, 0, 0], 1, 1),
    ([0, 1, 0, 1], 1, 1),
    ([0, 1, 1, 0], 1, 1),
    ([1, 0, 0, 1], 1, 1),
    ([1, 0, 1, 0], 1, 1),
];

/// Associativity of a C-form as a polynomial system in its parameters.
fn associative_by_system(p: &CFormParams) -> bool {
    let s = p.spec();
    let bit = |b: bool| if b { s.one() } else { s.zero() };
    let (a, b, c, d) = (&p.a, &p.b, &p.c, &p.d);
    let (e, dl) = (bit(p.eps), bit(p.delta));
    (a * b).is_zero()
        && a * &e + b * c == c * &e + a * d
        && a * a == &dl * a
        && (d * c).is_zero()
        && &dl * c == c * c
        && &e * b == b * b
        && d * d == &e * d
        && c * b + d * &dl == a * d + b * &dl
}

/// Curled commutative C-forms.
fn curled_commutative_expected(spec: FieldSpec) -> Result<BTreeSet<CFormParams>> {
    if spec.characteristic() == 2 {
        let els = spec.elements()?;
        let mut out = BTreeSet::new();
        for a in &els {
            for b in &els {
                out.insert(CFormParams::new(a.clone(), b.clone(), a.clone(), b.clone(), false, false));
            }
        }
        return Ok(out);
    }
    let (z, h) = (spec.zero(), spec.from_int(2).inv()?);
    Ok([
        CFormParams::new(z.clone(), z.clone(), z.clone(), z.clone(), false, false),
        CFormParams::new(z.clone(), h.clone(), z.clone(), h.clone(), true, false),
        CFormParams::new(h.clone(), z.clone(), h.clone(), z.clone(), false, true),
        CFormParams::new(h.clone(), h.clone(), h.clone(), h.clone(), true, true),
    ]
    .into_iter()
    .collect())
}

/// Unital, associative and commutative C-forms, non-unitality of curled
/// algebras, and EC-ness of curled commutative or associative algebras.
pub fn verify_unital_associative(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("unital_associative");
    small_field(spec)?;
    let mut unital = BTreeSet::new();
    let mut assoc = BTreeSet::new();
    let mut curled_comm = BTreeSet::new();
    for p in all_cforms(spec)? {
        let m = p.to_matrix();
        t.add("cforms", 1);
        let unit = m.find_unit();
        if let Some(u) = &unit {
            let ok = [crate::AlgebraElement::e(spec), crate::AlgebraElement::f(spec)]
                .iter()
                .all(|x| m.mul_unchecked(u, x) == *x && m.mul_unchecked(x, u) == *x);
            t.expect(ok, || format!("{}: reported unit {u} is not a unit", show(&p)));
            unital.insert(p.clone());
        }
        let is_assoc = m.is_associative();
        t.expect(is_assoc == associative_by_system(&p), || {
            format!("{}: associativity {is_assoc} disagrees with the parameter system", show(&p))
        });
        if is_assoc {
            assoc.insert(p.clone());
        }
        let comm = m.is_commutative();
        t.expect(comm == (p.a == p.c && p.b == p.d), || format!("{}: commutativity criterion", show(&p)));
        if m.is_curled()? {
            t.add("curled", 1);
            t.expect(unit.is_none(), || format!("{} is curled and unital", show(&p)));
            if comm {
                curled_comm.insert(p.clone());
            }
            if comm || is_assoc {
                t.add("curled_comm_or_assoc", 1);
                let ec = m.is_endo_commutative(EcMethod::Pointwise)?;
                t.expect(ec, || format!("{} is curled, commutative or associative, but not EC", show(&p)));
            }
        }
    }
    t.set("unital", unital.len() as u64);
    t.set("associative", assoc.len() as u64);
    t.set("curled_commutative", curled_comm.len() as u64);
    let diff = |found: &BTreeSet<CFormParams>, want: &BTreeSet<CFormParams>| {
        let extra: Vec<String> = found.difference(want).map(show).collect();
        let missing: Vec<String> = want.difference(found).map(show).collect();
        format!("extra [{}], missing [{}]", extra.join(" "), missing.join(" "))
    };
    let want_unital = tuples(spec, &UNITAL);
    t.expect(unital == want_unital, || format!("unital: {}", diff(&unital, &want_unital)));
    let want_assoc = tuples(spec, &ASSOCIATIVE);
    t.expect(assoc == want_assoc, || format!("associative: {}", diff(&assoc, &want_assoc)));
    let want_comm = curled_commutative_expected(spec)?;
    t.expect(curled_comm == want_comm, || format!("curled commutative: {}", diff(&curled_comm, &want_comm)));
    Ok(t.finish(spec))
}

/// A seeded random general structure matrix.
fn random_matrix(rng: &mut ChaCha8Rng, spec: FieldSpec, els: &[FieldElem]) -> StructureMatrix {
    let mut pick = || els[rng.gen_range(0..els.len())].clone();
    let rows = [[pick(), pick()], [pick(), pick()], [pick(), pick()], [pick(), pick()]];
    StructureMatrix::new(spec, rows).expect("elements of one field")
}

/// All `q⁸` structure matrices, in lexicographic order.
fn all_matrices(spec: FieldSpec, els: &[FieldElem]) -> impl Iterator<Item = StructureMatrix> + '_ {
    let q = els.len();
    (0..q.pow(8)).map(move |mut n| {
        let mut digits = [0usize; 8];
        for d in digits.iter_mut().rev() {
            *d = n % q;
            n /= q;
        }
        let e = |i: usize| els[digits[i]].clone();
        StructureMatrix::new(spec, [[e(0), e(1)], [e(2), e(3)], [e(4), e(5)], [e(6), e(7)]]).expect("one field")
    })
}

/// The eight-equation EC system agrees with formal vanishing of the defect
/// and with pointwise evaluation.
pub fn verify_ec_criterion(spec: FieldSpec, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("ec_criterion");
    let els = small_field(spec)?;
    let q = els.len();
    let pairs = (q * q) as u64;
    let compare = |t: &mut Tally, m: &StructureMatrix, pointwise: bool| -> Result<()> {
        let by_system = m.satisfies_ec_system();
        let formal = m.is_endo_commutative(EcMethod::FormalDefect)?;
        t.add("compared", 1);
        if by_system {
            t.add("ec", 1);
        }
        t.expect(by_system == formal, || format!("{m}: system {by_system}, formal defect {formal}"));
        if pointwise {
            let pw = m.is_endo_commutative(EcMethod::Pointwise)?;
            t.add("pointwise_compared", 1);
            t.add("pointwise_pairs", pairs * pairs);
            t.expect(by_system == pw, || format!("{m}: system {by_system}, pointwise {pw}"));
        }
        if let Some(p) = m.as_cform() {
            let six = p.ec_by_criterion();
            t.expect(six == by_system, || format!("{m}: C-form system {six}, general system {by_system}"));
        }
        Ok(())
    };
    if q == 3 {
        for m in all_matrices(spec, &els) {
            compare(&mut t, &m, true)?;
        }
        t.note("exhaustive over all 3^8 structure matrices");
    } else {
        let pointwise_cforms = q <= FULL_SWEEP_MAX_Q;
        for p in all_cforms(spec)? {
            compare(&mut t, &p.to_matrix(), pointwise_cforms)?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let pointwise_quota = (POINTWISE_BUDGET / q.pow(4)).min(cfg.random_samples);
        for i in 0..cfg.random_samples {
            let m = random_matrix(&mut rng, spec, &els);
            compare(&mut t, &m, i < pointwise_quota)?;
        }
        t.set("random_samples", cfg.random_samples as u64);
        t.note(format!(
            "all C-forms{} plus {} seeded random matrices ({} also pointwise)",
            if pointwise_cforms { " (also pointwise)" } else { "" },
            cfg.random_samples,
            pointwise_quota
        ));
    }
    Ok(t.finish(spec))
}

/// C-form criteria for curledness and for EC-and-curled agree with
/// pointwise evaluation.
pub fn verify_cform_criteria(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("cform_criteria");
    let q = small_field(spec)?.len();
    for p in all_cforms(spec)? {
        let m = p.to_matrix();
        t.add("cforms", 1);
        let curled = m.is_curled()?;
        t.expect(curled == p.curled_by_criterion(), || format!("{}: curled {curled} vs criterion", show(&p)));
        let ec = if q <= FULL_SWEEP_MAX_Q {
            m.is_endo_commutative(EcMethod::Pointwise)?
        } else {
            m.satisfies_ec_system()
        };
        let both = curled && ec;
        if both {
            t.add("ec_curled", 1);
        }
        t.expect(both == p.is_ec_curled(), || format!("{}: EC and curled {both} vs combined criterion", show(&p)));
    }
    Ok(t.finish(spec))
}

/// The lift `X ↦ X̃` is multiplicative and `det X̃ = (det X)⁴`.
pub fn verify_tilde_lift(spec: FieldSpec, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("tilde_lift");
    small_field(spec)?;
    let g: Vec<Transform2> = iso::gl2_elements(spec)?;
    let lifts: Vec<_> = g.iter().map(Transform2::tilde).collect();
    t.set("gl2_order", g.len() as u64);
    for (x, lx) in g.iter().zip(&lifts) {
        t.expect(lx.det() == x.det().pow(4), || format!("det of lift of {x}"));
    }
    let check_pair = |t: &mut Tally, i: usize, j: usize| {
        t.add("pairs", 1);
        let ok = g[i].compose(&g[j]).tilde() == lifts[i].mul(&lifts[j]);
        t.expect(ok, || format!("lift of {} · {} is not the product of lifts", g[i], g[j]));
    };
    if order(spec) <= FULL_SWEEP_MAX_Q {
        for i in 0..g.len() {
            for j in 0..g.len() {
                check_pair(&mut t, i, j);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.random_samples {
            let (i, j) = (rng.gen_range(0..g.len()), rng.gen_range(0..g.len()));
            check_pair(&mut t, i, j);
        }
        t.note("pairs sampled");
    }
    Ok(t.finish(spec))
}

/// Evaluation matrices of the two monomial systems have full rank.
pub fn verify_monomial_ranks(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("monomial_ranks");
    spec.require_nontrivial()?;
    let x = independence_rank(MonomialSystem::XNine, spec)?;
    let z = independence_rank(MonomialSystem::ZEight, spec)?;
    t.set("x_rank", x as u64);
    t.set("z_rank", z as u64);
    t.expect(x == 9, || format!("rank of the nine x-monomials is {x}"));
    t.expect(z == 8, || format!("rank of the eight z-monomials is {z}"));
    Ok(t.finish(spec))
}

/// The closed-form `ECC00 → C1` witness is exact and agrees with search.
pub fn verify_ecc00_witness(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("ecc00_witness");
    small_field(spec)?;
    let group = Gl2::new(spec)?;
    let c1 = canonical_matrix(&CanonicalLabel::C1, spec);
    for p in enumerate_ecc(spec)?.ecc00 {
        if p.a.is_zero() && p.b.is_zero() {
            continue;
        }
        t.add("members", 1);
        let m = p.to_matrix();
        let x = ecc00_witness(&p.a, &p.b)?;
        let image = iso::transform(&m, &x)?;
        t.expect(image == c1, || format!("{}: witness {x} gives {image}", show(&p)));
        t.expect(group.find_isomorphism(&m, &c1).is_some(), || format!("{}: search finds no map to C1", show(&p)));
    }
    Ok(t.finish(spec))
}

/// `C3(a) ≅ C4(a)` by search, and the explicit maps through `C2(1-a)`.
pub fn verify_alias_c3_c4(spec: FieldSpec, _cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("alias_c3_c4");
    let els = small_field(spec)?;
    let group = Gl2::new(spec)?;
    let swap = Transform2::from_ints(spec, [[0, 1], [1, 0]])?;
    let skew = Transform2::from_ints(spec, [[0, 1], [1, -1]])?;
    for a in els {
        t.add("parameters", 1);
        let c2 = canonical_matrix(&CanonicalLabel::C2(&spec.one() - &a), spec);
        let c3 = canonical_matrix(&CanonicalLabel::C3(a.clone()), spec);
        let c4 = canonical_matrix(&CanonicalLabel::C4(a.clone()), spec);
        t.expect(group.find_isomorphism(&c3, &c4).is_some(), || format!("C3({a}) and C4({a}) not isomorphic"));
        t.expect(iso::transform(&c3, &swap)? == c2, || format!("swap does not map C3({a}) to C2(1-{a})"));
        t.expect(iso::is_equiv_under(&c2, &c4, &skew), || format!("[[0,1],[1,-1]] does not carry C2(1-{a}) to C4({a})"));
        t.expect(iso::transform(&c4, &skew.inverse())? == c2, || format!("inverse skew map on C4({a})"));
    }
    Ok(t.finish(spec))
}

/// `classify` is constant on `GL2` orbits of curled EC C-forms.
pub fn verify_orbit_invariance(spec: FieldSpec, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("orbit_invariance");
    small_field(spec)?;
    let g = iso::gl2_elements(spec)?;
    let full = order(spec) <= FULL_SWEEP_MAX_Q;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for m in curled_ec_cforms(spec)? {
        let label = classify(&m)?.label;
        let xs: Vec<&Transform2> = if full {
            g.iter().collect()
        } else {
            (0..64).map(|_| &g[rng.gen_range(0..g.len())]).collect()
        };
        for x in xs {
            t.add("images", 1);
            let image = iso::transform(&m, x)?;
            match classify(&image) {
                Ok(c) => t.expect(c.label == label, || format!("{m} is {label} but its image under {x} is {}", c.label)),
                Err(e) => t.expect(false, || format!("classify({image}) failed: {e}")),
            }
        }
    }
    if !full {
        t.note("64 sampled basis changes per matrix");
    }
    Ok(t.finish(spec))
}

/// Constructive witnesses over `Q` on seeded random parameters: `ECC00`
/// members go to `C0`/`C1`, `C3(a)` and `C4(a)` go to `C2(1-a)`.
pub fn verify_rational_witnesses(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let spec = FieldSpec::Rationals;
    let mut t = Tally::new("rational_witnesses");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rand_q = |rng: &mut ChaCha8Rng| -> Result<FieldElem> {
        // a quarter of the draws are zero to exercise the degenerate branches
        if rng.gen_range(0..4) == 0 {
            return Ok(spec.zero());
        }
        spec.from_ratio(rng.gen_range(-60..=60), rng.gen_range(1..=25))
    };
    let swap = Transform2::from_ints(spec, [[0, 1], [1, 0]])?;
    let skew = Transform2::from_ints(spec, [[0, 1], [1, -1]])?;
    let (c0, c1) = (canonical_matrix(&CanonicalLabel::C0, spec), canonical_matrix(&CanonicalLabel::C1, spec));
    let n = cfg.random_samples.min(1000);
    for _ in 0..n {
        let (a, b) = (rand_q(&mut rng)?, rand_q(&mut rng)?);
        t.add("samples", 1);
        let m00 = CFormParams::new(a.clone(), b.clone(), -&a, -&b, false, false).to_matrix();
        if a.is_zero() && b.is_zero() {
            t.expect(m00 == c0, || "zero ECC00 member".into());
        } else {
            let x = ecc00_witness(&a, &b)?;
            t.expect(iso::transform(&m00, &x)? == c1, || format!("ECC00 ({a},{b}) with {x}"));
        }
        let c2 = canonical_matrix(&CanonicalLabel::C2(&spec.one() - &a), spec);
        let c3 = canonical_matrix(&CanonicalLabel::C3(a.clone()), spec);
        let c4 = canonical_matrix(&CanonicalLabel::C4(a.clone()), spec);
        t.expect(iso::transform(&c3, &swap)? == c2, || format!("C3({a}) via swap"));
        t.expect(iso::is_equiv_under(&c2, &c4, &skew), || format!("C2(1-{a}) to C4({a}) via [[0,1],[1,-1]]"));
        t.expect(iso::transform(&c4, &skew.inverse())? == c2, || format!("C4({a}) via [[1,1],[1,0]]"));
        for m in [&m00, &c3, &c4] {
            let c = classify(m)?;
            let want = if m == &m00 {
                if m00 == c0 { CanonicalLabel::C0 } else { CanonicalLabel::C1 }
            } else {
                CanonicalLabel::C2(&spec.one() - &a)
            };
            t.expect(c.label == want, || format!("classify({m}) = {}, expected {want}", c.label));
        }
    }
    Ok(t.finish(spec))
}

/// A named check over a finite field.
pub type CheckFn = fn(FieldSpec, &VerifyConfig) -> Result<CheckOutcome>;

/// Every finite-field check, in name order.
pub fn suite() -> [(&'static str, CheckFn); 11] {
    [
        ("alias_c3_c4", verify_alias_c3_c4),
        ("cform_criteria", verify_cform_criteria),
        ("classification", verify_classification),
        ("ec_criterion", verify_ec_criterion),
        ("ecc00_witness", verify_ecc00_witness),
        ("family_closure", verify_family_closure),
        ("monomial_ranks", verify_monomial_ranks),
        ("orbit_invariance", verify_orbit_invariance),
        ("special_classes", verify_special_classes),
        ("tilde_lift", verify_tilde_lift),
        ("unital_associative", verify_unital_associative),
    ]
}

/// Runs every check for `spec`, sorted by name. Over `Q` only the
/// non-enumerative checks apply.
pub fn run_all(spec: FieldSpec, cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    spec.require_nontrivial()?;
    let mut out = if spec.is_finite() {
        suite().iter().map(|(_, f)| f(spec, cfg)).collect::<Result<Vec<_>>>()?
    } else {
        alloc::vec![verify_monomial_ranks(spec, cfg)?, verify_rational_witnesses(cfg)?]
    };
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Checks that apply to `spec`.
pub fn checks_for(spec: FieldSpec) -> Result<Vec<(&'static str, CheckFn)>> {
    spec.require_nontrivial()?;
    if spec.is_finite() {
        Ok(suite().to_vec())
    } else {
        fn rational(_: FieldSpec, cfg: &VerifyConfig) -> Result<CheckOutcome> {
            verify_rational_witnesses(cfg)
        }
        Ok(alloc::vec![
            ("monomial_ranks", verify_monomial_ranks as CheckFn),
            ("rational_witnesses", rational as CheckFn),
        ])
    }
}

impl CheckOutcome {
    pub fn count(&self, key: &str) -> Option<u64> {
        self.counts.get(key).copied()
    }
}

impl From<Error> for CheckOutcome {
    fn from(e: Error) -> Self {
        CheckOutcome {
            name: "error".into(),
            passed: false,
            counts: BTreeMap::new(),
            details: e.to_string(),
        }
    }
}
