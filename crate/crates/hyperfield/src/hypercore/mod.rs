//! Explicit finite hyperstructures and exhaustive axiom checking.

mod bitset;
mod group;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bitset::ElemSet;
pub use group::FiniteGroup;

/// Above this carrier size the cubic checks switch to random sampling.
pub const EXHAUSTIVE_CAP: usize = 4096;
/// Triples drawn per axiom in sampled mode.
pub const SAMPLE_TRIPLES: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("empty hypersum {0} + {1}")]
    EmptySum(String, String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0}")]
    Json(String),
}

/// Finite carrier with multivalued addition, negation and an optional
/// multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTable {
    labels: Vec<String>,
    zero: usize,
    one: Option<usize>,
    add: Vec<ElemSet>,
    neg: Vec<usize>,
    mul: Option<Vec<usize>>,
}

impl HyperTable {
    /// Additive structure only.
    pub fn from_fns(
        labels: Vec<String>,
        zero: usize,
        mut add: impl FnMut(usize, usize) -> Vec<usize>,
        mut neg: impl FnMut(usize) -> usize,
    ) -> Result<Self, TableError> {
        let n = labels.len();
        if n == 0 || zero >= n {
            return Err(TableError::Shape("empty carrier or zero out of range".into()));
        }
        if labels.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(TableError::Shape("duplicate labels".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let s = add(x, y);
                if s.is_empty() {
                    return Err(TableError::EmptySum(labels[x].clone(), labels[y].clone()));
                }
                if s.iter().any(|&v| v >= n) {
                    return Err(TableError::Shape("sum element out of range".into()));
                }
                table.push(ElemSet::from_iter(n, s));
            }
        }
        let neg: Vec<usize> = (0..n).map(&mut neg).collect();
        if neg.iter().any(|&v| v >= n) {
            return Err(TableError::Shape("negation out of range".into()));
        }
        Ok(HyperTable { labels, zero, one: None, add: table, neg, mul: None })
    }

    /// Attach a multiplication with identity `one`.
    pub fn with_mul(
        mut self,
        one: usize,
        mut mul: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, TableError> {
        let n = self.n();
        if one >= n {
            return Err(TableError::Shape("one out of range".into()));
        }
        let t: Vec<usize> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| mul(x, y)).collect();
        if t.iter().any(|&v| v >= n) {
            return Err(TableError::Shape("product out of range".into()));
        }
        self.one = Some(one);
        self.mul = Some(t);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn add(&self, x: usize, y: usize) -> &ElemSet {
        &self.add[x * self.n() + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn mul(&self, x: usize, y: usize) -> Option<usize> {
        self.mul.as_ref().map(|m| m[x * self.n() + y])
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    /// `A + B` as the union of pointwise sums.
    pub fn add_sets(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.n());
        for x in a.iter() {
            for y in b.iter() {
                out.union_with(self.add(x, y));
            }
        }
        out
    }

    fn add_set_elem(&self, a: &ElemSet, z: usize) -> ElemSet {
        let mut out = ElemSet::empty(self.n());
        for x in a.iter() {
            out.union_with(self.add(x, z));
        }
        out
    }

    fn elem_add_set(&self, x: usize, a: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.n());
        for y in a.iter() {
            out.union_with(self.add(x, y));
        }
        out
    }

    /// Sum as a sorted list of labels.
    pub fn sum_labels(&self, x: usize, y: usize) -> Vec<&str> {
        self.add(x, y).iter().map(|i| self.label(i)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let j: TableJson = serde_json::from_str(text).map_err(|e| TableError::Json(e.to_string()))?;
        j.try_into()
    }

    /// `{0, 1}` with `1 + 1 = {0, 1}`.
    pub fn krasner() -> Self {
        HyperTable::from_fns(
            vec!["0".into(), "1".into()],
            0,
            |x, y| match (x, y) {
                (1, 1) => vec![0, 1],
                _ => vec![x | y],
            },
            |x| x,
        )
        .and_then(|t| t.with_mul(1, |x, y| x & y))
        .expect("valid table")
    }

    /// `{-1, 0, 1}` under the rule of signs; indices 0, 1, 2 are `0, 1, -1`.
    pub fn signs() -> Self {
        let sign = |i: usize| [0i8, 1, -1][i];
        let idx = |s: i8| match s {
            0 => 0,
            1 => 1,
            _ => 2,
        };
        HyperTable::from_fns(
            vec!["0".into(), "1".into(), "-1".into()],
            0,
            |x, y| {
                let (a, b) = (sign(x), sign(y));
                if a == 0 {
                    vec![y]
                } else if b == 0 || a == b {
                    vec![x]
                } else {
                    vec![0, 1, 2]
                }
            },
            |x| idx(-sign(x)),
        )
        .and_then(|t| t.with_mul(1, |x, y| idx(sign(x) * sign(y))))
        .expect("valid table")
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    carrier: Vec<String>,
    zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one: Option<String>,
    add: Vec<Vec<Vec<String>>>,
    neg: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mul: Option<Vec<Vec<String>>>,
}

impl From<&HyperTable> for TableJson {
    fn from(t: &HyperTable) -> Self {
        let n = t.n();
        let l = |i: usize| t.labels[i].clone();
        TableJson {
            carrier: t.labels.clone(),
            zero: l(t.zero),
            one: t.one.map(l),
            add: (0..n)
                .map(|x| (0..n).map(|y| t.add(x, y).iter().map(l).collect()).collect())
                .collect(),
            neg: t.neg.iter().map(|&i| l(i)).collect(),
            mul: t.mul.as_ref().map(|_| {
                (0..n)
                    .map(|x| (0..n).map(|y| l(t.mul(x, y).expect("has mul"))).collect())
                    .collect()
            }),
        }
    }
}

impl TryFrom<TableJson> for HyperTable {
    type Error = TableError;

    fn try_from(j: TableJson) -> Result<Self, TableError> {
        let n = j.carrier.len();
        let index: BTreeMap<&str, usize> =
            j.carrier.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let look = |s: &str| index.get(s).copied().ok_or_else(|| TableError::UnknownElement(s.into()));
        let shape = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(TableError::Shape(format!("{what} must be indexed by the carrier")))
            }
        };
        shape(j.add.len() == n && j.add.iter().all(|r| r.len() == n), "add")?;
        shape(j.neg.len() == n, "neg")?;
        if let Some(m) = &j.mul {
            shape(m.len() == n && m.iter().all(|r| r.len() == n), "mul")?;
        }
        let mut add = vec![Vec::new(); n * n];
        for x in 0..n {
            for y in 0..n {
                for s in &j.add[x][y] {
                    add[x * n + y].push(look(s)?);
                }
            }
        }
        let neg = j.neg.iter().map(|s| look(s)).collect::<Result<Vec<_>, _>>()?;
        let zero = look(&j.zero)?;
        let t = HyperTable::from_fns(j.carrier.clone(), zero, |x, y| add[x * n + y].clone(), |x| neg[x])?;
        match (&j.one, &j.mul) {
            (Some(one), Some(m)) => {
                let mut mt = vec![0; n * n];
                for x in 0..n {
                    for y in 0..n {
                        mt[x * n + y] = look(&m[x][y])?;
                    }
                }
                t.with_mul(look(one)?, |x, y| mt[x * n + y])
            }
            (None, None) => Ok(t),
            _ => Err(TableError::Shape("one and mul must be given together".into())),
        }
    }
}

/// Identifier of a checked law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    H1,
    H2,
    H3,
    H4,
    H5,
    Ra,
    Rb,
    Rc,
    Rd,
    Re,
    HomAdd,
    HomMul,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::H1 => "H1",
            Axiom::H2 => "H2",
            Axiom::H3 => "H3",
            Axiom::H4 => "H4",
            Axiom::H5 => "H5",
            Axiom::Ra => "R-a",
            Axiom::Rb => "R-b",
            Axiom::Rc => "R-c",
            Axiom::Rd => "R-d",
            Axiom::Re => "R-e",
            Axiom::HomAdd => "HOM-add",
            Axiom::HomMul => "HOM-mul",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

/// Outcome of a check; at most one violation is kept per axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Laws that were examined, in order.
    pub checked: Vec<Axiom>,
    /// `Some(k)` when cubic laws were sampled with `k` triples instead of
    /// enumerated.
    pub sampled: Option<usize>,
}

impl AxiomReport {
    fn new() -> Self {
        AxiomReport { passed: true, violations: Vec::new(), checked: Vec::new(), sampled: None }
    }

    fn fail(&mut self, axiom: Axiom, witness: Vec<String>) {
        if !self.violations.iter().any(|v| v.axiom == axiom) {
            self.violations.push(Violation { axiom, witness });
            self.passed = false;
        }
    }

    fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn violated(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    fn finish(mut self) -> Self {
        self.violations.sort_by_key(|v| v.axiom);
        self
    }

    /// One-line summary such as `PASS (H1..H5)` or `FAIL H2 [1,1,g]; H5 [...]`.
    pub fn summary(&self) -> String {
        if self.passed {
            let has_ring = self.checked.contains(&Axiom::Ra);
            let has_hom = self.checked.contains(&Axiom::HomAdd);
            let s = match (has_hom, has_ring) {
                (true, _) => "HOM-add, HOM-mul",
                (false, true) => "H1..H5, R-a..R-e",
                _ => "H1..H5",
            };
            match self.sampled {
                Some(k) => format!("PASS ({s}; sampled {k} triples)"),
                None => format!("PASS ({s})"),
            }
        } else {
            let parts: Vec<String> = self
                .violations
                .iter()
                .map(|v| format!("{} [{}]", v.axiom, v.witness.join(",")))
                .collect();
            format!("FAIL {}", parts.join("; "))
        }
    }
}

fn names(t: &HyperTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| t.label(x).to_string()).collect()
}

/// All pairs, or all triples when small enough; otherwise a fixed-seed sample.
fn triples(n: usize, sampled: bool) -> Box<dyn Iterator<Item = (usize, usize, usize)>> {
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        Box::new((0..SAMPLE_TRIPLES).map(move |_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))))
    } else {
        Box::new((0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))))
    }
}

fn hypergroup_into(t: &HyperTable, r: &mut AxiomReport) {
    let n = t.n();
    let sampled = n > EXHAUSTIVE_CAP;
    if sampled {
        r.sampled = Some(SAMPLE_TRIPLES);
    }
    r.checked.extend([Axiom::H1, Axiom::H2, Axiom::H3, Axiom::H4, Axiom::H5]);
    for x in 0..n {
        for y in x + 1..n {
            if t.add(x, y) != t.add(y, x) {
                r.fail(Axiom::H1, names(t, &[x, y]));
            }
        }
    }
    for (x, y, z) in triples(n, sampled) {
        if r.has(Axiom::H2) {
            break;
        }
        let left = t.add_set_elem(t.add(x, y), z);
        let right = t.elem_add_set(x, t.add(y, z));
        if left != right {
            r.fail(Axiom::H2, names(t, &[x, y, z]));
        }
    }
    let zero = t.zero();
    for x in 0..n {
        let single = ElemSet::singleton(n, x);
        if t.add(zero, x) != &single || t.add(x, zero) != &single {
            r.fail(Axiom::H3, names(t, &[x]));
        }
    }
    for x in 0..n {
        let opp: Vec<usize> = (0..n).filter(|&y| t.add(x, y).contains(zero)).collect();
        if opp.len() != 1 {
            let mut w = names(t, &[x]);
            w.extend(names(t, &opp));
            r.fail(Axiom::H4, w);
        } else if opp[0] != t.neg(x) {
            r.fail(Axiom::H4, names(t, &[x, t.neg(x)]));
        }
    }
    for (x, y, z) in triples(n, sampled) {
        if r.has(Axiom::H5) {
            break;
        }
        if t.add(y, z).contains(x) && !t.add(x, t.neg(y)).contains(z) {
            r.fail(Axiom::H5, names(t, &[x, y, z]));
        }
    }
}

/// Laws (1) to (5) of a commutative canonical hypergroup, exhaustively.
pub fn check_canonical_hypergroup(t: &HyperTable) -> AxiomReport {
    let mut r = AxiomReport::new();
    hypergroup_into(t, &mut r);
    r.finish()
}

/// Hyperring laws (a) to (e); (a) reports the hypergroup violations too.
pub fn check_hyperring(t: &HyperTable) -> AxiomReport {
    let mut r = AxiomReport::new();
    hypergroup_into(t, &mut r);
    r.checked.extend([Axiom::Ra, Axiom::Rb, Axiom::Rc, Axiom::Rd, Axiom::Re]);
    if let Some(v) = r.violations.first().cloned() {
        let mut w = vec![v.axiom.to_string()];
        w.extend(v.witness);
        r.fail(Axiom::Ra, w);
    }
    let (Some(one), true) = (t.one(), t.has_mul()) else {
        r.fail(Axiom::Rb, vec!["no multiplication".into()]);
        return r.finish();
    };
    let n = t.n();
    let m = |x, y| t.mul(x, y).expect("has mul");
    let sampled = n > EXHAUSTIVE_CAP;
    for x in 0..n {
        if m(one, x) != x || m(x, one) != x {
            r.fail(Axiom::Rb, names(t, &[one, x]));
        }
        if m(x, t.zero()) != t.zero() || m(t.zero(), x) != t.zero() {
            r.fail(Axiom::Rd, names(t, &[x]));
        }
    }
    for (x, y, z) in triples(n, sampled) {
        if !r.has(Axiom::Rb) && m(m(x, y), z) != m(x, m(y, z)) {
            r.fail(Axiom::Rb, names(t, &[x, y, z]));
        }
        if r.has(Axiom::Rc) {
            continue;
        }
        // x(y+z) = xy + xz and (y+z)x = yx + zx.
        let mut left = ElemSet::empty(n);
        let mut left_r = ElemSet::empty(n);
        for w in t.add(y, z).iter() {
            left.insert(m(x, w));
            left_r.insert(m(w, x));
        }
        if &left != t.add(m(x, y), m(x, z)) || &left_r != t.add(m(y, x), m(z, x)) {
            r.fail(Axiom::Rc, names(t, &[x, y, z]));
        }
    }
    if one == t.zero() {
        r.fail(Axiom::Re, names(t, &[one]));
    }
    r.finish()
}

/// Every nonzero element has a multiplicative inverse.
pub fn is_hyperfield(t: &HyperTable) -> bool {
    let Some(one) = t.one() else { return false };
    (0..t.n())
        .filter(|&x| x != t.zero())
        .all(|x| (0..t.n()).any(|y| t.mul(x, y) == Some(one)))
}

/// `f(a+b) ⊆ f(a)+f(b)` and `f(ab) = f(a)f(b)`; `f[i]` is the image of
/// element `i` of `src`.
pub fn check_hom(f: &[usize], src: &HyperTable, dst: &HyperTable) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.checked.extend([Axiom::HomAdd, Axiom::HomMul]);
    if f.len() != src.n() || f.iter().any(|&v| v >= dst.n()) {
        r.fail(Axiom::HomAdd, vec!["map is not total on the source".into()]);
        return r.finish();
    }
    for a in 0..src.n() {
        for b in 0..src.n() {
            let target = dst.add(f[a], f[b]);
            if src.add(a, b).iter().any(|c| !target.contains(f[c])) {
                r.fail(Axiom::HomAdd, names(src, &[a, b]));
            }
            match (src.mul(a, b), dst.has_mul()) {
                (Some(c), true) => {
                    if Some(f[c]) != dst.mul(f[a], f[b]) {
                        r.fail(Axiom::HomMul, names(src, &[a, b]));
                    }
                }
                (None, _) => {}
                (Some(_), false) => r.fail(Axiom::HomMul, vec!["target has no multiplication".into()]),
            }
        }
    }
    r.finish()
}

/// Orbits of `group` under the automorphism group `autos` (each a
/// permutation of element indices), with `K(a) + K(b) = (Ka + Kb)/K`.
/// Returns the table and the orbit of each group element.
pub fn orbit_hypergroup(group: &FiniteGroup, autos: &[Vec<usize>]) -> Result<(HyperTable, Vec<usize>), TableError> {
    let n = group.order();
    let mut ks: BTreeSet<Vec<usize>> = autos.iter().cloned().collect();
    ks.insert((0..n).collect());
    for k in &ks {
        if !group.is_automorphism(k) {
            return Err(TableError::NotAGroup(format!("{k:?} is not an automorphism")));
        }
    }
    for a in &ks {
        let mut inv = vec![0; n];
        for (i, &v) in a.iter().enumerate() {
            inv[v] = i;
        }
        if !ks.contains(&inv) {
            return Err(TableError::NotAGroup("automorphisms not closed under inverse".into()));
        }
        for b in &ks {
            let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
            if !ks.contains(&c) {
                return Err(TableError::NotAGroup("automorphisms not closed under composition".into()));
            }
        }
    }
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    // Identity orbit first so it gets index 0.
    let order: Vec<usize> = std::iter::once(group.identity()).chain((0..n).filter(|&g| g != group.identity())).collect();
    for g in order {
        if orbit_of[g] != usize::MAX {
            continue;
        }
        let orb: BTreeSet<usize> = ks.iter().map(|k| k[g]).collect();
        for &h in &orb {
            orbit_of[h] = orbits.len();
        }
        orbits.push(orb.into_iter().collect());
    }
    let labels: Vec<String> = orbits
        .iter()
        .map(|o| {
            let l: Vec<&str> = o.iter().map(|&g| group.labels()[g].as_str()).collect();
            format!("{{{}}}", l.join(","))
        })
        .collect();
    let t = HyperTable::from_fns(
        labels,
        0,
        |x, y| {
            let mut s = BTreeSet::new();
            for &a in &orbits[x] {
                for &b in &orbits[y] {
                    s.insert(orbit_of[group.op(a, b)]);
                }
            }
            s.into_iter().collect()
        },
        |x| orbit_of[group.inv(orbits[x][0])],
    )?;
    Ok((t, orbit_of))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krasner_and_signs_pass() {
        for t in [HyperTable::krasner(), HyperTable::signs()] {
            let r = check_hyperring(&t);
            assert!(r.passed, "{}", r.summary());
            assert!(is_hyperfield(&t));
        }
        let s = HyperTable::signs();
        assert_eq!(s.sum_labels(1, 2), vec!["0", "1", "-1"]);
        assert_eq!(s.sum_labels(1, 1), vec!["1"]);
        assert_eq!(s.sum_labels(2, 2), vec!["-1"]);
        assert_eq!(check_hyperring(&HyperTable::krasner()).summary(), "PASS (H1..H5, R-a..R-e)");
    }

    #[test]
    fn broken_inverse() {
        let t = HyperTable::from_fns(vec!["0".into(), "1".into()], 0, |x, y| vec![x | y], |x| x).unwrap();
        let r = check_canonical_hypergroup(&t);
        assert!(!r.passed);
        assert_eq!(r.violated(Axiom::H4).unwrap().witness, vec!["1".to_string()]);
    }

    #[test]
    fn distributivity_inclusion_only() {
        // 1 + a = {1,a}, x + x = {0,x}, a*a = a: a(1+a) = {a} but a+a = {0,a}.
        let t = HyperTable::from_fns(
            vec!["0".into(), "1".into(), "a".into()],
            0,
            |x, y| match (x, y) {
                (0, y) => vec![y],
                (x, 0) => vec![x],
                (x, y) if x == y => vec![0, x],
                _ => vec![1, 2],
            },
            |x| x,
        )
        .unwrap()
        .with_mul(1, |x, y| match (x, y) {
            (0, _) | (_, 0) => 0,
            (1, y) => y,
            (x, 1) => x,
            _ => 2,
        })
        .unwrap();
        let r = check_hyperring(&t);
        let v = r.violated(Axiom::Rc).expect("R-c fails");
        assert_eq!(v.witness.len(), 3);
        assert!(r.violated(Axiom::Rb).is_none());
    }

    #[test]
    fn homomorphisms() {
        let (k, s) = (HyperTable::krasner(), HyperTable::signs());
        assert!(check_hom(&[0, 1, 1], &s, &k).passed);
        let bad = check_hom(&[0, 2], &k, &s);
        assert!(bad.violated(Axiom::HomMul).is_some());
        assert!(check_hom(&[0, 1], &k, &s).violated(Axiom::HomAdd).is_some());
    }

    #[test]
    fn orbit_examples() {
        let z5 = FiniteGroup::cyclic(5);
        let negation: Vec<usize> = (0..5).map(|x| (5 - x) % 5).collect();
        let (t, orb) = orbit_hypergroup(&z5, &[negation]).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.labels(), ["{0}", "{1,4}", "{2,3}"]);
        let mut sum = t.sum_labels(orb[1], orb[1]);
        sum.sort();
        // 1+1 = 2, 1+4 = 0, 4+4 = 3: the orbit {1,4} itself is not reached.
        assert_eq!(sum, vec!["{0}", "{2,3}"]);
        assert!(check_canonical_hypergroup(&t).passed);

        let (t, _) = orbit_hypergroup(&z5, &[]).unwrap();
        assert_eq!(t.n(), 5);
        assert!((0..5).all(|x| (0..5).all(|y| t.add(x, y).len() == 1)));

        let z7 = FiniteGroup::cyclic(7);
        let times2: Vec<usize> = (0..7).map(|x| 2 * x % 7).collect();
        let times4: Vec<usize> = (0..7).map(|x| 4 * x % 7).collect();
        let (t, _) = orbit_hypergroup(&z7, &[times2, times4]).unwrap();
        assert_eq!(t.n(), 3);
        assert!(check_canonical_hypergroup(&t).passed);
    }

    #[test]
    fn autos_must_form_a_group() {
        let z7 = FiniteGroup::cyclic(7);
        let times2: Vec<usize> = (0..7).map(|x| 2 * x % 7).collect();
        let times4: Vec<usize> = (0..7).map(|x| 4 * x % 7).collect();
        assert!(orbit_hypergroup(&z7, std::slice::from_ref(&times2)).is_err());
        assert!(orbit_hypergroup(&z7, &[times2, times4]).is_ok());
        assert!(orbit_hypergroup(&z7, &[vec![1, 0, 2, 3, 4, 5, 6]]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let t = HyperTable::signs();
        let back = HyperTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(HyperTable::from_json("{\"carrier\":[]}").is_err());
    }
}
