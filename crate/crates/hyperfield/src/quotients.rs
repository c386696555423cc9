//! Quotient hyperrings R/G of finite rings, the hyperfields K[G], and the
//! projective geometry attached to a K-vector space.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::exactmath::{FpPoly, Gf, MathError};
use crate::hypercore::{check_canonical_hypergroup, FiniteGroup, HyperTable, TableError};

/// Largest ring for which full tables are built.
pub const MAX_RING: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("ring of size {0} exceeds the table limit")]
    TooLarge(u64),
    #[error("modulus must be at least 2")]
    SmallModulus,
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("edge case excluded: G = {{1}} (the quotient is the ring itself and K need not embed)")]
    TrivialSubgroup,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// F_{p^k} presented by a monic irreducible modulus of degree k.
    Field(Gf),
    /// Z/n.
    ZMod(u64),
}

/// Finite commutative ring with elements `0..size`; index 0 is zero and
/// index 1 is one.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    kind: RingKind,
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl FiniteRing {
    pub fn field(p: u64, k: usize) -> Result<Self, QuotientError> {
        Self::from_field(Gf::new(p, k)?)
    }

    pub fn field_with_modulus(m: FpPoly) -> Result<Self, QuotientError> {
        Self::from_field(Gf::with_modulus(m)?)
    }

    fn from_field(f: Gf) -> Result<Self, QuotientError> {
        if f.size() > MAX_RING as u64 {
            return Err(QuotientError::TooLarge(f.size()));
        }
        let n = f.size() as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = f.add(a as u64, b as u64) as u32;
                mul[a * n + b] = f.mul(a as u64, b as u64) as u32;
            }
        }
        Ok(FiniteRing { kind: RingKind::Field(f), size: n, add, mul })
    }

    pub fn zmod(n: u64) -> Result<Self, QuotientError> {
        if n < 2 {
            return Err(QuotientError::SmallModulus);
        }
        if n > MAX_RING as u64 {
            return Err(QuotientError::TooLarge(n));
        }
        let s = n as usize;
        let add = (0..s * s).map(|i| ((i / s + i % s) % s) as u32).collect();
        let mul = (0..s * s).map(|i| ((i / s) * (i % s) % s) as u32).collect();
        Ok(FiniteRing { kind: RingKind::ZMod(n), size: s, add, mul })
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size).find(|&b| self.add(a, b) == 0).expect("additive group")
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == 1)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_unit(a)).collect()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.kind {
            RingKind::Field(f) => f.label(a as u64),
            RingKind::ZMod(_) => a.to_string(),
        }
    }

    /// Parse an element label as printed by [`FiniteRing::label`].
    pub fn parse_element(&self, s: &str) -> Option<usize> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        (0..self.size).find(|&a| self.label(a) == s)
    }

    /// Multiplicative closure of the generators (plus 1).
    pub fn subgroup(&self, gens: &[usize]) -> Result<Vec<usize>, QuotientError> {
        for &g in gens {
            if g >= self.size || !self.is_unit(g) {
                return Err(QuotientError::NotUnit(self.label(g.min(self.size - 1))));
            }
        }
        let mut set = BTreeSet::from([1usize]);
        let mut frontier = vec![1usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    /// The prime subfield's units when the ring is a field.
    pub fn prime_units(&self) -> Vec<usize> {
        match &self.kind {
            RingKind::Field(f) => (1..f.p() as usize).collect(),
            RingKind::ZMod(_) => self.units(),
        }
    }
}

/// R/G together with the class of every ring element.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: HyperTable,
    pub class_of: Vec<usize>,
    pub group: Vec<usize>,
}

/// Orbits of `G` acting on `R` by multiplication, with
/// `x + y = (xG + yG)/G` and `xG * yG = xyG`.
pub fn quotient_hyperring(r: &FiniteRing, gens: &[usize]) -> Result<Quotient, QuotientError> {
    let group = r.subgroup(gens)?;
    let n = r.size();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        for &g in &group {
            class_of[r.mul(x, g)] = reps.len();
        }
        reps.push(x);
    }
    let labels: Vec<String> = reps
        .iter()
        .map(|&x| if x == 0 { "0".to_string() } else { format!("[{}]", r.label(x)) })
        .collect();
    let table = HyperTable::from_fns(
        labels,
        0,
        |a, b| {
            // Classes are G-stable, so fixing the first representative loses nothing.
            let s: BTreeSet<usize> = group
                .iter()
                .map(|&g| class_of[r.add(reps[a], r.mul(reps[b], g))])
                .collect();
            s.into_iter().collect()
        },
        |a| class_of[r.neg(reps[a])],
    )?
    .with_mul(class_of[1], |a, b| class_of[r.mul(reps[a], reps[b])])?;
    Ok(Quotient { table, class_of, group })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrasnerCertificate {
    pub is_subfield: bool,
    /// A pair of elements of `{0} ∪ G` whose sum leaves it, when not a subfield.
    pub witness: Option<(String, String, String)>,
}

/// Whether `{0} ∪ G` is a subfield of `R`; requires `|G| >= 2`.
pub fn contains_krasner(r: &FiniteRing, gens: &[usize]) -> Result<KrasnerCertificate, QuotientError> {
    let group = r.subgroup(gens)?;
    if group.len() < 2 {
        return Err(QuotientError::TrivialSubgroup);
    }
    let set: BTreeSet<usize> = std::iter::once(0).chain(group.iter().copied()).collect();
    // A finite additively closed set containing 0 is an additive subgroup,
    // and G is a multiplicative group, so closure under + is the whole test.
    for &a in &set {
        for &b in &set {
            let c = r.add(a, b);
            if !set.contains(&c) {
                let w = (r.label(a), r.label(b), r.label(c));
                return Ok(KrasnerCertificate { is_subfield: false, witness: Some(w) });
            }
        }
    }
    Ok(KrasnerCertificate { is_subfield: true, witness: None })
}

/// Whether `{0, 1}` is a copy of K inside the table: `1 + 1 = {0, 1}`.
pub fn krasner_embeds(t: &HyperTable) -> bool {
    let Some(one) = t.one() else { return false };
    let s = t.add(one, one);
    one != t.zero() && s.len() == 2 && s.contains(t.zero()) && s.contains(one)
}

/// `K[G]`: carrier `{0} ∪ G`, `x + x = {0, x}`, `x + y = G \ {x, y}` for
/// distinct nonzero `x, y`, negation the identity map. This is the
/// hyperfield whose geometry is a single line through all of `G`. It is
/// ill-formed for `|G| = 2` (empty sums) and fails associativity for
/// `|G| = 3`; both outcomes are reported, not masked.
pub fn kg_hyperfield(g: &FiniteGroup) -> Result<HyperTable, QuotientError> {
    let n = g.order();
    // Index 0 is zero; group element e sits at e + 1.
    let labels = kg_labels(g);
    let t = HyperTable::from_fns(
        labels,
        0,
        |x, y| match (x, y) {
            (0, y) => vec![y],
            (x, 0) => vec![x],
            (x, y) if x == y => vec![0, x],
            (x, y) => (1..=n).filter(|&z| z != x && z != y).collect(),
        },
        |x| x,
    )?
    .with_mul(g.identity() + 1, |x, y| {
        if x == 0 || y == 0 {
            0
        } else {
            g.op(x - 1, y - 1) + 1
        }
    })?;
    Ok(t)
}

/// The rule `x + y = {x, y}` for distinct nonzero elements. It satisfies
/// neither associativity nor the line axioms once `|G| >= 2`; kept so the
/// failure can be exhibited.
pub fn kg_pair_rule(g: &FiniteGroup) -> Result<HyperTable, QuotientError> {
    let t = HyperTable::from_fns(
        kg_labels(g),
        0,
        |x, y| match (x, y) {
            (0, y) => vec![y],
            (x, 0) => vec![x],
            (x, y) if x == y => vec![0, x],
            (x, y) => vec![x, y],
        },
        |x| x,
    )?
    .with_mul(g.identity() + 1, |x, y| if x == 0 || y == 0 { 0 } else { g.op(x - 1, y - 1) + 1 })?;
    Ok(t)
}

fn kg_labels(g: &FiniteGroup) -> Vec<String> {
    std::iter::once("0".to_string())
        .chain((0..g.order()).map(|e| {
            if e == g.identity() {
                "1".to_string()
            } else {
                format!("g{}", g.labels()[e])
            }
        }))
        .collect()
}

/// Points `E \ {0}` and lines `L(x, y) = (x + y) ∪ {x, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub points: Vec<usize>,
    pub labels: Vec<String>,
    pub lines: Vec<BTreeSet<usize>>,
}

impl Geometry {
    pub fn min_line_size(&self) -> Option<usize> {
        self.lines.iter().map(|l| l.len()).min()
    }

    /// Every line has at least four points.
    pub fn lines_have_four_points(&self) -> bool {
        self.lines.iter().all(|l| l.len() >= 4)
    }

    /// Rebuild the hyperaddition: `x + y = L(x,y) \ {x,y}`, `x + x = {0,x}`.
    pub fn rebuild_sum(&self, zero: usize, x: usize, y: usize) -> Vec<usize> {
        if x == zero {
            return vec![y];
        }
        if y == zero {
            return vec![x];
        }
        if x == y {
            let mut v = vec![zero, x];
            v.sort();
            return v;
        }
        let line = self
            .lines
            .iter()
            .find(|l| l.contains(&x) && l.contains(&y))
            .expect("two points share a line");
        line.iter().copied().filter(|&z| z != x && z != y).collect()
    }
}

pub fn prenowitz_geometry(e: &HyperTable) -> Result<Geometry, QuotientError> {
    let r = check_canonical_hypergroup(e);
    if !r.passed {
        return Err(QuotientError::Precondition(format!("not a canonical hypergroup: {}", r.summary())));
    }
    let zero = e.zero();
    let points: Vec<usize> = (0..e.n()).filter(|&x| x != zero).collect();
    for &x in &points {
        let s = e.add(x, x);
        if s.len() != 2 || !s.contains(zero) || !s.contains(x) {
            return Err(QuotientError::Precondition(format!("{} + {} is not {{0, {}}}", e.label(x), e.label(x), e.label(x))));
        }
    }
    let mut lines: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for (i, &x) in points.iter().enumerate() {
        for &y in &points[i + 1..] {
            let mut l: BTreeSet<usize> = e.add(x, y).iter().collect();
            l.insert(x);
            l.insert(y);
            if l.contains(&zero) {
                return Err(QuotientError::Precondition("a line contains 0".into()));
            }
            lines.insert(l);
        }
    }
    let lines: Vec<BTreeSet<usize>> = lines.into_iter().collect();
    for (i, &x) in points.iter().enumerate() {
        for &y in &points[i + 1..] {
            let k = lines.iter().filter(|l| l.contains(&x) && l.contains(&y)).count();
            if k != 1 {
                return Err(QuotientError::Precondition(format!(
                    "{} and {} lie on {k} lines",
                    e.label(x),
                    e.label(y)
                )));
            }
        }
    }
    Ok(Geometry {
        labels: points.iter().map(|&p| e.label(p).to_string()).collect(),
        points,
        lines,
    })
}
