//! Finite unital rings given by addition and multiplication tables.

use std::collections::{HashSet, VecDeque};

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::FinLattice;

/// Largest ring the constructors will build.
pub const MAX_RING_ORDER: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    labels: Vec<String>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    commutative: bool,
    /// `(q, n)` for `M_n(F_q)`, whose element indices are base-`q` digit
    /// strings of the entries in row-major order, least significant first.
    matrix: Option<(usize, usize)>,
}

/// Which one-sided or two-sided ideals to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Left,
    TwoSided,
}

/// The ideals of a ring as a lattice under `∩` and `+`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub kind: IdealKind,
    /// Ideals sorted by size, then by members; index `i` is lattice element `i`.
    pub ideals: Vec<ElemSet>,
    pub lattice: FinLattice,
}

impl FiniteRing {
    /// Builds a ring from tables and verifies every ring axiom.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let ring = Self::assemble(name.into(), labels, add, mul, zero, one)?;
        ring.verify_axioms()?;
        Ok(ring)
    }

    fn assemble(
        name: String,
        labels: Vec<String>,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                what: "ring",
                size: n,
                cap: MAX_RING_ORDER,
            });
        }
        if add.len() != n * n || mul.len() != n * n || zero >= n || one >= n {
            return Err(Error::RingAxiom("table shape".into()));
        }
        let mut neg = vec![0u16; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| add[a * n + b] as usize == zero)
                .ok_or_else(|| Error::RingAxiom(format!("{} has no negative", labels[a])))?;
            neg[a] = b as u16;
        }
        let commutative = (0..n).all(|a| (0..n).all(|b| mul[a * n + b] == mul[b * n + a]));
        Ok(Self {
            name,
            labels,
            add,
            mul,
            neg,
            zero,
            one,
            commutative,
            matrix: None,
        })
    }

    /// Checks the ring axioms over all pairs and triples.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.len();
        let fail = |law: &str, xs: &[usize]| {
            let names: Vec<&str> = xs.iter().map(|&x| self.labels[x].as_str()).collect();
            Err(Error::RingAxiom(format!("{law} fails at {names:?}")))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a || self.add(self.zero, a) != a {
                return fail("additive identity", &[a]);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("multiplicative identity", &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", &[a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("left distributivity", &[a, b, c]);
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return fail("right distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// The residue ring `ℤ/nℤ`. Correct by construction; axioms are not
    /// re-verified here (see the tests).
    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadSpec(format!("Zmod:{n} needs n ≥ 2")));
        }
        if n > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                what: "ring",
                size: n,
                cap: MAX_RING_ORDER,
            });
        }
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::assemble(format!("Zmod:{n}"), labels, add, mul, 0, 1)
    }

    /// The full matrix ring `M_n(F_q)` for `q ∈ {2, 3, 4}`.
    pub fn matrix_ring(q: usize, n: usize) -> Result<Self> {
        let field = Field::new(q)?;
        let cells = n * n;
        let size = q.checked_pow(cells as u32).unwrap_or(usize::MAX);
        if n == 0 || size > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                what: "matrix ring",
                size,
                cap: MAX_RING_ORDER,
            });
        }
        let decode = |mut x: usize| {
            let mut m = vec![0usize; cells];
            for cell in m.iter_mut() {
                *cell = x % q;
                x /= q;
            }
            m
        };
        let encode = |m: &[usize]| m.iter().rev().fold(0usize, |acc, &d| acc * q + d);
        let mats: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                let s: Vec<usize> = (0..cells).map(|k| field.add(mats[a][k], mats[b][k])).collect();
                add[a * size + b] = encode(&s) as u16;
                let mut p = vec![0usize; cells];
                for i in 0..n {
                    for j in 0..n {
                        p[i * n + j] = (0..n).fold(0, |acc, k| {
                            field.add(acc, field.mul(mats[a][i * n + k], mats[b][k * n + j]))
                        });
                    }
                }
                mul[a * size + b] = encode(&p) as u16;
            }
        }
        let mut identity = vec![0usize; cells];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let labels = mats
            .iter()
            .map(|m| {
                let rows: Vec<String> = (0..n)
                    .map(|i| (0..n).map(|j| field.label(m[i * n + j])).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("[{}]", rows.join("; "))
            })
            .collect();
        let mut ring = Self::from_tables(
            format!("M{n}F{q}"),
            labels,
            add,
            mul,
            0,
            encode(&identity),
        )?;
        ring.matrix = Some((q, n));
        Ok(ring)
    }

    /// `(q, n)` when this is `M_n(F_q)`.
    pub fn matrix_shape(&self) -> Option<(usize, usize)> {
        self.matrix
    }

    /// Entry `(i, j)` of matrix element `x`, as a field element index.
    pub fn matrix_entry(&self, x: usize, i: usize, j: usize) -> Option<usize> {
        let (q, n) = self.matrix?;
        Some(x / q.pow((i * n + j) as u32) % q)
    }

    /// Label of a field element of `F_q` as used in matrix labels.
    pub fn field_label(q: usize, a: usize) -> String {
        Field { q }.label(a)
    }

    /// Parses `Zmod:n`, `M2F2`, `M2F3`, `M2F4`, or `Fq` for q ∈ {2, 3, 4}.
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        if let Some(n) = s.strip_prefix("Zmod:") {
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::BadSpec(format!("bad modulus in {s:?}")))?;
            return Self::zmod(n);
        }
        if let Some(rest) = s.strip_prefix('M') {
            if let Some((n, q)) = rest.split_once('F') {
                if let (Ok(n), Ok(q)) = (n.parse(), q.parse()) {
                    return Self::matrix_ring(q, n);
                }
            }
        }
        if let Some(q) = s.strip_prefix('F') {
            if let Ok(q) = q.parse() {
                return Self::matrix_ring(q, 1).map(|mut r| {
                    r.name = format!("F{q}");
                    r
                });
            }
        }
        Err(Error::BadSpec(format!("unknown ring {s:?}")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Additive subgroup generated by `gens`.
    pub fn additive_span<I: IntoIterator<Item = usize>>(&self, gens: I) -> ElemSet {
        let mut set = ElemSet::singleton(self.len(), self.zero);
        for g in gens {
            if !set.contains(g) {
                let multiples = self.multiples(g);
                set = self.sum(&set, &multiples);
            }
        }
        set
    }

    /// The cyclic additive subgroup `{0, g, 2g, ...}`.
    fn multiples(&self, g: usize) -> ElemSet {
        let mut set = ElemSet::singleton(self.len(), self.zero);
        let mut x = g;
        while !set.contains(x) {
            set.insert(x);
            x = self.add(x, g);
        }
        set
    }

    /// Ideal generated by `gens`.
    pub fn ideal_generated<I: IntoIterator<Item = usize>>(&self, gens: I, kind: IdealKind) -> ElemSet {
        let n = self.len();
        let mut products = ElemSet::empty(n);
        for g in gens {
            for r in 0..n {
                let left = self.mul(r, g);
                if kind == IdealKind::Left || self.commutative {
                    products.insert(left);
                } else {
                    for s in 0..n {
                        products.insert(self.mul(left, s));
                    }
                }
            }
        }
        self.additive_span(products.iter())
    }

    /// Sum of two additive subgroups.
    pub fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        super::subgroup_sum(self.len(), a, b, |x, y| self.add(x, y))
    }

    /// Product ideal `AB`: additive span of all `ab`.
    pub fn product(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let products: Vec<usize> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| self.mul(x, y)))
            .collect();
        self.additive_span(products)
    }

    pub fn is_ideal(&self, s: &ElemSet, kind: IdealKind) -> bool {
        let n = self.len();
        s.contains(self.zero)
            && s.iter().all(|x| {
                s.iter().all(|y| s.contains(self.add(x, y)))
                    && (0..n).all(|r| {
                        s.contains(self.mul(r, x))
                            && (kind == IdealKind::Left || s.contains(self.mul(x, r)))
                    })
            })
    }

    /// All ideals of the given kind, sorted by size then members.
    pub fn ideals(&self, kind: IdealKind) -> Vec<ElemSet> {
        let n = self.len();
        let mut principal: Vec<ElemSet> = (0..n).map(|x| self.ideal_generated([x], kind)).collect();
        principal.sort();
        principal.dedup();
        let zero = ElemSet::singleton(n, self.zero);
        let mut seen: HashSet<ElemSet> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(ideal) = queue.pop_front() {
            for p in &principal {
                if p.is_subset(&ideal) {
                    continue;
                }
                let bigger = self.sum(&ideal, p);
                if seen.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        let mut all: Vec<ElemSet> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// Human label for an ideal: `0`, `R`, or greedy generators.
    pub fn ideal_label(&self, ideal: &ElemSet, kind: IdealKind) -> String {
        if ideal.len() == 1 {
            return "0".into();
        }
        if ideal.len() == self.len() {
            return "R".into();
        }
        let mut current = ElemSet::singleton(self.len(), self.zero);
        let mut gens = Vec::new();
        for x in ideal.iter() {
            if !current.contains(x) {
                gens.push(self.labels[x].clone());
                current = self.sum(&current, &self.ideal_generated([x], kind));
            }
        }
        format!("<{}>", gens.join(","))
    }

    pub fn ideal_lattice(&self, kind: IdealKind) -> IdealLattice {
        let ideals = self.ideals(kind);
        let labels = ideals.iter().map(|i| self.ideal_label(i, kind)).collect();
        let lattice = inclusion_lattice(&ideals, labels);
        IdealLattice {
            kind,
            ideals,
            lattice,
        }
    }

    /// Two-sided prime ideals: proper `P` with `AB ⊆ P ⇒ A ⊆ P or B ⊆ P`
    /// for all two-sided ideals `A`, `B`.
    pub fn is_prime_ideal(&self, p: &ElemSet, ideals: &[ElemSet]) -> bool {
        if p.len() == self.len() {
            return false;
        }
        ideals.iter().all(|a| {
            a.is_subset(p)
                || ideals
                    .iter()
                    .all(|b| b.is_subset(p) || !self.product(a, b).is_subset(p))
        })
    }

    /// Maximal two-sided ideals.
    pub fn is_maximal_ideal(&self, p: &ElemSet, ideals: &[ElemSet]) -> bool {
        p.len() != self.len()
            && ideals
                .iter()
                .all(|a| !p.is_subset(a) || a == p || a.len() == self.len())
    }
}

impl IdealLattice {
    /// Lattice indices of the prime ideals (two-sided lattices only).
    pub fn prime_spectrum(&self, ring: &FiniteRing) -> ElemSet {
        ElemSet::from_indices(
            self.ideals.len(),
            (0..self.ideals.len()).filter(|&i| ring.is_prime_ideal(&self.ideals[i], &self.ideals)),
        )
    }
}

/// Lattice of subgroups ordered by inclusion. Meets are intersections and
/// joins are the least common upper bound in the list. `sets` must be closed
/// under intersection, contain the least and greatest set, and be sorted by
/// size.
pub(crate) fn inclusion_lattice(sets: &[ElemSet], labels: Vec<String>) -> FinLattice {
    let n = sets.len();
    let index: std::collections::HashMap<&ElemSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let up: Vec<ElemSet> = (0..n)
        .map(|a| ElemSet::from_indices(n, (0..n).filter(|&b| sets[a].is_subset(&sets[b]))))
        .collect();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let m = index[&sets[a].intersection(&sets[b])];
            // sorted by size, so the first common upper bound is the least
            let j = up[a]
                .intersection(&up[b])
                .first()
                .expect("greatest element bounds every pair");
            meet[a * n + b] = m as u32;
            meet[b * n + a] = m as u32;
            join[a * n + b] = j as u32;
            join[b * n + a] = j as u32;
        }
    }
    FinLattice::from_parts_unchecked(labels, up, meet, join, 0, n - 1)
}

/// `F_q` for `q ∈ {2, 3, 4}`; `F_4 = {0, 1, w, w+1}` with `w² = w + 1`.
struct Field {
    q: usize,
}

impl Field {
    fn new(q: usize) -> Result<Self> {
        match q {
            2..=4 => Ok(Self { q }),
            _ => Err(Error::BadSpec(format!("field order {q} not supported (2, 3, 4)"))),
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        match self.q {
            4 => a ^ b,
            q => (a + b) % q,
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match self.q {
            4 => {
                // polynomial product mod w² + w + 1
                let mut p = 0;
                for i in 0..2 {
                    if b >> i & 1 == 1 {
                        p ^= a << i;
                    }
                }
                if p & 4 != 0 {
                    p ^= 0b111;
                }
                p
            }
            q => (a * b) % q,
        }
    }

    fn label(&self, a: usize) -> String {
        match (self.q, a) {
            (4, 2) => "w".into(),
            (4, 3) => "w1".into(),
            _ => a.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_satisfies_axioms() {
        for n in [2, 6, 12] {
            FiniteRing::zmod(n).unwrap().verify_axioms().unwrap();
        }
        assert!(FiniteRing::zmod(12).unwrap().is_commutative());
        assert!(matches!(FiniteRing::zmod(1), Err(Error::BadSpec(_))));
    }

    #[test]
    fn matrix_rings() {
        let r = FiniteRing::matrix_ring(2, 2).unwrap();
        assert_eq!(r.len(), 16);
        assert!(!r.is_commutative());
        for a in 0..16 {
            assert_eq!(r.mul(r.one(), a), a);
            assert_eq!(r.mul(a, r.one()), a);
        }
        assert_eq!(r.label(r.one()), "[1 0; 0 1]");
        let r3 = FiniteRing::matrix_ring(3, 2).unwrap();
        assert_eq!(r3.len(), 81);
        assert!(matches!(FiniteRing::matrix_ring(4, 3), Err(Error::TooLarge { .. })));
        assert!(matches!(FiniteRing::matrix_ring(5, 2), Err(Error::BadSpec(_))));
    }

    #[test]
    fn f4_is_a_field() {
        let f = FiniteRing::parse("F4").unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.is_commutative());
        for a in 1..4 {
            assert!((1..4).any(|b| f.mul(a, b) == f.one()));
        }
    }

    #[test]
    fn zmod12_ideals_and_primes() {
        let r = FiniteRing::zmod(12).unwrap();
        let il = r.ideal_lattice(IdealKind::TwoSided);
        let labels: Vec<&str> = il.lattice.labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, vec!["0", "<6>", "<4>", "<3>", "<2>", "R"]);
        assert!(il.lattice.check_axioms().is_empty());
        let primes: Vec<&str> = il
            .prime_spectrum(&r)
            .iter()
            .map(|i| il.lattice.label(i))
            .collect();
        assert_eq!(primes, vec!["<3>", "<2>"]);
    }

    #[test]
    fn matrix_ring_is_simple() {
        let r = FiniteRing::parse("M2F2").unwrap();
        let two = r.ideal_lattice(IdealKind::TwoSided);
        assert_eq!(two.ideals.len(), 2);
        let spec = two.prime_spectrum(&r);
        assert_eq!(spec.to_vec(), vec![0]);
        let left = r.ideal_lattice(IdealKind::Left);
        // 0, three minimal left ideals, R
        assert_eq!(left.ideals.len(), 5);
        assert!(left.ideals.iter().all(|i| r.is_ideal(i, IdealKind::Left)));
        assert!(left.lattice.check_axioms().is_empty());
    }

    #[test]
    fn field_spectrum() {
        let r = FiniteRing::parse("Zmod:2").unwrap();
        let il = r.ideal_lattice(IdealKind::TwoSided);
        assert_eq!(il.prime_spectrum(&r).to_vec(), vec![0]);
    }

    #[test]
    fn bad_ring_specs() {
        assert!(FiniteRing::parse("Q").is_err());
        assert!(FiniteRing::parse("Zmod:x").is_err());
    }
}
