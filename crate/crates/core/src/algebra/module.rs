//! Finite left modules given by addition and scalar-action tables.

use serde::{Deserialize, Serialize};

use super::ring::{FiniteRing, IdealKind, MAX_RING_ORDER};
use crate::bits::ElemSet;
use crate::error::{Error, Result};

/// Default cap on the module order accepted by the parser.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Hard ceiling on the module order regardless of the cap.
pub const HARD_MAX_ORDER: usize = 4096;

/// Associativity of addition is checked over all triples up to this order;
/// larger modules are direct products of cyclic groups by construction.
const TRIPLE_CHECK_LIMIT: usize = 128;

/// Integer coefficients: the action factors through `ℤ/eℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZCoefficients {
    /// The exponent `e`, the lcm of the cyclic orders.
    pub exponent: u64,
    /// Orders of the cyclic summands, as given.
    pub moduli: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    Integers(ZCoefficients),
    Ring { name: String },
}

#[derive(Clone, Debug)]
pub struct FiniteModule {
    spec: String,
    coefficients: Coefficients,
    /// The ring that acts: `ℤ/eℤ` for integer coefficients.
    scalars: FiniteRing,
    labels: Vec<String>,
    add: Vec<u16>,
    act: Vec<u16>,
    zero: usize,
}

impl FiniteModule {
    /// Builds a module from tables and verifies the module axioms.
    pub fn from_tables(
        spec: impl Into<String>,
        coefficients: Coefficients,
        scalars: FiniteRing,
        labels: Vec<String>,
        add: Vec<u16>,
        act: Vec<u16>,
        zero: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n > HARD_MAX_ORDER {
            return Err(Error::TooLarge {
                what: "module",
                size: n,
                cap: HARD_MAX_ORDER,
            });
        }
        if add.len() != n * n || act.len() != scalars.len() * n || zero >= n {
            return Err(Error::ModuleAxiom("table shape".into()));
        }
        let m = Self {
            spec: spec.into(),
            coefficients,
            scalars,
            labels,
            add,
            act,
            zero,
        };
        m.verify_axioms()?;
        Ok(m)
    }

    /// Abelian group laws, then the action laws. For integer coefficients
    /// the action must be iterated addition; otherwise all ring-module laws
    /// are checked over every triple.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.len();
        let fail = |law: &str, detail: String| Err(Error::ModuleAxiom(format!("{law} fails at {detail}")));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", self.labels[a].clone());
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail("additive inverse", self.labels[a].clone());
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("commutativity", format!("{}, {}", self.labels[a], self.labels[b]));
                }
                if n <= TRIPLE_CHECK_LIMIT {
                    for c in 0..n {
                        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                            return fail(
                                "associativity",
                                format!("{}, {}, {}", self.labels[a], self.labels[b], self.labels[c]),
                            );
                        }
                    }
                }
            }
        }
        let r = &self.scalars;
        match &self.coefficients {
            Coefficients::Integers(_) => {
                for m in 0..n {
                    if self.act(r.zero(), m) != self.zero {
                        return fail("0·m = 0", self.labels[m].clone());
                    }
                    for k in 1..r.len() {
                        if self.act(k, m) != self.add(self.act(k - 1, m), m) {
                            return fail("iterated addition", format!("{k}·{}", self.labels[m]));
                        }
                    }
                    if self.add(self.act(r.len() - 1, m), m) != self.zero {
                        return fail("exponent annihilates", self.labels[m].clone());
                    }
                }
            }
            Coefficients::Ring { .. } => {
                for m in 0..n {
                    if self.act(r.one(), m) != m {
                        return fail("unit", self.labels[m].clone());
                    }
                }
                for s in 0..r.len() {
                    for t in 0..r.len() {
                        for m in 0..n {
                            if self.act(r.add(s, t), m) != self.add(self.act(s, m), self.act(t, m)) {
                                return fail("(r+s)m = rm+sm", self.labels[m].clone());
                            }
                            if self.act(r.mul(s, t), m) != self.act(s, self.act(t, m)) {
                                return fail("(rs)m = r(sm)", self.labels[m].clone());
                            }
                        }
                    }
                    for a in 0..n {
                        for b in 0..n {
                            if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                                return fail("r(m+n) = rm+rn", format!("{}, {}", self.labels[a], self.labels[b]));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `⊕ ℤ/d_iℤ`. Elements are coordinate tuples, first coordinate most
    /// significant.
    pub fn integers(moduli: &[u64], max_order: usize) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::BadSpec("no cyclic summands given".into()));
        }
        if let Some(d) = moduli.iter().find(|&&d| d < 2) {
            return Err(Error::BadSpec(format!("summand order {d} must be at least 2")));
        }
        let cap = max_order.min(HARD_MAX_ORDER);
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .unwrap_or(u64::MAX);
        if order > cap as u64 {
            return Err(Error::TooLarge {
                what: "module",
                size: usize::try_from(order).unwrap_or(usize::MAX),
                cap,
            });
        }
        let exponent = moduli.iter().fold(1u64, |acc, &d| lcm(acc, d));
        if exponent as usize > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                what: "exponent",
                size: exponent as usize,
                cap: MAX_RING_ORDER,
            });
        }
        let n = order as usize;
        let ds: Vec<usize> = moduli.iter().map(|&d| d as usize).collect();
        let coords: Vec<Vec<usize>> = (0..n).map(|x| decode(x, &ds)).collect();
        let mut add = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<usize> = (0..ds.len())
                    .map(|i| (coords[a][i] + coords[b][i]) % ds[i])
                    .collect();
                add[a * n + b] = encode(&s, &ds) as u16;
            }
        }
        let e = exponent as usize;
        let mut act = vec![0u16; e * n];
        for k in 0..e {
            for m in 0..n {
                let s: Vec<usize> = (0..ds.len()).map(|i| k * coords[m][i] % ds[i]).collect();
                act[k * n + m] = encode(&s, &ds) as u16;
            }
        }
        let labels = coords
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    c[0].to_string()
                } else {
                    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let spec = format!(
            "Z: {}",
            moduli.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        );
        Self::from_tables(
            spec,
            Coefficients::Integers(ZCoefficients {
                exponent,
                moduli: moduli.to_vec(),
            }),
            FiniteRing::zmod(e)?,
            labels,
            add,
            act,
            0,
        )
    }

    /// The left regular module `_RR`.
    pub fn regular(ring: FiniteRing) -> Result<Self> {
        let n = ring.len();
        let mut add = vec![0u16; n * n];
        let mut act = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ring.add(a, b) as u16;
                act[a * n + b] = ring.mul(a, b) as u16;
            }
        }
        let name = ring.name().to_string();
        Self::from_tables(
            format!("ring {name}: regular"),
            Coefficients::Ring { name },
            ring.clone(),
            ring.labels().to_vec(),
            add,
            act,
            ring.zero(),
        )
    }

    /// The column space `F_q^n` of `M_n(F_q)`, realised as the left ideal of
    /// matrices supported on the first column.
    pub fn column(ring: FiniteRing) -> Result<Self> {
        let (q, n) = ring
            .matrix_shape()
            .ok_or_else(|| Error::BadSpec(format!("{} has no column module", ring.name())))?;
        let members: Vec<usize> = (0..ring.len())
            .filter(|&x| {
                (0..n).all(|i| (1..n).all(|j| ring.matrix_entry(x, i, j) == Some(0)))
            })
            .collect();
        let index = |x: usize| members.binary_search(&x).expect("left ideal is closed");
        let k = members.len();
        let mut add = vec![0u16; k * k];
        for a in 0..k {
            for b in 0..k {
                add[a * k + b] = index(ring.add(members[a], members[b])) as u16;
            }
        }
        let mut act = vec![0u16; ring.len() * k];
        for r in 0..ring.len() {
            for m in 0..k {
                act[r * k + m] = index(ring.mul(r, members[m])) as u16;
            }
        }
        let labels = members
            .iter()
            .map(|&x| {
                let entries: Vec<String> = (0..n)
                    .map(|i| FiniteRing::field_label(q, ring.matrix_entry(x, i, 0).unwrap_or(0)))
                    .collect();
                format!("({})", entries.join(","))
            })
            .collect();
        let name = ring.name().to_string();
        Self::from_tables(
            format!("ring {name}: column"),
            Coefficients::Ring { name },
            ring,
            labels,
            add,
            act,
            index(0),
        )
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    /// The exponent when the coefficients are the integers.
    pub fn z_coefficients(&self) -> Option<&ZCoefficients> {
        match &self.coefficients {
            Coefficients::Integers(z) => Some(z),
            Coefficients::Ring { .. } => None,
        }
    }

    pub fn scalars(&self) -> &FiniteRing {
        &self.scalars
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

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b] as usize
    }

    /// Scalar action `r·m`.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.act[r * self.len() + m] as usize
    }

    /// Additive order of `m`.
    pub fn order_of(&self, m: usize) -> u64 {
        let mut k = 1u64;
        let mut x = m;
        while x != self.zero {
            x = self.add(x, m);
            k += 1;
        }
        k
    }

    /// Cyclic submodule `Rm`.
    pub fn cyclic(&self, m: usize) -> ElemSet {
        ElemSet::from_indices(self.len(), (0..self.scalars.len()).map(|r| self.act(r, m)))
    }

    /// Sum of two submodules.
    pub fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        super::subgroup_sum(self.len(), a, b, |x, y| self.add(x, y))
    }

    pub fn is_submodule(&self, s: &ElemSet) -> bool {
        s.contains(self.zero)
            && s.iter().all(|x| {
                s.iter().all(|y| s.contains(self.add(x, y)))
                    && (0..self.scalars.len()).all(|r| s.contains(self.act(r, x)))
            })
    }

    /// `{r : rN = 0}` as a set of scalars.
    pub fn annihilator_scalars(&self, n: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.scalars.len(),
            (0..self.scalars.len()).filter(|&r| n.iter().all(|x| self.act(r, x) == self.zero)),
        )
    }

    /// `(0 :_N I) = {m ∈ N : Im = 0}`.
    pub fn annihilated_in(&self, ideal: &ElemSet, within: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.len(),
            within
                .iter()
                .filter(|&m| ideal.iter().all(|r| self.act(r, m) == self.zero)),
        )
    }

    /// `IN`, the submodule generated by all `r·n`.
    pub fn ideal_times(&self, ideal: &ElemSet, n: &ElemSet) -> ElemSet {
        let mut out = ElemSet::singleton(self.len(), self.zero);
        for r in ideal.iter() {
            for x in n.iter() {
                let y = self.act(r, x);
                if !out.contains(y) {
                    let c = self.cyclic(y);
                    out = self.sum(&out, &c);
                }
            }
        }
        out
    }

    /// `(H :_R N) = {r : rN ⊆ H}`.
    pub fn colon(&self, h: &ElemSet, n: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.scalars.len(),
            (0..self.scalars.len()).filter(|&r| n.iter().all(|x| h.contains(self.act(r, x)))),
        )
    }

    /// Two-sided ideals of the scalar ring.
    pub fn scalar_ideals(&self) -> Vec<ElemSet> {
        self.scalars.ideals(IdealKind::TwoSided)
    }
}

/// Parses `Z: d1,d2,...`, `ring M2F2: regular|column` or
/// `ring Zmod:n: regular`.
pub fn parse_module_spec(spec: &str, max_order: usize) -> Result<FiniteModule> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("Z:") {
        let moduli = rest
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::BadSpec(format!("bad summand order {:?}", d.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        return FiniteModule::integers(&moduli, max_order);
    }
    if let Some(rest) = s.strip_prefix("ring ") {
        let (ring_spec, kind) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::BadSpec(format!("expected `ring <R>: <kind>` in {s:?}")))?;
        let ring_spec = ring_spec.trim();
        if ring_spec.starts_with('M') || ring_spec.starts_with('F') {
            let (q, n) = parse_matrix_shape(ring_spec)?;
            let size = q.checked_pow((n * n) as u32).unwrap_or(usize::MAX);
            let size = if kind.trim() == "column" { q.pow(n as u32) } else { size };
            check_order(size, max_order)?;
        } else if let Some(n) = ring_spec.strip_prefix("Zmod:") {
            if let Ok(n) = n.trim().parse::<usize>() {
                check_order(n, max_order)?;
            }
        }
        let ring = FiniteRing::parse(ring_spec)?;
        return match kind.trim() {
            "regular" => FiniteModule::regular(ring),
            "column" => FiniteModule::column(ring),
            other => Err(Error::BadSpec(format!("unknown module kind {other:?}"))),
        };
    }
    Err(Error::BadSpec(format!(
        "expected `Z: d1,...` or `ring <R>: regular|column`, got {s:?}"
    )))
}

fn parse_matrix_shape(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadSpec(format!("unknown ring {s:?}"));
    if let Some(rest) = s.strip_prefix('M') {
        let (n, q) = rest.split_once('F').ok_or_else(bad)?;
        Ok((q.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?))
    } else {
        let q = s.strip_prefix('F').ok_or_else(bad)?;
        Ok((q.parse().map_err(|_| bad())?, 1))
    }
}

fn check_order(size: usize, max_order: usize) -> Result<()> {
    let cap = max_order.min(HARD_MAX_ORDER);
    if size > cap {
        return Err(Error::TooLarge {
            what: "module",
            size,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn decode(mut x: usize, ds: &[usize]) -> Vec<usize> {
    let mut c = vec![0; ds.len()];
    for i in (0..ds.len()).rev() {
        c[i] = x % ds[i];
        x /= ds[i];
    }
    c
}

fn encode(c: &[usize], ds: &[usize]) -> usize {
    c.iter().zip(ds).fold(0, |acc, (&x, &d)| acc * d + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_modules() {
        let m = parse_module_spec("Z: 2,3,5", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(m.len(), 30);
        assert_eq!(m.z_coefficients().unwrap().exponent, 30);
        assert_eq!(m.label(m.zero()), "(0,0,0)");
        let c = parse_module_spec("Z: 4", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.labels(), &["0", "1", "2", "3"]);
        assert_eq!(c.order_of(1), 4);
        assert_eq!(c.order_of(2), 2);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(parse_module_spec("Z: 1,2", 512), Err(Error::BadSpec(_))));
        assert!(matches!(parse_module_spec("Z: x", 512), Err(Error::BadSpec(_))));
        assert!(matches!(parse_module_spec("Q: 2", 512), Err(Error::BadSpec(_))));
        assert!(matches!(parse_module_spec("ring M2F2: diagonal", 512), Err(Error::BadSpec(_))));
        assert!(matches!(parse_module_spec("ring Zmod:6: column", 512), Err(Error::BadSpec(_))));
        assert!(matches!(parse_module_spec("Z: 32,32", 512), Err(Error::TooLarge { .. })));
        assert!(matches!(parse_module_spec("Z: 8", 4), Err(Error::TooLarge { .. })));
        assert!(matches!(parse_module_spec("ring M2F3: regular", 64), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn ring_modules() {
        let reg = parse_module_spec("ring M2F2: regular", 512).unwrap();
        assert_eq!(reg.len(), 16);
        let col = parse_module_spec("ring M2F2: column", 512).unwrap();
        assert_eq!(col.len(), 4);
        assert_eq!(col.label(col.zero()), "(0,0)");
        // the column space is simple: every non-zero vector generates it
        for m in 0..4 {
            if m != col.zero() {
                assert_eq!(col.cyclic(m).len(), 4);
            }
        }
        let z = parse_module_spec("ring Zmod:12: regular", 512).unwrap();
        assert_eq!(z.len(), 12);
        let f4 = parse_module_spec("ring M2F4: column", 512).unwrap();
        assert_eq!(f4.len(), 16);
    }

    #[test]
    fn corrupted_action_is_rejected() {
        let m = parse_module_spec("Z: 3", 512).unwrap();
        let mut act = m.act.clone();
        act[2 * 3 + 1] = 1; // 2·1 = 1
        let err = FiniteModule::from_tables(
            "Z: 3",
            m.coefficients.clone(),
            m.scalars.clone(),
            m.labels.clone(),
            m.add.clone(),
            act,
            0,
        );
        assert!(matches!(err, Err(Error::ModuleAxiom(_))));
    }

    #[test]
    fn annihilators_and_colons() {
        let m = parse_module_spec("Z: 2,3", 512).unwrap();
        let all = ElemSet::full(m.len());
        let ann = m.annihilator_scalars(&all);
        assert_eq!(ann.to_vec(), vec![0]);
        let zero = ElemSet::singleton(m.len(), m.zero());
        assert_eq!(m.annihilator_scalars(&zero).len(), 6);
        assert_eq!(m.colon(&zero, &all).to_vec(), vec![0]);
    }

    #[test]
    fn number_theory() {
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(gcd(8, 12), 4);
        assert!(is_prime(2) && is_prime(5) && !is_prime(1) && !is_prime(9));
    }
}
