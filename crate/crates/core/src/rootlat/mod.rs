//! Exact root-system arithmetic over the root lattice.
//!
//! Simple roots carry string labels (`a1`, `a2`, ...). Lattice vectors are
//! finitely supported integer combinations of simple roots keyed by label,
//! so they survive restriction to sub-diagrams unchanged.

mod dynkin;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub use dynkin::Series;

use crate::error::{Error, Result};
use crate::sphsys::{Functional, Rational};

/// Label of a simple root.
///
/// Ordered naturally, so `a2 < a10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn sort_key(&self) -> (&str, Option<u64>) {
        let digits = self.0.len() - self.0.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, tail) = self.0.split_at(self.0.len() - digits);
        (head, tail.parse().ok())
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

/// Builds a label set from string slices.
pub fn labels<'a>(it: impl IntoIterator<Item = &'a str>) -> BTreeSet<Label> {
    it.into_iter().map(Label::from).collect()
}

/// Integer combination of simple roots. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coeffs: BTreeMap<Label, i64>,
}

impl LatticeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(label: impl Into<Label>) -> Self {
        Self::from_pairs([(label.into(), 1)])
    }

    pub fn from_pairs<L: Into<Label>>(pairs: impl IntoIterator<Item = (L, i64)>) -> Self {
        let mut v = Self::zero();
        for (l, c) in pairs {
            v.add_coeff(l.into(), c);
        }
        v
    }

    pub fn coeff(&self, label: &Label) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    fn add_coeff(&mut self, label: Label, c: i64) {
        let entry = self.coeffs.entry(label).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.retain(|_, v| *v != 0);
        }
    }

    /// Overwrites one coefficient.
    pub fn set_coeff(&mut self, label: Label, c: i64) {
        if c == 0 {
            self.coeffs.remove(&label);
        } else {
            self.coeffs.insert(label, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, i64)> {
        self.coeffs.iter().map(|(l, &c)| (l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Labels with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Label> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LatticeVector {
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, &c)| (l.clone(), c * k))
                .collect(),
        }
    }

    /// If `self = k·α` for the simple root `α`, returns `k`.
    pub fn multiple_of_simple(&self, alpha: &Label) -> Option<i64> {
        match self.coeffs.len() {
            1 => self.coeffs.get(alpha).copied(),
            _ => None,
        }
    }

    /// Single simple root with coefficient one.
    pub fn as_simple(&self) -> Option<&Label> {
        match self.coeffs.iter().next() {
            Some((l, 1)) if self.coeffs.len() == 1 => Some(l),
            _ => None,
        }
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        let mut out = self.clone();
        for (l, c) in rhs.iter() {
            out.add_coeff(l.clone(), c);
        }
        out
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        self + &(-rhs)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        self.scaled(-1)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.iter().enumerate() {
            match (i, c) {
                (0, 1) => write!(f, "{l}")?,
                (0, -1) => write!(f, "-{l}")?,
                (0, c) => write!(f, "{c}{l}")?,
                (_, 1) => write!(f, "+{l}")?,
                (_, -1) => write!(f, "-{l}")?,
                (_, c) if c > 0 => write!(f, "+{c}{l}")?,
                (_, c) => write!(f, "{c}{l}")?,
            }
        }
        Ok(())
    }
}

/// A simple component with its simple roots in standard order.
///
/// For `B` the last root is short, for `C` the last root is long and for
/// `G2` the second root is short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub series: Series,
    pub rank: usize,
    pub labels: Vec<Label>,
}

/// Semisimple root system with exact Cartan matrix and invariant form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<Component>,
    labels: Vec<Label>,
    index: BTreeMap<Label, usize>,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Builds a root system from `(series, rank)` pairs, labelling simple
    /// roots `a1, a2, ...` consecutively across components.
    pub fn build(spec: &[(Series, usize)]) -> Result<Self> {
        let mut next = 1;
        let mut comps = Vec::with_capacity(spec.len());
        for &(series, rank) in spec {
            series.check_rank(rank)?;
            let labels = (next..next + rank)
                .map(|i| Label(format!("a{i}")))
                .collect();
            next += rank;
            comps.push(Component {
                series,
                rank,
                labels,
            });
        }
        Self::from_components(comps)
    }

    /// Builds a root system from components with explicit labels. The
    /// global order of simple roots is the concatenation of the components.
    pub fn from_components(components: Vec<Component>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut index = BTreeMap::new();
        for c in &components {
            c.series.check_rank(c.rank)?;
            if c.labels.len() != c.rank {
                return Err(Error::InvalidCartan(format!(
                    "component {}{} lists {} labels",
                    c.series,
                    c.rank,
                    c.labels.len()
                )));
            }
            for l in &c.labels {
                if index.insert(l.clone(), labels.len()).is_some() {
                    return Err(Error::DuplicateLabel(l.to_string()));
                }
                labels.push(l.clone());
            }
        }
        let n = labels.len();
        let mut cartan = vec![vec![0; n]; n];
        let mut form = vec![vec![0; n]; n];
        let mut offset = 0;
        for c in &components {
            let sc = dynkin::standard_cartan(c.series, c.rank);
            let sf = dynkin::standard_form(c.series, c.rank);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[offset + i][offset + j] = sc[i][j];
                    form[offset + i][offset + j] = sf[i][j];
                }
            }
            offset += c.rank;
        }
        Ok(RootSystem {
            components,
            labels,
            index,
            cartan,
            form,
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Simple roots in global order.
    pub fn simple_roots(&self) -> &[Label] {
        &self.labels
    }

    pub fn simple_root_set(&self) -> BTreeSet<Label> {
        self.labels.iter().cloned().collect()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index.contains_key(label)
    }

    pub fn index_of(&self, label: &Label) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form_matrix(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// Cartan entry `<α^∨, β>` for two simple roots.
    pub fn cartan_entry(&self, alpha: &Label, beta: &Label) -> Result<i64> {
        Ok(self.cartan[self.index_of(alpha)?][self.index_of(beta)?])
    }

    /// `<α^∨, λ>` for a simple root `α`.
    pub fn cartan_integer(&self, alpha: &Label, lambda: &LatticeVector) -> Result<i64> {
        let row = &self.cartan[self.index_of(alpha)?];
        lambda
            .iter()
            .map(|(l, c)| Ok(c * row[self.index_of(l)?]))
            .sum()
    }

    /// Invariant form `(λ, μ)`.
    pub fn form(&self, lambda: &LatticeVector, mu: &LatticeVector) -> Result<i64> {
        let mut acc = 0;
        for (l, a) in lambda.iter() {
            let row = &self.form[self.index_of(l)?];
            for (m, b) in mu.iter() {
                acc += a * b * row[self.index_of(m)?];
            }
        }
        Ok(acc)
    }

    /// Coroot `α^∨` restricted to the span of `psi`, given by its values on
    /// each element of `psi`.
    pub fn restricted_coroot(&self, alpha: &Label, psi: &[LatticeVector]) -> Result<Functional> {
        let values = psi
            .iter()
            .map(|s| self.cartan_integer(alpha, s).map(Rational::from_integer))
            .collect::<Result<Vec<_>>>()?;
        Ok(Functional::new(values))
    }

    /// Decomposes the sub-diagram induced on `subset` into connected
    /// components, each identified with its series and its labels in
    /// standard order. Components are listed by their first simple root in
    /// global order.
    pub fn detect_subdiagram_type(&self, subset: &BTreeSet<Label>) -> Result<Vec<Component>> {
        let mut nodes = subset
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        nodes.sort_unstable();
        let mut seen = vec![false; nodes.len()];
        let mut out = Vec::new();
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                for q in 0..nodes.len() {
                    if !seen[q] && self.cartan[nodes[p]][nodes[q]] != 0 {
                        seen[q] = true;
                        comp.push(q);
                        queue.push_back(q);
                    }
                }
            }
            comp.sort_unstable();
            let global: Vec<usize> = comp.iter().map(|&p| nodes[p]).collect();
            let sub: Vec<Vec<i64>> = global
                .iter()
                .map(|&i| global.iter().map(|&j| self.cartan[i][j]).collect())
                .collect();
            let (series, order) = dynkin::identify(&sub).ok_or_else(|| {
                Error::InvalidCartan("induced sub-diagram is not of finite type".into())
            })?;
            out.push(Component {
                series,
                rank: global.len(),
                labels: order
                    .iter()
                    .map(|&p| self.labels[global[p]].clone())
                    .collect(),
            });
        }
        Ok(out)
    }

    /// Root system induced on a subset of the simple roots.
    pub fn restrict(&self, subset: &BTreeSet<Label>) -> Result<Self> {
        if let Some(bad) = subset.iter().find(|l| !self.contains(l)) {
            return Err(Error::NotASubset(format!("label `{bad}`")));
        }
        Self::from_components(self.detect_subdiagram_type(subset)?)
    }

    /// Positive roots, ordered by height, generated from the simple roots
    /// through root strings.
    pub fn positive_roots(&self) -> Vec<LatticeVector> {
        let n = self.rank();
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let mut known: HashSet<Vec<i64>> = (0..n).map(unit).collect();
        let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // the α_i-string through β is β - pα_i, ..., β + qα_i
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if !known.contains(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.into_iter()
            .map(|v| {
                LatticeVector::from_pairs(
                    v.into_iter()
                        .enumerate()
                        .map(|(i, c)| (self.labels[i].clone(), c)),
                )
            })
            .collect()
    }
}

/// Equal label sets with equal Cartan entries; component bookkeeping and
/// label order are ignored.
impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.index.len() == other.index.len()
            && self.labels.iter().all(|a| {
                other.contains(a)
                    && self
                        .labels
                        .iter()
                        .all(|b| self.cartan_entry(a, b).ok() == other.cartan_entry(a, b).ok())
            })
    }
}

impl Eq for RootSystem {}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("trivial");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("×")?;
            }
            write!(f, "{}{}", c.series, c.rank)?;
        }
        Ok(())
    }
}
