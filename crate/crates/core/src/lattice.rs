//! Finite bounded lattices given explicitly by their order and operation tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{quotient, FiniteAlgebra};
use crate::congruence::Congruence;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteLattice {
    name: String,
    size: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeProfile {
    pub is_distributive: bool,
    pub is_modular: bool,
    pub is_boolean: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityProfile {
    pub normal: bool,
    pub b_normal: bool,
    pub conormal: bool,
    pub b_conormal: bool,
}

/// Complemented elements of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanCenter {
    pub elements: Vec<usize>,
    /// Chosen complement (least index when several exist).
    pub complement: BTreeMap<usize, usize>,
    pub all_complements: BTreeMap<usize, Vec<usize>>,
    pub non_unique: bool,
}

impl BooleanCenter {
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A principal filter `[x)` viewed as a bounded lattice, with the embedding
/// of its elements into the parent lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lattice: FiniteLattice,
    pub members: Vec<usize>,
}

impl Interval {
    /// Position of a parent element inside the interval.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

fn bounds_of(n: usize, leq: &[bool]) -> Result<(usize, usize)> {
    let bottom = (0..n)
        .find(|&b| (0..n).all(|x| leq[b * n + x]))
        .ok_or_else(|| Error::NotALattice("no least element".into()))?;
    let top = (0..n)
        .find(|&t| (0..n).all(|x| leq[x * n + t]))
        .ok_or_else(|| Error::NotALattice("no greatest element".into()))?;
    Ok((bottom, top))
}

impl FiniteLattice {
    /// Builds a lattice from a flat `n×n` order relation; joins and meets are derived.
    pub fn from_leq(
        name: impl Into<String>,
        n: usize,
        leq: Vec<bool>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if leq.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: leq.len(),
            });
        }
        check_labels(n, labels.as_deref())?;
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(Error::NotALattice(format!("order is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotALattice(format!(
                        "order is not antisymmetric at ({a},{b})"
                    )));
                }
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotALattice(format!(
                            "order is not transitive at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let uppers: Vec<usize> = (0..n)
                    .filter(|&u| leq[a * n + u] && leq[b * n + u])
                    .collect();
                join[a * n + b] = *uppers
                    .iter()
                    .find(|&&u| uppers.iter().all(|&v| leq[u * n + v]))
                    .ok_or_else(|| Error::NotALattice(format!("{a} and {b} have no join")))?;
                let lowers: Vec<usize> = (0..n)
                    .filter(|&l| leq[l * n + a] && leq[l * n + b])
                    .collect();
                meet[a * n + b] = *lowers
                    .iter()
                    .find(|&&l| lowers.iter().all(|&v| leq[v * n + l]))
                    .ok_or_else(|| Error::NotALattice(format!("{a} and {b} have no meet")))?;
            }
        }
        let (bottom, top) = bounds_of(n, &leq)?;
        Ok(FiniteLattice {
            name: name.into(),
            size: n,
            leq,
            join,
            meet,
            bottom,
            top,
            labels,
        })
    }

    /// Builds a lattice from covering pairs `(lower, upper)`.
    pub fn from_covers(
        name: impl Into<String>,
        n: usize,
        covers: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::ElementOutOfRange {
                    element: a.max(b),
                    size: n,
                });
            }
            leq[a * n + b] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        FiniteLattice::from_leq(name, n, leq, labels)
    }

    /// Reads a lattice off an algebra with binary `join` and `meet`, checking
    /// that they really are the lattice operations of the order `a ≤ b ⟺ a∧b = a`.
    pub fn from_algebra(alg: &FiniteAlgebra) -> Result<Self> {
        let n = alg.size();
        let join = alg.op("join").filter(|o| o.arity() == 2).ok_or(Error::MissingOp {
            name: "join".into(),
            arity: 2,
        })?;
        let meet = alg.op("meet").filter(|o| o.arity() == 2).ok_or(Error::MissingOp {
            name: "meet".into(),
            arity: 2,
        })?;
        let leq: Vec<bool> = (0..n * n)
            .map(|i| meet.binary(i / n, i % n) == i / n)
            .collect();
        let lattice = FiniteLattice::from_leq(
            alg.name(),
            n,
            leq,
            alg.element_names().map(|l| l.to_vec()),
        )?;
        if lattice.join != join.table() {
            return Err(Error::NotALattice(
                "`join` is not the least upper bound of the order induced by `meet`".into(),
            ));
        }
        if lattice.meet != meet.table() {
            return Err(Error::NotALattice("`meet` is not a greatest lower bound".into()));
        }
        Ok(lattice)
    }

    /// Trusted constructor for tables already known to be consistent.
    pub(crate) fn from_parts(
        name: String,
        n: usize,
        leq: Vec<bool>,
        join: Vec<usize>,
        meet: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let (bottom, top) = bounds_of(n, &leq).expect("bounded by construction");
        FiniteLattice {
            name,
            size: n,
            leq,
            join,
            meet,
            bottom,
            top,
            labels,
        }
    }

    /// The lattice as an algebra with binary operations `join` and `meet`.
    pub fn to_algebra(&self) -> FiniteAlgebra {
        FiniteAlgebra::new(
            self.name.clone(),
            self.size,
            vec![
                ("join".into(), 2, self.join.clone()),
                ("meet".into(), 2, self.meet.clone()),
            ],
            self.labels.clone(),
        )
        .expect("lattice tables are valid operation tables")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    pub fn is_modular(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| {
            (0..n).all(|c| {
                !self.leq(a, c)
                    || (0..n).all(|b| {
                        self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), c)
                    })
            })
        })
    }

    pub fn complements(&self, x: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom)
            .collect()
    }

    pub fn boolean_center(&self) -> BooleanCenter {
        let mut elements = Vec::new();
        let mut complement = BTreeMap::new();
        let mut all_complements = BTreeMap::new();
        let mut non_unique = false;
        for x in 0..self.size {
            let comps = self.complements(x);
            if let Some(&first) = comps.first() {
                elements.push(x);
                complement.insert(x, first);
                non_unique |= comps.len() > 1;
                all_complements.insert(x, comps);
            }
        }
        BooleanCenter {
            elements,
            complement,
            all_complements,
            non_unique,
        }
    }

    pub fn profile(&self) -> LatticeProfile {
        let is_distributive = self.is_distributive();
        LatticeProfile {
            is_distributive,
            is_modular: is_distributive || self.is_modular(),
            is_boolean: is_distributive && self.boolean_center().len() == self.size,
        }
    }

    fn require_distributive(&self) -> Result<()> {
        if self.is_distributive() {
            Ok(())
        } else {
            Err(Error::NotDistributive)
        }
    }

    /// Whether every pair with `x∨y = 1` is split by disjoint `e, f` drawn from
    /// `candidates` with `x∨e = y∨f = 1`.
    fn splits_covers(&self, candidates: &[usize]) -> bool {
        let n = self.size;
        let top = self.top;
        let coverers = |x: usize| -> Vec<usize> {
            candidates
                .iter()
                .copied()
                .filter(|&e| self.join(x, e) == top)
                .collect()
        };
        let cover: Vec<Vec<usize>> = (0..n).map(coverers).collect();
        (0..n).all(|x| {
            (x..n).all(|y| {
                self.join(x, y) != top
                    || cover[x]
                        .iter()
                        .any(|&e| cover[y].iter().any(|&f| self.meet(e, f) == self.bottom))
            })
        })
    }

    /// Normal: every `x∨y = 1` admits `e∧f = 0` with `x∨e = y∨f = 1`.
    pub fn is_normal(&self) -> bool {
        let all: Vec<usize> = (0..self.size).collect();
        self.splits_covers(&all)
    }

    /// Same as [`is_normal`](Self::is_normal) with `e, f` Boolean.
    pub fn is_b_normal(&self) -> bool {
        self.splits_covers(&self.boolean_center().elements)
    }

    pub fn normality_profile(&self) -> Result<NormalityProfile> {
        self.require_distributive()?;
        let dual = self.dual();
        Ok(NormalityProfile {
            normal: self.is_normal(),
            b_normal: self.is_b_normal(),
            conormal: dual.is_normal(),
            b_conormal: dual.is_b_normal(),
        })
    }

    /// `x∨y = 1` forces `x = 1` or `y = 1`.
    pub fn id_local(&self) -> Result<bool> {
        self.require_distributive()?;
        let n = self.size;
        Ok((0..n).all(|x| {
            (0..n).all(|y| self.join(x, y) != self.top || x == self.top || y == self.top)
        }))
    }

    /// `{a | a∨x = 1 ⇒ x = 1 for all x}`.
    pub fn rad_id(&self) -> Result<Vec<usize>> {
        self.require_distributive()?;
        let n = self.size;
        Ok((0..n)
            .filter(|&a| (0..n).all(|x| self.join(a, x) != self.top || x == self.top))
            .collect())
    }

    /// Intersection of the maximal ideals (the one-element lattice has none,
    /// and the empty intersection is the whole carrier).
    pub fn maximal_ideal_intersection(&self) -> Vec<usize> {
        let maximal = self.maximal_ideals();
        (0..self.size)
            .filter(|x| maximal.iter().all(|i| i.contains(x)))
            .collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&y| self.leq(y, x)).collect()
    }

    /// All lattice filters; in a finite lattice each is `↑x` for its meet `x`.
    pub fn filters(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.size).map(|x| self.up_set(x)).collect();
        out.sort();
        out
    }

    pub fn ideals(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.size).map(|x| self.down_set(x)).collect();
        out.sort();
        out
    }

    pub fn is_filter(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.iter().all(|&a| {
                (0..self.size).all(|y| !self.leq(a, y) || set.contains(&y))
                    && set.iter().all(|&b| set.contains(&self.meet(a, b)))
            })
    }

    pub fn is_ideal(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.iter().all(|&a| {
                (0..self.size).all(|y| !self.leq(y, a) || set.contains(&y))
                    && set.iter().all(|&b| set.contains(&self.join(a, b)))
            })
    }

    fn complement_set(&self, set: &[usize]) -> Vec<usize> {
        (0..self.size).filter(|x| !set.contains(x)).collect()
    }

    /// Proper filters whose complement is an ideal.
    pub fn prime_filters(&self) -> Vec<Vec<usize>> {
        self.filters()
            .into_iter()
            .filter(|f| f.len() < self.size && self.is_ideal(&self.complement_set(f)))
            .collect()
    }

    pub fn prime_ideals(&self) -> Vec<Vec<usize>> {
        self.ideals()
            .into_iter()
            .filter(|i| i.len() < self.size && self.is_filter(&self.complement_set(i)))
            .collect()
    }

    pub fn maximal_filters(&self) -> Vec<Vec<usize>> {
        maximal_proper(self.filters(), self.size)
    }

    pub fn maximal_ideals(&self) -> Vec<Vec<usize>> {
        maximal_proper(self.ideals(), self.size)
    }

    pub fn dual(&self) -> FiniteLattice {
        let n = self.size;
        let leq = (0..n * n).map(|i| self.leq[(i % n) * n + i / n]).collect();
        FiniteLattice {
            name: format!("{}^op", self.name),
            size: n,
            leq,
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
            labels: self.labels.clone(),
        }
    }

    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq(a, b)
            && (0..self.size).all(|c| c == a || c == b || !(self.leq(a, c) && self.leq(c, b)))
    }

    /// Covering pairs `(lower, upper)` in index order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.size;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&y| self.leq(y, x)).count());
        let mut height = vec![0; n];
        for &x in &order {
            for &y in &order {
                if self.covers(y, x) {
                    height[x] = height[x].max(height[y] + 1);
                }
            }
        }
        height
    }

    /// Sublattice on a subset closed under the operations of the parent.
    pub fn sublattice(&self, name: impl Into<String>, members: &[usize]) -> Result<FiniteLattice> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let pos = |x: usize| members.binary_search(&x);
        let m = members.len();
        if m == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut join = Vec::with_capacity(m * m);
        let mut meet = Vec::with_capacity(m * m);
        let mut leq = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                let j = pos(self.join(a, b))
                    .map_err(|_| Error::NotALattice("subset is not closed under join".into()))?;
                let mt = pos(self.meet(a, b))
                    .map_err(|_| Error::NotALattice("subset is not closed under meet".into()))?;
                join.push(j);
                meet.push(mt);
                leq.push(self.leq(a, b));
            }
        }
        let labels = Some(members.iter().map(|&x| self.label(x)).collect());
        Ok(FiniteLattice::from_parts(name.into(), m, leq, join, meet, labels))
    }

    /// The principal filter `[x)` with the induced order.
    pub fn interval_above(&self, x: usize) -> Result<Interval> {
        if x >= self.size {
            return Err(Error::ElementOutOfRange {
                element: x,
                size: self.size,
            });
        }
        let members = self.up_set(x);
        let lattice = self.sublattice(format!("[{})", self.label(x)), &members)?;
        Ok(Interval { lattice, members })
    }

    /// `x ≡_F y` iff `x∧a = y∧a` for some `a ∈ F`.
    pub fn filter_congruence(&self, filter: &[usize]) -> Congruence {
        let n = self.size;
        let a = self.meet_all(filter.iter().copied());
        let labels: Vec<usize> = (0..n).map(|x| self.meet(x, a)).collect();
        debug_assert!(self.is_filter(filter));
        Congruence::from_labels(&labels)
    }

    /// `x ≈_I y` iff `x∨a = y∨a` for some `a ∈ I`.
    pub fn ideal_congruence(&self, ideal: &[usize]) -> Congruence {
        let n = self.size;
        let a = self.join_all(ideal.iter().copied());
        let labels: Vec<usize> = (0..n).map(|x| self.join(x, a)).collect();
        Congruence::from_labels(&labels)
    }

    /// Whether `B(L) → B(L/θ)` is surjective.
    pub fn congruence_has_blp(&self, theta: &Congruence) -> Result<bool> {
        let q = quotient(&self.to_algebra(), theta)?;
        let target = FiniteLattice::from_algebra(&q.target)?;
        let image: Vec<usize> = self
            .boolean_center()
            .elements
            .iter()
            .map(|&e| q.project(e))
            .collect();
        Ok(target
            .boolean_center()
            .elements
            .iter()
            .all(|b| image.contains(b)))
    }

    /// Every filter congruence has the Boolean lifting property.
    pub fn has_filt_blp(&self) -> Result<bool> {
        for f in self.filters() {
            if !self.congruence_has_blp(&self.filter_congruence(&f))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn has_id_blp(&self) -> Result<bool> {
        for i in self.ideals() {
            if !self.congruence_has_blp(&self.ideal_congruence(&i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Graphviz rendering of the Hasse diagram, ranked by height.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=plaintext];");
        let heights = self.heights();
        for x in 0..self.size {
            let _ = writeln!(out, "  n{x} [label=\"{}\"];", self.label(x).replace('"', "'"));
        }
        let max_h = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=max_h {
            let same: Vec<String> = (0..self.size)
                .filter(|&x| heights[x] == h)
                .map(|x| format!("n{x}"))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", same.join("; "));
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
        }
        out.push_str("}\n");
        out
    }
}

fn maximal_proper(sets: Vec<Vec<usize>>, n: usize) -> Vec<Vec<usize>> {
    let proper: Vec<Vec<usize>> = sets.into_iter().filter(|s| s.len() < n).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x)))
        })
        .cloned()
        .collect()
}

fn check_labels(n: usize, labels: Option<&[String]>) -> Result<()> {
    if let Some(l) = labels {
        if l.len() != n {
            return Err(Error::BadLabels(format!("{} labels for {} elements", l.len(), n)));
        }
    }
    Ok(())
}

/// The `n`-element chain `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FiniteLattice {
    let leq = (0..n * n).map(|i| i / n <= i % n).collect();
    FiniteLattice::from_leq(format!("C{n}"), n, leq, None).expect("chains are lattices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(s: &str) -> Option<Vec<String>> {
        Some(s.split_whitespace().map(String::from).collect())
    }

    fn diamond() -> FiniteLattice {
        FiniteLattice::from_covers(
            "D",
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            labels("0 a b c 1"),
        )
        .unwrap()
    }

    fn square() -> FiniteLattice {
        FiniteLattice::from_covers("L2^2", 4, &[(0, 1), (0, 2), (1, 3), (2, 3)], labels("0 a b 1"))
            .unwrap()
    }

    #[test]
    fn diamond_is_modular_not_distributive() {
        let p = diamond().profile();
        assert!(!p.is_distributive);
        assert!(p.is_modular);
        assert!(!p.is_boolean);
        assert!(diamond().normality_profile().is_err());
    }

    #[test]
    fn diamond_hasse_edges() {
        assert_eq!(
            diamond().hasse_edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn diamond_complements_are_not_unique() {
        let b = diamond().boolean_center();
        assert_eq!(b.elements, vec![0, 1, 2, 3, 4]);
        assert!(b.non_unique);
        assert_eq!(b.complement[&1], 2);
        assert_eq!(b.all_complements[&1], vec![2, 3]);
    }

    #[test]
    fn square_is_boolean_and_fully_normal() {
        let sq = square();
        assert!(sq.profile().is_boolean);
        let n = sq.normality_profile().unwrap();
        assert!(n.normal && n.b_normal && n.conormal && n.b_conormal);
        assert!(!sq.id_local().unwrap());
        assert_eq!(sq.rad_id().unwrap(), vec![0]);
        assert_eq!(sq.maximal_ideal_intersection(), vec![0]);
    }

    #[test]
    fn chain_is_local_with_trivial_center() {
        let c = chain(4);
        assert!(c.id_local().unwrap());
        assert_eq!(c.boolean_center().elements, vec![0, 3]);
        assert_eq!(c.rad_id().unwrap(), vec![0, 1, 2]);
        assert_eq!(c.maximal_ideal_intersection(), vec![0, 1, 2]);
    }

    #[test]
    fn filters_of_small_lattices() {
        assert_eq!(chain(2).maximal_filters(), vec![vec![1]]);
        assert_eq!(square().prime_filters(), vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(square().prime_ideals(), vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn dual_is_an_involution() {
        let d = diamond();
        let dd = d.dual().dual();
        assert_eq!(dd.leq, d.leq);
        assert_eq!(dd.join, d.join);
        assert_eq!(dd.bottom, d.bottom);
    }

    #[test]
    fn interval_above_atom() {
        let iv = square().interval_above(1).unwrap();
        assert_eq!(iv.members, vec![1, 3]);
        assert_eq!(iv.lattice.size(), 2);
        assert_eq!(iv.lattice.bottom(), 0);
        assert_eq!(iv.local(3), Some(1));
    }

    #[test]
    fn rejects_non_lattice_orders() {
        // two incomparable maximal elements
        let err = FiniteLattice::from_covers("V", 3, &[(0, 1), (0, 2)], None).unwrap_err();
        assert!(matches!(err, Error::NotALattice(_)));
        let err = FiniteLattice::from_covers("cyc", 2, &[(0, 1), (1, 0)], None).unwrap_err();
        assert!(matches!(err, Error::NotALattice(_)));
    }

    #[test]
    fn algebra_round_trip() {
        let sq = square();
        let back = FiniteLattice::from_algebra(&sq.to_algebra()).unwrap();
        assert_eq!(back, sq);
    }

    #[test]
    fn dot_output_mentions_every_cover() {
        let dot = diamond().to_dot();
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("label=\"a\""));
    }
}
