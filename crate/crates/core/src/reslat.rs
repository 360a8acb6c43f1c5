//! Finite residuated lattices: validation, filters, lifting properties,
//! classification and the reticulation.
//!
//! A residuated lattice is a [`FiniteAlgebra`] with operations `join`,
//! `meet`, `prod`, `imp` (binary) and constants `zero`, `one`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::algebra::{quotient, FiniteAlgebra, QuotientMap};
use crate::cblp::has_cblp;
use crate::con::con;
use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

pub const SIGNATURE: [(&str, usize); 6] = [
    ("join", 2),
    ("meet", 2),
    ("prod", 2),
    ("imp", 2),
    ("zero", 0),
    ("one", 0),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduatedLattice {
    algebra: FiniteAlgebra,
    lattice: FiniteLattice,
    prod: Vec<usize>,
    imp: Vec<usize>,
    zero: usize,
    one: usize,
}

fn table<'a>(alg: &'a FiniteAlgebra, name: &str, arity: usize) -> Result<&'a [usize]> {
    alg.op(name)
        .filter(|o| o.arity() == arity)
        .map(|o| o.table())
        .ok_or(Error::MissingOp {
            name: name.into(),
            arity,
        })
}

/// Checks the bounded lattice, commutative monoid and residuation axioms.
pub fn validate_residuated(alg: &FiniteAlgebra) -> Result<ResiduatedLattice> {
    let n = alg.size();
    for (name, arity) in SIGNATURE {
        table(alg, name, arity)?;
    }
    let reduct = FiniteAlgebra::new(
        alg.name(),
        n,
        vec![
            ("join".into(), 2, table(alg, "join", 2)?.to_vec()),
            ("meet".into(), 2, table(alg, "meet", 2)?.to_vec()),
        ],
        alg.element_names().map(|l| l.to_vec()),
    )?;
    let lattice = FiniteLattice::from_algebra(&reduct)?;
    let prod = table(alg, "prod", 2)?.to_vec();
    let imp = table(alg, "imp", 2)?.to_vec();
    let zero = table(alg, "zero", 0)?[0];
    let one = table(alg, "one", 0)?[0];
    if zero != lattice.bottom() {
        return Err(Error::AxiomViolation {
            axiom: "zero is the least element",
            witness: vec![zero],
        });
    }
    if one != lattice.top() {
        return Err(Error::AxiomViolation {
            axiom: "one is the greatest element",
            witness: vec![one],
        });
    }
    let p = |a: usize, b: usize| prod[a * n + b];
    for a in 0..n {
        if p(a, one) != a {
            return Err(Error::AxiomViolation {
                axiom: "one is the unit of prod",
                witness: vec![a],
            });
        }
        for b in 0..n {
            if p(a, b) != p(b, a) {
                return Err(Error::AxiomViolation {
                    axiom: "prod is commutative",
                    witness: vec![a, b],
                });
            }
            for c in 0..n {
                if p(p(a, b), c) != p(a, p(b, c)) {
                    return Err(Error::AxiomViolation {
                        axiom: "prod is associative",
                        witness: vec![a, b, c],
                    });
                }
                if lattice.leq(a, imp[b * n + c]) != lattice.leq(p(a, b), c) {
                    return Err(Error::AxiomViolation {
                        axiom: "residuation: a <= b->c iff a*b <= c",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(ResiduatedLattice {
        algebra: alg.clone(),
        lattice,
        prod,
        imp,
        zero,
        one,
    })
}

/// A filter: non-empty, upward closed and closed under `prod`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Filter {
    members: Vec<usize>,
}

impl Filter {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlpVerdict {
    pub filter: Filter,
    pub holds: bool,
    /// A Boolean element of `A/F` (as a block index) that is not `e/F` for Boolean `e`.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlpReport {
    pub holds: bool,
    pub per_filter: Vec<BlpVerdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_godel: bool,
    pub is_bl: bool,
    pub is_mv: bool,
    pub is_gelfand: bool,
    /// Normality of `Filt(A)`, the lattice-theoretic form of the Gelfand property.
    pub filt_normal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterCrosscheck {
    pub filter: Filter,
    pub blp: bool,
    pub cblp: bool,
}

/// The eight equivalent forms of the Boolean lifting property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlpEquivalents {
    pub cblp: bool,
    pub blp: bool,
    pub con_b_normal: bool,
    pub filt_b_normal: bool,
    pub pfilt_b_normal: bool,
    pub reticulation_b_conormal: bool,
    pub reticulation_filt_blp: bool,
    pub pfilt_id_blp: bool,
}

impl BlpEquivalents {
    pub fn agree(&self) -> bool {
        let all = [
            self.cblp,
            self.blp,
            self.con_b_normal,
            self.filt_b_normal,
            self.pfilt_b_normal,
            self.reticulation_b_conormal,
            self.reticulation_filt_blp,
            self.pfilt_id_blp,
        ];
        all.iter().all(|&b| b == all[0])
    }
}

impl ResiduatedLattice {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    pub fn label(&self, x: usize) -> String {
        self.algebra.label(x)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn prod(&self, a: usize, b: usize) -> usize {
        self.prod[a * self.size() + b]
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.size() + b]
    }

    /// `a ↔ b = (a→b) ∧ (b→a)`.
    pub fn equiv(&self, a: usize, b: usize) -> usize {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    /// `¬a = a → 0`.
    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.zero)
    }

    /// `aⁿ` for `n ≥ 1`; `a⁰ = 1`.
    pub fn power(&self, a: usize, n: usize) -> usize {
        (0..n).fold(self.one, |acc, _| self.prod(acc, a))
    }

    fn up_close(&self, seeds: impl IntoIterator<Item = usize>) -> Filter {
        let n = self.size();
        let mut set = BTreeSet::new();
        for s in seeds {
            for y in 0..n {
                if self.leq(s, y) {
                    set.insert(y);
                }
            }
        }
        Filter {
            members: set.into_iter().collect(),
        }
    }

    pub fn is_filter(&self, set: &[usize]) -> bool {
        let n = self.size();
        !set.is_empty()
            && set.iter().all(|&a| {
                (0..n).all(|y| !self.leq(a, y) || set.contains(&y))
                    && set.iter().all(|&b| set.contains(&self.prod(a, b)))
            })
    }

    pub fn filter(&self, members: &[usize]) -> Result<Filter> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= self.size()) || !self.is_filter(&members) {
            return Err(Error::NotAFilter(format!("{members:?}")));
        }
        Ok(Filter { members })
    }

    /// `[X)`: elements above some finite product of members of `X`.
    pub fn filter_generated(&self, xs: &[usize]) -> Filter {
        let mut products: BTreeSet<usize> = BTreeSet::new();
        products.insert(self.one);
        let mut frontier = vec![self.one];
        while let Some(p) = frontier.pop() {
            for &x in xs {
                let q = self.prod(p, x);
                if products.insert(q) {
                    frontier.push(q);
                }
            }
        }
        self.up_close(products)
    }

    /// `[x) = {a | xⁿ ≤ a for some n ≥ 1}`.
    pub fn principal_filter(&self, x: usize) -> Filter {
        let mut powers = vec![x];
        loop {
            let next = self.prod(*powers.last().expect("non-empty"), x);
            if powers.contains(&next) {
                break;
            }
            powers.push(next);
        }
        self.up_close(powers)
    }

    /// Every filter, ordered by size and then by members.
    pub fn filters(&self) -> Vec<Filter> {
        let start = self.filter_generated(&[]);
        let mut seen: BTreeSet<Filter> = BTreeSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        while let Some(f) = frontier.pop() {
            for x in 0..self.size() {
                if f.contains(x) {
                    continue;
                }
                let mut gens = f.members.clone();
                gens.push(x);
                let g = self.filter_generated(&gens);
                if seen.insert(g.clone()) {
                    frontier.push(g);
                }
            }
        }
        let mut out: Vec<Filter> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    /// Product of all members; it generates the filter.
    pub fn generator(&self, f: &Filter) -> usize {
        f.members.iter().fold(self.one, |acc, &x| self.prod(acc, x))
    }

    pub fn filter_label(&self, f: &Filter) -> String {
        format!("[{})", self.label(self.generator(f)))
    }

    fn filters_lattice(&self, name: String, filters: &[Filter]) -> Result<FiniteLattice> {
        let m = filters.len();
        let leq = (0..m * m)
            .map(|i| filters[i / m].is_subset(&filters[i % m]))
            .collect();
        let labels = filters.iter().map(|f| self.filter_label(f)).collect();
        FiniteLattice::from_leq(name, m, leq, Some(labels))
    }

    /// `Filt(A)` ordered by inclusion, indexed like [`filters`](Self::filters).
    pub fn filt_lattice(&self) -> Result<FiniteLattice> {
        self.filters_lattice(format!("Filt({})", self.algebra.name()), &self.filters())
    }

    pub fn principal_filters(&self) -> Vec<Filter> {
        let set: BTreeSet<Filter> = (0..self.size()).map(|x| self.principal_filter(x)).collect();
        let mut out: Vec<Filter> = set.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    /// `PFilt(A)`, indexed like [`principal_filters`](Self::principal_filters).
    pub fn pfilt_lattice(&self) -> Result<FiniteLattice> {
        self.filters_lattice(
            format!("PFilt({})", self.algebra.name()),
            &self.principal_filters(),
        )
    }

    /// The reticulation, presented as the dual of `PFilt(A)`.
    pub fn reticulation(&self) -> Result<FiniteLattice> {
        Ok(self
            .pfilt_lattice()?
            .dual()
            .with_name(format!("L({})", self.algebra.name())))
    }

    /// `x ∼_F y` iff `x ↔ y ∈ F`.
    pub fn cong_of_filter(&self, f: &Filter) -> Result<Congruence> {
        if !self.is_filter(&f.members) {
            return Err(Error::NotAFilter(format!("{:?}", f.members)));
        }
        let n = self.size();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if f.contains(self.equiv(x, y)) {
                    uf.union(x, y);
                }
            }
        }
        let theta = uf.into_congruence();
        debug_assert!((0..n).all(|x| (0..n).all(|y| theta.related(x, y) == f.contains(self.equiv(x, y)))));
        Ok(theta)
    }

    /// `A/F` as a residuated lattice, with the projection.
    pub fn quotient_by_filter(&self, f: &Filter) -> Result<(ResiduatedLattice, QuotientMap)> {
        let theta = self.cong_of_filter(f)?;
        let q = quotient(&self.algebra, &theta)?;
        let rl = validate_residuated(&q.target)?;
        Ok((rl, q))
    }

    pub fn boolean_center(&self) -> Vec<usize> {
        self.lattice.boolean_center().elements
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.prod(a, a) == a).collect()
    }

    pub fn regular_elements(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.neg(self.neg(a)) == a).collect()
    }

    fn image_under(q: &QuotientMap, xs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = xs.iter().map(|&x| q.project(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn has_blp(&self, f: &Filter) -> Result<BlpVerdict> {
        let (target, q) = self.quotient_by_filter(f)?;
        let image = Self::image_under(&q, &self.boolean_center());
        let witness = target
            .boolean_center()
            .into_iter()
            .find(|b| image.binary_search(b).is_err());
        Ok(BlpVerdict {
            filter: f.clone(),
            holds: witness.is_none(),
            witness,
        })
    }

    pub fn algebra_has_blp(&self) -> Result<BlpReport> {
        let per_filter = self
            .filters()
            .iter()
            .map(|f| self.has_blp(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(BlpReport {
            holds: per_filter.iter().all(|v| v.holds),
            per_filter,
        })
    }

    /// `I(A/F) = I(A)/F`.
    pub fn has_ilp(&self, f: &Filter) -> Result<bool> {
        let (target, q) = self.quotient_by_filter(f)?;
        Ok(target.idempotents() == Self::image_under(&q, &self.idempotents()))
    }

    /// `Reg(A/F) = Reg(A)/F`.
    pub fn regular_elements_lift(&self, f: &Filter) -> Result<bool> {
        let (target, q) = self.quotient_by_filter(f)?;
        Ok(target.regular_elements() == Self::image_under(&q, &self.regular_elements()))
    }

    /// Proper filters `F` with `a ∨ b ∈ F ⇒ a ∈ F or b ∈ F`.
    pub fn prime_filters(&self) -> Vec<Filter> {
        let n = self.size();
        self.filters()
            .into_iter()
            .filter(|f| {
                f.len() < n
                    && (0..n).all(|a| {
                        (0..n).all(|b| !f.contains(self.join(a, b)) || f.contains(a) || f.contains(b))
                    })
            })
            .collect()
    }

    pub fn maximal_filters(&self) -> Vec<Filter> {
        let n = self.size();
        let proper: Vec<Filter> = self.filters().into_iter().filter(|f| f.len() < n).collect();
        proper
            .iter()
            .filter(|f| !proper.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
            .cloned()
            .collect()
    }

    /// Every prime filter lies in exactly one maximal filter.
    pub fn is_gelfand(&self) -> bool {
        let maximal = self.maximal_filters();
        self.prime_filters()
            .iter()
            .all(|p| maximal.iter().filter(|m| p.is_subset(m)).count() == 1)
    }

    pub fn is_godel(&self) -> bool {
        self.prod == *self.lattice_meet_table()
    }

    fn lattice_meet_table(&self) -> Vec<usize> {
        let n = self.size();
        (0..n * n).map(|i| self.meet(i / n, i % n)).collect()
    }

    /// Prelinearity and divisibility.
    pub fn is_bl(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.join(self.imp(a, b), self.imp(b, a)) == self.one
                    && self.prod(a, self.imp(a, b)) == self.meet(a, b)
            })
        })
    }

    pub fn is_mv(&self) -> bool {
        self.is_bl() && self.regular_elements().len() == self.size()
    }

    pub fn classify(&self) -> Result<Classification> {
        Ok(Classification {
            is_godel: self.is_godel(),
            is_bl: self.is_bl(),
            is_mv: self.is_mv(),
            is_gelfand: self.is_gelfand(),
            filt_normal: self.filt_lattice()?.is_normal(),
        })
    }

    /// Whether `B(Filt(A)) = {[e) | e ∈ B(A)}`.
    pub fn boolean_filters_are_principal(&self) -> Result<bool> {
        let filters = self.filters();
        let filt = self.filt_lattice()?;
        let mut from_lattice: Vec<Filter> = filt
            .boolean_center()
            .elements
            .iter()
            .map(|&i| filters[i].clone())
            .collect();
        let mut from_center: Vec<Filter> = self
            .boolean_center()
            .iter()
            .map(|&e| self.principal_filter(e))
            .collect();
        from_lattice.sort();
        from_center.sort();
        from_center.dedup();
        Ok(from_lattice == from_center)
    }

    /// Compares the BLP of every filter with the CBLP of its congruence, and
    /// checks that `F ↦ ∼_F` is a bounded lattice isomorphism `Filt(A) → Con(A)`.
    pub fn blp_cblp_crosscheck(&self) -> Result<Vec<FilterCrosscheck>> {
        let c = con(&self.algebra);
        let filters = self.filters();
        let mut image: HashMap<usize, usize> = HashMap::new();
        let mut out = Vec::with_capacity(filters.len());
        let mut indices = Vec::with_capacity(filters.len());
        for (i, f) in filters.iter().enumerate() {
            let theta = self.cong_of_filter(f)?;
            let idx = c.index_of(&theta).ok_or_else(|| {
                Error::Inconsistent(format!("∼_F for {} is not a congruence", self.filter_label(f)))
            })?;
            if let Some(prev) = image.insert(idx, i) {
                return Err(Error::Inconsistent(format!(
                    "filters {} and {} give the same congruence",
                    self.filter_label(&filters[prev]),
                    self.filter_label(f)
                )));
            }
            indices.push(idx);
            let blp = self.has_blp(f)?.holds;
            let cblp = has_cblp(&c, idx).holds;
            if blp != cblp {
                return Err(Error::Inconsistent(format!(
                    "filter {} has BLP {blp} but its congruence has CBLP {cblp}",
                    self.filter_label(f)
                )));
            }
            out.push(FilterCrosscheck {
                filter: f.clone(),
                blp,
                cblp,
            });
        }
        if image.len() != c.len() {
            return Err(Error::Inconsistent("F ↦ ∼_F is not surjective".into()));
        }
        for (i, f) in filters.iter().enumerate() {
            for (j, g) in filters.iter().enumerate() {
                if f.is_subset(g) != c.leq(indices[i], indices[j]) {
                    return Err(Error::Inconsistent("F ↦ ∼_F is not an order isomorphism".into()));
                }
            }
        }
        Ok(out)
    }

    pub fn blp_equivalents(&self) -> Result<BlpEquivalents> {
        let c = con(&self.algebra);
        let pfilt = self.pfilt_lattice()?;
        let reticulation = self.reticulation()?;
        Ok(BlpEquivalents {
            cblp: crate::cblp::algebra_has_cblp(&c).holds,
            blp: self.algebra_has_blp()?.holds,
            con_b_normal: c.lattice().is_b_normal(),
            filt_b_normal: self.filt_lattice()?.is_b_normal(),
            pfilt_b_normal: pfilt.is_b_normal(),
            reticulation_b_conormal: reticulation.dual().is_b_normal(),
            reticulation_filt_blp: reticulation.has_filt_blp()?,
            pfilt_id_blp: pfilt.has_id_blp()?,
        })
    }
}
