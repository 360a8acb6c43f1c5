//! Spectra, the Boolean lifting property for congruences, property (⋆) and
//! the decomposition of semilocal algebras into local factors.
//!
//! Congruences are referred to by their index in a [`CongruenceLattice`].

use serde::Serialize;

use crate::algebra::{product, quotient, FiniteAlgebra, ProductCodec, QuotientMap};
use crate::con::{con, CongruenceLattice};
use crate::error::{Error, Result};
use crate::iso::is_isomorphism;

/// Prime and maximal congruences and the radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectra {
    pub spec: Vec<usize>,
    pub max: Vec<usize>,
    /// Meet of `max`; `∇` when there are no maximal congruences.
    pub rad: usize,
}

pub fn is_prime(c: &CongruenceLattice, p: usize) -> bool {
    let m = c.len();
    p != c.top()
        && (0..m).all(|a| {
            (a..m).all(|b| !c.leq(c.meet(a, b), p) || c.leq(a, p) || c.leq(b, p))
        })
}

pub fn spectra(c: &CongruenceLattice) -> Spectra {
    let m = c.len();
    let top = c.top();
    let spec: Vec<usize> = (0..m).filter(|&p| is_prime(c, p)).collect();
    let max: Vec<usize> = (0..m)
        .filter(|&x| x != top && (0..m).all(|y| y == x || y == top || !c.leq(x, y)))
        .collect();
    let rad = max.iter().fold(top, |acc, &x| c.meet(acc, x));
    Spectra { spec, max, rad }
}

/// Boolean congruences of `A`, i.e. `B(Con(A))`.
pub fn boolean_congruences(c: &CongruenceLattice) -> Vec<usize> {
    c.lattice().boolean_center().elements
}

/// Complemented elements of the interval `[θ)`.
pub fn boolean_above(c: &CongruenceLattice, theta: usize) -> Vec<usize> {
    let m = c.len();
    let above: Vec<usize> = (0..m).filter(|&x| c.leq(theta, x)).collect();
    above
        .iter()
        .copied()
        .filter(|&x| {
            above
                .iter()
                .any(|&y| c.join(x, y) == c.top() && c.meet(x, y) == theta)
        })
        .collect()
}

/// Image of `B(Con(A))` under `v_θ: α ↦ α ∨ θ`, sorted and deduplicated.
pub fn v_image(c: &CongruenceLattice, theta: usize) -> Vec<usize> {
    let mut image: Vec<usize> = boolean_congruences(c)
        .into_iter()
        .map(|b| c.join(b, theta))
        .collect();
    image.sort_unstable();
    image.dedup();
    image
}

/// `B(u_θ)` computed in `Con(A/θ)`: the quotient, its congruence lattice and
/// the indices of `(β ∨ θ)/θ` for Boolean `β`.
pub struct QuotientImage {
    pub quotient: QuotientMap,
    pub con: CongruenceLattice,
    pub image: Vec<usize>,
}

pub fn u_image(c: &CongruenceLattice, theta: usize) -> Result<QuotientImage> {
    let t = c.get(theta);
    let q = quotient(c.algebra(), t)?;
    let qc = con(&q.target);
    let mut image = Vec::new();
    for b in boolean_congruences(c) {
        let lifted = c.get(c.join(b, theta)).modulo(t)?;
        let idx = qc
            .index_of(&lifted)
            .ok_or_else(|| Error::Inconsistent("image of u_θ is not a congruence of A/θ".into()))?;
        image.push(idx);
    }
    image.sort_unstable();
    image.dedup();
    Ok(QuotientImage {
        quotient: q,
        con: qc,
        image,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CblpVerdict {
    pub theta: usize,
    pub holds: bool,
    /// `B([θ))`.
    pub boolean_above: Vec<usize>,
    /// `{β ∨ θ : β ∈ B(Con(A))}`.
    pub image: Vec<usize>,
    /// An element of `B([θ))` outside the image.
    pub witness: Option<usize>,
}

pub fn has_cblp(c: &CongruenceLattice, theta: usize) -> CblpVerdict {
    let boolean_above = boolean_above(c, theta);
    let image = v_image(c, theta);
    let witness = boolean_above
        .iter()
        .copied()
        .find(|x| image.binary_search(x).is_err());
    debug_assert!(image.iter().all(|x| boolean_above.contains(x)));
    CblpVerdict {
        theta,
        holds: witness.is_none(),
        boolean_above,
        image,
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CblpReport {
    pub holds: bool,
    pub per_congruence: Vec<CblpVerdict>,
}

impl CblpReport {
    pub fn failures(&self) -> impl Iterator<Item = &CblpVerdict> {
        self.per_congruence.iter().filter(|v| !v.holds)
    }
}

pub fn algebra_has_cblp(c: &CongruenceLattice) -> CblpReport {
    let per_congruence: Vec<CblpVerdict> = (0..c.len()).map(|t| has_cblp(c, t)).collect();
    CblpReport {
        holds: per_congruence.iter().all(|v| v.holds),
        per_congruence,
    }
}

/// Whether every `n`-tuple (multiset) from `pool` with join `∇` admits Boolean
/// `α_i` with `∩α_i = Δ` and `φ_i ∨ α_i = ∇`, for all `n ≤ max_n`.
fn nary_splitting_over(c: &CongruenceLattice, pool: &[usize], max_n: usize) -> bool {
    let top = c.top();
    let boolean = boolean_congruences(c);
    // Only minimal candidates matter since meets shrink as candidates shrink.
    let minimal_candidates: Vec<Vec<usize>> = (0..c.len())
        .map(|phi| {
            let cands: Vec<usize> = boolean
                .iter()
                .copied()
                .filter(|&a| c.join(phi, a) == top)
                .collect();
            cands
                .iter()
                .copied()
                .filter(|&a| !cands.iter().any(|&b| b != a && c.leq(b, a)))
                .collect()
        })
        .collect();

    fn choose(
        c: &CongruenceLattice,
        cands: &[&Vec<usize>],
        acc: usize,
    ) -> bool {
        match cands.split_first() {
            None => acc == c.bottom(),
            Some((first, rest)) => first.iter().any(|&a| choose(c, rest, c.meet(acc, a))),
        }
    }

    fn tuples(
        c: &CongruenceLattice,
        pool: &[usize],
        start: usize,
        n: usize,
        tuple: &mut Vec<usize>,
        join: usize,
        mins: &[Vec<usize>],
    ) -> bool {
        if tuple.len() == n {
            if join != c.top() {
                return true;
            }
            let cands: Vec<&Vec<usize>> = tuple.iter().map(|&phi| &mins[phi]).collect();
            return choose(c, &cands, c.top());
        }
        for i in start..pool.len() {
            tuple.push(pool[i]);
            let ok = tuples(c, pool, i, n, tuple, c.join(join, pool[i]), mins);
            tuple.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    (1..=max_n).all(|n| tuples(c, pool, 0, n, &mut Vec::new(), c.bottom(), &minimal_candidates))
}

/// Binary splitting over `pool`.
fn pair_splitting_over(c: &CongruenceLattice, pool: &[usize]) -> bool {
    let top = c.top();
    let boolean = boolean_congruences(c);
    pool.iter().all(|&phi| {
        pool.iter().all(|&psi| {
            c.join(phi, psi) != top
                || boolean.iter().any(|&a| {
                    c.join(phi, a) == top
                        && boolean
                            .iter()
                            .any(|&b| c.meet(a, b) == c.bottom() && c.join(psi, b) == top)
                })
        })
    })
}

/// The Zariski-style topology on `Spec(A)` with opens `D(θ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecTopology {
    /// Prime congruences, as congruence indices.
    pub points: Vec<usize>,
    /// `V(θ)` for every congruence `θ`, as sets of point positions.
    pub closed: Vec<Vec<usize>>,
    /// The distinct open sets `D(θ)`, sorted.
    pub opens: Vec<Vec<usize>>,
    /// Open sets whose complement is also open.
    pub clopens: Vec<Vec<usize>>,
}

impl SpecTopology {
    fn complement(&self, set: &[usize]) -> Vec<usize> {
        (0..self.points.len()).filter(|p| !set.contains(p)).collect()
    }

    pub fn open_set(&self, theta: usize) -> Vec<usize> {
        self.complement(&self.closed[theta])
    }

    /// Whether the open sets are closed under union and intersection.
    pub fn is_topology(&self) -> bool {
        let all: Vec<usize> = (0..self.points.len()).collect();
        self.opens.contains(&Vec::new())
            && self.opens.contains(&all)
            && self.opens.iter().all(|u| {
                self.opens.iter().all(|v| {
                    let union: Vec<usize> =
                        all.iter().copied().filter(|p| u.contains(p) || v.contains(p)).collect();
                    let inter: Vec<usize> =
                        u.iter().copied().filter(|p| v.contains(p)).collect();
                    self.opens.contains(&union) && self.opens.contains(&inter)
                })
            })
    }
}

pub fn spec_topology(c: &CongruenceLattice) -> SpecTopology {
    let points = spectra(c).spec;
    let closed: Vec<Vec<usize>> = (0..c.len())
        .map(|t| {
            points
                .iter()
                .enumerate()
                .filter(|&(_, &p)| c.leq(t, p))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let k = points.len();
    let mut opens: Vec<Vec<usize>> = closed
        .iter()
        .map(|v| (0..k).filter(|p| !v.contains(p)).collect())
        .collect();
    opens.sort();
    opens.dedup();
    let clopens = opens
        .iter()
        .filter(|u| {
            let rest: Vec<usize> = (0..k).filter(|p| !u.contains(p)).collect();
            opens.contains(&rest)
        })
        .cloned()
        .collect();
    SpecTopology {
        points,
        closed,
        opens,
        clopens,
    }
}

/// Every open cover `U ∪ V` refines to a clopen partition `C ⊆ U`, `X∖C ⊆ V`.
pub fn is_strongly_zero_dimensional(t: &SpecTopology) -> bool {
    let k = t.points.len();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    t.opens.iter().all(|u| {
        t.opens.iter().all(|v| {
            let covers = (0..k).all(|p| u.contains(&p) || v.contains(&p));
            !covers
                || t.clopens
                    .iter()
                    .any(|cl| subset(cl, u) && subset(&t.complement(cl), v))
        })
    })
}

/// The six equivalent formulations of CBLP, each computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CblpEquivalents {
    pub cblp: bool,
    pub b_normal: bool,
    pub nary_splitting: bool,
    pub compact_pairs: bool,
    pub nary_compact: bool,
    pub strongly_zero_dimensional: bool,
}

impl CblpEquivalents {
    pub fn agree(&self) -> bool {
        let all = [
            self.cblp,
            self.b_normal,
            self.nary_splitting,
            self.compact_pairs,
            self.nary_compact,
            self.strongly_zero_dimensional,
        ];
        all.iter().all(|&b| b == all[0])
    }
}

pub fn cblp_equivalents_with(c: &CongruenceLattice, max_n: usize) -> CblpEquivalents {
    let all: Vec<usize> = (0..c.len()).collect();
    let compact = c.compact_elements();
    CblpEquivalents {
        cblp: algebra_has_cblp(c).holds,
        b_normal: c.lattice().is_b_normal(),
        nary_splitting: nary_splitting_over(c, &all, max_n),
        compact_pairs: pair_splitting_over(c, &compact),
        nary_compact: nary_splitting_over(c, &compact, max_n),
        strongly_zero_dimensional: is_strongly_zero_dimensional(&spec_topology(c)),
    }
}

pub fn cblp_equivalents(c: &CongruenceLattice) -> CblpEquivalents {
    cblp_equivalents_with(c, crate::Caps::default().nary_splitting)
}

/// Property (⋆): each `θ` is `α ∨ β` with `α` compact below `Rad(A)` and `β` Boolean.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub holds: bool,
    /// `(α, β)` for each congruence, or `None` where no decomposition exists.
    pub witnesses: Vec<Option<(usize, usize)>>,
}

pub fn satisfies_star(c: &CongruenceLattice) -> StarReport {
    let rad = spectra(c).rad;
    let small: Vec<usize> = c
        .compact_elements()
        .into_iter()
        .filter(|&a| c.leq(a, rad))
        .collect();
    let boolean = boolean_congruences(c);
    let witnesses: Vec<Option<(usize, usize)>> = (0..c.len())
        .map(|theta| {
            small.iter().find_map(|&a| {
                boolean
                    .iter()
                    .find(|&&b| c.join(a, b) == theta)
                    .map(|&b| (a, b))
            })
        })
        .collect();
    StarReport {
        holds: witnesses.iter().all(Option::is_some),
        witnesses,
    }
}

pub fn is_local(c: &CongruenceLattice) -> bool {
    spectra(c).max.len() == 1
}

/// Finitely many maximal congruences, which always holds for finite algebras.
pub fn is_semilocal(c: &CongruenceLattice) -> bool {
    spectra(c).max.len() < usize::MAX
}

/// `A ≅ A/α_1 × … × A/α_n` with every factor local.
#[derive(Clone, Debug)]
pub struct LocalDecomposition {
    /// The maximal congruences `φ_i`, one per factor.
    pub maximal: Vec<usize>,
    /// Boolean congruences with `α_i ∨ Rad(A) = φ_i`.
    pub alphas: Vec<usize>,
    pub factors: Vec<QuotientMap>,
    pub product: FiniteAlgebra,
    pub codec: ProductCodec,
    /// `x ↦ (x/α_1, …, x/α_n)` as product indices; verified to be an isomorphism.
    pub isomorphism: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum DecompositionOutcome {
    Decomposed(LocalDecomposition),
    /// CBLP fails at `theta`, with `witness ∈ B([θ))` not lifting.
    NoCblp { theta: usize, witness: usize },
}

/// Splits an algebra with CBLP along its Boolean congruences, following the
/// maximal congruences. The result is verified.
fn split_along_maxima(c: &CongruenceLattice) -> Result<DecompositionOutcome> {
    let alg = c.algebra();
    if alg.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let report = algebra_has_cblp(c);
    if let Some(f) = report.failures().next() {
        return Ok(DecompositionOutcome::NoCblp {
            theta: f.theta,
            witness: f.witness.expect("failing verdicts carry a witness"),
        });
    }
    let sp = spectra(c);
    let boolean = boolean_congruences(c);
    let mut alphas = Vec::with_capacity(sp.max.len());
    for &phi in &sp.max {
        let alpha = boolean
            .iter()
            .copied()
            .find(|&a| c.join(a, sp.rad) == phi)
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "no Boolean congruence lifts the maximal congruence {}",
                    c.render(phi)
                ))
            })?;
        alphas.push(alpha);
    }
    let meet = alphas.iter().fold(c.top(), |acc, &a| c.meet(acc, a));
    if meet != c.bottom() {
        return Err(Error::Inconsistent("the α_i do not intersect to Δ".into()));
    }
    for (i, &a) in alphas.iter().enumerate() {
        for &b in &alphas[i + 1..] {
            if c.join(a, b) != c.top() {
                return Err(Error::Inconsistent("two α_i do not join to ∇".into()));
            }
        }
    }
    let mut factors = Vec::with_capacity(alphas.len());
    for &a in &alphas {
        let q = quotient(alg, c.get(a))?;
        if !is_local(&con(&q.target)) {
            return Err(Error::Inconsistent(format!(
                "factor A/{} is not local",
                c.render(a)
            )));
        }
        factors.push(q);
    }
    let targets: Vec<FiniteAlgebra> = factors.iter().map(|q| q.target.clone()).collect();
    let (prod, codec) = product(&targets)?;
    let isomorphism: Vec<usize> = (0..alg.size())
        .map(|x| {
            let tuple: Vec<usize> = factors.iter().map(|q| q.project(x)).collect();
            codec.encode(&tuple)
        })
        .collect();
    if !is_isomorphism(alg, &prod, &isomorphism) {
        return Err(Error::Inconsistent(
            "the canonical map into the product of local factors is not an isomorphism".into(),
        ));
    }
    Ok(DecompositionOutcome::Decomposed(LocalDecomposition {
        maximal: sp.max,
        alphas,
        factors,
        product: prod,
        codec,
        isomorphism,
    }))
}

/// Decomposition of a nontrivial arithmetical algebra into local factors.
pub fn semilocal_decompose(c: &CongruenceLattice) -> Result<DecompositionOutcome> {
    if c.algebra().is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    if !c.is_arithmetical() {
        return Err(Error::NotArithmetical);
    }
    split_along_maxima(c)
}
