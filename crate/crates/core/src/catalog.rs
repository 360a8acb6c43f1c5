//! Named fixtures, ordinal sums and generators of small lattices and
//! residuated lattices.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::cblp::{algebra_has_cblp, boolean_congruences, is_local};
use crate::con::con;
use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::lattice::{chain, FiniteLattice};
use crate::reslat::validate_residuated;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureKind {
    Lattice,
    Residuated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FactValue {
    Count(usize),
    Flag(bool),
    /// Rendered partitions or filter labels, compared as sets.
    Set(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: &'static str,
    pub value: FactValue,
    /// Where the fact comes from, in words.
    pub anchor: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub key: String,
    pub kind: FixtureKind,
    pub description: String,
    pub algebra: FiniteAlgebra,
    pub expected: Vec<Fact>,
}

impl Fixture {
    pub fn fact(&self, name: &str) -> Option<&FactValue> {
        self.expected.iter().find(|f| f.name == name).map(|f| &f.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactCheck {
    pub name: &'static str,
    pub expected: FactValue,
    pub actual: FactValue,
    pub ok: bool,
}

fn labels(s: &str) -> Option<Vec<String>> {
    Some(s.split_whitespace().map(String::from).collect())
}

fn set(items: &[&str]) -> FactValue {
    FactValue::Set(items.iter().map(|s| s.to_string()).collect())
}

fn fact(name: &'static str, value: FactValue, anchor: &'static str) -> Fact {
    Fact {
        name,
        value,
        anchor,
    }
}

pub fn diamond() -> FiniteLattice {
    FiniteLattice::from_covers(
        "diamond",
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        labels("0 a b c 1"),
    )
    .expect("diamond")
}

/// `0 < x < 1` and `0 < y < z < 1`.
pub fn pentagon() -> FiniteLattice {
    FiniteLattice::from_covers(
        "pentagon",
        5,
        &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)],
        labels("0 x y z 1"),
    )
    .expect("pentagon")
}

/// `0 < b < d < 1` and `0 < a, c < 1`.
pub fn lattice_e() -> FiniteLattice {
    FiniteLattice::from_covers(
        "E",
        6,
        &[(0, 1), (0, 2), (0, 3), (2, 4), (1, 5), (3, 5), (4, 5)],
        labels("0 a b c d 1"),
    )
    .expect("E")
}

/// The pentagon with a new top above its old top `u`.
pub fn lattice_z() -> FiniteLattice {
    let sum = ordinal_sum(&pentagon(), &chain(2)).expect("ordinal sum");
    let l = sum.lattice;
    let n = l.size();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = l.leq(a, b);
        }
    }
    FiniteLattice::from_leq("Z", n, leq, labels("0 x y z u 1")).expect("Z")
}

/// Boolean lattice `2^k`; element `i` is the subset with bit mask `i`.
pub fn boolean_lattice(k: usize) -> FiniteLattice {
    let n = 1usize << k;
    let leq = (0..n * n).map(|i| (i / n) & !(i % n) == 0).collect();
    FiniteLattice::from_leq(format!("B{k}"), n, leq, None).expect("Boolean lattice")
}

fn residuated(
    name: &str,
    lattice: &FiniteLattice,
    prod: impl Fn(usize, usize) -> usize,
    imp: impl Fn(usize, usize) -> usize,
    names: Option<Vec<String>>,
) -> Result<FiniteAlgebra> {
    let n = lattice.size();
    let table = |f: &dyn Fn(usize, usize) -> usize| (0..n * n).map(|i| f(i / n, i % n)).collect();
    FiniteAlgebra::new(
        name,
        n,
        vec![
            ("join".into(), 2, table(&|a, b| lattice.join(a, b))),
            ("meet".into(), 2, table(&|a, b| lattice.meet(a, b))),
            ("prod".into(), 2, table(&prod)),
            ("imp".into(), 2, table(&imp)),
            ("zero".into(), 0, vec![lattice.bottom()]),
            ("one".into(), 0, vec![lattice.top()]),
        ],
        names,
    )
}

/// The five-element residuated lattice `0 < a, b < c < 1` with `prod = meet`.
pub fn residuated_a() -> FiniteAlgebra {
    let lattice = FiniteLattice::from_covers(
        "A",
        5,
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        labels("0 a b c 1"),
    )
    .expect("lattice of A");
    #[rustfmt::skip]
    let imp = [
        4, 4, 4, 4, 4,
        2, 4, 2, 4, 4,
        1, 1, 4, 4, 4,
        0, 1, 2, 4, 4,
        0, 1, 2, 3, 4,
    ];
    residuated(
        "A",
        &lattice,
        |a, b| lattice.meet(a, b),
        |a, b| imp[a * 5 + b],
        labels("0 a b c 1"),
    )
    .expect("A")
}

/// Gödel chain with `n` elements: `prod = min`.
pub fn godel_chain(n: usize) -> FiniteAlgebra {
    let c = chain(n);
    residuated(
        &format!("G{n}"),
        &c,
        |a, b| a.min(b),
        |a, b| if a <= b { n - 1 } else { b },
        None,
    )
    .expect("Gödel chain")
}

/// Łukasiewicz chain with `n` elements.
pub fn lukasiewicz_chain(n: usize) -> FiniteAlgebra {
    let c = chain(n);
    let top = n - 1;
    residuated(
        &format!("Luk{n}"),
        &c,
        |a, b| (a + b).saturating_sub(top),
        |a, b| top.min(top - a + b),
        None,
    )
    .expect("Łukasiewicz chain")
}

const FIXED_KEYS: [&str; 7] = [
    "diamond",
    "pentagon",
    "lattice_e",
    "lattice_z",
    "residuated_a",
    "l2",
    "l2sq_plus_l2",
];

/// Keys accepted by [`fixture`]; parametric families are listed with a
/// default parameter.
pub fn keys() -> Vec<String> {
    let mut out: Vec<String> = FIXED_KEYS.iter().map(|s| s.to_string()).collect();
    out.extend(
        ["chain_3", "boolean_2", "godel_3", "lukasiewicz_3"]
            .iter()
            .map(|s| s.to_string()),
    );
    out
}

fn parametric(key: &str, prefix: &str) -> Option<usize> {
    key.strip_prefix(prefix)?.parse().ok()
}

pub fn fixture(key: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownFixture(key.to_string());
    let lattice = |l: FiniteLattice, description: &str, expected: Vec<Fact>| Fixture {
        key: key.to_string(),
        kind: FixtureKind::Lattice,
        description: description.to_string(),
        algebra: l.to_algebra(),
        expected,
    };
    let out = match key {
        "diamond" => lattice(
            diamond(),
            "the diamond M3",
            vec![
                fact("congruence_count", FactValue::Count(2), "diamond example: Con has only Δ and ∇"),
                fact("cblp", FactValue::Flag(true), "diamond example: has CBLP"),
            ],
        ),
        "pentagon" => lattice(
            pentagon(),
            "the pentagon N5",
            vec![
                fact("congruence_count", FactValue::Count(5), "pentagon example: five congruences"),
                fact(
                    "congruences",
                    set(&[
                        "{0}{x}{y}{z}{1}",
                        "{0}{x}{y,z}{1}",
                        "{0,x}{y,z,1}",
                        "{0,y,z}{x,1}",
                        "{0,x,y,z,1}",
                    ]),
                    "pentagon example: Δ, γ, β, α, ∇",
                ),
                fact(
                    "boolean_congruences",
                    set(&["{0}{x}{y}{z}{1}", "{0,x,y,z,1}"]),
                    "pentagon example: only Δ and ∇ are complemented",
                ),
                fact("cblp", FactValue::Flag(false), "pentagon example: fails CBLP"),
                fact(
                    "cblp_failures",
                    set(&["{0}{x}{y,z}{1}"]),
                    "pentagon example: γ fails while α and β lift",
                ),
            ],
        ),
        "lattice_e" => lattice(
            lattice_e(),
            "six-element lattice whose quotient by ε is the diamond",
            vec![
                fact("congruence_count", FactValue::Count(3), "lattice E example: Δ, ε, ∇"),
                fact(
                    "congruences",
                    set(&["{0}{a}{b}{c}{d}{1}", "{0}{a}{b,d}{c}{1}", "{0,a,b,c,d,1}"]),
                    "lattice E example: ε merges b and d",
                ),
                fact("cblp", FactValue::Flag(true), "lattice E example: every congruence lifts"),
            ],
        ),
        "lattice_z" => lattice(
            lattice_z(),
            "ordinal sum of the pentagon and the two-element chain",
            vec![
                fact("congruence_count", FactValue::Count(10), "lattice Z example: ζ1..ζ8 plus Δ and ∇"),
                fact(
                    "congruences",
                    set(&[
                        "{0}{x}{y}{z}{u}{1}",
                        "{0,x,y,z,u}{1}",
                        "{0}{x}{y}{z}{u,1}",
                        "{0}{x}{y,z}{u}{1}",
                        "{0}{x}{y,z}{u,1}",
                        "{0,y,z}{x,u}{1}",
                        "{0,x}{y,z,u}{1}",
                        "{0,y,z}{x,u,1}",
                        "{0,x}{y,z,u,1}",
                        "{0,x,y,z,u,1}",
                    ]),
                    "lattice Z example: listing of Con(Z)",
                ),
                fact(
                    "boolean_congruences",
                    set(&[
                        "{0}{x}{y}{z}{u}{1}",
                        "{0,x,y,z,u}{1}",
                        "{0}{x}{y}{z}{u,1}",
                        "{0,x,y,z,u,1}",
                    ]),
                    "lattice Z example: Boolean center Δ, ζ1, ζ2, ∇",
                ),
                fact("cblp", FactValue::Flag(false), "lattice Z example: ζ4 fails CBLP"),
                fact(
                    "cblp_failures_include",
                    set(&["{0}{x}{y,z}{u,1}"]),
                    "lattice Z example: ζ4 fails CBLP",
                ),
            ],
        ),
        "l2" => lattice(
            chain(2).with_name("L2"),
            "the two-element chain",
            vec![
                fact("congruence_count", FactValue::Count(2), "two-element lattice is simple"),
                fact("cblp", FactValue::Flag(true), "distributive lattices have CBLP"),
                fact("local", FactValue::Flag(true), "unique maximal congruence Δ"),
            ],
        ),
        "l2sq_plus_l2" => lattice(
            ordinal_sum(&boolean_lattice(2), &chain(2))?
                .lattice
                .with_name("L2^2+L2"),
            "ordinal sum of the four-element Boolean lattice and the two-element chain",
            vec![fact("cblp", FactValue::Flag(true), "distributive lattices have CBLP")],
        ),
        "residuated_a" => Fixture {
            key: key.to_string(),
            kind: FixtureKind::Residuated,
            description: "five-element Gödel algebra 0 < a, b < c < 1 without BLP".to_string(),
            algebra: residuated_a(),
            expected: vec![
                fact("validates", FactValue::Flag(true), "residuated example: valid residuated lattice"),
                fact("filter_count", FactValue::Count(5), "residuated example: {1}, [c), [a), [b), A"),
                fact("blp_failures", set(&["[c)"]), "residuated example: the filter [c) does not lift"),
                fact("cblp", FactValue::Flag(false), "residuated example: no CBLP, equivalently no BLP"),
                fact("is_godel", FactValue::Flag(true), "residuated example: prod is meet"),
                fact("is_bl", FactValue::Flag(false), "residuated example: not a BL-algebra"),
            ],
        },
        _ => {
            if let Some(n) = parametric(key, "chain_").filter(|&n| n >= 1) {
                let count = 1usize << (n - 1);
                lattice(
                    chain(n),
                    "finite chain",
                    vec![
                        fact("congruence_count", FactValue::Count(count), "congruences of a chain are its interval partitions"),
                        fact("cblp", FactValue::Flag(true), "distributive lattices have CBLP"),
                    ],
                )
            } else if let Some(k) = parametric(key, "boolean_").filter(|&k| k <= 4) {
                lattice(
                    boolean_lattice(k),
                    "finite Boolean lattice",
                    vec![
                        fact("congruence_count", FactValue::Count(1 << k), "Con of 2^k is 2^k"),
                        fact("cblp", FactValue::Flag(true), "distributive lattices have CBLP"),
                    ],
                )
            } else if let Some(n) = parametric(key, "godel_").filter(|&n| n >= 2) {
                Fixture {
                    key: key.to_string(),
                    kind: FixtureKind::Residuated,
                    description: "Gödel chain".to_string(),
                    algebra: godel_chain(n),
                    expected: vec![
                        fact("validates", FactValue::Flag(true), "Gödel chains are residuated"),
                        fact("is_godel", FactValue::Flag(true), "prod is min"),
                        fact("is_bl", FactValue::Flag(true), "Gödel chains are BL-algebras"),
                        fact("local", FactValue::Flag(true), "filters of a chain form a chain"),
                    ],
                }
            } else if let Some(n) = parametric(key, "lukasiewicz_").filter(|&n| n >= 2) {
                Fixture {
                    key: key.to_string(),
                    kind: FixtureKind::Residuated,
                    description: "Łukasiewicz chain".to_string(),
                    algebra: lukasiewicz_chain(n),
                    expected: vec![
                        fact("validates", FactValue::Flag(true), "Łukasiewicz chains are MV-algebras"),
                        fact("is_bl", FactValue::Flag(true), "MV-algebras are BL-algebras"),
                        fact("local", FactValue::Flag(true), "finite MV-chains are simple"),
                    ],
                }
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(out)
}

/// Re-derives every expected fact of a fixture.
pub fn check_fixture(f: &Fixture) -> Result<Vec<FactCheck>> {
    let c = con(&f.algebra);
    let labels = f.algebra.labels();
    let render = |idx: &[usize]| -> Vec<String> {
        let mut v: Vec<String> = idx.iter().map(|&i| c.get(i).render(&labels)).collect();
        v.sort();
        v
    };
    let rl = match f.kind {
        FixtureKind::Residuated => Some(validate_residuated(&f.algebra)),
        FixtureKind::Lattice => None,
    };
    let mut out = Vec::new();
    for fact in &f.expected {
        let actual = match fact.name {
            "congruence_count" => FactValue::Count(c.len()),
            "congruences" => FactValue::Set(render(&(0..c.len()).collect::<Vec<_>>())),
            "boolean_congruences" => FactValue::Set(render(&boolean_congruences(&c))),
            "cblp" => FactValue::Flag(algebra_has_cblp(&c).holds),
            "cblp_failures" | "cblp_failures_include" => {
                let failing: Vec<usize> = algebra_has_cblp(&c).failures().map(|v| v.theta).collect();
                FactValue::Set(render(&failing))
            }
            "local" => FactValue::Flag(is_local(&c)),
            "validates" => FactValue::Flag(matches!(rl, Some(Ok(_)))),
            name @ ("filter_count" | "blp_failures" | "is_godel" | "is_bl") => {
                let r = match &rl {
                    Some(Ok(r)) => r,
                    Some(Err(e)) => return Err(e.clone()),
                    None => return Err(Error::Inconsistent(format!("fact `{name}` needs a residuated lattice"))),
                };
                match name {
                    "filter_count" => FactValue::Count(r.filters().len()),
                    "blp_failures" => {
                        let mut v: Vec<String> = r
                            .algebra_has_blp()?
                            .per_filter
                            .iter()
                            .filter(|v| !v.holds)
                            .map(|v| r.filter_label(&v.filter))
                            .collect();
                        v.sort();
                        FactValue::Set(v)
                    }
                    "is_godel" => FactValue::Flag(r.is_godel()),
                    _ => FactValue::Flag(r.is_bl()),
                }
            }
            other => return Err(Error::Inconsistent(format!("unknown fact `{other}`"))),
        };
        let ok = match (&fact.value, &actual) {
            (FactValue::Set(e), FactValue::Set(a)) if fact.name.ends_with("_include") => {
                e.iter().all(|x| a.contains(x))
            }
            (FactValue::Set(e), FactValue::Set(a)) => {
                let mut e = e.clone();
                e.sort();
                &e == a
            }
            (e, a) => e == a,
        };
        out.push(FactCheck {
            name: fact.name,
            expected: fact.value.clone(),
            actual,
            ok,
        });
    }
    Ok(out)
}

/// `L ∔ M` with the index maps of both summands.
#[derive(Clone, Debug)]
pub struct OrdinalSum {
    pub lattice: FiniteLattice,
    /// Position of each element of `L` in the sum.
    pub lower: Vec<usize>,
    /// Position of each element of `M` in the sum; `M`'s bottom is `L`'s top.
    pub upper: Vec<usize>,
}

/// Stacks `upper` on top of `lower`, identifying the top of `lower` with the
/// bottom of `upper`.
pub fn ordinal_sum(lower: &FiniteLattice, upper: &FiniteLattice) -> Result<OrdinalSum> {
    let nl = lower.size();
    let mut upper_pos = vec![0; upper.size()];
    let mut next = nl;
    for (m, slot) in upper_pos.iter_mut().enumerate() {
        if m == upper.bottom() {
            *slot = lower.top();
        } else {
            *slot = next;
            next += 1;
        }
    }
    let n = next;
    let mut leq = vec![false; n * n];
    for a in 0..nl {
        for b in 0..nl {
            leq[a * n + b] = lower.leq(a, b);
        }
        for &p in &upper_pos {
            leq[a * n + p] = true;
        }
    }
    for a in 0..upper.size() {
        for b in 0..upper.size() {
            if upper.leq(a, b) {
                leq[upper_pos[a] * n + upper_pos[b]] = true;
            }
        }
    }
    let mut names: Vec<String> = (0..nl).map(|x| lower.label(x)).collect();
    names.resize(n, String::new());
    for m in 0..upper.size() {
        if m != upper.bottom() {
            let mut label = upper.label(m);
            while names.contains(&label) {
                label.push('\'');
            }
            names[upper_pos[m]] = label;
        }
    }
    let lattice = FiniteLattice::from_leq(
        format!("{}+{}", lower.name(), upper.name()),
        n,
        leq,
        Some(names),
    )?;
    Ok(OrdinalSum {
        lattice,
        lower: (0..nl).collect(),
        upper: upper_pos,
    })
}

/// `φ ∔ ψ`: blocks of `φ` and `ψ`, with the two blocks of the shared element merged.
pub fn ordinal_sum_congruence(sum: &OrdinalSum, phi: &Congruence, psi: &Congruence) -> Result<Congruence> {
    if phi.size() != sum.lower.len() {
        return Err(Error::SizeMismatch {
            expected: sum.lower.len(),
            found: phi.size(),
        });
    }
    if psi.size() != sum.upper.len() {
        return Err(Error::SizeMismatch {
            expected: sum.upper.len(),
            found: psi.size(),
        });
    }
    let mut uf = UnionFind::new(sum.lattice.size());
    for class in phi.classes() {
        for w in class.windows(2) {
            uf.union(sum.lower[w[0]], sum.lower[w[1]]);
        }
    }
    for class in psi.classes() {
        for w in class.windows(2) {
            uf.union(sum.upper[w[0]], sum.upper[w[1]]);
        }
    }
    Ok(uf.into_congruence())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// Bounded lattices as `join`/`meet` algebras.
    Lattice,
    /// Residuated lattices.
    Residuated,
    /// One binary operation.
    Groupoid,
    /// Two unary operations.
    Unary,
}

impl std::str::FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lattice" => Ok(Signature::Lattice),
            "residuated" => Ok(Signature::Residuated),
            "groupoid" => Ok(Signature::Groupoid),
            "unary" => Ok(Signature::Unary),
            other => Err(Error::Infeasible(format!("unknown signature `{other}`"))),
        }
    }
}

pub const MAX_RANDOM_LATTICE: usize = 6;
pub const MAX_RANDOM_RESIDUATED: usize = 5;

/// All lattices on `n` elements up to isomorphism.
///
/// Every finite poset has a linear extension, so it suffices to take
/// relations that only go upwards in index order, with `0` at the bottom and
/// `n-1` at the top.
pub fn all_lattices(n: usize) -> Vec<FiniteLattice> {
    if n == 0 {
        return Vec::new();
    }
    if n <= 2 {
        return vec![chain(n)];
    }
    let middle: Vec<(usize, usize)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut found: Vec<FiniteLattice> = Vec::new();
    for mask in 0u64..(1 << middle.len()) {
        let covers = lattice_relation(n, &middle, mask);
        let Ok(l) = FiniteLattice::from_covers(format!("lat{n}_{}", found.len()), n, &covers, None) else {
            continue;
        };
        let alg = l.to_algebra();
        if !found
            .iter()
            .any(|f| are_isomorphic(&f.to_algebra(), &alg, usize::MAX).unwrap_or(false))
        {
            found.push(l);
        }
    }
    found
}

fn lattice_relation(n: usize, middle: &[(usize, usize)], mask: u64) -> Vec<(usize, usize)> {
    let mut covers: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| [(0, i), (i, n - 1)]).collect();
    covers.push((0, n - 1));
    for (bit, &pair) in middle.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            covers.push(pair);
        }
    }
    covers
}

/// Every residuated structure on the given lattice, up to isomorphism.
///
/// Products are enumerated as commutative, monotone, join-preserving tables
/// with unit `1`; the implication is the residual `b→c = ⋁{a | a⊙b ≤ c}` and
/// the result is validated.
pub fn residuated_on(lattice: &FiniteLattice) -> Vec<FiniteAlgebra> {
    let n = lattice.size();
    let (bot, top) = (lattice.bottom(), lattice.top());
    let middle: Vec<usize> = (0..n).filter(|&x| x != bot && x != top).collect();
    let pairs: Vec<(usize, usize)> = middle
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| middle[i..].iter().map(move |&b| (a, b)))
        .collect();
    let mut prod = vec![0; n * n];
    for x in 0..n {
        prod[top * n + x] = x;
        prod[x * n + top] = x;
        prod[bot * n + x] = bot;
        prod[x * n + bot] = bot;
    }
    let mut out: Vec<FiniteAlgebra> = Vec::new();
    fill_products(lattice, &pairs, 0, &mut prod, &mut out);
    let mut unique: Vec<FiniteAlgebra> = Vec::new();
    for alg in out {
        if !unique
            .iter()
            .any(|u| are_isomorphic(u, &alg, usize::MAX).unwrap_or(false))
        {
            unique.push(alg);
        }
    }
    unique
}

fn fill_products(
    l: &FiniteLattice,
    pairs: &[(usize, usize)],
    next: usize,
    prod: &mut Vec<usize>,
    out: &mut Vec<FiniteAlgebra>,
) {
    let n = l.size();
    if next == pairs.len() {
        if let Some(alg) = complete_residuated(l, prod, out.len()) {
            out.push(alg);
        }
        return;
    }
    let (a, b) = pairs[next];
    let bound = l.meet(a, b);
    for v in 0..n {
        if !l.leq(v, bound) {
            continue;
        }
        prod[a * n + b] = v;
        prod[b * n + a] = v;
        fill_products(l, pairs, next + 1, prod, out);
    }
}

fn complete_residuated(l: &FiniteLattice, prod: &[usize], id: usize) -> Option<FiniteAlgebra> {
    let n = l.size();
    let p = |a: usize, b: usize| prod[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if p(a, l.join(b, c)) != l.join(p(a, b), p(a, c)) || p(p(a, b), c) != p(a, p(b, c)) {
                    return None;
                }
            }
        }
    }
    let imp = |b: usize, c: usize| l.join_all((0..n).filter(|&a| l.leq(p(a, b), c)));
    let alg = residuated(&format!("R{n}_{id}"), l, p, imp, None).ok()?;
    validate_residuated(&alg).ok().map(|_| alg)
}

/// All residuated lattices with `n` elements up to isomorphism.
pub fn all_residuated(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    for l in all_lattices(n) {
        if !l.is_distributive() {
            // the underlying lattice of a residuated lattice is distributive
            continue;
        }
        out.extend(residuated_on(&l));
    }
    for (i, alg) in out.iter_mut().enumerate() {
        *alg = alg.clone().with_name(format!("R{n}_{i}"));
    }
    out
}

fn random_lattice(n: usize, rng: &mut ChaCha8Rng, name: String) -> FiniteLattice {
    if n <= 2 {
        return chain(n).with_name(name);
    }
    let middle: Vec<(usize, usize)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    loop {
        let mask: u64 = rng.gen_range(0..(1u64 << middle.len()));
        let covers = lattice_relation(n, &middle, mask);
        if let Ok(l) = FiniteLattice::from_covers(name.clone(), n, &covers, None) {
            return l;
        }
    }
}

/// Seeded random algebras of the given signature. `count = None` asks for
/// every algebra of that size up to isomorphism, which is available for
/// lattices and residuated lattices.
pub fn random_algebras(
    signature: Signature,
    size: usize,
    count: Option<usize>,
    seed: u64,
) -> Result<Vec<FiniteAlgebra>> {
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match signature {
        Signature::Lattice => {
            if size > MAX_RANDOM_LATTICE {
                return Err(Error::Infeasible(format!(
                    "random lattices are limited to {MAX_RANDOM_LATTICE} elements"
                )));
            }
            Ok(match count {
                None => all_lattices(size).iter().map(|l| l.to_algebra()).collect(),
                Some(k) => (0..k)
                    .map(|i| random_lattice(size, &mut rng, format!("lat{size}_s{seed}_{i}")).to_algebra())
                    .collect(),
            })
        }
        Signature::Residuated => {
            if size > MAX_RANDOM_RESIDUATED {
                return Err(Error::Infeasible(format!(
                    "residuated lattices are limited to {MAX_RANDOM_RESIDUATED} elements"
                )));
            }
            let all = all_residuated(size);
            Ok(match count {
                None => all,
                Some(k) => (0..k).map(|_| all[rng.gen_range(0..all.len())].clone()).collect(),
            })
        }
        Signature::Groupoid | Signature::Unary => {
            let Some(k) = count else {
                return Err(Error::Infeasible(
                    "exhaustive enumeration is only available for lattices and residuated lattices".into(),
                ));
            };
            let mut out = Vec::with_capacity(k);
            for i in 0..k {
                let ops = if signature == Signature::Groupoid {
                    vec![("f".to_string(), 2, (0..size * size).map(|_| rng.gen_range(0..size)).collect())]
                } else {
                    vec![
                        ("f".to_string(), 1, (0..size).map(|_| rng.gen_range(0..size)).collect()),
                        ("g".to_string(), 1, (0..size).map(|_| rng.gen_range(0..size)).collect()),
                    ]
                };
                out.push(FiniteAlgebra::new(format!("rand{size}_s{seed}_{i}"), size, ops, None)?);
            }
            Ok(out)
        }
    }
}

/// Keys of the fixtures whose algebras form the named corpus used by the
/// property suites.
pub fn corpus_keys() -> Vec<&'static str> {
    vec![
        "diamond",
        "pentagon",
        "lattice_e",
        "lattice_z",
        "residuated_a",
        "l2",
        "l2sq_plus_l2",
        "chain_3",
        "chain_4",
        "boolean_2",
        "boolean_3",
        "godel_3",
        "lukasiewicz_3",
        "lukasiewicz_4",
    ]
}

/// Distinct rendered partitions, handy for comparing congruence sets.
pub fn rendered(congruences: &[Congruence], labels: &[String]) -> BTreeSet<String> {
    congruences.iter().map(|c| c.render(labels)).collect()
}
