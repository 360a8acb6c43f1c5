//! Congruence generation and the congruence lattice `Con(A)`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Closes `uf` under all operations. `pending` holds the pairs merged so far
/// whose translations have not been propagated yet.
fn close(alg: &FiniteAlgebra, uf: &mut UnionFind, mut pending: Vec<(usize, usize)>) {
    let n = alg.size();
    let mut args = Vec::new();
    while let Some((a, b)) = pending.pop() {
        for op in alg.ops() {
            let k = op.arity();
            if k == 0 {
                continue;
            }
            let others = n.pow(k as u32 - 1);
            args.resize(k, 0);
            for pos in 0..k {
                for idx in 0..others {
                    let mut rest = idx;
                    for (slot, arg) in args.iter_mut().enumerate().rev() {
                        if slot == pos {
                            continue;
                        }
                        *arg = rest % n;
                        rest /= n;
                    }
                    args[pos] = a;
                    let fa = op.apply(&args);
                    args[pos] = b;
                    let fb = op.apply(&args);
                    if uf.union(fa, fb) {
                        pending.push((fa, fb));
                    }
                }
            }
        }
    }
}

fn check_pairs(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in pairs {
        alg.check_element(a)?;
        alg.check_element(b)?;
    }
    Ok(())
}

/// The least congruence containing `pairs`.
pub fn cg(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Result<Congruence> {
    check_pairs(alg, pairs)?;
    let mut uf = UnionFind::new(alg.size());
    let mut pending = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            pending.push((a, b));
        }
    }
    close(alg, &mut uf, pending);
    Ok(uf.into_congruence())
}

/// `Cg(θ ∪ pairs)` for a congruence `θ`.
pub fn cg_over(alg: &FiniteAlgebra, theta: &Congruence, pairs: &[(usize, usize)]) -> Result<Congruence> {
    check_pairs(alg, pairs)?;
    alg.check_partition(theta)?;
    let mut uf = UnionFind::new(alg.size());
    let reps = theta.representatives();
    for x in 0..alg.size() {
        uf.union(x, reps[theta.block_of(x)]);
    }
    let mut pending = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            pending.push((a, b));
        }
    }
    close(alg, &mut uf, pending);
    Ok(uf.into_congruence())
}

/// `Con(A)` with its lattice structure.
///
/// Elements are ordered by decreasing block count and then by block
/// sequence, so `Δ` has index 0 and `∇` the last index.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    algebra: FiniteAlgebra,
    elements: Vec<Congruence>,
    index: HashMap<Congruence, usize>,
    lattice: FiniteLattice,
    principal: Vec<usize>,
}

#[derive(Serialize)]
struct LatticeSummary<'a> {
    algebra: &'a str,
    congruences: Vec<Vec<Vec<String>>>,
}

impl CongruenceLattice {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn elements(&self) -> &[Congruence] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.elements[i]
    }

    pub fn index_of(&self, theta: &Congruence) -> Option<usize> {
        self.index.get(theta).copied()
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice.leq(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lattice.join(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lattice.meet(i, j)
    }

    /// Index of `Cg(a, b)`.
    pub fn principal(&self, a: usize, b: usize) -> usize {
        self.principal[a * self.algebra.size() + b]
    }

    /// `K(A)`: finite joins of principal congruences. For a finite algebra
    /// this is every congruence; it is computed rather than assumed.
    pub fn compact_elements(&self) -> Vec<usize> {
        let mut reached: HashSet<usize> = HashSet::new();
        reached.insert(self.bottom());
        let principals: HashSet<usize> = self.principal.iter().copied().collect();
        let mut frontier: Vec<usize> = vec![self.bottom()];
        while let Some(x) = frontier.pop() {
            for &p in &principals {
                let j = self.join(x, p);
                if reached.insert(j) {
                    frontier.push(j);
                }
            }
        }
        let mut out: Vec<usize> = reached.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Hypothesis (H): `∇` is compact.
    pub fn hypothesis_h(&self) -> bool {
        self.compact_elements().contains(&self.top())
    }

    pub fn is_distributive(&self) -> bool {
        self.lattice.is_distributive()
    }

    pub fn is_permutable(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.elements[i].permutes_with(&self.elements[j])))
    }

    pub fn is_arithmetical(&self) -> bool {
        self.is_distributive() && self.is_permutable()
    }

    pub fn labels(&self) -> Vec<String> {
        let labels = self.algebra.labels();
        self.elements.iter().map(|c| c.render(&labels)).collect()
    }

    pub fn render(&self, i: usize) -> String {
        self.elements[i].render(&self.algebra.labels())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let labels = self.algebra.labels();
        serde_json::to_value(LatticeSummary {
            algebra: self.algebra.name(),
            congruences: self
                .elements
                .iter()
                .map(|c| c.labelled_classes(&labels))
                .collect(),
        })
        .expect("serializable")
    }
}

fn sort_key(c: &Congruence) -> (std::cmp::Reverse<usize>, &[usize]) {
    (std::cmp::Reverse(c.block_count()), c.blocks())
}

fn build_lattice(alg: &FiniteAlgebra, mut elements: Vec<Congruence>, principal_of: impl Fn(usize, usize) -> Congruence) -> CongruenceLattice {
    elements.sort_by(|a, b| sort_key(a).cmp(&sort_key(b)));
    elements.dedup();
    let m = elements.len();
    let index: HashMap<Congruence, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    let mut leq = vec![false; m * m];
    let mut join = vec![0; m * m];
    let mut meet = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = elements[i].leq(&elements[j]);
            if j < i {
                join[i * m + j] = join[j * m + i];
                meet[i * m + j] = meet[j * m + i];
                continue;
            }
            join[i * m + j] = index[&elements[i].join(&elements[j])];
            meet[i * m + j] = index[&elements[i].meet(&elements[j])];
        }
    }
    let labels: Vec<String> = {
        let l = alg.labels();
        elements.iter().map(|c| c.render(&l)).collect()
    };
    let lattice = FiniteLattice::from_parts(
        format!("Con({})", alg.name()),
        m,
        leq,
        join,
        meet,
        Some(labels),
    );
    let n = alg.size();
    let mut principal = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let p = index[&principal_of(a, b)];
            principal[a * n + b] = p;
            principal[b * n + a] = p;
        }
    }
    CongruenceLattice {
        algebra: alg.clone(),
        elements,
        index,
        lattice,
        principal,
    }
}

/// Computes `Con(A)` from the principal congruences by join closure.
pub fn con(alg: &FiniteAlgebra) -> CongruenceLattice {
    let n = alg.size();
    let mut principal = HashMap::new();
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut elements = vec![Congruence::identity(n)];
    seen.insert(Congruence::identity(n));
    for a in 0..n {
        for b in a + 1..n {
            let c = cg(alg, &[(a, b)]).expect("pair in range");
            if seen.insert(c.clone()) {
                elements.push(c.clone());
            }
            principal.insert((a, b), c);
        }
    }
    // join closure; joins of congruences are plain equivalence joins
    let mut next = 1;
    while next < elements.len() {
        let x = elements[next].clone();
        for i in 0..next {
            let j = x.join(&elements[i]);
            if seen.insert(j.clone()) {
                elements.push(j);
            }
        }
        next += 1;
    }
    build_lattice(alg, elements, |a, b| {
        if a == b {
            Congruence::identity(n)
        } else {
            principal[&(a, b)].clone()
        }
    })
}

/// Restricted-growth strings of length `n`, i.e. all set partitions.
pub fn all_partitions(n: usize) -> Vec<Congruence> {
    fn rec(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Congruence>) {
        if prefix.len() == n {
            out.push(Congruence::from_labels(prefix));
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            rec(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut prefix = vec![0];
    rec(&mut prefix, 0, n, &mut out);
    out
}

/// Exhaustive oracle: every partition compatible with every operation.
pub fn con_bruteforce(alg: &FiniteAlgebra, cap: usize) -> Result<Vec<Congruence>> {
    if alg.size() > cap {
        return Err(Error::CapExceeded {
            what: "brute-force congruence enumeration",
            size: alg.size(),
            cap,
        });
    }
    let mut out: Vec<Congruence> = all_partitions(alg.size())
        .into_iter()
        .filter(|p| p.is_compatible_with(alg))
        .collect();
    out.sort_by(|a, b| sort_key(a).cmp(&sort_key(b)));
    Ok(out)
}

/// The congruence lattice assembled from the brute-force oracle, with
/// principal congruences taken as least members containing each pair.
pub fn con_from_bruteforce(alg: &FiniteAlgebra, cap: usize) -> Result<CongruenceLattice> {
    let elements = con_bruteforce(alg, cap)?;
    let least = |a: usize, b: usize| {
        elements
            .iter()
            .filter(|c| c.related(a, b))
            .min_by_key(|c| std::cmp::Reverse(c.block_count()))
            .cloned()
            .expect("∇ relates everything")
    };
    Ok(build_lattice(alg, elements.clone(), least))
}

/// Searches for `a` with `(a, targets[i]) ∈ θ_i` for all `i`.
///
/// Returns `Err(IncompatibleSystem)` when some pair of targets is not related
/// modulo `θ_i ∨ θ_j`, and `Ok(None)` when the system is compatible but has no
/// solution.
pub fn crt_solve(alg: &FiniteAlgebra, thetas: &[Congruence], targets: &[usize]) -> Result<Option<usize>> {
    if thetas.len() != targets.len() {
        return Err(Error::SizeMismatch {
            expected: thetas.len(),
            found: targets.len(),
        });
    }
    for (t, &a) in thetas.iter().zip(targets) {
        alg.check_partition(t)?;
        alg.check_element(a)?;
    }
    for i in 0..thetas.len() {
        for j in i + 1..thetas.len() {
            if !thetas[i].join(&thetas[j]).related(targets[i], targets[j]) {
                return Err(Error::IncompatibleSystem { i, j });
            }
        }
    }
    Ok((0..alg.size()).find(|&a| thetas.iter().zip(targets).all(|(t, &ai)| t.related(a, ai))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain;

    #[test]
    fn partitions_are_counted_by_bell_numbers() {
        let bell = [1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(all_partitions(n + 1).len(), b);
        }
    }

    #[test]
    fn chain_congruences() {
        // congruences of an n-chain as a lattice are the 2^(n-1) interval partitions
        for n in 1..=5 {
            let c = con(&chain(n).to_algebra());
            assert_eq!(c.len(), 1 << (n - 1));
            assert!(c.hypothesis_h());
            assert_eq!(c.compact_elements().len(), c.len());
        }
    }

    #[test]
    fn cg_of_empty_set_is_identity() {
        let alg = chain(3).to_algebra();
        assert!(cg(&alg, &[]).unwrap().is_identity());
        assert!(cg(&alg, &[(0, 5)]).is_err());
    }

    #[test]
    fn cg_over_extends_a_congruence() {
        let alg = chain(4).to_algebra();
        let theta = cg(&alg, &[(0, 1)]).unwrap();
        let both = cg_over(&alg, &theta, &[(2, 3)]).unwrap();
        assert_eq!(both, cg(&alg, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(both.block_count(), 2);
    }

    #[test]
    fn oracle_lattice_matches() {
        let alg = chain(4).to_algebra();
        let fast = con(&alg);
        let slow = con_from_bruteforce(&alg, 8).unwrap();
        assert_eq!(fast.elements(), slow.elements());
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(fast.principal(a, b), slow.principal(a, b));
            }
        }
        assert!(con_bruteforce(&chain(9).to_algebra(), 8).is_err());
    }

    #[test]
    fn crt_distinguishes_incompatibility_from_no_solution() {
        let alg = chain(3).to_algebra();
        let c = con(&alg);
        let delta = c.get(c.bottom()).clone();
        assert_eq!(crt_solve(&alg, std::slice::from_ref(&delta), &[2]).unwrap(), Some(2));
        assert!(matches!(
            crt_solve(&alg, &[delta.clone(), delta], &[0, 1]),
            Err(Error::IncompatibleSystem { i: 0, j: 1 })
        ));
    }
}
