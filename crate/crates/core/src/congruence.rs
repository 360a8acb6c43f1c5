//! Partitions of a finite carrier in canonical form, and the union-find
//! structure used to build them.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns `true` if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let roots: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&roots)
    }
}

/// An equivalence relation on `{0..n-1}`, stored as a block-id sequence.
///
/// Block ids are assigned in order of first occurrence, so element 0 is
/// always in block 0 and two equal relations have equal encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    /// The identity relation (all singletons).
    pub fn identity(n: usize) -> Self {
        Congruence {
            blocks: (0..n).collect(),
        }
    }

    /// The total relation (one block).
    pub fn full(n: usize) -> Self {
        Congruence { blocks: vec![0; n] }
    }

    /// Canonicalizes an arbitrary labelling: elements with equal labels share a block.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Self {
        let mut ids: HashMap<T, usize> = HashMap::new();
        let blocks = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { blocks }
    }

    /// Builds the partition whose blocks are `classes`, which must cover
    /// `{0..n-1}` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, size: n });
                }
                if label[x] != usize::MAX {
                    return Err(Error::Inconsistent(format!(
                        "element {x} appears in two blocks"
                    )));
                }
                label[x] = i;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Inconsistent(format!("element {x} is in no block")));
        }
        Ok(Congruence::from_labels(&label))
    }

    /// Least equivalence containing `pairs` (no compatibility closure).
    pub fn equivalence_generated(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, size: n });
                }
            }
            uf.union(a, b);
        }
        Ok(uf.into_congruence())
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks[x]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    pub fn is_identity(&self) -> bool {
        self.block_count() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.block_count() <= 1
    }

    /// Blocks as sorted element lists, in block-id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Least element of each block, in block-id order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            if reps[b] == usize::MAX {
                reps[b] = x;
            }
        }
        reps
    }

    /// Inclusion of relations: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Congruence) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut target = vec![usize::MAX; self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            let t = other.blocks[x];
            if target[b] == usize::MAX {
                target[b] = t;
            } else if target[b] != t {
                return false;
            }
        }
        true
    }

    /// Intersection of the two relations.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.size(), other.size());
        let labels: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| (a, b))
            .collect();
        Congruence::from_labels(&labels)
    }

    /// Least equivalence containing both relations.
    ///
    /// The equivalence join of two congruences is again a congruence, so no
    /// further closure is needed when both arguments are congruences.
    pub fn join(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.size(), other.size());
        let mut uf = UnionFind::new(self.size());
        for rel in [self, other] {
            let reps = rel.representatives();
            for (x, &b) in rel.blocks.iter().enumerate() {
                uf.union(x, reps[b]);
            }
        }
        uf.into_congruence()
    }

    /// Whether `self ∘ other = other ∘ self` as binary relations.
    pub fn permutes_with(&self, other: &Congruence) -> bool {
        let (p, q) = (self.block_count(), other.block_count());
        let mut meets = vec![false; p * q];
        for x in 0..self.size() {
            meets[self.blocks[x] * q + other.blocks[x]] = true;
        }
        // (x,z) ∈ self∘other iff self-block(x) meets other-block(z)
        for x in 0..self.size() {
            for z in 0..self.size() {
                let forward = meets[self.blocks[x] * q + other.blocks[z]];
                let backward = meets[self.blocks[z] * q + other.blocks[x]];
                if forward != backward {
                    return false;
                }
            }
        }
        true
    }

    /// Name of the first operation this partition is not compatible with.
    pub fn compatibility_violation(&self, alg: &FiniteAlgebra) -> Option<String> {
        if self.size() != alg.size() {
            return Some(String::from("<size mismatch>"));
        }
        let n = alg.size();
        let reps = self.representatives();
        for op in alg.ops() {
            let k = op.arity();
            if k == 0 {
                continue;
            }
            let table = op.table();
            // Changing one argument to a related element must give related results.
            for p in 0..k {
                let weight = n.pow((k - 1 - p) as u32);
                for t in 0..n.pow((k - 1) as u32) {
                    let base = (t / weight) * weight * n + t % weight;
                    for a in 0..n {
                        let r = reps[self.blocks[a]];
                        if a == r {
                            continue;
                        }
                        let x = table[base + a * weight];
                        let y = table[base + r * weight];
                        if self.blocks[x] != self.blocks[y] {
                            return Some(op.name().to_string());
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_compatible_with(&self, alg: &FiniteAlgebra) -> bool {
        self.compatibility_violation(alg).is_none()
    }

    /// `self/θ` as a partition of the blocks of `theta`; requires `theta ⊆ self`.
    pub fn modulo(&self, theta: &Congruence) -> Result<Congruence> {
        if !theta.leq(self) {
            return Err(Error::Inconsistent(
                "quotient of a congruence by a larger one".into(),
            ));
        }
        let reps = theta.representatives();
        let labels: Vec<usize> = reps.iter().map(|&r| self.blocks[r]).collect();
        Ok(Congruence::from_labels(&labels))
    }

    /// Pulls a partition of the blocks of `theta` back to the carrier.
    pub fn lift(&self, theta: &Congruence) -> Result<Congruence> {
        if self.size() != theta.block_count() {
            return Err(Error::SizeMismatch {
                expected: theta.block_count(),
                found: self.size(),
            });
        }
        let labels: Vec<usize> = theta.blocks.iter().map(|&b| self.blocks[b]).collect();
        Ok(Congruence::from_labels(&labels))
    }

    /// Blocks rendered with element labels, e.g. `{0,y,z}{x,1}`.
    pub fn render(&self, labels: &[String]) -> String {
        self.classes()
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&x| labels[x].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect()
    }

    /// Blocks as lists of element labels.
    pub fn labelled_classes(&self, labels: &[String]) -> Vec<Vec<String>> {
        self.classes()
            .iter()
            .map(|c| c.iter().map(|&x| labels[x].clone()).collect())
            .collect()
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.size()).map(|i| i.to_string()).collect();
        f.write_str(&self.render(&labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_uses_first_occurrence() {
        let c = Congruence::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.blocks(), &[0, 1, 0, 2]);
        assert_eq!(c.block_count(), 3);
        assert_eq!(c.to_string(), "{0,2}{1}{3}");
    }

    #[test]
    fn meet_join_and_order() {
        let a = Congruence::from_labels(&[0, 0, 1, 1]);
        let b = Congruence::from_labels(&[0, 1, 1, 2]);
        assert_eq!(a.meet(&b), Congruence::identity(4));
        assert_eq!(a.join(&b), Congruence::full(4));
        assert!(Congruence::identity(4).leq(&a));
        assert!(a.leq(&Congruence::full(4)));
        assert!(!a.leq(&b));
    }

    #[test]
    fn modulo_and_lift_are_inverse() {
        let theta = Congruence::from_labels(&[0, 0, 1, 2, 2]);
        let phi = Congruence::from_labels(&[0, 0, 1, 0, 0]);
        let q = phi.modulo(&theta).unwrap();
        assert_eq!(q.blocks(), &[0, 1, 0]);
        assert_eq!(q.lift(&theta).unwrap(), phi);
        assert!(theta.modulo(&phi).is_err());
    }

    #[test]
    fn permutability_of_product_kernels() {
        // kernels of the two projections of a 2x2 grid
        let k1 = Congruence::from_labels(&[0, 0, 1, 1]);
        let k2 = Congruence::from_labels(&[0, 1, 0, 1]);
        assert!(k1.permutes_with(&k2));
        // on a 3-chain the two non-trivial congruences do not permute
        let a = Congruence::from_labels(&[0, 0, 1]);
        let b = Congruence::from_labels(&[0, 1, 1]);
        assert!(!a.permutes_with(&b));
    }

    #[test]
    fn from_classes_rejects_overlaps_and_gaps() {
        assert!(Congruence::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Congruence::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(Congruence::from_classes(3, &[vec![0, 5]]).is_err());
        let c = Congruence::from_classes(3, &[vec![2], vec![0, 1]]).unwrap();
        assert_eq!(c.blocks(), &[0, 0, 1]);
    }
}
