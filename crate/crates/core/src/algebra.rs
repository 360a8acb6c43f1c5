//! Finite algebras given by operation tables, their quotients and finite
//! direct products.

use std::collections::HashSet;

use serde::Serialize;

use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};

/// A finitary operation stored as a flat table.
///
/// The entry for arguments `(x1, …, xk)` lives at the mixed-radix index
/// `x1·n^(k-1) + … + xk`, so for binary operations the row is the first
/// argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Operation {
    name: String,
    arity: usize,
    size: usize,
    table: Vec<usize>,
}

impl Operation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let idx = args.iter().fold(0, |acc, &a| acc * self.size + a);
        self.table[idx]
    }

    /// Value of a constant (arity 0).
    pub fn constant(&self) -> usize {
        self.table[0]
    }

    pub fn unary(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn binary(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }
}

/// Unvalidated algebra description, as produced by the text parser.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub size: usize,
    pub element_names: Option<Vec<String>>,
    pub ops: Vec<(String, usize, Vec<usize>)>,
}

/// A finite algebra on the carrier `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteAlgebra {
    name: String,
    size: usize,
    ops: Vec<Operation>,
    element_names: Option<Vec<String>>,
}

/// Checks every table and label invariant and builds the algebra.
pub fn validate_algebra(raw: RawAlgebra) -> Result<FiniteAlgebra> {
    let n = raw.size;
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if let Some(names) = &raw.element_names {
        if names.len() != n {
            return Err(Error::BadLabels(format!(
                "{} labels for {} elements",
                names.len(),
                n
            )));
        }
        let mut seen = HashSet::new();
        for name in names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::BadLabels(format!("invalid label `{name}`")));
            }
            if !seen.insert(name) {
                return Err(Error::BadLabels(format!("duplicate label `{name}`")));
            }
        }
    }
    let mut seen = HashSet::new();
    let mut ops = Vec::with_capacity(raw.ops.len());
    for (name, arity, table) in raw.ops {
        if !seen.insert(name.clone()) {
            return Err(Error::DuplicateOp(name));
        }
        let expected = n
            .checked_pow(arity as u32)
            .ok_or_else(|| Error::Infeasible(format!("table of `{name}` is too large")))?;
        if table.len() != expected {
            return Err(Error::WrongTableLength {
                op: name,
                expected,
                found: table.len(),
            });
        }
        if let Some(index) = table.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                value: table[index],
                op: name,
                index,
                size: n,
            });
        }
        ops.push(Operation {
            name,
            arity,
            size: n,
            table,
        });
    }
    Ok(FiniteAlgebra {
        name: raw.name,
        size: n,
        ops,
        element_names: raw.element_names,
    })
}

impl FiniteAlgebra {
    pub fn new(
        name: impl Into<String>,
        size: usize,
        ops: Vec<(String, usize, Vec<usize>)>,
        element_names: Option<Vec<String>>,
    ) -> Result<Self> {
        validate_algebra(RawAlgebra {
            name: name.into(),
            size,
            element_names,
            ops,
        })
    }

    /// Builds an algebra from binary operations given as closures.
    #[allow(clippy::type_complexity)]
    pub fn from_binary_fns(
        name: impl Into<String>,
        size: usize,
        ops: &[(&str, &dyn Fn(usize, usize) -> usize)],
        element_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let ops = ops
            .iter()
            .map(|(op, f)| {
                let table = (0..size * size).map(|i| f(i / size, i % size)).collect();
                (op.to_string(), 2, table)
            })
            .collect();
        FiniteAlgebra::new(name, size, ops, element_names)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&Operation> {
        self.ops.iter().find(|o| o.name == name)
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.element_names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size).map(|x| self.label(x)).collect()
    }

    /// Looks an element up by label or decimal index.
    pub fn element(&self, token: &str) -> Option<usize> {
        if let Some(names) = &self.element_names {
            if let Some(i) = names.iter().position(|n| n == token) {
                return Some(i);
            }
        }
        token.parse::<usize>().ok().filter(|&i| i < self.size)
    }

    pub fn signature(&self) -> Vec<(String, usize)> {
        self.ops.iter().map(|o| (o.name.clone(), o.arity)).collect()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        let ops = self.raw_ops();
        FiniteAlgebra::new(self.name, self.size, ops, Some(labels))
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub(crate) fn raw_ops(&self) -> Vec<(String, usize, Vec<usize>)> {
        self.ops
            .iter()
            .map(|o| (o.name.clone(), o.arity, o.table.clone()))
            .collect()
    }

    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            size: self.size,
            element_names: self.element_names.clone(),
            ops: self.raw_ops(),
        }
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                size: self.size,
            })
        }
    }

    pub(crate) fn check_partition(&self, theta: &Congruence) -> Result<()> {
        if theta.size() != self.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: theta.size(),
            });
        }
        Ok(())
    }
}

/// Mixed-radix codec between tuples and product indices (factor 0 most significant).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCodec {
    sizes: Vec<usize>,
}

impl ProductCodec {
    pub fn new(sizes: Vec<usize>) -> Self {
        ProductCodec { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn factor_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.sizes.len());
        tuple
            .iter()
            .zip(&self.sizes)
            .fold(0, |acc, (&x, &s)| acc * s + x)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.sizes.len()];
        for (slot, &s) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = index % s;
            index /= s;
        }
        out
    }

    pub fn component(&self, index: usize, factor: usize) -> usize {
        let stride: usize = self.sizes[factor + 1..].iter().product();
        (index / stride) % self.sizes[factor]
    }
}

/// Direct product of algebras sharing one signature, with its tuple codec.
pub fn product(factors: &[FiniteAlgebra]) -> Result<(FiniteAlgebra, ProductCodec)> {
    let first = factors.first().ok_or(Error::EmptyProduct)?;
    let signature = first.signature();
    for f in &factors[1..] {
        if f.signature() != signature {
            return Err(Error::SignatureMismatch(format!(
                "`{}` and `{}` have different operations",
                first.name, f.name
            )));
        }
    }
    let codec = ProductCodec::new(factors.iter().map(|f| f.size).collect());
    let n = codec.total();
    let tuples: Vec<Vec<usize>> = (0..n).map(|i| codec.decode(i)).collect();
    let mut ops = Vec::with_capacity(signature.len());
    for (j, (name, arity)) in signature.iter().enumerate() {
        let arity = *arity;
        let entries = n
            .checked_pow(arity as u32)
            .ok_or_else(|| Error::Infeasible("product table too large".into()))?;
        let mut table = Vec::with_capacity(entries);
        let mut args = vec![0usize; arity];
        let mut component_args = vec![0usize; arity];
        let mut out = vec![0usize; factors.len()];
        for idx in 0..entries {
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            for (i, factor) in factors.iter().enumerate() {
                for (c, &a) in component_args.iter_mut().zip(&args) {
                    *c = tuples[a][i];
                }
                out[i] = factor.ops[j].apply(&component_args);
            }
            table.push(codec.encode(&out));
        }
        ops.push((name.clone(), arity, table));
    }
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t
                .iter()
                .enumerate()
                .map(|(i, &x)| factors[i].label(x))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = factors
        .iter()
        .map(|f| f.name.as_str())
        .collect::<Vec<_>>()
        .join("x");
    let labels = if factors.len() == 1 {
        first.element_names.clone()
    } else {
        Some(labels)
    };
    Ok((FiniteAlgebra::new(name, n, ops, labels)?, codec))
}

/// `θ1 × … × θn` on the product described by `codec`.
pub fn product_congruence(codec: &ProductCodec, thetas: &[Congruence]) -> Result<Congruence> {
    if thetas.len() != codec.factor_count() {
        return Err(Error::SizeMismatch {
            expected: codec.factor_count(),
            found: thetas.len(),
        });
    }
    for (t, &s) in thetas.iter().zip(codec.sizes()) {
        if t.size() != s {
            return Err(Error::SizeMismatch {
                expected: s,
                found: t.size(),
            });
        }
    }
    let block_codec = ProductCodec::new(thetas.iter().map(|t| t.block_count()).collect());
    let labels: Vec<usize> = (0..codec.total())
        .map(|i| {
            let blocks: Vec<usize> = codec
                .decode(i)
                .iter()
                .zip(thetas)
                .map(|(&x, t)| t.block_of(x))
                .collect();
            block_codec.encode(&blocks)
        })
        .collect();
    Ok(Congruence::from_labels(&labels))
}

/// The projection `pr_i(θ)` of a congruence of a product onto factor `i`.
pub fn project_congruence(
    codec: &ProductCodec,
    theta: &Congruence,
    factor: usize,
) -> Result<Congruence> {
    if factor >= codec.factor_count() {
        return Err(Error::FactorOutOfRange {
            index: factor,
            count: codec.factor_count(),
        });
    }
    if theta.size() != codec.total() {
        return Err(Error::SizeMismatch {
            expected: codec.total(),
            found: theta.size(),
        });
    }
    let reps = theta.representatives();
    let mut uf = UnionFind::new(codec.sizes()[factor]);
    for x in 0..theta.size() {
        let r = reps[theta.block_of(x)];
        uf.union(codec.component(x, factor), codec.component(r, factor));
    }
    Ok(uf.into_congruence())
}

/// The canonical surjection `A → A/θ` together with the quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub theta: Congruence,
    pub target: FiniteAlgebra,
    /// Block index of every source element.
    pub projection: Vec<usize>,
}

impl QuotientMap {
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }
}

/// Builds `A/θ`; block `i` is labelled after its least element.
pub fn quotient(alg: &FiniteAlgebra, theta: &Congruence) -> Result<QuotientMap> {
    alg.check_partition(theta)?;
    if let Some(op) = theta.compatibility_violation(alg) {
        return Err(Error::NotCompatible { op });
    }
    let reps = theta.representatives();
    let m = reps.len();
    let mut ops = Vec::with_capacity(alg.ops.len());
    for op in &alg.ops {
        let k = op.arity;
        let entries = m.pow(k as u32);
        let mut table = Vec::with_capacity(entries);
        let mut args = vec![0usize; k];
        for idx in 0..entries {
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = reps[rest % m];
                rest /= m;
            }
            table.push(theta.block_of(op.apply(&args)));
        }
        ops.push((op.name.clone(), k, table));
    }
    let labels = alg
        .element_names
        .as_ref()
        .map(|names| reps.iter().map(|&r| names[r].clone()).collect());
    let target = FiniteAlgebra::new(format!("{}/{}", alg.name, theta), m, ops, labels)?;
    #[cfg(debug_assertions)]
    for op in &alg.ops {
        if op.arity == 2 {
            for a in 0..alg.size {
                for b in 0..alg.size {
                    let lhs = theta.block_of(op.binary(a, b));
                    let rhs = target
                        .op(&op.name)
                        .expect("same signature")
                        .binary(theta.block_of(a), theta.block_of(b));
                    debug_assert_eq!(lhs, rhs);
                }
            }
        }
    }
    Ok(QuotientMap {
        theta: theta.clone(),
        target,
        projection: theta.blocks().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l2() -> FiniteAlgebra {
        FiniteAlgebra::from_binary_fns(
            "L2",
            2,
            &[("join", &|a, b| a.max(b)), ("meet", &|a, b| a.min(b))],
            None,
        )
        .unwrap()
    }

    #[test]
    fn validation_reports_offending_entry() {
        let mut table = vec![0; 25];
        table[13] = 7;
        let err = FiniteAlgebra::new("bad", 5, vec![("join".into(), 2, table)], None).unwrap_err();
        assert_eq!(
            err,
            Error::EntryOutOfRange {
                op: "join".into(),
                index: 13,
                value: 7,
                size: 5
            }
        );
        assert!(err.to_string().contains("entry out of range"));
    }

    #[test]
    fn validation_rejects_length_and_duplicates() {
        let err = FiniteAlgebra::new("bad", 2, vec![("f".into(), 2, vec![0; 3])], None).unwrap_err();
        assert!(matches!(err, Error::WrongTableLength { expected: 4, found: 3, .. }));
        let err = FiniteAlgebra::new(
            "bad",
            2,
            vec![("f".into(), 1, vec![0, 1]), ("f".into(), 1, vec![1, 0])],
            None,
        )
        .unwrap_err();
        assert_eq!(err, Error::DuplicateOp("f".into()));
        assert_eq!(FiniteAlgebra::new("e", 0, vec![], None).unwrap_err(), Error::EmptyCarrier);
    }

    #[test]
    fn codec_round_trip() {
        let codec = ProductCodec::new(vec![3, 2, 4]);
        for i in 0..codec.total() {
            let t = codec.decode(i);
            assert_eq!(codec.encode(&t), i);
            for (f, &x) in t.iter().enumerate() {
                assert_eq!(codec.component(i, f), x);
            }
        }
        assert_eq!(codec.decode(5), vec![0, 1, 1]);
    }

    #[test]
    fn product_of_two_chains_is_the_square() {
        let (sq, codec) = product(&[l2(), l2()]).unwrap();
        assert_eq!(sq.size(), 4);
        let join = sq.op("join").unwrap();
        let a = codec.encode(&[1, 0]);
        let b = codec.encode(&[0, 1]);
        assert_eq!(join.binary(a, b), codec.encode(&[1, 1]));
        assert_eq!(sq.label(a), "(1,0)");
    }

    #[test]
    fn unary_product_is_the_factor() {
        let (p, _) = product(&[l2()]).unwrap();
        assert_eq!(p.ops(), l2().ops());
    }

    #[test]
    fn product_rejects_signature_mismatch() {
        let other = FiniteAlgebra::new("u", 2, vec![("f".into(), 1, vec![1, 0])], None).unwrap();
        assert!(matches!(product(&[l2(), other]), Err(Error::SignatureMismatch(_))));
        assert_eq!(product(&[]).unwrap_err(), Error::EmptyProduct);
    }

    #[test]
    fn product_and_projection_of_congruences() {
        let codec = ProductCodec::new(vec![2, 3]);
        let t1 = Congruence::full(2);
        let t2 = Congruence::from_labels(&[0, 1, 1]);
        let p = product_congruence(&codec, &[t1.clone(), t2.clone()]).unwrap();
        assert_eq!(p.block_count(), 2);
        assert_eq!(project_congruence(&codec, &p, 0).unwrap(), t1);
        assert_eq!(project_congruence(&codec, &p, 1).unwrap(), t2);
        assert!(project_congruence(&codec, &p, 2).is_err());
        assert!(product_congruence(&codec, &[t2]).is_err());
    }

    #[test]
    fn quotient_by_identity_is_isomorphic_copy() {
        let q = quotient(&l2(), &Congruence::identity(2)).unwrap();
        assert_eq!(q.target.ops(), l2().ops());
        assert_eq!(q.projection, vec![0, 1]);
    }

    #[test]
    fn quotient_rejects_incompatible_partition() {
        // {0,1}{2} on the 3-chain is fine, {0,2}{1} is not convex
        let chain = FiniteAlgebra::from_binary_fns(
            "C3",
            3,
            &[("join", &|a, b| a.max(b)), ("meet", &|a, b| a.min(b))],
            None,
        )
        .unwrap();
        assert!(quotient(&chain, &Congruence::from_labels(&[0, 0, 1])).is_ok());
        let err = quotient(&chain, &Congruence::from_labels(&[0, 1, 0])).unwrap_err();
        assert!(matches!(err, Error::NotCompatible { .. }));
    }
}
