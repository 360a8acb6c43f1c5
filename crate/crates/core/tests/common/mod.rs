#![allow(dead_code)]

use congrkit::catalog::{self, all_lattices, all_residuated, random_algebras, Signature};
use congrkit::{product, FiniteAlgebra, FiniteLattice};

/// Algebras of every catalog fixture in the corpus.
pub fn catalog_algebras() -> Vec<FiniteAlgebra> {
    catalog::corpus_keys()
        .into_iter()
        .map(|k| catalog::fixture(k).expect("fixture").algebra)
        .collect()
}

pub fn catalog_lattices() -> Vec<FiniteAlgebra> {
    catalog_algebras()
        .into_iter()
        .filter(|a| a.ops().len() == 2)
        .collect()
}

pub fn catalog_residuated() -> Vec<FiniteAlgebra> {
    catalog_algebras()
        .into_iter()
        .filter(|a| a.op("prod").is_some())
        .collect()
}

/// Every lattice with at most `n` elements, up to isomorphism.
pub fn lattices_up_to(n: usize) -> Vec<FiniteLattice> {
    (1..=n).flat_map(all_lattices).collect()
}

pub fn residuated_up_to(n: usize) -> Vec<FiniteAlgebra> {
    (2..=n).flat_map(all_residuated).collect()
}

/// Seeded random lattices of sizes 2..=6.
pub fn random_lattices(count: usize, seed: u64) -> Vec<FiniteAlgebra> {
    (0..count)
        .map(|i| {
            let size = 2 + i % 5;
            random_algebras(Signature::Lattice, size, Some(1), seed.wrapping_add(i as u64))
                .expect("lattice")
                .remove(0)
        })
        .collect()
}

/// Two-factor products of small algebras with equal signatures.
pub fn small_products() -> Vec<FiniteAlgebra> {
    let small: Vec<FiniteAlgebra> = lattices_up_to(4)
        .iter()
        .filter(|l| l.size() >= 2)
        .map(|l| l.to_algebra())
        .collect();
    let mut out = Vec::new();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            out.push(product(&[a.clone(), b.clone()]).expect("product").0);
        }
    }
    let pentagon = catalog::fixture("pentagon").unwrap().algebra;
    let diamond = catalog::fixture("diamond").unwrap().algebra;
    out.push(product(&[pentagon.clone(), diamond]).unwrap().0);
    out.push(product(&[pentagon, FiniteLattice::from_covers("L2", 2, &[(0, 1)], None).unwrap().to_algebra()]).unwrap().0);
    let g3 = catalog::fixture("godel_3").unwrap().algebra;
    let a = catalog::fixture("residuated_a").unwrap().algebra;
    out.push(product(&[g3, a]).unwrap().0);
    out
}

/// Congruence-distributive corpus: catalog fixtures, all lattices up to six
/// elements, residuated lattices up to five and a few products.
pub fn cd_corpus() -> Vec<FiniteAlgebra> {
    let mut out = catalog_algebras();
    out.extend(lattices_up_to(6).iter().map(|l| l.to_algebra()));
    out.extend(residuated_up_to(5));
    out.extend(small_products());
    out
}
