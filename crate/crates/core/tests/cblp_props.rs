mod common;

use congrkit::catalog::{fixture, ordinal_sum};
use congrkit::cblp::{
    algebra_has_cblp, boolean_above, boolean_congruences, cblp_equivalents, has_cblp, is_local, satisfies_star,
    semilocal_decompose, spec_topology, spectra, u_image, v_image, DecompositionOutcome,
};
use congrkit::{con, product, quotient, CongruenceLattice, FiniteAlgebra, FiniteLattice};

fn corpus() -> Vec<CongruenceLattice> {
    common::cd_corpus().iter().map(con).collect()
}

/// Catalog lattices with and without CBLP, for products and sums.
const MIXED: [&str; 7] = ["l2", "chain_3", "diamond", "pentagon", "lattice_e", "lattice_z", "boolean_2"];

fn mixed_lattices() -> Vec<FiniteLattice> {
    MIXED
        .iter()
        .map(|k| FiniteLattice::from_algebra(&fixture(k).unwrap().algebra).unwrap())
        .collect()
}

fn cblp(alg: &FiniteAlgebra) -> bool {
    algebra_has_cblp(&con(alg)).holds
}

#[test]
fn formulations_agree() {
    for c in corpus() {
        let eq = cblp_equivalents(&c);
        assert!(eq.agree(), "{}: {eq:?}", c.algebra().name());
    }
}

#[test]
fn quotient_side_and_interval_side_agree() {
    for c in corpus() {
        for t in 0..c.len() {
            let qi = u_image(&c, t).unwrap();
            let above = boolean_above(&c, t);
            assert_eq!(boolean_congruences(&qi.con).len(), above.len());
            assert_eq!(qi.image.len(), v_image(&c, t).len());
            assert_eq!(has_cblp(&c, t).holds, qi.image.len() == above.len());
        }
    }
}

#[test]
fn prime_and_maximal_congruences_lift() {
    for c in corpus() {
        let sp = spectra(&c);
        for &p in sp.spec.iter().chain(&sp.max) {
            let mut expected = vec![p, c.top()];
            expected.sort_unstable();
            assert_eq!(boolean_above(&c, p), expected);
            assert!(has_cblp(&c, p).holds);
        }
        assert!(has_cblp(&c, c.bottom()).holds && has_cblp(&c, c.top()).holds);
        assert!(sp.max.iter().all(|m| sp.spec.contains(m)));
    }
}

#[test]
fn boolean_congruences_are_compact() {
    for c in corpus() {
        let compact = c.compact_elements();
        assert!(boolean_congruences(&c).iter().all(|b| compact.contains(b)));
        assert!(c.hypothesis_h());
    }
}

#[test]
fn distributive_lattices_have_cblp() {
    for l in common::lattices_up_to(6).iter().filter(|l| l.is_distributive()) {
        let c = con(&l.to_algebra());
        assert!(algebra_has_cblp(&c).holds);
        let mut compact = c.compact_elements();
        compact.sort_unstable();
        assert_eq!(boolean_congruences(&c), compact);
    }
}

#[test]
fn clopens_come_from_boolean_congruences() {
    for c in corpus() {
        let t = spec_topology(&c);
        assert!(t.is_topology());
        let mut from_boolean: Vec<Vec<usize>> = boolean_congruences(&c).iter().map(|&b| t.closed[b].clone()).collect();
        from_boolean.sort();
        from_boolean.dedup();
        let mut clopens = t.clopens.clone();
        clopens.sort();
        assert_eq!(clopens, from_boolean, "{}", c.algebra().name());
    }
}

#[test]
fn quotients_inherit_cblp() {
    for c in corpus().into_iter().filter(|c| c.algebra().size() <= 12) {
        let all_quotients = (0..c.len()).all(|t| cblp(&quotient(c.algebra(), c.get(t)).unwrap().target));
        assert_eq!(algebra_has_cblp(&c).holds, all_quotients, "{}", c.algebra().name());
    }
}

#[test]
fn products_have_cblp_iff_factors_do() {
    let base = mixed_lattices();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let (a, b) = (a.to_algebra(), b.to_algebra());
            let (p, _) = product(&[a.clone(), b.clone()]).unwrap();
            assert_eq!(cblp(&p), cblp(&a) && cblp(&b), "{}", p.name());
        }
    }
    let r: Vec<FiniteAlgebra> = ["godel_3", "residuated_a", "lukasiewicz_3"]
        .iter()
        .map(|k| fixture(k).unwrap().algebra)
        .collect();
    let (p, _) = product(&r).unwrap();
    assert_eq!(cblp(&p), r.iter().all(cblp));
}

#[test]
fn ordinal_sums() {
    let base = mixed_lattices();
    for (l, kl) in base.iter().zip(MIXED) {
        for (m, km) in base.iter().zip(MIXED) {
            let sum = ordinal_sum(l, m).unwrap();
            let c = con(&sum.lattice.to_algebra());
            let cl = con(&l.to_algebra());
            let cm = con(&m.to_algebra());
            assert_eq!(c.len(), cl.len() * cm.len());
            let holds = algebra_has_cblp(&c).holds;
            if holds {
                assert!(cblp(&l.to_algebra()) && cblp(&m.to_algebra()));
            }
            let has_pentagon = [kl, km].iter().any(|k| *k == "pentagon" || *k == "lattice_z");
            if has_pentagon {
                assert!(!holds, "{}", sum.lattice.name());
            }
            let boolean_con = [l, m].iter().all(|x| x.is_distributive() || (x.size() == 5 && x.is_modular()));
            if boolean_con {
                assert_eq!(boolean_congruences(&c).len(), c.len());
                assert!(holds);
            }
        }
    }
}

#[test]
fn radical_absorbs_only_the_top() {
    for c in corpus() {
        let rad = spectra(&c).rad;
        for t in 0..c.len() {
            if c.join(t, rad) == c.top() {
                assert_eq!(t, c.top());
            }
        }
    }
}

#[test]
fn normal_algebras_lift_at_the_radical() {
    for c in corpus() {
        if c.lattice().is_normal() {
            assert!(has_cblp(&c, spectra(&c).rad).holds, "{}", c.algebra().name());
        }
        if algebra_has_cblp(&c).holds {
            assert!(c.lattice().is_normal());
        }
    }
}

#[test]
fn star_implies_cblp_and_transfers() {
    for c in corpus() {
        let star = satisfies_star(&c);
        if star.holds {
            assert!(algebra_has_cblp(&c).holds);
        }
        for (t, w) in star.witnesses.iter().enumerate() {
            if let Some((a, b)) = *w {
                assert_eq!(c.join(a, b), t);
                assert!(c.leq(a, spectra(&c).rad));
            }
        }
        if c.algebra().size() <= 10 {
            let quotients = (0..c.len())
                .all(|t| satisfies_star(&con(&quotient(c.algebra(), c.get(t)).unwrap().target)).holds);
            assert_eq!(star.holds, quotients, "{}", c.algebra().name());
        }
    }
    let base = mixed_lattices();
    for a in &base {
        for b in &base {
            let (a, b) = (a.to_algebra(), b.to_algebra());
            let (p, _) = product(&[a.clone(), b.clone()]).unwrap();
            let star = |x: &FiniteAlgebra| satisfies_star(&con(x)).holds;
            assert_eq!(star(&p), star(&a) && star(&b));
        }
    }
}

#[test]
fn local_algebras() {
    for c in corpus() {
        let top = c.top();
        let id_local = (0..c.len()).all(|x| (0..c.len()).all(|y| c.join(x, y) != top || x == top || y == top));
        if is_local(&c) {
            assert!(algebra_has_cblp(&c).holds);
            assert!(id_local);
        }
        if c.algebra().size() > 1 {
            assert_eq!(is_local(&c), id_local);
        }
    }
}

#[test]
fn decomposition_of_arithmetical_algebras() {
    for c in corpus().into_iter().filter(|c| c.algebra().size() > 1) {
        let outcome = semilocal_decompose(&c);
        if !c.is_arithmetical() {
            assert!(outcome.is_err());
            continue;
        }
        match outcome.unwrap() {
            DecompositionOutcome::Decomposed(d) => {
                assert!(algebra_has_cblp(&c).holds);
                assert_eq!(d.factors.len(), spectra(&c).max.len());
                for f in &d.factors {
                    assert!(is_local(&con(&f.target)));
                }
                assert_eq!(d.product.size(), c.algebra().size());
            }
            DecompositionOutcome::NoCblp { theta, witness } => {
                assert!(!has_cblp(&c, theta).holds);
                assert!(!v_image(&c, theta).contains(&witness));
            }
        }
    }
    let pentagon = con(&fixture("pentagon").unwrap().algebra);
    assert!(pentagon.is_arithmetical());
    assert!(matches!(semilocal_decompose(&pentagon).unwrap(), DecompositionOutcome::NoCblp { .. }));
}
