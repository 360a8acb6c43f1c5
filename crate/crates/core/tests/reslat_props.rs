mod common;

use congrkit::catalog::{fixture, godel_chain, lukasiewicz_chain};
use congrkit::reslat::{validate_residuated, ResiduatedLattice};
use congrkit::{con, product, FiniteAlgebra};

fn corpus() -> Vec<ResiduatedLattice> {
    let mut algs: Vec<FiniteAlgebra> = common::residuated_up_to(5);
    algs.extend(common::catalog_residuated());
    algs.extend((2..=6).map(godel_chain));
    algs.extend((2..=6).map(lukasiewicz_chain));
    let a = fixture("residuated_a").unwrap().algebra;
    let g3 = godel_chain(3);
    let l3 = lukasiewicz_chain(3);
    algs.push(product(&[g3.clone(), a.clone()]).unwrap().0);
    algs.push(product(&[l3.clone(), g3]).unwrap().0);
    algs.push(product(&[l3, a]).unwrap().0);
    algs.iter().map(|x| validate_residuated(x).unwrap()).collect()
}

/// Filters by enumerating every subset of the carrier.
fn filters_by_subsets(r: &ResiduatedLattice) -> Vec<Vec<usize>> {
    let n = r.size();
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<usize>>())
        .filter(|s| {
            s.contains(&r.one())
                && s.iter().all(|&a| (0..n).all(|y| !r.leq(a, y) || s.contains(&y)))
                && s.iter().all(|&a| s.iter().all(|&b| s.contains(&r.prod(a, b))))
        })
        .collect();
    out.sort();
    out
}

#[test]
fn filters_match_subset_enumeration() {
    for r in corpus().iter().filter(|r| r.size() <= 12) {
        let mut ours: Vec<Vec<usize>> = r.filters().iter().map(|f| f.members().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, filters_by_subsets(r), "{}", r.algebra().name());
        // finite residuated lattices have only principal filters
        assert_eq!(r.principal_filters().len(), r.filters().len());
    }
}

#[test]
fn filters_and_congruences_correspond() {
    for r in corpus() {
        let checks = r.blp_cblp_crosscheck().unwrap();
        assert_eq!(checks.len(), con(r.algebra()).len());
        assert!(checks.iter().all(|c| c.blp == c.cblp));
    }
}

#[test]
fn quotients_of_principal_filters() {
    for r in corpus() {
        for f in r.filters() {
            let (target, q) = r.quotient_by_filter(&f).unwrap();
            for a in 0..r.size() {
                let mut gens = f.members().to_vec();
                gens.push(a);
                let mut joined: Vec<usize> = r.filter_generated(&gens).members().iter().map(|&x| q.project(x)).collect();
                joined.sort_unstable();
                joined.dedup();
                assert_eq!(target.principal_filter(q.project(a)).members(), joined.as_slice());
            }
        }
    }
}

#[test]
fn boolean_filters() {
    for r in corpus() {
        assert!(r.boolean_filters_are_principal().unwrap(), "{}", r.algebra().name());
        let filt = r.filt_lattice().unwrap();
        let pfilt = r.pfilt_lattice().unwrap();
        assert_eq!(filt.boolean_center().len(), pfilt.boolean_center().len());
        assert_eq!(filt.boolean_center().len(), r.boolean_center().len());
        // e ↦ [e) reverses order on the Boolean center
        let b = r.boolean_center();
        for &e in &b {
            for &g in &b {
                assert_eq!(r.leq(e, g), r.principal_filter(g).is_subset(&r.principal_filter(e)));
            }
        }
    }
}

#[test]
fn lifting_properties_agree() {
    for r in corpus() {
        let eq = r.blp_equivalents().unwrap();
        assert!(eq.agree(), "{}: {eq:?}", r.algebra().name());
        if eq.blp {
            assert!(r.is_gelfand(), "{}", r.algebra().name());
        }
    }
}

#[test]
fn gelfand_is_normality() {
    for r in corpus() {
        let gelfand = r.is_gelfand();
        assert_eq!(gelfand, r.filt_lattice().unwrap().is_normal());
        assert_eq!(gelfand, r.pfilt_lattice().unwrap().is_normal());
        assert_eq!(gelfand, con(r.algebra()).lattice().is_normal());
        assert_eq!(gelfand, r.reticulation().unwrap().dual().is_normal());
        assert_eq!(gelfand, r.classify().unwrap().filt_normal);
    }
}

#[test]
fn bl_and_mv_algebras() {
    for r in corpus() {
        for f in r.filters() {
            assert!(r.regular_elements_lift(&f).unwrap());
        }
        if r.is_mv() {
            assert!(r.is_bl());
            assert_eq!(r.boolean_center(), r.idempotents());
            for f in r.filters() {
                assert_eq!(r.has_blp(&f).unwrap().holds, r.has_ilp(&f).unwrap());
            }
        }
        if r.is_bl() {
            assert!(r.is_gelfand(), "{}", r.algebra().name());
            let reg = r.regular_elements();
            let expected: Vec<usize> = r.idempotents().into_iter().filter(|x| reg.contains(x)).collect();
            assert_eq!(r.boolean_center(), expected);
            for f in r.filters() {
                if r.has_ilp(&f).unwrap() {
                    assert!(r.has_blp(&f).unwrap().holds);
                }
            }
        }
    }
}

#[test]
fn godel_algebras_have_ilp() {
    for r in corpus().iter().filter(|r| r.is_godel()) {
        assert_eq!(r.idempotents().len(), r.size());
        for f in r.filters() {
            assert!(r.has_ilp(&f).unwrap(), "{}", r.algebra().name());
        }
    }
    let a = validate_residuated(&fixture("residuated_a").unwrap().algebra).unwrap();
    assert!(a.is_godel() && !a.is_bl() && !a.algebra_has_blp().unwrap().holds);
}

#[test]
fn chains_are_classified() {
    for n in 2..=6 {
        let g = validate_residuated(&godel_chain(n)).unwrap();
        let c = g.classify().unwrap();
        assert!(c.is_godel && c.is_bl && (c.is_mv == (n == 2)));
        let l = validate_residuated(&lukasiewicz_chain(n)).unwrap();
        let c = l.classify().unwrap();
        assert!(c.is_mv && c.is_bl && (c.is_godel == (n == 2)));
        assert_eq!(l.filters().len(), 2);
    }
}
