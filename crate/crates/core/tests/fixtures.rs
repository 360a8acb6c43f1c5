use std::path::PathBuf;

use congrkit::catalog::{
    self, boolean_lattice, check_fixture, diamond, fixture, lattice_z, ordinal_sum, ordinal_sum_congruence, pentagon,
    residuated_a,
};
use congrkit::cblp::{algebra_has_cblp, boolean_congruences};
use congrkit::iso::are_isomorphic;
use congrkit::lattice::chain;
use congrkit::reslat::validate_residuated;
use congrkit::text::{parse_algebra, parse_document, parse_lattice, write_algebra, write_lattice, Document};
use congrkit::{con, quotient, Congruence, Error, FiniteLattice};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn iso(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    are_isomorphic(&a.to_algebra(), &b.to_algebra(), 12).unwrap()
}

#[test]
fn fixture_files_match_the_catalog() {
    for key in catalog::corpus_keys() {
        let path = fixtures_dir().join(format!("{key}.alg"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let f = fixture(key).unwrap();
        assert_eq!(text, write_algebra(&f.algebra), "{key}");
        assert_eq!(parse_algebra(&text).unwrap(), f.algebra, "{key}");
    }
    let lat = std::fs::read_to_string(fixtures_dir().join("pentagon.lat")).unwrap();
    let parsed = parse_lattice(&lat).unwrap();
    assert!(iso(&parsed, &pentagon()));
    assert!(matches!(parse_document(&lat).unwrap(), Document::Lattice(_)));
}

#[test]
fn catalog_facts_hold() {
    for key in catalog::keys() {
        let f = fixture(&key).unwrap();
        for check in check_fixture(&f).unwrap() {
            assert!(check.ok, "{key}: {} expected {:?}, got {:?}", check.name, check.expected, check.actual);
        }
    }
}

#[test]
fn unknown_keys_are_rejected() {
    assert!(matches!(fixture("hexagon"), Err(Error::UnknownFixture(_))));
    assert!(matches!(fixture("boolean_9"), Err(Error::UnknownFixture(_))));
    assert!(matches!(fixture("chain_0"), Err(Error::UnknownFixture(_))));
}

#[test]
fn text_round_trip() {
    for key in catalog::keys() {
        let alg = fixture(&key).unwrap().algebra;
        assert_eq!(parse_algebra(&write_algebra(&alg)).unwrap(), alg);
        if let Ok(l) = FiniteLattice::from_algebra(&alg) {
            let back = parse_lattice(&write_lattice(&l)).unwrap();
            assert_eq!(back.to_algebra().ops(), l.to_algebra().ops(), "{key}");
        }
    }
}

#[test]
fn ordinal_sum_shapes() {
    let l2 = chain(2);
    let z = ordinal_sum(&pentagon(), &l2).unwrap().lattice;
    assert!(iso(&z, &lattice_z()));
    assert!(iso(&ordinal_sum(&l2, &l2).unwrap().lattice, &chain(3)));
    let l2sq_l2 = ordinal_sum(&boolean_lattice(2), &l2).unwrap().lattice;
    let a = validate_residuated(&residuated_a()).unwrap();
    assert!(iso(&l2sq_l2, a.lattice()));
    assert_eq!(z.size(), 6);
}

#[test]
fn ordinal_sum_congruences() {
    let lattices = [chain(2), chain(3), diamond(), pentagon(), boolean_lattice(2)];
    for l in &lattices {
        for m in &lattices {
            let sum = ordinal_sum(l, m).unwrap();
            let c = con(&sum.lattice.to_algebra());
            let cl = con(&l.to_algebra());
            let cm = con(&m.to_algebra());
            let mut image = Vec::new();
            for i in 0..cl.len() {
                for j in 0..cm.len() {
                    let theta = ordinal_sum_congruence(&sum, cl.get(i), cm.get(j)).unwrap();
                    image.push(((i, j), c.index_of(&theta).expect("φ∔ψ is a congruence")));
                }
            }
            let mut distinct: Vec<usize> = image.iter().map(|&(_, k)| k).collect();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(distinct.len(), c.len());
            for &((i, j), a) in &image {
                for &((k, l2), b) in &image {
                    assert_eq!(c.leq(a, b), cl.leq(i, k) && cm.leq(j, l2));
                }
            }

            let n = sum.lattice.size();
            let delta_full = ordinal_sum_congruence(&sum, &Congruence::identity(l.size()), &Congruence::full(m.size())).unwrap();
            let q = quotient(&sum.lattice.to_algebra(), &delta_full).unwrap();
            assert!(are_isomorphic(&q.target, &l.to_algebra(), 12).unwrap());
            let full_delta = ordinal_sum_congruence(&sum, &Congruence::full(l.size()), &Congruence::identity(m.size())).unwrap();
            let q = quotient(&sum.lattice.to_algebra(), &full_delta).unwrap();
            assert!(are_isomorphic(&q.target, &m.to_algebra(), 12).unwrap());
            let top = ordinal_sum_congruence(&sum, &Congruence::full(l.size()), &Congruence::full(m.size())).unwrap();
            assert_eq!(top, Congruence::full(n));
        }
    }
}

#[test]
fn pentagon_congruences_inside_z() {
    let sum = ordinal_sum(&pentagon(), &chain(2)).unwrap();
    let p = con(&pentagon().to_algebra());
    let labels = pentagon().to_algebra().labels();
    let gamma = p.elements().iter().find(|t| t.render(&labels) == "{0}{x}{y,z}{1}").unwrap();
    let zeta3 = ordinal_sum_congruence(&sum, gamma, &Congruence::identity(2)).unwrap();
    assert_eq!(zeta3.render(&lattice_z().to_algebra().labels()), "{0}{x}{y,z}{u}{1}");
    let zeta4 = ordinal_sum_congruence(&sum, gamma, &Congruence::full(2)).unwrap();
    assert_eq!(zeta4.render(&lattice_z().to_algebra().labels()), "{0}{x}{y,z}{u,1}");
}

#[test]
fn sums_of_distributive_lattices_and_diamonds() {
    let parts = [chain(2), chain(3), diamond(), boolean_lattice(2)];
    for l in &parts {
        for m in &parts {
            let sum = ordinal_sum(l, m).unwrap().lattice;
            let c = con(&sum.to_algebra());
            assert_eq!(boolean_congruences(&c).len(), c.len());
            assert!(algebra_has_cblp(&c).holds);
        }
    }
    for other in &parts {
        for sum in [ordinal_sum(&pentagon(), other), ordinal_sum(other, &pentagon())] {
            let c = con(&sum.unwrap().lattice.to_algebra());
            assert!(!algebra_has_cblp(&c).holds);
        }
    }
}
