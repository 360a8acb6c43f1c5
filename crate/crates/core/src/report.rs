//! Serializable analysis reports with a plain-text rendering.
//!
//! Partitions appear as arrays of blocks of element labels.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cblp::{
    algebra_has_cblp, cblp_equivalents_with, satisfies_star, semilocal_decompose, spectra, u_image,
    CblpEquivalents, DecompositionOutcome,
};
use crate::con::{con_bruteforce, CongruenceLattice};
use crate::error::{Error, Result};
use crate::reslat::{Classification, ResiduatedLattice};
use crate::Caps;

pub type Partition = Vec<Vec<String>>;

/// `{0,y,z}{x,1}` style rendering.
pub fn braces(p: &Partition) -> String {
    p.iter().map(|b| format!("{{{}}}", b.join(","))).collect()
}

fn partition(c: &CongruenceLattice, i: usize) -> Partition {
    c.get(i).labelled_classes(&c.algebra().labels())
}

/// Compares `Con(A)` with the brute-force enumeration of all partitions.
pub fn oracle_agrees(c: &CongruenceLattice, cap: usize) -> Result<bool> {
    let brute = con_bruteforce(c.algebra(), cap)?;
    Ok(brute.as_slice() == c.elements())
}

#[derive(Clone, Debug, Serialize)]
pub struct ConReport {
    pub algebra: String,
    pub congruence_count: usize,
    pub congruences: Vec<Partition>,
    pub distributive: bool,
    pub permutable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreed: Option<bool>,
}

impl ConReport {
    pub fn new(c: &CongruenceLattice) -> Self {
        ConReport {
            algebra: c.algebra().name().to_string(),
            congruence_count: c.len(),
            congruences: (0..c.len()).map(|i| partition(c, i)).collect(),
            distributive: c.is_distributive(),
            permutable: c.is_permutable(),
            oracle_agreed: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("algebra {}\ncongruences {}\n", self.algebra, self.congruence_count);
        for p in &self.congruences {
            let _ = writeln!(out, "  {}", braces(p));
        }
        let _ = writeln!(out, "distributive {}\npermutable {}", self.distributive, self.permutable);
        if let Some(ok) = self.oracle_agreed {
            let _ = writeln!(out, "oracle_agreed {ok}");
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectraReport {
    pub algebra: String,
    pub spec: Vec<Partition>,
    pub max: Vec<Partition>,
    pub rad: Partition,
    pub local: bool,
}

impl SpectraReport {
    pub fn new(c: &CongruenceLattice) -> Self {
        let sp = spectra(c);
        SpectraReport {
            algebra: c.algebra().name().to_string(),
            spec: sp.spec.iter().map(|&i| partition(c, i)).collect(),
            max: sp.max.iter().map(|&i| partition(c, i)).collect(),
            rad: partition(c, sp.rad),
            local: sp.max.len() == 1,
        }
    }

    pub fn text(&self) -> String {
        let list = |ps: &[Partition]| ps.iter().map(braces).collect::<Vec<_>>().join(" ");
        format!(
            "algebra {}\nspec {}\nmax {}\nrad {}\nlocal {}\n",
            self.algebra,
            list(&self.spec),
            list(&self.max),
            braces(&self.rad),
            self.local
        )
    }
}

/// Why a congruence fails CBLP: a Boolean element of `[θ)` outside the image
/// of `B(Con(A))`, and that image computed in `Con(A/θ)`.
#[derive(Clone, Debug, Serialize)]
pub struct CblpWitness {
    pub boolean: Partition,
    pub quotient_image: Vec<Partition>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceVerdict {
    pub partition: Partition,
    pub cblp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CblpWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub maximal: Partition,
    pub alpha: Partition,
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CblpReportJson {
    pub algebra: String,
    pub cblp: bool,
    pub star: bool,
    pub spec: Vec<Partition>,
    pub max: Vec<Partition>,
    pub rad: Partition,
    pub per_congruence: Vec<CongruenceVerdict>,
    pub equivalents: CblpEquivalents,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<FactorReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreed: Option<bool>,
}

impl CblpReportJson {
    /// Full CBLP analysis. The decomposition is included for arithmetical
    /// algebras with CBLP.
    pub fn new(c: &CongruenceLattice, caps: &Caps) -> Result<Self> {
        let sp = spectra(c);
        let report = algebra_has_cblp(c);
        let mut per_congruence = Vec::with_capacity(c.len());
        for v in &report.per_congruence {
            let witness = match v.witness {
                Some(w) => {
                    let img = u_image(c, v.theta)?;
                    Some(CblpWitness {
                        boolean: partition(c, w),
                        quotient_image: img.image.iter().map(|&i| partition(&img.con, i)).collect(),
                    })
                }
                None => None,
            };
            per_congruence.push(CongruenceVerdict {
                partition: partition(c, v.theta),
                cblp: v.holds,
                witness,
            });
        }
        let decomposition = match semilocal_decompose(c) {
            Ok(DecompositionOutcome::Decomposed(d)) => Some(
                d.maximal
                    .iter()
                    .zip(&d.alphas)
                    .zip(&d.factors)
                    .map(|((&m, &a), q)| FactorReport {
                        maximal: partition(c, m),
                        alpha: partition(c, a),
                        size: q.target.size(),
                        elements: q.target.labels(),
                    })
                    .collect(),
            ),
            Ok(DecompositionOutcome::NoCblp { .. }) | Err(Error::NotArithmetical) | Err(Error::TrivialAlgebra) => None,
            Err(e) => return Err(e),
        };
        Ok(CblpReportJson {
            algebra: c.algebra().name().to_string(),
            cblp: report.holds,
            star: satisfies_star(c).holds,
            spec: sp.spec.iter().map(|&i| partition(c, i)).collect(),
            max: sp.max.iter().map(|&i| partition(c, i)).collect(),
            rad: partition(c, sp.rad),
            per_congruence,
            equivalents: cblp_equivalents_with(c, caps.nary_splitting),
            decomposition,
            oracle_agreed: None,
        })
    }

    pub fn text(&self) -> String {
        let mut out = format!("algebra {}\ncblp {}\nstar {}\n", self.algebra, self.cblp, self.star);
        let _ = writeln!(out, "max {}", self.max.iter().map(braces).collect::<Vec<_>>().join(" "));
        let _ = writeln!(out, "rad {}", braces(&self.rad));
        for v in &self.per_congruence {
            let mark = if v.cblp { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {mark} {}", braces(&v.partition));
            if let Some(w) = &v.witness {
                let image: Vec<String> = w.quotient_image.iter().map(braces).collect();
                let _ = write!(out, "  witness {}  image {}", braces(&w.boolean), image.join(" "));
            }
            out.push('\n');
        }
        let e = &self.equivalents;
        let _ = writeln!(
            out,
            "equivalents cblp={} b_normal={} nary_splitting={} compact_pairs={} nary_compact={} strongly_zero_dimensional={}",
            e.cblp, e.b_normal, e.nary_splitting, e.compact_pairs, e.nary_compact, e.strongly_zero_dimensional
        );
        if let Some(factors) = &self.decomposition {
            let _ = writeln!(out, "decomposition {} factors", factors.len());
            for f in factors {
                let _ = writeln!(out, "  A/{} ({} elements: {})", braces(&f.alpha), f.size, f.elements.join(" "));
            }
        }
        if let Some(ok) = self.oracle_agreed {
            let _ = writeln!(out, "oracle_agreed {ok}");
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StarReportJson {
    pub algebra: String,
    pub star: bool,
    pub rad: Partition,
    /// Per congruence: `[α, β]` with `θ = α ∨ β`, or null.
    pub decompositions: Vec<(Partition, Option<(Partition, Partition)>)>,
}

impl StarReportJson {
    pub fn new(c: &CongruenceLattice) -> Self {
        let s = satisfies_star(c);
        StarReportJson {
            algebra: c.algebra().name().to_string(),
            star: s.holds,
            rad: partition(c, spectra(c).rad),
            decompositions: s
                .witnesses
                .iter()
                .enumerate()
                .map(|(i, w)| (partition(c, i), w.map(|(a, b)| (partition(c, a), partition(c, b)))))
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("algebra {}\nstar {}\nrad {}\n", self.algebra, self.star, braces(&self.rad));
        for (theta, w) in &self.decompositions {
            match w {
                Some((a, b)) => {
                    let _ = writeln!(out, "  {} = {} v {}", braces(theta), braces(a), braces(b));
                }
                None => {
                    let _ = writeln!(out, "  {} has no decomposition", braces(theta));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterEntry {
    pub label: String,
    pub members: Vec<String>,
    pub blp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub congruence: Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlpReportJson {
    pub algebra: String,
    pub blp: bool,
    pub boolean_center: Vec<String>,
    pub filters: Vec<FilterEntry>,
}

impl BlpReportJson {
    pub fn new(r: &ResiduatedLattice) -> Result<Self> {
        let labels = r.algebra().labels();
        let report = r.algebra_has_blp()?;
        let mut filters = Vec::with_capacity(report.per_filter.len());
        for v in &report.per_filter {
            let witness = match v.witness {
                Some(w) => Some(r.quotient_by_filter(&v.filter)?.0.label(w)),
                None => None,
            };
            filters.push(FilterEntry {
                label: r.filter_label(&v.filter),
                members: v.filter.members().iter().map(|&x| labels[x].clone()).collect(),
                blp: v.holds,
                witness,
                congruence: r.cong_of_filter(&v.filter)?.labelled_classes(&labels),
            });
        }
        Ok(BlpReportJson {
            algebra: r.algebra().name().to_string(),
            blp: report.holds,
            boolean_center: r.boolean_center().iter().map(|&x| labels[x].clone()).collect(),
            filters,
        })
    }

    pub fn failures(&self) -> Vec<&str> {
        self.filters.iter().filter(|f| !f.blp).map(|f| f.label.as_str()).collect()
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "algebra {}\nblp {}\nboolean_center {}\n",
            self.algebra,
            self.blp,
            self.boolean_center.join(" ")
        );
        for f in &self.filters {
            let mark = if f.blp { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {mark} {} = {{{}}}", f.label, f.members.join(","));
            if let Some(w) = &f.witness {
                let _ = write!(out, "  witness {w}/F");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub algebra: String,
    #[serde(flatten)]
    pub classification: Classification,
    pub prime_filters: Vec<String>,
    pub maximal_filters: Vec<String>,
}

impl ClassifyReport {
    pub fn new(r: &ResiduatedLattice) -> Result<Self> {
        Ok(ClassifyReport {
            algebra: r.algebra().name().to_string(),
            classification: r.classify()?,
            prime_filters: r.prime_filters().iter().map(|f| r.filter_label(f)).collect(),
            maximal_filters: r.maximal_filters().iter().map(|f| r.filter_label(f)).collect(),
        })
    }

    pub fn text(&self) -> String {
        let c = &self.classification;
        format!(
            "algebra {}\ngodel {}\nbl {}\nmv {}\ngelfand {}\nfilt_normal {}\nprime_filters {}\nmaximal_filters {}\n",
            self.algebra,
            c.is_godel,
            c.is_bl,
            c.is_mv,
            c.is_gelfand,
            c.filt_normal,
            self.prime_filters.join(" "),
            self.maximal_filters.join(" ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;
    use crate::con::con;
    use crate::reslat::validate_residuated;

    #[test]
    fn pentagon_report_names_gamma() {
        let c = con(&fixture("pentagon").unwrap().algebra);
        let r = CblpReportJson::new(&c, &Caps::default()).unwrap();
        let failing: Vec<String> = r
            .per_congruence
            .iter()
            .filter(|v| !v.cblp)
            .map(|v| braces(&v.partition))
            .collect();
        assert_eq!(failing, vec!["{0}{x}{y,z}{1}"]);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["algebra", "cblp", "star", "spec", "max", "rad", "per_congruence", "equivalents"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert!(json.get("decomposition").is_none());
    }

    #[test]
    fn z_witness_image_is_trivial_pair() {
        let c = con(&fixture("lattice_z").unwrap().algebra);
        let r = CblpReportJson::new(&c, &Caps::default()).unwrap();
        let zeta4 = r
            .per_congruence
            .iter()
            .find(|v| braces(&v.partition) == "{0}{x}{y,z}{u,1}")
            .unwrap();
        let w = zeta4.witness.as_ref().unwrap();
        assert_eq!(w.quotient_image.len(), 2);
    }

    #[test]
    fn residuated_example_fails_only_at_c() {
        let r = validate_residuated(&fixture("residuated_a").unwrap().algebra).unwrap();
        let rep = BlpReportJson::new(&r).unwrap();
        assert_eq!(rep.failures(), vec!["[c)"]);
    }
}
