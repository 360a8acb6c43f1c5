//! Congruence lattices of finite algebras, Boolean centers and lifting
//! properties.
//!
//! The crate works with algebras given by explicit operation tables on the
//! carrier `{0..n-1}`. It computes `Con(A)`, decides the Boolean lifting
//! property for congruences (CBLP) and its relatives, analyses finite
//! residuated lattices through their filters, and splits semilocal algebras
//! with CBLP into local factors.

pub mod algebra;
pub mod catalog;
pub mod cblp;
pub mod con;
pub mod congruence;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod reslat;
pub mod report;
pub mod text;

pub use algebra::{product, product_congruence, project_congruence, quotient, validate_algebra};
pub use algebra::{FiniteAlgebra, Operation, ProductCodec, QuotientMap, RawAlgebra};
pub use con::{cg, con, con_bruteforce, crt_solve, CongruenceLattice};
pub use congruence::{Congruence, UnionFind};
pub use error::{Error, Result};
pub use lattice::{BooleanCenter, FiniteLattice, LatticeProfile, NormalityProfile};

/// Size limits for the exhaustive parts of the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest carrier for which the brute-force partition oracle runs.
    pub brute_force: usize,
    /// Largest carrier handled by the isomorphism search.
    pub isomorphism: usize,
    /// Largest `n` tried in the n-ary splitting conditions.
    pub nary_splitting: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute_force: 8,
            isomorphism: 12,
            nary_splitting: 4,
        }
    }
}

impl Caps {
    /// Defaults, with `CONGRKIT_MAX_SIZE` overriding the brute-force and
    /// isomorphism caps when it holds a positive integer.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(n) = std::env::var("CONGRKIT_MAX_SIZE")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            caps = caps.with_max_size(n);
        }
        caps
    }

    pub fn with_max_size(mut self, n: usize) -> Self {
        self.brute_force = n;
        self.isomorphism = n;
        self
    }
}
