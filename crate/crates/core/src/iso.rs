//! Isomorphism search between small algebras.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// Per-element invariants preserved by every isomorphism.
fn fingerprint(alg: &FiniteAlgebra, x: usize) -> Vec<usize> {
    let n = alg.size();
    let mut fp = Vec::new();
    for op in alg.ops() {
        match op.arity() {
            0 => fp.push(usize::from(op.constant() == x)),
            1 => {
                fp.push(usize::from(op.unary(x) == x));
                fp.push((0..n).filter(|&y| op.unary(y) == x).count());
            }
            2 => {
                fp.push(usize::from(op.binary(x, x) == x));
                fp.push((0..n).filter(|&y| op.binary(x, y) == x).count());
                fp.push((0..n).filter(|&y| op.binary(y, x) == x).count());
                fp.push((0..n).filter(|&y| op.binary(x, y) == y).count());
                fp.push(
                    (0..n * n)
                        .filter(|&i| op.table()[i] == x)
                        .count(),
                );
            }
            _ => {}
        }
    }
    fp
}

fn is_homomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    let n = a.size();
    a.ops().iter().zip(b.ops()).all(|(oa, ob)| {
        let k = oa.arity();
        let mut args = vec![0; k];
        let mut image = vec![0; k];
        (0..n.pow(k as u32)).all(|idx| {
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            for (im, &x) in image.iter_mut().zip(&args) {
                *im = map[x];
            }
            map[oa.apply(&args)] == ob.apply(&image)
        })
    })
}

struct Search<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    fa: Vec<Vec<usize>>,
    fb: Vec<Vec<usize>>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Binary entries among assigned elements must agree with the partial map.
    fn consistent(&self, x: usize) -> bool {
        let n = self.a.size();
        for (oa, ob) in self.a.ops().iter().zip(self.b.ops()) {
            if oa.arity() == 1 {
                if let (Some(fx), Some(fr)) = (self.map[x], self.map[oa.unary(x)]) {
                    if ob.unary(fx) != fr {
                        return false;
                    }
                }
            }
            if oa.arity() != 2 {
                continue;
            }
            let fx = self.map[x].expect("x assigned");
            for y in 0..n {
                let Some(fy) = self.map[y] else { continue };
                for (l, r, fl, fr) in [(x, y, fx, fy), (y, x, fy, fx)] {
                    if let Some(fv) = self.map[oa.binary(l, r)] {
                        if ob.binary(fl, fr) != fv {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, x: usize) -> bool {
        let n = self.a.size();
        if x == n {
            let map: Vec<usize> = self.map.iter().map(|m| m.expect("complete")).collect();
            return is_homomorphism(self.a, self.b, &map);
        }
        if self.map[x].is_some() {
            return self.consistent(x) && self.extend(x + 1);
        }
        for y in 0..n {
            if self.used[y] || self.fa[x] != self.fb[y] {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.map[x] = None;
            self.used[y] = false;
        }
        false
    }
}

/// Finds a bijection `A → B` preserving every operation, if one exists.
///
/// Operations are matched by position and must agree in name and arity.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, cap: usize) -> Result<Option<Vec<usize>>> {
    if a.size().max(b.size()) > cap {
        return Err(Error::CapExceeded {
            what: "isomorphism search",
            size: a.size().max(b.size()),
            cap,
        });
    }
    if a.size() != b.size() || a.signature() != b.signature() {
        return Ok(None);
    }
    let n = a.size();
    let fa: Vec<Vec<usize>> = (0..n).map(|x| fingerprint(a, x)).collect();
    let fb: Vec<Vec<usize>> = (0..n).map(|x| fingerprint(b, x)).collect();
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let mut search = Search {
        a,
        b,
        fa,
        fb,
        map: vec![None; n],
        used: vec![false; n],
    };
    // constants are forced
    for (oa, ob) in a.ops().iter().zip(b.ops()) {
        if oa.arity() == 0 {
            let (x, y) = (oa.constant(), ob.constant());
            match search.map[x] {
                Some(z) if z != y => return Ok(None),
                Some(_) => {}
                None if search.used[y] => return Ok(None),
                None => {
                    search.map[x] = Some(y);
                    search.used[y] = true;
                }
            }
        }
    }
    if search.extend(0) {
        Ok(Some(search.map.into_iter().map(|m| m.expect("complete")).collect()))
    } else {
        Ok(None)
    }
}

pub fn are_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, cap)?.is_some())
}

/// Checks that `map` is a bijective homomorphism `A → B`.
pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    if a.size() != b.size() || map.len() != a.size() || a.signature() != b.signature() {
        return false;
    }
    let mut inverse = vec![None; b.size()];
    for (x, &y) in map.iter().enumerate() {
        if y >= b.size() || inverse[y].replace(x).is_some() {
            return false;
        }
    }
    is_homomorphism(a, b, map)
}
