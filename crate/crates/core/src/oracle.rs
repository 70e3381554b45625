//! Brute-force enumeration over an explicit [`FinitePoset`].
//!
//! Everything here walks the order predicate directly: candidate steps are
//! found by testing `leq` against every vertex, covers are derived from `leq`,
//! and nothing depends on the level structure or on any closed form. These
//! counts are the ground truth the algebraic modules are checked against.
//!
//! Chain length is the number of edges: a chain of length `k` has `k + 1`
//! elements.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, Vertex};

/// Which relation each step of a counted sequence must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// `z_i < z_{i+1}`: chains.
    Strict,
    /// `z_i ≤ z_{i+1}`: multichains.
    Weak,
    /// `z_i ⋖ z_{i+1}`: saturated (maximal) chains.
    Cover,
}

/// Cover relation derived from `leq`: `covers[a][b]` iff `a < b` with nothing strictly between.
pub fn cover_matrix(p: &FinitePoset) -> &[Vec<bool>] {
    p.covers.get_or_init(|| derive_covers(p))
}

fn derive_covers(p: &FinitePoset) -> Vec<Vec<bool>> {
    let n = p.len();
    let lt = |a: usize, b: usize| a != b && p.leq_idx(a, b);
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| lt(a, b) && !(0..n).any(|z| lt(a, z) && lt(z, b)))
                .collect()
        })
        .collect()
}

/// Depth-first counter of sequences ending at a fixed target.
///
/// Memoizes on (vertex, remaining steps), so repeated queries against the
/// same target from different sources and lengths share work.
pub struct ChainCounter<'a> {
    poset: &'a FinitePoset,
    target: usize,
    kind: ChainKind,
    covers: Option<&'a [Vec<bool>]>,
    memo: HashMap<(usize, usize), BigUint>,
}

impl<'a> ChainCounter<'a> {
    pub fn new(poset: &'a FinitePoset, target: &Vertex, kind: ChainKind) -> Result<Self> {
        let target = poset.index_of(target)?;
        let covers = (kind == ChainKind::Cover).then(|| cover_matrix(poset));
        Ok(ChainCounter {
            poset,
            target,
            kind,
            covers,
            memo: HashMap::new(),
        })
    }

    fn allowed(&self, a: usize, b: usize) -> bool {
        match self.kind {
            ChainKind::Strict => a != b && self.poset.leq_idx(a, b),
            ChainKind::Weak => self.poset.leq_idx(a, b),
            ChainKind::Cover => self.covers.unwrap()[a][b],
        }
    }

    fn walk(&mut self, current: usize, remaining: usize) -> BigUint {
        if remaining == 0 {
            return if current == self.target {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if let Some(hit) = self.memo.get(&(current, remaining)) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for z in 0..self.poset.len() {
            if self.allowed(current, z) && self.poset.leq_idx(z, self.target) {
                total += self.walk(z, remaining - 1);
            }
        }
        self.memo.insert((current, remaining), total.clone());
        total
    }

    /// Sequences `x = z_0, z_1, ..., z_k = target` with `k` steps.
    pub fn count(&mut self, x: &Vertex, k: usize) -> Result<BigUint> {
        let a = self.poset.index_of(x)?;
        Ok(self.walk(a, k))
    }

    /// Sum over all `k ≥ 1`. Only meaningful for strict steps and covers,
    /// where no sequence can exceed `len() - 1` steps.
    pub fn count_all(&mut self, x: &Vertex) -> Result<BigUint> {
        assert!(
            self.kind != ChainKind::Weak,
            "multichains are unbounded in length"
        );
        let a = self.poset.index_of(x)?;
        Ok((1..self.poset.len().max(1)).map(|k| self.walk(a, k)).sum())
    }
}

impl FinitePoset {
    fn walks(&self, x: &Vertex, y: &Vertex, k: usize, kind: ChainKind) -> Result<BigUint> {
        ChainCounter::new(self, y, kind)?.count(x, k)
    }

    /// Chains `x < z_1 < ... < z_{k-1} < y`. `k = 0` gives `δ(x,y)`.
    pub fn count_chains(&self, x: &Vertex, y: &Vertex, k: usize) -> Result<BigUint> {
        self.walks(x, y, k, ChainKind::Strict)
    }

    /// Saturated chains `x ⋖ z_1 ⋖ ... ⋖ y` with `k` edges.
    pub fn count_maximal_chains(&self, x: &Vertex, y: &Vertex, k: usize) -> Result<BigUint> {
        self.walks(x, y, k, ChainKind::Cover)
    }

    /// Multichains `x ≤ z_1 ≤ ... ≤ z_{k-1} ≤ y`.
    pub fn count_multichains(&self, x: &Vertex, y: &Vertex, k: usize) -> Result<BigUint> {
        self.walks(x, y, k, ChainKind::Weak)
    }

    /// Strict chains of every length `k ≥ 1` from `x` to `y` (zero when `x = y`).
    pub fn count_all_chains(&self, x: &Vertex, y: &Vertex) -> Result<BigUint> {
        self.index_of(x)?;
        ChainCounter::new(self, y, ChainKind::Strict)?.count_all(x)
    }

    /// Saturated chains of every length `k ≥ 1` from `x` to `y`.
    pub fn count_all_maximal_chains(&self, x: &Vertex, y: &Vertex) -> Result<BigUint> {
        self.index_of(x)?;
        ChainCounter::new(self, y, ChainKind::Cover)?.count_all(x)
    }

    /// Number of elements of rank `l` in `[x,y]`.
    pub fn count_at_rank_in_segment(&self, x: &Vertex, y: &Vertex, l: usize) -> Result<usize> {
        Ok(self.segment(x, y)?.iter().filter(|z| z.s == l).count())
    }

    /// `μ(x,y)` by the defining recursion `μ(x,x) = 1`, `μ(x,y) = -Σ_{x≤z<y} μ(x,z)`.
    pub fn mobius_recursive(&self, x: &Vertex, y: &Vertex) -> Result<BigInt> {
        if !self.leq(x, y)? {
            return Err(Error::NotComparable { x: *x, y: *y });
        }
        let a = self.index_of(x)?;
        let b = self.index_of(y)?;
        // index order is a linear extension, so every z < w is visited before w
        let interval: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq_idx(a, z) && self.leq_idx(z, b))
            .collect();
        let mut mu: HashMap<usize, BigInt> = HashMap::new();
        for &w in &interval {
            let value = if w == a {
                BigInt::one()
            } else {
                -interval
                    .iter()
                    .filter(|&&z| z != w && self.leq_idx(z, w))
                    .map(|z| &mu[z])
                    .sum::<BigInt>()
            };
            mu.insert(w, value);
        }
        Ok(mu.remove(&b).unwrap())
    }
}
