//! Brute-force reference implementations used by tests and the verification
//! suites. These share only the coxeter-core arithmetic with the production
//! algorithms and favor directness over speed; every entry point carries a
//! wall-clock budget so a wrong quadratic blowup fails loudly instead of
//! hanging.

use std::collections::{BTreeSet, VecDeque};
use std::time::{Duration, Instant};

use crate::coxeter::{DiagramAutomorphism, Elt, SimpleSubset, WeylGroup};
use crate::{Error, Result};

/// Wall-clock limit for one oracle call.
pub struct Budget {
    started: Instant,
    limit: Duration,
}

impl Budget {
    pub fn new(limit: Duration) -> Budget {
        Budget {
            started: Instant::now(),
            limit,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.started.elapsed() > self.limit {
            return Err(Error::Timeout(self.limit));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(Duration::from_secs(30))
    }
}

/// `W_J` by direct characterization: elements whose ShortLex reduced word
/// uses only letters of `J`.
fn subgroup_elements(g: &WeylGroup, j: SimpleSubset) -> Vec<Elt> {
    g.elements()
        .filter(|&w| g.word(w).letters().iter().all(|&s| j.contains(s)))
        .collect()
}

/// `I(J, w, δ)` by maximizing over all `2^|J|` subsets with a direct
/// condition check; the valid subsets must form a lattice under the unique
/// maximum, which is verified.
pub fn oracle_i_subset(
    g: &WeylGroup,
    j: SimpleSubset,
    w: Elt,
    delta: &DiagramAutomorphism,
) -> Result<SimpleSubset> {
    let holds = |k: SimpleSubset| -> bool {
        let mut image = SimpleSubset::EMPTY;
        for s in k.iter() {
            let conj = g.mul(g.mul(w, g.generator(delta.apply(s))), g.inv(w));
            match g.as_generator(conj) {
                Some(t) => image = image.with(t),
                None => return false,
            }
        }
        image == k
    };
    let mut valid: Vec<SimpleSubset> = j.subsets().filter(|&k| holds(k)).collect();
    valid.sort_by_key(|k| k.len());
    let max = *valid.last().expect("the empty set always qualifies");
    for k in &valid {
        if !k.is_subset_of(max) {
            return Err(Error::Internal(format!(
                "valid subsets {k} and {max} have no common upper bound in J"
            )));
        }
    }
    Ok(max)
}

/// The partition of `W` into `W_J` δ-conjugation orbits, via union-find over
/// all pairs `(x ∈ W_J, w ∈ W)`. Blocks sorted, keyed by least handle.
pub fn oracle_orbits(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    budget: &Budget,
) -> Result<Vec<Vec<Elt>>> {
    let mut find = UnionFind::new(g.order());
    for x in subgroup_elements(g, j) {
        budget.check()?;
        for w in g.elements() {
            find.union(w.index(), g.twisted_conjugate(x, w, delta).index());
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<Elt>> = Default::default();
    for w in g.elements() {
        blocks.entry(find.root(w.index())).or_default().push(w);
    }
    Ok(blocks.into_values().collect())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn root(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.root(a), self.root(b));
        // root at the smaller index so block keys are least handles
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
    }
}

/// The Broué–Michel cyclic shift class: closure of `w` under all
/// length-preserving swaps `w = x·y` (length-additive) `↦ y·δ(x)`. Sorted.
pub fn oracle_shift_class(
    g: &WeylGroup,
    w: Elt,
    delta: &DiagramAutomorphism,
    budget: &Budget,
) -> Result<Vec<Elt>> {
    let mut class: BTreeSet<Elt> = BTreeSet::from([w]);
    let mut queue = VecDeque::from([w]);
    while let Some(v) = queue.pop_front() {
        budget.check()?;
        for x in g.elements() {
            if g.len(x) > g.len(v) {
                break;
            }
            let y = g.mul(g.inv(x), v);
            if g.len(v) != g.len(x) + g.len(y) {
                continue;
            }
            let next = g.mul(y, g.apply(delta, x));
            if g.len(next) != g.len(v) {
                continue;
            }
            if class.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(class.into_iter().collect())
}

/// Bruhat order by the subword characterization: `a ≤ b` iff `a` arises as a
/// subword of one fixed reduced word of `b`.
pub fn oracle_bruhat_leq(g: &WeylGroup, a: Elt, b: Elt) -> bool {
    let mut below: BTreeSet<Elt> = BTreeSet::from([g.identity()]);
    for &s in g.word(b).letters() {
        let extended: Vec<Elt> = below.iter().map(|&v| g.right_mul(v, s)).collect();
        below.extend(extended);
    }
    below.contains(&a)
}

/// `w′ ≤_{J,δ} w` by the literal quantifier over `u ∈ W_J`.
pub fn oracle_partial_leq(
    g: &WeylGroup,
    w_prime: Elt,
    w: Elt,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    budget: &Budget,
) -> Result<bool> {
    for u in subgroup_elements(g, j) {
        budget.check()?;
        if oracle_bruhat_leq(g, g.twisted_conjugate(u, w_prime, delta), w) {
            return Ok(true);
        }
    }
    Ok(false)
}
