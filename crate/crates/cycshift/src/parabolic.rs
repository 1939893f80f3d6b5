//! Parabolic subgroups, minimal coset representatives, the subsets
//! `I(J, w, δ)` and Bédard's sequence description of the minimal right coset
//! representatives.

use crate::coxeter::{DiagramAutomorphism, Elt, Side, SimpleSubset, WeylGroup};
use crate::{Error, Result};

/// The minimal representative of the coset of `w`.
///
/// For `side == Right` this is the coset `W_J w`: greedily strip left
/// descents lying in `J`. For `side == Left` it is `w W_J`, stripping right
/// descents.
pub fn min_rep(g: &WeylGroup, w: Elt, j: SimpleSubset, side: Side) -> Elt {
    let mut w = w;
    'outer: loop {
        for s in j.iter() {
            if g.is_descent(s, w, flip(side)) {
                w = match side {
                    Side::Right => g.left_mul(s, w),
                    Side::Left => g.right_mul(w, s),
                };
                continue 'outer;
            }
        }
        return w;
    }
}

fn flip(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

/// Minimal representative of the double coset `W_J w W_K`.
pub fn min_double_rep(g: &WeylGroup, w: Elt, j: SimpleSubset, k: SimpleSubset) -> Elt {
    let r = min_rep(g, min_rep(g, w, j, Side::Right), k, Side::Left);
    debug_assert!(g.descents(r, Side::Left).intersect(j).is_empty());
    debug_assert!(g.descents(r, Side::Right).intersect(k).is_empty());
    r
}

/// Whether `w` is a minimal right coset representative, i.e. `w ∈ ᴶW`.
pub fn in_j_w(g: &WeylGroup, w: Elt, j: SimpleSubset) -> bool {
    g.descents(w, Side::Left).intersect(j).is_empty()
}

/// Whether `w` is a minimal left coset representative, i.e. `w ∈ Wᴷ`.
pub fn in_w_k(g: &WeylGroup, w: Elt, k: SimpleSubset) -> bool {
    g.descents(w, Side::Right).intersect(k).is_empty()
}

/// `ᴶW`: minimal representatives of `W_J \ W`, sorted by (length, ShortLex).
pub fn j_w(g: &WeylGroup, j: SimpleSubset) -> Vec<Elt> {
    g.elements().filter(|&w| in_j_w(g, w, j)).collect()
}

/// `Wᴷ`: minimal representatives of `W / W_K`, sorted by (length, ShortLex).
pub fn w_k(g: &WeylGroup, k: SimpleSubset) -> Vec<Elt> {
    g.elements().filter(|&w| in_w_k(g, w, k)).collect()
}

/// `ᴶWᴷ = ᴶW ∩ Wᴷ`.
pub fn j_w_k(g: &WeylGroup, j: SimpleSubset, k: SimpleSubset) -> Vec<Elt> {
    g.elements()
        .filter(|&w| in_j_w(g, w, j) && in_w_k(g, w, k))
        .collect()
}

/// The standard parabolic subgroup `W_J`, as a sorted element list.
pub fn parabolic_elements(g: &WeylGroup, j: SimpleSubset) -> Vec<Elt> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut out = vec![g.identity()];
    let mut head = 0;
    while head < out.len() {
        let w = out[head];
        head += 1;
        for s in j.iter() {
            let next = g.right_mul(w, s);
            if !seen[next.index()] {
                seen[next.index()] = true;
                out.push(next);
            }
        }
    }
    out.sort();
    out
}

/// `{w δ(s) w⁻¹ : s ∈ K}` if every image is a simple reflection, else an
/// error naming the first offending `s`.
pub fn ad_on_simples(
    g: &WeylGroup,
    w: Elt,
    delta: &DiagramAutomorphism,
    k: SimpleSubset,
) -> Result<SimpleSubset> {
    let mut out = SimpleSubset::EMPTY;
    let w_inv = g.inv(w);
    for s in k.iter() {
        let image = g.mul(g.right_mul(w, delta.apply(s)), w_inv);
        match g.as_generator(image) {
            Some(t) => out = out.with(t),
            None => {
                return Err(Error::NotSimple {
                    label: s.label(),
                    word: g.word(w).to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// `I(J, w, δ) = max{K ⊆ J : Ad(w)δ(K) = K}`, by monotone fixed-point
/// shrinking: drop any `s` whose image is not a simple reflection in the
/// current set.
pub fn i_subset(g: &WeylGroup, j: SimpleSubset, w: Elt, delta: &DiagramAutomorphism) -> SimpleSubset {
    let w_inv = g.inv(w);
    let mut k = j;
    loop {
        let mut next = SimpleSubset::EMPTY;
        for s in k.iter() {
            let image = g.mul(g.right_mul(w, delta.apply(s)), w_inv);
            if let Some(t) = g.as_generator(image) {
                if k.contains(t) {
                    next = next.with(s);
                }
            }
        }
        if next == k {
            return k;
        }
        k = next;
    }
}

/// Bédard's sequence `(Jₙ, wₙ)` for `w ∈ ᴶW`: `J₀ = J`,
/// `wₙ = min(w W_{δ(Jₙ)})`, `Jₙ₊₁ = Jₙ ∩ Ad(wₙ)δ(Jₙ)`, stabilizing at
/// `(I(J, w, δ), w_m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BedardTrace {
    pub steps: Vec<(SimpleSubset, Elt)>,
    pub stabilized_at: usize,
}

impl BedardTrace {
    pub fn limit_subset(&self) -> SimpleSubset {
        self.steps[self.stabilized_at].0
    }

    pub fn limit_element(&self) -> Elt {
        self.steps[self.stabilized_at].1
    }
}

pub fn bedard_sequence(
    g: &WeylGroup,
    j: SimpleSubset,
    w: Elt,
    delta: &DiagramAutomorphism,
) -> Result<BedardTrace> {
    if !in_j_w(g, w, j) {
        return Err(Error::Precondition(format!(
            "w = {} is not a minimal coset representative in W_{}\\W",
            g.word(w),
            j
        )));
    }
    let mut steps: Vec<(SimpleSubset, Elt)> = Vec::new();
    let mut j_n = j;
    loop {
        let w_n = min_rep(g, w, delta.apply_subset(j_n), Side::Left);
        if let Some(&last) = steps.last() {
            if last == (j_n, w_n) {
                return Ok(BedardTrace {
                    stabilized_at: steps.len() - 1,
                    steps,
                });
            }
        }
        steps.push((j_n, w_n));
        // J_{n+1} = J_n ∩ Ad(w_n) δ(J_n), counting only simple images
        let w_inv = g.inv(w_n);
        let mut next = SimpleSubset::EMPTY;
        for s in j_n.iter() {
            let image = g.mul(g.right_mul(w_n, delta.apply(s)), w_inv);
            if let Some(t) = g.as_generator(image) {
                if j_n.contains(t) {
                    next = next.with(t);
                }
            }
        }
        j_n = next;
    }
}

/// `⋂ₙ (Ad(w)∘δ)ⁿ(W_J)`, iterating the set map in both directions until
/// stable. By Bédard's description this equals `W_{I(J,w,δ)}` when `w ∈ ᴶW`.
pub fn j_infinity_oracle(
    g: &WeylGroup,
    j: SimpleSubset,
    w: Elt,
    delta: &DiagramAutomorphism,
) -> Vec<Elt> {
    let mut current: std::collections::BTreeSet<Elt> =
        parabolic_elements(g, j).into_iter().collect();
    let w_inv = g.inv(w);
    let delta_inv = delta.inverse();
    loop {
        let forward: std::collections::BTreeSet<Elt> = current
            .iter()
            .map(|&u| g.mul(g.mul(w, g.apply(delta, u)), w_inv))
            .collect();
        let backward: std::collections::BTreeSet<Elt> = current
            .iter()
            .map(|&u| g.apply(&delta_inv, g.mul(g.mul(w_inv, u), w)))
            .collect();
        let next: std::collections::BTreeSet<Elt> = current
            .iter()
            .copied()
            .filter(|u| forward.contains(u) && backward.contains(u))
            .collect();
        if next == current {
            return current.into_iter().collect();
        }
        current = next;
    }
}
