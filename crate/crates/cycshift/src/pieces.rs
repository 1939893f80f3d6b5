//! Combinatorial pieces `(w, K)`, conjugation of pieces and the shift
//! equivalence generated by length-preserving conjugation steps.

use std::collections::HashMap;

use crate::coxeter::{DiagramAutomorphism, Elt, SimpleSubset, WeylGroup};
use crate::parabolic::{ad_on_simples, in_j_w, parabolic_elements};
use crate::{Error, Result};

/// A combinatorial piece: `w ∈ ᴷW` with `Ad(w)δ(K) = K`. The automorphism is
/// context, supplied by each operation rather than stored.
///
/// The piece stands for the subset `W_K w` of the group; `(w, ∅)` is
/// identified with the element `w` itself.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Piece {
    pub w: Elt,
    pub k: SimpleSubset,
}

/// Validates and constructs a piece.
pub fn make_piece(
    g: &WeylGroup,
    w: Elt,
    k: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<Piece> {
    if !in_j_w(g, w, k) {
        return Err(Error::InvalidPiece(format!(
            "w = {} is not minimal in ᴷW for K = {k}",
            g.word(w)
        )));
    }
    match ad_on_simples(g, w, delta, k) {
        Ok(image) if image == k => Ok(Piece { w, k }),
        _ => Err(Error::InvalidPiece(format!(
            "K = {k} not normalized: Ad(w)δ(K) != K for w = {}",
            g.word(w)
        ))),
    }
}

/// Conjugates the piece by `x`: `(w, K) ↦ (x⁻¹ w δ(x), Ad(x)⁻¹(K))`.
///
/// Fails with [`Error::DoesNotAct`] when `Ad(x)⁻¹(K)` is not a set of simple
/// reflections; the result is re-validated as a piece.
pub fn conjugate_piece(
    g: &WeylGroup,
    x: Elt,
    piece: Piece,
    delta: &DiagramAutomorphism,
) -> Result<Piece> {
    let k_new = ad_inverse(g, x, piece.k).ok_or_else(|| Error::DoesNotAct {
        x: g.word(x).to_string(),
    })?;
    let w_new = g.mul(g.mul(g.inv(x), piece.w), g.apply(delta, x));
    make_piece(g, w_new, k_new, delta)
}

/// `Ad(x)⁻¹(K) = {x⁻¹ t x : t ∈ K}` when simple, else `None`.
fn ad_inverse(g: &WeylGroup, x: Elt, k: SimpleSubset) -> Option<SimpleSubset> {
    let x_inv = g.inv(x);
    let mut out = SimpleSubset::EMPTY;
    for t in k.iter() {
        let image = g.mul(g.right_mul(x_inv, t), x);
        out = out.with(g.as_generator(image)?);
    }
    Some(out)
}

/// The element set `W_K · w` the piece stands for, sorted by handle.
pub fn piece_set(g: &WeylGroup, piece: Piece) -> Vec<Elt> {
    let mut out: Vec<Elt> = parabolic_elements(g, piece.k)
        .into_iter()
        .map(|u| g.mul(u, piece.w))
        .collect();
    out.sort();
    out
}

/// One conjugation step between pieces: `to = x⁻¹ · from · δ(x)` with
/// `ℓ(from.w) = ℓ(x) + ℓ(x⁻¹·from.w) = ℓ(to.w)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShiftStep {
    pub x: Elt,
    pub from: Piece,
    pub to: Piece,
}

/// Attempts the `x`-step from `piece`, checking the length conditions and
/// that `x` acts.
pub fn try_shift_step(
    g: &WeylGroup,
    piece: Piece,
    x: Elt,
    delta: &DiagramAutomorphism,
) -> Option<ShiftStep> {
    let rest = g.mul(g.inv(x), piece.w);
    if g.len(piece.w) != g.len(x) + g.len(rest) {
        return None;
    }
    let to = conjugate_piece(g, x, piece, delta).ok()?;
    if g.len(to.w) != g.len(piece.w) {
        return None;
    }
    Some(ShiftStep { x, from: piece, to })
}

/// Decides `p ≈_{J,δ} q` for the equivalence generated by single steps with
/// `x ∈ W_J`, returning a witness chain when equivalent.
///
/// Single steps are not invertible under a proper `J` (in A2 with `J = {1}`,
/// `s1 s2` steps to `s2 s1` but nothing in `W_J` steps back), so the search
/// walks the undirected step graph. Each returned [`ShiftStep`] is valid in
/// its own `from → to` direction; the witness path may traverse a step
/// against that direction, with consecutive pieces always sharing an
/// endpoint. Neighbors are explored with `x` in handle order (length, then
/// ShortLex), so witnesses are deterministic.
pub fn shift_equivalent(
    g: &WeylGroup,
    p: Piece,
    q: Piece,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<Option<Vec<ShiftStep>>> {
    for piece in [p, q] {
        make_piece(g, piece.w, piece.k, delta)?;
        if !piece.k.is_subset_of(j) {
            return Err(Error::Precondition(format!(
                "piece subset {} is not contained in J = {j}",
                piece.k
            )));
        }
    }
    if p == q {
        return Ok(Some(Vec::new()));
    }
    let movers = parabolic_elements(g, j);
    let mut back: HashMap<Piece, ShiftStep> = HashMap::new();
    let mut queue = std::collections::VecDeque::from([p]);
    while let Some(cur) = queue.pop_front() {
        let mut neighbors: Vec<(Piece, ShiftStep)> = Vec::new();
        for &x in &movers {
            if x == g.identity() {
                continue;
            }
            if let Some(step) = try_shift_step(g, cur, x, delta) {
                neighbors.push((step.to, step));
            }
            // undirected traversal: a piece that steps to `cur` by x
            if let Some(prev) = unstep(g, cur, x, delta) {
                neighbors.push((prev.from, prev));
            }
        }
        for (next, step) in neighbors {
            if next == p || back.contains_key(&next) {
                continue;
            }
            back.insert(next, step);
            if next == q {
                let mut chain = Vec::new();
                let mut at = q;
                while at != p {
                    let step = back[&at];
                    chain.push(step);
                    at = if step.to == at { step.from } else { step.to };
                }
                chain.reverse();
                return Ok(Some(chain));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

/// The piece with an `x`-step landing on `piece`, if any.
fn unstep(
    g: &WeylGroup,
    piece: Piece,
    x: Elt,
    delta: &DiagramAutomorphism,
) -> Option<ShiftStep> {
    let k_prev = ad_forward(g, x, piece.k)?;
    let w_prev = g.mul(g.mul(x, piece.w), g.inv(g.apply(delta, x)));
    let prev = make_piece(g, w_prev, k_prev, delta).ok()?;
    let step = try_shift_step(g, prev, x, delta)?;
    (step.to == piece).then_some(step)
}

/// `Ad(x)(K) = {x t x⁻¹ : t ∈ K}` when simple, else `None`.
fn ad_forward(g: &WeylGroup, x: Elt, k: SimpleSubset) -> Option<SimpleSubset> {
    let x_inv = g.inv(x);
    let mut out = SimpleSubset::EMPTY;
    for t in k.iter() {
        let image = g.mul(g.right_mul(x, t), x_inv);
        out = out.with(g.as_generator(image)?);
    }
    Some(out)
}

/// All valid pieces `(w, K)` with `K ⊆ bound`, sorted.
pub fn piece_list(
    g: &WeylGroup,
    bound: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Vec<Piece> {
    let mut out = Vec::new();
    for k in bound.subsets() {
        for w in g.elements() {
            if let Ok(p) = make_piece(g, w, k, delta) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}
