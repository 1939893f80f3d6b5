//! Partial-conjugation decomposition of the group, the partial order on
//! minimal coset representatives, canonical cyclic-shift certificates, the
//! left-right symmetry bijection and induction data.

use crate::coxeter::{DiagramAutomorphism, Elt, Side, SimpleSubset, WeylGroup};
use crate::parabolic::{i_subset, in_j_w, in_w_k, j_w, min_rep, parabolic_elements};
use crate::pieces::{make_piece, try_shift_step, Piece, ShiftStep};
use crate::shift_graph::is_min_length_in_orbit;
use crate::{Error, Result};

/// One block of the decomposition `W = ⊔ W_J ·_δ (W_{I(J,w′,δ)} w′)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    pub w_prime: Elt,
    pub i: SimpleSubset,
    /// `W_J ·_δ (W_I w′)`, sorted by handle.
    pub orbit: Vec<Elt>,
}

/// The full decomposition for one `(J, δ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialDecomposition {
    pub j: SimpleSubset,
    /// One block per `w′ ∈ ʲW`, in handle order of `w′`.
    pub blocks: Vec<Block>,
}

/// Decomposes `W` into the blocks indexed by `ʲW`, verifying that they
/// partition the group.
pub fn decompose(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<PartialDecomposition> {
    let mut seen = vec![false; g.order()];
    let mut blocks = Vec::new();
    for w_prime in j_w(g, j) {
        let i = i_subset(g, j, w_prime, delta);
        // close W_I·w′ under generator-wise δ-conjugation by J
        let mut in_orbit = vec![false; g.order()];
        let mut queue: Vec<Elt> = parabolic_elements(g, i)
            .into_iter()
            .map(|u| g.mul(u, w_prime))
            .collect();
        for &e in &queue {
            in_orbit[e.index()] = true;
        }
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for s in j.iter() {
                let next = g.gen_twisted_conjugate(s, v, delta);
                if !in_orbit[next.index()] {
                    in_orbit[next.index()] = true;
                    queue.push(next);
                }
            }
        }
        queue.sort();
        for &e in &queue {
            if seen[e.index()] {
                return Err(Error::Internal(format!(
                    "blocks overlap at {}",
                    g.word(e)
                )));
            }
            seen[e.index()] = true;
        }
        blocks.push(Block {
            w_prime,
            i,
            orbit: queue,
        });
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Internal("blocks do not cover W".into()));
    }
    Ok(PartialDecomposition { j, blocks })
}

/// Verifies the stabilizer claim behind the block bijection: whenever
/// `a ∈ W_J` δ-conjugates some element of `W_I·w′` back into `W_I·w′`, then
/// `a ∈ W_I`, where `I = I(J, w′, δ)`.
pub fn stabilizer_check(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    w_prime: Elt,
) -> bool {
    let i = i_subset(g, j, w_prime, delta);
    let w_i = parabolic_elements(g, i);
    let coset: Vec<Elt> = w_i.iter().map(|&u| g.mul(u, w_prime)).collect();
    let in_coset = {
        let mut mask = vec![false; g.order()];
        for &e in &coset {
            mask[e.index()] = true;
        }
        mask
    };
    for a in parabolic_elements(g, j) {
        let a_in_i = w_i.binary_search(&a).is_ok();
        for &b in &coset {
            if in_coset[g.twisted_conjugate(a, b, delta).index()] && !a_in_i {
                return false;
            }
        }
    }
    true
}

/// `w′ ≤_{J,δ} w`: some `u ∈ W_J` has `u·w′·δ(u)⁻¹ ≤ w` in Bruhat order.
/// Requires `w′ ∈ ʲW`.
pub fn partial_leq(
    g: &WeylGroup,
    w_prime: Elt,
    w: Elt,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<bool> {
    if !in_j_w(g, w_prime, j) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal coset representative for J = {j}",
            g.word(w_prime)
        )));
    }
    Ok(parabolic_elements(g, j)
        .into_iter()
        .any(|u| g.bruhat_leq(g.twisted_conjugate(u, w_prime, delta), w)))
}

/// Cover relations (transitive reduction) of `≤_{J,δ}` on `ʲW`, as sorted
/// `(lower, upper)` pairs.
pub fn hasse(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<Vec<(Elt, Elt)>> {
    let reps = j_w(g, j);
    let n = reps.len();
    let mut leq = vec![false; n * n];
    for (a, &wa) in reps.iter().enumerate() {
        for (b, &wb) in reps.iter().enumerate() {
            leq[a * n + b] = partial_leq(g, wa, wb, j, delta)?;
        }
    }
    // the relation must be a partial order on ʲW
    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return Err(Error::Internal(format!(
                    "≤ not antisymmetric at {} / {}",
                    g.word(reps[a]),
                    g.word(reps[b])
                )));
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq[a * n + b] {
                continue;
            }
            let has_middle = (0..n)
                .any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
            if !has_middle {
                covers.push((reps[a], reps[b]));
            }
        }
    }
    covers.sort();
    Ok(covers)
}

/// The unique `≤_{J,δ}`-maximal element of `{w′ ∈ ʲW : w′ ≤_{J,δ} w}`.
pub fn max_below(
    g: &WeylGroup,
    w: Elt,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
) -> Result<Elt> {
    let below: Vec<Elt> = j_w(g, j)
        .into_iter()
        .filter(|&w_prime| partial_leq(g, w_prime, w, j, delta).unwrap_or(false))
        .collect();
    let mut maximal = Vec::new();
    for &a in &below {
        let dominated = below
            .iter()
            .any(|&b| b != a && partial_leq(g, a, b, j, delta).unwrap_or(false));
        if !dominated {
            maximal.push(a);
        }
    }
    match maximal.as_slice() {
        [top] => Ok(*top),
        _ => Err(Error::Internal(format!(
            "{} maximal elements below {}",
            maximal.len(),
            g.word(w)
        ))),
    }
}

/// One stage of the canonical quadruple construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadrupleStep {
    pub j_n: SimpleSubset,
    pub w_n: Elt,
    pub x_n: Elt,
    pub y_n: Elt,
}

/// The certificate produced by [`theorem_cyc`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycCertificate {
    pub j: SimpleSubset,
    pub piece: Piece,
    pub w_prime: Elt,
    pub x: Elt,
    pub u: Elt,
    pub k_prime: SimpleSubset,
    /// The piece-level walk `(w,K) ≈ (u·w′, K′)`, identity stages omitted.
    pub chain: Vec<ShiftStep>,
    pub trace: Vec<QuadrupleStep>,
}

/// Runs the quadruple recursion `(Jₙ, wₙ, xₙ, yₙ)` for `w` at level `J`:
/// `w′ₙ = (x₀⋯xₙ₋₁)⁻¹ w δ(x₀⋯xₙ₋₁)` splits as `zₙ·w″ₙ` with `w″ₙ ∈ ^{Jₙ}W`;
/// `wₙ = min(w″ₙ W_{δ(Jₙ)})`, `J_{n+1} = Jₙ ∩ Ad(wₙ)δ(Jₙ)` and `zₙ = xₙ·yₙ`
/// with `xₙ ∈ W^{J_{n+1}}`. Stabilizes with `w_m = w′`, `x = x₀⋯x_m`.
///
/// No minimality of `w` is needed for the recursion itself; only the
/// certificate's length and chain claims require it.
fn quadruple_run(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    w: Elt,
) -> Result<(Vec<QuadrupleStep>, Elt, Elt)> {
    let mut trace: Vec<QuadrupleStep> = Vec::new();
    let mut j_n = j;
    let mut x_acc = g.identity();
    let mut prev: Option<(SimpleSubset, Elt)> = None;
    loop {
        let w_prime_n = g.twisted_conjugate(g.inv(x_acc), w, delta);
        let w_dd = min_rep(g, w_prime_n, j_n, Side::Right);
        let z_n = g.mul(w_prime_n, g.inv(w_dd));
        let w_n = min_rep(g, w_dd, delta.apply_subset(j_n), Side::Left);
        // J_{n+1} = J_n ∩ Ad(w_n)δ(J_n), counting only simple images
        let w_n_inv = g.inv(w_n);
        let mut j_next = SimpleSubset::EMPTY;
        for s in j_n.iter() {
            let image = g.mul(g.right_mul(w_n, delta.apply(s)), w_n_inv);
            if let Some(t) = g.as_generator(image) {
                if j_n.contains(t) {
                    j_next = j_next.with(t);
                }
            }
        }
        let x_n = min_rep(g, z_n, j_next, Side::Left);
        let y_n = g.mul(g.inv(x_n), z_n);
        if prev == Some((j_n, w_n)) {
            if x_n != g.identity() {
                return Err(Error::Internal(format!(
                    "x_n = {} nontrivial after stabilization",
                    g.word(x_n)
                )));
            }
            if j_n != i_subset(g, j, w_n, delta) {
                return Err(Error::Internal(
                    "stabilized subset differs from I(J, w′, δ)".into(),
                ));
            }
            return Ok((trace, w_n, x_acc));
        }
        trace.push(QuadrupleStep { j_n, w_n, x_n, y_n });
        prev = Some((j_n, w_n));
        x_acc = g.mul(x_acc, x_n);
        j_n = j_next;
        if trace.len() > 2 * g.rank() + 2 {
            return Err(Error::Internal("quadruple recursion does not stabilize".into()));
        }
    }
}

/// Produces the canonical certificate `(w′, x, u, K′)` with the piece-level
/// walk `(w, K) ≈_{J,δ} (u·w′, K′)`.
///
/// Requires `K ⊆ J`, `(w, K)` a valid piece and `w` of minimal length in its
/// `W_J` δ-conjugation orbit.
pub fn theorem_cyc(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    piece: Piece,
) -> Result<CycCertificate> {
    if !piece.k.is_subset_of(j) {
        return Err(Error::Precondition(format!(
            "K = {} is not contained in J = {j}",
            piece.k
        )));
    }
    make_piece(g, piece.w, piece.k, delta)?;
    if !is_min_length_in_orbit(g, piece.w, j, delta) {
        return Err(Error::Precondition(format!(
            "w = {} is not of minimal length in its W_J orbit",
            g.word(piece.w)
        )));
    }
    let (trace, w_prime, x) = quadruple_run(g, j, delta, piece.w)?;
    let i = i_subset(g, j, w_prime, delta);
    let target = g.twisted_conjugate(g.inv(x), piece.w, delta);
    let u = g.mul(target, g.inv(w_prime));
    // theorem-mandated shape of the outputs
    let w_j = parabolic_elements(g, j);
    if w_j.binary_search(&x).is_err() || !in_w_k(g, x, i) {
        return Err(Error::Internal(format!(
            "x = {} is not in W_J ∩ W^I",
            g.word(x)
        )));
    }
    if parabolic_elements(g, i).binary_search(&u).is_err() {
        return Err(Error::Internal(format!("u = {} is not in W_I", g.word(u))));
    }
    if g.len(target) != g.len(piece.w) {
        return Err(Error::Internal(
            "certificate does not preserve length".into(),
        ));
    }
    // walk the chain through the non-identity stages
    let mut chain = Vec::new();
    let mut at = piece;
    for step in &trace {
        // the running image of K stays inside the next level subset
        let stage_j = {
            let mut next = SimpleSubset::EMPTY;
            let inv = g.inv(step.w_n);
            for s in step.j_n.iter() {
                let image = g.mul(g.right_mul(step.w_n, delta.apply(s)), inv);
                if let Some(t) = g.as_generator(image) {
                    if step.j_n.contains(t) {
                        next = next.with(t);
                    }
                }
            }
            next
        };
        if step.x_n == g.identity() {
            continue;
        }
        let shift = try_shift_step(g, at, step.x_n, delta).ok_or_else(|| {
            Error::Internal(format!(
                "stage x = {} is not a valid shift step",
                g.word(step.x_n)
            ))
        })?;
        if !shift.to.k.is_subset_of(stage_j) {
            return Err(Error::Internal(
                "intermediate piece subset escapes the level subset".into(),
            ));
        }
        chain.push(shift);
        at = shift.to;
    }
    if at.w != target {
        return Err(Error::Internal("chain endpoint differs from u·w′".into()));
    }
    let k_prime = at.k;
    if !k_prime.is_subset_of(i) {
        return Err(Error::Internal("K′ is not contained in I(J, w′, δ)".into()));
    }
    Ok(CycCertificate {
        j,
        piece,
        w_prime,
        x,
        u,
        k_prime,
        chain,
        trace,
    })
}

/// The left-right symmetry bijection `ι: W^{δ(J)} → ʲW`, returned with its
/// certificate. Requires `w ∈ W^{δ(J)}`; such `w` are automatically of
/// minimal length in their orbit and force `u = e`.
pub fn iota(
    g: &WeylGroup,
    j: SimpleSubset,
    delta: &DiagramAutomorphism,
    w: Elt,
) -> Result<(Elt, CycCertificate)> {
    if !in_w_k(g, w, delta.apply_subset(j)) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal left coset representative for δ(J)",
            g.word(w)
        )));
    }
    let k = i_subset(g, j, w, delta);
    let cert = theorem_cyc(g, j, delta, Piece { w, k })?;
    if cert.u != g.identity() {
        return Err(Error::Internal(format!(
            "u = {} nontrivial in the ι certificate",
            g.word(cert.u)
        )));
    }
    Ok((cert.w_prime, cert))
}

/// The combinatorial datum of the induction compatibility theorem for
/// `J ⊆ J′`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InductionDatum {
    pub j: SimpleSubset,
    pub j_prime: SimpleSubset,
    pub w: Elt,
    pub w_prime: Elt,
    pub x: Elt,
    pub u: Elt,
    pub k: SimpleSubset,
    pub k1: SimpleSubset,
    pub k_prime: SimpleSubset,
}

/// Computes `(w′, x, u, K, K₁, K′)` for `w ∈ ʲW` of minimal length in its
/// `W_J` orbit, running the quadruple recursion at level `J′` (where no
/// minimality holds in general, so lengths may strictly drop).
pub fn induction_datum(
    g: &WeylGroup,
    j: SimpleSubset,
    j_prime: SimpleSubset,
    delta: &DiagramAutomorphism,
    w: Elt,
) -> Result<InductionDatum> {
    if !j.is_subset_of(j_prime) {
        return Err(Error::Precondition(format!(
            "J = {j} is not contained in J′ = {j_prime}"
        )));
    }
    if !in_j_w(g, w, j) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal coset representative for J = {j}",
            g.word(w)
        )));
    }
    if !is_min_length_in_orbit(g, w, j, delta) {
        return Err(Error::Precondition(format!(
            "w = {} is not of minimal length in its W_J orbit",
            g.word(w)
        )));
    }
    let k = i_subset(g, j, w, delta);
    let (_, w_prime, x) = quadruple_run(g, j_prime, delta, w)?;
    let u = g.mul(g.twisted_conjugate(g.inv(x), w, delta), g.inv(w_prime));
    let k_prime = i_subset(g, j_prime, w_prime, delta);
    // K₁ = Ad(x)⁻¹(K): elementwise simple by the certificate argument
    let mut k1 = SimpleSubset::EMPTY;
    let x_inv = g.inv(x);
    for t in k.iter() {
        let image = g.mul(g.right_mul(x_inv, t), x);
        match g.as_generator(image) {
            Some(s) => k1 = k1.with(s),
            None => {
                return Err(Error::Internal(format!(
                    "Ad(x)⁻¹ of {} is not simple",
                    t.label()
                )))
            }
        }
    }
    if !k1.is_subset_of(k_prime) {
        return Err(Error::Internal("K₁ is not contained in K′".into()));
    }
    // (u·w′)-stability of K₁
    let uw = g.mul(u, w_prime);
    if crate::parabolic::ad_on_simples(g, uw, delta, k1).ok() != Some(k1) {
        return Err(Error::Internal("Ad(u·w′)δ(K₁) != K₁".into()));
    }
    // length equality forces u = e
    if g.len(w) == g.len(w_prime) && u != g.identity() {
        return Err(Error::Internal(
            "u nontrivial despite ℓ(w) = ℓ(w′)".into(),
        ));
    }
    Ok(InductionDatum {
        j,
        j_prime,
        w,
        w_prime,
        x,
        u,
        k,
        k1,
        k_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterDatum;

    fn group(ty: &str) -> WeylGroup {
        WeylGroup::build(CoxeterDatum::new(ty.parse().unwrap())).unwrap()
    }

    fn id(g: &WeylGroup) -> DiagramAutomorphism {
        DiagramAutomorphism::identity(g.rank())
    }

    #[test]
    fn decompose_degenerate() {
        let g = group("A3");
        let d = id(&g);
        let dec = decompose(&g, SimpleSubset::EMPTY, &d).unwrap();
        assert_eq!(dec.blocks.len(), g.order());
        assert!(dec.blocks.iter().all(|b| b.orbit == vec![b.w_prime]));
        // J = S: ʲW = {e}, so the single block W_S ·_δ (W_S·e) covers W
        let dec = decompose(&g, g.full_set(), &d).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].w_prime, g.identity());
        assert_eq!(dec.blocks[0].i, g.full_set());
        assert_eq!(dec.blocks[0].orbit.len(), g.order());
    }

    #[test]
    fn decompose_a2() {
        let g = group("A2");
        let d = id(&g);
        let j = SimpleSubset::parse("1", 2).unwrap();
        let dec = decompose(&g, j, &d).unwrap();
        assert_eq!(dec.blocks.len(), 3);
        let b = &dec.blocks[0];
        assert_eq!((b.w_prime, b.i.labels()), (g.identity(), vec![1]));
        assert_eq!(b.orbit, vec![g.identity(), g.elt(&[1])]);
        let b = &dec.blocks[1];
        assert_eq!((b.w_prime, b.i), (g.elt(&[2]), SimpleSubset::EMPTY));
        assert_eq!(b.orbit, {
            let mut v = vec![g.elt(&[2]), g.elt(&[1, 2, 1])];
            v.sort();
            v
        });
        let b = &dec.blocks[2];
        assert_eq!((b.w_prime, b.i), (g.elt(&[2, 1]), SimpleSubset::EMPTY));
        assert_eq!(b.orbit, {
            let mut v = vec![g.elt(&[2, 1]), g.elt(&[1, 2])];
            v.sort();
            v
        });
    }

    #[test]
    fn decompose_partitions_everywhere() {
        for ty in ["A3", "B2", "G2"] {
            let g = group(ty);
            for delta in g.diagram_automorphisms() {
                for j in g.full_set().subsets() {
                    decompose(&g, j, &delta).unwrap();
                }
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let g = group("A2");
        let d = id(&g);
        assert!(stabilizer_check(&g, SimpleSubset::EMPTY, &d, g.elt(&[2])));
        assert!(stabilizer_check(&g, SimpleSubset::parse("1", 2).unwrap(), &d, g.elt(&[2])));
        let g = group("A3");
        for delta in g.diagram_automorphisms() {
            for j in g.full_set().subsets() {
                for w_prime in j_w(&g, j) {
                    assert!(stabilizer_check(&g, j, &delta, w_prime));
                }
            }
        }
    }

    #[test]
    fn partial_leq_cases() {
        let g = group("A3");
        let d = id(&g);
        let j = SimpleSubset::parse("3", 3).unwrap();
        // reflexive on ʲW
        for w in j_w(&g, j) {
            assert!(partial_leq(&g, w, w, j, &d).unwrap());
        }
        // Bruhat implies ≤_{J,δ}
        for w_prime in j_w(&g, j) {
            for w in g.elements() {
                if g.bruhat_leq(w_prime, w) {
                    assert!(partial_leq(&g, w_prime, w, j, &d).unwrap());
                }
            }
        }
        // the figure's extra relation
        assert!(partial_leq(&g, g.elt(&[1, 2, 3]), g.elt(&[2, 1, 3, 2]), j, &d).unwrap());
        assert!(!g.bruhat_leq(g.elt(&[1, 2, 3]), g.elt(&[2, 1, 3, 2])));
        // precondition
        assert!(partial_leq(&g, g.elt(&[3]), g.longest(), j, &d).is_err());
    }

    #[test]
    fn hasse_of_the_figure() {
        // A3, J = {3}: the Bruhat Hasse diagram on the 12 representatives
        // plus the single extra cover s123 ⋖ s2132
        let g = group("A3");
        let d = id(&g);
        let j = SimpleSubset::parse("3", 3).unwrap();
        let covers = hasse(&g, j, &d).unwrap();
        let v = |labels: &[usize]| g.elt(labels);
        let mut expected = vec![
            (v(&[]), v(&[1])),
            (v(&[]), v(&[2])),
            (v(&[1]), v(&[1, 2])),
            (v(&[2]), v(&[1, 2])),
            (v(&[1]), v(&[2, 1])),
            (v(&[2]), v(&[2, 1])),
            (v(&[2]), v(&[2, 3])),
            (v(&[1, 2]), v(&[1, 2, 3])),
            // genuinely a Bruhat cover (s2 s3 is a subword of s1 s2 s3),
            // though the usual drawing of this diagram omits the edge
            (v(&[2, 3]), v(&[1, 2, 3])),
            (v(&[1, 2]), v(&[1, 2, 1])),
            (v(&[2, 1]), v(&[1, 2, 1])),
            (v(&[2, 3]), v(&[2, 1, 3])),
            (v(&[2, 1]), v(&[2, 1, 3])),
            (v(&[1, 2, 1]), v(&[2, 1, 3, 2])),
            (v(&[2, 1, 3]), v(&[2, 1, 3, 2])),
            (v(&[1, 2, 1]), v(&[1, 2, 1, 3])),
            (v(&[2, 1, 3]), v(&[1, 2, 1, 3])),
            (v(&[1, 2, 3]), v(&[1, 2, 1, 3])),
            (v(&[2, 1, 3, 2]), v(&[1, 2, 1, 3, 2])),
            (v(&[1, 2, 1, 3]), v(&[1, 2, 1, 3, 2])),
            // the one cover beyond Bruhat order
            (v(&[1, 2, 3]), v(&[2, 1, 3, 2])),
        ];
        expected.sort();
        assert_eq!(covers, expected);
        // J = ∅ gives the Bruhat Hasse diagram of W
        let bruhat = hasse(&g, SimpleSubset::EMPTY, &d).unwrap();
        for &(a, b) in &bruhat {
            assert!(g.bruhat_leq(a, b) && g.len(b) == g.len(a) + 1);
        }
    }

    #[test]
    fn max_below_cases() {
        let g = group("A3");
        let d = id(&g);
        let j = SimpleSubset::parse("3", 3).unwrap();
        for w in j_w(&g, j) {
            assert_eq!(max_below(&g, w, j, &d).unwrap(), w);
        }
        for w in g.elements() {
            let top = max_below(&g, w, j, &d).unwrap();
            assert!(partial_leq(&g, top, w, j, &d).unwrap());
        }
        // w0 dominates everything, so its maximum is the ≤_{J,δ}-top of ʲW
        let top = max_below(&g, g.longest(), j, &d).unwrap();
        for w_prime in j_w(&g, j) {
            assert!(partial_leq(&g, w_prime, top, j, &d).unwrap());
        }
    }

    #[test]
    fn certificate_trivial_cases() {
        let g = group("A3");
        let d = id(&g);
        // w ∈ ʲW with Ad(w)δ(J) = J: x = e, u = e, w′ = w
        let j = SimpleSubset::parse("1,3", 3).unwrap();
        let w = g.elt(&[2, 1, 3, 2]);
        let cert = theorem_cyc(&g, j, &d, Piece { w, k: SimpleSubset::EMPTY }).unwrap();
        assert_eq!((cert.w_prime, cert.x, cert.u), (w, g.identity(), g.identity()));
        assert!(cert.chain.is_empty());
        // preconditions are enforced
        assert!(matches!(
            theorem_cyc(&g, SimpleSubset::EMPTY, &d, Piece { w, k: j }),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            theorem_cyc(
                &g,
                g.full_set(),
                &d,
                Piece { w: g.elt(&[1, 2, 1]), k: SimpleSubset::EMPTY }
            ),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn certificate_realizes_the_relation() {
        let g = group("B2");
        let d = id(&g);
        for j in g.full_set().subsets() {
            for k in j.subsets() {
                for w in g.elements() {
                    let Ok(piece) = make_piece(&g, w, k, &d) else { continue };
                    if !is_min_length_in_orbit(&g, w, j, &d) {
                        continue;
                    }
                    let cert = theorem_cyc(&g, j, &d, piece).unwrap();
                    // chain endpoints agree with the algebraic outputs
                    let mut at = piece;
                    for step in &cert.chain {
                        assert_eq!(step.from, at);
                        at = step.to;
                    }
                    assert_eq!(at.w, g.mul(cert.u, cert.w_prime));
                    assert_eq!(at.k, cert.k_prime);
                }
            }
        }
    }

    #[test]
    fn iota_examples() {
        // the nontrivial example: A4, J = {1,3}, ι(s121324) = s213243
        let g = group("A4");
        let d = id(&g);
        let j = SimpleSubset::parse("1,3", 4).unwrap();
        let w = g.elt(&[1, 2, 1, 3, 2, 4]);
        let (image, cert) = iota(&g, j, &d, w).unwrap();
        assert_eq!(image, g.elt(&[2, 1, 3, 2, 4, 3]));
        assert_eq!(cert.u, g.identity());
        assert_ne!(image, g.inv(w));
        // ι(e) = e
        assert_eq!(iota(&g, j, &d, g.identity()).unwrap().0, g.identity());
        // precondition
        assert!(iota(&g, j, &d, g.elt(&[1])).is_err());
    }

    #[test]
    fn iota_is_a_bijection() {
        let g = group("A3");
        for delta in g.diagram_automorphisms() {
            for j in g.full_set().subsets() {
                let sources = crate::parabolic::w_k(&g, delta.apply_subset(j));
                let mut images: Vec<Elt> = sources
                    .iter()
                    .map(|&w| iota(&g, j, &delta, w).unwrap().0)
                    .collect();
                images.sort();
                images.dedup();
                assert_eq!(images, j_w(&g, j));
            }
        }
    }

    #[test]
    fn induction_data() {
        let g = group("A3");
        let d = id(&g);
        // J = J′ repackages the level-J certificate
        let j = SimpleSubset::parse("3", 3).unwrap();
        for w in j_w(&g, j) {
            if !is_min_length_in_orbit(&g, w, j, &d) {
                continue;
            }
            let datum = induction_datum(&g, j, j, &d, w).unwrap();
            assert_eq!(
                g.twisted_conjugate(g.inv(datum.x), w, &d),
                g.mul(datum.u, datum.w_prime)
            );
            let cert = theorem_cyc(&g, j, &d, Piece { w, k: datum.k }).unwrap();
            assert_eq!((datum.w_prime, datum.x, datum.u), (cert.w_prime, cert.x, cert.u));
        }
        // J = ∅ ⊆ J′ = {3}: K = K₁ = ∅
        for w in g.elements() {
            let datum = induction_datum(&g, SimpleSubset::EMPTY, j, &d, w).unwrap();
            assert_eq!(datum.k, SimpleSubset::EMPTY);
            assert_eq!(datum.k1, SimpleSubset::EMPTY);
            assert!(in_j_w(&g, datum.w_prime, j));
        }
        // precondition: J ⊆ J′
        assert!(matches!(
            induction_datum(&g, g.full_set(), j, &d, g.identity()),
            Err(Error::Precondition(_))
        ));
    }
}
