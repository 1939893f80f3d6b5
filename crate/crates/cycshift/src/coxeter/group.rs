//! Breadth-first Cayley enumeration of a finite Weyl group via its action on
//! the root system, with dense generator-multiplication tables.

use std::collections::HashMap;

use crate::{Error, Result};

use super::{CoxeterDatum, DiagramAutomorphism, Elt, Gen, Side, SimpleSubset, Word};

/// Default cap on the group order accepted by [`WeylGroup::build`].
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// An enumerated finite Weyl group.
///
/// Elements are integer handles assigned breadth-first from the identity
/// (generators in label order, ties by ShortLex of the reduced word), so
/// handle order is (length, ShortLex) order. Multiplication by a generator
/// on either side, inversion and length are O(1) table lookups. The group is
/// immutable after construction and safe to share across threads.
pub struct WeylGroup {
    datum: CoxeterDatum,
    order: usize,
    rank: usize,
    /// left[w * rank + s] = s * w
    left: Vec<u32>,
    /// right[w * rank + s] = w * s
    right: Vec<u32>,
    inv: Vec<u32>,
    len: Vec<u32>,
    /// BFS tree: w = pgen[w] * parent[w] for w != identity.
    parent: Vec<u32>,
    pgen: Vec<u8>,
}

impl WeylGroup {
    pub fn build(datum: CoxeterDatum) -> Result<WeylGroup> {
        WeylGroup::build_with_cap(datum, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(datum: CoxeterDatum, cap: u64) -> Result<WeylGroup> {
        datum.validate()?;
        let expected = datum.cartan_type.expected_order();
        if expected > cap {
            return Err(Error::GroupTooLarge {
                order: expected,
                cap,
            });
        }
        let rank = datum.rank();

        // Root system: coefficient vectors over the simple roots. Simple
        // roots occupy indices 0..rank.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut root_index: HashMap<Vec<i64>, u16> = HashMap::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            root_index.insert(v.clone(), i as u16);
            roots.push(v);
        }
        let reflect = |s: usize, v: &[i64], datum: &CoxeterDatum| -> Vec<i64> {
            let pairing: i64 = (0..rank).map(|j| datum.cartan(s, j) * v[j]).sum();
            let mut out = v.to_vec();
            out[s] -= pairing;
            out
        };
        let mut head = 0usize;
        while head < roots.len() {
            for s in 0..rank {
                let image = reflect(s, &roots[head].clone(), &datum);
                if !root_index.contains_key(&image) {
                    root_index.insert(image.clone(), roots.len() as u16);
                    roots.push(image);
                }
            }
            head += 1;
        }
        let nroots = roots.len();
        let mut refl = vec![0u16; rank * nroots];
        for s in 0..rank {
            for r in 0..nroots {
                refl[s * nroots + r] = root_index[&reflect(s, &roots[r], &datum)];
            }
        }

        // BFS over left multiplication. An element is keyed by the images of
        // the simple roots; s * w has key j -> refl[s][key(w)[j]].
        let mut keys: Vec<Vec<u16>> = vec![(0..rank as u16).collect()];
        let mut key_index: HashMap<Vec<u16>, u32> = HashMap::new();
        key_index.insert(keys[0].clone(), 0);
        let mut left: Vec<u32> = vec![0; rank];
        let mut len: Vec<u32> = vec![0];
        let mut parent: Vec<u32> = vec![0];
        let mut pgen: Vec<u8> = vec![0];

        let mut layer: Vec<u32> = vec![0];
        while !layer.is_empty() {
            let mut next = Vec::new();
            // generator-major order makes discovery order ShortLex order
            for s in 0..rank {
                for &p in &layer {
                    let pkey = &keys[p as usize];
                    let child_key: Vec<u16> = pkey
                        .iter()
                        .map(|&r| refl[s * nroots + r as usize])
                        .collect();
                    let child = match key_index.get(&child_key) {
                        Some(&c) => c,
                        None => {
                            let c = keys.len() as u32;
                            if c as u64 > cap {
                                return Err(Error::GroupTooLarge {
                                    order: c as u64,
                                    cap,
                                });
                            }
                            key_index.insert(child_key.clone(), c);
                            keys.push(child_key);
                            left.resize((c as usize + 1) * rank, 0);
                            len.push(len[p as usize] + 1);
                            parent.push(p);
                            pgen.push(s as u8);
                            next.push(c);
                            c
                        }
                    };
                    left[p as usize * rank + s] = child;
                }
            }
            layer = next;
        }

        let order = keys.len();
        if order as u64 != expected {
            return Err(Error::Internal(format!(
                "enumerated order {order} != product formula {expected} for {}",
                datum.cartan_type
            )));
        }

        // Right table by linearity: (w s)(a_j) = w(s(a_j)).
        let mut right = vec![0u32; order * rank];
        for w in 0..order {
            let key = &keys[w];
            for s in 0..rank {
                let mut child_key = Vec::with_capacity(rank);
                for j in 0..rank {
                    let t = refl[s * nroots + j] as usize; // s(alpha_j)
                    let mut coeffs = vec![0i64; rank];
                    for k in 0..rank {
                        let c = roots[t][k];
                        if c != 0 {
                            let img = &roots[key[k] as usize];
                            for (acc, x) in coeffs.iter_mut().zip(img) {
                                *acc += c * x;
                            }
                        }
                    }
                    child_key.push(root_index[&coeffs]);
                }
                right[w * rank + s] = key_index[&child_key];
            }
        }

        // inv(s * p) = inv(p) * s, in BFS order.
        let mut inv = vec![0u32; order];
        for w in 1..order {
            inv[w] = right[inv[parent[w] as usize] as usize * rank + pgen[w] as usize];
        }

        Ok(WeylGroup {
            datum,
            order,
            rank,
            left,
            right,
            inv,
            len,
            parent,
            pgen,
        })
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> &super::CartanType {
        &self.datum.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.rank as u8).map(Gen)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        (0..self.order as u32).map(Elt)
    }

    pub fn identity(&self) -> Elt {
        Elt::IDENTITY
    }

    /// The set S of all simple reflections.
    pub fn full_set(&self) -> SimpleSubset {
        SimpleSubset::full(self.rank)
    }

    pub fn generator(&self, s: Gen) -> Elt {
        // generators are discovered first, in label order
        Elt(s.0 as u32 + 1)
    }

    /// `Some(s)` if `w` is the simple reflection `s`.
    pub fn as_generator(&self, w: Elt) -> Option<Gen> {
        if self.len(w) == 1 {
            Some(Gen((w.0 - 1) as u8))
        } else {
            None
        }
    }

    /// The longest element; it has the last handle.
    pub fn longest(&self) -> Elt {
        Elt(self.order as u32 - 1)
    }

    pub fn len(&self, w: Elt) -> usize {
        self.len[w.index()] as usize
    }

    /// s * w
    pub fn left_mul(&self, s: Gen, w: Elt) -> Elt {
        Elt(self.left[w.index() * self.rank + s.index()])
    }

    /// w * s
    pub fn right_mul(&self, w: Elt, s: Gen) -> Elt {
        Elt(self.right[w.index() * self.rank + s.index()])
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        // a b = s_1 ... s_k b, applying the letters of a right to left
        let mut letters = Vec::with_capacity(self.len(a));
        let mut w = a;
        while w != Elt::IDENTITY {
            letters.push(Gen(self.pgen[w.index()]));
            w = Elt(self.parent[w.index()]);
        }
        let mut out = b;
        for &s in letters.iter().rev() {
            out = self.left_mul(s, out);
        }
        out
    }

    pub fn inv(&self, w: Elt) -> Elt {
        Elt(self.inv[w.index()])
    }

    /// The ShortLex-minimal reduced word of `w`.
    pub fn word(&self, w: Elt) -> Word {
        let mut letters = Vec::with_capacity(self.len(w));
        let mut w = w;
        while w != Elt::IDENTITY {
            letters.push(Gen(self.pgen[w.index()]));
            w = Elt(self.parent[w.index()]);
        }
        Word(letters)
    }

    pub fn element(&self, word: &Word) -> Result<Elt> {
        let mut w = Elt::IDENTITY;
        for &s in word.letters() {
            if s.index() >= self.rank {
                return Err(Error::LabelOutOfRange {
                    label: s.label(),
                    rank: self.rank,
                });
            }
            w = self.right_mul(w, s);
        }
        Ok(w)
    }

    /// Convenience: element from 1-based labels; panics on bad labels.
    pub fn elt(&self, labels: &[usize]) -> Elt {
        self.element(&Word::from_labels(labels, self.rank).unwrap())
            .unwrap()
    }

    pub fn is_descent(&self, s: Gen, w: Elt, side: Side) -> bool {
        let m = match side {
            Side::Left => self.left_mul(s, w),
            Side::Right => self.right_mul(w, s),
        };
        self.len(m) < self.len(w)
    }

    pub fn descents(&self, w: Elt, side: Side) -> SimpleSubset {
        self.gens()
            .filter(|&s| self.is_descent(s, w, side))
            .fold(SimpleSubset::EMPTY, |acc, s| acc.with(s))
    }

    /// Bruhat order via the recursive lifting criterion.
    pub fn bruhat_leq(&self, a: Elt, b: Elt) -> bool {
        let (mut a, mut b) = (a, b);
        loop {
            if a == Elt::IDENTITY {
                return true;
            }
            if self.len(a) > self.len(b) {
                return false;
            }
            // least left descent of b; b != e because len(b) >= len(a) > 0
            let s = self
                .gens()
                .find(|&s| self.is_descent(s, b, Side::Left))
                .expect("non-identity element has a descent");
            if self.is_descent(s, a, Side::Left) {
                a = self.left_mul(s, a);
            }
            b = self.left_mul(s, b);
        }
    }

    /// Validated diagram automorphism for this group.
    pub fn automorphism(&self, image: Vec<Gen>) -> Result<DiagramAutomorphism> {
        DiagramAutomorphism::new(image, &self.datum)
    }

    pub fn diagram_automorphisms(&self) -> Vec<DiagramAutomorphism> {
        DiagramAutomorphism::all(&self.datum)
    }

    /// The group automorphism induced by `delta`, applied to `w`.
    pub fn apply(&self, delta: &DiagramAutomorphism, w: Elt) -> Elt {
        if delta.is_identity() {
            return w;
        }
        let mut out = Elt::IDENTITY;
        let mut v = w;
        let mut letters = Vec::with_capacity(self.len(w));
        while v != Elt::IDENTITY {
            letters.push(Gen(self.pgen[v.index()]));
            v = Elt(self.parent[v.index()]);
        }
        for &s in &letters {
            out = self.right_mul(out, delta.apply(s));
        }
        out
    }

    /// x w δ(x)^-1, the δ-conjugation action of x on w.
    pub fn twisted_conjugate(&self, x: Elt, w: Elt, delta: &DiagramAutomorphism) -> Elt {
        // x w δ(x)^-1 = s (x' w δ(x')^-1) δ(s) for x = s x'
        let mut letters = Vec::with_capacity(self.len(x));
        let mut v = x;
        while v != Elt::IDENTITY {
            letters.push(Gen(self.pgen[v.index()]));
            v = Elt(self.parent[v.index()]);
        }
        let mut out = w;
        for &s in letters.iter().rev() {
            out = self.gen_twisted_conjugate(s, out, delta);
        }
        out
    }

    /// s w δ(s), a single twisted-conjugation step.
    pub fn gen_twisted_conjugate(&self, s: Gen, w: Elt, delta: &DiagramAutomorphism) -> Elt {
        self.left_mul(s, self.right_mul(w, delta.apply(s)))
    }

    /// Number of positive roots sent to negative roots by `w`; equals the
    /// length. Independent of the BFS depth bookkeeping, used as an oracle.
    pub fn inversion_count(&self, w: Elt) -> usize {
        // recompute w's root images from scratch via its reduced word
        let word = self.word(w);
        let rank = self.rank;
        let cartan = &self.datum;
        // track images of all simple roots as coefficient vectors under
        // successive left reflections applied in word order
        // w = s_1 ... s_k acts as s_1 after s_2 after ...; apply right-to-left
        let mut images: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        for &s in word.letters().iter().rev() {
            for v in images.iter_mut() {
                let pairing: i64 = (0..rank).map(|j| cartan.cartan(s.index(), j) * v[j]).sum();
                v[s.index()] -= pairing;
            }
        }
        // enumerate positive roots by closure and count sign flips of w
        let mut positives: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = positives.iter().cloned().collect();
        let mut head = 0;
        while head < positives.len() {
            for s in 0..rank {
                let v = &positives[head];
                let pairing: i64 = (0..rank).map(|j| cartan.cartan(s, j) * v[j]).sum();
                let mut out = v.clone();
                out[s] -= pairing;
                if out.iter().all(|&c| c >= 0) && !seen.contains(&out) {
                    seen.insert(out.clone());
                    positives.push(out);
                }
            }
            head += 1;
        }
        positives
            .iter()
            .filter(|root| {
                let mut image = vec![0i64; rank];
                for (k, &c) in root.iter().enumerate() {
                    if c != 0 {
                        for (acc, x) in image.iter_mut().zip(&images[k]) {
                            *acc += c * x;
                        }
                    }
                }
                image.iter().all(|&c| c <= 0)
            })
            .count()
    }
}
