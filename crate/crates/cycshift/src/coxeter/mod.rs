//! Finite Weyl groups: construction from Cartan data, element arithmetic,
//! length, descents, Bruhat order and diagram automorphisms.

pub mod cartan;
mod group;

pub use cartan::{CartanType, CoxeterDatum, Series};
pub use group::WeylGroup;

use std::fmt;

use crate::{Error, Result};

/// A simple reflection, identified by its 0-based index; displayed and parsed
/// with the conventional 1-based labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen(pub(crate) u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based label.
    pub fn label(self) -> usize {
        self.0 as usize + 1
    }

    pub fn from_index(index: usize) -> Gen {
        Gen(index as u8)
    }

    pub fn from_label(label: usize, rank: usize) -> Result<Gen> {
        if label == 0 || label > rank {
            return Err(Error::LabelOutOfRange { label, rank });
        }
        Ok(Gen((label - 1) as u8))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// An element of an enumerated Weyl group: an opaque handle.
///
/// Handles are assigned in breadth-first order from the identity, so they
/// sort by (length, ShortLex reduced word).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elt(pub(crate) u32);

impl Elt {
    pub const IDENTITY: Elt = Elt(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which side a coset or descent computation refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A subset of the simple reflections, as a bitmask over generator indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SimpleSubset(pub(crate) u32);

impl SimpleSubset {
    pub const EMPTY: SimpleSubset = SimpleSubset(0);

    pub fn full(rank: usize) -> SimpleSubset {
        SimpleSubset(if rank >= 32 { u32::MAX } else { (1 << rank) - 1 })
    }

    pub fn singleton(s: Gen) -> SimpleSubset {
        SimpleSubset(1 << s.0)
    }

    pub fn contains(self, s: Gen) -> bool {
        self.0 & (1 << s.0) != 0
    }

    pub fn with(self, s: Gen) -> SimpleSubset {
        SimpleSubset(self.0 | (1 << s.0))
    }

    pub fn without(self, s: Gen) -> SimpleSubset {
        SimpleSubset(self.0 & !(1 << s.0))
    }

    pub fn union(self, other: SimpleSubset) -> SimpleSubset {
        SimpleSubset(self.0 | other.0)
    }

    pub fn intersect(self, other: SimpleSubset) -> SimpleSubset {
        SimpleSubset(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        (0..32u8).filter(move |&i| self.0 & (1 << i) != 0).map(Gen)
    }

    /// All subsets of `self`, the empty set first, `self` last.
    pub fn subsets(self) -> impl Iterator<Item = SimpleSubset> {
        let mask = self.0;
        let mut sub: u32 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = SimpleSubset(sub);
            if sub == mask {
                done = true;
            } else {
                sub = (sub.wrapping_sub(mask)) & mask;
            }
            Some(cur)
        })
    }

    /// 1-based labels, ascending.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|g| g.label()).collect()
    }

    pub fn from_labels(labels: &[usize], rank: usize) -> Result<SimpleSubset> {
        let mut set = SimpleSubset::EMPTY;
        for &label in labels {
            set = set.with(Gen::from_label(label, rank)?);
        }
        Ok(set)
    }

    /// Parses `"1,3"`, `""` or `"none"` (empty set).
    pub fn parse(s: &str, rank: usize) -> Result<SimpleSubset> {
        let s = s.trim();
        if s.is_empty() || s == "none" || s == "-" {
            return Ok(SimpleSubset::EMPTY);
        }
        let mut set = SimpleSubset::EMPTY;
        for part in s.split(',') {
            let label: usize = part.trim().parse().map_err(|_| Error::Parse {
                what: "subset",
                msg: format!("bad label {part:?}"),
            })?;
            set = set.with(Gen::from_label(label, rank)?);
        }
        Ok(set)
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", g.label())?;
        }
        write!(f, "}}")
    }
}

/// A word in the simple reflections; the I/O form of elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub(crate) Vec<Gen>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_labels(labels: &[usize], rank: usize) -> Result<Word> {
        labels
            .iter()
            .map(|&l| Gen::from_label(l, rank))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a comma-separated list of 1-based labels; empty means identity.
    pub fn parse(s: &str, rank: usize) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split(',') {
            let label: usize = part.trim().parse().map_err(|_| Error::Parse {
                what: "word",
                msg: format!("bad letter {part:?}"),
            })?;
            letters.push(Gen::from_label(label, rank)?);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", g.label())?;
        }
        Ok(())
    }
}

/// A permutation of the simple reflections preserving the Coxeter matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagramAutomorphism {
    image: Vec<Gen>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> DiagramAutomorphism {
        DiagramAutomorphism {
            image: (0..rank).map(|i| Gen(i as u8)).collect(),
        }
    }

    /// Validates that `image` permutes the generators and preserves the
    /// Coxeter matrix of `datum`.
    pub fn new(image: Vec<Gen>, datum: &CoxeterDatum) -> Result<DiagramAutomorphism> {
        let rank = datum.rank();
        if image.len() != rank {
            return Err(Error::InvalidAutomorphism(format!(
                "image has {} entries, rank is {rank}",
                image.len()
            )));
        }
        let mut seen = vec![false; rank];
        for &g in &image {
            if g.index() >= rank || seen[g.index()] {
                return Err(Error::InvalidAutomorphism("not a permutation".into()));
            }
            seen[g.index()] = true;
        }
        for s in 0..rank {
            for t in 0..rank {
                if datum.coxeter(image[s].index(), image[t].index()) != datum.coxeter(s, t) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "m(δ{},δ{}) != m({},{})",
                        s + 1,
                        t + 1,
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        Ok(DiagramAutomorphism { image })
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, g)| g.index() == i)
    }

    pub fn apply(&self, s: Gen) -> Gen {
        self.image[s.index()]
    }

    pub fn apply_subset(&self, set: SimpleSubset) -> SimpleSubset {
        set.iter()
            .fold(SimpleSubset::EMPTY, |acc, s| acc.with(self.apply(s)))
    }

    pub fn inverse(&self) -> DiagramAutomorphism {
        let mut image = vec![Gen(0); self.image.len()];
        for (i, &g) in self.image.iter().enumerate() {
            image[g.index()] = Gen(i as u8);
        }
        DiagramAutomorphism { image }
    }

    /// Parses `"id"` or a comma list of `label:label` pairs, e.g. `"1:3,2:2,3:1"`.
    pub fn parse(s: &str, datum: &CoxeterDatum) -> Result<DiagramAutomorphism> {
        let rank = datum.rank();
        let s = s.trim();
        if s == "id" || s.is_empty() {
            return Ok(DiagramAutomorphism::identity(rank));
        }
        let mut image: Vec<Option<Gen>> = vec![None; rank];
        for part in s.split(',') {
            let (from, to) = part.split_once(':').ok_or_else(|| Error::Parse {
                what: "automorphism",
                msg: format!("expected label:label, got {part:?}"),
            })?;
            let parse_label = |t: &str| -> Result<Gen> {
                let label: usize = t.trim().parse().map_err(|_| Error::Parse {
                    what: "automorphism",
                    msg: format!("bad label {t:?}"),
                })?;
                Gen::from_label(label, rank)
            };
            let from = parse_label(from)?;
            let to = parse_label(to)?;
            if image[from.index()].is_some() {
                return Err(Error::Parse {
                    what: "automorphism",
                    msg: format!("label {} mapped twice", from.label()),
                });
            }
            image[from.index()] = Some(to);
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                g.ok_or_else(|| Error::Parse {
                    what: "automorphism",
                    msg: format!("label {} has no image", i + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DiagramAutomorphism::new(image, datum)
    }

    /// All diagram automorphisms of `datum`, identity first, then sorted by
    /// image sequence.
    pub fn all(datum: &CoxeterDatum) -> Vec<DiagramAutomorphism> {
        let rank = datum.rank();
        let mut found = Vec::new();
        let mut image: Vec<Gen> = Vec::with_capacity(rank);
        let mut used = vec![false; rank];
        fn extend(
            datum: &CoxeterDatum,
            image: &mut Vec<Gen>,
            used: &mut Vec<bool>,
            found: &mut Vec<DiagramAutomorphism>,
        ) {
            let rank = datum.rank();
            let k = image.len();
            if k == rank {
                found.push(DiagramAutomorphism {
                    image: image.clone(),
                });
                return;
            }
            for cand in 0..rank {
                if used[cand] {
                    continue;
                }
                // prune: consistency with all previously placed generators
                if (0..k).any(|j| datum.coxeter(cand, image[j].index()) != datum.coxeter(k, j))
                    || datum.coxeter(cand, cand) != datum.coxeter(k, k)
                {
                    continue;
                }
                used[cand] = true;
                image.push(Gen(cand as u8));
                extend(datum, image, used, found);
                image.pop();
                used[cand] = false;
            }
        }
        extend(datum, &mut image, &mut used, &mut found);
        found.sort_by(|a, b| {
            (!a.is_identity(), &a.image).cmp(&(!b.is_identity(), &b.image))
        });
        found
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for (i, g) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", i + 1, g.label())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CoxeterDatum {
        CoxeterDatum::new("A3".parse().unwrap())
    }

    #[test]
    fn subset_basics() {
        let rank = 3;
        let j = SimpleSubset::parse("1,3", rank).unwrap();
        assert_eq!(j.labels(), vec![1, 3]);
        assert_eq!(j.len(), 2);
        assert!(SimpleSubset::parse("", rank).unwrap().is_empty());
        assert!(SimpleSubset::parse("4", rank).is_err());
        assert_eq!(j.subsets().count(), 4);
        assert_eq!(SimpleSubset::full(3).labels(), vec![1, 2, 3]);
        assert_eq!(j.to_string(), "{1,3}");
    }

    #[test]
    fn word_parse_roundtrip() {
        let w = Word::parse("1,2,1,3,2", 3).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.to_string(), "1,2,1,3,2");
        assert!(Word::parse("", 3).unwrap().is_empty());
        assert!(Word::parse("0", 3).is_err());
    }

    #[test]
    fn automorphisms_of_a3() {
        let d = a3();
        let all = DiagramAutomorphism::all(&d);
        assert_eq!(all.len(), 2);
        assert!(all[0].is_identity());
        let flip = DiagramAutomorphism::parse("1:3,2:2,3:1", &d).unwrap();
        assert_eq!(all[1], flip);
        assert_eq!(flip.to_string(), "1:3,2:2,3:1");
        assert_eq!(flip.inverse(), flip);
        // 1 -> 2 does not preserve the diagram
        assert!(DiagramAutomorphism::parse("1:2,2:1,3:3", &d).is_err());
    }

    #[test]
    fn automorphisms_of_products() {
        let d = CoxeterDatum::new("A1xA1".parse().unwrap());
        // identity and the factor swap
        assert_eq!(DiagramAutomorphism::all(&d).len(), 2);
        let b3 = CoxeterDatum::new("B3".parse().unwrap());
        assert_eq!(DiagramAutomorphism::all(&b3).len(), 1);
    }
}
