//! Tverberg partitions of point sequences, their nerves, and the translation
//! between partitions and words.
//!
//! A [`Partition`] assigns labeled, pairwise disjoint sets of point indices;
//! points may be left uncovered. Reading the labels of covered points in
//! sequence order gives a word, and a partition is `d`-colorful when that
//! word is. For sequences whose minimal Tverberg partitions are exactly the
//! colorful ones, the nerve of a covering partition equals `Δ^d` of its word.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::complex::{grow_faces, Face, SimplicialComplex, Vertex};
use crate::enumerate::PartSearch;
use crate::error::{Error, Result};
use crate::geometry::{convex_hull_witness, convex_hulls_intersect, Point, PointSequence, Rational};
use crate::words::{colorful_length, is_colorful, Word};

/// Labeled disjoint index sets into a point sequence. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: BTreeMap<Vertex, Vec<usize>>,
}

impl Partition {
    /// Builds a partition, rejecting an index used by two parts. Repeated
    /// labels are merged.
    pub fn new(parts: impl IntoIterator<Item = (Vertex, Vec<usize>)>) -> Result<Self> {
        let mut map: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (label, indices) in parts {
            let entry = map.entry(label).or_default();
            for i in indices {
                if !seen.insert(i) {
                    return Err(Error::OverlappingParts(i));
                }
                entry.push(i);
            }
        }
        for v in map.values_mut() {
            v.sort_unstable();
        }
        Ok(Partition { parts: map })
    }

    /// Parts labeled `1, 2, …` in the given order.
    pub fn from_index_sets(sets: Vec<Vec<usize>>) -> Result<Self> {
        Self::new((1..).zip(sets))
    }

    pub fn labels(&self) -> Vec<Vertex> {
        self.parts.keys().copied().collect()
    }

    pub fn parts(&self) -> impl Iterator<Item = (Vertex, &[usize])> {
        self.parts.iter().map(|(&l, v)| (l, v.as_slice()))
    }

    pub fn part(&self, label: Vertex) -> Option<&[usize]> {
        self.parts.get(&label).map(Vec::as_slice)
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Covered indices in increasing order.
    pub fn covered(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.values().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn covers(&self, len: usize) -> bool {
        self.covered().len() == len
    }

    /// Parts ordered by least index and relabeled `1..=r`. Empty parts are
    /// dropped.
    pub fn canonical(&self) -> Partition {
        let mut sets: Vec<Vec<usize>> = self
            .parts
            .values()
            .filter(|v| !v.is_empty())
            .cloned()
            .collect();
        sets.sort_unstable_by_key(|v| v[0]);
        Partition::from_index_sets(sets).expect("parts already disjoint")
    }

    /// The parts as index sets, in canonical order.
    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        self.parts.values().cloned().collect()
    }

    /// Rejects indices outside a sequence of `len` points.
    pub fn check_indices(&self, len: usize) -> Result<()> {
        match self.parts.values().flatten().find(|&&i| i >= len) {
            Some(&index) => Err(Error::IndexOutOfRange { index, len }),
            None => Ok(()),
        }
    }

    fn point_sets(&self, seq: &PointSequence, labels: &[Vertex]) -> Result<Vec<Vec<Point>>> {
        labels.iter().map(|l| seq.select(&self.parts[l])).collect()
    }
}

/// A Tverberg partition with a common point of its hulls and the convex
/// weights expressing that point in each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TverbergWitness {
    pub partition: Partition,
    pub point: Point,
    /// `weights[k][j]` belongs to index `j` of the `k`-th part in label order.
    pub weights: Vec<Vec<Rational>>,
}

impl TverbergWitness {
    /// Exact substitution check of the witness against `seq`.
    pub fn verify(&self, seq: &PointSequence) -> bool {
        let labels = self.partition.labels();
        let Ok(sets) = self.partition.point_sets(seq, &labels) else {
            return false;
        };
        crate::geometry::HullWitness {
            point: self.point.clone(),
            weights: self.weights.clone(),
        }
        .verify(&sets)
    }
}

/// The nerve of the convex hulls of the parts, on the part labels.
pub fn nerve(seq: &PointSequence, parts: &Partition) -> Result<SimplicialComplex> {
    parts.check_indices(seq.len())?;
    if let Some((label, _)) = parts.parts().find(|(_, v)| v.is_empty()) {
        return Err(Error::EmptyPart(label));
    }
    let labels = parts.labels();
    Ok(grow_faces(&labels, |face| {
        if face.len() == 1 {
            return true;
        }
        let sets = parts
            .point_sets(seq, face.vertices())
            .expect("indices checked");
        convex_hulls_intersect(&sets)
            .expect("parts are nonempty and share a dimension")
            .is_some()
    }))
}

/// Labels of covered points in sequence order.
pub fn partition_to_word(seq: &PointSequence, parts: &Partition) -> Result<Word> {
    parts.check_indices(seq.len())?;
    let mut owner: Vec<Option<Vertex>> = vec![None; seq.len()];
    for (label, idx) in parts.parts() {
        for &i in idx {
            owner[i] = Some(label);
        }
    }
    Ok(Word::new(owner.into_iter().flatten().collect()))
}

/// Part `j` collects the indices `i` with `word[i] = j`.
pub fn word_to_partition(word: &Word, seq: &PointSequence) -> Result<Partition> {
    if word.len() != seq.len() {
        return Err(Error::LengthMismatch {
            word: word.len(),
            points: seq.len(),
        });
    }
    let mut map: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, &l) in word.letters().iter().enumerate() {
        map.entry(l).or_default().push(i);
    }
    Partition::new(map)
}

/// Whether the labels of the covered points form a `d`-colorful word using
/// every part.
pub fn is_colorful_partition(seq: &PointSequence, parts: &Partition, d: usize) -> bool {
    match partition_to_word(seq, parts) {
        Ok(word) => word.alphabet().len() == parts.num_parts() && is_colorful(&word, d),
        Err(_) => false,
    }
}

fn point_budget(dim: usize, r: usize, n: usize) -> usize {
    ((dim + 1) * (r - 1) + 1).min(n)
}

fn search_for(seq: &PointSequence, r: usize) -> PartSearch {
    let n = seq.len();
    PartSearch {
        points: n,
        min_parts: r,
        max_parts: r,
        max_part_size: n,
        max_total: point_budget(seq.dim(), r, n),
    }
}

fn witness_for(seq: &PointSequence, sets: &[Vec<usize>]) -> Option<TverbergWitness> {
    let points: Vec<Vec<Point>> = sets
        .iter()
        .map(|s| seq.select(s).expect("enumerated indices are in range"))
        .collect();
    let hull = convex_hull_witness(&points).expect("enumerated parts are nonempty")?;
    Some(TverbergWitness {
        partition: Partition::from_index_sets(sets.to_vec()).expect("disjoint by construction"),
        point: hull.point,
        weights: hull.weights,
    })
}

/// Whether removing any single covered point destroys the common point.
fn is_minimal(seq: &PointSequence, sets: &[Vec<usize>]) -> bool {
    (0..sets.len()).all(|k| {
        sets[k].len() == 1
            || (0..sets[k].len()).all(|drop| {
                let trimmed: Vec<Vec<Point>> = sets
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let keep: Vec<usize> = if i == k {
                            s.iter()
                                .enumerate()
                                .filter(|&(j, _)| j != drop)
                                .map(|(_, &x)| x)
                                .collect()
                        } else {
                            s.clone()
                        };
                        seq.select(&keep).expect("indices in range")
                    })
                    .collect();
                convex_hulls_intersect(&trimmed)
                    .expect("trimmed parts are nonempty")
                    .is_none()
            })
    })
}

/// All minimal Tverberg partitions of `seq` into exactly `r` parts.
///
/// Every minimal partition uses at most `(d+1)(r-1)+1` points, so the search
/// only assigns that many. Results are canonical (parts ordered by least
/// index, labeled `1..=r`) and listed in enumeration order.
pub fn enumerate_minimal_tverberg(seq: &PointSequence, r: usize) -> Vec<TverbergWitness> {
    assert!(r >= 2, "Tverberg partitions need at least two parts");
    let tuples = search_for(seq, r).tuples();
    let found: Vec<Option<TverbergWitness>> = tuples
        .par_iter()
        .map(|sets| {
            let w = witness_for(seq, sets)?;
            is_minimal(seq, sets).then_some(w)
        })
        .collect();
    found.into_iter().flatten().collect()
}

/// The first Tverberg partition into `r` parts within the point budget, in
/// enumeration order.
pub fn find_tverberg_partition(seq: &PointSequence, r: usize) -> Option<TverbergWitness> {
    assert!(r >= 2, "Tverberg partitions need at least two parts");
    const CHUNK: usize = 64;
    search_for(seq, r).tuples().chunks(CHUNK).find_map(|chunk| {
        chunk
            .par_iter()
            .map(|sets| witness_for(seq, sets))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next()
    })
}

/// All canonical `d`-colorful partitions of `n` points into `r` parts.
pub fn colorful_partitions(n: usize, d: usize, r: usize) -> Vec<Partition> {
    let len = colorful_length(r, d);
    if len > n {
        return Vec::new();
    }
    let search = PartSearch {
        points: n,
        min_parts: r,
        max_parts: r,
        max_part_size: n,
        max_total: len,
    };
    search
        .tuples()
        .into_iter()
        .filter(|sets| sets.iter().map(Vec::len).sum::<usize>() == len)
        .filter_map(|sets| {
            let p = Partition::from_index_sets(sets).expect("disjoint by construction");
            let mut owner = vec![0; n];
            for (l, idx) in p.parts() {
                for &i in idx {
                    owner[i] = l;
                }
            }
            let word = Word::new(owner.into_iter().filter(|&l| l != 0).collect());
            is_colorful(&word, d).then_some(p)
        })
        .collect()
}

/// Whether for every `2 ≤ r ≤ r_max` the minimal Tverberg partitions of `seq`
/// with `r` parts are exactly its `d`-colorful partitions with `r` parts.
pub fn colorful_minimality_check(seq: &PointSequence, d: usize, r_max: usize) -> bool {
    (2..=r_max).all(|r| {
        let minimal: BTreeSet<Partition> = enumerate_minimal_tverberg(seq, r)
            .into_iter()
            .map(|w| w.partition)
            .collect();
        let colorful: BTreeSet<Partition> = colorful_partitions(seq.len(), d, r).into_iter().collect();
        minimal == colorful
    })
}

/// Extends a partition inducing the cone `k` to one covering all of `seq`,
/// by adding every uncovered point to the part of the least cone vertex.
pub fn extend_partition_for_cone(
    k: &SimplicialComplex,
    seq: &PointSequence,
    parts: &Partition,
) -> Result<Partition> {
    let apex = *k.cone_vertices().vertices().first().ok_or(Error::NotACone)?;
    if &nerve(seq, parts)? != k {
        return Err(Error::NerveMismatch);
    }
    let covered: BTreeSet<usize> = parts.covered().into_iter().collect();
    let extra: Vec<usize> = (0..seq.len()).filter(|i| !covered.contains(i)).collect();
    Partition::new(
        parts
            .parts()
            .map(|(l, idx)| (l, idx.to_vec()))
            .chain(std::iter::once((apex, extra))),
    )
}

/// Sub-tuple of `parts` realizing a face: the points carrying nonzero
/// weight in an LP witness for the hulls of the parts labeled by `face`.
pub fn face_support(
    seq: &PointSequence,
    parts: &Partition,
    face: &Face,
) -> Result<Option<Partition>> {
    parts.check_indices(seq.len())?;
    let labels = face.vertices();
    let sets = parts.point_sets(seq, labels)?;
    let Some(w) = convex_hull_witness(&sets)? else {
        return Ok(None);
    };
    let support = w.support();
    Partition::new(labels.iter().zip(support).map(|(&l, local)| {
        let global = parts.part(l).expect("label present");
        (l, local.into_iter().map(|j| global[j]).collect())
    }))
    .map(Some)
}
