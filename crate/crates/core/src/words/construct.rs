//! Word constructions: canonical colorful words, letter deletion, facet
//! concatenation, the dimension lift and insertion patterns.

use std::collections::BTreeMap;

use super::{colorful_length, delta_complex, is_colorful, Word};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// The zigzag `d`-colorful word on `sigma`: the sorted alphabet, then its
/// reverse without the shared letter, then forward again, and so on.
pub fn canonical_word(sigma: &Face, d: usize) -> Result<Word> {
    let r = sigma.len();
    if r < 2 {
        return Err(Error::AlphabetTooSmall(r));
    }
    let forward = sigma.vertices();
    let backward: Vec<Vertex> = forward.iter().rev().copied().collect();
    let mut letters = forward.to_vec();
    for block in 1..=d {
        let src = if block % 2 == 1 { &backward } else { forward };
        letters.extend_from_slice(&src[1..]);
    }
    debug_assert_eq!(letters.len(), colorful_length(r, d));
    Ok(Word::new(letters))
}

/// Recovers `d` from a length of the form `(d+1)(r-1)+1`.
fn inferred_dimension(word: &Word, r: usize) -> Option<usize> {
    let n = word.len();
    if r < 2 || n < r || !(n - 1).is_multiple_of(r - 1) {
        return None;
    }
    Some((n - 1) / (r - 1) - 1)
}

/// Positions of `word` kept when deleting letter `i` from a colorful word.
///
/// Blocks are processed left to right carrying the last kept letter `x` as
/// the boundary of the next block. Block zero keeps everything but `i`; every
/// later block keeps its letters other than `i` and `x`. When `i` sits on a
/// block boundary, the carried letter is the one immediately preceding it and
/// its occurrence in the following block is dropped. The result is a
/// `d`-colorful word on `σ∖{i}` of length `(d+1)(r-2)+1`.
pub fn deletion_positions(word: &Word, i: Vertex) -> Result<Vec<usize>> {
    let sigma = word.alphabet();
    let r = sigma.len();
    if !sigma.contains(i) {
        return Err(Error::MissingLetter(i));
    }
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "deleting a letter needs at least three letters, got {r}"
        )));
    }
    let d = inferred_dimension(word, r)
        .filter(|&d| is_colorful(word, d))
        .ok_or_else(|| Error::NotColorful(word.to_string()))?;

    let letters = word.letters();
    let mut kept: Vec<usize> = (0..r).filter(|&p| letters[p] != i).collect();
    for block in 1..=d {
        let carry = letters[*kept.last().expect("block zero keeps r - 1 letters")];
        let start = block * (r - 1);
        kept.extend((start..start + r).filter(|&p| letters[p] != i && letters[p] != carry));
    }
    debug_assert_eq!(kept.len(), colorful_length(r - 1, d));
    Ok(kept)
}

/// Deletes letter `i` from a colorful word, keeping it colorful on the
/// remaining alphabet. See [`deletion_positions`].
pub fn delete_letter(word: &Word, i: Vertex) -> Result<Word> {
    Ok(word.subword(&deletion_positions(word, i)?))
}

/// The dimension `m + 1` at which [`facet_concat_word`] represents `k`,
/// where `m` is the number of facets.
pub fn facet_concat_dimension(k: &SimplicialComplex) -> usize {
    k.facets().iter().filter(|f| !f.is_empty()).count() + 1
}

/// Concatenation of canonical `(m+1)`-colorful words, one per facet of size
/// at least two in canonical order. Singleton facets are appended once each
/// at the end. The result `(m+1)`-colorfully represents `k`.
pub fn facet_concat_word(k: &SimplicialComplex) -> Word {
    let d = facet_concat_dimension(k);
    let mut letters = Vec::new();
    for facet in k.facets().iter().filter(|f| f.len() >= 2) {
        letters.extend(canonical_word(facet, d).expect("facet has two letters").into_letters());
    }
    letters.extend(
        k.facets()
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f.vertices()[0]),
    );
    Word::new(letters)
}

/// A bijection between letters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relabeling(BTreeMap<Vertex, Vertex>);

impl Relabeling {
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.0.get(&v).copied().unwrap_or(v)
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        Word::new(w.letters().iter().map(|&l| self.apply(l)).collect())
    }

    pub fn apply_complex(&self, k: &SimplicialComplex) -> SimplicialComplex {
        k.relabel(|v| self.apply(v))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().map(|(&a, &b)| (a, b))
    }
}

/// Lifts a `d`-representing word to a `(d+1)`-representing one.
///
/// Letters are first renamed so that first occurrences appear in increasing
/// order (the `k`-th distinct letter to appear gets the `k`-th smallest label
/// of the alphabet). The renamed word is then prefixed with the whole alphabet
/// in decreasing order. Returns the lifted word and the renaming applied.
pub fn lift_word(word: &Word) -> (Word, Relabeling) {
    let sorted = word.alphabet();
    let mut first_seen: Vec<Vertex> = Vec::with_capacity(sorted.len());
    for &l in word.letters() {
        if !first_seen.contains(&l) {
            first_seen.push(l);
        }
    }
    let relabeling = Relabeling(
        first_seen
            .into_iter()
            .zip(sorted.vertices().iter().copied())
            .collect(),
    );
    let mut letters: Vec<Vertex> = sorted.vertices().iter().rev().copied().collect();
    letters.extend(relabeling.apply_word(word).into_letters());
    (Word::new(letters), relabeling)
}

/// Deletes instances of `b` leftmost-first while `Δ^d` is unchanged, until no
/// further instance can go.
pub fn minimize_letter(word: &Word, b: Vertex, d: usize) -> Result<Word> {
    if !word.letters().contains(&b) {
        return Err(Error::MissingLetter(b));
    }
    let target = delta_complex(word, d);
    let mut current = word.letters().to_vec();
    'outer: loop {
        for p in (0..current.len()).filter(|&p| current[p] == b) {
            let mut candidate = current.clone();
            candidate.remove(p);
            let candidate = Word::new(candidate);
            if delta_complex(&candidate, d) == target {
                current = candidate.into_letters();
                continue 'outer;
            }
        }
        return Ok(Word::new(current));
    }
}

/// The insertion pattern of `b` relative to the letter set `a`: the
/// restriction of `word` to `a ∪ {b}` with redundant copies of `b` removed.
pub fn insertion_pattern(word: &Word, a: &Face, b: Vertex, d: usize) -> Result<Word> {
    let restricted = word.restrict(&a.union(&Face::from([b])));
    minimize_letter(&restricted, b, d)
}
