//! Words over vertex letters and their colorful subwords.
//!
//! A word `W` is `d`-colorful on its alphabet `σ` (of size `r ≥ 2`) when it
//! has length `(d+1)(r-1)+1` and each of its `d+1` blocks is a permutation of
//! `σ`. Block `i` (counting from zero) covers positions `i(r-1) ..= i(r-1)+r-1`,
//! so neighbouring blocks share one letter. The complex `Δ^d(W)` collects the
//! alphabets of all `d`-colorful subwords of `W`.
//!
//! Positions are zero-based in memory and one-based in every text format.

mod construct;

pub use construct::{
    canonical_word, delete_letter, deletion_positions, facet_concat_dimension,
    facet_concat_word, insertion_pattern, lift_word, minimize_letter, Relabeling,
};

use std::fmt;

use crate::complex::{grow_faces, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Largest alphabet accepted by [`find_colorful_subword`]; the search keeps a
/// bitmask of consumed letters per block.
pub const MAX_ALPHABET: usize = 24;

/// A finite sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Vertex>);

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set of letters occurring in the word.
    pub fn alphabet(&self) -> Face {
        Face::new(self.0.iter().copied())
    }

    /// The subword at the given (increasing) positions.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Collapses runs of equal letters.
    pub fn reduce(&self) -> Word {
        let mut out = self.0.clone();
        out.dedup();
        Word(out)
    }

    /// Keeps only letters in `tau`, preserving order.
    pub fn restrict(&self, tau: &Face) -> Word {
        Word(self.0.iter().copied().filter(|&l| tau.contains(l)).collect())
    }

    pub fn is_colorful(&self, d: usize) -> bool {
        is_colorful(self, d)
    }
}

impl From<Vec<Vertex>> for Word {
    fn from(v: Vec<Vertex>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for Word {
    fn from(v: [Vertex; N]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Length of a `d`-colorful word on `r` letters.
pub fn colorful_length(r: usize, d: usize) -> usize {
    (d + 1) * r.saturating_sub(1) + 1
}

/// Whether `word` is a `d`-colorful word on its own alphabet.
pub fn is_colorful(word: &Word, d: usize) -> bool {
    let sigma = word.alphabet();
    let r = sigma.len();
    if r < 2 || word.len() != colorful_length(r, d) {
        return false;
    }
    let letters = word.letters();
    (0..=d).all(|block| {
        let start = block * (r - 1);
        let mut seen = vec![false; r];
        letters[start..start + r].iter().all(|&l| {
            let k = sigma.rank_of(l).expect("letter of own alphabet");
            !std::mem::replace(&mut seen[k], true)
        })
    })
}

/// Positions into a host word witnessing a `d`-colorful subword on `alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorfulCertificate {
    /// Strictly increasing, zero-based.
    pub positions: Vec<usize>,
    pub alphabet: Face,
    pub d: usize,
}

impl ColorfulCertificate {
    /// Checks the certificate against its host word.
    pub fn is_valid_for(&self, word: &Word) -> bool {
        let r = self.alphabet.len();
        if r == 0 || self.positions.len() != colorful_length(r, self.d) {
            return false;
        }
        if self.positions.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if self.positions.last().is_some_and(|&p| p >= word.len()) {
            return false;
        }
        let sub = word.subword(&self.positions);
        if r == 1 {
            return sub.letters()[0] == self.alphabet.vertices()[0];
        }
        sub.alphabet() == self.alphabet && is_colorful(&sub, self.d)
    }
}

impl fmt::Display for ColorfulCertificate {
    /// `alphabet | d | positions`, positions one-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} |", self.alphabet, self.d)?;
        for p in &self.positions {
            write!(f, " {}", p + 1)?;
        }
        Ok(())
    }
}

/// Automaton recognizing `d`-colorful subwords on a fixed alphabet.
///
/// A state is `(block, consumed)`: the current block index and the set of
/// letters already used in it, as a bitmask over the sorted alphabet. When a
/// block fills up, its last letter seeds the next block.
pub(crate) struct ColorfulAutomaton {
    alphabet: Face,
    r: usize,
    d: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Blocked,
    Accept,
    Next(usize),
}

impl ColorfulAutomaton {
    pub(crate) fn new(alphabet: Face, d: usize) -> Self {
        let r = alphabet.len();
        assert!((2..=MAX_ALPHABET).contains(&r));
        ColorfulAutomaton { alphabet, r, d }
    }

    pub(crate) fn state_count(&self) -> usize {
        (self.d + 1) << self.r
    }

    pub(crate) fn start(&self) -> usize {
        0
    }

    pub(crate) fn step(&self, state: usize, letter: Vertex) -> Step {
        let Some(k) = self.alphabet.rank_of(letter) else {
            return Step::Blocked;
        };
        let full = (1usize << self.r) - 1;
        let block = state >> self.r;
        let mask = state & full;
        let bit = 1usize << k;
        if mask & bit != 0 {
            return Step::Blocked;
        }
        let mask = mask | bit;
        if mask != full {
            Step::Next(block << self.r | mask)
        } else if block == self.d {
            Step::Accept
        } else {
            Step::Next((block + 1) << self.r | bit)
        }
    }

    /// Letters consumed to reach `state`.
    pub(crate) fn progress(&self, state: usize) -> usize {
        let block = state >> self.r;
        let mask = state & ((1usize << self.r) - 1);
        block * (self.r - 1) + mask.count_ones() as usize
    }

    pub(crate) fn total_length(&self) -> usize {
        colorful_length(self.r, self.d)
    }
}

/// Finds the lexicographically least position vector of a `d`-colorful
/// subword of `word` on alphabet `sigma`, or `None`.
///
/// A singleton alphabet `{v}` is witnessed by the first occurrence of `v`.
/// Runs a backward feasibility pass followed by a greedy forward pass, in
/// `O(|W|·(d+1)·2^|σ|)` time.
pub fn find_colorful_subword(
    word: &Word,
    sigma: &Face,
    d: usize,
) -> Result<Option<ColorfulCertificate>> {
    let r = sigma.len();
    if r == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if r > MAX_ALPHABET {
        return Err(Error::AlphabetTooLarge(r));
    }
    let letters = word.letters();
    if r == 1 {
        let v = sigma.vertices()[0];
        return Ok(letters
            .iter()
            .position(|&l| l == v)
            .map(|p| ColorfulCertificate {
                positions: vec![p],
                alphabet: sigma.clone(),
                d,
            }));
    }
    if !sigma.vertices().iter().all(|&v| letters.contains(&v)) {
        return Ok(None);
    }

    let automaton = ColorfulAutomaton::new(sigma.clone(), d);
    let states = automaton.state_count();
    let n = letters.len();
    // feasible[j * states + s]: from state s, the suffix starting at j completes a match.
    let mut feasible = vec![false; (n + 1) * states];
    for j in (0..n).rev() {
        let (head, tail) = feasible.split_at_mut((j + 1) * states);
        let here = &mut head[j * states..];
        let next = &tail[..states];
        for s in 0..states {
            here[s] = next[s]
                || match automaton.step(s, letters[j]) {
                    Step::Accept => true,
                    Step::Next(t) => next[t],
                    Step::Blocked => false,
                };
        }
    }
    if !feasible[automaton.start()] {
        return Ok(None);
    }

    let mut positions = Vec::with_capacity(automaton.total_length());
    let mut state = automaton.start();
    for (j, &l) in letters.iter().enumerate() {
        match automaton.step(state, l) {
            Step::Accept => {
                positions.push(j);
                return Ok(Some(ColorfulCertificate {
                    positions,
                    alphabet: sigma.clone(),
                    d,
                }));
            }
            Step::Next(t) if feasible[(j + 1) * states + t] => {
                positions.push(j);
                state = t;
            }
            _ => {}
        }
    }
    unreachable!("feasibility table promised a completion")
}

/// The complex `Δ^d(W)` of alphabets of `d`-colorful subwords of `word`.
///
/// Vertices are the letters of `word`. Faces are grown upward from the
/// singletons; a candidate is tested only when all its codimension-one
/// subsets are faces, which is sound because the face family is downward
/// closed.
pub fn delta_complex(word: &Word, d: usize) -> SimplicialComplex {
    let alphabet = word.alphabet();
    grow_faces(alphabet.vertices(), |face| {
        face.len() == 1
            || find_colorful_subword(word, face, d)
                .expect("faces stay within MAX_ALPHABET")
                .is_some()
    })
}

/// A maximal run of one letter inside a restricted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chunk {
    pub letter: Vertex,
    /// Zero-based start in the restriction.
    pub start: usize,
    /// Exclusive end in the restriction.
    pub end: usize,
}

impl Chunk {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// The chunks of `word.restrict(a)`, left to right.
pub fn chunks(word: &Word, a: &Face) -> Vec<Chunk> {
    let restricted = word.restrict(a);
    let mut out: Vec<Chunk> = Vec::new();
    for (i, &l) in restricted.letters().iter().enumerate() {
        match out.last_mut() {
            Some(c) if c.letter == l => c.end = i + 1,
            _ => out.push(Chunk {
                letter: l,
                start: i,
                end: i + 1,
            }),
        }
    }
    out
}
