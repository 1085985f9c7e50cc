//! The bipartite graphs `G_d` and a bounded search for representing words.
//!
//! `G_d` has an independent side `A = {1, …, n}` and, for every `σ ⊆ A`, a
//! group of vertices in `B` whose neighbourhood is exactly `σ`. The number of
//! copies per neighbourhood is a parameter here; the multiplicities needed for
//! non-representability are far beyond anything that can be built, and
//! [`GdParams::full_scale`] reports that instead of trying.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::words::{ColorfulAutomaton, Step, Word, MAX_ALPHABET};

/// Largest vertex count [`build_gd`] will produce.
pub const MAX_GD_VERTICES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GdParams {
    pub n: usize,
    pub d: usize,
    pub multiplicity: usize,
}

impl GdParams {
    pub fn new(n: usize, d: usize, multiplicity: usize) -> Result<Self> {
        if n == 0 || d == 0 || multiplicity == 0 {
            return Err(Error::InvalidParameter(
                "G_d needs n, d and multiplicity all at least 1".into(),
            ));
        }
        Ok(GdParams { n, d, multiplicity })
    }

    /// `K(n) = 2n(n-1)(d+2) + 1`.
    pub fn k_bound(&self) -> u64 {
        k_bound(self.n as u64, self.d as u64)
    }

    /// Parameters with multiplicity `(d+2)^K` for the least `n` with
    /// `K ≥ (d+2)²` and `2^n > C(K, (d+2)²)`. Always rejected by the vertex
    /// cap for `d ≥ 1`.
    pub fn full_scale(d: usize) -> Result<Self> {
        let scale = FullScale::for_dimension(d)?;
        let too_large = || {
            Error::TooLarge(format!(
                "n = {}, K = {}, multiplicity (d+2)^K has {} bits",
                scale.n,
                scale.k,
                scale.multiplicity.bits()
            ))
        };
        let multiplicity: usize = (&scale.multiplicity).try_into().map_err(|_| too_large())?;
        let params = GdParams::new(scale.n, d, multiplicity)?;
        params.vertex_count().ok_or_else(too_large)?;
        Ok(params)
    }

    /// `n + multiplicity · 2^n`, if within [`MAX_GD_VERTICES`].
    pub fn vertex_count(&self) -> Option<usize> {
        let groups = 1usize.checked_shl(u32::try_from(self.n).ok()?)?;
        let total = groups.checked_mul(self.multiplicity)?.checked_add(self.n)?;
        (total <= MAX_GD_VERTICES).then_some(total)
    }
}

fn k_bound(n: u64, d: u64) -> u64 {
    2 * n * n.saturating_sub(1) * (d + 2) + 1
}

/// The sizes the non-representability argument asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullScale {
    pub n: usize,
    pub k: u64,
    pub multiplicity: BigUint,
}

impl FullScale {
    pub fn for_dimension(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("d must be at least 1".into()));
        }
        let t = ((d + 2) * (d + 2)) as u64;
        for n in 1..=100_000usize {
            let k = k_bound(n as u64, d as u64);
            if k >= t && (BigUint::one() << n) > binomial(k, t) {
                let multiplicity = BigUint::from(d as u64 + 2).pow(
                    u32::try_from(k).map_err(|_| Error::TooLarge(format!("K = {k}")))?,
                );
                return Ok(FullScale { n, k, multiplicity });
            }
        }
        Err(Error::TooLarge("no n found below 100000".into()))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// A generated `G_d` together with its two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdGraph {
    pub params: GdParams,
    pub complex: SimplicialComplex,
    pub a: Face,
    pub b: Face,
    /// Each neighbourhood `σ ⊆ A` with the `B`-vertices realizing it.
    pub groups: Vec<(Face, Vec<Vertex>)>,
}

/// Subsets of `1..=n` in lexicographic order of their sorted element lists,
/// starting with the empty set.
fn subsets_lex(n: usize) -> Vec<Face> {
    fn go(next: Vertex, n: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Face>) {
        out.push(Face::new(cur.iter().copied()));
        for v in next..=n {
            cur.push(v);
            go(v + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as Vertex, &mut Vec::new(), &mut out);
    out
}

/// Builds `G_d`. `A` is numbered `1..=n`; the `B`-vertices follow, grouped by
/// neighbourhood in [`subsets_lex`] order.
pub fn build_gd(params: GdParams) -> Result<GdGraph> {
    let params = GdParams::new(params.n, params.d, params.multiplicity)?;
    let total = params.vertex_count().ok_or_else(|| {
        Error::TooLarge(format!(
            "G_d with n = {} and multiplicity {} exceeds {MAX_GD_VERTICES} vertices",
            params.n, params.multiplicity
        ))
    })?;
    let a = Face::new(1..=params.n as Vertex);
    let mut next = params.n as Vertex + 1;
    let mut groups = Vec::new();
    let mut facets = Vec::new();
    for sigma in subsets_lex(params.n) {
        let members: Vec<Vertex> = (0..params.multiplicity)
            .map(|_| {
                next += 1;
                next - 1
            })
            .collect();
        for &b in &members {
            if sigma.is_empty() {
                facets.push(Face::from([b]));
            }
            facets.extend(sigma.vertices().iter().map(|&v| Face::from([v, b])));
        }
        groups.push((sigma, members));
    }
    debug_assert_eq!(next as usize, total + 1);
    Ok(GdGraph {
        params,
        complex: SimplicialComplex::from_facets(facets),
        a,
        b: Face::new(params.n as Vertex + 1..next),
        groups,
    })
}

/// One tracked alphabet: a facet that must appear or a minimal non-face that
/// must not.
struct Tracker {
    automaton: ColorfulAutomaton,
    words: usize,
    required: bool,
}

/// Search state: the reachable automaton states of every tracker as a
/// bitset, one acceptance bit per tracker, and the set of letters used.
#[derive(Clone, PartialEq, Eq, Hash)]
struct SearchState {
    bits: Vec<u64>,
}

struct Search<'a> {
    letters: &'a [Vertex],
    trackers: Vec<Tracker>,
    offsets: Vec<usize>,
    accept_offset: usize,
    used_offset: usize,
    dead: HashSet<(SearchState, usize)>,
}

impl SearchState {
    fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }
}

impl<'a> Search<'a> {
    fn new(letters: &'a [Vertex], trackers: Vec<Tracker>) -> Self {
        let mut offsets = Vec::with_capacity(trackers.len());
        let mut at = 0;
        for t in &trackers {
            offsets.push(at);
            at += t.words;
        }
        let accept_offset = at;
        let used_offset = at + trackers.len();
        Search {
            letters,
            trackers,
            offsets,
            accept_offset,
            used_offset,
            dead: HashSet::new(),
        }
    }

    fn initial(&self) -> SearchState {
        let total = self.used_offset + self.letters.len();
        let mut s = SearchState {
            bits: vec![0; total.div_ceil(64)],
        };
        for (t, &o) in self.trackers.iter().zip(&self.offsets) {
            s.set(o + t.automaton.start());
        }
        s
    }

    /// Appends `letter`; `None` if a forbidden alphabet becomes colorful.
    fn advance(&self, state: &SearchState, li: usize) -> Option<SearchState> {
        let letter = self.letters[li];
        let mut out = state.clone();
        out.set(self.used_offset + li);
        for (k, (t, &o)) in self.trackers.iter().zip(&self.offsets).enumerate() {
            if state.get(self.accept_offset + k) {
                continue;
            }
            for s in 0..t.words {
                if !state.get(o + s) {
                    continue;
                }
                match t.automaton.step(s, letter) {
                    Step::Accept => {
                        if !t.required {
                            return None;
                        }
                        out.set(self.accept_offset + k);
                    }
                    Step::Next(n) => out.set(o + n),
                    Step::Blocked => {}
                }
            }
        }
        Some(out)
    }

    /// Whether `remaining` more letters could still reach a representing word.
    fn viable(&self, state: &SearchState, remaining: usize) -> bool {
        let unused = (0..self.letters.len())
            .filter(|&i| !state.get(self.used_offset + i))
            .count();
        if unused > remaining {
            return false;
        }
        self.trackers
            .iter()
            .zip(&self.offsets)
            .enumerate()
            .all(|(k, (t, &o))| {
                if !t.required || state.get(self.accept_offset + k) {
                    return true;
                }
                let best = (0..t.words)
                    .filter(|&s| state.get(o + s))
                    .map(|s| t.automaton.progress(s))
                    .max()
                    .unwrap_or(0);
                t.automaton.total_length() - best <= remaining
            })
    }

    fn complete(&self, state: &SearchState) -> bool {
        (0..self.letters.len()).all(|i| state.get(self.used_offset + i))
            && self
                .trackers
                .iter()
                .enumerate()
                .all(|(k, t)| !t.required || state.get(self.accept_offset + k))
    }

    fn extend(&mut self, state: &SearchState, remaining: usize, word: &mut Vec<Vertex>) -> bool {
        if remaining == 0 {
            return self.complete(state);
        }
        if !self.viable(state, remaining) || self.dead.contains(&(state.clone(), remaining)) {
            return false;
        }
        for li in 0..self.letters.len() {
            let Some(next) = self.advance(state, li) else {
                continue;
            };
            word.push(self.letters[li]);
            if self.extend(&next, remaining - 1, word) {
                return true;
            }
            word.pop();
        }
        self.dead.insert((state.clone(), remaining));
        false
    }
}

/// Minimal non-faces of `k` with at least two vertices.
fn minimal_non_faces(k: &SimplicialComplex) -> Vec<Face> {
    let vertices = Face::new(k.vertices().iter().copied());
    let mut out: Vec<Face> = vertices
        .subsets()
        .filter(|t| t.len() >= 2 && !k.is_face(t) && t.boundary().all(|b| k.is_face(&b)))
        .collect();
    out.sort_unstable();
    out
}

/// The least word `W` (shorter first, then lexicographic) with
/// `|W| ≤ max_len` and `Δ^d(W) = k`, or `None` if there is none that short.
///
/// Only letters of `k` are tried. A prefix is abandoned as soon as a minimal
/// non-face of `k` has a colorful subword in it, since appending letters only
/// adds faces, or when some facet can no longer be completed in the letters
/// left. Complexes with more than [`MAX_ALPHABET`] vertices in a facet or
/// minimal non-face are rejected.
pub fn search_word(k: &SimplicialComplex, d: usize, max_len: usize) -> Result<Option<Word>> {
    let letters = k.vertices().to_vec();
    let forbidden = minimal_non_faces(k);
    let required: Vec<Face> = k.facets().iter().filter(|f| f.len() >= 2).cloned().collect();
    let mut trackers = Vec::new();
    for (faces, req) in [(&required, true), (&forbidden, false)] {
        for f in faces.iter() {
            if f.len() > MAX_ALPHABET {
                return Err(Error::AlphabetTooLarge(f.len()));
            }
            let automaton = ColorfulAutomaton::new(f.clone(), d);
            trackers.push(Tracker {
                words: automaton.state_count(),
                automaton,
                required: req,
            });
        }
    }
    let mut search = Search::new(&letters, trackers);
    let start = search.initial();
    for len in 0..=max_len {
        let mut word = Vec::with_capacity(len);
        if search.extend(&start, len, &mut word) {
            return Ok(Some(Word::new(word)));
        }
    }
    Ok(None)
}
