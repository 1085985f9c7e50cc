//! Finite simplicial complexes on integer vertex labels.
//!
//! A complex is stored by its facets only. Facets are kept in canonical
//! order (by size, then lexicographically), so two complexes are equal
//! exactly when they have the same faces. The empty complex, whose only
//! face is the empty set, has facet list `[∅]`; an isolated vertex `v` is
//! the singleton facet `{v}`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Vertex label. Elements of `[n]` in the usual notation.
pub type Vertex = u32;

/// A finite set of vertices, stored sorted and without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Builds a face from arbitrary vertices, discarding repeats.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    /// Builds a face, rejecting repeated vertices.
    pub fn from_distinct(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Face(v))
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Position of `v` within the sorted vertex list.
    pub fn rank_of(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    /// All faces obtained by dropping exactly one vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All subsets of this face, in no particular order.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 64, "face too large to enumerate subsets");
        (0u64..(1u64 << n)).map(move |mask| {
            Face(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Vertex>> for Face {
    fn from(v: Vec<Vertex>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for Face {
    fn from(v: [Vertex; N]) -> Self {
        Face::new(v)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A downward-closed set system, represented by its inclusion-maximal faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The downward closure of `candidate_faces`, canonicalized.
    pub fn from_facets(candidate_faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = candidate_faces.into_iter().collect();
        faces.sort_unstable_by(|a, b| b.cmp(a));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for face in faces {
            if !facets.iter().any(|f| face.is_subset(f)) {
                facets.push(face);
            }
        }
        if facets.is_empty() {
            facets.push(Face::empty());
        }
        facets.sort_unstable();
        let vertices: BTreeSet<Vertex> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
        }
    }

    /// The complex whose only face is `∅`.
    pub fn empty() -> Self {
        Self::from_facets(std::iter::empty())
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self::from_facets([Face::new(vertices)])
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Whether this is the empty complex `{∅}`.
    pub fn is_void_of_vertices(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_face(&self, sigma: &Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Largest face size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// Faces of the complex contained in `tau`.
    pub fn induced(&self, tau: &Face) -> Self {
        Self::from_facets(self.facets.iter().map(|f| f.intersection(tau)))
    }

    /// The common vertices of all facets. Nonempty exactly for cones.
    pub fn cone_vertices(&self) -> Face {
        let mut iter = self.facets.iter();
        let first = iter.next().cloned().unwrap_or_default();
        iter.fold(first, |acc, f| acc.intersection(f))
    }

    pub fn is_cone(&self) -> bool {
        !self.cone_vertices().is_empty()
    }

    /// Faces of dimension at most one.
    pub fn one_skeleton(&self) -> Self {
        let mut faces = Vec::new();
        for f in &self.facets {
            let v = f.vertices();
            if v.len() <= 2 {
                faces.push(f.clone());
                continue;
            }
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    faces.push(Face(vec![v[i], v[j]]));
                }
            }
        }
        Self::from_facets(faces)
    }

    /// Edges of the complex, in canonical order.
    pub fn edges(&self) -> Vec<Face> {
        self.one_skeleton()
            .facets
            .into_iter()
            .filter(|f| f.len() == 2)
            .collect()
    }

    /// Every face of the complex, including `∅`, in canonical order.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut set: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            set.extend(f.subsets());
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Applies a vertex relabeling. Vertices missing from `map` keep their label.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Self {
        Self::from_facets(
            self.facets
                .iter()
                .map(|f| Face::new(f.vertices().iter().map(|&v| map(v)))),
        )
    }
}

impl fmt::Display for SimplicialComplex {
    /// One facet per line. The empty complex renders as no lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            if !facet.is_empty() {
                writeln!(f, "{facet}")?;
            }
        }
        Ok(())
    }
}

/// Builds the complex of all faces passing `test`, growing upward level by
/// level from the singletons in `vertices`. A candidate of size `k + 1` is
/// tested only when all of its `k`-subsets are already faces, so `test` must
/// be monotone (every subset of a passing set passes).
pub(crate) fn grow_faces<F>(vertices: &[Vertex], test: F) -> SimplicialComplex
where
    F: Fn(&Face) -> bool + Sync,
{
    let singles: Vec<Face> = vertices.iter().map(|&v| Face(vec![v])).collect();
    let pass: Vec<bool> = singles.par_iter().map(&test).collect();
    let mut level: Vec<Face> = singles
        .into_iter()
        .zip(pass)
        .filter_map(|(f, ok)| ok.then_some(f))
        .collect();
    let mut all = level.clone();
    while level.len() > 1 {
        let known: HashSet<&Face> = level.iter().collect();
        let mut candidates = Vec::new();
        for i in 0..level.len() {
            let a = level[i].vertices();
            for b in &level[i + 1..] {
                let b = b.vertices();
                let k = a.len();
                if a[..k - 1] != b[..k - 1] {
                    continue;
                }
                let joined = Face::new(a.iter().chain(b.iter()).copied());
                if joined.boundary().all(|sub| known.contains(&sub)) {
                    candidates.push(joined);
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let pass: Vec<bool> = candidates.par_iter().map(&test).collect();
        level = candidates
            .into_iter()
            .zip(pass)
            .filter_map(|(f, ok)| ok.then_some(f))
            .collect();
        all.extend(level.iter().cloned());
    }
    SimplicialComplex::from_facets(all)
}
