//! Pure simplicial complexes on `[m]`, clique decompositions, i-nonfaces
//! and f-vectors.
//!
//! A complex is stored by its facet list. For a pure complex Δ of dimension
//! r-1, a *clique* is a maximal vertex set `V` (|V| >= r) such that every
//! r-subset of `V` is a facet of Δ; the clique complex `Δ^clique` is the
//! complex whose facets are these cliques. An *i-nonface* of Δ^clique is a
//! vertex set σ = {σ_1 < ... < σ_l} that is not a face although, for some
//! j >= 1, all the deletions σ \ σ_{j+k}, k = 0..i, are faces.

use crate::error::{Error, Result};
use itertools::Itertools;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A face: strictly increasing 1-based vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    /// Canonicalizing constructor: sorts and rejects repeats and zeros.
    pub fn new(mut vertices: Vec<u32>) -> Result<Face> {
        vertices.sort_unstable();
        if vertices.iter().any(|&v| v == 0) {
            return Err(Error::InvalidFace("vertices are 1-based".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!(
                "repeated vertex in {vertices:?}"
            )));
        }
        Ok(Face(vertices))
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Two-pointer subset test against another sorted vertex list.
    pub fn is_subset_of(&self, other: &[u32]) -> bool {
        let mut j = 0;
        for &v in &self.0 {
            while j < other.len() && other[j] < v {
                j += 1;
            }
            if j == other.len() || other[j] != v {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Remove the vertex at 0-based position `pos`.
    pub fn remove_at(&self, pos: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(pos);
        Face(v)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    /// True when the vertices form a contiguous run `a, a+1, ..., b`.
    pub fn is_interval(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A pure simplicial complex given by its facets on vertex set `[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Validates vertex bounds and purity (all facets of one cardinality).
    pub fn new(m: u32, facets: Vec<Face>) -> Result<SimplicialComplex> {
        let mut facets: Vec<Face> = facets;
        facets.sort();
        facets.dedup();
        for f in &facets {
            if f.is_empty() {
                return Err(Error::InvalidFace("empty facet".into()));
            }
            if f.vertices().last().copied().unwrap_or(0) > m {
                return Err(Error::InvalidFace(format!(
                    "facet {f} exceeds vertex bound {m}"
                )));
            }
        }
        if let Some(first) = facets.first() {
            let r = first.len();
            if let Some(bad) = facets.iter().find(|f| f.len() != r) {
                return Err(Error::NotPure(format!(
                    "facet {bad} has cardinality {} but {first} has {r}",
                    bad.len()
                )));
            }
        }
        Ok(SimplicialComplex { m, facets })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Common facet cardinality (0 for the empty complex).
    pub fn facet_cardinality(&self) -> usize {
        self.facets.first().map(|f| f.len()).unwrap_or(0)
    }

    pub fn has_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }
}

/// The clique complex of a pure complex: the maximal vertex sets all of
/// whose r-subsets are facets, plus the back-map from facets to the cliques
/// containing them.
#[derive(Debug, Clone)]
pub struct CliqueDecomposition {
    m: u32,
    r: usize,
    cliques: Vec<Face>,
    facet_cliques: BTreeMap<Face, Vec<usize>>,
}

impl CliqueDecomposition {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cliques(&self) -> &[Face] {
        &self.cliques
    }

    /// Clique indices containing a given facet of Δ.
    pub fn cliques_of_facet(&self, facet: &Face) -> &[usize] {
        self.facet_cliques
            .get(facet)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// All facets of Δ (= r-subsets of cliques), sorted.
    pub fn facets(&self) -> impl Iterator<Item = &Face> {
        self.facet_cliques.keys()
    }

    /// Face membership in Δ^clique: subset of some clique.
    pub fn is_face(&self, face: &Face) -> bool {
        !face.is_empty()
            && self
                .cliques
                .iter()
                .any(|c| face.is_subset_of(c.vertices()))
    }

    /// All faces of Δ^clique of the given cardinality, sorted, no repeats.
    pub fn faces_of_card(&self, card: usize) -> Vec<Face> {
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for clique in &self.cliques {
            if clique.len() < card {
                continue;
            }
            for sub in clique.vertices().iter().copied().combinations(card) {
                out.insert(Face(sub));
            }
        }
        out.into_iter().collect()
    }

    /// Largest face cardinality (0 when there are no cliques).
    pub fn max_face_card(&self) -> usize {
        self.cliques.iter().map(Face::len).max().unwrap_or(0)
    }

    /// The f-vector of Δ^clique as `(f_{-1}, f_0, ..., f_{dim})`; the empty
    /// complex yields `(1)`.
    pub fn f_vector(&self) -> Vec<u64> {
        let top = self.max_face_card();
        let mut fv = vec![1u64];
        for card in 1..=top {
            fv.push(self.faces_of_card(card).len() as u64);
        }
        fv
    }

    /// All i-nonfaces of Δ^clique of the given cardinality.
    ///
    /// σ qualifies when σ is not a face but for some position j >= 1 every
    /// deletion σ \ σ_{j+k}, k = 0..=i, is a face.
    pub fn i_nonfaces(&self, i: usize, card: usize) -> Vec<Face> {
        assert!(i >= 1, "i-nonfaces are defined for i >= 1");
        assert!(card >= 2, "an i-nonface has at least two vertices");
        let mut out = Vec::new();
        if card > self.m as usize || i + 1 > card {
            return out;
        }
        for sub in (1..=self.m).combinations(card) {
            let sigma = Face(sub);
            if self.is_face(&sigma) {
                continue;
            }
            let witnessed = (0..card - i).any(|j0| {
                (0..=i).all(|k| self.is_face(&sigma.remove_at(j0 + k)))
            });
            if witnessed {
                out.push(sigma);
            }
        }
        out
    }
}

/// Compute the clique decomposition of a pure (r-1)-dimensional complex.
///
/// Generalized Bron-Kerbosch over the hereditary system "every r-subset is
/// a facet": a vertex `v` is compatible with a current set `R` when every
/// (r-1)-subset of `R` together with `v` is a facet. Maximal compatible
/// sets of size below `r` (isolated corners of the complex) are discarded.
pub fn clique_complex(delta: &SimplicialComplex, r: usize) -> Result<CliqueDecomposition> {
    if r < 1 {
        return Err(Error::InvalidInput("clique rank r must be >= 1".into()));
    }
    if !delta.is_empty() && delta.facet_cardinality() != r {
        return Err(Error::NotPure(format!(
            "complex has facets of cardinality {}, expected r={r}",
            delta.facet_cardinality()
        )));
    }

    let mut cliques: Vec<Face> = Vec::new();
    let compatible = |current: &[u32], v: u32| -> bool {
        if current.len() + 1 < r {
            return true;
        }
        current
            .iter()
            .copied()
            .combinations(r - 1)
            .all(|mut sub| {
                sub.push(v);
                delta.has_facet(&Face::new(sub).expect("distinct sorted vertices"))
            })
    };

    fn extend(
        current: &mut Vec<u32>,
        candidates: Vec<u32>,
        excluded: Vec<u32>,
        r: usize,
        compatible: &dyn Fn(&[u32], u32) -> bool,
        out: &mut Vec<Face>,
    ) {
        if candidates.is_empty() && excluded.is_empty() {
            if current.len() >= r {
                out.push(Face(current.clone()));
            }
            return;
        }
        let mut candidates = candidates;
        let mut excluded = excluded;
        while let Some(v) = candidates.first().copied() {
            candidates.remove(0);
            current.push(v);
            current.sort_unstable();
            let next_candidates = candidates
                .iter()
                .copied()
                .filter(|&u| compatible(current, u))
                .collect();
            let next_excluded = excluded
                .iter()
                .copied()
                .filter(|&u| compatible(current, u))
                .collect();
            extend(current, next_candidates, next_excluded, r, compatible, out);
            current.retain(|&u| u != v);
            excluded.push(v);
        }
    }

    let initial: Vec<u32> = (1..=delta.m).filter(|&v| compatible(&[], v)).collect();
    let mut current = Vec::new();
    extend(
        &mut current,
        initial,
        Vec::new(),
        r,
        &compatible,
        &mut cliques,
    );
    cliques.sort();
    cliques.dedup();

    let mut facet_cliques: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
    for (idx, clique) in cliques.iter().enumerate() {
        for sub in clique.vertices().iter().copied().combinations(r) {
            facet_cliques.entry(Face(sub)).or_default().push(idx);
        }
    }
    // Every facet of Δ must appear in at least one clique, and all
    // r-subsets of cliques must be facets of Δ; both hold by construction.
    debug_assert!(delta.facets().iter().all(|f| facet_cliques.contains_key(f)));
    debug_assert!(facet_cliques.keys().all(|f| delta.has_facet(f)));

    Ok(CliqueDecomposition {
        m: delta.m,
        r,
        cliques,
        facet_cliques,
    })
}
