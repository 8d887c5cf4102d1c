//! The sparse Eagon–Northcott complex of a clique complex: free-module
//! bases g^{*(α)} ⊗ f_σ, the position-signed differential assembled from
//! the indexing set, d² verification at build time, multigraded strand
//! homology, the first-homology/1-nonface equivalence, and the strand-rank
//! comparison against the linear Betti numbers of the lead-term ideal.

use crate::algebra::{
    binomial, is_diagonal, minor, Field, Monomial, MultiDegree, Polynomial, TermOrder, Var,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget};
use crate::lcmlattice::{gpw_betti, MonomialIdeal};
use crate::linalg::{in_column_span, SparseMatrix, SparseRow};
use crate::simplicial::{CliqueDecomposition, Face};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// Basis element g^{*(α)} ⊗ f_σ of homological degree i ≥ 1: a divided
/// power exponent α with n nonnegative parts, |α| = i−1, and a face σ of
/// the clique complex with |σ| = n+i−1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ENBasisElement {
    pub alpha: Vec<u32>,
    pub sigma: Face,
}

impl ENBasisElement {
    /// Multidegree (α + 1; ε_σ) in the Z^n × Z^m matrix grading.
    pub fn multidegree(&self, m: usize) -> MultiDegree {
        let mut md = MultiDegree::zero(self.alpha.len(), m);
        for (i, &a) in self.alpha.iter().enumerate() {
            md.rows[i] = a + 1;
        }
        for &v in self.sigma.vertices() {
            md.cols[v as usize - 1] = 1;
        }
        md
    }
}

impl fmt::Display for ENBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g*({}) (x) f{}",
            self.alpha.iter().join(","),
            self.sigma
        )
    }
}

/// The indexing set I_<(α, I): pairs (i, I_{i+j}) over the rows i with
/// α_i > 0 and the inclusive position window |α_{≤i−1}| ≤ j ≤ |α_{≤i}|.
/// Returned as (row, column value) pairs in enumeration order.
pub fn index_set(alpha: &[u32], i_face: &Face) -> Result<Vec<(u16, u32)>> {
    let ell: u32 = alpha.iter().sum();
    let expected = alpha.len() + ell as usize;
    if i_face.len() != expected {
        return Err(Error::ShapeMismatch(format!(
            "indexing set needs |I| = n + |α| = {expected}, got |I| = {}",
            i_face.len()
        )));
    }
    let verts = i_face.vertices();
    let mut out = Vec::new();
    let mut prefix: u32 = 0;
    for (idx, &ai) in alpha.iter().enumerate() {
        if ai > 0 {
            let row = idx + 1;
            for j in prefix..=prefix + ai {
                let pos = row + j as usize; // 1-based position in I
                out.push((row as u16, verts[pos - 1]));
            }
        }
        prefix += ai;
    }
    Ok(out)
}

/// All compositions of `total` into `parts` nonnegative parts, ascending
/// lexicographically.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// One differential entry: target basis index, the monomial coefficient
/// (a single variable for d_ℓ, ℓ ≥ 2; the facet lead term for d₁), and an
/// integer sign.
type DiffEntry = (usize, Monomial, i64);

/// The built complex: degree-0 module of rank one, per-degree basis
/// lists, and position-signed differentials with d² = 0 verified.
#[derive(Debug, Clone)]
pub struct ENComplex {
    n: u16,
    m: u16,
    order: Arc<TermOrder>,
    /// `bases[l-1]` is the basis of homological degree `l`.
    bases: Vec<Vec<ENBasisElement>>,
    /// `diffs[l-1][src]` lists the entries of d_l applied to source `src`.
    diffs: Vec<Vec<Vec<DiffEntry>>>,
}

impl ENComplex {
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn order(&self) -> &Arc<TermOrder> {
        &self.order
    }

    /// Largest homological degree with a nonzero module.
    pub fn top_degree(&self) -> usize {
        self.bases.len()
    }

    pub fn rank(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.bases.get(i - 1).map_or(0, |b| b.len() as u64)
        }
    }

    /// Basis of homological degree i ≥ 1 (empty beyond the top).
    pub fn basis(&self, i: usize) -> &[ENBasisElement] {
        assert!(i >= 1, "degree 0 is the rank-one exterior power");
        self.bases.get(i - 1).map_or(&[], Vec::as_slice)
    }

    pub fn differential_entries(&self, i: usize, src: usize) -> &[DiffEntry] {
        &self.diffs[i - 1][src]
    }

    /// Basis of the multidegree-μ slice of degree `level`: pairs of a
    /// basis index and a monomial coefficient whose degrees add to μ.
    fn strand_basis(&self, level: usize, mu: &MultiDegree) -> Vec<(usize, Monomial)> {
        if level == 0 {
            return monomials_with_profile(&mu.rows, &mu.cols)
                .into_iter()
                .map(|w| (0, w))
                .collect();
        }
        let Some(basis) = self.bases.get(level - 1) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for (bi, b) in basis.iter().enumerate() {
            if let Some(rem) = mu.checked_sub(&b.multidegree(self.m as usize)) {
                for w in monomials_with_profile(&rem.rows, &rem.cols) {
                    out.push((bi, w));
                }
            }
        }
        out
    }

    /// Matrix of d_level restricted to multidegree μ, rows indexed by the
    /// source slice basis and columns by the target slice basis.
    fn strand_matrix(
        &self,
        level: usize,
        src: &[(usize, Monomial)],
        tgt: &[(usize, Monomial)],
        field: Field,
    ) -> SparseMatrix {
        let tgt_index: BTreeMap<&(usize, Monomial), usize> =
            tgt.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut matrix = SparseMatrix::new(field, tgt.len());
        for (bi, w) in src {
            let mut entries = Vec::new();
            for (t, mono, sign) in &self.diffs[level - 1][*bi] {
                let key = (*t, w.mul(mono));
                let col = *tgt_index
                    .get(&key)
                    .expect("differential entries preserve the multidegree");
                entries.push((col, field.from_i64(*sign)));
            }
            matrix.push_row(SparseRow::from_entries(field, entries));
        }
        matrix
    }

    /// Homology rank at homological degree i ≥ 1 in a single multidegree.
    pub fn strand_homology_at(&self, i: usize, mu: &MultiDegree, field: Field) -> u64 {
        assert!(i >= 1, "strand homology is computed at degree >= 1");
        let here = self.strand_basis(i, mu);
        if here.is_empty() {
            return 0;
        }
        let below = self.strand_basis(i - 1, mu);
        let rank_out = self.strand_matrix(i, &here, &below, field).rank();
        let above = self.strand_basis(i + 1, mu);
        let rank_in = if above.is_empty() || i + 1 > self.top_degree() {
            0
        } else {
            self.strand_matrix(i + 1, &above, &here, field).rank()
        };
        (here.len() - rank_out - rank_in) as u64
    }

    /// Homology rank at homological degree i ≥ 1 over every internal
    /// degree-`internal_degree` multidegree, computed slice by slice and
    /// summed. The relevant multidegrees are the degree-i basis
    /// multidegrees shifted by monomials of the complementary degree.
    pub fn strand_homology(&self, i: usize, internal_degree: u32, field: Field) -> u64 {
        assert!(i >= 1, "strand homology is computed at degree >= 1");
        let gen_degree = self.n as u32 + i as u32 - 1;
        if internal_degree < gen_degree || self.rank(i) == 0 {
            return 0;
        }
        let shift = internal_degree - gen_degree;
        let vars: Vec<Var> = (1..=self.n)
            .flat_map(|r| (1..=self.m).map(move |c| Var::x(r, c)))
            .collect();
        let shifts: Vec<Monomial> = vars
            .iter()
            .copied()
            .combinations_with_replacement(shift as usize)
            .map(|vs| Monomial::from_pairs(vs.into_iter().map(|v| (v, 1))))
            .collect();
        let mut mus: BTreeSet<MultiDegree> = BTreeSet::new();
        for b in self.basis(i) {
            let base = b.multidegree(self.m as usize);
            for w in &shifts {
                mus.insert(base.add(&w.multidegree(self.n as usize, self.m as usize)));
            }
        }
        mus.into_iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|mu| self.strand_homology_at(i, mu, field))
            .sum()
    }

    /// Check a chain (given as terms `coefficient · monomial · basis
    /// element`) for being a nonzero non-bounding cycle. The chain must be
    /// multihomogeneous.
    pub fn certify_cycle(
        &self,
        i: usize,
        chain: &[(usize, Monomial, i64)],
        field: Field,
    ) -> Result<CycleCertificate> {
        if i < 1 || chain.is_empty() {
            return Err(Error::InvalidInput(
                "a chain certificate needs degree >= 1 and at least one term".into(),
            ));
        }
        let basis = self.basis(i);
        let mut mu: Option<MultiDegree> = None;
        for (bi, w, _) in chain {
            let b = basis.get(*bi).ok_or_else(|| {
                Error::InvalidInput(format!("basis index {bi} out of range in degree {i}"))
            })?;
            let term_mu = b
                .multidegree(self.m as usize)
                .add(&w.multidegree(self.n as usize, self.m as usize));
            match &mu {
                None => mu = Some(term_mu),
                Some(prev) if *prev == term_mu => {}
                Some(_) => {
                    return Err(Error::InvalidInput(
                        "chain terms have different multidegrees".into(),
                    ))
                }
            }
        }
        let mu = mu.expect("chain is nonempty");

        let here = self.strand_basis(i, &mu);
        let index: BTreeMap<&(usize, Monomial), usize> =
            here.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut coords: BTreeMap<usize, i64> = BTreeMap::new();
        for (bi, w, c) in chain {
            let pos = *index
                .get(&(*bi, w.clone()))
                .expect("multidegree-checked terms lie in the slice basis");
            *coords.entry(pos).or_insert(0) += c;
        }
        let vector = SparseRow::from_entries(
            field,
            coords
                .iter()
                .map(|(&pos, &c)| (pos, field.from_i64(c)))
                .collect(),
        );
        let nonzero = !vector.is_zero();

        // cycle test: the image under d_i vanishes
        let below = self.strand_basis(i - 1, &mu);
        let mut image: BTreeMap<usize, i64> = BTreeMap::new();
        let tgt_index: BTreeMap<&(usize, Monomial), usize> =
            below.iter().enumerate().map(|(k, e)| (e, k)).collect();
        for (bi, w, c) in chain {
            for (t, mono, sign) in &self.diffs[i - 1][*bi] {
                let key = (*t, w.mul(mono));
                let col = *tgt_index
                    .get(&key)
                    .expect("differential entries preserve the multidegree");
                *image.entry(col).or_insert(0) += c * sign;
            }
        }
        let image_row = SparseRow::from_entries(
            field,
            image
                .iter()
                .map(|(&col, &c)| (col, field.from_i64(c)))
                .collect(),
        );
        let is_cycle = image_row.is_zero();

        // boundary test: membership in the column span of d_{i+1}
        let above = self.strand_basis(i + 1, &mu);
        let is_boundary = if above.is_empty() || i + 1 > self.top_degree() {
            !nonzero
        } else {
            let columns: Vec<SparseRow> = above
                .iter()
                .map(|(bi, w)| {
                    let entries = self.diffs[i][*bi]
                        .iter()
                        .map(|(t, mono, sign)| {
                            let key = (*t, w.mul(mono));
                            (index[&key], field.from_i64(*sign))
                        })
                        .collect();
                    SparseRow::from_entries(field, entries)
                })
                .collect();
            in_column_span(field, here.len(), &columns, &vector)
        };
        Ok(CycleCertificate {
            multidegree: mu,
            nonzero,
            is_cycle,
            is_boundary,
        })
    }
}

/// Verdict on a proposed chain.
#[derive(Debug, Clone)]
pub struct CycleCertificate {
    pub multidegree: MultiDegree,
    pub nonzero: bool,
    pub is_cycle: bool,
    pub is_boundary: bool,
}

impl CycleCertificate {
    pub fn is_nonbounding_cycle(&self) -> bool {
        self.nonzero && self.is_cycle && !self.is_boundary
    }
}

/// All monomials in the matrix variables with the exact row and column
/// degree profiles (a contingency-table enumeration).
fn monomials_with_profile(rows: &[u32], cols: &[u32]) -> Vec<Monomial> {
    let row_total: u32 = rows.iter().sum();
    let col_total: u32 = cols.iter().sum();
    if row_total != col_total {
        return Vec::new();
    }
    fn rec(
        row: usize,
        rows: &[u32],
        cols: &mut [u32],
        acc: &mut Vec<(Var, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if row == rows.len() {
            out.push(Monomial::from_pairs(acc.iter().copied()));
            return;
        }
        // distribute rows[row] across the columns within remaining capacity
        fn fill(
            row: usize,
            col: usize,
            remaining: u32,
            rows: &[u32],
            cols: &mut [u32],
            acc: &mut Vec<(Var, u32)>,
            out: &mut Vec<Monomial>,
        ) {
            if col == cols.len() {
                if remaining == 0 {
                    rec(row + 1, rows, cols, acc, out);
                }
                return;
            }
            let limit = remaining.min(cols[col]);
            for take in 0..=limit {
                if take > 0 {
                    cols[col] -= take;
                    acc.push((Var::x(row as u16 + 1, col as u16 + 1), take));
                }
                fill(row, col + 1, remaining - take, rows, cols, acc, out);
                if take > 0 {
                    cols[col] += take;
                    acc.pop();
                }
            }
        }
        fill(row, 0, rows[row], rows, cols, acc, out);
    }
    let mut out = Vec::new();
    let mut cols_work = cols.to_vec();
    rec(0, rows, &mut cols_work, &mut Vec::new(), &mut out);
    out
}

/// Assemble the sparse Eagon–Northcott complex of a clique complex inside
/// the generic n×m matrix. The order must be diagonal; d₁ sends each
/// cardinality-n face to the lead term of its maximal minor, and the
/// higher differentials carry ±x_{i,I_j} entries driven by the indexing
/// set. The composite of consecutive differentials is verified to vanish.
pub fn build_en_complex(
    decomposition: &CliqueDecomposition,
    n: u16,
    order: &Arc<TermOrder>,
) -> Result<ENComplex> {
    if n == 0 {
        return Err(Error::InvalidInput("the matrix needs at least one row".into()));
    }
    let m = u16::try_from(decomposition.m())
        .map_err(|_| Error::InvalidInput("vertex count exceeds the matrix width limit".into()))?;
    if !is_diagonal(order, n as usize, m as usize) {
        return Err(Error::NotDiagonal(order.to_string()));
    }

    let mut bases: Vec<Vec<ENBasisElement>> = Vec::new();
    for i in 1.. {
        let card = n as usize + i - 1;
        let faces = decomposition.faces_of_card(card);
        if faces.is_empty() {
            break;
        }
        let comps = compositions(i as u32 - 1, n as usize);
        let mut level = Vec::with_capacity(faces.len() * comps.len());
        for sigma in &faces {
            for alpha in &comps {
                level.push(ENBasisElement {
                    alpha: alpha.clone(),
                    sigma: sigma.clone(),
                });
            }
        }
        bases.push(level);
    }

    let field = Field::Rationals;
    let mut diffs: Vec<Vec<Vec<DiffEntry>>> = Vec::with_capacity(bases.len());
    for (li, level) in bases.iter().enumerate() {
        let l = li + 1;
        let mut level_diffs = Vec::with_capacity(level.len());
        if l == 1 {
            for b in level {
                let rows: Vec<u16> = (1..=n).collect();
                let cols: Vec<u16> = b.sigma.vertices().iter().map(|&v| v as u16).collect();
                let p = minor(n as usize, m as usize, &rows, &cols, order, field)?;
                let (lead, coeff) = p.lead().expect("minors are nonzero");
                let sign = if coeff.is_one() { 1 } else { -1 };
                level_diffs.push(vec![(0usize, lead.clone(), sign)]);
            }
        } else {
            let target_index: BTreeMap<(Vec<u32>, Face), usize> = bases[li - 1]
                .iter()
                .enumerate()
                .map(|(k, b)| ((b.alpha.clone(), b.sigma.clone()), k))
                .collect();
            for b in level {
                let mut entries = Vec::new();
                for (row, value) in index_set(&b.alpha, &b.sigma)? {
                    let position = b
                        .sigma
                        .vertices()
                        .iter()
                        .position(|&v| v == value)
                        .expect("indexing-set values come from the face")
                        + 1;
                    let mut alpha = b.alpha.clone();
                    alpha[row as usize - 1] -= 1;
                    let sigma = b.sigma.remove_at(position - 1);
                    let target = *target_index
                        .get(&(alpha, sigma))
                        .expect("reduced faces stay in the clique complex");
                    let sign = if position % 2 == 1 { 1 } else { -1 };
                    entries.push((target, Monomial::var(Var::x(row, value as u16)), sign));
                }
                level_diffs.push(entries);
            }
        }
        diffs.push(level_diffs);
    }

    // verify that consecutive differentials compose to zero
    for l in 2..=diffs.len() {
        for (src, entries) in diffs[l - 1].iter().enumerate() {
            let mut acc: BTreeMap<(usize, Monomial), i64> = BTreeMap::new();
            for (mid, mono1, s1) in entries {
                for (tgt, mono2, s2) in &diffs[l - 2][*mid] {
                    *acc.entry((*tgt, mono1.mul(mono2))).or_insert(0) += s1 * s2;
                }
            }
            if acc.values().any(|&c| c != 0) {
                return Err(Error::DifferentialBroken(format!(
                    "d_{} ∘ d_{l} is nonzero on source {src}",
                    l - 1
                )));
            }
        }
    }

    Ok(ENComplex {
        n,
        m,
        order: order.clone(),
        bases,
        diffs,
    })
}

/// Both sides of the first-homology equivalence: H₁ of the complex in
/// internal degree n+1, and the 1-nonfaces of cardinality n+1.
#[derive(Debug, Clone)]
pub struct OneNonfaceReport {
    pub h1_rank: u64,
    pub nonfaces: Vec<Face>,
    pub agrees: bool,
}

/// Compute H₁(C)_{n+1} and the cardinality-(n+1) 1-nonfaces and report
/// whether vanishing of the former coincides with emptiness of the latter.
pub fn one_nonface_homology_equiv(
    decomposition: &CliqueDecomposition,
    n: u16,
    order: &Arc<TermOrder>,
    field: Field,
) -> Result<OneNonfaceReport> {
    let complex = build_en_complex(decomposition, n, order)?;
    let h1_rank = complex.strand_homology(1, n as u32 + 1, field);
    let nonfaces = decomposition.i_nonfaces(1, n as usize + 1);
    let agrees = (h1_rank == 0) == nonfaces.is_empty();
    Ok(OneNonfaceReport {
        h1_rank,
        nonfaces,
        agrees,
    })
}

/// One homological degree of the strand-rank comparison.
#[derive(Debug, Clone, Serialize)]
pub struct StrandRankRow {
    pub i: usize,
    /// rank C_i, equivalently f_{n+i−2}(Δ^clique)·C(n+i−2, n−1).
    pub complex_rank: u64,
    /// β_{i, n+i−1} of the quotient by the lead-term ideal.
    pub linear_betti: u64,
    pub equal: bool,
}

/// Outcome of the strand-rank comparison.
#[derive(Debug, Clone, Serialize)]
pub struct LinearStrandRankReport {
    pub rows: Vec<StrandRankRow>,
    pub all_equal: bool,
    /// Minimal generator count of the lead-term ideal used on the Betti
    /// side (its basis can be larger than the facet generator set).
    pub initial_ideal_gens: usize,
}

/// Compare the free-module ranks of the complex against the linear Betti
/// numbers of the lead-term ideal of the facet minors, homological degree
/// by homological degree. The quotient convention makes the comparison
/// rank C_i = β_{i, n+i−1}(S/in(J)) for i ≥ 1. Requires the clique
/// complex to have no 1-nonfaces of cardinality n+1.
pub fn linear_strand_rank_check(
    decomposition: &CliqueDecomposition,
    n: u16,
    order: &Arc<TermOrder>,
    field: Field,
    caps: &Caps,
) -> Result<LinearStrandRankReport> {
    let offenders = decomposition.i_nonfaces(1, n as usize + 1);
    if !offenders.is_empty() {
        return Err(Error::HypothesisFailed(format!(
            "the clique complex has a 1-nonface of cardinality {}: {}",
            n + 1,
            offenders[0]
        )));
    }
    let complex = build_en_complex(decomposition, n, order)?;

    let facets = decomposition.faces_of_card(n as usize);
    if facets.is_empty() {
        return Err(Error::InvalidInput(
            "the complex has no facets; there is no ideal to compare against".into(),
        ));
    }
    let m = decomposition.m() as usize;
    let rows: Vec<u16> = (1..=n).collect();
    let gens: Vec<Polynomial> = facets
        .iter()
        .map(|f| {
            let cols: Vec<u16> = f.vertices().iter().map(|&v| v as u16).collect();
            minor(n as usize, m, &rows, &cols, order, field)
        })
        .collect::<Result<_>>()?;
    let mut budget = Budget::new(caps.gb_steps);
    let gb = buchberger(&gens, &mut budget)?;
    let lead_ideal = MonomialIdeal::new(gb.lead_monomials())?;
    let initial_ideal_gens = lead_ideal.num_gens();
    let betti = gpw_betti(&lead_ideal, field, caps)?;
    let coarse = betti.coarse();

    let top = complex.top_degree().max(betti.pd()) + 1;
    let mut report_rows = Vec::new();
    for i in 1..=top {
        let complex_rank = complex.rank(i);
        let linear_betti = coarse
            .get(&(i, n as u32 + i as u32 - 1))
            .copied()
            .unwrap_or(0);
        report_rows.push(StrandRankRow {
            i,
            complex_rank,
            linear_betti,
            equal: complex_rank == linear_betti,
        });
    }
    Ok(LinearStrandRankReport {
        all_equal: report_rows.iter().all(|r| r.equal),
        rows: report_rows,
        initial_ideal_gens,
    })
}

/// Closed form for the free-module ranks: faces times compositions.
pub fn expected_rank(decomposition: &CliqueDecomposition, n: u16, i: usize) -> u64 {
    if i == 0 {
        return 1;
    }
    let card = n as usize + i - 1;
    let faces = decomposition.faces_of_card(card).len() as u64;
    faces * binomial(card - 1, n as usize - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfi::{build_rdfi, is_lcm_closed};
    use crate::simplicial::{clique_complex, SimplicialComplex};

    fn q() -> Field {
        Field::Rationals
    }

    fn decomposition(m: u32, facets: &[&[u32]], r: usize) -> CliqueDecomposition {
        let delta = SimplicialComplex::new(
            m,
            facets
                .iter()
                .map(|f| Face::new(f.to_vec()).unwrap())
                .collect(),
        )
        .unwrap();
        clique_complex(&delta, r).unwrap()
    }

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    fn xm(pairs: &[(u16, u16)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(r, c)| (Var::x(r, c), 1)))
    }

    #[test]
    fn index_set_fixtures() {
        assert_eq!(
            index_set(&[1, 1, 1], &face(&[1, 2, 3, 4, 5, 6])).unwrap(),
            vec![(1, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]
        );
        assert_eq!(
            index_set(&[1, 0, 2], &face(&[1, 2, 3, 4, 5, 6])).unwrap(),
            vec![(1, 1), (1, 2), (3, 4), (3, 5), (3, 6)]
        );
        assert_eq!(
            index_set(&[2, 1], &face(&[1, 2, 4, 5, 6])).unwrap(),
            vec![(1, 1), (1, 2), (1, 4), (2, 5), (2, 6)]
        );
        assert!(matches!(
            index_set(&[1, 1], &face(&[1, 2, 3])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(
            compositions(2, 2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(1, 0), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn profile_enumeration() {
        // row profile (1,1), col profile (1,1): permutation matrices
        let ms = monomials_with_profile(&[1, 1], &[1, 1]);
        assert_eq!(ms.len(), 2);
        assert!(ms.contains(&xm(&[(1, 1), (2, 2)])));
        assert!(ms.contains(&xm(&[(1, 2), (2, 1)])));
        // mismatched totals give nothing
        assert!(monomials_with_profile(&[2], &[1]).is_empty());
        // empty profile gives the unit monomial
        assert_eq!(monomials_with_profile(&[0], &[0, 0]), vec![Monomial::one()]);
    }

    #[test]
    fn ranks_of_small_complexes() {
        // first nonface-example graph: cliques {1,2,4}, {1,3,4}
        let d = decomposition(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]], 2);
        let c = build_en_complex(&d, 3, &TermOrder::default_lex()).unwrap();
        assert_eq!(c.rank(0), 1);
        assert_eq!(c.rank(1), 2);
        assert_eq!(c.rank(2), 0);
        assert_eq!(c.top_degree(), 1);

        // complete complex on [4] with n = 3
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d4 = decomposition(4, &refs, 3);
        let c4 = build_en_complex(&d4, 3, &TermOrder::default_lex()).unwrap();
        for i in 0..=3 {
            assert_eq!(c4.rank(i), expected_rank(&d4, 3, i), "degree {i}");
        }
        assert_eq!(c4.rank(1), 4);
        assert_eq!(c4.rank(2), 3);
        assert_eq!(c4.rank(3), 0);

        // complete complex on [5] exercises a three-step differential chain
        let facets5: Vec<Vec<u32>> = (1u32..=5).combinations(3).collect();
        let refs5: Vec<&[u32]> = facets5.iter().map(|f| f.as_slice()).collect();
        let d5 = decomposition(5, &refs5, 3);
        let c5 = build_en_complex(&d5, 3, &TermOrder::default_lex()).unwrap();
        assert_eq!(c5.rank(1), 10);
        assert_eq!(c5.rank(2), 15);
        assert_eq!(c5.rank(3), 6);
        assert_eq!(c5.top_degree(), 3);
        for i in 0..=4 {
            assert_eq!(c5.rank(i), expected_rank(&d5, 3, i), "degree {i}");
        }
    }

    #[test]
    fn empty_complex_has_only_the_exterior_power() {
        let delta = SimplicialComplex::new(3, Vec::new()).unwrap();
        let d = clique_complex(&delta, 3).unwrap();
        let c = build_en_complex(&d, 3, &TermOrder::default_lex()).unwrap();
        assert_eq!(c.top_degree(), 0);
        assert_eq!(c.rank(0), 1);
        assert_eq!(c.rank(1), 0);
    }

    #[test]
    fn non_diagonal_orders_are_rejected() {
        let d = decomposition(3, &[&[1, 2], &[2, 3]], 2);
        let bad = Arc::new(TermOrder::Lex(crate::algebra::VarOrder::Explicit(vec![
            Var::x(1, 3),
            Var::x(1, 2),
            Var::x(1, 1),
        ])));
        assert!(matches!(
            build_en_complex(&d, 2, &bad),
            Err(Error::NotDiagonal(_))
        ));
    }

    #[test]
    fn differential_entries_are_linear_with_position_signs() {
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d4 = decomposition(4, &refs, 3);
        let c = build_en_complex(&d4, 3, &TermOrder::default_lex()).unwrap();
        // every d_l entry for l >= 2 is a single variable
        for i in 2..=c.top_degree() {
            for src in 0..c.rank(i) as usize {
                for (_, mono, sign) in c.differential_entries(i, src) {
                    assert_eq!(mono.degree(), 1);
                    assert!(*sign == 1 || *sign == -1);
                }
            }
        }
        // d_1 sends a face to the diagonal lead term of its minor
        let idx = c
            .basis(1)
            .iter()
            .position(|b| b.sigma == face(&[1, 2, 4]))
            .unwrap();
        let entries = c.differential_entries(1, idx);
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].1, xm(&[(1, 1), (2, 2), (3, 4)]));
        assert_eq!(entries[0].2, 1);

        // d_2 on g*(e_1) (x) f_{1,2,3,4}: positions 1 and 2, signs +, -
        let src = c
            .basis(2)
            .iter()
            .position(|b| b.alpha == vec![1, 0, 0] && b.sigma == face(&[1, 2, 3, 4]))
            .unwrap();
        let entries = c.differential_entries(2, src);
        assert_eq!(entries.len(), 2);
        let f234 = c.basis(1).iter().position(|b| b.sigma == face(&[2, 3, 4])).unwrap();
        let f134 = c.basis(1).iter().position(|b| b.sigma == face(&[1, 3, 4])).unwrap();
        assert_eq!(entries[0], (f234, Monomial::var(Var::x(1, 1)), 1));
        assert_eq!(entries[1], (f134, Monomial::var(Var::x(1, 2)), -1));
    }

    #[test]
    fn complete_complex_strands_are_exact() {
        // the full complex resolves, so every strand is exact in positive
        // homological degrees
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d4 = decomposition(4, &refs, 3);
        let c = build_en_complex(&d4, 3, &TermOrder::default_lex()).unwrap();
        for i in 1..=2 {
            for degree in [i as u32 + 2, i as u32 + 3, i as u32 + 4] {
                assert_eq!(
                    c.strand_homology(i, degree, q()),
                    0,
                    "H_{i} in degree {degree}"
                );
            }
        }
    }

    #[test]
    fn first_graph_has_first_homology_and_the_certified_cycle() {
        let d = decomposition(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]], 2);
        assert_eq!(d.cliques(), &[face(&[1, 2, 4]), face(&[1, 3, 4])]);
        let c = build_en_complex(&d, 3, &TermOrder::default_lex()).unwrap();
        assert_eq!(c.strand_homology(1, 4, q()), 1);
        // generator degree: no homology below
        assert_eq!(c.strand_homology(1, 3, q()), 0);

        // z = x22 f_{1,3,4} - x23 f_{1,2,4}
        let f134 = c.basis(1).iter().position(|b| b.sigma == face(&[1, 3, 4])).unwrap();
        let f124 = c.basis(1).iter().position(|b| b.sigma == face(&[1, 2, 4])).unwrap();
        let chain = vec![
            (f134, Monomial::var(Var::x(2, 2)), 1),
            (f124, Monomial::var(Var::x(2, 3)), -1),
        ];
        let cert = c.certify_cycle(1, &chain, q()).unwrap();
        assert!(cert.nonzero);
        assert!(cert.is_cycle);
        assert!(!cert.is_boundary);
        assert!(cert.is_nonbounding_cycle());
        assert_eq!(cert.multidegree.rows, vec![1, 2, 1]);
        assert_eq!(cert.multidegree.cols, vec![1, 1, 1, 1]);

        // sanity: a boundary-style chain in the complete complex IS a boundary
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let full = build_en_complex(&decomposition(4, &refs, 3), 3, &TermOrder::default_lex())
            .unwrap();
        let g134 = full.basis(1).iter().position(|b| b.sigma == face(&[1, 3, 4])).unwrap();
        let g124 = full.basis(1).iter().position(|b| b.sigma == face(&[1, 2, 4])).unwrap();
        let chain = vec![
            (g134, Monomial::var(Var::x(2, 2)), 1),
            (g124, Monomial::var(Var::x(2, 3)), -1),
        ];
        let cert = full.certify_cycle(1, &chain, q()).unwrap();
        assert!(cert.is_cycle && cert.is_boundary);
    }

    #[test]
    fn one_nonface_equivalence_on_the_three_example_graphs() {
        let graphs: [&[&[u32]]; 3] = [
            &[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]],
            &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]],
            &[&[1, 2], &[1, 4], &[2, 3], &[2, 4], &[3, 4]],
        ];
        let expected_h1 = [1u64, 0, 0];
        for (edges, h1) in graphs.iter().zip(expected_h1) {
            let d = decomposition(4, edges, 2);
            let report =
                one_nonface_homology_equiv(&d, 3, &TermOrder::default_lex(), q()).unwrap();
            assert!(report.agrees);
            assert_eq!(report.h1_rank, h1);
            assert_eq!(report.nonfaces.is_empty(), h1 == 0);
        }
    }

    #[test]
    fn one_nonface_equivalence_on_random_pure_complexes() {
        let mut state: u64 = 0x00c0_ffee_d00d_f00d;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut done = 0;
        while done < 10 {
            let m = 4 + (next() % 3) as u32; // 4..6
            let all: Vec<Vec<u32>> = (1..=m).combinations(3).collect();
            let mut facets: Vec<Face> = Vec::new();
            for f in &all {
                if next() % 3 == 0 {
                    facets.push(Face::new(f.clone()).unwrap());
                }
            }
            if facets.is_empty() {
                continue;
            }
            let delta = SimplicialComplex::new(m, facets).unwrap();
            let d = clique_complex(&delta, 3).unwrap();
            let report =
                one_nonface_homology_equiv(&d, 3, &TermOrder::default_lex(), q()).unwrap();
            assert!(report.agrees, "cliques {:?}", d.cliques());
            done += 1;
        }
    }

    #[test]
    fn lcm_closed_complexes_have_no_one_nonfaces() {
        // the known lcm-closed two-interval complex at r = n = 3
        let two = decomposition(
            5,
            &(1u32..=4)
                .combinations(3)
                .chain((2u32..=5).combinations(3))
                .collect::<Vec<_>>()
                .iter()
                .map(|f| f.as_slice())
                .collect::<Vec<_>>(),
            3,
        );
        assert!(two.i_nonfaces(1, 4).is_empty());

        // randomized draws biased toward overlapping vertex intervals,
        // filtered down to the lcm-closed ones
        let mut state: u64 = 0xdead_10cc_beef_cafe;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut verified = 0;
        let mut multi_clique = 0;
        let mut trials = 0;
        while verified < 8 && trials < 300 {
            trials += 1;
            let m = 5 + (next() % 2) as u32; // 5..6
            let mut facets: BTreeSet<Face> = BTreeSet::new();
            let intervals = 1 + next() % 2;
            for _ in 0..intervals {
                let start = 1 + (next() % (m as u64 - 3)) as u32;
                for f in (start..=start + 3).combinations(3) {
                    facets.insert(Face::new(f).unwrap());
                }
            }
            if next() % 3 == 0 {
                let extra: Vec<u32> = (1..=m).combinations(3).nth(
                    (next() % binomial(m as usize, 3)) as usize,
                ).unwrap();
                facets.insert(Face::new(extra).unwrap());
            }
            let delta = SimplicialComplex::new(m, facets.into_iter().collect()).unwrap();
            let dfi = build_rdfi(delta, 3, 3, TermOrder::default_lex(), q()).unwrap();
            if !is_lcm_closed(&dfi).verdict {
                continue;
            }
            if dfi.decomposition().cliques().len() > 1 {
                multi_clique += 1;
            }
            assert!(
                dfi.decomposition().i_nonfaces(1, 4).is_empty(),
                "lcm-closed complex with a 1-nonface: cliques {:?}",
                dfi.decomposition().cliques()
            );
            verified += 1;
        }
        assert!(verified >= 8, "only {verified} lcm-closed draws in {trials} trials");
        assert!(multi_clique >= 2, "only {multi_clique} multi-clique draws");
    }

    #[test]
    fn strand_ranks_match_linear_bettis() {
        let caps = Caps::default();
        // single clique on [4], n = 3: the lead-term ideal of the maximal
        // minors resolves linearly with ranks 4, 3
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d4 = decomposition(4, &refs, 3);
        let report =
            linear_strand_rank_check(&d4, 3, &TermOrder::default_lex(), q(), &caps).unwrap();
        assert!(report.all_equal, "{:?}", report.rows);
        assert_eq!(report.rows[0].complex_rank, 4);
        assert_eq!(report.rows[1].complex_rank, 3);
        assert_eq!(report.initial_ideal_gens, 4);

        // two triangles sharing an edge: generators 2, no linear syzygies
        let d2 = decomposition(4, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]], 2);
        let report =
            linear_strand_rank_check(&d2, 3, &TermOrder::default_lex(), q(), &caps).unwrap();
        assert!(report.all_equal, "{:?}", report.rows);
        assert_eq!(report.rows[0].complex_rank, 2);
        assert_eq!(report.rows[0].linear_betti, 2);

        // three petals: hypothesis holds, generators are not a basis, yet
        // the strand ranks still match the lead-term ideal
        let d3 = decomposition(7, &[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]], 3);
        let report =
            linear_strand_rank_check(&d3, 3, &TermOrder::default_lex(), q(), &caps).unwrap();
        assert!(report.all_equal, "{:?}", report.rows);
        assert_eq!(report.rows[0].complex_rank, 3);
        assert!(report.initial_ideal_gens > 3);

        // hypothesis violation is refused
        let bad = decomposition(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]], 2);
        assert!(matches!(
            linear_strand_rank_check(&bad, 3, &TermOrder::default_lex(), q(), &caps),
            Err(Error::HypothesisFailed(_))
        ));
    }
}
