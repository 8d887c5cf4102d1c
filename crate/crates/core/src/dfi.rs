//! r-determinantal facet ideals: the generating minors [a|b] attached to a
//! pure complex, and the structural conditions governing when those
//! generators form a Gröbner basis (lcm-closed, unit-interval, and the two
//! "closed" specializations).
//!
//! The generator [a|b] is the r×r minor of the generic n×m matrix with
//! rows a ⊆ [n] and columns b, where b runs over the facets of Δ. The
//! lcm-closed condition (*) asks, for every pair of generators with
//! non-coprime lead terms that do not sit inside a common maximal clique,
//! for a minor supported on the intersection of two host cliques whose
//! lead term divides the lcm of the pair's lead terms.

use crate::algebra::{minor, Field, Monomial, TermOrder, VarOrder};
use crate::error::{Error, Result};
use crate::simplicial::{clique_complex, CliqueDecomposition, Face, SimplicialComplex};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Polynomial;

/// One generating minor [a|b]: row set, column facet, and the expanded
/// polynomial under the ideal's term order.
#[derive(Debug, Clone)]
pub struct Generator {
    rows: Vec<u16>,
    cols: Face,
    poly: Polynomial,
}

impl Generator {
    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    pub fn cols(&self) -> &Face {
        &self.cols
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn lead_monomial(&self) -> &Monomial {
        self.poly.lead_monomial().expect("minors are nonzero")
    }

    /// Bracket notation `[a1,..,ar|b1,..,br]`.
    pub fn label(&self) -> String {
        format!(
            "[{}|{}]",
            self.rows.iter().join(","),
            self.cols.vertices().iter().join(",")
        )
    }
}

/// An r-DFI: the complex, its clique decomposition, and all generators.
#[derive(Debug, Clone)]
pub struct RDfi {
    n: u16,
    m: u16,
    r: usize,
    delta: SimplicialComplex,
    decomposition: CliqueDecomposition,
    order: Arc<TermOrder>,
    field: Field,
    generators: Vec<Generator>,
}

impl RDfi {
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn decomposition(&self) -> &CliqueDecomposition {
        &self.decomposition
    }

    pub fn order(&self) -> &Arc<TermOrder> {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// The generator polynomials, in the fixed deterministic order.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// The monomial ideal of generator lead terms.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.lead_monomial().clone())
            .collect()
    }
}

/// Construct the r-DFI of a pure (r−1)-dimensional complex on [m] inside
/// the generic n×m matrix. Generators are ordered facet-major (facets
/// sorted, then row subsets lexicographically).
pub fn build_rdfi(
    delta: SimplicialComplex,
    n: u16,
    r: usize,
    order: Arc<TermOrder>,
    field: Field,
) -> Result<RDfi> {
    if r > n as usize {
        return Err(Error::RankTooLarge { r, n: n as usize });
    }
    if n > delta.m() as u16 {
        return Err(Error::WrongShape(format!(
            "matrix has n = {n} rows but only m = {} columns",
            delta.m()
        )));
    }
    let decomposition = clique_complex(&delta, r)?;
    let m = delta.m() as u16;

    let mut generators = Vec::new();
    for facet in delta.facets() {
        let cols: Vec<u16> = facet
            .vertices()
            .iter()
            .map(|&v| u16::try_from(v).expect("vertex bound checked by the complex"))
            .collect();
        for rows in (1..=n).combinations(r) {
            let poly = minor(n as usize, m as usize, &rows, &cols, &order, field)?;
            generators.push(Generator {
                rows,
                cols: facet.clone(),
                poly,
            });
        }
    }
    Ok(RDfi {
        n,
        m,
        r,
        delta,
        decomposition,
        order,
        field,
        generators,
    })
}

/// How a non-coprime pair of generators satisfies condition (*).
#[derive(Debug, Clone, Serialize)]
pub enum PairResolution {
    /// Both column facets lie in one maximal clique; the pair imposes no
    /// requirement.
    SharedClique { clique: usize },
    /// A minor on the intersection of two host cliques divides the lcm.
    Witness {
        divisor: String,
        divisor_lead: String,
        clique_pair: (usize, usize),
    },
}

/// A non-coprime cross-clique pair satisfying (*), with its evidence.
#[derive(Debug, Clone, Serialize)]
pub struct ResolvedPair {
    pub first: String,
    pub second: String,
    pub lead_lcm: String,
    pub resolution: PairResolution,
}

/// A non-coprime cross-clique pair with no dividing intersection minor:
/// a witness that (*) fails.
#[derive(Debug, Clone, Serialize)]
pub struct MissingDivisor {
    pub first: String,
    pub second: String,
    pub lead_lcm: String,
    /// Clique pairs (with intersection sizes) under which the pair was
    /// eligible and unresolved.
    pub clique_pairs: Vec<(usize, usize, usize)>,
}

/// Outcome of the lcm-closed check under one term order.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub verdict: bool,
    /// Rendering of the term order the leads were taken under.
    pub order: String,
    pub pairs_checked: usize,
    pub coprime_pairs: usize,
    pub resolved: Vec<ResolvedPair>,
    pub missing: Vec<MissingDivisor>,
}

/// Decide condition (*) for the DFI under its own term order.
///
/// Every unordered pair of distinct generators with non-coprime lead terms
/// must either lie in a common maximal clique (pairs inside one clique are
/// never obstructions) or admit host cliques Δi ∋ b, Δj ∋ b′ together with
/// a minor [c|d], d a facet inside V(Δi)∩V(Δj), whose lead term divides
/// lcm(in[a|b], in[a′|b′]). The verdict is false exactly when some pair
/// has no such resolution, and each such pair is reported.
pub fn is_lcm_closed(dfi: &RDfi) -> ConditionReport {
    let cliques = dfi.decomposition().cliques();
    let gens = dfi.generators();

    // membership of each generator's facet in each clique
    let memberships: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            (0..cliques.len())
                .filter(|&k| g.cols().is_subset_of(cliques[k].vertices()))
                .collect()
        })
        .collect();

    // lead terms of candidate intersection minors, memoized per (rows, cols)
    let witness_leads: BTreeMap<(Vec<u16>, Vec<u32>), Monomial> = {
        let mut map = BTreeMap::new();
        for (i, j) in (0..cliques.len()).tuple_combinations() {
            let w = cliques[i].intersection(&cliques[j]);
            if w.len() < dfi.r() {
                continue;
            }
            for d in w.vertices().iter().copied().combinations(dfi.r()) {
                for c in (1..=dfi.n()).combinations(dfi.r()) {
                    let key = (c.clone(), d.clone());
                    if map.contains_key(&key) {
                        continue;
                    }
                    let cols: Vec<u16> = d.iter().map(|&v| v as u16).collect();
                    let poly = minor(
                        dfi.n() as usize,
                        dfi.m() as usize,
                        &c,
                        &cols,
                        dfi.order(),
                        dfi.field(),
                    )
                    .expect("intersection minor shares the ambient shape");
                    let lead = poly.lead_monomial().expect("minors are nonzero").clone();
                    map.insert(key, lead);
                }
            }
        }
        map
    };

    let pair_indices: Vec<(usize, usize)> = (0..gens.len()).tuple_combinations().collect();
    let outcomes: Vec<Option<std::result::Result<ResolvedPair, MissingDivisor>>> = pair_indices
        .par_iter()
        .map(|&(p, q)| {
            let (f, g) = (&gens[p], &gens[q]);
            let (lf, lg) = (f.lead_monomial(), g.lead_monomial());
            if lf.is_coprime(lg) {
                return None;
            }
            let lcm = lf.lcm(lg);
            if let Some(&k) = memberships[p].iter().find(|k| memberships[q].contains(k)) {
                return Some(Ok(ResolvedPair {
                    first: f.label(),
                    second: g.label(),
                    lead_lcm: lcm.to_string(),
                    resolution: PairResolution::SharedClique { clique: k },
                }));
            }
            let mut eligible: Vec<(usize, usize, usize)> = Vec::new();
            for &i in &memberships[p] {
                for &j in &memberships[q] {
                    let (lo, hi) = (i.min(j), i.max(j));
                    let w = cliques[lo].intersection(&cliques[hi]);
                    debug_assert!(!f.cols().is_subset_of(w.vertices()));
                    debug_assert!(!g.cols().is_subset_of(w.vertices()));
                    if !eligible.contains(&(lo, hi, w.len())) {
                        eligible.push((lo, hi, w.len()));
                    }
                    if w.len() < dfi.r() {
                        continue;
                    }
                    for d in w.vertices().iter().copied().combinations(dfi.r()) {
                        for c in (1..=dfi.n()).combinations(dfi.r()) {
                            let lead = &witness_leads[&(c.clone(), d.clone())];
                            if lead.divides(&lcm) {
                                let label = format!(
                                    "[{}|{}]",
                                    c.iter().join(","),
                                    d.iter().join(",")
                                );
                                return Some(Ok(ResolvedPair {
                                    first: f.label(),
                                    second: g.label(),
                                    lead_lcm: lcm.to_string(),
                                    resolution: PairResolution::Witness {
                                        divisor: label,
                                        divisor_lead: lead.to_string(),
                                        clique_pair: (lo, hi),
                                    },
                                }));
                            }
                        }
                    }
                }
            }
            Some(Err(MissingDivisor {
                first: f.label(),
                second: g.label(),
                lead_lcm: lcm.to_string(),
                clique_pairs: eligible,
            }))
        })
        .collect();

    let mut report = ConditionReport {
        verdict: true,
        order: dfi.order().to_string(),
        pairs_checked: pair_indices.len(),
        coprime_pairs: 0,
        resolved: Vec::new(),
        missing: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            None => report.coprime_pairs += 1,
            Some(Ok(resolved)) => report.resolved.push(resolved),
            Some(Err(missing)) => report.missing.push(missing),
        }
    }
    report.verdict = report.missing.is_empty();
    report
}

/// True iff every maximal clique is a contiguous integer interval.
pub fn is_unit_interval(dfi: &RDfi) -> bool {
    !dfi.decomposition().cliques().is_empty()
        && dfi
            .decomposition()
            .cliques()
            .iter()
            .all(Face::is_interval)
}

/// The closed-graph condition for binomial edge ideals (r = n = 2): for
/// all distinct edges {i,j}, {k,ℓ} written with i<j and k<ℓ, equality of
/// the smaller ends forces {j,ℓ} to be an edge and equality of the larger
/// ends forces {i,k}.
pub fn is_closed_bei(dfi: &RDfi) -> Result<bool> {
    if dfi.r() != 2 || dfi.n() != 2 {
        return Err(Error::WrongShape(format!(
            "closed-graph condition needs r = n = 2, got r = {}, n = {}",
            dfi.r(),
            dfi.n()
        )));
    }
    let edges: Vec<&Face> = dfi.delta().facets().iter().collect();
    for (e, f) in edges.iter().tuple_combinations() {
        let (i, j) = (e.vertices()[0], e.vertices()[1]);
        let (k, l) = (f.vertices()[0], f.vertices()[1]);
        if i == k {
            let needed = Face::new(vec![j, l])?;
            if !dfi.delta().has_facet(&needed) {
                return Ok(false);
            }
        }
        if j == l {
            let needed = Face::new(vec![i, k])?;
            if !dfi.delta().has_facet(&needed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The closed condition for r = n under the intersection bound ♦ (no two
/// maximal cliques share n or more vertices): lead terms of generators
/// living in distinct cliques are pairwise coprime.
pub fn is_closed_dfi(dfi: &RDfi) -> Result<bool> {
    if dfi.r() != dfi.n() as usize {
        return Err(Error::WrongShape(format!(
            "closed-DFI condition needs r = n, got r = {}, n = {}",
            dfi.r(),
            dfi.n()
        )));
    }
    let profile = clique_intersection_profile(dfi);
    if profile.max >= dfi.n() as usize {
        let (i, j, w) = profile
            .pairs
            .iter()
            .copied()
            .find(|&(_, _, w)| w >= dfi.n() as usize)
            .expect("max came from some pair");
        return Err(Error::LozengeViolated(format!(
            "cliques {i} and {j} share {w} vertices (allowed: at most n-1 = {})",
            dfi.n() - 1
        )));
    }

    let cliques = dfi.decomposition().cliques();
    let clique_of = |face: &Face| -> usize {
        (0..cliques.len())
            .find(|&k| face.is_subset_of(cliques[k].vertices()))
            .expect("every facet lies in a clique")
    };
    for (f, g) in dfi.generators().iter().tuple_combinations() {
        if clique_of(f.cols()) != clique_of(g.cols())
            && !f.lead_monomial().is_coprime(g.lead_monomial())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairwise sizes of clique-vertex-set intersections.
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionProfile {
    /// Largest pairwise intersection (0 when fewer than two cliques).
    pub max: usize,
    /// (clique index, clique index, intersection cardinality) per pair.
    pub pairs: Vec<(usize, usize, usize)>,
}

/// Exact pairwise intersection cardinalities of the maximal cliques.
pub fn clique_intersection_profile(dfi: &RDfi) -> IntersectionProfile {
    let cliques = dfi.decomposition().cliques();
    let pairs: Vec<(usize, usize, usize)> = (0..cliques.len())
        .tuple_combinations()
        .map(|(i, j)| (i, j, cliques[i].intersection(&cliques[j]).len()))
        .collect();
    IntersectionProfile {
        max: pairs.iter().map(|&(_, _, w)| w).max().unwrap_or(0),
        pairs,
    }
}

/// One row of the order sweep: the row permutation defining the lex
/// order, whether that order is diagonal for the ambient shape, and the
/// lcm-closed verdict under it.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub row_order: Vec<u16>,
    pub is_diagonal: bool,
    pub lcm_closed: bool,
}

/// Re-run the lcm-closed check under every lex order obtained by permuting
/// the row priority (the column order stays ascending). Each row records
/// whether the permuted order is diagonal.
pub fn lcm_closed_order_sweep(dfi: &RDfi) -> Result<Vec<SweepRow>> {
    let n = dfi.n();
    let m = dfi.m();
    let mut rows: Vec<SweepRow> = Vec::new();
    for perm in (1..=n).permutations(n as usize) {
        let vars: Vec<crate::algebra::Var> = perm
            .iter()
            .flat_map(|&row| (1..=m).map(move |col| crate::algebra::Var::x(row, col)))
            .collect();
        let order = Arc::new(TermOrder::Lex(VarOrder::Explicit(vars)));
        let diagonal = crate::algebra::is_diagonal(&order, n as usize, m as usize);
        let permuted = build_rdfi(
            dfi.delta().clone(),
            n,
            dfi.r(),
            order,
            dfi.field(),
        )?;
        let verdict = is_lcm_closed(&permuted).verdict;
        rows.push(SweepRow {
            row_order: perm,
            is_diagonal: diagonal,
            lcm_closed: verdict,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn complex(m: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::new(
            m,
            facets
                .iter()
                .map(|f| Face::new(f.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn dfi(m: u32, facets: &[&[u32]], n: u16, r: usize) -> RDfi {
        build_rdfi(
            complex(m, facets),
            n,
            r,
            TermOrder::default_lex(),
            Field::Rationals,
        )
        .unwrap()
    }

    fn grid(pairs: &[(u16, u16)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(r, c)| (Var::x(r, c), 1)))
    }

    #[test]
    fn generator_counts_and_shapes() {
        // edges of a square, r = n = 2: one generator per edge
        let d = dfi(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 2, 2);
        assert_eq!(d.generators().len(), 4);
        assert_eq!(d.generators()[0].label(), "[1,2|1,2]");

        // same graph inside a 3-row matrix: C(3,2) = 3 row sets per edge
        let d3 = dfi(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 3, 2);
        assert_eq!(d3.generators().len(), 12);

        // single full facet, r = n: one generator
        let full = dfi(3, &[&[1, 2, 3]], 3, 3);
        assert_eq!(full.generators().len(), 1);
        assert_eq!(
            full.generators()[0].lead_monomial(),
            &grid(&[(1, 1), (2, 2), (3, 3)])
        );

        assert!(matches!(
            build_rdfi(
                complex(3, &[&[1, 2, 3]]),
                2,
                3,
                TermOrder::default_lex(),
                Field::Rationals
            ),
            Err(Error::RankTooLarge { r: 3, n: 2 })
        ));
        assert!(matches!(
            build_rdfi(
                complex(2, &[&[1, 2]]),
                3,
                2,
                TermOrder::default_lex(),
                Field::Rationals
            ),
            Err(Error::WrongShape(_))
        ));
    }

    #[test]
    fn lcm_closed_on_the_two_interval_cliques() {
        // cliques {1,2,3,4} and {2,3,4,5}, r = n = 3: lcm-closed, with the
        // single cross pair resolved by [1,2,3|2,3,4]
        let facets: Vec<Vec<u32>> = (1u32..=5)
            .combinations(3)
            .filter(|f| f.iter().all(|&v| v <= 4) || f.iter().all(|&v| v >= 2))
            .collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d = dfi(5, &refs, 3, 3);
        assert_eq!(
            d.decomposition().cliques(),
            &[
                Face::new(vec![1, 2, 3, 4]).unwrap(),
                Face::new(vec![2, 3, 4, 5]).unwrap()
            ]
        );
        let report = is_lcm_closed(&d);
        assert!(report.verdict, "{report:?}");
        assert!(is_unit_interval(&d));

        // the essential cross pair: [1,3,4] x [2,3,5] resolved by a witness
        // minor on the intersection {2,3,4}
        let witnessed: Vec<&ResolvedPair> = report
            .resolved
            .iter()
            .filter(|r| matches!(r.resolution, PairResolution::Witness { .. }))
            .collect();
        assert_eq!(witnessed.len(), 1);
        assert_eq!(witnessed[0].first, "[1,2,3|1,3,4]");
        assert_eq!(witnessed[0].second, "[1,2,3|2,3,5]");
        match &witnessed[0].resolution {
            PairResolution::Witness { divisor, .. } => {
                assert_eq!(divisor, "[1,2,3|2,3,4]");
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn lcm_closed_fails_on_two_short_intervals() {
        // cliques {1,2} and {2,3} inside 3 rows, r = 2: the pair
        // [1,2|1,2], [2,3|2,3] shares x22 and the one-point intersection
        // supports no 2-minor
        let d = dfi(3, &[&[1, 2], &[2, 3]], 3, 2);
        assert!(is_unit_interval(&d));
        let report = is_lcm_closed(&d);
        assert!(!report.verdict);
        assert!(report
            .missing
            .iter()
            .any(|m| m.first == "[1,2|1,2]" && m.second == "[2,3|2,3]"));
    }

    #[test]
    fn single_clique_is_trivially_lcm_closed() {
        let facets: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d = dfi(4, &refs, 3, 3);
        assert_eq!(d.decomposition().cliques().len(), 1);
        let report = is_lcm_closed(&d);
        assert!(report.verdict);
        // non-coprime pairs exist but all resolve inside the one clique
        assert!(report
            .resolved
            .iter()
            .all(|r| matches!(r.resolution, PairResolution::SharedClique { .. })));
    }

    #[test]
    fn unit_interval_detection() {
        assert!(is_unit_interval(&dfi(3, &[&[1, 2], &[2, 3]], 2, 2)));
        // clique {1,2,4} has a gap
        let d = dfi(4, &[&[1, 2], &[1, 4], &[2, 4]], 2, 2);
        assert_eq!(
            d.decomposition().cliques(),
            &[Face::new(vec![1, 2, 4]).unwrap()]
        );
        assert!(!is_unit_interval(&d));
    }

    #[test]
    fn closed_bei_examples() {
        // path 1-2-3: closed
        assert!(is_closed_bei(&dfi(3, &[&[1, 2], &[2, 3]], 2, 2)).unwrap());
        // edges {1,3},{2,3}: shared larger end demands {1,2}
        assert!(!is_closed_bei(&dfi(3, &[&[1, 3], &[2, 3]], 2, 2)).unwrap());
        // complete graph: closed
        let k4: Vec<Vec<u32>> = (1u32..=4).combinations(2).collect();
        let refs: Vec<&[u32]> = k4.iter().map(|f| f.as_slice()).collect();
        assert!(is_closed_bei(&dfi(4, &refs, 2, 2)).unwrap());
        // shape guard
        assert!(matches!(
            is_closed_bei(&dfi(3, &[&[1, 2], &[2, 3]], 3, 2)),
            Err(Error::WrongShape(_))
        ));
    }

    #[test]
    fn closed_bei_agrees_with_lcm_closed_on_random_graphs() {
        // xorshift-driven random graphs on up to 7 vertices
        let mut state: u64 = 0x1234_5678_9abc_def1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..40 {
            let m = 4 + (next() % 4) as u32; // 4..7
            let mut facets: Vec<Vec<u32>> = Vec::new();
            for i in 1..=m {
                for j in i + 1..=m {
                    if next() % 3 != 0 {
                        facets.push(vec![i, j]);
                    }
                }
            }
            if facets.is_empty() {
                continue;
            }
            let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
            let d = dfi(m, &refs, 2, 2);
            let closed = is_closed_bei(&d).unwrap();
            let lcm = is_lcm_closed(&d).verdict;
            assert_eq!(closed, lcm, "trial {trial}, edges {facets:?}");
        }
    }

    #[test]
    fn closed_dfi_examples() {
        // disjoint triangles: closed
        assert!(is_closed_dfi(&dfi(6, &[&[1, 2, 3], &[4, 5, 6]], 3, 3)).unwrap());
        // one shared vertex, diagonal leads x11x22x33 and x13x24x35: coprime
        assert!(is_closed_dfi(&dfi(5, &[&[1, 2, 3], &[3, 4, 5]], 3, 3)).unwrap());
        // cliques {1,3,4},{2,3,5}: leads x11x23x34 and x12x23x35 share x23
        assert!(!is_closed_dfi(&dfi(5, &[&[1, 3, 4], &[2, 3, 5]], 3, 3)).unwrap());
        // lozenge violation: cliques sharing n vertices
        let facets: Vec<Vec<u32>> = (1u32..=5)
            .combinations(3)
            .filter(|f| f.iter().all(|&v| v <= 4) || f.iter().all(|&v| v >= 2))
            .collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        assert!(matches!(
            is_closed_dfi(&dfi(5, &refs, 3, 3)),
            Err(Error::LozengeViolated(_))
        ));
    }

    #[test]
    fn closed_dfi_agrees_with_lcm_closed_under_the_intersection_bound() {
        let mut state: u64 = 0xfeed_face_cafe_beef;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut tested = 0;
        let mut trial = 0;
        while tested < 25 && trial < 400 {
            trial += 1;
            let m = 6 + (next() % 3) as u32; // 6..8
            // sample two or three facets as candidate cliques
            let count = 2 + (next() % 2) as usize;
            let mut facets: Vec<Vec<u32>> = Vec::new();
            for _ in 0..count {
                let mut verts: Vec<u32> = Vec::new();
                while verts.len() < 3 {
                    let v = 1 + (next() % m as u64) as u32;
                    if !verts.contains(&v) {
                        verts.push(v);
                    }
                }
                verts.sort_unstable();
                if !facets.contains(&verts) {
                    facets.push(verts);
                }
            }
            let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
            let d = dfi(m, &refs, 3, 3);
            let Ok(closed) = is_closed_dfi(&d) else {
                continue; // lozenge violated; skip
            };
            tested += 1;
            assert_eq!(closed, is_lcm_closed(&d).verdict, "facets {facets:?}");
        }
        assert!(tested >= 25, "only {tested} eligible samples drawn");
    }

    #[test]
    fn intersection_profile_counts() {
        let facets: Vec<Vec<u32>> = (1u32..=5)
            .combinations(3)
            .filter(|f| f.iter().all(|&v| v <= 4) || f.iter().all(|&v| v >= 2))
            .collect();
        let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
        let d = dfi(5, &refs, 3, 3);
        let profile = clique_intersection_profile(&d);
        assert_eq!(profile.max, 3);
        assert_eq!(profile.pairs, vec![(0, 1, 3)]);

        let disjoint = dfi(6, &[&[1, 2, 3], &[4, 5, 6]], 3, 3);
        assert_eq!(clique_intersection_profile(&disjoint).max, 0);

        let single = dfi(3, &[&[1, 2, 3]], 3, 3);
        let profile = clique_intersection_profile(&single);
        assert_eq!(profile.max, 0);
        assert!(profile.pairs.is_empty());
    }

    #[test]
    fn order_sweep_flags_diagonality() {
        let d = dfi(3, &[&[1, 2], &[2, 3]], 2, 2);
        let sweep = lcm_closed_order_sweep(&d).unwrap();
        assert_eq!(sweep.len(), 2);
        // identity row order is the diagonal one
        let identity = sweep.iter().find(|r| r.row_order == vec![1, 2]).unwrap();
        assert!(identity.is_diagonal);
        let swapped = sweep.iter().find(|r| r.row_order == vec![2, 1]).unwrap();
        assert!(!swapped.is_diagonal);
    }
}
