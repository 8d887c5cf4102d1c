//! Height, projective dimension, and Cohen–Macaulay verdicts for
//! lead-term ideals: exact vertex-cover height, the sum criterion
//! comparing the initial ideal of an intersection with the monomial
//! intersection and product, and the clique-intersection corollary check
//! for determinantal facet ideals.

use crate::algebra::{Field, Var};
use crate::algebra::Polynomial;
use crate::caps::Caps;
use crate::dfi::{clique_intersection_profile, is_lcm_closed, is_unit_interval, RDfi};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, intersect, Budget};
use crate::lcmlattice::{gpw_betti, MonomialIdeal};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// One-way transfer of Cohen–Macaulayness from the lead-term ideal.
const TRANSFER_NOTE: &str = "Cohen-Macaulayness of the lead-term ideal implies \
Cohen-Macaulayness of the original ideal; the converse can fail, so the verdict \
certifies only the monomial side.";

/// Height of a monomial ideal: the radical is squarefree, so this is the
/// minimum cardinality of a variable set meeting the support of every
/// generator, found by exact branch-and-bound under a greedy upper bound.
pub fn height_monomial(ideal: &MonomialIdeal) -> usize {
    let mut supports: Vec<BTreeSet<Var>> = ideal
        .gens()
        .iter()
        .map(|g| g.vars().map(|(v, _)| v).collect())
        .collect();
    supports.sort_by_key(BTreeSet::len);
    let mut minimal: Vec<BTreeSet<Var>> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|t| t.is_subset(&s)) {
            minimal.push(s);
        }
    }
    if minimal.is_empty() {
        return 0;
    }
    let mut best = greedy_cover(&minimal);
    branch_cover(&minimal, 0, &mut best);
    best
}

fn greedy_cover(supports: &[BTreeSet<Var>]) -> usize {
    let mut remaining: Vec<&BTreeSet<Var>> = supports.iter().collect();
    let mut size = 0;
    while !remaining.is_empty() {
        let mut freq: BTreeMap<Var, usize> = BTreeMap::new();
        for s in &remaining {
            for &v in s.iter() {
                *freq.entry(v).or_insert(0) += 1;
            }
        }
        let (&pick, _) = freq.iter().max_by_key(|(_, &c)| c).unwrap();
        remaining.retain(|s| !s.contains(&pick));
        size += 1;
    }
    size
}

fn branch_cover(remaining: &[BTreeSet<Var>], depth: usize, best: &mut usize) {
    if remaining.is_empty() {
        *best = (*best).min(depth);
        return;
    }
    // lower bound: pairwise-disjoint supports each cost one variable
    let mut bound = depth;
    let mut used: BTreeSet<Var> = BTreeSet::new();
    for s in remaining {
        if s.iter().all(|v| !used.contains(v)) {
            bound += 1;
            used.extend(s.iter().copied());
        }
    }
    if bound >= *best {
        return;
    }
    let pivot = remaining.iter().min_by_key(|s| s.len()).unwrap();
    for &v in pivot {
        let rest: Vec<BTreeSet<Var>> = remaining
            .iter()
            .filter(|s| !s.contains(&v))
            .cloned()
            .collect();
        branch_cover(&rest, depth + 1, best);
    }
}

/// Height, projective dimension of the quotient, and whether they agree.
#[derive(Debug, Clone, Serialize)]
pub struct CmVerdict {
    pub ht: usize,
    pub pd: usize,
    pub cm_initial: bool,
    pub cm_transfer_note: &'static str,
}

/// Render the Cohen–Macaulay verdict for a monomial ideal: height by
/// vertex cover, projective dimension from the Betti table of the
/// quotient, equality decides the verdict.
pub fn pd_and_cm(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<CmVerdict> {
    let ht = height_monomial(ideal);
    let betti = gpw_betti(ideal, field, caps)?;
    let pd = betti.pd();
    assert!(
        ht <= pd || ideal.num_gens() == 0,
        "height {ht} exceeds projective dimension {pd}"
    );
    Ok(CmVerdict {
        ht,
        pd,
        cm_initial: ht == pd,
        cm_transfer_note: TRANSFER_NOTE,
    })
}

/// Which equalities of the sum criterion hold, the per-summand verdicts,
/// and — when everything holds — the verdict for the lead-term ideal of
/// the sum.
#[derive(Debug, Clone, Serialize)]
pub struct SumCriterionReport {
    /// in(I∩J) = in(I) ∩ in(J)
    pub initial_of_intersection_matches: bool,
    /// in(I) ∩ in(J) = in(I)·in(J)
    pub intersection_matches_product: bool,
    pub first_initial_cm: bool,
    pub second_initial_cm: bool,
    /// Verdict for in(I+J), present when both equalities hold and both
    /// summands' lead-term ideals are Cohen–Macaulay.
    pub sum_verdict: Option<CmVerdict>,
}

/// Check the hypothesis chain in(I∩J) = in(I)∩in(J) = in(I)·in(J): the
/// left side comes from an elimination-order intersection, the right two
/// are monomial-ideal arithmetic. When the chain holds and both lead-term
/// ideals are Cohen–Macaulay, the lead-term ideal of the sum is too, and
/// its verdict is attached.
pub fn cm_sum_criterion(
    first: &[Polynomial],
    second: &[Polynomial],
    caps: &Caps,
) -> Result<SumCriterionReport> {
    if first.is_empty() || second.is_empty() {
        return Err(Error::InvalidInput(
            "the sum criterion needs nonempty generating sets on both sides".into(),
        ));
    }
    let field = first[0].field();
    let mut budget = Budget::new(caps.gb_steps);

    let in_first = MonomialIdeal::new(buchberger(first, &mut budget)?.lead_monomials())?;
    let in_second = MonomialIdeal::new(buchberger(second, &mut budget)?.lead_monomials())?;
    let meet = intersect(first, second, &mut budget)?;
    let in_meet = MonomialIdeal::new(meet.lead_monomials())?;
    let mono_meet = in_first.intersect(&in_second);
    let mono_prod = in_first.multiply(&in_second);

    let initial_of_intersection_matches = in_meet.same_ideal(&mono_meet);
    let intersection_matches_product = mono_meet.same_ideal(&mono_prod);
    let first_verdict = pd_and_cm(&in_first, field, caps)?;
    let second_verdict = pd_and_cm(&in_second, field, caps)?;

    let sum_verdict = if initial_of_intersection_matches
        && intersection_matches_product
        && first_verdict.cm_initial
        && second_verdict.cm_initial
    {
        let mut all = first.to_vec();
        all.extend_from_slice(second);
        let in_sum = MonomialIdeal::new(buchberger(&all, &mut budget)?.lead_monomials())?;
        Some(pd_and_cm(&in_sum, field, caps)?)
    } else {
        None
    };
    Ok(SumCriterionReport {
        initial_of_intersection_matches,
        intersection_matches_product,
        first_initial_cm: first_verdict.cm_initial,
        second_initial_cm: second_verdict.cm_initial,
        sum_verdict,
    })
}

/// Which hypothesis route admitted the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CmHypothesisPath {
    /// lcm-closed with pairwise clique intersections of at most r−1 vertices.
    LcmClosedBound,
    /// unit-interval with intersections of at most max(0, 2r−n−1) vertices.
    UnitIntervalBound,
}

/// Outcome of the clique-intersection corollary check.
#[derive(Debug, Clone, Serialize)]
pub struct CorCmReport {
    pub path: CmHypothesisPath,
    pub max_intersection: usize,
    /// Lead terms of generators from distinct cliques are pairwise coprime
    /// — the structural fact the smallness bounds buy.
    pub cross_leads_coprime: bool,
    pub verdict: CmVerdict,
}

/// Decide Cohen–Macaulayness of the lead-term ideal along the two
/// small-intersection routes: lcm-closed complexes with intersections of
/// at most r−1 vertices, or unit-interval complexes with intersections of
/// at most max(0, 2r−n−1). Verifies the cross-clique coprimality of lead
/// terms and renders the height/projective-dimension verdict.
pub fn cor_cmness_check(dfi: &RDfi, caps: &Caps) -> Result<CorCmReport> {
    let profile = clique_intersection_profile(dfi);
    let r = dfi.r();
    let ui_bound = (2 * r as i64 - i64::from(dfi.n()) - 1).max(0) as usize;

    let lcm_bound_ok = profile.max < r;
    let ui_bound_ok = profile.max <= ui_bound;
    let path = if lcm_bound_ok && is_lcm_closed(dfi).verdict {
        CmHypothesisPath::LcmClosedBound
    } else if ui_bound_ok && is_unit_interval(dfi) {
        CmHypothesisPath::UnitIntervalBound
    } else {
        return Err(Error::HypothesisFailed(format!(
            "clique intersections reach {} vertices; the lcm-closed route allows at most {} \
             and the unit-interval route at most {}, and whichever bound holds, its condition \
             must hold too",
            profile.max,
            r - 1,
            ui_bound
        )));
    };

    let gens = dfi.generators();
    let decomposition = dfi.decomposition();
    let mut cross_leads_coprime = true;
    'pairs: for (i, g) in gens.iter().enumerate() {
        let cliques_g = decomposition.cliques_of_facet(g.cols());
        for h in &gens[i + 1..] {
            let cliques_h = decomposition.cliques_of_facet(h.cols());
            if cliques_g.iter().any(|c| cliques_h.contains(c)) {
                continue;
            }
            if !g.lead_monomial().is_coprime(h.lead_monomial()) {
                cross_leads_coprime = false;
                break 'pairs;
            }
        }
    }

    let ideal = MonomialIdeal::new(dfi.lead_monomials())?;
    let verdict = pd_and_cm(&ideal, dfi.field(), caps)?;
    Ok(CorCmReport {
        path,
        max_intersection: profile.max,
        cross_leads_coprime,
        verdict,
    })
}
