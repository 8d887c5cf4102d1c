//! Buchberger engine: exact verification of Gröbner-basis claims, reduced
//! basis computation, ideal intersection by elimination, the pairwise
//! intersection-witness criterion for unions of bases, and the search
//! harness tabulating the lcm-closed verdict against the actual basis
//! verdict over enumerated complexes.

use crate::algebra::{Field, Monomial, Polynomial, TermOrder, Var};
use crate::dfi::{build_rdfi, is_lcm_closed};
use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Step allowance for reduction loops. Every division step and every
/// processed S-pair costs one unit; exceeding the allowance aborts with
/// [`Error::BudgetExceeded`].
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn charge(&mut self, amount: u64) -> Result<()> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

/// The S-polynomial `(L/in f)·f/lc(f) − (L/in g)·g/lc(g)` with
/// `L = lcm(in f, in g)`. Both inputs must be nonzero.
pub fn spolynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (fm, fc) = f.lead().expect("S-polynomial of a zero polynomial");
    let (gm, gc) = g.lead().expect("S-polynomial of a zero polynomial");
    let l = fm.lcm(gm);
    let fq = l.try_div(fm).expect("lcm is divisible by both leads");
    let gq = l.try_div(gm).expect("lcm is divisible by both leads");
    f.mul_term(&fq, &field.inv(fc))
        .sub(&g.mul_term(&gq, &field.inv(gc)))
}

/// Repeatedly cancel the lead term against `basis` until it is no longer
/// divisible by any basis lead. The tail is left untouched.
pub fn top_reduce(f: &Polynomial, basis: &[Polynomial], budget: &mut Budget) -> Result<Polynomial> {
    let field = f.field();
    let mut p = f.clone();
    'outer: while let Some((lm, lc)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        budget.charge(1)?;
        for g in basis {
            let Some((gm, gc)) = g.lead() else { continue };
            if let Some(q) = lm.try_div(gm) {
                p = p.sub(&g.mul_term(&q, &field.div(&lc, gc)));
                continue 'outer;
            }
        }
        break;
    }
    Ok(p)
}

/// Full normal form: every term of the result is irreducible modulo the
/// basis leads.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], budget: &mut Budget) -> Result<Polynomial> {
    let order = f.order().clone();
    let field = f.field();
    let mut p = f.clone();
    let mut remainder = Vec::new();
    'outer: while let Some((lm, lc)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        budget.charge(1)?;
        for g in basis {
            let Some((gm, gc)) = g.lead() else { continue };
            if let Some(q) = lm.try_div(gm) {
                p = p.sub(&g.mul_term(&q, &field.div(&lc, gc)));
                continue 'outer;
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        p = p.sub(&Polynomial::term(order.clone(), field, lm, lc));
    }
    Ok(Polynomial::from_terms(order, field, remainder))
}

/// A reduced Gröbner basis: monic, inter-reduced elements listed
/// ascending by lead term under the attached order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: Arc<TermOrder>,
    field: Field,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &Arc<TermOrder> {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|f| f.lead_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }

    /// Ideal membership: the normal form of `f` is zero.
    pub fn contains(&self, f: &Polynomial, budget: &mut Budget) -> Result<bool> {
        Ok(normal_form(f, &self.elements, budget)?.is_zero())
    }
}

fn order_and_field_of(gens: &[Polynomial]) -> Result<(Arc<TermOrder>, Field)> {
    let first = gens
        .iter()
        .find(|f| !f.is_zero())
        .ok_or_else(|| Error::InvalidInput("needs at least one nonzero generator".into()))?;
    let order = first.order().clone();
    let field = first.field();
    for g in gens {
        if **g.order() != *order || g.field() != field {
            return Err(Error::InvalidInput(
                "generators attached to different term orders or fields".into(),
            ));
        }
    }
    Ok((order, field))
}

/// Drop elements whose lead divides into another's lead ideal and
/// tail-reduce the survivors, yielding the unique reduced monic basis of
/// the same lead ideal.
fn inter_reduce(elems: Vec<Polynomial>, budget: &mut Budget) -> Result<Vec<Polynomial>> {
    let mut keep: Vec<Polynomial> = Vec::new();
    for (idx, f) in elems.iter().enumerate() {
        let lead = f.lead_monomial().expect("inter-reduction of a zero element");
        let redundant = elems.iter().enumerate().any(|(j, g)| {
            if j == idx {
                return false;
            }
            let gl = g.lead_monomial().expect("inter-reduction of a zero element");
            // equal leads: keep only the earliest occurrence
            gl.divides(lead) && (gl != lead || j < idx)
        });
        if !redundant {
            keep.push(f.clone());
        }
    }
    // one tail-reduction pass suffices: leads are pairwise non-dividing and
    // tail reduction never changes a lead
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        keep[i] = normal_form(&keep[i], &others, budget)?.monic();
    }
    Ok(keep)
}

/// Compute the reduced Gröbner basis of the ideal generated by `gens`
/// (zero generators are ignored). Normal selection strategy — the queued
/// pair with the smallest lcm degree goes first — with the coprime-lead
/// and strict chain criteria pruning pairs.
pub fn buchberger(gens: &[Polynomial], budget: &mut Budget) -> Result<GroebnerBasis> {
    let (order, field) = order_and_field_of(gens)?;
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(Polynomial::monic)
        .collect();

    let lcm_of = |basis: &[Polynomial], i: usize, j: usize| -> Monomial {
        basis[i]
            .lead_monomial()
            .unwrap()
            .lcm(basis[j].lead_monomial().unwrap())
    };
    let mut queue: Vec<(Monomial, usize, usize)> = (0..basis.len())
        .tuple_combinations()
        .map(|(i, j)| (lcm_of(&basis, i, j), i, j))
        .collect();

    while !queue.is_empty() {
        let pick = queue
            .iter()
            .enumerate()
            .min_by_key(|(_, (l, i, j))| (l.degree(), *i, *j))
            .map(|(pos, _)| pos)
            .expect("queue is nonempty");
        let (l, i, j) = queue.swap_remove(pick);

        let (li, lj) = (
            basis[i].lead_monomial().unwrap().clone(),
            basis[j].lead_monomial().unwrap().clone(),
        );
        if li.is_coprime(&lj) {
            continue;
        }
        // strict chain criterion: a third lead dividing the lcm, with both
        // sub-lcms proper divisors, makes this pair redundant
        let chained = basis.iter().enumerate().any(|(k, g)| {
            if k == i || k == j {
                return false;
            }
            let lk = g.lead_monomial().unwrap();
            lk.divides(&l) && li.lcm(lk) != l && lj.lcm(lk) != l
        });
        if chained {
            continue;
        }

        budget.charge(1)?;
        let s = spolynomial(&basis[i], &basis[j]);
        let h = top_reduce(&s, &basis, budget)?;
        if !h.is_zero() {
            let h = h.monic();
            let t = basis.len();
            for k in 0..t {
                let l = basis[k]
                    .lead_monomial()
                    .unwrap()
                    .lcm(h.lead_monomial().unwrap());
                queue.push((l, k, t));
            }
            basis.push(h);
        }
    }

    let mut elements = inter_reduce(basis, budget)?;
    elements.sort_by(|a, b| {
        order.cmp(
            a.lead_monomial().expect("nonzero"),
            b.lead_monomial().expect("nonzero"),
        )
    });
    Ok(GroebnerBasis {
        order,
        field,
        elements,
    })
}

/// The first S-pair that fails to reduce to zero.
#[derive(Debug, Clone)]
pub struct SPairFailure {
    pub first: usize,
    pub second: usize,
    pub lead_lcm: Monomial,
    pub normal_form: Polynomial,
}

/// Outcome of the Buchberger criterion run over a fixed generator list.
#[derive(Debug, Clone)]
pub struct GbCheck {
    pub verdict: bool,
    pub pairs_reduced: usize,
    pub coprime_skips: usize,
    pub failure: Option<SPairFailure>,
}

/// Decide whether `gens` is already a Gröbner basis: every S-polynomial
/// must have normal form zero modulo `gens`. Pairs run in index order and
/// the first failure is reported with its nonzero normal form.
pub fn is_groebner(gens: &[Polynomial], budget: &mut Budget) -> Result<GbCheck> {
    order_and_field_of(gens)?;
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|f| !f.is_zero()).collect();
    let owned: Vec<Polynomial> = nonzero.iter().map(|&f| f.clone()).collect();
    let mut check = GbCheck {
        verdict: true,
        pairs_reduced: 0,
        coprime_skips: 0,
        failure: None,
    };
    for (i, j) in (0..nonzero.len()).tuple_combinations() {
        let li = nonzero[i].lead_monomial().unwrap();
        let lj = nonzero[j].lead_monomial().unwrap();
        if li.is_coprime(lj) {
            check.coprime_skips += 1;
            continue;
        }
        budget.charge(1)?;
        let s = spolynomial(nonzero[i], nonzero[j]);
        let nf = normal_form(&s, &owned, budget)?;
        check.pairs_reduced += 1;
        if !nf.is_zero() {
            check.verdict = false;
            check.failure = Some(SPairFailure {
                first: i,
                second: j,
                lead_lcm: li.lcm(lj),
                normal_form: nf,
            });
            break;
        }
    }
    Ok(check)
}

/// Generators of `I ∩ J` by the one-extra-variable elimination method:
/// compute a basis of `t·I + (1−t)·J` under a block order eliminating `t`,
/// keep the `t`-free elements, and re-present them as a reduced basis
/// under the original order.
pub fn intersect(
    i_gens: &[Polynomial],
    j_gens: &[Polynomial],
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    let all: Vec<Polynomial> = i_gens.iter().chain(j_gens).cloned().collect();
    let (active, field) = order_and_field_of(&all)?;
    if i_gens.iter().all(Polynomial::is_zero) || j_gens.iter().all(Polynomial::is_zero) {
        return Ok(GroebnerBasis {
            order: active,
            field,
            elements: Vec::new(),
        });
    }

    let t = Var::Aux(0);
    let elim = TermOrder::eliminate(vec![t], &active);
    let t_poly = Polynomial::term(elim.clone(), field, Monomial::var(t), field.one());
    let one_minus_t = Polynomial::from_terms(
        elim.clone(),
        field,
        vec![
            (Monomial::one(), field.one()),
            (Monomial::var(t), field.neg(&field.one())),
        ],
    );
    let mut gens: Vec<Polynomial> = Vec::with_capacity(i_gens.len() + j_gens.len());
    for f in i_gens.iter().filter(|f| !f.is_zero()) {
        gens.push(t_poly.mul(&f.with_order(elim.clone())));
    }
    for g in j_gens.iter().filter(|g| !g.is_zero()) {
        gens.push(one_minus_t.mul(&g.with_order(elim.clone())));
    }

    let gb = buchberger(&gens, budget)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|f| !f.contains_aux())
        .map(|f| f.with_order(active.clone()))
        .collect();
    // the t-free slice of an elimination basis is a basis for the
    // intersection under the inner order; inter-reduce for the reduced form
    let mut elements = inter_reduce(kept, budget)?;
    elements.sort_by(|a, b| {
        active.cmp(
            a.lead_monomial().expect("nonzero"),
            b.lead_monomial().expect("nonzero"),
        )
    });
    Ok(GroebnerBasis {
        order: active,
        field,
        elements,
    })
}

/// An element of `I ∩ J` whose lead term equals `lcm(in f, in g)` for one
/// generator pair.
#[derive(Debug, Clone)]
pub struct IntersectionWitness {
    pub f_index: usize,
    pub g_index: usize,
    pub lead_lcm: Monomial,
    pub witness: Polynomial,
    /// The leads were coprime, so `f·g` itself served.
    pub via_coprime_leads: bool,
}

/// Outcome of the pairwise intersection-witness criterion.
#[derive(Debug, Clone)]
pub struct PairCheckReport {
    pub verdict: bool,
    pub witnesses: Vec<IntersectionWitness>,
    /// Pairs `(f index, g index, lcm)` with no witness in `I ∩ J`.
    pub failures: Vec<(usize, usize, Monomial)>,
}

/// For bases `F` of `I` and `G` of `J`, decide whether every pair
/// `(f, g)` admits an `h ∈ I ∩ J` with `in(h) = lcm(in f, in g)` — the
/// criterion deciding whether `F ∪ G` is a basis of `I + J`. Coprime-lead
/// pairs take `h = f·g`; the rest scale an intersection-basis element
/// whose lead divides the lcm.
pub fn conca_pair_check(
    f_gens: &[Polynomial],
    g_gens: &[Polynomial],
    budget: &mut Budget,
) -> Result<PairCheckReport> {
    let inter = intersect(f_gens, g_gens, budget)?;
    let field = inter.field();
    let mut report = PairCheckReport {
        verdict: true,
        witnesses: Vec::new(),
        failures: Vec::new(),
    };
    for (fi, f) in f_gens.iter().enumerate().filter(|(_, f)| !f.is_zero()) {
        for (gj, g) in g_gens.iter().enumerate().filter(|(_, g)| !g.is_zero()) {
            let lf = f.lead_monomial().unwrap();
            let lg = g.lead_monomial().unwrap();
            let l = lf.lcm(lg);
            if lf.is_coprime(lg) {
                report.witnesses.push(IntersectionWitness {
                    f_index: fi,
                    g_index: gj,
                    lead_lcm: l,
                    witness: f.mul(g).monic(),
                    via_coprime_leads: true,
                });
                continue;
            }
            match inter
                .elements()
                .iter()
                .find(|e| e.lead_monomial().unwrap().divides(&l))
            {
                Some(e) => {
                    let q = l.try_div(e.lead_monomial().unwrap()).unwrap();
                    report.witnesses.push(IntersectionWitness {
                        f_index: fi,
                        g_index: gj,
                        lead_lcm: l,
                        witness: e.mul_term(&q, &field.one()),
                        via_coprime_leads: false,
                    });
                }
                None => report.failures.push((fi, gj, l)),
            }
        }
    }
    report.verdict = report.failures.is_empty();
    Ok(report)
}

/// One enumerated complex in the necessity search: its lcm-closed verdict
/// against the actual Gröbner verdict of its generators.
#[derive(Debug, Clone, Serialize)]
pub struct SearchRow {
    pub m: u32,
    pub facets: Vec<Face>,
    pub generators: usize,
    pub lcm_closed: bool,
    pub groebner: bool,
    /// `groebner` without `lcm_closed`: evidence against necessity.
    pub counterexample: bool,
}

/// Outcome of the necessity search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub rows: Vec<SearchRow>,
    /// The enumeration stopped at the row limit before exhausting the space.
    pub truncated: bool,
}

/// Enumerate the pure (n−1)-dimensional complexes whose vertices cover
/// `[m]` for each `m ≤ m_max`, and tabulate the lcm-closed verdict against
/// the Gröbner verdict of the n-minor generators (r = n). At most `limit`
/// complexes are examined; each gets a fresh step budget of
/// `steps_per_complex`. Rows keep enumeration order.
pub fn necessity_search(
    n: u16,
    m_max: u32,
    order: &Arc<TermOrder>,
    field: Field,
    limit: usize,
    steps_per_complex: u64,
) -> Result<SearchReport> {
    if m_max < n as u32 {
        return Err(Error::InvalidInput(format!(
            "search needs m_max >= n, got m_max = {m_max}, n = {n}"
        )));
    }
    let mut complexes: Vec<(u32, Vec<Face>)> = Vec::new();
    let mut truncated = false;
    'outer: for m in (n as u32)..=m_max {
        let all: Vec<Face> = (1..=m)
            .combinations(n as usize)
            .map(|v| Face::new(v).expect("combinations are sorted and in range"))
            .collect();
        if all.len() > 20 {
            return Err(Error::InvalidInput(format!(
                "search space has 2^{} facet subsets at m = {m}; lower m_max",
                all.len()
            )));
        }
        for mask in 1u32..(1u32 << all.len()) {
            let facets: Vec<Face> = (0..all.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| all[k].clone())
                .collect();
            let covered: BTreeSet<u32> = facets
                .iter()
                .flat_map(|f| f.vertices().iter().copied())
                .collect();
            if covered.len() != m as usize {
                continue; // complexes on fewer vertices appear at their own m
            }
            if complexes.len() == limit {
                truncated = true;
                break 'outer;
            }
            complexes.push((m, facets));
        }
    }

    let rows: Result<Vec<SearchRow>> = complexes
        .into_par_iter()
        .map(|(m, facets)| {
            let delta = SimplicialComplex::new(m, facets.clone())?;
            let dfi = build_rdfi(delta, n, n as usize, order.clone(), field)?;
            let lcm_closed = is_lcm_closed(&dfi).verdict;
            let mut budget = Budget::new(steps_per_complex);
            let groebner = is_groebner(&dfi.polynomials(), &mut budget)?.verdict;
            Ok(SearchRow {
                m,
                facets,
                generators: dfi.generators().len(),
                lcm_closed,
                groebner,
                counterexample: groebner && !lcm_closed,
            })
        })
        .collect();
    Ok(SearchReport {
        rows: rows?,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::minor;
    use crate::lcmlattice::MonomialIdeal;

    fn q() -> Field {
        Field::Rationals
    }

    fn big_budget() -> Budget {
        Budget::new(50_000_000)
    }

    fn xm(pairs: &[(u16, u16)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(r, c)| (Var::x(r, c), 1)))
    }

    /// All r×r minors of the generic n×m matrix on the given column sets.
    fn minors_on(n: u16, m: u16, r: usize, col_sets: &[&[u16]]) -> Vec<Polynomial> {
        let o = TermOrder::default_lex();
        let mut out = Vec::new();
        for cols in col_sets {
            for rows in (1..=n).combinations(r) {
                out.push(minor(n as usize, m as usize, &rows, cols, &o, q()).unwrap());
            }
        }
        out
    }

    fn assert_reduced_gb(gb: &GroebnerBasis, inputs: &[Polynomial]) {
        // every S-pair reduces to zero
        let mut budget = big_budget();
        assert!(is_groebner(gb.elements(), &mut budget).unwrap().verdict);
        // monic, pairwise non-dividing leads, reduced tails
        let leads = gb.lead_monomials();
        for (i, f) in gb.elements().iter().enumerate() {
            assert!(f.lead().unwrap().1.is_one());
            for (j, l) in leads.iter().enumerate() {
                if i == j {
                    continue;
                }
                for (m, _) in f.terms() {
                    assert!(!l.divides(m), "term {m} of element {i} reducible by {l}");
                }
            }
        }
        // the lead ideal contains every input lead
        for f in inputs.iter().filter(|f| !f.is_zero()) {
            let fl = f.lead_monomial().unwrap();
            assert!(
                leads.iter().any(|l| l.divides(fl)),
                "input lead {fl} escapes the basis lead ideal"
            );
        }
    }

    #[test]
    fn maximal_minors_2x4_are_already_a_basis() {
        let cols: Vec<Vec<u16>> = (1..=4u16).combinations(2).collect();
        let refs: Vec<&[u16]> = cols.iter().map(|c| c.as_slice()).collect();
        let gens = minors_on(2, 4, 2, &refs);
        assert_eq!(gens.len(), 6);
        let mut budget = big_budget();
        assert!(is_groebner(&gens, &mut budget).unwrap().verdict);

        let gb = buchberger(&gens, &mut big_budget()).unwrap();
        assert_reduced_gb(&gb, &gens);
        // the inputs are monic and already inter-reduced, so the basis is
        // exactly the input set
        assert_eq!(gb.elements().len(), 6);
        for f in &gens {
            assert!(gb.elements().contains(f));
        }
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let o = TermOrder::default_lex();
        let det = minor(2, 2, &[1, 2], &[1, 2], &o, q()).unwrap();
        let gb = buchberger(std::slice::from_ref(&det), &mut big_budget()).unwrap();
        assert_eq!(gb.elements(), &[det.clone()]);
        assert_reduced_gb(&gb, &[det]);
    }

    #[test]
    fn two_interval_2dfi_inside_three_rows_is_its_own_reduced_basis() {
        // facets {1,2} and {2,3} with n = 3: six 2-minors form a reduced
        // basis under the diagonal order even though the lcm-closed
        // condition fails for this complex
        let gens = minors_on(3, 3, 2, &[&[1, 2], &[2, 3]]);
        assert_eq!(gens.len(), 6);
        let mut budget = big_budget();
        let check = is_groebner(&gens, &mut budget).unwrap();
        assert!(check.verdict, "failure: {:?}", check.failure);

        let gb = buchberger(&gens, &mut big_budget()).unwrap();
        assert_eq!(gb.elements().len(), 6);
        for f in &gens {
            assert!(gb.elements().contains(f));
        }
        assert_reduced_gb(&gb, &gens);
    }

    #[test]
    fn three_petals_fail_the_basis_check() {
        let gens = minors_on(3, 7, 3, &[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]]);
        assert_eq!(gens.len(), 3);
        let mut budget = big_budget();
        let check = is_groebner(&gens, &mut budget).unwrap();
        assert!(!check.verdict);
        let failure = check.failure.expect("a failing pair is reported");
        assert!(!failure.normal_form.is_zero());
        // completion still succeeds and strictly grows the lead ideal
        let gb = buchberger(&gens, &mut big_budget()).unwrap();
        assert!(gb.elements().len() > 3);
        assert_reduced_gb(&gb, &gens);
    }

    #[test]
    fn spolynomial_cases() {
        let o = TermOrder::default_lex();
        let f = minor(2, 3, &[1, 2], &[1, 2], &o, q()).unwrap();
        let g = minor(2, 3, &[1, 2], &[2, 3], &o, q()).unwrap();
        // S(f, f) = 0
        assert!(spolynomial(&f, &f).is_zero());
        // the S-polynomial drops both scaled leads
        let s = spolynomial(&f, &g);
        let l = f
            .lead_monomial()
            .unwrap()
            .lcm(g.lead_monomial().unwrap());
        if let Some(sl) = s.lead_monomial() {
            assert!(f.order().cmp(sl, &l) == std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn budget_exhaustion_surfaces() {
        let gens = minors_on(3, 7, 3, &[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]]);
        let mut tiny = Budget::new(3);
        assert!(matches!(
            buchberger(&gens, &mut tiny),
            Err(Error::BudgetExceeded(3))
        ));
    }

    #[test]
    fn coprime_principal_intersection() {
        let o = TermOrder::default_lex();
        let f = q();
        let x11 = Polynomial::term(o.clone(), f, xm(&[(1, 1)]), f.one());
        let x12 = Polynomial::term(o.clone(), f, xm(&[(1, 2)]), f.one());
        let inter = intersect(&[x11], &[x12], &mut big_budget()).unwrap();
        assert_eq!(inter.elements().len(), 1);
        assert_eq!(
            inter.elements()[0].lead_monomial().unwrap(),
            &xm(&[(1, 1), (1, 2)])
        );
        assert_eq!(inter.elements()[0].num_terms(), 1);
    }

    #[test]
    fn self_intersection_returns_the_ideal() {
        let gens = minors_on(2, 3, 2, &[&[1, 2], &[2, 3]]);
        let inter = intersect(&gens, &gens, &mut big_budget()).unwrap();
        let direct = buchberger(&gens, &mut big_budget()).unwrap();
        assert_eq!(inter.elements(), direct.elements());
    }

    #[test]
    fn full_determinant_lies_in_the_intersection_of_the_two_edge_ideals() {
        let o = TermOrder::default_lex();
        let i_gens = minors_on(3, 3, 2, &[&[1, 2]]);
        let j_gens = minors_on(3, 3, 2, &[&[2, 3]]);
        let inter = intersect(&i_gens, &j_gens, &mut big_budget()).unwrap();
        let det3 = minor(3, 3, &[1, 2, 3], &[1, 2, 3], &o, q()).unwrap();
        let mut budget = big_budget();
        assert!(inter.contains(&det3, &mut budget).unwrap());
        // and the determinant is not in the product ideal's lead support
        // trap: it genuinely needs the intersection
        assert!(!i_gens.contains(&det3));
    }

    #[test]
    fn pair_check_on_the_two_edge_ideals() {
        // F and G are single-facet 2-DFIs inside three rows; each is a
        // basis (maximal minors), their union is a basis, and the pair
        // check must agree, exhibiting a witness with lead x11*x22*x33
        let f_gens = minors_on(3, 3, 2, &[&[1, 2]]);
        let g_gens = minors_on(3, 3, 2, &[&[2, 3]]);
        assert!(is_groebner(&f_gens, &mut big_budget()).unwrap().verdict);
        assert!(is_groebner(&g_gens, &mut big_budget()).unwrap().verdict);

        let report = conca_pair_check(&f_gens, &g_gens, &mut big_budget()).unwrap();
        assert!(report.verdict, "failures: {:?}", report.failures);

        let union: Vec<Polynomial> = f_gens.iter().chain(&g_gens).cloned().collect();
        assert!(is_groebner(&union, &mut big_budget()).unwrap().verdict);

        // the pair [1,2|1,2] x [2,3|2,3] has lcm x11*x22*x33, realized by
        // the full determinant
        let target = xm(&[(1, 1), (2, 2), (3, 3)]);
        let witness = report
            .witnesses
            .iter()
            .find(|w| w.lead_lcm == target)
            .expect("the diagonal pair is non-coprime");
        assert!(!witness.via_coprime_leads);
        assert_eq!(witness.witness.lead_monomial().unwrap(), &target);
        assert_eq!(witness.witness.num_terms(), 6);
    }

    #[test]
    fn pair_check_agrees_with_direct_verification_on_random_two_clique_complexes() {
        let mut state: u64 = 0x5deece66d;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut agree = 0;
        let mut trials = 0;
        while agree < 5 && trials < 60 {
            trials += 1;
            let m = 4 + (next() % 2) as u16; // 4..5
            let r = 2usize;
            let n = 2 + (next() % 2) as u16; // 2..3
            // two cliques of size >= r
            let mut cliques: Vec<Vec<u16>> = Vec::new();
            for _ in 0..2 {
                let size = r + (next() % 2) as usize;
                let mut verts: Vec<u16> = Vec::new();
                while verts.len() < size {
                    let v = 1 + (next() % m as u64) as u16;
                    if !verts.contains(&v) {
                        verts.push(v);
                    }
                }
                verts.sort_unstable();
                cliques.push(verts);
            }
            if cliques[0] == cliques[1] {
                continue;
            }
            let facet_sets: [Vec<Vec<u16>>; 2] = [
                cliques[0].iter().copied().combinations(r).collect(),
                cliques[1].iter().copied().combinations(r).collect(),
            ];
            let f_refs: Vec<&[u16]> = facet_sets[0].iter().map(|f| f.as_slice()).collect();
            let g_refs: Vec<&[u16]> = facet_sets[1].iter().map(|f| f.as_slice()).collect();
            let f_gens = minors_on(n, m, r, &f_refs);
            let g_gens = minors_on(n, m, r, &g_refs);
            // both sides are single-clique ideals, hence bases; skip the
            // rare draw where one side is not (defensive)
            if !is_groebner(&f_gens, &mut big_budget()).unwrap().verdict
                || !is_groebner(&g_gens, &mut big_budget()).unwrap().verdict
            {
                continue;
            }
            let union: Vec<Polynomial> = f_gens.iter().chain(&g_gens).cloned().collect();
            let direct = is_groebner(&union, &mut big_budget()).unwrap().verdict;
            let pairwise = conca_pair_check(&f_gens, &g_gens, &mut big_budget())
                .unwrap()
                .verdict;
            assert_eq!(direct, pairwise, "cliques {cliques:?}, n = {n}, m = {m}");
            agree += 1;
        }
        assert!(agree >= 5, "only {agree} eligible draws in {trials} trials");
    }

    #[test]
    fn lead_ideal_inclusions_on_random_minor_ideals() {
        let mut state: u64 = 0xace1_ace1_ace1_ace1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..6 {
            let pick = |next: &mut dyn FnMut() -> u64| -> Vec<Polynomial> {
                let count = 2 + (next() % 2) as usize;
                let all_cols: Vec<Vec<u16>> = (1..=4u16).combinations(2).collect();
                let mut cols: Vec<&[u16]> = Vec::new();
                for _ in 0..count {
                    cols.push(all_cols[(next() % all_cols.len() as u64) as usize].as_slice());
                }
                cols.sort_unstable();
                cols.dedup();
                minors_on(3, 4, 2, &cols)
            };
            let i_gens = pick(&mut next);
            let j_gens = pick(&mut next);

            let gb_i = buchberger(&i_gens, &mut big_budget()).unwrap();
            let gb_j = buchberger(&j_gens, &mut big_budget()).unwrap();
            let union: Vec<Polynomial> = i_gens.iter().chain(&j_gens).cloned().collect();
            let gb_sum = buchberger(&union, &mut big_budget()).unwrap();
            let gb_cap = intersect(&i_gens, &j_gens, &mut big_budget()).unwrap();

            let in_sum = MonomialIdeal::new(gb_sum.lead_monomials()).unwrap();
            for lead in gb_i.lead_monomials().iter().chain(&gb_j.lead_monomials()) {
                assert!(in_sum.contains(lead), "trial {trial}: {lead} escapes in(I+J)");
            }
            let in_i = MonomialIdeal::new(gb_i.lead_monomials()).unwrap();
            let in_j = MonomialIdeal::new(gb_j.lead_monomials()).unwrap();
            let meet = in_i.intersect(&in_j);
            for lead in gb_cap.lead_monomials() {
                assert!(
                    meet.contains(&lead),
                    "trial {trial}: {lead} escapes in(I) ∩ in(J)"
                );
            }
        }
    }

    #[test]
    fn necessity_search_exhaustive_for_edge_ideals_on_three_vertices() {
        let report = necessity_search(
            2,
            3,
            &TermOrder::default_lex(),
            q(),
            usize::MAX,
            1_000_000,
        )
        .unwrap();
        assert!(!report.truncated);
        // m = 2: one covering graph; m = 3: four covering graphs
        assert_eq!(report.rows.len(), 5);
        for row in &report.rows {
            assert_eq!(
                row.lcm_closed, row.groebner,
                "graph {:?} splits the equivalence",
                row.facets
            );
            assert!(!row.counterexample);
        }
        // single-facet rows are always (true, true)
        let single = &report.rows[0];
        assert_eq!(single.facets.len(), 1);
        assert!(single.lcm_closed && single.groebner);
    }

    #[test]
    fn necessity_search_exhaustive_for_triangle_ideals_on_four_vertices() {
        let report = necessity_search(
            3,
            4,
            &TermOrder::default_lex(),
            q(),
            usize::MAX,
            5_000_000,
        )
        .unwrap();
        assert!(!report.truncated);
        // m = 3: one covering complex; m = 4: subsets of the four triangles
        // covering all vertices: 11 of 15
        assert_eq!(report.rows.len(), 12);
        for row in &report.rows {
            assert!(
                !row.counterexample,
                "unexpected counterexample: {:?}",
                row.facets
            );
            // at r = n the implication closed => basis holds; the converse
            // is the open direction being probed
            if row.lcm_closed {
                assert!(row.groebner, "lcm-closed complex {:?} not a basis", row.facets);
            }
        }
    }

    #[test]
    fn necessity_search_truncation_and_bounds() {
        let report =
            necessity_search(2, 3, &TermOrder::default_lex(), q(), 2, 1_000_000).unwrap();
        assert!(report.truncated);
        assert_eq!(report.rows.len(), 2);
        assert!(necessity_search(2, 1, &TermOrder::default_lex(), q(), 10, 100).is_err());
    }
}
