//! Built-in regression suite: every stored worked example is recomputed
//! from scratch and compared against its hand-checked value. One line per
//! check; exit 1 if anything drifts.

use super::Output;
use crate::algebra::{Field, Monomial, TermOrder, Var};
use crate::caps::Caps;
use crate::cm::{cor_cmness_check, pd_and_cm};
use crate::dfi::{build_rdfi, is_lcm_closed, PairResolution, RDfi};
use crate::encomplex::{build_en_complex, index_set, linear_strand_rank_check,
    one_nonface_homology_equiv};
use crate::error::Error;
use crate::groebner::{is_groebner, Budget};
use crate::lcmlattice::{gpw_betti, m_k_monomial, mk_decompose, verify_lin_strand_bettis,
    MonomialIdeal};
use crate::poset::{boolean_lattice, kunneth_check, KunnethVariant};
use crate::simplicial::{clique_complex, CliqueDecomposition, Face, SimplicialComplex};
use itertools::Itertools;
use serde_json::json;
use std::collections::BTreeMap;

type CheckResult = std::result::Result<(), String>;

struct Check {
    name: &'static str,
    run: fn(&Caps) -> CheckResult,
}

fn checks() -> Vec<Check> {
    vec![
        Check { name: "pair-notation monomial", run: pair_notation_monomial },
        Check { name: "shift index sets", run: shift_index_sets },
        Check { name: "lcm-closed interval pair", run: lcm_closed_interval_pair },
        Check { name: "lcm-closed fails on an edge path", run: lcm_closed_fails_on_edge_path },
        Check { name: "basis verdicts", run: basis_verdicts },
        Check { name: "interval pair in four rows: Betti table", run: four_row_pair_betti },
        Check { name: "interval pair in four rows: not Cohen-Macaulay", run: four_row_pair_cm },
        Check { name: "coprime clique pair is Cohen-Macaulay", run: coprime_pair_is_cm },
        Check { name: "one-nonface graphs", run: one_nonface_graphs },
        Check { name: "boolean interval spheres", run: boolean_interval_spheres },
        Check { name: "Kunneth products", run: kunneth_products },
        Check { name: "triangle edge ideal Betti numbers", run: triangle_edge_ideal },
        Check { name: "linear-strand Betti prediction", run: linear_strand_prediction },
        Check { name: "strand ranks match linear Betti numbers", run: strand_ranks_match },
    ]
}

pub(super) fn run(caps: &Caps) -> crate::error::Result<Output> {
    let mut human = Vec::new();
    let mut failures = Vec::new();
    let all = checks();
    let total = all.len();
    for check in all {
        match (check.run)(caps) {
            Ok(()) => human.push(format!("ok   {}", check.name)),
            Err(detail) => {
                human.push(format!("FAIL {}: {detail}", check.name));
                failures.push(json!({"name": check.name, "detail": detail}));
            }
        }
    }
    human.push(format!("{}/{} checks passed", total - failures.len(), total));
    let exit = u8::from(!failures.is_empty());
    Ok(Output {
        json: json!({
            "total": total,
            "passed": total - failures.len(),
            "failed": failures.len(),
            "failures": failures,
        }),
        human: human.join("\n"),
        exit,
    })
}

// ---------------------------------------------------------------------
// helpers

fn q() -> Field {
    Field::Rationals
}

fn face(v: &[u32]) -> Face {
    Face::new(v.to_vec()).expect("selftest faces are valid")
}

fn xm(pairs: &[(u16, u16)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().map(|&(r, c)| (Var::x(r, c), 1)))
}

fn ensure(cond: bool, detail: impl Into<String>) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn lib<T>(r: crate::error::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn decomposition(m: u32, facets: &[&[u32]], r: usize) -> std::result::Result<CliqueDecomposition, String> {
    let delta = lib(SimplicialComplex::new(
        m,
        facets.iter().map(|f| face(f)).collect(),
    ))?;
    lib(clique_complex(&delta, r))
}

fn dfi(m: u32, facets: &[&[u32]], n: u16, r: usize) -> std::result::Result<RDfi, String> {
    let delta = lib(SimplicialComplex::new(
        m,
        facets.iter().map(|f| face(f)).collect(),
    ))?;
    lib(build_rdfi(delta, n, r, TermOrder::default_lex(), q()))
}

fn interval_dfi(m: u32, intervals: &[(u32, u32)], n: u16, r: usize) -> std::result::Result<RDfi, String> {
    let facets: Vec<Vec<u32>> = intervals
        .iter()
        .flat_map(|&(a, b)| (a..=b).collect::<Vec<u32>>().into_iter().combinations(r))
        .collect();
    let refs: Vec<&[u32]> = facets.iter().map(|f| f.as_slice()).collect();
    dfi(m, &refs, n, r)
}

// ---------------------------------------------------------------------
// checks

fn pair_notation_monomial(_: &Caps) -> CheckResult {
    let tau = face(&[1, 2, 3, 4]);
    let m = lib(m_k_monomial(&[1, 2, 1], &tau))?;
    let expected = xm(&[(1, 1), (2, 2), (2, 3), (3, 4)]);
    ensure(m == expected, format!("m_4((1,2,1); {tau}) = {m}, expected {expected}"))?;
    let (a, t) = mk_decompose(&m, 3).ok_or("decomposition failed on its own product")?;
    ensure(
        a == vec![1, 2, 1] && t == tau,
        format!("round trip gave ({a:?}; {t})"),
    )
}

fn shift_index_sets(_: &Caps) -> CheckResult {
    let cases: [(&[u32], &[u32], &[(u16, u32)]); 3] = [
        (&[1, 1, 1], &[1, 2, 3, 4, 5, 6], &[(1, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]),
        (&[1, 0, 2], &[1, 2, 3, 4, 5, 6], &[(1, 1), (1, 2), (3, 4), (3, 5), (3, 6)]),
        (&[2, 1], &[1, 2, 4, 5, 6], &[(1, 1), (1, 2), (1, 4), (2, 5), (2, 6)]),
    ];
    for (alpha, i_face, expected) in cases {
        let got = lib(index_set(alpha, &face(i_face)))?;
        ensure(
            got == expected,
            format!("index set of ({alpha:?}; {i_face:?}) = {got:?}, expected {expected:?}"),
        )?;
    }
    ensure(
        matches!(index_set(&[1, 1], &face(&[1, 2, 3])), Err(Error::ShapeMismatch(_))),
        "a mismatched shape was accepted",
    )
}

fn lcm_closed_interval_pair(_: &Caps) -> CheckResult {
    let dfi = interval_dfi(5, &[(1, 4), (2, 5)], 3, 3)?;
    let report = is_lcm_closed(&dfi);
    ensure(report.verdict, "expected the interval pair to be lcm-closed")?;
    ensure(report.missing.is_empty(), format!("{} unresolved pairs", report.missing.len()))?;
    let witnessed = report
        .resolved
        .iter()
        .any(|p| matches!(p.resolution, PairResolution::Witness { .. }));
    ensure(witnessed, "no cross-clique pair needed a dividing witness")
}

fn lcm_closed_fails_on_edge_path(_: &Caps) -> CheckResult {
    let dfi = dfi(3, &[&[1, 2], &[2, 3]], 3, 2)?;
    let report = is_lcm_closed(&dfi);
    ensure(!report.verdict, "the path of two edges must fail the condition")?;
    ensure(!report.missing.is_empty(), "a failing pair should be reported")
}

fn basis_verdicts(caps: &Caps) -> CheckResult {
    let cases: [(RDfi, bool, &str); 3] = [
        (interval_dfi(5, &[(1, 4), (2, 5)], 3, 3)?, true, "interval pair"),
        (dfi(3, &[&[1, 2], &[2, 3]], 3, 2)?, true, "edge path"),
        (dfi(7, &[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]], 3, 3)?, false, "three petals"),
    ];
    for (dfi, expected, name) in cases {
        let mut budget = Budget::new(caps.gb_steps);
        let check = lib(is_groebner(&dfi.polynomials(), &mut budget))?;
        ensure(
            check.verdict == expected,
            format!("{name}: basis verdict {}, expected {expected}", check.verdict),
        )?;
        if !expected {
            ensure(check.failure.is_some(), format!("{name}: no failing pair reported"))?;
        }
    }
    Ok(())
}

fn four_row_pair_betti(caps: &Caps) -> CheckResult {
    let dfi = interval_dfi(4, &[(1, 3), (2, 4)], 4, 3)?;
    ensure(dfi.generators().len() == 8, format!("{} generators, expected 8", dfi.generators().len()))?;
    let ideal = lib(MonomialIdeal::new(dfi.lead_monomials()))?;
    let table = lib(gpw_betti(&ideal, q(), caps))?;
    let expected: BTreeMap<(usize, u32), u64> =
        [((0, 0), 1), ((1, 3), 8), ((2, 4), 7), ((2, 6), 10), ((3, 7), 16), ((4, 8), 6)]
            .into_iter()
            .collect();
    ensure(
        table.coarse() == expected,
        format!("coarse table {:?}", table.coarse()),
    )?;
    ensure(
        table.totals() == vec![1, 8, 17, 16, 6],
        format!("totals {:?}", table.totals()),
    )
}

fn four_row_pair_cm(caps: &Caps) -> CheckResult {
    let dfi = interval_dfi(4, &[(1, 3), (2, 4)], 4, 3)?;
    let ideal = lib(MonomialIdeal::new(dfi.lead_monomials()))?;
    let verdict = lib(pd_and_cm(&ideal, q(), caps))?;
    ensure(
        verdict.ht == 3 && verdict.pd == 4 && !verdict.cm_initial,
        format!("ht {}, pd {}, cm {}", verdict.ht, verdict.pd, verdict.cm_initial),
    )?;
    match cor_cmness_check(&dfi, caps) {
        Err(Error::HypothesisFailed(_)) => Ok(()),
        Err(e) => Err(format!("unexpected error {e}")),
        Ok(_) => Err("the smallness hypotheses should fail here".into()),
    }
}

fn coprime_pair_is_cm(caps: &Caps) -> CheckResult {
    let dfi = dfi(5, &[&[1, 2, 3], &[3, 4, 5]], 3, 3)?;
    let report = lib(cor_cmness_check(&dfi, caps))?;
    ensure(report.cross_leads_coprime, "cross-clique leads should be coprime")?;
    ensure(
        report.verdict.ht == 2 && report.verdict.pd == 2 && report.verdict.cm_initial,
        format!(
            "ht {}, pd {}, cm {}",
            report.verdict.ht, report.verdict.pd, report.verdict.cm_initial
        ),
    )
}

fn one_nonface_graphs(_: &Caps) -> CheckResult {
    let graphs: [(&[&[u32]], u64); 3] = [
        (&[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]], 1),
        (&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]], 0),
        (&[&[1, 2], &[1, 4], &[2, 3], &[2, 4], &[3, 4]], 0),
    ];
    for (k, (edges, expected_h1)) in graphs.into_iter().enumerate() {
        let d = decomposition(4, edges, 2)?;
        let report = lib(one_nonface_homology_equiv(&d, 3, &TermOrder::default_lex(), q()))?;
        ensure(
            report.agrees && report.h1_rank == expected_h1,
            format!(
                "graph {}: H_1 rank {} (expected {expected_h1}), agreement {}",
                k + 1,
                report.h1_rank,
                report.agrees
            ),
        )?;
    }
    // explicit nonbounding cycle behind the first graph's homology class
    let d = decomposition(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 4], &[3, 4]], 2)?;
    let c = lib(build_en_complex(&d, 3, &TermOrder::default_lex()))?;
    let position = |sigma: &Face| {
        c.basis(1)
            .iter()
            .position(|b| b.sigma == *sigma)
            .ok_or_else(|| format!("missing basis element for {sigma}"))
    };
    let chain = vec![
        (position(&face(&[1, 3, 4]))?, xm(&[(2, 2)]), 1),
        (position(&face(&[1, 2, 4]))?, xm(&[(2, 3)]), -1),
    ];
    let cert = lib(c.certify_cycle(1, &chain, q()))?;
    ensure(
        cert.is_nonbounding_cycle(),
        format!(
            "cycle status: nonzero {}, cycle {}, boundary {}",
            cert.nonzero, cert.is_cycle, cert.is_boundary
        ),
    )
}

fn boolean_interval_spheres(caps: &Caps) -> CheckResult {
    for y in 2..=5usize {
        let proper = lib(boolean_lattice(y).proper_part())?;
        let ranks = lib(proper.order_complex_homology(q(), caps))?;
        let expected = vec![(y as i64 - 2, 1)];
        ensure(
            ranks.nonzero() == expected,
            format!("subset lattice on {y}: homology {:?}", ranks.nonzero()),
        )?;
    }
    Ok(())
}

fn kunneth_products(caps: &Caps) -> CheckResult {
    let variants = [
        KunnethVariant::Unreduced,
        KunnethVariant::BottomsRemoved,
        KunnethVariant::ProperParts,
    ];
    for y in [2usize, 3] {
        let p = boolean_lattice(2);
        let q_lattice = boolean_lattice(y);
        for variant in variants {
            let report = lib(kunneth_check(&p, &q_lattice, variant, q(), caps))?;
            ensure(
                report.agree,
                format!(
                    "B(2) x B({y}) under {variant:?}: product {:?} vs convolution {:?}",
                    report.left, report.right
                ),
            )?;
        }
    }
    Ok(())
}

fn triangle_edge_ideal(caps: &Caps) -> CheckResult {
    let ideal = lib(MonomialIdeal::new(vec![
        xm(&[(1, 1), (1, 2)]),
        xm(&[(1, 2), (1, 3)]),
        xm(&[(1, 1), (1, 3)]),
    ]))?;
    let table = lib(gpw_betti(&ideal, q(), caps))?;
    ensure(
        table.totals() == vec![1, 3, 2],
        format!("totals {:?}", table.totals()),
    )
}

fn linear_strand_prediction(caps: &Caps) -> CheckResult {
    for clique in [face(&[1, 2, 3]), face(&[1, 2, 3, 4])] {
        let report = lib(verify_lin_strand_bettis(2, &clique, q(), caps))?;
        ensure(
            report.clean(),
            format!(
                "clique {clique}: {} prediction / {} vanishing anomalies",
                report.prediction_anomalies.len(),
                report.moreover_anomalies.len()
            ),
        )?;
    }
    // spot value: the join of the three 2x2 lead terms on columns {1,2,3}
    let ideal = lib(MonomialIdeal::new(vec![
        xm(&[(1, 1), (2, 2)]),
        xm(&[(1, 1), (2, 3)]),
        xm(&[(1, 2), (2, 3)]),
    ]))?;
    let table = lib(gpw_betti(&ideal, q(), caps))?;
    let w = xm(&[(1, 1), (2, 2), (2, 3)]);
    ensure(
        table.beta(2, &w) == 1,
        format!("beta_2 at {w} = {}, expected 1", table.beta(2, &w)),
    )
}

fn strand_ranks_match(caps: &Caps) -> CheckResult {
    let complete: Vec<Vec<u32>> = (1u32..=4).combinations(3).collect();
    let complete_refs: Vec<&[u32]> = complete.iter().map(|f| f.as_slice()).collect();
    let cases: [(&[&[u32]], u32, &str); 2] = [
        (&complete_refs, 4, "complete graph on four vertices"),
        (&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]], 4, "two glued triangles"),
    ];
    for (facets, m, name) in cases {
        let r = facets[0].len();
        let d = decomposition(m, facets, r)?;
        let report = lib(linear_strand_rank_check(&d, 3, &TermOrder::default_lex(), q(), caps))?;
        ensure(
            report.all_equal,
            format!("{name}: strand ranks and linear Betti numbers differ"),
        )?;
    }
    Ok(())
}
