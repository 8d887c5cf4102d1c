//! lcm lattices of monomial ideals, multigraded Betti numbers via
//! open-interval homology, an independent Taylor-complex oracle, and the
//! staircase monomials m_k(a;τ) with their predicted linear-strand Betti
//! entries.
//!
//! For a monomial ideal M with minimal generators m_1,…,m_g, the lcm
//! lattice L_M consists of the lcms of all subsets of generators ordered
//! by divisibility (bottom = 1 = lcm of the empty set). The multigraded
//! Betti numbers of S/M are
//!
//!   β_{i,m}(S/M) = dim H̃_{i−2}( (1,m)_{L_M} ; k )   for i ≥ 1, m ∈ L_M,
//!
//! zero for multidegrees outside the lattice, and β_{0,1} = 1.

use crate::algebra::{Field, Monomial, Var};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poset::{reduced_homology_of_faces, FinitePoset, HomologyRanks};
use crate::simplicial::Face;
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A monomial ideal held by its minimal generators (sorted, none dividing
/// another).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize: drop duplicates and any generator divisible by another.
    /// Unit generators are rejected (the lattice constructions assume a
    /// proper ideal).
    pub fn new(gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.iter().any(|g| g.degree() == 0) {
            return Err(Error::InvalidInput(
                "monomial ideal generators must be non-units".into(),
            ));
        }
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { gens: minimal })
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Equality as ideals = equality of minimal generating sets.
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.gens == other.gens
    }

    /// Intersection of two monomial ideals: pairwise lcms, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.lcm(b))
            .collect();
        MonomialIdeal::new(gens).expect("lcms of non-units are non-units")
    }

    /// Product of two monomial ideals: pairwise products, minimalized.
    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.mul(b))
            .collect();
        MonomialIdeal::new(gens).expect("products of non-units are non-units")
    }

    /// Radical: strip exponents down to 1 on every generator, minimalize.
    pub fn radical(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| Monomial::from_pairs(g.vars().map(|(v, _)| (v, 1))))
            .collect();
        MonomialIdeal::new(gens).expect("radicals of non-units are non-units")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().join(", "))
    }
}

/// The lcm lattice: join closure of the generators under lcm, with
/// bottom 1 and top = lcm of all generators.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    /// Sorted by (total degree, variable order); `elements[0]` is 1.
    elements: Vec<Monomial>,
    /// Indices of the atoms (the minimal generators).
    atoms: Vec<usize>,
}

impl LcmLattice {
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the join of everything (unique element of maximal degree).
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn element(&self, idx: usize) -> &Monomial {
        &self.elements[idx]
    }

    /// Lattice position of a monomial, if it is an element.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    /// Indices strictly between bottom and `idx` (the open interval).
    pub fn open_interval(&self, idx: usize) -> Vec<usize> {
        let m = &self.elements[idx];
        (1..self.elements.len())
            .filter(|&e| e != idx && self.elements[e].divides(m))
            .collect()
    }

    /// Atoms dividing the element at `idx`.
    pub fn atoms_below(&self, idx: usize) -> Vec<usize> {
        let m = &self.elements[idx];
        self.atoms
            .iter()
            .copied()
            .filter(|&a| self.elements[a].divides(m))
            .collect()
    }

    /// Covering pairs (lower, upper) of the divisibility order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.elements.len();
        let mut out = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if hi == lo || !self.elements[lo].divides(&self.elements[hi]) {
                    continue;
                }
                let blocked = (0..n).any(|k| {
                    k != lo
                        && k != hi
                        && self.elements[lo].divides(&self.elements[k])
                        && self.elements[k].divides(&self.elements[hi])
                });
                if !blocked {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// The whole lattice as a finite poset (small lattices only).
    pub fn to_poset(&self) -> Result<FinitePoset<Monomial>> {
        FinitePoset::from_leq_fn(self.elements.clone(), |a, b| a.divides(b))
    }
}

/// Join closure of the generators, capped by `caps.lattice_elements`.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<LcmLattice> {
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    set.insert(Monomial::one());
    let mut queue: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        if set.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    while let Some(w) = queue.pop() {
        let mut fresh = Vec::new();
        for e in &set {
            let j = w.lcm(e);
            if !set.contains(&j) {
                fresh.push(j);
            }
        }
        for j in fresh {
            if set.insert(j.clone()) {
                if set.len() > caps.lattice_elements {
                    return Err(Error::LatticeTooLarge(set.len()));
                }
                queue.push(j);
            }
        }
    }
    let elements: Vec<Monomial> = set.into_iter().collect();
    let atoms: Vec<usize> = ideal
        .gens()
        .iter()
        .map(|g| elements.binary_search(g).expect("generator is an element"))
        .collect();
    Ok(LcmLattice { elements, atoms })
}

/// Multigraded Betti numbers of the quotient S/M, indexed by homological
/// degree and multidegree monomial. Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable {
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, multidegree: Monomial, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, multidegree)).or_insert(0) += rank;
        }
    }

    pub fn beta(&self, i: usize, multidegree: &Monomial) -> u64 {
        self.entries
            .get(&(i, multidegree.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn multigraded(&self) -> impl Iterator<Item = (&(usize, Monomial), &u64)> {
        self.entries.iter()
    }

    /// Coarse table: (homological degree i, total degree j) → rank.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        for ((i, m), &rank) in &self.entries {
            *out.entry((*i, m.degree())).or_insert(0) += rank;
        }
        out
    }

    /// Total Betti numbers β_i, indexed by homological degree.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for ((i, _), &rank) in &self.entries {
            while out.len() <= *i {
                out.push(0);
            }
            out[*i] += rank;
        }
        out
    }

    /// Projective dimension of the quotient: largest i with β_i ≠ 0.
    pub fn pd(&self) -> usize {
        self.entries
            .keys()
            .map(|(i, _)| *i)
            .max()
            .unwrap_or(0)
    }

    /// Rows of the conventional display: row index j − i, column i.
    pub fn rows(&self) -> BTreeMap<u32, BTreeMap<usize, u64>> {
        let mut rows: BTreeMap<u32, BTreeMap<usize, u64>> = BTreeMap::new();
        for ((i, j), rank) in self.coarse() {
            let row = j - i as u32;
            *rows.entry(row).or_default().entry(i).or_insert(0) += rank;
        }
        rows
    }

    /// Text rendering in the usual row format (row = total degree minus
    /// homological degree, "." for zero).
    pub fn render(&self) -> String {
        let totals = self.totals();
        let ncols = totals.len();
        let rows = self.rows();
        let max_row = rows.keys().max().copied().unwrap_or(0);

        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut head = vec![String::new()];
        head.extend((0..ncols).map(|i| i.to_string()));
        grid.push(head);
        let mut total_line = vec!["total:".to_string()];
        total_line.extend(totals.iter().map(|t| t.to_string()));
        grid.push(total_line);
        for row in 0..=max_row {
            let mut line = vec![format!("{row}:")];
            for i in 0..ncols {
                let v = rows
                    .get(&row)
                    .and_then(|cols| cols.get(&i))
                    .copied()
                    .unwrap_or(0);
                line.push(if v == 0 { ".".to_string() } else { v.to_string() });
            }
            grid.push(line);
        }

        let widths: Vec<usize> = (0..=ncols)
            .map(|c| grid.iter().map(|line| line[c].len()).max().unwrap_or(1))
            .collect();
        grid.iter()
            .map(|line| {
                line.iter()
                    .enumerate()
                    .map(|(c, cell)| format!("{cell:>width$}", width = widths[c]))
                    .join(" ")
            })
            .join("\n")
    }

    /// JSON shape used by the CLI: coarse entries plus multigraded detail.
    pub fn to_json(&self) -> serde_json::Value {
        let coarse: Vec<serde_json::Value> = self
            .coarse()
            .iter()
            .map(|(&(i, j), &beta)| serde_json::json!({"i": i, "j": j, "beta": beta}))
            .collect();
        let multigraded: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, m), &beta)| {
                serde_json::json!({"i": i, "multidegree": m.to_string(), "beta": beta})
            })
            .collect();
        serde_json::json!({
            "convention": "quotient",
            "total": self.totals(),
            "coarse": coarse,
            "multigraded": multigraded,
        })
    }
}

impl Default for BettiTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Interval elements above which the order-complex route is abandoned for
/// the atom-crosscut model (identical homology, exponentially smaller).
const ORDER_COMPLEX_INTERVAL_LIMIT: usize = 40;

/// Largest atom count the crosscut route accepts (2^t subsets).
const CROSSCUT_ATOM_LIMIT: usize = 22;

/// Reduced homology of the open interval (1, element idx) of the lattice.
///
/// Small intervals go through the order complex directly. Large intervals
/// use the crosscut complex on the atoms below the element (faces = atom
/// subsets whose join is not the whole element), which is homotopy
/// equivalent to the order complex of the open interval; the two routes
/// are cross-checked in the test suite.
pub fn interval_homology(
    lattice: &LcmLattice,
    idx: usize,
    field: Field,
    caps: &Caps,
) -> Result<HomologyRanks> {
    let interval = lattice.open_interval(idx);
    if interval.len() <= ORDER_COMPLEX_INTERVAL_LIMIT {
        interval_homology_via_order_complex(lattice, idx, field, caps)
    } else {
        interval_homology_via_crosscut(lattice, idx, field)
    }
}

/// Order-complex route: chains of the open interval.
pub fn interval_homology_via_order_complex(
    lattice: &LcmLattice,
    idx: usize,
    field: Field,
    caps: &Caps,
) -> Result<HomologyRanks> {
    let interval = lattice.open_interval(idx);
    let labels: Vec<Monomial> = interval
        .iter()
        .map(|&e| lattice.element(e).clone())
        .collect();
    let poset = FinitePoset::from_leq_fn(labels, |a, b| a.divides(b))?;
    poset.order_complex_homology(field, caps)
}

/// Crosscut route: subsets of the atoms below the element whose lcm is a
/// proper divisor of the element.
pub fn interval_homology_via_crosscut(
    lattice: &LcmLattice,
    idx: usize,
    field: Field,
) -> Result<HomologyRanks> {
    let target = lattice.element(idx);
    let atoms = lattice.atoms_below(idx);
    let t = atoms.len();
    if t > CROSSCUT_ATOM_LIMIT {
        return Err(Error::ComplexTooLarge(1usize << CROSSCUT_ATOM_LIMIT));
    }
    let atom_monomials: Vec<&Monomial> = atoms.iter().map(|&a| lattice.element(a)).collect();

    // lcm per subset mask, built incrementally from the lowest bit
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << t);
    lcms.push(Monomial::one());
    for mask in 1usize..(1 << t) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        lcms.push(lcms[rest].lcm(atom_monomials[low]));
    }

    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for (mask, l) in lcms.iter().enumerate().skip(1) {
        if l == target {
            continue;
        }
        let members: Vec<usize> = (0..t).filter(|&b| mask & (1 << b) != 0).collect();
        let card = members.len();
        while faces.len() < card {
            faces.push(Vec::new());
        }
        faces[card - 1].push(members);
    }
    for level in &mut faces {
        level.sort();
    }
    Ok(reduced_homology_of_faces(field, &faces))
}

/// Betti table of S/M from the lcm lattice: β_{i,m} = H̃_{i−2}((1,m)).
pub fn gpw_betti(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, caps)?;
    gpw_betti_on(&lattice, field, caps)
}

/// Same, reusing an already-built lattice.
pub fn gpw_betti_on(lattice: &LcmLattice, field: Field, caps: &Caps) -> Result<BettiTable> {
    let per_element: Result<Vec<(usize, HomologyRanks)>> = (1..lattice.len())
        .into_par_iter()
        .map(|idx| interval_homology(lattice, idx, field, caps).map(|h| (idx, h)))
        .collect();
    let mut table = BettiTable::new();
    table.add(0, Monomial::one(), 1);
    for (idx, homology) in per_element? {
        for (dim, rank) in homology.nonzero() {
            let i = (dim + 2) as usize;
            table.add(i, lattice.element(idx).clone(), rank);
        }
    }
    Ok(table)
}

/// Independent Betti oracle via the Taylor complex: for every multidegree
/// α arising as an lcm of generators, the α-strand of Taylor ⊗ k has basis
/// the generator subsets with lcm α, graded by subset size, and boundary
/// keeping exactly the facets with unchanged lcm.
pub fn taylor_betti_oracle(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<BettiTable> {
    use crate::linalg::{SparseMatrix, SparseRow};

    let g = ideal.num_gens();
    if g > caps.oracle_generators {
        return Err(Error::OracleTooLarge(g));
    }
    let gens = ideal.gens();

    let total = 1usize << g;
    let mut lcms: Vec<Monomial> = Vec::with_capacity(total);
    lcms.push(Monomial::one());
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        lcms.push(lcms[rest].lcm(&gens[low]));
    }

    let mut by_multidegree: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
    for (mask, l) in lcms.iter().enumerate() {
        by_multidegree.entry(l).or_default().push(mask);
    }

    let one = field.one();
    let mut table = BettiTable::new();
    for (alpha, masks) in by_multidegree {
        // strand basis by subset size; positions within each level
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); g + 1];
        for &mask in &masks {
            levels[mask.count_ones() as usize].push(mask);
        }
        let position: BTreeMap<usize, usize> = levels
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(p, &m)| (m, p)))
            .collect();

        // boundary ranks between consecutive levels
        let mut rank_d = vec![0usize; g + 2];
        for i in 1..=g {
            if levels[i].is_empty() {
                continue;
            }
            let mut mat = SparseMatrix::new(field, levels[i - 1].len());
            for &mask in &levels[i] {
                let mut entries = Vec::new();
                for (j, bit) in (0..g).filter(|&b| mask & (1 << b) != 0).enumerate() {
                    let sub = mask & !(1 << bit);
                    if lcms[sub] == lcms[mask] {
                        let col = position[&sub];
                        let sign = if j % 2 == 0 {
                            one.clone()
                        } else {
                            field.neg(&one)
                        };
                        entries.push((col, sign));
                    }
                }
                mat.push_row(SparseRow::from_entries(field, entries));
            }
            rank_d[i] = mat.rank();
        }

        for i in 0..=g {
            let dim = levels[i].len() as i64 - rank_d[i] as i64 - rank_d[i + 1] as i64;
            assert!(dim >= 0, "negative strand homology dimension");
            if dim > 0 {
                table.add(i, alpha.clone(), dim as u64);
            }
        }
    }
    Ok(table)
}

/// The monomial m_k(a;τ) = Π x_{i,τ_j} over the pair set
/// A(a;τ) = {(i, τ_j) : |a_{≤i−1}| < j ≤ |a_{≤i}|}, where a is a
/// composition with nonnegative parts and τ a face with |τ| = Σa.
pub fn m_k_monomial(a: &[u32], tau: &Face) -> Result<Monomial> {
    let k: u32 = a.iter().sum();
    if k as usize != tau.len() {
        return Err(Error::ShapeMismatch(format!(
            "composition sums to {k} but the face has {} vertices",
            tau.len()
        )));
    }
    let mut pairs: Vec<(Var, u32)> = Vec::new();
    let mut prefix: u32 = 0;
    for (i0, &part) in a.iter().enumerate() {
        let row = (i0 + 1) as u16;
        for j in prefix + 1..=prefix + part {
            let col = tau.vertices()[(j - 1) as usize];
            let col = u16::try_from(col).map_err(|_| {
                Error::InvalidInput(format!("column index {col} does not fit the variable grid"))
            })?;
            pairs.push((Var::x(row, col), 1));
        }
        prefix += part;
    }
    Ok(Monomial::from_pairs(pairs.into_iter()))
}

/// Inverse of [`m_k_monomial`] for a fixed number of rows: a monomial is
/// of m_k form exactly when it is squarefree, uses each column at most
/// once, stays within rows 1..=n, and its row indices are nondecreasing
/// when read in column order. Returns the composition and the column face.
pub fn mk_decompose(w: &Monomial, n: u16) -> Option<(Vec<u32>, Face)> {
    if !w.is_squarefree() {
        return None;
    }
    let mut pairs: Vec<(u16, u16)> = Vec::new(); // (col, row)
    for (v, _) in w.vars() {
        match v {
            Var::X(row, col) => pairs.push((col, row)),
            Var::Aux(_) => return None,
        }
    }
    pairs.sort_unstable();
    for pair in pairs.windows(2) {
        if pair[0].0 == pair[1].0 {
            return None; // column used twice
        }
        if pair[0].1 > pair[1].1 {
            return None; // rows decrease along columns
        }
    }
    if pairs.iter().any(|&(_, row)| row == 0 || row > n) {
        return None;
    }
    let mut composition = vec![0u32; n as usize];
    for &(_, row) in &pairs {
        composition[(row - 1) as usize] += 1;
    }
    let tau = Face::new(pairs.iter().map(|&(col, _)| col as u32).collect()).ok()?;
    Some((composition, tau))
}

/// One discrepancy from the predicted single linear-strand Betti entry.
#[derive(Debug, Clone, Serialize)]
pub struct MkAnomaly {
    pub multidegree: String,
    pub homological_degree: usize,
    pub expected: u64,
    pub found: u64,
}

/// Betti entries found at a lattice element that is not of m_k form (the
/// companion claim predicts none).
#[derive(Debug, Clone, Serialize)]
pub struct MoreoverEntry {
    pub multidegree: String,
    pub entries: Vec<(usize, u64)>,
}

/// Outcome of the single-clique linear-strand scan.
#[derive(Debug, Clone, Serialize)]
pub struct LinStrandReport {
    pub n: u16,
    pub clique: Vec<u32>,
    pub lattice_elements: usize,
    pub mk_elements: usize,
    pub other_elements: usize,
    /// Violations of "β_{i,w} = 1 exactly at i = deg w − n + 1" at m_k
    /// elements.
    pub prediction_anomalies: Vec<MkAnomaly>,
    /// Nonzero Betti entries at non-m_k elements (predicted absent; they
    /// are reported rather than assumed away).
    pub moreover_anomalies: Vec<MoreoverEntry>,
}

impl LinStrandReport {
    pub fn clean(&self) -> bool {
        self.prediction_anomalies.is_empty() && self.moreover_anomalies.is_empty()
    }
}

/// Scan the lead-term ideal of all n-minors on one clique: every lattice
/// element of the form m_k(a;τ) must carry a single Betti entry
/// β_{k−n+1,w} = 1, and every other element is checked against the
/// predicted vanishing.
pub fn verify_lin_strand_bettis(
    n: u16,
    clique: &Face,
    field: Field,
    caps: &Caps,
) -> Result<LinStrandReport> {
    if (clique.len() as u16) < n {
        return Err(Error::InvalidInput(format!(
            "clique {clique} has fewer than n = {n} vertices"
        )));
    }
    let gens: Vec<Monomial> = clique
        .vertices()
        .iter()
        .copied()
        .combinations(n as usize)
        .map(|cols| {
            Monomial::from_pairs(
                cols.iter()
                    .enumerate()
                    .map(|(i, &c)| (Var::x((i + 1) as u16, c as u16), 1)),
            )
        })
        .collect();
    let ideal = MonomialIdeal::new(gens)?;
    let lattice = lcm_lattice(&ideal, caps)?;
    let table = gpw_betti_on(&lattice, field, caps)?;
    let max_i = table.pd() + 1;

    let mut report = LinStrandReport {
        n,
        clique: clique.vertices().to_vec(),
        lattice_elements: lattice.len(),
        mk_elements: 0,
        other_elements: 0,
        prediction_anomalies: Vec::new(),
        moreover_anomalies: Vec::new(),
    };

    for idx in 1..lattice.len() {
        let w = lattice.element(idx);
        match mk_decompose(w, n) {
            Some((_, _)) => {
                report.mk_elements += 1;
                let k = w.degree();
                let predicted_i = (k - n as u32 + 1) as usize;
                for i in 0..=max_i {
                    let expected = u64::from(i == predicted_i);
                    let found = table.beta(i, w);
                    if found != expected {
                        report.prediction_anomalies.push(MkAnomaly {
                            multidegree: w.to_string(),
                            homological_degree: i,
                            expected,
                            found,
                        });
                    }
                }
            }
            None => {
                report.other_elements += 1;
                let entries: Vec<(usize, u64)> = (0..=max_i)
                    .filter_map(|i| {
                        let b = table.beta(i, w);
                        (b > 0).then_some((i, b))
                    })
                    .collect();
                if !entries.is_empty() {
                    report.moreover_anomalies.push(MoreoverEntry {
                        multidegree: w.to_string(),
                        entries,
                    });
                }
            }
        }
    }
    Ok(report)
}
