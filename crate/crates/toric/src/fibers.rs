//! Fibers (all monomials of a fixed multidegree), minimal binomial
//! generating sets built degree by degree, and the redundancy and
//! indispensability tests they support.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::config::{Configuration, DegreeVector};
use crate::ideal::{
    self, buchberger_elements, reduce_monomial, Binomial, GroebnerBasis, Monomial, MonomialOrder,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiberError {
    #[error("configuration has negative entries; apply normalize_rows first")]
    NotNormalized,
    #[error("binomial does not lie in the toric ideal")]
    NotInIdeal,
}

/// All monomials of one multidegree, sorted by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub degree: DegreeVector,
    pub monomials: Vec<Monomial>,
}

/// A fiber partitioned into classes modulo the ideal generated by all
/// binomials of strictly smaller total degree.
#[derive(Debug, Clone)]
pub struct FiberPartition {
    pub fiber: Fiber,
    /// Index classes into `fiber.monomials`.
    pub classes: Vec<Vec<usize>>,
}

/// All exponent vectors `u >= 0` with `A u = b` for a nonnegative
/// configuration.
pub fn enumerate_fiber(c: &Configuration, b: &DegreeVector) -> Result<Fiber, FiberError> {
    let nonneg = (0..c.dim()).all(|i| c.matrix().row(i).iter().all(|e| !e.is_negative()));
    if !nonneg {
        return Err(FiberError::NotNormalized);
    }
    Ok(Fiber { degree: b.clone(), monomials: fiber_monomials(c, b) })
}

// Depth-first enumeration over columns. Works for signed configurations too:
// the total degree of every fiber member is w.b, which bounds exponents, and
// suffix row bounds prune dead branches.
pub(crate) fn fiber_monomials(c: &Configuration, b: &DegreeVector) -> Vec<Monomial> {
    let Some(total) = c.total_degree(b) else {
        return Vec::new();
    };
    let d = c.dim();
    let n = c.ncols();
    let nonneg = (0..d).all(|i| c.matrix().row(i).iter().all(|e| !e.is_negative()));
    // suffix_pos[j][r] / suffix_neg[j][r]: largest positive / most negative
    // single-column contribution to row r among columns >= j.
    let mut suffix_pos = vec![vec![BigInt::zero(); d]; n + 1];
    let mut suffix_neg = vec![vec![BigInt::zero(); d]; n + 1];
    for j in (0..n).rev() {
        let col = c.matrix().column(j);
        for r in 0..d {
            suffix_pos[j][r] = suffix_pos[j + 1][r].clone().max(col[r].clone());
            suffix_neg[j][r] = suffix_neg[j + 1][r].clone().min(col[r].clone());
        }
    }

    let mut out: Vec<Monomial> = Vec::new();
    let mut exps = vec![0u64; n];
    let mut remaining = b.0.clone();

    fn dfs(
        c: &Configuration,
        nonneg: bool,
        suffix_pos: &[Vec<BigInt>],
        suffix_neg: &[Vec<BigInt>],
        j: usize,
        budget: u64,
        exps: &mut Vec<u64>,
        remaining: &mut Vec<BigInt>,
        out: &mut Vec<Monomial>,
    ) {
        let d = remaining.len();
        if remaining.iter().all(Zero::is_zero) && budget == 0 {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        if j == c.ncols() {
            return;
        }
        let big_budget = BigInt::from(budget);
        for r in 0..d {
            let hi = &suffix_pos[j][r] * &big_budget;
            let lo = &suffix_neg[j][r] * &big_budget;
            if remaining[r] > hi || remaining[r] < lo {
                return;
            }
        }
        let col = c.matrix().column(j);
        // Exponent bound: the budget, tightened by row quotas when no entry
        // is negative.
        let mut max_e = budget;
        if nonneg {
            for r in 0..d {
                if remaining[r].is_negative() {
                    return;
                }
                if col[r].is_positive() {
                    let q = &remaining[r] / &col[r];
                    if q < BigInt::from(max_e) {
                        max_e = u64::try_from(q.magnitude()).expect("bounded by budget");
                    }
                }
            }
        }
        for e in 0..=max_e {
            if e > 0 {
                exps[j] += 1;
                for r in 0..d {
                    remaining[r] -= &col[r];
                }
            }
            dfs(c, nonneg, suffix_pos, suffix_neg, j + 1, budget - e, exps, remaining, out);
        }
        for r in 0..d {
            remaining[r] += &col[r] * BigInt::from(max_e);
        }
        exps[j] = 0;
    }

    dfs(
        c,
        nonneg,
        &suffix_pos,
        &suffix_neg,
        0,
        total,
        &mut exps,
        &mut remaining,
        &mut out,
    );
    out.sort();
    out
}

/// Partition of the fiber of `b` modulo the ideal generated by all toric
/// binomials of strictly smaller total degree.
pub fn partition_fiber(c: &Configuration, b: &DegreeVector) -> FiberPartition {
    let order = MonomialOrder::graded_revlex(c.ncols());
    let gb = ideal::toric_groebner(c, &order);
    let total = c.total_degree(b).unwrap_or(0);
    let lower: Vec<Binomial> =
        gb.elements.iter().filter(|g| g.degree() < total).cloned().collect();
    let basis = buchberger_elements(&lower, &order, Some(total));
    partition_with(c, b, &basis)
}

fn partition_with(c: &Configuration, b: &DegreeVector, lower_basis: &[Binomial]) -> FiberPartition {
    let monomials = fiber_monomials(c, b);
    let mut class_of_nf: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, m) in monomials.iter().enumerate() {
        let nf = reduce_monomial(m, lower_basis);
        let next = classes.len();
        let id = *class_of_nf.entry(nf).or_insert(next);
        if id == classes.len() {
            classes.push(Vec::new());
        }
        classes[id].push(i);
    }
    FiberPartition { fiber: Fiber { degree: b.clone(), monomials }, classes }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ConnectorTieBreak {
    LexSmallest,
    // Exercised by the degree-multiset invariance tests.
    #[cfg_attr(not(test), allow(dead_code))]
    LexLargest,
}

/// A minimal binomial generating set of the toric ideal, built fiber by
/// fiber in increasing total degree. The multiset of generator degrees is an
/// invariant of the ideal; the connector choices are canonical (smallest
/// lexicographic monomial pair).
pub fn minimal_generators(c: &Configuration) -> Vec<Binomial> {
    let order = MonomialOrder::graded_revlex(c.ncols());
    let gb = ideal::toric_groebner(c, &order);
    minimal_generators_from_gb(c, &gb, ConnectorTieBreak::LexSmallest)
}

pub(crate) fn minimal_generators_from_gb(
    c: &Configuration,
    gb: &GroebnerBasis,
    tie: ConnectorTieBreak,
) -> Vec<Binomial> {
    if gb.is_empty() {
        return Vec::new();
    }
    let order = MonomialOrder::graded_revlex(c.ncols());
    // Candidate multidegrees: every minimal generator degree occurs among
    // the degrees of any homogeneous generating set, in particular the GB.
    let mut by_total: BTreeMap<u64, BTreeSet<DegreeVector>> = BTreeMap::new();
    for g in &gb.elements {
        by_total
            .entry(g.degree())
            .or_default()
            .insert(c.degree_of_exponents(g.plus().exponents()));
    }
    let mut chosen: Vec<Binomial> = Vec::new();
    for (total, degrees) in by_total {
        // Everything chosen so far has strictly smaller degree.
        let lower_basis = buchberger_elements(&chosen, &order, Some(total));
        for deg in degrees {
            let partition = partition_with(c, &deg, &lower_basis);
            let monomials = &partition.fiber.monomials;
            let mut class_id = vec![0usize; monomials.len()];
            for (id, class) in partition.classes.iter().enumerate() {
                for &i in class {
                    class_id[i] = id;
                }
            }
            if monomials.is_empty() {
                continue;
            }
            loop {
                let distinct: BTreeSet<usize> = class_id.iter().copied().collect();
                if distinct.len() <= 1 {
                    break;
                }
                // Connector: within the sorted fiber, the extreme pair of
                // monomials in different classes.
                let (a, bmon) = match tie {
                    ConnectorTieBreak::LexSmallest => {
                        let base = class_id[0];
                        let j = class_id
                            .iter()
                            .position(|&id| id != base)
                            .expect("more than one class");
                        (0, j)
                    }
                    ConnectorTieBreak::LexLargest => {
                        let last = monomials.len() - 1;
                        let base = class_id[last];
                        let j = (0..monomials.len())
                            .rev()
                            .find(|&i| class_id[i] != base)
                            .expect("more than one class");
                        (last, j)
                    }
                };
                let merged = class_id[bmon];
                let keep = class_id[a];
                for id in class_id.iter_mut() {
                    if *id == merged {
                        *id = keep;
                    }
                }
                chosen.push(
                    Binomial::new(monomials[a].clone(), monomials[bmon].clone())
                        .expect("fiber monomials are distinct"),
                );
            }
        }
    }
    chosen.sort();
    chosen
}

/// Whether `b` belongs to no minimal binomial generating set: its two
/// monomials already lie in one class modulo strictly smaller degrees.
pub fn is_redundant(b: &Binomial, c: &Configuration) -> Result<bool, FiberError> {
    if !ideal::in_toric_ideal(b, c) {
        return Err(FiberError::NotInIdeal);
    }
    let order = MonomialOrder::graded_revlex(c.ncols());
    let gb = ideal::toric_groebner(c, &order);
    Ok(is_redundant_given(b, &gb))
}

pub(crate) fn lower_degree_basis(gb: &GroebnerBasis, total: u64) -> Vec<Binomial> {
    let lower: Vec<Binomial> =
        gb.elements.iter().filter(|g| g.degree() < total).cloned().collect();
    buchberger_elements(&lower, &gb.order, Some(total))
}

pub(crate) fn is_redundant_given(b: &Binomial, gb: &GroebnerBasis) -> bool {
    let basis = lower_degree_basis(gb, b.degree());
    is_redundant_with_basis(b, &basis)
}

pub(crate) fn is_redundant_with_basis(b: &Binomial, lower_basis: &[Binomial]) -> bool {
    reduce_monomial(b.plus(), lower_basis) == reduce_monomial(b.minus(), lower_basis)
}

/// Whether `b` (up to sign) belongs to every binomial generating set: its
/// fiber is exactly `{plus, minus}` and the two are inequivalent modulo
/// strictly smaller degrees.
pub fn is_indispensable(b: &Binomial, c: &Configuration) -> Result<bool, FiberError> {
    if !ideal::in_toric_ideal(b, c) {
        return Err(FiberError::NotInIdeal);
    }
    let order = MonomialOrder::graded_revlex(c.ncols());
    let gb = ideal::toric_groebner(c, &order);
    Ok(is_indispensable_given(b, c, &gb))
}

pub(crate) fn is_indispensable_given(b: &Binomial, c: &Configuration, gb: &GroebnerBasis) -> bool {
    let basis = lower_degree_basis(gb, b.degree());
    is_indispensable_with_basis(b, c, &basis)
}

pub(crate) fn is_indispensable_with_basis(
    b: &Binomial,
    c: &Configuration,
    lower_basis: &[Binomial],
) -> bool {
    let deg = c.degree_of_exponents(b.plus().exponents());
    let fiber = fiber_monomials(c, &deg);
    if fiber.len() != 2 {
        return false;
    }
    let has_both = fiber.contains(b.plus()) && fiber.contains(b.minus());
    has_both && !is_redundant_with_basis(b, lower_basis)
}
