//! Binomial ideals: Buchberger, normal forms, lattice-ideal saturation and
//! toric Gröbner bases.
//!
//! Binomials are closed under S-pairs and reduction, so the whole engine
//! works on differences of monomials with coefficients +-1. Reduction is
//! monomial rewriting: the normal form of a binomial is the difference of
//! the normal forms of its two monomials.

mod monomial;
mod order;

pub use monomial::{parse_binomial, parse_monomial, Binomial, Monomial, ParseError};
pub use order::{MonomialOrder, OrderKind};

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::Configuration;
use crate::lattice;

/// A Gröbner basis: elements oriented so `plus` is the leading monomial
/// under `order`, sorted by (degree, exponents).
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub elements: Vec<Binomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn orient(a: Monomial, b: Monomial, order: &MonomialOrder) -> Binomial {
    match order.cmp(&a, &b) {
        std::cmp::Ordering::Greater => Binomial::oriented(a, b),
        std::cmp::Ordering::Less => Binomial::oriented(b, a),
        std::cmp::Ordering::Equal => unreachable!("orienting the zero binomial"),
    }
}

// Rewrites `m` with the rules plus -> minus until no leading monomial
// divides it. Terminates because each step strictly decreases `m`.
pub(crate) fn reduce_monomial(m: &Monomial, elements: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for g in elements {
            if g.plus().divides(&cur) {
                cur = cur.div(g.plus()).mul(g.minus());
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Remainder of `b` modulo `basis`; `None` means zero, i.e. membership.
pub fn normal_form(b: &Binomial, basis: &GroebnerBasis) -> Option<Binomial> {
    debug_assert_eq!(b.nvars(), basis.order.nvars());
    let p = reduce_monomial(b.plus(), &basis.elements);
    let m = reduce_monomial(b.minus(), &basis.elements);
    if p == m {
        None
    } else {
        Some(orient(p, m, &basis.order))
    }
}

/// Reduced Gröbner basis of the binomial ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        elements: buchberger_elements(gens, order, None),
        order: order.clone(),
        reduced: true,
    }
}

// Core engine: Buchberger with the Gebauer-Möller pair update and
// redundancy marking. With `max_degree` set and homogeneous input this
// produces a degree-truncated basis, sufficient to decide membership up to
// that degree; S-pair degrees never decrease for homogeneous input, so
// pruning is sound.
pub(crate) fn buchberger_elements(
    gens: &[Binomial],
    order: &MonomialOrder,
    max_degree: Option<u64>,
) -> Vec<Binomial> {
    let mut seed: Vec<Binomial> = gens
        .iter()
        .map(|g| orient(g.plus().clone(), g.minus().clone(), order))
        .collect();
    seed.sort();
    seed.dedup();

    let mut engine = Engine {
        basis: Vec::new(),
        redundant: Vec::new(),
        pairs: BinaryHeap::new(),
        cancelled: std::collections::HashSet::new(),
        max_degree,
    };
    for g in seed {
        engine.add(g);
    }
    while let Some(Reverse((_deg, i, j))) = engine.pairs.pop() {
        if engine.cancelled.contains(&(i, j)) {
            continue;
        }
        let (gi, gj) = (&engine.basis[i], &engine.basis[j]);
        let lcm = gi.plus().lcm(gj.plus());
        let s = lcm.div(gi.plus()).mul(gi.minus());
        let t = lcm.div(gj.plus()).mul(gj.minus());
        if s == t {
            continue;
        }
        let rs = reduce_monomial(&s, &engine.basis);
        let rt = reduce_monomial(&t, &engine.basis);
        if rs == rt {
            continue;
        }
        engine.add(orient(rs, rt, order));
    }
    reduce_basis(engine.basis, order)
}

struct Engine {
    basis: Vec<Binomial>,
    redundant: Vec<bool>,
    pairs: BinaryHeap<Reverse<(u64, usize, usize)>>,
    cancelled: std::collections::HashSet<(usize, usize)>,
    max_degree: Option<u64>,
}

impl Engine {
    // Gebauer-Möller update: installs a new basis element, prunes the new
    // pair set with the M, F and coprime criteria, cancels old pairs by the
    // chain criterion, and marks superseded elements redundant.
    fn add(&mut self, h: Binomial) {
        let t = self.basis.len();
        let lt_h = h.plus().clone();
        let candidates: Vec<(usize, Monomial)> = (0..t)
            .filter(|&i| !self.redundant[i])
            .map(|i| (i, self.basis[i].plus().lcm(&lt_h)))
            .collect();

        // M criterion: drop (i, t) when another candidate's lcm properly
        // divides its lcm.
        let mut keep: Vec<bool> = vec![true; candidates.len()];
        for (a, (_, lcm_a)) in candidates.iter().enumerate() {
            if !keep[a] {
                continue;
            }
            for (b, (_, lcm_b)) in candidates.iter().enumerate() {
                if a == b || !keep[b] {
                    continue;
                }
                if lcm_b.divides(lcm_a) && lcm_b != lcm_a {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F criterion: one representative per lcm value.
        let mut seen: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::new();
        for (a, (_, lcm_a)) in candidates.iter().enumerate() {
            if keep[a] && !seen.insert(lcm_a.exponents().to_vec()) {
                keep[a] = false;
            }
        }
        // Chain criterion on surviving old pairs.
        let old: Vec<(u64, usize, usize)> = self
            .pairs
            .iter()
            .map(|Reverse(p)| *p)
            .filter(|&(_, i, j)| !self.cancelled.contains(&(i, j)))
            .collect();
        for (_, i, j) in old {
            let lcm_ij = self.basis[i].plus().lcm(self.basis[j].plus());
            if lt_h.divides(&lcm_ij)
                && self.basis[i].plus().lcm(&lt_h) != lcm_ij
                && self.basis[j].plus().lcm(&lt_h) != lcm_ij
            {
                self.cancelled.insert((i, j));
            }
        }
        // Coprime criterion last, after its pairs helped with M and F.
        for (a, (i, lcm_a)) in candidates.iter().enumerate() {
            if !keep[a] || self.basis[*i].plus().gcd(&lt_h).is_one() {
                continue;
            }
            let deg = lcm_a.total_degree();
            if self.max_degree.is_some_and(|d| deg > d) {
                continue;
            }
            self.pairs.push(Reverse((deg, *i, t)));
        }
        for i in 0..t {
            if !self.redundant[i] && lt_h.divides(self.basis[i].plus()) {
                self.redundant[i] = true;
            }
        }
        self.basis.push(h);
        self.redundant.push(false);
    }
}

// Minimalizes leading terms, then fully reduces every tail.
fn reduce_basis(mut basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    basis.sort_by(|a, b| order.cmp(a.plus(), b.plus()));
    let mut kept: Vec<Binomial> = Vec::new();
    'outer: for g in basis {
        for h in &kept {
            if h.plus().divides(g.plus()) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    let snapshot = kept.clone();
    for g in kept.iter_mut() {
        let tail = reduce_monomial(g.minus(), &snapshot);
        *g = orient(g.plus().clone(), tail, order);
    }
    kept.sort();
    kept
}

/// Generators of the colon ideal `(<gens> : x_var^infinity)`.
///
/// Computed as the reduced Gröbner basis under a graded revlex order with
/// `x_var` cheapest, followed by dividing each element by the largest common
/// `x_var` power of its two monomials.
pub fn saturate_variable(gens: &[Binomial], var: usize) -> Vec<Binomial> {
    saturate_variable_impl(gens, var).0
}

fn saturate_variable_impl(gens: &[Binomial], var: usize) -> (Vec<Binomial>, bool) {
    if gens.is_empty() {
        return (Vec::new(), false);
    }
    let n = gens[0].nvars();
    let order = MonomialOrder::revlex_cheapest(n, var);
    let gb = buchberger_elements(gens, &order, None);
    let mut divided = false;
    let out = gb
        .into_iter()
        .map(|g| {
            let (h, k) = g.divide_common_power(var);
            divided |= k > 0;
            h
        })
        .collect();
    (out, divided)
}

/// Reduced Gröbner basis of the full toric ideal of a configuration.
///
/// Starts from binomials of a kernel lattice basis and saturates variable by
/// variable, in ascending index, repeating the pass until a fixpoint (no
/// division happens anywhere in a pass).
pub fn toric_groebner(c: &Configuration, order: &MonomialOrder) -> GroebnerBasis {
    assert_eq!(order.nvars(), c.ncols(), "order arity must match the configuration");
    let kernel = lattice::kernel_lattice_basis(c.matrix());
    let mut gens: Vec<Binomial> = kernel.iter().filter_map(|v| Binomial::from_vector(v)).collect();
    if !gens.is_empty() {
        loop {
            let mut changed = false;
            for var in 0..c.ncols() {
                let (next, divided) = saturate_variable_impl(&gens, var);
                gens = next;
                changed |= divided;
            }
            if !changed {
                break;
            }
        }
    }
    buchberger(&gens, order)
}

/// True iff every generator in `small_gens` lies in the ideal of `big`.
pub fn ideal_contains(big: &GroebnerBasis, small_gens: &[Binomial]) -> bool {
    small_gens.iter().all(|b| normal_form(b, big).is_none())
}

/// Minimal monomial generators of the initial ideal: the leading terms of a
/// reduced basis, sorted by (degree, exponents).
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    debug_assert!(gb.reduced);
    let mut lts: Vec<Monomial> = gb.elements.iter().map(|g| g.plus().clone()).collect();
    lts.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    lts
}

/// All quadratic binomials of the toric ideal, found by grouping unordered
/// column pairs (with repetition) by their column sum.
pub fn quadratic_binomials(c: &Configuration) -> Vec<Binomial> {
    let n = c.ncols();
    let mut groups: BTreeMap<Vec<BigInt>, Vec<Monomial>> = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let mut exps = vec![0u64; n];
            exps[i] += 1;
            exps[j] += 1;
            let mut key = c.matrix().column(i);
            for (k, e) in c.matrix().column(j).into_iter().enumerate() {
                key[k] += e;
            }
            groups.entry(key).or_default().push(Monomial::new(exps));
        }
    }
    let mut out = Vec::new();
    for monomials in groups.into_values() {
        for a in 0..monomials.len() {
            for b in a + 1..monomials.len() {
                out.push(
                    Binomial::new(monomials[a].clone(), monomials[b].clone())
                        .expect("distinct multisets give distinct monomials"),
                );
            }
        }
    }
    out.sort();
    out
}

/// The members of `items` that do not lie in the ideal generated by `gens`.
///
/// Everything here is homogeneous, so a degree-truncated basis of `gens`
/// decides membership exactly.
pub fn outside_ideal(items: &[Binomial], gens: &[Binomial]) -> Vec<Binomial> {
    if items.is_empty() {
        return Vec::new();
    }
    if gens.is_empty() {
        return items.to_vec();
    }
    let n = items[0].nvars();
    let bound = items.iter().map(Binomial::degree).max().unwrap_or(0);
    let order = MonomialOrder::graded_revlex(n);
    let basis = buchberger_elements(gens, &order, Some(bound));
    items
        .iter()
        .filter(|b| {
            reduce_monomial(b.plus(), &basis) != reduce_monomial(b.minus(), &basis)
        })
        .cloned()
        .collect()
}

/// Equality of two homogeneous binomial ideals by mutual reduction.
pub fn ideals_equal(gens_a: &[Binomial], gens_b: &[Binomial]) -> bool {
    outside_ideal(gens_b, gens_a).is_empty() && outside_ideal(gens_a, gens_b).is_empty()
}

/// Binomial of an integer kernel vector: convenience re-export site.
pub fn binomial_from_vector(u: &[BigInt]) -> Option<Binomial> {
    Binomial::from_vector(u)
}

/// Checks that a binomial's exponent vector lies in the kernel of the
/// configuration, i.e. that the binomial belongs to the toric ideal.
pub fn in_toric_ideal(b: &Binomial, c: &Configuration) -> bool {
    let u = b.exponent_vector();
    c.matrix().mul_vector(&u).iter().all(Zero::is_zero)
}
