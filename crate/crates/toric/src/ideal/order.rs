//! Monomial orders: total orders on power products compatible with
//! multiplication.

use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
    /// Eliminates the first `block` variables of the permutation: compares
    /// degree in that block, then graded revlex inside it, then graded
    /// revlex on the remainder.
    EliminationBlock { block: usize },
    /// Weight vector first, graded revlex tiebreak.
    WeightThenTieBreak,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `permutation[0]` is the largest variable (0-based indices).
    permutation: Vec<usize>,
    weights: Option<Vec<i64>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, permutation: Vec<usize>, weights: Option<Vec<i64>>) -> Self {
        let n = permutation.len();
        let mut seen = vec![false; n];
        for &p in &permutation {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        if let OrderKind::EliminationBlock { block } = kind {
            assert!(block <= n, "elimination block larger than variable count");
        }
        if matches!(kind, OrderKind::WeightThenTieBreak) {
            let w = weights.as_ref().expect("weight order needs weights");
            assert_eq!(w.len(), n, "weight vector length mismatch");
        }
        MonomialOrder { kind, permutation, weights }
    }

    /// The default order: graded revlex with the natural variable order.
    pub fn graded_revlex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedRevLex, (0..nvars).collect(), None)
    }

    pub fn graded_lex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedLex, (0..nvars).collect(), None)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).collect(), None)
    }

    pub fn lex_with_permutation(permutation: Vec<usize>) -> Self {
        Self::new(OrderKind::Lex, permutation, None)
    }

    /// Graded revlex in which `var` is the cheapest variable; the order used
    /// to saturate an ideal by `x_var`.
    pub fn revlex_cheapest(nvars: usize, var: usize) -> Self {
        let mut perm: Vec<usize> = (0..nvars).filter(|&v| v != var).collect();
        perm.push(var);
        Self::new(OrderKind::GradedRevLex, perm, None)
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ae = a.exponents();
        let be = b.exponents();
        debug_assert_eq!(ae.len(), self.permutation.len());
        match self.kind {
            OrderKind::Lex => self.lex_scan(ae, be, &self.permutation),
            OrderKind::GradedLex => total(ae)
                .cmp(&total(be))
                .then_with(|| self.lex_scan(ae, be, &self.permutation)),
            OrderKind::GradedRevLex => total(ae)
                .cmp(&total(be))
                .then_with(|| revlex_scan(ae, be, &self.permutation)),
            OrderKind::EliminationBlock { block } => {
                let (head, tail) = self.permutation.split_at(block);
                block_degree(ae, head)
                    .cmp(&block_degree(be, head))
                    .then_with(|| revlex_scan(ae, be, head))
                    .then_with(|| block_degree(ae, tail).cmp(&block_degree(be, tail)))
                    .then_with(|| revlex_scan(ae, be, tail))
            }
            OrderKind::WeightThenTieBreak => {
                let w = self.weights.as_ref().expect("validated at construction");
                weight(ae, w)
                    .cmp(&weight(be, w))
                    .then_with(|| total(ae).cmp(&total(be)))
                    .then_with(|| revlex_scan(ae, be, &self.permutation))
            }
        }
    }

    fn lex_scan(&self, a: &[u64], b: &[u64], perm: &[usize]) -> Ordering {
        for &p in perm {
            match a[p].cmp(&b[p]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

fn total(e: &[u64]) -> u64 {
    e.iter().sum()
}

fn block_degree(e: &[u64], vars: &[usize]) -> u64 {
    vars.iter().map(|&v| e[v]).sum()
}

fn weight(e: &[u64], w: &[i64]) -> i128 {
    e.iter().zip(w).map(|(&x, &c)| x as i128 * c as i128).sum()
}

// Reverse lexicographic scan: the monomial with the smaller exponent at the
// last differing position (in permutation order) is the larger one.
fn revlex_scan(a: &[u64], b: &[u64], perm: &[usize]) -> Ordering {
    for &p in perm.iter().rev() {
        match a[p].cmp(&b[p]) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u64]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_and_grevlex_disagree_on_veronese_quadric() {
        // x1*x3 vs x2^2 over three variables.
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::lex(3).cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::graded_revlex(3).cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn grevlex_same_degree_chain() {
        let ord = MonomialOrder::graded_revlex(2);
        // x^2 > x*y > y^2.
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn graded_orders_compare_degree_first(){
        let ord = MonomialOrder::graded_lex(2);
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::lex(2).cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Less);
    }

    #[test]
    fn cheapest_variable_sinks_in_revlex() {
        // With x1 cheapest, x1^2 < x2*x3 even though both have degree 2.
        let ord = MonomialOrder::revlex_cheapest(3, 0);
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Less);
    }

    #[test]
    fn permuted_lex_follows_permutation() {
        // Order x2 > x5 > x1 > x6 > x3 > x4 on six variables.
        let ord = MonomialOrder::lex_with_permutation(vec![1, 4, 0, 5, 2, 3]);
        assert_eq!(ord.cmp(&m(&[0, 1, 0, 0, 1, 0]), &m(&[1, 0, 0, 0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 0, 0, 0, 1]), &m(&[0, 0, 1, 1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_eliminates_first() {
        // Eliminate x1: any monomial containing x1 beats any without it.
        let ord = MonomialOrder::new(OrderKind::EliminationBlock { block: 1 }, vec![0, 1, 2], None);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn weight_order_uses_weights_then_tiebreak() {
        let ord = MonomialOrder::new(
            OrderKind::WeightThenTieBreak,
            vec![0, 1],
            Some(vec![3, 1]),
        );
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        let tie_a = m(&[1, 3]);
        let tie_b = m(&[2, 0]);
        // Weights tie at 6; total degree breaks it.
        assert_eq!(ord.cmp(&tie_a, &tie_b), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [
            MonomialOrder::lex(3),
            MonomialOrder::graded_lex(3),
            MonomialOrder::graded_revlex(3),
            MonomialOrder::revlex_cheapest(3, 1),
        ];
        let mons = [
            m(&[0, 0, 0]), m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1]),
            m(&[2, 0, 1]), m(&[1, 1, 1]), m(&[0, 3, 0]),
        ];
        for ord in &orders {
            for a in &mons {
                for b in &mons {
                    let base = ord.cmp(a, b);
                    for c in &mons {
                        assert_eq!(ord.cmp(&a.mul(c), &b.mul(c)), base);
                    }
                }
            }
        }
    }
}
