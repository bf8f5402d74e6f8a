//! Circuits of a configuration: support-minimal binomials of the toric
//! ideal, their squarefreeness classes, and fundamentality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::config::Configuration;
use crate::ideal::{self, Binomial, MonomialOrder};
use crate::lattice::{self, EchelonScalar, InsertOutcome, Overflow, SpanTracker};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("binomial does not lie in the toric ideal")]
    NotInIdeal,
}

/// A circuit together with its support (ascending 0-based column indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub binomial: Binomial,
    pub support: Vec<usize>,
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.binomial)
    }
}

/// Which of the circuit's monomials are squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquarefreeClass {
    Neither,
    OneSide,
    BothSides,
}

impl fmt::Display for SquarefreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SquarefreeClass::Neither => "neither",
            SquarefreeClass::OneSide => "one_side",
            SquarefreeClass::BothSides => "both_sides",
        };
        write!(f, "{s}")
    }
}

impl SquarefreeClass {
    /// Member of `C^sf`: at least one squarefree monomial.
    pub fn has_squarefree_side(self) -> bool {
        !matches!(self, SquarefreeClass::Neither)
    }
}

pub fn squarefree_class(b: &Binomial) -> SquarefreeClass {
    match (b.plus().is_squarefree(), b.minus().is_squarefree()) {
        (true, true) => SquarefreeClass::BothSides,
        (false, false) => SquarefreeClass::Neither,
        _ => SquarefreeClass::OneSide,
    }
}

/// Complete circuit enumeration, sorted by (degree, support).
///
/// Depth-first search over independent column subsets in ascending column
/// order: a subset becomes dependent exactly when the last column of a
/// circuit support is added, so each circuit is found once, at its own size,
/// with no deduplication step.
pub fn enumerate_circuits(c: &Configuration) -> Vec<Circuit> {
    let mut out = match columns_as::<i128>(c) {
        Some(cols) => match enumerate_with::<i128>(c, &cols) {
            Ok(list) => list,
            Err(Overflow) => enumerate_bigint(c),
        },
        None => enumerate_bigint(c),
    };
    out.sort_by(|a, b| {
        a.binomial
            .degree()
            .cmp(&b.binomial.degree())
            .then_with(|| a.support.cmp(&b.support))
    });
    out
}

fn enumerate_bigint(c: &Configuration) -> Vec<Circuit> {
    let cols = columns_as::<BigInt>(c).expect("BigInt conversion is total");
    enumerate_with::<BigInt>(c, &cols).expect("BigInt echelon cannot overflow")
}

fn columns_as<T: EchelonScalar>(c: &Configuration) -> Option<Vec<Vec<T>>> {
    (0..c.ncols())
        .map(|j| c.matrix().column(j).iter().map(T::from_bigint).collect())
        .collect()
}

fn enumerate_with<T: EchelonScalar>(
    c: &Configuration,
    cols: &[Vec<T>],
) -> Result<Vec<Circuit>, Overflow> {
    let n = c.ncols();
    let mut tracker = SpanTracker::<T>::new(c.dim());
    let mut chosen: Vec<usize> = Vec::new();
    let mut out: Vec<Circuit> = Vec::new();

    fn dfs<T: EchelonScalar>(
        cols: &[Vec<T>],
        n: usize,
        start: usize,
        tracker: &mut SpanTracker<T>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Circuit>,
    ) -> Result<(), Overflow> {
        for j in start..n {
            match tracker.try_insert(&cols[j])? {
                InsertOutcome::Independent => {
                    tracker.commit(&cols[j])?;
                    chosen.push(j);
                    dfs(cols, n, j + 1, tracker, chosen, out)?;
                    chosen.pop();
                    tracker.truncate(chosen.len());
                }
                InsertOutcome::Dependent(comb) => {
                    // Circuit iff the dependency involves every chosen column.
                    if comb.iter().all(|e| !e.is_zero()) {
                        let mut support = chosen.clone();
                        support.push(j);
                        let mut u = vec![BigInt::zero(); n];
                        for (slot, &col) in support.iter().enumerate() {
                            u[col] = comb[slot].clone();
                        }
                        let binomial =
                            Binomial::from_vector(&u).expect("dependency vector is nonzero");
                        out.push(Circuit { binomial, support });
                    }
                }
            }
        }
        Ok(())
    }

    dfs(cols, n, 0, &mut tracker, &mut chosen, &mut out)?;
    Ok(out)
}

/// Whether `b` is a circuit: its support carries a one-dimensional kernel
/// and its exponent vector is primitive.
pub fn is_circuit(b: &Binomial, c: &Configuration) -> Result<bool, CircuitError> {
    if !ideal::in_toric_ideal(b, c) {
        return Err(CircuitError::NotInIdeal);
    }
    let support = b.support();
    let restricted = c.restrict(&support);
    let nullity = restricted.ncols() - lattice::rank(restricted.matrix());
    if nullity != 1 {
        return Ok(false);
    }
    let u = b.exponent_vector();
    let mut g = BigInt::zero();
    for e in &u {
        g = g.gcd(e);
    }
    Ok(g == BigInt::from(1))
}

/// Whether `b` generates the toric ideal of its variable-support
/// subconfiguration: rows `T_f` are those with positive entry in `A . plus`,
/// and the subconfiguration keeps the columns supported inside those rows.
pub fn is_fundamental(b: &Binomial, c: &Configuration) -> Result<bool, CircuitError> {
    if !ideal::in_toric_ideal(b, c) {
        return Err(CircuitError::NotInIdeal);
    }
    let degree = c.degree_of_exponents(b.plus().exponents());
    let t_rows: Vec<usize> = degree
        .0
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_positive())
        .map(|(i, _)| i)
        .collect();
    let cols: Vec<usize> = (0..c.ncols())
        .filter(|&j| {
            let col = c.matrix().column(j);
            col.iter()
                .enumerate()
                .all(|(i, e)| e.is_zero() || t_rows.contains(&i))
        })
        .collect();
    // Re-index b into the subconfiguration's variables.
    let mut slot_of = vec![usize::MAX; c.ncols()];
    for (slot, &j) in cols.iter().enumerate() {
        slot_of[j] = slot;
    }
    let u = b.exponent_vector();
    let mut sub_u = vec![BigInt::zero(); cols.len()];
    for (j, e) in u.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if slot_of[j] == usize::MAX {
            return Ok(false);
        }
        sub_u[slot_of[j]] = e.clone();
    }
    let sub = c.restrict(&cols);
    let sub_b = Binomial::from_vector(&sub_u).expect("binomial is nonzero");
    let order = MonomialOrder::graded_revlex(sub.ncols());
    let gb = ideal::toric_groebner(&sub, &order);
    Ok(ideal::ideals_equal(&gb.elements, std::slice::from_ref(&sub_b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{squarefree_veronese, veronese};
    use crate::ideal::parse_binomial;
    use crate::lattice::IntMatrix;

    fn b(text: &str, n: usize) -> Binomial {
        parse_binomial(text, n).unwrap()
    }

    fn four_cycle_config() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ]))
        .unwrap()
    }

    fn triangle_config() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
        ]))
        .unwrap()
    }

    fn k4_config() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![1, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1],
        ]))
        .unwrap()
    }

    fn example1_config() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 0, 0, 1, 0, 0, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0, 1],
        ]))
        .unwrap()
    }

    // Brute-force oracle: all column subsets of size <= rank+1 with a
    // one-dimensional kernel whose Cramer vector has full support.
    fn circuits_by_subsets(c: &Configuration) -> Vec<Circuit> {
        let n = c.ncols();
        let r = lattice::rank(c.matrix());
        let mut found: Vec<Circuit> = Vec::new();
        for mask in 1u64..(1 << n) {
            let support: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            if support.len() > r + 1 {
                continue;
            }
            let sub = c.matrix().select_columns(&support);
            let Ok(v) = lattice::nullity_one_kernel_vector(&sub) else {
                continue;
            };
            if v.iter().any(Zero::is_zero) {
                continue;
            }
            let mut u = vec![BigInt::zero(); n];
            for (slot, &col) in support.iter().enumerate() {
                u[col] = v[slot].clone();
            }
            found.push(Circuit {
                binomial: Binomial::from_vector(&u).unwrap(),
                support,
            });
        }
        found.sort_by(|a, b| {
            a.binomial
                .degree()
                .cmp(&b.binomial.degree())
                .then_with(|| a.support.cmp(&b.support))
        });
        found
    }

    #[test]
    fn v23_circuits_are_the_four_from_cramer() {
        let got: Vec<String> = enumerate_circuits(&veronese(2, 3))
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            got,
            vec!["x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"]
        );
    }

    #[test]
    fn k4_has_three_circuits() {
        let circuits = enumerate_circuits(&k4_config());
        assert_eq!(circuits.len(), 3);
        for c in &circuits {
            assert_eq!(c.binomial.degree(), 2);
            assert_eq!(squarefree_class(&c.binomial), SquarefreeClass::BothSides);
        }
    }

    #[test]
    fn triangle_has_no_circuits() {
        assert!(enumerate_circuits(&triangle_config()).is_empty());
    }

    #[test]
    fn enumeration_matches_subset_oracle() {
        for c in [
            veronese(2, 3),
            veronese(2, 4),
            four_cycle_config(),
            k4_config(),
            squarefree_veronese(4, 2),
            example1_config(),
            crate::config::root_config(crate::config::RootFamily::B, 2),
        ] {
            assert_eq!(enumerate_circuits(&c), circuits_by_subsets(&c));
        }
    }

    #[test]
    fn is_circuit_examples() {
        let v23 = veronese(2, 3);
        assert_eq!(is_circuit(&b("x1*x4 - x2*x3", 4), &v23), Ok(false));
        assert_eq!(is_circuit(&b("x2^2 - x1*x3", 4), &v23), Ok(true));
        let c4 = four_cycle_config();
        assert_eq!(is_circuit(&b("x1*x3 - x2*x4", 4), &c4), Ok(true));
        assert_eq!(
            is_circuit(&b("x1*x2 - x3*x4", 4), &c4),
            Err(CircuitError::NotInIdeal)
        );
    }

    #[test]
    fn squarefree_class_examples() {
        assert_eq!(
            squarefree_class(&b("x3*x4*x6*x9 - x5^2*x7*x8", 9)),
            SquarefreeClass::OneSide
        );
        assert_eq!(squarefree_class(&b("x1*x3 - x2*x4", 4)), SquarefreeClass::BothSides);
        assert_eq!(squarefree_class(&b("x1^2*x4 - x2^3", 4)), SquarefreeClass::Neither);
    }

    #[test]
    fn fundamental_examples() {
        let c4 = four_cycle_config();
        assert_eq!(is_fundamental(&b("x1*x3 - x2*x4", 4), &c4), Ok(true));

        let e1 = example1_config();
        assert_eq!(is_fundamental(&b("x1*x3 - x2*x4", 9), &e1), Ok(true));

        let v23 = veronese(2, 3);
        assert_eq!(is_fundamental(&b("x1*x4 - x2*x3", 4), &v23), Ok(false));
        assert_eq!(
            is_fundamental(&b("x1*x2 - x3*x4", 4), &v23),
            Err(CircuitError::NotInIdeal)
        );
    }

    #[test]
    fn fundamental_implies_circuit_on_v23_quadratics() {
        let v23 = veronese(2, 3);
        for q in ideal::quadratic_binomials(&v23) {
            if is_fundamental(&q, &v23).unwrap() {
                assert_eq!(is_circuit(&q, &v23), Ok(true));
            }
        }
    }
}
