//! Monomials and pure-difference binomials with the `x3*x4 - x5^2*x7` text
//! grammar.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

/// Power product, stored as one exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.exps[var]
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Difference of two distinct monomials, `plus - minus`, oriented so that
/// `plus` is the larger side under the order in play (graded lex when none
/// is).
///
/// Binomials built from kernel vectors have disjoint supports; intermediate
/// elements of a saturation run may not, which `is_pure` reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Builds `a - b` oriented under the default graded lex order.
    /// Returns `None` when `a == b` (the zero polynomial).
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        match graded_lex_cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            Ordering::Less => Some(Binomial { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    /// Builds `a - b` with an explicit orientation decision from the caller.
    pub(crate) fn oriented(plus: Monomial, minus: Monomial) -> Binomial {
        debug_assert_ne!(plus, minus);
        Binomial { plus, minus }
    }

    /// Binomial `X^{u+} - X^{u-}` of an integer vector; `None` for `u = 0`.
    pub fn from_vector(u: &[BigInt]) -> Option<Binomial> {
        let mut plus = vec![0u64; u.len()];
        let mut minus = vec![0u64; u.len()];
        for (i, e) in u.iter().enumerate() {
            let mag = u64::try_from(e.magnitude()).expect("exponent exceeds u64");
            if e.is_positive() {
                plus[i] = mag;
            } else {
                minus[i] = mag;
            }
        }
        Binomial::new(Monomial::new(plus), Monomial::new(minus))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    /// Total degree; the two sides agree for homogeneous ideals, so the
    /// larger one is used for sorting.
    pub fn degree(&self) -> u64 {
        self.plus.total_degree().max(self.minus.total_degree())
    }

    /// `plus - minus` as an integer vector.
    pub fn exponent_vector(&self) -> Vec<BigInt> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(&p, &m)| BigInt::from(p) - BigInt::from(m))
            .collect()
    }

    /// Whether the two sides have disjoint supports.
    pub fn is_pure(&self) -> bool {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .all(|(&p, &m)| p == 0 || m == 0)
    }

    /// Union of the two supports, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .enumerate()
            .filter(|(_, (&p, &m))| p > 0 || m > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// The same binomial with both sides swapped.
    pub fn negated(&self) -> Binomial {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Up-to-sign copy oriented under the default graded lex order, the
    /// serialization orientation.
    pub fn canonicalized(&self) -> Binomial {
        Binomial::new(self.plus.clone(), self.minus.clone()).expect("sides differ")
    }

    /// Divides both sides by their largest common power of one variable.
    pub(crate) fn divide_common_power(&self, var: usize) -> (Binomial, u64) {
        let k = self.plus.exponent(var).min(self.minus.exponent(var));
        if k == 0 {
            return (self.clone(), 0);
        }
        let mut p = self.plus.exponents().to_vec();
        let mut m = self.minus.exponents().to_vec();
        p[var] -= k;
        m[var] -= k;
        (Binomial { plus: Monomial::new(p), minus: Monomial::new(m) }, k)
    }
}

/// Graded lex with the natural variable order; the module's default
/// orientation when no monomial order is in play.
pub(crate) fn graded_lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.exponents().cmp(b.exponents()))
}

impl PartialOrd for Binomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialization order: (degree, plus exponents lex, minus exponents lex).
impl Ord for Binomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.plus.exponents().cmp(other.plus.exponents()))
            .then_with(|| self.minus.exponents().cmp(other.minus.exponents()))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty term in binomial")]
    EmptyTerm,
    #[error("expected exactly one '-' between two terms")]
    BadShape,
    #[error("bad factor `{0}`")]
    BadFactor(String),
    #[error("variable index {0} out of range 1..={1}")]
    VarOutOfRange(usize, usize),
    #[error("the two sides of a binomial must differ")]
    ZeroBinomial,
}

/// Parses `x3*x4*x6*x9 - x5^2*x7*x8`. Whitespace insensitive.
pub fn parse_binomial(text: &str, nvars: usize) -> Result<Binomial, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parts = compact.split('-');
    let (Some(lhs), Some(rhs), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(ParseError::BadShape);
    };
    let plus = parse_monomial(lhs, nvars)?;
    let minus = parse_monomial(rhs, nvars)?;
    if plus == minus {
        return Err(ParseError::ZeroBinomial);
    }
    Ok(Binomial::oriented(plus, minus))
}

/// Parses a single power product, e.g. `x5^2*x7`.
pub fn parse_monomial(text: &str, nvars: usize) -> Result<Monomial, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError::EmptyTerm);
    }
    let mut exps = vec![0u64; nvars];
    if compact == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in compact.split('*') {
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| ParseError::BadFactor(factor.to_string()))?;
        let (var_txt, exp_txt) = match rest.split_once('^') {
            Some((v, e)) => (v, Some(e)),
            None => (rest, None),
        };
        let var: usize = var_txt
            .parse()
            .map_err(|_| ParseError::BadFactor(factor.to_string()))?;
        if var == 0 || var > nvars {
            return Err(ParseError::VarOutOfRange(var, nvars));
        }
        let exp: u64 = match exp_txt {
            Some(e) => e.parse().map_err(|_| ParseError::BadFactor(factor.to_string()))?,
            None => 1,
        };
        if exp == 0 {
            return Err(ParseError::BadFactor(factor.to_string()));
        }
        exps[var - 1] += exp;
    }
    Ok(Monomial::new(exps))
}
