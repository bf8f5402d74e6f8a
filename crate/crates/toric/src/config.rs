//! Validated integer configurations and the builders used throughout:
//! Veronese, squarefree Veronese, and root-system families.
//!
//! A configuration is an integer matrix with pairwise-distinct columns that
//! all lie on a rational hyperplane off the origin; the functional cutting
//! out that hyperplane is stored exactly.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{self, IntMatrix, IntVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("columns {0} and {1} are equal")]
    DuplicateColumns(usize, usize),
    #[error("no rational functional maps every column to 1")]
    NotHomogeneous,
    #[error("the all-ones row is not an integer combination of the matrix rows")]
    NoIntegerHomogenizingRow,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Element of the grading monoid: the multidegree `A u` of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector(pub Vec<BigInt>);

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(BigInt::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl DegreeVector {
    pub fn parse(text: &str) -> Option<DegreeVector> {
        let entries: Option<Vec<BigInt>> =
            text.split(',').map(|t| t.trim().parse().ok()).collect();
        entries.map(DegreeVector)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    matrix: IntMatrix,
    /// Rational `w` with `w . column = 1` for every column.
    functional: Vec<BigRational>,
    /// Original 1-based column labels, preserved by `restrict`.
    labels: Vec<usize>,
}

impl Configuration {
    /// Validates a matrix as a configuration: distinct columns and a common
    /// affine hyperplane off the origin.
    pub fn new(matrix: IntMatrix) -> Result<Configuration, ConfigError> {
        let n = matrix.cols();
        let mut seen: HashMap<Vec<BigInt>, usize> = HashMap::new();
        for j in 0..n {
            if let Some(&prev) = seen.get(&matrix.column(j)) {
                return Err(ConfigError::DuplicateColumns(prev + 1, j + 1));
            }
            seen.insert(matrix.column(j), j);
        }
        let ones: IntVector = vec![BigInt::one(); n];
        let functional =
            lattice::solve_rational(&matrix.transpose(), &ones).ok_or(ConfigError::NotHomogeneous)?;
        let labels = (1..=n).collect();
        Ok(Configuration { matrix, functional, labels })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn ncols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn functional(&self) -> &[BigRational] {
        &self.functional
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Multidegree `A u` of an exponent vector.
    pub fn degree_of_exponents(&self, exps: &[u64]) -> DegreeVector {
        let u: IntVector = exps.iter().map(|&e| BigInt::from(e)).collect();
        DegreeVector(self.matrix.mul_vector(&u))
    }

    /// Total degree `w . b` of a multidegree, when it is a nonnegative
    /// integer; `None` otherwise (such a fiber is empty).
    pub fn total_degree(&self, b: &DegreeVector) -> Option<u64> {
        let mut acc = BigRational::zero();
        for (w, e) in self.functional.iter().zip(&b.0) {
            acc += w * BigRational::from_integer(e.clone());
        }
        if !acc.is_integer() || acc.is_negative() {
            return None;
        }
        u64::try_from(acc.to_integer().magnitude()).ok()
    }

    /// Subconfiguration on the selected columns (0-based), keeping labels.
    pub fn restrict(&self, cols: &[usize]) -> Configuration {
        assert!(!cols.is_empty(), "restriction to an empty column set");
        Configuration {
            matrix: self.matrix.select_columns(cols),
            functional: self.functional.clone(),
            labels: cols.iter().map(|&j| self.labels[j]).collect(),
        }
    }

    /// Shifts each row by the minimal multiple of the all-ones row making it
    /// nonnegative. The toric ideal is unchanged: the all-ones row must lie
    /// in the integer row lattice, so kernels agree.
    pub fn normalize_rows(&self) -> Result<Configuration, ConfigError> {
        let d = self.dim();
        let n = self.ncols();
        let mut shifts: Vec<BigInt> = Vec::with_capacity(d);
        for i in 0..d {
            let min = self.matrix.row(i).iter().min().cloned().unwrap_or_else(BigInt::zero);
            shifts.push(if min.is_negative() { -min } else { BigInt::zero() });
        }
        if shifts.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let ones: IntVector = vec![BigInt::one(); n];
        if lattice::solve_integer(&self.matrix.transpose(), &ones).is_none() {
            return Err(ConfigError::NoIntegerHomogenizingRow);
        }
        let mut shifted = self.matrix.clone();
        for i in 0..d {
            for j in 0..n {
                let v = self.matrix.get(i, j) + &shifts[i];
                *shifted.get_mut(i, j) = v;
            }
        }
        let mut result = Configuration::new(shifted)?;
        result.labels = self.labels.clone();
        debug_assert_eq!(lattice::rank(&self.matrix), lattice::rank(result.matrix()));
        debug_assert!(lattice::kernel_lattice_basis(&self.matrix)
            .iter()
            .all(|v| result.matrix().mul_vector(v).iter().all(Zero::is_zero)));
        Ok(result)
    }

    /// Text form: `d n` header then one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.dim(), self.ncols());
        for i in 0..self.dim() {
            let row: Vec<String> = self.matrix.row(i).iter().map(BigInt::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Configuration, ConfigError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or(ConfigError::Parse { line: 0, msg: "empty input".into() })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| ConfigError::Parse {
                line: line_no,
                msg: format!("bad header `{header}`"),
            }))
            .collect::<Result<_, _>>()?;
        let [d, n] = dims[..] else {
            return Err(ConfigError::Parse { line: line_no, msg: "header must be `d n`".into() });
        };
        let mut entries: Vec<BigInt> = Vec::with_capacity(d * n);
        for _ in 0..d {
            let (line_no, row) = lines
                .next()
                .ok_or(ConfigError::Parse { line: 0, msg: format!("expected {d} rows") })?;
            let parsed: Vec<BigInt> = row
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| ConfigError::Parse {
                    line: line_no,
                    msg: format!("bad integer `{t}`"),
                }))
                .collect::<Result<_, _>>()?;
            if parsed.len() != n {
                return Err(ConfigError::Parse {
                    line: line_no,
                    msg: format!("expected {n} entries, found {}", parsed.len()),
                });
            }
            entries.extend(parsed);
        }
        Configuration::new(IntMatrix::new(d, n, entries))
    }
}

/// All degree-`r` exponent vectors in `d` variables, lexicographically
/// decreasing: the `r`-th Veronese configuration.
pub fn veronese(d: usize, r: u64) -> Configuration {
    assert!(d >= 2 && r >= 2, "veronese needs d >= 2 and r >= 2");
    let cols = compositions(d, r);
    configuration_from_u64_columns(&cols)
}

/// All 0/1 vectors of length `d` with exactly `r` ones, lexicographically
/// decreasing: the `r`-th squarefree Veronese configuration.
pub fn squarefree_veronese(d: usize, r: u64) -> Configuration {
    assert!(d >= 2, "squarefree veronese needs d >= 2");
    assert!(r >= 1 && (r as usize) <= d, "squarefree veronese needs 1 <= r <= d");
    let mut cols = Vec::new();
    let mut cur = vec![0u64; d];
    squarefree_rec(&mut cur, 0, r as usize, &mut cols);
    configuration_from_u64_columns(&cols)
}

fn compositions(d: usize, r: u64) -> Vec<Vec<u64>> {
    if d == 1 {
        return vec![vec![r]];
    }
    let mut out = Vec::new();
    for first in (0..=r).rev() {
        for rest in compositions(d - 1, r - first) {
            let mut col = Vec::with_capacity(d);
            col.push(first);
            col.extend(rest);
            out.push(col);
        }
    }
    out
}

fn squarefree_rec(cur: &mut Vec<u64>, pos: usize, remaining: usize, out: &mut Vec<Vec<u64>>) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    if cur.len() - pos < remaining {
        return;
    }
    cur[pos] = 1;
    squarefree_rec(cur, pos + 1, remaining - 1, out);
    cur[pos] = 0;
    squarefree_rec(cur, pos + 1, remaining, out);
}

fn configuration_from_u64_columns(cols: &[Vec<u64>]) -> Configuration {
    let big: Vec<IntVector> = cols
        .iter()
        .map(|c| c.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    Configuration::new(IntMatrix::from_columns(&big)).expect("builder output must validate")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

impl RootFamily {
    pub fn parse(s: &str) -> Option<RootFamily> {
        match s {
            "A" | "a" => Some(RootFamily::A),
            "B" | "b" => Some(RootFamily::B),
            "C" | "c" => Some(RootFamily::C),
            "D" | "d" => Some(RootFamily::D),
            _ => None,
        }
    }
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootFamily::A => "A",
            RootFamily::B => "B",
            RootFamily::C => "C",
            RootFamily::D => "D",
        };
        write!(f, "{c}")
    }
}

/// Origin plus the positive roots of the chosen family in `Z^d`, each column
/// homogenized with a final coordinate 1.
///
/// Column order: origin, then `e_i - e_j` for `i < j` in lexicographic `(i, j)`
/// order, then the family-specific vectors in lexicographic `(i, j)` order.
pub fn root_config(family: RootFamily, d: usize) -> Configuration {
    assert!(d >= 2, "root configurations need d >= 2");
    let mut cols: Vec<IntVector> = Vec::new();
    let mut push = |v: Vec<i64>| {
        let mut col: IntVector = v.iter().map(|&e| BigInt::from(e)).collect();
        col.push(BigInt::one());
        cols.push(col);
    };
    push(vec![0; d]);
    for i in 0..d {
        for j in i + 1..d {
            let mut v = vec![0i64; d];
            v[i] = 1;
            v[j] = -1;
            push(v);
        }
    }
    match family {
        RootFamily::A => {}
        RootFamily::B => {
            for i in 0..d {
                let mut v = vec![0i64; d];
                v[i] = 1;
                push(v);
            }
            for i in 0..d {
                for j in i + 1..d {
                    let mut v = vec![0i64; d];
                    v[i] = 1;
                    v[j] = 1;
                    push(v);
                }
            }
        }
        RootFamily::C => {
            for i in 0..d {
                for j in i..d {
                    let mut v = vec![0i64; d];
                    v[i] += 1;
                    v[j] += 1;
                    push(v);
                }
            }
        }
        RootFamily::D => {
            for i in 0..d {
                for j in i + 1..d {
                    let mut v = vec![0i64; d];
                    v[i] = 1;
                    v[j] = 1;
                    push(v);
                }
            }
        }
    }
    Configuration::new(IntMatrix::from_columns(&cols)).expect("root configuration must validate")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col_u64(c: &Configuration, j: usize) -> Vec<i64> {
        c.matrix()
            .column(j)
            .iter()
            .map(|e| i64::try_from(e).unwrap())
            .collect()
    }

    #[test]
    fn veronese_2_3_columns() {
        let c = veronese(2, 3);
        let cols: Vec<Vec<i64>> = (0..c.ncols()).map(|j| col_u64(&c, j)).collect();
        assert_eq!(cols, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn veronese_counts() {
        assert_eq!(veronese(2, 2).ncols(), 3);
        assert_eq!(veronese(3, 2).ncols(), 6);
        assert_eq!(veronese(3, 3).ncols(), 10);
    }

    #[test]
    fn squarefree_veronese_columns() {
        let c = squarefree_veronese(4, 2);
        assert_eq!(c.ncols(), 6);
        let cols: Vec<Vec<i64>> = (0..6).map(|j| col_u64(&c, j)).collect();
        assert_eq!(
            cols,
            vec![
                vec![1, 1, 0, 0],
                vec![1, 0, 1, 0],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0],
                vec![0, 1, 0, 1],
                vec![0, 0, 1, 1],
            ]
        );
        assert_eq!(squarefree_veronese(5, 2).ncols(), 10);
        assert_eq!(squarefree_veronese(3, 3).ncols(), 1);
    }

    #[test]
    fn root_config_a3_columns() {
        let c = root_config(RootFamily::A, 3);
        let cols: Vec<Vec<i64>> = (0..c.ncols()).map(|j| col_u64(&c, j)).collect();
        assert_eq!(
            cols,
            vec![
                vec![0, 0, 0, 1],
                vec![1, -1, 0, 1],
                vec![1, 0, -1, 1],
                vec![0, 1, -1, 1],
            ]
        );
    }

    #[test]
    fn root_config_counts() {
        assert_eq!(root_config(RootFamily::B, 2).ncols(), 5);
        assert_eq!(root_config(RootFamily::C, 2).ncols(), 5);
        assert_eq!(root_config(RootFamily::D, 2).ncols(), 3);
        for d in 2..=4usize {
            let pairs = d * (d - 1) / 2;
            assert_eq!(root_config(RootFamily::A, d).ncols(), 1 + pairs);
            assert_eq!(root_config(RootFamily::B, d).ncols(), 1 + 2 * pairs + d);
            assert_eq!(root_config(RootFamily::C, d).ncols(), 1 + pairs + (d + 1) * d / 2);
            assert_eq!(root_config(RootFamily::D, d).ncols(), 1 + 2 * pairs);
        }
    }

    #[test]
    fn duplicate_columns_rejected() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 1], vec![0, 1, 0]]);
        assert_eq!(Configuration::new(m).unwrap_err(), ConfigError::DuplicateColumns(1, 3));
    }

    #[test]
    fn homogeneity_check() {
        // Columns (1,0),(0,2): w = (1, 1/2) works.
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]);
        assert!(Configuration::new(m).is_ok());
        // Columns (1,0),(2,0): no functional sends both to 1.
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![0, 0]]);
        assert_eq!(Configuration::new(m).unwrap_err(), ConfigError::NotHomogeneous);
    }

    #[test]
    fn functional_maps_every_column_to_one() {
        let m = IntMatrix::from_rows(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ]);
        let c = Configuration::new(m).unwrap();
        for j in 0..c.ncols() {
            let mut acc = BigRational::zero();
            for (w, e) in c.functional().iter().zip(c.matrix().column(j)) {
                acc += w * BigRational::from_integer(e);
            }
            assert!(acc.is_one(), "column {j} not on the hyperplane");
        }
    }

    #[test]
    fn normalize_rows_examples() {
        // Graph incidence matrices are already nonnegative.
        let m = IntMatrix::from_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        let c = Configuration::new(m).unwrap();
        assert_eq!(c.normalize_rows().unwrap(), c);

        // Root configuration A_2 homogenized becomes a (0,1,2)-configuration.
        let c = root_config(RootFamily::A, 3);
        let norm = c.normalize_rows().unwrap();
        for i in 0..norm.dim() {
            for j in 0..norm.ncols() {
                let e = i64::try_from(norm.matrix().get(i, j)).unwrap();
                assert!((0..=2).contains(&e), "entry {e} outside 0..=2");
            }
        }
        assert_eq!(
            lattice::kernel_lattice_basis(c.matrix()),
            lattice::kernel_lattice_basis(norm.matrix())
        );
    }

    #[test]
    fn normalize_rows_root_c2_is_nonnegative_with_same_kernel() {
        let c = root_config(RootFamily::C, 2);
        let norm = c.normalize_rows().unwrap();
        for i in 0..norm.dim() {
            for j in 0..norm.ncols() {
                assert!(!norm.matrix().get(i, j).is_negative());
            }
        }
        assert_eq!(
            lattice::kernel_lattice_basis(c.matrix()),
            lattice::kernel_lattice_basis(norm.matrix())
        );
    }

    #[test]
    fn restrict_keeps_labels() {
        let c = veronese(2, 3);
        let r = c.restrict(&[0, 1, 2]);
        assert_eq!(r.labels(), &[1, 2, 3]);
        assert_eq!(lattice::kernel_lattice_basis(r.matrix()).len(), 1);
        let all = c.restrict(&[0, 1, 2, 3]);
        assert_eq!(&all, &c);
    }

    #[test]
    fn text_round_trip() {
        let c = veronese(2, 3);
        let text = c.to_text();
        assert_eq!(text, "2 4\n3 2 1 0\n0 1 2 3\n");
        assert_eq!(Configuration::parse(&text).unwrap(), c);
        let commented = format!("# veronese\n{text}");
        assert_eq!(Configuration::parse(&commented).unwrap(), c);
    }

    #[test]
    fn degree_helpers() {
        let c = veronese(2, 3);
        let b = c.degree_of_exponents(&[1, 0, 0, 1]);
        assert_eq!(b, DegreeVector(vec![BigInt::from(3), BigInt::from(3)]));
        assert_eq!(c.total_degree(&b), Some(2));
        assert_eq!(DegreeVector::parse("3,3").unwrap(), b);
    }
}
