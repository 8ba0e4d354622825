//! Laplacian spectra and the eigenvalue-ratio factor condition.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verdict::{ConditionVerdict, Theorem, Witness};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Checks squareness, symmetry (exact) and finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::NumericError(format!(
                    "row of length {} in a matrix of order {order}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let m = Self { order, entries };
        for i in 0..order {
            for j in 0..order {
                let x = m.get(i, j);
                if !x.is_finite() {
                    return Err(Error::NumericError(format!(
                        "entry ({i},{j}) is not finite"
                    )));
                }
                if x != m.get(j, i) {
                    return Err(Error::NumericError(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }
}

/// Eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    /// `μ₁`.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// `μ_{n−1}`, the algebraic connectivity for a Laplacian.
    pub fn second_smallest(&self) -> Option<f64> {
        let n = self.values.len();
        (n >= 2).then(|| self.values[n - 2])
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }
}

/// `L(G) = D(G) − A(G)`.
pub fn laplacian(g: &Graph) -> Result<SymmetricMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as f64;
        for u in g.neighbors(v).iter() {
            entries[v * n + u] = -1.0;
        }
    }
    Ok(SymmetricMatrix { order: n, entries })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    libm::sqrt(2.0 * s)
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix.
///
/// Sweeps rotate every off-diagonal pair whose magnitude exceeds a
/// threshold (a fraction of the current off-diagonal norm during the first
/// three sweeps, zero afterwards). Iteration stops once the off-diagonal
/// Frobenius norm drops below `tol / 10`; by Weyl's inequality every
/// diagonal entry is then within `tol / 10` of a true eigenvalue.
pub fn eigenvalues_sym(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 || !tol.is_finite() {
        return Err(Error::NumericError(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if m.entries.iter().any(|x| !x.is_finite()) {
        return Err(Error::NumericError("matrix has non-finite entries".into()));
    }
    let n = m.order;
    let mut a = m.entries.clone();
    let stop = tol / 10.0;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < stop {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceError {
                sweeps,
                off_norm: off,
            });
        }
        let threshold = if sweeps < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if libm::fabs(apq) <= threshold || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, tol })
}

/// Applies the rotation that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = {
        let denom = libm::fabs(theta) + libm::sqrt(theta * theta + 1.0);
        if theta >= 0.0 {
            1.0 / denom
        } else {
            -1.0 / denom
        }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    for r in 0..n {
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        a[r * n + p] = c * arp - s * arq;
        a[r * n + q] = s * arp + c * arq;
    }
    for r in 0..n {
        let apr = a[p * n + r];
        let aqr = a[q * n + r];
        a[p * n + r] = c * apr - s * aqr;
        a[q * n + r] = s * apr + c * aqr;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

pub fn laplacian_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    eigenvalues_sym(&laplacian(g)?, tol)
}

/// Sufficient condition `μ₁ ≤ (k+1/2)·μ_{n−1}` (ties hold; `tol` is added
/// to the right-hand side). Graphs with fewer than two vertices or no edges
/// are reported as not applicable.
pub fn check_thm12(g: &Graph, k: usize, tol: f64) -> Result<ConditionVerdict> {
    crate::check_k(k)?;
    if g.order() < 2 {
        return Ok(ConditionVerdict::not_applicable(
            Theorem::T12,
            k,
            "order below 2: mu_{n-1} is undefined",
        ));
    }
    if g.size() == 0 {
        return Ok(ConditionVerdict::not_applicable(
            Theorem::T12,
            k,
            "edgeless graph: mu_1 = mu_{n-1} = 0 holds trivially but carries no information",
        ));
    }
    let spec = laplacian_spectrum(g, tol)?;
    let mu1 = spec.largest().unwrap_or(0.0);
    let mu = spec.second_smallest().unwrap_or(0.0);
    let holds = mu1 <= (k as f64 + 0.5) * mu + tol;
    Ok(ConditionVerdict::evaluated(
        Theorem::T12,
        k,
        holds,
        Witness::Eigenvalues {
            mu1,
            mu_n_minus_1: mu,
        },
    ))
}

/// Outcome of checking the two separator inequalities on one partition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma21Outcome {
    /// `|X| ≤ (μ₁−μ_{n−1})/(2μ₁)·n`.
    pub size_bound: bool,
    /// `|S| ≥ 2μ_{n−1}/(μ₁−μ_{n−1})·|X|`; `None` when `μ₁ = μ_{n−1}`.
    pub separator_bound: Option<bool>,
}

/// Checks the separator inequalities for `S` and a split `X ∪ Y = V − S`
/// with no `X`–`Y` edges and `|X| ≤ |Y|`.
///
/// This is a verification harness for property tests, not a decision
/// procedure.
pub fn check_lemma21(
    g: &Graph,
    s: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    tol: f64,
) -> Result<Lemma21Outcome> {
    let spec = laplacian_spectrum(g, tol)?;
    check_lemma21_with_spectrum(g, &spec, s, x, y)
}

/// As [`check_lemma21`] with a precomputed Laplacian spectrum.
pub fn check_lemma21_with_spectrum(
    g: &Graph,
    spec: &Spectrum,
    s: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Lemma21Outcome> {
    let n = g.order();
    if g.size() == 0 {
        return Err(Error::InvalidParameters("graph has no edges".into()));
    }
    let all = VertexSet::full(n);
    for (name, set) in [("S", s), ("X", x), ("Y", y)] {
        if !set.is_subset(&all) {
            return Err(Error::InvalidPartition(format!(
                "{name} contains vertices outside the graph"
            )));
        }
    }
    if !x.is_disjoint(y) || !s.is_disjoint(x) || !s.is_disjoint(y) {
        return Err(Error::InvalidPartition(
            "S, X, Y are not pairwise disjoint".into(),
        ));
    }
    if x.union(y).union(s) != all {
        return Err(Error::InvalidPartition("X and Y do not cover V - S".into()));
    }
    if x.len() > y.len() {
        return Err(Error::InvalidPartition(format!(
            "|X| = {} exceeds |Y| = {}",
            x.len(),
            y.len()
        )));
    }
    if x.iter().any(|v| !g.neighbors(v).is_disjoint(y)) {
        return Err(Error::InvalidPartition("an edge joins X and Y".into()));
    }
    let (rest, _) = g.delete_vertices(s);
    if rest.is_connected() {
        return Err(Error::InvalidPartition("G - S is connected".into()));
    }

    let tol = spec.tol;
    let mu1 = spec.largest().unwrap_or(0.0);
    let mu = spec.second_smallest().unwrap_or(0.0);
    let gap = mu1 - mu;
    let size_bound = x.len() as f64 <= gap / (2.0 * mu1) * n as f64 + tol;
    let separator_bound =
        (gap > tol).then(|| s.len() as f64 + tol >= 2.0 * mu / gap * x.len() as f64);
    Ok(Lemma21Outcome {
        size_bound,
        separator_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardKind;
    use alloc::vec;

    fn assert_spectrum(g: &Graph, expected: &[f64]) {
        let s = laplacian_spectrum(g, DEFAULT_TOL).unwrap();
        assert_eq!(s.values.len(), expected.len());
        for (a, b) in s.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{:?} vs {:?}", s.values, expected);
        }
    }

    #[test]
    fn laplacian_examples() {
        let l = laplacian(&Graph::complete(2)).unwrap();
        assert_eq!(l.row(0), &[1.0, -1.0]);
        assert_eq!(l.row(1), &[-1.0, 1.0]);
        let l = laplacian(&Graph::empty(3)).unwrap();
        assert!((0..3).all(|i| l.row(i).iter().all(|&x| x == 0.0)));
        let l = laplacian(&Graph::standard(StandardKind::Path, 3).unwrap()).unwrap();
        assert_eq!(l.row(1), &[-1.0, 2.0, -1.0]);
        for i in 0..3 {
            assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
        }
        assert_eq!(laplacian(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn closed_form_spectra() {
        assert_spectrum(&Graph::complete(4), &[4.0, 4.0, 4.0, 0.0]);
        assert_spectrum(
            &Graph::standard(StandardKind::Cycle, 4).unwrap(),
            &[4.0, 2.0, 2.0, 0.0],
        );
        assert_spectrum(
            &Graph::standard(StandardKind::Star, 5).unwrap(),
            &[5.0, 1.0, 1.0, 1.0, 0.0],
        );
        assert_spectrum(&Graph::complete(1), &[0.0]);
    }

    #[test]
    fn solver_errors() {
        let m = SymmetricMatrix::from_rows(&[vec![1.0]]).unwrap();
        assert!(matches!(
            eigenvalues_sym(&m, 0.0),
            Err(Error::NumericError(_))
        ));
        assert!(matches!(
            SymmetricMatrix::from_rows(&[vec![1.0, f64::NAN], vec![f64::NAN, 1.0]]),
            Err(Error::NumericError(_))
        ));
        assert!(matches!(
            SymmetricMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]),
            Err(Error::NumericError(_))
        ));
    }

    #[test]
    fn general_symmetric_matrix() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1
        let m = SymmetricMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let s = eigenvalues_sym(&m, 1e-12).unwrap();
        assert!((s.values[0] - 3.0).abs() < 1e-12 && (s.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn thm12_examples() {
        let v = check_thm12(&Graph::complete(8), 2, DEFAULT_TOL).unwrap();
        assert_eq!(v.holds(), Some(true));
        let c4 = Graph::standard(StandardKind::Cycle, 4).unwrap();
        let v = check_thm12(&c4, 2, DEFAULT_TOL).unwrap();
        assert_eq!(v.holds(), Some(true));
        match v.witness() {
            Some(Witness::Eigenvalues { mu1, mu_n_minus_1 }) => {
                assert!((mu1 - 4.0).abs() < 1e-9 && (mu_n_minus_1 - 2.0).abs() < 1e-9)
            }
            w => panic!("unexpected witness {w:?}"),
        }
        let two_k2 = Graph::complete(2).union(&Graph::complete(2));
        assert_eq!(
            check_thm12(&two_k2, 2, DEFAULT_TOL).unwrap().holds(),
            Some(false)
        );
        assert!(!check_thm12(&Graph::empty(3), 2, DEFAULT_TOL)
            .unwrap()
            .applicable());
        assert!(!check_thm12(&Graph::complete(1), 2, DEFAULT_TOL)
            .unwrap()
            .applicable());
        assert_eq!(check_thm12(&c4, 1, DEFAULT_TOL), Err(Error::InvalidK(1)));
    }

    #[test]
    fn lemma21_examples() {
        let k3 = Graph::complete(3);
        let g = k3.union(&k3);
        let out = check_lemma21(
            &g,
            &VertexSet::new(),
            &VertexSet::from([0, 1, 2]),
            &VertexSet::from([3, 4, 5]),
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(out.size_bound);
        assert_eq!(out.separator_bound, Some(true));

        let p3 = Graph::standard(StandardKind::Path, 3).unwrap();
        let out = check_lemma21(
            &p3,
            &VertexSet::from([1]),
            &VertexSet::from([0]),
            &VertexSet::from([2]),
            DEFAULT_TOL,
        )
        .unwrap();
        // spectrum {3,1,0}: |X| = 1 ≤ 2/6·3 = 1 and |S| = 1 ≥ 2/2·1 = 1, both tight
        assert_eq!(
            out,
            Lemma21Outcome {
                size_bound: true,
                separator_bound: Some(true)
            }
        );

        let g = Graph::complete(2).union(&Graph::empty(2));
        let err = check_lemma21(
            &g,
            &VertexSet::new(),
            &VertexSet::from([0, 1, 2]),
            &VertexSet::from([3]),
            DEFAULT_TOL,
        );
        assert!(matches!(err, Err(Error::InvalidPartition(_))));
        let err = check_lemma21(
            &p3,
            &VertexSet::new(),
            &VertexSet::from([0]),
            &VertexSet::from([1, 2]),
            DEFAULT_TOL,
        );
        assert!(matches!(err, Err(Error::InvalidPartition(_))));
    }
}
