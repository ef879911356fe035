//! Exact verification of a constructed Lie algebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lattices::{identify_root_system, RootSystemReport, RootVector};
use crate::liealg::{BasisLabel, LieAlgebra, Sl2Gen};
use crate::linalg::{bareiss, integer_row};
use crate::rational::{to_pair, SparseVec, Q};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiWitness {
    pub indices: [usize; 3],
    pub labels: [String; 3],
    /// Nonzero `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` as `(index, num, den)`.
    pub residual: Vec<(usize, i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiReport {
    pub passed: bool,
    pub witness: Option<JacobiWitness>,
}

fn jacobi_residual(l: &LieAlgebra, i: usize, j: usize, k: usize) -> SparseVec {
    let term = |a: usize, b: usize, c: usize| l.ad_basis(a, &l.bracket_basis(b, c));
    let mut terms = term(i, j, k).terms().to_vec();
    terms.extend_from_slice(term(j, k, i).terms());
    terms.extend_from_slice(term(k, i, j).terms());
    SparseVec::from_terms(terms)
}

/// Exhaustive Jacobi scan over basis triples `i ≤ j ≤ k`. The reported
/// witness is the lexicographically smallest failing triple.
pub fn check_jacobi(l: &LieAlgebra) -> JacobiReport {
    let dim = l.dim();
    let witness = (0..dim).into_par_iter().find_map_first(|i| {
        for j in i..dim {
            for k in j..dim {
                let r = jacobi_residual(l, i, j, k);
                if !r.is_zero() {
                    return Some(JacobiWitness {
                        indices: [i, j, k],
                        labels: [i, j, k].map(|x| l.basis()[x].to_string()),
                        residual: r
                            .terms()
                            .iter()
                            .map(|(m, c)| {
                                let [num, den] = to_pair(c);
                                (*m, num, den)
                            })
                            .collect(),
                    });
                }
            }
        }
        None
    });
    JacobiReport { passed: witness.is_none(), witness }
}

/// Sparse `ad(x_i)`: `ad[i]` maps a column `j` to `[x_i, x_j]`.
fn adjoint_columns(l: &LieAlgebra) -> Vec<Vec<SparseVec>> {
    (0..l.dim())
        .into_par_iter()
        .map(|i| (0..l.dim()).map(|j| l.bracket_basis(i, j)).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    pub matrix: Vec<Vec<Q>>,
    pub rank: usize,
}

impl KillingForm {
    pub fn nondegenerate(&self) -> bool {
        self.rank == self.matrix.len()
    }
}

/// `κ(x_i, x_j) = tr(ad x_i ∘ ad x_j)` with an exact rank.
pub fn killing_form(l: &LieAlgebra) -> KillingForm {
    let dim = l.dim();
    let ad = adjoint_columns(l);
    // entries[i]: (row m, column k) → (ad x_i)_{m,k}
    let entries: Vec<BTreeMap<(usize, usize), Q>> = ad
        .par_iter()
        .map(|cols| {
            cols.iter()
                .enumerate()
                .flat_map(|(k, v)| v.terms().iter().map(move |&(m, c)| ((m, k), c)))
                .collect()
        })
        .collect();
    let matrix: Vec<Vec<Q>> = (0..dim)
        .into_par_iter()
        .map(|i| {
            (0..dim)
                .map(|j| {
                    // Σ_{k,m} (ad x_i)_{k,m} (ad x_j)_{m,k}
                    let mut acc = Q::zero();
                    for (&(m, k), c) in &entries[j] {
                        if let Some(a) = entries[i].get(&(k, m)) {
                            acc += a * c;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let rank = bareiss(
        matrix
            .iter()
            .map(|row| integer_row(row.iter().copied().enumerate()))
            .collect(),
    )
    .rank;
    KillingForm { matrix, rank }
}

/// Dimension of `{x : [h_i ⊗ t_i, x] = 0 for all i}`.
pub fn cartan_centralizer(l: &LieAlgebra) -> usize {
    let dim = l.dim();
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Q)>> = BTreeMap::new();
    for (hi, &h) in l.cartan_indices().iter().enumerate() {
        for j in 0..dim {
            for &(k, c) in l.bracket_basis(h, j).terms() {
                rows.entry((hi, k)).or_default().push((j, c));
            }
        }
    }
    dim - bareiss(rows.into_values().map(integer_row).collect()).rank
}

/// Simultaneous `ad(h_i)` eigenvalues of every basis vector, or a structural
/// error naming a basis vector that is not an eigenvector.
pub fn weights(l: &LieAlgebra) -> Result<Vec<Vec<Q>>> {
    (0..l.dim())
        .map(|j| {
            l.cartan_indices()
                .iter()
                .map(|&h| {
                    let v = l.bracket_basis(h, j);
                    match v.terms() {
                        [] => Ok(Q::zero()),
                        [(k, c)] if *k == j => Ok(*c),
                        _ => Err(Error::Structural(format!(
                            "{} is not an eigenvector of ad({})",
                            l.basis()[j],
                            l.basis()[h]
                        ))),
                    }
                })
                .collect()
        })
        .collect()
}

/// Eigenvalue multisets of each `ad(h_i)`.
pub fn spectra(l: &LieAlgebra) -> Result<Vec<BTreeMap<Q, usize>>> {
    let w = weights(l)?;
    Ok((0..l.rank())
        .map(|i| {
            let mut m = BTreeMap::new();
            for row in &w {
                *m.entry(row[i]).or_insert(0) += 1;
            }
            m
        })
        .collect())
}

/// `±2` each with multiplicity one, every other eigenvalue in `{0, ±1}`.
pub fn spectrum_ok(spectrum: &BTreeMap<Q, usize>) -> bool {
    let two = Q::from_integer(2);
    spectrum.get(&two) == Some(&1)
        && spectrum.get(&-two) == Some(&1)
        && spectrum
            .keys()
            .all(|v| *v == two || *v == -two || v.is_zero() || *v == Q::one() || *v == -Q::one())
}

/// Pairs of basis vectors whose bracket leaves the sum of their weight spaces.
pub fn grading_violations(l: &LieAlgebra) -> Result<Vec<(usize, usize)>> {
    let w = weights(l)?;
    let mut bad = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let target: Vec<Q> = w[i].iter().zip(&w[j]).map(|(a, b)| a + b).collect();
            if l.bracket_basis(i, j).terms().iter().any(|(k, _)| w[*k] != target) {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

/// Roots predicted by the labels: `±2e_i` for `e_i, f_i` and the sign pattern
/// on `supp(c)` for a tensor vector.
pub fn label_roots(l: &LieAlgebra) -> Vec<RootVector> {
    let n = l.rank();
    let mut roots: Vec<RootVector> = l
        .basis()
        .iter()
        .filter_map(|b| match b {
            BasisLabel::Sl2 { copy, gen: Sl2Gen::E } => Some(RootVector::doubled_unit(n, *copy)),
            BasisLabel::Sl2 { copy, gen: Sl2Gen::F } => Some(RootVector::doubled_unit(n, *copy).neg()),
            BasisLabel::Sl2 { .. } => None,
            BasisLabel::Tensor(t) => Some(RootVector(t.weight_vector())),
        })
        .collect();
    roots.sort();
    roots
}

/// Roots read off the `ad(h_i)` eigenvalues, checked against the labels and classified.
pub fn extract_roots(l: &LieAlgebra) -> Result<RootSystemReport> {
    let centralizer = cartan_centralizer(l);
    if centralizer != l.rank() {
        return Err(Error::Structural(format!(
            "Cartan centralizer has dimension {centralizer}, expected {}",
            l.rank()
        )));
    }
    let w = weights(l)?;
    let cartan: BTreeSet<usize> = l.cartan_indices().iter().copied().collect();
    let mut roots = Vec::new();
    for (j, row) in w.iter().enumerate() {
        if cartan.contains(&j) {
            continue;
        }
        let coords = row
            .iter()
            .map(|v| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::Structural(format!("non-integral weight on {}", l.basis()[j])))
                }
            })
            .collect::<Result<Vec<i64>>>()?;
        let root = RootVector(coords);
        if root.is_zero() {
            return Err(Error::Structural(format!("{} has weight zero", l.basis()[j])));
        }
        roots.push(root);
    }
    roots.sort();
    if roots.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Structural("a root space has dimension above one".into()));
    }
    if roots != label_roots(l) {
        return Err(Error::Structural("weights disagree with the basis labels".into()));
    }
    identify_root_system(&roots)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Check {
    Jacobi,
    Killing,
    Centralizer,
    Roots,
    Spectrum,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Jacobi, Check::Killing, Check::Centralizer, Check::Roots, Check::Spectrum];

    pub fn name(self) -> &'static str {
        match self {
            Check::Jacobi => "jacobi",
            Check::Killing => "killing",
            Check::Centralizer => "centralizer",
            Check::Roots => "roots",
            Check::Spectrum => "spectrum",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::input(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub passed: bool,
    /// Per `h_i`: `[[num, den], multiplicity]` in increasing eigenvalue order.
    pub eigenvalues: Vec<Vec<([i64; 2], usize)>>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub passed: bool,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KillingReport {
    pub passed: bool,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootsReport {
    pub passed: bool,
    pub system: Option<RootSystemReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub dimension: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<JacobiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub killing: Option<KillingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<CentralizerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumReport>,
    /// Nondegenerate Killing form and a connected Dynkin diagram, when both were checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    pub passed: bool,
}

pub fn verify(l: &LieAlgebra, checks: &[Check]) -> VerificationReport {
    let wants = |c: Check| checks.contains(&c);
    let jacobi = wants(Check::Jacobi).then(|| check_jacobi(l));
    let killing = wants(Check::Killing).then(|| {
        let k = killing_form(l);
        KillingReport { passed: k.nondegenerate(), rank: k.rank }
    });
    let centralizer = wants(Check::Centralizer).then(|| {
        let dimension = cartan_centralizer(l);
        CentralizerReport { passed: dimension == l.rank(), dimension }
    });
    let roots = wants(Check::Roots).then(|| match extract_roots(l) {
        Ok(system) => RootsReport {
            passed: system.root_count + l.rank() == l.dim(),
            system: Some(system),
            error: None,
        },
        Err(e) => RootsReport { passed: false, system: None, error: Some(e.to_string()) },
    });
    let spectrum = wants(Check::Spectrum).then(|| match spectra(l) {
        Ok(s) => SpectrumReport {
            passed: s.iter().all(spectrum_ok),
            eigenvalues: s
                .iter()
                .map(|m| m.iter().map(|(v, c)| (to_pair(v), *c)).collect())
                .collect(),
            error: None,
        },
        Err(e) => SpectrumReport { passed: false, eigenvalues: vec![], error: Some(e.to_string()) },
    });
    let simple = match (&killing, &roots) {
        (Some(k), Some(RootsReport { system: Some(s), .. })) => Some(k.passed && s.dynkin_type.is_irreducible()),
        _ => None,
    };
    let passed = jacobi.as_ref().is_none_or(|r| r.passed)
        && killing.as_ref().is_none_or(|r| r.passed)
        && centralizer.as_ref().is_none_or(|r| r.passed)
        && roots.as_ref().is_none_or(|r| r.passed)
        && spectrum.as_ref().is_none_or(|r| r.passed);
    VerificationReport {
        dimension: l.dim(),
        rank: l.rank(),
        jacobi,
        killing,
        centralizer,
        roots,
        spectrum,
        simple,
        passed,
    }
}
