//! Matrix models of `c_n = sp(V_1 ⊥ … ⊥ V_n)`, `d_2n = so(⊥ V_{2i−1}⊗V_{2i})`
//! and `b_2n = so(F ⊥ …)`, their coordinate algebras, and a comparison
//! against the abstract builder.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::codes::BitWord;
use crate::coordalg::CoordinateAlgebra;
use crate::lattices::{DynkinType, SimpleType};
use crate::liealg::{build_lie_algebra, phi, phi_diag, BasisLabel, Contraction, LieAlgebra, Sign, Sl2Gen, StructureConstantsJson, TensorLabel, SCHEMA};
use crate::linalg::RowSpace;
use crate::rational::{to_pair, Q};
use crate::{Error, Result};

pub type Matrix = Vec<Vec<Q>>;

fn zeros(m: usize) -> Matrix {
    vec![vec![Q::zero(); m]; m]
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a.len();
    let mut out = zeros(m);
    for i in 0..m {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn flatten(a: &Matrix) -> Vec<Q> {
    a.iter().flatten().copied().collect()
}

fn sign_index(s: Sign) -> usize {
    usize::from(s == Sign::Minus)
}

/// `⟨v_a|v_b⟩` on a 2-dimensional `V` with basis `v₊, v₋`.
fn symplectic_pair(a: usize, b: usize) -> Q {
    match (a, b) {
        (0, 1) => Q::one(),
        (1, 0) => -Q::one(),
        _ => Q::zero(),
    }
}

/// `(coefficient, image)` of an sl2 generator on basis vector `a` of `V`.
fn sl2_action(g: Sl2Gen, a: usize) -> Option<(Q, usize)> {
    match (g, a) {
        (Sl2Gen::E, 1) => Some((Q::one(), 0)),
        (Sl2Gen::F, 0) => Some((Q::one(), 1)),
        (Sl2Gen::H, 0) => Some((Q::one(), 0)),
        (Sl2Gen::H, 1) => Some((-Q::one(), 1)),
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symplectic,
    Orthogonal,
}

/// Coordinates with a nondegenerate form and, for each coordinate, the
/// `V_i` or `V_{2i−1}⊗V_{2i}` block holding it (`None` for the line `F`).
#[derive(Clone, Debug)]
pub struct BilinearSpace {
    pub kind: FormKind,
    pub form: Matrix,
    pub blocks: Vec<Option<usize>>,
}

impl BilinearSpace {
    pub fn dim(&self) -> usize {
        self.form.len()
    }

    pub fn pair(&self, u: &[Q], v: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                acc += ui * self.form[i][j] * vj;
            }
        }
        acc
    }

    /// `b(Xu, v) + b(u, Xv) = 0` on basis vectors.
    pub fn preserves(&self, x: &Matrix) -> bool {
        let m = self.dim();
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m)
                    .map(|k| x[k][a] * self.form[k][b] + self.form[a][k] * x[k][b])
                    .sum::<Q>()
                    .is_zero()
            })
        })
    }

    /// `s_{w1,w2}(w) = b(w,w1)w2 + b(w,w2)w1` (symplectic) or
    /// `σ_{w1,w2}(w) = b(w,w1)w2 − b(w,w2)w1` (orthogonal).
    pub fn rank_one_map(&self, w1: &[Q], w2: &[Q]) -> Matrix {
        let m = self.dim();
        let s = match self.kind {
            FormKind::Symplectic => Q::one(),
            FormKind::Orthogonal => -Q::one(),
        };
        let mut out = zeros(m);
        for col in 0..m {
            let mut w = vec![Q::zero(); m];
            w[col] = Q::one();
            let (a, b) = (self.pair(&w, w1), self.pair(&w, w2));
            for row in 0..m {
                out[row][col] = a * w2[row] + s * b * w1[row];
            }
        }
        out
    }

    /// `s_{w_a,w_b}` for `a ≤ b`, or `σ_{w_a,w_b}` for `a < b`, over the coordinate basis.
    pub fn spanning_set(&self) -> Vec<Matrix> {
        let m = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Q::zero(); m];
            v[i] = Q::one();
            v
        };
        let mut out = Vec::new();
        for a in 0..m {
            let start = if self.kind == FormKind::Symplectic { a } else { a + 1 };
            for b in start..m {
                out.push(self.rank_one_map(&unit(a), &unit(b)));
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    C,
    D,
    B,
}

impl Series {
    pub fn expected_dim(self, n: usize) -> usize {
        match self {
            Series::C => 2 * n * n + n,
            Series::D => 8 * n * n - 2 * n,
            Series::B => 8 * n * n + 2 * n,
        }
    }

    pub fn expected_type(self, n: usize) -> DynkinType {
        DynkinType::new(vec![match self {
            Series::C => SimpleType::C(n),
            Series::D => SimpleType::D(2 * n),
            Series::B => SimpleType::B(2 * n),
        }])
    }

    pub fn name(self) -> &'static str {
        match self {
            Series::C => "c",
            Series::D => "d",
            Series::B => "b",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Series::C),
            "d" => Ok(Series::D),
            "b" => Ok(Series::B),
            _ => Err(Error::input(format!("unknown series {s:?} (expected c, d or b)"))),
        }
    }
}

/// One isotypic piece: an sl2 copy or a tensor block over a codeword.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub dim: usize,
}

/// Matrices on a block-adapted basis labelled like the abstract builder's basis.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub series: Series,
    pub n: usize,
    pub space: BilinearSpace,
    /// Number of sl2 copies.
    pub rank: usize,
    pub support_set: Vec<BitWord>,
    pub labels: Vec<BasisLabel>,
    pub matrices: Vec<Matrix>,
    pub blocks: Vec<Block>,
    row_space: RowSpace,
}

impl MatrixLieAlgebra {
    fn assemble(
        series: Series,
        n: usize,
        space: BilinearSpace,
        rank: usize,
        support_set: Vec<BitWord>,
        tensor_matrix: impl Fn(&TensorLabel) -> Matrix,
        sl2_matrix: impl Fn(usize, Sl2Gen) -> Matrix,
    ) -> Result<Self> {
        let mut labels = Vec::new();
        let mut matrices = Vec::new();
        let mut blocks = Vec::new();
        for copy in 0..rank {
            for gen in Sl2Gen::ALL {
                labels.push(BasisLabel::Sl2 { copy, gen });
                matrices.push(sl2_matrix(copy, gen));
            }
            blocks.push(Block { name: format!("sl(V_{})", copy + 1), dim: 3 });
        }
        for c in &support_set {
            let w = c.weight();
            for p in 0..1usize << w {
                let signs = (0..w)
                    .map(|k| if (p >> (w - 1 - k)) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect();
                let t = TensorLabel::new(*c, signs)?;
                matrices.push(tensor_matrix(&t));
                labels.push(BasisLabel::Tensor(t));
            }
            blocks.push(Block { name: format!("V^{c}"), dim: 1 << w });
        }

        let expected = series.expected_dim(n);
        let span = RowSpace::new(&space.spanning_set().iter().map(flatten).collect::<Vec<_>>());
        if span.rank() != expected {
            return Err(Error::Structural(format!(
                "spanning set has rank {}, expected {expected}",
                span.rank()
            )));
        }
        if let Some(k) = matrices.iter().position(|x| !space.preserves(x)) {
            return Err(Error::Structural(format!("{} does not preserve the form", labels[k])));
        }
        let flat: Vec<Vec<Q>> = matrices.iter().map(flatten).collect();
        if let Some(k) = flat.iter().position(|x| span.coordinates(x).is_none()) {
            return Err(Error::Structural(format!("{} lies outside the spanning set", labels[k])));
        }
        let row_space = RowSpace::new(&flat);
        if row_space.rank() != expected || flat.len() != expected {
            return Err(Error::Structural(format!(
                "block-adapted family has {} elements of rank {}, expected {expected}",
                flat.len(),
                row_space.rank()
            )));
        }
        Ok(MatrixLieAlgebra { series, n, space, rank, support_set, labels, matrices, blocks, row_space })
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.dim()
    }

    /// `[x_a, x_b]` in the basis.
    pub fn bracket_coordinates(&self, a: usize, b: usize) -> Result<Vec<Q>> {
        let c = commutator(&self.matrices[a], &self.matrices[b]);
        self.row_space.coordinates(&flatten(&c)).ok_or_else(|| {
            Error::Structural(format!("[{}, {}] leaves the span", self.labels[a], self.labels[b]))
        })
    }

    /// Structure constants in the exchange format of the abstract builder.
    pub fn structure_constants(&self) -> Result<LieAlgebra> {
        let mut brackets = Vec::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let coords = self.bracket_coordinates(a, b)?;
                let terms: Vec<(usize, i64, i64)> = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| {
                        let [num, den] = to_pair(v);
                        (k, num, den)
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.push((a, b, terms));
                }
            }
        }
        LieAlgebra::from_json(&StructureConstantsJson {
            schema: SCHEMA.to_string(),
            dim: self.dim(),
            basis: self.labels.iter().map(ToString::to_string).collect(),
            brackets,
        })
    }
}

fn symplectic_space(n: usize) -> BilinearSpace {
    let m = 2 * n;
    let mut form = zeros(m);
    for i in 0..n {
        for a in 0..2 {
            for b in 0..2 {
                form[2 * i + a][2 * i + b] = symplectic_pair(a, b);
            }
        }
    }
    BilinearSpace { kind: FormKind::Symplectic, form, blocks: (0..m).map(|k| Some(k / 2)).collect() }
}

/// `⊥_i V_{2i−1}⊗V_{2i}` (optionally after the line `F`) with
/// `(u⊗v|u'⊗v') = ⟨u|u'⟩⟨v|v'⟩`; `v_a⊗v_b` sits at `offset + 4i + 2a + b`.
fn orthogonal_space(n: usize, with_line: bool) -> BilinearSpace {
    let offset = usize::from(with_line);
    let m = 4 * n + offset;
    let mut form = zeros(m);
    let mut blocks = vec![None; offset];
    if with_line {
        form[0][0] = Q::one();
    }
    for i in 0..n {
        for x in 0..4 {
            blocks.push(Some(i));
            for y in 0..4 {
                form[offset + 4 * i + x][offset + 4 * i + y] =
                    symplectic_pair(x / 2, y / 2) * symplectic_pair(x % 2, y % 2);
            }
        }
    }
    BilinearSpace { kind: FormKind::Orthogonal, form, blocks }
}

/// `c_n = sp(V_1 ⊥ … ⊥ V_n)`, with `S` the weight-2 words and
/// `u⊗v ∈ V_i⊗V_j` acting by `w ↦ ⟨w|u⟩v` on `V_i` and `w ↦ ⟨w|v⟩u` on `V_j`.
pub fn build_symplectic(n: usize) -> Result<MatrixLieAlgebra> {
    if n == 0 {
        return Err(Error::input("c_n needs n ≥ 1"));
    }
    let space = symplectic_space(n);
    let m = 2 * n;
    let mut s = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            s.push(BitWord::from_support(n, &[i, j])?);
        }
    }
    let unit = |k: usize| {
        let mut v = vec![Q::zero(); m];
        v[k] = Q::one();
        v
    };
    let tensor = |t: &TensorLabel| {
        let supp = t.code.support();
        let (i, j) = (supp[0], supp[1]);
        let u = unit(2 * i + sign_index(t.signs[0]));
        let v = unit(2 * j + sign_index(t.signs[1]));
        space.rank_one_map(&u, &v)
    };
    let sl2 = |copy: usize, g: Sl2Gen| {
        let mut x = zeros(m);
        for a in 0..2 {
            if let Some((c, b)) = sl2_action(g, a) {
                x[2 * copy + b][2 * copy + a] = c;
            }
        }
        x
    };
    MatrixLieAlgebra::assemble(Series::C, n, space.clone(), n, s, tensor, sl2)
}

fn orthogonal(series: Series, n: usize) -> Result<MatrixLieAlgebra> {
    let with_line = series == Series::B;
    let space = orthogonal_space(n, with_line);
    let offset = usize::from(with_line);
    let m = space.dim();
    let rank = 2 * n;
    let mut s = Vec::new();
    if with_line {
        for i in 0..n {
            s.push(BitWord::from_support(rank, &[2 * i, 2 * i + 1])?);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            s.push(BitWord::from_support(rank, &[2 * i, 2 * i + 1, 2 * j, 2 * j + 1])?);
        }
    }
    let vector = |block: usize, a: Sign, b: Sign| {
        let mut v = vec![Q::zero(); m];
        v[offset + 4 * block + 2 * sign_index(a) + sign_index(b)] = Q::one();
        v
    };
    let tensor = |t: &TensorLabel| {
        let supp = t.code.support();
        if supp.len() == 2 {
            let mut f = vec![Q::zero(); m];
            f[0] = Q::one();
            space.rank_one_map(&f, &vector(supp[0] / 2, t.signs[0], t.signs[1]))
        } else {
            let w1 = vector(supp[0] / 2, t.signs[0], t.signs[1]);
            let w2 = vector(supp[2] / 2, t.signs[2], t.signs[3]);
            space.rank_one_map(&w1, &w2)
        }
    };
    // copy 2i acts as x⊗1 on block i, copy 2i+1 as 1⊗x
    let sl2 = |copy: usize, g: Sl2Gen| {
        let (block, second) = (copy / 2, copy % 2 == 1);
        let mut x = zeros(m);
        for a in 0..2 {
            for b in 0..2 {
                let src = offset + 4 * block + 2 * a + b;
                let moved = if second { b } else { a };
                if let Some((c, image)) = sl2_action(g, moved) {
                    let dst = if second {
                        offset + 4 * block + 2 * a + image
                    } else {
                        offset + 4 * block + 2 * image + b
                    };
                    x[dst][src] = c;
                }
            }
        }
        x
    };
    MatrixLieAlgebra::assemble(series, n, space.clone(), rank, s, tensor, sl2)
}

/// `d_2n = so(V_1⊗V_2 ⊥ … ⊥ V_{2n−1}⊗V_{2n})`.
pub fn build_orthogonal_even(n: usize) -> Result<MatrixLieAlgebra> {
    if n < 2 {
        return Err(Error::input("d_2n needs n ≥ 2"));
    }
    orthogonal(Series::D, n)
}

/// `b_2n = so(F ⊥ V_1⊗V_2 ⊥ … ⊥ V_{2n−1}⊗V_{2n})`.
pub fn build_orthogonal_odd(n: usize) -> Result<MatrixLieAlgebra> {
    if n < 1 {
        return Err(Error::input("b_2n needs n ≥ 1"));
    }
    orthogonal(Series::B, n)
}

pub fn build_classical(series: Series, n: usize) -> Result<MatrixLieAlgebra> {
    match series {
        Series::C => build_symplectic(n),
        Series::D => build_orthogonal_even(n),
        Series::B => build_orthogonal_odd(n),
    }
}

fn patterns(c: BitWord) -> Vec<TensorLabel> {
    let w = c.weight();
    (0..1usize << w)
        .map(|p| {
            let signs = (0..w)
                .map(|k| if (p >> (w - 1 - k)) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect();
            TensorLabel { code: c, signs }
        })
        .collect()
}

/// Solves for `e^c e^d = k(c,d) e^{c+d}` and `μ_i(c)` from the matrix
/// brackets, then rebuilds abstractly and requires identical structure constants.
pub fn extract_coordinate_algebra(m: &MatrixLieAlgebra) -> Result<CoordinateAlgebra> {
    let index: HashMap<&BasisLabel, usize> = m.labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let pos = |t: &TensorLabel| index[&BasisLabel::Tensor(t.clone())];
    let mut coeff: HashMap<(BitWord, BitWord), Q> = HashMap::new();
    let mut mu: HashMap<(BitWord, usize), Q> = HashMap::new();

    for c in &m.support_set {
        for d in &m.support_set {
            if c == d || !m.support_set.contains(&(*c + *d)) {
                continue;
            }
            'search: for x in patterns(*c) {
                for y in patterns(*d) {
                    if let Some((scalar, z)) = phi(&x, &y, Contraction::LeftRight)? {
                        let coords = m.bracket_coordinates(pos(&x), pos(&y))?;
                        coeff.insert((*c, *d), coords[pos(&z)] / Q::from_integer(scalar));
                        break 'search;
                    }
                }
            }
        }
        for i in c.support() {
            'search: for x in patterns(*c) {
                for y in patterns(*c) {
                    if let Some(&(gen, a)) = phi_diag(i, &x, &y)?.first() {
                        let coords = m.bracket_coordinates(pos(&x), pos(&y))?;
                        let k = index[&BasisLabel::Sl2 { copy: i, gen }];
                        mu.insert((*c, i), coords[k] / a);
                        break 'search;
                    }
                }
            }
        }
    }

    let algebra = CoordinateAlgebra::from_structure(
        m.rank,
        m.support_set.clone(),
        |c, d| coeff.get(&(*c, *d)).copied().unwrap_or_else(Q::zero),
        |c, i| mu.get(&(*c, i)).copied().unwrap_or_else(Q::zero),
    )?;
    let rebuilt = build_lie_algebra(&algebra)?;
    let direct = m.structure_constants()?;
    if let Some((a, b)) = first_difference(&rebuilt, &direct, &m.labels)? {
        return Err(Error::Convention(format!(
            "no coordinate-algebra scalars reproduce [{}, {}]",
            m.labels[a], m.labels[b]
        )));
    }
    Ok(algebra)
}

/// First pair (in matrix-basis order) whose brackets differ under the label identification.
fn first_difference(rebuilt: &LieAlgebra, direct: &LieAlgebra, labels: &[BasisLabel]) -> Result<Option<(usize, usize)>> {
    if rebuilt.dim() != direct.dim() {
        return Err(Error::Convention(format!(
            "rebuilt dimension {} differs from {}",
            rebuilt.dim(),
            direct.dim()
        )));
    }
    let map: Vec<usize> = labels
        .iter()
        .map(|l| {
            rebuilt
                .index_of(l)
                .ok_or_else(|| Error::Convention(format!("rebuilt algebra lacks {l}")))
        })
        .collect::<Result<_>>()?;
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            let mut got: Vec<(usize, Q)> = rebuilt
                .bracket_basis(map[a], map[b])
                .terms()
                .iter()
                .map(|&(k, v)| (k, v))
                .collect();
            let mut want: Vec<(usize, Q)> = direct
                .bracket_basis(a, b)
                .terms()
                .iter()
                .map(|&(k, v)| (map[k], v))
                .collect();
            got.sort_by_key(|t| t.0);
            want.sort_by_key(|t| t.0);
            if got != want {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Result of building a classical algebra and cross-checking it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub series: Series,
    pub n: usize,
    pub ambient_dim: usize,
    pub dim: usize,
    pub expected_dim: usize,
    pub blocks: Vec<Block>,
    /// `[c, d, [num, den]]` for every `c ≠ d` with `c + d ∈ S`.
    pub products: Vec<(String, String, [i64; 2])>,
    /// `[c, i, [num, den]]` with 1-based `i`.
    pub mu: Vec<(String, usize, [i64; 2])>,
    pub rebuilt_matches: bool,
    #[serde(rename = "type")]
    pub dynkin_type: DynkinType,
    pub expected_type: DynkinType,
}

impl ClassicalReport {
    pub fn passed(&self) -> bool {
        self.rebuilt_matches && self.dim == self.expected_dim && self.dynkin_type == self.expected_type
    }
}

/// Builds the matrix model, extracts and rebuilds its coordinate algebra, and classifies the roots.
pub fn cross_check(series: Series, n: usize) -> Result<(ClassicalReport, LieAlgebra)> {
    let m = build_classical(series, n)?;
    let algebra = extract_coordinate_algebra(&m)?;
    let rebuilt = build_lie_algebra(&algebra)?;
    let roots = crate::analysis::extract_roots(&rebuilt)?;
    let mut products = Vec::new();
    for c in algebra.support_set() {
        for d in algebra.support_set() {
            if c != d && algebra.support_set().contains(&(*c + *d)) {
                products.push((c.to_string(), d.to_string(), to_pair(&algebra.pair_coefficient(c, d)?)));
            }
        }
    }
    let mut mu = Vec::new();
    for c in algebra.support_set() {
        for (i, v) in algebra.mu(c)? {
            mu.push((c.to_string(), i + 1, to_pair(&v)));
        }
    }
    let report = ClassicalReport {
        series,
        n,
        ambient_dim: m.ambient_dim(),
        dim: m.dim(),
        expected_dim: series.expected_dim(n),
        blocks: m.blocks.clone(),
        products,
        mu,
        rebuilt_matches: true,
        dynkin_type: roots.dynkin_type,
        expected_type: series.expected_type(n),
    };
    Ok((report, rebuilt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::check_jacobi;

    #[test]
    fn dimensions() {
        for (s, n, dim) in [
            (Series::C, 1, 3),
            (Series::C, 2, 10),
            (Series::C, 3, 21),
            (Series::D, 2, 28),
            (Series::D, 3, 66),
            (Series::B, 1, 10),
            (Series::B, 2, 36),
            (Series::B, 3, 78),
        ] {
            let m = build_classical(s, n).unwrap();
            assert_eq!(m.dim(), dim, "{s}{n}");
            assert_eq!(m.blocks.iter().map(|b| b.dim).sum::<usize>(), dim);
        }
        assert!(build_orthogonal_even(1).is_err());
        assert!(build_symplectic(0).is_err());
    }

    #[test]
    fn block_shapes() {
        let d6 = build_orthogonal_even(3).unwrap();
        assert_eq!(d6.blocks.iter().filter(|b| b.dim == 3).count(), 6);
        assert_eq!(d6.blocks.iter().filter(|b| b.dim == 16).count(), 3);
        let c3 = build_symplectic(3).unwrap();
        assert_eq!(c3.blocks.iter().filter(|b| b.dim == 4).count(), 3);
        let d4 = build_orthogonal_even(2).unwrap();
        assert_eq!(d4.support_set, vec!["1111".parse().unwrap()]);
        assert_eq!(d4.ambient_dim(), 8);
        assert_eq!(build_orthogonal_odd(2).unwrap().ambient_dim(), 9);
    }

    #[test]
    fn matrix_models_satisfy_jacobi() {
        for (s, n) in [(Series::C, 2), (Series::D, 2), (Series::B, 1)] {
            let l = build_classical(s, n).unwrap().structure_constants().unwrap();
            assert!(check_jacobi(&l).passed, "{s}{n}");
        }
    }

    #[test]
    fn cross_checks() {
        for (s, n, ty) in [(Series::C, 2, "B2"), (Series::C, 3, "C3"), (Series::D, 2, "D4"), (Series::B, 1, "B2")] {
            let (r, _) = cross_check(s, n).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.dynkin_type.to_string(), ty);
        }
    }

    #[test]
    fn flipped_contraction_is_detected() {
        use crate::liealg::{build_lie_algebra_with, BuildOptions};
        let m = build_symplectic(3).unwrap();
        let algebra = extract_coordinate_algebra(&m).unwrap();
        let flipped = build_lie_algebra_with(&algebra, BuildOptions { contraction: Contraction::RightLeft }).unwrap();
        let direct = m.structure_constants().unwrap();
        assert!(first_difference(&flipped, &direct, &m.labels).unwrap().is_some());
    }

    #[test]
    fn series_names() {
        assert_eq!("D".parse::<Series>().unwrap(), Series::D);
        assert!("a".parse::<Series>().is_err());
    }
}
