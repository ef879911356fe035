//! The Lie algebra `⊕ sl(V_i)⊗t_i ⊕ ⊕_{c∈S} V^c⊗e^c` attached to a
//! coordinate algebra, with exact sparse structure constants.
//!
//! Conventions: `⟨v₊|v₋⟩ = 1`, `⟨v₋|v₊⟩ = −1`, `E v₋ = v₊`, `F v₊ = v₋`,
//! `H v± = ±v±`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::codes::BitWord;
use crate::coordalg::CoordinateAlgebra;
use crate::rational::{from_pair, half, to_pair, SparseVec, Q};
use crate::{Error, Result};

pub const SCHEMA: &str = "lieforge/sc/v1";

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sl2Gen {
    E,
    F,
    H,
}

impl Sl2Gen {
    pub const ALL: [Sl2Gen; 3] = [Sl2Gen::E, Sl2Gen::F, Sl2Gen::H];

    fn letter(self) -> char {
        match self {
            Sl2Gen::E => 'E',
            Sl2Gen::F => 'F',
            Sl2Gen::H => 'H',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// `⟨v_u|v_v⟩`.
pub fn pairing(u: Sign, v: Sign) -> i64 {
    match (u, v) {
        (Sign::Plus, Sign::Minus) => 1,
        (Sign::Minus, Sign::Plus) => -1,
        _ => 0,
    }
}

/// Action of an sl2 generator on `v_s`: `(coefficient, image sign)`, or `None` for zero.
fn act(g: Sl2Gen, s: Sign) -> Option<(i64, Sign)> {
    match (g, s) {
        (Sl2Gen::E, Sign::Minus) => Some((1, Sign::Plus)),
        (Sl2Gen::F, Sign::Plus) => Some((1, Sign::Minus)),
        (Sl2Gen::H, s) => Some((s.value(), s)),
        _ => None,
    }
}

/// Basis vector `⊗_{i∈supp c} v_{signs[k]}` of `V^c`, factors in increasing index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorLabel {
    pub code: BitWord,
    pub signs: Vec<Sign>,
}

impl TensorLabel {
    pub fn new(code: BitWord, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != code.weight() {
            return Err(Error::input(format!(
                "sign pattern of length {} for codeword {code} of weight {}",
                signs.len(),
                code.weight()
            )));
        }
        Ok(TensorLabel { code, signs })
    }

    /// Sign of the factor at coordinate `i`, if `i ∈ supp(c)`.
    pub fn sign_at(&self, i: usize) -> Option<Sign> {
        if !self.code.get(i) {
            return None;
        }
        let k = (0..i).filter(|&j| self.code.get(j)).count();
        Some(self.signs[k])
    }

    fn from_pattern(code: BitWord, p: usize) -> Self {
        let w = code.weight();
        let signs = (0..w)
            .map(|k| if (p >> (w - 1 - k)) & 1 == 1 { Sign::Minus } else { Sign::Plus })
            .collect();
        TensorLabel { code, signs }
    }

    /// Doubled root coordinates: `±1` on the support, `0` elsewhere.
    pub fn weight_vector(&self) -> Vec<i64> {
        (0..self.code.len())
            .map(|i| self.sign_at(i).map_or(0, Sign::value))
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisLabel {
    /// Generator of the `copy`-th sl2 (0-based).
    Sl2 { copy: usize, gen: Sl2Gen },
    Tensor(TensorLabel),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Sl2 { copy, gen } => write!(f, "sl2:{}:{}", copy + 1, gen.letter()),
            BasisLabel::Tensor(t) => {
                write!(f, "ten:{}:", t.code)?;
                t.signs.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
            }
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("bad basis label {s:?}"));
        let mut parts = s.split(':');
        let (kind, a, b) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(a), Some(b), None) => (k, a, b),
            _ => return Err(bad()),
        };
        match kind {
            "sl2" => {
                let copy: usize = a.parse().map_err(|_| bad())?;
                let gen = match b {
                    "E" => Sl2Gen::E,
                    "F" => Sl2Gen::F,
                    "H" => Sl2Gen::H,
                    _ => return Err(bad()),
                };
                if copy == 0 {
                    return Err(bad());
                }
                Ok(BasisLabel::Sl2 { copy: copy - 1, gen })
            }
            "ten" => {
                let code: BitWord = a.parse()?;
                let signs = b
                    .chars()
                    .map(|c| match c {
                        '+' => Ok(Sign::Plus),
                        '-' => Ok(Sign::Minus),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(BasisLabel::Tensor(TensorLabel::new(code, signs)?))
            }
            _ => Err(bad()),
        }
    }
}

/// Element of an sl2 copy in the `{E, F, H}` basis.
pub type Sl2Element = Vec<(Sl2Gen, Q)>;

/// `s_{u,v}(w) = ½(⟨w|u⟩v + ⟨w|v⟩u)`.
pub fn s_pair(u: Sign, v: Sign) -> Sl2Element {
    match (u, v) {
        (Sign::Plus, Sign::Plus) => vec![(Sl2Gen::E, -Q::one())],
        (Sign::Minus, Sign::Minus) => vec![(Sl2Gen::F, Q::one())],
        _ => vec![(Sl2Gen::H, half())],
    }
}

/// Which operand supplies the left slot of the pairing at common indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Contraction {
    /// `⟨X_i|Y_i⟩`.
    #[default]
    LeftRight,
    /// `⟨Y_i|X_i⟩`. Applies to products with `c ≠ d` only.
    RightLeft,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct BuildOptions {
    pub contraction: Contraction,
}

/// Contraction `φ_{c,d}(X, Y)`: the scalar from the common indices and the
/// surviving tensor over `c + d`. Returns `None` when the scalar vanishes.
pub fn phi(x: &TensorLabel, y: &TensorLabel, contraction: Contraction) -> Result<Option<(i64, TensorLabel)>> {
    let (c, d) = (x.code, y.code);
    if c.len() != d.len() {
        return Err(Error::input("codewords of different lengths"));
    }
    if c == d {
        return Err(Error::input("phi needs distinct codewords; use phi_diag"));
    }
    let mut scalar = 1;
    let mut signs = Vec::new();
    for i in 0..c.len() {
        match (x.sign_at(i), y.sign_at(i)) {
            (Some(u), Some(v)) => {
                scalar *= match contraction {
                    Contraction::LeftRight => pairing(u, v),
                    Contraction::RightLeft => pairing(v, u),
                };
                if scalar == 0 {
                    return Ok(None);
                }
            }
            (Some(u), None) | (None, Some(u)) => signs.push(u),
            (None, None) => {}
        }
    }
    Ok(Some((scalar, TensorLabel { code: c + d, signs })))
}

/// `φ^i_{c,c}(X, Y) = Π_{j≠i} ⟨X_j|Y_j⟩ · s_{X_i,Y_i}`.
pub fn phi_diag(i: usize, x: &TensorLabel, y: &TensorLabel) -> Result<Sl2Element> {
    if x.code != y.code {
        return Err(Error::input("phi_diag needs two tensors over the same codeword"));
    }
    let (Some(u), Some(v)) = (x.sign_at(i), y.sign_at(i)) else {
        return Err(Error::input(format!("index {} is not in supp({})", i + 1, x.code)));
    };
    let mut scalar = 1;
    for j in x.code.support() {
        if j != i {
            scalar *= pairing(x.sign_at(j).expect("in support"), y.sign_at(j).expect("in support"));
        }
    }
    if scalar == 0 {
        return Ok(vec![]);
    }
    Ok(s_pair(u, v).into_iter().map(|(g, v)| (g, v * Q::from_integer(scalar))).collect())
}

/// A Lie algebra on a labelled basis with structure constants stored for `i < j`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    n: usize,
    basis: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
    /// `upper[i][j - i - 1] = [x_i, x_j]` for `i < j`.
    upper: Vec<Vec<SparseVec>>,
    cartan: Vec<usize>,
}

impl LieAlgebra {
    fn from_parts(n: usize, basis: Vec<BasisLabel>) -> Result<Self> {
        let index: HashMap<BasisLabel, usize> =
            basis.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        if index.len() != basis.len() {
            return Err(Error::input("repeated basis label"));
        }
        let cartan = (0..n)
            .map(|i| {
                index
                    .get(&BasisLabel::Sl2 { copy: i, gen: Sl2Gen::H })
                    .copied()
                    .ok_or_else(|| Error::input(format!("missing label sl2:{}:H", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let dim = basis.len();
        let upper = (0..dim).map(|i| vec![SparseVec::new(); dim - i - 1]).collect();
        Ok(LieAlgebra { n, basis, index, upper, cartan })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of sl2 copies (the rank of the torus).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Positions of the `h_i ⊗ t_i`.
    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    /// `[x_i, x_j]` as `(sign, stored vector)`; the sign is `0` on the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> (i64, &SparseVec) {
        use std::cmp::Ordering;
        static ZERO: SparseVec = SparseVec::EMPTY;
        match i.cmp(&j) {
            Ordering::Less => (1, &self.upper[i][j - i - 1]),
            Ordering::Greater => (-1, &self.upper[j][i - j - 1]),
            Ordering::Equal => (0, &ZERO),
        }
    }

    /// `[x_i, x_j]` as an owned vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        let (s, v) = self.entry(i, j);
        match s {
            1 => v.clone(),
            -1 => v.scaled(-Q::one()),
            _ => SparseVec::new(),
        }
    }

    /// Overwrites `[x_i, x_j]` (and hence `[x_j, x_i]`); intended for mutation tests.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: SparseVec) -> Result<()> {
        let dim = self.dim();
        if i >= dim || j >= dim || i == j || value.max_index().is_some_and(|k| k >= dim) {
            return Err(Error::input(format!("invalid bracket slot ({i}, {j})")));
        }
        if i < j {
            self.upper[i][j - i - 1] = value;
        } else {
            self.upper[j][i - j - 1] = value.scaled(-Q::one());
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        let dim = self.dim();
        if x.max_index().is_some_and(|k| k >= dim) || y.max_index().is_some_and(|k| k >= dim) {
            return Err(Error::input(format!("vector outside a {dim}-dimensional algebra")));
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for &(i, a) in x.terms() {
            for &(j, b) in y.terms() {
                let (s, v) = self.entry(i, j);
                if s == 0 {
                    continue;
                }
                let f = a * b * Q::from_integer(s);
                terms.extend(v.terms().iter().map(|&(k, c)| (k, f * c)));
            }
        }
        SparseVec::from_terms(terms)
    }

    /// `[x_i, y]` for a basis element `x_i`.
    pub(crate) fn ad_basis(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for &(j, b) in y.terms() {
            let (s, v) = self.entry(i, j);
            if s == 0 {
                continue;
            }
            let f = b * Q::from_integer(s);
            terms.extend(v.terms().iter().map(|&(k, c)| (k, f * c)));
        }
        SparseVec::from_terms(terms)
    }

    pub fn to_json(&self) -> StructureConstantsJson {
        let mut brackets = Vec::new();
        for (i, row) in self.upper.iter().enumerate() {
            for (off, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let terms = v
                    .terms()
                    .iter()
                    .map(|(k, c)| {
                        let [num, den] = to_pair(c);
                        (*k, num, den)
                    })
                    .collect();
                brackets.push((i, i + off + 1, terms));
            }
        }
        StructureConstantsJson {
            schema: SCHEMA.to_string(),
            dim: self.dim(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
            brackets,
        }
    }

    pub fn from_json(json: &StructureConstantsJson) -> Result<Self> {
        if json.schema != SCHEMA {
            return Err(Error::input(format!("unsupported schema {:?}", json.schema)));
        }
        if json.dim != json.basis.len() {
            return Err(Error::input(format!(
                "dim {} but {} basis labels",
                json.dim,
                json.basis.len()
            )));
        }
        let basis = json
            .basis
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BasisLabel>>>()?;
        let n = basis
            .iter()
            .filter_map(|l| match l {
                BasisLabel::Sl2 { copy, .. } => Some(copy + 1),
                BasisLabel::Tensor(_) => None,
            })
            .max()
            .unwrap_or(0);
        for l in &basis {
            if let BasisLabel::Tensor(t) = l {
                if t.code.len() != n {
                    return Err(Error::input(format!("label {l} has length {} but rank is {n}", t.code.len())));
                }
            }
        }
        let mut alg = LieAlgebra::from_parts(n, basis)?;
        let mut seen = std::collections::HashSet::new();
        for (i, j, terms) in &json.brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= json.dim {
                return Err(Error::input(format!("bracket index pair ({i}, {j}) is not i < j < dim")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::input(format!("bracket ({i}, {j}) listed twice")));
            }
            let v = terms
                .iter()
                .map(|&(k, num, den)| {
                    if k >= json.dim {
                        return Err(Error::input(format!("basis index {k} out of range")));
                    }
                    Ok((k, from_pair(num, den)?))
                })
                .collect::<Result<Vec<_>>>()?;
            alg.upper[i][j - i - 1] = SparseVec::from_terms(v);
        }
        Ok(alg)
    }
}

/// `(index, coefficient numerator, denominator)`.
pub type IndexedTerm = (usize, i64, i64);

/// Serialized structure constants; rationals as `[numerator, denominator]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub schema: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<IndexedTerm>)>,
}

pub fn build_lie_algebra(a: &CoordinateAlgebra) -> Result<LieAlgebra> {
    build_lie_algebra_with(a, BuildOptions::default())
}

/// Basis: `(i, E), (i, F), (i, H)` per copy, then the tensor labels of each
/// `c ∈ S` in order, sign patterns in binary order.
pub fn build_lie_algebra_with(a: &CoordinateAlgebra, options: BuildOptions) -> Result<LieAlgebra> {
    let n = a.n();
    let s = a.support_set();
    let mut coeff: HashMap<(BitWord, BitWord), Q> = HashMap::new();
    let mut mu: HashMap<BitWord, Vec<Q>> = HashMap::new();
    for c in s {
        let m = a.mu(c)?;
        mu.insert(*c, (0..n).map(|i| m.get(&i).copied().unwrap_or_else(Q::zero)).collect());
        for d in s {
            if c != d {
                coeff.insert((*c, *d), a.pair_coefficient(c, d)?);
            }
        }
    }

    let mut basis: Vec<BasisLabel> = (0..n)
        .flat_map(|copy| Sl2Gen::ALL.into_iter().map(move |gen| BasisLabel::Sl2 { copy, gen }))
        .collect();
    for c in s {
        basis.extend((0..1usize << c.weight()).map(|p| BasisLabel::Tensor(TensorLabel::from_pattern(*c, p))));
    }
    let mut alg = LieAlgebra::from_parts(n, basis)?;

    let sl2 = |copy: usize, gen: Sl2Gen| 3 * copy + gen as usize;

    let compute = |x: &BasisLabel, y: &BasisLabel| -> Result<SparseVec> {
        Ok(match (x, y) {
            (BasisLabel::Sl2 { copy: i, gen: g }, BasisLabel::Sl2 { copy: j, gen: h }) => {
                if i != j {
                    return Ok(SparseVec::new());
                }
                let (gen, v) = match (g, h) {
                    (Sl2Gen::H, Sl2Gen::E) => (Sl2Gen::E, 2),
                    (Sl2Gen::E, Sl2Gen::H) => (Sl2Gen::E, -2),
                    (Sl2Gen::H, Sl2Gen::F) => (Sl2Gen::F, -2),
                    (Sl2Gen::F, Sl2Gen::H) => (Sl2Gen::F, 2),
                    (Sl2Gen::E, Sl2Gen::F) => (Sl2Gen::H, 1),
                    (Sl2Gen::F, Sl2Gen::E) => (Sl2Gen::H, -1),
                    _ => return Ok(SparseVec::new()),
                };
                SparseVec::from_terms(vec![(sl2(*i, gen), Q::from_integer(v))])
            }
            (BasisLabel::Sl2 { copy, gen }, BasisLabel::Tensor(t)) => act_on_tensor(&alg, *copy, *gen, t, 1),
            (BasisLabel::Tensor(t), BasisLabel::Sl2 { copy, gen }) => act_on_tensor(&alg, *copy, *gen, t, -1),
            (BasisLabel::Tensor(x), BasisLabel::Tensor(y)) if x.code != y.code => {
                let k = coeff[&(x.code, y.code)];
                if k.is_zero() {
                    return Ok(SparseVec::new());
                }
                match phi(x, y, options.contraction)? {
                    None => SparseVec::new(),
                    Some((scalar, t)) => {
                        let target = alg.index.get(&BasisLabel::Tensor(t)).copied().ok_or_else(|| {
                            Error::Build(format!("e^{} e^{} lands outside S", x.code, y.code))
                        })?;
                        SparseVec::from_terms(vec![(target, k * Q::from_integer(scalar))])
                    }
                }
            }
            (BasisLabel::Tensor(x), BasisLabel::Tensor(y)) => {
                let m = &mu[&x.code];
                let mut terms = Vec::new();
                for i in x.code.support() {
                    for (gen, v) in phi_diag(i, x, y)? {
                        terms.push((sl2(i, gen), m[i] * v));
                    }
                }
                SparseVec::from_terms(terms)
            }
        })
    };

    fn act_on_tensor(alg: &LieAlgebra, copy: usize, gen: Sl2Gen, t: &TensorLabel, sign: i64) -> SparseVec {
        let Some(s) = t.sign_at(copy) else {
            return SparseVec::new();
        };
        let Some((coef, image)) = act(gen, s) else {
            return SparseVec::new();
        };
        let k = t.code.support().iter().position(|&j| j == copy).expect("in support");
        let mut signs = t.signs.clone();
        signs[k] = image;
        let target = alg.index[&BasisLabel::Tensor(TensorLabel { code: t.code, signs })];
        SparseVec::from_terms(vec![(target, Q::from_integer(coef * sign))])
    }

    let dim = alg.dim();
    let mut upper = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim - i - 1);
        for j in i + 1..dim {
            let forward = compute(&alg.basis[i], &alg.basis[j])?;
            let backward = compute(&alg.basis[j], &alg.basis[i])?;
            if backward != forward.scaled(-Q::one()) {
                return Err(Error::Build(format!(
                    "bracket of {} and {} is not antisymmetric",
                    alg.basis[i], alg.basis[j]
                )));
            }
            row.push(forward);
        }
        upper.push(row);
    }
    alg.upper = upper;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::AlgebraKind;
    use crate::coordalg::exceptional;
    use crate::rational::q;

    fn t(code: &str, signs: &str) -> TensorLabel {
        match format!("ten:{code}:{signs}").parse().unwrap() {
            BasisLabel::Tensor(t) => t,
            _ => unreachable!(),
        }
    }

    #[test]
    fn s_pair_values() {
        assert_eq!(s_pair(Sign::Plus, Sign::Minus), vec![(Sl2Gen::H, half())]);
        assert_eq!(s_pair(Sign::Minus, Sign::Plus), vec![(Sl2Gen::H, half())]);
        assert_eq!(s_pair(Sign::Plus, Sign::Plus), vec![(Sl2Gen::E, q(-1))]);
        assert_eq!(s_pair(Sign::Minus, Sign::Minus), vec![(Sl2Gen::F, q(1))]);
    }

    /// `s_{u,v}(w) = ½(⟨w|u⟩v + ⟨w|v⟩u)` evaluated on `v₊, v₋` against the E/F/H action.
    #[test]
    fn s_pair_matches_its_defining_formula() {
        let signs = [Sign::Plus, Sign::Minus];
        for u in signs {
            for v in signs {
                for w in signs {
                    let mut want = [Q::zero(); 2];
                    let slot = |s: Sign| usize::from(s == Sign::Minus);
                    want[slot(v)] += half() * Q::from_integer(pairing(w, u));
                    want[slot(u)] += half() * Q::from_integer(pairing(w, v));
                    let mut got = [Q::zero(); 2];
                    for (g, c) in s_pair(u, v) {
                        if let Some((k, image)) = act(g, w) {
                            got[slot(image)] += c * Q::from_integer(k);
                        }
                    }
                    assert_eq!(got, want, "u={u:?} v={v:?} w={w:?}");
                }
            }
        }
    }

    #[test]
    fn phi_contracts_common_indices() {
        // c = 1110, d = 1011: common {1,3}, survivors u₂ ⊗ v₄
        let x = t("1110", "+-+");
        let y = t("1011", "--+");
        assert_eq!(phi(&x, &y, Contraction::LeftRight).unwrap(), Some((1, t("0101", "-+"))));
        assert_eq!(phi(&x, &y, Contraction::RightLeft).unwrap(), Some((1, t("0101", "-+"))));
        let y = t("1011", "+-+");
        assert_eq!(phi(&x, &y, Contraction::LeftRight).unwrap(), None);
        let x = t("1100", "+-");
        let y = t("0011", "-+");
        assert_eq!(phi(&x, &y, Contraction::LeftRight).unwrap(), Some((1, t("1111", "+--+"))));
        let x = t("1100", "-+");
        let y = t("1010", "+-");
        assert_eq!(phi(&x, &y, Contraction::LeftRight).unwrap(), Some((-1, t("0110", "+-"))));
        assert_eq!(phi(&x, &y, Contraction::RightLeft).unwrap(), Some((1, t("0110", "+-"))));
        assert!(phi(&x, &x, Contraction::LeftRight).is_err());
    }

    #[test]
    fn phi_diag_values() {
        let x = t("1100", "++");
        let y = t("1100", "--");
        assert_eq!(phi_diag(0, &x, &y).unwrap(), vec![(Sl2Gen::H, half())]);
        assert!(phi_diag(0, &x, &x).unwrap().is_empty());
        assert!(phi_diag(2, &x, &y).is_err());
        let x = t("1110", "+-+");
        let y = t("1110", "-+-");
        // ⟨+|−⟩⟨+|−⟩ s_{−,+}
        assert_eq!(phi_diag(1, &x, &y).unwrap(), vec![(Sl2Gen::H, half())]);
    }

    #[test]
    fn dimensions_and_layout() {
        for (kind, dim) in [(AlgebraKind::E7, 133), (AlgebraKind::E8, 248), (AlgebraKind::F4, 52)] {
            let l = build_lie_algebra(&exceptional(kind)).unwrap();
            assert_eq!(l.dim(), dim);
            assert_eq!(l.cartan_indices(), (0..l.rank()).map(|i| 3 * i + 2).collect::<Vec<_>>());
        }
        let l = build_lie_algebra(&exceptional(AlgebraKind::E7)).unwrap();
        assert_eq!(l.basis()[21].to_string(), "ten:1100110:++++");
        assert_eq!(l.basis()[22].to_string(), "ten:1100110:+++-");
        assert_eq!(l.basis()[36].to_string(), "ten:1100110:----");
    }

    #[test]
    fn bracket_examples() {
        let l = build_lie_algebra(&exceptional(AlgebraKind::E7)).unwrap();
        let h1 = SparseVec::unit(2);
        let e1 = SparseVec::unit(0);
        assert_eq!(l.bracket(&h1, &e1).unwrap(), e1.scaled(q(2)));
        for i in 0..l.dim() {
            let x = SparseVec::unit(i);
            assert!(l.bracket(&x, &x).unwrap().is_zero());
        }
        // c_1 = 1100110 has 1 in its support
        let x = l.index_of(&BasisLabel::Tensor(t("1100110", "-++-"))).unwrap();
        assert_eq!(
            l.bracket(&h1, &SparseVec::unit(x)).unwrap(),
            SparseVec::from_terms(vec![(x, q(-1))])
        );
        assert!(l.bracket(&SparseVec::unit(500), &h1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = build_lie_algebra(&exceptional(AlgebraKind::F4)).unwrap();
        let json = l.to_json();
        let back = LieAlgebra::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        let mut bad = json.clone();
        bad.schema = "other".into();
        assert!(LieAlgebra::from_json(&bad).is_err());
        let mut bad = json;
        bad.brackets.push((3, 1, vec![]));
        assert!(LieAlgebra::from_json(&bad).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for s in ["sl2:3:H", "ten:0110:+-"] {
            assert_eq!(s.parse::<BasisLabel>().unwrap().to_string(), s);
        }
        for s in ["sl2:0:E", "ten:0110:+", "ten:0110:+x", "sl2:1:Q", "foo"] {
            assert!(s.parse::<BasisLabel>().is_err(), "{s}");
        }
    }
}
