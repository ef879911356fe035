//! Coordinate algebras on `{t_i} ∪ {e^c : c ∈ S}` and a checker for the
//! code-algebra axioms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::codes::{BinaryCode, BitWord, BuiltinCode};
use crate::composition::{AlgebraKind, SignTable};
use crate::rational::{to_pair, Q};
use crate::{Error, Result};

/// Basis label: `T(i)` is `t_{i+1}` (0-based position), `E(c)` is `e^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CoordLabel {
    T(usize),
    E(BitWord),
}

impl fmt::Display for CoordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordLabel::T(i) => write!(f, "t:{}", i + 1),
            CoordLabel::E(c) => write!(f, "e:{c}"),
        }
    }
}

impl FromStr for CoordLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some(("t", i)) => {
                let i: usize = i.parse().map_err(|_| Error::input(format!("bad label {s:?}")))?;
                if i == 0 {
                    return Err(Error::input(format!("bad label {s:?}")));
                }
                Ok(CoordLabel::T(i - 1))
            }
            Some(("e", c)) => Ok(CoordLabel::E(c.parse()?)),
            _ => Err(Error::input(format!("bad label {s:?}"))),
        }
    }
}

/// A linear combination of basis labels.
pub type Combination = Vec<(CoordLabel, Q)>;

#[derive(Clone, Debug)]
pub struct CoordinateAlgebra {
    n: usize,
    s: Vec<BitWord>,
    labels: Vec<CoordLabel>,
    index: BTreeMap<CoordLabel, usize>,
    /// Dense product table over label indices; an empty entry is a product
    /// that is zero by rule, not a missing one.
    table: Vec<Vec<Vec<(usize, Q)>>>,
}

impl CoordinateAlgebra {
    /// Builds the algebra with the standard `t`-rules, `e^c e^d = coeff(c,d) e^{c+d}`
    /// for `c ≠ d` with `c + d ∈ S` (zero otherwise), and
    /// `e^c e^c = Σ_{i ∈ supp c} mu(c, i) t_i`.
    pub fn from_structure(
        n: usize,
        s: Vec<BitWord>,
        coeff: impl Fn(&BitWord, &BitWord) -> Q,
        mu: impl Fn(&BitWord, usize) -> Q,
    ) -> Result<Self> {
        for c in &s {
            if c.len() != n || c.is_zero() {
                return Err(Error::input(format!("invalid codeword {c} in S")));
            }
        }
        let mut labels: Vec<CoordLabel> = (0..n).map(CoordLabel::T).collect();
        labels.extend(s.iter().map(|c| CoordLabel::E(*c)));
        let index: BTreeMap<CoordLabel, usize> =
            labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        if index.len() != labels.len() {
            return Err(Error::input("repeated codeword in S"));
        }
        let mut table = vec![vec![Vec::new(); labels.len()]; labels.len()];
        for (a, la) in labels.iter().enumerate() {
            for (b, lb) in labels.iter().enumerate() {
                let entry: Vec<(usize, Q)> = match (la, lb) {
                    (CoordLabel::T(i), CoordLabel::T(j)) => {
                        if i == j {
                            vec![(a, Q::one())]
                        } else {
                            vec![]
                        }
                    }
                    (CoordLabel::T(i), CoordLabel::E(c)) if c.get(*i) => vec![(b, Q::one())],
                    (CoordLabel::E(c), CoordLabel::T(i)) if c.get(*i) => vec![(a, Q::one())],
                    (CoordLabel::T(_), _) | (_, CoordLabel::T(_)) => vec![],
                    (CoordLabel::E(c), CoordLabel::E(d)) if c == d => c
                        .support()
                        .into_iter()
                        .map(|i| (index[&CoordLabel::T(i)], mu(c, i)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect(),
                    (CoordLabel::E(c), CoordLabel::E(d)) => match index.get(&CoordLabel::E(*c + *d)) {
                        Some(&k) => {
                            let v = coeff(c, d);
                            if v.is_zero() {
                                vec![]
                            } else {
                                vec![(k, v)]
                            }
                        }
                        None => vec![],
                    },
                };
                table[a][b] = entry;
            }
        }
        Ok(CoordinateAlgebra { n, s, labels, index, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support_set(&self) -> &[BitWord] {
        &self.s
    }

    pub fn labels(&self) -> &[CoordLabel] {
        &self.labels
    }

    fn idx(&self, l: &CoordLabel) -> Result<usize> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| Error::input(format!("label {l} is not in the algebra")))
    }

    /// Product of two basis labels.
    pub fn product(&self, a: &CoordLabel, b: &CoordLabel) -> Result<Combination> {
        let (a, b) = (self.idx(a)?, self.idx(b)?);
        Ok(self.table[a][b].iter().map(|&(k, v)| (self.labels[k], v)).collect())
    }

    /// Scalar `k` with `e^c e^d = k e^{c+d}`; zero when the product vanishes.
    /// Errors if the product is not a multiple of `e^{c+d}`.
    pub fn pair_coefficient(&self, c: &BitWord, d: &BitWord) -> Result<Q> {
        let prod = self.product(&CoordLabel::E(*c), &CoordLabel::E(*d))?;
        match prod[..] {
            [] => Ok(Q::zero()),
            [(CoordLabel::E(e), v)] if e == *c + *d => Ok(v),
            _ => Err(Error::Build(format!("e^{c} e^{d} is not a multiple of e^{}", *c + *d))),
        }
    }

    /// `μ_i` in `e^c e^c = Σ μ_i t_i`; errors if the square leaves that span.
    pub fn mu(&self, c: &BitWord) -> Result<BTreeMap<usize, Q>> {
        let prod = self.product(&CoordLabel::E(*c), &CoordLabel::E(*c))?;
        let mut out: BTreeMap<usize, Q> = c.support().into_iter().map(|i| (i, Q::zero())).collect();
        for (l, v) in prod {
            match l {
                CoordLabel::T(i) if c.get(i) => {
                    out.insert(i, v);
                }
                _ => return Err(Error::Build(format!("(e^{c})^2 has a component on {l}"))),
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the basis products.
    pub fn multiply(&self, x: &[(CoordLabel, Q)], y: &[(CoordLabel, Q)]) -> Result<Combination> {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (lx, cx) in x {
            let a = self.idx(lx)?;
            for (ly, cy) in y {
                let b = self.idx(ly)?;
                for &(k, v) in &self.table[a][b] {
                    *acc.entry(k).or_insert_with(Q::zero) += cx * cy * v;
                }
            }
        }
        Ok(acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (self.labels[k], v))
            .collect())
    }

    /// Every basis product lies on a single `e`-label or in the span of the
    /// `t_i` with `i` in the relevant support.
    pub fn closure_holds(&self) -> bool {
        self.s.iter().all(|c| self.mu(c).is_ok())
            && self
                .s
                .iter()
                .all(|c| self.s.iter().filter(|d| *d != c).all(|d| self.pair_coefficient(c, d).is_ok()))
    }

    /// Pairs `c ≠ d` with `c + d ∈ S` where
    /// `coeff(d,c) ≠ (−1)^{|supp c ∩ supp d|+1} coeff(c,d)`.
    pub fn quasi_antisymmetry_violations(&self) -> Vec<(BitWord, BitWord)> {
        let mut bad = Vec::new();
        for c in &self.s {
            for d in &self.s {
                if c == d || !self.s.contains(&(*c + *d)) {
                    continue;
                }
                let sign = if (c.overlap(d) + 1) % 2 == 0 { Q::one() } else { -Q::one() };
                match (self.pair_coefficient(c, d), self.pair_coefficient(d, c)) {
                    (Ok(a), Ok(b)) if b == sign * a => {}
                    _ => bad.push((*c, *d)),
                }
            }
        }
        bad
    }

    pub fn to_json(&self) -> CoordinateAlgebraJson {
        let mut products = Vec::new();
        for (a, row) in self.table.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                products.push((
                    self.labels[a].to_string(),
                    self.labels[b].to_string(),
                    entry
                        .iter()
                        .map(|(k, v)| {
                            let [num, den] = to_pair(v);
                            (self.labels[*k].to_string(), num, den)
                        })
                        .collect(),
                ));
            }
        }
        CoordinateAlgebraJson {
            n: self.n,
            s: self.s.iter().map(BitWord::to_bit_string).collect(),
            products,
        }
    }
}

/// `(label, coefficient numerator, denominator)`.
pub type LabelledTerm = (String, i64, i64);

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoordinateAlgebraJson {
    pub n: usize,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub products: Vec<(String, String, Vec<LabelledTerm>)>,
}

fn expected_code(kind: AlgebraKind) -> BuiltinCode {
    match kind {
        AlgebraKind::E7 => BuiltinCode::Simplex7,
        AlgebraKind::E8 => BuiltinCode::ExtHamming8,
        AlgebraKind::F4 => BuiltinCode::Even4,
    }
}

/// Coordinate algebra of E7, E8 or F4 from its code and sign table.
///
/// `S` is every nonzero codeword for E7 and F4 (including `1` for F4) and
/// every codeword other than `0, 1` for E8, taken in the sign table's order.
/// `μ(c, i) = ε(c, c)` for every `i` in the support.
pub fn build_coordinate_algebra(
    code: &BinaryCode,
    signs: &SignTable,
    kind: AlgebraKind,
) -> Result<CoordinateAlgebra> {
    if signs.algebra != kind {
        return Err(Error::input(format!(
            "sign table is for {}, requested {kind}",
            signs.algebra
        )));
    }
    if *code != BinaryCode::builtin(expected_code(kind)) {
        return Err(Error::input(format!(
            "{kind} is built on the {} code",
            expected_code(kind).name()
        )));
    }
    let n = code.len();
    let ones = BitWord::ones(n);
    let s: Vec<BitWord> = signs
        .domain
        .iter()
        .copied()
        .filter(|c| !c.is_zero() && (kind == AlgebraKind::F4 || *c != ones))
        .collect();
    let mut expected: Vec<BitWord> = code
        .codewords()
        .into_iter()
        .filter(|c| !c.is_zero() && (kind == AlgebraKind::F4 || *c != ones))
        .collect();
    let mut got = s.clone();
    expected.sort();
    got.sort();
    if expected != got {
        return Err(Error::input("sign table domain does not match the code"));
    }
    for c in &s {
        for d in &s {
            if (c == d || s.contains(&(*c + *d))) && signs.get(c, d).is_none() {
                return Err(Error::input(format!("sign table has no entry for ({c}, {d})")));
            }
        }
    }
    CoordinateAlgebra::from_structure(
        n,
        s,
        |c, d| Q::from_integer(signs.get(c, d).unwrap_or(0)),
        |c, _| Q::from_integer(signs.diagonal(c).unwrap_or(0)),
    )
}

/// One verdict per code-algebra axiom, plus commutativity and basis deviations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// `t_i t_j = δ_ij t_i`.
    pub idempotents_orthogonal: bool,
    /// `t_i e^c, e^c t_i ∈ F e^c`.
    pub torus_acts_diagonally: bool,
    /// `e^c e^d ∈ F e^{c+d}` for `c ≠ d, 1 − d`.
    pub products_on_sum: bool,
    /// `(e^c)^2 ∈ Σ_{i ∈ supp c} F t_i`.
    pub squares_in_torus: bool,
    /// `e^c e^{1−c} = 0`.
    pub complements_annihilate: bool,
    pub commutative: bool,
    /// Differences between the basis and `{t_i} ∪ {e^c : c ∈ C ∖ {0, 1}}`.
    pub deviations: Vec<String>,
}

impl AxiomReport {
    /// All axiom clauses hold (commutativity and deviations are reported separately).
    pub fn clauses_pass(&self) -> bool {
        self.idempotents_orthogonal
            && self.torus_acts_diagonally
            && self.products_on_sum
            && self.squares_in_torus
            && self.complements_annihilate
    }
}

/// Exhaustive check of the code-algebra axioms over all basis pairs, with
/// the code taken to be the span of `S`. Clauses quantify over `S ∖ {1}`.
pub fn axiom_report(a: &CoordinateAlgebra) -> AxiomReport {
    let n = a.n;
    let ones = BitWord::ones(n);
    let code = BinaryCode::from_generator(&a.s, n).expect("S words have length n");
    let proper: Vec<BitWord> = a.s.iter().copied().filter(|c| *c != ones).collect();

    let mut deviations = Vec::new();
    if a.s.contains(&ones) {
        deviations.push(format!("basis includes e^{ones}"));
    }
    for c in code.codewords() {
        if !c.is_zero() && c != ones && !a.s.contains(&c) {
            deviations.push(format!("basis lacks e^{c}"));
        }
    }

    let lab = |l: &CoordLabel, v: &Combination| -> bool {
        v.iter().all(|(k, _)| k == l)
    };
    let prod = |x: CoordLabel, y: CoordLabel| a.product(&x, &y).expect("labels belong to the algebra");

    let idempotents_orthogonal = (0..n).all(|i| {
        (0..n).all(|j| {
            let p = prod(CoordLabel::T(i), CoordLabel::T(j));
            if i == j {
                p == vec![(CoordLabel::T(i), Q::one())]
            } else {
                p.is_empty()
            }
        })
    });
    let torus_acts_diagonally = (0..n).all(|i| {
        proper.iter().all(|c| {
            let e = CoordLabel::E(*c);
            lab(&e, &prod(CoordLabel::T(i), e)) && lab(&e, &prod(e, CoordLabel::T(i)))
        })
    });
    let mut products_on_sum = true;
    let mut complements_annihilate = true;
    for c in &proper {
        for d in &proper {
            if c == d {
                continue;
            }
            let p = prod(CoordLabel::E(*c), CoordLabel::E(*d));
            if *c + *d == ones {
                complements_annihilate &= p.is_empty();
            } else {
                products_on_sum &= lab(&CoordLabel::E(*c + *d), &p);
            }
        }
    }
    let squares_in_torus = proper.iter().all(|c| {
        prod(CoordLabel::E(*c), CoordLabel::E(*c))
            .iter()
            .all(|(l, _)| matches!(l, CoordLabel::T(i) if c.get(*i)))
    });
    let commutative = a
        .labels
        .iter()
        .all(|x| a.labels.iter().all(|y| prod(*x, *y) == prod(*y, *x)));

    AxiomReport {
        idempotents_orthogonal,
        torus_acts_diagonally,
        products_on_sum,
        squares_in_torus,
        complements_annihilate,
        commutative,
        deviations,
    }
}

/// Convenience: the coordinate algebra of a built-in exceptional type.
pub fn exceptional(kind: AlgebraKind) -> CoordinateAlgebra {
    let code = BinaryCode::builtin(expected_code(kind));
    build_coordinate_algebra(&code, &crate::composition::sign_table(kind), kind)
        .expect("built-in tables are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{e7_codewords, e8_codewords, sign_table_e7};
    use crate::rational::q;

    fn e(s: &str) -> CoordLabel {
        CoordLabel::E(s.parse().unwrap())
    }

    #[test]
    fn e7_products() {
        let a = exceptional(AlgebraKind::E7);
        let c = e7_codewords();
        assert_eq!(
            a.product(&CoordLabel::E(c[4]), &CoordLabel::E(c[5])).unwrap(),
            vec![(CoordLabel::E(c[2]), q(-1))]
        );
        assert_eq!(
            a.multiply(&[(CoordLabel::E(c[0]), q(1))], &[(CoordLabel::E(c[1]), q(1))]).unwrap(),
            vec![(CoordLabel::E(c[2]), q(1))]
        );
        assert!(a
            .multiply(&[(CoordLabel::T(0), q(1))], &[(CoordLabel::T(1), q(1))])
            .unwrap()
            .is_empty());
        // supp(c_1) = {1, 2, 5, 6} contains positions 0 and 1
        assert_eq!(
            a.multiply(
                &[(CoordLabel::T(0), q(1)), (CoordLabel::T(1), q(1))],
                &[(CoordLabel::E(c[0]), q(1))]
            )
            .unwrap(),
            vec![(CoordLabel::E(c[0]), q(2))]
        );
        assert!(a.multiply(&[(e("1111111"), q(1))], &[(CoordLabel::T(0), q(1))]).is_err());
        assert!(a.closure_holds());
        assert!(a.quasi_antisymmetry_violations().is_empty());
    }

    #[test]
    fn e8_complementary_pairs_vanish() {
        let a = exceptional(AlgebraKind::E8);
        let c = e8_codewords();
        assert!(a.product(&CoordLabel::E(c[0]), &CoordLabel::E(c[7])).unwrap().is_empty());
        assert!(a.quasi_antisymmetry_violations().is_empty());
    }

    #[test]
    fn f4_squares() {
        let a = exceptional(AlgebraKind::F4);
        assert_eq!(
            a.product(&e("1100"), &e("1100")).unwrap(),
            vec![(CoordLabel::T(0), q(-2)), (CoordLabel::T(1), q(-2))]
        );
        assert_eq!(
            a.mu(&"1111".parse().unwrap()).unwrap().values().copied().collect::<Vec<_>>(),
            vec![q(-1); 4]
        );
        assert!(a.quasi_antisymmetry_violations().is_empty());
    }

    #[test]
    fn axiom_reports() {
        for kind in [AlgebraKind::E7, AlgebraKind::E8] {
            let r = axiom_report(&exceptional(kind));
            assert!(r.clauses_pass(), "{kind}: {r:?}");
            assert!(!r.commutative);
            assert!(r.deviations.is_empty());
        }
        let f4 = axiom_report(&exceptional(AlgebraKind::F4));
        assert_eq!(f4.deviations, vec!["basis includes e^1111".to_string()]);
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let simplex = BinaryCode::builtin(BuiltinCode::Simplex7);
        assert!(build_coordinate_algebra(&simplex, &sign_table_e7(), AlgebraKind::E8).is_err());
        let hamming = BinaryCode::builtin(BuiltinCode::Hamming7);
        assert!(build_coordinate_algebra(&hamming, &sign_table_e7(), AlgebraKind::E7).is_err());
    }

    #[test]
    fn labels_parse() {
        assert_eq!("t:3".parse::<CoordLabel>().unwrap(), CoordLabel::T(2));
        assert_eq!("e:0110".parse::<CoordLabel>().unwrap(), e("0110"));
        assert!("t:0".parse::<CoordLabel>().is_err());
        assert!("x:1".parse::<CoordLabel>().is_err());
    }
}
