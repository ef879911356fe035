//! Octonions, the split algebra `O ⊗ R[ε]` (with `ε² = 1`), and the sign
//! tables read off from them for the E7, E8 and F4 coordinate algebras.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::codes::BitWord;
use crate::rational::Q;
use crate::{Error, Result};

/// Basis names in table order.
pub const OCTONION_BASIS: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

/// Products of basis octonions: `(sign, index)` with `e_a · e_b = sign · e_index`.
#[rustfmt::skip]
pub const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Octonion(pub [Q; 8]);

impl Octonion {
    pub fn basis(i: usize) -> Self {
        let mut c = [Q::zero(); 8];
        c[i] = Q::from_integer(1);
        Octonion(c)
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    pub fn norm(&self) -> Q {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn conj(&self) -> Self {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Octonion(c)
    }

    pub fn scale(&self, s: Q) -> Self {
        Octonion(self.0.map(|x| x * s))
    }

    /// `±e_i` for a signed basis element, else `None`.
    pub fn as_signed_basis(&self) -> Option<(i64, usize)> {
        let nz: Vec<usize> = (0..8).filter(|&i| !self.0[i].is_zero()).collect();
        match nz[..] {
            [i] if self.0[i] == Q::from_integer(1) => Some((1, i)),
            [i] if self.0[i] == Q::from_integer(-1) => Some((-1, i)),
            _ => None,
        }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        c.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        Octonion(c)
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(self.0.map(|x| -x))
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        oct_mul(&self, &rhs)
    }
}

/// Bilinear extension of [`OCTONION_TABLE`].
pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    let mut out = [Q::zero(); 8];
    for (a, xa) in x.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (b, yb) in y.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (s, k) = OCTONION_TABLE[a][b];
            out[k as usize] += xa * yb * Q::from_integer(s.into());
        }
    }
    Octonion(out)
}

/// An element `a ⊗ 1 + b ⊗ ε` of `O ⊗ R[ε]`, stored as `(a, b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SplitOctonion {
    pub one: Octonion,
    pub eps: Octonion,
}

impl SplitOctonion {
    pub fn new(one: Octonion, eps: Octonion) -> Self {
        SplitOctonion { one, eps }
    }

    pub fn neg(&self) -> Self {
        SplitOctonion { one: -self.one, eps: -self.eps }
    }
}

/// `(a, b)(c, d) = (ac + bd, ad + bc)`.
pub fn split_mul(x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
    SplitOctonion {
        one: x.one * y.one + x.eps * y.eps,
        eps: x.one * y.eps + x.eps * y.one,
    }
}

/// Octonions as Cayley–Dickson doubles of quaternions, independent of
/// [`OCTONION_TABLE`]. Used to validate the static table.
pub mod doubling {
    use super::*;

    pub type Quaternion = [Q; 4];

    pub fn quat_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }

    pub fn quat_conj(a: &Quaternion) -> Quaternion {
        [a[0], -a[1], -a[2], -a[3]]
    }

    fn add(a: &Quaternion, b: &Quaternion) -> Quaternion {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
    }

    fn sub(a: &Quaternion, b: &Quaternion) -> Quaternion {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
    }

    /// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`.
    pub fn double_mul(x: &(Quaternion, Quaternion), y: &(Quaternion, Quaternion)) -> (Quaternion, Quaternion) {
        let (a, b) = x;
        let (c, d) = y;
        (
            sub(&quat_mul(a, c), &quat_mul(&quat_conj(d), b)),
            add(&quat_mul(d, a), &quat_mul(b, &quat_conj(c))),
        )
    }

    /// The basis `1, i, j, k, l, il, jl, kl` with `l = (0, 1)` and `xl := x·l`.
    pub fn basis() -> Vec<(Quaternion, Quaternion)> {
        let zero = [Q::zero(); 4];
        let unit = |i: usize| {
            let mut q = zero;
            q[i] = Q::from_integer(1);
            q
        };
        let l = (zero, unit(0));
        let mut out: Vec<_> = (0..4).map(|i| (unit(i), zero)).collect();
        for i in 1..4 {
            out.push(double_mul(&(unit(i), zero), &l));
        }
        out.insert(4, l);
        out
    }

    /// Multiplication table of the doubled basis, expressed in that basis.
    pub fn table() -> [[(i8, u8); 8]; 8] {
        let b = basis();
        let mut t = [[(0i8, 0u8); 8]; 8];
        for (x, row) in t.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                let p = double_mul(&b[x], &b[y]);
                let neg = (p.0.map(|v| -v), p.1.map(|v| -v));
                *cell = b
                    .iter()
                    .enumerate()
                    .find_map(|(k, e)| {
                        if *e == p {
                            Some((1, k as u8))
                        } else if *e == neg {
                            Some((-1, k as u8))
                        } else {
                            None
                        }
                    })
                    .expect("product of basis elements is a signed basis element");
            }
        }
        t
    }
}

/// Which exceptional algebra a table or coordinate algebra belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum AlgebraKind {
    E7,
    E8,
    F4,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::E7 => "E7",
            AlgebraKind::E8 => "E8",
            AlgebraKind::F4 => "F4",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e7" => Ok(AlgebraKind::E7),
            "e8" => Ok(AlgebraKind::E8),
            "f4" => Ok(AlgebraKind::F4),
            _ => Err(Error::input(format!("unknown algebra type {s:?}"))),
        }
    }
}

/// The scalars `ε(c, d)` on pairs of codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignTable {
    pub algebra: AlgebraKind,
    /// Codewords in the order they are labelled `c_1, c_2, …` (F4 also lists `0` and `1`).
    pub domain: Vec<BitWord>,
    values: BTreeMap<(BitWord, BitWord), i64>,
}

impl SignTable {
    pub fn get(&self, c: &BitWord, d: &BitWord) -> Option<i64> {
        self.values.get(&(*c, *d)).copied()
    }

    pub fn diagonal(&self, c: &BitWord) -> Option<i64> {
        self.get(c, c)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BitWord, &BitWord, i64)> {
        self.values.iter().map(|((c, d), v)| (c, d, *v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pairs `c ≠ d` with `c + d` in the domain violating
    /// `ε(d,c) = (−1)^{|supp c ∩ supp d| + 1} ε(c,d)`.
    pub fn antisymmetry_violations(&self) -> Vec<(BitWord, BitWord)> {
        let mut bad = Vec::new();
        for (&(c, d), &v) in &self.values {
            if c == d || c.is_zero() || d.is_zero() || !self.domain.contains(&(c + d)) {
                continue;
            }
            let sign = if (c.overlap(&d) + 1) % 2 == 0 { 1 } else { -1 };
            if self.get(&d, &c) != Some(sign * v) {
                bad.push((c, d));
            }
        }
        bad
    }

    pub fn to_json(&self) -> SignTableJson {
        SignTableJson {
            algebra: self.algebra.name().to_string(),
            entries: self
                .values
                .iter()
                .map(|((c, d), v)| (c.to_bit_string(), d.to_bit_string(), *v))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignTableJson {
    pub algebra: String,
    pub entries: Vec<(String, String, i64)>,
}

fn words(list: &[&str]) -> Vec<BitWord> {
    list.iter().map(|s| s.parse().expect("literal codeword")).collect()
}

/// The nonzero simplex codewords `c_1..c_7`. The printed list labels the last
/// one `c_6` a second time; it is `c_3 + c_4` and is used here as `c_7`.
pub fn e7_codewords() -> Vec<BitWord> {
    words(&["1100110", "0110011", "1010101", "1111000", "0011110", "1001011", "0101101"])
}

/// The extended Hamming codewords `c_1..c_14` (excluding `0` and `1`).
pub fn e8_codewords() -> Vec<BitWord> {
    words(&[
        "11001100", "01100110", "10101010", "11110000", "00111100", "10010110", "01011010",
        "00110011", "10011001", "01010101", "00001111", "11000011", "01101001", "10100101",
    ])
}

/// Table order for F4: `0, c_1, c_2, c_3, 1, c_4, c_5, c_6`.
pub fn f4_codewords() -> Vec<BitWord> {
    words(&["0000", "1100", "0110", "1010", "1111", "0011", "1001", "0101"])
}

/// Reads `ε(c,d)` from `b(c)·b(d) = ε(c,d)·b(c+d)` for an assignment `b` of
/// signed basis elements, skipping pairs whose sum has no assigned element.
fn table_from_assignment<T: Copy + PartialEq>(
    algebra: AlgebraKind,
    domain: Vec<BitWord>,
    assign: &BTreeMap<BitWord, T>,
    mul: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
) -> SignTable {
    let mut values = BTreeMap::new();
    for c in &domain {
        for d in &domain {
            let Some(target) = assign.get(&(*c + *d)) else {
                continue;
            };
            let p = mul(&assign[c], &assign[d]);
            let s = if p == *target {
                1
            } else if p == neg(target) {
                -1
            } else {
                panic!("assignment is not a group isomorphism modulo sign at ({c}, {d})");
            };
            values.insert((*c, *d), s);
        }
    }
    SignTable { algebra, domain, values }
}

/// Signs of the octonion table under `c_1..c_7 ↦ i, j, k, l, il, jl, kl`, `0 ↦ 1`.
pub fn sign_table_e7() -> SignTable {
    let domain = e7_codewords();
    let mut assign = BTreeMap::new();
    assign.insert(BitWord::zero(7), Octonion::one());
    for (k, c) in domain.iter().enumerate() {
        assign.insert(*c, Octonion::basis(k + 1));
    }
    table_from_assignment(AlgebraKind::E7, domain, &assign, oct_mul, |x| -*x)
}

/// Signed basis of `O ⊗ R[ε]` assigned to `c_1..c_14`: `i⊗1 … kl⊗1`,
/// `i⊗ε, j⊗ε, k⊗ε`, then `−l⊗ε, −(il)⊗ε, −(jl)⊗ε, −(kl)⊗ε`.
pub fn e8_assignment() -> Vec<SplitOctonion> {
    let zero = Octonion::default();
    let mut out = Vec::new();
    for k in 1..8 {
        out.push(SplitOctonion::new(Octonion::basis(k), zero));
    }
    for k in 1..4 {
        out.push(SplitOctonion::new(zero, Octonion::basis(k)));
    }
    for k in 4..8 {
        out.push(SplitOctonion::new(zero, -Octonion::basis(k)));
    }
    out
}

/// Signs of `O ⊗ R[ε]` on the extended Hamming code. Pairs with `c + d = 1`
/// have no entry: their product lands on `±1⊗ε`, which is not an e-basis
/// element.
pub fn sign_table_e8() -> SignTable {
    let domain = e8_codewords();
    let zero = Octonion::default();
    let mut assign = BTreeMap::new();
    assign.insert(BitWord::zero(8), SplitOctonion::new(Octonion::one(), zero));
    for (c, b) in domain.iter().zip(e8_assignment()) {
        assign.insert(*c, b);
    }
    table_from_assignment(AlgebraKind::E8, domain, &assign, split_mul, SplitOctonion::neg)
}

/// The F4 scalars, transcribed row by row in the order of [`f4_codewords`].
#[rustfmt::skip]
pub const F4_TABLE: [[i64; 8]; 8] = [
    [1,  1,  1,  1,  1,  1,  1,  1],
    [1, -2,  1,  1,  1, -2, -1, -1],
    [1,  1, -2,  1,  1, -1, -2, -1],
    [1,  1,  1, -2,  1, -1, -1, -2],
    [1, -1, -1, -1, -1,  1,  1,  1],
    [1,  2, -1, -1, -1, -2, -1, -1],
    [1, -1,  2, -1, -1, -1, -2, -1],
    [1, -1, -1,  2, -1, -1, -1, -2],
];

pub fn sign_table_f4() -> SignTable {
    let domain = f4_codewords();
    let mut values = BTreeMap::new();
    for (a, c) in domain.iter().enumerate() {
        for (b, d) in domain.iter().enumerate() {
            values.insert((*c, *d), F4_TABLE[a][b]);
        }
    }
    SignTable { algebra: AlgebraKind::F4, domain, values }
}

pub fn sign_table(kind: AlgebraKind) -> SignTable {
    match kind {
        AlgebraKind::E7 => sign_table_e7(),
        AlgebraKind::E8 => sign_table_e8(),
        AlgebraKind::F4 => sign_table_f4(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(name: &str) -> Octonion {
        Octonion::basis(OCTONION_BASIS.iter().position(|n| *n == name).unwrap())
    }

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn octonion_products() {
        assert_eq!(b("i") * b("j"), b("k"));
        assert_eq!(b("il") * b("jl"), -b("k"));
        for x in 0..8 {
            assert_eq!(Octonion::one() * Octonion::basis(x), Octonion::basis(x));
        }
    }

    #[test]
    fn table_matches_cayley_dickson() {
        assert_eq!(doubling::table(), OCTONION_TABLE);
    }

    #[test]
    fn alternative_and_multiplicative_norm_on_basis() {
        for x in 0..8 {
            for y in 0..8 {
                let (x, y) = (Octonion::basis(x), Octonion::basis(y));
                assert_eq!(x * (x * y), (x * x) * y);
                assert_eq!((y * x) * x, y * (x * x));
                assert_eq!((x * y).norm(), x.norm() * y.norm());
            }
        }
    }

    #[test]
    fn split_products() {
        let zero = Octonion::default();
        let p = |a, bb| SplitOctonion::new(a, bb);
        assert_eq!(split_mul(&p(b("i"), zero), &p(b("j"), zero)), p(b("k"), zero));
        assert_eq!(split_mul(&p(b("i"), zero), &p(zero, b("j"))), p(zero, b("k")));
        assert_eq!(split_mul(&p(zero, b("l")), &p(zero, b("l"))), p(-Octonion::one(), zero));
    }

    #[test]
    fn e7_signs() {
        let t = sign_table_e7();
        let c = e7_codewords();
        assert_eq!(t.get(&c[4], &c[5]), Some(-1));
        assert_eq!(t.get(&c[0], &c[1]), Some(1));
        assert!(c.iter().all(|x| t.diagonal(x) == Some(-1)));
        assert_eq!(t.len(), 49);
        assert!(t.antisymmetry_violations().is_empty());
    }

    #[test]
    fn e8_signs() {
        let t = sign_table_e8();
        let c = e8_codewords();
        assert_eq!(c[0] + c[8], c[9]);
        assert_eq!(t.get(&c[0], &c[8]), Some(1));
        assert!(c.iter().all(|x| t.diagonal(x) == Some(-1)));
        assert_eq!(c[0] + c[7], BitWord::ones(8));
        assert_eq!(t.get(&c[0], &c[7]), None);
        assert_eq!(t.len(), 14 * 14 - 14);
        assert!(t.antisymmetry_violations().is_empty());
    }

    #[test]
    fn e8_restricts_to_e7() {
        let (t7, t8) = (sign_table_e7(), sign_table_e8());
        let (c7, c8) = (e7_codewords(), e8_codewords());
        let truncate = |x: &BitWord| -> BitWord {
            BitWord::from_support(7, &x.support().into_iter().filter(|&i| i < 7).collect::<Vec<_>>()).unwrap()
        };
        for i in 0..7 {
            assert_eq!(truncate(&c8[i]), c7[i]);
            for j in 0..7 {
                assert_eq!(t8.get(&c8[i], &c8[j]), t7.get(&c7[i], &c7[j]));
            }
        }
    }

    #[test]
    fn f4_signs() {
        let t = sign_table_f4();
        assert_eq!(t.get(&w("1100"), &w("1100")), Some(-2));
        assert_eq!(t.get(&w("0011"), &w("1100")), Some(2));
        assert_eq!(t.get(&w("1111"), &w("1111")), Some(-1));
        assert!(t.antisymmetry_violations().is_empty());
    }
}
