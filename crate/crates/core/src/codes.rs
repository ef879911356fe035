//! Binary linear codes over F₂.
//!
//! A [`BinaryCode`] is stored by its generator matrix in reduced row-echelon
//! form, so two codes are equal exactly when their row spaces agree.
//! Codeword positions are 0-based internally and printed left to right.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::{Error, Result};

/// Longest word representable by [`BitWord`].
pub const MAX_LEN: usize = 64;

/// A word of `len` bits; bit `i` is coordinate `i` (0-based, leftmost first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: usize,
    bits: u64,
}

impl BitWord {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN, "word length {len} exceeds {MAX_LEN}");
        BitWord { len, bits: 0 }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = BitWord::zero(len);
        w.bits = if len == MAX_LEN { u64::MAX } else { (1u64 << len) - 1 };
        w
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = BitWord::zero(len);
        w.set(i, true);
        w
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() > MAX_LEN {
            return Err(Error::input(format!("word longer than {MAX_LEN}")));
        }
        let mut w = BitWord::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => w.set(i, true),
                _ => return Err(Error::input(format!("bit value {b} is not 0 or 1"))),
            }
        }
        Ok(w)
    }

    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::input(format!("word longer than {MAX_LEN}")));
        }
        let mut w = BitWord::zero(len);
        for &i in support {
            if i >= len {
                return Err(Error::input(format!("support index {i} out of range")));
            }
            w.set(i, true);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn raw(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Standard dot product reduced mod 2.
    pub fn dot(&self, other: &BitWord) -> u8 {
        ((self.bits & other.bits).count_ones() % 2) as u8
    }

    pub fn overlap(&self, other: &BitWord) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn lowest_set(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Applies a coordinate permutation: bit `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> BitWord {
        let mut w = BitWord::zero(self.len);
        for i in self.support() {
            w.set(perm[i], true);
        }
        w
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl Add for BitWord {
    type Output = BitWord;

    fn add(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.len, rhs.len, "adding words of different lengths");
        BitWord { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::input(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BitWord::from_bits(&bits)
    }
}

/// Names of the codes shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinCode {
    /// Hamming [7,4,3].
    Hamming7,
    /// Simplex [7,3,4] with columns reversed relative to the Hamming check matrix.
    Simplex7,
    /// Extended Hamming [8,4,4].
    ExtHamming8,
    /// Even-weight words of length 4.
    Even4,
}

impl BuiltinCode {
    pub const ALL: [BuiltinCode; 4] = [
        BuiltinCode::Hamming7,
        BuiltinCode::Simplex7,
        BuiltinCode::ExtHamming8,
        BuiltinCode::Even4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinCode::Hamming7 => "hamming7",
            BuiltinCode::Simplex7 => "simplex7",
            BuiltinCode::ExtHamming8 => "exthamming8",
            BuiltinCode::Even4 => "even4",
        }
    }

    /// Generator rows exactly as printed for each code.
    pub fn rows(self) -> &'static [&'static str] {
        match self {
            BuiltinCode::Hamming7 => &["1110000", "1001100", "0101010", "1101001"],
            BuiltinCode::Simplex7 => &["1010101", "1100110", "1111000"],
            BuiltinCode::ExtHamming8 => &["11110000", "11001100", "10101010", "01101001"],
            BuiltinCode::Even4 => &["1100", "0110", "1111"],
        }
    }
}

impl FromStr for BuiltinCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinCode::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::input(format!("unknown code name {s:?}")))
    }
}

/// A linear subspace of F₂ⁿ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryCode {
    n: usize,
    generator: Vec<BitWord>,
}

impl BinaryCode {
    /// Row-reduces `rows` into a canonical generator matrix.
    pub fn from_generator(rows: &[BitWord], n: usize) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::input(format!("code length {n} exceeds {MAX_LEN}")));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::input(format!(
                "row {bad} has length {}, expected {n}",
                bad.len()
            )));
        }
        Ok(BinaryCode { n, generator: rref(rows.to_vec()) })
    }

    pub fn builtin(code: BuiltinCode) -> Self {
        let rows: Vec<BitWord> = code.rows().iter().map(|r| r.parse().unwrap()).collect();
        let n = rows[0].len();
        BinaryCode::from_generator(&rows, n).expect("builtin generator is well formed")
    }

    pub fn builtin_by_name(name: &str) -> Result<Self> {
        Ok(BinaryCode::builtin(name.parse()?))
    }

    pub fn zero_code(n: usize) -> Self {
        BinaryCode { n, generator: Vec::new() }
    }

    pub fn full_space(n: usize) -> Self {
        let rows: Vec<BitWord> = (0..n).map(|i| BitWord::unit(n, i)).collect();
        BinaryCode::from_generator(&rows, n).expect("unit rows")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[BitWord] {
        &self.generator
    }

    fn pivots(&self) -> Vec<usize> {
        self.generator.iter().map(|r| r.lowest_set().unwrap()).collect()
    }

    /// All 2^k codewords. Message `m` is read as a k-bit string whose first
    /// (most significant) bit selects the first generator row, and messages
    /// run in increasing binary order, so the zero word comes first.
    pub fn codewords(&self) -> Vec<BitWord> {
        let k = self.dimension();
        (0u64..1 << k)
            .map(|m| {
                self.generator
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| (m >> (k - 1 - r)) & 1 == 1)
                    .fold(BitWord::zero(self.n), |acc, (_, row)| acc + *row)
            })
            .collect()
    }

    pub fn dual(&self) -> BinaryCode {
        let pivots = self.pivots();
        let rows: Vec<BitWord> = (0..self.n)
            .filter(|col| !pivots.contains(col))
            .map(|free| {
                let mut v = BitWord::unit(self.n, free);
                for (row, &p) in self.generator.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BinaryCode::from_generator(&rows, self.n).expect("dual rows have code length")
    }

    /// Membership via the syndrome against the dual code.
    pub fn contains(&self, w: &BitWord) -> bool {
        w.len() == self.n && self.dual().generator.iter().all(|h| h.dot(w) == 0)
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.generator.iter().all(|r| other.contains(r))
    }

    pub fn weight_enumerator(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for w in self.codewords() {
            counts[w.weight()] += 1;
        }
        counts
    }

    /// Minimum positive weight; `None` for the zero code.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.weight_enumerator()
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }

    /// `[n,k,d]` label; `d` is omitted for the zero code.
    pub fn parameters_label(&self) -> String {
        match self.minimum_distance() {
            Some(d) => format!("[{},{},{}]", self.n, self.dimension(), d),
            None => format!("[{},{}]", self.n, self.dimension()),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<BinaryCode> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from code length"));
        }
        let rows: Vec<BitWord> = self.generator.iter().map(|r| r.permuted(perm)).collect();
        BinaryCode::from_generator(&rows, self.n)
    }

    /// Parses the text format: a header line `n k` followed by `k` rows of
    /// `n` characters from `{0,1}`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::input("empty code file"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::input(format!("bad header token {t:?}"))))
            .collect::<Result<_>>()?;
        let [n, k] = nums[..] else {
            return Err(Error::input("header must be `n k`"));
        };
        let rows: Vec<BitWord> = lines.map(str::parse).collect::<Result<_>>()?;
        if rows.len() != k {
            return Err(Error::input(format!("expected {k} rows, found {}", rows.len())));
        }
        BinaryCode::from_generator(&rows, n)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.dimension());
        for r in &self.generator {
            s.push_str(&r.to_bit_string());
            s.push('\n');
        }
        s
    }
}

fn rref(mut rows: Vec<BitWord>) -> Vec<BitWord> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                *row = *row + pivot;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}
