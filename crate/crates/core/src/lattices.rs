//! Construction A lattices, their roots, and identification of finite root
//! systems.
//!
//! Vectors are kept in doubled integer coordinates: a [`RootVector`] with
//! coordinates `v` stands for the real vector `v/√2`, so the lattice pairing
//! is `dot(u, v)/2` and a lattice root has `dot(v, v) = 4`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codes::BinaryCode;
use crate::rational::Q;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &RootVector) -> i64 {
        assert_eq!(self.dim(), other.dim(), "vectors of different dimension");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// The lattice pairing `dot/2`.
    pub fn inner(&self, other: &RootVector) -> Q {
        Q::new(self.dot(other), 2)
    }

    pub fn norm(&self) -> Q {
        self.inner(self)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `2·e_i` in doubled coordinates.
    pub fn doubled_unit(n: usize, i: usize) -> RootVector {
        let mut v = vec![0; n];
        v[i] = 2;
        RootVector(v)
    }
}

/// All `v ∈ Zⁿ` with `v mod 2 ∈ C` and `dot(v,v) = 4`, sorted.
///
/// These are the `±2e_i` together with every `±1` sign pattern supported on a
/// weight-4 codeword.
pub fn roots_of_code_lattice(code: &BinaryCode) -> Vec<RootVector> {
    let n = code.len();
    let mut roots = Vec::new();
    for i in 0..n {
        let v = RootVector::doubled_unit(n, i);
        roots.push(v.neg());
        roots.push(v);
    }
    for word in code.codewords().into_iter().filter(|w| w.weight() == 4) {
        let support = word.support();
        for pattern in 0u32..16 {
            let mut v = vec![0; n];
            for (bit, &i) in support.iter().enumerate() {
                v[i] = if pattern >> bit & 1 == 1 { -1 } else { 1 };
            }
            roots.push(RootVector(v));
        }
    }
    roots.sort();
    roots
}

/// `n` pairwise orthogonal roots, searched by backtracking with the
/// coordinate vectors `2e_i` tried first.
pub fn orthogonal_root_frame(roots: &[RootVector]) -> Result<Vec<RootVector>> {
    let n = roots.first().ok_or_else(|| Error::input("empty root list"))?.dim();
    let mut candidates: Vec<&RootVector> = roots
        .iter()
        .filter(|r| r.coords().iter().filter(|&&x| x != 0).count() == 1 && r.coords().iter().sum::<i64>() > 0)
        .collect();
    candidates.sort();
    candidates.reverse();
    let rest: Vec<&RootVector> = roots.iter().filter(|r| !candidates.contains(r)).collect();
    candidates.extend(rest);

    fn extend<'a>(
        chosen: &mut Vec<&'a RootVector>,
        candidates: &[&'a RootVector],
        start: usize,
        n: usize,
    ) -> bool {
        if chosen.len() == n {
            return true;
        }
        for (offset, &c) in candidates[start..].iter().enumerate() {
            if chosen.iter().all(|r| r.dot(c) == 0) {
                chosen.push(c);
                if extend(chosen, candidates, start + offset + 1, n) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::new();
    if extend(&mut chosen, &candidates, 0, n) {
        Ok(chosen.into_iter().cloned().collect())
    } else {
        Err(Error::input(format!("no {n} pairwise orthogonal roots")))
    }
}

/// Reflection of `v` in the hyperplane orthogonal to `root`.
pub fn reflect(root: &RootVector, v: &RootVector) -> Result<RootVector> {
    if root.dim() != v.dim() {
        return Err(Error::input("dimension mismatch"));
    }
    let rr = root.dot(root);
    if rr == 0 {
        return Err(Error::input("cannot reflect in a zero vector"));
    }
    let num = 2 * v.dot(root);
    if num % rr != 0 {
        return Err(Error::input(format!(
            "reflection of {v:?} in {root:?} leaves the integer lattice"
        )));
    }
    let k = num / rr;
    Ok(RootVector(v.0.iter().zip(&root.0).map(|(a, b)| a - k * b).collect()))
}

/// Whether the product of the reflections in `frame` is `-1` on Zⁿ.
pub fn minus_one_in_weyl(frame: &[RootVector]) -> Result<bool> {
    let n = frame.first().ok_or_else(|| Error::input("empty frame"))?.dim();
    if frame.len() != n || frame.iter().any(|r| r.dim() != n || r.is_zero()) {
        return Err(Error::input(format!("frame must consist of {n} nonzero vectors in Z^{n}")));
    }
    for (i, a) in frame.iter().enumerate() {
        if frame[i + 1..].iter().any(|b| a.dot(b) != 0) {
            return Err(Error::input("frame vectors are not pairwise orthogonal"));
        }
    }
    // Orthogonal nonzero vectors are independent, so the frame spans.
    for i in 0..n {
        let mut image: Vec<Q> = (0..n).map(|j| Q::from_integer(i64::from(i == j))).collect();
        for r in frame {
            let vr: Q = image.iter().zip(r.coords()).map(|(a, &b)| a * b).sum();
            let k = vr * 2 / Q::from_integer(r.dot(r));
            for (x, &b) in image.iter_mut().zip(r.coords()) {
                *x -= k * b;
            }
        }
        let expected: Vec<Q> = (0..n).map(|j| Q::from_integer(-i64::from(i == j))).collect();
        if image != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tests `2Γ* ⊆ Γ` for `Γ = (1/√2)ρ⁻¹(C)`, where `Γ* = (1/√2)ρ⁻¹(C⊥)`.
///
/// Works with the integer preimages: generators of `ρ⁻¹(C⊥)` are the rows
/// of the dual code and `2e_i`; each doubled generator must reduce mod 2
/// into `C`.
pub fn double_dual_contained(code: &BinaryCode) -> bool {
    let n = code.len();
    let dual = code.dual();
    let mut generators: Vec<Vec<i64>> = dual
        .generator()
        .iter()
        .map(|row| (0..n).map(|i| i64::from(row.get(i))).collect())
        .collect();
    generators.extend((0..n).map(|i| RootVector::doubled_unit(n, i).0));
    generators.iter().all(|g| {
        let doubled: Vec<u8> = g.iter().map(|x| (2 * x).rem_euclid(2) as u8).collect();
        let word = crate::codes::BitWord::from_bits(&doubled).expect("length fits");
        code.contains(&word)
    })
}

/// One irreducible Dynkin type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(r) | SimpleType::B(r) | SimpleType::C(r) | SimpleType::D(r) => r,
            SimpleType::E6 => 6,
            SimpleType::E7 => 7,
            SimpleType::E8 => 8,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    /// Canonical name under the low-rank coincidences `B2 = C2`, `D3 = A3`,
    /// `C1 = B1 = A1`; `D2` is not simple and is rejected by [`DynkinType`].
    fn canonical(self) -> SimpleType {
        match self {
            SimpleType::B(1) | SimpleType::C(1) => SimpleType::A(1),
            SimpleType::C(2) => SimpleType::B(2),
            SimpleType::D(3) => SimpleType::A(3),
            other => other,
        }
    }

    /// Catalog of the irreducible types of rank `r`.
    fn of_rank(r: usize) -> Vec<SimpleType> {
        let mut out = vec![SimpleType::A(r)];
        if r >= 2 {
            out.push(SimpleType::B(r));
        }
        if r >= 3 {
            out.push(SimpleType::C(r));
        }
        if r >= 4 {
            out.push(SimpleType::D(r));
        }
        match r {
            2 => out.push(SimpleType::G2),
            4 => out.push(SimpleType::F4),
            6 => out.push(SimpleType::E6),
            7 => out.push(SimpleType::E7),
            8 => out.push(SimpleType::E8),
            _ => {}
        }
        out
    }

    /// Standard simple roots (scaled to integers).
    fn simple_roots(self) -> Vec<Vec<i64>> {
        let unit = |n: usize, i: usize, s: i64| {
            let mut v = vec![0; n];
            v[i] = s;
            v
        };
        let diff = |n: usize, i: usize, j: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            v
        };
        match self {
            SimpleType::A(r) => (0..r).map(|i| diff(r + 1, i, i + 1)).collect(),
            SimpleType::B(r) => {
                let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                s.push(unit(r, r - 1, 1));
                s
            }
            SimpleType::C(r) => {
                let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                s.push(unit(r, r - 1, 2));
                s
            }
            SimpleType::D(r) => {
                let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                let mut last = vec![0; r];
                last[r - 2] = 1;
                last[r - 1] = 1;
                s.push(last);
                s
            }
            SimpleType::E8 => {
                // Bourbaki simple roots, doubled.
                let mut s = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
                let mut a2 = vec![0; 8];
                a2[0] = 2;
                a2[1] = 2;
                s.push(a2);
                for i in 0..6 {
                    let mut v = vec![0; 8];
                    v[i] = -2;
                    v[i + 1] = 2;
                    s.push(v);
                }
                s
            }
            SimpleType::E7 => SimpleType::E8.simple_roots()[..7].to_vec(),
            SimpleType::E6 => SimpleType::E8.simple_roots()[..6].to_vec(),
            SimpleType::F4 => vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ],
            SimpleType::G2 => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        }
    }

    fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let roots: Vec<RootVector> = self.simple_roots().into_iter().map(RootVector).collect();
        cartan_from_simple(&roots).expect("catalog roots are a root basis")
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(r) => write!(f, "A{r}"),
            SimpleType::B(r) => write!(f, "B{r}"),
            SimpleType::C(r) => write!(f, "C{r}"),
            SimpleType::D(r) => write!(f, "D{r}"),
            SimpleType::E6 => f.write_str("E6"),
            SimpleType::E7 => f.write_str("E7"),
            SimpleType::E8 => f.write_str("E8"),
            SimpleType::F4 => f.write_str("F4"),
            SimpleType::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("unknown Dynkin type {s:?}"));
        let (head, tail) = s.split_at(1.min(s.len()));
        let r: usize = tail.parse().map_err(|_| bad())?;
        let t = match (head, r) {
            ("A", r) if r >= 1 => SimpleType::A(r),
            ("B", r) if r >= 1 => SimpleType::B(r),
            ("C", r) if r >= 1 => SimpleType::C(r),
            ("D", r) if r >= 3 => SimpleType::D(r),
            ("E", 6) => SimpleType::E6,
            ("E", 7) => SimpleType::E7,
            ("E", 8) => SimpleType::E8,
            ("F", 4) => SimpleType::F4,
            ("G", 2) => SimpleType::G2,
            _ => return Err(bad()),
        };
        Ok(t.canonical())
    }
}

/// A (possibly reducible) Dynkin type: a sorted multiset of simple types.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DynkinType(Vec<SimpleType>);

impl DynkinType {
    pub fn new(mut parts: Vec<SimpleType>) -> Self {
        parts.iter_mut().for_each(|p| *p = p.canonical());
        parts.sort();
        DynkinType(parts)
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.0
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Accepts `E7`, `A1+A1`, `C2` (stored as `B2`) and similar.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('+')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<SimpleType>>>()?;
        Ok(DynkinType::new(parts))
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Simple roots, Cartan matrix and type of a finite root system.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystemReport {
    #[serde(rename = "type")]
    pub dynkin_type: DynkinType,
    pub rank: usize,
    pub root_count: usize,
    pub simple_roots: Vec<RootVector>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub long_roots: Vec<RootVector>,
    pub short_roots: Vec<RootVector>,
    #[serde(skip)]
    pub roots: Vec<RootVector>,
}

impl RootSystemReport {
    /// Root subsystem of the long roots (all roots when simply laced).
    pub fn long_root_subsystem(&self) -> Result<RootSystemReport> {
        identify_root_system(&self.long_roots)
    }
}

/// The functional `ℓ(v) = Σ 5^{n-1-i} v_i`. With entries in `[-2, 2]` this is
/// a balanced base-5 expansion, so it vanishes only at `v = 0`.
fn height(v: &RootVector) -> i128 {
    v.coords().iter().fold(0i128, |acc, &x| acc * 5 + i128::from(x))
}

fn cartan_from_simple(simple: &[RootVector]) -> Result<Vec<Vec<i64>>> {
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let (num, den) = (2 * a.dot(b), b.dot(b));
                    if num % den != 0 {
                        return Err(Error::Classification(format!(
                            "non-integral Cartan entry 2({a:?}|{b:?})/({b:?}|{b:?})"
                        )));
                    }
                    Ok(num / den)
                })
                .collect()
        })
        .collect()
}

/// Chooses positive roots with `ℓ`, takes the indecomposable ones as simple
/// roots, and classifies the Cartan matrix by explicit isomorphism against
/// the catalog of connected Dynkin diagrams.
pub fn identify_root_system(roots: &[RootVector]) -> Result<RootSystemReport> {
    let first = roots.first().ok_or_else(|| Error::Classification("empty root set".into()))?;
    let n = first.dim();
    let set: HashSet<&RootVector> = roots.iter().collect();
    for r in roots {
        if r.dim() != n {
            return Err(Error::Classification("roots of different dimension".into()));
        }
        if r.dot(r) <= 0 {
            return Err(Error::Classification(format!("non-positive norm root {r:?}")));
        }
        if r.coords().iter().any(|x| x.abs() > 2) {
            return Err(Error::Classification(format!("coordinate outside [-2,2] in {r:?}")));
        }
        if !set.contains(&r.neg()) {
            return Err(Error::Classification(format!("set not closed under negation at {r:?}")));
        }
    }
    let positive: Vec<&RootVector> = roots.iter().filter(|r| height(r) > 0).collect();
    let pos_set: HashSet<&RootVector> = positive.iter().copied().collect();
    let mut simple: Vec<RootVector> = positive
        .iter()
        .filter(|r| {
            !positive
                .iter()
                .any(|a| height(a) < height(r) && pos_set.contains(&RootVector(r.0.iter().zip(&a.0).map(|(x, y)| x - y).collect())))
        })
        .map(|r| (*r).clone())
        .collect();
    simple.sort_by_key(|r| std::cmp::Reverse(height(r)));
    let cartan = cartan_from_simple(&simple)?;
    for (i, row) in cartan.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j && !(-3..=0).contains(&x) {
                return Err(Error::Classification(format!("Cartan entry {x} at ({i},{j})")));
            }
        }
    }
    let dynkin_type = classify(&cartan)?;

    let max_norm = roots.iter().map(|r| r.dot(r)).max().unwrap();
    let (long_roots, short_roots): (Vec<RootVector>, Vec<RootVector>) =
        roots.iter().cloned().partition(|r| r.dot(r) == max_norm);

    Ok(RootSystemReport {
        dynkin_type,
        rank: simple.len(),
        root_count: roots.len(),
        simple_roots: simple,
        cartan_matrix: cartan,
        long_roots,
        short_roots,
        roots: roots.to_vec(),
    })
}

/// Symmetrised Cartan matrix `D·A` with `D = diag(norm(α_i))/2`, used for
/// the positive-definiteness check.
pub fn symmetrized_cartan(report: &RootSystemReport) -> Vec<Vec<Q>> {
    report
        .simple_roots
        .iter()
        .map(|a| report.simple_roots.iter().map(|b| a.inner(b)).collect())
        .collect()
}

fn classify(cartan: &[Vec<i64>]) -> Result<DynkinType> {
    let r = cartan.len();
    let mut seen = vec![false; r];
    let mut parts = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < component.len() {
            let v = component[k];
            for w in 0..r {
                if !seen[w] && cartan[v][w] != 0 {
                    seen[w] = true;
                    component.push(w);
                }
            }
            k += 1;
        }
        component.sort();
        let sub: Vec<Vec<i64>> = component
            .iter()
            .map(|&i| component.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let found = SimpleType::of_rank(sub.len())
            .into_iter()
            .find(|t| isomorphic(&sub, &t.cartan_matrix()))
            .ok_or_else(|| {
                Error::Classification(format!("unrecognised Dynkin diagram {sub:?}"))
            })?;
        parts.push(found);
    }
    Ok(DynkinType::new(parts))
}

/// Cheap invariant: sorted list of (row multiset) per vertex.
fn vertex_signature(m: &[Vec<i64>], i: usize) -> (Vec<i64>, Vec<i64>) {
    let mut row: Vec<i64> = m[i].clone();
    let mut col: Vec<i64> = m.iter().map(|r| r[i]).collect();
    row.sort();
    col.sort();
    (row, col)
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let r = a.len();
    if r != b.len() {
        return false;
    }
    let sig_a: Vec<_> = (0..r).map(|i| vertex_signature(a, i)).collect();
    let sig_b: Vec<_> = (0..r).map(|i| vertex_signature(b, i)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }

    fn search(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sig_a: &[(Vec<i64>, Vec<i64>)],
        sig_b: &[(Vec<i64>, Vec<i64>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || sig_a[i] != sig_b[j] {
                continue;
            }
            if (0..i).all(|k| a[i][k] == b[j][map[k]] && a[k][i] == b[map[k]][j]) {
                map.push(j);
                used[j] = true;
                if search(a, b, sig_a, sig_b, map, used) {
                    return true;
                }
                used[j] = false;
                map.pop();
            }
        }
        false
    }

    search(a, b, &sig_a, &sig_b, &mut Vec::new(), &mut vec![false; r])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::BuiltinCode;

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    /// Independent enumeration: every v ∈ {-2..2}ⁿ with dot 4 and v mod 2 in C.
    fn brute_force_roots(code: &BinaryCode) -> Vec<RootVector> {
        let n = code.len();
        let mut out = Vec::new();
        let mut v = vec![-2i64; n];
        loop {
            if v.iter().map(|x| x * x).sum::<i64>() == 4 {
                let bits: Vec<u8> = v.iter().map(|x| x.rem_euclid(2) as u8).collect();
                if code.contains(&crate::codes::BitWord::from_bits(&bits).unwrap()) {
                    out.push(RootVector(v.clone()));
                }
            }
            let mut i = 0;
            while i < n && v[i] == 2 {
                v[i] = -2;
                i += 1;
            }
            if i == n {
                break;
            }
            v[i] += 1;
        }
        out.sort();
        out
    }

    #[test]
    fn root_counts_match_brute_force() {
        for (code, count) in [(BuiltinCode::Simplex7, 126), (BuiltinCode::ExtHamming8, 240)] {
            let c = BinaryCode::builtin(code);
            let roots = roots_of_code_lattice(&c);
            assert_eq!(roots.len(), count);
            assert_eq!(roots, brute_force_roots(&c));
        }
        let zero = BinaryCode::zero_code(3);
        assert_eq!(roots_of_code_lattice(&zero).len(), 6);
        assert_eq!(roots_of_code_lattice(&zero), brute_force_roots(&zero));
    }

    #[test]
    fn reflections() {
        let e1 = rv(&[2, 0, 0, 0, 0, 0, 0, 0]);
        let e2 = rv(&[0, 2, 0, 0, 0, 0, 0, 0]);
        assert_eq!(reflect(&e1, &e1).unwrap(), e1.neg());
        assert_eq!(reflect(&e1, &e2).unwrap(), e2);
        // 2·dot(v,r)/dot(r,r) = 2·2/4 = 1, so v - r.
        let r = rv(&[1, 1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(reflect(&r, &e1).unwrap(), rv(&[1, -1, -1, -1, 0, 0, 0, 0]));
        assert!(reflect(&rv(&[0, 0]), &rv(&[1, 0])).is_err());
    }

    #[test]
    fn frames_and_minus_one() {
        for code in [BuiltinCode::Simplex7, BuiltinCode::ExtHamming8] {
            let c = BinaryCode::builtin(code);
            let frame = orthogonal_root_frame(&roots_of_code_lattice(&c)).unwrap();
            let expected: Vec<RootVector> =
                (0..c.len()).map(|i| RootVector::doubled_unit(c.len(), i)).collect();
            assert_eq!(frame, expected);
            assert!(minus_one_in_weyl(&frame).unwrap());
            assert!(double_dual_contained(&c));
        }
        assert_eq!(
            orthogonal_root_frame(&roots_of_code_lattice(&BinaryCode::zero_code(1))).unwrap(),
            vec![rv(&[2])]
        );
        assert!(minus_one_in_weyl(&[rv(&[2])]).unwrap());
        assert!(double_dual_contained(&BinaryCode::zero_code(2)));
        assert!(minus_one_in_weyl(&[rv(&[2, 0])]).is_err());
    }

    #[test]
    fn classify_code_lattices() {
        let e7 = identify_root_system(&roots_of_code_lattice(&BinaryCode::builtin(BuiltinCode::Simplex7))).unwrap();
        assert_eq!(e7.dynkin_type.to_string(), "E7");
        assert_eq!(e7.simple_roots.len(), 7);
        let e8 = identify_root_system(&roots_of_code_lattice(&BinaryCode::builtin(BuiltinCode::ExtHamming8))).unwrap();
        assert_eq!(e8.dynkin_type.to_string(), "E8");
        let a1a1 = identify_root_system(&[rv(&[2, 0]), rv(&[-2, 0]), rv(&[0, 2]), rv(&[0, -2])]).unwrap();
        assert_eq!(a1a1.dynkin_type, "A1+A1".parse().unwrap());
    }

    #[test]
    fn catalog_types_classify_as_themselves() {
        for r in 1..=8 {
            for t in SimpleType::of_rank(r) {
                assert_eq!(classify(&t.cartan_matrix()).unwrap(), DynkinType::new(vec![t]));
            }
        }
    }

    #[test]
    fn even4_long_short_split() {
        let mut roots = roots_of_code_lattice(&BinaryCode::builtin(BuiltinCode::Even4));
        for w in BinaryCode::builtin(BuiltinCode::Even4).codewords() {
            if w.weight() == 2 {
                let s = w.support();
                for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![0; 4];
                    v[s[0]] = a;
                    v[s[1]] = b;
                    roots.push(RootVector(v));
                }
            }
        }
        let report = identify_root_system(&roots).unwrap();
        assert_eq!(report.dynkin_type.to_string(), "F4");
        assert_eq!((report.long_roots.len(), report.short_roots.len()), (24, 24));
        assert_eq!(report.long_root_subsystem().unwrap().dynkin_type.to_string(), "D4");
    }

    #[test]
    fn rejects_non_root_systems() {
        assert!(identify_root_system(&[rv(&[2, 0])]).is_err());
        assert!(identify_root_system(&[]).is_err());
    }

    #[test]
    fn type_names() {
        assert_eq!("C2".parse::<DynkinType>().unwrap(), "B2".parse().unwrap());
        assert_eq!("D3".parse::<DynkinType>().unwrap().to_string(), "A3");
        assert!("D2".parse::<DynkinType>().is_err());
    }
}
