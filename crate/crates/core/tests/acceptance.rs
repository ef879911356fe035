//! End-to-end acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use lieforge_core::analysis::{cartan_centralizer, check_jacobi, extract_roots, killing_form, spectra, spectrum_ok};
use lieforge_core::classical::{build_classical, cross_check, Series};
use lieforge_core::codes::{BinaryCode, BuiltinCode};
use lieforge_core::composition::{doubling, oct_mul, AlgebraKind, Octonion, OCTONION_TABLE};
use lieforge_core::coordalg::{axiom_report, exceptional};
use lieforge_core::lattices::{
    double_dual_contained, minus_one_in_weyl, orthogonal_root_frame, roots_of_code_lattice, RootVector,
};
use lieforge_core::liealg::{build_lie_algebra, LieAlgebra};
use lieforge_core::rational::SparseVec;
use lieforge_core::Q;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn exceptional_algebra(kind: AlgebraKind) -> LieAlgebra {
    build_lie_algebra(&exceptional(kind)).expect("built-in algebras build")
}

const KINDS: [AlgebraKind; 3] = [AlgebraKind::E7, AlgebraKind::E8, AlgebraKind::F4];

fn dimensions() -> Outcome {
    for (kind, want) in [(AlgebraKind::E7, 133), (AlgebraKind::E8, 248), (AlgebraKind::F4, 52)] {
        let (l, t) = timed(|| exceptional_algebra(kind));
        ensure(l.dim() == want, || format!("{kind} has dim {}", l.dim()))?;
        ensure(t < Duration::from_secs(1), || format!("{kind} took {t:?}"))?;
    }
    let cases = [
        (Series::C, 1, 3),
        (Series::C, 2, 2 * 4 + 2),
        (Series::C, 3, 2 * 9 + 3),
        (Series::D, 2, 8 * 4 - 4),
        (Series::D, 3, 8 * 9 - 6),
        (Series::B, 1, 8 + 2),
        (Series::B, 2, 8 * 4 + 4),
        (Series::B, 3, 8 * 9 + 6),
    ];
    for (series, n, want) in cases {
        let (m, t) = timed(|| build_classical(series, n));
        let m = m.map_err(|e| format!("{series}{n}: {e}"))?;
        ensure(m.dim() == want, || format!("{series}{n} has dim {}", m.dim()))?;
        ensure(t < Duration::from_secs(1), || format!("{series}{n} took {t:?}"))?;
    }
    Ok("133/248/52 and eight classical cases".into())
}

fn jacobi() -> Outcome {
    let mut times = Vec::new();
    for kind in KINDS {
        let l = exceptional_algebra(kind);
        let (r, t) = timed(|| check_jacobi(&l));
        ensure(r.passed, || format!("{kind}: {:?}", r.witness))?;
        let limit = if kind == AlgebraKind::E8 { 600 } else { 60 };
        ensure(t < Duration::from_secs(limit), || format!("{kind} took {t:?}"))?;
        times.push(format!("{kind} {:.2}s", t.as_secs_f64()));
    }

    // Flip the sign of one tensor-tensor bracket.
    let mut l = exceptional_algebra(AlgebraKind::E7);
    let (i, j) = (21, 21 + 15);
    let original = l.bracket(&SparseVec::unit(i), &SparseVec::unit(j)).unwrap();
    ensure(!original.is_zero(), || "mutation target bracket is zero".into())?;
    l.set_bracket(i, j, original.scaled(-Q::from_integer(1))).unwrap();
    let r = check_jacobi(&l);
    let w = r.witness.ok_or("mutated table passed Jacobi")?;
    // Recompute the residual at the witness directly.
    let [a, b, c] = w.indices.map(SparseVec::unit);
    let br = |x: &SparseVec, y: &SparseVec| l.bracket(x, y).unwrap();
    let sum = br(&a, &br(&b, &c)).add(&br(&b, &br(&c, &a))).add(&br(&c, &br(&a, &b)));
    ensure(!sum.is_zero(), || format!("witness {:?} has zero residual", w.indices))?;
    Ok(format!("{}; mutation caught at {:?}", times.join(", "), w.labels))
}

fn root_systems() -> Outcome {
    for (kind, count, ty) in [(AlgebraKind::E7, 126, "E7"), (AlgebraKind::E8, 240, "E8"), (AlgebraKind::F4, 48, "F4")] {
        let l = exceptional_algebra(kind);
        let r = extract_roots(&l).map_err(|e| format!("{kind}: {e}"))?;
        ensure(r.root_count == count, || format!("{kind}: {} roots", r.root_count))?;
        ensure(r.dynkin_type.to_string() == ty, || format!("{kind}: type {}", r.dynkin_type))?;
        if kind == AlgebraKind::F4 {
            ensure(r.long_roots.len() == 24 && r.short_roots.len() == 24, || {
                format!("f4 long/short {}/{}", r.long_roots.len(), r.short_roots.len())
            })?;
            let long = r.long_root_subsystem().map_err(|e| e.to_string())?;
            ensure(long.dynkin_type.to_string() == "D4", || format!("f4 long roots {}", long.dynkin_type))?;
        } else {
            let code = if kind == AlgebraKind::E7 { BuiltinCode::Simplex7 } else { BuiltinCode::ExtHamming8 };
            let lattice: BTreeSet<RootVector> = roots_of_code_lattice(&BinaryCode::builtin(code)).into_iter().collect();
            let algebra: BTreeSet<RootVector> = r.roots.iter().cloned().collect();
            ensure(lattice == algebra, || format!("{kind}: roots differ from the lattice roots"))?;
        }
    }
    Ok("126 E7, 240 E8, 48 F4 (long D4, 24/24); lattice sets equal".into())
}

fn spectrum() -> Outcome {
    for kind in KINDS {
        let l = exceptional_algebra(kind);
        let s = spectra(&l).map_err(|e| format!("{kind}: {e}"))?;
        ensure(s.len() == l.rank(), || format!("{kind}: {} spectra", s.len()))?;
        for (i, m) in s.iter().enumerate() {
            ensure(spectrum_ok(m), || format!("{kind}: ad(h_{}) spectrum {m:?}", i + 1))?;
        }
    }
    Ok("±2 simple, rest in {0,±1} for every h_i".into())
}

fn semisimplicity() -> Outcome {
    for kind in KINDS {
        let l = exceptional_algebra(kind);
        let k = killing_form(&l);
        ensure(k.nondegenerate(), || format!("{kind}: Killing rank {}", k.rank))?;
        let c = cartan_centralizer(&l);
        ensure(c == l.rank(), || format!("{kind}: centralizer dim {c}"))?;
    }
    Ok("Killing nondegenerate, centralizer dims 7/8/4".into())
}

/// Codewords spanned by the verbatim generator rows, enumerated directly.
fn span(rows: &[&str]) -> Vec<Vec<u8>> {
    let n = rows[0].len();
    let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.bytes().map(|b| b - b'0').collect()).collect();
    let mut words = BTreeSet::new();
    for mask in 0u32..1 << rows.len() {
        let mut w = vec![0u8; n];
        for (k, r) in rows.iter().enumerate() {
            if mask >> k & 1 == 1 {
                w.iter_mut().zip(r).for_each(|(x, y)| *x ^= y);
            }
        }
        words.insert(w);
    }
    words.into_iter().collect()
}

/// Vectors in `{−2..2}^n` of squared length 4 (doubled coordinates) reducing into the code.
fn brute_force_roots(words: &[Vec<u8>], n: usize) -> usize {
    let set: BTreeSet<&Vec<u8>> = words.iter().collect();
    let mut count = 0;
    for idx in 0..5usize.pow(n as u32) {
        let mut v = Vec::with_capacity(n);
        let mut x = idx;
        for _ in 0..n {
            v.push((x % 5) as i64 - 2);
            x /= 5;
        }
        if v.iter().map(|a| a * a).sum::<i64>() == 4 {
            let reduced: Vec<u8> = v.iter().map(|a| a.rem_euclid(2) as u8).collect();
            if set.contains(&reduced) {
                count += 1;
            }
        }
    }
    count
}

fn codes_and_lattices() -> Outcome {
    for (code, want) in [
        (BuiltinCode::Hamming7, vec![1, 0, 0, 7, 7, 0, 0, 1]),
        (BuiltinCode::Simplex7, vec![1, 0, 0, 0, 7, 0, 0, 0]),
        (BuiltinCode::ExtHamming8, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]),
    ] {
        let words = span(code.rows());
        let mut oracle = vec![0u64; want.len()];
        for w in &words {
            oracle[w.iter().filter(|b| **b == 1).count()] += 1;
        }
        let got = BinaryCode::builtin(code).weight_enumerator();
        ensure(got == want && oracle == want, || format!("{}: {got:?} / oracle {oracle:?}", code.name()))?;
    }

    let e8 = BinaryCode::builtin(BuiltinCode::ExtHamming8);
    ensure(e8.dual() == e8, || "extended Hamming code is not self-dual".into())?;
    let words = span(BuiltinCode::ExtHamming8.rows());
    let orthogonal = words
        .iter()
        .all(|a| words.iter().all(|b| a.iter().zip(b).filter(|(x, y)| **x == 1 && **y == 1).count() % 2 == 0));
    ensure(orthogonal && words.len() == 16, || "oracle: code is not self-orthogonal of size 16".into())?;

    for (code, n, want) in [(BuiltinCode::Simplex7, 7, 126), (BuiltinCode::ExtHamming8, 8, 240)] {
        let brute = brute_force_roots(&span(code.rows()), n);
        let c = BinaryCode::builtin(code);
        let roots = roots_of_code_lattice(&c);
        ensure(brute == want && roots.len() == want, || {
            format!("{}: brute force {brute}, enumerated {}", code.name(), roots.len())
        })?;
        let frame = orthogonal_root_frame(&roots).map_err(|e| e.to_string())?;
        ensure(minus_one_in_weyl(&frame).map_err(|e| e.to_string())?, || {
            format!("{}: −1 not in the Weyl group", code.name())
        })?;
        ensure(double_dual_contained(&c), || format!("{}: 2·dual not contained", code.name()))?;
    }
    Ok("enumerators, self-duality, 126/240 roots by brute force, −1 ∈ W".into())
}

fn code_algebra_axioms() -> Outcome {
    for kind in [AlgebraKind::E7, AlgebraKind::E8] {
        let r = axiom_report(&exceptional(kind));
        ensure(r.clauses_pass(), || format!("{kind}: {r:?}"))?;
        ensure(!r.commutative, || format!("{kind}: unexpectedly commutative"))?;
        ensure(r.deviations.is_empty(), || format!("{kind}: deviations {:?}", r.deviations))?;
    }
    let f4 = axiom_report(&exceptional(AlgebraKind::F4));
    ensure(f4.deviations.iter().any(|d| d.contains("e^1111")), || format!("f4: {:?}", f4.deviations))?;
    Ok("E7/E8 pass every clause except commutativity; F4 flags e^1111".into())
}

fn octonions() -> Outcome {
    ensure(doubling::table() == OCTONION_TABLE, || "static table differs from the doubling".into())?;
    let basis: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
    for x in &basis {
        for y in &basis {
            let xx = oct_mul(x, x);
            ensure(oct_mul(&xx, y) == oct_mul(x, &oct_mul(x, y)), || "left alternativity".into())?;
            ensure(oct_mul(&oct_mul(y, x), x) == oct_mul(y, &xx), || "right alternativity".into())?;
            ensure(oct_mul(x, y).norm() == x.norm() * y.norm(), || "norm".into())?;
        }
    }
    // A generic pair as well, since basis pairs alone are degenerate for the norm.
    let a = Octonion([1, 2, -1, 3, 0, 1, -2, 1].map(Q::from_integer));
    let b = Octonion([2, -1, 1, 0, 3, -1, 1, 2].map(Q::from_integer));
    ensure(oct_mul(&a, &b).norm() == a.norm() * b.norm(), || "norm on a generic pair".into())?;
    Ok("Table = doubling; alternative and normed on all 64 basis pairs".into())
}

fn classical() -> Outcome {
    let mut seen = Vec::new();
    for (series, n, ty) in [(Series::C, 2, "B2"), (Series::C, 3, "C3"), (Series::D, 2, "D4"), (Series::B, 1, "B2")] {
        let (r, _) = cross_check(series, n).map_err(|e| format!("{series}{n}: {e}"))?;
        ensure(r.passed(), || format!("{series}{n}: {r:?}"))?;
        ensure(r.dynkin_type.to_string() == ty, || format!("{series}{n}: type {}", r.dynkin_type))?;
        seen.push(format!("{series} n={n} → {}", r.dynkin_type));
    }
    Ok(seen.join(", "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("dimensions", dimensions),
        ("jacobi identity", jacobi),
        ("root systems", root_systems),
        ("ad(h_i) spectrum", spectrum),
        ("semisimplicity", semisimplicity),
        ("codes and lattices", codes_and_lattices),
        ("code-algebra axioms", code_algebra_axioms),
        ("octonion oracle", octonions),
        ("classical cross-check", classical),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(detail) => format!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(why) => {
                failed.push(k + 1);
                format!("criterion {} {name}: FAIL ({why})", k + 1)
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
