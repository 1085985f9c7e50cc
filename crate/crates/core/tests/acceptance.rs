//! Acceptance criteria. Each test prints one verdict line.
//!
//! Run with `cargo test --test acceptance -- --test-threads=1` for
//! uncontended timings.

mod common;

use std::collections::BTreeSet;
use std::time::Duration;

use colorful_tverberg::gd::{build_gd, GdParams};
use colorful_tverberg::geometry::{
    in_general_position, in_strong_general_position, integer, moment_curve, rational, Point,
    PointSequence, Rational,
};
use colorful_tverberg::tverberg::{
    colorful_minimality_check, find_tverberg_partition, nerve, partition_to_word,
    word_to_partition,
};
use colorful_tverberg::words::{
    canonical_word, delete_letter, delta_complex, facet_concat_dimension, facet_concat_word,
    find_colorful_subword, is_colorful, lift_word, Word,
};
use colorful_tverberg::{format, Face, SimplicialComplex};
use common::criterion;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonempty_subsets(n: u32) -> Vec<Face> {
    (1u32..1 << n)
        .map(|m| Face::new((0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1)))
        .collect()
}

/// Strictly increasing random rationals.
fn increasing_rationals(r: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < n {
        set.insert(rational(r.gen_range(-60..=60), r.gen_range(1..=7)));
    }
    set.into_iter().collect()
}

/// The first `2^k ≤ 2^20` for which seven moment-curve points in the plane pass
/// the colorful minimality check with up to three parts.
fn validated_moment_curve() -> Option<(i64, PointSequence)> {
    (1..=20).find_map(|k| {
        let base = 1i64 << k;
        let p = moment_curve(7, 2, &integer(base)).ok()?;
        (in_general_position(&p) && colorful_minimality_check(&p, 2, 3)).then_some((base, p))
    })
}

/// Every word of length `n` over `1..=3`, i.e. every labeled covering
/// partition of `n` points into at most three parts.
fn all_words(n: usize) -> Vec<Word> {
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            Word::new(
                (0..n)
                    .map(|_| {
                        let l = (code % 3) as u32 + 1;
                        code /= 3;
                        l
                    })
                    .collect(),
            )
        })
        .collect()
}

fn nerve_matches_word(p: &PointSequence, word: &Word, d: usize) -> Result<bool, String> {
    let parts = word_to_partition(word, p).map_err(|e| e.to_string())?;
    let n = nerve(p, &parts).map_err(|e| e.to_string())?;
    let w = partition_to_word(p, &parts).map_err(|e| e.to_string())?;
    Ok(n == delta_complex(&w, d))
}

#[test]
fn criterion_01_figure_word_complex() {
    criterion(1, "figure word Δ² has facets 12, 14, 234", SECOND, || {
        let w = Word::from([1, 2, 1, 4, 1, 2, 4, 1, 3, 2, 4, 3, 2]);
        let expected = SimplicialComplex::from_facets([
            Face::from([1, 2]),
            Face::from([1, 4]),
            Face::from([2, 3, 4]),
        ]);
        let got = delta_complex(&w, 2);
        if got == expected {
            Ok("exact match".into())
        } else {
            let facets: Vec<String> = got.facets().iter().map(|f| format!("{{{f}}}")).collect();
            Err(format!("computed facets {}", facets.join(" ")))
        }
    });
}

#[test]
fn criterion_02_three_colorful_example() {
    criterion(2, "3-colorful example word", SECOND, || {
        let w = Word::from([1, 2, 4, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4]);
        let verdicts: Vec<(usize, bool)> = [3, 1, 2, 4].into_iter().map(|d| (d, is_colorful(&w, d))).collect();
        if verdicts == [(3, true), (1, false), (2, false), (4, false)] {
            Ok("colorful for d = 3 only".into())
        } else {
            Err(format!("verdicts {verdicts:?}"))
        }
    });
}

#[test]
fn criterion_03_subword_search_matches_enumeration() {
    criterion(3, "find_colorful_subword vs index-subset enumeration", 5 * MINUTE, || {
        let mut r = rng(3);
        let sigmas = nonempty_subsets(4);
        let mut checks = 0;
        for _ in 0..1000 {
            let letters = common::random_word(&mut r, 14, 4);
            let w = Word::new(letters.clone());
            for sigma in &sigmas {
                for d in 0..=2 {
                    let cert = find_colorful_subword(&w, sigma, d).map_err(|e| e.to_string())?;
                    let expected = common::has_colorful_subword(&letters, sigma.vertices(), d);
                    if cert.is_some() != expected {
                        return Err(format!("W = {w}, σ = {{{sigma}}}, d = {d}: expected {expected}"));
                    }
                    if let Some(c) = cert {
                        let sub: Vec<u32> = c.positions.iter().map(|&p| letters[p]).collect();
                        let ok = if sigma.len() == 1 {
                            sub == sigma.vertices()
                        } else {
                            common::colorful(&sub, d)
                                && sub.iter().copied().collect::<BTreeSet<_>>()
                                    == sigma.vertices().iter().copied().collect()
                        };
                        if !ok || !c.positions.windows(2).all(|p| p[0] < p[1]) {
                            return Err(format!("bad certificate {c} for W = {w}"));
                        }
                    }
                    checks += 1;
                }
            }
        }
        Ok(format!("{checks} (word, σ, d) cases, 0 mismatches"))
    });
}

#[test]
fn criterion_04_letter_deletion_stays_colorful() {
    criterion(4, "delete_letter keeps words colorful", 2 * MINUTE, || {
        let mut r = rng(4);
        let mut cases = 0;
        for size in 3..=5u32 {
            for d in 0..=4 {
                let mut words = vec![canonical_word(&Face::new(1..=size), d)
                    .map_err(|e| e.to_string())?
                    .into_letters()];
                for _ in 0..200 {
                    let mut pool: Vec<u32> = (1..=9).collect();
                    rand::seq::SliceRandom::shuffle(&mut pool[..], &mut r);
                    let sigma = &pool[..size as usize];
                    words.push(common::random_colorful_word(&mut r, sigma, d));
                }
                for letters in words {
                    assert!(common::colorful(&letters, d), "generator produced {letters:?}");
                    let w = Word::new(letters.clone());
                    for &i in w.alphabet().vertices() {
                        let out = delete_letter(&w, i).map_err(|e| format!("W = {w}, i = {i}: {e}"))?;
                        let expected: BTreeSet<u32> = letters.iter().copied().filter(|&l| l != i).collect();
                        let got: BTreeSet<u32> = out.letters().iter().copied().collect();
                        if got != expected || !common::colorful(out.letters(), d) {
                            return Err(format!("W = {w}, i = {i} gave {out}"));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(format!("{cases} deletions, 0 failures"))
    });
}

#[test]
fn criterion_05_facet_concatenation() {
    criterion(5, "facet_concat_word represents K", 10 * MINUTE, || {
        let candidates = nonempty_subsets(5);
        let antichain = |fs: &[&Face]| {
            fs.iter().enumerate().all(|(i, a)| {
                fs.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b))
            })
        };
        let mut complexes = vec![SimplicialComplex::empty()];
        for (i, a) in candidates.iter().enumerate() {
            complexes.push(SimplicialComplex::from_facets([a.clone()]));
            for (j, b) in candidates.iter().enumerate().skip(i + 1) {
                if antichain(&[a, b]) {
                    complexes.push(SimplicialComplex::from_facets([a.clone(), b.clone()]));
                }
                for c in candidates.iter().skip(j + 1) {
                    if antichain(&[a, b, c]) {
                        complexes.push(SimplicialComplex::from_facets([a.clone(), b.clone(), c.clone()]));
                    }
                }
            }
        }
        for k in &complexes {
            let m = k.facets().iter().filter(|f| !f.is_empty()).count();
            if facet_concat_dimension(k) != m + 1 {
                return Err(format!("dimension for {k:?}"));
            }
            let w = facet_concat_word(k);
            if delta_complex(&w, m + 1) != *k {
                return Err(format!("word {w} fails for facets {:?}", k.facets()));
            }
        }
        Ok(format!("{} complexes, 0 failures", complexes.len()))
    });
}

#[test]
fn criterion_06_dimension_lift() {
    criterion(6, "lift_word raises the dimension", 2 * MINUTE, || {
        let mut r = rng(6);
        let mut cases = 0;
        for _ in 0..500 {
            let letters = common::random_word(&mut r, 10, 4);
            let w = Word::new(letters.clone());
            let (lifted, relabel) = lift_word(&w);
            for d in 0..=2 {
                let expected = relabel.apply_complex(&delta_complex(&w, d));
                let got = delta_complex(&lifted, d + 1);
                let oracle_expected: BTreeSet<Vec<u32>> = common::delta_faces(&letters, d)
                    .into_iter()
                    .map(|f| {
                        let mut g: Vec<u32> = f.iter().map(|&v| relabel.apply(v)).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect();
                if got != expected || common::delta_faces(lifted.letters(), d + 1) != oracle_expected {
                    return Err(format!("W = {w}, d = {d}, lift {lifted}"));
                }
                cases += 1;
            }
        }
        Ok(format!("{cases} (word, d) cases, 0 failures"))
    });
}

#[test]
fn criterion_07_nerve_equals_word_complex() {
    criterion(7, "nerve(P, parts) = Δ^d(word of parts)", 20 * MINUTE, || {
        let mut r = rng(7);
        let mut checked = 0;
        for n in [5, 7] {
            let p = PointSequence::on_line(&increasing_rationals(&mut r, n));
            if !colorful_minimality_check(&p, 1, 3) {
                return Err(format!("{n} increasing rationals are not colorfully minimal"));
            }
            for w in all_words(n) {
                if !nerve_matches_word(&p, &w, 1)? {
                    return Err(format!("d = 1, n = {n}, word {w}"));
                }
                checked += 1;
            }
        }
        let (base, p) = validated_moment_curve().ok_or("no moment-curve base up to 2^20 validated")?;
        for _ in 0..200 {
            let w = Word::new((0..7).map(|_| r.gen_range(1..=3)).collect());
            if !nerve_matches_word(&p, &w, 2)? {
                return Err(format!("d = 2, base {base}, word {w}"));
            }
            checked += 1;
        }
        Ok(format!("{checked} partitions, 0 mismatches (d = 2 base {base})"))
    });
}

#[test]
fn criterion_08_colorful_minimality() {
    criterion(8, "minimal Tverberg partitions are the colorful ones", 20 * MINUTE, || {
        let mut r = rng(8);
        for _ in 0..5 {
            let values = increasing_rationals(&mut r, 5);
            let p = PointSequence::on_line(&values);
            if !colorful_minimality_check(&p, 1, 3) {
                let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
                return Err(format!("d = 1 fails on {}", shown.join(" ")));
            }
        }
        let (base, _) = validated_moment_curve().ok_or("no base up to 2^20 passes for d = 2")?;
        Ok(format!("d = 1 on 5 random sets; d = 2 moment curve with base {base}"))
    });
}

#[test]
fn criterion_09_tverberg_existence() {
    criterion(9, "7 points in the plane have a 3-part Tverberg witness", 10 * MINUTE, || {
        let mut r = rng(9);
        let mut sets = 0;
        while sets < 50 {
            let points: Vec<Point> = (0..7)
                .map(|_| {
                    Point::new(
                        (0..2)
                            .map(|_| rational(r.gen_range(-40..=40), r.gen_range(1..=9)))
                            .collect(),
                    )
                })
                .collect();
            let p = PointSequence::new(2, points).map_err(|e| e.to_string())?;
            if !in_general_position(&p) {
                continue;
            }
            let w = find_tverberg_partition(&p, 3).ok_or_else(|| {
                format!("no witness for\n{}", format::render_points(&p))
            })?;
            if w.partition.num_parts() != 3 || !w.verify(&p) {
                return Err(format!("witness fails verification:\n{}", format::render_witness(&w)));
            }
            sets += 1;
        }
        Ok(format!("{sets} point sets, all witnesses verified exactly"))
    });
}

#[test]
fn criterion_10_general_position_predicates() {
    criterion(10, "general position predicates", MINUTE, || {
        let seq = |dim: usize, c: &[&[i64]]| {
            PointSequence::new(dim, c.iter().map(|x| Point::from_integers(x)).collect()).unwrap()
        };
        let square = seq(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        if in_strong_general_position(&square) != Ok(false) {
            return Err("unit square accepted".into());
        }
        for triple in [
            seq(2, &[&[0, 0], &[1, 1], &[2, 2]]),
            seq(2, &[&[0, 3], &[5, 3], &[-2, 3]]),
            seq(3, &[&[0, 0, 0], &[1, 2, 3], &[2, 4, 6]]),
        ] {
            if in_general_position(&triple) {
                return Err("collinear triple accepted".into());
            }
        }
        for line in [seq(1, &[&[0], &[1], &[2]]), seq(1, &[&[-7], &[3], &[1], &[10], &[4]])] {
            if in_strong_general_position(&line) != Ok(true) {
                return Err("points on a line rejected".into());
            }
        }
        Ok("all verdicts exact".into())
    });
}

#[test]
fn criterion_11_invariant_suite() {
    criterion(11, "randomized invariants", 5 * MINUTE, || {
        let mut r = rng(11);
        let mut cases = 0;
        for _ in 0..10_000 {
            let w = Word::new(common::random_word(&mut r, 14, 4));
            let d = r.gen_range(0..=3);
            let k = delta_complex(&w, d);

            for face in k.all_faces().iter().filter(|f| !f.is_empty()) {
                let c = find_colorful_subword(&w, face, d)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("face {{{face}}} of Δ^{d}({w}) lacks a certificate"))?;
                if !c.is_valid_for(&w) {
                    return Err(format!("invalid certificate {c} in {w}"));
                }
                for sub in face.boundary().filter(|s| !s.is_empty()) {
                    if find_colorful_subword(&w, &sub, d).map_err(|e| e.to_string())?.is_none() {
                        return Err(format!("{{{sub}}} ⊂ {{{face}}} missing in {w}"));
                    }
                }
            }
            cases += 1;

            if delta_complex(&w.reduce(), d) != k {
                return Err(format!("reduce changes Δ^{d}({w})"));
            }
            cases += 1;

            let tau = Face::new((1..=4).filter(|_| r.gen_bool(0.5)));
            if delta_complex(&w.restrict(&tau), d) != k.induced(&tau) {
                return Err(format!("restriction to {{{tau}}} of {w}"));
            }
            cases += 1;

            let sigma = Face::new((1..=4).filter(|_| r.gen_bool(0.6)));
            if !sigma.is_empty() {
                if let Some(c) = find_colorful_subword(&w, &sigma, d).map_err(|e| e.to_string())? {
                    if !c.is_valid_for(&w) || !k.is_face(&sigma) {
                        return Err(format!("certificate {c} for {w}"));
                    }
                } else if k.is_face(&sigma) {
                    return Err(format!("face {{{sigma}}} without certificate in {w}"));
                }
            }
            cases += 1;
        }
        Ok(format!("{cases} cases, 0 failures"))
    });
}

#[test]
fn criterion_12_gd_generator() {
    criterion(12, "G_d generator", SECOND, || {
        let params = GdParams::new(2, 1, 1).map_err(|e| e.to_string())?;
        let g = build_gd(params).map_err(|e| e.to_string())?;
        let again = build_gd(params).map_err(|e| e.to_string())?;
        let vertices = g.complex.vertices().len();
        let edges = g.complex.edges().len();
        if vertices != 6 || edges != 4 {
            return Err(format!("{vertices} vertices, {edges} edges"));
        }
        if !g.complex.induced(&g.a).edges().is_empty() {
            return Err("A is not independent".into());
        }
        if g != again || format::render_complex(&g.complex) != format::render_complex(&again.complex) {
            return Err("two runs differ".into());
        }
        Ok("6 vertices, 4 edges, A independent, deterministic".into())
    });
}
