//! Brute-force reference implementations and generators shared by the
//! integration suites. Nothing here calls the search or construction code
//! under test.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use colorful_tverberg::SimplicialComplex;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Letters = Vec<u32>;

/// Colorfulness straight from the definition: the `d+1` windows of length
/// `r` starting at multiples of `r-1` each contain all `r` letters.
pub fn colorful(w: &[u32], d: usize) -> bool {
    let alphabet: BTreeSet<u32> = w.iter().copied().collect();
    let r = alphabet.len();
    if r < 2 || w.len() != (d + 1) * (r - 1) + 1 {
        return false;
    }
    (0..=d).all(|b| {
        let window: BTreeSet<u32> = w[b * (r - 1)..b * (r - 1) + r].iter().copied().collect();
        window.len() == r
    })
}

/// Calls `f` on every strictly increasing index vector of length `k` below `n`.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if !go(i + 1, n, k, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    go(0, n, k, &mut Vec::with_capacity(k), &mut f);
}

/// Whether some index subset of `w` spells a `d`-colorful word on exactly
/// `sigma`. Singletons follow the occurrence convention.
pub fn has_colorful_subword(w: &[u32], sigma: &[u32], d: usize) -> bool {
    let r = sigma.len();
    if r == 1 {
        return w.contains(&sigma[0]);
    }
    let target: BTreeSet<u32> = sigma.iter().copied().collect();
    let pool: Vec<usize> = (0..w.len()).filter(|&i| target.contains(&w[i])).collect();
    let len = (d + 1) * (r - 1) + 1;
    let mut found = false;
    for_each_combination(pool.len(), len, |idx| {
        let sub: Vec<u32> = idx.iter().map(|&i| w[pool[i]]).collect();
        let alphabet: BTreeSet<u32> = sub.iter().copied().collect();
        found = alphabet == target && colorful(&sub, d);
        !found
    });
    found
}

/// All nonempty faces of `Δ^d(w)`, by checking every index subset.
pub fn delta_faces(w: &[u32], d: usize) -> BTreeSet<Letters> {
    let mut faces: BTreeSet<Letters> = w.iter().map(|&l| vec![l]).collect();
    let n = w.len();
    assert!(n <= 20);
    for mask in 1u32..(1 << n) {
        let sub: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).collect();
        if colorful(&sub, d) {
            let alphabet: BTreeSet<u32> = sub.iter().copied().collect();
            let face: Letters = alphabet.into_iter().collect();
            for sub_face in subsets(&face) {
                faces.insert(sub_face);
            }
        }
    }
    faces
}

/// Nonempty subsets, each sorted.
pub fn subsets(face: &[u32]) -> Vec<Letters> {
    (1u32..(1 << face.len()))
        .map(|m| (0..face.len()).filter(|&i| m >> i & 1 == 1).map(|i| face[i]).collect())
        .collect()
}

/// Nonempty faces of a complex, from its facets.
pub fn faces_of(k: &SimplicialComplex) -> BTreeSet<Letters> {
    k.facets()
        .iter()
        .flat_map(|f| subsets(f.vertices()))
        .collect()
}

/// The least word in shortlex order over the vertices of `k` whose complex
/// is `k`, checking every word up to `max_len`.
pub fn least_representing_word(k: &SimplicialComplex, d: usize, max_len: usize) -> Option<Letters> {
    let letters = k.vertices().to_vec();
    let target = faces_of(k);
    if letters.is_empty() {
        return target.is_empty().then(Vec::new);
    }
    for len in 0..=max_len {
        let mut word = vec![0usize; len];
        loop {
            let w: Letters = word.iter().map(|&i| letters[i]).collect();
            if delta_faces(&w, d) == target {
                return Some(w);
            }
            let Some(pos) = (0..len).rev().find(|&p| word[p] + 1 < letters.len()) else {
                break;
            };
            word[pos] += 1;
            for x in &mut word[pos + 1..] {
                *x = 0;
            }
        }
    }
    None
}

pub fn random_word(rng: &mut impl Rng, max_len: usize, max_alphabet: u32) -> Letters {
    let len = rng.gen_range(0..=max_len);
    let a = rng.gen_range(1..=max_alphabet);
    (0..len).map(|_| rng.gen_range(1..=a)).collect()
}

/// A random `d`-colorful word on `sigma`: a random first block, then each
/// block continues from the previous block's last letter with the other
/// letters in random order.
pub fn random_colorful_word(rng: &mut impl Rng, sigma: &[u32], d: usize) -> Letters {
    let mut w = sigma.to_vec();
    w.shuffle(rng);
    for _ in 0..d {
        let last = *w.last().unwrap();
        let mut rest: Vec<u32> = sigma.iter().copied().filter(|&l| l != last).collect();
        rest.shuffle(rng);
        w.extend(rest);
    }
    w
}

/// Runs one acceptance criterion, prints its verdict line outside the test
/// harness capture and fails the test on a miss or a time overrun.
pub fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (verdict, detail) = match &outcome {
        Ok(msg) if elapsed <= limit => ("PASS", msg.clone()),
        Ok(msg) => ("FAIL", format!("{msg}; exceeded time limit")),
        Err(msg) => ("FAIL", msg.clone()),
    };
    let line = format!(
        "criterion {id:>2} {verdict}: {title}: {detail} [{:.2?} of {:?}]\n",
        elapsed, limit
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert_eq!(verdict, "PASS", "{}", line.trim_end());
}
