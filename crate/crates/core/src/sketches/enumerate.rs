use super::{Letter, Sketch};
use crate::error::{Error, Result};

/// Guard on `(m + 1) n`, the number of letters of a sketch.
pub const MAX_SKETCH_LETTERS: usize = 12;

/// All positive words on the given variables: every `(i, k)`, `k in [0, m]`,
/// once, satisfying the order conditions. Built letter by letter; appending
/// `(i, k)` with `k >= 1` is allowed only if every placed `(j, l)` with
/// `l >= 1` has `(j, l - 1)` before `(i, k - 1)`.
pub fn positive_words(vars: &[usize], m: usize) -> Vec<Vec<Letter>> {
    let total = vars.len() * (m + 1);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(total);
    let mut next = vec![0usize; vars.len()];
    // pos[v][k]: index in `word` of letter (vars[v], k)
    let mut pos = vec![vec![usize::MAX; m + 1]; vars.len()];
    extend(vars, m, total, &mut word, &mut next, &mut pos, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    vars: &[usize],
    m: usize,
    total: usize,
    word: &mut Vec<Letter>,
    next: &mut [usize],
    pos: &mut [Vec<usize>],
    out: &mut Vec<Vec<Letter>>,
) {
    if word.len() == total {
        out.push(word.clone());
        return;
    }
    for v in 0..vars.len() {
        let k = next[v];
        if k > m {
            continue;
        }
        if k >= 1 {
            let mine = pos[v][k - 1];
            let blocked = word.iter().any(|l| {
                l.power >= 1 && {
                    let w = vars.iter().position(|&x| x == l.var).expect("known variable");
                    pos[w][l.power - 1] > mine
                }
            });
            if blocked {
                continue;
            }
        }
        pos[v][k] = word.len();
        word.push(Letter::new(vars[v], k));
        next[v] += 1;
        extend(vars, m, total, word, next, pos, out);
        next[v] -= 1;
        word.pop();
        pos[v][k] = usize::MAX;
    }
}

/// All sketches for `(n, m)` in lexicographic order.
pub fn enumerate_sketches(n: usize, m: usize) -> Result<Vec<Sketch>> {
    enumerate_sketches_with_limit(n, m, MAX_SKETCH_LETTERS)
}

/// As [`enumerate_sketches`] with the guard on `(m + 1) n` set to `limit`.
pub fn enumerate_sketches_with_limit(n: usize, m: usize, limit: usize) -> Result<Vec<Sketch>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and m >= 1".into()));
    }
    if (m + 1) * n > limit {
        return Err(Error::Guard {
            what: format!("sketches with {} letters", (m + 1) * n),
            limit: limit as u64,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let positive: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let negative: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 0).collect();
        let after = positive_words(&positive, m);
        let before = positive_words(&negative, m);
        for rev in &before {
            let w1: Vec<Letter> = rev.iter().rev().copied().collect();
            for w2 in &after {
                out.push(Sketch::new(n, m, w1.clone(), w2.clone())?);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{factorial, raney};

    #[test]
    fn small_cases() {
        let s = enumerate_sketches(1, 1).unwrap();
        let text: Vec<String> = s.iter().map(|s| s.to_string()).collect();
        assert_eq!(text, vec!["0 1^0 1^1", "1^1 1^0 0"]);
        assert_eq!(enumerate_sketches(2, 1).unwrap().len(), 10);
        assert_eq!(enumerate_sketches(3, 2).unwrap().len(), 180);
    }

    #[test]
    fn counts_match_raney() {
        for n in 1..=4 {
            for m in 1..=3 {
                if (m + 1) * n > 10 {
                    continue;
                }
                let all = enumerate_sketches(n, m).unwrap();
                assert_eq!(
                    num_bigint::BigUint::from(all.len()),
                    factorial(n) * raney(n, m, 2).unwrap(),
                    "n={n} m={m}"
                );
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn brute_force_positive_words() {
        use itertools::Itertools;
        // every permutation filtered by the validity test
        for (vars, m) in [(vec![1, 2], 2), (vec![1, 2, 3], 1), (vec![2, 4], 1)] {
            let letters: Vec<Letter> = vars
                .iter()
                .flat_map(|&v| (0..=m).map(move |k| Letter::new(v, k)))
                .collect();
            let mut brute: Vec<Vec<Letter>> = letters
                .iter()
                .copied()
                .permutations(letters.len())
                .filter(|w| super::super::is_positive_word(w, m))
                .collect();
            brute.sort();
            let mut fast = positive_words(&vars, m);
            fast.sort();
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_sketches(5, 2), Err(Error::Guard { .. })));
    }
}
