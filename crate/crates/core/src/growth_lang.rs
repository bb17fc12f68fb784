//! The regular language of normal-form words over `x0^{±1}, x1^{±1}` that
//! spans the Cayley graph, its seven-state automaton and its growth series.
//!
//! A word belongs to the language when it contains none of the factors
//! `xi^{±1} xi^{∓1}`, `x1^{±1} x0^n x1` (`n >= 1`) or
//! `x1^{±1} x0^{n+1} x1^-1` (`n >= 1`).

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::{GenWord, Letter, Sign, TWO_GENERATORS};
use crate::Count;

/// Automaton state, numbered 1 to 7 by the class of words it tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum State {
    /// 1: the empty word.
    Empty,
    /// 2: `x0^k`, `k >= 1`.
    PowerOfX0,
    /// 3: ends with `x0^-1`.
    EndsX0Inv,
    /// 4: ends with `x1`.
    EndsX1,
    /// 5: ends with `x1^-1`.
    EndsX1Inv,
    /// 6: ends with `x1^{±1} x0`.
    EndsX1X0,
    /// 7: ends with `x1^{±1} x0^k`, `k >= 2`.
    EndsX1X0Sq,
}

impl State {
    pub const ALL: [State; 7] = [
        State::Empty,
        State::PowerOfX0,
        State::EndsX0Inv,
        State::EndsX1,
        State::EndsX1Inv,
        State::EndsX1X0,
        State::EndsX1X0Sq,
    ];

    /// 1-based class number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn next(self, letter: Letter) -> Option<State> {
        use State::*;
        let x0 = Letter::pos(0);
        let x0i = Letter::neg(0);
        let x1 = Letter::pos(1);
        let x1i = Letter::neg(1);
        // Appending x1 or x1^-1 lands in 4 or 5 unless it completes a
        // forbidden factor; x0^-1 lands in 3 unless it cancels an x0.
        let s = match self {
            Empty => match letter {
                l if l == x0 => PowerOfX0,
                l if l == x0i => EndsX0Inv,
                l if l == x1 => EndsX1,
                _ => EndsX1Inv,
            },
            PowerOfX0 => match letter {
                l if l == x0 => PowerOfX0,
                l if l == x1 => EndsX1,
                l if l == x1i => EndsX1Inv,
                _ => return None,
            },
            EndsX0Inv => match letter {
                l if l == x0i => EndsX0Inv,
                l if l == x1 => EndsX1,
                l if l == x1i => EndsX1Inv,
                _ => return None,
            },
            EndsX1 => match letter {
                l if l == x1 => EndsX1,
                l if l == x0 => EndsX1X0,
                l if l == x0i => EndsX0Inv,
                _ => return None,
            },
            EndsX1Inv => match letter {
                l if l == x1i => EndsX1Inv,
                l if l == x0 => EndsX1X0,
                l if l == x0i => EndsX0Inv,
                _ => return None,
            },
            EndsX1X0 => match letter {
                l if l == x0 => EndsX1X0Sq,
                l if l == x1i => EndsX1Inv,
                _ => return None,
            },
            EndsX1X0Sq => match letter {
                l if l == x0 => EndsX1X0Sq,
                _ => return None,
            },
        };
        Some(s)
    }
}

/// The transition matrix: entry `[i][j]` counts letters moving state `i+1`
/// to state `j+1`.
pub fn transition_matrix() -> [[u8; 7]; 7] {
    let mut a = [[0u8; 7]; 7];
    for s in State::ALL {
        for l in TWO_GENERATORS {
            if let Some(t) = s.next(l) {
                a[s as usize][t as usize] += 1;
            }
        }
    }
    a
}

fn check_two_generator(w: &GenWord) -> Result<()> {
    match w.letters.iter().find(|l| l.index > 1) {
        Some(l) => Err(Error::Domain(format!("letter {l} is outside x0, x1"))),
        None => Ok(()),
    }
}

/// Membership by direct scan for forbidden factors.
pub fn is_l_word(w: &GenWord) -> Result<bool> {
    check_two_generator(w)?;
    let ls = &w.letters;
    if ls.windows(2).any(|p| p[0] == p[1].inverse()) {
        return Ok(false);
    }
    for (p, l) in ls.iter().enumerate() {
        if l.index != 1 {
            continue;
        }
        let zeros = ls[p + 1..].iter().take_while(|m| **m == Letter::pos(0)).count();
        match ls.get(p + 1 + zeros) {
            Some(m) if m.index == 1 && m.sign == Sign::Pos && zeros >= 1 => return Ok(false),
            Some(m) if m.index == 1 && m.sign == Sign::Neg && zeros >= 2 => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// Final state of the automaton, or `None` if the word is rejected. Letters
/// with index above 1 are rejected.
pub fn run_automaton(w: &GenWord) -> Option<State> {
    w.letters.iter().try_fold(State::Empty, |s, &l| if l.index > 1 { None } else { s.next(l) })
}

/// Number of language words of each length `0..=max_n`, by iterating
/// per-state path counts through the transition matrix.
pub fn series_in<T: Clone + Zero + One>(max_n: usize) -> Vec<T> {
    let a = transition_matrix();
    let mut v: Vec<T> = vec![T::zero(); 7];
    v[0] = T::one();
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        out.push(v.iter().fold(T::zero(), |acc, x| acc + x.clone()));
        if n == max_n {
            break;
        }
        let mut next = vec![T::zero(); 7];
        for (i, row) in a.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                for _ in 0..e {
                    next[j] = next[j].clone() + v[i].clone();
                }
            }
        }
        v = next;
    }
    out
}

pub fn series(max_n: usize) -> Vec<Count> {
    series_in(max_n)
}

pub fn count_words(n: usize) -> Count {
    series(n).pop().expect("series is nonempty")
}

/// Largest length accepted by [`count_words_bruteforce`].
pub const BRUTEFORCE_MAX_LEN: usize = 16;

/// Exhaustive count of words of length `n` passing [`is_l_word`]. The
/// language is closed under taking factors, so prefixes outside it are pruned.
pub fn count_words_bruteforce(n: usize) -> Result<Count> {
    if n > BRUTEFORCE_MAX_LEN {
        return Err(Error::SizeLimit { what: format!("brute-force length {n}"), limit: BRUTEFORCE_MAX_LEN });
    }
    fn go(prefix: &mut GenWord, n: usize) -> u64 {
        if prefix.len() == n {
            return 1;
        }
        let mut total = 0;
        for l in TWO_GENERATORS {
            prefix.letters.push(l);
            if is_l_word(prefix).expect("two-generator word") {
                total += go(prefix, n);
            }
            prefix.letters.pop();
        }
        total
    }
    Ok(BigUint::from(go(&mut GenWord::empty(), n)))
}

/// Checks `c_n = 4 c_{n-1} - 4 c_{n-2} + c_{n-3}` for every `4 <= n < len`.
pub fn satisfies_recurrence(c: &[Count]) -> bool {
    (4..c.len()).all(|n| &c[n] + 4u32 * &c[n - 2] == 4u32 * &c[n - 1] + &c[n - 3])
}

/// `c_N / c_{N-1}`; tends to `(3 + sqrt 5) / 2`.
pub fn rate_estimate<S: Scalar>(depth: usize) -> Result<S> {
    if depth < 4 {
        return Err(Error::Domain(format!("rate estimate needs depth >= 4, got {depth}")));
    }
    let c = series(depth);
    Ok(S::from_big(&c[depth]) / S::from_big(&c[depth - 1]))
}

/// `(3 + sqrt 5) / 2`.
pub fn golden_rate() -> f64 {
    (3.0 + 5f64.sqrt()) / 2.0
}

#[derive(Debug, Clone, Serialize)]
pub struct CollisionReport {
    pub max_len: usize,
    /// Number of language words of length at most `max_len`.
    pub words: usize,
    /// Number of distinct group elements they represent.
    pub distinct_elements: usize,
    /// Pairs of distinct words representing the same element.
    pub collisions: Vec<(String, String)>,
}

impl CollisionReport {
    pub fn is_injective(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Maps every language word of length at most `max_len` to its element and
/// reports coincidences.
pub fn collision_check(max_len: usize) -> Result<CollisionReport> {
    if max_len > 12 {
        return Err(Error::SizeLimit { what: format!("collision check length {max_len}"), limit: 12 });
    }
    let mut seen: HashMap<String, GenWord> = HashMap::new();
    let mut collisions = Vec::new();
    let mut words = 0;
    let mut stack = vec![(GenWord::empty(), State::Empty, Diagram::identity())];
    while let Some((w, s, d)) = stack.pop() {
        words += 1;
        let key = d.key();
        if let Some(prev) = seen.get(&key) {
            collisions.push((prev.to_string(), w.to_string()));
        } else {
            seen.insert(key, w.clone());
        }
        if w.len() == max_len {
            continue;
        }
        for l in TWO_GENERATORS {
            if let Some(t) = s.next(l) {
                let mut v = w.clone();
                v.letters.push(l);
                stack.push((v, t, d.mul_letter(l)));
            }
        }
    }
    Ok(CollisionReport { max_len, words, distinct_elements: seen.len(), collisions })
}
