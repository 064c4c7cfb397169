//! Symmetric groups: one-line permutations, words in the Coxeter generators
//! s_i = (i, i+1), left weak order and the coset decomposition
//! S_{n+1} = ⊔_i s_{i+1}⋯s_n S_n.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AtlasError, Result};
use crate::poset::HassePoset;

/// One-line notation, 1-based: `images[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A word s_{i_1}⋯s_{i_l}; letters are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GenWord {
    pub letters: Vec<usize>,
}

impl GenWord {
    pub fn new(letters: Vec<usize>) -> Self {
        GenWord { letters }
    }
    pub fn len(&self) -> usize {
        self.letters.len()
    }
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Coordinates in e_1..e_m; roots live in the sum-zero hyperplane.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootVector {
    pub coords: Vec<i64>,
}

impl RootVector {
    pub fn simple(m: usize, i: usize) -> Self {
        let mut coords = vec![0; m];
        coords[i - 1] = 1;
        coords[i] = -1;
        RootVector { coords }
    }

    /// Coordinates in the basis α_i = e_i − e_{i+1}.
    pub fn alpha_coords(&self) -> Vec<i64> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.coords.len().saturating_sub(1));
        for &c in &self.coords[..self.coords.len() - 1] {
            acc += c;
            out.push(acc);
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        let a = self.alpha_coords();
        a.iter().all(|&x| x >= 0) && a.iter().any(|&x| x > 0)
    }

    pub fn is_negative(&self) -> bool {
        let a = self.alpha_coords();
        a.iter().all(|&x| x <= 0) && a.iter().any(|&x| x < 0)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return Err(AtlasError::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    /// The transposition s_i in S_m.
    pub fn simple(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= m {
            return Err(AtlasError::LetterOutOfRange { letter: i, degree: m });
        }
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// s_i · w: swaps the values i and i+1.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Permutation { images }
    }

    /// w · s_i: swaps the positions i and i+1.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Embeds S_m into S_{m+k} fixing the new points.
    pub fn extend_to(&self, m: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=m);
        Permutation { images }
    }

    /// All permutations of degree m in lexicographic order of their one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(k) = (0..m.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..m).rev().find(|&l| cur[l] > cur[k]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    pub fn longest(m: usize) -> Permutation {
        Permutation { images: (1..=m).rev().collect() }
    }
}

fn check_degree(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.degree() != w.degree() {
        return Err(AtlasError::DegreeMismatch(u.degree(), w.degree()));
    }
    Ok(())
}

/// (uw)(i) = u(w(i)).
pub fn compose(u: &Permutation, w: &Permutation) -> Result<Permutation> {
    check_degree(u, w)?;
    Ok(Permutation { images: w.images.iter().map(|&x| u.apply(x)).collect() })
}

pub fn inversion_length(w: &Permutation) -> usize {
    let v = &w.images;
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

fn check_word(word: &GenWord, m: usize) -> Result<()> {
    for &i in &word.letters {
        if i == 0 || i >= m {
            return Err(AtlasError::LetterOutOfRange { letter: i, degree: m });
        }
    }
    Ok(())
}

/// s_{i_1} s_{i_2} ⋯ s_{i_l} as a permutation of degree m.
pub fn evaluate_word(word: &GenWord, m: usize) -> Result<Permutation> {
    check_word(word, m)?;
    let mut w = Permutation::identity(m);
    for &i in &word.letters {
        w = w.right_mul_simple(i);
    }
    Ok(w)
}

pub fn is_reduced(word: &GenWord, m: usize) -> Result<bool> {
    Ok(inversion_length(&evaluate_word(word, m)?) == word.len())
}

/// Lexicographically smallest reduced word, built by factoring w ← s_i w with the
/// smallest descent i at each step.
pub fn canonical_reduced_word(w: &Permutation) -> GenWord {
    let m = w.degree();
    let mut cur = w.clone();
    let mut letters = Vec::new();
    let mut len = inversion_length(&cur);
    while len > 0 {
        let i = (1..m)
            .find(|&i| {
                // l(s_i w) < l(w) iff i+1 sits to the left of i
                let pi = cur.images.iter().position(|&x| x == i).unwrap();
                let pj = cur.images.iter().position(|&x| x == i + 1).unwrap();
                pj < pi
            })
            .expect("nonidentity permutation has a left descent");
        letters.push(i);
        cur = cur.left_mul_simple(i);
        len -= 1;
    }
    GenWord { letters }
}

/// All words obtained from `word` by one braid or commutation move.
pub fn braid_neighbors(word: &GenWord) -> Vec<GenWord> {
    let l = &word.letters;
    let mut out = Vec::new();
    for k in 0..l.len().saturating_sub(1) {
        let (a, b) = (l[k], l[k + 1]);
        if a.abs_diff(b) >= 2 {
            let mut v = l.clone();
            v.swap(k, k + 1);
            out.push(GenWord { letters: v });
        }
        if k + 2 < l.len() && a.abs_diff(b) == 1 && l[k + 2] == a {
            let mut v = l.clone();
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            out.push(GenWord { letters: v });
        }
    }
    out
}

/// Finds, by braid and commutation moves only, a word equivalent to the reduced
/// `word` whose last letter is `last`.
fn move_to_end(word: &GenWord, last: usize) -> Option<GenWord> {
    if word.letters.last() == Some(&last) {
        return Some(word.clone());
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(cur) = queue.pop_front() {
        for nb in braid_neighbors(&cur) {
            if nb.letters.last() == Some(&last) {
                return Some(nb);
            }
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    None
}

/// Reduces a word using the moves: delete s_i s_i, commute distant letters, and
/// braid s_i s_{i+1} s_i ↔ s_{i+1} s_i s_{i+1}.
pub fn reduce_word(word: &GenWord, m: usize) -> Result<GenWord> {
    check_word(word, m)?;
    let mut prefix = GenWord::default();
    let mut perm = Permutation::identity(m);
    for &i in &word.letters {
        let next = perm.right_mul_simple(i);
        if inversion_length(&next) > prefix.len() {
            prefix.letters.push(i);
        } else {
            // exchange property: the prefix has a reduced form ending in s_i
            let mut moved = move_to_end(&prefix, i).expect("exchange condition");
            moved.letters.pop();
            prefix = moved;
        }
        perm = next;
    }
    Ok(prefix)
}

/// w ≤ w2 in left order: l(w2) = l(w) + l(w2 w^{-1}).
pub fn left_leq(w: &Permutation, w2: &Permutation) -> Result<bool> {
    check_degree(w, w2)?;
    let q = compose(w2, &w.inverse())?;
    Ok(inversion_length(w2) == inversion_length(w) + inversion_length(&q))
}

/// Hasse quiver of the left order: arrows w → s_i w when l(w) > l(s_i w).
/// Vertices are all permutations in lexicographic order; edges carry the letter i.
pub fn weak_left_hasse(m: usize) -> HassePoset<Permutation> {
    let verts = Permutation::all(m);
    let index: std::collections::HashMap<Permutation, usize> =
        verts.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let mut edges = Vec::new();
    for (k, w) in verts.iter().enumerate() {
        let lw = inversion_length(w);
        for i in 1..m {
            let s = w.left_mul_simple(i);
            if inversion_length(&s) < lw {
                edges.push((k, index[&s], i));
            }
        }
    }
    HassePoset::new(verts, edges)
}

/// Writes w = s_{i+1}⋯s_n · v with v(n+1) = n+1. Returns (i, v restricted to S_n).
pub fn coset_factorize(w: &Permutation) -> (usize, Permutation) {
    let m = w.degree();
    assert!(m >= 1);
    let n = m - 1;
    let i = w.apply(m) - 1;
    // v = s_n ⋯ s_{i+1} · w
    let mut v = w.clone();
    for k in i + 1..=n {
        v = v.left_mul_simple(k);
    }
    debug_assert_eq!(v.apply(m), m);
    let images = v.images[..n].to_vec();
    (i, Permutation { images })
}

/// The prefix word s_{i+1} s_{i+2} ⋯ s_n.
pub fn coset_prefix(i: usize, n: usize) -> GenWord {
    GenWord { letters: (i + 1..=n).collect() }
}

/// s_{i_1}⋯s_{i_k}(α_{i_{k+1}}).
pub fn root_after_prefix(word: &GenWord, k: usize, m: usize) -> Result<RootVector> {
    if k == 0 || k + 1 > word.len() {
        return Err(AtlasError::IndexOutOfRange(format!("prefix length {k} for a word of length {}", word.len())));
    }
    let prefix = GenWord { letters: word.letters[..k].to_vec() };
    let u = evaluate_word(&prefix, m)?;
    let j = word.letters[k];
    let mut coords = vec![0i64; m];
    coords[u.apply(j) - 1] += 1;
    coords[u.apply(j + 1) - 1] -= 1;
    Ok(RootVector { coords })
}

/// Every reduced word of w, by closing the canonical one under braid moves.
pub fn all_reduced_words(w: &Permutation) -> Vec<GenWord> {
    let start = canonical_reduced_word(w);
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for nb in braid_neighbors(&cur) {
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    let mut out: Vec<GenWord> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn parse_word(s: &str) -> Result<GenWord> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(GenWord::default());
    }
    let letters = t
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| AtlasError::Parse(format!("bad letter {x:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GenWord { letters })
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.contains(',') {
        let images = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| AtlasError::Parse(format!("bad image {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        return Permutation::new(images);
    }
    // compact form such as [312]
    let images = t
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| AtlasError::Parse(format!("bad image {c:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&Permutation::identity(2), &perm(&[2, 1])).unwrap(), perm(&[2, 1]));
        assert_eq!(compose(&perm(&[2, 1, 3]), &perm(&[1, 3, 2])).unwrap(), perm(&[2, 3, 1]));
        assert_eq!(compose(&perm(&[3, 1, 2]), &perm(&[3, 1, 2])).unwrap(), perm(&[2, 3, 1]));
        assert!(compose(&perm(&[1]), &perm(&[2, 1])).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(inversion_length(&Permutation::identity(4)), 0);
        assert_eq!(inversion_length(&perm(&[3, 2, 1])), 3);
        assert_eq!(inversion_length(&perm(&[2, 4, 1, 3])), 3);
    }

    #[test]
    fn evaluate_examples() {
        assert!(evaluate_word(&GenWord::default(), 3).unwrap().is_identity());
        assert_eq!(evaluate_word(&GenWord::new(vec![1, 2, 1]), 3).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(evaluate_word(&GenWord::new(vec![2, 1]), 3).unwrap(), perm(&[3, 1, 2]));
        assert!(evaluate_word(&GenWord::new(vec![3]), 3).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce_word(&GenWord::new(vec![1, 1]), 2).unwrap().is_empty());
        assert_eq!(reduce_word(&GenWord::new(vec![1, 2, 1]), 3).unwrap().letters, vec![1, 2, 1]);
        assert_eq!(reduce_word(&GenWord::new(vec![2, 1, 1, 2, 2]), 3).unwrap().letters, vec![2]);
    }

    #[test]
    fn canonical_examples() {
        assert!(canonical_reduced_word(&Permutation::identity(3)).is_empty());
        assert_eq!(canonical_reduced_word(&perm(&[3, 2, 1])).letters, vec![1, 2, 1]);
        assert_eq!(canonical_reduced_word(&perm(&[3, 1, 2])).letters, vec![2, 1]);
    }

    #[test]
    fn left_leq_examples() {
        assert!(left_leq(&Permutation::identity(3), &perm(&[3, 2, 1])).unwrap());
        assert!(left_leq(&perm(&[2, 1, 3]), &perm(&[3, 1, 2])).unwrap());
        assert!(!left_leq(&perm(&[2, 1, 3]), &perm(&[1, 3, 2])).unwrap());
    }

    #[test]
    fn hasse_sizes() {
        for (m, e) in [(2, 1), (3, 6), (4, 36)] {
            let h = weak_left_hasse(m);
            assert_eq!(h.edges.len(), e);
        }
    }

    #[test]
    fn coset_examples() {
        let (i, v) = coset_factorize(&Permutation::identity(4));
        assert_eq!((i, v), (3, Permutation::identity(3)));
        let (i, v) = coset_factorize(&perm(&[1, 2, 4, 3]));
        assert_eq!((i, v), (2, Permutation::identity(3)));
        let (i, v) = coset_factorize(&perm(&[3, 2, 1]));
        assert_eq!((i, v), (0, perm(&[2, 1])));
    }

    #[test]
    fn root_examples() {
        let r = root_after_prefix(&GenWord::new(vec![1, 2]), 1, 3).unwrap();
        assert_eq!(r.alpha_coords(), vec![1, 1]);
        assert!(root_after_prefix(&GenWord::new(vec![1]), 1, 2).is_err());
        let r = root_after_prefix(&GenWord::new(vec![2, 1, 2]), 2, 3).unwrap();
        assert_eq!(r.alpha_coords(), vec![1, 0]);
        let r = root_after_prefix(&GenWord::new(vec![1, 1]), 1, 2).unwrap();
        assert!(r.is_negative());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_word("1,2,1").unwrap().letters, vec![1, 2, 1]);
        assert!(parse_word("").unwrap().is_empty());
        assert_eq!(parse_permutation("[3,1,2]").unwrap(), perm(&[3, 1, 2]));
        assert_eq!(parse_permutation("[312]").unwrap(), perm(&[3, 1, 2]));
        assert!(parse_permutation("[1,1]").is_err());
    }
}
