//! Positive braid words and the closure-preserving manipulations used by the
//! skein recursion and the certificate generator.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in the positive generators `σ_1, …, σ_{n-1}` of the braid group on
/// `n` strands. Letters are stored by generator index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveBraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl PositiveBraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: bad,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    /// Skips validation; callers guarantee every letter is in range.
    pub(crate) fn new_unchecked(strands: usize, letters: Vec<usize>) -> Self {
        debug_assert!(strands >= 1 && letters.iter().all(|&l| l >= 1 && l < strands));
        Self { strands, letters }
    }

    /// The trivial word on `strands` strands (closure: the unlink).
    pub fn empty(strands: usize) -> Self {
        Self::new_unchecked(strands.max(1), Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of occurrences of each generator; index 0 is unused.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands];
        for &l in &self.letters {
            counts[l] += 1;
        }
        counts
    }

    pub fn missing_generators(&self) -> Vec<usize> {
        let counts = self.occurrences();
        (1..self.strands).filter(|&i| counts[i] == 0).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.missing_generators().is_empty()
    }

    /// The permutation induced on strand positions (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            perm.swap(l - 1, l);
        }
        perm
    }

    /// Number of components of the closure: cycles of the permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// First index `j` (0-based) with `letters[j] == letters[j + 1]`.
    pub fn square_position(&self) -> Option<usize> {
        self.letters.windows(2).position(|w| w[0] == w[1])
    }

    /// The word with the letter at `pos` (0-based) removed.
    pub fn without(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        Self::new_unchecked(self.strands, letters)
    }

    /// The word with the letters at `pos` and `pos + 1` (0-based) removed.
    pub fn without_pair(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.drain(pos..pos + 2);
        Self::new_unchecked(self.strands, letters)
    }

    /// Splits the closure into connected summands along generators that occur
    /// exactly once. Trivial summands (one strand, no letters) are dropped, so
    /// an empty result means the closure is the unknot.
    pub fn factor_single_occurrence(&self) -> Result<Vec<PositiveBraidWord>> {
        if !self.has_full_support() {
            return Err(Error::MissingSupport(self.to_string()));
        }
        let mut out = Vec::new();
        self.factor_into(&mut out);
        Ok(out)
    }

    fn factor_into(&self, out: &mut Vec<PositiveBraidWord>) {
        let counts = self.occurrences();
        match (1..self.strands).find(|&i| counts[i] == 1) {
            None => {
                if self.strands > 1 {
                    out.push(self.clone());
                }
            }
            Some(i) => {
                let lower: Vec<usize> = self.letters.iter().copied().filter(|&l| l < i).collect();
                let upper: Vec<usize> = self
                    .letters
                    .iter()
                    .filter(|&&l| l > i)
                    .map(|&l| l - i)
                    .collect();
                Self::new_unchecked(i, lower).factor_into(out);
                Self::new_unchecked(self.strands - i, upper).factor_into(out);
            }
        }
    }

    /// Lexicographically smallest cyclic rotation.
    pub fn cyclic_canonical(&self) -> Self {
        Self::new_unchecked(self.strands, min_rotation(&self.letters))
    }

    /// Word on `n_a + n_b - 1` strands whose closure is the connected sum of
    /// the two closures.
    pub fn connected_sum(&self, other: &PositiveBraidWord) -> Self {
        let shift = self.strands - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + shift));
        Self::new_unchecked(self.strands + other.strands - 1, letters)
    }

    /// `(σ_1 σ_2 ⋯ σ_{p-1})^q` on `p` strands.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "torus word needs at least 2 strands, got {p}"
            )));
        }
        let letters = (0..q).flat_map(|_| 1..p).collect();
        Ok(Self::new_unchecked(p, letters))
    }

    /// Searches the words reachable from `self` by cyclic rotation, far
    /// commutation and the braid relation for one containing two equal
    /// adjacent letters. Breadth-first; the visited set is keyed by the
    /// cyclic canonical form.
    pub fn find_square_rewrite(&self) -> Result<PositiveBraidWord> {
        if !self.has_full_support() {
            return Err(Error::MissingSupport(self.to_string()));
        }
        if self.square_position().is_some() {
            return Ok(self.clone());
        }
        let n = self.letters.len();
        let mut visited: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        let start = min_rotation(&self.letters);
        visited.insert(start.clone());
        queue.push_back(self.letters.clone());

        while let Some(word) = queue.pop_front() {
            let rotations = (0..n.max(1)).map(|r| rotate(&word, r));
            let rotations: Vec<Vec<usize>> = rotations.collect();
            for rot in &rotations {
                if has_square(rot) {
                    return Ok(Self::new_unchecked(self.strands, rot.clone()));
                }
            }
            for rot in &rotations {
                for next in linear_moves(rot) {
                    if has_square(&next) {
                        return Ok(Self::new_unchecked(self.strands, next));
                    }
                    let key = min_rotation(&next);
                    if visited.insert(key) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Err(Error::SearchExhausted(self.to_string()))
    }

    /// All full-support words with `2 <= n <= max_strands` strands and
    /// `1 <= ℓ <= max_len` letters, one per cyclic class (the
    /// lexicographically minimal rotation), ordered by `n`, then `ℓ`, then
    /// lexicographically.
    pub fn enumerate(max_strands: usize, max_len: usize) -> WordEnumerator {
        WordEnumerator::new(max_strands, max_len)
    }
}

fn rotate(letters: &[usize], r: usize) -> Vec<usize> {
    let mut v = letters.to_vec();
    if !v.is_empty() {
        v.rotate_left(r % letters.len());
    }
    v
}

fn has_square(letters: &[usize]) -> bool {
    letters.windows(2).any(|w| w[0] == w[1])
}

fn min_rotation(letters: &[usize]) -> Vec<usize> {
    (0..letters.len().max(1))
        .map(|r| rotate(letters, r))
        .min()
        .unwrap_or_default()
}

/// Single applications of far commutation and of the braid relation, at
/// every position, in increasing position order.
fn linear_moves(letters: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[k], letters[k + 1]);
        if a.abs_diff(b) >= 2 {
            let mut v = letters.to_vec();
            v.swap(k, k + 1);
            out.push(v);
        }
    }
    for k in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
        if a == c && a.abs_diff(b) == 1 {
            let mut v = letters.to_vec();
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            out.push(v);
        }
    }
    out
}

/// Iterator behind [`PositiveBraidWord::enumerate`].
pub struct WordEnumerator {
    max_strands: usize,
    max_len: usize,
    strands: usize,
    len: usize,
    // odometer over letters, each in 1..strands
    current: Option<Vec<usize>>,
}

impl WordEnumerator {
    fn new(max_strands: usize, max_len: usize) -> Self {
        let mut e = Self {
            max_strands,
            max_len,
            strands: 2,
            len: 1,
            current: None,
        };
        e.current = e.first_of_block();
        e
    }

    fn first_of_block(&mut self) -> Option<Vec<usize>> {
        while self.strands <= self.max_strands {
            if self.len <= self.max_len {
                return Some(vec![1; self.len]);
            }
            self.strands += 1;
            self.len = 1;
        }
        None
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let top = self.strands - 1;
        let mut i = cur.len();
        while i > 0 {
            i -= 1;
            if cur[i] < top {
                cur[i] += 1;
                return;
            }
            cur[i] = 1;
        }
        self.len += 1;
        self.current = self.first_of_block();
    }
}

impl Iterator for WordEnumerator {
    type Item = PositiveBraidWord;

    fn next(&mut self) -> Option<PositiveBraidWord> {
        loop {
            let letters = self.current.clone()?;
            let strands = self.strands;
            self.advance();
            let word = PositiveBraidWord::new_unchecked(strands, letters);
            if word.has_full_support() && min_rotation(&word.letters) == word.letters {
                return Some(word);
            }
        }
    }
}

impl fmt::Display for PositiveBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for PositiveBraidWord {
    type Err = Error;

    /// Parses `n: l1 l2 ... lk`.
    fn from_str(s: &str) -> Result<Self> {
        let colon = s
            .find(':')
            .ok_or_else(|| Error::parse(s.len(), "expected 'n:' prefix"))?;
        let head = &s[..colon];
        let strands = head
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(0, format!("invalid strand count '{}'", head.trim())))?;
        let letters = parse_letters(&s[colon + 1..], colon + 1, |c| c.is_whitespace())?;
        Self::new(strands, letters)
    }
}

/// Parses a comma-separated letter list such as `1,2,1,2`.
pub fn parse_letter_list(s: &str) -> Result<Vec<usize>> {
    parse_letters(s, 0, |c| c == ',' || c.is_whitespace())
}

fn parse_letters(s: &str, offset: usize, is_sep: impl Fn(char) -> bool) -> Result<Vec<usize>> {
    let mut letters = Vec::new();
    let mut start = None;
    let mut flush = |start: &mut Option<usize>, end: usize| -> Result<()> {
        if let Some(b) = start.take() {
            let tok = &s[b..end];
            let v = tok
                .parse::<usize>()
                .map_err(|_| Error::parse(offset + b, format!("invalid generator '{tok}'")))?;
            letters.push(v);
        }
        Ok(())
    };
    for (i, c) in s.char_indices() {
        if is_sep(c) {
            flush(&mut start, i)?;
        } else if start.is_none() {
            start = Some(i);
        }
    }
    flush(&mut start, s.len())?;
    Ok(letters)
}

impl Serialize for PositiveBraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PositiveBraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> PositiveBraidWord {
        PositiveBraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            PositiveBraidWord::new(3, vec![1, 3]),
            Err(Error::GeneratorOutOfRange {
                index: 3,
                strands: 3
            })
        );
        assert!(PositiveBraidWord::new(2, vec![0]).is_err());
        assert_eq!(PositiveBraidWord::new(0, vec![]), Err(Error::NoStrands));
    }

    #[test]
    fn missing_generators_examples() {
        assert!(w(2, &[1, 1]).missing_generators().is_empty());
        assert_eq!(w(3, &[1, 1, 1]).missing_generators(), vec![2]);
        assert!(w(1, &[]).missing_generators().is_empty());
    }

    #[test]
    fn factor_examples() {
        assert!(w(2, &[1]).factor_single_occurrence().unwrap().is_empty());
        assert_eq!(
            w(3, &[1, 2, 2, 2, 2]).factor_single_occurrence().unwrap(),
            vec![w(2, &[1, 1, 1, 1])]
        );
        assert_eq!(
            w(2, &[1, 1, 1]).factor_single_occurrence().unwrap(),
            vec![w(2, &[1, 1, 1])]
        );
        assert_eq!(
            w(4, &[1, 1, 3, 2, 3, 1])
                .factor_single_occurrence()
                .unwrap(),
            vec![w(2, &[1, 1, 1]), w(2, &[1, 1])]
        );
        assert!(matches!(
            w(3, &[1, 1]).factor_single_occurrence(),
            Err(Error::MissingSupport(_))
        ));
    }

    #[test]
    fn cyclic_canonical_examples() {
        assert_eq!(w(3, &[2, 1, 1]).cyclic_canonical(), w(3, &[1, 1, 2]));
        assert_eq!(w(3, &[1, 2, 1, 2]).cyclic_canonical(), w(3, &[1, 2, 1, 2]));
        assert_eq!(w(2, &[]).cyclic_canonical(), w(2, &[]));
    }

    #[test]
    fn square_rewrite_examples() {
        assert_eq!(
            w(3, &[1, 2, 1, 2]).find_square_rewrite().unwrap(),
            w(3, &[2, 1, 2, 2])
        );
        assert_eq!(
            w(2, &[1, 1, 1]).find_square_rewrite().unwrap(),
            w(2, &[1, 1, 1])
        );
        assert_eq!(
            w(3, &[1, 1, 2, 2]).find_square_rewrite().unwrap(),
            w(3, &[1, 1, 2, 2])
        );
        // square across the cyclic seam
        assert_eq!(
            w(3, &[1, 2, 1]).find_square_rewrite().unwrap(),
            w(3, &[2, 1, 1])
        );
    }

    #[test]
    fn square_rewrite_preserves_length_and_permutation_type() {
        let word = w(4, &[1, 2, 3, 1, 2, 3]);
        let r = word.find_square_rewrite().unwrap();
        assert_eq!(r.len(), word.len());
        assert_eq!(r.strands(), word.strands());
        assert!(r.square_position().is_some());
        assert_eq!(r.closure_components(), word.closure_components());
    }

    #[test]
    fn connected_sum_examples() {
        let hopf = w(2, &[1, 1]);
        assert_eq!(hopf.connected_sum(&hopf), w(3, &[1, 1, 2, 2]));
        assert_eq!(
            w(2, &[1, 1, 1]).connected_sum(&w(2, &[1, 1, 1, 1, 1])),
            w(3, &[1, 1, 1, 2, 2, 2, 2, 2])
        );
        let b = w(3, &[1, 2, 1]);
        assert_eq!(w(1, &[]).connected_sum(&b), b);
    }

    #[test]
    fn torus_examples() {
        assert_eq!(PositiveBraidWord::torus(2, 2).unwrap(), w(2, &[1, 1]));
        assert_eq!(
            PositiveBraidWord::torus(3, 3).unwrap(),
            w(3, &[1, 2, 1, 2, 1, 2])
        );
        assert_eq!(
            PositiveBraidWord::torus(3, 4).unwrap(),
            w(3, &[1, 2, 1, 2, 1, 2, 1, 2])
        );
        assert!(PositiveBraidWord::torus(1, 3).is_err());
    }

    #[test]
    fn closure_components() {
        assert_eq!(w(2, &[1, 1]).closure_components(), 2);
        assert_eq!(w(2, &[1, 1, 1]).closure_components(), 1);
        assert_eq!(
            PositiveBraidWord::torus(3, 3).unwrap().closure_components(),
            3
        );
        assert_eq!(
            PositiveBraidWord::torus(3, 4).unwrap().closure_components(),
            1
        );
        assert_eq!(w(3, &[]).closure_components(), 3);
    }

    #[test]
    fn enumerate_examples() {
        let small: Vec<_> = PositiveBraidWord::enumerate(2, 2).collect();
        assert_eq!(small, vec![w(2, &[1]), w(2, &[1, 1])]);
        let three: Vec<_> = PositiveBraidWord::enumerate(2, 3).collect();
        assert!(three.contains(&w(2, &[1, 1, 1])));
        let four: Vec<_> = PositiveBraidWord::enumerate(3, 4).collect();
        assert!(four.contains(&w(3, &[1, 2, 1, 2])));
        assert!(four.contains(&w(3, &[1, 1, 2, 2])));
        assert!(!four.contains(&w(3, &[2, 1, 1, 2])));
    }

    #[test]
    fn enumerate_is_one_per_class_and_complete() {
        let words: Vec<_> = PositiveBraidWord::enumerate(4, 6).collect();
        let keys: HashSet<_> = words.iter().map(|w| w.cyclic_canonical()).collect();
        assert_eq!(keys.len(), words.len());
        // brute force: every full-support word on 3 strands of length 5 is a
        // rotation of an emitted word
        for code in 0..32usize {
            let letters: Vec<usize> = (0..5).map(|b| 1 + ((code >> b) & 1)).collect();
            let word = w(3, &letters);
            if word.has_full_support() {
                assert!(keys.contains(&word.cyclic_canonical()));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let word: PositiveBraidWord = "3: 1 2 1 2".parse().unwrap();
        assert_eq!(word, w(3, &[1, 2, 1, 2]));
        assert_eq!(word.to_string(), "3: 1 2 1 2");
        assert_eq!("1:".parse::<PositiveBraidWord>().unwrap(), w(1, &[]));
        assert_eq!(parse_letter_list("1,2,1,2").unwrap(), vec![1, 2, 1, 2]);
        match "3: 1 x".parse::<PositiveBraidWord>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "2: 1 2".parse::<PositiveBraidWord>(),
            Err(Error::GeneratorOutOfRange { .. })
        ));
    }
}
