//! Alexander polynomials by skein recursion alone: no Seifert matrices, no
//! determinants. Used as the reference the matrix routes are checked against.

use std::collections::HashMap;

use crate::braid::PositiveBraidWord;
use crate::error::Result;
use crate::laurent::HalfLaurent;

/// Skein evaluator with a memo keyed by the cyclic canonical form.
#[derive(Debug, Default)]
pub struct SkeinOracle {
    memo: HashMap<PositiveBraidWord, HalfLaurent>,
}

impl SkeinOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// * one strand: the unknot, `1`;
    /// * a missing generator: split closure, `0`;
    /// * a generator occurring once: product over the connected summands;
    /// * otherwise rewrite to a word with a square `σ_k σ_k` and apply
    ///   `Δ(W) = Δ(W minus both) + (t^{1/2} - t^{-1/2}) Δ(W minus one)`.
    pub fn eval(&mut self, word: &PositiveBraidWord) -> Result<HalfLaurent> {
        if word.strands() == 1 {
            return Ok(HalfLaurent::one());
        }
        if !word.has_full_support() {
            return Ok(HalfLaurent::zero());
        }
        let key = word.cyclic_canonical();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let factors = word.factor_single_occurrence()?;
        let value = if factors.len() != 1 || factors[0] != *word {
            let mut acc = HalfLaurent::one();
            for f in &factors {
                acc = &acc * &self.eval(f)?;
            }
            acc
        } else {
            let rewritten = word.find_square_rewrite()?;
            let j = rewritten
                .square_position()
                .expect("rewrite returns a word with a square");
            let minus = self.eval(&rewritten.without_pair(j))?;
            let zero = self.eval(&rewritten.without(j))?;
            &minus + &(&HalfLaurent::skein_factor() * &zero)
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

/// One-shot evaluation with a fresh memo.
pub fn skein_oracle(word: &PositiveBraidWord) -> Result<HalfLaurent> {
    SkeinOracle::new().eval(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> PositiveBraidWord {
        PositiveBraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn skein_examples() {
        assert_eq!(
            skein_oracle(&w(2, &[1, 1])).unwrap(),
            p("t^(1/2) - t^(-1/2)")
        );
        assert_eq!(skein_oracle(&w(2, &[1, 1, 1])).unwrap(), p("t - 1 + t^-1"));
        assert_eq!(
            skein_oracle(&PositiveBraidWord::torus(3, 3).unwrap()).unwrap(),
            p("t^2 - t - t^-1 + t^-2")
        );
    }

    #[test]
    fn base_cases() {
        assert_eq!(skein_oracle(&w(1, &[])).unwrap(), HalfLaurent::one());
        assert!(skein_oracle(&w(3, &[1, 1])).unwrap().is_zero());
        assert_eq!(skein_oracle(&w(2, &[1])).unwrap(), HalfLaurent::one());
    }

    #[test]
    fn memo_is_shared_across_calls() {
        let mut oracle = SkeinOracle::new();
        let a = oracle
            .eval(&PositiveBraidWord::torus(3, 4).unwrap())
            .unwrap();
        let filled = oracle.memo_len();
        assert!(filled > 0);
        let b = oracle.eval(&w(3, &[2, 1, 2, 1, 2, 1, 2, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(oracle.memo_len(), filled);
    }
}
