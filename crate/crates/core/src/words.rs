//! Words over a finite alphabet and their length-lexicographic enumeration.

use crate::automaton::Letter;

pub type Word = Vec<Letter>;

/// Iterator over all words of length `<= max_len` in length-then-lexicographic
/// order (letters compared in the order of the given alphabet).
#[derive(Clone, Debug)]
pub struct Words {
    alphabet: Vec<Letter>,
    max_len: usize,
    // digits of the next word, `None` once exhausted
    next: Option<Vec<usize>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let digits = self.next.as_mut()?;
        let word: Word = digits.iter().map(|&d| self.alphabet[d]).collect();
        let base = self.alphabet.len();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                if digits.len() == self.max_len || base == 0 {
                    self.next = None;
                } else {
                    let len = digits.len() + 1;
                    *digits = vec![0; len];
                }
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
        Some(word)
    }
}

pub fn words_up_to(alphabet: &[Letter], max_len: usize) -> Words {
    Words {
        alphabet: alphabet.to_vec(),
        max_len,
        next: Some(Vec::new()),
    }
}

/// All words of exactly length `len`, in lexicographic order.
pub fn words_of_length(alphabet: &[Letter], len: usize) -> impl Iterator<Item = Word> {
    words_up_to(alphabet, len).filter(move |w| w.len() == len)
}

/// `sum_{l <= max_len} k^l`, saturating.
pub fn count_words(alphabet_len: usize, max_len: usize) -> u64 {
    let k = alphabet_len as u64;
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k);
    }
    total
}

/// Text form of a word; the empty word renders as `λ`.
pub fn render(word: &[Letter]) -> String {
    if word.is_empty() {
        "λ".to_string()
    } else {
        word.iter().collect()
    }
}

pub fn reversed(word: &[Letter]) -> Word {
    word.iter().rev().copied().collect()
}

pub fn to_word(s: &str) -> Word {
    s.chars().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_lex_order() {
        let ws: Vec<String> = words_up_to(&['a', 'b'], 2).map(|w| w.iter().collect()).collect();
        assert_eq!(ws, ["", "a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(words_up_to(&['a', 'b', 'c'], 5).count() as u64, count_words(3, 5));
        assert_eq!(count_words(2, 12), 8191);
        assert_eq!(words_up_to(&['a'], 0).count(), 1);
    }

    #[test]
    fn exact_length_slice() {
        assert_eq!(words_of_length(&['a', 'b'], 3).count(), 8);
        assert_eq!(render(&[]), "λ");
    }
}
