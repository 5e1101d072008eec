//! Products, coproducts and intersection-completeness predicates.

use crate::code::{Code, Codeword};
use crate::error::{CodeError, Result};
use crate::trunks::nonempty_trunks;

/// `C × D = { c ∪ d }` with `D` relabeled onto neurons `n+1..n+m`.
pub fn product(a: &Code, b: &Code) -> Result<Code> {
    if a.is_empty() || b.is_empty() {
        return Err(CodeError::InvalidInput(
            "product needs two codes with at least one word".into(),
        ));
    }
    let n = a.n() + b.n();
    let mut words = Vec::with_capacity(a.len() * b.len());
    for &c in a.words() {
        for &d in b.words() {
            words.push(c.union(d.shifted(a.n())?));
        }
    }
    Code::new(n, words)
}

/// Disjoint union on `n + m + 2` neurons: words of `a` tagged with neuron
/// `n+m+1`, shifted words of `b` tagged with `n+m+2`. With `with_empty` the
/// empty word is added.
pub fn coproduct(a: &Code, b: &Code, with_empty: bool) -> Result<Code> {
    let n = a.n() + b.n() + 2;
    if n > crate::code::MAX_NEURONS {
        return Err(CodeError::TooManyNeurons { n });
    }
    let tag_a = Codeword::singleton(n - 1);
    let tag_b = Codeword::singleton(n);
    let mut words: Vec<Codeword> = a.words().iter().map(|&c| c.union(tag_a)).collect();
    for &d in b.words() {
        words.push(d.shifted(a.n())?.union(tag_b));
    }
    if with_empty {
        words.push(Codeword::EMPTY);
    }
    Code::new(n, words)
}

/// Closed under pairwise intersections of words.
pub fn is_intersection_complete(code: &Code) -> bool {
    let pairwise = is_intersection_complete_pairwise(code);
    debug_assert_eq!(pairwise, is_intersection_complete_by_trunks(code));
    pairwise
}

pub fn is_intersection_complete_pairwise(code: &Code) -> bool {
    let w = code.words();
    w.iter()
        .enumerate()
        .all(|(i, &a)| w[i + 1..].iter().all(|&b| code.contains(a.intersection(b))))
}

/// Every nonempty trunk has a unique minimal word.
pub fn is_intersection_complete_by_trunks(code: &Code) -> bool {
    nonempty_trunks(code).iter().all(|t| {
        let words: Vec<Codeword> = t.words(code).collect();
        let minimal = words
            .iter()
            .filter(|&&c| !words.iter().any(|&d| d != c && d.is_subset(c)))
            .count();
        minimal == 1
    })
}

/// Every intersection of a nonempty set of maximal words is a word.
pub fn is_max_intersection_complete(code: &Code) -> bool {
    let maximal = code.maximal_words();
    let mut closure: Vec<Codeword> = maximal.clone();
    let mut i = 0;
    while i < closure.len() {
        let x = closure[i];
        for &m in &maximal {
            let y = x.intersection(m);
            if !closure.contains(&y) {
                closure.push(y);
            }
        }
        i += 1;
    }
    closure.iter().all(|&c| code.contains(c))
}
