//! Codewords, codes, neuron permutations and the text grammar shared by the
//! CLI and the JSON files.
//!
//! Neurons are 1-based in all input and output. A codeword is stored as a
//! bitmask with neuron `i` at bit `i - 1`, which caps codes at 64 neurons.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CodeError, Result};

pub const MAX_NEURONS: usize = 64;

/// A subset of the neuron set `[n]`.
///
/// `Ord` is the display order used everywhere: larger words first, then
/// lexicographic on the sorted member lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Codeword(u64);

impl Codeword {
    pub const EMPTY: Codeword = Codeword(0);

    pub fn from_bits(bits: u64) -> Self {
        Codeword(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a codeword from 1-based neuron indices. Duplicates collapse.
    pub fn from_neurons<I: IntoIterator<Item = usize>>(neurons: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in neurons {
            if i == 0 || i > MAX_NEURONS {
                return Err(CodeError::NeuronOutOfRange {
                    neuron: i,
                    n: MAX_NEURONS,
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Codeword(bits))
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_NEURONS);
        if n == MAX_NEURONS {
            Codeword(u64::MAX)
        } else {
            Codeword((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!((1..=MAX_NEURONS).contains(&i));
        Codeword(1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_NEURONS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Codeword) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Codeword) -> Codeword {
        Codeword(self.0 | other.0)
    }

    pub fn intersection(self, other: Codeword) -> Codeword {
        Codeword(self.0 & other.0)
    }

    pub fn difference(self, other: Codeword) -> Codeword {
        Codeword(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Codeword {
        self.union(Codeword::singleton(i))
    }

    pub fn without(self, i: usize) -> Codeword {
        self.difference(Codeword::singleton(i))
    }

    /// Largest neuron, or 0 for the empty word.
    pub fn max_neuron(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Neurons in increasing order.
    pub fn neurons(self) -> impl Iterator<Item = usize> {
        let mut b = self.0;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let t = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(t + 1)
        })
    }

    /// Shifts every neuron up by `k`.
    pub fn shifted(self, k: usize) -> Result<Codeword> {
        if self.is_empty() {
            return Ok(self);
        }
        if self.max_neuron() + k > MAX_NEURONS {
            return Err(CodeError::TooManyNeurons {
                n: self.max_neuron() + k,
            });
        }
        Ok(Codeword(self.0 << k))
    }

    /// Lexicographic comparison of the sorted member lists, so `1 < 12 < 2`.
    pub fn lex_cmp(self, other: Codeword) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let (has, lacks, flip) = if self.0 & (1 << d) != 0 {
            (self.0, other.0, false)
        } else {
            (other.0, self.0, true)
        };
        debug_assert!(has & (1 << d) != 0);
        // `lacks` agrees with `has` below bit d; it is a prefix of `has` iff it
        // has no members at or above d.
        let ord = if lacks >> d == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        if flip {
            ord.reverse()
        } else {
            ord
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.neurons().collect()
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        if self.max_neuron() <= 9 {
            for i in self.neurons() {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.neurons().map(|i| i.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.neurons())
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Codeword::from_neurons(v).map_err(serde::de::Error::custom)
    }
}

/// Parses a single codeword: compact digits (`23`, `0` for the empty word),
/// braces (`{2,3}`), or a JSON list (`[2,3]`).
pub fn parse_codeword(text: &str) -> Result<Codeword> {
    let t = text.trim();
    if t.starts_with('[') {
        let v: Vec<usize> = serde_json::from_str(t)
            .map_err(|e| CodeError::Parse(format!("bad JSON codeword {t:?}: {e}")))?;
        return Codeword::from_neurons(v);
    }
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(t)
        .trim();
    if inner.is_empty() {
        return Ok(Codeword::EMPTY);
    }
    if inner.contains(',') {
        let mut neurons = Vec::new();
        for tok in inner.split(',') {
            let i: usize = tok
                .trim()
                .parse()
                .map_err(|_| CodeError::Parse(format!("bad neuron {tok:?}")))?;
            neurons.push(i);
        }
        return Codeword::from_neurons(neurons);
    }
    compact_token(inner)
}

fn compact_token(tok: &str) -> Result<Codeword> {
    match tok {
        "0" | "∅" => return Ok(Codeword::EMPTY),
        "" => return Err(CodeError::Parse("empty token".into())),
        _ => {}
    }
    let mut bits = Codeword::EMPTY;
    for ch in tok.chars() {
        match ch.to_digit(10) {
            Some(0) => {
                return Err(CodeError::Parse(format!(
                    "neuron 0 in token {tok:?}; neurons are 1-based"
                )))
            }
            Some(d) => bits = bits.with(d as usize),
            None => return Err(CodeError::Parse(format!("malformed token {tok:?}"))),
        }
    }
    Ok(bits)
}

/// A finite set of codewords on the explicit neuron set `[n]`.
///
/// Words are kept sorted in [`Codeword`] order without duplicates, so two
/// codes are equal iff they have the same `n` and the same words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    words: Vec<Codeword>,
}

impl Code {
    pub fn new(n: usize, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        if n > MAX_NEURONS {
            return Err(CodeError::TooManyNeurons { n });
        }
        let full = Codeword::full(n);
        let mut words: Vec<Codeword> = words.into_iter().collect();
        for w in &words {
            if !w.is_subset(full) {
                return Err(CodeError::NeuronOutOfRange {
                    neuron: w.max_neuron(),
                    n,
                });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(Code { n, words })
    }

    /// Code whose `n` is the largest neuron mentioned.
    pub fn from_words(words: impl IntoIterator<Item = Codeword>) -> Self {
        let words: Vec<Codeword> = words.into_iter().collect();
        let n = words.iter().map(|w| w.max_neuron()).max().unwrap_or(0);
        Code::new(n, words).expect("n covers every word")
    }

    /// Same words on a different ambient neuron count.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Code::new(n, self.words.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, c: Codeword) -> Option<usize> {
        self.words.binary_search(&c).ok()
    }

    pub fn contains(&self, c: Codeword) -> bool {
        self.index_of(c).is_some()
    }

    pub fn word(&self, i: usize) -> Codeword {
        self.words[i]
    }

    /// Largest neuron actually used.
    pub fn support_max(&self) -> usize {
        self.words.iter().map(|w| w.max_neuron()).max().unwrap_or(0)
    }

    /// Union of all words.
    pub fn support(&self) -> Codeword {
        self.words
            .iter()
            .fold(Codeword::EMPTY, |acc, &w| acc.union(w))
    }

    /// Words not strictly contained in another word.
    pub fn maximal_words(&self) -> Vec<Codeword> {
        self.words
            .iter()
            .copied()
            .filter(|&w| !self.words.iter().any(|&v| v != w && w.is_subset(v)))
            .collect()
    }

    pub fn check_neurons(&self, c: Codeword) -> Result<()> {
        if c.is_subset(Codeword::full(self.n)) {
            Ok(())
        } else {
            Err(CodeError::NeuronOutOfRange {
                neuron: c.max_neuron(),
                n: self.n,
            })
        }
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.words.iter().map(|w| w.to_vec()).collect()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if self.n <= 9 {
            FormatStyle::Compact
        } else {
            FormatStyle::Json
        };
        f.write_str(&format_code(self, style).expect("style chosen to fit"))
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {self})", self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatStyle {
    Compact,
    Json,
}

/// Parses a code in compact notation (`{12,23,1,3,0}`) or as a JSON list of
/// lists (`[[1,2],[10]]`), with an optional `n=K` prefix.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut rest = text.trim();
    let mut declared = None;
    if let Some(after) = rest.strip_prefix("n=") {
        let end = after
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(after.len());
        let n: usize = after[..end]
            .parse()
            .map_err(|_| CodeError::Parse(format!("bad n= prefix in {text:?}")))?;
        if n > MAX_NEURONS {
            return Err(CodeError::TooManyNeurons { n });
        }
        declared = Some(n);
        rest = after[end..]
            .trim_start_matches([' ', '\t', ':', ';'])
            .trim();
    }
    if rest.is_empty() {
        return Err(CodeError::Parse("empty code text".into()));
    }
    if declared.is_none() && rest.starts_with('{') && rest[1..].trim_start().starts_with('"') {
        let o: CodeObject = serde_json::from_str(rest)
            .map_err(|e| CodeError::Parse(format!("bad JSON code: {e}")))?;
        let words = o
            .words
            .into_iter()
            .map(Codeword::from_neurons)
            .collect::<Result<Vec<_>>>()?;
        return Code::new(o.n, words);
    }
    let words: Vec<Codeword> = if rest.starts_with('[') {
        let lists: Vec<Vec<usize>> = serde_json::from_str(rest)
            .map_err(|e| CodeError::Parse(format!("bad JSON code: {e}")))?;
        let mut words = Vec::with_capacity(lists.len());
        for l in lists {
            if let Some(n) = declared {
                if let Some(&bad) = l.iter().find(|&&i| i > n) {
                    return Err(CodeError::NeuronOutOfRange { neuron: bad, n });
                }
            }
            if l.contains(&0) {
                return Err(CodeError::Parse(
                    "neuron 0 in JSON code; neurons are 1-based".into(),
                ));
            }
            words.push(Codeword::from_neurons(l)?);
        }
        words
    } else {
        if let Some(n) = declared {
            if n >= 10 {
                return Err(CodeError::CompactNeedsSmallN(n));
            }
        }
        let inner = rest
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(rest)
            .trim();
        if inner.is_empty() {
            vec![Codeword::EMPTY]
        } else {
            inner
                .split(',')
                .map(|t| compact_token(t.trim()))
                .collect::<Result<_>>()?
        }
    };
    let max = words.iter().map(|w| w.max_neuron()).max().unwrap_or(0);
    let n = match declared {
        Some(n) if max > n => return Err(CodeError::NeuronOutOfRange { neuron: max, n }),
        Some(n) => n,
        None => max,
    };
    Code::new(n, words)
}

/// Renders a code. A `n=K ` prefix is emitted only when `n` exceeds the
/// largest neuron used, so the output always parses back to the same code.
pub fn format_code(code: &Code, style: FormatStyle) -> Result<String> {
    let prefix = if code.n() > code.support_max() {
        format!("n={} ", code.n())
    } else {
        String::new()
    };
    match style {
        FormatStyle::Compact => {
            if code.n() >= 10 {
                return Err(CodeError::CompactNeedsSmallN(code.n()));
            }
            if code.is_empty() {
                return Ok(format!("{prefix}[]"));
            }
            let parts: Vec<String> = code.words().iter().map(|w| w.to_string()).collect();
            Ok(format!("{prefix}{{{}}}", parts.join(",")))
        }
        FormatStyle::Json => {
            let body = serde_json::to_string(&code.to_lists()).expect("plain lists serialize");
            Ok(format!("{prefix}{body}"))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CodeObject {
    n: usize,
    words: Vec<Vec<usize>>,
}

/// Serializes a code as its display string (compact when `n ≤ 9`).
pub fn serialize_code_as_text<S: Serializer>(
    code: &Code,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&code.to_string())
}

impl Serialize for Code {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeObject {
            n: self.n,
            words: self.to_lists(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CodeRepr {
    Object(CodeObject),
    Lists(Vec<Vec<usize>>),
    Text(String),
}

impl<'de> Deserialize<'de> for Code {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let code = match CodeRepr::deserialize(d)? {
            CodeRepr::Object(o) => {
                let words = o
                    .words
                    .into_iter()
                    .map(Codeword::from_neurons)
                    .collect::<Result<Vec<_>>>()
                    .map_err(D::Error::custom)?;
                Code::new(o.n, words)
            }
            CodeRepr::Lists(l) => l
                .into_iter()
                .map(Codeword::from_neurons)
                .collect::<Result<Vec<_>>>()
                .map(Code::from_words),
            CodeRepr::Text(t) => parse_code(&t),
        };
        code.map_err(D::Error::custom)
    }
}

/// A permutation of `[n]`, stored 0-based: neuron `i` goes to `images[i - 1] + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images: `one_based[i - 1]` is where neuron `i` goes.
    pub fn from_one_based(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &j in one_based {
            if j == 0 || j > n || seen[j - 1] {
                return Err(CodeError::InvalidInput(format!(
                    "{one_based:?} is not a permutation of 1..={n}"
                )));
            }
            seen[j - 1] = true;
            images.push(j - 1);
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based neuron `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&j| j + 1).collect()
    }

    pub fn apply(&self, c: Codeword) -> Codeword {
        let mut out = 0u64;
        for i in c.neurons() {
            out |= 1 << self.images[i - 1];
        }
        Codeword::from_bits(out)
    }

    pub fn apply_code(&self, code: &Code) -> Code {
        assert_eq!(self.len(), code.n());
        Code::new(code.n(), code.words().iter().map(|&w| self.apply(w)))
            .expect("permutation stays inside [n]")
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation {
            images: first.images.iter().map(|&j| self.images[j]).collect(),
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> Codeword {
        parse_codeword(s).unwrap()
    }

    #[test]
    fn parses_paper_notation() {
        let c = parse_code("{12,23,1,3,0}").unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.len(), 5);
        assert!(c.contains(Codeword::EMPTY));
        assert_eq!(
            format_code(&c, FormatStyle::Compact).unwrap(),
            "{12,23,1,3,0}"
        );
    }

    #[test]
    fn empty_conventions() {
        let c = parse_code("{}").unwrap();
        assert_eq!(c, Code::new(0, [Codeword::EMPTY]).unwrap());
        let e = parse_code("[]").unwrap();
        assert_eq!(e, Code::new(0, []).unwrap());
        assert_eq!(format_code(&e, FormatStyle::Compact).unwrap(), "[]");
        assert_eq!(parse_code("[[]]").unwrap(), c);
    }

    #[test]
    fn json_for_large_neurons() {
        let c = parse_code("[[1,2],[10]]").unwrap();
        assert_eq!(c.n(), 10);
        assert!(c.contains(Codeword::from_neurons([10]).unwrap()));
        assert!(c.contains(cw("12")));
        let single = Code::new(10, [Codeword::singleton(10)]).unwrap();
        assert_eq!(format_code(&single, FormatStyle::Json).unwrap(), "[[10]]");
        assert!(matches!(
            format_code(&single, FormatStyle::Compact),
            Err(CodeError::CompactNeedsSmallN(10))
        ));
        // The serialized object form parses back as text too.
        let text = serde_json::to_string(&single).unwrap();
        assert_eq!(parse_code(&text).unwrap(), single);
        assert_eq!(
            parse_code(r#"{ "n": 3, "words": [[1,2],[1]] }"#)
                .unwrap()
                .n(),
            3
        );
        assert!(parse_code(r#"{"n":2,"words":[[3]]}"#).is_err());
    }

    #[test]
    fn format_orders_by_size_then_lex() {
        let c = parse_code("{1234}").unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.to_string(), "{1234}");
        let c0 = parse_code("{0,1,2,3,56,45,256,145,123,3456}").unwrap();
        assert_eq!(c0.to_string(), "{3456,123,145,256,45,56,1,2,3,0}");
    }

    #[test]
    fn explicit_n_prefix() {
        let c = parse_code("n=3 {12,0}").unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.to_string(), "n=3 {12,0}");
        assert_eq!(parse_code(&c.to_string()).unwrap(), c);
        assert_eq!(parse_code("n=4:[[1]]").unwrap().n(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_code("{1a}"), Err(CodeError::Parse(_))));
        assert!(matches!(parse_code("{10}"), Err(CodeError::Parse(_))));
        assert!(matches!(parse_code("[[0]]"), Err(CodeError::Parse(_))));
        assert!(matches!(
            parse_code("n=2 {13}"),
            Err(CodeError::NeuronOutOfRange { neuron: 3, n: 2 })
        ));
        assert!(matches!(
            parse_code("n=12 {1}"),
            Err(CodeError::CompactNeedsSmallN(12))
        ));
        assert!(matches!(
            parse_code("n=2 [[3]]"),
            Err(CodeError::NeuronOutOfRange { .. })
        ));
        assert!(parse_code("").is_err());
        assert!(parse_code("{1,,2}").is_err());
    }

    #[test]
    fn contains_examples() {
        let c = parse_code("{12,23,1,3,0}").unwrap();
        assert!(c.contains(cw("23")));
        assert!(!c.contains(cw("2")));
        assert!(c.contains(Codeword::EMPTY));
    }

    #[test]
    fn codeword_equality_is_set_equality() {
        assert_eq!(cw("{3,1,3}"), cw("13"));
        assert_eq!(cw("[2,1]"), cw("12"));
        assert_eq!(cw("{}"), Codeword::EMPTY);
    }

    #[test]
    fn lex_order() {
        assert_eq!(cw("1").lex_cmp(cw("12")), Ordering::Less);
        assert_eq!(cw("12").lex_cmp(cw("2")), Ordering::Less);
        assert_eq!(cw("13").lex_cmp(cw("12")), Ordering::Greater);
        assert_eq!(Codeword::EMPTY.lex_cmp(cw("1")), Ordering::Less);
    }

    #[test]
    fn permutation_roundtrip() {
        let p = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(p.apply(cw("12")), cw("23"));
        assert_eq!(p.inverse().apply(p.apply(cw("13"))), cw("13"));
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
    }

    #[test]
    fn serde_forms() {
        let c: Code = serde_json::from_str(r#"{"n":3,"words":[[1,2],[]]}"#).unwrap();
        assert_eq!(c, parse_code("n=3 {12,0}").unwrap());
        let c: Code = serde_json::from_str(r#"[[1,2],[]]"#).unwrap();
        assert_eq!(c.n(), 2);
        let c: Code = serde_json::from_str(r#""{12,0}""#).unwrap();
        assert_eq!(c.n(), 2);
        let back: Code = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
