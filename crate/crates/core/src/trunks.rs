//! Trunks: the sets `Tk(σ) = { c ∈ C : σ ⊆ c }` plus the empty set.
//!
//! A trunk is stored as a set of word indices into its host code together
//! with its canonical generator, the intersection of its members. The
//! generator is the unique largest `σ` with `Tk(σ)` equal to the trunk, so
//! comparing generators (or member sets) decides trunk equality directly.

use std::collections::HashSet;

use serde::Serialize;

use crate::bits::WordSet;
use crate::code::{Code, Codeword};
use crate::error::{CodeError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Trunk {
    members: WordSet,
    generator: Option<Codeword>,
}

impl Trunk {
    /// The empty trunk of `code`.
    pub fn empty(code: &Code) -> Self {
        Trunk {
            members: WordSet::empty(code.len()),
            generator: None,
        }
    }

    /// Wraps a member set, recomputing the generator. Does not check that the
    /// set really is a trunk; see [`is_trunk_set`].
    pub(crate) fn from_members_unchecked(code: &Code, members: WordSet) -> Self {
        let generator = generator_of(code, &members);
        Trunk { members, generator }
    }

    /// Wraps a member set, failing if it is not a trunk of `code`.
    pub fn from_members(code: &Code, members: WordSet) -> Result<Self> {
        if members.universe() != code.len() {
            return Err(CodeError::Mismatch(format!(
                "member set has universe {}, code has {} words",
                members.universe(),
                code.len()
            )));
        }
        let t = Trunk::from_members_unchecked(code, members);
        if let Some(g) = t.generator {
            if trunk_members(code, g) != t.members {
                return Err(CodeError::NotATrunk);
            }
        }
        Ok(t)
    }

    pub fn members(&self) -> &WordSet {
        &self.members
    }

    pub fn generator(&self) -> Option<Codeword> {
        self.generator
    }

    pub fn is_empty(&self) -> bool {
        self.generator.is_none()
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn contains(&self, code: &Code, c: Codeword) -> bool {
        code.index_of(c).is_some_and(|i| self.members.contains(i))
    }

    pub fn words<'a>(&'a self, code: &'a Code) -> impl Iterator<Item = Codeword> + 'a {
        self.members.iter().map(|i| code.word(i))
    }

    /// The trunk as a code on the host's neuron set.
    pub fn to_code(&self, code: &Code) -> Code {
        Code::new(code.n(), self.words(code)).expect("subset of a valid code")
    }

    pub fn intersection(&self, code: &Code, other: &Trunk) -> Trunk {
        Trunk::from_members_unchecked(code, self.members.intersection(&other.members))
    }

    pub fn to_json(&self, code: &Code) -> TrunkJson {
        TrunkJson {
            generator: self.generator.map(|g| g.to_vec()),
            members: self.words(code).map(|w| w.to_vec()).collect(),
        }
    }
}

/// Serialized form `{ "generator": [...] | null, "members": [[...], ...] }`.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct TrunkJson {
    pub generator: Option<Vec<usize>>,
    pub members: Vec<Vec<usize>>,
}

fn generator_of(code: &Code, members: &WordSet) -> Option<Codeword> {
    let mut it = members.iter();
    let first = code.word(it.next()?);
    Some(it.fold(first, |acc, i| acc.intersection(code.word(i))))
}

pub(crate) fn trunk_members(code: &Code, sigma: Codeword) -> WordSet {
    WordSet::from_indices(
        code.len(),
        code.words()
            .iter()
            .enumerate()
            .filter(|(_, w)| sigma.is_subset(**w))
            .map(|(i, _)| i),
    )
}

/// `Tk(σ)`. The returned generator contains `sigma` and may be larger.
pub fn trunk_of(code: &Code, sigma: Codeword) -> Result<Trunk> {
    code.check_neurons(sigma)?;
    Ok(Trunk::from_members_unchecked(
        code,
        trunk_members(code, sigma),
    ))
}

/// `Tk(i)` for every neuron `i` in `1..=n`.
pub fn simple_trunks(code: &Code) -> Vec<(usize, Trunk)> {
    (1..=code.n())
        .map(|i| {
            (
                i,
                Trunk::from_members_unchecked(code, trunk_members(code, Codeword::singleton(i))),
            )
        })
        .collect()
}

/// Orders trunks by generator (lexicographic), the empty trunk last.
pub(crate) fn trunk_order(a: &Trunk, b: &Trunk) -> std::cmp::Ordering {
    match (a.generator, b.generator) {
        (Some(x), Some(y)) => x.lex_cmp(y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => std::cmp::Ordering::Equal,
    }
}

/// Every distinct trunk of `code`, including the whole code and the empty
/// trunk (always last).
///
/// Built as the intersection closure of the simple trunks and `Tk(∅)`; every
/// `Tk(σ)` is the intersection of the `Tk(i)` for `i ∈ σ`, so nothing is missed.
pub fn all_trunks(code: &Code) -> Vec<Trunk> {
    let mut seen: HashSet<WordSet> = HashSet::new();
    let mut family: Vec<WordSet> = Vec::new();
    let mut push = |s: WordSet, family: &mut Vec<WordSet>| {
        if seen.insert(s.clone()) {
            family.push(s);
        }
    };
    push(WordSet::full(code.len()), &mut family);
    for (_, t) in simple_trunks(code) {
        push(t.members, &mut family);
    }
    let mut frontier = 0;
    while frontier < family.len() {
        let end = family.len();
        for i in frontier..end {
            for j in 0..end {
                let s = family[i].intersection(&family[j]);
                push(s, &mut family);
            }
        }
        frontier = end;
    }
    push(WordSet::empty(code.len()), &mut family);
    let mut out: Vec<Trunk> = family
        .into_iter()
        .map(|m| Trunk::from_members_unchecked(code, m))
        .collect();
    out.sort_by(trunk_order);
    out
}

/// Nonempty trunks only.
pub fn nonempty_trunks(code: &Code) -> Vec<Trunk> {
    let mut v = all_trunks(code);
    v.retain(|t| !t.is_empty());
    v
}

pub fn is_trunk_set(code: &Code, members: &WordSet) -> bool {
    match generator_of(code, members) {
        None => true,
        Some(g) => trunk_members(code, g) == *members,
    }
}

/// Whether a set of words of `code` is a trunk.
pub fn is_trunk(code: &Code, subset: &[Codeword]) -> Result<bool> {
    let mut members = WordSet::empty(code.len());
    for &c in subset {
        let i = code.index_of(c).ok_or(CodeError::NotInCode(c))?;
        members.insert(i);
    }
    Ok(is_trunk_set(code, &members))
}

/// Meet-irreducible trunks: nonempty, proper, and different from the
/// intersection of all trunks strictly above them. Sorted by generator.
pub fn irreducible_trunks(code: &Code) -> Vec<Trunk> {
    let family = nonempty_trunks(code);
    let whole = WordSet::full(code.len());
    family
        .iter()
        .filter(|t| t.members != whole)
        .filter(|t| {
            let mut meet = whole.clone();
            for u in &family {
                if u.members != t.members && t.members.is_subset(&u.members) {
                    meet.intersect_with(&u.members);
                }
            }
            meet != t.members
        })
        .cloned()
        .collect()
}
