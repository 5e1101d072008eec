//! Neural rings as F2-valued functions on codes, and monomial maps.
//!
//! The neural ring of a code is isomorphic to the ring of functions from the
//! code to F2, so elements are stored by their value at each word: addition
//! is pointwise xor and multiplication pointwise and. Morphisms `C → D`
//! correspond contravariantly to monomial maps `R_D → R_C`.

use serde::{Deserialize, Serialize};

use crate::bits::WordSet;
use crate::code::{Code, Codeword};
use crate::error::{CodeError, Result};
use crate::morphism::Morphism;
use crate::trunks::{trunk_of, Trunk};

/// An element of the neural ring `R_host`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    host: Code,
    values: WordSet,
}

impl RingElement {
    pub fn zero(host: &Code) -> Self {
        RingElement {
            host: host.clone(),
            values: WordSet::empty(host.len()),
        }
    }

    pub fn one(host: &Code) -> Self {
        RingElement {
            host: host.clone(),
            values: WordSet::full(host.len()),
        }
    }

    pub fn host(&self) -> &Code {
        &self.host
    }

    /// Indices of the host words where the element is 1.
    pub fn values(&self) -> &WordSet {
        &self.values
    }

    /// Value at a word, or `None` if the word is not in the host.
    pub fn value_at(&self, c: Codeword) -> Option<bool> {
        self.host.index_of(c).map(|i| self.values.contains(i))
    }

    /// The words where the element is 1.
    pub fn support(&self) -> Vec<Codeword> {
        self.values.iter().map(|i| self.host.word(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn check_host(&self, other: &RingElement) -> Result<()> {
        if self.host != other.host {
            return Err(CodeError::Mismatch(
                "ring elements live on different codes".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_host(other)?;
        let mut values = self.values.clone();
        values.symmetric_difference_with(&other.values);
        Ok(RingElement {
            host: self.host.clone(),
            values,
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_host(other)?;
        Ok(RingElement {
            host: self.host.clone(),
            values: self.values.intersection(&other.values),
        })
    }
}

/// The coordinate function `x_i`, which is 1 exactly on `Tk(i)`.
pub fn coordinate(code: &Code, i: usize) -> Result<RingElement> {
    if i == 0 || i > code.n() {
        return Err(CodeError::NeuronOutOfRange {
            neuron: i,
            n: code.n(),
        });
    }
    evaluate_monomial(code, Codeword::singleton(i))
}

/// The indicator `ρ_c`: 1 at `c` if `c` is a word, the zero element otherwise.
pub fn indicator(code: &Code, c: Codeword) -> RingElement {
    let mut e = RingElement::zero(code);
    if let Some(i) = code.index_of(c) {
        e.values.insert(i);
    }
    e
}

/// The monomial `x_σ`, which is 1 exactly on `Tk(σ)`.
pub fn evaluate_monomial(code: &Code, sigma: Codeword) -> Result<RingElement> {
    Ok(RingElement {
        host: code.clone(),
        values: trunk_of(code, sigma)?.members().clone(),
    })
}

/// Image of one variable under a monomial map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialImage {
    Zero,
    /// `x_σ`, with `σ` the largest exponent set giving the same function.
    Mono(Codeword),
}

impl Serialize for MonomialImage {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MonomialImage::Zero => s.serialize_none(),
            MonomialImage::Mono(sigma) => s.serialize_some(sigma),
        }
    }
}

impl<'de> Deserialize<'de> for MonomialImage {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Option::<Codeword>::deserialize(d)? {
            None => MonomialImage::Zero,
            Some(sigma) => MonomialImage::Mono(sigma),
        })
    }
}

/// A monomial ring map `R_from → R_to` sending `y_j` to `assignment[j-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialMap {
    from: Code,
    to: Code,
    assignment: Vec<MonomialImage>,
}

/// Normalize `x_σ` on `code`: zero if it vanishes, else the trunk generator.
fn normalize(code: &Code, image: MonomialImage) -> Result<MonomialImage> {
    Ok(match image {
        MonomialImage::Zero => MonomialImage::Zero,
        MonomialImage::Mono(sigma) => match trunk_of(code, sigma)?.generator() {
            None => MonomialImage::Zero,
            Some(g) => MonomialImage::Mono(g),
        },
    })
}

impl MonomialMap {
    /// Builds the map, normalizing every exponent set to its maximal form.
    /// Does not check that the map is well defined; see
    /// [`MonomialMap::is_well_defined`].
    pub fn new(from: Code, to: Code, assignment: Vec<MonomialImage>) -> Result<Self> {
        if assignment.len() != from.n() {
            return Err(CodeError::Mismatch(format!(
                "{} assignments for a ring in {} variables",
                assignment.len(),
                from.n()
            )));
        }
        let assignment = assignment
            .into_iter()
            .map(|a| normalize(&to, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialMap {
            from,
            to,
            assignment,
        })
    }

    pub fn from(&self) -> &Code {
        &self.from
    }

    pub fn to(&self) -> &Code {
        &self.to
    }

    pub fn assignment(&self) -> &[MonomialImage] {
        &self.assignment
    }

    /// The word `{ j : φ(y_j)(c) = 1 }` that `c ∈ to` is sent to.
    pub fn induced_word(&self, c: Codeword) -> Codeword {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| matches!(a, MonomialImage::Mono(s) if s.is_subset(c)))
            .fold(Codeword::EMPTY, |acc, (j, _)| acc.with(j + 1))
    }

    /// Whether the map respects the relations of `R_from`, i.e. every word
    /// of `to` induces a word of `from`.
    pub fn is_well_defined(&self) -> bool {
        self.to
            .words()
            .iter()
            .all(|&c| self.from.contains(self.induced_word(c)))
    }

    /// `φ(e)`, computed as `c ↦ e(induced_word(c))`.
    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        if *e.host() != self.from {
            return Err(CodeError::Mismatch(
                "element is not in the source ring".into(),
            ));
        }
        let mut out = RingElement::zero(&self.to);
        for (i, &c) in self.to.words().iter().enumerate() {
            let d = self.induced_word(c);
            match e.value_at(d) {
                Some(true) => out.values.insert(i),
                Some(false) => {}
                None => {
                    return Err(CodeError::NotAMorphism(format!(
                        "word {c} induces {d}, which is not in the source code"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`, where `inner: R_E → R_from`.
    pub fn after(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        if inner.to != self.from {
            return Err(CodeError::Mismatch(
                "inner map does not land in the outer map's source".into(),
            ));
        }
        let assignment = inner
            .assignment
            .iter()
            .map(|a| match a {
                MonomialImage::Zero => MonomialImage::Zero,
                MonomialImage::Mono(tau) => {
                    let mut sigma = Codeword::EMPTY;
                    for j in tau.neurons() {
                        match self.assignment[j - 1] {
                            MonomialImage::Zero => return MonomialImage::Zero,
                            MonomialImage::Mono(s) => sigma = sigma.union(s),
                        }
                    }
                    MonomialImage::Mono(sigma)
                }
            })
            .collect();
        MonomialMap::new(inner.from.clone(), self.to.clone(), assignment)
    }
}

/// The pullback `f*: R_D → R_C` of a morphism `f: C → D`. The codomain `D`
/// defaults to the image of `f`.
pub fn morphism_to_monomial_map(f: &Morphism, codomain: Option<&Code>) -> Result<MonomialMap> {
    let from = match codomain {
        Some(d) => {
            if d.n() != f.m() {
                return Err(CodeError::Mismatch(format!(
                    "codomain has {} neurons, morphism has {} trunks",
                    d.n(),
                    f.m()
                )));
            }
            if let Some(w) = f.image().words().iter().find(|w| !d.contains(**w)) {
                return Err(CodeError::NotInCode(*w));
            }
            d.clone()
        }
        None => f.image(),
    };
    let assignment = f
        .generators()
        .into_iter()
        .map(|g| g.map_or(MonomialImage::Zero, MonomialImage::Mono))
        .collect();
    MonomialMap::new(from, f.domain().clone(), assignment)
}

/// The morphism `C → D` with trunks `Tk_C(σ_j)` (empty for zero images).
pub fn monomial_map_to_morphism(phi: &MonomialMap) -> Result<Morphism> {
    let trunks = phi
        .assignment
        .iter()
        .map(|a| match a {
            MonomialImage::Zero => Ok(Trunk::empty(&phi.to)),
            MonomialImage::Mono(s) => trunk_of(&phi.to, *s),
        })
        .collect::<Result<Vec<_>>>()?;
    let f = Morphism::new(phi.to.clone(), trunks)?;
    if let Some(&c) = phi
        .to
        .words()
        .iter()
        .find(|&&c| !phi.from.contains(f.apply(c).expect("word of domain")))
    {
        return Err(CodeError::NotAMorphism(format!(
            "word {c} maps outside the codomain"
        )));
    }
    Ok(f)
}
