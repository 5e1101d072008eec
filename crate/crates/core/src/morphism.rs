//! Morphisms between codes.
//!
//! A [`Morphism`] is stored in normal form: an ordered list of trunks
//! `T_1..T_m` of the domain, sending `c` to `{ j : c ∈ T_j }`. Every morphism
//! has exactly one such form once the codomain neuron order is fixed, so the
//! list is lossless. An [`ExplicitMap`] is the graph of an arbitrary function
//! between two codes and is what [`is_morphism`] and [`decompose`] consume.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::WordSet;
use crate::code::{Code, Codeword, Permutation, MAX_NEURONS};
use crate::error::{CodeError, Result};
use crate::trunks::{is_trunk_set, trunk_of, Trunk};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    domain: Code,
    trunks: Vec<Trunk>,
}

impl Morphism {
    pub fn new(domain: Code, trunks: Vec<Trunk>) -> Result<Self> {
        if trunks.len() > MAX_NEURONS {
            return Err(CodeError::TooManyNeurons { n: trunks.len() });
        }
        for t in &trunks {
            if t.members().universe() != domain.len() || !is_trunk_set(&domain, t.members()) {
                return Err(CodeError::NotATrunk);
            }
        }
        Ok(Morphism { domain, trunks })
    }

    /// Builds the normal form from trunk generators; `None` is the empty trunk.
    pub fn from_generators(domain: Code, generators: &[Option<Codeword>]) -> Result<Self> {
        let trunks = generators
            .iter()
            .map(|g| match g {
                None => Ok(Trunk::empty(&domain)),
                Some(s) => trunk_of(&domain, *s),
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(domain, trunks)
    }

    /// The identity on a code, given by its simple trunks.
    pub fn identity(domain: Code) -> Self {
        let gens: Vec<Option<Codeword>> = (1..=domain.n())
            .map(|i| Some(Codeword::singleton(i)))
            .collect();
        Morphism::from_generators(domain, &gens).expect("simple trunks are trunks")
    }

    pub fn domain(&self) -> &Code {
        &self.domain
    }

    pub fn trunks(&self) -> &[Trunk] {
        &self.trunks
    }

    /// Codomain neuron count `m`.
    pub fn m(&self) -> usize {
        self.trunks.len()
    }

    pub fn generators(&self) -> Vec<Option<Codeword>> {
        self.trunks.iter().map(|t| t.generator()).collect()
    }

    pub(crate) fn apply_index(&self, i: usize) -> Codeword {
        let mut bits = 0u64;
        for (j, t) in self.trunks.iter().enumerate() {
            if t.contains_index(i) {
                bits |= 1 << j;
            }
        }
        Codeword::from_bits(bits)
    }

    /// `f(c) = { j : c ∈ T_j }`.
    pub fn apply(&self, c: Codeword) -> Result<Codeword> {
        let i = self.domain.index_of(c).ok_or(CodeError::NotInCode(c))?;
        Ok(self.apply_index(i))
    }

    /// The image as a code on `m` neurons.
    pub fn image(&self) -> Code {
        Code::new(
            self.m(),
            (0..self.domain.len()).map(|i| self.apply_index(i)),
        )
        .expect("images lie in [m]")
    }

    /// The graph of the morphism, onto its image unless `codomain` is given.
    pub fn to_explicit(&self, codomain: Option<&Code>) -> Result<ExplicitMap> {
        let codomain = match codomain {
            Some(c) => c.clone(),
            None => self.image(),
        };
        let pairs = (0..self.domain.len())
            .map(|i| (self.domain.word(i), self.apply_index(i)))
            .collect();
        ExplicitMap::new(self.domain.clone(), codomain, pairs)
    }

    pub fn is_surjective_onto(&self, codomain: &Code) -> bool {
        self.image() == *codomain
    }

    /// Whether the morphism is injective on words.
    pub fn is_injective(&self) -> bool {
        self.image().len() == self.domain.len()
    }

    pub fn to_json(&self) -> MorphismJson {
        MorphismJson {
            domain: self.domain.clone(),
            trunk_generators: self
                .generators()
                .into_iter()
                .map(|g| g.map(|s| s.to_vec()))
                .collect(),
        }
    }

    pub fn from_json(json: MorphismJson) -> Result<Self> {
        let gens = json
            .trunk_generators
            .into_iter()
            .map(|g| g.map(Codeword::from_neurons).transpose())
            .collect::<Result<Vec<_>>>()?;
        Morphism::from_generators(json.domain, &gens)
    }
}

/// `{ "domain": <code>, "trunk_generators": [[...] | null, ...] }`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MorphismJson {
    pub domain: Code,
    pub trunk_generators: Vec<Option<Vec<usize>>>,
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Morphism {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Morphism::from_json(MorphismJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A total function between two codes, given word by word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExplicitMap {
    domain: Code,
    codomain: Code,
    /// `images[i]` is the image of `domain.word(i)`.
    images: Vec<Codeword>,
}

impl ExplicitMap {
    pub fn new(domain: Code, codomain: Code, pairs: Vec<(Codeword, Codeword)>) -> Result<Self> {
        let mut images: Vec<Option<Codeword>> = vec![None; domain.len()];
        for (c, d) in pairs {
            let i = domain.index_of(c).ok_or(CodeError::NotInCode(c))?;
            if images[i].is_some() {
                return Err(CodeError::InvalidInput(format!(
                    "codeword {c} is assigned twice"
                )));
            }
            if !codomain.contains(d) {
                return Err(CodeError::NotInCode(d));
            }
            images[i] = Some(d);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.ok_or_else(|| {
                    CodeError::InvalidInput(format!("codeword {} has no image", domain.word(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExplicitMap {
            domain,
            codomain,
            images,
        })
    }

    /// Builds a map from a function on words; the codomain is the image on `n` neurons.
    pub fn from_fn(domain: &Code, n: usize, f: impl Fn(Codeword) -> Codeword) -> Result<Self> {
        let pairs: Vec<(Codeword, Codeword)> = domain.words().iter().map(|&c| (c, f(c))).collect();
        let codomain = Code::new(n, pairs.iter().map(|p| p.1))?;
        ExplicitMap::new(domain.clone(), codomain, pairs)
    }

    pub fn domain(&self) -> &Code {
        &self.domain
    }

    pub fn codomain(&self) -> &Code {
        &self.codomain
    }

    pub fn get(&self, c: Codeword) -> Option<Codeword> {
        self.domain.index_of(c).map(|i| self.images[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Codeword, Codeword)> + '_ {
        self.domain
            .words()
            .iter()
            .copied()
            .zip(self.images.iter().copied())
    }

    pub fn image(&self) -> Code {
        Code::new(self.codomain.n(), self.images.iter().copied()).expect("images lie in codomain")
    }

    /// `f⁻¹(Tk_codomain(σ))` as a word set of the domain.
    pub fn preimage_of_trunk(&self, sigma: Codeword) -> WordSet {
        WordSet::from_indices(
            self.domain.len(),
            self.images
                .iter()
                .enumerate()
                .filter(|(_, d)| sigma.is_subset(**d))
                .map(|(i, _)| i),
        )
    }

    pub fn to_json(&self) -> ExplicitMapJson {
        ExplicitMapJson {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            pairs: self.pairs().collect(),
        }
    }
}

/// `{ "domain": <code>, "codomain": <code>, "pairs": [[[c...], [d...]], ...] }`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ExplicitMapJson {
    pub domain: Code,
    pub codomain: Code,
    pub pairs: Vec<(Codeword, Codeword)>,
}

impl ExplicitMapJson {
    pub fn into_map(self) -> Result<ExplicitMap> {
        ExplicitMap::new(self.domain, self.codomain, self.pairs)
    }
}

/// A map is a morphism iff the preimage of every simple trunk of the
/// codomain is a trunk of the domain.
pub fn is_morphism(f: &ExplicitMap) -> bool {
    (1..=f.codomain.n())
        .all(|j| is_trunk_set(&f.domain, &f.preimage_of_trunk(Codeword::singleton(j))))
}

/// The normal form `T_j = f⁻¹(Tk_codomain(j))`, in codomain neuron order.
pub fn decompose(f: &ExplicitMap) -> Result<Morphism> {
    let mut trunks = Vec::with_capacity(f.codomain.n());
    for j in 1..=f.codomain.n() {
        let pre = f.preimage_of_trunk(Codeword::singleton(j));
        if !is_trunk_set(&f.domain, &pre) {
            return Err(CodeError::NotAMorphism(format!(
                "preimage of Tk({j}) is not a trunk"
            )));
        }
        trunks.push(Trunk::from_members_unchecked(&f.domain, pre));
    }
    Morphism::new(f.domain.clone(), trunks)
}

/// `g ∘ f`. The domain of `g` must be a code on `f.m()` neurons containing
/// the image of `f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if g.domain.n() != f.m() {
        return Err(CodeError::Mismatch(format!(
            "outer domain has {} neurons, inner morphism has {} trunks",
            g.domain.n(),
            f.m()
        )));
    }
    let positions: Vec<usize> = (0..f.domain.len())
        .map(|i| {
            let d = f.apply_index(i);
            g.domain.index_of(d).ok_or_else(|| {
                CodeError::Mismatch(format!("image word {d} is not in the outer domain"))
            })
        })
        .collect::<Result<_>>()?;
    let trunks = g
        .trunks
        .iter()
        .map(|t| {
            let members = WordSet::from_indices(
                f.domain.len(),
                positions
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| t.contains_index(p))
                    .map(|(i, _)| i),
            );
            Trunk::from_members_unchecked(&f.domain, members)
        })
        .collect();
    Morphism::new(f.domain.clone(), trunks)
}

/// `c ↦ c ∩ γ`.
pub fn restriction_morphism(code: &Code, gamma: Codeword) -> Result<ExplicitMap> {
    code.check_neurons(gamma)?;
    ExplicitMap::from_fn(code, code.n(), |c| c.intersection(gamma))
}

/// `c ↦ w(c)`.
pub fn permutation_morphism(code: &Code, w: &Permutation) -> Result<ExplicitMap> {
    if w.len() != code.n() {
        return Err(CodeError::Mismatch(format!(
            "permutation of {} neurons applied to a code on {}",
            w.len(),
            code.n()
        )));
    }
    ExplicitMap::from_fn(code, code.n(), |c| w.apply(c))
}

/// `c ↦ c ∪ γ`.
pub fn union_morphism(code: &Code, gamma: Codeword) -> Result<ExplicitMap> {
    code.check_neurons(gamma)?;
    ExplicitMap::from_fn(code, code.n(), |c| c.union(gamma))
}
