//! Simplicial complexes of codes, links, collapsibility, F2 homology and
//! local obstructions.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Code, Codeword};
use crate::error::{CodeError, Result};

/// Complexes with more faces than this are refused.
pub const MAX_FACES: usize = 1 << 20;

/// Collapse searches visiting more intermediate complexes than this are refused.
pub const MAX_COLLAPSE_STATES: usize = 1 << 20;

/// A simplicial complex on `[n]`, stored by its facets. The void complex
/// (no faces at all) has no facets; the complex whose only face is `∅` has
/// the single facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Codeword>,
}

fn maximal(mut faces: Vec<Codeword>) -> Vec<Codeword> {
    faces.sort();
    faces.dedup();
    // Sorted by decreasing size, so a containing face always comes first.
    let mut out: Vec<Codeword> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|&g| f.is_subset(g)) {
            out.push(f);
        }
    }
    out
}

impl SimplicialComplex {
    /// The downclosure of `faces` on `n` vertices.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        let faces: Vec<Codeword> = faces.into_iter().collect();
        if let Some(&bad) = faces.iter().find(|c| c.max_neuron() > n) {
            return Err(CodeError::NeuronOutOfRange {
                neuron: bad.max_neuron(),
                n,
            });
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal(faces),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximal faces, by decreasing size then lexicographically.
    pub fn facets(&self) -> &[Codeword] {
        &self.facets
    }

    /// No faces at all, not even `∅`.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, sigma: Codeword) -> bool {
        self.facets.iter().any(|&f| sigma.is_subset(f))
    }

    pub fn vertices(&self) -> Codeword {
        self.facets
            .iter()
            .fold(Codeword::EMPTY, |acc, &f| acc.union(f))
    }

    /// Dimension (largest face size minus one); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.first().map(|f| f.len() as isize - 1)
    }

    /// Facet sizes, largest first.
    pub fn facet_sizes(&self) -> Vec<usize> {
        self.facets.iter().map(|f| f.len()).collect()
    }

    /// Number of faces, including `∅`, refusing anything above `MAX_FACES`.
    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces()?.len())
    }

    /// All faces, including `∅`, sorted like codewords.
    pub fn faces(&self) -> Result<Vec<Codeword>> {
        let cap_err = |count| CodeError::ResourceCap {
            what: "simplicial complex faces",
            count,
            cap: MAX_FACES,
        };
        let mut seen: HashSet<Codeword> = HashSet::new();
        for &f in &self.facets {
            if f.len() >= 64 || (1usize << f.len()) > MAX_FACES {
                return Err(cap_err(usize::MAX));
            }
            // Enumerate submasks of f.
            let bits = f.bits();
            let mut s = bits;
            loop {
                seen.insert(Codeword::from_bits(s));
                if seen.len() > MAX_FACES {
                    return Err(cap_err(seen.len()));
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & bits;
            }
        }
        let mut out: Vec<Codeword> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `link(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ K }`.
    pub fn link(&self, sigma: Codeword) -> Result<Self> {
        if !self.contains_face(sigma) {
            return Err(CodeError::NotAFace(sigma));
        }
        let faces = self
            .facets
            .iter()
            .filter(|&&f| sigma.is_subset(f))
            .map(|&f| f.difference(sigma))
            .collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximal(faces),
        })
    }
}

/// `Δ(C)`: the downclosure of the code.
pub fn simplicial_complex(code: &Code) -> SimplicialComplex {
    SimplicialComplex {
        n: code.n(),
        facets: code.maximal_words(),
    }
}

/// Codimension-one free faces as `(facet index, removed vertex)`, ordered by
/// face size then lexicographically. A face `F∖{v}` is free when `F` is the
/// only facet containing it; every collapse refines into such steps.
fn free_faces(facets: &[Codeword]) -> Vec<(usize, Codeword)> {
    let mut out = Vec::new();
    for (i, &f) in facets.iter().enumerate() {
        if f.len() < 2 {
            continue;
        }
        for v in f.neurons() {
            let sigma = f.without(v);
            let shared = facets
                .iter()
                .enumerate()
                .any(|(j, &g)| j != i && sigma.is_subset(g));
            if !shared {
                out.push((i, sigma));
            }
        }
    }
    out.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then(a.1.lex_cmp(b.1)));
    out
}

/// Remove the free face `sigma` together with its unique cofacet `facets[i]`.
fn collapse(facets: &[Codeword], i: usize, sigma: Codeword) -> Vec<Codeword> {
    let f = facets[i];
    let mut rest: Vec<Codeword> = facets
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &g)| g)
        .collect();
    let mut added = Vec::new();
    for v in sigma.neurons() {
        let face = f.without(v);
        if !rest.iter().any(|&g| face.is_subset(g)) {
            added.push(face);
        }
    }
    rest.extend(added);
    rest.sort();
    rest
}

struct CollapseSearch {
    failed: HashSet<Vec<Codeword>>,
    visited: usize,
}

impl CollapseSearch {
    fn run(&mut self, facets: Vec<Codeword>) -> Result<bool> {
        if facets.len() == 1 && facets[0].len() == 1 {
            return Ok(true);
        }
        if self.failed.contains(&facets) {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > MAX_COLLAPSE_STATES {
            return Err(CodeError::ResourceCap {
                what: "collapse search states",
                count: self.visited,
                cap: MAX_COLLAPSE_STATES,
            });
        }
        for (i, sigma) in free_faces(&facets) {
            if self.run(collapse(&facets, i, sigma))? {
                return Ok(true);
            }
        }
        self.failed.insert(facets);
        Ok(false)
    }
}

/// Whether the complex collapses to a single vertex, by exhaustive
/// backtracking over elementary collapses.
pub fn is_collapsible(k: &SimplicialComplex) -> Result<bool> {
    k.face_count()?;
    let mut search = CollapseSearch {
        failed: HashSet::new(),
        visited: 0,
    };
    search.run(k.facets.clone())
}

/// Reduced Betti numbers over F2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiNumbers {
    /// Rank in dimension −1: 1 exactly for the complex `{∅}`.
    pub minus_one: usize,
    /// Ranks in dimensions `0..=dim`.
    pub ranks: Vec<usize>,
}

impl BettiNumbers {
    pub fn is_zero(&self) -> bool {
        self.minus_one == 0 && self.ranks.iter().all(|&r| r == 0)
    }
}

/// Rank over F2 of the rows, each a bitset of column indices.
fn rank_f2(rows: Vec<Vec<u64>>) -> usize {
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for mut row in rows {
        loop {
            let lead = row
                .iter()
                .enumerate()
                .find(|(_, &w)| w != 0)
                .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize);
            let Some(lead) = lead else { break };
            match pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced homology over F2 from boundary-matrix ranks.
pub fn f2_reduced_homology(k: &SimplicialComplex) -> Result<BettiNumbers> {
    let faces = k.faces()?;
    if faces.is_empty() {
        return Ok(BettiNumbers::default());
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    // by_size[s] = faces with s vertices, i.e. dimension s − 1.
    let mut by_size: Vec<Vec<Codeword>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(f);
    }
    // boundary_rank[s] = rank of ∂ from size-s faces to size-(s−1) faces.
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<Codeword, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let blocks = by_size[s - 1].len().div_ceil(64);
        let rows = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; blocks];
                for v in f.neurons() {
                    let j = index[&f.without(v)];
                    row[j / 64] |= 1 << (j % 64);
                }
                row
            })
            .collect();
        boundary_rank[s] = rank_f2(rows);
    }
    let betti = |s: usize| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1];
    Ok(BettiNumbers {
        minus_one: betti(0),
        ranks: (1..=top).map(betti).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The link has nonzero reduced homology, so it is not contractible.
    ObstructionFirstKind,
    /// The link is collapsible.
    NoObstruction,
    /// The link is not collapsible (an obstruction of the second kind) but
    /// has trivial F2 homology, so contractibility is undetermined.
    ContractibilityUnknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tristate {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub sigma: Codeword,
    pub link_facets: Vec<Codeword>,
    pub collapsible: bool,
    pub betti: BettiNumbers,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    /// One entry per face of `Δ(C)` missing from `C`, `∅` included.
    pub missing: Vec<LinkReport>,
    /// No obstructions of the second kind: every link is collapsible.
    pub locally_great: bool,
    /// No obstructions of the first kind, where decidable.
    pub locally_good: Tristate,
}

fn analyze_link(k: &SimplicialComplex, sigma: Codeword) -> Result<LinkReport> {
    let link = k.link(sigma)?;
    let betti = f2_reduced_homology(&link)?;
    // Nonzero homology already rules out collapsibility.
    let collapsible = betti.is_zero() && is_collapsible(&link)?;
    let verdict = if !betti.is_zero() {
        Verdict::ObstructionFirstKind
    } else if collapsible {
        Verdict::NoObstruction
    } else {
        Verdict::ContractibilityUnknown
    };
    Ok(LinkReport {
        sigma,
        link_facets: link.facets,
        collapsible,
        betti,
        verdict,
    })
}

/// Analyze the link of every face of `Δ(C)` missing from `C`.
pub fn local_obstruction_report(code: &Code) -> Result<ObstructionReport> {
    let k = simplicial_complex(code);
    let missing: Vec<Codeword> = k
        .faces()?
        .into_iter()
        .filter(|&f| !code.contains(f))
        .collect();
    let missing = missing
        .par_iter()
        .map(|&sigma| analyze_link(&k, sigma))
        .collect::<Result<Vec<_>>>()?;
    let locally_great = missing.iter().all(|r| r.collapsible);
    let locally_good = if missing
        .iter()
        .any(|r| r.verdict == Verdict::ObstructionFirstKind)
    {
        Tristate::No
    } else if locally_great {
        Tristate::Yes
    } else {
        Tristate::Unknown
    };
    Ok(ObstructionReport {
        missing,
        locally_great,
        locally_good,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{parse_code, parse_codeword};

    fn w(s: &str) -> Codeword {
        parse_codeword(s).unwrap()
    }

    fn cx(n: usize, faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, faces.iter().map(|s| w(s))).unwrap()
    }

    fn c0() -> Code {
        parse_code("{3456,123,145,256,45,56,1,2,3,0}").unwrap()
    }

    #[test]
    fn complex_of_code() {
        let k = simplicial_complex(&c0());
        assert_eq!(k.facets(), &[w("3456"), w("123"), w("145"), w("256")]);
        let e = simplicial_complex(&parse_code("{}").unwrap());
        assert_eq!(e.facets(), &[Codeword::EMPTY]);
        assert_eq!(e.faces().unwrap(), vec![Codeword::EMPTY]);
    }

    #[test]
    fn links_of_c0() {
        let k = simplicial_complex(&c0());
        assert_eq!(k.link(w("12")).unwrap().facets(), &[w("3")]);
        assert_eq!(k.link(w("34")).unwrap().facets(), &[w("56")]);
        let l5 = k.link(w("5")).unwrap();
        assert_eq!(l5.facets(), &[w("346"), w("14"), w("26")]);
        assert_eq!(k.link(Codeword::EMPTY).unwrap(), k);
        assert_eq!(k.link(w("3456")).unwrap().facets(), &[Codeword::EMPTY]);
        assert!(matches!(k.link(w("12345")), Err(CodeError::NotAFace(_))));
    }

    #[test]
    fn collapsibility() {
        assert!(is_collapsible(&cx(1, &["1"])).unwrap());
        assert!(is_collapsible(&cx(3, &["123"])).unwrap());
        assert!(is_collapsible(&cx(6, &["346", "14", "26"])).unwrap());
        assert!(!is_collapsible(&cx(3, &["12", "13", "23"])).unwrap());
        assert!(!is_collapsible(&cx(2, &["1", "2"])).unwrap());
        assert!(!is_collapsible(&cx(0, &["0"])).unwrap());
        assert!(!is_collapsible(&SimplicialComplex::from_faces(0, []).unwrap()).unwrap());
    }

    #[test]
    fn homology() {
        let h = |k: &SimplicialComplex| f2_reduced_homology(k).unwrap();
        assert_eq!(h(&cx(2, &["1", "2"])).ranks, vec![1]);
        assert_eq!(h(&cx(3, &["12", "13", "23"])).ranks, vec![0, 1]);
        let e = h(&cx(0, &["0"]));
        assert_eq!((e.minus_one, e.ranks.len()), (1, 0));
        assert!(h(&cx(3, &["123"])).is_zero());
        // Boundary of the tetrahedron is a 2-sphere.
        assert_eq!(
            h(&cx(4, &["123", "124", "134", "234"])).ranks,
            vec![0, 0, 1]
        );
        assert!(h(&SimplicialComplex::from_faces(0, []).unwrap()).is_zero());
    }

    #[test]
    fn c0_is_locally_great() {
        let r = local_obstruction_report(&c0()).unwrap();
        assert!(r.locally_great);
        assert_eq!(r.locally_good, Tristate::Yes);
        assert!(r
            .missing
            .iter()
            .all(|l| l.verdict == Verdict::NoObstruction));
    }

    #[test]
    fn empty_set_obstruction() {
        let r = local_obstruction_report(&parse_code("n=2 {1,2}").unwrap()).unwrap();
        assert_eq!(r.missing.len(), 1);
        assert_eq!(r.missing[0].sigma, Codeword::EMPTY);
        assert_eq!(r.missing[0].verdict, Verdict::ObstructionFirstKind);
        assert_eq!(r.locally_good, Tristate::No);
        assert!(!r.locally_great);
    }

    #[test]
    fn complex_code_has_no_missing_faces() {
        let r = local_obstruction_report(&parse_code("{12,1,2,0}").unwrap()).unwrap();
        assert!(r.missing.is_empty());
        assert!(r.locally_great);
    }

    /// A 9-vertex dunce hat: contractible, F2-acyclic, and with no free faces.
    const DUNCE: [&str; 19] = [
        "124", "125", "128", "135", "136", "137", "148", "167", "234", "236", "238", "256", "345",
        "378", "459", "489", "569", "679", "789",
    ];

    #[test]
    fn dunce_hat_is_acyclic_but_not_collapsible() {
        let k = cx(9, &DUNCE);
        assert!(f2_reduced_homology(&k).unwrap().is_zero());
        assert!(!is_collapsible(&k).unwrap());
    }

    #[test]
    fn dunce_hat_link_gives_unknown_verdict() {
        let code = Code::new(9, DUNCE.iter().map(|s| w(s))).unwrap();
        let r = local_obstruction_report(&code).unwrap();
        let at_empty = r.missing.iter().find(|l| l.sigma.is_empty()).unwrap();
        assert_eq!(at_empty.verdict, Verdict::ContractibilityUnknown);
        assert!(!r.locally_great);
    }
}
