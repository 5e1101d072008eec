//! Brute-force oracles and randomized property suites shared by the
//! integration tests. Every oracle here avoids the search shortcuts of the
//! library routine it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use codecat::bits::WordSet;
use codecat::code::{Code, Codeword, Permutation};
use codecat::constructions::is_intersection_complete;
use codecat::enumeration::{enumerate_reduced_images, EnumerationConfig};
use codecat::morphism::{decompose, is_morphism, ExplicitMap, Morphism};
use codecat::reduction::{canonical_form, is_isomorphic, is_reduced, reduce};
use codecat::ring::{
    monomial_map_to_morphism, morphism_to_monomial_map, MonomialImage, MonomialMap,
};
use codecat::topology::{f2_reduced_homology, is_collapsible, SimplicialComplex};
use codecat::trunks::all_trunks;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[derive(Debug, Default)]
pub struct SuiteReport {
    pub cases: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn violation(&mut self, msg: String) {
        if self.violations.len() < 20 {
            self.violations.push(msg);
        } else if self.violations.len() == 20 {
            self.violations
                .push("…further violations suppressed".into());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every code on exactly `n` neurons with at most `max_words` words.
pub fn all_codes(n: usize, max_words: usize) -> Vec<Code> {
    let universe: Vec<Codeword> = (0..1u64 << n).map(Codeword::from_bits).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << universe.len() {
        if mask.count_ones() as usize > max_words {
            continue;
        }
        let words = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &w)| w);
        out.push(Code::new(n, words).unwrap());
    }
    out
}

/// `U` is a trunk iff it is empty or equals the set of words containing
/// the intersection of its members.
pub fn is_trunk_naive(code: &Code, members: &[Codeword]) -> bool {
    let Some(&first) = members.first() else {
        return true;
    };
    let sigma = members.iter().fold(first, |a, &b| a.intersection(b));
    let forced: BTreeSet<Codeword> = code
        .words()
        .iter()
        .copied()
        .filter(|w| sigma.is_subset(*w))
        .collect();
    forced == members.iter().copied().collect()
}

/// Every subset of `[n]`, as a codeword.
fn all_sigmas(n: usize) -> impl Iterator<Item = Codeword> {
    (0..1u64 << n).map(Codeword::from_bits)
}

/// Trunks found by trying `Tk(σ)` for every `σ ⊆ [n]`, plus the empty set.
fn trunks_naive(code: &Code) -> Vec<Vec<Codeword>> {
    let mut set: BTreeSet<Vec<Codeword>> = BTreeSet::new();
    set.insert(Vec::new());
    for sigma in all_sigmas(code.n()) {
        set.insert(
            code.words()
                .iter()
                .copied()
                .filter(|w| sigma.is_subset(*w))
                .collect(),
        );
    }
    set.into_iter().collect()
}

fn map_from_coordinates(code: &Code, coords: &[&Vec<Codeword>]) -> ExplicitMap {
    let m = coords.len();
    ExplicitMap::from_fn(code, m, |c| {
        coords
            .iter()
            .enumerate()
            .filter(|(_, u)| u.contains(&c))
            .fold(Codeword::EMPTY, |acc, (j, _)| acc.with(j + 1))
    })
    .unwrap()
}

/// Multisets of size `k` drawn from `0..choices`, as non-decreasing sequences.
fn multisets(choices: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(
        choices: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..choices {
            cur.push(i);
            rec(choices, k, i, cur, f);
            cur.pop();
        }
    }
    rec(choices, k, 0, &mut Vec::new(), &mut f);
}

/// Reduced images of `code` by brute force over functions `C → 2^[m]`.
///
/// A function is the same as its tuple of coordinate preimages
/// `U_j = { c : j ∈ f(c) }`, and permuting coordinates permutes the image,
/// so non-decreasing tuples suffice. For `m ≤ 2` every tuple of arbitrary
/// subsets is tried and [`is_morphism`] decides; beyond that coordinates are
/// restricted to trunks found by the naive test, which is exactly the
/// morphism condition. `m` runs up to the number of nonempty proper trunks,
/// the largest possible neuron count of a reduced image.
pub fn brute_force_images(code: &Code, report: &mut SuiteReport) -> BTreeSet<String> {
    let words = code.words();
    let subsets: Vec<Vec<Codeword>> = (0..1u32 << words.len())
        .map(|mask| {
            words
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &w)| w)
                .collect()
        })
        .collect();
    let trunks = trunks_naive(code);
    let proper = trunks
        .iter()
        .filter(|t| !t.is_empty() && t.len() != words.len())
        .count();
    let mut memo: HashMap<Code, String> = HashMap::new();
    let mut out = BTreeSet::new();
    let mut record = |f: &ExplicitMap, out: &mut BTreeSet<String>| {
        let image = f.image();
        let key = memo
            .entry(image.clone())
            .or_insert_with(|| canonical_form(&reduce(&image).reduced).code.to_string())
            .clone();
        out.insert(key);
    };
    for m in 0..=2usize.min(proper.max(1)) {
        multisets(subsets.len(), m, |idx| {
            let coords: Vec<&Vec<Codeword>> = idx.iter().map(|&i| &subsets[i]).collect();
            let f = map_from_coordinates(code, &coords);
            let naive = coords.iter().all(|u| is_trunk_naive(code, u));
            if is_morphism(&f) != naive {
                report.violation(format!("is_morphism disagrees with trunk test on {code}"));
            }
            if naive {
                record(&f, &mut out);
            }
        });
    }
    for m in 3..=proper {
        multisets(trunks.len(), m, |idx| {
            let coords: Vec<&Vec<Codeword>> = idx.iter().map(|&i| &trunks[i]).collect();
            let f = map_from_coordinates(code, &coords);
            record(&f, &mut out);
        });
    }
    out
}

/// Criterion 6(a): enumeration agrees with brute force on every code with
/// at most 5 words on at most 3 neurons.
pub fn suite_enumeration_vs_brute_force() -> SuiteReport {
    let mut report = SuiteReport::default();
    let cfg = EnumerationConfig::default();
    for n in 0..=3 {
        for code in all_codes(n, 5) {
            report.cases += 1;
            let fast = enumerate_reduced_images(&code, &cfg).unwrap();
            for img in &fast.images {
                if !is_reduced(img) || canonical_form(img).code != *img {
                    report.violation(format!("{code}: image {img} is not canonical and reduced"));
                }
            }
            let fast: BTreeSet<String> = fast.images.iter().map(|c| c.to_string()).collect();
            let slow = brute_force_images(&code, &mut report);
            if fast != slow {
                report.violation(format!(
                    "{code}: enumeration {fast:?} vs brute force {slow:?}"
                ));
            }
        }
    }
    report
}

pub fn random_code(rng: &mut StdRng, max_n: usize, max_words: usize) -> Code {
    let n = rng.gen_range(0..=max_n);
    let k = rng.gen_range(1..=max_words);
    let words = (0..k).map(|_| Codeword::from_bits(rng.gen_range(0..1u64 << n)));
    Code::new(n, words).unwrap()
}

pub fn random_morphism(rng: &mut StdRng, code: &Code, max_m: usize) -> Morphism {
    let trunks = all_trunks(code);
    let m = rng.gen_range(0..=max_m);
    let chosen = (0..m)
        .map(|_| trunks.choose(rng).unwrap().clone())
        .collect();
    Morphism::new(code.clone(), chosen).unwrap()
}

/// Criterion 6(b): monotonicity and trunk preimages on 1000 random applications.
pub fn suite_morphism_invariants(seed: u64) -> SuiteReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..1000 {
        report.cases += 1;
        let code = random_code(&mut rng, 6, 10);
        let f = random_morphism(&mut rng, &code, 5);
        let fx = |c: Codeword| f.apply(c).unwrap();
        for &a in code.words() {
            for &b in code.words() {
                if a.is_subset(b) && !fx(a).is_subset(fx(b)) {
                    report.violation(format!("{code}: {a} ⊆ {b} but f({a}) ⊄ f({b})"));
                }
            }
        }
        for sigma in all_sigmas(f.m()) {
            let pre: Vec<Codeword> = code
                .words()
                .iter()
                .copied()
                .filter(|&c| sigma.is_subset(fx(c)))
                .collect();
            if !is_trunk_naive(&code, &pre) {
                report.violation(format!("{code}: preimage of Tk({sigma}) is not a trunk"));
            }
        }
        let explicit = f.to_explicit(None).unwrap();
        if !is_morphism(&explicit) || decompose(&explicit).unwrap() != f {
            report.violation(format!("{code}: normal form does not round-trip"));
        }
    }
    report
}

fn intersection_closure(code: &Code) -> Code {
    let mut words: Vec<Codeword> = code.words().to_vec();
    let mut i = 0;
    while i < words.len() {
        for j in 0..i {
            let x = words[i].intersection(words[j]);
            if !words.contains(&x) {
                words.push(x);
            }
        }
        i += 1;
    }
    Code::new(code.n(), words).unwrap()
}

fn pairwise_closed(code: &Code) -> bool {
    code.words().iter().all(|&a| {
        code.words()
            .iter()
            .all(|&b| code.contains(a.intersection(b)))
    })
}

/// Criterion 6(c): images of intersection complete codes stay intersection complete.
pub fn suite_intersection_complete_images(seed: u64) -> SuiteReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..200 {
        report.cases += 1;
        let code = intersection_closure(&random_code(&mut rng, 6, 8));
        if !pairwise_closed(&code) || !is_intersection_complete(&code) {
            report.violation(format!("{code}: generator is not intersection complete"));
            continue;
        }
        let f = random_morphism(&mut rng, &code, 6);
        let image = f.image();
        if !pairwise_closed(&image) || !is_intersection_complete(&image) {
            report.violation(format!(
                "{code}: image {image} is not intersection complete"
            ));
        }
    }
    report
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    Permutation::from_one_based(&p).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Isomorphism of reduced codes by trying every neuron permutation.
fn isomorphic_brute(a: &Code, b: &Code) -> bool {
    let (a, b) = (reduce(a).reduced, reduce(b).reduced);
    if a.n() != b.n() || a.len() != b.len() {
        return false;
    }
    let target: HashSet<Codeword> = b.words().iter().copied().collect();
    permutations(a.n()).iter().any(|p| {
        a.words().iter().all(|w| {
            let image = w
                .neurons()
                .fold(Codeword::EMPTY, |acc, i| acc.with(p[i - 1] + 1));
            target.contains(&image)
        })
    })
}

/// Criterion 6(d): reduce is idempotent and is_isomorphic is an equivalence
/// relation agreeing with a permutation search.
pub fn suite_reduction_laws(seed: u64) -> SuiteReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    let mut previous: Option<Code> = None;
    for _ in 0..500 {
        report.cases += 1;
        let x = random_code(&mut rng, 6, 9);
        let r = reduce(&x);
        let rr = reduce(&r.reduced);
        if !is_reduced(&r.reduced)
            || rr.reduced.n() != r.reduced.n()
            || canonical_form(&rr.reduced) != canonical_form(&r.reduced)
            || !is_isomorphic(&x, &r.reduced)
        {
            report.violation(format!("{x}: reduce is not idempotent"));
        }
        if r.iso.image() != r.reduced || !r.iso.is_injective() {
            report.violation(format!(
                "{x}: reduction map is not a bijection onto the reduced code"
            ));
        }
        let p = random_permutation(&mut rng, x.n());
        let q = random_permutation(&mut rng, x.n());
        let y = p.apply_code(&x);
        let z = q.apply_code(&y);
        if !is_isomorphic(&x, &x) || !is_isomorphic(&x, &y) || !is_isomorphic(&y, &x) {
            report.violation(format!("{x}: reflexivity or symmetry fails"));
        }
        if !(is_isomorphic(&y, &z) && is_isomorphic(&x, &z) && isomorphic_brute(&x, &z)) {
            report.violation(format!("{x}: transitivity fails"));
        }
        if canonical_form(&x).code != canonical_form(&z).code {
            report.violation(format!("{x}: canonical form is not permutation invariant"));
        }
        if let Some(prev) = previous.replace(x.clone()) {
            let fast = is_isomorphic(&prev, &x);
            if fast != isomorphic_brute(&prev, &x) {
                report.violation(format!(
                    "{prev} vs {x}: is_isomorphic disagrees with permutation search"
                ));
            }
            if fast != (canonical_form(&prev).code == canonical_form(&x).code) {
                report.violation(format!(
                    "{prev} vs {x}: canonical forms disagree with is_isomorphic"
                ));
            }
        }
    }
    report
}

/// Functions `C → D` as lists of image words aligned with `C`'s words.
fn all_set_functions(c: &Code, d: &Code) -> Vec<Vec<Codeword>> {
    let mut out = vec![Vec::new()];
    for _ in c.words() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                d.words().iter().map(move |&w| {
                    let mut next = prefix.clone();
                    next.push(w);
                    next
                })
            })
            .collect();
    }
    out
}

/// `x_σ` evaluated on the words of `c`.
fn monomial_values(c: &Code, sigma: Codeword) -> Vec<bool> {
    c.words().iter().map(|w| sigma.is_subset(*w)).collect()
}

/// Criterion 6(e): morphisms `C → D` and monomial maps `R_D → R_C` are in
/// bijection, on every pair of codes with at most 3 words on at most 3 neurons.
pub fn suite_ring_hom_bijection() -> SuiteReport {
    let mut report = SuiteReport::default();
    let codes: Vec<Code> = (0..=3).flat_map(|n| all_codes(n, 3)).collect();
    for c in &codes {
        // Candidate images of a single variable: zero, or x_σ, deduplicated
        // as functions on C.
        let mut options: Vec<(Option<Codeword>, Vec<bool>)> = vec![(None, vec![false; c.len()])];
        for sigma in all_sigmas(c.n()) {
            let v = monomial_values(c, sigma);
            if !options.iter().any(|(_, w)| *w == v) {
                options.push((Some(sigma), v));
            }
        }
        for d in &codes {
            report.cases += 1;
            // Side 1: set functions filtered by is_morphism.
            let morphisms: BTreeSet<Vec<Codeword>> = all_set_functions(c, d)
                .into_iter()
                .filter(|images| {
                    let pairs = c
                        .words()
                        .iter()
                        .copied()
                        .zip(images.iter().copied())
                        .collect();
                    is_morphism(&ExplicitMap::new(c.clone(), d.clone(), pairs).unwrap())
                })
                .collect();
            // Side 2: per-variable assignments, kept when φ(ρ_e) = 0 for
            // every e ⊆ [m] outside D.
            let m = d.n();
            let mut from_rings: BTreeSet<Vec<Codeword>> = BTreeSet::new();
            let mut ring_count = 0usize;
            let mut choice = vec![0usize; m];
            loop {
                let well_defined = all_sigmas(m).filter(|e| !d.contains(*e)).all(|e| {
                    (0..c.len())
                        .all(|i| !(1..=m).all(|j| options[choice[j - 1]].1[i] == e.contains(j)))
                });
                if well_defined {
                    ring_count += 1;
                    let assignment = choice
                        .iter()
                        .map(|&k| {
                            options[k]
                                .0
                                .map_or(MonomialImage::Zero, MonomialImage::Mono)
                        })
                        .collect();
                    let phi = MonomialMap::new(d.clone(), c.clone(), assignment).unwrap();
                    match monomial_map_to_morphism(&phi) {
                        Ok(f) => {
                            let images: Vec<Codeword> =
                                c.words().iter().map(|&w| f.apply(w).unwrap()).collect();
                            from_rings.insert(images);
                            let back = morphism_to_monomial_map(&f, Some(d)).unwrap();
                            if back != phi {
                                report.violation(format!(
                                    "{c} → {d}: monomial map does not round-trip"
                                ));
                            }
                        }
                        Err(e) => {
                            report.violation(format!("{c} → {d}: valid monomial map rejected: {e}"))
                        }
                    }
                }
                // Next assignment in odometer order.
                let mut j = 0;
                while j < m && choice[j] + 1 == options.len() {
                    choice[j] = 0;
                    j += 1;
                }
                if j == m {
                    break;
                }
                choice[j] += 1;
            }
            if ring_count != morphisms.len() || from_rings != morphisms {
                report.violation(format!(
                    "{c} → {d}: {} morphisms vs {ring_count} monomial maps",
                    morphisms.len()
                ));
            }
            // Faithfulness: distinct morphisms have distinct pullbacks.
            let pullbacks: HashSet<Vec<MonomialImage>> = morphisms
                .iter()
                .map(|images| {
                    let pairs = c
                        .words()
                        .iter()
                        .copied()
                        .zip(images.iter().copied())
                        .collect();
                    let f =
                        decompose(&ExplicitMap::new(c.clone(), d.clone(), pairs).unwrap()).unwrap();
                    morphism_to_monomial_map(&f, Some(d))
                        .unwrap()
                        .assignment()
                        .to_vec()
                })
                .collect();
            if pullbacks.len() != morphisms.len() {
                report.violation(format!("{c} → {d}: pullback is not injective"));
            }
        }
    }
    report
}

/// Random complex with at most 12 faces (∅ included) on at most 5 vertices.
pub fn random_complex(rng: &mut StdRng) -> SimplicialComplex {
    let n = rng.gen_range(1..=5);
    let mut facets: Vec<Codeword> = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let f = Codeword::from_bits(rng.gen_range(1..1u64 << n));
        let mut trial = facets.clone();
        trial.push(f);
        let k = SimplicialComplex::from_faces(n, trial.clone()).unwrap();
        if k.face_count().unwrap() <= 12 {
            facets = trial;
        }
    }
    SimplicialComplex::from_faces(n, facets).unwrap()
}

/// Criterion 6(f): collapsible complexes have zero reduced F2 homology.
pub fn suite_collapsible_homology(seed: u64) -> (SuiteReport, usize) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    let mut collapsible = 0;
    for _ in 0..200 {
        report.cases += 1;
        let k = random_complex(&mut rng);
        let faces = k.face_count().unwrap();
        if faces > 12 {
            report.violation(format!("{:?}: {faces} faces", k.facets()));
        }
        let c = is_collapsible(&k).unwrap();
        let h = f2_reduced_homology(&k).unwrap();
        if c {
            collapsible += 1;
            if !h.is_zero() {
                report.violation(format!("{:?}: collapsible but homology {h:?}", k.facets()));
            }
        }
        // Euler characteristic check on the homology routine.
        let faces = k.faces().unwrap();
        let euler: i64 = faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum::<i64>();
        let betti: i64 = h
            .ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum::<i64>()
            - h.minus_one as i64;
        if euler != betti {
            report.violation(format!(
                "{:?}: reduced Euler characteristic {euler} vs Betti sum {betti}",
                k.facets()
            ));
        }
    }
    (report, collapsible)
}

pub fn words_of(set: &WordSet, code: &Code) -> Vec<Codeword> {
    set.iter().map(|i| code.word(i)).collect()
}
