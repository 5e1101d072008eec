//! Trivial and redundant neurons, reduction to the reduced representative,
//! and permutation-canonical forms.
//!
//! Two codes are isomorphic iff their reduced representatives differ by a
//! neuron permutation, so isomorphism is decided by comparing canonical
//! forms: reduce, then pick the least element of the permutation orbit under
//! [`canonical_cmp`].

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::code::{Code, Codeword, FormatStyle, Permutation};
use crate::morphism::Morphism;
use crate::trunks::{irreducible_trunks, simple_trunks, trunk_members};

pub fn trivial_neurons(code: &Code) -> Vec<usize> {
    let support = code.support();
    (1..=code.n()).filter(|&i| !support.contains(i)).collect()
}

/// Every nontrivial neuron `i` with `Tk(i) = Tk(σ)` for some `σ ∌ i`, paired
/// with the witness `σ = generator(Tk(i)) \ {i}`.
pub fn redundant_neurons(code: &Code) -> Vec<(usize, Codeword)> {
    simple_trunks(code)
        .into_iter()
        .filter_map(|(i, t)| {
            let g = t.generator()?;
            let sigma = g.without(i);
            (trunk_members(code, sigma) == *t.members()).then_some((i, sigma))
        })
        .collect()
}

/// A code is reduced iff `i ↦ Tk(i)` is a bijection onto its irreducible trunks.
pub fn is_reduced(code: &Code) -> bool {
    let irreducible = irreducible_trunks(code);
    if irreducible.len() != code.n() {
        return false;
    }
    let simple: HashSet<_> = simple_trunks(code)
        .into_iter()
        .map(|(_, t)| t.members().clone())
        .collect();
    simple.len() == code.n() && irreducible.iter().all(|t| simple.contains(t.members()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    pub reduced: Code,
    /// The isomorphism onto `reduced`, given by the irreducible trunks.
    pub iso: Morphism,
    /// Generator of the irreducible trunk behind each reduced neuron.
    pub neuron_origin: Vec<Codeword>,
}

pub fn reduce(code: &Code) -> ReductionResult {
    let trunks = irreducible_trunks(code);
    let neuron_origin = trunks
        .iter()
        .map(|t| t.generator().expect("irreducible trunks are nonempty"))
        .collect();
    let iso = Morphism::new(code.clone(), trunks).expect("irreducible trunks are trunks");
    ReductionResult {
        reduced: iso.image(),
        iso,
        neuron_origin,
    }
}

pub fn minimum_neuron_number(code: &Code) -> usize {
    irreducible_trunks(code).len()
}

/// Canonical representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm {
    /// Serialized as its text form, e.g. `"{12,1,0}"`.
    #[serde(serialize_with = "crate::code::serialize_code_as_text")]
    pub code: Code,
    /// Sends each neuron of the reduced code (as produced by [`reduce`]) to
    /// its position in `code`.
    pub witness: Permutation,
}

pub fn canonical_form(code: &Code) -> CanonicalForm {
    canonicalize_reduced(&reduce(code).reduced)
}

pub fn is_isomorphic(a: &Code, b: &Code) -> bool {
    canonical_form(a).code == canonical_form(b).code
}

/// Key under which canonical codes are stored and cached.
pub fn canonical_key(code: &Code) -> String {
    crate::code::format_code(code, FormatStyle::Json).expect("JSON always renders")
}

/// Per-neuron invariant: simple-trunk size, then the sorted sizes of the
/// words containing the neuron.
type NeuronInvariant = (usize, Vec<usize>);

fn neuron_invariants(code: &Code) -> Vec<NeuronInvariant> {
    (1..=code.n())
        .map(|i| {
            let mut sizes: Vec<usize> = code
                .words()
                .iter()
                .filter(|w| w.contains(i))
                .map(|w| w.len())
                .collect();
            sizes.sort_unstable();
            (sizes.len(), sizes)
        })
        .collect()
}

/// Values whose sorted list at level `k` is the `k`-th refinement key:
/// position `p` (0-based) contributes bit `n - 1 - p`.
fn prefix_values(code: &Code, order: &[usize]) -> Vec<u64> {
    let n = code.n();
    code.words()
        .iter()
        .map(|w| {
            order
                .iter()
                .enumerate()
                .filter(|(_, &neuron)| w.contains(neuron))
                .fold(0u64, |acc, (p, _)| acc | 1 << (n - 1 - p))
        })
        .collect()
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

/// The fixed total order used to pick canonical representatives.
///
/// Codes compare by neuron count, then word count, then the sequence of
/// neuron invariants read in neuron order, then level by level: at level `k`
/// the sorted list of each word's restriction to neurons `1..=k`, read as a
/// binary number with neuron 1 most significant. The last level is the whole
/// code, so distinct codes never compare equal.
pub fn canonical_cmp(a: &Code, b: &Code) -> Ordering {
    a.n()
        .cmp(&b.n())
        .then(a.len().cmp(&b.len()))
        .then_with(|| neuron_invariants(a).cmp(&neuron_invariants(b)))
        .then_with(|| {
            let ida: Vec<usize> = (1..=a.n()).collect();
            let pa = prefix_values(a, &ida);
            let pb = prefix_values(b, &ida);
            let n = a.n();
            for k in 1..=n {
                let mask = !((1u64 << (n - k)) - 1);
                let la = sorted(pa.iter().map(|v| v & mask).collect());
                let lb = sorted(pb.iter().map(|v| v & mask).collect());
                match la.cmp(&lb) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
}

/// Neurons `i, j` such that swapping them maps the code to itself. Returns,
/// for each neuron, the smallest neuron in its class.
fn transposition_classes(code: &Code) -> Vec<usize> {
    let n = code.n();
    let mut rep: Vec<usize> = (1..=n).collect();
    for i in 1..=n {
        if rep[i - 1] != i {
            continue;
        }
        for j in i + 1..=n {
            if rep[j - 1] != j {
                continue;
            }
            let swapped = code.words().iter().all(|&w| {
                let (hi, hj) = (w.contains(i), w.contains(j));
                hi == hj
                    || code.contains(if hi {
                        w.without(i).with(j)
                    } else {
                        w.without(j).with(i)
                    })
            });
            if swapped {
                rep[j - 1] = i;
            }
        }
    }
    rep
}

#[derive(Clone)]
struct PartialOrder {
    order: Vec<usize>,
    used: u64,
    values: Vec<u64>,
}

/// Canonical form of a code that is already reduced.
///
/// Neurons are placed into positions one at a time. Candidates for a
/// position must carry the next invariant in sorted order; only one neuron
/// per transposition class is tried; and after each step only the partial
/// orders with the least sorted prefix list survive. Partial orders with the
/// same placed set and the same per-word prefixes have identical futures and
/// are merged.
pub fn canonicalize_reduced(code: &Code) -> CanonicalForm {
    debug_assert!(is_reduced(code), "{code:?} is not reduced");
    let n = code.n();
    let invariants = neuron_invariants(code);
    let mut target = invariants.clone();
    target.sort();
    let class = transposition_classes(code);

    let mut states = vec![PartialOrder {
        order: Vec::with_capacity(n),
        used: 0,
        values: vec![0; code.len()],
    }];
    for (k, want) in target.iter().enumerate() {
        let bit = 1u64 << (n - 1 - k);
        let mut best: Option<Vec<u64>> = None;
        let mut next: Vec<PartialOrder> = Vec::new();
        let mut seen: HashSet<(u64, Vec<u64>)> = HashSet::new();
        for st in &states {
            for cand in 1..=n {
                if st.used & (1 << (cand - 1)) != 0 || invariants[cand - 1] != *want {
                    continue;
                }
                let rep = class[cand - 1];
                let twin_unused_below =
                    (rep..cand).any(|j| class[j - 1] == rep && st.used & (1 << (j - 1)) == 0);
                if twin_unused_below {
                    continue;
                }
                let values: Vec<u64> = st
                    .values
                    .iter()
                    .zip(code.words())
                    .map(|(&v, w)| if w.contains(cand) { v | bit } else { v })
                    .collect();
                let key = sorted(values.clone());
                match best.as_ref().map(|b| key.cmp(b)) {
                    Some(Ordering::Greater) => continue,
                    Some(Ordering::Less) | None => {
                        best = Some(key);
                        next.clear();
                        seen.clear();
                    }
                    Some(Ordering::Equal) => {}
                }
                let used = st.used | 1 << (cand - 1);
                if seen.insert((used, values.clone())) {
                    let mut order = st.order.clone();
                    order.push(cand);
                    next.push(PartialOrder {
                        order,
                        used,
                        values,
                    });
                }
            }
        }
        states = next;
    }
    let winner = &states[0];
    let mut images = vec![0usize; n];
    for (p, &neuron) in winner.order.iter().enumerate() {
        images[neuron - 1] = p + 1;
    }
    let witness = Permutation::from_one_based(&images).expect("order is a permutation");
    let canonical = witness.apply_code(code);
    CanonicalForm {
        code: canonical,
        witness,
    }
}
