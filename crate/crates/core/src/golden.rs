//! Golden checks: worked examples with known answers, runnable as a self test.

use serde::Serialize;

use crate::code::{
    format_code, parse_code, parse_codeword, Code, Codeword, FormatStyle, Permutation,
};
use crate::constructions::{
    coproduct, is_intersection_complete, is_max_intersection_complete, product,
};
use crate::enumeration::{
    enumerate_reduced_images, image_set_difference, verify_image_membership, EnumerationConfig,
};
use crate::morphism::{
    compose, decompose, is_morphism, permutation_morphism, restriction_morphism, union_morphism,
    ExplicitMap, Morphism,
};
use crate::reduction::{
    canonical_form, is_isomorphic, is_reduced, minimum_neuron_number, reduce, redundant_neurons,
    trivial_neurons,
};
use crate::ring::{
    coordinate, evaluate_monomial, indicator, monomial_map_to_morphism, morphism_to_monomial_map,
    MonomialImage,
};
use crate::topology::{
    f2_reduced_homology, is_collapsible, local_obstruction_report, simplicial_complex,
    SimplicialComplex, Tristate, Verdict,
};
use crate::trunks::{all_trunks, irreducible_trunks, is_trunk, nonempty_trunks, trunk_of, Trunk};

/// Codes used throughout the checks.
pub mod fixtures {
    /// Reduced, not intersection complete.
    pub const C: &str = "{12,23,1,3,0}";
    /// Intersection complete, with a bijection from `C` that is a morphism.
    pub const D: &str = "{12,34,1,3,0}";
    /// Neuron 3 is redundant to `{1,2}`.
    pub const REDUNDANT: &str = "{123,1,2,0}";
    /// Source code of the four-trunk morphism onto `{1234,12,13,1}`.
    pub const FOUR_TRUNK_SOURCE: &str = "{12,23,1,2,0}";
    /// The 12-word code whose image-set difference isolates `MNC_C0`.
    pub const MNC_C: &str = "{2345,123,134,145,13,14,23,34,45,3,4,0}";
    /// `MNC_C ∪ {234,345}`.
    pub const MNC_D: &str = "{2345,123,134,145,234,345,13,14,23,34,45,3,4,0}";
    /// `MNC_C ∪ {1}`.
    pub const MNC_E: &str = "{2345,123,134,145,13,14,23,34,45,1,3,4,0}";
    /// Locally great, with every simple trunk but one max-intersection complete.
    pub const MNC_C0: &str = "{3456,123,145,256,45,56,1,2,3,0}";
    pub const MNC_C1: &str = "{1236,3456,145,256,26,36,45,56,1,6,0}";
    pub const MNC_C2: &str = "{124,135,145,234,14,15,24,3,4,0}";
}

use fixtures::*;

type CheckResult = std::result::Result<(), String>;

pub struct GoldenCheck {
    pub id: &'static str,
    pub description: &'static str,
    run: fn() -> CheckResult,
}

impl GoldenCheck {
    pub fn run(&self) -> GoldenOutcome {
        let result =
            std::panic::catch_unwind(self.run).unwrap_or_else(|_| Err("panicked".to_string()));
        GoldenOutcome {
            id: self.id,
            description: self.description,
            passed: result.is_ok(),
            detail: result.err(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn code(s: &str) -> std::result::Result<Code, String> {
    parse_code(s).map_err(|e| format!("parse {s}: {e}"))
}

fn word(s: &str) -> Codeword {
    parse_codeword(s).expect("fixture codeword")
}

fn words(list: &[&str]) -> Vec<Codeword> {
    list.iter().map(|s| word(s)).collect()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, what: &str) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(format!("failed: {what}"))
    }
}

fn same<T: PartialEq + std::fmt::Debug>(actual: T, expected: T) -> CheckResult {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {actual:?}"))
    }
}

fn trunk_words(code: &Code, t: &Trunk) -> Vec<Codeword> {
    t.words(code).collect()
}

fn four_trunk_morphism() -> std::result::Result<Morphism, String> {
    Morphism::from_generators(
        code(FOUR_TRUNK_SOURCE)?,
        &[
            Some(word("0")),
            Some(word("2")),
            Some(word("1")),
            Some(word("12")),
        ],
    )
    .map_err(err)
}

fn bijection_c_to_d() -> std::result::Result<ExplicitMap, String> {
    let pairs = [
        ("12", "12"),
        ("23", "34"),
        ("1", "1"),
        ("3", "3"),
        ("0", "0"),
    ];
    ExplicitMap::new(
        code(C)?,
        code(D)?,
        pairs.iter().map(|(a, b)| (word(a), word(b))).collect(),
    )
    .map_err(err)
}

fn inverse_d_to_c() -> std::result::Result<ExplicitMap, String> {
    let pairs = [
        ("12", "12"),
        ("34", "23"),
        ("1", "1"),
        ("3", "3"),
        ("0", "0"),
    ];
    ExplicitMap::new(
        code(D)?,
        code(C)?,
        pairs.iter().map(|(a, b)| (word(a), word(b))).collect(),
    )
    .map_err(err)
}

/// The surjection `MNC_C1 → MNC_C0` given by six trunks of `MNC_C1`.
fn c1_to_c0() -> std::result::Result<Morphism, String> {
    let gens: Vec<Option<Codeword>> = ["1", "2", "3", "4", "5", "56"]
        .iter()
        .map(|s| Some(word(s)))
        .collect();
    Morphism::from_generators(code(MNC_C1)?, &gens).map_err(err)
}

fn cx(n: usize, faces: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_faces(n, words(faces)).expect("fixture complex")
}

macro_rules! check {
    ($id:expr, $desc:expr, $body:expr) => {
        GoldenCheck {
            id: $id,
            description: $desc,
            run: $body,
        }
    };
}

/// Every golden check, in a stable order.
pub fn golden_checks() -> Vec<GoldenCheck> {
    vec![
        // Codes and parsing.
        check!(
            "parse.compact",
            "{12,23,1,3,0} parses to 5 words on 3 neurons",
            || {
                let c = code(C)?;
                same(
                    (c.n(), c.words().to_vec()),
                    (3, words(&["12", "23", "1", "3", "0"])),
                )
            }
        ),
        check!(
            "parse.empty-word",
            "{} is the one-word code {∅}; [] is the empty code",
            || {
                same(code("{}")?.words().to_vec(), vec![Codeword::EMPTY])?;
                same(code("[]")?.len(), 0)
            }
        ),
        check!("parse.json", "JSON [[1,2],[10]] has n = 10", || {
            let c = code("[[1,2],[10]]")?;
            same((c.n(), c.len()), (10, 2))
        }),
        check!("format.roundtrip", "formatting inverts parsing", || {
            same(code(C)?.to_string(), C.to_string())?;
            same(code("{1234}")?.to_string(), "{1234}".to_string())?;
            same(
                format_code(&code("[[10]]")?, FormatStyle::Json).map_err(err)?,
                "[[10]]".to_string(),
            )
        }),
        check!("code.contains", "membership in C", || {
            let c = code(C)?;
            same(
                (
                    c.contains(word("23")),
                    c.contains(word("2")),
                    c.contains(Codeword::EMPTY),
                ),
                (true, false, true),
            )
        }),
        // Trunks.
        check!("trunk.of", "Tk_C({2}) = {12,23}; Tk_C(∅) = C", || {
            let c = code(C)?;
            same(
                trunk_words(&c, &trunk_of(&c, word("2")).map_err(err)?),
                words(&["12", "23"]),
            )?;
            same(trunk_of(&c, Codeword::EMPTY).map_err(err)?.len(), c.len())
        }),
        check!(
            "trunk.generator",
            "Tk(3) = {123} with generator 123 in {123,1,2,0}",
            || {
                let c = code(REDUNDANT)?;
                let t = trunk_of(&c, word("3")).map_err(err)?;
                same(
                    (trunk_words(&c, &t), t.generator()),
                    (words(&["123"]), Some(word("123"))),
                )
            }
        ),
        check!(
            "trunk.simple",
            "simple trunks of C0 and C; trivial neuron gives ∅",
            || {
                let c0 = code(MNC_C0)?;
                same(
                    trunk_words(&c0, &trunk_of(&c0, word("5")).map_err(err)?),
                    words(&["3456", "145", "256", "45", "56"]),
                )?;
                let c = code(C)?;
                same(
                    trunk_words(&c, &trunk_of(&c, word("1")).map_err(err)?),
                    words(&["12", "1"]),
                )?;
                let t = code("n=3 {12,0}")?;
                ensure(
                    trunk_of(&t, word("3")).map_err(err)?.is_empty(),
                    "Tk(3) empty",
                )
            }
        ),
        check!(
            "trunk.count",
            "C has 6 nonempty trunks, D has 5; {∅} has 1",
            || {
                same(nonempty_trunks(&code(C)?).len(), 6)?;
                same(nonempty_trunks(&code(D)?).len(), 5)?;
                same(all_trunks(&code(C)?).len(), 7)?;
                same(all_trunks(&code(D)?).len(), 6)?;
                same(nonempty_trunks(&code("n=1 {}")?).len(), 1)
            }
        ),
        check!(
            "trunk.is_trunk",
            "{12,23} is a trunk of C; {12,34} is not a trunk of D",
            || {
                same(
                    is_trunk(&code(C)?, &words(&["12", "23"])).map_err(err)?,
                    true,
                )?;
                same(
                    is_trunk(&code(D)?, &words(&["12", "34"])).map_err(err)?,
                    false,
                )?;
                same(is_trunk(&code(C)?, &[]).map_err(err)?, true)
            }
        ),
        check!(
            "trunk.irreducible",
            "irreducible trunks of C, {2,12}, {0,2,3}",
            || {
                let c = code(C)?;
                let irr: Vec<Vec<Codeword>> = irreducible_trunks(&c)
                    .iter()
                    .map(|t| trunk_words(&c, t))
                    .collect();
                ensure(irr.len() == 3, "C has three irreducible trunks")?;
                for w in [
                    words(&["12", "1"]),
                    words(&["12", "23"]),
                    words(&["23", "3"]),
                ] {
                    ensure(irr.contains(&w), "simple trunks of C are irreducible")?;
                }
                let x = code("{2,12}")?;
                let irr: Vec<Vec<Codeword>> = irreducible_trunks(&x)
                    .iter()
                    .map(|t| trunk_words(&x, t))
                    .collect();
                same(irr, vec![words(&["12"])])?;
                same(irreducible_trunks(&code("{0,2,3}")?).len(), 2)
            }
        ),
        // Morphisms.
        check!(
            "morphism.apply",
            "four-trunk morphism: 23 ↦ 12, 12 ↦ 1234",
            || {
                let f = four_trunk_morphism()?;
                same(f.apply(word("23")).map_err(err)?, word("12"))?;
                same(f.apply(word("12")).map_err(err)?, word("1234"))
            }
        ),
        check!(
            "morphism.image",
            "four-trunk morphism has image {1234,12,13,1}",
            || { same(four_trunk_morphism()?.image(), code("{1234,12,13,1}")?) }
        ),
        check!(
            "morphism.empty",
            "m = 0 sends everything to ∅; image {∅} on 0 neurons",
            || {
                let f = Morphism::new(code(C)?, vec![]).map_err(err)?;
                same(f.apply(word("12")).map_err(err)?, Codeword::EMPTY)?;
                same(f.image(), code("{}")?)
            }
        ),
        check!(
            "morphism.identity",
            "identity on reduced C has image C",
            || { same(Morphism::identity(code(C)?).image(), code(C)?) }
        ),
        check!(
            "morphism.is_morphism",
            "bijection C → D is a morphism, its inverse is not",
            || {
                same(is_morphism(&bijection_c_to_d()?), true)?;
                same(is_morphism(&inverse_d_to_c()?), false)?;
                let c = code(C)?;
                let constant = ExplicitMap::from_fn(&c, 0, |_| Codeword::EMPTY).map_err(err)?;
                same(is_morphism(&constant), true)
            }
        ),
        check!(
            "morphism.decompose",
            "bijection C → D has trunks {12,1},{12},{23,3},{23}",
            || {
                let f = decompose(&bijection_c_to_d()?).map_err(err)?;
                let c = code(C)?;
                let got: Vec<Vec<Codeword>> =
                    f.trunks().iter().map(|t| trunk_words(&c, t)).collect();
                same(
                    got,
                    vec![
                        words(&["12", "1"]),
                        words(&["12"]),
                        words(&["23", "3"]),
                        words(&["23"]),
                    ],
                )?;
                let ident = decompose(
                    &Morphism::identity(c.clone())
                        .to_explicit(None)
                        .map_err(err)?,
                )
                .map_err(err)?;
                same(ident, Morphism::identity(c))
            }
        ),
        check!(
            "morphism.compose",
            "C → C1 → C0 composes to a surjection onto C0",
            || {
                let cfg = EnumerationConfig::default();
                let c1 = code(MNC_C1)?;
                let f = verify_image_membership(&code(MNC_C)?, &c1, &cfg)
                    .map_err(err)?
                    .ok_or("no witness C → C1")?;
                // Relabel f's image onto the printed C1.
                let w = canonical_form(&f.image()).witness;
                let v = canonical_form(&c1).witness;
                let to_c1 = v.inverse().after(&w);
                let relabel = permutation_morphism(&f.image(), &to_c1).map_err(err)?;
                let f = compose(&decompose(&relabel).map_err(err)?, &f).map_err(err)?;
                same(f.image(), c1.clone())?;
                let gf = compose(&c1_to_c0()?, &f).map_err(err)?;
                ensure(
                    is_isomorphic(&gf.image(), &code(MNC_C0)?),
                    "image of composite is C0",
                )
            }
        ),
        check!(
            "morphism.restriction",
            "restricting Tk_C0(5) to [6]∖{5} gives {346,14,26,4,6}",
            || {
                let c0 = code(MNC_C0)?;
                let t = trunk_of(&c0, word("5")).map_err(err)?.to_code(&c0);
                let r = restriction_morphism(&t, word("12346")).map_err(err)?;
                same(r.image(), code("n=6 {346,14,26,4,6}")?)?;
                same(
                    restriction_morphism(&t, word("123456"))
                        .map_err(err)?
                        .image(),
                    t.clone(),
                )?;
                same(
                    restriction_morphism(&t, Codeword::EMPTY)
                        .map_err(err)?
                        .image()
                        .words()
                        .to_vec(),
                    vec![Codeword::EMPTY],
                )
            }
        ),
        check!(
            "morphism.permutation",
            "swapping 1 and 2 sends {12,1,0} to {12,2,0}",
            || {
                let x = code("{12,1,0}")?;
                let w = Permutation::from_one_based(&[2, 1]).map_err(err)?;
                same(
                    permutation_morphism(&x, &w).map_err(err)?.image(),
                    code("{12,2,0}")?,
                )?;
                let back = permutation_morphism(&code("{12,2,0}")?, &w.inverse()).map_err(err)?;
                same(back.image(), x)
            }
        ),
        check!(
            "morphism.union",
            "adding {2} to {0,1} on 2 neurons gives {2,12}",
            || {
                let x = code("n=2 {0,1}")?;
                same(
                    union_morphism(&x, word("2")).map_err(err)?.image(),
                    code("{2,12}")?,
                )?;
                same(
                    union_morphism(&x, Codeword::EMPTY).map_err(err)?.image(),
                    x.clone(),
                )?;
                same(
                    union_morphism(&x, word("12")).map_err(err)?.image(),
                    code("{12}")?,
                )
            }
        ),
        // Reduction and isomorphism.
        check!("reduce.trivial", "trivial neurons", || {
            same(trivial_neurons(&code("n=3 {12,0}")?), vec![3])?;
            same(trivial_neurons(&code(MNC_C0)?), vec![])?;
            same(trivial_neurons(&code("n=2 []")?), vec![1, 2])
        }),
        check!(
            "reduce.redundant",
            "3 is redundant to {1,2} in {123,1,2,0}; 2 to ∅ in {2,12}",
            || {
                same(redundant_neurons(&code(REDUNDANT)?), vec![(3, word("12"))])?;
                same(
                    redundant_neurons(&code("{2,12}")?),
                    vec![(2, Codeword::EMPTY)],
                )?;
                same(redundant_neurons(&code(C)?), vec![])
            }
        ),
        check!(
            "reduce.is_reduced",
            "C is reduced, {123,1,2,0} is not, {∅} is",
            || {
                same(
                    (
                        is_reduced(&code(C)?),
                        is_reduced(&code(REDUNDANT)?),
                        is_reduced(&code("{}")?),
                    ),
                    (true, false, true),
                )
            }
        ),
        check!(
            "reduce.reduce",
            "{2,12} reduces to {0,1}; {0,2,3} to {0,1,2}",
            || {
                same(reduce(&code("{2,12}")?).reduced, code("{1,0}")?)?;
                same(reduce(&code("{0,2,3}")?).reduced, code("{1,2,0}")?)
            }
        ),
        check!("reduce.minn", "minimum neuron numbers 3, 4, 1, 0", || {
            same(
                [
                    minimum_neuron_number(&code(C)?),
                    minimum_neuron_number(&code(D)?),
                    minimum_neuron_number(&code("{2,12}")?),
                    minimum_neuron_number(&code("{}")?),
                ],
                [3, 4, 1, 0],
            )
        }),
        check!(
            "iso.canonical",
            "canonical forms agree on isomorphic codes",
            || {
                same(
                    canonical_form(&code("{0,2,3}")?).code,
                    canonical_form(&code("{0,1,2}")?).code,
                )?;
                let c0 = code(MNC_C0)?;
                let t = trunk_of(&c0, word("5")).map_err(err)?.to_code(&c0);
                same(
                    canonical_form(&t).code,
                    canonical_form(&code("{346,14,26,4,6}")?).code,
                )?;
                same(canonical_form(&code("{1,2,0}")?).code, code("{1,2,0}")?)
            }
        ),
        check!("iso.decide", "C ≇ D; {2,12} ≅ {0,1}", || {
            same(is_isomorphic(&code(C)?, &code(D)?), false)?;
            same(is_isomorphic(&code("{2,12}")?, &code("{0,1}")?), true)?;
            same(is_isomorphic(&code(MNC_C0)?, &code(MNC_C0)?), true)
        }),
        // Constructions.
        check!("construct.product", "{12,1,2,0} × {12,1,0}", || {
            same(
                product(&code("{12,1,2,0}")?, &code("{12,1,0}")?).map_err(err)?,
                code("{1234,123,12,134,13,1,234,23,2,34,3,0}")?,
            )?;
            let p = product(&code(C)?, &code("{}")?).map_err(err)?;
            ensure(
                p.n() == 3 && is_isomorphic(&p, &code(C)?),
                "product with {∅}",
            )?;
            same(
                product(&code("{}")?, &code("{}")?).map_err(err)?,
                code("{}")?,
            )
        }),
        check!(
            "construct.coproduct",
            "{12,1,2,0} ⨿ {12,1,0} ∪ {∅}",
            || {
                same(
                    coproduct(&code("{12,1,2,0}")?, &code("{12,1,0}")?, true).map_err(err)?,
                    code("{125,15,25,5,346,36,6,0}")?,
                )?;
                same(
                    coproduct(&code("{}")?, &code("{}")?, false).map_err(err)?,
                    code("{1,2}")?,
                )?;
                let a = code("{12,1,2,0}")?;
                let cp = coproduct(&a, &code("{12,1,0}")?, true).map_err(err)?;
                same(
                    restriction_morphism(&cp, word("12")).map_err(err)?.image(),
                    a.with_n(6).map_err(err)?,
                )
            }
        ),
        check!(
            "construct.intcomplete",
            "D is intersection complete, C is not",
            || {
                same(
                    (
                        is_intersection_complete(&code(D)?),
                        is_intersection_complete(&code(C)?),
                        is_intersection_complete(&code("{}")?),
                    ),
                    (true, false, true),
                )
            }
        ),
        check!(
            "construct.maxint",
            "Tk_C0(1) is max-intersection complete, Tk_C0(5) is not",
            || {
                let c0 = code(MNC_C0)?;
                let t = |s| -> std::result::Result<Code, String> {
                    Ok(trunk_of(&c0, word(s)).map_err(err)?.to_code(&c0))
                };
                same(is_max_intersection_complete(&t("1")?), true)?;
                same(is_max_intersection_complete(&t("5")?), false)?;
                same(is_max_intersection_complete(&code(D)?), true)
            }
        ),
        // Enumeration.
        check!("images.trivial", "{∅} has the single image {∅}", || {
            let s = enumerate_reduced_images(&code("{}")?, &EnumerationConfig::default())
                .map_err(err)?;
            same(s.images, vec![code("{}")?])
        }),
        check!(
            "images.small",
            "images of C include C, {∅}, {0,1}",
            || {
                let s = enumerate_reduced_images(&code(C)?, &EnumerationConfig::default())
                    .map_err(err)?;
                for x in [C, "{}", "{1,0}"] {
                    ensure(s.contains(&canonical_form(&code(x)?).code), x)?;
                }
                Ok(())
            }
        ),
        check!(
            "images.difference",
            "images of C not images of D or E: C, C0, C1, C2",
            || {
                let cfg = EnumerationConfig::default();
                let diff =
                    image_set_difference(&code(MNC_C)?, &[code(MNC_D)?, code(MNC_E)?], &cfg, None)
                        .map_err(err)?;
                let mut expected = Vec::new();
                for x in [MNC_C, MNC_C0, MNC_C1, MNC_C2] {
                    expected.push(canonical_form(&code(x)?).code);
                }
                expected.sort_by(crate::reduction::canonical_cmp);
                same(diff, expected)
            }
        ),
        check!(
            "images.difference-trivial",
            "difference with itself is empty",
            || {
                let cfg = EnumerationConfig::default();
                let x = code(C)?;
                same(
                    image_set_difference(&x, std::slice::from_ref(&x), &cfg, None)
                        .map_err(err)?
                        .len(),
                    0,
                )
            }
        ),
        check!(
            "images.member",
            "C1 maps onto C0 by the trunks of 1,2,3,4,5,56; {∅} cannot map onto {12,1,0}",
            || {
                let f = c1_to_c0()?;
                ensure(is_isomorphic(&f.image(), &code(MNC_C0)?), "image is C0")?;
                let cfg = EnumerationConfig::default();
                ensure(
                    verify_image_membership(&code(MNC_C1)?, &code(MNC_C0)?, &cfg)
                        .map_err(err)?
                        .is_some(),
                    "search finds a witness",
                )?;
                ensure(
                    verify_image_membership(&code("{}")?, &code("{12,1,0}")?, &cfg)
                        .map_err(err)?
                        .is_none(),
                    "no witness from {∅}",
                )
            }
        ),
        // Topology.
        check!(
            "topology.facets",
            "Δ(C0) has facets 3456, 123, 145, 256",
            || {
                same(
                    simplicial_complex(&code(MNC_C0)?).facets().to_vec(),
                    words(&["3456", "123", "145", "256"]),
                )?;
                same(
                    simplicial_complex(&code("{}")?).facets().to_vec(),
                    vec![Codeword::EMPTY],
                )
            }
        ),
        check!(
            "topology.links",
            "links in Δ(C0): point, edge, triangle with two pendant edges",
            || {
                let k = simplicial_complex(&code(MNC_C0)?);
                same(k.link(word("12")).map_err(err)?.facet_sizes(), vec![1])?;
                same(k.link(word("34")).map_err(err)?.facet_sizes(), vec![2])?;
                same(
                    k.link(word("5")).map_err(err)?.facets().to_vec(),
                    words(&["346", "14", "26"]),
                )
            }
        ),
        check!(
            "topology.collapse",
            "point and C0 links collapse; triangle boundary does not",
            || {
                same(is_collapsible(&cx(1, &["1"])).map_err(err)?, true)?;
                same(
                    is_collapsible(&cx(3, &["12", "13", "23"])).map_err(err)?,
                    false,
                )?;
                let k = simplicial_complex(&code(MNC_C0)?);
                for s in ["12", "34", "4", "5"] {
                    ensure(
                        is_collapsible(&k.link(word(s)).map_err(err)?).map_err(err)?,
                        s,
                    )?;
                }
                Ok(())
            }
        ),
        check!(
            "topology.homology",
            "two points: [1]; triangle boundary: [0, 1]",
            || {
                same(
                    f2_reduced_homology(&cx(2, &["1", "2"])).map_err(err)?.ranks,
                    vec![1],
                )?;
                same(
                    f2_reduced_homology(&cx(3, &["12", "13", "23"]))
                        .map_err(err)?
                        .ranks,
                    vec![0, 1],
                )
            }
        ),
        check!(
            "topology.report",
            "C0 is locally great; {1,2} has a first-kind obstruction at ∅",
            || {
                let r = local_obstruction_report(&code(MNC_C0)?).map_err(err)?;
                ensure(
                    r.locally_great && r.locally_good == Tristate::Yes,
                    "C0 locally great",
                )?;
                let r = local_obstruction_report(&code("{1,2}")?).map_err(err)?;
                same(r.missing.len(), 1)?;
                same(
                    (r.missing[0].sigma, r.missing[0].verdict),
                    (Codeword::EMPTY, Verdict::ObstructionFirstKind),
                )?;
                let r = local_obstruction_report(&code("{12,1,2,0}")?).map_err(err)?;
                ensure(r.missing.is_empty() && r.locally_great, "complex code")
            }
        ),
        // Neural ring.
        check!("ring.elements", "x_2, ρ_12 and x_12 on C", || {
            let c = code(C)?;
            same(
                coordinate(&c, 2).map_err(err)?.support(),
                words(&["12", "23"]),
            )?;
            same(indicator(&c, word("12")).support(), words(&["12"]))?;
            ensure(
                indicator(&c, word("2")).is_zero(),
                "ρ_c vanishes off the code",
            )?;
            same(
                evaluate_monomial(&c, word("12")).map_err(err)?.support(),
                words(&["12"]),
            )?;
            same(
                evaluate_monomial(&c, Codeword::EMPTY)
                    .map_err(err)?
                    .support()
                    .len(),
                c.len(),
            )
        }),
        check!(
            "ring.functor",
            "four-trunk morphism pulls back to y ↦ (1, x2, x1, x12) and back",
            || {
                let f = four_trunk_morphism()?;
                let phi = morphism_to_monomial_map(&f, None).map_err(err)?;
                same(
                    phi.assignment().to_vec(),
                    ["0", "2", "1", "12"]
                        .iter()
                        .map(|s| MonomialImage::Mono(word(s)))
                        .collect(),
                )?;
                same(monomial_map_to_morphism(&phi).map_err(err)?, f)
            }
        ),
    ]
}

/// Runs every check.
pub fn run_golden() -> Vec<GoldenOutcome> {
    golden_checks().iter().map(GoldenCheck::run).collect()
}
