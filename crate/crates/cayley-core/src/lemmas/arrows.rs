//! The arrow-chain displays: concrete orbits of elements under words in
//! `x`, `y`, `z`, quantified over `U` (odd m, displays (1)-(6)) or over
//! `U ∩ H_1` (even m, displays (7)-(10)).
//!
//! Each chain is a node list together with the word labelling each arrow;
//! checking a chain means applying each word to the current node and
//! comparing with the next. All `c` indices follow the `c_0 = c_{-1} = 1`
//! convention, so small m instantiates every formula.

use crate::construction::Instance;
use crate::halg::HElement;

/// One chain: `nodes[i] --words[i]--> nodes[i+1]`.
pub(crate) struct Chain {
    pub display: &'static str,
    pub nodes: Vec<HElement>,
    pub words: Vec<&'static str>,
}

/// A single failed arrow, with enough context to locate it.
#[derive(Debug)]
pub(crate) struct ArrowFailure {
    pub display: &'static str,
    pub u: String,
    pub step: usize,
    pub from: String,
    pub expected: String,
    pub actual: String,
}

pub(crate) fn check_chains(inst: &Instance, chains: &[Chain], u: &HElement) -> Vec<ArrowFailure> {
    let mut failures = Vec::new();
    for chain in chains {
        debug_assert_eq!(chain.nodes.len(), chain.words.len() + 1);
        for (step, word) in chain.words.iter().enumerate() {
            let from = chain.nodes[step];
            let expected = chain.nodes[step + 1];
            let actual = inst.apply_word(word, &from);
            if actual != expected {
                failures.push(ArrowFailure {
                    display: chain.display,
                    u: u.to_string(),
                    step,
                    from: from.to_string(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }
    failures
}

/// Element vocabulary shared by all displays at one m.
struct Vocab {
    a: HElement,
    a2: HElement,
    a3: HElement,
    b: HElement,
    /// `c_{m-3}`, `c_{m-4}`, `c_{m-5}`, `c_{m-6}` under the identity
    /// convention for indices below 1.
    c3: HElement,
    c4: HElement,
    c5: HElement,
    c6: HElement,
}

fn vocab(inst: &Instance) -> Vocab {
    let p = *inst.params();
    let m = i64::from(p.m());
    let a = p.gen_a();
    Vocab {
        a,
        a2: a.mul(&a).expect("same m"),
        a3: a.inv(),
        b: p.gen_b(),
        c3: p.c_or_identity(m - 3).expect("in range"),
        c4: p.c_or_identity(m - 4).expect("in range"),
        c5: p.c_or_identity(m - 5).expect("in range"),
        c6: p.c_or_identity(m - 6).expect("in range"),
    }
}

fn prod(parts: &[HElement]) -> HElement {
    let mut iter = parts.iter();
    let first = *iter.next().expect("nonempty product");
    iter.fold(first, |acc, e| acc.mul(e).expect("same m"))
}

/// Displays (1)-(6), for odd m and `u ∈ U`.
pub(crate) fn odd_chains(inst: &Instance, u: &HElement) -> Vec<Chain> {
    let v = vocab(inst);
    let (a, a2, a3, b, c3, c4, c5, c6) = (v.a, v.a2, v.a3, v.b, v.c3, v.c4, v.c5, v.c6);
    let u = *u;
    let xu = inst.x_img(&u);
    let yu = inst.y_img(&u);
    let xyu = inst.y_img(&xu);
    let six = vec!["x", "y", "z", "x", "y", "z"];
    let xyz3 = vec!["x", "y", "z"];

    let mut chains = vec![
        Chain {
            display: "(1)",
            nodes: vec![u, xu, xyu, xu, u, yu, u],
            words: six.clone(),
        },
        Chain {
            display: "(2)",
            nodes: vec![
                prod(&[a, u]),
                prod(&[a3, xu]),
                prod(&[a, b, xyu, c4, c3]),
                prod(&[a, xu]),
                prod(&[a3, u]),
                prod(&[a, b, yu, c4, c3]),
                prod(&[a, u]),
            ],
            words: six.clone(),
        },
    ];

    let d3: [[HElement; 4]; 8] = [
        [
            prod(&[u, c3]),
            prod(&[a2, xu, c4, c3]),
            prod(&[b, xyu, c4, c3]),
            prod(&[b, xu, c4, c3]),
        ],
        [
            prod(&[b, xu, c4, c3]),
            prod(&[a3, b, u, c3]),
            prod(&[a3, b, yu, c6, c5, c3]),
            prod(&[a3, b, u, c3]),
        ],
        [
            prod(&[a3, b, u, c3]),
            prod(&[b, xu, c4, c3]),
            prod(&[a2, xyu, c4, c3]),
            prod(&[a2, b, xu, c4, c3]),
        ],
        [
            prod(&[a2, b, xu, c4, c3]),
            prod(&[a, b, u, c3]),
            // The printed display carries c_{m-4} here, but the y-image of
            // a b u c_{m-3} works out to a^{-1} u^y c_{m-6} c_{m-5} c_{m-3}:
            // with h = a * c_1 c_3 ... and tau(c_{m-3}) = c_{m-6} c_{m-5} c_{m-4},
            // the product h * tau(h^{-1} * a b u c_{m-3}) simplifies to exactly
            // this node. The subscript below is the corrected one.
            prod(&[a3, yu, c6, c5, c3]),
            prod(&[a3, u, c3]),
        ],
        [
            prod(&[a3, u, c3]),
            prod(&[a3, xu, c4, c3]),
            prod(&[a, b, xyu]),
            prod(&[a, xu, c4, c3]),
        ],
        [
            prod(&[a, xu, c4, c3]),
            prod(&[a, u, c3]),
            prod(&[a, yu, c6, c5, c3]),
            prod(&[a, b, u, c3]),
        ],
        [
            prod(&[a, b, u, c3]),
            prod(&[a2, b, xu, c4, c3]),
            prod(&[a2, b, xyu, c4, c3]),
            prod(&[a2, xu, c4, c3]),
        ],
        [
            prod(&[a2, xu, c4, c3]),
            prod(&[u, c3]),
            prod(&[yu, c6, c5, c4]),
            prod(&[u, c3]),
        ],
    ];
    for nodes in d3 {
        chains.push(Chain {
            display: "(3)",
            nodes: nodes.to_vec(),
            words: xyz3.clone(),
        });
    }

    let d4: [[HElement; 7]; 3] = [
        [
            prod(&[a2, u]),
            prod(&[a2, xu]),
            prod(&[b, xyu]),
            prod(&[b, xu]),
            prod(&[a, b, u]),
            prod(&[a3, yu, c4, c3]),
            prod(&[a3, u]),
        ],
        [
            prod(&[a3, u]),
            prod(&[a, xu]),
            prod(&[a, xyu, c4, c3]),
            prod(&[a, b, xu]),
            prod(&[b, u]),
            prod(&[a2, yu]),
            prod(&[a2, b, u]),
        ],
        [
            prod(&[a2, b, u]),
            prod(&[a3, b, xu]),
            prod(&[a3, b, xyu, c4, c3]),
            prod(&[a3, b, xu]),
            prod(&[a2, b, u]),
            prod(&[a2, b, yu]),
            prod(&[a2, u]),
        ],
    ];
    for nodes in d4 {
        chains.push(Chain {
            display: "(4)",
            nodes: nodes.to_vec(),
            words: six.clone(),
        });
    }

    chains.push(Chain {
        display: "(5)",
        nodes: vec![
            prod(&[a3, b, u]),
            prod(&[a2, u]),
            prod(&[a, b, u]),
            prod(&[a3, u]),
            prod(&[b, u]),
            prod(&[a2, b, u]),
            prod(&[a, u]),
        ],
        words: vec!["xyzx", "xyzx", "yz", "xyzx", "yz", "zyxzyxyz"],
    });

    chains.push(Chain {
        display: "(6)",
        nodes: vec![
            prod(&[a3, u, c3]),
            prod(&[a, u, c3]),
            prod(&[a2, b, u, c3]),
            prod(&[a2, u, c3]),
            prod(&[b, u, c3]),
        ],
        words: vec!["yz", "xyzx", "yz", "yz"],
    });
    chains.push(Chain {
        display: "(6)",
        nodes: vec![
            prod(&[a, u, c3]),
            prod(&[a, b, u, c3]),
            prod(&[u, c3]),
            prod(&[a3, b, u, c3]),
        ],
        words: vec!["yz", "xyzx", "xyzx"],
    });

    chains
}

/// Display (7), for even m and `u ∈ U ∩ H_1`.
pub(crate) fn even_chains_display7(inst: &Instance, u: &HElement) -> Vec<Chain> {
    let v = vocab(inst);
    let (a, a2, a3, b, c3) = (v.a, v.a2, v.a3, v.b, v.c3);
    let u = *u;
    let xu = inst.x_img(&u);
    let w4 = vec!["xyz", "xyz", "xyz", "xyz"];
    vec![
        Chain {
            display: "(7)",
            nodes: vec![
                prod(&[u, c3]),
                prod(&[b, xu, c3]),
                prod(&[a3, b, u, c3]),
                prod(&[a2, b, xu, c3]),
                prod(&[a3, u, c3]),
            ],
            words: w4.clone(),
        },
        Chain {
            display: "(7)",
            nodes: vec![
                prod(&[a3, u, c3]),
                prod(&[a, xu, c3]),
                prod(&[a, b, u, c3]),
                prod(&[a2, xu, c3]),
                prod(&[u, c3]),
            ],
            words: w4,
        },
    ]
}

/// Displays (8)-(10), for even m and `u ∈ U ∩ H_1`.
pub(crate) fn even_chains_displays_8_to_10(inst: &Instance, u: &HElement) -> Vec<Chain> {
    let v = vocab(inst);
    let (a, a2, a3, b, c3, c4, c5) = (v.a, v.a2, v.a3, v.b, v.c3, v.c4, v.c5);
    let u = *u;
    let xu = inst.x_img(&u);
    let w2 = vec!["xyz", "xyz"];
    vec![
        Chain {
            display: "(8)",
            nodes: vec![
                prod(&[u, c4, c3]),
                prod(&[xu, c5, c4, c3]),
                prod(&[u, c4, c3]),
            ],
            words: w2.clone(),
        },
        Chain {
            display: "(9)",
            nodes: vec![
                prod(&[a, u, c4, c3]),
                prod(&[a, xu, c5, c4, c3]),
                prod(&[a, u, c4, c3]),
            ],
            words: w2.clone(),
        },
        Chain {
            display: "(10)",
            nodes: vec![
                prod(&[a2, u, c4, c3]),
                prod(&[b, xu, c5, c4, c3]),
                prod(&[a3, u, c4, c3]),
            ],
            words: w2.clone(),
        },
        Chain {
            display: "(10)",
            nodes: vec![
                prod(&[a3, u, c4, c3]),
                prod(&[a, b, xu, c5, c4, c3]),
                prod(&[a2, b, u, c4, c3]),
            ],
            words: w2.clone(),
        },
        Chain {
            display: "(10)",
            nodes: vec![
                prod(&[a2, b, u, c4, c3]),
                prod(&[a3, b, xu, c5, c4, c3]),
                prod(&[a2, u, c4, c3]),
            ],
            words: w2,
        },
    ]
}
