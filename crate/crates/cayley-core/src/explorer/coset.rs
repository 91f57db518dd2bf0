//! Generic coset-graph construction `Cos(G, H, HSH)` for small enumerable
//! groups, used to validate the coset formalism independently of the main
//! family.

use std::collections::{BTreeSet, HashMap};

use crate::perm::Permutation;
use crate::{Error, Result};

/// An explicit coset graph on the right cosets of `H` in `G`.
#[derive(Debug)]
pub struct CosetGraph {
    pub vertex_count: usize,
    /// One representative per coset: the member with the smallest index in
    /// the deterministic enumeration of `G`.
    pub representatives: Vec<Permutation>,
    pub edges: Vec<(usize, usize)>,
    pub valency: usize,
    pub connected: bool,
}

/// Enumerates `<gens>` by BFS, capped.
fn enumerate_group(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let mut elements = vec![Permutation::identity(degree)];
    let mut index_of: HashMap<Permutation, usize> = HashMap::new();
    index_of.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let cur = elements[head].clone();
        head += 1;
        for g in gens {
            let next = cur.compose(g)?;
            if !index_of.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::GroupCapExceeded(cap));
                }
                index_of.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// Builds `Cos(G, H, HSH)` with `G = <g_gens>`, `H = <h_gens>` and
/// connection set `S`. Validates the hypotheses: `S ∩ H = ∅` and `HSH`
/// inverse-closed. The stated valency `|HSH| / |H|` and the connectivity
/// criterion `<S, H> = G` are both cross-checked against the built graph.
pub fn build_coset_graph(
    degree: usize,
    g_gens: &[Permutation],
    h_gens: &[Permutation],
    connection: &[Permutation],
    cap: usize,
) -> Result<CosetGraph> {
    let group = enumerate_group(degree, g_gens, cap)?;
    let index_of: HashMap<&Permutation, usize> =
        group.iter().enumerate().map(|(i, g)| (g, i)).collect();

    let subgroup = enumerate_group(degree, h_gens, cap)?;
    for h in &subgroup {
        if !index_of.contains_key(h) {
            return Err(Error::CosetHypothesis("H is not a subgroup of G".into()));
        }
    }
    for s in connection {
        if !index_of.contains_key(s) {
            return Err(Error::CosetHypothesis("S is not contained in G".into()));
        }
        if subgroup.contains(s) {
            return Err(Error::CosetHypothesis("S meets H".into()));
        }
    }

    // HSH as a set of group indices.
    let mut hsh: BTreeSet<usize> = BTreeSet::new();
    for h1 in &subgroup {
        for s in connection {
            let left = h1.compose(s)?;
            for h2 in &subgroup {
                let w = left.compose(h2)?;
                hsh.insert(index_of[&w]);
            }
        }
    }
    for &w in &hsh {
        let inv = group[w].inverse();
        if !hsh.contains(&index_of[&inv]) {
            return Err(Error::CosetHypothesis("HSH is not inverse-closed".into()));
        }
    }

    // Right cosets Hg, labeled in enumeration order of their minimal member.
    let mut coset_of = vec![usize::MAX; group.len()];
    let mut representatives = Vec::new();
    for (gi, g) in group.iter().enumerate() {
        if coset_of[gi] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(g.clone());
        for h in &subgroup {
            let member = h.compose(g)?;
            coset_of[index_of[&member]] = id;
        }
    }
    let vertex_count = representatives.len();

    // Edges {Hg, Hsg} over g in G, s in HSH.
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (gi, g) in group.iter().enumerate() {
        for &si in &hsh {
            let sg = group[si].compose(g)?;
            let (u, v) = (coset_of[gi], coset_of[index_of[&sg]]);
            if u == v {
                return Err(Error::CosetHypothesis(
                    "connection set produces a self-loop".into(),
                ));
            }
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();

    // Valency: every vertex must have degree |HSH| / |H|.
    if !hsh.len().is_multiple_of(subgroup.len()) {
        return Err(Error::CosetHypothesis("|HSH| is not a multiple of |H|".into()));
    }
    let valency = hsh.len() / subgroup.len();
    let mut degree_of = vec![0usize; vertex_count];
    for &(u, v) in &edges {
        degree_of[u] += 1;
        degree_of[v] += 1;
    }
    if vertex_count > 1 && degree_of.iter().any(|&d| d != valency) {
        return Err(Error::CosetHypothesis(format!(
            "graph valency disagrees with |HSH|/|H| = {valency}"
        )));
    }

    // Connectivity via the subgroup criterion, cross-checked against a BFS
    // component count of the built graph.
    let mut span_gens: Vec<Permutation> = h_gens.to_vec();
    span_gens.extend(connection.iter().cloned());
    let spanned = enumerate_group(degree, &span_gens, cap)?;
    let criterion_connected = spanned.len() == group.len();
    let bfs_connected = component_is_everything(vertex_count, &edges);
    if criterion_connected != bfs_connected {
        return Err(Error::CosetHypothesis(
            "connectivity criterion disagrees with BFS component count".into(),
        ));
    }

    Ok(CosetGraph {
        vertex_count,
        representatives,
        edges,
        valency,
        connected: bfs_connected,
    })
}

fn component_is_everything(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    if vertex_count == 0 {
        return true;
    }
    let mut adjacency = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut seen = vec![false; vertex_count];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == vertex_count
}
