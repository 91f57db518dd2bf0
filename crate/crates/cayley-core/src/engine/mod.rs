//! Permutation-group machinery: orbits with word tracking, stabilizer chains
//! with exact orders, an alternating-group certificate for degrees where a
//! full chain is out of reach, and double-coset closures.

mod closure;
mod jordan;
mod schreier;

pub use closure::double_coset_closure;
pub use jordan::{alternating_certificate, AltCertificate, AltStatus, SplitMix64};
pub use schreier::{factorial, schreier_sims, StabilizerChain};

use crate::perm::Permutation;
use crate::{Error, Result};

/// A permutation group given by labeled generators.
///
/// Identity generators are filtered out on construction; an empty generator
/// list denotes the trivial group.
pub struct GeneratedGroup {
    degree: usize,
    gens: Vec<Permutation>,
    labels: Vec<String>,
}

impl GeneratedGroup {
    pub fn new(degree: usize, labeled_gens: Vec<(String, Permutation)>) -> Result<Self> {
        let mut gens = Vec::new();
        let mut labels = Vec::new();
        for (label, g) in labeled_gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if g.is_identity() {
                continue;
            }
            labels.push(label);
            gens.push(g);
        }
        Ok(GeneratedGroup { degree, gens, labels })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Renders a word of generator indices as its label string.
    pub fn word_string(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&g| self.labels[g].as_str())
            .collect::<Vec<_>>()
            .join("")
    }

    /// Applies a word (generator indices, left to right) to a point.
    pub fn apply_word(&self, word: &[usize], point: usize) -> usize {
        word.iter().fold(point, |p, &g| self.gens[g].image_of(p))
    }

    /// Evaluates a word to a full permutation.
    pub fn evaluate_word(&self, word: &[usize]) -> Result<Permutation> {
        let mut acc = Permutation::identity(self.degree);
        for &g in word {
            acc = acc.compose(&self.gens[g])?;
        }
        Ok(acc)
    }

    /// BFS orbit of `point`, in deterministic order (FIFO queue, generators
    /// in listed order). Words, when tracked, are minimal-length in BFS
    /// order.
    pub fn orbit(&self, point: usize, track_words: bool) -> Orbit {
        assert!(point < self.degree, "point out of range");
        let mut points = vec![point];
        let mut slot_of = vec![usize::MAX; self.degree];
        slot_of[point] = 0;
        let mut parents = if track_words { vec![(usize::MAX, usize::MAX)] } else { Vec::new() };
        let mut head = 0;
        while head < points.len() {
            let p = points[head];
            for (gi, gen) in self.gens.iter().enumerate() {
                let q = gen.image_of(p);
                if slot_of[q] == usize::MAX {
                    slot_of[q] = points.len();
                    points.push(q);
                    if track_words {
                        parents.push((head, gi));
                    }
                }
            }
            head += 1;
        }
        Orbit { points, slot_of, parents: track_words.then_some(parents) }
    }

    /// Shortest word (BFS order) mapping `from` to `to`; an empty word when
    /// they coincide.
    pub fn find_word(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        assert!(from < self.degree && to < self.degree, "point out of range");
        if from == to {
            return Ok(Vec::new());
        }
        let mut slot_of = vec![usize::MAX; self.degree];
        let mut points = vec![from];
        let mut parents = vec![(usize::MAX, usize::MAX)];
        slot_of[from] = 0;
        let mut head = 0;
        while head < points.len() {
            let p = points[head];
            for (gi, gen) in self.gens.iter().enumerate() {
                let q = gen.image_of(p);
                if slot_of[q] == usize::MAX {
                    slot_of[q] = points.len();
                    points.push(q);
                    parents.push((head, gi));
                    if q == to {
                        let mut word = Vec::new();
                        let mut slot = points.len() - 1;
                        while slot != 0 {
                            let (parent, gi) = parents[slot];
                            word.push(gi);
                            slot = parent;
                        }
                        word.reverse();
                        return Ok(word);
                    }
                }
            }
            head += 1;
        }
        Err(Error::NotInOrbit { from, target: to })
    }
}

/// Result of a BFS orbit computation.
pub struct Orbit {
    points: Vec<usize>,
    slot_of: Vec<usize>,
    parents: Option<Vec<(usize, usize)>>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Orbit points in BFS discovery order.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn contains(&self, point: usize) -> bool {
        self.slot_of.get(point).is_some_and(|&s| s != usize::MAX)
    }

    /// Word reaching `point` from the orbit root, if words were tracked and
    /// the point is in the orbit.
    pub fn word_to(&self, point: usize) -> Option<Vec<usize>> {
        let parents = self.parents.as_ref()?;
        let mut slot = *self.slot_of.get(point).filter(|&&s| s != usize::MAX)?;
        let mut word = Vec::new();
        while slot != 0 {
            let (parent, gi) = parents[slot];
            word.push(gi);
            slot = parent;
        }
        word.reverse();
        Some(word)
    }
}
