use std::collections::HashMap;

use super::{DgAlgebra, DgCoalgebra, GradedBasis, StructureError};
use crate::f2::F2Vec;

/// Bar construction of a dg algebra, truncated to words of length at most
/// `max_len`. Words are sequences of non-unit basis elements; the truncation is
/// a sub-dg-coalgebra since neither the differential nor the deconcatenation
/// coproduct increases word length.
#[derive(Clone, Debug)]
pub struct TruncatedBar {
    generators: Vec<usize>,
    gen_of_basis: Vec<Option<usize>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    max_len: usize,
    diff: Vec<F2Vec>,
    names: Vec<String>,
    degrees: Vec<i32>,
}

pub fn enumerate_words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut words = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..alphabet {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}

/// Builds the truncated bar construction. Without `allow_non_reduced` the
/// algebra must be connected and 1-reduced.
pub fn bar(a: &DgAlgebra, max_len: usize, allow_non_reduced: bool) -> Result<TruncatedBar, StructureError> {
    let sp = a.space();
    if sp.degrees().iter().any(|&g| g < 0) {
        return Err(StructureError::NotReduced);
    }
    if !allow_non_reduced && !a.is_n_reduced(1) {
        return Err(StructureError::NotReduced);
    }
    let generators: Vec<usize> = (0..a.dim()).filter(|&i| i != a.unit()).collect();
    let mut gen_of_basis = vec![None; a.dim()];
    for (k, &g) in generators.iter().enumerate() {
        gen_of_basis[g] = Some(k);
    }
    for &x in &generators {
        if a.d_basis(x).get(a.unit()) {
            return Err(StructureError::NotAugmented(format!("d({}) has a unit component", sp.name(x))));
        }
        for &y in &generators {
            if a.mul_basis(x, y).get(a.unit()) {
                return Err(StructureError::NotAugmented(format!(
                    "{}*{} has a unit component",
                    sp.name(x),
                    sp.name(y)
                )));
            }
        }
    }
    let words = enumerate_words(generators.len(), max_len);
    let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let names = words
        .iter()
        .map(|w| format!("[{}]", w.iter().map(|&g| sp.name(generators[g])).collect::<Vec<_>>().join(",")))
        .collect();
    let degrees = words.iter().map(|w| w.iter().map(|&g| sp.degree(generators[g]) - 1).sum()).collect();
    let mut bar = TruncatedBar {
        generators,
        gen_of_basis,
        words,
        index,
        max_len,
        diff: Vec::new(),
        names,
        degrees,
    };
    bar.diff = (0..bar.words.len()).map(|i| bar.compute_diff(a, i)).collect();
    Ok(bar)
}

impl TruncatedBar {
    fn compute_diff(&self, a: &DgAlgebra, w: usize) -> F2Vec {
        let word = &self.words[w];
        let mut out = F2Vec::zeros(self.words.len());
        for i in 0..word.len() {
            let da = a.d_basis(self.generators[word[i]]);
            for b in da.ones() {
                let mut v = word.clone();
                v[i] = self.gen_of_basis[b].expect("augmented");
                out.flip(self.index[&v]);
            }
        }
        for i in 0..word.len().saturating_sub(1) {
            let prod = a.mul_basis(self.generators[word[i]], self.generators[word[i + 1]]);
            for b in prod.ones() {
                let mut v: Vec<usize> = word[..i].to_vec();
                v.push(self.gen_of_basis[b].expect("augmented"));
                v.extend_from_slice(&word[i + 2..]);
                out.flip(self.index[&v]);
            }
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Basis indices (in the algebra) of the letters.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_of_basis(&self, basis: usize) -> Option<usize> {
        self.gen_of_basis[basis]
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn word_index(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn word_name(&self, w: usize) -> &str {
        &self.names[w]
    }

    pub fn diff(&self, w: usize) -> &F2Vec {
        &self.diff[w]
    }

    pub fn apply_diff(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for w in v.ones() {
            out.xor_assign(&self.diff[w]);
        }
        out
    }

    /// First word on which `d_B d_B` is nonzero.
    pub fn dd_failure(&self) -> Option<usize> {
        (0..self.dim()).find(|&w| !self.apply_diff(&self.diff[w]).is_zero())
    }

    /// The truncated bar as a finite dg coalgebra with deconcatenation coproduct.
    pub fn coalgebra(&self) -> DgCoalgebra {
        let space = GradedBasis::new(self.names.iter().cloned().zip(self.degrees.iter().copied()))
            .expect("word names are unique");
        let pairs = self
            .words
            .iter()
            .map(|w| (0..=w.len()).map(|k| (self.index[&w[..k]], self.index[&w[k..]])).collect())
            .collect();
        DgCoalgebra::from_pairs(space, 0, pairs, self.diff.clone()).expect("well-formed bar coalgebra")
    }
}
