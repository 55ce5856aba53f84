use std::collections::HashMap;

use super::bar::enumerate_words;
use super::{DgAlgebra, DgCoalgebra, GradedBasis, StructureError};
use crate::f2::F2Vec;

/// Cobar construction of a connected dg coalgebra modulo words longer than
/// `max_len`. Words longer than the cap form a dg ideal, so the quotient is
/// an honest dg algebra; differential terms that leave the truncation are
/// dropped and the source words recorded in `overflow`.
#[derive(Clone, Debug)]
pub struct TruncatedCobar {
    generators: Vec<usize>,
    gen_of_basis: Vec<Option<usize>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    max_len: usize,
    diff: Vec<F2Vec>,
    overflow: Vec<usize>,
    names: Vec<String>,
    degrees: Vec<i32>,
}

pub fn cobar(c: &DgCoalgebra, max_len: usize) -> Result<TruncatedCobar, StructureError> {
    if !c.is_connected() {
        return Err(StructureError::NotConnected);
    }
    let sp = c.space();
    let e = c.counit();
    let generators: Vec<usize> = (0..c.dim()).filter(|&i| i != e).collect();
    let mut gen_of_basis = vec![None; c.dim()];
    for (k, &g) in generators.iter().enumerate() {
        gen_of_basis[g] = Some(k);
    }
    let mut reduced: Vec<Vec<(usize, usize)>> = Vec::new();
    for &g in &generators {
        if c.d_basis(g).get(e) {
            return Err(StructureError::NotAugmented(format!("d({}) has a counit component", sp.name(g))));
        }
        let mut terms: Vec<(usize, usize)> = Vec::new();
        let mut seen_left = false;
        let mut seen_right = false;
        for (i, j) in c.comult_pairs(g) {
            if (i, j) == (g, e) {
                seen_right = true;
            } else if (i, j) == (e, g) {
                seen_left = true;
            } else if i == e || j == e {
                return Err(StructureError::NotAugmented(format!(
                    "reduced diagonal of {} has a counit factor",
                    sp.name(g)
                )));
            } else {
                terms.push((gen_of_basis[i].expect("non-counit"), gen_of_basis[j].expect("non-counit")));
            }
        }
        if !(seen_left && seen_right) {
            return Err(StructureError::NotAugmented(format!("diagonal of {} lacks a counit term", sp.name(g))));
        }
        reduced.push(terms);
    }
    let words = enumerate_words(generators.len(), max_len);
    let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let names = words
        .iter()
        .map(|w| format!("[{}]", w.iter().map(|&g| sp.name(generators[g])).collect::<Vec<_>>().join(",")))
        .collect();
    let degrees = words.iter().map(|w| w.iter().map(|&g| sp.degree(generators[g]) + 1).sum()).collect();

    let mut diff = Vec::with_capacity(words.len());
    let mut overflow = Vec::new();
    for (wi, word) in words.iter().enumerate() {
        let mut out = F2Vec::zeros(words.len());
        let mut overflowed = false;
        for (i, &letter) in word.iter().enumerate() {
            for b in c.d_basis(generators[letter]).ones() {
                let mut v = word.clone();
                v[i] = gen_of_basis[b].expect("augmented");
                out.flip(index[&v]);
            }
            for &(x, y) in &reduced[letter] {
                if word.len() + 1 > max_len {
                    overflowed = true;
                    continue;
                }
                let mut v: Vec<usize> = word[..i].to_vec();
                v.push(x);
                v.push(y);
                v.extend_from_slice(&word[i + 1..]);
                out.flip(index[&v]);
            }
        }
        if overflowed {
            overflow.push(wi);
        }
        diff.push(out);
    }
    Ok(TruncatedCobar { generators, gen_of_basis, words, index, max_len, diff, overflow, names, degrees })
}

impl TruncatedCobar {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

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

    /// Words whose differential had terms beyond the truncation.
    pub fn overflow(&self) -> &[usize] {
        &self.overflow
    }

    pub fn apply_diff(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for w in v.ones() {
            out.xor_assign(&self.diff[w]);
        }
        out
    }

    /// First word of length at most `max_len - 2` (where no overflow can
    /// interfere) on which `d d` is nonzero.
    pub fn dd_failure(&self) -> Option<usize> {
        (0..self.dim())
            .filter(|&w| self.words[w].len() + 2 <= self.max_len)
            .find(|&w| !self.apply_diff(&self.diff[w]).is_zero())
    }

    /// The quotient of the cobar construction by words longer than the cap.
    pub fn algebra(&self) -> DgAlgebra {
        let n = self.dim();
        let space = GradedBasis::new(self.names.iter().cloned().zip(self.degrees.iter().copied()))
            .expect("word names are unique");
        let mut mult = Vec::with_capacity(n * n);
        for u in &self.words {
            for v in &self.words {
                let mut w = u.clone();
                w.extend_from_slice(v);
                mult.push(match self.index.get(&w) {
                    Some(&k) => F2Vec::unit(n, k),
                    None => F2Vec::zeros(n),
                });
            }
        }
        DgAlgebra::new(space, 0, mult, self.diff.clone()).expect("well-formed cobar algebra")
    }
}
