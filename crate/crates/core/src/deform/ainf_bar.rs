use std::collections::HashMap;

use serde::Serialize;

use super::ainf::AinfAlgebra;
use super::DeformError;
use crate::f2::F2Vec;
use crate::graded::{bar_words, DgCoalgebra, GradedBasis};

/// The tensor coalgebra on the desuspended letters of an A(∞)-algebra,
/// truncated to words of length `<= L`, with the coderivation `d_m` induced
/// by all operations. Letters are the basis minus the unit, if one is set.
#[derive(Clone, Debug)]
pub struct AinfBar {
    max_len: usize,
    letters: Vec<usize>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    names: Vec<String>,
    degrees: Vec<i32>,
    diff: Vec<F2Vec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AinfBarReport {
    pub max_len: usize,
    pub words: usize,
    /// First word on which `d_m d_m` is nonzero.
    pub dd_failure: Option<String>,
    /// First word where `Δ d_m != (d_m ⊗ 1 + 1 ⊗ d_m) Δ`.
    pub coderivation_failure: Option<String>,
}

impl AinfBarReport {
    pub fn holds(&self) -> bool {
        self.dd_failure.is_none() && self.coderivation_failure.is_none()
    }
}

pub fn ainf_bar(m: &AinfAlgebra, max_len: usize) -> Result<AinfBar, DeformError> {
    let sp = m.module();
    let letters: Vec<usize> = (0..m.dim()).filter(|&b| Some(b) != m.unit()).collect();
    let mut letter_of = vec![None; m.dim()];
    for (k, &b) in letters.iter().enumerate() {
        letter_of[b] = Some(k);
    }
    let words = bar_words(letters.len(), max_len);
    let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let names = words
        .iter()
        .map(|w| format!("[{}]", w.iter().map(|&g| sp.name(letters[g])).collect::<Vec<_>>().join(",")))
        .collect();
    let degrees = words.iter().map(|w| w.iter().map(|&g| sp.degree(letters[g]) - 1).sum()).collect();
    let mut diff = Vec::with_capacity(words.len());
    for w in &words {
        let mut out = F2Vec::zeros(words.len());
        for j in 1..=w.len().min(m.max_arity()) {
            let op = m.op(j).expect("in range");
            if op.is_zero() {
                continue;
            }
            for k in 0..=w.len() - j {
                let args: Vec<u64> = w[k..k + j].iter().map(|&g| 1u64 << letters[g]).collect();
                let x = op.eval(&args);
                for b in (0..m.dim()).filter(|&b| x >> b & 1 == 1) {
                    let Some(l) = letter_of[b] else {
                        let names: Vec<&str> = w[k..k + j].iter().map(|&g| sp.name(letters[g])).collect();
                        return Err(DeformError::NotAugmented(format!(
                            "m{j}({}) has a unit component",
                            names.join(",")
                        )));
                    };
                    let mut v = w[..k].to_vec();
                    v.push(l);
                    v.extend_from_slice(&w[k + j..]);
                    out.flip(index[&v]);
                }
            }
        }
        diff.push(out);
    }
    Ok(AinfBar { max_len, letters, words, index, names, degrees, diff })
}

impl AinfBar {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Module basis indices of the letters.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn word_index(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn word_name(&self, w: usize) -> &str {
        &self.names[w]
    }

    pub fn degree(&self, w: usize) -> i32 {
        self.degrees[w]
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

    pub fn dd_failure(&self) -> Option<usize> {
        (0..self.dim()).find(|&w| !self.apply_diff(&self.diff[w]).is_zero())
    }

    /// The truncation as a dg coalgebra with deconcatenation.
    pub fn coalgebra(&self) -> DgCoalgebra {
        let space = GradedBasis::new(self.names.iter().cloned().zip(self.degrees.iter().copied()))
            .expect("word names are unique");
        let pairs = self
            .words
            .iter()
            .map(|w| (0..=w.len()).map(|k| (self.index[&w[..k]], self.index[&w[k..]])).collect())
            .collect();
        DgCoalgebra::from_pairs(space, 0, pairs, self.diff.clone()).expect("well-formed word coalgebra")
    }

    pub fn report(&self) -> AinfBarReport {
        let coderivation_failure = self
            .coalgebra()
            .validate()
            .violations
            .into_iter()
            .find(|v| v.law == "coderivation")
            .map(|v| v.witness.join(","));
        AinfBarReport {
            max_len: self.max_len,
            words: self.dim(),
            dd_failure: self.dd_failure().map(|w| self.names[w].clone()),
            coderivation_failure,
        }
    }
}
