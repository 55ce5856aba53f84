use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::axioms::{AxiomReport, LawLedger};
use super::{HgaCarrier, HgaError};
use crate::graded::bar_words;

/// An element of the bar construction: a set of words over basis letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarElem<E: Ord> {
    words: BTreeSet<Vec<E>>,
}

impl<E: Ord + Clone> Default for BarElem<E> {
    fn default() -> Self {
        Self { words: BTreeSet::new() }
    }
}

impl<E: Ord + Clone> BarElem<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Vec<E>) -> Self {
        let mut s = Self::zero();
        s.toggle(w);
        s
    }

    pub fn toggle(&mut self, w: Vec<E>) {
        if !self.words.remove(&w) {
            self.words.insert(w);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for w in &other.words {
            self.toggle(w.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Vec<E>> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Deconcatenation coproduct, as a set of word pairs.
    pub fn coproduct(&self) -> BTreeSet<(Vec<E>, Vec<E>)> {
        let mut out = BTreeSet::new();
        for w in &self.words {
            for k in 0..=w.len() {
                toggle_pair(&mut out, (w[..k].to_vec(), w[k..].to_vec()));
            }
        }
        out
    }
}

fn toggle_pair<T: Ord>(s: &mut BTreeSet<T>, p: T) {
    if !s.remove(&p) {
        s.insert(p);
    }
}

/// Multiplication on the bar construction induced by the braces, with the
/// structure used to evaluate it.
pub struct BarBialgebra<'c, C: HgaCarrier> {
    carrier: &'c C,
    letters: Vec<C::Elem>,
    max_len: usize,
    memo: HashMap<(Vec<C::Elem>, Vec<C::Elem>), BarElem<C::Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarBialgebraReport {
    pub max_len: usize,
    pub letters: usize,
    pub words: usize,
    #[serde(flatten)]
    pub ledger: LawLedger,
}

impl BarBialgebraReport {
    pub fn passed(&self) -> bool {
        self.ledger.passed()
    }
}

impl<'c, C: HgaCarrier> BarBialgebra<'c, C> {
    pub fn new(carrier: &'c C, letters: Vec<C::Elem>, max_len: usize) -> Self {
        Self { carrier, letters, max_len, memo: HashMap::new() }
    }

    pub fn letters(&self) -> &[C::Elem] {
        &self.letters
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// All words over the window letters of length at most the cap.
    pub fn window_words(&self) -> Vec<Vec<C::Elem>> {
        bar_words(self.letters.len(), self.max_len)
            .into_iter()
            .map(|w| w.into_iter().map(|i| self.letters[i].clone()).collect())
            .collect()
    }

    /// Expands a sequence of carrier elements into basis words.
    fn expand(&self, values: &[C::Elem]) -> BarElem<C::Elem> {
        let mut partial: Vec<Vec<C::Elem>> = vec![Vec::new()];
        for v in values {
            let letters = self.carrier.basis_decompose(v);
            partial = partial
                .iter()
                .flat_map(|p| {
                    letters.iter().map(move |l| {
                        let mut q = p.clone();
                        q.push(l.clone());
                        q
                    })
                })
                .collect();
        }
        let mut out = BarElem::zero();
        for w in partial {
            out.toggle(w);
        }
        out
    }

    /// Bar differential: internal differentials plus adjacent products.
    pub fn d_word(&self, w: &[C::Elem]) -> BarElem<C::Elem> {
        let c = self.carrier;
        let mut out = BarElem::zero();
        for i in 0..w.len() {
            let mut vals = w.to_vec();
            vals[i] = c.d(&w[i]);
            out.add_assign(&self.expand(&vals));
        }
        for i in 0..w.len().saturating_sub(1) {
            let mut vals: Vec<C::Elem> = w[..i].to_vec();
            vals.push(c.mul(&w[i], &w[i + 1]));
            vals.extend_from_slice(&w[i + 2..]);
            out.add_assign(&self.expand(&vals));
        }
        out
    }

    pub fn d(&self, x: &BarElem<C::Elem>) -> BarElem<C::Elem> {
        let mut out = BarElem::zero();
        for w in x.words() {
            out.add_assign(&self.d_word(w));
        }
        out
    }

    /// `E(u x v)`: identity on `[] x [b]` and `[a] x []`, the brace
    /// `E_{1,q}(a; v)` on `[a] x v`, zero otherwise.
    pub fn e(&self, u: &[C::Elem], v: &[C::Elem]) -> C::Elem {
        let c = self.carrier;
        match (u, v) {
            ([], [b]) => b.clone(),
            ([a], vs) => {
                let refs: Vec<&C::Elem> = vs.iter().collect();
                c.brace(a, &refs)
            }
            _ => c.zero(),
        }
    }

    /// `mu_E(u x v)`: sum over splittings of both words into matching
    /// sequences of blocks, each block evaluated by `E`.
    pub fn mul_words(&mut self, u: &[C::Elem], v: &[C::Elem]) -> BarElem<C::Elem> {
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut out = BarElem::zero();
        let mut values = Vec::new();
        self.blocks(u, v, 0, 0, &mut values, &mut out);
        self.memo.insert(key, out.clone());
        out
    }

    fn blocks(
        &self,
        u: &[C::Elem],
        v: &[C::Elem],
        i: usize,
        j: usize,
        values: &mut Vec<C::Elem>,
        out: &mut BarElem<C::Elem>,
    ) {
        if i == u.len() && j == v.len() {
            out.add_assign(&self.expand(values));
            return;
        }
        if i < u.len() {
            for t in 0..=v.len() - j {
                let val = self.e(&u[i..=i], &v[j..j + t]);
                if !self.carrier.is_zero(&val) {
                    values.push(val);
                    self.blocks(u, v, i + 1, j + t, values, out);
                    values.pop();
                }
            }
        }
        if j < v.len() {
            values.push(v[j].clone());
            self.blocks(u, v, i, j + 1, values, out);
            values.pop();
        }
    }

    pub fn mul(&mut self, x: &BarElem<C::Elem>, y: &BarElem<C::Elem>) -> BarElem<C::Elem> {
        let mut out = BarElem::zero();
        for u in x.words() {
            for v in y.words() {
                let p = self.mul_words(u, v);
                out.add_assign(&p);
            }
        }
        out
    }

    /// Runs the four checks on window words: `E` is a twisting cochain,
    /// `mu_E` is a chain map and a coalgebra map, associativity, and the
    /// empty word as two-sided unit.
    pub fn verify(&mut self) -> BarBialgebraReport {
        let c = self.carrier;
        let words = self.window_words();
        let mut ledger = LawLedger::default();
        let name = |w: &[C::Elem]| format!("[{}]", w.iter().map(|x| c.describe(x)).collect::<Vec<_>>().join("|"));
        let lens: Vec<usize> = words.iter().map(Vec::len).collect();
        let max_len = self.max_len;

        for (u, &lu) in words.iter().zip(&lens) {
            for (v, &lv) in words.iter().zip(&lens) {
                if lu + lv > max_len {
                    continue;
                }
                let witness = || vec![name(u), name(v)];
                // (a) dE + E(d x 1 + 1 x d) = E cup E.
                let mut lhs = c.d(&self.e(u, v));
                for w in self.d_word(u).words() {
                    lhs = c.add(&lhs, &self.e(w, v));
                }
                for w in self.d_word(v).words() {
                    lhs = c.add(&lhs, &self.e(u, w));
                }
                let mut rhs = c.zero();
                for p in 0..=lu {
                    for q in 0..=lv {
                        let left = self.e(&u[..p], &v[..q]);
                        if c.is_zero(&left) {
                            continue;
                        }
                        let right = self.e(&u[p..], &v[q..]);
                        rhs = c.add(&rhs, &c.mul(&left, &right));
                    }
                }
                ledger.record("E twisting cochain", c.equal(&lhs, &rhs), witness);

                // (b) chain map and coalgebra map.
                let prod = self.mul_words(u, v);
                let lhs = self.d(&prod);
                let mut rhs = self.mul(&self.d_word(u), &BarElem::word(v.clone()));
                let other = self.mul(&BarElem::word(u.clone()), &self.d_word(v));
                rhs.add_assign(&other);
                ledger.record("chain map", lhs == rhs, witness);

                let lhs = prod.coproduct();
                let mut rhs = BTreeSet::new();
                for p in 0..=lu {
                    for q in 0..=lv {
                        let left = self.mul_words(&u[..p], &v[..q]);
                        let right = self.mul_words(&u[p..], &v[q..]);
                        for a in left.words() {
                            for b in right.words() {
                                toggle_pair(&mut rhs, (a.clone(), b.clone()));
                            }
                        }
                    }
                }
                ledger.record("coalgebra map", lhs == rhs, witness);
            }
        }
        // (c) associativity on triples within the cap.
        for (u, &lu) in words.iter().zip(&lens) {
            for (v, &lv) in words.iter().zip(&lens) {
                if lu + lv > max_len {
                    continue;
                }
                let uv = self.mul_words(u, v);
                for (w, &lw) in words.iter().zip(&lens) {
                    if lu + lv + lw > max_len {
                        continue;
                    }
                    let left = self.mul(&uv, &BarElem::word(w.clone()));
                    let vw = self.mul_words(v, w);
                    let right = self.mul(&BarElem::word(u.clone()), &vw);
                    ledger.record("associativity", left == right, || vec![name(u), name(v), name(w)]);
                }
            }
        }
        // (d) unit.
        for w in &words {
            let one = BarElem::word(w.clone());
            let ok = self.mul_words(&[], w) == one && self.mul_words(w, &[]) == one;
            ledger.record("unit", ok, || vec![name(w)]);
        }
        let report = BarBialgebraReport { max_len, letters: self.letters.len(), words: words.len(), ledger };
        self.memo.clear();
        report
    }
}

/// Builds the bar multiplication over the given letters and verifies it
/// within word length `max_len`. Refuses to run when the axiom sweep failed.
pub fn build_bar_bialgebra<'c, C: HgaCarrier>(
    carrier: &'c C,
    letters: Vec<C::Elem>,
    max_len: usize,
    axioms: &AxiomReport,
) -> Result<(BarBialgebra<'c, C>, BarBialgebraReport), HgaError> {
    if !axioms.passed() {
        return Err(HgaError::AxiomFailure(axioms.failures() as usize));
    }
    if max_len < 2 {
        return Err(HgaError::TruncationTooSmall(max_len));
    }
    let mut b = BarBialgebra::new(carrier, letters, max_len);
    let report = b.verify();
    Ok((b, report))
}

/// Multiplication table on window word pairs, for reports.
impl<C: HgaCarrier> BarBialgebra<'_, C> {
    pub fn table(&mut self) -> BTreeMap<(Vec<C::Elem>, Vec<C::Elem>), BarElem<C::Elem>> {
        let words = self.window_words();
        let mut out = BTreeMap::new();
        for u in &words {
            for v in &words {
                if u.len() + v.len() <= self.max_len {
                    let p = self.mul_words(u, v);
                    out.insert((u.clone(), v.clone()), p);
                }
            }
        }
        out
    }
}
