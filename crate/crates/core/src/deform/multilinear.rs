use std::collections::BTreeMap;

use crate::hochschild::{Cochain, GradedAlgebra, HochschildError};

/// A multilinear map on a module of dimension at most 64, stored as basis
/// tuple -> output bitmask. Zero values are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multilinear {
    arity: usize,
    entries: BTreeMap<Vec<usize>, u64>,
}

impl Multilinear {
    pub fn zero(arity: usize) -> Self {
        Self { arity, entries: BTreeMap::new() }
    }

    /// Entries with repeated tuples are summed.
    pub fn from_entries(arity: usize, entries: impl IntoIterator<Item = (Vec<usize>, u64)>) -> Self {
        let mut m = Self::zero(arity);
        for (t, v) in entries {
            assert_eq!(t.len(), arity, "tuple of the wrong length");
            m.toggle(t, v);
        }
        m
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_entries(1, (0..dim).map(|b| (vec![b], 1u64 << b)))
    }

    pub fn from_cochain(h: &GradedAlgebra, c: &Cochain) -> Self {
        Self::from_entries(c.arity(), c.entries(h))
    }

    pub fn to_cochain(&self, h: &GradedAlgebra, degree: i32) -> Result<Cochain, HochschildError> {
        Cochain::from_tuples(h, self.arity, degree, self.entries.iter().map(|(t, &v)| (t.clone(), v)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.entries.iter().map(|(t, &v)| (t.as_slice(), v))
    }

    pub fn value(&self, tuple: &[usize]) -> u64 {
        self.entries.get(tuple).copied().unwrap_or(0)
    }

    /// Adds `v` to the value on `tuple`.
    pub fn toggle(&mut self, tuple: Vec<usize>, v: u64) {
        if v == 0 {
            return;
        }
        match self.entries.entry(tuple) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() ^= v;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// Multilinear evaluation on arguments given as bitmasks.
    pub fn eval(&self, args: &[u64]) -> u64 {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        if self.entries.is_empty() || args.contains(&0) {
            return 0;
        }
        let combos: u64 = args.iter().map(|a| a.count_ones() as u64).product();
        if combos > self.entries.len() as u64 {
            return self
                .entries
                .iter()
                .filter(|(t, _)| t.iter().zip(args).all(|(&b, &a)| a >> b & 1 == 1))
                .fold(0, |acc, (_, &v)| acc ^ v);
        }
        let mut t = Vec::with_capacity(self.arity);
        self.expand(args, &mut t)
    }

    fn expand(&self, args: &[u64], t: &mut Vec<usize>) -> u64 {
        let Some((&a, rest)) = args.split_first() else {
            return self.value(t);
        };
        let mut out = 0;
        let mut bits = a;
        while bits != 0 {
            t.push(bits.trailing_zeros() as usize);
            out ^= self.expand(rest, t);
            t.pop();
            bits &= bits - 1;
        }
        out
    }

    /// First entry breaking `deg(out) = Σ deg(in) + shift`, as (tuple, output).
    pub fn degree_violation(&self, src: &[i32], dst: &[i32], shift: i32) -> Option<(Vec<usize>, usize)> {
        for (t, &v) in &self.entries {
            let want = t.iter().map(|&b| src[b]).sum::<i32>() + shift;
            if let Some(o) = (0..dst.len()).find(|&o| v >> o & 1 == 1 && dst[o] != want) {
                return Some((t.clone(), o));
            }
        }
        None
    }
}

/// All tuples of length `n` over `0..dim`, in lexicographic order.
pub(crate) fn tuples(dim: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if dim == 0 && n > 0 { 0 } else { dim.pow(n as u32) };
    (0..total).map(move |mut k| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = k % dim;
            k /= dim;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toggling_twice_removes_the_entry() {
        let mut m = Multilinear::zero(2);
        m.toggle(vec![0, 1], 0b10);
        m.toggle(vec![0, 1], 0b10);
        assert!(m.is_zero());
    }

    #[test]
    fn eval_is_linear_in_each_slot() {
        let m = Multilinear::from_entries(2, [(vec![0, 1], 0b01), (vec![1, 1], 0b10), (vec![0, 0], 0b11)]);
        assert_eq!(m.eval(&[0b11, 0b10]), 0b01 ^ 0b10);
        assert_eq!(m.eval(&[0b11, 0b11]), m.eval(&[0b01, 0b11]) ^ m.eval(&[0b10, 0b11]));
    }

    #[test]
    fn tuples_cover_the_cube() {
        let all: Vec<_> = tuples(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(tuples(2, 0).count(), 1);
    }
}
