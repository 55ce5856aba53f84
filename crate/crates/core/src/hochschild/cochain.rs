use std::collections::BTreeMap;
use std::fmt;

use super::{bits, GradedAlgebra, HochschildError, MAX_ARITY};

/// A homogeneous Hochschild cochain in `C^{m,n}(H,H)`: arity `m`, internal
/// degree `n`. Entries are sorted `(packed input tuple, output bitmask)` pairs
/// with nonzero outputs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain {
    arity: usize,
    degree: i32,
    entries: Vec<(u64, u64)>,
}

/// Sorts by key and cancels repeated keys pairwise.
fn normalize(mut raw: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    raw.sort_unstable_by_key(|e| e.0);
    let mut w = 0;
    for r in 0..raw.len() {
        if w > 0 && raw[w - 1].0 == raw[r].0 {
            raw[w - 1].1 ^= raw[r].1;
        } else {
            raw[w] = raw[r];
            w += 1;
        }
    }
    raw.truncate(w);
    raw.retain(|e| e.1 != 0);
    raw
}

impl Cochain {
    pub fn zero(arity: usize, degree: i32) -> Self {
        Self { arity, degree, entries: Vec::new() }
    }

    pub(crate) fn from_raw(arity: usize, degree: i32, raw: Vec<(u64, u64)>) -> Self {
        Self { arity, degree, entries: normalize(raw) }
    }

    /// Builds a cochain from `(input tuple, output bitmask)` pairs, checking
    /// tuple shapes and the internal degree of every entry.
    pub fn from_tuples(
        h: &GradedAlgebra,
        arity: usize,
        degree: i32,
        entries: impl IntoIterator<Item = (Vec<usize>, u64)>,
    ) -> Result<Self, HochschildError> {
        if arity > h.max_arity() {
            return Err(HochschildError::ArityTooLarge { arity, max: h.max_arity() });
        }
        let mut raw = Vec::new();
        for (tuple, value) in entries {
            if tuple.len() != arity {
                return Err(HochschildError::BadTuple { expected: arity, found: tuple.len() });
            }
            if let Some(&b) = tuple.iter().find(|&&b| b >= h.dim()) {
                return Err(HochschildError::BadIndex(b));
            }
            if h.dim() < 64 && value >> h.dim() != 0 {
                return Err(HochschildError::BadIndex(63 - value.leading_zeros() as usize));
            }
            let want = tuple.iter().map(|&b| h.degree(b)).sum::<i32>() + degree;
            if bits(value).any(|b| h.degree(b) != want) {
                let names: Vec<&str> = tuple.iter().map(|&b| h.name(b)).collect();
                return Err(HochschildError::NotHomogeneous {
                    entry: format!("({}) -> {}", names.join(","), h.format_word(value)),
                    degree,
                });
            }
            raw.push((h.encode(&tuple), value));
        }
        Ok(Self::from_raw(arity, degree, raw))
    }

    /// The identity map of `H`, in `C^{1,0}`.
    pub fn identity(h: &GradedAlgebra) -> Self {
        Self::from_raw(1, 0, (0..h.dim()).map(|b| (b as u64, 1u64 << b)).collect())
    }

    /// The multiplication of `H`, in `C^{2,0}`.
    pub fn multiplication(h: &GradedAlgebra) -> Self {
        let mut raw = Vec::new();
        for x in 0..h.dim() {
            for y in 0..h.dim() {
                raw.push((h.encode(&[x, y]), h.mul_basis(x, y)));
            }
        }
        Self::from_raw(2, 0, raw)
    }

    /// A homogeneous element of `H` as a 0-cochain.
    pub fn element(h: &GradedAlgebra, value: u64) -> Result<Self, HochschildError> {
        if value == 0 {
            return Ok(Self::zero(0, 0));
        }
        let degree = h.word_degree(value).ok_or(HochschildError::NotHomogeneous {
            entry: format!("() -> {}", h.format_word(value)),
            degree: 0,
        })?;
        Self::from_tuples(h, 0, degree, [(Vec::new(), value)])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn bidegree(&self) -> (usize, i32) {
        (self.arity, self.degree)
    }

    /// Total degree `m + n`.
    pub fn total_degree(&self) -> i32 {
        self.arity as i32 + self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn raw(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn entries(&self, h: &GradedAlgebra) -> Vec<(Vec<usize>, u64)> {
        let mut buf = [0usize; MAX_ARITY];
        self.entries
            .iter()
            .map(|&(k, v)| {
                h.decode(k, self.arity, &mut buf);
                (buf[..self.arity].to_vec(), v)
            })
            .collect()
    }

    /// Value on a basis tuple.
    pub fn value(&self, h: &GradedAlgebra, tuple: &[usize]) -> u64 {
        let key = h.encode(tuple);
        self.lookup(key)
    }

    pub(crate) fn lookup(&self, key: u64) -> u64 {
        self.entries.binary_search_by_key(&key, |e| e.0).map(|i| self.entries[i].1).unwrap_or(0)
    }

    /// Sum of two cochains of the same bidegree. A zero operand adopts the
    /// other's bidegree.
    pub fn add(&self, other: &Cochain) -> Cochain {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.bidegree(), other.bidegree(), "adding cochains of different bidegree");
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a[i].1 ^ b[j].1;
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Cochain { arity: self.arity, degree: self.degree, entries: out }
    }

    pub fn add_assign(&mut self, other: &Cochain) {
        *self = self.add(other);
    }

    pub fn format(&self, h: &GradedAlgebra) -> String {
        let parts: Vec<String> = self
            .entries(h)
            .into_iter()
            .map(|(t, v)| {
                let names: Vec<&str> = t.iter().map(|&b| h.name(b)).collect();
                format!("({})->{}", names.join(","), h.format_word(v))
            })
            .collect();
        format!("C^({},{})[{}]", self.arity, self.degree, parts.join(" "))
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain({}, {}; {:?})", self.arity, self.degree, self.entries)
    }
}

/// A finite sum of homogeneous cochains, keyed by bidegree. Zero components
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CochainSum {
    parts: BTreeMap<(usize, i32), Cochain>,
}

impl CochainSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add_cochain(&mut self, c: &Cochain) {
        if c.is_zero() {
            return;
        }
        let key = c.bidegree();
        match self.parts.remove(&key) {
            Some(old) => {
                let s = old.add(c);
                if !s.is_zero() {
                    self.parts.insert(key, s);
                }
            }
            None => {
                self.parts.insert(key, c.clone());
            }
        }
    }

    pub fn add(&self, other: &CochainSum) -> CochainSum {
        let mut out = self.clone();
        for c in other.parts.values() {
            out.add_cochain(c);
        }
        out
    }

    pub fn parts(&self) -> impl Iterator<Item = &Cochain> {
        self.parts.values()
    }

    pub fn component(&self, arity: usize, degree: i32) -> Cochain {
        self.parts.get(&(arity, degree)).cloned().unwrap_or_else(|| Cochain::zero(arity, degree))
    }
}

impl From<Cochain> for CochainSum {
    fn from(c: Cochain) -> Self {
        let mut s = CochainSum::zero();
        s.add_cochain(&c);
        s
    }
}

impl GradedAlgebra {
    fn check_arity(&self, arity: usize) {
        assert!(
            arity <= self.max_arity(),
            "arity {arity} exceeds the packing capacity {} of this algebra",
            self.max_arity()
        );
    }

    fn mul_left(&self, a: usize, v: u64) -> u64 {
        bits(v).fold(0, |acc, b| acc ^ self.mul_basis(a, b))
    }

    fn mul_right(&self, v: u64, a: usize) -> u64 {
        bits(v).fold(0, |acc, b| acc ^ self.mul_basis(b, a))
    }

    /// Hochschild differential. On a 0-cochain `a` it gives `b -> b a + a b`.
    pub fn delta(&self, f: &Cochain) -> Cochain {
        let m = f.arity;
        self.check_arity(m + 1);
        let d = self.dim();
        let base = self.base();
        let top = self.pow(m);
        let mut raw = Vec::with_capacity(f.entries.len() * (2 * d + m));
        let mut buf = [0usize; MAX_ARITY];
        for &(key, v) in &f.entries {
            for a in 0..d {
                let l = self.mul_left(a, v);
                if l != 0 {
                    raw.push((a as u64 * top + key, l));
                }
                let r = self.mul_right(v, a);
                if r != 0 {
                    raw.push((key * base + a as u64, r));
                }
            }
            self.decode(key, m, &mut buf);
            for s in 0..m {
                let rest = self.pow(m - s - 1);
                let prefix = key / (rest * base);
                let suffix = key % rest;
                for &(x, y) in self.preimage(buf[s]) {
                    let k = ((prefix * base + x) * base + y) * rest + suffix;
                    raw.push((k, v));
                }
            }
        }
        Cochain::from_raw(m + 1, f.degree, raw)
    }

    /// Cup product `(f g)(a..) = f(first m inputs) g(rest)`.
    pub fn cup(&self, f: &Cochain, g: &Cochain) -> Cochain {
        self.check_arity(f.arity + g.arity);
        let shift = self.pow(g.arity);
        let mut raw = Vec::with_capacity(f.entries.len() * g.entries.len());
        for &(kf, vf) in &f.entries {
            for &(kg, vg) in &g.entries {
                let v = self.mul_words(vf, vg);
                if v != 0 {
                    raw.push((kf * shift + kg, v));
                }
            }
        }
        Cochain::from_raw(f.arity + g.arity, f.degree + g.degree, raw)
    }

    /// Brace operation `E_{1,k}(f; g_1, ..., g_k)`: insert the `g_j` into
    /// strictly increasing input slots of `f`. Zero when `k` exceeds the arity
    /// of `f`.
    pub fn brace(&self, f: &Cochain, gs: &[&Cochain]) -> Cochain {
        let k = gs.len();
        let m = f.arity;
        let degree = f.degree + gs.iter().map(|g| g.degree).sum::<i32>();
        if k == 0 {
            return f.clone();
        }
        if k > m {
            let arity = (m + gs.iter().map(|g| g.arity).sum::<usize>()).saturating_sub(k);
            return Cochain::zero(arity, degree);
        }
        let arity = m + gs.iter().map(|g| g.arity).sum::<usize>() - k;
        self.check_arity(arity);
        if f.is_zero() || gs.iter().any(|g| g.is_zero()) {
            return Cochain::zero(arity, degree);
        }
        // For each g_j, the input keys whose output contains basis b, grouped
        // by b: keys[offsets[b]..offsets[b + 1]].
        let d = self.dim();
        let index: Vec<(Vec<u64>, [u32; 65])> = gs
            .iter()
            .map(|g| {
                let mut offsets = [0u32; 65];
                for &(_, v) in &g.entries {
                    for b in bits(v) {
                        offsets[b + 1] += 1;
                    }
                }
                for b in 0..d {
                    offsets[b + 1] += offsets[b];
                }
                let mut fill = offsets;
                let mut keys = vec![0u64; offsets[d] as usize];
                for &(key, v) in &g.entries {
                    for b in bits(v) {
                        keys[fill[b] as usize] = key;
                        fill[b] += 1;
                    }
                }
                (keys, offsets)
            })
            .collect();
        let shifts: Vec<u64> = gs.iter().map(|g| self.pow(g.arity)).collect();
        let base = self.base();
        let mut raw = Vec::new();
        let mut buf = [0usize; MAX_ARITY];
        let mut slot_buf = [0usize; MAX_ARITY];
        let slots = &mut slot_buf[..k];
        let mut choice = [0usize; MAX_ARITY];
        let mut lists: [&[u64]; MAX_ARITY] = [&[]; MAX_ARITY];
        for &(key, v) in &f.entries {
            self.decode(key, m, &mut buf);
            slots.iter_mut().enumerate().for_each(|(j, s)| *s = j);
            loop {
                let mut all = true;
                for j in 0..k {
                    let (keys, off) = &index[j];
                    let b = buf[slots[j]];
                    lists[j] = &keys[off[b] as usize..off[b + 1] as usize];
                    all &= !lists[j].is_empty();
                }
                if all {
                    choice[..k].iter_mut().for_each(|c| *c = 0);
                    'product: loop {
                        let mut out = 0u64;
                        let mut j = 0;
                        for (i, &t) in buf[..m].iter().enumerate() {
                            if j < k && slots[j] == i {
                                out = out * shifts[j] + lists[j][choice[j]];
                                j += 1;
                            } else {
                                out = out * base + t as u64;
                            }
                        }
                        raw.push((out, v));
                        let mut r = k;
                        loop {
                            if r == 0 {
                                break 'product;
                            }
                            r -= 1;
                            choice[r] += 1;
                            if choice[r] < lists[r].len() {
                                break;
                            }
                            choice[r] = 0;
                        }
                    }
                }
                if !next_subset(slots, m) {
                    break;
                }
            }
        }
        Cochain::from_raw(arity, degree, raw)
    }

    /// `f cup_1 g = E_{1,1}(f; g)`.
    pub fn cup1(&self, f: &Cochain, g: &Cochain) -> Cochain {
        self.brace(f, &[g])
    }

    /// Multilinear evaluation on arguments given as basis bitmasks.
    pub fn eval(&self, f: &Cochain, args: &[u64]) -> u64 {
        assert_eq!(args.len(), f.arity, "wrong number of arguments");
        let combos: u128 = args.iter().map(|a| a.count_ones() as u128).product();
        let mut out = 0;
        if combos <= f.entries.len() as u128 {
            let mut tuple = vec![0usize; f.arity];
            let supports: Vec<Vec<usize>> = args.iter().map(|&a| bits(a).collect()).collect();
            if supports.iter().any(|s| s.is_empty()) {
                return 0;
            }
            let mut choice = vec![0usize; f.arity];
            loop {
                for (i, s) in supports.iter().enumerate() {
                    tuple[i] = s[choice[i]];
                }
                out ^= f.lookup(self.encode(&tuple));
                let mut r = f.arity;
                loop {
                    if r == 0 {
                        return out;
                    }
                    r -= 1;
                    choice[r] += 1;
                    if choice[r] < supports[r].len() {
                        break;
                    }
                    choice[r] = 0;
                }
            }
        }
        let mut buf = [0usize; MAX_ARITY];
        for &(key, v) in &f.entries {
            self.decode(key, f.arity, &mut buf);
            if buf[..f.arity].iter().zip(args).all(|(&t, &a)| a >> t & 1 == 1) {
                out ^= v;
            }
        }
        out
    }
}

/// Advances a strictly increasing `slots` selection in `0..m`.
pub(crate) fn next_subset(slots: &mut [usize], m: usize) -> bool {
    let k = slots.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if slots[i] < m - (k - i) {
            slots[i] += 1;
            for j in i + 1..k {
                slots[j] = slots[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
