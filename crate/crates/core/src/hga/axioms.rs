use serde::Serialize;

use super::HgaCarrier;
use crate::graded::Violation;

/// Sweep bounds: brace arity at most `max_k`, operand weights summing to at
/// most `max_weight`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomConfig {
    pub max_k: usize,
    pub max_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub law: String,
    pub checked: u64,
    pub failed: u64,
}

/// Per-law counts of checked and failed instances, with the first few
/// witnesses of each failing law.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawLedger {
    pub laws: Vec<LawTally>,
    pub violations: Vec<Violation>,
}

const WITNESS_CAP: u64 = 8;

impl LawLedger {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.failed == 0)
    }

    pub fn failures(&self) -> u64 {
        self.laws.iter().map(|l| l.failed).sum()
    }

    pub fn tally(&self, law: &str) -> Option<&LawTally> {
        self.laws.iter().find(|l| l.law == law)
    }

    pub fn record(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        let idx = match self.laws.iter().position(|l| l.law == law) {
            Some(i) => i,
            None => {
                self.laws.push(LawTally { law: law.to_string(), checked: 0, failed: 0 });
                self.laws.len() - 1
            }
        };
        let t = &mut self.laws[idx];
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if t.failed <= WITNESS_CAP {
                self.violations.push(Violation::new(law, witness()));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub config: AxiomConfig,
    #[serde(flatten)]
    pub ledger: LawLedger,
}

impl AxiomReport {
    pub(crate) fn new(config: AxiomConfig) -> Self {
        Self { config, ledger: LawLedger::default() }
    }

    pub fn passed(&self) -> bool {
        self.ledger.passed()
    }

    pub fn failures(&self) -> u64 {
        self.ledger.failures()
    }

    pub fn tally(&self, law: &str) -> Option<&LawTally> {
        self.ledger.tally(law)
    }

    pub(crate) fn record(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.ledger.record(law, ok, witness)
    }
}

/// Calls `f` on every `r`-tuple of samples whose weights sum to at most
/// `max_weight`.
fn for_each_tuple<C: HgaCarrier>(
    c: &C,
    samples: &[C::Elem],
    r: usize,
    max_weight: usize,
    f: &mut dyn FnMut(&[&C::Elem]),
) {
    let weights: Vec<usize> = samples.iter().map(|s| c.weight(s)).collect();
    let mut stack: Vec<&C::Elem> = Vec::with_capacity(r);
    fn go<'s, E>(
        samples: &'s [E],
        weights: &[usize],
        r: usize,
        budget: usize,
        stack: &mut Vec<&'s E>,
        f: &mut dyn FnMut(&[&E]),
    ) {
        if stack.len() == r {
            f(stack);
            return;
        }
        for (s, &w) in samples.iter().zip(weights) {
            if w <= budget {
                stack.push(s);
                go(samples, weights, r, budget - w, stack, f);
                stack.pop();
            }
        }
    }
    go(samples, &weights, r, max_weight, &mut stack, f);
}

fn describe_all<C: HgaCarrier>(c: &C, xs: &[&C::Elem]) -> Vec<String> {
    xs.iter().map(|x| c.describe(x)).collect()
}

/// Index sequences `0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n`.
pub(crate) fn interval_sequences(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(m: usize, n: usize, lo: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in lo..=n {
            for j in i..=n {
                cur.push((i, j));
                go(m, n, j, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Left side minus right side of the differential rule for `E_{1,k}`.
fn differential_defect<C: HgaCarrier>(c: &C, a: &C::Elem, bs: &[&C::Elem]) -> C::Elem {
    let k = bs.len();
    let mut acc = c.d(&c.brace(a, bs));
    acc = c.add(&acc, &c.brace(&c.d(a), bs));
    for i in 0..k {
        let db = c.d(bs[i]);
        let mut args = bs.to_vec();
        args[i] = &db;
        acc = c.add(&acc, &c.brace(a, &args));
    }
    acc = c.add(&acc, &c.mul(bs[0], &c.brace(a, &bs[1..])));
    acc = c.add(&acc, &c.mul(&c.brace(a, &bs[..k - 1]), bs[k - 1]));
    for i in 0..k.saturating_sub(1) {
        let prod = c.mul(bs[i], bs[i + 1]);
        let mut args: Vec<&C::Elem> = bs[..i].to_vec();
        args.push(&prod);
        args.extend_from_slice(&bs[i + 2..]);
        acc = c.add(&acc, &c.brace(a, &args));
    }
    acc
}

fn product_defect<C: HgaCarrier>(c: &C, a1: &C::Elem, a2: &C::Elem, bs: &[&C::Elem]) -> C::Elem {
    let k = bs.len();
    let mut acc = c.brace(&c.mul(a1, a2), bs);
    acc = c.add(&acc, &c.mul(a1, &c.brace(a2, bs)));
    acc = c.add(&acc, &c.mul(&c.brace(a1, bs), a2));
    for p in 1..k {
        acc = c.add(&acc, &c.mul(&c.brace(a1, &bs[..p]), &c.brace(a2, &bs[p..])));
    }
    acc
}

fn composition_defect<C: HgaCarrier>(
    c: &C,
    a: &C::Elem,
    bs: &[&C::Elem],
    cs: &[&C::Elem],
    sequences: &[Vec<(usize, usize)>],
) -> C::Elem {
    let mut acc = c.brace(&c.brace(a, bs), cs);
    for seq in sequences {
        let inner: Vec<C::Elem> = seq.iter().zip(bs).map(|(&(i, j), b)| c.brace(b, &cs[i..j])).collect();
        let mut args: Vec<&C::Elem> = Vec::with_capacity(cs.len() + bs.len());
        let mut prev = 0;
        for (&(i, j), e) in seq.iter().zip(&inner) {
            args.extend_from_slice(&cs[prev..i]);
            args.push(e);
            prev = j;
        }
        args.extend_from_slice(&cs[prev..]);
        acc = c.add(&acc, &c.brace(a, &args));
    }
    acc
}

/// Checks the unit, differential, product and composition axioms of the
/// brace operations on every tuple of samples within the configured bounds.
pub fn verify_axioms<C: HgaCarrier>(c: &C, samples: &[C::Elem], config: AxiomConfig) -> AxiomReport {
    let mut report = AxiomReport::new(config);
    let max_k = config.max_k;

    for a in samples {
        if c.weight(a) <= config.max_weight {
            let ok = c.equal(&c.brace(a, &[]), a);
            report.record("E(1,0) = id", ok, || vec![c.describe(a)]);
        }
    }
    for k in 1..=max_k {
        let law = format!("differential rule k={k}");
        for_each_tuple(c, samples, k + 1, config.max_weight, &mut |t| {
            let ok = c.is_zero(&differential_defect(c, t[0], &t[1..]));
            report.record(&law, ok, || describe_all(c, t));
        });
    }
    for k in 1..=max_k {
        let law = format!("product rule k={k}");
        for_each_tuple(c, samples, k + 2, config.max_weight, &mut |t| {
            let ok = c.is_zero(&product_defect(c, t[0], t[1], &t[2..]));
            report.record(&law, ok, || describe_all(c, t));
        });
    }
    for m in 1..max_k {
        for n in 1..=max_k - m {
            let law = format!("composition m={m} n={n}");
            let sequences = interval_sequences(m, n);
            for_each_tuple(c, samples, 1 + m + n, config.max_weight, &mut |t| {
                let ok = c.is_zero(&composition_defect(c, t[0], &t[1..=m], &t[m + 1..], &sequences));
                report.record(&law, ok, || describe_all(c, t));
            });
        }
    }
    report
}

/// Checks the low-dimensional identities directly from their displayed
/// forms: the cup-one homotopy, the left Hirsch formula, the right Hirsch
/// formula up to `E_{1,2}`, and the associator of cup-one.
pub fn verify_low_dim<C: HgaCarrier>(c: &C, samples: &[C::Elem], max_weight: usize) -> AxiomReport {
    let mut report = AxiomReport::new(AxiomConfig { max_k: 2, max_weight });
    let cup1 = |a: &C::Elem, b: &C::Elem| c.brace(a, &[b]);
    let e2 = |a: &C::Elem, b: &C::Elem, x: &C::Elem| c.brace(a, &[b, x]);
    let sum = |xs: &[C::Elem]| c.sum(xs.iter());

    for_each_tuple(c, samples, 2, max_weight, &mut |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = sum(&[c.d(&cup1(a, b)), cup1(&c.d(a), b), cup1(a, &c.d(b))]);
        let rhs = c.add(&c.mul(a, b), &c.mul(b, a));
        report.record("cup-one homotopy", c.equal(&lhs, &rhs), || describe_all(c, t));
    });
    for_each_tuple(c, samples, 3, max_weight, &mut |t| {
        let (a, b, x) = (t[0], t[1], t[2]);
        let left = sum(&[cup1(&c.mul(a, b), x), c.mul(a, &cup1(b, x)), c.mul(&cup1(a, x), b)]);
        report.record("left Hirsch", c.is_zero(&left), || describe_all(c, t));

        let lhs = sum(&[c.d(&e2(a, b, x)), e2(&c.d(a), b, x), e2(a, &c.d(b), x), e2(a, b, &c.d(x))]);
        let rhs = sum(&[cup1(a, &c.mul(b, x)), c.mul(&cup1(a, b), x), c.mul(b, &cup1(a, x))]);
        report.record("right Hirsch up to E(1,2)", c.equal(&lhs, &rhs), || describe_all(c, t));

        let lhs = c.add(&cup1(&cup1(a, b), x), &cup1(a, &cup1(b, x)));
        let rhs = c.add(&e2(a, b, x), &e2(a, x, b));
        report.record("cup-one associator", c.equal(&lhs, &rhs), || describe_all(c, t));
    });
    report
}
