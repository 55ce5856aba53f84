use super::axioms::AxiomReport;
use super::{AxiomConfig, HgaCarrier};

/// Commutator of cup-one: `[a, b] = a cup_1 b + b cup_1 a`.
pub fn bracket<C: HgaCarrier>(c: &C, a: &C::Elem, b: &C::Elem) -> C::Elem {
    c.add(&c.brace(a, &[b]), &c.brace(b, &[a]))
}

/// Checks on sample tuples: the bracket alternates, the pre-Jacobi
/// identity, Jacobi, the chain-map property, and that the failure of
/// `[a, -]` to be a derivation of the product equals the boundary of
/// `E_{1,2}(a; b, c)`.
pub fn verify_lie<C: HgaCarrier>(c: &C, samples: &[C::Elem], max_weight: usize) -> AxiomReport {
    let mut report = AxiomReport::new(AxiomConfig { max_k: 2, max_weight });
    let cup1 = |a: &C::Elem, b: &C::Elem| c.brace(a, &[b]);
    let br = |a: &C::Elem, b: &C::Elem| bracket(c, a, b);
    let describe = |t: &[&C::Elem]| t.iter().map(|x| c.describe(x)).collect::<Vec<_>>();
    let weights: Vec<usize> = samples.iter().map(|s| c.weight(s)).collect();

    for (a, &wa) in samples.iter().zip(&weights) {
        if wa <= max_weight {
            report.record("alternating", c.is_zero(&br(a, a)), || vec![c.describe(a)]);
        }
    }
    for (a, &wa) in samples.iter().zip(&weights) {
        for (b, &wb) in samples.iter().zip(&weights) {
            if wa + wb > max_weight {
                continue;
            }
            let lhs = c.d(&br(a, b));
            let rhs = c.add(&br(&c.d(a), b), &br(a, &c.d(b)));
            report.record("chain map", c.equal(&lhs, &rhs), || describe(&[a, b]));
            for (x, &wx) in samples.iter().zip(&weights) {
                if wa + wb + wx > max_weight {
                    continue;
                }
                let t = [a, b, x];
                let lhs = c.add(&cup1(a, &cup1(b, x)), &cup1(&cup1(a, b), x));
                let rhs = c.add(&cup1(a, &cup1(x, b)), &cup1(&cup1(a, x), b));
                report.record("pre-Jacobi", c.equal(&lhs, &rhs), || describe(&t));

                let jac = c.sum([&br(&br(a, b), x), &br(&br(b, x), a), &br(&br(x, a), b)]);
                report.record("Jacobi", c.is_zero(&jac), || describe(&t));

                let defect = c.sum([&br(a, &c.mul(b, x)), &c.mul(&br(a, b), x), &c.mul(b, &br(a, x))]);
                let e2 = |p: &C::Elem, q: &C::Elem, r: &C::Elem| c.brace(p, &[q, r]);
                let homotopy = c.sum([
                    &c.d(&e2(a, b, x)),
                    &e2(&c.d(a), b, x),
                    &e2(a, &c.d(b), x),
                    &e2(a, b, &c.d(x)),
                ]);
                report.record("biderivation up to homotopy", c.equal(&defect, &homotopy), || describe(&t));
            }
        }
    }
    report
}
