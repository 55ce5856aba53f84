use super::engine::{act_levels, check_levels, gauge_inverse_levels, gauge_mul_levels};
use super::{TwistCarrier, TwistError};
use crate::hochschild::{Cochain, GradedAlgebra};

/// Fills `count` levels from labelled components, rejecting labels outside
/// the range and components of the wrong bidegree.
fn build_levels(
    count: usize,
    offset: usize,
    prefix: &str,
    bidegree: impl Fn(usize) -> (usize, i32),
    components: impl IntoIterator<Item = (usize, Cochain)>,
) -> Result<Vec<Cochain>, TwistError> {
    let mut levels = zero_levels(count, &bidegree);
    for (label, c) in components {
        let name = format!("{prefix}{label}");
        if label < offset + 1 || label > offset + count {
            return Err(TwistError::OutOfRange { label: name });
        }
        let l = label - offset;
        let expected = bidegree(l);
        if c.bidegree() != expected {
            return Err(TwistError::Bidegree { label: name, expected, found: c.bidegree() });
        }
        levels[l - 1].add_assign(&c);
    }
    Ok(levels)
}

fn zero_levels(count: usize, bidegree: &impl Fn(usize) -> (usize, i32)) -> Vec<Cochain> {
    (1..=count).map(|l| {
        let (a, d) = bidegree(l);
        Cochain::zero(a, d)
    }).collect()
}

/// `m = m^3 + ... + m^T` with `m^p` at level `p - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistV1 {
    carrier: TwistCarrier,
    levels: Vec<Cochain>,
}

/// `g = g^2 + ... + g^T` with `g^p` at level `p - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaugeV1 {
    carrier: TwistCarrier,
    levels: Vec<Cochain>,
}

/// `b = b_1 + ... + b_N` with `b_q` at level `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistV2 {
    carrier: TwistCarrier,
    levels: Vec<Cochain>,
}

/// `g = g_1 + ... + g_N` with `g_q` at level `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaugeV2 {
    carrier: TwistCarrier,
    levels: Vec<Cochain>,
}

impl TwistV1 {
    pub fn new(
        carrier: TwistCarrier,
        t: usize,
        components: impl IntoIterator<Item = (usize, Cochain)>,
    ) -> Result<Self, TwistError> {
        if t < 3 {
            return Err(TwistError::Truncation { found: t, min: 3 });
        }
        let levels = build_levels(t - 2, 2, "m", |l| carrier.twist_bidegree(l), components)?;
        Ok(Self { carrier, levels })
    }

    pub fn zero(carrier: TwistCarrier, t: usize) -> Result<Self, TwistError> {
        Self::new(carrier, t, [])
    }

    /// Wraps levels `1..=T-2` directly; bidegrees are checked.
    pub fn from_levels(carrier: TwistCarrier, levels: Vec<Cochain>) -> Result<Self, TwistError> {
        let t = levels.len() + 2;
        Self::new(carrier, t, levels.into_iter().enumerate().map(|(i, c)| (i + 3, c)))
    }

    pub fn carrier(&self) -> TwistCarrier {
        self.carrier
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() + 2
    }

    /// `m^p` for `3 <= p <= T`.
    pub fn component(&self, p: usize) -> &Cochain {
        &self.levels[p - 3]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Cochain)> {
        self.levels.iter().enumerate().map(|(i, c)| (i + 3, c))
    }

    pub fn levels(&self) -> &[Cochain] {
        &self.levels
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(Cochain::is_zero)
    }

    pub fn regrade(&self) -> TwistV2 {
        TwistV2 { carrier: self.carrier, levels: self.levels.clone() }
    }
}

impl TwistV2 {
    pub fn new(
        carrier: TwistCarrier,
        n: usize,
        components: impl IntoIterator<Item = (usize, Cochain)>,
    ) -> Result<Self, TwistError> {
        if n < 1 {
            return Err(TwistError::Truncation { found: n, min: 1 });
        }
        let levels = build_levels(n, 0, "b", |l| carrier.twist_bidegree(l), components)?;
        Ok(Self { carrier, levels })
    }

    pub fn zero(carrier: TwistCarrier, n: usize) -> Result<Self, TwistError> {
        Self::new(carrier, n, [])
    }

    pub fn carrier(&self) -> TwistCarrier {
        self.carrier
    }

    pub fn truncation(&self) -> usize {
        self.levels.len()
    }

    /// `b_q` for `1 <= q <= N`.
    pub fn component(&self, q: usize) -> &Cochain {
        &self.levels[q - 1]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Cochain)> {
        self.levels.iter().enumerate().map(|(i, c)| (i + 1, c))
    }

    pub fn levels(&self) -> &[Cochain] {
        &self.levels
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(Cochain::is_zero)
    }

    pub fn regrade(&self) -> TwistV1 {
        TwistV1 { carrier: self.carrier, levels: self.levels.clone() }
    }
}

impl GaugeV1 {
    pub fn new(
        carrier: TwistCarrier,
        t: usize,
        components: impl IntoIterator<Item = (usize, Cochain)>,
    ) -> Result<Self, TwistError> {
        if t < 2 {
            return Err(TwistError::Truncation { found: t, min: 2 });
        }
        let levels = build_levels(t - 1, 1, "g", |l| carrier.gauge_bidegree(l), components)?;
        Ok(Self { carrier, levels })
    }

    /// The unit `e = 0`.
    pub fn identity(carrier: TwistCarrier, t: usize) -> Result<Self, TwistError> {
        Self::new(carrier, t, [])
    }

    pub fn from_levels(carrier: TwistCarrier, levels: Vec<Cochain>) -> Result<Self, TwistError> {
        let t = levels.len() + 1;
        Self::new(carrier, t, levels.into_iter().enumerate().map(|(i, c)| (i + 2, c)))
    }

    pub fn carrier(&self) -> TwistCarrier {
        self.carrier
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() + 1
    }

    /// `g^p` for `2 <= p <= T`.
    pub fn component(&self, p: usize) -> &Cochain {
        &self.levels[p - 2]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Cochain)> {
        self.levels.iter().enumerate().map(|(i, c)| (i + 2, c))
    }

    pub fn levels(&self) -> &[Cochain] {
        &self.levels
    }

    pub fn is_identity(&self) -> bool {
        self.levels.iter().all(Cochain::is_zero)
    }

    pub fn regrade(&self) -> GaugeV2 {
        GaugeV2 { carrier: self.carrier, levels: self.levels.clone() }
    }
}

impl GaugeV2 {
    pub fn new(
        carrier: TwistCarrier,
        n: usize,
        components: impl IntoIterator<Item = (usize, Cochain)>,
    ) -> Result<Self, TwistError> {
        if n < 1 {
            return Err(TwistError::Truncation { found: n, min: 1 });
        }
        let levels = build_levels(n, 0, "g", |l| carrier.gauge_bidegree(l), components)?;
        Ok(Self { carrier, levels })
    }

    pub fn identity(carrier: TwistCarrier, n: usize) -> Result<Self, TwistError> {
        Self::new(carrier, n, [])
    }

    pub fn carrier(&self) -> TwistCarrier {
        self.carrier
    }

    pub fn truncation(&self) -> usize {
        self.levels.len()
    }

    /// `g_q` for `1 <= q <= N`.
    pub fn component(&self, q: usize) -> &Cochain {
        &self.levels[q - 1]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Cochain)> {
        self.levels.iter().enumerate().map(|(i, c)| (i + 1, c))
    }

    pub fn levels(&self) -> &[Cochain] {
        &self.levels
    }

    pub fn is_identity(&self) -> bool {
        self.levels.iter().all(Cochain::is_zero)
    }

    pub fn regrade(&self) -> GaugeV1 {
        GaugeV1 { carrier: self.carrier, levels: self.levels.clone() }
    }
}

fn check_gauge_covers(carrier: TwistCarrier, g: &[Cochain], gc: TwistCarrier, m_levels: usize) -> Result<(), TwistError> {
    if carrier != gc || g.len() < m_levels {
        return Err(TwistError::Mismatch);
    }
    Ok(())
}

impl GradedAlgebra {
    /// `Ok(None)` when `m` is a twisting element up to `T`, otherwise the
    /// first `p` with `dm^p ≠ Σ m^i ⌣₁ m^{p-i+2}`.
    pub fn check_v1(&self, m: &TwistV1) -> Option<usize> {
        check_levels(self, m.carrier, &m.levels).map(|l| l + 2)
    }

    /// First `n` with `db_n ≠ Σ_{i+j=n} b_i ⌣₁ b_j`, if any.
    pub fn check_v2(&self, b: &TwistV2) -> Option<usize> {
        check_levels(self, b.carrier, &b.levels)
    }

    pub fn gauge_mul(&self, gbar: &GaugeV1, g: &GaugeV1) -> Result<GaugeV1, TwistError> {
        if gbar.carrier != g.carrier || gbar.levels.len() != g.levels.len() {
            return Err(TwistError::Mismatch);
        }
        let levels = gauge_mul_levels(self, g.carrier, &gbar.levels, &g.levels, g.levels.len());
        Ok(GaugeV1 { carrier: g.carrier, levels })
    }

    pub fn gauge_mul_v2(&self, gbar: &GaugeV2, g: &GaugeV2) -> Result<GaugeV2, TwistError> {
        Ok(self.gauge_mul(&gbar.regrade(), &g.regrade())?.regrade())
    }

    pub fn gauge_inverse(&self, g: &GaugeV1) -> GaugeV1 {
        GaugeV1 { carrier: g.carrier, levels: gauge_inverse_levels(self, g.carrier, &g.levels) }
    }

    /// `g * m`. Requires `m` to be a twisting element and `g` to reach its
    /// truncation.
    pub fn act_v1(&self, g: &GaugeV1, m: &TwistV1) -> Result<TwistV1, TwistError> {
        check_gauge_covers(m.carrier, &g.levels, g.carrier, m.levels.len())?;
        if let Some(l) = check_levels(self, m.carrier, &m.levels) {
            return Err(TwistError::NotTwisting(l));
        }
        Ok(TwistV1 { carrier: m.carrier, levels: act_levels(self, m.carrier, &g.levels, &m.levels) })
    }

    pub fn act_v2(&self, g: &GaugeV2, b: &TwistV2) -> Result<TwistV2, TwistError> {
        check_gauge_covers(b.carrier, &g.levels, g.carrier, b.levels.len())?;
        if let Some(l) = check_levels(self, b.carrier, &b.levels) {
            return Err(TwistError::NotTwisting(l));
        }
        Ok(TwistV2 { carrier: b.carrier, levels: act_levels(self, b.carrier, &g.levels, &b.levels) })
    }

    /// Acts by the gauge whose only component is `g^n ∈ C^{n,1-n}`.
    pub fn perturb(&self, m: &TwistV1, n: usize, gn: &Cochain) -> Result<TwistV1, TwistError> {
        let g = GaugeV1::new(m.carrier, m.truncation(), [(n, gn.clone())])?;
        self.act_v1(&g, m)
    }
}
