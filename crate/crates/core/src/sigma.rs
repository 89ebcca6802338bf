//! Membership in the set of dimension vectors of simple representations, by exhaustive
//! decomposition search and by the closed forms available on a subgeneric ray.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{NwgError, Result};
use crate::quiver::{DimensionVector, FramedSetting, Quiver};
use crate::roots::{root_kind, BoxIter, ClassifiedRoot, RootKind};

/// A framed setting with a primitive positive root `v1 <= v` spanning the orthogonal ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgenericContext {
    pub fs: FramedSetting,
    pub v1: ClassifiedRoot,
}

impl SubgenericContext {
    pub fn new(fs: &FramedSetting, v1: &DimensionVector) -> Result<Self> {
        fs.quiver.check_len(v1)?;
        if !v1.is_nonnegative() || v1.is_zero() {
            return Err(NwgError::Input(format!("{v1} is not a positive vector")));
        }
        let kind = root_kind(&fs.quiver, v1)
            .ok_or_else(|| NwgError::Input(format!("{v1} is not a root of the quiver")))?;
        if v1.gcd() != 1 {
            return Err(NwgError::Input(format!("{v1} is not primitive")));
        }
        if !v1.leq(&fs.v) {
            return Err(NwgError::Input(format!("{v1} is not bounded by v = {}", fs.v)));
        }
        Ok(SubgenericContext {
            fs: fs.clone(),
            v1: ClassifiedRoot { vector: v1.clone(), kind },
        })
    }

    /// `v1` as a vector on the extended quiver.
    pub fn v1_extended(&self) -> DimensionVector {
        self.fs.embed(&self.v1.vector)
    }

    /// `tilde_v - n v1`, possibly with negative entries.
    pub fn complement(&self, n: i64) -> DimensionVector {
        &self.fs.tilde_v - &(n * &self.v1_extended())
    }

    /// Largest `n` with `n v1 <= v`.
    pub fn max_multiple(&self) -> i64 {
        let v1 = &self.v1.vector;
        (0..v1.len())
            .filter(|&i| v1[i] > 0)
            .map(|i| self.fs.v[i] / v1[i])
            .min()
            .unwrap_or(0)
    }

    /// Largest `n` with `tilde_v - n v1` a root of the extended quiver.
    pub fn max_root_complement(&self) -> Option<i64> {
        (0..=self.max_multiple())
            .rev()
            .find(|&n| root_kind(&self.fs.extended, &self.complement(n)).is_some())
    }

    /// Positive roots of the extended quiver below `tilde_v` that pair to zero with a
    /// parameter generic on the hyperplane orthogonal to `v1`.
    pub fn orthogonal_roots(&self) -> BTreeSet<DimensionVector> {
        let q = &self.fs.extended;
        let v1 = self.v1_extended();
        let mut out = BTreeSet::new();
        for k in 1..=self.max_multiple() {
            let x = k * &v1;
            if root_kind(q, &x).is_some() {
                out.insert(x);
            }
            let y = self.complement(k);
            if root_kind(q, &y).is_some() {
                out.insert(y);
            }
        }
        if root_kind(q, &self.fs.tilde_v).is_some() {
            out.insert(self.fs.tilde_v.clone());
        }
        out
    }
}

/// All positive roots `<= x`, the orthogonal set for the zero parameter.
pub fn orthogonal_roots_zero(q: &Quiver, x: &DimensionVector) -> Result<BTreeSet<DimensionVector>> {
    q.check_len(x)?;
    if !x.is_nonnegative() {
        return Err(NwgError::Input(format!("{x} has a negative entry")));
    }
    Ok(BoxIter::new(x).filter(|y| root_kind(q, y).is_some()).collect())
}

/// Memoized search over decompositions into roots of a fixed orthogonal set.
pub struct SigmaOracle<'a> {
    q: &'a Quiver,
    roots: Vec<DimensionVector>,
    set: BTreeSet<DimensionVector>,
    best: HashMap<DimensionVector, Option<i64>>,
    verdict: HashMap<DimensionVector, bool>,
}

impl<'a> SigmaOracle<'a> {
    pub fn new(q: &'a Quiver, orthogonal: &BTreeSet<DimensionVector>) -> Self {
        SigmaOracle {
            q,
            roots: orthogonal.iter().cloned().collect(),
            set: orthogonal.clone(),
            best: HashMap::new(),
            verdict: HashMap::new(),
        }
    }

    /// Largest sum of `p` over decompositions of `y` into at least one orthogonal root.
    fn best_split(&mut self, y: &DimensionVector) -> Option<i64> {
        if let Some(&b) = self.best.get(y) {
            return b;
        }
        let mut best = if self.set.contains(y) { Some(self.q.p(y)) } else { None };
        for k in 0..self.roots.len() {
            let beta = &self.roots[k];
            if beta == y || !beta.leq(y) {
                continue;
            }
            let rest = y - beta;
            let pb = self.q.p(beta);
            if let Some(r) = self.best_split(&rest) {
                best = Some(best.map_or(pb + r, |b: i64| b.max(pb + r)));
            }
        }
        self.best.insert(y.clone(), best);
        best
    }

    /// Whether `x` is an orthogonal root with `p(x)` beating every proper decomposition.
    pub fn in_sigma(&mut self, x: &DimensionVector) -> Result<bool> {
        self.q.check_len(x)?;
        if !x.is_nonnegative() {
            return Err(NwgError::Input(format!("{x} has a negative entry")));
        }
        if let Some(&v) = self.verdict.get(x) {
            return Ok(v);
        }
        let verdict = if !self.set.contains(x) || root_kind(self.q, x).is_none() {
            false
        } else {
            let px = self.q.p(x);
            let mut ok = true;
            for k in 0..self.roots.len() {
                let beta = self.roots[k].clone();
                if &beta == x || !beta.leq(x) {
                    continue;
                }
                let rest = x - &beta;
                if let Some(r) = self.best_split(&rest) {
                    if self.q.p(&beta) + r >= px {
                        ok = false;
                        break;
                    }
                }
            }
            ok
        };
        self.verdict.insert(x.clone(), verdict);
        Ok(verdict)
    }
}

/// One-shot form of [`SigmaOracle::in_sigma`].
pub fn in_sigma(
    q: &Quiver,
    orthogonal: &BTreeSet<DimensionVector>,
    x: &DimensionVector,
) -> Result<bool> {
    SigmaOracle::new(q, orthogonal).in_sigma(x)
}

/// Closed form for `n v1` on the ray: real and isotropic roots only at `n = 1`.
pub fn sigma_multiple(ctx: &SubgenericContext, n: i64) -> Result<bool> {
    if n < 1 {
        return Err(NwgError::Contract(format!("multiple {n} must be at least 1")));
    }
    Ok(match ctx.v1.kind {
        RootKind::Real | RootKind::IsotropicImaginary => n == 1,
        RootKind::NonIsotropicImaginary => true,
    })
}

/// Closed form for `tilde_v - n v1` on the ray.
pub fn sigma_complement(ctx: &SubgenericContext, n: i64) -> Result<bool> {
    if n < 0 {
        return Err(NwgError::Contract(format!("multiple {n} must be non-negative")));
    }
    let q = &ctx.fs.extended;
    let x = ctx.complement(n);
    if !x.is_nonnegative() || root_kind(q, &x).is_none() {
        return Ok(false);
    }
    let v1 = ctx.v1_extended();
    Ok(match ctx.v1.kind {
        RootKind::Real => q.form(&x, &v1) <= 0,
        RootKind::IsotropicImaginary => {
            q.form(&ctx.fs.tilde_v, &v1) <= -2 || ctx.max_root_complement() == Some(n)
        }
        RootKind::NonIsotropicImaginary => {
            let big_n = ctx.max_root_complement().expect("x itself is a root");
            n == big_n || q.p(&x) > q.p(&ctx.complement(big_n)) + q.p(&((big_n - n) * &v1))
        }
    })
}

/// Coarsest decomposition of `x` into members of the orthogonal simple set.
///
/// Returned as distinct parts with multiplicities, parts in lexicographic order.
pub fn canonical_decomposition(
    q: &Quiver,
    x: &DimensionVector,
    orthogonal: &BTreeSet<DimensionVector>,
) -> Result<Vec<(DimensionVector, u32)>> {
    q.check_len(x)?;
    if !x.is_nonnegative() || x.is_zero() {
        return Err(NwgError::Input(format!("{x} is not a positive vector")));
    }
    let mut oracle = SigmaOracle::new(q, orthogonal);
    let mut members = Vec::new();
    for y in orthogonal.iter().filter(|y| y.leq(x)) {
        if oracle.in_sigma(y)? {
            members.push(y.clone());
        }
    }
    let mut dead = BTreeSet::new();
    let parts = any_decomposition(x, &members, &mut dead).ok_or_else(|| {
        NwgError::Input(format!("{x} has no decomposition into simple dimension vectors"))
    })?;
    let mut multiset: BTreeMap<DimensionVector, u32> = BTreeMap::new();
    for p in parts {
        *multiset.entry(p).or_default() += 1;
    }
    while let Some(merged) = find_merge(&multiset, &mut oracle)? {
        for (p, c) in &merged.0 {
            let e = multiset.get_mut(p).unwrap();
            *e -= c;
            if *e == 0 {
                multiset.remove(p);
            }
        }
        *multiset.entry(merged.1).or_default() += 1;
    }
    Ok(multiset.into_iter().collect())
}

fn any_decomposition(
    y: &DimensionVector,
    members: &[DimensionVector],
    dead: &mut BTreeSet<DimensionVector>,
) -> Option<Vec<DimensionVector>> {
    if members.contains(y) {
        return Some(vec![y.clone()]);
    }
    if dead.contains(y) {
        return None;
    }
    for m in members.iter().rev() {
        if m.leq(y) && m != y {
            if let Some(mut rest) = any_decomposition(&(y - m), members, dead) {
                rest.push(m.clone());
                return Some(rest);
            }
        }
    }
    dead.insert(y.clone());
    None
}

type Merge = (Vec<(DimensionVector, u32)>, DimensionVector);

/// First sub-multiset with at least two elements whose sum is again simple.
fn find_merge(
    multiset: &BTreeMap<DimensionVector, u32>,
    oracle: &mut SigmaOracle<'_>,
) -> Result<Option<Merge>> {
    let items: Vec<(&DimensionVector, u32)> = multiset.iter().map(|(k, &c)| (k, c)).collect();
    let mut counts = vec![0u32; items.len()];
    loop {
        let mut k = 0;
        while k < items.len() && counts[k] == items[k].1 {
            counts[k] = 0;
            k += 1;
        }
        if k == items.len() {
            return Ok(None);
        }
        counts[k] += 1;
        if counts.iter().sum::<u32>() < 2 {
            continue;
        }
        let n = items[0].0.len();
        let mut sum = DimensionVector::zero(n);
        for (j, &(p, _)) in items.iter().enumerate() {
            sum = &sum + &(counts[j] as i64 * p);
        }
        if oracle.in_sigma(&sum)? {
            let taken = items
                .iter()
                .zip(&counts)
                .filter(|(_, &c)| c > 0)
                .map(|(&(p, _), &c)| (p.clone(), c))
                .collect();
            return Ok(Some((taken, sum)));
        }
    }
}

/// Resolution criterion for a single simple dimension vector: indivisible, or twice a
/// vector with `p = 2`.
pub fn simple_part_resolvable(q: &Quiver, x: &DimensionVector) -> Result<bool> {
    q.check_len(x)?;
    Ok(match x.gcd() {
        1 => true,
        2 => q.p(&x.div_exact(2).unwrap()) == 2,
        _ => false,
    })
}

/// Whether the moduli space for `x` with the given orthogonal set admits a symplectic
/// resolution, part by part along the canonical decomposition.
pub fn admits_symplectic_resolution(
    q: &Quiver,
    x: &DimensionVector,
    orthogonal: &BTreeSet<DimensionVector>,
) -> Result<bool> {
    for (part, _) in canonical_decomposition(q, x, orthogonal)? {
        if !simple_part_resolvable(q, &part)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The framed case at the zero parameter: decomposition of `tilde_v` on the extended quiver.
pub fn framed_admits_symplectic_resolution(fs: &FramedSetting) -> Result<bool> {
    let orth = orthogonal_roots_zero(&fs.extended, &fs.tilde_v)?;
    admits_symplectic_resolution(&fs.extended, &fs.tilde_v, &orth)
}

/// Whether the affinization along `v1` is an affine variety.
pub fn affinization_is_affine(ctx: &SubgenericContext) -> Result<bool> {
    Ok(ctx.v1.kind.is_imaginary() || ctx.fs.nu(&ctx.v1.vector) >= -1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimensionVector {
        DimensionVector(v.to_vec())
    }

    fn affine_a2() -> Quiver {
        Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn only_simple_real_roots_at_zero_parameter() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        let x = dv(&[1, 1]);
        let orth = orthogonal_roots_zero(&q, &x).unwrap();
        assert!(!in_sigma(&q, &orth, &x).unwrap());
        assert!(in_sigma(&q, &orth, &dv(&[1, 0])).unwrap());
    }

    #[test]
    fn null_root_multiples() {
        let q = affine_a2();
        let orth = orthogonal_roots_zero(&q, &dv(&[2, 2, 2])).unwrap();
        assert!(in_sigma(&q, &orth, &dv(&[1, 1, 1])).unwrap());
        assert!(!in_sigma(&q, &orth, &dv(&[2, 2, 2])).unwrap());
        assert!(in_sigma(&q, &orth, &dv(&[1, 0, 0])).unwrap());
        assert!(!in_sigma(&q, &orth, &dv(&[2, 1, 1])).unwrap());
    }

    #[test]
    fn negative_vector_rejected() {
        let q = affine_a2();
        let orth = BTreeSet::new();
        assert!(in_sigma(&q, &orth, &dv(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn canonical_decomposition_of_two_deltas() {
        let q = affine_a2();
        let x = dv(&[2, 2, 2]);
        let orth = orthogonal_roots_zero(&q, &x).unwrap();
        let cd = canonical_decomposition(&q, &x, &orth).unwrap();
        assert_eq!(cd, vec![(dv(&[1, 1, 1]), 2)]);
        assert!(admits_symplectic_resolution(&q, &x, &orth).unwrap());
        // The single-part criterion alone rejects it: gcd 2 and p(delta) = 1.
        assert!(!simple_part_resolvable(&q, &x).unwrap());
    }

    #[test]
    fn framed_affine_a2_decomposition() {
        let q = affine_a2();
        let fs = FramedSetting::extend(&q, &dv(&[2, 2, 2]), &dv(&[1, 0, 0])).unwrap();
        let orth = orthogonal_roots_zero(&fs.extended, &fs.tilde_v).unwrap();
        let cd = canonical_decomposition(&fs.extended, &fs.tilde_v, &orth).unwrap();
        assert_eq!(cd, vec![(dv(&[0, 0, 0, 1]), 1), (dv(&[1, 1, 1, 0]), 2)]);
        assert!(framed_admits_symplectic_resolution(&fs).unwrap());
    }

    #[test]
    fn a1_ray_closed_forms() {
        let q = Quiver::from_edges(1, &[]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1]), &dv(&[2])).unwrap();
        let ctx = SubgenericContext::new(&fs, &dv(&[1])).unwrap();
        assert!(sigma_multiple(&ctx, 1).unwrap());
        assert!(!sigma_multiple(&ctx, 2).unwrap());
        assert!(sigma_complement(&ctx, 0).unwrap());
        assert!(sigma_complement(&ctx, 1).unwrap());
        assert!(sigma_multiple(&ctx, 0).is_err());
        assert!(affinization_is_affine(&ctx).unwrap());
    }

    #[test]
    fn isotropic_ray_picks_largest_complement() {
        let q = affine_a2();
        let fs = FramedSetting::extend(&q, &dv(&[2, 2, 2]), &dv(&[1, 0, 0])).unwrap();
        let ctx = SubgenericContext::new(&fs, &dv(&[1, 1, 1])).unwrap();
        assert_eq!(ctx.max_root_complement(), Some(2));
        assert!(!sigma_complement(&ctx, 0).unwrap());
        assert!(!sigma_complement(&ctx, 1).unwrap());
        assert!(sigma_complement(&ctx, 2).unwrap());
        let orth = ctx.orthogonal_roots();
        for n in 0..=2 {
            assert_eq!(
                in_sigma(&fs.extended, &orth, &ctx.complement(n)).unwrap(),
                sigma_complement(&ctx, n).unwrap()
            );
        }
    }

    #[test]
    fn context_rejects_bad_rays() {
        let q = affine_a2();
        let fs = FramedSetting::extend(&q, &dv(&[2, 2, 2]), &dv(&[1, 0, 0])).unwrap();
        assert!(SubgenericContext::new(&fs, &dv(&[2, 2, 2])).is_err());
        assert!(SubgenericContext::new(&fs, &dv(&[3, 1, 1])).is_err());
    }
}
