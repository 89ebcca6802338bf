//! Brute-force stratification of the affinization on a subgeneric ray.
//!
//! Independent of the classification of codimension-2 roots: strata are read off from
//! representation types whose parts pass the exhaustive simplicity search.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quiver::DimensionVector;
use crate::roots::{root_kind, RootKind};
use crate::sigma::{SigmaOracle, SubgenericContext};

/// Parts with multiplicities; the first part carries the framing coordinate.
///
/// Equal dimension vectors may appear in several entries: they stand for pairwise
/// non-isomorphic simple summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepresentationType {
    pub parts: Vec<(DimensionVector, u32)>,
    pub dimension: i64,
}

/// All representation types of the affinization, largest stratum first.
pub fn enumerate_representation_types(ctx: &SubgenericContext) -> Result<Vec<RepresentationType>> {
    let q = &ctx.fs.extended;
    let orth = ctx.orthogonal_roots();
    let mut oracle = SigmaOracle::new(q, &orth);
    let v1 = ctx.v1_extended();
    let top = ctx.max_multiple();

    // Multiples of v1 that are dimension vectors of simples, with p and realness.
    let mut multiples = Vec::new();
    for m in 1..=top {
        let x = m * &v1;
        if oracle.in_sigma(&x)? {
            let real = root_kind(q, &x) == Some(RootKind::Real);
            multiples.push((m, q.p(&x), real));
        }
    }

    let mut out = Vec::new();
    for n in 0..=top {
        let head = ctx.complement(n);
        if !oracle.in_sigma(&head)? {
            continue;
        }
        let p_head = q.p(&head);
        let mut entries = Vec::new();
        split_ray(n, &multiples, usize::MAX, u32::MAX, &mut entries, &mut |chosen| {
            let mut parts = vec![(head.clone(), 1)];
            let mut p_sum = p_head;
            for &(k, c) in chosen {
                let (m, p, _) = multiples[k];
                parts.push((m * &v1, c));
                p_sum += p;
            }
            out.push(RepresentationType { parts, dimension: 2 * p_sum });
        });
    }
    out.sort_by(|a, b| b.dimension.cmp(&a.dimension).then_with(|| a.parts.cmp(&b.parts)));
    Ok(out)
}

/// Chosen entries as (multiple index, multiplicity).
type Entries = [(usize, u32)];

/// Writes `n` as a multiset of entries (multiple index, multiplicity), entries listed in
/// non-increasing order; a real multiple may occur in one entry only.
fn split_ray(
    n: i64,
    multiples: &[(i64, i64, bool)],
    max_k: usize,
    max_c: u32,
    chosen: &mut Vec<(usize, u32)>,
    emit: &mut dyn FnMut(&Entries),
) {
    if n == 0 {
        emit(chosen);
        return;
    }
    for k in (0..multiples.len().min(max_k.saturating_add(1))).rev() {
        let (m, _, real) = multiples[k];
        if real && chosen.iter().any(|&(j, _)| j == k) {
            continue;
        }
        let c_cap = if k == max_k { max_c } else { u32::MAX };
        let mut c = 1u32;
        while c <= c_cap && m * c as i64 <= n {
            chosen.push((k, c));
            split_ray(n - m * c as i64, multiples, k, c, chosen, emit);
            chosen.pop();
            c += 1;
        }
    }
}

/// Whether some stratum has codimension exactly 2.
pub fn has_codim2_leaf_bruteforce(ctx: &SubgenericContext) -> Result<bool> {
    let types = enumerate_representation_types(ctx)?;
    let Some(top) = types.first().map(|t| t.dimension) else {
        return Ok(false);
    };
    Ok(types.iter().any(|t| t.dimension == top - 2))
}
