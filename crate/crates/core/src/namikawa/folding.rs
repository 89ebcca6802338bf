//! Recovering an irreducible finite root system from one component of codimension-2 roots.
//!
//! The component vectors are the coroots of the folded system once short roots are scaled
//! to norm 2: a long root equals its weight (2 or 3) times its codimension-2 root. The
//! vectors therefore form a root system themselves, the dual one, whose additions are the
//! plain relations `x + y = z`. Weights are read off from that dual system, then the folded
//! system is rebuilt from the weighted additions alone as a cross-check.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::cartan::{classify_cartan, CartanType};
use crate::error::{NwgError, Result};
use crate::quiver::DimensionVector;

/// One irreducible factor of the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylFactor {
    pub cartan_type: CartanType,
    /// Codimension-2 roots of the component, lexicographically sorted.
    pub members: Vec<DimensionVector>,
    /// Folding weight per member: 2 or 3 on long roots of multiply laced types, else 1.
    pub m_assignment: Vec<u8>,
    /// `(i, j, k)` with `i < j` and `m_i x_i + m_j x_j = m_k x_k`, indices into `members`.
    pub folded_additions: Vec<(usize, usize, usize)>,
    /// Members that are simple roots, in the standard order of `cartan_type`.
    pub simple_roots: Vec<usize>,
}

fn position(members: &[DimensionVector]) -> HashMap<&DimensionVector, usize> {
    members.iter().enumerate().map(|(k, r)| (r, k)).collect()
}

/// Members that are not the sum of two members.
fn sum_free(members: &[DimensionVector]) -> Vec<usize> {
    let set: BTreeSet<&DimensionVector> = members.iter().collect();
    (0..members.len())
        .filter(|&k| {
            !members.iter().any(|x| {
                let rest = &members[k] - x;
                rest.is_nonnegative() && set.contains(&rest)
            })
        })
        .collect()
}

/// Folding weights from the dual root system spanned by the members.
pub fn assign_multiplicities(members: &[DimensionVector]) -> Result<Vec<u8>> {
    let set: BTreeSet<&DimensionVector> = members.iter().collect();
    let simples = sum_free(members);
    let r = simples.len();
    // Cartan matrix of the folded system: transpose of the string lengths among members.
    let mut folded = vec![vec![0i64; r]; r];
    for a in 0..r {
        for b in 0..r {
            if a == b {
                folded[a][b] = 2;
                continue;
            }
            let (sa, sb) = (&members[simples[a]], &members[simples[b]]);
            let mut q = 0;
            let mut cur = sb.clone();
            loop {
                cur = &cur + sa;
                if !set.contains(&cur) {
                    break;
                }
                q += 1;
            }
            folded[b][a] = -q;
        }
    }
    let (t, perm) = classify_cartan(&folded)?;
    if t.positive_root_count() != members.len() {
        return Err(NwgError::Contradiction(format!(
            "component of {} roots recognized as {t} with {} positive roots",
            members.len(),
            t.positive_root_count()
        )));
    }
    let index = position(members);
    let std_weight: Vec<i64> = (0..r)
        .map(|k| {
            let mut e = vec![0; r];
            e[k] = 1;
            t.multiplicity_of(&e) as i64
        })
        .collect();
    let mut m = vec![0u8; members.len()];
    let n = members[0].len();
    for coords in t.positive_roots() {
        let w = t.multiplicity_of(&coords);
        let mut scaled = DimensionVector::zero(n);
        for k in 0..r {
            scaled = &scaled + &((coords[k] * std_weight[k]) * &members[simples[perm[k]]]);
        }
        let hit = scaled
            .div_exact(w as i64)
            .and_then(|x| index.get(&x).copied())
            .ok_or_else(|| {
                NwgError::Contradiction(format!("no member realizes the {t} root {coords:?}"))
            })?;
        if m[hit] != 0 {
            return Err(NwgError::Contradiction(format!(
                "member {} realizes two roots of {t}",
                members[hit]
            )));
        }
        m[hit] = w;
    }
    Ok(m)
}

/// Weighted additions `m_i x_i + m_j x_j = m_k x_k`, `i < j`.
pub fn folded_additions(members: &[DimensionVector], m: &[u8]) -> Vec<(usize, usize, usize)> {
    let index = position(members);
    let mut out = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let sum = &(m[i] as i64 * &members[i]) + &(m[j] as i64 * &members[j]);
            for w in 1..=3u8 {
                if let Some(&k) = sum.div_exact(w as i64).as_ref().and_then(|x| index.get(x)) {
                    if m[k] == w {
                        out.push((i, j, k));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Cartan type from weighted additions: simples are never targets, and string lengths
/// come from chains of additions.
///
/// Returns the type, the simple members in standard order and the reconstructed matrix.
pub fn reconstruct_cartan(
    count: usize,
    additions: &[(usize, usize, usize)],
) -> Result<(CartanType, Vec<usize>, Vec<Vec<i64>>)> {
    let targets: BTreeSet<usize> = additions.iter().map(|a| a.2).collect();
    let simples: Vec<usize> = (0..count).filter(|k| !targets.contains(k)).collect();
    let lookup: HashMap<(usize, usize), usize> =
        additions.iter().map(|&(i, j, k)| ((i, j), k)).collect();
    let add = |x: usize, y: usize| lookup.get(&(x.min(y), x.max(y))).copied();
    let r = simples.len();
    let mut cartan = vec![vec![0i64; r]; r];
    for a in 0..r {
        for b in 0..r {
            if a == b {
                cartan[a][b] = 2;
                continue;
            }
            let mut q = 0;
            let mut cur = simples[b];
            while let Some(next) = add(cur, simples[a]) {
                cur = next;
                q += 1;
            }
            cartan[a][b] = -q;
        }
    }
    let (t, perm) = classify_cartan(&cartan)?;
    if t.positive_root_count() != count {
        return Err(NwgError::Contradiction(format!(
            "reconstructed {t} has {} positive roots, component has {count}",
            t.positive_root_count()
        )));
    }
    let ordered = perm.iter().map(|&p| simples[p]).collect();
    Ok((t, ordered, cartan))
}

/// Builds a factor from the codimension-2 roots of one relation component.
pub fn build_factor(mut members: Vec<DimensionVector>) -> Result<WeylFactor> {
    members.sort();
    let m = assign_multiplicities(&members)?;
    let additions = folded_additions(&members, &m);
    let (cartan_type, simple_roots, _) = reconstruct_cartan(members.len(), &additions)?;
    let factor = WeylFactor {
        cartan_type,
        members,
        m_assignment: m,
        folded_additions: additions,
        simple_roots,
    };
    round_trip(&factor)?;
    Ok(factor)
}

/// Regenerates the positive roots of the factor type, transports them along the simple
/// roots and checks members, weights and additions all come back unchanged.
pub fn round_trip(f: &WeylFactor) -> Result<()> {
    let t = f.cartan_type;
    let roots = t.positive_roots();
    let r = t.rank;
    if f.simple_roots.len() != r || roots.len() != f.members.len() {
        return Err(NwgError::Contradiction(format!(
            "{t} factor has {} simples and {} members",
            f.simple_roots.len(),
            f.members.len()
        )));
    }
    let index = position(&f.members);
    let n = f.members[0].len();
    let mut image = Vec::with_capacity(roots.len());
    let mut seen = vec![false; f.members.len()];
    for coords in &roots {
        let w = t.multiplicity_of(coords);
        let mut scaled = DimensionVector::zero(n);
        for k in 0..r {
            let s = f.simple_roots[k];
            scaled = &scaled + &((coords[k] * f.m_assignment[s] as i64) * &f.members[s]);
        }
        let hit = scaled
            .div_exact(w as i64)
            .and_then(|x| index.get(&x).copied())
            .ok_or_else(|| {
                NwgError::Contradiction(format!("{t} root {coords:?} has no member image"))
            })?;
        if seen[hit] || f.m_assignment[hit] != w {
            return Err(NwgError::Contradiction(format!(
                "{t} root {coords:?} maps to {} inconsistently",
                f.members[hit]
            )));
        }
        seen[hit] = true;
        image.push(hit);
    }
    let coord_index: HashMap<&Vec<i64>, usize> =
        roots.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let mut expected = Vec::new();
    for x in 0..roots.len() {
        for y in x + 1..roots.len() {
            let sum: Vec<i64> = roots[x].iter().zip(&roots[y]).map(|(a, b)| a + b).collect();
            if let Some(&z) = coord_index.get(&sum) {
                let (i, j) = (image[x].min(image[y]), image[x].max(image[y]));
                expected.push((i, j, image[z]));
            }
        }
    }
    expected.sort_unstable();
    if expected != f.folded_additions {
        return Err(NwgError::Contradiction(format!(
            "{t} additions do not round-trip: expected {expected:?}, found {:?}",
            f.folded_additions
        )));
    }
    Ok(())
}
