//! Closed-form answers for Dynkin and affine quivers, used as cross-checks.
//!
//! For a dominant setting the simple roots orthogonal to `nu` span the relevant finite
//! subsystem; its components give the factors directly. Affine quivers may contribute one
//! extra `A1` from the null root.

use super::cartan::{classify_cartan, CartanLetter, CartanType};
use super::folding::{folded_additions, WeylFactor};
use super::NamikawaGroup;
use crate::error::{NwgError, Result};
use crate::quiver::{DimensionVector, FramedSetting, Quiver};
use crate::roots::root_kind;

fn cartan_of(q: &Quiver, set: &[usize]) -> Vec<Vec<i64>> {
    set.iter()
        .map(|&i| {
            set.iter()
                .map(|&j| {
                    if i == j {
                        2 - 2 * q.loops(i) as i64
                    } else {
                        -(q.edges(i, j) as i64)
                    }
                })
                .collect()
        })
        .collect()
}

/// Finite type of a connected, loop-free vertex set, if any.
fn finite_type(q: &Quiver, set: &[usize]) -> Option<(CartanType, Vec<usize>)> {
    if set.iter().any(|&i| !q.is_loop_free(i)) {
        return None;
    }
    classify_cartan(&cartan_of(q, set)).ok()
}

/// Every connected component is of type A, D or E.
pub fn is_dynkin(q: &Quiver) -> bool {
    let all: Vec<usize> = (0..q.vertex_count()).collect();
    q.components_of(&all).iter().all(|c| {
        finite_type(q, c).is_some_and(|(t, _)| {
            matches!(t.letter, CartanLetter::A | CartanLetter::D | CartanLetter::E)
        })
    })
}

/// Primitive positive null vector of a connected quiver of affine type (the Jordan quiver
/// included), `None` for every other quiver.
pub fn affine_null_root(q: &Quiver) -> Option<DimensionVector> {
    let n = q.vertex_count();
    let all: Vec<usize> = (0..n).collect();
    if n == 0 || q.components_of(&all).len() != 1 {
        return None;
    }
    if n == 1 {
        return (q.loops(0) == 1).then(|| DimensionVector(vec![1]));
    }
    if q.has_loops() {
        return None;
    }
    let mut m: Vec<Vec<i128>> = cartan_of(q, &all)
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    // Integer row reduction to reduced echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, p);
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let (a, b) = (m[row][col], m[r][col]);
                for c in 0..n {
                    m[r][c] = a * m[r][c] - b * m[row][c];
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd128(g, x.abs()));
                if g > 1 {
                    for x in &mut m[r] {
                        *x /= g;
                    }
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    if pivots.len() != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.iter().any(|p| p.1 == *c))?;
    let scale = pivots.iter().fold(1i128, |l, &(r, c)| lcm128(l, m[r][c].abs()));
    let mut x = vec![0i128; n];
    x[free] = scale;
    for &(r, c) in &pivots {
        x[c] = -m[r][free] * scale / m[r][c];
    }
    if x.iter().all(|&t| t < 0) {
        x.iter_mut().for_each(|t| *t = -*t);
    }
    if !x.iter().all(|&t| t > 0) {
        return None;
    }
    let g = x.iter().fold(0i128, |g, &t| gcd128(g, t));
    Some(DimensionVector(x.iter().map(|&t| (t / g) as i64).collect()))
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

fn lcm128(a: i128, b: i128) -> i128 {
    a / gcd128(a, b) * b
}

/// Factor spanned by a connected Dynkin vertex set, members lifted to `n` coordinates.
fn subdiagram_factor(q: &Quiver, set: &[usize], kept: &[usize], n: usize) -> Result<WeylFactor> {
    let (t, perm) = finite_type(q, set).ok_or_else(|| {
        NwgError::Contradiction(format!("vertex set {set:?} is not of finite type"))
    })?;
    let width = q.vertex_count();
    let mut members: Vec<DimensionVector> = t
        .positive_roots()
        .iter()
        .map(|c| {
            let mut x = vec![0i64; width];
            for (k, &ck) in c.iter().enumerate() {
                x[set[perm[k]]] = ck;
            }
            DimensionVector(x).lift(kept, n)
        })
        .collect();
    members.sort();
    let simple_roots = (0..t.rank)
        .map(|k| {
            let e = DimensionVector::unit(width, set[perm[k]]).lift(kept, n);
            members.iter().position(|m| *m == e).unwrap()
        })
        .collect();
    let m = vec![1u8; members.len()];
    let folded = folded_additions(&members, &m);
    Ok(WeylFactor {
        cartan_type: t,
        members,
        m_assignment: m,
        folded_additions: folded,
        simple_roots,
    })
}

fn null_factor(delta: DimensionVector) -> WeylFactor {
    WeylFactor {
        cartan_type: CartanType { letter: CartanLetter::A, rank: 1 },
        members: vec![delta],
        m_assignment: vec![1],
        folded_additions: Vec::new(),
        simple_roots: vec![0],
    }
}

fn prepare(fs: &FramedSetting) -> Result<(FramedSetting, Vec<usize>)> {
    if !fs.is_dominant() {
        return Err(NwgError::Contract("fast paths need a dominant setting".into()));
    }
    if root_kind(&fs.extended, &fs.tilde_v).is_none() {
        return Err(NwgError::EmptyVariety(format!("{} is not a root", fs.tilde_v)));
    }
    Ok(fs.normalized())
}

/// Simple roots orthogonal to `nu`.
fn orthogonal_simples(fs: &FramedSetting) -> Vec<usize> {
    (0..fs.vertex_count())
        .filter(|&i| fs.extended.form_simple(&fs.tilde_v, i) == 0)
        .collect()
}

/// Group of a dominant setting on a Dynkin quiver (after dropping empty vertices).
pub fn dynkin_fast_path(fs: &FramedSetting) -> Result<NamikawaGroup> {
    if !is_dynkin(&fs.quiver) {
        return Err(NwgError::Contract("quiver is not of Dynkin type".into()));
    }
    let (small, kept) = prepare(fs)?;
    orthogonal_subdiagrams(fs, &small, &kept)
}

fn orthogonal_subdiagrams(
    fs: &FramedSetting,
    small: &FramedSetting,
    kept: &[usize],
) -> Result<NamikawaGroup> {
    let q = &small.quiver;
    let mut factors = Vec::new();
    for comp in q.components_of(&orthogonal_simples(small)) {
        factors.push(subdiagram_factor(q, &comp, kept, fs.vertex_count())?);
    }
    Ok(NamikawaGroup::from_factors(factors))
}

/// Group of a dominant setting on an affine quiver (after dropping empty vertices).
pub fn affine_fast_path(fs: &FramedSetting) -> Result<NamikawaGroup> {
    if affine_null_root(&fs.quiver).is_none() {
        return Err(NwgError::Contract("quiver is not of affine type".into()));
    }
    let (small, kept) = prepare(fs)?;
    let q = &small.quiver;
    // A proper support is a Dynkin subdiagram.
    let Some(delta) = affine_null_root(q) else {
        return orthogonal_subdiagrams(fs, &small, &kept);
    };
    let n = fs.vertex_count();
    let nu_delta = small.nu(&delta);
    let zero = orthogonal_simples(&small);
    let mut factors = Vec::new();
    if zero.len() < q.vertex_count() {
        for comp in q.components_of(&zero) {
            factors.push(subdiagram_factor(q, &comp, &kept, n)?);
        }
    }
    let extra = match nu_delta {
        1 => {
            let k = small.v[0] / delta[0];
            if small.v != k * &delta {
                return Err(NwgError::Contradiction(format!(
                    "pairing 1 with the null root forces v to be a multiple of {delta}"
                )));
            }
            k >= 2
        }
        2 => {
            let rest = &small.tilde_v - &small.embed(&delta);
            rest.is_nonnegative() && small.extended.is_connected_support(&rest)
        }
        _ => false,
    };
    if extra {
        factors.push(null_factor(delta.lift(&kept, n)));
    }
    Ok(NamikawaGroup::from_factors(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimensionVector {
        DimensionVector(v.to_vec())
    }

    #[test]
    fn null_roots() {
        let tri = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(affine_null_root(&tri), Some(dv(&[1, 1, 1])));
        let d4 = Quiver::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(affine_null_root(&d4), Some(dv(&[1, 1, 1, 1, 2])));
        let a3 = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(affine_null_root(&a3), None);
        let kron = Quiver::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(affine_null_root(&kron), Some(dv(&[1, 1])));
        let jordan = Quiver::new(vec![1], vec![vec![0]]).unwrap();
        assert_eq!(affine_null_root(&jordan), Some(dv(&[1])));
    }

    #[test]
    fn dynkin_detection() {
        assert!(is_dynkin(&Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap()));
        assert!(!is_dynkin(&Quiver::from_edges(2, &[(0, 1), (0, 1)]).unwrap()));
        assert!(!is_dynkin(&Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()));
    }

    #[test]
    fn a3_fundamental_weight_two() {
        // v = (1,1,1), w = (1,1,1) on A3 pairs to zero with the outer simple roots only.
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1, 1, 1]), &dv(&[1, 1, 1])).unwrap();
        assert!(fs.is_dominant());
        let g = dynkin_fast_path(&fs).unwrap();
        assert_eq!(g.label(), "A1 x A1");
    }

    #[test]
    fn affine_a2_cases() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for (n, label) in [(1, "A2"), (2, "A2 x A1"), (3, "A2 x A1")] {
            let fs = FramedSetting::extend(&q, &dv(&[n, n, n]), &dv(&[1, 0, 0])).unwrap();
            assert_eq!(affine_fast_path(&fs).unwrap().label(), label);
        }
        let fs = FramedSetting::extend(&q, &dv(&[1, 1, 1]), &dv(&[2, 0, 0])).unwrap();
        assert_eq!(affine_fast_path(&fs).unwrap().label(), "A2 x A1");
        let fs = FramedSetting::extend(&q, &dv(&[1, 1, 1]), &dv(&[3, 0, 0])).unwrap();
        assert_eq!(affine_fast_path(&fs).unwrap().label(), "A2");
    }
}
