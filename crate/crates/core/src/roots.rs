//! Root test by reflection descent, root enumeration and dominance reduction.

use serde::{Deserialize, Serialize};

use crate::error::{NwgError, Result};
use crate::quiver::{DimensionVector, FramedSetting, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    Real,
    IsotropicImaginary,
    NonIsotropicImaginary,
}

impl RootKind {
    pub fn is_imaginary(self) -> bool {
        self != RootKind::Real
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassifiedRoot {
    pub vector: DimensionVector,
    pub kind: RootKind,
}

/// Reflection indices applied, in order, during dominance reduction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub word: Vec<usize>,
}

/// Simple reflection `s_i(a) = a - (a, alpha_i) alpha_i` at a loop-free vertex.
pub fn reflect(q: &Quiver, a: &DimensionVector, i: usize) -> Result<DimensionVector> {
    q.check_len(a)?;
    if i >= q.vertex_count() {
        return Err(NwgError::Input(format!("vertex {i} out of range")));
    }
    if !q.is_loop_free(i) {
        return Err(NwgError::Input(format!("no reflection at vertex {i}, it carries loops")));
    }
    let mut out = a.clone();
    out.0[i] -= q.form_simple(a, i);
    Ok(out)
}

/// Root test with kind, `None` when `a` is not a root.
pub fn is_root(q: &Quiver, a: &DimensionVector) -> Result<Option<RootKind>> {
    q.check_len(a)?;
    Ok(root_kind(q, a))
}

pub(crate) fn root_kind(q: &Quiver, a: &[i64]) -> Option<RootKind> {
    let mut a: Vec<i64> = if a.iter().all(|&x| x <= 0) {
        a.iter().map(|x| -x).collect()
    } else {
        a.to_vec()
    };
    if a.iter().all(|&x| x == 0) || a.iter().any(|&x| x < 0) {
        return None;
    }
    let n = q.vertex_count();
    'descent: loop {
        for i in 0..n {
            if !q.is_loop_free(i) {
                continue;
            }
            let c = q.form_simple(&a, i);
            if c > 0 {
                let simple = a[i] == 1 && (0..n).all(|j| j == i || a[j] == 0);
                if simple {
                    return Some(RootKind::Real);
                }
                a[i] -= c;
                if a[i] < 0 {
                    return None;
                }
                continue 'descent;
            }
        }
        break;
    }
    if !q.is_connected_support(&a) {
        return None;
    }
    Some(match q.form(&a, &a) {
        0 => RootKind::IsotropicImaginary,
        x if x < 0 => RootKind::NonIsotropicImaginary,
        // Positive norm in the fundamental region cannot happen.
        _ => return None,
    })
}

/// All positive roots `<= bound`, lexicographic order on vectors.
pub fn enumerate_positive_roots_leq(
    q: &Quiver,
    bound: &DimensionVector,
) -> Result<Vec<ClassifiedRoot>> {
    q.check_len(bound)?;
    if !bound.is_nonnegative() {
        return Err(NwgError::Input(format!("bound {bound} has a negative entry")));
    }
    let mut out = Vec::new();
    for x in BoxIter::new(bound) {
        if let Some(kind) = root_kind(q, &x) {
            out.push(ClassifiedRoot { vector: x, kind });
        }
    }
    Ok(out)
}

/// Lexicographic walk over the nonzero vectors `0 <= x <= bound`.
pub struct BoxIter {
    bound: Vec<i64>,
    cur: Vec<i64>,
    done: bool,
}

impl BoxIter {
    pub fn new(bound: &[i64]) -> Self {
        BoxIter {
            bound: bound.to_vec(),
            cur: vec![0; bound.len()],
            done: bound.iter().all(|&b| b == 0),
        }
    }
}

impl Iterator for BoxIter {
    type Item = DimensionVector;
    fn next(&mut self) -> Option<DimensionVector> {
        if self.done {
            return None;
        }
        let mut k = self.bound.len();
        loop {
            if k == 0 {
                self.done = true;
                return None;
            }
            k -= 1;
            if self.cur[k] < self.bound[k] {
                self.cur[k] += 1;
                for x in &mut self.cur[k + 1..] {
                    *x = 0;
                }
                return Some(DimensionVector(self.cur.clone()));
            }
        }
    }
}

/// Reflects `tilde_v` at original vertices until `nu` is dominant.
///
/// Picks the smallest loop-free vertex with positive pairing at each step; the framing is
/// unchanged. Fails with an empty-variety error when `tilde_v` is not a root.
pub fn dominance_reduce(fs: &FramedSetting) -> Result<(FramedSetting, ReductionTrace)> {
    if root_kind(&fs.extended, &fs.tilde_v).is_none() {
        return Err(NwgError::EmptyVariety(format!(
            "extended vector {} is not a root of the extended quiver",
            fs.tilde_v
        )));
    }
    let q = &fs.extended;
    let mut tv = fs.tilde_v.clone();
    let mut trace = ReductionTrace::default();
    'outer: loop {
        for i in 0..fs.vertex_count() {
            if !q.is_loop_free(i) {
                continue;
            }
            let c = q.form_simple(&tv, i);
            if c > 0 {
                tv.0[i] -= c;
                trace.word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    if !tv.is_nonnegative() {
        return Err(NwgError::Contradiction(format!(
            "dominance reduction of a root produced the non-positive vector {tv}"
        )));
    }
    let reduced = FramedSetting::extend(&fs.quiver, &tv.without_last(), &fs.w)?;
    Ok((reduced, trace))
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
    fn a2_roots() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(is_root(&q, &dv(&[1, 1])).unwrap(), Some(RootKind::Real));
        assert_eq!(is_root(&q, &dv(&[1, 2])).unwrap(), None);
        assert_eq!(is_root(&q, &dv(&[-1, -1])).unwrap(), Some(RootKind::Real));
        assert_eq!(is_root(&q, &dv(&[1, -1])).unwrap(), None);
        assert_eq!(is_root(&q, &dv(&[0, 0])).unwrap(), None);
    }

    #[test]
    fn affine_a2_imaginary() {
        let q = affine_a2();
        assert_eq!(is_root(&q, &dv(&[1, 1, 1])).unwrap(), Some(RootKind::IsotropicImaginary));
        assert_eq!(is_root(&q, &dv(&[2, 2, 2])).unwrap(), Some(RootKind::IsotropicImaginary));
        assert_eq!(is_root(&q, &dv(&[2, 1, 1])).unwrap(), Some(RootKind::Real));
        assert_eq!(is_root(&q, &dv(&[3, 1, 1])).unwrap(), None);
    }

    #[test]
    fn loops_give_imaginary_simples() {
        let jordan = Quiver::new(vec![1], vec![vec![0]]).unwrap();
        assert_eq!(is_root(&jordan, &dv(&[1])).unwrap(), Some(RootKind::IsotropicImaginary));
        assert_eq!(is_root(&jordan, &dv(&[5])).unwrap(), Some(RootKind::IsotropicImaginary));
        let two = Quiver::new(vec![2], vec![vec![0]]).unwrap();
        assert_eq!(is_root(&two, &dv(&[2])).unwrap(), Some(RootKind::NonIsotropicImaginary));
    }

    #[test]
    fn disconnected_support_is_not_root() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_root(&q, &dv(&[1, 0, 1])).unwrap(), None);
    }

    #[test]
    fn reflection_is_involution() {
        let q = affine_a2();
        let a = dv(&[2, 1, 0]);
        let b = reflect(&q, &a, 1).unwrap();
        assert_eq!(reflect(&q, &b, 1).unwrap(), a);
        let jordan = Quiver::new(vec![1], vec![vec![0]]).unwrap();
        assert!(reflect(&jordan, &dv(&[1]), 0).is_err());
    }

    #[test]
    fn enumeration_of_a3() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let roots = enumerate_positive_roots_leq(&q, &dv(&[1, 1, 1])).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(roots.iter().all(|r| r.kind == RootKind::Real));
        assert!(enumerate_positive_roots_leq(&q, &dv(&[0, 0, 0])).unwrap().is_empty());
    }

    #[test]
    fn dominance_reduction_of_a2() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1, 1]), &dv(&[0, 1])).unwrap();
        let (r, trace) = dominance_reduce(&fs).unwrap();
        assert!(r.is_dominant());
        assert_eq!(r.v, dv(&[0, 0]));
        assert_eq!(trace.word, vec![0, 1]);
    }

    #[test]
    fn dominance_reduction_rejects_non_roots() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[2, 1]), &dv(&[0, 1])).unwrap();
        assert!(matches!(dominance_reduce(&fs), Err(NwgError::EmptyVariety(_))));
    }

    #[test]
    fn dominant_input_is_untouched() {
        let q = Quiver::from_edges(1, &[]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1]), &dv(&[2])).unwrap();
        let (r, trace) = dominance_reduce(&fs).unwrap();
        assert_eq!(r, fs);
        assert!(trace.word.is_empty());
    }
}
