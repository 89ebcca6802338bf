//! Quivers, dimension vectors, the Tits form and framed settings.

use std::fmt;
use std::ops::{Add, Deref, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{NwgError, Result};

/// Integer vector indexed by the vertices of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(pub Vec<i64>);

impl DimensionVector {
    pub fn zero(n: usize) -> Self {
        DimensionVector(vec![0; n])
    }

    /// The coordinate vector of vertex `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimensionVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Greatest common divisor of the entries (0 for the zero vector).
    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0, |g, &x| gcd(g, x.abs()))
    }

    /// Exact division of every entry, `None` when some entry is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if k == 0 || self.0.iter().any(|x| x % k != 0) {
            return None;
        }
        Some(DimensionVector(self.0.iter().map(|x| x / k).collect()))
    }

    /// Appends one coordinate.
    pub fn with_last(&self, x: i64) -> Self {
        let mut v = self.0.clone();
        v.push(x);
        DimensionVector(v)
    }

    /// Drops the last coordinate.
    pub fn without_last(&self) -> Self {
        DimensionVector(self.0[..self.len() - 1].to_vec())
    }

    /// Keeps the listed coordinates, in that order.
    pub fn restrict(&self, kept: &[usize]) -> Self {
        DimensionVector(kept.iter().map(|&i| self.0[i]).collect())
    }

    /// Inverse of [`restrict`](Self::restrict): scatters into a zero vector of length `n`.
    pub fn lift(&self, kept: &[usize], n: usize) -> Self {
        let mut v = vec![0; n];
        for (k, &i) in kept.iter().enumerate() {
            v[i] = self.0[k];
        }
        DimensionVector(v)
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl From<Vec<i64>> for DimensionVector {
    fn from(v: Vec<i64>) -> Self {
        DimensionVector(v)
    }
}

impl Deref for DimensionVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Index<usize> for DimensionVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &DimensionVector {
    type Output = DimensionVector;
    fn add(self, o: &DimensionVector) -> DimensionVector {
        assert_eq!(self.len(), o.len(), "dimension vector length mismatch");
        DimensionVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimensionVector {
    type Output = DimensionVector;
    fn sub(self, o: &DimensionVector) -> DimensionVector {
        assert_eq!(self.len(), o.len(), "dimension vector length mismatch");
        DimensionVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&DimensionVector> for i64 {
    type Output = DimensionVector;
    fn mul(self, v: &DimensionVector) -> DimensionVector {
        DimensionVector(v.0.iter().map(|x| self * x).collect())
    }
}

impl Neg for &DimensionVector {
    type Output = DimensionVector;
    fn neg(self) -> DimensionVector {
        DimensionVector(self.0.iter().map(|x| -x).collect())
    }
}

/// Finite quiver up to orientation: loop counts and a symmetric edge-multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    loops: Vec<u32>,
    edges: Vec<Vec<u32>>,
}

impl Quiver {
    /// Builds a quiver. The edge matrix must be square, symmetric, with zero diagonal.
    pub fn new(loops: Vec<u32>, edges: Vec<Vec<u32>>) -> Result<Self> {
        let n = loops.len();
        if edges.len() != n || edges.iter().any(|r| r.len() != n) {
            return Err(NwgError::Input(format!(
                "edge matrix must be {n}x{n} to match {n} vertices"
            )));
        }
        for i in 0..n {
            if edges[i][i] != 0 {
                return Err(NwgError::Input(format!(
                    "edge matrix diagonal at vertex {i} must be zero, record loops separately"
                )));
            }
            for j in 0..i {
                if edges[i][j] != edges[j][i] {
                    return Err(NwgError::Input(format!(
                        "edge matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Quiver { loops, edges })
    }

    /// Loop-free quiver from an undirected edge list (repeats add up).
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = vec![vec![0u32; n]; n];
        let mut loops = vec![0u32; n];
        for &(a, b) in edge_list {
            if a >= n || b >= n {
                return Err(NwgError::Input(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                loops[a] += 1;
            } else {
                edges[a][b] += 1;
                edges[b][a] += 1;
            }
        }
        Quiver::new(loops, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.loops.len()
    }

    pub fn loops(&self, i: usize) -> u32 {
        self.loops[i]
    }

    pub fn edges(&self, i: usize, j: usize) -> u32 {
        self.edges[i][j]
    }

    pub fn is_loop_free(&self, i: usize) -> bool {
        self.loops[i] == 0
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&l| l > 0)
    }

    /// Symmetric Tits form, unchecked lengths.
    pub(crate) fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.vertex_count();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            s += (2 - 2 * self.loops[i] as i64) * a[i] * b[i];
            for j in 0..n {
                if j != i && self.edges[i][j] != 0 {
                    s -= self.edges[i][j] as i64 * a[i] * b[j];
                }
            }
        }
        s
    }

    /// Pairing of `a` with the simple root at `i`.
    pub(crate) fn form_simple(&self, a: &[i64], i: usize) -> i64 {
        let mut s = (2 - 2 * self.loops[i] as i64) * a[i];
        for j in 0..self.vertex_count() {
            if j != i {
                s -= self.edges[i][j] as i64 * a[j];
            }
        }
        s
    }

    /// Symmetric Tits form `(a, b)`.
    pub fn tits_form(&self, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.form(a, b))
    }

    /// `p(a) = 1 - (a, a)/2`.
    pub fn p_value(&self, a: &DimensionVector) -> Result<i64> {
        self.check_len(a)?;
        Ok(self.p(a))
    }

    pub(crate) fn p(&self, a: &[i64]) -> i64 {
        1 - self.form(a, a) / 2
    }

    pub(crate) fn check_len(&self, a: &DimensionVector) -> Result<()> {
        if a.len() != self.vertex_count() {
            return Err(NwgError::Input(format!(
                "dimension vector {a} has length {}, quiver has {} vertices",
                a.len(),
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Whether the support of `a` is connected in the underlying graph (false for zero).
    pub fn is_connected_support(&self, a: &[i64]) -> bool {
        let supp: Vec<usize> = (0..a.len()).filter(|&i| a[i] != 0).collect();
        self.is_connected_subset(&supp)
    }

    pub(crate) fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in set {
                if self.edges[i][j] > 0 && !seen.contains(&j) {
                    seen.push(j);
                    stack.push(j);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Connected components of the listed vertex subset, each sorted, ordered by first vertex.
    pub fn components_of(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut left: Vec<usize> = set.to_vec();
        left.sort_unstable();
        let mut out = Vec::new();
        while let Some(&start) = left.first() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &j in &left {
                    if self.edges[i][j] > 0 && !comp.contains(&j) {
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            left.retain(|x| !comp.contains(x));
            out.push(comp);
        }
        out
    }

    /// Full subquiver on the listed vertices, in that order.
    pub fn subquiver(&self, kept: &[usize]) -> Quiver {
        Quiver {
            loops: kept.iter().map(|&i| self.loops[i]).collect(),
            edges: kept
                .iter()
                .map(|&i| kept.iter().map(|&j| self.edges[i][j]).collect())
                .collect(),
        }
    }
}

/// Free function form of [`Quiver::tits_form`].
pub fn tits_form(q: &Quiver, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
    q.tits_form(a, b)
}

/// Free function form of [`Quiver::p_value`].
pub fn p_value(q: &Quiver, a: &DimensionVector) -> Result<i64> {
    q.p_value(a)
}

/// A quiver with dimension vector `v` and framing `w`, together with its one-point extension.
///
/// The extended quiver appends the framing vertex as the last index, joined to vertex `i`
/// by `w[i]` edges. `tilde_v` is `v` with a trailing 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedSetting {
    pub quiver: Quiver,
    pub v: DimensionVector,
    pub w: DimensionVector,
    pub extended: Quiver,
    pub tilde_v: DimensionVector,
}

impl FramedSetting {
    /// Builds the extended quiver. `v` and `w` must be non-negative of the right length.
    pub fn extend(quiver: &Quiver, v: &DimensionVector, w: &DimensionVector) -> Result<Self> {
        quiver.check_len(v)?;
        quiver.check_len(w)?;
        if !v.is_nonnegative() {
            return Err(NwgError::Input(format!("dimension vector {v} has a negative entry")));
        }
        if !w.is_nonnegative() {
            return Err(NwgError::Input(format!("framing {w} has a negative entry")));
        }
        let n = quiver.vertex_count();
        let mut loops = quiver.loops.clone();
        loops.push(0);
        let mut edges: Vec<Vec<u32>> = quiver
            .edges
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = r.clone();
                r.push(w[i] as u32);
                r
            })
            .collect();
        edges.push((0..=n).map(|i| if i < n { w[i] as u32 } else { 0 }).collect());
        Ok(FramedSetting {
            quiver: quiver.clone(),
            v: v.clone(),
            w: w.clone(),
            extended: Quiver { loops, edges },
            tilde_v: v.with_last(1),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Index of the framing vertex in the extended quiver.
    pub fn infinity(&self) -> usize {
        self.vertex_count()
    }

    /// Embeds a vector on the original vertices into the extended quiver (zero at infinity).
    pub fn embed(&self, x: &DimensionVector) -> DimensionVector {
        x.with_last(0)
    }

    /// `<nu, x> = -(tilde_v, x)` on the extended quiver, for `x` on the original vertices.
    pub fn nu_pairing(&self, x: &DimensionVector) -> Result<i64> {
        self.quiver.check_len(x)?;
        Ok(self.nu(x))
    }

    pub(crate) fn nu(&self, x: &[i64]) -> i64 {
        let n = self.vertex_count();
        let mut s = 0;
        for i in 0..n {
            if x[i] != 0 {
                s -= x[i] * self.extended.form_simple(&self.tilde_v, i);
            }
        }
        s
    }

    /// `nu` is dominant: `<nu, alpha_i> >= 0` at every original vertex.
    pub fn is_dominant(&self) -> bool {
        (0..self.vertex_count()).all(|i| self.extended.form_simple(&self.tilde_v, i) <= 0)
    }

    /// Drops the vertices with `v_i = 0` with their edges and framing.
    ///
    /// Returns the smaller setting and the kept original indices.
    pub fn normalized(&self) -> (FramedSetting, Vec<usize>) {
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&i| self.v[i] != 0).collect();
        let q = self.quiver.subquiver(&kept);
        let fs = FramedSetting::extend(&q, &self.v.restrict(&kept), &self.w.restrict(&kept))
            .expect("restriction of a valid setting is valid");
        (fs, kept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn tits_form_on_a2() {
        let q = a2();
        let a = DimensionVector(vec![1, 0]);
        let b = DimensionVector(vec![0, 1]);
        assert_eq!(q.tits_form(&a, &b).unwrap(), -1);
        assert_eq!(q.tits_form(&a, &a).unwrap(), 2);
        assert_eq!(q.p_value(&(&a + &b)).unwrap(), 0);
    }

    #[test]
    fn jordan_quiver_is_isotropic() {
        let q = Quiver::new(vec![1], vec![vec![0]]).unwrap();
        let a = DimensionVector(vec![3]);
        assert_eq!(q.tits_form(&a, &a).unwrap(), 0);
        assert_eq!(q.p_value(&a).unwrap(), 1);
    }

    #[test]
    fn length_mismatch_is_input_error() {
        let q = a2();
        let err = q.tits_form(&DimensionVector(vec![1]), &DimensionVector(vec![1, 0]));
        assert!(matches!(err, Err(NwgError::Input(_))));
    }

    #[test]
    fn asymmetric_edges_rejected() {
        assert!(Quiver::new(vec![0, 0], vec![vec![0, 1], vec![0, 0]]).is_err());
    }

    #[test]
    fn extension_of_a1_with_two_framings() {
        let q = Quiver::from_edges(1, &[]).unwrap();
        let fs = FramedSetting::extend(&q, &vec![1].into(), &vec![2].into()).unwrap();
        assert_eq!(fs.extended.edges(0, 1), 2);
        assert_eq!(fs.tilde_v, DimensionVector(vec![1, 1]));
        assert_eq!(fs.nu_pairing(&vec![1].into()).unwrap(), 0);
        assert!(fs.is_dominant());
    }

    #[test]
    fn nu_pairing_matches_definition() {
        let q = a2();
        let fs = FramedSetting::extend(&q, &vec![1, 1].into(), &vec![1, 0].into()).unwrap();
        let x: DimensionVector = vec![1, 0].into();
        let direct = -fs.extended.tits_form(&fs.tilde_v, &fs.embed(&x)).unwrap();
        assert_eq!(fs.nu_pairing(&x).unwrap(), direct);
    }

    #[test]
    fn normalization_drops_zero_vertices() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fs = FramedSetting::extend(&q, &vec![1, 0, 2].into(), &vec![1, 1, 0].into()).unwrap();
        let (n, kept) = fs.normalized();
        assert_eq!(kept, vec![0, 2]);
        assert_eq!(n.quiver.edges(0, 1), 0);
        assert_eq!(n.w, DimensionVector(vec![1, 0]));
    }

    #[test]
    fn negative_dimension_rejected() {
        let q = a2();
        assert!(FramedSetting::extend(&q, &vec![-1, 0].into(), &vec![0, 0].into()).is_err());
    }
}
