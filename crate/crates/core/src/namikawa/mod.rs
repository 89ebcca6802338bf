//! Codimension-2 roots, their relations and the resulting Weyl group.

pub mod cartan;
pub mod fastpath;
pub mod folding;
pub mod relations;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{NwgError, Result};
use crate::quiver::{DimensionVector, FramedSetting};
use crate::roots::{dominance_reduce, enumerate_positive_roots_leq, root_kind, ReductionTrace, RootKind};

pub use cartan::{CartanLetter, CartanType};
pub use folding::{build_factor, WeylFactor};
pub use relations::{find_relations, validate_relation_types, RelationForm, RelationTriple};

/// Shapes of codimension-2 leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum LeafType {
    /// Real root, `<nu, v1> = 0`, `tilde_v - v1` a root.
    One,
    /// Isotropic root, `<nu, v1> = 1`, `tilde_v - n v1` a root for some `n >= 2`.
    Two,
    /// Isotropic root, `<nu, v1> = 2`, `tilde_v - v1` a root.
    Three,
    /// Non-isotropic root, `<nu, v1> = 2 - (v1, v1)`, `tilde_v - n v1` a root only for `n = 1`.
    Four,
    /// Non-isotropic root, `<nu, v1> = 1 - 2 (v1, v1)`, `tilde_v - 2 v1` a root and
    /// `tilde_v - n v1` not a root for `n >= 3`. The leaf is the stratum
    /// `(tilde_v - 2 v1) + 2 v1` next to the open one.
    Five,
}

impl LeafType {
    pub fn number(self) -> u8 {
        match self {
            LeafType::One => 1,
            LeafType::Two => 2,
            LeafType::Three => 3,
            LeafType::Four => 4,
            LeafType::Five => 5,
        }
    }

    /// Types whose roots never enter a relation and so always give an `A1` factor.
    pub fn is_isolated(self) -> bool {
        matches!(self, LeafType::Two | LeafType::Five)
    }
}

impl TryFrom<u8> for LeafType {
    type Error = String;
    fn try_from(x: u8) -> std::result::Result<Self, String> {
        match x {
            1 => Ok(LeafType::One),
            2 => Ok(LeafType::Two),
            3 => Ok(LeafType::Three),
            4 => Ok(LeafType::Four),
            5 => Ok(LeafType::Five),
            _ => Err(format!("leaf type {x} out of range")),
        }
    }
}

impl From<LeafType> for u8 {
    fn from(t: LeafType) -> u8 {
        t.number()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodimTwoRoot {
    pub vector: DimensionVector,
    pub kind: RootKind,
    pub leaf_type: LeafType,
}

/// Leaf type of the primitive positive root `v1`, or `None` when its ray carries no
/// codimension-2 leaf. Requires a dominant setting.
pub fn classify_codim2_root(fs: &FramedSetting, v1: &DimensionVector) -> Result<Option<LeafType>> {
    fs.quiver.check_len(v1)?;
    if !fs.is_dominant() {
        return Err(NwgError::Contract("classification needs a dominant setting".into()));
    }
    let kind = match root_kind(&fs.quiver, v1) {
        Some(k) if v1.is_nonnegative() => k,
        _ => return Err(NwgError::Contract(format!("{v1} is not a positive root"))),
    };
    if v1.gcd() != 1 {
        return Err(NwgError::Contract(format!("{v1} is not primitive")));
    }
    let q = &fs.extended;
    let ext = fs.embed(v1);
    let complement_is_root = |n: i64| {
        let x = &fs.tilde_v - &(n * &ext);
        x.is_nonnegative() && root_kind(q, &x).is_some()
    };
    let nu = fs.nu(v1);
    let top = (0..v1.len())
        .filter(|&i| v1[i] > 0)
        .map(|i| fs.v[i] / v1[i])
        .min()
        .unwrap_or(0);
    Ok(match kind {
        RootKind::Real => (nu == 0 && complement_is_root(1)).then_some(LeafType::One),
        RootKind::IsotropicImaginary => {
            if nu == 1 && (2..=top).any(complement_is_root) {
                Some(LeafType::Two)
            } else if nu == 2 && complement_is_root(1) {
                Some(LeafType::Three)
            } else {
                None
            }
        }
        RootKind::NonIsotropicImaginary => {
            let norm = q.form(&ext, &ext);
            if nu == 2 - norm && complement_is_root(1) && !(2..=top).any(complement_is_root) {
                Some(LeafType::Four)
            } else if nu == 1 - 2 * norm && complement_is_root(2) && !(3..=top).any(complement_is_root) {
                Some(LeafType::Five)
            } else {
                None
            }
        }
    })
}

/// Codimension-2 roots of a dominant setting, lexicographically sorted.
pub fn codim2_roots_dominant(fs: &FramedSetting) -> Result<Vec<CodimTwoRoot>> {
    let mut out = Vec::new();
    for r in enumerate_positive_roots_leq(&fs.quiver, &fs.v)? {
        if r.vector.gcd() != 1 {
            continue;
        }
        if let Some(t) = classify_codim2_root(fs, &r.vector)? {
            out.push(CodimTwoRoot { vector: r.vector, kind: r.kind, leaf_type: t });
        }
    }
    Ok(out)
}

/// Codimension-2 roots after dominance reduction, with the reduced setting and trace.
pub fn find_codim2_roots(
    fs: &FramedSetting,
) -> Result<(FramedSetting, ReductionTrace, Vec<CodimTwoRoot>)> {
    let (reduced, trace) = dominance_reduce(fs)?;
    let roots = codim2_roots_dominant(&reduced)?;
    Ok((reduced, trace, roots))
}

/// Product of irreducible Weyl groups, factors ordered by rank (descending), letter, then
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamikawaGroup {
    pub factors: Vec<WeylFactor>,
    #[serde(with = "biguint_string")]
    pub order: BigUint,
}

impl NamikawaGroup {
    pub fn from_factors(mut factors: Vec<WeylFactor>) -> Self {
        factors.sort_by(|a, b| {
            b.cartan_type
                .rank
                .cmp(&a.cartan_type.rank)
                .then(a.cartan_type.letter.cmp(&b.cartan_type.letter))
                .then_with(|| a.members.first().cmp(&b.members.first()))
        });
        let order = factors
            .iter()
            .fold(BigUint::from(1u32), |acc, f| acc * f.cartan_type.weyl_order());
        NamikawaGroup { factors, order }
    }

    pub fn cartan_types(&self) -> Vec<CartanType> {
        self.factors.iter().map(|f| f.cartan_type).collect()
    }

    /// Types joined with `x`, or `1` for the trivial group.
    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            "1".to_string()
        } else {
            self.cartan_types().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
        }
    }
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Everything the pipeline derives from one setting, in the coordinates of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub input: FramedSetting,
    /// Dominant setting on the same quiver; zero exactly where the input was zero or
    /// where reduction emptied a vertex.
    pub reduced: FramedSetting,
    pub trace: ReductionTrace,
    pub roots: Vec<CodimTwoRoot>,
    pub relations: Vec<RelationTriple>,
    pub group: NamikawaGroup,
}

/// Full pipeline: drop empty vertices, reduce to a dominant setting, classify
/// codimension-2 roots, check relations against the leaf-type table, fold components.
pub fn analyze(fs: &FramedSetting) -> Result<Analysis> {
    let n = fs.vertex_count();
    let (small, kept) = fs.normalized();
    let (reduced_small, trace_small) = dominance_reduce(&small)?;
    let roots_small = codim2_roots_dominant(&reduced_small)?;

    let reduced = FramedSetting::extend(&fs.quiver, &reduced_small.v.lift(&kept, n), &fs.w)?;
    let trace = ReductionTrace { word: trace_small.word.iter().map(|&i| kept[i]).collect() };
    let roots: Vec<CodimTwoRoot> = roots_small
        .into_iter()
        .map(|r| CodimTwoRoot { vector: r.vector.lift(&kept, n), ..r })
        .collect();

    let vectors: Vec<DimensionVector> = roots.iter().map(|r| r.vector.clone()).collect();
    let relations = find_relations(&vectors);
    validate_relation_types(&roots, &relations)?;
    for (k, r) in roots.iter().enumerate() {
        let touched = relations.iter().any(|t| t.i == k || t.j == k || t.k == k);
        if r.leaf_type.is_isolated() && touched {
            return Err(NwgError::Contradiction(format!(
                "leaf of type ({}) at {} takes part in a relation",
                r.leaf_type.number(),
                r.vector
            )));
        }
    }
    let mut factors = Vec::new();
    for comp in relations::relation_components(roots.len(), &relations) {
        factors.push(build_factor(comp.iter().map(|&k| vectors[k].clone()).collect())?);
    }
    Ok(Analysis {
        input: fs.clone(),
        reduced,
        trace,
        roots,
        relations,
        group: NamikawaGroup::from_factors(factors),
    })
}

/// The Namikawa-Weyl group of the affinization, as a product of irreducible Weyl groups.
pub fn namikawa_weyl_group(fs: &FramedSetting) -> Result<NamikawaGroup> {
    analyze(fs).map(|a| a.group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn dv(v: &[i64]) -> DimensionVector {
        DimensionVector(v.to_vec())
    }

    #[test]
    fn a1_two_framings() {
        let q = Quiver::from_edges(1, &[]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1]), &dv(&[2])).unwrap();
        assert_eq!(classify_codim2_root(&fs, &dv(&[1])).unwrap(), Some(LeafType::One));
        let g = namikawa_weyl_group(&fs).unwrap();
        assert_eq!(g.label(), "A1");
        assert_eq!(g.order, BigUint::from(2u32));
    }

    #[test]
    fn classification_needs_dominance() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1, 1]), &dv(&[0, 1])).unwrap();
        assert!(matches!(
            classify_codim2_root(&fs, &dv(&[1, 0])),
            Err(NwgError::Contract(_))
        ));
    }

    #[test]
    fn empty_variety_reported() {
        let q = Quiver::from_edges(1, &[]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1]), &dv(&[0])).unwrap();
        assert!(matches!(namikawa_weyl_group(&fs), Err(NwgError::EmptyVariety(_))));
    }

    #[test]
    fn zero_vertices_are_ignored() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[1, 0, 0]), &dv(&[2, 0, 0])).unwrap();
        let a = analyze(&fs).unwrap();
        assert_eq!(a.group.label(), "A1");
        assert_eq!(a.roots[0].vector, dv(&[1, 0, 0]));
    }

    #[test]
    fn group_order_is_product() {
        let g = NamikawaGroup::from_factors(vec![
            build_factor(vec![dv(&[1, 0, 0])]).unwrap(),
            build_factor(vec![dv(&[0, 1, 0]), dv(&[0, 0, 1]), dv(&[0, 1, 1])]).unwrap(),
        ]);
        assert_eq!(g.label(), "A2 x A1");
        assert_eq!(g.order, BigUint::from(12u32));
    }

    #[test]
    fn doubled_ray_leaf() {
        // One vertex with two loops: the stratum alpha_inf + 2 alpha sits in codimension 2.
        let q = Quiver::new(vec![2], vec![vec![0]]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[2]), &dv(&[1])).unwrap();
        assert_eq!(classify_codim2_root(&fs, &dv(&[1])).unwrap(), Some(LeafType::Five));
        assert_eq!(namikawa_weyl_group(&fs).unwrap().label(), "A1");
    }

    #[test]
    fn doubled_ray_leaf_without_loops() {
        let q = Quiver::from_edges(3, &[(0, 1), (0, 1), (0, 2), (0, 2)]).unwrap();
        let fs = FramedSetting::extend(&q, &dv(&[2, 2, 2]), &dv(&[1, 0, 0])).unwrap();
        assert_eq!(classify_codim2_root(&fs, &dv(&[1, 1, 1])).unwrap(), Some(LeafType::Five));
        assert_eq!(namikawa_weyl_group(&fs).unwrap().label(), "A1 x A1 x A1");
    }

    #[test]
    fn leaf_type_numbers_round_trip() {
        for k in 1..=5u8 {
            assert_eq!(LeafType::try_from(k).unwrap().number(), k);
        }
        assert!(LeafType::try_from(6).is_err());
    }
}
