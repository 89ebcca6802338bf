//! Small linear relations among codimension-2 roots and the leaf-type table.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{CodimTwoRoot, LeafType};
use crate::error::{NwgError, Result};
use crate::quiver::DimensionVector;

/// Shape of a relation `a x + b y = c z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationForm {
    /// `x + y = z`
    A,
    /// `x + 2y = z`
    B,
    /// `x + y = 2z`
    C,
    /// `x + 3y = z`
    D,
    /// `x + y = 3z`
    E,
}

impl RelationForm {
    /// Coefficients of `(x, y, z)`.
    pub fn coefficients(self) -> (i64, i64, i64) {
        match self {
            RelationForm::A => (1, 1, 1),
            RelationForm::B => (1, 2, 1),
            RelationForm::C => (1, 1, 2),
            RelationForm::D => (1, 3, 1),
            RelationForm::E => (1, 1, 3),
        }
    }

    fn from_coefficients(c: (i64, i64, i64)) -> Option<Self> {
        [
            RelationForm::A,
            RelationForm::B,
            RelationForm::C,
            RelationForm::D,
            RelationForm::E,
        ]
        .into_iter()
        .find(|f| f.coefficients() == c)
    }

    /// Whether `x` and `y` play symmetric roles.
    pub fn is_symmetric(self) -> bool {
        let (a, b, _) = self.coefficients();
        a == b
    }
}

/// `a * roots[i] + b * roots[j] = c * roots[k]` with `(a, b, c)` given by `form`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationTriple {
    pub form: RelationForm,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Every relation of the five admissible shapes among distinct roots of the list.
///
/// Symmetric shapes are reported once with `i < j`.
pub fn find_relations(roots: &[DimensionVector]) -> Vec<RelationTriple> {
    let index: HashMap<&DimensionVector, usize> =
        roots.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let mut out = Vec::new();
    for i in 0..roots.len() {
        for j in 0..roots.len() {
            if i == j {
                continue;
            }
            for b in 1..=3 {
                if b == 1 && j < i {
                    continue;
                }
                let sum = &roots[i] + &(b * &roots[j]);
                for c in 1..=3 {
                    let Some(form) = RelationForm::from_coefficients((1, b, c)) else {
                        continue;
                    };
                    let Some(z) = sum.div_exact(c) else { continue };
                    if let Some(&k) = index.get(&z) {
                        if k != i && k != j {
                            out.push(RelationTriple { form, i, j, k });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Leaf types allowed for `type(x) + type(y) = type(z)`.
pub fn allowed_sum_types(x: LeafType, y: LeafType) -> &'static [LeafType] {
    use LeafType::*;
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    match (lo, hi) {
        (One, One) => &[One],
        (One, Three) | (One, Four) => &[Three, Four],
        (Three, Three) | (Three, Four) | (Four, Four) => &[Four],
        _ => &[],
    }
}

/// Checks every relation against the leaf-type table.
pub fn validate_relation_types(roots: &[CodimTwoRoot], relations: &[RelationTriple]) -> Result<()> {
    for r in relations {
        let (x, y, z) = (roots[r.i].leaf_type, roots[r.j].leaf_type, roots[r.k].leaf_type);
        if !allowed_sum_types(x, y).contains(&z) {
            return Err(NwgError::Contradiction(format!(
                "relation {:?} among {}, {}, {} has leaf types ({}) + ({}) = ({})",
                r.form,
                roots[r.i].vector,
                roots[r.j].vector,
                roots[r.k].vector,
                x.number(),
                y.number(),
                z.number()
            )));
        }
    }
    Ok(())
}

/// Connected components of the graph joining the three roots of each relation.
pub fn relation_components(count: usize, relations: &[RelationTriple]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for r in relations {
        for (a, b) in [(r.i, r.j), (r.i, r.k)] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..count {
        let r = find(&mut parent, x);
        let s = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[s].push(x);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimensionVector {
        DimensionVector(v.to_vec())
    }

    #[test]
    fn b2_relations() {
        // a3, delta, delta + a3, 2 delta + a3 on the triangle with a pendant vertex.
        let roots = vec![dv(&[0, 0, 0, 1]), dv(&[1, 1, 1, 0]), dv(&[1, 1, 1, 1]), dv(&[2, 2, 2, 1])];
        let rels = find_relations(&roots);
        let has = |form, i, j, k| rels.contains(&RelationTriple { form, i, j, k });
        assert!(has(RelationForm::B, 0, 1, 3));
        assert!(has(RelationForm::C, 0, 3, 2));
        assert!(has(RelationForm::A, 1, 2, 3));
        assert!(has(RelationForm::A, 0, 1, 2));
        assert_eq!(rels.len(), 4);
    }

    #[test]
    fn table_is_symmetric() {
        use LeafType::*;
        for x in [One, Two, Three, Four] {
            for y in [One, Two, Three, Four] {
                assert_eq!(allowed_sum_types(x, y), allowed_sum_types(y, x));
            }
            assert!(allowed_sum_types(Two, x).is_empty());
        }
    }

    #[test]
    fn components_by_union() {
        let rels = vec![RelationTriple { form: RelationForm::A, i: 0, j: 2, k: 3 }];
        assert_eq!(relation_components(5, &rels), vec![vec![0, 2, 3], vec![1], vec![4]]);
    }
}
