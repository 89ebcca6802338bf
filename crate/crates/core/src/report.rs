//! Machine and human readable reports for the command line tool.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::instance::{Instance, InstanceFile};
use crate::namikawa::{Analysis, CartanType, LeafType, RelationForm};
use crate::roots::{ClassifiedRoot, RootKind};
use crate::strata::RepresentationType;

pub const SCHEMA_VERSION: u32 = 1;

pub const NONEMPTINESS_WARNING: &str = "nonemptiness of the smooth quiver variety is not \
verified; only the necessary condition that the extended dimension vector is a root was checked";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub vector: Vec<i64>,
    pub kind: RootKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_type: Option<LeafType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub form: RelationForm,
    /// Indices into `codim2_roots`: `a x + b y = c z` with coefficients given by `form`.
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub cartan_type: CartanType,
    pub weyl_order: String,
    /// Indices into `codim2_roots`.
    pub members: Vec<usize>,
    /// Folding weight of each member, parallel to `members`.
    pub m: Vec<u8>,
    /// Indices into `codim2_roots`, standard order of the Cartan type.
    pub simple_roots: Vec<usize>,
    /// `[i, j, k]` indices into `codim2_roots` with `m_i x_i + m_j x_j = m_k x_k`.
    pub folded_additions: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InstanceFile,
    /// Vertex names reflected at, in order.
    pub dominance_trace: Vec<String>,
    pub reduced_v: Vec<i64>,
    pub codim2_roots: Vec<RootEntry>,
    pub relations: Vec<RelationEntry>,
    pub factors: Vec<FactorEntry>,
    pub leaf_count: usize,
    pub group: String,
    pub order: String,
    pub warnings: Vec<String>,
}

impl ComputeReport {
    pub fn new(inst: &Instance, a: &Analysis) -> Self {
        let index = |x: &crate::quiver::DimensionVector| {
            a.roots.iter().position(|r| &r.vector == x).expect("factor member is a listed root")
        };
        let factors = a
            .group
            .factors
            .iter()
            .map(|f| {
                let global: Vec<usize> = f.members.iter().map(index).collect();
                FactorEntry {
                    cartan_type: f.cartan_type,
                    weyl_order: f.cartan_type.weyl_order().to_string(),
                    members: global.clone(),
                    m: f.m_assignment.clone(),
                    simple_roots: f.simple_roots.iter().map(|&s| global[s]).collect(),
                    folded_additions: f
                        .folded_additions
                        .iter()
                        .map(|&(i, j, k)| [global[i], global[j], global[k]])
                        .collect(),
                }
            })
            .collect();
        ComputeReport {
            schema_version: SCHEMA_VERSION,
            command: "compute".into(),
            input: InstanceFile::from_setting(&inst.names, &inst.setting),
            dominance_trace: a.trace.word.iter().map(|&i| inst.names[i].clone()).collect(),
            reduced_v: a.reduced.v.0.clone(),
            codim2_roots: a
                .roots
                .iter()
                .map(|r| RootEntry {
                    vector: r.vector.0.clone(),
                    kind: r.kind,
                    leaf_type: Some(r.leaf_type),
                })
                .collect(),
            relations: a
                .relations
                .iter()
                .map(|r| RelationEntry { form: r.form, x: r.i, y: r.j, z: r.k })
                .collect(),
            factors,
            leaf_count: a.group.factors.len(),
            group: a.group.label(),
            order: a.group.order.to_string(),
            warnings: vec![NONEMPTINESS_WARNING.into()],
        }
    }

    pub fn to_text(&self) -> String {
        let names = &self.input.vertices;
        let mut s = String::new();
        writeln!(s, "quiver: {}", describe_input(&self.input)).unwrap();
        if self.dominance_trace.is_empty() {
            writeln!(s, "dominance: already dominant").unwrap();
        } else {
            writeln!(
                s,
                "dominance: reflected at {}; reduced v = {}",
                self.dominance_trace.join(" "),
                combination(&self.reduced_v, names)
            )
            .unwrap();
        }
        writeln!(s, "codimension-2 roots: {}", self.codim2_roots.len()).unwrap();
        for (k, r) in self.codim2_roots.iter().enumerate() {
            writeln!(
                s,
                "  [{k}] {:<28} {:<22} type ({})",
                combination(&r.vector, names),
                kind_name(r.kind),
                r.leaf_type.map_or(0, |t| t.number())
            )
            .unwrap();
        }
        writeln!(s, "relations: {}", self.relations.len()).unwrap();
        for r in &self.relations {
            let (a, b, c) = r.form.coefficients();
            writeln!(
                s,
                "  ({}) {}[{}] + {}[{}] = {}[{}]",
                form_name(r.form),
                coef(a),
                r.x,
                coef(b),
                r.y,
                coef(c),
                r.z
            )
            .unwrap();
        }
        writeln!(s, "factors: {}", self.factors.len()).unwrap();
        for f in &self.factors {
            let members: Vec<String> = f
                .members
                .iter()
                .zip(&f.m)
                .map(|(k, m)| if *m > 1 { format!("{k}(m={m})") } else { k.to_string() })
                .collect();
            writeln!(
                s,
                "  {} order {}: roots {}; simple {:?}",
                f.cartan_type,
                f.weyl_order,
                members.join(" "),
                f.simple_roots
            )
            .unwrap();
        }
        writeln!(s, "codimension-2 leaves: {}", self.leaf_count).unwrap();
        writeln!(s, "group: {}", self.group).unwrap();
        writeln!(s, "order: {}", self.order).unwrap();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InstanceFile,
    pub roots: Vec<RootEntry>,
}

impl RootsReport {
    pub fn new(inst: &Instance, roots: &[ClassifiedRoot]) -> Self {
        RootsReport {
            schema_version: SCHEMA_VERSION,
            command: "roots".into(),
            input: InstanceFile::from_setting(&inst.names, &inst.setting),
            roots: roots
                .iter()
                .map(|r| RootEntry { vector: r.vector.0.clone(), kind: r.kind, leaf_type: None })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "positive roots <= v: {}", self.roots.len()).unwrap();
        for r in &self.roots {
            writeln!(s, "  {:<28} {}", combination(&r.vector, &self.input.vertices), kind_name(r.kind))
                .unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartEntry {
    /// On the extended quiver: the framing coordinate comes last.
    pub vector: Vec<i64>,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeEntry {
    pub parts: Vec<PartEntry>,
    pub dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InstanceFile,
    pub v1: Vec<i64>,
    pub v1_kind: RootKind,
    pub types: Vec<TypeEntry>,
    pub max_dimension: Option<i64>,
    pub has_codim2_leaf: bool,
    /// Classification of `v1`, present only for a dominant input.
    pub leaf_type: Option<LeafType>,
    pub affinization_is_affine: bool,
    pub warnings: Vec<String>,
}

impl StrataReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        inst: &Instance,
        v1: &ClassifiedRoot,
        types: &[RepresentationType],
        has_codim2_leaf: bool,
        leaf_type: Option<LeafType>,
        affine: bool,
        warnings: Vec<String>,
    ) -> Self {
        StrataReport {
            schema_version: SCHEMA_VERSION,
            command: "strata".into(),
            input: InstanceFile::from_setting(&inst.names, &inst.setting),
            v1: v1.vector.0.clone(),
            v1_kind: v1.kind,
            types: types
                .iter()
                .map(|t| TypeEntry {
                    parts: t
                        .parts
                        .iter()
                        .map(|(x, c)| PartEntry { vector: x.0.clone(), multiplicity: *c })
                        .collect(),
                    dimension: t.dimension,
                })
                .collect(),
            max_dimension: types.first().map(|t| t.dimension),
            has_codim2_leaf,
            leaf_type,
            affinization_is_affine: affine,
            warnings,
        }
    }

    pub fn to_text(&self) -> String {
        let mut names = self.input.vertices.clone();
        names.push("inf".into());
        let mut s = String::new();
        writeln!(
            s,
            "ray: {} ({})",
            combination(&self.v1, &self.input.vertices),
            kind_name(self.v1_kind)
        )
        .unwrap();
        writeln!(s, "representation types: {}", self.types.len()).unwrap();
        writeln!(s, "  {:>9}  parts", "dimension").unwrap();
        for t in &self.types {
            let parts: Vec<String> = t
                .parts
                .iter()
                .map(|p| format!("({}, {})", combination(&p.vector, &names), p.multiplicity))
                .collect();
            writeln!(s, "  {:>9}  {}", t.dimension, parts.join("; ")).unwrap();
        }
        writeln!(s, "codimension-2 stratum: {}", if self.has_codim2_leaf { "yes" } else { "no" })
            .unwrap();
        match self.leaf_type {
            Some(t) => writeln!(s, "leaf type: ({})", t.number()).unwrap(),
            None => writeln!(s, "leaf type: none").unwrap(),
        }
        writeln!(s, "affinization is affine: {}", self.affinization_is_affine).unwrap();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InstanceFile,
    pub checks: Vec<CheckEntry>,
    pub passed: bool,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
        }
        writeln!(s, "verdict: {}", if self.passed { "all checks agree" } else { "disagreement" })
            .unwrap();
        s
    }
}

fn coef(c: i64) -> String {
    if c == 1 {
        String::new()
    } else {
        c.to_string()
    }
}

fn form_name(f: RelationForm) -> &'static str {
    match f {
        RelationForm::A => "a",
        RelationForm::B => "b",
        RelationForm::C => "c",
        RelationForm::D => "d",
        RelationForm::E => "e",
    }
}

pub fn kind_name(k: RootKind) -> &'static str {
    match k {
        RootKind::Real => "real",
        RootKind::IsotropicImaginary => "isotropic imaginary",
        RootKind::NonIsotropicImaginary => "non-isotropic imaginary",
    }
}

/// `2*a0 + a3` style rendering of an integer vector.
pub fn combination(v: &[i64], names: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| **c != 0)
        .map(|(c, n)| if *c == 1 { n.clone() } else { format!("{c}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn describe_input(f: &InstanceFile) -> String {
    let edges: Vec<String> = f
        .edges
        .iter()
        .map(|(a, b, m)| if *m == 1 { format!("{a}-{b}") } else { format!("{a}-{b}x{m}") })
        .collect();
    let loops: Vec<String> = f.loops.iter().map(|(a, l)| format!("{a}:{l}")).collect();
    let mut s = format!("{} vertices", f.vertices.len());
    if !edges.is_empty() {
        write!(s, ", edges {}", edges.join(" ")).unwrap();
    }
    if !loops.is_empty() {
        write!(s, ", loops {}", loops.join(" ")).unwrap();
    }
    let v: Vec<i64> = f.vertices.iter().map(|n| f.v[n]).collect();
    let w: Vec<i64> = f.vertices.iter().map(|n| f.w.get(n).copied().unwrap_or(0)).collect();
    write!(s, "; v = {}; w = {}", combination(&v, &f.vertices), combination(&w, &f.vertices))
        .unwrap();
    s
}
