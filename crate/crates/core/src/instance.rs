//! The JSON instance format and the inline shorthand for standard quiver families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{NwgError, Result};
use crate::quiver::{DimensionVector, FramedSetting, Quiver};

/// On-disk description of a framed quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub loops: BTreeMap<String, u32>,
    #[serde(default)]
    pub edges: Vec<(String, String, u32)>,
    pub v: BTreeMap<String, i64>,
    #[serde(default)]
    pub w: BTreeMap<String, i64>,
}

/// A validated instance: vertex names plus the framed setting in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub names: Vec<String>,
    pub setting: FramedSetting,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| NwgError::Input(format!("instance JSON: {e}")))
    }

    pub fn validate(&self) -> Result<Instance> {
        let n = self.vertices.len();
        let mut index = BTreeMap::new();
        for (k, name) in self.vertices.iter().enumerate() {
            if index.insert(name.as_str(), k).is_some() {
                return Err(NwgError::Input(format!("vertices[{k}]: duplicate name {name:?}")));
            }
        }
        let lookup = |field: &str, name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| NwgError::Input(format!("{field}: unknown vertex {name:?}")))
        };
        let mut loops = vec![0u32; n];
        for (name, &c) in &self.loops {
            loops[lookup(&format!("loops.{name}"), name)?] += c;
        }
        let mut edges = vec![vec![0u32; n]; n];
        for (k, (a, b, mult)) in self.edges.iter().enumerate() {
            let field = format!("edges[{k}]");
            let (i, j) = (lookup(&field, a)?, lookup(&field, b)?);
            if *mult < 1 {
                return Err(NwgError::Input(format!("{field}: multiplicity must be at least 1")));
            }
            if i == j {
                loops[i] += mult;
            } else {
                edges[i][j] += mult;
                edges[j][i] += mult;
            }
        }
        let mut v = vec![None; n];
        for (name, &x) in &self.v {
            v[lookup(&format!("v.{name}"), name)?] = Some(x);
        }
        let v: Vec<i64> = v
            .into_iter()
            .enumerate()
            .map(|(k, x)| {
                x.ok_or_else(|| NwgError::Input(format!("v: missing entry for {:?}", self.vertices[k])))
            })
            .collect::<Result<_>>()?;
        let mut w = vec![0i64; n];
        for (name, &x) in &self.w {
            w[lookup(&format!("w.{name}"), name)?] = x;
        }
        let quiver = Quiver::new(loops, edges)?;
        let setting = FramedSetting::extend(&quiver, &DimensionVector(v), &DimensionVector(w))?;
        Ok(Instance { names: self.vertices.clone(), setting })
    }

    /// Canonical file for a setting: loops and edges listed once, zero framings omitted.
    pub fn from_setting(names: &[String], fs: &FramedSetting) -> Self {
        let q = &fs.quiver;
        let n = names.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if q.edges(i, j) > 0 {
                    edges.push((names[i].clone(), names[j].clone(), q.edges(i, j)));
                }
            }
        }
        InstanceFile {
            vertices: names.to_vec(),
            loops: (0..n)
                .filter(|&i| q.loops(i) > 0)
                .map(|i| (names[i].clone(), q.loops(i)))
                .collect(),
            edges,
            v: (0..n).map(|i| (names[i].clone(), fs.v[i])).collect(),
            w: (0..n).filter(|&i| fs.w[i] != 0).map(|i| (names[i].clone(), fs.w[i])).collect(),
        }
    }
}

/// Quiver of a standard family: `A3`, `D5`, `E6`, affine `A~2`, `D~4`, `E~7`, `Jordan`.
///
/// Finite types use vertices `a1..an`; affine types add the extending vertex `a0` first.
pub fn family(spec: &str) -> Result<(Vec<String>, Quiver)> {
    let bad = || NwgError::Input(format!("unknown quiver family {spec:?}"));
    if spec.eq_ignore_ascii_case("jordan") || spec == "A~0" {
        return Ok((vec!["a0".into()], Quiver::new(vec![1], vec![vec![0]])?));
    }
    let (letter, rest) = spec.split_at(1);
    let (affine, digits) = match rest.strip_prefix('~') {
        Some(d) => (true, d),
        None => (false, rest),
    };
    let n: usize = digits.parse().map_err(|_| bad())?;
    // Finite diagram on 1..=n, indices shifted by one to leave 0 for the extension.
    let mut edges: Vec<(usize, usize)> = match (letter, n) {
        ("A", n) if n >= 1 => (2..=n).map(|i| (i - 1, i)).collect(),
        ("D", n) if n >= 4 => {
            let mut e: Vec<_> = (2..n).map(|i| (i - 1, i)).collect();
            e.push((n - 2, n));
            e
        }
        ("E", 6..=8) => {
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((4..=n).map(|i| (i - 1, i)));
            e
        }
        _ => return Err(bad()),
    };
    if affine {
        match letter {
            "A" if n == 1 => edges.extend([(0, 1), (0, 1)]),
            "A" => edges.extend([(0, 1), (0, n)]),
            "D" => edges.push((0, 2)),
            "E" => edges.push((0, [2, 1, 8][n - 6])),
            _ => unreachable!(),
        }
    }
    let (lo, count) = if affine { (0, n + 1) } else { (1, n) };
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a - lo, b - lo)).collect();
    let names = (lo..lo + count).map(|i| format!("a{i}")).collect();
    Ok((names, Quiver::from_edges(count, &edges)?))
}

/// Comma separated integers.
pub fn parse_csv(field: &str, text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| NwgError::Input(format!("{field}: cannot parse {t:?} as an integer")))
        })
        .collect()
}

/// Instance from the inline shorthand.
pub fn inline_instance(quiver: &str, v: &str, w: Option<&str>) -> Result<InstanceFile> {
    let (names, q) = family(quiver)?;
    let n = names.len();
    let v = parse_csv("--v", v)?;
    let w = match w {
        Some(w) => parse_csv("--w", w)?,
        None => vec![0; n],
    };
    if v.len() != n || w.len() != n {
        return Err(NwgError::Input(format!(
            "{quiver} has {n} vertices, got {} entries for v and {} for w",
            v.len(),
            w.len()
        )));
    }
    let fs = FramedSetting::extend(&q, &DimensionVector(v), &DimensionVector(w))?;
    Ok(InstanceFile::from_setting(&names, &fs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::namikawa::fastpath::{affine_null_root, is_dynkin};

    #[test]
    fn parse_and_validate() {
        let text = r#"{"vertices":["x","y"],"edges":[["x","y",1]],"v":{"x":1,"y":1},"w":{"x":1}}"#;
        let inst = InstanceFile::parse(text).unwrap().validate().unwrap();
        assert_eq!(inst.setting.quiver.edges(0, 1), 1);
        assert_eq!(inst.setting.w, DimensionVector(vec![1, 0]));
    }

    #[test]
    fn unknown_edge_name() {
        let text = r#"{"vertices":["x"],"edges":[["x","z",1]],"v":{"x":1}}"#;
        let err = InstanceFile::parse(text).unwrap().validate().unwrap_err();
        assert!(err.to_string().contains("edges[0]"), "{err}");
    }

    #[test]
    fn missing_v_entry() {
        let text = r#"{"vertices":["x","y"],"v":{"x":1}}"#;
        assert!(InstanceFile::parse(text).unwrap().validate().is_err());
    }

    #[test]
    fn self_edges_become_loops() {
        let text = r#"{"vertices":["x"],"edges":[["x","x",2]],"loops":{"x":1},"v":{"x":1}}"#;
        let inst = InstanceFile::parse(text).unwrap().validate().unwrap();
        assert_eq!(inst.setting.quiver.loops(0), 3);
    }

    #[test]
    fn syntax_error_has_position() {
        let err = InstanceFile::parse("{\n\"vertices\": [,]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn families() {
        for f in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let (_, q) = family(f).unwrap();
            assert!(is_dynkin(&q), "{f}");
        }
        for f in ["A~1", "A~3", "D~4", "D~5", "E~6", "E~7", "E~8", "Jordan"] {
            let (_, q) = family(f).unwrap();
            assert!(affine_null_root(&q).is_some(), "{f}");
        }
        let (_, e8) = family("E~8").unwrap();
        assert_eq!(affine_null_root(&e8).unwrap().iter().max(), Some(&6));
        assert!(family("Q3").is_err());
        assert!(family("D3").is_err());
    }

    #[test]
    fn inline_roundtrip() {
        let file = inline_instance("A~2", "1,1,1", Some("1,0,0")).unwrap();
        let inst = file.validate().unwrap();
        assert_eq!(inst.names, vec!["a0", "a1", "a2"]);
        assert_eq!(InstanceFile::from_setting(&inst.names, &inst.setting), file);
    }
}
