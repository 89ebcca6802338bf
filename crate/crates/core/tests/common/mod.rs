#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;

use nwg_core::instance::{Instance, InstanceFile};
use nwg_core::{dominance_reduce, DimensionVector, FramedSetting, Quiver, RootKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn dv(v: &[i64]) -> DimensionVector {
    DimensionVector(v.to_vec())
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load_fixture(name: &str) -> Instance {
    let path = fixtures_dir().join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    InstanceFile::parse(&text).unwrap().validate().unwrap()
}

pub fn path_quiver(n: usize) -> Quiver {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Quiver::from_edges(n, &edges).unwrap()
}

/// D_n with the branch at vertex n-3.
pub fn d_quiver(n: usize) -> Quiver {
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 1));
    Quiver::from_edges(n, &edges).unwrap()
}

pub fn cycle_quiver(n: usize) -> Quiver {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Quiver::from_edges(n, &edges).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize, max: i64) -> DimensionVector {
    DimensionVector((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

/// Random quiver on `n` vertices with at most `max_loops` loops per vertex.
pub fn random_quiver(rng: &mut ChaCha8Rng, n: usize, max_loops: u32, max_edges: u32) -> Quiver {
    let loops = (0..n)
        .map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..=max_loops) } else { 0 })
        .collect();
    let mut edges = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..i {
            let e = if rng.gen_bool(0.6) { rng.gen_range(1..=max_edges) } else { 0 };
            edges[i][j] = e;
            edges[j][i] = e;
        }
    }
    Quiver::new(loops, edges).unwrap()
}

/// Dominant setting reached from random data, or `None` when the variety is empty.
pub fn random_dominant(
    rng: &mut ChaCha8Rng,
    q: &Quiver,
    v_max: i64,
    w_max: i64,
) -> Option<FramedSetting> {
    let n = q.vertex_count();
    let v = random_vector(rng, n, v_max);
    let w = random_vector(rng, n, w_max);
    let fs = FramedSetting::extend(q, &v, &w).unwrap();
    let (r, _) = dominance_reduce(&fs).ok()?;
    if r.v.iter().any(|&x| x > v_max) {
        return None;
    }
    Some(r)
}

fn form(q: &Quiver, a: &[i64], b: &[i64]) -> i64 {
    let n = q.vertex_count();
    let mut s = 0;
    for i in 0..n {
        s += (2 - 2 * q.loops(i) as i64) * a[i] * b[i];
        for j in 0..n {
            if i != j {
                s -= q.edges(i, j) as i64 * a[i] * b[j];
            }
        }
    }
    s
}

fn reflect_raw(q: &Quiver, a: &[i64], i: usize) -> Vec<i64> {
    let mut e = vec![0; a.len()];
    e[i] = 1;
    let c = form(q, a, &e);
    let mut out = a.to_vec();
    out[i] -= c;
    out
}

fn connected(q: &Quiver, a: &[i64]) -> bool {
    let supp: Vec<usize> = (0..a.len()).filter(|&i| a[i] != 0).collect();
    let Some(&start) = supp.first() else { return false };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for &j in &supp {
            if q.edges(i, j) > 0 && seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    seen.len() == supp.len()
}

fn in_box(a: &[i64], bound: &[i64]) -> bool {
    a.iter().zip(bound).all(|(x, b)| *x >= 0 && x <= b)
}

fn box_vectors(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|a| a.iter().any(|&x| x != 0));
    out
}

/// Positive roots bounded by `bound`, generated forward: simple reflections applied to
/// simple roots (real) and to the fundamental region (imaginary), staying inside the box.
/// Ascending chains only raise one coordinate at a time, so closing inside the box loses
/// nothing.
pub fn orbit_roots(q: &Quiver, bound: &[i64]) -> BTreeMap<Vec<i64>, RootKind> {
    let n = q.vertex_count();
    let free: Vec<usize> = (0..n).filter(|&i| q.loops(i) == 0).collect();
    let close = |seeds: Vec<Vec<i64>>| {
        let mut seen: BTreeSet<Vec<i64>> = seeds.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = seeds.into();
        while let Some(a) = queue.pop_front() {
            for &i in &free {
                let b = reflect_raw(q, &a, i);
                if in_box(&b, bound) && seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        seen
    };
    let simples: Vec<Vec<i64>> = free
        .iter()
        .filter(|&&i| bound[i] >= 1)
        .map(|&i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let fundamental: Vec<Vec<i64>> = box_vectors(bound)
        .into_iter()
        .filter(|a| {
            connected(q, a)
                && (0..n).all(|i| {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    form(q, a, &e) <= 0
                })
        })
        .collect();
    let mut out = BTreeMap::new();
    for a in close(simples) {
        out.insert(a, RootKind::Real);
    }
    for a in close(fundamental) {
        let kind = if form(q, &a, &a) == 0 {
            RootKind::IsotropicImaginary
        } else {
            RootKind::NonIsotropicImaginary
        };
        out.insert(a, kind);
    }
    out
}

/// Every quiver on `n` vertices with loops and edge multiplicities up to the given caps.
pub fn all_quivers(n: usize, max_loops: u32, max_edges: u32) -> Vec<Quiver> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let loop_count = (max_loops + 1).pow(n as u32);
    let edge_count = (max_edges + 1).pow(pairs.len() as u32);
    for lc in 0..loop_count {
        let mut code = lc;
        let loops: Vec<u32> = (0..n)
            .map(|_| {
                let l = code % (max_loops + 1);
                code /= max_loops + 1;
                l
            })
            .collect();
        for ec in 0..edge_count {
            let mut code = ec;
            let mut edges = vec![vec![0u32; n]; n];
            for &(i, j) in &pairs {
                let e = code % (max_edges + 1);
                code /= max_edges + 1;
                edges[i][j] = e;
                edges[j][i] = e;
            }
            out.push(Quiver::new(loops.clone(), edges).unwrap());
        }
    }
    out
}
