//! Finite Cartan types: standard matrices, Weyl group orders, positive roots and
//! recognition of a Cartan matrix up to relabelling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{NwgError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Irreducible finite Cartan type. `C2` is stored as `B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CartanType {
    pub letter: CartanLetter,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: CartanLetter, rank: usize) -> Result<Self> {
        use CartanLetter::*;
        let ok = match letter {
            A => rank >= 1,
            B | C => rank >= 2,
            D => rank >= 4,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if !ok {
            return Err(NwgError::Input(format!("no finite type {letter:?}{rank}")));
        }
        let letter = if letter == C && rank == 2 { B } else { letter };
        Ok(CartanType { letter, rank })
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.letter, CartanLetter::A | CartanLetter::D | CartanLetter::E)
    }

    /// Squared length ratio between long and short roots.
    pub fn length_ratio(&self) -> i64 {
        match self.letter {
            CartanLetter::B | CartanLetter::C | CartanLetter::F => 2,
            CartanLetter::G => 3,
            _ => 1,
        }
    }

    pub fn weyl_order(&self) -> BigUint {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).fold(BigUint::from(1u32), |a, b| a * b);
        match self.letter {
            CartanLetter::A => fact(n + 1),
            CartanLetter::B | CartanLetter::C => (BigUint::from(1u32) << n) * fact(n),
            CartanLetter::D => (BigUint::from(1u32) << (n - 1)) * fact(n),
            CartanLetter::E => BigUint::from(match n {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            CartanLetter::F => BigUint::from(1152u32),
            CartanLetter::G => BigUint::from(12u32),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            CartanLetter::A => n * (n + 1) / 2,
            CartanLetter::B | CartanLetter::C => n * n,
            CartanLetter::D => n * (n - 1),
            CartanLetter::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanLetter::F => 24,
            CartanLetter::G => 6,
        }
    }

    /// Symmetric integer Gram matrix of the simple roots; short roots have norm 2.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, x: i64| {
            g[i][j] = x;
            g[j][i] = x;
        };
        match self.letter {
            CartanLetter::A | CartanLetter::D | CartanLetter::E => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                let edges: Vec<(usize, usize)> = match self.letter {
                    CartanLetter::A => (1..n).map(|i| (i - 1, i)).collect(),
                    CartanLetter::D => {
                        let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                        e.push((n - 3, n - 1));
                        e
                    }
                    _ => {
                        let mut e = vec![(0, 2), (1, 3)];
                        e.extend((3..n).map(|i| (i - 1, i)));
                        e
                    }
                };
                for (i, j) in edges {
                    link(&mut g, i, j, -1);
                }
            }
            CartanLetter::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 4 } else { 2 };
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, -2);
                }
            }
            CartanLetter::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 2 } else { 4 };
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, if i + 1 < n { -1 } else { -2 });
                }
            }
            CartanLetter::F => {
                g = vec![
                    vec![4, -2, 0, 0],
                    vec![-2, 4, -2, 0],
                    vec![0, -2, 2, -1],
                    vec![0, 0, -1, 2],
                ];
            }
            CartanLetter::G => {
                g = vec![vec![2, -3], vec![-3, 6]];
            }
        }
        g
    }

    /// `a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`: minus the length of the
    /// `alpha_i`-string through `alpha_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| 2 * g[i][j] / g[i][i]).collect())
            .collect()
    }

    /// Positive roots in simple-root coordinates, by height then lexicographically.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        positive_roots_from_cartan(&self.cartan_matrix())
            .expect("standard Cartan matrices are of finite type")
    }

    /// Squared length of a root given in simple-root coordinates.
    pub fn norm(&self, coords: &[i64]) -> i64 {
        let g = self.gram();
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += coords[i] * g[i][j] * coords[j];
            }
        }
        s
    }

    /// Folding weight of a root: the length ratio for long roots, 1 otherwise.
    pub fn multiplicity_of(&self, coords: &[i64]) -> u8 {
        if self.length_ratio() > 1 && self.norm(coords) > 2 {
            self.length_ratio() as u8
        } else {
            1
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = NwgError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || NwgError::Input(format!("cannot parse Cartan type {s:?}"));
        let mut chars = s.chars();
        let letter = match chars.next().ok_or_else(bad)? {
            'A' => CartanLetter::A,
            'B' => CartanLetter::B,
            'C' => CartanLetter::C,
            'D' => CartanLetter::D,
            'E' => CartanLetter::E,
            'F' => CartanLetter::F,
            'G' => CartanLetter::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(letter, rank)
    }
}

impl TryFrom<String> for CartanType {
    type Error = NwgError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.to_string()
    }
}

const ROOT_CAP: usize = 512;

/// Positive roots of a Cartan matrix (convention of [`CartanType::cartan_matrix`]) by
/// string extension; fails when the generation does not close up.
pub fn positive_roots_from_cartan(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let r = a.len();
    let simple = |i: usize| {
        let mut e = vec![0i64; r];
        e[i] = 1;
        e
    };
    let mut all: BTreeSet<Vec<i64>> = (0..r).map(simple).collect();
    let mut level: Vec<Vec<i64>> = (0..r).map(simple).collect();
    let mut out = level.clone();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..r {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * a[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        level = next.into_iter().collect();
        all.extend(level.iter().cloned());
        out.extend(level.iter().cloned());
        if out.len() > ROOT_CAP {
            return Err(NwgError::Contradiction(
                "Cartan matrix is not of finite type".into(),
            ));
        }
    }
    Ok(out)
}

fn candidate_types(rank: usize) -> Vec<CartanType> {
    use CartanLetter::*;
    [A, B, C, D, E, F, G]
        .into_iter()
        .filter_map(|l| CartanType::new(l, rank).ok())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Recognizes a connected finite Cartan matrix.
///
/// Returns the type and `perm` with `m[perm[i]][perm[j]]` equal to the standard entry `(i, j)`.
pub fn classify_cartan(m: &[Vec<i64>]) -> Result<(CartanType, Vec<usize>)> {
    let r = m.len();
    if r == 0 || m.iter().any(|row| row.len() != r) {
        return Err(NwgError::Contradiction("empty or non-square Cartan matrix".into()));
    }
    for t in candidate_types(r) {
        let std = t.cartan_matrix();
        if let Some(perm) = match_matrix(&std, m) {
            return Ok((t, perm));
        }
    }
    Err(NwgError::Contradiction(format!(
        "Cartan matrix {m:?} is not a connected finite type"
    )))
}

fn match_matrix(std: &[Vec<i64>], m: &[Vec<i64>]) -> Option<Vec<usize>> {
    let r = std.len();
    // Visit standard nodes so that each one after the first touches an earlier one.
    let mut order = vec![0usize];
    while order.len() < r {
        let next = (0..r).find(|&j| !order.contains(&j) && order.iter().any(|&i| std[i][j] != 0))?;
        order.push(next);
    }
    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn go(
        k: usize,
        order: &[usize],
        std: &[Vec<i64>],
        m: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let s = order[k];
        for c in 0..m.len() {
            if used[c] || m[c][c] != std[s][s] {
                continue;
            }
            let fits = order[..k]
                .iter()
                .all(|&t| m[c][perm[t]] == std[s][t] && m[perm[t]][c] == std[t][s]);
            if fits {
                perm[s] = c;
                used[c] = true;
                if go(k + 1, order, std, m, perm, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    go(0, &order, std, m, &mut perm, &mut used).then_some(perm)
}
