//! Weyl group elements as permutations of the root set.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rootsys::{RootSystem, RootVec, Weight};

/// Default enumeration bound, `|W(E6)|`.
pub const DEFAULT_BOUND: u128 = 51_840;
/// Largest bound accepted with explicit opt-in, `|W(E7)|`.
pub const EXTENDED_BOUND: u128 = 2_903_040;

/// A Weyl group element: the permutation it induces on root indices,
/// together with its lexicographically least reduced word.
///
/// The word `[i1, i2, ..., ik]` denotes `s_i1 s_i2 ... s_ik`, so `s_ik` acts
/// first. Letters are 0-based node indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u16>,
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self {
            perm: (0..rs.num_roots() as u16).collect(),
            word: Vec::new(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self {
            perm: rs.reflection_perm(i).to_vec(),
            word: vec![i as u8],
        }
    }

    /// The reflection `s_alpha`.
    pub fn reflection(rs: &RootSystem, alpha: &RootVec) -> Result<Self> {
        let a = rs.index_of(alpha).ok_or(Error::NotARoot)?;
        Ok(Self::from_perm(rs, rs.reflection_perm(a).to_vec()))
    }

    /// Builds an element from a root permutation, recovering the
    /// lexicographically least reduced word by peeling off left descents.
    pub fn from_perm(rs: &RootSystem, perm: Vec<u16>) -> Self {
        let npos = rs.num_positive();
        let mut cur = perm.clone();
        let mut word = Vec::new();
        loop {
            // left descent i: w^{-1}(alpha_i) < 0
            let mut inv_simple = vec![0usize; rs.rank()];
            for (b, &img) in cur.iter().enumerate() {
                if (img as usize) < rs.rank() {
                    inv_simple[img as usize] = b;
                }
            }
            let Some(i) = (0..rs.rank()).find(|&i| inv_simple[i] >= npos) else {
                break;
            };
            let s = rs.reflection_perm(i);
            cur = cur.iter().map(|&x| s[x as usize]).collect();
            word.push(i as u8);
        }
        Self { perm, word }
    }

    /// Product of simple reflections `s_w[0] s_w[1] ...`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut perm: Vec<u16> = (0..rs.num_roots() as u16).collect();
        for &i in word {
            let s = rs.reflection_perm(i);
            perm = s.iter().map(|&b| perm[b as usize]).collect();
        }
        Self::from_perm(rs, perm)
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Reduced word, 0-based node indices.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    /// Reduced word with 1-based (Bourbaki) node indices.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }

    /// Images of the simple roots; determines the element.
    pub fn key(&self, rank: usize) -> &[u16] {
        &self.perm[..rank]
    }

    /// Image of root index `b`.
    pub fn apply(&self, b: usize) -> usize {
        self.perm[b] as usize
    }

    /// `self * other` (other acts first).
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Self {
        let perm = other.perm.iter().map(|&b| self.perm[b as usize]).collect();
        Self::from_perm(rs, perm)
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let mut inv = vec![0u16; self.perm.len()];
        for (b, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = b as u16;
        }
        Self::from_perm(rs, inv)
    }

    /// `l(w) = |-Delta^+ ∩ w Delta^+|`.
    pub fn length(&self, rs: &RootSystem) -> usize {
        let npos = rs.num_positive();
        self.perm[..npos]
            .iter()
            .filter(|&&img| img as usize >= npos)
            .count()
    }

    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    /// `tau_R(w) = {alpha in Pi : w(alpha) in Delta^+}` (0-based nodes).
    pub fn tau_r(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.rank())
            .filter(|&i| rs.is_positive(self.apply(i)))
            .collect()
    }

    /// `tau_L(w) = {alpha in Pi : w^{-1}(alpha) in Delta^+}` (0-based nodes).
    pub fn tau_l(&self, rs: &RootSystem) -> Vec<usize> {
        let mut pre = vec![0usize; rs.rank()];
        for (b, &img) in self.perm.iter().enumerate() {
            if (img as usize) < rs.rank() {
                pre[img as usize] = b;
            }
        }
        (0..rs.rank()).filter(|&i| rs.is_positive(pre[i])).collect()
    }

    /// Linear action on weights.
    pub fn act(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(lambda.clone(), |acc, &i| rs.reflect_weight(i as usize, &acc))
    }

    /// Dot action `w(lambda + rho) - rho`.
    pub fn dot(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        let rho = rs.rho();
        &self.act(rs, &(lambda + &rho)) - &rho
    }
}

/// Coxeter exponent `m(i, j)` read from the Cartan matrix.
pub fn coxeter_m(rs: &RootSystem, i: usize, j: usize) -> u32 {
    if i == j {
        return 1;
    }
    match rs.cartan()[i][j] * rs.cartan()[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        b => unreachable!("bond {b}"),
    }
}

/// Which bound to enforce on group enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumBound {
    /// `|W| <= 51,840`.
    #[default]
    Default,
    /// `|W| <= 2,903,040` (E7); explicit opt-in.
    Extended,
}

impl EnumBound {
    pub fn limit(self) -> u128 {
        match self {
            EnumBound::Default => DEFAULT_BOUND,
            EnumBound::Extended => EXTENDED_BOUND,
        }
    }

    pub fn check(self, rs: &RootSystem) -> Result<()> {
        let order = rs.dtype().weyl_order();
        if order > self.limit() {
            return Err(Error::GroupTooLarge {
                order,
                bound: self.limit(),
            });
        }
        Ok(())
    }
}

/// Breadth-first enumeration of `W` by length, each level sorted by reduced
/// word. Only one level is held in memory at a time.
pub struct Enumeration<'a> {
    rs: &'a RootSystem,
    level: Vec<WeylElement>,
    pos: usize,
    exec: Exec,
}

impl Iterator for Enumeration<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        if self.pos == self.level.len() {
            self.level = next_level(self.rs, &self.level, self.exec);
            self.pos = 0;
        }
        let item = self.level.get(self.pos).cloned();
        self.pos += 1;
        item
    }
}

fn next_level(rs: &RootSystem, level: &[WeylElement], exec: Exec) -> Vec<WeylElement> {
    let n = rs.rank();
    let candidates: Vec<Vec<WeylElement>> = exec.map(level, |w| {
        let mut pre = vec![0usize; n];
        for (b, &img) in w.perm.iter().enumerate() {
            if (img as usize) < n {
                pre[img as usize] = b;
            }
        }
        (0..n)
            .filter(|&i| rs.is_positive(pre[i]))
            .map(|i| {
                let s = rs.reflection_perm(i);
                let perm = w.perm.iter().map(|&x| s[x as usize]).collect();
                let mut word = Vec::with_capacity(w.word.len() + 1);
                word.push(i as u8);
                word.extend_from_slice(&w.word);
                WeylElement { perm, word }
            })
            .collect()
    });
    let mut best: HashMap<Vec<u16>, WeylElement> = HashMap::new();
    for c in candidates.into_iter().flatten() {
        let key = c.key(n).to_vec();
        match best.get_mut(&key) {
            Some(cur) if cur.word <= c.word => {}
            Some(cur) => *cur = c,
            None => {
                best.insert(key, c);
            }
        }
    }
    let mut out: Vec<WeylElement> = best.into_values().collect();
    out.sort_by(|a, b| a.word.cmp(&b.word));
    out
}

/// Enumerates `W` in deterministic order (by length, then reduced word).
pub fn enumerate(rs: &RootSystem, bound: EnumBound) -> Result<Enumeration<'_>> {
    enumerate_with(rs, bound, Exec::default())
}

pub fn enumerate_with(rs: &RootSystem, bound: EnumBound, exec: Exec) -> Result<Enumeration<'_>> {
    bound.check(rs)?;
    Ok(Enumeration {
        rs,
        level: vec![WeylElement::identity(rs)],
        pos: 0,
        exec,
    })
}

/// All of `W`, in enumeration order.
pub fn elements(rs: &RootSystem, bound: EnumBound, exec: Exec) -> Result<Vec<WeylElement>> {
    Ok(enumerate_with(rs, bound, exec)?.collect())
}

/// Canonical label of the dot-orbit `W . lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CentralCharacter {
    /// The orbit point `mu` with `mu + rho` in the closed dominant chamber.
    /// For integral `lambda` this is the unique rho-dominant representative.
    pub rep: Weight,
}

/// Moves `mu` into the closed dominant chamber by simple reflections.
pub fn dominant_chamber(rs: &RootSystem, mu: &Weight) -> Weight {
    let mut cur = mu.clone();
    while let Some(i) = (0..rs.rank()).find(|&i| cur.0[i].is_negative()) {
        cur = rs.reflect_weight(i, &cur);
    }
    cur
}

pub fn central_character(rs: &RootSystem, lambda: &Weight) -> CentralCharacter {
    let rho = rs.rho();
    CentralCharacter {
        rep: &dominant_chamber(rs, &(lambda + &rho)) - &rho,
    }
}

pub fn same_central_character(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    central_character(rs, lambda) == central_character(rs, mu)
}

/// The dot-orbit of `lambda` by breadth-first search over simple
/// reflections; `None` if it has more than `cap` points.
pub fn dot_orbit(rs: &RootSystem, lambda: &Weight, cap: usize) -> Option<Vec<Weight>> {
    let rho = rs.rho();
    let start = lambda + &rho;
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..rs.rank() {
            let nu = rs.reflect_weight(i, &mu);
            if seen.insert(nu.clone()) {
                if seen.len() > cap {
                    return None;
                }
                order.push(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    Some(order.iter().map(|m| m - &rho).collect())
}

/// `W_lambda = {e}` for the dot action, i.e. `lambda + rho` lies on no wall.
pub fn stabilizer_is_trivial(rs: &RootSystem, lambda: &Weight) -> bool {
    let shifted = lambda + &rs.rho();
    (0..rs.num_positive()).all(|a| !rs.pairing_idx(&shifted, a).is_zero())
}

/// The unique simple root with three neighbours, if any.
pub fn trivalent_node(rs: &RootSystem) -> Option<usize> {
    (0..rs.rank()).find(|&i| rs.neighbors(i).len() == 3)
}

/// Shortest Dynkin-diagram path from `from` to `to`, inclusive.
pub fn diagram_path(rs: &RootSystem, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; rs.rank()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for u in rs.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

/// The elements `w_alpha = s_{alpha_n} ... s_{alpha_1} s_{alpha_0}` along the
/// shortest path `alpha_0, ..., alpha_n = alpha` from the trivalent node,
/// with `s_{alpha_0}` acting first. Indexed by simple root.
pub fn min_cell(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    let center = trivalent_node(rs).ok_or_else(|| Error::NoTrivalentNode(rs.dtype().to_string()))?;
    Ok((0..rs.rank())
        .map(|a| {
            let path = diagram_path(rs, center, a);
            let word: Vec<usize> = path.iter().rev().copied().collect();
            WeylElement::from_word(rs, &word)
        })
        .collect())
}
