//! Finite root systems of all simple types.
//!
//! A [`RootSystem`] is built from a symmetric integer Gram matrix on the
//! simple roots, normalized so that short roots have squared length 2
//! (so for simply-laced types every root has length 2; ratios are all that
//! any formula here depends on). Node numbering follows Bourbaki:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        (n short)
//! C_n  1 - 2 - ... - (n-1) <= n        (n long)
//! D_n  1 - 2 - ... - (n-2) < (n-1), n
//! E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//! F_4  1 - 2 => 3 - 4                  (1, 2 long)
//! G_2  1 <= 2                          (1 short)
//! ```
//!
//! The Cartan matrix uses `cartan[i][j] = <alpha_j, alpha_i^vee>`, so that
//! `diag(symmetrizer) * cartan` is the (symmetric) Gram matrix.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple Dynkin type such as `D4` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (ok, bounds) = match family {
            Family::A => (rank >= 1, "A requires rank >= 1"),
            Family::B => (rank >= 2, "B requires rank >= 2"),
            Family::C => (rank >= 2, "C requires rank >= 2"),
            Family::D => (rank >= 4, "D requires rank >= 4"),
            Family::E => ((6..=8).contains(&rank), "E requires rank 6, 7 or 8"),
            Family::F => (rank == 4, "F requires rank 4"),
            Family::G => (rank == 2, "G requires rank 2"),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family,
                rank,
                bounds,
            })
        }
    }

    pub fn simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Type of the Langlands dual (B and C swap).
    pub fn dual(self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        Self { family, ..self }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Dimension of the simple Lie algebra, from the classical formulas.
    pub fn lie_dim(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Every simple type of rank at most `max_rank`, ordered by (family, rank).
    pub fn all_up_to(max_rank: usize) -> Vec<Self> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        families
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| Self::new(f, r).ok()))
            .collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(family, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|c| -c).collect())
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    /// Unit vector: the fundamental weight of node `i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = Q::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: Q) -> Self {
        Self(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Integer coordinates, when integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.0.iter().map(|c| c.to_integer()).collect())
    }

    /// Parses a comma-separated list of integers or fractions `p/q`.
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        s.split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self)
    }
}

pub fn parse_rational(t: &str) -> std::result::Result<Q, String> {
    let err = || format!("invalid rational {t:?}");
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            if q == 0 {
                return Err(err());
            }
            Ok(Q::new(p, q))
        }
        None => t.parse::<i64>().map(Q::from_integer).map_err(|_| err()),
    }
}

pub fn q_to_string(q: &Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(q_to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(q_to_string).collect();
        parts.serialize(s)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Immutable exact model of a root system with a fixed positive system.
///
/// Roots are indexed so that positives come first, ordered by height and then
/// reverse-lexicographically (so simple root `i` has index `i`), and the
/// negative of root `k` has index `k + num_positive()`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dtype: DynkinType,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<RootVec>,
    norms: Vec<i64>,
    npos: usize,
    index: HashMap<RootVec, usize>,
    highest: usize,
    fundamental: Vec<Vec<Q>>,
    reflections: Vec<Vec<u16>>,
}

fn chain_gram(n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = 2;
        if i + 1 < n {
            g[i][i + 1] = -1;
            g[i + 1][i] = -1;
        }
    }
    g
}

fn link(g: &mut [Vec<i64>], i: usize, j: usize, v: i64) {
    g[i][j] = v;
    g[j][i] = v;
}

fn gram_for(dtype: DynkinType) -> Vec<Vec<i64>> {
    let n = dtype.rank;
    match dtype.family {
        Family::A => chain_gram(n),
        Family::B => {
            let mut g = vec![vec![0; n]; n];
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
                if i + 1 < n {
                    link(&mut g, i, i + 1, -2);
                }
            }
            g
        }
        Family::C => {
            let mut g = chain_gram(n);
            g[n - 1][n - 1] = 4;
            link(&mut g, n - 2, n - 1, -2);
            g
        }
        Family::D => {
            let mut g = chain_gram(n);
            link(&mut g, n - 2, n - 1, 0);
            link(&mut g, n - 3, n - 1, -1);
            g
        }
        Family::E => {
            // 1 - 3 - 4 - 5 - ... with 2 attached to 4 (0-based: 0-2-3-4..., 1-3).
            let mut g = vec![vec![0; n]; n];
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            g
        }
        Family::F => vec![
            vec![4, -2, 0, 0],
            vec![-2, 4, -2, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Family::G => vec![vec![2, -3], vec![-3, 6]],
    }
}

impl RootSystem {
    /// Builds the root system of a simple type.
    pub fn build(dtype: DynkinType) -> Result<Self> {
        let dtype = DynkinType::new(dtype.family, dtype.rank)?;
        Ok(Self::from_gram(dtype, gram_for(dtype)))
    }

    /// Shorthand for `build(type.parse()?)`.
    pub fn of(name: &str) -> Result<Self> {
        Self::build(name.parse()?)
    }

    fn from_gram(dtype: DynkinType, gram: Vec<Vec<i64>>) -> Self {
        let n = gram.len();
        let symmetrizer: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let dot = |a: &[i64], b: &[i64]| -> i64 {
            (0..n)
                .map(|i| a[i] * (0..n).map(|j| gram[i][j] * b[j]).sum::<i64>())
                .sum()
        };

        // Positive roots, level by level in height, via root strings.
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let mut seen: HashSet<Vec<i64>> = (0..n).map(unit).collect();
        let mut positives: Vec<Vec<i64>> = (0..n).map(unit).collect();
        let mut frontier = positives.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    let mut p = 0;
                    loop {
                        let mut v = beta.clone();
                        v[i] -= p + 1;
                        if seen.contains(&v) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = 2 * dot(beta, &unit(i)) / gram[i][i];
                    if p - pairing > 0 {
                        let mut gamma = beta.clone();
                        gamma[i] += 1;
                        if seen.insert(gamma.clone()) {
                            next.push(gamma);
                        }
                    }
                }
            }
            positives.extend(next.iter().cloned());
            frontier = next;
        }
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positives.len();
        let mut roots: Vec<RootVec> = positives.into_iter().map(RootVec).collect();
        let negs: Vec<RootVec> = roots.iter().map(|r| -r).collect();
        roots.extend(negs);
        let norms: Vec<i64> = roots.iter().map(|r| dot(&r.0, &r.0)).collect();
        let index: HashMap<RootVec, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let highest = npos - 1;

        let cartan_t: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(cartan[j][i])).collect())
            .collect();
        let fundamental = linalg::inverse(&cartan_t).expect("Cartan matrix is invertible");

        let reflections = (0..roots.len())
            .map(|a| {
                roots
                    .iter()
                    .map(|b| {
                        let c = 2 * dot(&b.0, &roots[a].0) / norms[a];
                        let img =
                            RootVec(b.0.iter().zip(&roots[a].0).map(|(x, y)| x - c * y).collect());
                        index[&img] as u16
                    })
                    .collect()
            })
            .collect();

        Self {
            dtype,
            gram,
            cartan,
            symmetrizer,
            roots,
            norms,
            npos,
            index,
            highest,
            fundamental,
            reflections,
        }
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RootVec {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    /// Index of `-root(i)`.
    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn index_of(&self, r: &RootVec) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of `a + b` when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let v = RootVec(
            self.roots[a]
                .0
                .iter()
                .zip(&self.roots[b].0)
                .map(|(x, y)| x + y)
                .collect(),
        );
        self.index_of(&v)
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.roots[self.highest]
    }

    /// Index of the lowest root `-theta`.
    pub fn lowest_index(&self) -> usize {
        self.negate(self.highest)
    }

    /// Squared length of root `i` (short roots have length 2).
    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.norms[i] == self.norms[self.highest]
    }

    /// Symmetric form `(a, b)` on simple-root coordinate vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| a[i] * (0..n).map(|j| self.gram[i][j] * b[j]).sum::<i64>())
            .sum()
    }

    /// The form rescaled so that long roots have squared length 2.
    pub fn form(&self, a: &RootVec, b: &RootVec) -> Q {
        Q::new(2 * self.inner(&a.0, &b.0), self.norms[self.highest])
    }

    /// `<root(b), root(a)^vee>`, always an integer.
    pub fn root_pairing(&self, b: usize, a: usize) -> i64 {
        2 * self.inner(&self.roots[b].0, &self.roots[a].0) / self.norms[a]
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// `<lambda, alpha^vee>` for a root given by index.
    pub fn pairing_idx(&self, lambda: &Weight, a: usize) -> Q {
        let alpha = &self.roots[a].0;
        let num: Q = (0..self.rank())
            .map(|j| lambda.0[j] * Q::from_integer(alpha[j] * self.gram[j][j]))
            .sum();
        num / Q::from_integer(self.norms[a])
    }

    /// `<lambda, alpha^vee>` for a root given by coordinates.
    pub fn pairing(&self, lambda: &Weight, alpha: &RootVec) -> Result<Q> {
        self.check_weight(lambda)?;
        let a = self.index_of(alpha).ok_or(Error::NotARoot)?;
        Ok(self.pairing_idx(lambda, a))
    }

    /// The root `i` as a weight (fundamental-weight coordinates).
    pub fn root_weight(&self, i: usize) -> Weight {
        let r = &self.roots[i].0;
        Weight(
            (0..self.rank())
                .map(|k| Q::from_integer((0..self.rank()).map(|j| r[j] * self.cartan[k][j]).sum()))
                .collect(),
        )
    }

    /// Converts fundamental-weight coordinates to simple-root coordinates.
    pub fn weight_to_simple(&self, lambda: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|i| lambda.0[i] * self.fundamental[i][j]).sum())
            .collect()
    }

    /// The fundamental weights in simple-root coordinates.
    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![Q::one(); self.rank()])
    }

    /// Linear reflection of a weight in root `a`.
    pub fn reflect_weight(&self, a: usize, lambda: &Weight) -> Weight {
        let c = self.pairing_idx(lambda, a);
        if c.is_zero() {
            return lambda.clone();
        }
        let alpha = self.root_weight(a);
        lambda - &alpha.scale(c)
    }

    /// Permutation of root indices induced by the reflection in root `a`.
    pub fn reflection_perm(&self, a: usize) -> &[u16] {
        &self.reflections[a]
    }

    /// `Delta_lambda`: roots with `<lambda + rho, alpha^vee> = 0`.
    pub fn singular_set(&self, lambda: &Weight) -> Vec<usize> {
        let shifted = lambda + &self.rho();
        (0..self.num_roots())
            .filter(|&a| self.pairing_idx(&shifted, a).is_zero())
            .collect()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    pub fn is_rho_dominant(&self, lambda: &Weight) -> bool {
        (lambda + &self.rho()).is_dominant()
    }

    pub fn is_integral(&self, lambda: &Weight) -> bool {
        lambda.is_integral()
    }

    /// Dimension of the Lie algebra: `|Delta| + rank`.
    pub fn lie_dim(&self) -> usize {
        self.num_roots() + self.rank()
    }

    /// `1 + <rho, theta^vee>`.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self.pairing_idx(&self.rho(), self.highest).to_integer()
    }

    /// Dimension of the minimal nonzero nilpotent orbit:
    /// `#{alpha : <alpha, theta^vee> = 1} + 2`.
    pub fn min_orbit_dim(&self) -> usize {
        (0..self.num_roots())
            .filter(|&a| self.root_pairing(a, self.highest) == 1)
            .count()
            + 2
    }

    /// Edges `(i, j, bond)` of the Dynkin diagram with `i < j`, where `bond`
    /// is `cartan[i][j] * cartan[j][i]` (1, 2 or 3).
    pub fn dynkin_edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.cartan[i][j] * self.cartan[j][i];
                if b != 0 {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// The Langlands dual: the root system of the coroots. Node `i` of the
    /// dual is the coroot of simple root `i`, so the Cartan matrix is the
    /// transpose (the node numbering of dual F4/G2 is therefore reversed
    /// relative to Bourbaki).
    pub fn dual(&self) -> RootSystem {
        let n = self.rank();
        let gmax = (0..n).map(|i| self.gram[i][i]).max().unwrap_or(2);
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let num = 2 * self.gram[i][j] * gmax;
                        let den = self.gram[i][i] * self.gram[j][j];
                        debug_assert_eq!(num % den, 0);
                        num / den
                    })
                    .collect()
            })
            .collect();
        RootSystem::from_gram(self.dtype.dual(), gram)
    }

    /// Coordinates of `root(i)^vee` in the basis of simple coroots, i.e. its
    /// coordinates as a root of [`RootSystem::dual`].
    pub fn coroot(&self, i: usize) -> RootVec {
        let r = &self.roots[i].0;
        RootVec(
            (0..self.rank())
                .map(|j| r[j] * self.gram[j][j] / self.norms[i])
                .collect(),
        )
    }

    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            schema: "lieblocks.rootsys/1",
            dtype: self.dtype,
            rank: self.rank(),
            positive_roots: self.npos,
            highest_root: self.highest_root().clone(),
            dim_g: self.lie_dim(),
            dual_coxeter_number: self.dual_coxeter_number(),
            min_orbit_dim: self.min_orbit_dim(),
            cartan: self.cartan.clone(),
        }
    }
}

/// JSON summary of a root system.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemSummary {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub rank: usize,
    pub positive_roots: usize,
    pub highest_root: RootVec,
    pub dim_g: usize,
    pub dual_coxeter_number: i64,
    pub min_orbit_dim: usize,
    pub cartan: Vec<Vec<i64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closure of the simple roots under simple reflections, computed
    /// directly with the reflection formula (independent of root strings).
    fn closure_count(rs: &RootSystem) -> usize {
        let n = rs.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        while let Some(v) = stack.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                let c = 2 * rs.inner(&v, &e) / rs.gram()[i][i];
                let mut w = v.clone();
                w[i] -= c;
                stack.push(w);
            }
        }
        seen.len()
    }

    #[test]
    fn small_types_match_closure_oracle() {
        for (name, count) in [("A2", 6), ("B2", 8), ("G2", 12), ("F4", 48), ("E6", 72)] {
            let rs = RootSystem::of(name).unwrap();
            assert_eq!(rs.num_roots(), count, "{name}");
            assert_eq!(closure_count(&rs), count, "{name}");
        }
        let a2 = RootSystem::of("A2").unwrap();
        assert_eq!(a2.highest_root(), &RootVec(vec![1, 1]));
        assert_eq!(RootSystem::of("B2").unwrap().lie_dim(), 10);
    }

    #[test]
    fn rank_bounds_are_enforced() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3"] {
            assert!(
                matches!(bad.parse::<DynkinType>(), Err(Error::InvalidRank { .. })),
                "{bad}"
            );
        }
        assert!(matches!("X3".parse::<DynkinType>(), Err(Error::BadType(_))));
    }

    #[test]
    fn dimensions_and_highest_roots() {
        for t in DynkinType::all_up_to(8) {
            let rs = RootSystem::build(t).unwrap();
            assert_eq!(rs.lie_dim(), t.lie_dim(), "{t}");
            let theta = rs.highest_index();
            for i in 0..rs.rank() {
                assert!(rs.root_pairing(theta, i) >= 0, "{t}");
            }
            // every root is dominated by theta
            for r in &rs.roots()[..rs.num_positive()] {
                assert!(r.0.iter().zip(&rs.highest_root().0).all(|(a, b)| a <= b));
            }
        }
    }

    #[test]
    fn rho_and_fundamental_weight_pairings() {
        for name in ["A3", "B3", "C4", "D5", "F4", "G2", "E7"] {
            let rs = RootSystem::of(name).unwrap();
            let n = rs.rank();
            for a in 0..n {
                assert_eq!(rs.pairing_idx(&rs.rho(), a), Q::one());
                for b in 0..n {
                    let w = Weight::fundamental(n, b);
                    let expect = if a == b { Q::one() } else { Q::zero() };
                    assert_eq!(rs.pairing_idx(&w, a), expect);
                }
            }
            // rho = half the sum of positive roots
            let sum: Vec<Q> = (0..n)
                .map(|j| {
                    Q::new(
                        rs.roots()[..rs.num_positive()].iter().map(|r| r.0[j]).sum(),
                        2,
                    )
                })
                .collect();
            assert_eq!(rs.weight_to_simple(&rs.rho()), sum, "{name}");
        }
    }

    #[test]
    fn b2_half_omega1_plus_rho() {
        let rs = RootSystem::of("B2").unwrap();
        let lambda = &Weight(vec![Q::new(1, 2), Q::zero()]) + &rs.rho();
        assert_eq!(rs.pairing(&lambda, &RootVec(vec![1, 0])).unwrap(), Q::new(3, 2));
        assert_eq!(
            rs.pairing(&lambda, &RootVec(vec![2, 1])).unwrap_err(),
            Error::NotARoot
        );
        // bilinear in lambda
        let a = rs.pairing(&lambda, &RootVec(vec![1, 2])).unwrap();
        let b = rs.pairing(&lambda.scale(Q::from_integer(3)), &RootVec(vec![1, 2])).unwrap();
        assert_eq!(b, a * Q::from_integer(3));
    }

    #[test]
    fn dual_swaps_b_and_c() {
        let b3 = RootSystem::of("B3").unwrap();
        let d = b3.dual();
        assert_eq!(d.dtype().to_string(), "C3");
        assert_eq!(d.cartan(), RootSystem::of("C3").unwrap().cartan());
        assert_eq!(RootSystem::of("D4").unwrap().dual().dtype().to_string(), "D4");
        let f4 = RootSystem::of("F4").unwrap();
        assert_eq!(f4.dual().dtype().to_string(), "F4");
        for name in ["B4", "C3", "F4", "G2", "E6"] {
            let rs = RootSystem::of(name).unwrap();
            assert_eq!(rs.dual().dual().cartan(), rs.cartan(), "{name}");
            let dual = rs.dual();
            for i in 0..rs.num_roots() {
                assert!(dual.index_of(&rs.coroot(i)).is_some(), "{name}");
            }
        }
    }

    #[test]
    fn singular_sets() {
        let d4 = RootSystem::of("D4").unwrap();
        assert!(d4.singular_set(&Weight::zero(4)).is_empty());
        // -omega of the trivalent node (node 2, 0-based 1)
        let lam = -&Weight::fundamental(4, 1);
        let s = d4.singular_set(&lam);
        assert_eq!(s.len(), 2);
        assert!(s.contains(&1) && s.contains(&d4.negate(1)));
        let minus_rho = -&d4.rho();
        assert_eq!(d4.singular_set(&minus_rho).len(), d4.num_roots());
    }

    #[test]
    fn min_orbit_dims() {
        let expect = [("F4", 16), ("E8", 58), ("D4", 10), ("E6", 22), ("G2", 6), ("A1", 2)];
        for (name, d) in expect {
            assert_eq!(RootSystem::of(name).unwrap().min_orbit_dim(), d, "{name}");
        }
    }

    #[test]
    fn dominance_flags() {
        let rs = RootSystem::of("B2").unwrap();
        let zero = Weight::zero(2);
        assert!(rs.is_dominant(&zero) && rs.is_rho_dominant(&zero) && rs.is_integral(&zero));
        let m = -&Weight::fundamental(2, 0);
        assert!(!rs.is_dominant(&m) && rs.is_rho_dominant(&m) && rs.is_integral(&m));
        let h = Weight(vec![Q::new(1, 2), Q::zero()]);
        assert!(!rs.is_integral(&h));
    }

    #[test]
    fn parse_weights() {
        let w = Weight::parse("1/2, 0,-3,4/6").unwrap();
        assert_eq!(w.0, vec![Q::new(1, 2), Q::zero(), Q::from_integer(-3), Q::new(2, 3)]);
        assert!(Weight::parse("1/0").is_err());
        assert!(Weight::parse("x").is_err());
        assert_eq!(w.to_string(), "(1/2,0,-3,2/3)");
    }
}
