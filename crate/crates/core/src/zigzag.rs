//! The zigzag algebra of a graph as an explicit structure-constant table.
//!
//! Basis: idempotents `pi:v`, socle elements `pi0:v`, and one arrow
//! `phi:u>v` per ordered adjacent pair. An arrow `phi:u>v` has source `u`
//! and target `v`; products are written right to left, so `x * y` is zero
//! unless `src(x) == tgt(y)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg;
use crate::rootsys::RootSystem;
use crate::Q;

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::BadVertex(x));
                }
            }
            if u == v {
                return Err(Error::BadGraph(format!("loop at vertex {}", u + 1)));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::BadGraph(format!("repeated edge {}-{}", u + 1, v + 1)));
            }
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self { n, edges, adj })
    }

    /// The Dynkin diagram of `rs`, bond multiplicities forgotten.
    pub fn dynkin(rs: &RootSystem) -> Self {
        let edges: Vec<(usize, usize)> = rs.dynkin_edges().iter().map(|&(i, j, _)| (i, j)).collect();
        Self::new(rs.rank(), &edges).expect("Dynkin diagrams are simple graphs")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.adjacent(u, v) as i64).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_parents(0).iter().all(|p| p.is_some())
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n
    }

    /// Whether this is the diagram of type D or E.
    pub fn is_de_diagram(&self) -> bool {
        let branch: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 3).collect();
        self.is_tree() && branch.len() == 1 && self.degree(branch[0]) == 3 && {
            let c = branch[0];
            let mut arms: Vec<usize> = self.adj[c].iter().map(|&s| self.arm_length(c, s)).collect();
            arms.sort_unstable();
            matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2..=4])
        }
    }

    fn arm_length(&self, from: usize, start: usize) -> usize {
        let (mut prev, mut cur, mut len) = (from, start, 1);
        while let Some(&next) = self.adj[cur].iter().find(|&&k| k != prev) {
            prev = cur;
            cur = next;
            len += 1;
        }
        len
    }

    fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if parent[v].is_none() {
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parent
    }
}

/// A basis element of the zigzag algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Pi(usize),
    Pi0(usize),
    Phi(usize, usize),
}

impl Basis {
    pub fn src(self) -> usize {
        match self {
            Basis::Pi(v) | Basis::Pi0(v) | Basis::Phi(v, _) => v,
        }
    }

    pub fn tgt(self) -> usize {
        match self {
            Basis::Pi(v) | Basis::Pi0(v) | Basis::Phi(_, v) => v,
        }
    }

    /// Path-length grading: 0, 2, 1.
    pub fn degree(self) -> usize {
        match self {
            Basis::Pi(_) => 0,
            Basis::Phi(..) => 1,
            Basis::Pi0(_) => 2,
        }
    }

    /// `pi:v`, `pi0:v`, `phi:u>v` with 1-based vertices.
    pub fn label(self) -> String {
        match self {
            Basis::Pi(v) => format!("pi:{}", v + 1),
            Basis::Pi0(v) => format!("pi0:{}", v + 1),
            Basis::Phi(u, v) => format!("phi:{}>{}", u + 1, v + 1),
        }
    }
}

/// An algebra element in basis coordinates.
pub type Elem = Vec<Q>;

/// The zigzag algebra, optionally with the arrow-loop products scaled:
/// `phi:b>a * phi:a>b = c(a,b) pi0:a`.
#[derive(Debug, Clone)]
pub struct ZigzagAlgebra {
    graph: Graph,
    basis: Vec<Basis>,
    index: HashMap<Basis, usize>,
    scale: BTreeMap<(usize, usize), Q>,
}

impl ZigzagAlgebra {
    /// The normalized algebra (all loop constants 1).
    pub fn new(graph: Graph) -> Self {
        Self::scaled(graph, &BTreeMap::new()).expect("unit scalars")
    }

    /// The algebra with `phi:b>a * phi:a>b = c[(a,b)] pi0:a`; missing pairs
    /// default to 1.
    pub fn scaled(graph: Graph, c: &BTreeMap<(usize, usize), Q>) -> Result<Self> {
        let mut basis: Vec<Basis> = (0..graph.n).map(Basis::Pi).collect();
        basis.extend((0..graph.n).map(Basis::Pi0));
        let mut scale = BTreeMap::new();
        for &(u, v) in &graph.edges {
            for (a, b) in [(u, v), (v, u)] {
                basis.push(Basis::Phi(a, b));
                let k = c.get(&(a, b)).copied().unwrap_or_else(Q::one);
                if k.is_zero() {
                    return Err(Error::BadGraph(format!("zero scalar on {}>{}", a + 1, b + 1)));
                }
                scale.insert((a, b), k);
            }
        }
        for &(a, b) in c.keys() {
            if !graph.adjacent(a, b) {
                return Err(Error::BadGraph(format!("{} and {} are not adjacent", a + 1, b + 1)));
            }
        }
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Ok(Self {
            graph,
            basis,
            index,
            scale,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Basis] {
        &self.basis
    }

    pub fn index_of(&self, b: Basis) -> Option<usize> {
        self.index.get(&b).copied()
    }

    /// Product of two basis elements: a scalar multiple of a basis element,
    /// or zero.
    pub fn mult(&self, x: usize, y: usize) -> Option<(usize, Q)> {
        let (bx, by) = (self.basis[x], self.basis[y]);
        if bx.src() != by.tgt() {
            return None;
        }
        match (bx, by) {
            (Basis::Pi(_), _) => Some((y, Q::one())),
            (_, Basis::Pi(_)) => Some((x, Q::one())),
            (Basis::Phi(g, t), Basis::Phi(a, b)) if b == g && t == a => {
                Some((self.index[&Basis::Pi0(a)], self.scale[&(a, b)]))
            }
            _ => None,
        }
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = vec![Q::zero(); self.dim()];
        e[i] = Q::one();
        e
    }

    /// `sum_v pi:v`.
    pub fn one(&self) -> Elem {
        let mut e = vec![Q::zero(); self.dim()];
        for v in 0..self.graph.n {
            e[self.index[&Basis::Pi(v)]] = Q::one();
        }
        e
    }

    pub fn multiply(&self, x: &[Q], y: &[Q]) -> Elem {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if let Some((k, c)) = self.mult(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// `(xy)z = x(yz)` for every basis triple.
    pub fn is_associative(&self, exec: Exec) -> bool {
        let d = self.dim();
        exec.all_range(d, |i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let left = self.mult(i, j).and_then(|(ij, a)| self.mult(ij, k).map(|(r, b)| (r, a * b)));
                    let right = self.mult(j, k).and_then(|(jk, a)| self.mult(i, jk).map(|(r, b)| (r, a * b)));
                    left == right
                })
            })
        })
    }

    /// `1 * b = b * 1 = b` for every basis element.
    pub fn has_identity(&self) -> bool {
        let one = self.one();
        (0..self.dim()).all(|i| {
            let b = self.basis_elem(i);
            self.multiply(&one, &b) == b && self.multiply(&b, &one) == b
        })
    }

    /// Entry `(a, b)` is `dim pi:b A pi:a`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.graph.n;
        let mut m = vec![vec![0i64; n]; n];
        for b in &self.basis {
            m[b.src()][b.tgt()] += 1;
        }
        m
    }

    /// Basis indices of positive degree; spans the radical.
    pub fn radical(&self) -> BTreeSet<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].degree() > 0).collect()
    }

    /// `span{ x y : x in s, y in t }` for spans of basis elements.
    fn product_span(&self, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> BTreeSet<usize> {
        s.iter()
            .flat_map(|&i| t.iter().filter_map(move |&j| self.mult(i, j).map(|(k, _)| k)))
            .collect()
    }

    /// `[dim A, dim rad, dim rad², dim rad³]`.
    pub fn radical_series(&self) -> [usize; 4] {
        let r1 = self.radical();
        let r2 = self.product_span(&r1, &r1);
        let r3 = self.product_span(&r2, &r1);
        [self.dim(), r1.len(), r2.len(), r3.len()]
    }

    /// The projective `A pi:a`.
    pub fn projective(&self, a: usize) -> Result<ZModule> {
        if a >= self.graph.n {
            return Err(Error::BadVertex(a));
        }
        let cols: Vec<usize> = (0..self.dim()).filter(|&i| self.basis[i].src() == a).collect();
        let pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let m = cols.len();
        let action = (0..self.dim())
            .map(|x| {
                let mut mat = vec![vec![Q::zero(); m]; m];
                for (c, &i) in cols.iter().enumerate() {
                    if let Some((k, q)) = self.mult(x, i) {
                        mat[pos[&k]][c] = q;
                    }
                }
                mat
            })
            .collect();
        Ok(ZModule {
            weights: cols.iter().map(|&i| self.basis[i].tgt()).collect(),
            labels: cols.iter().map(|&i| self.basis[i].label()).collect(),
            action,
            num_vertices: self.graph.n,
        })
    }

    /// The one-dimensional simple module at `a`.
    pub fn simple(&self, a: usize) -> Result<ZModule> {
        if a >= self.graph.n {
            return Err(Error::BadVertex(a));
        }
        let action = (0..self.dim())
            .map(|x| {
                let v = if self.basis[x] == Basis::Pi(a) { Q::one() } else { Q::zero() };
                vec![vec![v]]
            })
            .collect();
        Ok(ZModule {
            weights: vec![a],
            labels: vec![format!("s:{}", a + 1)],
            action,
            num_vertices: self.graph.n,
        })
    }

    /// Entry `(a, b)`: multiplicity of `S_b` in `rad P_a / rad² P_a`.
    pub fn ext1_dimensions(&self) -> Vec<Vec<usize>> {
        let n = self.graph.n;
        let rad = self.radical();
        (0..n)
            .map(|a| {
                let p: BTreeSet<usize> = (0..self.dim()).filter(|&i| self.basis[i].src() == a).collect();
                let rp = self.product_span(&rad, &p);
                let r2p = self.product_span(&rad, &rp);
                let mut row = vec![0; n];
                for i in rp.difference(&r2p) {
                    row[self.basis[*i].tgt()] += 1;
                }
                row
            })
            .collect()
    }

    /// `form(x) = sum of pi0 coefficients`; entry `(i, j)` is `form(b_i b_j)`.
    pub fn frobenius_matrix(&self) -> Vec<Vec<Q>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| match self.mult(i, j) {
                        Some((k, q)) if matches!(self.basis[k], Basis::Pi0(_)) => q,
                        _ => Q::zero(),
                    })
                    .collect()
            })
            .collect()
    }

    /// The Frobenius pairing is symmetric and nondegenerate.
    pub fn frobenius_check(&self) -> bool {
        let m = self.frobenius_matrix();
        let d = self.dim();
        let symmetric = (0..d).all(|i| (0..d).all(|j| m[i][j] == m[j][i]));
        symmetric && !linalg::determinant(&m).is_zero()
    }

    /// Tab-separated multiplication table.
    pub fn tsv(&self) -> String {
        let mut out = String::from("left\tright\tproduct\n");
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let prod = match self.mult(i, j) {
                    None => "0".to_string(),
                    Some((k, q)) if q.is_one() => self.basis[k].label(),
                    Some((k, q)) => format!("{}*{}", crate::rootsys::q_to_string(&q), self.basis[k].label()),
                };
                let _ = writeln!(out, "{}\t{}\t{}", self.basis[i].label(), self.basis[j].label(), prod);
            }
        }
        out
    }

    /// Summary of every structural check.
    pub fn report(&self, exec: Exec) -> ZigzagReport {
        let n = self.graph.n;
        let cartan = self.cartan_matrix();
        let adj = self.graph.adjacency();
        let expected: Vec<Vec<i64>> = (0..n)
            .map(|u| (0..n).map(|v| adj[u][v] + 2 * (u == v) as i64).collect())
            .collect();
        let ext1 = self.ext1_dimensions();
        ZigzagReport {
            schema: "lieblocks.zigzag/1",
            vertices: n,
            edges: self.graph.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
            is_de_diagram: self.graph.is_de_diagram(),
            dim: self.dim(),
            basis: self.basis.iter().map(|b| b.label()).collect(),
            associative: self.is_associative(exec),
            identity: self.has_identity(),
            cartan_matrix_is_2i_plus_adjacency: cartan == expected,
            cartan_matrix: cartan,
            radical_series: self.radical_series(),
            ext1_diagonal_zero: (0..n).all(|a| ext1[a][a] == 0),
            ext1,
            frobenius: self.frobenius_check(),
        }
    }
}

/// JSON report for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ZigzagReport {
    pub schema: &'static str,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_de_diagram: bool,
    pub dim: usize,
    pub basis: Vec<String>,
    pub associative: bool,
    pub identity: bool,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub cartan_matrix_is_2i_plus_adjacency: bool,
    pub radical_series: [usize; 4],
    pub ext1: Vec<Vec<usize>>,
    pub ext1_diagonal_zero: bool,
    pub frobenius: bool,
}

/// A finite-dimensional left module given by one action matrix per
/// algebra basis element, on a basis of vertex-homogeneous vectors.
#[derive(Debug, Clone)]
pub struct ZModule {
    weights: Vec<usize>,
    labels: Vec<String>,
    action: Vec<Vec<Vec<Q>>>,
    num_vertices: usize,
}

impl ZModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        let mut v = vec![0; self.num_vertices];
        for &w in &self.weights {
            v[w] += 1;
        }
        v
    }

    pub fn action(&self, x: usize) -> &[Vec<Q>] {
        &self.action[x]
    }

    /// `act(x) act(y) = act(xy)` for every basis pair.
    pub fn respects(&self, alg: &ZigzagAlgebra) -> bool {
        let d = alg.dim();
        let m = self.dim();
        (0..d).all(|x| {
            (0..d).all(|y| {
                let lhs = mat_mul(&self.action[x], &self.action[y]);
                let rhs = match alg.mult(x, y) {
                    Some((k, q)) => self.action[k].iter().map(|r| r.iter().map(|v| v * q).collect()).collect(),
                    None => vec![vec![Q::zero(); m]; m],
                };
                lhs == rhs
            })
        })
    }

    /// Dimension vector of `M / rad M`.
    pub fn top(&self, alg: &ZigzagAlgebra) -> Vec<usize> {
        let mut image: Vec<Vec<Q>> = Vec::new();
        for x in alg.radical() {
            for c in 0..self.dim() {
                image.push(self.action[x].iter().map(|r| r[c]).collect());
            }
        }
        let mut out = self.dim_vector();
        for (v, slot) in out.iter_mut().enumerate() {
            let part: Vec<Vec<Q>> = image.iter().map(|u| self.restrict(u, v)).collect();
            *slot -= linalg::rank(&part);
        }
        out
    }

    /// Dimension vector of `{m : rad m = 0}`.
    pub fn socle(&self, alg: &ZigzagAlgebra) -> Vec<usize> {
        let rows: Vec<Vec<Q>> = alg
            .radical()
            .into_iter()
            .flat_map(|x| self.action[x].clone())
            .collect();
        let ker = linalg::kernel(&rows, self.dim());
        let mut out = vec![0; self.num_vertices];
        for (v, slot) in out.iter_mut().enumerate() {
            let part: Vec<Vec<Q>> = ker.iter().map(|u| self.restrict(u, v)).collect();
            *slot = linalg::rank(&part);
        }
        out
    }

    fn restrict(&self, u: &[Q], v: usize) -> Vec<Q> {
        u.iter()
            .zip(&self.weights)
            .map(|(q, &w)| if w == v { *q } else { Q::zero() })
            .collect()
    }
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

/// Checks that for a tree and nonzero loop scalars `c`, the diagonal change
/// of basis along paths from vertex 0 turns the scaled algebra back into the
/// normalized one:
///
/// `pi0'_v = P_v pi0_v`, `phi'_{u>v} = phi_{u>v}` for `u` the parent of
/// `v`, `phi'_{v>u} = (P_u / c(u,v)) phi_{v>u}`, with `P_0 = 1` and
/// `P_v = P_u c(v,u) / c(u,v)`.
pub fn rescaling_check(graph: &Graph, c: &BTreeMap<(usize, usize), Q>) -> Result<bool> {
    if !graph.is_tree() {
        return Err(Error::NotATree);
    }
    let scaled = ZigzagAlgebra::scaled(graph.clone(), c)?;
    let normal = ZigzagAlgebra::new(graph.clone());
    let cc = |a: usize, b: usize| scaled.scale[&(a, b)];
    let parents = graph.bfs_parents(0);
    let mut order = vec![0usize];
    let mut k = 0;
    while k < order.len() {
        let u = order[k];
        for &v in graph.neighbors(u) {
            if parents[v] == Some(u) && v != 0 {
                order.push(v);
            }
        }
        k += 1;
    }
    let mut p = vec![Q::one(); graph.n];
    for &v in order.iter().skip(1) {
        let u = parents[v].expect("connected");
        p[v] = p[u] * cc(v, u) / cc(u, v);
    }
    // new basis element i = factor[i] * old basis element i
    let factor: Vec<Q> = scaled
        .basis
        .iter()
        .map(|&b| match b {
            Basis::Pi(_) => Q::one(),
            Basis::Pi0(v) => p[v],
            Basis::Phi(a, b) if parents[b] == Some(a) && b != 0 => Q::one(),
            Basis::Phi(v, u) => p[u] / cc(u, v),
        })
        .collect();
    let d = scaled.dim();
    Ok((0..d).all(|i| {
        (0..d).all(|j| {
            let got = scaled
                .mult(i, j)
                .map(|(k, q)| (k, q * factor[i] * factor[j] / factor[k]));
            got == normal.mult(i, j)
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dynkin(name: &str) -> ZigzagAlgebra {
        ZigzagAlgebra::new(Graph::dynkin(&RootSystem::of(name).unwrap()))
    }

    fn idx(a: &ZigzagAlgebra, b: Basis) -> usize {
        a.index_of(b).unwrap()
    }

    #[test]
    fn graph_validation() {
        assert_eq!(Graph::new(0, &[]).unwrap_err(), Error::EmptyGraph);
        assert!(matches!(Graph::new(2, &[(0, 0)]), Err(Error::BadGraph(_))));
        assert!(matches!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::BadGraph(_))));
        assert_eq!(Graph::new(2, &[(0, 2)]).unwrap_err(), Error::BadVertex(2));
        let d4 = Graph::dynkin(&RootSystem::of("D4").unwrap());
        assert!(d4.is_tree() && d4.is_de_diagram());
        assert!(!Graph::dynkin(&RootSystem::of("A4").unwrap()).is_de_diagram());
        assert!(Graph::dynkin(&RootSystem::of("E8").unwrap()).is_de_diagram());
    }

    #[test]
    fn single_vertex() {
        let a = ZigzagAlgebra::new(Graph::new(1, &[]).unwrap());
        assert_eq!(a.dim(), 2);
        let p0 = idx(&a, Basis::Pi0(0));
        assert_eq!(a.mult(p0, p0), None);
        assert_eq!(a.radical_series(), [2, 1, 0, 0]);
        assert!(a.is_associative(Exec::Sequential) && a.has_identity() && a.frobenius_check());
    }

    #[test]
    fn products() {
        let a = dynkin("D4");
        assert_eq!(a.dim(), 14);
        let (p1, p2) = (idx(&a, Basis::Phi(0, 1)), idx(&a, Basis::Phi(1, 0)));
        assert_eq!(a.mult(p2, p1), Some((idx(&a, Basis::Pi0(0)), Q::one())));
        assert_eq!(a.mult(p1, p2), Some((idx(&a, Basis::Pi0(1)), Q::one())));
        // phi:2>3 * phi:1>2 = 0
        assert_eq!(a.mult(idx(&a, Basis::Phi(1, 2)), p1), None);
        let pi0 = idx(&a, Basis::Pi0(0));
        assert_eq!(a.mult(pi0, p2), None);
        assert_eq!(a.mult(p1, pi0), None);
        let pi = idx(&a, Basis::Pi(0));
        assert_eq!(a.mult(pi, pi), Some((pi, Q::one())));
    }

    #[test]
    fn d4_structure() {
        let a = dynkin("D4");
        let c = a.cartan_matrix();
        let sums: Vec<i64> = c.iter().map(|r| r.iter().sum()).collect();
        assert_eq!(sums, vec![3, 5, 3, 3]);
        assert_eq!(sums.iter().sum::<i64>(), 14);
        assert_eq!(a.radical_series(), [14, 10, 4, 0]);
        let ext = a.ext1_dimensions();
        let adj = a.graph().adjacency();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(ext[u][v] as i64, adj[u][v]);
            }
        }
        let edge = ZigzagAlgebra::new(Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(edge.radical_series(), [6, 4, 2, 0]);
    }

    #[test]
    fn projectives_and_simples() {
        let a = dynkin("D4");
        for v in 0..4 {
            let p = a.projective(v).unwrap();
            assert_eq!(p.dim(), 2 + a.graph().degree(v));
            assert!(p.respects(&a));
            let mut at_v = vec![0; 4];
            at_v[v] = 1;
            assert_eq!(p.top(&a), at_v);
            assert_eq!(p.socle(&a), at_v);
            assert_eq!(p.dim_vector()[v], 2);
            let s = a.simple(v).unwrap();
            assert!(s.respects(&a));
            assert_eq!(s.top(&a), at_v);
        }
        assert_eq!(a.projective(1).unwrap().dim(), 5);
        assert_eq!(a.projective(9).unwrap_err(), Error::BadVertex(9));
    }

    #[test]
    fn frobenius_pairing() {
        let a = dynkin("D5");
        let m = a.frobenius_matrix();
        let (pi, pi0) = (idx(&a, Basis::Pi(2)), idx(&a, Basis::Pi0(2)));
        assert_eq!(m[pi][pi0], Q::one());
        assert_eq!(m[idx(&a, Basis::Phi(1, 2))][idx(&a, Basis::Phi(2, 1))], Q::one());
        assert_eq!(m[pi][idx(&a, Basis::Pi(3))], Q::zero());
        assert!(a.frobenius_check());
    }

    #[test]
    fn rescaling() {
        let g = Graph::dynkin(&RootSystem::of("E6").unwrap());
        let mut c = BTreeMap::new();
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            c.insert((u, v), Q::new(k as i64 + 2, 3));
            c.insert((v, u), Q::new(-5, k as i64 + 1));
        }
        assert!(rescaling_check(&g, &c).unwrap());
        let scaled = ZigzagAlgebra::scaled(g.clone(), &c).unwrap();
        assert!(scaled.is_associative(Exec::Sequential));
        let cyc = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(rescaling_check(&cyc, &BTreeMap::new()).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn tsv_dump() {
        let a = ZigzagAlgebra::new(Graph::new(2, &[(0, 1)]).unwrap());
        let t = a.tsv();
        assert_eq!(t.lines().count(), 1 + 36);
        assert!(t.contains("phi:2>1\tphi:1>2\tpi0:1\n"));
        assert!(t.contains("pi0:1\tpi0:1\t0\n"));
    }
}
