//! Integer models of translation functors on Grothendieck groups.
//!
//! Two lattices are modeled. On `K(C^0)`, with basis `[M_a]` indexed by the
//! simple roots, `T_a`, `psi_a`, `phi_a` are small dense matrices read off a
//! simply-laced Dynkin graph. On a single dot-orbit the same functors are
//! sparse matrices: the regular orbit `W.0` is identified with `W`, the
//! singular orbit `W.(-omega_a)` with `W/{e, s_a}`.
//!
//! Matrices act on column vectors and `F∘G` is the product `F·G`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::exec::Exec;
use crate::linalg::IntMatrix;
use crate::rootsys::{DynkinType, RootSystem};
use crate::weyl::{self, coxeter_m, EnumBound, WeylElement};
use crate::zigzag::Graph;

/// `T_a` on `K(C^0)`: column `a` is `2 e_a + sum_{b ~ a} e_b`, others zero.
pub fn t_matrix(g: &Graph, a: usize) -> IntMatrix {
    let n = g.num_vertices();
    let mut m = IntMatrix::zeros(n, n);
    m.data[a][a] = 2;
    for &b in g.neighbors(a) {
        m.data[b][a] = 1;
    }
    m
}

/// `psi_a : K(C^0) -> K(C^{-omega(a)})`, the row selecting coordinate `a`.
pub fn psi_matrix(g: &Graph, a: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(1, g.num_vertices());
    m.data[0][a] = 1;
    m
}

/// `phi_a : K(C^{-omega(a)}) -> K(C^0)`, the `a`-column of `T_a`.
pub fn phi_matrix(g: &Graph, a: usize) -> IntMatrix {
    let col = t_matrix(g, a).column(a);
    IntMatrix::from_rows(col.into_iter().map(|x| vec![x]).collect())
}

/// `X = [[-1, -c_ab], [c_ba, c_ab c_ba - 1]]`.
pub fn x_matrix(c_ab: i64, c_ba: i64) -> IntMatrix {
    IntMatrix::from_rows(vec![vec![-1, -c_ab], vec![c_ba, c_ab * c_ba - 1]])
}

/// `X^k == 1`.
pub fn check_x_order(c_ab: i64, c_ba: i64, k: u32) -> bool {
    x_matrix(c_ab, c_ba).pow(k) == IntMatrix::identity(2)
}

#[derive(Debug, Clone, Serialize)]
pub struct XCandidate {
    pub c_ab: i64,
    pub c_ba: i64,
    pub trace: i64,
    pub det: i64,
    pub cube_is_identity: bool,
    pub square_is_identity: bool,
}

/// The order-of-X argument over the candidate multiplicities.
#[derive(Debug, Clone, Serialize)]
pub struct XAnalysis {
    /// Pairs with `c_ab c_ba` in `{1, 4}` (trace `-1` or `2`).
    pub candidates: Vec<XCandidate>,
    pub cube_solutions: Vec<(i64, i64)>,
    /// Nonnegative pairs up to `search_max` with `X^2 = 1`.
    pub square_solutions: Vec<(i64, i64)>,
    pub search_max: i64,
    /// `det X = 1` for every pair in the search box.
    pub det_always_one: bool,
}

fn x_candidate(c_ab: i64, c_ba: i64) -> XCandidate {
    let x = x_matrix(c_ab, c_ba);
    XCandidate {
        c_ab,
        c_ba,
        trace: x.trace(),
        det: x.get(0, 0) * x.get(1, 1) - x.get(0, 1) * x.get(1, 0),
        cube_is_identity: check_x_order(c_ab, c_ba, 3),
        square_is_identity: check_x_order(c_ab, c_ba, 2),
    }
}

pub fn x_analysis(search_max: i64) -> XAnalysis {
    let candidates: Vec<XCandidate> = [(1, 1), (1, 4), (2, 2), (4, 1)]
        .iter()
        .map(|&(a, b)| x_candidate(a, b))
        .collect();
    let cube_solutions = candidates
        .iter()
        .filter(|c| c.cube_is_identity)
        .map(|c| (c.c_ab, c.c_ba))
        .collect();
    let mut square_solutions = Vec::new();
    let mut det_always_one = true;
    for a in 0..=search_max {
        for b in 0..=search_max {
            let c = x_candidate(a, b);
            det_always_one &= c.det == 1;
            if c.square_is_identity {
                square_solutions.push((a, b));
            }
        }
    }
    XAnalysis {
        candidates,
        cube_solutions,
        square_solutions,
        search_max,
        det_always_one,
    }
}

/// Sparse integer matrix stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn from_columns(rows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols.into_iter().map(normalize).collect();
        Self { rows, cols }
    }

    pub fn scalar(n: usize, k: i64) -> Self {
        Self::from_columns(n, (0..n).map(|i| vec![(i as u32, k)]).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<(u32, i64)> = Vec::new();
                for &(k, b) in col {
                    for &(i, a) in &self.cols[k as usize] {
                        acc.push((i, a * b));
                    }
                }
                acc
            })
            .collect();
        Self::from_columns(self.rows, cols)
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()));
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Self::from_columns(self.rows, cols)
    }

    pub fn scale(&self, k: i64) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&(i, a)| (i, a * k)).collect())
            .collect();
        Self::from_columns(self.rows, cols)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.add(&rhs.scale(-1))
    }

    pub fn pow(&self, k: u32) -> SparseMatrix {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && *self == Self::identity(self.rows)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, a) in col {
                m.data[i as usize][j] = a;
            }
        }
        m
    }
}

fn normalize(mut col: Vec<(u32, i64)>) -> Vec<(u32, i64)> {
    col.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(u32, i64)> = Vec::with_capacity(col.len());
    for (i, a) in col {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += a,
            _ => out.push((i, a)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// The regular dot-orbit `W.0`, indexed by `W` in enumeration order, with
/// left and right multiplication tables by simple reflections.
pub struct OrbitLattice<'a> {
    rs: &'a RootSystem,
    elements: Vec<WeylElement>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
}

impl<'a> OrbitLattice<'a> {
    pub fn new(rs: &'a RootSystem, bound: EnumBound, exec: Exec) -> Result<Self> {
        let elements = weyl::elements(rs, bound, exec)?;
        let n = rs.rank();
        let index: HashMap<Vec<u16>, u32> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.key(n).to_vec(), k as u32))
            .collect();
        // (w s_i)(alpha_j) = w(s_i alpha_j);  (s_i w)(alpha_j) = s_i(w alpha_j)
        let right = (0..n)
            .map(|i| {
                let s = rs.reflection_perm(i);
                exec.map(&elements, |w| {
                    let key: Vec<u16> = (0..n).map(|j| w.perm()[s[j] as usize]).collect();
                    index[&key]
                })
            })
            .collect();
        let left = (0..n)
            .map(|i| {
                let s = rs.reflection_perm(i);
                exec.map(&elements, |w| {
                    let key: Vec<u16> = (0..n).map(|j| s[w.perm()[j] as usize]).collect();
                    index[&key]
                })
            })
            .collect();
        Ok(Self {
            rs,
            elements,
            right,
            left,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Index of `w s_i`.
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[i][w] as usize
    }

    /// Index of `s_i w`.
    pub fn left_mul(&self, w: usize, i: usize) -> usize {
        self.left[i][w] as usize
    }

    /// Cosets of `{e, s_a}`: the coset index of every element, and one
    /// representative (the smaller index) per coset.
    pub fn cosets(&self, a: usize) -> (Vec<u32>, Vec<usize>) {
        let mut coset = vec![u32::MAX; self.len()];
        let mut reps = Vec::new();
        for w in 0..self.len() {
            if coset[w] == u32::MAX {
                let id = reps.len() as u32;
                coset[w] = id;
                coset[self.right_mul(w, a)] = id;
                reps.push(w);
            }
        }
        (coset, reps)
    }

    /// `T_a : delta_w -> delta_w + delta_{w s_a}`.
    pub fn t(&self, a: usize) -> SparseMatrix {
        let cols = (0..self.len())
            .map(|w| vec![(w as u32, 1), (self.right[a][w], 1)])
            .collect();
        SparseMatrix::from_columns(self.len(), cols)
    }

    /// `psi_a : delta_{w.0} -> delta_{w.(-omega_a)}`.
    pub fn psi(&self, a: usize) -> SparseMatrix {
        let (coset, reps) = self.cosets(a);
        let cols = coset.iter().map(|&c| vec![(c, 1)]).collect();
        SparseMatrix::from_columns(reps.len(), cols)
    }

    /// `phi_a : delta_{w.(-omega_a)} -> delta_{w.0} + delta_{(w s_a).0}`,
    /// built from the representative `w` of each coset. With
    /// `other_rep` the other coset member is used instead.
    pub fn phi_with(&self, a: usize, other_rep: bool) -> SparseMatrix {
        let (_, reps) = self.cosets(a);
        let cols = reps
            .iter()
            .map(|&w| {
                let w = if other_rep { self.right_mul(w, a) } else { w };
                vec![(w as u32, 1), (self.right[a][w], 1)]
            })
            .collect();
        SparseMatrix::from_columns(self.len(), cols)
    }

    pub fn phi(&self, a: usize) -> SparseMatrix {
        self.phi_with(a, false)
    }

    /// Left action of `s_i` on the regular orbit.
    pub fn left_regular(&self, i: usize) -> SparseMatrix {
        let cols = (0..self.len()).map(|w| vec![(self.left[i][w], 1)]).collect();
        SparseMatrix::from_columns(self.len(), cols)
    }

    /// Left action of `s_i` on the singular orbit of `-omega_a`.
    pub fn left_singular(&self, a: usize, i: usize) -> SparseMatrix {
        let (coset, reps) = self.cosets(a);
        let cols = reps
            .iter()
            .map(|&w| vec![(coset[self.left_mul(w, i)], 1)])
            .collect();
        SparseMatrix::from_columns(reps.len(), cols)
    }
}

/// One checked identity.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    /// 1-based simple roots.
    pub alpha: usize,
    pub beta: Option<usize>,
    /// Exponent used for the pair identities.
    pub exponent: Option<u32>,
    pub ok: bool,
}

fn check(name: &'static str, a: usize, b: Option<usize>, exponent: Option<u32>, ok: bool) -> Check {
    Check {
        name,
        alpha: a + 1,
        beta: b.map(|b| b + 1),
        exponent,
        ok,
    }
}

/// Identities on the regular/singular orbit lattices of one type.
#[derive(Debug, Clone, Serialize)]
pub struct CfReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub regular_dim: usize,
    pub singular_dim: usize,
    pub checks: Vec<Check>,
    pub all_ok: bool,
}

/// Checks, on the orbit lattices of `rs`:
///
/// * `a`: `psi phi = 2`, `b`: `phi psi = T`, `c1`: `T² = 2T`,
///   `c2`: `(T - 1)² = 1`;
/// * `d`: `((T_a - 1)(T_b - 1))^m = 1` for adjacent `a, b`, with `m` the
///   Coxeter exponent (3 for a simple bond);
/// * `e`: the same with exponent 2 for distinct non-adjacent `a, b`;
/// * `phi_well_defined`, and W-equivariance of `T`, `psi`, `phi`.
pub fn cf_report(rs: &RootSystem, bound: EnumBound, exec: Exec) -> Result<CfReport> {
    let lat = OrbitLattice::new(rs, bound, exec)?;
    let n = rs.rank();
    let id = SparseMatrix::identity(lat.len());
    let per_root: Vec<Vec<Check>> = exec.map_range(n, |a| {
        let (t, psi, phi) = (lat.t(a), lat.psi(a), lat.phi(a));
        let sing = psi.rows();
        let tm = t.sub(&id);
        let mut out = vec![
            check("a", a, None, None, psi.mul(&phi) == SparseMatrix::scalar(sing, 2)),
            check("b", a, None, None, phi.mul(&psi) == t),
            check("c1", a, None, None, t.mul(&t) == t.scale(2)),
            check("c2", a, None, None, tm.mul(&tm).is_identity()),
            check("phi_well_defined", a, None, None, lat.phi_with(a, true) == phi),
        ];
        let (mut eq_t, mut eq_psi, mut eq_phi) = (true, true, true);
        for i in 0..n {
            let (lr, ls) = (lat.left_regular(i), lat.left_singular(a, i));
            eq_t &= lr.mul(&t) == t.mul(&lr);
            eq_psi &= ls.mul(&psi) == psi.mul(&lr);
            eq_phi &= lr.mul(&phi) == phi.mul(&ls);
        }
        out.push(check("equivariant_t", a, None, None, eq_t));
        out.push(check("equivariant_psi", a, None, None, eq_psi));
        out.push(check("equivariant_phi", a, None, None, eq_phi));
        out
    });
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let per_pair: Vec<Check> = exec.map(&pairs, |&(a, b)| {
        let prod = lat.t(a).sub(&id).mul(&lat.t(b).sub(&id));
        let m = coxeter_m(rs, a, b);
        let name = if m == 2 { "e" } else { "d" };
        check(name, a, Some(b), Some(m), prod.pow(m).is_identity() && !prod.is_identity())
    });
    let checks: Vec<Check> = per_root.into_iter().flatten().chain(per_pair).collect();
    Ok(CfReport {
        schema: "lieblocks.cf/1",
        dtype: rs.dtype(),
        regular_dim: lat.len(),
        singular_dim: lat.len() / 2,
        all_ok: checks.iter().all(|c| c.ok),
        checks,
    })
}

/// The same identities on `K(C^0)` for a graph.
pub fn k0_checks(g: &Graph) -> Vec<Check> {
    let n = g.num_vertices();
    let id = IntMatrix::identity(n);
    let mut out = Vec::new();
    for a in 0..n {
        let (t, psi, phi) = (t_matrix(g, a), psi_matrix(g, a), phi_matrix(g, a));
        let tm = &t - &id;
        out.push(check("a", a, None, None, &psi * &phi == IntMatrix::identity(1).scale(2)));
        out.push(check("b", a, None, None, &phi * &psi == t));
        out.push(check("c1", a, None, None, &t * &t == t.scale(2)));
        out.push(check("c2", a, None, None, &tm * &tm == id));
    }
    for a in 0..n {
        for b in a + 1..n {
            let prod = &(&t_matrix(g, a) - &id) * &(&t_matrix(g, b) - &id);
            let m = if g.adjacent(a, b) { 3 } else { 2 };
            let name = if m == 2 { "e" } else { "d" };
            out.push(check(name, a, Some(b), Some(m), prod.pow(m) == id && prod != id));
        }
    }
    out
}

/// `K(C^0)` matrices with basis labels.
#[derive(Debug, Clone, Serialize)]
pub struct KReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub basis: Vec<String>,
    pub singular_basis: Vec<String>,
    pub t: Vec<Vec<Vec<i64>>>,
    pub psi: Vec<Vec<Vec<i64>>>,
    pub phi: Vec<Vec<Vec<i64>>>,
    pub k0_checks: Vec<Check>,
    pub x_analysis: XAnalysis,
    /// Present when `|W|` is within the enumeration bound.
    pub orbit_lattice: Option<CfReport>,
}

pub fn k_report(rs: &RootSystem, exec: Exec) -> Result<KReport> {
    let g = Graph::dynkin(rs);
    let n = rs.rank();
    let orbit_lattice = match cf_report(rs, EnumBound::Default, exec) {
        Ok(r) => Some(r),
        Err(crate::Error::GroupTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(KReport {
        schema: "lieblocks.kfunctor/1",
        dtype: rs.dtype(),
        basis: (1..=n).map(|a| format!("M_{a}")).collect(),
        singular_basis: vec!["M^-".into()],
        t: (0..n).map(|a| t_matrix(&g, a).data).collect(),
        psi: (0..n).map(|a| psi_matrix(&g, a).data).collect(),
        phi: (0..n).map(|a| phi_matrix(&g, a).data).collect(),
        k0_checks: if rs.dtype().simply_laced() { k0_checks(&g) } else { Vec::new() },
        x_analysis: x_analysis(4),
        orbit_lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Weight;
    use crate::zigzag::ZigzagAlgebra;

    fn d4() -> (RootSystem, Graph) {
        let rs = RootSystem::of("D4").unwrap();
        let g = Graph::dynkin(&rs);
        (rs, g)
    }

    #[test]
    fn t_matrix_columns() {
        let (_, g) = d4();
        assert_eq!(t_matrix(&g, 1).column(1), vec![1, 2, 1, 1]);
        assert_eq!(t_matrix(&g, 0).column(0), vec![2, 1, 0, 0]);
        for a in 0..4 {
            let t = t_matrix(&g, a);
            assert_eq!(&t * &t, t.scale(2));
            assert_eq!(&phi_matrix(&g, a) * &psi_matrix(&g, a), t);
            assert_eq!((&psi_matrix(&g, a) * &phi_matrix(&g, a)).data, vec![vec![2]]);
            for b in 0..4 {
                assert!((&t * &t_matrix(&g, b)).rank() <= 1);
                if g.adjacent(a, b) {
                    assert_eq!((&psi_matrix(&g, b) * &phi_matrix(&g, a)).data, vec![vec![1]]);
                }
            }
        }
        assert!(k0_checks(&g).iter().all(|c| c.ok));
    }

    #[test]
    fn t_columns_are_zigzag_cartan_columns() {
        for name in ["D5", "E6"] {
            let g = Graph::dynkin(&RootSystem::of(name).unwrap());
            let c = ZigzagAlgebra::new(g.clone()).cartan_matrix();
            for a in 0..g.num_vertices() {
                let col: Vec<i64> = c.iter().map(|r| r[a]).collect();
                assert_eq!(t_matrix(&g, a).column(a), col);
            }
        }
    }

    #[test]
    fn x_matrices() {
        assert_eq!(x_matrix(1, 1).data, vec![vec![-1, -1], vec![1, 0]]);
        assert!(check_x_order(1, 1, 3));
        assert!(!check_x_order(4, 1, 3));
        assert_eq!(x_matrix(4, 1).trace(), 2);
        assert_eq!(x_matrix(0, 0), IntMatrix::identity(2).scale(-1));
        assert!(check_x_order(0, 0, 2));
        let an = x_analysis(6);
        assert_eq!(an.cube_solutions, vec![(1, 1)]);
        assert_eq!(an.square_solutions, vec![(0, 0)]);
        assert!(an.det_always_one);
        assert!(an.candidates.iter().all(|c| c.trace == -1 || c.trace == 2));
    }

    #[test]
    fn orbit_operators_base_cases() {
        let (rs, _) = d4();
        let lat = OrbitLattice::new(&rs, EnumBound::Default, Exec::Sequential).unwrap();
        assert_eq!(lat.len(), 192);
        let zero = Weight::zero(4);
        for a in 0..4 {
            // T_a(delta_0) = delta_0 + delta_{-a}
            let col = lat.t(a).column(0).to_vec();
            let hit: Vec<Weight> = col.iter().map(|&(w, _)| lat.elements()[w as usize].dot(&rs, &zero)).collect();
            assert_eq!(hit, vec![zero.clone(), -&rs.root_weight(a)]);
            // the singular orbit really is W/{e, s_a}
            let m = -&Weight::fundamental(4, a);
            assert_eq!(weyl::dot_orbit(&rs, &m, 1000).unwrap().len(), 96);
            assert_eq!(lat.psi(a).rows(), 96);
        }
    }

    #[test]
    fn cf_identities_small_types() {
        for name in ["A2", "B2", "G2", "A3", "D4"] {
            let rs = RootSystem::of(name).unwrap();
            let rep = cf_report(&rs, EnumBound::Default, Exec::default()).unwrap();
            assert!(rep.all_ok, "{name}: {:?}", rep.checks.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        }
        // for a double bond the cube is not enough
        let b2 = RootSystem::of("B2").unwrap();
        let lat = OrbitLattice::new(&b2, EnumBound::Default, Exec::Sequential).unwrap();
        let id = SparseMatrix::identity(8);
        let prod = lat.t(0).sub(&id).mul(&lat.t(1).sub(&id));
        assert!(!prod.pow(3).is_identity());
        assert!(prod.pow(4).is_identity());
    }

    #[test]
    fn sparse_basics() {
        let a = SparseMatrix::from_columns(2, vec![vec![(0, 1), (1, 1)], vec![(1, 1), (1, -1)]]);
        assert_eq!(a.column(1), &[] as &[(u32, i64)]);
        assert_eq!(a.to_dense().data, vec![vec![1, 0], vec![1, 0]]);
        assert_eq!(a.mul(&a), a);
    }
}
