//! The full verification suite behind `verify-all`.
//!
//! Every computed quantity is compared with the published value. The report
//! is deterministic: no timings, and all collections are ordered.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exec::Exec;
use crate::integral::{self, BlockStatus};
use crate::kfunctor;
use crate::primid;
use crate::rootsys::{DynkinType, Family, RootSystem, Weight};
use crate::subalg::{self, class_label};
use crate::weyl::{self, EnumBound};
use crate::zigzag::{self, Graph, ZigzagAlgebra};
use crate::Q;

/// Published minimal-orbit dimension.
pub fn published_min_orbit_dim(t: DynkinType) -> usize {
    let n = t.rank;
    match (t.family, n) {
        (Family::A, _) | (Family::C, _) => 2 * n,
        (Family::B, _) => 4 * n - 4,
        (Family::D, _) => 4 * n - 6,
        (Family::E, 6) => 22,
        (Family::E, 7) => 34,
        (Family::E, _) => 58,
        (Family::F, _) => 16,
        (Family::G, _) => 6,
    }
}

/// A summand of a published subalgebra, possibly of degenerate rank.
#[derive(Debug, Clone, Copy)]
pub enum Part {
    S(Family, usize),
    /// One-dimensional center.
    T,
}

/// Canonical label of a published sum, normalizing `A0`, `B1 = C1 = A1`,
/// `C2 = B2`, `D1 = T`, `D2 = A1+A1`, `D3 = A3`.
pub fn canonical(parts: &[Part]) -> String {
    let mut types = Vec::new();
    let mut torus = 0;
    for &p in parts {
        match p {
            Part::T => torus += 1,
            Part::S(_, 0) => {}
            Part::S(Family::D, 1) => torus += 1,
            Part::S(Family::D, 2) => {
                types.push(DynkinType { family: Family::A, rank: 1 });
                types.push(DynkinType { family: Family::A, rank: 1 });
            }
            Part::S(Family::D, 3) => types.push(DynkinType { family: Family::A, rank: 3 }),
            Part::S(Family::B | Family::C, 1) => types.push(DynkinType { family: Family::A, rank: 1 }),
            Part::S(Family::C, 2) => types.push(DynkinType { family: Family::B, rank: 2 }),
            Part::S(f, r) => types.push(DynkinType { family: f, rank: r }),
        }
    }
    types.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
    class_label(&types, torus)
}

/// Published maximal-by-dimension classes (canonical labels) and codim.
pub fn published_max_row(t: DynkinType) -> (Vec<String>, usize) {
    use Family::*;
    use Part::{S, T};
    let l = t.rank;
    let one = |p: &[Part], codim| (vec![canonical(p)], codim);
    match (t.family, l) {
        (A, _) => one(&[S(A, l - 1), T], 2 * l - 2),
        (B, _) => one(&[S(D, l)], 2 * l),
        (C, _) => one(&[S(C, l - 1), S(C, 1)], 4 * l - 4),
        (D, 4) => (
            vec![canonical(&[S(D, 3), T]), canonical(&[S(A, 3), T]), canonical(&[S(A, 3), T])],
            12,
        ),
        (D, _) => one(&[S(D, l - 1), T], 4 * l - 4),
        (E, 6) => one(&[S(D, 5), T], 32),
        (E, 7) => one(&[S(E, 6), T], 54),
        (E, _) => one(&[S(E, 7), S(A, 1)], 112),
        (F, _) => one(&[S(B, 4)], 16),
        (G, _) => one(&[S(A, 2)], 6),
    }
}

/// Published maximal-by-inclusion rows (canonical labels, deduplicated).
/// The `D_i + D_{l-i}` family is taken for proper subsystems only.
pub fn published_inclusion_rows(t: DynkinType) -> Vec<String> {
    use Family::*;
    use Part::{S, T};
    let l = t.rank;
    let mut rows: Vec<Vec<Part>> = Vec::new();
    match t.family {
        A => rows.extend((1..l).map(|i| vec![S(A, i), S(A, l - i - 1), T])),
        B => {
            rows.push(vec![S(D, l)]);
            rows.extend((1..l).map(|i| vec![S(B, i), S(D, l - i)]));
            rows.push(vec![S(B, l - 1), T]);
        }
        C => {
            rows.extend((1..l).map(|i| vec![S(C, i), S(C, l - i)]));
            rows.push(vec![S(A, l - 1), T]);
        }
        D => {
            rows.extend((1..l).map(|i| vec![S(D, i), S(D, l - i)]));
            rows.push(vec![S(A, l - 1), T]);
            rows.push(vec![S(D, l - 1), T]);
        }
        E => match l {
            6 => rows.extend([vec![S(A, 1), S(A, 5)], vec![S(A, 2), S(A, 2), S(A, 2)], vec![S(D, 5), T]]),
            7 => rows.extend([
                vec![S(A, 1), S(D, 6)],
                vec![S(A, 7)],
                vec![S(A, 2), S(A, 5)],
                vec![S(E, 6), T],
            ]),
            _ => rows.extend([
                vec![S(D, 8)],
                vec![S(A, 1), S(E, 7)],
                vec![S(A, 8)],
                vec![S(A, 2), S(E, 6)],
                vec![S(A, 4), S(A, 4)],
            ]),
        },
        F => rows.extend([vec![S(A, 1), S(C, 3)], vec![S(B, 4)], vec![S(A, 2), S(A, 2)]]),
        G => rows.extend([vec![S(A, 1), S(A, 1)], vec![S(A, 2)]]),
    }
    let mut out: Vec<String> = rows.iter().map(|r| canonical(r)).collect();
    out.sort();
    out.dedup();
    out
}

/// One acceptance criterion.
#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Self {
            id,
            name,
            pass: true,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            self.failures.push(what());
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub max_rank: usize,
    pub criteria: Vec<Criterion>,
    pub all_pass: bool,
}

fn types(max_rank: usize) -> Vec<DynkinType> {
    DynkinType::all_up_to(max_rank)
}

/// Minimal orbit dimensions against the closed forms and `2h^vee - 2`.
pub fn min_orbit_dims(max_rank: usize) -> Criterion {
    let mut c = Criterion::new(1, "min_orbit_dim closed forms");
    for t in types(max_rank) {
        let rs = RootSystem::build(t).expect("valid type");
        let d = rs.min_orbit_dim();
        let h = rs.dual_coxeter_number() as usize;
        let want = published_min_orbit_dim(t);
        c.record(d == want && d == 2 * h - 2, || format!("{t}: got {d}, published {want}, 2h-2 = {}", 2 * h - 2));
    }
    c
}

/// Maximal-by-dimension classes against the published rows.
pub fn max_by_dimension(max_rank: usize, exec: Exec) -> Result<Criterion> {
    let mut c = Criterion::new(2, "maximal-by-dimension subalgebras");
    let ts = types(max_rank);
    let results: Vec<Result<Vec<(String, usize)>>> = exec.map(&ts, |&t| {
        let rs = RootSystem::build(t)?;
        let rep = subalg::report(&rs, Exec::Sequential)?;
        Ok(rep
            .classes
            .into_iter()
            .filter(|e| e.maximal_by_dim)
            .map(|e| (e.class.label, e.class.codim))
            .collect())
    });
    for (t, got) in ts.iter().zip(results) {
        let mut got = got?;
        got.sort();
        let (labels, codim) = published_max_row(*t);
        let mut want: Vec<(String, usize)> = labels.into_iter().map(|l| (l, codim)).collect();
        want.sort();
        c.record(got == want, || format!("{t}: got {got:?}, published {want:?}"));
    }
    Ok(c)
}

/// Every published maximal-by-inclusion row appears among the candidate
/// classes that are maximal by inclusion.
pub fn inclusion_coverage(max_rank: usize, exec: Exec) -> Result<Criterion> {
    let mut c = Criterion::new(3, "maximal-by-inclusion coverage");
    let ts = types(max_rank.min(8));
    let results: Vec<Result<Vec<String>>> = exec.map(&ts, |&t| {
        let rs = RootSystem::build(t)?;
        Ok(subalg::report(&rs, Exec::Sequential)?
            .classes
            .into_iter()
            .filter(|e| e.maximal_by_inclusion)
            .map(|e| e.class.label)
            .collect())
    });
    for (t, got) in ts.iter().zip(results) {
        let got = got?;
        for row in published_inclusion_rows(*t) {
            c.record(got.contains(&row), || format!("{t}: {row} not realized"));
        }
    }
    Ok(c)
}

pub fn appendix(l_max: i64) -> Criterion {
    let mut c = Criterion::new(4, "appendix inequality chains");
    let rep = subalg::verify_appendix(l_max);
    for r in &rep.rows {
        let ok = r.ok || (r.exception && r.lhs == r.rhs);
        c.record(ok, || format!("{} l={} i={:?}: {} vs {}", r.chain, r.l, r.i, r.lhs, r.rhs));
    }
    c.record(rep.exceptions == vec![("D2".to_string(), 4)], || {
        format!("exceptions {:?}", rep.exceptions)
    });
    c
}

/// Random nonzero rationals on every ordered edge.
pub fn random_scalars(g: &Graph, rng: &mut impl Rng) -> BTreeMap<(usize, usize), Q> {
    let mut c = BTreeMap::new();
    for &(u, v) in g.edges() {
        for key in [(u, v), (v, u)] {
            let mut p: i64 = rng.random_range(1..=9);
            if rng.random_bool(0.5) {
                p = -p;
            }
            c.insert(key, Q::new(p, rng.random_range(1..=9)));
        }
    }
    c
}

pub const ZIGZAG_TYPES: [&str; 6] = ["D4", "D5", "D6", "E6", "E7", "E8"];

pub fn zigzag_suite(rescalings: usize, seed: u64, exec: Exec) -> Criterion {
    let mut c = Criterion::new(5, "zigzag algebra suite");
    for name in ZIGZAG_TYPES {
        let rs = RootSystem::of(name).expect("valid type");
        let g = Graph::dynkin(&rs);
        let r = g.num_vertices();
        let alg = ZigzagAlgebra::new(g.clone());
        let rep = alg.report(exec);
        c.record(rep.dim == 4 * r - 2, || format!("{name}: dim {}", rep.dim));
        c.record(rep.associative, || format!("{name}: not associative"));
        c.record(rep.identity, || format!("{name}: identity fails"));
        c.record(rep.radical_series[3] == 0, || format!("{name}: rad^3 = {}", rep.radical_series[3]));
        c.record(rep.cartan_matrix_is_2i_plus_adjacency, || format!("{name}: Cartan matrix"));
        c.record(rep.ext1_diagonal_zero, || format!("{name}: Ext1 diagonal"));
        c.record(rep.frobenius, || format!("{name}: Frobenius pairing"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = 0;
        for _ in 0..rescalings {
            let sc = random_scalars(&g, &mut rng);
            if zigzag::rescaling_check(&g, &sc).unwrap_or(false) {
                ok += 1;
            }
        }
        c.record(ok == rescalings, || format!("{name}: {ok}/{rescalings} rescalings"));
    }
    c
}

pub fn kfunctor_suite(exec: Exec) -> Result<Criterion> {
    let mut c = Criterion::new(6, "K-functor identities");
    let ts: Vec<DynkinType> = types(8)
        .into_iter()
        .filter(|t| t.weyl_order() <= weyl::DEFAULT_BOUND)
        .collect();
    for t in ts {
        let rs = RootSystem::build(t)?;
        let rep = kfunctor::cf_report(&rs, EnumBound::Default, exec)?;
        for k in rep.checks.iter().filter(|k| !k.ok) {
            c.failures.push(format!("{t}: {} at {:?}", k.name, (k.alpha, k.beta)));
        }
        c.record(rep.all_ok, || format!("{t}: orbit lattice identities"));
        if t.simply_laced() {
            let g = Graph::dynkin(&rs);
            c.record(kfunctor::k0_checks(&g).iter().all(|k| k.ok), || format!("{t}: K(C^0) identities"));
        }
    }
    let x = kfunctor::x_analysis(4);
    c.record(x.cube_solutions == vec![(1, 1)], || format!("X^3 solutions {:?}", x.cube_solutions));
    c.record(x.square_solutions == vec![(0, 0)], || format!("X^2 solutions {:?}", x.square_solutions));
    c.record(x.det_always_one, || "det X != 1".into());
    Ok(c)
}

pub fn cell_suite() -> Result<Criterion> {
    let mut c = Criterion::new(7, "minimal cell tau-invariants");
    for name in ["D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"] {
        let rs = RootSystem::of(name)?;
        let n = rs.rank();
        let cell = weyl::min_cell(&rs)?;
        let center = weyl::trivalent_node(&rs).expect("D/E type");
        let tau_r0 = cell[center].tau_r(&rs);
        for (a, w) in cell.iter().enumerate() {
            let want: Vec<usize> = (0..n).filter(|&i| i != a).collect();
            c.record(w.tau_l(&rs) == want, || format!("{name}: tau_L(w_{})", a + 1));
            c.record(w.tau_r(&rs) == tau_r0, || format!("{name}: tau_R(w_{}) differs", a + 1));
        }
        let labels = primid::regular_labels(&rs)?;
        c.record(labels.len() == n, || format!("{name}: {} regular labels", labels.len()));
        for a in 0..n {
            let at = primid::labels_at(&rs, &-&Weight::fundamental(n, a))?;
            c.record(at.len() == 1, || format!("{name}: {} labels at -omega_{}", at.len(), a + 1));
        }
    }
    Ok(c)
}

pub fn dichotomies(max_rank: usize, exec: Exec) -> Result<Criterion> {
    let mut c = Criterion::new(8, "orbit dimension vs dual codimension");
    let ts = types(max_rank);
    let results: Vec<Result<integral::Dichotomy>> = exec.map(&ts, |&t| integral::dichotomy(&RootSystem::build(t)?));
    for r in results {
        let r = r?;
        c.record(r.matches_expected, || {
            format!("{}: d={} m={} gives {}, expected {}", r.dtype, r.d, r.m, r.sign, r.expected)
        });
    }
    Ok(c)
}

pub fn status_checks() -> Result<Criterion> {
    let mut c = Criterion::new(9, "end-to-end block status");
    let cases: [(&str, &str, BlockStatus); 5] = [
        ("D4", "1/2,0,0,0", BlockStatus::Empty),
        ("E7", "0,0,0,0,0,0,0", BlockStatus::ZigzagBlock(7)),
        ("B2", "1/2,0", BlockStatus::SemisimpleUniqueSimple),
        ("A3", "0,0,0", BlockStatus::TypeAUnsupported),
        ("A3", "1/2,-1/3,5", BlockStatus::TypeAUnsupported),
    ];
    for (name, lam, want) in cases {
        let rs = RootSystem::of(name)?;
        let lambda = Weight::parse(lam).expect("literal weight");
        let got = integral::fd_block_status(&rs, &lambda)?.status;
        c.record(got == want, || format!("({name}, {lam}): {got}, expected {want}"));
    }
    let b2 = RootSystem::of("B2")?;
    let an = integral::analyze(&b2, &Weight::parse("1/2,0").expect("literal weight"))?;
    c.record(an.dual_maximal && an.shifted_dominant && an.stabilizer_trivial, || {
        "B2 1/2 omega_1 fails a maximality test".into()
    });
    Ok(c)
}

/// Runs criteria 1 to 9. Criteria 1, 2 and 8 cover ranks up to
/// `max_rank`; criterion 3 is capped at rank 8.
pub fn verify_all(max_rank: usize, exec: Exec) -> Result<VerifyReport> {
    let criteria = vec![
        min_orbit_dims(max_rank),
        max_by_dimension(max_rank, exec)?,
        inclusion_coverage(max_rank, exec)?,
        appendix(40),
        zigzag_suite(100, 0x5eed, exec),
        kfunctor_suite(exec)?,
        cell_suite()?,
        dichotomies(max_rank, exec)?,
        status_checks()?,
    ];
    Ok(VerifyReport {
        schema: "lieblocks.verify/1",
        max_rank,
        all_pass: criteria.iter().all(|c| c.pass),
        criteria,
    })
}
