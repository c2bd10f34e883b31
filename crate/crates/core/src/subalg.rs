//! Full-rank root subsystems: Levi and Borel–de Siebenthal candidates,
//! classification, W-conjugacy and dimension ranking.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg;
use crate::rootsys::{DynkinType, Family, RootSystem};
use crate::Q;

/// Orbit-search cap for conjugacy tests.
pub const ORBIT_CAP: usize = 200_000;

/// A set of root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(Vec<u64>);

impl RootSet {
    pub fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    /// Image under a root permutation.
    pub fn image(&self, perm: &[u16]) -> RootSet {
        let mut out = RootSet::new(perm.len());
        for i in self.iter() {
            out.insert(perm[i] as usize);
        }
        out
    }
}

/// A symmetric subset of roots closed under its own reflections.
#[derive(Debug, Clone)]
pub struct RootSubsystem<'a> {
    ambient: &'a RootSystem,
    members: RootSet,
    simple_basis: Vec<usize>,
}

impl<'a> RootSubsystem<'a> {
    /// The smallest subsystem containing `gens`: their orbit under the group
    /// generated by their reflections.
    pub fn generated_by(rs: &'a RootSystem, gens: &[usize]) -> Self {
        let mut members = RootSet::new(rs.num_roots());
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in gens {
            if members.insert(g) {
                queue.push_back(g);
            }
        }
        while let Some(b) = queue.pop_front() {
            for &g in gens {
                let c = rs.reflection_perm(g)[b] as usize;
                if members.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        Self::from_set_unchecked(rs, members)
    }

    /// Wraps an explicit member set, checking symmetry and closure under
    /// the reflections of its own members.
    pub fn from_members(rs: &'a RootSystem, members: RootSet) -> Result<Self> {
        let ok = members.iter().all(|a| {
            members.iter().all(|b| members.contains(rs.reflection_perm(a)[b] as usize))
        });
        if !ok {
            return Err(Error::NotClosed);
        }
        Ok(Self::from_set_unchecked(rs, members))
    }

    fn from_set_unchecked(rs: &'a RootSystem, members: RootSet) -> Self {
        let pos: Vec<usize> = members.iter().filter(|&i| rs.is_positive(i)).collect();
        let pos_set: HashSet<&[i64]> = pos.iter().map(|&i| rs.root(i).0.as_slice()).collect();
        let simple_basis = pos
            .iter()
            .copied()
            .filter(|&b| {
                let rb = &rs.root(b).0;
                !pos.iter().any(|&g| {
                    g != b && {
                        let diff: Vec<i64> = rb.iter().zip(&rs.root(g).0).map(|(x, y)| x - y).collect();
                        pos_set.contains(diff.as_slice())
                    }
                })
            })
            .collect();
        Self {
            ambient: rs,
            members,
            simple_basis,
        }
    }

    pub fn ambient(&self) -> &'a RootSystem {
        self.ambient
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Root indices of the simple system `S ∩ Δ⁺` determines.
    pub fn simple_basis(&self) -> &[usize] {
        &self.simple_basis
    }

    pub fn is_symmetric(&self) -> bool {
        self.members
            .iter()
            .all(|i| self.members.contains(self.ambient.negate(i)))
    }

    /// `α, β ∈ S` and `α+β ∈ Δ` imply `α+β ∈ S`.
    pub fn is_additively_closed(&self) -> bool {
        let m: Vec<usize> = self.members.iter().collect();
        m.iter().all(|&a| {
            m.iter().all(|&b| match self.ambient.sum_index(a, b) {
                Some(c) => self.members.contains(c),
                None => true,
            })
        })
    }

    /// Whether the simple basis spans the ambient space.
    pub fn is_full_rank(&self) -> bool {
        self.semisimple_rank() == self.ambient.rank()
    }

    pub fn semisimple_rank(&self) -> usize {
        let rows: Vec<Vec<Q>> = self
            .simple_basis
            .iter()
            .map(|&b| self.ambient.root(b).0.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        linalg::rank(&rows)
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.ambient.num_roots()
    }

    /// `dim (h ⊕ ⊕_{α∈S} g_α)`.
    pub fn dim(&self) -> usize {
        self.len() + self.ambient.rank()
    }
}

/// Isomorphism class of a full-rank reductive subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubalgebraClass {
    /// e.g. `D5+T`, `E7+A1`, `A1+A1+T2`.
    #[serde(rename = "class")]
    pub label: String,
    pub semisimple_type: Vec<DynkinType>,
    pub torus_rank: usize,
    pub dim: usize,
    pub codim: usize,
}

impl fmt::Display for SubalgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Canonical label for a type multiset plus torus.
pub fn class_label(types: &[DynkinType], torus_rank: usize) -> String {
    let mut parts: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    match torus_rank {
        0 => {}
        1 => parts.push("T".into()),
        k => parts.push(format!("T{k}")),
    }
    if parts.is_empty() {
        "T0".into()
    } else {
        parts.join("+")
    }
}

fn sort_types(types: &mut [DynkinType]) {
    types.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
}

/// Type of one connected Dynkin diagram, given by its Cartan matrix and
/// which nodes are short. Degenerate names are canonicalized.
fn component_type(cartan: &[Vec<i64>], short: &[bool]) -> DynkinType {
    let r = cartan.len();
    let t = |f, n| DynkinType::new(f, n).expect("recognized rank");
    if r == 1 {
        return t(Family::A, 1);
    }
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let deg: Vec<usize> = (0..r).map(|i| (0..r).filter(|&j| j != i && bond(i, j) != 0).count()).collect();
    let mut multi = None;
    for i in 0..r {
        for j in i + 1..r {
            if bond(i, j) >= 2 {
                multi = Some((i, j, bond(i, j)));
            }
        }
    }
    match multi {
        Some((_, _, 3)) => t(Family::G, 2),
        Some(_) if r == 2 => t(Family::B, 2),
        Some((i, j, _)) => {
            if deg[i] == 1 || deg[j] == 1 {
                let end = if deg[i] == 1 { i } else { j };
                if short[end] {
                    t(Family::B, r)
                } else {
                    t(Family::C, r)
                }
            } else {
                t(Family::F, 4)
            }
        }
        None => {
            let Some(c) = (0..r).find(|&i| deg[i] == 3) else {
                return t(Family::A, r);
            };
            let mut arms: Vec<usize> = (0..r)
                .filter(|&j| j != c && bond(c, j) != 0)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    loop {
                        let next = (0..r).find(|&k| k != prev && k != cur && bond(cur, k) != 0);
                        match next {
                            Some(k) => {
                                prev = cur;
                                cur = k;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => t(Family::D, r),
                [1, 2, 2] => t(Family::E, 6),
                [1, 2, 3] => t(Family::E, 7),
                [1, 2, 4] => t(Family::E, 8),
                a => unreachable!("not a finite Dynkin diagram: arms {a:?}"),
            }
        }
    }
}

/// Recognizes the type of a subsystem from the Cartan matrix of its simple
/// basis.
pub fn classify(sub: &RootSubsystem<'_>) -> Result<SubalgebraClass> {
    if !sub.is_symmetric() {
        return Err(Error::NotClosed);
    }
    let rs = sub.ambient();
    let basis = sub.simple_basis();
    let n = basis.len();
    let mut seen = vec![false; n];
    let mut types = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..n {
                if !seen[v] && rs.root_pairing(basis[v], basis[u]) != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        let cartan: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| rs.root_pairing(basis[j], basis[i])).collect())
            .collect();
        let maxn = comp.iter().map(|&i| rs.norm(basis[i])).max().unwrap_or(2);
        let short: Vec<bool> = comp.iter().map(|&i| rs.norm(basis[i]) < maxn).collect();
        types.push(component_type(&cartan, &short));
    }
    sort_types(&mut types);
    let ss_rank: usize = types.iter().map(|t| t.rank).sum();
    let torus_rank = rs.rank() - ss_rank;
    Ok(SubalgebraClass {
        label: class_label(&types, torus_rank),
        semisimple_type: types,
        torus_rank,
        dim: sub.dim(),
        codim: rs.lie_dim() - sub.dim(),
    })
}

/// How a candidate was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Levi,
    Bds,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Levi => "levi",
            Construction::Bds => "bds",
        })
    }
}

/// A candidate subsystem together with its construction and the removed
/// node (1-based; node 0 of the extended diagram is `-θ`).
#[derive(Debug, Clone)]
pub struct Candidate<'a> {
    pub construction: Construction,
    pub removed: usize,
    pub sub: RootSubsystem<'a>,
}

/// Remove one node of the finite Dynkin diagram.
pub fn levi_candidates(rs: &RootSystem) -> Vec<RootSubsystem<'_>> {
    levi_with(rs, Exec::default()).into_iter().map(|c| c.sub).collect()
}

/// Remove one node of the extended Dynkin diagram; proper results only.
pub fn bds_candidates(rs: &RootSystem) -> Vec<RootSubsystem<'_>> {
    bds_with(rs, Exec::default()).into_iter().map(|c| c.sub).collect()
}

fn levi_with(rs: &RootSystem, exec: Exec) -> Vec<Candidate<'_>> {
    exec.map_range(rs.rank(), |k| {
        let gens: Vec<usize> = (0..rs.rank()).filter(|&i| i != k).collect();
        Candidate {
            construction: Construction::Levi,
            removed: k + 1,
            sub: RootSubsystem::generated_by(rs, &gens),
        }
    })
}

fn bds_with(rs: &RootSystem, exec: Exec) -> Vec<Candidate<'_>> {
    exec.map_range(rs.rank(), |k| {
        let mut gens: Vec<usize> = vec![rs.lowest_index()];
        gens.extend((0..rs.rank()).filter(|&i| i != k));
        Candidate {
            construction: Construction::Bds,
            removed: k + 1,
            sub: RootSubsystem::generated_by(rs, &gens),
        }
    })
    .into_iter()
    .filter(|c| c.sub.is_proper())
    .collect()
}

/// All proper candidates, Levi first, in node order.
pub fn candidates(rs: &RootSystem, exec: Exec) -> Vec<Candidate<'_>> {
    let mut out = levi_with(rs, exec);
    out.retain(|c| c.sub.is_proper());
    out.extend(bds_with(rs, exec));
    out
}

/// The W-orbit of a root set under simple reflections, or `None` past `cap`.
pub fn orbit(rs: &RootSystem, set: &RootSet, cap: usize) -> Option<HashSet<RootSet>> {
    let mut seen = HashSet::from([set.clone()]);
    let mut queue = VecDeque::from([set.clone()]);
    while let Some(s) = queue.pop_front() {
        for i in 0..rs.rank() {
            let t = s.image(rs.reflection_perm(i));
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    Some(seen)
}

/// Whether some `w ∈ W` maps `s1` onto `s2`.
pub fn conjugate_under_w(s1: &RootSubsystem<'_>, s2: &RootSubsystem<'_>) -> Result<bool> {
    let rs = s1.ambient();
    if s1.len() != s2.len() {
        return Ok(false);
    }
    let orb = orbit(rs, s1.members(), ORBIT_CAP).ok_or(Error::GroupTooLarge {
        order: rs.dtype().weyl_order(),
        bound: ORBIT_CAP as u128,
    })?;
    Ok(orb.contains(s2.members()))
}

/// One W-conjugacy class of candidates.
#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    #[serde(flatten)]
    pub class: SubalgebraClass,
    pub construction: Vec<Construction>,
    /// `(construction, removed node)` for every candidate in the class.
    pub realized_by: Vec<(Construction, usize)>,
    pub maximal_by_dim: bool,
    pub maximal_by_inclusion: bool,
    /// False when the class was merged on invariants alone because the
    /// orbit search exceeded its cap.
    pub conjugacy_verified: bool,
}

/// Per-type listing of candidate classes.
#[derive(Debug, Clone, Serialize)]
pub struct SubalgReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub dim_g: usize,
    pub classes: Vec<ClassEntry>,
}

/// Groups the proper candidates into W-conjugacy classes, sorted by
/// `(codim, label)`.
pub fn report(rs: &RootSystem, exec: Exec) -> Result<SubalgReport> {
    let cands = candidates(rs, exec);
    let classes: Vec<SubalgebraClass> = cands.iter().map(|c| classify(&c.sub)).collect::<Result<_>>()?;
    let orbits: Vec<Option<HashSet<RootSet>>> =
        exec.map(&cands, |c| orbit(rs, c.sub.members(), ORBIT_CAP));

    // maximal by inclusion: no conjugate is strictly inside another candidate
    let maximal: Vec<bool> = (0..cands.len())
        .map(|a| {
            !cands.iter().enumerate().any(|(b, d)| {
                b != a
                    && d.sub.len() > cands[a].sub.len()
                    && match &orbits[a] {
                        Some(orb) => orb.iter().any(|s| s.is_subset(d.sub.members())),
                        None => cands[a].sub.members().is_subset(d.sub.members()),
                    }
            })
        })
        .collect();

    let mut assigned = vec![usize::MAX; cands.len()];
    let mut entries: Vec<ClassEntry> = Vec::new();
    for a in 0..cands.len() {
        if assigned[a] != usize::MAX {
            continue;
        }
        let id = entries.len();
        let verified = orbits[a].is_some();
        for b in a..cands.len() {
            if assigned[b] == usize::MAX
                && classes[b] == classes[a]
                && orbits[a].as_ref().is_none_or(|o| o.contains(cands[b].sub.members()))
            {
                assigned[b] = id;
            }
        }
        entries.push(ClassEntry {
            class: classes[a].clone(),
            construction: Vec::new(),
            realized_by: Vec::new(),
            maximal_by_dim: false,
            maximal_by_inclusion: false,
            conjugacy_verified: verified,
        });
    }
    for (a, c) in cands.iter().enumerate() {
        let e = &mut entries[assigned[a]];
        if !e.construction.contains(&c.construction) {
            e.construction.push(c.construction);
        }
        e.realized_by.push((c.construction, c.removed));
        e.maximal_by_inclusion |= maximal[a];
    }
    let best = entries.iter().map(|e| e.class.dim).max().unwrap_or(0);
    for e in &mut entries {
        e.maximal_by_dim = e.class.dim == best;
        e.construction.sort();
    }
    entries.sort_by(|a, b| {
        (a.class.codim, &a.class.label, &a.realized_by).cmp(&(b.class.codim, &b.class.label, &b.realized_by))
    });
    Ok(SubalgReport {
        schema: "lieblocks.subalg/1",
        dtype: rs.dtype(),
        dim_g: rs.lie_dim(),
        classes: entries,
    })
}

/// Conjugacy classes of proper full-rank candidates of maximal dimension.
pub fn maximal_by_dimension(rs: &RootSystem) -> Result<Vec<SubalgebraClass>> {
    Ok(report(rs, Exec::default())?
        .classes
        .into_iter()
        .filter(|e| e.maximal_by_dim)
        .map(|e| e.class)
        .collect())
}

/// Conjugacy classes of candidates maximal by inclusion among candidates.
pub fn maximal_by_inclusion(rs: &RootSystem) -> Result<Vec<SubalgebraClass>> {
    Ok(report(rs, Exec::default())?
        .classes
        .into_iter()
        .filter(|e| e.maximal_by_inclusion)
        .map(|e| e.class)
        .collect())
}

/// Dimension of the simple algebra of the given family and rank, with the
/// degenerate ranks used by the appendix chains (`B1 = C1 = A1`, `D1` a
/// torus, `D2 = A1+A1`, `D3 = A3`).
pub fn classical_dim(family: Family, l: i64) -> i64 {
    match family {
        Family::A => (l + 1) * (l + 1) - 1,
        Family::B | Family::C => 2 * l * l + l,
        Family::D => 2 * l * l - l,
        _ => panic!("not a classical family"),
    }
}

/// One evaluated instance of an appendix inequality `lhs > rhs`.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityRow {
    pub chain: &'static str,
    pub l: i64,
    pub i: Option<i64>,
    pub lhs: i64,
    pub rhs: i64,
    /// `lhs - rhs` evaluated from the closed factored form.
    pub factored: i64,
    pub ok: bool,
    /// The D4 equality.
    pub exception: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AppendixReport {
    pub schema: &'static str,
    pub l_max: i64,
    pub rows: Vec<InequalityRow>,
    pub violations: usize,
    pub exceptions: Vec<(String, i64)>,
}

/// Evaluates every appendix chain for `l <= l_max`.
pub fn verify_appendix(l_max: i64) -> AppendixReport {
    use Family::{A, B, C, D};
    let dim = classical_dim;
    let mut rows = Vec::new();
    let mut push = |chain, l, i, lhs: i64, rhs: i64, factored: i64| {
        let exception = chain == "D2" && l == 4;
        rows.push(InequalityRow {
            chain,
            l,
            i,
            lhs,
            rhs,
            factored,
            ok: lhs > rhs && lhs - rhs == factored,
            exception,
        });
    };
    for l in 1..=l_max {
        for i in 1..l - 1 {
            let rhs = dim(A, i) + dim(A, l - i - 1) + 1;
            push("A", l, Some(i), dim(A, l - 1) + 1, rhs, 2 * i * (l - i - 1));
        }
    }
    for l in 3..=l_max {
        for i in 1..l {
            let rhs = dim(B, i) + dim(D, l - i);
            push("B1", l, Some(i), dim(D, l), rhs, 2 * i * (2 * l - 2 * i - 1));
        }
        push("B2", l, None, dim(D, l), dim(B, l - 1) + 1, 2 * (l - 1));
    }
    for l in 2..=l_max {
        let lhs = dim(C, l - 1) + 3;
        for i in 2..l - 1 {
            let rhs = dim(C, i) + dim(C, l - i);
            push("C1", l, Some(i), lhs, rhs, 4 * (i - 1) * (l - i - 1));
        }
        push("C2", l, None, lhs, l * l, (l - 2) * (l - 2) + l);
    }
    for l in 4..=l_max {
        let lhs = dim(D, l - 1) + 1;
        for i in 2..l - 1 {
            let rhs = dim(D, i) + dim(D, l - i);
            push("D1", l, Some(i), lhs, rhs, 4 * (i - 1) * (l - i - 1));
        }
        push("D2", l, None, lhs, l * l, (l - 1) * (l - 4));
    }
    let violations = rows.iter().filter(|r| !r.ok && !r.exception).count();
    let exceptions = rows
        .iter()
        .filter(|r| r.exception)
        .map(|r| (r.chain.to_string(), r.l))
        .collect();
    AppendixReport {
        schema: "lieblocks.appendix/1",
        l_max,
        rows,
        violations,
        exceptions,
    }
}
