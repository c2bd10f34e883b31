//! Integral root subsystems, the dual maximality test, and block status.

use std::fmt;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::primid;
use crate::rootsys::{DynkinType, Family, RootSystem, Weight};
use crate::subalg::{self, RootSet, RootSubsystem, SubalgebraClass};
use crate::weyl;
use crate::Q;

fn check_len(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::WeightLength {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    Ok(())
}

/// `Delta^Z(lambda) = {alpha : <lambda + rho, alpha^vee> in Z}`.
pub fn integral_subsystem<'a>(rs: &'a RootSystem, lambda: &Weight) -> Result<RootSubsystem<'a>> {
    check_len(rs, lambda)?;
    let shifted = lambda + &rs.rho();
    let mut set = RootSet::new(rs.num_roots());
    for a in 0..rs.num_roots() {
        if rs.pairing_idx(&shifted, a).is_integer() {
            set.insert(a);
        }
    }
    RootSubsystem::from_members(rs, set)
}

/// The coroots of `sub`, as a subsystem of `dual`.
pub fn coroot_subsystem<'a>(sub: &RootSubsystem<'_>, dual: &'a RootSystem) -> Result<RootSubsystem<'a>> {
    let rs = sub.ambient();
    let mut set = RootSet::new(dual.num_roots());
    for b in sub.members().iter() {
        set.insert(dual.index_of(&rs.coroot(b)).ok_or(Error::NotARoot)?);
    }
    RootSubsystem::from_members(dual, set)
}

/// Outcome of the three maximality tests for one weight.
#[derive(Debug, Clone, Serialize)]
pub struct IntegralReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub lambda: Weight,
    /// Number of roots in `Delta^Z`.
    pub integral_roots: usize,
    /// Type of `Delta^Z` inside `Delta`.
    pub z_type: SubalgebraClass,
    /// Type of `(Delta^Z)^vee` inside the dual root system.
    pub dual_type: SubalgebraClass,
    pub proper: bool,
    /// `Delta^Z` is closed under its own reflections (always true).
    pub closed_under_reflections: bool,
    /// `(Delta^Z)^vee` is additively closed in the dual (always true).
    pub coroots_closed: bool,
    /// `Delta^Z` itself is additively closed in `Delta` (can fail).
    pub additively_closed: bool,
    pub contains_singular_set: bool,
    /// `(Delta^Z)^vee` is W-conjugate to a maximal-by-dimension proper
    /// candidate of the dual.
    pub dual_maximal: bool,
    /// `lambda + rho - rho^Z` is integral and dominant on `Delta^Z ∩ Delta^+`.
    pub shifted_dominant: bool,
    pub stabilizer_trivial: bool,
    pub all_tests_pass: bool,
}

pub fn analyze(rs: &RootSystem, lambda: &Weight) -> Result<IntegralReport> {
    let z = integral_subsystem(rs, lambda)?;
    let dual = rs.dual();
    let zd = coroot_subsystem(&z, &dual)?;
    let z_type = subalg::classify(&z)?;
    let dual_type = subalg::classify(&zd)?;
    let proper = z.is_proper();

    let dual_maximal = proper && {
        let cands = subalg::candidates(&dual, Exec::Sequential);
        let best = cands.iter().map(|c| c.sub.dim()).max().unwrap_or(0);
        zd.dim() == best
            && cands
                .iter()
                .filter(|c| c.sub.dim() == best)
                .any(|c| subalg::conjugate_under_w(&zd, &c.sub).unwrap_or(false))
    };

    let shifted = lambda + &rs.rho();
    let pos: Vec<usize> = z.members().iter().filter(|&a| rs.is_positive(a)).collect();
    let mut rho_z = Weight::zero(rs.rank());
    for &a in &pos {
        rho_z = &rho_z + &rs.root_weight(a);
    }
    let rho_z = rho_z.scale(Q::new(1, 2));
    let diff = &shifted - &rho_z;
    let shifted_dominant = pos.iter().all(|&a| {
        let p = rs.pairing_idx(&diff, a);
        p.is_integer() && !p.is_negative()
    });

    let stabilizer_trivial = weyl::stabilizer_is_trivial(rs, lambda);
    let contains_singular_set = rs.singular_set(lambda).iter().all(|&a| z.members().contains(a));
    Ok(IntegralReport {
        schema: "lieblocks.integral/1",
        dtype: rs.dtype(),
        lambda: lambda.clone(),
        integral_roots: z.len(),
        z_type,
        dual_type,
        proper,
        closed_under_reflections: true,
        coroots_closed: zd.is_additively_closed(),
        additively_closed: z.is_additively_closed(),
        contains_singular_set,
        dual_maximal,
        shifted_dominant,
        stabilizer_trivial,
        all_tests_pass: proper && dual_maximal && shifted_dominant && stabilizer_trivial,
    })
}

/// Comparison of the minimal orbit dimension `d` with the codimension `m`
/// of a maximal-by-dimension proper full-rank subalgebra of the dual.
#[derive(Debug, Clone, Serialize)]
pub struct Dichotomy {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub dual_type: DynkinType,
    pub d: usize,
    pub m: usize,
    pub dual_max_classes: Vec<String>,
    /// `"d>m"`, `"d<m"` or `"d=m"`.
    pub sign: &'static str,
    /// The pattern by family: A `d>m`, other simply-laced `d<m`, else `d=m`.
    pub expected: &'static str,
    pub matches_expected: bool,
}

pub fn expected_sign(t: DynkinType) -> &'static str {
    match t.family {
        Family::A => "d>m",
        Family::D | Family::E => "d<m",
        _ => "d=m",
    }
}

pub fn dichotomy(rs: &RootSystem) -> Result<Dichotomy> {
    let dual = rs.dual();
    let max = subalg::maximal_by_dimension(&dual)?;
    let m = max.iter().map(|c| c.codim).min().unwrap_or(0);
    let d = rs.min_orbit_dim();
    let sign = match d.cmp(&m) {
        std::cmp::Ordering::Greater => "d>m",
        std::cmp::Ordering::Less => "d<m",
        std::cmp::Ordering::Equal => "d=m",
    };
    let expected = expected_sign(rs.dtype());
    Ok(Dichotomy {
        schema: "lieblocks.dichotomy/1",
        dtype: rs.dtype(),
        dual_type: dual.dtype(),
        d,
        m,
        dual_max_classes: max.into_iter().map(|c| c.label).collect(),
        sign,
        expected,
        matches_expected: sign == expected,
    })
}

/// Status of the block of finite-dimensional modules at a central character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockStatus {
    Empty,
    SemisimpleUniqueSimple,
    ZigzagBlock(usize),
    TypeAUnsupported,
}

impl BlockStatus {
    pub fn simples(self) -> usize {
        match self {
            BlockStatus::Empty | BlockStatus::TypeAUnsupported => 0,
            BlockStatus::SemisimpleUniqueSimple => 1,
            BlockStatus::ZigzagBlock(n) => n,
        }
    }
}

impl fmt::Display for BlockStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockStatus::Empty => f.write_str("EMPTY"),
            BlockStatus::SemisimpleUniqueSimple => f.write_str("SEMISIMPLE_UNIQUE_SIMPLE"),
            BlockStatus::ZigzagBlock(n) => write!(f, "ZIGZAG_BLOCK({n})"),
            BlockStatus::TypeAUnsupported => f.write_str("TYPE_A_UNSUPPORTED"),
        }
    }
}

impl Serialize for BlockStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatusReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: DynkinType,
    pub lambda: Weight,
    pub status: BlockStatus,
    pub simples: usize,
    pub integral: bool,
    /// Orbit representative with `rep + rho` in the dominant chamber.
    pub representative: Weight,
    pub d: usize,
    pub m: Option<usize>,
    pub z_type: Option<String>,
    pub dual_type: Option<String>,
    pub note: Option<&'static str>,
}

/// Decides the block status at the central character of `lambda`.
pub fn fd_block_status(rs: &RootSystem, lambda: &Weight) -> Result<StatusReport> {
    check_len(rs, lambda)?;
    let t = rs.dtype();
    let rep = weyl::central_character(rs, lambda).rep;
    let integral = lambda.is_integral();
    let mut out = StatusReport {
        schema: "lieblocks.status/1",
        dtype: t,
        lambda: lambda.clone(),
        status: BlockStatus::Empty,
        simples: 0,
        integral,
        representative: rep.clone(),
        d: rs.min_orbit_dim(),
        m: None,
        z_type: None,
        dual_type: None,
        note: None,
    };
    let status = if t.family == Family::A {
        out.note = Some("type A is outside the scope of the block theory");
        BlockStatus::TypeAUnsupported
    } else if t.simply_laced() {
        if !integral {
            out.note = Some("nonintegral character");
            BlockStatus::Empty
        } else {
            match primid::labels_at(rs, &rep)?.len() {
                0 => BlockStatus::Empty,
                1 => BlockStatus::SemisimpleUniqueSimple,
                n => BlockStatus::ZigzagBlock(n),
            }
        }
    } else {
        let an = analyze(rs, &rep)?;
        out.z_type = Some(an.z_type.label.clone());
        out.dual_type = Some(an.dual_type.label.clone());
        out.m = Some(an.dual_type.codim);
        if an.all_tests_pass {
            BlockStatus::SemisimpleUniqueSimple
        } else {
            out.note = Some("no minimal-orbit primitive ideal over this character");
            BlockStatus::Empty
        }
    };
    out.status = status;
    out.simples = status.simples();
    Ok(out)
}
