// Cross-checks behind `--oracle`. Each recomputes the answer by a route
// independent of the ladder engine and reports any disagreement.

use farey_core::oracle::{bruteforce_geodesics, stabilized_distance, stabilized_with, OracleBudget};
use farey_core::{
    convergents, Caps, ContinuedFraction, ExtendedRational, GeodesicSet, Ladder,
    SplittingDistance, SplittingReport, TwoBridgeLink,
};

use crate::Failure;

type Checked = std::result::Result<(), Failure>;

fn mismatch(msg: String) -> Failure {
    Failure::Mismatch(msg)
}

/// The last convergent of `cf` must be `x`.
pub(crate) fn cf(x: &ExtendedRational, cf: &ContinuedFraction) -> Checked {
    let last = convergents(cf).pop().unwrap_or_else(ExtendedRational::zero);
    if &last != x {
        return Err(mismatch(format!("{cf} converges to {last}, not {x}")));
    }
    Ok(())
}

pub(crate) fn same_distance(x: &ExtendedRational, y: &ExtendedRational, d: u64) -> Checked {
    let o = stabilized_distance(x, y)?;
    if o != d {
        return Err(mismatch(format!("distance({x}, {y}) = {d}, oracle says {o}")));
    }
    Ok(())
}

pub(crate) fn geodesics(set: &GeodesicSet, cap: usize) -> Checked {
    let st = stabilized_with(&set.source, &set.target, &OracleBudget::default())?;
    let brute = bruteforce_geodesics(&set.source, &set.target, st.bound, cap)?;
    if &brute != set {
        return Err(mismatch(format!(
            "{} geodesics of length {} from {} to {}, oracle finds {} of length {}",
            set.paths.len(),
            set.length,
            set.source,
            set.target,
            brute.paths.len(),
            brute.length
        )));
    }
    Ok(())
}

pub(crate) fn ladder(l: &Ladder, caps: &Caps) -> Checked {
    let v = l.vertices();
    for c in l.corners() {
        let [a, b, d] = c.map(|i| &v[i]);
        if !(a.is_adjacent(b) && b.is_adjacent(d) && a.is_adjacent(d)) {
            return Err(mismatch(format!("{a} {b} {d} is not a Farey triangle")));
        }
    }
    let d = farey_core::distance(l.source(), l.target(), caps)?;
    same_distance(l.source(), l.target(), d)?;
    if let Ok(spine) = l.spine() {
        if !spine.is_simple_farey_path() || (spine.len() as u64) < d {
            return Err(mismatch(format!("spine of length {} is not a path of length >= {d}", spine.len())));
        }
    }
    Ok(())
}

pub(crate) fn report_02(link: &TwoBridgeLink, r: &SplittingReport, cap: usize) -> Checked {
    if !r.is_consistent() {
        return Err(mismatch("report violates strongly keen => keen".into()));
    }
    let inf = ExtendedRational::infinity();
    let slope = link.slope();
    let st = stabilized_with(&inf, &slope, &OracleBudget::default())?;
    if r.distance != SplittingDistance::Exact(st.distance) {
        return Err(mismatch(format!("{link}: distance {:?}, oracle says {}", r.distance, st.distance)));
    }
    let brute = bruteforce_geodesics(&inf, &slope, st.bound, cap)?;
    if brute.is_unique() != r.strongly_keen {
        return Err(mismatch(format!(
            "{link}: strongly_keen = {}, oracle finds {} geodesics",
            r.strongly_keen,
            brute.paths.len()
        )));
    }
    if let Some(paths) = &r.geodesics {
        if paths != &brute.paths {
            return Err(mismatch(format!("{link}: geodesic lists differ from the oracle's")));
        }
    }
    Ok(())
}

pub(crate) fn report_03(r: &SplittingReport) -> Checked {
    let trivial = r.link.summands().iter().any(TwoBridgeLink::is_trivial_link);
    if (r.distance == SplittingDistance::Exact(0)) != trivial || !r.is_consistent() {
        return Err(mismatch(format!("inconsistent (0,3) report for {}", r.link)));
    }
    Ok(())
}
