//! Enumeration of derivable codes over all cyclic codes of a given length.

use std::collections::BTreeSet;

use aqcc_core::aqec::Deriver;
use aqcc_core::cyclic::{CyclicCode, DefiningSet};
use aqcc_core::polyring::{CodeSpace, Poly};
use aqcc_core::Error;
use rayon::prelude::*;

use crate::report::ParamsReport;

/// Largest number of cyclotomic cosets a search accepts.
pub const MAX_COSETS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchRoute {
    Css,
    ExtendPoly,
    ExtendSet,
    Subsystem,
}

#[derive(Clone, Debug)]
pub enum Candidate {
    /// `C2^⊥ ⊆ C1`.
    Pair(CyclicCode, CyclicCode),
    Poly(CyclicCode, Poly),
    Set(CyclicCode, DefiningSet),
    Subsystem(CyclicCode),
}

fn coset_subsets<'a>(space: &'a CodeSpace, allowed: &'a DefiningSet) -> impl Iterator<Item = Vec<u32>> + 'a {
    let cosets: Vec<_> = space.cosets().iter().filter(|c| allowed.contains(c.representative())).collect();
    (1u64..1 << cosets.len()).map(move |mask| {
        cosets
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.members().iter().copied())
            .collect()
    })
}

/// Every candidate input for `route`, in a fixed order.
pub fn discover(space: &CodeSpace, route: SearchRoute) -> aqcc_core::Result<Vec<Candidate>> {
    let codes = CyclicCode::all(space, MAX_COSETS)?;
    let mut out = Vec::new();
    match route {
        SearchRoute::Css => {
            let duals = codes.iter().map(CyclicCode::dual).collect::<Result<Vec<_>, _>>()?;
            for c1 in &codes {
                for (c2, c2_dual) in codes.iter().zip(&duals) {
                    if c1.contains(c2_dual)? {
                        out.push(Candidate::Pair(c1.clone(), c2.clone()));
                    }
                }
            }
        }
        SearchRoute::ExtendPoly => {
            for c1 in &codes {
                let free = c1.defining_set().complement();
                for members in coset_subsets(space, &free) {
                    let mut f = Poly::one(space.base());
                    for c in space.cosets().iter().filter(|c| members.contains(&c.representative())) {
                        f = &f * &space.minimal_polynomial(c)?;
                    }
                    out.push(Candidate::Poly(c1.clone(), f));
                }
            }
        }
        SearchRoute::ExtendSet => {
            for c1 in &codes {
                let allowed = c1.dual()?.defining_set().difference(c1.defining_set())?;
                for members in coset_subsets(space, &allowed) {
                    out.push(Candidate::Set(c1.clone(), DefiningSet::new(space.n(), space.q(), members)?));
                }
            }
        }
        SearchRoute::Subsystem => out.extend(codes.into_iter().map(Candidate::Subsystem)),
    }
    Ok(out)
}

fn evaluate(candidate: &Candidate, deriver: &Deriver) -> aqcc_core::Result<Vec<ParamsReport>> {
    Ok(match candidate {
        Candidate::Pair(c1, c2) => vec![(&deriver.css(c1, c2)?).into()],
        Candidate::Poly(c1, f) => vec![(&deriver.extend_by_polynomial(c1, f)?.1).into()],
        Candidate::Set(c1, t) => vec![(&deriver.extend_by_defining_set(c1, t)?.1).into()],
        Candidate::Subsystem(c1) => {
            let (a, b) = deriver.subsystem_euclidean(c1)?;
            vec![(&a).into(), (&b).into()]
        }
    })
}

/// Derived parameters sorted by `dz - dx`, then `k` (both descending), with
/// duplicates removed.
pub fn search(
    space: &CodeSpace,
    route: SearchRoute,
    deriver: &Deriver,
    max_results: Option<usize>,
) -> aqcc_core::Result<Vec<ParamsReport>> {
    let candidates = discover(space, route)?;
    let evaluated: Vec<Vec<ParamsReport>> =
        candidates.par_iter().map(|c| evaluate(c, deriver)).collect::<Result<_, Error>>()?;
    let mut seen = BTreeSet::new();
    let mut results: Vec<ParamsReport> =
        evaluated.into_iter().flatten().filter(|p| seen.insert((p.label(), p.c1.clone(), p.c2.clone()))).collect();
    results.sort_by(|a, b| {
        let gap = |p: &ParamsReport| p.dz.value as i64 - p.dx.value as i64;
        gap(b)
            .cmp(&gap(a))
            .then(b.k.cmp(&a.k))
            .then_with(|| a.r.cmp(&b.r))
            .then_with(|| a.c1.cmp(&b.c1))
            .then_with(|| a.c2.cmp(&b.c2))
    });
    if let Some(max) = max_results {
        results.truncate(max);
    }
    Ok(results)
}
