//! Asymmetric CSS codes from nested pairs of cyclic codes, the two cyclic
//! extension constructions, subsystem codes and dimension trading.
//!
//! For `C2^⊥ ⊆ C1` the CSS code has `k = dim C1 - dim C2^⊥`, and its two
//! distances are the minimum weights of `C1 \ C2^⊥` and `C2 \ C1^⊥`; the
//! larger one is reported as `dz`, the smaller as `dx`.

use alloc::{format, string::String, vec::Vec};
use core::fmt;

use crate::cyclic::{CheckMatrix, CyclicCode, DefiningSet};
use crate::descriptor::CodeDescriptor;
use crate::polyring::Poly;
use crate::weights::{Method, WeightEngine, WeightReport, DEFAULT_BUDGET};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Css,
    ExtendPolynomial,
    ExtendDefiningSet,
    Subsystem,
    Gauge,
    Trade,
    FromSubsystem,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Css => "css",
            Route::ExtendPolynomial => "extend-poly",
            Route::ExtendDefiningSet => "extend-set",
            Route::Subsystem => "subsystem",
            Route::Gauge => "gauge",
            Route::Trade => "trade",
            Route::FromSubsystem => "from-subsystem",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub route: Route,
    pub c1: CodeDescriptor,
    pub c2: CodeDescriptor,
}

impl Provenance {
    fn new(route: Route, c1: &CyclicCode, c2: &CyclicCode) -> Provenance {
        Provenance { route, c1: c1.descriptor(), c2: c2.descriptor() }
    }

    fn with_route(&self, route: Route) -> Provenance {
        Provenance { route, ..self.clone() }
    }
}

/// Three independent computations of the logical dimension, plus the closed
/// forms `2k1 - b - n` and `2k1 + b - n` for the extension constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    /// `dim C1 - dim C2^⊥` from generator degrees.
    pub by_dual: i64,
    /// `k1 + k2 - n`.
    pub by_sum: i64,
    /// `|T(C2^⊥) \ T(C1)|`.
    pub by_sets: i64,
    pub b: Option<u32>,
    pub closed_form_minus: Option<i64>,
    pub closed_form_plus: Option<i64>,
}

impl DimensionCheck {
    fn compute(c1: &CyclicCode, c2: &CyclicCode, c2_dual: &CyclicCode) -> Result<DimensionCheck> {
        let n = c1.n() as i64;
        let deg = |c: &CyclicCode| c.generator().degree().finite().unwrap_or(0) as i64;
        let by_dual = (n - deg(c1)) - (n - deg(c2_dual));
        let by_sum = c1.k() as i64 + c2.k() as i64 - n;
        let by_sets = c2_dual.defining_set().difference(c1.defining_set())?.len() as i64;
        let check =
            DimensionCheck { by_dual, by_sum, by_sets, b: None, closed_form_minus: None, closed_form_plus: None };
        if by_dual != by_sum || by_dual != by_sets {
            return Err(Error::Internal(format!("dimension computations disagree: {check:?}")));
        }
        Ok(check)
    }

    fn with_extension(mut self, k1: u32, n: u32, b: u32) -> DimensionCheck {
        let (k1, n, bi) = (k1 as i64, n as i64, b as i64);
        self.b = Some(b);
        self.closed_form_minus = Some(2 * k1 - bi - n);
        self.closed_form_plus = Some(2 * k1 + bi - n);
        self
    }

    pub fn k(&self) -> i64 {
        self.by_dual
    }

    /// Describes every closed form that disagrees with the computed dimension.
    pub fn discrepancy(&self) -> Option<String> {
        let mut parts = Vec::new();
        if let Some(v) = self.closed_form_minus.filter(|&v| v != self.k()) {
            parts.push(format!("2k1-b-n = {v}"));
        }
        if let Some(v) = self.closed_form_plus.filter(|&v| v != self.k()) {
            parts.push(format!("2k1+b-n = {v}"));
        }
        if parts.is_empty() {
            None
        } else {
            Some(format!("{} but k = {}", parts.join(", "), self.k()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AqecParams {
    pub n: u32,
    pub q: u32,
    pub k: u32,
    pub dz: WeightReport,
    pub dx: WeightReport,
    /// `wt(C1 \ C2^⊥)` and `wt(C2 \ C1^⊥)`.
    pub sides: Option<(WeightReport, WeightReport)>,
    /// `None` when purity was not evaluated or could not be decided.
    pub pure: Option<bool>,
    pub provenance: Provenance,
    pub dimensions: Option<DimensionCheck>,
}

impl AqecParams {
    /// The symmetric code `[[n, k, dx]]` guaranteed alongside the asymmetric one.
    pub fn symmetric(&self) -> (u32, u32, WeightReport) {
        (self.n, self.k, self.dx.clone())
    }

    pub fn is_exact(&self) -> bool {
        self.dz.is_exact() && self.dx.is_exact()
    }
}

impl fmt::Display for AqecParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}/{}]]_{}", self.n, self.k, self.dz, self.dx, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemParams {
    pub n: u32,
    pub q: u32,
    pub k: u32,
    pub r: u32,
    pub dz: WeightReport,
    pub dx: WeightReport,
    pub pure: Option<bool>,
    pub provenance: Provenance,
}

impl fmt::Display for SubsystemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{},{}/{}]]_{}", self.n, self.k, self.r, self.dz, self.dx, self.q)
    }
}

/// When to spend extra enumerations on the purity check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Purity {
    /// Only for `n <= 31`.
    #[default]
    Auto,
    Always,
    Never,
}

impl Purity {
    fn wanted(self, n: u32) -> bool {
        match self {
            Purity::Auto => n <= 31,
            Purity::Always => true,
            Purity::Never => false,
        }
    }
}

fn lesser(a: WeightReport, b: WeightReport) -> WeightReport {
    match (a.is_exact(), b.is_exact()) {
        (true, true) => {
            if b.value < a.value {
                b
            } else {
                a
            }
        }
        (true, false) if a.value <= b.value => a,
        (false, true) if b.value <= a.value => b,
        _ => WeightReport::bound(a.value.min(b.value), a.budget),
    }
}

fn greater(a: WeightReport, b: WeightReport) -> WeightReport {
    if a.is_exact() && b.is_exact() {
        if b.value > a.value {
            b
        } else {
            a
        }
    } else {
        WeightReport::bound(a.value.max(b.value), a.budget)
    }
}

/// Runs derivations with a shared weight engine.
#[derive(Clone, Copy)]
pub struct Deriver<'a> {
    pub engine: WeightEngine<'a>,
    pub purity: Purity,
}

impl Deriver<'static> {
    pub fn serial(budget: u64) -> Deriver<'static> {
        Deriver { engine: WeightEngine::serial(budget), purity: Purity::Auto }
    }
}

impl Default for Deriver<'static> {
    fn default() -> Self {
        Deriver::serial(DEFAULT_BUDGET)
    }
}

impl<'a> Deriver<'a> {
    pub fn new(engine: WeightEngine<'a>, purity: Purity) -> Deriver<'a> {
        Deriver { engine, purity }
    }

    /// Exact minimum weight of `code` compared with `side`, if affordable.
    fn pure_side(&self, code: &CyclicCode, side: &WeightReport) -> Option<bool> {
        if !side.is_exact() {
            return None;
        }
        if side.vacuous {
            return Some(true);
        }
        match self.engine.min_weight(code) {
            Ok(d) => Some(d.value == side.value),
            Err(_) => None,
        }
    }

    fn pair_purity(&self, checks: [(&CyclicCode, &WeightReport); 2]) -> Option<bool> {
        if !self.purity.wanted(checks[0].0.n()) {
            return None;
        }
        let mut all = true;
        for (code, side) in checks {
            all &= self.pure_side(code, side)?;
        }
        Some(all)
    }

    /// CSS code from `C2^⊥ ⊆ C1`.
    pub fn css(&self, c1: &CyclicCode, c2: &CyclicCode) -> Result<AqecParams> {
        self.css_with_route(c1, c2, Route::Css)
    }

    fn css_with_route(&self, c1: &CyclicCode, c2: &CyclicCode, route: Route) -> Result<AqecParams> {
        if c1.space() != c2.space() {
            return Err(Error::SpaceMismatch);
        }
        let c2_dual = c2.dual()?;
        if !c1.contains(&c2_dual)? {
            return Err(Error::NotNested(format!("dual of {c2} is not contained in {c1}")));
        }
        let c1_dual = c1.dual()?;
        let dimensions = DimensionCheck::compute(c1, c2, &c2_dual)?;
        let w1 = self.engine.min_weight_difference_or_bound(c1, &c2_dual)?;
        let w2 = self.engine.min_weight_difference_or_bound(c2, &c1_dual)?;
        let pure = self.pair_purity([(c1, &w1), (c2, &w2)]);
        Ok(AqecParams {
            n: c1.n(),
            q: c1.q(),
            k: dimensions.k() as u32,
            dz: greater(w1.clone(), w2.clone()),
            dx: lesser(w1.clone(), w2.clone()),
            sides: Some((w1, w2)),
            pure,
            provenance: Provenance::new(route, c1, c2),
            dimensions: Some(dimensions),
        })
    }

    /// `C2^⊥` generated by `f g1` for a monic divisor `f` of `h1`.
    pub fn extend_by_polynomial(&self, c1: &CyclicCode, f: &Poly) -> Result<(CyclicCode, AqecParams)> {
        let space = c1.space();
        if f.field() != space.base() {
            return Err(Error::FieldMismatch);
        }
        let b = match f.degree().finite() {
            Some(d) if d >= 1 && f.is_monic() => d as u32,
            _ => return Err(Error::InvalidParameters(format!("f = {f} must be monic of degree at least 1"))),
        };
        let h1 = c1.check_polynomial();
        if !f.divides(&h1)? {
            return Err(Error::NotADivisor { poly: format!("{f}"), check: format!("{h1}") });
        }
        let mut roots = Vec::new();
        for (i, coset) in space.cosets().iter().enumerate() {
            if space.minimal_by_index(i).divides(f)? {
                roots.extend_from_slice(coset.members());
            }
        }
        let set = c1.defining_set().union(&DefiningSet::new(c1.n(), c1.q(), roots)?)?;
        let c2_dual = CyclicCode::from_set(space, set)?;
        let product = f.checked_mul(c1.generator())?;
        if &product != c2_dual.generator() {
            return Err(Error::Internal(format!(
                "f g1 = {product} but the extended code has generator {}",
                c2_dual.generator()
            )));
        }
        let c2 = c2_dual.dual()?;
        let mut params = self.css_with_route(c1, &c2, Route::ExtendPolynomial)?;
        params.dimensions = params.dimensions.map(|d| d.with_extension(c1.k(), c1.n(), b));
        if params.k != b {
            return Err(Error::Internal(format!("extension by a degree-{b} factor gave k = {}", params.k)));
        }
        Ok((c2, params))
    }

    /// `T(C2) = T(C1^⊥) \ (T ∪ T^{-1})` for `T ⊆ T(C1^⊥) \ T(C1)`.
    pub fn extend_by_defining_set(&self, c1: &CyclicCode, t: &DefiningSet) -> Result<(CyclicCode, AqecParams)> {
        let space = c1.space();
        let c1_dual = c1.dual()?;
        let allowed = c1_dual.defining_set().difference(c1.defining_set())?;
        if !t.is_subset(&allowed)? {
            return Err(Error::ExtensionSetNotAllowed { set: format!("{t}"), allowed: format!("{allowed}") });
        }
        let spread = t.union(&t.negated())?;
        let c2 = CyclicCode::from_set(space, c1_dual.defining_set().difference(&spread)?)?;
        let c2_dual = c2.dual()?;
        let expected = c1.defining_set().union(&spread)?;
        if c2_dual.defining_set() != &expected {
            return Err(Error::Internal(format!(
                "T(C2^⊥) = {} but T(C1) ∪ T ∪ T^-1 = {expected}",
                c2_dual.defining_set()
            )));
        }
        if !c1.contains(&c2_dual)? {
            return Err(Error::Internal("extended pair is not nested".into()));
        }
        let b = spread.len() as u32;
        let mut params = self.css_with_route(c1, &c2, Route::ExtendDefiningSet)?;
        params.dimensions = params.dimensions.map(|d| d.with_extension(c1.k(), c1.n(), b));
        if params.k != b {
            return Err(Error::Internal(format!("extension by |T ∪ T^-1| = {b} gave k = {}", params.k)));
        }
        Ok((c2, params))
    }

    /// Subsystem codes from `C1` and `C2 = C1 ∩ C1^⊥`, in both role assignments:
    /// `[[n, n-k1-k2, k1-k2]]` and `[[n, k1-k2, n-k1-k2]]`.
    pub fn subsystem_euclidean(&self, c1: &CyclicCode) -> Result<(SubsystemParams, SubsystemParams)> {
        let n = c1.n();
        let c1_dual = c1.dual()?;
        let c2 = c1.intersect(&c1_dual)?;
        let (k1, k2) = (c1.k(), c2.k());
        if k1 + k2 > n {
            return Err(Error::DimensionOverflow { sum: k1 + k2, n });
        }
        let c2_dual = c2.dual()?;
        let w1 = self.engine.min_weight_difference_or_bound(&c2_dual, c1)?;
        let w2 = self.engine.min_weight_difference_or_bound(&c1_dual, &c2)?;
        let pure = self.pair_purity([(&c2_dual, &w1), (&c1_dual, &w2)]);
        let base = SubsystemParams {
            n,
            q: c1.q(),
            k: n - k1 - k2,
            r: k1 - k2,
            dz: greater(w1.clone(), w2.clone()),
            dx: lesser(w1, w2),
            pure,
            provenance: Provenance::new(Route::Subsystem, c1, &c2),
        };
        let swapped = SubsystemParams { k: base.r, r: base.k, ..base.clone() };
        Ok((base, swapped))
    }
}

/// Serial CSS derivation with automatic purity.
pub fn css_aqec(c1: &CyclicCode, c2: &CyclicCode, budget: u64) -> Result<AqecParams> {
    Deriver::serial(budget).css(c1, c2)
}

pub fn extend_by_polynomial(c1: &CyclicCode, f: &Poly, budget: u64) -> Result<(CyclicCode, AqecParams)> {
    Deriver::serial(budget).extend_by_polynomial(c1, f)
}

pub fn extend_by_defining_set(c1: &CyclicCode, t: &DefiningSet, budget: u64) -> Result<(CyclicCode, AqecParams)> {
    Deriver::serial(budget).extend_by_defining_set(c1, t)
}

pub fn subsystem_euclidean(c1: &CyclicCode, budget: u64) -> Result<(SubsystemParams, SubsystemParams)> {
    Deriver::serial(budget).subsystem_euclidean(c1)
}

/// Check matrices of a CSS pair: `hx` from `C1`, `hz` from `C2`.
#[derive(Clone, Debug)]
pub struct StabilizerMatrix {
    pub hx: CheckMatrix,
    pub hz: CheckMatrix,
}

pub fn build_stabilizer_matrix(c1: &CyclicCode, c2: &CyclicCode) -> Result<StabilizerMatrix> {
    if !c1.contains(&c2.dual()?)? {
        return Err(Error::NotNested(format!("dual of {c2} is not contained in {c1}")));
    }
    let m = StabilizerMatrix { hx: c1.parity_check_matrix(), hz: c2.parity_check_matrix() };
    if !check_css_commutativity(&m.hx, &m.hz)? {
        return Err(Error::Internal("nested pair produced non-commuting checks".into()));
    }
    Ok(m)
}

/// `H1 H2^T = 0`.
pub fn check_css_commutativity(h1: &CheckMatrix, h2: &CheckMatrix) -> Result<bool> {
    Ok(h1.mul_transpose(h2)?.iter().flatten().all(|&x| x == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capability {
    pub tx: u32,
    pub tz: u32,
    /// False when a distance is only a lower bound; the counts are then lower
    /// bounds as well.
    pub exact: bool,
}

pub fn correction_capability(a: &AqecParams) -> Capability {
    let t = |d: u32| d.saturating_sub(1) / 2;
    Capability { tx: t(a.dx.value), tz: t(a.dz.value), exact: a.is_exact() }
}

/// Moves `r` logical qudits into the gauge.
pub fn aqec_to_subsystem(a: &AqecParams, r: u32) -> Result<SubsystemParams> {
    if r > a.k {
        return Err(Error::GaugeOutOfRange { r, k: a.k });
    }
    Ok(SubsystemParams {
        n: a.n,
        q: a.q,
        k: a.k - r,
        r,
        dz: a.dz.clone(),
        dx: a.dx.clone(),
        pure: a.pure,
        provenance: a.provenance.with_route(Route::Gauge),
    })
}

fn as_bound(w: &WeightReport) -> WeightReport {
    WeightReport { method: Method::BoundOnly, ..w.clone() }
}

/// `[[n, k, r]] -> [[n, k-1, r+1]]`; distances become lower bounds and
/// purity is no longer known.
pub fn trade_dimension(s: &SubsystemParams) -> Result<SubsystemParams> {
    if s.k <= 1 {
        return Err(Error::CannotTrade { k: s.k });
    }
    Ok(SubsystemParams {
        k: s.k - 1,
        r: s.r + 1,
        dz: as_bound(&s.dz),
        dx: as_bound(&s.dx),
        pure: None,
        provenance: s.provenance.with_route(Route::Trade),
        ..s.clone()
    })
}

/// A pure `[[n, k, r]]` subsystem code gives an `[[n, k+r]]` stabilizer code.
pub fn subsystem_to_stabilizer(s: &SubsystemParams) -> Result<AqecParams> {
    if s.pure != Some(true) {
        return Err(Error::Impure);
    }
    Ok(AqecParams {
        n: s.n,
        q: s.q,
        k: s.k + s.r,
        dz: s.dz.clone(),
        dx: s.dx.clone(),
        sides: None,
        pure: Some(true),
        provenance: s.provenance.with_route(Route::FromSubsystem),
        dimensions: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::MatrixRole;
    use crate::galois::{Field, ModulusTable};
    use crate::polyring::CodeSpace;
    use alloc::{string::ToString, vec};

    fn space(n: u32) -> CodeSpace {
        CodeSpace::new(n, 2).unwrap()
    }

    fn bch(n: u32, delta: u32) -> CyclicCode {
        CyclicCode::bch(&space(n), delta, 1).unwrap()
    }

    fn text(p: &impl fmt::Display) -> String {
        p.to_string()
    }

    #[test]
    fn css_examples() {
        let p = css_aqec(&bch(15, 3), &bch(15, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!(text(&p), "[[15,3,5/3]]_2");
        assert!(p.is_exact());
        assert_eq!(p.pure, Some(true));
        assert_eq!(p.symmetric().2.value, 3);
        let p = css_aqec(&bch(31, 5), &bch(31, 7), DEFAULT_BUDGET).unwrap();
        assert_eq!(text(&p), "[[31,6,7/5]]_2");
        let ham = bch(7, 3);
        let p = css_aqec(&ham, &ham, DEFAULT_BUDGET).unwrap();
        assert_eq!(text(&p), "[[7,1,3/3]]_2");
        assert!(matches!(css_aqec(&bch(15, 5), &bch(15, 5), DEFAULT_BUDGET), Err(Error::NotNested(_))));
        assert!(matches!(css_aqec(&bch(15, 3), &bch(7, 3), DEFAULT_BUDGET), Err(Error::SpaceMismatch)));
    }

    #[test]
    fn zero_dimensional_pair() {
        let c2 = bch(15, 5);
        let c1 = c2.dual().unwrap();
        let p = css_aqec(&c1, &c2, DEFAULT_BUDGET).unwrap();
        assert_eq!(text(&p), "[[15,0,5/4]]_2");
        assert!(p.dx.vacuous && p.dz.vacuous);
    }

    #[test]
    fn bound_only_when_over_budget() {
        let p = css_aqec(&bch(15, 3), &bch(15, 5), 16).unwrap();
        assert_eq!(p.k, 3);
        assert!(!p.is_exact());
        assert_eq!(text(&p), "[[15,3,≥5/≥3]]_2");
        assert_eq!(p.pure, None);
        assert!(!correction_capability(&p).exact);
    }

    #[test]
    fn stabilizer_matrices() {
        let m = build_stabilizer_matrix(&bch(15, 3), &bch(15, 5)).unwrap();
        assert_eq!((m.hx.row_count(), m.hz.row_count(), m.hx.cols()), (4, 8, 15));
        let ham = bch(7, 3);
        let m = build_stabilizer_matrix(&ham, &ham).unwrap();
        assert_eq!((m.hx.row_count(), m.hz.row_count()), (3, 3));
        let full = CyclicCode::full(&space(15));
        let m = build_stabilizer_matrix(&full, &bch(15, 5)).unwrap();
        assert!(m.hx.is_empty());
        assert!(matches!(build_stabilizer_matrix(&bch(15, 5), &bch(15, 5)), Err(Error::NotNested(_))));
    }

    #[test]
    fn commutativity() {
        let f = Field::new(2, 1).unwrap();
        let h = CheckMatrix::new(&f, 3, vec![vec![1, 1, 0], vec![0, 1, 1]], MatrixRole::Parity).unwrap();
        assert!(!check_css_commutativity(&h, &h).unwrap());
        let empty = CheckMatrix::new(&f, 3, vec![], MatrixRole::Parity).unwrap();
        assert!(check_css_commutativity(&h, &empty).unwrap());
        let wide = CheckMatrix::new(&f, 4, vec![vec![1, 0, 0, 1]], MatrixRole::Parity).unwrap();
        assert!(check_css_commutativity(&h, &wide).is_err());
    }

    #[test]
    fn extension_by_polynomial() {
        let s = space(15);
        let ham = CyclicCode::hamming(4, 2, &ModulusTable::builtin()).unwrap();
        let coset = crate::polyring::CyclotomicCoset::of(15, 2, 3).unwrap();
        let f = s.minimal_polynomial(&coset).unwrap();
        let (c2, p) = extend_by_polynomial(&ham, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(c2.k(), 8);
        assert_eq!(c2.dual().unwrap(), bch(15, 5));
        assert_eq!(p.k, 4);
        let d = p.dimensions.as_ref().unwrap();
        assert_eq!((d.closed_form_minus, d.closed_form_plus), (Some(3), Some(11)));
        assert!(d.discrepancy().is_some());

        let s7 = space(7);
        let x_plus_1 = Poly::parse(s7.base(), "x + 1").unwrap();
        let (c2, p) = extend_by_polynomial(&bch(7, 3), &x_plus_1, DEFAULT_BUDGET).unwrap();
        assert_eq!((c2.dual().unwrap().k(), p.k), (3, 1));

        let g_factor = Poly::parse(s.base(), "x^4 + x + 1").unwrap();
        assert!(matches!(extend_by_polynomial(&ham, &g_factor, DEFAULT_BUDGET), Err(Error::NotADivisor { .. })));
        assert!(extend_by_polynomial(&ham, &Poly::one(s.base()), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn extension_by_defining_set() {
        let s = space(15);
        let ham = CyclicCode::from_defining_set(&s, [1, 2, 4, 8]).unwrap();
        let t = DefiningSet::new(15, 2, [3, 6, 9, 12]).unwrap();
        let (c2, p) = extend_by_defining_set(&ham, &t, DEFAULT_BUDGET).unwrap();
        assert_eq!(c2.defining_set().to_vec(), vec![0, 1, 2, 4, 5, 8, 10]);
        assert_eq!(c2.k(), 8);
        assert_eq!(c2.dual().unwrap(), bch(15, 5));
        assert_eq!(p.k, 4);

        let (c2, p) = extend_by_defining_set(&ham, &DefiningSet::empty(15, 2), DEFAULT_BUDGET).unwrap();
        assert_eq!((c2, p.k), (ham.dual().unwrap(), 0));

        let c1 = CyclicCode::from_defining_set(&space(31), [1, 2, 4, 8, 16]).unwrap();
        // -C1 = C15 lies outside T(C1^⊥); C3 and its negation C7 are admissible
        let c15 = DefiningSet::closure(31, 2, [15]).unwrap();
        assert!(matches!(extend_by_defining_set(&c1, &c15, 1 << 20), Err(Error::ExtensionSetNotAllowed { .. })));
        let c3 = DefiningSet::closure(31, 2, [3]).unwrap();
        let (_, p) = extend_by_defining_set(&c1, &c3, 1 << 20).unwrap();
        assert_eq!(p.k, 10);
    }

    #[test]
    fn capability() {
        let c = correction_capability(&css_aqec(&bch(15, 3), &bch(15, 5), DEFAULT_BUDGET).unwrap());
        assert_eq!((c.tx, c.tz, c.exact), (1, 2, true));
        let mut p = css_aqec(&bch(31, 5), &bch(31, 7), DEFAULT_BUDGET).unwrap();
        assert_eq!((correction_capability(&p).tx, correction_capability(&p).tz), (2, 3));
        p.dz.value = 15;
        p.dx.value = 3;
        assert_eq!((correction_capability(&p).tx, correction_capability(&p).tz), (1, 7));
    }

    #[test]
    fn gauge_and_trading() {
        let p = css_aqec(&bch(15, 3), &bch(15, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!(text(&aqec_to_subsystem(&p, 0).unwrap()), "[[15,3,0,5/3]]_2");
        assert_eq!(text(&aqec_to_subsystem(&p, 2).unwrap()), "[[15,1,2,5/3]]_2");
        assert_eq!(aqec_to_subsystem(&p, 4).unwrap_err(), Error::GaugeOutOfRange { r: 4, k: 3 });

        let s = aqec_to_subsystem(&p, 0).unwrap();
        let mut cur = s.clone();
        while cur.k > 1 {
            let next = trade_dimension(&cur).unwrap();
            assert_eq!(next.k + next.r, cur.k + cur.r);
            cur = next;
        }
        assert_eq!(text(&cur), "[[15,1,2,≥5/≥3]]_2");
        assert_eq!(trade_dimension(&cur).unwrap_err(), Error::CannotTrade { k: 1 });
        assert_eq!(subsystem_to_stabilizer(&cur).unwrap_err(), Error::Impure);
        let back = subsystem_to_stabilizer(&s).unwrap();
        assert_eq!((back.k, back.dz.value, back.dx.value), (3, 5, 3));
    }

    #[test]
    fn euclidean_subsystem() {
        let (a, b) = subsystem_euclidean(&bch(15, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.r, b.k, b.r), (4, 3, 3, 4));
        assert_eq!((a.dz.value, a.dx.value), (4, 3));
        assert_eq!(a.pure, Some(true));
        let stab = subsystem_to_stabilizer(&b).unwrap();
        assert_eq!(text(&stab), "[[15,7,4/3]]_2");

        let (a, b) = subsystem_euclidean(&bch(7, 3), DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.r, b.k, b.r), (0, 1, 1, 0));

        // a negation-closed defining set gives C1 ∩ C1^⊥ = {0}
        let c1 = CyclicCode::from_defining_set(&space(15), [0, 3, 6, 9, 12, 5, 10]).unwrap();
        let (a, _) = subsystem_euclidean(&c1, DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.r), (7, 8));
        let c2 = c1.intersect(&c1.dual().unwrap()).unwrap();
        assert_eq!(a.k + c1.k() + c2.k(), 15);
        assert_eq!(a.r, c1.k() - c2.k());
    }
}
